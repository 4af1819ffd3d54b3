//! Standard Young tableaux, RSK row insertion, oscillating tableaux, and the
//! bijection `rho` between oscillating tableaux of length `2n` and matchings
//! on `[2n]`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matching::Matching;

/// Integer partition as weakly decreasing positive row lengths.
pub type Shape = Vec<usize>;

/// Rows are 0-indexed; each row strictly increases, and so does each column.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for (r, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::InvalidTableau(format!("row {r} is empty")));
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTableau(format!("row {r} is not increasing")));
            }
            if r > 0 {
                let above = &rows[r - 1];
                if row.len() > above.len() || row.iter().zip(above).any(|(b, a)| b <= a) {
                    return Err(Error::InvalidTableau(format!("row {r} breaks a column")));
                }
            }
            for &v in row {
                if !seen.insert(v) {
                    return Err(Error::InvalidTableau(format!("entry {v} repeated")));
                }
            }
        }
        Ok(StandardTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Shape {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.rows.iter().any(|row| row.contains(&v))
    }

    /// Row-inserts `v` by bumping; returns the new tableau and the created
    /// cell `(row, col)`.
    pub fn row_insert(&self, v: usize) -> (StandardTableau, (usize, usize)) {
        debug_assert!(!self.contains(v));
        let mut rows = self.rows.clone();
        let mut carry = v;
        for (r, row) in rows.iter_mut().enumerate() {
            match row.iter().position(|&x| x > carry) {
                Some(c) => carry = std::mem::replace(&mut row[c], carry),
                None => {
                    row.push(carry);
                    let cell = (r, row.len() - 1);
                    return (StandardTableau { rows }, cell);
                }
            }
        }
        rows.push(vec![carry]);
        let r = rows.len() - 1;
        (StandardTableau { rows }, (r, 0))
    }

    /// Undoes a row insertion whose created cell was the corner `(row, col)`;
    /// returns the smaller tableau and the ejected entry.
    pub fn reverse_bump(&self, row: usize, col: usize) -> Result<(StandardTableau, usize)> {
        let is_corner = self.rows.get(row).is_some_and(|r| r.len() == col + 1)
            && self.rows.get(row + 1).is_none_or(|below| below.len() <= col);
        if !is_corner {
            return Err(Error::NotACorner { row, col });
        }
        let mut rows = self.rows.clone();
        let mut carry = rows[row].pop().expect("corner exists");
        if rows[row].is_empty() {
            rows.pop();
        }
        for r in (0..row).rev() {
            let c = rows[r].iter().rposition(|&x| x < carry).expect("column strictness");
            carry = std::mem::replace(&mut rows[r][c], carry);
        }
        Ok((StandardTableau { rows }, carry))
    }

    /// Removes the largest entry, which always sits in a corner.
    fn remove_max(&self, v: usize) -> Result<StandardTableau> {
        let r = self
            .rows
            .iter()
            .position(|row| row.last() == Some(&v))
            .ok_or_else(|| Error::InvalidTableau(format!("entry {v} is not at the end of a row")))?;
        let mut rows = self.rows.clone();
        rows[r].pop();
        if rows[r].is_empty() {
            rows.remove(r);
        }
        StandardTableau::new(rows)
    }
}

/// Sequence of shapes `∅ = λ^0, ..., λ^L = ∅`, each obtained from the previous
/// by adding or removing one square.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OscillatingTableau {
    shapes: Vec<Shape>,
}

/// Row index where two shapes differ by one square, and whether it grew.
fn single_square_change(from: &[usize], to: &[usize]) -> Option<(usize, bool)> {
    let len = from.len().max(to.len());
    let mut change = None;
    for r in 0..len {
        let a = from.get(r).copied().unwrap_or(0);
        let b = to.get(r).copied().unwrap_or(0);
        if a == b {
            continue;
        }
        if change.is_some() || a.abs_diff(b) != 1 {
            return None;
        }
        change = Some((r, b > a));
    }
    change
}

fn is_partition(shape: &[usize]) -> bool {
    shape.iter().all(|&k| k > 0) && shape.windows(2).all(|w| w[0] >= w[1])
}

impl OscillatingTableau {
    pub fn new(shapes: Vec<Shape>) -> Result<Self> {
        if shapes.first().is_none_or(|s| !s.is_empty()) || shapes.last().is_none_or(|s| !s.is_empty()) {
            return Err(Error::InvalidTableau("must start and end with the empty shape".into()));
        }
        for (idx, s) in shapes.iter().enumerate() {
            if !is_partition(s) {
                return Err(Error::InvalidTableau(format!("shape {idx} is not a partition: {s:?}")));
            }
        }
        for (idx, w) in shapes.windows(2).enumerate() {
            if single_square_change(&w[0], &w[1]).is_none() {
                return Err(Error::InvalidTableau(format!(
                    "shapes {idx} and {} differ by more than one square",
                    idx + 1
                )));
            }
        }
        Ok(OscillatingTableau { shapes })
    }

    pub fn shapes(&self) -> &[Shape] {
        &self.shapes
    }

    /// Number of steps `L`.
    pub fn length(&self) -> usize {
        self.shapes.len() - 1
    }

    /// Every shape is `(k)` or `(k, 1)`, and no `(k, 1)` is immediately
    /// followed by `(k + 1, 1)`.
    pub fn is_restricted(&self) -> bool {
        let allowed = |s: &Shape| s.len() <= 1 || (s.len() == 2 && s[1] == 1);
        self.shapes.iter().all(allowed)
            && self.shapes.windows(2).all(|w| !(w[0].len() == 2 && w[1].len() == 2 && w[1][0] == w[0][0] + 1))
    }
}

impl FromStr for OscillatingTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let shapes = s
            .trim()
            .split(';')
            .enumerate()
            .map(|(idx, part)| {
                let inner = part
                    .trim()
                    .strip_prefix('[')
                    .and_then(|p| p.strip_suffix(']'))
                    .ok_or_else(|| Error::Parse { position: idx + 1, reason: format!("'{part}' is not [..]") })?;
                if inner.trim().is_empty() {
                    return Ok(Vec::new());
                }
                inner
                    .split(',')
                    .map(|t| {
                        t.trim().parse::<usize>().map_err(|_| Error::Parse {
                            position: idx + 1,
                            reason: format!("'{t}' is not a row length"),
                        })
                    })
                    .collect()
            })
            .collect::<Result<Vec<Shape>>>()?;
        OscillatingTableau::new(shapes)
    }
}

impl fmt::Display for OscillatingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, shape) in self.shapes.iter().enumerate() {
            if idx > 0 {
                f.write_str(";")?;
            }
            let rows: Vec<String> = shape.iter().map(usize::to_string).collect();
            write!(f, "[{}]", rows.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for OscillatingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OscillatingTableau({self})")
    }
}

/// Forward map: entry `i` is added on growth; on shrink, the removed corner
/// is reverse-bumped and the ejected `j` gives the edge `(j, i)`.
pub fn rho(t: &OscillatingTableau) -> Result<Matching> {
    let mut syt = StandardTableau::default();
    let mut edges = Vec::with_capacity(t.length() / 2);
    for (idx, w) in t.shapes.windows(2).enumerate() {
        let i = idx + 1;
        let (row, grew) = single_square_change(&w[0], &w[1]).expect("validated");
        if grew {
            let mut rows = syt.rows.clone();
            if row == rows.len() {
                rows.push(Vec::new());
            }
            rows[row].push(i);
            syt = StandardTableau { rows };
        } else {
            let col = w[1].get(row).copied().unwrap_or(0);
            let (smaller, j) = syt.reverse_bump(row, col)?;
            edges.push((j, i));
            syt = smaller;
        }
    }
    Matching::from_edges(&edges)
}

/// Inverse map: scanning `i = 2n, ..., 1`, row-insert the partner of each
/// end point and delete each initial point, recording shapes.
pub fn rho_inv(m: &Matching) -> OscillatingTableau {
    let size = m.size();
    let mut shapes = vec![Vec::new(); size + 1];
    let mut syt = StandardTableau::default();
    for i in (1..=size).rev() {
        let j = m.partner(i);
        syt = if j < i {
            syt.row_insert(j).0
        } else {
            syt.remove_max(i).expect("an initial point is the largest entry present")
        };
        shapes[i - 1] = syt.shape();
    }
    OscillatingTableau { shapes }
}

/// All oscillating tableaux of length `len`.
pub fn all_oscillating_tableaux(len: usize) -> Vec<OscillatingTableau> {
    fn rec(len: usize, prefix: &mut Vec<Shape>, out: &mut Vec<OscillatingTableau>) {
        let current = prefix.last().expect("nonempty").clone();
        let size: usize = current.iter().sum();
        let left = len + 1 - prefix.len();
        if left == 0 {
            if current.is_empty() {
                out.push(OscillatingTableau { shapes: prefix.clone() });
            }
            return;
        }
        // remove a square
        for r in 0..current.len() {
            if current.get(r + 1).is_none_or(|&below| below < current[r]) {
                let mut next = current.clone();
                next[r] -= 1;
                if next[r] == 0 {
                    next.pop();
                }
                prefix.push(next);
                rec(len, prefix, out);
                prefix.pop();
            }
        }
        // add a square, only if we can still get back to empty
        if size < left {
            for r in 0..=current.len() {
                if r == 0 || current[r - 1] > current.get(r).copied().unwrap_or(0) {
                    let mut next = current.clone();
                    if r == next.len() {
                        next.push(1);
                    } else {
                        next[r] += 1;
                    }
                    prefix.push(next);
                    rec(len, prefix, out);
                    prefix.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(len, &mut vec![Vec::new()], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn syt(rows: Vec<Vec<usize>>) -> StandardTableau {
        StandardTableau::new(rows).unwrap()
    }

    fn example() -> OscillatingTableau {
        "[];[1];[2];[2,1];[1,1];[1];[]".parse().unwrap()
    }

    #[test]
    fn insertion_bumps() {
        let (t, cell) = syt(vec![vec![3]]).row_insert(1);
        assert_eq!(t, syt(vec![vec![1], vec![3]]));
        assert_eq!(cell, (1, 0));
        let (t, cell) = StandardTableau::default().row_insert(7);
        assert_eq!(t, syt(vec![vec![7]]));
        assert_eq!(cell, (0, 0));
    }

    #[test]
    fn reverse_bump_examples() {
        let t = syt(vec![vec![1, 2], vec![3]]);
        assert_eq!(t.reverse_bump(0, 1).unwrap(), (syt(vec![vec![1], vec![3]]), 2));
        assert_eq!(t.reverse_bump(1, 0).unwrap(), (syt(vec![vec![1, 3]]), 2));
        assert_eq!(t.reverse_bump(0, 0), Err(Error::NotACorner { row: 0, col: 0 }));
    }

    #[test]
    fn rho_worked_example() {
        let mt = rho(&example()).unwrap();
        assert_eq!(mt, Matching::from_edges(&[(1, 5), (2, 4), (3, 6)]).unwrap());
        assert_eq!(rho_inv(&mt), example());
        assert!(example().is_restricted());
    }

    #[test]
    fn rho_small_cases() {
        let t: OscillatingTableau = "[];[1];[]".parse().unwrap();
        assert_eq!(rho(&t).unwrap().to_string(), "11");
        assert!(t.is_restricted());
        let big = rho_inv(&"123123".parse().unwrap());
        assert!(big.shapes().contains(&vec![1, 1, 1]));
        assert!(!big.is_restricted());
    }

    #[test]
    fn tableau_validation() {
        assert!("[];[2];[]".parse::<OscillatingTableau>().is_err());
        assert!("[1];[]".parse::<OscillatingTableau>().is_err());
        assert!("[];[1,2];[1];[]".parse::<OscillatingTableau>().is_err());
        assert!(StandardTableau::new(vec![vec![1, 2], vec![2]]).is_err());
        assert!(StandardTableau::new(vec![vec![2, 3], vec![1]]).is_err());
        assert_eq!(example().to_string(), "[];[1];[2];[2,1];[1,1];[1];[]");
    }

    #[test]
    fn oscillating_counts() {
        let counts: Vec<usize> = (0..=4).map(|n| all_oscillating_tableaux(2 * n).len()).collect();
        assert_eq!(counts, [1, 1, 3, 15, 105]);
    }
}
