//! Closed lattice walks from restricted oscillating tableaux, lattice paths
//! under `y = x/2`, and the step-rewriting bijection `tau` between them.

use std::fmt;
use std::str::FromStr;

use super::tableau::OscillatingTableau;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WalkStep {
    E,
    W,
    N,
    S,
}

impl WalkStep {
    pub fn delta(self) -> (i64, i64) {
        match self {
            WalkStep::E => (1, 0),
            WalkStep::W => (-1, 0),
            WalkStep::N => (0, 1),
            WalkStep::S => (0, -1),
        }
    }

    fn letter(self) -> char {
        match self {
            WalkStep::E => 'E',
            WalkStep::W => 'W',
            WalkStep::N => 'N',
            WalkStep::S => 'S',
        }
    }
}

/// A closed walk from the origin with `x >= y >= 0` throughout, in which
/// every `N` is followed by zero or more `W` steps and then one `S`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LatticeWalk {
    steps: Vec<WalkStep>,
}

impl LatticeWalk {
    pub fn new(steps: Vec<WalkStep>) -> Result<Self> {
        let (mut x, mut y) = (0i64, 0i64);
        let mut after_north = false;
        for (idx, &step) in steps.iter().enumerate() {
            let position = idx + 1;
            if after_north && !matches!(step, WalkStep::W | WalkStep::S) {
                return Err(Error::InvalidWalk(format!(
                    "step {position} ({}) follows an N before its S",
                    step.letter()
                )));
            }
            match step {
                WalkStep::N => after_north = true,
                WalkStep::S => {
                    if !after_north {
                        return Err(Error::InvalidWalk(format!("S at step {position} without a preceding N")));
                    }
                    after_north = false;
                }
                _ => {}
            }
            let (dx, dy) = step.delta();
            x += dx;
            y += dy;
            if !(x >= y && y >= 0) {
                return Err(Error::InvalidWalk(format!("leaves x >= y >= 0 at step {position}")));
            }
        }
        if (x, y) != (0, 0) {
            return Err(Error::InvalidWalk(format!("ends at ({x}, {y}) instead of the origin")));
        }
        Ok(LatticeWalk { steps })
    }

    pub fn steps(&self) -> &[WalkStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

impl FromStr for LatticeWalk {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .enumerate()
            .map(|(idx, c)| match c {
                'E' => Ok(WalkStep::E),
                'W' => Ok(WalkStep::W),
                'N' => Ok(WalkStep::N),
                'S' => Ok(WalkStep::S),
                _ => Err(Error::Parse { position: idx + 1, reason: format!("'{c}' is not E, W, N or S") }),
            })
            .collect::<Result<Vec<_>>>()?;
        LatticeWalk::new(steps)
    }
}

impl fmt::Display for LatticeWalk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.steps.iter().try_for_each(|s| write!(f, "{}", s.letter()))
    }
}

impl fmt::Debug for LatticeWalk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LatticeWalk({self})")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PathStep {
    E,
    N,
}

/// A path of `E`, `N` steps from `(0, 0)` to `(2n, n)` with
/// `2 * #N <= #E` on every prefix.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LatticePath {
    steps: Vec<PathStep>,
}

impl LatticePath {
    pub fn new(steps: Vec<PathStep>) -> Result<Self> {
        let (mut east, mut north) = (0usize, 0usize);
        for (idx, step) in steps.iter().enumerate() {
            match step {
                PathStep::E => east += 1,
                PathStep::N => north += 1,
            }
            if 2 * north > east {
                return Err(Error::InvalidPath(format!("rises above y = x/2 at step {}", idx + 1)));
            }
        }
        if east != 2 * north {
            return Err(Error::InvalidPath(format!("ends at ({east}, {north}), not on y = x/2")));
        }
        Ok(LatticePath { steps })
    }

    pub fn steps(&self) -> &[PathStep] {
        &self.steps
    }

    /// The `n` with endpoint `(2n, n)`.
    pub fn n(&self) -> usize {
        self.steps.iter().filter(|&&s| s == PathStep::N).count()
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .enumerate()
            .map(|(idx, c)| match c {
                'E' => Ok(PathStep::E),
                'N' => Ok(PathStep::N),
                _ => Err(Error::Parse { position: idx + 1, reason: format!("'{c}' is not E or N") }),
            })
            .collect::<Result<Vec<_>>>()?;
        LatticePath::new(steps)
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            f.write_str(match step {
                PathStep::E => "E",
                PathStep::N => "N",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LatticePath({self})")
    }
}

/// Reads each shape as the point (first row, second row).
pub fn walk_of_tableau(t: &OscillatingTableau) -> Result<LatticeWalk> {
    let point = |idx: usize| -> Result<(i64, i64)> {
        let shape = &t.shapes()[idx];
        if shape.len() > 2 {
            return Err(Error::InvalidTableau(format!("shape {idx} has {} rows", shape.len())));
        }
        Ok((
            shape.first().copied().unwrap_or(0) as i64,
            shape.get(1).copied().unwrap_or(0) as i64,
        ))
    };
    let mut steps = Vec::with_capacity(t.length());
    for idx in 1..=t.length() {
        let (x0, y0) = point(idx - 1)?;
        let (x1, y1) = point(idx)?;
        steps.push(match (x1 - x0, y1 - y0) {
            (1, 0) => WalkStep::E,
            (-1, 0) => WalkStep::W,
            (0, 1) => WalkStep::N,
            _ => WalkStep::S,
        });
    }
    LatticeWalk::new(steps)
}

pub fn tableau_of_walk(w: &LatticeWalk) -> OscillatingTableau {
    let (mut x, mut y) = (0i64, 0i64);
    let mut shapes = vec![Vec::new()];
    for step in w.steps() {
        let (dx, dy) = step.delta();
        x += dx;
        y += dy;
        let shape: Vec<usize> = [x, y].into_iter().filter(|&v| v > 0).map(|v| v as usize).collect();
        shapes.push(shape);
    }
    OscillatingTableau::new(shapes).expect("valid walks trace valid shapes")
}

/// Rewrites `E -> EE`, `W -> N`, `N -> EN`, `S -> E`.
pub fn tau(w: &LatticeWalk) -> LatticePath {
    let mut steps = Vec::with_capacity(w.len() * 3 / 2);
    for step in w.steps() {
        match step {
            WalkStep::E => steps.extend([PathStep::E, PathStep::E]),
            WalkStep::W => steps.push(PathStep::N),
            WalkStep::N => steps.extend([PathStep::E, PathStep::N]),
            WalkStep::S => steps.push(PathStep::E),
        }
    }
    LatticePath::new(steps).expect("tau maps walks under y = x into paths under y = x/2")
}

/// Pairs the `E` steps as `(E_1 E_2), (E_3 E_4), ...`: a pair of adjacent
/// `E`s gives `E`; otherwise `E_{2k-1}` and the `N` after it give `N`, and
/// `E_{2k}` gives `S`. Every other `N` gives `W`.
pub fn tau_inv(p: &LatticePath) -> Result<LatticeWalk> {
    let steps = p.steps();
    let mut out = Vec::with_capacity(2 * p.n());
    let mut east_seen = 0usize;
    let mut idx = 0;
    while idx < steps.len() {
        match steps[idx] {
            PathStep::E if east_seen.is_multiple_of(2) => {
                // E_{2k-1}
                match steps.get(idx + 1) {
                    Some(PathStep::E) => {
                        out.push(WalkStep::E);
                        east_seen += 2;
                    }
                    Some(PathStep::N) => {
                        out.push(WalkStep::N);
                        east_seen += 1;
                    }
                    None => return Err(Error::InvalidPath("odd number of E steps".into())),
                }
                idx += 2;
            }
            PathStep::E => {
                out.push(WalkStep::S);
                east_seen += 1;
                idx += 1;
            }
            PathStep::N => {
                out.push(WalkStep::W);
                idx += 1;
            }
        }
    }
    LatticeWalk::new(out)
}

/// All walks of the given length satisfying the walk invariants.
pub fn all_walks(len: usize) -> Vec<LatticeWalk> {
    fn rec(len: usize, x: usize, y: usize, after_north: bool, prefix: &mut Vec<WalkStep>, out: &mut Vec<LatticeWalk>) {
        let left = len - prefix.len();
        if left == 0 {
            if x == 0 && y == 0 {
                out.push(LatticeWalk { steps: prefix.clone() });
            }
            return;
        }
        if x + y > left {
            return;
        }
        let mut go = |step: WalkStep, x: usize, y: usize, after: bool, prefix: &mut Vec<WalkStep>| {
            prefix.push(step);
            rec(len, x, y, after, prefix, out);
            prefix.pop();
        };
        if !after_north {
            go(WalkStep::E, x + 1, y, false, prefix);
            if x > y {
                go(WalkStep::N, x, y + 1, true, prefix);
            }
        }
        if x > y {
            go(WalkStep::W, x - 1, y, after_north, prefix);
        }
        if after_north && y > 0 {
            go(WalkStep::S, x, y - 1, false, prefix);
        }
    }
    let mut out = Vec::new();
    rec(len, 0, 0, false, &mut Vec::new(), &mut out);
    out
}

/// All paths from `(0, 0)` to `(2n, n)` staying weakly below `y = x/2`.
pub fn all_paths(n: usize) -> Vec<LatticePath> {
    fn rec(n: usize, east: usize, north: usize, prefix: &mut Vec<PathStep>, out: &mut Vec<LatticePath>) {
        if east == 2 * n && north == n {
            out.push(LatticePath { steps: prefix.clone() });
            return;
        }
        if east < 2 * n {
            prefix.push(PathStep::E);
            rec(n, east + 1, north, prefix, out);
            prefix.pop();
        }
        if north < n && 2 * (north + 1) <= east {
            prefix.push(PathStep::N);
            rec(n, east, north + 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 0, 0, &mut Vec::new(), &mut out);
    out
}
