//! Perfect matchings on `[2n]` and their canonical sequential form.
//!
//! Nodes are numbered from 1. An edge `(i, j)` always has `i < j`; `i` is the
//! initial point (opener) and `j` the end point (closer). The canonical word
//! labels both endpoints of an arc with the rank of its opener, so labels
//! first appear in increasing order.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A perfect matching on `{1, ..., 2n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    word: Vec<u32>,
    edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn empty() -> Self {
        Matching { word: Vec::new(), edges: Vec::new() }
    }

    /// Builds a matching from a canonical word, validating it.
    pub fn from_word(word: &[u32]) -> Result<Self> {
        if !word.len().is_multiple_of(2) {
            return Err(Error::Parse {
                position: word.len(),
                reason: format!("odd length {}", word.len()),
            });
        }
        let n = word.len() / 2;
        let mut openers: Vec<usize> = Vec::with_capacity(n);
        let mut edges = vec![(0usize, 0usize); n];
        let mut closed = vec![false; n];
        for (idx, &label) in word.iter().enumerate() {
            let position = idx + 1;
            let next = openers.len() as u32 + 1;
            if label == 0 || label > next {
                return Err(Error::Parse {
                    position,
                    reason: format!("label {label} out of canonical order (expected at most {next})"),
                });
            }
            if label == next {
                if openers.len() == n {
                    return Err(Error::Parse {
                        position,
                        reason: format!("label {label} exceeds {n} edges"),
                    });
                }
                openers.push(position);
                edges[label as usize - 1].0 = position;
            } else {
                let k = label as usize - 1;
                if closed[k] {
                    return Err(Error::Parse {
                        position,
                        reason: format!("label {label} occurs more than twice"),
                    });
                }
                closed[k] = true;
                edges[k].1 = position;
            }
        }
        if openers.len() != n {
            return Err(Error::Parse {
                position: word.len(),
                reason: format!("expected {n} distinct labels, found {}", openers.len()),
            });
        }
        if let Some(k) = closed.iter().position(|c| !c) {
            return Err(Error::Parse {
                position: edges[k].0,
                reason: format!("label {} occurs only once", k + 1),
            });
        }
        Ok(Matching { word: word.to_vec(), edges })
    }

    /// Builds a matching from an arbitrary list of edges on `{1, ..., 2n}`.
    pub fn from_edges(edges: &[(usize, usize)]) -> Result<Self> {
        let size = edges.len() * 2;
        let mut partner = vec![0usize; size + 1];
        for &(a, b) in edges {
            let (i, j) = if a < b { (a, b) } else { (b, a) };
            if i == j || i == 0 || j > size {
                return Err(Error::InvalidMatching(format!("edge ({a}, {b}) outside 1..={size}")));
            }
            if partner[i] != 0 || partner[j] != 0 {
                return Err(Error::InvalidMatching(format!("node reused by edge ({a}, {b})")));
            }
            partner[i] = j;
            partner[j] = i;
        }
        Ok(Self::from_partners_unchecked(&partner[1..]))
    }

    /// `partner[k]` is the 1-based partner of node `k + 1`; must be a valid involution.
    pub(crate) fn from_partners_unchecked(partner: &[usize]) -> Self {
        let mut word = vec![0u32; partner.len()];
        let mut edges = Vec::with_capacity(partner.len() / 2);
        for (idx, &p) in partner.iter().enumerate() {
            let node = idx + 1;
            if p > node {
                edges.push((node, p));
                let label = edges.len() as u32;
                word[idx] = label;
                word[p - 1] = label;
            }
        }
        Matching { word, edges }
    }

    /// Number of edges.
    pub fn n(&self) -> usize {
        self.edges.len()
    }

    /// Number of nodes, `2n`.
    pub fn size(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Edges sorted by initial point; edge `k` carries label `k + 1`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn canonical_word(&self) -> &[u32] {
        &self.word
    }

    /// Partner of a 1-based node.
    pub fn partner(&self, node: usize) -> usize {
        let (i, j) = self.edges[self.word[node - 1] as usize - 1];
        if i == node {
            j
        } else {
            i
        }
    }

    /// The edge containing node `2n`.
    pub fn last_edge(&self) -> Option<(usize, usize)> {
        self.word.last().map(|&label| self.edges[label as usize - 1])
    }

    pub fn is_opener(&self, node: usize) -> bool {
        self.partner(node) > node
    }

    /// Number of edge pairs `(i, j)`, `(i', j')` with `i < i' < j < j'`.
    ///
    /// Counted by a left-to-right sweep: at each closer, the open arcs that
    /// started after its opener are exactly the arcs it crosses.
    pub fn crossing_count(&self) -> usize {
        let mut open: Vec<usize> = Vec::with_capacity(self.n());
        let mut count = 0;
        for node in 1..=self.size() {
            let other = self.partner(node);
            if other > node {
                open.push(node);
            } else {
                let at = open.iter().position(|&o| o == other).expect("opener is open");
                count += open.len() - at - 1;
                open.remove(at);
            }
        }
        count
    }

    /// Whether two edges cross, in either order.
    pub fn edges_cross(a: (usize, usize), b: (usize, usize)) -> bool {
        (a.0 < b.0 && b.0 < a.1 && a.1 < b.1) || (b.0 < a.0 && a.0 < b.1 && b.1 < a.1)
    }

    /// The submatching induced on a set of nodes, relabelled in order.
    ///
    /// Fails if some listed node is matched to a node outside the set.
    pub fn induced(&self, nodes: &[usize]) -> Result<Matching> {
        let mut sorted = nodes.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut rank = vec![0usize; self.size() + 1];
        for (r, &v) in sorted.iter().enumerate() {
            if v == 0 || v > self.size() {
                return Err(Error::InvalidMatching(format!("node {v} outside 1..={}", self.size())));
            }
            rank[v] = r + 1;
        }
        let mut partner = Vec::with_capacity(sorted.len());
        for &v in &sorted {
            let p = self.partner(v);
            if rank[p] == 0 {
                return Err(Error::InvalidMatching(format!(
                    "node {v} is matched to {p}, outside the induced node set"
                )));
            }
            partner.push(rank[p]);
        }
        Ok(Self::from_partners_unchecked(&partner))
    }

    /// Removes the edge with the given 0-based index and renumbers the rest.
    pub fn without_edge(&self, index: usize) -> Matching {
        let (i, j) = self.edges[index];
        let nodes: Vec<usize> = (1..=self.size()).filter(|&v| v != i && v != j).collect();
        self.induced(&nodes).expect("removing a whole edge keeps the set closed")
    }

    /// Concatenates matchings left to right.
    pub fn concat(parts: &[&Matching]) -> Matching {
        let mut partner = Vec::new();
        for part in parts {
            let offset = partner.len();
            partner.extend((1..=part.size()).map(|v| part.partner(v) + offset));
        }
        Self::from_partners_unchecked(&partner)
    }

    /// Parses the text format: a compact digit word (`"123123"`) or
    /// comma-separated labels (`"1,2,1,3,2,3"`).
    pub fn parse(text: &str) -> Result<Matching> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Matching::empty());
        }
        let mut word = Vec::new();
        if text.contains(',') {
            for (idx, token) in text.split(',').enumerate() {
                let label = token.trim().parse::<u32>().map_err(|_| Error::Parse {
                    position: idx + 1,
                    reason: format!("'{}' is not a positive integer", token.trim()),
                })?;
                word.push(label);
            }
        } else {
            for (idx, ch) in text.chars().enumerate() {
                let label = ch.to_digit(10).ok_or_else(|| Error::Parse {
                    position: idx + 1,
                    reason: format!("'{ch}' is not a digit"),
                })?;
                word.push(label);
            }
        }
        Matching::from_word(&word)
    }
}

impl FromStr for Matching {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Matching::parse(s)
    }
}

/// Writes labels as a digit word when every label fits in one digit,
/// otherwise comma-separated.
pub(crate) fn write_word(f: &mut fmt::Formatter<'_>, word: &[u32], compact: bool) -> fmt::Result {
    if compact {
        for label in word {
            write!(f, "{label}")?;
        }
    } else {
        for (k, label) in word.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{label}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, &self.word, self.n() <= 9)
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matching({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> Matching {
        s.parse().unwrap()
    }

    #[test]
    fn parses_figure_one() {
        assert_eq!(m("123123").edges(), &[(1, 4), (2, 5), (3, 6)]);
        assert_eq!(m("1212").edges(), &[(1, 3), (2, 4)]);
        assert_eq!(m("").n(), 0);
    }

    #[test]
    fn canonical_word_from_edges() {
        let x = Matching::from_edges(&[(1, 5), (2, 4), (3, 6)]).unwrap();
        assert_eq!(x.to_string(), "123213");
        assert_eq!(Matching::from_edges(&[]).unwrap().to_string(), "");
        assert_eq!(Matching::from_edges(&[(4, 1), (2, 3)]).unwrap().to_string(), "1221");
    }

    #[test]
    fn parse_errors_name_position() {
        assert!(matches!(Matching::parse("121"), Err(Error::Parse { position: 3, .. })));
        assert!(matches!(Matching::parse("2112"), Err(Error::Parse { position: 1, .. })));
        assert!(matches!(Matching::parse("1113"), Err(Error::Parse { position: 3, .. })));
        assert!(matches!(Matching::parse("1221x"), Err(Error::Parse { position: 5, .. })));
        assert!(matches!(Matching::parse("1233"), Err(Error::Parse { .. })));
        assert!(matches!(Matching::parse("12"), Err(Error::Parse { position: 2, .. })));
    }

    #[test]
    fn comma_form() {
        let x = m("1,2,1,3,2,3");
        assert_eq!(x.to_string(), "121323");
        let labels: Vec<String> = (1..=10).flat_map(|k| [k, k]).map(|k| k.to_string()).collect();
        let big = m(&labels.join(","));
        assert_eq!(big.n(), 10);
        assert_eq!(big.to_string(), labels.join(","));
    }

    #[test]
    fn crossings() {
        assert_eq!(m("123123").crossing_count(), 3);
        assert_eq!(m("112233").crossing_count(), 0);
        assert_eq!(m("121323").crossing_count(), 2);
        assert_eq!(m("").crossing_count(), 0);
    }

    #[test]
    fn induced_requires_closed_set() {
        let x = m("121323");
        assert_eq!(x.induced(&[1, 2, 3, 5]).unwrap().to_string(), "1212");
        assert!(x.induced(&[1, 2]).is_err());
        assert_eq!(x.without_edge(1).to_string(), "1122");
    }

    #[test]
    fn concat_shifts() {
        let x = Matching::concat(&[&m("11"), &m("1212")]);
        assert_eq!(x.to_string(), "112323");
    }

    #[test]
    fn last_edge_and_partner() {
        let x = m("121323");
        assert_eq!(x.last_edge(), Some((4, 6)));
        assert_eq!(x.partner(5), 2);
        assert!(x.is_opener(4));
        assert_eq!(Matching::empty().last_edge(), None);
    }
}
