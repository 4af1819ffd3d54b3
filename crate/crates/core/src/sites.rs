//! Edge insertion at positions and active sites.
//!
//! Position `s` (1 <= s <= 2n) is the gap right after node `s`; position `2n`
//! is after the last node. There is no position before node 1.

use crate::error::{Error, Result};
use crate::matching::Matching;
use crate::pattern::Pattern;

/// Inserts a fresh edge whose opener sits at position `s` and closer at
/// position `t`, then renumbers to canonical form.
pub fn insert_edge(m: &Matching, s: usize, t: usize) -> Result<Matching> {
    let size = m.size();
    if s == 0 || s > t || t > size {
        return Err(Error::PositionOutOfRange { s, t, max: size });
    }
    // new node numbers for the old nodes and the inserted pair
    let shift = |v: usize| v + usize::from(v > s) + usize::from(v > t);
    let opener = s + 1;
    let closer = t + 2;
    let mut partner = vec![0usize; size + 2];
    for v in 1..=size {
        partner[shift(v) - 1] = shift(m.partner(v));
    }
    partner[opener - 1] = closer;
    partner[closer - 1] = opener;
    Ok(Matching::from_partners_unchecked(&partner))
}

/// Active sites of the generating tree: positions `s` at or after the last
/// initial point for which some `t >= s` makes `insert_edge(m, s, t)` avoid
/// `p`. The inserted edge then has the largest initial point of the child,
/// so deleting that edge recovers the parent.
pub fn active_sites(m: &Matching, p: &Pattern) -> Vec<usize> {
    let last_opener = m.edges().iter().map(|e| e.0).max().unwrap_or(1);
    sites_from(m, p, last_opener)
}

/// Every position `s` for which some `t >= s` makes `insert_edge(m, s, t)`
/// avoid `p`, including positions left of the last initial point.
pub fn unrestricted_active_sites(m: &Matching, p: &Pattern) -> Vec<usize> {
    sites_from(m, p, 1)
}

fn sites_from(m: &Matching, p: &Pattern, first: usize) -> Vec<usize> {
    let size = m.size();
    (first..=size)
        .filter(|&s| {
            (s..=size).any(|t| {
                let child = insert_edge(m, s, t).expect("positions in range");
                !p.occurs_in(&child)
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> Matching {
        s.parse().unwrap()
    }

    #[test]
    fn insertion_examples() {
        assert_eq!(insert_edge(&m("11"), 1, 2).unwrap().to_string(), "1212");
        assert_eq!(insert_edge(&m("11"), 1, 1).unwrap().to_string(), "1221");
        assert_eq!(insert_edge(&m("11"), 2, 2).unwrap().to_string(), "1122");
        assert_eq!(insert_edge(&m("1122"), 1, 3).unwrap().to_string(), "121323");
    }

    #[test]
    fn insertion_range_errors() {
        assert!(insert_edge(&m("11"), 0, 1).is_err());
        assert!(insert_edge(&m("11"), 2, 1).is_err());
        assert!(insert_edge(&m("11"), 1, 3).is_err());
        assert!(insert_edge(&Matching::empty(), 1, 1).is_err());
    }

    #[test]
    fn active_site_examples() {
        let p: Pattern = "12312".parse().unwrap();
        assert_eq!(active_sites(&m("11"), &p), vec![1, 2]);
        assert!(active_sites(&Matching::empty(), &p).is_empty());
        assert_eq!(active_sites(&m("1221"), &p), vec![2, 3, 4]);
        assert_eq!(active_sites(&m("1212"), &p), vec![3, 4]);
        assert_eq!(active_sites(&m("1122"), &p), vec![3, 4]);
        assert_eq!(unrestricted_active_sites(&m("1221"), &p), vec![1, 2, 3, 4]);
    }
}
