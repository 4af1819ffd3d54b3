//! Structural decompositions of 12312-avoiding matchings around the edge of
//! the last node.
//!
//! Let `E = (j, 2n)` be the edge on node `2n`. In a 12312-avoider the edges
//! crossing `E` end at the consecutive nodes `j+1, ..., j+m` and are nested;
//! these are the quasi-critical edges, and the outermost one (ending at
//! `j+m`) is the critical edge.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matching::Matching;
use crate::pattern::Pattern;

pub fn pattern_12312() -> Pattern {
    Pattern::new(&[1, 2, 3, 1, 2]).expect("valid pattern")
}

pub fn pattern_121323() -> Pattern {
    Pattern::new(&[1, 2, 1, 3, 2, 3]).expect("valid pattern")
}

/// The edge with the rightmost end point crossing the edge of node `2n`.
pub fn critical_edge(m: &Matching) -> Result<Option<(usize, usize)>> {
    let last = m.last_edge().ok_or(Error::EmptyMatching)?;
    Ok(crossers_of_last(m, last).last().copied())
}

/// Edges crossing `last`, sorted by end point.
fn crossers_of_last(m: &Matching, last: (usize, usize)) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> =
        m.edges().iter().copied().filter(|&e| Matching::edges_cross(e, last)).collect();
    out.sort_by_key(|e| e.1);
    out
}

type Edge = (usize, usize);

/// Quasi-critical edges `E_{j+1}, ..., E_{j+m}` in order of end point, after
/// checking that they end at consecutive nodes right after `j`.
fn quasi_critical(m: &Matching) -> Result<(Edge, Vec<Edge>)> {
    let last = m.last_edge().ok_or(Error::EmptyMatching)?;
    let crossers = crossers_of_last(m, last);
    let j = last.0;
    for (r, e) in crossers.iter().enumerate() {
        if e.1 != j + r + 1 {
            return Err(Error::InconsistentDecomposition(format!(
                "edge {e:?} crosses the last edge but does not end at node {}",
                j + r + 1
            )));
        }
    }
    Ok((last, crossers))
}

fn range(from: usize, to: usize) -> Vec<usize> {
    (from..=to).collect()
}

fn require_avoids(m: &Matching, patterns: &[Pattern]) -> Result<()> {
    for p in patterns {
        if p.occurs_in(m) {
            return Err(Error::PatternOccurrence { matching: m.to_string(), pattern: p.to_string() });
        }
    }
    Ok(())
}

/// Splitting of a 12312-avoider into `m + 2` smaller 12312-avoiders.
///
/// `thetas[s - 1]` lives on nodes `v_{s-1}+1 ..= v_s` plus the closer
/// `j+m+1-s`, `alpha` on `v_m+1 ..= j-1`, `beta` on `j+m+1 ..= 2n-1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition12312 {
    pub m: usize,
    pub j: usize,
    /// `v_0 = 0, v_1, ..., v_m`.
    pub cut_points: Vec<usize>,
    #[serde(serialize_with = "ser_matchings")]
    pub thetas: Vec<Matching>,
    #[serde(serialize_with = "ser_matching")]
    pub alpha: Matching,
    #[serde(serialize_with = "ser_matching")]
    pub beta: Matching,
}

fn ser_matching<S: serde::Serializer>(m: &Matching, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(m)
}

fn ser_matchings<S: serde::Serializer>(ms: &[Matching], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(ms.iter().map(|m| m.to_string()))
}

pub fn decompose_12312(theta: &Matching) -> Result<Decomposition12312> {
    require_avoids(theta, &[pattern_12312()])?;
    let ((j, last), quasi) = quasi_critical(theta)?;
    let m = quasi.len();

    let mut cut_points = vec![0usize];
    for r in 1..=m {
        // E_{j+m+1-r}
        let edge = quasi[m - r];
        let v = theta
            .edges()
            .iter()
            .filter(|&&e| e != (j, last) && Matching::edges_cross(e, edge))
            .map(|e| e.1)
            .max()
            .unwrap_or(edge.0);
        if v <= cut_points[r - 1] || v >= j {
            return Err(Error::InconsistentDecomposition(format!(
                "cut point v_{r} = {v} is not in ({}, {j})",
                cut_points[r - 1]
            )));
        }
        cut_points.push(v);
    }

    let mut thetas = Vec::with_capacity(m);
    for s in 1..=m {
        let mut nodes = range(cut_points[s - 1] + 1, cut_points[s]);
        nodes.push(j + m + 1 - s);
        thetas.push(theta.induced(&nodes).map_err(component_error)?);
    }
    let alpha = theta.induced(&range(cut_points[m] + 1, j - 1)).map_err(component_error)?;
    let beta = theta.induced(&range(j + m + 1, last - 1)).map_err(component_error)?;
    Ok(Decomposition12312 { m, j, cut_points, thetas, alpha, beta })
}

fn component_error(e: Error) -> Error {
    Error::InconsistentDecomposition(e.to_string())
}

pub fn recompose_12312(d: &Decomposition12312) -> Result<Matching> {
    let m = d.m;
    if d.thetas.len() != m {
        return Err(Error::InconsistentDecomposition(format!(
            "expected {m} theta components, found {}",
            d.thetas.len()
        )));
    }
    let mut cuts = vec![0usize];
    for (s, th) in d.thetas.iter().enumerate() {
        if th.is_empty() {
            return Err(Error::InconsistentDecomposition(format!("theta_{} is empty", s + 1)));
        }
        cuts.push(cuts[s] + th.size() - 1);
    }
    let j = cuts[m] + d.alpha.size() + 1;
    if j != d.j || cuts != d.cut_points {
        return Err(Error::InconsistentDecomposition(format!(
            "component sizes give j = {j}, cut points {cuts:?}; recorded j = {}, {:?}",
            d.j, d.cut_points
        )));
    }
    let size = j + m + d.beta.size() + 1;
    let mut partner = vec![0usize; size];
    let mut link = |a: usize, b: usize| {
        partner[a - 1] = b;
        partner[b - 1] = a;
    };
    for (idx, th) in d.thetas.iter().enumerate() {
        let s = idx + 1;
        let place = |v: usize| if v == th.size() { j + m + 1 - s } else { cuts[idx] + v };
        for &(a, b) in th.edges() {
            link(place(a), place(b));
        }
    }
    for &(a, b) in d.alpha.edges() {
        link(cuts[m] + a, cuts[m] + b);
    }
    for &(a, b) in d.beta.edges() {
        link(j + m + a, j + m + b);
    }
    link(j, size);
    Ok(Matching::from_partners_unchecked(&partner))
}

/// Splitting of a {12312, 121323}-avoider into `m + 2` smaller avoiders after
/// removing the last edge and its `m` quasi-critical edges.
///
/// `thetas[s - 1]` lives on nodes `v_{s-1}+1 ..= v_s - 1` where `v_s` is the
/// initial point of `E_{j+m+1-s}` and `v_{m+1} = j`; `beta` on
/// `j+m+1 ..= 2n-1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionDouble {
    pub m: usize,
    #[serde(serialize_with = "ser_matchings")]
    pub thetas: Vec<Matching>,
    #[serde(serialize_with = "ser_matching")]
    pub beta: Matching,
}

pub fn decompose_double(theta: &Matching) -> Result<DecompositionDouble> {
    require_avoids(theta, &[pattern_12312(), pattern_121323()])?;
    let ((j, last), quasi) = quasi_critical(theta)?;
    let m = quasi.len();
    let mut cuts = vec![0usize];
    cuts.extend((1..=m).map(|s| quasi[m - s].0));
    cuts.push(j);
    if cuts.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InconsistentDecomposition(format!("initial points {cuts:?} not nested")));
    }
    let thetas = (1..=m + 1)
        .map(|s| theta.induced(&range(cuts[s - 1] + 1, cuts[s] - 1)).map_err(component_error))
        .collect::<Result<Vec<_>>>()?;
    let beta = theta.induced(&range(j + m + 1, last - 1)).map_err(component_error)?;
    Ok(DecompositionDouble { m, thetas, beta })
}

pub fn recompose_double(d: &DecompositionDouble) -> Result<Matching> {
    let m = d.m;
    if d.thetas.len() != m + 1 {
        return Err(Error::InconsistentDecomposition(format!(
            "expected {} theta components, found {}",
            m + 1,
            d.thetas.len()
        )));
    }
    let mut partner: Vec<usize> = Vec::new();
    // openers of E_{j+m}, ..., E_{j+1}, then j itself
    let mut openers = Vec::with_capacity(m + 1);
    for th in &d.thetas {
        let offset = partner.len();
        partner.extend((1..=th.size()).map(|v| th.partner(v) + offset));
        partner.push(0);
        openers.push(partner.len());
    }
    let j = openers[m];
    partner.resize(j + m, 0);
    for s in 1..=m {
        let closer = j + m + 1 - s;
        partner[openers[s - 1] - 1] = closer;
        partner[closer - 1] = openers[s - 1];
    }
    let offset = partner.len();
    partner.extend((1..=d.beta.size()).map(|v| d.beta.partner(v) + offset));
    partner.push(j);
    partner[j - 1] = partner.len();
    Ok(Matching::from_partners_unchecked(&partner))
}

/// Structure around a critical crossing `E = (j, 2n)`, `F = (x, y)`: every
/// node strictly between `j` and `y` is an end point, those edges are
/// pairwise noncrossing, and their initial points lie strictly between `x`
/// and `j`. Vacuously true without a critical crossing.
pub fn critical_run_structure_holds(theta: &Matching) -> bool {
    let Some(last) = theta.last_edge() else { return true };
    let Some((x, y)) = crossers_of_last(theta, last).last().copied() else { return true };
    let j = last.0;
    let run: Vec<(usize, usize)> = (j + 1..y).map(|v| (theta.partner(v), v)).collect();
    run.iter().all(|&(a, b)| a < b && x < a && a < j)
        && run
            .iter()
            .enumerate()
            .all(|(k, &e)| run[k + 1..].iter().all(|&f| !Matching::edges_cross(e, f)))
}

/// With a critical crossing whose critical edge ends at `y`, the last edge is
/// the only edge crossing two or more of the edges ending at `j+1 ..= y`.
pub fn unique_double_crosser_holds(theta: &Matching) -> bool {
    let Some(last) = theta.last_edge() else { return true };
    let Some((_, y)) = crossers_of_last(theta, last).last().copied() else { return true };
    let j = last.0;
    let quasi: Vec<(usize, usize)> = (j + 1..=y).map(|v| (theta.partner(v), v)).collect();
    theta.edges().iter().filter(|&&e| e != last).all(|&e| {
        quasi.iter().filter(|&&q| q != e && Matching::edges_cross(e, q)).count() < 2
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> Matching {
        s.parse().unwrap()
    }

    #[test]
    fn critical_edges() {
        assert_eq!(critical_edge(&m("1212")).unwrap(), Some((1, 3)));
        assert_eq!(critical_edge(&m("1122")).unwrap(), None);
        assert_eq!(critical_edge(&m("121323")).unwrap(), Some((2, 5)));
        assert_eq!(critical_edge(&Matching::empty()), Err(Error::EmptyMatching));
    }

    #[test]
    fn decompose_121323() {
        let d = decompose_12312(&m("121323")).unwrap();
        assert_eq!(d.m, 1);
        assert_eq!(d.j, 4);
        assert_eq!(d.cut_points, vec![0, 3]);
        assert_eq!(d.thetas, vec![m("1212")]);
        assert!(d.alpha.is_empty());
        assert!(d.beta.is_empty());
        assert_eq!(recompose_12312(&d).unwrap(), m("121323"));
    }

    #[test]
    fn decompose_crossing_free() {
        let d = decompose_12312(&m("1122")).unwrap();
        assert_eq!((d.m, d.j), (0, 3));
        assert_eq!(d.alpha, m("11"));
        assert!(d.beta.is_empty());
        let d = decompose_12312(&m("11")).unwrap();
        assert_eq!((d.m, d.j), (0, 1));
        assert!(d.alpha.is_empty() && d.beta.is_empty());
    }

    #[test]
    fn decompose_rejects_occurrence() {
        assert!(matches!(decompose_12312(&m("123123")), Err(Error::PatternOccurrence { .. })));
        assert!(matches!(decompose_double(&m("121323")), Err(Error::PatternOccurrence { .. })));
        assert!(decompose_12312(&Matching::empty()).is_err());
    }

    #[test]
    fn recompose_checks_sizes() {
        let mut d = decompose_12312(&m("121323")).unwrap();
        d.j = 5;
        assert!(recompose_12312(&d).is_err());
        let mut d = decompose_12312(&m("121323")).unwrap();
        d.thetas.clear();
        assert!(recompose_12312(&d).is_err());
    }

    #[test]
    fn double_examples() {
        let d = decompose_double(&m("1212")).unwrap();
        assert_eq!(d.m, 1);
        assert_eq!(d.thetas, vec![Matching::empty(), Matching::empty()]);
        assert!(d.beta.is_empty());
        assert_eq!(recompose_double(&d).unwrap(), m("1212"));

        let wrap = DecompositionDouble { m: 0, thetas: vec![Matching::empty()], beta: m("11") };
        assert_eq!(recompose_double(&wrap).unwrap(), m("1221"));
        let bad = DecompositionDouble { m: 1, thetas: vec![Matching::empty()], beta: m("11") };
        assert!(recompose_double(&bad).is_err());
    }

    #[test]
    fn lemma_predicates_on_examples() {
        for w in ["121323", "1212", "1122", "12341234"] {
            let x = m(w);
            if !pattern_12312().occurs_in(&x) {
                assert!(critical_run_structure_holds(&x), "{w}");
                assert!(unique_double_crosser_holds(&x), "{w}");
            }
        }
    }
}
