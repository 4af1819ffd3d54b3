//! The generating tree with root `(0)` and rule
//! `(k) -> (k+1)^1 (k)^2 (k-1)^3 ... (0)^(k+2)`, and its empirical check
//! against active sites of pattern-avoiding matchings.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::enumerate::avoiders;
use crate::error::{Error, Result};
use crate::matching::Matching;
use crate::pattern::{Pattern, GENERATING_TREE_PATTERNS};
use crate::sites::{active_sites, insert_edge};

/// Multiset of labels, label -> multiplicity.
pub type LabelMultiset = BTreeMap<i64, usize>;

/// Histogram of labels at one tree level, label -> number of nodes.
pub type LabelHistogram = BTreeMap<usize, BigUint>;

pub const ROOT_LABEL: usize = 0;

/// Children of a node labelled `k`: label `k + 2 - t` with multiplicity `t`
/// for `t = 1..=k+2`.
pub fn expand_rule(k: usize) -> LabelMultiset {
    (1..=k + 2).map(|t| ((k + 2 - t) as i64, t)).collect()
}

/// Advances a level histogram by one application of the rule.
pub fn next_level(level: &LabelHistogram) -> LabelHistogram {
    let mut out = LabelHistogram::new();
    for (&k, count) in level {
        for (child, mult) in expand_rule(k) {
            *out.entry(child as usize).or_insert_with(BigUint::zero) += count * BigUint::from(mult);
        }
    }
    out
}

/// Number of tree nodes at levels `1..=depth` (level 1 is the root).
pub fn level_counts(depth: usize) -> Vec<BigUint> {
    let mut level: LabelHistogram = [(ROOT_LABEL, BigUint::one())].into_iter().collect();
    let mut out = Vec::with_capacity(depth);
    for d in 0..depth {
        if d > 0 {
            level = next_level(&level);
        }
        out.push(level.values().sum());
    }
    out
}

/// Label of an avoider: number of active sites minus two.
pub fn label_of(m: &Matching, p: &Pattern) -> i64 {
    active_sites(m, p).len() as i64 - 2
}

/// Children produced by inserting an edge between every pair of active
/// sites `s <= t`.
#[derive(Clone, Debug)]
pub struct Children {
    pub labels: LabelMultiset,
    pub matchings: Vec<Matching>,
    /// Insertions between active sites that produced an occurrence of the pattern.
    pub non_avoiding: Vec<(usize, usize)>,
}

pub fn empirical_children(m: &Matching, p: &Pattern) -> Children {
    let sites = active_sites(m, p);
    let mut labels = LabelMultiset::new();
    let mut matchings = Vec::new();
    let mut non_avoiding = Vec::new();
    for (a, &s) in sites.iter().enumerate() {
        for &t in &sites[a..] {
            let child = insert_edge(m, s, t).expect("active sites are positions");
            if p.occurs_in(&child) {
                non_avoiding.push((s, t));
                continue;
            }
            *labels.entry(label_of(&child, p)).or_insert(0) += 1;
            matchings.push(child);
        }
    }
    Children { labels, matchings, non_avoiding }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuccessionReport {
    pub pattern: String,
    pub n: usize,
    /// `|M_l(p)|` for `l = 1..=n+1`.
    pub level_sizes: Vec<String>,
    pub rule_violations: Vec<String>,
    pub coverage_violations: Vec<String>,
}

impl SuccessionReport {
    pub fn passed(&self) -> bool {
        self.rule_violations.is_empty() && self.coverage_violations.is_empty()
    }
}

fn fmt_multiset(ms: &LabelMultiset) -> String {
    let parts: Vec<String> = ms.iter().map(|(k, v)| format!("{k}:{v}")).collect();
    format!("{{{}}}", parts.join(","))
}

/// Checks, for every avoider on levels `1..=n`, that its children match the
/// rule for its label, and that the children of each level are exactly the
/// avoiders of the next level, each produced once.
pub fn validate_lemma(p: &Pattern, n: usize) -> Result<SuccessionReport> {
    if !GENERATING_TREE_PATTERNS.contains(&p.to_string().as_str()) {
        return Err(Error::UnsupportedPattern(p.to_string()));
    }
    let patterns = [p.clone()];
    let mut level_sizes = Vec::with_capacity(n + 1);
    let mut rule_violations = Vec::new();
    let mut coverage_violations = Vec::new();
    let mut level: Vec<Matching> = avoiders(1, &patterns).collect();
    level_sizes.push(level.len().to_string());
    for size in 1..=n {
        let next: Vec<Matching> = avoiders(size + 1, &patterns).collect();
        level_sizes.push(next.len().to_string());
        let mut produced: HashMap<Matching, usize> = HashMap::new();
        for m in &level {
            let label = label_of(m, p);
            let children = empirical_children(m, p);
            for (s, t) in &children.non_avoiding {
                rule_violations.push(format!("{m}: insertion ({s}, {t}) between active sites contains {p}"));
            }
            let expected = if label >= 0 { expand_rule(label as usize) } else { LabelMultiset::new() };
            if label < 0 || children.labels != expected || !children.non_avoiding.is_empty() {
                rule_violations.push(format!(
                    "{m}: label {label}, children {} but rule gives {}",
                    fmt_multiset(&children.labels),
                    fmt_multiset(&expected)
                ));
            }
            for child in children.matchings {
                *produced.entry(child).or_insert(0) += 1;
            }
        }
        for m in &next {
            match produced.remove(m) {
                Some(1) => {}
                Some(k) => coverage_violations.push(format!("{m} produced {k} times")),
                None => coverage_violations.push(format!("{m} never produced")),
            }
        }
        let mut extra: Vec<String> = produced.keys().map(|m| format!("{m} produced but not an avoider")).collect();
        extra.sort();
        coverage_violations.extend(extra);
        level = next;
    }
    Ok(SuccessionReport { pattern: p.to_string(), n, level_sizes, rule_violations, coverage_violations })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    #[test]
    fn rule_examples() {
        assert_eq!(expand_rule(0), [(1, 1), (0, 2)].into_iter().collect());
        assert_eq!(expand_rule(1), [(2, 1), (1, 2), (0, 3)].into_iter().collect());
        for k in 0..10 {
            let total: usize = expand_rule(k).values().sum();
            assert_eq!(total, (k + 2) * (k + 3) / 2);
        }
    }

    #[test]
    fn level_count_examples() {
        let to_u: Vec<u64> = level_counts(4).iter().map(|c| c.try_into().unwrap()).collect();
        assert_eq!(to_u, [1, 3, 12, 55]);
        assert_eq!(level_counts(1), vec![BigUint::one()]);
    }

    #[test]
    fn children_of_single_edge() {
        let one: Matching = "11".parse().unwrap();
        for pat in ["12312", "12321"] {
            let c = empirical_children(&one, &p(pat));
            assert_eq!(c.labels, expand_rule(0), "{pat}");
            let mut words: Vec<String> = c.matchings.iter().map(|m| m.to_string()).collect();
            words.sort();
            assert_eq!(words, ["1122", "1212", "1221"]);
        }
    }

    #[test]
    fn unsupported_pattern_rejected() {
        assert!(matches!(validate_lemma(&p("12345"), 2), Err(Error::UnsupportedPattern(_))));
        assert!(matches!(validate_lemma(&p("121323"), 2), Err(Error::UnsupportedPattern(_))));
    }

    #[test]
    fn lemma_small_levels() {
        let report = validate_lemma(&p("12312"), 3).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.level_sizes, ["1", "3", "12", "55"]);
        let report = validate_lemma(&p("12213"), 3).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.level_sizes, ["1", "3", "12", "55"]);
    }
}
