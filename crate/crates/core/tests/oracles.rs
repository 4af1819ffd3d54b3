//! Library results compared against brute-force reference code.

mod common;

use std::collections::{BTreeMap, HashMap, HashSet};

use matchings::decompose::{decompose_12312, decompose_double};
use matchings::enumerate::{avoiders, double_factorial_odd, enumerate_matchings};
use matchings::gentree::{empirical_children, expand_rule, label_of};
use matchings::pattern::GENERATING_TREE_PATTERNS;
use matchings::render::render_arc_diagram;
use matchings::sites::{active_sites, insert_edge, unrestricted_active_sites};
use matchings::{Matching, Pattern};

use common::{all_words, contains, crossings, digits, edges_of};

const PATTERNS: [&str; 9] = ["12312", "12132", "12123", "12321", "12231", "12213", "121323", "1212", "123"];

#[test]
fn enumeration_matches_oracle_words() {
    for n in 0..=6 {
        let lib: Vec<Vec<u32>> = enumerate_matchings(n).map(|m| m.canonical_word().to_vec()).collect();
        let mut oracle = all_words(n);
        oracle.sort();
        let mut sorted = lib.clone();
        sorted.sort();
        assert_eq!(sorted, oracle, "n={n}");
        assert_eq!(lib.len() as u128, double_factorial_odd(n), "n={n}");
        assert_eq!(lib.iter().collect::<HashSet<_>>().len(), lib.len());
    }
}

#[test]
fn enumeration_order_pairs_smallest_free_node_first() {
    let words: Vec<String> = enumerate_matchings(2).map(|m| m.to_string()).collect();
    assert_eq!(words, ["1122", "1212", "1221"]);
}

#[test]
fn containment_matches_subset_scan() {
    for n in 0..=5 {
        for w in all_words(n) {
            let m = Matching::from_word(&w).unwrap();
            for p in PATTERNS {
                let pattern: Pattern = p.parse().unwrap();
                assert_eq!(pattern.occurs_in(&m), contains(&w, &digits(p)), "{m} vs {p}");
            }
        }
    }
}

#[test]
fn crossings_and_edges_match_oracle() {
    for n in 0..=6 {
        for w in all_words(n) {
            let m = Matching::from_word(&w).unwrap();
            assert_eq!(m.crossing_count(), crossings(&w), "{m}");
            assert_eq!(m.edges(), edges_of(&w).as_slice());
            assert_eq!(Matching::from_edges(m.edges()).unwrap(), m);
        }
    }
}

#[test]
fn avoidance_is_hereditary() {
    let patterns: Vec<Pattern> = PATTERNS.iter().map(|p| p.parse().unwrap()).collect();
    for n in 1..=5 {
        for m in enumerate_matchings(n) {
            for p in &patterns {
                if !p.occurs_in(&m) {
                    for idx in 0..m.n() {
                        assert!(!p.occurs_in(&m.without_edge(idx)), "{m} minus edge {idx} contains {p}");
                    }
                }
            }
        }
    }
}

#[test]
fn wilf_equivalent_counts() {
    let expected = [1usize, 3, 12, 55, 273];
    for p in GENERATING_TREE_PATTERNS {
        let pattern: Vec<Pattern> = vec![p.parse().unwrap()];
        let counts: Vec<usize> = (1..=5).map(|n| avoiders(n, &pattern).count()).collect();
        assert_eq!(counts, expected, "{p}");
    }
}

#[test]
fn every_avoider_has_one_parent() {
    // Deleting the edge with the largest initial point must give an avoider
    // in which that edge sat between active sites.
    for p in GENERATING_TREE_PATTERNS {
        let pattern: Pattern = p.parse().unwrap();
        for n in 2..=5 {
            for child in avoiders(n, std::slice::from_ref(&pattern)) {
                let (idx, &(a, b)) = child.edges().iter().enumerate().max_by_key(|(_, e)| e.0).unwrap();
                let parent = child.without_edge(idx);
                let (s, t) = (a - 1, b - 2);
                assert_eq!(insert_edge(&parent, s, t).unwrap(), child);
                let sites = active_sites(&parent, &pattern);
                assert!(sites.contains(&s) && sites.contains(&t), "{p}: {child} from {parent} at ({s},{t})");
            }
        }
    }
}

#[test]
fn unrestricted_sites_overcount_children() {
    // Counting every site, not only those after the last initial point,
    // breaks the succession rule already for the children of 11.
    let pattern: Pattern = "12312".parse().unwrap();
    let m: Matching = "1221".parse().unwrap();
    assert_eq!(label_of(&m, &pattern), 1);
    let sites = unrestricted_active_sites(&m, &pattern).len();
    assert_eq!(sites, 4);
    let rule_total: usize = expand_rule(1).values().sum();
    assert!(sites * (sites + 1) / 2 > rule_total);
    assert_eq!(empirical_children(&m, &pattern).labels, expand_rule(1));
}

#[test]
fn children_multisets_for_all_avoiders() {
    for p in GENERATING_TREE_PATTERNS {
        let pattern: Pattern = p.parse().unwrap();
        let mut by_label: BTreeMap<i64, usize> = BTreeMap::new();
        for n in 1..=4 {
            for m in avoiders(n, std::slice::from_ref(&pattern)) {
                let k = label_of(&m, &pattern);
                let c = empirical_children(&m, &pattern);
                assert!(c.non_avoiding.is_empty(), "{p}: {m}");
                assert_eq!(c.labels, expand_rule(k as usize), "{p}: {m}");
                *by_label.entry(k).or_insert(0) += 1;
            }
        }
        assert!(by_label.keys().all(|&k| k >= 0));
    }
}

#[test]
fn decomposition_components_partition_nodes() {
    let p: Vec<Pattern> = vec!["12312".parse().unwrap()];
    for n in 1..=6 {
        for m in avoiders(n, &p) {
            let d = decompose_12312(&m).unwrap();
            assert_eq!(d.thetas.len(), d.m);
            assert!(d.thetas.iter().all(|t| !t.is_empty()));
            assert_eq!(d.cut_points.len(), d.m + 1);
            let total: usize = d.thetas.iter().map(Matching::size).sum::<usize>() + d.alpha.size() + d.beta.size();
            assert_eq!(total, 2 * n - 2, "{m}");
        }
    }
}

#[test]
fn double_decomposition_shapes() {
    let p: Vec<Pattern> = vec!["12312".parse().unwrap(), "121323".parse().unwrap()];
    let mut seen: HashMap<usize, usize> = HashMap::new();
    for n in 1..=6 {
        for m in avoiders(n, &p) {
            let d = decompose_double(&m).unwrap();
            assert_eq!(d.thetas.len(), d.m + 1);
            let total: usize = d.thetas.iter().map(Matching::size).sum::<usize>() + d.beta.size();
            assert_eq!(total, 2 * n - 2 - 2 * d.m, "{m}");
            *seen.entry(d.m).or_insert(0) += 1;
        }
    }
    assert!(seen.len() > 2);
}

#[test]
fn double_decomposition_rejects_121323() {
    let m: Matching = "121323".parse().unwrap();
    assert!(decompose_double(&m).is_err());
}

#[test]
fn arc_diagrams_show_every_node_once() {
    for w in all_words(4) {
        let m = Matching::from_word(&w).unwrap();
        let text = render_arc_diagram(&m).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), m.n() + 1);
        let labels: Vec<&str> = lines.last().unwrap().split_whitespace().collect();
        let expected: Vec<String> = (1..=8).map(|v| v.to_string()).collect();
        assert_eq!(labels, expected);
        let plus: usize = lines.iter().map(|l| l.matches('+').count()).sum();
        assert_eq!(plus, 8, "{m}");
    }
}
