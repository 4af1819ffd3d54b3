//! Exhaustive checks of the counting and bijection results, one function
//! per check, each returning a report instead of panicking.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigInt;
use serde::Serialize;

use crate::bijection::{
    all_oscillating_tableaux, all_paths, all_schroeder_paths, all_walks, phi, phi_inv, rho, rho_inv,
    tableau_of_walk, tau, tau_inv, walk_of_tableau, OscillatingTableau,
};
use crate::decompose::{
    critical_edge, critical_run_structure_holds, decompose_12312, decompose_double, pattern_121323,
    pattern_12312, recompose_12312, recompose_double, unique_double_crosser_holds,
};
use crate::enumerate::{avoiders, enumerate_matchings};
use crate::error::Result;
use crate::gentree::{level_counts, validate_lemma};
use crate::matching::Matching;
use crate::pattern::{Pattern, GENERATING_TREE_PATTERNS};
use crate::series::{
    catalan_k, closed_f, closed_g_coeff, corollary_identity_check, crossing_refined_12312, refined_double,
    solve_f, solve_f_sqrt, solve_g,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub criterion: u8,
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckReport {
    fn new(criterion: u8, name: &str, failures: Vec<String>, summary: String) -> Self {
        let pass = failures.is_empty();
        let detail = if pass { summary } else { failures.join("; ") };
        CheckReport { criterion, name: name.to_string(), pass, detail }
    }
}

/// Size bounds for each check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub ternary_counts: usize,
    pub crossing_refinement: usize,
    pub catalan_identity: usize,
    pub double_brute: usize,
    pub double_series: usize,
    pub narayana_refinement: usize,
    pub phi_semilength: usize,
    pub rho: usize,
    pub walks: usize,
    pub tree_depth: usize,
    pub tree_lemma: usize,
    pub decompositions: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            ternary_counts: 7,
            crossing_refinement: 6,
            catalan_identity: 20,
            double_brute: 4,
            double_series: 12,
            narayana_refinement: 6,
            phi_semilength: 6,
            rho: 5,
            walks: 6,
            tree_depth: 12,
            tree_lemma: 4,
            decompositions: 6,
        }
    }
}

impl Bounds {
    /// Default bounds with every exhaustive scan limited to `max_n`.
    /// Formula-only checks keep their defaults.
    pub fn capped(max_n: usize) -> Self {
        let d = Bounds::default();
        Bounds {
            ternary_counts: d.ternary_counts.min(max_n),
            crossing_refinement: d.crossing_refinement.min(max_n),
            double_brute: d.double_brute.min(max_n),
            narayana_refinement: d.narayana_refinement.min(max_n),
            phi_semilength: d.phi_semilength.min(max_n),
            rho: d.rho.min(max_n),
            walks: d.walks.min(max_n),
            tree_lemma: d.tree_lemma.min(max_n),
            decompositions: d.decompositions.min(max_n),
            ..d
        }
    }
}

fn one(s: &str) -> Vec<Pattern> {
    vec![s.parse().expect("valid pattern")]
}

fn double_patterns() -> Vec<Pattern> {
    vec![pattern_12312(), pattern_121323()]
}

fn crossing_histogram(n: usize, patterns: &[Pattern]) -> BTreeMap<usize, u64> {
    let mut hist = BTreeMap::new();
    for m in avoiders(n, patterns) {
        *hist.entry(m.crossing_count()).or_insert(0) += 1;
    }
    hist
}

pub fn ternary_counts(max_n: usize) -> CheckReport {
    let patterns = one("12312");
    let mut failures = Vec::new();
    let mut counts = Vec::new();
    for n in 1..=max_n {
        let brute = avoiders(n, &patterns).count();
        let formula = catalan_k(n as u64, 3);
        if BigInt::from(brute) != formula {
            failures.push(format!("n={n}: brute force {brute}, formula {formula}"));
        }
        counts.push(brute.to_string());
    }
    CheckReport::new(1, "12312-avoider counts", failures, format!("n=1..{max_n}: {}", counts.join(",")))
}

pub fn crossing_refinement(max_n: usize) -> CheckReport {
    let patterns = one("12312");
    let mut failures = Vec::new();
    let g = match solve_g(max_n) {
        Ok(g) => g,
        Err(e) => return CheckReport::new(2, "crossing refinement", vec![e.to_string()], String::new()),
    };
    for n in 1..=max_n {
        let hist = crossing_histogram(n, &patterns);
        let max_m = n * (n - 1) / 2;
        for m in 0..=max_m {
            let brute = BigInt::from(hist.get(&m).copied().unwrap_or(0));
            let values = [
                ("closed sum", crossing_refined_12312(n as u64, m as u64)),
                ("series", g.coeff(n, m)),
                ("closed coefficient", closed_g_coeff(n as u64, m as u64)),
            ];
            for (label, value) in values {
                match value {
                    Ok(v) if v == brute => {}
                    Ok(v) => failures.push(format!("n={n} m={m}: brute force {brute}, {label} {v}")),
                    Err(e) => failures.push(format!("n={n} m={m}: {label}: {e}")),
                }
            }
        }
    }
    CheckReport::new(2, "crossing refinement", failures, format!("n=1..{max_n}, all m"))
}

pub fn catalan_specialization(max_n: usize) -> CheckReport {
    let mut failures = Vec::new();
    for n in 1..=max_n as u64 {
        match crossing_refined_12312(n, 0) {
            Ok(v) if v == catalan_k(n, 2) => {}
            Ok(v) => failures.push(format!("n={n}: no-crossing count {v}, Catalan {}", catalan_k(n, 2))),
            Err(e) => failures.push(format!("n={n}: {e}")),
        }
        if !corollary_identity_check(n) {
            failures.push(format!("n={n}: identity fails"));
        }
    }
    CheckReport::new(3, "Catalan specialization", failures, format!("n=1..{max_n}"))
}

pub fn double_counts(max_brute: usize, max_series: usize) -> CheckReport {
    let patterns = double_patterns();
    let mut failures = Vec::new();
    let order = max_series.max(max_brute);
    let (rec, sqrt) = match (solve_f(order), solve_f_sqrt(order)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return CheckReport::new(4, "double-avoider counts", vec![e.to_string()], String::new()),
    };
    let rec = rec.integer_coeffs("F");
    let sqrt = sqrt.integer_coeffs("F");
    let (rec, sqrt) = match (rec, sqrt) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return CheckReport::new(4, "double-avoider counts", vec![e.to_string()], String::new()),
    };
    let mut values = Vec::new();
    for n in 0..=order {
        let closed = match closed_f(n as u64) {
            Ok(v) => v,
            Err(e) => {
                failures.push(format!("n={n}: {e}"));
                continue;
            }
        };
        if rec[n] != closed || sqrt[n] != closed {
            failures.push(format!("n={n}: recurrence {}, square root {}, binomial sum {closed}", rec[n], sqrt[n]));
        }
        if n <= max_brute {
            let brute = BigInt::from(avoiders(n, &patterns).count());
            if brute != closed {
                failures.push(format!("n={n}: brute force {brute}, formula {closed}"));
            }
        }
        values.push(closed.to_string());
    }
    CheckReport::new(4, "double-avoider counts", failures, format!("n=0..{order}: {}", values.join(",")))
}

pub fn narayana_refinement(max_n: usize) -> CheckReport {
    let patterns = double_patterns();
    let mut failures = Vec::new();
    for n in 1..=max_n {
        let hist = crossing_histogram(n, &patterns);
        for m in 0..=n * (n - 1) / 2 {
            let brute = BigInt::from(hist.get(&m).copied().unwrap_or(0));
            match refined_double(n as u64, m as u64) {
                Ok(v) if v == brute => {}
                Ok(v) => failures.push(format!("n={n} m={m}: brute force {brute}, formula {v}")),
                Err(e) => failures.push(format!("n={n} m={m}: {e}")),
            }
        }
    }
    CheckReport::new(5, "crossing refinement of double avoiders", failures, format!("n=1..{max_n}, all m"))
}

pub fn phi_bijection(max_semilength: usize) -> CheckReport {
    let patterns = double_patterns();
    let mut failures = Vec::new();
    for n in 0..=max_semilength {
        let mut images = HashSet::new();
        for p in all_schroeder_paths(n).into_iter().filter(|p| !p.has_low_peak()) {
            let m = match phi(&p) {
                Ok(m) => m,
                Err(e) => {
                    failures.push(format!("phi({p}): {e}"));
                    continue;
                }
            };
            if !Pattern::avoided_by_all(&patterns, &m) {
                failures.push(format!("phi({p}) = {m} is not a double avoider"));
            }
            if p.peaks().len() != m.crossing_count() {
                failures.push(format!("phi({p}) = {m}: {} peaks, {} crossings", p.peaks().len(), m.crossing_count()));
            }
            if phi_inv(&m).as_ref() != Ok(&p) {
                failures.push(format!("phi_inv(phi({p})) differs"));
            }
            if !images.insert(m.clone()) {
                failures.push(format!("phi not injective at {m}"));
            }
        }
        let targets: HashSet<Matching> = avoiders(n, &patterns).collect();
        if targets != images {
            failures.push(format!("n={n}: image has {} matchings, {} double avoiders", images.len(), targets.len()));
        }
        for m in &targets {
            match phi_inv(m).and_then(|p| phi(&p)) {
                Ok(back) if &back == m => {}
                _ => failures.push(format!("phi(phi_inv({m})) differs")),
            }
        }
    }
    let figure = Matching::from_edges(&[(1, 3), (2, 12), (4, 6), (5, 9), (7, 8), (10, 11)]);
    let path = "UUDDUUUDDHD".parse();
    match (figure, path) {
        (Ok(fig), Ok(path)) => {
            if phi(&path).as_ref() != Ok(&fig) || phi_inv(&fig).as_ref() != Ok(&path) {
                failures.push("worked example UUDDUUUDDHD does not reproduce".into());
            }
        }
        _ => failures.push("worked example failed to parse".into()),
    }
    CheckReport::new(6, "phi bijection", failures, format!("semilength 0..{max_semilength}"))
}

pub fn rho_bijection(max_n: usize) -> CheckReport {
    let pattern = one("12312");
    let mut failures = Vec::new();
    for n in 0..=max_n {
        for m in enumerate_matchings(n) {
            let t = rho_inv(&m);
            if rho(&t).as_ref() != Ok(&m) {
                failures.push(format!("rho(rho_inv({m})) differs"));
            }
        }
        let image: BTreeSet<OscillatingTableau> = avoiders(n, &pattern).map(|m| rho_inv(&m)).collect();
        let restricted: BTreeSet<OscillatingTableau> =
            all_oscillating_tableaux(2 * n).into_iter().filter(|t| t.is_restricted()).collect();
        if image != restricted {
            failures.push(format!("n={n}: {} images, {} restricted tableaux", image.len(), restricted.len()));
        }
    }
    let example: Result<(OscillatingTableau, Matching)> = "[];[1];[2];[2,1];[1,1];[1];[]"
        .parse()
        .and_then(|t| Ok((t, Matching::from_edges(&[(1, 5), (2, 4), (3, 6)])?)));
    match example {
        Ok((t, m)) if rho(&t).as_ref() == Ok(&m) && rho_inv(&m) == t => {}
        _ => failures.push("worked example does not reproduce".into()),
    }
    CheckReport::new(7, "rho bijection", failures, format!("n=0..{max_n}"))
}

pub fn walks_and_tau(max_n: usize) -> CheckReport {
    let mut failures = Vec::new();
    for n in 0..=max_n {
        let walks = all_walks(2 * n);
        let paths = all_paths(n);
        let expected = catalan_k(n as u64, 3);
        if BigInt::from(walks.len()) != expected || BigInt::from(paths.len()) != expected {
            failures.push(format!("n={n}: {} walks, {} paths, expected {expected}", walks.len(), paths.len()));
        }
        let mut images = HashSet::new();
        for w in &walks {
            let p = tau(w);
            if tau_inv(&p).as_ref() != Ok(w) {
                failures.push(format!("tau_inv(tau({w})) differs"));
            }
            images.insert(p);
            if walk_of_tableau(&tableau_of_walk(w)).as_ref() != Ok(w) {
                failures.push(format!("walk/tableau round trip fails on {w}"));
            }
        }
        if images.len() != paths.len() {
            failures.push(format!("n={n}: tau hits {} of {} paths", images.len(), paths.len()));
        }
    }
    for (w, p) in [("EEWW", "EEEENN"), ("ENSW", "EEENEN"), ("EWEW", "EENEEN")] {
        match w.parse() {
            Ok(walk) if tau(&walk).to_string() == p => {}
            _ => failures.push(format!("tau({w}) is not {p}")),
        }
    }
    CheckReport::new(8, "walks and tau", failures, format!("n=0..{max_n}"))
}

pub fn generating_tree(depth: usize, lemma_n: usize) -> CheckReport {
    let mut failures = Vec::new();
    for (idx, count) in level_counts(depth).iter().enumerate() {
        let n = idx as u64 + 1;
        let expected = catalan_k(n, 3);
        if BigInt::from(count.clone()) != expected {
            failures.push(format!("level {n}: {count}, expected {expected}"));
        }
    }
    for p in GENERATING_TREE_PATTERNS {
        let pattern: Pattern = p.parse().expect("valid pattern");
        match validate_lemma(&pattern, lemma_n) {
            Ok(report) if report.passed() => {}
            Ok(report) => failures.push(format!(
                "{p}: {} rule violations, {} coverage violations",
                report.rule_violations.len(),
                report.coverage_violations.len()
            )),
            Err(e) => failures.push(format!("{p}: {e}")),
        }
    }
    CheckReport::new(9, "generating tree", failures, format!("levels 1..{depth}, six patterns up to n={lemma_n}"))
}

pub fn decompositions(max_n: usize) -> CheckReport {
    let single = one("12312");
    let double = double_patterns();
    let mut failures = Vec::new();
    for n in 1..=max_n {
        for m in avoiders(n, &single) {
            match decompose_12312(&m).and_then(|d| recompose_12312(&d)) {
                Ok(back) if back == m => {}
                Ok(back) => failures.push(format!("{m} recomposes to {back}")),
                Err(e) => failures.push(format!("{m}: {e}")),
            }
            if matches!(critical_edge(&m), Ok(Some(_)))
                && !(critical_run_structure_holds(&m) && unique_double_crosser_holds(&m))
            {
                failures.push(format!("{m}: structure around the critical crossing fails"));
            }
        }
        for m in avoiders(n, &double) {
            match decompose_double(&m).and_then(|d| recompose_double(&d)) {
                Ok(back) if back == m => {}
                Ok(back) => failures.push(format!("{m} recomposes to {back}")),
                Err(e) => failures.push(format!("{m}: {e}")),
            }
        }
    }
    CheckReport::new(10, "decomposition round trips", failures, format!("n=1..{max_n}"))
}

pub fn verify_all(bounds: &Bounds) -> Vec<CheckReport> {
    vec![
        ternary_counts(bounds.ternary_counts),
        crossing_refinement(bounds.crossing_refinement),
        catalan_specialization(bounds.catalan_identity),
        double_counts(bounds.double_brute, bounds.double_series),
        narayana_refinement(bounds.narayana_refinement),
        phi_bijection(bounds.phi_semilength),
        rho_bijection(bounds.rho),
        walks_and_tau(bounds.walks),
        generating_tree(bounds.tree_depth, bounds.tree_lemma),
        decompositions(bounds.decompositions),
    ]
}
