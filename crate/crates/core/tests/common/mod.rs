//! Brute-force reference implementations used only by the tests. None of
//! these call into the library beyond `Matching` construction.

#![allow(dead_code)]

use std::collections::BTreeMap;

/// All canonical words of matchings on `[2n]`, built position by position:
/// each position either opens the next label or closes an open one.
pub fn all_words(n: usize) -> Vec<Vec<u32>> {
    fn rec(n: usize, word: &mut Vec<u32>, open: &mut Vec<u32>, next: u32, out: &mut Vec<Vec<u32>>) {
        if word.len() == 2 * n {
            out.push(word.clone());
            return;
        }
        if (next as usize) <= n {
            word.push(next);
            open.push(next);
            rec(n, word, open, next + 1, out);
            open.pop();
            word.pop();
        }
        for idx in 0..open.len() {
            let label = open.remove(idx);
            word.push(label);
            rec(n, word, open, next, out);
            word.pop();
            open.insert(idx, label);
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut Vec::new(), 1, &mut out);
    out
}

/// Edges `(i, j)`, 1-based, read off a canonical word.
pub fn edges_of(word: &[u32]) -> Vec<(usize, usize)> {
    let mut first = BTreeMap::new();
    let mut edges = Vec::new();
    for (idx, &label) in word.iter().enumerate() {
        match first.remove(&label) {
            Some(i) => edges.push((i, idx + 1)),
            None => {
                first.insert(label, idx + 1);
            }
        }
    }
    edges.sort();
    edges
}

/// Number of pairs `(i, j), (k, l)` with `i < k < j < l`.
pub fn crossings(word: &[u32]) -> usize {
    let edges = edges_of(word);
    let mut count = 0;
    for &(i, j) in &edges {
        for &(k, l) in &edges {
            if i < k && k < j && j < l {
                count += 1;
            }
        }
    }
    count
}

/// True when some subsequence of `word` is order-isomorphic to `pattern`,
/// checked over every index subset.
pub fn contains(word: &[u32], pattern: &[u32]) -> bool {
    let k = pattern.len();
    if k > word.len() {
        return false;
    }
    let n = word.len();
    let mut idx: Vec<usize> = (0..k).collect();
    'subsets: loop {
        let iso = (0..k).all(|a| (0..k).all(|b| word[idx[a]].cmp(&word[idx[b]]) == pattern[a].cmp(&pattern[b])));
        if iso {
            return true;
        }
        let mut i = k;
        while i > 0 {
            i -= 1;
            if idx[i] != i + n - k {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                continue 'subsets;
            }
        }
        return false;
    }
}

pub fn digits(s: &str) -> Vec<u32> {
    s.chars().map(|c| c.to_digit(10).unwrap()).collect()
}

pub fn binom(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

/// `binom(3n, n) / (2n + 1)`.
pub fn ternary_catalan(n: u64) -> u128 {
    binom(3 * n, n) / (2 * n as u128 + 1)
}

pub fn catalan(n: u64) -> u128 {
    binom(2 * n, n) / (n as u128 + 1)
}

/// Schröder paths of semilength `n` without peaks at height one, by a
/// dynamic program over (height, last step was an up step at height one).
pub fn no_low_peak_schroeder(n: usize) -> u128 {
    // state: half-units used, height, whether last step is U reaching height 1
    let len = 2 * n;
    let mut table = vec![vec![[0u128; 2]; len + 2]; len + 1];
    table[0][0][0] = 1;
    for used in 0..len {
        for h in 0..=len {
            for flag in 0..2 {
                let c = table[used][h][flag];
                if c == 0 {
                    continue;
                }
                // U
                if h < len {
                    let f = usize::from(h == 0);
                    table[used + 1][h + 1][f] += c;
                }
                // D, forbidden right after a U at height one
                if h > 0 && flag == 0 {
                    table[used + 1][h - 1][0] += c;
                }
                // H
                if used + 2 <= len {
                    table[used + 2][h][0] += c;
                }
            }
        }
    }
    table[len][0][0] + table[len][0][1]
}
