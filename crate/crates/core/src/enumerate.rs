//! Exhaustive enumeration of matchings and pattern avoiders.

use crate::matching::Matching;
use crate::pattern::Pattern;

/// Iterator over all `(2n-1)!!` matchings on `[2n]`.
///
/// The smallest unmatched node is paired with each larger unmatched node in
/// increasing order, recursively, so the output order is fixed.
pub struct Matchings {
    // partner[v - 1] for node v, 0 while unmatched
    partner: Vec<usize>,
    stack: Vec<(usize, usize)>,
    state: State,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

impl Matchings {
    pub fn new(n: usize) -> Self {
        Matchings { partner: vec![0; 2 * n], stack: Vec::with_capacity(n), state: State::Fresh }
    }

    fn next_free(&self, after: usize) -> Option<usize> {
        (after + 1..=self.partner.len()).find(|&v| self.partner[v - 1] == 0)
    }

    fn pair(&mut self, a: usize, b: usize) {
        self.partner[a - 1] = b;
        self.partner[b - 1] = a;
        self.stack.push((a, b));
    }

    fn fill(&mut self) {
        while let Some(a) = self.next_free(0) {
            let b = self.next_free(a).expect("even number of free nodes");
            self.pair(a, b);
        }
    }

    fn advance(&mut self) -> bool {
        while let Some((a, b)) = self.stack.pop() {
            self.partner[a - 1] = 0;
            self.partner[b - 1] = 0;
            if let Some(c) = self.next_free(b) {
                self.pair(a, c);
                self.fill();
                return true;
            }
        }
        false
    }
}

impl Iterator for Matchings {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        match self.state {
            State::Done => return None,
            State::Fresh => {
                self.fill();
                self.state = State::Running;
            }
            State::Running => {
                if !self.advance() {
                    self.state = State::Done;
                    return None;
                }
            }
        }
        Some(Matching::from_partners_unchecked(&self.partner))
    }
}

pub fn enumerate_matchings(n: usize) -> Matchings {
    Matchings::new(n)
}

/// Matchings on `[2n]` avoiding every pattern in `patterns`.
pub fn avoiders(n: usize, patterns: &[Pattern]) -> impl Iterator<Item = Matching> + '_ {
    Matchings::new(n).filter(move |m| Pattern::avoided_by_all(patterns, m))
}

/// `(2n-1)!!`.
pub fn double_factorial_odd(n: usize) -> u128 {
    (1..=n as u128).map(|k| 2 * k - 1).product()
}
