//! Partial patterns and pattern containment on canonical words.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matching::{write_word, Matching};

/// A normalized pattern word: letters first appear as 1, 2, 3, ... and each
/// letter occurs once or twice.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern {
    word: Vec<u32>,
    // whether each letter (index = letter - 1) occurs twice
    repeated: Vec<bool>,
}

impl Pattern {
    pub fn new(word: &[u32]) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::InvalidPattern("empty pattern".into()));
        }
        let mut counts: Vec<u32> = Vec::new();
        for (idx, &letter) in word.iter().enumerate() {
            let next = counts.len() as u32 + 1;
            if letter == 0 || letter > next {
                return Err(Error::InvalidPattern(format!(
                    "letter {letter} at position {} breaks first-occurrence order",
                    idx + 1
                )));
            }
            if letter == next {
                counts.push(1);
            } else {
                let c = &mut counts[letter as usize - 1];
                *c += 1;
                if *c > 2 {
                    return Err(Error::InvalidPattern(format!(
                        "letter {letter} occurs more than twice"
                    )));
                }
            }
        }
        Ok(Pattern { word: word.to_vec(), repeated: counts.iter().map(|&c| c == 2).collect() })
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Whether some subsequence of the matching's canonical word is
    /// order-isomorphic to this pattern.
    pub fn occurs_in(&self, matching: &Matching) -> bool {
        let word = matching.canonical_word();
        if self.word.len() > word.len() {
            return false;
        }
        let partner: Vec<usize> = (1..=word.len()).map(|v| matching.partner(v)).collect();
        let mut bound = vec![0usize; self.repeated.len()];
        self.extend(word, &partner, &mut bound, 0, 0, 0)
    }

    /// Backtracking matcher. `prev` is the 1-based word position of the last
    /// matched pattern letter (0 before the first), `top` the largest word
    /// label bound so far. New pattern letters are always larger than every
    /// bound letter, so they must bind to labels above `top`.
    fn extend(
        &self,
        word: &[u32],
        partner: &[usize],
        bound: &mut [usize],
        q: usize,
        prev: usize,
        top: u32,
    ) -> bool {
        if q == self.word.len() {
            return true;
        }
        let letter = self.word[q] as usize - 1;
        if bound[letter] != 0 {
            let second = partner[bound[letter] - 1];
            return second > prev && self.extend(word, partner, bound, q + 1, second, top);
        }
        let remaining = self.word.len() - q;
        let last = word.len() + 1 - remaining;
        for pos in prev + 1..=last {
            let label = word[pos - 1];
            if label <= top {
                continue;
            }
            if self.repeated[letter] && partner[pos - 1] < pos {
                continue;
            }
            bound[letter] = pos;
            if self.extend(word, partner, bound, q + 1, pos, label) {
                bound[letter] = 0;
                return true;
            }
        }
        bound[letter] = 0;
        false
    }

    /// True when the matching avoids every pattern in the set.
    pub fn avoided_by_all(patterns: &[Pattern], matching: &Matching) -> bool {
        patterns.iter().all(|p| !p.occurs_in(matching))
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let word: std::result::Result<Vec<u32>, _> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse::<u32>().map_err(|_| t.to_string())).collect()
        } else {
            s.chars().map(|c| c.to_digit(10).ok_or_else(|| c.to_string())).collect()
        };
        let word = word.map_err(|bad| Error::InvalidPattern(format!("bad letter '{bad}'")))?;
        Pattern::new(&word)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, &self.word, self.repeated.len() <= 9)
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern({self})")
    }
}

/// The six patterns sharing the generating tree of 12312.
pub const GENERATING_TREE_PATTERNS: [&str; 6] = ["12312", "12132", "12123", "12321", "12231", "12213"];

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    fn m(s: &str) -> Matching {
        s.parse().unwrap()
    }

    #[test]
    fn containment_examples() {
        assert!(p("12312").occurs_in(&m("123123")));
        assert!(!p("12312").occurs_in(&m("1122")));
        assert!(!p("12312").occurs_in(&m("123213")));
        assert!(p("121323").occurs_in(&m("121323")));
        assert!(p("1").occurs_in(&m("11")));
        assert!(!p("1").occurs_in(&m("")));
    }

    #[test]
    fn pattern_validation() {
        assert!(Pattern::new(&[]).is_err());
        assert!(Pattern::new(&[2, 1]).is_err());
        assert!(Pattern::new(&[1, 1, 1]).is_err());
        assert_eq!(p("121323").to_string(), "121323");
        assert!("12a".parse::<Pattern>().is_err());
    }
}
