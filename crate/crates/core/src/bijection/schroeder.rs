//! Schröder paths and the bijection `phi` onto {12312, 121323}-avoiders.

use std::fmt;
use std::str::FromStr;

use crate::decompose::{decompose_double, recompose_double, DecompositionDouble};
use crate::error::{Error, Result};
use crate::matching::Matching;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SchroederStep {
    /// `(1, 1)`
    U,
    /// `(1, -1)`
    D,
    /// `(2, 0)`
    H,
}

/// A path of `U`, `D`, `H` steps from height 0 back to height 0 that never
/// goes below the axis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SchroederPath {
    steps: Vec<SchroederStep>,
}

/// A peak: a `U` immediately followed by `D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Peak {
    /// 1-based index of the `U` step.
    pub position: usize,
    /// Height reached by the `U` step.
    pub level: usize,
}

/// First return decomposition `P = H P'` or `P = U P' D P''`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FirstReturn {
    Flat(SchroederPath),
    Lift(SchroederPath, SchroederPath),
}

impl SchroederPath {
    pub fn new(steps: Vec<SchroederStep>) -> Result<Self> {
        let mut height: i64 = 0;
        for (idx, step) in steps.iter().enumerate() {
            height += match step {
                SchroederStep::U => 1,
                SchroederStep::D => -1,
                SchroederStep::H => 0,
            };
            if height < 0 {
                return Err(Error::InvalidPath(format!("goes below the axis at step {}", idx + 1)));
            }
        }
        if height != 0 {
            return Err(Error::InvalidPath(format!("ends at height {height}")));
        }
        Ok(SchroederPath { steps })
    }

    pub fn empty() -> Self {
        SchroederPath::default()
    }

    pub fn steps(&self) -> &[SchroederStep] {
        &self.steps
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Half the horizontal length.
    pub fn semilength(&self) -> usize {
        self.steps
            .iter()
            .map(|s| match s {
                SchroederStep::U => 1,
                SchroederStep::D => 0,
                SchroederStep::H => 1,
            })
            .sum()
    }

    pub fn peaks(&self) -> Vec<Peak> {
        let mut out = Vec::new();
        let mut height = 0usize;
        for (idx, step) in self.steps.iter().enumerate() {
            match step {
                SchroederStep::U => {
                    height += 1;
                    if self.steps.get(idx + 1) == Some(&SchroederStep::D) {
                        out.push(Peak { position: idx + 1, level: height });
                    }
                }
                SchroederStep::D => height -= 1,
                SchroederStep::H => {}
            }
        }
        out
    }

    pub fn has_low_peak(&self) -> bool {
        self.peaks().iter().any(|p| p.level == 1)
    }

    pub fn first_return(&self) -> Result<FirstReturn> {
        match self.steps.first() {
            None => Err(Error::InvalidPath("empty path has no first return decomposition".into())),
            Some(SchroederStep::H) => Ok(FirstReturn::Flat(SchroederPath { steps: self.steps[1..].to_vec() })),
            Some(SchroederStep::D) => unreachable!("validated path starts at height 0"),
            Some(SchroederStep::U) => {
                let mut height = 0i64;
                for (idx, step) in self.steps.iter().enumerate() {
                    height += match step {
                        SchroederStep::U => 1,
                        SchroederStep::D => -1,
                        SchroederStep::H => 0,
                    };
                    if height == 0 {
                        let inner = SchroederPath { steps: self.steps[1..idx].to_vec() };
                        let rest = SchroederPath { steps: self.steps[idx + 1..].to_vec() };
                        return Ok(FirstReturn::Lift(inner, rest));
                    }
                }
                unreachable!("validated path returns to the axis")
            }
        }
    }

    /// Splits a path at the `UD` factors that start on its base level.
    fn split_at_base_peaks(&self) -> Vec<SchroederPath> {
        let mut blocks = vec![Vec::new()];
        let mut height = 0usize;
        let mut idx = 0;
        while idx < self.steps.len() {
            let step = self.steps[idx];
            if height == 0 && step == SchroederStep::U && self.steps.get(idx + 1) == Some(&SchroederStep::D) {
                blocks.push(Vec::new());
                idx += 2;
                continue;
            }
            match step {
                SchroederStep::U => height += 1,
                SchroederStep::D => height -= 1,
                SchroederStep::H => {}
            }
            blocks.last_mut().expect("nonempty").push(step);
            idx += 1;
        }
        blocks.into_iter().map(|steps| SchroederPath { steps }).collect()
    }
}

impl FromStr for SchroederPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .enumerate()
            .map(|(idx, c)| match c {
                'U' => Ok(SchroederStep::U),
                'D' => Ok(SchroederStep::D),
                'H' => Ok(SchroederStep::H),
                _ => Err(Error::Parse { position: idx + 1, reason: format!("'{c}' is not U, D or H") }),
            })
            .collect::<Result<Vec<_>>>()?;
        SchroederPath::new(steps)
    }
}

impl fmt::Display for SchroederPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            f.write_str(match step {
                SchroederStep::U => "U",
                SchroederStep::D => "D",
                SchroederStep::H => "H",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for SchroederPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SchroederPath({self})")
    }
}

/// Maps a Schröder path without low peaks to a {12312, 121323}-avoiding
/// matching on `[2 * semilength]`.
pub fn phi(path: &SchroederPath) -> Result<Matching> {
    if path.has_low_peak() {
        return Err(Error::LowPeak);
    }
    Ok(phi_unchecked(path))
}

fn phi_unchecked(path: &SchroederPath) -> Matching {
    let decomposition = match path.first_return() {
        Err(_) => return Matching::empty(),
        Ok(FirstReturn::Flat(rest)) => {
            DecompositionDouble { m: 0, thetas: vec![Matching::empty()], beta: phi_unchecked(&rest) }
        }
        Ok(FirstReturn::Lift(inner, rest)) => {
            let blocks = inner.split_at_base_peaks();
            DecompositionDouble {
                m: blocks.len() - 1,
                thetas: blocks.iter().map(phi_unchecked).collect(),
                beta: phi_unchecked(&rest),
            }
        }
    };
    recompose_double(&decomposition).expect("theta count is m + 1 by construction")
}

/// Inverse of [`phi`].
pub fn phi_inv(m: &Matching) -> Result<SchroederPath> {
    let mut steps = Vec::with_capacity(m.size());
    phi_inv_into(m, &mut steps)?;
    SchroederPath::new(steps)
}

fn phi_inv_into(m: &Matching, out: &mut Vec<SchroederStep>) -> Result<()> {
    if m.is_empty() {
        return Ok(());
    }
    let d = decompose_double(m)?;
    if d.m == 0 && d.thetas[0].is_empty() {
        out.push(SchroederStep::H);
    } else {
        out.push(SchroederStep::U);
        for (idx, theta) in d.thetas.iter().enumerate() {
            if idx > 0 {
                out.extend([SchroederStep::U, SchroederStep::D]);
            }
            phi_inv_into(theta, out)?;
        }
        out.push(SchroederStep::D);
    }
    phi_inv_into(&d.beta, out)
}

/// All Schröder paths of the given semilength, in lexicographic step order.
pub fn all_schroeder_paths(semilength: usize) -> Vec<SchroederPath> {
    fn rec(remaining: usize, height: usize, prefix: &mut Vec<SchroederStep>, out: &mut Vec<SchroederPath>) {
        // `remaining` counts half-units of horizontal length left
        if remaining == 0 {
            if height == 0 {
                out.push(SchroederPath { steps: prefix.clone() });
            }
            return;
        }
        if height < remaining {
            prefix.push(SchroederStep::U);
            rec(remaining - 1, height + 1, prefix, out);
            prefix.pop();
        }
        if height > 0 {
            prefix.push(SchroederStep::D);
            rec(remaining - 1, height - 1, prefix, out);
            prefix.pop();
        }
        if remaining >= 2 && height + 2 <= remaining {
            prefix.push(SchroederStep::H);
            rec(remaining - 2, height, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(2 * semilength, 0, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(s: &str) -> SchroederPath {
        s.parse().unwrap()
    }

    fn m(s: &str) -> Matching {
        s.parse().unwrap()
    }

    #[test]
    fn peak_examples() {
        let p = path("UUDDUUUDDHD");
        assert_eq!(
            p.peaks(),
            vec![Peak { position: 2, level: 2 }, Peak { position: 7, level: 3 }]
        );
        assert!(!p.has_low_peak());
        assert_eq!(path("UD").peaks(), vec![Peak { position: 1, level: 1 }]);
        assert!(path("UD").has_low_peak());
        assert!(path("").peaks().is_empty());
    }

    #[test]
    fn first_return_examples() {
        assert_eq!(path("HUD").first_return().unwrap(), FirstReturn::Flat(path("UD")));
        assert_eq!(path("UUDD").first_return().unwrap(), FirstReturn::Lift(path("UD"), path("")));
        assert_eq!(path("UDUD").first_return().unwrap(), FirstReturn::Lift(path(""), path("UD")));
        assert!(path("").first_return().is_err());
    }

    #[test]
    fn path_validation() {
        assert!("DU".parse::<SchroederPath>().is_err());
        assert!("UU".parse::<SchroederPath>().is_err());
        assert!("UX".parse::<SchroederPath>().is_err());
        assert_eq!(path("UUDDUUUDDHD").semilength(), 6);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&path("")).unwrap(), Matching::empty());
        assert_eq!(phi(&path("UUDD")).unwrap(), m("1212"));
        let fig = Matching::from_edges(&[(1, 3), (2, 12), (4, 6), (5, 9), (7, 8), (10, 11)]).unwrap();
        assert_eq!(phi(&path("UUDDUUUDDHD")).unwrap(), fig);
        assert_eq!(phi_inv(&fig).unwrap(), path("UUDDUUUDDHD"));
        assert_eq!(phi_inv(&m("1212")).unwrap(), path("UUDD"));
        assert_eq!(phi(&path("UD")), Err(Error::LowPeak));
    }

    #[test]
    fn phi_on_semilength_two() {
        let images: Vec<String> = ["UUDD", "UHD", "HH"]
            .iter()
            .map(|p| phi(&path(p)).unwrap().to_string())
            .collect();
        let mut sorted = images.clone();
        sorted.sort();
        assert_eq!(sorted, ["1122", "1212", "1221"]);
        assert_eq!(phi_inv(&m("1122")).unwrap().to_string(), "UHD");
        assert!(phi_inv(&m("121323")).is_err());
    }

    #[test]
    fn schroeder_counts() {
        // large Schröder numbers
        let counts: Vec<usize> = (0..6).map(|n| all_schroeder_paths(n).len()).collect();
        assert_eq!(counts, [1, 2, 6, 22, 90, 394]);
    }
}
