//! Bijections between pattern-avoiding matchings and paths, walks and
//! tableaux.

pub mod schroeder;
pub mod tableau;
pub mod walk;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use schroeder::{all_schroeder_paths, phi, phi_inv, FirstReturn, Peak, SchroederPath, SchroederStep};
pub use tableau::{all_oscillating_tableaux, rho, rho_inv, OscillatingTableau, Shape, StandardTableau};
pub use walk::{
    all_paths, all_walks, tableau_of_walk, tau, tau_inv, walk_of_tableau, LatticePath, LatticeWalk, PathStep,
    WalkStep,
};

use crate::error::{Error, Result};
use crate::matching::Matching;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Map {
    /// Schröder path without low peaks -> matching.
    Phi,
    /// Oscillating tableau -> matching.
    Rho,
    /// Lattice walk -> lattice path.
    Tau,
    /// Restricted oscillating tableau -> lattice walk.
    Walk,
}

impl Map {
    pub fn name(self) -> &'static str {
        match self {
            Map::Phi => "phi",
            Map::Rho => "rho",
            Map::Tau => "tau",
            Map::Walk => "walk",
        }
    }
}

impl fmt::Display for Map {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Map {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "phi" => Ok(Map::Phi),
            "rho" => Ok(Map::Rho),
            "tau" => Ok(Map::Tau),
            "walk" => Ok(Map::Walk),
            other => Err(Error::Parse { position: 1, reason: format!("unknown map '{other}'") }),
        }
    }
}

/// Result of applying a map and its inverse to one input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RoundTrip {
    pub map: String,
    pub input: String,
    pub output: String,
    pub roundtrip: bool,
}

/// Applies `map` (or its inverse) to the text form of an input and checks
/// that the opposite direction brings it back.
pub fn apply(map: Map, input: &str, inverse: bool) -> Result<RoundTrip> {
    let (output, back) = match (map, inverse) {
        (Map::Phi, false) => {
            let p: SchroederPath = input.parse()?;
            let m = phi(&p)?;
            (m.to_string(), phi_inv(&m)?.to_string())
        }
        (Map::Phi, true) => {
            let m: Matching = input.parse()?;
            let p = phi_inv(&m)?;
            (p.to_string(), phi(&p)?.to_string())
        }
        (Map::Rho, false) => {
            let t: OscillatingTableau = input.parse()?;
            let m = rho(&t)?;
            (m.to_string(), rho_inv(&m).to_string())
        }
        (Map::Rho, true) => {
            let m: Matching = input.parse()?;
            let t = rho_inv(&m);
            (t.to_string(), rho(&t)?.to_string())
        }
        (Map::Tau, false) => {
            let w: LatticeWalk = input.parse()?;
            let p = tau(&w);
            (p.to_string(), tau_inv(&p)?.to_string())
        }
        (Map::Tau, true) => {
            let p: LatticePath = input.parse()?;
            let w = tau_inv(&p)?;
            (w.to_string(), tau(&w).to_string())
        }
        (Map::Walk, false) => {
            let t: OscillatingTableau = input.parse()?;
            let w = walk_of_tableau(&t)?;
            (w.to_string(), tableau_of_walk(&w).to_string())
        }
        (Map::Walk, true) => {
            let w: LatticeWalk = input.parse()?;
            let t = tableau_of_walk(&w);
            (t.to_string(), walk_of_tableau(&t)?.to_string())
        }
    };
    let canonical_input = canonical_text(map, input, inverse)?;
    Ok(RoundTrip { map: map.name().to_string(), input: canonical_input.clone(), output, roundtrip: back == canonical_input })
}

/// Re-renders the input in its canonical text form so that round trips
/// compare equal regardless of whitespace or digit/comma choice.
fn canonical_text(map: Map, input: &str, inverse: bool) -> Result<String> {
    Ok(match (map, inverse) {
        (Map::Phi, false) => input.parse::<SchroederPath>()?.to_string(),
        (Map::Phi, true) | (Map::Rho, true) => input.parse::<Matching>()?.to_string(),
        (Map::Rho, false) | (Map::Walk, false) => input.parse::<OscillatingTableau>()?.to_string(),
        (Map::Tau, false) | (Map::Walk, true) => input.parse::<LatticeWalk>()?.to_string(),
        (Map::Tau, true) => input.parse::<LatticePath>()?.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn certificates() {
        let rt = apply(Map::Tau, "ENSW", false).unwrap();
        assert_eq!(rt, RoundTrip { map: "tau".into(), input: "ENSW".into(), output: "EEENEN".into(), roundtrip: true });
        let rt = apply(Map::Phi, "UUDDUUUDDHD", false).unwrap();
        assert_eq!(rt.output, "121343554662");
        assert!(rt.roundtrip);
        let rt = apply(Map::Rho, "[];[1];[2];[2,1];[1,1];[1];[]", false).unwrap();
        assert_eq!(rt.output, "123213");
        assert!(apply(Map::Walk, "EENWSW", true).unwrap().roundtrip);
        assert!(apply(Map::Phi, "UD", false).is_err());
        assert!("psi".parse::<Map>().is_err());
    }
}
