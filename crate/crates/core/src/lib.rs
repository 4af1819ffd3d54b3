//! Pattern-avoiding perfect matchings: enumeration, structural
//! decompositions, bijections with lattice paths and oscillating tableaux,
//! generating trees, and exact counting formulas.

pub mod bijection;
pub mod decompose;
pub mod enumerate;
pub mod error;
pub mod gentree;
pub mod matching;
pub mod pattern;
pub mod render;
pub mod series;
pub mod sites;
pub mod verify;

pub use error::{Error, Result};
pub use matching::Matching;
pub use pattern::Pattern;
