//! Groebner strata of Hilbert schemes of projective space.
//!
//! For an admissible Hilbert polynomial `P` and ambient dimension `n`, the
//! crate enumerates the torus-fixed monomial ideals `M_{P,n}`, writes down
//! the defining equations of each ideal's Groebner stratum in its
//! coordinates `T_{a,b}`, and decides whether the stratum is an affine cell
//! or singular at the monomial point. The per-ideal verdicts are assembled
//! into Betti tables, homology ranks, and lists of singular points.

pub mod algebra;
pub mod cli;
pub mod enumeration;
mod error;
pub mod hilbert;
pub mod notation;
pub mod oracle;
pub mod orders;
pub mod report;
pub mod stratum;
pub mod verify;

pub use error::{Error, Result};
