//! Zeta functions of curves over finite fields.
//!
//! The counts `N_r = #C(F_{q^r})` of a genus-`g` curve are determined by
//! `N_1..N_g`. [`zeta`] reconstructs the numerator `P(T)` of the zeta
//! function from those counts and extends the sequence; [`curve`] counts
//! points by brute force so the reconstruction can be checked against an
//! independent oracle; [`bounds`] holds the Hasse-Weil-Serre bound, the
//! admissible elliptic cardinalities and Serre's `N_q(g)` for small `g`.

pub mod bounds;
pub mod curve;
pub mod diagnostics;
pub mod error;
pub mod exec;
pub mod finite_field;
pub mod survey;
pub mod zeta;

pub use diagnostics::{Diagnostic, Level};
pub use error::{Error, Result};
pub use exec::Execution;
pub use finite_field::PrimePower;
