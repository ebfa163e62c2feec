//! Zeta numerators and the bootstrap of point counts.
//!
//! For a curve of genus `g` over `F_q`, `N_r = q^r + 1 - S_r` where `S_r`
//! is the `r`-th power sum of the reciprocal roots of `P(T)`. The counts
//! `N_1..N_g` fix `c_1..c_g` through the Newton identities, the
//! functional equation fixes `c_{g+1}..c_{2g}`, and the full recurrence
//! then yields every later `S_r`.

mod bootstrap;
mod checks;
mod newton;
mod numerator;
mod sequences;

pub use bootstrap::{
    bootstrap_basic, bootstrap_improved, bootstrap_improved_with_genus, Bootstrap, Method,
};
pub use checks::{subsequence_check, weil_bound_check, zeta_series_check};
pub use newton::{newton_c_from_s, newton_extend_s, next_power_sum};
pub use numerator::{zeta_numerator, ZetaNumerator};
pub use sequences::{counts_to_power_sums, CountSequence, PowerSums};
