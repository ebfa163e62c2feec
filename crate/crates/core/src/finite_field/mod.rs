//! Prime fields and their extensions `F_{p^n} = F_p[x]/(f)`.

mod field;
mod poly;
mod prime;
mod tables;

pub use field::{
    element_arithmetic, enumerate_elements, find_irreducible, is_irreducible, residue_inverse,
    solve_in_field, ArithOp, FieldCtx, FieldElement,
};
pub use poly::FpPoly;
pub use prime::{is_prime, PrimePower};
pub use tables::{LogTables, MAX_TABLE_SIZE};

pub(crate) use poly::write_poly as write_coeffs;
pub(crate) use prime::{checked_pow, mul_mod};
