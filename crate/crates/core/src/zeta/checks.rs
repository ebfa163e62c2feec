//! Consistency checks a genuine curve's data must pass.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::bootstrap::bootstrap_improved_rational;
use super::numerator::ZetaNumerator;
use super::sequences::{CountSequence, PowerSums};
use crate::error::{Error, Result};
use crate::finite_field::PrimePower;

fn weil_holds(q: PrimePower, genus: usize, r: usize, s: &BigRational) -> bool {
    let g = BigInt::from(genus);
    let bound = BigRational::from_integer(4 * &g * &g * q.big_pow(r as u32));
    s * s <= bound
}

/// Per index `r`, whether `S_r^2 <= 4 g^2 q^r`, a consequence of every
/// reciprocal root having absolute value `sqrt(q)`.
pub fn weil_bound_check(q: PrimePower, genus: usize, s: &PowerSums) -> Vec<bool> {
    s.sums()
        .iter()
        .enumerate()
        .map(|(i, sr)| weil_holds(q, genus, i + 1, &BigRational::from_integer(sr.clone())))
        .collect()
}

pub(crate) fn weil_bound_check_rational(
    q: PrimePower,
    genus: usize,
    s: &[BigRational],
) -> Vec<bool> {
    s.iter()
        .enumerate()
        .map(|(i, sr)| weil_holds(q, genus, i + 1, sr))
        .collect()
}

/// Truncated power series over the rationals, coefficient of `T^i` at `i`.
mod series {
    use num_rational::BigRational;
    use num_traits::Zero;

    pub fn mul(a: &[BigRational], b: &[BigRational], len: usize) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); len];
        for (i, x) in a.iter().enumerate().take(len) {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate().take(len - i) {
                out[i + j] += x * y;
            }
        }
        out
    }

    /// Inverse of a series with nonzero constant term.
    pub fn inverse(a: &[BigRational], len: usize) -> Vec<BigRational> {
        let a0_inv = a[0].recip();
        let mut out: Vec<BigRational> = Vec::with_capacity(len);
        out.push(a0_inv.clone());
        for n in 1..len {
            let mut acc = BigRational::zero();
            for k in 1..=n.min(a.len() - 1) {
                acc += &a[k] * &out[n - k];
            }
            out.push(-acc * &a0_inv);
        }
        out
    }

    /// `T * d/dT` applied termwise.
    pub fn euler_derivative(a: &[BigRational]) -> Vec<BigRational> {
        a.iter()
            .enumerate()
            .map(|(i, c)| c * BigRational::from_integer(i.into()))
            .collect()
    }
}

/// Builds `Z(T) = P(T) / ((1 - T)(1 - qT))` as a power series to order `k`,
/// takes `T Z'(T) / Z(T)` and compares its coefficients with `N_1..N_k`.
pub fn zeta_series_check(z: &ZetaNumerator, n: &CountSequence) -> bool {
    if z.q() != n.q() {
        return false;
    }
    let k = n.len();
    let len = k + 1;
    let one = BigRational::one();
    let q = BigRational::from_integer(BigInt::from(z.q().q()));

    let geometric = |ratio: &BigRational| -> Vec<BigRational> {
        let mut v = Vec::with_capacity(len);
        let mut term = one.clone();
        for _ in 0..len {
            v.push(term.clone());
            term = &term * ratio;
        }
        v
    };
    let zeta = series::mul(
        &series::mul(z.coeffs(), &geometric(&one), len),
        &geometric(&q),
        len,
    );
    let log_deriv = series::mul(
        &series::euler_derivative(&zeta),
        &series::inverse(&zeta, len),
        len,
    );

    debug_assert!(log_deriv[0].is_zero());
    n.counts()
        .iter()
        .enumerate()
        .all(|(i, nr)| log_deriv[i + 1] == BigRational::from_integer(nr.clone()))
}

/// Checks that `N_s, N_2s, ...` is itself the bootstrap of `F_{q^s}` fed
/// with `N_s, ..., N_gs`, for `j <= k`.
pub fn subsequence_check(q: PrimePower, x: &[BigInt], s: u32, k: usize) -> Result<bool> {
    if s == 0 {
        return Err(Error::InvalidArgument("stride must be at least 1".into()));
    }
    if x.is_empty() {
        return Err(Error::EmptyCounts);
    }
    let g = x.len();
    let stride = s as usize;
    let x: Vec<BigRational> = x.iter().cloned().map(BigRational::from_integer).collect();
    let long = bootstrap_improved_rational(q, &x, stride * k.max(g))?;
    let pick = |j: usize| long.values()[stride * j - 1].clone();

    let qs = q.pow(s)?;
    let seed: Vec<BigRational> = (1..=g).map(pick).collect();
    let short = bootstrap_improved_rational(qs, &seed, k)?;
    Ok(short
        .values()
        .iter()
        .enumerate()
        .all(|(i, v)| *v == pick(i + 1)))
}
