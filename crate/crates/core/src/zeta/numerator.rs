use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::newton::newton_c_from_s;
use crate::error::{Error, Result};
use crate::finite_field::PrimePower;

/// The numerator `P(T) = c_0 + c_1 T + ... + c_{2g} T^{2g}` of a zeta function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaNumerator {
    q: PrimePower,
    genus: usize,
    coeffs: Vec<BigRational>,
    integral: bool,
}

impl ZetaNumerator {
    /// Wrap explicit coefficients `c_0..c_{2g}`; `c_0` must be 1.
    pub fn from_coeffs(q: PrimePower, coeffs: Vec<BigRational>) -> Result<Self> {
        if coeffs.len().is_multiple_of(2) {
            return Err(Error::InvalidArgument(format!(
                "a numerator needs an odd number of coefficients, got {}",
                coeffs.len()
            )));
        }
        if !coeffs[0].is_one() {
            return Err(Error::InvalidArgument(
                "constant coefficient must be 1".into(),
            ));
        }
        let integral = coeffs.iter().all(|c| c.is_integer());
        let genus = (coeffs.len() - 1) / 2;
        Ok(ZetaNumerator {
            q,
            genus,
            coeffs,
            integral,
        })
    }

    pub fn from_integers(q: PrimePower, coeffs: &[i64]) -> Result<Self> {
        Self::from_coeffs(
            q,
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn q(&self) -> PrimePower {
        self.q
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// `c_1..c_{2g}`, the input shape of the Newton recurrences.
    pub fn signed_elementary(&self) -> &[BigRational] {
        &self.coeffs[1..]
    }

    pub fn is_integral(&self) -> bool {
        self.integral
    }

    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.integral
            .then(|| self.coeffs.iter().map(|c| c.to_integer()).collect())
    }

    /// `c_{g+l} = q^l c_{g-l}` for `l = 1..g`.
    pub fn satisfies_symmetry(&self) -> bool {
        let g = self.genus;
        (1..=g).all(|l| {
            let ql = BigRational::from_integer(self.q.big_pow(l as u32));
            self.coeffs[g + l] == ql * &self.coeffs[g - l]
        })
    }

    /// `c_{2g} = q^g`.
    pub fn leading_is_q_to_genus(&self) -> bool {
        self.coeffs[2 * self.genus] == BigRational::from_integer(self.q.big_pow(self.genus as u32))
    }

    /// Evaluate `P(t)` at a rational point.
    pub fn eval(&self, t: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * t + c)
    }
}

/// Completes `c_1..c_g` to `c_0..c_{2g}` through `c_{g+l} = q^l c_{g-l}`.
pub(crate) fn symmetric_completion(q: PrimePower, low: &[BigRational]) -> Vec<BigRational> {
    let g = low.len();
    let mut c = Vec::with_capacity(2 * g + 1);
    c.push(BigRational::one());
    c.extend_from_slice(low);
    for l in 1..=g {
        let ql = BigRational::from_integer(q.big_pow(l as u32));
        let v = ql * &c[g - l];
        c.push(v);
    }
    c
}

pub(crate) fn power_sums_rational(q: PrimePower, counts: &[BigRational]) -> Vec<BigRational> {
    counts
        .iter()
        .enumerate()
        .map(|(i, n)| BigRational::from_integer(q.big_pow(i as u32 + 1) + 1) - n)
        .collect()
}

pub(crate) fn numerator_from_rational(
    q: PrimePower,
    counts: &[BigRational],
) -> Result<ZetaNumerator> {
    if counts.is_empty() {
        return Err(Error::EmptyCounts);
    }
    let s = power_sums_rational(q, counts);
    let low = newton_c_from_s(&s);
    ZetaNumerator::from_coeffs(q, symmetric_completion(q, &low))
}

/// `P(T)` from the first `g` counts; the genus is `counts.len()`.
pub fn zeta_numerator(q: PrimePower, counts: &[BigInt]) -> Result<ZetaNumerator> {
    let counts: Vec<BigRational> = counts
        .iter()
        .cloned()
        .map(BigRational::from_integer)
        .collect();
    numerator_from_rational(q, &counts)
}
