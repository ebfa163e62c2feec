//! Reconstruction of `N_r` for all `r` from a few initial counts.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use super::checks::weil_bound_check_rational;
use super::newton::{newton_c_from_s, next_power_sum};
use super::numerator::{power_sums_rational, symmetric_completion, ZetaNumerator};
use super::sequences::CountSequence;
use crate::diagnostics::{codes, Diagnostic};
use crate::error::{Error, Result};
use crate::finite_field::PrimePower;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Uses `N_1..N_g` and the functional-equation symmetry.
    Improved,
    /// Uses `N_1..N_{2g}` and no symmetry.
    Basic,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Improved => "improved",
            Method::Basic => "basic",
        })
    }
}

/// Output of a bootstrap run: the count sequence plus the numerator it
/// came from and validity diagnostics.
///
/// The recurrences are run over the rationals, so impossible inputs still
/// produce a sequence; [`Bootstrap::is_integral`] and
/// [`Bootstrap::weil_ok`] say whether it can belong to a curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bootstrap {
    q: PrimePower,
    genus: usize,
    method: Method,
    values: Vec<BigRational>,
    power_sums: Vec<BigRational>,
    numerator: ZetaNumerator,
    weil: Vec<bool>,
}

impl Bootstrap {
    pub fn q(&self) -> PrimePower {
        self.q
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn method(&self) -> Method {
        self.method
    }

    /// `N_1..N_k` as exact rationals.
    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn power_sums(&self) -> &[BigRational] {
        &self.power_sums
    }

    pub fn numerator(&self) -> &ZetaNumerator {
        &self.numerator
    }

    /// The sequence as integers, if every entry is integral.
    pub fn counts(&self) -> Option<CountSequence> {
        if !self.values.iter().all(|v| v.is_integer()) {
            return None;
        }
        CountSequence::new(self.q, self.values.iter().map(|v| v.to_integer()).collect()).ok()
    }

    /// Every `c_j` and every `N_r` has denominator 1.
    pub fn is_integral(&self) -> bool {
        self.numerator.is_integral() && self.values.iter().all(|v| v.is_integer())
    }

    /// `S_r^2 <= 4 g^2 q^r` per index.
    pub fn weil_verdicts(&self) -> &[bool] {
        &self.weil
    }

    pub fn weil_ok(&self) -> bool {
        self.weil.iter().all(|&ok| ok)
    }

    pub fn diagnostics(&self) -> Vec<Diagnostic> {
        let mut out = Vec::new();
        if !self.numerator.is_integral() {
            let bad: Vec<String> = self
                .numerator
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_integer())
                .map(|(j, c)| format!("c_{j} = {c}"))
                .collect();
            out.push(Diagnostic::warning(
                codes::NONINTEGRAL_C,
                format!("zeta numerator is not integral: {}", bad.join(", ")),
            ));
        }
        let failing: Vec<String> = self
            .weil
            .iter()
            .enumerate()
            .filter(|(_, ok)| !**ok)
            .map(|(i, _)| (i + 1).to_string())
            .collect();
        if !failing.is_empty() {
            out.push(Diagnostic::warning(
                codes::WEIL_FAIL,
                format!("|S_r| exceeds 2g*q^(r/2) at r = {}", failing.join(", ")),
            ));
        }
        if self.values.iter().any(|v| v.is_negative()) {
            out.push(Diagnostic::warning(
                codes::NEGATIVE_COUNT,
                "sequence has negative entries",
            ));
        }
        if self.method == Method::Basic && !self.numerator.satisfies_symmetry() {
            out.push(Diagnostic::warning(
                codes::SYMMETRY_FAIL,
                "coefficients violate c_{g+l} = q^l c_{g-l}",
            ));
        }
        out
    }
}

fn to_rational(xs: &[BigInt]) -> Vec<BigRational> {
    xs.iter().cloned().map(BigRational::from_integer).collect()
}

/// Runs the recurrences past the given prefix up to horizon `k`.
fn extend(
    q: PrimePower,
    genus: usize,
    method: Method,
    prefix: &[BigRational],
    c: Vec<BigRational>,
    k: usize,
) -> Result<Bootstrap> {
    let numerator = ZetaNumerator::from_coeffs(q, c)?;
    let known = prefix.len();
    let mut s = power_sums_rational(q, prefix);
    let mut values: Vec<BigRational> = prefix.to_vec();
    if k <= known {
        s.truncate(k);
        values.truncate(k);
    } else {
        let elementary = numerator.signed_elementary();
        for j in known + 1..=k {
            let sj = next_power_sum(elementary, &s, j);
            values.push(BigRational::from_integer(q.big_pow(j as u32) + 1) - &sj);
            s.push(sj);
        }
    }
    let weil = weil_bound_check_rational(q, genus, &s);
    Ok(Bootstrap {
        q,
        genus,
        method,
        values,
        power_sums: s,
        numerator,
        weil,
    })
}

pub(crate) fn bootstrap_improved_rational(
    q: PrimePower,
    x: &[BigRational],
    k: usize,
) -> Result<Bootstrap> {
    if x.is_empty() {
        return Err(Error::EmptyCounts);
    }
    if k == 0 {
        return Err(Error::InvalidArgument(
            "horizon k must be at least 1".into(),
        ));
    }
    let g = x.len();
    let low = newton_c_from_s(&power_sums_rational(q, x));
    extend(q, g, Method::Improved, x, symmetric_completion(q, &low), k)
}

/// `N_1..N_k` from `N_1..N_g`, taking the genus as `x.len()`.
///
/// For `k <= g` the input prefix is returned unchanged.
pub fn bootstrap_improved(q: PrimePower, x: &[BigInt], k: usize) -> Result<Bootstrap> {
    bootstrap_improved_rational(q, &to_rational(x), k)
}

/// As [`bootstrap_improved`], but asserts the genus explicitly.
pub fn bootstrap_improved_with_genus(
    q: PrimePower,
    x: &[BigInt],
    genus: usize,
    k: usize,
) -> Result<Bootstrap> {
    if x.len() != genus {
        return Err(Error::LengthMismatch {
            expected: genus,
            actual: x.len(),
        });
    }
    bootstrap_improved(q, x, k)
}

/// `N_1..N_k` from `N_1..N_{2g}` without using the functional equation.
pub fn bootstrap_basic(q: PrimePower, x: &[BigInt], genus: usize, k: usize) -> Result<Bootstrap> {
    if genus == 0 {
        return Err(Error::InvalidArgument("genus must be at least 1".into()));
    }
    if x.len() != 2 * genus {
        return Err(Error::LengthMismatch {
            expected: 2 * genus,
            actual: x.len(),
        });
    }
    if k == 0 {
        return Err(Error::InvalidArgument(
            "horizon k must be at least 1".into(),
        ));
    }
    let x = to_rational(x);
    let mut c = vec![BigRational::from_integer(1.into())];
    c.extend(newton_c_from_s(&power_sums_rational(q, &x)));
    extend(q, genus, Method::Basic, &x, c, k)
}
