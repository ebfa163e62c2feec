//! Girard-Newton identities between power sums `S_j` and the signed
//! elementary symmetric functions `c_j = (-1)^j e_j` of `n` roots:
//!
//! * for `1 <= j <= n`: `S_j + c_1 S_{j-1} + ... + c_{j-1} S_1 + j c_j = 0`
//! * for `j > n`:       `S_j + c_1 S_{j-1} + ... + c_n S_{j-n} = 0`
//!
//! Slices are 0-based: `c[0]` is `c_1` and `s[0]` is `S_1`.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// `c_1..c_m` from `S_1..S_m`.
pub fn newton_c_from_s(s: &[BigRational]) -> Vec<BigRational> {
    let mut c: Vec<BigRational> = Vec::with_capacity(s.len());
    for j in 1..=s.len() {
        let mut acc = s[j - 1].clone();
        for i in 1..j {
            acc += &c[i - 1] * &s[j - i - 1];
        }
        c.push(-acc / BigRational::from_integer(j.into()));
    }
    c
}

/// `S_j` from `c_1..c_n` and `S_1..S_{j-1}`, for any `j >= 1`.
///
/// Uses the short identity when `j <= n` (the `j c_j` term) and the full
/// length-`n` recurrence beyond.
pub fn next_power_sum(c: &[BigRational], s: &[BigRational], j: usize) -> BigRational {
    debug_assert!(j >= 1 && s.len() >= j - 1);
    let n = c.len();
    let mut acc = if j <= n {
        &c[j - 1] * BigRational::from_integer(j.into())
    } else {
        BigRational::zero()
    };
    for i in 1..=(j - 1).min(n) {
        acc += &c[i - 1] * &s[j - i - 1];
    }
    -acc
}

/// `S_j = -(c_1 S_{j-1} + ... + c_n S_{j-n})` for `j > n`.
pub fn newton_extend_s(c: &[BigRational], s: &[BigRational], j: usize) -> Result<BigRational> {
    if j <= c.len() {
        return Err(Error::InvalidArgument(format!(
            "target index {j} must exceed the number of coefficients {}",
            c.len()
        )));
    }
    if s.len() < j - 1 {
        return Err(Error::LengthMismatch {
            expected: j - 1,
            actual: s.len(),
        });
    }
    Ok(next_power_sum(c, s, j))
}
