//! Upper bounds and admissible values for `#C(F_q)`.
//!
//! Everything here is integer arithmetic. `m = floor(2 sqrt(q))` is
//! computed as `isqrt_floor(4q)`, and the one irrational comparison in the
//! genus-2 formula is decided by clearing radicals.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::finite_field::PrimePower;

/// Largest `s` with `s^2 <= n`, by integer Newton iteration.
pub fn isqrt_floor(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let bits = 128 - n.leading_zeros();
    // 2^ceil(bits/2) is at least sqrt(n), so the iteration decreases to it.
    let mut x: u128 = 1 << bits.div_ceil(2);
    loop {
        let y = (x + n / x) / 2;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// `m = floor(2 sqrt(q))`.
pub fn hws_width(q: PrimePower) -> u128 {
    isqrt_floor(4 * q.q() as u128)
}

/// `q + 1 + g m`.
pub fn hws_bound(q: PrimePower, genus: u32) -> u128 {
    q.q() as u128 + 1 + genus as u128 * hws_width(q)
}

/// Whether some elliptic curve over `F_q` has trace `t`, i.e. `q + 1 - t`
/// points (Waterhouse's classification).
pub fn is_admissible_trace(q: PrimePower, t: i128) -> bool {
    let m = hws_width(q) as i128;
    if t.abs() > m {
        return false;
    }
    let (p, n) = (q.p() as i128, q.e());
    if t % p != 0 {
        return true;
    }
    let a = t.abs();
    if n % 2 == 0 {
        let root = (q.p() as i128).pow(n / 2);
        (a == 2 * root) || (a == root && p % 3 != 1) || (t == 0 && p % 4 != 1)
    } else {
        (t == 0) || ((p == 2 || p == 3) && a == p.pow(n.div_ceil(2)))
    }
}

/// The admissible traces in `[-m, m]`, ascending.
pub fn deuring_offsets(q: PrimePower) -> Vec<i128> {
    let m = hws_width(q) as i128;
    (-m..=m).filter(|&t| is_admissible_trace(q, t)).collect()
}

/// `q + 1 + t` over the admissible traces, ascending. By the symmetry of
/// the trace set this is also the set of possible `#E(F_q)`.
pub fn deuring_set(q: PrimePower) -> Vec<u128> {
    let base = q.q() as i128 + 1;
    deuring_offsets(q)
        .into_iter()
        .map(|t| (base + t) as u128)
        .collect()
}

/// Largest element of [`deuring_set`] without materializing it.
pub fn deuring_max(q: PrimePower) -> u128 {
    let m = hws_width(q) as i128;
    let t = (0..=m)
        .rev()
        .find(|&t| is_admissible_trace(q, t))
        .expect("t = 0 or +-1 is admissible");
    (q.q() as i128 + 1 + t) as u128
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeuringReport {
    pub q: u64,
    pub m: u128,
    pub offsets: Vec<i128>,
    pub cardinals: Vec<u128>,
}

pub fn deuring_report(q: PrimePower) -> DeuringReport {
    let offsets = deuring_offsets(q);
    let cardinals = deuring_set(q);
    DeuringReport {
        q: q.q(),
        m: hws_width(q),
        offsets,
        cardinals,
    }
}

/// Maximum number of points of a genus-`g` curve, when known.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SerreValue {
    Known(u128),
    Unknown,
}

impl SerreValue {
    pub fn known(self) -> Option<u128> {
        match self {
            SerreValue::Known(v) => Some(v),
            SerreValue::Unknown => None,
        }
    }
}

impl fmt::Display for SerreValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SerreValue::Known(v) => write!(f, "{v}"),
            SerreValue::Unknown => f.write_str("unknown"),
        }
    }
}

const GENUS3_TABLE: [(u64, u128); 7] =
    [(2, 7), (3, 10), (4, 14), (5, 16), (7, 20), (8, 24), (9, 28)];

fn is_square(n: i128) -> bool {
    n >= 0 && {
        let s = isqrt_floor(n as u128);
        s * s == n as u128
    }
}

/// `2 sqrt(q) - m > (sqrt(5) - 1) / 2`, decided exactly.
///
/// Equivalent to `4 sqrt(q) > 2m - 1 + sqrt(5)`; squaring once gives
/// `16q - (2m-1)^2 - 5 > 2 (2m-1) sqrt(5)` and squaring again (when the
/// left side is positive) `d^2 > 20 (2m-1)^2`.
pub(crate) fn fractional_part_exceeds_golden(q: PrimePower) -> bool {
    let m = BigInt::from(hws_width(q));
    let w: BigInt = 2 * m - 1;
    let d: BigInt = 16 * BigInt::from(q.q()) - &w * &w - 5;
    d > BigInt::from(0) && &d * &d > 20 * &w * &w
}

fn genus2_special(q: PrimePower) -> bool {
    let m = hws_width(q);
    let qi = q.q() as i128;
    m.is_multiple_of(q.p() as u128)
        || is_square(qi - 1)
        || is_square(4 * qi - 3)
        || is_square(4 * qi - 7)
}

/// Serre's `N_q(g)` for `g in {1, 2, 3}`.
pub fn serre_nq(q: PrimePower, genus: u32) -> Result<SerreValue> {
    let m = hws_width(q);
    let qq = q.q() as u128;
    let value = match genus {
        1 => SerreValue::Known(deuring_max(q)),
        2 => SerreValue::Known(match q.q() {
            4 => 10,
            9 => 20,
            _ if q.e().is_multiple_of(2) => qq + 1 + 2 * m,
            _ if genus2_special(q) => {
                if fractional_part_exceeds_golden(q) {
                    qq + 2 * m
                } else {
                    qq + 2 * m - 1
                }
            }
            _ => qq + 1 + 2 * m,
        }),
        3 => GENUS3_TABLE
            .iter()
            .find(|(k, _)| *k == q.q())
            .map_or(SerreValue::Unknown, |&(_, v)| SerreValue::Known(v)),
        g => return Err(Error::UnsupportedGenus(g)),
    };
    Ok(value)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundsReport {
    pub q: u64,
    pub genus: u32,
    pub hws: u128,
    pub serre: SerreValue,
}

pub fn bounds_report(q: PrimePower, genus: u32) -> BoundsReport {
    let serre = serre_nq(q, genus).unwrap_or(SerreValue::Unknown);
    BoundsReport {
        q: q.q(),
        genus,
        hws: hws_bound(q, genus),
        serre,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundsComparison {
    pub hws: u128,
    pub serre: SerreValue,
    pub is_hws_maximal: bool,
    pub meets_serre: bool,
}

/// How `N_1` compares with the Hasse-Weil-Serre bound and `N_q(g)`.
pub fn compare_to_bounds(q: PrimePower, genus: u32, n1: u128) -> BoundsComparison {
    let BoundsReport { hws, serre, .. } = bounds_report(q, genus);
    BoundsComparison {
        hws,
        serre,
        is_hws_maximal: n1 == hws,
        meets_serre: serre.known() == Some(n1),
    }
}
