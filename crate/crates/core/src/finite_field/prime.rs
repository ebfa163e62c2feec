use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for the full `u64` range.
pub fn is_prime(n: u64) -> bool {
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &sp in &SMALL {
        if n.is_multiple_of(sp) {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// `base^exp` if it fits in a `u64`.
pub(crate) fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

/// Largest `r` with `r^k <= n`.
fn integer_root(n: u64, k: u32) -> u64 {
    if k == 1 || n < 2 {
        return n;
    }
    let (mut lo, mut hi) = (1u64, 1u64 << (64 / k + 1).min(63));
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        match checked_pow(mid, k) {
            Some(v) if v <= n => lo = mid,
            _ => hi = mid - 1,
        }
    }
    lo
}

/// A validated prime power `q = p^e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimePower {
    p: u64,
    e: u32,
    q: u64,
}

impl PrimePower {
    /// Factor `q` as `p^e`, rejecting anything that is not a prime power.
    pub fn new(q: u64) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidPrimePower(q.to_string()));
        }
        if is_prime(q) {
            return Ok(PrimePower { p: q, e: 1, q });
        }
        // q = p^e forces p = floor(q^(1/e)) exactly.
        for e in 2..=63 {
            let root = integer_root(q, e);
            if root < 2 {
                break;
            }
            if checked_pow(root, e) == Some(q) && is_prime(root) {
                return Ok(PrimePower { p: root, e, q });
            }
        }
        Err(Error::InvalidPrimePower(q.to_string()))
    }

    pub fn from_parts(p: u64, e: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::InvalidPrimePower(format!("{p}^0")));
        }
        let q = checked_pow(p, e)
            .ok_or_else(|| Error::InvalidPrimePower(format!("{p}^{e} (overflows u64)")))?;
        Ok(PrimePower { p, e, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// The prime factorization as a flat list, e.g. `[2, 2, 2]` for 8.
    pub fn factors(&self) -> Vec<u64> {
        vec![self.p; self.e as usize]
    }

    /// `q^s`, the field size of the degree-`s` extension.
    pub fn pow(&self, s: u32) -> Result<Self> {
        let e = self
            .e
            .checked_mul(s)
            .ok_or_else(|| Error::InvalidPrimePower(format!("{}^{s}", self.q)))?;
        PrimePower::from_parts(self.p, e)
    }

    /// `q^r` as an arbitrary-precision integer.
    pub fn big_pow(&self, r: u32) -> BigInt {
        num_traits::pow(BigInt::from(self.q), r as usize)
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.q)
    }
}

impl std::str::FromStr for PrimePower {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let q: u64 = s
            .trim()
            .parse()
            .map_err(|_| Error::InvalidPrimePower(s.to_string()))?;
        PrimePower::new(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_is_prime(n: u64) -> bool {
        n >= 2
            && (2..)
                .take_while(|d| d * d <= n)
                .all(|d| !n.is_multiple_of(d))
    }

    #[test]
    fn miller_rabin_matches_trial_division() {
        for n in 0..20_000u64 {
            assert_eq!(is_prime(n), trial_is_prime(n), "n = {n}");
        }
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to 2,3,5,7
    }

    #[test]
    fn factors_prime_powers() {
        let q = PrimePower::new(8).unwrap();
        assert_eq!((q.p(), q.e(), q.factors()), (2, 3, vec![2, 2, 2]));
        let q = PrimePower::new(3u64.pow(40)).unwrap();
        assert_eq!((q.p(), q.e()), (3, 40));
        assert_eq!(PrimePower::new(1 << 63).unwrap().e(), 63);
        let big = 4_294_967_291u64; // largest prime below 2^32
        assert_eq!(PrimePower::new(big * big).unwrap().p(), big);
    }

    #[test]
    fn rejects_non_prime_powers() {
        for q in [0, 1, 6, 12, 36, 100, 1_000_000] {
            assert!(
                matches!(PrimePower::new(q), Err(Error::InvalidPrimePower(_))),
                "{q}"
            );
        }
        assert!(PrimePower::from_parts(4, 2).is_err());
        assert!(PrimePower::from_parts(2, 64).is_err());
    }

    #[test]
    fn brute_force_agreement_below_5000() {
        for q in 2..5000u64 {
            let mut m = q;
            let p = (2..=q).find(|d| q % d == 0).unwrap();
            while m % p == 0 {
                m /= p;
            }
            assert_eq!(PrimePower::new(q).is_ok(), m == 1, "q = {q}");
        }
    }
}
