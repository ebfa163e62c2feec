use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::finite_field::PrimePower;

/// Point counts `N_1..N_k` of a curve over `F_q` (index 0 holds `N_1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountSequence {
    q: PrimePower,
    counts: Vec<BigInt>,
}

impl CountSequence {
    pub fn new(q: PrimePower, counts: Vec<BigInt>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::EmptyCounts);
        }
        Ok(CountSequence { q, counts })
    }

    pub fn from_i64(q: PrimePower, counts: &[i64]) -> Result<Self> {
        Self::new(q, counts.iter().map(|&n| BigInt::from(n)).collect())
    }

    pub fn q(&self) -> PrimePower {
        self.q
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// `N_r` for `r >= 1`.
    pub fn get(&self, r: usize) -> Option<&BigInt> {
        r.checked_sub(1).and_then(|i| self.counts.get(i))
    }

    /// Curve-derived data never has negative counts.
    pub fn has_negative(&self) -> bool {
        self.counts.iter().any(|n| n.is_negative())
    }

    pub fn power_sums(&self) -> PowerSums {
        counts_to_power_sums(self)
    }
}

/// Power sums `S_r = q^r + 1 - N_r` of the reciprocal roots of `P(T)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSums {
    q: PrimePower,
    sums: Vec<BigInt>,
}

impl PowerSums {
    pub fn new(q: PrimePower, sums: Vec<BigInt>) -> Self {
        PowerSums { q, sums }
    }

    pub fn q(&self) -> PrimePower {
        self.q
    }

    pub fn sums(&self) -> &[BigInt] {
        &self.sums
    }

    pub fn to_counts(&self) -> Result<CountSequence> {
        let counts = self
            .sums
            .iter()
            .enumerate()
            .map(|(i, s)| self.q.big_pow(i as u32 + 1) + 1 - s)
            .collect();
        CountSequence::new(self.q, counts)
    }
}

pub fn counts_to_power_sums(n: &CountSequence) -> PowerSums {
    let q = n.q();
    let sums = n
        .counts()
        .iter()
        .enumerate()
        .map(|(i, n)| q.big_pow(i as u32 + 1) + 1 - n)
        .collect();
    PowerSums { q, sums }
}
