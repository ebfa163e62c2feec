//! Discrete-log ("Zech") tables for fast arithmetic in small fields.
//!
//! Nonzero elements are stored as exponents of a fixed primitive element
//! `g`; zero is the sentinel [`LogTables::ZERO`]. Multiplication adds
//! exponents and addition goes through `zech[k] = log(1 + g^k)`.

use super::field::FieldCtx;
use crate::error::{Error, Result};

/// Largest field these tables are built for (three `u32` tables per element).
pub const MAX_TABLE_SIZE: u64 = 1 << 24;

#[derive(Debug, Clone)]
pub struct LogTables {
    p: u64,
    size: u64,
    order: u64,
    exp: Vec<u32>,
    log: Vec<u32>,
    zech: Vec<u32>,
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl LogTables {
    pub const ZERO: u32 = u32::MAX;

    pub fn new(ctx: &FieldCtx) -> Result<Self> {
        let size = ctx.size();
        if size > MAX_TABLE_SIZE {
            return Err(Error::InvalidArgument(format!(
                "field of size {size} exceeds the table limit {MAX_TABLE_SIZE}"
            )));
        }
        let order = size - 1;
        let divisors = prime_divisors(order);
        let one = ctx.one();
        let g = ctx
            .elements()
            .skip(1)
            .find(|c| divisors.iter().all(|&l| c.pow((order / l) as u128) != one))
            .expect("the multiplicative group is cyclic");

        let mut exp = vec![0u32; order as usize];
        let mut log = vec![Self::ZERO; size as usize];
        let mut acc = one;
        for k in 0..order {
            let idx = acc.index();
            exp[k as usize] = idx as u32;
            log[idx as usize] = k as u32;
            acc = &acc * &g;
        }

        let p = ctx.p();
        let zech = exp
            .iter()
            .map(|&idx| {
                let idx = idx as u64;
                let bumped = idx - idx % p + (idx % p + 1) % p;
                log[bumped as usize]
            })
            .collect();

        Ok(LogTables {
            p,
            size,
            order,
            exp,
            log,
            zech,
        })
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Log of the element with the given enumeration index.
    #[inline]
    pub fn log_of(&self, index: u64) -> u32 {
        self.log[index as usize]
    }

    /// Enumeration index of the element with the given log.
    #[inline]
    pub fn index_of(&self, log: u32) -> u64 {
        if log == Self::ZERO {
            0
        } else {
            self.exp[log as usize] as u64
        }
    }

    /// Log of an `F_p` constant.
    #[inline]
    pub fn constant(&self, c: u64) -> u32 {
        self.log[(c % self.p) as usize]
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if a == Self::ZERO {
            return b;
        }
        if b == Self::ZERO {
            return a;
        }
        let order = self.order as u32;
        let d = if b >= a { b - a } else { b + order - a };
        let z = self.zech[d as usize];
        if z == Self::ZERO {
            Self::ZERO
        } else {
            let s = a + z;
            if s >= order {
                s - order
            } else {
                s
            }
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == Self::ZERO || b == Self::ZERO {
            Self::ZERO
        } else {
            let order = self.order as u32;
            let s = a + b;
            if s >= order {
                s - order
            } else {
                s
            }
        }
    }

    /// `a^e`, with `0^0 = 1`.
    #[inline]
    pub fn pow(&self, a: u32, e: u32) -> u32 {
        if e == 0 {
            0
        } else if a == Self::ZERO {
            Self::ZERO
        } else {
            ((a as u64 * e as u64) % self.order) as u32
        }
    }
}
