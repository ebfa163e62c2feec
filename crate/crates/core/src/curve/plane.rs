use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finite_field::{is_prime, mul_mod};

/// Exponents `(i, j, k)` of the monomial `x^i y^j z^k`.
pub type Monomial = (u32, u32, u32);

/// A homogeneous polynomial `F(x, y, z)` over `F_p`, defining a plane curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneCurve {
    p: u64,
    degree: u32,
    terms: BTreeMap<Monomial, u64>,
}

/// Serialized term `{i, j, k, coeff}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub i: u32,
    pub j: u32,
    pub k: u32,
    pub coeff: u64,
}

/// Serialized curve `{p, degree, terms}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveRecord {
    pub p: u64,
    pub degree: u32,
    pub terms: Vec<TermRecord>,
}

impl PlaneCurve {
    /// Build from raw terms: coefficients are reduced mod `p`, like terms
    /// combined and zero terms dropped.
    pub fn from_terms(p: u64, terms: impl IntoIterator<Item = (Monomial, u64)>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let mut map: BTreeMap<Monomial, u64> = BTreeMap::new();
        for (m, c) in terms {
            let e = map.entry(m).or_insert(0);
            *e = (*e + c % p) % p;
        }
        map.retain(|_, c| *c != 0);
        let mut degrees = map.keys().map(|&(i, j, k)| i + j + k);
        let Some(degree) = degrees.next() else {
            return Err(Error::ZeroPolynomial(p));
        };
        if let Some(other) = degrees.find(|&d| d != degree) {
            return Err(Error::NotHomogeneous {
                first: degree,
                second: other,
            });
        }
        Ok(PlaneCurve {
            p,
            degree,
            terms: map,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, u64> {
        &self.terms
    }

    /// Formal partial derivatives `(F_x, F_y, F_z)` as raw term lists; any
    /// of them may be identically zero.
    pub fn gradient(&self) -> [Vec<(Monomial, u64)>; 3] {
        let p = self.p;
        let mut out: [Vec<(Monomial, u64)>; 3] = Default::default();
        for (&(i, j, k), &c) in &self.terms {
            let exps = [i, j, k];
            for (var, slot) in out.iter_mut().enumerate() {
                let e = exps[var];
                let coeff = mul_mod(c, e as u64 % p, p);
                if e == 0 || coeff == 0 {
                    continue;
                }
                let mut m = exps;
                m[var] -= 1;
                slot.push(((m[0], m[1], m[2]), coeff));
            }
        }
        out
    }

    /// Relabel coordinates: variable `v` of the result is variable `perm[v]`
    /// of `self`.
    pub fn permute(&self, perm: [usize; 3]) -> Self {
        let terms = self.terms.iter().map(|(&(i, j, k), &c)| {
            let e = [i, j, k];
            ((e[perm[0]], e[perm[1]], e[perm[2]]), c)
        });
        PlaneCurve::from_terms(self.p, terms).expect("permutation preserves validity")
    }

    pub fn to_record(&self) -> CurveRecord {
        CurveRecord {
            p: self.p,
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(&(i, j, k), &coeff)| TermRecord { i, j, k, coeff })
                .collect(),
        }
    }

    pub fn from_record(rec: &CurveRecord) -> Result<Self> {
        let curve =
            PlaneCurve::from_terms(rec.p, rec.terms.iter().map(|t| ((t.i, t.j, t.k), t.coeff)))?;
        if curve.degree != rec.degree {
            return Err(Error::InvalidArgument(format!(
                "declared degree {} but terms have degree {}",
                rec.degree, curve.degree
            )));
        }
        Ok(curve)
    }
}

impl fmt::Display for PlaneCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, (&(i, j, k), &c)) in self.terms.iter().rev().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if c != 1 {
                factors.push(c.to_string());
            }
            for (var, e) in [("x", i), ("y", j), ("z", k)] {
                match e {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    e => factors.push(format!("{var}^{e}")),
                }
            }
            if factors.is_empty() {
                factors.push("1".into());
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}
