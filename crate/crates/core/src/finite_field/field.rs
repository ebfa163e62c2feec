use std::fmt;

use super::poly::{inv_mod, write_poly, FpPoly};
use super::prime::{checked_pow, is_prime, mul_mod};
use crate::error::{Error, Result};

/// Trial division by every monic polynomial of degree `1..=deg/2`.
pub fn is_irreducible(f: &FpPoly) -> bool {
    let Some(n) = f.degree() else { return false };
    if n == 0 {
        return false;
    }
    let p = f.p();
    for d in 1..=n / 2 {
        let Some(count) = checked_pow(p, d as u32) else {
            return false;
        };
        for k in 0..count {
            let mut coeffs = digits(k, p, d);
            coeffs.push(1);
            if f.rem(&FpPoly::new(p, coeffs)).is_zero() {
                return false;
            }
        }
    }
    true
}

/// The `len` base-`p` digits of `k`, least significant first.
fn digits(mut k: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(k % p);
        k /= p;
    }
    out
}

/// Lexicographically smallest monic irreducible of degree `n` over `F_p`,
/// ordering by `(c_{n-1}, ..., c_0)`. For `n = 1` this is `x`.
pub fn find_irreducible(p: u64, n: usize) -> Result<FpPoly> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 {
        return Err(Error::InvalidArgument(
            "extension degree must be at least 1".into(),
        ));
    }
    let count = checked_pow(p, n as u32)
        .ok_or_else(|| Error::InvalidArgument(format!("F_{p}^{n} is too large")))?;
    for k in 0..count {
        let mut coeffs = digits(k, p, n);
        coeffs.push(1);
        let f = FpPoly::new(p, coeffs);
        if is_irreducible(&f) {
            return Ok(f);
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// The field `F_p[x]/(modulus)` with `p^n` elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldCtx {
    p: u64,
    n: usize,
    modulus: FpPoly,
    size: u64,
}

impl FieldCtx {
    /// `F_{p^n}` built on [`find_irreducible`].
    pub fn new(p: u64, n: usize) -> Result<Self> {
        let modulus = find_irreducible(p, n)?;
        Self::with_modulus(modulus)
    }

    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, 1)
    }

    pub fn with_modulus(modulus: FpPoly) -> Result<Self> {
        let p = modulus.p();
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if !modulus.is_monic() || !is_irreducible(&modulus) {
            return Err(Error::InvalidArgument(format!(
                "{modulus} is not a monic irreducible over F_{p}"
            )));
        }
        let n = modulus.degree().unwrap_or(0);
        let size = checked_pow(p, n as u32)
            .ok_or_else(|| Error::InvalidArgument(format!("F_{p}^{n} is too large")))?;
        Ok(FieldCtx {
            p,
            n,
            modulus,
            size,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> &FpPoly {
        &self.modulus
    }

    /// Number of elements, `p^n`.
    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn zero(&self) -> FieldElement<'_> {
        FieldElement {
            ctx: self,
            coeffs: vec![0; self.n],
        }
    }

    pub fn one(&self) -> FieldElement<'_> {
        self.constant(1)
    }

    /// Embed a residue of `F_p`.
    pub fn constant(&self, c: u64) -> FieldElement<'_> {
        let mut coeffs = vec![0; self.n];
        coeffs[0] = c % self.p;
        FieldElement { ctx: self, coeffs }
    }

    /// The class of `x`, i.e. a root of the modulus.
    pub fn generator(&self) -> FieldElement<'_> {
        self.from_poly(&FpPoly::monomial(self.p, 1))
    }

    pub fn from_poly(&self, f: &FpPoly) -> FieldElement<'_> {
        debug_assert_eq!(f.p(), self.p);
        let r = f.rem(&self.modulus);
        let mut coeffs = r.coeffs().to_vec();
        coeffs.resize(self.n, 0);
        FieldElement { ctx: self, coeffs }
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> FieldElement<'_> {
        self.from_poly(&FpPoly::new(self.p, coeffs.iter().copied()))
    }

    /// Element whose coefficient vector is the base-`p` expansion of `index`.
    pub fn from_index(&self, index: u64) -> FieldElement<'_> {
        debug_assert!(index < self.size);
        FieldElement {
            ctx: self,
            coeffs: digits(index, self.p, self.n),
        }
    }

    /// All `p^n` elements in lexicographic coefficient order, starting at 0.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement<'_>> + '_ {
        (0..self.size).map(move |i| self.from_index(i))
    }

    /// Every root of `poly` in this field, in enumeration order.
    pub fn roots(&self, poly: &FpPoly) -> Vec<FieldElement<'_>> {
        self.elements()
            .filter(|x| x.eval_poly(poly).is_zero())
            .collect()
    }
}

/// Enumerate `ctx` in lexicographic coefficient order.
pub fn enumerate_elements(ctx: &FieldCtx) -> Vec<FieldElement<'_>> {
    ctx.elements().collect()
}

/// All roots of a nonzero `poly` over `F_p` inside `ctx`, by exhaustion.
pub fn solve_in_field<'a>(poly: &FpPoly, ctx: &'a FieldCtx) -> Result<Vec<FieldElement<'a>>> {
    if poly.is_zero() {
        return Err(Error::ZeroPolynomial(ctx.p));
    }
    if poly.p() != ctx.p {
        return Err(Error::CtxMismatch);
    }
    Ok(ctx.roots(poly))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn element_arithmetic<'a>(
    a: &FieldElement<'a>,
    b: &FieldElement<'a>,
    op: ArithOp,
) -> Result<FieldElement<'a>> {
    match op {
        ArithOp::Add => a.try_add(b),
        ArithOp::Sub => a.try_sub(b),
        ArithOp::Mul => a.try_mul(b),
        ArithOp::Div => a.try_div(b),
    }
}

/// An element of a [`FieldCtx`], stored as `n` canonical residues.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement<'a> {
    ctx: &'a FieldCtx,
    coeffs: Vec<u64>,
}

impl<'a> FieldElement<'a> {
    pub fn ctx(&self) -> &'a FieldCtx {
        self.ctx
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Inverse of [`FieldCtx::from_index`].
    pub fn index(&self) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| acc * self.ctx.p + c)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn same_ctx(&self, other: &Self) -> Result<()> {
        if std::ptr::eq(self.ctx, other.ctx) || self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::CtxMismatch)
        }
    }

    fn as_poly(&self) -> FpPoly {
        FpPoly::new(self.ctx.p, self.coeffs.iter().copied())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_ctx(other)?;
        let p = self.ctx.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a + b) % p)
            .collect();
        Ok(FieldElement {
            ctx: self.ctx,
            coeffs,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_ctx(other)?;
        let p = self.ctx.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a + p - b) % p)
            .collect();
        Ok(FieldElement {
            ctx: self.ctx,
            coeffs,
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_ctx(other)?;
        Ok(self.ctx.from_poly(&self.as_poly().mul(&other.as_poly())))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.same_ctx(other)?;
        self.try_mul(&other.inverse()?)
    }

    pub fn neg(&self) -> Self {
        let p = self.ctx.p;
        FieldElement {
            ctx: self.ctx,
            coeffs: self.coeffs.iter().map(|&c| (p - c) % p).collect(),
        }
    }

    /// Multiply by a residue of the prime field.
    pub fn scale(&self, k: u64) -> Self {
        let p = self.ctx.p;
        FieldElement {
            ctx: self.ctx,
            coeffs: self.coeffs.iter().map(|&c| mul_mod(c, k % p, p)).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (g, s, _) = self.as_poly().ext_gcd(&self.ctx.modulus);
        debug_assert_eq!(g, FpPoly::one(self.ctx.p));
        Ok(self.ctx.from_poly(&s))
    }

    pub fn pow(&self, mut exp: u128) -> Self {
        let mut base = self.clone();
        let mut acc = self.ctx.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Horner evaluation of a polynomial with `F_p` coefficients.
    pub fn eval_poly(&self, f: &FpPoly) -> Self {
        f.coeffs().iter().rev().fold(self.ctx.zero(), |acc, &c| {
            &(&acc * self) + &self.ctx.constant(c)
        })
    }
}

impl fmt::Debug for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElement<'_> {
    /// Written as a polynomial in `a`, the class of `x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, &self.coeffs, "a")
    }
}

macro_rules! forward_op {
    ($trait:ident, $method:ident, $try:ident) => {
        impl<'a> std::ops::$trait for &FieldElement<'a> {
            type Output = FieldElement<'a>;

            /// Panics if the operands live in different fields.
            fn $method(self, rhs: Self) -> FieldElement<'a> {
                self.$try(rhs).expect("field context mismatch")
            }
        }
    };
}

forward_op!(Add, add, try_add);
forward_op!(Sub, sub, try_sub);
forward_op!(Mul, mul, try_mul);

/// Inverse of a nonzero residue mod a prime.
pub fn residue_inverse(a: u64, p: u64) -> Result<u64> {
    if a.is_multiple_of(p) {
        Err(Error::DivisionByZero)
    } else {
        Ok(inv_mod(a % p, p))
    }
}
