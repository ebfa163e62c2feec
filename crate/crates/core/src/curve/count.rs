//! Brute-force enumeration of projective points over `F_{p^r}`.
//!
//! Points are visited in the fixed order `(x : y : 1)` with `x` major,
//! then `(x : 1 : 0)`, then `(1 : 0 : 0)`. Every representative is
//! visited exactly once, so no normalization is needed.

use std::fmt;
use std::ops::Range;

use serde::Serialize;

use super::plane::{Monomial, PlaneCurve};
use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::finite_field::{checked_pow, write_coeffs, FieldCtx, LogTables, MAX_TABLE_SIZE};

/// Default cap on the number of point evaluations.
pub const DEFAULT_BUDGET: u128 = 1_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountOptions {
    pub budget: u128,
    pub exec: Execution,
}

impl Default for CountOptions {
    fn default() -> Self {
        CountOptions {
            budget: DEFAULT_BUDGET,
            exec: Execution::default(),
        }
    }
}

impl CountOptions {
    pub fn with_budget(budget: u128) -> Self {
        CountOptions {
            budget,
            ..Default::default()
        }
    }

    pub fn sequential(mut self) -> Self {
        self.exec = Execution::Sequential;
        self
    }
}

/// Number of points over `F_{q^r}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PointCount {
    pub r: u32,
    pub count: u64,
}

/// A homogeneous polynomial with coefficients pre-converted to logs.
#[derive(Debug, Clone)]
pub(crate) struct CompiledPoly {
    terms: Vec<(u32, Monomial)>,
}

impl CompiledPoly {
    pub(crate) fn new(
        tables: &LogTables,
        terms: impl IntoIterator<Item = (Monomial, u64)>,
    ) -> Self {
        CompiledPoly {
            terms: terms
                .into_iter()
                .map(|(m, c)| (tables.constant(c), m))
                .filter(|(l, _)| *l != LogTables::ZERO)
                .collect(),
        }
    }

    #[inline]
    pub(crate) fn eval(&self, t: &LogTables, x: u32, y: u32, z: u32) -> u32 {
        let mut acc = LogTables::ZERO;
        for &(c, (i, j, k)) in &self.terms {
            let v = t.mul(t.mul(c, t.pow(x, i)), t.mul(t.pow(y, j), t.pow(z, k)));
            acc = t.add(acc, v);
        }
        acc
    }

    /// Coefficients (as logs) of the polynomial in `y` left after fixing
    /// `x` and `z`, indexed by the power of `y`.
    pub(crate) fn specialize(&self, t: &LogTables, x: u32, z: u32) -> Vec<u32> {
        let top = self
            .terms
            .iter()
            .map(|&(_, (_, j, _))| j as usize)
            .max()
            .unwrap_or(0);
        let mut coeffs = vec![LogTables::ZERO; top + 1];
        for &(c, (i, j, k)) in &self.terms {
            let v = t.mul(c, t.mul(t.pow(x, i), t.pow(z, k)));
            coeffs[j as usize] = t.add(coeffs[j as usize], v);
        }
        coeffs
    }
}

/// Horner evaluation of a specialized row polynomial at `y`.
#[inline]
fn horner(t: &LogTables, coeffs: &[u32], y: u32) -> u32 {
    coeffs
        .iter()
        .rev()
        .fold(LogTables::ZERO, |acc, &c| t.add(t.mul(acc, y), c))
}

/// Evaluations needed to scan all of `P^2(F_Q)`: `Q^2 + Q + 1`.
pub fn plane_work(p: u64, r: u32) -> u128 {
    match checked_pow(p, r) {
        Some(size) => {
            let size = size as u128;
            size * size + size + 1
        }
        None => u128::MAX,
    }
}

pub(crate) fn check_budget(required: u128, budget: u128) -> Result<()> {
    if required > budget {
        Err(Error::BudgetExceeded { required, budget })
    } else {
        Ok(())
    }
}

/// Field tables plus a compiled curve, ready to scan.
#[derive(Debug, Clone)]
pub struct PointCounter {
    r: u32,
    ctx: FieldCtx,
    tables: LogTables,
    poly: CompiledPoly,
}

impl PointCounter {
    pub fn new(curve: &PlaneCurve, r: u32) -> Result<Self> {
        Self::from_terms(curve.p(), curve.terms().iter().map(|(&m, &c)| (m, c)), r)
    }

    pub(crate) fn from_terms(
        p: u64,
        terms: impl IntoIterator<Item = (Monomial, u64)>,
        r: u32,
    ) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidArgument(
                "extension degree must be at least 1".into(),
            ));
        }
        let size = checked_pow(p, r).unwrap_or(u64::MAX);
        if size > MAX_TABLE_SIZE {
            return Err(Error::BudgetExceeded {
                required: plane_work(p, r),
                budget: (MAX_TABLE_SIZE as u128).pow(2),
            });
        }
        let ctx = FieldCtx::new(p, r as usize)?;
        let tables = LogTables::new(&ctx)?;
        let poly = CompiledPoly::new(&tables, terms);
        Ok(PointCounter {
            r,
            ctx,
            tables,
            poly,
        })
    }

    pub fn field(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn field_size(&self) -> u64 {
        self.tables.size()
    }

    /// Points `(x : y : 1)` with the index of `x` in `rows`.
    pub fn count_affine_rows(&self, rows: Range<u64>) -> u64 {
        rows.map(|x| self.row(x)).sum()
    }

    fn row(&self, x: u64) -> u64 {
        let t = &self.tables;
        let coeffs = self.poly.specialize(t, t.log_of(x), 0);
        (0..t.size())
            .filter(|&y| horner(t, &coeffs, t.log_of(y)) == LogTables::ZERO)
            .count() as u64
    }

    /// Points on the line `z = 0`.
    pub fn count_at_infinity(&self) -> u64 {
        let t = &self.tables;
        let one = 0;
        let on_line = (0..t.size())
            .filter(|&x| self.poly.eval(t, t.log_of(x), one, LogTables::ZERO) == LogTables::ZERO)
            .count() as u64;
        let corner =
            (self.poly.eval(t, one, LogTables::ZERO, LogTables::ZERO) == LogTables::ZERO) as u64;
        on_line + corner
    }

    pub fn count_affine(&self, exec: Execution) -> u64 {
        exec::sum_range(exec, 0..self.field_size(), |x| self.row(x))
    }

    pub fn count(&self, exec: Execution) -> PointCount {
        PointCount {
            r: self.r,
            count: self.count_affine(exec) + self.count_at_infinity(),
        }
    }
}

/// Exact number of points of `curve` over `F_{p^r}`, by exhaustion.
pub fn count_points(curve: &PlaneCurve, r: u32, opts: &CountOptions) -> Result<PointCount> {
    check_budget(plane_work(curve.p(), r), opts.budget)?;
    Ok(PointCounter::new(curve, r)?.count(opts.exec))
}

/// A point of `P^2(F_{p^r})`, coordinates as coefficient vectors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProjectivePoint {
    pub r: u32,
    pub coords: [Vec<u64>; 3],
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coords
            .iter()
            .map(|c| {
                let mut s = String::new();
                let _ = write_coeffs(&mut s, c, "a");
                s
            })
            .collect();
        write!(f, "({})", parts.join(" : "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Smoothness {
    /// No singular point over `F_{p^r}` for `r <= r_max`. This is not a
    /// proof of smoothness over the algebraic closure.
    NoSingularityFound {
        r_max: u32,
    },
    SingularAt {
        point: ProjectivePoint,
        r: u32,
    },
}

/// Search for common zeros of `F`, `F_x`, `F_y`, `F_z` over `F_{p^r}`,
/// `r = 1..=r_max`, returning the first one in enumeration order.
pub fn smoothness_probe(curve: &PlaneCurve, r_max: u32, opts: &CountOptions) -> Result<Smoothness> {
    if r_max == 0 {
        return Err(Error::InvalidArgument("r_max must be at least 1".into()));
    }
    let required = (1..=r_max)
        .map(|r| plane_work(curve.p(), r).saturating_mul(4))
        .fold(0u128, u128::saturating_add);
    check_budget(required, opts.budget)?;

    for r in 1..=r_max {
        let counter = PointCounter::new(curve, r)?;
        let t = &counter.tables;
        let grad = curve.gradient().map(|g| CompiledPoly::new(t, g));
        let singular = |x: u32, y: u32, z: u32| {
            counter.poly.eval(t, x, y, z) == LogTables::ZERO
                && grad.iter().all(|g| g.eval(t, x, y, z) == LogTables::ZERO)
        };
        let to_point = |x: u64, y: u64, z: u64| ProjectivePoint {
            r,
            coords: [x, y, z].map(|i| counter.ctx.from_index(i).coeffs().to_vec()),
        };

        let affine = exec::find_first(opts.exec, 0..t.size(), |x| {
            let lx = t.log_of(x);
            (0..t.size())
                .find(|&y| singular(lx, t.log_of(y), 0))
                .map(|y| (x, y))
        });
        if let Some((x, y)) = affine {
            return Ok(Smoothness::SingularAt {
                point: to_point(x, y, 1),
                r,
            });
        }
        if let Some(x) = (0..t.size()).find(|&x| singular(t.log_of(x), 0, LogTables::ZERO)) {
            return Ok(Smoothness::SingularAt {
                point: to_point(x, 1, 0),
                r,
            });
        }
        if singular(0, LogTables::ZERO, LogTables::ZERO) {
            return Ok(Smoothness::SingularAt {
                point: to_point(1, 0, 0),
                r,
            });
        }
    }
    Ok(Smoothness::NoSingularityFound { r_max })
}
