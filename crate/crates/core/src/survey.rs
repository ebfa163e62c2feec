//! Survey of elliptic curves in normal form over a prime field: the
//! classification by `N_1`, each class's bootstrapped `N_r`, and how the
//! classes compare with the maximum `N_{q^r}(1)` column by column.

use num_bigint::BigInt;

use crate::bounds::{hws_bound, serre_nq};
use crate::curve::{classify_cubics, CountOptions, CubicSurvey, WeierstrassCubic};
use crate::diagnostics::{codes, Diagnostic};
use crate::error::Result;
use crate::finite_field::PrimePower;
use crate::zeta::bootstrap_improved;

/// Maximum of `#E(F_{2^k})` for `k = 1..=20` as it appears in the
/// commonly reproduced survey table. Entries 11, 15, 17 and 19 are one
/// larger than the Waterhouse classification allows.
pub const REFERENCE_MAX_ROW_F2: [u128; 20] = [
    5, 9, 14, 25, 44, 81, 150, 289, 558, 1089, 2139, 4225, 8374, 16641, 33131, 66049, 131797,
    263169, 525737, 1050625,
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyRow {
    pub n1: u64,
    pub curves: Vec<WeierstrassCubic>,
    pub values: Vec<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyColumn {
    pub r: u32,
    /// `N_{p^r}(1)`, the true maximum over all elliptic curves over `F_{p^r}`.
    pub max: u128,
    pub hws: u128,
    pub reference: Option<u128>,
    /// `N_1` of the rows attaining `max`.
    pub maximal_rows: Vec<u64>,
    /// `N_1` of the rows with the largest value in this column.
    pub best_rows: Vec<u64>,
}

impl SurveyColumn {
    pub fn attained(&self) -> bool {
        !self.maximal_rows.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EllipticSurvey {
    pub p: u64,
    pub k: usize,
    pub classification: CubicSurvey,
    pub rows: Vec<SurveyRow>,
    pub columns: Vec<SurveyColumn>,
    pub diagnostics: Vec<Diagnostic>,
}

pub fn elliptic_survey(p: u64, k: usize, opts: &CountOptions) -> Result<EllipticSurvey> {
    let q = PrimePower::from_parts(p, 1)?;
    let classification = classify_cubics(p, opts)?;

    let mut rows = Vec::new();
    for (&n1, curves) in &classification.groups {
        let run = bootstrap_improved(q, &[BigInt::from(n1)], k)?;
        let values = run
            .counts()
            .expect("integral data from a genuine curve")
            .counts()
            .to_vec();
        rows.push(SurveyRow {
            n1,
            curves: curves.clone(),
            values,
        });
    }

    let mut columns = Vec::with_capacity(k);
    let mut diagnostics = Vec::new();
    for r in 1..=k as u32 {
        let qr = q.pow(r)?;
        let max = serre_nq(qr, 1)?.known().expect("genus 1 is always known");
        let value = |row: &SurveyRow| row.values[r as usize - 1].clone();
        let best = rows.iter().map(value).max();
        let select = |target: &BigInt| -> Vec<u64> {
            rows.iter()
                .filter(|row| value(row) == *target)
                .map(|row| row.n1)
                .collect()
        };
        let maximal_rows = select(&BigInt::from(max));
        let best_rows = best.map(|b| select(&b)).unwrap_or_default();
        let reference = (p == 2)
            .then(|| REFERENCE_MAX_ROW_F2.get(r as usize - 1).copied())
            .flatten();
        if let Some(published) = reference.filter(|&v| v != max) {
            diagnostics.push(Diagnostic::warning(
                codes::SERRE_TABLE_MISMATCH,
                format!(
                    "q = 2^{r}: the maximum over elliptic curves is {max}, \
                     but the reference table lists {published}"
                ),
            ));
        }
        columns.push(SurveyColumn {
            r,
            max,
            hws: hws_bound(qr, 1),
            reference,
            maximal_rows,
            best_rows,
        });
    }
    Ok(EllipticSurvey {
        p,
        k,
        classification,
        rows,
        columns,
        diagnostics,
    })
}
