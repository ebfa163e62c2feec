//! Cubics in Weierstrass normal form
//! `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6` over `F_p`.

use std::collections::BTreeMap;
use std::fmt;

use super::count::{check_budget, plane_work, CountOptions, PointCount, PointCounter};
use super::plane::PlaneCurve;
use crate::error::{Error, Result};
use crate::exec;
use crate::finite_field::{checked_pow, is_prime, mul_mod};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeierstrassCubic {
    p: u64,
    /// `[a1, a2, a3, a4, a6]`.
    a: [u64; 5],
}

impl WeierstrassCubic {
    pub fn new(p: u64, a: [u64; 5]) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(WeierstrassCubic {
            p,
            a: a.map(|c| c % p),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// `[a1, a2, a3, a4, a6]`.
    pub fn coefficients(&self) -> [u64; 5] {
        self.a
    }

    pub fn discriminant(&self) -> u64 {
        weierstrass_discriminant(self)
    }

    pub fn is_nonsingular(&self) -> bool {
        self.discriminant() != 0
    }

    /// The projective closure
    /// `y^2 z + a1 xyz + a3 yz^2 - x^3 - a2 x^2 z - a4 xz^2 - a6 z^3`.
    pub fn to_plane_curve(&self) -> PlaneCurve {
        let p = self.p;
        let [a1, a2, a3, a4, a6] = self.a;
        let neg = |c: u64| (p - c) % p;
        PlaneCurve::from_terms(
            p,
            [
                ((0, 2, 1), 1),
                ((1, 1, 1), a1),
                ((0, 1, 2), a3),
                ((3, 0, 0), neg(1)),
                ((2, 0, 1), neg(a2)),
                ((1, 0, 2), neg(a4)),
                ((0, 0, 3), neg(a6)),
            ],
        )
        .expect("a Weierstrass cubic is homogeneous of degree 3")
    }
}

impl fmt::Display for WeierstrassCubic {
    /// `y^2 + x*y + y = x^3 + x^2`; zero terms are omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a1, a2, a3, a4, a6] = self.a;
        let join = |parts: &[(u64, &str)]| -> String {
            parts
                .iter()
                .filter(|(c, _)| *c != 0)
                .map(|&(c, m)| match (c, m) {
                    (c, "") => c.to_string(),
                    (1, m) => m.to_string(),
                    (c, m) => format!("{c}*{m}"),
                })
                .collect::<Vec<_>>()
                .join(" + ")
        };
        write!(
            f,
            "{} = {}",
            join(&[(1, "y^2"), (a1, "x*y"), (a3, "y")]),
            join(&[(1, "x^3"), (a2, "x^2"), (a4, "x"), (a6, "")])
        )
    }
}

/// `Delta = -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6` mod `p`; zero exactly
/// when the cubic is singular.
pub fn weierstrass_discriminant(e: &WeierstrassCubic) -> u64 {
    let p = e.p;
    let m = |a: u64, b: u64| mul_mod(a, b, p);
    let add = |a: u64, b: u64| ((a as u128 + b as u128) % p as u128) as u64;
    let neg = |a: u64| (p - a % p) % p;
    let k = |c: u64| c % p;
    let [a1, a2, a3, a4, a6] = e.a;

    let b2 = add(m(a1, a1), m(k(4), a2));
    let b4 = add(m(k(2), a4), m(a1, a3));
    let b6 = add(m(a3, a3), m(k(4), a6));
    let b8 = [
        m(m(a1, a1), a6),
        m(m(k(4), a2), a6),
        neg(m(m(a1, a3), a4)),
        m(m(a2, a3), a3),
        neg(m(a4, a4)),
    ]
    .into_iter()
    .fold(0, add);

    [
        neg(m(m(b2, b2), b8)),
        neg(m(k(8), m(m(b4, b4), b4))),
        neg(m(k(27), m(b6, b6))),
        m(k(9), m(m(b2, b4), b6)),
    ]
    .into_iter()
    .fold(0, add)
}

/// Affine solutions over `F_{p^r}` plus the single point at infinity.
pub fn weierstrass_count(e: &WeierstrassCubic, r: u32, opts: &CountOptions) -> Result<PointCount> {
    check_budget(plane_work(e.p, r), opts.budget)?;
    let counter = PointCounter::new(&e.to_plane_curve(), r)?;
    Ok(PointCount {
        r,
        count: counter.count_affine(opts.exec) + 1,
    })
}

/// Nonsingular normal-form cubics over `F_p`, grouped by `N_1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicSurvey {
    pub p: u64,
    pub total: usize,
    pub nonsingular: usize,
    pub groups: BTreeMap<u64, Vec<WeierstrassCubic>>,
}

/// Enumerate all `p^5` coefficient tuples, keep the nonsingular ones and
/// group them by their number of `F_p`-points.
pub fn classify_cubics(p: u64, opts: &CountOptions) -> Result<CubicSurvey> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let tuples = checked_pow(p, 5).ok_or(Error::BudgetExceeded {
        required: u128::MAX,
        budget: opts.budget,
    })?;
    check_budget(
        (tuples as u128).saturating_mul(plane_work(p, 1)),
        opts.budget,
    )?;

    let cubics: Vec<WeierstrassCubic> = (0..tuples)
        .map(|mut t| {
            let mut a = [0u64; 5];
            // a1 is the most significant digit, so tuples come out in
            // lexicographic order of (a1, a2, a3, a4, a6).
            for slot in a.iter_mut().rev() {
                *slot = t % p;
                t /= p;
            }
            WeierstrassCubic { p, a }
        })
        .collect();
    let nonsingular: Vec<WeierstrassCubic> = cubics
        .iter()
        .copied()
        .filter(WeierstrassCubic::is_nonsingular)
        .collect();
    let inner = CountOptions {
        exec: exec::Execution::Sequential,
        ..*opts
    };
    let counts = exec::map_slice(opts.exec, &nonsingular, |e| weierstrass_count(e, 1, &inner));

    let mut groups: BTreeMap<u64, Vec<WeierstrassCubic>> = BTreeMap::new();
    for (e, n) in nonsingular.iter().zip(counts) {
        groups.entry(n?.count).or_default().push(*e);
    }
    Ok(CubicSurvey {
        p,
        total: cubics.len(),
        nonsingular: nonsingular.len(),
        groups,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::deuring_set;
    use crate::curve::{count_points, smoothness_probe, Smoothness};
    use crate::finite_field::PrimePower;

    fn e2(a: [u64; 5]) -> WeierstrassCubic {
        WeierstrassCubic::new(2, a).unwrap()
    }

    fn n(e: &WeierstrassCubic, r: u32) -> u64 {
        weierstrass_count(e, r, &CountOptions::default())
            .unwrap()
            .count
    }

    fn all_cubics(p: u64) -> impl Iterator<Item = WeierstrassCubic> {
        (0..p.pow(5)).map(move |mut t| {
            let mut a = [0; 5];
            for s in &mut a {
                *s = t % p;
                t /= p;
            }
            WeierstrassCubic::new(p, a).unwrap()
        })
    }

    #[test]
    fn point_counts() {
        assert_eq!(n(&e2([0, 0, 1, 1, 1]), 1), 1);
        assert_eq!(n(&e2([0, 0, 1, 1, 0]), 1), 5);
        assert_eq!(n(&e2([1, 1, 0, 0, 1]), 2), 8);
    }

    #[test]
    fn discriminants() {
        assert_ne!(e2([0, 0, 1, 1, 1]).discriminant(), 0);
        assert_eq!(e2([0, 0, 0, 0, 0]).discriminant(), 0);
        assert_eq!(
            all_cubics(2)
                .filter(WeierstrassCubic::is_nonsingular)
                .count(),
            16
        );
        // y^2 = x^3 + 3 over F_7: Delta = -27 * (4*3)^2 = -3888 = 4 mod 7.
        assert_eq!(
            WeierstrassCubic::new(7, [0, 0, 0, 0, 3])
                .unwrap()
                .discriminant(),
            4
        );
    }

    #[test]
    fn discriminant_matches_singular_point_search() {
        // A singular Weierstrass cubic has a single singular point, which is
        // therefore rational.
        let opts = CountOptions::default().sequential();
        for p in [2, 3, 5] {
            for e in all_cubics(p) {
                let probe = smoothness_probe(&e.to_plane_curve(), 1, &opts).unwrap();
                let singular = matches!(probe, Smoothness::SingularAt { .. });
                assert_eq!(e.is_nonsingular(), !singular, "{e} over F_{p}");
            }
        }
    }

    #[test]
    fn affine_count_plus_one_matches_projective_count() {
        for p in [2, 3] {
            for e in all_cubics(p) {
                for r in 1..=2 {
                    let projective =
                        count_points(&e.to_plane_curve(), r, &CountOptions::default()).unwrap();
                    assert_eq!(n(&e, r), projective.count, "{e}, r = {r}");
                }
            }
        }
    }

    #[test]
    fn counts_lie_in_deuring_set() {
        for p in [2, 3, 5, 7] {
            let q = PrimePower::new(p).unwrap();
            let allowed = deuring_set(q);
            let survey = classify_cubics(p, &CountOptions::default()).unwrap();
            for &n1 in survey.groups.keys() {
                assert!(allowed.contains(&(n1 as u128)), "N_1 = {n1} over F_{p}");
            }
        }
    }

    #[test]
    fn classification_over_f2() {
        let s = classify_cubics(2, &CountOptions::default()).unwrap();
        assert_eq!((s.total, s.nonsingular), (32, 16));
        let sizes: Vec<(u64, usize)> = s.groups.iter().map(|(&k, v)| (k, v.len())).collect();
        assert_eq!(sizes, [(1, 2), (2, 4), (3, 4), (4, 4), (5, 2)]);
        let five: Vec<String> = s.groups[&5].iter().map(|e| e.to_string()).collect();
        assert_eq!(five, ["y^2 + y = x^3 + x", "y^2 + y = x^3 + x^2"]);
        let seq = classify_cubics(2, &CountOptions::default().sequential()).unwrap();
        assert_eq!(seq, s);
    }
}
