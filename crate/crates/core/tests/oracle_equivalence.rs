//! Brute-force counts against the bootstrap for every reference curve.

use curvezeta::curve::{corpus, count_points, CorpusCurve, CountOptions};
use curvezeta::zeta::{bootstrap_basic, bootstrap_improved, zeta_series_check, CountSequence};
use curvezeta::{Execution, PrimePower};
use num_bigint::BigInt;

/// Keeps each brute-force count below about `1e7` evaluations.
fn horizon(p: u64) -> u32 {
    let mut r = 1;
    while (p as f64).powi(2 * (r as i32 + 1)) <= 1e7 {
        r += 1;
    }
    r
}

fn brute_counts(c: &CorpusCurve, upto: u32) -> Vec<BigInt> {
    let curve = c.curve();
    (1..=upto)
        .map(|r| {
            BigInt::from(
                count_points(&curve, r, &CountOptions::default())
                    .unwrap()
                    .count,
            )
        })
        .collect()
}

#[test]
fn bootstrap_matches_enumeration_over_corpus() {
    let curves = corpus();
    assert_eq!(curves.len(), 23);
    for c in &curves {
        let q = PrimePower::new(c.p).unwrap();
        let k = horizon(c.p) as usize;
        assert!(k >= c.genus, "{}", c.name);
        let counts = brute_counts(c, k as u32);

        let improved = bootstrap_improved(q, &counts[..c.genus], k).unwrap();
        let expect: Vec<_> = counts
            .iter()
            .cloned()
            .map(num_rational::BigRational::from_integer)
            .collect();
        assert_eq!(improved.values(), &expect[..], "{}", c.name);
        assert!(improved.is_integral() && improved.weil_ok(), "{}", c.name);

        if 2 * c.genus <= k {
            let basic = bootstrap_basic(q, &counts[..2 * c.genus], c.genus, k).unwrap();
            assert_eq!(basic.values(), &expect[..], "{}", c.name);
            assert!(basic.numerator().satisfies_symmetry(), "{}", c.name);
        }
        let seq = CountSequence::new(q, counts.clone()).unwrap();
        assert!(zeta_series_check(improved.numerator(), &seq), "{}", c.name);
    }
}

#[test]
fn counts_grow_along_divisibility() {
    for c in corpus() {
        let k = horizon(c.p).min(12);
        let counts = brute_counts(&c, k);
        let q = PrimePower::new(c.p).unwrap();
        let long = bootstrap_improved(q, &counts[..c.genus], 20).unwrap();
        let n = long.counts().unwrap();
        for r in 1..=20 {
            for s in (2 * r..=20).step_by(r) {
                assert!(
                    n.get(r).unwrap() <= n.get(s).unwrap(),
                    "{}: N_{r} > N_{s}",
                    c.name
                );
            }
        }
    }
}

#[test]
fn sequential_and_parallel_agree() {
    for c in corpus().iter().take(7) {
        let curve = c.curve();
        for r in 1..=horizon(c.p).min(4) {
            let par = count_points(&curve, r, &CountOptions::default()).unwrap();
            let seq = count_points(&curve, r, &CountOptions::default().sequential()).unwrap();
            assert_eq!(par, seq, "{} r = {r}", c.name);
        }
    }
    assert!(Execution::default() == Execution::Parallel);
}
