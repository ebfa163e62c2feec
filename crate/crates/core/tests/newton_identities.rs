use curvezeta::zeta::{newton_c_from_s, newton_extend_s, next_power_sum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

/// Coefficients of `prod (X - a_i)`, highest degree first: `[1, c_1, ..., c_n]`.
fn expand(roots: &[i64]) -> Vec<BigInt> {
    let mut poly = vec![BigInt::from(1)];
    for &a in roots {
        let mut next = vec![BigInt::zero(); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i] += c;
            next[i + 1] -= c * a;
        }
        poly = next;
    }
    poly
}

fn power_sum(roots: &[i64], j: u32) -> BigInt {
    roots.iter().map(|&a| BigInt::from(a).pow(j)).sum()
}

fn rat(v: &BigInt) -> BigRational {
    BigRational::from_integer(v.clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn identities_hold_for_integer_roots(roots in prop::collection::vec(-9i64..=9, 1..=6)) {
        let n = roots.len();
        let c = expand(&roots);
        let s: Vec<BigInt> = (1..=3 * n as u32 + 2).map(|j| power_sum(&roots, j)).collect();

        // Short identity, j <= n.
        for j in 1..=n {
            let mut lhs = s[j - 1].clone() + BigInt::from(j) * &c[j];
            for i in 1..j {
                lhs += &c[i] * &s[j - i - 1];
            }
            prop_assert!(lhs.is_zero(), "j = {}", j);
        }
        // Full recurrence, j > n.
        for j in n + 1..=s.len() {
            let mut lhs = s[j - 1].clone();
            for i in 1..=n {
                lhs += &c[i] * &s[j - i - 1];
            }
            prop_assert!(lhs.is_zero(), "j = {}", j);
        }

        let s_rat: Vec<BigRational> = s.iter().map(rat).collect();
        let c_rat: Vec<BigRational> = c[1..].iter().map(rat).collect();
        prop_assert_eq!(&newton_c_from_s(&s_rat[..n]), &c_rat);
        for j in 1..=s.len() {
            prop_assert_eq!(&next_power_sum(&c_rat, &s_rat[..j - 1], j), &s_rat[j - 1]);
            if j > n {
                prop_assert_eq!(&newton_extend_s(&c_rat, &s_rat[..j - 1], j).unwrap(), &s_rat[j - 1]);
            }
        }
    }

    #[test]
    fn c_from_s_inverts_next_power_sum(c in prop::collection::vec(-50i64..=50, 1..=6)) {
        let c: Vec<BigRational> = c.iter().map(|&x| BigRational::from_integer(x.into())).collect();
        let mut s = Vec::new();
        for j in 1..=c.len() {
            let sj = next_power_sum(&c, &s, j);
            s.push(sj);
        }
        prop_assert_eq!(newton_c_from_s(&s), c);
    }
}

#[test]
fn power_sums_of_large_roots_stay_exact() {
    let roots = [9, -9, 8, 7, -6, 5];
    let s60 = power_sum(&roots, 60);
    assert!(s60.abs() > BigInt::from(u128::MAX));
    let c: Vec<BigRational> = expand(&roots)[1..].iter().map(rat).collect();
    let s: Vec<BigRational> = (1..60).map(|j| rat(&power_sum(&roots, j))).collect();
    assert_eq!(newton_extend_s(&c, &s, 60).unwrap(), rat(&s60));
}
