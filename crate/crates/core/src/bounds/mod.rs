//! Closed-form face-number formulas and the verifiers that compare them with
//! constructed lattices.
//!
//! Every binomial here vanishes outside `0 <= b <= a`, including for negative
//! `a`. All arithmetic is exact.

mod keyprop;
mod sweep;
mod verify;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use keyprop::{
    key_prop_count, key_prop_exhaustive, key_prop_random, KeyPropOutcome, KeyPropSummary,
};
pub use sweep::{
    check_relations, enumerate_class, verify_appendix, verify_complete_ordering,
    verify_complete_ordering_constructed, verify_simple_case, AppendixReport, BoundRow,
    OrderingCertificate, RelationCheck, SimpleCaseReport, write_rows_csv,
};
pub use verify::{verify_2d1_bound, verify_grunbaum};

/// `C(a, b)`, zero unless `0 <= b <= a`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 || a < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for j in 0..b {
        acc *= a - j;
        acc /= j + 1;
    }
    acc
}

/// Machine-word binomial for counting; panics on overflow.
pub fn binomial_u128(a: u64, b: u64) -> u128 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for j in 0..b as u128 {
        acc = acc
            .checked_mul(a as u128 - j)
            .expect("binomial overflows u128")
            / (j + 1);
    }
    acc
}

fn c(a: i64, b: i64) -> BigInt {
    binomial(a, b)
}

/// Lower bound on the number of `k`-faces of a `d`-polytope with `n = d + s`
/// vertices: `C(d+1,k+1) + C(d,k+1) - C(d+1-s,k+1)`.
pub fn phi(k: i64, n: i64, d: i64) -> BigInt {
    let s = n - d;
    c(d + 1, k + 1) + c(d, k + 1) - c(d + 1 - s, k + 1)
}

/// Whether `phi(_, n, d)` is inside the range `1 <= s <= d` where it is a bound.
pub fn phi_in_range(n: i64, d: i64) -> bool {
    let s = n - d;
    (1..=d).contains(&s)
}

/// Number of `k`-faces of the `(d-i)`-fold pyramid over `∂Δ^m * ∂Δ^(i-m)`.
pub fn fvec_tdm_formula(d: i64, i: i64, m: i64, k: i64) -> BigInt {
    let b = d - k + 1;
    c(d + 2, b) - c(d - i + m + 1, b) - c(d - m + 1, b) + c(d - i + 1, b)
}

/// Full f-vector of `T^{d,d-i}_m` from [`fvec_tdm_formula`].
pub fn tdm_fvector_formula(d: usize, i: usize, m: usize) -> Vec<BigInt> {
    (0..d as i64)
        .map(|k| fvec_tdm_formula(d as i64, i as i64, m as i64, k))
        .collect()
}

/// Lower bound for `m`-faces of `d`-polytopes with `2d + 1` vertices and
/// `d + 2` facets.
pub fn bound_a(m: i64, d: i64) -> BigInt {
    let h = (d + 1) / 2;
    c(d + 1, m + 1) + c(d, m + 1) + c(d - 1, m + 1) - c(h, m + 1) - c(h - 1, m + 1)
}

/// Lower bound for `m`-faces (`m >= 1`) of `d`-polytopes with `2d + 1`
/// vertices and at least `d + 3` facets.
pub fn bound_b(m: i64, d: i64) -> BigInt {
    c(d + 1, m + 1) + c(d, m + 1) + c(d - 1, m)
}

pub fn delta(m: i64, d: i64) -> BigInt {
    bound_a(m, d) - bound_b(m, d)
}

/// `f_m` of the dual of a stacked `T^{d,d-2}_1`: `2d + 1` for `m = 0`,
/// [`bound_b`] otherwise.
pub fn nabla_formula(d: i64, m: i64) -> BigInt {
    if m == 0 {
        BigInt::from(2 * d + 1)
    } else {
        bound_b(m, d)
    }
}

/// `f_j` of a stacked `d`-polytope with `n` vertices,
/// `C(d, j) n - C(d+1, j+1) j`, valid for `0 <= j <= d - 2`. Writing
/// `j = d - 1 - m` gives `C(d, m+1) n - C(d+1, m+1) (d-1-m)`.
pub fn stacked_lbt_fvector(d: i64, n: i64, j: i64) -> Result<BigInt> {
    if j < 0 || j > d - 2 {
        return Err(Error::OutOfFormulaRange(format!(
            "stacked face formula covers 0 <= j <= d-2, got d={d}, j={j}"
        )));
    }
    Ok(c(d, j) * n - c(d + 1, j + 1) * j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pascal(rows: usize) -> Vec<Vec<BigInt>> {
        let mut t: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for a in 1..rows {
            let prev = &t[a - 1];
            let mut row = vec![BigInt::one(); a + 1];
            for b in 1..a {
                row[b] = &prev[b - 1] + &prev[b];
            }
            t.push(row);
        }
        t
    }

    proptest! {
        #[test]
        fn binomial_matches_pascal_triangle(a in -5i64..70, b in -5i64..75) {
            let t = pascal(70);
            let expected = if a >= 0 && b >= 0 && b <= a {
                t[a as usize][b as usize].clone()
            } else {
                BigInt::zero()
            };
            prop_assert_eq!(binomial(a, b), expected.clone());
            if a >= 0 && b >= 0 {
                prop_assert_eq!(BigInt::from(binomial_u128(a as u64, b as u64)), expected);
            }
        }
    }

    #[test]
    fn phi_values() {
        for d in 1..12 {
            for k in 0..d {
                assert_eq!(phi(k, d + 1, d), binomial(d + 1, k + 1));
            }
            if d >= 2 {
                assert_eq!(phi(d - 1, 2 * d, d), BigInt::from(d + 2));
            }
        }
        assert_eq!(phi(1, 7, 4), BigInt::from(15));
        assert!(phi_in_range(8, 4) && !phi_in_range(9, 4) && !phi_in_range(4, 4));
    }

    #[test]
    fn tdm_formula_values() {
        assert_eq!(fvec_tdm_formula(5, 5, 2, 3), BigInt::from(30));
        for d in 2..=9i64 {
            for i in 2..=d {
                for m in 1..=i / 2 {
                    assert_eq!(fvec_tdm_formula(d, i, m, d - 1), BigInt::from(d + 1 + m * (i - m)));
                    assert_eq!(fvec_tdm_formula(d, i, m, 0), BigInt::from(d + 2));
                }
            }
        }
    }

    #[test]
    fn appendix_values() {
        assert_eq!(delta(1, 6), BigInt::from(1));
        assert_eq!(delta(3, 9), BigInt::from(8));
        // d = 2a + 1, m = a - 1: C(2a+1, a) / (2a+1) - (a+2)
        for a in 4..30i64 {
            let lhs = delta(a - 1, 2 * a + 1);
            let rhs = binomial(2 * a + 1, a) / (2 * a + 1) - (a + 2);
            assert_eq!(lhs, rhs, "a={a}");
        }
    }

    #[test]
    fn nabla_formula_at_three() {
        let f: Vec<BigInt> = (0..3).map(|m| nabla_formula(3, m)).collect();
        assert_eq!(f, vec![7.into(), 11.into(), 6.into()]);
    }

    #[test]
    fn stacked_formula_values() {
        assert_eq!(stacked_lbt_fvector(3, 6, 1).unwrap(), BigInt::from(12));
        assert_eq!(stacked_lbt_fvector(3, 6, 0).unwrap(), BigInt::from(6));
        assert!(matches!(stacked_lbt_fvector(3, 6, 2), Err(Error::OutOfFormulaRange(_))));
    }
}
