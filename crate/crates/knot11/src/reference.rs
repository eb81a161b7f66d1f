//! Published reference data for the twist family `K(64n+31, 24n+12, 16n+6,
//! 32n+18)`: grading vectors, the two differential tables of the first
//! member, and the closed-form Poincare polynomial.

use crate::invariants::LaurentPoly2;
use std::collections::BTreeMap;

fn fill(dst: &mut [i64], start: i64, reps: i64, pattern: &[i64]) {
    for rep in 0..reps {
        for (j, &v) in pattern.iter().enumerate() {
            dst[(start + 8 * rep) as usize + j] = v;
        }
    }
}

/// Absolute Alexander gradings of the family member `K_n`, 1-based.
pub fn family_alexander(n: u32) -> Vec<i64> {
    let n = n as i64;
    let p = 64 * n + 31;
    let mut a = vec![0i64; (p + 1) as usize];
    fill(&mut a, 1, n, &[-1, 0, 1, 0, 1, 0, -1, 0]);
    a[(8 * n + 1) as usize] = -1;
    fill(&mut a, 8 * n + 2, 2 * n + 1, &[0, 1, 0, 1, 2, 1, 2, 1]);
    fill(&mut a, 24 * n + 10, n, &[0, 1, 0, -1, 0, -1, 0, 1]);
    for (j, &v) in [0, 1, 0, -1, 0, -1, 0, 1, 0, 1, 0, -1, 0].iter().enumerate() {
        a[(32 * n + 10) as usize + j] = v;
    }
    fill(&mut a, 32 * n + 23, n, &[-1, 0, 1, 0, 1, 0, -1, 0]);
    fill(&mut a, 40 * n + 23, 2 * n + 1, &[-1, -2, -1, -2, -1, 0, -1, 0]);
    a[(56 * n + 31) as usize] = 1;
    fill(&mut a, 56 * n + 32, n, &[0, 1, 0, -1, 0, -1, 0, 1]);
    a
}

/// Absolute Maslov gradings of the family member `K_n`, 1-based.
pub fn family_maslov(n: u32) -> Vec<i64> {
    let n = n as i64;
    let p = 64 * n + 31;
    let mut m = vec![0i64; (p + 1) as usize];
    fill(&mut m, 1, n, &[-2, -1, 0, 0, 1, 0, -1, -1]);
    m[(8 * n + 1) as usize] = -2;
    fill(&mut m, 8 * n + 2, n + 1, &[-1, 0, 0, 1, 2, 1, 1, 0]);
    fill(&mut m, 16 * n + 10, n, &[-1, 1, 0, 1, 2, 0, 1, 0]);
    fill(&mut m, 24 * n + 10, n, &[-1, 1, 0, -1, 0, -2, -1, 0]);
    for (j, &v) in [-1, 1, 0, -1, 0, -2, -1, 0, 0, 1, 0, -1, -1].iter().enumerate() {
        m[(32 * n + 10) as usize + j] = v;
    }
    fill(&mut m, 32 * n + 23, n, &[-2, -1, 0, 0, 1, 0, -1, -1]);
    fill(&mut m, 40 * n + 23, n, &[-2, -3, -2, -2, -1, 0, -1, -1]);
    fill(&mut m, 48 * n + 23, n + 1, &[-2, -3, -1, -2, -1, 0, -2, -1]);
    m[(56 * n + 31) as usize] = 0;
    fill(&mut m, 56 * n + 32, n, &[-1, 1, 0, -1, 0, -2, -1, 0]);
    m
}

/// Closed form `-q^{-1} + (2n+1) q^{-3} t^{-2} (1+q)(1+qt)^4`, expanded.
pub fn family_poincare(n: u32) -> LaurentPoly2 {
    let odd = 2 * n as i64 + 1;
    let mut poly = LaurentPoly2::default();
    // (1+q)(1+qt)^4 = sum over i in 0..=4, e in 0..=1 of C(4,i) q^{i+e} t^i
    let binom = [1i64, 4, 6, 4, 1];
    for (i, &b) in binom.iter().enumerate() {
        for e in 0..=1i64 {
            poly.insert(i as i64 + e - 3, i as i64 - 2, odd * b);
        }
    }
    poly.insert(-1, 0, -1);
    poly
}

/// Dimension table implied by the closed form (all coefficients are
/// non-negative for the family).
pub fn family_hfk_table(n: u32) -> BTreeMap<(i64, i64), usize> {
    family_poincare(n)
        .coeffs
        .iter()
        .map(|(&(m, a), &c)| {
            debug_assert!(c > 0);
            ((a, m), c as usize)
        })
        .collect()
}

/// The full differential table of `K_0`: `(from, to, n_w, n_z)`.
pub const K0_FULL_TABLE: [(usize, usize, u32, u32); 60] = [
    (1, 7, 2, 0),
    (1, 10, 1, 0),
    (1, 21, 1, 1),
    (1, 24, 0, 1),
    (2, 1, 0, 1),
    (2, 3, 1, 0),
    (2, 9, 1, 0),
    (2, 23, 0, 1),
    (3, 7, 1, 1),
    (3, 8, 1, 0),
    (3, 21, 0, 2),
    (3, 22, 0, 1),
    (4, 7, 1, 0),
    (4, 21, 0, 1),
    (5, 4, 0, 1),
    (5, 6, 1, 0),
    (5, 20, 0, 1),
    (6, 7, 0, 1),
    (6, 19, 0, 1),
    (7, 18, 0, 1),
    (8, 17, 0, 1),
    (9, 8, 1, 0),
    (9, 10, 0, 1),
    (9, 16, 0, 1),
    (10, 15, 0, 1),
    (11, 14, 0, 1),
    (12, 11, 1, 0),
    (12, 13, 0, 1),
    (13, 14, 1, 0),
    (16, 15, 0, 1),
    (16, 17, 1, 0),
    (19, 18, 0, 1),
    (20, 19, 1, 0),
    (20, 21, 0, 1),
    (21, 18, 1, 0),
    (22, 17, 1, 0),
    (23, 16, 1, 0),
    (23, 22, 1, 0),
    (23, 24, 0, 1),
    (24, 15, 1, 0),
    (25, 14, 1, 0),
    (26, 13, 1, 0),
    (26, 25, 1, 0),
    (27, 12, 1, 0),
    (27, 26, 0, 1),
    (27, 28, 1, 0),
    (28, 11, 1, 0),
    (28, 25, 0, 1),
    (29, 10, 1, 0),
    (29, 11, 2, 0),
    (29, 24, 0, 1),
    (29, 25, 1, 1),
    (30, 9, 1, 0),
    (30, 23, 0, 1),
    (30, 29, 0, 1),
    (30, 31, 1, 0),
    (31, 8, 1, 0),
    (31, 11, 1, 1),
    (31, 22, 0, 1),
    (31, 25, 0, 2),
];

/// The hat differential of the three-sphere complex of `K_0`:
/// `(from, to, n_z)`.
pub const K0_HAT_S3_TABLE: [(usize, usize, u32); 28] = [
    (1, 24, 1),
    (2, 1, 1),
    (2, 23, 1),
    (3, 21, 2),
    (3, 22, 1),
    (4, 21, 1),
    (5, 4, 1),
    (5, 20, 1),
    (6, 7, 1),
    (6, 19, 1),
    (7, 18, 1),
    (8, 17, 1),
    (9, 10, 1),
    (9, 16, 1),
    (10, 15, 1),
    (11, 14, 1),
    (12, 13, 1),
    (16, 15, 1),
    (19, 18, 1),
    (20, 21, 1),
    (23, 24, 1),
    (27, 26, 1),
    (28, 25, 1),
    (29, 24, 1),
    (30, 23, 1),
    (30, 29, 1),
    (31, 22, 1),
    (31, 25, 2),
];

/// The generating cycle of the hat homology of the three-sphere for `K_0`.
pub const K0_SURVIVING_CYCLE: [usize; 4] = [3, 4, 28, 31];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k0_vectors() {
        assert_eq!(
            &family_alexander(0)[1..],
            &[
                -1, 0, 1, 0, 1, 2, 1, 2, 1, 0, 1, 0, -1, 0, -1, 0, 1, 0, 1, 0, -1, 0, -1, -2, -1,
                -2, -1, 0, -1, 0, 1
            ]
        );
        assert_eq!(
            &family_maslov(0)[1..],
            &[
                -2, -1, 0, 0, 1, 2, 1, 1, 0, -1, 1, 0, -1, 0, -2, -1, 0, 0, 1, 0, -1, -1, -2, -3,
                -1, -2, -1, 0, -2, -1, 0
            ]
        );
    }

    #[test]
    fn vectors_consistent_with_polynomial() {
        for n in 0..=4u32 {
            let a = family_alexander(n);
            let m = family_maslov(n);
            let p = 64 * n as usize + 31;
            let mut counts: BTreeMap<(i64, i64), usize> = BTreeMap::new();
            for i in 1..=p {
                *counts.entry((a[i], m[i])).or_insert(0) += 1;
            }
            assert_eq!(counts, family_hfk_table(n), "n = {n}");
        }
    }

    #[test]
    fn poincare_total_rank() {
        for n in 0..=4u32 {
            let total: i64 = family_poincare(n).coeffs.values().sum();
            assert_eq!(total, 64 * (n as i64) + 31);
            let dim: usize = family_hfk_table(n).values().sum();
            assert_eq!(dim, 64 * n as usize + 31);
        }
    }

    #[test]
    fn hat_s3_matches_basepoint_free_part() {
        let from_full: Vec<(usize, usize, u32)> = K0_FULL_TABLE
            .iter()
            .filter(|&&(_, _, n_w, _)| n_w == 0)
            .map(|&(f, t, _, n_z)| (f, t, n_z))
            .collect();
        assert_eq!(from_full, K0_HAT_S3_TABLE.to_vec());
    }
}
