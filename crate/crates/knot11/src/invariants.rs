//! Headline invariants: dimension tables, polynomials, tau, slice verdicts.

use crate::algebra::{filtered_sublevel, homology_dims, AlgebraError, BitVec, F2Complex};
use crate::gradings::GradedGenerator;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InvariantsError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("graded Euler characteristic is not symmetric")]
    AsymmetricResult,
    #[error("Euler characteristic evaluates to {0} at 1, expected 1")]
    NonUnitAugmentation(i64),
    #[error("hat complex of the three-sphere has homology dimension {0}, expected 1")]
    InconsistentHomology(usize),
}

/// Integer coefficients indexed by (maslov exponent, alexander exponent).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly2 {
    pub coeffs: BTreeMap<(i64, i64), i64>,
}

impl LaurentPoly2 {
    pub fn insert(&mut self, m: i64, a: i64, c: i64) {
        if c != 0 {
            *self.coeffs.entry((m, a)).or_insert(0) += c;
            if self.coeffs[&(m, a)] == 0 {
                self.coeffs.remove(&(m, a));
            }
        }
    }

    /// Substitute q = -1, collapsing to a one-variable Laurent polynomial
    /// in t (keyed by the alexander exponent).
    pub fn at_q_minus_one(&self) -> BTreeMap<i64, i64> {
        let mut out: BTreeMap<i64, i64> = BTreeMap::new();
        for (&(m, a), &c) in &self.coeffs {
            let sign = if m.rem_euclid(2) == 0 { 1 } else { -1 };
            *out.entry(a).or_insert(0) += sign * c;
        }
        out.retain(|_, c| *c != 0);
        out
    }
}

/// Dimensions of the hat knot homology per (alexander, maslov) bigrading.
pub fn hfk_table(
    hat_knot: &F2Complex,
    gradings: &[GradedGenerator],
) -> Result<BTreeMap<(i64, i64), usize>, InvariantsError> {
    let labels: Vec<(i64, i64)> = hat_knot
        .names()
        .iter()
        .map(|&i| (gradings[i - 1].alexander, gradings[i - 1].maslov))
        .collect();
    // the basepoint-free differential preserves alexander and drops maslov
    let dims = homology_dims(hat_knot, &labels, (0, 1))?;
    Ok(dims)
}

/// Generating function of the dimension table.
pub fn poincare(table: &BTreeMap<(i64, i64), usize>) -> LaurentPoly2 {
    let mut poly = LaurentPoly2::default();
    for (&(a, m), &dim) in table {
        poly.insert(m, a, dim as i64);
    }
    poly
}

/// Substitute q = -1 and normalize; the result must be symmetric with
/// value 1 at t = 1.
pub fn alexander_polynomial(
    poincare: &LaurentPoly2,
) -> Result<BTreeMap<i64, i64>, InvariantsError> {
    let delta = poincare.at_q_minus_one();
    for (&a, &c) in &delta {
        if delta.get(&-a).copied().unwrap_or(0) != c {
            return Err(InvariantsError::AsymmetricResult);
        }
    }
    let at_one: i64 = delta.values().sum();
    if at_one != 1 {
        return Err(InvariantsError::NonUnitAugmentation(at_one));
    }
    Ok(delta)
}

/// Top alexander grading carrying homology.
pub fn seifert_genus(table: &BTreeMap<(i64, i64), usize>) -> i64 {
    table.keys().map(|&(a, _)| a).max().unwrap_or(0)
}

/// The minimal filtration level whose sublevel complex carries a cycle
/// that does not bound in the full complex.
pub fn tau(hat_s3: &F2Complex) -> Result<i64, InvariantsError> {
    let total = hat_s3.homology_dim();
    if total != 1 {
        return Err(InvariantsError::InconsistentHomology(total));
    }
    let filt = hat_s3.filtration().expect("alexander filtration required");
    let mut levels: Vec<i64> = filt.to_vec();
    levels.sort_unstable();
    levels.dedup();
    let image = hat_s3.image_basis();
    for a in levels {
        let sub = filtered_sublevel(hat_s3, a);
        // cycles of the sublevel complex, written in the full basis
        for cycle in sub.kernel_basis() {
            let mut full = BitVec::zero(hat_s3.len());
            for (k, &name) in sub.names().iter().enumerate() {
                if cycle.get(k) {
                    let idx = hat_s3.names().iter().position(|&m| m == name).unwrap();
                    full.set(idx);
                }
            }
            if full.is_zero() {
                continue;
            }
            if !image.contains(&full) {
                return Ok(a);
            }
        }
    }
    Err(InvariantsError::InconsistentHomology(0))
}

/// Rows of the full differential in triple notation.
pub fn cfk_table(
    full: &crate::floer::BoundaryTable,
    gradings: &[GradedGenerator],
) -> Vec<String> {
    let p = gradings.len();
    let rows = full.rows(p);
    let offset = |base: &str, delta: i64| -> String {
        match delta.cmp(&0) {
            std::cmp::Ordering::Equal => base.to_string(),
            std::cmp::Ordering::Greater => format!("{base}+{delta}"),
            std::cmp::Ordering::Less => format!("{base}-{}", -delta),
        }
    };
    (1..=p)
        .map(|k| {
            let a_k = gradings[k - 1].alexander;
            let lhs = format!("[x_{k}, i, {}]", offset("i", a_k));
            let mut terms: Vec<String> = rows[k]
                .iter()
                .map(|&(j, n_w, n_z)| {
                    format!(
                        "[x_{j}, {}, {}]",
                        offset("i", -(n_w as i64)),
                        offset("i", a_k - n_z as i64)
                    )
                })
                .collect();
            terms.sort();
            if terms.is_empty() {
                format!("{lhs} -> 0")
            } else {
                format!("{lhs} -> {}", terms.join(" + "))
            }
        })
        .collect()
}

/// Slice-genus verdicts assembled from the other invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceReport {
    pub conway_trivial: bool,
    pub topologically_slice_certified: bool,
    pub smoothly_slice_obstructed: bool,
    pub tau: i64,
    pub g4_lower_bound: i64,
    /// For twist-family members the smooth slice genus is exactly 1 by an
    /// externally constructed cobordism; recorded as metadata only.
    pub g4_family_note: Option<i64>,
}

pub fn slice_report(
    delta: &BTreeMap<i64, i64>,
    tau: i64,
    family_index: Option<u32>,
) -> SliceReport {
    let conway_trivial = delta.len() == 1 && delta.get(&0) == Some(&1);
    SliceReport {
        conway_trivial,
        topologically_slice_certified: conway_trivial,
        smoothly_slice_obstructed: tau != 0,
        tau,
        g4_lower_bound: tau.abs(),
        g4_family_note: family_index.map(|_| 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknot_table() {
        let c = F2Complex::new(1, &[], None).unwrap();
        let gens = vec![GradedGenerator { index: 1, alexander: 0, maslov: 0 }];
        let table = hfk_table(&c, &gens).unwrap();
        assert_eq!(table.len(), 1);
        assert_eq!(table.get(&(0, 0)), Some(&1));
        assert_eq!(seifert_genus(&table), 0);
        let poly = poincare(&table);
        let delta = alexander_polynomial(&poly).unwrap();
        assert_eq!(delta.len(), 1);
    }

    #[test]
    fn tau_unknot() {
        let c = F2Complex::new(1, &[], Some(vec![0])).unwrap();
        assert_eq!(tau(&c).unwrap(), 0);
    }

    #[test]
    fn tau_requires_unit_homology() {
        let c = F2Complex::new(3, &[], Some(vec![0, 0, 0])).unwrap();
        assert!(matches!(tau(&c), Err(InvariantsError::InconsistentHomology(3))));
    }

    #[test]
    fn asymmetric_rejected() {
        let mut poly = LaurentPoly2::default();
        poly.insert(0, 1, 1);
        assert!(matches!(alexander_polynomial(&poly), Err(InvariantsError::AsymmetricResult)));
    }

    #[test]
    fn cfk_rows_format() {
        use crate::diagram::family_params;
        use crate::pipeline::{analyze_family, DEFAULT_WINDOW};
        let _ = family_params(0);
        let a = analyze_family(0, DEFAULT_WINDOW).unwrap();
        let row4 = &a.cfk_rows[3];
        assert!(row4.starts_with("[x_4, i, i] ->"), "{row4}");
        assert!(row4.contains("[x_7, i-1, i]"), "{row4}");
        assert!(row4.contains("[x_21, i, i-1]"), "{row4}");
        assert_eq!(a.cfk_rows[13], "[x_14, i, i] -> 0");
        assert_eq!(a.cfk_rows[0], "[x_1, i, i-1] -> [x_10, i-1, i-1] + [x_21, i-1, i-2] + [x_24, i, i-2] + [x_7, i-2, i-1]");
    }

    #[test]
    fn verdicts() {
        let mut delta = BTreeMap::new();
        delta.insert(0, 1);
        let rep = slice_report(&delta, 1, Some(0));
        assert!(rep.conway_trivial && rep.topologically_slice_certified);
        assert!(rep.smoothly_slice_obstructed);
        assert_eq!(rep.g4_lower_bound, 1);
        assert_eq!(rep.g4_family_note, Some(1));

        let rep = slice_report(&delta, 0, None);
        assert!(!rep.smoothly_slice_obstructed);
        assert_eq!(rep.g4_lower_bound, 0);
        assert_eq!(rep.g4_family_note, None);
    }
}
