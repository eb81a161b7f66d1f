//! Exact linear algebra over the two-element field.
//!
//! Complexes are little, so rows are bit-packed `u64` blocks and Gaussian
//! elimination is dense.

use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("differential does not square to zero (at generator {0})")]
    DSquared(usize),
    #[error("filtration increases along the differential at generator {0}")]
    FiltrationViolation(usize),
    #[error("input chain is not a cycle")]
    NotACycle,
    #[error("differential entry {from} -> {to} crosses labels inconsistently")]
    LabelViolation { from: usize, to: usize },
}

/// Bit-packed vector over the two-element field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitVec {
    words: Vec<u64>,
}

impl BitVec {
    pub fn zero(n: usize) -> BitVec {
        BitVec { words: vec![0; n.div_ceil(64)] }
    }
    pub fn set(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }
    pub fn get(&self, i: usize) -> bool {
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }
    pub fn xor_in(&mut self, other: &BitVec) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }
    fn leading(&self) -> Option<usize> {
        for (k, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(k * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }
}

/// Row-reduced basis supporting rank queries and membership tests.
#[derive(Debug, Default, Clone)]
pub struct Basis {
    rows: Vec<(usize, BitVec)>,
}

impl Basis {
    /// Reduce `v` against the basis; if independent, insert and return true.
    pub fn insert(&mut self, mut v: BitVec) -> bool {
        loop {
            let Some(lead) = v.leading() else { return false };
            match self.rows.iter().find(|(l, _)| *l == lead) {
                Some((_, row)) => {
                    let row = row.clone();
                    v.xor_in(&row);
                }
                None => {
                    self.rows.push((lead, v));
                    return true;
                }
            }
        }
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        let mut v = v.clone();
        loop {
            let Some(lead) = v.leading() else { return true };
            match self.rows.iter().find(|(l, _)| *l == lead) {
                Some((_, row)) => {
                    let row = row.clone();
                    v.xor_in(&row);
                }
                None => return false,
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// A finitely generated chain complex over the two-element field, with an
/// optional integer filtration.
///
/// Generators carry stable names (1-based indices of the original diagram)
/// so sublevel complexes stay comparable with their parent.
#[derive(Debug, Clone)]
pub struct F2Complex {
    names: Vec<usize>,
    /// boundary[i] = sorted positions (0-based, internal) hit by generator i
    boundary: Vec<Vec<usize>>,
    filtration: Option<Vec<i64>>,
}

impl F2Complex {
    /// Build a complex on generators named `1..=n` with the given entries;
    /// the squared differential and the filtration property are hard
    /// assertions.
    pub fn new(
        n: usize,
        entries: &[(usize, usize)],
        filtration: Option<Vec<i64>>,
    ) -> Result<F2Complex, AlgebraError> {
        let names: Vec<usize> = (1..=n).collect();
        let mut boundary = vec![Vec::new(); n];
        for &(from, to) in entries {
            boundary[from - 1].push(to - 1);
        }
        for row in &mut boundary {
            row.sort_unstable();
        }
        let c = F2Complex { names, boundary, filtration };
        c.check()?;
        Ok(c)
    }

    fn check(&self) -> Result<(), AlgebraError> {
        let n = self.len();
        for i in 0..n {
            let mut acc = BitVec::zero(n);
            for &j in &self.boundary[i] {
                for &k in &self.boundary[j] {
                    acc.set(k);
                }
            }
            if !acc.is_zero() {
                return Err(AlgebraError::DSquared(self.names[i]));
            }
        }
        if let Some(filt) = &self.filtration {
            for i in 0..n {
                for &j in &self.boundary[i] {
                    if filt[j] > filt[i] {
                        return Err(AlgebraError::FiltrationViolation(self.names[i]));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[usize] {
        &self.names
    }

    pub fn filtration(&self) -> Option<&[i64]> {
        self.filtration.as_deref()
    }

    pub fn boundary_of(&self, i: usize) -> &[usize] {
        &self.boundary[i]
    }

    fn boundary_vec(&self, i: usize) -> BitVec {
        let mut v = BitVec::zero(self.len());
        for &j in &self.boundary[i] {
            v.set(j);
        }
        v
    }

    /// Basis of the image of the differential.
    pub fn image_basis(&self) -> Basis {
        let mut basis = Basis::default();
        for i in 0..self.len() {
            let v = self.boundary_vec(i);
            if !v.is_zero() {
                basis.insert(v);
            }
        }
        basis
    }

    /// Basis of the kernel of the differential.
    pub fn kernel_basis(&self) -> Vec<BitVec> {
        let n = self.len();
        // Transpose-free kernel computation: eliminate the boundary matrix
        // while tracking row operations on the identity.
        let mut mat: Vec<(BitVec, BitVec)> = (0..n)
            .map(|i| {
                let mut id = BitVec::zero(n);
                id.set(i);
                (self.boundary_vec(i), id)
            })
            .collect();
        let mut basis: Vec<(usize, BitVec, BitVec)> = Vec::new();
        let mut kernel = Vec::new();
        for (mut v, mut tag) in mat.drain(..) {
            loop {
                match v.leading() {
                    None => {
                        kernel.push(tag);
                        break;
                    }
                    Some(lead) => {
                        if let Some((_, row, rt)) = basis.iter().find(|(l, _, _)| *l == lead) {
                            let (row, rt) = (row.clone(), rt.clone());
                            v.xor_in(&row);
                            tag.xor_in(&rt);
                        } else {
                            basis.push((lead, v, tag));
                            break;
                        }
                    }
                }
            }
        }
        kernel
    }

    /// Total homology dimension.
    pub fn homology_dim(&self) -> usize {
        let rank = self.image_basis().rank();
        self.len() - 2 * rank
    }
}

/// Homology dimensions split by a per-generator label, where every
/// differential entry must drop the label exactly by `shift`.
pub fn homology_dims(
    c: &F2Complex,
    labels: &[(i64, i64)],
    shift: (i64, i64),
) -> Result<std::collections::BTreeMap<(i64, i64), usize>, AlgebraError> {
    let n = c.len();
    assert_eq!(labels.len(), n);
    for i in 0..n {
        for &j in &c.boundary[i] {
            if (labels[i].0 - labels[j].0, labels[i].1 - labels[j].1) != shift {
                return Err(AlgebraError::LabelViolation { from: c.names[i], to: c.names[j] });
            }
        }
    }
    let mut dims = std::collections::BTreeMap::new();
    let labelset: BTreeSet<(i64, i64)> = labels.iter().cloned().collect();
    for &label in &labelset {
        let here: Vec<usize> = (0..n).filter(|&i| labels[i] == label).collect();
        // rank of the differential out of this label
        let mut out_basis = Basis::default();
        for &i in &here {
            let v = c.boundary_vec(i);
            if !v.is_zero() {
                out_basis.insert(v);
            }
        }
        // rank of the differential into this label
        let above = (label.0 + shift.0, label.1 + shift.1);
        let mut in_basis = Basis::default();
        for i in (0..n).filter(|&i| labels[i] == above) {
            let v = c.boundary_vec(i);
            if !v.is_zero() {
                in_basis.insert(v);
            }
        }
        let dim = here.len() - out_basis.rank() - in_basis.rank();
        if dim > 0 {
            dims.insert(label, dim);
        }
    }
    Ok(dims)
}

/// True iff the cycle (given as a set of generator names) bounds.
pub fn is_boundary(cycle: &BTreeSet<usize>, c: &F2Complex) -> Result<bool, AlgebraError> {
    let n = c.len();
    let mut v = BitVec::zero(n);
    let mut dv = BitVec::zero(n);
    for &name in cycle {
        let i = c.names.iter().position(|&m| m == name).ok_or(AlgebraError::NotACycle)?;
        v.set(i);
        for &j in &c.boundary[i] {
            dv.set(j);
        }
    }
    if !dv.is_zero() {
        return Err(AlgebraError::NotACycle);
    }
    Ok(c.image_basis().contains(&v))
}

/// Restriction to generators of filtration level at most `a`.
pub fn filtered_sublevel(c: &F2Complex, a: i64) -> F2Complex {
    let filt = c.filtration.as_ref().expect("filtration required");
    let keep: Vec<usize> = (0..c.len()).filter(|&i| filt[i] <= a).collect();
    let index_of: std::collections::BTreeMap<usize, usize> =
        keep.iter().enumerate().map(|(new, &old)| (old, new)).collect();
    let names = keep.iter().map(|&i| c.names[i]).collect();
    let boundary = keep
        .iter()
        .map(|&i| c.boundary[i].iter().filter_map(|j| index_of.get(j).copied()).collect())
        .collect();
    let filtration = Some(keep.iter().map(|&i| filt[i]).collect());
    F2Complex { names, boundary, filtration }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_boundary_dims() {
        let c = F2Complex::new(31, &[], None).unwrap();
        assert_eq!(c.homology_dim(), 31);
    }

    #[test]
    fn two_generators_cancel() {
        let c = F2Complex::new(2, &[(1, 2)], None).unwrap();
        assert_eq!(c.homology_dim(), 0);
    }

    #[test]
    fn d_squared_rejected() {
        // a -> b -> c has d^2(a) = c
        assert!(matches!(
            F2Complex::new(3, &[(1, 2), (2, 3)], None),
            Err(AlgebraError::DSquared(1))
        ));
    }

    #[test]
    fn empty_cycle_is_boundary() {
        let c = F2Complex::new(2, &[(1, 2)], None).unwrap();
        assert!(is_boundary(&BTreeSet::new(), &c).unwrap());
    }

    #[test]
    fn boundary_membership() {
        let c = F2Complex::new(2, &[(1, 2)], None).unwrap();
        let cycle: BTreeSet<usize> = [2].into_iter().collect();
        assert!(is_boundary(&cycle, &c).unwrap());
        let not_cycle: BTreeSet<usize> = [1].into_iter().collect();
        assert!(matches!(is_boundary(&not_cycle, &c), Err(AlgebraError::NotACycle)));
    }

    #[test]
    fn sublevel_bounds() {
        let c = F2Complex::new(3, &[(1, 2)], Some(vec![1, 0, -1])).unwrap();
        assert_eq!(filtered_sublevel(&c, -2).len(), 0);
        assert_eq!(filtered_sublevel(&c, 5).len(), 3);
        let s = filtered_sublevel(&c, 0);
        assert_eq!(s.names(), &[2, 3]);
    }

    #[test]
    fn rank_nullity() {
        let c = F2Complex::new(4, &[(1, 2), (3, 2), (4, 2)], None).unwrap();
        let rank = c.image_basis().rank();
        let nullity = c.kernel_basis().len();
        assert_eq!(rank + nullity, c.len());
    }

    #[test]
    fn labeled_homology() {
        // a -> b with labels dropping by (1, 0)
        let c = F2Complex::new(3, &[(1, 2)], None).unwrap();
        let labels = vec![(1, 4), (0, 4), (7, 7)];
        let dims = homology_dims(&c, &labels, (1, 0)).unwrap();
        assert_eq!(dims.get(&(7, 7)), Some(&1));
        assert_eq!(dims.get(&(1, 4)), None);
        let bad = homology_dims(&c, &labels, (0, 1));
        assert!(matches!(bad, Err(AlgebraError::LabelViolation { from: 1, to: 2 })));
    }
}
