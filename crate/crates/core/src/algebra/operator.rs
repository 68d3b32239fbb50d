use alloc::sync::Arc;
use alloc::vec::Vec;

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::Zero;

use super::basis::ProductBasis;
use crate::error::{Error, Result};
use crate::params::LadderConvention;

/// Dense operator on a [`ProductBasis`].
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorMatrix {
    basis: Arc<ProductBasis>,
    entries: DMatrix<Complex64>,
}

impl OperatorMatrix {
    pub fn new(basis: Arc<ProductBasis>, entries: DMatrix<Complex64>) -> Result<Self> {
        let n = basis.len();
        if entries.nrows() != n || entries.ncols() != n {
            return Err(Error::DimensionMismatch { left: n, right: entries.nrows().max(entries.ncols()) });
        }
        Ok(OperatorMatrix { basis, entries })
    }

    pub fn zeros(basis: Arc<ProductBasis>) -> Self {
        let n = basis.len();
        OperatorMatrix { basis, entries: DMatrix::zeros(n, n) }
    }

    pub fn basis(&self) -> &Arc<ProductBasis> {
        &self.basis
    }

    pub fn entries(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    pub fn entries_mut(&mut self) -> &mut DMatrix<Complex64> {
        &mut self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    /// Largest `|H_ij - conj(H_ji)|`.
    pub fn hermiticity_defect(&self) -> f64 {
        let n = self.dim();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in i..n {
                worst = worst.max((self.entries[(i, j)] - self.entries[(j, i)].conj()).norm());
            }
        }
        worst
    }

    /// Real part, if every imaginary part vanishes exactly.
    pub fn to_real(&self) -> Option<DMatrix<f64>> {
        if self.entries.iter().any(|z| z.im != 0.0) {
            return None;
        }
        Some(self.entries.map(|z| z.re))
    }

    /// `self * other`, skipping structural zeros of `self`.
    pub fn mul(&self, other: &OperatorMatrix) -> Result<OperatorMatrix> {
        self.check_same(other)?;
        Ok(OperatorMatrix { basis: self.basis.clone(), entries: sparse_left_mul(&self.entries, &other.entries) })
    }

    pub fn add(&self, other: &OperatorMatrix) -> Result<OperatorMatrix> {
        self.check_same(other)?;
        Ok(OperatorMatrix { basis: self.basis.clone(), entries: &self.entries + &other.entries })
    }

    pub fn apply(&self, psi: &[Complex64]) -> Result<Vec<Complex64>> {
        if psi.len() != self.dim() {
            return Err(Error::DimensionMismatch { left: self.dim(), right: psi.len() });
        }
        let n = self.dim();
        let mut out = alloc::vec![Complex64::zero(); n];
        for (j, &x) in psi.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                *o += self.entries[(i, j)] * x;
            }
        }
        Ok(out)
    }

    /// `<psi|O|psi>`.
    pub fn expectation(&self, psi: &[Complex64]) -> Result<Complex64> {
        let o_psi = self.apply(psi)?;
        Ok(psi.iter().zip(&o_psi).map(|(a, b)| a.conj() * b).sum())
    }

    fn check_same(&self, other: &OperatorMatrix) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { left: self.dim(), right: other.dim() });
        }
        if !Arc::ptr_eq(&self.basis, &other.basis) && self.basis != other.basis {
            return Err(Error::InvalidParameter("operators live on different bases".into()));
        }
        Ok(())
    }
}

fn sparse_left_mul(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let (n, k, m) = (a.nrows(), a.ncols(), b.ncols());
    let mut c = DMatrix::<Complex64>::zeros(n, m);
    for l in 0..k {
        for i in 0..n {
            let x = a[(i, l)];
            if x.is_zero() {
                continue;
            }
            for j in 0..m {
                let y = b[(l, j)];
                if !y.is_zero() {
                    c[(i, j)] += x * y;
                }
            }
        }
    }
    c
}

/// Single-mode ladder matrix on `|0>..|n_max>`: the annihilator, or the
/// creator when `dagger` is set.
pub fn ladder_matrix(n_max: u32, convention: LadderConvention, dagger: bool) -> Result<DMatrix<f64>> {
    if n_max < 1 {
        return Err(Error::InvalidTruncation { n_max, min: 1 });
    }
    let dim = n_max as usize + 1;
    let s = convention.scale();
    let mut a = DMatrix::zeros(dim, dim);
    for n in 1..dim {
        a[(n - 1, n)] = s * (n as f64).sqrt();
    }
    Ok(if dagger { a.transpose() } else { a })
}

/// Kronecker product; the left factor varies slowest.
pub fn kron(a: &DMatrix<f64>, b: &DMatrix<f64>) -> DMatrix<f64> {
    a.kronecker(b)
}

/// Max-abs entry of `[A, B]` over the rows and columns selected by `mask`.
///
/// Products run over the full space, so only the outer indices are restricted.
pub fn commutator_norm(a: &OperatorMatrix, b: &OperatorMatrix, mask: &[bool]) -> Result<f64> {
    a.check_same(b)?;
    let n = a.dim();
    if mask.len() != n {
        return Err(Error::DimensionMismatch { left: n, right: mask.len() });
    }
    let (ea, eb) = (&a.entries, &b.entries);
    let rows: Vec<usize> = (0..n).filter(|&i| mask[i]).collect();
    let mut worst = 0.0f64;
    for &i in &rows {
        let mut row = alloc::vec![Complex64::zero(); n];
        for k in 0..n {
            let x = ea[(i, k)];
            let y = eb[(i, k)];
            if !x.is_zero() {
                for j in 0..n {
                    row[j] += x * eb[(k, j)];
                }
            }
            if !y.is_zero() {
                for j in 0..n {
                    row[j] -= y * ea[(k, j)];
                }
            }
        }
        for &j in &rows {
            worst = worst.max(row[j].norm());
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ladder_elements_follow_scale() {
        let a = ladder_matrix(4, LadderConvention::SQRT2, false).unwrap();
        assert!((a[(2, 3)] - (6.0f64).sqrt()).abs() < 1e-15);
        let ad = ladder_matrix(4, LadderConvention::UNIT, true).unwrap();
        assert!((ad[(3, 2)] - (3.0f64).sqrt()).abs() < 1e-15);
        assert!(ladder_matrix(0, LadderConvention::UNIT, false).is_err());
    }

    #[test]
    fn number_operator_from_ladder_product() {
        let a = ladder_matrix(6, LadderConvention::UNIT, false).unwrap();
        let n = a.transpose() * &a;
        for k in 0..=6 {
            assert!((n[(k, k)] - k as f64).abs() < 1e-14);
        }
    }
}
