use nalgebra::DMatrix;

use super::EigenSystem;
use crate::error::{Error, Result};
use crate::params::{Dimension, ModelParams};

const RADICAND_TOL: f64 = 1e-12;

fn check(n: i64, params: &ModelParams) -> Result<f64> {
    params.validate()?;
    if params.dimension != Dimension::One {
        return Err(Error::UnsupportedDimension(params.dimension.index()));
    }
    if params.scale() != 1.0 {
        return Err(Error::CaseMismatch("closed forms assume unit ladder scale"));
    }
    if n < 0 {
        return Err(Error::InvalidSector("n must be non-negative".into()));
    }
    Ok(n as f64)
}

/// Eigenvalues with the isospin ladder switched off (`alpha = 0`); the
/// block splits into two decoupled pairs.
pub fn eigenvalues_alpha0(n: i64, params: &ModelParams) -> Result<EigenSystem> {
    let nf = check(n, params)?;
    if params.alpha != 0.0 {
        return Err(Error::CaseMismatch("needs alpha = 0"));
    }
    let ModelParams { m, a, b, gamma, .. } = *params;
    let upper = (nf + 2.0 + (m - a * gamma).powi(2)).sqrt();
    let lower = (nf + 1.0 + (m + a * gamma).powi(2)).sqrt();
    Ok(EigenSystem::from_branches(&[-b * gamma - upper, -b * gamma + upper, b * gamma - lower, b * gamma + lower]))
}

/// Normalized `alpha = 0` eigenvectors as columns in branch order.
///
/// Branches 1, 2 live on states 1 and 3 with components
/// `((E + (A+B) gamma - m)/sqrt(n+2), 1)`; branches 3, 4 on states 2 and 4
/// with `((E - (A+B) gamma - m)/sqrt(n+1), 1)`.
pub fn eigenvectors_alpha0(n: i64, params: &ModelParams) -> Result<DMatrix<f64>> {
    let eig = eigenvalues_alpha0(n, params)?;
    let nf = n as f64;
    let ModelParams { m, a, b, gamma, .. } = *params;
    let mut out = DMatrix::<f64>::zeros(4, 4);
    for (i, e) in eig.branches().into_iter().enumerate() {
        let (first, second, x) = if i < 2 {
            (0, 2, (e + (a + b) * gamma - m) / (nf + 2.0).sqrt())
        } else {
            (1, 3, (e - (a + b) * gamma - m) / (nf + 1.0).sqrt())
        };
        let norm = (x * x + 1.0).sqrt();
        out[(first, i)] = x / norm;
        out[(second, i)] = 1.0 / norm;
    }
    Ok(out)
}

/// `(a(n), b(n))` of the massless spectrum `E = +-sqrt((b +- a)/2)`.
///
/// `b = tr(H^2)/2 = (2n+3)(1 + (A^2+B^2) alpha^2) - 2 A B alpha^2`.
pub fn massless_coefficients(n: i64, params: &ModelParams) -> Result<(f64, f64)> {
    let nf = check(n, params)?;
    if params.m != 0.0 || params.gamma != 0.0 {
        return Err(Error::CaseMismatch("needs m = 0 and gamma = 0"));
    }
    let ModelParams { a, b, alpha, .. } = *params;
    let a2 = alpha * alpha;
    let np2 = nf + 2.0;
    let a_sq = 16.0 * b * b * a2 * (a * a * a2 + 1.0) * np2 * np2
        - 8.0 * b * a2 * (a * (a + b).powi(2) * a2 + a + 2.0 * b) * np2
        + (1.0 + (a + b).powi(2) * a2).powi(2);
    let b_coef = (2.0 * nf + 3.0) * (1.0 + (a * a + b * b) * a2) - 2.0 * a * b * a2;
    let scale = b_coef.abs().max(1.0).powi(2);
    if a_sq < -RADICAND_TOL * scale {
        return Err(Error::FormulaViolation(a_sq));
    }
    Ok((a_sq.max(0.0).sqrt(), b_coef))
}

/// Massless, static-field-free spectrum, symmetric under `E -> -E`.
pub fn eigenvalues_massless(n: i64, params: &ModelParams) -> Result<EigenSystem> {
    let (a, b) = massless_coefficients(n, params)?;
    let low = b - a;
    if low < -RADICAND_TOL * b.abs().max(1.0) {
        return Err(Error::FormulaViolation(low));
    }
    let outer = (0.5 * (b + a)).sqrt();
    let inner = (0.5 * low.max(0.0)).sqrt();
    Ok(EigenSystem::from_branches(&[-outer, -inner, inner, outer]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sectors::block_1d;
    use crate::spectra::jacobi_eigen;

    #[test]
    fn alpha0_against_jacobi() {
        let p = ModelParams::new(Dimension::One).with_mass(1.3).with_couplings(0.4, -0.7).with_gamma(0.9);
        for n in 0..10 {
            let closed = eigenvalues_alpha0(n, &p).unwrap();
            let numeric = jacobi_eigen(block_1d(n, &p).unwrap().entries()).unwrap();
            for (a, b) in closed.values.iter().zip(&numeric.values) {
                assert!((a - b).abs() < 1e-12);
            }
            let h = block_1d(n, &p).unwrap();
            let v = eigenvectors_alpha0(n, &p).unwrap();
            for (i, e) in closed.branches().iter().enumerate() {
                let res = (h.entries() * v.column(i) - v.column(i) * *e).norm();
                assert!(res < 1e-12);
            }
        }
    }

    #[test]
    fn massless_reference_point() {
        let p = ModelParams::new(Dimension::One).with_mass(0.0).with_couplings(0.0, 1.0).with_alpha(1.0);
        let e = eigenvalues_massless(0, &p).unwrap().values;
        let r6 = 6.0f64.sqrt();
        for (a, b) in e.iter().zip([-r6, 0.0, 0.0, r6]) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn massless_sum_of_squares() {
        let p = ModelParams::new(Dimension::One).with_mass(0.0).with_couplings(0.8, 1.3).with_alpha(0.6);
        for n in 0..10 {
            let (_, b) = massless_coefficients(n, &p).unwrap();
            let e = eigenvalues_massless(n, &p).unwrap().values;
            let sum: f64 = e.iter().map(|x| x * x).sum();
            assert!((sum - 2.0 * b).abs() < 1e-10);
            let numeric = jacobi_eigen(block_1d(n, &p).unwrap().entries()).unwrap();
            for (a, b) in e.iter().zip(&numeric.values) {
                assert!((a - b).abs() < 1e-10);
            }
        }
    }
}
