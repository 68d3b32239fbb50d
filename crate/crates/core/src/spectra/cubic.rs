use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::params::ModelParams;
use crate::sectors::block_triplet;

/// Ascending eigenvalues of a real symmetric 3x3 matrix from the
/// trigonometric solution of its characteristic cubic.
pub fn symmetric3_eigenvalues(m: &DMatrix<f64>) -> Result<[f64; 3]> {
    if m.nrows() != 3 || m.ncols() != 3 {
        return Err(Error::DimensionMismatch { left: 3, right: m.nrows() });
    }
    let off = m[(0, 1)].powi(2) + m[(0, 2)].powi(2) + m[(1, 2)].powi(2);
    if off == 0.0 {
        let mut d = [m[(0, 0)], m[(1, 1)], m[(2, 2)]];
        d.sort_by(f64::total_cmp);
        return Ok(d);
    }
    let q = m.trace() / 3.0;
    let p2 = (m[(0, 0)] - q).powi(2) + (m[(1, 1)] - q).powi(2) + (m[(2, 2)] - q).powi(2) + 2.0 * off;
    let p = (p2 / 6.0).sqrt();
    let shifted = (m - DMatrix::<f64>::identity(3, 3) * q) / p;
    let r = (0.5 * shifted.determinant()).clamp(-1.0, 1.0);
    let phi = r.acos() / 3.0;
    let largest = q + 2.0 * p * phi.cos();
    let smallest = q + 2.0 * p * (phi + 2.0 * core::f64::consts::FRAC_PI_3).cos();
    Ok([smallest, 3.0 * q - largest - smallest, largest])
}

/// Closed-form spectrum of the one-dimensional triplet sector.
pub fn cubic_triplet_eigenvalues(params: &ModelParams) -> Result<[f64; 3]> {
    symmetric3_eigenvalues(block_triplet(params)?.entries())
}
