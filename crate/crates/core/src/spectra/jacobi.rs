use alloc::vec::Vec;

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::EigenSystem;
use crate::error::{Error, Result};
use crate::sectors::BlockMatrix;

const MAX_SWEEPS: usize = 100;
const OFF_DIAGONAL_TOL: f64 = 1e-13;
const SYMMETRY_TOL: f64 = 1e-12;

/// Cyclic Jacobi diagonalization of a real symmetric matrix.
///
/// Eigenvalues come back ascending; each eigenvector column is normalized and
/// signed so that its largest-magnitude component is positive.
pub fn jacobi_eigen(matrix: &DMatrix<f64>) -> Result<EigenSystem> {
    let n = matrix.nrows();
    if matrix.ncols() != n {
        return Err(Error::DimensionMismatch { left: n, right: matrix.ncols() });
    }
    let scale = matrix.iter().fold(1.0f64, |acc, x| acc.max(x.abs()));
    let mut defect = 0.0f64;
    for i in 0..n {
        for j in i + 1..n {
            defect = defect.max((matrix[(i, j)] - matrix[(j, i)]).abs());
        }
    }
    if defect > SYMMETRY_TOL * scale {
        return Err(Error::NotSymmetric(defect));
    }

    let mut a = (matrix + matrix.transpose()) * 0.5;
    let mut v = DMatrix::<f64>::identity(n, n);
    let norm = a.norm().max(1.0);
    let off_norm = |a: &DMatrix<f64>| -> f64 {
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| a[(i, j)].powi(2)).sum::<f64>().sqrt()
    };
    // sweep down to rounding level; the looser tolerance only decides failure
    for sweep in 0..MAX_SWEEPS {
        if off_norm(&a) <= f64::EPSILON * norm {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let (app, aqq) = (a[(p, p)], a[(q, q)]);
                let g = 100.0 * apq.abs();
                if sweep > 3 && app.abs() + g == app.abs() && aqq.abs() + g == aqq.abs() {
                    a[(p, q)] = 0.0;
                    a[(q, p)] = 0.0;
                    continue;
                }
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (x, y) = (a[(k, p)], a[(k, q)]);
                    a[(k, p)] = c * x - s * y;
                    a[(k, q)] = s * x + c * y;
                }
                for k in 0..n {
                    let (x, y) = (a[(p, k)], a[(q, k)]);
                    a[(p, k)] = c * x - s * y;
                    a[(q, k)] = s * x + c * y;
                }
                a[(p, q)] = 0.0;
                a[(q, p)] = 0.0;
                for k in 0..n {
                    let (x, y) = (v[(k, p)], v[(k, q)]);
                    v[(k, p)] = c * x - s * y;
                    v[(k, q)] = s * x + c * y;
                }
            }
        }
    }
    if off_norm(&a) > OFF_DIAGONAL_TOL * norm {
        return Err(Error::NoConvergence(MAX_SWEEPS));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].total_cmp(&a[(j, j)]));
    let values = order.iter().map(|&i| a[(i, i)]).collect();
    let mut vectors = DMatrix::<f64>::zeros(n, n);
    for (col, &i) in order.iter().enumerate() {
        let mut lead = 0.0f64;
        for k in 0..n {
            if v[(k, i)].abs() > lead.abs() {
                lead = v[(k, i)];
            }
        }
        let sign = if lead < 0.0 { -1.0 } else { 1.0 };
        for k in 0..n {
            vectors[(k, col)] = sign * v[(k, i)];
        }
    }
    Ok(EigenSystem { values, vectors: Some(vectors), branch_map: None })
}

/// Jacobi diagonalization of a sector block.
pub fn jacobi_eigensolver(block: &BlockMatrix) -> Result<EigenSystem> {
    jacobi_eigen(block.entries())
}

/// Eigenvalues of a complex Hermitian matrix via the real embedding
/// `[[Re, -Im], [Im, Re]]`, whose spectrum is that of `h` doubled.
pub fn hermitian_eigenvalues(h: &DMatrix<Complex64>) -> Result<Vec<f64>> {
    let n = h.nrows();
    if h.iter().all(|z| z.im == 0.0) {
        return Ok(jacobi_eigen(&h.map(|z| z.re))?.values);
    }
    let mut big = DMatrix::<f64>::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            let z = h[(i, j)];
            big[(i, j)] = z.re;
            big[(i + n, j + n)] = z.re;
            big[(i, j + n)] = -z.im;
            big[(i + n, j)] = z.im;
        }
    }
    let doubled = jacobi_eigen(&big)?.values;
    Ok(doubled.chunks(2).map(|pair| 0.5 * (pair[0] + pair[1])).collect())
}
