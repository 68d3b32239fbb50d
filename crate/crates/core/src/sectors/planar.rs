use alloc::vec::Vec;

use nalgebra::DMatrix;

use super::{BlockMatrix, SectorBasis, SectorKey};
use crate::algebra::apply_hamiltonian;
use crate::error::{Error, Result};
use crate::params::{Dimension, ModelParams};

pub(super) fn operator_block(key: SectorKey, params: &ModelParams) -> Result<BlockMatrix> {
    let basis = SectorBasis::new(key);
    let labels = basis.product_labels().ok_or(Error::UnsupportedDimension(key.dimension().index()))?;
    let k = labels.len();
    let mut m = DMatrix::<f64>::zeros(k, k);
    for (j, label) in labels.iter().enumerate() {
        for (target, amp) in apply_hamiltonian(params, label) {
            if let Some(i) = labels.iter().position(|l| *l == target) {
                m[(i, j)] += amp.re;
            }
        }
    }
    BlockMatrix::new(Some(basis), m)
}

fn generic_entries(n: u32, params: &ModelParams) -> ([f64; 4], [(usize, usize, f64); 4]) {
    let ModelParams { m, a, b, alpha, gamma, .. } = *params;
    let s = params.scale();
    let r2 = s * f64::from(n + 2).sqrt();
    let r1 = s * f64::from(n + 1).sqrt();
    let diag = [-m - (b - a) * gamma, -m + (b - a) * gamma, m - (b + a) * gamma, m + (a + b) * gamma];
    let upper = [(0, 1, alpha * (b - a) * r2), (0, 2, r2), (1, 3, r1), (2, 3, alpha * (b + a) * r1)];
    (diag, upper)
}

fn require(params: &ModelParams, dim: Dimension) -> Result<()> {
    params.validate()?;
    if params.dimension != dim {
        return Err(Error::UnsupportedDimension(params.dimension.index()));
    }
    Ok(())
}

/// Generic one-dimensional block on
/// `(|n+2,-,->, |n+1,-,+>, |n+1,+,->, |n,+,+>)`, labels `|n, *-spin, isospin>`.
///
/// Written out entry by entry; [`super::sector_block`] derives the same
/// matrix from the operator.
pub fn block_1d(n: i64, params: &ModelParams) -> Result<BlockMatrix> {
    require(params, Dimension::One)?;
    if n < 0 {
        return Err(Error::InvalidSector("n < 0 belongs to the triplet or singlet".into()));
    }
    let (diag, upper) = generic_entries(n as u32, params);
    Ok(BlockMatrix::from_upper(Some(SectorBasis::new(SectorKey::one_d(n)?)), 4, &diag, &upper))
}

/// Three-state block of the `n = -1` sector on `(|1,-,->, |0,-,+>, |0,+,->)`.
pub fn block_triplet(params: &ModelParams) -> Result<BlockMatrix> {
    require(params, Dimension::One)?;
    super::sector_block(SectorKey::one_d(-1)?, params)
}

/// Energy of the lone state `|0,-,->`.
pub fn singlet_energy(params: &ModelParams) -> f64 {
    -(params.m + (params.b - params.a) * params.gamma)
}

/// Generic planar block in the chiral occupation `n_R`. The spectator `n_L`
/// of the attached basis is zero; every other `n_L` gives the same matrix.
pub fn block_2d(n_r: i64, params: &ModelParams) -> Result<BlockMatrix> {
    require(params, Dimension::Two)?;
    if n_r < 0 {
        return Err(Error::InvalidSector("n_R < 0 belongs to an edge sector".into()));
    }
    let (diag, upper) = generic_entries(n_r as u32, params);
    Ok(BlockMatrix::from_upper(Some(SectorBasis::new(SectorKey::two_d(n_r, 0)?)), 4, &diag, &upper))
}

/// Block in the total-spin basis `(|0,0>, |1,1>, |1,0>, |1,-1>)` of
/// `sigma + T`, for `A = 0`, `B alpha = 1` and equal mass and static field.
///
/// The singlet row and column vanish and the triplet part is traceless.
pub fn block_symm(n: i64, gamma: f64) -> Result<BlockMatrix> {
    if n < 0 {
        return Err(Error::InvalidSector("n must be non-negative".into()));
    }
    let n = n as f64;
    let a = (2.0 * (n + 1.0)).sqrt();
    let b = (2.0 * (n + 2.0)).sqrt();
    let diag = [0.0, 2.0 * gamma, 0.0, -2.0 * gamma];
    Ok(BlockMatrix::from_upper(None, 4, &diag, &[(1, 2, a), (2, 3, b)]))
}

/// Orthogonal matrix whose columns express the total-spin states of
/// [`block_symm`] in the product basis of [`block_1d`].
pub fn symm_basis_change() -> DMatrix<f64> {
    let h = core::f64::consts::FRAC_1_SQRT_2;
    #[rustfmt::skip]
    let cols = [
        0.0, h, -h, 0.0,  // singlet
        0.0, 0.0, 0.0, 1.0, // |1, 1>
        0.0, h, h, 0.0,   // |1, 0>
        1.0, 0.0, 0.0, 0.0, // |1,-1>
    ];
    DMatrix::from_column_slice(4, 4, &cols)
}

/// Singlet, triplet and generic sectors up to `n_top`.
pub fn sectors_1d(n_top: i64) -> Vec<SectorKey> {
    (-2..=n_top).filter_map(|n| SectorKey::one_d(n).ok()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::invariant_value;
    use crate::sectors::sector_block;
    use crate::spectra::jacobi_eigensolver;

    fn p1() -> ModelParams {
        ModelParams::new(Dimension::One).with_mass(1.1).with_couplings(0.4, 0.8).with_alpha(1.3).with_gamma(0.6)
    }

    #[test]
    fn transcription_matches_operator() {
        for n in 0..12 {
            let written = block_1d(n, &p1()).unwrap();
            let derived = sector_block(SectorKey::one_d(n).unwrap(), &p1()).unwrap();
            assert!((written.entries() - derived.entries()).abs().max() < 1e-15);
        }
    }

    #[test]
    fn triplet_layout() {
        let p = p1();
        let t = block_triplet(&p).unwrap();
        let e = t.entries();
        assert_eq!(t.size(), 3);
        assert_eq!(e[(0, 2)], 1.0);
        assert!((e[(0, 1)] - p.alpha * (p.b - p.a)).abs() < 1e-15);
        assert_eq!(e[(1, 2)], 0.0);
        assert!((e[(0, 0)] + p.m + (p.b - p.a) * p.gamma).abs() < 1e-15);
        assert!((e[(2, 2)] - p.m + (p.b + p.a) * p.gamma).abs() < 1e-15);
    }

    #[test]
    fn triplet_free_spectrum() {
        let m = 0.7;
        let p = ModelParams::new(Dimension::One).with_mass(m);
        let vals = jacobi_eigensolver(&block_triplet(&p).unwrap()).unwrap().values;
        let r = (m * m + 1.0).sqrt();
        for (a, b) in vals.iter().zip([-r, -m, r]) {
            assert!((a - b).abs() < 1e-13);
        }
    }

    #[test]
    fn singlet_matches_operator() {
        let p = p1();
        let s = sector_block(SectorKey::one_d(-2).unwrap(), &p).unwrap();
        assert!((s.entries()[(0, 0)] - singlet_energy(&p)).abs() < 1e-15);
        let q = ModelParams::new(Dimension::One).with_mass(1.0).with_couplings(0.0, 1.0).with_gamma(0.5);
        assert!((singlet_energy(&q) + 1.5).abs() < 1e-15);
    }

    #[test]
    fn sector_states_share_invariant() {
        for key in sectors_1d(6) {
            let labels = SectorBasis::new(key).product_labels().unwrap();
            for l in &labels {
                assert_eq!(invariant_value(Dimension::One, l), key.n() as f64);
            }
        }
    }

    #[test]
    fn planar_block_is_spectator_free() {
        let p = ModelParams::new(Dimension::Two).with_mass(0.9).with_couplings(0.3, 0.5).with_alpha(0.8).with_gamma(0.4);
        for n in -2..5 {
            let first = sector_block(SectorKey::two_d(n, 0).unwrap(), &p).unwrap();
            for n_l in 1..4 {
                let other = sector_block(SectorKey::two_d(n, n_l).unwrap(), &p).unwrap();
                assert_eq!(first.entries(), other.entries());
            }
        }
        let b = block_2d(0, &p).unwrap();
        assert!((b.entries()[(2, 3)] - 2.0 * p.alpha * (p.b + p.a)).abs() < 1e-15);
    }

    #[test]
    fn planar_free_spectrum() {
        let m = 1.2;
        let p = ModelParams::new(Dimension::Two).with_mass(m);
        let vals = jacobi_eigensolver(&block_2d(0, &p).unwrap()).unwrap().values;
        let (r4, r8) = ((m * m + 4.0).sqrt(), (m * m + 8.0).sqrt());
        for (a, b) in vals.iter().zip([-r8, -r4, r4, r8]) {
            assert!((a - b).abs() < 1e-13);
        }
    }

    #[test]
    fn symm_is_rotated_block() {
        let o = symm_basis_change();
        assert!((o.transpose() * &o - DMatrix::identity(4, 4)).abs().max() < 1e-15);
        for n in 0..10 {
            let g = 0.3 + 0.2 * n as f64;
            let p = ModelParams::new(Dimension::One).with_mass(g).with_couplings(0.0, 1.0).with_alpha(1.0).with_gamma(g);
            let h = block_1d(n, &p).unwrap();
            let rotated = o.transpose() * h.entries() * &o;
            assert!((rotated - block_symm(n, g).unwrap().entries()).abs().max() < 1e-14);
        }
        let e = block_symm(0, 1.0).unwrap();
        let r2 = 2.0f64.sqrt();
        assert!((e.entries()[(1, 2)] - r2).abs() < 1e-15 && (e.entries()[(2, 3)] - 2.0).abs() < 1e-15);
    }
}
