//! Invariant sectors and their Hamiltonian blocks.
//!
//! Each sector is an eigenspace of the number-type invariant (plus `n_L` in
//! two dimensions and `j, m_j` in three). Generic sectors are four
//! dimensional; the lowest ones shrink to a three-state "triplet" and a
//! one-state "singlet".

mod key;
mod planar;
mod spatial;

use alloc::vec::Vec;

use nalgebra::DMatrix;

use crate::error::{Error, Result};

pub use key::{CoupledLabel, Family, SectorBasis, SectorKey, SectorKind, SectorState};
pub use planar::{block_1d, block_2d, block_symm, block_triplet, sectors_1d, singlet_energy, symm_basis_change};
pub use spatial::{block_3d, block_3d_base, sectors_3d, BaseBranch};

/// Real symmetric sector block together with the states it acts on, when
/// those are known.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockMatrix {
    basis: Option<SectorBasis>,
    entries: DMatrix<f64>,
}

impl BlockMatrix {
    pub fn new(basis: Option<SectorBasis>, entries: DMatrix<f64>) -> Result<Self> {
        let k = entries.nrows();
        if entries.ncols() != k {
            return Err(Error::DimensionMismatch { left: k, right: entries.ncols() });
        }
        if let Some(b) = &basis {
            if b.states.len() != k {
                return Err(Error::DimensionMismatch { left: k, right: b.states.len() });
            }
        }
        let defect = (&entries - entries.transpose()).abs().max();
        if defect != 0.0 {
            return Err(Error::NotSymmetric(defect));
        }
        Ok(BlockMatrix { basis, entries })
    }

    pub(crate) fn from_upper(basis: Option<SectorBasis>, k: usize, diag: &[f64], upper: &[(usize, usize, f64)]) -> Self {
        let mut m = DMatrix::<f64>::zeros(k, k);
        for (i, d) in diag.iter().take(k).enumerate() {
            m[(i, i)] = *d;
        }
        for &(i, j, v) in upper {
            if i < k && j < k {
                m[(i, j)] = v;
                m[(j, i)] = v;
            }
        }
        BlockMatrix { basis, entries: m }
    }

    pub fn basis(&self) -> Option<&SectorBasis> {
        self.basis.as_ref()
    }

    pub fn key(&self) -> Option<SectorKey> {
        self.basis.as_ref().map(|b| b.key)
    }

    pub fn entries(&self) -> &DMatrix<f64> {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.entries.nrows()
    }

    pub fn trace(&self) -> f64 {
        self.entries.trace()
    }
}

/// Hamiltonian block of one sector.
///
/// One and two dimensions evaluate `<s_i|H|s_j>` directly from the operator
/// action, so generic and edge sectors share one code path. Three dimensions
/// use the coupled-basis matrix elements of `Sigma.a` and `Sigma.a^dag`.
pub fn sector_block(key: SectorKey, params: &crate::ModelParams) -> Result<BlockMatrix> {
    params.validate()?;
    if key.dimension() != params.dimension {
        return Err(Error::InvalidSector("key and parameters disagree on dimension".into()));
    }
    match key.dimension() {
        crate::Dimension::Three => spatial::exact_block(key, params),
        _ => planar::operator_block(key, params),
    }
}

/// Sector keys whose product states all sit inside `basis` with `margin`
/// quanta to spare (one and two dimensions).
pub fn interior_sectors(basis: &crate::algebra::ProductBasis, margin: u32) -> Vec<SectorKey> {
    let limit = i64::from(basis.n_max()) - i64::from(margin);
    match basis.dimension() {
        crate::Dimension::One => (-2..=limit - 2).filter_map(|n| SectorKey::one_d(n).ok()).collect(),
        crate::Dimension::Two => (0..=limit.max(-1) as u32)
            .flat_map(|n_l| (-2..=limit - 2).filter_map(move |n| SectorKey::two_d(n, n_l).ok()))
            .collect(),
        crate::Dimension::Three => (-1..=limit - 1).flat_map(sectors_3d).collect(),
    }
}
