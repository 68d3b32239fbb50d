use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec::Vec;

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::Zero;

use super::state::StateVector;
use crate::algebra::{invariant_value, ProductBasis};
use crate::error::{Error, Result};
use crate::params::{Dimension, ModelParams};
use crate::sectors::{sector_block, SectorBasis, SectorKey};
use crate::spectra::jacobi_eigensolver;

struct SectorMode {
    indices: Vec<usize>,
    energies: Vec<f64>,
    vectors: DMatrix<f64>,
    coefficients: Vec<Complex64>,
}

/// Spectral decomposition of one initial state over the sectors it touches,
/// reusable for any number of times.
pub struct Propagator {
    basis: Arc<ProductBasis>,
    start: f64,
    modes: Vec<SectorMode>,
}

fn sector_of(dimension: Dimension, label: &crate::algebra::BasisLabel) -> Result<SectorKey> {
    let n = invariant_value(dimension, label).round() as i64;
    match dimension {
        Dimension::One => SectorKey::one_d(n),
        Dimension::Two => SectorKey::two_d(n, label.modes[1]),
        Dimension::Three => Err(Error::UnsupportedDimension(3)),
    }
}

impl Propagator {
    pub fn new(state: &StateVector, params: &ModelParams) -> Result<Self> {
        params.validate()?;
        let basis = state.basis.clone();
        if basis.dimension() != params.dimension {
            return Err(Error::InvalidParameter("state and parameters disagree on dimension".into()));
        }
        let mut keys = BTreeSet::new();
        for (label, amp) in basis.labels().iter().zip(&state.amplitudes) {
            if !amp.is_zero() {
                keys.insert(sector_of(basis.dimension(), label)?);
            }
        }
        let mut modes = Vec::with_capacity(keys.len());
        let mut covered = alloc::vec![false; basis.len()];
        for key in keys {
            let labels = SectorBasis::new(key).product_labels().ok_or(Error::UndiagonalizedSector)?;
            let indices = labels
                .iter()
                .map(|l| basis.index_of(l).ok_or(Error::InvalidTruncation { n_max: basis.n_max(), min: l.modes[0] }))
                .collect::<Result<Vec<_>>>()?;
            let eig = jacobi_eigensolver(&sector_block(key, params)?)?;
            let vectors = eig.vectors.ok_or(Error::UndiagonalizedSector)?;
            let coefficients = (0..indices.len())
                .map(|j| indices.iter().enumerate().map(|(k, &i)| state.amplitudes[i] * vectors[(k, j)]).sum())
                .collect();
            for &i in &indices {
                covered[i] = true;
            }
            modes.push(SectorMode { indices, energies: eig.values, vectors, coefficients });
        }
        if state.amplitudes.iter().zip(&covered).any(|(a, c)| !a.is_zero() && !c) {
            return Err(Error::UndiagonalizedSector);
        }
        Ok(Propagator { basis, start: state.time, modes })
    }

    /// State after elapsed time `t`.
    pub fn evolve(&self, t: f64) -> StateVector {
        let mut amplitudes = alloc::vec![Complex64::zero(); self.basis.len()];
        for mode in &self.modes {
            for (j, (&e, &c)) in mode.energies.iter().zip(&mode.coefficients).enumerate() {
                let phase = Complex64::from_polar(1.0, -e * t) * c;
                for (k, &i) in mode.indices.iter().enumerate() {
                    amplitudes[i] += phase * mode.vectors[(k, j)];
                }
            }
        }
        StateVector { basis: self.basis.clone(), amplitudes, time: self.start + t }
    }

    /// Energies of the touched sectors, concatenated.
    pub fn energies(&self) -> Vec<f64> {
        self.modes.iter().flat_map(|m| m.energies.iter().copied()).collect()
    }
}

/// `psi(t) = sum_j exp(-i E_j t) <j|psi> |j>` over the touched sectors.
pub fn evolve(state: &StateVector, t: f64, params: &ModelParams) -> Result<StateVector> {
    Ok(Propagator::new(state, params)?.evolve(t))
}
