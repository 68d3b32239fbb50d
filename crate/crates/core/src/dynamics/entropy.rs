use alloc::vec::Vec;

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::Zero;

use super::evolve::Propagator;
use super::state::{prepare_initial, StateVector};
use crate::algebra::{BasisLabel, Proj};
use crate::error::{Error, Result};
use crate::params::ModelParams;
use crate::spectra::hermitian_eigenvalues;

const CLIP: f64 = 1e-12;

/// 2x2 isospin density matrix, `rho[a][b]` with index 0 for `T3 = +`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedDensity {
    pub rho: [[Complex64; 2]; 2],
}

impl ReducedDensity {
    pub fn eigenvalues(&self) -> [f64; 2] {
        let a = self.rho[0][0].re;
        let d = self.rho[1][1].re;
        let b = self.rho[0][1].norm();
        let root = ((a - d).powi(2) + 4.0 * b * b).sqrt();
        [0.5 * (a + d - root), 0.5 * (a + d + root)]
    }

    pub fn purity(&self) -> f64 {
        let a = self.rho[0][0].re;
        let d = self.rho[1][1].re;
        a * a + d * d + 2.0 * self.rho[0][1].norm_sqr()
    }

    /// Von Neumann entropy in nats.
    pub fn entropy(&self) -> f64 {
        von_neumann(&self.eigenvalues())
    }
}

fn von_neumann(values: &[f64]) -> f64 {
    values
        .iter()
        .map(|&l| {
            let l = if (-CLIP..0.0).contains(&l) { 0.0 } else { l };
            if l > 0.0 {
                -l * l.ln()
            } else {
                0.0
            }
        })
        .sum()
}

/// Traces out the oscillator and *-spin.
pub fn reduce_isospin(state: &StateVector) -> ReducedDensity {
    let mut rho = [[Complex64::zero(); 2]; 2];
    for (i, label) in state.basis.labels().iter().enumerate() {
        if label.iso != Proj::Up {
            continue;
        }
        let up = state.amplitudes[i];
        let partner = BasisLabel { iso: Proj::Down, ..*label };
        let down = state.basis.index_of(&partner).map_or(Complex64::zero(), |j| state.amplitudes[j]);
        rho[0][0] += up * up.conj();
        rho[0][1] += up * down.conj();
        rho[1][1] += down * down.conj();
    }
    rho[1][0] = rho[0][1].conj();
    ReducedDensity { rho }
}

/// Purity and entropy of the oscillator-plus-*-spin side, from the explicit
/// partial trace of `|psi><psi|` over isospin.
pub fn oscillator_side_measures(state: &StateVector) -> Result<(f64, f64)> {
    let labels = state.basis.labels();
    let mut rest: Vec<BasisLabel> = labels.iter().map(|l| BasisLabel { iso: Proj::Up, ..*l }).collect();
    rest.sort_unstable();
    rest.dedup();
    let position = |l: &BasisLabel| rest.binary_search(&BasisLabel { iso: Proj::Up, ..*l }).expect("label present");
    let psi = &state.amplitudes;
    let k = rest.len();
    let mut rho = DMatrix::<Complex64>::zeros(k, k);
    for (i, li) in labels.iter().enumerate() {
        for (j, lj) in labels.iter().enumerate() {
            if li.iso == lj.iso {
                rho[(position(li), position(lj))] += psi[i] * psi[j].conj();
            }
        }
    }
    let purity = (&rho * &rho).trace().re;
    let values = hermitian_eigenvalues(&rho)?;
    Ok((purity, von_neumann(&values)))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntanglementPoint {
    pub t: f64,
    pub gamma: f64,
    pub purity: f64,
    pub entropy: f64,
}

/// Isospin purity and entropy along `t_grid` for the initial state of
/// [`prepare_initial`].
pub fn entanglement_trajectory(n: u32, theta: f64, params: &ModelParams, t_grid: &[f64]) -> Result<Vec<EntanglementPoint>> {
    if t_grid.is_empty() || t_grid.iter().any(|t| !t.is_finite()) || t_grid.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::InvalidGrid);
    }
    let psi = prepare_initial(n, theta, params)?;
    let prop = Propagator::new(&psi, params)?;
    Ok(t_grid
        .iter()
        .map(|&t| {
            let rho = reduce_isospin(&prop.evolve(t));
            EntanglementPoint { t, gamma: params.gamma, purity: rho.purity(), entropy: rho.entropy() }
        })
        .collect())
}
