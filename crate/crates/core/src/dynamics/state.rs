use alloc::sync::Arc;
use alloc::vec::Vec;

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::Zero;

use crate::algebra::{BasisLabel, OperatorMatrix, ProductBasis, Proj};
use crate::error::{Error, Result};
use crate::params::{Dimension, ModelParams};
use crate::spectra::jacobi_eigen;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnergyBranch {
    Positive,
    Negative,
}

/// Eigenstate `amp_up |n,+> + amp_down |n+1,->` of the field-free oscillator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscEigenstate {
    pub n: u32,
    pub amp_up: f64,
    pub amp_down: f64,
    pub energy: f64,
}

/// Diagonalizes `[[m, s sqrt(n+1)], [s sqrt(n+1), -m]]` on `(|n,+>, |n+1,->)`.
pub fn dirac_oscillator_state(n: u32, params: &ModelParams, branch: EnergyBranch) -> Result<OscEigenstate> {
    params.validate()?;
    let c = params.scale() * f64::from(n + 1).sqrt();
    let h = DMatrix::from_row_slice(2, 2, &[params.m, c, c, -params.m]);
    let eig = jacobi_eigen(&h)?;
    let col = match branch {
        EnergyBranch::Negative => 0,
        EnergyBranch::Positive => 1,
    };
    let v = eig.vectors.as_ref().expect("jacobi returns vectors").column(col);
    // fix the sign by the |n,+> amplitude, falling back to |n+1,->
    let sign = if v[0] < 0.0 || (v[0] == 0.0 && v[1] < 0.0) { -1.0 } else { 1.0 };
    Ok(OscEigenstate { n, amp_up: sign * v[0], amp_down: sign * v[1], energy: eig.values[col] })
}

/// Normalized state on a product basis.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    pub basis: Arc<ProductBasis>,
    pub amplitudes: Vec<Complex64>,
    pub time: f64,
}

impl StateVector {
    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn expectation(&self, op: &OperatorMatrix) -> Result<f64> {
        if op.basis().as_ref() != self.basis.as_ref() {
            return Err(Error::DimensionMismatch { left: self.basis.len(), right: op.dim() });
        }
        Ok(op.expectation(&self.amplitudes)?.re)
    }

    /// The same state on a larger basis of the same dimension.
    pub fn embed(&self, basis: Arc<ProductBasis>) -> Result<StateVector> {
        if basis.dimension() != self.basis.dimension() {
            return Err(Error::UnsupportedDimension(basis.dimension().index()));
        }
        let mut amplitudes = alloc::vec![Complex64::zero(); basis.len()];
        for (label, amp) in self.basis.labels().iter().zip(&self.amplitudes) {
            if amp.is_zero() {
                continue;
            }
            let needed = label.modes.iter().copied().max().unwrap_or(0);
            let i = basis.index_of(label).ok_or(Error::InvalidTruncation { n_max: basis.n_max(), min: needed })?;
            amplitudes[i] = *amp;
        }
        Ok(StateVector { basis, amplitudes, time: self.time })
    }
}

/// `|chi_n> (cos theta |+> + sin theta |->)` with `|chi_n>` the positive-energy
/// oscillator eigenstate, on the smallest basis holding every sector it touches.
pub fn prepare_initial(n: u32, theta: f64, params: &ModelParams) -> Result<StateVector> {
    if params.dimension == Dimension::Three {
        return Err(Error::UnsupportedDimension(3));
    }
    if !theta.is_finite() {
        return Err(Error::InvalidParameter("theta must be finite".into()));
    }
    let osc = dirac_oscillator_state(n, params, EnergyBranch::Positive)?;
    let basis = Arc::new(ProductBasis::new(params.dimension, n + 3)?);
    let mut amplitudes = alloc::vec![Complex64::zero(); basis.len()];
    let label = |k: u32, star: Proj, iso: Proj| match params.dimension {
        Dimension::Two => BasisLabel::two_d(k, 0, star, iso),
        _ => BasisLabel::one_d(k, star, iso),
    };
    for (iso, w) in [(Proj::Up, theta.cos()), (Proj::Down, theta.sin())] {
        for (k, star, a) in [(n, Proj::Up, osc.amp_up), (n + 1, Proj::Down, osc.amp_down)] {
            let i = basis.index_of(&label(k, star, iso)).expect("basis holds n + 1");
            amplitudes[i] = Complex64::new(a * w, 0.0);
        }
    }
    Ok(StateVector { basis, amplitudes, time: 0.0 })
}
