//! Time evolution of product initial states and isospin entanglement.

mod entropy;
mod evolve;
mod state;

pub use entropy::{
    entanglement_trajectory, oscillator_side_measures, reduce_isospin, EntanglementPoint, ReducedDensity,
};
pub use evolve::{evolve, Propagator};
pub use state::{dirac_oscillator_state, prepare_initial, EnergyBranch, OscEigenstate, StateVector};
