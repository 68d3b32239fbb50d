//! Truncated Fock spaces, product bases and operator assembly.

mod basis;
mod hamiltonian;
mod operator;

pub use basis::{BasisLabel, ProductBasis, Proj, INTERIOR_MARGIN};
pub use hamiltonian::{
    angular_momentum, apply_hamiltonian, base_invariant_value, build_full_hamiltonian, build_invariant,
    hamiltonian_on, invariant_value, Invariants,
};
pub use operator::{commutator_norm, kron, ladder_matrix, OperatorMatrix};
