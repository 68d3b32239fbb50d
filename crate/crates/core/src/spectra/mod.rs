//! Eigensolvers, closed-form spectra and full-space reference spectra.

mod closed;
mod cubic;
mod jacobi;
mod oracle;
mod quartic;

use alloc::vec::Vec;

use nalgebra::DMatrix;

pub use closed::{eigenvalues_alpha0, eigenvalues_massless, eigenvectors_alpha0, massless_coefficients};
pub use cubic::{cubic_triplet_eigenvalues, symmetric3_eigenvalues};
pub use jacobi::{hermitian_eigenvalues, jacobi_eigen, jacobi_eigensolver};
pub use oracle::{connected_components, interior_spectrum, InteriorSpectrum};
pub use quartic::{
    eigenvalues_gauge, eigenvectors_gauge, gauge_quartic, quartic_intermediates, DepressedQuartic,
    GaugeEigenvectors, QuarticIntermediates,
};

/// Eigenvalues in ascending order, optional eigenvectors as matching
/// columns, and for closed forms the position of each labelled branch.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenSystem {
    pub values: Vec<f64>,
    pub vectors: Option<DMatrix<f64>>,
    /// `branch_map[i]` is the index in `values` of branch `E_{i+1}`.
    pub branch_map: Option<Vec<usize>>,
}

impl EigenSystem {
    /// Sorts closed-form values given in branch order and records the mapping.
    pub fn from_branches(branches: &[f64]) -> Self {
        let mut order: Vec<usize> = (0..branches.len()).collect();
        order.sort_by(|&a, &b| branches[a].total_cmp(&branches[b]));
        let values = order.iter().map(|&i| branches[i]).collect();
        let mut map = alloc::vec![0; branches.len()];
        for (pos, &i) in order.iter().enumerate() {
            map[i] = pos;
        }
        EigenSystem { values, vectors: None, branch_map: Some(map) }
    }

    /// Values in branch order, or ascending order when no map is present.
    pub fn branches(&self) -> Vec<f64> {
        match &self.branch_map {
            Some(map) => map.iter().map(|&pos| self.values[pos]).collect(),
            None => self.values.clone(),
        }
    }
}

/// Largest absolute difference between two sorted lists of equal length.
pub fn max_sorted_deviation(a: &[f64], b: &[f64]) -> Option<f64> {
    if a.len() != b.len() {
        return None;
    }
    Some(a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max))
}
