use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use super::jacobi::hermitian_eigenvalues;
use crate::algebra::{invariant_value, OperatorMatrix};
use crate::error::Result;

/// Connected components of the graph whose edges are the nonzero entries.
pub fn connected_components(h: &OperatorMatrix) -> Vec<Vec<usize>> {
    let n = h.dim();
    let e = h.entries();
    let mut seen = alloc::vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = alloc::vec![start];
        let mut head = 0;
        while head < comp.len() {
            let i = comp[head];
            head += 1;
            for j in 0..n {
                if !seen[j] && !(e[(i, j)].is_zero() && e[(j, i)].is_zero()) {
                    seen[j] = true;
                    comp.push(j);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Spectrum of the full Hamiltonian restricted to components lying wholly
/// inside the interior, grouped by twice the invariant eigenvalue.
pub type InteriorSpectrum = BTreeMap<i64, Vec<f64>>;

pub fn interior_spectrum(h: &OperatorMatrix, margin: u32) -> Result<InteriorSpectrum> {
    let basis = h.basis().clone();
    let mut out = InteriorSpectrum::new();
    for comp in connected_components(h) {
        if !comp.iter().all(|&i| basis.is_interior(basis.label(i), margin)) {
            continue;
        }
        let sub = h.entries().select_rows(&comp).select_columns(&comp);
        let twice = (2.0 * invariant_value(basis.dimension(), basis.label(comp[0]))).round() as i64;
        out.entry(twice).or_default().extend(hermitian_eigenvalues(&sub)?);
    }
    for vals in out.values_mut() {
        vals.sort_by(f64::total_cmp);
    }
    Ok(out)
}
