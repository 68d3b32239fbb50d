use alloc::sync::Arc;
use alloc::vec::Vec;

use num_complex::Complex64;

use super::basis::{BasisLabel, ProductBasis, Proj};
use super::operator::OperatorMatrix;
use crate::error::{Error, Result};
use crate::params::{Dimension, ModelParams};

const I: Complex64 = Complex64::new(0.0, 1.0);

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Pauli matrix `sigma_k` (k = 0, 1, 2 for x, y, z) acting on one projection.
fn pauli(k: usize, p: Proj) -> (Proj, Complex64) {
    match (k, p) {
        (0, _) => (p.flip(), real(1.0)),
        (1, Proj::Up) => (Proj::Down, I),
        (1, Proj::Down) => (Proj::Up, -I),
        (_, _) => (p, real(p.sign())),
    }
}

fn shifted(label: &BasisLabel, mode: usize, up: bool) -> BasisLabel {
    let mut out = *label;
    if up {
        out.modes[mode] += 1;
    } else {
        out.modes[mode] -= 1;
    }
    out
}

/// `H|label>` as a list of `(target, amplitude)` pairs, before truncation.
pub fn apply_hamiltonian(params: &ModelParams, label: &BasisLabel) -> Vec<(BasisLabel, Complex64)> {
    let s = params.scale();
    let c = params.field_coupling(label.star);
    let mut out = Vec::with_capacity(13);
    let diag = params.m * label.star.sign() + c * params.gamma * label.iso.sign();
    out.push((*label, real(diag)));

    let axes: &[usize] = match params.dimension {
        Dimension::One | Dimension::Two => &[0],
        Dimension::Three => &[0, 1, 2],
    };
    for &k in axes {
        let n = label.modes[k];
        let (spin, phase) = match params.dimension {
            Dimension::Three => pauli(k, label.spin),
            _ => (label.spin, real(1.0)),
        };
        let down = s * f64::from(n).sqrt();
        let up = s * f64::from(n + 1).sqrt();

        // *-spin raising with annihilation, and its adjoint
        if label.star == Proj::Down && n >= 1 {
            let mut t = shifted(label, k, false);
            t.star = Proj::Up;
            t.spin = spin;
            out.push((t, phase * down));
        }
        if label.star == Proj::Up {
            let mut t = shifted(label, k, true);
            t.star = Proj::Down;
            t.spin = spin;
            out.push((t, phase * up));
        }
        // isospin raising with annihilation, and its adjoint
        if label.iso == Proj::Down && n >= 1 {
            let mut t = shifted(label, k, false);
            t.iso = Proj::Up;
            t.spin = spin;
            out.push((t, phase * (c * params.alpha * down)));
        }
        if label.iso == Proj::Up {
            let mut t = shifted(label, k, true);
            t.iso = Proj::Down;
            t.spin = spin;
            out.push((t, phase * (c * params.alpha * up)));
        }
    }
    out
}

/// Full Hamiltonian on an existing basis. Matrix elements leaving the basis
/// are dropped, which keeps the truncated matrix exactly Hermitian.
pub fn hamiltonian_on(basis: Arc<ProductBasis>, params: &ModelParams) -> Result<OperatorMatrix> {
    params.validate()?;
    if basis.dimension() != params.dimension {
        return Err(Error::InvalidParameter("basis and parameters disagree on dimension".into()));
    }
    let mut op = OperatorMatrix::zeros(basis.clone());
    let entries = op.entries_mut();
    for (j, label) in basis.labels().iter().enumerate() {
        for (target, amp) in apply_hamiltonian(params, label) {
            if let Some(i) = basis.index_of(&target) {
                entries[(i, j)] += amp;
            }
        }
    }
    Ok(op)
}

/// Full Hamiltonian on the truncated product space of `params.dimension`.
pub fn build_full_hamiltonian(params: &ModelParams, n_max: u32) -> Result<OperatorMatrix> {
    if n_max < 2 {
        return Err(Error::InvalidTruncation { n_max, min: 2 });
    }
    let basis = Arc::new(ProductBasis::new(params.dimension, n_max)?);
    hamiltonian_on(basis, params)
}

/// Eigenvalue of the conserved number-type invariant on a product state.
///
/// One and two dimensions: `n + (sigma3 + T3)/2 - 1` with `n` the (chiral)
/// occupation. Three dimensions: `N + (Sigma3 + T3)/2`.
pub fn invariant_value(dimension: Dimension, label: &BasisLabel) -> f64 {
    let spins = (label.star.sign() + label.iso.sign()) / 2.0;
    match dimension {
        Dimension::One | Dimension::Two => f64::from(label.modes[0]) + spins - 1.0,
        Dimension::Three => f64::from(label.quanta()) + spins,
    }
}

/// The same invariant without the isospin term, conserved by the field-free oscillator.
pub fn base_invariant_value(dimension: Dimension, label: &BasisLabel) -> f64 {
    invariant_value(dimension, label) - label.iso.sign() / 2.0
}

/// Conserved operators of one dimension.
#[derive(Debug, Clone)]
pub struct Invariants {
    /// Number-type invariant whose eigenvalue labels the sectors.
    pub number: OperatorMatrix,
    /// `N_R - N_L + (sigma3 + T3)/2` in two dimensions, `J_z` in three.
    pub angular: Option<OperatorMatrix>,
}

fn diagonal_operator(basis: &Arc<ProductBasis>, f: impl Fn(&BasisLabel) -> f64) -> OperatorMatrix {
    let mut op = OperatorMatrix::zeros(basis.clone());
    for (i, label) in basis.labels().iter().enumerate() {
        op.entries_mut()[(i, i)] = real(f(label));
    }
    op
}

pub fn build_invariant(params: &ModelParams, n_max: u32) -> Result<Invariants> {
    if n_max < 2 {
        return Err(Error::InvalidTruncation { n_max, min: 2 });
    }
    let basis = Arc::new(ProductBasis::new(params.dimension, n_max)?);
    let dim = params.dimension;
    let number = diagonal_operator(&basis, |l| invariant_value(dim, l));
    let angular = match dim {
        Dimension::One => None,
        Dimension::Two => Some(diagonal_operator(&basis, |l| {
            f64::from(l.modes[0]) - f64::from(l.modes[1]) + (l.star.sign() + l.iso.sign()) / 2.0
        })),
        Dimension::Three => {
            let [_, _, jz] = angular_momentum(&basis)?;
            Some(jz)
        }
    };
    Ok(Invariants { number, angular })
}

/// `J = L + sigma/2` on a three-dimensional basis, with
/// `L_k = -i eps_klm a_l^dag a_m` in number-operator units.
pub fn angular_momentum(basis: &Arc<ProductBasis>) -> Result<[OperatorMatrix; 3]> {
    if basis.dimension() != Dimension::Three {
        return Err(Error::UnsupportedDimension(basis.dimension().index()));
    }
    let mut out = [
        OperatorMatrix::zeros(basis.clone()),
        OperatorMatrix::zeros(basis.clone()),
        OperatorMatrix::zeros(basis.clone()),
    ];
    for (k, op) in out.iter_mut().enumerate() {
        let (l, m) = ((k + 1) % 3, (k + 2) % 3);
        for (j, label) in basis.labels().iter().enumerate() {
            let mut push = |target: BasisLabel, amp: Complex64| {
                if let Some(i) = basis.index_of(&target) {
                    op.entries_mut()[(i, j)] += amp;
                }
            };
            // -i a_l^dag a_m + i a_m^dag a_l
            for (from, to, sign) in [(m, l, -1.0), (l, m, 1.0)] {
                let nf = label.modes[from];
                if nf >= 1 {
                    let mut t = *label;
                    t.modes[from] -= 1;
                    t.modes[to] += 1;
                    let amp = (f64::from(nf) * f64::from(t.modes[to])).sqrt();
                    push(t, I * (sign * amp));
                }
            }
            let (spin, phase) = pauli(k, label.spin);
            let mut t = *label;
            t.spin = spin;
            push(t, phase * 0.5);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{commutator_norm, kron, ladder_matrix, INTERIOR_MARGIN};
    use crate::params::LadderConvention;
    use nalgebra::DMatrix;

    fn params(dim: Dimension) -> ModelParams {
        ModelParams::new(dim).with_mass(1.3).with_couplings(0.7, -0.4).with_alpha(0.9).with_gamma(1.1)
    }

    #[test]
    fn hermitian_in_every_dimension() {
        for (dim, n_max) in [(Dimension::One, 8), (Dimension::Two, 5), (Dimension::Three, 4)] {
            let h = build_full_hamiltonian(&params(dim), n_max).unwrap();
            assert_eq!(h.hermiticity_defect(), 0.0);
        }
    }

    #[test]
    fn one_d_matches_tensor_product_assembly() {
        let p = params(Dimension::One);
        let n_max = 6;
        let a = ladder_matrix(n_max, LadderConvention::UNIT, false).unwrap();
        let ad = a.transpose();
        let eye_osc = DMatrix::<f64>::identity(a.nrows(), a.ncols());
        let eye2 = DMatrix::<f64>::identity(2, 2);
        // ordering (n, star, iso) with Up first
        let sp = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 0.0, 0.0]);
        let sm = sp.transpose();
        let s3 = DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, -1.0]);
        let field = &s3 * p.a + &eye2 * p.b;
        let h = kron(&a, &kron(&sp, &eye2))
            + kron(&ad, &kron(&sm, &eye2))
            + kron(&eye_osc, &kron(&s3, &eye2)) * p.m
            + kron(&a, &kron(&field, &sp)) * p.alpha
            + kron(&ad, &kron(&field, &sm)) * p.alpha
            + kron(&eye_osc, &kron(&field, &s3)) * p.gamma;
        let built = build_full_hamiltonian(&p, n_max).unwrap().to_real().unwrap();
        assert!((built - h).abs().max() < 1e-14);
    }

    #[test]
    fn invariants_commute_on_interior() {
        for (dim, n_max) in [(Dimension::One, 8), (Dimension::Two, 5), (Dimension::Three, 4)] {
            let p = params(dim);
            let h = build_full_hamiltonian(&p, n_max).unwrap();
            let inv = build_invariant(&p, n_max).unwrap();
            let mask = h.basis().interior_mask(INTERIOR_MARGIN);
            assert!(commutator_norm(&h, &inv.number, &mask).unwrap() < 1e-12);
            if let Some(j) = inv.angular {
                assert!(commutator_norm(&h, &j, &mask).unwrap() < 1e-12);
            }
        }
    }

    #[test]
    fn angular_momentum_algebra() {
        let basis = Arc::new(ProductBasis::new(Dimension::Three, 3).unwrap());
        let [jx, jy, jz] = angular_momentum(&basis).unwrap();
        let comm = jx.mul(&jy).unwrap().entries() - jy.mul(&jx).unwrap().entries();
        let expect = jz.entries() * I;
        assert!((comm - expect).iter().all(|z| z.norm() < 1e-12));
        for j in [&jx, &jy, &jz] {
            assert!(j.hermiticity_defect() < 1e-15);
        }
    }
}
