//! Sector blocks against the spectrum of the full truncated Hamiltonian.

use std::collections::BTreeMap;

use dirac_osc_core::algebra::{build_full_hamiltonian, INTERIOR_MARGIN};
use dirac_osc_core::sectors::{interior_sectors, sector_block, SectorKey};
use dirac_osc_core::spectra::{interior_spectrum, jacobi_eigensolver, InteriorSpectrum};
use dirac_osc_core::{Dimension, ModelParams};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn assembled(keys: &[SectorKey], params: &ModelParams) -> InteriorSpectrum {
    let mut out: BTreeMap<i64, Vec<f64>> = BTreeMap::new();
    for &key in keys {
        let eig = jacobi_eigensolver(&sector_block(key, params).unwrap()).unwrap();
        out.entry(2 * key.n()).or_default().extend(eig.values);
    }
    for v in out.values_mut() {
        v.sort_by(f64::total_cmp);
    }
    out
}

fn worst_deviation(a: &InteriorSpectrum, b: &InteriorSpectrum) -> f64 {
    assert_eq!(a.keys().collect::<Vec<_>>(), b.keys().collect::<Vec<_>>());
    let mut worst = 0.0f64;
    for (k, va) in a {
        let vb = &b[k];
        assert_eq!(va.len(), vb.len(), "sector 2I={k}");
        for (x, y) in va.iter().zip(vb) {
            worst = worst.max((x - y).abs());
        }
    }
    worst
}

fn random_params(rng: &mut ChaCha8Rng, dim: Dimension) -> ModelParams {
    ModelParams::new(dim)
        .with_mass(rng.random_range(0.0..5.0))
        .with_couplings(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0))
        .with_alpha(rng.random_range(0.0..3.0))
        .with_gamma(rng.random_range(0.0..5.0))
}

#[test]
fn one_dimension_at_n_max_40() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..4 {
        let p = random_params(&mut rng, Dimension::One);
        let h = build_full_hamiltonian(&p, 40).unwrap();
        let full = interior_spectrum(&h, INTERIOR_MARGIN).unwrap();
        let blocks = assembled(&interior_sectors(h.basis(), INTERIOR_MARGIN), &p);
        // singlet, triplet and n = 0..=36
        assert_eq!(blocks.len(), 39);
        assert!(worst_deviation(&full, &blocks) < 1e-9);
    }
}

#[test]
fn two_dimensions() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..3 {
        let p = random_params(&mut rng, Dimension::Two);
        let h = build_full_hamiltonian(&p, 7).unwrap();
        let full = interior_spectrum(&h, INTERIOR_MARGIN).unwrap();
        let blocks = assembled(&interior_sectors(h.basis(), INTERIOR_MARGIN), &p);
        assert!(worst_deviation(&full, &blocks) < 1e-9);
    }
}

#[test]
fn three_dimensions_cartesian_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for alpha_one in [true, false] {
        let mut p = random_params(&mut rng, Dimension::Three);
        if alpha_one {
            p.alpha = 1.0;
        }
        let h = build_full_hamiltonian(&p, 8).unwrap();
        let full = interior_spectrum(&h, INTERIOR_MARGIN).unwrap();
        let keys = interior_sectors(h.basis(), INTERIOR_MARGIN);
        assert!(keys.iter().all(|k| k.n() <= 5));
        let blocks = assembled(&keys, &p);
        assert!(worst_deviation(&full, &blocks) < 1e-8);
    }
}

#[test]
fn truncation_does_not_move_interior_levels() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let p = random_params(&mut rng, Dimension::One);
    let small = interior_spectrum(&build_full_hamiltonian(&p, 12).unwrap(), INTERIOR_MARGIN).unwrap();
    let large = interior_spectrum(&build_full_hamiltonian(&p, 14).unwrap(), INTERIOR_MARGIN).unwrap();
    for (k, v) in &small {
        let w = &large[k];
        for (x, y) in v.iter().zip(w) {
            assert!((x - y).abs() < 1e-12);
        }
    }
}
