//! Measured checks of the model, shared by `dirac-osc verify` and the
//! acceptance suite.
//!
//! Each check returns its measured maxima next to the limits they are held
//! to; random parameter draws come from a seeded ChaCha stream.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_4, LN_2};
use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use dirac_osc_core::algebra::{
    build_full_hamiltonian, build_invariant, commutator_norm, hamiltonian_on, ProductBasis, INTERIOR_MARGIN,
};
use dirac_osc_core::dynamics::{oscillator_side_measures, prepare_initial, reduce_isospin, Propagator};
use dirac_osc_core::sectors::{
    block_1d, block_3d_base, block_symm, interior_sectors, sector_block, singlet_energy, BaseBranch, SectorKey,
};
use dirac_osc_core::spectra::{
    cubic_triplet_eigenvalues, eigenvalues_alpha0, eigenvalues_gauge, eigenvalues_massless, eigenvectors_alpha0,
    eigenvectors_gauge, interior_spectrum, jacobi_eigensolver, max_sorted_deviation, InteriorSpectrum,
};
use dirac_osc_core::{Dimension, HalfInt, ModelParams};
use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::RunConfig;
use crate::output::{Cell, Table};
use crate::run::run_sweep;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Bound {
    AtMost(f64),
    Above(f64),
}

/// One measured quantity and the bound it must respect.
#[derive(Debug, Clone, PartialEq)]
pub struct Item {
    pub what: String,
    pub value: f64,
    pub bound: Bound,
}

impl Item {
    pub fn at_most(what: impl Into<String>, value: f64, limit: f64) -> Self {
        Item { what: what.into(), value, bound: Bound::AtMost(limit) }
    }

    pub fn above(what: impl Into<String>, value: f64, limit: f64) -> Self {
        Item { what: what.into(), value, bound: Bound::Above(limit) }
    }

    pub fn ok(&self) -> bool {
        match self.bound {
            Bound::AtMost(l) => self.value <= l,
            Bound::Above(l) => self.value > l,
        }
    }
}

impl fmt::Display for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.bound {
            Bound::AtMost(l) => write!(f, "{} {:.3e} <= {:.0e}", self.what, self.value, l),
            Bound::Above(l) => write!(f, "{} {:.4} > {}", self.what, self.value, l),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub id: u8,
    pub name: &'static str,
    pub items: Vec<Item>,
    pub notes: Vec<String>,
}

impl Check {
    fn new(id: u8, name: &'static str) -> Self {
        Check { id, name, items: Vec::new(), notes: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(Item::ok)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "criterion {:>2} {status}  {}", self.id, self.name)?;
        for item in &self.items {
            write!(f, " | {item}")?;
        }
        for note in &self.notes {
            write!(f, " | {note}")?;
        }
        Ok(())
    }
}

fn one_d() -> ModelParams {
    ModelParams::new(Dimension::One)
}

fn draw_gauge(rng: &mut ChaCha8Rng) -> (i64, ModelParams) {
    let n = rng.random_range(0..=50);
    let p = one_d()
        .with_couplings(0.0, 1.0)
        .with_mass(rng.random_range(0.0..=5.0))
        .with_alpha(rng.random_range(0.0..=3.0))
        .with_gamma(rng.random_range(0.0..=5.0));
    (n, p)
}

fn draw_generic(rng: &mut ChaCha8Rng, dim: Dimension) -> ModelParams {
    ModelParams::new(dim)
        .with_mass(rng.random_range(0.0..=5.0))
        .with_couplings(rng.random_range(-2.0..=2.0), rng.random_range(-2.0..=2.0))
        .with_alpha(rng.random_range(0.0..=3.0))
        .with_gamma(rng.random_range(0.0..=5.0))
}

fn relative_residual(h: &DMatrix<f64>, v: DVector<f64>, e: f64, scale: f64) -> f64 {
    (h * &v - &v * e).norm() / (scale * v.norm())
}

/// Base three-dimensional oscillator: `E^2 = m^2 + 2n` and `m^2 + 2(n + j)`.
pub fn base_energies() -> Check {
    let mut check = Check::new(1, "base oscillator energies");
    let mut worst = 0.0f64;
    for m in [0.0, 1.0, 3.2] {
        let p = ModelParams::new(Dimension::Three).with_mass(m);
        for n in 0..=20 {
            for tj in [1, 3, 5] {
                let j = HalfInt::from_twice(tj);
                for (branch, e2) in [(BaseBranch::Lower, 2.0 * n as f64), (BaseBranch::Upper, 2.0 * (n as f64 + j.value()))] {
                    match block_3d_base(n, j, branch, &p).and_then(|b| jacobi_eigensolver(&b)) {
                        Ok(eig) => {
                            for v in eig.values {
                                worst = worst.max((v * v - m * m - e2).abs());
                            }
                        }
                        Err(_) => worst = f64::INFINITY,
                    }
                }
            }
        }
    }
    check.items.push(Item::at_most("max |E^2 - expected|", worst, 1e-12));
    check
}

/// Quartic closed form for `A = 0, B = 1` against Jacobi.
pub fn gauge_closed_form(seed: u64, draws: usize) -> Check {
    let mut check = Check::new(2, "gauge closed form vs jacobi");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut worst, mut errors) = (0.0f64, 0usize);
    for _ in 0..draws {
        let (n, p) = draw_gauge(&mut rng);
        let numeric = block_1d(n, &p).and_then(|b| jacobi_eigensolver(&b));
        match (eigenvalues_gauge(n, &p), numeric) {
            (Ok(c), Ok(e)) => worst = worst.max(max_sorted_deviation(&c.values, &e.values).unwrap_or(f64::INFINITY)),
            _ => errors += 1,
        }
    }
    check.items.push(Item::at_most("max |E_closed - E_numeric|", worst, 1e-8));
    check.items.push(Item::at_most("draws without closed form", errors as f64, 0.0));
    check.notes.push(format!("{draws} draws"));
    check
}

/// Polynomial eigenvectors of the gauge case and the `alpha = 0` vectors,
/// as relative residuals `|Hv - Ev| / (|H| |v|)`.
pub fn eigenvector_residuals(seed: u64, draws: usize) -> Check {
    let mut check = Check::new(3, "eigenvector formulas");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut gauge_worst, mut static_worst) = (0.0f64, 0.0f64);
    let (mut excluded, mut errors) = (0usize, 0usize);
    for _ in 0..draws {
        let (n, p) = draw_gauge(&mut rng);
        let result = (|| {
            let h = block_1d(n, &p)?.entries().clone();
            let eig = eigenvalues_gauge(n, &p)?;
            let vecs = eigenvectors_gauge(n, &p, &eig)?;
            let scale = eig.values.iter().fold(0.0f64, |a, e| a.max(e.abs())).max(f64::MIN_POSITIVE);
            let mut draw_excluded = false;
            for (i, e) in eig.branches().into_iter().enumerate() {
                if vecs.fallback[i] {
                    draw_excluded = true;
                    continue;
                }
                gauge_worst = gauge_worst.max(relative_residual(&h, vecs.vectors.column(i).clone_owned(), e, scale));
            }
            excluded += usize::from(draw_excluded);

            let q = p.with_alpha(0.0);
            let h = block_1d(n, &q)?.entries().clone();
            let eig = eigenvalues_alpha0(n, &q)?;
            let vecs = eigenvectors_alpha0(n, &q)?;
            let scale = eig.values.iter().fold(0.0f64, |a, e| a.max(e.abs())).max(f64::MIN_POSITIVE);
            for (i, e) in eig.branches().into_iter().enumerate() {
                static_worst = static_worst.max(relative_residual(&h, vecs.column(i).clone_owned(), e, scale));
            }
            Ok::<_, dirac_osc_core::Error>(())
        })();
        errors += usize::from(result.is_err());
    }
    check.items.push(Item::at_most("gauge vectors", gauge_worst, 1e-8));
    check.items.push(Item::at_most("alpha=0 vectors", static_worst, 1e-8));
    check.items.push(Item::at_most("errors", errors as f64, 0.0));
    check.notes.push(format!("{excluded} of {draws} draws excluded as degenerate"));
    check
}

/// `alpha = 0` and massless closed forms against Jacobi, plus the
/// massless reference point.
pub fn special_closed_forms(seed: u64, draws: usize) -> Check {
    let mut check = Check::new(4, "alpha=0 and massless closed forms");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_0004);
    let (mut worst, mut errors) = (0.0f64, 0usize);
    for _ in 0..draws {
        let n = rng.random_range(0..=50);
        let generic = draw_generic(&mut rng, Dimension::One);
        let cases = [
            (generic.with_alpha(0.0), eigenvalues_alpha0 as fn(i64, &ModelParams) -> _),
            (generic.with_mass(0.0).with_gamma(0.0), eigenvalues_massless),
        ];
        for (p, closed) in cases {
            let numeric = block_1d(n, &p).and_then(|b| jacobi_eigensolver(&b));
            match (closed(n, &p), numeric) {
                (Ok(c), Ok(e)) => worst = worst.max(max_sorted_deviation(&c.values, &e.values).unwrap_or(f64::INFINITY)),
                _ => errors += 1,
            }
        }
    }
    let point = one_d().with_mass(0.0).with_couplings(0.0, 1.0).with_alpha(1.0);
    let r6 = 6f64.sqrt();
    let point_dev = eigenvalues_massless(0, &point)
        .ok()
        .and_then(|e| max_sorted_deviation(&e.values, &[-r6, 0.0, 0.0, r6]))
        .unwrap_or(f64::INFINITY);
    check.items.push(Item::at_most("max |E_closed - E_numeric|", worst, 1e-10));
    check.items.push(Item::at_most("reference point {-sqrt6,0,0,sqrt6}", point_dev, 1e-10));
    check.items.push(Item::at_most("errors", errors as f64, 0.0));
    check
}

/// The symmetric block: zero mode, traceless 3x3 part, and agreement with
/// the generic block it is a change of basis of.
pub fn symmetric_case(seed: u64) -> Check {
    let mut check = Check::new(5, "symmetric case");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_0005);
    let (mut zero, mut trace, mut dev) = (0.0f64, 0.0f64, 0.0f64);
    for n in 0..=50 {
        let mut gammas = vec![0.0, 1.0, 3.2];
        gammas.extend((0..4).map(|_| rng.random_range(0.0..=5.0)));
        for g in gammas {
            let result = (|| {
                let symm = block_symm(n, g)?;
                let e = jacobi_eigensolver(&symm)?;
                let scale = e.values.iter().fold(1.0f64, |a, v| a.max(v.abs()));
                let smallest = e.values.iter().fold(f64::INFINITY, |a, v| a.min(v.abs()));
                let inner = symm.entries().view((1, 1), (3, 3));
                let generic = jacobi_eigensolver(&block_1d(n, &one_d().with_couplings(0.0, 1.0).with_alpha(1.0).with_mass(g).with_gamma(g))?)?;
                Ok::<_, dirac_osc_core::Error>((smallest / scale, inner.trace().abs(), max_sorted_deviation(&e.values, &generic.values)))
            })();
            match result {
                Ok((z, t, d)) => {
                    zero = zero.max(z);
                    trace = trace.max(t);
                    dev = dev.max(d.unwrap_or(f64::INFINITY));
                }
                Err(_) => dev = f64::INFINITY,
            }
        }
    }
    check.items.push(Item::at_most("smallest |E| / |H|", zero, 1e-12));
    check.items.push(Item::at_most("|trace of 3x3 part|", trace, 1e-12));
    check.items.push(Item::at_most("spectrum vs generic block", dev, 1e-10));
    check
}

fn assembled(keys: &[SectorKey], params: &ModelParams) -> Result<InteriorSpectrum, dirac_osc_core::Error> {
    let mut out: BTreeMap<i64, Vec<f64>> = BTreeMap::new();
    for &key in keys {
        let eig = jacobi_eigensolver(&sector_block(key, params)?)?;
        out.entry(2 * key.n()).or_default().extend(eig.values);
    }
    for v in out.values_mut() {
        v.sort_by(f64::total_cmp);
    }
    Ok(out)
}

fn spectrum_deviation(a: &InteriorSpectrum, b: &InteriorSpectrum) -> f64 {
    if a.keys().ne(b.keys()) {
        return f64::INFINITY;
    }
    a.iter().map(|(k, v)| max_sorted_deviation(v, &b[k]).unwrap_or(f64::INFINITY)).fold(0.0, f64::max)
}

/// Sector blocks against the interior spectrum of the full truncated
/// Hamiltonian in one dimension.
pub fn block_vs_full(seed: u64) -> Check {
    let mut check = Check::new(6, "blocks vs full hamiltonian (d=1, n_max=40)");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_0006);
    let (mut worst, mut singlet, mut triplet) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..3 {
        let p = draw_generic(&mut rng, Dimension::One);
        let result = (|| {
            let h = build_full_hamiltonian(&p, 40)?;
            let full = interior_spectrum(&h, INTERIOR_MARGIN)?;
            let blocks = assembled(&interior_sectors(h.basis(), INTERIOR_MARGIN), &p)?;
            let s = full.get(&-4).and_then(|v| max_sorted_deviation(v, &[singlet_energy(&p)]));
            let t = full.get(&-2).and_then(|v| max_sorted_deviation(v, &cubic_triplet_eigenvalues(&p).ok()?));
            Ok::<_, dirac_osc_core::Error>((spectrum_deviation(&full, &blocks), s, t))
        })();
        match result {
            Ok((d, s, t)) => {
                worst = worst.max(d);
                singlet = singlet.max(s.unwrap_or(f64::INFINITY));
                triplet = triplet.max(t.unwrap_or(f64::INFINITY));
            }
            Err(_) => worst = f64::INFINITY,
        }
    }
    check.items.push(Item::at_most("sector spectra", worst, 1e-9));
    check.items.push(Item::at_most("singlet -(m+(B-A)gamma)", singlet, 1e-9));
    check.items.push(Item::at_most("triplet cubic roots", triplet, 1e-9));
    check
}

/// Commutators with the invariants, spectator independence in two
/// dimensions, and the three-dimensional Cartesian oracle.
pub fn invariant_conservation(seed: u64) -> Check {
    let mut check = Check::new(7, "invariant conservation");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_0007);
    let mut comm = 0.0f64;
    for (dim, n_max) in [(Dimension::One, 12), (Dimension::Two, 6), (Dimension::Three, 6)] {
        let p = draw_generic(&mut rng, dim);
        let result = (|| {
            let h = build_full_hamiltonian(&p, n_max)?;
            let inv = build_invariant(&p, n_max)?;
            let mask = h.basis().interior_mask(INTERIOR_MARGIN);
            let mut c = commutator_norm(&h, &inv.number, &mask)?;
            if let Some(j) = &inv.angular {
                c = c.max(commutator_norm(&h, j, &mask)?);
            }
            Ok::<_, dirac_osc_core::Error>(c)
        })();
        comm = comm.max(result.unwrap_or(f64::INFINITY));
    }

    let p = draw_generic(&mut rng, Dimension::Two);
    let mut varying = 0usize;
    for n in -2..=6 {
        let blocks: Result<Vec<_>, _> = (0..=6).map(|n_l| sector_block(SectorKey::two_d(n, n_l)?, &p)).collect();
        match blocks {
            Ok(b) => varying += b.windows(2).filter(|w| w[0].entries() != w[1].entries()).count(),
            Err(_) => varying += 1,
        }
    }

    let mut oracle = 0.0f64;
    for alpha_one in [true, false] {
        let mut p = draw_generic(&mut rng, Dimension::Three);
        if alpha_one {
            p.alpha = 1.0;
        }
        let result = (|| {
            let h = build_full_hamiltonian(&p, 6)?;
            let full = interior_spectrum(&h, INTERIOR_MARGIN)?;
            let blocks = assembled(&interior_sectors(h.basis(), INTERIOR_MARGIN), &p)?;
            Ok::<_, dirac_osc_core::Error>(spectrum_deviation(&full, &blocks))
        })();
        oracle = oracle.max(result.unwrap_or(f64::INFINITY));
    }
    check.items.push(Item::at_most("|[H, I]| on interior", comm, 1e-10));
    check.items.push(Item::at_most("d=2 blocks varying with n_L", varying as f64, 0.0));
    check.items.push(Item::at_most("d=3 blocks vs cartesian oracle", oracle, 1e-8));
    check
}

/// Unitarity, energy and invariant conservation, and entanglement bounds
/// along trajectories at `m = 3.2`, `alpha = 1.2`, `n = 0`.
pub fn dynamics_bounds() -> Check {
    let mut check = Check::new(8, "dynamics unitarity and bounds");
    let (mut norm, mut energy, mut invariant) = (0.0f64, 0.0f64, 0.0f64);
    let (mut purity_out, mut entropy_out, mut start) = (0.0f64, 0.0f64, 0.0f64);
    let times: Vec<f64> = (0..=500).map(|k| 0.1 * k as f64).collect();
    for theta in [0.0, FRAC_PI_4] {
        for gamma in [0.0, 1.6, 3.2, 4.8, 6.4] {
            let p = one_d().with_mass(3.2).with_couplings(0.0, 1.0).with_alpha(1.2).with_gamma(gamma);
            let result = (|| {
                let psi = prepare_initial(0, theta, &p)?;
                let prop = Propagator::new(&psi, &p)?;
                let h = hamiltonian_on(psi.basis.clone(), &p)?;
                let inv = build_invariant(&p, psi.basis.n_max())?.number;
                let (h0, i0) = (psi.expectation(&h)?, psi.expectation(&inv)?);
                for &t in &times {
                    let s = prop.evolve(t);
                    norm = norm.max((s.norm() - 1.0).abs());
                    energy = energy.max((s.expectation(&h)? - h0).abs());
                    invariant = invariant.max((s.expectation(&inv)? - i0).abs());
                    let rho = reduce_isospin(&s);
                    let (pu, en) = (rho.purity(), rho.entropy());
                    purity_out = purity_out.max((0.5 - pu).max(pu - 1.0)).max(0.0);
                    entropy_out = entropy_out.max((-en).max(en - LN_2)).max(0.0);
                    if t == 0.0 {
                        start = start.max((pu - 1.0).abs()).max(en.abs());
                    }
                }
                Ok::<_, dirac_osc_core::Error>(())
            })();
            if result.is_err() {
                norm = f64::INFINITY;
            }
        }
    }
    check.items.push(Item::at_most("norm drift", norm, 1e-12));
    check.items.push(Item::at_most("<H> drift", energy, 1e-10));
    check.items.push(Item::at_most("<I> drift", invariant, 1e-10));
    check.items.push(Item::at_most("P outside [1/2, 1]", purity_out, 1e-10));
    check.items.push(Item::at_most("S outside [0, ln 2]", entropy_out, 1e-10));
    check.items.push(Item::at_most("|P(0) - 1| + |S(0)|", start, 1e-12));
    check
}

/// Time-averaged entropy over the field sweep peaks near `gamma = m`.
pub fn entropy_ridge() -> Check {
    let mut check = Check::new(9, "entropy ridge near gamma = m");
    let cfg = RunConfig { gamma_max: Some(6.4), ..RunConfig::default() };
    let m = cfg.params.m;
    match run_sweep(&cfg) {
        Ok(sweep) => {
            let mean = sweep.mean_entropy();
            let (best, s_best) = mean.iter().enumerate().fold((0, f64::NEG_INFINITY), |acc, (i, &s)| if s > acc.1 { (i, s) } else { acc });
            let g_star = sweep.gammas[best];
            check.items.push(Item::at_most("|gamma* - m|", (g_star - m).abs(), 1.0));
            check.items.push(Item::above("S(gamma*) - S(0)", s_best - mean[0], 0.0));
            check.items.push(Item::above("S(gamma*) - S(6.4)", s_best - mean[mean.len() - 1], 0.0));
            check.notes.push(format!("gamma* = {g_star:.3}, mean S = {s_best:.4}"));
        }
        Err(e) => {
            check.items.push(Item::at_most("sweep errors", 1.0, 0.0));
            check.notes.push(e.to_string());
        }
    }
    check
}

/// Isospin purity and entropy against the explicit partial trace over
/// isospin on a basis with eight quanta per mode.
pub fn schmidt_shortcut() -> Check {
    let mut check = Check::new(10, "isospin reduction vs partial trace");
    let (mut dp, mut ds) = (0.0f64, 0.0f64);
    for theta in [0.0, FRAC_PI_4, 1.0] {
        for gamma in [0.0, 3.2, 5.0] {
            let p = one_d().with_mass(3.2).with_couplings(0.0, 1.0).with_alpha(1.2).with_gamma(gamma);
            let result = (|| {
                let psi = prepare_initial(0, theta, &p)?;
                let prop = Propagator::new(&psi, &p)?;
                let big = Arc::new(ProductBasis::new(Dimension::One, 8)?);
                for t in [0.0, 0.7, 3.1, 12.5, 29.0] {
                    let s = prop.evolve(t);
                    let rho = reduce_isospin(&s);
                    let (pu, en) = oscillator_side_measures(&s.embed(big.clone())?)?;
                    dp = dp.max((rho.purity() - pu).abs());
                    ds = ds.max((rho.entropy() - en).abs());
                }
                Ok::<_, dirac_osc_core::Error>(())
            })();
            if result.is_err() {
                dp = f64::INFINITY;
            }
        }
    }
    check.items.push(Item::at_most("purity difference", dp, 1e-10));
    check.items.push(Item::at_most("entropy difference", ds, 1e-10));
    check
}

/// Wall-clock limits in seconds, where one is set.
pub fn runtime_limit(id: u8) -> Option<f64> {
    match id {
        1 => Some(1.0),
        2 => Some(30.0),
        6 => Some(10.0),
        9 => Some(60.0),
        _ => None,
    }
}

/// Runs check `id`, 1 to 10.
pub fn run_check(id: u8, seed: u64, draws: usize) -> Check {
    match id {
        1 => base_energies(),
        2 => gauge_closed_form(seed, draws),
        3 => eigenvector_residuals(seed, draws),
        4 => special_closed_forms(seed, draws),
        5 => symmetric_case(seed),
        6 => block_vs_full(seed),
        7 => invariant_conservation(seed),
        8 => dynamics_bounds(),
        9 => entropy_ridge(),
        10 => schmidt_shortcut(),
        _ => panic!("no check {id}"),
    }
}

/// [`run_check`] with its wall-clock time held to [`runtime_limit`].
pub fn timed_check(id: u8, seed: u64, draws: usize) -> Check {
    let start = Instant::now();
    let mut check = run_check(id, seed, draws);
    let elapsed = start.elapsed().as_secs_f64();
    match runtime_limit(id) {
        Some(limit) => check.items.push(Item::at_most("runtime s", elapsed, limit)),
        None => check.notes.push(format!("{elapsed:.2} s")),
    }
    check
}

/// All checks as a report table; the flag is true when every check passed.
pub fn run_verify(cfg: &RunConfig) -> (Table, bool) {
    let mut table = Table::new(&["check", "name", "quantity", "measured", "bound", "status"]);
    let mut all = true;
    for id in 1..=10 {
        let check = run_check(id, cfg.seed, cfg.draws);
        all &= check.passed();
        for item in &check.items {
            let bound = match item.bound {
                Bound::AtMost(l) => format!("<= {l:e}"),
                Bound::Above(l) => format!("> {l:e}"),
            };
            let status = if item.ok() { "pass" } else { "fail" };
            table.push(vec![
                Cell::Int(i64::from(id)),
                check.name.into(),
                item.what.as_str().into(),
                item.value.into(),
                bound.into(),
                status.into(),
            ]);
        }
    }
    table.meta("mode", "verify");
    table.meta("seed", cfg.seed);
    table.meta("draws", cfg.draws);
    table.meta("passed", all);
    (table, all)
}
