//! Spectrum tables, single trajectories and the field sweep.

use dirac_osc_core::dynamics::{entanglement_trajectory, EntanglementPoint};
use dirac_osc_core::sectors::{sector_block, sectors_3d, singlet_energy, SectorKey, SectorKind};
use dirac_osc_core::spectra::{
    cubic_triplet_eigenvalues, eigenvalues_alpha0, eigenvalues_gauge, eigenvalues_massless, jacobi_eigensolver,
    EigenSystem,
};
use dirac_osc_core::{Dimension, ModelParams};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::config::RunConfig;
use crate::output::{Cell, Table};

pub type RunResult<T> = Result<T, dirac_osc_core::Error>;

/// Closed form used for the generic one-dimensional blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedCase {
    /// `A = B = 0`: the field drops out.
    FieldFree,
    /// `alpha = 0`.
    StaticOnly,
    /// `m = gamma = 0`.
    Massless,
    /// `(A, B) = (0, 1)` or `(1, 0)`.
    Gauge,
}

impl ClosedCase {
    pub fn detect(params: &ModelParams) -> Option<Self> {
        if params.dimension != Dimension::One || params.scale() != 1.0 {
            return None;
        }
        let ModelParams { m, a, b, alpha, gamma, .. } = *params;
        if a == 0.0 && b == 0.0 {
            Some(ClosedCase::FieldFree)
        } else if alpha == 0.0 {
            Some(ClosedCase::StaticOnly)
        } else if m == 0.0 && gamma == 0.0 {
            Some(ClosedCase::Massless)
        } else if (a == 0.0 && b == 1.0) || (a == 1.0 && b == 0.0) {
            Some(ClosedCase::Gauge)
        } else {
            None
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ClosedCase::FieldFree => "field-free",
            ClosedCase::StaticOnly => "alpha=0",
            ClosedCase::Massless => "massless",
            ClosedCase::Gauge => "gauge",
        }
    }

    pub fn eigenvalues(self, n: i64, params: &ModelParams) -> RunResult<EigenSystem> {
        match self {
            // the ladder coupling multiplies a vanishing prefactor
            ClosedCase::FieldFree => eigenvalues_alpha0(n, &params.with_alpha(0.0)),
            ClosedCase::StaticOnly => eigenvalues_alpha0(n, params),
            ClosedCase::Massless => eigenvalues_massless(n, params),
            ClosedCase::Gauge => eigenvalues_gauge(n, params),
        }
    }
}

fn spectrum_keys(cfg: &RunConfig) -> RunResult<Vec<SectorKey>> {
    let (lo, hi) = (cfg.n_range.start, cfg.n_range.end);
    Ok(match cfg.params.dimension {
        Dimension::One => (lo.max(-2)..=hi).map(SectorKey::one_d).collect::<RunResult<_>>()?,
        Dimension::Two => (lo.max(-2)..=hi).map(|n| SectorKey::two_d(n, 0)).collect::<RunResult<_>>()?,
        Dimension::Three => (lo.max(-1)..=hi).flat_map(sectors_3d).collect(),
    })
}

/// Closed-form branches of one sector, or `None` when no formula covers it.
fn closed_branches(key: SectorKey, params: &ModelParams, case: Option<ClosedCase>, failures: &mut Vec<Value>) -> Option<EigenSystem> {
    if key.dimension() != Dimension::One || params.scale() != 1.0 {
        return None;
    }
    let result = match key.kind() {
        SectorKind::Singlet => Ok(EigenSystem::from_branches(&[singlet_energy(params)])),
        SectorKind::Triplet => cubic_triplet_eigenvalues(params).map(|r| EigenSystem::from_branches(&r)),
        SectorKind::Generic => case?.eigenvalues(key.n(), params),
    };
    match result {
        Ok(e) => Some(e),
        Err(err) => {
            failures.push(json!({ "sector": key.to_string(), "error": err.to_string() }));
            None
        }
    }
}

/// One row per branch: sector, branch label, closed form (when a case
/// applies), Jacobi eigenvalue, absolute deviation.
pub fn run_spectrum(cfg: &RunConfig) -> RunResult<Table> {
    let params = cfg.model();
    params.validate()?;
    let case = ClosedCase::detect(&params);
    let mut table = Table::new(&["sector", "branch", "E_closed", "E_numeric", "abs_dev"]);
    let mut failures = Vec::new();
    let mut branch_maps = Map::new();
    for key in spectrum_keys(cfg)? {
        let numeric = jacobi_eigensolver(&sector_block(key, &params)?)?;
        let label = key.to_string();
        match closed_branches(key, &params, case, &mut failures) {
            Some(closed) => {
                let map = closed.branch_map.clone().unwrap_or_else(|| (0..closed.values.len()).collect());
                for (i, (e, &pos)) in closed.branches().into_iter().zip(&map).enumerate() {
                    let v = numeric.values[pos];
                    table.push(vec![label.clone().into(), format!("E{}", i + 1).into(), e.into(), v.into(), (e - v).abs().into()]);
                }
                branch_maps.insert(label, json!(map));
            }
            None => {
                for (i, &v) in numeric.values.iter().enumerate() {
                    table.push(vec![label.clone().into(), format!("E{}", i + 1).into(), Cell::Empty, v.into(), Cell::Empty]);
                }
            }
        }
    }
    table.meta("mode", "spectrum");
    table.meta("closed_form", case.map_or("none", ClosedCase::name));
    table.meta("branch_map", Value::Object(branch_maps));
    if !failures.is_empty() {
        table.meta("closed_form_fallbacks", Value::Array(failures));
    }
    common_metadata(&mut table, cfg);
    Ok(table)
}

pub fn run_evolve(cfg: &RunConfig) -> RunResult<Table> {
    let points = entanglement_trajectory(cfg.n, cfg.theta, &cfg.model(), &cfg.t_grid())?;
    let mut table = Table::new(&["t", "purity", "entropy"]);
    for p in points {
        table.push(vec![p.t.into(), p.purity.into(), p.entropy.into()]);
    }
    table.meta("mode", "evolve");
    common_metadata(&mut table, cfg);
    Ok(table)
}

/// Entanglement over the `(gamma, t)` grid, gamma outer and t inner.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub gammas: Vec<f64>,
    pub times: Vec<f64>,
    pub points: Vec<EntanglementPoint>,
}

impl SweepResult {
    pub fn row(&self, gamma_index: usize) -> &[EntanglementPoint] {
        let k = self.times.len();
        &self.points[gamma_index * k..(gamma_index + 1) * k]
    }

    /// Mean entropy over the time grid for each gamma.
    pub fn mean_entropy(&self) -> Vec<f64> {
        (0..self.gammas.len())
            .map(|g| {
                let row = self.row(g);
                row.iter().map(|p| p.entropy).sum::<f64>() / row.len() as f64
            })
            .collect()
    }

    pub fn to_table(&self, cfg: &RunConfig) -> Table {
        let mut table = Table::new(&["gamma", "t", "purity", "entropy"]);
        for p in &self.points {
            table.push(vec![p.gamma.into(), p.t.into(), p.purity.into(), p.entropy.into()]);
        }
        table.meta("mode", "sweep");
        table.meta("gamma_points", self.gammas.len());
        table.meta("t_points", self.times.len());
        common_metadata(&mut table, cfg);
        table
    }
}

/// Runs one trajectory per gamma on the current rayon pool.
pub fn run_sweep(cfg: &RunConfig) -> RunResult<SweepResult> {
    let base = cfg.model();
    let gammas = cfg.gamma_grid();
    let times = cfg.t_grid();
    let rows = gammas
        .par_iter()
        .map(|&g| entanglement_trajectory(cfg.n, cfg.theta, &base.with_gamma(g), &times))
        .collect::<RunResult<Vec<_>>>()?;
    Ok(SweepResult { gammas, times, points: rows.into_iter().flatten().collect() })
}

fn common_metadata(table: &mut Table, cfg: &RunConfig) {
    let p = cfg.model();
    table.meta(
        "params",
        json!({
            "dimension": p.dimension.index(),
            "m": p.m,
            "A": p.a,
            "B": p.b,
            "alpha": p.alpha,
            "gamma": p.gamma,
            "n": cfg.n,
            "theta": cfg.theta,
        }),
    );
    table.meta("ladder_scale", p.scale());
    table.meta("entropy_log_base", "e");
    table.meta("version", env!("CARGO_PKG_VERSION"));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case_detection() {
        let p = ModelParams::new(Dimension::One);
        assert_eq!(ClosedCase::detect(&p), Some(ClosedCase::FieldFree));
        assert_eq!(ClosedCase::detect(&p.with_couplings(0.3, 0.4)), Some(ClosedCase::StaticOnly));
        assert_eq!(ClosedCase::detect(&p.with_couplings(0.3, 0.4).with_alpha(1.0).with_mass(0.0)), Some(ClosedCase::Massless));
        assert_eq!(ClosedCase::detect(&p.with_couplings(1.0, 0.0).with_alpha(1.0)), Some(ClosedCase::Gauge));
        assert_eq!(ClosedCase::detect(&p.with_couplings(0.3, 0.4).with_alpha(1.0)), None);
        assert_eq!(ClosedCase::detect(&ModelParams::new(Dimension::Two)), None);
    }
}
