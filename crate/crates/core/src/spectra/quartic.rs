use alloc::vec::Vec;

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::jacobi::jacobi_eigen;
use super::EigenSystem;
use crate::error::{Error, Result};
use crate::params::{Dimension, ModelParams};
use crate::sectors::block_1d;

/// `E^4 + c2 E^2 + c1 E + c0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DepressedQuartic {
    pub c2: f64,
    pub c1: f64,
    pub c0: f64,
}

/// Resolvent quantities of a depressed quartic.
///
/// `p = -2 c2 / 3`, `q = c2^2 + 12 c0`, `r = 2 c2^3 - 72 c2 c0 + 27 c1^2` and
/// `s` is the largest real root of the shifted resolvent cubic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuarticIntermediates {
    pub p: f64,
    pub q: f64,
    pub r: f64,
    pub s: f64,
}

const IMAG_TOL: f64 = 1e-9;
const RADICAND_TOL: f64 = 1e-10;

/// `s = (C + q/C)/3` with `C^3 = (r + sqrt(r^2 - 4 q^3))/2`.
///
/// With three real roots `C` is complex and the principal cube root picks the
/// largest one. With a single real root the real cube root is used and the
/// sign of the square root follows `r` to avoid cancellation.
fn resolvent_s(q: f64, r: f64) -> Result<f64> {
    let disc = r * r - 4.0 * q * q * q;
    if disc >= 0.0 {
        let w = 0.5 * (r + disc.sqrt().copysign(r));
        if w == 0.0 {
            return Ok(0.0);
        }
        let c = w.cbrt();
        return Ok((c + q / c) / 3.0);
    }
    let c = Complex64::new(0.5 * r, 0.5 * (-disc).sqrt()).cbrt();
    let s = (c + q / c) / 3.0;
    if s.im.abs() > IMAG_TOL * s.re.abs().max(1.0) {
        return Err(Error::DegenerateRadical(s.im));
    }
    Ok(s.re)
}

impl DepressedQuartic {
    pub fn intermediates(&self) -> Result<QuarticIntermediates> {
        let DepressedQuartic { c2, c1, c0 } = *self;
        let p = -2.0 * c2 / 3.0;
        let q = c2 * c2 + 12.0 * c0;
        let r = 2.0 * c2 * c2 * c2 - 72.0 * c2 * c0 + 27.0 * c1 * c1;
        Ok(QuarticIntermediates { p, q, r, s: resolvent_s(q, r)? })
    }

    /// Real roots in the labelled order
    /// `E_{1,2} = u/2 -+ sqrt(2p - s - 2 c1/u)/2`,
    /// `E_{3,4} = -u/2 -+ sqrt(2p - s + 2 c1/u)/2` with `u = sqrt(p + s)`.
    pub fn roots(&self) -> Result<[f64; 4]> {
        roots_from(self.c1, &self.intermediates()?)
    }
}

fn clamp_radicand(x: f64, scale: f64) -> Result<f64> {
    if x < -RADICAND_TOL * scale {
        return Err(Error::FormulaViolation(x));
    }
    Ok(x.max(0.0))
}

fn roots_from(c1: f64, k: &QuarticIntermediates) -> Result<[f64; 4]> {
    let scale = k.p.abs().max(k.s.abs()).max(1.0);
    let u2 = clamp_radicand(k.p + k.s, scale)?;
    if u2 <= 1e-14 * scale {
        return Err(Error::DegenerateRadical(u2));
    }
    let u = u2.sqrt();
    let d_plus = clamp_radicand(2.0 * k.p - k.s - 2.0 * c1 / u, scale)?.sqrt();
    let d_minus = clamp_radicand(2.0 * k.p - k.s + 2.0 * c1 / u, scale)?.sqrt();
    Ok([0.5 * (u - d_plus), 0.5 * (u + d_plus), 0.5 * (-u - d_minus), 0.5 * (-u + d_minus)])
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum GaugeCase {
    /// `A = 0, B = 1`.
    Vector,
    /// `A = 1, B = 0`.
    Axial,
}

fn gauge_case(params: &ModelParams) -> Result<GaugeCase> {
    params.validate()?;
    if params.dimension != Dimension::One {
        return Err(Error::UnsupportedDimension(params.dimension.index()));
    }
    if params.scale() != 1.0 {
        return Err(Error::CaseMismatch("closed forms assume unit ladder scale"));
    }
    match (params.a, params.b) {
        (a, b) if a == 0.0 && b == 1.0 => Ok(GaugeCase::Vector),
        (a, b) if a == 1.0 && b == 0.0 => Ok(GaugeCase::Axial),
        _ => Err(Error::CaseMismatch("needs (A, B) = (0, 1) or (1, 0)")),
    }
}

fn check_n(n: i64) -> Result<f64> {
    if n < 0 {
        return Err(Error::InvalidSector("n must be non-negative".into()));
    }
    Ok(n as f64)
}

/// Characteristic polynomial of the generic block for `(A, B) = (0, 1)` or `(1, 0)`.
pub fn gauge_quartic(n: i64, params: &ModelParams) -> Result<DepressedQuartic> {
    let case = gauge_case(params)?;
    let nf = check_n(n)?;
    let ModelParams { m, alpha, gamma, .. } = *params;
    let (a2, m2, g2) = (alpha * alpha, m * m, gamma * gamma);
    let c2 = -(2.0 * m2 + 2.0 * g2 + (1.0 + a2) * (2.0 * nf + 3.0));
    Ok(match case {
        GaugeCase::Vector => DepressedQuartic {
            c2,
            c1: 2.0 * (m * a2 + gamma),
            c0: ((nf + 2.0) * (1.0 - a2) + m2 - g2) * ((nf + 1.0) * (1.0 - a2) + m2 - g2),
        },
        GaugeCase::Axial => DepressedQuartic {
            c2,
            c1: 2.0 * a2 * m,
            c0: (nf + 1.0) * (nf + 2.0) * (1.0 + a2).powi(2)
                + (2.0 * nf + 3.0) * (g2 + m2 + a2 * (g2 - m2))
                + (g2 - m2).powi(2)
                + 2.0 * gamma * m,
        },
    })
}

/// Resolvent quantities of the gauge blocks. For `A = 0, B = 1` they are
/// written directly in the model parameters; `A = 1, B = 0` goes through its
/// characteristic polynomial.
pub fn quartic_intermediates(n: i64, params: &ModelParams) -> Result<QuarticIntermediates> {
    if gauge_case(params)? == GaugeCase::Axial {
        return gauge_quartic(n, params)?.intermediates();
    }
    let nf = check_n(n)?;
    let ModelParams { m, alpha, gamma, .. } = *params;
    let (a2, m2, g2) = (alpha * alpha, m * m, gamma * gamma);
    let np2 = nf + 2.0;
    let p = 2.0 / 3.0 * ((2.0 * nf + 3.0) * (1.0 + a2) + 2.0 * g2 + 2.0 * m2);
    let q = 16.0 * m2 * (m2 - (1.0 + g2))
        + (1.0 + 4.0 * g2).powi(2)
        + 2.0 * (1.0 + 4.0 * m2 - 8.0 * g2) * a2
        + a2 * a2
        - 16.0 * (1.0 + m2 * (a2 - 2.0) + g2 - a2 * (1.0 + 2.0 * g2) + a2 * a2) * np2
        + 16.0 * (1.0 - a2 + a2 * a2) * np2 * np2;
    let k = m * a2 + gamma;
    let r = 108.0
        * (((nf + 2.0) * (1.0 - a2) + m2 - g2) * ((nf + 1.0) * (1.0 - a2) + m2 - g2) * p - p * p * p / 16.0 + k * k);
    Ok(QuarticIntermediates { p, q, r, s: resolvent_s(q, r)? })
}

/// Closed-form eigenvalues of the generic one-dimensional block for
/// `(A, B) = (0, 1)` or `(1, 0)`, with the branch labels recorded.
pub fn eigenvalues_gauge(n: i64, params: &ModelParams) -> Result<EigenSystem> {
    let c1 = gauge_quartic(n, params)?.c1;
    let roots = roots_from(c1, &quartic_intermediates(n, params)?)?;
    Ok(EigenSystem::from_branches(&roots))
}

/// Normalized eigenvectors of the `A = 0, B = 1` block as columns in branch
/// order. Columns where the polynomial vector nearly vanishes, or whose
/// eigenvalue is degenerate, come from Jacobi instead and are flagged.
#[derive(Debug, Clone, PartialEq)]
pub struct GaugeEigenvectors {
    pub vectors: DMatrix<f64>,
    pub fallback: Vec<bool>,
}

const VECTOR_NORM_TOL: f64 = 1e-6;
const DEGENERACY_TOL: f64 = 1e-9;

/// Unnormalized polynomial eigenvector of the `A = 0, B = 1` block for energy `e`.
fn polynomial_vector(n: f64, params: &ModelParams, e: f64) -> [f64; 4] {
    let ModelParams { m, alpha, gamma, .. } = *params;
    let (a2, m2, g2) = (alpha * alpha, m * m, gamma * gamma);
    let mg = m + gamma;
    [
        alpha * (n + 2.0).sqrt() * ((n + 1.0) * (1.0 - a2) + (m - e).powi(2) - g2),
        mg * ((n + 2.0) * (1.0 - a2) + a2 + m2 - g2) - ((n + 2.0) * (1.0 + a2) - a2 + mg * mg) * e
            + (gamma - m) * e * e
            + e * e * e,
        alpha * ((2.0 * n + 3.0) * e - m - gamma),
        (n + 1.0).sqrt() * ((n + 2.0) * (a2 - 1.0) + (gamma + e).powi(2) - m2),
    ]
}

pub fn eigenvectors_gauge(n: i64, params: &ModelParams, eig: &EigenSystem) -> Result<GaugeEigenvectors> {
    if gauge_case(params)? != GaugeCase::Vector {
        return Err(Error::CaseMismatch("needs A = 0, B = 1"));
    }
    let nf = check_n(n)?;
    let branches = eig.branches();
    if branches.len() != 4 {
        return Err(Error::DimensionMismatch { left: 4, right: branches.len() });
    }
    let mut vectors = DMatrix::<f64>::zeros(4, 4);
    let mut fallback = alloc::vec![false; 4];
    let mut numeric: Option<EigenSystem> = None;
    for (i, &e) in branches.iter().enumerate() {
        let v = polynomial_vector(nf, params, e);
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        let natural = (1.0 + e.abs() + params.m.abs() + params.gamma.abs() + (1.0 + params.alpha.abs()) * (nf + 2.0).sqrt()).powi(3);
        let degenerate = branches.iter().enumerate().any(|(k, &f)| k != i && (e - f).abs() <= DEGENERACY_TOL * e.abs().max(1.0));
        if norm < VECTOR_NORM_TOL * natural || degenerate {
            if numeric.is_none() {
                numeric = Some(jacobi_eigen(block_1d(n, params)?.entries())?);
            }
            let num = numeric.as_ref().unwrap();
            let pos = num
                .values
                .iter()
                .enumerate()
                .min_by(|a, b| (a.1 - e).abs().total_cmp(&(b.1 - e).abs()))
                .map(|(p, _)| p)
                .unwrap_or(0);
            let col = num.vectors.as_ref().unwrap().column(pos).clone_owned();
            vectors.set_column(i, &col);
            fallback[i] = true;
            continue;
        }
        let lead = v.iter().copied().fold(0.0f64, |acc, x| if x.abs() > acc.abs() { x } else { acc });
        let sign = if lead < 0.0 { -1.0 } else { 1.0 };
        for k in 0..4 {
            vectors[(k, i)] = sign * v[k] / norm;
        }
    }
    Ok(GaugeEigenvectors { vectors, fallback })
}
