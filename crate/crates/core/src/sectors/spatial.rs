use alloc::vec::Vec;


use super::{BlockMatrix, Family, SectorBasis, SectorKey};
use crate::error::{Error, Result};
use crate::half::HalfInt;
use crate::params::{Dimension, ModelParams};

/// Exact block of a three-dimensional sector.
///
/// With `c = A + Sigma3 B` the four states `|Sigma-,T->, |Sigma-,T+>,
/// |Sigma+,T->, |Sigma+,T+>` couple through the reduced matrix elements of
/// `Sigma.a`: `sqrt(2(r + j + 1))` and `sqrt(2 r)` in the aligned family,
/// `sqrt(2 r)` and `sqrt(2(r + j))` in the antialigned one.
pub(super) fn exact_block(key: SectorKey, params: &ModelParams) -> Result<BlockMatrix> {
    let ModelParams { m, a, b, alpha, gamma, .. } = *params;
    let s = params.scale();
    let r = f64::from(key.radial().unwrap_or(0));
    let j = key.j().value();
    let (top, bottom) = match key.family() {
        Some(Family::Aligned) => ((2.0 * (r + j + 1.0)).sqrt(), (2.0 * r).sqrt()),
        _ => ((2.0 * r).sqrt(), (2.0 * (r + j)).sqrt()),
    };
    let (top, bottom) = (s * top, s * bottom);
    let diag = [-m - (a - b) * gamma, -m + (a - b) * gamma, m - (a + b) * gamma, m + (a + b) * gamma];
    let upper = [(0, 1, alpha * (a - b) * top), (0, 2, top), (1, 3, bottom), (2, 3, alpha * (a + b) * bottom)];
    Ok(BlockMatrix::from_upper(Some(SectorBasis::new(key)), key.len(), &diag, &upper))
}

/// Four-state block in the closed layout commonly quoted for the
/// three-dimensional model, with radicals `sqrt(2(n+j))` and `sqrt(2n)`.
///
/// This layout flips the sign of the `(1,3)` coupling and agrees with the
/// exact sectors only for `A = B = 0`; [`super::sector_block`] gives the
/// exact blocks. `alpha` scales the isospin-ladder entries.
pub fn block_3d(n: i64, j: HalfInt, params: &ModelParams) -> Result<BlockMatrix> {
    params.validate()?;
    if params.dimension != Dimension::Three {
        return Err(Error::UnsupportedDimension(params.dimension.index()));
    }
    if n < 1 {
        return Err(Error::InvalidSector("n must be at least 1".into()));
    }
    if j.is_integer() || j.twice() < 1 {
        return Err(Error::InvalidSector("j must be a positive half-odd integer".into()));
    }
    let ModelParams { m, a, b, alpha, gamma, .. } = *params;
    let s = params.scale();
    let upper_r = s * (2.0 * (n as f64 + j.value())).sqrt();
    let lower_r = s * (2.0 * n as f64).sqrt();
    let diag = [-m - (a - b) * gamma, -m + (a - b) * gamma, m - (a + b) * gamma, m + (a + b) * gamma];
    let upper = [
        (0, 1, alpha * (a - b) * upper_r),
        (0, 2, -upper_r),
        (1, 3, lower_r),
        (2, 3, alpha * (a + b) * lower_r),
    ];
    Ok(BlockMatrix::from_upper(None, 4, &diag, &upper))
}

/// Which field-free pair a [`block_3d_base`] block describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseBranch {
    /// Coupling `sqrt(2n)`.
    Lower,
    /// Coupling `sqrt(2(n+j))`.
    Upper,
}

/// Two-state block `[[-m, c], [c, m]]` of the field-free oscillator.
pub fn block_3d_base(n: i64, j: HalfInt, branch: BaseBranch, params: &ModelParams) -> Result<BlockMatrix> {
    if n < 0 {
        return Err(Error::InvalidSector("n must be non-negative".into()));
    }
    let c = match branch {
        BaseBranch::Lower => 2.0 * n as f64,
        BaseBranch::Upper => 2.0 * (n as f64 + j.value()),
    };
    let c = params.scale() * c.sqrt();
    Ok(BlockMatrix::from_upper(None, 2, &[-params.m, params.m], &[(0, 1, c)]))
}

/// Every sector key with invariant `nu`: all `j` and all `m_j`.
pub fn sectors_3d(nu: i64) -> Vec<SectorKey> {
    let mut out = Vec::new();
    // j - 1/2 <= nu + 1
    let top = 2 * nu + 3;
    for twice_j in (1..=top).step_by(2) {
        let twice_j = twice_j as i32;
        for tm in (-twice_j..=twice_j).step_by(2) {
            if let Ok(key) = SectorKey::three_d(nu, HalfInt::from_twice(twice_j), HalfInt::from_twice(tm)) {
                out.push(key);
            }
        }
    }
    out
}
