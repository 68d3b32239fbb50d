use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{BasisLabel, Proj};
use crate::error::{Error, Result};
use crate::half::HalfInt;
use crate::params::Dimension;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SectorKind {
    Generic,
    Triplet,
    Singlet,
}

/// Parity family of a three-dimensional sector: whether the
/// lowest-energy-like state `|Sigma-, T->` has orbital `l = j + 1/2`
/// (aligned) or `l = j - 1/2` (antialigned).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Aligned,
    Antialigned,
}

/// Identifies one invariant sector.
///
/// `n` is the eigenvalue of the number-type invariant. Two dimensions add the
/// spectator `n_L`; three dimensions add `j` and `m_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SectorKey {
    dimension: Dimension,
    n: i64,
    spectator: u32,
    j: HalfInt,
    m_j: HalfInt,
}

impl SectorKey {
    pub fn one_d(n: i64) -> Result<Self> {
        if n < -2 {
            return Err(Error::InvalidSector(format!("n = {n} is below the singlet")));
        }
        Ok(SectorKey { dimension: Dimension::One, n, spectator: 0, j: HalfInt::ZERO, m_j: HalfInt::ZERO })
    }

    pub fn two_d(n: i64, n_l: u32) -> Result<Self> {
        let mut key = Self::one_d(n)?;
        key.dimension = Dimension::Two;
        key.spectator = n_l;
        Ok(key)
    }

    pub fn three_d(nu: i64, j: HalfInt, m_j: HalfInt) -> Result<Self> {
        if j.is_integer() || j.twice() < 1 {
            return Err(Error::InvalidSector(format!("j = {j} must be a positive half-odd integer")));
        }
        if m_j.twice().abs() > j.twice() || (j.twice() - m_j.twice()) % 2 != 0 {
            return Err(Error::InvalidSector(format!("m_j = {m_j} is not a projection of j = {j}")));
        }
        let key = SectorKey { dimension: Dimension::Three, n: nu, spectator: 0, j, m_j };
        if key.offset() < -1 {
            return Err(Error::InvalidSector(format!("no states with invariant {nu} and j = {j}")));
        }
        Ok(key)
    }

    /// `nu - (j - 1/2)`; its parity selects the family.
    fn offset(&self) -> i64 {
        self.n - i64::from(self.j.minus_half().unwrap_or(0))
    }

    pub fn dimension(&self) -> Dimension {
        self.dimension
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn spectator(&self) -> u32 {
        self.spectator
    }

    pub fn j(&self) -> HalfInt {
        self.j
    }

    pub fn m_j(&self) -> HalfInt {
        self.m_j
    }

    pub fn family(&self) -> Option<Family> {
        match self.dimension {
            Dimension::Three if self.offset().rem_euclid(2) == 0 => Some(Family::Aligned),
            Dimension::Three => Some(Family::Antialigned),
            _ => None,
        }
    }

    /// Radial quantum number of the first state in three dimensions.
    pub fn radial(&self) -> Option<u32> {
        let x = self.offset();
        match self.family()? {
            Family::Aligned => Some((x / 2) as u32),
            Family::Antialigned => Some(((x + 1) / 2) as u32),
        }
    }

    pub fn kind(&self) -> SectorKind {
        match self.dimension {
            Dimension::Three => match self.offset() {
                -1 => SectorKind::Singlet,
                0 => SectorKind::Triplet,
                _ => SectorKind::Generic,
            },
            _ => match self.n {
                -2 => SectorKind::Singlet,
                -1 => SectorKind::Triplet,
                _ => SectorKind::Generic,
            },
        }
    }

    pub fn len(&self) -> usize {
        match self.kind() {
            SectorKind::Generic => 4,
            SectorKind::Triplet => 3,
            SectorKind::Singlet => 1,
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for SectorKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.dimension {
            Dimension::One => write!(f, "n={}", self.n),
            Dimension::Two => write!(f, "n={};nL={}", self.n, self.spectator),
            Dimension::Three => write!(f, "nu={};j={};mj={}", self.n, self.j, self.m_j),
        }
    }
}

/// State `|radial, (l, 1/2) j, m_j>|Sigma>|T>` of the coupled spherical basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoupledLabel {
    pub radial: u32,
    pub l: u32,
    pub j: HalfInt,
    pub m_j: HalfInt,
    pub star: Proj,
    pub iso: Proj,
}

impl CoupledLabel {
    /// Oscillator quanta `2 radial + l`.
    pub fn quanta(&self) -> u32 {
        2 * self.radial + self.l
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SectorState {
    Product(BasisLabel),
    Coupled(CoupledLabel),
}

/// Ordered states of one sector.
#[derive(Debug, Clone, PartialEq)]
pub struct SectorBasis {
    pub key: SectorKey,
    pub states: Vec<SectorState>,
}

impl SectorBasis {
    pub fn new(key: SectorKey) -> Self {
        use Proj::{Down as M, Up as P};
        let states = match key.dimension {
            Dimension::One | Dimension::Two => {
                let n_l = key.spectator;
                let label = |n: i64, star, iso| {
                    let n = n as u32;
                    SectorState::Product(match key.dimension {
                        Dimension::One => BasisLabel::one_d(n, star, iso),
                        _ => BasisLabel::two_d(n, n_l, star, iso),
                    })
                };
                let n = key.n;
                let all = [label(n + 2, M, M), label(n + 1, M, P), label(n + 1, P, M), label(n.max(0), P, P)];
                all[..key.len()].to_vec()
            }
            Dimension::Three => {
                let r = key.radial().unwrap_or(0);
                let lo = key.j.minus_half().unwrap_or(0) as u32;
                let hi = lo + 1;
                let label = |radial: u32, l: u32, star, iso| {
                    SectorState::Coupled(CoupledLabel { radial, l, j: key.j, m_j: key.m_j, star, iso })
                };
                let r1 = r.saturating_sub(1);
                let all = match key.family() {
                    Some(Family::Aligned) => [label(r, hi, M, M), label(r, lo, M, P), label(r, lo, P, M), label(r1, hi, P, P)],
                    _ => [label(r, lo, M, M), label(r1, hi, M, P), label(r1, hi, P, M), label(r1, lo, P, P)],
                };
                all[..key.len()].to_vec()
            }
        };
        SectorBasis { key, states }
    }

    /// Product labels, for one- and two-dimensional sectors.
    pub fn product_labels(&self) -> Option<Vec<BasisLabel>> {
        self.states
            .iter()
            .map(|s| match s {
                SectorState::Product(l) => Some(*l),
                SectorState::Coupled(_) => None,
            })
            .collect()
    }
}
