//! Model parameters and the ladder-operator scale convention.

use alloc::format;

use crate::algebra::Proj;
use crate::error::{Error, Result};

/// Spatial dimension of the oscillator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dimension {
    One,
    Two,
    Three,
}

impl Dimension {
    pub fn from_index(d: u8) -> Result<Self> {
        match d {
            1 => Ok(Dimension::One),
            2 => Ok(Dimension::Two),
            3 => Ok(Dimension::Three),
            _ => Err(Error::InvalidParameter(format!("dimension {d} is not 1, 2 or 3"))),
        }
    }

    pub fn index(self) -> u8 {
        match self {
            Dimension::One => 1,
            Dimension::Two => 2,
            Dimension::Three => 3,
        }
    }
}

/// Scale `s` in `a|n> = s sqrt(n) |n-1>`.
///
/// Every closed form in this crate is written for the default scale of its
/// dimension; other scales multiply each ladder matrix element by `s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LadderConvention {
    scale: f64,
}

impl LadderConvention {
    pub const UNIT: LadderConvention = LadderConvention { scale: 1.0 };
    pub const SQRT2: LadderConvention = LadderConvention { scale: core::f64::consts::SQRT_2 };
    /// Chiral operator `A_R` of the planar oscillator: `A_R |n_R> = 2 sqrt(n_R) |n_R - 1>`.
    pub const CHIRAL: LadderConvention = LadderConvention { scale: 2.0 };

    pub fn new(scale: f64) -> Result<Self> {
        if scale.is_finite() && scale > 0.0 {
            Ok(LadderConvention { scale })
        } else {
            Err(Error::InvalidParameter(format!("ladder scale {scale} must be positive and finite")))
        }
    }

    pub fn default_for(dimension: Dimension) -> Self {
        match dimension {
            Dimension::Two => Self::CHIRAL,
            Dimension::One | Dimension::Three => Self::UNIT,
        }
    }

    pub fn scale(self) -> f64 {
        self.scale
    }
}

/// Physical parameters of one Hamiltonian.
///
/// `a` and `b` weight the two isospin couplings. In one and two dimensions the
/// field prefactor is `a sigma3 + b`; in three dimensions it is `a + b Sigma3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    pub dimension: Dimension,
    pub m: f64,
    pub a: f64,
    pub b: f64,
    pub alpha: f64,
    pub gamma: f64,
    pub convention: LadderConvention,
}

impl ModelParams {
    /// Free oscillator of unit mass with the field switched off.
    pub fn new(dimension: Dimension) -> Self {
        ModelParams {
            dimension,
            m: 1.0,
            a: 0.0,
            b: 0.0,
            alpha: 0.0,
            gamma: 0.0,
            convention: LadderConvention::default_for(dimension),
        }
    }

    pub fn with_mass(mut self, m: f64) -> Self {
        self.m = m;
        self
    }

    pub fn with_couplings(mut self, a: f64, b: f64) -> Self {
        self.a = a;
        self.b = b;
        self
    }

    pub fn with_alpha(mut self, alpha: f64) -> Self {
        self.alpha = alpha;
        self
    }

    pub fn with_gamma(mut self, gamma: f64) -> Self {
        self.gamma = gamma;
        self
    }

    pub fn with_convention(mut self, convention: LadderConvention) -> Self {
        self.convention = convention;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let fields = [("m", self.m), ("A", self.a), ("B", self.b), ("alpha", self.alpha), ("gamma", self.gamma)];
        for (name, v) in fields {
            if !v.is_finite() {
                return Err(Error::InvalidParameter(format!("{name} = {v} is not finite")));
            }
        }
        Ok(())
    }

    /// Field prefactor seen by a state with the given *-spin projection.
    pub fn field_coupling(&self, star: Proj) -> f64 {
        let s = star.sign();
        match self.dimension {
            Dimension::Three => self.a + s * self.b,
            Dimension::One | Dimension::Two => self.a * s + self.b,
        }
    }

    pub fn scale(&self) -> f64 {
        self.convention.scale()
    }
}
