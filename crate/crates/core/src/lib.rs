//! Spectra and isospin entanglement dynamics of a Dirac oscillator coupled
//! to an external isospin field, in one, two and three dimensions.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod dynamics;
mod error;
mod half;
mod params;
pub mod sectors;
pub mod spectra;

pub use error::{Error, Result};
pub use half::HalfInt;
pub use num_complex::Complex64;
pub use params::{Dimension, LadderConvention, ModelParams};
