use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::params::Dimension;

/// Rows closer than this to the truncation edge are not trusted.
pub const INTERIOR_MARGIN: u32 = 2;

/// Projection of a two-level degree of freedom. `Up` sorts first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Proj {
    Up,
    Down,
}

impl Proj {
    pub const BOTH: [Proj; 2] = [Proj::Up, Proj::Down];

    pub fn sign(self) -> f64 {
        match self {
            Proj::Up => 1.0,
            Proj::Down => -1.0,
        }
    }

    pub fn flip(self) -> Proj {
        match self {
            Proj::Up => Proj::Down,
            Proj::Down => Proj::Up,
        }
    }
}

/// One product state: oscillator occupations, Pauli spin (three dimensions
/// only), *-spin and isospin.
///
/// `modes` is `[n, 0, 0]` in one dimension, `[n_R, n_L, 0]` in two and
/// `[n_x, n_y, n_z]` in three. Unused slots stay zero and `spin` stays `Up`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisLabel {
    pub modes: [u32; 3],
    pub spin: Proj,
    pub star: Proj,
    pub iso: Proj,
}

impl BasisLabel {
    pub fn one_d(n: u32, star: Proj, iso: Proj) -> Self {
        BasisLabel { modes: [n, 0, 0], spin: Proj::Up, star, iso }
    }

    pub fn two_d(n_r: u32, n_l: u32, star: Proj, iso: Proj) -> Self {
        BasisLabel { modes: [n_r, n_l, 0], spin: Proj::Up, star, iso }
    }

    pub fn three_d(modes: [u32; 3], spin: Proj, star: Proj, iso: Proj) -> Self {
        BasisLabel { modes, spin, star, iso }
    }

    pub fn quanta(&self) -> u32 {
        self.modes.iter().sum()
    }
}

/// Ordered product basis of a truncated space.
///
/// One and two dimensions truncate each mode at `n_max`; three dimensions
/// truncate the total quanta `n_x + n_y + n_z` at `n_max`, which keeps the
/// space closed under rotations.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductBasis {
    dimension: Dimension,
    n_max: u32,
    labels: Vec<BasisLabel>,
}

impl ProductBasis {
    pub fn new(dimension: Dimension, n_max: u32) -> Result<Self> {
        if n_max < 1 {
            return Err(Error::InvalidTruncation { n_max, min: 1 });
        }
        let mut labels = Vec::new();
        match dimension {
            Dimension::One => {
                for n in 0..=n_max {
                    for star in Proj::BOTH {
                        for iso in Proj::BOTH {
                            labels.push(BasisLabel::one_d(n, star, iso));
                        }
                    }
                }
            }
            Dimension::Two => {
                for n_r in 0..=n_max {
                    for n_l in 0..=n_max {
                        for star in Proj::BOTH {
                            for iso in Proj::BOTH {
                                labels.push(BasisLabel::two_d(n_r, n_l, star, iso));
                            }
                        }
                    }
                }
            }
            Dimension::Three => {
                for nx in 0..=n_max {
                    for ny in 0..=n_max - nx {
                        for nz in 0..=n_max - nx - ny {
                            for spin in Proj::BOTH {
                                for star in Proj::BOTH {
                                    for iso in Proj::BOTH {
                                        labels.push(BasisLabel::three_d([nx, ny, nz], spin, star, iso));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(ProductBasis { dimension, n_max, labels })
    }

    pub fn dimension(&self) -> Dimension {
        self.dimension
    }

    pub fn n_max(&self) -> u32 {
        self.n_max
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &BasisLabel {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &BasisLabel) -> Option<usize> {
        self.labels.binary_search(label).ok()
    }

    /// Whether `label` sits at least `margin` quanta below the truncation.
    pub fn is_interior(&self, label: &BasisLabel, margin: u32) -> bool {
        let Some(limit) = self.n_max.checked_sub(margin) else {
            return false;
        };
        match self.dimension {
            Dimension::Three => label.quanta() <= limit,
            Dimension::One | Dimension::Two => label.modes.iter().all(|&n| n <= limit),
        }
    }

    pub fn interior_mask(&self, margin: u32) -> Vec<bool> {
        self.labels.iter().map(|l| self.is_interior(l, margin)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(ProductBasis::new(Dimension::One, 5).unwrap().len(), 24);
        assert_eq!(ProductBasis::new(Dimension::Two, 3).unwrap().len(), 64);
        // C(n_max + 3, 3) orbitals times 8 spin states
        assert_eq!(ProductBasis::new(Dimension::Three, 4).unwrap().len(), 35 * 8);
        assert!(ProductBasis::new(Dimension::One, 0).is_err());
    }

    #[test]
    fn labels_sorted_and_indexable() {
        for dim in [Dimension::One, Dimension::Two, Dimension::Three] {
            let basis = ProductBasis::new(dim, 4).unwrap();
            assert!(basis.labels().windows(2).all(|w| w[0] < w[1]));
            for (i, l) in basis.labels().iter().enumerate() {
                assert_eq!(basis.index_of(l), Some(i));
            }
        }
    }

    #[test]
    fn interior() {
        let basis = ProductBasis::new(Dimension::Three, 6).unwrap();
        let inside = BasisLabel::three_d([1, 2, 1], Proj::Up, Proj::Up, Proj::Down);
        let edge = BasisLabel::three_d([1, 2, 2], Proj::Up, Proj::Up, Proj::Down);
        assert!(basis.is_interior(&inside, 2));
        assert!(!basis.is_interior(&edge, 2));
    }
}
