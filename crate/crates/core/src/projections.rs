//! Lower-dimensional lattice representations.
//!
//! * μ-projection to 3D: `(x1, x2, μ·(x3·sin36° + x4·sin72°))`. Viewing it
//!   orthographically along `(√5, −1, 0)` gives back the plane tiling scaled
//!   by `μ = 2√(2/3)`.
//! * (1,2)-projection to 3D: `(x1, x2, x3 + 2·x4)`, all integers.
//! * Flat 2D lattice: `(x1 + 2·x2, x3 + 2·x4)`. This is the map
//!   `(x1/4 + x2/2, x3/2 + x4)` scaled by 4 in x and 2 in y so that every
//!   coordinate is an integer.

use std::fmt;
use std::ops::{Add, Sub};

use crate::lattice::{unit, LatticeVertex, SIN36, SIN72};
use crate::quad::SQRT5;

/// `μ = 2·√(2/3)`.
pub const MU: f64 = 1.632_993_161_855_452;

/// A μ-projected vertex. The z coordinate is `μ·(z.0·sin36° + z.1·sin72°)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MuPoint {
    pub x1: i64,
    pub x2: i64,
    pub z: (i64, i64),
}

impl MuPoint {
    pub fn z(&self) -> f64 {
        MU * (self.z.0 as f64 * SIN36 + self.z.1 as f64 * SIN72)
    }

    pub fn to_f64(&self) -> [f64; 3] {
        [self.x1 as f64, self.x2 as f64, self.z()]
    }
}

pub fn project_mu(v: LatticeVertex) -> MuPoint {
    MuPoint {
        x1: v.x1,
        x2: v.x2,
        z: (v.x3, v.x4),
    }
}

/// Orthographic view of a μ-projected point along `(√5, −1, 0)`, in the
/// basis `(1, √5, 0)/√6`, `(0, 0, 1)`.
pub fn flatten_mu(p: &MuPoint) -> (f64, f64) {
    let x = (p.x1 as f64 + SQRT5 * p.x2 as f64) / 6f64.sqrt();
    (x, p.z())
}

pub fn project_12(v: LatticeVertex) -> [i64; 3] {
    [v.x1, v.x2, v.x3 + 2 * v.x4]
}

/// A point of the flat integer lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FlatPoint {
    pub x: i64,
    pub y: i64,
}

impl FlatPoint {
    pub const ORIGIN: FlatPoint = FlatPoint { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        FlatPoint { x, y }
    }

    pub fn norm_sq(&self) -> i64 {
        self.x * self.x + self.y * self.y
    }

    /// The unscaled flat coordinates `(X/4, Y/2)`.
    pub fn to_f64(&self) -> (f64, f64) {
        (self.x as f64 / 4.0, self.y as f64 / 2.0)
    }
}

impl fmt::Display for FlatPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl Add for FlatPoint {
    type Output = FlatPoint;
    fn add(self, o: FlatPoint) -> FlatPoint {
        FlatPoint::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for FlatPoint {
    type Output = FlatPoint;
    fn sub(self, o: FlatPoint) -> FlatPoint {
        FlatPoint::new(self.x - o.x, self.y - o.y)
    }
}

pub fn project_flat(v: LatticeVertex) -> FlatPoint {
    FlatPoint::new(v.x1 + 2 * v.x2, v.x3 + 2 * v.x4)
}

/// Flat image of the unit step in direction `j` (mod 10).
pub fn flat_unit(j: usize) -> FlatPoint {
    project_flat(unit(j))
}

/// Direction index whose flat image is `d`.
pub fn flat_direction_of(d: FlatPoint) -> Option<usize> {
    (0..10).find(|&j| flat_unit(j) == d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mu_examples() {
        assert_eq!(project_mu(LatticeVertex::ORIGIN).to_f64(), [0.0, 0.0, 0.0]);
        assert_eq!(
            project_mu(LatticeVertex::new(4, 0, 0, 0)).to_f64(),
            [4.0, 0.0, 0.0]
        );
        let p = project_mu(LatticeVertex::new(1, 1, 1, 0)).to_f64();
        assert_eq!(&p[..2], &[1.0, 1.0]);
        assert!((p[2] - 0.959_849_297_633_090_3).abs() < 1e-12);
        assert!((MU - 2.0 * (2.0f64 / 3.0).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn flatten_examples() {
        let o = flatten_mu(&project_mu(LatticeVertex::ORIGIN));
        assert_eq!(o, (0.0, 0.0));
        let (x, y) = flatten_mu(&project_mu(LatticeVertex::new(4, 0, 0, 0)));
        assert!((x - MU).abs() < 1e-12);
        assert_eq!(y, 0.0);
    }

    #[test]
    fn one_two_examples() {
        assert_eq!(project_12(LatticeVertex::ORIGIN), [0, 0, 0]);
        assert_eq!(project_12(LatticeVertex::new(1, 1, 1, 0)), [1, 1, 1]);
        assert_eq!(project_12(LatticeVertex::new(-1, 1, 0, 1)), [-1, 1, 2]);
    }

    #[test]
    fn flat_examples() {
        assert_eq!(project_flat(LatticeVertex::ORIGIN), FlatPoint::new(0, 0));
        let a = project_flat(LatticeVertex::new(4, 0, 0, 0));
        assert_eq!(a, FlatPoint::new(4, 0));
        assert_eq!(a.to_f64(), (1.0, 0.0));
        let b = project_flat(LatticeVertex::new(1, 1, 1, 0));
        assert_eq!(b, FlatPoint::new(3, 1));
        assert_eq!(b.to_f64(), (0.75, 0.5));
    }

    #[test]
    fn flat_units_are_distinct() {
        let expect = [(4, 0), (3, 1), (1, 2), (-1, 2), (-3, 1)];
        for (j, (x, y)) in expect.into_iter().enumerate() {
            assert_eq!(flat_unit(j), FlatPoint::new(x, y));
            assert_eq!(flat_unit(j + 5), FlatPoint::new(-x, -y));
        }
        for i in 0..10 {
            assert_eq!(flat_direction_of(flat_unit(i)), Some(i));
        }
        let mut imgs: Vec<_> = (0..10).map(|j| project_12(unit(j))).collect();
        imgs.sort();
        imgs.dedup();
        assert_eq!(imgs.len(), 10);
    }
}
