//! The four-integer vertex representation.
//!
//! A tiling vertex at plane position `(x, y)` is named by integers
//! `(x1, x2, x3, x4)` with
//!
//! ```text
//! x = (x1 + x2·√5) / 4
//! y = x3·sin36° + x4·sin72°
//! ```
//!
//! Unprimed coordinates are canonical everywhere in the crate. The primed
//! frame, in which every integer quadruple is reachable, is offered only as
//! a conversion.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::quad::{QuadVal, SQRT5};

pub const SIN36: f64 = 0.587_785_252_292_473_1;
pub const SIN72: f64 = 0.951_056_516_295_153_5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("direction index {0} is outside 0..10")]
    DirectionOutOfRange(usize),
    #[error("rotation of {0} is not integral; the vertex violates the lattice congruences")]
    NonIntegralRotation(LatticeVertex),
    #[error("vertex {0} violates the lattice congruences")]
    ConstraintViolation(LatticeVertex),
}

/// A point of the integer lattice Z⁴.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LatticeVertex {
    pub x1: i64,
    pub x2: i64,
    pub x3: i64,
    pub x4: i64,
}

impl LatticeVertex {
    pub const ORIGIN: LatticeVertex = LatticeVertex::new(0, 0, 0, 0);

    pub const fn new(x1: i64, x2: i64, x3: i64, x4: i64) -> Self {
        LatticeVertex { x1, x2, x3, x4 }
    }

    pub const fn from_array(c: [i64; 4]) -> Self {
        LatticeVertex::new(c[0], c[1], c[2], c[3])
    }

    pub const fn to_array(self) -> [i64; 4] {
        [self.x1, self.x2, self.x3, self.x4]
    }

    /// `4x` as an element of Z[√5].
    pub fn x_quad(&self) -> QuadVal {
        QuadVal::new(self.x1 as i128, self.x2 as i128)
    }

    /// `y` in units of `sin36°/2`: from `sin72° = sin36°·(1 + √5)/2`,
    /// `y = (sin36°/2)·((2·x3 + x4) + x4·√5)`.
    pub fn y_quad(&self) -> QuadVal {
        let x3 = self.x3 as i128;
        let x4 = self.x4 as i128;
        QuadVal::new(2 * x3 + x4, x4)
    }

    pub fn to_plane(self) -> PlanePoint {
        vertex_to_plane(self)
    }

    pub fn rotate36(self) -> Result<LatticeVertex, LatticeError> {
        rotate36(self)
    }

    pub fn reflect_y(self) -> LatticeVertex {
        reflect_y(self)
    }

    pub fn satisfies_constraints(&self) -> bool {
        satisfies_constraints(*self)
    }
}

impl fmt::Display for LatticeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.x1, self.x2, self.x3, self.x4)
    }
}

impl Add for LatticeVertex {
    type Output = LatticeVertex;
    fn add(self, o: LatticeVertex) -> LatticeVertex {
        LatticeVertex::new(self.x1 + o.x1, self.x2 + o.x2, self.x3 + o.x3, self.x4 + o.x4)
    }
}

impl Sub for LatticeVertex {
    type Output = LatticeVertex;
    fn sub(self, o: LatticeVertex) -> LatticeVertex {
        LatticeVertex::new(self.x1 - o.x1, self.x2 - o.x2, self.x3 - o.x3, self.x4 - o.x4)
    }
}

impl Neg for LatticeVertex {
    type Output = LatticeVertex;
    fn neg(self) -> LatticeVertex {
        LatticeVertex::new(-self.x1, -self.x2, -self.x3, -self.x4)
    }
}

impl Mul<i64> for LatticeVertex {
    type Output = LatticeVertex;
    fn mul(self, k: i64) -> LatticeVertex {
        LatticeVertex::new(self.x1 * k, self.x2 * k, self.x3 * k, self.x4 * k)
    }
}

/// Exact plane position of a lattice vertex.
///
/// `x = x_num / 4` with `x_num = x1 + x2·√5`; `y = y.0·sin36° + y.1·sin72°`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PlanePoint {
    pub x_num: QuadVal,
    pub y: (i64, i64),
}

impl PlanePoint {
    pub fn x(&self) -> f64 {
        self.x_num.to_f64() / 4.0
    }

    pub fn y(&self) -> f64 {
        self.y.0 as f64 * SIN36 + self.y.1 as f64 * SIN72
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x(), self.y())
    }
}

/// Unit steps at angle `j·36°`, `j = 0..5`; the other five are negatives.
const BASIS: [LatticeVertex; 5] = [
    LatticeVertex::new(4, 0, 0, 0),
    LatticeVertex::new(1, 1, 1, 0),
    LatticeVertex::new(-1, 1, 0, 1),
    LatticeVertex::new(1, -1, 0, 1),
    LatticeVertex::new(-1, -1, 1, 0),
];

/// The unit step at angle `j·36°` counterclockwise from +x.
pub fn displacement(j: usize) -> Result<LatticeVertex, LatticeError> {
    if j >= 10 {
        return Err(LatticeError::DirectionOutOfRange(j));
    }
    Ok(unit(j))
}

/// Like [`displacement`] with the index taken mod 10.
pub fn unit(j: usize) -> LatticeVertex {
    let j = j % 10;
    if j < 5 {
        BASIS[j]
    } else {
        -BASIS[j - 5]
    }
}

/// Index `j` with `unit(j) == d`, if `d` is a unit step.
pub fn direction_of(d: LatticeVertex) -> Option<usize> {
    (0..10).find(|&j| unit(j) == d)
}

pub fn vertex_to_plane(v: LatticeVertex) -> PlanePoint {
    PlanePoint {
        x_num: v.x_quad(),
        y: (v.x3, v.x4),
    }
}

/// `4T`: counterclockwise rotation by 36°, scaled to integers.
pub const ROTATION_X4: [[i64; 4]; 4] = [[1, 5, -10, 0], [1, 1, 2, -4], [1, -1, 0, 2], [0, 2, 2, 2]];

/// Reflection about the y axis.
pub const REFLECTION: [[i64; 4]; 4] = [[-1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]];

/// The 36° rotation in primed coordinates; entries are all in {-1, 0, 1}.
pub const ROTATION_PRIMED: [[i64; 4]; 4] = [[1, 0, -1, 0], [1, 0, 0, 0], [1, -1, 0, 1], [0, 1, 0, 0]];

fn apply(m: &[[i64; 4]; 4], v: [i64; 4]) -> [i64; 4] {
    let mut out = [0i64; 4];
    for (o, row) in out.iter_mut().zip(m) {
        *o = row.iter().zip(v).map(|(a, b)| a * b).sum();
    }
    out
}

pub fn rotate36(v: LatticeVertex) -> Result<LatticeVertex, LatticeError> {
    let w = apply(&ROTATION_X4, v.to_array());
    if w.iter().any(|c| c % 4 != 0) {
        return Err(LatticeError::NonIntegralRotation(v));
    }
    Ok(LatticeVertex::from_array(w.map(|c| c / 4)))
}

/// Rotation by `k·36°`, `k` taken mod 10.
pub fn rotate_by(v: LatticeVertex, k: usize) -> Result<LatticeVertex, LatticeError> {
    (0..k % 10).try_fold(v, |acc, _| rotate36(acc))
}

pub fn reflect_y(v: LatticeVertex) -> LatticeVertex {
    LatticeVertex::new(-v.x1, -v.x2, v.x3, v.x4)
}

pub fn satisfies_constraints(v: LatticeVertex) -> bool {
    (v.x1 + v.x2 + 2 * v.x3).rem_euclid(4) == 0 && (v.x2 + v.x3 + v.x4).rem_euclid(2) == 0
}

/// A vertex in primed coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PrimedVertex {
    pub p1: i64,
    pub p2: i64,
    pub p3: i64,
    pub p4: i64,
}

impl PrimedVertex {
    pub const fn new(p1: i64, p2: i64, p3: i64, p4: i64) -> Self {
        PrimedVertex { p1, p2, p3, p4 }
    }

    pub const fn to_array(self) -> [i64; 4] {
        [self.p1, self.p2, self.p3, self.p4]
    }
}

pub fn to_primed(v: LatticeVertex) -> Result<PrimedVertex, LatticeError> {
    if !satisfies_constraints(v) {
        return Err(LatticeError::ConstraintViolation(v));
    }
    Ok(PrimedVertex::new(
        (v.x1 + v.x2 + 2 * v.x3) / 4,
        (v.x2 + v.x3 + v.x4) / 2,
        v.x3,
        v.x4,
    ))
}

pub fn from_primed(p: PrimedVertex) -> LatticeVertex {
    let x3 = p.p3;
    let x4 = p.p4;
    let x2 = 2 * p.p2 - x3 - x4;
    let x1 = 4 * p.p1 - x2 - 2 * x3;
    LatticeVertex::new(x1, x2, x3, x4)
}

pub fn rotate36_primed(p: PrimedVertex) -> PrimedVertex {
    let [a, b, c, d] = apply(&ROTATION_PRIMED, p.to_array());
    PrimedVertex::new(a, b, c, d)
}

/// Float view of the plane position; used by renderers and test oracles.
pub fn plane_f64(v: LatticeVertex) -> (f64, f64) {
    (
        (v.x1 as f64 + v.x2 as f64 * SQRT5) / 4.0,
        v.x3 as f64 * SIN36 + v.x4 as f64 * SIN72,
    )
}
