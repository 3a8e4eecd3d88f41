//! Exact arithmetic in the ring Z[√5].
//!
//! Every geometric decision in the crate reduces to the sign of a number
//! `a + b√5` with integer `a`, `b`. Values are stored as `i128` pairs; the
//! documented working range is `|a|, |b| <= 2^60`, inside which products and
//! sign tests cannot overflow. Outside that range the checked operations
//! report [`Overflow`] instead of wrapping.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// √5 as an `f64`.
pub const SQRT5: f64 = 2.236_067_977_499_79;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("integer overflow in Z[sqrt5] arithmetic")]
pub struct Overflow;

/// The real number `a + b√5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct QuadVal {
    pub a: i128,
    pub b: i128,
}

impl QuadVal {
    pub const ZERO: QuadVal = QuadVal { a: 0, b: 0 };
    pub const ONE: QuadVal = QuadVal { a: 1, b: 0 };

    pub const fn new(a: i128, b: i128) -> Self {
        QuadVal { a, b }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn checked_add(self, rhs: QuadVal) -> Result<QuadVal, Overflow> {
        Ok(QuadVal {
            a: self.a.checked_add(rhs.a).ok_or(Overflow)?,
            b: self.b.checked_add(rhs.b).ok_or(Overflow)?,
        })
    }

    pub fn checked_sub(self, rhs: QuadVal) -> Result<QuadVal, Overflow> {
        Ok(QuadVal {
            a: self.a.checked_sub(rhs.a).ok_or(Overflow)?,
            b: self.b.checked_sub(rhs.b).ok_or(Overflow)?,
        })
    }

    pub fn checked_neg(self) -> Result<QuadVal, Overflow> {
        Ok(QuadVal {
            a: self.a.checked_neg().ok_or(Overflow)?,
            b: self.b.checked_neg().ok_or(Overflow)?,
        })
    }

    /// `(a1 + b1√5)(a2 + b2√5) = (a1·a2 + 5·b1·b2) + (a1·b2 + a2·b1)√5`
    pub fn checked_mul(self, rhs: QuadVal) -> Result<QuadVal, Overflow> {
        let aa = self.a.checked_mul(rhs.a).ok_or(Overflow)?;
        let bb = self
            .b
            .checked_mul(rhs.b)
            .and_then(|v| v.checked_mul(5))
            .ok_or(Overflow)?;
        let ab = self.a.checked_mul(rhs.b).ok_or(Overflow)?;
        let ba = self.b.checked_mul(rhs.a).ok_or(Overflow)?;
        Ok(QuadVal {
            a: aa.checked_add(bb).ok_or(Overflow)?,
            b: ab.checked_add(ba).ok_or(Overflow)?,
        })
    }

    /// Exact sign of the denoted real number.
    pub fn sign(&self) -> Result<i32, Overflow> {
        sign_quad(self.a, self.b)
    }

    /// Field norm `a² − 5b²`.
    pub fn norm(&self) -> Result<i128, Overflow> {
        let a2 = self.a.checked_mul(self.a).ok_or(Overflow)?;
        let b2 = self
            .b
            .checked_mul(self.b)
            .and_then(|v| v.checked_mul(5))
            .ok_or(Overflow)?;
        a2.checked_sub(b2).ok_or(Overflow)
    }

    /// Floating-point approximation, for rendering only.
    pub fn to_f64(&self) -> f64 {
        eval_float(*self)
    }
}

impl fmt::Display for QuadVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b < 0 {
            write!(f, "{} - {}√5", self.a, -self.b)
        } else {
            write!(f, "{} + {}√5", self.a, self.b)
        }
    }
}

impl From<i64> for QuadVal {
    fn from(a: i64) -> Self {
        QuadVal::new(a as i128, 0)
    }
}

// Operator forms panic on overflow; predicates use the checked forms.
impl Add for QuadVal {
    type Output = QuadVal;
    fn add(self, rhs: QuadVal) -> QuadVal {
        self.checked_add(rhs).expect("QuadVal addition overflowed")
    }
}

impl Sub for QuadVal {
    type Output = QuadVal;
    fn sub(self, rhs: QuadVal) -> QuadVal {
        self.checked_sub(rhs).expect("QuadVal subtraction overflowed")
    }
}

impl Neg for QuadVal {
    type Output = QuadVal;
    fn neg(self) -> QuadVal {
        self.checked_neg().expect("QuadVal negation overflowed")
    }
}

impl Mul for QuadVal {
    type Output = QuadVal;
    fn mul(self, rhs: QuadVal) -> QuadVal {
        self.checked_mul(rhs).expect("QuadVal multiplication overflowed")
    }
}

/// Sign of `a + b√5` using integer arithmetic only.
///
/// When `a` and `b` agree in sign the answer is immediate; when one is zero
/// the other decides. When they disagree, `a + b√5` has the sign of `a` if
/// `|a| > √5·|b|`, i.e. `sign(a)·sign(a² − 5b²)`.
pub fn sign_quad(a: i128, b: i128) -> Result<i32, Overflow> {
    let sa = a.signum() as i32;
    let sb = b.signum() as i32;
    match sa * sb {
        1 => Ok(sa),
        0 => Ok(if a == 0 { sb } else { sa }),
        _ => {
            let a2 = a.checked_mul(a).ok_or(Overflow)?;
            let b2 = b.checked_mul(b).and_then(|v| v.checked_mul(5)).ok_or(Overflow)?;
            // both squares are non-negative, so the difference cannot overflow
            Ok(sa * (a2 - b2).signum() as i32)
        }
    }
}

/// Exact comparison of two ring elements.
pub fn cmp_quad(p: QuadVal, q: QuadVal) -> Result<Ordering, Overflow> {
    let d = p.checked_sub(q)?;
    Ok(sign_quad(d.a, d.b)?.cmp(&0))
}

/// `a + b√5` as an `f64`.
///
/// Mixed-sign inputs are evaluated as `(a² − 5b²) / (a − b√5)` so that the
/// result keeps full relative precision near cancellation.
pub fn eval_float(p: QuadVal) -> f64 {
    let (a, b) = (p.a, p.b);
    if a.signum() * b.signum() < 0 {
        if let Ok(n) = p.norm() {
            let denom = a as f64 - b as f64 * SQRT5;
            return n as f64 / denom;
        }
    }
    a as f64 + b as f64 * SQRT5
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_examples() {
        assert_eq!(sign_quad(0, 0), Ok(0));
        assert_eq!(sign_quad(1, 0), Ok(1));
        assert_eq!(sign_quad(-2, 1), Ok(1));
        assert_eq!(sign_quad(161, -72), Ok(1));
        assert_eq!(sign_quad(-161, 72), Ok(-1));
        assert_eq!(sign_quad(0, -3), Ok(-1));
    }

    #[test]
    fn sign_overflow_is_reported() {
        assert_eq!(sign_quad(i128::MAX, -1), Err(Overflow));
        assert_eq!(sign_quad(1, i128::MIN), Err(Overflow));
        // same-sign inputs never need the discriminant
        assert_eq!(sign_quad(i128::MAX, i128::MAX), Ok(1));
    }

    #[test]
    fn documented_bound_is_safe() {
        let m = 1i128 << 60;
        assert_eq!(sign_quad(m, -m), Ok(-1));
        assert_eq!(sign_quad(-m, m), Ok(1));
    }

    #[test]
    fn cmp_examples() {
        assert_eq!(cmp_quad(QuadVal::ZERO, QuadVal::ZERO), Ok(Ordering::Equal));
        assert_eq!(
            cmp_quad(QuadVal::new(9, -4), QuadVal::ZERO),
            Ok(Ordering::Greater)
        );
        assert_eq!(
            cmp_quad(QuadVal::new(2, 0), QuadVal::new(0, 1)),
            Ok(Ordering::Less)
        );
    }

    #[test]
    fn float_examples() {
        assert_eq!(eval_float(QuadVal::ZERO), 0.0);
        assert!((eval_float(QuadVal::new(1, 1)) - 3.236_067_977_499_79).abs() < 1e-14);
        assert!((eval_float(QuadVal::new(-1, 1)) - 1.236_067_977_499_79).abs() < 1e-14);
    }

    #[test]
    fn float_keeps_precision_near_cancellation() {
        // 161 - 72√5 = 1 / (161 + 72√5)
        let v = eval_float(QuadVal::new(161, -72));
        let expect = 1.0 / (161.0 + 72.0 * SQRT5);
        assert!(((v - expect) / expect).abs() < 1e-14);
    }

    #[test]
    fn multiplication() {
        let p = QuadVal::new(1, 1);
        assert_eq!(p * p, QuadVal::new(6, 2));
        assert_eq!(QuadVal::new(9, 4) * QuadVal::new(9, -4), QuadVal::ONE);
        assert!(QuadVal::new(i128::MAX, 0)
            .checked_mul(QuadVal::new(2, 0))
            .is_err());
    }
}
