//! Points of N² and Z², plus exact coordinates in a two-ray basis.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::SemigroupError;

/// A point of Z².
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntegerVector {
    pub x: i64,
    pub y: i64,
}

impl IntegerVector {
    pub const ZERO: IntegerVector = IntegerVector { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        IntegerVector { x, y }
    }

    pub fn checked_add(self, other: Self) -> Option<Self> {
        Some(IntegerVector::new(self.x.checked_add(other.x)?, self.y.checked_add(other.y)?))
    }

    pub fn checked_sub(self, other: Self) -> Option<Self> {
        Some(IntegerVector::new(self.x.checked_sub(other.x)?, self.y.checked_sub(other.y)?))
    }

    pub fn checked_scale(self, factor: i64) -> Option<Self> {
        Some(IntegerVector::new(self.x.checked_mul(factor)?, self.y.checked_mul(factor)?))
    }

    /// The same point as an element of N², if both coordinates are nonnegative.
    pub fn to_lattice(self) -> Option<LatticeVector> {
        LatticeVector::new(self.x, self.y).ok()
    }
}

impl Add for IntegerVector {
    type Output = IntegerVector;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("integer vector overflow")
    }
}

impl Sub for IntegerVector {
    type Output = IntegerVector;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs).expect("integer vector overflow")
    }
}

impl Neg for IntegerVector {
    type Output = IntegerVector;
    fn neg(self) -> Self {
        IntegerVector::new(-self.x, -self.y)
    }
}

impl Mul<IntegerVector> for i64 {
    type Output = IntegerVector;
    fn mul(self, rhs: IntegerVector) -> IntegerVector {
        rhs.checked_scale(self).expect("integer vector overflow")
    }
}

impl fmt::Display for IntegerVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// A point of N². Both coordinates are nonnegative by construction.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "IntegerVector", into = "IntegerVector")]
pub struct LatticeVector {
    x: i64,
    y: i64,
}

impl LatticeVector {
    pub const ZERO: LatticeVector = LatticeVector { x: 0, y: 0 };

    pub fn new(x: i64, y: i64) -> Result<Self, SemigroupError> {
        if x < 0 || y < 0 {
            return Err(SemigroupError::NegativeCoordinate(IntegerVector::new(x, y)));
        }
        Ok(LatticeVector { x, y })
    }

    /// Panics on negative input; meant for literals in tests and examples.
    pub fn from_pair(x: i64, y: i64) -> Self {
        LatticeVector::new(x, y).expect("lattice vector must be nonnegative")
    }

    pub fn x(&self) -> i64 {
        self.x
    }

    pub fn y(&self) -> i64 {
        self.y
    }

    pub fn is_zero(&self) -> bool {
        self.x == 0 && self.y == 0
    }

    /// Coordinate sum, the size used to bound coefficient searches.
    pub fn weight(&self) -> i64 {
        self.x + self.y
    }

    pub fn to_integer(self) -> IntegerVector {
        IntegerVector::new(self.x, self.y)
    }

    /// `self - other` if it stays in N².
    pub fn checked_sub(self, other: LatticeVector) -> Option<LatticeVector> {
        if other.x <= self.x && other.y <= self.y {
            Some(LatticeVector { x: self.x - other.x, y: self.y - other.y })
        } else {
            None
        }
    }

    pub fn checked_add(self, other: LatticeVector) -> Option<LatticeVector> {
        Some(LatticeVector { x: self.x.checked_add(other.x)?, y: self.y.checked_add(other.y)? })
    }

    pub fn checked_scale(self, factor: u64) -> Option<LatticeVector> {
        let factor = i64::try_from(factor).ok()?;
        Some(LatticeVector { x: self.x.checked_mul(factor)?, y: self.y.checked_mul(factor)? })
    }

    /// Componentwise `self <= other`.
    pub fn dominated_by(&self, other: &LatticeVector) -> bool {
        self.x <= other.x && self.y <= other.y
    }
}

impl Add for LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("lattice vector overflow")
    }
}

impl Mul<LatticeVector> for u64 {
    type Output = LatticeVector;
    fn mul(self, rhs: LatticeVector) -> LatticeVector {
        rhs.checked_scale(self).expect("lattice vector overflow")
    }
}

impl From<LatticeVector> for IntegerVector {
    fn from(v: LatticeVector) -> Self {
        v.to_integer()
    }
}

impl TryFrom<IntegerVector> for LatticeVector {
    type Error = SemigroupError;
    fn try_from(v: IntegerVector) -> Result<Self, Self::Error> {
        LatticeVector::new(v.x, v.y)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Exact coordinates `(l1, l2)` of a vector in the basis of two independent rays.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPair {
    pub l1: BigRational,
    pub l2: BigRational,
}

impl RationalPair {
    /// `l1 + l2`.
    pub fn total(&self) -> BigRational {
        &self.l1 + &self.l2
    }

    pub fn is_integral(&self) -> bool {
        self.l1.is_integer() && self.l2.is_integer()
    }

    pub fn both_nonnegative(&self) -> bool {
        !self.l1.is_negative() && !self.l2.is_negative()
    }

    pub fn both_positive(&self) -> bool {
        self.l1.is_positive() && self.l2.is_positive()
    }
}

impl fmt::Display for RationalPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.l1, self.l2)
    }
}

/// `det [u v]` with u, v as columns.
pub fn determinant(u: IntegerVector, v: IntegerVector) -> i128 {
    u.x as i128 * v.y as i128 - u.y as i128 * v.x as i128
}

/// Solves `target = l1·u + l2·v` over Q by Cramer's rule.
///
/// Returns `None` when u and v are parallel.
pub fn solve_in_basis(u: IntegerVector, v: IntegerVector, target: IntegerVector) -> Option<RationalPair> {
    let det = determinant(u, v);
    if det == 0 {
        return None;
    }
    let det = BigInt::from(det);
    let n1 = BigInt::from(determinant(target, v));
    let n2 = BigInt::from(determinant(u, target));
    Some(RationalPair {
        l1: BigRational::new(n1, det.clone()),
        l2: BigRational::new(n2, det),
    })
}

/// Whether `target` lies in the group `Z·u + Z·v`.
pub fn in_lattice(u: IntegerVector, v: IntegerVector, target: IntegerVector) -> bool {
    solve_in_basis(u, v, target).is_some_and(|p| p.is_integral())
}
