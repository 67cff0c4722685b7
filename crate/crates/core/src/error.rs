use thiserror::Error;

use crate::lattice::{IntegerVector, LatticeVector};

/// Why a candidate extension element `b` was refused.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtensionFault {
    /// `b` already lies in the base semigroup.
    AlreadyMember,
    /// No `μ ≤ bound` with `μb` in the base semigroup.
    NoMultiple { bound: u64 },
    /// Every representation of `μb` has `λ_1 = λ_{k+1} = 0`.
    NoBoundaryRepresentation { mu: u64 },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("vector {0} has a negative coordinate")]
    NegativeCoordinate(IntegerVector),
    #[error("k must be at least 2, got {0}")]
    KTooSmall(u32),
    #[error("a and d must be nonzero")]
    ZeroVector,
    #[error("a = {a} and d = {d} are linearly dependent")]
    DependentDirections { a: LatticeVector, d: LatticeVector },
    #[error("generator {generator} (index {index}) is a combination of the others: {certificate:?}")]
    NotMinimal { index: usize, generator: LatticeVector, certificate: Vec<u64> },
    #[error("extension {b} rejected: {fault:?}")]
    BadExtension { b: LatticeVector, fault: ExtensionFault },
    #[error("vector {0} lies outside the cone spanned by the extremal rays")]
    OutsideCone(IntegerVector),
    #[error("Apery base must consist of nonzero semigroup elements, got {0}")]
    InvalidAperyBase(LatticeVector),
    #[error("enumeration cap {cap} too small: {witness} is an Apery element beyond it")]
    CapTooSmall { cap: u64, witness: LatticeVector },
    #[error("arithmetic overflow in lattice computation")]
    Overflow,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClosedFormError {
    #[error("index l = {l} is outside [2, {k}]")]
    BadIndex { l: u32, k: u32 },
    #[error("no closed form is available for k = {0} (supported: 2, 3, 4)")]
    UnsupportedK(u32),
    #[error("the family has no extension element")]
    MissingExtension,
    #[error("the family has an extension element; this closed form covers base families only")]
    UnexpectedExtension,
    #[error("ideal is not homogeneous for the standard grading: {0}")]
    NotHomogeneous(String),
    #[error("{count} standard monomials have S-degree {degree}, expected exactly one")]
    StaircaseMismatch { degree: LatticeVector, count: usize },
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}
