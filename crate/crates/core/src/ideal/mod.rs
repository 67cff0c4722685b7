//! Polynomial rings over Q, Gröbner bases, and toric ideals.

pub mod groebner;
pub mod matrix;
pub mod monomial;
pub mod order;
pub mod polynomial;
pub mod staircase;
pub mod toric;

pub use groebner::{buchberger, is_groebner_basis, GroebnerBasis};
pub use matrix::PolyMatrix;
pub use monomial::{GradingMap, Monomial};
pub use order::{MonomialOrder, OrderKind};
pub use polynomial::Polynomial;
pub use staircase::{standard_monomials, StaircaseError};
pub use toric::{family_grading, family_order, toric_kernel};
