//! Exact arithmetic foundation.
//!
//! Everything downstream is built on four kinds of exact values:
//!
//! * arbitrary-precision rationals ([`Rational`]),
//! * monomials `±p^{a/2} t^b` with half-integral `p`-exponent ([`Monomial`]),
//! * multivariate Laurent polynomials with rational coefficients
//!   ([`LaurentPoly`]),
//! * affine forms in named complex parameters ([`AffineForm`]),
//! * rationals carrying a fixed prime for exact `p`-adic absolute values
//!   ([`ValuedNumber`]).
//!
//! No rounding occurs anywhere in this module. The formal unit `t` is never
//! assigned a numeric value here; magnitude comparisons that substitute
//! `|t| = p^τ` live with the bound computations that need them.

mod affine;
mod laurent;
mod monomial;
mod valued;

pub use affine::AffineForm;
pub use laurent::{elementary_symmetric, power_sum, restrict_theta, LaurentPoly};
pub use monomial::{Monomial, PtExpr};
pub use valued::{padic_abs, ValuedNumber};

use thiserror::Error;

/// Arbitrary-precision rational. Always stored reduced with positive
/// denominator (the `num-rational` canonical form).
pub type Rational = num_rational::BigRational;

/// `n/d` as a [`Rational`]; panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// `n` as a [`Rational`].
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("arity mismatch: expected {expected} values, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("zero has no p-adic valuation")]
    ZeroValue,
    #[error("polynomial is not symmetric in its {0} variables")]
    NotSymmetric(usize),
    #[error("inexact Laurent division")]
    InexactDivision,
    #[error("mixed primes {0} and {1}")]
    PrimeMismatch(u64, u64),
    #[error("variable {0} is unbound")]
    UnboundVariable(String),
    #[error("expression is not a pure power of p with integral exponents")]
    NotNumeric,
}
