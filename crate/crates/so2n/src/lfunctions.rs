//! Formal calculus of partial L-function quotients.
//!
//! Analytic facts about the partial L-functions entering the constant-term
//! formula are not computed; they are encoded in an explicit axiom table:
//!
//! * `L^S(π × π^∨, z)` for cuspidal self-dual `π` and the partial zeta
//!   function `ζ^S(z)`: simple pole at `z = 1`, holomorphic and nonvanishing
//!   for real `z ≥ 1` otherwise;
//! * `L^S(π ⊗ π, z)`: holomorphic and nonvanishing for `z ≥ 1`;
//! * the local factor `(1 - q^{-z})^{-1}`: simple pole at `z = 0`,
//!   nonvanishing everywhere it is finite;
//! * the archimedean quotient `Γ(z)/Γ(z + σ)`: holomorphic and nonvanishing
//!   for `z > 0`.
//!
//! Outside the guaranteed region the table answers [`PoleOrder::Undetermined`]
//! rather than guessing. Pole orders of products add formally; no
//! cancellation between distinct factors is ever assumed.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{rat, rat_int, AffineForm, Rational};
use crate::roots::{
    block_action, restricted_positive_roots, LeviDescriptor, LeviShape, RestrictedRoot, RootsError,
    WeylElement,
};

/// The kinds of L-factors appearing in the constant-term formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum LFactorKind {
    /// `L^S(π × π^∨, z)`, `π` cuspidal self-dual.
    RankinSelfDual,
    /// `L^S(π ⊗ π, z)`.
    RankinSame,
    /// `ζ^S(z)`.
    PartialZeta,
    /// `(1 - q^{-z})^{-1}`.
    LocalZeta,
    /// `Γ(z)/Γ(z + σ)` with `σ > 0`.
    GammaQuotient,
}

impl fmt::Display for LFactorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LFactorKind::RankinSelfDual => write!(f, "L(pi x pi~, ·)"),
            LFactorKind::RankinSame => write!(f, "L(pi (x) pi, ·)"),
            LFactorKind::PartialZeta => write!(f, "zeta(·)"),
            LFactorKind::LocalZeta => write!(f, "(1-q^-·)^-1"),
            LFactorKind::GammaQuotient => write!(f, "Gamma(·)/Gamma(·+s)"),
        }
    }
}

/// Order of an L-factor at a real point, when the axiom table determines it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PoleOrder {
    /// Order as an analytic function (`-1` = simple pole, `0` = finite);
    /// `nonvanishing` certifies the factor is nonzero where finite.
    Known { order: i64, nonvanishing: bool },
    /// The point is outside the region the axiom table covers.
    Undetermined,
}

impl LFactorKind {
    /// Order at the real argument value `z` per the axiom table.
    pub fn order_at(&self, z: &Rational) -> PoleOrder {
        let one = rat_int(1);
        let zero = rat_int(0);
        match self {
            LFactorKind::RankinSelfDual | LFactorKind::PartialZeta => {
                if *z == one {
                    PoleOrder::Known {
                        order: -1,
                        nonvanishing: true,
                    }
                } else if *z > one {
                    PoleOrder::Known {
                        order: 0,
                        nonvanishing: true,
                    }
                } else {
                    PoleOrder::Undetermined
                }
            }
            LFactorKind::RankinSame => {
                if *z >= one {
                    PoleOrder::Known {
                        order: 0,
                        nonvanishing: true,
                    }
                } else {
                    PoleOrder::Undetermined
                }
            }
            LFactorKind::LocalZeta => {
                if *z == zero {
                    PoleOrder::Known {
                        order: -1,
                        nonvanishing: true,
                    }
                } else {
                    PoleOrder::Known {
                        order: 0,
                        nonvanishing: true,
                    }
                }
            }
            LFactorKind::GammaQuotient => {
                if *z > zero {
                    PoleOrder::Known {
                        order: 0,
                        nonvanishing: true,
                    }
                } else {
                    PoleOrder::Undetermined
                }
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Position {
    Numerator,
    Denominator,
}

/// One L-factor with an affine argument in the `s`-variables.
#[derive(Debug, Clone, PartialEq)]
pub struct LTerm {
    pub kind: LFactorKind,
    pub argument: AffineForm,
    pub position: Position,
}

impl LTerm {
    pub fn new(kind: LFactorKind, argument: AffineForm, position: Position) -> Self {
        LTerm {
            kind,
            argument,
            position,
        }
    }

    /// Order of this term at a point of the `s`-space, with the sign
    /// convention that a denominator pole counts as a zero of the quotient.
    pub fn signed_order_at(&self, point: &BTreeMap<String, Rational>) -> PoleOrder {
        let z = match self.argument.eval(point) {
            Ok(z) => z,
            Err(_) => return PoleOrder::Undetermined,
        };
        match self.kind.order_at(&z) {
            PoleOrder::Known {
                order,
                nonvanishing,
            } => {
                let order = match self.position {
                    Position::Numerator => order,
                    Position::Denominator => -order,
                };
                PoleOrder::Known {
                    order,
                    nonvanishing,
                }
            }
            PoleOrder::Undetermined => PoleOrder::Undetermined,
        }
    }
}

impl fmt::Display for LTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pos = match self.position {
            Position::Numerator => "num",
            Position::Denominator => "den",
        };
        write!(f, "{} at {} [{}]", self.kind, self.argument, pos)
    }
}

/// A formal product of L-factor quotients.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct LQuotientProduct {
    pub terms: Vec<LTerm>,
}

impl LQuotientProduct {
    pub fn empty() -> Self {
        LQuotientProduct::default()
    }

    /// Number of numerator/denominator quotient pairs.
    pub fn quotient_count(&self) -> usize {
        self.terms.len() / 2
    }

    /// Total order at a point: numerator orders plus negated denominator
    /// orders, all of which must be determined by the axiom table.
    pub fn order_at(&self, point: &BTreeMap<String, Rational>) -> PoleOrder {
        let mut total = 0i64;
        for t in &self.terms {
            match t.signed_order_at(point) {
                PoleOrder::Known { order, .. } => total += order,
                PoleOrder::Undetermined => return PoleOrder::Undetermined,
            }
        }
        PoleOrder::Known {
            order: total,
            nonvanishing: total == 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LfError {
    #[error(transparent)]
    Roots(#[from] RootsError),
    #[error("Weyl element does not normalize the GL2-block Levi")]
    NotBlockwise,
    #[error("pole order is undetermined at the requested point")]
    Undetermined,
}

fn s_var(i: usize) -> AffineForm {
    AffineForm::var(&format!("s{}", i + 1))
}

/// The residue point `s0 = ((n-1)/2, (n-3)/2, ..., 1/2)` as a binding for
/// the `m = n/2` variables `s1..sm`.
pub fn s0_point(n: usize) -> BTreeMap<String, Rational> {
    assert!(n >= 2 && n % 2 == 0);
    let m = n / 2;
    (0..m)
        .map(|i| (format!("s{}", i + 1), rat(n as i64 - 1 - 2 * i as i64, 2)))
        .collect()
}

/// The unramified intertwining-operator product attached to `w ∈ W(M)` for
/// `M = ∏^m GL_2` with all inducing factors equal: one quotient
/// `L(π×π^∨, s_i-s_j)/L(π×π^∨, s_i-s_j+1)` for each negated block
/// difference, `L(π⊗π, s_i+s_j)/L(π⊗π, s_i+s_j+1)` for each negated block
/// sum, and `ζ(2s_i)/ζ(1+2s_i)` for each negated doubled character.
pub fn build_intertwining_product(
    w: &WeylElement,
    m: &LeviDescriptor,
) -> Result<LQuotientProduct, LfError> {
    let blocks = match m.shape() {
        LeviShape::ProductGl2 { m: count } => count,
        _ => return Err(LfError::Roots(RootsError::UnsupportedLevi)),
    };
    let wb = block_action(w, m).ok_or(LfError::NotBlockwise)?;
    let mut product = LQuotientProduct::empty();
    for r in restricted_positive_roots(blocks) {
        if !crate::roots::negates_restricted(&wb, &r) {
            continue;
        }
        let (kind, arg) = match r {
            RestrictedRoot::Diff(i, j) => (
                LFactorKind::RankinSelfDual,
                &s_var(i) + &s_var(j).scaled(rat_int(-1)),
            ),
            RestrictedRoot::Sum(i, j) => (LFactorKind::RankinSame, &s_var(i) + &s_var(j)),
            RestrictedRoot::Twice(i) => (LFactorKind::PartialZeta, s_var(i).scaled(rat_int(2))),
        };
        product
            .terms
            .push(LTerm::new(kind, arg.clone(), Position::Numerator));
        product.terms.push(LTerm::new(
            kind,
            arg.plus_const(rat_int(1)),
            Position::Denominator,
        ));
    }
    Ok(product)
}

/// Result of normalizing by `∏ (s_i - s_i^0)` at `s0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedOrder {
    /// Order of the normalized product at `s0`.
    pub order: i64,
    /// Whether the axiom table certifies the normalized value finite and
    /// nonzero (total order zero with every factor determined).
    pub nonvanishing: bool,
}

/// Order at `s0` of `∏_{i=1}^m (s_i - s_i^0)` times the given product.
/// The normalizer contributes a simple zero in each variable.
pub fn normalized_order_at_s0(
    prod: &LQuotientProduct,
    n: usize,
) -> Result<NormalizedOrder, LfError> {
    let m = n / 2;
    let point = s0_point(n);
    match prod.order_at(&point) {
        PoleOrder::Known { order, .. } => {
            let total = order + m as i64;
            Ok(NormalizedOrder {
                order: total,
                nonvanishing: total == 0,
            })
        }
        PoleOrder::Undetermined => Err(LfError::Undetermined),
    }
}
