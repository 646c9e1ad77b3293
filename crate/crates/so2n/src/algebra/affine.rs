use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use num_traits::{One, Signed, Zero};

use super::{AlgebraError, Rational};

/// An affine form `c + Σ a_v · v` in named rational-coefficient variables.
/// Houses the arguments of L-factor quotients (`s_i - s_j`, `2s_i`, ...).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AffineForm {
    coeffs: BTreeMap<String, Rational>,
    constant: Rational,
}

impl AffineForm {
    pub fn constant(c: Rational) -> Self {
        AffineForm {
            coeffs: BTreeMap::new(),
            constant: c,
        }
    }

    pub fn var(name: &str) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(name.to_string(), Rational::one());
        AffineForm {
            coeffs,
            constant: Rational::zero(),
        }
    }

    pub fn scaled(mut self, k: Rational) -> Self {
        for c in self.coeffs.values_mut() {
            *c *= &k;
        }
        self.coeffs.retain(|_, c| !c.is_zero());
        self.constant *= k;
        self
    }

    pub fn plus_const(mut self, k: Rational) -> Self {
        self.constant += k;
        self
    }

    pub fn coefficients(&self) -> &BTreeMap<String, Rational> {
        &self.coeffs
    }

    pub fn constant_part(&self) -> &Rational {
        &self.constant
    }

    /// Exact evaluation at a rational point; every variable appearing in the
    /// form must be bound.
    pub fn eval(&self, point: &BTreeMap<String, Rational>) -> Result<Rational, AlgebraError> {
        let mut acc = self.constant.clone();
        for (name, c) in &self.coeffs {
            let v = point
                .get(name)
                .ok_or_else(|| AlgebraError::UnboundVariable(name.clone()))?;
            acc += c * v;
        }
        Ok(acc)
    }
}

impl Add for &AffineForm {
    type Output = AffineForm;
    fn add(self, rhs: &AffineForm) -> AffineForm {
        let mut out = self.clone();
        for (name, c) in &rhs.coeffs {
            let entry = out
                .coeffs
                .entry(name.clone())
                .or_insert_with(Rational::zero);
            *entry += c;
        }
        out.coeffs.retain(|_, c| !c.is_zero());
        out.constant += &rhs.constant;
        out
    }
}

impl fmt::Display for AffineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (name, c) in &self.coeffs {
            if wrote {
                if c.is_negative() {
                    write!(f, " - ")?;
                } else {
                    write!(f, " + ")?;
                }
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let mag = c.abs();
            if mag.is_one() {
                write!(f, "{}", name)?;
            } else {
                write!(f, "{}*{}", mag, name)?;
            }
            wrote = true;
        }
        if !wrote {
            return write!(f, "{}", self.constant);
        }
        if !self.constant.is_zero() {
            if self.constant.is_negative() {
                write!(f, " - {}", self.constant.abs())?;
            } else {
                write!(f, " + {}", self.constant)?;
            }
        }
        Ok(())
    }
}
