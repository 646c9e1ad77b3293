use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{AlgebraError, Rational};

/// A signed monomial `±p^{a/2} t^b`.
///
/// The `p`-exponent is stored as an integer numerator over the fixed
/// denominator 2, so half-integral powers such as `p^{3/2}` are exact.
/// `t` is a formal unit: it is multiplied and inverted formally and never
/// evaluated to a number inside this module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    /// Twice the exponent of `p`.
    p_half: i64,
    /// Exponent of the formal unit `t`.
    t_exp: i64,
    /// `+1` or `-1`.
    sign: i8,
}

impl Monomial {
    pub fn new(p_half: i64, t_exp: i64, sign: i8) -> Self {
        assert!(sign == 1 || sign == -1, "sign must be ±1");
        Monomial {
            p_half,
            t_exp,
            sign,
        }
    }

    pub fn one() -> Self {
        Monomial::new(0, 0, 1)
    }

    pub fn minus_one() -> Self {
        Monomial::new(0, 0, -1)
    }

    /// `p^k` for integral `k`.
    pub fn p_pow(k: i64) -> Self {
        Monomial::new(2 * k, 0, 1)
    }

    /// `p^{h/2}`.
    pub fn p_pow_half(h: i64) -> Self {
        Monomial::new(h, 0, 1)
    }

    /// `t^b`.
    pub fn t_pow(b: i64) -> Self {
        Monomial::new(0, b, 1)
    }

    /// Twice the `p`-exponent.
    pub fn p_half(&self) -> i64 {
        self.p_half
    }

    pub fn t_exp(&self) -> i64 {
        self.t_exp
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn is_one(&self) -> bool {
        *self == Monomial::one()
    }

    pub fn inv(&self) -> Self {
        Monomial::new(-self.p_half, -self.t_exp, self.sign)
    }

    pub fn pow(&self, k: i64) -> Self {
        let sign = if self.sign == -1 && k.rem_euclid(2) == 1 {
            -1
        } else {
            1
        };
        Monomial::new(self.p_half * k, self.t_exp * k, sign)
    }

    /// The exponent of `p` in the magnitude of this monomial once `|t|` is
    /// declared to be `p^tau_exp`. Exact rational arithmetic; used only by
    /// bound computations.
    pub fn log_p_magnitude(&self, tau_exp: &Rational) -> Rational {
        super::rat(self.p_half, 2) + super::rat_int(self.t_exp) * tau_exp
    }

    /// Numeric value for a concrete prime, with `|t| = p^tau_exp`.
    pub fn magnitude(&self, p: f64, tau_exp: f64) -> f64 {
        p.powf(self.p_half as f64 / 2.0 + self.t_exp as f64 * tau_exp)
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial::new(
            self.p_half + rhs.p_half,
            self.t_exp + rhs.t_exp,
            self.sign * rhs.sign,
        )
    }
}

impl Neg for Monomial {
    type Output = Monomial;
    fn neg(self) -> Monomial {
        Monomial::new(self.p_half, self.t_exp, -self.sign)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            write!(f, "-")?;
        }
        if self.p_half == 0 && self.t_exp == 0 {
            return write!(f, "1");
        }
        let mut wrote = false;
        if self.p_half != 0 {
            if self.p_half == 2 {
                write!(f, "p")?;
            } else if self.p_half % 2 == 0 {
                write!(f, "p^{}", self.p_half / 2)?;
            } else {
                write!(f, "p^{}/2", self.p_half)?;
            }
            wrote = true;
        }
        if self.t_exp != 0 {
            if wrote {
                write!(f, "*")?;
            }
            if self.t_exp == 1 {
                write!(f, "t")?;
            } else {
                write!(f, "t^{}", self.t_exp)?;
            }
        }
        Ok(())
    }
}

/// A formal Laurent expression in `p^{1/2}` and `t`: a finite sum of
/// monomials with rational coefficients. This is the target of evaluating
/// a [`super::LaurentPoly`] at monomial-valued points, and the value space
/// of the Kato coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PtExpr {
    /// `(2·p-exponent, t-exponent) -> coefficient`; no zero coefficients.
    terms: BTreeMap<(i64, i64), Rational>,
}

impl PtExpr {
    pub fn zero() -> Self {
        PtExpr::default()
    }

    pub fn one() -> Self {
        PtExpr::from(Monomial::one())
    }

    pub fn from_rational(c: Rational) -> Self {
        let mut e = PtExpr::zero();
        e.add_term(0, 0, c);
        e
    }

    pub fn add_term(&mut self, p_half: i64, t_exp: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry((p_half, t_exp))
            .or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(p_half, t_exp));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &Rational)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// If the expression involves neither `t` nor half-integral powers of
    /// `p`, its exact rational value at a numeric `p`.
    pub fn eval_at_prime(&self, p: u64) -> Result<Rational, AlgebraError> {
        let mut acc = Rational::zero();
        let p_rat = super::rat_int(p as i64);
        for (&(ph, te), c) in &self.terms {
            if te != 0 || ph % 2 != 0 {
                return Err(AlgebraError::NotNumeric);
            }
            let k = ph / 2;
            let pw = if k >= 0 {
                num_traits::pow::Pow::pow(p_rat.clone(), k as u64)
            } else {
                num_traits::pow::Pow::pow(p_rat.clone(), (-k) as u64).recip()
            };
            acc += c * pw;
        }
        Ok(acc)
    }
}

impl From<Monomial> for PtExpr {
    fn from(m: Monomial) -> Self {
        let mut e = PtExpr::zero();
        let c = if m.sign() > 0 {
            Rational::one()
        } else {
            -Rational::one()
        };
        e.add_term(m.p_half(), m.t_exp(), c);
        e
    }
}

impl Add for &PtExpr {
    type Output = PtExpr;
    fn add(self, rhs: &PtExpr) -> PtExpr {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k.0, k.1, c.clone());
        }
        out
    }
}

impl Sub for &PtExpr {
    type Output = PtExpr;
    fn sub(self, rhs: &PtExpr) -> PtExpr {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k.0, k.1, -c.clone());
        }
        out
    }
}

impl Mul for &PtExpr {
    type Output = PtExpr;
    fn mul(self, rhs: &PtExpr) -> PtExpr {
        let mut out = PtExpr::zero();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &rhs.terms {
                out.add_term(a.0 + b.0, a.1 + b.1, ca * cb);
            }
        }
        out
    }
}

impl Neg for &PtExpr {
    type Output = PtExpr;
    fn neg(self) -> PtExpr {
        let mut out = PtExpr::zero();
        for (&k, c) in &self.terms {
            out.add_term(k.0, k.1, -c.clone());
        }
        out
    }
}

impl fmt::Display for PtExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&(ph, te), c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let mono = Monomial::new(ph, te, 1);
            if mono.is_one() {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}", mono)?;
            } else {
                write!(f, "{}*{}", mag, mono)?;
            }
        }
        Ok(())
    }
}
