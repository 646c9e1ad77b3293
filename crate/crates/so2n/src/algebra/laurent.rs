use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, PtExpr};
use super::{AlgebraError, Rational};

/// A multivariate Laurent polynomial with [`Rational`] coefficients.
///
/// Variables are positional (`x1, ..., xn` in displays). Terms map integer
/// exponent vectors to nonzero coefficients; all arithmetic is exact.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, Rational>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = LaurentPoly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        LaurentPoly::constant(nvars, Rational::one())
    }

    /// The single variable `x_{i}` (0-based index).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut e = vec![0; nvars];
        e[i] = 1;
        LaurentPoly::term(nvars, e, Rational::one())
    }

    pub fn term(nvars: usize, exps: Vec<i64>, c: Rational) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = LaurentPoly::zero(nvars);
        p.add_term(exps, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exps: Vec<i64>, c: Rational) {
        assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    /// Exact substitution of monomial values for all variables.
    pub fn eval(&self, point: &[Monomial]) -> Result<PtExpr, AlgebraError> {
        if point.len() != self.nvars {
            return Err(AlgebraError::ArityMismatch {
                expected: self.nvars,
                got: point.len(),
            });
        }
        let mut out = PtExpr::zero();
        for (exps, c) in &self.terms {
            let mut m = Monomial::one();
            for (x, &e) in point.iter().zip(exps.iter()) {
                m = m * x.pow(e);
            }
            let coeff = if m.sign() > 0 { c.clone() } else { -c.clone() };
            out.add_term(m.p_half(), m.t_exp(), coeff);
        }
        Ok(out)
    }

    /// Applies an exponent-vector transformation to every term. The callback
    /// must be a bijection of exponent vectors (e.g. a signed permutation of
    /// the variables); used for Weyl-group actions.
    pub fn map_exponents<F: Fn(&[i64]) -> Vec<i64>>(&self, f: F) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.nvars);
        for (exps, c) in &self.terms {
            out.add_term(f(exps), c.clone());
        }
        out
    }

    /// Whether the polynomial is invariant under all permutations of its
    /// variables (checked on the adjacent-transposition generators).
    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.nvars.saturating_sub(1) {
            let swapped = self.map_exponents(|e| {
                let mut v = e.to_vec();
                v.swap(i, i + 1);
                v
            });
            if swapped != *self {
                return false;
            }
        }
        true
    }

    /// Exact division; errors unless `self = q * den` for some Laurent
    /// polynomial `q`. Long division on the lexicographically leading term;
    /// a quotient term escaping the Newton-box bound of `self` and `den`
    /// witnesses inexactness.
    pub fn div_exact(&self, den: &LaurentPoly) -> Result<LaurentPoly, AlgebraError> {
        assert_eq!(self.nvars, den.nvars);
        if den.is_zero() {
            return Err(AlgebraError::InexactDivision);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero(self.nvars));
        }
        let bound: i64 = {
            let box_of = |p: &LaurentPoly| -> i64 {
                p.terms
                    .keys()
                    .flat_map(|e| e.iter().map(|x| x.abs()))
                    .max()
                    .unwrap_or(0)
            };
            box_of(self) + box_of(den)
        };
        let (lt_den, lc_den) = den
            .terms
            .iter()
            .next_back()
            .map(|(k, v)| (k.clone(), v.clone()))
            .unwrap();
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero(self.nvars);
        while !rem.is_zero() {
            let (lt_rem, lc_rem) = rem
                .terms
                .iter()
                .next_back()
                .map(|(k, v)| (k.clone(), v.clone()))
                .unwrap();
            let qe: Vec<i64> = lt_rem
                .iter()
                .zip(lt_den.iter())
                .map(|(a, b)| a - b)
                .collect();
            if qe.iter().any(|x| x.abs() > bound) {
                return Err(AlgebraError::InexactDivision);
            }
            let qc = lc_rem / &lc_den;
            quot.add_term(qe.clone(), qc.clone());
            for (e, c) in &den.terms {
                let shifted: Vec<i64> = e.iter().zip(qe.iter()).map(|(a, b)| a + b).collect();
                rem.add_term(shifted, -(&qc * c));
            }
        }
        Ok(quot)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = LaurentPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<i64> = ea.iter().zip(eb.iter()).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (exps, c)) in self.terms.iter().rev().enumerate() {
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
            let trivial = exps.iter().all(|&e| e == 0);
            if trivial {
                write!(f, "{}", mag)?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", mag)?;
                }
                let mut first = true;
                for (j, &e) in exps.iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    if !first {
                        write!(f, "*")?;
                    }
                    first = false;
                    if e == 1 {
                        write!(f, "x{}", j + 1)?;
                    } else {
                        write!(f, "x{}^{}", j + 1, e)?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Restriction along the order-reversing inversion of the second half of the
/// variables: in a symmetric polynomial in `2n` variables, substitutes
/// `x_{n+i} := x_{n+1-i}^{-1}` for `i = 1..n`. This is the pullback of a
/// symmetric function on `GL_{2n}` Satake parameters to `SO_{2n}` ones.
pub fn restrict_theta(f: &LaurentPoly, n: usize) -> Result<LaurentPoly, AlgebraError> {
    if f.nvars() != 2 * n {
        return Err(AlgebraError::ArityMismatch {
            expected: 2 * n,
            got: f.nvars(),
        });
    }
    if !f.is_symmetric() {
        return Err(AlgebraError::NotSymmetric(2 * n));
    }
    let mut out = LaurentPoly::zero(n);
    for (exps, c) in f.terms() {
        let mut e = vec![0i64; n];
        for j in 0..n {
            e[j] = exps[j] - exps[2 * n - 1 - j];
        }
        out.add_term(e, c.clone());
    }
    Ok(out)
}

/// Power sum `x_1^k + ... + x_m^k` in `m` variables.
pub fn power_sum(m: usize, k: i64) -> LaurentPoly {
    let mut p = LaurentPoly::zero(m);
    for i in 0..m {
        let mut e = vec![0; m];
        e[i] = k;
        p.add_term(e, Rational::one());
    }
    p
}

/// Elementary symmetric polynomial `e_k` in `m` variables.
pub fn elementary_symmetric(m: usize, k: usize) -> LaurentPoly {
    assert!(k <= m && m < 64);
    let mut p = LaurentPoly::zero(m);
    for mask in 0u64..(1 << m) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let e: Vec<i64> = (0..m).map(|i| ((mask >> i) & 1) as i64).collect();
        p.add_term(e, Rational::one());
    }
    p
}
