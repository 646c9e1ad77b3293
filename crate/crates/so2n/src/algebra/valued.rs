use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::{AlgebraError, Rational};

/// A nonzero rational together with a fixed prime, supporting exact `p`-adic
/// valuation and absolute value. Torus coordinates in the discriminant and
/// character computations are sampled as `±p^k`, so every root value has an
/// exactly computable valuation, but the arithmetic here is valid for any
/// rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuedNumber {
    value: Rational,
    prime: u64,
}

impl ValuedNumber {
    pub fn new(value: Rational, prime: u64) -> Self {
        assert!(prime >= 2);
        ValuedNumber { value, prime }
    }

    /// `sign * p^k`.
    pub fn p_power(k: i64, sign: i8, prime: u64) -> Self {
        assert!(sign == 1 || sign == -1);
        let p = Rational::from_integer(BigInt::from(prime));
        let mag = if k >= 0 {
            num_traits::pow::Pow::pow(p, k as u64)
        } else {
            num_traits::pow::Pow::pow(p, (-k) as u64).recip()
        };
        let value = if sign > 0 { mag } else { -mag };
        ValuedNumber::new(value, prime)
    }

    pub fn one(prime: u64) -> Self {
        ValuedNumber::p_power(0, 1, prime)
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.value.is_one()
    }

    /// Exact `p`-adic valuation; errors on zero.
    pub fn valuation(&self) -> Result<i64, AlgebraError> {
        if self.value.is_zero() {
            return Err(AlgebraError::ZeroValue);
        }
        let p = BigInt::from(self.prime);
        Ok(int_valuation(self.value.numer(), &p) - int_valuation(self.value.denom(), &p))
    }

    /// `|x|_p = p^{-val(x)}` as an exact monomial.
    pub fn abs_p(&self) -> Result<Monomial, AlgebraError> {
        Ok(Monomial::p_pow(-self.valuation()?))
    }

    pub fn inv(&self) -> ValuedNumber {
        assert!(!self.value.is_zero());
        ValuedNumber::new(self.value.clone().recip(), self.prime)
    }

    /// Whether the value has the sampler's shape `±p^k`.
    pub fn is_signed_p_power(&self) -> bool {
        if self.value.is_zero() {
            return false;
        }
        let val = self.valuation().unwrap();
        *self
            == ValuedNumber::p_power(
                val,
                if self.value.is_negative() { -1 } else { 1 },
                self.prime,
            )
    }

    fn check_prime(&self, other: &ValuedNumber) -> u64 {
        assert_eq!(
            self.prime, other.prime,
            "mixed primes {} and {}",
            self.prime, other.prime
        );
        self.prime
    }
}

fn int_valuation(x: &BigInt, p: &BigInt) -> i64 {
    assert!(!x.is_zero());
    let mut v = 0i64;
    let mut cur = x.abs();
    loop {
        let (q, r) = num_integer::Integer::div_rem(&cur, p);
        if !r.is_zero() {
            return v;
        }
        cur = q;
        v += 1;
    }
}

/// `|x|_p` as an exact monomial `p^{-val(x)}`; errors on zero input.
pub fn padic_abs(x: &ValuedNumber) -> Result<Monomial, AlgebraError> {
    x.abs_p()
}

impl Add for &ValuedNumber {
    type Output = ValuedNumber;
    fn add(self, rhs: &ValuedNumber) -> ValuedNumber {
        let p = self.check_prime(rhs);
        ValuedNumber::new(&self.value + &rhs.value, p)
    }
}

impl Sub for &ValuedNumber {
    type Output = ValuedNumber;
    fn sub(self, rhs: &ValuedNumber) -> ValuedNumber {
        let p = self.check_prime(rhs);
        ValuedNumber::new(&self.value - &rhs.value, p)
    }
}

impl Mul for &ValuedNumber {
    type Output = ValuedNumber;
    fn mul(self, rhs: &ValuedNumber) -> ValuedNumber {
        let p = self.check_prime(rhs);
        ValuedNumber::new(&self.value * &rhs.value, p)
    }
}

impl Div for &ValuedNumber {
    type Output = ValuedNumber;
    fn div(self, rhs: &ValuedNumber) -> ValuedNumber {
        let p = self.check_prime(rhs);
        ValuedNumber::new(&self.value / &rhs.value, p)
    }
}

impl Neg for &ValuedNumber {
    type Output = ValuedNumber;
    fn neg(self) -> ValuedNumber {
        ValuedNumber::new(-self.value.clone(), self.prime)
    }
}

impl fmt::Display for ValuedNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
