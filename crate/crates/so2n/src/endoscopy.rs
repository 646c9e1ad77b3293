//! The split-torus norm correspondence between `SO_2n` and the twisted
//! `GL_2n`, ordinary and twisted discriminants, the transfer factor, and
//! exact verification of the character and unramified trace identities.
//!
//! Conventions. An `SO` torus point is `(x_1..x_n, x_n^{-1}..x_1^{-1})`,
//! its norm image in the θ-torus presentation is `(x_1..x_n, 1..1)`, and
//! the twisted discriminants are computed on the eigenspace pairs of
//! `Ad(t)∘θ`, with the overall `2^n` from the anti-fixed toral directions
//! stripped. Two independent code paths are kept deliberately: the Levi
//! discriminant is computed once from the `GL` side (twisted pairs) and
//! once from the `SO` side (root values), and their exact agreement is one
//! of the verified identities.
//!
//! Character sums use `p`-exponents that are genuinely rational (the
//! inducing exponent contributes `s · val`, so the `p^{1/2}` lattice does
//! not suffice for, say, `s = 1/3`); [`FormalPSum`] stores them exactly.
//!
//! Only split tori are modeled. Elliptic tori over field extensions are
//! not implemented, and strong θ-regularity is tracked separately from
//! regularity rather than conflated.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebra::{
    rat_int, AlgebraError, LaurentPoly, Monomial, PtExpr, Rational, ValuedNumber,
};
use crate::hecke::HeckeError;
use crate::params::{ArthurParameter, ParamsError};
use crate::roots::{LeviDescriptor, RootSystemD, WeylElement};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EndoError {
    #[error("torus element is not regular enough for this operation")]
    NotRegular,
    #[error("the residue characteristic 2 is excluded from the identity verifier")]
    PrimeTwoExcluded,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Params(#[from] ParamsError),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
}

/// A split-torus point of `SO_2n`, stored through `x_1, ..., x_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct TorusElementSO {
    coords: Vec<ValuedNumber>,
}

impl TorusElementSO {
    pub fn new(coords: Vec<ValuedNumber>) -> Self {
        assert!(!coords.is_empty());
        TorusElementSO { coords }
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn prime(&self) -> u64 {
        self.coords[0].prime()
    }

    pub fn coords(&self) -> &[ValuedNumber] {
        &self.coords
    }

    /// Regular for `D_n`: every root value `x_i/x_j`, `x_i x_j` differs
    /// from 1.
    pub fn is_regular(&self) -> bool {
        let n = self.n();
        for i in 0..n {
            for j in (i + 1)..n {
                if self.coords[i] == self.coords[j] {
                    return false;
                }
                if (&self.coords[i] * &self.coords[j]).is_one() {
                    return false;
                }
            }
        }
        true
    }

    /// Image under the outer automorphism: the last coordinate inverted.
    pub fn outer_image(&self) -> TorusElementSO {
        let mut coords = self.coords.clone();
        let last = coords.len() - 1;
        coords[last] = coords[last].inv();
        TorusElementSO { coords }
    }

    /// Coordinate scatter action of a signed permutation.
    pub fn weyl_image(&self, w: &WeylElement) -> TorusElementSO {
        assert_eq!(w.rank(), self.n());
        let mut coords = vec![ValuedNumber::one(self.prime()); self.n()];
        for i in 0..self.n() {
            coords[w.perm()[i]] = if w.flips()[i] {
                self.coords[i].inv()
            } else {
                self.coords[i].clone()
            };
        }
        TorusElementSO { coords }
    }
}

impl fmt::Display for TorusElementSO {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ", inverses reversed)")
    }
}

/// A point of the θ-torus of `GL_2n` in the presentation `(x_1..x_n, 1..1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ThetaTorusElementGL {
    coords: Vec<ValuedNumber>,
}

impl ThetaTorusElementGL {
    pub fn new(coords: Vec<ValuedNumber>) -> Self {
        assert!(!coords.is_empty());
        ThetaTorusElementGL { coords }
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn prime(&self) -> u64 {
        self.coords[0].prime()
    }

    pub fn coords(&self) -> &[ValuedNumber] {
        &self.coords
    }

    /// Strongly θ-regular: the associated `SO` element is regular and no
    /// coordinate equals `±1` (so the norm is `GL_2n`-regular).
    pub fn is_strongly_regular(&self) -> bool {
        let so = inverse_norm(self);
        if !so.is_regular() {
            return false;
        }
        self.coords.iter().all(|x| !x.is_one() && !(-x).is_one())
    }
}

impl fmt::Display for ThetaTorusElementGL {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ", 1, ..., 1)")
    }
}

/// An associated pair under the norm correspondence.
#[derive(Debug, Clone, PartialEq)]
pub struct NormPair {
    pub gl: ThetaTorusElementGL,
    pub so: TorusElementSO,
}

impl NormPair {
    pub fn from_so(so: TorusElementSO) -> Self {
        NormPair { gl: norm(&so), so }
    }

    pub fn is_regular(&self) -> bool {
        self.gl.is_strongly_regular()
    }
}

/// The norm on split tori: `(x, reversed inverses) -> (x, 1, ..., 1)`.
pub fn norm(t: &TorusElementSO) -> ThetaTorusElementGL {
    ThetaTorusElementGL {
        coords: t.coords.clone(),
    }
}

/// Inverse of the norm: `(x, 1, ..., 1) -> (x, reversed inverses)`.
pub fn inverse_norm(x: &ThetaTorusElementGL) -> TorusElementSO {
    TorusElementSO {
        coords: x.coords.clone(),
    }
}

fn nonzero_product(factors: impl Iterator<Item = ValuedNumber>) -> Result<ValuedNumber, EndoError> {
    let mut acc: Option<ValuedNumber> = None;
    for f in factors {
        if f.is_zero() {
            return Err(EndoError::NotRegular);
        }
        acc = Some(match acc {
            None => f,
            Some(a) => &a * &f,
        });
    }
    acc.ok_or(EndoError::NotRegular)
}

/// `D_{SO_2n}(t) = ∏_α (t^α - 1)` over all roots of `D_n` (both signs).
pub fn disc_so(t: &TorusElementSO) -> Result<ValuedNumber, EndoError> {
    let n = t.n();
    let p = t.prime();
    let one = ValuedNumber::one(p);
    let system = RootSystemD::new(n);
    let mut factors = Vec::new();
    for alpha in system.positive_roots() {
        for root in [alpha, alpha.negated()] {
            let v = root_value(t, &root.to_vector(n));
            factors.push(&v - &one);
        }
    }
    nonzero_product(factors.into_iter())
}

fn root_value(t: &TorusElementSO, exps: &[i64]) -> ValuedNumber {
    let p = t.prime();
    let mut acc = ValuedNumber::one(p);
    for (x, &e) in t.coords().iter().zip(exps.iter()) {
        let mut pow = ValuedNumber::one(p);
        let base = if e >= 0 { x.clone() } else { x.inv() };
        for _ in 0..e.abs() {
            pow = &pow * &base;
        }
        acc = &acc * &pow;
    }
    acc
}

/// Relative discriminant `∏_{α>0, α∉M} (t^α - 1)(t^{-α} - 1)` over the
/// roots outside the Levi. For the full group this is the empty product.
pub fn disc_m(t: &TorusElementSO, m: &LeviDescriptor) -> Result<ValuedNumber, EndoError> {
    let n = t.n();
    assert_eq!(m.rank(), n);
    let p = t.prime();
    let one = ValuedNumber::one(p);
    let levi_pos: std::collections::BTreeSet<crate::roots::Root> =
        m.positive_roots().into_iter().collect();
    let mut acc = ValuedNumber::one(p);
    for alpha in RootSystemD::new(n).positive_roots() {
        if levi_pos.contains(&alpha) {
            continue;
        }
        for root in [alpha, alpha.negated()] {
            let v = &root_value(t, &root.to_vector(n)) - &one;
            if v.is_zero() {
                return Err(EndoError::NotRegular);
            }
            acc = &acc * &v;
        }
    }
    Ok(acc)
}

/// Discriminant of the Siegel Levi at the associated `SO` point:
/// `∏_{a≠b} (x_a/x_b - 1)` over the roots of `GL_n`.
pub fn disc_levi_gl(t: &TorusElementSO) -> Result<ValuedNumber, EndoError> {
    let n = t.n();
    let p = t.prime();
    let one = ValuedNumber::one(p);
    let mut factors = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            factors.push(&(&t.coords()[a] / &t.coords()[b]) - &one);
        }
    }
    nonzero_product(factors.into_iter())
}

/// The relative twisted discriminant of `(GL_2n, θ)` against its Levi at
/// `t = (x, 1, ..., 1)`:
/// `∏_{i<j} (x_i x_j - 1)(x_i^{-1} x_j^{-1} - 1) · ∏_i (x_i + 1)(x_i^{-1} + 1)`.
pub fn disc_twisted(x: &ThetaTorusElementGL) -> Result<ValuedNumber, EndoError> {
    let n = x.n();
    let p = x.prime();
    let one = ValuedNumber::one(p);
    let mut factors = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let prod = &x.coords()[i] * &x.coords()[j];
            factors.push(&prod - &one);
            factors.push(&prod.inv() - &one);
        }
    }
    for xi in x.coords() {
        factors.push(&xi.clone() + &one);
        factors.push(&xi.inv() + &one);
    }
    nonzero_product(factors.into_iter())
}

/// The twisted Levi discriminant `∏_{a≠b} (1 - x_a/x_b)`, computed from
/// the eigenspace pairs of `Ad(t)∘θ` inside the block Levi.
pub fn disc_twisted_levi(x: &ThetaTorusElementGL) -> Result<ValuedNumber, EndoError> {
    let n = x.n();
    let p = x.prime();
    let one = ValuedNumber::one(p);
    let mut factors = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            factors.push(&one - &(&x.coords()[a] / &x.coords()[b]));
        }
    }
    nonzero_product(factors.into_iter())
}

/// The full (normalized) twisted discriminant of `GL_2n` at `t`: the Levi
/// part times the relative part, with the `2^n` toral factor stripped.
pub fn disc_twisted_full(x: &ThetaTorusElementGL) -> Result<ValuedNumber, EndoError> {
    Ok(&disc_twisted_levi(x)? * &disc_twisted(x)?)
}

/// The transfer factor `Δ_IV = |D¹_{GL_2n,θ}(t)|^{1/2} / |D_SO(t')|^{1/2}`
/// as an exact (half-integral) power of `p`; the remaining factors of the
/// full transfer factor are 1 in this situation.
pub fn delta_iv(pair: &NormPair) -> Result<Monomial, EndoError> {
    if !pair.is_regular() {
        return Err(EndoError::NotRegular);
    }
    let d_gl = disc_twisted_full(&pair.gl)?;
    let d_so = disc_so(&pair.so)?;
    let val_gl = d_gl.valuation().map_err(EndoError::Algebra)?;
    let val_so = d_so.valuation().map_err(EndoError::Algebra)?;
    // |D|^{1/2} = p^{-val/2}
    Ok(Monomial::p_pow_half(val_so - val_gl))
}

/// A finite sum `Σ c_e p^e` with rational exponents and integer
/// coefficients; the value space of the character sums.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FormalPSum {
    terms: BTreeMap<Rational, i64>,
}

impl FormalPSum {
    pub fn zero() -> Self {
        FormalPSum::default()
    }

    pub fn add_term(&mut self, exponent: Rational, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let c = self.terms.entry(exponent).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
    }

    pub fn plus(&self, other: &FormalPSum) -> FormalPSum {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), *c);
        }
        out
    }

    /// Multiplies by `p^shift`.
    pub fn shifted(&self, shift: &Rational) -> FormalPSum {
        let mut out = FormalPSum::zero();
        for (e, c) in &self.terms {
            out.add_term(e + shift, *c);
        }
        out
    }

    pub fn term_count(&self) -> usize {
        self.terms.values().map(|c| c.unsigned_abs() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for FormalPSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *c != 1 {
                write!(f, "{}*", c)?;
            }
            write!(f, "p^({})", e)?;
        }
        Ok(())
    }
}

fn valuations(t: &[ValuedNumber]) -> Result<Vec<i64>, EndoError> {
    t.iter()
        .map(|x| x.valuation().map_err(EndoError::Algebra))
        .collect()
}

/// Levi discriminant valuation at the sign-transported point
/// `(x_1^{ε_1}, ..., x_n^{ε_n})`.
fn levi_disc_valuation(coords: &[ValuedNumber], signs: u64) -> Result<i64, EndoError> {
    let n = coords.len();
    let p = coords[0].prime();
    let one = ValuedNumber::one(p);
    let mut total = 0i64;
    let pick = |i: usize| -> ValuedNumber {
        if (signs >> i) & 1 == 1 {
            coords[i].inv()
        } else {
            coords[i].clone()
        }
    };
    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            let factor = &(&pick(a) / &pick(b)) - &one;
            if factor.is_zero() {
                return Err(EndoError::NotRegular);
            }
            total += factor.valuation().map_err(EndoError::Algebra)?;
        }
    }
    Ok(total)
}

/// The induced character of `| det |^s` off the Siegel Levi, at a regular
/// split element, as a sum over the realized embeddings: the sign patterns
/// with product `+1` (`-1` after composing with the outer automorphism).
/// Each embedding contributes
/// `|∏ x_i^{ε_i}|^s · |D_M(γ_ε)|^{1/2} / |D_SO(γ)|^{1/2}`.
pub fn char_so(
    s: &Rational,
    gamma: &TorusElementSO,
    twist_by_outer: bool,
) -> Result<FormalPSum, EndoError> {
    if !gamma.is_regular() {
        return Err(EndoError::NotRegular);
    }
    let n = gamma.n();
    let vals = valuations(gamma.coords())?;
    let so_val = disc_so(gamma)?.valuation().map_err(EndoError::Algebra)?;
    let want_parity = if twist_by_outer { 1 } else { 0 };
    let mut out = FormalPSum::zero();
    for signs in 0u64..(1 << n) {
        if (signs.count_ones() as usize) % 2 != want_parity {
            continue;
        }
        let theta_exp: i64 = (0..n)
            .map(|i| {
                if (signs >> i) & 1 == 1 {
                    -vals[i]
                } else {
                    vals[i]
                }
            })
            .sum();
        let levi_val = levi_disc_valuation(gamma.coords(), signs)?;
        // |.|^s part: p^{-s * theta_exp}; |D| = p^{-val}
        let exponent = -s * rat_int(theta_exp) - crate::algebra::rat(levi_val, 2)
            + crate::algebra::rat(so_val, 2);
        out.add_term(exponent, 1);
    }
    Ok(out)
}

/// The twisted character of the corresponding `GL_2n` representation at a
/// strongly θ-regular element: the sum over the extended embedding set
/// (all sign patterns) of
/// `|∏ x_i^{ε_i}|^s · |D¹_{L,θ}(t_ε)|^{1/2} / |D¹_{GL,θ}(t)|^{1/2}`.
pub fn char_gl_twisted(s: &Rational, t: &ThetaTorusElementGL) -> Result<FormalPSum, EndoError> {
    if !t.is_strongly_regular() {
        return Err(EndoError::NotRegular);
    }
    let n = t.n();
    let vals = valuations(t.coords())?;
    let full_val = disc_twisted_full(t)?
        .valuation()
        .map_err(EndoError::Algebra)?;
    let mut out = FormalPSum::zero();
    for signs in 0u64..(1 << n) {
        let theta_exp: i64 = (0..n)
            .map(|i| {
                if (signs >> i) & 1 == 1 {
                    -vals[i]
                } else {
                    vals[i]
                }
            })
            .sum();
        let levi_val = levi_disc_valuation(t.coords(), signs)?;
        let exponent = -s * rat_int(theta_exp) - crate::algebra::rat(levi_val, 2)
            + crate::algebra::rat(full_val, 2);
        out.add_term(exponent, 1);
    }
    Ok(out)
}

/// Both sides of the character identity, evaluated exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct CharacterIdentityReport {
    pub holds: bool,
    pub twisted_side: FormalPSum,
    pub endoscopic_side: FormalPSum,
}

/// Checks `Θ_{GL_2n,θ}(t) = Δ_IV(t,t')^{-1} (Θ_π(t') + Θ_{π'}(t'))`
/// exactly, with both sides computed through independent discriminant
/// paths. The residue characteristic 2 is excluded.
pub fn verify_character_identity(
    s: &Rational,
    pair: &NormPair,
) -> Result<CharacterIdentityReport, EndoError> {
    if pair.so.prime() == 2 {
        return Err(EndoError::PrimeTwoExcluded);
    }
    if !pair.is_regular() {
        return Err(EndoError::NotRegular);
    }
    let lhs = char_gl_twisted(s, &pair.gl)?;
    let plain = char_so(s, &pair.so, false)?;
    let twisted = char_so(s, &pair.so, true)?;
    let delta = delta_iv(pair)?;
    // dividing by Δ_IV = p^{d/2} shifts every exponent by -d/2
    let shift = crate::algebra::rat(-delta.p_half(), 2);
    let rhs = plain.plus(&twisted).shifted(&shift);
    Ok(CharacterIdentityReport {
        holds: lhs == rhs,
        twisted_side: lhs,
        endoscopic_side: rhs,
    })
}

/// The three traces of the unramified trace identity.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceIdentityReport {
    pub holds: bool,
    pub gl_value: PtExpr,
    pub so_value: PtExpr,
    pub so_outer_value: PtExpr,
}

/// Checks `φ̂(t_Π) = f̂(t_π) = f̂(t_{π'})` exactly, where `φ̂` is a symmetric
/// Laurent polynomial in `2n` variables, `f̂` its restriction, `t_Π` the
/// `2n`-eigenvalue multiset of the parameter and `t_π`, `t_{π'}` the two
/// `SO` Satake parameters.
pub fn verify_unramified_trace(
    phi_hat: &LaurentPoly,
    psi: &ArthurParameter,
    p: u64,
) -> Result<TraceIdentityReport, EndoError> {
    let t = crate::params::hecke_matrix_of(psi, p)?;
    let n = t.n();
    let full = t.full_multiset();
    let gl_value = phi_hat.eval(&full).map_err(EndoError::Algebra)?;
    let f_hat = crate::algebra::restrict_theta(phi_hat, n).map_err(EndoError::Algebra)?;
    let so_value = f_hat.eval(t.entries()).map_err(EndoError::Algebra)?;
    let so_outer_value = f_hat
        .eval(t.outer_image().entries())
        .map_err(EndoError::Algebra)?;
    Ok(TraceIdentityReport {
        holds: gl_value == so_value && so_value == so_outer_value,
        gl_value,
        so_value,
        so_outer_value,
    })
}

/// Samples a regular split torus element with coordinate valuations from a
/// superincreasing sequence (`±3^{i+1}`) and random value signs, so every
/// root value has nonzero valuation and all absolute values are exact.
/// Deterministic per `(seed, stream)`.
pub fn sample_regular_so(n: usize, p: u64, seed: u64, stream: u64) -> TorusElementSO {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let coords = (0..n)
        .map(|i| {
            let magnitude = 3i64.pow(i as u32 + 1);
            let v = if rng.gen::<bool>() {
                magnitude
            } else {
                -magnitude
            };
            let sign = if rng.gen::<bool>() { 1 } else { -1 };
            ValuedNumber::p_power(v, sign, p)
        })
        .collect();
    TorusElementSO::new(coords)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{elementary_symmetric, power_sum, rat};
    use crate::params::section2_local_parameter;
    use crate::roots::enumerate_weyl;

    fn so_point(vals: &[i64], p: u64) -> TorusElementSO {
        TorusElementSO::new(
            vals.iter()
                .map(|&v| ValuedNumber::p_power(v, 1, p))
                .collect(),
        )
    }

    #[test]
    fn norm_round_trip() {
        let t = so_point(&[1, 3], 5);
        let x = norm(&t);
        assert_eq!(x.coords(), t.coords());
        assert_eq!(inverse_norm(&x), t);
        for stream in 0..20 {
            let t = sample_regular_so(3, 7, 11, stream);
            assert_eq!(inverse_norm(&norm(&t)), t);
        }
    }

    #[test]
    fn all_ones_is_flagged_non_regular() {
        let t = TorusElementSO::new(vec![ValuedNumber::one(3); 2]);
        let x = norm(&t);
        assert_eq!(x.coords(), t.coords());
        assert!(!t.is_regular());
        assert!(!x.is_strongly_regular());
    }

    #[test]
    fn disc_so_direct_product() {
        // n = 2, t = (p, p^3): product over ±(X1-X2), ±(X1+X2)
        let p = 3u64;
        let t = so_point(&[1, 3], p);
        let got = disc_so(&t).unwrap();
        let x1 = ValuedNumber::p_power(1, 1, p);
        let x2 = ValuedNumber::p_power(3, 1, p);
        let one = ValuedNumber::one(p);
        let want = [
            &(&x1 / &x2) - &one,
            &(&x2 / &x1) - &one,
            &(&x1 * &x2) - &one,
            &(&x1 * &x2).inv() - &one,
        ]
        .iter()
        .fold(ValuedNumber::one(p), |acc, f| &acc * f);
        assert_eq!(got, want);

        // non-regular input errors out
        let bad = so_point(&[2, 2], p);
        assert!(matches!(disc_so(&bad), Err(EndoError::NotRegular)));
    }

    #[test]
    fn disc_so_is_weyl_invariant() {
        for stream in 0..10 {
            let t = sample_regular_so(3, 5, 42, stream);
            let base = disc_so(&t).unwrap();
            for w in enumerate_weyl(3).unwrap() {
                assert_eq!(disc_so(&t.weyl_image(&w)).unwrap(), base);
            }
        }
    }

    #[test]
    fn disc_m_examples() {
        let p = 5u64;
        let t = so_point(&[1, 3], p);
        // Siegel Levi in SO_4: only ±(X1+X2) lie outside
        let m = LeviDescriptor::gln(2);
        let got = disc_m(&t, &m).unwrap();
        let prod = ValuedNumber::p_power(4, 1, p);
        let one = ValuedNumber::one(p);
        let want = &(&prod - &one) * &(&prod.inv() - &one);
        assert_eq!(got, want);

        // full group: empty product
        assert_eq!(
            disc_m(&t, &LeviDescriptor::full(2)).unwrap(),
            ValuedNumber::one(p)
        );

        // generic samples stay nonzero
        for stream in 0..25 {
            let t = sample_regular_so(4, 3, 9, stream);
            assert!(!disc_m(&t, &LeviDescriptor::gln(4)).unwrap().is_zero());
        }
    }

    #[test]
    fn disc_twisted_direct_value() {
        // n = 2, x = (p, p^3)
        let p = 3u64;
        let x = norm(&so_point(&[1, 3], p));
        let one = ValuedNumber::one(p);
        let xy = ValuedNumber::p_power(4, 1, p);
        let want = [
            &xy - &one,
            &xy.inv() - &one,
            &ValuedNumber::p_power(1, 1, p) + &one,
            &ValuedNumber::p_power(-1, 1, p) + &one,
            &ValuedNumber::p_power(3, 1, p) + &one,
            &ValuedNumber::p_power(-3, 1, p) + &one,
        ]
        .iter()
        .fold(ValuedNumber::one(p), |acc, f| &acc * f);
        assert_eq!(disc_twisted(&x).unwrap(), want);

        // a coordinate equal to -1 makes a factor vanish
        let bad = ThetaTorusElementGL::new(vec![
            ValuedNumber::p_power(0, -1, p),
            ValuedNumber::p_power(3, 1, p),
        ]);
        assert!(matches!(disc_twisted(&bad), Err(EndoError::NotRegular)));
    }

    #[test]
    fn twisted_levi_equals_so_levi_disc() {
        // the two independently computed Levi discriminants agree exactly
        for n in [2usize, 4] {
            for stream in 0..50 {
                let t = sample_regular_so(n, 3, 1000 + n as u64, stream);
                let pair = NormPair::from_so(t);
                let lhs = disc_twisted_levi(&pair.gl).unwrap();
                let rhs = disc_levi_gl(&pair.so).unwrap();
                assert_eq!(lhs, rhs, "n = {n}, stream = {stream}");
            }
        }
    }

    #[test]
    fn twisted_full_is_extended_weyl_invariant() {
        use crate::roots::enumerate_extended;
        for stream in 0..5 {
            let t = sample_regular_so(3, 5, 77, stream);
            let base = disc_twisted_full(&norm(&t)).unwrap();
            for w in enumerate_extended(3).unwrap() {
                let moved = norm(&t.weyl_image(&w));
                assert_eq!(disc_twisted_full(&moved).unwrap(), base);
            }
        }
    }

    #[test]
    fn delta_iv_is_half_integral_p_power() {
        for stream in 0..30 {
            let t = sample_regular_so(2, 3, 5, stream);
            let pair = NormPair::from_so(t);
            let d = delta_iv(&pair).unwrap();
            assert_eq!(d.t_exp(), 0);
            assert_eq!(d.sign(), 1);
        }
        // degenerate input
        let degenerate = NormPair::from_so(TorusElementSO::new(vec![
            ValuedNumber::one(3),
            ValuedNumber::one(3),
        ]));
        assert!(matches!(delta_iv(&degenerate), Err(EndoError::NotRegular)));
    }

    /// The two discriminant quotients entering the transfer factor agree:
    /// |D¹_GL|/|D_SO| = |relative twisted| / |relative SO-Levi| on
    /// associated pairs.
    #[test]
    fn transfer_factor_cross_check() {
        for n in [2usize, 3, 4] {
            for stream in 0..20 {
                let t = sample_regular_so(n, 5, 31, stream);
                let pair = NormPair::from_so(t);
                let lhs = delta_iv(&pair).unwrap();
                let rel_gl = disc_twisted(&pair.gl).unwrap().valuation().unwrap();
                let rel_so = disc_m(&pair.so, &LeviDescriptor::gln(n))
                    .unwrap()
                    .valuation()
                    .unwrap();
                assert_eq!(lhs, Monomial::p_pow_half(rel_so - rel_gl));
            }
        }
    }

    #[test]
    fn character_term_counts() {
        let t = sample_regular_so(3, 5, 123, 0);
        let pair = NormPair::from_so(t);
        let s = rat(1, 4);
        let so_terms = char_so(&s, &pair.so, false).unwrap();
        let so_twisted = char_so(&s, &pair.so, true).unwrap();
        let gl_terms = char_gl_twisted(&s, &pair.gl).unwrap();
        assert_eq!(so_terms.term_count(), 4); // 2^{n-1}
        assert_eq!(so_twisted.term_count(), 4);
        assert_eq!(gl_terms.term_count(), 8); // twice the SO count
    }

    #[test]
    fn twist_is_transport_by_outer_automorphism() {
        let s = rat(1, 3);
        for stream in 0..20 {
            let gamma = sample_regular_so(4, 3, 2024, stream);
            let lhs = char_so(&s, &gamma, true).unwrap();
            let rhs = char_so(&s, &gamma.outer_image(), false).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn character_identity_smoke() {
        let s = rat(1, 4);
        for stream in 0..25 {
            let pair = NormPair::from_so(sample_regular_so(2, 3, 0, stream));
            let report = verify_character_identity(&s, &pair).unwrap();
            assert!(report.holds, "stream {stream}: {report:?}");
        }
    }

    #[test]
    fn character_identity_excludes_two() {
        let pair = NormPair::from_so(sample_regular_so(2, 2, 0, 0));
        assert!(matches!(
            verify_character_identity(&rat(1, 4), &pair),
            Err(EndoError::PrimeTwoExcluded)
        ));
    }

    #[test]
    fn trace_identity_for_symmetric_functions() {
        let n = 4usize;
        let psi = section2_local_parameter(n);
        for phi in [
            LaurentPoly::one(2 * n),
            power_sum(2 * n, 1),
            power_sum(2 * n, 2),
            elementary_symmetric(2 * n, 2),
            elementary_symmetric(2 * n, 3),
        ] {
            let report = verify_unramified_trace(&phi, &psi, 3).unwrap();
            assert!(report.holds);
        }
    }

    #[test]
    fn trace_identity_rejects_asymmetric_input() {
        let psi = section2_local_parameter(2);
        let phi = LaurentPoly::var(4, 0);
        assert!(matches!(
            verify_unramified_trace(&phi, &psi, 3),
            Err(EndoError::Algebra(AlgebraError::NotSymmetric(4)))
        ));
    }
}
