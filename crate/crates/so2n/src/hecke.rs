//! The spherical Hecke algebra side: Weyl characters of `SO_2n(C)`, Satake
//! transforms of minimal weights, Hecke matrices, eigenvalue evaluation,
//! Weyl-conjugacy tests and the eigenvalue bounds.
//!
//! Weyl characters are computed by the character formula as an exact
//! quotient of alternating sums over `W(D_n)`; the Laurent division must be
//! exact or the operation aborts. Bounds stay exact rationals-of-exponents
//! until the final float comparison.

use std::fmt;

use num_traits::{One, ToPrimitive};
use thiserror::Error;

use crate::algebra::{rat, rat_int, AlgebraError, LaurentPoly, Monomial, PtExpr, Rational};
use crate::roots::{enumerate_extended, enumerate_weyl, RootSystemD, RootsError, WeylGroupKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeckeError {
    #[error("weight {0:?} is not dominant for D_n")]
    NonDominant(Vec<i64>),
    #[error("weight is not minimal (minuscule) for D_n")]
    NonMinimalWeight,
    #[error("rank {0} must be even")]
    OddRank(usize),
    #[error("Hecke matrices have different rank or prime")]
    MatrixMismatch,
    #[error("polynomial is not invariant under W(D_n)")]
    NotInvariant,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Roots(#[from] RootsError),
}

/// A dominant weight of `SO_2n(C)`: weakly decreasing integers with
/// `λ_{n-1} ≥ |λ_n|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominantWeight(Vec<i64>);

impl DominantWeight {
    pub fn new(v: Vec<i64>) -> Result<Self, HeckeError> {
        let n = v.len();
        assert!(n >= 2);
        for i in 0..n - 1 {
            if v[i] < v[i + 1] {
                return Err(HeckeError::NonDominant(v));
            }
        }
        if v[n - 2] < v[n - 1].abs() {
            return Err(HeckeError::NonDominant(v));
        }
        Ok(DominantWeight(v))
    }

    pub fn zero(n: usize) -> Self {
        DominantWeight(vec![0; n])
    }

    /// The highest weight `(1, 0, ..., 0)` of the standard representation.
    pub fn standard(n: usize) -> Self {
        let mut v = vec![0; n];
        v[0] = 1;
        DominantWeight(v)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// `⟨λ, ρ⟩` with `ρ = (n-1, ..., 1, 0)`.
    pub fn pairing_with_rho(&self) -> Rational {
        let rho = RootSystemD::new(self.rank()).rho();
        self.0
            .iter()
            .zip(rho.iter())
            .map(|(&a, r)| rat_int(a) * r)
            .fold(rat_int(0), |acc, x| acc + x)
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", x)?;
        }
        write!(f, ")")
    }
}

/// Alternating sum `Σ_{w ∈ W(D_n)} det(w) x^{w μ}`.
fn alternant(mu: &[i64]) -> Result<LaurentPoly, RootsError> {
    let n = mu.len();
    let mut out = LaurentPoly::zero(n);
    for w in enumerate_weyl(n)? {
        let e = w.apply_exponents(mu);
        let c = if w.det() > 0 {
            Rational::one()
        } else {
            -Rational::one()
        };
        out.add_term(e, c);
    }
    Ok(out)
}

/// Character of the irreducible `SO_2n(C)`-representation of highest weight
/// `λ`, as the exact quotient of the `λ+ρ` and `ρ` alternants.
///
/// Both alternants carry `|W(D_n)|` terms, so memory grows with the group:
/// ranks up to 6 (23,040 terms) are cheap, rank 8 (5.16M terms) wants
/// several GB and is better served by the streaming evaluation checks.
pub fn weyl_character(lambda: &DominantWeight) -> Result<LaurentPoly, HeckeError> {
    let n = lambda.rank();
    if lambda.is_zero() {
        return Ok(LaurentPoly::one(n));
    }
    let rho: Vec<i64> = (0..n).map(|i| (n - 1 - i) as i64).collect();
    let shifted: Vec<i64> = lambda
        .entries()
        .iter()
        .zip(rho.iter())
        .map(|(a, b)| a + b)
        .collect();
    let num = alternant(&shifted)?;
    let den = alternant(&rho)?;
    Ok(num.div_exact(&den)?)
}

/// A Weyl-invariant Laurent polynomial scaled by a global power of `p`:
/// the Satake transform of a double-coset characteristic function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphericalFunction {
    /// Twice the exponent of the global `p`-power.
    p_exp_half: i64,
    transform: LaurentPoly,
}

impl SphericalFunction {
    /// Checks invariance on the simple reflections of `W(D_n)`.
    pub fn new(p_exp_half: i64, transform: LaurentPoly) -> Result<Self, HeckeError> {
        let n = transform.nvars();
        for i in 0..n - 1 {
            let moved = transform.map_exponents(|e| {
                let mut v = e.to_vec();
                v.swap(i, i + 1);
                v
            });
            if moved != transform {
                return Err(HeckeError::NotInvariant);
            }
        }
        let moved = transform.map_exponents(|e| {
            let mut v = e.to_vec();
            v.swap(n - 2, n - 1);
            v[n - 2] = -v[n - 2];
            v[n - 1] = -v[n - 1];
            v
        });
        if moved != transform {
            return Err(HeckeError::NotInvariant);
        }
        Ok(SphericalFunction {
            p_exp_half,
            transform,
        })
    }

    pub fn constant_one(n: usize) -> Self {
        SphericalFunction {
            p_exp_half: 0,
            transform: LaurentPoly::one(n),
        }
    }

    pub fn p_exp_half(&self) -> i64 {
        self.p_exp_half
    }

    pub fn transform(&self) -> &LaurentPoly {
        &self.transform
    }

    pub fn nvars(&self) -> usize {
        self.transform.nvars()
    }
}

impl fmt::Display for SphericalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p_exp_half != 0 {
            write!(f, "{}*(", Monomial::p_pow_half(self.p_exp_half))?;
        }
        write!(f, "{}", self.transform)?;
        if self.p_exp_half != 0 {
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Satake transform of the double coset attached to a minimal weight:
/// `p^{⟨λ,ρ⟩} Tr(V_λ)`. Only the minuscule integral weights (zero and the
/// standard weight) are admitted; the closed form holds for exactly those.
pub fn satake_minimal(lambda: &DominantWeight) -> Result<SphericalFunction, HeckeError> {
    let n = lambda.rank();
    if lambda.is_zero() {
        return Ok(SphericalFunction::constant_one(n));
    }
    if *lambda != DominantWeight::standard(n) {
        return Err(HeckeError::NonMinimalWeight);
    }
    let pairing = lambda.pairing_with_rho();
    let doubled = &pairing * rat_int(2);
    assert!(doubled.is_integer());
    let character = weyl_character(lambda)?;
    SphericalFunction::new(doubled.to_integer().to_i64().unwrap(), character)
}

/// A Satake parameter of `SO_2n`: the first half of an inversion-closed
/// `2n`-multiset of exact eigenvalue monomials; the second half is the
/// reversed inverse list by convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeMatrix {
    entries: Vec<Monomial>,
    prime: u64,
}

impl HeckeMatrix {
    pub fn new(entries: Vec<Monomial>, prime: u64) -> Self {
        assert!(!entries.is_empty());
        HeckeMatrix { entries, prime }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn entries(&self) -> &[Monomial] {
        &self.entries
    }

    /// The full `2n`-multiset `(t_1, ..., t_n, t_n^{-1}, ..., t_1^{-1})`.
    pub fn full_multiset(&self) -> Vec<Monomial> {
        let mut out = self.entries.clone();
        out.extend(self.entries.iter().rev().map(|m| m.inv()));
        out
    }

    /// Image under the outer automorphism: the last coordinate inverted.
    pub fn outer_image(&self) -> HeckeMatrix {
        let mut entries = self.entries.clone();
        let last = entries.len() - 1;
        entries[last] = entries[last].inv();
        HeckeMatrix {
            entries,
            prime: self.prime,
        }
    }

    /// Largest `log_p`-magnitude over the full multiset once `|t| = p^tau`.
    pub fn max_log_p_magnitude(&self, tau_exp: &Rational) -> Rational {
        self.full_multiset()
            .iter()
            .map(|m| m.log_p_magnitude(tau_exp))
            .max()
            .expect("nonempty")
    }
}

impl fmt::Display for HeckeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "diag(")?;
        for (i, e) in self.full_multiset().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", e)?;
        }
        write!(f, ")")
    }
}

/// The Hecke matrix of the trivial representation: first half
/// `(p^{n-1}, p^{n-2}, ..., p, 1)`.
pub fn trivial_hecke_matrix(n: usize, p: u64) -> Result<HeckeMatrix, HeckeError> {
    if n % 2 != 0 {
        return Err(HeckeError::OddRank(n));
    }
    let entries = (0..n)
        .map(|i| Monomial::p_pow((n - 1 - i) as i64))
        .collect();
    Ok(HeckeMatrix::new(entries, p))
}

/// Exact eigenvalue of the Hecke operator with Satake transform `f` on the
/// unramified representation with Satake parameter `t`.
pub fn eigenvalue(f: &SphericalFunction, t: &HeckeMatrix) -> Result<PtExpr, HeckeError> {
    let val = f.transform().eval(t.entries())?;
    Ok(&val * &PtExpr::from(Monomial::p_pow_half(f.p_exp_half())))
}

/// `1/(n^2+1)`, the eigenvalue saving from the best known bounds towards
/// Ramanujan for `GL_n`.
pub fn epsilon_n(n: usize) -> Rational {
    rat(1, (n * n + 1) as i64)
}

/// `7/64`, the bound on `log_p |t|` for cuspidal `GL_2` Satake parameters.
pub fn kim_sarnak_exponent() -> Rational {
    rat(7, 64)
}

/// The rank-4 eigenvalue bound
/// `p^3 (p^{3/2} + p^{1/2} + p^{-1/2} + p^{-3/2}) (τ + τ^{-1})` with
/// `τ = p^{tau_exp}`, kept as exact exponents until the final float.
pub fn bound_so8(p: u64, tau_exp: &Rational) -> f64 {
    let pf = p as f64;
    let mut total = 0.0f64;
    for half in [3i64, 1, -1, -3] {
        for tau_sign in [1i64, -1] {
            let exponent = rat_int(3) + rat(half, 2) + rat_int(tau_sign) * tau_exp;
            total += pf.powf(exponent.to_f64().expect("finite exponent"));
        }
    }
    total
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundMode {
    /// Best unconditional input towards Ramanujan for the inducing datum.
    Lrs,
    /// Under the Ramanujan conjecture for the inducing datum.
    Ramanujan,
    /// The per-eigenvalue bound for everywhere-unramified cuspidal forms.
    Refined,
}

/// Exponent of `p` in the eigenvalue/eigencoordinate bounds, as an exact
/// rational, with an explicit saving `eps`.
pub fn bound_exponent_so2n_with(n: usize, mode: BoundMode, eps: &Rational) -> Rational {
    assert!(n % 2 == 0 && n >= 2);
    let n_i = n as i64;
    match mode {
        BoundMode::Lrs => rat_int(n_i - 1) + rat(n_i - 1, 2) - eps,
        BoundMode::Ramanujan => rat_int(n_i - 1) + rat(n_i - 2, 2),
        BoundMode::Refined => rat(n_i, 2) - rat_int(1) + eps,
    }
}

pub fn bound_exponent_so2n(n: usize, mode: BoundMode) -> Rational {
    bound_exponent_so2n_with(n, mode, &epsilon_n(n))
}

fn canonical_pairs(m: &HeckeMatrix) -> (Vec<Monomial>, usize) {
    let mut pairs = Vec::with_capacity(m.n());
    let mut flips = 0usize;
    for &e in m.entries() {
        let inv = e.inv();
        if inv > e {
            pairs.push(inv);
            flips += 1;
        } else {
            pairs.push(e);
        }
    }
    pairs.sort();
    (pairs, flips)
}

/// Whether two Hecke matrices are conjugate under the chosen signed
/// permutation group. Decided by canonicalization: sort the entry pairs
/// `{e, e^{-1}}` and track the flip parity. Flipping one entry toggles its
/// canonical status unless the entry is self-inverse (`±1`), so for the
/// restricted group the parities must match unless a self-inverse entry
/// can absorb the difference.
pub fn conjugate_under_weyl(
    a: &HeckeMatrix,
    b: &HeckeMatrix,
    group: WeylGroupKind,
) -> Result<bool, HeckeError> {
    if a.n() != b.n() || a.prime() != b.prime() {
        return Err(HeckeError::MatrixMismatch);
    }
    let (pa, fa) = canonical_pairs(a);
    let (pb, fb) = canonical_pairs(b);
    if pa != pb {
        return Ok(false);
    }
    match group {
        WeylGroupKind::Extended => Ok(true),
        WeylGroupKind::D => {
            if (fa + fb) % 2 == 0 {
                Ok(true)
            } else {
                Ok(pa.iter().any(|e| *e == e.inv()))
            }
        }
    }
}

/// Exhaustive reference search for conjugacy, used to validate the
/// canonicalization for small rank.
pub fn conjugate_by_exhaustive_search(
    a: &HeckeMatrix,
    b: &HeckeMatrix,
    group: WeylGroupKind,
) -> Result<bool, HeckeError> {
    if a.n() != b.n() || a.prime() != b.prime() {
        return Err(HeckeError::MatrixMismatch);
    }
    let n = a.n();
    let found = match group {
        WeylGroupKind::D => {
            enumerate_weyl(n)?.any(|w| w.apply_monomials(a.entries()) == b.entries())
        }
        WeylGroupKind::Extended => {
            enumerate_extended(n)?.any(|w| w.apply_monomials(a.entries()) == b.entries())
        }
    };
    Ok(found)
}

/// The residual Satake parameter at rank `n`: entries `p^{(n+1-2i)/2} t`
/// for `i = 1..n`.
pub fn residual_hecke_matrix(n: usize, p: u64) -> HeckeMatrix {
    assert!(n % 2 == 0 && n >= 2);
    let entries = (0..n)
        .map(|i| Monomial::new(n as i64 - 1 - 2 * i as i64, 1, 1))
        .collect();
    HeckeMatrix::new(entries, p)
}
