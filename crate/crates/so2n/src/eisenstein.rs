//! The residue-point construction: square-integrability of the residual
//! exponent and Kato's criterion for unramified principal series.
//!
//! Unramified characters of the split torus are stored through their values
//! `χ_i(p^{-1})` as exact monomials in `p^{1/2}` and the formal unit `t`.
//! The formal symbol `p` stands for the cardinality of the residue field.
//! Since `t` is treated as transcendental, an expression in `p^{1/2}, t`
//! equals a number only when the exponents force it, so the Kato conditions
//! are decided exactly, uniformly in `p`.

use std::collections::HashSet;
use std::fmt;

use crate::algebra::{rat, rat_int, Monomial, PtExpr, Rational};
use crate::lfunctions::{
    build_intertwining_product, normalized_order_at_s0, LfError, NormalizedOrder,
};
use crate::roots::{
    enumerate_weyl, w0_all_blocks_minus, LeviDescriptor, Root, RootKind, RootSystemD, RootsError,
    WeylElement,
};

/// The residue point `s0 = ((n-1)/2, (n-3)/2, ..., 1/2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResiduePoint {
    n: usize,
    coordinates: Vec<Rational>,
}

impl ResiduePoint {
    pub fn new(n: usize) -> Result<Self, RootsError> {
        if n % 2 != 0 || n < 2 {
            return Err(RootsError::NonStandardLevi);
        }
        let m = n / 2;
        let coordinates = (0..m)
            .map(|i| rat(n as i64 - 1 - 2 * i as i64, 2))
            .collect();
        Ok(ResiduePoint { n, coordinates })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coordinates(&self) -> &[Rational] {
        &self.coordinates
    }
}

impl fmt::Display for ResiduePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coordinates.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

/// An unramified character of the split torus, stored through the values
/// `χ_i(p^{-1})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnramifiedCharacter {
    entries: Vec<Monomial>,
}

impl UnramifiedCharacter {
    pub fn new(entries: Vec<Monomial>) -> Self {
        UnramifiedCharacter { entries }
    }

    /// The inducing character of the residual construction: entry pairs
    /// `(p^{s} t, p^{s} t^{-1})` for `s = (n-1)/2, (n-3)/2, ..., 1/2`.
    /// For `n > 4` this extends the rank-4 pattern to the evident one.
    pub fn residual_family(n: usize) -> Self {
        assert!(n >= 2 && n % 2 == 0);
        let mut entries = Vec::with_capacity(n);
        let m = n / 2;
        for i in 0..m {
            let h = n as i64 - 1 - 2 * i as i64; // twice the exponent (n-1-2i)/2
            entries.push(Monomial::new(h, 1, 1));
            entries.push(Monomial::new(h, -1, 1));
        }
        UnramifiedCharacter { entries }
    }

    pub fn trivial(n: usize) -> Self {
        UnramifiedCharacter {
            entries: vec![Monomial::one(); n],
        }
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Monomial] {
        &self.entries
    }

    pub fn inverse(&self) -> Self {
        UnramifiedCharacter {
            entries: self.entries.iter().map(|e| e.inv()).collect(),
        }
    }

    /// Weyl image: entries move by the coordinate scatter `out[σ(i)] = E_i^{±1}`.
    pub fn weyl_image(&self, w: &WeylElement) -> Self {
        UnramifiedCharacter {
            entries: w.apply_monomials(&self.entries),
        }
    }

    /// `χ(a_α)`: the character evaluated at the coroot point. With entries
    /// `E_i = χ_i(p^{-1})` and slot exponents `e` this is `∏ E_i^{-e_i}`.
    pub fn value_at_coroot(&self, alpha: &Root) -> Monomial {
        let exps = alpha.coroot_exponents(self.rank());
        let mut m = Monomial::one();
        for (entry, &e) in self.entries.iter().zip(exps.iter()) {
            m = m * entry.pow(-e);
        }
        m
    }
}

impl fmt::Display for UnramifiedCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", e)?;
        }
        write!(f, ")")
    }
}

/// `(e_α, d_α) = (1 - χ(a_α) q^{-1}, 1 - χ(a_α))` in the monomial algebra,
/// where the formal `p` denotes the residue cardinality `q`.
pub fn kato_c_alpha(chi: &UnramifiedCharacter, alpha: &Root) -> (PtExpr, PtExpr) {
    let v = chi.value_at_coroot(alpha);
    let one = PtExpr::one();
    let e = &one - &PtExpr::from(v * Monomial::p_pow(-1));
    let d = &one - &PtExpr::from(v);
    (e, d)
}

/// The verdicts of Kato's criterion for one character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KatoReport {
    /// `e(χ) = ∏_{α>0} e_α(χ)` has no identically-vanishing factor.
    pub e_nonzero: bool,
    /// Same for `e(χ^{-1})`.
    pub e_inverse_nonzero: bool,
    /// Order of the stabilizer `W_χ` (exhaustive scan of `W(D_n)`).
    pub stabilizer_order: usize,
    /// Order of `W(χ) = ⟨w_α : d_α(χ) = 0⟩`.
    pub reflection_subgroup_order: usize,
    /// Both subgroups trivial.
    pub regular: bool,
    /// `I_χ` irreducible; `None` when undetermined.
    pub irreducible: Option<bool>,
    /// The spherical vector generates `I_χ`; `None` when undetermined.
    pub spherical_cyclic: Option<bool>,
}

fn reflection_of(alpha: &Root, n: usize) -> WeylElement {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.swap(alpha.i, alpha.j);
    let mut flips = vec![false; n];
    if alpha.kind == RootKind::Sum {
        flips[alpha.i] = true;
        flips[alpha.j] = true;
    }
    WeylElement::new(perm, flips)
}

fn subgroup_closure(n: usize, generators: &[WeylElement]) -> HashSet<WeylElement> {
    let mut seen: HashSet<WeylElement> = HashSet::new();
    seen.insert(WeylElement::identity(n));
    let mut frontier: Vec<WeylElement> = vec![WeylElement::identity(n)];
    while let Some(w) = frontier.pop() {
        for g in generators {
            let next = g.compose(&w);
            if seen.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    seen
}

/// Applies both parts of Kato's criterion to an unramified character:
/// irreducibility needs `e(χ) e(χ^{-1}) ≠ 0` and `W_χ = W(χ)`, cyclicity of
/// the spherical vector needs `e(χ) ≠ 0` and the same subgroup equality.
pub fn kato_report(chi: &UnramifiedCharacter) -> Result<KatoReport, RootsError> {
    let n = chi.rank();
    let system = RootSystemD::new(n);
    let positives = system.positive_roots();
    let inv = chi.inverse();

    let mut e_nonzero = true;
    let mut e_inverse_nonzero = true;
    let mut vanishing_reflections = Vec::new();
    for alpha in &positives {
        let (e, d) = kato_c_alpha(chi, alpha);
        if e.is_zero() {
            e_nonzero = false;
        }
        if d.is_zero() {
            vanishing_reflections.push(reflection_of(alpha, n));
        }
        let (e_inv, _) = kato_c_alpha(&inv, alpha);
        if e_inv.is_zero() {
            e_inverse_nonzero = false;
        }
    }

    let stabilizer: HashSet<WeylElement> = enumerate_weyl(n)?
        .filter(|w| chi.weyl_image(w) == *chi)
        .collect();
    let reflection_subgroup = subgroup_closure(n, &vanishing_reflections);
    let subgroups_equal = stabilizer == reflection_subgroup;

    Ok(KatoReport {
        e_nonzero,
        e_inverse_nonzero,
        stabilizer_order: stabilizer.len(),
        reflection_subgroup_order: reflection_subgroup.len(),
        regular: stabilizer.len() == 1 && reflection_subgroup.len() == 1,
        irreducible: Some(e_nonzero && e_inverse_nonzero && subgroups_equal),
        spherical_cyclic: Some(e_nonzero && subgroups_equal),
    })
}

/// Langlands' criterion on the real part of a constant-term exponent, in
/// block coordinates: the exponent must lie in the open cone of negative
/// combinations of the restricted simple roots, which for
/// `{X_i - X_{i+1}, 2X_m}` means every partial sum is strictly negative.
pub fn square_integrable(exponent: &[Rational]) -> bool {
    let mut partial = rat_int(0);
    for e in exponent {
        partial += e;
        if partial >= rat_int(0) {
            return false;
        }
    }
    !exponent.is_empty()
}

/// The exponent of the surviving constant term: `w0 · s0 = (-(n-1)/2, ..., -1/2)`.
pub fn w0_exponent(n: usize) -> Vec<Rational> {
    ResiduePoint::new(n)
        .expect("even rank")
        .coordinates()
        .iter()
        .map(|c| -c.clone())
        .collect()
}

/// Summary of the residual construction at rank `n`: pole bookkeeping for
/// the long element, square-integrability of the surviving exponent, and
/// the Kato verdict for the inducing character family. The multiplicity-one
/// annotation is assembled from exactly these three ingredients.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualReport {
    pub n: usize,
    pub s0: ResiduePoint,
    pub unnormalized_order: i64,
    pub normalized: NormalizedOrder,
    pub square_integrable: bool,
    pub kato: KatoReport,
    pub multiplicity_one: bool,
}

pub fn residual_report(n: usize) -> Result<ResidualReport, LfError> {
    let m = LeviDescriptor::product_gl2(n).map_err(LfError::Roots)?;
    let w0 = w0_all_blocks_minus(&m).map_err(LfError::Roots)?;
    let prod = build_intertwining_product(&w0, &m)?;
    let point = crate::lfunctions::s0_point(n);
    let unnormalized_order = match prod.order_at(&point) {
        crate::lfunctions::PoleOrder::Known { order, .. } => order,
        crate::lfunctions::PoleOrder::Undetermined => return Err(LfError::Undetermined),
    };
    let normalized = normalized_order_at_s0(&prod, n)?;
    let sq = square_integrable(&w0_exponent(n));
    let kato = kato_report(&UnramifiedCharacter::residual_family(n)).map_err(LfError::Roots)?;
    let multiplicity_one = normalized.order == 0
        && normalized.nonvanishing
        && sq
        && kato.spherical_cyclic == Some(true);
    Ok(ResidualReport {
        n,
        s0: ResiduePoint::new(n).map_err(LfError::Roots)?,
        unnormalized_order,
        normalized,
        square_integrable: sq,
        kato,
        multiplicity_one,
    })
}
