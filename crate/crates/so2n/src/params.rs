//! Arthur parameters for `SO_2n`: formal sums of blocks
//! `(coefficient) ⊗ sp_k`, their validation, Hecke-matrix synthesis,
//! the residual/cuspidal classification, packet descriptors for the
//! two-block family, and the global type count.
//!
//! Cuspidal `GL_d` constituents are opaque: a dimension, a self-duality
//! type and their eigenvalue monomials. Nothing else about them is modeled.

use std::fmt;

use thiserror::Error;

use crate::algebra::{rat_int, Monomial, Rational};
use crate::hecke::HeckeMatrix;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParamsError {
    #[error("parameter fails validation: {0}")]
    Invalid(ValidityReport),
    #[error("parameter is not discrete (repeated blocks)")]
    NotDiscrete,
    #[error("parameter does not have the required two-block shape")]
    WrongShape,
    #[error("coefficient eigenvalue is not representable as p^{{a/2}} t^b")]
    EigenvalueNotRepresentable,
    #[error("eigenvalue multiset cannot be split into inverse pairs")]
    PairingFailure,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelfDualType {
    Orthogonal,
    Symplectic,
}

impl SelfDualType {
    fn flipped(self) -> Self {
        match self {
            SelfDualType::Orthogonal => SelfDualType::Symplectic,
            SelfDualType::Symplectic => SelfDualType::Orthogonal,
        }
    }
}

impl fmt::Display for SelfDualType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SelfDualType::Orthogonal => write!(f, "orth"),
            SelfDualType::Symplectic => write!(f, "symp"),
        }
    }
}

/// The coefficient datum of one block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockCoefficient {
    TrivialChar,
    /// The unramified quadratic character; Satake value `-1`.
    QuadraticChar,
    /// A unitary character with Satake value `t^b`, `b ≠ 0`.
    UnitChar {
        t_exp: i64,
    },
    /// `|·|^s`; Satake value `p^{-s}`.
    AbsValPower {
        s: Rational,
    },
    /// An opaque cuspidal `GL_d` constituent.
    CuspidalGL {
        dim: usize,
        dual: SelfDualType,
        eigenvalues: Vec<Monomial>,
    },
}

impl BlockCoefficient {
    pub fn unit_t() -> Self {
        BlockCoefficient::UnitChar { t_exp: 1 }
    }

    pub fn unit_t_inv() -> Self {
        BlockCoefficient::UnitChar { t_exp: -1 }
    }

    pub fn dimension(&self) -> usize {
        match self {
            BlockCoefficient::CuspidalGL { dim, .. } => *dim,
            _ => 1,
        }
    }

    pub fn dual(&self) -> BlockCoefficient {
        match self {
            BlockCoefficient::UnitChar { t_exp } => BlockCoefficient::UnitChar { t_exp: -t_exp },
            BlockCoefficient::AbsValPower { s } => BlockCoefficient::AbsValPower { s: -s.clone() },
            other => other.clone(),
        }
    }

    pub fn is_self_dual(&self) -> bool {
        *self == self.dual()
    }

    /// Type of the symmetric/alternating pairing carried by a self-dual
    /// coefficient; `None` when the coefficient is not self-dual.
    pub fn self_dual_type(&self) -> Option<SelfDualType> {
        match self {
            BlockCoefficient::CuspidalGL { dual, .. } => Some(*dual),
            _ if self.is_self_dual() => Some(SelfDualType::Orthogonal),
            _ => None,
        }
    }

    pub fn is_character(&self) -> bool {
        self.dimension() == 1
    }

    /// Satake eigenvalues of the coefficient as exact monomials.
    pub fn eigenvalues(&self) -> Result<Vec<Monomial>, ParamsError> {
        match self {
            BlockCoefficient::TrivialChar => Ok(vec![Monomial::one()]),
            BlockCoefficient::QuadraticChar => Ok(vec![Monomial::minus_one()]),
            BlockCoefficient::UnitChar { t_exp } => Ok(vec![Monomial::t_pow(*t_exp)]),
            BlockCoefficient::AbsValPower { s } => {
                let doubled = s * rat_int(-2);
                if !doubled.is_integer() {
                    return Err(ParamsError::EigenvalueNotRepresentable);
                }
                use num_traits::ToPrimitive;
                Ok(vec![Monomial::p_pow_half(
                    doubled.to_integer().to_i64().unwrap(),
                )])
            }
            BlockCoefficient::CuspidalGL { eigenvalues, .. } => Ok(eigenvalues.clone()),
        }
    }
}

impl fmt::Display for BlockCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockCoefficient::TrivialChar => write!(f, "triv"),
            BlockCoefficient::QuadraticChar => write!(f, "eps"),
            BlockCoefficient::UnitChar { t_exp: 1 } => write!(f, "unit(t)"),
            BlockCoefficient::UnitChar { t_exp: -1 } => write!(f, "unit(t^-1)"),
            BlockCoefficient::UnitChar { t_exp } => write!(f, "unit(t^{})", t_exp),
            BlockCoefficient::AbsValPower { s } => write!(f, "abs(s={})", s),
            BlockCoefficient::CuspidalGL {
                dim,
                dual,
                eigenvalues,
            } => {
                write!(f, "cusp(d={},type={},ev=[", dim, dual)?;
                for (i, e) in eigenvalues.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", grammar_monomial(e))?;
                }
                write!(f, "])")
            }
        }
    }
}

/// Renders a monomial in the parameter grammar's fixed `p^<a>/2*t^<b>` form.
pub fn grammar_monomial(m: &Monomial) -> String {
    format!(
        "{}p^{}/2*t^{}",
        if m.sign() < 0 { "-" } else { "" },
        m.p_half(),
        m.t_exp()
    )
}

/// One summand `coefficient ⊗ sp_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArthurBlock {
    pub coefficient: BlockCoefficient,
    pub spin: usize,
}

impl ArthurBlock {
    pub fn new(coefficient: BlockCoefficient, spin: usize) -> Self {
        assert!(spin >= 1);
        ArthurBlock { coefficient, spin }
    }

    pub fn dimension(&self) -> usize {
        self.coefficient.dimension() * self.spin
    }

    pub fn dual(&self) -> ArthurBlock {
        ArthurBlock {
            coefficient: self.coefficient.dual(),
            spin: self.spin,
        }
    }

    pub fn is_self_dual(&self) -> bool {
        *self == self.dual()
    }

    /// Self-duality type of the block: the coefficient's type flipped when
    /// the spin factor is even (`sp_k` is symplectic for even `k`).
    pub fn self_dual_type(&self) -> Option<SelfDualType> {
        let base = self.coefficient.self_dual_type()?;
        Some(if self.spin % 2 == 0 {
            base.flipped()
        } else {
            base
        })
    }
}

impl fmt::Display for ArthurBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*sp{}", self.coefficient, self.spin)
    }
}

/// A formal sum of blocks targeting `SO_2n` (total dimension `2n`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArthurParameter {
    pub blocks: Vec<ArthurBlock>,
    pub target_dim: usize,
}

impl ArthurParameter {
    pub fn new(blocks: Vec<ArthurBlock>, target_dim: usize) -> Self {
        ArthurParameter { blocks, target_dim }
    }

    pub fn total_dimension(&self) -> usize {
        self.blocks.iter().map(|b| b.dimension()).sum()
    }

    /// Pairwise distinct blocks (the elliptic/discrete condition).
    pub fn is_discrete(&self) -> bool {
        for (i, a) in self.blocks.iter().enumerate() {
            for b in self.blocks.iter().skip(i + 1) {
                if a == b {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for ArthurParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}", b)?;
        }
        Ok(())
    }
}

/// One violated validity condition, with the offending block index where
/// applicable.
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    DimensionMismatch {
        total: usize,
        target: usize,
    },
    /// The dual of the block does not occur with the same multiplicity.
    DualityFailure {
        block: usize,
    },
    /// A self-dual block whose pairing is symplectic cannot enter an
    /// orthogonal parameter.
    ParityViolation {
        block: usize,
    },
    /// The product of the character determinants is nontrivial: recorded as
    /// (quadratic parity, total t-exponent, total abs-value weight).
    DeterminantViolation {
        eps_parity: bool,
        t_exp: i64,
        abs_weight: Rational,
    },
    /// Declared self-dual cuspidal data whose eigenvalue list is not
    /// inversion-closed.
    CuspidalNotClosed {
        block: usize,
    },
    /// Cuspidal eigenvalue count differs from the declared dimension.
    CuspidalDimension {
        block: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DimensionMismatch { total, target } => {
                write!(f, "dimension {} != target {}", total, target)
            }
            Violation::DualityFailure { block } => {
                write!(f, "block #{} has no dual partner", block + 1)
            }
            Violation::ParityViolation { block } => {
                write!(f, "block #{} is symplectic type", block + 1)
            }
            Violation::DeterminantViolation {
                eps_parity,
                t_exp,
                abs_weight,
            } => write!(
                f,
                "determinant is nontrivial (eps parity {}, t-exponent {}, |.|-weight {})",
                eps_parity, t_exp, abs_weight
            ),
            Violation::CuspidalNotClosed { block } => {
                write!(f, "block #{} eigenvalues not inversion-closed", block + 1)
            }
            Violation::CuspidalDimension { block } => {
                write!(f, "block #{} eigenvalue count != dimension", block + 1)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ValidityReport {
    pub violations: Vec<Violation>,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{}", v)?;
        }
        Ok(())
    }
}

/// Checks dimension, self-duality closure, orthogonal parity of the
/// self-dual blocks, and the determinant condition for character blocks.
pub fn validate(psi: &ArthurParameter) -> ValidityReport {
    let mut report = ValidityReport::default();
    let total = psi.total_dimension();
    if total != psi.target_dim {
        report.violations.push(Violation::DimensionMismatch {
            total,
            target: psi.target_dim,
        });
    }

    // duality closure as multisets
    for (i, b) in psi.blocks.iter().enumerate() {
        let dual = b.dual();
        let count = psi.blocks.iter().filter(|x| **x == *b).count();
        let dual_count = psi.blocks.iter().filter(|x| **x == dual).count();
        if count != dual_count {
            report
                .violations
                .push(Violation::DualityFailure { block: i });
        }
    }

    for (i, b) in psi.blocks.iter().enumerate() {
        if let BlockCoefficient::CuspidalGL {
            dim,
            dual,
            eigenvalues,
        } = &b.coefficient
        {
            if eigenvalues.len() != *dim {
                report
                    .violations
                    .push(Violation::CuspidalDimension { block: i });
            } else {
                let mut sorted = eigenvalues.clone();
                let mut inverses: Vec<Monomial> = eigenvalues.iter().map(|m| m.inv()).collect();
                sorted.sort();
                inverses.sort();
                if sorted != inverses {
                    report
                        .violations
                        .push(Violation::CuspidalNotClosed { block: i });
                }
            }
            let _ = dual;
        }
        // a self-dual symplectic-type block carries no orthogonal structure
        // on its own; it may only occur an even number of times
        if b.is_self_dual() && b.self_dual_type() == Some(SelfDualType::Symplectic) {
            let multiplicity = psi.blocks.iter().filter(|x| **x == *b).count();
            if multiplicity % 2 != 0 {
                report
                    .violations
                    .push(Violation::ParityViolation { block: i });
            }
        }
    }

    // determinant of the character part: ∏ coef^spin must be trivial
    let mut eps_count = 0usize;
    let mut t_total = 0i64;
    let mut s_total = rat_int(0);
    for b in &psi.blocks {
        match &b.coefficient {
            BlockCoefficient::QuadraticChar => eps_count += b.spin,
            BlockCoefficient::UnitChar { t_exp } => t_total += t_exp * b.spin as i64,
            BlockCoefficient::AbsValPower { s } => s_total += s * rat_int(b.spin as i64),
            _ => {}
        }
    }
    if eps_count % 2 != 0 || t_total != 0 || s_total != rat_int(0) {
        report.violations.push(Violation::DeterminantViolation {
            eps_parity: eps_count % 2 != 0,
            t_exp: t_total,
            abs_weight: s_total,
        });
    }

    report
}

/// Synthesizes the Satake parameter: each block `u ⊗ sp_k` contributes
/// `u p^{(k-1)/2}, u p^{(k-3)/2}, ..., u p^{-(k-1)/2}` per coefficient
/// eigenvalue `u`, and the `2n`-multiset is split into a first half plus
/// reversed inverses.
pub fn hecke_matrix_of(psi: &ArthurParameter, p: u64) -> Result<HeckeMatrix, ParamsError> {
    let report = validate(psi);
    if !report.is_valid() {
        return Err(ParamsError::Invalid(report));
    }
    let mut all: Vec<Monomial> = Vec::with_capacity(psi.target_dim);
    for b in &psi.blocks {
        for u in b.coefficient.eigenvalues()? {
            for j in 0..b.spin {
                let h = b.spin as i64 - 1 - 2 * j as i64;
                all.push(u * Monomial::p_pow_half(h));
            }
        }
    }
    // split into inverse pairs; pick the larger-by-(t, p)-exponent member
    // so block runs like (p^{(n-1)/2} t, ..., p^{-(n-1)/2} t) stay together
    let key = |m: &Monomial| (m.t_exp(), m.p_half(), m.sign());
    let mut half = Vec::with_capacity(all.len() / 2);
    while !all.is_empty() {
        let (idx, _) = all
            .iter()
            .enumerate()
            .max_by_key(|(_, m)| key(m))
            .expect("nonempty");
        let e = all.swap_remove(idx);
        let inv = e.inv();
        match all.iter().position(|m| *m == inv) {
            Some(j) => {
                all.swap_remove(j);
            }
            None => return Err(ParamsError::PairingFailure),
        }
        half.push(e);
    }
    half.sort_by(|a, b| key(b).cmp(&key(a)));
    Ok(HeckeMatrix::new(half, p))
}

/// Classification verdict for a discrete parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    /// Not excluded by the singularity results (not "provably cuspidal").
    CuspidalAdmissible,
    Residual(ResidualReason),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ResidualReason {
    /// A character block `sp_k` with `k` odd and `k > n+1`.
    LargeOddSpinBlock { spin: usize },
    /// The shape `sp_{n+1} ⊞ (characters)`.
    SpinNPlusOnePlusCharacters,
    /// Opt-in stronger threshold `k ≥ n` for any block.
    RemarkThreshold { spin: usize },
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::CuspidalAdmissible => write!(f, "cuspidal-admissible"),
            Classification::Residual(ResidualReason::LargeOddSpinBlock { spin }) => {
                write!(f, "residual (odd spin block sp{} beyond n+1)", spin)
            }
            Classification::Residual(ResidualReason::SpinNPlusOnePlusCharacters) => {
                write!(f, "residual (sp(n+1) plus characters)")
            }
            Classification::Residual(ResidualReason::RemarkThreshold { spin }) => {
                write!(f, "residual (spin block sp{} at or beyond n)", spin)
            }
        }
    }
}

/// Classifies a valid discrete parameter. The proven exclusion is
/// `k` odd, `k > n+1` (plus the `sp_{n+1} ⊞ characters` shape); the
/// stronger `k ≥ n` threshold is only applied when `remark_threshold`
/// is set, since it is stated without proof.
pub fn classify(
    psi: &ArthurParameter,
    n: usize,
    remark_threshold: bool,
) -> Result<Classification, ParamsError> {
    let report = validate(psi);
    if !report.is_valid() {
        return Err(ParamsError::Invalid(report));
    }
    if !psi.is_discrete() {
        return Err(ParamsError::NotDiscrete);
    }
    for b in &psi.blocks {
        if b.coefficient.is_character() && b.spin % 2 == 1 && b.spin > n + 1 {
            return Ok(Classification::Residual(
                ResidualReason::LargeOddSpinBlock { spin: b.spin },
            ));
        }
    }
    let has_np1 = psi
        .blocks
        .iter()
        .any(|b| b.coefficient.is_character() && b.spin == n + 1);
    let rest_are_characters = psi
        .blocks
        .iter()
        .filter(|b| !(b.coefficient.is_character() && b.spin == n + 1))
        .all(|b| b.coefficient.is_character() && b.spin == 1);
    if has_np1 && rest_are_characters {
        return Ok(Classification::Residual(
            ResidualReason::SpinNPlusOnePlusCharacters,
        ));
    }
    if remark_threshold {
        for b in &psi.blocks {
            if b.spin >= n {
                return Ok(Classification::Residual(ResidualReason::RemarkThreshold {
                    spin: b.spin,
                }));
            }
        }
    }
    Ok(Classification::CuspidalAdmissible)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CentralizerType {
    /// `S_ψ ≅ C^×`.
    Torus1,
    /// `S_ψ ≅ SL_2(C)`.
    Sl2,
}

impl fmt::Display for CentralizerType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CentralizerType::Torus1 => write!(f, "rank-1 torus"),
            CentralizerType::Sl2 => write!(f, "SL2"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PacketMember {
    pub label: String,
    pub multiplicity: usize,
    /// Character of the component group attached to the member.
    pub component_character: String,
}

/// Local packet data for the two-block family `μ ⊗ sp_n ⊞ μ^{-1} ⊗ sp_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PacketDescriptor {
    pub centralizer: CentralizerType,
    pub component_group_order: usize,
    /// Diagonal of the canonical central element on the `2n` eigenlines.
    pub s_psi_signs: Vec<i8>,
    pub members: Vec<PacketMember>,
}

/// The packet for `ψ = μ ⊗ sp_n ⊞ μ^{-1} ⊗ sp_n`: the centralizer is a
/// rank-1 torus when `μ² ≠ 1` and `SL_2` when `μ = μ^{-1}`; the component
/// group is trivial either way, and the canonical element acts by the
/// scalar `(-1)^{n-1} = -1` (`n` even) on every eigenline.
pub fn packet(psi: &ArthurParameter) -> Result<PacketDescriptor, ParamsError> {
    let n = match two_block_shape(psi) {
        Some(n) => n,
        None => return Err(ParamsError::WrongShape),
    };
    let mu = &psi.blocks[0].coefficient;
    let centralizer = if mu.is_self_dual() {
        CentralizerType::Sl2
    } else {
        CentralizerType::Torus1
    };
    let scalar: i8 = if (n - 1) % 2 == 0 { 1 } else { -1 };
    Ok(PacketDescriptor {
        centralizer,
        component_group_order: 1,
        s_psi_signs: vec![scalar; 2 * n],
        members: vec![PacketMember {
            label: "pi (one outer-automorphism orbit)".to_string(),
            multiplicity: 1,
            component_character: "trivial".to_string(),
        }],
    })
}

/// Returns `n` when `psi` is `μ ⊗ sp_n ⊞ μ^{-1} ⊗ sp_n` with a character
/// `μ` and matching target dimension `2n`, `n` even.
fn two_block_shape(psi: &ArthurParameter) -> Option<usize> {
    if psi.blocks.len() != 2 {
        return None;
    }
    let (a, b) = (&psi.blocks[0], &psi.blocks[1]);
    if a.spin != b.spin || !a.coefficient.is_character() {
        return None;
    }
    if b.coefficient != a.coefficient.dual() {
        return None;
    }
    let n = a.spin;
    if n % 2 != 0 || psi.target_dim != 2 * n || psi.total_dimension() != 2 * n {
        return None;
    }
    Some(n)
}

/// Returns `n` when `psi` is the global residual shape: a single self-dual
/// cuspidal `GL_2` block tensored with `sp_n`.
fn global_residual_shape(psi: &ArthurParameter) -> Option<usize> {
    if psi.blocks.len() != 1 {
        return None;
    }
    let b = &psi.blocks[0];
    match &b.coefficient {
        BlockCoefficient::CuspidalGL { dim: 2, .. } => {
            let n = b.spin;
            if n % 2 == 0 && psi.target_dim == 2 * n {
                Some(n)
            } else {
                None
            }
        }
        _ => None,
    }
}

/// Global count of discrete automorphic realizations of the residual type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlobalTypeReport {
    /// Number of discrete representations of this type (the residual
    /// representation and its outer twist).
    pub type_count: usize,
    /// Cuspidal representations of this type.
    pub cuspidal_count: usize,
    /// Unramified members of the local packet.
    pub local_unramified_members: usize,
}

pub fn global_type_count(psi: &ArthurParameter) -> Result<GlobalTypeReport, ParamsError> {
    if two_block_shape(psi).is_none() && global_residual_shape(psi).is_none() {
        return Err(ParamsError::WrongShape);
    }
    Ok(GlobalTypeReport {
        type_count: 2,
        cuspidal_count: 0,
        local_unramified_members: 1,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IrreducibilityClass {
    Irreducible,
    Undetermined,
}

/// Irreducibility of the induced representation attached to `χ ⊗ sp_n`:
/// settled for unitary `χ` with `χ² ≠ 1`, for the order-2 character, and
/// for `|·|^s` with `|s| < 1/2`; undetermined elsewhere.
pub fn irreducibility_class(chi: &BlockCoefficient) -> IrreducibilityClass {
    match chi {
        BlockCoefficient::TrivialChar | BlockCoefficient::QuadraticChar => {
            IrreducibilityClass::Irreducible
        }
        BlockCoefficient::UnitChar { t_exp } if *t_exp != 0 => IrreducibilityClass::Irreducible,
        BlockCoefficient::AbsValPower { s } => {
            use num_traits::Signed;
            if s.abs() < crate::algebra::rat(1, 2) {
                IrreducibilityClass::Irreducible
            } else {
                IrreducibilityClass::Undetermined
            }
        }
        _ => IrreducibilityClass::Undetermined,
    }
}

/// The local parameter of the residual construction at an unramified place:
/// `unit(t) ⊗ sp_n ⊞ unit(t^{-1}) ⊗ sp_n`.
pub fn section2_local_parameter(n: usize) -> ArthurParameter {
    assert!(n % 2 == 0 && n >= 2);
    ArthurParameter::new(
        vec![
            ArthurBlock::new(BlockCoefficient::unit_t(), n),
            ArthurBlock::new(BlockCoefficient::unit_t_inv(), n),
        ],
        2 * n,
    )
}

/// The global residual parameter: the cuspidal `GL_2` datum with Satake
/// eigenvalues `t, t^{-1}` tensored with `sp_n`.
pub fn section2_global_parameter(n: usize) -> ArthurParameter {
    assert!(n % 2 == 0 && n >= 2);
    ArthurParameter::new(
        vec![ArthurBlock::new(
            BlockCoefficient::CuspidalGL {
                dim: 2,
                dual: SelfDualType::Symplectic,
                eigenvalues: vec![Monomial::t_pow(1), Monomial::t_pow(-1)],
            },
            n,
        )],
        2 * n,
    )
}
