//! The root system `D_n`, its Weyl group of signed permutations, the
//! extended Weyl group, standard Levi data and relative Weyl sets.
//!
//! Conventions: letters are 0-based in code, coordinates are the rational
//! characters `X_1, ..., X_n` of the split torus. Positive roots of `D_n`
//! are `X_i - X_j` and `X_i + X_j` for `i < j`. A Weyl element sends
//! `e_i` to `±e_{σ(i)}`; membership in `W(D_n)` means an even number of
//! sign flips, the extended group drops that restriction.

use std::fmt;

use thiserror::Error;

use crate::algebra::{rat_int, Monomial, Rational};

/// Elements of `W(D_n)` are enumerated exhaustively up to this rank.
pub const WEYL_ENUMERATION_LIMIT: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootsError {
    #[error("rank {0} exceeds the enumeration limit {WEYL_ENUMERATION_LIMIT}")]
    LimitExceeded(usize),
    #[error("operation requires the Levi to be a product of GL2 blocks")]
    UnsupportedLevi,
    #[error("Levi block data is not a standard partition of the letters")]
    NonStandardLevi,
}

/// The root system of split `SO_{2n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootSystemD {
    n: usize,
}

impl RootSystemD {
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "D_n needs n >= 2");
        RootSystemD { n }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// All `n(n-1)` positive roots, ordered lexicographically by
    /// `(i, j)` with the difference before the sum.
    pub fn positive_roots(&self) -> Vec<Root> {
        let mut out = Vec::with_capacity(self.n * (self.n - 1));
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                out.push(Root::difference(i, j));
                out.push(Root::sum(i, j));
            }
        }
        out
    }

    /// Half-sum of the positive roots: `(n-1, n-2, ..., 1, 0)`.
    pub fn rho(&self) -> Vec<Rational> {
        let mut acc = vec![rat_int(0); self.n];
        for r in self.positive_roots() {
            for (a, &b) in acc.iter_mut().zip(r.to_vector(self.n).iter()) {
                *a += rat_int(b);
            }
        }
        for a in acc.iter_mut() {
            *a /= rat_int(2);
        }
        acc
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootKind {
    Difference,
    Sum,
}

/// A root `±(X_i ± X_j)` with `i < j` (0-based letters).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub i: usize,
    pub j: usize,
    pub kind: RootKind,
    pub sign: i8,
}

impl Root {
    pub fn difference(i: usize, j: usize) -> Self {
        assert!(i < j);
        Root {
            i,
            j,
            kind: RootKind::Difference,
            sign: 1,
        }
    }

    pub fn sum(i: usize, j: usize) -> Self {
        assert!(i < j);
        Root {
            i,
            j,
            kind: RootKind::Sum,
            sign: 1,
        }
    }

    pub fn negated(&self) -> Self {
        Root {
            sign: -self.sign,
            ..*self
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign > 0
    }

    pub fn to_vector(&self, n: usize) -> Vec<i64> {
        let mut v = vec![0i64; n];
        v[self.i] = self.sign as i64;
        v[self.j] = match self.kind {
            RootKind::Difference => -self.sign as i64,
            RootKind::Sum => self.sign as i64,
        };
        v
    }

    /// Reads a two-nonzero-entry `±1` vector back as a root.
    pub fn from_vector(v: &[i64]) -> Option<Root> {
        let nz: Vec<usize> = (0..v.len()).filter(|&k| v[k] != 0).collect();
        if nz.len() != 2 {
            return None;
        }
        let (i, j) = (nz[0], nz[1]);
        if v[i].abs() != 1 || v[j].abs() != 1 {
            return None;
        }
        let sign = v[i] as i8;
        let kind = if v[i] == v[j] {
            RootKind::Sum
        } else {
            RootKind::Difference
        };
        Some(Root { i, j, kind, sign })
    }

    /// The coroot point in the split torus, as the vector of `p`-exponents:
    /// `X_i - X_j` gives `p` at slot `i` and `p^{-1}` at slot `j`,
    /// `X_i + X_j` gives `p` at both slots.
    pub fn coroot_exponents(&self, n: usize) -> Vec<i64> {
        self.to_vector(n)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            write!(f, "-(")?;
        }
        match self.kind {
            RootKind::Difference => write!(f, "X{}-X{}", self.i + 1, self.j + 1)?,
            RootKind::Sum => write!(f, "X{}+X{}", self.i + 1, self.j + 1)?,
        }
        if self.sign < 0 {
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// A signed permutation: `e_i -> ±e_{perm[i]}`. This is an element of the
/// extended Weyl group `S_n ⋉ (Z/2)^n`; it lies in `W(D_n)` exactly when
/// the number of sign flips is even.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    perm: Vec<usize>,
    flips: Vec<bool>,
}

/// Which signed-permutation group an operation works in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeylGroupKind {
    /// `W(D_n)`: even number of sign flips.
    D,
    /// The full hyperoctahedral group (the θ-centralizer group on `GL_2n`).
    Extended,
}

impl WeylElement {
    pub fn new(perm: Vec<usize>, flips: Vec<bool>) -> Self {
        assert_eq!(perm.len(), flips.len());
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            assert!(p < perm.len() && !seen[p], "not a permutation");
            seen[p] = true;
        }
        WeylElement { perm, flips }
    }

    pub fn identity(n: usize) -> Self {
        WeylElement {
            perm: (0..n).collect(),
            flips: vec![false; n],
        }
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn flips(&self) -> &[bool] {
        &self.flips
    }

    pub fn flip_count(&self) -> usize {
        self.flips.iter().filter(|&&f| f).count()
    }

    pub fn is_in_d_group(&self) -> bool {
        self.flip_count() % 2 == 0
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        assert_eq!(self.rank(), other.rank());
        let n = self.rank();
        let mut perm = vec![0; n];
        let mut flips = vec![false; n];
        for i in 0..n {
            perm[i] = self.perm[other.perm[i]];
            flips[i] = other.flips[i] ^ self.flips[other.perm[i]];
        }
        WeylElement { perm, flips }
    }

    pub fn inverse(&self) -> WeylElement {
        let n = self.rank();
        let mut perm = vec![0; n];
        let mut flips = vec![false; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            flips[self.perm[i]] = self.flips[i];
        }
        WeylElement { perm, flips }
    }

    /// Action on exponent vectors (characters): the image has
    /// `out[σ(i)] = ±v[i]`.
    pub fn apply_exponents(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.rank());
        let mut out = vec![0i64; v.len()];
        for i in 0..v.len() {
            out[self.perm[i]] = if self.flips[i] { -v[i] } else { v[i] };
        }
        out
    }

    /// Action on torus coordinates / character entries as monomials:
    /// `out[σ(i)] = x_i^{±1}`.
    pub fn apply_monomials(&self, xs: &[Monomial]) -> Vec<Monomial> {
        assert_eq!(xs.len(), self.rank());
        let mut out = vec![Monomial::one(); xs.len()];
        for i in 0..xs.len() {
            out[self.perm[i]] = if self.flips[i] { xs[i].inv() } else { xs[i] };
        }
        out
    }

    /// Image of a root; always again a root of `D_n`.
    pub fn apply_root(&self, r: &Root) -> Root {
        Root::from_vector(&self.apply_exponents(&r.to_vector(self.rank())))
            .expect("signed permutations preserve the root system")
    }

    /// Determinant of the underlying signed permutation matrix.
    pub fn det(&self) -> i8 {
        let mut sign = 1i8;
        let mut seen = vec![false; self.rank()];
        for start in 0..self.rank() {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = self.perm[k];
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        if self.flip_count() % 2 == 1 {
            sign = -sign;
        }
        sign
    }

    /// Number of positive roots sent to negative roots (the length function
    /// on `W(D_n)`).
    pub fn length(&self, system: &RootSystemD) -> usize {
        system
            .positive_roots()
            .iter()
            .filter(|r| !self.apply_root(r).is_positive())
            .count()
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rank() {
            if i > 0 {
                write!(f, ",")?;
            }
            let target = self.perm[i] + 1;
            if self.flips[i] {
                write!(f, "-{}", target)?;
            } else {
                write!(f, "{}", target)?;
            }
        }
        write!(f, "]")
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q: Vec<usize> = p.iter().map(|&x| x + 1).collect();
            q.insert(pos, 0);
            out.push(q);
        }
    }
    out
}

/// All `2^{n-1} n!` elements of `W(D_n)`.
pub fn enumerate_weyl(n: usize) -> Result<impl Iterator<Item = WeylElement>, RootsError> {
    if n > WEYL_ENUMERATION_LIMIT {
        return Err(RootsError::LimitExceeded(n));
    }
    let perms = permutations(n);
    Ok(perms.into_iter().flat_map(move |perm| {
        (0u64..(1 << (n - 1))).map(move |mask| {
            let mut flips: Vec<bool> = (0..n - 1).map(|i| (mask >> i) & 1 == 1).collect();
            let parity = flips.iter().filter(|&&f| f).count() % 2 == 1;
            flips.push(parity);
            WeylElement::new(perm.clone(), flips)
        })
    }))
}

/// All `2^n n!` elements of the extended group.
pub fn enumerate_extended(n: usize) -> Result<impl Iterator<Item = WeylElement>, RootsError> {
    if n > WEYL_ENUMERATION_LIMIT {
        return Err(RootsError::LimitExceeded(n));
    }
    let perms = permutations(n);
    Ok(perms.into_iter().flat_map(move |perm| {
        (0u64..(1 << n)).map(move |mask| {
            let flips: Vec<bool> = (0..n).map(|i| (mask >> i) & 1 == 1).collect();
            WeylElement::new(perm.clone(), flips)
        })
    }))
}

/// Shape of a standard Levi subgroup of `SO_{2n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeviShape {
    /// `m` copies of `GL_2` along the odd nodes of the diagram; `n = 2m`.
    ProductGl2 { m: usize },
    /// The Siegel Levi `GL_n`.
    Gln,
    /// `SO_{2k} × GL_1^r` with `k + r = n`; the orthogonal factor sits on
    /// the last `k` letters.
    SoPlusTorus { so_rank: usize, torus_rank: usize },
}

/// A standard Levi subgroup, with its blocks as letter sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviDescriptor {
    shape: LeviShape,
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl LeviDescriptor {
    pub fn product_gl2(n: usize) -> Result<Self, RootsError> {
        if n % 2 != 0 || n == 0 {
            return Err(RootsError::NonStandardLevi);
        }
        let m = n / 2;
        let blocks = (0..m).map(|k| vec![2 * k, 2 * k + 1]).collect();
        Ok(LeviDescriptor {
            shape: LeviShape::ProductGl2 { m },
            n,
            blocks,
        })
    }

    pub fn gln(n: usize) -> Self {
        LeviDescriptor {
            shape: LeviShape::Gln,
            n,
            blocks: vec![(0..n).collect()],
        }
    }

    pub fn so_plus_torus(n: usize, so_rank: usize) -> Result<Self, RootsError> {
        if so_rank > n {
            return Err(RootsError::NonStandardLevi);
        }
        let torus_rank = n - so_rank;
        let mut blocks: Vec<Vec<usize>> = (0..torus_rank).map(|i| vec![i]).collect();
        if so_rank > 0 {
            blocks.push((torus_rank..n).collect());
        }
        Ok(LeviDescriptor {
            shape: LeviShape::SoPlusTorus {
                so_rank,
                torus_rank,
            },
            n,
            blocks,
        })
    }

    /// The whole group, viewed as a Levi of itself.
    pub fn full(n: usize) -> Self {
        LeviDescriptor {
            shape: LeviShape::SoPlusTorus {
                so_rank: n,
                torus_rank: 0,
            },
            n,
            blocks: vec![(0..n).collect()],
        }
    }

    pub fn shape(&self) -> LeviShape {
        self.shape
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn gl2_block_count(&self) -> Option<usize> {
        match self.shape {
            LeviShape::ProductGl2 { m } => Some(m),
            _ => None,
        }
    }

    /// Positive roots of the Levi.
    pub fn positive_roots(&self) -> Vec<Root> {
        let mut out = Vec::new();
        match self.shape {
            LeviShape::ProductGl2 { .. } => {
                for b in &self.blocks {
                    out.push(Root::difference(b[0], b[1]));
                }
            }
            LeviShape::Gln => {
                for i in 0..self.n {
                    for j in (i + 1)..self.n {
                        out.push(Root::difference(i, j));
                    }
                }
            }
            LeviShape::SoPlusTorus { torus_rank, .. } => {
                for i in torus_rank..self.n {
                    for j in (i + 1)..self.n {
                        out.push(Root::difference(i, j));
                        out.push(Root::sum(i, j));
                    }
                }
            }
        }
        out
    }
}

/// The relative Weyl set `W(M)`: minimal-length coset representatives in
/// `W/W_M` that normalize `M`. Computed by exhaustive enumeration;
/// minimality in the coset is equivalent to mapping every positive root of
/// `M` to a positive root.
pub fn relative_weyl_set(m: &LeviDescriptor) -> Result<Vec<WeylElement>, RootsError> {
    let n = m.rank();
    let levi_pos = m.positive_roots();
    let levi_all: std::collections::BTreeSet<Root> = levi_pos
        .iter()
        .cloned()
        .chain(levi_pos.iter().map(|r| r.negated()))
        .collect();
    let out = enumerate_weyl(n)?
        .filter(|w| {
            levi_pos.iter().all(|r| w.apply_root(r).is_positive())
                && levi_all.iter().all(|r| levi_all.contains(&w.apply_root(r)))
        })
        .collect();
    Ok(out)
}

/// The `m` elementary symmetries generating `W(M)` for `M = ∏ GL_2`:
/// the `m-1` adjacent block swaps and the flip of the last block.
pub fn elementary_symmetries(m: &LeviDescriptor) -> Result<Vec<WeylElement>, RootsError> {
    let blocks = match m.shape() {
        LeviShape::ProductGl2 { m: count } => count,
        _ => return Err(RootsError::UnsupportedLevi),
    };
    let n = m.rank();
    let mut out = Vec::with_capacity(blocks);
    for k in 0..blocks - 1 {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(2 * k, 2 * k + 2);
        perm.swap(2 * k + 1, 2 * k + 3);
        out.push(WeylElement::new(perm, vec![false; n]));
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.swap(n - 2, n - 1);
    let mut flips = vec![false; n];
    flips[n - 2] = true;
    flips[n - 1] = true;
    out.push(WeylElement::new(perm, flips));
    Ok(out)
}

/// The element acting as `-1` on every block character of `∏ GL_2`
/// (the product of all block flips).
pub fn w0_all_blocks_minus(m: &LeviDescriptor) -> Result<WeylElement, RootsError> {
    let blocks = match m.shape() {
        LeviShape::ProductGl2 { m: count } => count,
        _ => return Err(RootsError::UnsupportedLevi),
    };
    let n = m.rank();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut flips = vec![false; n];
    for k in 0..blocks {
        perm.swap(2 * k, 2 * k + 1);
        flips[2 * k] = true;
        flips[2 * k + 1] = true;
    }
    Ok(WeylElement::new(perm, flips))
}

/// Letter-level `w ∈ W(M)` acting on the `m` block characters of
/// `∏ GL_2` as a rank-`m` signed permutation; `None` when `w` does not
/// permute the blocks.
pub fn block_action(w: &WeylElement, m: &LeviDescriptor) -> Option<WeylElement> {
    let count = m.gl2_block_count()?;
    let n = m.rank();
    let mut perm = vec![0usize; count];
    let mut flips = vec![false; count];
    for k in 0..count {
        let mut det_vec = vec![0i64; n];
        det_vec[2 * k] = 1;
        det_vec[2 * k + 1] = 1;
        let image = w.apply_exponents(&det_vec);
        if image.iter().map(|x| x.abs()).sum::<i64>() != 2 {
            return None;
        }
        let mut found = None;
        for l in 0..count {
            if image[2 * l] == 1 && image[2 * l + 1] == 1 {
                found = Some((l, false));
            } else if image[2 * l] == -1 && image[2 * l + 1] == -1 {
                found = Some((l, true));
            }
        }
        let (l, f) = found?;
        perm[k] = l;
        flips[k] = f;
    }
    Some(WeylElement::new(perm, flips))
}

/// A restricted root in block coordinates (0-based block indices).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RestrictedRoot {
    /// `X_i - X_j` on the block characters.
    Diff(usize, usize),
    /// `X_i + X_j` on the block characters.
    Sum(usize, usize),
    /// `2X_i` on the block characters.
    Twice(usize),
}

impl RestrictedRoot {
    pub fn to_vector(&self, m: usize) -> Vec<i64> {
        let mut v = vec![0i64; m];
        match *self {
            RestrictedRoot::Diff(i, j) => {
                v[i] = 1;
                v[j] = -1;
            }
            RestrictedRoot::Sum(i, j) => {
                v[i] = 1;
                v[j] = 1;
            }
            RestrictedRoot::Twice(i) => {
                v[i] = 2;
            }
        }
        v
    }
}

impl fmt::Display for RestrictedRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RestrictedRoot::Diff(i, j) => write!(f, "X{}-X{}", i + 1, j + 1),
            RestrictedRoot::Sum(i, j) => write!(f, "X{}+X{}", i + 1, j + 1),
            RestrictedRoot::Twice(i) => write!(f, "2X{}", i + 1),
        }
    }
}

/// The `m` restricted simple roots of `(SO_{2n}, ∏ GL_2)` in block
/// coordinates: `X_i - X_{i+1}` for `i < m` and `2X_m`. The full restricted
/// root system is larger; these are the simple ones.
pub fn restricted_simple_roots(m: &LeviDescriptor) -> Result<Vec<RestrictedRoot>, RootsError> {
    let count = m.gl2_block_count().ok_or(RootsError::UnsupportedLevi)?;
    let mut out = Vec::with_capacity(count);
    for i in 0..count - 1 {
        out.push(RestrictedRoot::Diff(i, i + 1));
    }
    out.push(RestrictedRoot::Twice(count - 1));
    Ok(out)
}

/// All positive restricted roots on `m` block characters.
pub fn restricted_positive_roots(m_blocks: usize) -> Vec<RestrictedRoot> {
    let mut out = Vec::new();
    for i in 0..m_blocks {
        for j in (i + 1)..m_blocks {
            out.push(RestrictedRoot::Diff(i, j));
            out.push(RestrictedRoot::Sum(i, j));
        }
        out.push(RestrictedRoot::Twice(i));
    }
    out
}

/// Whether a signed permutation sends the restricted root to a negative one
/// (first nonzero coordinate of the image negative).
pub fn negates_restricted(w: &WeylElement, r: &RestrictedRoot) -> bool {
    let image = w.apply_exponents(&r.to_vector(w.rank()));
    for &x in &image {
        if x != 0 {
            return x < 0;
        }
    }
    false
}

/// The subset of the given roots whose image under `w` is negative.
pub fn negated_roots(w: &WeylElement, roots: &[Root]) -> Vec<Root> {
    roots
        .iter()
        .filter(|r| !w.apply_root(r).is_positive())
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positive_root_counts() {
        assert_eq!(
            RootSystemD::new(2).positive_roots(),
            vec![Root::difference(0, 1), Root::sum(0, 1)]
        );
        assert_eq!(RootSystemD::new(4).positive_roots().len(), 12);
        assert_eq!(RootSystemD::new(8).positive_roots().len(), 56);
    }

    #[test]
    fn rho_values() {
        let r4: Vec<Rational> = RootSystemD::new(4).rho();
        assert_eq!(r4, vec![rat_int(3), rat_int(2), rat_int(1), rat_int(0)]);
        assert_eq!(RootSystemD::new(2).rho(), vec![rat_int(1), rat_int(0)]);
        // <e_1, rho> = n - 1
        for n in 2..=8 {
            assert_eq!(RootSystemD::new(n).rho()[0], rat_int(n as i64 - 1));
        }
    }

    #[test]
    fn coroot_slots() {
        assert_eq!(Root::difference(0, 1).coroot_exponents(2), vec![1, -1]);
        assert_eq!(Root::sum(0, 1).coroot_exponents(2), vec![1, 1]);
        assert_eq!(Root::sum(1, 2).coroot_exponents(4), vec![0, 1, 1, 0]);
    }

    #[test]
    fn weyl_group_orders() {
        for n in 2..=5usize {
            let count = enumerate_weyl(n).unwrap().count();
            let expect = (1usize << (n - 1)) * (1..=n).product::<usize>();
            assert_eq!(count, expect, "order of W(D_{n})");
            let ext = enumerate_extended(n).unwrap().count();
            assert_eq!(ext, 2 * expect);
        }
        assert!(matches!(
            enumerate_weyl(9).err(),
            Some(RootsError::LimitExceeded(9))
        ));
    }

    #[test]
    fn identity_acts_trivially() {
        let id = WeylElement::identity(4);
        let v = vec![3, -1, 0, 7];
        assert_eq!(id.apply_exponents(&v), v);
    }

    #[test]
    fn group_axioms_on_enumerated_elements() {
        let all: Vec<WeylElement> = enumerate_weyl(3).unwrap().collect();
        let id = WeylElement::identity(3);
        for w in &all {
            assert_eq!(w.compose(&w.inverse()), id);
            assert_eq!(w.inverse().compose(w), id);
        }
        // associativity on a deterministic sample of triples
        for (i, a) in all.iter().enumerate().step_by(5) {
            for (j, b) in all.iter().enumerate().step_by(7) {
                let c = &all[(i * 7 + j * 3) % all.len()];
                assert_eq!(a.compose(b).compose(c), a.compose(&b.compose(c)));
            }
        }
    }

    #[test]
    fn action_preserves_root_system() {
        for n in 2..=4usize {
            let system = RootSystemD::new(n);
            let roots = system.positive_roots();
            for w in enumerate_weyl(n).unwrap() {
                for r in &roots {
                    // apply_root panics internally if the image is not a root
                    let img = w.apply_root(r);
                    let back = w.inverse().apply_root(&img);
                    assert_eq!(back, *r);
                }
            }
        }
    }

    #[test]
    fn relative_set_for_two_gl2_blocks() {
        let m = LeviDescriptor::product_gl2(4).unwrap();
        let set = relative_weyl_set(&m).unwrap();
        assert_eq!(set.len(), 8); // 2^m m! block-level signed permutations

        let w0 = w0_all_blocks_minus(&m).unwrap();
        assert!(set.contains(&w0));

        let gens = elementary_symmetries(&m).unwrap();
        assert_eq!(gens.len(), 2);
        for g in &gens {
            assert!(set.contains(g));
        }

        // the two symmetries generate the whole set
        let mut closure: std::collections::BTreeSet<String> = [WeylElement::identity(4)]
            .iter()
            .map(|w| w.to_string())
            .collect();
        let mut frontier = vec![WeylElement::identity(4)];
        while let Some(w) = frontier.pop() {
            for g in &gens {
                let next = g.compose(&w);
                if closure.insert(next.to_string()) {
                    frontier.push(next);
                }
            }
        }
        assert_eq!(closure.len(), set.len());
        for w in &set {
            assert!(closure.contains(&w.to_string()));
        }
    }

    #[test]
    fn relative_set_of_full_group_is_identity() {
        let m = LeviDescriptor::full(4);
        let set = relative_weyl_set(&m).unwrap();
        assert_eq!(set, vec![WeylElement::identity(4)]);
    }

    #[test]
    fn relative_set_minimality_by_coset_scan() {
        for n in [4usize, 6] {
            let m = LeviDescriptor::product_gl2(n).unwrap();
            let system = RootSystemD::new(n);
            let set = relative_weyl_set(&m).unwrap();
            assert_eq!(
                set.len(),
                (1usize << (n / 2)) * (1..=n / 2).product::<usize>()
            );
            // W_M is generated by the within-block transpositions
            let mut levi_group = vec![WeylElement::identity(n)];
            for k in 0..n / 2 {
                let mut next = Vec::new();
                for w in &levi_group {
                    let mut perm: Vec<usize> = (0..n).collect();
                    perm.swap(2 * k, 2 * k + 1);
                    let s = WeylElement::new(perm, vec![false; n]);
                    next.push(w.compose(&s));
                }
                levi_group.extend(next);
            }
            assert_eq!(levi_group.len(), 1 << (n / 2));
            for w in &set {
                let lw = w.length(&system);
                for u in &levi_group {
                    assert!(lw <= w.compose(u).length(&system));
                }
            }
        }
    }

    #[test]
    fn negated_roots_examples() {
        let system = RootSystemD::new(4);
        let roots = system.positive_roots();
        let id = WeylElement::identity(4);
        assert!(negated_roots(&id, &roots).is_empty());

        // At block level, w0 negates every positive restricted root.
        let m = LeviDescriptor::product_gl2(4).unwrap();
        let w0 = w0_all_blocks_minus(&m).unwrap();
        let wb = block_action(&w0, &m).unwrap();
        let restricted = restricted_positive_roots(2);
        assert_eq!(restricted.len(), 4);
        for r in &restricted {
            assert!(negates_restricted(&wb, r), "w0 must negate {r}");
        }

        // A single block swap negates exactly the block difference.
        let gens = elementary_symmetries(&m).unwrap();
        let swap_b = block_action(&gens[0], &m).unwrap();
        let negated: Vec<&RestrictedRoot> = restricted
            .iter()
            .filter(|r| negates_restricted(&swap_b, r))
            .collect();
        assert_eq!(negated, vec![&RestrictedRoot::Diff(0, 1)]);
    }

    #[test]
    fn restricted_simple_root_sets() {
        let m2 = LeviDescriptor::product_gl2(4).unwrap();
        assert_eq!(
            restricted_simple_roots(&m2).unwrap(),
            vec![RestrictedRoot::Diff(0, 1), RestrictedRoot::Twice(1)]
        );
        let m1 = LeviDescriptor::product_gl2(2).unwrap();
        assert_eq!(
            restricted_simple_roots(&m1).unwrap(),
            vec![RestrictedRoot::Twice(0)]
        );
        let m4 = LeviDescriptor::product_gl2(8).unwrap();
        assert_eq!(restricted_simple_roots(&m4).unwrap().len(), 4);
    }

    #[test]
    fn block_action_of_relative_set_is_faithful() {
        let m = LeviDescriptor::product_gl2(4).unwrap();
        let set = relative_weyl_set(&m).unwrap();
        let mut images = std::collections::BTreeSet::new();
        for w in &set {
            let b = block_action(w, &m).expect("relative set elements permute blocks");
            images.insert(b.to_string());
        }
        assert_eq!(images.len(), set.len());
    }
}
