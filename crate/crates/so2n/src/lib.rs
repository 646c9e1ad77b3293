//! Exact computations for the split even special orthogonal group `SO_2n`.
//!
//! The crate mechanizes a family of computations around the residual
//! spectrum of `SO_2n` and its twisted endoscopy with `GL_2n`:
//!
//! * [`algebra`] — exact rationals, `±p^{a/2} t^b` monomials, Laurent
//!   polynomials, affine forms, `p`-adic absolute values;
//! * [`roots`] — the root system `D_n`, its Weyl group as signed
//!   permutations, Levi data, and relative Weyl sets;
//! * [`lfunctions`] — an axiom table for partial L-function quotients and
//!   pole-order bookkeeping for intertwining-operator products;
//! * [`eisenstein`] — the residue point, Langlands' square-integrability
//!   cone test, and Kato's irreducibility/cyclicity criterion;
//! * [`hecke`] — Weyl characters, Satake transforms of minimal weights,
//!   Hecke matrices, eigenvalue bounds and Weyl-conjugacy tests;
//! * [`params`] — Arthur parameters: validation, Hecke-matrix synthesis,
//!   residual/cuspidal classification, packet descriptors;
//! * [`singular`] — alternating forms on the Siegel unipotent radical and
//!   the degeneracy argument;
//! * [`endoscopy`] — the norm map, ordinary and twisted discriminants, the
//!   transfer factor, and exact character and trace identities.
//!
//! Every computation is exact: integers are arbitrary precision, `p` and
//! `t` are formal, and floating point appears only at the final comparison
//! step of the bound computations.

pub mod algebra;
pub mod eisenstein;
pub mod endoscopy;
pub mod hecke;
pub mod lfunctions;
pub mod params;
pub mod roots;
pub mod singular;
