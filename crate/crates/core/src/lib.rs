//! Exact-arithmetic combinatorics of dominant walks, skew and periodic
//! tableaux, and the rectangular representations of the type-A double
//! affine Hecke algebras, with symbolic verification of every defining
//! relation over the rational function field Q(v).
//!
//! All scalars live in Q(v) where v plays the role of t^{1/N}, so that
//! the specialized parameters t = v^N, q = v^{-2kN}, s = v and
//! Upsilon = v^{1-N^2} are monomials and every identity is decidable.

pub mod affine;
pub mod daha;
pub mod periodic;
pub mod scalar;
pub mod schur_weyl;
pub mod tableaux;
pub mod walks;
pub mod weight;

pub use scalar::{FieldElement, LaurentPoly, ParamTable, Rat, ScalarError};
pub use walks::Flavor;
