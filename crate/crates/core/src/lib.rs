//! Exact arithmetic for linear codes measured in the folded Hamming metric.
//!
//! A length-`rn` vector over `F_q` is read as `n` consecutive blocks of width
//! `r`; the folded weight of a vector is the number of nonzero blocks.  This
//! crate provides:
//!
//! * [`gf`] — explicit finite fields `F_{p^e}`, subfield extensions, traces,
//!   dual bases, and block expansion of vectors;
//! * [`fqmat`] — dense exact linear algebra (RREF, rank, kernels) over any
//!   [`gf::FieldSpec`];
//! * [`code`] — linear codes with block structure: duals, minimum folded
//!   distance, restriction/shortening to block subsets, block isometries,
//!   and expansion of codes over `F_{q^r}` to codes over `F_q`;
//! * [`qmds`] — Singleton-type bounds for the folded metric and the
//!   MDS / QMDS / dually-QMDS classification, by distance or by block-minor
//!   rank conditions;
//! * [`wdist`] — weight distributions: exhaustive counting, the closed form
//!   for dually QMDS codes, MacWilliams identities for the folded metric, and
//!   reconstruction of a distribution from its low-weight head;
//! * [`constructions`] — explicit families: polynomial ideal codes (always
//!   QMDS; dually QMDS for split moduli), a long one-weight binary family,
//!   QMDS subcodes, and duals of block repetition codes;
//! * [`bounds`] — length and distance bounds for (dually) QMDS codes plus a
//!   seeded random-sampling density experiment;
//! * [`pseudoarc`] — pseudo arcs of `r`-dimensional subspaces and the exact
//!   correspondence between arcs and parity-check matrices;
//! * [`serialize`] — JSON interchange for fields, codes, arcs, isometries,
//!   and weight distributions.
//!
//! All arithmetic is exact: field elements are residue polynomials, counts
//! are arbitrary-precision integers, and no floating point is used anywhere.

pub mod binom;
pub mod bounds;
pub mod code;
pub mod constructions;
pub mod error;
pub mod fqmat;
pub mod gf;
pub mod poly;
pub mod pseudoarc;
pub mod qmds;
pub mod sampling;
pub mod serialize;
pub mod wdist;

pub use error::{Error, Result};
pub use gf::{Extension, FieldElement, FieldSpec, OrderedBasis};
