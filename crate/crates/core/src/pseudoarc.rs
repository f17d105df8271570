//! Pseudo arcs: the finite-geometry counterpart of codes in the folded
//! metric.
//!
//! A pseudo arc of type `[n, r, m, t]` is a tuple of `n` subspaces of
//! `F_q^m`, each of dimension `r`, such that any `t` of them are in direct
//! sum (and `t` is maximal with that property).  A code of type
//! `[n, r, k, d]` with `1 ≤ k ≤ rn - r` corresponds to the arc spanned by
//! the `n` column blocks of its parity-check matrix, and the parameters
//! translate as `m = rn - k`, `t = d - 1`; conversely a nondegenerate arc
//! yields the code whose parity-check matrix is the concatenation of its
//! basis matrices, of type `[n, r, rn - m, t + 1]`.
//!
//! Equivalence of arcs is witnessed by an invertible change of the ambient
//! space: for a code `C` with canonical parity-check `H` and an isometry
//! with action matrix `T` (so the image code is `C·T` with canonical
//! parity-check `H'`), there is a unique invertible `m × m` matrix `B`
//! with `B·H = H'·Tᵀ`.  [`arc_equivalence_witness`] solves for `B`
//! exactly and [`verify_arc_equivalence`] replays the equation.

use itertools::Itertools;

use crate::code::{Isometry, LinearCode};
use crate::error::{Error, Result};
use crate::fqmat::MatrixFq;
use crate::gf::FieldSpec;

/// A tuple of `n` subspaces of `F_q^m`, each given by an `m × r` basis
/// matrix of full column rank `r`.
#[derive(Clone, Debug, PartialEq)]
pub struct PseudoArc {
    field: FieldSpec,
    m: usize,
    r: usize,
    subspaces: Vec<MatrixFq>,
}

/// The type `[n, r, m, t]` of an arc, plus nondegeneracy (whether the
/// subspaces together span `F_q^m`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArcParams {
    pub n: usize,
    pub r: usize,
    pub m: usize,
    /// Largest `t` such that every `t` of the subspaces are in direct sum.
    pub t: usize,
    pub nondegenerate: bool,
}

impl PseudoArc {
    /// Validates a nonempty family of `m × r` basis matrices, each of rank
    /// exactly `r`, over one field.
    pub fn new(subspaces: Vec<MatrixFq>) -> Result<Self> {
        if subspaces.is_empty() {
            return Err(Error::EmptyBlockSet);
        }
        let field = subspaces[0].field().clone();
        let m = subspaces[0].rows();
        let r = subspaces[0].cols();
        if r == 0 || m < r {
            return Err(Error::DualTooSmall { m, r });
        }
        for (index, s) in subspaces.iter().enumerate() {
            if s.field() != &field || s.rows() != m || s.cols() != r {
                return Err(Error::DimensionMismatch(format!(
                    "subspace {index} is {}x{} over a possibly different field, expected {m}x{r}",
                    s.rows(),
                    s.cols()
                )));
            }
            if s.rank() != r {
                return Err(Error::BlockRankDeficient { index });
            }
        }
        Ok(PseudoArc { field, m, r, subspaces })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// Ambient dimension.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Dimension of each subspace.
    pub fn r(&self) -> usize {
        self.r
    }

    /// Number of subspaces.
    pub fn n(&self) -> usize {
        self.subspaces.len()
    }

    pub fn subspaces(&self) -> &[MatrixFq] {
        &self.subspaces
    }

    /// All basis matrices concatenated side by side: `m × rn`.
    pub fn concatenation(&self) -> MatrixFq {
        let mut h = self.subspaces[0].clone();
        for s in &self.subspaces[1..] {
            h = h.hstack(s).expect("subspaces share row count");
        }
        h
    }

    /// Computes the type `[n, r, m, t]`: `t` grows while every `t`-subset
    /// of subspaces has concatenated rank `t·r`, a monotone property.
    /// Refuses `n > 20` (the scan is exponential in `n`).
    pub fn params(&self) -> Result<ArcParams> {
        let n = self.n();
        if n > 20 {
            return Err(Error::BudgetExceeded(format!(
                "direct-sum scan over subsets of {n} subspaces; refusing n > 20"
            )));
        }
        let mut t = 1;
        'grow: for size in 2..=n {
            if size * self.r > self.m {
                break;
            }
            for subset in (0..n).combinations(size) {
                let mut concat = self.subspaces[subset[0]].clone();
                for &i in &subset[1..] {
                    concat = concat.hstack(&self.subspaces[i])?;
                }
                if concat.rank() != size * self.r {
                    break 'grow;
                }
            }
            t = size;
        }
        let nondegenerate = self.concatenation().rank() == self.m;
        Ok(ArcParams { n, r: self.r, m: self.m, t, nondegenerate })
    }
}

/// The arc of a code: subspace `i` is spanned by the `i`-th column block
/// of the canonical parity-check matrix.
///
/// Needs `m = rn - k ≥ r`; a column block of rank below `r` (which happens
/// exactly when the code has minimum distance 1) is reported with its
/// index.  The result is always nondegenerate, and its type is
/// `[n, r, rn - k, d - 1]`.
pub fn arc_from_code(code: &LinearCode) -> Result<PseudoArc> {
    let (n, r, k) = (code.n(), code.r(), code.k());
    let m = r * n - k;
    if m < r {
        return Err(Error::DualTooSmall { m, r });
    }
    let h = code.parity();
    let subspaces: Vec<MatrixFq> = (0..n)
        .map(|i| h.columns(&((i * r)..(i + 1) * r).collect::<Vec<_>>()))
        .collect::<Result<_>>()?;
    PseudoArc::new(subspaces)
}

/// The code of an arc: the concatenated basis matrices act as a
/// parity-check matrix, giving a code of type `[n, r, rn - m, t + 1]`.
///
/// The arc must be nondegenerate; the zero code (`m = rn`) is a legitimate
/// outcome.
pub fn code_from_arc(arc: &PseudoArc) -> Result<LinearCode> {
    let h = arc.concatenation();
    if h.rank() != arc.m() {
        return Err(Error::DegenerateArc);
    }
    LinearCode::from_generator(arc.n(), arc.r(), h.kernel_basis())
}

/// Solves for the invertible `m × m` matrix `B` with `B·H = H'·Tᵀ`, where
/// `H`, `H'` are the canonical parity-check matrices of `code` and of its
/// image under `iso`, and `T` is the isometry's action matrix.  `B`
/// witnesses that the two arcs are equivalent.
pub fn arc_equivalence_witness(code: &LinearCode, iso: &Isometry) -> Result<MatrixFq> {
    let (n, r, k) = (code.n(), code.r(), code.k());
    if k == r * n {
        return Err(Error::DegenerateDimension { k, rn: r * n });
    }
    let h = code.parity();
    let image = code.apply_isometry(iso)?;
    let rhs = image.parity().mul(&iso.action_matrix().transpose())?;
    // H has full row rank m; restricting both sides to its pivot columns
    // gives an invertible system for B.
    let pivots = h.rref().pivot_cols;
    let b = rhs.columns(&pivots)?.mul(&h.columns(&pivots)?.inverse()?)?;
    if b.mul(h)? != rhs {
        // The equation is consistent by construction; reaching this line
        // would mean the parity machinery itself is broken.
        return Err(Error::ParamMismatch("no witness solves the transport equation".into()));
    }
    Ok(b)
}

/// Replays the transport equation: true when `b` is invertible and
/// `b·H = H'·Tᵀ` for the canonical parity-check matrices of `code` and of
/// its image under `iso`.
pub fn verify_arc_equivalence(code: &LinearCode, iso: &Isometry, b: &MatrixFq) -> Result<bool> {
    let m = r_times_n_minus_k(code);
    if b.rows() != m || b.cols() != m || b.field() != code.field() {
        return Ok(false);
    }
    if m > 0 && b.inverse().is_err() {
        return Ok(false);
    }
    let image = code.apply_isometry(iso)?;
    let rhs = image.parity().mul(&iso.action_matrix().transpose())?;
    Ok(b.mul(code.parity())? == rhs)
}

fn r_times_n_minus_k(code: &LinearCode) -> usize {
    code.r() * code.n() - code.k()
}
