//! Linear codes over `F_q` whose length-`rn` words are read as `n` blocks of
//! width `r`, measured in the folded Hamming metric.
//!
//! A [`LinearCode`] keeps the generator matrix it was built from together
//! with its reduced row echelon form; the echelon form is the canonical
//! representative, so two codes compare equal exactly when they have the
//! same row space (and the same field and block structure).  The parity-check
//! matrix is derived lazily, once, as the deterministic kernel basis of the
//! canonical generator.
//!
//! The minimum folded distance can be computed two independent ways:
//!
//! * [`DistanceMethod::Exhaustive`] enumerates all `q^k` codewords (guarded
//!   by an explicit budget) and takes the least nonzero folded weight;
//! * [`DistanceMethod::RankBlocks`] finds the smallest `s` such that every
//!   `s`-block column submatrix of the generator has rank `k`, and returns
//!   `d = n - s + 1`; no enumeration is involved.
//!
//! Codes may be restricted (projected) or shortened to any nonempty set of
//! blocks, transformed by block isometries (a block permutation composed
//! with one invertible `r × r` matrix per block — exactly the maps that
//! preserve folded weight), and produced by expanding a code over `F_{q^r}`
//! along an ordered basis.

use std::sync::OnceLock;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::fqmat::MatrixFq;
use crate::gf::{FieldElement, FieldSpec, OrderedBasis};

/// Default cap on the number of codewords an exhaustive pass may visit.
pub const DEFAULT_ENUMERATION_BUDGET: u128 = 1 << 24;

/// How to compute a minimum folded distance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistanceMethod {
    /// Enumerate every codeword; cost `q^k`, subject to a budget.
    Exhaustive,
    /// Rank conditions on block column submatrices of the generator; cost
    /// binomial in `n`, independent of `q^k`.
    RankBlocks,
}

/// The folded Hamming weight: the number of nonzero width-`r` blocks.
///
/// Fails when `r` is zero or does not divide the vector length.
pub fn folded_weight(v: &[FieldElement], r: usize) -> Result<usize> {
    if r == 0 || v.len() % r != 0 {
        return Err(Error::ColumnsNotDivisible { cols: v.len(), r });
    }
    Ok(v.chunks(r).filter(|block| block.iter().any(|c| !c.is_zero())).count())
}

/// The folded Hamming distance between two equal-length vectors.
pub fn folded_distance(a: &[FieldElement], b: &[FieldElement], r: usize, field: &FieldSpec) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch(format!(
            "vectors of lengths {} and {} have no distance",
            a.len(),
            b.len()
        )));
    }
    let diff: Vec<FieldElement> = a.iter().zip(b).map(|(&x, &y)| field.sub(x, y)).collect();
    folded_weight(&diff, r)
}

/// A `k`-dimensional linear code of block length `n` and block width `r`
/// over a fixed finite field (so the ambient space is `F_q^{rn}`).
///
/// The zero code (`k = 0`) is representable; its minimum distance is
/// undefined and every distance query on it fails with
/// [`Error::ZeroCodeDistance`].
#[derive(Clone, Debug)]
pub struct LinearCode {
    field: FieldSpec,
    n: usize,
    r: usize,
    k: usize,
    /// The generator as supplied by the caller (or constructed), `k × rn`.
    generator: MatrixFq,
    /// Reduced row echelon form of `generator`; the canonical representative.
    canonical: MatrixFq,
    /// Deterministic kernel basis of `canonical`, computed on first use.
    parity: OnceLock<MatrixFq>,
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.n == other.n
            && self.r == other.r
            && self.canonical == other.canonical
    }
}
impl Eq for LinearCode {}

impl LinearCode {
    /// Wraps a full-row-rank generator matrix as a code with `n` blocks of
    /// width `r`.  The matrix must have `r·n` columns and at most `r·n`
    /// rows, each row independent; rank-deficient input is rejected rather
    /// than silently reduced.
    pub fn from_generator(n: usize, r: usize, generator: MatrixFq) -> Result<Self> {
        if r == 0 {
            return Err(Error::OutOfRange("block width r must be at least 1".into()));
        }
        if generator.cols() != r * n {
            return Err(Error::DimensionMismatch(format!(
                "generator has {} columns, expected r*n = {}",
                generator.cols(),
                r * n
            )));
        }
        let k = generator.rows();
        if k > r * n {
            return Err(Error::DimensionMismatch(format!(
                "{} rows exceed the ambient dimension {}",
                k,
                r * n
            )));
        }
        let rr = generator.rref();
        if rr.rank != k {
            return Err(Error::RankDeficient { expected: k, actual: rr.rank });
        }
        Ok(LinearCode {
            field: generator.field().clone(),
            n,
            r,
            k,
            generator,
            canonical: rr.rref,
            parity: OnceLock::new(),
        })
    }

    /// Convenience wrapper over [`from_generator`](Self::from_generator)
    /// taking rows of canonical element indices.
    pub fn from_index_rows(field: FieldSpec, n: usize, r: usize, rows: &[Vec<u64>]) -> Result<Self> {
        let g = if rows.is_empty() {
            MatrixFq::zero(field, 0, r * n)
        } else {
            MatrixFq::from_index_rows(field, rows)?
        };
        Self::from_generator(n, r, g)
    }

    /// The zero code: dimension 0, no nonzero words.
    pub fn zero_code(field: FieldSpec, n: usize, r: usize) -> Result<Self> {
        Self::from_generator(n, r, MatrixFq::zero(field, 0, r * n))
    }

    /// The full space `F_q^{rn}` as a code.
    pub fn full_space(field: FieldSpec, n: usize, r: usize) -> Result<Self> {
        Self::from_generator(n, r, MatrixFq::identity(field, r * n))
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// Number of blocks.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Block width.
    pub fn r(&self) -> usize {
        self.r
    }

    /// Dimension over `F_q`.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Ambient length `r·n`.
    pub fn len(&self) -> usize {
        self.r * self.n
    }

    /// True for the zero code.
    pub fn is_empty(&self) -> bool {
        self.k == 0
    }

    /// The generator matrix as supplied at construction.
    pub fn generator(&self) -> &MatrixFq {
        &self.generator
    }

    /// The canonical (reduced row echelon) generator.
    pub fn canonical_generator(&self) -> &MatrixFq {
        &self.canonical
    }

    /// The canonical parity-check matrix: the deterministic kernel basis of
    /// the canonical generator, shape `(rn - k) × rn`.  Computed once.
    pub fn parity(&self) -> &MatrixFq {
        self.parity.get_or_init(|| self.canonical.kernel_basis())
    }

    /// The dual code under the standard inner product on `F_q^{rn}`, with
    /// the same block structure.
    pub fn dual(&self) -> LinearCode {
        LinearCode::from_generator(self.n, self.r, self.parity().clone())
            .expect("a kernel basis has full row rank")
    }

    /// Number of codewords `q^k` as a `u128` if it fits the enumeration
    /// budget comparison.
    fn codeword_count_within(&self, budget: u128) -> Result<u128> {
        let q = self.field.order() as u128;
        let mut count: u128 = 1;
        for _ in 0..self.k {
            count = count
                .checked_mul(q)
                .filter(|&c| c <= budget)
                .ok_or_else(|| {
                    Error::BudgetExceeded(format!(
                        "q^k = {}^{} exceeds the budget of {} codewords",
                        self.field.order(),
                        self.k,
                        budget
                    ))
                })?;
        }
        Ok(count)
    }

    /// Encodes a message of length `k` against the canonical generator.
    pub fn encode(&self, message: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if message.len() != self.k {
            return Err(Error::DimensionMismatch(format!(
                "message length {} does not match dimension {}",
                message.len(),
                self.k
            )));
        }
        let f = &self.field;
        let mut word = vec![f.zero(); self.len()];
        for (i, &m) in message.iter().enumerate() {
            if m.is_zero() {
                continue;
            }
            for (j, slot) in word.iter_mut().enumerate() {
                *slot = f.add(*slot, f.mul(m, self.canonical.get(i, j)));
            }
        }
        Ok(word)
    }

    /// True when `word` satisfies every parity check.
    pub fn contains(&self, word: &[FieldElement]) -> Result<bool> {
        if word.len() != self.len() {
            return Err(Error::DimensionMismatch(format!(
                "word length {} does not match ambient length {}",
                word.len(),
                self.len()
            )));
        }
        let f = &self.field;
        let h = self.parity();
        for i in 0..h.rows() {
            let mut acc = f.zero();
            for (j, &w) in word.iter().enumerate() {
                acc = f.add(acc, f.mul(h.get(i, j), w));
            }
            if !acc.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Visits every codeword exactly once, in lexicographic message order
    /// (first message symbol most significant, field elements in canonical
    /// order), starting with the zero word.  Fails up front when `q^k`
    /// exceeds `budget`.
    pub fn enumerate_codewords<F>(&self, budget: u128, mut visit: F) -> Result<()>
    where
        F: FnMut(&[FieldElement]),
    {
        self.codeword_count_within(budget)?;
        let mut word = vec![self.field.zero(); self.len()];
        self.enumerate_rec(0, &mut word, &mut visit);
        Ok(())
    }

    fn enumerate_rec<F>(&self, depth: usize, word: &mut Vec<FieldElement>, visit: &mut F)
    where
        F: FnMut(&[FieldElement]),
    {
        if depth == self.k {
            visit(word);
            return;
        }
        let f = self.field.clone();
        let row: Vec<FieldElement> = self.canonical.row(depth).to_vec();
        let mut prev = f.zero();
        for m in f.elements() {
            let delta = f.sub(m, prev);
            if !delta.is_zero() {
                for (slot, &g) in word.iter_mut().zip(&row) {
                    *slot = f.add(*slot, f.mul(delta, g));
                }
            }
            prev = m;
            self.enumerate_rec(depth + 1, word, visit);
        }
        // Undo this digit before returning to the caller.
        if !prev.is_zero() {
            for (slot, &g) in word.iter_mut().zip(&row) {
                *slot = f.sub(*slot, f.mul(prev, g));
            }
        }
    }

    /// Minimum folded distance with the default enumeration budget.
    pub fn min_distance(&self, method: DistanceMethod) -> Result<usize> {
        self.min_distance_with_budget(method, DEFAULT_ENUMERATION_BUDGET)
    }

    /// Minimum folded distance; the budget only applies to
    /// [`DistanceMethod::Exhaustive`].
    pub fn min_distance_with_budget(&self, method: DistanceMethod, budget: u128) -> Result<usize> {
        if self.k == 0 {
            return Err(Error::ZeroCodeDistance);
        }
        match method {
            DistanceMethod::Exhaustive => {
                let r = self.r;
                let mut best = self.n + 1;
                self.enumerate_codewords(budget, |word| {
                    let w = word
                        .chunks(r)
                        .filter(|block| block.iter().any(|c| !c.is_zero()))
                        .count();
                    if w > 0 && w < best {
                        best = w;
                    }
                })?;
                debug_assert!(best <= self.n, "a nonzero code has a nonzero word");
                Ok(best)
            }
            DistanceMethod::RankBlocks => {
                // d is the largest value such that every (n-d+1)-block
                // column submatrix of the generator has rank k; search for
                // the smallest s with that property and return n - s + 1.
                let s_min = self.k.div_ceil(self.r);
                for s in s_min..=self.n {
                    let all_full = (0..self.n).combinations(s).all(|blocks| {
                        self.canonical
                            .block_submatrix(&blocks, self.r)
                            .expect("block indices are in range")
                            .rank()
                            == self.k
                    });
                    if all_full {
                        return Ok(self.n - s + 1);
                    }
                }
                unreachable!("the full block set always has rank k")
            }
        }
    }

    /// The restriction `C^I`: every codeword projected to the blocks in
    /// `I` (0-based, ascending output order).  `I` must be nonempty.
    pub fn restrict(&self, blocks: &[usize]) -> Result<LinearCode> {
        let sub = self.canonical.block_submatrix(blocks, self.r)?;
        let rr = sub.rref();
        let rows: Vec<Vec<FieldElement>> =
            (0..rr.rank).map(|i| rr.rref.row(i).to_vec()).collect();
        let n_new = sub.cols() / self.r;
        let g = if rows.is_empty() {
            MatrixFq::zero(self.field.clone(), 0, sub.cols())
        } else {
            MatrixFq::from_rows(self.field.clone(), rows)?
        };
        LinearCode::from_generator(n_new, self.r, g)
    }

    /// The shortening `C_I`: codewords vanishing on every block outside
    /// `I`, projected to `I`.  `I` must be nonempty.
    pub fn shorten(&self, blocks: &[usize]) -> Result<LinearCode> {
        let mut sorted = blocks.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.is_empty() {
            return Err(Error::EmptyBlockSet);
        }
        if let Some(&bad) = sorted.iter().find(|&&b| b >= self.n) {
            return Err(Error::BlockIndexOutOfRange { index: bad, n: self.n });
        }
        let complement: Vec<usize> = (0..self.n).filter(|b| !sorted.contains(b)).collect();
        if complement.is_empty() {
            // Shortening at every block is the identity.
            return LinearCode::from_generator(self.n, self.r, self.canonical.clone());
        }
        // Messages x with x·G_J = 0 parameterize the codewords vanishing on
        // the complement J; their projections to I generate the shortening.
        let g_out = self.canonical.block_submatrix(&complement, self.r)?;
        let coeffs = g_out.transpose().kernel_basis(); // rows: x with x·G_J = 0
        let g_in = self.canonical.block_submatrix(&sorted, self.r)?;
        let projected = coeffs.mul(&g_in)?;
        let rr = projected.rref();
        let rows: Vec<Vec<FieldElement>> =
            (0..rr.rank).map(|i| rr.rref.row(i).to_vec()).collect();
        let g = if rows.is_empty() {
            MatrixFq::zero(self.field.clone(), 0, g_in.cols())
        } else {
            MatrixFq::from_rows(self.field.clone(), rows)?
        };
        LinearCode::from_generator(sorted.len(), self.r, g)
    }

    /// Applies a block isometry, producing the image code.
    pub fn apply_isometry(&self, iso: &Isometry) -> Result<LinearCode> {
        if iso.n() != self.n || iso.r() != self.r || iso.field() != &self.field {
            return Err(Error::ParamMismatch(
                "isometry and code disagree on field or block structure".into(),
            ));
        }
        if self.k == 0 {
            return LinearCode::zero_code(self.field.clone(), self.n, self.r);
        }
        let rows: Vec<Vec<FieldElement>> = (0..self.k)
            .map(|i| iso.apply_to_word(self.generator.row(i)))
            .collect::<Result<Vec<_>>>()?;
        let g = MatrixFq::from_rows(self.field.clone(), rows)?;
        LinearCode::from_generator(self.n, self.r, g)
    }

    /// Formats the type as `[n,r,k]`.
    pub fn params_string(&self) -> String {
        format!("[{},{},{}]", self.n, self.r, self.k)
    }

    /// Formats the type as `[n,r,k,d]` given a distance.
    pub fn params_string_with_distance(&self, d: usize) -> String {
        format!("[{},{},{},{}]", self.n, self.r, self.k, d)
    }
}

/// Expands a code over the large field of `basis.extension()` into a code
/// over the base field: each symbol becomes its width-`r` coordinate block.
///
/// `generator` must be a full-row-rank matrix over the large field (it may
/// have zero rows, giving the zero code).  Expansion is an isometry from the
/// Hamming metric on `F_{q^r}^n` to the folded metric on `F_q^{rn}`, so
/// distances are preserved.
pub fn expand_code(basis: &OrderedBasis, generator: &MatrixFq) -> Result<LinearCode> {
    let ext = basis.extension();
    if generator.field() != ext.ext() {
        return Err(Error::ParamMismatch(
            "generator entries do not live in the extension field".into(),
        ));
    }
    let n = generator.cols();
    let r = ext.r();
    let kappa = generator.rows();
    if generator.rank() != kappa {
        return Err(Error::RankDeficient { expected: kappa, actual: generator.rank() });
    }
    let base = ext.base().clone();
    if kappa == 0 {
        return LinearCode::zero_code(base, n, r);
    }
    // An F_q-spanning set of the big-field row space: every basis multiple
    // of every row, expanded coordinate-wise.
    let big = ext.ext();
    let mut rows = Vec::with_capacity(kappa * r);
    for i in 0..kappa {
        for &beta in basis.elements() {
            let scaled: Vec<FieldElement> =
                generator.row(i).iter().map(|&g| big.mul(beta, g)).collect();
            rows.push(basis.expand_vector(&scaled));
        }
    }
    let g = MatrixFq::from_rows(base, rows)?;
    LinearCode::from_generator(n, r, g)
}

/// A folded-weight isometry of `F_q^{rn}`: a permutation `σ` of the blocks
/// composed with an invertible `r × r` matrix per block.
///
/// Acting on a word `c = (c_1, …, c_n)` (row blocks of width `r`):
/// block `i` of the image is `c_{σ(i)} · A_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isometry {
    /// `sigma[i]` is the source block feeding output block `i` (0-based).
    sigma: Vec<usize>,
    /// One invertible `r × r` matrix per output block.
    blocks: Vec<MatrixFq>,
}

impl Isometry {
    /// Validates a permutation and per-block invertible matrices.
    pub fn new(sigma: Vec<usize>, blocks: Vec<MatrixFq>) -> Result<Self> {
        let n = sigma.len();
        if blocks.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "{} block matrices for {} blocks",
                blocks.len(),
                n
            )));
        }
        if n == 0 {
            return Err(Error::EmptyBlockSet);
        }
        let mut seen = vec![false; n];
        for &s in &sigma {
            if s >= n || seen[s] {
                return Err(Error::InvalidPermutation);
            }
            seen[s] = true;
        }
        let field = blocks[0].field().clone();
        let r = blocks[0].rows();
        for (i, b) in blocks.iter().enumerate() {
            if b.field() != &field || b.rows() != r || b.cols() != r {
                return Err(Error::DimensionMismatch(format!(
                    "block {i} is {}x{}, expected {r}x{r} over one field",
                    b.rows(),
                    b.cols()
                )));
            }
            if b.inverse().is_err() {
                return Err(Error::SingularBlock(i));
            }
        }
        Ok(Isometry { sigma, blocks })
    }

    /// The identity isometry on `n` blocks of width `r`.
    pub fn identity(field: FieldSpec, n: usize, r: usize) -> Result<Self> {
        let blocks = (0..n).map(|_| MatrixFq::identity(field.clone(), r)).collect();
        Self::new((0..n).collect(), blocks)
    }

    pub fn n(&self) -> usize {
        self.sigma.len()
    }

    pub fn r(&self) -> usize {
        self.blocks[0].rows()
    }

    pub fn field(&self) -> &FieldSpec {
        self.blocks[0].field()
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn blocks(&self) -> &[MatrixFq] {
        &self.blocks
    }

    /// Applies the isometry to one word.
    pub fn apply_to_word(&self, word: &[FieldElement]) -> Result<Vec<FieldElement>> {
        let (n, r) = (self.n(), self.r());
        if word.len() != n * r {
            return Err(Error::DimensionMismatch(format!(
                "word length {} does not match {}x{} blocks",
                word.len(),
                n,
                r
            )));
        }
        let f = self.field();
        let mut out = vec![f.zero(); n * r];
        for i in 0..n {
            let src = &word[self.sigma[i] * r..(self.sigma[i] + 1) * r];
            let a = &self.blocks[i];
            for j in 0..r {
                let mut acc = f.zero();
                for (l, &s) in src.iter().enumerate() {
                    acc = f.add(acc, f.mul(s, a.get(l, j)));
                }
                out[i * r + j] = acc;
            }
        }
        Ok(out)
    }

    /// The `rn × rn` matrix `T` with `apply_to_word(x) = x · T`: block
    /// `(σ(i), i)` of `T` is `A_i`, all other blocks zero.
    pub fn action_matrix(&self) -> MatrixFq {
        let (n, r) = (self.n(), self.r());
        let f = self.field().clone();
        let mut t = MatrixFq::zero(f, n * r, n * r);
        for i in 0..n {
            for l in 0..r {
                for j in 0..r {
                    t.set(self.sigma[i] * r + l, i * r + j, self.blocks[i].get(l, j));
                }
            }
        }
        t
    }

    /// The isometry mapping the dual of a code to the dual of this
    /// isometry's image: same block permutation, with each `A_i` replaced by
    /// the transposed inverse `(A_i^{-1})ᵀ`.
    pub fn dual_isometry(&self) -> Isometry {
        let blocks = self
            .blocks
            .iter()
            .map(|a| a.inverse().expect("isometry blocks are invertible").transpose())
            .collect();
        Isometry { sigma: self.sigma.clone(), blocks }
    }

    /// The inverse isometry.
    pub fn inverse(&self) -> Isometry {
        let n = self.n();
        let mut sigma_inv = vec![0usize; n];
        for (i, &s) in self.sigma.iter().enumerate() {
            sigma_inv[s] = i;
        }
        // Output block j of the inverse must recover source block j: it
        // pulls from image block sigma_inv[j] and undoes that block's matrix.
        let blocks = (0..n)
            .map(|j| {
                self.blocks[sigma_inv[j]]
                    .inverse()
                    .expect("isometry blocks are invertible")
            })
            .collect();
        Isometry { sigma: sigma_inv, blocks }
    }
}
