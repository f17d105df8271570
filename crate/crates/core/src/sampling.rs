//! Uniform random field elements, matrices, codes, and isometries.
//!
//! Everything is generic over [`rand::Rng`] so callers control seeding and
//! reproducibility.  A "uniform random code" means a uniform full-row-rank
//! generator matrix, obtained by rejection sampling: rank-deficient draws
//! are discarded and redrawn, which conditions the uniform matrix measure
//! on the full-rank event.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::code::{Isometry, LinearCode};
use crate::error::{Error, Result};
use crate::fqmat::MatrixFq;
use crate::gf::{FieldElement, FieldSpec};

/// A uniform element of the field.
pub fn random_element<R: Rng + ?Sized>(field: &FieldSpec, rng: &mut R) -> FieldElement {
    field
        .element(rng.gen_range(0..field.order()))
        .expect("indices below the order are valid")
}

/// A matrix with independent uniform entries.
pub fn random_matrix<R: Rng + ?Sized>(
    field: &FieldSpec,
    rows: usize,
    cols: usize,
    rng: &mut R,
) -> MatrixFq {
    let mut m = MatrixFq::zero(field.clone(), rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m.set(i, j, random_element(field, rng));
        }
    }
    m
}

/// A uniform matrix conditioned on full row rank, by rejection sampling.
pub fn random_full_rank<R: Rng + ?Sized>(
    field: &FieldSpec,
    rows: usize,
    cols: usize,
    rng: &mut R,
) -> Result<MatrixFq> {
    if rows > cols {
        return Err(Error::DimensionMismatch(format!(
            "{rows} rows cannot be independent in {cols} columns"
        )));
    }
    loop {
        let m = random_matrix(field, rows, cols, rng);
        if m.rank() == rows {
            return Ok(m);
        }
    }
}

/// A uniform invertible square matrix, by rejection sampling.
pub fn random_invertible<R: Rng + ?Sized>(
    field: &FieldSpec,
    size: usize,
    rng: &mut R,
) -> MatrixFq {
    random_full_rank(field, size, size, rng).expect("square shape is always admissible")
}

/// A uniform code of type `[n, r, k]`: a uniform full-rank `k × rn`
/// generator.
pub fn random_code<R: Rng + ?Sized>(
    field: &FieldSpec,
    n: usize,
    r: usize,
    k: usize,
    rng: &mut R,
) -> Result<LinearCode> {
    if k > r * n {
        return Err(Error::DegenerateDimension { k, rn: r * n });
    }
    let g = random_full_rank(field, k, r * n, rng)?;
    LinearCode::from_generator(n, r, g)
}

/// A uniform folded-weight isometry on `n` blocks of width `r`: a uniform
/// block permutation with independent uniform invertible block matrices.
pub fn random_isometry<R: Rng + ?Sized>(
    field: &FieldSpec,
    n: usize,
    r: usize,
    rng: &mut R,
) -> Result<Isometry> {
    let mut sigma: Vec<usize> = (0..n).collect();
    sigma.shuffle(rng);
    let blocks = (0..n).map(|_| random_invertible(field, r, rng)).collect();
    Isometry::new(sigma, blocks)
}
