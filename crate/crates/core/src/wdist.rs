//! Folded weight distributions: exhaustive counting, the closed form for
//! dually QMDS codes, the transform identity relating a code to its dual,
//! and reconstruction of the high-weight tail from the dual distance.
//!
//! The distribution of a code is the vector `(A_0, …, A_n)` where `A_j`
//! counts codewords of folded weight exactly `j`.  For a dually QMDS code
//! of type `[n, r, k]` over `F_q` with `d = n - ⌈k/r⌉ + 1`:
//!
//! ```text
//! A_j = C(n,j) · Σ_{i=0}^{j-d} (-1)^i C(j,i) (q^{k-r(n-j+i)} - 1),   d ≤ j ≤ n.
//! ```
//!
//! Evaluating the alternating sum at parameters no dually QMDS code can
//! have may produce a negative count; that is reported as
//! [`Error::NegativeCount`] rather than clamped, since it certifies
//! non-existence.
//!
//! The distributions of a code and its dual are linked, for `0 ≤ v ≤ n`, by
//!
//! ```text
//! Σ_{j=0}^{n-v} C(n-j, v) A_j  =  q^{k-rv} · Σ_{j=0}^{v} C(n-j, n-v) A⊥_j,
//! ```
//!
//! which [`macwilliams_check`] verifies in exact integers by scaling both
//! sides with `q^{rv}`.  Because `A⊥_1 = … = A⊥_{d⊥-1} = 0`, the instances
//! `v < d⊥` determine the tail `A_{n-d⊥+1}, …, A_n` from the earlier counts;
//! the resulting Pascal-style linear system is inverted exactly by the
//! matrix pair of [`PascalPair`].

use num::bigint::Sign;
use num::{BigInt, BigUint, One, Zero};

use crate::binom::binom;
use crate::code::{LinearCode, DEFAULT_ENUMERATION_BUDGET};
use crate::error::{Error, Result};

/// The folded weight distribution of a code of type `[n, r, k]` over the
/// field with `q` elements: `counts[j] = A_j` for `0 ≤ j ≤ n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution {
    q: u64,
    n: usize,
    r: usize,
    k: usize,
    counts: Vec<BigUint>,
}

impl WeightDistribution {
    /// Wraps a counts vector; it must have length `n + 1` and sum to `q^k`.
    pub fn new(q: u64, n: usize, r: usize, k: usize, counts: Vec<BigUint>) -> Result<Self> {
        if counts.len() != n + 1 {
            return Err(Error::DimensionMismatch(format!(
                "{} counts for {} weights",
                counts.len(),
                n + 1
            )));
        }
        let total: BigUint = counts.iter().sum();
        if total != BigUint::from(q).pow(k as u32) {
            return Err(Error::ParamMismatch(format!(
                "counts sum to {total}, expected q^k = {q}^{k}"
            )));
        }
        Ok(WeightDistribution { q, n, r, k, counts })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// All counts, index `j` holding `A_j`.
    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// `A_j`.
    pub fn count(&self, j: usize) -> &BigUint {
        &self.counts[j]
    }

    /// The least `j ≥ 1` with `A_j > 0` — the minimum distance, absent for
    /// the zero code.
    pub fn min_positive_weight(&self) -> Option<usize> {
        (1..=self.n).find(|&j| !self.counts[j].is_zero())
    }

    /// The counts joined with commas: `1,0,3,12`.
    pub fn counts_string(&self) -> String {
        self.counts.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// Counts every codeword's folded weight with the default budget.
pub fn wdist_exhaustive(code: &LinearCode) -> Result<WeightDistribution> {
    wdist_exhaustive_with_budget(code, DEFAULT_ENUMERATION_BUDGET)
}

/// Counts every codeword's folded weight; fails up front when `q^k`
/// exceeds `budget`.
pub fn wdist_exhaustive_with_budget(code: &LinearCode, budget: u128) -> Result<WeightDistribution> {
    let (n, r) = (code.n(), code.r());
    let mut tally = vec![0u128; n + 1];
    code.enumerate_codewords(budget, |word| {
        let w = word.chunks(r).filter(|b| b.iter().any(|c| !c.is_zero())).count();
        tally[w] += 1;
    })?;
    let counts = tally.into_iter().map(BigUint::from).collect();
    WeightDistribution::new(code.field().order(), n, r, code.k(), counts)
}

/// `q^e` as a `BigInt`.
fn q_pow(q: u64, e: usize) -> BigInt {
    BigInt::from(q).pow(e as u32)
}

/// The closed-form distribution every dually QMDS code of type `[n, r, k]`
/// over `F_q` has.  Returns [`Error::NegativeCount`] when the alternating
/// sum goes negative, certifying that no such code exists.
pub fn wdist_formula(q: u64, n: usize, r: usize, k: usize) -> Result<WeightDistribution> {
    if q < 2 {
        return Err(Error::OutOfRange(format!("field order {q} is below 2")));
    }
    if r == 0 || n == 0 {
        return Err(Error::OutOfRange("need n ≥ 1 and r ≥ 1".into()));
    }
    if k == 0 || k > r * n {
        return Err(Error::DegenerateDimension { k, rn: r * n });
    }
    let d = n - k.div_ceil(r) + 1;
    let mut counts = vec![BigUint::zero(); n + 1];
    counts[0] = BigUint::one();
    for j in d..=n {
        let mut sum = BigInt::zero();
        for i in 0..=(j - d) {
            // Within this range k - r(n - j + i) ≥ k - r(⌈k/r⌉ - 1) ≥ 1.
            let exponent = k - r * (n - j + i);
            let term = BigInt::from(binom(j, i)) * (q_pow(q, exponent) - BigInt::one());
            if i % 2 == 0 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        let a_j = BigInt::from(binom(n, j)) * sum;
        if a_j.sign() == Sign::Minus {
            return Err(Error::NegativeCount { j, value: a_j.to_string() });
        }
        counts[j] = a_j.to_biguint().expect("sign checked");
    }
    WeightDistribution::new(q, n, r, k, counts)
}

/// Exact integer residuals of the transform identity between a code's
/// distribution and its dual's, one per `v ∈ {0, …, n}`:
///
/// ```text
/// residual_v = q^{rv} · Σ_{j=0}^{n-v} C(n-j,v) A_j  -  q^k · Σ_{j=0}^{v} C(n-j,n-v) A⊥_j.
/// ```
///
/// All residuals are zero exactly when the identity holds.
pub fn macwilliams_check(
    primal: &WeightDistribution,
    dual: &WeightDistribution,
) -> Result<Vec<BigInt>> {
    if primal.q != dual.q || primal.n != dual.n || primal.r != dual.r {
        return Err(Error::ParamMismatch(
            "the two distributions disagree on q, n, or r".into(),
        ));
    }
    let (n, r, k, q) = (primal.n, primal.r, primal.k, primal.q);
    if k + dual.k != r * n {
        return Err(Error::ParamMismatch(format!(
            "dimensions {} and {} do not sum to rn = {}",
            k,
            dual.k,
            r * n
        )));
    }
    let mut residuals = Vec::with_capacity(n + 1);
    for v in 0..=n {
        let lhs: BigInt = (0..=n - v)
            .map(|j| BigInt::from(binom(n - j, v) * &primal.counts[j]))
            .sum();
        let rhs: BigInt = (0..=v)
            .map(|j| BigInt::from(binom(n - j, n - v) * &dual.counts[j]))
            .sum();
        residuals.push(q_pow(q, r * v) * lhs - q_pow(q, k) * rhs);
    }
    Ok(residuals)
}

/// True when every residual of [`macwilliams_check`] vanishes.
pub fn macwilliams_holds(primal: &WeightDistribution, dual: &WeightDistribution) -> Result<bool> {
    Ok(macwilliams_check(primal, dual)?.iter().all(|x| x.is_zero()))
}

/// The mutually inverse `(n+1) × (n+1)` integer matrices
///
/// ```text
/// M[i][j] = (-1)^{n-i+j} C(j, n-i),      N[i][j] = C(n-j, i),
/// ```
///
/// with `M · N = I`.  `N` is the coefficient matrix of the tail system in
/// [`reconstruct_distribution`]; `M` solves it exactly over the integers.
#[derive(Clone, Debug)]
pub struct PascalPair {
    order: usize,
    m: Vec<Vec<BigInt>>,
    n: Vec<Vec<BigInt>>,
}

impl PascalPair {
    pub fn new(order: usize) -> Self {
        let size = order + 1;
        let mut m = vec![vec![BigInt::zero(); size]; size];
        let mut nn = vec![vec![BigInt::zero(); size]; size];
        for i in 0..size {
            for j in 0..size {
                let b = BigInt::from(binom(j, order - i));
                m[i][j] = if (order - i + j) % 2 == 0 { b } else { -b };
                nn[i][j] = BigInt::from(binom(order - j, i));
            }
        }
        PascalPair { order, m, n: nn }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The inverse matrix `M`.
    pub fn m_matrix(&self) -> &[Vec<BigInt>] {
        &self.m
    }

    /// The forward matrix `N`.
    pub fn n_matrix(&self) -> &[Vec<BigInt>] {
        &self.n
    }

    /// `M · v`.
    pub fn apply_m(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        self.apply(&self.m, v)
    }

    /// `N · v`.
    pub fn apply_n(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        self.apply(&self.n, v)
    }

    fn apply(&self, mat: &[Vec<BigInt>], v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.order + 1 {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against order {}",
                v.len(),
                self.order
            )));
        }
        Ok(mat
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// `M · N` — the identity; exposed so callers can verify exactness.
    pub fn product(&self) -> Vec<Vec<BigInt>> {
        let size = self.order + 1;
        let mut out = vec![vec![BigInt::zero(); size]; size];
        for i in 0..size {
            for l in 0..size {
                out[i][l] = (0..size).map(|j| &self.m[i][j] * &self.n[j][l]).sum();
            }
        }
        out
    }
}

/// Rebuilds a full distribution from its low-weight head.
///
/// Given the type `[n, r, k]` over `F_q`, the distance `d`, the dual
/// distance `d_perp` (use `n + 1` when the dual is the zero code), and the
/// counts `head = (A_d, …, A_{n-d_perp})` — empty when that range is — the
/// instances `v < d_perp` of the transform identity pin down the remaining
/// tail `A_j`, `j > n - d_perp`, as the exact solution of a Pascal system:
///
/// ```text
/// tail = M · rhs,    rhs_u = C(n,u)(q^{k-ru} - 1) - Σ_{v=d}^{n-d_perp} C(n-v,u) A_v.
/// ```
///
/// A negative tail entry (impossible for data from a real code) is reported
/// as [`Error::NegativeCount`].
pub fn reconstruct_distribution(
    q: u64,
    n: usize,
    r: usize,
    k: usize,
    d: usize,
    d_perp: usize,
    head: &[BigUint],
) -> Result<WeightDistribution> {
    if q < 2 {
        return Err(Error::OutOfRange(format!("field order {q} is below 2")));
    }
    if r == 0 || n == 0 {
        return Err(Error::OutOfRange("need n ≥ 1 and r ≥ 1".into()));
    }
    if k == 0 || k > r * n {
        return Err(Error::DegenerateDimension { k, rn: r * n });
    }
    if d == 0 || d > n {
        return Err(Error::OutOfRange(format!("distance {d} is outside 1..={n}")));
    }
    // The dual distance cannot exceed ⌊k/r⌋ + 1 (with the zero-dual
    // convention d_perp = n + 1 covered by k = rn).
    if d_perp == 0 || d_perp > (k / r + 1).min(n + 1) {
        return Err(Error::OutOfRange(format!(
            "dual distance {d_perp} is outside 1..={}",
            (k / r + 1).min(n + 1)
        )));
    }
    let expected = (n as i64 - d_perp as i64 - d as i64 + 1).max(0) as usize;
    if head.len() != expected {
        return Err(Error::HeadLengthMismatch { expected, actual: head.len() });
    }

    let mut counts = vec![BigUint::zero(); n + 1];
    counts[0] = BigUint::one();
    for (offset, a) in head.iter().enumerate() {
        counts[d + offset] = a.clone();
    }

    // Unknowns A_{tail_start}, …, A_n; A_0 = 1 is always treated as known.
    let tail_start = (n + 1 - d_perp).max(1);
    let order = n - tail_start; // system size order + 1
    let pair = PascalPair::new(order);
    let rhs: Vec<BigInt> = (0..=order)
        .map(|u| {
            let mut val = BigInt::from(binom(n, u)) * (q_pow(q, k - r * u) - BigInt::one());
            for v in d..tail_start {
                val -= BigInt::from(binom(n - v, u) * &counts[v]);
            }
            val
        })
        .collect();
    let tail = pair.apply_m(&rhs)?;
    for (j, value) in (tail_start..=n).zip(tail) {
        if value.sign() == Sign::Minus {
            return Err(Error::NegativeCount { j, value: value.to_string() });
        }
        counts[j] = value.to_biguint().expect("sign checked");
    }
    WeightDistribution::new(q, n, r, k, counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::DistanceMethod;
    use crate::gf::FieldSpec;

    fn f2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    fn code_3_3_4() -> LinearCode {
        LinearCode::from_index_rows(
            f2(),
            3,
            3,
            &[
                vec![1, 0, 0, 1, 0, 0, 0, 0, 0],
                vec![0, 1, 0, 0, 1, 0, 0, 0, 0],
                vec![0, 0, 1, 0, 0, 0, 0, 1, 0],
                vec![1, 0, 0, 0, 1, 0, 1, 0, 0],
            ],
        )
        .unwrap()
    }

    fn code_7_2_3() -> LinearCode {
        LinearCode::from_index_rows(
            f2(),
            7,
            2,
            &[
                vec![1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0, 0],
                vec![0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 0, 0, 1, 0],
                vec![1, 1, 1, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1],
            ],
        )
        .unwrap()
    }

    fn big(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn formula_reproduces_frozen_distributions() {
        let w = wdist_formula(2, 3, 3, 4).unwrap();
        assert_eq!(w.counts(), big(&[1, 0, 3, 12]).as_slice());
        assert_eq!(w.min_positive_weight(), Some(2));
        assert_eq!(w.counts_string(), "1,0,3,12");

        let w = wdist_formula(2, 7, 2, 3).unwrap();
        assert_eq!(w.counts(), big(&[1, 0, 0, 0, 0, 0, 7, 0]).as_slice());
    }

    #[test]
    fn formula_reports_negative_counts() {
        // No binary dually QMDS code of this type exists; the closed form
        // certifies it with A_11 = -4.
        let err = wdist_formula(2, 11, 2, 3).unwrap_err();
        match err {
            Error::NegativeCount { j, value } => {
                assert_eq!(j, 11);
                assert_eq!(value, "-4");
            }
            other => panic!("expected a negative count, got {other:?}"),
        }
    }

    #[test]
    fn exhaustive_matches_formula_on_a_dually_qmds_code() {
        let w = wdist_exhaustive(&code_7_2_3()).unwrap();
        assert_eq!(w, wdist_formula(2, 7, 2, 3).unwrap());
    }

    #[test]
    fn exhaustive_differs_from_formula_when_not_dually_qmds() {
        let w = wdist_exhaustive(&code_3_3_4()).unwrap();
        let f = wdist_formula(2, 3, 3, 4).unwrap();
        assert_ne!(w, f);
        // The real code has more minimum-weight words than the bound-attaining
        // distribution allows.
        assert!(w.count(2) > f.count(2));
        assert_eq!(w.counts().iter().sum::<BigUint>(), BigUint::from(16u32));
    }

    #[test]
    fn exhaustive_respects_budget() {
        assert!(matches!(
            wdist_exhaustive_with_budget(&code_3_3_4(), 15),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn transform_identity_holds_for_dual_pairs() {
        for code in [code_3_3_4(), code_7_2_3()] {
            let a = wdist_exhaustive(&code).unwrap();
            let b = wdist_exhaustive(&code.dual()).unwrap();
            assert!(macwilliams_holds(&a, &b).unwrap());
            assert!(macwilliams_holds(&b, &a).unwrap());
        }
    }

    #[test]
    fn transform_identity_fails_for_mismatched_pairs() {
        // The dual of the [3,3,4] code against the closed form for its own
        // parameters: not actually a dual pair, so some residual survives.
        let a = wdist_formula(2, 3, 3, 4).unwrap();
        let b = wdist_exhaustive(&code_3_3_4().dual()).unwrap();
        assert!(!macwilliams_holds(&a, &b).unwrap());
        // Mismatched block structure is rejected outright.
        let c = wdist_formula(2, 7, 2, 3).unwrap();
        assert!(matches!(macwilliams_check(&a, &c), Err(Error::ParamMismatch(_))));
    }

    #[test]
    fn pascal_pair_inverts_exactly() {
        for order in 0..=8 {
            let pair = PascalPair::new(order);
            let product = pair.product();
            for (i, row) in product.iter().enumerate() {
                for (j, entry) in row.iter().enumerate() {
                    let want = if i == j { BigInt::one() } else { BigInt::zero() };
                    assert_eq!(*entry, want, "order {order}, entry ({i},{j})");
                }
            }
        }
        let pair = PascalPair::new(1);
        assert_eq!(pair.m_matrix()[0], vec![BigInt::zero(), BigInt::one()]);
        assert_eq!(pair.m_matrix()[1], vec![BigInt::one(), -BigInt::one()]);
        assert_eq!(pair.n_matrix()[0], vec![BigInt::one(), BigInt::one()]);
        assert_eq!(pair.n_matrix()[1], vec![BigInt::one(), BigInt::zero()]);
    }

    #[test]
    fn reconstruction_recovers_exhaustive_counts() {
        for code in [code_3_3_4(), code_7_2_3()] {
            let full = wdist_exhaustive(&code).unwrap();
            let d = code.min_distance(DistanceMethod::Exhaustive).unwrap();
            let d_perp = code.dual().min_distance(DistanceMethod::Exhaustive).unwrap();
            let head: Vec<BigUint> = if code.n() >= d_perp && code.n() - d_perp >= d {
                full.counts()[d..=code.n() - d_perp].to_vec()
            } else {
                Vec::new()
            };
            let rebuilt = reconstruct_distribution(
                2,
                code.n(),
                code.r(),
                code.k(),
                d,
                d_perp,
                &head,
            )
            .unwrap();
            assert_eq!(rebuilt, full, "reconstruction of {}", code.params_string());
        }
    }

    #[test]
    fn reconstruction_with_zero_dual_gives_the_full_space() {
        // k = rn: the dual is the zero code, by convention d_perp = n + 1.
        let full_space = LinearCode::full_space(f2(), 2, 2).unwrap();
        let truth = wdist_exhaustive(&full_space).unwrap();
        let rebuilt = reconstruct_distribution(2, 2, 2, 4, 1, 3, &[]).unwrap();
        assert_eq!(rebuilt, truth);
    }

    #[test]
    fn reconstruction_validates_head_length() {
        assert!(matches!(
            reconstruct_distribution(2, 7, 2, 3, 6, 2, &big(&[7])),
            Err(Error::HeadLengthMismatch { expected: 0, actual: 1 })
        ));
        assert!(reconstruct_distribution(2, 7, 2, 3, 6, 5, &[]).is_err());
    }
}
