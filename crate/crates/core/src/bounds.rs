//! Length and distance bounds for QMDS and dually QMDS codes, and the
//! density machinery showing dually QMDS codes are abundant over large
//! fields.
//!
//! * [`length_bound_hamming`] — any code of type `[n, r, k, d]` with
//!   `d ≥ 3` satisfies `n ≤ d - 3 + q^{r⌈k/r⌉-k}(q^r + 1)` (a ball-packing
//!   argument over the width-`r` block alphabet, applied to a restriction
//!   with folded distance 3).  The hypothesis is essential: for `d = 2`
//!   there are QMDS codes of every length.
//! * [`dually_qmds_bounds`] — for dually QMDS codes, with
//!   `ε = r - (r⌈k/r⌉ - k)` and `δ = r - (k - r⌊k/r⌋)`:
//!   `d ≤ q^r - 1 + ⌊(q^r-1)/(q^ε-1)⌋` when `k > r`, the mirror bound on
//!   `d⊥` with `δ` when `k < r(n-1)`, their sum bounding `n`, and for
//!   `q = 2`, `r + 1 ≤ k ≤ 2r` the sharper `n ≤ 2^{r+1} - 1`.
//! * [`density_constant`] / [`density_experiment`] — a uniform `[n, r, k]`
//!   code is dually QMDS with probability at least `1 - C(n,r,k)/q`, where
//!   `C(n,r,k)` counts the degrees of freedom of the minor conditions; the
//!   experiment measures the empirical fraction under seeded, per-trial
//!   reproducible sampling.
//!
//! All bound values are exact integers ([`BigUint`]); all fractions are
//! exact rationals ([`BigRational`]).  No floating point is used.

use num::{BigRational, BigUint, One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::binom::binom;
use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::qmds::dually_qmds_by_generator_minors;
use crate::sampling::random_code;

fn pow(q: u64, e: usize) -> BigUint {
    BigUint::from(q).pow(e as u32)
}

/// Largest length any code (linear or not) of minimum folded distance
/// `d ≥ 3` and dimension `k` over `F_q` with block width `r` can have:
/// `n ≤ d - 3 + q^{r⌈k/r⌉-k}(q^r + 1)`.
///
/// Rejects `d < 3` as inapplicable — the bound provably fails at `d = 2`.
pub fn length_bound_hamming(d: usize, q: u64, r: usize, k: usize) -> Result<BigUint> {
    if q < 2 {
        return Err(Error::OutOfRange(format!("field order {q} is below 2")));
    }
    if r == 0 || k == 0 {
        return Err(Error::OutOfRange("need r ≥ 1 and k ≥ 1".into()));
    }
    if d < 3 {
        return Err(Error::InapplicableBound(format!(
            "the ball-packing length bound needs d ≥ 3, got {d}; \
             codes of distance 2 exist at every length"
        )));
    }
    let defect = r * k.div_ceil(r) - k;
    Ok(BigUint::from(d - 3) + pow(q, defect) * (pow(q, r) + BigUint::one()))
}

/// One bound instance inside a [`DuallyQmdsBounds`] report.
#[derive(Clone, Debug)]
pub struct BoundReport {
    /// Short identifier: `distance`, `dual-distance`, `length`, or
    /// `binary-length`.
    pub name: &'static str,
    /// The quantity being bounded from above.
    pub bounds: &'static str,
    /// The bound value.
    pub value: BigUint,
    /// The hypothesis under which this bound applies, as displayed text.
    pub hypothesis: String,
    /// Whether the hypothesis holds: `None` when it mentions `n` and no
    /// `n` was supplied.
    pub applies: Option<bool>,
    /// A construction known to attain the bound with equality, when one is.
    pub attained_by: Option<String>,
}

/// Every bound a dually QMDS code with the given parameters must satisfy.
#[derive(Clone, Debug)]
pub struct DuallyQmdsBounds {
    pub q: u64,
    pub r: usize,
    pub k: usize,
    pub n: Option<usize>,
    /// `ε = r - (r⌈k/r⌉ - k)`, in `[1, r]`.
    pub epsilon: usize,
    /// `δ = r - (k - r⌊k/r⌋)`, in `[1, r]`.
    pub delta: usize,
    pub reports: Vec<BoundReport>,
}

/// `⌊(q^r - 1)/(q^e - 1)⌋`.
fn geometric_quotient(q: u64, r: usize, e: usize) -> BigUint {
    (pow(q, r) - BigUint::one()) / (pow(q, e) - BigUint::one())
}

/// Evaluates the residues `ε`, `δ` and all four bounds for dually QMDS
/// codes of dimension `k` and block width `r` over `F_q`; `n` is only
/// needed to decide which hypotheses hold.
pub fn dually_qmds_bounds(q: u64, r: usize, k: usize, n: Option<usize>) -> Result<DuallyQmdsBounds> {
    if q < 2 {
        return Err(Error::OutOfRange(format!("field order {q} is below 2")));
    }
    if r == 0 || k == 0 {
        return Err(Error::OutOfRange("need r ≥ 1 and k ≥ 1".into()));
    }
    if let Some(n) = n {
        if k > r * n {
            return Err(Error::DegenerateDimension { k, rn: r * n });
        }
    }
    let epsilon = r - (r * k.div_ceil(r) - k);
    let delta = r - (k - r * (k / r));
    debug_assert!((1..=r).contains(&epsilon) && (1..=r).contains(&delta));

    let qr = pow(q, r);
    let eps_term = geometric_quotient(q, r, epsilon);
    let del_term = geometric_quotient(q, r, delta);
    // The binary one-weight construction attains both the distance bound
    // (at k = r + 1, where ε = 1) and the binary length bound.
    let binary_witness =
        (q == 2 && k == r + 1).then(|| format!("the binary one-weight code for width {r}"));

    let mut reports = Vec::new();
    reports.push(BoundReport {
        name: "distance",
        bounds: "d",
        value: &qr - BigUint::one() + &eps_term,
        hypothesis: format!("k > r (here k = {k}, r = {r})"),
        applies: Some(k > r),
        attained_by: binary_witness.clone(),
    });
    reports.push(BoundReport {
        name: "dual-distance",
        bounds: "d⊥",
        value: &qr - BigUint::one() + &del_term,
        hypothesis: "k < r(n-1)".into(),
        applies: n.map(|n| n >= 1 && k < r * (n - 1)),
        attained_by: None,
    });
    let (length_value, length_hyp) = if k % r == 0 {
        (BigUint::from(2u32) * &qr - BigUint::from(2u32), "r | k and r < k < r(n-1)".to_string())
    } else {
        (
            BigUint::from(2u32) * &qr - BigUint::from(3u32) + &eps_term + &del_term,
            "r ∤ k and r < k < r(n-1)".to_string(),
        )
    };
    reports.push(BoundReport {
        name: "length",
        bounds: "n",
        value: length_value,
        hypothesis: length_hyp,
        applies: match n {
            Some(n) => Some(k > r && n >= 1 && k < r * (n - 1)),
            None if k <= r => Some(false),
            None => None,
        },
        attained_by: None,
    });
    reports.push(BoundReport {
        name: "binary-length",
        bounds: "n",
        value: pow(2, r + 1) - BigUint::one(),
        hypothesis: format!("q = 2 and r+1 ≤ k ≤ 2r (here q = {q}, k = {k})"),
        applies: Some(q == 2 && (r + 1..=2 * r).contains(&k)),
        attained_by: binary_witness,
    });
    Ok(DuallyQmdsBounds { q, r, k, n, epsilon, delta, reports })
}

/// The minor-counting constant
/// `C(n,r,k) = k·C(n,⌈k/r⌉)·C(r⌈k/r⌉,k) + r⌊k/r⌋·C(n,⌊k/r⌋)·C(k,r⌊k/r⌋)`;
/// a uniform `[n, r, k]` code is dually QMDS with probability at least
/// `1 - C(n,r,k)/q`.
pub fn density_constant(n: usize, r: usize, k: usize) -> Result<BigUint> {
    if n == 0 || r == 0 {
        return Err(Error::OutOfRange("need n ≥ 1 and r ≥ 1".into()));
    }
    if k == 0 || k > r * n {
        return Err(Error::DegenerateDimension { k, rn: r * n });
    }
    let hi = k.div_ceil(r);
    let lo = k / r;
    let first = BigUint::from(k as u64) * binom(n, hi) * binom(r * hi, k);
    let second = BigUint::from((r * lo) as u64) * binom(n, lo) * binom(k, r * lo);
    Ok(first + second)
}

/// Outcome of a seeded sampling experiment measuring how often a uniform
/// `[n, r, k]` code over `F_q` is dually QMDS.
#[derive(Clone, Debug)]
pub struct DensityReport {
    pub q: u64,
    pub n: usize,
    pub r: usize,
    pub k: usize,
    pub trials: u64,
    pub seed: u64,
    /// How many sampled codes were dually QMDS.
    pub dually_count: u64,
    /// `dually_count / trials`, exact.
    pub empirical: BigRational,
    /// The guaranteed lower bound `1 - C(n,r,k)/q`, exact (may be
    /// negative).
    pub lower_bound: BigRational,
    /// True when the lower bound is ≤ 0 and so guarantees nothing.
    pub bound_vacuous: bool,
}

/// Samples `trials` uniform full-rank `[n, r, k]` generators over `field`
/// and classifies each by generator minors (no codeword enumeration).
///
/// Trial `t` draws from a stream derived only from `(seed, t)`, so any
/// partition of the trial range reproduces the same outcomes.
pub fn density_experiment(
    field: &FieldSpec,
    n: usize,
    r: usize,
    k: usize,
    trials: u64,
    seed: u64,
) -> Result<DensityReport> {
    if trials == 0 {
        return Err(Error::OutOfRange("need at least one trial".into()));
    }
    if n == 0 || r == 0 {
        return Err(Error::OutOfRange("need n ≥ 1 and r ≥ 1".into()));
    }
    if k == 0 || k >= r * n {
        return Err(Error::DegenerateDimension { k, rn: r * n });
    }
    let mut dually_count = 0u64;
    for trial in 0..trials {
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        rng.set_stream(trial);
        let code = random_code(field, n, r, k, &mut rng)?;
        if dually_qmds_by_generator_minors(&code)? {
            dually_count += 1;
        }
    }
    let q = field.order();
    let empirical = BigRational::new(dually_count.into(), trials.into());
    let lower_bound = BigRational::one()
        - BigRational::new(density_constant(n, r, k)?.into(), BigUint::from(q).into());
    let bound_vacuous = lower_bound <= BigRational::zero();
    Ok(DensityReport {
        q,
        n,
        r,
        k,
        trials,
        seed,
        dually_count,
        empirical,
        lower_bound,
        bound_vacuous,
    })
}
