//! Classification of linear codes in the folded metric against the
//! Singleton-style bounds.
//!
//! For a code of type `[n, r, k]` with `1 ≤ k ≤ rn - 1`:
//!
//! * `d ≤ n - ⌈k/r⌉ + 1` — the distance bound; a code attaining it is
//!   **QMDS** (quasi maximum distance separable);
//! * `k ≤ r(n - d + 1)` — the dimension bound; a code attaining it is
//!   **MDS**, which forces `r | k` and is then the same as QMDS;
//! * `d⊥ ≤ ⌊k/r⌋ + 1` — the distance bound applied to the dual.
//!
//! A code is **dually QMDS** when it and its dual are both QMDS.  This is
//! detectable on the generator matrix alone: the code is QMDS iff every
//! `⌈k/r⌉`-block column submatrix of a generator has rank `k`, and dually
//! QMDS iff in addition every `⌊k/r⌋`-block column submatrix has rank
//! `r⌊k/r⌋` (full column rank).
//!
//! Dually QMDS codes are also exactly the codes whose restrictions and
//! shortenings all have the extreme possible dimensions:
//! `dim C^I = min(k, r|I|)` and `dim C_I = max(0, k - r(n - |I|))` for every
//! nonempty block set `I`; [`restriction_profile`] checks that pattern
//! subset by subset.

use itertools::Itertools;

use crate::code::{DistanceMethod, LinearCode, DEFAULT_ENUMERATION_BUDGET};
use crate::error::{Error, Result};

/// The three Singleton-style extremes for type `[n, r, k]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SingletonReport {
    /// Largest dimension any code of the same length and distance
    /// `d = n - ⌈k/r⌉ + 1` could have: `r⌈k/r⌉`.
    pub k_max: usize,
    /// Largest possible minimum distance: `n - ⌈k/r⌉ + 1`.
    pub d_max: usize,
    /// Largest possible dual minimum distance: `⌊k/r⌋ + 1`.
    pub dperp_max: usize,
}

/// Evaluates the bounds for type `[n, r, k]`; requires `1 ≤ k ≤ rn`.
pub fn singleton_bounds(n: usize, r: usize, k: usize) -> Result<SingletonReport> {
    if r == 0 || n == 0 {
        return Err(Error::OutOfRange("bounds need n ≥ 1 and r ≥ 1".into()));
    }
    if k == 0 || k > r * n {
        return Err(Error::DegenerateDimension { k, rn: r * n });
    }
    Ok(SingletonReport {
        k_max: r * k.div_ceil(r),
        d_max: n - k.div_ceil(r) + 1,
        dperp_max: k / r + 1,
    })
}

/// Exact distances of a code and its dual, with the extremal flags.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    /// Minimum folded distance of the code.
    pub d: usize,
    /// Minimum folded distance of the dual code.
    pub d_perp: usize,
    /// `k = r(n - d + 1)`: the dimension bound is attained.
    pub is_mds: bool,
    /// `d = n - ⌈k/r⌉ + 1`: the distance bound is attained.
    pub is_qmds: bool,
    /// Both the code and its dual are QMDS.
    pub is_dually_qmds: bool,
}

impl Classification {
    /// The strongest class attained, for display: MDS, then dually QMDS,
    /// then QMDS, then none.
    pub fn label(&self) -> &'static str {
        if self.is_mds {
            "MDS"
        } else if self.is_dually_qmds {
            "dually-QMDS"
        } else if self.is_qmds {
            "QMDS"
        } else {
            "none"
        }
    }
}

/// Classifies with the default enumeration budget (only relevant to
/// [`DistanceMethod::Exhaustive`]).
pub fn classify(code: &LinearCode, method: DistanceMethod) -> Result<Classification> {
    classify_with_budget(code, method, DEFAULT_ENUMERATION_BUDGET)
}

/// Computes `d` and `d⊥` by the chosen method and compares them against
/// the bounds.  Requires `1 ≤ k ≤ rn - 1` so that both distances exist.
pub fn classify_with_budget(
    code: &LinearCode,
    method: DistanceMethod,
    budget: u128,
) -> Result<Classification> {
    let (n, r, k) = (code.n(), code.r(), code.k());
    if k == 0 || k >= r * n {
        return Err(Error::DegenerateDimension { k, rn: r * n });
    }
    let d = code.min_distance_with_budget(method, budget)?;
    let d_perp = code.dual().min_distance_with_budget(method, budget)?;
    let report = singleton_bounds(n, r, k)?;
    let is_qmds = d == report.d_max;
    let dual_is_qmds = d_perp == report.dperp_max;
    Ok(Classification {
        d,
        d_perp,
        is_mds: k % r == 0 && is_qmds,
        is_qmds,
        is_dually_qmds: is_qmds && dual_is_qmds,
    })
}

/// Decides dually-QMDS-ness from generator minors alone, with no distance
/// computation on the dual: every `⌈k/r⌉`-block column submatrix must have
/// rank `k` and every `⌊k/r⌋`-block column submatrix full column rank
/// `r⌊k/r⌋` (vacuous when `k < r`).
pub fn dually_qmds_by_generator_minors(code: &LinearCode) -> Result<bool> {
    let (n, r, k) = (code.n(), code.r(), code.k());
    if k == 0 || k >= r * n {
        return Err(Error::DegenerateDimension { k, rn: r * n });
    }
    let g = code.canonical_generator();
    let hi = k.div_ceil(r);
    for blocks in (0..n).combinations(hi) {
        if g.block_submatrix(&blocks, r)?.rank() != k {
            return Ok(false);
        }
    }
    let lo = k / r;
    if lo > 0 {
        for blocks in (0..n).combinations(lo) {
            if g.block_submatrix(&blocks, r)?.rank() != r * lo {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The dimensions observed at one block set, with the extremes a dually
/// QMDS code would attain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetCheck {
    /// The block set `I`, 0-based ascending.
    pub blocks: Vec<usize>,
    /// `dim C^I`.
    pub restriction_dim: usize,
    /// `min(k, r|I|)`.
    pub restriction_expected: usize,
    /// `dim C_I`.
    pub shortening_dim: usize,
    /// `max(0, k - r(n - |I|))`.
    pub shortening_expected: usize,
}

impl SubsetCheck {
    /// True when both dimensions sit at their extremes.
    pub fn matches(&self) -> bool {
        self.restriction_dim == self.restriction_expected
            && self.shortening_dim == self.shortening_expected
    }
}

/// Restriction and shortening dimensions over every nonempty block set.
#[derive(Clone, Debug)]
pub struct RestrictionProfile {
    /// Number of block sets examined: `2^n - 1`.
    pub subsets_checked: usize,
    /// The block sets where a dimension missed its extreme.
    pub violations: Vec<SubsetCheck>,
    /// True when every subset matched — equivalent to dually QMDS for
    /// `1 ≤ k ≤ rn - 1`.
    pub pattern_holds: bool,
}

/// Walks all `2^n - 1` nonempty block sets of `code` (ascending by size,
/// then lexicographic) and records every set whose restriction or
/// shortening dimension misses the dually-QMDS extreme.  Refuses `n > 20`.
pub fn restriction_profile(code: &LinearCode) -> Result<RestrictionProfile> {
    let (n, r, k) = (code.n(), code.r(), code.k());
    if n > 20 {
        return Err(Error::BudgetExceeded(format!(
            "restriction profile over 2^{n} - 1 block sets; refusing n > 20"
        )));
    }
    let mut violations = Vec::new();
    let mut subsets_checked = 0usize;
    for size in 1..=n {
        for blocks in (0..n).combinations(size) {
            subsets_checked += 1;
            let restriction_dim = code.restrict(&blocks)?.k();
            let shortening_dim = code.shorten(&blocks)?.k();
            let check = SubsetCheck {
                restriction_expected: k.min(r * size),
                shortening_expected: k.saturating_sub(r * (n - size)),
                blocks,
                restriction_dim,
                shortening_dim,
            };
            if !check.matches() {
                violations.push(check);
            }
        }
    }
    Ok(RestrictionProfile { subsets_checked, pattern_holds: violations.is_empty(), violations })
}
