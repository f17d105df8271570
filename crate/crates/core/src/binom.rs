//! Exact binomial coefficients with the extended convention
//! `C(u, v) = 0` whenever `v > u` (and for negative arguments in the signed
//! variant).  Everything is arbitrary-precision; counting formulas elsewhere
//! in the crate rely on these conventions to truncate their sums implicitly.

use num::{BigInt, BigUint, One, Zero};

/// `C(u, v)` over the nonnegative integers, with `C(u, v) = 0` for `v > u`.
pub fn binom(u: usize, v: usize) -> BigUint {
    if v > u {
        return BigUint::zero();
    }
    let v = v.min(u - v);
    let mut acc = BigUint::one();
    for i in 0..v {
        acc = acc * BigUint::from(u - i) / BigUint::from(i + 1);
    }
    acc
}

/// Signed-argument variant: zero when either argument is negative or
/// `v > u`.
pub fn binom_signed(u: i64, v: i64) -> BigInt {
    if u < 0 || v < 0 || v > u {
        return BigInt::zero();
    }
    BigInt::from(binom(u as usize, v as usize))
}
