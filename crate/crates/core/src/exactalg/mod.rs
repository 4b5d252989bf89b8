//! Exact arithmetic: integer polynomials in `q`, rational functions in `q`,
//! and linear solving over the rational-function field.

mod poly;
mod ratfn;
mod serial;
mod solve;

pub use poly::QPoly;
pub use ratfn::{RatFn, RatPoly};
pub use solve::fraction_solve;

use num_bigint::BigInt;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("inexact division")]
    InexactDivision,
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("singular system")]
    SingularSystem,
    #[error("dimension mismatch")]
    DimensionMismatch,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Ordinary binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `C(k, 2)` as a machine integer; zero for `k < 2`.
pub fn choose2(k: i64) -> i64 {
    if k < 2 {
        0
    } else {
        k * (k - 1) / 2
    }
}

/// `+1` for even `j`, `-1` for odd `j`.
pub fn sign(j: i64) -> BigInt {
    if j.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}
