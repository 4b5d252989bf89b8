//! q-combinatorial primitives: q-integers, Gaussian binomials, finite
//! q-Pochhammer symbols at powers of `q`, quotients of infinite Pochhammer
//! symbols, and terminating `2phi1` series.

use std::sync::{OnceLock, RwLock};

use crate::exactalg::{QPoly, RatFn};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QSeriesError {
    #[error("numerator and denominator multisets differ in size ({0} vs {1})")]
    UnequalMultisets(usize, usize),
    #[error("Pochhammer exponents must be positive")]
    NonPositiveExponent,
    #[error("ill-posed parameters: denominator factor vanishes at term {0}")]
    IllPosed(usize),
}

/// `[k]_q = 1 + q + ... + q^(k-1)`.
pub fn qint(k: usize) -> QPoly {
    QPoly::from_coeffs(vec![1.into(); k])
}

fn pascal_rows() -> &'static RwLock<Vec<Vec<QPoly>>> {
    static ROWS: OnceLock<RwLock<Vec<Vec<QPoly>>>> = OnceLock::new();
    ROWS.get_or_init(|| RwLock::new(vec![vec![QPoly::one()]]))
}

/// Gaussian binomial `[n choose k]_q`, zero unless `0 <= k <= n`.
///
/// Rows of the q-Pascal triangle are cached process-wide; the cache only
/// grows and its contents do not depend on call order.
pub fn qbinom(n: i64, k: i64) -> QPoly {
    if k < 0 || n < 0 || k > n {
        return QPoly::zero();
    }
    let (n, k) = (n as usize, k as usize);
    {
        let rows = pascal_rows().read().unwrap();
        if let Some(row) = rows.get(n) {
            return row[k].clone();
        }
    }
    let mut rows = pascal_rows().write().unwrap();
    while rows.len() <= n {
        let prev = rows.last().unwrap();
        let m = prev.len();
        // [m, j] = [m-1, j-1] + q^j [m-1, j]
        let row: Vec<QPoly> = (0..=m)
            .map(|j| {
                let left = if j > 0 { prev[j - 1].clone() } else { QPoly::zero() };
                let right = if j < m { prev[j].shift(j) } else { QPoly::zero() };
                left + right
            })
            .collect();
        rows.push(row);
    }
    rows[n][k].clone()
}

/// `(q^s; q)_n = prod_{k<n} (1 - q^(s+k))`.
pub fn qpoch(s: usize, n: usize) -> QPoly {
    (0..n).fold(QPoly::one(), |acc, k| acc * (QPoly::one() - QPoly::monomial(1, s + k)))
}

/// `1 - q^e` for any integer exponent.
fn one_minus_qpow(e: i64) -> RatFn {
    &RatFn::one() - &RatFn::q_pow(e)
}

/// `(q^e; q)_n` for an arbitrary integer exponent, as a rational function.
/// Vanishes when some factor has exponent zero.
pub fn qpoch_laurent(e: i64, n: usize) -> RatFn {
    if e >= 1 {
        return RatFn::from_poly(qpoch(e as usize, n));
    }
    (0..n as i64).fold(RatFn::one(), |acc, k| acc * one_minus_qpow(e + k))
}

/// Quotient of infinite Pochhammer symbols
/// `prod (q^a; q)_inf / prod (q^b; q)_inf` with equally many factors above
/// and below, which always collapses to a finite rational function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PochQuotient {
    numerator_exps: Vec<usize>,
    denominator_exps: Vec<usize>,
}

impl PochQuotient {
    pub fn new(numerator_exps: Vec<usize>, denominator_exps: Vec<usize>) -> Result<Self, QSeriesError> {
        if numerator_exps.len() != denominator_exps.len() {
            return Err(QSeriesError::UnequalMultisets(
                numerator_exps.len(),
                denominator_exps.len(),
            ));
        }
        if numerator_exps.iter().chain(&denominator_exps).any(|&e| e == 0) {
            return Err(QSeriesError::NonPositiveExponent);
        }
        Ok(PochQuotient {
            numerator_exps,
            denominator_exps,
        })
    }

    pub fn numerator_exps(&self) -> &[usize] {
        &self.numerator_exps
    }

    pub fn denominator_exps(&self) -> &[usize] {
        &self.denominator_exps
    }

    /// Evaluate with numerator `i` paired against denominator `pairing[i]`.
    /// `pairing` must be a permutation of `0..len`.
    pub fn evaluate_paired(&self, pairing: &[usize]) -> RatFn {
        assert_eq!(pairing.len(), self.numerator_exps.len());
        let mut num = QPoly::one();
        let mut den = QPoly::one();
        for (i, &j) in pairing.iter().enumerate() {
            let a = self.numerator_exps[i];
            let b = self.denominator_exps[j];
            // (q^a)_inf / (q^b)_inf
            if b >= a {
                num = num * qpoch(a, b - a);
            } else {
                den = den * qpoch(b, a - b);
            }
        }
        RatFn::new(num, den).expect("Pochhammer products are nonzero")
    }
}

/// Reduce a [`PochQuotient`] to a rational function using the identity
/// pairing.
pub fn poch_inf_quotient(pq: &PochQuotient) -> RatFn {
    let pairing: Vec<usize> = (0..pq.numerator_exps.len()).collect();
    pq.evaluate_paired(&pairing)
}

/// Terminating basic hypergeometric series
/// `2phi1(q^-N, q^b; q^c; q, q^z) = sum_{j=0}^{N} (q^-N, q^b; q)_j / (q, q^c; q)_j * q^(z j)`.
pub fn phi21_terminating(n: usize, b_exp: i64, c_exp: i64, z_exp: i64) -> Result<RatFn, QSeriesError> {
    let top = -(n as i64);
    let z = RatFn::q_pow(z_exp);
    let mut term = RatFn::one();
    let mut sum = RatFn::one();
    for j in 0..n as i64 {
        if c_exp + j == 0 {
            return Err(QSeriesError::IllPosed(j as usize + 1));
        }
        let ratio_num = one_minus_qpow(top + j) * one_minus_qpow(b_exp + j);
        let ratio_den = one_minus_qpow(1 + j) * one_minus_qpow(c_exp + j);
        term = &(&term * &ratio_num) * &z;
        term = &term / &ratio_den;
        sum = &sum + &term;
    }
    Ok(sum)
}
