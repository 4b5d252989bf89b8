//! Operator-independent ("universal") expressions for anti-invariant counts
//! as `Z[q]`-linear combinations of invariant-subspace counts `X_0..X_n`,
//! obtained three ways: symbolic elimination through the pair-class
//! recurrence, a closed form, and a linear system over `Q(q)`. Also the
//! q-series identities behind the closed form.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::exactalg::{choose2, fraction_solve, sign, AlgebraError, QPoly, RatFn};
use crate::qseries::{phi21_terminating, poch_inf_quotient, qbinom, qpoch, PochQuotient, QSeriesError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum UniversalError {
    #[error("invalid parameters: {0}")]
    Params(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    QSeries(#[from] QSeriesError),
    #[error("solution component {0} is not a polynomial: {1}")]
    NotPolynomial(usize, RatFn),
}

fn check_nl(n: usize, l: usize, need_positive_l: bool) -> Result<(), UniversalError> {
    if 2 * l > n || (need_positive_l && l == 0) {
        return Err(UniversalError::Params(format!(
            "need n >= 2l{}, got n={n}, l={l}",
            if need_positive_l { " >= 2" } else { "" }
        )));
    }
    Ok(())
}

/// `coeffs[j]` multiplies `X_j`; the expression holds for every operator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolicCount {
    pub coeffs: Vec<QPoly>,
}

impl SymbolicCount {
    fn zero(n: usize) -> Self {
        SymbolicCount {
            coeffs: vec![QPoly::zero(); n + 1],
        }
    }

    fn unit(n: usize, j: usize) -> Self {
        let mut s = SymbolicCount::zero(n);
        s.coeffs[j] = QPoly::one();
        s
    }

    fn add_scaled(&mut self, other: &SymbolicCount, factor: &QPoly) {
        for (c, o) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *c += &(o * factor);
        }
    }

    /// Value for concrete invariant counts evaluated at `q`.
    pub fn evaluate(&self, q: u32, x: &[BigInt]) -> BigInt {
        let q = BigInt::from(q);
        self.coeffs.iter().zip(x).map(|(c, xj)| c.eval(&q) * xj).sum()
    }
}

/// Memoized symbolic elimination of `|(a,b)|` (the number of `a`-dimensional
/// `W` with `dim(W ∩ T^{-1}W) = b`) down to the `X_j`.
pub struct RecurrenceEngine {
    n: usize,
    memo: HashMap<(usize, usize), SymbolicCount>,
    active: HashSet<(usize, usize)>,
}

impl RecurrenceEngine {
    pub fn new(n: usize) -> Self {
        RecurrenceEngine {
            n,
            memo: HashMap::new(),
            active: HashSet::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn count(&mut self, a: usize, b: usize) -> SymbolicCount {
        assert!(b <= a && a <= self.n, "need b <= a <= n, got a={a}, b={b}");
        if let Some(s) = self.memo.get(&(a, b)) {
            return s.clone();
        }
        assert!(self.active.insert((a, b)), "recurrence revisits ({a},{b})");
        let n = self.n;
        let s = if a == b {
            SymbolicCount::unit(n, a)
        } else {
            let (ni, ai, bi) = (n as i64, a as i64, b as i64);
            let mut s = SymbolicCount::zero(n);
            s.coeffs[b] += &qbinom(ni - bi, ai - bi);
            s.coeffs[a] -= &qbinom(ai, bi);
            for j in 0..b {
                let factor = qbinom(ni - 2 * bi + j as i64, ai - 2 * bi + j as i64);
                let sub = self.count(b, j);
                s.add_scaled(&sub, &factor);
            }
            for k in b + 1..a {
                let factor = -qbinom(k as i64, bi);
                let sub = self.count(a, k);
                s.add_scaled(&sub, &factor);
            }
            s
        };
        self.active.remove(&(a, b));
        self.memo.insert((a, b), s.clone());
        s
    }
}

/// `|(a,b)|` as a combination of `X_0..X_n`.
pub fn derive_universal_recurrence(n: usize, a: usize, b: usize) -> SymbolicCount {
    RecurrenceEngine::new(n).count(a, b)
}

/// Coefficients `p_0..p_l` with `alpha_{n,l} = Σ p_j X_j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniversalFormula {
    pub n: usize,
    pub l: usize,
    pub p: Vec<QPoly>,
}

impl UniversalFormula {
    /// Anti-invariant count for concrete invariant counts `x` at field order `q`.
    pub fn evaluate(&self, q: u32, x: &[BigInt]) -> BigInt {
        SymbolicCount { coeffs: self.p.clone() }.evaluate(q, x)
    }
}

/// The elimination route, truncated to `X_0..X_l`.
pub fn recurrence_p(n: usize, l: usize) -> Result<UniversalFormula, UniversalError> {
    check_nl(n, l, false)?;
    let mut s = derive_universal_recurrence(n, l, 0);
    assert!(s.coeffs[l + 1..].iter().all(QPoly::is_zero));
    s.coeffs.truncate(l + 1);
    Ok(UniversalFormula { n, l, p: s.coeffs })
}

/// `p_j = (-1)^j q^C(l,2) ([n-l-j, n-2l] q^C(l-j+1,2) + [n-l-j-1, n-2l] q^C(l-j,2))`.
pub fn closed_form_p(n: usize, l: usize) -> Result<UniversalFormula, UniversalError> {
    check_nl(n, l, false)?;
    let (ni, li) = (n as i64, l as i64);
    let p = (0..=li)
        .map(|j| {
            let a = qbinom(ni - li - j, ni - 2 * li).shift(choose2(li - j + 1) as usize);
            let b = qbinom(ni - li - j - 1, ni - 2 * li).shift(choose2(li - j) as usize);
            (a + b).shift(choose2(li) as usize).scale(&sign(j))
        })
        .collect();
    Ok(UniversalFormula { n, l, p })
}

/// Coefficients of `X_0..X_l` read off by expanding the difference form
/// `q^C(l,2) Σ_j (-1)^j (X_j - X_{j-1}) [n-l-j, n-2l] q^C(l-j+1,2)`
/// symbol by symbol.
pub fn difference_form_p(n: usize, l: usize) -> Result<UniversalFormula, UniversalError> {
    check_nl(n, l, false)?;
    let (ni, li) = (n as i64, l as i64);
    let mut p = vec![QPoly::zero(); l + 1];
    for j in 0..=li {
        let term = qbinom(ni - li - j, ni - 2 * li)
            .shift((choose2(li - j + 1) + choose2(li)) as usize)
            .scale(&sign(j));
        p[j as usize] += &term;
        if j > 0 {
            p[j as usize - 1] -= &term;
        }
    }
    Ok(UniversalFormula { n, l, p })
}

/// Invariant-subspace counts `X_ij(q)` of the test operators: `T_0` with
/// irreducible characteristic polynomial, `T_i` a zero block of size
/// `n-l+i` plus an irreducible block of size `l-i`.
pub fn xij_entry(n: usize, l: usize, i: usize, j: usize) -> QPoly {
    let (n, l, i, j) = (n as i64, l as i64, i as i64, j as i64);
    if i == 0 {
        QPoly::from(i64::from(j == 0) + i64::from(j == n))
    } else if i < l {
        qbinom(n - l + i, j) + qbinom(n - l + i, j - l + i)
    } else {
        qbinom(n, j)
    }
}

pub fn xij_matrix(n: usize, l: usize) -> Result<Vec<Vec<QPoly>>, UniversalError> {
    check_nl(n, l, true)?;
    Ok((0..=l)
        .map(|i| (0..=l).map(|j| xij_entry(n, l, i, j)).collect())
        .collect())
}

/// Anti-invariant count of `T_0`: `(q^n - 1)/(q^{n-l} - 1) q^{l^2-l} [n-l, l]`.
pub fn system_rhs_t0(n: usize, l: usize) -> RatFn {
    let ratio = &RatFn::from_poly(QPoly::monomial(1, n) - QPoly::one())
        / &RatFn::from_poly(QPoly::monomial(1, n - l) - QPoly::one());
    &ratio * &RatFn::from_poly(qbinom((n - l) as i64, l as i64).shift(l * l - l))
}

/// Solve `alpha(T_i) = Σ_j p_j X_ij` for the `p_j` over `Q(q)`.
pub fn solve_system(n: usize, l: usize) -> Result<UniversalFormula, UniversalError> {
    let x = xij_matrix(n, l)?;
    let m: Vec<Vec<RatFn>> = x
        .into_iter()
        .map(|row| row.into_iter().map(RatFn::from_poly).collect())
        .collect();
    let mut rhs = vec![RatFn::zero(); l + 1];
    rhs[0] = system_rhs_t0(n, l);
    let sol = fraction_solve(&m, &rhs)?;
    let p = sol
        .into_iter()
        .enumerate()
        .map(|(j, r)| r.to_qpoly().ok_or(UniversalError::NotPolynomial(j, r)))
        .collect::<Result<_, _>>()?;
    Ok(UniversalFormula { n, l, p })
}

fn check_nli(n: usize, l: usize, i: usize) -> Result<(), UniversalError> {
    if 2 * l > n || i < 1 || i > l {
        return Err(UniversalError::Params(format!(
            "need n >= 2l and 1 <= i <= l, got n={n}, l={l}, i={i}"
        )));
    }
    Ok(())
}

/// One of the four Gaussian binomials whose signed combination is `Y(n,l,i,j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum YPart {
    /// `[n-l+i, j]`
    Y1,
    /// `[n-l+i, j-l+i]`
    Y2,
    /// `[n-l+i, j-1]`
    Y3,
    /// `[n-l+i, j-1-l+i]`
    Y4,
}

impl YPart {
    pub const ALL: [YPart; 4] = [YPart::Y1, YPart::Y2, YPart::Y3, YPart::Y4];

    pub fn from_index(k: usize) -> Option<YPart> {
        YPart::ALL.get(k.checked_sub(1)?).copied()
    }

    fn value(self, n: i64, l: i64, i: i64, j: i64) -> QPoly {
        let top = n - l + i;
        match self {
            YPart::Y1 => qbinom(top, j),
            YPart::Y2 => qbinom(top, j - l + i),
            YPart::Y3 => qbinom(top, j - 1),
            YPart::Y4 => qbinom(top, j - 1 - l + i),
        }
    }
}

fn weighted_sum(n: usize, l: usize, y: impl Fn(i64) -> QPoly) -> QPoly {
    let (ni, li) = (n as i64, l as i64);
    (0..=li)
        .map(|j| {
            (y(j) * qbinom(ni - li - j, ni - 2 * li))
                .shift(choose2(li - j + 1) as usize)
                .scale(&sign(j))
        })
        .sum()
}

/// `Σ_j (-1)^j Y(n,l,i,j) [n-l-j, n-2l] q^C(l-j+1,2)`, which should vanish.
pub fn zero_sum_value(n: usize, l: usize, i: usize) -> Result<QPoly, UniversalError> {
    check_nli(n, l, i)?;
    let (ni, li, ii) = (n as i64, l as i64, i as i64);
    Ok(weighted_sum(n, l, |j| {
        YPart::Y1.value(ni, li, ii, j) + YPart::Y2.value(ni, li, ii, j)
            - YPart::Y3.value(ni, li, ii, j)
            - YPart::Y4.value(ni, li, ii, j)
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumMethod {
    /// Direct alternating sum of Gaussian binomials.
    Binomial,
    /// Pochhammer prefactor times a terminating `2phi1`.
    Hypergeometric,
}

/// Pochhammer prefactor `(q^s; q)_k / (q; q)_k` with the overall sign `(-1)^l`.
fn prefactor(l: usize, s: usize, k: usize) -> RatFn {
    let r = &RatFn::from_poly(qpoch(s, k)) / &RatFn::from_poly(qpoch(1, k));
    if l % 2 == 1 {
        -r
    } else {
        r
    }
}

/// The zero sum with `Y` replaced by a single part.
pub fn s_sum(n: usize, l: usize, i: usize, part: YPart, method: SumMethod) -> Result<RatFn, UniversalError> {
    check_nli(n, l, i)?;
    let (ni, li, ii) = (n as i64, l as i64, i as i64);
    match method {
        SumMethod::Binomial => Ok(RatFn::from_poly(weighted_sum(n, l, |j| part.value(ni, li, ii, j)))),
        SumMethod::Hypergeometric => {
            let m = n - l;
            let b = (m - l + 1) as i64;
            let (pre, phi) = match part {
                YPart::Y1 => (
                    prefactor(l, m + i - l + 1, l),
                    phi21_terminating(l, b, (m + i - l + 1) as i64, li + 1)?,
                ),
                YPart::Y2 => (prefactor(l, m + 1, i), phi21_terminating(i, b, (m + 1) as i64, ii + 1)?),
                YPart::Y3 => (
                    prefactor(l, m + i - l + 2, l - 1),
                    phi21_terminating(l - 1, b, (m + i - l + 2) as i64, li)?,
                ),
                YPart::Y4 => (
                    prefactor(l, m + 2, i - 1),
                    phi21_terminating(i - 1, b, (m + 2) as i64, ii)?,
                ),
            };
            Ok(&pre * &phi)
        }
    }
}

/// Result of applying Heine's transformation to the `Y1` (resp. `Y3`) series:
/// the original prefactor times the infinite-Pochhammer quotient, times the
/// transformed series, which is the `Y4` (resp. `Y2`) series.
pub fn heine_transformed(n: usize, l: usize, i: usize, part: YPart) -> Result<RatFn, UniversalError> {
    check_nli(n, l, i)?;
    let m = n - l;
    let b = (m - l + 1) as i64;
    let (pre, quotient, phi) = match part {
        YPart::Y1 => (
            prefactor(l, m + i - l + 1, l),
            PochQuotient::new(vec![i, m + 2], vec![m + i - l + 1, l + 1])?,
            phi21_terminating(i - 1, b, (m + 2) as i64, i as i64)?,
        ),
        YPart::Y3 => (
            prefactor(l, m + i - l + 2, l - 1),
            PochQuotient::new(vec![i + 1, m + 1], vec![m + i - l + 2, l])?,
            phi21_terminating(i, b, (m + 1) as i64, (i + 1) as i64)?,
        ),
        _ => {
            return Err(UniversalError::Params(
                "Heine's transformation is applied to the Y1 and Y3 series only".into(),
            ))
        }
    };
    Ok(&(&pre * &poch_inf_quotient(&quotient)) * &phi)
}

/// Both prefactor identities produced by Heine's transformation:
/// the transformed `Y1` prefactor equals the `Y4` prefactor and the
/// transformed `Y3` prefactor equals the `Y2` prefactor.
pub fn heine_prefactors_match(n: usize, l: usize, i: usize) -> Result<bool, UniversalError> {
    check_nli(n, l, i)?;
    let m = n - l;
    let q14 = PochQuotient::new(vec![i, m + 2], vec![m + i - l + 1, l + 1])?;
    let q32 = PochQuotient::new(vec![i + 1, m + 1], vec![m + i - l + 2, l])?;
    let first = &prefactor(l, m + i - l + 1, l) * &poch_inf_quotient(&q14) == prefactor(l, m + 2, i - 1);
    let second = &prefactor(l, m + i - l + 2, l - 1) * &poch_inf_quotient(&q32) == prefactor(l, m + 1, i);
    Ok(first && second)
}

/// Outcome of the non-singularity check on the lower-right minor of the
/// `X_ij` table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DetDegreeReport {
    pub n: usize,
    pub l: usize,
    pub determinant: QPoly,
    pub expected_degree: usize,
    pub pass: bool,
}

/// Determinant over `Z[q]` by fraction-free (Bareiss) elimination.
pub fn determinant(m: &[Vec<QPoly>]) -> Result<QPoly, UniversalError> {
    let k = m.len();
    if m.iter().any(|r| r.len() != k) {
        return Err(UniversalError::Params("determinant of a non-square matrix".into()));
    }
    let mut a: Vec<Vec<QPoly>> = m.to_vec();
    let mut prev = QPoly::one();
    let mut negate = false;
    for c in 0..k {
        let Some(p) = (c..k).find(|&r| !a[r][c].is_zero()) else {
            return Ok(QPoly::zero());
        };
        if p != c {
            a.swap(p, c);
            negate = !negate;
        }
        for r in c + 1..k {
            for j in c + 1..k {
                let v = &a[c][c] * &a[r][j] - &a[r][c] * &a[c][j];
                a[r][j] = v.div_exact(&prev)?;
            }
            a[r][c] = QPoly::zero();
        }
        prev = a[c][c].clone();
    }
    let det = if k == 0 { QPoly::one() } else { a[k - 1][k - 1].clone() };
    Ok(if negate { -det } else { det })
}

pub fn detx_degree_check(n: usize, l: usize) -> Result<DetDegreeReport, UniversalError> {
    check_nl(n, l, true)?;
    let minor: Vec<Vec<QPoly>> = (1..=l)
        .map(|i| (1..=l).map(|j| xij_entry(n, l, i, j)).collect())
        .collect();
    let determinant = determinant(&minor)?;
    let expected_degree = (n - l) * l * (l + 1) / 2;
    let pass = determinant.degree() == Some(expected_degree);
    Ok(DetDegreeReport {
        n,
        l,
        determinant,
        expected_degree,
        pass,
    })
}
