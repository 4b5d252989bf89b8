//! Subspace counts for a fixed operator: exhaustive enumeration, standard
//! operator constructions, and the closed-form expressions they are checked
//! against.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exactalg::{binomial, choose2, sign, AlgebraError, QPoly};
use crate::gflinalg::{enumerate_subspaces, LinalgError, MatGF, Subspace};
use crate::gfq::{Fe, FieldCtx};
use crate::qseries::qbinom;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CountingError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("operator must be square, got {0}x{1}")]
    NotSquare(usize, usize),
    #[error("invalid parameters: {0}")]
    Params(String),
}

/// Weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Profile(Vec<usize>);

impl Profile {
    pub fn new(parts: Vec<usize>) -> Result<Profile, CountingError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CountingError::Params(format!(
                "profile {parts:?} must be weakly decreasing and positive"
            )));
        }
        Ok(Profile(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }
}

impl std::str::FromStr for Profile {
    type Err = CountingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| CountingError::Params(format!("profile {s:?}: {e}")))?;
        Profile::new(parts)
    }
}

/// `x[j]` is the number of `j`-dimensional invariant subspaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantCounts(pub Vec<BigInt>);

impl InvariantCounts {
    pub fn get(&self, j: i64) -> BigInt {
        usize::try_from(j)
            .ok()
            .and_then(|j| self.0.get(j))
            .cloned()
            .unwrap_or_default()
    }

    pub fn n(&self) -> usize {
        self.0.len() - 1
    }
}

fn check_square(t: &MatGF) -> Result<usize, CountingError> {
    if t.rows() != t.cols() {
        return Err(CountingError::NotSquare(t.rows(), t.cols()));
    }
    Ok(t.rows())
}

/// `dim(W + TW)` with `W` given by an RREF basis.
fn dim_w_plus_tw(w: &Subspace, tt: &MatGF) -> usize {
    let tw = w.basis().mul(tt).expect("shapes agree");
    w.basis().stack(&tw).expect("same ambient").rank()
}

/// Number of `j`-dimensional invariant subspaces.
pub fn count_invariant(t: &MatGF, j: usize, guard: u64) -> Result<BigInt, CountingError> {
    let n = check_square(t)?;
    let tt = t.transpose();
    let c = enumerate_subspaces(t.ctx(), n, j, guard)?
        .filter(|w| dim_w_plus_tw(w, &tt) == j)
        .count();
    Ok(BigInt::from(c))
}

pub fn invariant_counts(t: &MatGF, guard: u64) -> Result<InvariantCounts, CountingError> {
    let n = check_square(t)?;
    (0..=n)
        .map(|j| count_invariant(t, j, guard))
        .collect::<Result<_, _>>()
        .map(InvariantCounts)
}

/// Number of `l`-dimensional `W` with `dim(W + TW) = 2l`.
pub fn count_anti_invariant_brute(t: &MatGF, l: usize, guard: u64) -> Result<BigInt, CountingError> {
    let n = check_square(t)?;
    if 2 * l > n {
        return Err(CountingError::Params(format!("need 2l <= n, got l={l}, n={n}")));
    }
    let tt = t.transpose();
    let c = enumerate_subspaces(t.ctx(), n, l, guard)?
        .filter(|w| dim_w_plus_tw(w, &tt) == 2 * l)
        .count();
    Ok(BigInt::from(c))
}

/// Number of `W` whose iterated sums `W + TW + ... + T^{i-1}W` have
/// dimensions `mu_1, mu_1 + mu_2, ...`.
pub fn sigma_profile_brute(t: &MatGF, mu: &Profile, guard: u64) -> Result<BigInt, CountingError> {
    let n = check_square(t)?;
    if mu.size() != n {
        return Err(CountingError::Params(format!(
            "profile {:?} does not sum to {n}",
            mu.parts()
        )));
    }
    let Some(&m1) = mu.parts().first() else {
        // Empty profile of the zero space.
        return Ok(BigInt::one());
    };
    let targets: Vec<usize> = mu
        .parts()
        .iter()
        .scan(0, |acc, &p| {
            *acc += p;
            Some(*acc)
        })
        .collect();
    let mut count = 0u64;
    for w in enumerate_subspaces(t.ctx(), n, m1, guard)? {
        let mut s = w.clone();
        let ok = targets.iter().skip(1).all(|&target| {
            s = w.sum(&s.image(t).expect("square")).expect("same ambient");
            s.dim() == target
        });
        if ok {
            count += 1;
        }
    }
    Ok(BigInt::from(count))
}

/// Number of `a`-dimensional `W` with `dim(W ∩ T^{-1}W) = b`.
pub fn pair_class_count(t: &MatGF, a: usize, b: usize, guard: u64) -> Result<BigInt, CountingError> {
    let n = check_square(t)?;
    if b > a || a > n {
        return Err(CountingError::Params(format!("need b <= a <= n, got a={a}, b={b}")));
    }
    let mut count = 0u64;
    for w in enumerate_subspaces(t.ctx(), n, a, guard)? {
        if w.intersect(&w.preimage(t)?)?.dim() == b {
            count += 1;
        }
    }
    Ok(BigInt::from(count))
}

/// Operator families used throughout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixKind {
    /// Single nilpotent Jordan block of size `n`.
    NilpotentJordan { n: usize },
    /// Companion matrix of a monic polynomial given by ascending coefficients
    /// (leading 1 included). With `require_irreducible`, reducible input is rejected.
    Companion { poly: Vec<Fe>, require_irreducible: bool },
    /// Diagonal matrix of the first `n` field elements.
    DiagDistinct { n: usize },
    /// Zero block of size `n-l+i` followed by an irreducible nonsingular
    /// companion block of size `l-i`.
    BlockTi { n: usize, l: usize, i: usize },
    /// Companion matrix of the smallest irreducible polynomial of degree `n`.
    Irreducible { n: usize },
}

/// Companion matrix: ones on the subdiagonal, last column `-c_0..-c_{d-1}`.
pub fn companion(ctx: &Arc<FieldCtx>, poly: &[Fe]) -> Result<MatGF, CountingError> {
    let d = poly
        .len()
        .checked_sub(1)
        .filter(|_| poly.last() == Some(&Fe::ONE))
        .ok_or_else(|| CountingError::Params("companion needs a monic polynomial".into()))?;
    let mut m = MatGF::zeros(ctx.clone(), d, d);
    for (i, &c) in poly[..d].iter().enumerate() {
        if i + 1 < d {
            m.set(i + 1, i, Fe::ONE);
        }
        m.set(i, d - 1, ctx.neg(c));
    }
    Ok(m)
}

fn irreducible_of_degree(ctx: &FieldCtx, d: usize, nonzero_constant: bool) -> Result<Vec<Fe>, CountingError> {
    ctx.smallest_irreducible(d, nonzero_constant)
        .ok_or_else(|| CountingError::Params(format!("no irreducible polynomial of degree {d}")))
}

pub fn matrix_construct(ctx: &Arc<FieldCtx>, kind: &MatrixKind) -> Result<MatGF, CountingError> {
    match kind {
        MatrixKind::NilpotentJordan { n } => {
            let mut m = MatGF::zeros(ctx.clone(), *n, *n);
            for i in 1..*n {
                m.set(i - 1, i, Fe::ONE);
            }
            Ok(m)
        }
        MatrixKind::Companion {
            poly,
            require_irreducible,
        } => {
            if *require_irreducible && !ctx.is_irreducible(poly) {
                return Err(CountingError::Params("polynomial is reducible".into()));
            }
            companion(ctx, poly)
        }
        MatrixKind::DiagDistinct { n } => {
            if (*n as u64) > u64::from(ctx.order()) {
                return Err(CountingError::Params(format!(
                    "need q >= n for distinct eigenvalues, q={}, n={n}",
                    ctx.order()
                )));
            }
            let mut m = MatGF::zeros(ctx.clone(), *n, *n);
            for (i, e) in ctx.elements().take(*n).enumerate() {
                m.set(i, i, e);
            }
            Ok(m)
        }
        MatrixKind::BlockTi { n, l, i } => {
            if *i < 1 || i > l || 2 * l > *n {
                return Err(CountingError::Params(format!(
                    "block_Ti needs 1 <= i <= l and 2l <= n, got n={n}, l={l}, i={i}"
                )));
            }
            let d = l - i;
            let mut m = MatGF::zeros(ctx.clone(), *n, *n);
            if d > 0 {
                let block = companion(ctx, &irreducible_of_degree(ctx, d, true)?)?;
                let off = n - d;
                for r in 0..d {
                    for c in 0..d {
                        m.set(off + r, off + c, block.get(r, c));
                    }
                }
            }
            Ok(m)
        }
        MatrixKind::Irreducible { n } => companion(ctx, &irreducible_of_degree(ctx, *n, false)?),
    }
}

/// Which closed form to use for the anti-invariant count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphaFormula<'a> {
    /// The general formula in terms of invariant-subspace counts.
    Main(&'a InvariantCounts),
    Nilpotent,
    Irreducible,
    DiagDistinct,
}

fn q_pow(e: i64) -> QPoly {
    QPoly::monomial(1, e as usize)
}

/// The alternating sum
/// `q^C(l,2) Σ_j (-1)^j (x_j - x_{j-1}) [n-l-j, n-2l] q^C(l-j+1,2)`
/// with integer `x`.
fn alternating_alpha(n: i64, l: i64, x: impl Fn(i64) -> BigInt) -> QPoly {
    let sum: QPoly = (0..=l)
        .map(|j| {
            let diff = sign(j) * (x(j) - x(j - 1));
            qbinom(n - l - j, n - 2 * l)
                .shift(choose2(l - j + 1) as usize)
                .scale(&diff)
        })
        .sum();
    sum.shift(choose2(l) as usize)
}

/// Closed-form anti-invariant count as a polynomial in `q`. For
/// [`AlphaFormula::Main`] the invariant counts are fixed integers, so the
/// result is only meaningful evaluated at the field order they came from.
pub fn closed_form_alpha(n: usize, l: usize, formula: AlphaFormula<'_>) -> Result<QPoly, CountingError> {
    if 2 * l > n {
        return Err(CountingError::Params(format!("need 2l <= n, got l={l}, n={n}")));
    }
    let (n, l) = (n as i64, l as i64);
    Ok(match formula {
        AlphaFormula::Main(x) => {
            if x.n() != n as usize {
                return Err(CountingError::Params(format!(
                    "invariant counts are for n={}, expected {n}",
                    x.n()
                )));
            }
            alternating_alpha(n, l, |j| x.get(j))
        }
        AlphaFormula::Nilpotent => qbinom(n - l, n - 2 * l).shift((l * l) as usize),
        AlphaFormula::Irreducible => {
            let a = qbinom(n - l, n - 2 * l).shift(choose2(l + 1) as usize);
            let b = qbinom(n - l - 1, n - 2 * l).shift(choose2(l) as usize);
            (a + b).shift(choose2(l) as usize)
        }
        AlphaFormula::DiagDistinct => alternating_alpha(n, l, |j| binomial(n, j)),
    })
}

/// Which closed form to use for a profile count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SigmaFormula {
    Irreducible(Profile),
    Nilpotent(Profile),
    /// Splitting subspaces: profile `(m, m, ..., m)` with `d` parts.
    GhorpadeRam {
        m: usize,
        d: usize,
    },
}

/// `(q^a - 1) / (q^b - 1)`, which must be a polynomial.
fn q_ratio(a: usize, b: usize) -> Result<QPoly, CountingError> {
    let num = q_pow(a as i64) - QPoly::one();
    let den = q_pow(b as i64) - QPoly::one();
    Ok(num.div_exact(&den)?)
}

pub fn sigma_closed(formula: &SigmaFormula) -> Result<QPoly, CountingError> {
    let chain = |mu: &Profile, extra: fn(usize) -> usize| -> QPoly {
        mu.parts()
            .windows(2)
            .map(|w| qbinom(w[0] as i64, w[1] as i64).shift(extra(w[1])))
            .fold(QPoly::one(), |acc, f| acc * f)
    };
    match formula {
        SigmaFormula::Irreducible(mu) => {
            let m1 = *mu
                .parts()
                .first()
                .ok_or_else(|| CountingError::Params("empty profile".into()))?;
            Ok(q_ratio(mu.size(), m1)? * chain(mu, |p| p * p - p))
        }
        SigmaFormula::Nilpotent(mu) => Ok(chain(mu, |p| p * p)),
        SigmaFormula::GhorpadeRam { m, d } => {
            if *m == 0 || *d == 0 {
                return Err(CountingError::Params("m and d must be positive".into()));
            }
            Ok(q_ratio(m * d, *m)?.shift(m * (m - 1) * (d - 1)))
        }
    }
}

/// Evaluate a polynomial at the order of `ctx`.
pub fn at_q(p: &QPoly, ctx: &FieldCtx) -> BigInt {
    p.eval(&BigInt::from(ctx.order()))
}

/// Right side of the pair-class recurrence for `b < a`, built from brute
/// counts `pc(a', b')` and `X`.
pub fn pair_class_recurrence_rhs(
    q: u32,
    n: usize,
    a: usize,
    b: usize,
    x: &InvariantCounts,
    pc: impl Fn(usize, usize) -> BigInt,
) -> BigInt {
    let qb = |top: i64, bot: i64| qbinom(top, bot).eval(&BigInt::from(q));
    let (ni, ai, bi) = (n as i64, a as i64, b as i64);
    let mut total = x.get(bi) * qb(ni - bi, ai - bi) - x.get(ai) * qb(ai, bi);
    for j in 0..b {
        total += pc(b, j) * qb(ni - 2 * bi + j as i64, ai - 2 * bi + j as i64);
    }
    for k in b + 1..a {
        total -= pc(a, k) * qb(k as i64, bi);
    }
    total
}

/// Brute-force pair-class table `pc[a][b]` for `0 <= b <= a <= n`.
pub fn pair_class_table(t: &MatGF, guard: u64) -> Result<Vec<Vec<BigInt>>, CountingError> {
    let n = check_square(t)?;
    (0..=n)
        .map(|a| (0..=a).map(|b| pair_class_count(t, a, b, guard)).collect())
        .collect()
}

/// Sum of `pc[a][b]` over `b`, for checking against the total subspace count.
pub fn pair_class_total(row: &[BigInt]) -> BigInt {
    row.iter().fold(BigInt::zero(), |acc, v| acc + v)
}
