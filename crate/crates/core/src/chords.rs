//! Involutions drawn as extended chord diagrams, their crossing statistic,
//! the q-Hermite Catalan matrix, and Touchard polynomials.
//!
//! In an extended chord diagram every 2-cycle `(i, j)` is an arc and every
//! fixed point is an arc to a node `∞` placed right of all others. Two arcs
//! `(i, j)` and `(k, l)` cross when `i < k < j < l`; arcs that share the `∞`
//! endpoint never cross.

use std::fmt;

use crate::exactalg::{binomial, choose2, sign, QPoly};
use crate::qseries::{qbinom, qint};

/// An involution on `{1, ..., n}`, stored 0-based. `None` marks a fixed
/// point (an arc to `∞`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Involution {
    partner: Vec<Option<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not an involution: {0}")]
pub struct InvolutionError(String);

impl Involution {
    /// Validate a 0-based partner array.
    pub fn new(partner: Vec<Option<usize>>) -> Result<Self, InvolutionError> {
        let n = partner.len();
        for (i, p) in partner.iter().enumerate() {
            if let Some(j) = *p {
                if j >= n || j == i || partner[j] != Some(i) {
                    return Err(InvolutionError(format!("bad partner at position {}", i + 1)));
                }
            }
        }
        Ok(Involution { partner })
    }

    /// Build from 1-based 2-cycles on `[n]`; unlisted points are fixed.
    pub fn from_cycles(n: usize, cycles: &[(usize, usize)]) -> Result<Self, InvolutionError> {
        let mut partner = vec![None; n];
        for &(a, b) in cycles {
            if a == 0 || b == 0 || a > n || b > n || a == b {
                return Err(InvolutionError(format!("cycle ({a},{b}) out of range")));
            }
            if partner[a - 1].is_some() || partner[b - 1].is_some() {
                return Err(InvolutionError(format!("point reused in ({a},{b})")));
            }
            partner[a - 1] = Some(b - 1);
            partner[b - 1] = Some(a - 1);
        }
        Ok(Involution { partner })
    }

    pub fn identity(n: usize) -> Self {
        Involution { partner: vec![None; n] }
    }

    pub fn len(&self) -> usize {
        self.partner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partner.is_empty()
    }

    pub fn partner(&self) -> &[Option<usize>] {
        &self.partner
    }

    pub fn fixed_points(&self) -> usize {
        self.partner.iter().filter(|p| p.is_none()).count()
    }

    /// Number of crossing pairs of arcs.
    pub fn crossings(&self) -> usize {
        crossings_of(&self.partner)
    }
}

/// 1-based cycle notation; fixed points are omitted, the identity prints `()`.
impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for (i, p) in self.partner.iter().enumerate() {
            if let Some(j) = *p {
                if i < j {
                    write!(f, "({},{})", i + 1, j + 1)?;
                    any = true;
                }
            }
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

fn arcs(partner: &[Option<usize>]) -> Vec<(usize, usize)> {
    let inf = partner.len();
    partner
        .iter()
        .enumerate()
        .filter_map(|(i, p)| match *p {
            Some(j) if i < j => Some((i, j)),
            Some(_) => None,
            None => Some((i, inf)),
        })
        .collect()
}

fn crossings_of(partner: &[Option<usize>]) -> usize {
    let arcs = arcs(partner);
    let mut count = 0;
    for (x, &(i, j)) in arcs.iter().enumerate() {
        for &(k, l) in &arcs[x + 1..] {
            let ((a, b), (c, d)) = if i < k { ((i, j), (k, l)) } else { ((k, l), (i, j)) };
            if a < c && c < b && b < d {
                count += 1;
            }
        }
    }
    count
}

/// Visit every involution of `[n]` with exactly `k` fixed points, in
/// canonical order (lexicographic on the partner array, `∞` last).
pub fn for_each_involution(n: usize, k: usize, mut visit: impl FnMut(&[Option<usize>])) {
    if k > n || (n - k) % 2 == 1 {
        return;
    }
    let mut partner: Vec<Option<usize>> = vec![None; n];
    let mut assigned = vec![false; n];
    fn rec(
        pos: usize,
        fixed_left: usize,
        pairs_left: usize,
        partner: &mut Vec<Option<usize>>,
        assigned: &mut Vec<bool>,
        visit: &mut dyn FnMut(&[Option<usize>]),
    ) {
        let n = partner.len();
        let mut pos = pos;
        while pos < n && assigned[pos] {
            pos += 1;
        }
        if pos == n {
            visit(partner);
            return;
        }
        if pairs_left > 0 {
            for j in pos + 1..n {
                if assigned[j] {
                    continue;
                }
                assigned[pos] = true;
                assigned[j] = true;
                partner[pos] = Some(j);
                partner[j] = Some(pos);
                rec(pos + 1, fixed_left, pairs_left - 1, partner, assigned, visit);
                assigned[pos] = false;
                assigned[j] = false;
                partner[pos] = None;
                partner[j] = None;
            }
        }
        if fixed_left > 0 {
            assigned[pos] = true;
            partner[pos] = None;
            rec(pos + 1, fixed_left - 1, pairs_left, partner, assigned, visit);
            assigned[pos] = false;
        }
    }
    rec(0, k, (n - k) / 2, &mut partner, &mut assigned, &mut visit);
}

/// All involutions of `[n]` with `k` fixed points, in canonical order.
pub fn enumerate_involutions(n: usize, k: usize) -> Vec<Involution> {
    let mut out = Vec::new();
    for_each_involution(n, k, |p| out.push(Involution { partner: p.to_vec() }));
    out
}

/// How to compute `a_{nk}(q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnkMethod {
    /// Sum `q^crossings` over every involution.
    Enumerate,
    /// `a_{nk} = a_{n-1,k-1} + [k+1]_q a_{n-1,k+1}`.
    Recurrence,
}

/// Crossing generating polynomial `a_{nk}(q)` of involutions of `[n]` with
/// `k` fixed points.
pub fn ank(n: usize, k: usize, method: AnkMethod) -> QPoly {
    match method {
        AnkMethod::Enumerate => ank_enumerate(n, k),
        AnkMethod::Recurrence => ank_table(n)[n].get(k).cloned().unwrap_or_default(),
    }
}

fn ank_enumerate(n: usize, k: usize) -> QPoly {
    let mut hist: Vec<u64> = Vec::new();
    for_each_involution(n, k, |p| {
        let v = crossings_of(p);
        if hist.len() <= v {
            hist.resize(v + 1, 0);
        }
        hist[v] += 1;
    });
    QPoly::from_coeffs(hist.into_iter().map(Into::into).collect())
}

/// Rows `0..=n` of `a_{mk}` via the recurrence; row `m` has entries `k = 0..=m`.
fn ank_table(n: usize) -> Vec<Vec<QPoly>> {
    let mut rows: Vec<Vec<QPoly>> = vec![vec![QPoly::one()]];
    for m in 1..=n {
        let prev = &rows[m - 1];
        let get = |k: usize| prev.get(k).cloned().unwrap_or_default();
        let row = (0..=m)
            .map(|k| {
                let down = if k > 0 { get(k - 1) } else { QPoly::zero() };
                down + qint(k + 1) * get(k + 1)
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// Touchard polynomial `T_m(q) = a_{2m,0}(q)`, by enumeration of perfect
/// matchings.
pub fn touchard(m: usize) -> QPoly {
    ank(2 * m, 0, AnkMethod::Enumerate)
}

/// `sum_{j=0}^{m} (-1)^j [C(2m,j) - C(2m,j-1)] q^C(m-j+1,2)`, which equals
/// `(q-1)^m T_m(q)`.
pub fn touchard_riordan_rhs(m: usize) -> QPoly {
    let m = m as i64;
    (0..=m)
        .map(|j| {
            let c = sign(j) * (binomial(2 * m, j) - binomial(2 * m, j - 1));
            QPoly::monomial(c, choose2(m - j + 1) as usize)
        })
        .sum()
}

/// `sum_{j=0}^{l} (-1)^j [C(n,j) - C(n,j-1)] [n-l-j, n-2l]_q q^C(l-j+1,2)`,
/// which equals `(q-1)^l a_{n,n-2l}(q)`.
pub fn touchard_formula_rhs(n: usize, l: usize) -> QPoly {
    assert!(n >= 2 * l, "need n >= 2l");
    let (n, l) = (n as i64, l as i64);
    (0..=l)
        .map(|j| {
            let c = sign(j) * (binomial(n, j) - binomial(n, j - 1));
            qbinom(n - l - j, n - 2 * l)
                .shift(choose2(l - j + 1) as usize)
                .scale(&c)
        })
        .sum()
}

/// Catalan matrix of a three-term recurrence:
/// `c_{nk} = c_{n-1,k-1} + b_k c_{n-1,k} + lambda_{k+1} c_{n-1,k+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalanMatrix {
    b: Vec<QPoly>,
    lambda: Vec<QPoly>,
    entries: Vec<Vec<QPoly>>,
}

impl CatalanMatrix {
    /// Fill rows `0..rows`. `lambda(0)` is never consulted.
    pub fn new(b: impl Fn(usize) -> QPoly, lambda: impl Fn(usize) -> QPoly, rows: usize) -> Self {
        let b: Vec<QPoly> = (0..rows.max(1)).map(&b).collect();
        let lambda: Vec<QPoly> = (0..=rows.max(1))
            .map(|k| if k == 0 { QPoly::zero() } else { lambda(k) })
            .collect();
        let mut entries: Vec<Vec<QPoly>> = Vec::with_capacity(rows);
        if rows > 0 {
            entries.push(vec![QPoly::one()]);
        }
        for n in 1..rows {
            let prev = &entries[n - 1];
            let get = |k: usize| prev.get(k).cloned().unwrap_or_default();
            let row = (0..=n)
                .map(|k| {
                    let mut c = if k > 0 { get(k - 1) } else { QPoly::zero() };
                    c += &(&b[k] * &get(k));
                    c += &(&lambda[k + 1] * &get(k + 1));
                    c
                })
                .collect();
            entries.push(row);
        }
        CatalanMatrix { b, lambda, entries }
    }

    /// The q-Hermite case `b_k = 0`, `lambda_k = [k]_q`.
    pub fn q_hermite(rows: usize) -> Self {
        CatalanMatrix::new(|_| QPoly::zero(), qint, rows)
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    /// `c_{nk}`, zero above the diagonal.
    pub fn entry(&self, n: usize, k: usize) -> QPoly {
        self.entries[n].get(k).cloned().unwrap_or_default()
    }

    /// Moment `mu_n = c_{n0}`.
    pub fn moment(&self, n: usize) -> QPoly {
        self.entry(n, 0)
    }

    pub fn b(&self) -> &[QPoly] {
        &self.b
    }

    pub fn lambda(&self) -> &[QPoly] {
        &self.lambda
    }

    /// Nonzero-pattern rows: `(n, k, c_{nk})` for `0 <= k <= n`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &QPoly)> {
        self.entries
            .iter()
            .enumerate()
            .flat_map(|(n, row)| row.iter().enumerate().map(move |(k, c)| (n, k, c)))
    }
}

/// Number of involutions of `[n]`: `I(n) = I(n-1) + (n-1) I(n-2)`.
pub fn telephone(n: usize) -> u128 {
    let (mut a, mut b) = (1u128, 1u128);
    for m in 2..=n {
        let c = b + (m as u128 - 1) * a;
        a = b;
        b = c;
    }
    if n == 0 {
        1
    } else {
        b
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_i64s(c)
    }

    fn double_factorial_odd(m: usize) -> usize {
        (1..=m).map(|i| 2 * i - 1).product()
    }

    #[test]
    fn enumerate_small() {
        let two = enumerate_involutions(2, 0);
        assert_eq!(two.len(), 1);
        assert_eq!(two[0].to_string(), "(1,2)");
        assert_eq!(enumerate_involutions(4, 0).len(), double_factorial_odd(2));
        assert!(enumerate_involutions(3, 0).is_empty());
        assert!(enumerate_involutions(2, 3).is_empty());
        assert_eq!(enumerate_involutions(0, 0).len(), 1);
    }

    #[test]
    fn enumeration_is_canonical_order() {
        let key = |inv: &Involution| -> Vec<usize> { inv.partner().iter().map(|p| p.unwrap_or(usize::MAX)).collect() };
        for n in 0..=7 {
            for k in 0..=n {
                let all = enumerate_involutions(n, k);
                for w in all.windows(2) {
                    assert!(key(&w[0]) < key(&w[1]));
                }
                assert!(all.iter().all(|i| i.fixed_points() == k));
            }
        }
    }

    #[test]
    fn perfect_matching_counts() {
        for m in 0..=5 {
            assert_eq!(enumerate_involutions(2 * m, 0).len(), double_factorial_odd(m));
        }
    }

    #[test]
    fn crossing_examples() {
        let sigma = Involution::from_cycles(8, &[(1, 4), (2, 6), (7, 8)]).unwrap();
        assert_eq!(sigma.crossings(), 4);
        assert_eq!(Involution::identity(5).crossings(), 0);
        assert_eq!(Involution::from_cycles(4, &[(1, 3), (2, 4)]).unwrap().crossings(), 1);
        assert_eq!(Involution::from_cycles(4, &[(1, 4), (2, 3)]).unwrap().crossings(), 0);
        // a fixed point under an arc crosses it
        assert_eq!(Involution::from_cycles(3, &[(1, 3)]).unwrap().crossings(), 1);
    }

    #[test]
    fn involution_validation() {
        assert!(Involution::new(vec![Some(1), Some(0), None]).is_ok());
        assert!(Involution::new(vec![Some(1), None]).is_err());
        assert!(Involution::new(vec![Some(0)]).is_err());
        assert!(Involution::from_cycles(3, &[(1, 2), (2, 3)]).is_err());
    }

    #[test]
    fn ank_examples() {
        for method in [AnkMethod::Enumerate, AnkMethod::Recurrence] {
            assert_eq!(ank(2, 0, method), QPoly::one());
            assert_eq!(ank(4, 0, method), p(&[2, 1]));
            assert_eq!(ank(1, 1, method), QPoly::one());
            assert!(ank(3, 0, method).is_zero());
            assert!(ank(2, 5, method).is_zero());
        }
    }

    #[test]
    fn ank_methods_agree() {
        for n in 0..=10 {
            let mut total = 0u128;
            for k in 0..=n {
                let e = ank(n, k, AnkMethod::Enumerate);
                assert_eq!(e, ank(n, k, AnkMethod::Recurrence), "n={n} k={k}");
                let at_one = e.eval_i64(1);
                assert_eq!(at_one, BigInt::from(enumerate_involutions(n, k).len()));
                total += u128::try_from(at_one).unwrap();
            }
            assert_eq!(total, telephone(n));
        }
    }

    #[test]
    fn touchard_values() {
        assert_eq!(touchard(0), QPoly::one());
        assert_eq!(touchard(1), QPoly::one());
        assert_eq!(touchard(2), p(&[2, 1]));
        assert_eq!(touchard_riordan_rhs(2), p(&[2, -3, 0, 1]));
    }

    #[test]
    fn touchard_riordan_small() {
        let qm1 = p(&[-1, 1]);
        for m in 0..=6 {
            assert_eq!(qm1.pow(m as u32) * touchard(m), touchard_riordan_rhs(m), "m={m}");
        }
    }

    #[test]
    fn touchard_formula_small() {
        let qm1 = p(&[-1, 1]);
        for n in 0..=8usize {
            assert_eq!(touchard_formula_rhs(n, 0), QPoly::one());
            for l in 0..=n / 2 {
                let lhs = qm1.pow(l as u32) * ank(n, n - 2 * l, AnkMethod::Recurrence);
                assert_eq!(lhs, touchard_formula_rhs(n, l), "n={n} l={l}");
            }
        }
        for l in 0..=5 {
            assert_eq!(touchard_formula_rhs(2 * l, l), touchard_riordan_rhs(l));
        }
    }

    #[test]
    fn catalan_q_hermite_matches_ank() {
        let c = CatalanMatrix::q_hermite(11);
        for n in 0..=10 {
            for k in 0..=n + 1 {
                assert_eq!(c.entry(n, k), ank(n, k, AnkMethod::Enumerate));
            }
        }
        assert_eq!(c.entry(0, 0), QPoly::one());
        assert!(c.entry(0, 3).is_zero());
    }

    /// Dyck paths of semilength m, counted by brute force over step sequences.
    fn dyck_paths(m: usize) -> u64 {
        (0u32..1 << (2 * m))
            .filter(|bits| {
                let mut h = 0i32;
                for i in 0..2 * m {
                    h += if bits >> i & 1 == 1 { 1 } else { -1 };
                    if h < 0 {
                        return false;
                    }
                }
                h == 0
            })
            .count() as u64
    }

    #[test]
    fn catalan_unit_weights_give_catalan_numbers() {
        let c = CatalanMatrix::new(|_| QPoly::zero(), |_| QPoly::one(), 12);
        for m in 0..=5 {
            assert_eq!(c.moment(2 * m).eval_i64(1), BigInt::from(dyck_paths(m)));
            assert!(c.moment(2 * m + 1).is_zero());
        }
    }

    #[test]
    fn telephone_numbers() {
        let expected = [1u128, 1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(telephone(n), e);
        }
    }
}
