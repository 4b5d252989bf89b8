//! Finite fields `GF(p^k)` for small `p` and `k`.
//!
//! An element is a polynomial of degree `< k` over `GF(p)` reduced modulo a
//! monic irreducible `modulus`. [`Fe`] stores it as the integer
//! `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`; the canonical element order is the
//! numeric order of that encoding, so zero comes first and one second.

use serde::{Deserialize, Serialize};

/// Largest supported extension degree.
pub const MAX_DEGREE: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("extension degree must be in 1..={MAX_DEGREE}, got {0}")]
    BadDegree(usize),
    #[error("field of order {0}^{1} is too large")]
    TooLarge(u32, usize),
    #[error("modulus must be monic of degree {0}")]
    BadModulus(usize),
    #[error("modulus coefficient {0} is not reduced mod {1}")]
    UnreducedCoefficient(u32, u32),
    #[error("reducible modulus")]
    ReducibleModulus,
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("inversion of zero")]
    InverseOfZero,
    #[error("element {0:?} does not belong to this field")]
    BadElement(Vec<u32>),
}

/// A field element, encoded as described in the module docs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fe(u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    /// Position in the canonical element order.
    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// `GF(p^k)` with a fixed monic irreducible modulus (ascending coefficients,
/// length `k + 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldCtx {
    p: u32,
    k: usize,
    modulus: Vec<u32>,
    q: u32,
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldCtx {
    /// Construct `GF(p^k)`. Without a modulus, the smallest monic
    /// irreducible of degree `k` (in canonical polynomial order) is used.
    pub fn new(p: u32, k: usize, modulus: Option<Vec<u32>>) -> Result<FieldCtx, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if k == 0 || k > MAX_DEGREE {
            return Err(FieldError::BadDegree(k));
        }
        let q = (p as u64)
            .checked_pow(k as u32)
            .filter(|&q| q <= u32::MAX as u64 && p < (1 << 16))
            .ok_or(FieldError::TooLarge(p, k))? as u32;
        let prime = FieldCtx {
            p,
            k: 1,
            modulus: vec![0, 1],
            q: p,
        };
        let modulus = match modulus {
            Some(m) => {
                if m.len() != k + 1 || m[k] != 1 {
                    return Err(FieldError::BadModulus(k));
                }
                if let Some(&c) = m.iter().find(|&&c| c >= p) {
                    return Err(FieldError::UnreducedCoefficient(c, p));
                }
                let as_fe: Vec<Fe> = m.iter().map(|&c| Fe(c)).collect();
                if !prime.is_irreducible(&as_fe) {
                    return Err(FieldError::ReducibleModulus);
                }
                m
            }
            None => {
                if k == 1 {
                    vec![0, 1]
                } else {
                    let f = prime
                        .smallest_irreducible(k, false)
                        .expect("irreducible polynomials exist in every degree");
                    f.iter().map(|c| c.0).collect()
                }
            }
        };
        Ok(FieldCtx { p, k, modulus, q })
    }

    pub fn prime(p: u32) -> Result<FieldCtx, FieldError> {
        FieldCtx::new(p, 1, None)
    }

    /// The field of order `q` with its default modulus.
    pub fn with_order(q: u32) -> Result<FieldCtx, FieldError> {
        let p = (2..=q)
            .find(|&d| q.is_multiple_of(d))
            .ok_or(FieldError::NotPrimePower(q))?;
        let mut rest = q;
        let mut k = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            k += 1;
        }
        if rest != 1 {
            return Err(FieldError::NotPrimePower(q));
        }
        FieldCtx::new(p, k, None)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    /// Number of elements.
    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> Fe {
        Fe::ZERO
    }

    pub fn one(&self) -> Fe {
        Fe::ONE
    }

    /// Element with the given ascending coefficient vector (shorter vectors
    /// are zero-padded).
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Fe, FieldError> {
        if coeffs.len() > self.k || coeffs.iter().any(|&c| c >= self.p) {
            return Err(FieldError::BadElement(coeffs.to_vec()));
        }
        Ok(self.encode(coeffs))
    }

    /// Element by canonical index.
    pub fn element(&self, index: u32) -> Result<Fe, FieldError> {
        if index < self.q {
            Ok(Fe(index))
        } else {
            Err(FieldError::BadElement(vec![index]))
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, c: i64) -> Fe {
        Fe(c.rem_euclid(self.p as i64) as u32)
    }

    pub fn coeffs(&self, a: Fe) -> Vec<u32> {
        let mut out = vec![0; self.k];
        self.decode(a, &mut out);
        out
    }

    fn encode(&self, coeffs: &[u32]) -> Fe {
        let mut v = 0u32;
        for &c in coeffs.iter().rev() {
            v = v * self.p + c;
        }
        Fe(v)
    }

    fn decode(&self, a: Fe, out: &mut [u32]) {
        let mut v = a.0;
        for slot in out.iter_mut().take(self.k) {
            *slot = v % self.p;
            v /= self.p;
        }
    }

    /// All `q` elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> + Clone {
        (0..self.q).map(Fe)
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        if self.k == 1 {
            return Fe((a.0 + b.0) % self.p);
        }
        let (mut x, mut y) = ([0u32; MAX_DEGREE], [0u32; MAX_DEGREE]);
        self.decode(a, &mut x);
        self.decode(b, &mut y);
        for i in 0..self.k {
            x[i] = (x[i] + y[i]) % self.p;
        }
        self.encode(&x[..self.k])
    }

    pub fn neg(&self, a: Fe) -> Fe {
        if self.k == 1 {
            return Fe((self.p - a.0) % self.p);
        }
        let mut x = [0u32; MAX_DEGREE];
        self.decode(a, &mut x);
        for c in x.iter_mut().take(self.k) {
            *c = (self.p - *c) % self.p;
        }
        self.encode(&x[..self.k])
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        let p = self.p as u64;
        if self.k == 1 {
            return Fe(((a.0 as u64 * b.0 as u64) % p) as u32);
        }
        if a.is_zero() || b.is_zero() {
            return Fe::ZERO;
        }
        let k = self.k;
        let (mut x, mut y) = ([0u32; MAX_DEGREE], [0u32; MAX_DEGREE]);
        self.decode(a, &mut x);
        self.decode(b, &mut y);
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..k {
            if x[i] == 0 {
                continue;
            }
            for j in 0..k {
                prod[i + j] = (prod[i + j] + x[i] as u64 * y[j] as u64) % p;
            }
        }
        // reduce by the monic modulus: t^k = -sum m_i t^i
        for d in (k..2 * k - 1).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for i in 0..k {
                let sub = c * self.modulus[i] as u64 % p;
                prod[d - k + i] = (prod[d - k + i] + p - sub) % p;
            }
        }
        let mut out = [0u32; MAX_DEGREE];
        for i in 0..k {
            out[i] = prod[i] as u32;
        }
        self.encode(&out[..k])
    }

    pub fn pow(&self, a: Fe, mut e: u64) -> Fe {
        let mut base = a;
        let mut acc = Fe::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by the extended Euclidean algorithm on the
    /// coefficient polynomials.
    pub fn inv(&self, a: Fe) -> Result<Fe, FieldError> {
        if a.is_zero() {
            return Err(FieldError::InverseOfZero);
        }
        let p = self.p;
        if self.k == 1 {
            return Ok(Fe(inv_mod(a.0, p)));
        }
        // Invariant: s * a == r0 (mod modulus)
        let mut r0: Vec<u32> = self.coeffs(a);
        trim(&mut r0);
        let mut r1: Vec<u32> = self.modulus.clone();
        let mut s0: Vec<u32> = vec![1];
        let mut s1: Vec<u32> = vec![];
        while r0.len() > 1 {
            // r1 = r1 - quot * r0, s1 = s1 - quot * s0
            let (quot, rem) = gfp_divrem(&r1, &r0, p);
            let s_new = gfp_sub(&s1, &gfp_mul(&quot, &s0, p), p);
            r1 = r0;
            s1 = s0;
            r0 = rem;
            s0 = s_new;
        }
        // r0 is a nonzero constant since the modulus is irreducible
        let c_inv = inv_mod(r0[0], p);
        let mut s: Vec<u32> = s0
            .iter()
            .map(|&c| (c as u64 * c_inv as u64 % p as u64) as u32)
            .collect();
        s.resize(self.k, 0);
        Ok(self.encode(&s))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `x -> x^p`.
    pub fn frobenius(&self, a: Fe) -> Fe {
        self.pow(a, self.p as u64)
    }

    /// Remainder of `a` by `b` for polynomials over this field (ascending
    /// coefficients, `b` nonzero with nonzero leading coefficient).
    pub fn poly_rem(&self, a: &[Fe], b: &[Fe]) -> Vec<Fe> {
        let db = b.len() - 1;
        let lead_inv = self.inv(b[db]).expect("leading coefficient nonzero");
        let mut r = a.to_vec();
        while r.len() > db {
            let top = *r.last().unwrap();
            let shift = r.len() - 1 - db;
            if !top.is_zero() {
                let c = self.mul(top, lead_inv);
                for (i, &bi) in b.iter().enumerate() {
                    r[shift + i] = self.sub(r[shift + i], self.mul(c, bi));
                }
            }
            r.pop();
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
        r
    }

    /// Monic polynomials of degree `d` over this field in canonical order
    /// (numeric order of the base-`q` encoding of the low coefficients).
    pub fn monic_polys(&self, d: usize) -> impl Iterator<Item = Vec<Fe>> + '_ {
        let count = (self.q as u64).pow(d as u32);
        (0..count).map(move |mut idx| {
            let mut f = Vec::with_capacity(d + 1);
            for _ in 0..d {
                f.push(Fe((idx % self.q as u64) as u32));
                idx /= self.q as u64;
            }
            f.push(Fe::ONE);
            f
        })
    }

    /// Irreducibility of a polynomial of positive degree by trial division
    /// by all monic polynomials of degree up to half its degree.
    pub fn is_irreducible(&self, f: &[Fe]) -> bool {
        let mut f = f.to_vec();
        while f.last().is_some_and(|c| c.is_zero()) {
            f.pop();
        }
        let deg = match f.len().checked_sub(1) {
            Some(d) if d >= 1 => d,
            _ => return false,
        };
        for d in 1..=deg / 2 {
            for g in self.monic_polys(d) {
                if self.poly_rem(&f, &g).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// First monic irreducible of degree `d` in canonical order, optionally
    /// requiring a nonzero constant term.
    pub fn smallest_irreducible(&self, d: usize, nonzero_constant: bool) -> Option<Vec<Fe>> {
        self.monic_polys(d)
            .filter(|f| !nonzero_constant || !f[0].is_zero())
            .find(|f| self.is_irreducible(f))
    }

    pub fn spec(&self) -> FieldSpec {
        FieldSpec {
            p: self.p,
            k: self.k,
            modulus: (self.k > 1).then(|| self.modulus.clone()),
        }
    }
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // p prime: a^(p-2)
    let (mut base, mut e, mut acc) = (a as u64 % p as u64, p as u64 - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn gfp_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let mut out: Vec<u32> = out.into_iter().map(|c| c as u32).collect();
    trim(&mut out);
    out
}

fn gfp_sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let len = a.len().max(b.len());
    let mut out: Vec<u32> = (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut out);
    out
}

fn gfp_divrem(a: &[u32], b: &[u32], p: u32) -> (Vec<u32>, Vec<u32>) {
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p) as u64;
    let mut r: Vec<u32> = a.to_vec();
    trim(&mut r);
    if r.len() <= db {
        return (vec![], r);
    }
    let mut quot = vec![0u32; r.len() - db];
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = (*r.last().unwrap() as u64 * lead_inv % p as u64) as u32;
        quot[shift] = c;
        for (i, &bi) in b.iter().enumerate() {
            let sub = (c as u64 * bi as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        trim(&mut r);
    }
    trim(&mut quot);
    (quot, r)
}

/// Field description in matrix files: `{"p":2,"k":2,"modulus":[1,1,1]}`.
/// The modulus may be omitted, in which case the canonical one is chosen.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    #[serde(default = "one")]
    pub k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

fn one() -> usize {
    1
}

impl FieldSpec {
    pub fn build(&self) -> Result<FieldCtx, FieldError> {
        FieldCtx::new(self.p, self.k, self.modulus.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_fields() -> Vec<FieldCtx> {
        [
            (2, 1),
            (3, 1),
            (5, 1),
            (7, 1),
            (11, 1),
            (13, 1),
            (2, 2),
            (2, 3),
            (2, 4),
            (3, 2),
        ]
        .into_iter()
        .map(|(p, k)| FieldCtx::new(p, k, None).unwrap())
        .collect()
    }

    #[test]
    fn prime_field_and_default_moduli() {
        let f5 = FieldCtx::new(5, 1, None).unwrap();
        assert_eq!(f5.modulus(), &[0, 1]);
        let f4 = FieldCtx::new(2, 2, None).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        let f8 = FieldCtx::new(2, 3, None).unwrap();
        assert_eq!(f8.modulus(), &[1, 1, 0, 1]);
        let f9 = FieldCtx::new(3, 2, None).unwrap();
        assert_eq!(f9.modulus(), &[1, 0, 1]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            FieldCtx::new(2, 2, Some(vec![0, 0, 1])),
            Err(FieldError::ReducibleModulus)
        );
        assert_eq!(
            FieldCtx::new(2, 2, Some(vec![1, 0, 1])),
            Err(FieldError::ReducibleModulus)
        );
        assert_eq!(FieldCtx::new(4, 1, None), Err(FieldError::NotPrime(4)));
        assert_eq!(FieldCtx::new(1, 1, None), Err(FieldError::NotPrime(1)));
        assert_eq!(FieldCtx::new(2, 0, None), Err(FieldError::BadDegree(0)));
        assert_eq!(FieldCtx::with_order(9).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(FieldCtx::with_order(7).unwrap().degree(), 1);
        assert_eq!(FieldCtx::with_order(12), Err(FieldError::NotPrimePower(12)));
        assert_eq!(FieldCtx::with_order(1), Err(FieldError::NotPrimePower(1)));
        assert_eq!(FieldCtx::new(2, 2, Some(vec![1, 1])), Err(FieldError::BadModulus(2)));
        assert_eq!(FieldCtx::new(2, 2, Some(vec![1, 1, 2])), Err(FieldError::BadModulus(2)));
        assert!(FieldCtx::new(3, 2, Some(vec![2, 0, 1])).is_err()); // t^2 - 1
        assert!(FieldCtx::new(3, 2, Some(vec![1, 0, 1])).is_ok());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = FieldCtx::prime(5).unwrap();
        assert_eq!(f.add(f.from_int(2), f.from_int(3)), f.zero());
        assert_eq!(f.mul(f.from_int(3), f.from_int(4)), f.from_int(2));
        assert_eq!(f.inv(f.from_int(2)).unwrap(), f.from_int(3));
        assert_eq!(f.inv(f.zero()), Err(FieldError::InverseOfZero));
        assert_eq!(f.from_int(-1), f.from_int(4));
    }

    #[test]
    fn gf4_arithmetic() {
        let f = FieldCtx::new(2, 2, Some(vec![1, 1, 1])).unwrap();
        let t = f.from_coeffs(&[0, 1]).unwrap();
        let t1 = f.from_coeffs(&[1, 1]).unwrap();
        assert_eq!(f.mul(t, t), t1);
        assert_eq!(f.inv(t).unwrap(), t1);
        assert_eq!(f.div(f.one(), t1).unwrap(), t);
        assert_eq!(f.coeffs(t1), vec![1, 1]);
        assert!(f.from_coeffs(&[2]).is_err());
        assert!(f.from_coeffs(&[0, 0, 1]).is_err());
    }

    #[test]
    fn element_listing() {
        assert_eq!(
            FieldCtx::prime(2).unwrap().elements().collect::<Vec<_>>(),
            vec![Fe(0), Fe(1)]
        );
        assert_eq!(FieldCtx::new(2, 2, None).unwrap().elements().count(), 4);
        let f9 = FieldCtx::new(3, 2, None).unwrap();
        let elems: Vec<Fe> = f9.elements().collect();
        assert_eq!(elems.len(), 9);
        assert_eq!(elems[0], f9.zero());
        let prod = elems[1..].iter().fold(f9.one(), |acc, &x| f9.mul(acc, x));
        assert_eq!(prod, f9.neg(f9.one()));
    }

    #[test]
    fn exhaustive_field_axioms() {
        for f in small_fields() {
            if f.order() > 16 {
                continue;
            }
            let elems: Vec<Fe> = f.elements().collect();
            for &a in &elems {
                assert_eq!(f.pow(a, f.order() as u64), a);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
                }
                for &b in &elems {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
                    assert_eq!(f.sub(f.add(a, b), b), a);
                    for &c in &elems {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn irreducible_search() {
        let f2 = FieldCtx::prime(2).unwrap();
        // only irreducible monic quadratic over GF(2)
        let quads: Vec<_> = f2.monic_polys(2).filter(|g| f2.is_irreducible(g)).collect();
        assert_eq!(quads, vec![vec![Fe(1), Fe(1), Fe(1)]]);
        // t+1 is the smallest linear with nonzero constant term
        assert_eq!(f2.smallest_irreducible(1, true), Some(vec![Fe(1), Fe(1)]));
        assert_eq!(f2.smallest_irreducible(1, false), Some(vec![Fe(0), Fe(1)]));
        // number of monic irreducibles of degree 4 over GF(2) is 3
        assert_eq!(f2.monic_polys(4).filter(|g| f2.is_irreducible(g)).count(), 3);
        // over GF(4): (16 - 4) / 2 = 6 irreducible monic quadratics
        let f4 = FieldCtx::new(2, 2, None).unwrap();
        assert_eq!(f4.monic_polys(2).filter(|g| f4.is_irreducible(g)).count(), 6);
    }

    #[test]
    fn field_spec_json() {
        let spec: FieldSpec = serde_json::from_str(r#"{"p":2,"k":2,"modulus":[1,1,1]}"#).unwrap();
        assert_eq!(spec.build().unwrap().order(), 4);
        let spec: FieldSpec = serde_json::from_str(r#"{"p":5,"k":1}"#).unwrap();
        assert_eq!(spec.build().unwrap().order(), 5);
        let spec: FieldSpec = serde_json::from_str(r#"{"p":3}"#).unwrap();
        assert_eq!(spec.build().unwrap().order(), 3);
    }
}
