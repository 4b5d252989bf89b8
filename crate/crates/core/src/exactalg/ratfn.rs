use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{AlgebraError, QPoly};

/// Polynomial in `q` with rational coefficients (ascending, no trailing zeros).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly::from_coeffs(vec![BigRational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigRational) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn eval(&self, q: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + c;
        }
        acc
    }

    /// `Some` when every coefficient is an integer.
    pub fn to_qpoly(&self) -> Option<QPoly> {
        if self.coeffs.iter().all(|c| c.is_integer()) {
            Some(QPoly::from_coeffs(self.coeffs.iter().map(|c| c.to_integer()).collect()))
        } else {
            None
        }
    }

    /// Scale to a primitive integer polynomial with positive leading
    /// coefficient. Zero maps to zero.
    fn primitive_integer(&self) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        primitive_part(&QPoly::from_coeffs(ints))
    }

    pub fn div_rem(&self, divisor: &RatPoly) -> Result<(RatPoly, RatPoly), AlgebraError> {
        let dd = divisor.degree().ok_or(AlgebraError::DivisionByZero)?;
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((RatPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let qc = top / &lead;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &qc * d;
            }
            quot[i] = qc;
        }
        rem.truncate(dd);
        Ok((RatPoly::from_coeffs(quot), RatPoly::from_coeffs(rem)))
    }

    fn div_exact(&self, divisor: &RatPoly) -> RatPoly {
        let (q, r) = self.div_rem(divisor).expect("nonzero divisor");
        debug_assert!(r.is_zero());
        q
    }

    /// Monic gcd over the rationals; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let g = int_gcd(&self.primitive_integer(), &other.primitive_integer());
        RatPoly::from(&g).monic()
    }

    pub fn monic(&self) -> RatPoly {
        match self.leading() {
            None => RatPoly::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }
}

fn primitive_part(p: &QPoly) -> QPoly {
    if p.is_zero() {
        return QPoly::zero();
    }
    let mut c = p.content();
    if p.leading_coeff().unwrap().is_negative() {
        c = -c;
    }
    QPoly::from_coeffs(p.coeffs().iter().map(|x| x / &c).collect())
}

/// Pseudo-remainder of `a` by `b` over the integers.
fn pseudo_rem(a: &QPoly, b: &QPoly) -> QPoly {
    let db = b.degree().unwrap();
    let lb = b.leading_coeff().unwrap().clone();
    let mut r = a.clone();
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let lr = r.leading_coeff().unwrap().clone();
        r = &r.scale(&lb) - &b.shift(dr - db).scale(&lr);
        r = primitive_part(&r);
    }
    r
}

/// Primitive Euclidean gcd in `Z[q]`, result primitive with positive lead.
fn int_gcd(a: &QPoly, b: &QPoly) -> QPoly {
    let (mut a, mut b) = (primitive_part(a), primitive_part(b));
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = primitive_part(&r);
    }
    a
}

impl From<&QPoly> for RatPoly {
    fn from(p: &QPoly) -> Self {
        RatPoly::from_coeffs(
            p.coeffs()
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }
}

impl From<QPoly> for RatPoly {
    fn from(p: QPoly) -> Self {
        RatPoly::from(&p)
    }
}

fn combine(a: &[BigRational], b: &[BigRational], negate_b: bool) -> RatPoly {
    let len = a.len().max(b.len());
    let zero = BigRational::zero();
    RatPoly::from_coeffs(
        (0..len)
            .map(|i| {
                let x = a.get(i).unwrap_or(&zero);
                let y = b.get(i).unwrap_or(&zero);
                if negate_b {
                    x - y
                } else {
                    x + y
                }
            })
            .collect(),
    )
}

impl Add<&RatPoly> for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        combine(&self.coeffs, &rhs.coeffs, false)
    }
}

impl Sub<&RatPoly> for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        combine(&self.coeffs, &rhs.coeffs, true)
    }
}

impl Mul<&RatPoly> for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::from_coeffs(out)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let mag = c.abs();
            let bare = e > 0 && mag.is_one();
            if !bare {
                if mag.is_integer() || e == 0 {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            match e {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{e}")?,
            }
        }
        Ok(())
    }
}

/// Reduced quotient of two polynomials in `q`.
///
/// The denominator is monic and coprime to the numerator, and zero is `0/1`,
/// so two values are equal exactly when their stored forms coincide.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFn {
    num: RatPoly,
    den: RatPoly,
}

impl RatFn {
    /// Reduce `num / den` to canonical form.
    pub fn new(num: QPoly, den: QPoly) -> Result<RatFn, AlgebraError> {
        RatFn::from_ratpolys(RatPoly::from(num), RatPoly::from(den))
    }

    pub fn from_ratpolys(num: RatPoly, den: RatPoly) -> Result<RatFn, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        Ok(RatFn::normalize(num, den))
    }

    fn normalize(num: RatPoly, den: RatPoly) -> RatFn {
        if num.is_zero() {
            return RatFn::zero();
        }
        let (num, den) = if den.degree() == Some(0) {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g), den.div_exact(&g))
            }
        };
        let lead = den.leading().unwrap().recip();
        RatFn {
            num: num.scale(&lead),
            den: den.scale(&lead),
        }
    }

    pub fn zero() -> RatFn {
        RatFn {
            num: RatPoly::zero(),
            den: RatPoly::one(),
        }
    }

    pub fn one() -> RatFn {
        RatFn::from_poly(QPoly::one())
    }

    pub fn from_poly(p: QPoly) -> RatFn {
        RatFn {
            num: RatPoly::from(p),
            den: RatPoly::one(),
        }
    }

    pub fn from_integer(c: i64) -> RatFn {
        RatFn::from_poly(QPoly::constant(c))
    }

    /// `q^e` for any integer exponent.
    pub fn q_pow(e: i64) -> RatFn {
        if e >= 0 {
            RatFn::from_poly(QPoly::monomial(1, e as usize))
        } else {
            RatFn {
                num: RatPoly::one(),
                den: RatPoly::from(QPoly::monomial(1, e.unsigned_abs() as usize)),
            }
        }
    }

    pub fn num(&self) -> &RatPoly {
        &self.num
    }

    pub fn den(&self) -> &RatPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `Some` when this is a polynomial with integer coefficients.
    pub fn to_qpoly(&self) -> Option<QPoly> {
        if self.den.is_one() {
            self.num.to_qpoly()
        } else {
            None
        }
    }

    /// Size used for pivot selection: total degree of numerator and denominator.
    pub fn size(&self) -> usize {
        self.num.degree().unwrap_or(0) + self.den.degree().unwrap_or(0)
    }

    pub fn inv(&self) -> Result<RatFn, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(RatFn::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &RatFn) -> Result<RatFn, AlgebraError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: u32) -> RatFn {
        let mut acc = RatFn::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, q: &BigRational) -> Result<BigRational, AlgebraError> {
        let d = self.den.eval(q);
        if d.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        Ok(self.num.eval(q) / d)
    }
}

impl From<QPoly> for RatFn {
    fn from(p: QPoly) -> Self {
        RatFn::from_poly(p)
    }
}

impl Add<&RatFn> for &RatFn {
    type Output = RatFn;
    fn add(self, rhs: &RatFn) -> RatFn {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFn::normalize(&self.num + &rhs.num, self.den.clone());
        }
        RatFn::normalize(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Sub<&RatFn> for &RatFn {
    type Output = RatFn;
    fn sub(self, rhs: &RatFn) -> RatFn {
        self + &(-rhs)
    }
}

impl Mul<&RatFn> for &RatFn {
    type Output = RatFn;
    fn mul(self, rhs: &RatFn) -> RatFn {
        if self.is_zero() || rhs.is_zero() {
            return RatFn::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFn {
                num: &self.num * &rhs.num,
                den: RatPoly::one(),
            };
        }
        RatFn::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics on division by zero; see [`RatFn::checked_div`].
impl Div<&RatFn> for &RatFn {
    type Output = RatFn;
    fn div(self, rhs: &RatFn) -> RatFn {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl Neg for &RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFn> for RatFn {
            type Output = RatFn;
            fn $m(self, rhs: RatFn) -> RatFn {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFn> for RatFn {
            type Output = RatFn;
            fn $m(self, rhs: &RatFn) -> RatFn {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        -&self
    }
}

impl std::iter::Sum for RatFn {
    fn sum<I: Iterator<Item = RatFn>>(iter: I) -> RatFn {
        iter.fold(RatFn::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
