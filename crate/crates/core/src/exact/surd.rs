use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{is_square, isqrt};
use crate::{Error, Result};

/// A real quadratic irrational `(p + sqrt(d)) / q`, kept in the form where
/// `q` divides `d - p^2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    p: BigInt,
    q: BigInt,
    d: BigInt,
}

/// Sign of a real number.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    fn of(x: &BigInt) -> Self {
        match x.cmp(&BigInt::zero()) {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }
}

/// Bring `(p + sqrt(d)) / q` into normalized form without changing its value,
/// by scaling `p, q` by `|q|` and `d` by `q^2`.
pub fn normalize_surd(p: BigInt, q: BigInt, d: BigInt) -> Result<QuadraticSurd> {
    check(&q, &d)?;
    Ok(scale_by_denominator(p, q, d))
}

fn check(q: &BigInt, d: &BigInt) -> Result<()> {
    if q.is_zero() {
        return Err(Error::InvalidDenominator);
    }
    if !d.is_positive() || is_square(d) {
        return Err(Error::RationalInput);
    }
    Ok(())
}

fn scale_by_denominator(p: BigInt, q: BigInt, d: BigInt) -> QuadraticSurd {
    let s = q.abs();
    QuadraticSurd {
        p: &p * &s,
        d: &d * &s * &s,
        q: q * s,
    }
}

/// Sign of `x + y sqrt(d)` for non-square `d > 0`.
pub(crate) fn sign_with_root(x: &BigInt, y: &BigInt, d: &BigInt) -> Sign {
    let (sx, sy) = (Sign::of(x), Sign::of(y));
    if sy == Sign::Zero {
        return sx;
    }
    if sx == Sign::Zero || sx == sy {
        return sy;
    }
    // opposite signs: compare x^2 with y^2 d
    match (x * x).cmp(&(y * y * d)) {
        Ordering::Greater => sx,
        Ordering::Less => sy,
        Ordering::Equal => Sign::Zero,
    }
}

impl QuadraticSurd {
    /// Convenience constructor from machine integers; normalizes.
    /// Inputs that already satisfy `q | d - p^2` are kept as given.
    pub fn new(p: i64, q: i64, d: i64) -> Result<Self> {
        Self::from_parts(p.into(), q.into(), d.into())
    }

    pub fn from_parts(p: BigInt, q: BigInt, d: BigInt) -> Result<Self> {
        check(&q, &d)?;
        if (&d - &p * &p).is_multiple_of(&q) {
            return Ok(Self { p, q, d });
        }
        Ok(scale_by_denominator(p, q, d))
    }

    /// `sqrt(d)`
    pub fn sqrt(d: BigInt) -> Result<Self> {
        Self::from_parts(BigInt::zero(), BigInt::one(), d)
    }

    /// Build `(x + y sqrt(d)) / z` with `y != 0`.
    pub fn from_components(x: BigInt, y: BigInt, z: BigInt, d: &BigInt) -> Result<Self> {
        if z.is_zero() {
            return Err(Error::InvalidDenominator);
        }
        if y.is_zero() || !d.is_positive() || is_square(d) {
            return Err(Error::RationalInput);
        }
        let (x, z) = if y.is_negative() { (-x, -z) } else { (x, z) };
        let g = x.gcd(&y).gcd(&z);
        let (x, y, z) = (x / &g, y.abs() / &g, z / &g);
        let radicand = &y * &y * d;
        if (&radicand - &x * &x).is_multiple_of(&z) {
            return Ok(Self { p: x, q: z, d: radicand });
        }
        Ok(scale_by_denominator(x, z, radicand))
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn floor(&self) -> BigInt {
        let r = isqrt(&self.d);
        if self.q.is_positive() {
            (&self.p + r).div_floor(&self.q)
        } else {
            (&self.p + r + BigInt::one()).div_floor(&self.q)
        }
    }

    /// Image under `x -> (a x + b) / (c x + e)`.
    pub fn mobius(&self, a: &BigInt, b: &BigInt, c: &BigInt, e: &BigInt) -> Result<Self> {
        // x = (P + sqrt D)/Q, so the image is (alpha + a sqrt D)/(gamma + c sqrt D)
        let alpha = a * &self.p + b * &self.q;
        let gamma = c * &self.p + e * &self.q;
        let x = &alpha * &gamma - a * c * &self.d;
        let y = a * &gamma - &alpha * c;
        let z = &gamma * &gamma - c * c * &self.d;
        Self::from_components(x, y, z, &self.d)
    }

    pub fn recip(&self) -> Result<Self> {
        self.mobius(&BigInt::zero(), &BigInt::one(), &BigInt::one(), &BigInt::zero())
    }

    pub fn add_int(&self, n: &BigInt) -> Self {
        Self {
            p: &self.p + n * &self.q,
            q: self.q.clone(),
            d: self.d.clone(),
        }
    }

    /// Fractional part `x - floor(x)`.
    pub fn fract(&self) -> Self {
        self.add_int(&-self.floor())
    }

    /// One step of the Gauss map, `x -> frac(1/x)`, for `0 < x < 1`.
    pub fn gauss(&self) -> Result<Self> {
        Ok(self.recip()?.fract())
    }

    /// Sign of `self - other` for surds of the same quadratic field.
    pub fn cmp_value(&self, other: &Self) -> Option<Ordering> {
        // write both over sqrt(base) with base = gcd of the radicands
        let base = self.d.gcd(&other.d);
        let lhs = [&self.d / &base, &other.d / &base];
        if !is_square(&lhs[0]) || !is_square(&lhs[1]) {
            return None;
        }
        let (r0, r1) = (isqrt(&lhs[0]), isqrt(&lhs[1]));
        // self = (P1 + r0 sqrt(base))/Q1, other = (P2 + r1 sqrt(base))/Q2
        let qq = &self.q * &other.q;
        let x = &self.p * &other.q - &other.p * &self.q;
        let y = &r0 * &other.q - &r1 * &self.q;
        let s = sign_with_root(&x, &y, &base);
        let s = if qq.is_negative() { flip(s) } else { s };
        Some(match s {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        })
    }

    pub fn value_eq(&self, other: &Self) -> bool {
        self.cmp_value(other) == Some(Ordering::Equal)
    }

    /// Exact test `c2 x^2 + c1 x + c0 == 0`.
    pub fn is_root_of(&self, c2: &BigInt, c1: &BigInt, c0: &BigInt) -> bool {
        let (p, q) = (&self.p, &self.q);
        let rational = c2 * (p * p + &self.d) + c1 * p * q + c0 * q * q;
        let irrational = BigInt::from(2) * c2 * p + c1 * q;
        rational.is_zero() && irrational.is_zero()
    }

    /// Sign of `self - n/m` for `m > 0`.
    pub fn cmp_rational(&self, n: &BigInt, m: &BigInt) -> Ordering {
        // (P + sqrt D)/Q - n/m has the sign of (P m - n Q + m sqrt D) * sign(Q)
        let x = &self.p * m - n * &self.q;
        let s = sign_with_root(&x, m, &self.d);
        let s = if self.q.is_negative() { flip(s) } else { s };
        match s {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }
}

fn flip(s: Sign) -> Sign {
    match s {
        Sign::Negative => Sign::Positive,
        Sign::Zero => Sign::Zero,
        Sign::Positive => Sign::Negative,
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}+sqrt({}))/{}", self.p, self.d, self.q)
    }
}
