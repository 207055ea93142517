//! Lévy constants `lim (1/n) log q_n` of quadratic irrationals, by the
//! spectral radius of the period matrix, by the smaller root of `v`, and
//! empirically from an exact `q_n`.
//!
//! Reals are fixed-point balls: an integer midpoint scaled by `2^-w` and an
//! integer radius in the same units, propagated conservatively through every
//! operation.

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cfrac::{canonical_indices, convergents, transfer_matrices, ContinuedFraction};
use crate::exact::neg_one_pow;
use crate::genfun::GenFunPair;
use crate::{Error, Result};

/// Default working precision in bits.
pub const DEFAULT_PREC_BITS: u32 = 128;

#[derive(Clone, Debug)]
struct Ball {
    mid: BigInt,
    rad: BigInt,
    w: u32,
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    Integer::div_ceil(a, b)
}

impl Ball {
    fn int(n: &BigInt, w: u32) -> Self {
        Ball {
            mid: n << w,
            rad: BigInt::zero(),
            w,
        }
    }

    fn unit(&self) -> BigInt {
        BigInt::one() << self.w
    }

    fn add(&self, o: &Ball) -> Ball {
        Ball {
            mid: &self.mid + &o.mid,
            rad: &self.rad + &o.rad,
            w: self.w,
        }
    }

    fn neg(&self) -> Ball {
        Ball {
            mid: -&self.mid,
            rad: self.rad.clone(),
            w: self.w,
        }
    }

    fn div_int(&self, n: &BigInt) -> Ball {
        let n_abs = n.abs();
        Ball {
            mid: Integer::div_floor(&self.mid, n),
            rad: ceil_div(&self.rad, &n_abs) + 1,
            w: self.w,
        }
    }

    fn mul_int(&self, n: &BigInt) -> Ball {
        Ball {
            mid: &self.mid * n,
            rad: &self.rad * n.abs(),
            w: self.w,
        }
    }

    /// Requires the divisor ball to exclude zero.
    fn div(&self, o: &Ball) -> Ball {
        let m2 = o.mid.abs();
        assert!(m2 > o.rad, "divisor ball contains zero");
        let mid = Integer::div_floor(&(&self.mid << self.w), &o.mid);
        let spread = &self.mid.abs() * &o.rad + &m2 * &self.rad;
        let rad = ceil_div(&(spread << self.w), &(&m2 * (&m2 - &o.rad))) + 1;
        Ball { mid, rad, w: self.w }
    }

    /// Requires a positive ball.
    fn sqrt(&self) -> Ball {
        let lo = &self.mid - &self.rad;
        assert!(lo.is_positive(), "sqrt of a ball reaching zero");
        let mid = (&self.mid << self.w).sqrt();
        let lo_root = (lo << self.w).sqrt();
        let rad = if self.rad.is_zero() {
            BigInt::one()
        } else {
            ceil_div(&(&self.rad << self.w), &lo_root) + 1
        };
        Ball { mid, rad, w: self.w }
    }

    /// `atanh(s)` for a fixed-point `0 <= s < 2^w / 3`, treated as exact.
    /// The returned radius covers all truncations (at most ~2.5 ulp per term).
    fn atanh_fixed(s: &BigInt, w: u32) -> Ball {
        let s2 = (s * s) >> w;
        let mut term = s.clone();
        let mut sum = BigInt::zero();
        let mut n = 0u64;
        while !term.is_zero() {
            sum += &term / BigInt::from(2 * n + 1);
            term = (&term * &s2) >> w;
            n += 1;
        }
        Ball {
            mid: sum,
            rad: BigInt::from(8 * (n + 2)),
            w,
        }
    }

    fn ln2(w: u32) -> Ball {
        let third = (BigInt::one() << w) / 3;
        // the floor in `third` is at most one ulp; atanh' <= 9/8 there
        let mut b = Ball::atanh_fixed(&third, w).mul_int(&BigInt::from(2));
        b.rad += 3;
        b
    }

    /// Natural logarithm of a positive ball.
    fn ln(&self) -> Ball {
        let w = self.w;
        let lo = &self.mid - &self.rad;
        assert!(lo.is_positive(), "log of a ball reaching zero");
        // x = y 2^e with y in [1, 2)
        let e = self.mid.bits() as i64 - 1 - w as i64;
        let (y, shift_err) = match e.cmp(&0) {
            Ordering::Greater => (&self.mid >> e as usize, 1),
            _ => (&self.mid << (-e) as usize, 0),
        };
        let unit = self.unit();
        let s = Integer::div_floor(&((&y - &unit) << w), &(&y + &unit));
        let mut log_y = Ball::atanh_fixed(&s, w).mul_int(&BigInt::from(2));
        // s is low by < 1 ulp and atanh' <= 9/8 on [0, 1/3)
        log_y.rad += 3 + shift_err;
        let mut out = log_y.add(&Ball::ln2(w).mul_int(&BigInt::from(e)));
        // |log x - log mid| <= rad / (mid - rad)
        out.rad += ceil_div(&(&self.rad << w), &lo) + 1;
        out
    }

    /// `atan(1/n)` by its alternating series.
    fn atan_inv(n: u64, w: u32) -> Ball {
        let n = BigInt::from(n);
        let n2 = &n * &n;
        let mut term = (BigInt::one() << w) / &n;
        let mut sum = BigInt::zero();
        let mut k = 0u64;
        while !term.is_zero() {
            let t = &term / BigInt::from(2 * k + 1);
            if k % 2 == 0 {
                sum += t;
            } else {
                sum -= t;
            }
            term /= &n2;
            k += 1;
        }
        Ball {
            mid: sum,
            rad: BigInt::from(4 * (k + 2)),
            w,
        }
    }

    fn pi(w: u32) -> Ball {
        Ball::atan_inv(5, w)
            .mul_int(&BigInt::from(16))
            .add(&Ball::atan_inv(239, w).mul_int(&BigInt::from(-4)))
    }

    fn mul(&self, o: &Ball) -> Ball {
        let mid = (&self.mid * &o.mid) >> self.w;
        let spread = &self.mid.abs() * &o.rad + &o.mid.abs() * &self.rad + &self.rad * &o.rad;
        Ball {
            mid,
            rad: ceil_div(&spread, &self.unit()) + 1,
            w: self.w,
        }
    }
}

/// A real number `mantissa * 2^-scale` with a rigorous error bound
/// `err_ulps * 2^-scale`, produced to a requested precision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrecisionReal {
    mantissa: BigInt,
    err_ulps: BigInt,
    scale: u32,
    prec_bits: u32,
}

impl PrecisionReal {
    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn err_ulps(&self) -> &BigInt {
        &self.err_ulps
    }

    pub fn prec_bits(&self) -> u32 {
        self.prec_bits
    }

    pub fn midpoint(&self) -> BigRational {
        BigRational::new(self.mantissa.clone(), BigInt::one() << self.scale)
    }

    pub fn error_bound(&self) -> BigRational {
        BigRational::new(self.err_ulps.clone(), BigInt::one() << self.scale)
    }

    pub fn lower(&self) -> BigRational {
        self.midpoint() - self.error_bound()
    }

    pub fn upper(&self) -> BigRational {
        self.midpoint() + self.error_bound()
    }

    /// True bounds on `|self - other|`; the lower bound is clamped at zero.
    pub fn distance_bounds(&self, other: &Self) -> (BigRational, BigRational) {
        let d = (self.midpoint() - other.midpoint()).abs();
        let e = self.error_bound() + other.error_bound();
        let lo = &d - &e;
        let lo = if lo.is_negative() { BigRational::zero() } else { lo };
        (lo, d + e)
    }

    /// `|self - other| <= tol` is certain.
    pub fn certainly_within(&self, other: &Self, tol: &BigRational) -> bool {
        &self.distance_bounds(other).1 <= tol
    }

    /// `other` lies in the interval of `self`.
    pub fn contains(&self, other: &BigRational) -> bool {
        &self.lower() <= other && other <= &self.upper()
    }

    pub fn to_f64(&self) -> f64 {
        let bits = self.mantissa.bits();
        let drop = bits.saturating_sub(63);
        let top = (&self.mantissa >> drop).to_f64().unwrap_or(0.0);
        top * pow2(drop as i64 - self.scale as i64)
    }

    /// Decimal rendering truncated to `digits` fractional digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        let neg = self.mantissa.is_negative();
        let scaled = (self.mantissa.abs() * BigInt::from(10u32).pow(digits as u32)) >> self.scale;
        let s = alloc::format!("{:0>width$}", scaled, width = digits + 1);
        let (int, frac) = s.split_at(s.len() - digits);
        let sign = if neg { "-" } else { "" };
        if digits == 0 {
            alloc::format!("{sign}{int}")
        } else {
            alloc::format!("{sign}{int}.{frac}")
        }
    }
}

fn pow2(e: i64) -> f64 {
    let mut out = 1.0f64;
    let (step, mut left) = if e >= 0 { (2f64, e) } else { (0.5f64, -e) };
    let chunk = if e >= 0 { f64::from_bits(((1023 + 512) as u64) << 52) } else { f64::from_bits(((1023 - 512) as u64) << 52) };
    while left >= 512 {
        out *= chunk;
        left -= 512;
    }
    for _ in 0..left {
        out *= step;
    }
    out
}

impl fmt::Display for PrecisionReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(15);
        f.write_str(&self.to_decimal(digits))
    }
}

/// Run `compute` at increasing working precision until its radius is at most
/// `2^-prec_bits`.
fn certified(prec_bits: u32, extra: u32, compute: impl Fn(u32) -> Ball) -> PrecisionReal {
    let mut guard = 64 + extra;
    loop {
        let w = prec_bits + guard;
        let b = compute(w);
        if b.rad <= BigInt::one() << guard {
            return PrecisionReal {
                mantissa: b.mid,
                err_ulps: b.rad,
                scale: w,
                prec_bits,
            };
        }
        guard *= 2;
    }
}

fn bit_len(n: u64) -> u32 {
    64 - n.leading_zeros()
}

/// `(1/l) log rad(M_1)` with `rad = (tau + sqrt(tau^2 - 4 (-1)^l)) / 2`.
pub fn levy_closed(cf: &ContinuedFraction, prec_bits: u32) -> Result<PrecisionReal> {
    let idx = canonical_indices(cf);
    let tau = transfer_matrices(cf, idx.k_work)?.m1.trace();
    let disc = &tau * &tau - BigInt::from(4) * neg_one_pow(idx.ell);
    if !disc.is_positive() || !tau.is_positive() {
        return Err(Error::VerificationFailed("period matrix is not hyperbolic"));
    }
    let ell = BigInt::from(idx.ell);
    Ok(certified(prec_bits, 0, |w| {
        let root = Ball::int(&disc, w).sqrt();
        Ball::int(&tau, w)
            .add(&root)
            .div_int(&BigInt::from(2))
            .ln()
            .div_int(&ell)
    }))
}

/// `-(1/l) log v_min` with `v_min` the root of `v` of smaller modulus.
pub fn levy_from_denominator(gf: &GenFunPair, prec_bits: u32) -> Result<PrecisionReal> {
    let (c0, c1, c2) = (gf.v.coeff(0), gf.v.coeff(1), gf.v.coeff(2));
    if !c0.is_one() || !c1.is_negative() {
        return Err(Error::VerificationFailed("unexpected denominator shape"));
    }
    let disc = &c1 * &c1 - BigInt::from(4) * &c2;
    if !disc.is_positive() {
        return Err(Error::VerificationFailed("denominator has no real roots"));
    }
    let ell = BigInt::from(gf.ell);
    let b = -c1;
    Ok(certified(prec_bits, 0, |w| {
        // v_min = 2 / (-c1 + sqrt(c1^2 - 4 c2)); its log is taken as a
        // difference since v_min itself can sit below the working precision
        let denom = Ball::int(&b, w).add(&Ball::int(&disc, w).sqrt());
        let log_vmin = Ball::ln2(w).add(&denom.ln().neg());
        log_vmin.neg().div_int(&ell)
    }))
}

/// `(1/n) log q_n` with `q_n` exact; the bound covers only the evaluation.
pub fn levy_empirical(cf: &ContinuedFraction, n: usize, prec_bits: u32) -> Result<PrecisionReal> {
    if n == 0 {
        return Err(Error::Dimension);
    }
    let q = convergents(cf, n).q(n);
    let extra = bit_len(q.bits());
    let n_big = BigInt::from(n);
    Ok(certified(prec_bits, extra, |w| Ball::int(&q, w).ln().div_int(&n_big)))
}

/// `pi^2 / (12 log 2)`, the almost-everywhere Lévy constant.
pub fn levy_reference(prec_bits: u32) -> PrecisionReal {
    certified(prec_bits, 0, |w| {
        let pi = Ball::pi(w);
        pi.mul(&pi).div(&Ball::ln2(w).mul_int(&BigInt::from(12)))
    })
}
