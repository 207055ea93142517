use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Dense polynomial with integer coefficients, lowest degree first.
///
/// Trailing zeros are never stored, so the zero polynomial has no coefficients
/// and structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * z^deg`
    pub fn monomial(c: BigInt, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        Self { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `z^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Exponent of the lowest nonzero term.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiply by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Divide by `z^k`; `None` if some dropped coefficient is nonzero.
    pub fn unshift(&self, k: usize) -> Option<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(self.coeffs.iter().skip(k).cloned().collect()))
    }

    /// Substitute `z^step` for the variable.
    pub fn compose_power(&self, step: usize) -> Self {
        assert!(step >= 1);
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * step] = c.clone();
        }
        Self { coeffs }
    }

    /// `z^d p(1/z)` with `d` the degree.
    pub fn reversed(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::from_coeffs(coeffs)
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from(c.clone()))
    }

    /// Sign of `p(num/den)` for `den > 0`, computed from `den^d p(num/den)`.
    pub fn sign_at(&self, num: &BigInt, den: &BigInt) -> i8 {
        debug_assert!(den.is_positive());
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        // Horner in homogeneous form: sum c_i num^i den^(d-i)
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        sign_of(&acc)
    }

    /// Gcd of the coefficients, non-negative.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divide by the content and make the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            g = -g;
        }
        Self::from_coeffs(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Pseudo-remainder scaled by `|lc(divisor)|^(deg diff + 1)`, so the result
    /// has the sign of the true remainder times a positive constant.
    pub fn signed_pseudo_rem(&self, divisor: &Self) -> Self {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc = divisor.leading().expect("nonzero").clone();
        let lc_abs = lc.abs();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let lr = r.leading().expect("nonzero").clone();
            // r <- |lc| r - sign(lc) lr z^(dr-dd) divisor
            let sub = divisor.scale(&(lr * lc.signum())).shift(dr - dd);
            r = &r.scale(&lc_abs) - &sub;
        }
        r
    }

    /// Exact quotient by `divisor` over Z, `None` if it does not divide.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree()?;
        let lc = divisor.leading()?.clone();
        let mut r = self.clone();
        let mut q = vec![BigInt::zero(); self.coeffs.len().saturating_sub(dd).max(1)];
        while let Some(dr) = r.degree() {
            if dr < dd {
                return None;
            }
            let (c, rem) = r.leading()?.div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            r = &r - &divisor.scale(&c).shift(dr - dd);
            q[dr - dd] = c;
        }
        Some(Self::from_coeffs(q))
    }

    /// Primitive gcd over Z[z] with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let content = self.content().gcd(&other.content());
        if !self.is_zero() && !other.is_zero() && coprime_mod_prime(self, other) {
            return Self::constant(content);
        }
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            core::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.signed_pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        a.scale(&content)
    }

    /// Number of distinct real roots in the open interval `(lo, hi)`.
    /// Endpoints are given as `num/den` with positive denominators.
    ///
    /// Descartes' rule on the interval mapped to `(0, inf)` settles zero or one
    /// sign variation exactly; anything else goes to a Sturm sequence.
    pub fn count_roots_between(&self, lo: (&BigInt, &BigInt), hi: (&BigInt, &BigInt)) -> usize {
        if self.degree().unwrap_or(0) == 0 {
            return 0;
        }
        match self.interval_variations(lo, hi) {
            v @ (0 | 1) => v,
            _ => self.sturm_count(lo, hi),
        }
    }

    /// Sign variations of `(1+y)^d p(x(y))` where `x(y)` maps `(0, inf)` onto
    /// `(lo, hi)`.
    fn interval_variations(&self, lo: (&BigInt, &BigInt), hi: (&BigInt, &BigInt)) -> usize {
        let d = self.coeffs.len() - 1;
        // x = X / den with integer endpoints a < c for X
        let den = lo.1 * hi.1;
        let (a, c) = (lo.0 * hi.1, hi.0 * lo.1);
        let mut den_pow = BigInt::one();
        let mut coeffs: Vec<BigInt> = vec![BigInt::zero(); d + 1];
        for i in (0..=d).rev() {
            coeffs[i] = &self.coeffs[i] * &den_pow;
            den_pow *= &den;
        }
        taylor_shift(&mut coeffs, &a);
        // X = a + (c - a) y, then y -> 1 / (1 + y)
        let width = c - a;
        let mut w = BigInt::one();
        for x in coeffs.iter_mut() {
            *x *= &w;
            w *= &width;
        }
        coeffs.reverse();
        taylor_shift(&mut coeffs, &BigInt::one());
        let signs: Vec<i8> = coeffs.iter().map(sign_of).filter(|&s| s != 0).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    fn sturm_count(&self, lo: (&BigInt, &BigInt), hi: (&BigInt, &BigInt)) -> usize {
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            let r = -seq[n - 2].signed_pseudo_rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(r.primitive_keep_sign());
        }
        let variations = |x: (&BigInt, &BigInt)| {
            let mut prev = 0i8;
            let mut count = 0usize;
            for p in &seq {
                let s = p.sign_at(x.0, x.1);
                if s != 0 {
                    if prev != 0 && s != prev {
                        count += 1;
                    }
                    prev = s;
                }
            }
            count
        };
        // Sturm counts roots in (lo, hi]; drop a root sitting on hi.
        let raw = variations(lo) - variations(hi);
        if self.sign_at(hi.0, hi.1) == 0 {
            raw - 1
        } else {
            raw
        }
    }

    fn primitive_keep_sign(&self) -> Self {
        let g = self.content();
        Self::from_coeffs(self.coeffs.iter().map(|c| c / &g).collect())
    }
}

/// Coefficients of `p(y + s)` in place.
fn taylor_shift(c: &mut [BigInt], s: &BigInt) {
    if s.is_zero() {
        return;
    }
    let n = c.len();
    for i in 0..n {
        for j in (i..n - 1).rev() {
            let t = &c[j + 1] * s;
            c[j] += t;
        }
    }
}

fn sign_of(x: &BigInt) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl core::iter::Sum for IntPoly {
    fn sum<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::zero(), |a, b| &a + &b)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            match (d, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("z")?,
                (1, false) => write!(f, "{mag}*z")?,
                (_, true) => write!(f, "z^{d}")?,
                (_, false) => write!(f, "{mag}*z^{d}")?,
            }
        }
        Ok(())
    }
}

pub(super) const PRIMES: [u64; 3] = [(1 << 61) - 1, 4_611_686_018_427_387_847, 1_000_000_007];

fn reduce_mod(p: &IntPoly, m: u64) -> Vec<u64> {
    let mb = BigInt::from(m);
    let mut out: Vec<u64> = p
        .coeffs
        .iter()
        .map(|c| Integer::mod_floor(c, &mb).to_u64().expect("below modulus"))
        .collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

pub(super) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(super) fn inv_mod(a: u64, m: u64) -> u64 {
    // m is prime
    let (mut base, mut e, mut acc) = (a % m, m - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

fn rem_mod(a: &mut Vec<u64>, b: &[u64], m: u64) {
    let inv = inv_mod(*b.last().expect("nonzero"), m);
    while a.len() >= b.len() {
        let f = mul_mod(*a.last().expect("nonempty"), inv, m);
        let off = a.len() - b.len();
        for (i, &c) in b.iter().enumerate() {
            let t = mul_mod(f, c, m);
            a[off + i] = (a[off + i] + m - t) % m;
        }
        while a.last() == Some(&0) {
            a.pop();
        }
    }
}

/// True when the gcd is certainly a constant: the gcd modulo a prime not
/// dividing either leading coefficient has degree at least that over Z.
fn coprime_mod_prime(x: &IntPoly, y: &IntPoly) -> bool {
    for &m in &PRIMES {
        let (mut a, mut b) = (reduce_mod(x, m), reduce_mod(y, m));
        if a.len() != x.coeffs.len() || b.len() != y.coeffs.len() {
            continue;
        }
        while !b.is_empty() {
            rem_mod(&mut a, &b, m);
            core::mem::swap(&mut a, &mut b);
        }
        return a.len() == 1;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(cs)
    }

    #[test]
    fn trailing_zeros_trimmed() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0, 0]), IntPoly::zero());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -1, -1]).to_string(), "1 - z - z^2");
        assert_eq!(p(&[0, 1]).to_string(), "z");
        assert_eq!(p(&[-2, 0, 3]).to_string(), "-2 + 3*z^2");
    }

    #[test]
    fn exact_division_and_gcd() {
        let a = p(&[1, -1]);
        let b = p(&[0, 1, 1]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&p(&[1, 1, 1])), None);
        let g = (&prod * &p(&[3])).gcd(&(&a * &p(&[2, 5])));
        assert_eq!(g, p(&[-1, 1]));
        assert_eq!(p(&[6, 6]).gcd(&p(&[4, 0, 8])), p(&[2]));
        // leading coefficient divisible by the first modulus
        let big = IntPoly::from_coeffs(vec![BigInt::one(), (BigInt::one() << 61) - 1]);
        assert_eq!(big.gcd(&p(&[3, 1])), p(&[1]));
        assert_eq!((&big * &a).gcd(&(&a * &p(&[3, 1]))), p(&[-1, 1]));
    }

    #[test]
    fn sturm_counts() {
        // (z - 1/3)(z - 1/2)(z - 2)
        let q = &(&p(&[-1, 3]) * &p(&[-1, 2])) * &p(&[-2, 1]);
        let (zero, one) = (BigInt::zero(), BigInt::one());
        assert_eq!(q.count_roots_between((&zero, &one), (&one, &one)), 2);
        assert_eq!(p(&[1, 1, 1]).count_roots_between((&zero, &one), (&one, &one)), 0);
        // root exactly at the right endpoint is excluded
        assert_eq!(p(&[-1, 1]).count_roots_between((&zero, &one), (&one, &one)), 0);
    }

    #[test]
    fn descartes_agrees_with_sturm() {
        let (zero, one, two, three) = (BigInt::zero(), BigInt::one(), BigInt::from(2), BigInt::from(3));
        let cases = [
            p(&[-1, 3]),
            &p(&[-1, 3]) * &p(&[-2, 1]),
            &(&p(&[-1, 3]) * &p(&[-1, 2])) * &p(&[-2, 1]),
            p(&[1, 1, 1]),
            p(&[5, -3, 0, 7, -1]),
            &p(&[-1, 1]) * &p(&[-1, 1]),
            p(&[-1, 1]),
        ];
        let intervals = [((&zero, &one), (&one, &one)), ((&one, &three), (&two, &one)), ((&zero, &one), (&three, &one))];
        for q in &cases {
            for &(lo, hi) in &intervals {
                let v = q.interval_variations(lo, hi);
                let exact = q.sturm_count(lo, hi);
                assert!(v >= exact, "{q} on {lo:?}..{hi:?}: {v} vs {exact}");
                assert_eq!(q.count_roots_between(lo, hi), exact);
            }
        }
    }
}
