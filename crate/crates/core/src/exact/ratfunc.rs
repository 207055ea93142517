use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::IntPoly;
use crate::{Error, Result};

/// A quotient of integer polynomials that is a power series at zero.
#[derive(Clone, Debug)]
pub struct RationalFunctionZ {
    num: IntPoly,
    den: IntPoly,
    reduced: bool,
}

impl RationalFunctionZ {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.coeff(0).is_zero() {
            return Err(Error::NotPowerSeries);
        }
        Ok(Self {
            num,
            den,
            reduced: false,
        })
    }

    pub fn polynomial(num: IntPoly) -> Self {
        Self {
            num,
            den: IntPoly::one(),
            reduced: true,
        }
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Cancel the polynomial gcd and normalise `den(0) > 0`.
    pub fn reduce(&self) -> Self {
        if self.reduced {
            return self.clone();
        }
        if self.num.is_zero() {
            return Self::polynomial(IntPoly::zero());
        }
        let g = self.num.gcd(&self.den);
        let mut num = self.num.div_exact(&g).expect("gcd divides numerator");
        let mut den = self.den.div_exact(&g).expect("gcd divides denominator");
        // the primitive gcd leaves a common integer content behind
        let c = num.content().gcd(&den.content());
        if !c.is_zero() && c != BigInt::from(1) {
            num = IntPoly::from_coeffs(num.coeffs().iter().map(|x| x / &c).collect());
            den = IntPoly::from_coeffs(den.coeffs().iter().map(|x| x / &c).collect());
        }
        if den.coeff(0).is_negative() {
            num = -num;
            den = -den;
        }
        Self {
            num,
            den,
            reduced: true,
        }
    }

    /// Same function, compared by cross multiplication.
    pub fn same_function(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self {
                num: &self.num + &other.num,
                den: self.den.clone(),
                reduced: false,
            };
        }
        Self {
            num: &(&self.num * &other.den) + &(&other.num * &self.den),
            den: &self.den * &other.den,
            reduced: false,
        }
    }

    pub fn mul_poly(&self, p: &IntPoly) -> Self {
        Self {
            num: &self.num * p,
            den: self.den.clone(),
            reduced: false,
        }
    }

    pub fn series(&self, count: usize) -> Vec<BigRational> {
        series_coeffs(self, count).expect("invariant: den(0) != 0")
    }

    /// Taylor coefficients when they are integers, i.e. whenever `den(0) = ±1`.
    /// Returns `None` if some coefficient is not an integer.
    pub fn integer_series(&self, count: usize) -> Option<Vec<BigInt>> {
        let d0 = self.den.coeff(0);
        let mut out: Vec<BigInt> = Vec::with_capacity(count);
        let dens = self.den.coeffs();
        for n in 0..count {
            let mut acc = self.num.coeff(n);
            for (i, d) in dens.iter().enumerate().skip(1).take(n) {
                acc -= d * &out[n - i];
            }
            let (q, r) = acc.div_rem(&d0);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(out)
    }
}

/// Equality of rational functions (not of representations).
impl PartialEq for RationalFunctionZ {
    fn eq(&self, other: &Self) -> bool {
        self.same_function(other)
    }
}

/// First `count` Taylor coefficients at zero, from the linear recurrence
/// carried by the denominator.
pub fn series_coeffs(rf: &RationalFunctionZ, count: usize) -> Result<Vec<BigRational>> {
    let d0 = rf.den.coeff(0);
    if d0.is_zero() {
        return Err(Error::NotPowerSeries);
    }
    if let Some(ints) = rf.integer_series(count) {
        return Ok(ints.into_iter().map(BigRational::from).collect());
    }
    let d0 = BigRational::from(d0);
    let dens: Vec<BigRational> = rf
        .den
        .coeffs()
        .iter()
        .map(|c| BigRational::from(c.clone()))
        .collect();
    let mut out: Vec<BigRational> = Vec::with_capacity(count);
    for n in 0..count {
        let mut acc = BigRational::from(rf.num.coeff(n));
        for (i, d) in dens.iter().enumerate().skip(1).take(n) {
            acc -= d * &out[n - i];
        }
        out.push(acc / &d0);
    }
    Ok(out)
}

impl fmt::Display for RationalFunctionZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == IntPoly::one() {
            return write!(f, "{}", self.num);
        }
        let multi = |p: &IntPoly| p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1;
        if multi(&self.num) {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        f.write_str(" / ")?;
        if multi(&self.den) {
            write!(f, "({})", self.den)
        } else {
            write!(f, "{}", self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn rf(n: &[i64], d: &[i64]) -> RationalFunctionZ {
        RationalFunctionZ::new(IntPoly::from_i64s(n), IntPoly::from_i64s(d)).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| BigRational::from(BigInt::from(x))).collect()
    }

    #[test]
    fn fibonacci_series() {
        assert_eq!(series_coeffs(&rf(&[1], &[1, -1, -1]), 5).unwrap(), ints(&[1, 1, 2, 3, 5]));
    }

    #[test]
    fn pell_series() {
        assert_eq!(series_coeffs(&rf(&[1], &[1, -2, -1]), 5).unwrap(), ints(&[1, 2, 5, 12, 29]));
    }

    #[test]
    fn polynomial_series_is_padded() {
        let s = series_coeffs(&rf(&[3, 0, 4], &[1]), 5).unwrap();
        assert_eq!(s, ints(&[3, 0, 4, 0, 0]));
    }

    #[test]
    fn non_power_series_rejected() {
        assert_eq!(
            RationalFunctionZ::new(IntPoly::one(), IntPoly::from_i64s(&[0, 1])).unwrap_err(),
            Error::NotPowerSeries
        );
    }

    #[test]
    fn rational_coefficients() {
        let s = series_coeffs(&rf(&[1], &[2, -1]), 3).unwrap();
        let half = |k: i64| BigRational::new(BigInt::from(1), BigInt::from(1i64 << k));
        assert_eq!(s, vec![half(1), half(2), half(3)]);
    }

    #[test]
    fn reduce_cancels() {
        let r = rf(&[0, 1, 0, -1], &[1, -1]).reduce();
        assert_eq!(r.num(), &IntPoly::from_i64s(&[0, 1, 1]));
        assert_eq!(r.den(), &IntPoly::one());
        let r = rf(&[2, 2], &[2]).reduce();
        assert_eq!(r.to_string(), "1 + z");
    }

    #[test]
    fn reduce_golden_raw_numerator() {
        // p0 = 0, p1 = 1, p2 = 1
        let r = rf(&[0, 1, 0], &[1, -1, -1]).reduce();
        assert_eq!(r.to_string(), "z / (1 - z - z^2)");
    }

    #[test]
    fn reduce_makes_den_constant_positive() {
        let r = rf(&[1, 1], &[-1, 0, 1]).reduce();
        assert_eq!(r.num(), &IntPoly::from_i64s(&[-1]));
        assert_eq!(r.den(), &IntPoly::from_i64s(&[1, -1]));
    }
}
