//! Exact arithmetic: integer polynomials, rational functions with power-series
//! expansions, and real quadratic surds. Nothing here touches floating point.

mod poly;
mod ratfunc;
mod surd;

pub use num_bigint::BigInt;
pub use num_rational::BigRational as Rational;
pub use poly::IntPoly;
pub use ratfunc::{series_coeffs, RationalFunctionZ};
pub use surd::{normalize_surd, QuadraticSurd, Sign};

use num_traits::{One, Signed, Zero};

/// `floor(sqrt(n))` for `n >= 0`.
pub fn isqrt(n: &BigInt) -> BigInt {
    debug_assert!(!n.is_negative());
    num_integer::Roots::sqrt(n)
}

pub fn is_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = isqrt(n);
    &r * &r == *n
}

/// Determinant of a square integer matrix given row-major, by fraction-free
/// (Bareiss) elimination.
pub fn det_int(rows: &[alloc::vec::Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: alloc::vec::Vec<alloc::vec::Vec<BigInt>> = rows.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Whether a square integer matrix is singular. Elimination modulo a few large
/// primes settles the nonsingular case cheaply; only when every residue
/// vanishes is the exact determinant computed.
pub fn det_is_zero(rows: &[alloc::vec::Vec<BigInt>]) -> bool {
    poly::PRIMES.iter().all(|&m| det_mod(rows, m) == 0) && det_int(rows).is_zero()
}

fn det_mod(rows: &[alloc::vec::Vec<BigInt>], m: u64) -> u64 {
    use num_integer::Integer;
    use num_traits::ToPrimitive;
    let mb = BigInt::from(m);
    let mut a: alloc::vec::Vec<alloc::vec::Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x.mod_floor(&mb).to_u64().expect("below modulus")).collect())
        .collect();
    let n = a.len();
    let mut det = 1u64;
    for k in 0..n {
        let Some(piv) = (k..n).find(|&r| a[r][k] != 0) else {
            return 0;
        };
        if piv != k {
            a.swap(k, piv);
            det = (m - det) % m;
        }
        det = poly::mul_mod(det, a[k][k], m);
        let inv = poly::inv_mod(a[k][k], m);
        for i in k + 1..n {
            let f = poly::mul_mod(a[i][k], inv, m);
            if f == 0 {
                continue;
            }
            for j in k..n {
                let t = poly::mul_mod(f, a[k][j], m);
                a[i][j] = (a[i][j] + m - t) % m;
            }
        }
    }
    det
}

pub(crate) fn neg_one_pow(e: usize) -> BigInt {
    if e % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}
