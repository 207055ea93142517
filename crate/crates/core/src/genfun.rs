//! Rational generating functions `F(z) = sum p_n z^n` and `G(z) = sum q_n z^n`
//! of the convergents, built in closed form from one period of the word.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cfrac::{self, ab_table, canonical_indices, convergents, ConvergentTable, ContinuedFraction};
use crate::exact::{neg_one_pow, IntPoly, RationalFunctionZ};
use crate::{Error, Result};

/// Which convergent sequence a construction refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sequence {
    /// numerators `p_n`
    P,
    /// denominators `q_n`
    Q,
}

/// `c0 + c1 x + c2 x^2`
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadPoly {
    pub c0: BigInt,
    pub c1: BigInt,
    pub c2: BigInt,
}

impl QuadPoly {
    pub fn discriminant(&self) -> BigInt {
        &self.c1 * &self.c1 - BigInt::from(4) * &self.c0 * &self.c2
    }

    pub fn to_poly(&self) -> IntPoly {
        IntPoly::from_coeffs([&self.c0, &self.c1, &self.c2].map(Clone::clone).to_vec())
    }

    /// `x^2 f(1/x)`
    pub fn reciprocal(&self) -> Self {
        Self {
            c0: self.c2.clone(),
            c1: self.c1.clone(),
            c2: self.c0.clone(),
        }
    }
}

impl fmt::Display for QuadPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

/// Both generating functions with their closed-form ingredients.
#[derive(Clone, Debug)]
pub struct GenFunPair {
    /// reduced forms
    pub f: RationalFunctionZ,
    pub g: RationalFunctionZ,
    /// over the common denominator `v(z^l)`
    pub f_raw: RationalFunctionZ,
    pub g_raw: RationalFunctionZ,
    pub k: usize,
    pub ell: usize,
    pub delta: BigInt,
    /// `v(x)`, quadratic; the denominator is `v(z^l)`
    pub v: IntPoly,
    pub components_f: Vec<RationalFunctionZ>,
    pub components_g: Vec<RationalFunctionZ>,
}

impl GenFunPair {
    pub fn v_quad(&self) -> QuadPoly {
        QuadPoly {
            c0: self.v.coeff(0),
            c1: self.v.coeff(1),
            c2: self.v.coeff(2),
        }
    }

    pub fn denominator(&self) -> IntPoly {
        self.v.compose_power(self.ell)
    }
}

/// `q_k p_{k+l-1} - p_k q_{k+l-1} - q_{k-1} p_{k+l} + p_{k-1} q_{k+l}`
pub fn delta(table: &ConvergentTable, k: usize, ell: usize) -> Result<BigInt> {
    if k == 0 || ell == 0 {
        return Err(Error::NotAPreperiod { k });
    }
    table.require(k + ell)?;
    let (p, q) = (|n| table.p(n), |n| table.q(n));
    Ok(q(k) * p(k + ell - 1) - p(k) * q(k + ell - 1) - q(k - 1) * p(k + ell)
        + p(k - 1) * q(k + ell))
}

/// `v(x) = 1 - (-1)^k delta x + (-1)^l x^2`
pub fn denominator_v(delta: &BigInt, k: usize, ell: usize) -> IntPoly {
    IntPoly::from_coeffs(alloc::vec![
        BigInt::one(),
        -(neg_one_pow(k) * delta),
        neg_one_pow(ell),
    ])
}

/// Numerators `z^n r_n + (-1)^(l+1) z^(n+l) r_{n-l}` for `k <= n < k + l`.
pub fn component_numerators(
    table: &ConvergentTable,
    k: usize,
    ell: usize,
    which: Sequence,
) -> Result<Vec<IntPoly>> {
    if k < ell {
        return Err(Error::PreperiodTooSmall { k, ell });
    }
    table.require(k + ell - 1)?;
    let r = |n: usize| match which {
        Sequence::P => table.p(n),
        Sequence::Q => table.q(n),
    };
    Ok((k..k + ell)
        .map(|n| {
            &IntPoly::monomial(r(n), n)
                + &IntPoly::monomial(neg_one_pow(ell + 1) * r(n - ell), n + ell)
        })
        .collect())
}

fn prefix(table: &ConvergentTable, k: usize, which: Sequence) -> IntPoly {
    IntPoly::from_coeffs(
        (0..k)
            .map(|n| match which {
                Sequence::P => table.p(n),
                Sequence::Q => table.q(n),
            })
            .collect(),
    )
}

/// `F` and `G` at the working pre-period of `cf`.
pub fn assemble(cf: &ContinuedFraction) -> Result<GenFunPair> {
    let idx = canonical_indices(cf);
    let (k, ell) = (idx.k_work, idx.ell);
    let table = convergents(cf, k + ell);
    let delta = delta(&table, k, ell)?;
    let v = denominator_v(&delta, k, ell);
    let den = v.compose_power(ell);
    let build = |which| -> Result<(RationalFunctionZ, Vec<RationalFunctionZ>)> {
        let nums = component_numerators(&table, k, ell, which)?;
        let components = nums
            .iter()
            .map(|u| RationalFunctionZ::new(u.clone(), den.clone()))
            .collect::<Result<Vec<_>>>()?;
        let total = &(&prefix(&table, k, which) * &den) + &nums.into_iter().sum();
        Ok((RationalFunctionZ::new(total, den.clone())?, components))
    };
    let (f_raw, components_f) = build(Sequence::P)?;
    let (g_raw, components_g) = build(Sequence::Q)?;
    Ok(GenFunPair {
        f: f_raw.reduce(),
        g: g_raw.reduce(),
        f_raw,
        g_raw,
        k,
        ell,
        delta,
        v,
        components_f,
        components_g,
    })
}

/// Generating function of `r_n = a_n r_{n-1} + r_{n-2}` with the given
/// `r_0, r_1`, as the combination `(r1 - r0 a1) F + r0 G`.
pub fn general_genfun(cf: &ContinuedFraction, r0: &BigInt, r1: &BigInt) -> Result<RationalFunctionZ> {
    let gf = assemble(cf)?;
    let alpha = r1 - r0 * cf.quotient(1);
    let num = &gf.f_raw.num().scale(&alpha) + &gf.g_raw.num().scale(r0);
    Ok(RationalFunctionZ::new(num, gf.f_raw.den().clone())?.reduce())
}

/// The characteristic polynomial `chi` of the period matrix and the quadratic
/// `omega` vanishing at the tail `[a_{k+1}, a_{k+2}, ...]`.
pub fn char_and_minimal_polys(cf: &ContinuedFraction, k: usize) -> Result<(QuadPoly, QuadPoly)> {
    let ab = ab_table(cf, k)?;
    let m1 = ab.period_matrix();
    let chi = QuadPoly {
        c0: m1.det(),
        c1: -m1.trace(),
        c2: BigInt::one(),
    };
    let (c2, c1, c0) = ab.tail_quadratic();
    Ok((chi, QuadPoly { c0, c1, c2 }))
}

/// Exact evidence for the two positivity facts behind the Lévy formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivityCertificate {
    /// distinct real roots in `(0, 1)` of the combined `G` numerator with
    /// its `z^k` factor removed (Sturm count)
    pub numerator_roots: usize,
    /// grid points `i / 64` at which the numerator was not positive
    pub grid_failures: usize,
    /// `v(0) > 0 > v(1)`, which puts the smaller root of `v` in `(0, 1)`
    pub vmin_in_unit_interval: bool,
}

impl PositivityCertificate {
    pub fn holds(&self) -> bool {
        self.numerator_roots == 0 && self.grid_failures == 0 && self.vmin_in_unit_interval
    }
}

pub fn certify_positivity(gf: &GenFunPair) -> PositivityCertificate {
    let u: IntPoly = gf.components_g.iter().map(|c| c.num().clone()).sum();
    let u = u
        .unshift(u.valuation().unwrap_or(0))
        .expect("valuation strips only zeros");
    let (zero, one) = (BigInt::zero(), BigInt::one());
    let numerator_roots = u.count_roots_between((&zero, &one), (&one, &one));
    let grid = BigInt::from(64);
    let grid_failures = (1..64)
        .filter(|&i| u.sign_at(&BigInt::from(i), &grid) <= 0)
        .count();
    let v0 = gf.v.coeff(0);
    let v1 = gf.v.eval(&one);
    PositivityCertificate {
        numerator_roots,
        grid_failures,
        vmin_in_unit_interval: v0.is_positive() && v1.is_negative(),
    }
}

/// `(-1)^k delta == tr M_1` at the pair's pre-period.
pub fn delta_matches_trace(cf: &ContinuedFraction, gf: &GenFunPair) -> Result<bool> {
    let t = cfrac::transfer_matrices(cf, gf.k)?;
    Ok(neg_one_pow(gf.k) * &gf.delta == t.m1.trace())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cfrac::expand_surd;
    use crate::exact::QuadraticSurd;
    use alloc::string::ToString;
    use alloc::vec;

    fn cf(pre: &[i64], per: &[i64]) -> ContinuedFraction {
        ContinuedFraction::from_i64s(0, pre, per).unwrap()
    }

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn delta_examples() {
        let t = convergents(&cf(&[], &[1]), 5);
        assert_eq!(delta(&t, 2, 1).unwrap(), b(1));
        let t = convergents(&cf(&[], &[2]), 5);
        assert_eq!(delta(&t, 2, 1).unwrap(), b(2));
        let t = convergents(&cf(&[], &[1, 2]), 5);
        assert_eq!(delta(&t, 2, 2).unwrap(), b(4));
        assert_eq!(
            delta(&convergents(&cf(&[], &[1]), 2), 2, 1),
            Err(Error::TableTooShort { needed: 3, have: 2 })
        );
    }

    #[test]
    fn v_examples() {
        assert_eq!(denominator_v(&b(1), 2, 1).to_string(), "1 - z - z^2");
        assert_eq!(denominator_v(&b(2), 2, 1).to_string(), "1 - 2*z - z^2");
        assert_eq!(denominator_v(&b(4), 2, 2).to_string(), "1 - 4*z + z^2");
    }

    #[test]
    fn component_examples() {
        let t = convergents(&cf(&[], &[1]), 5);
        assert_eq!(component_numerators(&t, 2, 1, Sequence::P).unwrap(), vec![IntPoly::from_i64s(&[0, 0, 1, 1])]);
        assert_eq!(component_numerators(&t, 2, 1, Sequence::Q).unwrap(), vec![IntPoly::from_i64s(&[0, 0, 2, 1])]);
        let t = convergents(&cf(&[], &[2]), 5);
        assert_eq!(component_numerators(&t, 2, 1, Sequence::Q).unwrap(), vec![IntPoly::from_i64s(&[0, 0, 5, 2])]);
        assert_eq!(
            component_numerators(&convergents(&cf(&[], &[1, 2, 3]), 9), 2, 3, Sequence::P),
            Err(Error::PreperiodTooSmall { k: 2, ell: 3 })
        );
    }

    #[test]
    fn golden_mean() {
        let g = expand_surd(&QuadraticSurd::new(-1, 2, 5).unwrap(), 100).unwrap();
        let gf = assemble(&g).unwrap();
        assert_eq!((gf.k, gf.ell, gf.delta.clone()), (2, 1, b(1)));
        assert_eq!(gf.f.to_string(), "z / (1 - z - z^2)");
        assert_eq!(gf.g.to_string(), "1 / (1 - z - z^2)");
    }

    #[test]
    fn silver_and_sqrt3() {
        let gf = assemble(&cf(&[], &[2])).unwrap();
        assert_eq!(gf.g.to_string(), "1 / (1 - 2*z - z^2)");
        let gf = assemble(&cf(&[], &[1, 2])).unwrap();
        assert_eq!(gf.g_raw.den().to_string(), "1 - 4*z^2 + z^4");
        assert_eq!(gf.g.integer_series(6).unwrap(), [1, 1, 3, 4, 11, 15].map(b).to_vec());
    }

    #[test]
    fn series_matches_convergents() {
        for w in [cf(&[5, 7], &[1, 2, 3]), cf(&[3], &[1, 2, 1]), cf(&[1, 1, 4], &[2, 1, 1, 3])] {
            let gf = assemble(&w).unwrap();
            let t = convergents(&w, 80);
            assert_eq!(gf.f.integer_series(80).unwrap(), t.p_slice()[..80].to_vec(), "{w}");
            assert_eq!(gf.g.integer_series(80).unwrap(), t.q_slice()[..80].to_vec(), "{w}");
            assert!(delta_matches_trace(&w, &gf).unwrap());
        }
    }

    #[test]
    fn general_examples() {
        let g = cf(&[], &[1]);
        let gf = assemble(&g).unwrap();
        assert_eq!(general_genfun(&g, &b(0), &b(1)).unwrap(), gf.f);
        assert_eq!(general_genfun(&g, &b(1), &b(1)).unwrap(), gf.g);
        let lucas = general_genfun(&g, &b(2), &b(1)).unwrap();
        assert_eq!(lucas.to_string(), "(2 - z) / (1 - z - z^2)");
        assert_eq!(lucas.integer_series(5).unwrap(), [2, 1, 3, 4, 7].map(b).to_vec());
    }

    #[test]
    fn char_and_tail() {
        let (chi, omega) = char_and_minimal_polys(&cf(&[], &[1]), 2).unwrap();
        assert_eq!(chi.to_string(), "-1 - z + z^2");
        assert_eq!(chi.reciprocal().to_poly(), denominator_v(&b(1), 2, 1));
        let (chi, omega2) = char_and_minimal_polys(&cf(&[], &[1, 2]), 2).unwrap();
        assert_eq!((chi.to_string(), chi.discriminant()), ("1 - 4*z + z^2".into(), b(12)));
        assert_eq!((omega2.to_string(), omega2.discriminant()), ("-2 + 2*z + z^2".into(), b(12)));
        assert_eq!(omega.discriminant(), b(5));
    }

    #[test]
    fn positivity() {
        for w in [cf(&[], &[1]), cf(&[], &[1, 2]), cf(&[5, 7], &[1, 2, 3])] {
            let c = certify_positivity(&assemble(&w).unwrap());
            assert!(c.holds(), "{w}: {c:?}");
        }
    }
}
