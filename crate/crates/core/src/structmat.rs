//! Polynomial matrices with three cyclically shifted monomial bands,
//!
//! ```text
//! N_s(z) = g0_s C_s + g1_s z C_{s+1} + g2_s z^2 C_{s+2}      (indices mod l)
//! ```
//!
//! with `det N = det C * v(z^l)` for a quadratic `v`, closed-form Cramer
//! numerators from two scalar recurrences, the configuration combinatorics
//! behind both, and brute-force oracles.
//!
//! All indices are 0-based: columns `C_0 .. C_{l-1}`, coefficients `g_s^p`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cfrac::{ab_table, canonical_indices, convergents, ContinuedFraction};
use crate::exact::{det_int, det_is_zero, IntPoly, RationalFunctionZ};
use crate::genfun;
use crate::{CheckReport, Error, Result};

const ENUMERATION_LIMIT: usize = 12;
const LEIBNIZ_LIMIT: usize = 8;

/// Base matrix `C` (by columns) and band coefficients `g_s^p`, `p in {0,1,2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialSystem {
    columns: Vec<Vec<BigInt>>,
    gamma: Vec<[BigInt; 3]>,
}

impl MonomialSystem {
    pub fn new(columns: Vec<Vec<BigInt>>, gamma: Vec<[BigInt; 3]>) -> Result<Self> {
        let ell = columns.len();
        if ell < 3 {
            return Err(Error::PeriodTooShort { ell });
        }
        if gamma.len() != ell || columns.iter().any(|c| c.len() != ell) {
            return Err(Error::Dimension);
        }
        Ok(Self { columns, gamma })
    }

    pub fn from_i64(columns: &[Vec<i64>], gamma: &[[i64; 3]]) -> Result<Self> {
        Self::new(
            columns
                .iter()
                .map(|c| c.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
            gamma.iter().map(|g| g.map(BigInt::from)).collect(),
        )
    }

    pub fn ell(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &[BigInt] {
        &self.columns[j % self.ell()]
    }

    pub fn gamma(&self, s: usize, p: usize) -> &BigInt {
        &self.gamma[s % self.ell()][p]
    }

    /// Row-major copy of `C`.
    pub fn base_rows(&self) -> Vec<Vec<BigInt>> {
        let l = self.ell();
        (0..l)
            .map(|i| (0..l).map(|j| self.columns[j][i].clone()).collect())
            .collect()
    }

    pub fn base_det(&self) -> BigInt {
        det_int(&self.base_rows())
    }

    pub fn base_is_singular(&self) -> bool {
        det_is_zero(&self.base_rows())
    }

    fn idx(&self, s: isize) -> usize {
        s.rem_euclid(self.ell() as isize) as usize
    }

    fn g(&self, s: isize, p: usize) -> &BigInt {
        &self.gamma[self.idx(s)][p]
    }

    fn product(&self, p: usize, skip: &[isize]) -> BigInt {
        let skip: Vec<usize> = skip.iter().map(|&s| self.idx(s)).collect();
        (0..self.ell())
            .filter(|k| !skip.contains(k))
            .map(|k| self.gamma[k][p].clone())
            .product()
    }
}

/// Square matrix of integer polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: Vec<Vec<IntPoly>>,
}

impl PolyMatrix {
    pub fn new(rows: Vec<Vec<IntPoly>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension);
        }
        Ok(Self { rows })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &IntPoly {
        &self.rows[i][j]
    }

    pub fn mul_vec(&self, v: &[IntPoly]) -> Vec<IntPoly> {
        self.rows
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }
}

/// `N(z)` column by column.
pub fn assemble_n(sys: &MonomialSystem) -> PolyMatrix {
    let l = sys.ell();
    let mut rows = vec![vec![IntPoly::zero(); l]; l];
    for s in 0..l {
        for p in 0..3 {
            let col = sys.column(s + p);
            for (i, c) in col.iter().enumerate() {
                let term = IntPoly::monomial(sys.gamma(s, p) * c, p);
                rows[i][s] = &rows[i][s] + &term;
            }
        }
    }
    PolyMatrix { rows }
}

/// Leibniz expansion over all permutations.
pub fn brute_det(m: &PolyMatrix) -> Result<IntPoly> {
    let n = m.size();
    if n > LEIBNIZ_LIMIT {
        return Err(Error::BruteForceBudget { size: n });
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut counters = vec![0usize; n];
    let mut odd = false;
    let term = |perm: &[usize], odd: bool| -> IntPoly {
        let mut acc = IntPoly::one();
        for (i, &j) in perm.iter().enumerate() {
            acc = &acc * &m.rows[i][j];
            if acc.is_zero() {
                return acc;
            }
        }
        if odd {
            -acc
        } else {
            acc
        }
    };
    let mut total = term(&perm, odd);
    // Heap's algorithm, one transposition per step
    let mut i = 1;
    while i < n {
        if counters[i] < i {
            let j = if i % 2 == 0 { 0 } else { counters[i] };
            perm.swap(j, i);
            odd = !odd;
            total = &total + &term(&perm, odd);
            counters[i] += 1;
            i = 1;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    Ok(total)
}

/// A map `tau` from `Z_l` (or `Z_l` minus one index) to `{0, 1, 2}` selecting
/// the band of each column, with its combinatorial type and sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration {
    pub ell: usize,
    pub omitted: Option<usize>,
    pub values: Vec<Option<u8>>,
    /// leading zeros of the string read from `omitted + 1`
    pub kappa: usize,
    /// trailing twos of the same string
    pub mu: usize,
    /// `sum tau / l` for full-domain maps
    pub eta: Option<u8>,
    /// parity of the induced permutation `k -> k + tau(k)`
    pub parity: u8,
}

impl Configuration {
    /// Values in cyclic order starting after the omitted index.
    pub fn string(&self) -> Vec<u8> {
        let start = self.omitted.map_or(0, |s| s + 1);
        (0..self.ell)
            .filter_map(|i| self.values[(start + i) % self.ell])
            .collect()
    }

    /// `(-1)^parity * prod g_k^{tau(k)}` over the domain.
    pub fn signed_weight(&self, sys: &MonomialSystem) -> BigInt {
        let w: BigInt = self
            .values
            .iter()
            .enumerate()
            .filter_map(|(k, v)| v.map(|p| sys.gamma(k, p as usize).clone()))
            .product();
        if self.parity == 1 {
            -w
        } else {
            w
        }
    }
}

fn non_decreasing(values: &[Option<u8>]) -> bool {
    let l = values.len();
    (0..l).all(|k| {
        let Some(t) = values[k] else { return true };
        let drop = |d: usize, by: u8| values[(k + d) % l].is_some_and(|u| t >= by && u == t - by);
        !drop(1, 1) && !drop(2, 2)
    })
}

fn permutation_parity(images: &[usize]) -> Option<u8> {
    let n = images.len();
    let mut seen = vec![false; n];
    if images.iter().any(|&i| i >= n || core::mem::replace(&mut seen[i], true)) {
        return None;
    }
    let mut visited = vec![false; n];
    let mut cycles = 0;
    for i in 0..n {
        if !visited[i] {
            cycles += 1;
            let mut j = i;
            while !visited[j] {
                visited[j] = true;
                j = images[j];
            }
        }
    }
    Some(((n - cycles) % 2) as u8)
}

/// Exhaustive list of non-decreasing configurations: over all of `Z_l`, or,
/// given `(s, t)`, over `Z_l \ {s}` with `s -> t` and the exclusions
/// `tau(t-2) != 2`, `tau(t-1) != 1`, `tau(t) != 0`.
pub fn enumerate_tplus(ell: usize, omitted: Option<usize>, t: Option<usize>) -> Result<Vec<Configuration>> {
    if ell < 3 {
        return Err(Error::PeriodTooShort { ell });
    }
    if ell > ENUMERATION_LIMIT {
        return Err(Error::EnumerationBudget { ell });
    }
    if omitted.is_some() != t.is_some() || omitted.is_some_and(|s| s >= ell) || t.is_some_and(|t| t >= ell) {
        return Err(Error::Dimension);
    }
    let free: Vec<usize> = match omitted {
        Some(s) => (1..ell).map(|i| (s + i) % ell).collect(),
        None => (0..ell).collect(),
    };
    let excluded: Vec<(usize, u8)> = t
        .map(|t| vec![((t + ell - 2) % ell, 2), ((t + ell - 1) % ell, 1), (t, 0)])
        .unwrap_or_default();
    let mut out = Vec::new();
    let total = 3usize.pow(free.len() as u32);
    for code in 0..total {
        let mut values = vec![None; ell];
        let mut c = code;
        for &k in &free {
            values[k] = Some((c % 3) as u8);
            c /= 3;
        }
        if !non_decreasing(&values) || excluded.iter().any(|&(k, p)| values[k] == Some(p)) {
            continue;
        }
        let images: Vec<usize> = (0..ell)
            .map(|k| match values[k] {
                Some(p) => (k + p as usize) % ell,
                None => t.expect("omitted index has a target"),
            })
            .collect();
        let parity = permutation_parity(&images)
            .ok_or(Error::VerificationFailed("non-decreasing configuration is not a permutation"))?;
        let mut cfg = Configuration {
            ell,
            omitted,
            values,
            kappa: 0,
            mu: 0,
            eta: None,
            parity,
        };
        let s = cfg.string();
        cfg.kappa = s.iter().take_while(|&&x| x == 0).count();
        cfg.mu = s.iter().rev().take_while(|&&x| x == 2).count();
        if omitted.is_none() {
            cfg.eta = Some((s.iter().map(|&x| x as usize).sum::<usize>() / ell) as u8);
        }
        out.push(cfg);
    }
    Ok(out)
}

/// `kappa(s, t) = (t - 1 - s) mod l`
pub fn kappa(ell: usize, s: usize, t: usize) -> usize {
    (t + 2 * ell - 1 - s) % ell
}

/// `mu(s, t) = ((s - t) mod l) + 1`
pub fn mu(ell: usize, s: usize, t: usize) -> usize {
    (s + ell - t) % ell + 1
}

/// Recurrence values for one right-hand side column `C_t`: the coefficient of
/// type `(kappa, 0)` and of type `(0, mu)` at every `s`. At `s = t - 1` both
/// entries hold the single `(0, 0)` coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UTable {
    pub t: usize,
    pub kappa_vals: Vec<BigInt>,
    pub mu_vals: Vec<BigInt>,
}

impl UTable {
    pub fn ell(&self) -> usize {
        self.kappa_vals.len()
    }

    /// Cramer numerator `u_s(z)`.
    pub fn numerator(&self, s: usize) -> IntPoly {
        let (l, t) = (self.ell(), self.t);
        if s == (t + l - 1) % l {
            return IntPoly::monomial(self.kappa_vals[s].clone(), l - 1);
        }
        &IntPoly::monomial(self.kappa_vals[s].clone(), l - 1 - kappa(l, s, t))
            + &IntPoly::monomial(self.mu_vals[s].clone(), l - 1 + mu(l, s, t))
    }
}

fn exact_div(num: BigInt, den: &BigInt, index: usize) -> Result<BigInt> {
    if den.is_zero() {
        return Err(Error::ZeroPivot { index });
    }
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::VerificationFailed("recurrence value is not integral"));
    }
    Ok(q)
}

pub fn u_table(sys: &MonomialSystem, t: usize) -> Result<UTable> {
    let l = sys.ell();
    if t >= l {
        return Err(Error::Dimension);
    }
    let li = l as isize;
    let ti = t as isize;
    let at = |s: isize| sys.idx(s);

    let mut kv = vec![BigInt::zero(); l];
    kv[at(ti)] = sys.product(0, &[ti]);
    kv[at(ti + 1)] = -sys.g(ti, 1) * sys.product(0, &[ti, ti + 1]);
    for i in 2..li {
        let s = ti + i;
        let rhs = -(sys.g(s - 1, 1) * &kv[at(s - 1)]) - sys.g(s - 2, 2) * &kv[at(s - 2)];
        kv[at(s)] = exact_div(rhs, sys.g(s, 0), at(s))?;
    }

    let mut mv = vec![BigInt::zero(); l];
    mv[at(ti - 2)] = sys.product(2, &[ti - 2]);
    mv[at(ti - 3)] = -sys.g(ti - 2, 1) * sys.product(2, &[ti - 2, ti - 3]);
    for i in 4..=li + 1 {
        let s = ti - i;
        let rhs = -(sys.g(s + 1, 1) * &mv[at(s + 1)]) - sys.g(s + 2, 0) * &mv[at(s + 2)];
        mv[at(s)] = exact_div(rhs, sys.g(s, 2), at(s))?;
    }
    Ok(UTable {
        t,
        kappa_vals: kv,
        mu_vals: mv,
    })
}

/// The same table as [`u_table`], summed over enumerated configurations.
/// Needs no division, so it also covers systems with zero band coefficients.
pub fn u_table_enumerated(sys: &MonomialSystem, t: usize) -> Result<UTable> {
    let l = sys.ell();
    if t >= l {
        return Err(Error::Dimension);
    }
    let mut kv = vec![BigInt::zero(); l];
    let mut mv = vec![BigInt::zero(); l];
    for s in 0..l {
        for cfg in enumerate_tplus(l, Some(s), Some(t))? {
            let w = cfg.signed_weight(sys);
            if cfg.mu == 0 {
                kv[s] += &w;
            }
            if cfg.kappa == 0 {
                mv[s] += &w;
            }
        }
    }
    Ok(UTable {
        t,
        kappa_vals: kv,
        mu_vals: mv,
    })
}

/// Middle coefficient of `v` from the recurrence tables anchored at `s`.
pub fn v1_at_anchor(sys: &MonomialSystem, s: usize) -> Result<BigInt> {
    let l = sys.ell();
    let own = u_table(sys, s)?;
    let next = u_table(sys, (s + 1) % l)?;
    let after = u_table(sys, (s + 2) % l)?;
    Ok(sys.gamma(s, 0) * &own.mu_vals[s]
        + sys.gamma(s, 1) * &next.kappa_vals[s]
        + sys.gamma(s, 2) * &after.kappa_vals[s])
}

/// Middle coefficient of `v` as a signed sum over enumerated configurations.
pub fn v1_enumerated(sys: &MonomialSystem) -> Result<BigInt> {
    Ok(enumerate_tplus(sys.ell(), None, None)?
        .iter()
        .filter(|c| c.eta == Some(1))
        .map(|c| c.signed_weight(sys))
        .sum())
}

/// `v(x) = prod g0 + v1 x + prod g2 x^2`. Falls back to enumeration when every
/// anchor meets a zero pivot.
pub fn v_closed(sys: &MonomialSystem) -> Result<IntPoly> {
    let v1 = match (0..sys.ell()).find_map(|s| v1_at_anchor(sys, s).ok()) {
        Some(v1) => v1,
        None => v1_enumerated(sys)?,
    };
    Ok(IntPoly::from_coeffs(vec![sys.product(0, &[]), v1, sys.product(2, &[])]))
}

/// Numerators `u_s(z)` solving `N(z) u(z) = v(z^l) C_t`, verified exactly.
pub fn cramer_numerators(sys: &MonomialSystem, t: usize) -> Result<Vec<IntPoly>> {
    if sys.base_is_singular() {
        return Err(Error::SingularBase);
    }
    let table = match u_table(sys, t) {
        Err(Error::ZeroPivot { .. }) => u_table_enumerated(sys, t)?,
        other => other?,
    };
    let u: Vec<IntPoly> = (0..sys.ell()).map(|s| table.numerator(s)).collect();
    let vz = v_closed(sys)?.compose_power(sys.ell());
    let lhs = assemble_n(sys).mul_vec(&u);
    let ok = lhs
        .iter()
        .zip(sys.column(t))
        .all(|(got, c)| *got == vz.scale(c));
    if !ok {
        return Err(Error::VerificationFailed("N(z) u(z) != v(z^l) C_t"));
    }
    Ok(u)
}

/// `E(z)` with `N(z) E(z) = C_t`, entries `u_s(z) / v(z^l)`.
pub fn cramer_solve(sys: &MonomialSystem, t: usize) -> Result<Vec<RationalFunctionZ>> {
    let u = cramer_numerators(sys, t)?;
    let vz = v_closed(sys)?.compose_power(sys.ell());
    u.into_iter()
        .map(|n| RationalFunctionZ::new(n, vz.clone()))
        .collect()
}

fn solve_rational(rows: &[Vec<BigInt>], rhs: &[BigInt]) -> Option<Vec<BigRational>> {
    let n = rows.len();
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            r.iter()
                .chain(core::iter::once(b))
                .map(|x| BigRational::from(x.clone()))
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = &m[r][col] / &m[col][col];
                for c in col..=n {
                    let sub = &f * &m[col][c];
                    m[r][c] -= sub;
                }
            }
        }
    }
    Some((0..n).map(|i| &m[i][n] / &m[i][i]).collect())
}

/// Solve `N(z) E(z) = h` for an arbitrary integer column `h`, by expressing
/// `det(C) h` in the `C` basis and combining the Cramer solutions.
/// Returns numerators over the common denominator `det(C) v(z^l)`.
pub fn solve_rhs(sys: &MonomialSystem, h: &[BigInt]) -> Result<(Vec<IntPoly>, IntPoly)> {
    let l = sys.ell();
    if h.len() != l {
        return Err(Error::Dimension);
    }
    let det = sys.base_det();
    let coords = solve_rational(&sys.base_rows(), h).ok_or(Error::SingularBase)?;
    let weights: Vec<BigInt> = coords
        .iter()
        .map(|x| x * BigRational::from(det.clone()))
        .map(|x| x.to_integer())
        .collect();
    let mut num = vec![IntPoly::zero(); l];
    for (t, w) in weights.iter().enumerate() {
        if w.is_zero() {
            continue;
        }
        for (acc, u) in num.iter_mut().zip(cramer_numerators(sys, t)?) {
            *acc = &*acc + &u.scale(w);
        }
    }
    let den = v_closed(sys)?.compose_power(l).scale(&det);
    let lhs = assemble_n(sys).mul_vec(&num);
    if lhs.iter().zip(h).any(|(got, c)| *got != den.scale(c)) {
        return Err(Error::VerificationFailed("N(z) E(z) != h"));
    }
    Ok((num, den))
}

/// Rows of the matrix whose `j`-th column is `(A^(0), ..., A^(l-1))` at lower
/// index `k + j`.
pub fn a_column_rows(cf: &ContinuedFraction, k: usize) -> Result<Vec<Vec<BigInt>>> {
    let ab = ab_table(cf, k)?;
    let l = cf.period_len();
    let cols: Vec<Vec<BigInt>> = (0..l).map(|j| ab.column((k + j) as isize)).collect();
    Ok((0..l).map(|i| (0..l).map(|j| cols[j][i].clone()).collect()).collect())
}

/// Determinant of the continuant column matrix of the stored period.
pub fn column_determinant(cf: &ContinuedFraction) -> Result<BigInt> {
    Ok(det_int(&a_column_rows(cf, canonical_indices(cf).k_work)?))
}

/// The system of a continued fraction at its working pre-period:
/// `C_j = (A^(0), ..., A^(l-1))` at `k + j`, `g_j = (1, -a_{k+j+1}, -1)`.
pub fn cf_system(cf: &ContinuedFraction) -> Result<MonomialSystem> {
    let idx = canonical_indices(cf);
    let (l, k) = (idx.ell, idx.k_work);
    if l < 3 {
        return Err(Error::PeriodTooShort { ell: l });
    }
    let ab = ab_table(cf, k)?;
    let columns = (0..l).map(|j| ab.column((k + j) as isize)).collect();
    let gamma = (0..l)
        .map(|j| [BigInt::one(), -cf.quotient(k + j + 1).clone(), -BigInt::one()])
        .collect();
    let sys = MonomialSystem::new(columns, gamma)?;
    if cf.is_minimal() && sys.base_is_singular() {
        return Err(Error::VerificationFailed("minimal period with singular column matrix"));
    }
    Ok(sys)
}

/// Check that the Cramer route reproduces the closed-form component functions
/// and that `N(z) F(z) = r_k z^k C_0 + r_{k-1} z^{k+1} C_1` holds as a
/// truncated series identity to `depth` terms, for `r = p` and `r = q`.
pub fn verify_cf_embedding(cf: &ContinuedFraction, depth: usize) -> Result<CheckReport> {
    let sys = cf_system(cf)?;
    let gf = genfun::assemble(cf)?;
    let (l, k) = (sys.ell(), gf.k);
    let table = convergents(cf, (k + l).max(depth) + 2);
    let n = assemble_n(&sys);
    let mut report = CheckReport::new();

    let v = v_closed(&sys)?;
    let mut fam = report.family("matrix denominator", format!("l = {l}, k = {k}"));
    fam.check(v == gf.v, || format!("{v} vs {}", gf.v));

    let u0 = cramer_numerators(&sys, 0)?;
    let u1 = cramer_numerators(&sys, 1)?;
    let vz = v.compose_power(l);
    for (name, seq, components) in [
        ("cramer components F", table.p_slice(), &gf.components_f),
        ("cramer components G", table.q_slice(), &gf.components_g),
    ] {
        let mut fam = report.family(name, format!("k <= n < k + {l}"));
        for m in 0..l {
            let num = &(&u0[m] * &IntPoly::monomial(seq[k].clone(), k))
                + &(&u1[m] * &IntPoly::monomial(seq[k - 1].clone(), k + 1));
            let ours = RationalFunctionZ::new(num, vz.clone())?;
            let theirs = &components[m];
            let same = ours.reduce().num() == theirs.reduce().num()
                && ours.reduce().den() == theirs.reduce().den();
            fam.check(same, || format!("n = {}: {} vs {}", k + m, ours.reduce(), theirs.reduce()));
        }
    }

    for (name, seq) in [("matrix relation p", table.p_slice()), ("matrix relation q", table.q_slice())] {
        let big_f: Vec<IntPoly> = (0..l)
            .map(|m| {
                IntPoly::from_coeffs(
                    (0..depth)
                        .map(|d| {
                            if d >= k + m && (d - k - m) % l == 0 {
                                seq[d].clone()
                            } else {
                                BigInt::zero()
                            }
                        })
                        .collect(),
                )
            })
            .collect();
        let lhs = n.mul_vec(&big_f);
        let mut fam = report.family(name, format!("coefficients below z^{depth}"));
        for (i, row) in lhs.iter().enumerate() {
            let rhs = &IntPoly::monomial(&seq[k] * &sys.column(0)[i], k)
                + &IntPoly::monomial(&seq[k - 1] * &sys.column(1)[i], k + 1);
            let diff = row - &rhs;
            let bad = (0..depth).find(|&d| !diff.coeff(d).is_zero());
            fam.check(bad.is_none(), || format!("row {i}, first mismatch at z^{}", bad.unwrap_or(0)));
        }
    }
    Ok(report)
}

/// Describe a configuration as its value string, e.g. `"120"` or `".02"`.
pub fn describe(cfg: &Configuration) -> String {
    cfg.values
        .iter()
        .map(|v| match v {
            Some(p) => char::from(b'0' + p),
            None => '.',
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn identity(l: usize) -> Vec<Vec<i64>> {
        (0..l).map(|j| (0..l).map(|i| (i == j) as i64).collect()).collect()
    }

    fn uniform(l: usize, g: [i64; 3]) -> MonomialSystem {
        MonomialSystem::from_i64(&identity(l), &vec![g; l]).unwrap()
    }

    #[test]
    fn assemble_examples() {
        let c = vec![vec![1, 2, 3], vec![0, 1, 4], vec![5, 6, 0]];
        let sys = MonomialSystem::from_i64(&c, &[[1, 0, 0]; 3]).unwrap();
        let n = assemble_n(&sys);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(n.entry(i, j), &IntPoly::from_i64s(&[c[j][i]]));
            }
        }
        let n = assemble_n(&uniform(3, [1, -1, -1]));
        assert_eq!(n.entry(0, 0).to_string(), "1");
        assert_eq!(n.entry(1, 0).to_string(), "-z");
        assert_eq!(n.entry(2, 0).to_string(), "-z^2");
        assert_eq!(brute_det(&n).unwrap().to_string(), "1 - 4*z^3 - z^6");
    }

    #[test]
    fn brute_examples() {
        let id = assemble_n(&uniform(3, [1, 0, 0]));
        assert_eq!(brute_det(&id).unwrap(), IntPoly::one());
        let zs = PolyMatrix::new(
            (0..3)
                .map(|i| (0..3).map(|j| if i == j { IntPoly::from_i64s(&[0, 1]) } else { IntPoly::zero() }).collect())
                .collect(),
        )
        .unwrap();
        assert_eq!(brute_det(&zs).unwrap().to_string(), "z^3");
        let big = assemble_n(&uniform(9, [1, 1, 1]));
        assert_eq!(brute_det(&big), Err(Error::BruteForceBudget { size: 9 }));
    }

    #[test]
    fn v_examples() {
        assert_eq!(v_closed(&uniform(4, [3, 0, 0])).unwrap(), IntPoly::from_i64s(&[81]));
        assert_eq!(v_closed(&uniform(3, [1, -1, -1])).unwrap().to_string(), "1 - 4*z - z^2");
        for a in 1..5i64 {
            let v1 = v_closed(&uniform(3, [1, -a, -1])).unwrap().coeff(1);
            assert_eq!(v1, BigInt::from(-a * a * a - 3 * a));
        }
    }

    #[test]
    fn seeds() {
        let t = u_table(&uniform(3, [1, -1, -1]), 0).unwrap();
        assert_eq!(t.kappa_vals[0], BigInt::one());
        assert_eq!(t.kappa_vals[1], BigInt::one());
    }

    #[test]
    fn zero_pivot() {
        let mut g = vec![[1, 1, 1]; 4];
        g[3][0] = 0;
        let sys = MonomialSystem::from_i64(&identity(4), &g).unwrap();
        assert!(matches!(u_table(&sys, 0), Err(Error::ZeroPivot { .. })));
        // some anchor or the enumeration still yields v
        let v = v_closed(&sys).unwrap();
        assert_eq!(v.coeff(1), v1_enumerated(&sys).unwrap());
    }

    #[test]
    fn enumeration_l3() {
        let all = enumerate_tplus(3, None, None).unwrap();
        let mut names: Vec<String> = all.iter().map(describe).collect();
        names.sort();
        assert_eq!(names, ["000", "012", "111", "120", "201", "222"]);
        let v1: Vec<_> = all.iter().filter(|c| c.eta == Some(1)).collect();
        assert_eq!(v1.len(), 4);
        assert_eq!(enumerate_tplus(13, None, None), Err(Error::EnumerationBudget { ell: 13 }));
    }

    #[test]
    fn types_match_kappa_mu() {
        for l in 3..=6 {
            for t in 0..l {
                for s in 0..l {
                    for cfg in enumerate_tplus(l, Some(s), Some(t)).unwrap() {
                        let ty = (cfg.kappa, cfg.mu);
                        if s == (t + l - 1) % l {
                            assert_eq!(ty, (0, 0));
                        } else {
                            assert!(ty == (kappa(l, s, t), 0) || ty == (0, mu(l, s, t)), "{l} {s} {t} {ty:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn enumerated_table_matches_recurrence() {
        let sys = MonomialSystem::from_i64(
            &[vec![2, 1, 0, 3], vec![1, 1, 4, 0], vec![0, 5, 1, 1], vec![7, 0, 2, 1]],
            &[[1, -3, 2], [2, 1, -1], [-1, 4, 3], [1, -2, 1]],
        )
        .unwrap();
        for t in 0..4 {
            assert_eq!(u_table(&sys, t).unwrap(), u_table_enumerated(&sys, t).unwrap());
        }
    }

    #[test]
    fn cramer_uniform() {
        let sys = uniform(3, [1, -1, -1]);
        let e = cramer_solve(&sys, 0).unwrap();
        assert!(e.iter().all(|x| x.den().to_string() == "1 - 4*z^3 - z^6"));
        let trivial = cramer_solve(&uniform(3, [1, 0, 0]), 0).unwrap();
        let want = [1, 0, 0].map(|x| RationalFunctionZ::polynomial(IntPoly::from_i64s(&[x])));
        assert_eq!(trivial, want.to_vec());
    }

    #[test]
    fn cf_examples() {
        let cf = ContinuedFraction::from_i64s(0, &[], &[1, 1, 2]).unwrap();
        assert!(!column_determinant(&cf).unwrap().is_zero());
        let sys = cf_system(&cf).unwrap();
        let k = canonical_indices(&cf).k_work;
        assert_eq!(sys.gamma(1, 1), &-cf.quotient(k + 2).clone());
        let flat = ContinuedFraction::from_i64s(0, &[], &[1, 1, 1]).unwrap();
        assert!(column_determinant(&flat).unwrap().is_zero());
        let r = verify_cf_embedding(&cf, 60).unwrap();
        assert!(r.all_passed(), "{r}");
        let cf = ContinuedFraction::from_i64s(0, &[], &[1, 2, 3]).unwrap();
        assert!(verify_cf_embedding(&cf, 60).unwrap().all_passed());
        let cf = ContinuedFraction::from_i64s(0, &[5, 7], &[1, 2, 3]).unwrap();
        assert!(verify_cf_embedding(&cf, 60).unwrap().all_passed());
        let v = v_closed(&cf_system(&ContinuedFraction::from_i64s(0, &[], &[1, 2, 1, 3]).unwrap()).unwrap()).unwrap();
        assert_eq!(v.coeff(0), BigInt::one());
    }
}
