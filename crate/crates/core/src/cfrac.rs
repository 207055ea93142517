//! Continued fractions of quadratic irrationals: expansion with period
//! detection, convergents, the continuant tables `A`, `B`, transfer matrices,
//! and an exact check suite for the classical convergent identities.
//!
//! Partial quotients are numbered from one, `x = a0 + [a1, a2, ...]`, and all
//! machinery acts on the fractional part.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exact::{isqrt, QuadraticSurd};
use crate::{CheckReport, Error, Result};

/// `a0 + [pre..., (period)...]` with every partial quotient at least one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    a0: BigInt,
    pre: Vec<BigInt>,
    period: Vec<BigInt>,
    minimal: bool,
}

impl ContinuedFraction {
    /// Validates quotients; the word is stored as given and flagged minimal
    /// only if it cannot be shortened.
    pub fn new(a0: BigInt, pre: Vec<BigInt>, period: Vec<BigInt>) -> Result<Self> {
        if period.is_empty() || pre.iter().chain(&period).any(|a| a < &BigInt::one()) {
            return Err(Error::InvalidQuotients);
        }
        let minimal = is_minimal_word(&pre, &period);
        Ok(Self {
            a0,
            pre,
            period,
            minimal,
        })
    }

    pub fn from_i64s(a0: i64, pre: &[i64], period: &[i64]) -> Result<Self> {
        let big = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect();
        Self::new(a0.into(), big(pre), big(period))
    }

    /// Same number with the shortest period and pre-period.
    pub fn minimized(&self) -> Self {
        let ell = self.period.len();
        let root = (1..=ell)
            .find(|&d| ell % d == 0 && (d..ell).all(|i| self.period[i] == self.period[i - d]))
            .unwrap_or(ell);
        let mut period: Vec<BigInt> = self.period[..root].to_vec();
        let mut pre = self.pre.clone();
        while pre.last().is_some_and(|a| Some(a) == period.last()) {
            pre.pop();
            period.rotate_right(1);
        }
        Self {
            a0: self.a0.clone(),
            pre,
            period,
            minimal: true,
        }
    }

    pub fn a0(&self) -> &BigInt {
        &self.a0
    }

    pub fn pre(&self) -> &[BigInt] {
        &self.pre
    }

    pub fn period(&self) -> &[BigInt] {
        &self.period
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    pub fn period_len(&self) -> usize {
        self.period.len()
    }

    /// Partial quotient `a_n`, `n >= 1`.
    pub fn quotient(&self, n: usize) -> &BigInt {
        assert!(n >= 1, "partial quotients start at a_1");
        let k = self.pre.len();
        if n <= k {
            &self.pre[n - 1]
        } else {
            &self.period[(n - 1 - k) % self.period.len()]
        }
    }

    /// The exact value, reconstructed from the word alone.
    pub fn value(&self) -> Result<QuadraticSurd> {
        let k = self.pre.len();
        let ab = build_ab(self, k);
        let (c2, c1, c0) = ab.tail_quadratic();
        // tail = positive root of c2 z^2 + c1 z + c0, with c2 > 0 > c0
        let disc = &c1 * &c1 - BigInt::from(4) * &c2 * &c0;
        let tail = QuadraticSurd::from_components(-c1, BigInt::one(), BigInt::from(2) * c2, &disc)?;
        let head = convergents(self, k.max(1));
        let (pk1, pk, qk1, qk) = (head.p_ext(k as isize - 1), head.p(k), head.q_ext(k as isize - 1), head.q(k));
        Ok(tail.mobius(&pk1, &pk, &qk1, &qk)?.add_int(&self.a0))
    }
}

fn is_minimal_word(pre: &[BigInt], period: &[BigInt]) -> bool {
    let ell = period.len();
    let primitive = (1..ell)
        .filter(|d| ell % d == 0)
        .all(|d| (d..ell).any(|i| period[i] != period[i - d]));
    primitive && pre.last().is_none_or(|a| Some(a) != period.last())
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[BigInt]| {
            v.iter()
                .map(|a| format!("{a}"))
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{};[{}];({})", self.a0, join(&self.pre), join(&self.period))
    }
}

/// Expand a surd by the exact `(P, Q)` state iteration. The period is found
/// as the first repeated state after the integer part.
pub fn expand_surd(s: &QuadraticSurd, max_steps: usize) -> Result<ContinuedFraction> {
    let d = s.d().clone();
    let r = isqrt(&d);
    let step = |p: &BigInt, q: &BigInt| -> (BigInt, BigInt, BigInt) {
        let a = if q.is_positive() {
            num_integer::Integer::div_floor(&(p + &r), q)
        } else {
            num_integer::Integer::div_floor(&(p + &r + BigInt::one()), q)
        };
        let p2 = &a * q - p;
        let q2 = (&d - &p2 * &p2) / q;
        (a, p2, q2)
    };
    let (a0, mut p, mut q) = step(s.p(), s.q());
    let mut seen: BTreeMap<(BigInt, BigInt), usize> = BTreeMap::new();
    let mut quotients = Vec::new();
    loop {
        if let Some(&start) = seen.get(&(p.clone(), q.clone())) {
            let period = quotients.split_off(start);
            let cf = ContinuedFraction::new(a0, quotients, period)?;
            return Ok(cf.minimized());
        }
        if quotients.len() >= max_steps {
            return Err(Error::PeriodNotFound {
                steps: quotients.len(),
            });
        }
        seen.insert((p.clone(), q.clone()), quotients.len());
        let (a, p2, q2) = step(&p, &q);
        quotients.push(a);
        p = p2;
        q = q2;
    }
}

/// Period length, minimal pre-period, and the working pre-period used by the
/// generating-function construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Indices {
    pub ell: usize,
    pub k_min: usize,
    pub k_work: usize,
}

/// Indices read off the stored word; canonical when `cf` is minimal.
///
/// `k_work = max(2, k_min + 1, l, k_min + l - 1)`: the component numerators
/// reach back to `p_{n-l+1}` and need it inside the periodic regime.
pub fn canonical_indices(cf: &ContinuedFraction) -> Indices {
    let ell = cf.period.len();
    let k_min = cf.pre.len();
    let k_work = 2.max(k_min + 1).max(ell).max(k_min + ell - 1);
    Indices { ell, k_min, k_work }
}

/// Convergents `p_n / q_n` of the fractional part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvergentTable {
    a: Vec<BigInt>,
    p: Vec<BigInt>,
    q: Vec<BigInt>,
}

impl ConvergentTable {
    /// Largest index available.
    pub fn depth(&self) -> usize {
        self.p.len() - 1
    }

    /// `a_n` for `1 <= n <= depth`.
    pub fn a(&self, n: usize) -> &BigInt {
        assert!(n >= 1);
        &self.a[n]
    }

    pub fn p(&self, n: usize) -> BigInt {
        self.p[n].clone()
    }

    pub fn q(&self, n: usize) -> BigInt {
        self.q[n].clone()
    }

    pub fn p_slice(&self) -> &[BigInt] {
        &self.p
    }

    pub fn q_slice(&self) -> &[BigInt] {
        &self.q
    }

    /// `p_n` with the extension `p_{-1} = 1`.
    pub fn p_ext(&self, n: isize) -> BigInt {
        if n == -1 {
            BigInt::one()
        } else {
            self.p[n as usize].clone()
        }
    }

    /// `q_n` with the extension `q_{-1} = 0`.
    pub fn q_ext(&self, n: isize) -> BigInt {
        if n == -1 {
            BigInt::zero()
        } else {
            self.q[n as usize].clone()
        }
    }

    pub fn require(&self, n: usize) -> Result<()> {
        if n > self.depth() {
            return Err(Error::TableTooShort {
                needed: n,
                have: self.depth(),
            });
        }
        Ok(())
    }
}

/// Convergent table through index `count` (at least 1).
pub fn convergents(cf: &ContinuedFraction, count: usize) -> ConvergentTable {
    let count = count.max(1);
    let mut a = vec![BigInt::zero()];
    let mut p = vec![BigInt::zero(), BigInt::one()];
    let mut q = vec![BigInt::one(), cf.quotient(1).clone()];
    a.push(cf.quotient(1).clone());
    for n in 2..=count {
        let an = cf.quotient(n).clone();
        p.push(&an * &p[n - 1] + &p[n - 2]);
        q.push(&an * &q[n - 1] + &q[n - 2]);
        a.push(an);
    }
    ConvergentTable { a, p, q }
}

/// `A^(m)_(n)` and `B^(m)_(n)` for `0 <= m <= l` and one residue system of `n`.
///
/// `A^(m)_j` is the continuant of `a_{j+1}, ..., a_{j+m}`; in the periodic
/// regime `j >= k` it depends only on `j mod l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ABTable {
    ell: usize,
    k: usize,
    // [m][j] with j the offset of the lower index above k
    a: Vec<Vec<BigInt>>,
    b: Vec<Vec<BigInt>>,
}

impl ABTable {
    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn k(&self) -> usize {
        self.k
    }

    fn slot(&self, n: isize) -> usize {
        (n - self.k as isize).rem_euclid(self.ell as isize) as usize
    }

    /// `A^(m)_(n)`, with `A^(-1) = 0`.
    pub fn a(&self, m: isize, n: isize) -> BigInt {
        if m == -1 {
            return BigInt::zero();
        }
        self.a[m as usize][self.slot(n)].clone()
    }

    /// `B^(m)_(n)`
    pub fn b(&self, m: isize, n: isize) -> BigInt {
        self.b[m as usize][self.slot(n)].clone()
    }

    /// Column `(A^(0)_(n), ..., A^(l-1)_(n))`.
    pub fn column(&self, n: isize) -> Vec<BigInt> {
        (0..self.ell as isize).map(|m| self.a(m, n)).collect()
    }

    /// `M(a_{k+1}) ... M(a_{k+l})` read off the table.
    pub fn period_matrix(&self) -> Mobius2x2 {
        let (l, k) = (self.ell as isize, self.k as isize);
        Mobius2x2 {
            m: [
                [self.a(l - 2, k + 1), self.a(l - 1, k + 1)],
                [self.a(l - 1, k), self.a(l, k)],
            ],
        }
    }

    /// Coefficients `(c2, c1, c0)` of the quadratic fixed by the periodic tail.
    pub(crate) fn tail_quadratic(&self) -> (BigInt, BigInt, BigInt) {
        let (l, k) = (self.ell as isize, self.k as isize);
        (
            self.a(l - 1, k),
            self.a(l, k) - self.a(l - 2, k + 1),
            -self.a(l - 1, k + 1),
        )
    }
}

fn build_ab(cf: &ContinuedFraction, k: usize) -> ABTable {
    let ell = cf.period.len();
    let mut a = vec![vec![BigInt::one(); ell]];
    let mut b = vec![vec![BigInt::zero(); ell]];
    for m in 1..=ell {
        let mut am = Vec::with_capacity(ell);
        let mut bm = Vec::with_capacity(ell);
        for j in 0..ell {
            let next = (j + 1) % ell;
            // A^(m)_(n) = B^(m-1)_(n+1) + a_{n+1} A^(m-1)_(n+1), B^(m)_(n) = A^(m-1)_(n+1)
            let quotient = cf.quotient(k + j + 1);
            am.push(&b[m - 1][next] + quotient * &a[m - 1][next]);
            bm.push(a[m - 1][next].clone());
        }
        a.push(am);
        b.push(bm);
    }
    ABTable { ell, k, a, b }
}

/// Continuant tables at pre-period `k >= 1`, `k >= len(pre)`.
pub fn ab_table(cf: &ContinuedFraction, k: usize) -> Result<ABTable> {
    if k == 0 || k < cf.pre.len() {
        return Err(Error::NotAPreperiod { k });
    }
    Ok(build_ab(cf, k))
}

/// A 2x2 integer matrix of determinant ±1, acting by Möbius transformation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mobius2x2 {
    m: [[BigInt; 2]; 2],
}

impl Mobius2x2 {
    pub fn new(m: [[BigInt; 2]; 2]) -> Result<Self> {
        let out = Self { m };
        if out.det().abs() != BigInt::one() {
            return Err(Error::VerificationFailed("matrix determinant is not +-1"));
        }
        Ok(out)
    }

    pub fn identity() -> Self {
        Self {
            m: [
                [BigInt::one(), BigInt::zero()],
                [BigInt::zero(), BigInt::one()],
            ],
        }
    }

    /// `[[0, 1], [1, a]]`
    pub fn quotient(a: &BigInt) -> Self {
        Self {
            m: [[BigInt::zero(), BigInt::one()], [BigInt::one(), a.clone()]],
        }
    }

    pub fn entries(&self) -> &[[BigInt; 2]; 2] {
        &self.m
    }

    pub fn det(&self) -> BigInt {
        &self.m[0][0] * &self.m[1][1] - &self.m[0][1] * &self.m[1][0]
    }

    pub fn trace(&self) -> BigInt {
        &self.m[0][0] + &self.m[1][1]
    }

    pub fn mul(&self, o: &Self) -> Self {
        let e = |i: usize, j: usize| &self.m[i][0] * &o.m[0][j] + &self.m[i][1] * &o.m[1][j];
        Self {
            m: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]],
        }
    }

    pub fn inverse(&self) -> Self {
        let d = self.det();
        let [[a, b], [c, e]] = &self.m;
        Self {
            m: [[e * &d, -b * &d], [-c * &d, a * &d]],
        }
    }

    pub fn apply(&self, x: &QuadraticSurd) -> Result<QuadraticSurd> {
        let [[a, b], [c, e]] = &self.m;
        x.mobius(a, b, c, e)
    }
}

impl fmt::Display for Mobius2x2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = &self.m;
        write!(f, "[[{a}, {b}], [{c}, {d}]]")
    }
}

/// Pre-period matrix, period matrix, and the conjugate fixing the number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferMatrices {
    pub m0: Mobius2x2,
    pub m1: Mobius2x2,
    pub mtheta: Mobius2x2,
}

pub fn transfer_matrices(cf: &ContinuedFraction, k: usize) -> Result<TransferMatrices> {
    if k == 0 || k < cf.pre.len() {
        return Err(Error::NotAPreperiod { k });
    }
    let product = |from: usize, to: usize| {
        (from..=to).fold(Mobius2x2::identity(), |acc, n| {
            acc.mul(&Mobius2x2::quotient(cf.quotient(n)))
        })
    };
    let m0 = product(1, k);
    let m1 = product(k + 1, k + cf.period.len());
    let mtheta = m0.mul(&m1).mul(&m0.inverse());
    Ok(TransferMatrices { m0, m1, mtheta })
}

/// `[b_1, ..., b_m] = 1/(b_1 + 1/(b_2 + ...))` with the last level `b_m + tail`.
/// `[0; b_1, ..., b_r + tail]` as an unreduced fraction `(num, den)`.
fn finite_cf<'a>(word: impl DoubleEndedIterator<Item = &'a BigInt>, tail: (BigInt, BigInt)) -> (BigInt, BigInt) {
    word.rev().fold(tail, |(n, d), b| (d.clone(), b * d + n))
}

fn same_ratio(x: &(BigInt, BigInt), y: &(BigInt, BigInt)) -> bool {
    &x.0 * &y.1 == &y.0 * &x.1
}

/// Continuants of actual (not periodic) quotients, `[m + 1][j] = A^(m)_j`,
/// computed as matrix-product corners, for `j + m <= depth`.
fn actual_continuants(table: &ConvergentTable, max_m: usize) -> Vec<Vec<BigInt>> {
    let depth = table.depth();
    let mut out = vec![vec![BigInt::zero(); depth + 1]];
    out.push(vec![BigInt::one(); depth + 1]);
    for _ in 1..=max_m {
        out.push(Vec::new());
    }
    for j in 0..depth {
        let mut prod = Mobius2x2::identity();
        for m in 1..=max_m.min(depth - j) {
            prod = prod.mul(&Mobius2x2::quotient(table.a(j + m)));
            let row = &mut out[m + 1];
            if row.len() <= j {
                row.resize(j + 1, BigInt::zero());
            }
            row[j] = prod.m[1][1].clone();
        }
    }
    out
}

/// Exact evaluation of the classical convergent identities over every index
/// the table supports up to `n_max`.
///
/// The trace identity is checked for `m >= 1`, `n - m >= 1`, using
/// `p_{-1} = 1`, `q_{-1} = 0`.
pub fn identity_report(table: &ConvergentTable, ab: &ABTable, n_max: usize) -> CheckReport {
    let n_max = n_max.min(table.depth());
    let mut report = CheckReport::new();
    let sgn = |e: usize| if e % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    let (p, q) = (|n: isize| table.p_ext(n), |n: isize| table.q_ext(n));

    let mut fam = report.family("lagrange", format!("1 <= n <= {n_max}"));
    for n in 1..=n_max as isize {
        let lhs = p(n - 1) * q(n) - p(n) * q(n - 1);
        fam.check(lhs == sgn(n as usize), || format!("n = {n}: got {lhs}"));
    }

    let mut fam = report.family("reversed-word p", format!("2 <= n <= {n_max}"));
    for n in 2..=n_max {
        let lhs = (table.p(n - 1), table.p(n));
        let rhs = finite_cf((2..=n).rev().map(|i| table.a(i)), (BigInt::zero(), BigInt::one()));
        fam.check(same_ratio(&lhs, &rhs), || format!("n = {n}: {}/{} vs {}/{}", lhs.0, lhs.1, rhs.0, rhs.1));
    }

    let mut fam = report.family("reversed-word q", format!("1 <= n <= {n_max}"));
    for n in 1..=n_max {
        let lhs = (table.q(n - 1), table.q(n));
        let rhs = finite_cf((1..=n).rev().map(|i| table.a(i)), (BigInt::zero(), BigInt::one()));
        fam.check(same_ratio(&lhs, &rhs), || format!("n = {n}: {}/{} vs {}/{}", lhs.0, lhs.1, rhs.0, rhs.1));
    }

    // z = num/den
    let points = [(1, 1), (1, 2), (2, 1)].map(|(a, b)| (BigInt::from(a), BigInt::from(b)));
    let mut fam = report.family("mobius form", format!("1 <= n <= {n_max}, z in {{1, 1/2, 2}}"));
    for n in 1..=n_max {
        for z in &points {
            let lhs = (
                table.p(n - 1) * &z.0 + table.p(n) * &z.1,
                table.q(n - 1) * &z.0 + table.q(n) * &z.1,
            );
            // [0; a_1, ..., a_n + z]
            let rhs = finite_cf((1..=n).map(|i| table.a(i)), z.clone());
            fam.check(same_ratio(&lhs, &rhs), || format!("n = {n}, z = {}/{}", z.0, z.1));
        }
    }

    let max_m = n_max;
    let cont = actual_continuants(table, max_m + 1);
    // A^(m)_j for m >= -1; None if outside the table
    let big_a = |m: isize, j: isize| -> Option<BigInt> {
        if j < 0 {
            return None;
        }
        cont.get((m + 1) as usize)?.get(j as usize).cloned()
    };
    let a_q = |n: isize| table.a(n as usize).clone();

    let mut fam = report.family("A-splitting", format!("m >= 1, 0 <= n - m, n <= {n_max}"));
    for n in 1..=n_max as isize {
        for m in 1..=n {
            let j = n - m;
            let (Some(lhs), Some(a1), Some(a2), Some(b1), Some(b2)) = (
                big_a(m, j),
                big_a(m - 1, j + 1),
                big_a(m - 2, j + 2),
                big_a(m - 1, j),
                big_a(m - 2, j),
            ) else {
                continue;
            };
            let left_split = a_q(j + 1) * a1 + a2;
            let right_split = a_q(n) * b1 + b2;
            fam.check(lhs == left_split && lhs == right_split, || {
                format!("m = {m}, n = {n}")
            });
        }
    }

    for (name, r) in [("pA-splitting", &p as &dyn Fn(isize) -> BigInt), ("qA-splitting", &q)] {
        let mut fam = report.family(name, format!("m >= 0, n >= 0, indices <= {n_max}"));
        for n in 0..=n_max as isize {
            for m in 0..=(n_max as isize - n - 1) {
                let (Some(x), Some(y)) = (big_a(m + 1, n), big_a(m, n + 1)) else {
                    continue;
                };
                let lhs = r(n + m + 1);
                let rhs = r(n) * x + r(n - 1) * y;
                fam.check(lhs == rhs, || format!("forward m = {m}, n = {n}"));
            }
            for m in 0..=n {
                let (Some(x), Some(y)) = (big_a(m - 1, n - m), big_a(m, n - m)) else {
                    continue;
                };
                let lhs = sgn((m + 1) as usize) * r(n - m - 1);
                let rhs = r(n) * x - r(n - 1) * y;
                fam.check(lhs == rhs, || format!("backward m = {m}, n = {n}"));
            }
        }
    }

    let mut fam = report.family("trace", format!("m >= 1, n - m >= 1, n <= {n_max}"));
    for n in 2..=n_max as isize {
        for m in 1..n {
            let (Some(x), Some(y)) = (big_a(m - 1, n - m), big_a(m + 1, n - m - 1)) else {
                continue;
            };
            let i = n - m;
            let rhs = sgn((n - m - 1) as usize)
                * (q(i - 1) * p(n - 1) - p(i - 1) * q(n - 1) - q(i - 2) * p(n) + p(i - 2) * q(n));
            fam.check(x.clone() + &y == rhs, || format!("m = {m}, n = {n}"));
        }
    }

    let (ell, k) = (ab.ell() as isize, ab.k() as isize);
    let mut fam = report.family("periodic table", format!("k = {k}, 0 <= m <= {ell}"));
    for j in k..k + 2 * ell {
        for m in 0..=ell {
            let Some(actual) = big_a(m, j) else { continue };
            let periodic = ab.a(m, j);
            fam.check(actual == periodic, || format!("A^({m})_{j}: {actual} vs {periodic}"));
            if m >= 1 {
                fam.check(ab.b(m, j) == ab.a(m - 1, j + 1), || format!("B^({m})_({j})"));
            }
        }
    }
    if ab.k() + ab.ell() <= table.depth() {
        let direct = (ab.k() + 1..=ab.k() + ab.ell()).fold(Mobius2x2::identity(), |acc, n| {
            acc.mul(&Mobius2x2::quotient(table.a(n)))
        });
        let mut fam = report.family("period matrix", format!("k = {k}"));
        fam.check(direct == ab.period_matrix(), || format!("{direct} vs {}", ab.period_matrix()));
        fam.check(direct.det() == sgn(ab.ell()), || String::from("det is not (-1)^l"));
    }
    report
}
