//! The `verify` and `matdemo` check suites.

use std::fmt::Write as _;

use cfgen_core::cfrac::{ab_table, canonical_indices, convergents, identity_report, ContinuedFraction};
use cfgen_core::exact::IntPoly;
use cfgen_core::genfun::{assemble, certify_positivity, char_and_minimal_polys, delta_matches_trace};
use cfgen_core::levy::{levy_closed, levy_from_denominator};
use cfgen_core::structmat::{
    assemble_n, brute_det, column_determinant, cramer_numerators, cf_system, v_closed, verify_cf_embedding,
    MonomialSystem,
};
use cfgen_core::CheckReport;
use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::CliError;

const LEVY_TOLERANCE_EXP: u32 = 12;
const RANDOM_SYSTEMS: usize = 10;

/// Random system with entries in `-3..=3`; zero band coefficients are allowed
/// so the enumeration fallback gets exercised.
pub fn random_system<R: Rng>(rng: &mut R, ell: usize) -> MonomialSystem {
    let mut draw = || BigInt::from(rng.gen_range(-3i64..=3));
    let columns = (0..ell).map(|_| (0..ell).map(|_| draw()).collect()).collect();
    let gamma = (0..ell).map(|_| [draw(), draw(), draw()]).collect();
    MonomialSystem::new(columns, gamma).expect("ell >= 3")
}

/// Determinant and Cramer checks on one system.
pub fn system_report(sys: &MonomialSystem, label: &str) -> Result<CheckReport, CliError> {
    let l = sys.ell();
    let mut report = CheckReport::new();
    let v = v_closed(sys)?;
    let want = v.compose_power(l).scale(&sys.base_det());
    let n = assemble_n(sys);
    if l <= 8 {
        let got = brute_det(&n)?;
        let fail = (got != want).then(|| format!("{got} vs {want}"));
        report.record("det N = det C v(z^l)", label.to_string(), 1, fail);
    }
    if !sys.base_is_singular() {
        let mut fail = None;
        for t in 0..l {
            if let Err(e) = cramer_numerators(sys, t) {
                fail.get_or_insert(format!("t = {t}: {e}"));
            }
        }
        report.record("N u = v(z^l) C_t", label.to_string(), l, fail);
    }
    Ok(report)
}

/// Identities, generating functions, Lévy routes, positivity and the matrix
/// embedding on one continued fraction, plus seeded random matrix oracles.
pub fn verify_suite(cf: &ContinuedFraction, terms: usize, prec_bits: u32, seed: u64) -> Result<CheckReport, CliError> {
    let idx = canonical_indices(cf);
    let gf = assemble(cf)?;
    let depth = terms + gf.k + 2 * idx.ell + 4;
    let table = convergents(cf, depth);
    let mut report = identity_report(&table, &ab_table(cf, idx.k_work)?, terms);

    for (name, r, seq) in [("series of F", &gf.f, table.p_slice()), ("series of G", &gf.g, table.q_slice())] {
        let got = r.integer_series(terms).unwrap_or_default();
        let fail = (0..terms)
            .find(|&n| got.get(n) != Some(&seq[n]))
            .map(|n| format!("coefficient {n}"));
        report.record(name, format!("0 <= n < {terms}"), terms, fail);
    }

    let (chi, omega) = char_and_minimal_polys(cf, gf.k)?;
    let v = gf.v_quad();
    let fail = (v != chi.reciprocal()).then(|| format!("v = {v}, chi = {chi}"));
    report.record("v is the reversed characteristic polynomial", format!("k = {}", gf.k), 1, fail);
    let discs = [v.discriminant(), chi.discriminant(), omega.discriminant()];
    let fail = (discs[0] != discs[1] || discs[1] != discs[2]).then(|| format!("{discs:?}"));
    report.record("discriminants agree", format!("k = {}", gf.k), 1, fail);
    let fail = (!delta_matches_trace(cf, &gf)?).then(|| "sign-adjusted delta differs from the trace".to_string());
    report.record("delta and trace", format!("k = {}", gf.k), 1, fail);

    let cert = certify_positivity(&gf);
    let fail = (!cert.holds()).then(|| format!("{cert:?}"));
    report.record("positivity", "(0, 1)".into(), 1, fail);

    let closed = levy_closed(cf, prec_bits)?;
    let from_v = levy_from_denominator(&gf, prec_bits)?;
    let tol = cfgen_core::exact::Rational::new(1.into(), BigInt::from(10u32).pow(LEVY_TOLERANCE_EXP));
    let fail = (!closed.certainly_within(&from_v, &tol)).then(|| format!("{closed:.20} vs {from_v:.20}"));
    report.record("levy closed = from v", format!("1e-{LEVY_TOLERANCE_EXP}"), 1, fail);

    if idx.ell >= 3 {
        let fail = (cf.is_minimal() && column_determinant(cf)?.is_zero()).then(|| "singular".to_string());
        report.record("column matrix nonsingular", format!("l = {}", idx.ell), 1, fail);
        report.extend(verify_cf_embedding(cf, terms)?);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..RANDOM_SYSTEMS {
        let ell = rng.gen_range(3..=5);
        let sys = random_system(&mut rng, ell);
        report.extend(system_report(&sys, &format!("seed {seed}, system {i}, l = {ell}"))?);
    }
    Ok(report)
}

fn matrix_text(sys: &MonomialSystem) -> String {
    let n = assemble_n(sys);
    let mut out = String::new();
    for i in 0..n.size() {
        let row: Vec<String> = (0..n.size()).map(|j| n.entry(i, j).to_string()).collect();
        writeln!(out, "  [{}]", row.join(", ")).unwrap();
    }
    out
}

/// Demonstration on the system of a continued fraction, or on a seeded random
/// system of size `ell` when no input is given.
pub fn matdemo(cf: Option<&ContinuedFraction>, ell: usize, seed: u64) -> Result<(String, CheckReport), CliError> {
    let sys = match cf {
        Some(cf) => cf_system(cf)?,
        None => {
            if ell < 3 {
                return Err(CliError::Usage("--ell must be at least 3".into()));
            }
            random_system(&mut ChaCha8Rng::seed_from_u64(seed), ell)
        }
    };
    let mut out = String::new();
    writeln!(out, "N(z) =").unwrap();
    out.push_str(&matrix_text(&sys));
    let v = v_closed(&sys)?;
    writeln!(out, "det C = {}", sys.base_det()).unwrap();
    writeln!(out, "v(z)  = {v}").unwrap();
    writeln!(out, "det N = {}", v.compose_power(sys.ell()).scale(&sys.base_det())).unwrap();
    if !sys.base_is_singular() {
        for t in 0..sys.ell() {
            let u = cramer_numerators(&sys, t)?;
            let shown: Vec<String> = u.iter().map(IntPoly::to_string).collect();
            writeln!(out, "u (t = {t}) = [{}]", shown.join(", ")).unwrap();
        }
    }
    let report = system_report(&sys, &format!("l = {}", sys.ell()))?;
    Ok((out, report))
}
