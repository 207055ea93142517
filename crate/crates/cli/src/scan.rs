//! Batch evaluation over `sqrt(d)`.

use cfgen_core::cfrac::{canonical_indices, transfer_matrices};
use cfgen_core::exact::is_square;
use cfgen_core::genfun::assemble;
use cfgen_core::levy::{levy_closed, levy_empirical, PrecisionReal};
use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::input::sqrt_of;
use crate::CliError;

pub const CSV_HEADER: &str = "d,l,k_min,delta,trace,levy_closed,levy_empirical,gap";

const GAP_DIGITS: u32 = 15;
const LEVY_DIGITS: usize = 20;

#[derive(Clone, Debug)]
pub struct ScanRecord {
    pub d: u64,
    pub ell: usize,
    pub k_min: usize,
    pub delta: BigInt,
    pub trace: BigInt,
    pub closed: PrecisionReal,
    pub empirical: PrecisionReal,
    pub empirical_n: usize,
}

impl ScanRecord {
    /// Lower bound on `|empirical - closed|` after removing both error radii,
    /// truncated to 15 decimals.
    pub fn gap(&self) -> String {
        let (lo, _) = self.closed.distance_bounds(&self.empirical);
        let scale = BigInt::from(10u32).pow(GAP_DIGITS);
        // lo >= 0, so truncation is the floor
        let t = lo.numer() * &scale / lo.denom();
        let int = &t / &scale;
        let frac = (&t % &scale).abs();
        format!("{int}.{frac:0>width$}", width = GAP_DIGITS as usize)
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.d,
            self.ell,
            self.k_min,
            self.delta,
            self.trace,
            self.closed.to_decimal(LEVY_DIGITS),
            self.empirical.to_decimal(LEVY_DIGITS),
            self.gap()
        )
    }

    pub fn to_json(&self) -> Value {
        json!({
            "d": self.d,
            "l": self.ell,
            "k_min": self.k_min,
            "delta": self.delta.to_string(),
            "trace": self.trace.to_string(),
            "levy_closed": self.closed.to_decimal(LEVY_DIGITS),
            "levy_empirical": self.empirical.to_decimal(LEVY_DIGITS),
            "empirical_n": self.empirical_n,
            "gap": self.gap(),
        })
    }
}

fn record(d: u64, n_emp: usize, prec_bits: u32) -> Result<ScanRecord, CliError> {
    let cf = sqrt_of(d).continued_fraction(1_000_000)?;
    let idx = canonical_indices(&cf);
    let gf = assemble(&cf)?;
    let trace = transfer_matrices(&cf, idx.k_work)?.m1.trace();
    Ok(ScanRecord {
        d,
        ell: idx.ell,
        k_min: idx.k_min,
        delta: gf.delta,
        trace,
        closed: levy_closed(&cf, prec_bits)?,
        empirical: levy_empirical(&cf, n_emp, prec_bits)?,
        empirical_n: n_emp,
    })
}

/// One record per non-square `d` in `dmin..=dmax`, in increasing `d`.
pub fn scan(dmin: u64, dmax: u64, n_emp: usize, prec_bits: u32) -> Result<Vec<ScanRecord>, CliError> {
    if dmin > dmax {
        return Err(CliError::Usage(format!("empty range {dmin}..={dmax}")));
    }
    let mut out: Vec<ScanRecord> = (dmin..=dmax)
        .filter(|&d| !is_square(&BigInt::from(d)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|d| record(d, n_emp, prec_bits))
        .collect::<Result<_, _>>()?;
    out.sort_by_key(|r| r.d);
    Ok(out)
}

pub fn to_csv(records: &[ScanRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&r.csv_row());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(scan(2, 3, 100, 64).unwrap().len(), 2);
        let rs = scan(2, 20, 500, 64).unwrap();
        assert_eq!(rs.len(), 16);
        assert!(rs.windows(2).all(|w| w[0].d < w[1].d));
        assert!(scan(5, 4, 10, 64).is_err());
    }

    #[test]
    fn d5_matches_closed_form() {
        let r = &scan(5, 5, 200, 128).unwrap()[0];
        let cf = sqrt_of(5).continued_fraction(100).unwrap();
        assert_eq!(r.closed, levy_closed(&cf, 128).unwrap());
        assert!(to_csv(std::slice::from_ref(r)).starts_with(CSV_HEADER));
        assert!(r.gap().starts_with("0.0"));
    }
}
