//! One full pipeline run on a single input and its renderings.

use std::fmt::Write as _;

use cfgen_core::cfrac::{canonical_indices, convergents, ContinuedFraction, Indices};
use cfgen_core::exact::{IntPoly, RationalFunctionZ};
use cfgen_core::genfun::{assemble, GenFunPair};
use cfgen_core::levy::{levy_closed, levy_empirical, levy_from_denominator, PrecisionReal};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::input::NumberInput;
use crate::CliError;

#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub max_steps: usize,
    pub prec_bits: u32,
    /// index of the convergent used for the empirical Lévy estimate
    pub empirical_n: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Self {
            max_steps: 100_000,
            prec_bits: cfgen_core::levy::DEFAULT_PREC_BITS,
            empirical_n: 1000,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Analysis {
    pub input: NumberInput,
    pub cf: ContinuedFraction,
    pub indices: Indices,
    pub genfun: GenFunPair,
    pub closed: PrecisionReal,
    pub from_v: PrecisionReal,
    pub empirical: PrecisionReal,
    pub settings: Settings,
}

pub fn analyze(input: &NumberInput, settings: Settings) -> Result<Analysis, CliError> {
    let cf = input.continued_fraction(settings.max_steps)?;
    let genfun = assemble(&cf)?;
    Ok(Analysis {
        input: input.clone(),
        indices: canonical_indices(&cf),
        closed: levy_closed(&cf, settings.prec_bits)?,
        from_v: levy_from_denominator(&genfun, settings.prec_bits)?,
        empirical: levy_empirical(&cf, settings.empirical_n, settings.prec_bits)?,
        cf,
        genfun,
        settings,
    })
}

/// Decimal digits fully covered by `bits` of binary precision.
pub fn digits_for(bits: u32) -> usize {
    (((bits as f64) * std::f64::consts::LOG10_2).floor() as usize).saturating_sub(1)
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn poly_json(p: &IntPoly) -> Value {
    json!({ "coeffs": strings(p.coeffs()), "text": p.to_string() })
}

fn ratfunc_json(r: &RationalFunctionZ) -> Value {
    json!({ "num": poly_json(r.num()), "den": poly_json(r.den()) })
}

fn real_json(x: &PrecisionReal, digits: usize) -> Value {
    let err = x.error_bound().to_f64().unwrap_or(f64::INFINITY);
    json!({ "value": x.to_decimal(digits), "error_bound": format!("{err:e}") })
}

impl Analysis {
    pub fn to_json(&self) -> Value {
        let digits = digits_for(self.settings.prec_bits);
        let v = &self.genfun.v;
        json!({
            "input": self.input.to_string(),
            "cf": {
                "a0": self.cf.a0().to_string(),
                "pre": strings(self.cf.pre()),
                "period": strings(self.cf.period()),
            },
            "indices": { "l": self.indices.ell, "k_min": self.indices.k_min, "k_work": self.indices.k_work },
            "delta": self.genfun.delta.to_string(),
            "v": [v.coeff(0).to_string(), v.coeff(1).to_string(), v.coeff(2).to_string()],
            "F": ratfunc_json(&self.genfun.f),
            "G": ratfunc_json(&self.genfun.g),
            "levy": {
                "closed": real_json(&self.closed, digits),
                "from_v": real_json(&self.from_v, digits),
                "empirical": real_json(&self.empirical, digits),
                "empirical_n": self.settings.empirical_n,
                "prec_bits": self.settings.prec_bits,
            },
        })
    }

    pub fn expand_text(&self, terms: usize) -> String {
        let mut out = String::new();
        let i = &self.indices;
        writeln!(out, "input    {}", self.input).unwrap();
        writeln!(out, "cf       {}", self.cf).unwrap();
        writeln!(out, "indices  l = {}, k_min = {}, k_work = {}", i.ell, i.k_min, i.k_work).unwrap();
        let table = convergents(&self.cf, terms);
        for n in 1..=terms {
            writeln!(out, "p_{n}/q_{n} = {}/{}", table.p(n), table.q(n)).unwrap();
        }
        out
    }

    pub fn genfun_text(&self, terms: usize) -> String {
        let g = &self.genfun;
        let mut out = String::new();
        writeln!(out, "cf       {}", self.cf).unwrap();
        writeln!(out, "k = {}, l = {}, delta = {}", g.k, g.ell, g.delta).unwrap();
        writeln!(out, "v(z)  = {}", g.v_quad()).unwrap();
        writeln!(out, "F(z)  = {}", g.f).unwrap();
        writeln!(out, "G(z)  = {}", g.g).unwrap();
        if terms > 0 {
            for (name, r) in [("p", &g.f), ("q", &g.g)] {
                let coeffs = r.integer_series(terms).unwrap_or_default();
                writeln!(out, "{name}: {}", strings(&coeffs).join(", ")).unwrap();
            }
        }
        out
    }

    pub fn levy_text(&self) -> String {
        let digits = digits_for(self.settings.prec_bits);
        let mut out = String::new();
        writeln!(out, "cf         {}", self.cf).unwrap();
        writeln!(out, "closed     {}", self.closed.to_decimal(digits)).unwrap();
        writeln!(out, "from v     {}", self.from_v.to_decimal(digits)).unwrap();
        writeln!(
            out,
            "empirical  {}  (n = {})",
            self.empirical.to_decimal(digits),
            self.settings.empirical_n
        )
        .unwrap();
        out
    }
}
