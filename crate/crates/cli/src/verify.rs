//! The agreement report: every quantity with more than one source (exact
//! engine, numeric engine, simulation, published value) in one table.

use std::f64::consts::PI;
use std::io::Write;

use diskcp::geometry::{barany_bipointed_triangle, buchta_bipointed_triangle, valtr_square, valtr_triangle};
use diskcp::montecarlo::{
    disk_hull_size_frequencies, estimate, model_equivalence_test, Estimate, EventSpec, DEFAULT_WORKERS,
};
use diskcp::quadrature::LnmTable;
use diskcp::recursion::{LTable, PiRatio};
use diskcp::trigring::Rational;
use diskcp::Error;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::reference;

/// Exact versus published values.
const EXACT_TOL: f64 = 1e-12;
/// Numeric versus exact or published values.
const NUMERIC_TOL: f64 = 1e-6;
/// Simulation band, in standard errors.
const SIGMAS: f64 = 4.0;

#[derive(Clone, Debug, Serialize)]
pub struct ReportRow {
    pub label: String,
    pub exact: Option<String>,
    pub numeric: Option<f64>,
    pub mc_mean: Option<f64>,
    pub mc_stderr: Option<f64>,
    #[serde(rename = "paper")]
    pub published: Option<f64>,
    pub status: Status,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

struct Row {
    label: String,
    exact: Option<(String, f64)>,
    numeric: Option<f64>,
    mc: Option<Estimate>,
    published: Option<f64>,
    error: Option<Error>,
}

impl Row {
    fn new(label: impl Into<String>) -> Self {
        Row { label: label.into(), exact: None, numeric: None, mc: None, published: None, error: None }
    }

    fn exact_ratio(mut self, r: Result<PiRatio, Error>) -> Self {
        match r {
            Ok(r) => self.exact = Some((r.to_string(), r.to_f64())),
            Err(e) => self.error = Some(e),
        }
        self
    }

    fn exact_rational(mut self, r: Result<Rational, Error>) -> Self {
        match r {
            Ok(r) => {
                let v = ratio_f64(&r);
                self.exact = Some((r.to_string(), v));
            }
            Err(e) => self.error = Some(e),
        }
        self
    }

    fn numeric(mut self, v: Result<f64, Error>) -> Self {
        match v {
            Ok(v) => self.numeric = Some(v),
            Err(e) => self.error = Some(e),
        }
        self
    }

    fn mc(mut self, e: Result<Estimate, Error>) -> Self {
        match e {
            Ok(e) => self.mc = Some(e),
            Err(e) => self.error = Some(e),
        }
        self
    }

    fn published(mut self, v: Option<f64>) -> Self {
        self.published = v;
        self
    }

    fn finish(self) -> ReportRow {
        let exact = self.exact.as_ref().map(|e| e.1);
        let mut ok = self.error.is_none();
        if let (Some(x), Some(p)) = (exact, self.published) {
            ok &= (x - p).abs() <= EXACT_TOL;
        }
        if let (Some(v), Some(r)) = (self.numeric, exact.or(self.published)) {
            ok &= (v - r).abs() <= NUMERIC_TOL;
        }
        if let (Some(e), Some(r)) = (&self.mc, exact.or(self.published).or(self.numeric)) {
            ok &= e.agrees_with(r, SIGMAS);
        }
        ReportRow {
            label: self.label,
            exact: match (self.exact, self.error) {
                (_, Some(e)) => Some(e.to_string()),
                (e, None) => e.map(|e| e.0),
            },
            numeric: self.numeric,
            mc_mean: self.mc.map(|e| e.mean),
            mc_stderr: self.mc.map(|e| e.stderr),
            published: self.published,
            status: if ok { Status::Pass } else { Status::Fail },
        }
    }
}

fn ratio_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Builds the report for sizes up to `max_n` with `trials` simulated trials
/// per event. Seeds are `seed`, `seed + 1`, … in row order.
pub fn build(max_n: usize, trials: u64, seed: u64) -> Vec<ReportRow> {
    let exact = LTable::shared();
    let numeric = LnmTable::new();
    let mut next_seed = seed;
    let mut seed = || {
        next_seed = next_seed.wrapping_add(1);
        next_seed - 1
    };
    let mut rows = Vec::new();

    for n in 2..=max_n {
        // one histogram serves the convex-position row and the hull-size rows
        let freq = disk_hull_size_frequencies(n, trials, seed(), DEFAULT_WORKERS);
        rows.push(
            Row::new(format!("P_D^{n}"))
                .exact_ratio(exact.p_disk_exact(n))
                .numeric(numeric.p_disk_nm(n, n))
                .mc(freq.as_ref().map(|f| f[n]).map_err(Clone::clone))
                .published(reference::disk(n).map(|r| r.to_f64()))
                .finish(),
        );
        for m in (3..n).rev() {
            rows.push(
                Row::new(format!("P_D^{{{n},{m}}}"))
                    .numeric(numeric.p_disk_nm(n, m))
                    .mc(freq.as_ref().map(|f| f[m]).map_err(Clone::clone))
                    .published(reference::disk_hull_size(n, m).map(|r| r.to_f64()))
                    .finish(),
            );
        }
    }

    for n in 2..=max_n {
        rows.push(
            Row::new(format!("B_{n}(pi)"))
                .exact_ratio(exact.b_at_pi(n))
                .numeric(exact.eval_b(n, PI))
                .mc(estimate(&EventSpec::BsegCp(n, PI), trials, seed(), DEFAULT_WORKERS))
                .published(reference::half_disk(n).map(|r| r.to_f64()))
                .finish(),
        );
    }

    for n in 1..=max_n {
        let want = reference::zero_limit(n);
        rows.push(
            Row::new(format!("B_{n}(0+)"))
                .exact_rational(exact.limit_zero(n))
                .published(Some(ratio_f64(&want)))
                .finish(),
        );
    }

    let r = model_equivalence_test(4, trials, seed());
    rows.push(
        Row::new("P_D^4 with one point on the circle")
            .exact_ratio(exact.p_disk_exact(4))
            .mc(r.map(|r| r.boundary))
            .finish(),
    );

    let baselines: [(&str, EventSpec, Rational, Rational); 4] = [
        ("square P^4", EventSpec::SquareCp(4), valtr_square(4), ratio(25, 36)),
        ("triangle P^4", EventSpec::TriangleCp(4), valtr_triangle(4), ratio(2, 3)),
        ("bi-pointed triangle P^3", EventSpec::TriangleBipointed(3), barany_bipointed_triangle(3), ratio(1, 18)),
        ("bi-pointed triangle P^{4,2}", EventSpec::TriangleBipointedM(4, 2), buchta_bipointed_triangle(4, 2), ratio(29, 60)),
    ];
    for (label, spec, value, printed) in baselines {
        rows.push(
            Row::new(label)
                .exact_rational(Ok(value))
                .mc(estimate(&spec, trials, seed(), DEFAULT_WORKERS))
                .published(Some(ratio_f64(&printed)))
                .finish(),
        );
    }
    rows
}

fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn cell(v: Option<f64>) -> String {
    v.map(|v| format!("{v:.10}")).unwrap_or_default()
}

pub fn print_table(rows: &[ReportRow], out: &mut impl Write) -> std::io::Result<()> {
    writeln!(
        out,
        "{:<36} {:>14} {:>14} {:>14} {:>14}  {:<6} exact",
        "label", "numeric", "mc_mean", "mc_stderr", "paper", "status"
    )?;
    for r in rows {
        writeln!(
            out,
            "{:<36} {:>14} {:>14} {:>14} {:>14}  {:<6} {}",
            r.label,
            cell(r.numeric),
            cell(r.mc_mean),
            cell(r.mc_stderr),
            cell(r.published),
            r.status,
            r.exact.as_deref().unwrap_or("")
        )?;
    }
    Ok(())
}

pub fn write_csv(rows: &[ReportRow], out: impl Write) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["label", "exact", "numeric", "mc_mean", "mc_stderr", "paper", "status"])?;
    for r in rows {
        w.write_record([
            r.label.clone(),
            r.exact.clone().unwrap_or_default(),
            cell(r.numeric),
            cell(r.mc_mean),
            cell(r.mc_stderr),
            cell(r.published),
            r.status.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
