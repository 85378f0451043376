//! Coefficient diagnostics, root geometry and the parity sweep.

use std::io::{self, Write};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::exact_poly::IntPoly;
use crate::gp_graph::GpParams;
use crate::roots::{count_nonnegative_roots, find_roots_with, fmt_float, RootConfig, RootReport};

/// `|im|` below which a numeric root counts as real for geometry statistics.
pub const NONREAL_IM_TOL: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SequenceDiagnostics {
    pub is_log_concave: bool,
    pub is_unimodal: bool,
    /// Newton's inequalities with binomial normalization.
    pub newton_ok: bool,
    /// First interior index failing the Newton inequality.
    pub first_violation_index: Option<usize>,
}

/// Exact checks on the coefficient sequence `a_0, ..., a_d`.
///
/// Newton: `a_s^2 * s * (d - s) >= a_{s-1} a_{s+1} (s + 1)(d - s + 1)` for
/// `0 < s < d`. Since the factor on the right exceeds the one on the left,
/// this implies log-concavity.
pub fn diagnose_sequence(p: &IntPoly) -> SequenceDiagnostics {
    let a = p.coeffs();
    let d = a.len().saturating_sub(1);
    let mut log_concave = true;
    let mut first_newton = None;
    for s in 1..d {
        let sq = &a[s] * &a[s];
        let outer = &a[s - 1] * &a[s + 1];
        if sq < outer {
            log_concave = false;
        }
        let lhs = &sq * BigInt::from(s * (d - s));
        let rhs = &outer * BigInt::from((s + 1) * (d - s + 1));
        if lhs < rhs && first_newton.is_none() {
            first_newton = Some(s);
        }
    }
    SequenceDiagnostics {
        is_log_concave: log_concave,
        is_unimodal: is_unimodal(a),
        newton_ok: first_newton.is_none(),
        first_violation_index: first_newton,
    }
}

fn is_unimodal(a: &[BigInt]) -> bool {
    let mut i = 1;
    while i < a.len() && a[i] >= a[i - 1] {
        i += 1;
    }
    while i < a.len() && a[i] <= a[i - 1] {
        i += 1;
    }
    i >= a.len()
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RootGeometry {
    pub max_im: f64,
    pub min_re: f64,
    pub max_re: f64,
    /// Mean real part of the non-real roots, absent when all are real.
    pub center_re: Option<f64>,
}

pub fn root_geometry(report: &RootReport) -> RootGeometry {
    assert!(!report.roots.is_empty(), "geometry of an empty root set");
    let mut g = RootGeometry {
        max_im: 0.0,
        min_re: f64::INFINITY,
        max_re: f64::NEG_INFINITY,
        center_re: None,
    };
    let (mut sum, mut count) = (0.0, 0usize);
    for r in &report.roots {
        g.max_im = g.max_im.max(r.im.abs());
        g.min_re = g.min_re.min(r.re);
        g.max_re = g.max_re.max(r.re);
        if r.im.abs() >= NONREAL_IM_TOL {
            sum += r.re;
            count += 1;
        }
    }
    if count > 0 {
        g.center_re = Some(sum / count as f64);
    }
    g
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConjectureRow {
    pub n: usize,
    pub k: usize,
    pub degree: usize,
    pub exact_real_count: usize,
    pub is_real_rooted: bool,
    pub parity_prediction: bool,
    pub agrees: bool,
    pub max_im: f64,
    pub min_re: f64,
    pub max_re: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl ConjectureRow {
    fn failed(params: GpParams, err: &Error) -> Self {
        ConjectureRow {
            n: params.n(),
            k: params.k(),
            degree: 0,
            exact_real_count: 0,
            is_real_rooted: false,
            parity_prediction: params.k().is_multiple_of(2),
            agrees: false,
            max_im: f64::NAN,
            min_re: f64::NAN,
            max_re: f64::NAN,
            error: Some(err.to_string()),
        }
    }

    /// A computed row whose verdict contradicts the parity prediction.
    pub fn is_counterexample(&self) -> bool {
        self.error.is_none() && !self.agrees
    }
}

/// Everything computed for one sweep instance.
#[derive(Clone, Debug)]
pub struct InstanceAnalysis {
    pub params: GpParams,
    pub poly: IntPoly,
    pub report: RootReport,
    pub diagnostics: SequenceDiagnostics,
    /// Distinct real roots in `[0, inf)`, exact.
    pub nonnegative_roots: usize,
    pub row: ConjectureRow,
}

pub fn analyze_instance(
    params: GpParams,
    poly: IntPoly,
    config: &RootConfig,
) -> Result<InstanceAnalysis, Error> {
    let report = find_roots_with(&poly, config)?;
    let geom = root_geometry(&report);
    let parity_prediction = params.k().is_multiple_of(2);
    let row = ConjectureRow {
        n: params.n(),
        k: params.k(),
        degree: report.degree,
        exact_real_count: report.exact_real_count,
        is_real_rooted: report.is_real_rooted,
        parity_prediction,
        agrees: report.is_real_rooted == parity_prediction,
        max_im: geom.max_im,
        min_re: geom.min_re,
        max_re: geom.max_re,
        error: None,
    };
    Ok(InstanceAnalysis {
        params,
        diagnostics: diagnose_sequence(&poly),
        nonnegative_roots: count_nonnegative_roots(&poly),
        poly,
        report,
        row,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Skipped {
    pub n: i64,
    pub k: i64,
    pub reason: String,
}

#[derive(Clone, Debug)]
pub enum SweepEntry {
    Done(Box<InstanceAnalysis>),
    Failed { row: ConjectureRow },
}

impl SweepEntry {
    pub fn row(&self) -> &ConjectureRow {
        match self {
            SweepEntry::Done(a) => &a.row,
            SweepEntry::Failed { row } => row,
        }
    }

    pub fn analysis(&self) -> Option<&InstanceAnalysis> {
        match self {
            SweepEntry::Done(a) => Some(a),
            SweepEntry::Failed { .. } => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Sweep {
    pub entries: Vec<SweepEntry>,
    pub skipped: Vec<Skipped>,
}

impl Sweep {
    pub fn rows(&self) -> Vec<ConjectureRow> {
        self.entries.iter().map(|e| e.row().clone()).collect()
    }

    pub fn counterexamples(&self) -> Vec<&ConjectureRow> {
        self.entries
            .iter()
            .map(SweepEntry::row)
            .filter(|r| r.is_counterexample())
            .collect()
    }

    pub fn verdict(&self) -> String {
        match self.counterexamples().first() {
            None => "PARITY CONJECTURE: consistent".to_string(),
            Some(r) => format!("COUNTEREXAMPLE FOUND at ({},{})", r.n, r.k),
        }
    }
}

/// Pairs `(n, k)` in lexicographic order, split into those in the
/// conjecture's domain (`k < n/2`, `n >= 2k+1`) and the rest.
pub fn sweep_pairs(n_range: (i64, i64), k_set: &[i64]) -> (Vec<GpParams>, Vec<Skipped>) {
    let mut ks: Vec<i64> = k_set.to_vec();
    ks.sort_unstable();
    ks.dedup();
    let mut pairs = Vec::new();
    let mut skipped = Vec::new();
    for n in n_range.0..=n_range.1 {
        for &k in &ks {
            match GpParams::new(n, k) {
                Ok(p) if p.in_conjecture_domain() => pairs.push(p),
                Ok(_) => skipped.push(Skipped {
                    n,
                    k,
                    reason: "n < 2k+1".to_string(),
                }),
                Err(e) => skipped.push(Skipped {
                    n,
                    k,
                    reason: e.to_string(),
                }),
            }
        }
    }
    (pairs, skipped)
}

/// Runs every pair concurrently, obtaining each polynomial from `compute`.
/// Entries come back in `(n, k)` order whatever the scheduling.
pub fn sweep_conjecture_with<F>(
    n_range: (i64, i64),
    k_set: &[i64],
    config: &RootConfig,
    compute: F,
) -> Sweep
where
    F: Fn(GpParams) -> Result<IntPoly, Error> + Sync,
{
    let (pairs, skipped) = sweep_pairs(n_range, k_set);
    let entries = pairs
        .par_iter()
        .map(
            |&params| match compute(params).and_then(|p| analyze_instance(params, p, config)) {
                Ok(a) => SweepEntry::Done(Box::new(a)),
                Err(e) => SweepEntry::Failed {
                    row: ConjectureRow::failed(params, &e),
                },
            },
        )
        .collect();
    Sweep { entries, skipped }
}

pub fn sweep_conjecture(n_range: (i64, i64), k_set: &[i64], config: &RootConfig) -> Sweep {
    sweep_conjecture_with(n_range, k_set, config, |p| {
        crate::transfer::independence_polynomial(p).map_err(Error::from)
    })
}

pub const SWEEP_CSV_HEADER: &str =
    "n,k,degree,real_count,real_rooted,parity_prediction,agrees,max_im,min_re,max_re";

pub fn write_sweep_csv<W: Write>(out: &mut W, rows: &[ConjectureRow]) -> io::Result<()> {
    writeln!(out, "{SWEEP_CSV_HEADER}")?;
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            r.n,
            r.k,
            r.degree,
            r.exact_real_count,
            r.is_real_rooted,
            r.parity_prediction,
            r.agrees,
            fmt_float(r.max_im),
            fmt_float(r.min_re),
            fmt_float(r.max_re)
        )?;
    }
    Ok(())
}

#[derive(Serialize)]
struct SweepJson<'a> {
    schema: u32,
    rows: &'a [ConjectureRow],
}

/// `{"schema": 1, "rows": [...]}`; NaN fields of failed rows become null.
pub fn sweep_json(rows: &[ConjectureRow]) -> String {
    serde_json::to_string_pretty(&SweepJson { schema: 1, rows }).expect("rows serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::find_roots;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn sequence_examples() {
        let d = diagnose_sequence(&p(&[1, 2, 1]));
        assert!(d.is_log_concave && d.is_unimodal && d.newton_ok);
        let d = diagnose_sequence(&p(&[1, 1, 2]));
        assert!(!d.is_log_concave);
        assert!(d.is_unimodal);
        assert!(!d.newton_ok);
        assert_eq!(d.first_violation_index, Some(1));
        let d = diagnose_sequence(&p(&[1, 10, 30, 30, 5]));
        assert!(d.is_log_concave && d.is_unimodal && d.newton_ok);
        assert!(!diagnose_sequence(&p(&[1, 3, 1, 3])).is_unimodal);
    }

    #[test]
    fn newton_is_strictly_stronger() {
        // 1 + 2x + 1.5x^2 would be tight; 4 >= 3 log-concave but Newton
        // needs 4*1*1 >= 3*2*2
        let d = diagnose_sequence(&p(&[1, 2, 3]));
        assert!(d.is_log_concave);
        assert!(!d.newton_ok);
    }

    #[test]
    fn geometry_examples() {
        let rep = find_roots(&p(&[2, 3, 1])).unwrap();
        let g = root_geometry(&rep);
        assert_eq!(
            g.max_im,
            0.0f64.max(rep.roots[0].im.abs()).max(rep.roots[1].im.abs())
        );
        assert!(g.max_im < 1e-20);
        assert!((g.min_re + 2.0).abs() < 1e-15 && (g.max_re + 1.0).abs() < 1e-15);
        assert_eq!(g.center_re, None);
        // (x + 0.5)^2 + 0.09 scaled: 100x^2 + 100x + 34
        let rep = find_roots(&p(&[34, 100, 100])).unwrap();
        let g = root_geometry(&rep);
        assert!((g.center_re.unwrap() + 0.5).abs() < 1e-14);
        assert!((g.max_im - 0.3).abs() < 1e-14);
    }

    #[test]
    fn pair_filtering() {
        let (pairs, skipped) = sweep_pairs((5, 12), &[1, 2, 3, 4]);
        assert!(pairs.iter().all(|p| p.n() > 2 * p.k()));
        assert!(pairs
            .windows(2)
            .all(|w| (w[0].n(), w[0].k()) < (w[1].n(), w[1].k())));
        assert_eq!(pairs.len() + skipped.len(), 8 * 4);
        assert!(skipped.iter().any(|s| (s.n, s.k) == (6, 3)));
        let (pairs, _) = sweep_pairs((20, 30), &[1, 2, 3, 4]);
        assert_eq!(pairs.len(), 44);
    }

    #[test]
    fn petersen_sweep() {
        let sweep = sweep_conjecture((5, 5), &[2], &RootConfig::default());
        let rows = sweep.rows();
        assert_eq!(rows.len(), 1);
        assert_eq!((rows[0].n, rows[0].k, rows[0].degree), (5, 2, 4));
        assert!(rows[0].is_real_rooted && rows[0].agrees);
        assert_eq!(sweep.verdict(), "PARITY CONJECTURE: consistent");
    }

    #[test]
    fn gp20_1_has_complex_roots() {
        let sweep = sweep_conjecture((20, 20), &[1], &RootConfig::default());
        let row = &sweep.rows()[0];
        assert!(!row.is_real_rooted);
        assert!(row.max_im > 1.0);
        assert!(row.agrees);
    }

    #[test]
    fn failed_rows_are_recorded() {
        let sweep = sweep_conjecture_with((5, 6), &[2], &RootConfig::default(), |p| {
            if p.n() == 6 {
                Err(Error::Params(crate::error::ParamError::CycleTooShort {
                    n: 0,
                }))
            } else {
                crate::transfer::independence_polynomial(p).map_err(Error::from)
            }
        });
        let rows = sweep.rows();
        assert_eq!(rows.len(), 2);
        assert!(rows[1].error.is_some());
        assert!(!rows[1].is_counterexample());
        assert!(sweep_json(&rows).contains("\"error\""));
    }
}
