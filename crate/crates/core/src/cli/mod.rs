//! The `ipgp` command line.
//!
//! Exit codes: 0 success, 1 invalid parameters or usage, 2 I/O failure,
//! 3 verification mismatch, 4 instance above the oracle cap, 5 root finding
//! did not converge, 10 the sweep found a counterexample.

mod args;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::Parser;

pub use args::{Cli, Command, GlobalOpts, Instance, NRange};

use crate::analysis::{root_geometry, sweep_conjecture_with, sweep_json, write_sweep_csv};
use crate::cache::{Cache, CACHE_DIR_ENV};
use crate::error::{Error, RootError};
use crate::exact_poly::IntPoly;
use crate::gp_graph::{build_gp, GpParams};
use crate::oracle::{census, census_to_poly};
use crate::plot::roots_svg;
use crate::roots::{find_roots_with, write_roots_csv, Root, RootConfig};
use crate::transfer::{independence_polynomial, PolynomialRecord};

pub mod exit {
    pub const OK: i32 = 0;
    pub const INVALID: i32 = 1;
    pub const IO: i32 = 2;
    pub const MISMATCH: i32 = 3;
    pub const ORACLE_CAP: i32 = 4;
    pub const NO_CONVERGENCE: i32 = 5;
    pub const COUNTEREXAMPLE: i32 = 10;
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    exit::OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    exit::INVALID
                }
            };
        }
    };
    let cache_dir = std::env::var_os(CACHE_DIR_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| cli.global.cache_dir.clone());
    let ctx = Context {
        cache: Cache::new(cache_dir),
        roots: RootConfig::with_precision(cli.global.precision_bits),
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.global.threads)
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start worker pool: {e}");
            return exit::IO;
        }
    };
    pool.install(|| match &cli.command {
        Command::Compute { inst, out: path } => cmd_compute(&ctx, inst, path.as_deref(), out, err),
        Command::Verify { inst } => cmd_verify(inst, out, err),
        Command::Roots { inst, csv, svg } => {
            cmd_roots(&ctx, inst, csv.as_deref(), svg.as_deref(), out, err)
        }
        Command::Sweep { inst, out: dir } => cmd_sweep(&ctx, inst, dir, out, err),
    })
}

pub struct Context {
    cache: Cache,
    roots: RootConfig,
}

impl Context {
    fn polynomial(&self, params: GpParams) -> Result<IntPoly, Error> {
        self.cache
            .get_or_compute(params, |p| independence_polynomial(p).map_err(Error::from))
    }
}

fn single_instance(inst: &Instance, err: &mut dyn Write) -> Result<GpParams, i32> {
    let (Some(n), [k]) = (inst.n.single(), inst.k.as_slice()) else {
        let _ = writeln!(
            err,
            "error: this command takes a single --n and a single --k"
        );
        return Err(exit::INVALID);
    };
    GpParams::new(n, *k).map_err(|e| {
        let _ = writeln!(err, "error: {e}");
        exit::INVALID
    })
}

fn write_file(path: &Path, contents: &[u8], err: &mut dyn Write) -> Result<(), i32> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        if let Err(e) = fs::create_dir_all(parent) {
            let _ = writeln!(err, "error: cannot create {}: {e}", parent.display());
            return Err(exit::IO);
        }
    }
    fs::write(path, contents).map_err(|e| {
        let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
        exit::IO
    })
}

fn report_error(e: &Error, err: &mut dyn Write) -> i32 {
    let _ = writeln!(err, "error: {e}");
    match e {
        Error::Params(_) | Error::Transfer(_) | Error::Poly(_) => exit::INVALID,
        Error::Oracle(_) => exit::ORACLE_CAP,
        Error::Roots(_) => exit::NO_CONVERGENCE,
    }
}

pub fn cmd_compute(
    ctx: &Context,
    inst: &Instance,
    path: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let params = match single_instance(inst, err) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let poly = match ctx.polynomial(params) {
        Ok(p) => p,
        Err(e) => return report_error(&e, err),
    };
    let record = PolynomialRecord::new(params, &poly);
    let json = serde_json::to_string(&record).expect("record serializes") + "\n";
    let summary = format!(
        "{params}: degree {}, {} coefficients",
        record.alpha,
        record.coeffs.len()
    );
    match path {
        Some(p) => {
            if let Err(code) = write_file(p, json.as_bytes(), err) {
                return code;
            }
            let _ = writeln!(out, "{summary}");
        }
        None => {
            let _ = out.write_all(json.as_bytes());
            let _ = writeln!(err, "{summary}");
        }
    }
    exit::OK
}

pub fn cmd_verify(inst: &Instance, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let params = match single_instance(inst, err) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let oracle = match census(&build_gp(params)) {
        Ok(c) => census_to_poly(&c),
        Err(e) => return report_error(&Error::from(e), err),
    };
    let transfer = match independence_polynomial(params) {
        Ok(p) => p,
        Err(e) => return report_error(&Error::from(e), err),
    };
    if oracle == transfer {
        let _ = writeln!(out, "MATCH {params}: {transfer}");
        return exit::OK;
    }
    let _ = writeln!(out, "MISMATCH {params}");
    let len = oracle.coeffs().len().max(transfer.coeffs().len());
    for i in 0..len {
        let (a, b) = (transfer.coeff(i), oracle.coeff(i));
        if a != b {
            let _ = writeln!(out, "  x^{i}: transfer={a} oracle={b}");
        }
    }
    exit::MISMATCH
}

pub fn cmd_roots(
    ctx: &Context,
    inst: &Instance,
    csv: Option<&Path>,
    svg: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let params = match single_instance(inst, err) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let poly = match ctx.polynomial(params) {
        Ok(p) => p,
        Err(e) => return report_error(&e, err),
    };
    let (roots, summary, code) = match find_roots_with(&poly, &ctx.roots) {
        Ok(report) => {
            let geom = root_geometry(&report);
            let mut summary = format!(
                "{params}: degree {}, exact real roots {}, real-rooted {}, max residual {:.3e}",
                report.degree, report.exact_real_count, report.is_real_rooted, report.max_residual
            );
            if let Some(c) = geom.center_re {
                summary += &format!(", non-real centre Re {c:.6}");
            }
            (report.roots, summary, exit::OK)
        }
        Err(RootError::NoConvergence {
            partial,
            max_residual,
            failed,
            ..
        }) => {
            let roots: Vec<Root> = partial
                .into_iter()
                .map(|(re, im)| Root {
                    re,
                    im,
                    residual: f64::NAN,
                })
                .collect();
            let summary = format!(
                "warning: {params}: root finding did not converge (roots {failed:?}, residual {max_residual:e}); partial output written"
            );
            (roots, summary, exit::NO_CONVERGENCE)
        }
        Err(e) => return report_error(&Error::from(e), err),
    };
    let mut buf = Vec::new();
    write_roots_csv(&mut buf, params, &roots).expect("in-memory write");
    match csv {
        Some(p) => {
            if let Err(code) = write_file(p, &buf, err) {
                return code;
            }
        }
        None => {
            let _ = out.write_all(&buf);
        }
    }
    if let Some(p) = svg {
        if let Err(code) = write_file(p, roots_svg(params, &roots).as_bytes(), err) {
            return code;
        }
    }
    if code == exit::OK && csv.is_some() {
        let _ = writeln!(out, "{summary}");
    } else {
        let _ = writeln!(err, "{summary}");
    }
    code
}

pub fn cmd_sweep(
    ctx: &Context,
    inst: &Instance,
    dir: &Path,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let sweep = sweep_conjecture_with((inst.n.lo, inst.n.hi), &inst.k, &ctx.roots, |p| {
        ctx.polynomial(p)
    });
    for s in &sweep.skipped {
        let _ = writeln!(err, "notice: skipping (n={}, k={}): {}", s.n, s.k, s.reason);
    }
    let rows = sweep.rows();
    let mut csv = Vec::new();
    write_sweep_csv(&mut csv, &rows).expect("in-memory write");
    if let Err(code) = write_file(&dir.join("sweep.csv"), &csv, err) {
        return code;
    }
    if let Err(code) = write_file(
        &dir.join("sweep.json"),
        (sweep_json(&rows) + "\n").as_bytes(),
        err,
    ) {
        return code;
    }
    let _ = writeln!(
        out,
        "{:>4} {:>3} {:>6} {:>5} {:>11} {:>6} {:>7}",
        "n", "k", "degree", "real", "real-rooted", "parity", "agrees"
    );
    for r in &rows {
        match &r.error {
            None => {
                let _ = writeln!(
                    out,
                    "{:>4} {:>3} {:>6} {:>5} {:>11} {:>6} {:>7}",
                    r.n,
                    r.k,
                    r.degree,
                    r.exact_real_count,
                    r.is_real_rooted,
                    if r.parity_prediction { "even" } else { "odd" },
                    if r.agrees { "yes" } else { "NO" }
                );
            }
            Some(e) => {
                let _ = writeln!(out, "{:>4} {:>3}  error: {e}", r.n, r.k);
            }
        }
    }
    let counter = sweep.counterexamples();
    let failed = rows.iter().filter(|r| r.error.is_some()).count();
    let _ = writeln!(
        out,
        "{} rows, {} disagreeing, {} failed",
        rows.len(),
        counter.len(),
        failed
    );
    let _ = writeln!(out, "{}", sweep.verdict());
    if counter.is_empty() {
        exit::OK
    } else {
        exit::COUNTEREXAMPLE
    }
}
