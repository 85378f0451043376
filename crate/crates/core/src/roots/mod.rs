//! Complex roots of integer polynomials.
//!
//! Numeric roots come from an Aberth–Ehrlich iteration in binary fixed point
//! (at least 128 fractional bits, doubled on failure up to 1024). Whether a
//! polynomial is real-rooted is never read off the numeric roots: it is
//! decided by an exact Sturm count.

pub mod aberth;
pub mod fixed;
pub mod sturm;

use std::io::{self, Write};

use num_traits::Signed;

use crate::error::{Error, RootError};
use crate::exact_poly::IntPoly;
use crate::gp_graph::GpParams;
use crate::transfer::independence_polynomial;
use fixed::{Complex, FixedCtx};

pub use sturm::{count_nonnegative_roots, count_real_roots, SturmChain};

/// Bound on the scaled residual of every reported root.
pub const RESIDUAL_BOUND: f64 = 1e-10;
/// Conjugate partners must agree to this (relative to `max(1, |r|)`).
pub const PAIRING_TOL: f64 = 1e-10;

pub const DEFAULT_PRECISION_BITS: u32 = 128;
pub const MAX_PRECISION_BITS: u32 = 1024;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootConfig {
    pub precision_bits: u32,
    pub max_precision_bits: u32,
    pub max_iterations: usize,
}

impl Default for RootConfig {
    fn default() -> Self {
        RootConfig {
            precision_bits: DEFAULT_PRECISION_BITS,
            max_precision_bits: MAX_PRECISION_BITS,
            max_iterations: 2000,
        }
    }
}

impl RootConfig {
    pub fn with_precision(bits: u32) -> Self {
        RootConfig {
            precision_bits: bits,
            ..Self::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Root {
    pub re: f64,
    pub im: f64,
    /// `|p(r)| / max(1, |lead| * max(1, |r|)^deg)` at working precision.
    pub residual: f64,
}

#[derive(Clone, Debug)]
pub struct RootReport {
    pub degree: usize,
    /// Sorted by real part, then imaginary part.
    pub roots: Vec<Root>,
    pub max_residual: f64,
    /// Real roots with multiplicity, by Sturm sequences.
    pub exact_real_count: usize,
    pub is_real_rooted: bool,
    /// Precision the roots were finally accepted at.
    pub precision_bits: u32,
    precise: Vec<Complex>,
}

impl RootReport {
    /// The accepted roots at working precision, in the order of `roots`.
    /// Each value is `raw / 2^precision_bits`.
    pub fn precise_roots(&self) -> &[Complex] {
        &self.precise
    }

    /// Roots with `|im| < tol`.
    pub fn numeric_real_count(&self, tol: f64) -> usize {
        self.roots.iter().filter(|r| r.im.abs() < tol).count()
    }

    /// Smallest distance between two reported roots (infinite below two).
    pub fn min_separation(&self) -> f64 {
        let mut best = f64::INFINITY;
        for (i, a) in self.roots.iter().enumerate() {
            for b in &self.roots[i + 1..] {
                best = best.min((a.re - b.re).hypot(a.im - b.im));
            }
        }
        best
    }
}

fn scaled_residual(
    ctx: &FixedCtx,
    coeffs: &[num_bigint::BigInt],
    lead: f64,
    deg: usize,
    z: &Complex,
) -> f64 {
    let v = aberth::eval(ctx, coeffs, z);
    let r = ctx.abs_f64(z);
    let scale = (lead * r.max(1.0).powi(deg as i32)).max(1.0);
    ctx.abs_f64(&v) / scale
}

pub fn find_roots(p: &IntPoly) -> Result<RootReport, RootError> {
    find_roots_with(p, &RootConfig::default())
}

pub fn find_roots_with(p: &IntPoly, config: &RootConfig) -> Result<RootReport, RootError> {
    let degree = match p.degree() {
        Some(d) if d >= 1 => d,
        other => return Err(RootError::Degenerate(other)),
    };
    let lead = fixed::scaled_to_f64(&p.leading().unwrap().abs(), 0);
    let mut bits = config.precision_bits.max(64);
    let mut ctx = FixedCtx::new(bits);
    let mut start = aberth::initial_guesses(&ctx, p);
    loop {
        // stop at half precision; the polishing sweeps converge cubically
        // to the noise floor and the residual bound is the real acceptance test
        let outcome = aberth::solve(&ctx, p, start, config.max_iterations, bits / 2, 2);
        let coeffs: Vec<_> = p.coeffs().iter().map(|c| ctx.from_int(c)).collect();
        let residuals: Vec<f64> = outcome
            .roots
            .iter()
            .map(|z| scaled_residual(&ctx, &coeffs, lead, degree, z))
            .collect();
        let max_residual = residuals.iter().copied().fold(0.0, f64::max);
        let accepted = outcome.unconverged.is_empty() && max_residual <= RESIDUAL_BOUND;
        if accepted {
            return assemble(p, &ctx, outcome.roots, residuals);
        }
        if bits >= config.max_precision_bits {
            let mut failed = outcome.unconverged.clone();
            failed.extend(
                residuals
                    .iter()
                    .enumerate()
                    .filter(|(_, &r)| r > RESIDUAL_BOUND)
                    .map(|(i, _)| i),
            );
            failed.sort_unstable();
            failed.dedup();
            return Err(RootError::NoConvergence {
                precision_bits: bits,
                failed,
                max_residual,
                partial: outcome
                    .roots
                    .iter()
                    .map(|z| (ctx.to_f64(&z.re), ctx.to_f64(&z.im)))
                    .collect(),
            });
        }
        let next = FixedCtx::new((bits * 2).min(config.max_precision_bits));
        start = outcome
            .roots
            .iter()
            .map(|z| ctx.rescale(z, &next))
            .collect();
        ctx = next;
        bits = ctx.frac_bits();
    }
}

fn assemble(
    p: &IntPoly,
    ctx: &FixedCtx,
    precise: Vec<Complex>,
    residuals: Vec<f64>,
) -> Result<RootReport, RootError> {
    let mut entries: Vec<(Root, Complex)> = precise
        .into_iter()
        .zip(residuals)
        .map(|(z, residual)| {
            let root = Root {
                re: ctx.to_f64(&z.re),
                im: ctx.to_f64(&z.im),
                residual,
            };
            (root, z)
        })
        .collect();
    check_conjugate_pairs(entries.iter().map(|(r, _)| *r).collect())?;
    entries.sort_by(|a, b| a.0.re.total_cmp(&b.0.re).then(a.0.im.total_cmp(&b.0.im)));
    let exact_real_count = count_real_roots(p);
    let degree = entries.len();
    let max_residual = entries.iter().map(|e| e.0.residual).fold(0.0, f64::max);
    let (roots, precise) = entries.into_iter().unzip();
    Ok(RootReport {
        degree,
        roots,
        max_residual,
        exact_real_count,
        is_real_rooted: exact_real_count == degree,
        precision_bits: ctx.frac_bits(),
        precise,
    })
}

/// Greedy pairing after sorting by `(re, |im|)`: a root is self-conjugate
/// when `|im|` is within tolerance, otherwise its neighbour must mirror it.
fn check_conjugate_pairs(mut roots: Vec<Root>) -> Result<(), RootError> {
    roots.sort_by(|a, b| {
        a.re.total_cmp(&b.re)
            .then(a.im.abs().total_cmp(&b.im.abs()))
            .then(a.im.total_cmp(&b.im))
    });
    let tol = |r: &Root| PAIRING_TOL * r.re.hypot(r.im).max(1.0);
    let mut i = 0;
    while i < roots.len() {
        let r = roots[i];
        if r.im.abs() <= tol(&r) {
            i += 1;
            continue;
        }
        let partner = roots
            .get(i + 1)
            .filter(|s| (s.re - r.re).abs() <= tol(&r) && (s.im + r.im).abs() <= tol(&r));
        if partner.is_none() {
            return Err(RootError::UnpairedConjugate {
                index: i,
                re: r.re,
                im: r.im,
            });
        }
        i += 2;
    }
    Ok(())
}

/// Computes `Ind(GP(n,k), x)` and decides real-rootedness exactly.
pub fn classify_parity_instance(
    params: GpParams,
    config: &RootConfig,
) -> Result<(bool, RootReport), Error> {
    let p = independence_polynomial(params)?;
    let report = find_roots_with(&p, config)?;
    Ok((report.is_real_rooted, report))
}

pub const ROOT_CSV_HEADER: &str = "n,k,root_index,re,im,residual";

/// Floats with 17 significant digits.
pub fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_roots_csv<W: Write>(out: &mut W, params: GpParams, roots: &[Root]) -> io::Result<()> {
    writeln!(out, "{ROOT_CSV_HEADER}")?;
    for (i, r) in roots.iter().enumerate() {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            params.n(),
            params.k(),
            i,
            fmt_float(r.re),
            fmt_float(r.im),
            fmt_float(r.residual)
        )?;
    }
    Ok(())
}
