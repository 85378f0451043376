//! Aberth–Ehrlich simultaneous iteration in binary fixed point.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use super::fixed::{Complex, FixedCtx};
use crate::exact_poly::IntPoly;

/// Angle offset of the starting circle, keeps guesses off the real axis.
const START_PHASE: f64 = 0.4;

#[derive(Clone, Debug)]
pub struct AberthOutcome {
    pub roots: Vec<Complex>,
    /// Indices whose last correction was still above tolerance.
    pub unconverged: Vec<usize>,
    pub iterations: usize,
}

/// `p(z)` and `p'(z)` by a joint Horner pass.
pub fn eval_with_derivative(ctx: &FixedCtx, coeffs: &[BigInt], z: &Complex) -> (Complex, Complex) {
    let mut val = Complex::zero();
    let mut der = Complex::zero();
    for c in coeffs.iter().rev() {
        der = ctx.cadd(&ctx.cmul(&der, z), &val);
        val = ctx.cmul(&val, z);
        val.re += c;
    }
    (val, der)
}

pub fn eval(ctx: &FixedCtx, coeffs: &[BigInt], z: &Complex) -> Complex {
    coeffs.iter().rev().fold(Complex::zero(), |acc, c| {
        let mut next = ctx.cmul(&acc, z);
        next.re += c;
        next
    })
}

/// Points on the circle of radius `|a_0 / a_d|^(1/d)`.
pub fn initial_guesses(ctx: &FixedCtx, p: &IntPoly) -> Vec<Complex> {
    let d = p.degree().expect("nonzero polynomial");
    let a0 = super::fixed::scaled_to_f64(&p.coeff(0).abs(), 0);
    let ad = super::fixed::scaled_to_f64(&p.leading().unwrap().abs(), 0);
    let radius = if a0 == 0.0 {
        1.0
    } else {
        (a0 / ad).powf(1.0 / d as f64)
    };
    (0..d)
        .map(|j| {
            let theta = std::f64::consts::TAU * j as f64 / d as f64 + START_PHASE;
            ctx.complex_from_f64(radius * theta.cos(), radius * theta.sin())
        })
        .collect()
}

/// Runs the iteration from `start` until every correction is below
/// `2^-(frac_bits - slack_bits)`, then performs `polish` further sweeps.
pub fn solve(
    ctx: &FixedCtx,
    p: &IntPoly,
    start: Vec<Complex>,
    max_iterations: usize,
    slack_bits: u32,
    polish: usize,
) -> AberthOutcome {
    let coeffs: Vec<BigInt> = p.coeffs().iter().map(|c| ctx.from_int(c)).collect();
    // componentwise bound on a correction, in raw units
    let tol = BigInt::from(1) << slack_bits;
    let mut z = start;
    let mut extra = 0;
    let mut iterations = 0;
    let mut unconverged: Vec<usize> = (0..z.len()).collect();
    while iterations < max_iterations {
        iterations += 1;
        let corrections = sweep(ctx, &coeffs, &z);
        unconverged.clear();
        for (i, c) in corrections.iter().enumerate() {
            if c.re.abs() > tol || c.im.abs() > tol {
                unconverged.push(i);
            }
        }
        for (zi, c) in z.iter_mut().zip(&corrections) {
            *zi = ctx.csub(zi, c);
        }
        if unconverged.is_empty() {
            if extra >= polish {
                break;
            }
            extra += 1;
        }
    }
    AberthOutcome {
        roots: z,
        unconverged,
        iterations,
    }
}

/// One Jacobi sweep: corrections `w / (1 - w * sum 1/(z_i - z_j))` with
/// `w = p(z_i)/p'(z_i)`.
fn sweep(ctx: &FixedCtx, coeffs: &[BigInt], z: &[Complex]) -> Vec<Complex> {
    let one = Complex {
        re: ctx.one(),
        im: BigInt::zero(),
    };
    (0..z.len())
        .into_par_iter()
        .map(|i| {
            let (val, der) = eval_with_derivative(ctx, coeffs, &z[i]);
            if val.is_zero() {
                return Complex::zero();
            }
            let Some(w) = ctx.cdiv(&val, &der) else {
                // stationary point: nudge off it
                return Complex {
                    re: BigInt::zero(),
                    im: ctx.one() >> 4,
                };
            };
            let mut repulsion = Complex::zero();
            for (j, zj) in z.iter().enumerate() {
                if j == i {
                    continue;
                }
                if let Some(inv) = ctx.cdiv(&one, &ctx.csub(&z[i], zj)) {
                    repulsion = ctx.cadd(&repulsion, &inv);
                }
            }
            let denom = ctx.csub(&one, &ctx.cmul(&w, &repulsion));
            ctx.cdiv(&w, &denom).unwrap_or(w)
        })
        .collect()
}
