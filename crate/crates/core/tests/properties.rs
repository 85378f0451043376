use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use ipgp::exact_poly::mat_pow_trace;
use ipgp::roots::find_roots;
use ipgp::transfer::{build_transfer_matrix, PolynomialRecord, TransferMatrix};
use ipgp::{independence_polynomial, GpParams, IntPoly};

#[test]
fn gp_30_4_json_round_trip() {
    let params = GpParams::new(30, 4).unwrap();
    let poly = independence_polynomial(params).unwrap();
    let expected = [
        "1",
        "60",
        "1680",
        "29180",
        "352530",
        "3148572",
        "21571180",
        "116108730",
        "498907635",
        "1729647570",
        "4871009538",
        "11185214250",
        "20969642830",
        "32066479110",
        "39874391790",
        "40109150624",
        "32388667905",
        "20780155620",
        "10449135220",
        "4045251300",
        "1177912836",
        "250102800",
        "37102440",
        "3607980",
        "205310",
        "5100",
    ];
    assert_eq!(poly.to_decimal_strings(), expected);

    let json = serde_json::to_string(&PolynomialRecord::new(params, &poly)).unwrap();
    let back: PolynomialRecord = serde_json::from_str(&json).unwrap();
    assert_eq!(back.poly().unwrap(), poly);
    assert_eq!(back.alpha, 25);

    let bare = serde_json::to_string(&poly).unwrap();
    assert_eq!(serde_json::from_str::<IntPoly>(&bare).unwrap(), poly);
}

#[test]
fn trace_is_invariant_under_state_order() {
    for k in 1..=3usize {
        let base = build_transfer_matrix(k).unwrap();
        let mut order: Vec<u32> = (0..1u32 << (k + 1)).collect();
        let mut rng = StdRng::seed_from_u64(k as u64);
        for seed in 0..5 {
            order.shuffle(&mut rng);
            let permuted = TransferMatrix::build_with_order(k, &order).unwrap();
            for n in (2 * k + 1)..=(2 * k + 9) {
                assert_eq!(
                    mat_pow_trace(base.matrix(), n as u64).unwrap(),
                    mat_pow_trace(permuted.matrix(), n as u64).unwrap(),
                    "k={k} n={n} seed={seed}"
                );
            }
        }
    }
}

/// `p(z)` for `z = (re + i im) / 2^bits`, as the exact Gaussian integer
/// `2^(bits*d) p(z)`.
fn exact_scaled_eval(p: &IntPoly, re: &BigInt, im: &BigInt, bits: u32) -> (BigInt, BigInt) {
    let d = p.degree().unwrap();
    let (mut acc_re, mut acc_im) = (BigInt::zero(), BigInt::zero());
    let (mut pow_re, mut pow_im) = (BigInt::one(), BigInt::zero());
    for (i, c) in p.coeffs().iter().enumerate() {
        let shift = bits as usize * (d - i);
        acc_re += (c * &pow_re) << shift;
        acc_im += (c * &pow_im) << shift;
        let next_re = &pow_re * re - &pow_im * im;
        let next_im = &pow_re * im + &pow_im * re;
        pow_re = next_re;
        pow_im = next_im;
    }
    (acc_re, acc_im)
}

#[test]
fn residuals_hold_under_independent_exact_evaluation() {
    for (n, k) in [(9, 2), (20, 4), (25, 1), (26, 3)] {
        let poly = independence_polynomial(GpParams::new(n, k).unwrap()).unwrap();
        let report = find_roots(&poly).unwrap();
        let bits = report.precision_bits;
        let d = report.degree;
        let lead = big_log2(poly.leading().unwrap()).exp2();
        for (root, z) in report.roots.iter().zip(report.precise_roots()) {
            let (vr, vi) = exact_scaled_eval(&poly, &z.re, &z.im, bits);
            // |p(z)| = |v| / 2^(bits*d); compute in log space to stay in range
            let log2_v = big_log2(&vr).max(big_log2(&vi)) + 0.5;
            let log2_p = log2_v - (bits as f64) * d as f64;
            let modulus = root.re.hypot(root.im).max(1.0);
            let log2_scale = (lead * modulus.powi(d as i32)).max(1.0).log2();
            let residual = (log2_p - log2_scale).exp2();
            assert!(residual <= 1e-10, "GP({n},{k}) root {root:?}: {residual:e}");
        }
    }
}

/// `log2 |v|`.
fn big_log2(v: &BigInt) -> f64 {
    if v.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = v.bits();
    let drop = bits.saturating_sub(60);
    let top: BigInt = v.abs() >> drop;
    let top: f64 = top.to_string().parse().unwrap();
    top.log2() + drop as f64
}
