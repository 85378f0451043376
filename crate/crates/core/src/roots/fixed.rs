//! Binary fixed-point reals and complexes on top of `BigInt`.
//!
//! A value `r` at precision `f` stands for `r / 2^f`. The integer part is
//! unbounded, so large intermediate magnitudes in polynomial evaluation
//! never overflow; only the absolute resolution `2^-f` is fixed.

use num_bigint::{BigInt, Sign};
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    pub re: BigInt,
    pub im: BigInt,
}

impl Complex {
    pub fn zero() -> Self {
        Complex {
            re: BigInt::zero(),
            im: BigInt::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Complex {
            re: self.re.clone(),
            im: -&self.im,
        }
    }
}

/// Arithmetic at a fixed number of fractional bits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FixedCtx {
    frac_bits: u32,
}

impl FixedCtx {
    pub fn new(frac_bits: u32) -> Self {
        FixedCtx { frac_bits }
    }

    pub fn frac_bits(&self) -> u32 {
        self.frac_bits
    }

    pub fn one(&self) -> BigInt {
        BigInt::from(1) << self.frac_bits
    }

    pub fn from_int(&self, v: &BigInt) -> BigInt {
        v << self.frac_bits
    }

    /// Exact conversion of a finite `f64`.
    pub fn from_f64(&self, x: f64) -> BigInt {
        assert!(x.is_finite());
        if x == 0.0 {
            return BigInt::zero();
        }
        let bits = x.to_bits();
        let negative = bits >> 63 == 1;
        let exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (mantissa, exp) = if exp == 0 {
            (frac, -1074)
        } else {
            (frac | 1 << 52, exp - 1075)
        };
        let shift = exp + self.frac_bits as i64;
        let m = BigInt::from(mantissa);
        let v = if shift >= 0 {
            m << shift as u64
        } else {
            m >> (-shift) as u64
        };
        if negative {
            -v
        } else {
            v
        }
    }

    pub fn to_f64(&self, v: &BigInt) -> f64 {
        scaled_to_f64(v, -(self.frac_bits as i64))
    }

    pub fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        (a * b) >> self.frac_bits
    }

    pub fn cmul(&self, a: &Complex, b: &Complex) -> Complex {
        Complex {
            re: (&a.re * &b.re - &a.im * &b.im) >> self.frac_bits,
            im: (&a.re * &b.im + &a.im * &b.re) >> self.frac_bits,
        }
    }

    pub fn cadd(&self, a: &Complex, b: &Complex) -> Complex {
        Complex {
            re: &a.re + &b.re,
            im: &a.im + &b.im,
        }
    }

    pub fn csub(&self, a: &Complex, b: &Complex) -> Complex {
        Complex {
            re: &a.re - &b.re,
            im: &a.im - &b.im,
        }
    }

    /// `None` when `b` is zero at this resolution.
    pub fn cdiv(&self, a: &Complex, b: &Complex) -> Option<Complex> {
        // numerators and denominator all carry 2f fractional bits
        let den = &b.re * &b.re + &b.im * &b.im;
        if den.is_zero() {
            return None;
        }
        let re = (&a.re * &b.re + &a.im * &b.im) << self.frac_bits;
        let im = (&a.im * &b.re - &a.re * &b.im) << self.frac_bits;
        Some(Complex {
            re: re / &den,
            im: im / &den,
        })
    }

    /// `|z|^2` as fixed point.
    pub fn norm_sqr(&self, z: &Complex) -> BigInt {
        (&z.re * &z.re + &z.im * &z.im) >> self.frac_bits
    }

    pub fn abs_f64(&self, z: &Complex) -> f64 {
        self.to_f64(&z.re).hypot(self.to_f64(&z.im))
    }

    pub fn complex_from_f64(&self, re: f64, im: f64) -> Complex {
        Complex {
            re: self.from_f64(re),
            im: self.from_f64(im),
        }
    }

    /// Re-expresses `z` at another precision.
    pub fn rescale(&self, z: &Complex, to: &FixedCtx) -> Complex {
        let shift = to.frac_bits as i64 - self.frac_bits as i64;
        let conv = |v: &BigInt| {
            if shift >= 0 {
                v << shift as u64
            } else {
                v >> (-shift) as u64
            }
        };
        Complex {
            re: conv(&z.re),
            im: conv(&z.im),
        }
    }
}

/// `v * 2^exp` as the nearest-ish `f64` (truncates past 64 bits).
pub fn scaled_to_f64(v: &BigInt, exp: i64) -> f64 {
    if v.is_zero() {
        return 0.0;
    }
    let bits = v.bits() as i64;
    let drop = (bits - 64).max(0);
    let top = (v.abs() >> drop as u64).to_u64().expect("at most 64 bits") as f64;
    let mag = ldexp(top, drop + exp);
    if v.sign() == Sign::Minus {
        -mag
    } else {
        mag
    }
}

fn ldexp(x: f64, e: i64) -> f64 {
    // split so each factor stays representable
    let mut x = x;
    let mut e = e;
    while e > 1000 {
        x *= 2f64.powi(1000);
        e -= 1000;
    }
    while e < -1000 {
        x *= 2f64.powi(-1000);
        e += 1000;
    }
    x * 2f64.powi(e as i32)
}
