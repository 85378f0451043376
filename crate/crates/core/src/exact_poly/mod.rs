//! Dense univariate polynomials over the integers, and square matrices of
//! them.

mod matrix;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::PolyError;

pub use matrix::{mat_pow_trace, PolyMatrix};

/// Integer polynomial, `coeffs[i]` is the coefficient of `x^i`.
///
/// Always canonical: the last coefficient is nonzero, and the zero
/// polynomial has no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// `c * x^power`
    pub fn monomial(c: impl Into<BigInt>, power: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); power];
        coeffs.push(c.into());
        Self::new(coeffs)
    }

    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        trim(&mut coeffs);
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Decimal strings, lowest power first.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(BigInt::to_string).collect()
    }

    pub fn from_decimal_strings<S: AsRef<str>>(coeffs: &[S]) -> Result<Self, PolyError> {
        coeffs
            .iter()
            .map(|s| {
                let s = s.as_ref();
                s.parse::<BigInt>()
                    .map_err(|_| PolyError::BadCoefficient(s.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(IntPoly::new)
    }
}

fn trim(coeffs: &mut Vec<BigInt>) {
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
}

/// `acc += a * b`, with `acc` grown as needed and left untrimmed.
pub(crate) fn mul_acc(acc: &mut Vec<BigInt>, a: &[BigInt], b: &[BigInt]) {
    if a.is_empty() || b.is_empty() {
        return;
    }
    let len = a.len() + b.len() - 1;
    if acc.len() < len {
        acc.resize(len, BigInt::zero());
    }
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            acc[i + j] += x * y;
        }
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    write!(f, "x")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        IntPoly::new(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        let mut acc = Vec::new();
        mul_acc(&mut acc, &self.coeffs, &rhs.coeffs);
        IntPoly::new(acc)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

#[derive(Serialize, Deserialize)]
struct PolyJson {
    coeffs: Vec<String>,
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyJson {
            coeffs: self.to_decimal_strings(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = PolyJson::deserialize(d)?;
        IntPoly::from_decimal_strings(&raw.coeffs).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn addition_examples() {
        assert_eq!(&p(&[1, 1]) + &p(&[1, -1]), p(&[2]));
        assert_eq!(&IntPoly::zero() + &p(&[3, 0, 4]), p(&[3, 0, 4]));
        assert_eq!(&p(&[1, 2]) + &p(&[0, 3, 1]), p(&[1, 5, 1]));
        assert!((&p(&[1, 2]) - &p(&[1, 2])).is_zero());
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, 1]), p(&[1, 2, 1]));
        assert!((&p(&[1, 6, 6]) * &IntPoly::zero()).is_zero());
        assert_eq!(&p(&[1, 6, 6]) * &IntPoly::one(), p(&[1, 6, 6]));
    }

    #[test]
    fn canonical_form() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert_eq!(p(&[0, 0]), IntPoly::zero());
        assert_eq!(IntPoly::zero().degree(), None);
        assert_eq!(IntPoly::monomial(5, 3).degree(), Some(3));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 6, 6]).to_string(), "1 + 6x + 6x^2");
        assert_eq!(p(&[0, -1, 0, 1]).to_string(), "-x + x^3");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn json_uses_decimal_strings() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let q = IntPoly::new(vec![BigInt::one(), big.clone()]);
        let json = serde_json::to_string(&q).unwrap();
        assert_eq!(json, r#"{"coeffs":["1","123456789012345678901234567890"]}"#);
        let back: IntPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, q);
        assert!(serde_json::from_str::<IntPoly>(r#"{"coeffs":["1","x"]}"#).is_err());
    }

    #[test]
    fn eval_and_derivative() {
        let q = p(&[1, 6, 6]);
        assert_eq!(q.eval(&BigInt::from(1)), BigInt::from(13));
        assert_eq!(q.derivative(), p(&[6, 12]));
        assert!(p(&[7]).derivative().is_zero());
    }

    fn arb_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-1000i64..1000, 0..8).prop_map(|c| IntPoly::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
                prop_assert_eq!((&a * &b).degree(), Some(da + db));
            }
        }

        #[test]
        fn json_round_trip(a in arb_poly()) {
            let back: IntPoly = serde_json::from_str(&serde_json::to_string(&a).unwrap()).unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
