//! Exact real-root counting with Sturm sequences.
//!
//! Chains are built with sign-preserving pseudo-remainders and content
//! removal, so every element is a positive rational multiple of the
//! classical Sturm polynomial and all sign evaluations stay in `BigInt`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exact_poly::IntPoly;

/// Point on the extended real line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Point {
    NegInf,
    PosInf,
    /// `num / den` with `den > 0`.
    Rational(BigInt, BigInt),
}

impl Point {
    pub fn int(v: i64) -> Self {
        Point::Rational(BigInt::from(v), BigInt::one())
    }
}

/// Positive gcd of the coefficients; zero for the zero polynomial.
pub fn content(p: &IntPoly) -> BigInt {
    p.coeffs().iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Divides out the content, keeping the sign of every coefficient.
pub fn primitive_part(p: &IntPoly) -> IntPoly {
    let c = content(p);
    if c.is_zero() || c.is_one() {
        return p.clone();
    }
    IntPoly::new(p.coeffs().iter().map(|a| a / &c).collect())
}

/// A positive multiple of `a mod b`: `|lc(b)|^(deg a - deg b + 1) * (a mod b)`.
pub fn pseudo_remainder(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.degree().expect("pseudo-division by zero polynomial");
    let lb = b.leading().unwrap().clone();
    let Some(da) = a.degree() else {
        return IntPoly::zero();
    };
    if da < db {
        return a.clone();
    }
    let mut r: Vec<BigInt> = a.coeffs().to_vec();
    let steps = da - db + 1;
    for top in (db..=da).rev() {
        let lr = r[top].clone();
        for c in r.iter_mut() {
            *c *= &lb;
        }
        if !lr.is_zero() {
            let off = top - db;
            for (i, bc) in b.coeffs().iter().enumerate() {
                r[off + i] -= &lr * bc;
            }
        }
        debug_assert!(r[top].is_zero());
    }
    let mut rem = IntPoly::new(r);
    if lb.is_negative() && steps % 2 == 1 {
        rem = -&rem;
    }
    rem
}

/// Exact quotient `p / d` when `d` divides `p` in `Z[x]`.
pub fn exact_div(p: &IntPoly, d: &IntPoly) -> Option<IntPoly> {
    let dd = d.degree()?;
    let Some(dp) = p.degree() else {
        return Some(IntPoly::zero());
    };
    if dp < dd {
        return None;
    }
    let ld = d.leading().unwrap();
    let mut r: Vec<BigInt> = p.coeffs().to_vec();
    let mut q = vec![BigInt::zero(); dp - dd + 1];
    for top in (dd..=dp).rev() {
        if r[top].is_zero() {
            continue;
        }
        let (c, rem) = r[top].div_rem(ld);
        if !rem.is_zero() {
            return None;
        }
        let off = top - dd;
        for (i, dc) in d.coeffs().iter().enumerate() {
            r[off + i] -= &c * dc;
        }
        q[off] = c;
    }
    r.iter().all(Zero::is_zero).then(|| IntPoly::new(q))
}

/// Primitive gcd with positive leading coefficient.
pub fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let (mut x, mut y) = (primitive_part(a), primitive_part(b));
    if x.degree() < y.degree() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_zero() {
        let r = primitive_part(&pseudo_remainder(&x, &y));
        x = y;
        y = r;
    }
    if x.leading().is_some_and(|l| l.is_negative()) {
        x = -&x;
    }
    x
}

/// Sign of `p` at a point (the sign of the leading term at infinity).
pub fn sign_at(p: &IntPoly, at: &Point) -> i8 {
    let Some(deg) = p.degree() else {
        return 0;
    };
    let lead = p.leading().unwrap();
    let s = |v: &BigInt| -> i8 {
        if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        }
    };
    match at {
        Point::PosInf => s(lead),
        Point::NegInf => {
            if deg % 2 == 0 {
                s(lead)
            } else {
                -s(lead)
            }
        }
        // den^deg * p(num/den), same sign as p(num/den)
        Point::Rational(num, den) => {
            let mut acc = BigInt::zero();
            let mut den_pow = BigInt::one();
            for c in p.coeffs().iter().rev() {
                acc = acc * num + c * &den_pow;
                den_pow *= den;
            }
            s(&acc)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmChain {
    polys: Vec<IntPoly>,
}

impl SturmChain {
    /// Panics on the zero polynomial.
    pub fn new(p: &IntPoly) -> Self {
        assert!(!p.is_zero(), "Sturm chain of the zero polynomial");
        let mut polys = vec![primitive_part(p)];
        let d = primitive_part(&p.derivative());
        if !d.is_zero() {
            polys.push(d);
        }
        while polys.len() >= 2 {
            let n = polys.len();
            let r = pseudo_remainder(&polys[n - 2], &polys[n - 1]);
            if r.is_zero() {
                break;
            }
            polys.push(primitive_part(&-&r));
        }
        SturmChain { polys }
    }

    pub fn polys(&self) -> &[IntPoly] {
        &self.polys
    }

    /// Sign changes along the chain at `at`, skipping zeros.
    pub fn variations(&self, at: &Point) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for p in &self.polys {
            let s = sign_at(p, at);
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Distinct real roots in `(lo, hi]`.
    pub fn count_between(&self, lo: &Point, hi: &Point) -> usize {
        self.variations(lo).saturating_sub(self.variations(hi))
    }

    pub fn count_all(&self) -> usize {
        self.count_between(&Point::NegInf, &Point::PosInf)
    }
}

/// `p / gcd(p, p')`, primitive.
pub fn squarefree_part(p: &IntPoly) -> IntPoly {
    let g = gcd(p, &p.derivative());
    if g.degree() == Some(0) {
        return primitive_part(p);
    }
    primitive_part(&exact_div(&primitive_part(p), &g).expect("gcd divides p"))
}

/// Real roots of `p` counted with multiplicity. `p` must be nonzero.
pub fn count_real_roots(p: &IntPoly) -> usize {
    match p.degree() {
        None => panic!("real roots of the zero polynomial"),
        Some(0) => 0,
        Some(_) => {
            let g = gcd(p, &p.derivative());
            if g.degree() == Some(0) {
                return SturmChain::new(p).count_all();
            }
            let sqf = exact_div(&primitive_part(p), &g).expect("gcd divides p");
            SturmChain::new(&sqf).count_all() + count_real_roots(&g)
        }
    }
}

/// Distinct real roots in `[0, inf)`.
pub fn count_nonnegative_roots(p: &IntPoly) -> usize {
    let sqf = squarefree_part(p);
    if sqf.degree() == Some(0) {
        return 0;
    }
    let at_zero = sqf.coeff(0).is_zero() as usize;
    at_zero + SturmChain::new(&sqf).count_between(&Point::int(0), &Point::PosInf)
}
