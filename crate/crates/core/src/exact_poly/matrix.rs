use num_bigint::BigInt;
use rayon::prelude::*;

use super::{mul_acc, IntPoly};
use crate::error::PolyError;

/// Square matrix of integer polynomials, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    dim: usize,
    entries: Vec<IntPoly>,
}

impl PolyMatrix {
    /// Panics if `dim == 0`.
    pub fn zero(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be at least 1");
        PolyMatrix {
            dim,
            entries: vec![IntPoly::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| {
            if i == j {
                IntPoly::one()
            } else {
                IntPoly::zero()
            }
        })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> IntPoly) -> Self {
        assert!(dim >= 1, "matrix dimension must be at least 1");
        let entries = (0..dim * dim).map(|idx| f(idx / dim, idx % dim)).collect();
        PolyMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &IntPoly {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: IntPoly) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn row(&self, row: usize) -> &[IntPoly] {
        &self.entries[row * self.dim..(row + 1) * self.dim]
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.iter().filter(|e| !e.is_zero()).count()
    }

    pub fn trace(&self) -> IntPoly {
        (0..self.dim).fold(IntPoly::zero(), |acc, i| &acc + self.get(i, i))
    }

    /// Exact product. Rows are computed in parallel; the result does not
    /// depend on the number of workers.
    pub fn mul(&self, rhs: &PolyMatrix) -> Result<PolyMatrix, PolyError> {
        if self.dim != rhs.dim {
            return Err(PolyError::DimensionMismatch {
                left: self.dim,
                right: rhs.dim,
            });
        }
        let dim = self.dim;
        let rows: Vec<Vec<IntPoly>> = (0..dim)
            .into_par_iter()
            .map(|i| {
                let mut acc: Vec<Vec<BigInt>> = vec![Vec::new(); dim];
                for (l, a) in self.row(i).iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (j, b) in rhs.row(l).iter().enumerate() {
                        mul_acc(&mut acc[j], a.coeffs(), b.coeffs());
                    }
                }
                acc.into_iter().map(IntPoly::new).collect()
            })
            .collect();
        Ok(PolyMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// `self^exponent` by repeated squaring.
    pub fn pow(&self, exponent: u64) -> Result<PolyMatrix, PolyError> {
        if exponent == 0 {
            return Err(PolyError::ZeroExponent(exponent));
        }
        let mut result: Option<PolyMatrix> = None;
        let mut base = self.clone();
        let mut e = exponent;
        loop {
            if e & 1 == 1 {
                result = Some(match result {
                    None => base.clone(),
                    Some(r) => r.mul(&base)?,
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul(&base)?;
        }
        Ok(result.expect("exponent >= 1 sets at least one bit"))
    }

    /// Permutes rows and columns together: entry `(i, j)` moves to
    /// `(perm[i], perm[j])`. The result is similar to `self`.
    pub fn permuted(&self, perm: &[usize]) -> PolyMatrix {
        assert_eq!(perm.len(), self.dim);
        let mut out = PolyMatrix::zero(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.set(perm[i], perm[j], self.get(i, j).clone());
            }
        }
        out
    }
}

/// `Tr(m^n)`.
pub fn mat_pow_trace(m: &PolyMatrix, n: u64) -> Result<IntPoly, PolyError> {
    Ok(m.pow(n)?.trace())
}
