//! Transfer matrix for GP(n,k).
//!
//! Step `j` of the walk around the outer cycle is described by the occupancy
//! of `(u_j, v_j, v_{j-1}, ..., v_{j-k+1})`. A state `B` may follow `A` when
//! its history bits are `A`'s inner bits shifted by one and no outer edge,
//! spoke or inner chord closing at step `j` has both endpoints occupied. The
//! entry carries `x^w` where `w` counts the vertices first placed at step `j`
//! (`u_j` and `v_j`); the history bits were weighted when they were new.
//!
//! The trace of `T_k^n` then sums over closed walks, i.e. over consistent
//! cyclic assignments, which is exactly the independence polynomial.

use serde::{Deserialize, Serialize};

use crate::error::TransferError;
use crate::exact_poly::{mat_pow_trace, IntPoly, PolyMatrix};
use crate::gp_graph::GpParams;

/// Largest supported step size. The matrix has `2^(k+1)` rows, so this keeps
/// it at 128 x 128.
pub const MAX_STEP: usize = 6;

const U: usize = 0;
const V: usize = 1;

/// Occupancy bits of one step. Bit 0 is `u_j`, bit 1 is `v_j`, and bit
/// `1 + i` is `v_{j-i}` for `1 <= i <= k-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TransferState {
    bits: u32,
    k: u8,
}

impl TransferState {
    pub fn new(bits: u32, k: usize) -> Self {
        assert!(
            bits < 1 << (k + 1),
            "state {bits:#b} has more than k+1 = {} bits",
            k + 1
        );
        TransferState { bits, k: k as u8 }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn width(&self) -> usize {
        self.k as usize + 1
    }

    pub fn bit(&self, pos: usize) -> bool {
        (self.bits >> pos) & 1 == 1
    }

    pub fn u(&self) -> bool {
        self.bit(U)
    }

    pub fn v(&self) -> bool {
        self.bit(V)
    }

    /// Occupancy of the oldest inner vertex still in the window,
    /// `v_{j-k+1}` (which is `v_j` itself when `k = 1`).
    fn oldest(&self) -> bool {
        self.bit(self.k as usize)
    }

    /// Vertices introduced at this step.
    pub fn new_vertices(&self) -> usize {
        self.u() as usize + self.v() as usize
    }

    /// Renders as the bit string over `(u_j, v_j, v_{j-1}, ...)`.
    pub fn label(&self) -> String {
        (0..self.width())
            .map(|p| if self.bit(p) { '1' } else { '0' })
            .collect()
    }
}

fn check_step(k: usize) -> Result<(), TransferError> {
    if (1..=MAX_STEP).contains(&k) {
        Ok(())
    } else {
        Err(TransferError::UnsupportedStep { k, max: MAX_STEP })
    }
}

/// All `2^(k+1)` states in ascending bit order.
pub fn enumerate_states(k: usize) -> Result<Vec<TransferState>, TransferError> {
    // enumeration itself only needs the bits to fit a u32
    if !(1..31).contains(&k) {
        return Err(TransferError::UnsupportedStep { k, max: MAX_STEP });
    }
    Ok((0..1u32 << (k + 1))
        .map(|bits| TransferState::new(bits, k))
        .collect())
}

/// Whether `b` can be the state right after `a`.
pub fn transition_allowed(a: TransferState, b: TransferState, k: usize) -> bool {
    debug_assert!(a.width() == k + 1 && b.width() == k + 1);
    let shifted = (1..k).all(|i| b.bit(1 + i) == a.bit(i));
    let outer = !(b.u() && a.u());
    let spoke = !(b.u() && b.v());
    // a's oldest bit is v_{(j-1)-(k-1)} = v_{j-k}
    let chord = !(b.v() && a.oldest());
    shifted && outer && spoke && chord
}

#[derive(Clone, Debug)]
pub struct TransferMatrix {
    k: usize,
    states: Vec<TransferState>,
    matrix: PolyMatrix,
}

impl TransferMatrix {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }

    /// Row/column `i` belongs to `states()[i]`.
    pub fn states(&self) -> &[TransferState] {
        &self.states
    }

    pub fn index_of(&self, state: TransferState) -> Option<usize> {
        self.states.iter().position(|&s| s == state)
    }

    /// Same construction with rows and columns laid out in a caller-chosen
    /// order; `order[i]` is the bit pattern for index `i`.
    pub fn build_with_order(k: usize, order: &[u32]) -> Result<Self, TransferError> {
        check_step(k)?;
        let dim = 1usize << (k + 1);
        let mut seen = vec![false; dim];
        assert_eq!(order.len(), dim, "order must list every state once");
        for &b in order {
            assert!(
                !std::mem::replace(&mut seen[b as usize], true),
                "state {b} repeated"
            );
        }
        let states: Vec<TransferState> = order.iter().map(|&b| TransferState::new(b, k)).collect();
        let matrix = PolyMatrix::from_fn(dim, |i, j| {
            let (a, b) = (states[i], states[j]);
            if transition_allowed(a, b, k) {
                IntPoly::monomial(1, b.new_vertices())
            } else {
                IntPoly::zero()
            }
        });
        Ok(TransferMatrix { k, states, matrix })
    }
}

pub fn build_transfer_matrix(k: usize) -> Result<TransferMatrix, TransferError> {
    check_step(k)?;
    let order: Vec<u32> = enumerate_states(k)?.iter().map(|s| s.bits()).collect();
    TransferMatrix::build_with_order(k, &order)
}

/// `Ind(GP(n,k), x) = Tr(T_k^n)`.
pub fn independence_polynomial(params: GpParams) -> Result<IntPoly, TransferError> {
    let (n, k) = (params.n(), params.k());
    if n <= k {
        return Err(TransferError::WindowWraps { n, k });
    }
    let t = build_transfer_matrix(k)?;
    Ok(mat_pow_trace(t.matrix(), n as u64).expect("n >= 1 and square matrix"))
}

/// Serialized form of a computed polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialRecord {
    pub schema: u32,
    pub n: usize,
    pub k: usize,
    pub coeffs: Vec<String>,
    pub alpha: usize,
}

impl PolynomialRecord {
    pub fn new(params: GpParams, poly: &IntPoly) -> Self {
        PolynomialRecord {
            schema: 1,
            n: params.n(),
            k: params.k(),
            coeffs: poly.to_decimal_strings(),
            alpha: poly.degree().unwrap_or(0),
        }
    }

    pub fn poly(&self) -> Result<IntPoly, crate::error::PolyError> {
        IntPoly::from_decimal_strings(&self.coeffs)
    }
}
