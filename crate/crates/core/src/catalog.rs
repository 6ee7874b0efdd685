//! Named small structures used by the CLI demos and the tests.

use crate::ringoid::Ringoid;
use crate::table::CayleyTable;

pub use crate::symmetry::midpoint_groupoid;

/// `a ∘ b = max(a, b)`: the chain `0 < 1 < … < n-1` as a join-semilattice.
pub fn chain_max(n: usize) -> CayleyTable {
    CayleyTable::from_fn(n, |a, b| a.max(b))
}

/// `a ∘ b = b`.
pub fn right_zero(n: usize) -> CayleyTable {
    CayleyTable::from_fn(n, |_, b| b)
}

/// `a ∘ b = a`.
pub fn left_zero(n: usize) -> CayleyTable {
    CayleyTable::from_fn(n, |a, _| a)
}

pub fn constant(n: usize, c: usize) -> CayleyTable {
    CayleyTable::from_fn(n, |_, _| c)
}

/// Addition modulo `n`.
pub fn cyclic_add(n: usize) -> CayleyTable {
    CayleyTable::from_fn(n, |a, b| (a + b) % n)
}

/// Multiplication modulo `n`.
pub fn cyclic_mul(n: usize) -> CayleyTable {
    CayleyTable::from_fn(n, |a, b| (a * b) % n)
}

/// The ring of integers modulo `n`.
pub fn zn_ring(n: usize) -> Ringoid {
    Ringoid::new(cyclic_add(n), cyclic_mul(n)).expect("Z_n is a ring")
}

/// The idempotent quasigroup of order 3: `a ∘ a = a`, otherwise the third element.
pub fn idempotent_quasigroup3() -> CayleyTable {
    CayleyTable::from_fn(3, |a, b| if a == b { a } else { 3 - a - b })
}

/// The two-element groupoid whose value flips the right argument.
pub fn two_element_flip() -> CayleyTable {
    CayleyTable::from_fn(2, |_, b| 1 - b)
}

/// The five multiplication tables over the 3-chain from the order-3 example,
/// in the order they are printed there.
pub const ORDER3_TIMES: [[[usize; 3]; 3]; 5] = [
    [[0, 0, 0], [0, 0, 0], [0, 2, 2]],
    [[0, 0, 0], [0, 0, 1], [0, 2, 2]],
    [[0, 0, 0], [0, 0, 2], [0, 0, 2]],
    [[0, 0, 0], [0, 0, 2], [0, 1, 2]],
    [[0, 0, 0], [0, 0, 2], [0, 2, 2]],
];

/// The five congruence-simple order-3 semirings with idempotent addition and
/// absorbing zero, over the chain addition.
pub fn order3_examples() -> Vec<Ringoid> {
    ORDER3_TIMES
        .iter()
        .map(|rows| {
            Ringoid::new(chain_max(3), CayleyTable::from_rows(rows).unwrap()).expect("example tables are distributive")
        })
        .collect()
}

/// The trivial ringoid on one element.
pub fn trivial() -> Ringoid {
    let t = CayleyTable::new(1, vec![0]).unwrap();
    Ringoid::new(t.clone(), t).unwrap()
}
