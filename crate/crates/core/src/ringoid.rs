//! Ringoids: two operations on one carrier linked by both distributive laws.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::table::CayleyTable;

/// Structural flags derived from the two tables by exhaustive scans.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Flags {
    pub plus_commutative: bool,
    pub plus_associative: bool,
    pub plus_idempotent: bool,
    pub times_associative: bool,
    pub times_commutative: bool,
    pub times_quasigroup: bool,
    pub has_neutral_zero: bool,
    pub has_absorbing_zero: bool,
}

impl Flags {
    /// Addition is a commutative semigroup.
    pub fn is_semiring(&self) -> bool {
        self.plus_commutative && self.plus_associative
    }

    /// Multiplication is a quasigroup.
    pub fn is_generalised_parasemifield(&self) -> bool {
        self.times_quasigroup
    }
}

/// Whether `a*(b+c) = a*b + a*c` and `(a+b)*c = a*c + b*c` for all triples.
pub fn is_distributive(plus: &CayleyTable, times: &CayleyTable) -> Result<bool> {
    Ok(first_distributivity_failure(plus, times)?.is_none())
}

fn first_distributivity_failure(plus: &CayleyTable, times: &CayleyTable) -> Result<Option<String>> {
    let n = plus.n();
    if times.n() != n {
        return Err(Error::SizeMismatch {
            left: n,
            right: times.n(),
        });
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let bc = plus.get(b, c);
                if times.get(a, bc) != plus.get(times.get(a, b), times.get(a, c)) {
                    return Ok(Some(format!("{a}*({b}+{c}) != {a}*{b}+{a}*{c}")));
                }
                if times.get(bc, a) != plus.get(times.get(b, a), times.get(c, a)) {
                    return Ok(Some(format!("({b}+{c})*{a} != {b}*{a}+{c}*{a}")));
                }
            }
        }
    }
    Ok(None)
}

/// Computes all flags; the caller is expected to have checked distributivity.
pub fn classify(plus: &CayleyTable, times: &CayleyTable) -> Flags {
    let zero = plus.neutral_element();
    Flags {
        plus_commutative: plus.is_commutative(),
        plus_associative: plus.is_associative(),
        plus_idempotent: plus.is_idempotent(),
        times_associative: times.is_associative(),
        times_commutative: times.is_commutative(),
        times_quasigroup: times.is_quasigroup(),
        has_neutral_zero: zero.is_some(),
        has_absorbing_zero: zero.is_some_and(|z| times.absorbing_element() == Some(z)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RingoidTables", into = "RingoidTables")]
pub struct Ringoid {
    plus: CayleyTable,
    times: CayleyTable,
    flags: Flags,
}

impl Ringoid {
    pub fn new(plus: CayleyTable, times: CayleyTable) -> Result<Self> {
        if let Some(why) = first_distributivity_failure(&plus, &times)? {
            return Err(Error::NotDistributive(why));
        }
        let flags = classify(&plus, &times);
        Ok(Self { plus, times, flags })
    }

    /// Construction without the O(n³) distributivity check, for tables the
    /// caller has just verified.
    pub(crate) fn new_unchecked(plus: CayleyTable, times: CayleyTable) -> Self {
        debug_assert!(is_distributive(&plus, &times).unwrap());
        let flags = classify(&plus, &times);
        Self { plus, times, flags }
    }

    pub fn n(&self) -> usize {
        self.plus.n()
    }

    pub fn plus(&self) -> &CayleyTable {
        &self.plus
    }

    pub fn times(&self) -> &CayleyTable {
        &self.times
    }

    pub fn flags(&self) -> Flags {
        self.flags
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.plus.get(a, b)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.times.get(a, b)
    }

    pub fn is_semiring(&self) -> bool {
        self.flags.is_semiring()
    }

    pub fn require_semiring(&self) -> Result<()> {
        if self.is_semiring() {
            Ok(())
        } else {
            Err(Error::NotSemiring)
        }
    }

    /// Componentwise product on pairs, element `(x, y)` encoded as `x * m + y`.
    pub fn direct_product(&self, other: &Ringoid) -> Ringoid {
        let m = other.n();
        let n = self.n() * m;
        let split = |a: usize| (a / m, a % m);
        let plus = CayleyTable::from_fn(n, |a, b| {
            let ((a1, a2), (b1, b2)) = (split(a), split(b));
            self.add(a1, b1) * m + other.add(a2, b2)
        });
        let times = CayleyTable::from_fn(n, |a, b| {
            let ((a1, a2), (b1, b2)) = (split(a), split(b));
            self.mul(a1, b1) * m + other.mul(a2, b2)
        });
        Ringoid::new_unchecked(plus, times)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use rand::{Rng, SeedableRng};

    #[test]
    fn paper_examples_are_idempotent_semirings_with_absorbing_zero() {
        for r in catalog::order3_examples() {
            let f = r.flags();
            assert!(f.is_semiring());
            assert!(f.plus_idempotent);
            assert!(f.has_absorbing_zero);
            assert!(is_distributive(r.plus(), r.times()).unwrap());
        }
    }

    #[test]
    fn singleton_is_distributive_with_all_flags() {
        let t = CayleyTable::new(1, vec![0]).unwrap();
        assert!(is_distributive(&t, &t).unwrap());
        let f = classify(&t, &t);
        assert!(
            f.plus_commutative
                && f.plus_associative
                && f.plus_idempotent
                && f.times_associative
                && f.times_commutative
                && f.times_quasigroup
                && f.has_neutral_zero
                && f.has_absorbing_zero
        );
    }

    #[test]
    fn z4_ring_and_random_tables() {
        let add = catalog::cyclic_add(4);
        let mul = catalog::cyclic_mul(4);
        assert!(is_distributive(&add, &mul).unwrap());
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let mut failures = 0;
        for _ in 0..100 {
            let t = CayleyTable::from_fn(4, |_, _| rng.gen_range(0..4));
            if !is_distributive(&add, &t).unwrap() {
                failures += 1;
            }
        }
        assert!(failures >= 95, "only {failures} of 100 random tables failed");
    }

    #[test]
    fn size_mismatch_is_rejected() {
        let a = catalog::chain_max(2);
        let b = catalog::chain_max(3);
        assert!(matches!(is_distributive(&a, &b), Err(Error::SizeMismatch { .. })));
        assert!(Ringoid::new(a, b).is_err());
    }

    #[test]
    fn midpoint_with_modular_addition_is_generalised_parasemifield() {
        let mid = catalog::midpoint_groupoid(5).unwrap();
        let add = catalog::cyclic_add(5);
        let r = Ringoid::new(mid, add).unwrap();
        assert!(r.flags().times_quasigroup);
        assert!(r.flags().is_generalised_parasemifield());
        assert!(!r.flags().is_semiring());
    }

    #[test]
    fn non_distributive_is_rejected() {
        let plus = catalog::chain_max(3);
        let times = CayleyTable::from_rows(&[[0, 0, 0], [0, 2, 1], [0, 0, 0]]).unwrap();
        assert!(matches!(Ringoid::new(plus, times), Err(Error::NotDistributive(_))));
    }
}

/// Serialized form: the two tables; flags are recomputed on load.
#[derive(Serialize, Deserialize)]
struct RingoidTables {
    plus: CayleyTable,
    times: CayleyTable,
}

impl TryFrom<RingoidTables> for Ringoid {
    type Error = Error;

    fn try_from(t: RingoidTables) -> Result<Self> {
        Ringoid::new(t.plus, t.times)
    }
}

impl From<Ringoid> for RingoidTables {
    fn from(r: Ringoid) -> Self {
        RingoidTables {
            plus: r.plus,
            times: r.times,
        }
    }
}
