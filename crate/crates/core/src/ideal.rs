//! Ideals and k-ideals of ringoids, the simplicity notions built on them, and
//! the order-theoretic criterion for additively idempotent semirings.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ringoid::Ringoid;
use crate::subset::SubsetMask;
use crate::table::CayleyTable;

/// Up to this size ideals are found by scanning every subset.
pub const FULL_SCAN_MAX_ORDER: usize = 16;
/// Largest carrier [`enumerate_ideals`] accepts.
pub const ENUMERATION_MAX_ORDER: usize = 20;

fn image(r: &Ringoid, a: SubsetMask, b: SubsetMask, f: impl Fn(&Ringoid, usize, usize) -> usize) -> SubsetMask {
    let mut out = SubsetMask::empty(r.n());
    for x in a.iter() {
        for y in b.iter() {
            out.insert(f(r, x, y));
        }
    }
    out
}

/// `A + A ⊆ A`, `S * A ⊆ A` and `A * S ⊆ A`.
pub fn is_ideal(r: &Ringoid, a: SubsetMask) -> Result<bool> {
    if a.is_empty() {
        return Err(Error::EmptySubset);
    }
    Ok(is_ideal_nonempty(r, a))
}

fn is_ideal_nonempty(r: &Ringoid, a: SubsetMask) -> bool {
    let n = r.n();
    for x in a.iter() {
        for y in a.iter() {
            if !a.contains(r.add(x, y)) {
                return false;
            }
        }
        for s in 0..n {
            if !a.contains(r.mul(s, x)) || !a.contains(r.mul(x, s)) {
                return false;
            }
        }
    }
    true
}

fn has_k_property(r: &Ringoid, a: SubsetMask) -> bool {
    let c = a.complement();
    image(r, a, c, Ringoid::add).is_subset(&c) && image(r, c, a, Ringoid::add).is_subset(&c)
}

/// An ideal with `(A + Aᶜ) ∪ (Aᶜ + A) ⊆ Aᶜ`.
pub fn is_k_ideal(r: &Ringoid, a: SubsetMask) -> Result<bool> {
    Ok(is_ideal(r, a)? && has_k_property(r, a))
}

/// The smallest ideal containing `seed`.
pub fn generated_ideal(r: &Ringoid, seed: SubsetMask) -> SubsetMask {
    let n = r.n();
    let mut a = seed;
    loop {
        let mut next = a;
        for x in a.iter() {
            for y in a.iter() {
                next.insert(r.add(x, y));
            }
            for s in 0..n {
                next.insert(r.mul(s, x));
                next.insert(r.mul(x, s));
            }
        }
        if next == a {
            return a;
        }
        a = next;
    }
}

/// All ideals (or all k-ideals) in increasing mask order.
pub fn enumerate_ideals(r: &Ringoid, k_only: bool) -> Result<Vec<SubsetMask>> {
    let n = r.n();
    let ideals: Vec<SubsetMask> = if n <= FULL_SCAN_MAX_ORDER {
        (1u64..1 << n)
            .map(|bits| SubsetMask::from_bits(n, bits))
            .filter(|&a| is_ideal_nonempty(r, a))
            .collect()
    } else if n <= ENUMERATION_MAX_ORDER {
        // Every ideal is reached from a generated singleton ideal by repeatedly
        // adjoining one missing element of the target and closing.
        let mut found = BTreeSet::new();
        let mut queue: VecDeque<SubsetMask> = (0..n)
            .map(|a| generated_ideal(r, SubsetMask::singleton(n, a)))
            .collect();
        while let Some(a) = queue.pop_front() {
            if !found.insert(a) {
                continue;
            }
            for x in a.complement().iter() {
                let mut seed = a;
                seed.insert(x);
                let b = generated_ideal(r, seed);
                if !found.contains(&b) {
                    queue.push_back(b);
                }
            }
        }
        found.into_iter().collect()
    } else {
        return Err(Error::CarrierTooLarge {
            n,
            max: ENUMERATION_MAX_ORDER,
        });
    };
    Ok(if k_only {
        ideals.into_iter().filter(|&a| has_k_property(r, a)).collect()
    } else {
        ideals
    })
}

fn no_large_proper(ideals: &[SubsetMask]) -> bool {
    ideals.iter().all(|a| a.is_full() || a.len() < 2)
}

/// No proper ideal with at least two elements.
pub fn is_ideal_simple(r: &Ringoid) -> Result<bool> {
    Ok(no_large_proper(&enumerate_ideals(r, false)?))
}

/// No proper ideal at all.
pub fn is_ideal_free(r: &Ringoid) -> Result<bool> {
    Ok(enumerate_ideals(r, false)?.iter().all(|a| a.is_full()))
}

/// No proper k-ideal with at least two elements.
pub fn is_k_ideal_simple(r: &Ringoid) -> Result<bool> {
    Ok(no_large_proper(&enumerate_ideals(r, true)?))
}

fn require_idempotent_semiring(r: &Ringoid) -> Result<()> {
    r.require_semiring()?;
    if !r.flags().plus_idempotent {
        return Err(Error::NotIdempotent);
    }
    Ok(())
}

/// The sum of all elements, the top of the join order.
pub fn top_element(plus: &CayleyTable) -> usize {
    let top = (1..plus.n()).fold(0, |acc, a| plus.get(acc, a));
    debug_assert_eq!(top, (0..plus.n()).rev().fold(plus.n() - 1, |acc, a| plus.get(a, acc)));
    top
}

/// Fast k-ideal-simplicity test for finite additively idempotent semirings:
/// with `∞` the top and `M` the minimal elements, simple iff every
/// `x ∉ M ∪ {∞}` has `∞*x ≰ x` or `x*∞ ≰ x`.
pub fn k_ideal_simple_fast(r: &Ringoid) -> Result<bool> {
    require_idempotent_semiring(r)?;
    let n = r.n();
    let top = top_element(r.plus());
    let leq = |a: usize, b: usize| r.add(a, b) == b;
    let minimal = |x: usize| (0..n).all(|y| y == x || !leq(y, x));
    Ok((0..n)
        .filter(|&x| x != top && !minimal(x))
        .all(|x| !leq(r.mul(top, x), x) || !leq(r.mul(x, top), x)))
}

/// `↓x = {a : a + x = x}`.
pub fn down_set(r: &Ringoid, x: usize) -> Result<SubsetMask> {
    require_idempotent_semiring(r)?;
    r.plus().check_element(x)?;
    Ok(SubsetMask::from_elements(r.n(), (0..r.n()).filter(|&a| r.add(a, x) == x)).unwrap())
}

/// For an associative table: `S∘a = S = a∘S` for every `a`. When it holds
/// the table is checked to be a group.
pub fn semigroup_group_criterion(t: &CayleyTable) -> Result<bool> {
    if !t.is_associative() {
        return Err(Error::NotAssociative);
    }
    let holds = t.is_quasigroup();
    if holds {
        assert!(t.is_group(), "a semigroup with S*a = S = a*S must be a group");
    }
    Ok(holds)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Trichotomy {
    /// `|S*S| = 1`
    ConstantSquare,
    /// `(S,*)` is a group
    Group,
    /// an absorbing `o` with `(S∖{o},*)` a group
    GroupWithAbsorbing,
    NotApplicable,
}

/// Which case of the trichotomy holds for an ideal-simple ringoid with
/// associative commutative multiplication. Inputs outside that class, and
/// inputs where no case holds, give `NotApplicable`.
pub fn trichotomy(r: &Ringoid) -> Result<Trichotomy> {
    let f = r.flags();
    if !(f.times_associative && f.times_commutative) || !is_ideal_simple(r)? {
        return Ok(Trichotomy::NotApplicable);
    }
    let times = r.times();
    let n = r.n();
    let first = times.get(0, 0);
    if times.bytes().iter().all(|&v| v as usize == first) {
        return Ok(Trichotomy::ConstantSquare);
    }
    if times.is_group() {
        return Ok(Trichotomy::Group);
    }
    if let Some(o) = times.absorbing_element() {
        let rest: Vec<usize> = (0..n).filter(|&x| x != o).collect();
        if is_group_on(times, &rest) {
            return Ok(Trichotomy::GroupWithAbsorbing);
        }
    }
    Ok(Trichotomy::NotApplicable)
}

/// Whether the associative table restricted to `elements` is a group.
fn is_group_on(t: &CayleyTable, elements: &[usize]) -> bool {
    let inside = |x: usize| elements.contains(&x);
    if elements.is_empty() || !elements.iter().all(|&a| elements.iter().all(|&b| inside(t.get(a, b)))) {
        return false;
    }
    let Some(&e) = elements
        .iter()
        .find(|&&e| elements.iter().all(|&x| t.get(e, x) == x && t.get(x, e) == x))
    else {
        return false;
    };
    elements
        .iter()
        .all(|&a| elements.iter().any(|&b| t.get(a, b) == e && t.get(b, a) == e))
}
