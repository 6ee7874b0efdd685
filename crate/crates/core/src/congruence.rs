//! Congruences of ringoids: principal congruence closure, simplicity, and the
//! two explicit congruence constructions on semirings.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal;
use crate::ringoid::Ringoid;
use crate::subset::SubsetMask;

/// Largest carrier on which [`all_congruences`] will enumerate set partitions.
pub const MAX_BRUTE_FORCE_ORDER: usize = 8;

/// An equivalence relation on `0..n` as a class-id vector.
///
/// Class ids are normalized to first-occurrence order, so two partitions are
/// equal exactly when they relate the same pairs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    class_of: Vec<usize>,
}

impl Partition {
    /// Normalizes arbitrary labels: `labels[a] == labels[b]` iff `a`, `b` share a class.
    pub fn from_labels<T: PartialEq>(labels: &[T]) -> Self {
        let mut firsts: Vec<usize> = Vec::new();
        let mut class_of = Vec::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            match firsts.iter().position(|&f| labels[f] == *l) {
                Some(c) => class_of.push(c),
                None => {
                    class_of.push(firsts.len());
                    firsts.push(i);
                }
            }
        }
        Self { class_of }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            class_of: (0..n).collect(),
        }
    }

    pub fn full(n: usize) -> Self {
        Self { class_of: vec![0; n] }
    }

    pub fn n(&self) -> usize {
        self.class_of.len()
    }

    pub fn class_of(&self) -> &[usize] {
        &self.class_of
    }

    pub fn num_classes(&self) -> usize {
        self.class_of.iter().max().map_or(0, |m| m + 1)
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_classes()];
        for (a, &c) in self.class_of.iter().enumerate() {
            out[c].push(a);
        }
        out
    }

    pub fn class_containing(&self, a: usize) -> Vec<usize> {
        let c = self.class_of[a];
        (0..self.n()).filter(|&x| self.class_of[x] == c).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.num_classes() == self.n()
    }

    pub fn is_full(&self) -> bool {
        self.num_classes() <= 1
    }

    /// Every pair related by `self` is related by `other`.
    pub fn is_finer_than(&self, other: &Partition) -> bool {
        (0..self.n()).all(|a| (0..a).all(|b| !self.related(a, b) || other.related(a, b)))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .classes()
            .iter()
            .map(|c| {
                let els: Vec<String> = c.iter().map(|a| a.to_string()).collect();
                format!("{{{}}}", els.join(","))
            })
            .collect();
        write!(f, "{}", parts.join("/"))
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if already in the same set.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // smaller root wins to keep labels deterministic
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    fn into_partition(mut self) -> Partition {
        let labels: Vec<usize> = (0..self.parent.len()).map(|x| self.find(x)).collect();
        Partition::from_labels(&labels)
    }
}

/// Whether `p` is compatible with every translation of both operations.
pub fn is_congruence(r: &Ringoid, p: &Partition) -> bool {
    let n = r.n();
    debug_assert_eq!(p.n(), n);
    for class in p.classes() {
        let rep = class[0];
        for &x in &class[1..] {
            for s in 0..n {
                if !p.related(r.add(s, rep), r.add(s, x))
                    || !p.related(r.add(rep, s), r.add(x, s))
                    || !p.related(r.mul(s, rep), r.mul(s, x))
                    || !p.related(r.mul(rep, s), r.mul(x, s))
                {
                    return false;
                }
            }
        }
    }
    true
}

/// The smallest congruence relating `a` and `b`.
pub fn principal_congruence(r: &Ringoid, a: usize, b: usize) -> Result<Partition> {
    let n = r.n();
    for e in [a, b] {
        if e >= n {
            return Err(Error::ElementOutOfRange { element: e, n });
        }
    }
    Ok(principal_congruence_unchecked(r, a, b))
}

pub(crate) fn principal_congruence_unchecked(r: &Ringoid, a: usize, b: usize) -> Partition {
    let n = r.n();
    let mut uf = UnionFind::new(n);
    let mut work = vec![(a, b)];
    while let Some((u, v)) = work.pop() {
        if !uf.union(u, v) {
            continue;
        }
        for s in 0..n {
            work.push((r.add(s, u), r.add(s, v)));
            work.push((r.add(u, s), r.add(v, s)));
            work.push((r.mul(s, u), r.mul(s, v)));
            work.push((r.mul(u, s), r.mul(v, s)));
        }
    }
    uf.into_partition()
}

/// A congruence other than the identity and the full relation, if one exists.
pub fn nontrivial_congruence(r: &Ringoid) -> Option<Partition> {
    let n = r.n();
    for a in 0..n {
        for b in a + 1..n {
            let p = principal_congruence_unchecked(r, a, b);
            if !p.is_full() {
                return Some(p);
            }
        }
    }
    None
}

/// Only the identity and the full relation are congruences.
pub fn is_congruence_simple(r: &Ringoid) -> bool {
    nontrivial_congruence(r).is_none()
}

/// Every congruence, by filtering all set partitions of the carrier.
pub fn all_congruences(r: &Ringoid) -> Result<Vec<Partition>> {
    let n = r.n();
    if n > MAX_BRUTE_FORCE_ORDER {
        return Err(Error::CarrierTooLarge {
            n,
            max: MAX_BRUTE_FORCE_ORDER,
        });
    }
    Ok(set_partitions(n).into_iter().filter(|p| is_congruence(r, p)).collect())
}

/// All set partitions of `0..n` via restricted growth strings.
pub fn set_partitions(n: usize) -> Vec<Partition> {
    fn rec(prefix: &mut Vec<usize>, max: usize, n: usize, out: &mut Vec<Partition>) {
        if prefix.len() == n {
            out.push(Partition {
                class_of: prefix.clone(),
            });
            return;
        }
        let limit = if prefix.is_empty() { 0 } else { max + 1 };
        for c in 0..=limit {
            prefix.push(c);
            rec(prefix, max.max(c), n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), 0, n, &mut out);
    out
}

/// The preorder `a ≼ b :⇔ ∃k ≥ 1, x: kb = x + a` as a boolean matrix.
pub fn multiple_preorder(r: &Ringoid) -> Result<Vec<Vec<bool>>> {
    r.require_semiring()?;
    let n = r.n();
    // reach[a] = {x + a : x ∈ S}
    let reach: Vec<SubsetMask> = (0..n)
        .map(|a| SubsetMask::from_elements(n, (0..n).map(|x| r.add(x, a))).unwrap())
        .collect();
    let multiples: Vec<SubsetMask> = (0..n)
        .map(|b| SubsetMask::from_elements(n, r.plus().multiples(b)).unwrap())
        .collect();
    Ok((0..n)
        .map(|a| {
            (0..n)
                .map(|b| !multiples[b].intersection(&reach[a]).is_empty())
                .collect()
        })
        .collect())
}

/// The congruence `≼ ∩ ≼⁻¹` of a semiring.
pub fn preorder_rho(r: &Ringoid) -> Result<Partition> {
    let le = multiple_preorder(r)?;
    let n = r.n();
    let labels: Vec<usize> = (0..n)
        .map(|a| (0..n).find(|&c| le[a][c] && le[c][a]).unwrap())
        .collect();
    let p = Partition::from_labels(&labels);
    debug_assert!((0..n).all(|a| (0..n).all(|b| p.related(a, b) == (le[a][b] && le[b][a]))));
    Ok(p)
}

/// The congruence `ρ_A = {(x,y) : ∃ a,b ∈ A, x + a = y + b}` of an ideal `A`.
pub fn rho_from_ideal(r: &Ringoid, ideal_set: SubsetMask) -> Result<Partition> {
    r.require_semiring()?;
    if ideal_set.is_empty() {
        return Err(Error::EmptySubset);
    }
    if !ideal::is_ideal(r, ideal_set)? {
        return Err(Error::NotIdeal);
    }
    let n = r.n();
    let shifted: Vec<SubsetMask> = (0..n)
        .map(|x| SubsetMask::from_elements(n, ideal_set.iter().map(|a| r.add(x, a))).unwrap())
        .collect();
    let direct = |x: usize, y: usize| !shifted[x].intersection(&shifted[y]).is_empty();
    let mut uf = UnionFind::new(n);
    for x in 0..n {
        for y in x + 1..n {
            if direct(x, y) {
                uf.union(x, y);
            }
        }
    }
    let p = uf.into_partition();
    assert!(
        (0..n).all(|x| (0..n).all(|y| !p.related(x, y) || direct(x, y))),
        "rho_A needed a transitive closure step"
    );
    Ok(p)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PlusDichotomy {
    Idempotent,
    Group,
    Other,
}

/// For a semiring with additive neutral element: is `(S,+)` idempotent, a group, or neither.
pub fn plus_dichotomy(r: &Ringoid) -> Result<PlusDichotomy> {
    r.require_semiring()?;
    if r.plus().neutral_element().is_none() {
        return Err(Error::NoNeutral);
    }
    Ok(if r.flags().plus_idempotent {
        PlusDichotomy::Idempotent
    } else if r.plus().is_group() {
        PlusDichotomy::Group
    } else {
        PlusDichotomy::Other
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NoNeutralDichotomy {
    Cancellative,
    AbsorbingDoubling,
    Neither,
}

/// For a semiring without additive neutral element and non-idempotent
/// addition: cancellative addition, or an absorbing `o` with `2x = o` for all `x`.
pub fn no_neutral_dichotomy(r: &Ringoid) -> Result<NoNeutralDichotomy> {
    r.require_semiring()?;
    let plus = r.plus();
    if plus.neutral_element().is_some() {
        return Err(Error::Precondition("addition has a neutral element".into()));
    }
    if r.flags().plus_idempotent {
        return Err(Error::Precondition("addition is idempotent".into()));
    }
    if plus.is_cancellative() {
        return Ok(NoNeutralDichotomy::Cancellative);
    }
    if let Some(o) = plus.absorbing_element() {
        if (0..r.n()).all(|x| plus.get(x, x) == o) {
            return Ok(NoNeutralDichotomy::AbsorbingDoubling);
        }
    }
    Ok(NoNeutralDichotomy::Neither)
}
