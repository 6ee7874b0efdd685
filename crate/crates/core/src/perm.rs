use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::congruence::Partition;
use crate::error::{Error, Result};
use crate::ringoid::Ringoid;
use crate::table::CayleyTable;

/// A bijection of `0..n`, stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::NotAPermutation(images));
            }
        }
        Ok(Self { images })
    }

    pub(crate) fn from_vec_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::new(images.clone()).is_ok());
        Self { images }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// All permutations of `0..n` in lexicographic order; with `fix_zero` only
    /// those with `π(0) = 0`.
    pub fn all(n: usize, fix_zero: bool) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        let start = usize::from(fix_zero).min(n);
        loop {
            out.push(Permutation { images: cur.clone() });
            if !next_permutation(&mut cur[start..]) {
                break;
            }
        }
        out
    }
}

/// Advances to the next permutation in lexicographic order.
pub(crate) fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

impl CayleyTable {
    /// The table transported along `p`: `p(a) ∘' p(b) = p(a ∘ b)`.
    pub fn relabel(&self, p: &Permutation) -> CayleyTable {
        let n = self.n();
        let inv = p.inverse();
        CayleyTable::from_fn(n, |i, j| p.apply(self.get(inv.apply(i), inv.apply(j))))
    }

    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        let n = self.n();
        (0..n).all(|a| (0..n).all(|b| p.apply(self.get(a, b)) == self.get(p.apply(a), p.apply(b))))
    }
}

impl Ringoid {
    pub fn relabel(&self, p: &Permutation) -> Ringoid {
        Ringoid::new_unchecked(self.plus().relabel(p), self.times().relabel(p))
    }
}

/// A materialized set of permutations of `0..n`, normally a group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PermSet {
    n: usize,
    elements: Vec<Permutation>,
}

impl PermSet {
    /// Sorts and deduplicates.
    pub fn from_elements(n: usize, elements: impl IntoIterator<Item = Permutation>) -> Self {
        let set: BTreeSet<Permutation> = elements.into_iter().collect();
        debug_assert!(set.iter().all(|p| p.n() == n));
        Self {
            n,
            elements: set.into_iter().collect(),
        }
    }

    pub fn trivial(n: usize) -> Self {
        Self::from_elements(n, [Permutation::identity(n)])
    }

    pub fn symmetric(n: usize) -> Self {
        Self::from_elements(n, Permutation::all(n, false))
    }

    /// The group generated by `gens` (closure under composition).
    pub fn generated_by(n: usize, gens: &[Permutation]) -> Self {
        let mut set: BTreeSet<Permutation> = BTreeSet::new();
        set.insert(Permutation::identity(n));
        let mut frontier: Vec<Permutation> = vec![Permutation::identity(n)];
        while let Some(p) = frontier.pop() {
            for g in gens {
                let q = g.compose(&p);
                if set.insert(q.clone()) {
                    frontier.push(q);
                }
            }
        }
        Self {
            n,
            elements: set.into_iter().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Contains the identity and is closed under composition and inverse.
    pub fn is_group(&self) -> bool {
        self.contains(&Permutation::identity(self.n))
            && self
                .elements
                .iter()
                .all(|p| self.contains(&p.inverse()) && self.elements.iter().all(|q| self.contains(&p.compose(q))))
    }

    pub fn orbits(&self) -> Partition {
        let n = self.n;
        // propagate the least point of each orbit until stable
        let mut label: Vec<usize> = (0..n).collect();
        let mut changed = true;
        while changed {
            changed = false;
            for p in &self.elements {
                for x in 0..n {
                    let y = p.apply(x);
                    let m = label[x].min(label[y]);
                    if label[x] != m || label[y] != m {
                        label[x] = m;
                        label[y] = m;
                        changed = true;
                    }
                }
            }
        }
        Partition::from_labels(&label)
    }

    /// A single orbit.
    pub fn is_transitive(&self) -> bool {
        self.n <= 1 || self.orbits().num_classes() == 1
    }

    /// Transitive on ordered triples of distinct elements.
    pub fn is_triply_transitive(&self) -> bool {
        let n = self.n;
        if n < 3 {
            // vacuous on triples; require transitivity on what exists
            return self.is_k_transitive(n);
        }
        self.is_k_transitive(3)
    }

    fn is_k_transitive(&self, k: usize) -> bool {
        let n = self.n;
        if k == 0 {
            return true;
        }
        let base: Vec<usize> = (0..k).collect();
        let reached: BTreeSet<Vec<usize>> = self
            .elements
            .iter()
            .map(|p| base.iter().map(|&x| p.apply(x)).collect())
            .collect();
        let mut total: usize = 1;
        for i in 0..k {
            total *= n - i;
        }
        reached.len() == total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_basics() {
        let p = Permutation::new(vec![1, 2, 0]).unwrap();
        assert_eq!(p.compose(&p.inverse()), Permutation::identity(3));
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
        assert_eq!(Permutation::all(4, false).len(), 24);
        let fixed = Permutation::all(4, true);
        assert_eq!(fixed.len(), 6);
        assert!(fixed.iter().all(|p| p.apply(0) == 0));
        assert_eq!(Permutation::all(1, true).len(), 1);
    }

    #[test]
    fn transitivity() {
        let s3 = PermSet::symmetric(3);
        assert!(s3.is_group());
        assert!(s3.is_transitive());
        assert!(s3.is_triply_transitive());
        let c5 = PermSet::generated_by(5, &[Permutation::new(vec![1, 2, 3, 4, 0]).unwrap()]);
        assert_eq!(c5.len(), 5);
        assert!(c5.is_transitive());
        assert!(!c5.is_triply_transitive());
        for n in 2..5 {
            let id = PermSet::trivial(n);
            assert!(!id.is_transitive());
            assert!(!id.is_triply_transitive());
        }
        assert!(PermSet::trivial(1).is_transitive());
    }

    #[test]
    fn relabel_roundtrip() {
        let t = CayleyTable::from_fn(3, |a, b| (a + 2 * b) % 3);
        let p = Permutation::new(vec![2, 0, 1]).unwrap();
        assert_eq!(t.relabel(&p).relabel(&p.inverse()), t);
        assert!(t.relabel(&p).is_automorphism(&Permutation::identity(3)));
    }
}
