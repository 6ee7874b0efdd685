//! Additive skeletons: commutative idempotent monoids with neutral element 0
//! (finite join-semilattices with bottom 0), up to isomorphism.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::symmetry;
use crate::table::CayleyTable;

/// Largest order [`enumerate_additive_skeletons`] accepts.
pub const MAX_SKELETON_ORDER: usize = 8;

/// A canonical additive skeleton with the data the multiplication search needs.
#[derive(Clone, Debug)]
pub struct Skeleton {
    pub plus: CayleyTable,
    pub top: usize,
    /// Nonzero elements in a linear extension of the order (top last).
    pub order: Vec<usize>,
    pub join_irreducible: Vec<bool>,
    pub lower_covers: Vec<Vec<usize>>,
    /// For each `a`, the incomparable pairs `(b, c)` with `b + c = a`.
    pub join_pairs: Vec<Vec<(usize, usize)>>,
    /// Join-endomorphisms fixing 0, in lexicographic order.
    pub endomorphisms: Vec<Vec<u8>>,
    /// Automorphisms other than the identity.
    pub automorphisms: Vec<Permutation>,
}

impl Skeleton {
    pub fn new(plus: CayleyTable) -> Result<Self> {
        let n = plus.n();
        if !(plus.is_commutative() && plus.is_associative() && plus.is_idempotent())
            || plus.neutral_element() != Some(0)
        {
            return Err(Error::Precondition(
                "skeleton must be a commutative idempotent monoid with neutral 0".into(),
            ));
        }
        let leq = |a: usize, b: usize| plus.get(a, b) == b;
        let below = |a: usize| (0..n).filter(|&b| leq(b, a)).count();
        let mut order: Vec<usize> = (1..n).collect();
        order.sort_by_key(|&a| (below(a), a));
        let top = crate::ideal::top_element(&plus);
        let lower_covers: Vec<Vec<usize>> = (0..n)
            .map(|a| {
                (0..n)
                    .filter(|&b| b != a && leq(b, a))
                    .filter(|&b| !(0..n).any(|c| c != a && c != b && leq(b, c) && leq(c, a)))
                    .collect()
            })
            .collect();
        let join_irreducible: Vec<bool> = (0..n).map(|a| a != 0 && lower_covers[a].len() == 1).collect();
        let mut join_pairs = vec![Vec::new(); n];
        for b in 0..n {
            for c in b + 1..n {
                if !leq(b, c) && !leq(c, b) {
                    join_pairs[plus.get(b, c)].push((b, c));
                }
            }
        }
        let endomorphisms = symmetry::endomorphisms(&plus)?
            .into_iter()
            .filter(|f| f[0] == 0)
            .map(|f| f.into_iter().map(|x| x as u8).collect())
            .collect();
        let automorphisms = symmetry::automorphisms(&plus)
            .elements()
            .iter()
            .filter(|p| !p.is_identity())
            .cloned()
            .collect();
        Ok(Self {
            plus,
            top,
            order,
            join_irreducible,
            lower_covers,
            join_pairs,
            endomorphisms,
            automorphisms,
        })
    }

    pub fn n(&self) -> usize {
        self.plus.n()
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.plus.get(a, b) == b
    }

    pub fn join_irreducible_count(&self) -> usize {
        self.join_irreducible.iter().filter(|&&j| j).count()
    }
}

/// All commutative idempotent monoids of order `n` with neutral element 0, up
/// to isomorphism, each in canonical form, in lexicographic order.
pub fn enumerate_additive_skeletons(n: usize) -> Result<Vec<CayleyTable>> {
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    if n > MAX_SKELETON_ORDER {
        return Err(Error::CarrierTooLarge {
            n,
            max: MAX_SKELETON_ORDER,
        });
    }
    let mut found = BTreeSet::new();
    for t in naturally_labeled_semilattices(n) {
        found.insert(symmetry::canonical_table(&t, true).0);
    }
    Ok(found.into_iter().collect())
}

const UNSET: u8 = u8::MAX;

/// Join tables where `a ≤ b` in the order implies `a ≤ b` as integers. Every
/// finite semilattice with bottom has such a labeling.
fn naturally_labeled_semilattices(n: usize) -> Vec<CayleyTable> {
    let mut t = vec![UNSET; n * n];
    for a in 0..n {
        t[a] = a as u8;
        t[a * n] = a as u8;
        t[a * n + a] = a as u8;
    }
    let cells: Vec<(usize, usize)> = (1..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let mut out = Vec::new();
    fill(n, &cells, 0, &mut t, &mut out);
    out
}

fn fill(n: usize, cells: &[(usize, usize)], k: usize, t: &mut [u8], out: &mut Vec<CayleyTable>) {
    if k == cells.len() {
        out.push(CayleyTable::from_bytes(n, t.to_vec()));
        return;
    }
    let (a, b) = cells[k];
    for v in b..n {
        t[a * n + b] = v as u8;
        t[b * n + a] = v as u8;
        if partial_associative(n, t) {
            fill(n, cells, k + 1, t, out);
        }
    }
    t[a * n + b] = UNSET;
    t[b * n + a] = UNSET;
}

fn partial_associative(n: usize, t: &[u8]) -> bool {
    for x in 0..n {
        for y in 0..n {
            let xy = t[x * n + y];
            if xy == UNSET {
                continue;
            }
            for z in 0..n {
                let yz = t[y * n + z];
                if yz == UNSET {
                    continue;
                }
                let l = t[xy as usize * n + z];
                let r = t[x * n + yz as usize];
                if l != UNSET && r != UNSET && l != r {
                    return false;
                }
            }
        }
    }
    true
}
