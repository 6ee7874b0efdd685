//! Groupoid scans: raw table scans, groupoids with transitive automorphism
//! group, and generalised parasemifields.

use std::collections::BTreeSet;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{PermSet, Permutation};
use crate::random::random_permutation;
use crate::ringoid::Ringoid;
use crate::symmetry::{self, stats_report};
use crate::table::CayleyTable;

/// Largest order of the raw `n^(n²)` table scan.
pub const MAX_RAW_SCAN_ORDER: usize = 3;
pub const MAX_EXHAUSTIVE_TRANSITIVE_ORDER: usize = 5;
pub const MAX_PARASEMIFIELD_ORDER: usize = 4;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupoidConstraints {
    pub commutative: bool,
    pub associative: bool,
    pub quasigroup: bool,
    pub idempotent: bool,
}

impl GroupoidConstraints {
    pub fn admits(&self, t: &CayleyTable) -> bool {
        (!self.commutative || t.is_commutative())
            && (!self.idempotent || t.is_idempotent())
            && (!self.quasigroup || t.is_quasigroup())
            && (!self.associative || t.is_associative())
    }
}

/// Every table of order `n`, by base-`n` counter over the row-major entries.
fn for_each_table(n: usize, mut f: impl FnMut(&CayleyTable)) {
    let cells = n * n;
    let mut entries = vec![0usize; cells];
    loop {
        f(&CayleyTable::new(n, entries.clone()).expect("valid by construction"));
        let mut i = cells;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            entries[i] += 1;
            if entries[i] < n {
                break;
            }
            entries[i] = 0;
        }
    }
}

/// Calls `f` on every labeled table of order `n ≤ 3` (all `n^(n²)` of them).
pub fn for_each_groupoid(n: usize, f: impl FnMut(&CayleyTable)) -> Result<()> {
    check_raw_order(n)?;
    for_each_table(n, f);
    Ok(())
}

fn check_raw_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    if n > MAX_RAW_SCAN_ORDER {
        return Err(Error::CarrierTooLarge {
            n,
            max: MAX_RAW_SCAN_ORDER,
        });
    }
    Ok(())
}

/// All groupoids of order `n ≤ 3` satisfying `c`, up to isomorphism, as
/// canonical tables in lexicographic order.
pub fn scan_groupoids(n: usize, c: GroupoidConstraints) -> Result<Vec<CayleyTable>> {
    check_raw_order(n)?;
    let mut found = BTreeSet::new();
    for_each_table(n, |t| {
        if c.admits(t) {
            found.insert(symmetry::canonical_table(t, false).0);
        }
    });
    Ok(found.into_iter().collect())
}

/// Raw scan for groupoids with transitive automorphism group, `n ≤ 3`. With
/// `prefilter`, tables failing the element-count identities are discarded
/// before computing `Aut`.
pub fn scan_transitive_groupoids_raw(n: usize, c: GroupoidConstraints, prefilter: bool) -> Result<Vec<CayleyTable>> {
    check_raw_order(n)?;
    let mut found = BTreeSet::new();
    for_each_table(n, |t| {
        if c.admits(t) && (!prefilter || stats_report(t).holds()) && symmetry::automorphisms(t).is_transitive() {
            found.insert(symmetry::canonical_table(t, false).0);
        }
    });
    Ok(found.into_iter().collect())
}

/// The distinct transitive subgroups of `Sym(n)` generated by at most two
/// permutations. For `n ≤ 5` that is every transitive group: each transitive
/// group of degree at most 5 is 2-generated.
fn two_generated_transitive_groups(n: usize) -> Vec<PermSet> {
    let perms = Permutation::all(n, false);
    let mut seen: BTreeSet<Vec<Permutation>> = BTreeSet::new();
    let mut out = Vec::new();
    for (i, g) in perms.iter().enumerate() {
        for h in &perms[i..] {
            let group = PermSet::generated_by(n, &[g.clone(), h.clone()]);
            if group.is_transitive() && seen.insert(group.elements().to_vec()) {
                out.push(group);
            }
        }
    }
    out
}

/// For a group `G`, the orbits of `G` on cells `(a, b)`: a representative, the
/// values allowed there (fixed by the representative's stabilizer).
struct InvariantCells {
    reps: Vec<(usize, usize)>,
    allowed: Vec<Vec<usize>>,
}

fn invariant_cells(g: &PermSet) -> InvariantCells {
    let n = g.n();
    let mut seen = vec![false; n * n];
    let mut reps = Vec::new();
    let mut allowed = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if seen[a * n + b] {
                continue;
            }
            let stab: Vec<&Permutation> = g
                .elements()
                .iter()
                .filter(|p| p.apply(a) == a && p.apply(b) == b)
                .collect();
            for p in g.elements() {
                seen[p.apply(a) * n + p.apply(b)] = true;
            }
            reps.push((a, b));
            allowed.push((0..n).filter(|&v| stab.iter().all(|p| p.apply(v) == v)).collect());
        }
    }
    InvariantCells { reps, allowed }
}

fn invariant_table(g: &PermSet, cells: &InvariantCells, choice: &[usize]) -> CayleyTable {
    let n = g.n();
    let mut t = vec![0usize; n * n];
    for (k, &(a, b)) in cells.reps.iter().enumerate() {
        let v = cells.allowed[k][choice[k]];
        for p in g.elements() {
            t[p.apply(a) * n + p.apply(b)] = p.apply(v);
        }
    }
    CayleyTable::new(n, t).expect("valid by construction")
}

/// Every table on which all of `g` acts by automorphisms.
fn for_each_invariant_table(g: &PermSet, mut f: impl FnMut(CayleyTable)) {
    let cells = invariant_cells(g);
    if cells.allowed.iter().any(|a| a.is_empty()) {
        return;
    }
    let mut choice = vec![0usize; cells.reps.len()];
    loop {
        f(invariant_table(g, &cells, &choice));
        let mut i = choice.len();
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < cells.allowed[i].len() {
                break;
            }
            choice[i] = 0;
        }
    }
}

/// Groupoids of order `n ≤ 5` whose automorphism group is transitive, up to
/// isomorphism. Generated as tables invariant under each transitive group,
/// so transitivity holds by construction; `Aut` is still recomputed.
pub fn scan_transitive_groupoids(n: usize, c: GroupoidConstraints) -> Result<Vec<CayleyTable>> {
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    if n > MAX_EXHAUSTIVE_TRANSITIVE_ORDER {
        return Err(Error::CarrierTooLarge {
            n,
            max: MAX_EXHAUSTIVE_TRANSITIVE_ORDER,
        });
    }
    let mut found = BTreeSet::new();
    for g in two_generated_transitive_groups(n) {
        for_each_invariant_table(&g, |t| {
            if c.admits(&t) {
                found.insert(symmetry::canonical_table(&t, false).0);
            }
        });
    }
    for t in &found {
        debug_assert!(symmetry::automorphisms(t).is_transitive());
    }
    Ok(found.into_iter().collect())
}

/// Sampling mode for larger orders: draws random transitive groups generated
/// by two permutations and random tables invariant under them. Candidates
/// failing the element-count identities are dropped before the `Aut`
/// computation. Not exhaustive.
pub fn sample_transitive_groupoids<R: Rng + ?Sized>(
    n: usize,
    c: GroupoidConstraints,
    samples: usize,
    rng: &mut R,
) -> Result<Vec<CayleyTable>> {
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    if n > 8 {
        return Err(Error::CarrierTooLarge { n, max: 8 });
    }
    let mut found = BTreeSet::new();
    for _ in 0..samples {
        let g = loop {
            let g = PermSet::generated_by(n, &[random_permutation(n, rng), random_permutation(n, rng)]);
            if g.is_transitive() {
                break g;
            }
        };
        let cells = invariant_cells(&g);
        if cells.allowed.iter().any(|a| a.is_empty()) {
            continue;
        }
        let choice: Vec<usize> = cells.allowed.iter().map(|a| rng.gen_range(0..a.len())).collect();
        let t = invariant_table(&g, &cells, &choice);
        if c.admits(&t) && stats_report(&t).holds() && symmetry::automorphisms(&t).is_transitive() {
            found.insert(symmetry::canonical_table(&t, false).0);
        }
    }
    Ok(found.into_iter().collect())
}

/// Outcome of the exhaustive generalised-parasemifield scan of one order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParasemifieldReport {
    pub order: usize,
    /// Every generalised parasemifield of this order up to isomorphism.
    pub instances: Vec<Ringoid>,
    /// Those whose addition is a commutative semigroup.
    pub commutative_semigroup_plus: Vec<Ringoid>,
    /// Instances where `Aut(S,+)` is not transitive (expected: none).
    pub non_transitive_plus: Vec<Ringoid>,
}

fn latin_squares(n: usize) -> Vec<CayleyTable> {
    fn fill(n: usize, k: usize, t: &mut Vec<usize>, out: &mut Vec<CayleyTable>) {
        if k == n * n {
            out.push(CayleyTable::new(n, t.clone()).expect("valid by construction"));
            return;
        }
        let (r, c) = (k / n, k % n);
        for v in 0..n {
            if (0..c).any(|j| t[r * n + j] == v) || (0..r).any(|i| t[i * n + c] == v) {
                continue;
            }
            t[k] = v;
            fill(n, k + 1, t, out);
        }
    }
    let mut out = Vec::new();
    fill(n, 0, &mut vec![0; n * n], &mut out);
    out
}

/// Exhaustive scan of generalised parasemifields of order `n ≤ 4`: for each
/// quasigroup multiplication, every addition on which all translations act
/// as automorphisms.
pub fn scan_parasemifields(n: usize) -> Result<ParasemifieldReport> {
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    if n > MAX_PARASEMIFIELD_ORDER {
        return Err(Error::CarrierTooLarge {
            n,
            max: MAX_PARASEMIFIELD_ORDER,
        });
    }
    let mut found = BTreeSet::new();
    for times in latin_squares(n) {
        let gens: Vec<Permutation> = (0..n)
            .flat_map(|a| [times.row(a), times.column(a)])
            .map(|p| Permutation::new(p).expect("quasigroup translations are bijections"))
            .collect();
        let g = PermSet::generated_by(n, &gens);
        for_each_invariant_table(&g, |plus| {
            let ok = symmetry::parasemifield_check_via_mult(&plus, &times).unwrap_or(false);
            assert!(ok, "invariant addition failed the parasemifield check");
            let r = Ringoid::new(plus, times.clone()).expect("translations are automorphisms");
            found.insert(symmetry::canonical_form(&r, false).0);
        });
    }
    let instances: Vec<Ringoid> = found.into_iter().collect();
    let commutative_semigroup_plus = instances
        .iter()
        .filter(|r| r.flags().plus_commutative && r.flags().plus_associative)
        .cloned()
        .collect();
    let non_transitive_plus = instances
        .iter()
        .filter(|r| !symmetry::automorphisms(r.plus()).is_transitive())
        .cloned()
        .collect();
    Ok(ParasemifieldReport {
        order: n,
        instances,
        commutative_semigroup_plus,
        non_transitive_plus,
    })
}
