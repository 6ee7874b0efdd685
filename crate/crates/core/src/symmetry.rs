//! Automorphisms, endomorphisms and translation monoids of finite groupoids,
//! invariants of groupoids with transitive automorphism group, and canonical
//! forms for isomorphism rejection.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{PermSet, Permutation};
use crate::ringoid::Ringoid;
use crate::table::{CayleyTable, ElementStats};

/// Largest carrier accepted by [`endomorphisms`].
pub const MAX_ENDOMORPHISM_ORDER: usize = 10;

/// `f(x ∘ y) = f(x) ∘ f(y)` for all `x, y`.
pub fn is_endomorphism(t: &CayleyTable, f: &[usize]) -> bool {
    let n = t.n();
    (0..n).all(|x| (0..n).all(|y| f[t.get(x, y)] == t.get(f[x], f[y])))
}

/// Backtracking over images `f(0), f(1), …`; after each assignment every
/// product whose arguments and value are all assigned is checked.
fn homomorphisms(t: &CayleyTable, injective: bool) -> Vec<Vec<usize>> {
    fn rec(t: &CayleyTable, injective: bool, f: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let n = t.n();
        let k = f.len();
        if k == n {
            out.push(f.clone());
            return;
        }
        for v in 0..n {
            if injective && used[v] {
                continue;
            }
            f.push(v);
            let ok = (0..=k).all(|a| {
                (0..=k).all(|b| {
                    let ab = t.get(a, b);
                    ab > k || (a != k && b != k && ab != k) || f[ab] == t.get(f[a], f[b])
                })
            });
            if ok {
                used[v] = true;
                rec(t, injective, f, used, out);
                used[v] = false;
            }
            f.pop();
        }
    }
    let mut out = Vec::new();
    rec(
        t,
        injective,
        &mut Vec::with_capacity(t.n()),
        &mut vec![false; t.n()],
        &mut out,
    );
    out
}

/// `Aut(S,∘)` as a materialized permutation group.
pub fn automorphisms(t: &CayleyTable) -> PermSet {
    PermSet::from_elements(
        t.n(),
        homomorphisms(t, true).into_iter().map(Permutation::from_vec_unchecked),
    )
}

/// `End(S,∘)` as image lists in lexicographic order.
pub fn endomorphisms(t: &CayleyTable) -> Result<Vec<Vec<usize>>> {
    if t.n() > MAX_ENDOMORPHISM_ORDER {
        return Err(Error::CarrierTooLarge {
            n: t.n(),
            max: MAX_ENDOMORPHISM_ORDER,
        });
    }
    Ok(homomorphisms(t, false))
}

/// The monoid generated by all left and right translations, with identity,
/// as sorted image lists.
pub fn mult_monoid(t: &CayleyTable) -> Vec<Vec<usize>> {
    use std::collections::BTreeSet;
    let n = t.n();
    let gens: Vec<Vec<usize>> = (0..n).flat_map(|a| [t.row(a), t.column(a)]).collect();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let identity: Vec<usize> = (0..n).collect();
    seen.insert(identity.clone());
    let mut frontier = vec![identity];
    while let Some(m) = frontier.pop() {
        for g in &gens {
            let c: Vec<usize> = m.iter().map(|&x| g[x]).collect();
            if seen.insert(c.clone()) {
                frontier.push(c);
            }
        }
    }
    seen.into_iter().collect()
}

/// Ringoid test through translations: every `L_a`, `R_a` of `times` is an
/// endomorphism of `plus`. Agrees with [`crate::ringoid::is_distributive`].
pub fn ringoid_check_via_mult(plus: &CayleyTable, times: &CayleyTable) -> Result<bool> {
    if plus.n() != times.n() {
        return Err(Error::SizeMismatch {
            left: plus.n(),
            right: times.n(),
        });
    }
    Ok((0..plus.n()).all(|a| is_endomorphism(plus, &times.row(a)) && is_endomorphism(plus, &times.column(a))))
}

/// Generalised parasemifield test through translations: `times` is a
/// quasigroup and all its translations are automorphisms of `plus`.
pub fn parasemifield_check_via_mult(plus: &CayleyTable, times: &CayleyTable) -> Result<bool> {
    if !ringoid_check_via_mult(plus, times)? {
        return Ok(false);
    }
    Ok((0..times.n()).all(|a| {
        Permutation::new(times.row(a)).is_ok_and(|p| plus.is_automorphism(&p))
            && Permutation::new(times.column(a)).is_ok_and(|p| plus.is_automorphism(&p))
    }))
}

/// Outcome of checking the element-count identities on a groupoid with
/// transitive automorphism group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsReport {
    /// The counts of element 0.
    pub stats: ElementStats,
    /// Counts are the same for every element.
    pub constant: bool,
    pub nl_eq_ar: bool,
    pub al_eq_nr: bool,
    /// All four equal; only present for commutative tables.
    pub commutative_all_equal: Option<bool>,
}

impl StatsReport {
    pub fn holds(&self) -> bool {
        self.constant && self.nl_eq_ar && self.al_eq_nr && self.commutative_all_equal != Some(false)
    }
}

/// Checks the element-count identities; errors unless `Aut(t)` is transitive.
pub fn stats_lemmas_check(t: &CayleyTable) -> Result<StatsReport> {
    if !automorphisms(t).is_transitive() {
        return Err(Error::NotTransitive);
    }
    Ok(stats_report(t))
}

/// The report without the transitivity precondition.
pub(crate) fn stats_report(t: &CayleyTable) -> StatsReport {
    let all: Vec<ElementStats> = (0..t.n()).map(|s| t.element_stats(s)).collect();
    let s = all[0];
    StatsReport {
        stats: s,
        constant: all.iter().all(|x| *x == s),
        nl_eq_ar: s.nl == s.ar,
        al_eq_nr: s.al == s.nr,
        commutative_all_equal: t
            .is_commutative()
            .then_some(s.nl == s.nr && s.nr == s.al && s.al == s.ar),
    }
}

/// The groupoids whose automorphism group is the full symmetric group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FullAutType {
    /// `x ∘ y = y`
    RightZero,
    /// `x ∘ y = x`
    LeftZero,
    /// the idempotent quasigroup of order 3
    IdemQuasi3,
    /// order 2, `x ∘ y` is the element other than `y`
    TwoElemFlip,
    /// order 2, `x ∘ y` is the element other than `x`
    TwoElemFlipAnti,
    NotFull,
}

fn classify_direct(t: &CayleyTable) -> Option<FullAutType> {
    let n = t.n();
    let all = |f: &dyn Fn(usize, usize) -> bool| (0..n).all(|x| (0..n).all(|y| f(x, y)));
    if all(&|x, y| t.get(x, y) == y) {
        return Some(FullAutType::RightZero);
    }
    if n == 3 && all(&|x, y| t.get(x, y) == if x == y { x } else { 3 - x - y }) {
        return Some(FullAutType::IdemQuasi3);
    }
    if n == 2 && all(&|_, y| t.get(0, y) != y && t.get(1, y) != y) {
        return Some(FullAutType::TwoElemFlip);
    }
    None
}

/// Identifies `t` (up to isomorphism or anti-isomorphism) with one of the
/// groupoid types whose automorphism group is all of `Sym(S)`.
pub fn full_aut_classification(t: &CayleyTable) -> FullAutType {
    if let Some(k) = classify_direct(t) {
        return k;
    }
    match classify_direct(&t.transpose()) {
        Some(FullAutType::RightZero) => FullAutType::LeftZero,
        Some(FullAutType::TwoElemFlip) => FullAutType::TwoElemFlipAnti,
        Some(other) => other,
        None => FullAutType::NotFull,
    }
}

/// Relabelings minimizing the row-major concatenation of the tables.
///
/// Returns one minimizing permutation and all of them; the set of minimizers
/// is a coset of the common automorphism group.
pub(crate) fn minimizing_relabelings(tables: &[&CayleyTable], fix_zero: bool) -> (Permutation, Vec<Permutation>) {
    let n = tables[0].n();
    let mut best: Option<Vec<u8>> = None;
    let mut minimizers: Vec<Permutation> = Vec::new();
    let mut cand: Vec<u8> = Vec::with_capacity(n * n * tables.len());
    let mut inv = vec![0usize; n];
    for p in Permutation::all(n, fix_zero) {
        for (i, &x) in p.images().iter().enumerate() {
            inv[x] = i;
        }
        cand.clear();
        // Ordering::Less once the candidate is already smaller than best.
        let mut state = std::cmp::Ordering::Equal;
        'build: for t in tables {
            for i in 0..n {
                for j in 0..n {
                    let v = p.apply(t.get(inv[i], inv[j])) as u8;
                    if let (Some(b), std::cmp::Ordering::Equal) = (&best, state) {
                        let idx = cand.len();
                        match v.cmp(&b[idx]) {
                            std::cmp::Ordering::Greater => {
                                state = std::cmp::Ordering::Greater;
                                break 'build;
                            }
                            std::cmp::Ordering::Less => state = std::cmp::Ordering::Less,
                            std::cmp::Ordering::Equal => {}
                        }
                    }
                    cand.push(v);
                }
            }
        }
        match (best.is_some(), state) {
            (false, _) | (true, std::cmp::Ordering::Less) => {
                best = Some(cand.clone());
                minimizers.clear();
                minimizers.push(p);
            }
            (true, std::cmp::Ordering::Equal) => minimizers.push(p),
            (true, std::cmp::Ordering::Greater) => {}
        }
    }
    (minimizers[0].clone(), minimizers)
}

fn stabilizer(n: usize, first: &Permutation, minimizers: &[Permutation]) -> PermSet {
    let back = first.inverse();
    PermSet::from_elements(n, minimizers.iter().map(|p| back.compose(p)))
}

/// The lexicographically least relabeling of the concatenated `(plus, times)`
/// tables, over all permutations or over those fixing 0, together with the
/// automorphism group of `r`.
pub fn canonical_form(r: &Ringoid, fix_zero: bool) -> (Ringoid, PermSet) {
    let (p, all) = minimizing_relabelings(&[r.plus(), r.times()], fix_zero);
    (r.relabel(&p), stabilizer(r.n(), &p, &all))
}

/// Canonical form of a single groupoid.
pub fn canonical_table(t: &CayleyTable, fix_zero: bool) -> (CayleyTable, PermSet) {
    let (p, all) = minimizing_relabelings(&[t], fix_zero);
    (t.relabel(&p), stabilizer(t.n(), &p, &all))
}

/// `a ∘ b = ½(a + b)` on `ℤ_m` for odd `m`.
pub fn midpoint_groupoid(m: usize) -> Result<CayleyTable> {
    if m == 0 || m.is_multiple_of(2) {
        return Err(Error::EvenModulus(m));
    }
    let half = m.div_ceil(2);
    Ok(CayleyTable::from_fn(m, |a, b| half * (a + b) % m))
}
