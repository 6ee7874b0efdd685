//! Seedable random generators for property tests and sampling.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::perm::Permutation;
use crate::ringoid::Ringoid;
use crate::table::CayleyTable;

const UNSET: u8 = u8::MAX;

/// A random finite join-semilattice with bottom (a commutative idempotent
/// monoid with neutral element 0), built as a union-closed family of subsets
/// containing the empty set, randomly relabeled with the empty set kept at 0.
pub fn random_semilattice<R: Rng + ?Sized>(n: usize, rng: &mut R) -> CayleyTable {
    assert!((1..=32).contains(&n), "order out of range");
    let ground = (usize::BITS - (n - 1).leading_zeros()).max(1) as usize + 1;
    loop {
        let mut family: Vec<u64> = vec![0];
        while family.len() < n {
            let s = rng.gen_range(1..(1u64 << ground));
            if family.contains(&s) {
                continue;
            }
            let mut next = family.clone();
            let mut i = 0;
            next.push(s);
            while i < next.len() {
                let x = next[i];
                for j in 0..next.len() {
                    let u = x | next[j];
                    if !next.contains(&u) {
                        next.push(u);
                    }
                }
                i += 1;
            }
            if next.len() <= n {
                family = next;
            } else if family.len() + 1 == n || rng.gen_bool(0.1) {
                break;
            }
        }
        if family.len() != n {
            continue;
        }
        let mut labels: Vec<usize> = (1..n).collect();
        labels.shuffle(rng);
        labels.insert(0, 0);
        let mut t = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                let u = family[i] | family[j];
                let k = family.iter().position(|&x| x == u).unwrap();
                t[labels[i] * n + labels[j]] = labels[k];
            }
        }
        return CayleyTable::new(n, t).unwrap();
    }
}

/// A random commutative semigroup of order `n` (backtracking with random
/// value order). Intended for `n ≤ 5`.
pub fn random_commutative_semigroup<R: Rng + ?Sized>(n: usize, rng: &mut R) -> CayleyTable {
    assert!(n >= 1);
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
    loop {
        let mut t = vec![UNSET; n * n];
        let mut budget = 20_000usize;
        if fill_semigroup(n, &cells, 0, &mut t, rng, &mut budget) {
            return CayleyTable::from_bytes(n, t);
        }
    }
}

fn fill_semigroup<R: Rng + ?Sized>(
    n: usize,
    cells: &[(usize, usize)],
    k: usize,
    t: &mut [u8],
    rng: &mut R,
    budget: &mut usize,
) -> bool {
    if k == cells.len() {
        return true;
    }
    if *budget == 0 {
        return false;
    }
    *budget -= 1;
    let (a, b) = cells[k];
    let mut values: Vec<usize> = (0..n).collect();
    values.shuffle(rng);
    for v in values {
        t[a * n + b] = v as u8;
        t[b * n + a] = v as u8;
        if partial_associative(n, t) && fill_semigroup(n, cells, k + 1, t, rng, budget) {
            return true;
        }
    }
    t[a * n + b] = UNSET;
    t[b * n + a] = UNSET;
    false
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

/// A random multiplication distributing over `plus` on both sides. A solution
/// always exists (a constant table at an idempotent of `plus`), so this
/// terminates; restarts bound the time spent in bad subtrees.
pub fn random_distributive_times<R: Rng + ?Sized>(plus: &CayleyTable, rng: &mut R) -> CayleyTable {
    let n = plus.n();
    let mut cells: Vec<usize> = (0..n * n).collect();
    loop {
        cells.shuffle(rng);
        let mut t = vec![UNSET; n * n];
        let mut budget = 50_000usize;
        if fill_times(plus, &cells, 0, &mut t, rng, &mut budget) {
            return CayleyTable::from_bytes(n, t);
        }
    }
}

fn fill_times<R: Rng + ?Sized>(
    plus: &CayleyTable,
    cells: &[usize],
    k: usize,
    t: &mut [u8],
    rng: &mut R,
    budget: &mut usize,
) -> bool {
    if k == cells.len() {
        return true;
    }
    if *budget == 0 {
        return false;
    }
    *budget -= 1;
    let n = plus.n();
    let cell = cells[k];
    let mut values: Vec<usize> = (0..n).collect();
    values.shuffle(rng);
    for v in values {
        t[cell] = v as u8;
        if distributive_around(plus, t, cell / n, cell % n) && fill_times(plus, cells, k + 1, t, rng, budget) {
            return true;
        }
    }
    t[cell] = UNSET;
    false
}

/// Checks the distributive laws that involve row `a` or column `b` and whose
/// cells are all set.
fn distributive_around(plus: &CayleyTable, t: &[u8], a: usize, b: usize) -> bool {
    let n = plus.n();
    for y in 0..n {
        for z in 0..n {
            let s = plus.get(y, z);
            // a*(y+z) = a*y + a*z
            let (l, p, q) = (t[a * n + s], t[a * n + y], t[a * n + z]);
            if l != UNSET && p != UNSET && q != UNSET && plus.get(p as usize, q as usize) != l as usize {
                return false;
            }
            // (y+z)*b = y*b + z*b
            let (l, p, q) = (t[s * n + b], t[y * n + b], t[z * n + b]);
            if l != UNSET && p != UNSET && q != UNSET && plus.get(p as usize, q as usize) != l as usize {
                return false;
            }
        }
    }
    true
}

/// A random semiring with idempotent addition and neutral element 0.
pub fn random_idempotent_semiring<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Ringoid {
    let plus = random_semilattice(n, rng);
    let times = random_distributive_times(&plus, rng);
    Ringoid::new(plus, times).expect("generator produced a non-distributive table")
}

/// A random semiring (commutative semigroup addition, arbitrary distributive
/// multiplication).
pub fn random_semiring<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Ringoid {
    let plus = random_commutative_semigroup(n, rng);
    let times = random_distributive_times(&plus, rng);
    Ringoid::new(plus, times).expect("generator produced a non-distributive table")
}

/// A uniformly random permutation of `0..n`.
pub fn random_permutation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Permutation {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    Permutation::from_vec_unchecked(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_produce_valid_structures() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(1..=5);
            let l = random_semilattice(n, &mut rng);
            assert!(l.is_commutative() && l.is_associative() && l.is_idempotent());
            assert_eq!(l.neutral_element(), Some(0));
            let s = random_commutative_semigroup(n, &mut rng);
            assert!(s.is_commutative() && s.is_associative());
            let r = random_semiring(n, &mut rng);
            assert!(r.is_semiring());
            let r = random_idempotent_semiring(n, &mut rng);
            assert!(r.is_semiring() && r.flags().plus_idempotent);
        }
    }

    #[test]
    fn semilattices_cover_the_lattices_of_order_5() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut seen = std::collections::BTreeSet::new();
        for _ in 0..2000 {
            seen.insert(crate::symmetry::canonical_table(&random_semilattice(5, &mut rng), true).0);
        }
        assert_eq!(seen.len(), 5);
    }
}
