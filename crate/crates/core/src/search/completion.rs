//! Completion of a multiplication over a fixed additive skeleton.
//!
//! Over idempotent addition, right distributivity gives `L_{a+b} = L_a ∨ L_b`
//! pointwise, so the table is fixed by the rows of the join-irreducible
//! elements. Each row is a 0-preserving join-endomorphism; branching happens
//! only over those. The row and column of the top element `∞` are chosen
//! first so the k-ideal prune can cut at depth one.

use super::skeleton::Skeleton;

/// Search options that change the branching itself.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct CompletionOptions {
    pub prune: bool,
    pub commutative: bool,
    pub associative: bool,
}

pub(crate) struct Completion<'a> {
    sk: &'a Skeleton,
    n: usize,
    opts: CompletionOptions,
    t: Vec<u8>,
    known: Vec<bool>,
    /// `sigma[i]` is the inverse of automorphism `i`.
    inverses: Vec<Vec<usize>>,
}

impl<'a> Completion<'a> {
    pub(crate) fn new(sk: &'a Skeleton, opts: CompletionOptions) -> Self {
        let n = sk.n();
        let inverses = sk.automorphisms.iter().map(|p| p.inverse().images().to_vec()).collect();
        Self {
            sk,
            n,
            opts,
            t: vec![0; n * n],
            known: vec![false; n * n],
            inverses,
        }
    }

    /// Runs the work unit whose top row is endomorphism `top_row`, calling
    /// `emit` with every Aut-canonical completed table.
    pub(crate) fn run(&mut self, top_row: usize, emit: &mut dyn FnMut(&[u8])) {
        let n = self.n;
        if n == 1 {
            if top_row == 0 {
                emit(&[0]);
            }
            return;
        }
        let sk = self.sk;
        let top = sk.top;
        let l = &sk.endomorphisms[top_row];
        self.t.iter_mut().for_each(|x| *x = 0);
        self.known.iter_mut().for_each(|x| *x = false);
        for (x, &v) in l.iter().enumerate() {
            self.known[x] = true;
            self.known[x * n] = true;
            self.t[top * n + x] = v;
            self.known[top * n + x] = true;
        }
        for r in &sk.endomorphisms {
            if r[top] != l[top] || (self.opts.commutative && r != l) {
                continue;
            }
            if self.opts.prune && (1..n).any(|x| x != top && sk.leq(l[x] as usize, x) && sk.leq(r[x] as usize, x)) {
                continue;
            }
            for (a, &v) in r.iter().enumerate() {
                self.t[a * n + top] = v;
                self.known[a * n + top] = true;
            }
            if self.opts.associative && !self.partial_associative() {
                continue;
            }
            self.descend(0, emit);
        }
    }

    fn descend(&mut self, k: usize, emit: &mut dyn FnMut(&[u8])) {
        let sk = self.sk;
        let n = self.n;
        let inner = sk.order.len() - 1;
        if k == inner {
            if self.top_row_consistent() && self.is_canonical() {
                emit(&self.t);
            }
            return;
        }
        let a = sk.order[k];
        let saved: Vec<(u8, bool)> = (0..n).map(|x| (self.t[a * n + x], self.known[a * n + x])).collect();
        if sk.join_irreducible[a] {
            let lc = sk.lower_covers[a][0];
            for c in 0..sk.endomorphisms.len() {
                let row = &sk.endomorphisms[c];
                self.restore_row(a, &saved);
                if !self.row_admissible_ji(a, lc, row) {
                    continue;
                }
                self.set_row(a, row);
                if !self.opts.associative || self.partial_associative() {
                    self.descend(k + 1, emit);
                }
            }
        } else {
            let row = self.derived_row(a);
            if self.row_matches_known(a, &row) && self.pairs_consistent(a, &row) {
                self.set_row(a, &row);
                if !self.opts.associative || self.partial_associative() {
                    self.descend(k + 1, emit);
                }
            }
        }
        self.restore_row(a, &saved);
    }

    fn restore_row(&mut self, a: usize, saved: &[(u8, bool)]) {
        let n = self.n;
        for (x, &(v, kn)) in saved.iter().enumerate() {
            self.t[a * n + x] = v;
            self.known[a * n + x] = kn;
        }
    }

    fn set_row(&mut self, a: usize, row: &[u8]) {
        let n = self.n;
        self.t[a * n..a * n + n].copy_from_slice(row);
        self.known[a * n..a * n + n].iter_mut().for_each(|k| *k = true);
    }

    fn row_admissible_ji(&self, a: usize, lc: usize, row: &[u8]) -> bool {
        let sk = self.sk;
        let n = self.n;
        let top = sk.top;
        if row[top] != self.t[a * n + top] {
            return false;
        }
        for (x, &v) in row.iter().enumerate() {
            // row_lc ≤ row ≤ row_top
            if !sk.leq(self.t[lc * n + x] as usize, v as usize) || !sk.leq(v as usize, self.t[top * n + x] as usize) {
                return false;
            }
        }
        !self.opts.commutative || self.symmetric_with_known(a, row)
    }

    fn symmetric_with_known(&self, a: usize, row: &[u8]) -> bool {
        let n = self.n;
        (0..n).all(|b| !self.known[b * n + a] || self.t[b * n + a] == row[b])
    }

    fn derived_row(&self, a: usize) -> Vec<u8> {
        let n = self.n;
        let covers = &self.sk.lower_covers[a];
        (0..n)
            .map(|x| {
                covers
                    .iter()
                    .fold(0usize, |acc, &c| self.sk.plus.get(acc, self.t[c * n + x] as usize)) as u8
            })
            .collect()
    }

    /// A derived row must agree with the preset column of `∞` and, under
    /// commutativity, with the transposed known cells.
    fn row_matches_known(&self, a: usize, row: &[u8]) -> bool {
        let n = self.n;
        row[self.sk.top] == self.t[a * n + self.sk.top] && (!self.opts.commutative || self.symmetric_with_known(a, row))
    }

    fn pairs_consistent(&self, a: usize, row: &[u8]) -> bool {
        let n = self.n;
        let plus = &self.sk.plus;
        self.sk.join_pairs[a].iter().all(|&(b, c)| {
            (0..n).all(|x| plus.get(self.t[b * n + x] as usize, self.t[c * n + x] as usize) == row[x] as usize)
        })
    }

    fn top_row_consistent(&self) -> bool {
        let sk = self.sk;
        let n = self.n;
        let top = sk.top;
        let row: Vec<u8> = self.t[top * n..top * n + n].to_vec();
        if sk.join_irreducible[top] {
            let lc = sk.lower_covers[top][0];
            (0..n).all(|x| sk.leq(self.t[lc * n + x] as usize, row[x] as usize))
        } else {
            self.derived_row(top) == row && self.pairs_consistent(top, &row)
        }
    }

    fn partial_associative(&self) -> bool {
        let n = self.n;
        let (t, k) = (&self.t, &self.known);
        for x in 0..n {
            for y in 0..n {
                if !k[x * n + y] {
                    continue;
                }
                let xy = t[x * n + y] as usize;
                for z in 0..n {
                    if !k[y * n + z] || !k[xy * n + z] {
                        continue;
                    }
                    let yz = t[y * n + z] as usize;
                    if k[x * n + yz] && t[xy * n + z] != t[x * n + yz] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Lexicographic minimality among the images under the skeleton's
    /// automorphisms (which all fix 0).
    fn is_canonical(&self) -> bool {
        let n = self.n;
        let t = &self.t;
        'perm: for (p, inv) in self.sk.automorphisms.iter().zip(&self.inverses) {
            for i in 0..n {
                for j in 0..n {
                    let image = p.apply(t[inv[i] * n + inv[j]] as usize) as u8;
                    let own = t[i * n + j];
                    if image < own {
                        return false;
                    }
                    if image > own {
                        continue 'perm;
                    }
                }
            }
        }
        true
    }
}
