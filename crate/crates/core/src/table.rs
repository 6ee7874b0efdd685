//! Cayley tables of finite groupoids.
//!
//! Elements of a carrier of size `n` are the integers `0..n`. A table stores
//! `a ∘ b` at row `a`, column `b`; row `a` is the left translation `x ↦ a ∘ x`
//! and column `a` the right translation `x ↦ x ∘ a`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest carrier size a table may have (subset masks are 64 bits wide).
pub const MAX_ORDER: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct CayleyTable {
    n: usize,
    entries: Vec<u8>,
}

/// Per-element neutral/absorbing counts of a groupoid.
///
/// For an element `s`: `nl = |{x : s∘x = x}|`, `nr = |{x : x∘s = x}|`,
/// `al = |{x : s∘x = s}|`, `ar = |{x : x∘s = s}|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ElementStats {
    pub nl: usize,
    pub nr: usize,
    pub al: usize,
    pub ar: usize,
}

impl ElementStats {
    pub fn as_tuple(&self) -> (usize, usize, usize, usize) {
        (self.nl, self.nr, self.al, self.ar)
    }
}

impl CayleyTable {
    /// Builds a table from row-major entries.
    pub fn new(n: usize, entries: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        if n > MAX_ORDER {
            return Err(Error::CarrierTooLarge { n, max: MAX_ORDER });
        }
        if entries.len() != n * n {
            return Err(Error::WrongEntryCount {
                expected: n * n,
                got: entries.len(),
            });
        }
        let mut packed = Vec::with_capacity(n * n);
        for (i, &v) in entries.iter().enumerate() {
            if v >= n {
                return Err(Error::EntryOutOfRange {
                    row: i / n,
                    col: i % n,
                    value: v,
                    n,
                });
            }
            packed.push(v as u8);
        }
        Ok(Self { n, entries: packed })
    }

    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::WrongEntryCount {
                    expected: n * n,
                    got: i * n + row.len(),
                });
            }
            entries.extend_from_slice(row);
        }
        Self::new(n, entries)
    }

    /// Builds the table of `f` on `0..n`; panics if `f` leaves the carrier.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> usize) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                entries.push(f(a, b));
            }
        }
        Self::new(n, entries).expect("operation must stay inside the carrier")
    }

    /// Internal constructor for already validated byte entries.
    pub(crate) fn from_bytes(n: usize, entries: Vec<u8>) -> Self {
        debug_assert_eq!(entries.len(), n * n);
        debug_assert!(entries.iter().all(|&v| (v as usize) < n));
        Self { n, entries }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> usize {
        self.entries[a * self.n + b] as usize
    }

    pub fn bytes(&self) -> &[u8] {
        &self.entries
    }

    /// The left translation `L_a` as an image list.
    pub fn row(&self, a: usize) -> Vec<usize> {
        (0..self.n).map(|x| self.get(a, x)).collect()
    }

    /// The right translation `R_a` as an image list.
    pub fn column(&self, a: usize) -> Vec<usize> {
        (0..self.n).map(|x| self.get(x, a)).collect()
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|a| self.row(a)).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |a, b| self.get(b, a))
    }

    pub fn check_element(&self, a: usize) -> Result<()> {
        if a >= self.n {
            Err(Error::ElementOutOfRange { element: a, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n).all(|a| (a + 1..self.n).all(|b| self.get(a, b) == self.get(b, a)))
    }

    pub fn is_associative(&self) -> bool {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                let ab = self.get(a, b);
                for c in 0..n {
                    if self.get(ab, c) != self.get(a, self.get(b, c)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_idempotent(&self) -> bool {
        (0..self.n).all(|a| self.get(a, a) == a)
    }

    /// Every row and every column is a permutation (Latin square).
    pub fn is_quasigroup(&self) -> bool {
        let n = self.n;
        let mut seen = vec![false; n];
        for a in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for x in 0..n {
                let v = self.get(a, x);
                if seen[v] {
                    return false;
                }
                seen[v] = true;
            }
            seen.iter_mut().for_each(|s| *s = false);
            for x in 0..n {
                let v = self.get(x, a);
                if seen[v] {
                    return false;
                }
                seen[v] = true;
            }
        }
        true
    }

    /// `a∘b = a∘c ⇒ b = c` and `b∘a = c∘a ⇒ b = c`.
    pub fn is_cancellative(&self) -> bool {
        let n = self.n;
        let mut seen = vec![false; n];
        for a in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            if (0..n).any(|x| std::mem::replace(&mut seen[self.get(a, x)], true)) {
                return false;
            }
            seen.iter_mut().for_each(|s| *s = false);
            if (0..n).any(|x| std::mem::replace(&mut seen[self.get(x, a)], true)) {
                return false;
            }
        }
        true
    }

    /// The unique two-sided neutral element, if any.
    pub fn neutral_element(&self) -> Option<usize> {
        (0..self.n).find(|&e| (0..self.n).all(|x| self.get(e, x) == x && self.get(x, e) == x))
    }

    /// The unique two-sided absorbing element, if any.
    pub fn absorbing_element(&self) -> Option<usize> {
        (0..self.n).find(|&o| (0..self.n).all(|x| self.get(o, x) == o && self.get(x, o) == o))
    }

    /// A group: associative, with neutral element and two-sided inverses.
    pub fn is_group(&self) -> bool {
        let Some(e) = self.neutral_element() else {
            return false;
        };
        self.is_associative() && (0..self.n).all(|a| (0..self.n).any(|b| self.get(a, b) == e && self.get(b, a) == e))
    }

    pub fn element_stats(&self, s: usize) -> ElementStats {
        let n = self.n;
        ElementStats {
            nl: (0..n).filter(|&x| self.get(s, x) == x).count(),
            nr: (0..n).filter(|&x| self.get(x, s) == x).count(),
            al: (0..n).filter(|&x| self.get(s, x) == s).count(),
            ar: (0..n).filter(|&x| self.get(x, s) == s).count(),
        }
    }

    /// The distinct values of `a, 2a, 3a, …` where `(k+1)a = ka + a`, in
    /// order of first appearance. Stops at the first repetition, so the
    /// sequence's preperiod and period are both covered.
    pub fn multiples(&self, a: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut cur = a;
        while !seen[cur] {
            seen[cur] = true;
            out.push(cur);
            cur = self.get(cur, a);
        }
        out
    }

    /// The `k`-fold sum `ka` with `1a = a` and `(k+1)a = ka + a`.
    pub fn nfold_sum(&self, a: usize, k: u64) -> Result<usize> {
        if k == 0 {
            return Err(Error::ZeroMultiple);
        }
        self.check_element(a)?;
        // ka is a deterministic orbit of x ↦ x + a, so it is eventually periodic.
        let orbit = self.multiples(a);
        let next = self.get(*orbit.last().unwrap(), a);
        let start = orbit.iter().position(|&v| v == next).unwrap();
        let idx = (k - 1) as usize;
        if (k - 1) < orbit.len() as u64 {
            return Ok(orbit[idx]);
        }
        let period = (orbit.len() - start) as u64;
        let offset = ((k - 1) - start as u64) % period;
        Ok(orbit[start + offset as usize])
    }
}

impl TryFrom<Vec<Vec<usize>>> for CayleyTable {
    type Error = Error;

    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        Self::from_rows(&rows)
    }
}

impl From<CayleyTable> for Vec<Vec<usize>> {
    fn from(t: CayleyTable) -> Self {
        t.rows()
    }
}

impl fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

impl fmt::Display for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|b| self.get(a, b).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}
