use std::fmt;

use crate::error::{Error, Result};
use crate::table::MAX_ORDER;

/// A subset of the carrier `0..n`, as a 64-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetMask {
    n: u8,
    bits: u64,
}

impl SubsetMask {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_ORDER);
        Self { n: n as u8, bits: 0 }
    }

    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ORDER);
        let bits = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Self { n: n as u8, bits }
    }

    pub fn singleton(n: usize, a: usize) -> Self {
        let mut s = Self::empty(n);
        s.insert(a);
        s
    }

    pub fn from_bits(n: usize, bits: u64) -> Self {
        let full = Self::full(n);
        Self {
            n: n as u8,
            bits: bits & full.bits,
        }
    }

    pub fn from_elements(n: usize, elements: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut s = Self::empty(n);
        for e in elements {
            if e >= n {
                return Err(Error::ElementOutOfRange { element: e, n });
            }
            s.insert(e);
        }
        Ok(s)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn contains(&self, a: usize) -> bool {
        self.bits >> a & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, a: usize) {
        debug_assert!(a < self.n());
        self.bits |= 1 << a;
    }

    pub fn remove(&mut self, a: usize) {
        self.bits &= !(1 << a);
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        *self == Self::full(self.n())
    }

    pub fn complement(&self) -> Self {
        Self::from_bits(self.n(), !self.bits)
    }

    pub fn union(&self, other: &Self) -> Self {
        Self::from_bits(self.n(), self.bits | other.bits)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Self::from_bits(self.n(), self.bits & other.bits)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let mut rest = self.bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let a = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(a)
            }
        })
    }

    pub fn elements(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|a| a.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basics() {
        let s = SubsetMask::from_elements(5, [0, 3]).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.elements(), vec![0, 3]);
        assert_eq!(s.complement().elements(), vec![1, 2, 4]);
        assert_eq!(s.to_string(), "{0,3}");
        assert!(SubsetMask::full(64).is_full());
        assert!(SubsetMask::from_elements(3, [3]).is_err());
    }

    proptest! {
        #[test]
        fn complement_partitions_carrier(n in 1usize..=64, bits in any::<u64>()) {
            let s = SubsetMask::from_bits(n, bits);
            let c = s.complement();
            prop_assert!(s.intersection(&c).is_empty());
            prop_assert!(s.union(&c).is_full());
            prop_assert_eq!(s.len() + c.len(), n);
        }
    }
}
