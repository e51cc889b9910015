use std::cmp::Ordering;
use std::fmt;

use super::check_rank;
use crate::error::{Error, Result};

/// A proper subset `A` of `I = Z/(k+1)`, the label of `d_A`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct IndexSet {
    k: usize,
    bits: u32,
}

impl IndexSet {
    pub fn new(k: usize, members: &[usize]) -> Result<Self> {
        check_rank(k)?;
        let mut bits = 0u32;
        for &i in members {
            if i > k {
                return Err(Error::LetterOutOfRange { letter: i, k });
            }
            bits |= 1 << i;
        }
        Self::from_bits(k, bits)
    }

    pub fn empty(k: usize) -> Result<Self> {
        check_rank(k)?;
        Ok(Self::empty_unchecked(k))
    }

    pub(crate) fn empty_unchecked(k: usize) -> Self {
        Self { k, bits: 0 }
    }

    pub fn from_bits(k: usize, bits: u32) -> Result<Self> {
        check_rank(k)?;
        let full = full_mask(k);
        if bits & !full != 0 {
            return Err(Error::Precondition(format!(
                "bit mask {bits:#b} has members beyond k={k}"
            )));
        }
        if bits == full {
            return Err(Error::FullIndexSet { k });
        }
        Ok(Self { k, bits })
    }

    /// The interval `[p, q] = {p, p+1, ..., q}` taken cyclically.
    pub fn interval(k: usize, p: usize, len: usize) -> Result<Self> {
        check_rank(k)?;
        let n = k + 1;
        let members: Vec<usize> = (0..len).map(|j| (p + j) % n).collect();
        Self::new(k, &members)
    }

    /// All proper subsets of `I`, ordered canonically.
    pub fn all(k: usize) -> Result<Vec<Self>> {
        check_rank(k)?;
        let full = full_mask(k);
        let mut all: Vec<Self> = (0..full).map(|bits| Self { k, bits }).collect();
        all.sort();
        Ok(all)
    }

    /// All proper subsets of size `r`, ordered canonically.
    pub fn all_of_size(k: usize, r: usize) -> Result<Vec<Self>> {
        Ok(Self::all(k)?.into_iter().filter(|a| a.len() == r).collect())
    }

    /// All subsets of `self` (each is automatically proper).
    pub fn subsets(&self) -> Vec<Self> {
        let mut out = Vec::with_capacity(1 << self.len());
        let mut sub = self.bits;
        loop {
            out.push(Self {
                k: self.k,
                bits: sub,
            });
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & self.bits;
        }
        out.sort();
        out
    }

    pub(crate) fn insert_unchecked(&mut self, i: usize) {
        self.bits |= 1 << i;
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        i <= self.k && self.bits & (1 << i) != 0
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..=self.k).filter(move |&i| self.contains(i))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Self {
            k: self.k,
            bits: self.bits & other.bits,
        }
    }

    /// `None` when the union is all of `I`.
    pub fn union(&self, other: &Self) -> Option<Self> {
        Self::from_bits(self.k, self.bits | other.bits).ok()
    }

    pub fn with(&self, i: usize) -> Option<Self> {
        Self::from_bits(self.k, self.bits | (1 << i)).ok()
    }

    pub fn without(&self, i: usize) -> Self {
        Self {
            k: self.k,
            bits: self.bits & !(1 << i),
        }
    }

    /// `I \ A`, which may be all of `I` (returned as raw members).
    pub fn complement_members(&self) -> Vec<usize> {
        (0..=self.k).filter(|&i| !self.contains(i)).collect()
    }

    /// `A + t`.
    pub fn shift(&self, t: usize) -> Self {
        let n = self.k + 1;
        let mut out = Self::empty_unchecked(self.k);
        for i in self.iter() {
            out.insert_unchecked((i + t) % n);
        }
        out
    }

    /// A word listing `A` so that `j` never precedes `j+1`: start just below
    /// some index missing from `A` and walk downwards.
    pub fn cyclically_decreasing_word(&self) -> Vec<usize> {
        let n = self.k + 1;
        let gap = (0..n)
            .find(|&i| !self.contains(i))
            .expect("index set is proper");
        (1..n)
            .map(|m| (gap + n - m) % n)
            .filter(|&i| self.contains(i))
            .collect()
    }

    /// No element of `self` is equal or adjacent (mod `k+1`) to an element of
    /// `other`.
    pub fn strongly_disjoint(&self, other: &Self) -> bool {
        let n = self.k + 1;
        self.iter().all(|i| {
            other
                .iter()
                .all(|j| i != j && (i + 1) % n != j && (j + 1) % n != i)
        })
    }
}

fn full_mask(k: usize) -> u32 {
    if k + 1 >= 32 {
        u32::MAX
    } else {
        (1u32 << (k + 1)) - 1
    }
}

impl Ord for IndexSet {
    /// By size, then lexicographically on the ascending member list.
    fn cmp(&self, other: &Self) -> Ordering {
        self.k
            .cmp(&other.k)
            .then(self.len().cmp(&other.len()))
            .then_with(|| self.to_vec().cmp(&other.to_vec()))
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (pos, i) in self.iter().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_set_rejected() {
        assert!(matches!(
            IndexSet::new(2, &[0, 1, 2]),
            Err(Error::FullIndexSet { k: 2 })
        ));
        assert!(IndexSet::new(2, &[0, 2]).is_ok());
        assert!(IndexSet::new(2, &[3]).is_err());
    }

    #[test]
    fn counts() {
        assert_eq!(IndexSet::all(3).unwrap().len(), 15);
        assert_eq!(IndexSet::all_of_size(3, 2).unwrap().len(), 6);
        let a = IndexSet::new(4, &[0, 2, 3]).unwrap();
        assert_eq!(a.subsets().len(), 8);
    }

    #[test]
    fn union_may_be_full() {
        let a = IndexSet::new(2, &[0, 1]).unwrap();
        let b = IndexSet::new(2, &[2]).unwrap();
        assert!(a.union(&b).is_none());
        assert_eq!(a.intersection(&b), IndexSet::empty(2).unwrap());
    }

    #[test]
    fn decreasing_words_avoid_ascents() {
        for k in 1..=5 {
            for a in IndexSet::all(k).unwrap() {
                let word = a.cyclically_decreasing_word();
                assert_eq!(word.len(), a.len());
                for (p, &i) in word.iter().enumerate() {
                    let next = (i + 1) % (k + 1);
                    assert!(!word[p + 1..].contains(&next), "{a} -> {word:?}");
                }
            }
        }
    }

    #[test]
    fn strong_disjointness() {
        let a = IndexSet::new(3, &[0]).unwrap();
        let b = IndexSet::new(3, &[2]).unwrap();
        let c = IndexSet::new(3, &[1]).unwrap();
        assert!(a.strongly_disjoint(&b));
        assert!(!a.strongly_disjoint(&c));
        assert!(!a.strongly_disjoint(&a));
    }

    #[test]
    fn shift_wraps() {
        let a = IndexSet::new(3, &[2, 3]).unwrap();
        assert_eq!(a.shift(1).to_vec(), vec![0, 3]);
    }
}
