use std::cmp::Ordering;
use std::fmt;

use crate::affine::check_rank;
use crate::error::{Error, Result};

fn validate_parts(parts: &[usize]) -> Result<Vec<usize>> {
    let mut parts = parts.to_vec();
    while parts.last() == Some(&0) {
        parts.pop();
    }
    if parts.windows(2).any(|p| p[0] < p[1]) {
        return Err(Error::InvalidPartition {
            parts,
            reason: "parts must be weakly decreasing".into(),
        });
    }
    if parts.contains(&0) {
        return Err(Error::InvalidPartition {
            parts,
            reason: "zero part before a positive part".into(),
        });
    }
    Ok(parts)
}

/// A partition with every part at most `k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KBoundedPartition {
    k: usize,
    parts: Vec<usize>,
}

impl KBoundedPartition {
    /// Trailing zeros are dropped.
    pub fn new(k: usize, parts: &[usize]) -> Result<Self> {
        check_rank(k)?;
        let parts = validate_parts(parts)?;
        if parts.first().is_some_and(|&p| p > k) {
            return Err(Error::InvalidPartition {
                parts,
                reason: format!("largest part exceeds k={k}"),
            });
        }
        Ok(Self { k, parts })
    }

    pub fn empty(k: usize) -> Result<Self> {
        Self::new(k, &[])
    }

    pub(crate) fn from_parts_unchecked(k: usize, parts: Vec<usize>) -> Self {
        Self { k, parts }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// All `k`-bounded partitions of `size`, in the canonical order.
    pub fn all_of_size(k: usize, size: usize) -> Result<Vec<Self>> {
        check_rank(k)?;
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill(size, k, &mut current, &mut |parts| {
            out.push(Self::from_parts_unchecked(k, parts.to_vec()))
        });
        out.sort();
        Ok(out)
    }

    /// All `k`-bounded partitions of size at most `max_size`, in the canonical
    /// order.
    pub fn all_up_to(k: usize, max_size: usize) -> Result<Vec<Self>> {
        let mut out = Vec::new();
        for size in 0..=max_size {
            out.extend(Self::all_of_size(k, size)?);
        }
        Ok(out)
    }
}

fn fill(
    remaining: usize,
    max_part: usize,
    current: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if remaining == 0 {
        emit(current);
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        current.push(p);
        fill(remaining - p, p, current, emit);
        current.pop();
    }
}

impl Ord for KBoundedPartition {
    /// By `k`, then size, then parts in decreasing lexicographic order, so
    /// `(3) < (2,1) < (1,1,1)`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.k
            .cmp(&other.k)
            .then(self.size().cmp(&other.size()))
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for KBoundedPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for KBoundedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for KBoundedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    write!(f, "(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, ")")
}

/// A `(k+1)`-core: no cell has hook length `k+1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CorePartition {
    k: usize,
    parts: Vec<usize>,
}

impl CorePartition {
    pub fn new(k: usize, parts: &[usize]) -> Result<Self> {
        check_rank(k)?;
        let parts = validate_parts(parts)?;
        let modulus = k + 1;
        if hooks(&parts).iter().flatten().any(|&h| h == modulus) {
            return Err(Error::NotACore { parts, modulus });
        }
        Ok(Self { k, parts })
    }

    pub fn empty(k: usize) -> Result<Self> {
        Self::new(k, &[])
    }

    pub(crate) fn from_parts_unchecked(k: usize, parts: Vec<usize>) -> Self {
        Self { k, parts }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Hook lengths, row by row.
    pub fn hooks(&self) -> Vec<Vec<usize>> {
        hooks(&self.parts)
    }

    /// Residue `(col - row) mod (k+1)` of the cell in 0-based `(row, col)`.
    pub fn residue(&self, row: usize, col: usize) -> usize {
        residue(self.k, row, col)
    }

    /// The conjugate partition, which is again a core.
    pub fn conjugate(&self) -> Self {
        Self {
            k: self.k,
            parts: conjugate(&self.parts),
        }
    }
}

impl fmt::Debug for CorePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "core{self}")
    }
}

impl fmt::Display for CorePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

pub(crate) fn residue(k: usize, row: usize, col: usize) -> usize {
    let n = k + 1;
    (col + n * (row / n + 1) - row) % n
}

pub(crate) fn conjugate(parts: &[usize]) -> Vec<usize> {
    let width = parts.first().copied().unwrap_or(0);
    (0..width)
        .map(|c| parts.iter().take_while(|&&p| p > c).count())
        .collect()
}

pub(crate) fn hooks(parts: &[usize]) -> Vec<Vec<usize>> {
    let cols = conjugate(parts);
    parts
        .iter()
        .enumerate()
        .map(|(r, &len)| {
            (0..len)
                .map(|c| (len - c - 1) + (cols[c] - r - 1) + 1)
                .collect()
        })
        .collect()
}
