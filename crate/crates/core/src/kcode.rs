//! k-codes and the maximal cyclically decreasing/increasing decompositions.

use std::fmt;

use crate::affine::{check_rank, d_elem, u_elem, AffinePermutation, IndexSet};
use crate::error::{Error, Result};
use crate::shapes::KBoundedPartition;

/// A function `I -> Z>=0` vanishing somewhere, stored as `values[i]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KCode {
    k: usize,
    values: Vec<usize>,
}

/// Which kind of cyclic factor a row of the diagram stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decomposition {
    Decreasing,
    Increasing,
}

impl KCode {
    pub fn new(k: usize, values: Vec<usize>) -> Result<Self> {
        check_rank(k)?;
        if values.len() != k + 1 {
            return Err(Error::KCode(format!(
                "expected {} values, got {}",
                k + 1,
                values.len()
            )));
        }
        if !values.contains(&0) {
            return Err(Error::KCode(format!("{values:?} has no zero entry")));
        }
        Ok(Self { k, values })
    }

    pub fn zero(k: usize) -> Result<Self> {
        check_rank(k)?;
        Ok(Self {
            k,
            values: vec![0; k + 1],
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn total(&self) -> usize {
        self.values.iter().sum()
    }

    /// All k-codes whose values sum to `total`.
    pub fn all_with_sum(k: usize, total: usize) -> Result<Vec<Self>> {
        check_rank(k)?;
        let mut out = Vec::new();
        let mut current = vec![0; k + 1];
        compositions(total, 0, &mut current, &mut |v| {
            if v.contains(&0) {
                out.push(Self {
                    k,
                    values: v.to_vec(),
                });
            }
        });
        Ok(out)
    }

    /// Row `j` (bottom row is `j = 0`) holds the columns `i` with
    /// `values[i] > j`, labelled `i - j` (decreasing) or `j - i` (increasing).
    pub fn rows(&self, kind: Decomposition) -> Vec<IndexSet> {
        let n = self.k + 1;
        let height = self.values.iter().copied().max().unwrap_or(0);
        (0..height)
            .map(|j| {
                let mut row = IndexSet::empty_unchecked(self.k);
                for (i, &v) in self.values.iter().enumerate() {
                    if v > j {
                        let label = match kind {
                            Decomposition::Decreasing => (i + n * (j / n + 1) - j) % n,
                            Decomposition::Increasing => (j + n - i) % n,
                        };
                        row.insert_unchecked(label);
                    }
                }
                row
            })
            .collect()
    }

    /// The element `d_{B_m} ... d_{B_1}` (or with `u` factors), where `B_1`
    /// is the bottom row.
    pub fn to_perm(&self, kind: Decomposition) -> AffinePermutation {
        let mut w = AffinePermutation::identity_unchecked(self.k);
        for row in self.rows(kind) {
            let factor = match kind {
                Decomposition::Decreasing => d_elem(&row),
                Decomposition::Increasing => u_elem(&row),
            };
            w = factor.mul_unchecked(&w);
        }
        w
    }

    /// `sh(alpha)_j = |{i : alpha_i >= j}|`.
    pub fn sh(&self) -> KBoundedPartition {
        let height = self.values.iter().copied().max().unwrap_or(0);
        let parts = (1..=height)
            .map(|j| self.values.iter().filter(|&&v| v >= j).count())
            .collect();
        KBoundedPartition::from_parts_unchecked(self.k, parts)
    }
}

fn compositions(
    remaining: usize,
    pos: usize,
    current: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if pos + 1 == current.len() {
        current[pos] = remaining;
        emit(current);
        current[pos] = 0;
        return;
    }
    for v in 0..=remaining {
        current[pos] = v;
        compositions(remaining - v, pos + 1, current, emit);
    }
    current[pos] = 0;
}

impl fmt::Debug for KCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for KCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `RD(w)`.
pub fn rd(w: &AffinePermutation) -> Result<KCode> {
    decompose(w, Decomposition::Decreasing)
}

/// `RI(w)`.
pub fn ri(w: &AffinePermutation) -> Result<KCode> {
    decompose(w, Decomposition::Increasing)
}

/// The unique largest `A` such that the cyclic factor of `A` splits off `w`
/// on the right with lengths adding up.
pub fn maximal_right_factor(w: &AffinePermutation, kind: Decomposition) -> Result<IndexSet> {
    let k = w.k();
    let len = w.length();
    for size in (0..=k).rev() {
        let found: Vec<IndexSet> = IndexSet::all_of_size(k, size)?
            .into_iter()
            .filter(|a| {
                let inv = match kind {
                    Decomposition::Decreasing => u_elem(a),
                    Decomposition::Increasing => d_elem(a),
                };
                w.mul_unchecked(&inv).length() + size == len
            })
            .collect();
        match found.len() {
            0 => continue,
            1 => return Ok(found[0]),
            _ => {
                return Err(Error::KCode(format!(
                    "several maximal factors of size {size} for {w}: {found:?}"
                )))
            }
        }
    }
    unreachable!("the empty set always qualifies")
}

fn decompose(w: &AffinePermutation, kind: Decomposition) -> Result<KCode> {
    let k = w.k();
    let n = k + 1;
    let mut rows = Vec::new();
    let mut rest = w.clone();
    while !rest.is_identity() {
        let a = maximal_right_factor(&rest, kind)?;
        let inv = match kind {
            Decomposition::Decreasing => u_elem(&a),
            Decomposition::Increasing => d_elem(&a),
        };
        rest = rest.mul_unchecked(&inv);
        rows.push(a);
    }
    let label = |i: usize, j: usize| match kind {
        Decomposition::Decreasing => (i + n * (j / n + 1) - j) % n,
        Decomposition::Increasing => (j + n - i) % n,
    };
    let values: Vec<usize> = (0..n)
        .map(|i| {
            (0..rows.len())
                .take_while(|&j| rows[j].contains(label(i, j)))
                .count()
        })
        .collect();
    let code = KCode { k, values };
    if !code.values.contains(&0) || code.rows(kind) != rows {
        return Err(Error::KCode(format!(
            "rows {rows:?} of {w} do not form a justified diagram"
        )));
    }
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(k: usize, word: &[usize]) -> AffinePermutation {
        AffinePermutation::from_word(k, word).unwrap()
    }

    #[test]
    fn rd_ri_worked_example() {
        let x = w(3, &[0, 1, 3, 2, 0, 3, 2, 1, 0]);
        assert_eq!(x, w(3, &[1, 0, 3, 1, 2, 0, 1, 3, 0]));
        let d = rd(&x).unwrap();
        let i = ri(&x).unwrap();
        assert_eq!(d.values(), &[5, 3, 1, 0]);
        assert_eq!(i.values(), &[6, 3, 0, 0]);
        assert_eq!(d.sh().parts(), &[3, 2, 2, 1, 1]);
        assert_eq!(i.sh().parts(), &[2, 2, 2, 1, 1, 1]);
        assert_eq!(d.to_perm(Decomposition::Decreasing), x);
        assert_eq!(i.to_perm(Decomposition::Increasing), x);
    }

    #[test]
    fn rows_of_figure_code() {
        let code = KCode::new(4, vec![0, 2, 0, 1, 3]).unwrap();
        let rows: Vec<Vec<usize>> = code
            .rows(Decomposition::Decreasing)
            .iter()
            .map(|r| r.to_vec())
            .collect();
        assert_eq!(rows, vec![vec![1, 3, 4], vec![0, 3], vec![2]]);
        assert_eq!(rd(&code.to_perm(Decomposition::Decreasing)).unwrap(), code);
    }

    #[test]
    fn identity_and_single_rows() {
        assert_eq!(rd(&w(3, &[])).unwrap(), KCode::zero(3).unwrap());
        for a in IndexSet::all(3).unwrap() {
            let code = rd(&d_elem(&a)).unwrap();
            let indicator: Vec<usize> = (0..=3).map(|i| a.contains(i) as usize).collect();
            assert_eq!(code.values(), &indicator[..]);
        }
    }

    #[test]
    fn code_validation() {
        assert!(KCode::new(2, vec![1, 1, 1]).is_err());
        assert!(KCode::new(2, vec![1, 0]).is_err());
        assert_eq!(KCode::all_with_sum(2, 2).unwrap().len(), 3 + 3);
    }
}
