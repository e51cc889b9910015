//! Families of cyclically decreasing factors around a fixed element, strong
//! meets of weak strips, forbidden indices, and the fibers of the Demazure
//! action of `d_A`.

mod fiber;
pub mod oracle;

pub use fiber::{fiber_table, fiber_x, fiber_y, find_a0, Fiber, FiberRow};

use crate::affine::{d_elem, same_rank, u_elem, weak_leq, AffinePermutation, IndexSet, Side};
use crate::error::{Error, Result};
use crate::kcode::{maximal_right_factor, Decomposition};
use crate::shapes::{
    bounded_to_core, bounded_to_perm, perm_to_bounded, weak_strips, KBoundedPartition,
};

/// The families `Z'_{u,+}`, `Z'_{u,-}` and, for Grassmannian `u`, the
/// index sets of weak strips over `u`. Each family is sorted canonically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZSets {
    pub u: AffinePermutation,
    /// `A` with `d_A u >=_L u`.
    pub plus: Vec<IndexSet>,
    /// `A` with `d_A^-1 u <=_L u`.
    pub minus: Vec<IndexSet>,
    /// `A` with `d_A u / u` a weak strip; `None` unless `u` is Grassmannian.
    pub plus_grassmannian: Option<Vec<IndexSet>>,
}

/// Which of the three families of [`ZSets`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZFamily {
    Plus,
    Minus,
    PlusGrassmannian,
}

impl ZSets {
    pub fn family(&self, which: ZFamily) -> Option<&[IndexSet]> {
        match which {
            ZFamily::Plus => Some(&self.plus),
            ZFamily::Minus => Some(&self.minus),
            ZFamily::PlusGrassmannian => self.plus_grassmannian.as_deref(),
        }
    }

    /// The element containing every other one, if any.
    pub fn maximum(&self, which: ZFamily) -> Option<IndexSet> {
        let fam = self.family(which)?;
        let top = fam.iter().max_by_key(|a| a.len())?;
        fam.iter().all(|a| a.is_subset(top)).then_some(*top)
    }
}

pub(crate) fn in_plus(u: &AffinePermutation, a: &IndexSet) -> bool {
    d_elem(a).mul_unchecked(u).length() == u.length() + a.len()
}

pub(crate) fn in_minus(u: &AffinePermutation, a: &IndexSet) -> bool {
    let v = u_elem(a).mul_unchecked(u);
    v.length() + a.len() == u.length()
}

/// Enumerates all three families over every proper subset of `I`.
pub fn z_sets(u: &AffinePermutation) -> ZSets {
    let all = IndexSet::all(u.k()).expect("rank validated on construction");
    let plus: Vec<IndexSet> = all.iter().copied().filter(|a| in_plus(u, a)).collect();
    let minus = all.iter().copied().filter(|a| in_minus(u, a)).collect();
    let plus_grassmannian = u.is_grassmannian().then(|| {
        plus.iter()
            .copied()
            .filter(|a| d_elem(a).mul_unchecked(u).is_grassmannian())
            .collect()
    });
    ZSets {
        u: u.clone(),
        plus,
        minus,
        plus_grassmannian,
    }
}

/// `d_{A cap B} lambda`, the strong meet of the weak strips `d_A lambda` and
/// `d_B lambda`.
pub fn strips_meet(
    lambda: &KBoundedPartition,
    a: &IndexSet,
    b: &IndexSet,
) -> Result<KBoundedPartition> {
    same_rank(lambda.k(), a.k())?;
    same_rank(lambda.k(), b.k())?;
    let strips: Vec<IndexSet> = (0..=lambda.k())
        .flat_map(|r| weak_strips(lambda, r).expect("r <= k"))
        .collect();
    for x in [a, b] {
        if !strips.contains(x) {
            return Err(Error::Precondition(format!(
                "{x} does not index a weak strip over {lambda}"
            )));
        }
    }
    let w = bounded_to_perm(lambda);
    perm_to_bounded(&d_elem(&a.intersection(b)).mul_unchecked(&w))
}

/// The index `i^+` never used by a weak strip over `lambda`: the residue of
/// the rightmost cell in the first row of the core (`k` for the empty shape).
pub fn forbidden_index(lambda: &KBoundedPartition) -> usize {
    let n = lambda.k() + 1;
    let first = bounded_to_core(lambda)
        .parts()
        .first()
        .copied()
        .unwrap_or(0);
    (first + n - 1) % n
}

/// Candidates for `i^-`: indices outside the first row of `RI(w^-1)`. No
/// `A` with `d_A^-1 w <=_L w` meets this set.
pub fn forbidden_minus(w: &AffinePermutation) -> Result<Vec<usize>> {
    let row = maximal_right_factor(&w.inverse(), Decomposition::Increasing)?;
    Ok(row.complement_members())
}

/// `d_A^-1 u <=_L u`, checked through the weak order directly.
pub fn minus_by_weak_order(u: &AffinePermutation, a: &IndexSet) -> bool {
    weak_leq(&u_elem(a).mul_unchecked(u), u, Side::Left).expect("same rank")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(k: usize, m: &[usize]) -> IndexSet {
        IndexSet::new(k, m).unwrap()
    }

    fn bp(k: usize, parts: &[usize]) -> KBoundedPartition {
        KBoundedPartition::new(k, parts).unwrap()
    }

    #[test]
    fn z_sets_of_identity() {
        let e = AffinePermutation::identity(3).unwrap();
        let z = z_sets(&e);
        assert_eq!(z.plus.len(), 15);
        assert_eq!(z.minus, vec![set(3, &[])]);
    }

    #[test]
    fn z_sets_over_321() {
        let u = bounded_to_perm(&bp(3, &[3, 2, 1]));
        let z = z_sets(&u);
        let expected: Vec<IndexSet> = [&[][..], &[1], &[3], &[1, 2], &[1, 3], &[1, 2, 3]]
            .iter()
            .map(|m| set(3, m))
            .collect();
        assert_eq!(z.plus_grassmannian.as_deref(), Some(&expected[..]));
        assert!(z.minus.contains(&set(3, &[0])));
        for a in IndexSet::all(3).unwrap() {
            assert_eq!(z.minus.contains(&a), minus_by_weak_order(&u, &a));
        }
        assert_eq!(
            z.maximum(ZFamily::PlusGrassmannian),
            Some(set(3, &[1, 2, 3]))
        );
    }

    #[test]
    fn meets_of_strips() {
        let lambda = bp(3, &[3, 2, 1]);
        let a = set(3, &[1, 2]);
        let b = set(3, &[1, 3]);
        let one = bounded_to_perm(&lambda);
        let expected = perm_to_bounded(&d_elem(&set(3, &[1])).mul(&one).unwrap()).unwrap();
        assert_eq!(strips_meet(&lambda, &a, &b).unwrap(), expected);
        assert_eq!(
            strips_meet(&lambda, &a, &a).unwrap(),
            perm_to_bounded(&d_elem(&a).mul(&one).unwrap()).unwrap()
        );
        let single = bp(3, &[1]);
        assert_eq!(
            strips_meet(&single, &set(3, &[1]), &set(3, &[3])).unwrap(),
            single
        );
        assert!(strips_meet(&lambda, &set(3, &[0]), &a).is_err());
    }

    #[test]
    fn forbidden_indices() {
        assert_eq!(forbidden_index(&bp(3, &[3, 2, 1])), 0);
        assert_eq!(forbidden_index(&bp(3, &[])), 3);
        let u = bounded_to_perm(&bp(5, &[5, 3, 2, 1]));
        assert!(forbidden_minus(&u).unwrap().contains(&2));
    }
}
