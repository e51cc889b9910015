use super::{bounded_to_perm, perm_to_bounded_unchecked, KBoundedPartition};
use crate::affine::{d_elem, demazure, AffinePermutation, IndexSet};
use crate::error::{Error, Result};

/// A weak strip `top / base` of size `|indices|` with `top = d_A base`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeakStrip {
    pub base: KBoundedPartition,
    pub indices: IndexSet,
    pub top: KBoundedPartition,
}

fn check_r(k: usize, r: usize) -> Result<()> {
    if r > k {
        return Err(Error::OutOfRange {
            name: "r",
            value: r,
            min: 0,
            max: k,
        });
    }
    Ok(())
}

/// Index sets `A` of size `r` with `d_A w_lambda` Grassmannian and
/// `d_A w_lambda >=_L w_lambda`, in canonical order.
pub fn weak_strips(lambda: &KBoundedPartition, r: usize) -> Result<Vec<IndexSet>> {
    let k = lambda.k();
    check_r(k, r)?;
    let w = bounded_to_perm(lambda);
    Ok(weak_strips_of(&w, r))
}

pub(crate) fn weak_strips_of(w: &AffinePermutation, r: usize) -> Vec<IndexSet> {
    let len = w.length();
    IndexSet::all_of_size(w.k(), r)
        .expect("rank already validated")
        .into_iter()
        .filter(|a| {
            let v = d_elem(a).mul_unchecked(w);
            v.length() == len + r && v.is_grassmannian()
        })
        .collect()
}

/// Weak strips of size `r` over `lambda`, with their tops.
pub fn weak_strip_list(lambda: &KBoundedPartition, r: usize) -> Result<Vec<WeakStrip>> {
    let w = bounded_to_perm(lambda);
    Ok(weak_strips(lambda, r)?
        .into_iter()
        .map(|a| WeakStrip {
            base: lambda.clone(),
            indices: a,
            top: perm_to_bounded_unchecked(&d_elem(&a).mul_unchecked(&w)),
        })
        .collect())
}

/// Pairs `(A, d_A * w)` with `|A| = r` and `d_A * w` Grassmannian, in
/// canonical order of `A`.
pub fn setvalued_strips(
    w: &AffinePermutation,
    r: usize,
) -> Result<Vec<(IndexSet, AffinePermutation)>> {
    if !w.is_grassmannian() {
        return Err(Error::NotGrassmannian);
    }
    check_r(w.k(), r)?;
    Ok(IndexSet::all_of_size(w.k(), r)?
        .into_iter()
        .filter_map(|a| {
            let v = demazure(&d_elem(&a), w).expect("same rank");
            v.is_grassmannian().then_some((a, v))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(k: usize, m: &[usize]) -> IndexSet {
        IndexSet::new(k, m).unwrap()
    }

    #[test]
    fn strips_over_321() {
        let lambda = KBoundedPartition::new(3, &[3, 2, 1]).unwrap();
        assert_eq!(weak_strips(&lambda, 0).unwrap(), vec![set(3, &[])]);
        assert_eq!(
            weak_strips(&lambda, 1).unwrap(),
            vec![set(3, &[1]), set(3, &[3])]
        );
        assert_eq!(
            weak_strips(&lambda, 2).unwrap(),
            vec![set(3, &[1, 2]), set(3, &[1, 3])]
        );
        assert_eq!(weak_strips(&lambda, 3).unwrap(), vec![set(3, &[1, 2, 3])]);
        assert!(weak_strips(&lambda, 4).is_err());
        let tops: Vec<KBoundedPartition> = weak_strip_list(&lambda, 1)
            .unwrap()
            .into_iter()
            .map(|s| s.top)
            .collect();
        assert_eq!(
            tops,
            vec![
                KBoundedPartition::new(3, &[3, 2, 1, 1]).unwrap(),
                KBoundedPartition::new(3, &[3, 2, 2]).unwrap()
            ]
        );
    }

    #[test]
    fn setvalued_over_310() {
        let w = AffinePermutation::from_word(3, &[3, 1, 0]).unwrap();
        let got = setvalued_strips(&w, 1).unwrap();
        let expected: Vec<(IndexSet, AffinePermutation)> = vec![
            (
                set(3, &[0]),
                AffinePermutation::from_word(3, &[0, 3, 1, 0]).unwrap(),
            ),
            (set(3, &[1]), w.clone()),
            (
                set(3, &[2]),
                AffinePermutation::from_word(3, &[2, 3, 1, 0]).unwrap(),
            ),
            (set(3, &[3]), w.clone()),
        ];
        assert_eq!(got, expected);
    }

    #[test]
    fn setvalued_over_identity() {
        for k in 1..=4 {
            let e = AffinePermutation::identity(k).unwrap();
            for r in 1..=k {
                let got = setvalued_strips(&e, r).unwrap();
                assert_eq!(got.len(), 1);
                let interval: Vec<usize> = (0..r).collect();
                assert_eq!(got[0].0, set(k, &interval));
                assert_eq!(perm_to_bounded_unchecked(&got[0].1).parts(), &[r][..]);
            }
        }
    }

    #[test]
    fn non_grassmannian_rejected() {
        let w = AffinePermutation::from_word(3, &[1]).unwrap();
        assert!(setvalued_strips(&w, 1).is_err());
    }
}
