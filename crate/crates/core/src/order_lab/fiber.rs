use crate::affine::{
    bruhat_leq, d_elem, hecke_apply, meet_ls, same_rank, u_elem, AffinePermutation, IndexSet, Side,
};
use crate::error::{Error, Result};

/// A fiber of `v -> d_A * v` over `u`, stored by the labels `B` with
/// `v = d_B^-1 u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fiber {
    pub a: IndexSet,
    pub u: AffinePermutation,
    /// Sorted canonically.
    pub members: Vec<IndexSet>,
}

impl Fiber {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// The group elements `d_B^-1 u`.
    pub fn elements(&self) -> Vec<AffinePermutation> {
        self.members
            .iter()
            .map(|b| u_elem(b).mul_unchecked(&self.u))
            .collect()
    }

    /// Intersection of all members.
    pub fn bottom(&self) -> Option<IndexSet> {
        let mut it = self.members.iter();
        let first = *it.next()?;
        Some(it.fold(first, |acc, b| acc.intersection(b)))
    }

    /// Whether the members form the full interval `[bottom, A]`.
    pub fn is_boolean_interval(&self) -> bool {
        match self.bottom() {
            None => true,
            Some(bottom) => {
                let expected: Vec<IndexSet> = self
                    .a
                    .subsets()
                    .into_iter()
                    .filter(|c| bottom.is_subset(c))
                    .collect();
                expected == self.members
            }
        }
    }

    fn checked(self) -> Result<Self> {
        if !self.is_boolean_interval() {
            return Err(Error::Invariant(format!(
                "fiber over {} for A={} is not an interval: {:?}",
                self.u, self.a, self.members
            )));
        }
        Ok(self)
    }
}

fn fiber_members(
    a: &IndexSet,
    u: &AffinePermutation,
    bound: Option<&AffinePermutation>,
) -> Vec<IndexSet> {
    let da = d_elem(a);
    a.subsets()
        .into_iter()
        .filter(|b| {
            let v = u_elem(b).mul_unchecked(u);
            hecke_apply(&da, &v, Side::Left, true) == *u
                && bound.is_none_or(|w| bruhat_leq(&v, w).expect("same rank"))
        })
        .collect()
}

fn check_inputs(a: &IndexSet, u: &AffinePermutation) -> Result<()> {
    same_rank(a.k(), u.k())?;
    if !u.is_grassmannian() {
        return Err(Error::NotGrassmannian);
    }
    Ok(())
}

/// `X_{A,u} = { v : d_A * v = u }`.
pub fn fiber_x(a: &IndexSet, u: &AffinePermutation) -> Result<Fiber> {
    check_inputs(a, u)?;
    Fiber {
        a: *a,
        u: u.clone(),
        members: fiber_members(a, u, None),
    }
    .checked()
}

/// `Y_{A,u} = X_{A,u} cap [e, w]`.
pub fn fiber_y(a: &IndexSet, u: &AffinePermutation, w: &AffinePermutation) -> Result<Fiber> {
    check_inputs(a, u)?;
    same_rank(u.k(), w.k())?;
    if !w.is_grassmannian() {
        return Err(Error::NotGrassmannian);
    }
    Fiber {
        a: *a,
        u: u.clone(),
        members: fiber_members(a, u, Some(w)),
    }
    .checked()
}

/// The `A_0` with `(w meet_{S,L} u) = d_{A_0}^-1 u`, when that meet lies in
/// `Z_{u,-}`.
pub fn find_a0(u: &AffinePermutation, w: &AffinePermutation) -> Result<Option<IndexSet>> {
    same_rank(u.k(), w.k())?;
    if !u.is_grassmannian() || !w.is_grassmannian() {
        return Err(Error::NotGrassmannian);
    }
    let z = meet_ls(u, w)?;
    let d = u.mul_unchecked(&z.inverse());
    let size = d.length();
    if size > u.k() {
        return Ok(None);
    }
    Ok(IndexSet::all_of_size(u.k(), size)?
        .into_iter()
        .find(|a| d_elem(a) == d))
}

/// One row `(v, A, sign)` of the table of pairs with `d_A * v = u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberRow {
    pub v: AffinePermutation,
    pub a: IndexSet,
    /// `(-1)^{|A| - (l(u) - l(v))}`.
    pub sign: i32,
}

/// All pairs `(v, A)` with `d_A * v = u`, optionally restricted to
/// `v <= w`; ordered by `A`, then by the length and reduced word of `v`.
pub fn fiber_table(u: &AffinePermutation, w: Option<&AffinePermutation>) -> Result<Vec<FiberRow>> {
    if let Some(w) = w {
        same_rank(u.k(), w.k())?;
    }
    if !u.is_grassmannian() {
        return Err(Error::NotGrassmannian);
    }
    let lu = u.length() as i64;
    let mut rows = Vec::new();
    for a in IndexSet::all(u.k())? {
        let mut vs: Vec<AffinePermutation> = fiber_members(&a, u, w)
            .iter()
            .map(|b| u_elem(b).mul_unchecked(u))
            .collect();
        vs.sort_by_cached_key(|v| (v.length(), v.reduced_word().letters().to_vec()));
        for v in vs {
            let exponent = a.len() as i64 - (lu - v.length() as i64);
            rows.push(FiberRow {
                v,
                a,
                sign: if exponent.rem_euclid(2) == 0 { 1 } else { -1 },
            });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{bounded_to_perm, KBoundedPartition};

    fn set(k: usize, m: &[usize]) -> IndexSet {
        IndexSet::new(k, m).unwrap()
    }

    fn w(k: usize, word: &[usize]) -> AffinePermutation {
        AffinePermutation::from_word(k, word).unwrap()
    }

    fn grass(k: usize, parts: &[usize]) -> AffinePermutation {
        bounded_to_perm(&KBoundedPartition::new(k, parts).unwrap())
    }

    #[test]
    fn table_for_310() {
        let u = w(3, &[3, 1, 0]);
        let rows = fiber_table(&u, None).unwrap();
        let got: Vec<(AffinePermutation, Vec<usize>, i32)> = rows
            .iter()
            .map(|r| (r.v.clone(), r.a.to_vec(), r.sign))
            .collect();
        let expected = vec![
            (w(3, &[3, 1, 0]), vec![], 1),
            (w(3, &[3, 0]), vec![1], 1),
            (w(3, &[3, 1, 0]), vec![1], -1),
            (w(3, &[1, 0]), vec![3], 1),
            (w(3, &[3, 1, 0]), vec![3], -1),
            (w(3, &[0]), vec![1, 3], 1),
            (w(3, &[1, 0]), vec![1, 3], -1),
            (w(3, &[3, 0]), vec![1, 3], -1),
            (w(3, &[3, 1, 0]), vec![1, 3], 1),
        ];
        assert_eq!(got, expected);

        let bound = w(3, &[2, 1, 0]);
        let filtered = fiber_table(&u, Some(&bound)).unwrap();
        let got: Vec<(AffinePermutation, Vec<usize>)> = filtered
            .iter()
            .map(|r| (r.v.clone(), r.a.to_vec()))
            .collect();
        assert_eq!(
            got,
            vec![
                (w(3, &[1, 0]), vec![3]),
                (w(3, &[0]), vec![1, 3]),
                (w(3, &[1, 0]), vec![1, 3]),
            ]
        );
    }

    #[test]
    fn five_three_two_one_fibers() {
        let u = grass(5, &[5, 3, 2, 1]);
        let wmu = grass(5, &[5, 2, 2, 2]);
        let a = set(5, &[5, 0, 1]);
        let x = fiber_x(&a, &u).unwrap();
        let y = fiber_y(&a, &u, &wmu).unwrap();
        assert_eq!(x, y);
        let mut elems = x.elements();
        elems.sort();
        let mut expected: Vec<AffinePermutation> = [&[1][..], &[0, 1], &[5, 1], &[5, 0, 1]]
            .iter()
            .map(|word| w(5, word).mul(&u).unwrap())
            .collect();
        expected.sort();
        assert_eq!(elems, expected);
        assert_eq!(x.bottom(), Some(set(5, &[1])));

        let a = set(5, &[3, 5, 1]);
        let x = fiber_x(&a, &u).unwrap();
        assert_eq!(x.bottom(), Some(set(5, &[])));
        assert_eq!(x.len(), 8);
        let y = fiber_y(&a, &u, &wmu).unwrap();
        assert_eq!(y.bottom(), Some(set(5, &[1])));
        assert_eq!(y.len(), 4);

        assert_eq!(find_a0(&u, &wmu).unwrap(), Some(set(5, &[1])));
        assert_eq!(find_a0(&u, &u).unwrap(), Some(set(5, &[])));
    }

    #[test]
    fn empty_set_fiber() {
        let u = grass(3, &[2, 1]);
        let x = fiber_x(&set(3, &[]), &u).unwrap();
        assert_eq!(x.members, vec![set(3, &[])]);
    }
}
