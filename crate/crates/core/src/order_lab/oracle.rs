//! Brute-force oracles over explicit finite universes, used to certify the
//! closed forms. Results say whether an extremum exists inside the universe;
//! for meets over a full length ball that answer is exact, for joins it is
//! only a statement about the ball.

use std::collections::BTreeSet;

use crate::affine::{bruhat_leq_unchecked, weak_leq_unchecked, AffinePermutation, Side};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Extremum<T> {
    /// The unique greatest (or least) bound.
    Unique(T),
    /// No common bound in the universe.
    NoBound,
    /// Bounds exist but none of them dominates the others.
    NotUnique,
}

impl<T> Extremum<T> {
    pub fn unique(self) -> Option<T> {
        match self {
            Extremum::Unique(t) => Some(t),
            _ => None,
        }
    }
}

/// Greatest (`top`) or least element of `bounds` under `leq`.
pub fn extremum<T: Clone>(bounds: &[T], leq: impl Fn(&T, &T) -> bool, top: bool) -> Extremum<T> {
    if bounds.is_empty() {
        return Extremum::NoBound;
    }
    let found = bounds.iter().find(|z| {
        bounds
            .iter()
            .all(|b| if top { leq(b, z) } else { leq(z, b) })
    });
    match found {
        Some(z) => Extremum::Unique(z.clone()),
        None => Extremum::NotUnique,
    }
}

/// Strong meet of `x` and `y` among the elements of `universe`. Exact when
/// the universe holds every element of length at most `min(l(x), l(y))`.
pub fn strong_meet_in(
    x: &AffinePermutation,
    y: &AffinePermutation,
    universe: &[AffinePermutation],
) -> Extremum<AffinePermutation> {
    let bounds: Vec<AffinePermutation> = universe
        .iter()
        .filter(|z| bruhat_leq_unchecked(z, x) && bruhat_leq_unchecked(z, y))
        .cloned()
        .collect();
    extremum(&bounds, bruhat_leq_unchecked, true)
}

/// Strong join of `x` and `y` among the elements of `universe`.
pub fn strong_join_in(
    x: &AffinePermutation,
    y: &AffinePermutation,
    universe: &[AffinePermutation],
) -> Extremum<AffinePermutation> {
    let bounds: Vec<AffinePermutation> = universe
        .iter()
        .filter(|z| bruhat_leq_unchecked(x, z) && bruhat_leq_unchecked(y, z))
        .cloned()
        .collect();
    extremum(&bounds, bruhat_leq_unchecked, false)
}

/// Join of `x` and `y` in the given weak order among `universe`.
pub fn weak_join_in(
    x: &AffinePermutation,
    y: &AffinePermutation,
    side: Side,
    universe: &[AffinePermutation],
) -> Extremum<AffinePermutation> {
    let bounds: Vec<AffinePermutation> = universe
        .iter()
        .filter(|z| weak_leq_unchecked(x, z, side) && weak_leq_unchecked(y, z, side))
        .cloned()
        .collect();
    extremum(&bounds, |a, b| weak_leq_unchecked(a, b, side), false)
}

/// `min { z : x <= z, y <=_L z }` within `universe`.
pub fn s_join_l_in(
    x: &AffinePermutation,
    y: &AffinePermutation,
    universe: &[AffinePermutation],
) -> Extremum<AffinePermutation> {
    let bounds: Vec<AffinePermutation> = universe
        .iter()
        .filter(|z| bruhat_leq_unchecked(x, z) && weak_leq_unchecked(y, z, Side::Left))
        .cloned()
        .collect();
    extremum(&bounds, bruhat_leq_unchecked, false)
}

/// `max { z : z <=_L x, z <= y }` within `universe`.
pub fn meet_ls_in(
    x: &AffinePermutation,
    y: &AffinePermutation,
    universe: &[AffinePermutation],
) -> Extremum<AffinePermutation> {
    let bounds: Vec<AffinePermutation> = universe
        .iter()
        .filter(|z| weak_leq_unchecked(z, x, Side::Left) && bruhat_leq_unchecked(z, y))
        .cloned()
        .collect();
    extremum(&bounds, bruhat_leq_unchecked, true)
}

/// The strong lower interval `[e, w]` via the subword property: products of
/// all subwords of one reduced word.
pub fn subword_lower_interval(w: &AffinePermutation) -> BTreeSet<AffinePermutation> {
    let word = w.reduced_word();
    let letters = word.letters();
    let mut out = BTreeSet::new();
    for mask in 0u64..(1u64 << letters.len()) {
        let mut z = AffinePermutation::identity_unchecked(w.k());
        for (pos, &s) in letters.iter().enumerate() {
            if mask & (1 << pos) != 0 {
                z = z.mul_generator_right(s);
            }
        }
        out.insert(z);
    }
    out
}
