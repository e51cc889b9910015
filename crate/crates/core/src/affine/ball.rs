use std::collections::HashSet;

use super::{check_rank, AffinePermutation};
use crate::error::{Error, Result};

/// Default limit on the number of elements a ball may hold.
pub const DEFAULT_BALL_CAP: usize = 2_000_000;

/// Upper bound on the size of an enumerated ball.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BallCap(pub usize);

impl Default for BallCap {
    fn default() -> Self {
        BallCap(DEFAULT_BALL_CAP)
    }
}

/// All elements of length at most `max_len`, ordered by length and then by
/// window. Built breadth-first by left multiplication by generators.
pub fn ball(k: usize, max_len: usize, cap: BallCap) -> Result<Vec<AffinePermutation>> {
    check_rank(k)?;
    let e = AffinePermutation::identity_unchecked(k);
    let mut seen: HashSet<AffinePermutation> = HashSet::new();
    seen.insert(e.clone());
    let mut out = vec![e.clone()];
    let mut layer = vec![e];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for s in 0..=k {
                if w.has_left_descent(s) {
                    continue;
                }
                let v = w.mul_generator_left(s);
                if seen.insert(v.clone()) {
                    next.push(v);
                }
            }
        }
        if out.len() + next.len() > cap.0 {
            return Err(Error::CapExceeded {
                what: "ball size",
                cap: cap.0,
            });
        }
        next.sort();
        out.extend(next.iter().cloned());
        layer = next;
    }
    Ok(out)
}

/// Affine Grassmannian elements of length at most `max_len`, in the same order
/// as [`ball`]. Every such element is reached through a left weak chain of
/// Grassmannian elements, so the search only keeps Grassmannian nodes.
pub fn grassmannian_ball(k: usize, max_len: usize, cap: BallCap) -> Result<Vec<AffinePermutation>> {
    check_rank(k)?;
    let e = AffinePermutation::identity_unchecked(k);
    let mut seen: HashSet<AffinePermutation> = HashSet::new();
    seen.insert(e.clone());
    let mut out = vec![e.clone()];
    let mut layer = vec![e];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for s in 0..=k {
                if w.has_left_descent(s) {
                    continue;
                }
                let v = w.mul_generator_left(s);
                if v.is_grassmannian() && seen.insert(v.clone()) {
                    next.push(v);
                }
            }
        }
        if out.len() + next.len() > cap.0 {
            return Err(Error::CapExceeded {
                what: "grassmannian ball size",
                cap: cap.0,
            });
        }
        next.sort();
        out.extend(next.iter().cloned());
        layer = next;
    }
    Ok(out)
}
