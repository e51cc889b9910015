//! Strong and weak orders, Demazure and anti-Demazure actions, and the
//! half-strong/half-weak meet and join.

use super::{same_rank, AffinePermutation, Side};
use crate::error::{Error, Result};

/// Strong (Bruhat) order.
///
/// Uses the lifting property: for a left descent `s` of `v`,
/// `u <= v` iff `min(u, su) <= sv`. Each step shortens `v` by one, so the
/// recursion is a single loop with no branching.
pub fn bruhat_leq(u: &AffinePermutation, v: &AffinePermutation) -> Result<bool> {
    same_rank(u.k(), v.k())?;
    Ok(bruhat_leq_unchecked(u, v))
}

pub(crate) fn bruhat_leq_unchecked(u: &AffinePermutation, v: &AffinePermutation) -> bool {
    let mut u = u.clone();
    let mut v = v.clone();
    let mut lu = u.length();
    let mut lv = v.length();
    loop {
        if lu > lv {
            return false;
        }
        if lu == lv {
            return u == v;
        }
        if lu == 0 {
            return true;
        }
        let v_inv = v.inverse();
        let s = (0..=v.k())
            .find(|&i| v_inv.has_right_descent(i))
            .expect("v has positive length");
        v = v.mul_generator_left(s);
        lv -= 1;
        if u.has_left_descent(s) {
            u = u.mul_generator_left(s);
            lu -= 1;
        }
    }
}

/// `v` covers `u` in the strong order.
pub fn is_bruhat_cover(u: &AffinePermutation, v: &AffinePermutation) -> Result<bool> {
    same_rank(u.k(), v.k())?;
    Ok(v.length() == u.length() + 1 && bruhat_leq_unchecked(u, v))
}

/// Weak order by length additivity: `u <=_L v` iff `l(v u^-1) + l(u) = l(v)`,
/// `u <=_R v` iff `l(u) + l(u^-1 v) = l(v)`.
pub fn weak_leq(u: &AffinePermutation, v: &AffinePermutation, side: Side) -> Result<bool> {
    same_rank(u.k(), v.k())?;
    Ok(weak_leq_unchecked(u, v, side))
}

pub(crate) fn weak_leq_unchecked(u: &AffinePermutation, v: &AffinePermutation, side: Side) -> bool {
    let lu = u.length();
    let lv = v.length();
    if lu > lv {
        return false;
    }
    let quotient = match side {
        Side::Left => v.mul_unchecked(&u.inverse()),
        Side::Right => u.inverse().mul_unchecked(v),
    };
    quotient.length() + lu == lv
}

/// Demazure action `phi_x(y)` (left) or `phi^R_x(y)` (right).
///
/// Left: `phi_x = phi_{s_1} ... phi_{s_m}` for a reduced word `x = s_1 ... s_m`,
/// so the rightmost letter acts first and the result is the Demazure product
/// `x * y`. Right: `phi^R_x(y) = y * x`.
pub fn phi_apply(
    x: &AffinePermutation,
    y: &AffinePermutation,
    side: Side,
) -> Result<AffinePermutation> {
    same_rank(x.k(), y.k())?;
    Ok(hecke_apply(x, y, side, true))
}

/// Anti-Demazure action `psi_x(y)` (left) or `psi^R_x(y)` (right); each
/// generator acts only when it shortens.
pub fn psi_apply(
    x: &AffinePermutation,
    y: &AffinePermutation,
    side: Side,
) -> Result<AffinePermutation> {
    same_rank(x.k(), y.k())?;
    Ok(hecke_apply(x, y, side, false))
}

/// Demazure product `x * y`.
pub fn demazure(x: &AffinePermutation, y: &AffinePermutation) -> Result<AffinePermutation> {
    phi_apply(x, y, Side::Left)
}

pub(crate) fn hecke_apply(
    x: &AffinePermutation,
    y: &AffinePermutation,
    side: Side,
    grow: bool,
) -> AffinePermutation {
    let word = x.reduced_word();
    let mut out = y.clone();
    let step = |out: &mut AffinePermutation, s: usize| {
        // grow: act when s is an ascent; shrink: act when s is a descent.
        if out.has_descent(s, side) != grow {
            *out = out.mul_generator(s, side);
        }
    };
    match side {
        Side::Left => word.letters().iter().rev().for_each(|&s| step(&mut out, s)),
        Side::Right => word.letters().iter().for_each(|&s| step(&mut out, s)),
    }
    out
}

/// `min_<= { z : x <= z, y <=_L z } = psi^R_{y^-1}(x) y`.
pub fn s_join_l(x: &AffinePermutation, y: &AffinePermutation) -> Result<AffinePermutation> {
    same_rank(x.k(), y.k())?;
    let u = hecke_apply(&y.inverse(), x, Side::Right, false);
    Ok(u.mul_unchecked(y))
}

/// `max_<= { z : z <=_L x, z <= y } = (psi^R_{y^-1}(x))^-1 x`.
pub fn meet_ls(x: &AffinePermutation, y: &AffinePermutation) -> Result<AffinePermutation> {
    same_rank(x.k(), y.k())?;
    let u = hecke_apply(&y.inverse(), x, Side::Right, false);
    Ok(u.inverse().mul_unchecked(x))
}

/// Interval flip `[e, z]_L -> [e, z]_R`, `x -> z x^-1`.
pub fn flip(z: &AffinePermutation, x: &AffinePermutation) -> Result<AffinePermutation> {
    same_rank(z.k(), x.k())?;
    if !weak_leq_unchecked(x, z, Side::Left) {
        return Err(Error::Precondition(format!(
            "{x} is not below {z} in the left weak order"
        )));
    }
    Ok(z.mul_unchecked(&x.inverse()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::{d_elem, IndexSet};

    fn w(k: usize, word: &[usize]) -> AffinePermutation {
        AffinePermutation::from_word(k, word).unwrap()
    }

    #[test]
    fn bruhat_examples() {
        let e = w(3, &[]);
        let x = w(3, &[2, 1, 0]);
        assert!(bruhat_leq(&e, &x).unwrap());
        assert!(bruhat_leq(&w(3, &[1, 0]), &x).unwrap());
        assert!(!bruhat_leq(&w(3, &[3, 0]), &x).unwrap());
        assert!(!bruhat_leq(&x, &w(3, &[1, 0])).unwrap());
        assert!(bruhat_leq(&x, &x).unwrap());
        assert!(bruhat_leq(&e, &w(2, &[])).is_err());
    }

    #[test]
    fn weak_examples() {
        let wl = w(3, &[2, 0, 3, 2, 1, 0]);
        let up = AffinePermutation::generator(3, 1)
            .unwrap()
            .mul(&wl)
            .unwrap();
        assert!(weak_leq(&wl, &up, Side::Left).unwrap());
        let x = w(3, &[3, 1, 0]);
        assert!(weak_leq(&w(3, &[0]), &x, Side::Left).unwrap());
        assert!(!weak_leq(&w(3, &[1]), &x, Side::Left).unwrap());
        assert!(weak_leq(&w(3, &[3]), &x, Side::Right).unwrap());
        assert!(weak_leq(&w(3, &[]), &x, Side::Left).unwrap());
    }

    #[test]
    fn demazure_examples() {
        let d1 = d_elem(&IndexSet::new(3, &[1]).unwrap());
        assert_eq!(demazure(&d1, &w(3, &[3, 0])).unwrap(), w(3, &[3, 1, 0]));
        assert_eq!(demazure(&d1, &w(3, &[3, 1, 0])).unwrap(), w(3, &[3, 1, 0]));
        let y = w(3, &[2, 0, 1]);
        assert_eq!(demazure(&w(3, &[]), &y).unwrap(), y);
        // x * y = phi^R_y(x)
        let x = w(3, &[1, 2, 0]);
        assert_eq!(
            demazure(&x, &y).unwrap(),
            phi_apply(&y, &x, Side::Right).unwrap()
        );
    }

    #[test]
    fn psi_examples() {
        let s1 = w(3, &[1]);
        let e = w(3, &[]);
        assert_eq!(psi_apply(&s1, &e, Side::Left).unwrap(), e);
        let x = w(3, &[3, 1, 0]);
        assert_eq!(psi_apply(&s1, &x, Side::Left).unwrap(), w(3, &[3, 0]));
        let once = psi_apply(&s1, &x, Side::Left).unwrap();
        assert_eq!(psi_apply(&s1, &once, Side::Left).unwrap(), once);
    }

    #[test]
    fn half_meet_join_trivial_cases() {
        let e = w(2, &[]);
        let x = w(2, &[1, 2, 0]);
        let y = w(2, &[0, 1]);
        assert_eq!(s_join_l(&e, &y).unwrap(), y);
        assert_eq!(s_join_l(&x, &e).unwrap(), x);
        assert_eq!(meet_ls(&x, &x).unwrap(), x);
        assert_eq!(meet_ls(&x, &e).unwrap(), e);
    }

    #[test]
    fn flip_endpoints() {
        let z = w(2, &[1, 2, 0, 1]);
        assert_eq!(flip(&z, &w(2, &[])).unwrap(), z);
        assert!(flip(&z, &z).unwrap().is_identity());
        assert!(flip(&z, &w(2, &[2])).is_err());
    }
}
