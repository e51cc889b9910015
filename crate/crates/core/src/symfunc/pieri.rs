use num_bigint::BigInt;

use super::{Basis, SymElt};
use crate::affine::{d_elem, AffinePermutation};
use crate::error::{Error, Result};
use crate::shapes::{
    bounded_to_perm, perm_to_bounded_unchecked, setvalued_strips, weak_strips, KBoundedPartition,
};

pub(crate) fn check_r(k: usize, r: usize) -> Result<()> {
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

/// `h_r s_lambda`: the sum of `s_nu` over weak strips `nu / lambda` of size `r`.
pub fn pieri_kschur(lambda: &KBoundedPartition, r: usize) -> Result<SymElt> {
    check_r(lambda.k(), r)?;
    let w = bounded_to_perm(lambda);
    let mut out = SymElt::zero_unchecked(lambda.k(), Basis::KSchur);
    for a in weak_strips(lambda, r)? {
        let top = perm_to_bounded_unchecked(&d_elem(&a).mul_unchecked(&w));
        out.add_term(top, BigInt::from(1));
    }
    Ok(out)
}

/// `h_r g_lambda`: signed sum over affine set-valued strips of size `r`.
/// `r = 0` gives `g_lambda`.
pub fn pieri_kk(lambda: &KBoundedPartition, r: usize) -> Result<SymElt> {
    check_r(lambda.k(), r)?;
    let w = bounded_to_perm(lambda);
    Ok(pieri_kk_of(&w, r))
}

pub(crate) fn pieri_kk_of(w: &AffinePermutation, r: usize) -> SymElt {
    let lw = w.length();
    let mut out = SymElt::zero_unchecked(w.k(), Basis::KkSchur);
    for (_, v) in setvalued_strips(w, r).expect("Grassmannian input, r <= k") {
        let exponent = r + lw - v.length();
        let sign = if exponent.is_multiple_of(2) { 1 } else { -1 };
        out.add_term(perm_to_bounded_unchecked(&v), BigInt::from(sign));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(k: usize, parts: &[usize]) -> KBoundedPartition {
        KBoundedPartition::new(k, parts).unwrap()
    }

    fn elt(k: usize, basis: Basis, terms: &[(&[usize], i64)]) -> SymElt {
        SymElt::from_terms(
            k,
            basis,
            terms.iter().map(|(p, c)| (bp(k, p), BigInt::from(*c))),
        )
        .unwrap()
    }

    #[test]
    fn kschur_pieri() {
        for r in 0..=3 {
            let got = pieri_kschur(&bp(3, &[]), r).unwrap();
            assert_eq!(
                got,
                elt(3, Basis::KSchur, &[(&vec![r; (r > 0) as usize], 1)])
            );
        }
        let got = pieri_kschur(&bp(3, &[3, 2, 1]), 1).unwrap();
        assert_eq!(
            got,
            elt(3, Basis::KSchur, &[(&[3, 2, 2], 1), (&[3, 2, 1, 1], 1)])
        );
        assert!(pieri_kschur(&bp(3, &[1]), 4).is_err());
    }

    #[test]
    fn kk_pieri() {
        let got = pieri_kk(&bp(3, &[2, 1]), 1).unwrap();
        assert_eq!(
            got,
            elt(
                3,
                Basis::KkSchur,
                &[(&[2, 2], 1), (&[2, 1, 1], 1), (&[2, 1], -2)]
            )
        );
        let got = pieri_kk(&bp(3, &[1]), 1).unwrap();
        assert_eq!(
            got,
            elt(3, Basis::KkSchur, &[(&[2], 1), (&[1, 1], 1), (&[1], -1)])
        );
        assert_eq!(
            pieri_kk(&bp(3, &[]), 2).unwrap(),
            elt(3, Basis::KkSchur, &[(&[2], 1)])
        );
        assert_eq!(
            pieri_kk(&bp(3, &[2]), 0).unwrap(),
            elt(3, Basis::KkSchur, &[(&[2], 1)])
        );
    }
}
