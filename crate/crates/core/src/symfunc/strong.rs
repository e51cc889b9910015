use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::pieri::check_r;
use super::{Basis, SymElt, SymRing};
use crate::affine::{
    bruhat_leq_unchecked, d_elem, grassmannian_ball, same_rank, BallCap, IndexSet,
};
use crate::error::Result;
use crate::order_lab::fiber_table;
use crate::shapes::{
    bounded_to_perm, k_rectangle, perm_to_bounded_unchecked, union_sort, weak_strip_list,
    weak_strips, KBoundedPartition,
};

/// All `mu` with `w_mu <= w_lambda` in the strong order, in canonical order.
pub fn strong_lower_interval(lambda: &KBoundedPartition) -> Vec<KBoundedPartition> {
    let w = bounded_to_perm(lambda);
    KBoundedPartition::all_up_to(lambda.k(), lambda.size())
        .expect("rank validated")
        .into_iter()
        .filter(|mu| bruhat_leq_unchecked(&bounded_to_perm(mu), &w))
        .collect()
}

/// `gtilde_lambda = sum_{mu <= lambda} g_mu`.
pub fn gtilde(lambda: &KBoundedPartition) -> SymElt {
    let mut out = SymElt::zero_unchecked(lambda.k(), Basis::KkSchur);
    for mu in strong_lower_interval(lambda) {
        out.add_term(mu, BigInt::one());
    }
    out
}

/// `gtilde_lambda * htilde_r` as the sum of `g_mu` over the union of the
/// strong lower intervals of the weak strip tops of size `r`.
pub fn gtilde_pieri(lambda: &KBoundedPartition, r: usize) -> Result<SymElt> {
    check_r(lambda.k(), r)?;
    let mut union = std::collections::BTreeSet::new();
    for strip in weak_strip_list(lambda, r)? {
        union.extend(strong_lower_interval(&strip.top));
    }
    let mut out = SymElt::zero_unchecked(lambda.k(), Basis::KkSchur);
    for mu in union {
        out.add_term(mu, BigInt::one());
    }
    Ok(out)
}

/// `gtilde_lambda * htilde_r` expanded term by term through the K-k-Schur
/// Pieri rule.
pub fn gtilde_pieri_signed(ring: &SymRing, lambda: &KBoundedPartition, r: usize) -> Result<SymElt> {
    same_rank(ring.k(), lambda.k())?;
    ring.mul_htilde(&gtilde(lambda), r)
}

/// `gtilde_lambda * htilde_r` with each coefficient computed as a signed
/// count over the fiber table of `u`.
pub fn gtilde_pieri_fibers(lambda: &KBoundedPartition, r: usize) -> Result<SymElt> {
    let k = lambda.k();
    check_r(k, r)?;
    let w = bounded_to_perm(lambda);
    let mut out = SymElt::zero_unchecked(k, Basis::KkSchur);
    for u in grassmannian_ball(k, lambda.size() + r, BallCap::default())? {
        let coeff: i64 = fiber_table(&u, Some(&w))?
            .iter()
            .filter(|row| row.a.len() <= r)
            .map(|row| row.sign as i64)
            .sum();
        out.add_term(perm_to_bounded_unchecked(&u), BigInt::from(coeff));
    }
    Ok(out)
}

/// A formal integer combination of the elements `gtilde_lambda`.
#[derive(Clone, PartialEq, Eq)]
pub struct GtildeCombination {
    k: usize,
    terms: BTreeMap<KBoundedPartition, BigInt>,
}

impl GtildeCombination {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn terms(&self) -> &BTreeMap<KBoundedPartition, BigInt> {
        &self.terms
    }

    /// Labels shifted by `R_t`: each `lambda` becomes `R_t cup lambda`.
    pub fn union_rectangle(&self, t: usize) -> Result<Self> {
        let rect = k_rectangle(t, self.k)?;
        let mut terms = BTreeMap::new();
        for (lambda, c) in &self.terms {
            terms.insert(union_sort(&rect, lambda)?, c.clone());
        }
        Ok(Self { k: self.k, terms })
    }

    /// The combination rewritten in the K-k-Schur basis.
    pub fn expand(&self) -> SymElt {
        let mut out = SymElt::zero_unchecked(self.k, Basis::KkSchur);
        for (lambda, c) in &self.terms {
            out.add_scaled_unchecked(&gtilde(lambda), c);
        }
        out
    }
}

impl fmt::Debug for GtildeCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GtildeCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (lambda, c)) in self.terms.iter().enumerate() {
            let sep = match (i, c.is_negative()) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            write!(f, "{sep}")?;
            if !c.abs().is_one() {
                write!(f, "{}*", c.abs())?;
            }
            write!(f, "gt{lambda}")?;
        }
        Ok(())
    }
}

/// Inclusion-exclusion over the weak strips `A_1, ..., A_m` of size `r`:
/// `sum (-1)^{|S|-1} gtilde_{d_{cap S} lambda}` over nonempty `S`.
pub fn gtilde_pieri_ie(lambda: &KBoundedPartition, r: usize) -> Result<GtildeCombination> {
    let k = lambda.k();
    check_r(k, r)?;
    // signed number of nonempty subfamilies with a given intersection
    let mut by_meet: BTreeMap<IndexSet, BigInt> = BTreeMap::new();
    for a in weak_strips(lambda, r)? {
        let mut next = by_meet.clone();
        *next.entry(a).or_default() += 1;
        for (x, c) in &by_meet {
            *next.entry(x.intersection(&a)).or_default() -= c;
        }
        next.retain(|_, c| !c.is_zero());
        by_meet = next;
    }
    let w = bounded_to_perm(lambda);
    let mut terms: BTreeMap<KBoundedPartition, BigInt> = BTreeMap::new();
    for (x, c) in by_meet {
        let label = perm_to_bounded_unchecked(&d_elem(&x).mul_unchecked(&w));
        *terms.entry(label).or_default() += c;
    }
    terms.retain(|_, c| !c.is_zero());
    Ok(GtildeCombination { k, terms })
}

/// Both sides of an identity between two elements of the same basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub lhs: SymElt,
    pub rhs: SymElt,
}

impl Comparison {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `gtilde_{R_t cup lambda}` against `gtilde_{R_t} * gtilde_lambda`.
pub fn gtilde_factorization(
    ring: &SymRing,
    lambda: &KBoundedPartition,
    t: usize,
) -> Result<Comparison> {
    same_rank(ring.k(), lambda.k())?;
    let rect = k_rectangle(t, lambda.k())?;
    let lhs = gtilde(&union_sort(&rect, lambda)?);
    let rhs = ring.product(&gtilde(&rect), &gtilde(lambda))?;
    Ok(Comparison { lhs, rhs })
}

/// Whether `gtilde_{R_t cup lambda} = gtilde_{R_t} * gtilde_lambda`.
pub fn gtilde_factorize_check(
    ring: &SymRing,
    lambda: &KBoundedPartition,
    t: usize,
) -> Result<bool> {
    Ok(gtilde_factorization(ring, lambda, t)?.holds())
}

/// `s_{R_t cup lambda}` against `s_{R_t} * s_lambda`.
pub fn kschur_rectangle(
    ring: &SymRing,
    lambda: &KBoundedPartition,
    t: usize,
) -> Result<Comparison> {
    same_rank(ring.k(), lambda.k())?;
    let rect = k_rectangle(t, lambda.k())?;
    let lhs = SymElt::basis_element(&union_sort(&rect, lambda)?, Basis::KSchur);
    let rhs = ring.product(
        &SymElt::basis_element(&rect, Basis::KSchur),
        &SymElt::basis_element(lambda, Basis::KSchur),
    )?;
    Ok(Comparison { lhs, rhs })
}

/// Top-degree part of `g_lambda` against `s_lambda`, both in the h basis.
pub fn top_degree(ring: &SymRing, lambda: &KBoundedPartition) -> Result<Comparison> {
    same_rank(ring.k(), lambda.k())?;
    Ok(Comparison {
        lhs: ring.g_to_h(lambda)?.top_degree_part(),
        rhs: ring.s_to_h(lambda)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(k: usize, parts: &[usize]) -> KBoundedPartition {
        KBoundedPartition::new(k, parts).unwrap()
    }

    fn ones(k: usize, shapes: &[&[usize]]) -> SymElt {
        SymElt::from_terms(
            k,
            Basis::KkSchur,
            shapes.iter().map(|p| (bp(k, p), BigInt::one())),
        )
        .unwrap()
    }

    #[test]
    fn gtilde_examples() {
        assert_eq!(gtilde(&bp(3, &[])), ones(3, &[&[]]));
        assert_eq!(gtilde(&bp(3, &[1])), ones(3, &[&[], &[1]]));
        assert_eq!(
            gtilde(&bp(3, &[2, 1])),
            ones(3, &[&[], &[1], &[2], &[1, 1], &[2, 1]])
        );
    }

    #[test]
    fn pieri_sum_examples() {
        let ring = SymRing::new(3).unwrap();
        assert_eq!(gtilde_pieri(&bp(3, &[]), 1).unwrap(), ones(3, &[&[], &[1]]));
        let expected = ones(3, &[&[], &[1], &[2], &[1, 1]]);
        let lambda = bp(3, &[1]);
        assert_eq!(gtilde_pieri(&lambda, 1).unwrap(), expected);
        assert_eq!(gtilde_pieri_signed(&ring, &lambda, 1).unwrap(), expected);
        assert_eq!(gtilde_pieri_fibers(&lambda, 1).unwrap(), expected);
    }

    #[test]
    fn inclusion_exclusion_examples() {
        let ie = gtilde_pieri_ie(&bp(3, &[1]), 1).unwrap();
        assert_eq!(ie.to_string(), "-gt(1) + gt(2) + gt(1,1)");
        assert_eq!(ie.expand(), gtilde_pieri(&bp(3, &[1]), 1).unwrap());
        let ie = gtilde_pieri_ie(&bp(3, &[]), 2).unwrap();
        assert_eq!(ie.to_string(), "gt(2)");
        let lambda = bp(3, &[2, 1]);
        let ie = gtilde_pieri_ie(&lambda, 3).unwrap();
        assert_eq!(ie.terms().len(), 1);
        assert_eq!(ie.terms().keys().next().unwrap(), &bp(3, &[3, 2, 1]));
    }

    #[test]
    fn factorization_examples() {
        let ring = SymRing::new(2).unwrap();
        assert!(gtilde_factorize_check(&ring, &bp(2, &[]), 1).unwrap());
        let c = gtilde_factorization(&ring, &bp(2, &[1]), 1).unwrap();
        assert_eq!(c.lhs, gtilde(&bp(2, &[1, 1, 1])));
        assert!(c.holds());
        assert!(kschur_rectangle(&ring, &bp(2, &[2, 1]), 2).unwrap().holds());
        assert!(top_degree(&ring, &bp(2, &[2, 1, 1])).unwrap().holds());
    }
}
