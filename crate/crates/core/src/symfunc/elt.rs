use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::affine::{check_rank, same_rank};
use crate::error::{Error, Result};
use crate::shapes::KBoundedPartition;

/// Basis of `Lambda^(k) = Z[h_1, ..., h_k]` in which a [`SymElt`] is written.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    /// Products `h_lambda = h_{lambda_1} h_{lambda_2} ...`.
    HMonomial,
    /// k-Schur functions `s_lambda^(k)`.
    KSchur,
    /// K-k-Schur functions `g_lambda^(k)`.
    KkSchur,
}

impl Basis {
    /// Short tag used in JSON output.
    pub fn tag(self) -> &'static str {
        match self {
            Basis::HMonomial => "h",
            Basis::KSchur => "ks",
            Basis::KkSchur => "g",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        match tag {
            "h" => Some(Basis::HMonomial),
            "ks" => Some(Basis::KSchur),
            "g" => Some(Basis::KkSchur),
            _ => None,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Basis::HMonomial => "h",
            Basis::KSchur => "s",
            Basis::KkSchur => "g",
        }
    }
}

/// A sparse integer combination of basis elements indexed by k-bounded
/// partitions. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SymElt {
    k: usize,
    basis: Basis,
    terms: BTreeMap<KBoundedPartition, BigInt>,
}

impl SymElt {
    pub fn zero(k: usize, basis: Basis) -> Result<Self> {
        check_rank(k)?;
        Ok(Self::zero_unchecked(k, basis))
    }

    pub(crate) fn zero_unchecked(k: usize, basis: Basis) -> Self {
        Self {
            k,
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The basis element indexed by the empty partition, which is `1` in every
    /// basis.
    pub fn one(k: usize, basis: Basis) -> Result<Self> {
        Ok(Self::basis_element(&KBoundedPartition::empty(k)?, basis))
    }

    pub fn basis_element(lambda: &KBoundedPartition, basis: Basis) -> Self {
        let mut out = Self::zero_unchecked(lambda.k(), basis);
        out.terms.insert(lambda.clone(), BigInt::one());
        out
    }

    pub fn from_terms(
        k: usize,
        basis: Basis,
        terms: impl IntoIterator<Item = (KBoundedPartition, BigInt)>,
    ) -> Result<Self> {
        let mut out = Self::zero(k, basis)?;
        for (lambda, c) in terms {
            same_rank(k, lambda.k())?;
            out.add_term(lambda, c);
        }
        Ok(out)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<KBoundedPartition, BigInt> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<KBoundedPartition, BigInt> {
        self.terms
    }

    pub fn coeff(&self, lambda: &KBoundedPartition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, lambda: KBoundedPartition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda).or_default();
        *entry += c;
        if entry.is_zero() {
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(key, _)| key.clone())
                .expect("zero entry present");
            self.terms.remove(&key);
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        same_rank(self.k, other.k)?;
        if self.basis != other.basis {
            return Err(Error::Precondition(format!(
                "cannot combine elements in bases {} and {}",
                self.basis.tag(),
                other.basis.tag()
            )));
        }
        Ok(())
    }

    /// `self += c * other`, assuming compatible ranks and bases.
    pub(crate) fn add_scaled_unchecked(&mut self, other: &Self, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for (lambda, v) in &other.terms {
            self.add_term(lambda.clone(), v * c);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        out.add_scaled_unchecked(other, &BigInt::one());
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        out.add_scaled_unchecked(other, &-BigInt::one());
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero_unchecked(self.k, self.basis);
        out.add_scaled_unchecked(self, c);
        out
    }

    /// Largest `|lambda|` with a nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|l| l.size()).max()
    }

    /// Terms indexed by partitions of size `d`.
    pub fn homogeneous_part(&self, d: usize) -> Self {
        Self {
            k: self.k,
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.size() == d)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    /// The homogeneous part of highest degree.
    pub fn top_degree_part(&self) -> Self {
        match self.degree() {
            Some(d) => self.homogeneous_part(d),
            None => self.clone(),
        }
    }
}

impl fmt::Debug for SymElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SymElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let sym = self.basis.symbol();
        for (i, (lambda, c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if !magnitude.is_one() {
                write!(f, "{magnitude}*")?;
            }
            write!(f, "{sym}{lambda}")?;
        }
        Ok(())
    }
}
