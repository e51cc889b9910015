use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;

use super::pieri::{check_r, pieri_kk, pieri_kschur};
use super::{Basis, SymElt, TransitionTable};
use crate::affine::{check_rank, same_rank};
use crate::error::{Error, Result};
use crate::shapes::KBoundedPartition;

type PieriMemo = RwLock<HashMap<(KBoundedPartition, usize), Arc<SymElt>>>;

/// `Lambda^(k)` with memoized Pieri products and a transition table that
/// grows on demand. Safe to share between threads.
#[derive(Debug)]
pub struct SymRing {
    k: usize,
    cache_dir: Option<PathBuf>,
    kk: PieriMemo,
    ks: PieriMemo,
    table: RwLock<Option<Arc<TransitionTable>>>,
}

impl SymRing {
    pub fn new(k: usize) -> Result<Self> {
        check_rank(k)?;
        Ok(Self {
            k,
            cache_dir: None,
            kk: RwLock::default(),
            ks: RwLock::default(),
            table: RwLock::default(),
        })
    }

    /// Persist transition tables as JSON files in `dir`.
    pub fn with_cache_dir(mut self, dir: impl Into<PathBuf>) -> Self {
        self.cache_dir = Some(dir.into());
        self
    }

    pub fn k(&self) -> usize {
        self.k
    }

    fn memo(
        &self,
        memo: &PieriMemo,
        lambda: &KBoundedPartition,
        r: usize,
        f: fn(&KBoundedPartition, usize) -> Result<SymElt>,
    ) -> Result<Arc<SymElt>> {
        same_rank(self.k, lambda.k())?;
        let key = (lambda.clone(), r);
        if let Some(x) = memo.read().expect("lock").get(&key) {
            return Ok(x.clone());
        }
        let x = Arc::new(f(lambda, r)?);
        memo.write().expect("lock").insert(key, x.clone());
        Ok(x)
    }

    /// Memoized [`pieri_kk`].
    pub fn pieri_kk(&self, lambda: &KBoundedPartition, r: usize) -> Result<Arc<SymElt>> {
        self.memo(&self.kk, lambda, r, pieri_kk)
    }

    /// Memoized [`pieri_kschur`].
    pub fn pieri_kschur(&self, lambda: &KBoundedPartition, r: usize) -> Result<Arc<SymElt>> {
        self.memo(&self.ks, lambda, r, pieri_kschur)
    }

    /// `h_r * x`.
    pub fn mul_h(&self, x: &SymElt, r: usize) -> Result<SymElt> {
        same_rank(self.k, x.k())?;
        check_r(self.k, r)?;
        let mut out = SymElt::zero_unchecked(self.k, x.basis());
        for (lambda, c) in x.terms() {
            match x.basis() {
                Basis::HMonomial => {
                    let mut parts = lambda.parts().to_vec();
                    if r > 0 {
                        parts.push(r);
                        parts.sort_unstable_by(|a, b| b.cmp(a));
                    }
                    out.add_term(
                        KBoundedPartition::from_parts_unchecked(self.k, parts),
                        c.clone(),
                    );
                }
                Basis::KSchur => out.add_scaled_unchecked(&*self.pieri_kschur(lambda, r)?, c),
                Basis::KkSchur => out.add_scaled_unchecked(&*self.pieri_kk(lambda, r)?, c),
            }
        }
        Ok(out)
    }

    /// `h_mu * x`, applying the parts of `mu` largest first.
    pub fn mul_h_partition(&self, x: &SymElt, mu: &KBoundedPartition) -> Result<SymElt> {
        same_rank(self.k, mu.k())?;
        let mut out = x.clone();
        for &part in mu.parts() {
            out = self.mul_h(&out, part)?;
        }
        Ok(out)
    }

    /// `htilde_r * x = (h_0 + ... + h_r) * x`.
    pub fn mul_htilde(&self, x: &SymElt, r: usize) -> Result<SymElt> {
        check_r(self.k, r)?;
        let mut out = SymElt::zero_unchecked(self.k, x.basis());
        for i in 0..=r {
            out.add_scaled_unchecked(&self.mul_h(x, i)?, &BigInt::from(1));
        }
        Ok(out)
    }

    /// A transition table covering at least `degree`.
    pub fn table(&self, degree: usize) -> Result<Arc<TransitionTable>> {
        if let Some(t) = self.table.read().expect("lock").as_ref() {
            if t.max_degree() >= degree {
                return Ok(t.clone());
            }
        }
        let mut slot = self.table.write().expect("lock");
        if let Some(t) = slot.as_ref() {
            if t.max_degree() >= degree {
                return Ok(t.clone());
            }
        }
        let t = Arc::new(TransitionTable::load_or_build(
            self.cache_dir.as_deref(),
            self.k,
            degree,
        )?);
        *slot = Some(t.clone());
        Ok(t)
    }

    /// `h_mu` in the K-k-Schur basis.
    pub fn h_to_g(&self, mu: &KBoundedPartition) -> Result<SymElt> {
        Ok(self.table(mu.size())?.h_to_g(mu)?.clone())
    }

    /// `g_lambda` in the h basis.
    pub fn g_to_h(&self, lambda: &KBoundedPartition) -> Result<SymElt> {
        Ok(self.table(lambda.size())?.g_to_h(lambda)?.clone())
    }

    /// `h_mu` in the k-Schur basis.
    pub fn h_to_s(&self, mu: &KBoundedPartition) -> Result<SymElt> {
        Ok(self.table(mu.size())?.h_to_s(mu)?.clone())
    }

    /// `s_lambda` in the h basis.
    pub fn s_to_h(&self, lambda: &KBoundedPartition) -> Result<SymElt> {
        Ok(self.table(lambda.size())?.s_to_h(lambda)?.clone())
    }

    pub fn convert(&self, x: &SymElt, target: Basis) -> Result<SymElt> {
        same_rank(self.k, x.k())?;
        if x.basis() == target {
            return Ok(x.clone());
        }
        self.table(x.degree().unwrap_or(0))?.convert(x, target)
    }

    /// `a * b` in the basis of `b`. The factor of smaller degree is written
    /// in the h basis and applied through Pieri products.
    pub fn product(&self, a: &SymElt, b: &SymElt) -> Result<SymElt> {
        same_rank(a.k(), b.k())?;
        same_rank(self.k, a.k())?;
        if a.basis() != b.basis() {
            return Err(Error::Precondition(format!(
                "product of elements in bases {} and {}",
                a.basis().tag(),
                b.basis().tag()
            )));
        }
        let (small, large) = if a.degree() <= b.degree() {
            (a, b)
        } else {
            (b, a)
        };
        let small_h = self.convert(small, Basis::HMonomial)?;
        let mut out = SymElt::zero_unchecked(self.k, b.basis());
        for (mu, c) in small_h.terms() {
            out.add_scaled_unchecked(&self.mul_h_partition(large, mu)?, c);
        }
        Ok(out)
    }
}
