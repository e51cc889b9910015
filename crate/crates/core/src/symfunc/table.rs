use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::pieri::{pieri_kk, pieri_kschur};
use super::{Basis, SymElt};
use crate::affine::{check_rank, same_rank};
use crate::error::{Error, Result};
use crate::shapes::KBoundedPartition;

/// Order of partitions inside a degree block, as recorded in cache files.
pub const INTRA_DEGREE_ORDER: &str = "reverse lexicographic on parts";

/// Expansions of `h_mu` in the k-Schur and K-k-Schur bases and their
/// inverses, for every k-bounded `mu` with `|mu| <= max_degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionTable {
    k: usize,
    max_degree: usize,
    h_to_g: BTreeMap<KBoundedPartition, SymElt>,
    g_to_h: BTreeMap<KBoundedPartition, SymElt>,
    h_to_s: BTreeMap<KBoundedPartition, SymElt>,
    s_to_h: BTreeMap<KBoundedPartition, SymElt>,
    unit_triangular: bool,
}

impl TransitionTable {
    pub fn build(k: usize, max_degree: usize) -> Result<Self> {
        check_rank(k)?;
        let h_to_g = forward(k, max_degree, Basis::KkSchur)?;
        let h_to_s = forward(k, max_degree, Basis::KSchur)?;
        let (g_to_h, g_tri) = invert(k, max_degree, &h_to_g)?;
        let (s_to_h, s_tri) = invert(k, max_degree, &h_to_s)?;
        Ok(Self {
            k,
            max_degree,
            h_to_g,
            g_to_h,
            h_to_s,
            s_to_h,
            unit_triangular: g_tri && s_tri,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// Whether every top-degree block of `h -> g` and `h -> s` is lower
    /// unitriangular in the intra-degree order.
    pub fn unit_triangular(&self) -> bool {
        self.unit_triangular
    }

    fn lookup<'a>(
        &self,
        map: &'a BTreeMap<KBoundedPartition, SymElt>,
        lambda: &KBoundedPartition,
    ) -> Result<&'a SymElt> {
        same_rank(self.k, lambda.k())?;
        map.get(lambda).ok_or(Error::CapExceeded {
            what: "transition table degree",
            cap: self.max_degree,
        })
    }

    pub fn h_to_g(&self, mu: &KBoundedPartition) -> Result<&SymElt> {
        self.lookup(&self.h_to_g, mu)
    }

    pub fn g_to_h(&self, lambda: &KBoundedPartition) -> Result<&SymElt> {
        self.lookup(&self.g_to_h, lambda)
    }

    pub fn h_to_s(&self, mu: &KBoundedPartition) -> Result<&SymElt> {
        self.lookup(&self.h_to_s, mu)
    }

    pub fn s_to_h(&self, lambda: &KBoundedPartition) -> Result<&SymElt> {
        self.lookup(&self.s_to_h, lambda)
    }

    /// Rewrites `x` in the h basis.
    pub fn to_h(&self, x: &SymElt) -> Result<SymElt> {
        same_rank(self.k, x.k())?;
        let map = match x.basis() {
            Basis::HMonomial => return Ok(x.clone()),
            Basis::KSchur => &self.s_to_h,
            Basis::KkSchur => &self.g_to_h,
        };
        change_basis(self, map, x, Basis::HMonomial)
    }

    /// Rewrites `x` (in any basis) in `target`.
    pub fn convert(&self, x: &SymElt, target: Basis) -> Result<SymElt> {
        let h = self.to_h(x)?;
        let map = match target {
            Basis::HMonomial => return Ok(h),
            Basis::KSchur => &self.h_to_s,
            Basis::KkSchur => &self.h_to_g,
        };
        change_basis(self, map, &h, target)
    }

    fn payload(&self) -> Payload {
        let rows = |map: &BTreeMap<KBoundedPartition, SymElt>| {
            map.iter()
                .map(|(lambda, x)| Row {
                    parts: lambda.parts().to_vec(),
                    expansion: x
                        .terms()
                        .iter()
                        .map(|(mu, c)| Term {
                            parts: mu.parts().to_vec(),
                            coeff: c.to_string(),
                        })
                        .collect(),
                })
                .collect()
        };
        Payload {
            k: self.k,
            max_degree: self.max_degree,
            order: INTRA_DEGREE_ORDER.to_string(),
            unit_triangular: self.unit_triangular,
            h_to_g: rows(&self.h_to_g),
            g_to_h: rows(&self.g_to_h),
            h_to_s: rows(&self.h_to_s),
            s_to_h: rows(&self.s_to_h),
        }
    }

    /// Hex SHA-256 of the canonical JSON payload.
    pub fn content_hash(&self) -> String {
        hash_payload(&self.payload())
    }

    pub fn to_json(&self) -> String {
        let payload = self.payload();
        let file = CacheFile {
            hash: hash_payload(&payload),
            payload,
        };
        serde_json::to_string(&file).expect("serializable")
    }

    /// Parses a cache file and checks its hash and shape.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: CacheFile =
            serde_json::from_str(text).map_err(|e| Error::Cache(format!("unreadable: {e}")))?;
        if hash_payload(&file.payload) != file.hash {
            return Err(Error::Cache("content hash mismatch".into()));
        }
        let p = file.payload;
        check_rank(p.k)?;
        if p.order != INTRA_DEGREE_ORDER {
            return Err(Error::Cache(format!("unknown block order {:?}", p.order)));
        }
        let k = p.k;
        let read = |rows: Vec<Row>, basis: Basis| -> Result<BTreeMap<KBoundedPartition, SymElt>> {
            let mut map = BTreeMap::new();
            for row in rows {
                let mut x = SymElt::zero(k, basis)?;
                for t in row.expansion {
                    let c: BigInt = t
                        .coeff
                        .parse()
                        .map_err(|_| Error::Cache(format!("bad coefficient {:?}", t.coeff)))?;
                    x.add_term(KBoundedPartition::new(k, &t.parts)?, c);
                }
                map.insert(KBoundedPartition::new(k, &row.parts)?, x);
            }
            Ok(map)
        };
        let table = Self {
            k,
            max_degree: p.max_degree,
            h_to_g: read(p.h_to_g, Basis::KkSchur)?,
            g_to_h: read(p.g_to_h, Basis::HMonomial)?,
            h_to_s: read(p.h_to_s, Basis::KSchur)?,
            s_to_h: read(p.s_to_h, Basis::HMonomial)?,
            unit_triangular: p.unit_triangular,
        };
        let expected = KBoundedPartition::all_up_to(k, p.max_degree)?;
        for map in [&table.h_to_g, &table.g_to_h, &table.h_to_s, &table.s_to_h] {
            if !map.keys().eq(expected.iter()) {
                return Err(Error::Cache("rows do not cover the degree range".into()));
            }
        }
        Ok(table)
    }

    /// File name used inside a cache directory.
    pub fn cache_file_name(k: usize, max_degree: usize) -> String {
        format!("kschur-table-k{k}-d{max_degree}.json")
    }

    /// Loads the table from `dir` if a valid file is there, otherwise builds
    /// it and writes it back. Without a directory the table is just built.
    pub fn load_or_build(dir: Option<&Path>, k: usize, max_degree: usize) -> Result<Self> {
        let Some(dir) = dir else {
            return Self::build(k, max_degree);
        };
        let path: PathBuf = dir.join(Self::cache_file_name(k, max_degree));
        if let Ok(text) = fs::read_to_string(&path) {
            if let Ok(table) = Self::from_json(&text) {
                if table.k == k && table.max_degree == max_degree {
                    return Ok(table);
                }
            }
        }
        let table = Self::build(k, max_degree)?;
        fs::create_dir_all(dir).map_err(|e| Error::Cache(format!("{}: {e}", dir.display())))?;
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, table.to_json())
            .and_then(|_| fs::rename(&tmp, &path))
            .map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
        Ok(table)
    }
}

#[derive(Serialize, Deserialize)]
struct Term {
    parts: Vec<usize>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct Row {
    parts: Vec<usize>,
    expansion: Vec<Term>,
}

#[derive(Serialize, Deserialize)]
struct Payload {
    k: usize,
    max_degree: usize,
    order: String,
    unit_triangular: bool,
    h_to_g: Vec<Row>,
    g_to_h: Vec<Row>,
    h_to_s: Vec<Row>,
    s_to_h: Vec<Row>,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    hash: String,
    payload: Payload,
}

fn hash_payload(p: &Payload) -> String {
    let bytes = serde_json::to_vec(p).expect("serializable");
    Sha256::digest(&bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

fn change_basis(
    table: &TransitionTable,
    map: &BTreeMap<KBoundedPartition, SymElt>,
    x: &SymElt,
    target: Basis,
) -> Result<SymElt> {
    let mut out = SymElt::zero_unchecked(x.k(), target);
    for (lambda, c) in x.terms() {
        out.add_scaled_unchecked(table.lookup(map, lambda)?, c);
    }
    Ok(out)
}

/// `h_mu` in `basis` by iterated Pieri, largest part first.
fn forward(
    k: usize,
    max_degree: usize,
    basis: Basis,
) -> Result<BTreeMap<KBoundedPartition, SymElt>> {
    let mut memo: HashMap<(KBoundedPartition, usize), SymElt> = HashMap::new();
    let mut out: BTreeMap<KBoundedPartition, SymElt> = BTreeMap::new();
    for mu in KBoundedPartition::all_up_to(k, max_degree)? {
        let x = match mu.parts().split_last() {
            None => SymElt::one(k, basis)?,
            Some((&last, prefix)) => {
                let prev = &out[&KBoundedPartition::from_parts_unchecked(k, prefix.to_vec())];
                let mut acc = SymElt::zero_unchecked(k, basis);
                for (lambda, c) in prev.terms() {
                    let key = (lambda.clone(), last);
                    if !memo.contains_key(&key) {
                        let p = match basis {
                            Basis::KkSchur => pieri_kk(lambda, last)?,
                            _ => pieri_kschur(lambda, last)?,
                        };
                        memo.insert(key.clone(), p);
                    }
                    acc.add_scaled_unchecked(&memo[&key], c);
                }
                acc
            }
        };
        out.insert(mu, x);
    }
    Ok(out)
}

/// Inverts the forward table degree by degree. Returns the expansions of the
/// basis elements in the h basis and whether each block was unitriangular.
fn invert(
    k: usize,
    max_degree: usize,
    forward: &BTreeMap<KBoundedPartition, SymElt>,
) -> Result<(BTreeMap<KBoundedPartition, SymElt>, bool)> {
    let mut back: BTreeMap<KBoundedPartition, SymElt> = BTreeMap::new();
    let mut triangular = true;
    for d in 0..=max_degree {
        let block = KBoundedPartition::all_of_size(k, d)?;
        let m = block.len();
        // rows: h_mu; columns: basis elements of degree d
        let matrix: Vec<Vec<BigInt>> = block
            .iter()
            .map(|mu| {
                block
                    .iter()
                    .map(|lambda| forward[mu].coeff(lambda))
                    .collect()
            })
            .collect();
        for (i, row) in matrix.iter().enumerate() {
            triangular &= row[i].is_one() && row[i + 1..].iter().all(Zero::is_zero);
        }
        let inverse = invert_matrix(&matrix).ok_or(Error::SingularTransition { degree: d })?;
        // basis_j = sum_i inverse[j][i] (h_{mu_i} - lower_i)
        for (j, lambda) in block.iter().enumerate() {
            let mut x = SymElt::zero_unchecked(k, Basis::HMonomial);
            for i in 0..m {
                let c = &inverse[j][i];
                if !c.is_integer() {
                    return Err(Error::NonIntegral(lambda.parts().to_vec()));
                }
                let c = c.to_integer();
                if c.is_zero() {
                    continue;
                }
                x.add_term(block[i].clone(), c.clone());
                for (nu, e) in forward[&block[i]].terms() {
                    if nu.size() < d {
                        x.add_scaled_unchecked(&back[nu], &(-(&c * e)));
                    }
                }
            }
            back.insert(lambda.clone(), x);
        }
        debug_assert_eq!(back.len(), KBoundedPartition::all_up_to(k, d)?.len());
    }
    Ok((back, triangular))
}

fn invert_matrix(a: &[Vec<BigInt>]) -> Option<Vec<Vec<BigRational>>> {
    let m = a.len();
    let mut work: Vec<Vec<BigRational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigRational> = row
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect();
            r.extend((0..m).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..m {
        let pivot = (col..m).find(|&r| !work[r][col].is_zero())?;
        work.swap(col, pivot);
        let p = work[col][col].clone();
        for x in work[col].iter_mut() {
            *x = &*x / &p;
        }
        for r in 0..m {
            if r != col && !work[r][col].is_zero() {
                let f = work[r][col].clone();
                let pivot_row = work[col].clone();
                for (x, y) in work[r].iter_mut().zip(pivot_row.iter()) {
                    *x = &*x - &f * y;
                }
            }
        }
    }
    Some(work.into_iter().map(|row| row[m..].to_vec()).collect())
}
