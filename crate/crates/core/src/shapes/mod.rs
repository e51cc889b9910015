//! Bounded partitions, cores, affine Grassmannian elements and the
//! bijections between them, plus weak and set-valued strips.

mod partition;
mod strips;

pub use partition::{CorePartition, KBoundedPartition};
pub use strips::{setvalued_strips, weak_strip_list, weak_strips, WeakStrip};

use crate::affine::{check_rank, same_rank, AffinePermutation};
use crate::error::{Error, Result};
use partition::{conjugate, hooks, residue};

/// `p`: row `i` of the result counts cells of row `i` with hook length at
/// most `k`.
pub fn core_to_bounded(core: &CorePartition) -> KBoundedPartition {
    let k = core.k();
    let parts: Vec<usize> = hooks(core.parts())
        .iter()
        .map(|row| row.iter().filter(|&&h| h <= k).count())
        .filter(|&c| c > 0)
        .collect();
    KBoundedPartition::from_parts_unchecked(k, parts)
}

/// `c = p^-1`, computed through the affine Grassmannian element.
pub fn bounded_to_core(lambda: &KBoundedPartition) -> CorePartition {
    let w = bounded_to_perm(lambda);
    perm_to_core_unchecked(&w)
}

/// The residue reading word of `lambda`: rows from shortest to longest, each
/// row right to left.
pub fn reading_word(lambda: &KBoundedPartition) -> Vec<usize> {
    let k = lambda.k();
    let mut word = Vec::with_capacity(lambda.size());
    for (row, &len) in lambda.parts().iter().enumerate().rev() {
        for col in (0..len).rev() {
            word.push(residue(k, row, col));
        }
    }
    word
}

/// `w_lambda`.
pub fn bounded_to_perm(lambda: &KBoundedPartition) -> AffinePermutation {
    AffinePermutation::from_word(lambda.k(), &reading_word(lambda)).expect("residues lie in I")
}

/// `s_i . core`: add every addable corner of residue `i`, or else remove
/// every removable corner of residue `i`.
pub fn core_action(i: usize, core: &CorePartition) -> Result<CorePartition> {
    let k = core.k();
    if i > k {
        return Err(Error::LetterOutOfRange { letter: i, k });
    }
    Ok(core_action_unchecked(i, core))
}

fn core_action_unchecked(i: usize, core: &CorePartition) -> CorePartition {
    let k = core.k();
    let parts = core.parts();
    let mut out = parts.to_vec();
    let addable: Vec<usize> = (0..=parts.len())
        .filter(|&r| {
            let len = parts.get(r).copied().unwrap_or(0);
            (r == 0 || parts[r - 1] > len) && residue(k, r, len) == i
        })
        .collect();
    if !addable.is_empty() {
        for r in addable {
            if r == out.len() {
                out.push(1);
            } else {
                out[r] += 1;
            }
        }
    } else {
        for r in 0..parts.len() {
            let len = parts[r];
            let corner = r + 1 == parts.len() || parts[r + 1] < len;
            if corner && residue(k, r, len - 1) == i {
                out[r] -= 1;
            }
        }
        while out.last() == Some(&0) {
            out.pop();
        }
    }
    CorePartition::from_parts_unchecked(k, out)
}

/// `w . empty` for an affine Grassmannian `w`.
pub fn perm_to_core(w: &AffinePermutation) -> Result<CorePartition> {
    if !w.is_grassmannian() {
        return Err(Error::NotGrassmannian);
    }
    Ok(perm_to_core_unchecked(w))
}

fn perm_to_core_unchecked(w: &AffinePermutation) -> CorePartition {
    let mut core = CorePartition::from_parts_unchecked(w.k(), Vec::new());
    for &s in w.reduced_word().letters().iter().rev() {
        core = core_action_unchecked(s, &core);
    }
    core
}

/// Bounded partition of an affine Grassmannian element.
pub fn perm_to_bounded(w: &AffinePermutation) -> Result<KBoundedPartition> {
    Ok(core_to_bounded(&perm_to_core(w)?))
}

pub(crate) fn perm_to_bounded_unchecked(w: &AffinePermutation) -> KBoundedPartition {
    core_to_bounded(&perm_to_core_unchecked(w))
}

/// The affine Grassmannian element of a core.
pub fn core_to_perm(core: &CorePartition) -> AffinePermutation {
    bounded_to_perm(&core_to_bounded(core))
}

/// `lambda^{omega_k} = p(c(lambda)')`.
pub fn k_transpose(lambda: &KBoundedPartition) -> KBoundedPartition {
    let core = bounded_to_core(lambda);
    core_to_bounded(&CorePartition::from_parts_unchecked(
        lambda.k(),
        conjugate(core.parts()),
    ))
}

/// The k-rectangle `R_t = (t^{k+1-t})`.
pub fn k_rectangle(t: usize, k: usize) -> Result<KBoundedPartition> {
    check_rank(k)?;
    if t == 0 || t > k {
        return Err(Error::OutOfRange {
            name: "t",
            value: t,
            min: 1,
            max: k,
        });
    }
    Ok(KBoundedPartition::from_parts_unchecked(
        k,
        vec![t; k + 1 - t],
    ))
}

/// Multiset union of parts, sorted decreasingly.
pub fn union_sort(mu: &KBoundedPartition, lambda: &KBoundedPartition) -> Result<KBoundedPartition> {
    same_rank(mu.k(), lambda.k())?;
    let mut parts: Vec<usize> = mu.parts().iter().chain(lambda.parts()).copied().collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Ok(KBoundedPartition::from_parts_unchecked(mu.k(), parts))
}

/// The index-rotation automorphism `f_t: s_i -> s_{i+t}`.
pub fn shift_ft(w: &AffinePermutation, t: usize) -> Result<AffinePermutation> {
    if t > w.k() {
        return Err(Error::OutOfRange {
            name: "t",
            value: t,
            min: 0,
            max: w.k(),
        });
    }
    Ok(w.shift(t))
}
