use serde_json::json;

use super::{run, SweepReport};
use crate::affine::{check_rank, grassmannian_ball, weak_leq_unchecked, BallCap, Side};
use crate::error::Result;
use crate::json;
use crate::order_lab::oracle::{weak_join_in, Extremum};
use crate::shapes::{bounded_to_perm, k_rectangle, union_sort, KBoundedPartition};
use crate::symfunc::{
    gtilde_factorization, gtilde_pieri, gtilde_pieri_fibers, gtilde_pieri_ie, gtilde_pieri_signed,
    kschur_rectangle, top_degree as top_degree_cmp, Basis, SymElt, SymRing,
};

fn shapes_and_params(k: usize, max_size: usize) -> Result<Vec<(KBoundedPartition, usize)>> {
    Ok(KBoundedPartition::all_up_to(k, max_size)?
        .into_iter()
        .flat_map(|lambda| (1..=k).map(move |r| (lambda.clone(), r)))
        .collect())
}

/// `gtilde_lambda * htilde_r` three ways (interval union, signed Pieri sum,
/// fiber counts), plus the inclusion-exclusion form, for `|lambda| <= max_size`
/// and `1 <= r <= k`.
pub fn pieri_sum(ring: &SymRing, max_size: usize) -> Result<SweepReport> {
    let k = ring.k();
    let items = shapes_and_params(k, max_size)?;
    let routes = run("pieri_sum_routes", &items, |(lambda, r), t| {
        let union = gtilde_pieri(lambda, *r)?;
        let signed = gtilde_pieri_signed(ring, lambda, *r)?;
        let fibers = gtilde_pieri_fibers(lambda, *r)?;
        let ok = union == signed && union == fibers;
        t.check(ok, || {
            json!({
                "lambda": json::bounded(lambda),
                "r": r,
                "interval_union": json::sym_elt(&union),
                "signed_pieri": json::sym_elt(&signed),
                "fiber_counts": json::sym_elt(&fibers),
            })
        });
        Ok(())
    })?;
    let ie = run("inclusion_exclusion", &items, |(lambda, r), t| {
        let union = gtilde_pieri(lambda, *r)?;
        let comb = gtilde_pieri_ie(lambda, *r)?;
        let expanded = comb.expand();
        t.check(expanded == union, || {
            json!({
                "lambda": json::bounded(lambda),
                "r": r,
                "combination": json::gtilde_combination(&comb),
                "expanded": json::sym_elt(&expanded),
                "interval_union": json::sym_elt(&union),
            })
        });
        Ok(())
    })?;
    Ok(SweepReport {
        sweep: "pieri-sum",
        k,
        bound: max_size,
        checks: vec![routes, ie],
    })
}

/// Rectangle factorizations of `gtilde` and of k-Schur functions, and the
/// compatibility of inclusion-exclusion labels with `R_t cup -`, for
/// `|lambda| <= max_size` and `1 <= t <= k`.
pub fn factorization(ring: &SymRing, max_size: usize) -> Result<SweepReport> {
    let k = ring.k();
    let items = shapes_and_params(k, max_size)?;
    let rect_degree = (1..=k).map(|t| t * (k + 1 - t)).max().unwrap_or(0);
    ring.table(rect_degree.min(max_size))?;
    let gt = run("strong_sum_factorization", &items, |(lambda, tt), t| {
        let c = gtilde_factorization(ring, lambda, *tt)?;
        t.check(c.holds(), || {
            json!({
                "lambda": json::bounded(lambda),
                "t": tt,
                "lhs": json::sym_elt(&c.lhs),
                "rhs": json::sym_elt(&c.rhs),
            })
        });
        Ok(())
    })?;
    let ks = run("kschur_rectangle", &items, |(lambda, tt), t| {
        let c = kschur_rectangle(ring, lambda, *tt)?;
        t.check(c.holds(), || {
            json!({
                "lambda": json::bounded(lambda),
                "t": tt,
                "lhs": json::sym_elt(&c.lhs),
                "rhs": json::sym_elt(&c.rhs),
            })
        });
        Ok(())
    })?;
    let shift = run("rectangle_label_shift", &items, |(lambda, tt), t| {
        let rect = k_rectangle(*tt, k)?;
        let big = union_sort(&rect, lambda)?;
        for r in 1..=k {
            let lhs = gtilde_pieri_ie(&big, r)?;
            let rhs = gtilde_pieri_ie(lambda, r)?.union_rectangle(*tt)?;
            t.check(lhs == rhs, || {
                json!({
                    "lambda": json::bounded(lambda),
                    "t": tt,
                    "r": r,
                    "labels_of_union": json::gtilde_combination(&lhs),
                    "shifted_labels": json::gtilde_combination(&rhs),
                })
            });
        }
        Ok(())
    })?;
    Ok(SweepReport {
        sweep: "factorization",
        k,
        bound: max_size,
        checks: vec![gt, ks, shift],
    })
}

/// Top-degree part of `g_lambda` against `s_lambda` for `|lambda| <= max_size`.
pub fn top_degree(ring: &SymRing, max_size: usize) -> Result<SweepReport> {
    let k = ring.k();
    ring.table(max_size)?;
    let items = KBoundedPartition::all_up_to(k, max_size)?;
    let check = run("top_degree", &items, |lambda, t| {
        let c = top_degree_cmp(ring, lambda)?;
        t.check(c.holds(), || {
            json!({
                "lambda": json::bounded(lambda),
                "g_top_degree": json::sym_elt(&c.lhs),
                "s": json::sym_elt(&c.rhs),
            })
        });
        Ok(())
    })?;
    Ok(SweepReport {
        sweep: "top-degree",
        k,
        bound: max_size,
        checks: vec![check],
    })
}

/// Every `u` in the support of `s_v s_w` or `g_v g_w` lies above the left
/// weak join of `v` and `w`, for `|v|, |w| <= max_size`.
pub fn product_support(ring: &SymRing, max_size: usize) -> Result<SweepReport> {
    let k = ring.k();
    check_rank(k)?;
    ring.table(max_size)?;
    let shapes = KBoundedPartition::all_up_to(k, max_size)?;
    let pairs: Vec<(KBoundedPartition, KBoundedPartition)> = shapes
        .iter()
        .flat_map(|v| shapes.iter().map(move |w| (v.clone(), w.clone())))
        .collect();
    let universe = grassmannian_ball(k, 2 * max_size, BallCap::default())?;
    let mut checks = Vec::new();
    for (name, basis) in [
        ("kschur_product_support", Basis::KSchur),
        ("kk_schur_product_support", Basis::KkSchur),
    ] {
        checks.push(run(name, &pairs, |(v, w), t| {
            let wv = bounded_to_perm(v);
            let ww = bounded_to_perm(w);
            let product = ring.product(
                &SymElt::basis_element(v, basis),
                &SymElt::basis_element(w, basis),
            )?;
            let join = weak_join_in(&wv, &ww, Side::Left, &universe);
            let witness = || {
                json!({
                    "v": json::bounded(v),
                    "w": json::bounded(w),
                    "product": json::sym_elt(&product),
                })
            };
            match join {
                Extremum::Unique(j) => {
                    for u in product.terms().keys() {
                        let ok = weak_leq_unchecked(&j, &bounded_to_perm(u), Side::Left);
                        t.check(ok, witness);
                    }
                }
                _ => t.check(false, witness),
            }
            Ok(())
        })?);
    }
    Ok(SweepReport {
        sweep: "product-support",
        k,
        bound: max_size,
        checks,
    })
}
