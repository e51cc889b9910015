use serde_json::json;

use super::{run, SweepReport};
use crate::affine::{
    bruhat_leq_unchecked, d_elem, grassmannian_ball, meet_ls, u_elem, BallCap, IndexSet,
};
use crate::error::{Error, Result};
use crate::json;
use crate::order_lab::{fiber_x, fiber_y, find_a0, in_minus, in_plus, z_sets, Fiber};

/// Fiber diagnostics over Grassmannian `u, w` of length at most `max_len`.
pub fn fibers(k: usize, max_len: usize) -> Result<SweepReport> {
    let grass = grassmannian_ball(k, max_len, BallCap::default())?;
    let all = IndexSet::all(k)?;
    let pairs: Vec<_> = grass
        .iter()
        .flat_map(|u| grass.iter().map(move |w| (u.clone(), w.clone())))
        .collect();

    let intervals = run("fiber_intervals", &pairs, |(u, w), t| {
        for a in &all {
            for result in [fiber_x(a, u), fiber_y(a, u, w)] {
                match result {
                    Ok(_) => t.check(true, || json!(null)),
                    Err(Error::Invariant(msg)) => t.check(false, || {
                        json!({"u": json::perm(u), "w": json::perm(w), "A": json::index_set(a), "error": msg})
                    }),
                    Err(e) => return Err(e),
                }
            }
        }
        Ok(())
    })?;

    let boolean = run("fiber_boolean_conditions", &grass, |u, t| {
        let minus: Vec<IndexSet> = z_sets(u).minus;
        let in_z = |c: &IndexSet| minus.contains(c);
        for a in &minus {
            let x: Fiber = fiber_x(a, u)?;
            let in_x = |c: &IndexSet| x.members.contains(c);
            for b in minus.iter().filter(|b| b.is_subset(a)) {
                let rest: Vec<usize> = a.iter().filter(|&i| !b.contains(i)).collect();
                let interval: Vec<IndexSet> =
                    a.subsets().into_iter().filter(|c| b.is_subset(c)).collect();
                let conds = [
                    in_x(b),
                    rest.iter().all(|&i| in_z(&b.with(i).expect("inside A"))),
                    rest.iter().all(|&i| in_x(&b.with(i).expect("inside A"))),
                    rest.iter().all(|&i| in_z(&a.without(i))),
                    rest.iter().all(|&i| in_x(&a.without(i))),
                    interval.iter().all(in_z),
                    interval.iter().all(in_x),
                ];
                t.check(conds.iter().all(|&c| c == conds[0]), || {
                    json!({
                        "u": json::perm(u),
                        "A": json::index_set(a),
                        "B": json::index_set(b),
                        "conditions": conds,
                        "fiber": json::fiber(&x),
                    })
                });
            }
        }
        Ok(())
    })?;

    let singleton = run("unique_singleton_fiber", &pairs, |(u, w), t| {
        let a0 = find_a0(u, w)?;
        for a in &all {
            let y = fiber_y(a, u, w)?;
            t.check((y.len() == 1) == (a0 == Some(*a)), || {
                json!({
                    "u": json::perm(u),
                    "w": json::perm(w),
                    "A": json::index_set(a),
                    "A0": a0.as_ref().map(json::index_set),
                    "fiber": json::fiber(&y),
                })
            });
        }
        Ok(())
    })?;

    let a0_conditions = run("a0_conditions", &pairs, |(u, w), t| {
        let z = meet_ls(u, w)?;
        let a0 = find_a0(u, w)?;
        let lu = u.length();
        for r in 0..=k {
            let c1 = lu - z.length() <= r
                && all
                    .iter()
                    .any(|a| in_minus(u, a) && u_elem(a).mul_unchecked(u) == z);
            let c2 = all.iter().any(|a| {
                a.len() <= r
                    && in_minus(u, a)
                    && bruhat_leq_unchecked(&u_elem(a).mul_unchecked(u), w)
            });
            let up = |a: &IndexSet| {
                in_plus(w, a) && bruhat_leq_unchecked(u, &d_elem(a).mul_unchecked(w))
            };
            let c3 = all.iter().any(|a| a.len() <= r && up(a));
            let c4 = all.iter().any(|a| a.len() == r && up(a));
            let c5 = a0.is_some_and(|a| a.len() <= r);
            let conds = [c1, c2, c3, c4, c5];
            t.check(conds.iter().all(|&c| c == c1), || {
                json!({
                    "u": json::perm(u),
                    "w": json::perm(w),
                    "r": r,
                    "conditions": conds,
                    "A0": a0.as_ref().map(json::index_set),
                })
            });
        }
        Ok(())
    })?;

    Ok(SweepReport {
        sweep: "fibers",
        k,
        bound: max_len,
        checks: vec![intervals, boolean, singleton, a0_conditions],
    })
}
