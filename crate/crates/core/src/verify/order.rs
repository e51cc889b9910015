use std::collections::{BTreeSet, HashMap, VecDeque};

use serde_json::{json, Value};

use super::{run, SweepReport};
use crate::affine::{
    ball, bruhat_leq_unchecked, d_elem, grassmannian_ball, hecke_apply, is_bruhat_cover, meet_ls,
    s_join_l, u_elem, weak_leq_unchecked, AffinePermutation, BallCap, IndexSet, Side,
};
use crate::error::Result;
use crate::json;
use crate::order_lab::oracle::{
    meet_ls_in, s_join_l_in, strong_join_in, strong_meet_in, subword_lower_interval, Extremum,
};
use crate::order_lab::{forbidden_index, forbidden_minus, strips_meet, z_sets, ZFamily};
use crate::shapes::{
    perm_to_bounded_unchecked, union_sort, weak_strip_list, weak_strips, KBoundedPartition,
};

/// Ranges for the order-theory sweep: pairs and single elements range over
/// the ball of radius `max_len`, triples over the ball of radius
/// `triple_len`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderConfig {
    pub k: usize,
    pub max_len: usize,
    pub triple_len: usize,
}

impl OrderConfig {
    pub fn new(k: usize, max_len: usize) -> Self {
        Self {
            k,
            max_len,
            triple_len: max_len,
        }
    }
}

type P = AffinePermutation;

fn phi(x: &P, y: &P, side: Side) -> P {
    hecke_apply(x, y, side, true)
}

fn psi(x: &P, y: &P, side: Side) -> P {
    hecke_apply(x, y, side, false)
}

fn leq(a: &P, b: &P) -> bool {
    bruhat_leq_unchecked(a, b)
}

fn wl(a: &P, b: &P) -> bool {
    weak_leq_unchecked(a, b, Side::Left)
}

fn wr(a: &P, b: &P) -> bool {
    weak_leq_unchecked(a, b, Side::Right)
}

fn perms(items: &[&P]) -> Value {
    Value::Array(items.iter().map(|p| json::perm(p)).collect())
}

/// Whether `cand` lies in `set` and dominates all of it (`top`) or is
/// dominated by all of it.
fn is_extremum(cand: &P, set: &[&P], top: bool) -> bool {
    set.contains(&cand)
        && set
            .iter()
            .all(|z| if top { leq(z, cand) } else { leq(cand, z) })
}

/// Saturated chains from every `x` to every `y >= x` inside `set`.
fn has_chain_property(set: &[P]) -> Option<(P, P)> {
    let n = set.len();
    let mut up: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            if set[j].length() == set[i].length() + 1 && leq(&set[i], &set[j]) {
                up[i].push(j);
            }
        }
    }
    for i in 0..n {
        let mut seen = vec![false; n];
        seen[i] = true;
        let mut queue = VecDeque::from([i]);
        while let Some(a) = queue.pop_front() {
            for &b in &up[a] {
                if !seen[b] {
                    seen[b] = true;
                    queue.push_back(b);
                }
            }
        }
        for j in 0..n {
            if !seen[j] && leq(&set[i], &set[j]) {
                return Some((set[i].clone(), set[j].clone()));
            }
        }
    }
    None
}

/// Saturated chains inside a family of index sets ordered by inclusion.
fn family_chain_gap(family: &[IndexSet]) -> Option<(IndexSet, IndexSet)> {
    let members: BTreeSet<IndexSet> = family.iter().copied().collect();
    for a in family {
        let mut seen = BTreeSet::from([*a]);
        let mut queue = VecDeque::from([*a]);
        while let Some(c) = queue.pop_front() {
            for i in c.complement_members() {
                if let Some(d) = c.with(i) {
                    if members.contains(&d) && seen.insert(d) {
                        queue.push_back(d);
                    }
                }
            }
        }
        if let Some(b) = family.iter().find(|b| a.is_subset(b) && !seen.contains(b)) {
            return Some((*a, *b));
        }
    }
    None
}

fn letters(w: &P) -> BTreeSet<usize> {
    w.reduced_word().letters().iter().copied().collect()
}

fn strongly_commutative(x: &P, y: &P) -> bool {
    let n = x.n();
    let (lx, ly) = (letters(x), letters(y));
    lx.iter().all(|&i| {
        ly.iter()
            .all(|&j| i != j && (i + 1) % n != j && (j + 1) % n != i)
    })
}

/// Order-theoretic identities for the affine symmetric group of rank `k`,
/// each certified against brute force inside a length ball.
pub fn order_props(cfg: OrderConfig) -> Result<SweepReport> {
    let k = cfg.k;
    let cap = BallCap::default();
    let big = ball(k, cfg.max_len, cap)?;
    let small = ball(k, cfg.triple_len, cap)?;
    // joins found in `big` count only if they survive in a wider ball
    let wide = ball(k, cfg.max_len + 2, cap)?;
    let gens: Vec<P> = (0..=k).map(|i| P::generator(k, i)).collect::<Result<_>>()?;
    let all_sets = IndexSet::all(k)?;
    let mut checks = Vec::new();

    checks.push(run("weak_order_factorization", &small, |x, t| {
        for y in &small {
            let xy = x.mul_unchecked(y);
            for z in &small {
                let yz = y.mul_unchecked(z);
                let xyz = x.mul_unchecked(&yz);
                let lhs1 = wl(z, &yz) && wl(&yz, &xyz);
                let rhs1 = wl(y, &xy) && wl(z, &xyz);
                let lhs2 = wl(&yz, z) && wl(&xyz, &yz);
                let rhs2 = wl(y, &xy) && wl(&xyz, z);
                t.check(
                    lhs1 == rhs1 && lhs2 == rhs2,
                    || json!({"xyz": perms(&[x, y, z])}),
                );
            }
        }
        Ok(())
    })?);

    checks.push(run("strong_cover_reflection", &big, |v, t| {
        let lv = v.length();
        let below: Vec<&P> = big.iter().filter(|u| u.length() + 1 == lv).collect();
        for u in &below {
            let by_reflection = v.mul_unchecked(&u.inverse()).is_reflection();
            let cover = is_bruhat_cover(u, v)?;
            t.check(
                cover == by_reflection,
                || json!({"u": json::perm(u), "v": json::perm(v)}),
            );
        }
        // the order generated by reflection covers is the classical one
        let index: HashMap<&P, usize> = big.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut seen = vec![false; big.len()];
        seen[index[v]] = true;
        let mut queue = VecDeque::from([v.clone()]);
        while let Some(a) = queue.pop_front() {
            for b in big.iter().filter(|b| b.length() + 1 == a.length()) {
                if a.mul_unchecked(&b.inverse()).is_reflection() && !seen[index[b]] {
                    seen[index[b]] = true;
                    queue.push_back(b.clone());
                }
            }
        }
        for (i, u) in big.iter().enumerate() {
            if u.length() <= lv {
                t.check(
                    seen[i] == leq(u, v),
                    || json!({"u": json::perm(u), "v": json::perm(v)}),
                );
            }
        }
        Ok(())
    })?);

    checks.push(run("demazure_actions", &small, |x, t| {
        let xi = x.inverse();
        for side in [Side::Left, Side::Right] {
            let weak = |a: &P, b: &P| weak_leq_unchecked(a, b, side);
            for w in &small {
                let (pw, qw) = (phi(x, w, side), psi(x, w, side));
                let round_up = phi(x, &psi(&xi, w, side), side);
                let round_down = psi(&xi, &phi(x, w, side), side);
                let ok = weak(w, &pw) && weak(&qw, w) && leq(w, &round_up) && leq(&round_down, w);
                t.check(ok, || json!({"x": json::perm(x), "w": json::perm(w), "side": format!("{side:?}")}));
                for v in &small {
                    if leq(v, w) {
                        let ok = leq(&phi(x, v, side), &pw) && leq(&psi(x, v, side), &qw);
                        t.check(ok, || {
                            json!({"x": json::perm(x), "v": json::perm(v), "w": json::perm(w), "side": format!("{side:?}")})
                        });
                    }
                    if leq(v, x) {
                        let ok = leq(&phi(v, w, side), &pw) && leq(&qw, &psi(v, w, side));
                        t.check(ok, || {
                            json!({"x'": json::perm(v), "x": json::perm(x), "y": json::perm(w), "side": format!("{side:?}")})
                        });
                    }
                }
            }
        }
        Ok(())
    })?);

    checks.push(run("demazure_product_factors", &big, |x, t| {
        for y in &big {
            let z = phi(x, y, Side::Left);
            let x2 = z.mul_unchecked(&y.inverse());
            let y2 = x.inverse().mul_unchecked(&z);
            let ok = wr(x, &z)
                && wr(&x2, &z)
                && wl(y, &z)
                && wl(&y2, &z)
                && z.length() == x.length() + y2.length()
                && z.length() == x2.length() + y.length()
                && leq(&x2, x)
                && leq(&y2, y);
            t.check(
                ok,
                || json!({"x": json::perm(x), "y": json::perm(y), "z": json::perm(&z)}),
            );
        }
        Ok(())
    })?);

    checks.push(run("anti_demazure_factors", &big, |x, t| {
        for y in &big {
            let z = psi(x, y, Side::Left);
            let x2 = z.mul_unchecked(&y.inverse());
            let ok = leq(&x2, x) && wl(&z, y) && wr(&x2.inverse(), y);
            t.check(
                ok,
                || json!({"x": json::perm(x), "y": json::perm(y), "z": json::perm(&z)}),
            );
        }
        Ok(())
    })?);

    checks.push(run("demazure_meets_joins", &small, |v, t| {
        for w in &small {
            if let Extremum::Unique(m) = strong_meet_in(v, w, &big) {
                for s in &gens {
                    let (pv, pw, pm) = (phi(s, v, Side::Left), phi(s, w, Side::Left), phi(s, &m, Side::Left));
                    let got = strong_meet_in(&pv, &pw, &wide);
                    t.check(got == Extremum::Unique(pm.clone()), || {
                        json!({"v": json::perm(v), "w": json::perm(w), "s": json::perm(s), "meet": json::perm(&m)})
                    });
                }
            }
            let join = strong_join_in(v, w, &big).unique();
            match join.filter(|j| strong_join_in(v, w, &wide).unique().as_ref() == Some(j)) {
                Some(j) => {
                    for s in &gens {
                        let (qv, qw, qj) = (psi(s, v, Side::Left), psi(s, w, Side::Left), psi(s, &j, Side::Left));
                        let bounds: Vec<&P> =
                            wide.iter().filter(|z| leq(&qv, z) && leq(&qw, z)).collect();
                        t.check(is_extremum(&qj, &bounds, false), || {
                            json!({"v": json::perm(v), "w": json::perm(w), "s": json::perm(s), "join": json::perm(&j)})
                        });
                    }
                }
                None => t.skip(),
            }
        }
        Ok(())
    })?);

    checks.push(run("min_demazure_factor", &small, |x, t| {
        for y in &small {
            let m = psi(&y.inverse(), x, Side::Right);
            let d: Vec<&P> = small
                .iter()
                .filter(|u| leq(x, &phi(u, y, Side::Left)))
                .collect();
            let e: Vec<&P> = small
                .iter()
                .filter(|u| leq(&psi(&u.inverse(), x, Side::Left), y))
                .collect();
            let ok = d == e && is_extremum(&m, &d, false);
            t.check(
                ok,
                || json!({"x": json::perm(x), "y": json::perm(y), "min": json::perm(&m)}),
            );
        }
        Ok(())
    })?);

    checks.push(run("strong_left_join_meet", &big, |x, t| {
        for y in &big {
            let z = s_join_l(x, y)?;
            if z.length() <= cfg.max_len {
                t.check(
                    s_join_l_in(x, y, &big) == Extremum::Unique(z.clone()),
                    || json!({"x": json::perm(x), "y": json::perm(y), "join": json::perm(&z)}),
                );
            } else {
                t.skip();
            }
            let m = meet_ls(x, y)?;
            t.check(
                meet_ls_in(x, y, &big) == Extremum::Unique(m.clone()),
                || json!({"x": json::perm(x), "y": json::perm(y), "meet": json::perm(&m)}),
            );
        }
        Ok(())
    })?);

    checks.push(run("flip_anti_isomorphism", &big, |z, t| {
        let left: Vec<&P> = big.iter().filter(|x| wl(x, z)).collect();
        let right: Vec<&P> = big.iter().filter(|y| wr(y, z)).collect();
        let flip = |x: &P| z.mul_unchecked(&x.inverse());
        let unflip = |y: &P| y.inverse().mul_unchecked(z);
        let images: BTreeSet<P> = left.iter().map(|x| flip(x)).collect();
        let right_set: BTreeSet<P> = right.iter().map(|y| (*y).clone()).collect();
        let bijective = images == right_set
            && images.len() == left.len()
            && left.iter().all(|x| flip(x).length() + x.length() == z.length())
            && right.iter().all(|y| unflip(y).length() + y.length() == z.length());
        t.check(bijective, || json!({"z": json::perm(z)}));
        for (dom, f) in [(&left, &flip as &dyn Fn(&P) -> P), (&right, &unflip as &dyn Fn(&P) -> P)] {
            for a in dom.iter() {
                for b in dom.iter() {
                    let (fa, fb) = (f(a), f(b));
                    t.check(leq(a, b) == leq(&fb, &fa), || {
                        json!({"z": json::perm(z), "a": json::perm(a), "b": json::perm(b)})
                    });
                    if let Extremum::Unique(m) = strong_meet_in(a, b, &big) {
                        if dom.contains(&&m) {
                            let bounds: Vec<&P> =
                                big.iter().filter(|c| leq(&fa, c) && leq(&fb, c)).collect();
                            t.check(is_extremum(&f(&m), &bounds, false), || {
                                json!({"z": json::perm(z), "a": json::perm(a), "b": json::perm(b), "meet": json::perm(&m)})
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    })?);

    checks.push(run("weak_interval_chains", &big, |u, t| {
        for side in [Side::Left, Side::Right] {
            let interval: Vec<P> = big
                .iter()
                .filter(|x| weak_leq_unchecked(x, u, side))
                .cloned()
                .collect();
            let gap = has_chain_property(&interval);
            t.check(gap.is_none(), || {
                let (x, y) = gap.clone().expect("gap");
                json!({"u": json::perm(u), "side": format!("{side:?}"), "x": json::perm(&x), "y": json::perm(&y)})
            });
        }
        Ok(())
    })?);

    let z_checks = z_family_checks(cfg, &big)?;
    checks.extend(z_checks);

    checks.push(run("strongly_disjoint_factors", &all_sets, |a, t| {
        for b in &all_sets {
            if !a.strongly_disjoint(b) {
                continue;
            }
            let (da, db) = (d_elem(a), d_elem(b));
            let ab = da.mul_unchecked(&db);
            let ok = strongly_commutative(&da, &db)
                && ab == db.mul_unchecked(&da)
                && ab.length() == a.len() + b.len();
            t.check(
                ok,
                || json!({"A": json::index_set(a), "B": json::index_set(b)}),
            );
            let below_a = subword_lower_interval(&da);
            let below_b = subword_lower_interval(&db);
            for x in &below_a {
                for y in &below_b {
                    let xy = x.mul_unchecked(y);
                    let ok = strongly_commutative(x, y)
                        && xy == y.mul_unchecked(x)
                        && xy.length() == x.length() + y.length();
                    t.check(ok, || json!({"x": json::perm(x), "y": json::perm(y)}));
                    for z in &small {
                        let (xz, yz, xyz) =
                            (x.mul_unchecked(z), y.mul_unchecked(z), xy.mul_unchecked(z));
                        let up = wl(z, &xyz) == (wl(z, &xz) && wl(z, &yz));
                        let down = wl(&xyz, z) == (wl(&xz, z) && wl(&yz, z));
                        t.check(
                            up && down,
                            || json!({"x": json::perm(x), "y": json::perm(y), "z": json::perm(z)}),
                        );
                    }
                }
            }
        }
        Ok(())
    })?);

    let grass = grassmannian_ball(k, cfg.max_len, BallCap::default())?;
    checks.push(run("forbidden_indices", &grass, |w, t| {
        let lambda = perm_to_bounded_unchecked(w);
        let plus = forbidden_index(&lambda);
        for r in 0..=k {
            for a in weak_strips(&lambda, r)? {
                t.check(!a.contains(plus), || {
                    json!({"lambda": json::bounded(&lambda), "index": plus, "A": json::index_set(&a)})
                });
            }
        }
        let top = weak_strip_list(&lambda, k)?;
        let expected = union_sort(&KBoundedPartition::new(k, &[k])?, &lambda)?;
        t.check(top.len() == 1 && top[0].top == expected, || {
            json!({"lambda": json::bounded(&lambda), "full_strips": top.iter().map(json::strip).collect::<Vec<_>>()})
        });
        Ok(())
    })?);
    checks.push(run("forbidden_minus_indices", &big, |u, t| {
        let bad = forbidden_minus(u)?;
        let minus = z_sets(u).minus;
        let ok = !bad.is_empty() && minus.iter().all(|a| bad.iter().all(|&i| !a.contains(i)));
        t.check(ok, || json!({"u": json::perm(u), "indices": bad}));
        Ok(())
    })?);

    Ok(SweepReport {
        sweep: "order-props",
        k,
        bound: cfg.max_len,
        checks,
    })
}

fn z_family_checks(cfg: OrderConfig, big: &[P]) -> Result<Vec<super::CheckReport>> {
    let mut out = Vec::new();
    out.push(run("z_family_closure", big, |u, t| {
        let z = z_sets(u);
        for (name, fam) in [("plus", &z.plus), ("minus", &z.minus)] {
            for a in fam.iter() {
                for b in fam.iter() {
                    let cap = a.intersection(b);
                    t.check(fam.contains(&cap), || {
                        json!({"u": json::perm(u), "family": name, "A": json::index_set(a), "B": json::index_set(b), "op": "intersection"})
                    });
                    if let Some(cup) = a.union(b) {
                        t.check(fam.contains(&cup), || {
                            json!({"u": json::perm(u), "family": name, "A": json::index_set(a), "B": json::index_set(b), "op": "union"})
                        });
                    }
                }
            }
        }
        Ok(())
    })?);

    out.push(run("z_family_maximum", big, |u, t| {
        let z = z_sets(u);
        let mut fams = vec![ZFamily::Minus];
        if u.is_grassmannian() {
            fams.push(ZFamily::PlusGrassmannian);
        }
        for f in fams {
            t.check(
                z.maximum(f).is_some(),
                || json!({"u": json::perm(u), "family": format!("{f:?}")}),
            );
        }
        Ok(())
    })?);

    out.push(run("z_family_chains", big, |u, t| {
        let z = z_sets(u);
        for (name, fam) in [("plus", &z.plus), ("minus", &z.minus)] {
            let gap = family_chain_gap(fam);
            t.check(gap.is_none(), || {
                let (a, b) = gap.expect("gap");
                json!({"u": json::perm(u), "family": name, "A": json::index_set(&a), "B": json::index_set(&b)})
            });
        }
        Ok(())
    })?);

    out.push(run("cyclic_factor_meets", big, |u, t| {
        let z = z_sets(u);
        let lower: Vec<BTreeSet<P>> = z
            .plus
            .iter()
            .map(|a| subword_lower_interval(&d_elem(a).mul_unchecked(u)))
            .collect();
        for (i, a) in z.plus.iter().enumerate() {
            for (j, b) in z.plus.iter().enumerate().skip(i + 1) {
                let claimed = d_elem(&a.intersection(b)).mul_unchecked(u);
                let common: Vec<&P> = lower[i].intersection(&lower[j]).collect();
                t.check(is_extremum(&claimed, &common, true), || {
                    json!({"u": json::perm(u), "A": json::index_set(a), "B": json::index_set(b)})
                });
            }
        }
        Ok(())
    })?);

    out.push(run("cyclic_factor_joins", big, |u, t| {
        let z = z_sets(u);
        let elems: Vec<P> = z.minus.iter().map(|a| u_elem(a).mul_unchecked(u)).collect();
        for (i, a) in z.minus.iter().enumerate() {
            for (j, b) in z.minus.iter().enumerate().skip(i + 1) {
                let claimed = u_elem(&a.intersection(b)).mul_unchecked(u);
                let bounds: Vec<&P> = big
                    .iter()
                    .filter(|c| leq(&elems[i], c) && leq(&elems[j], c))
                    .collect();
                t.check(is_extremum(&claimed, &bounds, false), || {
                    json!({"u": json::perm(u), "A": json::index_set(a), "B": json::index_set(b)})
                });
            }
        }
        Ok(())
    })?);

    let grass_universe = grassmannian_ball(cfg.k, cfg.max_len + cfg.k, BallCap::default())?;
    let grass: Vec<P> = big
        .iter()
        .filter(|u| u.is_grassmannian())
        .cloned()
        .collect();
    out.push(run("strip_meets", &grass, |u, t| {
        let lambda = perm_to_bounded_unchecked(u);
        let strips = z_sets(u).plus_grassmannian.unwrap_or_default();
        for a in &strips {
            for b in &strips {
                let meet = strips_meet(&lambda, a, b)?;
                let (da, db) = (d_elem(a).mul_unchecked(u), d_elem(b).mul_unchecked(u));
                let got = strong_meet_in(&da, &db, &grass_universe)
                    .unique()
                    .map(|m| perm_to_bounded_unchecked(&m));
                t.check(got.as_ref() == Some(&meet), || {
                    json!({"lambda": json::bounded(&lambda), "A": json::index_set(a), "B": json::index_set(b)})
                });
            }
        }
        Ok(())
    })?);
    Ok(out)
}
