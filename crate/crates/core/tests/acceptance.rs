//! Acceptance suite: one line per criterion with its runtime and limit.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use kschur::affine::{
    bruhat_leq, d_elem, is_bruhat_cover, weak_leq, AffinePermutation, IndexSet, Side,
};
use kschur::kcode::{rd, ri};
use kschur::order_lab::{fiber_table, fiber_x, fiber_y, find_a0, z_sets};
use kschur::shapes::{
    bounded_to_core, bounded_to_perm, core_to_bounded, core_to_perm, k_transpose, perm_to_bounded,
    perm_to_core, reading_word, weak_strips, CorePartition, KBoundedPartition,
};
use kschur::symfunc::SymRing;
use kschur::verify::{self, OrderConfig, SweepReport};

type Outcome = Result<String, String>;

fn bp(k: usize, parts: &[usize]) -> KBoundedPartition {
    KBoundedPartition::new(k, parts).unwrap()
}

fn word(k: usize, letters: &[usize]) -> AffinePermutation {
    AffinePermutation::from_word(k, letters).unwrap()
}

fn set(k: usize, members: &[usize]) -> IndexSet {
    IndexSet::new(k, members).unwrap()
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

/// Requires every named check of every report to pass with at least one
/// instance.
fn sweeps_pass(reports: &[SweepReport], names: &[&str]) -> Outcome {
    let mut instances = 0;
    for r in reports {
        for c in r.checks.iter().filter(|c| names.contains(&c.name)) {
            if let Some(cx) = &c.counterexample {
                return Err(format!("{} (k={}): counterexample {cx}", c.name, r.k));
            }
            ensure(c.instances > 0, || {
                format!("{} (k={}) examined nothing", c.name, r.k)
            })?;
            instances += c.instances;
        }
    }
    Ok(format!("{instances} instances"))
}

fn figure1() -> Outcome {
    let lambda = bp(3, &[3, 2, 1]);
    let core = CorePartition::new(3, &[5, 2, 1]).map_err(|e| e.to_string())?;
    let w = word(3, &[2, 0, 3, 2, 1, 0]);
    ensure(bounded_to_core(&lambda) == core, || {
        "core of (3,2,1)".into()
    })?;
    ensure(reading_word(&lambda) == [2, 0, 3, 2, 1, 0], || {
        "reading word".into()
    })?;
    ensure(bounded_to_perm(&lambda) == w, || {
        "element of (3,2,1)".into()
    })?;
    ensure(core_to_bounded(&core) == lambda, || {
        "core -> bounded".into()
    })?;
    ensure(perm_to_bounded(&w).unwrap() == lambda, || {
        "element -> bounded".into()
    })?;
    ensure(
        perm_to_core(&w).unwrap() == core && core_to_perm(&core) == w,
        || "core <-> element".into(),
    )?;
    Ok("core (5,2,1), word 203210".into())
}

fn example_kcodes() -> Outcome {
    let w = word(3, &[0, 1, 3, 2, 0, 3, 2, 1, 0]);
    let (d, i) = (
        rd(&w).map_err(|e| e.to_string())?,
        ri(&w).map_err(|e| e.to_string())?,
    );
    ensure(d.values() == [5, 3, 1, 0], || format!("RD = {d}"))?;
    ensure(i.values() == [6, 3, 0, 0], || format!("RI = {i}"))?;
    ensure(d.sh() == bp(3, &[3, 2, 2, 1, 1]), || {
        format!("sh(RD) = {}", d.sh())
    })?;
    ensure(i.sh() == bp(3, &[2, 2, 2, 1, 1, 1]), || {
        format!("sh(RI) = {}", i.sh())
    })?;
    ensure(k_transpose(&i.sh()) == d.sh(), || "k-transpose".into())?;
    Ok("RD (5,3,1,0), RI (6,3,0,0)".into())
}

fn strip_poset() -> Outcome {
    let k = 3;
    let lambda = bp(k, &[3, 2, 1]);
    let u = bounded_to_perm(&lambda);
    let expected: BTreeSet<IndexSet> = [&[][..], &[1], &[3], &[1, 3], &[1, 2], &[1, 2, 3]]
        .iter()
        .map(|m| set(k, m))
        .collect();
    let mut strips = BTreeSet::new();
    for r in 0..=k {
        strips.extend(weak_strips(&lambda, r).map_err(|e| e.to_string())?);
    }
    ensure(strips == expected, || format!("strip sets {strips:?}"))?;
    let z: BTreeSet<IndexSet> = z_sets(&u)
        .plus_grassmannian
        .unwrap_or_default()
        .into_iter()
        .collect();
    ensure(z == expected, || format!("Z family {z:?}"))?;
    for i in [1, 3] {
        let v = d_elem(&set(k, &[i])).mul(&u).unwrap();
        ensure(weak_leq(&u, &v, Side::Left).unwrap(), || {
            format!("left weak cover by s_{i}")
        })?;
    }
    let mut covers = 0;
    for a in &expected {
        for b in &expected {
            let (x, y) = (d_elem(a).mul(&u).unwrap(), d_elem(b).mul(&u).unwrap());
            let subset = a.is_subset(b);
            ensure(bruhat_leq(&x, &y).unwrap() == subset, || {
                format!("order between {a} and {b}")
            })?;
            let cover = subset && b.len() == a.len() + 1;
            ensure(is_bruhat_cover(&x, &y).unwrap() == cover, || {
                format!("cover between {a} and {b}")
            })?;
            covers += usize::from(cover);
        }
    }
    ensure(covers == 7, || format!("{covers} covers"))?;
    Ok("6 strips, 7 covers".into())
}

fn table1() -> Outcome {
    let k = 3;
    let u = word(k, &[3, 1, 0]);
    let rows: BTreeSet<(AffinePermutation, IndexSet, i32)> = fiber_table(&u, None)
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|r| (r.v, r.a, r.sign))
        .collect();
    let expected: BTreeSet<(AffinePermutation, IndexSet, i32)> = [
        (&[3, 1, 0][..], &[][..], 1),
        (&[3, 0], &[1], 1),
        (&[3, 1, 0], &[1], -1),
        (&[1, 0], &[3], 1),
        (&[3, 1, 0], &[3], -1),
        (&[0], &[1, 3], 1),
        (&[1, 0], &[1, 3], -1),
        (&[3, 0], &[1, 3], -1),
        (&[3, 1, 0], &[1, 3], 1),
    ]
    .iter()
    .map(|(v, a, s)| (word(k, v), set(k, a), *s))
    .collect();
    ensure(rows == expected, || format!("{} rows differ", rows.len()))?;
    let filtered: BTreeSet<(AffinePermutation, IndexSet)> =
        fiber_table(&u, Some(&word(k, &[2, 1, 0])))
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|r| (r.v, r.a))
            .collect();
    let expected: BTreeSet<(AffinePermutation, IndexSet)> =
        [(&[1, 0][..], &[3][..]), (&[0], &[1, 3]), (&[1, 0], &[1, 3])]
            .iter()
            .map(|(v, a)| (word(k, v), set(k, a)))
            .collect();
    ensure(filtered == expected, || "filtered rows differ".into())?;
    Ok("9 rows, 3 after filtering".into())
}

fn example_fibers() -> Outcome {
    let k = 5;
    let u = bounded_to_perm(&bp(k, &[5, 3, 2, 1]));
    let w = bounded_to_perm(&bp(k, &[5, 2, 2, 2]));
    let err = |e: kschur::Error| e.to_string();
    let a = set(k, &[5, 0, 1]);
    let (x, y) = (
        fiber_x(&a, &u).map_err(err)?,
        fiber_y(&a, &u, &w).map_err(err)?,
    );
    let got: BTreeSet<AffinePermutation> = x.elements().into_iter().collect();
    let expected: BTreeSet<AffinePermutation> = [&[1][..], &[0, 1], &[5, 1], &[5, 0, 1]]
        .iter()
        .map(|p| word(k, p).mul(&u).unwrap())
        .collect();
    ensure(got == expected && x.members == y.members, || {
        "X and Y for {5,0,1}".into()
    })?;
    let a = set(k, &[3, 5, 1]);
    let (x, y) = (
        fiber_x(&a, &u).map_err(err)?,
        fiber_y(&a, &u, &w).map_err(err)?,
    );
    let interval = |lo: &[usize]| -> Vec<IndexSet> {
        let lo = set(k, lo);
        a.subsets()
            .into_iter()
            .filter(|b| lo.is_subset(b))
            .collect()
    };
    let sorted = |mut v: Vec<IndexSet>| {
        v.sort();
        v
    };
    ensure(sorted(x.members.clone()) == sorted(interval(&[])), || {
        "X' interval".into()
    })?;
    ensure(sorted(y.members.clone()) == sorted(interval(&[1])), || {
        "Y' interval".into()
    })?;
    ensure(find_a0(&u, &w).map_err(err)? == Some(set(k, &[1])), || {
        "A0".into()
    })?;
    Ok("X = Y (4 elements), A0 = {1}".into())
}

struct Criterion {
    id: usize,
    name: &'static str,
    limit: Duration,
    run: Box<dyn Fn() -> Outcome>,
}

fn main() -> ExitCode {
    let rings = || -> Vec<SymRing> { [2, 3].iter().map(|&k| SymRing::new(k).unwrap()).collect() };
    let criteria = vec![
        Criterion {
            id: 1,
            name: "bounded partition, core and element of (3,2,1)",
            limit: Duration::from_secs(1),
            run: Box::new(figure1),
        },
        Criterion {
            id: 2,
            name: "k-codes RD and RI and their shapes",
            limit: Duration::from_secs(1),
            run: Box::new(example_kcodes),
        },
        Criterion {
            id: 3,
            name: "weak strips over (3,2,1) and their cover relations",
            limit: Duration::from_secs(1),
            run: Box::new(strip_poset),
        },
        Criterion {
            id: 4,
            name: "fiber and sign table over s_310",
            limit: Duration::from_secs(1),
            run: Box::new(table1),
        },
        Criterion {
            id: 5,
            name: "Demazure fibers over (5,3,2,1) at k=5",
            limit: Duration::from_secs(5),
            run: Box::new(example_fibers),
        },
        Criterion {
            id: 6,
            name: "strong-sum Pieri: signed sum equals interval union",
            limit: Duration::from_secs(600),
            run: Box::new(move || {
                let reports: Result<Vec<_>, _> =
                    rings().iter().map(|r| verify::pieri_sum(r, 6)).collect();
                sweeps_pass(&reports.map_err(|e| e.to_string())?, &["pieri_sum_routes"])
            }),
        },
        Criterion {
            id: 7,
            name: "strong-sum Pieri: inclusion-exclusion form",
            limit: Duration::from_secs(600),
            run: Box::new(move || {
                let reports: Result<Vec<_>, _> =
                    rings().iter().map(|r| verify::pieri_sum(r, 6)).collect();
                sweeps_pass(
                    &reports.map_err(|e| e.to_string())?,
                    &["inclusion_exclusion"],
                )
            }),
        },
        Criterion {
            id: 8,
            name: "strong-sum k-rectangle factorization",
            limit: Duration::from_secs(900),
            run: Box::new(move || {
                let reports: Result<Vec<_>, _> = rings()
                    .iter()
                    .map(|r| verify::factorization(r, 5))
                    .collect();
                sweeps_pass(
                    &reports.map_err(|e| e.to_string())?,
                    &["strong_sum_factorization", "rectangle_label_shift"],
                )
            }),
        },
        Criterion {
            id: 9,
            name: "k-Schur rectangle factorization and top degree",
            limit: Duration::from_secs(300),
            run: Box::new(move || {
                let mut reports = Vec::new();
                for ring in rings() {
                    reports.push(verify::factorization(&ring, 5).map_err(|e| e.to_string())?);
                }
                for k in 1..=3 {
                    let ring = SymRing::new(k).unwrap();
                    reports.push(verify::top_degree(&ring, 6).map_err(|e| e.to_string())?);
                }
                sweeps_pass(&reports, &["kschur_rectangle", "top_degree"])
            }),
        },
        Criterion {
            id: 10,
            name: "order-theory and fiber property suites",
            limit: Duration::from_secs(1200),
            run: Box::new(|| {
                let reports = [
                    verify::order_props(OrderConfig::new(2, 6)),
                    verify::order_props(OrderConfig::new(3, 5)),
                    verify::fibers(2, 6),
                    verify::fibers(3, 5),
                ];
                let reports: Result<Vec<_>, _> = reports.into_iter().collect();
                let reports = reports.map_err(|e| e.to_string())?;
                let names: Vec<&str> = reports
                    .iter()
                    .flat_map(|r| r.checks.iter().map(|c| c.name))
                    .collect();
                sweeps_pass(&reports, &names)
            }),
        },
    ];

    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (status, detail) = match &outcome {
            Ok(d) if elapsed <= c.limit => ("PASS", d.clone()),
            Ok(d) => ("FAIL", format!("{d}; over time limit")),
            Err(e) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {:>2} {status}  {:<52} {:>9.3}s / {:>5}s  {detail}",
            c.id,
            c.name,
            elapsed.as_secs_f64(),
            c.limit.as_secs()
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
