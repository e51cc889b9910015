use serde_json::{json, Value};

use kschur::affine::{AffinePermutation, ReducedWord};
use kschur::json as enc;
use kschur::kcode::{rd, ri};
use kschur::order_lab::fiber_table;
use kschur::shapes::{
    bounded_to_core, bounded_to_perm, core_to_bounded, core_to_perm, perm_to_bounded, perm_to_core,
    reading_word, setvalued_strips, weak_strip_list, KBoundedPartition,
};
use kschur::symfunc::{
    gtilde_factorization, gtilde_pieri, gtilde_pieri_ie, gtilde_pieri_signed, SymElt, SymRing,
};
use kschur::verify::{self, OrderConfig, SweepReport};
use kschur::Error;

use crate::output::Output;
use crate::{Command, PieriBasis, RunConfig, Sweep, MAX_K, MAX_SIZE};

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn config(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Invariant(_)
            | Error::KCode(_)
            | Error::SingularTransition { .. }
            | Error::NonIntegral(_) => 1,
            _ => 2,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn check_range(name: &str, value: usize, min: usize, max: usize) -> CliResult<()> {
    if value < min || value > max {
        return Err(CliError::config(format!(
            "{name}={value} out of range {min}..={max}"
        )));
    }
    Ok(())
}

fn parse_list(name: &str, s: &str) -> CliResult<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            p.parse::<usize>()
                .map_err(|_| CliError::config(format!("--{name}: cannot parse {p:?}")))
        })
        .collect()
}

fn parse_shape(k: usize, s: &str) -> CliResult<KBoundedPartition> {
    let parts: Vec<usize> = parse_list("lambda", s)?
        .into_iter()
        .filter(|&p| p > 0)
        .collect();
    let lambda = KBoundedPartition::new(k, &parts)?;
    check_range("|lambda|", lambda.size(), 0, MAX_SIZE)?;
    Ok(lambda)
}

fn parse_word(k: usize, name: &str, s: &str) -> CliResult<AffinePermutation> {
    let letters = parse_list(name, s)?;
    let w = AffinePermutation::from_word(k, &letters)?;
    if w.length() != letters.len() {
        return Err(CliError::config(format!(
            "--{name}: word {s:?} is not reduced"
        )));
    }
    Ok(w)
}

fn word_string(w: &AffinePermutation) -> String {
    w.reduced_word().to_string()
}

fn ring(cfg: &RunConfig) -> CliResult<SymRing> {
    let ring = SymRing::new(cfg.k)?;
    Ok(match &cfg.table_cache {
        Some(dir) => ring.with_cache_dir(dir),
        None => ring,
    })
}

/// Runs one subcommand; the flag is false when a check failed.
pub fn run(command: &Command, cfg: &RunConfig) -> CliResult<(Output, bool)> {
    check_range("k", cfg.k, 1, MAX_K)?;
    let jobs = cfg.jobs;
    verify::with_jobs(jobs, || dispatch(command, cfg))?
}

fn dispatch(command: &Command, cfg: &RunConfig) -> CliResult<(Output, bool)> {
    let k = cfg.k;
    match command {
        Command::Bij { lambda, max_size } => {
            let shapes = match lambda {
                Some(s) => vec![parse_shape(k, s)?],
                None => {
                    check_range("max-size", *max_size, 0, MAX_SIZE)?;
                    KBoundedPartition::all_up_to(k, *max_size)?
                }
            };
            bij(&shapes)
        }
        Command::Strips { shape, r } => {
            check_range("r", *r, 0, k)?;
            strips(&parse_shape(k, &shape.lambda)?, *r)
        }
        Command::Pieri { shape, r, basis } => {
            check_range("r", *r, 0, k)?;
            pieri(cfg, &parse_shape(k, &shape.lambda)?, *r, *basis)
        }
        Command::Gtilde { shape, r, t } => {
            check_range("r", *r, 1, k)?;
            if let Some(t) = t {
                check_range("t", *t, 1, k)?;
            }
            gtilde(cfg, &parse_shape(k, &shape.lambda)?, *r, *t)
        }
        Command::Verify {
            sweep,
            max_size,
            triple_len,
        } => {
            let bound = max_size.unwrap_or(match sweep {
                Sweep::PieriSum | Sweep::TopDegree | Sweep::OrderProps => 6,
                Sweep::Factorization | Sweep::Fibers => 5,
                Sweep::ProductSupport => 3,
            });
            check_range("max-size", bound, 0, MAX_SIZE)?;
            let report = match sweep {
                Sweep::PieriSum => verify::pieri_sum(&ring(cfg)?, bound)?,
                Sweep::Factorization => verify::factorization(&ring(cfg)?, bound)?,
                Sweep::TopDegree => verify::top_degree(&ring(cfg)?, bound)?,
                Sweep::ProductSupport => verify::product_support(&ring(cfg)?, bound)?,
                Sweep::Fibers => verify::fibers(k, bound)?,
                Sweep::OrderProps => {
                    let triple_len = triple_len.unwrap_or(bound);
                    check_range("triple-len", triple_len, 0, bound)?;
                    verify::order_props(OrderConfig {
                        k,
                        max_len: bound,
                        triple_len,
                    })?
                }
            };
            Ok(sweep_output(&report))
        }
        Command::Table1 {
            u: u_word,
            w: w_word,
        } => {
            let u = parse_word(k, "u", u_word)?;
            let w = w_word
                .as_deref()
                .map(|s| parse_word(k, "w", s))
                .transpose()?;
            let label =
                |s: &str| parse_list("u", s).map(|l| ReducedWord::new(k, l).map(|r| r.to_string()));
            let u_label = label(u_word)??;
            let w_label = w_word.as_deref().map(label).transpose()?.transpose()?;
            table1(&u, w.as_ref(), &u_label, w_label.as_deref())
        }
    }
}

fn bij(shapes: &[KBoundedPartition]) -> CliResult<(Output, bool)> {
    let mut text = String::new();
    let mut items = Vec::new();
    let mut rows = Vec::new();
    let mut all_ok = true;
    for lambda in shapes {
        let k = lambda.k();
        let core = bounded_to_core(lambda);
        let w = bounded_to_perm(lambda);
        let word = ReducedWord::new(k, reading_word(lambda))?;
        let (code_d, code_i) = (rd(&w)?, ri(&w)?);
        let round_trips = [
            core_to_bounded(&core) == *lambda,
            perm_to_bounded(&w)? == *lambda,
            perm_to_core(&w)? == core && core_to_perm(&core) == w,
            word.evaluate() == w,
        ];
        let ok = round_trips.iter().all(|&b| b);
        all_ok &= ok;
        text.push_str(&format!(
            "lambda {lambda}  core {core}  window {w}  word {word}  RD {code_d}  RI {code_i}  round-trips {}\n",
            if ok { "ok" } else { "FAILED" }
        ));
        items.push(json!({
            "lambda": enc::bounded(lambda),
            "core": enc::core(&core),
            "perm": enc::perm(&w),
            "word": word.letters(),
            "rd": enc::kcode(&code_d),
            "ri": enc::kcode(&code_i),
            "round_trips": ok,
        }));
        rows.push(vec![
            lambda.to_string(),
            core.to_string(),
            w.to_string(),
            word.to_string(),
            code_d.to_string(),
            code_i.to_string(),
            ok.to_string(),
        ]);
    }
    let out = Output {
        text,
        json: Value::Array(items),
        header: vec![
            "lambda",
            "core",
            "window",
            "word",
            "rd",
            "ri",
            "round_trips",
        ],
        rows,
    };
    Ok((out, all_ok))
}

fn strips(lambda: &KBoundedPartition, r: usize) -> CliResult<(Output, bool)> {
    let weak = weak_strip_list(lambda, r)?;
    let w = bounded_to_perm(lambda);
    let setvalued = setvalued_strips(&w, r)?;
    let mut text = format!("weak strips of size {r} over {lambda} (k={})\n", lambda.k());
    let mut rows = Vec::new();
    for s in &weak {
        text.push_str(&format!("  {}  {}\n", s.indices, s.top));
        rows.push(vec![
            "weak".into(),
            s.indices.to_string(),
            s.top.to_string(),
        ]);
    }
    text.push_str(&format!("set-valued strips of size {r} over {lambda}\n"));
    let mut sv_json = Vec::new();
    for (a, v) in &setvalued {
        let top = perm_to_bounded(v)?;
        text.push_str(&format!("  {a}  {top}\n"));
        rows.push(vec!["set-valued".into(), a.to_string(), top.to_string()]);
        sv_json.push(json!({"A": enc::index_set(a), "v": enc::perm(v), "top": enc::bounded(&top)}));
    }
    let out = Output {
        text,
        json: json!({
            "lambda": enc::bounded(lambda),
            "r": r,
            "weak": weak.iter().map(enc::strip).collect::<Vec<_>>(),
            "set_valued": sv_json,
        }),
        header: vec!["kind", "A", "top"],
        rows,
    };
    Ok((out, true))
}

fn elt_rows(label: &str, x: &SymElt) -> Vec<Vec<String>> {
    x.terms()
        .iter()
        .map(|(mu, c)| {
            vec![
                label.to_string(),
                x.basis().tag().to_string(),
                mu.to_string(),
                c.to_string(),
            ]
        })
        .collect()
}

fn pieri(
    cfg: &RunConfig,
    lambda: &KBoundedPartition,
    r: usize,
    basis: PieriBasis,
) -> CliResult<(Output, bool)> {
    let ring = ring(cfg)?;
    let x = match basis {
        PieriBasis::Ks => ring.pieri_kschur(lambda, r)?,
        PieriBasis::Kk => ring.pieri_kk(lambda, r)?,
    };
    let sym = match basis {
        PieriBasis::Ks => "s",
        PieriBasis::Kk => "g",
    };
    let out = Output {
        text: format!("h{r} * {sym}{lambda} = {x}\n"),
        json: json!({"lambda": enc::bounded(lambda), "r": r, "product": enc::sym_elt(&x)}),
        header: vec!["expression", "basis", "parts", "coeff"],
        rows: elt_rows("product", &x),
    };
    Ok((out, true))
}

fn gtilde(
    cfg: &RunConfig,
    lambda: &KBoundedPartition,
    r: usize,
    t: Option<usize>,
) -> CliResult<(Output, bool)> {
    let ring = ring(cfg)?;
    let union = gtilde_pieri(lambda, r)?;
    let signed = gtilde_pieri_signed(&ring, lambda, r)?;
    let ie = gtilde_pieri_ie(lambda, r)?;
    let expanded = ie.expand();
    let mut ok = union == signed && union == expanded;
    let mut text = format!(
        "gt{lambda} * ht{r}\n  interval union        {union}\n  signed Pieri          {signed}\n  inclusion-exclusion   {ie}\n  expanded              {expanded}\n"
    );
    let mut rows = elt_rows("interval_union", &union);
    rows.extend(elt_rows("signed_pieri", &signed));
    rows.extend(ie.terms().iter().map(|(mu, c)| {
        vec![
            "inclusion_exclusion".into(),
            "gtilde".into(),
            mu.to_string(),
            c.to_string(),
        ]
    }));
    let mut json = json!({
        "lambda": enc::bounded(lambda),
        "r": r,
        "interval_union": enc::sym_elt(&union),
        "signed_pieri": enc::sym_elt(&signed),
        "inclusion_exclusion": enc::gtilde_combination(&ie),
        "expanded": enc::sym_elt(&expanded),
    });
    if let Some(t) = t {
        let c = gtilde_factorization(&ring, lambda, t)?;
        ok &= c.holds();
        text.push_str(&format!(
            "factorization through R_{t}\n  gt(R_{t} u {lambda})   {}\n  gt(R_{t}) * gt{lambda} {}\n",
            c.lhs, c.rhs
        ));
        rows.extend(elt_rows("rectangle_union", &c.lhs));
        rows.extend(elt_rows("rectangle_product", &c.rhs));
        json["factorization"] =
            json!({"t": t, "lhs": enc::sym_elt(&c.lhs), "rhs": enc::sym_elt(&c.rhs)});
    }
    text.push_str(if ok { "agree\n" } else { "DISAGREE\n" });
    json["agree"] = json!(ok);
    let out = Output {
        text,
        json,
        header: vec!["expression", "basis", "parts", "coeff"],
        rows,
    };
    Ok((out, ok))
}

fn sweep_output(report: &SweepReport) -> (Output, bool) {
    let mut text = format!("{} k={} bound={}\n", report.sweep, report.k, report.bound);
    let mut rows = Vec::new();
    for c in &report.checks {
        let status = if c.counterexample.is_none() {
            "pass"
        } else {
            "FAIL"
        };
        text.push_str(&format!(
            "  {:<28} {:>9} instances {:>7} skipped  {status}\n",
            c.name, c.instances, c.skipped
        ));
        rows.push(vec![
            c.name.to_string(),
            c.instances.to_string(),
            c.skipped.to_string(),
            status.to_string(),
            c.counterexample
                .as_ref()
                .map(Value::to_string)
                .unwrap_or_default(),
        ]);
    }
    if let Some(cx) = report.first_counterexample() {
        text.push_str(&format!("counterexample in {}: {}\n", cx.check, cx.witness));
    }
    let passed = report.passed();
    text.push_str(if passed {
        "all checks passed\n"
    } else {
        "counterexample found\n"
    });
    let out = Output {
        text,
        json: report.to_json(),
        header: vec!["check", "instances", "skipped", "status", "counterexample"],
        rows,
    };
    (out, passed)
}

fn table1(
    u: &AffinePermutation,
    w: Option<&AffinePermutation>,
    u_label: &str,
    w_label: Option<&str>,
) -> CliResult<(Output, bool)> {
    let table = fiber_table(u, w)?;
    let mut text = format!("u = s_{u_label}");
    if let Some(w) = w_label {
        text.push_str(&format!(", restricted to v <= s_{w}"));
    }
    text.push('\n');
    let mut rows = Vec::new();
    for row in &table {
        let sign = if row.sign > 0 { "+" } else { "-" };
        text.push_str(&format!(
            "  v = s_{:<8} A = {:<10} {sign}\n",
            word_string(&row.v),
            row.a.to_string()
        ));
        rows.push(vec![
            word_string(&row.v),
            row.a.to_string(),
            row.sign.to_string(),
        ]);
    }
    let out = Output {
        text,
        json: json!({
            "u": enc::perm(u),
            "w": w.map(enc::perm),
            "rows": table.iter().map(enc::fiber_row).collect::<Vec<_>>(),
        }),
        header: vec!["v", "A", "sign"],
        rows,
    };
    Ok((out, true))
}
