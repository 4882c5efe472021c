use std::path::Path;

use anclass::bounds::{self, EProfile};
use anclass::characters::CharacterTable;
use anclass::classalgebra::{covering_number, covers, frobenius_count};
use anclass::constructor::{construct_witnesses, sequences, Mode, SearchConfig, SequenceCache, WitnessOptions};
use anclass::verify::{run_suite, Suite, VerifyConfig};
use anclass::{ClassLabel, Error, Partition, Result};
use serde_json::{json, Value};

use crate::{BoundsReport, Cli, Command};

pub struct Output {
    pub text: String,
    pub pass: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, pass: true }
    }
}

/// 2 for usage and limit errors, 1 for everything that is a negative
/// mathematical outcome.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidPartition(_)
        | Error::InvalidPermutation(_)
        | Error::InvalidLabel(_)
        | Error::OddPermutation
        | Error::NotSplit(_)
        | Error::DegreeMismatch(..)
        | Error::SizeMismatch(..)
        | Error::LimitExceeded { .. }
        | Error::EvenOrSmallN(_)
        | Error::Format { .. }
        | Error::Io(_) => 2,
        _ => 1,
    }
}

fn json_text(v: &Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("plain data"))
}

/// Parses "7,9,11", "8..16" (inclusive) or a mix of both.
pub fn parse_ns(s: &str) -> Result<Vec<usize>> {
    let bad = || Error::InvalidLabel(format!("bad degree list {s:?}"));
    let mut out = Vec::new();
    for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        if let Some((a, b)) = tok.split_once("..") {
            let a: usize = a.parse().map_err(|_| bad())?;
            let b: usize = b.trim_start_matches('=').parse().map_err(|_| bad())?;
            out.extend(a..=b);
        } else {
            out.push(tok.parse().map_err(|_| bad())?);
        }
    }
    if out.is_empty() {
        return Err(bad());
    }
    Ok(out)
}

fn label(n: usize, s: &str) -> Result<ClassLabel> {
    let l: ClassLabel = s.parse()?;
    if l.n() != n {
        return Err(Error::DegreeMismatch(n, l.n()));
    }
    Ok(l)
}

pub fn run(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Table { n, export, import, limit } => table(cli.json, *n, export.as_deref(), import.as_deref(), *limit),
        Command::Verify { suite, ns, trials, seed } => {
            let suite: Suite = suite.parse()?;
            let cfg = VerifyConfig { ns: ns.as_deref().map(parse_ns).transpose()?, trials: *trials, seed: *seed };
            let r = run_suite(suite, &cfg)?;
            let text = if cli.json { format!("{}\n", r.to_json()) } else { r.to_text() };
            Ok(Output { text, pass: r.pass })
        }
        Command::Witness { lambda, mu, best_effort, seed, budget, sequence_cache } => {
            witness(cli.json, lambda, mu, *best_effort, SearchConfig { seed: *seed, budget: *budget }, sequence_cache.as_deref())
        }
        Command::Frob { n, c, d, g } => {
            let (c, d, g) = (label(*n, c)?, label(*n, d)?, label(*n, g)?);
            let count = frobenius_count(&c, &d, &g)?;
            Ok(Output::ok(if cli.json {
                json_text(&json!({
                    "schema": "anclass.frob/1",
                    "n": n,
                    "C": c,
                    "D": d,
                    "g": g,
                    "count": count.to_string(),
                }))
            } else {
                format!("{count}\n")
            }))
        }
        Command::Covers { n, c, d } => {
            let r = covers(&label(*n, c)?, &label(*n, d)?)?;
            Ok(Output::ok(if cli.json { format!("{}\n", r.to_json()) } else { r.to_text() }))
        }
        Command::Cn { n, c } => {
            let c = label(*n, c)?;
            let k = covering_number(&c)?;
            Ok(Output::ok(if cli.json {
                json_text(&json!({ "schema": "anclass.cn/1", "n": n, "C": c, "cn": k }))
            } else {
                format!("{k}\n")
            }))
        }
        Command::Bounds { report, ns, k, cycle_type, table } => {
            bounds_cmd(cli.json, *report, ns.as_deref(), *k, cycle_type.as_deref(), *table)
        }
    }
}

fn table(as_json: bool, n: usize, export: Option<&Path>, import: Option<&Path>, limit: usize) -> Result<Output> {
    let (t, source) = match import {
        Some(path) => {
            let t = CharacterTable::read_from(path)?;
            if t.n() != n {
                return Err(Error::DegreeMismatch(n, t.n()));
            }
            (t, "imported")
        }
        None => (CharacterTable::build(n, limit)?, "computed"),
    };
    let check = t.check_orthogonality().and_then(|_| t.check_split_sums());
    let matches = match import {
        Some(_) if n <= limit => Some(CharacterTable::build(n, limit)?.export() == t.export()),
        _ => None,
    };
    if let Some(path) = export {
        t.write_to(path)?;
    }
    let pass = check.is_ok() && matches != Some(false);
    let text = if as_json {
        let classes: Vec<Value> =
            t.classes().iter().zip(t.class_sizes()).map(|(c, s)| json!({ "label": c, "size": s.to_string() })).collect();
        let characters: Vec<Value> = t
            .characters()
            .iter()
            .enumerate()
            .map(|(i, chi)| {
                json!({
                    "label": chi.to_string(),
                    "degree": t.degree(i).to_string(),
                    "values": t.row(i).iter().map(ToString::to_string).collect::<Vec<_>>(),
                })
            })
            .collect();
        json_text(&json!({
            "schema": "anclass.table/1",
            "n": n,
            "source": source,
            "classes": classes,
            "characters": characters,
            "orthogonality": check.is_ok(),
            "matches_computed": matches,
        }))
    } else {
        let mut s = format!("n {n}\nsource {source}\nclasses {}\n", t.classes().len());
        for (i, chi) in t.characters().iter().enumerate() {
            let row: Vec<String> = t.row(i).iter().map(ToString::to_string).collect();
            s += &format!("{chi}: {}\n", row.join("  "));
        }
        match &check {
            Ok(()) => s += "orthogonality ok\n",
            Err(e) => s += &format!("orthogonality FAILED: {e}\n"),
        }
        if let Some(m) = matches {
            s += &format!("matches computed {m}\n");
        }
        s
    };
    Ok(Output { text, pass })
}

fn witness(
    as_json: bool,
    lambda: &str,
    mu: &str,
    best_effort: bool,
    search: SearchConfig,
    cache: Option<&Path>,
) -> Result<Output> {
    let lambda: Partition = lambda.parse()?;
    let mu: Partition = mu.parse()?;
    if let Some(path) = cache.filter(|p| p.exists()) {
        sequences::preload(&SequenceCache::load(path)?);
    }
    let opts = WitnessOptions { mode: if best_effort { Mode::BestEffort } else { Mode::Strict }, search };
    let w = construct_witnesses(&lambda, &mu, &opts)?;
    w.check()?;
    if let Some(path) = cache {
        sequences::cached().save(path)?;
    }
    Ok(Output::ok(if as_json { json_text(&w.to_json()) } else { w.to_text() }))
}

fn bounds_cmd(
    as_json: bool,
    report: BoundsReport,
    ns: Option<&str>,
    k: Option<usize>,
    cycle_type: Option<&str>,
    csv: bool,
) -> Result<Output> {
    let ns = ns.map(parse_ns).transpose()?;
    let single = |default: usize| ns.as_ref().and_then(|v| v.first().copied()).unwrap_or(default);
    match report {
        BoundsReport::Prop24 => {
            let ns = ns.unwrap_or_else(|| vec![13]);
            let (lo, hi) = (*ns.iter().min().expect("nonempty"), *ns.iter().max().expect("nonempty"));
            if ns.len() == 1 && !csv {
                let r = bounds::prop24_certificate(lo)?;
                let text = if as_json { json_text(&serde_json::to_value(&r).expect("plain data")) } else { r.to_text() };
                return Ok(Output { text, pass: r.pass() });
            }
            let r = bounds::prop24_range(lo, hi)?;
            let text = if csv {
                r.to_csv()
            } else if as_json {
                json_text(&serde_json::to_value(&r).expect("plain data"))
            } else {
                r.reports.iter().map(|x| x.to_text()).collect::<Vec<_>>().join("") + &format!("increases {:?}\n", r.increases)
            };
            Ok(Output { text, pass: r.pass() })
        }
        BoundsReport::Hook => {
            let n = single(13);
            let r = bounds::hook_bound_check(n)?;
            let text = if let Some(k) = k {
                let b = bounds::hook_bound(n, k);
                if as_json {
                    json_text(&json!({ "schema": bounds::BOUNDS_SCHEMA, "n": n, "k": k, "bound": b.to_string(), "dominates": r.pass() }))
                } else {
                    format!("{b}\n")
                }
            } else if as_json {
                json_text(&json!({ "schema": bounds::BOUNDS_SCHEMA, "report": r }))
            } else {
                let mut s = format!("n {n}\npairs {}\n", r.pairs_checked);
                for (k, v, b) in &r.per_size {
                    s += &format!("k {k} max {v} bound {b}\n");
                }
                s += &format!("dominates {}\n", r.pass());
                s
            };
            Ok(Output { text, pass: r.pass() })
        }
        BoundsReport::Amgm => {
            let r = bounds::amgm_report(single(10))?;
            let text = if as_json {
                json_text(&serde_json::to_value(&r).expect("plain data"))
            } else {
                let mut s = format!("n {}\nbest {:?} product {}\n", r.n, r.best_parts, r.best_product);
                for row in &r.rows {
                    s += &format!("m {} parts {:?} product {} mean-bound {} triangular {}\n", row.m, row.parts, row.product, row.within_mean_bound, row.triangular);
                }
                s
            };
            Ok(Output { text, pass: r.all_within })
        }
        BoundsReport::SplitDegree => {
            let r = bounds::min_split_degree_report(single(13))?;
            let text = if as_json { json_text(&serde_json::to_value(&r).expect("plain data")) } else { r.to_text() };
            Ok(Output { text, pass: r.all_divide })
        }
        BoundsReport::EProfile => {
            let t: Partition = cycle_type.ok_or_else(|| Error::InvalidLabel("e-profile needs --cycle-type".into()))?.parse()?;
            let e = EProfile::from_cycle_type(&t)?;
            let m = k.unwrap_or(3);
            let c = e.check_small_cycle_bound(m);
            let text = if as_json {
                json_text(&json!({
                    "schema": bounds::BOUNDS_SCHEMA,
                    "cycle_type": t,
                    "counts": e.counts(),
                    "E": e.big_e().to_string(),
                    "check": c,
                }))
            } else {
                format!(
                    "cycle type {t}\nE {} ~ {:.6}\nM {m} hypothesis {} holds {} bound ~ {:.6}\n",
                    c.e_exact, c.e_approx, c.hypothesis, c.holds, c.bound_approx
                )
            };
            Ok(Output { text, pass: !c.hypothesis || c.holds })
        }
    }
}
