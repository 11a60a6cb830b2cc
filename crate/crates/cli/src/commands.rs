use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use serde_json::{json, Value};
use spectral_cycles::oracle::backtrack_cycle_count_with_budget;
use spectral_cycles::spectrum::spectrum_residual;
use spectral_cycles::{
    auto_lengths, capability, classify, count_cycles, exact_traces, generate, write_alist,
    write_edgelist, BipartiteGraph, Capability, Count, CycleReport, DegreeProfile, ExactInt,
    GenKind, GenSpec, GirthValue, GraphClass,
};

use crate::failure::Failure;
use crate::input::InputFormat;
use crate::json;
use crate::InputArgs;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Lengths {
    Auto,
    Explicit(Vec<usize>),
}

pub fn parse_lengths(raw: &str) -> Result<Lengths, Failure> {
    if raw.trim() == "auto" {
        return Ok(Lengths::Auto);
    }
    let lengths = raw
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Failure::Input(format!("bad length {s:?} in --lengths")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if lengths.is_empty() {
        return Err(Failure::Input("--lengths is empty".into()));
    }
    Ok(Lengths::Explicit(lengths))
}

fn girth_json(girth: GirthValue) -> Value {
    match girth {
        GirthValue::Finite(g) => json!(g),
        GirthValue::Acyclic => Value::Null,
    }
}

fn summary(
    g: &BipartiteGraph,
    profile: &DegreeProfile,
    class: GraphClass,
    girth: GirthValue,
) -> Value {
    json!({
        "n": g.n(),
        "m": g.m(),
        "edges": g.edge_count(),
        "girth": girth_json(girth),
        "class": class.to_string(),
        "degrees": {
            "variable": profile.u_degrees,
            "check": profile.w_degrees,
        },
    })
}

fn print_summary(g: &BipartiteGraph, class: GraphClass, girth: GirthValue) {
    println!("graph: n={} m={} edges={}", g.n(), g.m(), g.edge_count());
    println!("class: {class}");
    println!("girth: {girth}");
}

fn refusal_reason(class: GraphClass, verdict: Capability) -> &'static str {
    match (verdict, class) {
        (Capability::ImpossibleInGeneral, GraphClass::BiRegular { .. }) => {
            "not determined by spectrum and degrees for bi-regular graphs at i >= 2g"
        }
        (Capability::ImpossibleInGeneral, GraphClass::Irregular) => {
            "not determined by spectrum and degrees for irregular graphs beyond length 4"
        }
        (Capability::ImpossibleInGeneral, _) => {
            "not determined by spectrum and degrees for half-regular graphs beyond length 6 (or length 6 below girth 6)"
        }
        _ => "no closed form implemented for this length",
    }
}

pub fn count<T: ExactInt>(
    g: &BipartiteGraph,
    io: &InputArgs,
    lengths: Lengths,
) -> Result<(), Failure> {
    let start = Instant::now();
    let (profile, class) = classify(g);
    let girth = spectral_cycles::girth(g);
    let targets = match lengths {
        Lengths::Auto => auto_lengths(class, girth),
        Lengths::Explicit(v) => v,
    };
    let report: Option<CycleReport<T>> = if targets.is_empty() {
        None
    } else {
        Some(count_cycles::<T>(g, &targets)?)
    };
    let elapsed = start.elapsed();

    let empty = BTreeMap::new();
    let counts = report.as_ref().map_or(&empty, |r| &r.counts);
    let verdicts: BTreeMap<usize, Capability> = targets
        .iter()
        .map(|&i| (i, capability(class, girth, i)))
        .collect();
    let refused: BTreeMap<usize, Capability> = report
        .as_ref()
        .map(|r| r.refused.clone())
        .unwrap_or_default();

    if io.json {
        let mut doc = summary(g, &profile, class, girth);
        let obj = doc.as_object_mut().unwrap();
        obj.insert("input".into(), json!(io.input.display().to_string()));
        obj.insert("counts".into(), json::by_length(counts, json::int));
        let methods = report.as_ref().map(|r| &r.methods);
        obj.insert(
            "methods".into(),
            methods.map_or(json!({}), |m| json::by_length(m, |m| json!(m.tag()))),
        );
        obj.insert(
            "terms".into(),
            report.as_ref().map_or(json!({}), |r| {
                json::by_length(&r.terms, |t| {
                    json!({
                        "trace": json::int(&t.trace),
                        "omega": json::int(&t.omega),
                        "omega_family": format!("{:?}", t.omega_family),
                        "psi": json::int(&t.psi),
                    })
                })
            }),
        );
        obj.insert(
            "capability".into(),
            json::by_length(&verdicts, |v| json!(v.verdict())),
        );
        let traces = report
            .as_ref()
            .and_then(|r| r.traces.as_ref())
            .map_or(Value::Null, |t| {
                Value::Object(
                    t.iter()
                        .map(|(k, v)| (k.to_string(), json::int(v)))
                        .collect(),
                )
            });
        obj.insert("traces".into(), traces);
        obj.insert("timing".into(), json!({ "seconds": elapsed.as_secs_f64() }));
        json::print(&doc);
    } else {
        print_summary(g, class, girth);
        if targets.is_empty() {
            println!("no supported lengths");
        }
        if let Some(r) = &report {
            for (i, c) in &r.counts {
                match r.terms.get(i) {
                    Some(t) => println!(
                        "N_{i} = {c}  [{}]  tr = {}  omega = {}  psi = {}",
                        r.methods[i].tag(),
                        t.trace,
                        t.omega,
                        t.psi
                    ),
                    None => println!("N_{i} = {c}  [{}]", r.methods[i].tag()),
                }
            }
        }
        for (i, v) in &refused {
            println!(
                "N_{i}: refused ({}: {})",
                v.verdict(),
                refusal_reason(class, *v)
            );
        }
        println!("time: {:.3}s", elapsed.as_secs_f64());
    }

    if !refused.is_empty() {
        let detail: Vec<String> = refused
            .iter()
            .map(|(i, v)| {
                format!(
                    "length {i} is {} for {class} ({})",
                    v.verdict(),
                    refusal_reason(class, *v)
                )
            })
            .collect();
        return Err(Failure::Capability(detail.join("; ")));
    }
    Ok(())
}

pub fn girth(g: &BipartiteGraph, io: &InputArgs) -> Result<(), Failure> {
    let (profile, class) = classify(g);
    let girth = spectral_cycles::girth(g);
    if io.json {
        json::print(&summary(g, &profile, class, girth));
    } else {
        print_summary(g, class, girth);
    }
    Ok(())
}

pub fn traces<T: ExactInt>(
    g: &BipartiteGraph,
    io: &InputArgs,
    k_max: usize,
    spectrum: bool,
) -> Result<(), Failure> {
    let start = Instant::now();
    let t = exact_traces::<T>(g, k_max)?;
    let elapsed = start.elapsed();
    let residual = if spectrum {
        Some(spectrum_residual::<f64>(g, k_max)?)
    } else {
        None
    };
    if io.json {
        let mut doc = json!({
            "traces": Value::Object(t.iter().map(|(k, v)| (k.to_string(), json::int(v))).collect()),
            "timing": { "seconds": elapsed.as_secs_f64() },
        });
        if let Some(res) = &residual {
            doc["spectrum_relative_error"] =
                Value::Object(res.iter().map(|(k, e)| (k.to_string(), json!(e))).collect());
        }
        json::print(&doc);
    } else {
        for (k, v) in t.iter() {
            println!("tr(A^{k}) = {v}");
        }
        if let Some(res) = &residual {
            for (k, e) in res {
                println!("spectrum k={k}: relative error {e:.3e}");
            }
        }
    }
    Ok(())
}

pub fn oracle(
    g: &BipartiteGraph,
    io: &InputArgs,
    max_len: usize,
    budget: u64,
) -> Result<(), Failure> {
    let counts = backtrack_cycle_count_with_budget(g, max_len, budget)?;
    if io.json {
        json::print(&json!({
            "girth": girth_json(spectral_cycles::girth(g)),
            "counts": json::by_length(&counts, json::int),
        }));
    } else {
        for (i, c) in &counts {
            println!("N_{i} = {c}");
        }
    }
    Ok(())
}

pub fn verify(
    g: &BipartiteGraph,
    io: &InputArgs,
    max_len: usize,
    budget: u64,
) -> Result<(), Failure> {
    if max_len < 4 || !max_len.is_multiple_of(2) {
        return Err(Failure::Input(format!(
            "--max-len must be even and at least 4, got {max_len}"
        )));
    }
    let lengths: Vec<usize> = (4..=max_len).step_by(2).collect();
    let report = count_cycles::<Count>(g, &lengths)?;
    let truth = backtrack_cycle_count_with_budget(g, max_len, budget)?;
    let mismatches = disagreements(&report.counts, &truth);
    let mut compared = serde_json::Map::new();
    for (i, c) in &report.counts {
        let expected = truth[i] as Count;
        compared.insert(
            i.to_string(),
            json!({ "spectral": json::int(c), "oracle": json::int(&expected), "match": *c == expected }),
        );
        if !io.json {
            let mark = if *c == expected { "ok" } else { "MISMATCH" };
            println!("N_{i}: traces {c}, oracle {expected}  {mark}");
        }
    }
    if io.json {
        json::print(&json!({
            "agree": mismatches.is_empty(),
            "class": report.class.to_string(),
            "girth": girth_json(report.girth),
            "compared": compared,
            "refused": json::by_length(&report.refused, |v| json!(v.verdict())),
        }));
    } else {
        for (i, v) in &report.refused {
            println!("N_{i}: not compared ({})", v.verdict());
        }
    }
    if mismatches.is_empty() {
        Ok(())
    } else {
        Err(Failure::Mismatch(mismatches.join("; ")))
    }
}

/// Every length where the two methods differ; a length missing from the
/// oracle counts as a difference.
fn disagreements(counts: &BTreeMap<usize, Count>, truth: &BTreeMap<usize, u64>) -> Vec<String> {
    counts
        .iter()
        .filter_map(|(i, c)| match truth.get(i) {
            Some(&t) if *c == t as Count => None,
            Some(&t) => Some(format!("N_{i}: traces give {c}, oracle {t}")),
            None => Some(format!("N_{i}: no oracle count")),
        })
        .collect()
}

/// `--kind` for `gen`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KindArg(pub GenKind);

impl FromStr for KindArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, params) = s
            .split_once(':')
            .ok_or_else(|| format!("expected NAME:PARAMS, got {s:?}"))?;
        let fields: Vec<&str> = params.split(',').map(str::trim).collect();
        let int = |k: usize| -> Result<usize, String> {
            fields
                .get(k)
                .ok_or_else(|| format!("{name}: missing parameter {}", k + 1))?
                .parse()
                .map_err(|_| format!("{name}: parameter {} is not an integer", k + 1))
        };
        let arity = |n: usize| -> Result<(), String> {
            if fields.len() == n {
                Ok(())
            } else {
                Err(format!("{name} takes {n} parameters, got {}", fields.len()))
            }
        };
        let kind = match name {
            "complete" => {
                arity(2)?;
                GenKind::CompleteBipartite(int(0)?, int(1)?)
            }
            "biregular" => {
                arity(3)?;
                GenKind::RandomBiRegular {
                    n: int(0)?,
                    d_v: int(1)?,
                    d_c: int(2)?,
                }
            }
            "varregular" => {
                arity(4)?;
                GenKind::RandomVariableRegular {
                    n: int(0)?,
                    d_v: int(1)?,
                    w_degree_bounds: (int(2)?, int(3)?),
                }
            }
            "irregular" => {
                arity(3)?;
                let edge_prob: f64 = fields[2]
                    .parse()
                    .map_err(|_| format!("irregular: bad probability {:?}", fields[2]))?;
                GenKind::RandomIrregular {
                    n: int(0)?,
                    m: int(1)?,
                    edge_prob,
                }
            }
            other => return Err(format!("unknown kind {other:?}")),
        };
        Ok(KindArg(kind))
    }
}

pub fn gen(
    kind: KindArg,
    seed: u64,
    min_girth: Option<usize>,
    out: Option<&Path>,
    format: InputFormat,
) -> Result<(), Failure> {
    let spec = GenSpec {
        kind: kind.0,
        seed,
        min_girth,
    };
    let g = generate(&spec)?;
    let text = match format {
        InputFormat::Alist => write_alist(&g),
        InputFormat::Edgelist => write_edgelist(&g),
    };
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
