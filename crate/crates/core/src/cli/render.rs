//! Text and JSON renderings.
//!
//! JSON documents are built from structs whose fields are declared in
//! alphabetical order, so keys come out sorted and a parse/render round
//! trip is byte-identical.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::ChargeNorm;
use crate::branching::{BranchingResult, CheckStatus, Trace};
use crate::error::Result;
use crate::injection::{Fan, Injection, XiSet};
use crate::rootsys::{format_q, Weight};
use crate::Q;

/// Least common denominator of the charges of `r`; 1 for raw output.
pub fn charge_scale(r: &BranchingResult, norm: ChargeNorm) -> i64 {
    match norm {
        ChargeNorm::Raw => 1,
        ChargeNorm::Integerized => r.terms.iter().fold(1, |acc, t| acc.lcm(t.charge.denom())),
    }
}

fn labels_str(labels: &[i64]) -> String {
    let parts: Vec<String> = labels.iter().map(i64::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn sign_str(s: i64) -> &'static str {
    if s > 0 {
        "+"
    } else {
        "-"
    }
}

pub(crate) fn branch_text(r: &BranchingResult, norm: ChargeNorm, trace: Option<&Trace>) -> String {
    let scale = charge_scale(r, norm);
    let mut out = String::new();
    if scale != 1 {
        writeln!(out, "# charge scale: {scale}").unwrap();
    }
    for t in &r.terms {
        let q = t.charge * Q::from_integer(scale);
        writeln!(out, "{} x ({}, {})", t.multiplicity, labels_str(&t.labels), format_q(q)).unwrap();
    }
    if let Some(trace) = trace {
        for level in &trace.levels {
            writeln!(out, "# level {}", level.level).unwrap();
            for (k, n) in &level.recorded {
                writeln!(out, "#   n {k} = {n}").unwrap();
            }
            for (k, v) in &level.n_tilde {
                if !level.recorded.contains_key(k) {
                    writeln!(out, "#   n~ {k} = {v}").unwrap();
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HighestWeightDoc {
    pub dynkin: Vec<i64>,
    pub e: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub charge: String,
    pub labels: Vec<i64>,
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointDoc {
    pub value: i64,
    pub weight: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelDoc {
    pub level: i64,
    pub n_tilde: Vec<PointDoc>,
    pub recorded: Vec<PointDoc>,
}

/// The JSON document for one branching.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchDoc {
    pub algebra: String,
    pub charge_scale: i64,
    pub checks: BTreeMap<String, bool>,
    pub dimension: u64,
    pub highest_weight: HighestWeightDoc,
    pub method: String,
    pub subalgebra: String,
    pub terms: Vec<TermDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<LevelDoc>>,
}

impl BranchDoc {
    pub fn new(r: &BranchingResult, norm: ChargeNorm, trace: Option<&Trace>) -> Self {
        let scale = charge_scale(r, norm);
        let point = |k: &Weight, v: i64| PointDoc {
            value: v,
            weight: k.coord_strings(),
        };
        BranchDoc {
            algebra: r.algebra.clone(),
            charge_scale: scale,
            checks: checks_map(r),
            dimension: r.dimension,
            highest_weight: HighestWeightDoc {
                dynkin: r.source_labels.clone(),
                e: r.source_hw.coord_strings(),
            },
            method: r.method.name().to_string(),
            subalgebra: r.subalgebra.clone(),
            terms: r
                .terms
                .iter()
                .map(|t| TermDoc {
                    charge: format_q(t.charge * Q::from_integer(scale)),
                    labels: t.labels.clone(),
                    multiplicity: t.multiplicity,
                })
                .collect(),
            trace: trace.map(|t| {
                t.levels
                    .iter()
                    .map(|l| LevelDoc {
                        level: l.level,
                        n_tilde: l.n_tilde.iter().map(|(k, v)| point(k, *v)).collect(),
                        recorded: l.recorded.iter().map(|(k, v)| point(k, *v as i64)).collect(),
                    })
                    .collect()
            }),
        }
    }

    pub fn render(&self) -> String {
        to_json(self)
    }

    pub fn parse(text: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

fn checks_map(r: &BranchingResult) -> BTreeMap<String, bool> {
    r.checks
        .iter()
        .filter(|c| c.status != CheckStatus::Skipped)
        .map(|c| (c.name.to_string(), c.status == CheckStatus::Passed))
        .collect()
}

fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

pub fn render_json(r: &BranchingResult, norm: ChargeNorm, trace: Option<&Trace>) -> String {
    BranchDoc::new(r, norm, trace).render()
}

pub(crate) fn verify_text(reference: &BranchingResult, results: &[BranchingResult], agree: bool) -> String {
    let mut out = String::new();
    for r in results {
        writeln!(out, "method {}: {} terms", r.method, r.terms.len()).unwrap();
    }
    writeln!(out, "agreement: {}", if agree { "pass" } else { "FAIL" }).unwrap();
    for c in &reference.checks {
        match c.status {
            CheckStatus::Passed => writeln!(out, "check {}: pass", c.name),
            CheckStatus::Failed => writeln!(out, "check {}: FAIL ({})", c.name, c.detail.as_deref().unwrap_or("")),
            CheckStatus::Skipped => writeln!(out, "check {}: skipped ({})", c.name, c.detail.as_deref().unwrap_or("")),
        }
        .unwrap();
    }
    out
}

#[derive(Serialize)]
struct EngineDoc {
    method: String,
    terms: usize,
}

#[derive(Serialize)]
struct VerifyDoc {
    agreement: bool,
    algebra: String,
    checks: BTreeMap<String, bool>,
    dimension: u64,
    engines: Vec<EngineDoc>,
    highest_weight: HighestWeightDoc,
    subalgebra: String,
}

pub(crate) fn verify_json(reference: &BranchingResult, results: &[BranchingResult], agree: bool) -> String {
    to_json(&VerifyDoc {
        agreement: agree,
        algebra: reference.algebra.clone(),
        checks: checks_map(reference),
        dimension: reference.dimension,
        engines: results
            .iter()
            .map(|r| EngineDoc {
                method: r.method.name().to_string(),
                terms: r.terms.len(),
            })
            .collect(),
        highest_weight: HighestWeightDoc {
            dynkin: reference.source_labels.clone(),
            e: reference.source_hw.coord_strings(),
        },
        subalgebra: reference.subalgebra.clone(),
    })
}

pub(crate) fn fan_text(fan: &Fan) -> String {
    let mut out = String::new();
    for (g, s) in fan.entries() {
        writeln!(out, "{} x {g}  {}", s.abs(), sign_str(s)).unwrap();
    }
    out
}

#[derive(Serialize)]
struct FanWeightDoc {
    multiplicity: u64,
    sign: String,
    weight: Vec<String>,
}

#[derive(Serialize)]
struct FanDoc {
    algebra: String,
    depth: String,
    subalgebra: String,
    weights: Vec<FanWeightDoc>,
}

pub(crate) fn fan_json(inj: &Injection, fan: &Fan) -> String {
    to_json(&FanDoc {
        algebra: inj.algebra_token(),
        depth: format_q(fan.depth),
        subalgebra: inj.subalgebra_token(),
        weights: fan
            .entries()
            .into_iter()
            .map(|(g, s)| FanWeightDoc {
                multiplicity: s.unsigned_abs(),
                sign: sign_str(s).to_string(),
                weight: g.coord_strings(),
            })
            .collect(),
    })
}

pub(crate) fn xi_text(inj: &Injection, xi: &XiSet) -> Result<String> {
    let mut out = String::new();
    for e in xi.iter() {
        let head = format!(
            "({}, {})  {}",
            labels_str(&inj.sub_labels(&e.weight)?),
            format_q(inj.charge(&e.weight)),
            e.weight
        );
        match e.sign {
            Some(s) => writeln!(out, "{head}  {}", sign_str(s as i64)),
            None => writeln!(out, "{head}"),
        }
        .unwrap();
    }
    Ok(out)
}

#[derive(Serialize)]
struct XiEntryDoc {
    charge: String,
    labels: Vec<i64>,
    sign: Option<String>,
    weight: Vec<String>,
}

#[derive(Serialize)]
struct XiDoc {
    algebra: String,
    entries: Vec<XiEntryDoc>,
    subalgebra: String,
}

pub(crate) fn xi_json(inj: &Injection, xi: &XiSet) -> Result<String> {
    let entries = xi
        .iter()
        .map(|e| {
            Ok(XiEntryDoc {
                charge: format_q(inj.charge(&e.weight)),
                labels: inj.sub_labels(&e.weight)?,
                sign: e.sign.map(|s| sign_str(s as i64).to_string()),
                weight: e.weight.coord_strings(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(to_json(&XiDoc {
        algebra: inj.algebra_token(),
        entries,
        subalgebra: inj.subalgebra_token(),
    }))
}
