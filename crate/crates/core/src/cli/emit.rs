//! Serialization of command results as JSON, CSV or markdown.

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cohomology::{CohomologyAnswer, CohomologyQuery};
use crate::spaces::{CatalogRow, HssSpace, Rational};
use crate::stability::{ChernData, StabilityVerdict, SurfaceInvariants};
use crate::verifier::VerificationReport;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
    Md,
}

/// "p/q" in lowest terms, or a bare integer.
pub fn rational_json(r: &Rational) -> Value {
    if *r.denom() == 1 {
        json!(r.numer())
    } else {
        json!(r.to_string())
    }
}

pub struct LangerReport {
    pub space: HssSpace,
    pub bound: Rational,
    pub chern: ChernData,
}

/// Anything the CLI can print.
pub enum Report {
    Catalog(Vec<CatalogRow>),
    Space(HssSpace),
    Cohomology(CohomologyQuery, CohomologyAnswer),
    Stability(Box<StabilityVerdict>),
    Verification { reports: Vec<VerificationReport>, timing: bool },
    Surfaces(Vec<SurfaceInvariants>),
    Langer(LangerReport),
}

fn csv_text(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

fn md_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let esc = |s: &str| s.replace('|', "\\|");
    let mut out = format!("| {} |\n", header.join(" | "));
    out.push_str(&format!("|{}\n", " --- |".repeat(header.len())));
    for r in rows {
        let cells: Vec<String> = r.iter().map(|c| esc(c)).collect();
        out.push_str(&format!("| {} |\n", cells.join(" | ")));
    }
    out
}

fn space_row(s: &HssSpace) -> Vec<String> {
    vec![
        s.series().name().to_string(),
        s.key(),
        s.dimension().to_string(),
        s.index().to_string(),
        s.embedding_degree().map_or(String::new(), |d| d.to_string()),
    ]
}

const SPACE_HEADER: [&str; 5] = ["series", "key", "dimension", "index", "embedding_degree"];
const CATALOG_HEADER: [&str; 5] = ["series", "key", "parameters", "dimension", "index"];
const ORACLE_HEADER: [&str; 7] = ["space", "p", "q", "l", "status", "witness_count", "witnesses"];
const STABILITY_HEADER: [&str; 7] = ["space", "input", "outcome", "basis", "groups_checked", "obstructions", "caveats"];
const VERIFY_HEADER: [&str; 2] = ["proposition", "violation"];
const SURFACE_HEADER: [&str; 5] = ["d", "h2_structure", "chi_top", "b2", "h11"];
const LANGER_HEADER: [&str; 6] = ["space", "rank", "c1_squared", "c2", "degree", "bound"];

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json()).expect("values serialize");
                s.push('\n');
                s
            }
            Format::Csv => self.csv(),
            Format::Md => self.markdown(),
        }
    }

    pub fn json(&self) -> Value {
        match self {
            Report::Catalog(rows) => serde_json::to_value(rows).expect("plain data"),
            Report::Space(s) => json!({
                "series": s.series().name(),
                "key": s.key(),
                "dimension": s.dimension(),
                "index": s.index(),
                "embedding_degree": s.embedding_degree(),
                "reducible_picard": s.has_reducible_picard(),
            }),
            Report::Cohomology(q, a) => {
                let mut v = serde_json::to_value(a).expect("plain data");
                v["query"] = json!(q.to_string());
                v
            }
            Report::Stability(v) => serde_json::to_value(v).expect("plain data"),
            Report::Verification { reports, timing } => match reports.as_slice() {
                [one] => one.to_json(*timing),
                many => Value::Array(many.iter().map(|r| r.to_json(*timing)).collect()),
            },
            Report::Surfaces(rows) => match rows.as_slice() {
                [one] => serde_json::to_value(one).expect("plain data"),
                many => serde_json::to_value(many).expect("plain data"),
            },
            Report::Langer(l) => json!({
                "space": l.space.key(),
                "bound": rational_json(&l.bound),
                "chern": l.chern,
            }),
        }
    }

    fn table(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        match self {
            Report::Catalog(rows) => (
                CATALOG_HEADER.to_vec(),
                rows.iter()
                    .map(|r| {
                        [r.series, r.key, r.parameters, r.dimension, r.index]
                            .map(String::from)
                            .to_vec()
                    })
                    .collect(),
            ),
            Report::Space(s) => (SPACE_HEADER.to_vec(), vec![space_row(s)]),
            Report::Cohomology(q, a) => {
                let w: Vec<String> = a.witnesses.iter().map(|w| w.to_string()).collect();
                (
                    ORACLE_HEADER.to_vec(),
                    vec![vec![
                        q.space().key(),
                        q.p().to_string(),
                        q.q().to_string(),
                        q.l().to_string(),
                        format!("{:?}", a.status),
                        a.witness_count.to_string(),
                        w.join(";"),
                    ]],
                )
            }
            Report::Stability(v) => {
                let input = match (&v.resolution, v.divisor_degree) {
                    (Some(r), _) => r.to_string(),
                    (None, Some(d)) => format!("divisor:{d}"),
                    (None, None) => String::new(),
                };
                let obs: Vec<String> = v
                    .obstructions
                    .iter()
                    .map(|o| format!("p={} d={} i={} l={}", o.p, o.d, o.term, o.l))
                    .collect();
                (
                    STABILITY_HEADER.to_vec(),
                    vec![vec![
                        v.space.key(),
                        input,
                        format!("{:?}", v.outcome),
                        serde_json::to_value(v.basis)
                            .ok()
                            .and_then(|b| b.as_str().map(String::from))
                            .unwrap_or_default(),
                        v.evidence.len().to_string(),
                        obs.join(";"),
                        v.caveats.join(";"),
                    ]],
                )
            }
            Report::Verification { reports, .. } => (
                VERIFY_HEADER.to_vec(),
                reports
                    .iter()
                    .flat_map(|r| r.violations.iter().map(|v| vec![r.claim.name().to_string(), v.clone()]))
                    .collect(),
            ),
            Report::Surfaces(rows) => (
                SURFACE_HEADER.to_vec(),
                rows.iter()
                    .map(|s| {
                        [i64::from(s.d), s.h2_structure, s.chi_top, s.b2, s.h11]
                            .iter()
                            .map(|x| x.to_string())
                            .collect()
                    })
                    .collect(),
            ),
            Report::Langer(l) => (
                LANGER_HEADER.to_vec(),
                vec![vec![
                    l.space.key(),
                    l.chern.rank.to_string(),
                    l.chern.c1_squared.to_string(),
                    l.chern.c2.to_string(),
                    l.chern.degree.to_string(),
                    l.bound.to_string(),
                ]],
            ),
        }
    }

    pub fn csv(&self) -> String {
        let (h, rows) = self.table();
        csv_text(&h, &rows)
    }

    pub fn markdown(&self) -> String {
        match self {
            Report::Verification { reports, timing } => {
                let mut out = String::new();
                for r in reports {
                    let mut summary = vec![
                        vec!["proposition".into(), r.claim.name().into()],
                        vec!["range".into(), r.parameter_range.clone()],
                        vec!["instances checked".into(), r.instances_checked.to_string()],
                        vec!["violations".into(), r.violations.len().to_string()],
                        vec!["equality cases".into(), r.equality_cases_found.len().to_string()],
                        vec!["success".into(), r.success().to_string()],
                    ];
                    if *timing {
                        summary.push(vec!["elapsed ms".into(), r.elapsed.as_millis().to_string()]);
                    }
                    out.push_str(&md_table(&["field", "value"], &summary));
                    for (title, items) in [
                        ("Violations", &r.violations),
                        ("Equality cases", &r.equality_cases_found),
                        ("Findings", &r.findings),
                    ] {
                        if !items.is_empty() {
                            out.push_str(&format!("\n**{title}**\n\n"));
                            for i in items {
                                out.push_str(&format!("- {i}\n"));
                            }
                        }
                    }
                    out.push('\n');
                }
                out
            }
            Report::Stability(v) => {
                let (h, rows) = self.table();
                let mut out = md_table(&h, &rows);
                if !v.evidence.is_empty() {
                    out.push('\n');
                    let ev: Vec<Vec<String>> = v
                        .evidence
                        .iter()
                        .map(|g| {
                            vec![
                                g.p.to_string(),
                                g.d.to_string(),
                                g.term.to_string(),
                                g.twist.to_string(),
                                format!("H^{}(Omega^{}({}))", g.term, g.p, g.l),
                                format!("{:?}", g.status),
                                g.witnesses.join(" "),
                            ]
                        })
                        .collect();
                    out.push_str(&md_table(&["p", "d", "i", "twist", "group", "status", "witnesses"], &ev));
                }
                out
            }
            _ => {
                let (h, rows) = self.table();
                md_table(&h, &rows)
            }
        }
    }
}
