//! JSON file formats and report rendering.
//!
//! Three document kinds are exchanged on disk, all JSON with NCFDs embedded
//! as their sum-of-terms strings (`"1/0.6 + 0.6/0.9"`):
//!
//! - automaton: `{"states": [..], "x0": [ncfd..], "xm": [ncfd..],
//!   "events": {name: [[ncfd..]..]}}`
//! - finite language: `{"horizon": H, "alphabet": [..],
//!   "degrees": {"a.b": ncfd}}` (ε is the empty key)
//! - uncontrollability map: `{event: ncfd}`
//!
//! Serialization is deterministic (sorted keys) and every emitted document
//! re-parses to an equal object.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::automaton::{format_event_string, parse_event_string, Bfdes};
use crate::lang::FiniteLang;
use crate::linear::{NcfdMatrix, NcfdVector};
use crate::ncfd::Ncfd;
use crate::supervisory::{ControllabilityReport, UncontrollabilityMap, Verdict};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}:{column}: {message}")]
    Parse { path: String, line: usize, column: usize, message: String },
    #[error("{path}: {field}: {message}")]
    Validation { path: String, field: String, message: String },
}

fn json_err(path: &str, e: serde_json::Error) -> FormatError {
    FormatError::Parse {
        path: path.to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

fn invalid(path: &str, field: impl Into<String>, message: impl ToString) -> FormatError {
    FormatError::Validation {
        path: path.to_string(),
        field: field.into(),
        message: message.to_string(),
    }
}

fn read(path: &Path) -> Result<String, FormatError> {
    std::fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn ncfd(path: &str, field: &str, s: &str) -> Result<Ncfd, FormatError> {
    s.parse().map_err(|e| invalid(path, field, e))
}

#[derive(Serialize, Deserialize)]
struct AutomatonDoc {
    states: Vec<String>,
    x0: Vec<String>,
    xm: Vec<String>,
    events: BTreeMap<String, Vec<Vec<String>>>,
}

fn vector(path: &str, field: &str, entries: &[String]) -> Result<NcfdVector, FormatError> {
    let mut out = Vec::with_capacity(entries.len());
    for (i, s) in entries.iter().enumerate() {
        out.push(ncfd(path, &format!("{field}[{i}]"), s)?);
    }
    Ok(NcfdMatrix::row_vector(out))
}

/// Parses an automaton document from a string; `label` names the source in
/// error messages.
pub fn parse_automaton_str(src: &str, label: &str) -> Result<Bfdes, FormatError> {
    let doc: AutomatonDoc = serde_json::from_str(src).map_err(|e| json_err(label, e))?;
    let x0 = vector(label, "x0", &doc.x0)?;
    let xm = vector(label, "xm", &doc.xm)?;
    let mut events = BTreeMap::new();
    for (name, rows) in &doc.events {
        let mut parsed = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            let mut r = Vec::with_capacity(row.len());
            for (j, s) in row.iter().enumerate() {
                r.push(ncfd(label, &format!("events.{name}[{i}][{j}]"), s)?);
            }
            parsed.push(r);
        }
        let m = NcfdMatrix::from_rows(parsed)
            .map_err(|e| invalid(label, format!("events.{name}"), e))?;
        events.insert(name.clone(), m);
    }
    Bfdes::new(doc.states, events, x0, xm).map_err(|e| invalid(label, "automaton", e))
}

pub fn parse_automaton(path: &Path) -> Result<Bfdes, FormatError> {
    parse_automaton_str(&read(path)?, &path.display().to_string())
}

pub fn automaton_to_json(g: &Bfdes) -> String {
    let doc = AutomatonDoc {
        states: g.state_labels().to_vec(),
        x0: g.x0().entries().iter().map(Ncfd::to_string).collect(),
        xm: g.xm().entries().iter().map(Ncfd::to_string).collect(),
        events: g
            .events()
            .iter()
            .map(|(name, m)| {
                let rows = (0..m.rows())
                    .map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect())
                    .collect();
                (name.clone(), rows)
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("plain data serializes")
}

#[derive(Serialize, Deserialize)]
struct FiniteLangDoc {
    horizon: usize,
    alphabet: Vec<String>,
    degrees: BTreeMap<String, String>,
}

pub fn parse_finitelang_str(src: &str, label: &str) -> Result<FiniteLang, FormatError> {
    let doc: FiniteLangDoc = serde_json::from_str(src).map_err(|e| json_err(label, e))?;
    let mut degrees = BTreeMap::new();
    for (key, value) in &doc.degrees {
        let d = ncfd(label, &format!("degrees.{key:?}"), value)?;
        degrees.insert(parse_event_string(key), d);
    }
    FiniteLang::new(doc.horizon, doc.alphabet, degrees)
        .map_err(|e| invalid(label, "degrees", e))
}

pub fn parse_finitelang(path: &Path) -> Result<FiniteLang, FormatError> {
    parse_finitelang_str(&read(path)?, &path.display().to_string())
}

pub fn finitelang_to_json(l: &FiniteLang) -> String {
    let doc = FiniteLangDoc {
        horizon: l.horizon(),
        alphabet: l.alphabet().to_vec(),
        degrees: l
            .degrees()
            .iter()
            .map(|(s, d)| (format_event_string(s), d.to_string()))
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("plain data serializes")
}

pub fn parse_ucmap_str(src: &str, label: &str) -> Result<UncontrollabilityMap, FormatError> {
    let doc: BTreeMap<String, String> =
        serde_json::from_str(src).map_err(|e| json_err(label, e))?;
    let mut map = BTreeMap::new();
    for (event, value) in &doc {
        map.insert(event.clone(), ncfd(label, event, value)?);
    }
    Ok(UncontrollabilityMap::new(map))
}

pub fn parse_ucmap(path: &Path) -> Result<UncontrollabilityMap, FormatError> {
    parse_ucmap_str(&read(path)?, &path.display().to_string())
}

pub fn ucmap_to_json(uc: &UncontrollabilityMap) -> String {
    let doc: BTreeMap<&String, String> =
        uc.events().map(|(e, d)| (e, d.to_string())).collect();
    serde_json::to_string_pretty(&doc).expect("plain data serializes")
}

/// Machine form of a controllability report; keys sorted, NCFDs as strings.
pub fn report_to_json(report: &ControllabilityReport) -> serde_json::Value {
    let pairs: Vec<_> = report
        .pairs
        .iter()
        .map(|p| {
            serde_json::json!({
                "witness": format_event_string(&p.witness),
                "plant_state": p.plant_state.entries().iter().map(Ncfd::to_string).collect::<Vec<_>>(),
                "spec_state": p.spec_state.entries().iter().map(Ncfd::to_string).collect::<Vec<_>>(),
            })
        })
        .collect();
    let violations: Vec<_> = report
        .violations
        .iter()
        .map(|v| {
            serde_json::json!({
                "s": format_event_string(&v.witness),
                "event": v.event,
                "lhs": v.lhs.to_string(),
                "rhs": v.rhs.to_string(),
            })
        })
        .collect();
    let mut doc = serde_json::json!({
        "verdict": report.verdict,
        "pairs": pairs,
        "violations": violations,
    });
    if let Some(lm) = &report.lm_closure {
        let lm_violations: Vec<_> = lm
            .violations
            .iter()
            .map(|v| {
                serde_json::json!({
                    "s": format_event_string(&v.witness),
                    "marked": v.marked.to_string(),
                    "expected": v.expected.to_string(),
                })
            })
            .collect();
        doc["lm_closure"] = serde_json::json!({
            "holds": lm.holds,
            "violations": lm_violations,
        });
    }
    doc
}

fn pad(s: &str, w: usize) -> String {
    format!("{s:<w$}")
}

/// Aligned text table with one row per reachable string and event:
/// `s | event | L_G(s.ev) | L_R(s) | uc(ev) | L_R(s.ev) | status`.
/// Rows for the empty string are outside the verdict and marked `exempt`.
pub fn render_report(
    plant: &Bfdes,
    spec: &Bfdes,
    uc: &UncontrollabilityMap,
    report: &ControllabilityReport,
) -> String {
    let header = ["s", "event", "L_G(s.ev)", "L_R(s)", "uc(ev)", "L_R(s.ev)", "status"];
    let mut rows: Vec<[String; 7]> = Vec::new();
    let alphabet = plant.alphabet();
    for pair in &report.pairs {
        let spec_here = pair.spec_state.join_all();
        for ev in &alphabet {
            let plant_next = match plant.event_matrix(ev) {
                Ok(m) => pair.plant_state.compose(m).expect("square"),
                Err(_) => continue,
            };
            let spec_next = match spec.event_matrix(ev) {
                Ok(m) => pair.spec_state.compose(m).expect("square"),
                Err(_) => continue,
            };
            let lhs_plant = plant_next.join_all();
            let rhs = spec_next.join_all();
            let uc_deg = match uc.degree(ev) {
                Ok(d) => d.clone(),
                Err(_) => continue,
            };
            let violated = report
                .violations
                .iter()
                .any(|v| v.witness == pair.witness && &v.event == ev);
            let status = if pair.witness.is_empty() {
                "exempt"
            } else if violated {
                "VIOLATION"
            } else {
                "ok"
            };
            rows.push([
                if pair.witness.is_empty() {
                    "eps".to_string()
                } else {
                    format_event_string(&pair.witness)
                },
                ev.clone(),
                lhs_plant.to_string(),
                spec_here.to_string(),
                uc_deg.to_string(),
                rhs.to_string(),
                status.to_string(),
            ]);
        }
    }
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in &rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let fmt_row = |cells: &[&str], widths: &[usize]| {
        cells
            .iter()
            .zip(widths)
            .map(|(c, &w)| pad(c, w))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let _ = writeln!(out, "{}", fmt_row(&header, &widths));
    for row in &rows {
        let cells: Vec<&str> = row.iter().map(String::as_str).collect();
        let _ = writeln!(out, "{}", fmt_row(&cells, &widths));
    }
    let verdict = match report.verdict {
        Verdict::Controllable => "controllable",
        Verdict::Uncontrollable => "uncontrollable",
    };
    let _ = writeln!(out, "verdict: {verdict}");
    if let Some(lm) = &report.lm_closure {
        let _ = writeln!(out, "Lm-closure: {}", if lm.holds { "holds" } else { "fails" });
        for v in &lm.violations {
            let _ = writeln!(
                out,
                "  at {}: L_R,m = {} but L_R meet L_G,m = {}",
                if v.witness.is_empty() { "eps".to_string() } else { format_event_string(&v.witness) },
                v.marked,
                v.expected
            );
        }
    }
    out
}
