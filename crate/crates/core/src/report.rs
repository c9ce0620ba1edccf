//! The structured document every CLI invocation produces, and its text form.
//!
//! Elements are always rendered as literals. The payload carries no timing
//! unless asked for, so identical invocations give byte-identical JSON.

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::classify::ClassReport;
use crate::counterexample::SearchReport;
use crate::ring::{Elem, StarRing};
use crate::survey::SurveyReport;
use crate::theorem::{TheoremReport, Verdict};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Invocation {
    pub command: String,
    /// Flag name to value, in command-line order.
    pub args: Vec<(String, String)>,
}

impl Invocation {
    pub fn new(command: &str, args: &[(&str, &str)]) -> Self {
        Invocation {
            command: command.to_string(),
            args: args
                .iter()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Document {
    pub invocation: Invocation,
    pub ring: Value,
    /// Always an object with a `status` string.
    pub result: Value,
    pub counts: Map<String, Value>,
    pub witnesses: Vec<Value>,
    pub violations: Vec<Value>,
    pub elapsed_ms: Option<u64>,
}

/// Statuses that map to exit code 1.
const FAILING: [&str; 4] = [
    "refuted",
    "counterexample-found",
    "disagreement",
    "invariant-violated",
];

impl Document {
    fn new(invocation: Invocation, ring: &StarRing, status: &str) -> Self {
        Document {
            invocation,
            ring: json!({ "spec": ring.spec(), "size": ring.size() }),
            result: json!({ "status": status }),
            counts: Map::new(),
            witnesses: Vec::new(),
            violations: Vec::new(),
            elapsed_ms: None,
        }
    }

    pub fn status(&self) -> &str {
        self.result["status"].as_str().unwrap_or("")
    }

    /// 0 for a positive outcome, 1 for a refutation or disagreement.
    pub fn exit_code(&self) -> i32 {
        i32::from(FAILING.contains(&self.status()))
    }

    fn set(&mut self, key: &str, value: Value) {
        self.result
            .as_object_mut()
            .expect("result is an object")
            .insert(key.to_string(), value);
    }

    fn count(&mut self, key: &str, value: impl Into<Value>) {
        self.counts.insert(key.to_string(), value.into());
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    /// Line-oriented rendering of the same document.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let args: Vec<String> = self
            .invocation
            .args
            .iter()
            .map(|(k, v)| format!("--{k} {v}"))
            .collect();
        out.push_str(&format!(
            "starinv {} {}\n",
            self.invocation.command,
            args.join(" ")
        ));
        out.push_str(&format!(
            "ring: {} ({} elements)\n",
            self.ring["spec"].as_str().unwrap_or(""),
            self.ring["size"]
        ));
        out.push_str(&format!("result: {}\n", self.status()));
        let mut rest = self.result.clone();
        rest.as_object_mut()
            .expect("result is an object")
            .shift_remove("status");
        flatten(&mut out, "  ", &rest);
        if !self.counts.is_empty() {
            out.push_str("counts:\n");
            flatten(&mut out, "  ", &Value::Object(self.counts.clone()));
        }
        for (title, list) in [
            ("witnesses", &self.witnesses),
            ("violations", &self.violations),
        ] {
            if !list.is_empty() {
                out.push_str(&format!("{title}:\n"));
                for v in list {
                    item(&mut out, "  ", v);
                }
            }
        }
        if let Some(ms) = self.elapsed_ms {
            out.push_str(&format!("elapsed: {ms} ms\n"));
        }
        out
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        other => other.to_string(),
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::Object(m) => m
            .iter()
            .map(|(k, v)| format!("{k}={}", inline(v)))
            .collect::<Vec<_>>()
            .join(" "),
        Value::Array(a) => format!("[{}]", a.iter().map(inline).collect::<Vec<_>>().join(", ")),
        other => scalar(other),
    }
}

fn nested(v: &Value) -> bool {
    match v {
        Value::Object(_) => true,
        Value::Array(items) => items.iter().any(|i| i.is_object()),
        _ => false,
    }
}

/// One list item: scalar fields on the bullet line, nested lists beneath it.
fn item(out: &mut String, indent: &str, v: &Value) {
    let Value::Object(m) = v else {
        out.push_str(&format!("{indent}- {}\n", inline(v)));
        return;
    };
    let line: Vec<String> = m
        .iter()
        .filter(|(_, v)| !nested(v))
        .map(|(k, v)| format!("{k}={}", inline(v)))
        .collect();
    out.push_str(&format!("{indent}- {}\n", line.join(" ")));
    let deeper = format!("{indent}    ");
    for (k, v) in m.iter().filter(|(_, v)| nested(v)) {
        match v {
            Value::Array(items) => {
                out.push_str(&format!("{indent}  {k}:\n"));
                for i in items {
                    item(out, &deeper, i);
                }
            }
            other => out.push_str(&format!("{indent}  {k}: {}\n", inline(other))),
        }
    }
}

fn flatten(out: &mut String, indent: &str, v: &Value) {
    let Value::Object(m) = v else {
        out.push_str(&format!("{indent}{}\n", inline(v)));
        return;
    };
    for (k, v) in m {
        match v {
            Value::Object(_) => {
                out.push_str(&format!("{indent}{k}:\n"));
                flatten(out, &format!("{indent}  "), v);
            }
            Value::Array(items) if nested(v) => {
                out.push_str(&format!("{indent}{k}:\n"));
                for i in items {
                    item(out, &format!("{indent}  "), i);
                }
            }
            other => out.push_str(&format!("{indent}{k}: {}\n", inline(other))),
        }
    }
}

fn show_opt(ring: &StarRing, e: Option<Elem>) -> Value {
    e.map_or(Value::Null, |e| Value::String(ring.show(e)))
}

pub fn classify_document(invocation: Invocation, ring: &StarRing, r: &ClassReport) -> Document {
    let disagreements = r.disagreements();
    let status = if disagreements.is_empty() {
        "classified"
    } else {
        "disagreement"
    };
    let mut d = Document::new(invocation, ring, status);
    d.set("element", Value::String(ring.show(r.element)));
    d.set("is_ep", json!(r.is_ep));
    d.set("is_cep", json!(r.is_cep));
    d.set("is_star_dmp", json!(r.is_star_dmp));
    d.set("dmp_index", json!(r.dmp_index));
    d.set(
        "inverses",
        Value::Array(
            r.inverses
                .iter()
                .map(|i| {
                    json!({
                        "kind": i.kind.name(),
                        "exists": i.exists,
                        "inverse": show_opt(ring, i.inverse),
                        "index": i.index,
                        "witness_count": i.witness_count,
                        "status": i.status,
                    })
                })
                .collect(),
        ),
    );
    d.set(
        "predicates",
        Value::Array(
            r.verdicts
                .iter()
                .map(|v| {
                    let methods: Vec<Value> = v
                        .methods
                        .iter()
                        .map(|m| json!({ "method": m.method.id(), "holds": m.holds, "index": m.index, "note": m.note }))
                        .collect();
                    json!({ "predicate": v.predicate.name(), "holds": v.holds, "methods": methods })
                })
                .collect(),
        ),
    );
    d.set(
        "conditionals",
        Value::Array(
            r.conditionals
                .iter()
                .map(|c| {
                    json!({
                        "hypothesis": c.hypothesis.id(),
                        "hypothesis_holds": c.hypothesis_holds,
                        "axa_mixed_solvable": c.axa_mixed_solvable,
                        "is_ep": c.is_ep,
                    })
                })
                .collect(),
        ),
    );
    d.set(
        "decompositions",
        Value::Array(
            r.decompositions
                .iter()
                .map(|dec| {
                    let parts: Map<String, Value> = dec
                        .parts
                        .iter()
                        .map(|p| (p.name.to_string(), Value::String(ring.show(p.value))))
                        .collect();
                    json!({
                        "kind": dec.kind.name(),
                        "exponent": dec.exponent,
                        "parts": parts,
                        "alternatives": dec.alternatives,
                        "unique": dec.unique,
                    })
                })
                .collect(),
        ),
    );
    for s in &r.systems {
        d.count(s.system.name(), s.count as u64);
        for &(x, n) in &s.witnesses {
            d.witnesses
                .push(json!({ "system": s.system.name(), "x": ring.show(x), "n": n }));
        }
    }
    d.violations = disagreements
        .into_iter()
        .map(|m| json!({ "detail": m }))
        .collect();
    d
}

pub fn verify_document(invocation: Invocation, ring: &StarRing, r: &TheoremReport) -> Document {
    let info = crate::theorem::lookup(r.theorem).expect("reports come from the registry");
    let status = match r.verdict {
        Verdict::Verified => "verified",
        Verdict::Refuted => "refuted",
        Verdict::Vacuous => "vacuous",
    };
    let mut d = Document::new(invocation, ring, status);
    d.set("theorem", json!(r.theorem));
    d.set("kind", json!(r.kind));
    d.set("scope", json!(r.scope));
    d.set("hypothesis", json!(info.hypothesis));
    d.set("statement", json!(info.statement));
    d.count("checked", r.checked);
    d.count("in_scope", r.in_scope);
    d.count("violations", r.violation_count);
    for (name, v) in &r.facts {
        d.count(name, *v);
    }
    d.violations = r
        .violations
        .iter()
        .map(|v| json!({ "elements": v.elements, "detail": v.detail }))
        .collect();
    d
}

pub fn counterexample_document(
    invocation: Invocation,
    ring: &StarRing,
    r: &SearchReport,
) -> Document {
    let status = if r.refuted() {
        "counterexample-found"
    } else {
        "no-counterexample"
    };
    let mut d = Document::new(invocation, ring, status);
    d.set("claim", json!(r.claim.id()));
    d.set("statement", json!(r.claim.statement()));
    d.set("system", json!(r.claim.system().name()));
    if !r.refuted() {
        d.set("message", json!("no counterexample in this ring"));
    }
    d.count("elements_checked", r.elements_checked);
    d.count("counterexamples", r.found.len() as u64);
    d.witnesses = r
        .found
        .iter()
        .map(|c| {
            json!({
                "element": ring.show(c.element),
                "x": ring.show(c.witness),
                "witness_count": c.witness_count,
                "is_ep": false,
            })
        })
        .collect();
    d
}

pub fn survey_document(invocation: Invocation, ring: &StarRing, r: &SurveyReport) -> Document {
    let status = if r.invariants_hold() {
        "surveyed"
    } else {
        "invariant-violated"
    };
    let mut d = Document::new(invocation, ring, status);
    d.set("q3_relation", json!(r.q3_relation));
    d.set("invariants", json!(r.invariants));
    if let Value::Object(m) = json!(r.counts) {
        d.counts = m;
    }
    d.violations = r
        .invariants
        .iter()
        .filter(|i| !i.holds)
        .map(|i| json!({ "invariant": i.name }))
        .collect();
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify;
    use crate::parse::{parse_elem, parse_ring};

    #[test]
    fn classify_document_is_deterministic_and_complete() {
        let r = parse_ring("zn(6)").unwrap();
        let a = parse_elem(&r, "2").unwrap();
        let doc = || {
            classify_document(
                Invocation::new("classify", &[("ring", "zn(6)"), ("elem", "2")]),
                &r,
                &classify(&r, a).unwrap(),
            )
        };
        let json = doc().to_json();
        assert_eq!(json, doc().to_json());
        let v: Value = serde_json::from_str(&json).unwrap();
        for key in [
            "invocation",
            "ring",
            "result",
            "counts",
            "witnesses",
            "violations",
            "elapsed_ms",
        ] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["elapsed_ms"], Value::Null);
        assert_eq!(v["result"]["is_cep"], json!(true));
        assert_eq!(doc().exit_code(), 0);
        let text = doc().render_text();
        assert!(text.contains("result: classified"));
        assert!(text.contains("is_ep: true"));
    }
}
