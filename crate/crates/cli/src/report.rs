use std::fmt::Write as _;

use origami_core::polyring::MultiPoly;
use origami_core::report::{IdentityReport, Status};
use serde_json::{json, Map, Value};

const WRAP: usize = 96;

/// One output slot. Polynomials keep their structure so text mode can wrap
/// them at term boundaries.
#[derive(Clone, Debug)]
pub enum Output {
    Poly(MultiPoly),
    Text(String),
    Json(Value),
}

impl Output {
    fn to_json(&self) -> Value {
        match self {
            Output::Poly(p) => Value::String(p.to_string()),
            Output::Text(s) => Value::String(s.clone()),
            Output::Json(v) => v.clone(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<(String, String)>,
    pub outputs: Vec<(String, Output)>,
    pub identities: Vec<IdentityReport>,
    pub timing_ms: u128,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.into(),
            inputs: Vec::new(),
            outputs: Vec::new(),
            identities: Vec::new(),
            timing_ms: 0,
        }
    }

    pub fn input(&mut self, key: &str, value: impl ToString) {
        self.inputs.push((key.into(), value.to_string()));
    }

    pub fn poly(&mut self, key: &str, p: MultiPoly) {
        self.outputs.push((key.into(), Output::Poly(p)));
    }

    pub fn text(&mut self, key: &str, s: impl Into<String>) {
        self.outputs.push((key.into(), Output::Text(s.into())));
    }

    pub fn json(&mut self, key: &str, v: Value) {
        self.outputs.push((key.into(), Output::Json(v)));
    }

    pub fn identity(&mut self, r: IdentityReport) {
        self.identities.push(r);
    }

    pub fn get(&self, key: &str) -> Option<&Output> {
        self.outputs.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn polys(&self) -> impl Iterator<Item = (&str, &MultiPoly)> {
        self.outputs.iter().filter_map(|(k, v)| match v {
            Output::Poly(p) => Some((k.as_str(), p)),
            _ => None,
        })
    }

    pub fn passed(&self) -> bool {
        self.identities.iter().all(IdentityReport::passed)
    }

    pub fn to_json(&self) -> Value {
        let inputs: Map<String, Value> = self
            .inputs
            .iter()
            .map(|(k, v)| (k.clone(), Value::String(v.clone())))
            .collect();
        let outputs: Map<String, Value> =
            self.outputs.iter().map(|(k, v)| (k.clone(), v.to_json())).collect();
        json!({
            "command": self.command,
            "inputs": inputs,
            "outputs": outputs,
            "identities": self.identities,
            "timing_ms": self.timing_ms as u64,
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        for (k, v) in &self.inputs {
            let _ = writeln!(out, "  {k} = {v}");
        }
        for (k, v) in &self.outputs {
            match v {
                Output::Poly(p) => {
                    let body = p.render_wrapped(WRAP).replace('\n', "\n      ");
                    let _ = writeln!(out, "{k} =\n      {body}");
                }
                Output::Text(s) => {
                    let _ = writeln!(out, "{k} = {s}");
                }
                Output::Json(v) => {
                    let _ = writeln!(out, "{k} = {}", compact(v));
                }
            }
        }
        if !self.identities.is_empty() {
            let _ = writeln!(out, "identities:");
        }
        for r in &self.identities {
            let tag = match r.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            let _ = writeln!(out, "  [{tag}] {}", r.name);
            if let Some(res) = &r.residual {
                let _ = writeln!(out, "         residual: {res}");
            }
            for n in &r.notes {
                let _ = writeln!(out, "         note: {n}");
            }
        }
        let _ = writeln!(out, "time: {} ms", self.timing_ms);
        out
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Object(m) => m
            .iter()
            .map(|(k, v)| format!("{k}: {}", compact(v)))
            .collect::<Vec<_>>()
            .join(", "),
        other => other.to_string(),
    }
}
