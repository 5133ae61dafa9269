use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::invariants::Caps;

/// Overall status of a run, mapped to the process exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Inconclusive,
    Fail,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Pass => 0,
            Outcome::Fail => 1,
            Outcome::Inconclusive => 2,
        }
    }

    /// The worse of two outcomes, with failure dominating.
    pub fn and(self, other: Outcome) -> Outcome {
        self.max(other)
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Versioned run report; byte-identical for identical inputs and caps unless
/// wall time is requested.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub command: String,
    pub input_digest: String,
    pub caps: Value,
    pub outcome: Outcome,
    pub results: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u128>,
}

impl RunReport {
    pub fn new(command: &str, input: &[u8], caps: &Caps, outcome: Outcome, results: Value) -> Self {
        Self {
            schema: 1,
            command: command.to_string(),
            input_digest: sha256_hex(input),
            caps: json!({"N": caps.degree, "M": caps.wordlength, "q_cap": caps.fiber_wordlength}),
            outcome,
            results,
            wall_time_ms: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialise")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} [{}]\n", self.command, serde_json::to_value(self.outcome).unwrap().as_str().unwrap());
        render(&self.results, 0, &mut out);
        if let Some(t) = self.wall_time_ms {
            out.push_str(&format!("wall time: {t} ms\n"));
        }
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(if *b { "yes".into() } else { "no".into() }),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            Some(a.iter().map(|x| scalar(x).unwrap()).collect::<Vec<_>>().join(", "))
        }
        _ => None,
    }
}

/// Flat records such as toomer rows go on one line.
fn inline(v: &Value) -> Option<String> {
    let map = v.as_object()?;
    let mut parts = Vec::new();
    for (k, x) in map {
        let s = scalar(x).or_else(|| inline(x).map(|s| format!("{{{s}}}")))?;
        parts.push(format!("{k}={s}"));
    }
    let line = parts.join(" ");
    (line.len() <= 120).then_some(line)
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(x, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match scalar(x).or_else(|| inline(x)) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        render(x, indent + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap())),
    }
}
