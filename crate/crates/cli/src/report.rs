//! Report documents: canonical JSON with sorted keys.

use serde_json::{json, Map, Value};
use unital_core::units::{unit_label, LrUnit};
use unital_core::{FinCategory, MorId, ObjId, SaavedraUnit, ValidationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    InvalidInput,
    TheoremViolation,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::InvalidInput => 1,
            Status::TheoremViolation => 2,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::InvalidInput => "invalid_input",
            Status::TheoremViolation => "theorem_violation",
        }
    }

    pub fn worst(self, other: Status) -> Status {
        if other.exit_code() > self.exit_code() {
            other
        } else {
            self
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub status: Status,
    pub body: Value,
}

impl Outcome {
    pub fn ok(body: Value) -> Self {
        Outcome { status: Status::Ok, body }
    }
}

/// The full report text: the body merged with `command` and `status`.
pub fn render(command: &str, status: Status, body: Value) -> String {
    let mut map = match body {
        Value::Object(map) => map,
        other => {
            let mut m = Map::new();
            m.insert("result".into(), other);
            m
        }
    };
    map.insert("command".into(), json!(command));
    map.insert("status".into(), json!(status.label()));
    let mut text = serde_json::to_string_pretty(&Value::Object(map)).expect("values serialize");
    text.push('\n');
    text
}

pub fn mor(c: &FinCategory, f: MorId) -> Value {
    json!(c.morphism_name(f))
}

pub fn obj(c: &FinCategory, a: ObjId) -> Value {
    json!(c.object_name(a))
}

pub fn unit(c: &FinCategory, u: &SaavedraUnit) -> Value {
    json!(unit_label(c, u))
}

pub fn opt_unit(c: &FinCategory, u: Option<&SaavedraUnit>) -> Value {
    u.map_or(Value::Null, |u| unit(c, u))
}

pub fn lr(c: &FinCategory, u: &LrUnit) -> Value {
    let family = |f: &dyn Fn(ObjId) -> MorId| -> Map<String, Value> {
        c.objects().map(|x| (c.object_name(x).to_string(), mor(c, f(x)))).collect()
    };
    json!({
        "object": obj(c, u.object),
        "lambda": family(&|x| u.lambda(x)),
        "rho": family(&|x| u.rho(x)),
    })
}

/// Violations with the ids they cite spelled out by name.
pub fn violations(c: &FinCategory, report: &ValidationReport) -> Value {
    let names = |v: Value| -> Value {
        let Value::Object(map) = v else { return v };
        map.into_iter()
            .map(|(k, v)| {
                let named = match (k.as_str(), v.as_u64()) {
                    ("kind" | "detail", _) | (_, None) => v,
                    ("object" | "a" | "b" | "c" | "x" | "y" | "z", Some(id)) => obj(c, ObjId(id as usize)),
                    (_, Some(id)) => mor(c, MorId(id as usize)),
                };
                (k, named)
            })
            .collect()
    };
    Value::Array(report.violations.iter().map(|v| names(serde_json::to_value(v).expect("serializes"))).collect())
}

pub fn morphisms(c: &FinCategory, fs: &[MorId]) -> Value {
    Value::Array(fs.iter().map(|&f| mor(c, f)).collect())
}
