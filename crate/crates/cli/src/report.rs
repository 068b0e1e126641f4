//! One payload, two renderings: canonical JSON (sorted keys, `schema: 1`)
//! and indented text.

use serde_json::{json, Map};

use wedderburn::{Elem, MatK, OrePoly};

use crate::CliError;

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Null,
    Bool(bool),
    Int(i64),
    Str(String),
    Elem(Elem),
    Poly(OrePoly),
    Matrix(MatK),
    /// Text `[a, b]`.
    List(Vec<Value>),
    /// Text `{a, b}`.
    Set(Vec<Value>),
    Map(Vec<(String, Value)>),
}

impl Value {
    pub fn int(n: usize) -> Value {
        Value::Int(n as i64)
    }

    pub fn str(s: impl Into<String>) -> Value {
        Value::Str(s.into())
    }

    pub fn elems(v: &[Elem]) -> Value {
        Value::Set(v.iter().cloned().map(Value::Elem).collect())
    }

    pub fn vector(v: &[Elem]) -> Value {
        Value::List(v.iter().cloned().map(Value::Elem).collect())
    }

    pub fn polys(v: &[OrePoly]) -> Value {
        Value::List(v.iter().cloned().map(Value::Poly).collect())
    }

    pub fn opt<T>(v: Option<T>, f: impl FnOnce(T) -> Value) -> Value {
        v.map_or(Value::Null, f)
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Value::Null => serde_json::Value::Null,
            Value::Bool(b) => json!(b),
            Value::Int(n) => json!(n),
            Value::Str(s) => json!(s),
            Value::Elem(e) => json!(e.to_string()),
            Value::Poly(p) => json!(p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>()),
            Value::Matrix(m) => json!(m
                .to_rows()
                .iter()
                .map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>()),
            Value::List(v) | Value::Set(v) => serde_json::Value::Array(v.iter().map(Value::to_json).collect()),
            Value::Map(kv) => {
                let mut m = Map::new();
                for (k, v) in kv {
                    m.insert(k.clone(), v.to_json());
                }
                serde_json::Value::Object(m)
            }
        }
    }

    fn inline(&self) -> Option<String> {
        Some(match self {
            Value::Null => "none".into(),
            Value::Bool(b) => b.to_string(),
            Value::Int(n) => n.to_string(),
            Value::Str(s) => s.clone(),
            Value::Elem(e) => e.to_string(),
            Value::Poly(p) => p.to_string(),
            Value::Matrix(m) => m.to_string(),
            Value::List(v) => format!("[{}]", join_inline(v)?),
            Value::Set(v) => format!("{{{}}}", join_inline(v)?),
            Value::Map(_) => return None,
        })
    }

    fn write_text(&self, key: &str, indent: usize, out: &mut String) {
        let pad = "  ".repeat(indent);
        if let Some(s) = self.inline() {
            out.push_str(&format!("{pad}{key}: {s}\n"));
            return;
        }
        out.push_str(&format!("{pad}{key}:\n"));
        match self {
            Value::Map(kv) => {
                for (k, v) in kv {
                    v.write_text(k, indent + 1, out);
                }
            }
            Value::List(v) | Value::Set(v) => {
                for (i, x) in v.iter().enumerate() {
                    x.write_text(&format!("[{i}]"), indent + 1, out);
                }
            }
            _ => unreachable!("scalars render inline"),
        }
    }
}

fn join_inline(v: &[Value]) -> Option<String> {
    Some(v.iter().map(Value::inline).collect::<Option<Vec<_>>>()?.join(", "))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// no / unsolvable / unknown
    Negative,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub args: Vec<String>,
    pub ring: String,
    pub result: Vec<(String, Value)>,
    /// Independent re-check of the witnesses, where the command produces any.
    pub verified: Option<bool>,
    pub status: Status,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Ok => 0,
            Status::Negative => 2,
        }
    }

    fn header(&self) -> Vec<(String, Value)> {
        vec![
            ("command".into(), Value::str(&self.command)),
            ("args".into(), Value::List(self.args.iter().map(Value::str).collect())),
            ("ring".into(), Value::str(&self.ring)),
        ]
    }

    pub fn to_json(&self) -> String {
        let mut kv = self.header();
        kv.push(("schema".into(), Value::Int(1)));
        kv.push(("result".into(), Value::Map(self.result.clone())));
        kv.push((
            "status".into(),
            Value::str(match self.status {
                Status::Ok => "ok",
                Status::Negative => "no",
            }),
        ));
        if let Some(v) = self.verified {
            kv.push(("verified".into(), Value::Bool(v)));
        }
        Value::Map(kv).to_json().to_string()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} over {}\n", self.command, self.ring);
        for (k, v) in &self.result {
            v.write_text(k, 0, &mut out);
        }
        if let Some(v) = self.verified {
            out.push_str(&format!("verified: {v}\n"));
        }
        out
    }
}

pub fn error_json(command: &str, e: &CliError) -> String {
    json!({
        "command": command,
        "error": { "code": e.code(), "message": e.to_string() },
        "schema": 1,
        "status": "error",
    })
    .to_string()
}
