//! Key=value and JSON rendering of command results.

use serde_json::{Map, Value};

/// One result record: ordered fields for the summary line plus free-form
/// detail lines.
#[derive(Default)]
pub struct Record {
    fields: Vec<(String, String, Value)>,
    detail: Vec<String>,
    /// Structured detail for JSON output, under the `detail` key.
    detail_json: Option<Value>,
}

impl Record {
    pub fn new() -> Record {
        Record::default()
    }

    /// Add a field rendered the same way in both outputs.
    pub fn field(&mut self, key: impl Into<String>, value: impl Into<Value>) -> &mut Record {
        let value = value.into();
        let text = match &value {
            Value::String(s) => s.clone(),
            Value::Bool(b) => yes_no(*b).to_string(),
            other => other.to_string(),
        };
        self.fields.push((key.into(), text, value));
        self
    }

    /// Add a field with a separate human rendering.
    pub fn field_as(
        &mut self,
        key: impl Into<String>,
        text: impl Into<String>,
        value: impl Into<Value>,
    ) -> &mut Record {
        self.fields.push((key.into(), text.into(), value.into()));
        self
    }

    pub fn line(&mut self, line: impl Into<String>) -> &mut Record {
        self.detail.push(line.into());
        self
    }

    pub fn detail_json(&mut self, value: Value) -> &mut Record {
        self.detail_json = Some(value);
        self
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let mut map = Map::new();
            for (k, _, v) in &self.fields {
                map.insert(k.clone(), v.clone());
            }
            if let Some(d) = &self.detail_json {
                map.insert("detail".into(), d.clone());
            } else if !self.detail.is_empty() {
                map.insert("detail".into(), self.detail.clone().into());
            }
            return Value::Object(map).to_string() + "\n";
        }
        let mut out = String::new();
        if !self.fields.is_empty() {
            let parts: Vec<String> = self.fields.iter().map(|(k, t, _)| format!("{k}={t}")).collect();
            out.push_str(&parts.join(" "));
            out.push('\n');
        }
        for l in &self.detail {
            out.push_str(l);
            out.push('\n');
        }
        out
    }
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Bits as `(1,0,1)` for humans.
pub fn bit_tuple(bits: &[bool]) -> String {
    let parts: Vec<&str> = bits.iter().map(|&b| if b { "1" } else { "0" }).collect();
    format!("({})", parts.join(","))
}

pub fn bit_string(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}
