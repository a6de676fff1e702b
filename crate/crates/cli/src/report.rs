//! Ordered key/value reports rendered as text or JSON.

use serde_json::{Map, Value};

#[derive(Clone, Debug, Default)]
pub struct Report {
    entries: Vec<(String, Value)>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.entries.push((key.to_string(), value.into()));
        self
    }

    pub fn push_display<T: std::fmt::Display>(&mut self, key: &str, value: T) -> &mut Self {
        self.push(key, value.to_string())
    }

    pub fn to_value(&self) -> Value {
        Value::Object(self.entries.iter().cloned().collect::<Map<String, Value>>())
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(&self.to_value()).expect("serializable");
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (key, value) in &self.entries {
            write_text(&mut out, key, value, 0);
        }
        out
    }
}

fn write_text(out: &mut String, key: &str, value: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Array(items) => {
            out.push_str(&format!("{pad}{key}:\n"));
            for (i, item) in items.iter().enumerate() {
                write_text(out, &format!("[{i}]"), item, indent + 1);
            }
        }
        Value::Object(map) => {
            out.push_str(&format!("{pad}{key}:\n"));
            for (k, v) in map {
                write_text(out, k, v, indent + 1);
            }
        }
        Value::String(s) => out.push_str(&format!("{pad}{key}: {s}\n")),
        other => out.push_str(&format!("{pad}{key}: {other}\n")),
    }
}
