//! Tabular command output rendered as JSON, CSV or an aligned text table.
//!
//! Floats are rounded to 12 significant digits before rendering, and JSON
//! objects keep their keys sorted, so re-parsing and re-serializing a JSON
//! document reproduces it byte for byte.

use std::collections::BTreeMap;
use std::io::{self, Write};

use serde_json::{Map, Number, Value};

pub const SCHEMA_VERSION: &str = "1";

/// Rounds to 12 significant digits and maps `-0.0` to `0.0`.
pub fn round_sig12(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    if !x.is_finite() {
        return x;
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    if rounded == 0.0 {
        0.0
    } else {
        rounded
    }
}

/// JSON number for a float; non-finite values become `null`.
pub fn float(x: f64) -> Value {
    Number::from_f64(round_sig12(x)).map_or(Value::Null, Value::Number)
}

/// Renders one cell the same way in CSV and in the text table.
pub fn cell_text(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OutputRecord {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    /// Column order for CSV and table output.
    pub columns: Vec<String>,
    pub rows: Vec<BTreeMap<String, Value>>,
}

impl OutputRecord {
    pub fn new(command: &str, columns: &[&str]) -> Self {
        OutputRecord {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    /// Appends a row; columns missing from `cells` are left empty.
    pub fn push_row<I, K>(&mut self, cells: I)
    where
        I: IntoIterator<Item = (K, Value)>,
        K: Into<String>,
    {
        let mut row: BTreeMap<String, Value> = cells.into_iter().map(|(k, v)| (k.into(), v)).collect();
        for c in &self.columns {
            row.entry(c.clone()).or_insert(Value::Null);
        }
        self.rows.push(row);
    }

    pub fn to_json_value(&self) -> Value {
        let mut top = Map::new();
        top.insert("schema_version".into(), Value::String(SCHEMA_VERSION.into()));
        top.insert("command".into(), Value::String(self.command.clone()));
        top.insert(
            "parameters".into(),
            Value::Object(self.parameters.iter().map(|(k, v)| (k.clone(), v.clone())).collect()),
        );
        top.insert(
            "rows".into(),
            Value::Array(
                self.rows
                    .iter()
                    .map(|r| Value::Object(r.iter().map(|(k, v)| (k.clone(), v.clone())).collect()))
                    .collect(),
            ),
        );
        Value::Object(top)
    }

    pub fn to_json(&self) -> String {
        json_text(&self.to_json_value())
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            w.write_record(self.columns.iter().map(|c| cell_text(&row[c])))
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
    }

    pub fn to_table(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| self.columns.iter().map(|c| cell_text(&r[c])).collect())
            .collect();
        let widths: Vec<usize> = self
            .columns
            .iter()
            .enumerate()
            .map(|(i, c)| cells.iter().map(|r| r[i].len()).chain([c.len()]).max().unwrap_or(0))
            .collect();
        let line = |items: &[String]| {
            let mut s = items
                .iter()
                .zip(&widths)
                .map(|(x, w)| format!("{x:>w$}"))
                .collect::<Vec<_>>()
                .join("  ");
            s.truncate(s.trim_end().len());
            s.push('\n');
            s
        };
        let mut out = line(&self.columns);
        for r in &cells {
            out.push_str(&line(r));
        }
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.to_table(),
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        out.write_all(self.render(format).as_bytes())
    }
}

/// Pretty JSON with a trailing newline.
pub fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}
