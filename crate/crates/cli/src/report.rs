//! Command results: an aligned text rendering and a JSON rendering of the
//! same data.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;
use serde_json::Value;

pub const TOOL: &str = "gmf";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, Default)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Table {
        Table { columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub family: Option<String>,
    pub seed: u64,
    pub caps: BTreeMap<String, usize>,
    /// Named results in display order.
    pub fields: Vec<(String, Value)>,
    pub table: Option<Table>,
    pub verdict: Option<Verdict>,
    pub wall_time_s: Option<f64>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Report {
        Report {
            command: command.into(),
            family: None,
            seed: 0,
            caps: BTreeMap::new(),
            fields: Vec::new(),
            table: None,
            verdict: None,
            wall_time_s: None,
        }
    }

    pub fn field(&mut self, name: &str, value: impl Into<Value>) -> &mut Report {
        self.fields.push((name.to_string(), value.into()));
        self
    }

    pub fn cap(&mut self, name: &str, value: usize) -> &mut Report {
        self.caps.insert(name.to_string(), value);
        self
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("reports serialize");
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut head: Vec<(String, String)> = vec![("command".into(), self.command.clone())];
        if let Some(f) = &self.family {
            head.push(("family".into(), f.clone()));
        }
        head.push(("seed".into(), self.seed.to_string()));
        if !self.caps.is_empty() {
            let caps: Vec<String> = self.caps.iter().map(|(k, v)| format!("{k}={v}")).collect();
            head.push(("caps".into(), caps.join(" ")));
        }
        head.extend(self.fields.iter().map(|(k, v)| (k.clone(), plain(v))));
        let width = head.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, v) in &head {
            writeln!(out, "{k:<width$}  {v}").unwrap();
        }
        if let Some(table) = &self.table {
            out.push('\n');
            let cells: Vec<Vec<String>> = table.rows.iter().map(|r| r.iter().map(plain).collect()).collect();
            let widths: Vec<usize> = (0..table.columns.len())
                .map(|i| cells.iter().map(|r| r[i].len()).chain([table.columns[i].len()]).max().unwrap_or(0))
                .collect();
            let line = |row: &[String]| {
                let padded: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
                padded.join("  ").trim_end().to_string()
            };
            writeln!(out, "{}", line(&table.columns)).unwrap();
            for row in &cells {
                writeln!(out, "{}", line(row)).unwrap();
            }
        }
        if let Some(v) = &self.verdict {
            writeln!(out, "\nverdict: {}", verdict_word(v)).unwrap();
        }
        out
    }
}

fn verdict_word(v: &Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Fail => "fail",
    }
}

/// Strings bare, edges as `u-v`, flat arrays space-separated, everything
/// else as compact JSON.
fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(items) if items.iter().all(is_edge) => {
            items.iter().map(|e| format!("{}-{}", e[0], e[1])).collect::<Vec<_>>().join(" ")
        }
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            items.iter().map(plain).collect::<Vec<_>>().join(" ")
        }
        other => other.to_string(),
    }
}

fn is_edge(v: &Value) -> bool {
    matches!(v, Value::Array(p) if p.len() == 2 && p.iter().all(Value::is_u64))
}

struct Ordered<'a, K: AsRef<str>>(&'a [(K, &'a Value)]);

impl<K: AsRef<str>> Serialize for Ordered<'_, K> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            map.serialize_entry(k.as_ref(), v)?;
        }
        map.end()
    }
}

impl Serialize for Report {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        map.serialize_entry("tool", TOOL)?;
        map.serialize_entry("version", VERSION)?;
        map.serialize_entry("command", &self.command)?;
        map.serialize_entry("family", &self.family)?;
        map.serialize_entry("seed", &self.seed)?;
        map.serialize_entry("caps", &self.caps)?;
        map.serialize_entry("wall_time_s", &self.wall_time_s)?;
        let fields: Vec<(&str, &Value)> = self.fields.iter().map(|(k, v)| (k.as_str(), v)).collect();
        map.serialize_entry("result", &Ordered(&fields))?;
        if let Some(table) = &self.table {
            let rows: Vec<Vec<(&str, &Value)>> =
                table.rows.iter().map(|r| table.columns.iter().map(String::as_str).zip(r).collect()).collect();
            let rows: Vec<Ordered<&str>> = rows.iter().map(|r| Ordered(r)).collect();
            map.serialize_entry("rows", &rows)?;
        }
        map.serialize_entry("verdict", &self.verdict.as_ref().map(verdict_word))?;
        map.end()
    }
}
