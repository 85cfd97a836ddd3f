use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::args::Format;

pub const SCHEMA_VERSION: u32 = 1;

/// One command's output. JSON field order is fixed by declaration order,
/// and object keys keep insertion order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub schema_version: u32,
    pub command: String,
    pub inputs: Map<String, Value>,
    pub results: Value,
    pub diagnostics: Vec<String>,
}

/// Flat view of a record for CSV and table output.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Table {
        Table { columns: columns.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

pub struct Report {
    pub record: OutputRecord,
    pub table: Table,
}

impl Report {
    pub fn new(command: &str, inputs: Value, results: Value, table: Table) -> Report {
        let inputs = match inputs {
            Value::Object(m) => m,
            _ => Map::new(),
        };
        Report {
            record: OutputRecord {
                schema_version: SCHEMA_VERSION,
                command: command.to_string(),
                inputs,
                results,
                diagnostics: Vec::new(),
            },
            table,
        }
    }

    pub fn diagnose(&mut self, msg: impl Into<String>) {
        self.record.diagnostics.push(msg.into());
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.record).expect("records always serialize");
                s.push('\n');
                s
            }
            Format::Csv => render_csv(&self.table),
            Format::Table => render_table(&self.table),
        }
    }
}

fn render_csv(t: &Table) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&t.columns).expect("in-memory write");
    for r in &t.rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

fn render_table(t: &Table) -> String {
    let mut width: Vec<usize> = t.columns.iter().map(|c| c.len()).collect();
    for r in &t.rows {
        for (w, cell) in width.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let padded: Vec<String> = cells.iter().zip(&width).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(t.columns.clone());
    out +=
        &line(width.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().iter().map(|s| s.as_str()).collect());
    for r in &t.rows {
        out += &line(r.iter().map(|s| s.as_str()).collect());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> Report {
        let mut t = Table::new(&["d", "solution"]);
        t.push(vec!["11".into(), "1,1,19".into()]);
        t.push(vec!["11".into(), "5,7,17".into()]);
        let mut r = Report::new(
            "solutions",
            json!({"d": 11}),
            json!({"count": 2, "solutions": ["1,1,19", "5,7,17"], "ratio": "1/3"}),
            t,
        );
        r.diagnose("note");
        r
    }

    #[test]
    fn json_round_trip() {
        let r = sample();
        let text = r.render(Format::Json);
        let back: OutputRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r.record);
        assert_eq!(serde_json::to_string_pretty(&back).unwrap() + "\n", text);
        let keys: Vec<&str> =
            text.lines().filter(|l| l.starts_with("  \"")).map(|l| l.split('"').nth(1).unwrap()).collect();
        assert_eq!(keys, ["schema_version", "command", "inputs", "results", "diagnostics"]);
    }

    #[test]
    fn csv_quotes_commas() {
        let s = sample().render(Format::Csv);
        assert_eq!(s, "d,solution\n11,\"1,1,19\"\n11,\"5,7,17\"\n");
    }

    #[test]
    fn table_aligns() {
        let s = sample().render(Format::Table);
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines[0], "d   solution");
        assert_eq!(lines[1], "--  --------");
        assert_eq!(lines[2], "11  1,1,19");
    }
}
