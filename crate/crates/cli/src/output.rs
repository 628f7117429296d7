use std::fs;
use std::io::{self, Write};
use std::path::Path;

use clap::ValueEnum;
use polyface::bounds::BoundRow;
use polyface::{CheckReport, Result};
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Rectangular output for `--format csv` and the `rows` field of JSON output.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&'static str]) -> Self {
        Self {
            header: header.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn from_bound_rows(rows: &[BoundRow]) -> Self {
        let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
        let mut t = Table::new(&["d", "s", "i", "m", "k", "lhs", "rhs", "slack"]);
        for r in rows {
            t.push(vec![
                r.d.to_string(),
                opt(r.s),
                opt(r.i),
                opt(r.m),
                opt(r.k),
                r.lhs.clone(),
                r.rhs.clone(),
                r.slack.clone(),
            ]);
        }
        t
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header)?;
        for r in &self.rows {
            w.write_record(r)?;
        }
        let bytes = w.into_inner().map_err(|e| io::Error::other(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|r| {
                    let obj: Map<String, Value> = self
                        .header
                        .iter()
                        .zip(r)
                        .map(|(h, v)| (h.to_string(), Value::String(v.clone())))
                        .collect();
                    Value::Object(obj)
                })
                .collect(),
        )
    }
}

/// Reports plus the table behind them, as produced by `check`, `verify` and `sweep`.
#[derive(Debug, Default)]
pub struct Run {
    pub reports: Vec<CheckReport>,
    pub table: Table,
    /// Number of sub-checks abandoned because of the size cap.
    pub limit_hits: usize,
}

impl Run {
    pub fn failed(&self) -> bool {
        self.reports.iter().any(|r| !r.passed())
    }

    pub fn render(&self, format: Format) -> Result<String> {
        Ok(match format {
            Format::Csv => self.table.to_csv()?,
            Format::Json => {
                let reports: Vec<Value> = self.reports.iter().map(CheckReport::to_json_value).collect();
                let doc = json!({
                    "reports": reports,
                    "rows": self.table.to_json(),
                    "size_limit_hits": self.limit_hits,
                });
                serde_json::to_string_pretty(&doc)? + "\n"
            }
            Format::Text => {
                let mut s = String::new();
                for r in &self.reports {
                    s.push_str(&report_text(r));
                }
                if self.limit_hits > 0 {
                    s.push_str(&format!("size limit reached {} time(s)\n", self.limit_hits));
                }
                s
            }
        })
    }
}

const SHOWN_WITNESSES: usize = 20;

pub fn report_text(r: &CheckReport) -> String {
    let status = if r.is_skipped() {
        "SKIP"
    } else if r.passed() {
        "PASS"
    } else {
        "FAIL"
    };
    let mut s = format!("{status} {}", r.check());
    for (k, v) in r.params() {
        match v {
            Value::String(text) => s.push_str(&format!(" {k}={text}")),
            other => s.push_str(&format!(" {k}={other}")),
        }
    }
    if let Some(seed) = r.seed() {
        s.push_str(&format!(" seed={seed}"));
    }
    s.push('\n');
    for n in r.notes() {
        s.push_str(&format!("  note: {n}\n"));
    }
    for w in r.witnesses().iter().take(SHOWN_WITNESSES) {
        let faces: Vec<String> = w
            .faces
            .iter()
            .map(|f| match f.as_slice() {
                [one] => one.clone(),
                many => format!("{{{}}}", many.join(",")),
            })
            .collect();
        if faces.is_empty() {
            s.push_str(&format!("  witness: {}\n", w.reason));
        } else {
            s.push_str(&format!("  witness: {}: {}\n", w.reason, faces.join(" ")));
        }
    }
    if r.witnesses().len() > SHOWN_WITNESSES {
        s.push_str(&format!("  ... {} more witnesses\n", r.witnesses().len() - SHOWN_WITNESSES));
    }
    s
}

/// Writes to `path`, or to stdout when `path` is `None`.
pub fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(())
}
