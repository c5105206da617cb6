//! Tables of results and their CSV / JSON encodings.

use std::io::Write;
use std::path::Path;

use serde_json::{Map, Value};

use crate::config::Format;
use crate::error::CliError;

/// Significant digits kept in every rendered number.
pub const SIGNIFICANT_DIGITS: usize = 15;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Int(i64),
    Num(f64),
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::Int(i64::from(v))
    }
}

/// Rounds to [`SIGNIFICANT_DIGITS`] significant digits.
pub fn round_sig(v: f64) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return v;
    }
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, v)
        .parse()
        .expect("formatted float parses")
}

/// Text of an already rounded value: plain decimal in the usual range,
/// scientific otherwise. Both forms parse back to the same `f64`.
fn number_text(v: f64) -> String {
    let a = v.abs();
    if v == 0.0 || (1e-6..1e15).contains(&a) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Table {
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// Rounds every number and rejects NaN or infinities.
    pub fn finalize(mut self) -> Result<Self, CliError> {
        for (r, row) in self.rows.iter_mut().enumerate() {
            for (c, cell) in row.iter_mut().enumerate() {
                if let Cell::Num(v) = cell {
                    if !v.is_finite() {
                        return Err(CliError::Core(covosc_core::Error::NumericIntegrity(
                            format!("non-finite {} in row {r}", self.columns[c]),
                        )));
                    }
                    *v = round_sig(*v);
                }
            }
        }
        Ok(self)
    }
}

fn config_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "adaptive".to_string(),
        other => other.to_string(),
    }
}

pub fn render_csv(config: &Map<String, Value>, table: &Table) -> String {
    let mut out = String::new();
    for (k, v) in config {
        out.push_str(&format!("# {k} = {}\n", config_text(v)));
    }
    out.push_str(&table.columns.join(","));
    out.push('\n');
    for row in &table.rows {
        let cells: Vec<String> = row
            .iter()
            .map(|c| match *c {
                Cell::Int(i) => i.to_string(),
                Cell::Num(v) => number_text(v),
            })
            .collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

pub fn render_json(config: &Map<String, Value>, table: &Table) -> String {
    let results: Vec<Value> = table
        .rows
        .iter()
        .map(|row| {
            let obj: Map<String, Value> = table
                .columns
                .iter()
                .zip(row)
                .map(|(k, c)| {
                    let v = match *c {
                        Cell::Int(i) => Value::from(i),
                        Cell::Num(v) => Value::from(v),
                    };
                    (k.clone(), v)
                })
                .collect();
            Value::Object(obj)
        })
        .collect();
    let mut doc = Map::new();
    doc.insert("config".into(), Value::Object(config.clone()));
    doc.insert("results".into(), Value::Array(results));
    let mut text =
        serde_json::to_string_pretty(&Value::Object(doc)).expect("finite values serialize");
    text.push('\n');
    text
}

pub fn render(format: Format, config: &Map<String, Value>, table: &Table) -> String {
    match format {
        Format::Csv => render_csv(config, table),
        Format::Json => render_json(config, table),
    }
}

/// Destination opened before any computation so that an unwritable path
/// fails fast; file output is written to a temporary sibling and renamed.
pub enum Sink {
    Stdout,
    File {
        temp: tempfile::NamedTempFile,
        path: std::path::PathBuf,
    },
}

impl Sink {
    pub fn open(path: Option<&Path>) -> Result<Self, CliError> {
        let Some(path) = path else {
            return Ok(Sink::Stdout);
        };
        let parent = match path.parent() {
            Some(p) if !p.as_os_str().is_empty() => p,
            _ => Path::new("."),
        };
        if path.is_dir() {
            return Err(CliError::Io(format!(
                "output path {} is a directory",
                path.display()
            )));
        }
        let temp = tempfile::NamedTempFile::new_in(parent)
            .map_err(|e| CliError::Io(format!("cannot write to {}: {e}", path.display())))?;
        Ok(Sink::File {
            temp,
            path: path.to_path_buf(),
        })
    }

    pub fn commit(self, text: &str) -> Result<(), CliError> {
        match self {
            Sink::Stdout => {
                let mut out = std::io::stdout().lock();
                out.write_all(text.as_bytes())
                    .and_then(|_| out.flush())
                    .map_err(|e| CliError::Io(format!("cannot write to stdout: {e}")))
            }
            Sink::File { mut temp, path } => {
                let io = |e: std::io::Error| {
                    CliError::Io(format!("cannot write to {}: {e}", path.display()))
                };
                temp.write_all(text.as_bytes()).map_err(io)?;
                temp.as_file().sync_all().map_err(io)?;
                temp.persist(&path).map_err(|e| io(e.error))?;
                Ok(())
            }
        }
    }
}
