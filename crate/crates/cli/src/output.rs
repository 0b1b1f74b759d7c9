//! Tables and their CSV/JSON serializations.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::str::FromStr;

use serde_json::{Map, Number};

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Real(f64),
    Int(i64),
    Text(String),
}

impl Value {
    /// Reals get 17 significant digits, enough to round-trip any `f64`.
    pub fn render(&self) -> String {
        match self {
            Value::Real(x) => format!("{x:.16e}"),
            Value::Int(n) => n.to_string(),
            Value::Text(s) => s.clone(),
        }
    }

    fn to_json(&self) -> io::Result<serde_json::Value> {
        Ok(match self {
            Value::Real(x) if !x.is_finite() => {
                return Err(io::Error::new(
                    io::ErrorKind::InvalidData,
                    format!("non-finite value {x}"),
                ))
            }
            Value::Real(_) => {
                let n = Number::from_str(&self.render())
                    .map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e))?;
                serde_json::Value::Number(n)
            }
            Value::Int(n) => serde_json::Value::from(*n),
            Value::Text(s) => serde_json::Value::String(s.clone()),
        })
    }
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Real(x)
    }
}

impl From<i64> for Value {
    fn from(n: i64) -> Self {
        Value::Int(n)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_owned())
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Text(s)
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Table {
    pub meta: Vec<(String, Value)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Table {
            meta: Vec::new(),
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn meta(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.meta.push((key.to_owned(), value.into()));
        self
    }

    pub fn push(&mut self, row: Vec<Value>) {
        assert_eq!(row.len(), self.columns.len(), "row width");
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Default)]
pub struct OutputSpec {
    pub format: Format,
    /// `None` writes to standard output.
    pub path: Option<PathBuf>,
    pub svg_path: Option<PathBuf>,
    /// Leading `#` comment line (CSV) or `meta.provenance` entry (JSON).
    pub provenance: Option<String>,
}

pub fn to_csv(table: &Table, provenance: Option<&str>) -> io::Result<Vec<u8>> {
    let mut buf = Vec::new();
    if let Some(p) = provenance {
        writeln!(buf, "# {p}")?;
    }
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(buf);
    w.write_record(&table.columns)?;
    for row in &table.rows {
        w.write_record(row.iter().map(Value::render))?;
    }
    w.into_inner().map_err(|e| e.into_error())
}

pub fn to_json(table: &Table, provenance: Option<&str>) -> io::Result<Vec<u8>> {
    let mut meta = Map::new();
    for (k, v) in &table.meta {
        meta.insert(k.clone(), v.to_json()?);
    }
    if let Some(p) = provenance {
        meta.insert("provenance".into(), p.into());
    }
    let mut rows = Vec::with_capacity(table.rows.len());
    for row in &table.rows {
        let mut obj = Map::new();
        for (c, v) in table.columns.iter().zip(row) {
            obj.insert(c.clone(), v.to_json()?);
        }
        rows.push(serde_json::Value::Object(obj));
    }
    let mut doc = Map::new();
    doc.insert("meta".into(), meta.into());
    doc.insert("rows".into(), rows.into());
    let mut out = serde_json::to_vec_pretty(&serde_json::Value::Object(doc))?;
    out.push(b'\n');
    Ok(out)
}

pub fn render(table: &Table, spec: &OutputSpec) -> io::Result<Vec<u8>> {
    let provenance = spec.provenance.as_deref();
    match spec.format {
        Format::Csv => to_csv(table, provenance),
        Format::Json => to_json(table, provenance),
    }
}

pub fn write(table: &Table, spec: &OutputSpec) -> io::Result<()> {
    let bytes = render(table, spec)?;
    match &spec.path {
        Some(p) => fs::write(p, bytes),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(&bytes)?;
            out.flush()
        }
    }
}
