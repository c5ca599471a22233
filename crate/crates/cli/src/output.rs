use std::io::{self, Write};

use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// One JSON object per line.
    Jsonl,
    /// Header plus comma-separated rows; parts joined by ';'.
    Csv,
    /// Space-separated columns, no header.
    Table,
}

pub enum Value {
    Int(u128),
    Text(String),
    Parts(Vec<u64>),
    Bool(bool),
}

impl From<u64> for Value {
    fn from(v: u64) -> Self {
        Value::Int(v.into())
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Int(v as u128)
    }
}

impl From<u128> for Value {
    fn from(v: u128) -> Self {
        Value::Int(v)
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

impl From<String> for Value {
    fn from(v: String) -> Self {
        Value::Text(v)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Text(v.to_string())
    }
}

impl From<&[u64]> for Value {
    fn from(v: &[u64]) -> Self {
        Value::Parts(v.to_vec())
    }
}

/// Named columns in output order.
#[derive(Default)]
pub struct Row(Vec<(&'static str, Value)>);

impl Row {
    pub fn new() -> Self {
        Row::default()
    }

    pub fn with(mut self, key: &'static str, value: impl Into<Value>) -> Self {
        self.0.push((key, value.into()));
        self
    }
}

fn joined(parts: &[u64], sep: &str) -> String {
    parts
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn csv_field(s: String) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s
    }
}

pub struct Sink<W: Write> {
    format: Format,
    out: W,
    header_written: bool,
}

impl<W: Write> Sink<W> {
    pub fn new(format: Format, out: W) -> Self {
        Sink {
            format,
            out,
            header_written: false,
        }
    }

    pub fn emit(&mut self, row: Row) -> io::Result<()> {
        let line = match self.format {
            Format::Jsonl => {
                let fields: Vec<String> = row
                    .0
                    .iter()
                    .map(|(k, v)| {
                        let v = match v {
                            Value::Int(i) => i.to_string(),
                            Value::Text(s) => serde_json::to_string(s).expect("strings serialize"),
                            Value::Parts(p) => format!("[{}]", joined(p, ",")),
                            Value::Bool(b) => b.to_string(),
                        };
                        format!("\"{k}\":{v}")
                    })
                    .collect();
                format!("{{{}}}", fields.join(","))
            }
            Format::Csv => {
                if !self.header_written {
                    let header: Vec<&str> = row.0.iter().map(|(k, _)| *k).collect();
                    writeln!(self.out, "{}", header.join(","))?;
                    self.header_written = true;
                }
                let cells: Vec<String> = row
                    .0
                    .into_iter()
                    .map(|(_, v)| match v {
                        Value::Int(i) => i.to_string(),
                        Value::Text(s) => csv_field(s),
                        Value::Parts(p) => joined(&p, ";"),
                        Value::Bool(b) => b.to_string(),
                    })
                    .collect();
                cells.join(",")
            }
            Format::Table => {
                let cells: Vec<String> = row
                    .0
                    .into_iter()
                    .map(|(_, v)| match v {
                        Value::Int(i) => i.to_string(),
                        Value::Text(s) => s,
                        Value::Parts(p) => joined(&p, ","),
                        Value::Bool(b) => b.to_string(),
                    })
                    .collect();
                cells.join(" ")
            }
        };
        writeln!(self.out, "{line}")
    }

    pub fn finish(mut self) -> io::Result<()> {
        self.out.flush()
    }
}
