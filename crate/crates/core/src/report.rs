//! Machine-readable output: serde helpers and table writers.

use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};

/// Serializes a rational as its `p/q` string so JSON stays exact.
pub mod rational_str {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::algebra::{format_rational, parse_rational, Rational};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// Output format of the batch driver.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Table => "txt",
        }
    }
}

/// Rows that can be written as CSV or as an aligned text table.
pub trait Tabular {
    fn header() -> Vec<&'static str>;
    fn row(&self) -> Vec<String>;
}

pub fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value).map_err(|e| Error::Parse(e.to_string()))
}

pub fn to_csv<T: Tabular>(rows: &[T]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Parse(e.to_string());
    w.write_record(T::header()).map_err(io)?;
    for r in rows {
        w.write_record(r.row()).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
}

pub fn to_table<T: Tabular>(rows: &[T]) -> String {
    let header: Vec<String> = T::header().into_iter().map(String::from).collect();
    let body: Vec<Vec<String>> = rows.iter().map(|r| r.row()).collect();
    let mut width: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in &body {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&width)
            .map(|(c, w)| format!("{c:<w$}", w = *w))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = line(&header);
    out.push('\n');
    for r in &body {
        out.push_str(&line(r));
        out.push('\n');
    }
    out
}

/// Renders rows in the requested format.
pub fn render<T: Tabular + Serialize>(rows: &[T], format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(rows),
        Format::Csv => to_csv(rows),
        Format::Table => Ok(to_table(rows)),
    }
}

/// Writes `contents` to `path`, creating parent directories.
pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    let io = |e: std::io::Error| Error::InvalidParams(format!("{}: {e}", path.display()));
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            std::fs::create_dir_all(dir).map_err(io)?;
        }
    }
    let mut f = std::fs::File::create(path).map_err(io)?;
    f.write_all(contents.as_bytes()).map_err(io)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize)]
    struct Row {
        a: u32,
        b: String,
    }

    impl Tabular for Row {
        fn header() -> Vec<&'static str> {
            vec!["a", "b"]
        }
        fn row(&self) -> Vec<String> {
            vec![self.a.to_string(), self.b.clone()]
        }
    }

    #[test]
    fn formats() {
        let rows = vec![
            Row {
                a: 1,
                b: "x,y".into(),
            },
            Row {
                a: 22,
                b: "z".into(),
            },
        ];
        assert_eq!(to_csv(&rows).unwrap(), "a,b\n1,\"x,y\"\n22,z\n");
        assert_eq!(to_table(&rows), "a   b\n1   x,y\n22  z\n");
        assert!(to_json(&rows).unwrap().contains("\"b\": \"x,y\""));
    }
}
