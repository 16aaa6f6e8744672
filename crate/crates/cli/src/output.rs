use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::{json, Value};

use crate::args::Format;

/// Rows of string cells with a header, written as CSV.
#[derive(Debug, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Table {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> io::Result<String> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("cells are UTF-8"))
    }
}

/// What a command produced, in every format it supports.
#[derive(Debug)]
pub struct Output {
    pub lines: Vec<String>,
    pub table: Table,
    pub data: Value,
    /// False when a verification inside the command failed.
    pub passed: bool,
}

#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub command: &'static str,
    pub parameters: Value,
    pub version: &'static str,
    pub workers: usize,
    pub duration_ms: u128,
}

fn manifest_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".manifest.json");
    PathBuf::from(name)
}

/// Writes the payload (stdout or `out`) and the manifest.
pub fn emit(
    output: &Output,
    format: Format,
    manifest: &RunManifest,
    out: Option<&Path>,
) -> io::Result<()> {
    let payload = match format {
        Format::Text => {
            let mut s = output.lines.join("\n");
            s.push('\n');
            s
        }
        Format::Csv => output.table.to_csv()?,
        Format::Json => {
            let doc = json!({ "manifest": manifest, "data": output.data });
            let mut s = serde_json::to_string_pretty(&doc).map_err(io::Error::other)?;
            s.push('\n');
            s
        }
    };
    match out {
        Some(path) => {
            fs::write(path, payload)?;
            if format != Format::Json {
                let m = serde_json::to_string_pretty(manifest).map_err(io::Error::other)?;
                fs::write(manifest_path(path), m + "\n")?;
            }
        }
        None => {
            io::stdout().lock().write_all(payload.as_bytes())?;
            if format != Format::Json {
                let m = serde_json::to_string(manifest).map_err(io::Error::other)?;
                eprintln!("manifest: {m}");
            }
        }
    }
    Ok(())
}
