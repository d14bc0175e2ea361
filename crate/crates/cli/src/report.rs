//! Output assembly: one report per command, rendered as JSON, CSV or a table.

use std::io::{self, Write};

use clap::ValueEnum;
use hermsym::verify::{Check, Status};
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Table,
}

#[derive(Debug, Serialize)]
pub struct Meta {
    pub command: &'static str,
    pub model: String,
    pub k: Option<u32>,
    pub convention: Option<String>,
    pub version: &'static str,
    pub seed: u64,
    /// Coordinate system of every weight in `data`.
    pub basis: &'static str,
}

impl Meta {
    pub fn new(command: &'static str, model: String, seed: u64) -> Self {
        Self {
            command,
            model,
            k: None,
            convention: None,
            version: env!("CARGO_PKG_VERSION"),
            seed,
            basis: "epsilon coordinates of the ambient root system",
        }
    }
}

/// Rows for CSV and table output.
#[derive(Debug, Default)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(headers: impl IntoIterator<Item = S>) -> Self {
        Self {
            headers: headers.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }
}

#[derive(Debug)]
pub struct Report {
    pub meta: Meta,
    pub data: Value,
    pub checks: Vec<Check>,
    pub table: Table,
    /// Extra lines shown under the table (table format only).
    pub footer: Vec<String>,
    /// The table already lists every check.
    pub tabulated_checks: bool,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    meta: &'a Meta,
    data: &'a Value,
    checks: &'a [Check],
}

impl Report {
    pub fn checks_in_table(mut self) -> Self {
        self.tabulated_checks = true;
        self
    }

    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn render(&self, format: Format, out: &mut impl Write) -> io::Result<()> {
        match format {
            Format::Json => {
                let doc = JsonReport {
                    meta: &self.meta,
                    data: &self.data,
                    checks: &self.checks,
                };
                serde_json::to_writer_pretty(&mut *out, &doc)?;
                writeln!(out)
            }
            Format::Csv => {
                let mut w = csv::WriterBuilder::new()
                    .terminator(csv::Terminator::Any(b'\n'))
                    .from_writer(out);
                w.write_record(&self.table.headers)?;
                for row in &self.table.rows {
                    w.write_record(row)?;
                }
                w.flush()
            }
            Format::Table => self.render_table(out),
        }
    }

    fn render_table(&self, out: &mut impl Write) -> io::Result<()> {
        let m = &self.meta;
        write!(out, "{} {}", m.command, m.model)?;
        if let Some(k) = m.k {
            write!(out, "  k = {k}")?;
        }
        if let Some(c) = &m.convention {
            write!(out, "  convention = {c}")?;
        }
        writeln!(out)?;
        let t = &self.table;
        if !t.headers.is_empty() {
            let mut widths: Vec<usize> = t.headers.iter().map(|h| h.chars().count()).collect();
            for row in &t.rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.chars().count());
                }
            }
            let line = |cells: &[String]| {
                cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, &w)| format!("{c:<w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            };
            writeln!(out, "{}", line(&t.headers))?;
            for row in &t.rows {
                writeln!(out, "{}", line(row))?;
            }
        }
        for f in &self.footer {
            writeln!(out, "{f}")?;
        }
        for c in self.checks.iter().filter(|_| !self.tabulated_checks) {
            let tag = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skip => "skip",
            };
            writeln!(out, "[{tag}] {}: {}", c.name, c.detail)?;
        }
        Ok(())
    }
}
