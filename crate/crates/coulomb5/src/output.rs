//! CSV and JSON writers.
//!
//! CSV files start with one `#` line echoing the configuration as
//! `key=value` pairs, followed by the header row. The JSON mirror is
//! `{"metadata": {...}, "columns": [...], "rows": [[...], ...]}`. Floats are
//! written with the shortest representation that round-trips, so files are
//! reproducible byte for byte.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use serde::Serialize;

use crate::config::Format;
use crate::suites::VerificationReport;
use crate::tables::{Cell, Table};
use crate::Error;

/// Shortest round-trip text of a float; exponent form outside
/// `[1e-4, 1e15)`.
pub fn format_float(v: f64) -> String {
    if v.is_nan() {
        return "NaN".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let a = v.abs();
    if a == 0.0 || (1e-4..1e15).contains(&a) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

fn cell_text(c: &Cell) -> String {
    match c {
        Cell::Num(v) => format_float(*v),
        Cell::Int(v) => v.to_string(),
        Cell::Bool(v) => v.to_string(),
        Cell::Text(s) => s.clone(),
        Cell::Empty => String::new(),
    }
}

/// Write `table` in CSV form.
pub fn write_csv<W: Write>(mut w: W, metadata: &[(String, String)], table: &Table) -> Result<(), Error> {
    let meta: Vec<String> = metadata.iter().map(|(k, v)| format!("{k}={v}")).collect();
    writeln!(w, "# {}", meta.join(" "))?;
    let mut csv = csv::Writer::from_writer(w);
    csv.write_record(&table.columns)?;
    for row in &table.rows {
        csv.write_record(row.iter().map(cell_text))?;
    }
    csv.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct JsonTable<'a> {
    metadata: serde_json::Map<String, serde_json::Value>,
    columns: &'a [&'static str],
    rows: &'a [Vec<Cell>],
}

/// Write `table` in the JSON mirror form.
pub fn write_json<W: Write>(mut w: W, metadata: &[(String, String)], table: &Table) -> Result<(), Error> {
    let metadata = metadata
        .iter()
        .map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone())))
        .collect();
    let doc = JsonTable {
        metadata,
        columns: &table.columns,
        rows: &table.rows,
    };
    serde_json::to_writer_pretty(&mut w, &doc)?;
    writeln!(w)?;
    Ok(())
}

/// Write `table` to `out`, or to standard output when `out` is `None`.
pub fn emit(format: Format, out: Option<&Path>, metadata: &[(String, String)], table: &Table) -> Result<(), Error> {
    let sink: Box<dyn Write> = match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(io::stdout().lock()),
    };
    match format {
        Format::Csv => write_csv(sink, metadata, table),
        Format::Json => write_json(sink, metadata, table),
    }
}

pub const REPORT_COLUMNS: [&str; 7] = [
    "suite",
    "check",
    "samples",
    "max_residual",
    "tolerance",
    "pass",
    "error",
];

/// The verification reports as a table; wall-times are left out.
pub fn report_table(reports: &[VerificationReport]) -> Table {
    let mut t = Table::new(&REPORT_COLUMNS);
    for r in reports {
        for c in &r.checks {
            t.rows.push(vec![
                Cell::Text(r.suite.into()),
                Cell::Text(c.name.into()),
                Cell::Int(c.samples as i64),
                Cell::Num(c.max_residual),
                Cell::Num(c.tolerance),
                Cell::Bool(c.pass),
                c.error.clone().map_or(Cell::Empty, Cell::Text),
            ]);
        }
    }
    t
}
