//! Report emission: aligned text tables for humans, stable pretty JSON for
//! machines, and CSV rows for spreadsheets. Every emitter is deterministic,
//! so identical invocations produce byte-identical output.

use std::fs;
use std::path::Path;

use anyhow::Context;
use clap::ValueEnum;
use serde::Serialize;

/// Output format selected by `--format`.
#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    /// Human-readable summary and aligned tables.
    Pretty,
    /// Pretty-printed JSON document.
    Json,
    /// CSV rows (tabular payloads only; scalar context is dropped).
    Csv,
}

/// Serializes a report as pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> anyhow::Result<String> {
    Ok(format!("{}\n", serde_json::to_string_pretty(value)?))
}

/// Writes an already-rendered JSON document to `path`.
pub fn write_json_file(path: &Path, json: &str) -> anyhow::Result<()> {
    fs::write(path, json).with_context(|| format!("writing {}", path.display()))
}

/// Renders CSV records (first record is the header) with standard quoting.
pub fn to_csv(records: &[Vec<String>]) -> anyhow::Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for record in records {
        writer.write_record(record)?;
    }
    let bytes = writer.into_inner().context("flushing csv buffer")?;
    String::from_utf8(bytes).context("csv output is utf-8")
}

/// Renders rows as left-aligned columns separated by two spaces, with a
/// header line. Column widths fit the longest cell.
pub fn render_table(headers: &[String], rows: &[Vec<String>]) -> String {
    let columns = headers.len();
    let mut widths: Vec<usize> = headers.iter().map(String::len).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let emit = |cells: &[String], out: &mut String| {
        for (i, cell) in cells.iter().enumerate() {
            out.push_str("  ");
            out.push_str(cell);
            if i + 1 < columns {
                for _ in cell.len()..widths[i] {
                    out.push(' ');
                }
            }
        }
        out.push('\n');
    };
    emit(headers, &mut out);
    for row in rows {
        emit(row, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quotes_fields_with_commas() {
        let records = vec![
            vec!["partition".to_string(), "value".to_string()],
            vec!["[25,2]".to_string(), "-1".to_string()],
        ];
        let rendered = to_csv(&records).unwrap();
        assert_eq!(rendered, "partition,value\n\"[25,2]\",-1\n");
    }

    #[test]
    fn table_aligns_columns() {
        let rendered = render_table(
            &["a".to_string(), "bc".to_string()],
            &[vec!["xxx".to_string(), "y".to_string()]],
        );
        assert_eq!(rendered, "  a    bc\n  xxx  y\n");
    }
}
