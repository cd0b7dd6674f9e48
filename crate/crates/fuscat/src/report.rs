//! Deterministic report assembly and rendering.
//!
//! A [`Report`] is built once per command: ordered metadata, one or more
//! titled tables of exact strings, and a structured JSON payload.  The
//! three renderings (aligned table, CSV, JSON) all contain byte-identical
//! exact values; floating-point approximations only ever appear in opt-in
//! `"approx"` JSON fields.

use serde_json::Value;

/// One titled grid of cells; every cell is already rendered exactly.
#[derive(Clone, Debug)]
pub struct Table {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

/// Output format selection.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Table,
    Csv,
    Json,
}

/// A finished command report.
#[derive(Clone, Debug)]
pub struct Report {
    /// Ordered `key: value` header lines.
    pub meta: Vec<(String, String)>,
    pub tables: Vec<Table>,
    /// Structured payload; contains the same exact strings as the tables.
    pub json: Value,
    /// False when any verification in the run failed.
    pub passed: bool,
    /// Process exit code to use (0 on success).
    pub exit_code: i32,
}

impl Report {
    /// Render in the requested format (always ends with a newline).
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Table => self.render_table(),
            OutputFormat::Csv => self.render_csv(),
            OutputFormat::Json => {
                let mut out = serde_json::to_string_pretty(&self.json)
                    .expect("report JSON is always serializable");
                out.push('\n');
                out
            }
        }
    }

    fn render_table(&self) -> String {
        let mut out = String::new();
        for (key, value) in &self.meta {
            out.push_str(key);
            out.push_str(": ");
            out.push_str(value);
            out.push('\n');
        }
        for table in &self.tables {
            out.push('\n');
            out.push_str(&table.title);
            out.push('\n');
            let mut widths: Vec<usize> =
                table.columns.iter().map(String::len).collect();
            for row in &table.rows {
                for (i, cell) in row.iter().enumerate() {
                    widths[i] = widths[i].max(cell.len());
                }
            }
            let render_row = |cells: &[String], out: &mut String| {
                for (i, cell) in cells.iter().enumerate() {
                    if i > 0 {
                        out.push_str("  ");
                    }
                    out.push_str(cell);
                    if i + 1 < cells.len() {
                        for _ in cell.len()..widths[i] {
                            out.push(' ');
                        }
                    }
                }
                out.push('\n');
            };
            render_row(&table.columns, &mut out);
            let rule_width = widths.iter().sum::<usize>() + 2 * (widths.len() - 1);
            out.push_str(&"-".repeat(rule_width));
            out.push('\n');
            for row in &table.rows {
                render_row(row, &mut out);
            }
        }
        out
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        for (key, value) in &self.meta {
            out.push_str(&format!("{},{}\n", csv_cell(key), csv_cell(value)));
        }
        for table in &self.tables {
            out.push('\n');
            out.push_str(&format!("# {}\n", table.title));
            out.push_str(
                &table.columns.iter().map(|c| csv_cell(c)).collect::<Vec<_>>().join(","),
            );
            out.push('\n');
            for row in &table.rows {
                out.push_str(&row.iter().map(|c| csv_cell(c)).collect::<Vec<_>>().join(","));
                out.push('\n');
            }
        }
        out
    }
}

/// Quote a CSV cell only when it needs quoting.
fn csv_cell(cell: &str) -> String {
    if cell.contains(',') || cell.contains('"') || cell.contains('\n') {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

/// Round a float to 12 decimal digits for the optional approx fields.
pub fn approx12(x: f64) -> f64 {
    (x * 1e12).round() / 1e12
}
