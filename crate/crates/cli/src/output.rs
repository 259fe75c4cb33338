//! Tables and the CSV / SVG emitters.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{CliError, Result};

/// Rectangular numeric table; rows are kept in evaluation order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new(columns: Vec<String>) -> Self {
        Table {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<f64>) -> Result<()> {
        if row.len() != self.columns.len() {
            return Err(CliError::invalid(format!(
                "row has {} values for {} columns",
                row.len(),
                self.columns.len()
            )));
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }
}

/// 12 significant digits in scientific notation.
pub fn format_cell(x: f64) -> String {
    // Drops the sign of negative zero.
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.11e}")
}

pub fn csv_string(table: &Table) -> Result<String> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let csv_err = |e: csv::Error| CliError::Io(format!("csv: {e}"));
    w.write_record(&table.columns).map_err(csv_err)?;
    for row in &table.rows {
        w.write_record(row.iter().map(|&x| format_cell(x)))
            .map_err(csv_err)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Io(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| CliError::Io(e.to_string()))
}

pub fn parse_csv(text: &str) -> Result<Table> {
    let mut r = csv::ReaderBuilder::new().from_reader(text.as_bytes());
    let bad = |e: csv::Error| CliError::invalid(format!("csv: {e}"));
    let columns = r
        .headers()
        .map_err(bad)?
        .iter()
        .map(str::to_string)
        .collect();
    let mut table = Table::new(columns);
    for record in r.records() {
        let row = record
            .map_err(bad)?
            .iter()
            .map(|cell| {
                cell.parse::<f64>()
                    .map_err(|_| CliError::invalid(format!("csv: bad number `{cell}`")))
            })
            .collect::<Result<Vec<f64>>>()?;
        table.push(row)?;
    }
    Ok(table)
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| CliError::io(path, e))
}

pub fn emit_csv(table: &Table, path: &Path) -> Result<()> {
    write_text(path, &csv_string(table)?)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SvgChart {
    pub svg: String,
    /// Points dropped for being non-finite or non-positive on a log axis.
    pub skipped: usize,
}

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 420.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 20.0;
const TOP: f64 = 20.0;
const BOTTOM: f64 = 55.0;
const TICKS: usize = 5;

struct Axis {
    lo: f64,
    hi: f64,
    log: bool,
}

impl Axis {
    fn fit(values: &[f64], log: bool) -> Axis {
        let (lo, hi) = values
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
                let v = if log { v.log10() } else { v };
                (lo.min(v), hi.max(v))
            });
        let (lo, hi) = match (lo.is_finite(), lo < hi) {
            (false, _) => (0.0, 1.0),
            (true, true) => (lo, hi),
            (true, false) => (lo - 0.5, lo + 0.5),
        };
        Axis { lo, hi, log }
    }

    /// Position in [0, 1] along the axis.
    fn frac(&self, v: f64) -> f64 {
        let v = if self.log { v.log10() } else { v };
        (v - self.lo) / (self.hi - self.lo)
    }

    fn tick_label(&self, i: usize) -> String {
        let v = self.lo + (self.hi - self.lo) * i as f64 / (TICKS - 1) as f64;
        if self.log {
            format!("1e{v:.2}")
        } else {
            format!("{v:.4}")
        }
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// Single-series line chart of `y_col` against `x_col`.
pub fn svg_line_chart(
    table: &Table,
    x_col: &str,
    y_col: &str,
    log_x: bool,
    log_y: bool,
) -> Result<SvgChart> {
    let xi = table
        .column(x_col)
        .ok_or_else(|| CliError::invalid(format!("no column `{x_col}`")))?;
    let yi = table
        .column(y_col)
        .ok_or_else(|| CliError::invalid(format!("no column `{y_col}`")))?;
    let usable = |v: f64, log: bool| v.is_finite() && (!log || v > 0.0);
    let points: Vec<(f64, f64)> = table
        .rows
        .iter()
        .map(|r| (r[xi], r[yi]))
        .filter(|&(x, y)| usable(x, log_x) && usable(y, log_y))
        .collect();
    let skipped = table.rows.len() - points.len();
    let xs: Vec<f64> = points.iter().map(|p| p.0).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1).collect();
    let (ax, ay) = (Axis::fit(&xs, log_x), Axis::fit(&ys, log_y));
    let (pw, ph) = (WIDTH - LEFT - RIGHT, HEIGHT - TOP - BOTTOM);
    let px = |x: f64| LEFT + ax.frac(x) * pw;
    let py = |y: f64| TOP + (1.0 - ay.frac(y)) * ph;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="11">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let (x0, y0, x1, y1) = (LEFT, TOP + ph, LEFT + pw, TOP);
    let _ = writeln!(
        s,
        r#"<path d="M{x0} {y1} L{x0} {y0} L{x1} {y0}" fill="none" stroke="black"/>"#
    );
    for i in 0..TICKS {
        let f = i as f64 / (TICKS - 1) as f64;
        let (tx, ty) = (LEFT + f * pw, TOP + (1.0 - f) * ph);
        let _ = writeln!(
            s,
            r#"<line x1="{tx:.2}" y1="{y0}" x2="{tx:.2}" y2="{:.2}" stroke="black"/>"#,
            y0 + 4.0
        );
        let _ = writeln!(
            s,
            r#"<text x="{tx:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            y0 + 17.0,
            ax.tick_label(i)
        );
        let _ = writeln!(
            s,
            r#"<line x1="{:.2}" y1="{ty:.2}" x2="{x0}" y2="{ty:.2}" stroke="black"/>"#,
            x0 - 4.0
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#,
            x0 - 7.0,
            ty + 4.0,
            ay.tick_label(i)
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
        LEFT + 0.5 * pw,
        HEIGHT - 12.0,
        escape(x_col)
    );
    let _ = writeln!(
        s,
        r#"<text transform="translate(16 {:.2}) rotate(-90)" text-anchor="middle">{}</text>"#,
        TOP + 0.5 * ph,
        escape(y_col)
    );
    if !points.is_empty() {
        let coords: Vec<String> = points
            .iter()
            .map(|&(x, y)| format!("{:.2},{:.2}", px(x), py(y)))
            .collect();
        let _ = writeln!(
            s,
            r#"<polyline points="{}" fill="none" stroke="steelblue" stroke-width="1.5"/>"#,
            coords.join(" ")
        );
    }
    s.push_str("</svg>\n");
    Ok(SvgChart { svg: s, skipped })
}

/// Human-readable value for stdout: six significant digits.
pub fn format_value(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    if x.fract() == 0.0 && x.abs() < 1e6 {
        return format!("{x:.0}");
    }
    let mag = x.abs().log10().floor();
    if (-4.0..6.0).contains(&mag) {
        let decimals = (5.0 - mag).max(0.0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.5e}")
    }
}
