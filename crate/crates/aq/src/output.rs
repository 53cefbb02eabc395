//! Table assembly and serialization. Numbers render as `%.15g` in CSV
//! and as plain JSON numbers in JSON; non-finite values always become
//! the strings "inf"/"-inf"/"nan", never bare binary NaN.

use std::fs::File;
use std::io::{self, BufWriter, Write};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy)]
pub enum Cell {
    Int(u64),
    Real(f64),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Real(v) => fmt_g(*v),
        }
    }

    fn json(&self) -> serde_json::Value {
        match self {
            Cell::Int(v) => serde_json::Value::from(*v),
            Cell::Real(v) => match serde_json::Number::from_f64(*v) {
                Some(n) => serde_json::Value::Number(n),
                None => serde_json::Value::String(fmt_g(*v)),
            },
        }
    }
}

/// Format like printf `%.15g`: 15 significant digits, fixed or
/// scientific by magnitude, trailing zeros trimmed.
pub fn fmt_g(v: f64) -> String {
    if v.is_nan() {
        return "nan".to_string();
    }
    if v.is_infinite() {
        return if v < 0.0 { "-inf" } else { "inf" }.to_string();
    }
    if v == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{:.14e}", v);
    let (_, exp) = sci.split_once('e').expect("always has an exponent");
    let exp: i32 = exp.parse().expect("valid exponent");
    if (-4..15).contains(&exp) {
        let decimals = (14 - exp).max(0) as usize;
        trim_zeros(format!("{v:.decimals$}"))
    } else {
        let (mant, _) = sci.split_once('e').expect("always has an exponent");
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{}{:02}", trim_zeros(mant.to_string()), sign, exp.abs())
    }
}

fn trim_zeros(mut s: String) -> String {
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    s
}

/// Write a table of rows to `out` (or stdout) in the chosen format.
pub fn write_table(
    columns: &[&str],
    rows: &[Vec<Cell>],
    format: Format,
    out: Option<&std::path::Path>,
) -> io::Result<()> {
    let mut writer: Box<dyn Write> = match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    match format {
        Format::Csv => {
            writeln!(writer, "{}", columns.join(","))?;
            for row in rows {
                let line: Vec<String> = row.iter().map(Cell::csv).collect();
                writeln!(writer, "{}", line.join(","))?;
            }
        }
        Format::Json => {
            let array: Vec<serde_json::Value> = rows
                .iter()
                .map(|row| {
                    let object: serde_json::Map<String, serde_json::Value> = columns
                        .iter()
                        .zip(row.iter())
                        .map(|(name, cell)| (name.to_string(), cell.json()))
                        .collect();
                    serde_json::Value::Object(object)
                })
                .collect();
            serde_json::to_writer_pretty(&mut writer, &array)?;
            writeln!(writer)?;
        }
    }
    writer.flush()
}
