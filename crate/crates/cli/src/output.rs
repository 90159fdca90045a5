//! Deterministic output helpers: a %g-style 9-significant-digit float
//! formatter, and CSV/JSON emission for flat rows.

use std::io::Write;

/// Format with 9 significant digits, trimming trailing zeros, switching to
/// scientific notation outside [1e-4, 1e9). Identical invocations produce
/// identical bytes.
pub fn fmt_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exp: i32 = format!("{x:e}")
        .split('e')
        .nth(1)
        .expect("exponential form")
        .parse()
        .expect("exponent");
    if !(-4..9).contains(&exp) {
        let s = format!("{x:.8e}");
        let (mantissa, e) = s.split_once('e').expect("exponential form");
        let mantissa = mantissa.trim_end_matches('0').trim_end_matches('.');
        format!("{mantissa}e{e}")
    } else {
        let decimals = (8 - exp).max(0) as usize;
        let s = format!("{x:.decimals$}");
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// A flat table: header plus stringly-typed rows (numbers already passed
/// through [`fmt_sig`]).
pub struct Rows {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Rows {
    pub fn new(header: Vec<&'static str>) -> Self {
        Rows { header, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn emit(&self, format: OutputFormat, out: &mut impl Write) -> std::io::Result<()> {
        match format {
            OutputFormat::Csv => {
                writeln!(out, "{}", self.header.join(","))?;
                for row in &self.rows {
                    writeln!(out, "{}", row.join(","))?;
                }
            }
            OutputFormat::Json => {
                let objects: Vec<serde_json::Value> = self
                    .rows
                    .iter()
                    .map(|row| {
                        let map: serde_json::Map<String, serde_json::Value> = self
                            .header
                            .iter()
                            .zip(row)
                            .map(|(k, v)| (k.to_string(), json_value(v)))
                            .collect();
                        serde_json::Value::Object(map)
                    })
                    .collect();
                writeln!(out, "{}", serde_json::to_string_pretty(&objects)?)?;
            }
        }
        Ok(())
    }
}

/// Numbers stay numbers in JSON; everything else is a string, empty
/// fields become null.
fn json_value(field: &str) -> serde_json::Value {
    if field.is_empty() {
        return serde_json::Value::Null;
    }
    if field == "true" || field == "false" {
        return serde_json::Value::Bool(field == "true");
    }
    if let Ok(x) = field.parse::<f64>() {
        if let Some(n) = serde_json::Number::from_f64(x) {
            // integers that arrived as u32 fields keep their integer shape
            if field.chars().all(|c| c.is_ascii_digit() || c == '-') {
                if let Ok(i) = field.parse::<i64>() {
                    return serde_json::Value::Number(i.into());
                }
            }
            return serde_json::Value::Number(n);
        }
    }
    serde_json::Value::String(field.to_string())
}

/// Commas inside free-text fields would break the single-character
/// delimiter; reports replace them.
pub fn csv_safe(text: &str) -> String {
    text.replace(',', ";")
}
