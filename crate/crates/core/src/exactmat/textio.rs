//! Matrix text format.
//!
//! ```text
//! 2 3
//! 1 -2 1/2
//! 0 3/4 -5
//! ```
//!
//! The first line holds the row and column counts; each following line is one
//! row of whitespace-separated entries. Blank lines and `#` comments between
//! lines are skipped, so several matrices can be concatenated with blank-line
//! separators. The JSON form `{"rows":r,"cols":c,"entries":[["p/q",..],..]}`
//! is accepted wherever the text form is.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::matrix::Matrix;
use super::rational::{parse_rational_at, Rational};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<String>>,
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.rows(), self.cols())?;
        if self.cols() == 0 {
            return Ok(());
        }
        for i in 0..self.rows() {
            writeln!(f)?;
            let row: Vec<String> = self.row(i).iter().map(Rational::to_string).collect();
            write!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn to_json(&self) -> serde_json::Value {
        let entries = (0..self.rows())
            .map(|i| self.row(i).iter().map(Rational::to_string).collect())
            .collect();
        serde_json::to_value(MatrixJson {
            rows: self.rows(),
            cols: self.cols(),
            entries,
        })
        .expect("matrix json")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Matrix> {
        let raw: MatrixJson = serde_json::from_value(value.clone())
            .map_err(|e| Error::parse(e.line(), format!("matrix json: {e}")))?;
        if raw.entries.len() != raw.rows {
            return Err(Error::parse(
                1,
                format!("expected {} rows, found {}", raw.rows, raw.entries.len()),
            ));
        }
        let mut data = Vec::with_capacity(raw.rows * raw.cols);
        for (i, row) in raw.entries.iter().enumerate() {
            if row.len() != raw.cols {
                return Err(Error::parse(
                    1,
                    format!("row {} has {} entries, expected {}", i + 1, row.len(), raw.cols),
                ));
            }
            for tok in row {
                data.push(parse_rational_at(tok, 1)?);
            }
        }
        Matrix::from_vec(raw.rows, raw.cols, data)
    }
}

/// Meaningful lines of a text document with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_count(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("bad {what} count '{tok}'")))
}

fn read_one<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>) -> Result<Option<Matrix>> {
    let Some((hline, header)) = lines.next() else {
        return Ok(None);
    };
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(Error::parse(hline, "header must be 'rows cols'"));
    }
    let rows = parse_count(toks[0], hline, "row")?;
    let cols = parse_count(toks[1], hline, "column")?;
    let mut data = Vec::with_capacity(rows * cols);
    if cols > 0 {
        for r in 0..rows {
            let (ln, text) = lines
                .next()
                .ok_or_else(|| Error::parse(hline, format!("expected {rows} rows, found {r}")))?;
            let entries: Vec<&str> = text.split_whitespace().collect();
            if entries.len() != cols {
                return Err(Error::parse(
                    ln,
                    format!("expected {cols} entries, found {}", entries.len()),
                ));
            }
            for tok in entries {
                data.push(parse_rational_at(tok, ln)?);
            }
        }
    }
    Matrix::from_vec(rows, cols, data).map(Some)
}

fn looks_like_json(text: &str) -> bool {
    matches!(text.trim_start().as_bytes().first(), Some(b'{') | Some(b'['))
}

pub(crate) fn parse_json_value(text: &str) -> Result<serde_json::Value> {
    serde_json::from_str(text).map_err(|e| Error::parse(e.line(), format!("json: {e}")))
}

/// Parses exactly `count` matrices, either concatenated text blocks or a JSON
/// array of matrix objects.
pub fn parse_matrices(text: &str, count: usize) -> Result<Vec<Matrix>> {
    if looks_like_json(text) {
        let value = parse_json_value(text)?;
        let items = match &value {
            serde_json::Value::Array(items) => items.clone(),
            obj @ serde_json::Value::Object(_) => vec![obj.clone()],
            _ => return Err(Error::parse(1, "expected a matrix object or array")),
        };
        if items.len() != count {
            return Err(Error::parse(
                1,
                format!("expected {count} matrices, found {}", items.len()),
            ));
        }
        return items.iter().map(Matrix::from_json).collect();
    }
    let mut lines = content_lines(text).peekable();
    let mut out = Vec::with_capacity(count);
    for k in 0..count {
        match read_one(&mut lines)? {
            Some(m) => out.push(m),
            None => {
                return Err(Error::parse(
                    text.lines().count().max(1),
                    format!("expected {count} matrices, found {k}"),
                ))
            }
        }
    }
    if let Some((ln, _)) = lines.peek() {
        return Err(Error::parse(*ln, "trailing content after matrix data"));
    }
    Ok(out)
}

impl FromStr for Matrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Matrix> {
        Ok(parse_matrices(s, 1)?.remove(0))
    }
}
