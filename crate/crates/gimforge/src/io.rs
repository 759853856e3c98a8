//! Matrix file formats.
//!
//! Text: first line `n`, then `n` lines of `n` space-separated integers; lines
//! starting with `#` are comments. JSON: `{"matrix": [[...], ...]}`.

use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::gim::Gim;

#[derive(Deserialize)]
struct JsonMatrix {
    matrix: Vec<Vec<serde_json::Value>>,
}

/// Parses either format, detected by a leading `{`. Does not validate the
/// intersection-matrix axioms.
pub fn parse_matrix(src: &str) -> Result<Vec<Vec<i64>>> {
    if src.trim_start().starts_with('{') {
        parse_json(src)
    } else {
        parse_text(src)
    }
}

pub fn read_matrix(path: impl AsRef<Path>) -> Result<Vec<Vec<i64>>> {
    parse_matrix(&std::fs::read_to_string(path)?)
}

fn parse_int(tok: &str) -> Result<i64> {
    tok.parse::<i64>().map_err(|_| Error::Parse(format!("non-integer token {tok:?}")))
}

fn parse_text(src: &str) -> Result<Vec<Vec<i64>>> {
    let mut lines = src
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| Error::Parse("missing size line".into()))?;
    let n = usize::try_from(parse_int(header)?).map_err(|_| Error::Parse("negative size".into()))?;
    if n == 0 {
        return Err(Error::Parse("size must be positive".into()));
    }
    let mut rows = Vec::with_capacity(n);
    for r in 0..n {
        let line = lines.next().ok_or_else(|| Error::Parse(format!("missing row {}", r + 1)))?;
        let row = line.split_whitespace().map(parse_int).collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            return Err(Error::Parse(format!("row {} has {} entries, expected {n}", r + 1, row.len())));
        }
        rows.push(row);
    }
    if let Some(extra) = lines.next() {
        return Err(Error::Parse(format!("trailing content {extra:?}")));
    }
    Ok(rows)
}

fn parse_json(src: &str) -> Result<Vec<Vec<i64>>> {
    let doc: JsonMatrix = serde_json::from_str(src).map_err(|e| Error::Parse(e.to_string()))?;
    let n = doc.matrix.len();
    if n == 0 {
        return Err(Error::Parse("empty matrix".into()));
    }
    doc.matrix
        .iter()
        .map(|row| {
            if row.len() != n {
                return Err(Error::Parse("matrix is not square".into()));
            }
            row.iter()
                .map(|v| v.as_i64().ok_or_else(|| Error::Parse(format!("non-integer entry {v}"))))
                .collect()
        })
        .collect()
}

pub fn format_text(m: &Gim) -> String {
    let mut out = format!("{}\n", m.n());
    for row in m.rows() {
        out.push_str(&row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "));
        out.push('\n');
    }
    out
}

pub fn format_json(m: &Gim) -> String {
    serde_json::json!({ "matrix": m.rows() }).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_with_comments() {
        let src = "# Slodowy\n4\n2 -1 0 1\n-1 2 -1 1\n# mid\n0 -2 2 -2\n1 1 -1 2\n";
        let m = parse_matrix(src).unwrap();
        assert_eq!(m[2], vec![0, -2, 2, -2]);
    }

    #[test]
    fn json_form() {
        let m = parse_matrix(r#"{"matrix": [[2, -1], [-1, 2]]}"#).unwrap();
        assert_eq!(m, vec![vec![2, -1], vec![-1, 2]]);
    }

    #[test]
    fn rejects_non_integers() {
        assert!(parse_matrix("2\n2 1.5\n1 2\n").is_err());
        assert!(parse_matrix(r#"{"matrix": [[2, 0.5], [1, 2]]}"#).is_err());
        assert!(parse_matrix(r#"{"matrix": [[2, "x"], [1, 2]]}"#).is_err());
        assert!(parse_matrix("2\n2 1\n").is_err());
        assert!(parse_matrix("2\n2 1 0\n1 2\n").is_err());
    }

    #[test]
    fn text_round_trip() {
        let m = crate::gim::validate_gim(vec![vec![2, -1], vec![-3, 2]]).unwrap();
        assert_eq!(parse_matrix(&format_text(&m)).unwrap(), m.rows());
        assert_eq!(parse_matrix(&format_json(&m)).unwrap(), m.rows());
    }
}
