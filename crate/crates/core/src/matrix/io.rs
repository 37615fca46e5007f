//! Matrix file formats.
//!
//! JSON: `{"k": 3, "entries": [[1,2,0],[1,3,1],[1,1,1]]}`.
//! Text: first line `k`, then `k` lines of `k` whitespace-separated entries.

use serde::Serialize;
use serde_json::Value;

use super::{ColorMatrix, MAX_K};
use crate::error::{Error, Result};

/// Serializable view of a matrix in the JSON file layout.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixJson {
    pub k: usize,
    pub entries: Vec<Vec<u32>>,
}

impl From<&ColorMatrix> for MatrixJson {
    fn from(a: &ColorMatrix) -> Self {
        MatrixJson {
            k: a.k(),
            entries: a.rows(),
        }
    }
}

impl Serialize for ColorMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson::from(self).serialize(serializer)
    }
}

pub fn to_json(a: &ColorMatrix) -> String {
    serde_json::to_string(&MatrixJson::from(a)).expect("matrix serializes")
}

pub fn from_json(text: &str) -> Result<ColorMatrix> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
    from_json_value(&v)
}

pub fn from_json_value(v: &Value) -> Result<ColorMatrix> {
    let k = v
        .get("k")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse("missing or invalid \"k\"".into()))? as usize;
    if k == 0 || k > MAX_K {
        return Err(Error::Parse(format!("k must be in 1..={MAX_K}, got {k}")));
    }
    let rows = v
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing \"entries\" array".into()))?;
    if rows.len() != k {
        return Err(Error::Parse(format!("expected {k} rows, got {}", rows.len())));
    }
    let mut entries = Vec::with_capacity(k * k);
    for (i, row) in rows.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| Error::Parse(format!("row {i} is not an array")))?;
        if row.len() != k {
            return Err(Error::Parse(format!("row {i} has {} entries, expected {k}", row.len())));
        }
        for x in row {
            entries.push(parse_entry(x.as_i64(), &x.to_string())?);
        }
    }
    ColorMatrix::new(k, entries)
}

fn parse_entry(value: Option<i64>, raw: &str) -> Result<u32> {
    match value {
        Some(x) if x < 0 => Err(Error::Parse(format!("negative entry {x}"))),
        Some(x) => u32::try_from(x).map_err(|_| Error::Parse(format!("entry {x} too large"))),
        None => Err(Error::Parse(format!("entry {raw} is not an integer"))),
    }
}

pub fn to_text(a: &ColorMatrix) -> String {
    let mut out = format!("{}\n", a.k());
    for row in a.rows() {
        let cells: Vec<String> = row.iter().map(u32::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

pub fn from_text(text: &str) -> Result<ColorMatrix> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let k: usize = lines
        .next()
        .ok_or_else(|| Error::Parse("empty matrix text".into()))?
        .parse()
        .map_err(|_| Error::Parse("first line must be k".into()))?;
    if k == 0 || k > MAX_K {
        return Err(Error::Parse(format!("k must be in 1..={MAX_K}, got {k}")));
    }
    let mut entries = Vec::with_capacity(k * k);
    for i in 0..k {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("missing row {i}")))?;
        let cells: Vec<&str> = line.split_whitespace().collect();
        if cells.len() != k {
            return Err(Error::Parse(format!("row {i} has {} entries, expected {k}", cells.len())));
        }
        for c in cells {
            entries.push(parse_entry(c.parse::<i64>().ok(), c)?);
        }
    }
    if lines.next().is_some() {
        return Err(Error::Parse("trailing content after matrix rows".into()));
    }
    ColorMatrix::new(k, entries)
}

/// Accepts either format: JSON input starts with `{`.
pub fn parse_auto(text: &str) -> Result<ColorMatrix> {
    if text.trim_start().starts_with('{') {
        from_json(text)
    } else {
        from_text(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let a = ColorMatrix::from_rows(&[vec![1, 2, 0], vec![1, 3, 1], vec![1, 1, 1]]).unwrap();
        assert_eq!(to_json(&a), r#"{"k":3,"entries":[[1,2,0],[1,3,1],[1,1,1]]}"#);
        assert_eq!(from_json(&to_json(&a)).unwrap(), a);
        assert_eq!(from_text(&to_text(&a)).unwrap(), a);
    }

    #[test]
    fn json_rejects_bad_input() {
        assert!(from_json(r#"{"k":2,"entries":[[1,0],[0]]}"#).is_err());
        assert!(from_json(r#"{"k":2,"entries":[[1,-1],[0,1]]}"#).is_err());
        assert!(from_json(r#"{"k":3,"entries":[[1,0],[0,1]]}"#).is_err());
        assert!(from_json(r#"{"k":2,"entries":[[1,0.5],[0,1]]}"#).is_err());
        assert!(from_json(r#"{"entries":[[1]]}"#).is_err());
    }

    #[test]
    fn text_rejects_bad_input() {
        assert!(from_text("2\n1 0\n0\n").is_err());
        assert!(from_text("2\n1 -1\n0 1\n").is_err());
        assert!(from_text("2\n1 0\n0 1\n5\n").is_err());
        assert_eq!(parse_auto("1\n2\n").unwrap(), ColorMatrix::diagonal(&[2]).unwrap());
    }
}
