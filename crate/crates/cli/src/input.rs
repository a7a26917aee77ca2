//! The point-set and set-system file formats.
//!
//! Point sets: a header line `n k`, then one point per line as `n`
//! space-separated integers in `0..k`. Set systems (`--sets`): a header line
//! `n`, then one set per line as 1-based elements, with `-` for the empty
//! set. In both formats blank lines and lines starting with `#` are ignored.

use std::fmt;

use extremal_core::{LexOrder, PointSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError {
    /// 1-based line number, when the problem is tied to a line.
    pub line: Option<usize>,
    pub message: String,
}

impl InputError {
    fn at(line: usize, message: impl Into<String>) -> Self {
        InputError {
            line: Some(line),
            message: message.into(),
        }
    }
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(l) => write!(f, "line {l}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for InputError {}

/// A parsed input together with the number of duplicate lines merged away.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsed {
    pub points: PointSet,
    pub duplicates: usize,
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn positive(line: usize, what: &str, tok: &str) -> Result<u64, InputError> {
    match tok.parse::<u64>() {
        Ok(v) if v > 0 => Ok(v),
        _ => Err(InputError::at(
            line,
            format!("{what} must be a positive integer, found `{tok}`"),
        )),
    }
}

pub fn parse_pointset(text: &str) -> Result<Parsed, InputError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or(InputError {
        line: None,
        message: "missing header line `n k`".into(),
    })?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [n, k] = fields[..] else {
        return Err(InputError::at(
            hl,
            format!("header must be `n k`, found `{header}`"),
        ));
    };
    let n = positive(hl, "n", n)? as usize;
    let k =
        u32::try_from(positive(hl, "k", k)?).map_err(|_| InputError::at(hl, "k is too large"))?;

    let mut points = Vec::new();
    for (ln, line) in lines {
        let coords: Vec<&str> = line.split_whitespace().collect();
        if coords.len() != n {
            return Err(InputError::at(
                ln,
                format!("expected {n} coordinates, found {}", coords.len()),
            ));
        }
        let mut p = Vec::with_capacity(n);
        for c in coords {
            let v: i64 = c
                .parse()
                .map_err(|_| InputError::at(ln, format!("`{c}` is not an integer")))?;
            if v < 0 || v >= k as i64 {
                return Err(InputError::at(
                    ln,
                    format!("coordinate {v} is outside 0..{k}"),
                ));
            }
            p.push(v as u32);
        }
        points.push(p);
    }
    let (points, duplicates) =
        PointSet::new_counting_duplicates(n, k, points).map_err(|e| InputError {
            line: None,
            message: e.to_string(),
        })?;
    Ok(Parsed { points, duplicates })
}

/// Reads the `--sets` format into the `k = 2` point set of characteristic
/// vectors.
pub fn parse_sets(text: &str) -> Result<Parsed, InputError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or(InputError {
        line: None,
        message: "missing header line `n`".into(),
    })?;
    let n = positive(hl, "n", header)? as usize;
    let mut points = Vec::new();
    for (ln, line) in lines {
        let mut p = vec![0u32; n];
        if line != "-" {
            for tok in line.split_whitespace() {
                let e: usize = tok
                    .parse()
                    .map_err(|_| InputError::at(ln, format!("`{tok}` is not an element")))?;
                if e == 0 || e > n {
                    return Err(InputError::at(
                        ln,
                        format!("element {e} is outside 1..={n}"),
                    ));
                }
                p[e - 1] = 1;
            }
        }
        points.push(p);
    }
    let (points, duplicates) =
        PointSet::new_counting_duplicates(n, 2, points).map_err(|e| InputError {
            line: None,
            message: e.to_string(),
        })?;
    Ok(Parsed { points, duplicates })
}

/// The point-set file format; [`parse_pointset`] reads it back unchanged.
pub fn serialize_pointset(v: &PointSet) -> String {
    let mut out = format!("{} {}\n", v.dim(), v.alphabet());
    for p in v.points() {
        let coords: Vec<String> = p.iter().map(u32::to_string).collect();
        out.push_str(&coords.join(" "));
        out.push('\n');
    }
    out
}

/// Parses a comma-separated list of 1-based indices such as `2,1,3`.
pub fn parse_index_list(spec: &str) -> Result<Vec<usize>, String> {
    if spec.trim().is_empty() {
        return Ok(Vec::new());
    }
    spec.split(',')
        .map(|t| {
            let t = t.trim();
            match t.parse::<usize>() {
                Ok(i) if i > 0 => Ok(i),
                _ => Err(format!("`{t}` is not a 1-based index")),
            }
        })
        .collect()
}

/// `--order i1,...,in`, most significant variable first.
pub fn parse_order(spec: &str, n: usize) -> Result<LexOrder, String> {
    let idx = parse_index_list(spec)?;
    if idx.len() != n {
        return Err(format!(
            "order `{spec}` lists {} variables, the input has n = {n}",
            idx.len()
        ));
    }
    LexOrder::from_one_based(&idx).map_err(|e| format!("order `{spec}`: {e}"))
}
