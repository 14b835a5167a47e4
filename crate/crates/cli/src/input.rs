//! Matrix files, root-hint files and comma-separated flag values.

use matpfd_core::scalar::{parse_rational, render_rational};
use matpfd_core::{GaussianRational, Matrix, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InputError {
    #[error("line {line}, column {column}: cannot parse {token:?} as a rational")]
    Parse {
        line: usize,
        column: usize,
        token: String,
    },
    #[error("line {line}: expected {expected} entries, found {found} (matrix must be square)")]
    NonSquare {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("no matrix rows found")]
    Empty,
    #[error("hints line {line}: {reason}")]
    Hint { line: usize, reason: String },
    #[error("{flag}: cannot parse {token:?}")]
    List { flag: &'static str, token: String },
}

/// Yields `(1-based line number, line)` for lines that carry data.
fn data_lines(input: &str) -> impl Iterator<Item = (usize, &str)> {
    input
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
}

/// `(1-based column, token)` for each whitespace-separated token.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split_whitespace().map(move |tok| {
        let offset = tok.as_ptr() as usize - line.as_ptr() as usize;
        (line[..offset].chars().count() + 1, tok)
    })
}

pub fn parse_matrix(input: &str) -> Result<Matrix<Rational>, InputError> {
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut lines = Vec::new();
    for (line, text) in data_lines(input) {
        let mut row = Vec::new();
        for (column, token) in tokens(text) {
            let value = parse_rational(token).map_err(|_| InputError::Parse {
                line,
                column,
                token: token.to_string(),
            })?;
            row.push(value);
        }
        rows.push(row);
        lines.push(line);
    }
    let n = rows.len();
    if n == 0 {
        return Err(InputError::Empty);
    }
    for (row, line) in rows.iter().zip(&lines) {
        if row.len() != n {
            return Err(InputError::NonSquare {
                line: *line,
                expected: n,
                found: row.len(),
            });
        }
    }
    Ok(Matrix::from_rows(rows).expect("rows checked to be square"))
}

/// Inverse of [`parse_matrix`]: one row per line.
pub fn render_matrix_file(m: &Matrix<Rational>) -> String {
    let mut out = String::new();
    for row in m.to_rows() {
        let tokens: Vec<String> = row.iter().map(render_rational).collect();
        out.push_str(&tokens.join(" "));
        out.push('\n');
    }
    out
}

/// One root per line, `ROOT [MULTIPLICITY]`, e.g. `2 3` or `-2+3i`.
pub fn parse_hints(input: &str) -> Result<Vec<(GaussianRational, usize)>, InputError> {
    let mut hints = Vec::new();
    for (line, text) in data_lines(input) {
        let fields: Vec<&str> = text.split_whitespace().collect();
        let hint_err = |reason: String| InputError::Hint { line, reason };
        let (root, multiplicity) = match fields.as_slice() {
            [root] => (*root, "1"),
            [root, m] => (*root, *m),
            _ => {
                return Err(hint_err(format!(
                    "expected ROOT [MULTIPLICITY], got {text:?}"
                )))
            }
        };
        let root: GaussianRational = root
            .parse()
            .map_err(|_| hint_err(format!("cannot parse root {root:?}")))?;
        let multiplicity: usize = multiplicity
            .parse()
            .ok()
            .filter(|m| *m > 0)
            .ok_or_else(|| hint_err(format!("bad multiplicity {multiplicity:?}")))?;
        hints.push((root, multiplicity));
    }
    Ok(hints)
}

/// `"1,-1,2"` style rational vectors.
pub fn parse_rational_list(flag: &'static str, input: &str) -> Result<Vec<Rational>, InputError> {
    input
        .split(',')
        .map(|tok| {
            parse_rational(tok.trim()).map_err(|_| InputError::List {
                flag,
                token: tok.to_string(),
            })
        })
        .collect()
}

pub fn parse_time_list(flag: &'static str, input: &str) -> Result<Vec<f64>, InputError> {
    input
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<f64>()
                .ok()
                .filter(|t| t.is_finite())
                .ok_or_else(|| InputError::List {
                    flag,
                    token: tok.to_string(),
                })
        })
        .collect()
}
