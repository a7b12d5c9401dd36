//! The matroid file format: a small line-oriented grammar with `#`
//! comments, `field`, `rank`, optional `labels`, and a `matrix` section of
//! rank many rows. Parsing and serialization round-trip exactly.

use matroid_core::linalg::is_prime;
use matroid_core::{FieldMatrix, LinearMatroid};

#[derive(Debug)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

/// Parses the format:
///
/// ```text
/// # comment
/// field 3
/// rank 4
/// labels a b c ...   (optional)
/// matrix
/// 1 0 0 ...          (rank many rows, equal length, entries mod p)
/// ```
///
/// Negative entries are normalized mod p. The declared rank must equal
/// both the row count and the rank of the parsed matrix.
pub fn parse_matroid_file(text: &str, name: &str) -> Result<LinearMatroid, ParseError> {
    let mut field: Option<(u32, usize)> = None;
    let mut rank: Option<(usize, usize)> = None;
    let mut labels: Option<(Vec<String>, usize)> = None;
    let mut matrix_line: Option<usize> = None;
    let mut rows: Vec<(Vec<i64>, usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        let head = words.next().expect("nonempty line");

        if matrix_line.is_some() {
            let expected = rank.expect("matrix requires rank").0;
            if rows.len() == expected {
                return err(lineno, "unexpected content after the matrix rows");
            }
            let mut row = Vec::new();
            for w in std::iter::once(head).chain(words) {
                match w.parse::<i64>() {
                    Ok(v) => row.push(v),
                    Err(_) => return err(lineno, format!("bad matrix entry '{w}'")),
                }
            }
            rows.push((row, lineno));
            continue;
        }

        match head {
            "field" => {
                if field.is_some() {
                    return err(lineno, "duplicate field directive");
                }
                let Some(w) = words.next() else {
                    return err(lineno, "field needs a modulus");
                };
                let Ok(p) = w.parse::<u32>() else {
                    return err(lineno, format!("bad field modulus '{w}'"));
                };
                if !is_prime(p) {
                    return err(lineno, format!("field modulus {p} is not prime"));
                }
                field = Some((p, lineno));
            }
            "rank" => {
                if rank.is_some() {
                    return err(lineno, "duplicate rank directive");
                }
                let Some(w) = words.next() else {
                    return err(lineno, "rank needs a value");
                };
                let Ok(r) = w.parse::<usize>() else {
                    return err(lineno, format!("bad rank '{w}'"));
                };
                rank = Some((r, lineno));
            }
            "labels" => {
                if labels.is_some() {
                    return err(lineno, "duplicate labels directive");
                }
                let list: Vec<String> = words.map(str::to_string).collect();
                for (i, a) in list.iter().enumerate() {
                    if list[i + 1..].contains(a) {
                        return err(lineno, format!("duplicate label '{a}'"));
                    }
                }
                labels = Some((list, lineno));
            }
            "matrix" => {
                if rank.is_none() {
                    return err(lineno, "matrix section before rank directive");
                }
                matrix_line = Some(lineno);
            }
            other => return err(lineno, format!("unknown directive '{other}'")),
        }
    }

    let Some((p, _)) = field else {
        return err(text.lines().count() + 1, "missing field directive");
    };
    let Some((r, _)) = rank else {
        return err(text.lines().count() + 1, "missing rank directive");
    };
    let Some(matrix_at) = matrix_line else {
        return err(text.lines().count() + 1, "missing matrix section");
    };
    if rows.len() != r {
        return err(
            matrix_at,
            format!("declared rank {r} but the matrix has {} rows", rows.len()),
        );
    }

    let n = rows.first().map_or(0, |(row, _)| row.len());
    let mut entries = Vec::with_capacity(r * n);
    for (row, lineno) in &rows {
        if row.len() != n {
            return err(
                *lineno,
                format!("row has {} entries where the first row has {n}", row.len()),
            );
        }
        entries.extend_from_slice(row);
    }

    let matrix = FieldMatrix::new(p, r, n, &entries)
        .map_err(|e| ParseError { line: matrix_at, message: e.to_string() })?;
    if matrix.rank() as usize != r {
        return err(
            matrix_at,
            format!("declared rank {r} but the matrix has rank {}", matrix.rank()),
        );
    }
    match labels {
        Some((list, lineno)) => {
            if list.len() != n {
                return err(lineno, format!("{} labels for {n} columns", list.len()));
            }
            LinearMatroid::new(name, matrix, list)
                .map_err(|e| ParseError { line: lineno, message: e.to_string() })
        }
        None => LinearMatroid::with_default_labels(name, matrix)
            .map_err(|e| ParseError { line: matrix_at, message: e.to_string() }),
    }
}

/// Writes a matroid back out in the file grammar. The matrix is emitted in
/// reduced row form, so the row count always equals the rank; row
/// reduction never changes which column sets are independent, so the
/// parsed result is the same matroid on the same labels.
pub fn serialize_matroid(m: &LinearMatroid) -> String {
    let reduced = m.matrix().row_reduce();
    let r = m.full_rank() as usize;
    let n = m.n();
    let mut out = format!("# {}\n", m.name());
    out.push_str(&format!("field {}\n", m.field()));
    out.push_str(&format!("rank {r}\n"));
    if n > 0 {
        out.push_str("labels");
        for l in m.labels() {
            out.push(' ');
            out.push_str(l);
        }
        out.push('\n');
    }
    out.push_str("matrix\n");
    for i in 0..r {
        let row: Vec<String> = (0..n).map(|j| reduced.entry(i, j).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
