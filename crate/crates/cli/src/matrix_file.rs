//! Matrix files: a size header, then `n` rows of `n` integers. Entries may
//! be negative and are reduced mod `p`. The header is either `n <count>` or
//! a bare count; `#` starts a comment line.

use std::path::Path;

use extshift_core::{Field, FieldMatrix};

use crate::error::CliError;

pub fn parse(text: &str, source: &str, field: Field) -> Result<FieldMatrix, CliError> {
    let err = |line: usize, message: String| CliError::Parse { path: source.to_string(), line, message };
    let mut size: Option<usize> = None;
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        last_line = line_no;
        let Some(n) = size else {
            let count = line.strip_prefix('n').map(str::trim).unwrap_or(line);
            size = Some(count.parse().map_err(|_| err(line_no, format!("invalid matrix size `{line}`")))?);
            continue;
        };
        let row: Vec<i64> = line
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| err(line_no, format!("invalid entry `{t}`"))))
            .collect::<Result<_, _>>()?;
        if row.len() != n {
            return Err(err(line_no, format!("expected {n} entries, found {}", row.len())));
        }
        if rows.len() == n {
            return Err(err(line_no, format!("more than {n} rows")));
        }
        rows.push(row);
    }
    let n = size.ok_or_else(|| err(0, "missing matrix size header".into()))?;
    if rows.len() != n {
        return Err(err(last_line, format!("expected {n} rows, found {}", rows.len())));
    }
    if n == 0 {
        return Ok(FieldMatrix::zeros(field, 0, 0));
    }
    Ok(FieldMatrix::from_rows(field, &rows)?)
}

pub fn read(path: &Path, field: Field) -> Result<FieldMatrix, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
    parse(&text, &path.display().to_string(), field)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_reduces() {
        let f = Field::default();
        let m = parse("n 2\n1 -1\n# c\n0 3\n", "m", f).unwrap();
        assert_eq!(m.get(0, 1), f.modulus() - 1);
        assert_eq!(m.get(1, 1), 3);
        assert_eq!(parse("2\n1 0\n0 1\n", "m", f).unwrap(), FieldMatrix::identity(f, 2));
    }

    #[test]
    fn rejects_malformed() {
        let f = Field::default();
        assert!(matches!(parse("2\n1 0\n", "m", f), Err(CliError::Parse { line: 2, .. })));
        assert!(matches!(parse("2\n1 0 0\n0 1\n", "m", f), Err(CliError::Parse { line: 2, .. })));
        assert!(matches!(parse("2\n1 a\n0 1\n", "m", f), Err(CliError::Parse { line: 2, .. })));
        assert!(matches!(parse("x\n", "m", f), Err(CliError::Parse { line: 1, .. })));
    }
}
