//! Reading and writing distance matrices in PHYLIP format.
//!
//! The first line carries the number of taxa; each following row carries a
//! label and one fixed-point value per taxon. Strict rows reserve exactly
//! ten characters for the label, relaxed rows keep the whole label and
//! separate it from the values with two spaces.

use crate::matrix::DistanceMatrix;
use crate::{Error, Result};
use std::io::{BufRead, Write};

/// Writes `matrix` in PHYLIP format.
///
/// `precision` is the number of decimals per cell and is meaningful between
/// 1 and 17; values outside keep whatever `format!` does with them.
pub fn write_phylip(
    matrix: &DistanceMatrix,
    mut writer: impl Write,
    precision: usize,
    relaxed: bool,
) -> Result<()> {
    let n = matrix.len();
    writeln!(writer, "{n}")?;
    for i in 0..n {
        let label = &matrix.labels()[i];
        if relaxed {
            write!(writer, "{label}  ")?;
        } else {
            let shown: String = label.chars().take(10).collect();
            write!(writer, "{shown:<10}")?;
        }
        let mut row = String::new();
        for j in 0..n {
            if j > 0 {
                row.push(' ');
            }
            row.push_str(&format!("{:.*}", precision, matrix.get(i, j)));
        }
        writeln!(writer, "{row}")?;
    }
    Ok(())
}

fn bad(path: &str, msg: impl Into<String>) -> Error {
    Error::Phylip {
        path: path.to_string(),
        msg: msg.into(),
    }
}

/// Reads a PHYLIP matrix back, accepting both strict and relaxed rows.
///
/// Rows are first split on whitespace; when that does not yield one label
/// plus one value per taxon, the first ten characters are taken as a strict
/// label that may contain spaces.
pub fn read_phylip(reader: impl BufRead, path: &str) -> Result<DistanceMatrix> {
    let mut lines = reader.lines();
    let first = loop {
        match lines.next() {
            None => return Err(bad(path, "file is empty")),
            Some(line) => {
                let line = line?;
                if !line.trim().is_empty() {
                    break line;
                }
            }
        }
    };
    let n: usize = first
        .trim()
        .parse()
        .map_err(|_| bad(path, format!("taxa count {:?} is not a number", first.trim())))?;
    if n == 0 {
        return Err(bad(path, "taxa count is zero"));
    }

    let mut labels: Vec<String> = Vec::with_capacity(n);
    let mut values: Vec<f64> = Vec::with_capacity(n * n);
    for line in lines {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        if labels.len() == n {
            return Err(bad(path, format!("more than {n} data rows")));
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let (label, numbers): (String, Vec<String>) = if tokens.len() == n + 1 {
            (
                tokens[0].to_string(),
                tokens[1..].iter().map(|t| t.to_string()).collect(),
            )
        } else if line.chars().count() > 10 {
            let head: String = line.chars().take(10).collect();
            let tail: String = line.chars().skip(10).collect();
            (
                head.trim_end().to_string(),
                tail.split_whitespace().map(|t| t.to_string()).collect(),
            )
        } else {
            return Err(bad(
                path,
                format!("row {:?} is too short to hold a label and {n} values", line),
            ));
        };
        if numbers.len() != n {
            return Err(bad(
                path,
                format!(
                    "row for {:?} holds {} values, expected {n}",
                    label,
                    numbers.len()
                ),
            ));
        }
        for t in &numbers {
            let v: f64 = t
                .parse()
                .map_err(|_| bad(path, format!("cell {:?} is not a number", t)))?;
            values.push(v);
        }
        labels.push(label);
    }
    if labels.len() != n {
        return Err(bad(
            path,
            format!("found {} data rows, expected {n}", labels.len()),
        ));
    }
    Ok(DistanceMatrix::from_parts(labels, values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    fn sample() -> DistanceMatrix {
        DistanceMatrix::from_parts(
            vec![
                "alpha".into(),
                "verylongtaxonname".into(),
                "g".into(),
            ],
            vec![0.0, 0.5, 0.25, 0.5, 0.0, 0.125, 0.25, 0.125, 0.0],
        )
    }

    fn render(matrix: &DistanceMatrix, precision: usize, relaxed: bool) -> String {
        let mut out = Vec::new();
        write_phylip(matrix, &mut out, precision, relaxed).unwrap();
        String::from_utf8(out).unwrap()
    }

    #[test]
    fn strict_rows_pad_and_truncate_labels() {
        let text = render(&sample(), 3, false);
        let expected = "3\n\
                        alpha     0.000 0.500 0.250\n\
                        verylongta0.500 0.000 0.125\n\
                        g         0.250 0.125 0.000\n";
        assert_eq!(text, expected);
    }

    #[test]
    fn relaxed_rows_keep_whole_labels() {
        let text = render(&sample(), 2, true);
        let expected = "3\n\
                        alpha  0.00 0.50 0.25\n\
                        verylongtaxonname  0.50 0.00 0.12\n\
                        g  0.25 0.12 0.00\n";
        assert_eq!(text, expected);
    }

    #[test]
    fn reading_back_strict_output_recovers_the_cells() {
        let matrix = sample();
        let text = render(&matrix, 6, false);
        let back = read_phylip(Cursor::new(text), "test").unwrap();
        assert_eq!(back.len(), 3);
        assert_eq!(back.labels()[0], "alpha");
        assert_eq!(back.labels()[1], "verylongta");
        for i in 0..3 {
            for j in 0..3 {
                assert!((back.get(i, j) - matrix.get(i, j)).abs() < 1e-9);
            }
        }
        assert!(back.is_symmetric());
        assert!(back.diagonal_is_zero());
    }

    #[test]
    fn reading_back_relaxed_output_keeps_labels() {
        let matrix = sample();
        let text = render(&matrix, 6, true);
        let back = read_phylip(Cursor::new(text), "test").unwrap();
        assert_eq!(back.labels()[1], "verylongtaxonname");
        assert!(back.is_symmetric());
    }

    #[test]
    fn strict_labels_with_spaces_survive_the_fallback() {
        let text = "2\nmy taxon  0.000000 0.250000\nother     0.250000 0.000000\n";
        let m = read_phylip(Cursor::new(text), "test").unwrap();
        assert_eq!(m.labels()[0], "my taxon");
        assert_eq!(m.get(0, 1), 0.25);
    }

    #[test]
    fn malformed_inputs_are_reported() {
        let cases = [
            ("", "empty"),
            ("x\n", "count"),
            ("0\n", "zero"),
            ("2\nalpha  0.0 0.0\n", "rows"),
            ("1\nalpha  0.0\nbeta  0.0\n", "extra rows"),
            ("1\nalpha  zebra\n", "bad cell"),
            ("2\nab\ncd\n", "short row"),
        ];
        for (text, what) in cases {
            let got = read_phylip(Cursor::new(text), "test");
            assert!(
                matches!(got, Err(Error::Phylip { .. })),
                "case {what} should fail, got {got:?}"
            );
        }
    }
}
