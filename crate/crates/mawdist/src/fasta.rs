//! Reading and writing MultiFASTA sequence files.
//!
//! A record starts at a `>` header; its label is the first whitespace
//! delimited token after the marker. Sequence data is the concatenation of
//! the following lines with all whitespace dropped, so records may be
//! wrapped at any width. Blank lines are ignored everywhere.

use crate::text::Sequence;
use crate::{Error, Result};
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

/// Reads every record of a MultiFASTA file.
pub fn read_multifasta(path: impl AsRef<Path>) -> Result<Vec<Sequence>> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|source| Error::File {
        path: path.display().to_string(),
        source,
    })?;
    parse_multifasta(BufReader::new(file), &path.display().to_string())
}

/// Parses MultiFASTA records from a reader; `path` only labels errors.
pub fn parse_multifasta(reader: impl BufRead, path: &str) -> Result<Vec<Sequence>> {
    let mut records: Vec<Sequence> = Vec::new();
    let mut current: Option<(Sequence, usize)> = None;
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(header) = trimmed.strip_prefix('>') {
            if let Some((done, header_line)) = current.take() {
                records.push(finish_record(done, header_line, path)?);
            }
            let label = header.split_whitespace().next().unwrap_or("").to_string();
            current = Some((Sequence::new(label, Vec::new()), lineno));
        } else {
            match current.as_mut() {
                Some((seq, _)) => seq
                    .data
                    .extend(trimmed.bytes().filter(|b| !b.is_ascii_whitespace())),
                None => {
                    return Err(Error::Fasta {
                        path: path.to_string(),
                        line: lineno,
                        msg: "sequence data before the first '>' header".to_string(),
                    });
                }
            }
        }
    }
    if let Some((done, header_line)) = current.take() {
        records.push(finish_record(done, header_line, path)?);
    }
    if records.is_empty() {
        return Err(Error::NoRecords);
    }
    Ok(records)
}

fn finish_record(seq: Sequence, header_line: usize, path: &str) -> Result<Sequence> {
    if seq.data.is_empty() {
        return Err(Error::Fasta {
            path: path.to_string(),
            line: header_line,
            msg: format!("record {:?} has no sequence data", seq.label),
        });
    }
    Ok(seq)
}

/// Writes records as MultiFASTA, wrapping sequence lines at `width` bytes.
pub fn write_multifasta(
    mut writer: impl Write,
    seqs: &[Sequence],
    width: usize,
) -> Result<()> {
    let width = width.max(1);
    for s in seqs {
        writeln!(writer, ">{}", s.label)?;
        for chunk in s.data.chunks(width) {
            writer.write_all(chunk)?;
            writeln!(writer)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    fn parse(text: &str) -> Result<Vec<Sequence>> {
        parse_multifasta(Cursor::new(text), "test.fa")
    }

    #[test]
    fn parses_wrapped_records_and_labels() {
        let text = ">first some description here\n\
                    abaab\n\
                    \n\
                    >second\n\
                    aab\n\
                    bb aa\n\
                    >third\ttabbed note\n\
                    cc\n";
        let records = parse(text).unwrap();
        assert_eq!(records.len(), 3);
        assert_eq!(records[0].label, "first");
        assert_eq!(records[0].data, b"abaab");
        assert_eq!(records[1].label, "second");
        assert_eq!(records[1].data, b"aabbbaa");
        assert_eq!(records[2].label, "third");
        assert_eq!(records[2].data, b"cc");
    }

    #[test]
    fn leading_data_is_rejected_with_its_line() {
        let got = parse("acgt\n>x\naa\n");
        match got {
            Err(Error::Fasta { path, line, msg }) => {
                assert_eq!(path, "test.fa");
                assert_eq!(line, 1);
                assert!(msg.contains("before the first"));
            }
            other => panic!("expected a fasta error, got {other:?}"),
        }
    }

    #[test]
    fn empty_records_are_rejected_with_the_header_line() {
        let got = parse(">x\naa\n>empty\n>y\nbb\n");
        match got {
            Err(Error::Fasta { line, msg, .. }) => {
                assert_eq!(line, 3);
                assert!(msg.contains("empty"));
            }
            other => panic!("expected a fasta error, got {other:?}"),
        }
        // A trailing empty record is caught too.
        assert!(parse(">x\naa\n>last\n").is_err());
    }

    #[test]
    fn no_records_is_its_own_error() {
        assert!(matches!(parse(""), Err(Error::NoRecords)));
        assert!(matches!(parse("\n  \n"), Err(Error::NoRecords)));
    }

    #[test]
    fn writing_then_parsing_round_trips() {
        let seqs = vec![
            Sequence::new("alpha", *b"abaababaabaab"),
            Sequence::new("beta", *b"ab"),
        ];
        let mut out = Vec::new();
        write_multifasta(&mut out, &seqs, 5).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert_eq!(text, ">alpha\nabaab\nabaab\naab\n>beta\nab\n");
        let back = parse_multifasta(Cursor::new(text), "round").unwrap();
        assert_eq!(back, seqs);
    }
}
