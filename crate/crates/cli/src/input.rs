use std::fs;
use std::io;

use lcps_core::Seq;

use crate::args::Source;

/// Loads one sequence. Plain files lose a single trailing newline; FASTA
/// input keeps only the first record's residues, whitespace-free and
/// uppercased.
pub fn read_input(source: &Source, fasta: bool) -> io::Result<Seq> {
    let bytes = match source {
        Source::Literal(s) => s.as_bytes().to_vec(),
        Source::File(path) => {
            let mut bytes = fs::read(path)
                .map_err(|e| io::Error::new(e.kind(), format!("{}: {e}", path.display())))?;
            if !fasta {
                strip_trailing_newline(&mut bytes);
            }
            bytes
        }
    };
    Ok(if fasta { first_fasta_record(&bytes) } else { bytes.into() })
}

fn strip_trailing_newline(bytes: &mut Vec<u8>) {
    if bytes.last() == Some(&b'\n') {
        bytes.pop();
        if bytes.last() == Some(&b'\r') {
            bytes.pop();
        }
    }
}

/// Residues of the first record. Sequence lines before any header count as
/// part of the first record.
pub fn first_fasta_record(bytes: &[u8]) -> Seq {
    let mut seq = Vec::new();
    let mut in_record = false;
    for line in bytes.split(|&b| b == b'\n') {
        if line.first() == Some(&b'>') {
            if in_record || !seq.is_empty() {
                break;
            }
            in_record = true;
            continue;
        }
        seq.extend(
            line.iter()
                .filter(|b| !b.is_ascii_whitespace())
                .map(u8::to_ascii_uppercase),
        );
    }
    seq.into()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn file_with(contents: &[u8]) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(contents).unwrap();
        f
    }

    #[test]
    fn fasta_records() {
        assert_eq!(first_fasta_record(b">h\nac\ngt\n"), Seq::from("ACGT"));
        assert_eq!(first_fasta_record(b">one\nAC\n>two\nGG\n"), Seq::from("AC"));
        assert_eq!(first_fasta_record(b">h\r\na c\tg\r\n\n t\n"), Seq::from("ACGT"));
        assert_eq!(first_fasta_record(b"acg\n>next\ntt\n"), Seq::from("ACG"));
        assert_eq!(first_fasta_record(b""), Seq::empty());
        assert_eq!(first_fasta_record(b">only header\n"), Seq::empty());
    }

    #[test]
    fn plain_file() {
        let f = file_with(b"abc\n");
        assert_eq!(read_input(&Source::File(f.path().into()), false).unwrap(), Seq::from("abc"));
        let f = file_with(b"abc\r\n");
        assert_eq!(read_input(&Source::File(f.path().into()), false).unwrap(), Seq::from("abc"));
        let f = file_with(b"ab\n\n");
        assert_eq!(read_input(&Source::File(f.path().into()), false).unwrap(), Seq::from("ab\n"));
        let f = file_with(b"");
        assert_eq!(read_input(&Source::File(f.path().into()), false).unwrap(), Seq::empty());
    }

    #[test]
    fn fasta_file() {
        let f = file_with(b">h\nac\ngt\n");
        assert_eq!(read_input(&Source::File(f.path().into()), true).unwrap(), Seq::from("ACGT"));
    }

    #[test]
    fn literals_are_verbatim() {
        assert_eq!(read_input(&Source::Literal("ab\n".into()), false).unwrap(), Seq::from("ab\n"));
        assert_eq!(read_input(&Source::Literal(">h\nac".into()), true).unwrap(), Seq::from("AC"));
    }

    #[test]
    fn missing_file() {
        let err = read_input(&Source::File("/nonexistent/lcps/input".into()), false).unwrap_err();
        assert_eq!(err.kind(), io::ErrorKind::NotFound);
    }
}
