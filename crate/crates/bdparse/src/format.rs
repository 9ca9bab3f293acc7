//! On-disk parse formats.
//!
//! Binary (canonical, bit-exact): magic `BDP1`, version byte 0x01, flags
//! byte (bit 0: the text was reversed before parsing), text length and
//! phrase count as 64-bit little-endian, then one record per phrase: tag
//! 0x00 plus one literal byte, or tag 0x01 plus 64-bit LE reference
//! position and length (positions 1-based).
//!
//! JSON mirrors the same fields for debuggability.

use crate::parse::{Parse, Phrase};
use serde::{Deserialize, Serialize};
use std::io::{self, Read, Write};
use thiserror::Error;

pub const MAGIC: [u8; 4] = *b"BDP1";
pub const VERSION: u8 = 0x01;

const TAG_LITERAL: u8 = 0x00;
const TAG_TARGET: u8 = 0x01;
const FLAG_REVERSED: u8 = 0x01;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("bad magic {0:02x?}; not a parse file")]
    BadMagic([u8; 4]),
    #[error("unsupported format version {0:#04x}")]
    UnsupportedVersion(u8),
    #[error("unknown phrase tag {0:#04x}")]
    UnknownTag(u8),
    #[error("truncated parse file")]
    Truncated,
    #[error("malformed parse file: {0}")]
    Malformed(String),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("malformed json parse file: {0}")]
    Json(#[from] serde_json::Error),
}

pub fn write_binary<W: Write>(w: &mut W, parse: &Parse, reversed: bool) -> io::Result<()> {
    w.write_all(&MAGIC)?;
    w.write_all(&[VERSION, if reversed { FLAG_REVERSED } else { 0 }])?;
    w.write_all(&(parse.text_len() as u64).to_le_bytes())?;
    w.write_all(&(parse.phrase_count() as u64).to_le_bytes())?;
    for ph in parse.phrases() {
        match *ph {
            Phrase::Literal(b) => w.write_all(&[TAG_LITERAL, b])?,
            Phrase::Target { ref_pos, len } => {
                w.write_all(&[TAG_TARGET])?;
                w.write_all(&(ref_pos as u64).to_le_bytes())?;
                w.write_all(&(len as u64).to_le_bytes())?;
            }
        }
    }
    Ok(())
}

pub fn to_binary(parse: &Parse, reversed: bool) -> Vec<u8> {
    let mut out = Vec::new();
    write_binary(&mut out, parse, reversed).expect("writing to a Vec cannot fail");
    out
}

pub fn read_binary<R: Read>(r: &mut R) -> Result<(Parse, bool), FormatError> {
    let magic = read_array::<4, R>(r)?;
    if magic != MAGIC {
        return Err(FormatError::BadMagic(magic));
    }
    let [version, flags] = read_array::<2, R>(r)?;
    if version != VERSION {
        return Err(FormatError::UnsupportedVersion(version));
    }
    let n = read_u64(r)?;
    let count = read_u64(r)?;
    let mut phrases = Vec::new();
    let mut covered: u64 = 0;
    for _ in 0..count {
        let [tag] = read_array::<1, R>(r)?;
        let ph = match tag {
            TAG_LITERAL => {
                let [b] = read_array::<1, R>(r)?;
                Phrase::Literal(b)
            }
            TAG_TARGET => {
                let ref_pos = read_u64(r)?;
                let len = read_u64(r)?;
                if ref_pos == 0 || len == 0 {
                    return Err(FormatError::Malformed(format!(
                        "target record with ref_pos {ref_pos} and len {len}"
                    )));
                }
                Phrase::Target {
                    ref_pos: ref_pos as usize,
                    len: len as usize,
                }
            }
            other => return Err(FormatError::UnknownTag(other)),
        };
        covered += ph.len() as u64;
        if covered > n {
            return Err(FormatError::Malformed(format!(
                "phrases cover {covered} positions of a declared length {n}"
            )));
        }
        phrases.push(ph);
    }
    if covered != n {
        return Err(FormatError::Malformed(format!(
            "phrases cover {covered} positions of a declared length {n}"
        )));
    }
    let mut rest = [0u8; 1];
    if r.read(&mut rest)? != 0 {
        return Err(FormatError::Malformed(
            "trailing bytes after phrase records".into(),
        ));
    }
    Ok((Parse::new(phrases, n as usize), flags & FLAG_REVERSED != 0))
}

pub fn from_binary(bytes: &[u8]) -> Result<(Parse, bool), FormatError> {
    read_binary(&mut io::Cursor::new(bytes))
}

#[derive(Serialize, Deserialize)]
struct ParseDoc {
    format: String,
    version: u8,
    reversed: bool,
    n: u64,
    phrases: Vec<PhraseDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
enum PhraseDoc {
    Literal { byte: u8 },
    Target { ref_pos: u64, len: u64 },
}

pub fn to_json(parse: &Parse, reversed: bool) -> String {
    let doc = ParseDoc {
        format: "bdp".into(),
        version: VERSION,
        reversed,
        n: parse.text_len() as u64,
        phrases: parse
            .phrases()
            .iter()
            .map(|ph| match *ph {
                Phrase::Literal(b) => PhraseDoc::Literal { byte: b },
                Phrase::Target { ref_pos, len } => PhraseDoc::Target {
                    ref_pos: ref_pos as u64,
                    len: len as u64,
                },
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("parse documents always serialize")
}

pub fn from_json(bytes: &[u8]) -> Result<(Parse, bool), FormatError> {
    let doc: ParseDoc = serde_json::from_slice(bytes)?;
    if doc.format != "bdp" {
        return Err(FormatError::Malformed(format!(
            "unknown format tag {:?}",
            doc.format
        )));
    }
    if doc.version != VERSION {
        return Err(FormatError::UnsupportedVersion(doc.version));
    }
    let mut phrases = Vec::with_capacity(doc.phrases.len());
    for ph in &doc.phrases {
        phrases.push(match *ph {
            PhraseDoc::Literal { byte } => Phrase::Literal(byte),
            PhraseDoc::Target { ref_pos, len } => {
                if ref_pos == 0 || len == 0 {
                    return Err(FormatError::Malformed(format!(
                        "target record with ref_pos {ref_pos} and len {len}"
                    )));
                }
                Phrase::Target {
                    ref_pos: ref_pos as usize,
                    len: len as usize,
                }
            }
        });
    }
    let covered: u64 = phrases.iter().map(|p| p.len() as u64).sum();
    if covered != doc.n {
        return Err(FormatError::Malformed(format!(
            "phrases cover {covered} positions of a declared length {}",
            doc.n
        )));
    }
    Ok((Parse::new(phrases, doc.n as usize), doc.reversed))
}

/// Read a parse file in either format, sniffing by the leading byte.
pub fn from_bytes(bytes: &[u8]) -> Result<(Parse, bool), FormatError> {
    match bytes.first() {
        Some(b'{') => from_json(bytes),
        _ => from_binary(bytes),
    }
}

fn read_array<const N: usize, R: Read>(r: &mut R) -> Result<[u8; N], FormatError> {
    let mut buf = [0u8; N];
    r.read_exact(&mut buf).map_err(|e| {
        if e.kind() == io::ErrorKind::UnexpectedEof {
            FormatError::Truncated
        } else {
            FormatError::Io(e)
        }
    })?;
    Ok(buf)
}

fn read_u64<R: Read>(r: &mut R) -> Result<u64, FormatError> {
    Ok(u64::from_le_bytes(read_array::<8, R>(r)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_parse() -> Parse {
        Parse::complete(vec![
            Phrase::Target { ref_pos: 3, len: 2 },
            Phrase::Literal(b'a'),
            Phrase::Literal(b'b'),
            Phrase::Target { ref_pos: 2, len: 3 },
        ])
    }

    #[test]
    fn binary_layout_is_bit_exact() {
        let parse = Parse::complete(vec![
            Phrase::Literal(b'x'),
            Phrase::Target { ref_pos: 1, len: 2 },
        ]);
        let bytes = to_binary(&parse, true);
        let mut expect = Vec::new();
        expect.extend_from_slice(b"BDP1");
        expect.push(0x01); // version
        expect.push(0x01); // flags: reversed
        expect.extend_from_slice(&3u64.to_le_bytes()); // n
        expect.extend_from_slice(&2u64.to_le_bytes()); // phrase count
        expect.extend_from_slice(&[0x00, b'x']);
        expect.push(0x01);
        expect.extend_from_slice(&1u64.to_le_bytes());
        expect.extend_from_slice(&2u64.to_le_bytes());
        assert_eq!(bytes, expect);
    }

    #[test]
    fn binary_round_trip() {
        for reversed in [false, true] {
            let parse = sample_parse();
            let bytes = to_binary(&parse, reversed);
            let (back, flag) = from_binary(&bytes).unwrap();
            assert_eq!(back, parse);
            assert_eq!(flag, reversed);
        }
    }

    #[test]
    fn json_round_trip() {
        let parse = sample_parse();
        let js = to_json(&parse, false);
        let (back, flag) = from_json(js.as_bytes()).unwrap();
        assert_eq!(back, parse);
        assert!(!flag);
    }

    #[test]
    fn sniffing_picks_the_right_reader() {
        let parse = sample_parse();
        assert_eq!(from_bytes(&to_binary(&parse, false)).unwrap().0, parse);
        assert_eq!(
            from_bytes(to_json(&parse, false).as_bytes()).unwrap().0,
            parse
        );
    }

    #[test]
    fn rejects_truncated_input() {
        let bytes = to_binary(&sample_parse(), false);
        for cut in [0, 3, 5, 10, bytes.len() - 1] {
            assert!(
                matches!(from_binary(&bytes[..cut]), Err(FormatError::Truncated)),
                "cut at {cut}"
            );
        }
    }

    #[test]
    fn rejects_bad_magic() {
        let mut bytes = to_binary(&sample_parse(), false);
        bytes[0] = b'X';
        assert!(matches!(from_binary(&bytes), Err(FormatError::BadMagic(_))));
    }

    #[test]
    fn rejects_coverage_mismatch() {
        let mut bytes = to_binary(&sample_parse(), false);
        // bump the declared text length
        bytes[6] = 9;
        assert!(matches!(
            from_binary(&bytes),
            Err(FormatError::Malformed(_))
        ));
    }

    #[test]
    fn empty_parse_round_trips() {
        let parse = Parse::empty();
        let (back, _) = from_binary(&to_binary(&parse, false)).unwrap();
        assert_eq!(back, parse);
    }
}
