//! The bidirectional-parse data model: phrases, parses over a text length,
//! structural and cycle validation, decoding, and source resolution.
//!
//! A parse may cover only a prefix of its text length; the uncovered suffix
//! is treated as implicit character phrases, which is how partially built
//! parses behave everywhere in this crate. Decoding requires full coverage
//! since implicit characters carry no byte values.

use crate::text::Text;
use thiserror::Error;

/// One phrase: an explicit character, or a copy of the `len` bytes starting
/// at `ref_pos` (1-based; the copied range may overlap the phrase itself).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phrase {
    Literal(u8),
    Target { ref_pos: usize, len: usize },
}

impl Phrase {
    /// Number of text positions the phrase covers (always at least 1).
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        match self {
            Phrase::Literal(_) => 1,
            Phrase::Target { len, .. } => *len,
        }
    }

    pub fn is_literal(&self) -> bool {
        matches!(self, Phrase::Literal(_))
    }
}

/// A sequence of phrases covering a prefix of a text of length `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parse {
    phrases: Vec<Phrase>,
    n: usize,
}

impl Parse {
    /// Panics if the phrases cover more than `n` positions.
    pub fn new(phrases: Vec<Phrase>, n: usize) -> Parse {
        let covered: usize = phrases.iter().map(Phrase::len).sum();
        assert!(
            covered <= n,
            "phrases cover {covered} positions of a text of length {n}"
        );
        Parse { phrases, n }
    }

    /// A parse covering exactly its phrases.
    pub fn complete(phrases: Vec<Phrase>) -> Parse {
        let n = phrases.iter().map(Phrase::len).sum();
        Parse { phrases, n }
    }

    pub fn empty() -> Parse {
        Parse {
            phrases: Vec::new(),
            n: 0,
        }
    }

    pub fn phrases(&self) -> &[Phrase] {
        &self.phrases
    }

    pub fn phrase_count(&self) -> usize {
        self.phrases.len()
    }

    /// Length of the text this parse describes.
    pub fn text_len(&self) -> usize {
        self.n
    }

    pub fn covered(&self) -> usize {
        self.phrases.iter().map(Phrase::len).sum()
    }

    pub fn is_complete(&self) -> bool {
        self.covered() == self.n
    }

    /// 1-based start position of each phrase.
    pub fn starts(&self) -> Vec<usize> {
        let mut starts = Vec::with_capacity(self.phrases.len());
        let mut s = 1usize;
        for ph in &self.phrases {
            starts.push(s);
            s += ph.len();
        }
        starts
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("parse describes a text of length {parse_len} but got one of length {text_len}")]
    LengthMismatch { parse_len: usize, text_len: usize },
    #[error("phrase {phrase} has length zero")]
    ZeroLength { phrase: usize },
    #[error("phrase {phrase} at position {start} copies from its own start")]
    SelfCopy { phrase: usize, start: usize },
    #[error("phrase {phrase} references [{ref_pos}..{ref_end}] outside 1..={n}")]
    RefOutOfRange {
        phrase: usize,
        ref_pos: usize,
        ref_end: usize,
        n: usize,
    },
    #[error("phrase {phrase} does not match its reference string at position {position}")]
    ContentMismatch { phrase: usize, position: usize },
    #[error("cyclic reference: position {witness} never reaches a character")]
    Cyclic { witness: usize },
    #[error("parse covers only {covered} of {text_len} positions and cannot be decoded")]
    Incomplete { covered: usize, text_len: usize },
}

/// Per-position reference map: where each position copies from, or None for
/// explicit and implicit character phrases.
fn reference_map(parse: &Parse) -> Vec<u32> {
    let mut g0 = vec![0u32; parse.n + 1];
    let mut s = 1usize;
    for ph in parse.phrases() {
        if let Phrase::Target { ref_pos, len } = ph {
            for d in 0..*len {
                g0[s + d] = (ref_pos + d) as u32;
            }
        }
        s += ph.len();
    }
    g0
}

/// Resolve the source of every position by memoized reference chasing:
/// each position is walked at most once, so the whole pass is linear in the
/// text length. Re-entering a position that is still on the current walk
/// means the references loop; the error carries the smallest position on
/// the detected cycle.
fn resolve_sources(parse: &Parse) -> Result<Vec<u32>, usize> {
    const UNSEEN: u8 = 0;
    const ACTIVE: u8 = 1;
    const DONE: u8 = 2;
    let n = parse.n;
    let g0 = reference_map(parse);
    let mut state = vec![UNSEEN; n + 1];
    let mut source = vec![0u32; n + 1];
    let mut path: Vec<u32> = Vec::new();
    for start in 1..=n {
        if state[start] == DONE {
            continue;
        }
        path.clear();
        let mut y = start;
        loop {
            match state[y] {
                DONE => {
                    let src = source[y];
                    for &p in &path {
                        source[p as usize] = src;
                        state[p as usize] = DONE;
                    }
                    break;
                }
                ACTIVE => {
                    // the cycle is the path suffix starting at y
                    let at = path
                        .iter()
                        .position(|&p| p as usize == y)
                        .expect("active implies on path");
                    let witness = path[at..].iter().copied().min().unwrap() as usize;
                    return Err(witness);
                }
                _ => {
                    state[y] = ACTIVE;
                    path.push(y as u32);
                    if g0[y] == 0 {
                        for &p in &path {
                            source[p as usize] = y as u32;
                            state[p as usize] = DONE;
                        }
                        break;
                    }
                    y = g0[y] as usize;
                }
            }
        }
    }
    Ok(source)
}

/// Structural layer shared by validation and decoding; content checks only
/// run when the text is available.
fn check_structure(parse: &Parse, text: Option<&Text>) -> Result<(), ParseError> {
    if let Some(t) = text {
        if t.len() != parse.text_len() {
            return Err(ParseError::LengthMismatch {
                parse_len: parse.text_len(),
                text_len: t.len(),
            });
        }
    }
    let n = parse.text_len();
    let mut s = 1usize;
    for (idx, ph) in parse.phrases().iter().enumerate() {
        if let Phrase::Target { ref_pos, len } = *ph {
            if len == 0 {
                return Err(ParseError::ZeroLength { phrase: idx });
            }
            if ref_pos == s {
                return Err(ParseError::SelfCopy {
                    phrase: idx,
                    start: s,
                });
            }
            if ref_pos < 1 || ref_pos + len - 1 > n {
                return Err(ParseError::RefOutOfRange {
                    phrase: idx,
                    ref_pos,
                    ref_end: ref_pos + len - 1,
                    n,
                });
            }
            if let Some(t) = text {
                for d in 0..len {
                    if t.at(s + d) != t.at(ref_pos + d) {
                        return Err(ParseError::ContentMismatch {
                            phrase: idx,
                            position: s + d,
                        });
                    }
                }
            }
        }
        s += ph.len();
    }
    Ok(())
}

/// Check that `parse` is a valid bidirectional parse of `text`: structurally
/// sound and free of reference cycles. Uncovered suffix positions count as
/// implicit characters.
pub fn validate(parse: &Parse, text: &Text) -> Result<(), ParseError> {
    check_structure(parse, Some(text))?;
    resolve_sources(parse)
        .map(|_| ())
        .map_err(|witness| ParseError::Cyclic { witness })
}

/// Recover the text described by a complete parse.
pub fn decode(parse: &Parse) -> Result<Text, ParseError> {
    if !parse.is_complete() {
        return Err(ParseError::Incomplete {
            covered: parse.covered(),
            text_len: parse.text_len(),
        });
    }
    check_structure(parse, None)?;
    let source = resolve_sources(parse).map_err(|witness| ParseError::Cyclic { witness })?;
    let n = parse.text_len();
    let mut literal = vec![0u8; n + 1];
    let mut s = 1usize;
    for ph in parse.phrases() {
        if let Phrase::Literal(b) = ph {
            literal[s] = *b;
        }
        s += ph.len();
    }
    let bytes: Vec<u8> = (1..=n).map(|x| literal[source[x] as usize]).collect();
    Ok(Text::new(bytes))
}

/// The character-phrase position whose literal ultimately supplies position
/// `x`, following references through the parse (implicit characters over the
/// uncovered suffix included).
pub fn source_of(parse: &Parse, x: usize) -> Result<usize, ParseError> {
    assert!(
        x >= 1 && x <= parse.text_len(),
        "position {x} out of range 1..={}",
        parse.text_len()
    );
    check_structure(parse, None)?;
    let source = resolve_sources(parse).map_err(|witness| ParseError::Cyclic { witness })?;
    Ok(source[x] as usize)
}
