//! The five factorizations. Four are array-driven greedy sweeps; the fifth
//! is the greedy longest-valid-phrase parser that may reference either side
//! of the phrase being built, driven by the sorted-suffix enumeration and
//! the source forest.

use crate::forest::{ForestStats, ScratchOverlay, SourceForest};
use crate::index::{self, TextIndex};
use crate::parse::{Parse, Phrase};
use crate::text::Text;
use serde::{Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// Greedy left-to-right parse: the phrase at position i is a literal when
/// its longest previous factor is empty and otherwise copies that factor
/// from an occurrence strictly to the left.
pub fn lz77(text: &Text, index: &TextIndex) -> Parse {
    debug_assert_eq!(text.len(), index.len());
    let n = text.len();
    let (lpf, occ) = index::lpf_with_occ(index);
    let mut phrases = Vec::new();
    let mut i = 1usize;
    while i <= n {
        let len = lpf[i - 1] as usize;
        if len == 0 {
            phrases.push(Phrase::Literal(text.at(i)));
            i += 1;
        } else {
            debug_assert!((occ[i - 1] as usize) < i);
            phrases.push(Phrase::Target {
                ref_pos: occ[i - 1] as usize,
                len,
            });
            i += len;
        }
    }
    Parse::new(phrases, n)
}

/// Greedy right-to-left parse: each phrase is the longest factor ending at
/// the current position that also occurs completely inside the preceding
/// prefix. References still point strictly left; the phrase count equals
/// the left-to-right greedy count.
pub fn lz_prime(text: &Text) -> Parse {
    let n = text.len();
    if n == 0 {
        return Parse::empty();
    }
    let rev_index = TextIndex::build(&text.reversed());
    let (vals, occ_end) = index::lpf_prime_with_occ_end(&rev_index);
    let mut phrases = Vec::new();
    let mut e = n;
    while e >= 1 {
        let len = vals[e - 1] as usize;
        if len == 0 {
            phrases.push(Phrase::Literal(text.at(e)));
            e -= 1;
        } else {
            let occ_end = occ_end[e - 1] as usize;
            debug_assert!(occ_end < e);
            phrases.push(Phrase::Target {
                ref_pos: occ_end - len + 1,
                len,
            });
            e -= len;
        }
    }
    phrases.reverse();
    Parse::new(phrases, n)
}

/// Greedy left-to-right parse whose phrases copy from occurrences strictly
/// to the right (LNF-driven). Right references can never close a cycle, so
/// the result is always a valid parse.
pub fn lzor(text: &Text) -> Parse {
    let n = text.len();
    if n == 0 {
        return Parse::empty();
    }
    let index = TextIndex::build(text);
    let (lnf, occ) = index::lnf_with_occ(&index);
    let mut phrases = Vec::new();
    let mut i = 1usize;
    while i <= n {
        let len = lnf[i - 1] as usize;
        if len == 0 {
            phrases.push(Phrase::Literal(text.at(i)));
            i += 1;
        } else {
            debug_assert!(occ[i - 1] as usize > i);
            phrases.push(Phrase::Target {
                ref_pos: occ[i - 1] as usize,
                len,
            });
            i += len;
        }
    }
    Parse::new(phrases, n)
}

/// At each position, copy the lcp with the lexicographically preceding
/// suffix from that suffix's start (either side), or emit a literal when
/// the position's suffix is lexicographically first or shares nothing.
pub fn lex_parse(text: &Text, index: &TextIndex) -> Parse {
    debug_assert_eq!(text.len(), index.len());
    let n = text.len();
    let mut phrases = Vec::new();
    let mut i = 1usize;
    while i <= n {
        let r = index.rank_of(i);
        let len = if r > 1 { index.lcp_at(r) } else { 0 };
        if len == 0 {
            phrases.push(Phrase::Literal(text.at(i)));
            i += 1;
        } else {
            phrases.push(Phrase::Target {
                ref_pos: index.sa_at(r - 1),
                len,
            });
            i += len;
        }
    }
    Parse::new(phrases, n)
}

/// The greedy longest-valid-phrase parse, allowed to reference either side.
pub fn lzrr(text: &Text) -> Parse {
    let index = TextIndex::build(text);
    lzrr_with_index(text, &index)
}

/// Same as [`lzrr`] over a prebuilt index.
pub fn lzrr_with_index(text: &Text, index: &TextIndex) -> Parse {
    LzrrSession::new(text, index).run()
}

/// Incremental parser state: the committed phrase prefix, the source forest
/// describing it, and the scratch overlay reused by every extension probe.
pub struct LzrrSession<'a> {
    text: &'a Text,
    index: &'a TextIndex,
    committed: Vec<Phrase>,
    next_start: usize,
    forest: SourceForest,
    overlay: ScratchOverlay,
}

impl<'a> LzrrSession<'a> {
    pub fn new(text: &'a Text, index: &'a TextIndex) -> LzrrSession<'a> {
        assert_eq!(text.len(), index.len(), "index built for a different text");
        let n = text.len();
        LzrrSession {
            text,
            index,
            committed: Vec::new(),
            next_start: 1,
            forest: SourceForest::new(n),
            overlay: ScratchOverlay::new(n),
        }
    }

    /// Start position of the phrase being searched for.
    pub fn next_start(&self) -> usize {
        self.next_start
    }

    pub fn is_done(&self) -> bool {
        self.next_start > self.text.len()
    }

    pub fn committed(&self) -> &[Phrase] {
        &self.committed
    }

    pub fn forest_stats(&self) -> ForestStats {
        self.forest.stats()
    }

    /// Source of `x` under the committed parse.
    pub fn source_of_position(&mut self, x: usize) -> usize {
        self.forest.find_source(x)
    }

    /// Length of the longest valid phrase at the current start with
    /// reference position `j`: extend while the bytes match and the two
    /// frontier positions have different sources under the extension built
    /// so far. The committed forest is left untouched; the overlay is reset
    /// before returning.
    pub fn lf(&mut self, j: usize) -> usize {
        let n = self.text.len();
        assert!(
            j >= 1 && j <= n,
            "reference position {j} out of range 1..={n}"
        );
        assert!(!self.is_done(), "parse already covers the text");
        self.lf_probe(j, usize::MAX)
    }

    fn lf_probe(&mut self, j: usize, cap: usize) -> usize {
        let i = self.next_start;
        let n = self.text.len();
        let bytes = self.text.bytes();
        let mut len = 0usize;
        while len < cap {
            let c = i + len;
            let r = j + len;
            if c > n || r > n || bytes[c - 1] != bytes[r - 1] {
                break;
            }
            let sc = self.overlay.source(&mut self.forest, c);
            let sr = self.overlay.source(&mut self.forest, r);
            if sc == sr {
                break;
            }
            self.overlay.union(&mut self.forest, c, r);
            len += 1;
        }
        self.overlay.reset();
        len
    }

    /// The longest valid phrase following the committed prefix: walk the
    /// sorted-suffix enumeration of the start position, probe each
    /// candidate reference, and stop as soon as the remaining candidates'
    /// lcp cannot beat the best length found. Keeps the first maximal
    /// reference in enumeration order; emits a literal when nothing of
    /// positive length is valid.
    pub fn lp(&mut self) -> Phrase {
        let i = self.next_start;
        assert!(!self.is_done(), "parse already covers the text");
        let index = self.index;
        let mut best_ref = 0usize;
        let mut best_len = 0usize;
        for (j, lcp) in index.neighborhood(i) {
            if lcp <= best_len {
                break;
            }
            let len = self.lf_probe(j, usize::MAX);
            if len > best_len {
                best_ref = j;
                best_len = len;
            }
        }
        if best_len > 0 {
            Phrase::Target {
                ref_pos: best_ref,
                len: best_len,
            }
        } else {
            Phrase::Literal(self.text.at(i))
        }
    }

    /// Append a phrase to the committed parse, updating the forest with one
    /// union per copied character. The phrase must be valid where it lands;
    /// [`LzrrSession::lp`] output always is.
    pub fn commit(&mut self, phrase: Phrase) -> Result<(), CommitError> {
        let i = self.next_start;
        let n = self.text.len();
        match phrase {
            Phrase::Literal(b) => {
                if i > n {
                    return Err(CommitError::PastEnd);
                }
                if self.text.at(i) != b {
                    return Err(CommitError::ContentMismatch { position: i });
                }
                self.committed.push(phrase);
                self.next_start += 1;
            }
            Phrase::Target { ref_pos, len } => {
                if len == 0 {
                    return Err(CommitError::ZeroLength);
                }
                if i + len - 1 > n || ref_pos < 1 || ref_pos + len - 1 > n {
                    return Err(CommitError::PastEnd);
                }
                if ref_pos == i {
                    return Err(CommitError::SelfCopy { start: i });
                }
                let ok = self.lf_probe(ref_pos, len);
                if ok < len {
                    return Err(CommitError::InvalidPhrase { valid_prefix: ok });
                }
                for d in 0..len {
                    self.forest
                        .commit_union(i + d, ref_pos + d)
                        .expect("probed extension cannot merge a set with itself");
                }
                self.committed.push(phrase);
                self.next_start += len;
            }
        }
        Ok(())
    }

    /// One parsing step: find the longest valid phrase and commit it.
    pub fn step(&mut self) -> Option<Phrase> {
        if self.is_done() {
            return None;
        }
        let phrase = self.lp();
        self.commit(phrase)
            .expect("lp produced an uncommittable phrase");
        Some(phrase)
    }

    /// Parse to the end and return the finished parse.
    pub fn run(mut self) -> Parse {
        while self.step().is_some() {}
        self.into_parse()
    }

    /// The parse committed so far (may cover only a prefix).
    pub fn into_parse(self) -> Parse {
        Parse::new(self.committed, self.text.len())
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CommitError {
    #[error("phrase has length zero")]
    ZeroLength,
    #[error("phrase or its reference extends past the end of the text")]
    PastEnd,
    #[error("phrase copies from its own start position {start}")]
    SelfCopy { start: usize },
    #[error("literal does not match the text at position {position}")]
    ContentMismatch { position: usize },
    #[error("phrase is not valid here; only a prefix of length {valid_prefix} extends")]
    InvalidPhrase { valid_prefix: usize },
}

/// Which factorization to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Lz77,
    LzPrime,
    Lzor,
    Lex,
    Lzrr,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Lz77,
        Algorithm::LzPrime,
        Algorithm::Lzor,
        Algorithm::Lex,
        Algorithm::Lzrr,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Lz77 => "lz77",
            Algorithm::LzPrime => "lzp",
            Algorithm::Lzor => "lzor",
            Algorithm::Lex => "lex",
            Algorithm::Lzrr => "lzrr",
        }
    }

    pub fn run(&self, text: &Text) -> Parse {
        match self {
            Algorithm::Lz77 => lz77(text, &TextIndex::build(text)),
            Algorithm::LzPrime => lz_prime(text),
            Algorithm::Lzor => lzor(text),
            Algorithm::Lex => lex_parse(text, &TextIndex::build(text)),
            Algorithm::Lzrr => lzrr(text),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Algorithm, String> {
        match s {
            "lz77" => Ok(Algorithm::Lz77),
            "lzp" => Ok(Algorithm::LzPrime),
            "lzor" => Ok(Algorithm::Lzor),
            "lex" => Ok(Algorithm::Lex),
            "lzrr" => Ok(Algorithm::Lzrr),
            other => Err(format!(
                "unknown algorithm {other:?}; expected one of lz77, lzp, lzor, lex, lzrr"
            )),
        }
    }
}

impl Serialize for Algorithm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Result of running an algorithm on both the text and its reversal.
#[derive(Debug, Clone)]
pub struct BestOfReverse {
    pub parse: Parse,
    /// true when the parse describes the reversed text
    pub reversed: bool,
}

/// Run `algo` on the text and on its reversal and keep the direction with
/// fewer phrases; ties prefer the forward direction.
pub fn best_of_reverse(algo: Algorithm, text: &Text) -> BestOfReverse {
    let forward = algo.run(text);
    let backward = algo.run(&text.reversed());
    if backward.phrase_count() < forward.phrase_count() {
        BestOfReverse {
            parse: backward,
            reversed: true,
        }
    } else {
        BestOfReverse {
            parse: forward,
            reversed: false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{decode, validate};

    fn lengths(p: &Parse) -> Vec<usize> {
        p.phrases().iter().map(Phrase::len).collect()
    }

    #[test]
    fn lz77_golden_lengths() {
        let t = Text::from("abababaabb");
        let p = lz77(&t, &TextIndex::build(&t));
        assert_eq!(lengths(&p), vec![1, 1, 5, 2, 1]);
        assert_eq!(p.phrase_count(), 5);
        assert!(p.phrases()[0].is_literal() && p.phrases()[1].is_literal());
        assert_eq!(decode(&p).unwrap(), t);
    }

    #[test]
    fn lz77_run_of_as() {
        let t = Text::from("aaaa");
        let p = lz77(&t, &TextIndex::build(&t));
        assert_eq!(
            p.phrases(),
            &[Phrase::Literal(b'a'), Phrase::Target { ref_pos: 1, len: 3 }]
        );
    }

    #[test]
    fn all_distinct_gives_literals() {
        let t = Text::from("abc");
        let index = TextIndex::build(&t);
        for p in [
            lz77(&t, &index),
            lz_prime(&t),
            lzor(&t),
            lex_parse(&t, &index),
            lzrr(&t),
        ] {
            assert_eq!(p.phrase_count(), 3);
            assert!(p.phrases().iter().all(Phrase::is_literal));
        }
    }

    #[test]
    fn lz_prime_run_of_as() {
        let p = lz_prime(&Text::from("aaaa"));
        assert_eq!(p.phrase_count(), 2);
        assert_eq!(decode(&p).unwrap(), Text::from("aaaa"));
    }

    #[test]
    fn lzor_run_of_as() {
        let p = lzor(&Text::from("aaaa"));
        assert_eq!(
            p.phrases(),
            &[Phrase::Target { ref_pos: 2, len: 3 }, Phrase::Literal(b'a')]
        );
    }

    #[test]
    fn lex_parse_run_of_as() {
        let t = Text::from("aaaa");
        let p = lex_parse(&t, &TextIndex::build(&t));
        assert_eq!(p.phrase_count(), 2);
        assert_eq!(validate(&p, &t), Ok(()));
    }

    #[test]
    fn lf_golden_vector() {
        let t = Text::from("abababaababa");
        let index = TextIndex::build(&t);
        let mut session = LzrrSession::new(&t, &index);
        session
            .commit(Phrase::Target { ref_pos: 3, len: 5 })
            .unwrap();
        let got: Vec<usize> = (1..=12).map(|j| session.lf(j)).collect();
        assert_eq!(got, vec![0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 2, 0]);
    }

    #[test]
    fn lf_of_self_is_zero() {
        let t = Text::from("aaaa");
        let index = TextIndex::build(&t);
        let mut session = LzrrSession::new(&t, &index);
        assert_eq!(session.lf(1), 0);
    }

    #[test]
    fn lf_overlapping_right_reference() {
        let t = Text::from("aaaa");
        let index = TextIndex::build(&t);
        let mut session = LzrrSession::new(&t, &index);
        assert_eq!(session.lf(2), 3);
    }

    #[test]
    fn lp_golden_first_and_second_phrase() {
        let t = Text::from("abababaababa");
        let index = TextIndex::build(&t);
        let mut session = LzrrSession::new(&t, &index);
        let first = session.lp();
        assert_eq!(first, Phrase::Target { ref_pos: 3, len: 5 });
        session.commit(first).unwrap();
        let second = session.lp();
        match second {
            Phrase::Target { ref_pos, len } => {
                assert_eq!(len, 2);
                assert!(ref_pos == 9 || ref_pos == 11, "ref_pos {ref_pos}");
            }
            other => panic!("expected a target, got {other:?}"),
        }
    }

    #[test]
    fn lp_single_character() {
        let t = Text::from("x");
        let index = TextIndex::build(&t);
        let mut session = LzrrSession::new(&t, &index);
        assert_eq!(session.lp(), Phrase::Literal(b'x'));
    }

    #[test]
    fn lzrr_round_trips() {
        for s in ["ababbab", "abababaabb", "abababaababa", "aaaa", "x", ""] {
            let t = Text::from(s);
            let p = lzrr(&t);
            assert_eq!(validate(&p, &t), Ok(()), "string {s}");
            assert_eq!(decode(&p).unwrap(), t, "string {s}");
        }
    }

    #[test]
    fn empty_text_gives_empty_parse_everywhere() {
        let t = Text::from("");
        for algo in Algorithm::ALL {
            assert_eq!(algo.run(&t).phrase_count(), 0, "{algo}");
        }
    }

    #[test]
    fn best_of_reverse_prefers_forward_on_ties() {
        let t = Text::from("abcba");
        let best = best_of_reverse(Algorithm::Lz77, &t);
        assert!(!best.reversed);
        let fwd = Algorithm::Lz77.run(&t);
        let rev = Algorithm::Lz77.run(&t.reversed());
        assert_eq!(
            best.parse.phrase_count(),
            fwd.phrase_count().min(rev.phrase_count())
        );
    }

    #[test]
    fn commit_rejects_bad_phrases() {
        let t = Text::from("abab");
        let index = TextIndex::build(&t);
        let mut session = LzrrSession::new(&t, &index);
        assert_eq!(
            session.commit(Phrase::Target { ref_pos: 1, len: 2 }),
            Err(CommitError::SelfCopy { start: 1 })
        );
        assert_eq!(
            session.commit(Phrase::Target { ref_pos: 2, len: 9 }),
            Err(CommitError::PastEnd)
        );
        assert_eq!(
            session.commit(Phrase::Literal(b'z')),
            Err(CommitError::ContentMismatch { position: 1 })
        );
        // "ab" at 1 copying from 3 is fine
        assert_eq!(
            session.commit(Phrase::Target { ref_pos: 3, len: 2 }),
            Ok(())
        );
        // but now 3 cannot copy back from 1
        assert_eq!(
            session.commit(Phrase::Target { ref_pos: 1, len: 2 }),
            Err(CommitError::InvalidPhrase { valid_prefix: 0 })
        );
    }

    #[test]
    fn algorithm_names_round_trip() {
        for algo in Algorithm::ALL {
            assert_eq!(algo.name().parse::<Algorithm>().unwrap(), algo);
        }
        assert!("lz78".parse::<Algorithm>().is_err());
    }
}
