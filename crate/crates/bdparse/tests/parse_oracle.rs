//! The memoized validator against the step-by-step reference-iteration
//! oracle, exhaustively over small texts and parses, and the cycle
//! characterization of invalidity.

mod common;

use bdparse::{decode, source_of, validate, Parse, ParseError, Phrase, Text};
use bdparse_oracles::{self as oracle, OParse, OPhrase};
use rand_chacha::rand_core::RngCore;

fn to_oracle(parse: &Parse) -> OParse {
    OParse {
        phrases: parse
            .phrases()
            .iter()
            .map(|ph| match *ph {
                Phrase::Literal(b) => OPhrase::Lit(b),
                Phrase::Target { ref_pos, len } => OPhrase::Tgt { t: ref_pos, len },
            })
            .collect(),
        n: parse.text_len(),
    }
}

/// Enumerate every structurally legal parse of `text` with at most
/// `max_phrases` phrases covering the whole text, and hand each to `visit`.
fn for_each_legal_parse(text: &[u8], max_phrases: usize, visit: &mut dyn FnMut(&Parse)) {
    fn rec(
        text: &[u8],
        start: usize,
        left: usize,
        acc: &mut Vec<Phrase>,
        visit: &mut dyn FnMut(&Parse),
    ) {
        let n = text.len();
        if start > n {
            visit(&Parse::new(acc.clone(), n));
            return;
        }
        if left == 0 {
            return;
        }
        acc.push(Phrase::Literal(text[start - 1]));
        rec(text, start + 1, left - 1, acc, visit);
        acc.pop();
        for len in 1..=(n - start + 1) {
            for t in 1..=n {
                if t == start || t + len - 1 > n {
                    continue;
                }
                if text[start - 1..start + len - 1] != text[t - 1..t + len - 1] {
                    continue;
                }
                acc.push(Phrase::Target { ref_pos: t, len });
                rec(text, start + len, left - 1, acc, visit);
                acc.pop();
            }
        }
    }
    let mut acc = Vec::new();
    rec(text, 1, max_phrases, &mut acc, visit);
}

#[test]
fn validator_agrees_with_iteration_oracle_exhaustively() {
    let mut parses = 0u64;
    for t in common::exhaustive_binary(10) {
        let text = Text::from(t.as_slice());
        for_each_legal_parse(&t, 4, &mut |parse| {
            parses += 1;
            let expected = oracle::valid_naive(&to_oracle(parse));
            match validate(parse, &text) {
                Ok(()) => assert!(
                    expected,
                    "validator accepted an invalid parse {parse:?} of {:?}",
                    String::from_utf8_lossy(&t)
                ),
                Err(ParseError::Cyclic { witness }) => {
                    assert!(
                        !expected,
                        "validator rejected a valid parse {parse:?} of {:?}",
                        String::from_utf8_lossy(&t)
                    );
                    // the witness really does sit on a cycle: iterating the
                    // reference map from it never reaches a character
                    assert_eq!(oracle::source_naive(&to_oracle(parse), witness), None);
                }
                Err(other) => panic!("structurally legal parse reported {other}"),
            }
        });
    }
    assert!(parses > 100_000, "enumeration looks too small: {parses}");
}

#[test]
fn decode_and_sources_agree_with_oracle_on_valid_parses() {
    for t in common::exhaustive_binary(8) {
        let text = Text::from(t.as_slice());
        for_each_legal_parse(&t, 3, &mut |parse| {
            let op = to_oracle(parse);
            if !oracle::valid_naive(&op) {
                return;
            }
            assert_eq!(decode(parse).unwrap(), text, "decode of {parse:?}");
            for x in 1..=parse.text_len() {
                assert_eq!(
                    source_of(parse, x).unwrap(),
                    oracle::source_naive(&op, x).unwrap(),
                    "source of {x} in {parse:?}"
                );
            }
        });
    }
}

#[test]
fn partial_parses_validate_like_their_completion() {
    let mut rng = common::rng(0xBB);
    for case in 0..300 {
        let t = common::random_text(&mut rng, 40, [2, 4][case % 2]);
        let text = Text::from(t.as_slice());
        let n = t.len();
        // random structurally legal partial parse
        let mut phrases = Vec::new();
        let mut s = 1usize;
        while s <= n && !rng.next_u32().is_multiple_of(4) {
            let mut placed = false;
            if rng.next_u32().is_multiple_of(2) {
                for _ in 0..8 {
                    let t0 = rng.next_u32() as usize % n + 1;
                    let max = (n - s + 1).min(n - t0 + 1);
                    if t0 == s || max == 0 {
                        continue;
                    }
                    let len = rng.next_u32() as usize % max + 1;
                    if text.bytes()[s - 1..s + len - 1] == text.bytes()[t0 - 1..t0 + len - 1] {
                        phrases.push(Phrase::Target { ref_pos: t0, len });
                        s += len;
                        placed = true;
                        break;
                    }
                }
            }
            if !placed {
                phrases.push(Phrase::Literal(text.at(s)));
                s += 1;
            }
        }
        let parse = Parse::new(phrases, n);
        let expected = oracle::valid_naive(&to_oracle(&parse));
        assert_eq!(validate(&parse, &text).is_ok(), expected, "parse {parse:?}");
    }
}

#[test]
fn witness_is_smallest_position_on_a_cycle() {
    // 1 -> 3 -> 1 and 2 -> 4 -> 2: the reported cycle contains its smallest
    // member, which for this parse is 1 or 2 depending on traversal; the
    // contract is that the witness lies on some cycle and is its minimum.
    let t = Text::from("ababbab");
    let parse = Parse::complete(vec![
        Phrase::Target { ref_pos: 3, len: 2 },
        Phrase::Target { ref_pos: 1, len: 2 },
        Phrase::Literal(b'b'),
        Phrase::Literal(b'a'),
        Phrase::Literal(b'b'),
    ]);
    match validate(&parse, &t) {
        Err(ParseError::Cyclic { witness }) => assert_eq!(witness, 1),
        other => panic!("expected cycle, got {other:?}"),
    }
}
