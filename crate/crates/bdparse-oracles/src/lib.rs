//! Naive reference implementations used as oracles by the bdparse test
//! suites. Everything here favors obviousness over speed: suffixes are
//! sorted by comparison, lcp values are found by scanning, parse validity
//! is decided by iterating the reference map position by position.
//!
//! Positions are 1-based throughout, matching the bdparse public API.

/// Suffix array by comparison sort. Returns 1-based start positions.
pub fn suffix_array_naive(text: &[u8]) -> Vec<usize> {
    let n = text.len();
    let mut sa: Vec<usize> = (1..=n).collect();
    sa.sort_by(|&a, &b| text[a - 1..].cmp(&text[b - 1..]));
    sa
}

/// Inverse permutation of a 1-based suffix array: `isa[p-1]` is the rank of
/// the suffix starting at position `p`.
pub fn inverse_naive(sa: &[usize]) -> Vec<usize> {
    let mut isa = vec![0usize; sa.len()];
    for (r, &p) in sa.iter().enumerate() {
        isa[p - 1] = r + 1;
    }
    isa
}

/// Length of the longest common prefix of the suffixes at 1-based positions
/// `i` and `j`, found by scanning.
pub fn lcp_naive(text: &[u8], i: usize, j: usize) -> usize {
    text[i - 1..]
        .iter()
        .zip(text[j - 1..].iter())
        .take_while(|(a, b)| a == b)
        .count()
}

/// LCP array in rank order: slot `r-1` holds lcp(sa[r], sa[r-1]), slot 0 is 0.
pub fn lcp_array_naive(text: &[u8], sa: &[usize]) -> Vec<usize> {
    let mut lcp = vec![0usize; sa.len()];
    for r in 1..sa.len() {
        lcp[r] = lcp_naive(text, sa[r], sa[r - 1]);
    }
    lcp
}

/// Longest previous factor: `lpf[i-1]` is the maximum lcp(i, p) over p < i.
pub fn lpf_naive(text: &[u8]) -> Vec<usize> {
    let n = text.len();
    (1..=n)
        .map(|i| (1..i).map(|p| lcp_naive(text, i, p)).max().unwrap_or(0))
        .collect()
}

/// Longest next factor: `lnf[i-1]` is the maximum length l such that
/// T[i..i+l-1] occurs starting at some position j > i.
pub fn lnf_naive(text: &[u8]) -> Vec<usize> {
    let n = text.len();
    (1..=n)
        .map(|i| {
            (i + 1..=n)
                .map(|j| lcp_naive(text, i, j))
                .max()
                .unwrap_or(0)
        })
        .collect()
}

/// Longest previous factor ending at each position: `lpf_prime[i-1]` is the
/// maximum l such that T[i-l+1..i] occurs inside T[1..i-1], by brute-force
/// substring search over all (occurrence, length) pairs.
pub fn lpf_prime_naive(text: &[u8]) -> Vec<usize> {
    let n = text.len();
    let mut out = vec![0usize; n];
    for i in 1..=n {
        'len: for l in (1..=i).rev() {
            let factor = &text[i - l..i];
            // occurrence must end at i-1 or earlier
            for q in 1..=i.saturating_sub(l) {
                if &text[q - 1..q - 1 + l] == factor {
                    out[i - 1] = l;
                    break 'len;
                }
            }
        }
    }
    out
}

/// A phrase in the oracle's own parse model, so oracle checks never depend
/// on the implementation under test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OPhrase {
    Lit(u8),
    Tgt { t: usize, len: usize },
}

impl OPhrase {
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        match self {
            OPhrase::Lit(_) => 1,
            OPhrase::Tgt { len, .. } => *len,
        }
    }
}

/// A bidirectional parse covering a prefix of a text of length `n`.
/// Positions past the covered prefix are implicit character phrases.
#[derive(Debug, Clone)]
pub struct OParse {
    pub phrases: Vec<OPhrase>,
    pub n: usize,
}

impl OParse {
    pub fn covered(&self) -> usize {
        self.phrases.iter().map(OPhrase::len).sum()
    }

    /// For every position, the position it references, or None for a
    /// character phrase (explicit or implicit). This is the g^0 map.
    pub fn reference_map(&self) -> Vec<Option<usize>> {
        let mut g0 = vec![None; self.n];
        let mut s = 1usize;
        for ph in &self.phrases {
            if let OPhrase::Tgt { t, len } = ph {
                for d in 0..*len {
                    g0[s + d - 1] = Some(t + d);
                }
            }
            s += ph.len();
        }
        g0
    }
}

/// Validity by iterating the reference map: a parse is valid iff every
/// position reaches a character phrase within n steps.
pub fn valid_naive(parse: &OParse) -> bool {
    let g0 = parse.reference_map();
    for start in 1..=parse.n {
        let mut y = start;
        let mut steps = 0usize;
        while let Some(z) = g0[y - 1] {
            y = z;
            steps += 1;
            if steps > parse.n {
                return false;
            }
        }
    }
    true
}

/// The character-phrase position ultimately reached from `x`, or None when
/// `x` sits on a reference cycle.
pub fn source_naive(parse: &OParse, x: usize) -> Option<usize> {
    let g0 = parse.reference_map();
    let mut y = x;
    let mut steps = 0usize;
    while let Some(z) = g0[y - 1] {
        y = z;
        steps += 1;
        if steps > parse.n {
            return None;
        }
    }
    Some(y)
}

/// Decode a complete, valid parse by chasing references per position.
/// Returns None on cycles or structural problems.
pub fn decode_naive(parse: &OParse) -> Option<Vec<u8>> {
    if parse.covered() != parse.n {
        return None;
    }
    let mut lit = vec![None; parse.n];
    let mut s = 1usize;
    for ph in &parse.phrases {
        if let OPhrase::Lit(b) = ph {
            lit[s - 1] = Some(*b);
        }
        s += ph.len();
    }
    let mut out = Vec::with_capacity(parse.n);
    for x in 1..=parse.n {
        let src = source_naive(parse, x)?;
        out.push(lit[src - 1]?);
    }
    Some(out)
}

/// Longest valid extension after a committed phrase prefix: try every
/// reference position and every extension length, and return the longest
/// length whose appended parse is still valid under the iteration oracle
/// (0 when only a character phrase fits). The greedy parse is not unique —
/// the reference chosen for one phrase changes which later extensions are
/// valid — so the oracle replays a given prefix instead of committing its
/// own choices.
pub fn max_valid_extension(text: &[u8], committed: &[OPhrase]) -> usize {
    let n = text.len();
    let i: usize = 1 + committed.iter().map(OPhrase::len).sum::<usize>();
    assert!(i <= n, "prefix already covers the text");
    let mut best = 0usize;
    for j in 1..=n {
        if j == i {
            continue;
        }
        let mut l = 0usize;
        while i + l <= n && j + l <= n && text[i + l - 1] == text[j + l - 1] {
            l += 1;
            let mut cand = committed.to_vec();
            cand.push(OPhrase::Tgt { t: j, len: l });
            if valid_naive(&OParse { phrases: cand, n }) && l > best {
                best = l;
            }
        }
    }
    best
}

/// LZ77 phrase lengths straight from the naive LPF array.
pub fn lz77_lengths_naive(text: &[u8]) -> Vec<usize> {
    let lpf = lpf_naive(text);
    let mut lengths = Vec::new();
    let mut i = 1usize;
    while i <= text.len() {
        let l = lpf[i - 1].max(1);
        lengths.push(l);
        i += l;
    }
    lengths
}

/// Disjoint sets over 1..=n kept as flat label arrays, with the source of
/// each set tracked explicitly. Every operation is O(n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaiveForest {
    label: Vec<usize>,
    source: Vec<usize>,
}

impl NaiveForest {
    pub fn new(n: usize) -> Self {
        NaiveForest {
            label: (0..n).collect(),
            source: (1..=n).collect(),
        }
    }

    pub fn find_source(&self, x: usize) -> usize {
        self.source[self.label[x - 1]]
    }

    /// Merge the sets of `copied` and `referenced`; the merged set keeps the
    /// source of the referenced side. Returns false when both positions are
    /// already in the same set.
    pub fn union(&mut self, copied: usize, referenced: usize) -> bool {
        let a = self.label[copied - 1];
        let b = self.label[referenced - 1];
        if a == b {
            return false;
        }
        for l in self.label.iter_mut() {
            if *l == a {
                *l = b;
            }
        }
        true
    }

    /// All sets as (source, members) pairs, for uniqueness checks.
    pub fn sets(&self) -> Vec<(usize, Vec<usize>)> {
        let mut out: Vec<(usize, Vec<usize>)> = Vec::new();
        let mut seen: Vec<Option<usize>> = vec![None; self.label.len()];
        for x in 1..=self.label.len() {
            let l = self.label[x - 1];
            match seen[l] {
                Some(idx) => out[idx].1.push(x),
                None => {
                    seen[l] = Some(out.len());
                    out.push((self.source[l], vec![x]));
                }
            }
        }
        out
    }
}
