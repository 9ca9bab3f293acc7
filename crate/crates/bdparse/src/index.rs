//! Suffix-array machinery: SA/ISA/LCP/LPF over a text, the incremental
//! sorted-suffix enumeration around a position, and the derived factor
//! arrays used by the right-to-left and right-reference parsers.
//!
//! Storage convention: `Vec` slot `k-1` belongs to 1-based rank or position
//! `k`, and every stored position or rank value is itself 1-based. The only
//! 0-based code is the SA-IS construction, adapted in `build`.

use crate::sais;
use crate::text::Text;

#[derive(Debug, Clone)]
pub struct TextIndex {
    n: usize,
    sa: Vec<u32>,
    isa: Vec<u32>,
    lcp: Vec<u32>,
    lpf: Vec<u32>,
}

impl TextIndex {
    /// Build all arrays. Suffix sorting is SA-IS, the LCP array is Kasai's
    /// scan, LPF is the previous-smaller-position stack sweep over (SA, LCP).
    pub fn build(text: &Text) -> TextIndex {
        let bytes = text.bytes();
        let n = bytes.len();
        assert!(
            n < u32::MAX as usize - 1,
            "text too large for u32 positions"
        );
        let sa0 = sais::suffix_array(bytes);
        let (isa0, lcp) = kasai(bytes, &sa0);
        let sa: Vec<u32> = sa0.iter().map(|&p| p + 1).collect();
        let isa: Vec<u32> = isa0.iter().map(|&r| r + 1).collect();
        let lpf = factor_sweep(&sa, &lcp, Side::Previous).0;
        TextIndex {
            n,
            sa,
            isa,
            lcp,
            lpf,
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Suffix array in rank order; values are 1-based start positions.
    pub fn sa(&self) -> &[u32] {
        &self.sa
    }

    /// Inverse suffix array in position order; values are 1-based ranks.
    pub fn isa(&self) -> &[u32] {
        &self.isa
    }

    /// LCP array in rank order: slot r-1 holds lcp(sa(r), sa(r-1)), slot 0 is 0.
    pub fn lcp(&self) -> &[u32] {
        &self.lcp
    }

    /// Longest previous factor per position.
    pub fn lpf(&self) -> &[u32] {
        &self.lpf
    }

    pub fn sa_at(&self, rank: usize) -> usize {
        self.sa[rank - 1] as usize
    }

    pub fn rank_of(&self, pos: usize) -> usize {
        self.isa[pos - 1] as usize
    }

    pub fn lcp_at(&self, rank: usize) -> usize {
        self.lcp[rank - 1] as usize
    }

    pub fn lpf_at(&self, pos: usize) -> usize {
        self.lpf[pos - 1] as usize
    }

    /// lcp of the suffixes at positions `i` and `j`, via the range minimum
    /// of the LCP array between their ranks.
    pub fn lcp_of(&self, i: usize, j: usize) -> usize {
        assert!(
            i >= 1 && i <= self.n && j >= 1 && j <= self.n,
            "position out of range"
        );
        if i == j {
            return self.n - i + 1;
        }
        let (ri, rj) = (self.rank_of(i), self.rank_of(j));
        let (lo, hi) = if ri < rj { (ri, rj) } else { (rj, ri) };
        self.lcp[lo..hi].iter().copied().min().unwrap_or(0) as usize
    }

    /// Incremental enumeration of all positions ordered by non-increasing
    /// lcp with the suffix at `k`, starting with `k` itself. Each step costs
    /// O(1): the enumerator widens a window around rank(k) in the suffix
    /// array and derives lcp values from the window edges.
    pub fn neighborhood(&self, k: usize) -> SuffixNeighborhood<'_> {
        assert!(k >= 1 && k <= self.n, "position out of range");
        let rank = self.rank_of(k);
        SuffixNeighborhood {
            index: self,
            origin: k,
            lo: rank,
            hi: rank,
            left_lcp: self.n - k + 1,
            right_lcp: self.n - k + 1,
            started: false,
        }
    }
}

/// Cursor state for the sorted-suffix enumeration around one origin.
/// The window [lo..hi] of ranks has been yielded; `left_lcp`/`right_lcp`
/// cache the lcp between the origin and the window edge suffixes.
pub struct SuffixNeighborhood<'a> {
    index: &'a TextIndex,
    origin: usize,
    lo: usize,
    hi: usize,
    left_lcp: usize,
    right_lcp: usize,
    started: bool,
}

impl Iterator for SuffixNeighborhood<'_> {
    /// (suffix position, lcp with the origin suffix)
    type Item = (usize, usize);

    fn next(&mut self) -> Option<(usize, usize)> {
        let idx = self.index;
        if !self.started {
            self.started = true;
            return Some((self.origin, idx.len() - self.origin + 1));
        }
        let can_left = self.lo > 1;
        let can_right = self.hi < idx.len();
        if !can_left && !can_right {
            return None;
        }
        let left = can_left.then(|| self.left_lcp.min(idx.lcp_at(self.lo)));
        let right = can_right.then(|| self.right_lcp.min(idx.lcp_at(self.hi + 1)));
        // On ties take the left (smaller-rank) neighbor first.
        let take_left = match (left, right) {
            (Some(l), Some(r)) => l >= r,
            (Some(_), None) => true,
            _ => false,
        };
        if take_left {
            self.lo -= 1;
            self.left_lcp = left.unwrap();
            Some((idx.sa_at(self.lo), self.left_lcp))
        } else {
            self.hi += 1;
            self.right_lcp = right.unwrap();
            Some((idx.sa_at(self.hi), self.right_lcp))
        }
    }
}

/// Longest factor ending at each position that also occurs fully inside the
/// preceding prefix: `lpf_prime(t)[i-1]` is the longest l with T[i-l+1..i]
/// occurring in T[1..i-1]. Computed through the reversal identity with LNF.
pub fn lpf_prime(text: &Text) -> Vec<u32> {
    let n = text.len();
    let rev_index = TextIndex::build(&text.reversed());
    let lnf_rev = factor_sweep(&rev_index.sa, &rev_index.lcp, Side::Next).0;
    (1..=n).map(|x| lnf_rev[n - x]).collect()
}

/// Longest prefix of each suffix that reoccurs starting strictly later:
/// `lnf(t)[i-1]` is the maximum lcp(i, j) over j > i.
pub fn lnf(text: &Text) -> Vec<u32> {
    let index = TextIndex::build(text);
    factor_sweep(&index.sa, &index.lcp, Side::Next).0
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum Side {
    /// max lcp against smaller positions (previous occurrences)
    Previous,
    /// max lcp against larger positions (subsequent occurrences)
    Next,
}

/// One pass over the suffix array with a monotone stack, computing for each
/// position the maximum lcp against positions on one side, together with a
/// position attaining it (slot value 0 = none). The attaining position is
/// always one of the two nearest suffix-array rank neighbors on that side;
/// on ties the smaller-rank neighbor wins.
pub(crate) fn factor_sweep(sa: &[u32], lcp: &[u32], side: Side) -> (Vec<u32>, Vec<u32>) {
    let n = sa.len();
    let mut vals = vec![0u32; n];
    let mut occ = vec![0u32; n];
    // (position, lcp with the stack entry below it)
    let mut stack: Vec<(u32, u32)> = Vec::new();
    let sentinel = match side {
        Side::Previous => 0u32,
        Side::Next => n as u32 + 1,
    };
    for r in 1..=n + 1 {
        let (pos, mut l) = if r <= n {
            (sa[r - 1], lcp[r - 1])
        } else {
            (sentinel, 0)
        };
        while let Some(&(top_pos, top_l)) = stack.last() {
            let pop = match side {
                Side::Previous => pos < top_pos,
                Side::Next => pos > top_pos,
            };
            if !pop {
                break;
            }
            stack.pop();
            let slot = top_pos as usize - 1;
            if top_l >= l {
                vals[slot] = top_l;
                if top_l > 0 {
                    occ[slot] = stack
                        .last()
                        .expect("positive lcp requires a neighbor below")
                        .0;
                }
            } else {
                vals[slot] = l;
                occ[slot] = pos;
            }
            l = l.min(top_l);
        }
        if r <= n {
            stack.push((pos, l));
        }
    }
    (vals, occ)
}

/// LPF with a previous occurrence for each position, used by the
/// left-to-right greedy parser.
pub(crate) fn lpf_with_occ(index: &TextIndex) -> (Vec<u32>, Vec<u32>) {
    factor_sweep(&index.sa, &index.lcp, Side::Previous)
}

/// LNF with a subsequent occurrence for each position.
pub(crate) fn lnf_with_occ(index: &TextIndex) -> (Vec<u32>, Vec<u32>) {
    factor_sweep(&index.sa, &index.lcp, Side::Next)
}

/// LPF' values together with the end position of a previous occurrence of
/// the factor, both indexed by the factor's end position.
pub(crate) fn lpf_prime_with_occ_end(rev_index: &TextIndex) -> (Vec<u32>, Vec<u32>) {
    let n = rev_index.len();
    let (lnf_rev, occ_rev) = lnf_with_occ(rev_index);
    let mut vals = vec![0u32; n];
    let mut occ_end = vec![0u32; n];
    for e in 1..=n {
        let ri = n - e; // slot of reversed position n - e + 1
        vals[e - 1] = lnf_rev[ri];
        if occ_rev[ri] != 0 {
            occ_end[e - 1] = (n as u32) - occ_rev[ri] + 1;
        }
    }
    (vals, occ_end)
}

fn kasai(text: &[u8], sa0: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let n = text.len();
    let mut isa0 = vec![0u32; n];
    for (r, &p) in sa0.iter().enumerate() {
        isa0[p as usize] = r as u32;
    }
    let mut lcp = vec![0u32; n];
    let mut k = 0usize;
    for i in 0..n {
        let r = isa0[i] as usize;
        if r > 0 {
            let j = sa0[r - 1] as usize;
            while i + k < n && j + k < n && text[i + k] == text[j + k] {
                k += 1;
            }
            lcp[r] = k as u32;
            k = k.saturating_sub(1);
        } else {
            k = 0;
        }
    }
    (isa0, lcp)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(s: &str) -> TextIndex {
        TextIndex::build(&Text::from(s))
    }

    #[test]
    fn golden_arrays() {
        let index = idx("abababaabb");
        assert_eq!(index.sa(), &[7, 5, 3, 1, 8, 10, 6, 4, 2, 9]);
        assert_eq!(index.isa(), &[4, 9, 3, 8, 2, 7, 1, 5, 10, 6]);
        assert_eq!(index.lcp(), &[0, 1, 3, 5, 2, 0, 1, 2, 4, 1]);
        assert_eq!(index.lpf(), &[0, 0, 5, 4, 3, 2, 1, 2, 1, 1]);
    }

    #[test]
    fn empty_text() {
        let index = idx("");
        assert_eq!(index.len(), 0);
        assert!(index.sa().is_empty());
        assert!(index.isa().is_empty());
        assert!(index.lcp().is_empty());
        assert!(index.lpf().is_empty());
    }

    #[test]
    fn run_of_three() {
        let index = idx("aaa");
        assert_eq!(index.sa(), &[3, 2, 1]);
        assert_eq!(index.lcp(), &[0, 1, 2]);
        assert_eq!(index.lpf(), &[0, 2, 1]);
    }

    #[test]
    fn lcp_of_examples() {
        let index = idx("abababaabb");
        assert_eq!(index.lcp_of(1, 3), 5);
        assert_eq!(index.lcp_of(1, 7), 1);
        assert_eq!(index.lcp_of(4, 4), 7);
        assert_eq!(index.lcp_of(1, 1), 10);
    }

    #[test]
    fn neighborhood_matches_printed_order() {
        let index = idx("abababaabb");
        let yields: Vec<(usize, usize)> = index.neighborhood(1).collect();
        let positions: Vec<usize> = yields.iter().map(|&(p, _)| p).collect();
        let lcps: Vec<usize> = yields.iter().map(|&(_, l)| l).collect();
        assert_eq!(positions, vec![1, 3, 5, 8, 7, 10, 6, 4, 2, 9]);
        assert_eq!(lcps, vec![10, 5, 3, 2, 1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn neighborhood_first_yield_is_self() {
        let index = idx("ababbab");
        for k in 1..=7 {
            assert_eq!(index.neighborhood(k).next(), Some((k, 7 - k + 1)));
        }
    }

    #[test]
    fn neighborhood_is_fused_at_end() {
        let index = idx("ab");
        let mut it = index.neighborhood(2);
        assert!(it.next().is_some());
        assert!(it.next().is_some());
        assert_eq!(it.next(), None);
        assert_eq!(it.next(), None);
    }

    #[test]
    fn lnf_examples() {
        assert_eq!(lnf(&Text::from("aa")), vec![1, 0]);
        // brute-force over all (i, l): max lcp(i, j) over j > i
        assert_eq!(lnf(&Text::from("ababbab")), vec![2, 3, 2, 1, 1, 0, 0]);
        assert_eq!(lnf(&Text::from("aaaa")), vec![3, 2, 1, 0]);
    }

    #[test]
    fn lpf_prime_examples() {
        assert_eq!(lpf_prime(&Text::from("abab")), vec![0, 0, 1, 2]);
        assert_eq!(lpf_prime(&Text::from("aaaa")), vec![0, 1, 2, 3]);
        assert_eq!(lpf_prime(&Text::from("")), Vec::<u32>::new());
    }

    #[test]
    fn reversal_identity() {
        for s in ["ababbab", "abababaabb", "aaa", "abcabc"] {
            let t = Text::from(s);
            let n = t.len();
            let ln = lnf(&t);
            let lp = lpf_prime(&t.reversed());
            for i in 1..=n {
                assert_eq!(ln[i - 1], lp[n - i], "string {s} position {i}");
            }
        }
    }
}
