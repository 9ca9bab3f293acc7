//! Disjoint sets over text positions where each set is identified by its
//! source: the position whose phrase is still an explicit character. The
//! committed forest mirrors the parse built so far; the scratch overlay lets
//! the extension search ask source questions about a tentative next phrase
//! without mutating the committed forest.

use thiserror::Error;

const UNSET: u32 = u32::MAX;

#[derive(Debug, Error, PartialEq, Eq)]
#[error(
    "positions {copied} and {referenced} already share source {shared_source}; \
     uniting them would create a reference cycle"
)]
pub struct CycleUnion {
    pub copied: usize,
    pub referenced: usize,
    /// the source both sets already resolve to
    pub shared_source: usize,
}

/// Union-find with union by rank and path compression. Every set carries
/// exactly one source position; a freshly built forest has n singleton sets,
/// each its own source.
#[derive(Debug, Clone)]
pub struct SourceForest {
    parent: Vec<u32>,
    rank: Vec<u8>,
    source: Vec<u32>,
    n: usize,
    stats: ForestStats,
}

/// Operation counters, kept for the amortized-cost checks.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ForestStats {
    pub finds: u64,
    pub unions: u64,
    /// parent hops walked before compression, across all finds
    pub parent_steps: u64,
}

impl SourceForest {
    pub fn new(n: usize) -> SourceForest {
        assert!(
            n < u32::MAX as usize - 1,
            "too many positions for u32 storage"
        );
        SourceForest {
            parent: (0..=n as u32).collect(),
            rank: vec![0; n + 1],
            source: (0..=n as u32).collect(),
            n,
            stats: ForestStats::default(),
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn stats(&self) -> ForestStats {
        self.stats
    }

    fn check(&self, x: usize) {
        assert!(
            x >= 1 && x <= self.n,
            "position {x} out of range 1..={}",
            self.n
        );
    }

    fn find_root(&mut self, x: usize) -> usize {
        self.stats.finds += 1;
        let mut r = x;
        while self.parent[r] as usize != r {
            self.stats.parent_steps += 1;
            r = self.parent[r] as usize;
        }
        let mut c = x;
        while self.parent[c] as usize != r {
            let next = self.parent[c] as usize;
            self.parent[c] = r as u32;
            c = next;
        }
        r
    }

    /// The source position of the set containing `x`; equals `x` exactly
    /// when the character at `x` is still an explicit character phrase.
    pub fn find_source(&mut self, x: usize) -> usize {
        self.check(x);
        let root = self.find_root(x);
        self.source[root] as usize
    }

    /// Record that `copied` now references through `referenced`: the two
    /// sets merge and keep the source of `referenced`'s set. Uniting two
    /// positions that already share a source is exactly the condition that
    /// would close a reference cycle, so it is rejected rather than ignored.
    pub fn commit_union(&mut self, copied: usize, referenced: usize) -> Result<(), CycleUnion> {
        self.check(copied);
        self.check(referenced);
        let a = self.find_root(copied);
        let b = self.find_root(referenced);
        if a == b {
            return Err(CycleUnion {
                copied,
                referenced,
                shared_source: self.source[a] as usize,
            });
        }
        self.stats.unions += 1;
        let src = self.source[b];
        let root = if self.rank[a] < self.rank[b] {
            self.parent[a] = b as u32;
            b
        } else if self.rank[a] > self.rank[b] {
            self.parent[b] = a as u32;
            a
        } else {
            self.parent[b] = a as u32;
            self.rank[a] += 1;
            a
        };
        self.source[root] = src;
        Ok(())
    }

    /// Current source of every position, in position order.
    pub fn source_vector(&mut self) -> Vec<usize> {
        (1..=self.n).map(|x| self.find_source(x)).collect()
    }
}

/// A disposable second union-find over overlay ids plus the position map W,
/// emulating the forest of the committed parse extended by a tentative
/// phrase. `W[x]` maps a position to its overlay id and is unset for
/// positions the tentative phrase has not touched; reset rewinds only the
/// touched entries, so a full extension-probe-reset cycle costs time
/// proportional to the probe length.
#[derive(Debug, Clone)]
pub struct ScratchOverlay {
    w: Vec<u32>,
    parent: Vec<u32>,
    rank: Vec<u8>,
    src: Vec<u32>,
    touched: Vec<u32>,
}

impl ScratchOverlay {
    pub fn new(n: usize) -> ScratchOverlay {
        ScratchOverlay {
            w: vec![UNSET; n + 1],
            parent: Vec::new(),
            rank: Vec::new(),
            src: Vec::new(),
            touched: Vec::new(),
        }
    }

    /// Number of W entries written since the last reset.
    pub fn touched_len(&self) -> usize {
        self.touched.len()
    }

    fn find(&mut self, id: u32) -> u32 {
        let mut r = id;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut c = id;
        while self.parent[c as usize] != r {
            let next = self.parent[c as usize];
            self.parent[c as usize] = r;
            c = next;
        }
        r
    }

    fn register(&mut self, pos: usize) -> u32 {
        if self.w[pos] == UNSET {
            let id = self.parent.len() as u32;
            self.parent.push(id);
            self.rank.push(0);
            self.src.push(pos as u32);
            self.w[pos] = id;
            self.touched.push(pos as u32);
        }
        self.w[pos]
    }

    /// The source of `x` under the committed parse extended by the phrase
    /// steps recorded in the overlay so far. Positions whose committed
    /// source lies outside the overlay resolve exactly as in the forest.
    pub fn source(&mut self, forest: &mut SourceForest, x: usize) -> usize {
        let y = forest.find_source(x);
        if self.w[y] == UNSET {
            return y;
        }
        let id = self.w[y];
        let root = self.find(id);
        self.src[root as usize] as usize
    }

    /// Record one extension step in the overlay only: `copied` turns into a
    /// target position referencing `referenced`, so the set of chains ending
    /// at `copied` re-sources to `referenced`'s current source. The
    /// committed forest is read but never written.
    pub fn union(&mut self, forest: &mut SourceForest, copied: usize, referenced: usize) {
        let sr = self.source(forest, referenced);
        debug_assert_ne!(
            self.source(forest, copied),
            sr,
            "overlay union would merge positions sharing a source"
        );
        let a = self.register(copied);
        let b = self.register(sr);
        let (ra, rb) = (self.find(a), self.find(b));
        debug_assert_ne!(ra, rb);
        let root = if self.rank[ra as usize] < self.rank[rb as usize] {
            self.parent[ra as usize] = rb;
            rb
        } else if self.rank[ra as usize] > self.rank[rb as usize] {
            self.parent[rb as usize] = ra;
            ra
        } else {
            self.parent[rb as usize] = ra;
            self.rank[ra as usize] += 1;
            ra
        };
        self.src[root as usize] = sr as u32;
    }

    /// Restore W to all-unset by walking the touched list and rewind the id
    /// counter. O(number of touched entries).
    pub fn reset(&mut self) {
        for &pos in &self.touched {
            self.w[pos as usize] = UNSET;
        }
        self.touched.clear();
        self.parent.clear();
        self.rank.clear();
        self.src.clear();
    }
}
