//! Suffix array construction by induced sorting (SA-IS), linear time.
//!
//! The input is shifted by one and a unique smallest sentinel 0 is appended,
//! so every recursion level works on a string whose last symbol is the
//! strict minimum. Returned positions are 0-based; `TextIndex` converts.

const EMPTY: u32 = u32::MAX;

pub(crate) fn suffix_array(text: &[u8]) -> Vec<u32> {
    let n = text.len();
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![0];
    }
    let mut s: Vec<u32> = Vec::with_capacity(n + 1);
    s.extend(text.iter().map(|&b| u32::from(b) + 1));
    s.push(0);
    let mut sa = vec![EMPTY; n + 1];
    sais(&s, 257, &mut sa);
    // rank 0 is the sentinel suffix; drop it
    sa[1..].to_vec()
}

/// Core recursion. `s` ends with a unique minimal 0; `sa` has `s.len()` slots.
fn sais(s: &[u32], alphabet: usize, sa: &mut [u32]) {
    let n = s.len();
    debug_assert!(n >= 1 && s[n - 1] == 0);
    if n == 1 {
        sa[0] = 0;
        return;
    }

    // Suffix types: true = S (smaller than its successor), false = L.
    let mut is_s = vec![false; n];
    is_s[n - 1] = true;
    for i in (0..n - 1).rev() {
        is_s[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && is_s[i + 1]);
    }
    let lms_at = |i: usize, is_s: &[bool]| i > 0 && is_s[i] && !is_s[i - 1];

    let mut counts = vec![0u32; alphabet];
    for &c in s {
        counts[c as usize] += 1;
    }

    // Left-most S positions, in text order.
    let lms: Vec<u32> = (1..n)
        .filter(|&i| lms_at(i, &is_s))
        .map(|i| i as u32)
        .collect();
    let n1 = lms.len();

    // Stage 1: sort the LMS substrings by seeding LMS positions anywhere in
    // their buckets and inducing L then S suffixes.
    sa.fill(EMPTY);
    {
        let mut tails = bucket_tails(&counts);
        for &p in &lms {
            let c = s[p as usize] as usize;
            tails[c] -= 1;
            sa[tails[c] as usize] = p;
        }
    }
    induce_l(s, sa, &counts, &is_s);
    induce_s(s, sa, &counts, &is_s);

    // LMS positions now appear in sa in LMS-substring order.
    let mut sorted_lms: Vec<u32> = sa
        .iter()
        .copied()
        .filter(|&p| p != EMPTY && lms_at(p as usize, &is_s))
        .collect();
    debug_assert_eq!(sorted_lms.len(), n1);

    // Name LMS substrings; equal substrings share a name. The substring of
    // an LMS position runs to the next LMS position inclusive.
    let mut next_lms = vec![0u32; n];
    for w in lms.windows(2) {
        next_lms[w[0] as usize] = w[1];
    }
    if let Some(&last) = lms.last() {
        next_lms[last as usize] = last;
    }
    let mut names = vec![EMPTY; n];
    let mut name_count = 0u32;
    let mut prev: Option<u32> = None;
    for &p in &sorted_lms {
        let distinct = match prev {
            None => true,
            Some(q) => {
                let (pe, qe) = (next_lms[p as usize], next_lms[q as usize]);
                s[p as usize..=pe as usize] != s[q as usize..=qe as usize]
            }
        };
        if distinct {
            name_count += 1;
        }
        names[p as usize] = name_count - 1;
        prev = Some(p);
    }

    if (name_count as usize) < n1 {
        // Names collide: recurse on the reduced string (names in text order;
        // it ends with the sentinel's name 0, keeping the invariant).
        let s1: Vec<u32> = lms.iter().map(|&p| names[p as usize]).collect();
        let mut sa1 = vec![EMPTY; n1];
        sais(&s1, name_count as usize, &mut sa1);
        for (r, &i1) in sa1.iter().enumerate() {
            sorted_lms[r] = lms[i1 as usize];
        }
    }

    // Stage 2: seed the suffix-sorted LMS positions at their bucket tails in
    // reverse order and induce the full array.
    sa.fill(EMPTY);
    {
        let mut tails = bucket_tails(&counts);
        for &p in sorted_lms.iter().rev() {
            let c = s[p as usize] as usize;
            tails[c] -= 1;
            sa[tails[c] as usize] = p;
        }
    }
    induce_l(s, sa, &counts, &is_s);
    induce_s(s, sa, &counts, &is_s);
}

fn bucket_heads(counts: &[u32]) -> Vec<u32> {
    let mut heads = Vec::with_capacity(counts.len());
    let mut sum = 0u32;
    for &c in counts {
        heads.push(sum);
        sum += c;
    }
    heads
}

fn bucket_tails(counts: &[u32]) -> Vec<u32> {
    let mut tails = Vec::with_capacity(counts.len());
    let mut sum = 0u32;
    for &c in counts {
        sum += c;
        tails.push(sum);
    }
    tails
}

fn induce_l(s: &[u32], sa: &mut [u32], counts: &[u32], is_s: &[bool]) {
    let mut heads = bucket_heads(counts);
    for i in 0..sa.len() {
        let j = sa[i];
        if j != EMPTY && j > 0 {
            let p = (j - 1) as usize;
            if !is_s[p] {
                let c = s[p] as usize;
                sa[heads[c] as usize] = p as u32;
                heads[c] += 1;
            }
        }
    }
}

fn induce_s(s: &[u32], sa: &mut [u32], counts: &[u32], is_s: &[bool]) {
    let mut tails = bucket_tails(counts);
    for i in (0..sa.len()).rev() {
        let j = sa[i];
        if j != EMPTY && j > 0 {
            let p = (j - 1) as usize;
            if is_s[p] {
                let c = s[p] as usize;
                tails[c] -= 1;
                sa[tails[c] as usize] = p as u32;
            }
        }
    }
}
