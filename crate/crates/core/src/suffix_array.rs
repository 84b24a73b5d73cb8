//! Suffix array by prefix doubling and Kasai's LCP array.

use crate::words::Symbol;

/// Suffix array of `text` (0-based start positions in lexicographic order).
pub(crate) fn suffix_array(text: &[Symbol]) -> Vec<usize> {
    let n = text.len();
    let mut sa: Vec<usize> = (0..n).collect();
    if n <= 1 {
        return sa;
    }
    let mut rank: Vec<usize> = text.iter().map(|&c| c as usize).collect();
    let mut tmp = vec![0usize; n];
    let mut k = 1;
    loop {
        let key = |i: usize| (rank[i], if i + k < n { rank[i + k] + 1 } else { 0 });
        sa.sort_unstable_by_key(|&i| key(i));
        tmp[sa[0]] = 0;
        for w in 1..n {
            tmp[sa[w]] = tmp[sa[w - 1]] + usize::from(key(sa[w - 1]) != key(sa[w]));
        }
        std::mem::swap(&mut rank, &mut tmp);
        if rank[sa[n - 1]] == n - 1 {
            break;
        }
        k *= 2;
    }
    sa
}

/// `lcp[r]` is the longest common prefix of the suffixes at ranks `r - 1`
/// and `r`; `lcp[0] = 0`.
pub(crate) fn lcp_array(text: &[Symbol], sa: &[usize]) -> Vec<usize> {
    let n = text.len();
    let mut rank = vec![0; n];
    for (r, &i) in sa.iter().enumerate() {
        rank[i] = r;
    }
    let mut lcp = vec![0; n];
    let mut h = 0usize;
    for i in 0..n {
        if rank[i] > 0 {
            let j = sa[rank[i] - 1];
            while i + h < n && j + h < n && text[i + h] == text[j + h] {
                h += 1;
            }
            lcp[rank[i]] = h;
            h = h.saturating_sub(1);
        } else {
            h = 0;
        }
    }
    lcp
}

/// For each 0-based start `i`, the length of the longest factor starting at
/// `i` that occurs at least twice in `text`.
pub(crate) fn repeat_lengths(text: &[Symbol]) -> Vec<usize> {
    let n = text.len();
    let sa = suffix_array(text);
    let lcp = lcp_array(text, &sa);
    let mut out = vec![0; n];
    for r in 0..n {
        let left = lcp[r];
        let right = if r + 1 < n { lcp[r + 1] } else { 0 };
        out[sa[r]] = left.max(right);
    }
    out
}
