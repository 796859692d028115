//! Lexicographic k-combination enumeration, counting, and unranking.
//!
//! Combinations of `0..n` are ordered lexicographically as ascending index
//! tuples: `[0,1,2] < [0,1,3] < ... < [n-3,n-2,n-1]`. The throttling solver
//! splits this order into contiguous rank ranges, so it needs to advance a
//! combination in place, count them, and jump to an arbitrary rank.

/// Advances `idx` to the next k-combination of `0..n` in lexicographic
/// order. Returns `false` (leaving `idx` arbitrary) when `idx` was already
/// the last combination.
pub(crate) fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in (i + 1)..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// The binomial coefficient C(n, k), saturating at `u64::MAX`.
pub(crate) fn count(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // Multiply before dividing: the running product of i+1 consecutive
        // binomials is always divisible by i+1.
        acc = acc.saturating_mul((n - i) as u128) / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// The combination of `0..n` with lexicographic rank `rank` (0-based).
///
/// # Panics
/// Panics if `rank >= count(n, k)`.
pub(crate) fn unrank(n: usize, k: usize, mut rank: u64) -> Vec<usize> {
    assert!(rank < count(n, k), "rank out of range");
    let mut out = Vec::with_capacity(k);
    let mut v = 0usize;
    for slot in 0..k {
        loop {
            let with_v = count(n - 1 - v, k - 1 - slot);
            if rank < with_v {
                out.push(v);
                v += 1;
                break;
            }
            rank -= with_v;
            v += 1;
        }
    }
    out
}
