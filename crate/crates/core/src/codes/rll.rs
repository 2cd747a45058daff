//! Run-length-limited words `S_n(f)`: every run has length at most `f`.

use super::ceil_log2;
use crate::word::Word;

pub fn rll_max_run(x: &Word) -> usize {
    x.max_run()
}

pub fn rll_member(x: &Word, f: usize) -> bool {
    x.max_run() <= f
}

/// `⌈log2 n⌉ + 3`.
pub fn default_run_bound(n: usize) -> usize {
    ceil_log2(n) + 3
}

/// `|S_n(f)|`, counted by a transfer recursion over the length of the last
/// run rather than by enumeration.
pub fn run_limited_count(n: usize, f: usize) -> u128 {
    if n == 0 {
        return 1;
    }
    // ending[j] = words of the current length whose last run has length j + 1
    let mut ending = vec![0u128; f];
    if f > 0 {
        ending[0] = 2;
    }
    for _ in 1..n {
        let total: u128 = ending.iter().sum();
        ending.rotate_right(1);
        ending[0] = total;
    }
    ending.iter().sum()
}
