//! Pairwise (cascade) summation.

const BLOCK: usize = 32;

/// Sums `values` by recursive halving, falling back to a straight loop on
/// blocks of at most 32 elements. Rounding error grows as O(log n) rather than
/// O(n) for the naive loop.
pub(crate) fn pairwise_sum(values: &[f64]) -> f64 {
    if values.len() <= BLOCK {
        return values.iter().sum();
    }
    let mid = values.len() / 2;
    pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
}

/// Pairwise mean of `f(i)` over `0..n` without materialising more than the
/// recursion needs.
pub(crate) fn pairwise_mean_by<F: Fn(usize) -> f64>(n: usize, f: F) -> f64 {
    fn go<F: Fn(usize) -> f64>(lo: usize, hi: usize, f: &F) -> f64 {
        if hi - lo <= BLOCK {
            return (lo..hi).map(f).sum();
        }
        let mid = lo + (hi - lo) / 2;
        go(lo, mid, f) + go(mid, hi, f)
    }
    go(0, n, &f) / n as f64
}
