//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's own partition or stalk code.

#![allow(dead_code)]

use std::collections::BTreeMap;

use uhlenbeck::linalg::rank;
use uhlenbeck::{Rat, RatMatrix};

/// Partitions of `n` built bottom-up as nondecreasing sequences, then
/// flipped to descending order.
pub fn brute_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, min: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            let mut p = prefix.clone();
            p.reverse();
            out.push(p);
            return;
        }
        for part in min..=rest {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 1, &mut Vec::new(), &mut out);
    out
}

/// `p(n, k)`: partitions of `n` with exactly `k` parts, via
/// `p(n, k) = p(n − 1, k − 1) + p(n − k, k)`.
pub fn count_with_length(n: usize, k: usize) -> u64 {
    let mut t = vec![vec![0u64; k + 1]; n + 1];
    t[0][0] = 1;
    for m in 1..=n {
        for j in 1..=k.min(m) {
            t[m][j] = t[m - 1][j - 1] + t[m - j][j];
        }
    }
    t[n][k]
}

pub fn partition_count(n: usize) -> u64 {
    (0..=n).map(|k| count_with_length(n, k)).sum()
}

/// Multiset `{2m + Σ 2 l(μ_i) : μ_i ⊢ λ_i}` as exponent → multiplicity.
pub fn brute_stalk(m: usize, lambda: &[usize]) -> BTreeMap<usize, u64> {
    let mut acc: BTreeMap<usize, u64> = BTreeMap::from([(2 * m, 1)]);
    for &part in lambda {
        let mut next = BTreeMap::new();
        for (e, c) in &acc {
            for mu in brute_partitions(part) {
                *next.entry(e + 2 * mu.len()).or_insert(0) += c;
            }
        }
        acc = next;
    }
    acc
}

/// `Σ λ'_i²` straight from the diagram.
pub fn conjugate_square_sum(lambda: &[usize]) -> usize {
    let rows = lambda.first().copied().unwrap_or(0);
    (1..=rows)
        .map(|i| lambda.iter().filter(|&&p| p >= i).count().pow(2))
        .sum()
}

/// Dimension of the degree-`i` part of `k⟨x,y,z⟩` modulo the two-sided ideal
/// of `xz − zx`, `yz − zy`, `xy − yx − τz²`, by span rank.
pub fn quotient_dim(i: usize, tau: &Rat) -> usize {
    let total = 3usize.pow(i as u32);
    if i < 2 {
        return total;
    }
    let relations: [Vec<(usize, usize, Rat)>; 3] = [
        vec![(0, 2, Rat::one()), (2, 0, -Rat::one())],
        vec![(1, 2, Rat::one()), (2, 1, -Rat::one())],
        vec![(0, 1, Rat::one()), (1, 0, -Rat::one()), (2, 2, -tau)],
    ];
    let mut rows = Vec::new();
    for pre in 0..3usize.pow((i - 2) as u32) {
        for pos in 0..=(i - 2) {
            // pre = left word of length pos, then right word
            let right_len = i - 2 - pos;
            let left = pre / 3usize.pow(right_len as u32);
            let right = pre % 3usize.pow(right_len as u32);
            for rel in &relations {
                let mut row = vec![Rat::zero(); total];
                for (a, b, c) in rel {
                    let idx = ((left * 3 + a) * 3 + b) * 3usize.pow(right_len as u32) + right;
                    row[idx] = &row[idx] + c;
                }
                rows.push(row);
            }
        }
    }
    let m = RatMatrix::from_fn(rows.len(), total, |r, c| rows[r][c].clone());
    total - rank(&m)
}
