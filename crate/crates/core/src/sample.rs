//! Seeded random inputs for property checks and searches.
//!
//! Everything is driven by a ChaCha8 stream, so a seed pins the output on
//! every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::rank;
use crate::matrix::{RatMatrix, Vector};
use crate::rat::Rat;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Integer entries drawn uniformly from `lo..=hi`.
pub fn int_matrix(rng: &mut impl Rng, rows: usize, cols: usize, lo: i64, hi: i64) -> RatMatrix {
    RatMatrix::from_fn(rows, cols, |_, _| Rat::from_int(rng.gen_range(lo..=hi)))
}

pub fn int_vector(rng: &mut impl Rng, len: usize, lo: i64, hi: i64) -> Vector {
    (0..len).map(|_| Rat::from_int(rng.gen_range(lo..=hi))).collect()
}

/// A random invertible matrix with entries in `[-5, 5]` and its inverse.
pub fn invertible(rng: &mut impl Rng, n: usize) -> (RatMatrix, RatMatrix) {
    loop {
        let g = int_matrix(rng, n, n, -5, 5);
        if rank(&g) == n {
            let inv = g.inverse().expect("full rank");
            return (g, inv);
        }
    }
}

/// `count` distinct integers from `lo..=hi`, in random order.
pub fn distinct_ints(rng: &mut impl Rng, count: usize, lo: i64, hi: i64) -> Vec<i64> {
    assert!((hi - lo + 1) as usize >= count, "range too small");
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let x = rng.gen_range(lo..=hi);
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}
