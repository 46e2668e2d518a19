//! Integer partitions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates that `parts` is weakly decreasing and positive.
    pub fn new(parts: Vec<usize>) -> Result<Partition> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Sorts and drops zero parts.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Partition {
        Partition { parts: Vec::new() }
    }

    /// The one-part partition `(n)`, or empty for `n = 0`.
    pub fn single(n: usize) -> Partition {
        Partition::from_unsorted(vec![n])
    }

    /// `(1, 1, ..., 1)` with `n` parts.
    pub fn ones(n: usize) -> Partition {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts, `l(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Conjugate partition: `λ'_i = #{j : λ_j >= i}`.
    pub fn conjugate(&self) -> Partition {
        let top = self.parts.first().copied().unwrap_or(0);
        Partition {
            parts: (1..=top)
                .map(|i| self.parts.iter().take_while(|&&p| p >= i).count())
                .collect(),
        }
    }

    /// `Σ (λ'_i)^2`, the dimension of the centralizer of a nilpotent matrix of
    /// Jordan type `λ`.
    pub fn centralizer_dim(&self) -> usize {
        self.conjugate().parts.iter().map(|c| c * c).sum()
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Partition> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `"2,1"`, `"(2,1)"`, and `""`/`"()"` for the empty partition.
impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Partition> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n` in reverse lexicographic order:
/// `(n), (n-1,1), ..., (1,...,1)`.
pub fn partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for first in (1..=rest.min(max)).rev() {
        current.push(first);
        fill(rest - first, first, current, out);
        current.pop();
    }
}

/// `p(n, k)`: the number of partitions of `n` into exactly `k` parts, as a
/// table indexed `[n][k]` for `0 <= k <= n <= max`.
pub fn count_by_length(max: usize) -> Vec<Vec<u64>> {
    // p(n, k) = p(n-1, k-1) + p(n-k, k)
    let mut table = vec![vec![0u64; max + 1]; max + 1];
    table[0][0] = 1;
    for n in 1..=max {
        for k in 1..=n {
            table[n][k] = table[n - 1][k - 1] + table[n - k][k];
        }
    }
    table
}

/// `p(n)` for `0 <= n <= max`.
pub fn partition_counts(max: usize) -> Vec<u64> {
    count_by_length(max)
        .iter()
        .map(|row| row.iter().sum())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_order() {
        assert_eq!(partitions(0), vec![Partition::empty()]);
        assert_eq!(partitions(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(partitions(4).len(), 5);
    }

    #[test]
    fn counts_match_enumeration() {
        let counts = partition_counts(15);
        for (n, c) in counts.iter().enumerate() {
            assert_eq!(*c as usize, partitions(n).len());
        }
        assert_eq!(partition_counts(30)[30], 5604);
    }

    #[test]
    fn conjugation() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        for q in partitions(7) {
            assert_eq!(q.conjugate().conjugate(), q);
            assert_eq!(q.conjugate().len(), q.parts()[0]);
        }
    }

    #[test]
    fn parsing() {
        assert_eq!("2,1".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert_eq!("(3)".parse::<Partition>().unwrap(), p(&[3]));
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
    }

    #[test]
    fn centralizer_dims() {
        assert_eq!(p(&[4]).centralizer_dim(), 4);
        assert_eq!(Partition::ones(3).centralizer_dim(), 9);
        assert_eq!(p(&[2, 1]).centralizer_dim(), 5);
    }
}
