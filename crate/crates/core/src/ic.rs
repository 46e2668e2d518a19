//! Stalks of the intersection cohomology complex along the strata of the
//! Uhlenbeck space, and the counts that go with them.
//!
//! A graded stalk is recorded as a polynomial in `q`: a summand `ℂ[d]`
//! contributes `q^d`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::partition::{count_by_length, partition_counts, partitions, Partition};
use crate::poly::RatPoly;
use crate::rat::Rat;
use crate::{Error, Result};

pub use crate::partition::partitions as all_partitions;

/// Graded dimension as a polynomial in `q` with nonnegative integer
/// coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GradedStalk {
    poly: RatPoly,
}

impl GradedStalk {
    pub fn from_poly(poly: RatPoly) -> GradedStalk {
        GradedStalk { poly }
    }

    /// `q^d`.
    pub fn shift(d: usize) -> GradedStalk {
        GradedStalk::from_poly(RatPoly::monomial(Rat::one(), d))
    }

    pub fn poly(&self) -> &RatPoly {
        &self.poly
    }

    /// Multiplicity of `q^d`.
    pub fn multiplicity(&self, d: usize) -> u64 {
        self.poly.coeff(d).to_i64().unwrap_or(0) as u64
    }

    /// Value at `q = 1`.
    pub fn total(&self) -> u64 {
        self.poly.eval(&Rat::one()).to_i64().unwrap_or(0) as u64
    }

    pub fn min_exponent(&self) -> Option<usize> {
        self.poly.coeffs().iter().position(|c| !c.is_zero())
    }

    pub fn max_exponent(&self) -> Option<usize> {
        self.poly.degree()
    }

    pub fn tensor(&self, other: &GradedStalk) -> GradedStalk {
        GradedStalk::from_poly(&self.poly * &other.poly)
    }
}

/// Renders as `q^2+q^4+2q^6`, or `0`.
impl fmt::Display for GradedStalk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .poly
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| {
                let mono = match d {
                    0 => String::new(),
                    1 => "q".to_string(),
                    _ => format!("q^{d}"),
                };
                match (c.is_one(), mono.is_empty()) {
                    (_, true) => c.to_string(),
                    (true, false) => mono,
                    (false, false) => format!("{c}{mono}"),
                }
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+"))
        }
    }
}

impl Serialize for GradedStalk {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `Σ_{μ ⊢ j} q^{2 l(μ)}`, the stalk factor contributed by a part `j`.
pub fn part_factor(j: usize) -> GradedStalk {
    let table = count_by_length(j);
    let coeffs = (0..=2 * j)
        .map(|d| {
            if d % 2 == 0 {
                Rat::from(table[j][d / 2])
            } else {
                Rat::zero()
            }
        })
        .collect();
    GradedStalk::from_poly(RatPoly::new(coeffs))
}

/// `q^{2m} Π_i Σ_{μ ⊢ λ_i} q^{2 l(μ)}` on the stratum `(m, λ)` of level `n`.
pub fn ic_stalk(n: usize, m: usize, lambda: &Partition) -> Result<GradedStalk> {
    if m + lambda.size() != n {
        return Err(Error::Precondition(format!(
            "stratum (m = {m}, {lambda}) does not have level {n}"
        )));
    }
    Ok(lambda
        .parts()
        .iter()
        .fold(GradedStalk::shift(2 * m), |acc, &j| acc.tensor(&part_factor(j))))
}

/// `b_{2k−2} = #{μ ⊢ n : l(μ) = k}` for `k = 1..=n`.
pub fn punctual_hilbert_betti(n: usize) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    Ok(count_by_length(n)[n][1..].to_vec())
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Stratum {
    pub m: usize,
    pub lambda: Partition,
    /// `2m + l(λ)`.
    pub dim: usize,
}

impl Stratum {
    pub fn new(m: usize, lambda: Partition) -> Stratum {
        let dim = 2 * m + lambda.len();
        Stratum { m, lambda, dim }
    }

    pub fn level(&self) -> usize {
        self.m + self.lambda.size()
    }

    pub fn is_open(&self) -> bool {
        self.lambda.is_empty()
    }
}

/// All `(m, λ ⊢ n − m)`, by decreasing `m`, partitions in reverse
/// lexicographic order.
pub fn strata(n: usize) -> Vec<Stratum> {
    (0..=n)
        .rev()
        .flat_map(|m| partitions(n - m).into_iter().map(move |l| Stratum::new(m, l)))
        .collect()
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SmallnessRow {
    pub stratum: Stratum,
    pub codim: usize,
    /// Half the spread of exponents of the stalk, `Σ (λ_i − 1)`.
    pub fiber_bound: usize,
    pub stalk: GradedStalk,
    /// `2 · fiber_bound < codim`, or `true` on the open stratum.
    pub small: bool,
}

pub fn smallness_audit(n: usize) -> Result<Vec<SmallnessRow>> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    strata(n)
        .into_iter()
        .map(|s| {
            let stalk = ic_stalk(n, s.m, &s.lambda)?;
            let spread = stalk.max_exponent().unwrap_or(0) - stalk.min_exponent().unwrap_or(0);
            let fiber_bound = spread / 2;
            let codim = 2 * n - s.dim;
            let small = s.is_open() || 2 * fiber_bound < codim;
            Ok(SmallnessRow {
                stratum: s,
                codim,
                fiber_bound,
                stalk,
                small,
            })
        })
        .collect()
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct FixedPoint {
    /// Partition of the Calogero-Moser level `m`.
    pub lambda: Partition,
    pub k0: usize,
    pub k_inf: usize,
    pub attracting: bool,
}

/// Torus fixed points `(λ ⊢ m, k0, k∞)` with `m + k0 + k∞ = n`.
pub fn uhlenbeck_fixed_points(n: usize) -> Vec<FixedPoint> {
    let mut out = Vec::new();
    for m in 0..=n {
        for lambda in partitions(m) {
            for k0 in (0..=n - m).rev() {
                out.push(FixedPoint {
                    attracting: m == 0 && k0 == n,
                    lambda: lambda.clone(),
                    k0,
                    k_inf: n - m - k0,
                });
            }
        }
    }
    out
}

/// `Σ_m p(m)(n − m + 1)`.
pub fn uhlenbeck_fixed_point_count(n: usize) -> u64 {
    partition_counts(n)
        .iter()
        .enumerate()
        .map(|(m, p)| p * (n - m + 1) as u64)
        .sum()
}
