//! Triples `(Y, Z, v)` of a `k×k` pair and a vector with `[Y,Z] = τZ³` and
//! `v` cyclic for the pair.
//!
//! Components are indexed by the Jordan type of the nilpotent `Z`; the
//! support of a triple is the characteristic polynomial of `Y`.

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::linalg::{
    char_poly, determinant, is_solvable, kernel_basis, krylov_span_dim, nilpotent_jordan_type,
    rank, solve, sylvester_operator, unit, vstack,
};
use crate::matrix::{RatMatrix, Vector};
use crate::partition::Partition;
use crate::poly::RatPoly;
use crate::rat::Rat;
use crate::sample;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BTriple {
    #[serde(rename = "Y")]
    pub y: RatMatrix,
    #[serde(rename = "Z")]
    pub z: RatMatrix,
    pub v: Vector,
    pub tau: Rat,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TripleCheck {
    pub size: usize,
    /// `YZ − ZY = τZ³`
    pub relation: bool,
    pub nilpotent: bool,
    /// Dimension of the closure of `v` under `Y` and `Z`.
    pub span: usize,
}

impl TripleCheck {
    pub fn cyclic(&self) -> bool {
        self.span == self.size
    }

    pub fn is_valid(&self) -> bool {
        self.relation && self.nilpotent && self.cyclic()
    }

    fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.relation {
            out.push("[Y,Z] != tau Z^3");
        }
        if !self.nilpotent {
            out.push("Z is not nilpotent");
        }
        if !self.cyclic() {
            out.push("v is not cyclic");
        }
        out
    }
}

fn check_shapes(y: &RatMatrix, z: &RatMatrix, v: &[Rat]) -> Result<usize> {
    for m in [y, z] {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
    }
    let k = y.rows();
    if z.rows() != k || v.len() != k {
        return Err(Error::DimensionMismatch(format!(
            "Y is {k}x{k}, Z is {0}x{0}, v has length {1}",
            z.rows(),
            v.len()
        )));
    }
    Ok(k)
}

pub fn check_btriple(y: &RatMatrix, z: &RatMatrix, v: &[Rat], tau: &Rat) -> Result<TripleCheck> {
    let k = check_shapes(y, z, v)?;
    if tau.is_zero() {
        return Err(Error::Precondition("tau must be nonzero".into()));
    }
    let relation = y.commutator(z) == z.pow(3).scale(tau);
    let nilpotent = z.pow(k as u32).is_zero();
    let span = if k == 0 {
        0
    } else {
        krylov_span_dim(&[y.clone(), z.clone()], v)?
    };
    Ok(TripleCheck {
        size: k,
        relation,
        nilpotent,
        span,
    })
}

impl BTriple {
    /// Builds a triple, failing unless it satisfies every condition.
    pub fn new(y: RatMatrix, z: RatMatrix, v: Vector, tau: Rat) -> Result<BTriple> {
        let t = BTriple { y, z, v, tau };
        t.validate()?;
        Ok(t)
    }

    pub fn empty(tau: Rat) -> BTriple {
        BTriple {
            y: RatMatrix::zeros(0, 0),
            z: RatMatrix::zeros(0, 0),
            v: Vec::new(),
            tau,
        }
    }

    pub fn size(&self) -> usize {
        self.v.len()
    }

    pub fn check(&self) -> Result<TripleCheck> {
        check_btriple(&self.y, &self.z, &self.v, &self.tau)
    }

    pub fn validate(&self) -> Result<()> {
        let c = self.check()?;
        if !c.relation || !c.nilpotent {
            return Err(Error::InvalidTriple(c.failures().join("; ")));
        }
        if !c.cyclic() {
            return Err(Error::NotCyclic {
                span: c.span,
                dim: c.size,
            });
        }
        Ok(())
    }

    /// `(gYg⁻¹, gZg⁻¹, gv)`.
    pub fn conjugate(&self, g: &RatMatrix, g_inv: &RatMatrix) -> BTriple {
        BTriple {
            y: self.y.conjugate_by(g, g_inv),
            z: self.z.conjugate_by(g, g_inv),
            v: g.mul_vec(&self.v),
            tau: self.tau.clone(),
        }
    }
}

/// `N` with `N e_j = j e_{j+2}` (0-based), the matrix of `t³ d/dt` on
/// `Q[t]/t^k` in the monomial basis.
fn cubic_derivation(k: usize) -> RatMatrix {
    RatMatrix::from_fn(k, k, |r, c| {
        if r == c + 2 {
            Rat::from(c)
        } else {
            Rat::zero()
        }
    })
}

/// The triple on `Q[t]/t^k`: `Z` multiplies by `t`, `Y = u + τ t³ d/dt`,
/// `v = 1`.
pub fn jordan_triple(k: usize, u: &Rat, tau: &Rat) -> Result<BTriple> {
    if k == 0 {
        return Err(Error::Precondition("size must be at least 1".into()));
    }
    if tau.is_zero() {
        return Err(Error::Precondition("tau must be nonzero".into()));
    }
    let y = &RatMatrix::scalar(k, u) + &cubic_derivation(k).scale(tau);
    Ok(BTriple {
        y,
        z: RatMatrix::shift(k),
        v: unit(k, 0),
        tau: tau.clone(),
    })
}

/// Block-diagonal nilpotent of Jordan type `λ`, blocks in the order of the
/// parts.
pub fn jordan_nilpotent(lambda: &Partition) -> RatMatrix {
    lambda
        .parts()
        .iter()
        .fold(RatMatrix::zeros(0, 0), |acc, &p| acc.block_diag(&RatMatrix::shift(p)))
}

/// Solutions of `YZ − ZY = τZ³` for a nilpotent `Z`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct YSpace {
    pub particular: RatMatrix,
    /// A basis of the centralizer of `Z`.
    pub homogeneous: Vec<RatMatrix>,
}

pub fn solve_y_space(z: &RatMatrix, tau: &Rat) -> Result<YSpace> {
    nilpotent_jordan_type(z)?;
    let k = z.rows();
    let op = sylvester_operator(z, z);
    let rhs = z.pow(3).scale(tau).to_vec();
    let sol = solve(&op, &rhs)
        .ok_or_else(|| Error::Precondition("[Y,Z] = tau Z^3 has no solution".into()))?;
    Ok(YSpace {
        particular: RatMatrix::from_vec(k, k, sol.particular),
        homogeneous: sol
            .homogeneous
            .into_iter()
            .map(|h| RatMatrix::from_vec(k, k, h))
            .collect(),
    })
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ComponentDims {
    pub lambda: Partition,
    pub k: usize,
    /// `k² − dim centralizer(Z)`, from the rank of the commutator map.
    pub orbit_dim: usize,
    /// Dimension of the solution space of `[Y,Z] = τZ³`.
    pub solution_dim: usize,
    /// `Σ (λ'_i)²`.
    pub centralizer_formula: usize,
    /// `orbit_dim + solution_dim + k − k²`.
    pub total: i64,
}

impl ComponentDims {
    pub fn is_consistent(&self) -> bool {
        self.total == self.k as i64 && self.solution_dim == self.centralizer_formula
    }
}

pub fn component_dimension(lambda: &Partition, tau: &Rat) -> Result<ComponentDims> {
    let k = lambda.size();
    let z = jordan_nilpotent(lambda);
    let (orbit_dim, solution_dim) = if k == 0 {
        (0, 0)
    } else {
        let orbit = rank(&sylvester_operator(&z, &z));
        (orbit, solve_y_space(&z, tau)?.homogeneous.len())
    };
    let k2 = (k * k) as i64;
    Ok(ComponentDims {
        lambda: lambda.clone(),
        k,
        orbit_dim,
        solution_dim,
        centralizer_formula: lambda.centralizer_dim(),
        total: orbit_dim as i64 + solution_dim as i64 + k as i64 - k2,
    })
}

/// Characteristic polynomial of `Y` with its factorizations.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SupportDivisor {
    pub poly: RatPoly,
    pub square_free: Vec<(RatPoly, u32)>,
    pub rational_points: Vec<(Rat, u32)>,
}

impl SupportDivisor {
    pub fn from_poly(poly: RatPoly) -> SupportDivisor {
        SupportDivisor {
            square_free: poly.square_free_factorization(),
            rational_points: poly.rational_roots(),
            poly,
        }
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }
}

pub fn support(t: &BTriple) -> Result<SupportDivisor> {
    t.validate()?;
    Ok(SupportDivisor::from_poly(char_poly(&t.y)?))
}

/// `det(sI + Y − pτZ²)` as a polynomial in `s`: the pencil
/// `det(aI + b(Y − pτZ²))` at `b = 1`. It does not depend on `p`.
pub fn support_poly_p(t: &BTriple, p: i64) -> Result<RatPoly> {
    t.validate()?;
    let k = t.size();
    let shifted = &t.y - &t.z.pow(2).scale(&(&t.tau * &Rat::from(p)));
    // det(sI + M) = (−1)^k charpoly(M)(−s)
    let cp = char_poly(&shifted)?;
    let flipped = RatPoly::new(
        cp.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| if (k + i) % 2 == 0 { c.clone() } else { -c })
            .collect(),
    );
    Ok(flipped)
}

/// Evaluates the homogeneous pencil `det(aI + bM)` from its value at `b = 1`.
pub fn pencil_value(poly: &RatPoly, k: usize, a: &Rat, b: &Rat) -> Rat {
    (0..=k)
        .map(|i| poly.coeff(i) * a.pow(i as u32) * b.pow((k - i) as u32))
        .sum()
}

/// Block sum of two triples, which must share τ and be cyclic together.
pub fn direct_sum(t1: &BTriple, t2: &BTriple) -> Result<BTriple> {
    let sum = direct_sum_unchecked(t1, t2)?;
    sum.validate()?;
    Ok(sum)
}

/// Block sum without the cyclicity check.
pub fn direct_sum_unchecked(t1: &BTriple, t2: &BTriple) -> Result<BTriple> {
    if t1.tau != t2.tau {
        return Err(Error::Precondition(format!(
            "tau mismatch: {} vs {}",
            t1.tau, t2.tau
        )));
    }
    let mut v = t1.v.clone();
    v.extend_from_slice(&t2.v);
    Ok(BTriple {
        y: t1.y.block_diag(&t2.y),
        z: t1.z.block_diag(&t2.z),
        v,
        tau: t1.tau.clone(),
    })
}

/// `(Y + cI, Z, v)`.
pub fn translate(t: &BTriple, c: &Rat) -> BTriple {
    BTriple {
        y: &t.y + &RatMatrix::scalar(t.size(), c),
        z: t.z.clone(),
        v: t.v.clone(),
        tau: t.tau.clone(),
    }
}

/// Dimension of `{g : gY = Yg, gZ = Zg, gv = 0}`. Zero means the only group
/// element fixing the triple is the identity.
pub fn stabilizer_dim(t: &BTriple) -> Result<usize> {
    let k = check_shapes(&t.y, &t.z, &t.v)?;
    if k == 0 {
        return Ok(0);
    }
    let fixes_v = RatMatrix::from_fn(k, k * k, |i, col| {
        if col / k == i {
            t.v[col % k].clone()
        } else {
            Rat::zero()
        }
    });
    let system = vstack(&[
        sylvester_operator(&t.y, &t.y),
        sylvester_operator(&t.z, &t.z),
        fixes_v,
    ]);
    Ok(k * k - rank(&system))
}

/// Measured dimensions of the fiber of the support map over `k·u` inside
/// the component of Jordan type `λ`.
///
/// With `Z` the Jordan representative, grade `Q^k` by the weight
/// `2i − λ_a` of position `i` in block `a`. Then `Z`, the particular
/// solution `Y₀` and the centralizer `c` of `Z` all have nonnegative degree,
/// so the spectrum of `Y₀ + w` only sees the degree-zero part `w₀`, which
/// ranges over the reductive algebra `c₀`. The solutions with support `k·u`
/// are `Y₀ + (nilcone(c₀) ⊕ c₊)`, of dimension `dim c − rank c₀`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct FiberProbe {
    pub lambda: Partition,
    pub k: usize,
    /// `dim c`.
    pub centralizer_dim: usize,
    /// `dim c₀`.
    pub degree_zero_dim: usize,
    /// Rank of `c₀`: the least centralizer dimension in `c₀` over the
    /// sampled elements.
    pub degree_zero_rank: usize,
    /// `dim c − rank c₀`: solutions `Y` with support `k·u`.
    pub solution_dim: usize,
    /// Dimension of the linear family `Y₀ + (strictly lower part of c)`,
    /// all of whose members have support `k·u`.
    pub slice_dim: usize,
    /// Samples from the linear family at which a cyclic vector was found.
    pub samples_used: usize,
    /// `solution_dim + k − dim c`: solutions, plus `k` for `v`, minus the
    /// centralizer group, which acts freely.
    pub fiber_dim: usize,
    /// `k − 1`, or `0` when `k ≤ 1`.
    pub bound: usize,
}

impl FiberProbe {
    pub fn within_bound(&self) -> bool {
        self.fiber_dim <= self.bound
    }
}

fn weights(lambda: &Partition) -> Vec<(i64, usize)> {
    let mut keys = Vec::new();
    for (a, &p) in lambda.parts().iter().enumerate() {
        for i in 0..p {
            keys.push((2 * i as i64 - p as i64, a));
        }
    }
    keys
}

/// Centralizer elements of `z` whose entries vanish outside `allowed`.
fn centralizer_where(z: &RatMatrix, allowed: impl Fn(usize, usize) -> bool) -> Vec<RatMatrix> {
    let k = z.rows();
    let forbidden: Vec<usize> = (0..k * k).filter(|&i| !allowed(i / k, i % k)).collect();
    let selector = RatMatrix::from_fn(forbidden.len(), k * k, |r, c| {
        if forbidden[r] == c {
            Rat::one()
        } else {
            Rat::zero()
        }
    });
    let op = sylvester_operator(z, z);
    let system = if forbidden.is_empty() { op } else { vstack(&[op, selector]) };
    kernel_basis(&system)
        .into_iter()
        .map(|w| RatMatrix::from_vec(k, k, w))
        .collect()
}

fn combination(rng: &mut impl Rng, basis: &[RatMatrix], k: usize) -> RatMatrix {
    basis.iter().fold(RatMatrix::zeros(k, k), |acc, w| {
        &acc + &w.scale(&Rat::from(rng.gen_range(-3i64..=3)))
    })
}

pub fn fiber_probe(
    lambda: &Partition,
    u: &Rat,
    tau: &Rat,
    samples: usize,
    seed: u64,
) -> Result<FiberProbe> {
    let k = lambda.size();
    if k == 0 {
        return Err(Error::InvalidPartition("empty partition".into()));
    }
    if tau.is_zero() {
        return Err(Error::Precondition("tau must be nonzero".into()));
    }
    let z = jordan_nilpotent(lambda);
    let y0 = lambda
        .parts()
        .iter()
        .map(|&p| jordan_triple(p, u, tau).map(|t| t.y))
        .collect::<Result<Vec<_>>>()?
        .iter()
        .fold(RatMatrix::zeros(0, 0), |acc, m| acc.block_diag(m));
    let keys = weights(lambda);
    let centralizer = solve_y_space(&z, tau)?.homogeneous;
    let degree_zero = centralizer_where(&z, |r, c| keys[r].0 == keys[c].0);
    let slice = centralizer_where(&z, |r, c| keys[r] > keys[c]);
    let target = RatPoly::from_roots(std::iter::repeat(u).take(k));

    let d0 = degree_zero.len();
    let per_sample: Vec<(usize, bool)> = (0..samples.max(1))
        .into_par_iter()
        .map(|s| -> Result<(usize, bool)> {
            let mut rng = sample::rng(seed.wrapping_add(s as u64));
            // centralizer of a random element inside c₀
            let e = combination(&mut rng, &degree_zero, k);
            let brackets: Vec<Vector> = degree_zero.iter().map(|w| e.commutator(w).to_vec()).collect();
            let m = RatMatrix::from_fn(k * k, d0, |r, c| brackets[c][r].clone());
            let cent = d0 - rank(&m);

            let y = &y0 + &combination(&mut rng, &slice, k);
            debug_assert_eq!(char_poly(&y)?, target);
            let pair = [y, z.clone()];
            let cyclic = (0..8).any(|_| {
                let v = sample::int_vector(&mut rng, k, -3, 3);
                krylov_span_dim(&pair, &v).is_ok_and(|d| d == k)
            });
            Ok((cent, cyclic))
        })
        .collect::<Result<_>>()?;
    let degree_zero_rank = per_sample.iter().map(|p| p.0).min().unwrap_or(d0);
    let samples_used = per_sample.iter().filter(|p| p.1).count();
    let c = centralizer.len();
    let solution_dim = c - degree_zero_rank;
    Ok(FiberProbe {
        lambda: lambda.clone(),
        k,
        centralizer_dim: c,
        degree_zero_dim: d0,
        degree_zero_rank,
        solution_dim,
        slice_dim: slice.len(),
        samples_used,
        fiber_dim: solution_dim + k - c,
        bound: k.saturating_sub(1),
    })
}

/// Fiber dimension over a divisor `Σ m_i u_i` with distinct points: the
/// fiber factors over the points, and each factor is the largest probe over
/// the partitions of `m_i`.
pub fn divisor_fiber_dim(
    multiplicities: &[usize],
    tau: &Rat,
    samples: usize,
    seed: u64,
) -> Result<usize> {
    let mut total = 0;
    for (i, &m) in multiplicities.iter().enumerate() {
        let mut best = 0;
        for lambda in crate::partition::partitions(m) {
            let probe = fiber_probe(&lambda, &Rat::from(i), tau, samples, seed)?;
            best = best.max(probe.fiber_dim);
        }
        total += best;
    }
    Ok(total)
}

/// Searches for a non-nilpotent `Z` of size at most `k_max` for which
/// `[Y,Z] = τZ³` is solvable, over `count` seeds starting at `seed`.
/// Half of the candidates have small random entries; the other half are
/// conjugates of a nilpotent Jordan matrix with one nonzero eigenvalue
/// added.
pub fn non_nilpotent_search(k_max: usize, tau: &Rat, count: u64, seed: u64) -> Option<RatMatrix> {
    (seed..seed + count).into_par_iter().find_map_first(|s| {
        let mut rng = sample::rng(s);
        let k = rng.gen_range(1..=k_max);
        let z = if s % 2 == 0 {
            sample::int_matrix(&mut rng, k, k, -2, 2)
        } else {
            let parts = random_composition(&mut rng, k);
            let mut m = jordan_nilpotent(&Partition::from_unsorted(parts));
            let i = rng.gen_range(0..k);
            m[(i, i)] = Rat::from(rng.gen_range(1i64..=3));
            let (g, gi) = sample::invertible(&mut rng, k);
            m.conjugate_by(&g, &gi)
        };
        if z.pow(k as u32).is_zero() {
            return None;
        }
        let rhs = z.pow(3).scale(tau).to_vec();
        is_solvable(&sylvester_operator(&z, &z), &rhs).then_some(z)
    })
}

fn random_composition(rng: &mut impl Rng, k: usize) -> Vec<usize> {
    let mut parts = Vec::new();
    let mut rest = k;
    while rest > 0 {
        let p = rng.gen_range(1..=rest);
        parts.push(p);
        rest -= p;
    }
    parts
}

/// A random valid triple of size at most `k_max`: a sum of Jordan triples
/// at distinct points, conjugated by a random invertible matrix.
pub fn random_triple(k_max: usize, tau: &Rat, seed: u64) -> Result<BTriple> {
    let mut rng = sample::rng(seed);
    let k = rng.gen_range(1..=k_max.max(1));
    let parts = random_composition(&mut rng, k);
    let points = sample::distinct_ints(&mut rng, parts.len(), -4, 4);
    let mut t = BTriple::empty(tau.clone());
    for (&p, &u) in parts.iter().zip(&points) {
        t = direct_sum(&t, &jordan_triple(p, &Rat::from(u), tau)?)?;
    }
    let (g, gi) = sample::invertible(&mut rng, k);
    Ok(t.conjugate(&g, &gi))
}

/// Determinant of the pencil at a point, for spot checks.
pub fn pencil_determinant(t: &BTriple, p: i64, a: &Rat, b: &Rat) -> Result<Rat> {
    let k = t.size();
    let m = &t.y - &t.z.pow(2).scale(&(&t.tau * &Rat::from(p)));
    determinant(&(&RatMatrix::scalar(k, a) + &m.scale(b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn small_checks() {
        let one = check_btriple(
            &RatMatrix::from_ints(&[[4]]),
            &RatMatrix::zeros(1, 1),
            &[Rat::one()],
            &Rat::one(),
        )
        .unwrap();
        assert!(one.is_valid());
        let t = check_btriple(
            &RatMatrix::zeros(2, 2),
            &RatMatrix::shift(2),
            &unit(2, 0),
            &Rat::one(),
        )
        .unwrap();
        assert!(t.is_valid());
    }

    #[test]
    fn jordan_triples_are_valid() {
        for k in 1..=6 {
            let t = jordan_triple(k, &rat(2, 1), &rat(-3, 7)).unwrap();
            assert!(t.check().unwrap().is_valid());
            let s = support(&t).unwrap();
            assert_eq!(s.rational_points, vec![(rat(2, 1), k as u32)]);
            assert_eq!(nilpotent_jordan_type(&t.z).unwrap(), part(&[k]));
        }
        let t = jordan_triple(1, &rat(5, 1), &Rat::one()).unwrap();
        assert_eq!(t.y, RatMatrix::from_ints(&[[5]]));
    }

    #[test]
    fn y_space_examples() {
        let zero = solve_y_space(&RatMatrix::zeros(3, 3), &Rat::one()).unwrap();
        assert!(zero.particular.is_zero());
        assert_eq!(zero.homogeneous.len(), 9);
        assert_eq!(solve_y_space(&RatMatrix::shift(2), &Rat::one()).unwrap().homogeneous.len(), 2);
        assert_eq!(solve_y_space(&RatMatrix::shift(4), &Rat::one()).unwrap().homogeneous.len(), 4);
        assert!(solve_y_space(&RatMatrix::identity(2), &Rat::one()).is_err());
    }

    #[test]
    fn component_dims() {
        for lambda in [part(&[3]), part(&[2, 1]), part(&[1, 1, 1])] {
            let c = component_dimension(&lambda, &Rat::one()).unwrap();
            assert!(c.is_consistent(), "{c:?}");
        }
        let c = component_dimension(&part(&[2, 1]), &Rat::one()).unwrap();
        assert_eq!((c.orbit_dim, c.solution_dim), (4, 5));
    }

    #[test]
    fn sums_and_supports() {
        let tau = Rat::one();
        let a = jordan_triple(2, &Rat::zero(), &tau).unwrap();
        let b = jordan_triple(3, &Rat::one(), &tau).unwrap();
        let s = direct_sum(&a, &b).unwrap();
        let expected = &RatPoly::from_ints(&[0, 0, 1]) * &RatPoly::linear(&Rat::one()).pow(3);
        assert_eq!(support(&s).unwrap().poly, expected);

        let p = jordan_triple(1, &Rat::zero(), &tau).unwrap();
        assert!(matches!(
            direct_sum(&p, &p),
            Err(Error::NotCyclic { span: 1, dim: 2 })
        ));
        assert_eq!(direct_sum(&a, &BTriple::empty(tau.clone())).unwrap(), a);
    }

    #[test]
    fn pencil_is_p_independent() {
        let t = jordan_triple(4, &rat(1, 2), &rat(3, 1)).unwrap();
        let base = support_poly_p(&t, 0).unwrap();
        for p in 1..5 {
            assert_eq!(support_poly_p(&t, p).unwrap(), base);
        }
        // det(aI + bY) for Y = u + nilpotent is (a + bu)^4
        let (a, b) = (rat(2, 1), rat(-1, 3));
        let direct = pencil_determinant(&t, 2, &a, &b).unwrap();
        assert_eq!(pencil_value(&base, 4, &a, &b), direct);
        assert_eq!(direct, (&a + &(&b * &rat(1, 2))).pow(4));
    }

    #[test]
    fn translation() {
        let t = jordan_triple(3, &rat(1, 1), &Rat::one()).unwrap();
        let moved = translate(&t, &rat(2, 1));
        assert_eq!(support(&moved).unwrap().poly, RatPoly::linear(&rat(3, 1)).pow(3));
        assert_eq!(translate(&moved, &rat(-2, 1)), t);
    }

    #[test]
    fn stabilizers_trivial() {
        for seed in 0..10 {
            let t = random_triple(4, &rat(2, 1), seed).unwrap();
            assert_eq!(stabilizer_dim(&t).unwrap(), 0);
        }
    }

    #[test]
    fn fiber_dims() {
        let tau = Rat::one();
        let one = fiber_probe(&part(&[1]), &Rat::zero(), &tau, 2, 0).unwrap();
        assert_eq!(one.fiber_dim, 0);
        let two = fiber_probe(&part(&[2]), &Rat::zero(), &tau, 3, 0).unwrap();
        assert_eq!(two.fiber_dim, 1);
        for lambda in [part(&[3]), part(&[2, 1]), part(&[1, 1, 1]), part(&[2, 2])] {
            let p = fiber_probe(&lambda, &rat(1, 2), &tau, 3, 1).unwrap();
            assert!(p.samples_used > 0);
            assert_eq!(p.fiber_dim, lambda.size() - lambda.len(), "{p:?}");
        }
        assert_eq!(divisor_fiber_dim(&[1, 1, 1], &tau, 2, 0).unwrap(), 0);
    }

    #[test]
    fn no_small_counterexample() {
        assert_eq!(non_nilpotent_search(3, &Rat::one(), 200, 0), None);
    }
}
