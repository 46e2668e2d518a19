//! Representations of the three-vertex quiver with arrows labelled by
//! `ξ, η, ζ`, subject to the quadratic dual relations.
//!
//! A representation is `V1 --F--> V2 --G--> V3` with three maps in each
//! block. Numeric invariants `(r, d, n)` of sheaves, their dimension
//! vectors and the two polarizations live here too.

use std::cmp::Ordering;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::linalg::{kernel_basis, unit, vstack, Subspace};
use crate::matrix::{RatMatrix, Vector};
use crate::poly::RatPoly;
use crate::rat::Rat;
use crate::sample;
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DimVector(pub [usize; 3]);

impl DimVector {
    pub fn new(r1: usize, r2: usize, r3: usize) -> DimVector {
        DimVector([r1, r2, r3])
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0, 0, 0]
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "({a},{b},{c})")
    }
}

/// Weights `(θ1, θ2, θ3)` on the three vertices.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Polarization(pub [Rat; 3]);

impl Polarization {
    pub fn from_ints(a: i64, b: i64, c: i64) -> Polarization {
        Polarization([a.into(), b.into(), c.into()])
    }
}

impl fmt::Display for Polarization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.0;
        write!(f, "({a},{b},{c})")
    }
}

/// `⟨θ, dim⟩ = θ1 r1 + θ2 r2 + θ3 r3`.
pub fn slope(theta: &Polarization, dim: &DimVector) -> Rat {
    theta.0.iter().zip(dim.0).map(|(t, r)| t * &Rat::from(r)).sum()
}

/// Pairings with several polarizations, compared lexicographically.
pub fn slope_vector(thetas: &[Polarization], dim: &DimVector) -> Vec<Rat> {
    thetas.iter().map(|t| slope(t, dim)).collect()
}

fn lex_sign(v: &[Rat]) -> Ordering {
    v.iter()
        .map(|x| x.cmp(&Rat::zero()))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// Rank, degree and second Chern class.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct SheafNumerics {
    pub r: i64,
    pub d: i64,
    pub n: i64,
}

impl SheafNumerics {
    pub fn new(r: i64, d: i64, n: i64) -> SheafNumerics {
        SheafNumerics { r, d, n }
    }

    /// Numerics of the line bundle `O(i)`: rank one, degree `i`, `c2 = 0`.
    pub fn line_bundle(i: i64) -> SheafNumerics {
        SheafNumerics::new(1, i, 0)
    }

    /// An Artin sheaf of the given length: rank and degree zero, and
    /// `c2 = −length` so that `ch2 = length`.
    pub fn artin(length: i64) -> SheafNumerics {
        SheafNumerics::new(0, 0, -length)
    }

    /// `d²/2 − n`.
    pub fn ch2(&self) -> Rat {
        Rat::new(self.d * self.d, 2) - Rat::from(self.n)
    }

    /// Numerics of a direct sum; `c2` picks up the cross term `d1 d2`.
    pub fn direct_sum(&self, other: &SheafNumerics) -> SheafNumerics {
        SheafNumerics::new(
            self.r + other.r,
            self.d + other.d,
            self.n + other.n + self.d * other.d,
        )
    }

    fn check_range(&self) -> Result<()> {
        let SheafNumerics { r, d, n } = *self;
        let degree_ok = (0 <= d && d < r) || (r == 0 && d == 0);
        if !degree_ok {
            return Err(Error::Precondition(format!(
                "need 0 <= d < r or r = d = 0, got r = {r}, d = {d}"
            )));
        }
        if 2 * n < d * (d + 1) {
            return Err(Error::Precondition(format!(
                "need n >= d(d+1)/2, got d = {d}, n = {n}"
            )));
        }
        Ok(())
    }
}

/// Dimension vector `(n − d(d−1)/2, 2n − d² + r, n − d(d+1)/2)`.
///
/// For `(r, d) = (0, 0)` the input `n` is read as a length, giving
/// `(n, 2n, n)`.
pub fn alpha(r: i64, d: i64, n: i64) -> Result<DimVector> {
    SheafNumerics::new(r, d, n).check_range()?;
    let a = n - d * (d - 1) / 2;
    let b = 2 * n - d * d + r;
    let c = n - d * (d + 1) / 2;
    Ok(DimVector::new(a as usize, b as usize, c as usize))
}

/// `θ⁰ = (−r−d, d, r−d)` and `θ¹ = (2n−d²+r, d²−2n, 2n−d²+r)`.
pub fn polarizations(r: i64, d: i64, n: i64) -> Result<(Polarization, Polarization)> {
    SheafNumerics::new(r, d, n).check_range()?;
    let e = 2 * n - d * d + r;
    Ok((
        Polarization::from_ints(-r - d, d, r - d),
        Polarization::from_ints(e, d * d - 2 * n, e),
    ))
}

/// `r (t+1)(t+2)/2 + d (2t+3)/2 + d²/2 − n`.
pub fn hilbert_poly(num: &SheafNumerics) -> RatPoly {
    let r = Rat::from(num.r);
    let d = Rat::from(num.d);
    let half = Rat::new(1, 2);
    let quad = RatPoly::new(vec![Rat::from(2), Rat::from(3), Rat::one()]).scale(&(&r * &half));
    let lin = RatPoly::new(vec![Rat::from(3), Rat::from(2)]).scale(&(&d * &half));
    &(&quad + &lin) + &RatPoly::constant(num.ch2())
}

/// Mumford slope `d/r` and Gieseker slope `h(t)/r`.
pub fn slopes_mg(num: &SheafNumerics) -> Result<(Rat, RatPoly)> {
    if num.r == 0 {
        return Err(Error::Precondition("slopes need positive rank".into()));
    }
    let inv = Rat::from(num.r).recip();
    Ok((Rat::from(num.d) * &inv, hilbert_poly(num).scale(&inv)))
}

/// Three maps between consecutive vertices, one per arrow label.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Arrows {
    pub xi: RatMatrix,
    pub eta: RatMatrix,
    pub zeta: RatMatrix,
}

impl Arrows {
    pub fn zeros(rows: usize, cols: usize) -> Arrows {
        let z = RatMatrix::zeros(rows, cols);
        Arrows {
            xi: z.clone(),
            eta: z.clone(),
            zeta: z,
        }
    }

    pub fn as_array(&self) -> [&RatMatrix; 3] {
        [&self.xi, &self.eta, &self.zeta]
    }

    fn map(&self, f: impl Fn(&RatMatrix) -> RatMatrix) -> Arrows {
        Arrows {
            xi: f(&self.xi),
            eta: f(&self.eta),
            zeta: f(&self.zeta),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct QuiverRep {
    pub dim: DimVector,
    #[serde(rename = "F")]
    pub f: Arrows,
    #[serde(rename = "G")]
    pub g: Arrows,
    pub tau: Rat,
}

impl QuiverRep {
    /// Checks that every block has the shape dictated by `dim`.
    pub fn new(dim: DimVector, f: Arrows, g: Arrows, tau: Rat) -> Result<QuiverRep> {
        let [r1, r2, r3] = dim.0;
        for (name, m) in ["F_xi", "F_eta", "F_zeta"].iter().zip(f.as_array()) {
            if (m.rows(), m.cols()) != (r2, r1) {
                return Err(Error::DimensionMismatch(format!(
                    "{name} is {}x{}, expected {r2}x{r1}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        for (name, m) in ["G_xi", "G_eta", "G_zeta"].iter().zip(g.as_array()) {
            if (m.rows(), m.cols()) != (r3, r2) {
                return Err(Error::DimensionMismatch(format!(
                    "{name} is {}x{}, expected {r3}x{r2}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(QuiverRep { dim, f, g, tau })
    }

    pub fn zero(dim: DimVector, tau: Rat) -> QuiverRep {
        let [r1, r2, r3] = dim.0;
        QuiverRep {
            dim,
            f: Arrows::zeros(r2, r1),
            g: Arrows::zeros(r3, r2),
            tau,
        }
    }

    /// Re-validates shapes, e.g. after deserializing.
    pub fn validate(&self) -> Result<()> {
        QuiverRep::new(self.dim, self.f.clone(), self.g.clone(), self.tau.clone()).map(|_| ())
    }

    pub fn direct_sum(&self, other: &QuiverRep) -> Result<QuiverRep> {
        if self.tau != other.tau {
            return Err(Error::Precondition("direct sum needs equal tau".into()));
        }
        let [a1, a2, a3] = self.dim.0;
        let [b1, b2, b3] = other.dim.0;
        let bd = |x: &RatMatrix, y: &RatMatrix| x.block_diag(y);
        Ok(QuiverRep {
            dim: DimVector::new(a1 + b1, a2 + b2, a3 + b3),
            f: Arrows {
                xi: bd(&self.f.xi, &other.f.xi),
                eta: bd(&self.f.eta, &other.f.eta),
                zeta: bd(&self.f.zeta, &other.f.zeta),
            },
            g: Arrows {
                xi: bd(&self.g.xi, &other.g.xi),
                eta: bd(&self.g.eta, &other.g.eta),
                zeta: bd(&self.g.zeta, &other.g.zeta),
            },
            tau: self.tau.clone(),
        })
    }

    /// The isomorphic representation `F ↦ g2 F g1⁻¹`, `G ↦ g3 G g2⁻¹`.
    pub fn change_basis(&self, g: [&RatMatrix; 3]) -> Result<QuiverRep> {
        let inv = g
            .iter()
            .map(|m| m.inverse())
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Precondition("change of basis must be invertible".into()))?;
        for (i, m) in g.iter().enumerate() {
            if m.rows() != self.dim.0[i] {
                return Err(Error::DimensionMismatch(format!(
                    "basis change at vertex {} has size {}",
                    i + 1,
                    m.rows()
                )));
            }
        }
        Ok(QuiverRep {
            dim: self.dim,
            f: self.f.map(|m| &(g[1] * m) * &inv[0]),
            g: self.g.map(|m| &(g[2] * m) * &inv[1]),
            tau: self.tau.clone(),
        })
    }
}

/// Names of the six relations, in the order [`check_relations`] reports them.
pub const RELATION_NAMES: [&str; 6] = [
    "G_xi F_xi",
    "G_eta F_eta",
    "G_eta F_xi + G_xi F_eta",
    "G_zeta F_xi + G_xi F_zeta",
    "G_zeta F_eta + G_eta F_zeta",
    "G_zeta F_zeta + tau (G_eta F_xi - G_xi F_eta)",
];

/// The six relations as tensors `Σ c[3a+b] e_a ⊗ e_b`, where `e_a ⊗ e_b`
/// stands for the composite `G_b F_a`.
pub fn relation_tensors(tau: &Rat) -> [Vector; 6] {
    let t = |pairs: &[(usize, usize, Rat)]| {
        let mut v = vec![Rat::zero(); 9];
        for (a, b, c) in pairs {
            v[3 * a + b] = &v[3 * a + b] + c;
        }
        v
    };
    let one = Rat::one;
    [
        t(&[(0, 0, one())]),
        t(&[(1, 1, one())]),
        t(&[(0, 1, one()), (1, 0, one())]),
        t(&[(0, 2, one()), (2, 0, one())]),
        t(&[(1, 2, one()), (2, 1, one())]),
        t(&[(2, 2, one()), (0, 1, tau.clone()), (1, 0, -tau)]),
    ]
}

/// `Σ c[3a+b] G_b F_a` for a tensor `c`.
pub fn relation_residue(rep: &QuiverRep, tensor: &[Rat]) -> RatMatrix {
    let f = rep.f.as_array();
    let g = rep.g.as_array();
    let mut acc = RatMatrix::zeros(rep.dim.0[2], rep.dim.0[0]);
    for a in 0..3 {
        for b in 0..3 {
            let c = &tensor[3 * a + b];
            if !c.is_zero() {
                acc = &acc + &(g[b] * f[a]).scale(c);
            }
        }
    }
    acc
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RelationReport {
    pub holds: bool,
    /// `(relation name, nonzero residue)` for each failing identity.
    pub violations: Vec<(String, RatMatrix)>,
}

pub fn check_relations(rep: &QuiverRep) -> Result<RelationReport> {
    rep.validate()?;
    let [fx, fe, fz] = rep.f.as_array();
    let [gx, ge, gz] = rep.g.as_array();
    let tau = &rep.tau;
    let residues = [
        gx * fx,
        ge * fe,
        &(ge * fx) + &(gx * fe),
        &(gz * fx) + &(gx * fz),
        &(gz * fe) + &(ge * fz),
        &(gz * fz) + &(&(ge * fx) - &(gx * fe)).scale(tau),
    ];
    let violations: Vec<(String, RatMatrix)> = RELATION_NAMES
        .iter()
        .zip(residues)
        .filter(|(_, m)| !m.is_zero())
        .map(|(n, m)| (n.to_string(), m))
        .collect();
    Ok(RelationReport {
        holds: violations.is_empty(),
        violations,
    })
}

/// The `(1, 2, 1)` representation attached to the point `[a : b]`:
/// `F = (h, ζ)ᵀ` and `G = (−ζ, h)` with `h = aξ + bη`.
pub fn monad_of_point(a: &Rat, b: &Rat, tau: &Rat) -> Result<QuiverRep> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::Precondition("point [a:b] must be nonzero".into()));
    }
    if tau.is_zero() {
        return Err(Error::Precondition("tau must be nonzero".into()));
    }
    let col = |x: Rat, y: Rat| RatMatrix::column(&[x, y]);
    let row = |x: Rat, y: Rat| RatMatrix::row_matrix(&[x, y]);
    let z = Rat::zero;
    QuiverRep::new(
        DimVector::new(1, 2, 1),
        Arrows {
            xi: col(a.clone(), z()),
            eta: col(b.clone(), z()),
            zeta: col(z(), Rat::one()),
        },
        Arrows {
            xi: row(z(), a.clone()),
            eta: row(z(), b.clone()),
            zeta: row(-Rat::one(), z()),
        },
        tau.clone(),
    )
}

/// A subrepresentation, given by a subspace at each vertex.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Subrep {
    pub dim: DimVector,
    pub spaces: [Subspace; 3],
}

impl Subrep {
    fn from_spaces(spaces: [Subspace; 3]) -> Subrep {
        Subrep {
            dim: DimVector::new(spaces[0].dim(), spaces[1].dim(), spaces[2].dim()),
            spaces,
        }
    }

    pub fn is_subrep_of(&self, rep: &QuiverRep) -> bool {
        let [u1, u2, u3] = &self.spaces;
        rep.f.as_array().iter().all(|m| u1.maps_into(m, u2))
            && rep.g.as_array().iter().all(|m| u2.maps_into(m, u3))
    }

    pub fn is_proper_nonzero(&self, rep: &QuiverRep) -> bool {
        !self.dim.is_zero() && self.dim != rep.dim
    }
}

/// Smallest subrepresentation containing the given subspaces.
pub fn generated_subrep(rep: &QuiverRep, seeds: [&Subspace; 3]) -> Result<Subrep> {
    for (i, s) in seeds.iter().enumerate() {
        if s.ambient() != rep.dim.0[i] {
            return Err(Error::DimensionMismatch(format!(
                "seed at vertex {} lives in Q^{}, vertex has dimension {}",
                i + 1,
                s.ambient(),
                rep.dim.0[i]
            )));
        }
    }
    let u1 = seeds[0].clone();
    let mut u2 = seeds[1].clone();
    for m in rep.f.as_array() {
        u2 = u2.join(&u1.image(m));
    }
    let mut u3 = seeds[2].clone();
    for m in rep.g.as_array() {
        u3 = u3.join(&u2.image(m));
    }
    Ok(Subrep::from_spaces([u1, u2, u3]))
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Stable,
    Semistable,
    Unstable,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Stable => "stable",
            Verdict::Semistable => "semistable",
            Verdict::Unstable => "unstable",
            Verdict::Unknown => "unknown",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct StabilityReport {
    pub verdict: Verdict,
    /// A proper nonzero subrepresentation of lexicographically least slope.
    pub witness: Option<Subrep>,
    pub witness_slopes: Vec<Rat>,
}

fn check_balanced(rep: &QuiverRep, thetas: &[Polarization]) -> Result<()> {
    for t in thetas {
        let s = slope(t, &rep.dim);
        if !s.is_zero() {
            return Err(Error::Precondition(format!(
                "polarization {t} pairs to {s} with {}, expected 0",
                rep.dim
            )));
        }
    }
    Ok(())
}

/// `target` of dimension `dim`, containing `base` and contained in `within`
/// (pass the whole space for no constraint).
fn extend_within(base: &Subspace, within: &Subspace, dim: usize) -> Option<Subspace> {
    let mut s = base.clone();
    for v in within.basis() {
        if s.dim() >= dim {
            break;
        }
        s.insert(&v);
    }
    (s.dim() == dim).then_some(s)
}

/// Exact stability of a `(1, 2, 1)` representation for a lexicographic
/// list of polarizations.
///
/// Writing `K` for the common kernel of the `G` maps and `I` for the span
/// of the `F` images, a subrepresentation `(u1, u2, u3)` exists iff
/// `u1 = 0` and (`u3 = 1` or `u2 <= dim K`), or `u1 = 1`, `u2 >= dim I`
/// and (`u3 = 1` or `I ⊂ K` with `u2 <= dim K`).
pub fn decide_stability_121(rep: &QuiverRep, thetas: &[Polarization]) -> Result<StabilityReport> {
    if rep.dim != DimVector::new(1, 2, 1) {
        return Err(Error::Precondition(format!(
            "exact decision needs dimension vector (1,2,1), got {}",
            rep.dim
        )));
    }
    rep.validate()?;
    check_balanced(rep, thetas)?;
    let common_kernel = Subspace::span(2, &kernel_basis(&vstack(&rep.g.as_array().map(|m| m.clone()))));
    let whole1 = Subspace::whole(1);
    let f_image = rep
        .f
        .as_array()
        .iter()
        .fold(Subspace::zero(2), |acc, m| acc.join(&whole1.image(m)));
    let whole2 = Subspace::whole(2);

    let mut candidates = Vec::new();
    for u1 in 0..=1 {
        for u2 in 0..=2 {
            for u3 in 0..=1 {
                let dim = DimVector::new(u1, u2, u3);
                if dim.is_zero() || dim == rep.dim {
                    continue;
                }
                let (base, within) = if u1 == 0 {
                    (Subspace::zero(2), if u3 == 0 { &common_kernel } else { &whole2 })
                } else {
                    if u3 == 0 && !f_image.is_subspace_of(&common_kernel) {
                        continue;
                    }
                    (f_image.clone(), if u3 == 0 { &common_kernel } else { &whole2 })
                };
                let Some(u2_space) = extend_within(&base, within, u2) else {
                    continue;
                };
                let spaces = [
                    if u1 == 0 { Subspace::zero(1) } else { whole1.clone() },
                    u2_space,
                    if u3 == 0 { Subspace::zero(1) } else { Subspace::whole(1) },
                ];
                let sub = Subrep::from_spaces(spaces);
                debug_assert!(sub.is_subrep_of(rep));
                candidates.push(sub);
            }
        }
    }

    let mut best: Option<(Vec<Rat>, Subrep)> = None;
    for sub in candidates {
        let s = slope_vector(thetas, &sub.dim);
        if best.as_ref().map_or(true, |(b, _)| s < *b) {
            best = Some((s, sub));
        }
    }
    Ok(match best {
        None => StabilityReport {
            verdict: Verdict::Stable,
            witness: None,
            witness_slopes: Vec::new(),
        },
        Some((s, sub)) => StabilityReport {
            verdict: match lex_sign(&s) {
                Ordering::Greater => Verdict::Stable,
                Ordering::Equal => Verdict::Semistable,
                Ordering::Less => Verdict::Unstable,
            },
            witness: Some(sub),
            witness_slopes: s,
        },
    })
}

fn seed_pool(rep: &QuiverRep, budget: usize, seed: u64) -> [Vec<Subspace>; 3] {
    let [r1, r2, r3] = rep.dim.0;
    let kernel = |ms: &[&RatMatrix]| {
        let stacked = vstack(&ms.iter().map(|m| (*m).clone()).collect::<Vec<_>>());
        Subspace::span(stacked.cols(), &kernel_basis(&stacked))
    };
    let image = |m: &RatMatrix| Subspace::whole(m.cols()).image(m);
    let f = rep.f.as_array();
    let g = rep.g.as_array();

    let mut v1 = vec![Subspace::zero(r1), Subspace::whole(r1), kernel(&f)];
    v1.extend(f.iter().map(|m| kernel(&[m])));
    let mut v2 = vec![Subspace::zero(r2), Subspace::whole(r2), kernel(&g)];
    v2.extend(g.iter().map(|m| kernel(&[m])));
    v2.extend(f.iter().map(|m| image(m)));
    let mut v3 = vec![Subspace::zero(r3), Subspace::whole(r3)];
    v3.extend(g.iter().map(|m| image(m)));

    let mut rng = sample::rng(seed);
    for (pool, n) in [(&mut v1, r1), (&mut v2, r2), (&mut v3, r3)] {
        if n == 0 {
            continue;
        }
        for i in 0..n {
            pool.push(Subspace::span(n, [&unit(n, i)]));
        }
        for _ in 0..budget {
            let v = sample::int_vector(&mut rng, n, -3, 3);
            pool.push(Subspace::span(n, [&v]));
        }
        let base = pool.clone();
        'meets: for a in &base {
            for b in &base {
                if pool.len() >= base.len() + budget {
                    break 'meets;
                }
                pool.push(a.meet(b));
            }
        }
        pool.sort_by_key(|s| s.basis().iter().map(|v| format!("{v:?}")).collect::<Vec<_>>());
        pool.dedup();
    }
    [v1, v2, v3]
}

/// One-sided search for a destabilizing subrepresentation: closes a pool of
/// kernels, images, their intersections and seeded random lines, and returns
/// the lexicographically most negative proper subrepresentation found.
/// `None` proves nothing.
pub fn find_destabilizer(
    rep: &QuiverRep,
    thetas: &[Polarization],
    budget: usize,
    seed: u64,
) -> Result<Option<Subrep>> {
    rep.validate()?;
    check_balanced(rep, thetas)?;
    let [p1, p2, p3] = seed_pool(rep, budget, seed);
    let (n1, n2, n3) = (p1.len(), p2.len(), p3.len());
    let triples: Vec<(usize, usize, usize)> = (0..n1)
        .flat_map(|i| (0..n2).flat_map(move |j| (0..n3).map(move |k| (i, j, k))))
        .collect();
    let found = triples
        .par_iter()
        .filter_map(|&(i, j, k)| {
            let sub = generated_subrep(rep, [&p1[i], &p2[j], &p3[k]]).ok()?;
            if !sub.is_proper_nonzero(rep) {
                return None;
            }
            let s = slope_vector(thetas, &sub.dim);
            (lex_sign(&s) == Ordering::Less).then_some((s, (i, j, k), sub))
        })
        .min_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
    Ok(found.map(|(_, _, sub)| sub))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nc::dual_relation_kernel;
    use crate::rat::rat;

    fn theta0(r: i64, d: i64) -> Polarization {
        polarizations(r, d, d * (d + 1) / 2 + 1).unwrap().0
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha(1, 0, 3).unwrap(), DimVector::new(3, 7, 3));
        assert_eq!(alpha(0, 0, 4).unwrap(), DimVector::new(4, 8, 4));
        assert_eq!(alpha(2, 1, 1).unwrap(), DimVector::new(1, 3, 0));
        assert!(alpha(1, 1, 5).is_err());
        assert!(alpha(3, 2, 2).is_err());
    }

    #[test]
    fn polarizations_pair_to_zero() {
        let (t0, t1) = polarizations(3, 1, 4).unwrap();
        let a = alpha(3, 1, 4).unwrap();
        assert!(slope(&t0, &a).is_zero());
        assert!(slope(&t1, &a).is_zero());
        let (_, t1) = polarizations(2, 1, 3).unwrap();
        assert_eq!(slope(&t1, &DimVector::new(1, 2, 1)), rat(4, 1));
    }

    #[test]
    fn hilbert_of_line_bundles() {
        for i in -3..4 {
            let h = hilbert_poly(&SheafNumerics::line_bundle(i));
            let expected = &RatPoly::linear(&rat(-i - 1, 1)) * &RatPoly::linear(&rat(-i - 2, 1));
            assert_eq!(h, expected.scale(&rat(1, 2)));
        }
        assert_eq!(hilbert_poly(&SheafNumerics::artin(5)), RatPoly::from_ints(&[5]));
        let h = hilbert_poly(&SheafNumerics::new(1, 0, 2));
        assert_eq!(h, RatPoly::from_ints(&[-2, 3, 1]).scale(&rat(1, 2)));
    }

    #[test]
    fn relations_come_from_dual_kernel() {
        for tau in [rat(1, 1), rat(-2, 1), rat(3, 5)] {
            let ours = Subspace::span(9, relation_tensors(&tau).iter());
            let kernel = Subspace::span(9, &dual_relation_kernel(&tau));
            assert_eq!(ours, kernel);
        }
    }

    #[test]
    fn monad_passes_and_is_stable() {
        for (a, b) in [(1, 0), (0, 1), (2, -3)] {
            let rep = monad_of_point(&rat(a, 1), &rat(b, 1), &rat(3, 2)).unwrap();
            assert!(check_relations(&rep).unwrap().holds);
            let report = decide_stability_121(&rep, &[theta0(1, 0)]).unwrap();
            assert_eq!(report.verdict, Verdict::Stable);
            assert_eq!(find_destabilizer(&rep, &[theta0(1, 0)], 4, 0).unwrap(), None);
            let whole = generated_subrep(
                &rep,
                [&Subspace::whole(1), &Subspace::zero(2), &Subspace::zero(1)],
            )
            .unwrap();
            assert_eq!(whole.dim, DimVector::new(1, 2, 1));
        }
    }

    #[test]
    fn first_relation_catches_identity() {
        let mut rep = QuiverRep::zero(DimVector::new(1, 1, 1), Rat::one());
        rep.f.xi = RatMatrix::identity(1);
        rep.g.xi = RatMatrix::identity(1);
        let report = check_relations(&rep).unwrap();
        assert!(!report.holds);
        assert_eq!(report.violations[0].0, RELATION_NAMES[0]);
    }

    #[test]
    fn zero_rep_is_unstable() {
        let rep = QuiverRep::zero(DimVector::new(1, 2, 1), Rat::one());
        let report = decide_stability_121(&rep, &[theta0(1, 0)]).unwrap();
        assert_eq!(report.verdict, Verdict::Unstable);
        assert_eq!(report.witness.unwrap().dim, DimVector::new(1, 0, 0));
        let found = find_destabilizer(&rep, &[theta0(1, 0)], 2, 0).unwrap().unwrap();
        assert_eq!(found.dim, DimVector::new(1, 0, 0));
    }

    #[test]
    fn precondition_errors() {
        let a = monad_of_point(&rat(1, 1), &rat(0, 1), &rat(1, 1)).unwrap();
        let sum = a.direct_sum(&a).unwrap();
        assert!(decide_stability_121(&sum, &[theta0(1, 0)]).is_err());
        assert!(monad_of_point(&rat(0, 1), &rat(0, 1), &rat(1, 1)).is_err());
        let unbalanced = Polarization::from_ints(1, 0, 0);
        assert!(decide_stability_121(&a, &[unbalanced]).is_err());
    }

    #[test]
    fn slopes() {
        let (mu, _) = slopes_mg(&SheafNumerics::new(2, 1, 0)).unwrap();
        assert_eq!(mu, rat(1, 2));
        assert!(slopes_mg(&SheafNumerics::new(0, 0, 1)).is_err());
    }

    #[test]
    fn json_shape() {
        let rep = monad_of_point(&rat(1, 1), &rat(2, 1), &rat(1, 1)).unwrap();
        let v = serde_json::to_value(&rep).unwrap();
        assert_eq!(v["dim"], serde_json::json!([1, 2, 1]));
        assert!(v["F"]["zeta"].is_object());
        let back: QuiverRep = serde_json::from_value(v).unwrap();
        assert_eq!(back, rep);
    }
}
