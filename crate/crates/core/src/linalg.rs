//! Exact elimination, kernels, Krylov closures, characteristic polynomials
//! and nilpotent Jordan types.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::matrix::{RatMatrix, Vector};
use crate::partition::Partition;
use crate::poly::RatPoly;
use crate::rat::Rat;
use crate::{Error, Result};

/// Reduced row echelon form and its pivot columns.
///
/// Pivots are chosen as the first nonzero entry in each column, so the output
/// is fully determined by the input.
pub fn rref(m: &RatMatrix) -> (RatMatrix, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(r, p);
        let inv = a[(r, c)].recip();
        for j in c..cols {
            a[(r, j)] = &a[(r, j)] * &inv;
        }
        for i in 0..rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for j in c..cols {
                if !a[(r, j)].is_zero() {
                    let d = &a[(r, j)] * &f;
                    a[(i, j)] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// Rank over Q by fraction-free (Bareiss) elimination.
///
/// Each row is first scaled by the lcm of its denominators so the whole
/// elimination runs over the integers with exact divisions.
pub fn rank(m: &RatMatrix) -> usize {
    let cols = m.cols();
    let mut a: Vec<Vec<BigInt>> = (0..m.rows())
        .map(|i| {
            let row = m.row(i);
            let l = Rat::from_int(Rat::denom_lcm(row));
            row.iter().map(|x| (x * &l).numer().clone()).collect()
        })
        .collect();
    let rows = a.len();
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..cols {
                let v = &pivot_row[c] * &row[j] - &lead * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Basis of the right kernel, one vector per free column of the RREF.
///
/// Empty exactly when `m` is injective.
pub fn kernel_basis(m: &RatMatrix) -> Vec<Vector> {
    let (r, pivots) = rref(m);
    kernel_from_rref(&r, &pivots, m.cols())
}

fn kernel_from_rref(r: &RatMatrix, pivots: &[usize], cols: usize) -> Vec<Vector> {
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rat::zero(); cols];
        v[free] = Rat::one();
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = -&r[(i, free)];
        }
        basis.push(v);
    }
    basis
}

/// Solution set of an inhomogeneous linear system.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineSolution {
    pub particular: Vector,
    pub homogeneous: Vec<Vector>,
}

/// Solves `a x = b`; `None` when inconsistent.
pub fn solve(a: &RatMatrix, b: &[Rat]) -> Option<AffineSolution> {
    assert_eq!(a.rows(), b.len(), "right-hand side length");
    let n = a.cols();
    let aug = RatMatrix::from_fn(a.rows(), n + 1, |i, j| {
        if j < n {
            a[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut particular = vec![Rat::zero(); n];
    for (i, &pc) in pivots.iter().enumerate() {
        particular[pc] = r[(i, n)].clone();
    }
    Some(AffineSolution {
        particular,
        homogeneous: kernel_from_rref(&r, &pivots, n),
    })
}

/// Consistency of `a x = b` decided by comparing ranks.
pub fn is_solvable(a: &RatMatrix, b: &[Rat]) -> bool {
    let n = a.cols();
    let aug = RatMatrix::from_fn(a.rows(), n + 1, |i, j| {
        if j < n {
            a[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    rank(a) == rank(&aug)
}

pub fn determinant(m: &RatMatrix) -> Result<Rat> {
    require_square(m)?;
    let n = m.rows();
    let mut a = m.clone();
    let mut det = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[(i, c)].is_zero()) else {
            return Ok(Rat::zero());
        };
        if p != c {
            a.swap_rows(p, c);
            det = -det;
        }
        let pivot = a[(c, c)].clone();
        det *= &pivot;
        let inv = pivot.recip();
        for i in c + 1..n {
            if a[(i, c)].is_zero() {
                continue;
            }
            let f = &a[(i, c)] * &inv;
            for j in c..n {
                let d = &a[(c, j)] * &f;
                a[(i, j)] -= d;
            }
        }
    }
    Ok(det)
}

fn require_square(m: &RatMatrix) -> Result<()> {
    if m.is_square() {
        Ok(())
    } else {
        Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        })
    }
}

/// `det(t I - m)`, via reduction to upper Hessenberg form.
pub fn char_poly(m: &RatMatrix) -> Result<RatPoly> {
    require_square(m)?;
    let n = m.rows();
    let mut h = m.clone();
    for c in 0..n.saturating_sub(2) {
        let Some(p) = (c + 1..n).find(|&i| !h[(i, c)].is_zero()) else {
            continue;
        };
        if p != c + 1 {
            h.swap_rows(p, c + 1);
            for i in 0..n {
                let tmp = h[(i, p)].clone();
                h[(i, p)] = h[(i, c + 1)].clone();
                h[(i, c + 1)] = tmp;
            }
        }
        let inv = h[(c + 1, c)].recip();
        for i in c + 2..n {
            if h[(i, c)].is_zero() {
                continue;
            }
            let f = &h[(i, c)] * &inv;
            for j in 0..n {
                let d = &h[(c + 1, j)] * &f;
                h[(i, j)] -= d;
            }
            for j in 0..n {
                let d = &h[(j, i)] * &f;
                h[(j, c + 1)] += d;
            }
        }
    }
    // p_k = (t - h_kk) p_{k-1} - sum_i h_{k-i,k} (prod of subdiagonal) p_{k-i-1}
    let mut p: Vec<RatPoly> = Vec::with_capacity(n + 1);
    p.push(RatPoly::one());
    for k in 1..=n {
        let lin = RatPoly::new(vec![-&h[(k - 1, k - 1)], Rat::one()]);
        let mut next = &lin * &p[k - 1];
        let mut prod = Rat::one();
        for i in 1..k {
            prod *= &h[(k - i, k - i - 1)];
            if prod.is_zero() {
                break;
            }
            let c = &h[(k - i - 1, k - 1)] * &prod;
            if !c.is_zero() {
                next = &next - &p[k - i - 1].scale(&c);
            }
        }
        p.push(next);
    }
    Ok(p.pop().unwrap())
}

/// Jordan type of a nilpotent matrix, read off the rank sequence of its
/// powers: the number of blocks of size `>= i` is `rank(Z^{i-1}) - rank(Z^i)`.
pub fn nilpotent_jordan_type(z: &RatMatrix) -> Result<Partition> {
    require_square(z)?;
    let k = z.rows();
    let mut ranks = vec![k];
    let mut power = RatMatrix::identity(k);
    for _ in 0..k {
        power = &power * z;
        let r = rank(&power);
        ranks.push(r);
        if r == 0 {
            break;
        }
    }
    if *ranks.last().unwrap() != 0 {
        return Err(Error::NotNilpotent);
    }
    let conjugate: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    Ok(Partition::from_unsorted(conjugate).conjugate())
}

/// A subspace of Q^n kept as a reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    // (pivot column, vector with 1 at pivot and 0 at every other pivot)
    basis: Vec<(usize, Vector)>,
}

/// Serialized as its ambient dimension and echelon basis.
impl Serialize for Subspace {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Subspace", 2)?;
        st.serialize_field("ambient", &self.ambient)?;
        st.serialize_field("basis", &self.basis())?;
        st.end()
    }
}

impl Subspace {
    pub fn zero(ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn whole(ambient: usize) -> Subspace {
        let mut s = Subspace::zero(ambient);
        for i in 0..ambient {
            s.insert(&unit(ambient, i));
        }
        s
    }

    pub fn span<'a>(ambient: usize, vectors: impl IntoIterator<Item = &'a Vector>) -> Subspace {
        let mut s = Subspace::zero(ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> Vec<Vector> {
        self.basis.iter().map(|(_, v)| v.clone()).collect()
    }

    fn reduce(&self, v: &[Rat]) -> Vector {
        let mut w = v.to_vec();
        for (p, b) in &self.basis {
            if w[*p].is_zero() {
                continue;
            }
            let f = w[*p].clone();
            for (x, y) in w.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x -= y * &f;
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.reduce(v).iter().all(Rat::is_zero)
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length");
        let mut w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].recip();
        for x in w.iter_mut() {
            *x = &*x * &inv;
        }
        for (_, b) in self.basis.iter_mut() {
            if b[p].is_zero() {
                continue;
            }
            let f = b[p].clone();
            for (x, y) in b.iter_mut().zip(&w) {
                if !y.is_zero() {
                    *x -= y * &f;
                }
            }
        }
        self.basis.push((p, w));
        self.basis.sort_by_key(|(p, _)| *p);
        true
    }

    pub fn join(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for (_, v) in &other.basis {
            s.insert(v);
        }
        s
    }

    pub fn meet(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimensions");
        let (du, dw) = (self.dim(), other.dim());
        if du == 0 || dw == 0 {
            return Subspace::zero(self.ambient);
        }
        // columns: basis of self, then minus basis of other
        let m = RatMatrix::from_fn(self.ambient, du + dw, |r, c| {
            if c < du {
                self.basis[c].1[r].clone()
            } else {
                -&other.basis[c - du].1[r]
            }
        });
        let mut out = Subspace::zero(self.ambient);
        for k in kernel_basis(&m) {
            let v: Vector = (0..self.ambient)
                .map(|r| (0..du).map(|c| &k[c] * &self.basis[c].1[r]).sum())
                .collect();
            out.insert(&v);
        }
        out
    }

    /// `m(self)`, a subspace of Q^{m.rows()}.
    pub fn image(&self, m: &RatMatrix) -> Subspace {
        let mut s = Subspace::zero(m.rows());
        for (_, v) in &self.basis {
            s.insert(&m.mul_vec(v));
        }
        s
    }

    /// Whether `m(self)` is contained in `target`.
    pub fn maps_into(&self, m: &RatMatrix, target: &Subspace) -> bool {
        self.basis.iter().all(|(_, v)| target.contains(&m.mul_vec(v)))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|(_, v)| other.contains(v))
    }
}

/// The `i`-th standard basis vector of Q^n.
pub fn unit(n: usize, i: usize) -> Vector {
    let mut v = vec![Rat::zero(); n];
    v[i] = Rat::one();
    v
}

/// Smallest subspace containing `seeds` and stable under every matrix.
pub fn krylov_closure(mats: &[RatMatrix], seeds: &Subspace) -> Result<Subspace> {
    let k = seeds.ambient();
    if let Some(bad) = mats.iter().find(|m| m.rows() != k || m.cols() != k) {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix acting on Q^{k}",
            bad.rows(),
            bad.cols()
        )));
    }
    let mut space = seeds.clone();
    let mut frontier = seeds.basis();
    while let Some(v) = frontier.pop() {
        for m in mats {
            let w = m.mul_vec(&v);
            if space.insert(&w) {
                frontier.push(w);
            }
        }
    }
    Ok(space)
}

/// Dimension of the smallest subspace containing `v` that is stable under
/// every matrix in `mats`. Equals `v.len()` exactly when `v` is cyclic.
pub fn krylov_span_dim(mats: &[RatMatrix], v: &[Rat]) -> Result<usize> {
    let seeds = Subspace::span(v.len(), [&v.to_vec()]);
    Ok(krylov_closure(mats, &seeds)?.dim())
}

/// Matrix of the linear map `G -> G a - b G` on row-major flattened
/// `n x n` matrices, so that `[Y, Z] = YZ - ZY` is `sylvester_operator(Z, Z)`
/// applied to `Y`.
pub fn sylvester_operator(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    let n = a.rows();
    assert!(a.is_square() && b.is_square() && b.rows() == n, "square n x n inputs");
    let mut op = RatMatrix::zeros(n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            let row = i * n + j;
            for l in 0..n {
                if !a[(l, j)].is_zero() {
                    op[(row, i * n + l)] += &a[(l, j)];
                }
                if !b[(i, l)].is_zero() {
                    op[(row, l * n + j)] -= &b[(i, l)];
                }
            }
        }
    }
    op
}

/// Stack matrices with equal column counts on top of each other.
pub fn vstack(blocks: &[RatMatrix]) -> RatMatrix {
    let cols = blocks.first().map_or(0, RatMatrix::cols);
    assert!(blocks.iter().all(|b| b.cols() == cols), "column counts agree");
    let entries: Vec<Rat> = blocks.iter().flat_map(|b| b.entries().to_vec()).collect();
    RatMatrix::from_vec(entries.len() / cols.max(1), cols, entries)
}

/// Dimension of `{g : g m = m g for all m}`.
pub fn joint_centralizer_dim(mats: &[RatMatrix]) -> Result<usize> {
    let Some(first) = mats.first() else {
        return Err(Error::DimensionMismatch("no matrices".into()));
    };
    let n = first.rows();
    for m in mats {
        if m.rows() != n || m.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "expected {n}x{n}, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
    }
    let ops: Vec<RatMatrix> = mats.iter().map(|m| sylvester_operator(m, m)).collect();
    Ok(n * n - rank(&vstack(&ops)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn ints(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rat::from(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&RatMatrix::zeros(3, 3)), 0);
        assert_eq!(rank(&RatMatrix::identity(5)), 5);
        let ones = RatMatrix::from_fn(4, 4, |_, _| Rat::one());
        assert_eq!(rank(&ones), 1);
        let m = ints(&[&[0, 0, 1], &[0, 0, 2], &[1, 1, 0]]);
        assert_eq!(rank(&m), 2);
        let frac = RatMatrix::from_rows(vec![
            vec![rat(1, 2), rat(1, 3)],
            vec![rat(3, 2), rat(1, 1)],
        ])
        .unwrap();
        assert_eq!(rank(&frac), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&RatMatrix::identity(3)).is_empty());
        assert_eq!(
            kernel_basis(&ints(&[&[1, 1]])),
            vec![vec![rat(-1, 1), rat(1, 1)]]
        );
        assert_eq!(kernel_basis(&RatMatrix::zeros(2, 2)).len(), 2);
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = ints(&[&[1, 2], &[2, 4]]);
        let sol = solve(&a, &[rat(3, 1), rat(6, 1)]).unwrap();
        assert_eq!(a.mul_vec(&sol.particular), vec![rat(3, 1), rat(6, 1)]);
        assert_eq!(sol.homogeneous.len(), 1);
        assert!(solve(&a, &[rat(3, 1), rat(7, 1)]).is_none());
        assert!(!is_solvable(&a, &[rat(3, 1), rat(7, 1)]));
    }

    #[test]
    fn char_poly_examples() {
        let d = RatMatrix::diagonal(&[rat(2, 1), rat(-3, 1)]);
        assert_eq!(
            char_poly(&d).unwrap(),
            RatPoly::from_roots(&[rat(2, 1), rat(-3, 1)])
        );
        assert_eq!(
            char_poly(&RatMatrix::shift(2)).unwrap(),
            RatPoly::monomial(Rat::one(), 2)
        );
        // companion matrix of t^3 - 2t + 5
        let c = ints(&[&[0, 0, -5], &[1, 0, 2], &[0, 1, 0]]);
        assert_eq!(char_poly(&c).unwrap(), RatPoly::from_ints(&[5, -2, 0, 1]));
        assert!(char_poly(&RatMatrix::zeros(2, 3)).is_err());
        assert_eq!(char_poly(&RatMatrix::zeros(0, 0)).unwrap(), RatPoly::one());
    }

    #[test]
    fn char_poly_needs_row_swaps() {
        // zero in the first subdiagonal slot forces a pivot search
        let m = ints(&[&[1, 2, 3], &[0, 4, 5], &[6, 0, 7]]);
        let cp = char_poly(&m).unwrap();
        // det(tI - M) at t = 0 is det(-M) = -det(M)
        assert_eq!(cp.eval(&Rat::zero()), -determinant(&m).unwrap());
        assert_eq!(cp.coeff(2), -m.trace());
    }

    #[test]
    fn jordan_types() {
        assert_eq!(
            nilpotent_jordan_type(&RatMatrix::zeros(3, 3)).unwrap(),
            Partition::ones(3)
        );
        assert_eq!(
            nilpotent_jordan_type(&RatMatrix::shift(4)).unwrap(),
            Partition::single(4)
        );
        let z = RatMatrix::shift(2).block_diag(&RatMatrix::zeros(1, 1));
        assert_eq!(
            nilpotent_jordan_type(&z).unwrap(),
            "2,1".parse::<Partition>().unwrap()
        );
        assert!(matches!(
            nilpotent_jordan_type(&RatMatrix::identity(2)),
            Err(Error::NotNilpotent)
        ));
    }

    #[test]
    fn krylov_examples() {
        let e = |n, i| unit(n, i);
        assert_eq!(
            krylov_span_dim(&[RatMatrix::zeros(2, 2)], &[rat(1, 1), rat(2, 1)]).unwrap(),
            1
        );
        let j3 = RatMatrix::shift(3);
        assert_eq!(krylov_span_dim(std::slice::from_ref(&j3), &e(3, 0)).unwrap(), 3);
        assert_eq!(
            krylov_span_dim(&[j3.clone(), j3.pow(2)], &e(3, 1)).unwrap(),
            2
        );
        assert!(krylov_span_dim(&[RatMatrix::identity(2)], &e(3, 0)).is_err());
    }

    #[test]
    fn subspace_operations() {
        let mut s = Subspace::zero(3);
        assert!(s.insert(&[rat(1, 1), rat(1, 1), rat(0, 1)]));
        assert!(!s.insert(&[rat(2, 1), rat(2, 1), rat(0, 1)]));
        assert!(s.insert(&[rat(0, 1), rat(1, 1), rat(1, 1)]));
        assert!(s.contains(&[rat(1, 1), rat(0, 1), rat(-1, 1)]));
        assert!(!s.contains(&unit(3, 0)));
        assert_eq!(s.join(&Subspace::whole(3)).dim(), 3);

        let plane = Subspace::span(3, &[unit(3, 0), unit(3, 1)]);
        let meet = s.meet(&plane);
        assert_eq!(meet.dim(), 1);
        assert!(meet.contains(&[rat(1, 1), rat(1, 1), rat(0, 1)]));
        assert_eq!(s.meet(&Subspace::zero(3)).dim(), 0);
    }

    #[test]
    fn centralizer_of_distinct_diagonal() {
        let x = RatMatrix::diagonal(&[rat(0, 1), rat(1, 1)]);
        assert_eq!(joint_centralizer_dim(&[x.clone(), RatMatrix::zeros(2, 2)]).unwrap(), 2);
        assert_eq!(
            joint_centralizer_dim(&[RatMatrix::zeros(2, 2), RatMatrix::zeros(2, 2)]).unwrap(),
            4
        );
    }

    #[test]
    fn sylvester_operator_matches_commutator() {
        let y = ints(&[&[1, 2], &[3, 4]]);
        let z = ints(&[&[0, 1], &[5, -2]]);
        let via_op = sylvester_operator(&z, &z).mul_vec(&y.to_vec());
        assert_eq!(via_op, y.commutator(&z).to_vec());
    }
}
