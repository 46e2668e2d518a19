//! The algebra with `[x,z] = [y,z] = 0` and `[x,y] = τz²`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::rewrite::{RewriteSystem, Rule, Terms};
use crate::linalg::kernel_basis;
use crate::matrix::{RatMatrix, Vector};
use crate::poly::RatPoly;
use crate::rat::Rat;
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Gen {
    X,
    Y,
    Z,
}

impl Gen {
    pub const ALL: [Gen; 3] = [Gen::X, Gen::Y, Gen::Z];

    pub fn symbol(self) -> char {
        match self {
            Gen::X => 'x',
            Gen::Y => 'y',
            Gen::Z => 'z',
        }
    }
}

/// A formal word in `x, y, z` with a coefficient that may depend on τ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NcWord {
    pub letters: Vec<Gen>,
    pub coeff: RatPoly,
}

impl NcWord {
    pub fn new(letters: Vec<Gen>) -> NcWord {
        NcWord {
            letters,
            coeff: RatPoly::one(),
        }
    }
}

/// Parses strings such as `"yxz"` or `"y x z"`.
impl FromStr for NcWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<NcWord> {
        let letters = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '*')
            .map(|c| match c {
                'x' => Ok(Gen::X),
                'y' => Ok(Gen::Y),
                'z' => Ok(Gen::Z),
                _ => Err(Error::Parse(format!("unexpected letter {c:?} in word {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(NcWord::new(letters))
    }
}

/// The normal-form monomial `x^a y^b z^c`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial {
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

impl Monomial {
    pub fn new(x: usize, y: usize, z: usize) -> Monomial {
        Monomial { x, y, z }
    }

    pub fn degree(&self) -> usize {
        self.x + self.y + self.z
    }

    pub fn letters(&self) -> Vec<Gen> {
        let mut w = vec![Gen::X; self.x];
        w.extend(std::iter::repeat(Gen::Y).take(self.y));
        w.extend(std::iter::repeat(Gen::Z).take(self.z));
        w
    }

    fn from_normal_word(w: &[Gen]) -> Monomial {
        debug_assert!(w.windows(2).all(|p| p[0] <= p[1]));
        let count = |g| w.iter().filter(|&&l| l == g).count();
        Monomial::new(count(Gen::X), count(Gen::Y), count(Gen::Z))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{} y^{} z^{}", self.x, self.y, self.z)
    }
}

/// A linear combination of normal-form monomials.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct NcElement {
    terms: BTreeMap<Monomial, RatPoly>,
}

impl NcElement {
    pub fn zero() -> NcElement {
        NcElement::default()
    }

    pub fn monomial(m: Monomial, coeff: RatPoly) -> NcElement {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(m, coeff);
        }
        NcElement { terms }
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, RatPoly> {
        &self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> RatPoly {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Substitutes a value for τ.
    pub fn specialize(&self, tau: &Rat) -> NcElement {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (*m, RatPoly::constant(c.eval(tau))))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        NcElement { terms }
    }

    fn from_terms(terms: Terms<Gen>) -> NcElement {
        let mut out = NcElement::zero();
        for (w, c) in terms {
            out = &out + &NcElement::monomial(Monomial::from_normal_word(&w), c);
        }
        out
    }

    fn to_terms(&self) -> Terms<Gen> {
        self.terms.iter().map(|(m, c)| (m.letters(), c.clone())).collect()
    }
}

impl fmt::Display for NcElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("({})*{}", c.display_in("tau"), m))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Add for &NcElement {
    type Output = NcElement;
    fn add(self, rhs: &NcElement) -> NcElement {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            let sum = &terms.get(m).cloned().unwrap_or_default() + c;
            if sum.is_zero() {
                terms.remove(m);
            } else {
                terms.insert(*m, sum);
            }
        }
        NcElement { terms }
    }
}

impl Mul for &NcElement {
    type Output = NcElement;
    fn mul(self, rhs: &NcElement) -> NcElement {
        let mut product = Terms::new();
        for (w1, c1) in self.to_terms() {
            for (w2, c2) in rhs.to_terms() {
                let mut w = w1.clone();
                w.extend_from_slice(&w2);
                let c = &c1 * &c2;
                let acc = product.remove(&w).unwrap_or_default();
                let sum = &acc + &c;
                if !sum.is_zero() {
                    product.insert(w, sum);
                }
            }
        }
        NcElement::from_terms(rules().reduce(product))
    }
}

/// The rewrite rules `zx → xz`, `zy → yz`, `yx → xy − τz²`.
pub fn rules() -> RewriteSystem<Gen> {
    use Gen::*;
    let one = RatPoly::one;
    let minus_tau = -RatPoly::t();
    RewriteSystem::new(
        Gen::ALL.to_vec(),
        vec![
            Rule {
                lhs: [Z, X],
                rhs: vec![(vec![X, Z], one())],
            },
            Rule {
                lhs: [Z, Y],
                rhs: vec![(vec![Y, Z], one())],
            },
            Rule {
                lhs: [Y, X],
                rhs: vec![(vec![X, Y], one()), (vec![Z, Z], minus_tau)],
            },
        ],
    )
}

pub fn normal_form(w: &NcWord) -> NcElement {
    NcElement::from_terms(rules().reduce_word(&w.letters, w.coeff.clone()))
}

/// Number of normal-form monomials of degree `i`. Equals the dimension of
/// the degree-`i` piece because [`rules`] is confluent.
pub fn graded_dim_a(i: usize) -> usize {
    rules().count_irreducible(i)
}

/// The monomials `x^a y^b z^c` with `a + b + c = i`, in lexicographic order.
pub fn degree_basis(i: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    for a in (0..=i).rev() {
        for b in (0..=i - a).rev() {
            out.push(Monomial::new(a, b, i - a - b));
        }
    }
    out
}

/// Matrix of the multiplication `A_1 ⊗ A_1 → A_2` at a fixed τ. Column
/// `3a + b` is the product of generators `a` and `b`; rows follow
/// [`degree_basis`]`(2)`.
pub fn multiplication_matrix(tau: &Rat) -> RatMatrix {
    let basis = degree_basis(2);
    let products: Vec<NcElement> = Gen::ALL
        .iter()
        .flat_map(|&a| Gen::ALL.iter().map(move |&b| (a, b)))
        .map(|(a, b)| normal_form(&NcWord::new(vec![a, b])).specialize(tau))
        .collect();
    RatMatrix::from_fn(basis.len(), 9, |row, col| {
        products[col].coeff(&basis[row]).coeff(0)
    })
}

/// Basis of `Ker(A_1 ⊗ A_1 → A_2)`, as vectors indexed `3a + b`.
pub fn relation_kernel_k(tau: &Rat) -> Vec<Vector> {
    kernel_basis(&multiplication_matrix(tau))
}

/// The three standard relations `y⊗z − z⊗y`, `x⊗z − z⊗x` and
/// `x⊗y − y⊗x − τ z⊗z`, as vectors indexed `3a + b`.
pub fn commutator_relations(tau: &Rat) -> [Vector; 3] {
    let tensor = |pairs: &[(usize, usize, Rat)]| {
        let mut v = vec![Rat::zero(); 9];
        for (a, b, c) in pairs {
            v[3 * a + b] = &v[3 * a + b] + c;
        }
        v
    };
    let one = Rat::one();
    [
        tensor(&[(1, 2, one.clone()), (2, 1, -&one)]),
        tensor(&[(0, 2, one.clone()), (2, 0, -&one)]),
        tensor(&[(0, 1, one.clone()), (1, 0, -&one), (2, 2, -tau)]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Subspace;
    use crate::rat::rat;

    fn nf(s: &str) -> NcElement {
        normal_form(&s.parse().unwrap())
    }

    fn mono(a: usize, b: usize, c: usize, coeff: RatPoly) -> NcElement {
        NcElement::monomial(Monomial::new(a, b, c), coeff)
    }

    #[test]
    fn basic_rewrites() {
        let tau = RatPoly::t();
        assert_eq!(nf("yx"), &mono(1, 1, 0, RatPoly::one()) + &mono(0, 0, 2, -tau.clone()));
        assert_eq!(nf("zx"), mono(1, 0, 1, RatPoly::one()));
        assert_eq!(
            nf("yxz"),
            &mono(1, 1, 1, RatPoly::one()) + &mono(0, 0, 3, -tau)
        );
    }

    #[test]
    fn commutative_at_zero() {
        assert_eq!(nf("yx").specialize(&Rat::zero()), mono(1, 1, 0, RatPoly::one()));
    }

    #[test]
    fn confluent_symbolically() {
        let sys = rules();
        assert_eq!(sys.overlaps().len(), 1);
        assert!(sys.is_confluent());
    }

    #[test]
    fn dims_and_basis() {
        assert_eq!(graded_dim_a(0), 1);
        assert_eq!(graded_dim_a(1), 3);
        assert_eq!(graded_dim_a(3), 10);
        for i in 0..8 {
            assert_eq!(degree_basis(i).len(), graded_dim_a(i));
        }
    }

    #[test]
    fn kernel_spans_commutators() {
        for tau in [rat(1, 1), rat(0, 1), rat(-2, 1), rat(3, 5)] {
            let k = relation_kernel_k(&tau);
            assert_eq!(k.len(), 3);
            let std = commutator_relations(&tau);
            assert_eq!(Subspace::span(9, &k), Subspace::span(9, std.iter()));
        }
    }

    #[test]
    fn parse_rejects_junk() {
        assert!("xqz".parse::<NcWord>().is_err());
        assert_eq!("y x".parse::<NcWord>().unwrap().letters, vec![Gen::Y, Gen::X]);
    }
}
