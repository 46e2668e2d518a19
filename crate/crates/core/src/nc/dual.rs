//! The quadratic dual: a twisted exterior algebra on `ξ, η, ζ`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::rewrite::{specialize, RewriteSystem, Rule, Terms};
use crate::linalg::{kernel_basis, rank};
use crate::matrix::{RatMatrix, Vector};
use crate::poly::RatPoly;
use crate::rat::Rat;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum DualGen {
    Xi,
    Eta,
    Zeta,
}

impl DualGen {
    pub const ALL: [DualGen; 3] = [DualGen::Xi, DualGen::Eta, DualGen::Zeta];

    pub fn name(self) -> &'static str {
        match self {
            DualGen::Xi => "xi",
            DualGen::Eta => "eta",
            DualGen::Zeta => "zeta",
        }
    }
}

/// Rules `ξξ → 0`, `ηη → 0`, `ηξ → −ξη`, `ζξ → −ξζ`, `ζη → −ηζ` and
/// `ζζ → −2τ ξη`.
pub fn dual_rules() -> RewriteSystem<DualGen> {
    use DualGen::*;
    let minus_one = || RatPoly::from_ints(&[-1]);
    RewriteSystem::new(
        DualGen::ALL.to_vec(),
        vec![
            Rule {
                lhs: [Xi, Xi],
                rhs: vec![],
            },
            Rule {
                lhs: [Eta, Eta],
                rhs: vec![],
            },
            Rule {
                lhs: [Eta, Xi],
                rhs: vec![(vec![Xi, Eta], minus_one())],
            },
            Rule {
                lhs: [Zeta, Xi],
                rhs: vec![(vec![Xi, Zeta], minus_one())],
            },
            Rule {
                lhs: [Zeta, Eta],
                rhs: vec![(vec![Eta, Zeta], minus_one())],
            },
            Rule {
                lhs: [Zeta, Zeta],
                rhs: vec![(vec![Xi, Eta], RatPoly::from_ints(&[0, -2]))],
            },
        ],
    )
}

/// An element written in the basis of increasing words
/// `1, ξ, η, ζ, ξη, ξζ, ηζ, ξηζ`.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct DualElement {
    terms: Terms<DualGen>,
}

impl DualElement {
    pub fn zero() -> DualElement {
        DualElement::default()
    }

    pub fn one() -> DualElement {
        DualElement::word(&[], RatPoly::one())
    }

    pub fn generator(g: DualGen) -> DualElement {
        DualElement::word(&[g], RatPoly::one())
    }

    /// Any word, reduced to the canonical basis.
    pub fn word(letters: &[DualGen], coeff: RatPoly) -> DualElement {
        DualElement {
            terms: dual_rules().reduce_word(letters, coeff),
        }
    }

    pub fn terms(&self) -> &Terms<DualGen> {
        &self.terms
    }

    pub fn coeff(&self, word: &[DualGen]) -> RatPoly {
        self.terms.get(word).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn specialize(&self, tau: &Rat) -> DualElement {
        DualElement {
            terms: specialize(&self.terms, tau)
                .into_iter()
                .map(|(w, c)| (w, RatPoly::constant(c)))
                .collect(),
        }
    }

    pub fn add(&self, other: &DualElement) -> DualElement {
        let mut merged = Terms::new();
        for (w, c) in self.terms.iter().chain(&other.terms) {
            let s = &merged.get(w).cloned().unwrap_or_default() + c;
            merged.insert(w.clone(), s);
        }
        merged.retain(|_, c| !c.is_zero());
        DualElement { terms: merged }
    }
}

impl fmt::Display for DualElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let word = if w.is_empty() {
                    "1".to_string()
                } else {
                    w.iter().map(|g| g.name()).collect::<Vec<_>>().join("*")
                };
                format!("({})*{}", c.display_in("tau"), word)
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

pub fn dual_multiply(a: &DualElement, b: &DualElement) -> DualElement {
    let mut product = Terms::new();
    for (w1, c1) in &a.terms {
        for (w2, c2) in &b.terms {
            let mut w = w1.clone();
            w.extend_from_slice(w2);
            let s = &product.get(&w).cloned().unwrap_or_default() + &(c1 * c2);
            product.insert(w, s);
        }
    }
    product.retain(|_, c: &mut RatPoly| !c.is_zero());
    DualElement {
        terms: dual_rules().reduce(product),
    }
}

/// Dimension of each graded piece at a fixed τ, for degrees `0..=max`,
/// computed as the rank of the span of all reduced words of that length.
pub fn dual_graded_dims(tau: &Rat, max: usize) -> Vec<usize> {
    let sys = dual_rules();
    (0..=max)
        .map(|i| {
            let basis = increasing_words(i);
            if basis.is_empty() {
                return 0;
            }
            let rows: Vec<Vec<Rat>> = all_words(i)
                .iter()
                .map(|w| {
                    let t = specialize(&sys.reduce_word(w, RatPoly::one()), tau);
                    basis
                        .iter()
                        .map(|b| t.get(b).cloned().unwrap_or_else(Rat::zero))
                        .collect()
                })
                .collect();
            rank(&RatMatrix::from_rows(rows).expect("rectangular"))
        })
        .collect()
}

fn increasing_words(len: usize) -> Vec<Vec<DualGen>> {
    dual_rules().irreducible_words(len)
}

fn all_words(len: usize) -> Vec<Vec<DualGen>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w: Vec<DualGen>| {
                DualGen::ALL.iter().map(move |&g| {
                    let mut v = w.clone();
                    v.push(g);
                    v
                })
            })
            .collect();
    }
    out
}

/// Matrix of `A^!_1 ⊗ A^!_1 → A^!_2` at a fixed τ; column `3a + b`, rows
/// `ξη, ξζ, ηζ`.
pub fn dual_multiplication_matrix(tau: &Rat) -> RatMatrix {
    let basis = increasing_words(2);
    let sys = dual_rules();
    let products: Vec<BTreeMap<Vec<DualGen>, Rat>> = DualGen::ALL
        .iter()
        .flat_map(|&a| DualGen::ALL.iter().map(move |&b| [a, b]))
        .map(|w| specialize(&sys.reduce_word(&w, RatPoly::one()), tau))
        .collect();
    RatMatrix::from_fn(basis.len(), 9, |row, col| {
        products[col].get(&basis[row]).cloned().unwrap_or_else(Rat::zero)
    })
}

/// Basis of `Ker(A^!_1 ⊗ A^!_1 → A^!_2)`, indexed `3a + b`.
pub fn dual_relation_kernel(tau: &Rat) -> Vec<Vector> {
    kernel_basis(&dual_multiplication_matrix(tau))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Subspace;
    use crate::rat::rat;
    use DualGen::*;

    fn gen(g: DualGen) -> DualElement {
        DualElement::generator(g)
    }

    #[test]
    fn sample_products() {
        assert!(dual_multiply(&gen(Xi), &gen(Xi)).is_zero());
        assert_eq!(
            dual_multiply(&gen(Eta), &gen(Xi)),
            DualElement::word(&[Xi, Eta], RatPoly::from_ints(&[-1]))
        );
        let zz = dual_multiply(&gen(Zeta), &gen(Zeta));
        assert_eq!(zz.coeff(&[Xi, Eta]), RatPoly::from_ints(&[0, -2]));
    }

    #[test]
    fn dims_are_1331() {
        for tau in [rat(0, 1), rat(1, 1), rat(-2, 1), rat(3, 5)] {
            assert_eq!(dual_graded_dims(&tau, 5), vec![1, 3, 3, 1, 0, 0]);
        }
    }

    #[test]
    fn confluent() {
        assert!(dual_rules().is_confluent());
    }

    #[test]
    fn kernel_contains_deformed_square() {
        for tau in [rat(1, 1), rat(-2, 1), rat(3, 5), rat(0, 1)] {
            let k = dual_relation_kernel(&tau);
            assert_eq!(k.len(), 6);
            let space = Subspace::span(9, &k);
            let mut v = vec![Rat::zero(); 9];
            v[8] = Rat::one();
            v[1] = tau.clone();
            v[3] = -&tau;
            assert!(space.contains(&v));
            let mut xi_xi = vec![Rat::zero(); 9];
            xi_xi[0] = Rat::one();
            assert!(space.contains(&xi_xi));
        }
    }

    #[test]
    fn associative_on_generators() {
        let gens: Vec<DualElement> = DualGen::ALL.iter().map(|&g| gen(g)).collect();
        for a in &gens {
            for b in &gens {
                for c in &gens {
                    let left = dual_multiply(&dual_multiply(a, b), c);
                    let right = dual_multiply(a, &dual_multiply(b, c));
                    assert_eq!(left, right);
                }
            }
        }
    }
}
