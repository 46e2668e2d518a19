//! A tiny quadratic rewriting engine.
//!
//! Rules rewrite a two-letter word into a linear combination of words, with
//! coefficients that are polynomials in the deformation parameter τ. That is
//! all the two presentations in this crate need; general Gröbner machinery is
//! deliberately absent.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt::Debug;

use crate::poly::RatPoly;
use crate::rat::Rat;

/// A linear combination of words.
pub type Terms<L> = BTreeMap<Vec<L>, RatPoly>;

#[derive(Clone, Debug)]
pub struct Rule<L> {
    pub lhs: [L; 2],
    pub rhs: Vec<(Vec<L>, RatPoly)>,
}

#[derive(Clone, Debug)]
pub struct RewriteSystem<L> {
    alphabet: Vec<L>,
    rules: Vec<Rule<L>>,
}

fn add_term<L: Ord + Clone>(terms: &mut Terms<L>, word: Vec<L>, c: RatPoly) {
    if c.is_zero() {
        return;
    }
    match terms.entry(word) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            let sum = e.get() + &c;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

impl<L: Copy + Ord + Debug> RewriteSystem<L> {
    pub fn new(alphabet: Vec<L>, rules: Vec<Rule<L>>) -> Self {
        RewriteSystem { alphabet, rules }
    }

    pub fn alphabet(&self) -> &[L] {
        &self.alphabet
    }

    pub fn rules(&self) -> &[Rule<L>] {
        &self.rules
    }

    fn rule_for(&self, a: L, b: L) -> Option<&Rule<L>> {
        self.rules.iter().find(|r| r.lhs == [a, b])
    }

    /// Leftmost position where some rule applies.
    pub fn find_redex(&self, word: &[L]) -> Option<(usize, &Rule<L>)> {
        word.windows(2)
            .enumerate()
            .find_map(|(i, w)| self.rule_for(w[0], w[1]).map(|r| (i, r)))
    }

    pub fn is_irreducible(&self, word: &[L]) -> bool {
        self.find_redex(word).is_none()
    }

    /// Applies the rule for the pair at `pos` once.
    pub fn rewrite_at(&self, word: &[L], pos: usize) -> Option<Terms<L>> {
        let rule = self.rule_for(word[pos], word[pos + 1])?;
        let mut out = Terms::new();
        for (rep, c) in &rule.rhs {
            let mut w = word[..pos].to_vec();
            w.extend_from_slice(rep);
            w.extend_from_slice(&word[pos + 2..]);
            add_term(&mut out, w, c.clone());
        }
        Some(out)
    }

    /// Rewrites until every word is irreducible.
    pub fn reduce(&self, input: Terms<L>) -> Terms<L> {
        let mut pending = input;
        let mut done = Terms::new();
        while let Some((word, c)) = pending.pop_first() {
            if c.is_zero() {
                continue;
            }
            match self.find_redex(&word) {
                None => add_term(&mut done, word, c),
                Some((pos, _)) => {
                    for (w, d) in self.rewrite_at(&word, pos).unwrap() {
                        add_term(&mut pending, w, &c * &d);
                    }
                }
            }
        }
        done
    }

    pub fn reduce_word(&self, word: &[L], coeff: RatPoly) -> Terms<L> {
        let mut t = Terms::new();
        add_term(&mut t, word.to_vec(), coeff);
        self.reduce(t)
    }

    /// Overlap ambiguities `abc` where both `ab` and `bc` are left-hand sides.
    pub fn overlaps(&self) -> Vec<[L; 3]> {
        let mut out = Vec::new();
        for r in &self.rules {
            for s in &self.rules {
                if r.lhs[1] == s.lhs[0] {
                    out.push([r.lhs[0], r.lhs[1], s.lhs[1]]);
                }
            }
        }
        out
    }

    /// The two reductions of an overlap: rewrite the left pair first, or the
    /// right pair first, then reduce fully.
    pub fn resolve_overlap(&self, word: [L; 3]) -> (Terms<L>, Terms<L>) {
        let left = self.reduce(self.rewrite_at(&word, 0).unwrap_or_default());
        let right = self.reduce(self.rewrite_at(&word, 1).unwrap_or_default());
        (left, right)
    }

    /// Diamond-lemma check: every overlap resolves identically, as
    /// polynomials in τ.
    pub fn is_confluent(&self) -> bool {
        self.overlaps().into_iter().all(|w| {
            let (a, b) = self.resolve_overlap(w);
            a == b
        })
    }

    /// Same check after substituting a value for τ.
    pub fn is_confluent_at(&self, tau: &Rat) -> bool {
        self.overlaps().into_iter().all(|w| {
            let (a, b) = self.resolve_overlap(w);
            specialize(&a, tau) == specialize(&b, tau)
        })
    }

    /// Number of irreducible words of length `degree`.
    pub fn count_irreducible(&self, degree: usize) -> usize {
        if degree == 0 {
            return 1;
        }
        // counts[i] = irreducible words of the current length ending in alphabet[i]
        let mut counts = vec![1usize; self.alphabet.len()];
        for _ in 1..degree {
            counts = self
                .alphabet
                .iter()
                .map(|&b| {
                    self.alphabet
                        .iter()
                        .zip(&counts)
                        .filter(|(&a, _)| self.rule_for(a, b).is_none())
                        .map(|(_, c)| c)
                        .sum()
                })
                .collect();
        }
        counts.iter().sum()
    }

    /// All irreducible words of length `degree`, in lexicographic order.
    pub fn irreducible_words(&self, degree: usize) -> Vec<Vec<L>> {
        let mut words: Vec<Vec<L>> = vec![Vec::new()];
        for _ in 0..degree {
            let mut next = Vec::new();
            for w in &words {
                for &b in &self.alphabet {
                    if w.last().is_some_and(|&a| self.rule_for(a, b).is_some()) {
                        continue;
                    }
                    let mut v = w.clone();
                    v.push(b);
                    next.push(v);
                }
            }
            words = next;
        }
        words
    }
}

/// Evaluates every coefficient at `tau`, dropping terms that vanish.
pub fn specialize<L: Ord + Clone>(terms: &Terms<L>, tau: &Rat) -> BTreeMap<Vec<L>, Rat> {
    terms
        .iter()
        .map(|(w, c)| (w.clone(), c.eval(tau)))
        .filter(|(_, c)| !c.is_zero())
        .collect()
}
