//! The action-operad interface and the two finite instances.
//!
//! An instance supplies the groups `Λ(n)`, the homomorphism `π`, the block
//! sum `β` and the diagonal `δ`; the operad multiplication is derived as
//! `μ(g; h⃗) = δ(g)·β(h⃗)`.
//!
//! The action axiom is stated for `(g; f⃗)` with `fᵢ ∈ Λ(k_{π(g′)⁻¹(i)})`,
//! one index per position; that is the reading used by the checker.

pub mod axioms;
mod symmetric;
mod trivial;
pub mod words;

use std::collections::BTreeSet;
use std::fmt::Debug;
use std::hash::Hash;

use thiserror::Error;

use crate::perm::{Perm, PermError};
use crate::rewrite::{EqResult, Generator, Letter, Word, WordError};

pub use symmetric::Symmetric;
pub use trivial::Trivial;
pub use words::{FamilyGen, WordOperad};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OperadError {
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("elements come from different operads: {0} and {1}")]
    MixedInstances(String, String),
    #[error("{0}")]
    Bounds(String),
    #[error("cannot parse `{text}` at arity {arity}: {reason}")]
    Parse {
        text: String,
        arity: usize,
        reason: String,
    },
    #[error("{operad}({arity}) is infinite")]
    Infinite { operad: String, arity: usize },
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// Outcome of an equality query.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Verdict {
    Equal,
    Distinct(String),
    Inconclusive,
}

impl Verdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, Verdict::Equal)
    }
}

impl<G> From<&EqResult<G>> for Verdict {
    fn from(r: &EqResult<G>) -> Self {
        match r {
            EqResult::Equal(_) => Verdict::Equal,
            EqResult::Distinct(name) => Verdict::Distinct(name.clone()),
            EqResult::Inconclusive { .. } => Verdict::Inconclusive,
        }
    }
}

/// A word in the generators of `Λ(n)`: pairs of generator index and inverse flag.
pub type GenWord = Vec<(usize, bool)>;

pub trait ActionOperad: Send + Sync {
    type Elem: Clone + Eq + Hash + Ord + Debug + Send + Sync;

    fn name(&self) -> &str;
    fn arity(&self, g: &Self::Elem) -> usize;
    fn pi(&self, g: &Self::Elem) -> Perm;
    fn identity(&self, n: usize) -> Self::Elem;
    fn mul(&self, g: &Self::Elem, h: &Self::Elem) -> Result<Self::Elem, OperadError>;
    fn inv(&self, g: &Self::Elem) -> Self::Elem;
    fn beta(&self, hs: &[Self::Elem]) -> Self::Elem;
    fn delta(&self, g: &Self::Elem, sizes: &[usize]) -> Result<Self::Elem, OperadError>;

    fn mu(&self, g: &Self::Elem, hs: &[Self::Elem]) -> Result<Self::Elem, OperadError> {
        let sizes: Vec<usize> = hs.iter().map(|h| self.arity(h)).collect();
        self.mul(&self.delta(g, &sizes)?, &self.beta(hs))
    }

    fn equal(&self, a: &Self::Elem, b: &Self::Elem) -> Verdict;

    /// All of `Λ(n)` when it is finite.
    fn elements(&self, n: usize) -> Option<Vec<Self::Elem>>;

    /// Generators of `Λ(n)`, in a fixed order.
    fn generators(&self, n: usize) -> Vec<Self::Elem>;

    /// Writes `g` as a product of `generators(n)`.
    fn factor(&self, g: &Self::Elem) -> GenWord;

    /// Defining relations of `Λ(n)` over `generators(n)`.
    fn relations(&self, n: usize) -> Vec<(GenWord, GenWord)>;

    fn parse_element(&self, text: &str, arity: usize) -> Result<Self::Elem, OperadError>;
    fn render(&self, g: &Self::Elem) -> String;

    /// `Λ(n)` when finite, otherwise the distinct reduced products of at most
    /// `max_len` generators and inverses, in order of length.
    fn bounded_elements(&self, n: usize, max_len: usize) -> Vec<Self::Elem> {
        if let Some(all) = self.elements(n) {
            return all;
        }
        let mut letters = Vec::new();
        for g in self.generators(n) {
            let gi = self.inv(&g);
            letters.push(g.clone());
            if gi != g {
                letters.push(gi);
            }
        }
        let mut seen = BTreeSet::new();
        let mut out = vec![self.identity(n)];
        seen.insert(self.identity(n));
        let mut layer = vec![self.identity(n)];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &layer {
                for l in &letters {
                    let p = self.mul(w, l).expect("same arity");
                    if seen.insert(p.clone()) {
                        next.push(p.clone());
                        out.push(p);
                    }
                }
            }
            layer = next;
        }
        out
    }

    /// Evaluates a generator word.
    fn eval_gen_word(&self, n: usize, word: &[(usize, bool)]) -> Result<Self::Elem, OperadError> {
        let gens = self.generators(n);
        let mut acc = self.identity(n);
        for &(i, inverse) in word {
            let g = gens.get(i).ok_or_else(|| {
                OperadError::Bounds(format!("generator {i} out of range at arity {n}"))
            })?;
            let g = if inverse { self.inv(g) } else { g.clone() };
            acc = self.mul(&acc, &g)?;
        }
        Ok(acc)
    }
}

pub(crate) fn check_sizes(n: usize, sizes: &[usize]) -> Result<(), OperadError> {
    if n != sizes.len() {
        return Err(OperadError::ArityMismatch {
            expected: n,
            found: sizes.len(),
        });
    }
    Ok(())
}

/// Extends a generator-level diagonal to words.
///
/// Folds from the last letter: the letter `x` receives the current sizes and
/// the letters before it see those sizes permuted by `π(x)`. An inverse letter
/// `x⁻¹` at sizes `s` is the inverse of `δ(x)` at sizes `sᵢ' = s_{π(x)(i)}`.
/// The raw letters are folded without prior reduction.
pub fn fold_delta<G: Generator>(
    word: &Word<G>,
    sizes: &[usize],
    letter_pi: impl Fn(&G) -> Perm,
    delta_gen: impl Fn(&G, &[usize]) -> Result<Word<G>, OperadError>,
) -> Result<Word<G>, OperadError> {
    check_sizes(word.arity(), sizes)?;
    let total: usize = sizes.iter().sum();
    let mut cur = sizes.to_vec();
    let mut pieces: Vec<Word<G>> = Vec::with_capacity(word.len());
    for letter in word.letters().iter().rev() {
        let p = letter_pi(&letter.gen);
        let (piece, next) = if letter.inverse {
            let pre: Vec<usize> = (1..=cur.len()).map(|i| cur[p.apply(i) - 1]).collect();
            (delta_gen(&letter.gen, &pre)?.inverse(), pre)
        } else {
            (delta_gen(&letter.gen, &cur)?, p.permute(&cur))
        };
        pieces.push(piece);
        cur = next;
    }
    let mut letters: Vec<Letter<G>> = Vec::new();
    for piece in pieces.iter().rev() {
        letters.extend(piece.letters().iter().cloned());
    }
    Ok(Word::new(total, letters)?)
}

/// Shifts the letters of each block and concatenates them.
pub(crate) fn shift_concat<G: Generator>(
    ws: &[Word<G>],
    shift: impl Fn(&G, usize) -> G,
) -> Word<G> {
    let mut offset = 0;
    let mut letters = Vec::new();
    for w in ws {
        letters.extend(w.letters().iter().map(|l| Letter {
            gen: shift(&l.gen, offset),
            inverse: l.inverse,
        }));
        offset += w.arity();
    }
    Word::new(offset, letters).expect("shifted letters stay in range")
}
