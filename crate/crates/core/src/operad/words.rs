//! Action operads whose groups are given by generators and relations.

use std::collections::HashMap;
use std::marker::PhantomData;
use std::sync::{Arc, Mutex};

use super::{fold_delta, shift_concat, ActionOperad, GenWord, OperadError, Verdict};
use crate::perm::Perm;
use crate::rewrite::{EqResult, Generator, RelationSystem, SearchBounds, Word};

/// A generator alphabet together with the operad structure on its words.
pub trait FamilyGen: Generator {
    const NAME: &'static str;

    /// Generators at arity `n`, in a fixed order.
    fn all_at(n: usize) -> Vec<Self>;
    /// Underlying permutation of the generator at arity `n`.
    fn pi_at(&self, n: usize) -> Perm;
    /// The same generator moved `by` positions to the right.
    fn shift(&self, by: usize) -> Self;
    /// `δ` of the generator at arity `sizes.len()`.
    fn delta_gen(&self, sizes: &[usize]) -> Result<Word<Self>, OperadError>;
    fn relation_system(n: usize) -> RelationSystem<Self>;
    fn parse_word(text: &str, n: usize) -> Result<Word<Self>, OperadError>;
    /// All elements when the group at arity `n` is finite.
    fn finite_elements(n: usize) -> Option<Vec<Word<Self>>>;
}

/// `π` of a word: the product of the letters' permutations.
pub fn word_pi<G: FamilyGen>(w: &Word<G>) -> Perm {
    let n = w.arity();
    let mut acc = Perm::identity(n);
    for l in w.letters() {
        let p = l.gen.pi_at(n);
        let p = if l.inverse { p.inverse() } else { p };
        acc = acc.compose(&p).expect("letters share the word's arity");
    }
    acc
}

/// The operad of words in `G`, with equality decided by bounded rewriting.
pub struct WordOperad<G: FamilyGen> {
    bounds: SearchBounds,
    systems: Mutex<HashMap<usize, Arc<RelationSystem<G>>>>,
    _gen: PhantomData<G>,
}

impl<G: FamilyGen> Default for WordOperad<G> {
    fn default() -> Self {
        Self::with_bounds(SearchBounds::default())
    }
}

impl<G: FamilyGen> WordOperad<G> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_bounds(bounds: SearchBounds) -> Self {
        WordOperad {
            bounds,
            systems: Mutex::new(HashMap::new()),
            _gen: PhantomData,
        }
    }

    pub fn bounds(&self) -> SearchBounds {
        self.bounds
    }

    /// The relation system at arity `n`, built once.
    pub fn system(&self, n: usize) -> Arc<RelationSystem<G>> {
        if let Some(s) = self.systems.lock().expect("not poisoned").get(&n) {
            return s.clone();
        }
        let built = Arc::new(G::relation_system(n));
        self.systems
            .lock()
            .expect("not poisoned")
            .entry(n)
            .or_insert(built)
            .clone()
    }

    /// Equality with the rewrite path kept.
    pub fn equal_words(&self, a: &Word<G>, b: &Word<G>, bounds: SearchBounds) -> Result<EqResult<G>, OperadError> {
        if a.arity() != b.arity() {
            return Err(OperadError::ArityMismatch {
                expected: a.arity(),
                found: b.arity(),
            });
        }
        Ok(self.system(a.arity()).equal(a, b, bounds)?)
    }
}

impl<G: FamilyGen> ActionOperad for WordOperad<G> {
    type Elem = Word<G>;

    fn name(&self) -> &str {
        G::NAME
    }

    fn arity(&self, g: &Word<G>) -> usize {
        g.arity()
    }

    fn pi(&self, g: &Word<G>) -> Perm {
        word_pi(g)
    }

    fn identity(&self, n: usize) -> Word<G> {
        Word::empty(n)
    }

    fn mul(&self, g: &Word<G>, h: &Word<G>) -> Result<Word<G>, OperadError> {
        Ok(g.mul(h)?)
    }

    fn inv(&self, g: &Word<G>) -> Word<G> {
        g.inverse()
    }

    fn beta(&self, hs: &[Word<G>]) -> Word<G> {
        shift_concat(hs, |g, by| g.shift(by))
    }

    fn delta(&self, g: &Word<G>, sizes: &[usize]) -> Result<Word<G>, OperadError> {
        let n = g.arity();
        fold_delta(g, sizes, |x| x.pi_at(n), |x, s| x.delta_gen(s))
    }

    fn equal(&self, a: &Word<G>, b: &Word<G>) -> Verdict {
        match self.equal_words(a, b, self.bounds) {
            Ok(r) => Verdict::from(&r),
            Err(e) => Verdict::Distinct(e.to_string()),
        }
    }

    fn elements(&self, n: usize) -> Option<Vec<Word<G>>> {
        G::finite_elements(n)
    }

    fn generators(&self, n: usize) -> Vec<Word<G>> {
        G::all_at(n)
            .into_iter()
            .map(|g| Word::gen(n, g).expect("generator valid at its arity"))
            .collect()
    }

    fn factor(&self, g: &Word<G>) -> GenWord {
        let index: HashMap<G, usize> = G::all_at(g.arity())
            .into_iter()
            .enumerate()
            .map(|(i, x)| (x, i))
            .collect();
        g.letters()
            .iter()
            .map(|l| (index[&l.gen], l.inverse))
            .collect()
    }

    fn relations(&self, n: usize) -> Vec<(GenWord, GenWord)> {
        self.system(n)
            .relations()
            .iter()
            .map(|r| (self.factor(&r.lhs), self.factor(&r.rhs)))
            .collect()
    }

    fn parse_element(&self, text: &str, arity: usize) -> Result<Word<G>, OperadError> {
        G::parse_word(text, arity)
    }

    fn render(&self, g: &Word<G>) -> String {
        g.to_string()
    }
}
