//! Words over generator alphabets and a bounded equality search.
//!
//! Relations are turned into cyclically reduced relators `lhs·rhs⁻¹`. Every
//! rotation of a relator or of its inverse, split as `u·v`, yields the move
//! `u → v⁻¹`. The search only uses moves with `|u| ≥ |v|` and explores freely
//! reduced words breadth first from both ends until the frontiers meet.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use thiserror::Error;

use crate::perm::Perm;

/// A generator symbol of some group family.
pub trait Generator: Clone + Eq + Hash + Ord + fmt::Debug + Send + Sync + 'static {
    /// Whether the generator squares to the identity.
    fn involutive(&self) -> bool;
    /// Whether the generator exists at arity `n`.
    fn valid_at(&self, n: usize) -> bool;
    /// Text form of the letter, or of its inverse when `inverse` is set.
    fn render(&self, inverse: bool) -> String;
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter<G> {
    pub gen: G,
    pub inverse: bool,
}

impl<G: Generator> Letter<G> {
    pub fn pos(gen: G) -> Self {
        Letter {
            gen,
            inverse: false,
        }
    }

    pub fn neg(gen: G) -> Self {
        let inverse = !gen.involutive();
        Letter { gen, inverse }
    }

    pub fn invert(&self) -> Self {
        if self.gen.involutive() {
            self.clone()
        } else {
            Letter {
                gen: self.gen.clone(),
                inverse: !self.inverse,
            }
        }
    }

    fn cancels(&self, other: &Self) -> bool {
        self.gen == other.gen && (self.gen.involutive() || self.inverse != other.inverse)
    }
}

impl<G: Generator> fmt::Display for Letter<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.gen.render(self.inverse))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("letter {letter} is not valid at arity {arity}")]
    InvalidLetter { letter: String, arity: usize },
    #[error("malformed word `{0}`")]
    Syntax(String),
}

/// A freely reduced word at a fixed arity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word<G> {
    arity: usize,
    letters: Vec<Letter<G>>,
}

impl<G: Generator> Word<G> {
    pub fn empty(arity: usize) -> Self {
        Word {
            arity,
            letters: Vec::new(),
        }
    }

    /// Checks every letter against the arity and freely reduces.
    pub fn new(arity: usize, letters: Vec<Letter<G>>) -> Result<Self, WordError> {
        if let Some(bad) = letters.iter().find(|l| !l.gen.valid_at(arity)) {
            return Err(WordError::InvalidLetter {
                letter: bad.to_string(),
                arity,
            });
        }
        Ok(Word {
            arity,
            letters: free_reduce_letters(letters),
        })
    }

    /// Keeps the letters exactly as given; callers guarantee validity.
    pub(crate) fn raw(arity: usize, letters: Vec<Letter<G>>) -> Self {
        Word { arity, letters }
    }

    pub fn gen(arity: usize, gen: G) -> Result<Self, WordError> {
        Word::new(arity, vec![Letter::pos(gen)])
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn letters(&self) -> &[Letter<G>] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Result<Self, WordError> {
        if self.arity != other.arity {
            return Err(WordError::ArityMismatch(self.arity, other.arity));
        }
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        Ok(Word {
            arity: self.arity,
            letters: free_reduce_letters(letters),
        })
    }

    pub fn inverse(&self) -> Self {
        Word {
            arity: self.arity,
            letters: invert_letters(&self.letters),
        }
    }

    pub fn free_reduce(&self) -> Self {
        Word {
            arity: self.arity,
            letters: free_reduce_letters(self.letters.clone()),
        }
    }

    /// Parses whitespace-separated letters, `e` standing for the empty word.
    pub fn parse_with(
        text: &str,
        arity: usize,
        letter: impl Fn(&str) -> Option<Letter<G>>,
    ) -> Result<Self, WordError> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            if tok == "e" || tok == "ε" {
                continue;
            }
            letters.push(letter(tok).ok_or_else(|| WordError::Syntax(tok.to_string()))?);
        }
        Word::new(arity, letters)
    }
}

impl<G: Generator> fmt::Display for Word<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

pub fn free_reduce_letters<G: Generator>(letters: Vec<Letter<G>>) -> Vec<Letter<G>> {
    let mut out: Vec<Letter<G>> = Vec::with_capacity(letters.len());
    for l in letters {
        if out.last().is_some_and(|top| top.cancels(&l)) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

fn invert_letters<G: Generator>(letters: &[Letter<G>]) -> Vec<Letter<G>> {
    letters.iter().rev().map(Letter::invert).collect()
}

/// Value of an invariant; only equality is ever inspected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvariantValue {
    Perm(Perm),
    Int(i64),
}

impl fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantValue::Perm(p) => write!(f, "{p}"),
            InvariantValue::Int(i) => write!(f, "{i}"),
        }
    }
}

type InvariantFn<G> = Arc<dyn Fn(&Word<G>) -> InvariantValue + Send + Sync>;

/// A named homomorphism into a structure with decidable equality.
#[derive(Clone)]
pub struct Invariant<G> {
    pub name: String,
    eval: InvariantFn<G>,
}

impl<G> Invariant<G> {
    pub fn new(
        name: impl Into<String>,
        eval: impl Fn(&Word<G>) -> InvariantValue + Send + Sync + 'static,
    ) -> Self {
        Invariant {
            name: name.into(),
            eval: Arc::new(eval),
        }
    }

    pub fn eval(&self, w: &Word<G>) -> InvariantValue {
        (self.eval)(w)
    }
}

impl<G> fmt::Debug for Invariant<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Invariant({})", self.name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation<G> {
    pub lhs: Word<G>,
    pub rhs: Word<G>,
}

/// Identifies a move by how it is cut out of a relator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RuleRef {
    pub relation: usize,
    pub inverted: bool,
    pub rotation: usize,
    pub split: usize,
}

impl fmt::Display for RuleRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rel={} inv={} rot={} split={}",
            self.relation, self.inverted as u8, self.rotation, self.split
        )
    }
}

#[derive(Debug, Clone)]
struct Move<G> {
    from: Vec<Letter<G>>,
    to: Vec<Letter<G>>,
    rule: RuleRef,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

/// One rewrite: `Forward` applies the rule to the previous word at `position`;
/// `Backward` means applying the rule to `word` at `position` gives the previous word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step<G> {
    pub direction: Direction,
    pub position: usize,
    pub rule: RuleRef,
    pub word: Word<G>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewritePath<G> {
    pub start: Word<G>,
    pub steps: Vec<Step<G>>,
}

impl<G: Generator> RewritePath<G> {
    pub fn end(&self) -> &Word<G> {
        self.steps.last().map(|s| &s.word).unwrap_or(&self.start)
    }

    /// Reads the text produced by `Display`.
    pub fn parse(
        text: &str,
        parse_word: impl Fn(&str) -> Result<Word<G>, WordError>,
    ) -> Result<Self, WordError> {
        let bad = |l: &str| WordError::Syntax(l.to_string());
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let first = lines.next().ok_or_else(|| bad(""))?;
        let start = parse_word(first.strip_prefix("start:").ok_or_else(|| bad(first))?.trim())?;
        let mut steps = Vec::new();
        for line in lines {
            let (head, word) = line.split_once("=>").ok_or_else(|| bad(line))?;
            let fields: Vec<&str> = head.split_whitespace().collect();
            if fields.len() != 6 {
                return Err(bad(line));
            }
            let direction = match fields[0] {
                "forward" => Direction::Forward,
                "backward" => Direction::Backward,
                _ => return Err(bad(line)),
            };
            let num = |field: &str, key: &str| -> Result<usize, WordError> {
                field
                    .strip_prefix(key)
                    .and_then(|v| v.parse().ok())
                    .ok_or_else(|| bad(line))
            };
            let position = num(fields[1], "at=")?;
            let rule = RuleRef {
                relation: num(fields[2], "rel=")?,
                inverted: num(fields[3], "inv=")? != 0,
                rotation: num(fields[4], "rot=")?,
                split: num(fields[5], "split=")?,
            };
            steps.push(Step {
                direction,
                position,
                rule,
                word: parse_word(word.trim())?,
            });
        }
        Ok(RewritePath { start, steps })
    }
}

impl<G: Generator> fmt::Display for RewritePath<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "start: {}", self.start)?;
        for s in &self.steps {
            let dir = match s.direction {
                Direction::Forward => "forward",
                Direction::Backward => "backward",
            };
            writeln!(f, "{dir} at={} {} => {}", s.position, s.rule, s.word)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EqResult<G> {
    Equal(RewritePath<G>),
    Distinct(String),
    Inconclusive { states: usize },
}

impl<G> EqResult<G> {
    pub fn label(&self) -> &'static str {
        match self {
            EqResult::Equal(_) => "Equal",
            EqResult::Distinct(_) => "Distinct",
            EqResult::Inconclusive { .. } => "Inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("path starts at {found}, expected {expected}")]
    WrongStart { expected: String, found: String },
    #[error("path ends at {found}, expected {expected}")]
    WrongEnd { expected: String, found: String },
    #[error("step {index}: rule {rule} does not exist")]
    UnknownRule { index: usize, rule: RuleRef },
    #[error("step {index}: rule {rule} does not apply at position {position}")]
    NotApplicable {
        index: usize,
        rule: RuleRef,
        position: usize,
    },
    #[error("step {index}: rewrite gives {found}, path claims {expected}")]
    Mismatch {
        index: usize,
        expected: String,
        found: String,
    },
}

/// Search bounds for [`RelationSystem::equal`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    pub max_len: Option<usize>,
    pub budget: usize,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            max_len: None,
            budget: DEFAULT_BUDGET,
        }
    }
}

pub const DEFAULT_BUDGET: usize = 100_000;
pub const DEFAULT_SLACK: usize = 6;

/// Relations and invariants for one group at one arity.
#[derive(Debug, Clone)]
pub struct RelationSystem<G> {
    arity: usize,
    relations: Vec<Relation<G>>,
    invariants: Vec<Invariant<G>>,
    moves: Vec<Move<G>>,
    by_first: HashMap<Letter<G>, Vec<usize>>,
}

impl<G: Generator> RelationSystem<G> {
    pub fn new(
        arity: usize,
        relations: Vec<Relation<G>>,
        invariants: Vec<Invariant<G>>,
    ) -> Result<Self, WordError> {
        for r in &relations {
            for w in [&r.lhs, &r.rhs] {
                if w.arity != arity {
                    return Err(WordError::ArityMismatch(arity, w.arity));
                }
            }
        }
        let mut sys = RelationSystem {
            arity,
            relations,
            invariants,
            moves: Vec::new(),
            by_first: HashMap::new(),
        };
        sys.build_moves();
        Ok(sys)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn relations(&self) -> &[Relation<G>] {
        &self.relations
    }

    pub fn invariants(&self) -> &[Invariant<G>] {
        &self.invariants
    }

    pub fn move_count(&self) -> usize {
        self.moves.len()
    }

    fn relator(&self, relation: usize) -> Option<Vec<Letter<G>>> {
        let r = self.relations.get(relation)?;
        let mut letters = r.lhs.letters.clone();
        letters.extend(invert_letters(&r.rhs.letters));
        let mut letters = free_reduce_letters(letters);
        while letters.len() >= 2 && letters[0].cancels(&letters[letters.len() - 1]) {
            letters.pop();
            letters.remove(0);
        }
        Some(letters)
    }

    /// The move named by `rule`, as `(from, to)`.
    pub fn derive_move(&self, rule: RuleRef) -> Option<(Vec<Letter<G>>, Vec<Letter<G>>)> {
        let mut rel = self.relator(rule.relation)?;
        if rule.inverted {
            rel = invert_letters(&rel);
        }
        if rule.rotation >= rel.len() || rule.split == 0 || rule.split > rel.len() {
            return None;
        }
        rel.rotate_left(rule.rotation);
        let (u, v) = rel.split_at(rule.split);
        Some((u.to_vec(), invert_letters(v)))
    }

    fn build_moves(&mut self) {
        let mut seen = std::collections::HashSet::new();
        for relation in 0..self.relations.len() {
            let len = self.relator(relation).map_or(0, |r| r.len());
            for inverted in [false, true] {
                for rotation in 0..len {
                    for split in 1..=len {
                        let rule = RuleRef {
                            relation,
                            inverted,
                            rotation,
                            split,
                        };
                        let (from, to) = self.derive_move(rule).expect("in range");
                        if from.len() < to.len() || from == to {
                            continue;
                        }
                        if !seen.insert((from.clone(), to.clone())) {
                            continue;
                        }
                        self.by_first
                            .entry(from[0].clone())
                            .or_default()
                            .push(self.moves.len());
                        self.moves.push(Move { from, to, rule });
                    }
                }
            }
        }
    }

    /// Every invariant must agree on both sides of every relation.
    pub fn check_invariants(&self) -> Result<(), String> {
        for (i, r) in self.relations.iter().enumerate() {
            for inv in &self.invariants {
                let (a, b) = (inv.eval(&r.lhs), inv.eval(&r.rhs));
                if a != b {
                    return Err(format!(
                        "invariant {} separates relation {i}: {} ({a}) vs {} ({b})",
                        inv.name, r.lhs, r.rhs
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn equal(&self, w1: &Word<G>, w2: &Word<G>, bounds: SearchBounds) -> Result<EqResult<G>, WordError> {
        for w in [w1, w2] {
            if w.arity != self.arity {
                return Err(WordError::ArityMismatch(self.arity, w.arity));
            }
        }
        let a = w1.free_reduce();
        let b = w2.free_reduce();
        if a == b {
            return Ok(EqResult::Equal(RewritePath {
                start: a,
                steps: Vec::new(),
            }));
        }
        for inv in &self.invariants {
            if inv.eval(&a) != inv.eval(&b) {
                return Ok(EqResult::Distinct(inv.name.clone()));
            }
        }
        let max_len = bounds
            .max_len
            .unwrap_or(a.len().max(b.len()) + DEFAULT_SLACK);
        Ok(self.search(a, b, max_len, bounds.budget))
    }

    fn neighbours(&self, word: &[Letter<G>], max_len: usize) -> Vec<(usize, usize, Vec<Letter<G>>)> {
        let mut out = Vec::new();
        for pos in 0..word.len() {
            let Some(cands) = self.by_first.get(&word[pos]) else {
                continue;
            };
            for &mi in cands {
                let m = &self.moves[mi];
                if word.len() - pos < m.from.len() || word[pos..pos + m.from.len()] != m.from[..] {
                    continue;
                }
                let next = apply_at(word, pos, &m.from, &m.to);
                if next.len() <= max_len {
                    out.push((pos, mi, next));
                }
            }
        }
        out
    }

    fn search(&self, a: Word<G>, b: Word<G>, max_len: usize, budget: usize) -> EqResult<G> {
        type Parents<G> = HashMap<Vec<Letter<G>>, Option<(Vec<Letter<G>>, usize, usize)>>;
        let mut fwd: Parents<G> = HashMap::new();
        let mut bwd: Parents<G> = HashMap::new();
        fwd.insert(a.letters.clone(), None);
        bwd.insert(b.letters.clone(), None);
        let mut fq: VecDeque<Vec<Letter<G>>> = VecDeque::from([a.letters.clone()]);
        let mut bq: VecDeque<Vec<Letter<G>>> = VecDeque::from([b.letters.clone()]);

        while !fq.is_empty() || !bq.is_empty() {
            let forward = !fq.is_empty() && (bq.is_empty() || fq.len() <= bq.len());
            let (queue, mine, other) = if forward {
                (&mut fq, &mut fwd, &bwd)
            } else {
                (&mut bq, &mut bwd, &fwd)
            };
            let layer: Vec<_> = queue.drain(..).collect();
            let mut meet = None;
            'layer: for word in layer {
                for (pos, mi, next) in self.neighbours(&word, max_len) {
                    if mine.contains_key(&next) {
                        continue;
                    }
                    mine.insert(next.clone(), Some((word.clone(), pos, mi)));
                    if other.contains_key(&next) {
                        meet = Some(next);
                        break 'layer;
                    }
                    let states = mine.len() + other.len();
                    if states >= budget {
                        return EqResult::Inconclusive { states };
                    }
                    queue.push_back(next);
                }
            }
            if let Some(meet) = meet {
                return EqResult::Equal(self.assemble(&a, &fwd, &bwd, meet));
            }
        }
        EqResult::Inconclusive {
            states: fwd.len() + bwd.len(),
        }
    }

    fn assemble(
        &self,
        start: &Word<G>,
        fwd: &HashMap<Vec<Letter<G>>, Option<(Vec<Letter<G>>, usize, usize)>>,
        bwd: &HashMap<Vec<Letter<G>>, Option<(Vec<Letter<G>>, usize, usize)>>,
        meet: Vec<Letter<G>>,
    ) -> RewritePath<G> {
        let word = |letters: Vec<Letter<G>>| Word::raw(self.arity, letters);
        let mut steps = Vec::new();
        let mut cur = meet.clone();
        while let Some(Some((prev, pos, mi))) = fwd.get(&cur) {
            steps.push(Step {
                direction: Direction::Forward,
                position: *pos,
                rule: self.moves[*mi].rule,
                word: word(cur.clone()),
            });
            cur = prev.clone();
        }
        steps.reverse();
        let mut cur = meet;
        while let Some(Some((prev, pos, mi))) = bwd.get(&cur) {
            steps.push(Step {
                direction: Direction::Backward,
                position: *pos,
                rule: self.moves[*mi].rule,
                word: word(prev.clone()),
            });
            cur = prev.clone();
        }
        RewritePath {
            start: start.clone(),
            steps,
        }
    }

    /// Re-derives every step of `path` from the relations alone.
    pub fn replay(&self, path: &RewritePath<G>, from: &Word<G>, to: &Word<G>) -> Result<(), ReplayError> {
        let from = from.free_reduce();
        if path.start != from {
            return Err(ReplayError::WrongStart {
                expected: from.to_string(),
                found: path.start.to_string(),
            });
        }
        let mut prev = path.start.clone();
        for (index, step) in path.steps.iter().enumerate() {
            let (u, v) = self.derive_move(step.rule).ok_or(ReplayError::UnknownRule {
                index,
                rule: step.rule,
            })?;
            let (source, expected) = match step.direction {
                Direction::Forward => (&prev, &step.word),
                Direction::Backward => (&step.word, &prev),
            };
            let pos = step.position;
            if source.letters.len() < pos + u.len() || source.letters[pos..pos + u.len()] != u[..] {
                return Err(ReplayError::NotApplicable {
                    index,
                    rule: step.rule,
                    position: pos,
                });
            }
            let got = apply_at(&source.letters, pos, &u, &v);
            if got != expected.letters {
                return Err(ReplayError::Mismatch {
                    index,
                    expected: expected.to_string(),
                    found: word_text(&got),
                });
            }
            prev = step.word.clone();
        }
        let to = to.free_reduce();
        if prev != to {
            return Err(ReplayError::WrongEnd {
                expected: to.to_string(),
                found: prev.to_string(),
            });
        }
        Ok(())
    }
}

fn apply_at<G: Generator>(word: &[Letter<G>], pos: usize, from: &[Letter<G>], to: &[Letter<G>]) -> Vec<Letter<G>> {
    let mut next = Vec::with_capacity(word.len() - from.len() + to.len());
    next.extend_from_slice(&word[..pos]);
    next.extend_from_slice(to);
    next.extend_from_slice(&word[pos + from.len()..]);
    free_reduce_letters(next)
}

fn word_text<G: Generator>(letters: &[Letter<G>]) -> String {
    if letters.is_empty() {
        return "e".into();
    }
    letters.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Free group on `x1..x{n}`, optionally involutive.
    #[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
    struct X(usize, bool);

    impl Generator for X {
        fn involutive(&self) -> bool {
            self.1
        }
        fn valid_at(&self, n: usize) -> bool {
            self.0 >= 1 && self.0 <= n
        }
        fn render(&self, inverse: bool) -> String {
            if inverse {
                format!("X{}", self.0)
            } else {
                format!("x{}", self.0)
            }
        }
    }

    fn w(n: usize, inv: bool, text: &str) -> Word<X> {
        Word::parse_with(text, n, |t| {
            let (upper, rest) = if let Some(r) = t.strip_prefix('X') {
                (true, r)
            } else {
                (false, t.strip_prefix('x')?)
            };
            let g = X(rest.parse().ok()?, inv);
            Some(if upper { Letter::neg(g) } else { Letter::pos(g) })
        })
        .unwrap()
    }

    fn abelian(n: usize) -> RelationSystem<X> {
        let mut rels = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                rels.push(Relation {
                    lhs: w(n, false, &format!("x{i} x{j}")),
                    rhs: w(n, false, &format!("x{j} x{i}")),
                });
            }
        }
        RelationSystem::new(n, rels, vec![]).unwrap()
    }

    #[test]
    fn free_reduction() {
        assert!(w(2, true, "x1 x1").is_empty());
        assert!(w(2, false, "x1 X1").is_empty());
        assert_eq!(w(3, false, "x1 X1 x2"), w(3, false, "x2"));
        assert_eq!(w(3, false, "x1 x2 X2 X1 x3"), w(3, false, "x3"));
        assert_eq!(w(2, false, "x1 x1").len(), 2);
    }

    #[test]
    fn invalid_letter_rejected() {
        let err = Word::new(2, vec![Letter::pos(X(3, false))]).unwrap_err();
        assert!(matches!(err, WordError::InvalidLetter { .. }));
    }

    #[test]
    fn inverse_reverses_and_flips() {
        assert_eq!(w(3, false, "x1 x2").inverse(), w(3, false, "X2 X1"));
        assert_eq!(w(3, true, "x1 x2").inverse(), w(3, true, "x2 x1"));
    }

    #[test]
    fn commutation_search_with_replay() {
        let sys = abelian(3);
        let a = w(3, false, "x1 x2 x3 X1");
        let b = w(3, false, "x3 x2");
        let EqResult::Equal(path) = sys.equal(&a, &b, SearchBounds::default()).unwrap() else {
            panic!("expected Equal")
        };
        sys.replay(&path, &a, &b).unwrap();
        let text = path.to_string();
        let parsed = RewritePath::parse(&text, |t| Ok(w(3, false, t))).unwrap();
        assert_eq!(parsed, path);
    }

    #[test]
    fn replay_rejects_tampering() {
        let sys = abelian(3);
        let a = w(3, false, "x1 x2 x3");
        let b = w(3, false, "x3 x2 x1");
        let EqResult::Equal(mut path) = sys.equal(&a, &b, SearchBounds::default()).unwrap() else {
            panic!("expected Equal")
        };
        assert!(!path.steps.is_empty());
        path.steps[0].position += 1;
        assert!(sys.replay(&path, &a, &b).is_err());
    }

    #[test]
    fn free_group_search_is_inconclusive() {
        let sys = RelationSystem::new(2, vec![], vec![]).unwrap();
        let r = sys
            .equal(&w(2, false, "x1 x2"), &w(2, false, "x2 x1"), SearchBounds::default())
            .unwrap();
        assert!(matches!(r, EqResult::Inconclusive { .. }));
    }

    #[test]
    fn invariants_refute_and_are_validated() {
        let count = Invariant::new("length-parity", |w: &Word<X>| {
            InvariantValue::Int((w.len() % 2) as i64)
        });
        let sys = RelationSystem::new(
            2,
            vec![Relation {
                lhs: w(2, false, "x1 x2"),
                rhs: w(2, false, "x2 x1"),
            }],
            vec![count.clone()],
        )
        .unwrap();
        sys.check_invariants().unwrap();
        let r = sys
            .equal(&w(2, false, "x1"), &w(2, false, "x1 x2"), SearchBounds::default())
            .unwrap();
        assert_eq!(r, EqResult::Distinct("length-parity".into()));

        let broken = RelationSystem::new(
            2,
            vec![Relation {
                lhs: w(2, false, "x1"),
                rhs: w(2, false, "x1 x2"),
            }],
            vec![count],
        )
        .unwrap();
        assert!(broken.check_invariants().is_err());
    }

    #[test]
    fn reflexive_equality_is_immediate() {
        let sys = abelian(2);
        let a = w(2, false, "x1 x2 x1");
        assert_eq!(
            sys.equal(&a, &a, SearchBounds::default()).unwrap(),
            EqResult::Equal(RewritePath {
                start: a.clone(),
                steps: vec![]
            })
        );
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let sys = abelian(2);
        assert!(sys
            .equal(&w(3, false, "x1"), &w(3, false, "x1"), SearchBounds::default())
            .is_err());
    }

    #[test]
    fn involution_relation_gives_no_moves() {
        let sys = RelationSystem::new(
            2,
            vec![Relation {
                lhs: w(2, true, "x1 x1"),
                rhs: Word::empty(2),
            }],
            vec![],
        )
        .unwrap();
        assert_eq!(sys.move_count(), 0);
    }

    #[test]
    fn search_is_deterministic() {
        let sys = abelian(4);
        let a = w(4, false, "x1 x2 x3 x4 x1");
        let b = w(4, false, "x4 x1 x3 x1 x2");
        let r1 = sys.equal(&a, &b, SearchBounds::default()).unwrap();
        let r2 = sys.equal(&a, &b, SearchBounds::default()).unwrap();
        assert_eq!(r1, r2);
    }
}
