//! Terms of the free action operad on a collection, their evaluation into an
//! instance, and checking a presentation against an instance.
//!
//! Term syntax: `gen(σ)`, `id(n)`, `mul(t,t,…)`, `inv(t)`, `beta(t,…)` and
//! `delta(t;[k,…])`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::operad::{ActionOperad, OperadError, Verdict};
use crate::perm::Perm;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("cannot parse term `{text}` at {at}: {reason}")]
    Syntax { text: String, at: usize, reason: String },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("ill-formed term `{term}`: {reason}")]
    IllFormed { term: String, reason: String },
    #[error("relation {index}: {reason}")]
    Relation { index: usize, reason: String },
    #[error("generator `{name}`: {reason}")]
    Generator { name: String, reason: String },
    #[error("interpretation of `{name}`: {reason}")]
    Interpretation { name: String, reason: String },
    #[error(transparent)]
    Operad(#[from] OperadError),
    #[error("malformed document: {0}")]
    Format(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Gen(String),
    Id(usize),
    Mul(Vec<Term>),
    Inv(Box<Term>),
    Beta(Vec<Term>),
    Delta(Box<Term>, Vec<usize>),
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |f: &mut fmt::Formatter<'_>, ts: &[Term]| -> fmt::Result {
            for (i, t) in ts.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{t}")?;
            }
            Ok(())
        };
        match self {
            Term::Gen(n) => write!(f, "gen({n})"),
            Term::Id(n) => write!(f, "id({n})"),
            Term::Mul(ts) => {
                write!(f, "mul(")?;
                list(f, ts)?;
                write!(f, ")")
            }
            Term::Inv(t) => write!(f, "inv({t})"),
            Term::Beta(ts) => {
                write!(f, "beta(")?;
                list(f, ts)?;
                write!(f, ")")
            }
            Term::Delta(t, ks) => {
                let ks: Vec<String> = ks.iter().map(|k| k.to_string()).collect();
                write!(f, "delta({t};[{}])", ks.join(","))
            }
        }
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, reason: impl Into<String>) -> PresentationError {
        PresentationError::Syntax {
            text: self.text.to_string(),
            at: self.pos,
            reason: reason.into(),
        }
    }

    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn eat(&mut self, c: char) -> Result<(), PresentationError> {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.err(format!("expected `{c}`")))
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn word(&mut self) -> String {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_alphanumeric() && c != '_')
            .unwrap_or(self.rest().len());
        let w = self.rest()[..len].to_string();
        self.pos += len;
        w
    }

    fn number(&mut self) -> Result<usize, PresentationError> {
        let w = self.word();
        w.parse().map_err(|_| self.err(format!("expected a number, found `{w}`")))
    }

    fn terms_until_close(&mut self) -> Result<Vec<Term>, PresentationError> {
        let mut ts = Vec::new();
        if self.peek() == Some(')') {
            self.pos += 1;
            return Ok(ts);
        }
        loop {
            ts.push(self.term()?);
            match self.peek() {
                Some(',') => self.pos += 1,
                Some(')') => {
                    self.pos += 1;
                    return Ok(ts);
                }
                _ => return Err(self.err("expected `,` or `)`")),
            }
        }
    }

    fn term(&mut self) -> Result<Term, PresentationError> {
        let head = self.word();
        self.eat('(')?;
        match head.as_str() {
            "gen" => {
                let end = self.rest().find(')').ok_or_else(|| self.err("unclosed `gen(`"))?;
                let name = self.rest()[..end].trim().to_string();
                if name.is_empty() {
                    return Err(self.err("empty generator name"));
                }
                self.pos += end + 1;
                Ok(Term::Gen(name))
            }
            "id" => {
                let n = self.number()?;
                self.eat(')')?;
                Ok(Term::Id(n))
            }
            "inv" => {
                let t = self.term()?;
                self.eat(')')?;
                Ok(Term::Inv(Box::new(t)))
            }
            "mul" => {
                let ts = self.terms_until_close()?;
                if ts.is_empty() {
                    return Err(self.err("`mul` needs at least one factor"));
                }
                Ok(Term::Mul(ts))
            }
            "beta" => Ok(Term::Beta(self.terms_until_close()?)),
            "delta" => {
                let t = self.term()?;
                self.eat(';')?;
                self.eat('[')?;
                let mut ks = Vec::new();
                if self.peek() == Some(']') {
                    self.pos += 1;
                } else {
                    loop {
                        ks.push(self.number()?);
                        match self.peek() {
                            Some(',') => self.pos += 1,
                            Some(']') => {
                                self.pos += 1;
                                break;
                            }
                            _ => return Err(self.err("expected `,` or `]`")),
                        }
                    }
                }
                self.eat(')')?;
                Ok(Term::Delta(Box::new(t), ks))
            }
            other => Err(self.err(format!("unknown constructor `{other}`"))),
        }
    }
}

impl std::str::FromStr for Term {
    type Err = PresentationError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut p = Parser { text, pos: 0 };
        let t = p.term()?;
        p.skip_ws();
        if p.pos != text.len() {
            return Err(p.err("trailing input"));
        }
        Ok(t)
    }
}

/// A collection over the symmetric groups: named generators with arities
/// and underlying permutations.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Collection {
    gens: BTreeMap<String, Perm>,
}

impl Collection {
    pub fn new(gens: impl IntoIterator<Item = (String, Perm)>) -> Self {
        Collection {
            gens: gens.into_iter().collect(),
        }
    }

    pub fn get(&self, name: &str) -> Option<&Perm> {
        self.gens.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &String> {
        self.gens.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &Perm)> {
        self.gens.iter()
    }
}

fn ill(t: &Term, reason: impl Into<String>) -> PresentationError {
    PresentationError::IllFormed {
        term: t.to_string(),
        reason: reason.into(),
    }
}

pub fn term_arity(t: &Term, gens: &Collection) -> Result<usize, PresentationError> {
    match t {
        Term::Gen(n) => gens
            .get(n)
            .map(Perm::arity)
            .ok_or_else(|| PresentationError::UnknownGenerator(n.clone())),
        Term::Id(n) => Ok(*n),
        Term::Mul(ts) => {
            let a = term_arity(&ts[0], gens)?;
            for u in &ts[1..] {
                if term_arity(u, gens)? != a {
                    return Err(ill(t, "factors of different arity"));
                }
            }
            Ok(a)
        }
        Term::Inv(u) => term_arity(u, gens),
        Term::Beta(ts) => ts.iter().map(|u| term_arity(u, gens)).sum(),
        Term::Delta(u, ks) => {
            if term_arity(u, gens)? != ks.len() {
                return Err(ill(t, "one size per input is needed"));
            }
            Ok(ks.iter().sum())
        }
    }
}

/// The underlying permutation, computed in the symmetric groups.
pub fn term_pi(t: &Term, gens: &Collection) -> Result<Perm, PresentationError> {
    term_arity(t, gens)?;
    Ok(match t {
        Term::Gen(n) => gens.get(n).expect("arity checked").clone(),
        Term::Id(n) => Perm::identity(*n),
        Term::Mul(ts) => {
            let mut acc = term_pi(&ts[0], gens)?;
            for u in &ts[1..] {
                acc = acc.compose(&term_pi(u, gens)?).expect("arity checked");
            }
            acc
        }
        Term::Inv(u) => term_pi(u, gens)?.inverse(),
        Term::Beta(ts) => Perm::block_sum(&ts.iter().map(|u| term_pi(u, gens)).collect::<Result<Vec<_>, _>>()?),
        Term::Delta(u, ks) => term_pi(u, gens)?.block_perm(ks).expect("arity checked"),
    })
}

/// An assignment of generators to elements, checked against arities and `π`.
pub struct Interpretation<E> {
    map: HashMap<String, E>,
}

impl<E: Clone> Interpretation<E> {
    pub fn new<A: ActionOperad<Elem = E>>(
        inst: &A,
        gens: &Collection,
        map: HashMap<String, E>,
    ) -> Result<Self, PresentationError> {
        for (name, p) in gens.iter() {
            let e = map.get(name).ok_or_else(|| PresentationError::Interpretation {
                name: name.clone(),
                reason: "missing".into(),
            })?;
            if inst.arity(e) != p.arity() || inst.pi(e) != *p {
                return Err(PresentationError::Interpretation {
                    name: name.clone(),
                    reason: format!("{} has underlying permutation {}, not {p}", inst.render(e), inst.pi(e)),
                });
            }
        }
        Ok(Interpretation { map })
    }

    /// Parses `name → element text` with the instance's syntax.
    pub fn parse<A: ActionOperad<Elem = E>>(
        inst: &A,
        gens: &Collection,
        texts: &BTreeMap<String, String>,
    ) -> Result<Self, PresentationError> {
        let mut map = HashMap::new();
        for (name, text) in texts {
            let p = gens
                .get(name)
                .ok_or_else(|| PresentationError::UnknownGenerator(name.clone()))?;
            map.insert(name.clone(), inst.parse_element(text, p.arity())?);
        }
        Self::new(inst, gens, map)
    }
}

pub fn eval_term<A: ActionOperad>(t: &Term, interp: &Interpretation<A::Elem>, inst: &A) -> Result<A::Elem, PresentationError> {
    Ok(match t {
        Term::Gen(n) => interp
            .map
            .get(n)
            .cloned()
            .ok_or_else(|| PresentationError::UnknownGenerator(n.clone()))?,
        Term::Id(n) => inst.identity(*n),
        Term::Mul(ts) => {
            let mut acc = eval_term(&ts[0], interp, inst)?;
            for u in &ts[1..] {
                acc = inst.mul(&acc, &eval_term(u, interp, inst)?)?;
            }
            acc
        }
        Term::Inv(u) => inst.inv(&eval_term(u, interp, inst)?),
        Term::Beta(ts) => inst.beta(&ts.iter().map(|u| eval_term(u, interp, inst)).collect::<Result<Vec<_>, _>>()?),
        Term::Delta(u, ks) => inst.delta(&eval_term(u, interp, inst)?, ks)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorDoc {
    pub name: String,
    pub arity: usize,
    pub pi: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationDoc {
    pub generators: Vec<GeneratorDoc>,
    pub relations: Vec<RelationDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub gens: Collection,
    /// `(label, lhs, rhs)`.
    pub relations: Vec<(String, Term, Term)>,
}

impl Presentation {
    /// Parses and checks that both sides of every relation have the same
    /// arity and the same underlying permutation.
    pub fn from_doc(doc: &PresentationDoc) -> Result<Self, PresentationError> {
        let mut gens = Vec::new();
        for g in &doc.generators {
            let pi: Perm = g.pi.parse().map_err(|e: crate::perm::PermError| PresentationError::Generator {
                name: g.name.clone(),
                reason: e.to_string(),
            })?;
            if pi.arity() != g.arity {
                return Err(PresentationError::Generator {
                    name: g.name.clone(),
                    reason: format!("permutation {pi} does not have arity {}", g.arity),
                });
            }
            gens.push((g.name.clone(), pi));
        }
        let gens = Collection::new(gens);
        let mut relations = Vec::new();
        for (i, r) in doc.relations.iter().enumerate() {
            let (l, rt): (Term, Term) = (r.lhs.parse()?, r.rhs.parse()?);
            let (pl, pr) = (term_pi(&l, &gens)?, term_pi(&rt, &gens)?);
            if pl != pr {
                return Err(PresentationError::Relation {
                    index: i + 1,
                    reason: format!("underlying permutations {pl} and {pr} differ"),
                });
            }
            let label = r.name.clone().unwrap_or_else(|| format!("r{}", i + 1));
            relations.push((label, l, rt));
        }
        Ok(Presentation { gens, relations })
    }

    pub fn from_json(text: &str) -> Result<Self, PresentationError> {
        let doc: PresentationDoc = serde_json::from_str(text).map_err(|e| PresentationError::Format(e.to_string()))?;
        Self::from_doc(&doc)
    }

    fn builtin(json: &str) -> Self {
        Self::from_json(json).expect("built-in presentation is well-formed")
    }

    /// One involutive generator of arity 2 with the coboundary square.
    pub fn coboundary() -> Self {
        Self::builtin(
            r#"{"generators": [{"name": "σ", "arity": 2, "pi": "[2,1]"}],
                "relations": [
                  {"name": "involution", "lhs": "mul(gen(σ),gen(σ))", "rhs": "id(2)"},
                  {"name": "square", "lhs": "mul(delta(gen(σ);[1,2]),beta(id(1),gen(σ)))",
                   "rhs": "mul(delta(gen(σ);[2,1]),beta(gen(σ),id(1)))"}
                ]}"#,
        )
    }

    /// One involutive generator of arity 2 with the braid relation and the
    /// hexagon.
    pub fn symmetric() -> Self {
        Self::builtin(
            r#"{"generators": [{"name": "σ", "arity": 2, "pi": "[2,1]"}],
                "relations": [
                  {"name": "involution", "lhs": "mul(gen(σ),gen(σ))", "rhs": "id(2)"},
                  {"name": "braid", "lhs": "mul(beta(gen(σ),id(1)),beta(id(1),gen(σ)),beta(gen(σ),id(1)))",
                   "rhs": "mul(beta(id(1),gen(σ)),beta(gen(σ),id(1)),beta(id(1),gen(σ)))"},
                  {"name": "hexagon", "lhs": "delta(gen(σ);[1,2])",
                   "rhs": "mul(beta(id(1),gen(σ)),beta(gen(σ),id(1)))"}
                ]}"#,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationRow {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
    pub verdict: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PresentationReport {
    pub operad: String,
    pub rows: Vec<RelationRow>,
}

impl PresentationReport {
    pub fn failures(&self) -> usize {
        self.rows.iter().filter(|r| r.verdict.starts_with("Distinct")).count()
    }

    pub fn inconclusive(&self) -> usize {
        self.rows.iter().filter(|r| r.verdict == "Inconclusive").count()
    }

    pub fn holds(&self) -> bool {
        self.rows.iter().all(|r| r.verdict == "Equal")
    }
}

impl fmt::Display for PresentationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "presentation into {}", self.operad)?;
        for r in &self.rows {
            writeln!(f, "{:<12} {}", r.name, r.verdict)?;
            writeln!(f, "  lhs: {}", r.lhs)?;
            writeln!(f, "  rhs: {}", r.rhs)?;
        }
        write!(f, "{}", if self.holds() { "HOLDS" } else if self.failures() > 0 { "FAILS" } else { "INCONCLUSIVE" })
    }
}

/// Evaluates both sides of every relation and compares them with the
/// instance's equality.
pub fn check_presentation<A: ActionOperad>(
    p: &Presentation,
    interp: &Interpretation<A::Elem>,
    inst: &A,
) -> Result<PresentationReport, PresentationError> {
    let mut rows = Vec::new();
    for (name, l, r) in &p.relations {
        let (a, b) = (eval_term(l, interp, inst)?, eval_term(r, interp, inst)?);
        let verdict = match inst.equal(&a, &b) {
            Verdict::Equal => "Equal".to_string(),
            Verdict::Distinct(why) => format!("Distinct ({why})"),
            Verdict::Inconclusive => "Inconclusive".to_string(),
        };
        rows.push(RelationRow {
            name: name.clone(),
            lhs: inst.render(&a),
            rhs: inst.render(&b),
            verdict,
        });
    }
    Ok(PresentationReport {
        operad: inst.name().to_string(),
        rows,
    })
}

/// Deterministic pseudo-random well-formed terms over `gens`, with at most
/// `max_arity` inputs at every node.
pub fn random_terms(gens: &Collection, count: usize, max_depth: usize, max_arity: usize, seed: u64) -> Vec<Term> {
    let mut state = seed;
    let mut next = move |m: usize| -> usize {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((state >> 33) as usize) % m.max(1)
    };
    let names: Vec<(String, usize)> = gens.iter().map(|(n, p)| (n.clone(), p.arity())).collect();
    fn build(
        n: usize,
        depth: usize,
        max_arity: usize,
        names: &[(String, usize)],
        next: &mut dyn FnMut(usize) -> usize,
    ) -> Term {
        let leaves: Vec<&(String, usize)> = names.iter().filter(|(_, a)| *a == n).collect();
        if depth == 0 {
            return if !leaves.is_empty() && next(2) == 0 {
                Term::Gen(leaves[next(leaves.len())].0.clone())
            } else {
                Term::Id(n)
            };
        }
        match next(6) {
            0 if !leaves.is_empty() => Term::Gen(leaves[next(leaves.len())].0.clone()),
            1 => Term::Mul(vec![
                build(n, depth - 1, max_arity, names, next),
                build(n, depth - 1, max_arity, names, next),
            ]),
            2 => Term::Inv(Box::new(build(n, depth - 1, max_arity, names, next))),
            3 if n >= 1 => {
                // split n into a few block arities
                let mut parts = Vec::new();
                let mut left = n;
                while left > 0 {
                    let k = 1 + next(left);
                    parts.push(k);
                    left -= k;
                }
                Term::Beta(parts.into_iter().map(|k| build(k, depth - 1, max_arity, names, next)).collect())
            }
            4 | 5 if n >= 1 => {
                // an inner arity m ≤ n and sizes summing to n
                let m = 1 + next(n.min(max_arity));
                let mut sizes = vec![0; m];
                for _ in 0..n {
                    let i = next(m);
                    sizes[i] += 1;
                }
                Term::Delta(Box::new(build(m, depth - 1, max_arity, names, next)), sizes)
            }
            _ => Term::Id(n),
        }
    }
    (0..count)
        .map(|_| {
            let n = 1 + next(max_arity);
            build(n, max_depth, max_arity, &names, &mut next)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cactus::{parse_cactus, Cactus};
    use crate::operad::Symmetric;

    fn sigma_gens() -> Collection {
        Collection::new([("σ".to_string(), "[2,1]".parse().unwrap())])
    }

    fn t(s: &str) -> Term {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print_roundtrip() {
        for s in ["gen(σ)", "id(3)", "mul(gen(σ),inv(gen(σ)))", "beta()", "delta(gen(σ);[2,1])", "beta(id(1),gen(σ))"] {
            assert_eq!(t(s).to_string(), s);
        }
        assert_eq!(t(" delta( gen(σ) ; [ 2 , 1 ] ) "), t("delta(gen(σ);[2,1])"));
        assert!("mul()".parse::<Term>().is_err());
        assert!("foo(1)".parse::<Term>().is_err());
        assert!("id(2) x".parse::<Term>().is_err());
    }

    #[test]
    fn term_pi_examples() {
        let g = sigma_gens();
        assert_eq!(term_pi(&t("id(4)"), &g).unwrap(), Perm::identity(4));
        assert_eq!(term_pi(&t("mul(gen(σ),gen(σ))"), &g).unwrap(), Perm::identity(2));
        assert_eq!(term_pi(&t("delta(gen(σ);[2,1])"), &g).unwrap(), "[2,3,1]".parse().unwrap());
        assert!(term_pi(&t("delta(gen(σ);[2])"), &g).is_err());
        assert!(term_pi(&t("mul(gen(σ),id(3))"), &g).is_err());
        assert!(term_pi(&t("gen(τ)"), &g).is_err());
    }

    #[test]
    fn eval_examples() {
        let g = sigma_gens();
        let j = Cactus::new();
        let ij = Interpretation::parse(&j, &g, &[("σ".to_string(), "s(1,2)".to_string())].into()).unwrap();
        let d = eval_term(&t("delta(gen(σ);[2,1])"), &ij, &j).unwrap();
        assert_eq!(d, parse_cactus("s(1,3) s(1,2)", 3).unwrap());
        assert!(eval_term(&t("id(3)"), &ij, &j).unwrap().is_empty());
        let is = Interpretation::parse(&Symmetric, &g, &[("σ".to_string(), "[2,1]".to_string())].into()).unwrap();
        let b = eval_term(&t("beta(gen(σ),gen(σ))"), &is, &Symmetric).unwrap();
        assert_eq!(b, "[2,1,4,3]".parse().unwrap());
    }

    #[test]
    fn rejects_incompatible_interpretation() {
        let g = sigma_gens();
        let r = Interpretation::parse(&Symmetric, &g, &[("σ".to_string(), "[1,2]".to_string())].into());
        assert!(matches!(r, Err(PresentationError::Interpretation { .. })));
    }

    #[test]
    fn rejects_relation_with_different_permutations() {
        let doc = PresentationDoc {
            generators: vec![GeneratorDoc {
                name: "σ".into(),
                arity: 2,
                pi: "[2,1]".into(),
            }],
            relations: vec![RelationDoc {
                name: None,
                lhs: "gen(σ)".into(),
                rhs: "id(2)".into(),
            }],
        };
        assert!(matches!(Presentation::from_doc(&doc), Err(PresentationError::Relation { index: 1, .. })));
    }

    #[test]
    fn builtin_presentations() {
        let cob = Presentation::coboundary();
        let j = Cactus::new();
        let ij = Interpretation::parse(&j, &cob.gens, &[("σ".to_string(), "s(1,2)".to_string())].into()).unwrap();
        let r = check_presentation(&cob, &ij, &j).unwrap();
        assert!(r.holds(), "{r}");
        assert_eq!(r.rows[1].lhs, "s(1,3)");
        let sym = Presentation::symmetric();
        let is = Interpretation::parse(&Symmetric, &sym.gens, &[("σ".to_string(), "[2,1]".to_string())].into()).unwrap();
        assert!(check_presentation(&sym, &is, &Symmetric).unwrap().holds());
        assert!(check_presentation(&cob, &is, &Symmetric).unwrap().holds());
    }

    #[test]
    fn random_terms_are_well_formed_and_deterministic() {
        let g = sigma_gens();
        let a = random_terms(&g, 50, 3, 4, 7);
        assert_eq!(a, random_terms(&g, 50, 3, 4, 7));
        for x in &a {
            term_pi(x, &g).unwrap();
        }
    }
}
