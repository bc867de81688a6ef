//! Cactus groups `J_n` as an action operad.
//!
//! `J_n` is generated by involutions `s(p,q)`, `1 ≤ p < q ≤ n`, with `s(p,q)`
//! and `s(k,l)` commuting when `q < k`, and `s(p,q)·s(k,l) = s(a,b)·s(p,q)`
//! when `p ≤ k < l ≤ q`, where `a = ŝ(l)` and `b = ŝ(k)` for the interval
//! reversal `ŝ = ŝ_{p,q}`. (The letters `a, b` stand in for the images so as
//! not to clash with the arity `n`.) `m_k = s(1,k)`, and `m_0`, `m_1` are empty.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::operad::axioms::vectors;
use crate::operad::words::{word_pi, FamilyGen, WordOperad};
use crate::operad::{ActionOperad, OperadError, Verdict};
use crate::perm::Perm;
use crate::rewrite::{Generator, Invariant, InvariantValue, Letter, Relation, RelationSystem, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CactusGen {
    pub p: u16,
    pub q: u16,
}

pub type CactusWord = Word<CactusGen>;
pub type Cactus = WordOperad<CactusGen>;

impl CactusGen {
    pub fn new(p: usize, q: usize) -> Self {
        CactusGen {
            p: p as u16,
            q: q as u16,
        }
    }
}

impl fmt::Display for CactusGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s({},{})", self.p, self.q)
    }
}

impl Generator for CactusGen {
    fn involutive(&self) -> bool {
        true
    }

    fn valid_at(&self, n: usize) -> bool {
        1 <= self.p && self.p < self.q && self.q as usize <= n
    }

    fn render(&self, _inverse: bool) -> String {
        self.to_string()
    }
}

fn bounds_error(p: usize, q: usize, n: usize) -> OperadError {
    OperadError::Bounds(format!("s({p},{q}) needs 1 <= p < q <= {n}"))
}

/// The permutation reversing `[p, q]` inside `1..=n`.
pub fn s_hat(p: usize, q: usize, n: usize) -> Result<Perm, OperadError> {
    if !(1 <= p && p < q && q <= n) {
        return Err(bounds_error(p, q, n));
    }
    let images = (1..=n)
        .map(|i| if (p..=q).contains(&i) { p + q - i } else { i })
        .collect();
    Ok(Perm::from_images(images)?)
}

/// The one-letter word `s(p,q)` in `J_n`.
pub fn s(p: usize, q: usize, n: usize) -> Result<CactusWord, OperadError> {
    let g = CactusGen::new(p, q);
    if !g.valid_at(n) {
        return Err(bounds_error(p, q, n));
    }
    Ok(Word::gen(n, g)?)
}

/// `s(p,q)` when `p < q`, otherwise nothing.
fn push_interval(letters: &mut Vec<Letter<CactusGen>>, p: usize, q: usize) {
    if p < q {
        letters.push(Letter::pos(CactusGen::new(p, q)));
    }
}

/// `m_k = s(1,k)` in `J_k`.
pub fn m(k: usize) -> CactusWord {
    let mut letters = Vec::new();
    push_interval(&mut letters, 1, k);
    Word::raw(k, letters)
}

/// Defining relations of `J_n` with `π` as the only invariant.
pub fn cactus_relations(n: usize) -> RelationSystem<CactusGen> {
    let gens = CactusGen::all_at(n);
    let word = |ls: &[CactusGen]| Word::raw(n, ls.iter().map(|g| Letter::pos(*g)).collect());
    let mut rels = Vec::new();
    for g in &gens {
        rels.push(Relation {
            lhs: word(&[*g, *g]),
            rhs: Word::empty(n),
        });
    }
    for g in &gens {
        for h in &gens {
            let (p, q, k, l) = (g.p as usize, g.q as usize, h.p as usize, h.q as usize);
            if q < k {
                rels.push(Relation {
                    lhs: word(&[*g, *h]),
                    rhs: word(&[*h, *g]),
                });
            } else if p <= k && l <= q && (k, l) != (p, q) {
                let (a, b) = (p + q - l, p + q - k);
                rels.push(Relation {
                    lhs: word(&[*g, *h]),
                    rhs: word(&[CactusGen::new(a, b), *g]),
                });
            }
        }
    }
    let pi = Invariant::new("pi", |w: &CactusWord| InvariantValue::Perm(word_pi(w)));
    RelationSystem::new(n, rels, vec![pi]).expect("relations built at arity n")
}

/// Shifts the letters of block `i` by `k₁+⋯+k_{i−1}` and concatenates.
pub fn cactus_beta(ws: &[CactusWord]) -> CactusWord {
    crate::operad::shift_concat(ws, |g, by| g.shift(by))
}

/// `δ(s(p,q))` at the given block sizes.
pub fn cactus_delta_gen(p: usize, q: usize, n: usize, sizes: &[usize]) -> Result<CactusWord, OperadError> {
    if !(1 <= p && p < q && q <= n) {
        return Err(bounds_error(p, q, n));
    }
    crate::operad::check_sizes(n, sizes)?;
    let total: usize = sizes.iter().sum();
    let before: usize = sizes[..p - 1].iter().sum();
    let inside: usize = sizes[p - 1..q].iter().sum();
    let mut letters = Vec::new();
    push_interval(&mut letters, before + 1, before + inside);
    let mut offset = before;
    for &k in &sizes[p - 1..q] {
        push_interval(&mut letters, offset + 1, offset + k);
        offset += k;
    }
    Ok(Word::new(total, letters)?)
}

/// The commutor `σ_{m,n} = s(1,m+n)·s(1,m)·s(m+1,m+n)`, empty factors dropped.
pub fn commutor(m: usize, n: usize) -> CactusWord {
    let mut letters = Vec::new();
    push_interval(&mut letters, 1, m + n);
    push_interval(&mut letters, 1, m);
    push_interval(&mut letters, m + 1, m + n);
    Word::new(m + n, letters).expect("intervals lie in 1..=m+n")
}

/// One equation checked with the rewrite oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub label: String,
    pub lhs: String,
    pub rhs: String,
    pub verdict: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckTable {
    pub title: String,
    pub rows: Vec<CheckRow>,
}

impl CheckTable {
    fn count(&self, label: &str) -> usize {
        self.rows.iter().filter(|r| r.verdict.starts_with(label)).count()
    }

    pub fn equal(&self) -> usize {
        self.count("Equal")
    }

    pub fn failures(&self) -> usize {
        self.count("Distinct")
    }

    pub fn inconclusive(&self) -> usize {
        self.count("Inconclusive")
    }
}

impl fmt::Display for CheckTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for r in &self.rows {
            writeln!(f, "{:<28} {}", r.label, r.verdict)?;
            if r.verdict != "Equal" {
                writeln!(f, "  lhs: {}", r.lhs)?;
                writeln!(f, "  rhs: {}", r.rhs)?;
            }
        }
        write!(
            f,
            "equal {} distinct {} inconclusive {}",
            self.equal(),
            self.failures(),
            self.inconclusive()
        )
    }
}

fn judge(j: &Cactus, label: String, lhs: CactusWord, rhs: CactusWord) -> CheckRow {
    let verdict = match j.equal(&lhs, &rhs) {
        Verdict::Equal => "Equal".to_string(),
        Verdict::Distinct(why) => format!("Distinct ({why})"),
        Verdict::Inconclusive => "Inconclusive".to_string(),
    };
    CheckRow {
        label,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        verdict,
    }
}

/// The commutor laws up to total arity `max`: `σ_{n,m}σ_{m,n} = e`, the
/// coboundary square `σ_{m,p+n}·β(e_m, σ_{n,p}) = σ_{n+m,p}·β(σ_{m,n}, e_p)`,
/// and `σ_{m,n} = δ(s(1,2); m, n)`.
pub fn check_coboundary(j: &Cactus, max: usize) -> CheckTable {
    let mut jobs: Vec<(String, CactusWord, CactusWord)> = Vec::new();
    for m in 1..max {
        for n in 1..=max - m {
            let lhs = j.mul(&commutor(n, m), &commutor(m, n)).expect("same arity");
            jobs.push((format!("involution m={m} n={n}"), lhs, Word::empty(m + n)));
        }
    }
    for m in 1..max {
        for n in 1..max - m {
            for p in 1..=max - m - n {
                let e = |k| j.identity(k);
                let lhs = j
                    .mul(&commutor(m, p + n), &j.beta(&[e(m), commutor(n, p)]))
                    .expect("same arity");
                let rhs = j
                    .mul(&commutor(n + m, p), &j.beta(&[commutor(m, n), e(p)]))
                    .expect("same arity");
                jobs.push((format!("square m={m} n={n} p={p}"), lhs, rhs));
            }
        }
    }
    let s12 = m(2);
    for a in 1..max {
        for b in 1..=max - a {
            let d = j.delta(&s12, &[a, b]).expect("two sizes");
            jobs.push((format!("delta m={a} n={b}"), commutor(a, b), d));
        }
    }
    CheckTable {
        title: format!("coboundary laws up to arity {max}"),
        rows: jobs.into_par_iter().map(|(l, a, b)| judge(j, l, a, b)).collect(),
    }
}

/// `δ(lhs; k⃗) = δ(rhs; k⃗)` for every defining relation of `J_n`, `n ≤ max_n`,
/// and every size vector with entries at most `max_size`.
pub fn check_delta_well_defined(j: &Cactus, max_n: usize, max_size: usize) -> CheckTable {
    let mut jobs = Vec::new();
    for n in 1..=max_n {
        let sys = j.system(n);
        for (ri, rel) in sys.relations().iter().enumerate() {
            for sizes in vectors(n, max_size, usize::MAX) {
                let l = j.delta(&rel.lhs, &sizes).expect("sizes match arity");
                let r = j.delta(&rel.rhs, &sizes).expect("sizes match arity");
                let label = format!("J{n} rel {} sizes {:?}", ri + 1, sizes);
                jobs.push((label, l, r));
            }
        }
    }
    CheckTable {
        title: format!("delta on relations of J_n, n <= {max_n}, sizes <= {max_size}"),
        rows: jobs.into_par_iter().map(|(l, a, b)| judge(j, l, a, b)).collect(),
    }
}

/// Parses `s(p,q) s(k,l) …` or `e`.
pub fn parse_cactus(text: &str, n: usize) -> Result<CactusWord, OperadError> {
    let err = |reason: String| OperadError::Parse {
        text: text.to_string(),
        arity: n,
        reason,
    };
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut rest = compact.as_str();
    let mut letters = Vec::new();
    while !rest.is_empty() {
        if let Some(r) = rest.strip_prefix('e').or_else(|| rest.strip_prefix('ε')) {
            rest = r;
            continue;
        }
        if let Some(r) = rest.strip_prefix('·').or_else(|| rest.strip_prefix('*')) {
            rest = r;
            continue;
        }
        let body = rest
            .strip_prefix("s(")
            .ok_or_else(|| err(format!("unexpected `{rest}`")))?;
        let close = body.find(')').ok_or_else(|| err("missing `)`".into()))?;
        let (a, b) = body[..close]
            .split_once(',')
            .ok_or_else(|| err("expected s(p,q)".into()))?;
        let p: usize = a.parse().map_err(|_| err(format!("bad index `{a}`")))?;
        let q: usize = b.parse().map_err(|_| err(format!("bad index `{b}`")))?;
        let g = CactusGen::new(p, q);
        if !g.valid_at(n) {
            return Err(bounds_error(p, q, n));
        }
        letters.push(Letter::pos(g));
        rest = &body[close + 1..];
    }
    Ok(Word::new(n, letters)?)
}

impl FamilyGen for CactusGen {
    const NAME: &'static str = "cactus";

    fn all_at(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for p in 1..=n {
            for q in p + 1..=n {
                out.push(CactusGen::new(p, q));
            }
        }
        out
    }

    fn pi_at(&self, n: usize) -> Perm {
        s_hat(self.p as usize, self.q as usize, n).expect("valid generator")
    }

    fn shift(&self, by: usize) -> Self {
        CactusGen {
            p: self.p + by as u16,
            q: self.q + by as u16,
        }
    }

    fn delta_gen(&self, sizes: &[usize]) -> Result<Word<Self>, OperadError> {
        cactus_delta_gen(self.p as usize, self.q as usize, sizes.len(), sizes)
    }

    fn relation_system(n: usize) -> RelationSystem<Self> {
        cactus_relations(n)
    }

    fn parse_word(text: &str, n: usize) -> Result<Word<Self>, OperadError> {
        parse_cactus(text, n)
    }

    fn finite_elements(n: usize) -> Option<Vec<Word<Self>>> {
        match n {
            0 | 1 => Some(vec![Word::empty(n)]),
            2 => Some(vec![Word::empty(2), m(2)]),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operad::ActionOperad;
    use crate::rewrite::{EqResult, SearchBounds};

    fn w(text: &str, n: usize) -> CactusWord {
        parse_cactus(text, n).unwrap()
    }

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn s_hat_examples() {
        assert_eq!(s_hat(1, 2, 2).unwrap(), p("[2,1]"));
        assert_eq!(s_hat(1, 3, 3).unwrap(), p("[3,2,1]"));
        assert_eq!(s_hat(2, 3, 4).unwrap(), p("[1,3,2,4]"));
        assert!(s_hat(2, 2, 3).is_err());
        assert!(s_hat(1, 4, 3).is_err());
    }

    #[test]
    fn relation_counts_and_instances() {
        let r2 = cactus_relations(2);
        assert_eq!(r2.relations().len(), 1);
        assert_eq!(CactusGen::all_at(4).len(), 6);
        let r3 = cactus_relations(3);
        let has = |sys: &RelationSystem<CactusGen>, l: &str, r: &str, n: usize| {
            let (l, r) = (Word::raw(n, w(l, n).letters().to_vec()), w(r, n));
            sys.relations().iter().any(|x| x.lhs == l && x.rhs == r)
        };
        assert!(has(&r3, "s(1,3) s(1,2)", "s(2,3) s(1,3)", 3));
        assert!(has(&cactus_relations(4), "s(1,2) s(3,4)", "s(3,4) s(1,2)", 4));
        for n in 1..=6 {
            cactus_relations(n).check_invariants().unwrap();
        }
    }

    #[test]
    fn free_reduction_uses_involutions() {
        assert!(w("s(1,2) s(1,2)", 2).is_empty());
        assert!(w("e", 4).is_empty());
    }

    #[test]
    fn beta_examples() {
        assert!(cactus_beta(&[Word::empty(0), Word::empty(0)]).is_empty());
        assert_eq!(cactus_beta(&[m(2), m(2)]), w("s(1,2) s(3,4)", 4));
        assert_eq!(cactus_beta(&[w("s(1,3)", 3)]), w("s(1,3)", 3));
    }

    #[test]
    fn delta_gen_examples() {
        assert_eq!(cactus_delta_gen(1, 2, 2, &[2, 1]).unwrap(), w("s(1,3) s(1,2)", 3));
        let d = cactus_delta_gen(2, 3, 3, &[1, 2, 1]).unwrap();
        assert_eq!(d, w("s(2,4) s(2,3)", 4));
        assert_eq!(word_pi(&d), p("[1,3,4,2]"));
        assert_eq!(cactus_delta_gen(1, 3, 4, &[1, 1, 1, 1]).unwrap(), w("s(1,3)", 4));
        assert!(cactus_delta_gen(1, 2, 2, &[1]).is_err());
    }

    #[test]
    fn commutor_examples() {
        assert_eq!(commutor(1, 1), w("s(1,2)", 2));
        assert_eq!(commutor(1, 2), w("s(1,3) s(2,3)", 3));
        assert_eq!(commutor(2, 1), w("s(1,3) s(1,2)", 3));
        let j = Cactus::new();
        assert_eq!(commutor(1, 2), j.delta(&m(2), &[1, 2]).unwrap());
    }

    #[test]
    fn delta_pi_matches_block_perm() {
        for n in 2..=4 {
            for g in CactusGen::all_at(n) {
                for sizes in [vec![1; n], vec![2; n], (0..n).collect::<Vec<_>>()] {
                    let d = g.delta_gen(&sizes).unwrap();
                    assert_eq!(word_pi(&d), g.pi_at(n).block_perm(&sizes).unwrap());
                }
            }
        }
    }

    #[test]
    fn rewrite_examples() {
        let sys = cactus_relations(4);
        let a = w("s(1,4) s(2,3)", 4);
        let b = w("s(2,3) s(1,4)", 4);
        let r = sys.equal(&a, &b, SearchBounds { max_len: Some(8), budget: 10_000 }).unwrap();
        let EqResult::Equal(path) = r else { panic!("{r:?}") };
        assert_eq!(path.steps.len(), 1);
        sys.replay(&path, &a, &b).unwrap();
        let r = cactus_relations(2)
            .equal(&m(2), &Word::empty(2), SearchBounds::default())
            .unwrap();
        assert_eq!(r, EqResult::Distinct("pi".into()));
    }

    #[test]
    fn coboundary_laws_small() {
        let t = check_coboundary(&Cactus::new(), 4);
        assert_eq!(t.equal(), t.rows.len(), "{t}");
        assert!(t.rows.iter().any(|r| r.label == "square m=1 n=1 p=1"));
        let d = check_delta_well_defined(&Cactus::new(), 3, 2);
        assert_eq!(d.equal(), d.rows.len(), "{d}");
    }

    #[test]
    fn parser() {
        assert_eq!(w("s(1, 2)s(2,3)", 3), w("s(1,2) s(2,3)", 3));
        assert!(parse_cactus("s(2,1)", 3).is_err());
        assert!(parse_cactus("s(1,4)", 3).is_err());
        assert!(parse_cactus("t(1,2)", 3).is_err());
        assert_eq!(w("s(1,2) s(2,3)", 3).to_string(), "s(1,2) s(2,3)");
    }
}
