//! Verification of the action-operad laws on bounded families of inputs.
//!
//! Every law ranges over "shapes" (the arity data: `n`, size vectors, nested
//! size vectors) and over elements of the groups at the arities the shape
//! mentions. A shape's weight is the sum of all arity indices it mentions;
//! only shapes with weight at most `max_total` and every index at most
//! `max_arity` are used. A law is checked on all its cases when there are at
//! most `max_cases` of them and on a fixed pseudo-random sample otherwise.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::{ActionOperad, Verdict};
use crate::perm::Perm;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CheckConfig {
    /// Bound on the weight of a shape.
    pub max_total: usize,
    /// Bound on each arity index.
    pub max_arity: usize,
    /// Word length used to enumerate infinite groups.
    pub max_word_len: usize,
    /// Per law, the largest case count checked exhaustively.
    pub max_cases: usize,
    pub seed: u64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            max_total: 5,
            max_arity: 5,
            max_word_len: 2,
            max_cases: 20_000,
            seed: 0x5eed_1a7e,
        }
    }
}

impl CheckConfig {
    /// Every case up to the given weight.
    pub fn exhaustive(max_total: usize) -> Self {
        CheckConfig {
            max_total,
            max_arity: max_total,
            max_cases: usize::MAX,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Law {
    BetaPiNatural,
    BetaUnary,
    BetaAssoc,
    BetaHom,
    DeltaPiNatural,
    DeltaUnit,
    DeltaTwistedHom,
    DeltaAssoc,
    DeltaBetaInterchange,
    BetaDeltaDistrib,
    ActionEquivariance,
    DeltaMuAssoc,
    MuAssoc,
}

impl Law {
    pub const ALL: [Law; 13] = [
        Law::BetaPiNatural,
        Law::BetaUnary,
        Law::BetaAssoc,
        Law::BetaHom,
        Law::DeltaPiNatural,
        Law::DeltaUnit,
        Law::DeltaTwistedHom,
        Law::DeltaAssoc,
        Law::DeltaBetaInterchange,
        Law::BetaDeltaDistrib,
        Law::ActionEquivariance,
        Law::DeltaMuAssoc,
        Law::MuAssoc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::BetaPiNatural => "beta-pi-natural",
            Law::BetaUnary => "beta-unary",
            Law::BetaAssoc => "beta-assoc",
            Law::BetaHom => "beta-hom",
            Law::DeltaPiNatural => "delta-pi-natural",
            Law::DeltaUnit => "delta-unit",
            Law::DeltaTwistedHom => "delta-twisted-hom",
            Law::DeltaAssoc => "delta-assoc",
            Law::DeltaBetaInterchange => "delta-beta-interchange",
            Law::BetaDeltaDistrib => "beta-delta-distrib",
            Law::ActionEquivariance => "action-equivariance",
            Law::DeltaMuAssoc => "delta-mu-assoc",
            Law::MuAssoc => "mu-assoc",
        }
    }

    pub fn from_name(name: &str) -> Option<Law> {
        Law::ALL.into_iter().find(|l| l.name() == name)
    }
}

/// Arity data of one family of cases, plus the arity of each element slot.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Shape {
    params: Vec<Vec<usize>>,
    slots: Vec<usize>,
}

/// Vectors of length `len` with entries `≤ max_entry` and sum `≤ max_sum`.
pub(crate) fn vectors(len: usize, max_entry: usize, max_sum: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for a in 0..=max_entry.min(max_sum) {
        for mut rest in vectors(len - 1, max_entry, max_sum - a) {
            rest.insert(0, a);
            out.push(rest);
        }
    }
    out
}

fn split_blocks<T: Clone>(xs: &[T], sizes: &[usize]) -> Vec<Vec<T>> {
    let mut out = Vec::with_capacity(sizes.len());
    let mut at = 0;
    for &s in sizes {
        out.push(xs[at..at + s].to_vec());
        at += s;
    }
    out
}

fn shapes(law: Law, cfg: &CheckConfig) -> Vec<Shape> {
    let (w, a) = (cfg.max_total, cfg.max_arity);
    let mut out = Vec::new();
    let ns = 0..=a.min(w);
    match law {
        Law::BetaPiNatural | Law::BetaHom => {
            for n in ns {
                for k in vectors(n, a, w - n) {
                    let slots = if law == Law::BetaHom {
                        [k.clone(), k.clone()].concat()
                    } else {
                        k.clone()
                    };
                    out.push(Shape {
                        params: vec![k],
                        slots,
                    });
                }
            }
        }
        Law::BetaUnary => {
            for k in 0..=a.min(w.saturating_sub(1)) {
                out.push(Shape {
                    params: vec![],
                    slots: vec![k],
                });
            }
        }
        Law::BetaAssoc => {
            for n in ns {
                for j in vectors(n, a, w - n) {
                    let sj: usize = j.iter().sum();
                    for k in vectors(sj, a, w - n - sj) {
                        out.push(Shape {
                            params: vec![j.clone(), k.clone()],
                            slots: k,
                        });
                    }
                }
            }
        }
        Law::DeltaPiNatural | Law::DeltaTwistedHom => {
            for n in ns {
                for k in vectors(n, a, w - n) {
                    let slots = if law == Law::DeltaTwistedHom {
                        vec![n, n]
                    } else {
                        vec![n]
                    };
                    out.push(Shape {
                        params: vec![k],
                        slots,
                    });
                }
            }
        }
        Law::DeltaUnit => {
            for n in ns {
                out.push(Shape {
                    params: vec![vec![0, n]],
                    slots: vec![n],
                });
                out.push(Shape {
                    params: vec![vec![1, n]],
                    slots: vec![],
                });
            }
        }
        Law::DeltaAssoc | Law::DeltaMuAssoc | Law::MuAssoc => {
            for n in ns {
                for m in vectors(n, a, w - n) {
                    let sm: usize = m.iter().sum();
                    for p in vectors(sm, a, w - n - sm) {
                        let slots = match law {
                            Law::DeltaAssoc => vec![n],
                            Law::DeltaMuAssoc => [vec![n], m.clone()].concat(),
                            _ => [vec![n], m.clone(), p.clone()].concat(),
                        };
                        out.push(Shape {
                            params: vec![m.clone(), p],
                            slots,
                        });
                    }
                }
            }
        }
        Law::DeltaBetaInterchange => {
            for n in ns {
                for k in vectors(n, a, w - n) {
                    out.push(Shape {
                        params: vec![k.clone()],
                        slots: [vec![n], k].concat(),
                    });
                }
            }
        }
        Law::BetaDeltaDistrib => {
            for n in ns {
                for k in vectors(n, a, w - n) {
                    let sk: usize = k.iter().sum();
                    for m in vectors(sk, a, w - n - sk) {
                        out.push(Shape {
                            params: vec![k.clone(), m],
                            slots: k.clone(),
                        });
                    }
                }
            }
        }
        Law::ActionEquivariance => {
            for n in ns {
                for k in vectors(n, a, w - n) {
                    out.push(Shape {
                        params: vec![k.clone()],
                        slots: [vec![n, n], k.clone(), k].concat(),
                    });
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub inputs: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawRow {
    pub law: String,
    pub exhaustive: bool,
    pub checked: u64,
    pub failed: u64,
    pub inconclusive: u64,
    pub counterexample: Option<Counterexample>,
    /// First case the equality oracle could not settle.
    pub undecided: Option<Counterexample>,
}

impl LawRow {
    pub fn status(&self) -> &'static str {
        if self.failed > 0 {
            "FAIL"
        } else if self.inconclusive > 0 {
            "INCONCLUSIVE"
        } else {
            "PASS"
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub operad: String,
    pub config: CheckConfig,
    pub rows: Vec<LawRow>,
}

impl AxiomReport {
    pub fn failures(&self) -> u64 {
        self.rows.iter().map(|r| r.failed).sum()
    }

    pub fn inconclusive(&self) -> u64 {
        self.rows.iter().map(|r| r.inconclusive).sum()
    }

    pub fn checked(&self) -> u64 {
        self.rows.iter().map(|r| r.checked).sum()
    }

    pub fn row(&self, law: Law) -> Option<&LawRow> {
        self.rows.iter().find(|r| r.law == law.name())
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.config;
        writeln!(
            f,
            "operad {} max-total {} max-arity {} max-word-len {}",
            self.operad, c.max_total, c.max_arity, c.max_word_len
        )?;
        for r in &self.rows {
            writeln!(
                f,
                "{:<24} {:<12} checked {:>7} failed {:>5} inconclusive {:>5}  {}",
                r.law,
                if r.exhaustive { "exhaustive" } else { "sampled" },
                r.checked,
                r.failed,
                r.inconclusive,
                r.status()
            )?;
            for (label, cx) in [("counterexample", &r.counterexample), ("undecided", &r.undecided)] {
                if let Some(cx) = cx {
                    writeln!(f, "  {label}: {}", cx.inputs)?;
                    writeln!(f, "    lhs: {}", cx.lhs)?;
                    writeln!(f, "    rhs: {}", cx.rhs)?;
                }
            }
        }
        writeln!(
            f,
            "total checked {} failed {} inconclusive {}",
            self.checked(),
            self.failures(),
            self.inconclusive()
        )
    }
}

enum Outcome {
    Pass,
    Inconclusive { lhs: String, rhs: String },
    Fail { lhs: String, rhs: String },
}

struct Ctx<'a, A: ActionOperad> {
    inst: &'a A,
}

impl<A: ActionOperad> Ctx<'_, A> {
    fn same(&self, lhs: Result<A::Elem, super::OperadError>, rhs: Result<A::Elem, super::OperadError>) -> Outcome {
        match (lhs, rhs) {
            (Ok(l), Ok(r)) => match self.inst.equal(&l, &r) {
                Verdict::Equal => Outcome::Pass,
                Verdict::Inconclusive => Outcome::Inconclusive {
                    lhs: self.inst.render(&l),
                    rhs: self.inst.render(&r),
                },
                Verdict::Distinct(_) => Outcome::Fail {
                    lhs: self.inst.render(&l),
                    rhs: self.inst.render(&r),
                },
            },
            (l, r) => Outcome::Fail {
                lhs: describe(self.inst, l),
                rhs: describe(self.inst, r),
            },
        }
    }

    fn same_perm(&self, lhs: Result<Perm, super::OperadError>, rhs: Perm) -> Outcome {
        match lhs {
            Ok(l) if l == rhs => Outcome::Pass,
            Ok(l) => Outcome::Fail {
                lhs: l.to_string(),
                rhs: rhs.to_string(),
            },
            Err(e) => Outcome::Fail {
                lhs: format!("error: {e}"),
                rhs: rhs.to_string(),
            },
        }
    }
}

fn describe<A: ActionOperad>(inst: &A, r: Result<A::Elem, super::OperadError>) -> String {
    match r {
        Ok(x) => inst.render(&x),
        Err(e) => format!("error: {e}"),
    }
}

fn check_case<A: ActionOperad>(inst: &A, law: Law, shape: &Shape, el: &[&A::Elem]) -> Outcome {
    let cx = Ctx { inst };
    let owned = |xs: &[&A::Elem]| xs.iter().map(|x| (*x).clone()).collect::<Vec<_>>();
    let mul = |a: &A::Elem, b: &A::Elem| inst.mul(a, b);
    match law {
        Law::BetaPiNatural => {
            let hs = owned(el);
            let expected = Perm::block_sum(&hs.iter().map(|h| inst.pi(h)).collect::<Vec<_>>());
            cx.same_perm(Ok(inst.pi(&inst.beta(&hs))), expected)
        }
        Law::BetaUnary => cx.same(Ok(inst.beta(&[el[0].clone()])), Ok(el[0].clone())),
        Law::BetaAssoc => {
            let (j, hs) = (&shape.params[0], owned(el));
            let blocks = split_blocks(&hs, j);
            let inner: Vec<A::Elem> = blocks.iter().map(|b| inst.beta(b)).collect();
            cx.same(Ok(inst.beta(&hs)), Ok(inst.beta(&inner)))
        }
        Law::BetaHom => {
            let n = shape.params[0].len();
            let (h, h2) = (owned(&el[..n]), owned(&el[n..]));
            let prod: Result<Vec<_>, _> = h.iter().zip(&h2).map(|(a, b)| mul(a, b)).collect();
            cx.same(mul(&inst.beta(&h), &inst.beta(&h2)), prod.map(|p| inst.beta(&p)))
        }
        Law::DeltaPiNatural => {
            let k = &shape.params[0];
            let expected = match inst.pi(el[0]).block_perm(k) {
                Ok(p) => p,
                Err(e) => {
                    return Outcome::Fail {
                        lhs: String::new(),
                        rhs: format!("error: {e}"),
                    }
                }
            };
            cx.same_perm(inst.delta(el[0], k).map(|d| inst.pi(&d)), expected)
        }
        Law::DeltaUnit => {
            let (kind, n) = (shape.params[0][0], shape.params[0][1]);
            if kind == 0 {
                cx.same(inst.delta(el[0], &vec![1; n]), Ok(el[0].clone()))
            } else {
                cx.same(inst.delta(&inst.identity(1), &[n]), Ok(inst.identity(n)))
            }
        }
        Law::DeltaTwistedHom => {
            let j = &shape.params[0];
            let (g, h) = (el[0], el[1]);
            let k = inst.pi(h).permute(j);
            let lhs = inst
                .delta(g, &k)
                .and_then(|a| inst.delta(h, j).and_then(|b| mul(&a, &b)));
            cx.same(lhs, mul(g, h).and_then(|gh| inst.delta(&gh, j)))
        }
        Law::DeltaAssoc => {
            let (m, p) = (&shape.params[0], &shape.params[1]);
            let big: Vec<usize> = split_blocks(p, m).iter().map(|b| b.iter().sum()).collect();
            let lhs = inst.delta(el[0], m).and_then(|d| inst.delta(&d, p));
            cx.same(lhs, inst.delta(el[0], &big))
        }
        Law::DeltaBetaInterchange => {
            let k = &shape.params[0];
            let (g, hs) = (el[0], owned(&el[1..]));
            let moved = inst.pi(g).permute(&hs);
            let d = inst.delta(g, k);
            let lhs = d.clone().and_then(|d| mul(&d, &inst.beta(&hs)));
            let rhs = d.and_then(|d| mul(&inst.beta(&moved), &d));
            cx.same(lhs, rhs)
        }
        Law::BetaDeltaDistrib => {
            let (k, m) = (&shape.params[0], &shape.params[1]);
            let gs = owned(el);
            let ms = split_blocks(m, k);
            let parts: Result<Vec<_>, _> =
                gs.iter().zip(&ms).map(|(g, mi)| inst.delta(g, mi)).collect();
            cx.same(parts.map(|p| inst.beta(&p)), inst.delta(&inst.beta(&gs), m))
        }
        Law::ActionEquivariance => {
            let n = shape.params[0].len();
            let (g, g2) = (el[0], el[1]);
            let ft = owned(&el[2..2 + n]);
            let f2 = owned(&el[2 + n..]);
            // fᵢ = f̃_{π(g′)⁻¹(i)}, so f_{π(g′)(i)} = f̃ᵢ
            let f = inst.pi(g2).permute(&ft);
            let lhs = inst
                .mu(g, &f)
                .and_then(|a| inst.mu(g2, &f2).and_then(|b| mul(&a, &b)));
            let prods: Result<Vec<_>, _> = ft.iter().zip(&f2).map(|(a, b)| mul(a, b)).collect();
            let rhs = mul(g, g2).and_then(|gg| prods.and_then(|p| inst.mu(&gg, &p)));
            cx.same(lhs, rhs)
        }
        Law::DeltaMuAssoc => {
            let (m, p) = (&shape.params[0], &shape.params[1]);
            let (f, gs) = (el[0], owned(&el[1..]));
            let big: Vec<usize> = split_blocks(p, m).iter().map(|b| b.iter().sum()).collect();
            let lhs = inst
                .delta(f, &big)
                .and_then(|a| inst.delta(&inst.beta(&gs), p).and_then(|b| mul(&a, &b)));
            let rhs = inst.mu(f, &gs).and_then(|x| inst.delta(&x, p));
            cx.same(lhs, rhs)
        }
        Law::MuAssoc => {
            let (m, n) = (&shape.params[0], shape.params[0].len());
            let (f, gs) = (el[0], owned(&el[1..1 + n]));
            let hs = owned(&el[1 + n..]);
            let lhs = inst.mu(f, &gs).and_then(|x| inst.mu(&x, &hs));
            let hb = split_blocks(&hs, m);
            let inner: Result<Vec<_>, _> = gs.iter().zip(&hb).map(|(g, h)| inst.mu(g, h)).collect();
            cx.same(lhs, inner.and_then(|i| inst.mu(f, &i)))
        }
    }
}

fn lcg(state: &mut u64) -> u64 {
    *state = state
        .wrapping_mul(6364136223846793005)
        .wrapping_add(1442695040888963407);
    *state >> 11
}

/// Checks the given laws.
pub fn check_laws<A: ActionOperad>(inst: &A, laws: &[Law], cfg: &CheckConfig) -> AxiomReport {
    let mut domains: HashMap<usize, Vec<A::Elem>> = HashMap::new();
    for n in 0..=cfg.max_arity {
        domains.insert(n, inst.bounded_elements(n, cfg.max_word_len));
    }
    let rows = laws
        .iter()
        .enumerate()
        .map(|(li, &law)| check_law(inst, law, cfg, &domains, cfg.seed.wrapping_add(li as u64)))
        .collect();
    AxiomReport {
        operad: inst.name().to_string(),
        config: *cfg,
        rows,
    }
}

/// Checks every law.
pub fn check_axioms<A: ActionOperad>(inst: &A, cfg: &CheckConfig) -> AxiomReport {
    check_laws(inst, &Law::ALL, cfg)
}

fn check_law<A: ActionOperad>(
    inst: &A,
    law: Law,
    cfg: &CheckConfig,
    domains: &HashMap<usize, Vec<A::Elem>>,
    seed: u64,
) -> LawRow {
    let shapes = shapes(law, cfg);
    let counts: Vec<u128> = shapes
        .iter()
        .map(|s| s.slots.iter().map(|k| domains[k].len() as u128).product())
        .collect();
    let mut starts = Vec::with_capacity(counts.len());
    let mut total: u128 = 0;
    for c in &counts {
        starts.push(total);
        total += c;
    }
    let exhaustive = total <= cfg.max_cases as u128;
    let indices: Vec<u128> = if exhaustive {
        (0..total).collect()
    } else {
        let mut state = seed;
        (0..cfg.max_cases)
            .map(|_| {
                let hi = lcg(&mut state) as u128;
                let lo = lcg(&mut state) as u128;
                ((hi << 53) | lo) % total
            })
            .collect()
    };

    let decode = |idx: u128| -> (usize, Vec<&A::Elem>) {
        let si = starts.partition_point(|&s| s <= idx) - 1;
        let mut rem = idx - starts[si];
        let mut el = Vec::with_capacity(shapes[si].slots.len());
        for k in shapes[si].slots.iter().rev() {
            let d = &domains[k];
            el.push(&d[(rem % d.len() as u128) as usize]);
            rem /= d.len() as u128;
        }
        el.reverse();
        (si, el)
    };

    let outcomes: Vec<Outcome> = indices
        .par_iter()
        .map(|&idx| {
            let (si, el) = decode(idx);
            check_case(inst, law, &shapes[si], &el)
        })
        .collect();

    let mut row = LawRow {
        law: law.name().to_string(),
        exhaustive,
        checked: outcomes.len() as u64,
        failed: 0,
        inconclusive: 0,
        counterexample: None,
        undecided: None,
    };
    let witness = |idx: u128, lhs: String, rhs: String| {
        let (si, el) = decode(idx);
        let rendered: Vec<String> = el.iter().map(|e| inst.render(e)).collect();
        Some(Counterexample {
            inputs: format!("sizes {:?} elements [{}]", shapes[si].params, rendered.join("; ")),
            lhs,
            rhs,
        })
    };
    for (o, &idx) in outcomes.into_iter().zip(&indices) {
        match o {
            Outcome::Pass => {}
            Outcome::Inconclusive { lhs, rhs } => {
                row.inconclusive += 1;
                if row.undecided.is_none() {
                    row.undecided = witness(idx, lhs, rhs);
                }
            }
            Outcome::Fail { lhs, rhs } => {
                row.failed += 1;
                if row.counterexample.is_none() {
                    row.counterexample = witness(idx, lhs, rhs);
                }
            }
        }
    }
    row
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operad::{GenWord, OperadError, Symmetric, Trivial};

    #[test]
    fn vectors_enumerate_weak_compositions() {
        assert_eq!(vectors(2, 5, 1), vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
        assert_eq!(vectors(0, 3, 3), vec![Vec::<usize>::new()]);
        assert_eq!(vectors(3, 1, 5).len(), 8);
    }

    #[test]
    fn symmetric_passes_at_small_weight() {
        let r = check_axioms(&Symmetric, &CheckConfig::exhaustive(4));
        assert_eq!(r.failures(), 0, "{r}");
        assert_eq!(r.inconclusive(), 0);
        assert!(r.rows.iter().all(|row| row.exhaustive));
    }

    #[test]
    fn trivial_passes() {
        let r = check_axioms(&Trivial, &CheckConfig::exhaustive(6));
        assert_eq!(r.failures(), 0, "{r}");
    }

    /// The symmetric operad with δ forgetting its input.
    struct FlatDelta;

    impl ActionOperad for FlatDelta {
        type Elem = Perm;
        fn name(&self) -> &str {
            "sym-flat-delta"
        }
        fn arity(&self, g: &Perm) -> usize {
            g.arity()
        }
        fn pi(&self, g: &Perm) -> Perm {
            g.clone()
        }
        fn identity(&self, n: usize) -> Perm {
            Perm::identity(n)
        }
        fn mul(&self, g: &Perm, h: &Perm) -> Result<Perm, OperadError> {
            Symmetric.mul(g, h)
        }
        fn inv(&self, g: &Perm) -> Perm {
            g.inverse()
        }
        fn beta(&self, hs: &[Perm]) -> Perm {
            Perm::block_sum(hs)
        }
        fn delta(&self, _g: &Perm, sizes: &[usize]) -> Result<Perm, OperadError> {
            Ok(Perm::identity(sizes.iter().sum()))
        }
        fn equal(&self, a: &Perm, b: &Perm) -> Verdict {
            Symmetric.equal(a, b)
        }
        fn elements(&self, n: usize) -> Option<Vec<Perm>> {
            Some(Perm::all(n))
        }
        fn generators(&self, n: usize) -> Vec<Perm> {
            Symmetric.generators(n)
        }
        fn factor(&self, g: &Perm) -> GenWord {
            Symmetric.factor(g)
        }
        fn relations(&self, n: usize) -> Vec<(GenWord, GenWord)> {
            Symmetric.relations(n)
        }
        fn parse_element(&self, text: &str, arity: usize) -> Result<Perm, OperadError> {
            Symmetric.parse_element(text, arity)
        }
        fn render(&self, g: &Perm) -> String {
            g.to_string()
        }
    }

    #[test]
    fn mutated_delta_breaks_interchange() {
        let r = check_axioms(&FlatDelta, &CheckConfig::exhaustive(5));
        let row = r.row(Law::DeltaBetaInterchange).unwrap();
        assert!(row.failed > 0);
        let cx = row.counterexample.as_ref().unwrap();
        assert_ne!(cx.lhs, cx.rhs);
        assert!(r.row(Law::DeltaPiNatural).unwrap().failed > 0);
    }

    #[test]
    fn sampling_is_deterministic() {
        let cfg = CheckConfig {
            max_cases: 50,
            ..CheckConfig::exhaustive(5)
        };
        let a = check_axioms(&Symmetric, &cfg);
        let b = check_axioms(&Symmetric, &cfg);
        assert_eq!(a.to_string(), b.to_string());
        assert!(a.rows.iter().any(|r| !r.exhaustive));
        assert_eq!(a.failures(), 0);
    }
}
