//! Clubs over `BΣ` and their correspondence with action operads.
//!
//! A club is given operationally: its categorical data over `BΣ` together with
//! the multiplication `K∘K → K` on cells `f(g₁,…,gₙ)`. A cell with head
//! `f: n → n` has legs `gᵢ` whose codomains are indexed through `π(f)`.

use std::collections::BTreeSet;
use std::fmt;
use std::hash::Hash;

use serde::Serialize;
use thiserror::Error;

use crate::borel::{compose_borel, hom_set, objects_of_arity, BorelMorphism};
use crate::fincat::FinCat;
use crate::operad::axioms::{check_axioms, vectors, AxiomReport, CheckConfig};
use crate::operad::{ActionOperad, GenWord, OperadError, Symmetric, Verdict};
use crate::perm::Perm;

pub trait Club: Send + Sync {
    type Obj: Clone + Eq + Hash + std::fmt::Debug + Send + Sync;
    type Mor: Clone + Eq + Hash + Ord + std::fmt::Debug + Send + Sync;

    fn name(&self) -> String;
    /// Objects lying over `0..=max_degree`.
    fn objects(&self, max_degree: usize) -> Vec<Self::Obj>;
    /// Image of an object in `BΣ`.
    fn degree(&self, o: &Self::Obj) -> usize;
    fn src(&self, f: &Self::Mor) -> Self::Obj;
    fn tgt(&self, f: &Self::Mor) -> Self::Obj;
    /// All morphisms `a → b`, when there are finitely many.
    fn hom(&self, a: &Self::Obj, b: &Self::Obj) -> Option<Vec<Self::Mor>>;
    /// Generators of the endomorphisms of `o`.
    fn generators(&self, o: &Self::Obj) -> Vec<Self::Mor>;
    /// `g ∘ f`.
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor, OperadError>;
    fn identity(&self, o: &Self::Obj) -> Self::Mor;
    fn inverse(&self, f: &Self::Mor) -> Option<Self::Mor>;
    /// Image of a morphism in `BΣ`.
    fn project(&self, f: &Self::Mor) -> Perm;
    /// The multiplication on a cell `head(legs)`.
    fn mult(&self, head: &Self::Mor, legs: &[Self::Mor]) -> Result<Self::Mor, OperadError>;
    fn equal(&self, a: &Self::Mor, b: &Self::Mor) -> Verdict;
    fn factor(&self, f: &Self::Mor) -> GenWord;
    fn relations(&self, o: &Self::Obj) -> Vec<(GenWord, GenWord)>;
    fn parse(&self, text: &str, degree: usize) -> Result<Self::Mor, OperadError>;
    fn render(&self, f: &Self::Mor) -> String;
}

/// The club `K_Λ = BΛ` of an action operad.
pub struct OperadClub<'a, A: ActionOperad> {
    pub inst: &'a A,
}

pub fn club_from<A: ActionOperad>(inst: &A) -> OperadClub<'_, A> {
    OperadClub { inst }
}

impl<A: ActionOperad> Club for OperadClub<'_, A> {
    type Obj = usize;
    type Mor = A::Elem;

    fn name(&self) -> String {
        format!("B{}", self.inst.name())
    }

    fn objects(&self, max_degree: usize) -> Vec<usize> {
        (0..=max_degree).collect()
    }

    fn degree(&self, o: &usize) -> usize {
        *o
    }

    fn src(&self, f: &A::Elem) -> usize {
        self.inst.arity(f)
    }

    fn tgt(&self, f: &A::Elem) -> usize {
        self.inst.arity(f)
    }

    fn hom(&self, a: &usize, b: &usize) -> Option<Vec<A::Elem>> {
        if a != b {
            return Some(Vec::new());
        }
        self.inst.elements(*a)
    }

    fn generators(&self, o: &usize) -> Vec<A::Elem> {
        self.inst.generators(*o)
    }

    fn compose(&self, g: &A::Elem, f: &A::Elem) -> Result<A::Elem, OperadError> {
        self.inst.mul(g, f)
    }

    fn identity(&self, o: &usize) -> A::Elem {
        self.inst.identity(*o)
    }

    fn inverse(&self, f: &A::Elem) -> Option<A::Elem> {
        Some(self.inst.inv(f))
    }

    fn project(&self, f: &A::Elem) -> Perm {
        self.inst.pi(f)
    }

    fn mult(&self, head: &A::Elem, legs: &[A::Elem]) -> Result<A::Elem, OperadError> {
        self.inst.mu(head, legs)
    }

    fn equal(&self, a: &A::Elem, b: &A::Elem) -> Verdict {
        self.inst.equal(a, b)
    }

    fn factor(&self, f: &A::Elem) -> GenWord {
        self.inst.factor(f)
    }

    fn relations(&self, o: &usize) -> Vec<(GenWord, GenWord)> {
        self.inst.relations(*o)
    }

    fn parse(&self, text: &str, degree: usize) -> Result<A::Elem, OperadError> {
        self.inst.parse_element(text, degree)
    }

    fn render(&self, f: &A::Elem) -> String {
        self.inst.render(f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClubError {
    #[error("not bijective on objects: {count} objects over {degree}")]
    NotBijective { degree: usize, count: usize },
    #[error("not a groupoid: `{0}` has no inverse")]
    NotGroupoid(String),
    #[error("morphism `{0}` is not an endomorphism")]
    NotEndo(String),
}

/// The action operad of a groupoid club that is bijective on objects:
/// `β(h⃗) = eₙ(h⃗)`, `δ(f, k⃗) = f(e_{k₁},…,e_{kₙ})`, and `μ` rebuilt from them.
pub struct ClubOperad<C: Club> {
    club: C,
    name: String,
    objs: Vec<C::Obj>,
}

/// Checks the two hypotheses up to `max_degree` and extracts the operad.
pub fn operad_from_club<C: Club>(club: C, max_degree: usize) -> Result<ClubOperad<C>, ClubError> {
    let all = club.objects(max_degree);
    let mut objs = Vec::with_capacity(max_degree + 1);
    for d in 0..=max_degree {
        let over: Vec<&C::Obj> = all.iter().filter(|o| club.degree(o) == d).collect();
        if over.len() != 1 {
            return Err(ClubError::NotBijective {
                degree: d,
                count: over.len(),
            });
        }
        objs.push(over[0].clone());
    }
    for o in &objs {
        let mors = club.hom(o, o).unwrap_or_else(|| club.generators(o));
        for f in &mors {
            if club.src(f) != *o || club.tgt(f) != *o {
                return Err(ClubError::NotEndo(club.render(f)));
            }
            let id = club.identity(o);
            let ok = club.inverse(f).is_some_and(|g| {
                let gf = club.compose(&g, f);
                let fg = club.compose(f, &g);
                matches!((gf, fg), (Ok(a), Ok(b)) if club.equal(&a, &id).is_equal() && club.equal(&b, &id).is_equal())
            });
            if !ok {
                return Err(ClubError::NotGroupoid(club.render(f)));
            }
        }
    }
    let name = format!("club({})", club.name());
    Ok(ClubOperad { club, name, objs })
}

impl<C: Club> ClubOperad<C> {
    fn obj(&self, n: usize) -> C::Obj {
        if let Some(o) = self.objs.get(n) {
            return o.clone();
        }
        self.club
            .objects(n)
            .into_iter()
            .find(|o| self.club.degree(o) == n)
            .expect("checked bijective on objects")
    }

    pub fn club(&self) -> &C {
        &self.club
    }
}

impl<C: Club> ActionOperad for ClubOperad<C> {
    type Elem = C::Mor;

    fn name(&self) -> &str {
        &self.name
    }

    fn arity(&self, g: &C::Mor) -> usize {
        self.club.degree(&self.club.src(g))
    }

    fn pi(&self, g: &C::Mor) -> Perm {
        self.club.project(g)
    }

    fn identity(&self, n: usize) -> C::Mor {
        self.club.identity(&self.obj(n))
    }

    fn mul(&self, g: &C::Mor, h: &C::Mor) -> Result<C::Mor, OperadError> {
        self.club.compose(g, h)
    }

    fn inv(&self, g: &C::Mor) -> C::Mor {
        self.club.inverse(g).expect("checked to be a groupoid")
    }

    fn beta(&self, hs: &[C::Mor]) -> C::Mor {
        self.club
            .mult(&self.identity(hs.len()), hs)
            .expect("legs match the identity head")
    }

    fn delta(&self, g: &C::Mor, sizes: &[usize]) -> Result<C::Mor, OperadError> {
        crate::operad::check_sizes(self.arity(g), sizes)?;
        let legs: Vec<C::Mor> = sizes.iter().map(|&k| self.identity(k)).collect();
        self.club.mult(g, &legs)
    }

    fn equal(&self, a: &C::Mor, b: &C::Mor) -> Verdict {
        self.club.equal(a, b)
    }

    fn elements(&self, n: usize) -> Option<Vec<C::Mor>> {
        let o = self.obj(n);
        self.club.hom(&o, &o)
    }

    fn generators(&self, n: usize) -> Vec<C::Mor> {
        self.club.generators(&self.obj(n))
    }

    fn factor(&self, g: &C::Mor) -> GenWord {
        self.club.factor(g)
    }

    fn relations(&self, n: usize) -> Vec<(GenWord, GenWord)> {
        self.club.relations(&self.obj(n))
    }

    fn parse_element(&self, text: &str, arity: usize) -> Result<C::Mor, OperadError> {
        self.club.parse(text, arity)
    }

    fn render(&self, g: &C::Mor) -> String {
        self.club.render(g)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClubReport {
    pub operad: String,
    pub beta_checked: u64,
    pub delta_checked: u64,
    pub unit_checked: u64,
    pub mismatches: Vec<String>,
    pub undecided: u64,
    pub axioms: AxiomReport,
}

impl ClubReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.axioms.failures() == 0
    }
}

impl fmt::Display for ClubReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "club of {}", self.operad)?;
        writeln!(f, "beta roundtrip: {} tuples", self.beta_checked)?;
        writeln!(f, "delta roundtrip: {} tuples", self.delta_checked)?;
        writeln!(f, "unit cells: {} checked", self.unit_checked)?;
        writeln!(f, "undecided: {}", self.undecided)?;
        for m in &self.mismatches {
            writeln!(f, "mismatch: {m}")?;
        }
        writeln!(f, "rebuilt operad laws:")?;
        write!(f, "{}", self.axioms)?;
        write!(f, "{}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// Builds `K_Λ`, extracts the operad back and compares `β`, `δ` and the unit
/// cells `e₁(g) = g` with the original on every tuple in range; then runs the
/// law checker on the rebuilt operad.
pub fn check_club<A: ActionOperad>(inst: &A, cfg: &CheckConfig) -> Result<ClubReport, ClubError> {
    let back = operad_from_club(club_from(inst), cfg.max_arity)?;
    let elems = |n: usize| inst.bounded_elements(n, cfg.max_word_len);
    let mut report = ClubReport {
        operad: inst.name().to_string(),
        beta_checked: 0,
        delta_checked: 0,
        unit_checked: 0,
        mismatches: Vec::new(),
        undecided: 0,
        axioms: check_axioms(&back, cfg),
    };
    let judge = |what: String, a: &A::Elem, b: &A::Elem, report: &mut ClubReport| match inst.equal(a, b) {
        Verdict::Equal => {}
        Verdict::Inconclusive => report.undecided += 1,
        Verdict::Distinct(_) => report.mismatches.push(format!("{what}: {} vs {}", inst.render(a), inst.render(b))),
    };
    for n in 0..=cfg.max_arity.min(cfg.max_total) {
        for g in elems(n) {
            let sizes_all = vectors(n, cfg.max_arity, cfg.max_total);
            for sizes in sizes_all {
                if let (Ok(a), Ok(b)) = (back.delta(&g, &sizes), inst.delta(&g, &sizes)) {
                    report.delta_checked += 1;
                    judge(format!("delta({}; {sizes:?})", inst.render(&g)), &a, &b, &mut report);
                }
            }
        }
        for ar in vectors(n, cfg.max_arity, cfg.max_total) {
            let lists: Vec<Vec<A::Elem>> = ar.iter().map(|&k| elems(k)).collect();
            let refs: Vec<&[A::Elem]> = lists.iter().map(|l| l.as_slice()).collect();
            for hs in crate::borel::product(&refs) {
                report.beta_checked += 1;
                let what = format!("beta({})", hs.iter().map(|h| inst.render(h)).collect::<Vec<_>>().join(", "));
                judge(what, &back.beta(&hs), &inst.beta(&hs), &mut report);
            }
        }
    }
    for n in 0..=cfg.max_arity {
        for g in elems(n) {
            report.unit_checked += 1;
            let cell = back.club().mult(&inst.identity(1), std::slice::from_ref(&g));
            match cell {
                Ok(c) => judge(format!("e1({})", inst.render(&g)), &c, &g, &mut report),
                Err(e) => report.mismatches.push(e.to_string()),
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PullbackReport {
    pub operad: String,
    pub arity: usize,
    pub object_pairs: u64,
    pub morphisms: u64,
    pub compositions: u64,
    pub failure: Option<String>,
}

impl PullbackReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for PullbackReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "pullback square for {} at arity {}", self.operad, self.arity)?;
        writeln!(f, "object pairs: {}", self.object_pairs)?;
        writeln!(f, "morphisms matched: {}", self.morphisms)?;
        writeln!(f, "composites matched: {}", self.compositions)?;
        if let Some(w) = &self.failure {
            writeln!(f, "witness: {w}")?;
        }
        write!(f, "{}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// Compares `EΛ(n) ×_{Λ(n)} Xⁿ` with the pullback of `EΣₙ ×_{Σₙ} Xⁿ → BΣₙ`
/// along `π: BΛ(n) → BΣₙ`. Both have the tuples `Xⁿ` as objects; a morphism of
/// the pullback is a pair `(g, m)` with `π(g)` equal to the group part of `m`.
/// The comparison `(g, f⃗) ↦ (g, (π(g), f⃗))` must be a bijection on every
/// hom-set and preserve composition.
pub fn check_pullback<A: ActionOperad>(inst: &A, n: usize, x: &FinCat) -> Result<PullbackReport, OperadError> {
    let elems = inst.elements(n).ok_or_else(|| OperadError::Infinite {
        operad: inst.name().to_string(),
        arity: n,
    })?;
    let sym = Symmetric;
    let mut report = PullbackReport {
        operad: inst.name().to_string(),
        arity: n,
        object_pairs: 0,
        morphisms: 0,
        compositions: 0,
        failure: None,
    };
    let objs = objects_of_arity(x, n);
    type Pair<E> = (E, BorelMorphism<Perm>);
    let compare = |m: &BorelMorphism<A::Elem>| -> Pair<A::Elem> {
        let down = BorelMorphism {
            src: m.src.clone(),
            tgt: m.tgt.clone(),
            g: inst.pi(&m.g),
            comps: m.comps.clone(),
        };
        (m.g.clone(), down)
    };
    let mut homs = std::collections::HashMap::new();
    for s in &objs {
        for t in &objs {
            report.object_pairs += 1;
            let upstairs = hom_set(inst, x, s, t, 0).morphisms;
            let downstairs = hom_set(&sym, x, s, t, 0).morphisms;
            let mut pullback = BTreeSet::new();
            for g in &elems {
                for m in downstairs.iter().filter(|m| m.g == inst.pi(g)) {
                    pullback.insert((g.clone(), m.clone()));
                }
            }
            let image: BTreeSet<Pair<A::Elem>> = upstairs.iter().map(compare).collect();
            if image.len() != upstairs.len() || image != pullback {
                report.failure = Some(format!(
                    "{} -> {}: {} morphisms upstairs, {} in the pullback",
                    s.render(x),
                    t.render(x),
                    upstairs.len(),
                    pullback.len()
                ));
                return Ok(report);
            }
            report.morphisms += upstairs.len() as u64;
            homs.insert((s.clone(), t.clone()), upstairs);
        }
    }
    for a in &objs {
        for b in &objs {
            for c in &objs {
                for m1 in &homs[&(a.clone(), b.clone())] {
                    for m2 in &homs[&(b.clone(), c.clone())] {
                        report.compositions += 1;
                        let (g1, d1) = compare(m1);
                        let (g2, d2) = compare(m2);
                        let up = compare(&compose_borel(inst, x, m2, m1)?);
                        let g = inst.mul(&g2, &g1)?;
                        let d = compose_borel(&sym, x, &d2, &d1)?;
                        if !inst.equal(&up.0, &g).is_equal() || up.1 != d {
                            report.failure = Some(format!(
                                "composite of {} and {} is not preserved",
                                m1.render(inst, x),
                                m2.render(inst, x)
                            ));
                            return Ok(report);
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}
