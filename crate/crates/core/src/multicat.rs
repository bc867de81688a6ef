//! Finite Λ-multicategories and Λ-multifunctors, validated table by table.
//!
//! `Λ(n)` acts on the right of n-ary multimorphisms: `f·α` lies in
//! `M(x_{π(α)(1)},…,x_{π(α)(n)}; y)` when `f ∈ M(x₁,…,xₙ; y)`. Actions are
//! listed per generator of `Λ(n)` and extended to words letter by letter.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::operad::{ActionOperad, GenWord};
use crate::perm::Perm;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MulticatError {
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("duplicate name `{0}`")]
    Duplicate(String),
    #[error("malformed document: {0}")]
    Format(String),
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MulticatDoc {
    pub objects: Vec<String>,
    pub homs: Vec<HomDoc>,
    #[serde(default)]
    pub identities: BTreeMap<String, String>,
    #[serde(default)]
    pub compose: Vec<ComposeDoc>,
    #[serde(default)]
    pub actions: Vec<ActionDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomDoc {
    pub inputs: Vec<String>,
    pub output: String,
    pub elements: Vec<String>,
}

/// `outer(inner₁,…,innerₙ) = result`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComposeDoc {
    pub outer: String,
    pub inner: Vec<String>,
    pub result: String,
}

/// The action of generator number `generator` of `Λ(arity)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionDoc {
    pub arity: usize,
    pub generator: usize,
    pub mapping: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Elem {
    name: String,
    inputs: Vec<usize>,
    output: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinMulticat {
    objects: Vec<String>,
    elems: Vec<Elem>,
    homs: HashMap<(Vec<usize>, usize), Vec<usize>>,
    by_output: HashMap<usize, Vec<usize>>,
    identities: HashMap<usize, usize>,
    compose: HashMap<(usize, Vec<usize>), usize>,
    actions: HashMap<(usize, usize), HashMap<usize, usize>>,
}

impl FinMulticat {
    /// Resolves names. Anything that is well-formed but wrong is left to
    /// [`validate_multicat`].
    pub fn from_doc(doc: &MulticatDoc) -> Result<Self, MulticatError> {
        let mut obj_ix = HashMap::new();
        for (i, o) in doc.objects.iter().enumerate() {
            if obj_ix.insert(o.as_str(), i).is_some() {
                return Err(MulticatError::Duplicate(o.clone()));
            }
        }
        let obj = |n: &str| obj_ix.get(n).copied().ok_or_else(|| MulticatError::UnknownObject(n.to_string()));
        let mut elems = Vec::new();
        let mut el_ix: HashMap<String, usize> = HashMap::new();
        for h in &doc.homs {
            let inputs = h.inputs.iter().map(|i| obj(i)).collect::<Result<Vec<_>, _>>()?;
            let output = obj(&h.output)?;
            for e in &h.elements {
                if el_ix.insert(e.clone(), elems.len()).is_some() {
                    return Err(MulticatError::Duplicate(e.clone()));
                }
                elems.push(Elem {
                    name: e.clone(),
                    inputs: inputs.clone(),
                    output,
                });
            }
        }
        let el = |n: &str| el_ix.get(n).copied().ok_or_else(|| MulticatError::UnknownElement(n.to_string()));
        let mut identities = HashMap::new();
        for (o, e) in &doc.identities {
            identities.insert(obj(o)?, el(e)?);
        }
        let mut compose = HashMap::new();
        for c in &doc.compose {
            let inner = c.inner.iter().map(|i| el(i)).collect::<Result<Vec<_>, _>>()?;
            if compose.insert((el(&c.outer)?, inner), el(&c.result)?).is_some() {
                return Err(MulticatError::Duplicate(format!("{}({})", c.outer, c.inner.join(","))));
            }
        }
        let mut actions: HashMap<(usize, usize), HashMap<usize, usize>> = HashMap::new();
        for a in &doc.actions {
            let m = actions.entry((a.arity, a.generator)).or_default();
            for (f, g) in &a.mapping {
                m.insert(el(f)?, el(g)?);
            }
        }
        let mut mc = FinMulticat {
            objects: doc.objects.clone(),
            elems,
            homs: HashMap::new(),
            by_output: HashMap::new(),
            identities,
            compose,
            actions,
        };
        mc.index();
        Ok(mc)
    }

    pub fn from_json(text: &str) -> Result<Self, MulticatError> {
        let doc: MulticatDoc = serde_json::from_str(text).map_err(|e| MulticatError::Format(e.to_string()))?;
        Self::from_doc(&doc)
    }

    fn index(&mut self) {
        self.homs.clear();
        self.by_output.clear();
        for (i, e) in self.elems.iter().enumerate() {
            self.homs.entry((e.inputs.clone(), e.output)).or_default().push(i);
            self.by_output.entry(e.output).or_default().push(i);
        }
    }

    pub fn to_doc(&self) -> MulticatDoc {
        let name = |i: usize| self.elems[i].name.clone();
        let mut sigs: Vec<&(Vec<usize>, usize)> = self.homs.keys().collect();
        sigs.sort();
        let homs = sigs
            .into_iter()
            .map(|sig| HomDoc {
                inputs: sig.0.iter().map(|&o| self.objects[o].clone()).collect(),
                output: self.objects[sig.1].clone(),
                elements: self.homs[sig].iter().map(|&i| name(i)).collect(),
            })
            .collect();
        let mut compose: Vec<ComposeDoc> = self
            .compose
            .iter()
            .map(|((f, gs), r)| ComposeDoc {
                outer: name(*f),
                inner: gs.iter().map(|&g| name(g)).collect(),
                result: name(*r),
            })
            .collect();
        compose.sort_by(|a, b| (&a.outer, &a.inner).cmp(&(&b.outer, &b.inner)));
        let mut actions: Vec<ActionDoc> = self
            .actions
            .iter()
            .map(|(&(arity, generator), m)| ActionDoc {
                arity,
                generator,
                mapping: m.iter().map(|(&f, &g)| (name(f), name(g))).collect(),
            })
            .collect();
        actions.sort_by_key(|a| (a.arity, a.generator));
        MulticatDoc {
            objects: self.objects.clone(),
            homs,
            identities: self
                .identities
                .iter()
                .map(|(&o, &e)| (self.objects[o].clone(), name(e)))
                .collect(),
            compose,
            actions,
        }
    }

    pub fn num_elements(&self) -> usize {
        self.elems.len()
    }

    pub fn element_by_name(&self, name: &str) -> Option<usize> {
        self.elems.iter().position(|e| e.name == name)
    }

    pub fn element_name(&self, i: usize) -> &str {
        &self.elems[i].name
    }

    pub fn arity(&self, f: usize) -> usize {
        self.elems[f].inputs.len()
    }

    pub fn composite(&self, f: usize, gs: &[usize]) -> Option<usize> {
        self.compose.get(&(f, gs.to_vec())).copied()
    }

    fn signature_listed(&self, inputs: &[usize], output: usize) -> bool {
        self.homs.contains_key(&(inputs.to_vec(), output))
    }

    /// `f·g` for a generator (or its inverse) of `Λ(arity f)`.
    fn act_gen(&self, f: usize, gen: usize, inverse: bool) -> Result<usize, String> {
        let n = self.arity(f);
        let m = self
            .actions
            .get(&(n, gen))
            .ok_or_else(|| format!("no action listed for generator {gen} at arity {n}"))?;
        if inverse {
            m.iter()
                .find(|(_, &t)| t == f)
                .map(|(&s, _)| s)
                .ok_or_else(|| format!("`{}` has no preimage under generator {gen}", self.elems[f].name))
        } else {
            m.get(&f)
                .copied()
                .ok_or_else(|| format!("generator {gen} is not defined on `{}`", self.elems[f].name))
        }
    }

    /// `f·w` for a generator word, letter by letter from the left.
    pub fn act_word(&self, f: usize, word: &[(usize, bool)]) -> Result<usize, String> {
        word.iter().try_fold(f, |acc, &(g, inv)| self.act_gen(acc, g, inv))
    }

    pub fn act<A: ActionOperad>(&self, inst: &A, f: usize, alpha: &A::Elem) -> Result<usize, String> {
        self.act_word(f, &inst.factor(alpha))
    }
}

/// `position i` of the result holds `xs[π(i)]`.
fn pull_indices<T: Clone>(p: &Perm, xs: &[T]) -> Vec<T> {
    (1..=xs.len()).map(|i| xs[p.apply(i) - 1].clone()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub check: String,
    pub witness: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub checked: BTreeMap<String, u64>,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    fn tick(&mut self, check: &str) {
        *self.checked.entry(check.to_string()).or_default() += 1;
    }

    fn fail(&mut self, check: &str, witness: String) {
        self.violations.push(Violation {
            check: check.to_string(),
            witness,
        });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.checked {
            writeln!(f, "{k:<16} {v:>7} checked")?;
        }
        for v in &self.violations {
            writeln!(f, "violation {}: {}", v.check, v.witness)?;
        }
        write!(f, "{}", if self.is_valid() { "VALID" } else { "INVALID" })
    }
}

/// Checks structure, well-definedness of the actions, units, associativity
/// and both equivariance equations on every listed instance.
pub fn validate_multicat<A: ActionOperad>(m: &FinMulticat, inst: &A) -> ValidationReport {
    let mut r = ValidationReport::default();
    let name = |i: usize| m.elems[i].name.as_str();
    let render_tuple = |gs: &[usize]| gs.iter().map(|&g| name(g)).collect::<Vec<_>>().join(",");

    // identities
    for o in 0..m.objects.len() {
        r.tick("structure");
        match m.identities.get(&o) {
            None => r.fail("structure", format!("object `{}` has no identity", m.objects[o])),
            Some(&e) if m.elems[e].inputs != [o] || m.elems[e].output != o => r.fail(
                "structure",
                format!("identity `{}` of `{}` is not in M({0};{0})", name(e), m.objects[o]),
            ),
            _ => {}
        }
    }
    // composition entries are well typed
    let mut typed = HashMap::new();
    for ((f, gs), &res) in &m.compose {
        r.tick("structure");
        let ef = &m.elems[*f];
        let ok_inner = gs.len() == ef.inputs.len()
            && gs.iter().zip(&ef.inputs).all(|(&g, &x)| m.elems[g].output == x);
        let inputs: Vec<usize> = gs.iter().flat_map(|&g| m.elems[g].inputs.clone()).collect();
        if !ok_inner {
            r.fail("structure", format!("{}({}) is not composable", name(*f), render_tuple(gs)));
        } else if m.elems[res].inputs != inputs || m.elems[res].output != ef.output {
            r.fail(
                "structure",
                format!("{}({}) = {} has the wrong signature", name(*f), render_tuple(gs), name(res)),
            );
        } else {
            typed.insert((*f, gs.clone()), res);
        }
    }
    // action tables: defined on all n-ary elements, typed, bijective
    let mut arities: Vec<usize> = m.elems.iter().map(|e| e.inputs.len()).collect();
    arities.sort();
    arities.dedup();
    let mut actions_ok = true;
    for &n in &arities {
        let gens = inst.generators(n);
        for (gi, g) in gens.iter().enumerate() {
            let p = inst.pi(g);
            let Some(table) = m.actions.get(&(n, gi)) else {
                r.fail("structure", format!("no action listed for generator {gi} at arity {n}"));
                actions_ok = false;
                continue;
            };
            let mut hit = HashMap::new();
            for f in (0..m.elems.len()).filter(|&f| m.arity(f) == n) {
                r.tick("structure");
                let Some(&t) = table.get(&f) else {
                    r.fail("structure", format!("generator {gi} is not defined on `{}`", name(f)));
                    actions_ok = false;
                    continue;
                };
                let want = pull_indices(&p, &m.elems[f].inputs);
                if m.elems[t].inputs != want || m.elems[t].output != m.elems[f].output {
                    r.fail(
                        "structure",
                        format!("`{}`·{} = `{}` has the wrong signature", name(f), inst.render(g), name(t)),
                    );
                    actions_ok = false;
                }
                if let Some(prev) = hit.insert(t, f) {
                    r.fail(
                        "structure",
                        format!(
                            "generator {} sends `{}` and `{}` to `{}`",
                            inst.render(g),
                            name(prev),
                            name(f),
                            name(t)
                        ),
                    );
                    actions_ok = false;
                }
            }
        }
    }
    // every composable tuple whose result signature is listed must be composed
    for f in 0..m.elems.len() {
        let cands: Vec<&[usize]> = m.elems[f]
            .inputs
            .iter()
            .map(|x| m.by_output.get(x).map_or(&[][..], |v| v.as_slice()))
            .collect();
        for gs in crate::borel::product(&cands) {
            let inputs: Vec<usize> = gs.iter().flat_map(|&g| m.elems[g].inputs.clone()).collect();
            if m.signature_listed(&inputs, m.elems[f].output) {
                r.tick("structure");
                if !m.compose.contains_key(&(f, gs.clone())) {
                    r.fail("structure", format!("{}({}) is missing", name(f), render_tuple(&gs)));
                }
            }
        }
    }
    if !actions_ok {
        return r;
    }
    // actions respect the defining relations
    for &n in &arities {
        for (lhs, rhs) in inst.relations(n) {
            for f in (0..m.elems.len()).filter(|&f| m.arity(f) == n) {
                r.tick("relations");
                let (a, b) = (m.act_word(f, &lhs), m.act_word(f, &rhs));
                if a != b {
                    r.fail(
                        "relations",
                        format!("`{}` acted on by {} and {} differ", name(f), word_str(&lhs), word_str(&rhs)),
                    );
                }
            }
        }
    }
    let comp = |f: usize, gs: &[usize]| typed.get(&(f, gs.to_vec())).copied();
    // units
    for f in 0..m.elems.len() {
        let e = &m.elems[f];
        if let Some(&idy) = m.identities.get(&e.output) {
            r.tick("unit");
            if let Some(v) = comp(idy, &[f]) {
                if v != f {
                    r.fail("unit", format!("{}({}) = {}", name(idy), name(f), name(v)));
                }
            }
        }
        let ids: Option<Vec<usize>> = e.inputs.iter().map(|x| m.identities.get(x).copied()).collect();
        if let Some(ids) = ids {
            r.tick("unit");
            if let Some(v) = comp(f, &ids) {
                if v != f {
                    r.fail("unit", format!("{}({}) = {}", name(f), render_tuple(&ids), name(v)));
                }
            }
        }
    }
    // associativity over listed composites
    let mut by_outer: HashMap<usize, Vec<(&Vec<usize>, usize)>> = HashMap::new();
    for ((f, gs), &res) in &typed {
        by_outer.entry(*f).or_default().push((gs, res));
    }
    for v in by_outer.values_mut() {
        v.sort();
    }
    let mut entries: Vec<(&(usize, Vec<usize>), &usize)> = typed.iter().collect();
    entries.sort();
    for ((f, gs), &fg) in &entries {
        for (hs, rhs) in by_outer.get(&fg).into_iter().flatten() {
            let mut at = 0;
            let mut inner = Vec::with_capacity(gs.len());
            for &g in gs.iter() {
                let k = m.arity(g);
                inner.push(comp(g, &hs[at..at + k]));
                at += k;
            }
            let Some(inner) = inner.into_iter().collect::<Option<Vec<usize>>>() else {
                continue;
            };
            let Some(lhs) = comp(*f, &inner) else { continue };
            r.tick("associativity");
            if lhs != *rhs {
                r.fail(
                    "associativity",
                    format!(
                        "{}({}) applied to ({}) gives {}, composing inside first gives {}",
                        name(*f),
                        render_tuple(gs),
                        render_tuple(hs),
                        name(*rhs),
                        name(lhs)
                    ),
                );
            }
        }
    }
    // f(g₁,…,gᵢ·α,…,gₙ) = f(g⃗)·β(e,…,α,…,e)
    for ((f, gs), &fg) in &entries {
        for (i, &g) in gs.iter().enumerate() {
            let k = m.arity(g);
            for (ai, a) in inst.generators(k).iter().enumerate() {
                let Ok(ga) = m.act_gen(g, ai, false) else { continue };
                let mut gs2 = gs.clone();
                gs2[i] = ga;
                let Some(lhs) = comp(*f, &gs2) else { continue };
                let legs: Vec<A::Elem> = gs
                    .iter()
                    .enumerate()
                    .map(|(j, &h)| if j == i { a.clone() } else { inst.identity(m.arity(h)) })
                    .collect();
                r.tick("equivariance");
                match m.act(inst, fg, &inst.beta(&legs)) {
                    Ok(rhs) if rhs == lhs => {}
                    Ok(rhs) => r.fail(
                        "equivariance",
                        format!(
                            "{}({}) with {} on leg {}: {} but {}·β = {}",
                            name(*f),
                            render_tuple(gs),
                            inst.render(a),
                            i + 1,
                            name(lhs),
                            name(fg),
                            name(rhs)
                        ),
                    ),
                    Err(e) => r.fail("equivariance", e),
                }
            }
        }
    }
    // (f·α)(g⃗) = f(g_{π(α)⁻¹(1)},…)·δ(α; arities of g⃗)
    for ((fa, gs), &lhs) in &entries {
        let n = gs.len();
        for (ai, a) in inst.generators(n).iter().enumerate() {
            let Ok(f) = m.act_gen(*fa, ai, true) else { continue };
            let p = inst.pi(a);
            let pinv = p.inverse();
            let gs2 = pull_indices(&pinv, gs);
            let Some(inner) = comp(f, &gs2) else { continue };
            let sizes: Vec<usize> = gs.iter().map(|&g| m.arity(g)).collect();
            let Ok(d) = inst.delta(a, &sizes) else { continue };
            r.tick("equivariance");
            match m.act(inst, inner, &d) {
                Ok(rhs) if rhs == lhs => {}
                Ok(rhs) => r.fail(
                    "equivariance",
                    format!(
                        "({}·{})({}) = {} but {}({})·δ = {}",
                        name(f),
                        inst.render(a),
                        render_tuple(gs),
                        name(lhs),
                        name(f),
                        render_tuple(&gs2),
                        name(rhs)
                    ),
                ),
                Err(e) => r.fail("equivariance", e),
            }
        }
    }
    r
}

fn word_str(w: &GenWord) -> String {
    if w.is_empty() {
        return "e".into();
    }
    w.iter()
        .map(|&(g, inv)| if inv { format!("g{g}^-1") } else { format!("g{g}") })
        .collect::<Vec<_>>()
        .join(" ")
}

/// A multifunctor: maps on objects and on elements.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultifunctorDoc {
    pub objects: BTreeMap<String, String>,
    pub elements: BTreeMap<String, String>,
}

/// Signatures, `F(f·α) = F(f)·α` for every generator, identities, and
/// composites listed on both sides.
pub fn validate_multifunctor<A: ActionOperad>(
    doc: &MultifunctorDoc,
    m: &FinMulticat,
    n: &FinMulticat,
    inst: &A,
) -> Result<ValidationReport, MulticatError> {
    let mut obj = Vec::with_capacity(m.objects.len());
    for o in &m.objects {
        let t = doc.objects.get(o).ok_or_else(|| MulticatError::UnknownObject(o.clone()))?;
        obj.push(
            n.objects
                .iter()
                .position(|x| x == t)
                .ok_or_else(|| MulticatError::UnknownObject(t.clone()))?,
        );
    }
    let mut el = Vec::with_capacity(m.elems.len());
    for e in &m.elems {
        let t = doc
            .elements
            .get(&e.name)
            .ok_or_else(|| MulticatError::UnknownElement(e.name.clone()))?;
        el.push(n.element_by_name(t).ok_or_else(|| MulticatError::UnknownElement(t.clone()))?);
    }
    let mut r = ValidationReport::default();
    for (f, e) in m.elems.iter().enumerate() {
        r.tick("signature");
        let t = &n.elems[el[f]];
        let want: Vec<usize> = e.inputs.iter().map(|&x| obj[x]).collect();
        if t.inputs != want || t.output != obj[e.output] {
            r.fail("signature", format!("F({}) = {} has the wrong signature", e.name, t.name));
        }
    }
    if !r.is_valid() {
        return Ok(r);
    }
    for f in 0..m.elems.len() {
        let k = m.arity(f);
        for (gi, g) in inst.generators(k).iter().enumerate() {
            let (Ok(fa), Ok(ffa)) = (m.act_gen(f, gi, false), n.act_gen(el[f], gi, false)) else {
                continue;
            };
            r.tick("equivariance");
            if el[fa] != ffa {
                r.fail(
                    "equivariance",
                    format!(
                        "F({}·{}) = {} but F({})·{} = {}",
                        m.elems[f].name,
                        inst.render(g),
                        n.elems[el[fa]].name,
                        m.elems[f].name,
                        inst.render(g),
                        n.elems[ffa].name
                    ),
                );
            }
        }
    }
    for (o, &e) in &m.identities {
        r.tick("identity");
        if n.identities.get(&obj[*o]) != Some(&el[e]) {
            r.fail("identity", format!("F({}) is not the identity of F({})", m.elems[e].name, m.objects[*o]));
        }
    }
    let mut entries: Vec<_> = m.compose.iter().collect();
    entries.sort();
    for ((f, gs), &res) in entries {
        let fgs: Vec<usize> = gs.iter().map(|&g| el[g]).collect();
        if let Some(img) = n.composite(el[*f], &fgs) {
            r.tick("composition");
            if img != el[res] {
                r.fail(
                    "composition",
                    format!(
                        "F({}) = {} but the image composite is {}",
                        m.elems[res].name, n.elems[el[res]].name, n.elems[img].name
                    ),
                );
            }
        }
    }
    Ok(r)
}

/// The identity multifunctor of `m`.
pub fn identity_multifunctor(m: &FinMulticat) -> MultifunctorDoc {
    MultifunctorDoc {
        objects: m.objects.iter().map(|o| (o.clone(), o.clone())).collect(),
        elements: m.elems.iter().map(|e| (e.name.clone(), e.name.clone())).collect(),
    }
}

/// The one-object Λ-multicategory of a finite action operad, truncated at
/// `max_arity`: `M(*ⁿ; *) = Λ(n)`, composition `μ`, action by right
/// multiplication.
pub fn operad_multicat<A: ActionOperad>(inst: &A, max_arity: usize) -> Option<MulticatDoc> {
    let mut levels = Vec::new();
    for n in 0..=max_arity {
        levels.push(inst.elements(n)?);
    }
    let mut plain: Vec<String> = levels.iter().flatten().map(|g| inst.render(g)).collect();
    plain.sort();
    let unique = plain.windows(2).all(|w| w[0] != w[1]);
    let name = |g: &A::Elem| {
        if unique {
            inst.render(g)
        } else {
            format!("{}:{}", inst.arity(g), inst.render(g))
        }
    };
    let star = "*".to_string();
    let mut doc = MulticatDoc {
        objects: vec![star.clone()],
        ..Default::default()
    };
    for (n, elems) in levels.iter().enumerate() {
        doc.homs.push(HomDoc {
            inputs: vec![star.clone(); n],
            output: star.clone(),
            elements: elems.iter().map(name).collect(),
        });
        for (gi, a) in inst.generators(n).iter().enumerate() {
            let mapping = elems
                .iter()
                .map(|f| (name(f), name(&inst.mul(f, a).expect("same arity"))))
                .collect();
            doc.actions.push(ActionDoc {
                arity: n,
                generator: gi,
                mapping,
            });
        }
    }
    doc.identities.insert(star.clone(), name(&inst.identity(1)));
    for (n, fs) in levels.iter().enumerate() {
        for sizes in crate::operad::axioms::vectors(n, max_arity, max_arity) {
            let lists: Vec<&[A::Elem]> = sizes.iter().map(|&k| levels[k].as_slice()).collect();
            for gs in crate::borel::product(&lists) {
                for f in fs {
                    let r = inst.mu(f, &gs).expect("arities match");
                    doc.compose.push(ComposeDoc {
                        outer: name(f),
                        inner: gs.iter().map(name).collect(),
                        result: name(&r),
                    });
                }
            }
        }
    }
    Some(doc)
}

/// One object and one element `t<n>` in each arity up to `max_arity`.
pub fn terminal_multicat<A: ActionOperad>(inst: &A, max_arity: usize) -> MulticatDoc {
    let star = "*".to_string();
    let t = |n: usize| format!("t{n}");
    let mut doc = MulticatDoc {
        objects: vec![star.clone()],
        ..Default::default()
    };
    for n in 0..=max_arity {
        doc.homs.push(HomDoc {
            inputs: vec![star.clone(); n],
            output: star.clone(),
            elements: vec![t(n)],
        });
        for gi in 0..inst.generators(n).len() {
            doc.actions.push(ActionDoc {
                arity: n,
                generator: gi,
                mapping: [(t(n), t(n))].into(),
            });
        }
        for sizes in crate::operad::axioms::vectors(n, max_arity, max_arity) {
            doc.compose.push(ComposeDoc {
                outer: t(n),
                inner: sizes.iter().map(|&k| t(k)).collect(),
                result: t(sizes.iter().sum()),
            });
        }
    }
    doc.identities.insert(star, t(1));
    doc
}

/// Sends every element of the one-object `m` to `t<arity>`.
pub fn collapse_to_terminal(m: &FinMulticat, target_object: &str) -> MultifunctorDoc {
    MultifunctorDoc {
        objects: m.objects.iter().map(|o| (o.clone(), target_object.to_string())).collect(),
        elements: m
            .elems
            .iter()
            .map(|e| (e.name.clone(), format!("t{}", e.inputs.len())))
            .collect(),
    }
}
