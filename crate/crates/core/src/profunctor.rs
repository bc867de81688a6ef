//! Finite profunctors `F: Y^op × X → Sets`, their coend composition, and the
//! lift of a profunctor to the Borel constructions.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::borel::{materialize, product, BorelCat, BorelMorphism, BorelObject};
use crate::fincat::{FinCat, FinCatDoc, FinCatError, FinFunctor, MorId, ObjId};
use crate::operad::{ActionOperad, OperadError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProfError {
    #[error(transparent)]
    Cat(#[from] FinCatError),
    #[error(transparent)]
    Operad(#[from] OperadError),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("duplicate element `{0}`")]
    Duplicate(String),
    #[error("{0}")]
    Action(String),
    #[error("boundary mismatch: {0}")]
    Boundary(String),
    #[error("malformed document: {0}")]
    Format(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfElem {
    pub name: String,
    /// Object of the contravariant side.
    pub y: ObjId,
    /// Object of the covariant side.
    pub x: ObjId,
}

/// A profunctor `X ↛ Y`, i.e. a functor `Y^op × X → Sets`. Morphisms
/// `h: y' → y` of `Y` pull `F(y,x)` back to `F(y',x)`; morphisms `k: x → x'`
/// of `X` push `F(y,x)` forward to `F(y,x')`.
#[derive(Debug, Clone)]
pub struct FinProf {
    pub x: Arc<FinCat>,
    pub y: Arc<FinCat>,
    elems: Vec<ProfElem>,
    pull: HashMap<(MorId, usize), usize>,
    push: HashMap<(MorId, usize), usize>,
    at: HashMap<(ObjId, ObjId), Vec<usize>>,
}

/// The file format. `pull` lists `[h, s, h·s]` for morphisms of the target
/// and `push` lists `[k, s, k·s]` for morphisms of the source; identity
/// entries may be omitted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfDoc {
    pub source: FinCatDoc,
    pub target: FinCatDoc,
    pub elements: Vec<ElemDoc>,
    #[serde(default)]
    pub pull: Vec<[String; 3]>,
    #[serde(default)]
    pub push: Vec<[String; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElemDoc {
    pub id: String,
    pub y: String,
    pub x: String,
}

impl FinProf {
    /// Assembles a profunctor from raw tables and validates it.
    pub fn new(
        x: Arc<FinCat>,
        y: Arc<FinCat>,
        elems: Vec<ProfElem>,
        pull: HashMap<(MorId, usize), usize>,
        push: HashMap<(MorId, usize), usize>,
    ) -> Result<Self, ProfError> {
        let p = Self::assemble(x, y, elems, pull, push);
        p.validate()?;
        Ok(p)
    }

    fn assemble(
        x: Arc<FinCat>,
        y: Arc<FinCat>,
        elems: Vec<ProfElem>,
        mut pull: HashMap<(MorId, usize), usize>,
        mut push: HashMap<(MorId, usize), usize>,
    ) -> Self {
        let mut at: HashMap<(ObjId, ObjId), Vec<usize>> = HashMap::new();
        for (i, e) in elems.iter().enumerate() {
            at.entry((e.y, e.x)).or_default().push(i);
            pull.entry((y.identity(e.y), i)).or_insert(i);
            push.entry((x.identity(e.x), i)).or_insert(i);
        }
        FinProf {
            x,
            y,
            elems,
            pull,
            push,
            at,
        }
    }

    pub fn from_doc(doc: &ProfDoc) -> Result<Self, ProfError> {
        let x = Arc::new(FinCat::from_doc(&doc.source)?);
        let y = Arc::new(FinCat::from_doc(&doc.target)?);
        let mut index = HashMap::new();
        let mut elems = Vec::new();
        for e in &doc.elements {
            if index.insert(e.id.clone(), elems.len()).is_some() {
                return Err(ProfError::Duplicate(e.id.clone()));
            }
            elems.push(ProfElem {
                name: e.id.clone(),
                y: y.object_by_name(&e.y)
                    .ok_or_else(|| FinCatError::UnknownObject(e.y.clone()))?,
                x: x.object_by_name(&e.x)
                    .ok_or_else(|| FinCatError::UnknownObject(e.x.clone()))?,
            });
        }
        let el = |n: &str| index.get(n).copied().ok_or_else(|| ProfError::UnknownElement(n.to_string()));
        let mut pull = HashMap::new();
        for [h, s, t] in &doc.pull {
            let h = y.morphism_by_name(h).ok_or_else(|| FinCatError::UnknownMorphism(h.clone()))?;
            pull.insert((h, el(s)?), el(t)?);
        }
        let mut push = HashMap::new();
        for [k, s, t] in &doc.push {
            let k = x.morphism_by_name(k).ok_or_else(|| FinCatError::UnknownMorphism(k.clone()))?;
            push.insert((k, el(s)?), el(t)?);
        }
        Self::new(x, y, elems, pull, push)
    }

    pub fn from_json(text: &str) -> Result<Self, ProfError> {
        let doc: ProfDoc = serde_json::from_str(text).map_err(|e| ProfError::Format(e.to_string()))?;
        Self::from_doc(&doc)
    }

    /// `G⁺(y, x) = Y(y, Gx)` for a functor `G: X → Y`; the element for
    /// `t: y → Gx` is named `t/x`.
    pub fn from_functor(g: &FinFunctor) -> Self {
        let (x, y) = (g.src.clone(), g.tgt.clone());
        let mut elems = Vec::new();
        let mut index = HashMap::new();
        for xo in x.objects() {
            for yo in y.objects() {
                for &t in y.hom(yo, g.obj[xo]) {
                    index.insert((t, xo), elems.len());
                    elems.push(ProfElem {
                        name: format!("{}/{}", y.morphism_name(t), x.object_name(xo)),
                        y: yo,
                        x: xo,
                    });
                }
            }
        }
        let mut pull = HashMap::new();
        let mut push = HashMap::new();
        for (&(t, xo), &i) in &index {
            for h in 0..y.num_morphisms() {
                if y.tgt(h) == y.src(t) {
                    let th = y.compose(t, h).expect("composable");
                    pull.insert((h, i), index[&(th, xo)]);
                }
            }
            for &k in x.out_of(xo) {
                let gkt = y.compose(g.mor[k], t).expect("composable");
                push.insert((k, i), index[&(gkt, x.tgt(k))]);
            }
        }
        Self::assemble(x, y, elems, pull, push)
    }

    /// The hom profunctor `Y(−,−)`.
    pub fn identity(cat: Arc<FinCat>) -> Self {
        Self::from_functor(&FinFunctor::identity(cat))
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elements(&self) -> &[ProfElem] {
        &self.elems
    }

    pub fn element_by_name(&self, name: &str) -> Option<usize> {
        self.elems.iter().position(|e| e.name == name)
    }

    /// `F(y, x)`.
    pub fn value(&self, y: ObjId, x: ObjId) -> &[usize] {
        self.at.get(&(y, x)).map_or(&[], |v| v.as_slice())
    }

    /// `h·s` for `h: y' → y` and `s ∈ F(y,x)`.
    pub fn pull(&self, h: MorId, s: usize) -> Option<usize> {
        self.pull.get(&(h, s)).copied()
    }

    /// `k·s` for `k: x → x'` and `s ∈ F(y,x)`.
    pub fn push(&self, k: MorId, s: usize) -> Option<usize> {
        self.push.get(&(k, s)).copied()
    }

    /// Totality, typing, functoriality of both actions, and that they commute.
    pub fn validate(&self) -> Result<(), ProfError> {
        let (x, y) = (&self.x, &self.y);
        let err = |m: String| Err(ProfError::Action(m));
        for (i, e) in self.elems.iter().enumerate() {
            for h in (0..y.num_morphisms()).filter(|&h| y.tgt(h) == e.y) {
                let Some(t) = self.pull(h, i) else {
                    return err(format!("`{}` · `{}` is missing", y.morphism_name(h), e.name));
                };
                if self.elems[t].y != y.src(h) || self.elems[t].x != e.x {
                    return err(format!("`{}` · `{}` lands in the wrong set", y.morphism_name(h), e.name));
                }
            }
            for &k in x.out_of(e.x) {
                let Some(t) = self.push(k, i) else {
                    return err(format!("`{}` · `{}` is missing", x.morphism_name(k), e.name));
                };
                if self.elems[t].y != e.y || self.elems[t].x != x.tgt(k) {
                    return err(format!("`{}` · `{}` lands in the wrong set", x.morphism_name(k), e.name));
                }
            }
        }
        for (i, e) in self.elems.iter().enumerate() {
            if self.pull(y.identity(e.y), i) != Some(i) || self.push(x.identity(e.x), i) != Some(i) {
                return err(format!("identities move `{}`", e.name));
            }
            for h in (0..y.num_morphisms()).filter(|&h| y.tgt(h) == e.y) {
                let hs = self.pull[&(h, i)];
                for h2 in (0..y.num_morphisms()).filter(|&h2| y.tgt(h2) == y.src(h)) {
                    let hh = y.compose(h, h2).expect("composable");
                    if self.pull[&(hh, i)] != self.pull[&(h2, hs)] {
                        return err(format!(
                            "pulling `{}` along `{}` then `{}` disagrees with the composite",
                            e.name,
                            y.morphism_name(h),
                            y.morphism_name(h2)
                        ));
                    }
                }
                for &k in x.out_of(e.x) {
                    if self.push[&(k, hs)] != self.pull[&(h, self.push[&(k, i)])] {
                        return err(format!(
                            "`{}` and `{}` do not commute on `{}`",
                            y.morphism_name(h),
                            x.morphism_name(k),
                            e.name
                        ));
                    }
                }
            }
            for &k in x.out_of(e.x) {
                let ks = self.push[&(k, i)];
                for &k2 in x.out_of(x.tgt(k)) {
                    let kk = x.compose(k2, k).expect("composable");
                    if self.push[&(kk, i)] != self.push[&(k2, ks)] {
                        return err(format!(
                            "pushing `{}` along `{}` then `{}` disagrees with the composite",
                            e.name,
                            x.morphism_name(k),
                            x.morphism_name(k2)
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Element counts per `(y, x)`, keyed by names.
    pub fn cardinalities(&self) -> BTreeMap<(String, String), usize> {
        let mut out = BTreeMap::new();
        for yo in self.y.objects() {
            for xo in self.x.objects() {
                out.insert(
                    (self.y.object_name(yo).to_string(), self.x.object_name(xo).to_string()),
                    self.value(yo, xo).len(),
                );
            }
        }
        out
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut a: usize) -> usize {
        while self.parent[a] != a {
            self.parent[a] = self.parent[self.parent[a]];
            a = self.parent[a];
        }
        a
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        // the smaller index stays the root, so representatives are stable
        if ra < rb {
            self.parent[rb] = ra;
        } else {
            self.parent[ra] = rb;
        }
    }
}

/// `G∘F` together with the class of every pair `(t, s)`.
#[derive(Debug, Clone)]
pub struct Composite {
    pub prof: FinProf,
    pub class_of: HashMap<(usize, usize), usize>,
}

/// `G∘F(z,x) = ∫^y G(z,y) × F(y,x)`: pairs `(t, s)` over a common `y`, with
/// `(h·t, s) ∼ (t, h·s)` for every `h: y → y'` of the middle category.
pub fn prof_compose(g: &FinProf, f: &FinProf) -> Result<Composite, ProfError> {
    if g.x != f.y {
        return Err(ProfError::Boundary(format!(
            "middle categories differ ({} vs {})",
            g.x, f.y
        )));
    }
    let mid = &f.y;
    let mut pairs = Vec::new();
    let mut index = HashMap::new();
    for (t, te) in g.elems.iter().enumerate() {
        for xo in f.x.objects() {
            for &s in f.value(te.x, xo) {
                index.insert((t, s), pairs.len());
                pairs.push((t, s));
            }
        }
    }
    let mut uf = UnionFind::new(pairs.len());
    for (t, te) in g.elems.iter().enumerate() {
        for &h in mid.out_of(te.x) {
            let ht = g.push[&(h, t)];
            for xo in f.x.objects() {
                for &s in f.value(mid.tgt(h), xo) {
                    let hs = f.pull[&(h, s)];
                    uf.union(index[&(ht, s)], index[&(t, hs)]);
                }
            }
        }
    }
    let mut class_index = HashMap::new();
    let mut elems = Vec::new();
    let mut class_of = HashMap::new();
    for (i, &(t, s)) in pairs.iter().enumerate() {
        let root = uf.find(i);
        let c = *class_index.entry(root).or_insert_with(|| {
            let (rt, rs) = pairs[root];
            elems.push(ProfElem {
                name: format!("{}*{}", g.elems[rt].name, f.elems[rs].name),
                y: g.elems[rt].y,
                x: f.elems[rs].x,
            });
            elems.len() - 1
        });
        class_of.insert((t, s), c);
    }
    let mut pull = HashMap::new();
    let mut push = HashMap::new();
    for (&(t, s), &c) in &class_of {
        let zo = g.elems[t].y;
        for h in (0..g.y.num_morphisms()).filter(|&h| g.y.tgt(h) == zo) {
            pull.insert((h, c), class_of[&(g.pull[&(h, t)], s)]);
        }
        for &k in f.x.out_of(f.elems[s].x) {
            push.insert((k, c), class_of[&(t, f.push[&(k, s)])]);
        }
    }
    let prof = FinProf::new(f.x.clone(), g.y.clone(), elems, pull, push)?;
    Ok(Composite { prof, class_of })
}

/// Checks that `map` (indexed by elements of `p`) is a bijection onto the
/// elements of `q` that preserves the sets and both actions.
pub fn check_iso(p: &FinProf, q: &FinProf, map: &[usize]) -> Result<(), String> {
    if p.x != q.x || p.y != q.y {
        return Err("boundaries differ".into());
    }
    if map.len() != p.len() || p.len() != q.len() {
        return Err(format!("{} elements against {}", p.len(), q.len()));
    }
    let mut hit = vec![false; q.len()];
    for (i, &j) in map.iter().enumerate() {
        if j >= q.len() || std::mem::replace(&mut hit[j], true) {
            return Err(format!("`{}` is not sent injectively", p.elems[i].name));
        }
        let (a, b) = (&p.elems[i], &q.elems[j]);
        if (a.y, a.x) != (b.y, b.x) {
            return Err(format!("`{}` and `{}` lie over different objects", a.name, b.name));
        }
    }
    for (&(h, i), &t) in &p.pull {
        if q.pull(h, map[i]) != Some(map[t]) {
            return Err(format!(
                "pulling `{}` along `{}` is not preserved",
                p.elems[i].name,
                p.y.morphism_name(h)
            ));
        }
    }
    for (&(k, i), &t) in &p.push {
        if q.push(k, map[i]) != Some(map[t]) {
            return Err(format!(
                "pushing `{}` along `{}` is not preserved",
                p.elems[i].name,
                p.x.morphism_name(k)
            ));
        }
    }
    Ok(())
}

/// The isomorphism `Y(−,−)∘F ≅ F`, `[t, s] ↦ t·s`, as a map on classes.
pub fn left_unit_witness(f: &FinProf) -> Result<(Composite, Vec<usize>), ProfError> {
    let id = FinProf::identity(f.y.clone());
    let c = prof_compose(&id, f)?;
    let mut map = vec![usize::MAX; c.prof.len()];
    for (&(t, s), &cls) in &c.class_of {
        // t is the identity-profunctor element for some morphism z → y
        let m = id_morphism(&id, t);
        map[cls] = f.pull[&(m, s)];
    }
    Ok((c, map))
}

/// The isomorphism `F∘X(−,−) ≅ F`, `[s, t] ↦ s·t`, as a map on classes.
pub fn right_unit_witness(f: &FinProf) -> Result<(Composite, Vec<usize>), ProfError> {
    let id = FinProf::identity(f.x.clone());
    let c = prof_compose(f, &id)?;
    let mut map = vec![usize::MAX; c.prof.len()];
    for (&(s, t), &cls) in &c.class_of {
        let m = id_morphism(&id, t);
        map[cls] = f.push[&(m, s)];
    }
    Ok((c, map))
}

fn id_morphism(id: &FinProf, t: usize) -> MorId {
    let name = &id.elems[t].name;
    let mor = &name[..name.rfind('/').expect("hom element names carry a slash")];
    id.y.morphism_by_name(mor).expect("hom element names a morphism")
}

/// `ẼΛF([e;y⃗],[e;x⃗]) = ⨿_{g∈Λ(n)} ∏ᵢ F(yᵢ, x_{π(g)(i)})`, empty across
/// arities, on the Borel constructions truncated at `max_arity`.
pub struct Lifted<E> {
    pub prof: FinProf,
    pub x: BorelCat<E>,
    pub y: BorelCat<E>,
    /// For each element: its sets, group part and components.
    pub data: Vec<(ObjId, ObjId, E, Vec<usize>)>,
}

pub fn lift_prof<A: ActionOperad>(f: &FinProf, inst: &A, max_arity: usize) -> Result<Lifted<A::Elem>, ProfError> {
    let bx = materialize(inst, &f.x, max_arity)?;
    let by = materialize(inst, &f.y, max_arity)?;
    let xcat = Arc::new(bx.cat.clone());
    let ycat = Arc::new(by.cat.clone());
    let mut elems = Vec::new();
    let mut data = Vec::new();
    let mut index = HashMap::new();
    for (yi, yb) in by.objects.iter().enumerate() {
        for (xi, xb) in bx.objects.iter().enumerate() {
            let n = yb.arity();
            if xb.arity() != n {
                continue;
            }
            for g in inst.elements(n).expect("materialized arities are finite") {
                let p = inst.pi(&g);
                let factors: Vec<&[usize]> = (1..=n)
                    .map(|i| f.value(yb.objs[i - 1], xb.objs[p.apply(i) - 1]))
                    .collect();
                for ss in product(&factors) {
                    let names: Vec<&str> = ss.iter().map(|&s| f.elems[s].name.as_str()).collect();
                    index.insert((yi, xi, g.clone(), ss.clone()), elems.len());
                    elems.push(ProfElem {
                        name: format!("{} -> {} : {} | {}", by.cat.object_name(yi), bx.cat.object_name(xi), inst.render(&g), names.join(",")),
                        y: yi,
                        x: xi,
                    });
                    data.push((yi, xi, g.clone(), ss));
                }
            }
        }
    }
    let lookup = |key: &(ObjId, ObjId, A::Elem, Vec<usize>)| {
        index
            .get(key)
            .copied()
            .ok_or_else(|| ProfError::Action("an action leaves the listed elements; elements are not canonical".into()))
    };
    let mut pull = HashMap::new();
    let mut push = HashMap::new();
    for (i, (yi, xi, g, ss)) in data.iter().enumerate() {
        let pg = inst.pi(g);
        // (g', k⃗): [e;y'] → [e;y] sends (g, s⃗) to (g g', k_i · s_{π(g')(i)})
        for (m, hm) in by.morphisms.iter().enumerate() {
            if by.object_id(&hm.tgt) != Some(*yi) {
                continue;
            }
            let pgp = inst.pi(&hm.g);
            let new_ss: Vec<usize> = (1..=ss.len())
                .map(|j| f.pull[&(hm.comps[j - 1], ss[pgp.apply(j) - 1])])
                .collect();
            let gg = inst.mul(g, &hm.g)?;
            let src = by.object_id(&hm.src).expect("listed object");
            pull.insert((m, i), lookup(&(src, *xi, gg, new_ss))?);
        }
        // (g'', a⃗): [e;x] → [e;x'] sends (g, s⃗) to (g'' g, a_{π(g)(i)} · s_i)
        for (m, km) in bx.morphisms.iter().enumerate() {
            if bx.object_id(&km.src) != Some(*xi) {
                continue;
            }
            let new_ss: Vec<usize> = (1..=ss.len())
                .map(|j| f.push[&(km.comps[pg.apply(j) - 1], ss[j - 1])])
                .collect();
            let gg = inst.mul(&km.g, g)?;
            let tgt = bx.object_id(&km.tgt).expect("listed object");
            push.insert((m, i), lookup(&(*yi, tgt, gg, new_ss))?);
        }
    }
    let prof = FinProf::new(xcat, ycat, elems, pull, push)?;
    Ok(Lifted {
        prof,
        x: bx,
        y: by,
        data,
    })
}

/// `EΛG` on the truncated Borel constructions: `[e;x⃗] ↦ [e;Gx⃗]`, `(g, a⃗) ↦ (g, Ga⃗)`.
pub fn borel_functor<E: Clone + Eq + std::hash::Hash>(
    g: &FinFunctor,
    bx: &BorelCat<E>,
    by: &BorelCat<E>,
) -> Result<FinFunctor, ProfError> {
    let image = |o: &BorelObject| BorelObject::new(o.objs.iter().map(|&x| g.obj[x]).collect());
    let obj: Vec<ObjId> = bx
        .objects
        .iter()
        .map(|o| by.object_id(&image(o)).expect("same truncation"))
        .collect();
    let mut mor = Vec::with_capacity(bx.morphisms.len());
    for m in &bx.morphisms {
        let gm = BorelMorphism {
            src: image(&m.src),
            tgt: image(&m.tgt),
            g: m.g.clone(),
            comps: m.comps.iter().map(|&c| g.mor[c]).collect(),
        };
        mor.push(
            by.morphism_id(&gm)
                .ok_or_else(|| ProfError::Action("image morphism is not listed".into()))?,
        );
    }
    Ok(FinFunctor::new(
        Arc::new(bx.cat.clone()),
        Arc::new(by.cat.clone()),
        obj,
        mor,
    )?)
}

/// Builds `ẼΛ(G⁺)` and `(EΛG)⁺` and the bijection `(g, t⃗) ↦ (g, t⃗)` between
/// them: an element of the lift with components `tᵢ: yᵢ → G x_{π(g)(i)}` is
/// the Borel morphism `[e;y⃗] → [e;Gx⃗]` with the same data.
pub fn lift_of_representable<A: ActionOperad>(
    g: &FinFunctor,
    inst: &A,
    max_arity: usize,
) -> Result<(Lifted<A::Elem>, FinProf, Vec<usize>), ProfError> {
    let gplus = FinProf::from_functor(g);
    let lifted = lift_prof(&gplus, inst, max_arity)?;
    let eg = borel_functor(g, &lifted.x, &lifted.y)?;
    let rep = FinProf::from_functor(&eg);
    let by_name: HashMap<&str, usize> = rep
        .elems
        .iter()
        .enumerate()
        .map(|(i, e)| (e.name.as_str(), i))
        .collect();
    let mut map = Vec::with_capacity(lifted.prof.len());
    for (yi, xi, grp, ss) in &lifted.data {
        let t = BorelMorphism {
            src: lifted.y.objects[*yi].clone(),
            tgt: lifted.y.objects[eg.obj[*xi]].clone(),
            g: grp.clone(),
            comps: ss.iter().map(|&s| id_morphism(&gplus, s)).collect(),
        };
        let m = lifted
            .y
            .morphism_id(&t)
            .ok_or_else(|| ProfError::Action("no matching Borel morphism".into()))?;
        let name = format!("{}/{}", rep.y.morphism_name(m), rep.x.object_name(*xi));
        map.push(
            *by_name
                .get(name.as_str())
                .ok_or_else(|| ProfError::UnknownElement(name.clone()))?,
        );
    }
    Ok((lifted, rep, map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::FunctorDoc;
    use crate::operad::{Symmetric, Trivial};

    fn arrow() -> Arc<FinCat> {
        Arc::new(
            FinCat::from_json(
                r#"{"objects":["a","b"],
                    "morphisms":[{"id":"1a","src":"a","tgt":"a"},{"id":"1b","src":"b","tgt":"b"},{"id":"f","src":"a","tgt":"b"}],
                    "identities":{"a":"1a","b":"1b"}}"#,
            )
            .unwrap(),
        )
    }

    #[test]
    fn identity_profunctor_is_valid() {
        let p = FinProf::identity(arrow());
        p.validate().unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.value(0, 1).len(), 1);
        assert!(p.value(1, 0).is_empty());
    }

    #[test]
    fn units_of_composition() {
        let f = FinProf::identity(arrow());
        let (c, map) = left_unit_witness(&f).unwrap();
        check_iso(&c.prof, &f, &map).unwrap();
        let (c, map) = right_unit_witness(&f).unwrap();
        check_iso(&c.prof, &f, &map).unwrap();
    }

    #[test]
    fn terminal_composite_is_one_point() {
        let t = Arc::new(FinCat::discrete(&["*"]));
        let one = FinProf::identity(t);
        let c = prof_compose(&one, &one).unwrap();
        assert_eq!(c.prof.len(), 1);
    }

    #[test]
    fn isomorphic_objects_are_identified() {
        let two = Arc::new(FinCat::translation(&["u".to_string(), "v".to_string()]));
        let t = Arc::new(FinCat::discrete(&["*"]));
        let doc = FunctorDoc {
            objects: [("*".to_string(), "u".to_string())].into(),
            morphisms: Default::default(),
        };
        let g = FinFunctor::from_doc(t.clone(), two.clone(), &doc).unwrap();
        let f = FinProf::from_functor(&g);
        // F: * ↛ {u,v} has one element over u and one over v
        assert_eq!(f.len(), 2);
        let id = FinProf::identity(two);
        let c = prof_compose(&id, &f).unwrap();
        // 4 pairs in two summands, identified to 2 classes
        assert_eq!(c.class_of.len(), 4);
        assert_eq!(c.prof.len(), 2);
    }

    #[test]
    fn rejects_non_functorial_action() {
        let mut doc = ProfDoc {
            source: FinCat::discrete(&["*"]).to_doc(),
            target: FinCat::cyclic("o", 2).to_doc(),
            elements: vec![
                ElemDoc { id: "p".into(), y: "o".into(), x: "*".into() },
                ElemDoc { id: "q".into(), y: "o".into(), x: "*".into() },
            ],
            pull: vec![["o^1".into(), "p".into(), "q".into()], ["o^1".into(), "q".into(), "p".into()]],
            push: vec![],
        };
        FinProf::from_doc(&doc).unwrap();
        doc.pull[1][2] = "q".into();
        assert!(matches!(FinProf::from_doc(&doc), Err(ProfError::Action(_))));
    }

    #[test]
    fn lift_of_terminal_identity() {
        let t = Arc::new(FinCat::discrete(&["*"]));
        let l = lift_prof(&FinProf::identity(t), &Symmetric, 2).unwrap();
        let two = l.y.object_id(&BorelObject::new(vec![0, 0])).unwrap();
        let one = l.x.object_id(&BorelObject::new(vec![0])).unwrap();
        assert_eq!(l.prof.value(two, two).len(), 2);
        assert!(l.prof.value(two, one).is_empty());
    }

    #[test]
    fn lift_of_representable_matches() {
        let t = Arc::new(FinCat::discrete(&["*"]));
        let doc = FunctorDoc {
            objects: [("*".to_string(), "b".to_string())].into(),
            morphisms: Default::default(),
        };
        let g = FinFunctor::from_doc(t, arrow(), &doc).unwrap();
        for inst_is_sym in [true, false] {
            let (l, rep, map) = if inst_is_sym {
                let (l, r, m) = lift_of_representable(&g, &Symmetric, 2).unwrap();
                (l.prof, r, m)
            } else {
                let (l, r, m) = lift_of_representable(&g, &Trivial, 2).unwrap();
                (l.prof, r, m)
            };
            check_iso(&l, &rep, &map).unwrap();
        }
    }
}
