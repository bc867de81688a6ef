//! The Borel construction `EΛ(n) ×_{Λ(n)} Xⁿ` over a finite category `X`.
//!
//! Objects are kept as normalized tuples `[e; x₁,…,xₙ]`. A morphism
//! `[e;x⃗] → [e;y⃗]` is a group element `g` with components `fᵢ: xᵢ → y_{π(g)(i)}`.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::fincat::{FinCat, FinCatDoc, MorId, MorphismDoc, ObjId};
use crate::operad::{ActionOperad, OperadError, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BorelObject {
    pub objs: Vec<ObjId>,
}

impl BorelObject {
    pub fn new(objs: Vec<ObjId>) -> Self {
        BorelObject { objs }
    }

    pub fn arity(&self) -> usize {
        self.objs.len()
    }

    pub fn render(&self, x: &FinCat) -> String {
        let names: Vec<&str> = self.objs.iter().map(|&o| x.object_name(o)).collect();
        format!("[e;{}]", names.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BorelMorphism<E> {
    pub src: BorelObject,
    pub tgt: BorelObject,
    pub g: E,
    pub comps: Vec<MorId>,
}

impl<E> BorelMorphism<E> {
    /// `g | f1,...,fn`.
    pub fn render<A: ActionOperad<Elem = E>>(&self, inst: &A, x: &FinCat) -> String {
        let comps: Vec<&str> = self.comps.iter().map(|&f| x.morphism_name(f)).collect();
        format!("{} | {}", inst.render(&self.g), comps.join(","))
    }
}

/// A hom-set, marked with whether the group part was enumerated in full.
#[derive(Debug, Clone)]
pub struct HomSet<E> {
    pub morphisms: Vec<BorelMorphism<E>>,
    pub exhaustive: bool,
}

/// `[e; x_{π(g)⁻¹(1)},…,x_{π(g)⁻¹(n)}]`, the representative of `(g; x⃗)`.
pub fn normalize<A: ActionOperad>(inst: &A, g: &A::Elem, xs: &[ObjId]) -> Result<BorelObject, OperadError> {
    check_sizes(inst.arity(g), xs)?;
    Ok(BorelObject::new(inst.pi(g).permute(xs)))
}

fn check_sizes<T>(n: usize, xs: &[T]) -> Result<(), OperadError> {
    if n != xs.len() {
        return Err(OperadError::ArityMismatch {
            expected: n,
            found: xs.len(),
        });
    }
    Ok(())
}

pub fn borel_unit(x: ObjId) -> BorelObject {
    BorelObject::new(vec![x])
}

/// The 2-monad multiplication on objects: concatenate, then normalize by
/// `δ(g)` at the inner arities.
pub fn borel_mult<A: ActionOperad>(inst: &A, g: &A::Elem, inners: &[BorelObject]) -> Result<BorelObject, OperadError> {
    check_sizes(inst.arity(g), inners)?;
    let sizes: Vec<usize> = inners.iter().map(BorelObject::arity).collect();
    let d = inst.delta(g, &sizes)?;
    let flat: Vec<ObjId> = inners.iter().flat_map(|o| o.objs.iter().copied()).collect();
    normalize(inst, &d, &flat)
}

/// The pure-group morphism `(g, id⃗)` out of `obj`.
pub fn act<A: ActionOperad>(inst: &A, x: &FinCat, g: &A::Elem, obj: &BorelObject) -> Result<BorelMorphism<A::Elem>, OperadError> {
    let tgt = normalize(inst, g, &obj.objs)?;
    Ok(BorelMorphism {
        src: obj.clone(),
        tgt,
        g: g.clone(),
        comps: obj.objs.iter().map(|&o| x.identity(o)).collect(),
    })
}

pub fn borel_identity<A: ActionOperad>(inst: &A, x: &FinCat, obj: &BorelObject) -> BorelMorphism<A::Elem> {
    BorelMorphism {
        src: obj.clone(),
        tgt: obj.clone(),
        g: inst.identity(obj.arity()),
        comps: obj.objs.iter().map(|&o| x.identity(o)).collect(),
    }
}

/// `m2 ∘ m1 = (g₂g₁, k_{π(g₁)(i)} ∘ fᵢ)`.
pub fn compose_borel<A: ActionOperad>(
    inst: &A,
    x: &FinCat,
    m2: &BorelMorphism<A::Elem>,
    m1: &BorelMorphism<A::Elem>,
) -> Result<BorelMorphism<A::Elem>, OperadError> {
    if m1.tgt != m2.src {
        return Err(OperadError::Bounds(format!(
            "cannot compose: target {:?} is not source {:?}",
            m1.tgt.objs, m2.src.objs
        )));
    }
    let p1 = inst.pi(&m1.g);
    let comps = m1
        .comps
        .iter()
        .enumerate()
        .map(|(i, &f)| {
            let k = m2.comps[p1.apply(i + 1) - 1];
            x.compose(k, f).expect("components line up")
        })
        .collect();
    Ok(BorelMorphism {
        src: m1.src.clone(),
        tgt: m2.tgt.clone(),
        g: inst.mul(&m2.g, &m1.g)?,
        comps,
    })
}

/// Group elements of arity `n`: all of them when finite, otherwise the
/// products of at most `bound` generators with Equal duplicates removed.
pub fn group_elements<A: ActionOperad>(inst: &A, n: usize, bound: usize) -> (Vec<A::Elem>, bool) {
    if let Some(all) = inst.elements(n) {
        return (all, true);
    }
    let mut kept: Vec<A::Elem> = Vec::new();
    for g in inst.bounded_elements(n, bound) {
        if !kept.iter().any(|h| inst.equal(h, &g) == Verdict::Equal) {
            kept.push(g);
        }
    }
    (kept, false)
}

/// `⨿_{g∈Λ(n)} ∏ᵢ X(xᵢ, y_{π(g)(i)})`, in a fixed order.
pub fn hom_set<A: ActionOperad>(
    inst: &A,
    x: &FinCat,
    src: &BorelObject,
    tgt: &BorelObject,
    bound: usize,
) -> HomSet<A::Elem> {
    let n = src.arity();
    if n != tgt.arity() {
        return HomSet {
            morphisms: Vec::new(),
            exhaustive: true,
        };
    }
    let (elems, exhaustive) = group_elements(inst, n, bound);
    let mut morphisms = Vec::new();
    for g in elems {
        let p = inst.pi(&g);
        let factors: Vec<&[MorId]> = (1..=n)
            .map(|i| x.hom(src.objs[i - 1], tgt.objs[p.apply(i) - 1]))
            .collect();
        for comps in product(&factors) {
            morphisms.push(BorelMorphism {
                src: src.clone(),
                tgt: tgt.clone(),
                g: g.clone(),
                comps,
            });
        }
    }
    HomSet {
        morphisms,
        exhaustive,
    }
}

/// Cartesian product in lexicographic order.
pub fn product<T: Clone>(factors: &[&[T]]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::with_capacity(factors.len())];
    for f in factors {
        let mut next = Vec::with_capacity(out.len() * f.len());
        for prefix in &out {
            for t in f.iter() {
                let mut v = prefix.clone();
                v.push(t.clone());
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// All objects `[e; x⃗]` of arity `n`, in lexicographic order.
pub fn objects_of_arity(x: &FinCat, n: usize) -> Vec<BorelObject> {
    let all: Vec<ObjId> = x.objects().collect();
    product(&vec![all.as_slice(); n])
        .into_iter()
        .map(BorelObject::new)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InfinityReport {
    pub operad: String,
    pub arity: usize,
    pub objects: usize,
    pub contractible: bool,
    pub free: bool,
    pub failure: Option<String>,
}

impl InfinityReport {
    pub fn passed(&self) -> bool {
        self.contractible && self.free
    }
}

impl fmt::Display for InfinityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "E{}({}): {} objects", self.operad, self.arity, self.objects)?;
        writeln!(f, "contractible: {}", if self.contractible { "yes" } else { "no" })?;
        writeln!(f, "free action: {}", if self.free { "yes" } else { "no" })?;
        if let Some(w) = &self.failure {
            writeln!(f, "witness: {w}")?;
        }
        write!(f, "{}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// Builds the translation category `EΛ(n)` and checks that it has exactly
/// one morphism between any two objects, and that right multiplication by
/// `Λ(n)` fixes no object except through the identity.
pub fn lambda_infinity_check<A: ActionOperad>(inst: &A, n: usize) -> Result<InfinityReport, OperadError> {
    let elems = inst.elements(n).ok_or_else(|| OperadError::Infinite {
        operad: inst.name().to_string(),
        arity: n,
    })?;
    let names: Vec<String> = elems.iter().map(|g| inst.render(g)).collect();
    let mut report = InfinityReport {
        operad: inst.name().to_string(),
        arity: n,
        objects: elems.len(),
        contractible: true,
        free: true,
        failure: None,
    };
    let e = FinCat::translation(&names);
    'outer: for a in e.objects() {
        for b in e.objects() {
            let k = e.hom(a, b).len();
            if k != 1 {
                report.contractible = false;
                report.failure = Some(format!("{} morphisms {} -> {}", k, names[a], names[b]));
                break 'outer;
            }
        }
    }
    let id = inst.identity(n);
    'free: for g in &elems {
        for h in &elems {
            if inst.equal(h, &id) == Verdict::Equal {
                continue;
            }
            let gh = inst.mul(g, h)?;
            if inst.equal(&gh, g) == Verdict::Equal {
                report.free = false;
                report.failure = Some(format!("{} fixes {}", inst.render(h), inst.render(g)));
                break 'free;
            }
        }
    }
    Ok(report)
}

/// A finite truncation of the Borel construction, materialized as a `FinCat`.
pub struct BorelCat<E> {
    pub cat: FinCat,
    pub objects: Vec<BorelObject>,
    pub morphisms: Vec<BorelMorphism<E>>,
    obj_index: HashMap<BorelObject, ObjId>,
    mor_index: HashMap<(BorelObject, BorelObject, E, Vec<MorId>), MorId>,
}

impl<E: Clone + Eq + std::hash::Hash> BorelCat<E> {
    pub fn object_id(&self, o: &BorelObject) -> Option<ObjId> {
        self.obj_index.get(o).copied()
    }

    /// Looks a morphism up by its data; the group part is matched syntactically.
    pub fn morphism_id(&self, m: &BorelMorphism<E>) -> Option<MorId> {
        self.mor_index
            .get(&(m.src.clone(), m.tgt.clone(), m.g.clone(), m.comps.clone()))
            .copied()
    }
}

/// All objects of arity at most `max_arity` with every morphism between them.
/// `Λ` must be finite at those arities and its elements syntactically canonical.
pub fn materialize<A: ActionOperad>(inst: &A, x: &FinCat, max_arity: usize) -> Result<BorelCat<A::Elem>, OperadError> {
    let mut objects = Vec::new();
    for n in 0..=max_arity {
        if inst.elements(n).is_none() {
            return Err(OperadError::Infinite {
                operad: inst.name().to_string(),
                arity: n,
            });
        }
        objects.extend(objects_of_arity(x, n));
    }
    let name_of = |o: &BorelObject| o.render(x);
    let mut doc = FinCatDoc {
        objects: objects.iter().map(name_of).collect(),
        ..Default::default()
    };
    let mut morphisms = Vec::new();
    let mut mor_index = HashMap::new();
    let mut by_src: HashMap<BorelObject, Vec<MorId>> = HashMap::new();
    for s in &objects {
        for t in objects.iter().filter(|t| t.arity() == s.arity()) {
            for m in hom_set(inst, x, s, t, 0).morphisms {
                let id = morphisms.len();
                let name = format!("{} -> {} : {}", name_of(s), name_of(t), m.render(inst, x));
                doc.morphisms.push(MorphismDoc {
                    id: name,
                    src: name_of(s),
                    tgt: name_of(t),
                });
                mor_index.insert((m.src.clone(), m.tgt.clone(), m.g.clone(), m.comps.clone()), id);
                by_src.entry(s.clone()).or_default().push(id);
                morphisms.push(m);
            }
        }
    }
    for o in &objects {
        let idm = borel_identity(inst, x, o);
        let id = mor_index[&(idm.src.clone(), idm.tgt.clone(), idm.g.clone(), idm.comps.clone())];
        doc.identities.insert(name_of(o), doc.morphisms[id].id.clone());
    }
    for (fi, f) in morphisms.iter().enumerate() {
        for &gi in by_src.get(&f.tgt).into_iter().flatten() {
            let gf = compose_borel(inst, x, &morphisms[gi], f)?;
            let key = (gf.src.clone(), gf.tgt.clone(), gf.g.clone(), gf.comps.clone());
            let r = *mor_index.get(&key).ok_or_else(|| {
                OperadError::Bounds("composite is not a listed morphism; elements are not canonical".into())
            })?;
            doc.compose.push([
                doc.morphisms[gi].id.clone(),
                doc.morphisms[fi].id.clone(),
                doc.morphisms[r].id.clone(),
            ]);
        }
    }
    let cat = FinCat::from_doc(&doc).map_err(|e| OperadError::Bounds(e.to_string()))?;
    let obj_index = objects.iter().cloned().enumerate().map(|(i, o)| (o, i)).collect();
    Ok(BorelCat {
        cat,
        objects,
        morphisms,
        obj_index,
        mor_index,
    })
}
