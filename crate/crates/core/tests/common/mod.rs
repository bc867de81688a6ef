//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::sync::Arc;

use actop::fincat::{FinCat, FinCatDoc, FinFunctor, FunctorDoc, MorId, MorphismDoc, ObjId};
use actop::profunctor::FinProf;
use actop::{ActionOperad, Perm, Verdict};

/// `a → b` together with a lone object `c`.
pub fn arrow_plus() -> FinCat {
    let m = |id: &str, s: &str, t: &str| MorphismDoc {
        id: id.into(),
        src: s.into(),
        tgt: t.into(),
    };
    let doc = FinCatDoc {
        objects: vec!["a".into(), "b".into(), "c".into()],
        morphisms: vec![
            m("id_a", "a", "a"),
            m("id_b", "b", "b"),
            m("id_c", "c", "c"),
            m("f", "a", "b"),
        ],
        identities: [("a", "id_a"), ("b", "id_b"), ("c", "id_c")]
            .into_iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect(),
        compose: vec![],
    };
    FinCat::from_doc(&doc).unwrap()
}

/// `a → b` alone.
pub fn arrow() -> FinCat {
    let mut doc = arrow_plus().to_doc();
    doc.objects.retain(|o| o != "c");
    doc.morphisms.retain(|m| m.src != "c");
    doc.identities.remove("c");
    doc.compose.retain(|c| !c.iter().any(|n| n == "id_c"));
    FinCat::from_doc(&doc).unwrap()
}

pub fn translation(names: &[&str]) -> FinCat {
    FinCat::translation(&names.iter().map(|s| s.to_string()).collect::<Vec<_>>())
}

pub fn functor(src: &Arc<FinCat>, tgt: &Arc<FinCat>, objects: &[(&str, &str)], morphisms: &[(&str, &str)]) -> FinFunctor {
    let conv = |xs: &[(&str, &str)]| xs.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    let doc = FunctorDoc {
        objects: conv(objects),
        morphisms: conv(morphisms),
    };
    FinFunctor::from_doc(src.clone(), tgt.clone(), &doc).unwrap()
}

/// Images of the permutation exchanging an `a`-block at position `p` with the
/// `b`-block after it, inside `Σ_n`.
pub fn block_swap(p: usize, a: usize, b: usize, n: usize) -> Perm {
    let images = (1..=n)
        .map(|i| {
            if i >= p && i < p + a {
                i + b
            } else if i >= p + a && i < p + a + b {
                i - a
            } else {
                i
            }
        })
        .collect();
    Perm::from_images(images).unwrap()
}

/// Position `σ(i)` receives `xs[i]`.
fn act_tuple<T: Clone>(sigma: &Perm, xs: &[T]) -> Vec<T> {
    let mut out = xs.to_vec();
    for (i, x) in xs.iter().enumerate() {
        out[sigma.apply(i + 1) - 1] = x.clone();
    }
    out
}

/// The finite group `Λ(n)` as multiplication tables over element indices.
pub struct GroupTable<E> {
    pub elems: Vec<E>,
    pub mul: Vec<Vec<usize>>,
    pub inv: Vec<usize>,
    pub pi: Vec<Perm>,
    pub unit: usize,
}

impl<E: Clone> GroupTable<E> {
    pub fn new<A: ActionOperad<Elem = E>>(inst: &A, n: usize) -> Self {
        let elems = inst.elements(n).expect("finite at this arity");
        let index = |g: &E| {
            let hits: Vec<usize> = (0..elems.len())
                .filter(|&i| inst.equal(&elems[i], g) == Verdict::Equal)
                .collect();
            assert_eq!(hits.len(), 1, "element list is not a transversal");
            hits[0]
        };
        let mul = elems
            .iter()
            .map(|g| elems.iter().map(|h| index(&inst.mul(g, h).unwrap())).collect())
            .collect();
        let inv = elems.iter().map(|g| index(&inst.inv(g))).collect();
        let pi = elems.iter().map(|g| inst.pi(g)).collect();
        let unit = index(&inst.identity(n));
        GroupTable {
            elems,
            mul,
            inv,
            pi,
            unit,
        }
    }

    pub fn index_of<A: ActionOperad<Elem = E>>(&self, inst: &A, g: &E) -> usize {
        (0..self.elems.len())
            .find(|&i| inst.equal(&self.elems[i], g) == Verdict::Equal)
            .expect("element of the group")
    }
}

type Obj = (usize, Vec<ObjId>);
type Mor = (Obj, Obj, Vec<MorId>);

/// Hom-set `[x⃗] → [y⃗]` of the quotient of `EΛ(n) × Xⁿ` by the diagonal
/// right action `h·(g, x⃗) = (gh⁻¹, π(h)·x⃗)`, computed by listing every
/// morphism between the two orbits and grouping morphisms into orbits.
/// Each orbit is reported by its unique representative with source
/// `(e, x⃗)`, as `(group index of the target, components)`.
pub fn quotient_hom<E: Clone>(t: &GroupTable<E>, x: &FinCat, src: &[ObjId], tgt: &[ObjId]) -> BTreeSet<(usize, Vec<MorId>)> {
    let act_obj = |h: usize, (g, xs): &Obj| -> Obj { (t.mul[*g][t.inv[h]], act_tuple(&t.pi[h], xs)) };
    let orbit = |o: &Obj| -> BTreeSet<Obj> { (0..t.elems.len()).map(|h| act_obj(h, o)).collect() };
    let ox = orbit(&(t.unit, src.to_vec()));
    let oy = orbit(&(t.unit, tgt.to_vec()));
    let mut all: BTreeSet<Mor> = BTreeSet::new();
    for a in &ox {
        for b in &oy {
            let mut tuples: Vec<Vec<MorId>> = vec![vec![]];
            for i in 0..a.1.len() {
                let hom = x.hom(a.1[i], b.1[i]);
                tuples = tuples
                    .into_iter()
                    .flat_map(|p| {
                        hom.iter().map(move |&f| {
                            let mut q = p.clone();
                            q.push(f);
                            q
                        })
                    })
                    .collect();
            }
            for comps in tuples {
                all.insert((a.clone(), b.clone(), comps));
            }
        }
    }
    let mut seen: BTreeSet<Mor> = BTreeSet::new();
    let mut out = BTreeSet::new();
    for m in &all {
        if seen.contains(m) {
            continue;
        }
        let orbit: BTreeSet<Mor> = (0..t.elems.len())
            .map(|h| (act_obj(h, &m.0), act_obj(h, &m.1), act_tuple(&t.pi[h], &m.2)))
            .collect();
        let reps: Vec<&Mor> = orbit
            .iter()
            .filter(|(s, _, _)| s.0 == t.unit && s.1 == src)
            .collect();
        assert_eq!(reps.len(), 1, "the action is not free");
        out.insert((reps[0].1 .0, reps[0].2.clone()));
        seen.extend(orbit);
    }
    out
}

/// Cardinalities of `G∘F(z, x)`, from connected components of the graph on
/// pairs `(t, s)` with an edge `(h·t, s) ~ (t, h·s)` for every morphism
/// `h` of the middle category.
pub fn coend_sizes(g: &FinProf, f: &FinProf) -> BTreeMap<(String, String), usize> {
    let mid = &f.y;
    let mut nodes: Vec<(usize, usize)> = Vec::new();
    for (t, te) in g.elements().iter().enumerate() {
        for (s, se) in f.elements().iter().enumerate() {
            if te.x == se.y {
                nodes.push((t, s));
            }
        }
    }
    let id: HashMap<(usize, usize), usize> = nodes.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut adj = vec![Vec::new(); nodes.len()];
    for (i, &(t, s)) in nodes.iter().enumerate() {
        let y = g.elements()[t].x;
        // t ∈ G(z, y) pushed along h: y → y'
        for h in (0..mid.num_morphisms()).filter(|&h| mid.src(h) == y) {
            let ht = g.push(h, t).unwrap();
            for (s2, se) in f.elements().iter().enumerate() {
                if se.y == mid.tgt(h) && se.x == f.elements()[s].x && f.pull(h, s2) == Some(s) {
                    let j = id[&(ht, s2)];
                    adj[i].push(j);
                    adj[j].push(i);
                }
            }
        }
    }
    let mut comp = vec![usize::MAX; nodes.len()];
    let mut count: BTreeMap<(String, String), usize> = BTreeMap::new();
    for z in g.y.objects() {
        for x in f.x.objects() {
            count.insert((g.y.object_name(z).into(), f.x.object_name(x).into()), 0);
        }
    }
    for start in 0..nodes.len() {
        if comp[start] != usize::MAX {
            continue;
        }
        comp[start] = start;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if comp[v] == usize::MAX {
                    comp[v] = start;
                    queue.push_back(v);
                }
            }
        }
        let (t, s) = nodes[start];
        let key = (
            g.y.object_name(g.elements()[t].y).to_string(),
            f.x.object_name(f.elements()[s].x).to_string(),
        );
        *count.get_mut(&key).unwrap() += 1;
    }
    count
}
