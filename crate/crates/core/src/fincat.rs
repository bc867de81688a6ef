//! Finite categories given by composition tables.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type ObjId = usize;
pub type MorId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FinCatError {
    #[error("duplicate name `{0}`")]
    Duplicate(String),
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("unknown morphism `{0}`")]
    UnknownMorphism(String),
    #[error("object `{0}` has no identity")]
    MissingIdentity(String),
    #[error("identity `{mor}` of `{obj}` is not an endomorphism of it")]
    BadIdentity { obj: String, mor: String },
    #[error("`{g}` ∘ `{f}` is not composable")]
    NotComposable { g: String, f: String },
    #[error("`{g}` ∘ `{f}` = `{gf}` has the wrong source or target")]
    BadComposite { g: String, f: String, gf: String },
    #[error("`{g}` ∘ `{f}` listed twice with different results")]
    Conflict { g: String, f: String },
    #[error("`{g}` ∘ `{f}` is missing from the table")]
    Missing { g: String, f: String },
    #[error("unit law fails for `{mor}`")]
    Unit { mor: String },
    #[error("associativity fails for (`{h}`, `{g}`, `{f}`)")]
    Assoc { h: String, g: String, f: String },
    #[error("malformed document: {0}")]
    Format(String),
}

/// The file format: `compose` lists triples `[g, f, gf]` meaning `g ∘ f = gf`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinCatDoc {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismDoc>,
    #[serde(default)]
    pub identities: BTreeMap<String, String>,
    #[serde(default)]
    pub compose: Vec<[String; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismDoc {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Mor {
    name: String,
    src: ObjId,
    tgt: ObjId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCat {
    objects: Vec<String>,
    morphisms: Vec<Mor>,
    identities: Vec<MorId>,
    table: HashMap<(MorId, MorId), MorId>,
    // morphisms by (src, tgt), in id order
    homs: HashMap<(ObjId, ObjId), Vec<MorId>>,
    outgoing: Vec<Vec<MorId>>,
}

impl FinCat {
    /// Builds and validates a category. Composites with an identity may be
    /// omitted from the table; they are filled in.
    pub fn from_doc(doc: &FinCatDoc) -> Result<Self, FinCatError> {
        let cat = Self::build(doc)?;
        cat.validate()?;
        Ok(cat)
    }

    pub fn from_json(text: &str) -> Result<Self, FinCatError> {
        let doc: FinCatDoc =
            serde_json::from_str(text).map_err(|e| FinCatError::Format(e.to_string()))?;
        Self::from_doc(&doc)
    }

    fn build(doc: &FinCatDoc) -> Result<Self, FinCatError> {
        let mut obj_ix = HashMap::new();
        for (i, o) in doc.objects.iter().enumerate() {
            if obj_ix.insert(o.clone(), i).is_some() {
                return Err(FinCatError::Duplicate(o.clone()));
            }
        }
        let obj = |name: &str| {
            obj_ix
                .get(name)
                .copied()
                .ok_or_else(|| FinCatError::UnknownObject(name.to_string()))
        };
        let mut mor_ix = HashMap::new();
        let mut morphisms = Vec::new();
        for m in &doc.morphisms {
            if mor_ix.insert(m.id.clone(), morphisms.len()).is_some() {
                return Err(FinCatError::Duplicate(m.id.clone()));
            }
            morphisms.push(Mor {
                name: m.id.clone(),
                src: obj(&m.src)?,
                tgt: obj(&m.tgt)?,
            });
        }
        let mor = |name: &str| {
            mor_ix
                .get(name)
                .copied()
                .ok_or_else(|| FinCatError::UnknownMorphism(name.to_string()))
        };
        for o in doc.identities.keys() {
            obj(o)?;
        }
        let mut identities = Vec::with_capacity(doc.objects.len());
        for o in &doc.objects {
            let name = doc
                .identities
                .get(o)
                .ok_or_else(|| FinCatError::MissingIdentity(o.clone()))?;
            let id = mor(name)?;
            let x = obj(o)?;
            if morphisms[id].src != x || morphisms[id].tgt != x {
                return Err(FinCatError::BadIdentity {
                    obj: o.clone(),
                    mor: name.clone(),
                });
            }
            identities.push(id);
        }
        let mut table = HashMap::new();
        for [g, f, gf] in &doc.compose {
            let (gi, fi, gfi) = (mor(g)?, mor(f)?, mor(gf)?);
            if morphisms[fi].tgt != morphisms[gi].src {
                return Err(FinCatError::NotComposable {
                    g: g.clone(),
                    f: f.clone(),
                });
            }
            if morphisms[gfi].src != morphisms[fi].src || morphisms[gfi].tgt != morphisms[gi].tgt {
                return Err(FinCatError::BadComposite {
                    g: g.clone(),
                    f: f.clone(),
                    gf: gf.clone(),
                });
            }
            if let Some(prev) = table.insert((gi, fi), gfi) {
                if prev != gfi {
                    return Err(FinCatError::Conflict {
                        g: g.clone(),
                        f: f.clone(),
                    });
                }
            }
        }
        let mut cat = FinCat {
            objects: doc.objects.clone(),
            morphisms,
            identities,
            table,
            homs: HashMap::new(),
            outgoing: Vec::new(),
        };
        cat.index_homs();
        cat.fill_identity_composites()?;
        Ok(cat)
    }

    fn index_homs(&mut self) {
        self.homs.clear();
        self.outgoing = vec![Vec::new(); self.objects.len()];
        for (i, m) in self.morphisms.iter().enumerate() {
            self.homs.entry((m.src, m.tgt)).or_default().push(i);
            self.outgoing[m.src].push(i);
        }
    }

    fn fill_identity_composites(&mut self) -> Result<(), FinCatError> {
        for f in 0..self.morphisms.len() {
            let (s, t) = (self.morphisms[f].src, self.morphisms[f].tgt);
            for key in [(self.identities[t], f), (f, self.identities[s])] {
                match self.table.get(&key) {
                    Some(&r) if r != f => {
                        return Err(FinCatError::Unit {
                            mor: self.morphisms[f].name.clone(),
                        })
                    }
                    Some(_) => {}
                    None => {
                        self.table.insert(key, f);
                    }
                }
            }
        }
        Ok(())
    }

    /// Checks totality, units and associativity, reporting the first failure.
    pub fn validate(&self) -> Result<(), FinCatError> {
        let n = |m: MorId| self.morphisms[m].name.clone();
        for f in 0..self.morphisms.len() {
            for &g in self.out_of(self.morphisms[f].tgt) {
                if !self.table.contains_key(&(g, f)) {
                    return Err(FinCatError::Missing { g: n(g), f: n(f) });
                }
            }
        }
        for f in 0..self.morphisms.len() {
            for &g in self.out_of(self.morphisms[f].tgt) {
                let gf = self.table[&(g, f)];
                for &h in self.out_of(self.morphisms[g].tgt) {
                    let hg = self.table[&(h, g)];
                    if self.table[&(h, gf)] != self.table[&(hg, f)] {
                        return Err(FinCatError::Assoc {
                            h: n(h),
                            g: n(g),
                            f: n(f),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Morphisms with source `x`, in id order.
    pub fn out_of(&self, x: ObjId) -> &[MorId] {
        &self.outgoing[x]
    }

    pub fn to_doc(&self) -> FinCatDoc {
        let mut compose: Vec<[String; 3]> = self
            .table
            .iter()
            .map(|(&(g, f), &gf)| {
                [
                    self.morphisms[g].name.clone(),
                    self.morphisms[f].name.clone(),
                    self.morphisms[gf].name.clone(),
                ]
            })
            .collect();
        compose.sort();
        FinCatDoc {
            objects: self.objects.clone(),
            morphisms: self
                .morphisms
                .iter()
                .map(|m| MorphismDoc {
                    id: m.name.clone(),
                    src: self.objects[m.src].clone(),
                    tgt: self.objects[m.tgt].clone(),
                })
                .collect(),
            identities: self
                .identities
                .iter()
                .enumerate()
                .map(|(o, &m)| (self.objects[o].clone(), self.morphisms[m].name.clone()))
                .collect(),
            compose,
        }
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> std::ops::Range<ObjId> {
        0..self.objects.len()
    }

    pub fn object_name(&self, x: ObjId) -> &str {
        &self.objects[x]
    }

    pub fn object_by_name(&self, name: &str) -> Option<ObjId> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn morphism_name(&self, f: MorId) -> &str {
        &self.morphisms[f].name
    }

    pub fn morphism_by_name(&self, name: &str) -> Option<MorId> {
        self.morphisms.iter().position(|m| m.name == name)
    }

    pub fn src(&self, f: MorId) -> ObjId {
        self.morphisms[f].src
    }

    pub fn tgt(&self, f: MorId) -> ObjId {
        self.morphisms[f].tgt
    }

    pub fn identity(&self, x: ObjId) -> MorId {
        self.identities[x]
    }

    /// `X(x, y)` in id order.
    pub fn hom(&self, x: ObjId, y: ObjId) -> &[MorId] {
        self.homs.get(&(x, y)).map_or(&[], |v| v.as_slice())
    }

    /// `g ∘ f`, when composable.
    pub fn compose(&self, g: MorId, f: MorId) -> Option<MorId> {
        self.table.get(&(g, f)).copied()
    }

    pub fn inverse(&self, f: MorId) -> Option<MorId> {
        let (s, t) = (self.src(f), self.tgt(f));
        self.hom(t, s).iter().copied().find(|&g| {
            self.compose(g, f) == Some(self.identities[s]) && self.compose(f, g) == Some(self.identities[t])
        })
    }

    pub fn is_groupoid(&self) -> bool {
        (0..self.morphisms.len()).all(|f| self.inverse(f).is_some())
    }

    /// Objects only, identities only.
    pub fn discrete(names: &[&str]) -> Self {
        let mut doc = FinCatDoc::default();
        for o in names {
            doc.objects.push(o.to_string());
            doc.morphisms.push(MorphismDoc {
                id: format!("id_{o}"),
                src: o.to_string(),
                tgt: o.to_string(),
            });
            doc.identities.insert(o.to_string(), format!("id_{o}"));
        }
        Self::from_doc(&doc).expect("discrete categories are valid")
    }

    /// One object whose endomorphisms form the cyclic group of order `n`,
    /// named `{obj}^k`; `{obj}^0` is the identity.
    pub fn cyclic(obj: &str, n: usize) -> Self {
        let name = |k: usize| format!("{obj}^{k}");
        let mut doc = FinCatDoc {
            objects: vec![obj.to_string()],
            ..Default::default()
        };
        for k in 0..n {
            doc.morphisms.push(MorphismDoc {
                id: name(k),
                src: obj.into(),
                tgt: obj.into(),
            });
            for j in 0..n {
                doc.compose.push([name(k), name(j), name((k + j) % n)]);
            }
        }
        doc.identities.insert(obj.into(), name(0));
        Self::from_doc(&doc).expect("cyclic groups are valid")
    }

    /// The translation category on `names`: exactly one morphism `a→b` for every pair.
    pub fn translation(names: &[String]) -> Self {
        let m = |a: &str, b: &str| format!("{a}->{b}");
        let mut doc = FinCatDoc {
            objects: names.to_vec(),
            ..Default::default()
        };
        for a in names {
            for b in names {
                doc.morphisms.push(MorphismDoc {
                    id: m(a, b),
                    src: a.clone(),
                    tgt: b.clone(),
                });
                for c in names {
                    doc.compose.push([m(b, c), m(a, b), m(a, c)]);
                }
            }
            doc.identities.insert(a.clone(), m(a, a));
        }
        Self::from_doc(&doc).expect("translation categories are valid")
    }
}

impl fmt::Display for FinCat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} objects, {} morphisms",
            self.objects.len(),
            self.morphisms.len()
        )
    }
}

/// A functor between finite categories, as maps on objects and morphisms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinFunctor {
    pub src: Arc<FinCat>,
    pub tgt: Arc<FinCat>,
    pub obj: Vec<ObjId>,
    pub mor: Vec<MorId>,
}

/// The file format: names of the source mapped to names of the target.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctorDoc {
    pub objects: BTreeMap<String, String>,
    pub morphisms: BTreeMap<String, String>,
}

impl FinFunctor {
    pub fn new(src: Arc<FinCat>, tgt: Arc<FinCat>, obj: Vec<ObjId>, mor: Vec<MorId>) -> Result<Self, FinCatError> {
        let f = FinFunctor { src, tgt, obj, mor };
        f.validate()?;
        Ok(f)
    }

    pub fn from_doc(src: Arc<FinCat>, tgt: Arc<FinCat>, doc: &FunctorDoc) -> Result<Self, FinCatError> {
        let mut obj = Vec::with_capacity(src.num_objects());
        for x in src.objects() {
            let name = src.object_name(x);
            let image = doc
                .objects
                .get(name)
                .ok_or_else(|| FinCatError::UnknownObject(name.to_string()))?;
            obj.push(
                tgt.object_by_name(image)
                    .ok_or_else(|| FinCatError::UnknownObject(image.clone()))?,
            );
        }
        let mut mor = Vec::with_capacity(src.num_morphisms());
        for f in 0..src.num_morphisms() {
            let name = src.morphism_name(f);
            let image = match doc.morphisms.get(name) {
                Some(m) => tgt
                    .morphism_by_name(m)
                    .ok_or_else(|| FinCatError::UnknownMorphism(m.clone()))?,
                // identities may be left out
                None if src.identity(src.src(f)) == f => tgt.identity(obj[src.src(f)]),
                None => return Err(FinCatError::UnknownMorphism(name.to_string())),
            };
            mor.push(image);
        }
        Self::new(src, tgt, obj, mor)
    }

    pub fn identity(cat: Arc<FinCat>) -> Self {
        let obj = cat.objects().collect();
        let mor = (0..cat.num_morphisms()).collect();
        FinFunctor {
            src: cat.clone(),
            tgt: cat,
            obj,
            mor,
        }
    }

    /// Checks typing, identities and composites.
    pub fn validate(&self) -> Result<(), FinCatError> {
        let (s, t) = (&self.src, &self.tgt);
        if self.obj.len() != s.num_objects() || self.mor.len() != s.num_morphisms() {
            return Err(FinCatError::Format("functor maps have the wrong length".into()));
        }
        for f in 0..s.num_morphisms() {
            let m = self.mor[f];
            if t.src(m) != self.obj[s.src(f)] || t.tgt(m) != self.obj[s.tgt(f)] {
                return Err(FinCatError::Format(format!(
                    "image of `{}` has the wrong source or target",
                    s.morphism_name(f)
                )));
            }
        }
        for x in s.objects() {
            if self.mor[s.identity(x)] != t.identity(self.obj[x]) {
                return Err(FinCatError::Format(format!(
                    "identity of `{}` is not preserved",
                    s.object_name(x)
                )));
            }
        }
        for f in 0..s.num_morphisms() {
            for &g in s.out_of(s.tgt(f)) {
                let gf = s.compose(g, f).expect("validated category");
                if t.compose(self.mor[g], self.mor[f]) != Some(self.mor[gf]) {
                    return Err(FinCatError::Format(format!(
                        "`{}` ∘ `{}` is not preserved",
                        s.morphism_name(g),
                        s.morphism_name(f)
                    )));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arrow_doc() -> FinCatDoc {
        serde_json::from_str(
            r#"{
              "objects": ["a", "b"],
              "morphisms": [
                {"id": "1a", "src": "a", "tgt": "a"},
                {"id": "1b", "src": "b", "tgt": "b"},
                {"id": "f", "src": "a", "tgt": "b"}
              ],
              "identities": {"a": "1a", "b": "1b"},
              "compose": []
            }"#,
        )
        .unwrap()
    }

    #[test]
    fn identity_composites_are_filled() {
        let c = FinCat::from_doc(&arrow_doc()).unwrap();
        let f = c.morphism_by_name("f").unwrap();
        assert_eq!(c.compose(c.identity(1), f), Some(f));
        assert_eq!(c.compose(f, c.identity(0)), Some(f));
        assert_eq!(c.hom(0, 1), &[f]);
        assert!(c.hom(1, 0).is_empty());
        assert!(!c.is_groupoid());
    }

    #[test]
    fn roundtrip_through_doc() {
        let c = FinCat::cyclic("x", 3);
        let again = FinCat::from_doc(&c.to_doc()).unwrap();
        assert_eq!(c, again);
        assert!(c.is_groupoid());
    }

    #[test]
    fn rejects_bad_tables() {
        let mut d = FinCat::cyclic("x", 2).to_doc();
        d.compose.retain(|t| t != &["x^1".to_string(), "x^1".into(), "x^0".into()]);
        assert_eq!(
            FinCat::from_doc(&d),
            Err(FinCatError::Missing {
                g: "x^1".into(),
                f: "x^1".into()
            })
        );
        let mut d = arrow_doc();
        d.compose.push(["f".into(), "f".into(), "f".into()]);
        assert!(matches!(FinCat::from_doc(&d), Err(FinCatError::NotComposable { .. })));
        let mut d = arrow_doc();
        d.identities.remove("b");
        assert_eq!(FinCat::from_doc(&d), Err(FinCatError::MissingIdentity("b".into())));
        let mut d = arrow_doc();
        d.identities.insert("b".into(), "f".into());
        assert!(matches!(FinCat::from_doc(&d), Err(FinCatError::BadIdentity { .. })));
    }

    #[test]
    fn associativity_failure_is_reported() {
        // a monoid table {1, x, y} where x·y = y·x breaks associativity
        let mut d = FinCatDoc {
            objects: vec!["o".into()],
            ..Default::default()
        };
        for m in ["1", "x", "y"] {
            d.morphisms.push(MorphismDoc {
                id: m.into(),
                src: "o".into(),
                tgt: "o".into(),
            });
        }
        d.identities.insert("o".into(), "1".into());
        for [g, f, gf] in [["x", "x", "1"], ["x", "y", "x"], ["y", "x", "x"], ["y", "y", "1"]] {
            d.compose.push([g.into(), f.into(), gf.into()]);
        }
        assert!(matches!(FinCat::from_doc(&d), Err(FinCatError::Assoc { .. })));
    }

    #[test]
    fn translation_category_is_contractible() {
        let names: Vec<String> = ["p", "q", "r"].iter().map(|s| s.to_string()).collect();
        let t = FinCat::translation(&names);
        for a in t.objects() {
            for b in t.objects() {
                assert_eq!(t.hom(a, b).len(), 1);
            }
        }
        assert!(t.is_groupoid());
    }
}
