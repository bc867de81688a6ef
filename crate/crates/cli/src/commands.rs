use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use actop::borel::{self, BorelMorphism, BorelObject};
use actop::cactus::{self, CactusGen};
use actop::club::{check_club, check_pullback};
use actop::fincat::FinCat;
use actop::multicat::{validate_multicat, validate_multifunctor, FinMulticat, MultifunctorDoc};
use actop::operad::axioms::{check_axioms, CheckConfig};
use actop::operad::{FamilyGen, WordOperad};
use actop::presentation::{check_presentation, Interpretation, Presentation};
use actop::profunctor::{lift_prof, FinProf};
use actop::rewrite::{EqResult, RewritePath, SearchBounds, WordError};
use actop::{ActionOperad, Braid, Cactus, Symmetric, Trivial, Verdict};
use serde_json::{json, Value};

use crate::{BorelCmd, Builtin, CactusCmd, CheckArgs, ClubCmd, Cmd, Common, MulticatCmd, OperadKind, PresentCmd};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Fail,
    Inconclusive,
}

pub struct Report {
    pub text: String,
    pub json: Value,
    pub status: Status,
}

impl Report {
    fn ok(text: impl Into<String>, json: Value) -> Self {
        Report {
            text: text.into(),
            json,
            status: Status::Ok,
        }
    }
}

type Res = Result<Report, String>;

impl Common {
    fn kind(&self) -> OperadKind {
        self.operad.unwrap_or(OperadKind::Sym)
    }

    fn bounds(&self) -> SearchBounds {
        SearchBounds {
            max_len: self.max_len,
            budget: self.budget,
        }
    }

    fn check(&self) -> Result<(), String> {
        if self.budget == 0 || self.max_len == Some(0) {
            return Err("bounds must be positive".into());
        }
        Ok(())
    }
}

/// Runs `$body` with `$inst` bound to the selected instance.
macro_rules! dispatch {
    ($common:expr, $inst:ident => $body:expr) => {{
        let bounds = $common.bounds();
        match $common.kind() {
            OperadKind::Trivial => {
                let $inst = &Trivial;
                $body
            }
            OperadKind::Sym => {
                let $inst = &Symmetric;
                $body
            }
            OperadKind::Braid => {
                let $inst = &Braid::with_bounds(bounds);
                $body
            }
            OperadKind::Cactus => {
                let $inst = &Cactus::with_bounds(bounds);
                $body
            }
        }
    }};
}

pub fn run(cmd: Cmd, common: &Common) -> Res {
    common.check()?;
    match cmd {
        Cmd::Pi { n, element, .. } => dispatch!(common, inst => pi(inst, n, &element)),
        Cmd::Mul { n, a, b, .. } => dispatch!(common, inst => mul(inst, n, &a, &b)),
        Cmd::Beta { arities, elements, .. } => dispatch!(common, inst => beta(inst, &arities, &elements)),
        Cmd::Delta { n, sizes, element, .. } => dispatch!(common, inst => delta(inst, n, &sizes, &element)),
        Cmd::Mu { n, arities, g, hs, .. } => dispatch!(common, inst => mu(inst, n, &arities, &g, &hs)),
        Cmd::Equal {
            n,
            explain,
            replay,
            a,
            b,
            ..
        } => {
            let bounds = common.bounds();
            match (common.kind(), replay) {
                (OperadKind::Braid, None) => equal_words(&Braid::with_bounds(bounds), n, &a, &b, explain),
                (OperadKind::Cactus, None) => equal_words(&Cactus::with_bounds(bounds), n, &a, &b, explain),
                (OperadKind::Braid, Some(p)) => replay_words(&Braid::with_bounds(bounds), n, &a, &b, &p),
                (OperadKind::Cactus, Some(p)) => replay_words(&Cactus::with_bounds(bounds), n, &a, &b, &p),
                (_, Some(_)) => Err("--replay needs a word instance (braid or cactus)".into()),
                (OperadKind::Sym, None) => equal_exact(&Symmetric, n, &a, &b, explain),
                (OperadKind::Trivial, None) => equal_exact(&Trivial, n, &a, &b, explain),
            }
        }
        Cmd::Axioms { cfg, .. } => dispatch!(common, inst => axioms(inst, &cfg)),
        Cmd::Cactus(c) => cactus_cmd(c, common),
        Cmd::Borel(c) => borel_cmd(c, common),
        Cmd::Club(c) => club_cmd(c, common),
        Cmd::Multicat(c) => multicat_cmd(c, common),
        Cmd::Present(c) => present_cmd(c, common),
    }
}

fn parse<A: ActionOperad>(inst: &A, text: &str, n: usize) -> Result<A::Elem, String> {
    inst.parse_element(text, n).map_err(|e| e.to_string())
}

fn parse_all<A: ActionOperad>(inst: &A, arities: &[usize], texts: &[String]) -> Result<Vec<A::Elem>, String> {
    if arities.len() != texts.len() {
        return Err(format!("{} arities for {} elements", arities.len(), texts.len()));
    }
    texts.iter().zip(arities).map(|(t, &k)| parse(inst, t, k)).collect()
}

fn element_report<A: ActionOperad>(inst: &A, op: &str, result: &A::Elem) -> Report {
    let r = inst.render(result);
    Report::ok(
        r.clone(),
        json!({"operad": inst.name(), "op": op, "arity": inst.arity(result), "result": r}),
    )
}

fn pi<A: ActionOperad>(inst: &A, n: usize, text: &str) -> Res {
    let g = parse(inst, text, n)?;
    let p = inst.pi(&g).to_string();
    Ok(Report::ok(
        p.clone(),
        json!({"operad": inst.name(), "op": "pi", "element": inst.render(&g), "pi": p}),
    ))
}

fn mul<A: ActionOperad>(inst: &A, n: usize, a: &str, b: &str) -> Res {
    let (a, b) = (parse(inst, a, n)?, parse(inst, b, n)?);
    let r = inst.mul(&a, &b).map_err(|e| e.to_string())?;
    Ok(element_report(inst, "mul", &r))
}

fn beta<A: ActionOperad>(inst: &A, arities: &[usize], texts: &[String]) -> Res {
    let hs = parse_all(inst, arities, texts)?;
    Ok(element_report(inst, "beta", &inst.beta(&hs)))
}

fn delta<A: ActionOperad>(inst: &A, n: usize, sizes: &[usize], text: &str) -> Res {
    let g = parse(inst, text, n)?;
    let r = inst.delta(&g, sizes).map_err(|e| e.to_string())?;
    Ok(element_report(inst, "delta", &r))
}

fn mu<A: ActionOperad>(inst: &A, n: usize, arities: &[usize], g: &str, texts: &[String]) -> Res {
    let g = parse(inst, g, n)?;
    let hs = parse_all(inst, arities, texts)?;
    let r = inst.mu(&g, &hs).map_err(|e| e.to_string())?;
    Ok(element_report(inst, "mu", &r))
}

fn verdict_report(v: &Verdict, extra: String, json: Value) -> Report {
    let (label, status) = match v {
        Verdict::Equal => ("Equal".to_string(), Status::Ok),
        Verdict::Distinct(why) => (format!("Distinct ({why})"), Status::Fail),
        Verdict::Inconclusive => ("Inconclusive".to_string(), Status::Inconclusive),
    };
    let mut text = label.clone();
    if !extra.is_empty() {
        text.push('\n');
        text.push_str(&extra);
    }
    let mut json = json;
    json["verdict"] = Value::String(label);
    Report { text, json, status }
}

fn equal_exact<A: ActionOperad>(inst: &A, n: usize, a: &str, b: &str, explain: bool) -> Res {
    let (x, y) = (parse(inst, a, n)?, parse(inst, b, n)?);
    let v = inst.equal(&x, &y);
    let extra = if explain && v.is_equal() {
        "path: none, elements compared exactly".to_string()
    } else {
        String::new()
    };
    Ok(verdict_report(
        &v,
        extra,
        json!({"operad": inst.name(), "lhs": inst.render(&x), "rhs": inst.render(&y), "path": []}),
    ))
}

fn equal_words<G: FamilyGen>(inst: &WordOperad<G>, n: usize, a: &str, b: &str, explain: bool) -> Res {
    let (x, y) = (parse(inst, a, n)?, parse(inst, b, n)?);
    let r = inst.equal_words(&x, &y, inst.bounds()).map_err(|e| e.to_string())?;
    let mut json = json!({"operad": inst.name(), "lhs": x.to_string(), "rhs": y.to_string()});
    let extra = match &r {
        EqResult::Equal(path) => {
            json["path"] = Value::String(path.to_string());
            if explain {
                path.to_string()
            } else {
                String::new()
            }
        }
        EqResult::Inconclusive { states } => {
            json["states"] = json!(states);
            format!("search exhausted after {states} states")
        }
        EqResult::Distinct(_) => String::new(),
    };
    Ok(verdict_report(&Verdict::from(&r), extra, json))
}

fn replay_words<G: FamilyGen>(inst: &WordOperad<G>, n: usize, a: &str, b: &str, file: &Path) -> Res {
    let (x, y) = (parse(inst, a, n)?, parse(inst, b, n)?);
    let text = read(file)?;
    let body = text
        .find("start:")
        .map(|i| &text[i..])
        .ok_or("no `start:` line in the path file")?;
    let path = RewritePath::parse(body, |w| {
        inst.parse_element(w, n).map_err(|e| WordError::Syntax(e.to_string()))
    })
    .map_err(|e| e.to_string())?;
    let steps = path.steps.len();
    Ok(match inst.system(n).replay(&path, &x, &y) {
        Ok(()) => Report::ok(
            format!("replay ok: {steps} steps"),
            json!({"operad": inst.name(), "replay": "ok", "steps": steps}),
        ),
        Err(e) => Report {
            text: format!("replay failed: {e}"),
            json: json!({"operad": inst.name(), "replay": "failed", "reason": e.to_string()}),
            status: Status::Fail,
        },
    })
}

fn config(cfg: &CheckArgs) -> CheckConfig {
    CheckConfig {
        max_total: cfg.max_total.unwrap_or(cfg.max_arity),
        max_arity: cfg.max_arity,
        max_word_len: cfg.max_word_len,
        max_cases: cfg.max_cases,
        seed: cfg.seed,
    }
}

fn status_of(failures: u64, inconclusive: u64) -> Status {
    if failures > 0 {
        Status::Fail
    } else if inconclusive > 0 {
        Status::Inconclusive
    } else {
        Status::Ok
    }
}

fn to_json<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("reports serialize")
}

fn axioms<A: ActionOperad>(inst: &A, cfg: &CheckArgs) -> Res {
    let r = check_axioms(inst, &config(cfg));
    Ok(Report {
        text: r.to_string(),
        json: to_json(&r),
        status: status_of(r.failures(), r.inconclusive()),
    })
}

fn cactus_cmd(c: CactusCmd, common: &Common) -> Res {
    if !matches!(common.operad, None | Some(OperadKind::Cactus)) {
        return Err("cactus commands run in the cactus operad".into());
    }
    let j = Cactus::with_bounds(common.bounds());
    let err = |e: actop::OperadError| e.to_string();
    match c {
        CactusCmd::Shat { p, q, n, .. } => {
            let s = cactus::s_hat(p, q, n).map_err(err)?.to_string();
            Ok(Report::ok(s.clone(), json!({"op": "shat", "p": p, "q": q, "n": n, "result": s})))
        }
        CactusCmd::Commutor { m, n, .. } => {
            let w = cactus::commutor(m, n).to_string();
            Ok(Report::ok(w.clone(), json!({"op": "commutor", "m": m, "n": n, "result": w})))
        }
        CactusCmd::Relations { n, .. } => {
            let sys = j.system(n);
            let rels: Vec<String> = sys
                .relations()
                .iter()
                .map(|r| format!("{} = {}", r.lhs, r.rhs))
                .collect();
            let gens = CactusGen::all_at(n).len();
            let mut text = format!("J{n}: {gens} generators, {} relations\n", rels.len());
            for r in &rels {
                writeln!(text, "{r}").expect("string write");
            }
            Ok(Report::ok(text, json!({"n": n, "generators": gens, "relations": rels})))
        }
        CactusCmd::DeltaGen { p, q, sizes, .. } => {
            let w = cactus::cactus_delta_gen(p, q, sizes.len(), &sizes).map_err(err)?.to_string();
            Ok(Report::ok(
                w.clone(),
                json!({"op": "delta_gen", "p": p, "q": q, "sizes": sizes, "result": w}),
            ))
        }
        CactusCmd::Coboundary { max, .. } => {
            let t = cactus::check_coboundary(&j, max);
            Ok(Report {
                text: t.to_string(),
                json: to_json(&t),
                status: status_of(t.failures() as u64, t.inconclusive() as u64),
            })
        }
    }
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_cat(path: &Path) -> Result<FinCat, String> {
    FinCat::from_json(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn parse_objects(x: &FinCat, text: &str) -> Result<BorelObject, String> {
    let objs = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| x.object_by_name(s).ok_or_else(|| format!("unknown object `{s}`")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(BorelObject::new(objs))
}

/// Reads `g | f1,...,fn` as a morphism out of `src`.
fn parse_morphism<A: ActionOperad>(
    inst: &A,
    x: &FinCat,
    src: &BorelObject,
    text: &str,
) -> Result<BorelMorphism<A::Elem>, String> {
    let (g, comps) = text.split_once('|').ok_or("expected `g | f1,...,fn`")?;
    let n = src.arity();
    let g = parse(inst, g.trim(), n)?;
    let comps = comps
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| x.morphism_by_name(s).ok_or_else(|| format!("unknown morphism `{s}`")))
        .collect::<Result<Vec<_>, _>>()?;
    if comps.len() != n {
        return Err(format!("{} components for an object of arity {n}", comps.len()));
    }
    for (i, &f) in comps.iter().enumerate() {
        if x.src(f) != src.objs[i] {
            return Err(format!(
                "component {} starts at {}, not {}",
                x.morphism_name(f),
                x.object_name(x.src(f)),
                x.object_name(src.objs[i])
            ));
        }
    }
    let ends: Vec<_> = comps.iter().map(|&f| x.tgt(f)).collect();
    let tgt = borel::normalize(inst, &g, &ends).map_err(|e| e.to_string())?;
    Ok(BorelMorphism {
        src: src.clone(),
        tgt,
        g,
        comps,
    })
}

fn borel_cmd(c: BorelCmd, common: &Common) -> Res {
    match c {
        BorelCmd::Hom {
            cat, src, tgt, bound, ..
        } => {
            let x = load_cat(&cat)?;
            let (s, t) = (parse_objects(&x, &src)?, parse_objects(&x, &tgt)?);
            dispatch!(common, inst => {
                let h = borel::hom_set(inst, &x, &s, &t, bound);
                let lines: Vec<String> = h.morphisms.iter().map(|m| m.render(inst, &x)).collect();
                if !h.exhaustive {
                    eprintln!("note: group elements enumerated up to word length {bound}");
                }
                Ok(Report::ok(
                    lines.join("\n"),
                    json!({"operad": inst.name(), "src": s.render(&x), "tgt": t.render(&x),
                           "exhaustive": h.exhaustive, "morphisms": lines}),
                ))
            })
        }
        BorelCmd::Compose {
            cat, src, first, second, ..
        } => {
            let x = load_cat(&cat)?;
            let s = parse_objects(&x, &src)?;
            dispatch!(common, inst => {
                let m1 = parse_morphism(inst, &x, &s, &first)?;
                let m2 = parse_morphism(inst, &x, &m1.tgt, &second)?;
                let c = borel::compose_borel(inst, &x, &m2, &m1).map_err(|e| e.to_string())?;
                let line = c.render(inst, &x);
                Ok(Report::ok(
                    format!("{} -> {}\n{line}", c.src.render(&x), c.tgt.render(&x)),
                    json!({"operad": inst.name(), "src": c.src.render(&x), "tgt": c.tgt.render(&x),
                           "morphism": line}),
                ))
            })
        }
        BorelCmd::Infinity { n, .. } => dispatch!(common, inst => {
            let r = borel::lambda_infinity_check(inst, n).map_err(|e| e.to_string())?;
            Ok(Report {
                text: r.to_string(),
                json: to_json(&r),
                status: if r.passed() { Status::Ok } else { Status::Fail },
            })
        }),
    }
}

fn club_cmd(c: ClubCmd, common: &Common) -> Res {
    match c {
        ClubCmd::Check { cfg, .. } => dispatch!(common, inst => {
            let r = check_club(inst, &config(&cfg)).map_err(|e| e.to_string())?;
            let inconclusive = r.undecided + r.axioms.inconclusive();
            Ok(Report {
                text: r.to_string(),
                json: to_json(&r),
                status: if !r.passed() { Status::Fail } else { status_of(0, inconclusive) },
            })
        }),
        ClubCmd::Pullback { n, cat, .. } => {
            let x = load_cat(&cat)?;
            dispatch!(common, inst => {
                let r = check_pullback(inst, n, &x).map_err(|e| e.to_string())?;
                Ok(Report {
                    text: r.to_string(),
                    json: to_json(&r),
                    status: if r.passed() { Status::Ok } else { Status::Fail },
                })
            })
        }
    }
}

fn load_multicat(path: &Path) -> Result<FinMulticat, String> {
    FinMulticat::from_json(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn multicat_cmd(c: MulticatCmd, common: &Common) -> Res {
    match c {
        MulticatCmd::Validate {
            file, functor, target, ..
        } => {
            let m = load_multicat(&file)?;
            let fun = match (functor, target) {
                (Some(f), Some(t)) => {
                    let doc: MultifunctorDoc =
                        serde_json::from_str(&read(&f)?).map_err(|e| format!("{}: {e}", f.display()))?;
                    Some((doc, load_multicat(&t)?))
                }
                _ => None,
            };
            dispatch!(common, inst => {
                let r = validate_multicat(&m, inst);
                let mut text = r.to_string();
                let mut json = json!({"operad": inst.name(), "multicategory": to_json(&r)});
                let mut ok = r.is_valid();
                if let Some((doc, n)) = &fun {
                    let rn = validate_multicat(n, inst);
                    let rf = validate_multifunctor(doc, &m, n, inst).map_err(|e| e.to_string())?;
                    write!(text, "\ntarget\n{rn}\nmultifunctor\n{rf}").expect("string write");
                    json["target"] = to_json(&rn);
                    json["multifunctor"] = to_json(&rf);
                    ok &= rn.is_valid() && rf.is_valid();
                }
                Ok(Report { text, json, status: if ok { Status::Ok } else { Status::Fail } })
            })
        }
        MulticatCmd::Lift { prof, max_arity, .. } => {
            let f = FinProf::from_json(&read(&prof)?).map_err(|e| format!("{}: {e}", prof.display()))?;
            dispatch!(common, inst => {
                let l = lift_prof(&f, inst, max_arity).map_err(|e| e.to_string())?;
                let cards = l.prof.cardinalities();
                let mut text = String::new();
                let mut rows = Vec::new();
                for ((y, x), k) in &cards {
                    if *k > 0 {
                        writeln!(text, "{y} {x} {k}").expect("string write");
                        rows.push(json!({"y": y, "x": x, "size": k}));
                    }
                }
                write!(text, "elements {}", l.prof.len()).expect("string write");
                Ok(Report::ok(
                    text,
                    json!({"operad": inst.name(), "max_arity": max_arity, "values": rows,
                           "elements": l.prof.len()}),
                ))
            })
        }
    }
}

fn present_cmd(c: PresentCmd, common: &Common) -> Res {
    let PresentCmd::Check {
        file, builtin, interp, ..
    } = c;
    let p = match (file, builtin) {
        (Some(f), _) => Presentation::from_json(&read(&f)?).map_err(|e| format!("{}: {e}", f.display()))?,
        (None, Some(Builtin::Coboundary)) => Presentation::coboundary(),
        (None, Some(Builtin::Symmetric)) => Presentation::symmetric(),
        (None, None) => return Err("a presentation file or --builtin is required".into()),
    };
    let mut texts = BTreeMap::new();
    for item in &interp {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| format!("--interp `{item}` is not name=element"))?;
        texts.insert(k.trim().to_string(), v.trim().to_string());
    }
    if common.kind() == OperadKind::Sym {
        // a generator is sent to its own permutation unless told otherwise
        for (name, pi) in p.gens.iter() {
            texts.entry(name.clone()).or_insert_with(|| pi.to_string());
        }
    }
    dispatch!(common, inst => {
        let i = Interpretation::parse(inst, &p.gens, &texts).map_err(|e| e.to_string())?;
        let r = check_presentation(&p, &i, inst).map_err(|e| e.to_string())?;
        Ok(Report {
            text: r.to_string(),
            json: to_json(&r),
            status: status_of(r.failures() as u64, r.inconclusive() as u64),
        })
    })
}
