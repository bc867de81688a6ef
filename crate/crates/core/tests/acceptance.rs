//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

mod common;

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use actop::borel::{hom_set, lambda_infinity_check, BorelObject};
use actop::braid::{block_cross, braid_pi};
use actop::cactus::{check_coboundary, check_delta_well_defined};
use actop::club::{check_club, check_pullback};
use actop::fincat::{FinCat, ObjId};
use actop::multicat::{operad_multicat, validate_multicat, FinMulticat, MulticatDoc};
use actop::operad::axioms::{check_axioms, CheckConfig};
use actop::presentation::{
    check_presentation, eval_term, random_terms, term_pi, Collection, Interpretation, Presentation,
};
use actop::profunctor::{check_iso, lift_of_representable, prof_compose, FinProf};
use actop::{ActionOperad, Braid, Cactus, Symmetric, Trivial};

use common::{arrow, arrow_plus, block_swap, coend_sizes, functor, quotient_hom, translation, GroupTable};

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn tuples(x: &FinCat, n: usize) -> Vec<Vec<ObjId>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<ObjId>| {
                x.objects().map(move |o| {
                    let mut q = p.clone();
                    q.push(o);
                    q
                })
            })
            .collect();
    }
    out
}

fn symmetric_axioms() -> Outcome {
    let r = check_axioms(&Symmetric, &CheckConfig::exhaustive(5));
    let all_exhaustive = r.rows.iter().all(|row| row.exhaustive && row.checked > 0);
    outcome(
        r.failures() == 0 && r.inconclusive() == 0 && all_exhaustive && r.checked() >= 1000,
        format!(
            "{} laws, {} cases exhaustive to weight 5, {} failed, {} inconclusive",
            r.rows.len(),
            r.checked(),
            r.failures(),
            r.inconclusive()
        ),
    )
}

fn cactus_well_defined() -> Outcome {
    let t = check_delta_well_defined(&Cactus::new(), 4, 3);
    outcome(
        t.failures() == 0 && t.inconclusive() == 0 && !t.rows.is_empty(),
        format!(
            "{} relation/size cases, {} equal, {} distinct, {} inconclusive",
            t.rows.len(),
            t.equal(),
            t.failures(),
            t.inconclusive()
        ),
    )
}

fn coboundary_laws() -> Outcome {
    let t = check_coboundary(&Cactus::new(), 6);
    let kinds = ["involution", "square", "delta"]
        .iter()
        .map(|k| t.rows.iter().filter(|r| r.label.starts_with(k)).count())
        .collect::<Vec<_>>();
    outcome(
        t.equal() == t.rows.len() && kinds.iter().all(|&k| k > 0),
        format!(
            "{} involutions, {} squares, {} delta coherences; {} equal of {}",
            kinds[0],
            kinds[1],
            kinds[2],
            t.equal(),
            t.rows.len()
        ),
    )
}

/// `(pairs checked, first mismatch)`.
fn borel_against_oracle<A: ActionOperad>(inst: &A, x: &FinCat, n: usize) -> (usize, Option<String>) {
    let table = GroupTable::new(inst, n);
    let objs = tuples(x, n);
    let mut pairs = 0;
    for s in &objs {
        for t in &objs {
            pairs += 1;
            let h = hom_set(inst, x, &BorelObject::new(s.clone()), &BorelObject::new(t.clone()), 0);
            let lib: Vec<(usize, Vec<usize>)> = h
                .morphisms
                .iter()
                .map(|m| (table.index_of(inst, &m.g), m.comps.clone()))
                .collect();
            let lib_set: BTreeSet<_> = lib.iter().cloned().collect();
            let oracle = quotient_hom(&table, x, s, t);
            if !h.exhaustive || lib_set.len() != lib.len() || lib_set != oracle {
                return (
                    pairs,
                    Some(format!(
                        "{} n={n} {:?}->{:?}: {} listed, {} in quotient",
                        inst.name(),
                        s,
                        t,
                        lib.len(),
                        oracle.len()
                    )),
                );
            }
        }
    }
    (pairs, None)
}

fn borel_hom_sets() -> Outcome {
    let cats = [arrow_plus(), FinCat::cyclic("x", 2), translation(&["p", "q"])];
    let mut pairs = 0;
    let mut failure = None;
    for x in &cats {
        for n in 0..=3 {
            for (p, f) in [
                borel_against_oracle(&Trivial, x, n),
                borel_against_oracle(&Symmetric, x, n),
            ] {
                pairs += p;
                failure = failure.or(f);
            }
        }
        let (p, f) = borel_against_oracle(&Cactus::new(), x, 2);
        pairs += p;
        failure = failure.or(f);
    }
    match failure {
        None => outcome(pairs >= 50, format!("{pairs} (src,tgt) pairs match the brute-force quotient as sets")),
        Some(w) => outcome(false, w),
    }
}

fn lambda_infinity() -> Outcome {
    let mut runs = Vec::new();
    for n in 0..=4 {
        runs.push(lambda_infinity_check(&Symmetric, n));
    }
    for n in 0..=6 {
        runs.push(lambda_infinity_check(&Trivial, n));
    }
    runs.push(lambda_infinity_check(&Cactus::new(), 2));
    let failed: Vec<String> = runs
        .iter()
        .filter_map(|r| match r {
            Ok(r) if r.passed() => None,
            Ok(r) => Some(format!("{}({})", r.operad, r.arity)),
            Err(e) => Some(e.to_string()),
        })
        .collect();
    outcome(
        failed.is_empty(),
        if failed.is_empty() {
            format!("{} translation categories contractible with free action", runs.len())
        } else {
            format!("failed: {}", failed.join(", "))
        },
    )
}

fn club_correspondence() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    for r in [
        check_club(&Symmetric, &CheckConfig::exhaustive(4)),
        check_club(&Trivial, &CheckConfig::exhaustive(4)),
    ] {
        match r {
            Ok(r) => {
                ok &= r.passed() && r.undecided == 0;
                notes.push(format!("{} beta {} delta {}", r.operad, r.beta_checked, r.delta_checked));
            }
            Err(e) => {
                ok = false;
                notes.push(e.to_string());
            }
        }
    }
    let cats = [FinCat::discrete(&["a", "b"]), FinCat::cyclic("x", 2), translation(&["p", "q"])];
    let mut squares = 0;
    for x in &cats {
        for n in 0..=3 {
            let r = check_pullback(&Symmetric, n, x);
            ok &= matches!(&r, Ok(r) if r.passed());
            squares += 1;
        }
        ok &= matches!(check_pullback(&Cactus::new(), 2, x), Ok(r) if r.passed());
        squares += 1;
    }
    notes.push(format!("{squares} pullback squares"));
    outcome(ok, notes.join("; "))
}

fn profunctor_lift() -> Outcome {
    let a = Arc::new(arrow());
    let t = Arc::new(translation(&["p", "q"]));
    let d = Arc::new(FinCat::discrete(&["a", "b", "c"]));
    let z = Arc::new(FinCat::cyclic("x", 2));
    let one = Arc::new(translation(&["*"]));
    let g1 = functor(&a, &t, &[("a", "p"), ("b", "q")], &[("f", "p->q")]);
    let g2 = functor(&d, &z, &[("a", "x"), ("b", "x"), ("c", "x")], &[]);
    let k = functor(&t, &one, &[("p", "*"), ("q", "*")], &[("p->q", "*->*"), ("q->p", "*->*")]);
    let l = functor(&one, &t, &[("*", "p")], &[]);

    let mut lifts = 0;
    let mut failure = None;
    for g in [&g1, &g2] {
        let runs = [
            lift_of_representable(g, &Trivial, 3).map(|(lp, rep, map)| check_iso(&lp.prof, &rep, &map)),
            lift_of_representable(g, &Symmetric, 3).map(|(lp, rep, map)| check_iso(&lp.prof, &rep, &map)),
        ];
        for r in runs {
            lifts += 1;
            match r {
                Ok(Ok(())) => {}
                Ok(Err(w)) => failure = failure.or(Some(w)),
                Err(e) => failure = failure.or(Some(e.to_string())),
            }
        }
    }

    let g1p = FinProf::from_functor(&g1);
    let g2p = FinProf::from_functor(&g2);
    let fixtures: Vec<(&str, FinProf, FinProf)> = vec![
        ("id∘G1", FinProf::identity(t.clone()), g1p.clone()),
        ("G1∘id", g1p.clone(), FinProf::identity(a.clone())),
        ("K∘G1", FinProf::from_functor(&k), g1p.clone()),
        ("K∘L", FinProf::from_functor(&k), FinProf::from_functor(&l)),
        ("id∘id on Z/2", FinProf::identity(z.clone()), FinProf::identity(z.clone())),
        ("id∘G2", FinProf::identity(z.clone()), g2p),
    ];
    let mut coends = 0;
    for (name, g, f) in &fixtures {
        coends += 1;
        match prof_compose(g, f) {
            Ok(c) => {
                if c.prof.cardinalities() != coend_sizes(g, f) {
                    failure = failure.or(Some(format!("{name}: cardinalities differ from zigzag orbits")));
                }
            }
            Err(e) => failure = failure.or(Some(format!("{name}: {e}"))),
        }
    }
    match failure {
        None => outcome(true, format!("{lifts} lifts isomorphic to EΛG; {coends} coends match orbit counts")),
        Some(w) => outcome(false, w),
    }
}

fn mutate(doc: &MulticatDoc, label: &str) -> MulticatDoc {
    let mut d = doc.clone();
    let find = |d: &MulticatDoc, outer: &str, inner: &[&str]| {
        d.compose
            .iter()
            .position(|c| c.outer == outer && c.inner == inner)
            .expect("listed composite")
    };
    let other = |d: &MulticatDoc, current: &str| -> String {
        let arity = current.matches(',').count() + usize::from(current != "[]");
        let hom = d.homs.iter().find(|h| h.inputs.len() == arity).expect("hom listed");
        hom.elements.iter().find(|e| *e != current).expect("two elements").clone()
    };
    match label {
        "composition 1" => {
            let i = find(&d, "[2,1]", &["[1]", "[1,2]"]);
            d.compose[i].result = other(&d, &d.compose[i].result);
        }
        "composition 2" => {
            let i = find(&d, "[1,2]", &["[2,1]", "[1]"]);
            d.compose[i].result = other(&d, &d.compose[i].result);
        }
        "composition 3" => {
            let i = find(&d, "[1]", &["[2,1]"]);
            d.compose[i].result = "[1,2]".into();
        }
        "composition 4" => {
            let i = find(&d, "[3,1,2]", &["[1]", "[1]", "[1]"]);
            d.compose.remove(i);
        }
        "action 1" | "action 2" | "action 3" => {
            let (arity, generator) = match label {
                "action 1" => (2, 0),
                "action 2" => (3, 0),
                _ => (3, 1),
            };
            let a = d
                .actions
                .iter_mut()
                .find(|a| a.arity == arity && a.generator == generator)
                .expect("listed action");
            let (key, value) = a.mapping.iter().next().map(|(k, v)| (k.clone(), v.clone())).unwrap();
            let replacement = a.mapping.values().find(|v| **v != value).unwrap().clone();
            a.mapping.insert(key, replacement);
        }
        "identity 1" => {
            d.identities.insert("*".into(), "[1,2]".into());
        }
        "identity 2" => {
            d.identities.insert("*".into(), "[]".into());
        }
        "identity 3" => {
            d.identities.insert("*".into(), "[2,1,3]".into());
        }
        _ => unreachable!(),
    }
    d
}

fn multicategory_validators() -> Outcome {
    let doc = operad_multicat(&Symmetric, 3).expect("renders are distinct");
    let base = validate_multicat(&FinMulticat::from_doc(&doc).unwrap(), &Symmetric);
    if !base.is_valid() {
        return outcome(false, format!("fixture rejected: {}", base.violations[0].witness));
    }
    let labels = [
        "composition 1",
        "composition 2",
        "composition 3",
        "composition 4",
        "action 1",
        "action 2",
        "action 3",
        "identity 1",
        "identity 2",
        "identity 3",
    ];
    let mut missed = Vec::new();
    for label in labels {
        let m = mutate(&doc, label);
        assert_ne!(m, doc, "{label} changed nothing");
        let caught = match FinMulticat::from_doc(&m) {
            Ok(fm) => {
                let r = validate_multicat(&fm, &Symmetric);
                !r.is_valid() && r.violations.iter().all(|v| !v.witness.is_empty())
            }
            Err(e) => !e.to_string().is_empty(),
        };
        if !caught {
            missed.push(label);
        }
    }
    outcome(
        missed.is_empty(),
        if missed.is_empty() {
            format!("fixture valid ({} checks); {} mutations rejected with witnesses", base.checked.values().sum::<u64>(), labels.len())
        } else {
            format!("accepted mutations: {}", missed.join(", "))
        },
    )
}

fn pi_coherent<A: ActionOperad>(inst: &A, gens: &Collection, texts: &[(&str, &str)], seed: u64) -> Result<usize, String> {
    let texts = texts.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect();
    let interp = Interpretation::parse(inst, gens, &texts).map_err(|e| e.to_string())?;
    let corpus = random_terms(gens, 100, 3, 4, seed);
    for t in &corpus {
        let e = eval_term(t, &interp, inst).map_err(|e| e.to_string())?;
        if term_pi(t, gens).map_err(|e| e.to_string())? != inst.pi(&e) {
            return Err(format!("{}: π mismatch on {t}", inst.name()));
        }
    }
    Ok(corpus.len())
}

fn presentation_workflow() -> Outcome {
    let j = Cactus::new();
    let cob = Presentation::coboundary();
    let interp = Interpretation::parse(&j, &cob.gens, &[("σ".to_string(), "s(1,2)".to_string())].into()).unwrap();
    let report = check_presentation(&cob, &interp, &j).unwrap();
    let gens = Collection::new([
        ("σ".to_string(), "[2,1]".parse().unwrap()),
        ("τ".to_string(), "[2,3,1]".parse().unwrap()),
    ]);
    let unit = Collection::new([("ι".to_string(), "[1,2]".parse().unwrap())]);
    let seed = 0xc0de;
    let runs = [
        pi_coherent(&Symmetric, &gens, &[("σ", "[2,1]"), ("τ", "[2,3,1]")], seed),
        pi_coherent(&Braid::new(), &gens, &[("σ", "b1"), ("τ", "b1 b2")], seed),
        pi_coherent(&j, &gens, &[("σ", "s(1,2)"), ("τ", "s(2,3) s(1,3)")], seed),
        pi_coherent(&Trivial, &unit, &[("ι", "e")], seed),
    ];
    let mut terms = 0;
    for r in &runs {
        match r {
            Ok(k) => terms += k,
            Err(w) => return outcome(false, w.clone()),
        }
    }
    outcome(
        report.holds(),
        format!(
            "coboundary presentation in cactus: {}; π-coherent on {terms} terms over 4 instances",
            if report.holds() { "holds" } else { "fails" }
        ),
    )
}

fn braid_instance() -> Outcome {
    let cfg = CheckConfig {
        max_total: 5,
        max_arity: 3,
        max_word_len: 2,
        max_cases: usize::MAX,
        ..Default::default()
    };
    let r = check_axioms(&Braid::new(), &cfg);
    let mut crosses = 0;
    let mut bad = None;
    for a in 0..=5 {
        for b in 0..=5 - a {
            for p in 1..=3 {
                for extra in 0..=1 {
                    let n = p - 1 + a + b + extra;
                    crosses += 1;
                    let c = block_cross(p, a, b, n).unwrap();
                    if braid_pi(&c) != block_swap(p, a, b, n) {
                        bad = bad.or(Some(format!("block_cross({p},{a},{b}) in B{n}")));
                    }
                }
            }
        }
    }
    outcome(
        r.failures() == 0 && r.inconclusive() == 0 && bad.is_none(),
        match bad {
            Some(w) => w,
            None => format!(
                "{} cases, {} failed, {} inconclusive; {crosses} block crossings match block swaps",
                r.checked(),
                r.failures(),
                r.inconclusive()
            ),
        },
    )
}

/// Every report the suite prints, rendered in full.
fn snapshot() -> String {
    let mut out = String::new();
    out += &check_axioms(&Symmetric, &CheckConfig::exhaustive(4)).to_string();
    out += &check_axioms(&Braid::new(), &CheckConfig::default()).to_string();
    out += &check_coboundary(&Cactus::new(), 5).to_string();
    let j = Cactus::new();
    let cob = Presentation::coboundary();
    let interp = Interpretation::parse(&j, &cob.gens, &[("σ".to_string(), "s(1,2)".to_string())].into()).unwrap();
    out += &check_presentation(&cob, &interp, &j).unwrap().to_string();
    let doc = operad_multicat(&Symmetric, 3).unwrap();
    out += &validate_multicat(&FinMulticat::from_doc(&mutate(&doc, "composition 1")).unwrap(), &Symmetric).to_string();
    let z = FinCat::cyclic("x", 2);
    let h = hom_set(&Symmetric, &z, &BorelObject::new(vec![0, 0]), &BorelObject::new(vec![0, 0]), 0);
    for m in &h.morphisms {
        out += &m.render(&Symmetric, &z);
        out.push('\n');
    }
    let t = Arc::new(translation(&["p", "q", "r"]));
    let c = prof_compose(&FinProf::identity(t.clone()), &FinProf::identity(t)).unwrap();
    out += &format!("{:?}", c.prof.cardinalities());
    out
}

fn determinism() -> Outcome {
    let a = snapshot();
    let b = snapshot();
    outcome(a == b, format!("two full runs, {} bytes each, identical: {}", a.len(), a == b))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, Option<u64>); 11] = [
        ("symmetric instance, all laws exhaustively", symmetric_axioms, Some(10)),
        ("cactus δ well-defined on relations", cactus_well_defined, Some(60)),
        ("coboundary laws in the cactus operad", coboundary_laws, Some(60)),
        ("Borel hom-sets against the quotient oracle", borel_hom_sets, None),
        ("EΛ(n) contractible with free action", lambda_infinity, None),
        ("club round trip and pullback squares", club_correspondence, None),
        ("profunctor lift and coend composition", profunctor_lift, None),
        ("multicategory validators and mutations", multicategory_validators, None),
        ("presentation workflow and π-coherence", presentation_workflow, None),
        ("braid instance and block crossings", braid_instance, None),
        ("byte-identical reports across runs", determinism, None),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(run));
        let elapsed = start.elapsed();
        let (mut ok, mut detail) = match result {
            Ok(o) => (o.ok, o.detail),
            Err(e) => {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                (false, format!("panicked: {msg}"))
            }
        };
        if let Some(secs) = limit {
            if elapsed > Duration::from_secs(*secs) {
                ok = false;
                detail += &format!("; over the {secs}s limit");
            }
        }
        if !ok {
            failed += 1;
        }
        println!(
            "{} criterion {:>2}: {name}: {detail} [{:.2}s]",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
