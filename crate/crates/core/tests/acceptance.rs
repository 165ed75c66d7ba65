//! Acceptance run: one PASS/FAIL line per criterion, with its time limit.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use polylaw::cli::{check_delta1, check_random_polycomposition, check_spans};
use polylaw::coherence::{check_pda_local_monos, check_pdd2, check_pdd3, k_classes, pda_cell, Middles, PdaPath, Tower};
use polylaw::corpus::{free_one, free_table, free_two, mutate_composition, mutate_exchange};
use polylaw::fincard::{all_spans, is_acyclic, pushout, Bijection, Span};
use polylaw::kleisli::{check_monad, GraftMultiplication, MonadData};
use polylaw::matchings::{delta1_elements, Matching};
use polylaw::polycat::{
    check_polycategory_axioms, full_families, polycompose, roundtrip_check, AxiomTag, DerivedPolycomp,
    OverriddenPolycomp, PolyTable, Polycategory,
};
use polylaw::report::Report;
use polylaw::symcat::{enumerate_s2, enumerate_s3, S2Obj};

const SPAN_LIMIT: Duration = Duration::from_secs(10);
const DELTA1_LIMIT: Duration = Duration::from_secs(30);
const PDD2_LIMIT: Duration = Duration::from_secs(30);
const PDD3_LIMIT: Duration = Duration::from_secs(120);
const PDA_LIMIT: Duration = Duration::from_secs(120);
const POLY_LIMIT: Duration = Duration::from_secs(60);
const ROUNDTRIP_LIMIT: Duration = Duration::from_secs(60);
const MONAD_LIMIT: Duration = Duration::from_secs(60);

const POLY_SAMPLES: usize = 240;
const POLY_VERTICES: usize = 5;
const POLY_SEED: u64 = 20;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn clean(r: &Report) -> Outcome {
    if !r.clean {
        return Err(format!("report not clean:\n{}", r.to_text()));
    }
    if let Some(c) = r.checks.iter().find(|c| c.instances == 0) {
        return Err(format!("{} ran no instances", c.tag));
    }
    Ok(())
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Components and forest test by edge relaxation, separate from the
/// library's union-find and graph searches.
fn relaxed_components(s: &Span) -> usize {
    let n = s.n();
    let mut label: Vec<usize> = (0..n + s.m()).collect();
    loop {
        let mut changed = false;
        for i in 1..=s.apex() {
            let (a, b) = (s.left().apply(i) - 1, n + s.right().apply(i) - 1);
            let low = label[a].min(label[b]);
            changed |= label[a] != low || label[b] != low;
            label[a] = low;
            label[b] = low;
        }
        if !changed {
            return (0..label.len()).filter(|&v| label[v] == v).count();
        }
    }
}

fn spans() -> Outcome {
    clean(&check_spans(4))?;
    let mut seen = 0;
    for n in 0..=4 {
        for k in 0..=4 {
            for m in 0..=4 {
                for s in all_spans(n, k, m) {
                    let c = relaxed_components(&s);
                    let acyclic = k + c == n + m;
                    ensure(pushout(&s).r == c && is_acyclic(&s) == acyclic, || format!("{s}"))?;
                    let conds = [acyclic, c == 1, n + m == k + 1];
                    ensure(conds.iter().filter(|&&x| x).count() != 2, || format!("two of three fails at {s}"))?;
                    seen += 1;
                }
            }
        }
    }
    ensure(seen > 100_000, || format!("only {seen} spans"))
}

fn brute_delta1(phi: &S2Obj, psi: &S2Obj) -> BTreeSet<Bijection> {
    if phi.n() != psi.n() {
        return BTreeSet::new();
    }
    Bijection::all(phi.n())
        .filter(|f| Matching::new(phi.clone(), psi.clone(), f.clone()).is_ok())
        .collect()
}

fn delta1() -> Outcome {
    let phi = S2Obj::from_values(vec![1, 1], 1).map_err(|e| e.to_string())?;
    let count = delta1_elements(&phi, &S2Obj::identity(2)).len();
    ensure(count == 2, || format!("|δ₁((2→1),(2→2))| = {count}"))?;
    clean(&check_delta1(4))?;
    for n in 0..=4 {
        let objects: Vec<S2Obj> = (0..=4).flat_map(|m| enumerate_s2(n, m)).collect();
        for a in &objects {
            for b in &objects {
                if !brute_delta1(a, b).is_empty() {
                    ensure(a.m() + b.m() == n + 1, || format!("nonempty δ₁({a}; {b})"))?;
                }
            }
        }
    }
    Ok(())
}

fn pdd2() -> Outcome {
    clean(&check_pdd2(4))?;
    for n_phi in 0..=4 {
        for m_phi in 0..=4 {
            for phi in enumerate_s2(n_phi, m_phi) {
                for n in 0..=4 {
                    let want = if m_phi == 1 && n == n_phi { (1..=n).product() } else { 0 };
                    let got = brute_delta1(&phi, &S2Obj::identity(n)).len();
                    ensure(got == want, || format!("δ₁({phi}; id {n}) has {got}, expected {want}"))?;
                }
            }
        }
    }
    Ok(())
}

fn pdd3() -> Outcome {
    let r = check_pdd3(3);
    clean(&r)?;
    for tag in ["pdd3.euler", "pdd3.well-defined", "pdd3.injective", "pdd3.surjective", "pdd3.projection"] {
        ensure(r.check(tag).is_some(), || format!("{tag} missing"))?;
    }
    let mut nonempty = 0;
    for n in 0..=3 {
        for m in 0..=3 {
            for rr in 0..=3 {
                for phi in enumerate_s3(n, m, rr) {
                    for m_rho in 0..=4 {
                        for rho in enumerate_s2(n, m_rho) {
                            let want = brute_delta1(&phi.collapsed(), &rho);
                            let classes = k_classes(&phi, &rho, Middles::Skeleton);
                            ensure(classes.len() == want.len(), || format!("{phi} {rho}"))?;
                            nonempty += usize::from(!want.is_empty());
                        }
                    }
                }
            }
        }
    }
    ensure(nonempty >= 60, || format!("only {nonempty} nonempty cells"))
}

fn pda() -> Outcome {
    let r = check_pda_local_monos(3);
    clean(&r)?;
    ensure(r.checks.len() == 20, || format!("{} checks", r.checks.len()))?;
    let unit = PdaPath::by_tag("pda1").ok_or("pda1 missing")?;
    for m in 0..=3 {
        for n in 0..=3 {
            let a = Tower::new(vec![m], vec![]).ok_or("tower")?;
            let b = Tower::new(vec![n], vec![]).ok_or("tower")?;
            let (w, classes, _) = pda_cell(&unit, &a, &b);
            ensure(w.is_none() && classes == usize::from(m == 1 && n == 1), || format!("K({m}; {n}) has {classes}"))?;
        }
    }
    Ok(())
}

fn polycomposition() -> Outcome {
    let r = check_random_polycomposition(POLY_SAMPLES, POLY_VERTICES, POLY_SEED);
    clean(&r)?;
    let samples = r.check("polycompose.boundary").map_or(0, |c| c.instances);
    ensure(samples >= 200, || format!("{samples} samples"))
}

fn roundtrip() -> Outcome {
    let tables = [
        ("terminal", PolyTable::terminal(&["*"], 4)),
        ("free1", free_table(&free_one(), 4).0),
        ("free2", free_table(&free_two(), 4).0),
    ];
    for (name, t) in &tables {
        clean(&roundtrip_check(t, &DerivedPolycomp::new(t))).map_err(|e| format!("{name}: {e}"))?;
    }
    let t = &tables[2].1;
    let target = full_families(t, 3)
        .into_iter()
        .find(|fm| polycompose(t, fm).is_ok_and(|m| t.hom(&t.dom(&m), &t.cod(&m)).len() > 1))
        .ok_or("no family with a choice")?;
    let right = polycompose(t, &target).map_err(|e| e.to_string())?;
    let wrong = t
        .hom(&t.dom(&right), &t.cod(&right))
        .into_iter()
        .find(|&m| m != right)
        .ok_or("no alternative")?;
    let mut mutated = OverriddenPolycomp::new(t);
    mutated.set(target, wrong);
    ensure(!roundtrip_check(t, &mutated).clean, || "mutation not detected".into())
}

fn monad() -> Outcome {
    let (free2, _) = free_table(&free_two(), 4);
    let tables = vec![
        ("terminal", PolyTable::terminal(&["*"], 3), true),
        ("free1", free_table(&free_one(), 4).0, true),
        ("free2", free2.clone(), true),
        ("free2-mutated", mutate_composition(&free2).ok_or("no mutation")?.0, false),
        ("free2-mutated-exchange", mutate_exchange(&free2).ok_or("no mutation")?.0, false),
    ];
    for (name, t, expect_clean) in &tables {
        let axioms = check_polycategory_axioms(t, &AxiomTag::ALL).clean;
        ensure(axioms == *expect_clean, || format!("{name}: axioms clean = {axioms}"))?;
        let d = MonadData::from_table(t).map_err(|e| e.to_string())?;
        let r = check_monad(&d, &GraftMultiplication::new(t), 3, 4);
        ensure(r.clean == axioms, || format!("{name}:\n{}", r.to_text()))?;
        if !r.clean {
            ensure(r.checks.iter().any(|c| c.violations.iter().any(|v| !v.witness.is_empty())), || {
                format!("{name}: no witness")
            })?;
        }
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("span laws, n, m, k ≤ 4", spans, SPAN_LIMIT),
        ("δ₁ suite, n, m ≤ 4", delta1, DELTA1_LIMIT),
        ("PDD2 unit cells, bound 4", pdd2, PDD2_LIMIT),
        ("PDD3 classes biject with matchings, bound 3", pdd3, PDD3_LIMIT),
        ("PDA local monomorphisms, bound 3", pda, PDA_LIMIT),
        ("random polycomposition, peel-order independent", polycomposition, POLY_LIMIT),
        ("binary and polycompositional roundtrip", roundtrip, ROUNDTRIP_LIMIT),
        ("monad laws agree with axioms", monad, MONAD_LIMIT),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = outcome.and_then(|()| ensure(took < *limit, || format!("took {took:.2?}, limit {limit:?}")));
        match outcome {
            Ok(()) => println!("criterion {}: PASS  {name}  ({took:.2?} / {limit:?})", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}  ({took:.2?} / {limit:?})\n  {e}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
