//! The verification suites behind `verify`.

use std::collections::{BTreeSet, VecDeque};
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::coherence::{check_pda_local_monos, check_pdd2, check_pdd3};
use crate::corpus::{free_one, free_table, free_two, random_family};
use crate::fincard::{all_maps, all_spans, induced_spans, is_acyclic, is_connected, pushout, CommutingSquare, Span};
use crate::kleisli::{check_monad, GraftMultiplication, MonadData};
use crate::matchings::{delta1_act, delta1_elements, delta1_project, Action, Matching};
use crate::polycat::{
    check_polycategory_axioms, graft_family, is_suitable_matching, peel_orders, polycompose_with_order, roundtrip_check,
    AxiomTag, DerivedPolycomp, Polycategory, PolyTable,
};
use crate::report::{LawCheck, Report};
use crate::symcat::{enumerate_s2, s2_compose, s2_hom, S2Mor, S2Obj};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Spans,
    Delta1,
    Pdd2,
    Pdd3,
    Pda,
    PolyAxioms,
    Monad,
    Roundtrip,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::Spans,
        Suite::Delta1,
        Suite::Pdd2,
        Suite::Pdd3,
        Suite::Pda,
        Suite::PolyAxioms,
        Suite::Monad,
        Suite::Roundtrip,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Spans => "spans",
            Suite::Delta1 => "delta1",
            Suite::Pdd2 => "pdd2",
            Suite::Pdd3 => "pdd3",
            Suite::Pda => "pda",
            Suite::PolyAxioms => "polyaxioms",
            Suite::Monad => "monad",
            Suite::Roundtrip => "roundtrip",
            Suite::All => "all",
        }
    }

    /// Whether the suite reads polycategory tables.
    pub fn uses_tables(self) -> bool {
        matches!(self, Suite::PolyAxioms | Suite::Monad | Suite::Roundtrip | Suite::All)
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub bound: usize,
    pub seed: u64,
    /// Named tables for the table-driven suites; empty means the built-in corpus.
    pub tables: Vec<(String, PolyTable)>,
}

impl SuiteConfig {
    pub fn new(suite: Suite, bound: usize, seed: u64) -> Self {
        SuiteConfig {
            suite,
            bound,
            seed,
            tables: Vec::new(),
        }
    }
}

/// The clean corpus: the terminal polycategory at `bound` and free
/// truncations at `bound + 1`.
pub fn default_tables(bound: usize) -> Vec<(String, PolyTable)> {
    vec![
        ("terminal".into(), PolyTable::terminal(&["*"], bound)),
        ("free1".into(), free_table(&free_one(), bound + 1).0),
        ("free2".into(), free_table(&free_two(), bound + 1).0),
    ]
}

pub fn run_suite(cfg: &SuiteConfig) -> Report {
    let tables = if cfg.tables.is_empty() { default_tables(cfg.bound) } else { cfg.tables.clone() };
    let per_table = |name: &str, f: &dyn Fn(&PolyTable) -> Report| {
        let parts = tables.iter().map(|(t_name, t)| prefixed(f(t), t_name)).collect();
        Report::combine(name, cfg.bound, cfg.seed, parts)
    };
    let r = match cfg.suite {
        Suite::Spans => check_spans(cfg.bound),
        Suite::Delta1 => check_delta1(cfg.bound),
        Suite::Pdd2 => check_pdd2(cfg.bound),
        Suite::Pdd3 => check_pdd3(cfg.bound),
        Suite::Pda => check_pda_local_monos(cfg.bound),
        Suite::PolyAxioms => {
            let axioms = per_table("polyaxioms", &|t| check_polycategory_axioms(t, &AxiomTag::ALL));
            let random = check_random_polycomposition(200, 5, cfg.seed);
            Report::combine("polyaxioms", cfg.bound, cfg.seed, vec![axioms, random])
        }
        Suite::Monad => per_table("monad", &|t| match MonadData::from_table(t) {
            Ok(d) => check_monad(&d, &GraftMultiplication::new(t), 3, 4),
            Err(e) => {
                let mut c = LawCheck::new("monad.table");
                c.fail("table".into(), e.to_string());
                Report::new("monad", t.bound(), 0, vec![c])
            }
        }),
        Suite::Roundtrip => per_table("roundtrip", &|t| roundtrip_check(t, &DerivedPolycomp::new(t))),
        Suite::All => {
            let parts = Suite::EACH
                .iter()
                .map(|&s| run_suite(&SuiteConfig { suite: s, ..cfg.clone() }))
                .collect();
            Report::combine("all", cfg.bound, cfg.seed, parts)
        }
    };
    Report { seed: cfg.seed, ..r }
}

fn prefixed(mut r: Report, prefix: &str) -> Report {
    for c in &mut r.checks {
        c.tag = format!("{prefix}:{}", c.tag);
    }
    r
}

/// Components of the bipartite multigraph of a span, by breadth-first search.
pub fn bfs_components(s: &Span) -> usize {
    let (n, m) = (s.n(), s.m());
    let mut adj = vec![Vec::new(); n + m];
    for i in 1..=s.apex() {
        let (a, b) = (s.left().apply(i) - 1, n + s.right().apply(i) - 1);
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; n + m];
    let mut count = 0;
    for start in 0..n + m {
        if seen[start] {
            continue;
        }
        count += 1;
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    count
}

/// Whether the multigraph of a span has no cycle, parallel edges counting
/// as a cycle of length two, by depth-first search over edge ids.
pub fn dfs_acyclic(s: &Span) -> bool {
    let (n, m) = (s.n(), s.m());
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n + m];
    for i in 1..=s.apex() {
        let (a, b) = (s.left().apply(i) - 1, n + s.right().apply(i) - 1);
        adj[a].push((b, i));
        adj[b].push((a, i));
    }
    let mut seen = vec![false; n + m];
    for start in 0..n + m {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![(start, 0)];
        while let Some((v, via)) = stack.pop() {
            for &(w, e) in &adj[v] {
                if e == via {
                    continue;
                }
                if seen[w] {
                    return false;
                }
                seen[w] = true;
                stack.push((w, e));
            }
        }
    }
    true
}

/// Pushout sizes, acyclicity and the two-of-three property over every span
/// with `n, k, m ≤ bound`; the pushout criterion over squares with apex
/// sizes up to 3 and cocones of size at most 2.
pub fn check_spans(bound: usize) -> Report {
    let shapes: Vec<(usize, usize, usize)> = (0..=bound)
        .flat_map(|n| (0..=bound).flat_map(move |k| (0..=bound).map(move |m| (n, k, m))))
        .collect();
    let checks = shapes
        .par_iter()
        .map(|&(n, k, m)| {
            let mut comps = LawCheck::new("spans.components");
            let mut acyc = LawCheck::new("spans.acyclic");
            let mut euler = LawCheck::new("spans.two-of-three");
            let mut square = LawCheck::new("spans.pushout-criterion");
            for s in all_spans(n, k, m) {
                let cell = || s.to_string();
                let r = pushout(&s).r;
                let bfs = bfs_components(&s);
                comps.record(r == bfs, cell, || format!("pushout {r}, search {bfs}"));
                let (a, d) = (is_acyclic(&s), dfs_acyclic(&s));
                acyc.record(a == d, cell, || format!("is_acyclic {a}, search {d}"));
                let conds = [d, bfs == 1, n + m == k + 1];
                let held = conds.iter().filter(|&&c| c).count();
                euler.record(held != 2, cell, || format!("acyclic, connected, n + m = k + 1: {conds:?}"));
                if n.max(k).max(m) <= 3 {
                    for r in 0..=2 {
                        for bl in all_maps(n, r) {
                            for br in all_maps(m, r) {
                                if let Ok(sq) = CommutingSquare::new(s.clone(), bl.clone(), br.clone()) {
                                    let all = induced_spans(&sq).iter().all(is_connected);
                                    square.record(sq.is_pushout() == all, cell, || format!("cocone {bl}, {br}"));
                                }
                            }
                        }
                    }
                }
            }
            vec![comps, acyc, euler, square]
        })
        .reduce(Vec::new, |a, b| {
            if a.is_empty() {
                return b;
            }
            a.into_iter()
                .zip(b)
                .map(|(mut x, y)| {
                    x.merge(y);
                    x
                })
                .collect()
        });
    Report::new("spans", bound, 0, checks)
}

fn iso_class(psi: &S2Obj, objects: &[S2Obj]) -> Vec<S2Obj> {
    objects.iter().filter(|o| !s2_hom(psi, o).is_empty()).cloned().collect()
}

/// Morphisms out of `psi` and composable second steps; every pair up to
/// `full` points, automorphisms only beyond.
fn morphism_pairs(psi: &S2Obj, objects: &[S2Obj], full: usize) -> Vec<(S2Mor, S2Mor)> {
    let targets = if psi.n() <= full { iso_class(psi, objects) } else { vec![psi.clone()] };
    let mut out = Vec::new();
    for rho in &targets {
        let firsts = s2_hom(psi, rho);
        for rho2 in &targets {
            let seconds = s2_hom(rho, rho2);
            for g in &firsts {
                for g2 in &seconds {
                    out.push((g.clone(), g2.clone()));
                }
            }
        }
    }
    out
}

/// `δ₁` over all `φ, ψ` with `n, m ≤ bound`: enumeration against a filter
/// over all bijections, the size condition, both actions, their
/// compatibility and the projection.
pub fn check_delta1(bound: usize) -> Report {
    let mut example = LawCheck::new("delta1.example");
    let phi = S2Obj::from_values(vec![1, 1], 1).expect("monotone");
    let count = delta1_elements(&phi, &S2Obj::identity(2)).len();
    example.record(count == 2, || "δ₁(1,1@1; 1,2@2)".into(), || format!("{count} elements"));

    let mut objects: Vec<S2Obj> = Vec::new();
    for n in 0..=bound {
        for m in 0..=bound {
            objects.extend(enumerate_s2(n, m));
        }
    }
    let pairs: Vec<(&S2Obj, &S2Obj)> = objects.iter().flat_map(|a| objects.iter().map(move |b| (a, b))).collect();
    let checks = pairs
        .par_iter()
        .map(|&(phi, psi)| {
            let mut enumeration = LawCheck::new("delta1.enumeration");
            let mut sizes = LawCheck::new("delta1.sizes");
            let mut left = LawCheck::new("delta1.left-action");
            let mut right = LawCheck::new("delta1.right-action");
            let mut both = LawCheck::new("delta1.two-sided");
            let mut proj = LawCheck::new("delta1.projection");
            let cell = || format!("δ₁({phi}; {psi})");
            let elems = delta1_elements(phi, psi);
            if phi.n() == psi.n() {
                let brute: BTreeSet<Matching> = crate::fincard::Bijection::all(phi.n())
                    .filter_map(|f| Matching::new(phi.clone(), psi.clone(), f).ok())
                    .collect();
                let got: BTreeSet<Matching> = elems.iter().cloned().collect();
                enumeration.record(brute == got, cell, || format!("{} enumerated, {} by filter", got.len(), brute.len()));
            }
            if !elems.is_empty() {
                sizes.record(
                    phi.n() == psi.n() && phi.m() + psi.m() == phi.n() + 1,
                    cell,
                    || format!("{} elements", elems.len()),
                );
            }
            if elems.is_empty() {
                return vec![enumeration, sizes, left, right, both, proj];
            }
            let lefts = morphism_pairs(psi, &objects, 3);
            let rights: Vec<(S2Mor, S2Mor)> = morphism_pairs(phi, &objects, 3)
                .into_iter()
                .map(|(g, g2)| (g.inverse(), g2.inverse()))
                .collect();
            for x in &elems {
                let id = delta1_act(Action::Left(&S2Mor::identity(psi)), x).ok();
                left.record(id.as_ref() == Some(x), cell, || format!("identity moves {}", x.f_n));
                for (g, g2) in &lefts {
                    let step = delta1_act(Action::Left(g), x).and_then(|y| delta1_act(Action::Left(g2), &y));
                    let once = s2_compose(g2, g).ok().and_then(|gg| delta1_act(Action::Left(&gg), x).ok());
                    left.record(step.as_ref().ok() == once.as_ref(), cell, || format!("at {} with {}, {}", x.f_n, g.f_n, g2.f_n));
                    if let Ok(y) = delta1_act(Action::Left(g), x) {
                        let want = x.f_n.then(&g.f_n).expect("sizes agree");
                        proj.record(delta1_project(&y) == want, cell, || format!("at {} with {}", x.f_n, g.f_n));
                        proj.record(Matching::new(y.phi.clone(), y.psi.clone(), y.f_n.clone()).is_ok(), cell, || {
                            format!("{} leaves δ₁", y.f_n)
                        });
                    }
                }
                let id = delta1_act(Action::Right(&S2Mor::identity(phi)), x).ok();
                right.record(id.as_ref() == Some(x), cell, || format!("identity moves {}", x.f_n));
                for (h, h2) in &rights {
                    // h: φ' → φ, h2: φ'' → φ'.
                    let step = delta1_act(Action::Right(h), x).and_then(|y| delta1_act(Action::Right(h2), &y));
                    let once = s2_compose(h, h2).ok().and_then(|hh| delta1_act(Action::Right(&hh), x).ok());
                    right.record(step.as_ref().ok() == once.as_ref(), cell, || format!("at {} with {}, {}", x.f_n, h.f_n, h2.f_n));
                    if let Ok(y) = delta1_act(Action::Right(h), x) {
                        let want = h.f_n.then(&x.f_n).expect("sizes agree");
                        proj.record(delta1_project(&y) == want, cell, || format!("at {} with {}", x.f_n, h.f_n));
                    }
                }
                for (g, _) in lefts.iter().take(24) {
                    for (h, _) in rights.iter().take(24) {
                        let a = delta1_act(Action::Left(g), x).and_then(|y| delta1_act(Action::Right(h), &y));
                        let b = delta1_act(Action::Right(h), x).and_then(|y| delta1_act(Action::Left(g), &y));
                        both.record(a.is_ok() && a == b, cell, || format!("at {} with {}, {}", x.f_n, g.f_n, h.f_n));
                    }
                }
            }
            vec![enumeration, sizes, left, right, both, proj]
        })
        .reduce(Vec::new, |a, b| {
            if a.is_empty() {
                return b;
            }
            a.into_iter()
                .zip(b)
                .map(|(mut x, y)| {
                    x.merge(y);
                    x
                })
                .collect()
        });
    let mut all = vec![example];
    all.extend(checks);
    Report::new("delta1", bound, 0, all)
}

/// Random suitable matchings of fresh generators: every peel order gives
/// the grafted composite, with the documented boundary order.
pub fn check_random_polycomposition(samples: usize, max_vertices: usize, seed: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut orders = LawCheck::new("polycompose.peel-order");
    let mut boundary = LawCheck::new("polycompose.boundary");
    for round in 0..samples {
        let (c, fm) = random_family(&mut rng, max_vertices, round % 2 == 1);
        let cell = || format!("sample {round}");
        if is_suitable_matching(&c, &fm) != Ok(true) {
            orders.fail(cell(), "generated matching is not suitable".into());
            continue;
        }
        let oracle = match graft_family(&c, &fm) {
            Ok(t) => t,
            Err(e) => {
                orders.fail(cell(), e.to_string());
                continue;
            }
        };
        for order in peel_orders(&fm) {
            let got = polycompose_with_order(&c, &fm, &order);
            orders.record(got.as_ref() == Ok(&oracle), cell, || format!("order {order:?}"));
        }
        let mut dom = Vec::new();
        for f in &fm.fs {
            dom.extend(c.dom(f));
        }
        for (b, g) in fm.gs.iter().enumerate() {
            for (p, x) in c.dom(g).into_iter().enumerate() {
                if !fm.pairs.iter().any(|q| q.g == b && q.inp == p) {
                    dom.push(x);
                }
            }
        }
        let mut cod = Vec::new();
        for g in &fm.gs {
            cod.extend(c.cod(g));
        }
        for (a, f) in fm.fs.iter().enumerate() {
            for (p, x) in c.cod(f).into_iter().enumerate() {
                if !fm.pairs.iter().any(|q| q.f == a && q.out == p) {
                    cod.push(x);
                }
            }
        }
        boundary.record(c.dom(&oracle) == dom && c.cod(&oracle) == cod, cell, || {
            format!("{:?} → {:?}", c.dom(&oracle), c.cod(&oracle))
        });
    }
    Report::new("polycompose", max_vertices, seed, vec![orders, boundary])
}
