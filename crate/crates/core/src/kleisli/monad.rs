//! Monads on a discrete object in the Kleisli bicategory: a profunctor with
//! a unit picking identities and a multiplication on tensor classes.

use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;

use super::{canonical_representative, is_tree, owners, typed_bijections, ElemId, FormalComposite, HomTable, KleisliError};
use crate::fincard::{Bijection, UnionFind};
use crate::polycat::{polycompose, FamilyMatching, Obj, PolyError, PolyTable, Polycategory, PortSide};
use crate::report::{LawCheck, Report};

/// A multiplication `F ⊗ F → F`, given on formal composites.
pub trait Multiplication: Sync {
    fn multiply(&self, x: &FormalComposite) -> Result<ElemId, KleisliError>;
}

/// Multiplication by grafting the family along the middle matching and
/// applying the outer permutations.
pub struct GraftMultiplication<'a> {
    table: &'a PolyTable,
    hom: HomTable,
}

impl<'a> GraftMultiplication<'a> {
    pub fn new(table: &'a PolyTable) -> Self {
        GraftMultiplication {
            table,
            hom: HomTable::from_poly(table),
        }
    }

    pub fn hom(&self) -> &HomTable {
        &self.hom
    }
}

impl Multiplication for GraftMultiplication<'_> {
    fn multiply(&self, x: &FormalComposite) -> Result<ElemId, KleisliError> {
        let fm = FamilyMatching::new(x.fs.clone(), x.gs.clone(), x.pairs(&self.hom, &self.hom));
        let r = polycompose(self.table, &fm)?;
        Ok(self.table.exchange(&r, &x.sigma.inverse(), &x.upsilon)?)
    }
}

/// A multiplication with its value replaced on chosen classes.
pub struct OverriddenMultiplication<'a, M> {
    base: &'a M,
    hom: &'a HomTable,
    overrides: HashMap<FormalComposite, ElemId>,
    types: HashSet<(Vec<Obj>, Vec<Obj>)>,
}

impl<'a, M: Multiplication> OverriddenMultiplication<'a, M> {
    pub fn new(base: &'a M, hom: &'a HomTable) -> Self {
        OverriddenMultiplication {
            base,
            hom,
            overrides: HashMap::new(),
            types: HashSet::new(),
        }
    }

    /// Sends the whole class of `x` to `value`.
    pub fn set(&mut self, x: &FormalComposite, value: ElemId) {
        self.types.insert(outer_type(self.hom, self.hom, x));
        self.overrides.insert(canonical_representative(self.hom, self.hom, x), value);
    }
}

impl<M: Multiplication> Multiplication for OverriddenMultiplication<'_, M> {
    fn multiply(&self, x: &FormalComposite) -> Result<ElemId, KleisliError> {
        if self.types.contains(&outer_type(self.hom, self.hom, x)) {
            if let Some(&v) = self.overrides.get(&canonical_representative(self.hom, self.hom, x)) {
                return Ok(v);
            }
        }
        self.base.multiply(x)
    }
}

/// `(Γ, Δ)` of a formal composite.
pub fn outer_type(lower: &HomTable, upper: &HomTable, x: &FormalComposite) -> (Vec<Obj>, Vec<Obj>) {
    let psi: Vec<Obj> = x.fs.iter().flat_map(|&f| lower.dom(f).iter().cloned()).collect();
    let phi: Vec<Obj> = x.gs.iter().flat_map(|&g| upper.cod(g).iter().cloned()).collect();
    let inv = x.sigma.inverse();
    let gamma = (0..psi.len()).map(|k| psi[inv.at(k)].clone()).collect();
    let delta = (0..phi.len()).map(|k| phi[x.upsilon.at(k)].clone()).collect();
    (gamma, delta)
}

/// A profunctor with a unit element in each `(x; x)`.
#[derive(Debug, Clone)]
pub struct MonadData {
    pub hom: HomTable,
    pub unit: BTreeMap<Obj, ElemId>,
}

impl MonadData {
    pub fn from_table(t: &PolyTable) -> Result<Self, PolyError> {
        let unit = t
            .objects()
            .iter()
            .map(|x| Ok((x.clone(), t.identity(x)?)))
            .collect::<Result<_, PolyError>>()?;
        Ok(MonadData {
            hom: HomTable::from_poly(t),
            unit,
        })
    }

    fn is_unit(&self, e: ElemId) -> bool {
        self.unit.values().any(|&u| u == e)
    }
}

fn names(h: &HomTable, es: &[ElemId]) -> String {
    format!("[{}]", es.iter().map(|&e| h.name(e)).collect::<Vec<_>>().join(", "))
}

fn describe(h: &HomTable, x: &FormalComposite) -> String {
    format!("σ={} fs={} τ={} gs={} υ={}", x.sigma, names(h, &x.fs), x.tau, names(h, &x.gs), x.upsilon)
}

/// Sequences of `count` elements whose `side` lengths sum to at most `max`.
fn families(h: &HomTable, count: usize, max: usize, side: PortSide) -> Vec<Vec<ElemId>> {
    fn go(h: &HomTable, count: usize, left: usize, side: PortSide, cur: &mut Vec<ElemId>, out: &mut Vec<Vec<ElemId>>) {
        if cur.len() == count {
            out.push(cur.clone());
            return;
        }
        for e in h.elements() {
            let len = match side {
                PortSide::Dom => h.dom(e).len(),
                PortSide::Cod => h.cod(e).len(),
            };
            if len <= left {
                cur.push(e);
                go(h, count, left - len, side, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(h, count, max, side, &mut Vec::new(), &mut out);
    out
}

fn concat(es: &[ElemId], f: impl Fn(ElemId) -> Vec<Obj>) -> Vec<Obj> {
    es.iter().flat_map(|&e| f(e)).collect()
}

/// Formal composites with identity outer permutations, `|Γ|, |Δ| ≤ L` and at
/// most `max_vertices` members.
fn trees(h: &HomTable, max_vertices: usize) -> Vec<FormalComposite> {
    let bound = h.bound();
    let mut out = Vec::new();
    for total in 1..=max_vertices {
        for k in 0..=total {
            let l = total - k;
            let mut upper: HashMap<Vec<Obj>, Vec<Vec<ElemId>>> = HashMap::new();
            for gs in families(h, l, bound, PortSide::Cod) {
                let mut sig = concat(&gs, |g| h.dom(g).to_vec());
                if sig.len() + 1 != total {
                    continue;
                }
                sig.sort();
                upper.entry(sig).or_default().push(gs);
            }
            for fs in families(h, k, bound, PortSide::Dom) {
                let lam = concat(&fs, |f| h.cod(f).to_vec());
                let mut key = lam.clone();
                key.sort();
                let Some(candidates) = upper.get(&key) else { continue };
                let lam_owner = owners(fs.iter().map(|&f| h.cod(f).len()));
                for gs in candidates {
                    let sig = concat(gs, |g| h.dom(g).to_vec());
                    let sig_owner = owners(gs.iter().map(|&g| h.dom(g).len()));
                    for tau in typed_bijections(&lam, &sig) {
                        if !is_tree(k, l, (0..lam.len()).map(|p| (lam_owner[tau.at(p)].0, sig_owner[p].0))) {
                            continue;
                        }
                        let n = concat(&fs, |f| h.dom(f).to_vec()).len();
                        let p = concat(gs, |g| h.cod(g).to_vec()).len();
                        out.push(FormalComposite {
                            sigma: Bijection::identity(n),
                            fs: fs.clone(),
                            tau,
                            gs: gs.clone(),
                            upsilon: Bijection::identity(p),
                        });
                    }
                }
            }
        }
    }
    out
}

enum Outcome {
    Value(ElemId),
    Skip,
    Fail(String),
}

fn evaluate(h: &HomTable, m: &dyn Multiplication, x: &FormalComposite) -> Outcome {
    match m.multiply(x) {
        Ok(e) => {
            let (gamma, delta) = outer_type(h, h, x);
            if h.dom(e) == gamma.as_slice() && h.cod(e) == delta.as_slice() {
                Outcome::Value(e)
            } else {
                Outcome::Fail(format!("{} is not in ({}; {})", h.name(e), gamma.join(","), delta.join(",")))
            }
        }
        Err(KleisliError::BoundExceeded(_)) | Err(KleisliError::Poly(PolyError::BoundExceeded(_))) => Outcome::Skip,
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

fn exchange_laws(h: &HomTable) -> LawCheck {
    let mut c = LawCheck::new("monad.exchange");
    for e in h.elements() {
        for side in [PortSide::Dom, PortSide::Cod] {
            let len = match side {
                PortSide::Dom => h.dom(e).len(),
                PortSide::Cod => h.cod(e).len(),
            };
            let s = |x: Option<ElemId>, p: usize| x.and_then(|x| h.swap(x, side, p));
            for p in 0..len.saturating_sub(1) {
                let back = s(s(Some(e), p), p);
                c.record(
                    back == Some(e),
                    || format!("{} {:?} s{p}s{p}", h.name(e), side),
                    || format!("{:?}", back.map(|b| h.name(b).to_string())),
                );
                if p + 2 < len {
                    let l = s(s(s(Some(e), p), p + 1), p);
                    let r = s(s(s(Some(e), p + 1), p), p + 1);
                    c.record(
                        l == r && l.is_some(),
                        || format!("{} {:?} braid at {p}", h.name(e), side),
                        || format!("{:?} vs {:?}", l, r),
                    );
                }
                for q in p + 2..len.saturating_sub(1) {
                    let l = s(s(Some(e), p), q);
                    let r = s(s(Some(e), q), p);
                    c.record(
                        l == r && l.is_some(),
                        || format!("{} {:?} s{p}s{q}", h.name(e), side),
                        || format!("{:?} vs {:?}", l, r),
                    );
                }
            }
        }
        for p in 0..h.dom(e).len().saturating_sub(1) {
            for q in 0..h.cod(e).len().saturating_sub(1) {
                let l = h.swap(e, PortSide::Dom, p).and_then(|x| h.swap(x, PortSide::Cod, q));
                let r = h.swap(e, PortSide::Cod, q).and_then(|x| h.swap(x, PortSide::Dom, p));
                c.record(
                    l == r && l.is_some(),
                    || format!("{} dom s{p} cod s{q}", h.name(e)),
                    || format!("{:?} vs {:?}", l, r),
                );
            }
        }
    }
    c
}

fn well_defined(h: &HomTable, m: &dyn Multiplication, xs: &[FormalComposite]) -> LawCheck {
    let parts: Vec<LawCheck> = xs
        .par_iter()
        .map(|x| {
            let mut c = LawCheck::new("monad.well-defined");
            let mx = match evaluate(h, m, x) {
                Outcome::Value(v) => v,
                Outcome::Skip => return c,
                Outcome::Fail(w) => {
                    c.fail(describe(h, x), w);
                    return c;
                }
            };
            for y in super::moves(h, h, x) {
                match evaluate(h, m, &y) {
                    Outcome::Value(my) => c.record(
                        my == mx,
                        || format!("{} ~ {}", describe(h, x), describe(h, &y)),
                        || format!("{} vs {}", h.name(mx), h.name(my)),
                    ),
                    Outcome::Skip => {}
                    Outcome::Fail(w) => c.fail(describe(h, &y), w),
                }
            }
            c
        })
        .collect();
    merge("monad.well-defined", parts)
}

fn unit_laws(d: &MonadData, m: &dyn Multiplication, xs: &[FormalComposite]) -> (LawCheck, LawCheck) {
    let h = &d.hom;
    let mut left = LawCheck::new("monad.unit-left");
    let mut right = LawCheck::new("monad.unit-right");
    for x in xs {
        let upper_units = x.fs.len() == 1 && x.gs.iter().all(|&g| d.is_unit(g));
        let lower_units = x.gs.len() == 1 && x.fs.iter().all(|&f| d.is_unit(f));
        if !upper_units && !lower_units {
            continue;
        }
        let got = evaluate(h, m, x);
        let judge = |c: &mut LawCheck, expected: Option<ElemId>| match &got {
            Outcome::Value(v) => c.record(
                Some(*v) == expected,
                || describe(h, x),
                || format!("{} vs {:?}", h.name(*v), expected.map(|e| h.name(e).to_string())),
            ),
            Outcome::Skip => {}
            Outcome::Fail(w) => c.fail(describe(h, x), w.clone()),
        };
        if upper_units {
            judge(&mut left, h.act(x.fs[0], &x.sigma.inverse(), &x.tau.after(&x.upsilon)));
        }
        if lower_units {
            judge(&mut right, h.act(x.gs[0], &x.sigma.after(&x.tau).inverse(), &x.upsilon));
        }
    }
    (left, right)
}

/// A tree in three layers: `b` is joined to `a` by `t1` (position `p` of the
/// concatenated domains of `b` holds position `t1(p)` of the concatenated
/// codomains of `a`) and `c` to `b` by `t2`.
struct Layers {
    a: Vec<ElemId>,
    b: Vec<ElemId>,
    c: Vec<ElemId>,
    t1: Bijection,
    t2: Bijection,
}

fn layer_instances(h: &HomTable, first: ElemId, max_vertices: usize) -> Vec<Layers> {
    let bound = h.bound();
    let mut out = Vec::new();
    for total in 3..=max_vertices {
        for na in 1..=total - 2 {
            for nb in 1..=total - na - 1 {
                let nc = total - na - nb;
                for rest in families(h, na - 1, bound.saturating_sub(h.dom(first).len()), PortSide::Dom) {
                    if h.dom(first).len() > bound {
                        continue;
                    }
                    let a: Vec<ElemId> = std::iter::once(first).chain(rest).collect();
                    let lam = concat(&a, |e| h.cod(e).to_vec());
                    let a_owner = owners(a.iter().map(|&e| h.cod(e).len()));
                    for b in families(h, nb, lam.len(), PortSide::Dom) {
                        let sig = concat(&b, |e| h.dom(e).to_vec());
                        if sig.len() != lam.len() {
                            continue;
                        }
                        let b_in = owners(b.iter().map(|&e| h.dom(e).len()));
                        let t1s: Vec<Bijection> = typed_bijections(&lam, &sig)
                            .into_iter()
                            .filter(|t| forest(na, nb, (0..sig.len()).map(|p| (a_owner[t.at(p)].0, b_in[p].0))))
                            .collect();
                        if t1s.is_empty() {
                            continue;
                        }
                        let mid = concat(&b, |e| h.cod(e).to_vec());
                        let b_out = owners(b.iter().map(|&e| h.cod(e).len()));
                        for c in families(h, nc, bound, PortSide::Cod) {
                            let sig2 = concat(&c, |e| h.dom(e).to_vec());
                            if sig2.len() != mid.len() {
                                continue;
                            }
                            let c_in = owners(c.iter().map(|&e| h.dom(e).len()));
                            for t2 in typed_bijections(&mid, &sig2) {
                                for t1 in &t1s {
                                    let edges = (0..sig.len())
                                        .map(|p| (a_owner[t1.at(p)].0, na + b_in[p].0))
                                        .chain((0..sig2.len()).map(|p| (na + b_out[t2.at(p)].0, na + nb + c_in[p].0)));
                                    if spanning_tree(total, edges) {
                                        out.push(Layers {
                                            a: a.clone(),
                                            b: b.clone(),
                                            c: c.clone(),
                                            t1: t1.clone(),
                                            t2: t2.clone(),
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn spanning_tree(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> bool {
    let mut uf = UnionFind::new(n);
    let mut count = 0;
    for (u, v) in edges {
        if !uf.union(u, v) {
            return false;
        }
        count += 1;
    }
    count + 1 == n
}

fn forest(k: usize, l: usize, edges: impl Iterator<Item = (usize, usize)>) -> bool {
    let mut uf = UnionFind::new(k + l);
    edges.into_iter().all(|(f, g)| uf.union(f, k + g))
}

/// Labels `(layer member, position)`.
type Lbl = (usize, usize);

/// Composes two adjacent layers joined by `t` component by component.
/// Returns, per component, the formal composite and the labels of its
/// domain and codomain, in order of each component's first member.
fn components(
    h: &HomTable,
    lower: &[ElemId],
    upper: &[ElemId],
    t: &Bijection,
) -> Vec<(FormalComposite, Vec<Lbl>, Vec<Lbl>)> {
    let (k, l) = (lower.len(), upper.len());
    let lo_out = owners(lower.iter().map(|&e| h.cod(e).len()));
    let up_in = owners(upper.iter().map(|&e| h.dom(e).len()));
    let mut uf = UnionFind::new(k + l);
    for p in 0..t.size() {
        uf.union(lo_out[t.at(p)].0, k + up_in[p].0);
    }
    let mut roots: Vec<usize> = Vec::new();
    for v in 0..k + l {
        let r = uf.find(v);
        if !roots.contains(&r) {
            roots.push(r);
        }
    }
    roots
        .into_iter()
        .map(|r| {
            let fs_idx: Vec<usize> = (0..k).filter(|&v| uf.find(v) == r).collect();
            let gs_idx: Vec<usize> = (0..l).filter(|&v| uf.find(k + v) == r).collect();
            let out_lbl: Vec<Lbl> = fs_idx.iter().flat_map(|&i| (0..h.cod(lower[i]).len()).map(move |q| (i, q))).collect();
            let in_lbl: Vec<Lbl> = gs_idx.iter().flat_map(|&j| (0..h.dom(upper[j]).len()).map(move |q| (j, q))).collect();
            let tau = Bijection::from_zero_based(in_lbl.iter().map(|&(j, q)| {
                let global = up_in.iter().position(|&o| o == (j, q)).expect("input label");
                let src = lo_out[t.at(global)];
                out_lbl.iter().position(|&o| o == src).expect("output in component")
            }));
            let dom: Vec<Lbl> = fs_idx.iter().flat_map(|&i| (0..h.dom(lower[i]).len()).map(move |q| (i, q))).collect();
            let cod: Vec<Lbl> = gs_idx.iter().flat_map(|&j| (0..h.cod(upper[j]).len()).map(move |q| (j, q))).collect();
            let x = FormalComposite {
                sigma: Bijection::identity(dom.len()),
                fs: fs_idx.iter().map(|&i| lower[i]).collect(),
                tau,
                gs: gs_idx.iter().map(|&j| upper[j]).collect(),
                upsilon: Bijection::identity(cod.len()),
            };
            (x, dom, cod)
        })
        .collect()
}

/// `σ` with `sorted[k] = labels[σ(k)]`.
fn sorting(labels: &[Lbl]) -> Bijection {
    let mut idx: Vec<usize> = (0..labels.len()).collect();
    idx.sort_by_key(|&i| labels[i]);
    Bijection::from_zero_based(idx)
}

enum Bracketed {
    Value(ElemId),
    Skip,
    Fail(String),
}

fn bracket_lower(h: &HomTable, m: &dyn Multiplication, x: &Layers) -> Bracketed {
    let comps = components(h, &x.a, &x.b, &x.t1);
    let mut values = Vec::new();
    let mut dom = Vec::new();
    let mut cod: Vec<Lbl> = Vec::new();
    for (fc, d, c) in &comps {
        match evaluate(h, m, fc) {
            Outcome::Value(v) => values.push(v),
            Outcome::Skip => return Bracketed::Skip,
            Outcome::Fail(w) => return Bracketed::Fail(w),
        }
        dom.extend(d.iter().copied());
        cod.extend(c.iter().copied());
    }
    let b_out = owners(x.b.iter().map(|&e| h.cod(e).len()));
    let tau = Bijection::from_zero_based((0..x.t2.size()).map(|p| {
        let src = b_out[x.t2.at(p)];
        cod.iter().position(|&o| o == src).expect("middle label")
    }));
    let phi: usize = x.c.iter().map(|&e| h.cod(e).len()).sum();
    let outer = FormalComposite {
        sigma: Bijection::identity(dom.len()),
        fs: values,
        tau,
        gs: x.c.clone(),
        upsilon: Bijection::identity(phi),
    };
    match evaluate(h, m, &outer) {
        Outcome::Value(v) => h
            .act(v, &sorting(&dom), &Bijection::identity(phi))
            .map_or(Bracketed::Fail("exchange undefined".into()), Bracketed::Value),
        Outcome::Skip => Bracketed::Skip,
        Outcome::Fail(w) => Bracketed::Fail(w),
    }
}

fn bracket_upper(h: &HomTable, m: &dyn Multiplication, x: &Layers) -> Bracketed {
    let comps = components(h, &x.b, &x.c, &x.t2);
    let mut values = Vec::new();
    let mut dom: Vec<Lbl> = Vec::new();
    let mut cod = Vec::new();
    for (fc, d, c) in &comps {
        match evaluate(h, m, fc) {
            Outcome::Value(v) => values.push(v),
            Outcome::Skip => return Bracketed::Skip,
            Outcome::Fail(w) => return Bracketed::Fail(w),
        }
        dom.extend(d.iter().copied());
        cod.extend(c.iter().copied());
    }
    let b_in = owners(x.b.iter().map(|&e| h.dom(e).len()));
    let tau = Bijection::from_zero_based(dom.iter().map(|lbl| {
        let global = b_in.iter().position(|o| o == lbl).expect("middle label");
        x.t1.at(global)
    }));
    let psi: usize = x.a.iter().map(|&e| h.dom(e).len()).sum();
    let outer = FormalComposite {
        sigma: Bijection::identity(psi),
        fs: x.a.clone(),
        tau,
        gs: values,
        upsilon: Bijection::identity(cod.len()),
    };
    match evaluate(h, m, &outer) {
        Outcome::Value(v) => h
            .act(v, &Bijection::identity(psi), &sorting(&cod))
            .map_or(Bracketed::Fail("exchange undefined".into()), Bracketed::Value),
        Outcome::Skip => Bracketed::Skip,
        Outcome::Fail(w) => Bracketed::Fail(w),
    }
}

fn associativity(h: &HomTable, m: &dyn Multiplication, max_vertices: usize) -> LawCheck {
    let parts: Vec<LawCheck> = h
        .elements()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|first| {
            let mut c = LawCheck::new("monad.assoc");
            for x in layer_instances(h, first, max_vertices) {
                let inst = || {
                    format!(
                        "A={} B={} C={} t1={} t2={}",
                        names(h, &x.a),
                        names(h, &x.b),
                        names(h, &x.c),
                        x.t1,
                        x.t2
                    )
                };
                match (bracket_lower(h, m, &x), bracket_upper(h, m, &x)) {
                    (Bracketed::Value(l), Bracketed::Value(r)) => {
                        c.record(l == r, inst, || format!("(AB)C = {} but A(BC) = {}", h.name(l), h.name(r)))
                    }
                    (Bracketed::Fail(w), _) | (_, Bracketed::Fail(w)) => c.fail(inst(), w),
                    _ => {}
                }
            }
            c
        })
        .collect();
    merge("monad.assoc", parts)
}

fn merge(tag: &str, parts: Vec<LawCheck>) -> LawCheck {
    let mut c = LawCheck::new(tag);
    for p in parts {
        c.merge(p);
    }
    c
}

/// Checks the exchange action, that `m` is constant on coend classes, both
/// unit laws on composites with at most `max_vertices` members, and
/// associativity on three-layer trees with at most `assoc_vertices`.
pub fn check_monad(d: &MonadData, m: &dyn Multiplication, max_vertices: usize, assoc_vertices: usize) -> Report {
    let h = &d.hom;
    let xs = trees(h, max_vertices);
    let exchange = exchange_laws(h);
    let defined = well_defined(h, m, &xs);
    let (left, right) = unit_laws(d, m, &xs);
    let assoc = associativity(h, m, assoc_vertices);
    Report::new("monad", h.bound(), 0, vec![exchange, defined, left, right, assoc]).with_notes(vec![
        "unit-left compares m(σ, f, τ, units, υ) with f exchanged by (σ⁻¹, τ∘υ)".into(),
        "unit-right compares m(σ, units, τ, g, υ) with g exchanged by ((σ∘τ)⁻¹, υ)".into(),
        "assoc: (AB)C composes the components of the A-B forest first, A(BC) those of the B-C forest; \
         each component and outer composite has identity outer permutations, and both results are \
         exchanged to domain ordered by (A member, position) and codomain by (C member, position)"
            .into(),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{free_table, free_two};

    #[test]
    fn sorting_orders_labels() {
        let s = sorting(&[(1, 0), (0, 1), (0, 0)]);
        assert_eq!(s.values(), &[3, 2, 1]);
    }

    #[test]
    fn single_vertex_composites_multiply_to_themselves() {
        let t = PolyTable::terminal(&["*"], 2);
        let m = GraftMultiplication::new(&t);
        let h = m.hom();
        let mut seen = 0;
        for e in h.elements() {
            let (n, p) = (h.dom(e).len(), h.cod(e).len());
            if n == 0 {
                let x = FormalComposite {
                    sigma: Bijection::identity(0),
                    fs: vec![],
                    tau: Bijection::identity(0),
                    gs: vec![e],
                    upsilon: Bijection::identity(p),
                };
                assert_eq!(m.multiply(&x).unwrap(), e);
                seen += 1;
            }
            if p == 0 {
                let x = FormalComposite {
                    sigma: Bijection::identity(n),
                    fs: vec![e],
                    tau: Bijection::identity(0),
                    gs: vec![],
                    upsilon: Bijection::identity(0),
                };
                assert_eq!(m.multiply(&x).unwrap(), e);
                seen += 1;
            }
        }
        assert!(seen > 0);
    }

    #[test]
    fn free_truncation_passes() {
        let (t, _) = free_table(&free_two(), 3);
        let m = GraftMultiplication::new(&t);
        let r = check_monad(&MonadData::from_table(&t).unwrap(), &m, 3, 4);
        assert!(r.clean, "{}", r.to_text());
        assert!(r.checks.iter().all(|c| c.instances > 0), "{}", r.to_text());
    }
}
