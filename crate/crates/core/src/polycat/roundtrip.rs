//! Passing between binary composition and polycomposition along suitable
//! matchings, and checking that the two passages are mutually inverse.

use std::collections::HashMap;

use itertools::Itertools;
use rayon::prelude::*;

use super::compose::{polycompose, FamilyMatching, Pairing};
use super::table::{MapId, PolyTable};
use super::{composite_type, is_suitable_matching, Obj, PolyError, Polycategory};
use crate::fincard::Bijection;
use crate::report::{LawCheck, Report};

/// Polycomposition along suitable matchings, given as primitive data.
pub trait Polycompositional: Sync {
    type Map;
    fn polycompose(&self, fm: &FamilyMatching<Self::Map>) -> Result<Self::Map, PolyError>;
}

/// Polycomposition computed from binary composition by peeling.
pub struct DerivedPolycomp<'a, P> {
    base: &'a P,
}

impl<'a, P: Polycategory + Sync> DerivedPolycomp<'a, P> {
    pub fn new(base: &'a P) -> Self {
        DerivedPolycomp { base }
    }
}

impl<P: Polycategory + Sync> Polycompositional for DerivedPolycomp<'_, P> {
    type Map = P::Map;

    fn polycompose(&self, fm: &FamilyMatching<P::Map>) -> Result<P::Map, PolyError> {
        polycompose(self.base, fm)
    }
}

/// Derived polycomposition with some results replaced.
pub struct OverriddenPolycomp<'a, P: Polycategory> {
    inner: DerivedPolycomp<'a, P>,
    overrides: HashMap<FamilyMatching<P::Map>, P::Map>,
}

impl<'a, P: Polycategory + Sync> OverriddenPolycomp<'a, P> {
    pub fn new(base: &'a P) -> Self {
        OverriddenPolycomp {
            inner: DerivedPolycomp::new(base),
            overrides: HashMap::new(),
        }
    }

    pub fn set(&mut self, fm: FamilyMatching<P::Map>, result: P::Map) {
        self.overrides.insert(fm, result);
    }
}

impl<P: Polycategory + Sync> Polycompositional for OverriddenPolycomp<'_, P> {
    type Map = P::Map;

    fn polycompose(&self, fm: &FamilyMatching<P::Map>) -> Result<P::Map, PolyError> {
        match self.overrides.get(fm) {
            Some(m) => Ok(m.clone()),
            None => self.inner.polycompose(fm),
        }
    }
}

/// `g ∘_(i,j) f` recovered from polycomposition: `f` is padded with
/// identities on the other inputs of `g`, and `g` with identities on the
/// other outputs of `f`.
pub fn binary_from_poly<P, C>(base: &P, c: &C, g: &P::Map, f: &P::Map, cut: (usize, usize)) -> Result<P::Map, PolyError>
where
    P: Polycategory,
    C: Polycompositional<Map = P::Map> + ?Sized,
{
    composite_type(base, g, f, cut)?;
    let (i, j) = cut;
    let (gd, fc) = (base.dom(g), base.cod(f));
    let ids = |xs: &[Obj]| -> Result<Vec<P::Map>, PolyError> { xs.iter().map(|x| base.identity(x)).collect() };
    let mut fs = ids(&gd[..j])?;
    fs.push(f.clone());
    fs.extend(ids(&gd[j + 1..])?);
    let mut gs = ids(&fc[..i])?;
    gs.push(g.clone());
    gs.extend(ids(&fc[i + 1..])?);
    let mut pairs = Vec::new();
    for q in 0..fc.len() {
        let inp = if q == i { j } else { 0 };
        pairs.push(Pairing { f: j, out: q, g: q, inp });
    }
    for p in 0..gd.len() {
        if p != j {
            pairs.push(Pairing { f: p, out: 0, g: i, inp: p });
        }
    }
    pairs.sort();
    c.polycompose(&FamilyMatching::new(fs, gs, pairs))
}

/// A binary polycategory whose composition is read off a polycomposition.
struct BinaryView<'a, P, C: ?Sized> {
    base: &'a P,
    poly: &'a C,
}

impl<P, C> Polycategory for BinaryView<'_, P, C>
where
    P: Polycategory,
    C: Polycompositional<Map = P::Map> + ?Sized,
{
    type Map = P::Map;

    fn dom(&self, f: &P::Map) -> Vec<Obj> {
        self.base.dom(f)
    }

    fn cod(&self, f: &P::Map) -> Vec<Obj> {
        self.base.cod(f)
    }

    fn identity(&self, x: &Obj) -> Result<P::Map, PolyError> {
        self.base.identity(x)
    }

    fn compose(&self, g: &P::Map, f: &P::Map, cut: (usize, usize)) -> Result<P::Map, PolyError> {
        binary_from_poly(self.base, self.poly, g, f, cut)
    }

    fn exchange(&self, f: &P::Map, sigma: &Bijection, tau: &Bijection) -> Result<P::Map, PolyError> {
        self.base.exchange(f, sigma, tau)
    }
}

/// Every full suitable matching between families of table maps with at
/// most `max_vertices` members in total.
pub fn full_families(t: &PolyTable, max_vertices: usize) -> Vec<FamilyMatching<MapId>> {
    let maps: Vec<MapId> = t.maps().collect();
    let mut out = Vec::new();
    for total in 2..=max_vertices {
        for j in 1..total {
            let k = total - j;
            for fs in (0..j).map(|_| maps.iter().copied()).multi_cartesian_product() {
                let outs: Vec<(usize, usize, Obj)> = fs
                    .iter()
                    .enumerate()
                    .flat_map(|(a, f)| t.cod(f).into_iter().enumerate().map(move |(p, x)| (a, p, x)))
                    .collect();
                if outs.len() != total - 1 {
                    continue;
                }
                for gs in (0..k).map(|_| maps.iter().copied()).multi_cartesian_product() {
                    let ins: Vec<(usize, usize, Obj)> = gs
                        .iter()
                        .enumerate()
                        .flat_map(|(b, g)| t.dom(g).into_iter().enumerate().map(move |(p, x)| (b, p, x)))
                        .collect();
                    if ins.len() != outs.len() {
                        continue;
                    }
                    for perm in (0..ins.len()).permutations(ins.len()) {
                        if outs.iter().zip(&perm).any(|(o, &q)| o.2 != ins[q].2) {
                            continue;
                        }
                        let pairs = outs
                            .iter()
                            .zip(&perm)
                            .map(|(o, &q)| Pairing {
                                f: o.0,
                                out: o.1,
                                g: ins[q].0,
                                inp: ins[q].1,
                            })
                            .collect();
                        let fm = FamilyMatching::new(fs.clone(), gs.clone(), pairs);
                        if is_suitable_matching(t, &fm).unwrap_or(false) {
                            out.push(fm);
                        }
                    }
                }
            }
        }
    }
    out
}

fn binary_instances(t: &PolyTable) -> Vec<(MapId, MapId, (usize, usize))> {
    let mut out = Vec::new();
    for g in t.maps() {
        for f in t.maps() {
            for i in 0..t.cod(&f).len() {
                for j in 0..t.dom(&g).len() {
                    if let Ok((d, c)) = composite_type(t, &g, &f, (i, j)) {
                        if d.len() <= t.bound() && c.len() <= t.bound() {
                            out.push((g, f, (i, j)));
                        }
                    }
                }
            }
        }
    }
    out
}

fn compare(
    t: &PolyTable,
    tag: &str,
    cases: Vec<(String, Result<MapId, PolyError>, Result<MapId, PolyError>)>,
) -> LawCheck {
    let mut check = LawCheck::new(tag);
    for (instance, a, b) in cases {
        match (a, b) {
            (Err(PolyError::BoundExceeded(_)), _) | (_, Err(PolyError::BoundExceeded(_))) => {}
            (Ok(x), Ok(y)) => check.record(x == y, || instance, || format!("{} != {}", t.name(x), t.name(y))),
            (Err(e), _) | (_, Err(e)) => check.fail(instance, e.to_string()),
        }
    }
    check
}

fn describe(t: &PolyTable, fm: &FamilyMatching<MapId>) -> String {
    let names = |xs: &[MapId]| xs.iter().map(|&m| t.name(m).to_string()).collect::<Vec<_>>().join(",");
    let pairs = fm
        .pairs
        .iter()
        .map(|q| format!("{}.{}>{}.{}", q.f, q.out, q.g, q.inp))
        .collect::<Vec<_>>()
        .join(" ");
    format!("fs=[{}] gs=[{}] {}", names(&fm.fs), names(&fm.gs), pairs)
}

/// Checks, over every instance within the bound:
/// binary composition derived from `c` agrees with `b`; polycomposition
/// derived from `b` agrees with `c` (families of at most three maps); and
/// both round trips return to where they started.
pub fn roundtrip_check<C>(b: &PolyTable, c: &C) -> Report
where
    C: Polycompositional<Map = MapId> + ?Sized,
{
    let bins = binary_instances(b);
    let fams = full_families(b, 3);
    let derived = DerivedPolycomp::new(b);
    let view = BinaryView { base: b, poly: c };

    let cases: Vec<_> = bins
        .par_iter()
        .map(|&(g, f, cut)| {
            let instance = format!("{} after {} at {:?}", b.name(g), b.name(f), cut);
            (instance, binary_from_poly(b, c, &g, &f, cut), b.compose(&g, &f, cut))
        })
        .collect();
    let check_a = compare(b, "roundtrip.binary", cases);

    let cases: Vec<_> = fams
        .par_iter()
        .map(|fm| (describe(b, fm), polycompose(b, fm), c.polycompose(fm)))
        .collect();
    let check_b = compare(b, "roundtrip.poly", cases);

    let cases: Vec<_> = bins
        .par_iter()
        .map(|&(g, f, cut)| {
            let instance = format!("{} after {} at {:?}", b.name(g), b.name(f), cut);
            (instance, binary_from_poly(b, &derived, &g, &f, cut), b.compose(&g, &f, cut))
        })
        .collect();
    let check_c = compare(b, "roundtrip.binary-poly-binary", cases);

    let cases: Vec<_> = fams
        .par_iter()
        .map(|fm| (describe(b, fm), polycompose(&view, fm), c.polycompose(fm)))
        .collect();
    let check_d = compare(b, "roundtrip.poly-binary-poly", cases);

    Report::new("roundtrip", b.bound(), 0, vec![check_a, check_b, check_c, check_d])
}
