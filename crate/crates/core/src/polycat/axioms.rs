//! Exhaustive checking of the polycategory laws on a finite table.

use rayon::prelude::*;

use super::compose::{align, tracked_compose, Label, Tracked};
use super::table::{MapId, PolyTable};
use super::{transposition, PolyError, Polycategory, PortSide};
use crate::fincard::Bijection;
use crate::report::{LawCheck, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AxiomTag {
    ExchangeInvolution,
    ExchangeBraid,
    ExchangeCommute,
    UnitLeft,
    UnitRight,
    AssocSequential,
    AssocParallel,
    Equivariance,
}

impl AxiomTag {
    pub const ALL: [AxiomTag; 8] = [
        AxiomTag::ExchangeInvolution,
        AxiomTag::ExchangeBraid,
        AxiomTag::ExchangeCommute,
        AxiomTag::UnitLeft,
        AxiomTag::UnitRight,
        AxiomTag::AssocSequential,
        AxiomTag::AssocParallel,
        AxiomTag::Equivariance,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            AxiomTag::ExchangeInvolution => "exchange.involution",
            AxiomTag::ExchangeBraid => "exchange.braid",
            AxiomTag::ExchangeCommute => "exchange.commute",
            AxiomTag::UnitLeft => "unit.left",
            AxiomTag::UnitRight => "unit.right",
            AxiomTag::AssocSequential => "assoc.sequential",
            AxiomTag::AssocParallel => "assoc.parallel",
            AxiomTag::Equivariance => "equivariance",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        AxiomTag::ALL.into_iter().find(|t| t.as_str() == s)
    }
}

/// Checks each requested law over every instance whose intermediate and
/// final composites stay within the table's bound.
pub fn check_polycategory_axioms(t: &PolyTable, tags: &[AxiomTag]) -> Report {
    let checks = tags
        .iter()
        .map(|&tag| {
            let mut check = LawCheck::new(tag.as_str());
            let parts: Vec<LawCheck> = t
                .maps()
                .collect::<Vec<_>>()
                .into_par_iter()
                .map(|f| {
                    let mut part = LawCheck::new(tag.as_str());
                    run_law(t, tag, f, &mut part);
                    part
                })
                .collect();
            for p in parts {
                check.merge(p);
            }
            check
        })
        .collect();
    Report::new("polyaxioms", t.bound(), 0, checks)
}

fn run_law(t: &PolyTable, tag: AxiomTag, f: MapId, out: &mut LawCheck) {
    match tag {
        AxiomTag::ExchangeInvolution => involution(t, f, out),
        AxiomTag::ExchangeBraid => braid(t, f, out),
        AxiomTag::ExchangeCommute => commute(t, f, out),
        AxiomTag::UnitLeft => unit_left(t, f, out),
        AxiomTag::UnitRight => unit_right(t, f, out),
        AxiomTag::AssocSequential => sequential(t, f, out),
        AxiomTag::AssocParallel => parallel(t, f, out),
        AxiomTag::Equivariance => equivariance(t, f, out),
    }
}

fn side_len(t: &PolyTable, f: MapId, side: PortSide) -> usize {
    match side {
        PortSide::Dom => t.dom(&f).len(),
        PortSide::Cod => t.cod(&f).len(),
    }
}

/// Applies adjacent transpositions `(side, position)` one after another.
fn swaps(t: &PolyTable, f: MapId, word: &[(PortSide, usize)]) -> Result<MapId, String> {
    let mut cur = f;
    for &(side, p) in word {
        cur = t
            .exchange_entry(cur, side, p)
            .ok_or_else(|| format!("no exchange of {} at {side:?} {p}", t.name(cur)))?;
    }
    Ok(cur)
}

fn compare_words(t: &PolyTable, f: MapId, a: &[(PortSide, usize)], b: &[(PortSide, usize)], out: &mut LawCheck) {
    let instance = || format!("{} with {:?} vs {:?}", t.name(f), a, b);
    match (swaps(t, f, a), swaps(t, f, b)) {
        (Ok(x), Ok(y)) => out.record(x == y, instance, || format!("{} != {}", t.name(x), t.name(y))),
        (Err(e), _) | (_, Err(e)) => out.fail(instance(), e),
    }
}

fn involution(t: &PolyTable, f: MapId, out: &mut LawCheck) {
    for side in [PortSide::Dom, PortSide::Cod] {
        for p in 0..side_len(t, f, side).saturating_sub(1) {
            compare_words(t, f, &[(side, p), (side, p)], &[], out);
        }
    }
}

fn braid(t: &PolyTable, f: MapId, out: &mut LawCheck) {
    for side in [PortSide::Dom, PortSide::Cod] {
        for p in 0..side_len(t, f, side).saturating_sub(2) {
            let (a, b) = ((side, p), (side, p + 1));
            compare_words(t, f, &[a, b, a], &[b, a, b], out);
        }
    }
}

fn commute(t: &PolyTable, f: MapId, out: &mut LawCheck) {
    for side in [PortSide::Dom, PortSide::Cod] {
        let n = side_len(t, f, side);
        for p in 0..n.saturating_sub(1) {
            for q in p + 2..n.saturating_sub(1) {
                compare_words(t, f, &[(side, p), (side, q)], &[(side, q), (side, p)], out);
            }
        }
    }
    for p in 0..side_len(t, f, PortSide::Dom).saturating_sub(1) {
        for q in 0..side_len(t, f, PortSide::Cod).saturating_sub(1) {
            let (a, b) = ((PortSide::Dom, p), (PortSide::Cod, q));
            compare_words(t, f, &[a, b], &[b, a], out);
        }
    }
}

fn unit_left(t: &PolyTable, f: MapId, out: &mut LawCheck) {
    for (i, x) in t.cod(&f).iter().enumerate() {
        let instance = || format!("id_{x} after {} at ({i},0)", t.name(f));
        match t.identity(x).and_then(|id| t.compose(&id, &f, (i, 0))) {
            Ok(r) => out.record(r == f, instance, || format!("got {}", t.name(r))),
            Err(e) => out.fail(instance(), e.to_string()),
        }
    }
}

fn unit_right(t: &PolyTable, g: MapId, out: &mut LawCheck) {
    for (j, x) in t.dom(&g).iter().enumerate() {
        let instance = || format!("{} after id_{x} at (0,{j})", t.name(g));
        match t.identity(x).and_then(|id| t.compose(&g, &id, (0, j))) {
            Ok(r) => out.record(r == g, instance, || format!("got {}", t.name(r))),
            Err(e) => out.fail(instance(), e.to_string()),
        }
    }
}

/// Outcome of evaluating both sides of a law.
enum Sides {
    Skip,
    Error(String),
    Both(MapId, MapId),
}

fn eval(r: Result<(MapId, MapId), PolyError>) -> Sides {
    match r {
        Ok((a, b)) => Sides::Both(a, b),
        Err(PolyError::BoundExceeded(_)) => Sides::Skip,
        Err(e) => Sides::Error(e.to_string()),
    }
}

fn settle(t: &PolyTable, sides: Sides, instance: impl FnOnce() -> String, out: &mut LawCheck) {
    match sides {
        Sides::Skip => {}
        Sides::Error(e) => out.fail(instance(), e),
        Sides::Both(a, b) => out.record(a == b, instance, || format!("{} != {}", t.name(a), t.name(b))),
    }
}

fn pos(labels: &[Label], l: Label) -> usize {
    labels.iter().position(|x| *x == l).expect("label present")
}

fn cuts(t: &PolyTable, g: MapId, f: MapId) -> Vec<(usize, usize)> {
    let (fc, gd) = (t.cod(&f), t.dom(&g));
    let mut out = Vec::new();
    for (i, x) in fc.iter().enumerate() {
        for (j, y) in gd.iter().enumerate() {
            if x == y {
                out.push((i, j));
            }
        }
    }
    out
}

/// `f → g → h` along two cuts: `h(gf)` and `(hg)f` agree on the nose.
fn sequential(t: &PolyTable, f: MapId, out: &mut LawCheck) {
    for g in t.maps() {
        for (i, j) in cuts(t, g, f) {
            for h in t.maps() {
                for (k, l) in cuts(t, h, g) {
                    let sides = eval((|| {
                        let (tf, tg, th) = (Tracked::leaf(t, f, 0), Tracked::leaf(t, g, 1), Tracked::leaf(t, h, 2));
                        let gf = tracked_compose(t, &tg, &tf, (i, j))?;
                        let lhs = tracked_compose(t, &th, &gf, (pos(&gf.cod, Label::cod(1, k)), l))?;
                        let hg = tracked_compose(t, &th, &tg, (k, l))?;
                        let rhs = tracked_compose(t, &hg, &tf, (i, pos(&hg.dom, Label::dom(1, j))))?;
                        Ok((lhs.map, rhs.map))
                    })());
                    let instance = || {
                        format!(
                            "f={} g={} h={} cuts=({i},{j}),({k},{l})",
                            t.name(f),
                            t.name(g),
                            t.name(h)
                        )
                    };
                    settle(t, sides, instance, out);
                }
            }
        }
    }
}

/// Two independent cuts, compared after aligning the boundaries by their
/// origins: one map feeding two others, and one map fed by two others.
fn parallel(t: &PolyTable, f: MapId, out: &mut LawCheck) {
    for g in t.maps() {
        for (i1, j1) in cuts(t, g, f) {
            for h in t.maps() {
                for (i2, j2) in cuts(t, h, f) {
                    if i2 == i1 {
                        continue;
                    }
                    let sides = eval((|| {
                        let (tf, tg, th) = (Tracked::leaf(t, f, 0), Tracked::leaf(t, g, 1), Tracked::leaf(t, h, 2));
                        let gf = tracked_compose(t, &tg, &tf, (i1, j1))?;
                        let lhs = tracked_compose(t, &th, &gf, (pos(&gf.cod, Label::cod(0, i2)), j2))?;
                        let hf = tracked_compose(t, &th, &tf, (i2, j2))?;
                        let rhs = tracked_compose(t, &tg, &hf, (pos(&hf.cod, Label::cod(0, i1)), j1))?;
                        Ok((lhs.map, align(t, &rhs, &lhs.dom, &lhs.cod)?))
                    })());
                    let instance = || {
                        format!(
                            "{} feeding {} and {} at ({i1},{j1}),({i2},{j2})",
                            t.name(f),
                            t.name(g),
                            t.name(h)
                        )
                    };
                    settle(t, sides, instance, out);
                }
                for (i2, j2) in cuts(t, g, h) {
                    if j2 == j1 {
                        continue;
                    }
                    let sides = eval((|| {
                        let (tf, tg, th) = (Tracked::leaf(t, f, 0), Tracked::leaf(t, g, 1), Tracked::leaf(t, h, 2));
                        let gf = tracked_compose(t, &tg, &tf, (i1, j1))?;
                        let lhs = tracked_compose(t, &gf, &th, (i2, pos(&gf.dom, Label::dom(1, j2))))?;
                        let gh = tracked_compose(t, &tg, &th, (i2, j2))?;
                        let rhs = tracked_compose(t, &gh, &tf, (i1, pos(&gh.dom, Label::dom(1, j1))))?;
                        Ok((lhs.map, align(t, &rhs, &lhs.dom, &lhs.cod)?))
                    })());
                    let instance = || {
                        format!(
                            "{} fed by {} and {} at ({i1},{j1}),({i2},{j2})",
                            t.name(g),
                            t.name(f),
                            t.name(h)
                        )
                    };
                    settle(t, sides, instance, out);
                }
            }
        }
    }
}

/// Composing after exchanging either factor by an adjacent transposition
/// agrees with exchanging the composite.
fn equivariance(t: &PolyTable, f: MapId, out: &mut LawCheck) {
    for g in t.maps() {
        for (i, j) in cuts(t, g, f) {
            for (which, side) in [(0, PortSide::Dom), (0, PortSide::Cod), (1, PortSide::Dom), (1, PortSide::Cod)] {
                let m = if which == 0 { f } else { g };
                for p in 0..side_len(t, m, side).saturating_sub(1) {
                    let sides = eval((|| {
                        let (tf, tg) = (Tracked::leaf(t, f, 0), Tracked::leaf(t, g, 1));
                        let base = tracked_compose(t, &tg, &tf, (i, j))?;
                        let leaf = if which == 0 { &tf } else { &tg };
                        let (d, c) = (leaf.dom.len(), leaf.cod.len());
                        let (sigma, tau) = match side {
                            PortSide::Dom => (transposition(d, p), Bijection::identity(c)),
                            PortSide::Cod => (Bijection::identity(d), transposition(c, p)),
                        };
                        let moved = leaf.exchanged(t, &sigma, &tau)?;
                        let lhs = if which == 0 {
                            tracked_compose(t, &tg, &moved, (pos(&moved.cod, Label::cod(0, i)), j))?
                        } else {
                            tracked_compose(t, &moved, &tf, (i, pos(&moved.dom, Label::dom(1, j))))?
                        };
                        Ok((lhs.map, align(t, &base, &lhs.dom, &lhs.cod)?))
                    })());
                    let instance = || {
                        format!(
                            "{} after {} at ({i},{j}), swapping {} {side:?} {p}",
                            t.name(g),
                            t.name(f),
                            t.name(m)
                        )
                    };
                    settle(t, sides, instance, out);
                }
            }
        }
    }
}
