//! Family matchings and polycomposition by repeated leaf peeling.

use std::collections::HashSet;

use super::{composite_type, permute, PolyError, Polycategory, PortSide};
use crate::fincard::{is_suitable_span, Bijection, FinMap, Span};

/// One paired position: output `out` of `fs[f]` is plugged into input
/// `inp` of `gs[g]`. All indices are 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pairing {
    pub f: usize,
    pub out: usize,
    pub g: usize,
    pub inp: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyMatching<M> {
    pub fs: Vec<M>,
    pub gs: Vec<M>,
    pub pairs: Vec<Pairing>,
}

impl<M: Clone> FamilyMatching<M> {
    pub fn new(fs: Vec<M>, gs: Vec<M>, pairs: Vec<Pairing>) -> Self {
        FamilyMatching { fs, gs, pairs }
    }

    pub fn vertex_count(&self) -> usize {
        self.fs.len() + self.gs.len()
    }

    /// True when every output of `fs` and every input of `gs` is paired.
    pub fn is_full<P: Polycategory<Map = M>>(&self, p: &P) -> bool {
        let outs: usize = self.fs.iter().map(|f| p.cod(f).len()).sum();
        let ins: usize = self.gs.iter().map(|g| p.dom(g).len()).sum();
        self.pairs.len() == outs && self.pairs.len() == ins
    }

    fn check_typed<P: Polycategory<Map = M>>(&self, p: &P) -> Result<(), PolyError> {
        let mut outs = HashSet::new();
        let mut ins = HashSet::new();
        for q in &self.pairs {
            let (Some(f), Some(g)) = (self.fs.get(q.f), self.gs.get(q.g)) else {
                return Err(PolyError::IllTyped(format!("pairing {q:?} names a missing map")));
            };
            let (fc, gd) = (p.cod(f), p.dom(g));
            if q.out >= fc.len() || q.inp >= gd.len() {
                return Err(PolyError::IllTyped(format!("pairing {q:?} is out of range")));
            }
            if fc[q.out] != gd[q.inp] {
                return Err(PolyError::CutMismatch {
                    left: fc[q.out].clone(),
                    right: gd[q.inp].clone(),
                });
            }
            if !outs.insert((q.f, q.out)) || !ins.insert((q.g, q.inp)) {
                return Err(PolyError::IllTyped(format!("pairing {q:?} reuses a position")));
            }
        }
        Ok(())
    }
}

/// The graph of a matching as a span `j ← l → k`: each pair goes to the
/// index of its `f` and of its `g`.
pub fn family_matching_span<P: Polycategory>(p: &P, fm: &FamilyMatching<P::Map>) -> Result<Span, PolyError> {
    fm.check_typed(p)?;
    let left = FinMap::new(fm.pairs.iter().map(|q| q.f + 1).collect(), fm.fs.len()).expect("indices checked");
    let right = FinMap::new(fm.pairs.iter().map(|q| q.g + 1).collect(), fm.gs.len()).expect("indices checked");
    Ok(Span::new(left, right).expect("common apex"))
}

pub fn is_suitable_matching<P: Polycategory>(p: &P, fm: &FamilyMatching<P::Map>) -> Result<bool, PolyError> {
    Ok(is_suitable_span(&family_matching_span(p, fm)?))
}

/// A port's origin: which map of a family, which side, which position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label {
    pub map: usize,
    pub side: PortSide,
    pub pos: usize,
}

impl Label {
    pub fn dom(map: usize, pos: usize) -> Self {
        Label {
            map,
            side: PortSide::Dom,
            pos,
        }
    }

    pub fn cod(map: usize, pos: usize) -> Self {
        Label {
            map,
            side: PortSide::Cod,
            pos,
        }
    }
}

/// A map whose boundary ports remember where they came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tracked<M> {
    pub map: M,
    pub dom: Vec<Label>,
    pub cod: Vec<Label>,
}

impl<M: Clone> Tracked<M> {
    /// Labels `map`'s ports as positions of map number `index`.
    pub fn leaf<P: Polycategory<Map = M>>(p: &P, map: M, index: usize) -> Self {
        let dom = (0..p.dom(&map).len()).map(|k| Label::dom(index, k)).collect();
        let cod = (0..p.cod(&map).len()).map(|k| Label::cod(index, k)).collect();
        Tracked { map, dom, cod }
    }

    /// Relabels after `exchange(map, σ, τ)`.
    pub fn exchanged<P: Polycategory<Map = M>>(&self, p: &P, sigma: &Bijection, tau: &Bijection) -> Result<Self, PolyError> {
        Ok(Tracked {
            map: p.exchange(&self.map, sigma, tau)?,
            dom: permute(&self.dom, sigma),
            cod: permute(&self.cod, tau),
        })
    }
}

pub(crate) fn tracked_compose<P: Polycategory>(
    p: &P,
    g: &Tracked<P::Map>,
    f: &Tracked<P::Map>,
    cut: (usize, usize),
) -> Result<Tracked<P::Map>, PolyError> {
    composite_type(p, &g.map, &f.map, cut)?;
    let map = p.compose(&g.map, &f.map, cut)?;
    Ok(Tracked {
        map,
        dom: super::splice(&g.dom, cut.1, &f.dom),
        cod: super::splice(&f.cod, cut.0, &g.cod),
    })
}

/// Exchanges `t` so that its ports carry the labels `dom`, `cod` in order.
pub(crate) fn align<P: Polycategory>(
    p: &P,
    t: &Tracked<P::Map>,
    dom: &[Label],
    cod: &[Label],
) -> Result<P::Map, PolyError> {
    let sigma = positions(&t.dom, dom)?;
    let tau = positions(&t.cod, cod)?;
    p.exchange(&t.map, &sigma, &tau)
}

fn positions(have: &[Label], want: &[Label]) -> Result<Bijection, PolyError> {
    if have.len() != want.len() {
        return Err(PolyError::PermSize {
            got: want.len(),
            want: have.len(),
        });
    }
    let idx: Option<Vec<usize>> = want.iter().map(|l| have.iter().position(|h| h == l)).collect();
    let idx = idx.ok_or_else(|| PolyError::IllTyped("boundary labels differ".into()))?;
    Ok(Bijection::from_zero_based(idx))
}

/// Vertex ids: `fs[a]` is `a`, `gs[b]` is `j + b`.
struct Peeler<M> {
    nodes: Vec<Option<Tracked<M>>>,
    owner: Vec<usize>,
    edges: Vec<(Pairing, bool)>,
    j: usize,
}

impl<M: Clone> Peeler<M> {
    fn new<P: Polycategory<Map = M>>(p: &P, fm: &FamilyMatching<M>) -> Self {
        let j = fm.fs.len();
        let nodes = fm
            .fs
            .iter()
            .chain(&fm.gs)
            .enumerate()
            .map(|(v, m)| Some(Tracked::leaf(p, m.clone(), v)))
            .collect();
        Peeler {
            nodes,
            owner: (0..fm.vertex_count()).collect(),
            edges: fm.pairs.iter().map(|&q| (q, true)).collect(),
            j,
        }
    }

    fn ends(&self, q: &Pairing) -> (usize, usize) {
        (self.owner[q.f], self.owner[self.j + q.g])
    }

    fn live_nodes(&self) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&v| self.nodes[v].is_some()).collect()
    }

    fn incident(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&e| self.edges[e].1 && {
                let (a, b) = self.ends(&self.edges[e].0);
                a == v || b == v
            })
            .collect()
    }

    fn leaves(&self) -> Vec<usize> {
        let live = self.live_nodes();
        if live.len() < 2 {
            return Vec::new();
        }
        live.into_iter().filter(|&v| self.incident(v).len() == 1).collect()
    }

    /// Composes the leaf `v` into its unique neighbour.
    fn peel<P: Polycategory<Map = M>>(&mut self, p: &P, v: usize) -> Result<(), PolyError> {
        let inc = self.incident(v);
        if inc.len() != 1 {
            return Err(PolyError::Unsuitable);
        }
        let e = inc[0];
        let q = self.edges[e].0;
        let (fv, gv) = self.ends(&q);
        let w = if fv == v { gv } else { fv };
        let out = Label::cod(q.f, q.out);
        let inp = Label::dom(self.j + q.g, q.inp);
        let fnode = self.nodes[fv].as_ref().expect("live node");
        let gnode = self.nodes[gv].as_ref().expect("live node");
        let i = fnode.cod.iter().position(|l| *l == out).expect("label present");
        let jj = gnode.dom.iter().position(|l| *l == inp).expect("label present");
        let merged = tracked_compose(p, gnode, fnode, (i, jj))?;
        self.nodes[v] = None;
        self.nodes[w] = Some(merged);
        for o in self.owner.iter_mut() {
            if *o == v {
                *o = w;
            }
        }
        self.edges[e].1 = false;
        Ok(())
    }

    fn finish<P: Polycategory<Map = M>>(mut self, p: &P) -> Result<M, PolyError> {
        let live = self.live_nodes();
        if live.len() != 1 {
            return Err(PolyError::Unsuitable);
        }
        let t = self.nodes[live[0]].take().expect("live node");
        let j = self.j;
        let mut dom = t.dom.clone();
        dom.sort();
        let mut cod = t.cod.clone();
        cod.sort_by_key(|l| (l.map < j, l.map, l.pos));
        align(p, &t, &dom, &cod)
    }
}

fn prepare<P: Polycategory>(p: &P, fm: &FamilyMatching<P::Map>) -> Result<(), PolyError> {
    if !is_suitable_matching(p, fm)? {
        return Err(PolyError::Unsuitable);
    }
    Ok(())
}

/// `g ∘_σ f`, peeling the lowest-numbered leaf at each step. The result is
/// normalised by exchange so its domain lists `Λ₁, …, Λⱼ` and then the
/// unmatched inputs of the `g`s, and its codomain lists `Δ₁, …, Δₖ` and then
/// the unmatched outputs of the `f`s.
pub fn polycompose<P: Polycategory>(p: &P, fm: &FamilyMatching<P::Map>) -> Result<P::Map, PolyError> {
    prepare(p, fm)?;
    let mut peeler = Peeler::new(p, fm);
    while let Some(&v) = peeler.leaves().first() {
        peeler.peel(p, v)?;
    }
    peeler.finish(p)
}

/// As [`polycompose`], removing the vertices in `order`.
pub fn polycompose_with_order<P: Polycategory>(
    p: &P,
    fm: &FamilyMatching<P::Map>,
    order: &[usize],
) -> Result<P::Map, PolyError> {
    prepare(p, fm)?;
    let mut peeler = Peeler::new(p, fm);
    for &v in order {
        if !peeler.leaves().contains(&v) {
            return Err(PolyError::IllTyped(format!("vertex {v} is not a leaf at this step")));
        }
        peeler.peel(p, v)?;
    }
    peeler.finish(p)
}

/// Every admissible sequence of leaf removals for a suitable matching.
pub fn peel_orders<M: Clone>(fm: &FamilyMatching<M>) -> Vec<Vec<usize>> {
    let vcount = fm.vertex_count();
    let j = fm.fs.len();
    let edges: Vec<(usize, usize)> = fm.pairs.iter().map(|q| (q.f, j + q.g)).collect();
    let mut out = Vec::new();
    let mut alive = vec![true; vcount];
    let mut used = vec![false; edges.len()];
    let mut cur = Vec::new();
    fn go(
        edges: &[(usize, usize)],
        alive: &mut [bool],
        used: &mut [bool],
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let live = alive.iter().filter(|&&a| a).count();
        if live <= 1 {
            out.push(cur.clone());
            return;
        }
        for v in 0..alive.len() {
            if !alive[v] {
                continue;
            }
            let inc: Vec<usize> = (0..edges.len())
                .filter(|&e| !used[e] && (edges[e].0 == v || edges[e].1 == v))
                .collect();
            if inc.len() != 1 {
                continue;
            }
            let e = inc[0];
            let w = if edges[e].0 == v { edges[e].1 } else { edges[e].0 };
            alive[v] = false;
            used[e] = true;
            let mut renamed = edges.to_vec();
            for x in renamed.iter_mut() {
                if x.0 == v {
                    x.0 = w;
                }
                if x.1 == v {
                    x.1 = w;
                }
            }
            cur.push(v);
            go(&renamed, alive, used, cur, out);
            cur.pop();
            used[e] = false;
            alive[v] = true;
        }
    }
    go(&edges, &mut alive, &mut used, &mut cur, &mut out);
    out
}
