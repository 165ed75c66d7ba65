//! Chains of monotone maps (objects of `Sᵏ1`), their isomorphisms, and
//! coends of composites of profunctors between such groupoids.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use crate::fincard::{Bijection, FinMap, UnionFind};
use crate::kleisli::{coend_quotient, CoendClass};
use crate::matchings::delta1_elements;
use crate::symcat::{lift_bijections, monotone_maps, S2Obj};

/// `s₀ → s₁ → … → s_d` with monotone maps; no levels at all is the
/// terminal category, which has one point.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tower {
    sizes: Vec<usize>,
    maps: Vec<FinMap>,
}

impl Tower {
    pub fn new(sizes: Vec<usize>, maps: Vec<FinMap>) -> Option<Self> {
        let ok = maps.len() + 1 == sizes.len().max(1)
            && maps
                .iter()
                .enumerate()
                .all(|(i, f)| f.dom() == sizes[i] && f.cod() == sizes[i + 1] && f.is_monotone());
        ok.then_some(Tower { sizes, maps })
    }

    pub fn point() -> Self {
        Tower {
            sizes: Vec::new(),
            maps: Vec::new(),
        }
    }

    pub fn from_s2(phi: &S2Obj) -> Self {
        Tower {
            sizes: vec![phi.n(), phi.m()],
            maps: vec![phi.map().clone()],
        }
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn maps(&self) -> &[FinMap] {
        &self.maps
    }

    pub fn levels(&self) -> usize {
        self.sizes.len()
    }

    /// Size of the bottom level; 1 for the point.
    pub fn points(&self) -> usize {
        self.sizes.first().copied().unwrap_or(1)
    }

    /// The composite of all maps as an object of `S²1`.
    pub fn collapsed(&self) -> S2Obj {
        assert!(self.levels() >= 2, "collapsing needs two levels");
        let mut f = self.maps[0].clone();
        for g in &self.maps[1..] {
            f = f.then(g).expect("chain composes");
        }
        S2Obj::new(f).expect("monotone composite")
    }

    pub fn as_s2(&self) -> Option<S2Obj> {
        (self.levels() == 2).then(|| S2Obj::new(self.maps[0].clone()).expect("monotone"))
    }
}

impl fmt::Display for Tower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sizes.is_empty() {
            return write!(f, "pt");
        }
        if self.maps.is_empty() {
            return write!(f, "{}", self.sizes[0]);
        }
        let parts: Vec<String> = self.maps.iter().map(|m| m.to_string()).collect();
        write!(f, "{}", parts.join(";"))
    }
}

impl fmt::Debug for Tower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Every tower with the given level sizes.
pub fn towers(sizes: &[usize]) -> Vec<Tower> {
    if sizes.is_empty() {
        return vec![Tower::point()];
    }
    let mut out = vec![Vec::new()];
    for w in sizes.windows(2) {
        let maps = monotone_maps(w[0], w[1]);
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<FinMap>| {
                maps.iter().map(move |m| {
                    let mut p = prefix.clone();
                    p.push(m.clone());
                    p
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|maps| Tower {
            sizes: sizes.to_vec(),
            maps,
        })
        .collect()
}

/// Isomorphisms `a → b`: one bijection per level, commuting with the maps.
pub fn tower_isos(a: &Tower, b: &Tower) -> Vec<Vec<Bijection>> {
    if a.sizes != b.sizes {
        return Vec::new();
    }
    let d = a.sizes.len();
    if d == 0 {
        return vec![Vec::new()];
    }
    let mut out: Vec<Vec<Bijection>> = Bijection::all(a.sizes[d - 1]).map(|t| vec![t]).collect();
    for level in (0..d - 1).rev() {
        out = out
            .into_iter()
            .flat_map(|above| {
                lift_bijections(&a.maps[level], &b.maps[level], &above[0])
                    .into_iter()
                    .map(move |f| {
                        let mut v = vec![f];
                        v.extend(above.iter().cloned());
                        v
                    })
            })
            .collect();
    }
    out
}

/// One representative per isomorphism class, the least in each.
pub fn skeleton(sizes: &[usize]) -> Vec<Tower> {
    static CACHE: OnceLock<Mutex<HashMap<Vec<usize>, Vec<Tower>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().expect("cache").get(sizes) {
        return v.clone();
    }
    let all = towers(sizes);
    let mut uf = UnionFind::new(all.len());
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            if uf.find(i) != uf.find(j) && !tower_isos(&all[i], &all[j]).is_empty() {
                uf.union(i, j);
            }
        }
    }
    let mut reps: Vec<Tower> = Vec::new();
    let mut seen = Vec::new();
    for i in 0..all.len() {
        let r = uf.find(i);
        if !seen.contains(&r) {
            seen.push(r);
            reps.push(all[i].clone());
        }
    }
    cache.lock().expect("cache").insert(sizes.to_vec(), reps.clone());
    reps
}

fn compose(g: &[Bijection], f: &[Bijection]) -> Vec<Bijection> {
    g.iter().zip(f).map(|(g, f)| f.then(g).expect("sizes agree")).collect()
}

fn invert(f: &[Bijection]) -> Vec<Bijection> {
    f.iter().map(Bijection::inverse).collect()
}

/// Functors between the groupoids of towers used by the coherence paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TowerFunctor {
    /// Drops level `i ≥ 1`, composing the maps around it.
    Forget(usize),
    /// `n ↦ (n →id n)`.
    SEta,
    /// `n ↦ (n →! 1)`.
    EtaS,
    /// `∗ ↦ 1`.
    Eta,
}

impl TowerFunctor {
    pub fn apply(self, t: &Tower) -> Tower {
        match self {
            TowerFunctor::Forget(i) => {
                assert!(i >= 1 && i < t.levels(), "level out of range");
                let mut sizes = t.sizes.clone();
                sizes.remove(i);
                let mut maps = t.maps.clone();
                if i == t.levels() - 1 {
                    maps.pop();
                } else {
                    let merged = maps[i - 1].then(&maps[i]).expect("chain composes");
                    maps.splice(i - 1..=i, [merged]);
                }
                Tower { sizes, maps }
            }
            TowerFunctor::SEta => {
                let n = t.points();
                Tower {
                    sizes: vec![n, n],
                    maps: vec![FinMap::identity(n)],
                }
            }
            TowerFunctor::EtaS => {
                let n = t.points();
                Tower {
                    sizes: vec![n, 1],
                    maps: vec![FinMap::terminal(n)],
                }
            }
            TowerFunctor::Eta => Tower {
                sizes: vec![1],
                maps: Vec::new(),
            },
        }
    }

    pub fn apply_mor(self, f: &[Bijection]) -> Vec<Bijection> {
        match self {
            TowerFunctor::Forget(i) => {
                let mut v = f.to_vec();
                v.remove(i);
                v
            }
            TowerFunctor::SEta => vec![f[0].clone(), f[0].clone()],
            TowerFunctor::EtaS => vec![f[0].clone(), Bijection::identity(1)],
            TowerFunctor::Eta => vec![Bijection::identity(1)],
        }
    }

    /// Sizes of the image, given the source sizes.
    fn image_sizes(self, sizes: &[usize]) -> Vec<usize> {
        match self {
            TowerFunctor::Forget(i) => {
                let mut s = sizes.to_vec();
                s.remove(i);
                s
            }
            TowerFunctor::SEta => vec![sizes[0], sizes[0]],
            TowerFunctor::EtaS => vec![sizes[0], 1],
            TowerFunctor::Eta => vec![1],
        }
    }

    /// Sizes of the source, when the image determines them.
    fn preimage_sizes(self, sizes: &[usize]) -> Option<Vec<usize>> {
        match self {
            TowerFunctor::Forget(_) => None,
            TowerFunctor::SEta | TowerFunctor::EtaS => (sizes.len() == 2).then(|| vec![sizes[0]]),
            TowerFunctor::Eta => Some(Vec::new()),
        }
    }
}

/// A profunctor between groupoids of towers; elements of `(a; b)` are
/// families of bijections, and the bottom one is the projection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layer {
    /// Isomorphisms `F a → b`.
    Rep(TowerFunctor),
    /// Isomorphisms `a → F b`.
    Corep(TowerFunctor),
    /// Suitable matchings `δ₁(a; b)`.
    Delta,
}

impl Layer {
    pub fn elements(self, a: &Tower, b: &Tower) -> Vec<Vec<Bijection>> {
        match self {
            Layer::Rep(f) => tower_isos(&f.apply(a), b),
            Layer::Corep(f) => tower_isos(a, &f.apply(b)),
            Layer::Delta => match (a.as_s2(), b.as_s2()) {
                (Some(x), Some(y)) => delta1_elements(&x, &y).into_iter().map(|m| vec![m.f_n]).collect(),
                _ => Vec::new(),
            },
        }
    }

    /// `v · e` for an isomorphism `v` out of the second argument.
    fn act_left(self, v: &[Bijection], e: &[Bijection]) -> Vec<Bijection> {
        match self {
            Layer::Rep(_) => compose(v, e),
            Layer::Corep(f) => compose(&f.apply_mor(v), e),
            Layer::Delta => vec![e[0].then(&v[0]).expect("sizes agree")],
        }
    }

    /// `e · u` for an isomorphism `u` into the first argument.
    fn act_right(self, e: &[Bijection], u: &[Bijection]) -> Vec<Bijection> {
        match self {
            Layer::Rep(f) => compose(e, &f.apply_mor(u)),
            Layer::Corep(_) => compose(e, u),
            Layer::Delta => vec![u[0].then(&e[0]).expect("sizes agree")],
        }
    }

    fn forward_sizes(self, a: &[usize]) -> Option<Vec<usize>> {
        match self {
            Layer::Rep(f) => Some(f.image_sizes(a)),
            Layer::Corep(f) => f.preimage_sizes(a),
            Layer::Delta => (a.len() == 2 && a[0] + 1 >= a[1]).then(|| vec![a[0], a[0] + 1 - a[1]]),
        }
    }

    fn backward_sizes(self, b: &[usize]) -> Option<Vec<usize>> {
        match self {
            Layer::Rep(f) => f.preimage_sizes(b),
            Layer::Corep(f) => Some(f.image_sizes(b)),
            Layer::Delta => (b.len() == 2 && b[0] + 1 >= b[1]).then(|| vec![b[0], b[0] + 1 - b[1]]),
        }
    }
}

/// An element of a composite: the middle objects and one element per layer.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChainElem {
    pub middles: Vec<Tower>,
    pub parts: Vec<Vec<Bijection>>,
}

/// The composite of `layers` at `(a; b)`, with middles drawn from the
/// skeleton, quotiented by the automorphisms of the middles. `None` when
/// the level sizes are inconsistent along the chain, in which case the
/// composite is empty.
pub fn chain_classes(layers: &[Layer], a: &Tower, b: &Tower) -> Option<Vec<CoendClass<ChainElem>>> {
    let k = layers.len();
    let mut sizes: Vec<Option<Vec<usize>>> = vec![None; k + 1];
    sizes[0] = Some(a.sizes.clone());
    sizes[k] = Some(b.sizes.clone());
    for i in 0..k.saturating_sub(1) {
        if let Some(s) = sizes[i].clone() {
            if sizes[i + 1].is_none() {
                sizes[i + 1] = layers[i].forward_sizes(&s);
                if sizes[i + 1].is_none() && layers[i] == Layer::Delta {
                    return None;
                }
            }
        }
    }
    for i in (1..k).rev() {
        if let Some(s) = sizes[i + 1].clone() {
            let back = layers[i].backward_sizes(&s);
            if back.is_none() && layers[i] == Layer::Delta {
                return None;
            }
            match (&sizes[i], back) {
                (None, Some(x)) => sizes[i] = Some(x),
                (Some(x), Some(y)) if *x != y => return None,
                _ => {}
            }
        }
    }
    for i in 0..k {
        if let (Some(s), Some(t)) = (&sizes[i], &sizes[i + 1]) {
            if layers[i].forward_sizes(s).is_some_and(|f| &f != t)
                || layers[i].backward_sizes(t).is_some_and(|b| &b != s)
            {
                return None;
            }
        }
    }
    let middle_sizes: Vec<Vec<usize>> = sizes[1..k].iter().map(|s| s.clone().expect("middle sizes inferred")).collect();

    let mut gens = Vec::new();
    let mut stack: Vec<(Vec<Tower>, Vec<Vec<Bijection>>)> = vec![(Vec::new(), Vec::new())];
    while let Some((mids, parts)) = stack.pop() {
        let i = parts.len();
        let left = if i == 0 { a.clone() } else { mids[i - 1].clone() };
        if i + 1 == k {
            for e in layers[i].elements(&left, b) {
                let mut p = parts.clone();
                p.push(e);
                gens.push(ChainElem {
                    middles: mids.clone(),
                    parts: p,
                });
            }
            continue;
        }
        for mid in skeleton(&middle_sizes[i]) {
            for e in layers[i].elements(&left, &mid) {
                let mut m = mids.clone();
                m.push(mid.clone());
                let mut p = parts.clone();
                p.push(e);
                stack.push((m, p));
            }
        }
    }
    let mut autos: HashMap<Tower, Vec<Vec<Bijection>>> = HashMap::new();
    for g in &gens {
        for t in &g.middles {
            autos.entry(t.clone()).or_insert_with(|| tower_isos(t, t));
        }
    }
    Some(coend_quotient(gens, |x| {
        let mut out = Vec::new();
        for (i, t) in x.middles.iter().enumerate() {
            for u in &autos[t] {
                let mut y = x.clone();
                y.parts[i] = layers[i].act_left(u, &x.parts[i]);
                y.parts[i + 1] = layers[i + 1].act_right(&x.parts[i + 1], &invert(u));
                out.push(y);
            }
        }
        out
    }))
}

/// The composite of the bottom components `n_a → n_b`.
pub fn chain_projection(x: &ChainElem) -> Bijection {
    let mut p = x.parts[0][0].clone();
    for e in &x.parts[1..] {
        p = p.then(&e[0]).expect("sizes agree");
    }
    p
}
