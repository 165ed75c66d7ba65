//! The substitution tensor of profunctors over a discrete object set, its
//! unit, and coend quotients by explicit relation closure.

mod monad;

pub use monad::{check_monad, GraftMultiplication, MonadData, Multiplication, OverriddenMultiplication};

use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use itertools::Itertools;
use thiserror::Error;

use crate::fincard::{Bijection, UnionFind};
use crate::polycat::{adjacent_word, Obj, PolyError, PolyTable, Polycategory, PortSide};

pub type ElemId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KleisliError {
    #[error("list length exceeds the bound {0}")]
    BoundExceeded(usize),
    #[error("element {0} has the wrong type")]
    IllTyped(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A profunctor `(SX)ᵒᵖ × SX → Set` truncated at list length `bound`:
/// finitely many named elements, each with a domain and codomain list, and
/// the exchange action by adjacent transpositions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomTable {
    objects: Vec<Obj>,
    bound: usize,
    names: Vec<String>,
    doms: Vec<Vec<Obj>>,
    cods: Vec<Vec<Obj>>,
    exchange: HashMap<(ElemId, PortSide, usize), ElemId>,
}

impl HomTable {
    /// The underlying profunctor of a polycategory table; element ids are
    /// the table's map ids.
    pub fn from_poly(t: &PolyTable) -> Self {
        let mut exchange = HashMap::new();
        for m in t.maps() {
            for (side, len) in [(PortSide::Dom, t.dom(&m).len()), (PortSide::Cod, t.cod(&m).len())] {
                for p in 0..len.saturating_sub(1) {
                    if let Some(r) = t.exchange_entry(m, side, p) {
                        exchange.insert((m, side, p), r);
                    }
                }
            }
        }
        HomTable {
            objects: t.objects().to_vec(),
            bound: t.bound(),
            names: t.maps().map(|m| t.name(m).to_string()).collect(),
            doms: t.maps().map(|m| t.dom(&m)).collect(),
            cods: t.maps().map(|m| t.cod(&m)).collect(),
            exchange,
        }
    }

    /// `I`: one element `∗` in each `(x; x)`.
    pub fn unit(objects: &[&str], bound: usize) -> Self {
        let objects: Vec<Obj> = objects.iter().map(|s| s.to_string()).collect();
        HomTable {
            names: objects.iter().map(|x| format!("*{x}")).collect(),
            doms: objects.iter().map(|x| vec![x.clone()]).collect(),
            cods: objects.iter().map(|x| vec![x.clone()]).collect(),
            objects,
            bound,
            exchange: HashMap::new(),
        }
    }

    /// `count(Γ, Δ)` elements in each hom, permuted by position: the `k`-th
    /// element of `(Γ; Δ)` goes to the `k`-th element of the permuted hom.
    /// `count` must be invariant under permuting either list.
    pub fn from_counts(objects: &[&str], bound: usize, count: impl Fn(&[Obj], &[Obj]) -> usize) -> Self {
        let objects: Vec<Obj> = objects.iter().map(|s| s.to_string()).collect();
        let lists: Vec<Vec<Obj>> = (0..=bound)
            .flat_map(|n| (0..n).map(|_| objects.iter().cloned()).multi_cartesian_product())
            .collect();
        let lists: Vec<Vec<Obj>> = std::iter::once(Vec::new()).chain(lists.into_iter().filter(|l| !l.is_empty())).collect();
        let mut t = HomTable {
            objects,
            bound,
            names: Vec::new(),
            doms: Vec::new(),
            cods: Vec::new(),
            exchange: HashMap::new(),
        };
        let mut index: HashMap<(Vec<Obj>, Vec<Obj>, usize), ElemId> = HashMap::new();
        for d in &lists {
            for c in &lists {
                for k in 0..count(d, c) {
                    index.insert((d.clone(), c.clone(), k), t.names.len());
                    t.names.push(format!("e{}[{}|{}]", k, d.join(","), c.join(",")));
                    t.doms.push(d.clone());
                    t.cods.push(c.clone());
                }
            }
        }
        for ((d, c, k), &e) in &index {
            for p in 0..d.len().saturating_sub(1) {
                let mut d2 = d.clone();
                d2.swap(p, p + 1);
                t.exchange.insert((e, PortSide::Dom, p), index[&(d2, c.clone(), *k)]);
            }
            for p in 0..c.len().saturating_sub(1) {
                let mut c2 = c.clone();
                c2.swap(p, p + 1);
                t.exchange.insert((e, PortSide::Cod, p), index[&(d.clone(), c2, *k)]);
            }
        }
        t
    }

    pub fn objects(&self) -> &[Obj] {
        &self.objects
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn elements(&self) -> impl Iterator<Item = ElemId> {
        0..self.names.len()
    }

    pub fn name(&self, e: ElemId) -> &str {
        &self.names[e]
    }

    pub fn dom(&self, e: ElemId) -> &[Obj] {
        &self.doms[e]
    }

    pub fn cod(&self, e: ElemId) -> &[Obj] {
        &self.cods[e]
    }

    pub fn hom(&self, dom: &[Obj], cod: &[Obj]) -> Vec<ElemId> {
        self.elements().filter(|&e| self.doms[e] == dom && self.cods[e] == cod).collect()
    }

    /// The adjacent transposition at `position` on one side.
    pub fn swap(&self, e: ElemId, side: PortSide, position: usize) -> Option<ElemId> {
        self.exchange.get(&(e, side, position)).copied()
    }

    /// `e` exchanged so its domain is `k ↦ dom[σ(k)]` and codomain
    /// `k ↦ cod[τ(k)]`.
    pub fn act(&self, e: ElemId, sigma: &Bijection, tau: &Bijection) -> Option<ElemId> {
        if sigma.size() != self.doms[e].len() || tau.size() != self.cods[e].len() {
            return None;
        }
        let mut cur = e;
        for p in adjacent_word(sigma) {
            cur = self.swap(cur, PortSide::Dom, p)?;
        }
        for p in adjacent_word(tau) {
            cur = self.swap(cur, PortSide::Cod, p)?;
        }
        Some(cur)
    }
}

/// The unit profunctor's elements at `(Γ; Δ)`: one exactly when both are
/// the same one-object list.
pub fn unit_elements(gamma: &[Obj], delta: &[Obj]) -> usize {
    usize::from(gamma.len() == 1 && gamma == delta)
}

/// The multicategory unit at `(Γ; y)`.
pub fn multi_unit_elements(gamma: &[Obj], y: &Obj) -> usize {
    usize::from(gamma.len() == 1 && &gamma[0] == y)
}

/// `Σ_{σ ∈ S_n} Π_i F(d_i, c_{σ(i)})`, and 0 when the lengths differ.
pub fn lifted_count<T>(f: impl Fn(&T, &T) -> usize, d: &[T], c: &[T]) -> usize {
    if d.len() != c.len() {
        return 0;
    }
    Bijection::all(d.len())
        .map(|s| (0..d.len()).map(|i| f(&d[i], &c[s.at(i)])).product::<usize>())
        .sum()
}

/// An element `Γ →σ Ψ₁…Ψₖ →f Λ₁…Λₖ →τ Σ₁…Σₗ →g Φ₁…Φₗ →υ Δ` of a
/// substitution tensor, with `Ψ[p] = Γ[σ(p)]`, `Σ[p] = Λ[τ(p)]` and
/// `Δ[p] = Φ[υ(p)]` on the concatenated lists. The graph joining `fᵢ` to
/// `gⱼ` once for every paired position is a tree.
///
/// Ordered by `(k, l, fs, gs, σ, τ, υ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FormalComposite {
    pub sigma: Bijection,
    pub fs: Vec<ElemId>,
    pub tau: Bijection,
    pub gs: Vec<ElemId>,
    pub upsilon: Bijection,
}

impl FormalComposite {
    fn key(&self) -> (usize, usize, &[ElemId], &[ElemId], &Bijection, &Bijection, &Bijection) {
        (self.fs.len(), self.gs.len(), &self.fs, &self.gs, &self.sigma, &self.tau, &self.upsilon)
    }

    /// The `(f, out, g, in)` pairs of the middle matching.
    pub fn pairs(&self, lower: &HomTable, upper: &HomTable) -> Vec<crate::polycat::Pairing> {
        let lam = owners(self.fs.iter().map(|&f| lower.cod(f).len()));
        let sig = owners(self.gs.iter().map(|&g| upper.dom(g).len()));
        (0..self.tau.size())
            .map(|p| {
                let (f, out) = lam[self.tau.at(p)];
                let (g, inp) = sig[p];
                crate::polycat::Pairing { f, out, g, inp }
            })
            .collect()
    }
}

impl PartialOrd for FormalComposite {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FormalComposite {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

/// `(member, position)` for every position of a concatenation of blocks.
fn owners(sizes: impl Iterator<Item = usize>) -> Vec<(usize, usize)> {
    sizes.enumerate().flat_map(|(i, n)| (0..n).map(move |p| (i, p))).collect()
}

/// One class of a coend quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoendClass<T> {
    pub representative: T,
    pub size: usize,
}

/// Connected components of the move graph generated from `generators`,
/// each with its least element. Elements reached by moves join the closure.
/// Classes come back sorted by representative.
pub fn coend_quotient<T, F>(generators: Vec<T>, moves: F) -> Vec<CoendClass<T>>
where
    T: Clone + Ord + Hash,
    F: Fn(&T) -> Vec<T>,
{
    let mut index: HashMap<T, usize> = HashMap::new();
    let mut items: Vec<T> = Vec::new();
    let mut queue = VecDeque::new();
    for g in generators {
        if !index.contains_key(&g) {
            index.insert(g.clone(), items.len());
            queue.push_back(items.len());
            items.push(g);
        }
    }
    let mut links = Vec::new();
    while let Some(i) = queue.pop_front() {
        for y in moves(&items[i]) {
            let j = match index.get(&y) {
                Some(&j) => j,
                None => {
                    let j = items.len();
                    index.insert(y.clone(), j);
                    items.push(y);
                    queue.push_back(j);
                    j
                }
            };
            links.push((i, j));
        }
    }
    let mut uf = UnionFind::new(items.len());
    for (i, j) in links {
        uf.union(i, j);
    }
    let mut classes: HashMap<usize, CoendClass<T>> = HashMap::new();
    for (i, item) in items.into_iter().enumerate() {
        let root = uf.find(i);
        classes
            .entry(root)
            .and_modify(|c| {
                c.size += 1;
                if item < c.representative {
                    c.representative = item.clone();
                }
            })
            .or_insert(CoendClass {
                representative: item,
                size: 1,
            });
    }
    let mut out: Vec<CoendClass<T>> = classes.into_values().collect();
    out.sort_by(|a, b| a.representative.cmp(&b.representative));
    out
}

/// `π` on blocks of sizes `sizes` (new block `i` is old block `π(i)`) as a
/// permutation of the concatenation: new position `q` holds old position
/// `B(q)`.
fn block_perm(sizes: &[usize], pi: &Bijection) -> Bijection {
    let starts: Vec<usize> = sizes
        .iter()
        .scan(0, |acc, &s| {
            let here = *acc;
            *acc += s;
            Some(here)
        })
        .collect();
    let mut v = Vec::new();
    for i in 0..sizes.len() {
        let b = pi.at(i);
        v.extend(starts[b]..starts[b] + sizes[b]);
    }
    Bijection::from_zero_based(v)
}

/// The permutation acting by `rho` on block `i` and fixing the rest.
fn local_perm(sizes: &[usize], i: usize, rho: &Bijection) -> Bijection {
    let start: usize = sizes[..i].iter().sum();
    let total: usize = sizes.iter().sum();
    Bijection::from_zero_based((0..total).map(|q| {
        if q >= start && q < start + sizes[i] {
            start + rho.at(q - start)
        } else {
            q
        }
    }))
}

fn transposition(n: usize, p: usize) -> Bijection {
    crate::polycat::transposition(n, p)
}

/// The generating moves of the coend at one formal composite: adjacent
/// reorderings of either family, and adjacent exchanges on either side of
/// any member, with the outer permutations adjusted to match.
pub fn moves(lower: &HomTable, upper: &HomTable, x: &FormalComposite) -> Vec<FormalComposite> {
    let psi: Vec<usize> = x.fs.iter().map(|&f| lower.dom(f).len()).collect();
    let lam: Vec<usize> = x.fs.iter().map(|&f| lower.cod(f).len()).collect();
    let sig: Vec<usize> = x.gs.iter().map(|&g| upper.dom(g).len()).collect();
    let phi: Vec<usize> = x.gs.iter().map(|&g| upper.cod(g).len()).collect();
    let (k, l) = (x.fs.len(), x.gs.len());
    let mut out = Vec::new();
    for i in 0..k.saturating_sub(1) {
        let pi = transposition(k, i);
        let mut fs = x.fs.clone();
        fs.swap(i, i + 1);
        out.push(FormalComposite {
            sigma: x.sigma.after(&block_perm(&psi, &pi)),
            fs,
            tau: block_perm(&lam, &pi).inverse().after(&x.tau),
            gs: x.gs.clone(),
            upsilon: x.upsilon.clone(),
        });
    }
    for i in 0..k {
        let f = x.fs[i];
        for p in 0..psi[i].saturating_sub(1) {
            let Some(f2) = lower.swap(f, PortSide::Dom, p) else { continue };
            let mut fs = x.fs.clone();
            fs[i] = f2;
            out.push(FormalComposite {
                sigma: x.sigma.after(&local_perm(&psi, i, &transposition(psi[i], p))),
                fs,
                ..x.clone()
            });
        }
        for p in 0..lam[i].saturating_sub(1) {
            let Some(f2) = lower.swap(f, PortSide::Cod, p) else { continue };
            let mut fs = x.fs.clone();
            fs[i] = f2;
            out.push(FormalComposite {
                tau: local_perm(&lam, i, &transposition(lam[i], p)).inverse().after(&x.tau),
                fs,
                ..x.clone()
            });
        }
    }
    for j in 0..l.saturating_sub(1) {
        let pi = transposition(l, j);
        let mut gs = x.gs.clone();
        gs.swap(j, j + 1);
        out.push(FormalComposite {
            sigma: x.sigma.clone(),
            fs: x.fs.clone(),
            tau: x.tau.after(&block_perm(&sig, &pi)),
            gs,
            upsilon: block_perm(&phi, &pi).inverse().after(&x.upsilon),
        });
    }
    for j in 0..l {
        let g = x.gs[j];
        for p in 0..sig[j].saturating_sub(1) {
            let Some(g2) = upper.swap(g, PortSide::Dom, p) else { continue };
            let mut gs = x.gs.clone();
            gs[j] = g2;
            out.push(FormalComposite {
                tau: x.tau.after(&local_perm(&sig, j, &transposition(sig[j], p))),
                gs,
                ..x.clone()
            });
        }
        for p in 0..phi[j].saturating_sub(1) {
            let Some(g2) = upper.swap(g, PortSide::Cod, p) else { continue };
            let mut gs = x.gs.clone();
            gs[j] = g2;
            out.push(FormalComposite {
                upsilon: local_perm(&phi, j, &transposition(phi[j], p)).inverse().after(&x.upsilon),
                gs,
                ..x.clone()
            });
        }
    }
    out
}

/// Bijections `s` with `target[p] = source[s(p)]` for every `p`.
fn typed_bijections(source: &[Obj], target: &[Obj]) -> Vec<Bijection> {
    if source.len() != target.len() {
        return Vec::new();
    }
    Bijection::all(source.len())
        .filter(|s| (0..target.len()).all(|p| target[p] == source[s.at(p)]))
        .collect()
}

/// Sequences of `count` elements whose `side` lengths sum to `total`.
fn families(t: &HomTable, count: usize, total: usize, side: PortSide) -> Vec<Vec<ElemId>> {
    fn go(t: &HomTable, count: usize, left: usize, side: PortSide, cur: &mut Vec<ElemId>, out: &mut Vec<Vec<ElemId>>) {
        if cur.len() == count {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for e in t.elements() {
            let len = match side {
                PortSide::Dom => t.dom(e).len(),
                PortSide::Cod => t.cod(e).len(),
            };
            if len <= left {
                cur.push(e);
                go(t, count, left - len, side, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(t, count, total, side, &mut Vec::new(), &mut out);
    out
}

fn is_tree(k: usize, l: usize, edges: impl Iterator<Item = (usize, usize)>) -> bool {
    let mut uf = UnionFind::new(k + l);
    let mut count = 0;
    for (f, g) in edges {
        if !uf.union(f, k + g) {
            return false;
        }
        count += 1;
    }
    count + 1 == k + l
}

/// Every formal composite in `(G ⊗ F)(Γ; Δ)` with at most `max_vertices`
/// members in total; `lower` is `F` and `upper` is `G`.
pub fn formal_composites(
    lower: &HomTable,
    upper: &HomTable,
    gamma: &[Obj],
    delta: &[Obj],
    max_vertices: usize,
) -> Result<Vec<FormalComposite>, KleisliError> {
    let bound = lower.bound().min(upper.bound());
    if gamma.len() > bound || delta.len() > bound {
        return Err(KleisliError::BoundExceeded(bound));
    }
    let mut out = Vec::new();
    for total in 1..=max_vertices {
        let m = total - 1;
        for k in 0..=total {
            let l = total - k;
            for fs in families(lower, k, gamma.len(), PortSide::Dom) {
                let lam: Vec<Obj> = fs.iter().flat_map(|&f| lower.cod(f).iter().cloned()).collect();
                if lam.len() != m {
                    continue;
                }
                let psi: Vec<Obj> = fs.iter().flat_map(|&f| lower.dom(f).iter().cloned()).collect();
                let sigmas = typed_bijections(gamma, &psi);
                if sigmas.is_empty() {
                    continue;
                }
                let lam_owner = owners(fs.iter().map(|&f| lower.cod(f).len()));
                for gs in families(upper, l, delta.len(), PortSide::Cod) {
                    let sig: Vec<Obj> = gs.iter().flat_map(|&g| upper.dom(g).iter().cloned()).collect();
                    if sig.len() != m {
                        continue;
                    }
                    let phi: Vec<Obj> = gs.iter().flat_map(|&g| upper.cod(g).iter().cloned()).collect();
                    let upsilons = typed_bijections(&phi, delta);
                    if upsilons.is_empty() {
                        continue;
                    }
                    let sig_owner = owners(gs.iter().map(|&g| upper.dom(g).len()));
                    for tau in typed_bijections(&lam, &sig) {
                        if !is_tree(k, l, (0..m).map(|p| (lam_owner[tau.at(p)].0, sig_owner[p].0))) {
                            continue;
                        }
                        for sigma in &sigmas {
                            for upsilon in &upsilons {
                                out.push(FormalComposite {
                                    sigma: sigma.clone(),
                                    fs: fs.clone(),
                                    tau: tau.clone(),
                                    gs: gs.clone(),
                                    upsilon: upsilon.clone(),
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The classes of `(G ⊗ F)(Γ; Δ)` among formal composites with at most
/// `max_vertices` members.
pub fn tensor_elements(
    lower: &HomTable,
    upper: &HomTable,
    gamma: &[Obj],
    delta: &[Obj],
    max_vertices: usize,
) -> Result<Vec<CoendClass<FormalComposite>>, KleisliError> {
    let gens = formal_composites(lower, upper, gamma, delta, max_vertices)?;
    Ok(coend_quotient(gens, |x| moves(lower, upper, x)))
}

/// The least element of the class of `x`.
pub fn canonical_representative(lower: &HomTable, upper: &HomTable, x: &FormalComposite) -> FormalComposite {
    coend_quotient(vec![x.clone()], |y| moves(lower, upper, y))
        .into_iter()
        .next()
        .expect("one class")
        .representative
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(v: &[&str]) -> Vec<Obj> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn unit_examples() {
        assert_eq!(unit_elements(&o(&["a"]), &o(&["a"])), 1);
        assert_eq!(unit_elements(&o(&["a", "b"]), &o(&["a", "b"])), 0);
        assert_eq!(unit_elements(&o(&["a"]), &o(&["b"])), 0);
        assert_eq!(multi_unit_elements(&o(&["a"]), &"a".to_string()), 1);
    }

    #[test]
    fn quotient_without_moves_is_discrete() {
        let classes = coend_quotient(vec![3, 1, 2], |_| Vec::new());
        assert_eq!(classes.len(), 3);
        assert_eq!(classes[0].representative, 1);
    }

    #[test]
    fn quotient_merges_along_moves() {
        let classes = coend_quotient(vec![0u32], |&x| if x < 5 { vec![x + 1] } else { vec![] });
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].size, 6);
    }

    #[test]
    fn block_and_local_perms() {
        let b = block_perm(&[1, 2], &transposition(2, 0));
        assert_eq!(b.values(), &[2, 3, 1]);
        let l = local_perm(&[1, 2, 1], 1, &transposition(2, 0));
        assert_eq!(l.values(), &[1, 3, 2, 4]);
    }

    #[test]
    fn lifted_count_is_a_permanent() {
        let f = |a: &usize, b: &usize| if a == b { 2 } else { 1 };
        assert_eq!(lifted_count(f, &[0, 1], &[0, 1]), 2 * 2 + 1);
        assert_eq!(lifted_count(f, &[0], &[0, 1]), 0);
    }

    #[test]
    fn relabelled_middle_merges() {
        let f = HomTable::from_counts(&["*"], 2, |d, c| usize::from(c.len() == 1 && d.len() == 2));
        let one = HomTable::unit(&["*"], 2);
        let star = o(&["*"]);
        let two = o(&["*", "*"]);
        let xs = formal_composites(&f, &one, &two, &star, 2).unwrap();
        assert_eq!(xs.len(), 2);
        let classes = tensor_elements(&f, &one, &two, &star, 2).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].size, 2);
    }
}
