//! Presentations of `S1`, `S²1` and `S³1`, and the monad structure maps at 1.
//!
//! `S1` is finite cardinals and bijections. An object of `S²1` is a monotone
//! map `φ: n → m` (points partitioned into ordered parts); a morphism is a
//! pair of bijections `(f_n, f_m)` with `ψ ∘ f_n = f_m ∘ φ`. `S³1` is the same
//! one level up: chains `n → m → r` and commuting triples of bijections.

use std::fmt;

use thiserror::Error;

use crate::fincard::{Bijection, Cardinal, FinError, FinMap};

pub type S1Mor = Bijection;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymError {
    #[error(transparent)]
    Fin(#[from] FinError),
    #[error("map {0} is not order-preserving")]
    NotMonotone(FinMap),
    #[error("morphism square does not commute")]
    NotCommuting,
    #[error("cannot compose: target of the first morphism is not the source of the second")]
    EndpointMismatch,
    #[error("monad component {tag:?} expects {expected}")]
    WrongInput { tag: MonadTag, expected: &'static str },
}

/// An object of `S²1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct S2Obj {
    phi: FinMap,
}

impl S2Obj {
    pub fn new(phi: FinMap) -> Result<Self, SymError> {
        if !phi.is_monotone() {
            return Err(SymError::NotMonotone(phi));
        }
        Ok(S2Obj { phi })
    }

    pub fn from_values(values: Vec<usize>, m: Cardinal) -> Result<Self, SymError> {
        S2Obj::new(FinMap::new(values, m)?)
    }

    /// `n → n` by the identity.
    pub fn identity(n: Cardinal) -> Self {
        S2Obj {
            phi: FinMap::identity(n),
        }
    }

    /// `n → 1`.
    pub fn terminal(n: Cardinal) -> Self {
        S2Obj {
            phi: FinMap::terminal(n),
        }
    }

    pub fn n(&self) -> Cardinal {
        self.phi.dom()
    }

    pub fn m(&self) -> Cardinal {
        self.phi.cod()
    }

    pub fn map(&self) -> &FinMap {
        &self.phi
    }

    pub fn fiber_sizes(&self) -> Vec<usize> {
        self.phi.fiber_sizes()
    }

    /// Sorted fiber sizes; two objects are isomorphic iff these agree.
    pub fn fiber_profile(&self) -> Vec<usize> {
        let mut sizes = self.fiber_sizes();
        sizes.sort_unstable();
        sizes
    }
}

impl fmt::Debug for S2Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.phi)
    }
}

impl fmt::Display for S2Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.phi)
    }
}

/// A morphism `φ → ψ` of `S²1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct S2Mor {
    pub src: S2Obj,
    pub tgt: S2Obj,
    pub f_n: Bijection,
    pub f_m: Bijection,
}

impl S2Mor {
    pub fn new(src: S2Obj, tgt: S2Obj, f_n: Bijection, f_m: Bijection) -> Result<Self, SymError> {
        if f_n.size() != src.n() || f_n.size() != tgt.n() || f_m.size() != src.m() || f_m.size() != tgt.m() {
            return Err(SymError::NotCommuting);
        }
        if !commutes(src.map(), tgt.map(), &f_n, &f_m) {
            return Err(SymError::NotCommuting);
        }
        Ok(S2Mor { src, tgt, f_n, f_m })
    }

    pub fn identity(obj: &S2Obj) -> Self {
        S2Mor {
            src: obj.clone(),
            tgt: obj.clone(),
            f_n: Bijection::identity(obj.n()),
            f_m: Bijection::identity(obj.m()),
        }
    }

    pub fn inverse(&self) -> Self {
        S2Mor {
            src: self.tgt.clone(),
            tgt: self.src.clone(),
            f_n: self.f_n.inverse(),
            f_m: self.f_m.inverse(),
        }
    }
}

/// True iff `tgt ∘ bottom_src = top ∘ src`, i.e. `tgt(f_n(i)) = f_m(src(i))`.
pub(crate) fn commutes(src: &FinMap, tgt: &FinMap, f_n: &Bijection, f_m: &Bijection) -> bool {
    (0..src.dom()).all(|i| tgt.at(f_n.at(i)) == f_m.at(src.at(i)))
}

/// All bijections `f` with `tgt ∘ f = top ∘ src`, given the upper-level
/// bijection `top`. Fibers are matched blockwise.
pub(crate) fn lift_bijections(src: &FinMap, tgt: &FinMap, top: &Bijection) -> Vec<Bijection> {
    let n = src.dom();
    if tgt.dom() != n {
        return Vec::new();
    }
    let mut blocks: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for j in 0..src.cod() {
        let from: Vec<usize> = (0..n).filter(|&i| src.at(i) == j).collect();
        let to: Vec<usize> = (0..n).filter(|&i| tgt.at(i) == top.at(j)).collect();
        if from.len() != to.len() {
            return Vec::new();
        }
        if !from.is_empty() {
            blocks.push((from, to));
        }
    }
    let mut out = Vec::new();
    let mut current = vec![usize::MAX; n];
    extend_blocks(&blocks, 0, &mut current, &mut out);
    out
}

fn extend_blocks(
    blocks: &[(Vec<usize>, Vec<usize>)],
    idx: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Bijection>,
) {
    use itertools::Itertools;
    if idx == blocks.len() {
        out.push(Bijection::from_zero_based(current.iter().copied()));
        return;
    }
    let (from, to) = &blocks[idx];
    for perm in to.iter().copied().permutations(to.len()) {
        for (&a, &b) in from.iter().zip(&perm) {
            current[a] = b;
        }
        extend_blocks(blocks, idx + 1, current, out);
    }
}

/// All morphisms `φ → ψ` in `S²1`, sorted lexicographically by `(f_n, f_m)`.
pub fn s2_hom(phi: &S2Obj, psi: &S2Obj) -> Vec<S2Mor> {
    if phi.n() != psi.n() || phi.m() != psi.m() || phi.fiber_profile() != psi.fiber_profile() {
        return Vec::new();
    }
    let src_sizes = phi.fiber_sizes();
    let tgt_sizes = psi.fiber_sizes();
    let mut out = Vec::new();
    for f_m in Bijection::all(phi.m()) {
        if (0..phi.m()).any(|j| src_sizes[j] != tgt_sizes[f_m.at(j)]) {
            continue;
        }
        for f_n in lift_bijections(phi.map(), psi.map(), &f_m) {
            out.push(S2Mor {
                src: phi.clone(),
                tgt: psi.clone(),
                f_n,
                f_m: f_m.clone(),
            });
        }
    }
    out.sort_by(|a, b| (&a.f_n, &a.f_m).cmp(&(&b.f_n, &b.f_m)));
    out
}

/// `g ∘ f`.
pub fn s2_compose(g: &S2Mor, f: &S2Mor) -> Result<S2Mor, SymError> {
    if f.tgt != g.src {
        return Err(SymError::EndpointMismatch);
    }
    Ok(S2Mor {
        src: f.src.clone(),
        tgt: g.tgt.clone(),
        f_n: g.f_n.after(&f.f_n),
        f_m: g.f_m.after(&f.f_m),
    })
}

/// All monotone maps `n → m` in lexicographic order; there are `C(n+m−1, n)`.
pub fn enumerate_s2(n: Cardinal, m: Cardinal) -> Vec<S2Obj> {
    monotone_maps(n, m).into_iter().map(|phi| S2Obj { phi }).collect()
}

pub(crate) fn monotone_maps(n: Cardinal, m: Cardinal) -> Vec<FinMap> {
    fn go(n: usize, m: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<FinMap>) {
        if cur.len() == n {
            out.push(FinMap::new(cur.clone(), m).expect("values in range"));
            return;
        }
        for v in lo..=m {
            cur.push(v);
            go(n, m, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, m, 1, &mut Vec::with_capacity(n), &mut out);
    out
}

/// An object `n →φ₁ m →φ₂ r` of `S³1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct S3Obj {
    phi1: FinMap,
    phi2: FinMap,
}

impl S3Obj {
    pub fn new(phi1: FinMap, phi2: FinMap) -> Result<Self, SymError> {
        if phi1.cod() != phi2.dom() {
            return Err(FinError::Mismatch {
                left_cod: phi1.cod(),
                right_dom: phi2.dom(),
            }
            .into());
        }
        for phi in [&phi1, &phi2] {
            if !phi.is_monotone() {
                return Err(SymError::NotMonotone(phi.clone()));
            }
        }
        Ok(S3Obj { phi1, phi2 })
    }

    pub fn from_values(v1: Vec<usize>, m: Cardinal, v2: Vec<usize>, r: Cardinal) -> Result<Self, SymError> {
        S3Obj::new(FinMap::new(v1, m)?, FinMap::new(v2, r)?)
    }

    pub fn n(&self) -> Cardinal {
        self.phi1.dom()
    }

    pub fn m(&self) -> Cardinal {
        self.phi1.cod()
    }

    pub fn r(&self) -> Cardinal {
        self.phi2.cod()
    }

    pub fn phi1(&self) -> &FinMap {
        &self.phi1
    }

    pub fn phi2(&self) -> &FinMap {
        &self.phi2
    }

    /// `(n →φ₁ m)`, the image under `μ_{S1}`.
    pub fn lower(&self) -> S2Obj {
        S2Obj {
            phi: self.phi1.clone(),
        }
    }

    /// `(n →φ₂φ₁ r)`, the image under `Sμ₁`.
    pub fn collapsed(&self) -> S2Obj {
        S2Obj {
            phi: self.phi1.then(&self.phi2).expect("chain composes"),
        }
    }

    /// `(m →φ₂ r)`.
    pub fn upper(&self) -> S2Obj {
        S2Obj {
            phi: self.phi2.clone(),
        }
    }
}

impl fmt::Debug for S3Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for S3Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", self.phi1, self.phi2)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct S3Mor {
    pub src: S3Obj,
    pub tgt: S3Obj,
    pub f_n: Bijection,
    pub f_m: Bijection,
    pub f_r: Bijection,
}

impl S3Mor {
    pub fn new(src: S3Obj, tgt: S3Obj, f_n: Bijection, f_m: Bijection, f_r: Bijection) -> Result<Self, SymError> {
        let sized = f_n.size() == src.n()
            && f_n.size() == tgt.n()
            && f_m.size() == src.m()
            && f_m.size() == tgt.m()
            && f_r.size() == src.r()
            && f_r.size() == tgt.r();
        if !sized
            || !commutes(&src.phi1, &tgt.phi1, &f_n, &f_m)
            || !commutes(&src.phi2, &tgt.phi2, &f_m, &f_r)
        {
            return Err(SymError::NotCommuting);
        }
        Ok(S3Mor { src, tgt, f_n, f_m, f_r })
    }

    pub fn identity(obj: &S3Obj) -> Self {
        S3Mor {
            src: obj.clone(),
            tgt: obj.clone(),
            f_n: Bijection::identity(obj.n()),
            f_m: Bijection::identity(obj.m()),
            f_r: Bijection::identity(obj.r()),
        }
    }

    pub fn inverse(&self) -> Self {
        S3Mor {
            src: self.tgt.clone(),
            tgt: self.src.clone(),
            f_n: self.f_n.inverse(),
            f_m: self.f_m.inverse(),
            f_r: self.f_r.inverse(),
        }
    }

    /// Image under `μ_{S1}`: `(f_n, f_m)`.
    pub fn lower(&self) -> S2Mor {
        S2Mor {
            src: self.src.lower(),
            tgt: self.tgt.lower(),
            f_n: self.f_n.clone(),
            f_m: self.f_m.clone(),
        }
    }

    /// Image under `Sμ₁`: `(f_n, f_r)`.
    pub fn collapsed(&self) -> S2Mor {
        S2Mor {
            src: self.src.collapsed(),
            tgt: self.tgt.collapsed(),
            f_n: self.f_n.clone(),
            f_m: self.f_r.clone(),
        }
    }
}

/// All morphisms `φ → ψ` in `S³1`, sorted by `(f_n, f_m, f_r)`.
pub fn s3_hom(phi: &S3Obj, psi: &S3Obj) -> Vec<S3Mor> {
    if phi.n() != psi.n() || phi.m() != psi.m() || phi.r() != psi.r() {
        return Vec::new();
    }
    let mut out = Vec::new();
    for f_r in Bijection::all(phi.r()) {
        for f_m in lift_bijections(&phi.phi2, &psi.phi2, &f_r) {
            for f_n in lift_bijections(&phi.phi1, &psi.phi1, &f_m) {
                out.push(S3Mor {
                    src: phi.clone(),
                    tgt: psi.clone(),
                    f_n,
                    f_m: f_m.clone(),
                    f_r: f_r.clone(),
                });
            }
        }
    }
    out.sort_by(|a, b| (&a.f_n, &a.f_m, &a.f_r).cmp(&(&b.f_n, &b.f_m, &b.f_r)));
    out
}

/// All chains `n → m → r` of monotone maps, lexicographic in `(φ₁, φ₂)`.
pub fn enumerate_s3(n: Cardinal, m: Cardinal, r: Cardinal) -> Vec<S3Obj> {
    let lower = monotone_maps(n, m);
    let upper = monotone_maps(m, r);
    let mut out = Vec::with_capacity(lower.len() * upper.len());
    for phi1 in &lower {
        for phi2 in &upper {
            out.push(S3Obj {
                phi1: phi1.clone(),
                phi2: phi2.clone(),
            });
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonadTag {
    /// `(Sη)₁: n ↦ (n →id n)`
    SEta1,
    /// `η_{S1}: n ↦ (n →! 1)`
    EtaS1,
    /// `μ₁: φ ↦ n_φ`
    Mu1,
    /// `μ_{S1}: (φ₁, φ₂) ↦ φ₁`
    MuS1,
    /// `Sμ₁: (φ₁, φ₂) ↦ φ₂φ₁`
    SMu1,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonadInput {
    Card(Cardinal),
    S2(S2Obj),
    S3(S3Obj),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonadOutput {
    Card(Cardinal),
    S2(S2Obj),
}

/// Object components of the monad structure maps at 1.
pub fn monad_component(tag: MonadTag, x: &MonadInput) -> Result<MonadOutput, SymError> {
    match (tag, x) {
        (MonadTag::SEta1, MonadInput::Card(n)) => Ok(MonadOutput::S2(S2Obj::identity(*n))),
        (MonadTag::EtaS1, MonadInput::Card(n)) => Ok(MonadOutput::S2(S2Obj::terminal(*n))),
        (MonadTag::Mu1, MonadInput::S2(phi)) => Ok(MonadOutput::Card(phi.n())),
        (MonadTag::MuS1, MonadInput::S3(phi)) => Ok(MonadOutput::S2(phi.lower())),
        (MonadTag::SMu1, MonadInput::S3(phi)) => Ok(MonadOutput::S2(phi.collapsed())),
        (MonadTag::SEta1 | MonadTag::EtaS1, _) => Err(SymError::WrongInput {
            tag,
            expected: "a cardinal",
        }),
        (MonadTag::Mu1, _) => Err(SymError::WrongInput {
            tag,
            expected: "an S²1 object",
        }),
        (MonadTag::MuS1 | MonadTag::SMu1, _) => Err(SymError::WrongInput {
            tag,
            expected: "an S³1 object",
        }),
    }
}
