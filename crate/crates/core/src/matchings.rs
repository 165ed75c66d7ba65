//! The profunctor `δ₁` of suitable matchings on `S²1`, its two-sided
//! actions, the projection to `S1`, and the whiskered profunctors
//! `(δS_c)₁` and `(S_cδ)₁` on `S³1`.

use thiserror::Error;

use crate::fincard::{is_suitable_span, Bijection, CommutingSquare, FinMap, Span, UnionFind};
use crate::symcat::{commutes, lift_bijections, S2Mor, S2Obj, S3Obj};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("endpoint mismatch: acting morphism does not meet the matching")]
    EndpointMismatch,
    #[error("bijection does not give a suitable span")]
    NotSuitable,
}

/// An element of `δ₁(φ; ψ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    pub phi: S2Obj,
    pub psi: S2Obj,
    pub f_n: Bijection,
}

impl Matching {
    pub fn new(phi: S2Obj, psi: S2Obj, f_n: Bijection) -> Result<Self, MatchingError> {
        if f_n.size() != phi.n() || f_n.size() != psi.n() {
            return Err(MatchingError::NotSuitable);
        }
        let x = Matching { phi, psi, f_n };
        if !is_suitable_span(&x.span()) {
            return Err(MatchingError::NotSuitable);
        }
        Ok(x)
    }

    /// `m_φ ←φ n_φ →ψ∘f_n m_ψ`.
    pub fn span(&self) -> Span {
        matching_span(self.phi.map(), self.psi.map(), &self.f_n)
    }
}

fn matching_span(left: &FinMap, right: &FinMap, f: &Bijection) -> Span {
    let right = f.as_map().then(right).expect("sizes agree");
    Span::new(left.clone(), right).expect("common apex")
}

/// Bijections `f: n → n` making `a ←left n →right∘f b` a tree, in
/// lexicographic order. Backtracks on the value of `f` at each point and
/// prunes as soon as an edge closes a cycle or doubles an existing one.
pub(crate) fn tree_bijections(left: &FinMap, right: &FinMap) -> Vec<Bijection> {
    let n = left.dom();
    let a = left.cod();
    let b = right.cod();
    if right.dom() != n || a + b != n + 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut used = vec![false; n];
    let mut assign = Vec::with_capacity(n);
    let uf = UnionFind::new(a + b);
    search(left, right, a, &mut used, &mut assign, uf, &mut out);
    out
}

fn search(
    left: &FinMap,
    right: &FinMap,
    a: usize,
    used: &mut [bool],
    assign: &mut Vec<usize>,
    uf: UnionFind,
    out: &mut Vec<Bijection>,
) {
    let n = left.dom();
    let i = assign.len();
    if i == n {
        out.push(Bijection::from_zero_based(assign.iter().copied()));
        return;
    }
    for j in 0..n {
        if used[j] {
            continue;
        }
        let mut next = uf.clone();
        if !next.union(left.at(i), a + right.at(j)) {
            continue;
        }
        used[j] = true;
        assign.push(j);
        search(left, right, a, used, assign, next, out);
        assign.pop();
        used[j] = false;
    }
}

/// All elements of `δ₁(φ; ψ)`, sorted by `f_n`.
pub fn delta1_elements(phi: &S2Obj, psi: &S2Obj) -> Vec<Matching> {
    tree_bijections(phi.map(), psi.map())
        .into_iter()
        .map(|f_n| Matching {
            phi: phi.clone(),
            psi: psi.clone(),
            f_n,
        })
        .collect()
}

/// Which side of `δ₁` a morphism acts on.
#[derive(Debug, Clone)]
pub enum Action<'a> {
    /// `g: ψ → ρ`, giving `g·x ∈ δ₁(φ; ρ)`.
    Left(&'a S2Mor),
    /// `h: φ' → φ`, giving `x·h ∈ δ₁(φ'; ψ)`.
    Right(&'a S2Mor),
}

pub fn delta1_act(action: Action<'_>, x: &Matching) -> Result<Matching, MatchingError> {
    match action {
        Action::Left(g) => {
            if g.src != x.psi {
                return Err(MatchingError::EndpointMismatch);
            }
            Ok(Matching {
                phi: x.phi.clone(),
                psi: g.tgt.clone(),
                f_n: g.f_n.after(&x.f_n),
            })
        }
        Action::Right(h) => {
            if h.tgt != x.phi {
                return Err(MatchingError::EndpointMismatch);
            }
            Ok(Matching {
                phi: h.src.clone(),
                psi: x.psi.clone(),
                f_n: x.f_n.after(&h.f_n),
            })
        }
    }
}

pub fn delta1_project(x: &Matching) -> Bijection {
    x.f_n.clone()
}

/// An element of `(δS_c)₁(φ; ψ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WhiskeredElemR {
    pub f_n: Bijection,
    pub f_m: Bijection,
}

/// An element of `(S_cδ)₁(φ; ψ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WhiskeredElemL {
    pub f_n: Bijection,
    pub f_r: Bijection,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Right,
    Left,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Whiskered {
    Right(Vec<WhiskeredElemR>),
    Left(Vec<WhiskeredElemL>),
}

impl Whiskered {
    pub fn len(&self) -> usize {
        match self {
            Whiskered::Right(v) => v.len(),
            Whiskered::Left(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub fn whiskered_elements(side: Side, phi: &S3Obj, psi: &S3Obj) -> Whiskered {
    match side {
        Side::Right => Whiskered::Right(whiskered_right(phi, psi)),
        Side::Left => Whiskered::Left(whiskered_left(phi, psi)),
    }
}

/// Pairs `(f_n, f_m)` with `ψ₁f_n = f_mφ₁` and the top span
/// `r_φ ←φ₂ m_φ →ψ₂f_m r_ψ` suitable.
pub fn whiskered_right(phi: &S3Obj, psi: &S3Obj) -> Vec<WhiskeredElemR> {
    if phi.n() != psi.n() || phi.m() != psi.m() {
        return Vec::new();
    }
    let mut out = Vec::new();
    for f_m in tree_bijections(phi.phi2(), psi.phi2()) {
        for f_n in lift_bijections(phi.phi1(), psi.phi1(), &f_m) {
            out.push(WhiskeredElemR { f_n, f_m: f_m.clone() });
        }
    }
    out.sort();
    out
}

/// Pairs `(f_n, f_r)` with `ψ₂ψ₁f_n = f_rφ₂φ₁`, such that the square with
/// apex `n_φ`, legs `φ₁`, `ψ₁f_n` and cocone `f_rφ₂`, `ψ₂` is a pushout,
/// and `r_ψ + n_φ = m_φ + m_ψ`.
pub fn whiskered_left(phi: &S3Obj, psi: &S3Obj) -> Vec<WhiskeredElemL> {
    if phi.n() != psi.n() || phi.r() != psi.r() || psi.r() + phi.n() != phi.m() + psi.m() {
        return Vec::new();
    }
    let outer_src = phi.collapsed();
    let outer_tgt = psi.collapsed();
    let mut out = Vec::new();
    for f_r in Bijection::all(phi.r()) {
        for f_n in lift_bijections(outer_src.map(), outer_tgt.map(), &f_r) {
            if left_square(phi, psi, &f_n, &f_r).is_pushout() {
                out.push(WhiskeredElemL { f_n, f_r: f_r.clone() });
            }
        }
    }
    out.sort();
    out
}

/// The square `(*)` for a candidate `(f_n, f_r)`; assumes the outer
/// rectangle commutes.
pub(crate) fn left_square(phi: &S3Obj, psi: &S3Obj, f_n: &Bijection, f_r: &Bijection) -> CommutingSquare {
    let span = matching_span(phi.phi1(), psi.phi1(), f_n);
    let bottom_left = phi.phi2().then(f_r.as_map()).expect("sizes agree");
    CommutingSquare::new(span, bottom_left, psi.phi2().clone()).expect("outer rectangle commutes")
}

/// Whether `(f_n, f_m)` satisfies the conditions of [`whiskered_right`].
pub fn is_whiskered_right(phi: &S3Obj, psi: &S3Obj, x: &WhiskeredElemR) -> bool {
    x.f_n.size() == phi.n()
        && x.f_n.size() == psi.n()
        && x.f_m.size() == phi.m()
        && x.f_m.size() == psi.m()
        && commutes(phi.phi1(), psi.phi1(), &x.f_n, &x.f_m)
        && is_suitable_span(&matching_span(phi.phi2(), psi.phi2(), &x.f_m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincard::induced_spans;
    use crate::symcat::{enumerate_s2, enumerate_s3, s2_hom};

    fn s2(v: &[usize], m: usize) -> S2Obj {
        S2Obj::from_values(v.to_vec(), m).unwrap()
    }

    fn s3(v1: &[usize], m: usize, v2: &[usize], r: usize) -> S3Obj {
        S3Obj::from_values(v1.to_vec(), m, v2.to_vec(), r).unwrap()
    }

    fn brute(phi: &S2Obj, psi: &S2Obj) -> Vec<Bijection> {
        if phi.n() != psi.n() {
            return Vec::new();
        }
        Bijection::all(phi.n())
            .filter(|f| is_suitable_span(&matching_span(phi.map(), psi.map(), f)))
            .collect()
    }

    #[test]
    fn spec_examples() {
        let a = s2(&[1, 1], 1);
        let b = s2(&[1, 2], 2);
        let xs = delta1_elements(&a, &b);
        assert_eq!(xs.len(), 2);
        let projs: Vec<_> = xs.iter().map(delta1_project).collect();
        assert_eq!(projs, vec![Bijection::identity(2), Bijection::new(vec![2, 1]).unwrap()]);

        let one = s2(&[1], 1);
        let single = delta1_elements(&one, &one);
        assert_eq!(single.len(), 1);
        assert!(delta1_project(&single[0]).is_identity());
        assert!(delta1_elements(&b, &b).is_empty());
    }

    #[test]
    fn nonidentity_automorphism_swaps() {
        let a = s2(&[1, 1], 1);
        let b = s2(&[1, 2], 2);
        let xs = delta1_elements(&a, &b);
        let swap = s2_hom(&b, &b).into_iter().find(|g| !g.f_n.is_identity()).unwrap();
        assert_eq!(delta1_act(Action::Left(&swap), &xs[0]).unwrap(), xs[1]);
        assert_eq!(delta1_act(Action::Left(&swap), &xs[1]).unwrap(), xs[0]);
        assert_eq!(delta1_act(Action::Right(&swap), &xs[0]), Err(MatchingError::EndpointMismatch));
    }

    #[test]
    fn backtracking_agrees_with_brute_force() {
        for n in 0..=4 {
            for m1 in 0..=n + 1 {
                let m2 = n + 1 - m1;
                for phi in enumerate_s2(n, m1) {
                    for psi in enumerate_s2(n, m2) {
                        let got: Vec<_> = delta1_elements(&phi, &psi).into_iter().map(|x| x.f_n).collect();
                        assert_eq!(got, brute(&phi, &psi), "{phi} {psi}");
                    }
                }
            }
        }
    }

    #[test]
    fn actions_are_functorial_and_commute() {
        for n in 1..=3 {
            for m1 in 1..=n {
                let m2 = n + 1 - m1;
                let lefts = enumerate_s2(n, m1);
                let rights = enumerate_s2(n, m2);
                for phi in &lefts {
                    for psi in &rights {
                        for x in delta1_elements(phi, psi) {
                            assert!(Matching::new(x.phi.clone(), x.psi.clone(), x.f_n.clone()).is_ok());
                            let gs: Vec<_> = rights.iter().flat_map(|r| s2_hom(psi, r)).collect();
                            let hs: Vec<_> = lefts.iter().flat_map(|l| s2_hom(l, phi)).collect();
                            for g in &gs {
                                let gx = delta1_act(Action::Left(g), &x).unwrap();
                                assert!(Matching::new(gx.phi.clone(), gx.psi.clone(), gx.f_n.clone()).is_ok());
                                for h in &hs {
                                    let a = delta1_act(Action::Right(h), &gx).unwrap();
                                    let b = delta1_act(Action::Left(g), &delta1_act(Action::Right(h), &x).unwrap()).unwrap();
                                    assert_eq!(a, b);
                                    assert_eq!(delta1_project(&a), g.f_n.after(&x.f_n).after(&h.f_n));
                                }
                                for g2 in s2_hom(&g.tgt, &g.tgt) {
                                    let gg = crate::symcat::s2_compose(&g2, g).unwrap();
                                    assert_eq!(
                                        delta1_act(Action::Left(&gg), &x).unwrap(),
                                        delta1_act(Action::Left(&g2), &gx).unwrap()
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn right_whiskered_examples() {
        let one = s3(&[1], 1, &[1], 1);
        assert_eq!(whiskered_right(&one, &one).len(), 1);

        let phi = s3(&[1, 1], 1, &[1], 1);
        for psi in enumerate_s3(2, 1, 1) {
            let got = whiskered_right(&phi, &psi);
            let mut oracle = Vec::new();
            for f_n in Bijection::all(2) {
                for f_m in Bijection::all(1) {
                    let x = WhiskeredElemR { f_n: f_n.clone(), f_m };
                    if is_whiskered_right(&phi, &psi, &x) {
                        oracle.push(x);
                    }
                }
            }
            assert_eq!(got, oracle);
        }
    }

    #[test]
    fn right_whiskered_matches_brute_force() {
        for (n, m) in [(2, 2), (3, 2), (3, 3)] {
            for r1 in 1..=m {
                let r2 = m + 1 - r1;
                for phi in enumerate_s3(n, m, r1) {
                    for psi in enumerate_s3(n, m, r2) {
                        let got = whiskered_right(&phi, &psi);
                        let mut oracle = Vec::new();
                        for f_n in Bijection::all(n) {
                            for f_m in Bijection::all(m) {
                                let x = WhiskeredElemR { f_n: f_n.clone(), f_m };
                                if is_whiskered_right(&phi, &psi, &x) {
                                    oracle.push(x);
                                }
                            }
                        }
                        assert_eq!(got, oracle);
                    }
                }
            }
        }
    }

    #[test]
    fn left_whiskered_cardinality_guard() {
        let phi = s3(&[1, 2], 2, &[1, 1], 1);
        let psi = s3(&[1, 2], 2, &[1, 1], 1);
        assert!(whiskered_left(&phi, &psi).is_empty());
    }

    #[test]
    fn left_whiskered_equals_induced_span_condition() {
        for n in 1..=3 {
            for r in 1..=n {
                for m1 in r..=n {
                    for m2 in r..=n {
                        for phi in enumerate_s3(n, m1, r) {
                            for psi in enumerate_s3(n, m2, r) {
                                let got = whiskered_left(&phi, &psi);
                                let mut oracle = Vec::new();
                                for f_r in Bijection::all(r) {
                                    for f_n in Bijection::all(n) {
                                        let outer = (0..n).all(|i| {
                                            psi.collapsed().map().at(f_n.at(i))
                                                == f_r.at(phi.collapsed().map().at(i))
                                        });
                                        if !outer {
                                            continue;
                                        }
                                        let sq = left_square(&phi, &psi, &f_n, &f_r);
                                        if induced_spans(&sq).iter().all(is_suitable_span) {
                                            oracle.push(WhiskeredElemL { f_n, f_r: f_r.clone() });
                                        }
                                    }
                                }
                                oracle.sort();
                                assert_eq!(got, oracle, "{phi} {psi}");
                            }
                        }
                    }
                }
            }
        }
    }
}
