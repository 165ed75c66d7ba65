//! Symmetric polycategories: maps with list domains and codomains, binary
//! composition along one object, and the exchange action of permutations.

mod axioms;
mod compose;
mod free;
mod roundtrip;
mod table;

pub use axioms::{check_polycategory_axioms, AxiomTag};
pub use compose::{Label, Tracked};
pub use compose::{
    family_matching_span, is_suitable_matching, peel_orders, polycompose, polycompose_with_order,
    FamilyMatching, Pairing,
};
pub use free::{graft_family, FreeCat, FreeTerm, Generator};
pub use roundtrip::{binary_from_poly, full_families, roundtrip_check, DerivedPolycomp, OverriddenPolycomp, Polycompositional};
pub use table::{MapId, PolyTable, TableError};


use std::fmt::Debug;
use std::hash::Hash;

use thiserror::Error;

use crate::fincard::Bijection;

pub type Obj = String;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PortSide {
    Dom,
    Cod,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("cut joins output {left:?} to input {right:?}")]
    CutMismatch { left: Obj, right: Obj },
    #[error("cut position out of range")]
    CutOutOfRange,
    #[error("no composition entry for {0}")]
    MissingEntry(String),
    #[error("result exceeds the list-length bound {0}")]
    BoundExceeded(usize),
    #[error("unknown object {0:?}")]
    UnknownObject(Obj),
    #[error("permutation of size {got} applied to a list of length {want}")]
    PermSize { got: usize, want: usize },
    #[error("matching is not suitable")]
    Unsuitable,
    #[error("matching is ill-typed: {0}")]
    IllTyped(String),
    #[error("too many generator instances (limit {0})")]
    TooLarge(usize),
}

/// Exchange convention: `exchange(f, σ, τ)` has domain `k ↦ dom(f)[σ(k)]`
/// and codomain `k ↦ cod(f)[τ(k)]`, so exchanges compose as a right action.
pub trait Polycategory {
    type Map: Clone + Eq + Hash + Ord + Debug + Send + Sync;

    fn dom(&self, f: &Self::Map) -> Vec<Obj>;
    fn cod(&self, f: &Self::Map) -> Vec<Obj>;
    fn identity(&self, x: &Obj) -> Result<Self::Map, PolyError>;
    /// `g ∘_(i,j) f`: output `i` of `f` plugged into input `j` of `g`, both
    /// 0-based. The result has domain `Λ₁,Γ,Λ₂` and codomain `Δ₁,Σ,Δ₂`.
    fn compose(&self, g: &Self::Map, f: &Self::Map, cut: (usize, usize)) -> Result<Self::Map, PolyError>;
    fn exchange(&self, f: &Self::Map, sigma: &Bijection, tau: &Bijection) -> Result<Self::Map, PolyError>;
}

/// Positions `p` (0-based) of adjacent transpositions `s_p = (p p+1)` whose
/// product `s_{p₁}∘s_{p₂}∘…` equals `sigma`; applying them one at a time
/// as exchanges realises `sigma`.
pub fn adjacent_word(sigma: &Bijection) -> Vec<usize> {
    let mut target: Vec<usize> = (0..sigma.size()).map(|k| sigma.at(k)).collect();
    let mut swaps = Vec::new();
    let n = target.len();
    for end in (1..n).rev() {
        for p in 0..end {
            if target[p] > target[p + 1] {
                target.swap(p, p + 1);
                swaps.push(p);
            }
        }
    }
    swaps.reverse();
    swaps
}

/// The transposition `(p p+1)` on `n` points.
pub fn transposition(n: usize, p: usize) -> Bijection {
    let mut v: Vec<usize> = (0..n).collect();
    v.swap(p, p + 1);
    Bijection::from_zero_based(v)
}

pub(crate) fn permute<T: Clone>(list: &[T], sigma: &Bijection) -> Vec<T> {
    (0..list.len()).map(|k| list[sigma.at(k)].clone()).collect()
}

pub(crate) fn splice<T: Clone>(outer: &[T], at: usize, inner: &[T]) -> Vec<T> {
    let mut out = Vec::with_capacity(outer.len() + inner.len());
    out.extend_from_slice(&outer[..at]);
    out.extend_from_slice(inner);
    out.extend_from_slice(&outer[at + 1..]);
    out
}

/// Domain and codomain of `g ∘_(i,j) f` without computing the map.
pub fn composite_type<P: Polycategory>(
    p: &P,
    g: &P::Map,
    f: &P::Map,
    cut: (usize, usize),
) -> Result<(Vec<Obj>, Vec<Obj>), PolyError> {
    let (fd, fc, gd, gc) = (p.dom(f), p.cod(f), p.dom(g), p.cod(g));
    let (i, j) = cut;
    if i >= fc.len() || j >= gd.len() {
        return Err(PolyError::CutOutOfRange);
    }
    if fc[i] != gd[j] {
        return Err(PolyError::CutMismatch {
            left: fc[i].clone(),
            right: gd[j].clone(),
        });
    }
    Ok((splice(&gd, j, &fd), splice(&fc, i, &gc)))
}

/// Binary composition, checking the cut before delegating.
pub fn binary_compose<P: Polycategory>(p: &P, g: &P::Map, f: &P::Map, cut: (usize, usize)) -> Result<P::Map, PolyError> {
    composite_type(p, g, f, cut)?;
    p.compose(g, f, cut)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjacent_words_realise_permutations() {
        for n in 0..=5 {
            for sigma in Bijection::all(n) {
                let word = adjacent_word(&sigma);
                let list: Vec<usize> = (0..n).collect();
                let mut cur = list.clone();
                for &p in &word {
                    cur = permute(&cur, &transposition(n, p));
                }
                assert_eq!(cur, permute(&list, &sigma), "{sigma}");
            }
        }
    }

    #[test]
    fn permute_is_a_right_action() {
        let list = vec!['a', 'b', 'c'];
        for s in Bijection::all(3) {
            for t in Bijection::all(3) {
                assert_eq!(permute(&permute(&list, &s), &t), permute(&list, &s.after(&t)));
            }
        }
    }
}
