//! Finite checks of the pseudo-distributive law data at `1`: the unit and
//! multiplication cells and the local-monomorphism conditions.

mod tower;

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;
use thiserror::Error;

pub use tower::{
    chain_classes, chain_projection, skeleton, tower_isos, towers, ChainElem, Layer, Tower, TowerFunctor,
};

use crate::fincard::Bijection;
use crate::kleisli::{coend_quotient, CoendClass};
use crate::matchings::{
    delta1_elements, is_whiskered_right, whiskered_left, whiskered_right, Matching, MatchingError, WhiskeredElemL,
    WhiskeredElemR,
};
use crate::report::{LawCheck, Report};
use crate::symcat::{enumerate_s2, enumerate_s3, s2_hom, s3_hom, S2Mor, S2Obj, S3Mor, S3Obj};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoherenceError {
    #[error("invalid element: {0}")]
    Invalid(String),
    #[error(transparent)]
    Matching(#[from] MatchingError),
}

fn bijections(n: usize) -> BTreeSet<Bijection> {
    Bijection::all(n).collect()
}

/// Unit cells: `δ₁(φ; (n →id n))` against `S²1(φ, (n →! 1))` and the mirror
/// image on the codomain side.
pub fn check_pdd2(bound: usize) -> Report {
    let mut count = LawCheck::new("pdd2.eta.count");
    let mut iso = LawCheck::new("pdd2.eta.iso");
    let mut proj = LawCheck::new("pdd2.eta.projection");
    let mut co_count = LawCheck::new("pdd2.epsilon.count");
    let mut co_iso = LawCheck::new("pdd2.epsilon.iso");
    let mut co_proj = LawCheck::new("pdd2.epsilon.projection");
    for n_phi in 0..=bound {
        for m_phi in 0..=bound {
            for phi in enumerate_s2(n_phi, m_phi) {
                for n in 0..=bound {
                    let expected = if m_phi == 1 && n == n_phi { (1..=n).product() } else { 0 };
                    let cell = || format!("φ = {phi}, n = {n}");

                    let lower = delta1_elements(&phi, &S2Obj::identity(n));
                    let upper = s2_hom(&phi, &S2Obj::terminal(n));
                    count.record(lower.len() == expected, cell, || format!("{} matchings, expected {expected}", lower.len()));
                    iso.record(lower.len() == upper.len(), cell, || format!("{} vs {}", lower.len(), upper.len()));
                    let a: BTreeSet<Bijection> = lower.iter().map(|x| x.f_n.clone()).collect();
                    let b: BTreeSet<Bijection> = upper.iter().map(|x| x.f_n.clone()).collect();
                    let want = if expected > 0 { bijections(n) } else { BTreeSet::new() };
                    proj.record(a == b && a == want, cell, || format!("{a:?} vs {b:?}"));

                    let psi = &phi;
                    let lower = delta1_elements(&S2Obj::identity(n), psi);
                    let upper = s2_hom(&S2Obj::terminal(n), psi);
                    co_count.record(lower.len() == expected, cell, || format!("{} matchings, expected {expected}", lower.len()));
                    co_iso.record(lower.len() == upper.len(), cell, || format!("{} vs {}", lower.len(), upper.len()));
                    let a: BTreeSet<Bijection> = lower.iter().map(|x| x.f_n.clone()).collect();
                    let b: BTreeSet<Bijection> = upper.iter().map(|x| x.f_n.clone()).collect();
                    co_proj.record(a == b && a == want, cell, || format!("{a:?} vs {b:?}"));
                }
            }
        }
    }
    Report::new("pdd2", bound, 0, vec![count, iso, proj, co_count, co_iso, co_proj])
}

/// An element `f ⊗ g ⊗ h` of the composite `K(φ; ρ)`: `f` in `(δS_c)₁(φ; ψ)`,
/// `g` in `(S_cδ)₁(ψ; ξ)` and `h : ξ₂… ` truncated to `ξ₁ → ρ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KElement {
    pub phi: S3Obj,
    pub psi: S3Obj,
    pub xi: S3Obj,
    pub f: WhiskeredElemR,
    pub g: WhiskeredElemL,
    pub h: S2Mor,
}

impl KElement {
    pub fn rho(&self) -> &S2Obj {
        &self.h.tgt
    }

    pub fn projection(&self) -> Bijection {
        self.f.f_n.then(&self.g.f_n).and_then(|x| x.then(&self.h.f_n)).expect("sizes agree")
    }

    fn act_psi(&self, u: &S3Mor) -> KElement {
        let mut y = self.clone();
        y.psi = u.tgt.clone();
        y.f = WhiskeredElemR {
            f_n: self.f.f_n.then(&u.f_n).expect("sizes agree"),
            f_m: self.f.f_m.then(&u.f_m).expect("sizes agree"),
        };
        y.g = WhiskeredElemL {
            f_n: u.f_n.inverse().then(&self.g.f_n).expect("sizes agree"),
            f_r: u.f_r.inverse().then(&self.g.f_r).expect("sizes agree"),
        };
        y
    }

    fn act_xi(&self, v: &S3Mor) -> KElement {
        let mut y = self.clone();
        y.xi = v.tgt.clone();
        y.g = WhiskeredElemL {
            f_n: self.g.f_n.then(&v.f_n).expect("sizes agree"),
            f_r: self.g.f_r.then(&v.f_r).expect("sizes agree"),
        };
        let back = v.lower().inverse();
        y.h = S2Mor {
            src: v.tgt.lower(),
            tgt: self.h.tgt.clone(),
            f_n: back.f_n.then(&self.h.f_n).expect("sizes agree"),
            f_m: back.f_m.then(&self.h.f_m).expect("sizes agree"),
        };
        y
    }
}

/// The matching `(n_φ →φ₂φ₁ r_φ) → ρ` with component `h_n g_n f_n`.
pub fn pdd3_forward(x: &KElement) -> Result<Matching, CoherenceError> {
    let (phi, psi, xi) = (&x.phi, &x.psi, &x.xi);
    if !is_whiskered_right(phi, psi, &x.f) {
        return Err(CoherenceError::Invalid(format!("f is not in (δS)₁({phi}; {psi})")));
    }
    if !whiskered_left(psi, xi).contains(&x.g) {
        return Err(CoherenceError::Invalid(format!("g is not in (Sδ)₁({psi}; {xi})")));
    }
    if x.h.src != xi.lower() || S2Mor::new(x.h.src.clone(), x.h.tgt.clone(), x.h.f_n.clone(), x.h.f_m.clone()).is_err() {
        return Err(CoherenceError::Invalid(format!("h is not a morphism out of {}", xi.lower())));
    }
    let rho = x.rho();
    if rho.m() + phi.r() != phi.n() + 1 {
        return Err(CoherenceError::Invalid(format!(
            "m_ρ + r_φ = {} but n_φ + 1 = {}",
            rho.m() + phi.r(),
            phi.n() + 1
        )));
    }
    Ok(Matching::new(phi.collapsed(), rho.clone(), x.projection())?)
}

fn s3_skeleton(n: usize, m: usize, r: usize) -> Vec<S3Obj> {
    skeleton(&[n, m, r])
        .into_iter()
        .map(|t| S3Obj::new(t.maps()[0].clone(), t.maps()[1].clone()).expect("monotone"))
        .collect()
}

/// How the middle objects of `K` are chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Middles {
    /// One object per isomorphism class, moves by automorphisms.
    Skeleton,
    /// Every object, moves by all isomorphisms.
    Full,
}

/// The generators of `K(φ; ρ)` and their coend classes.
pub fn k_classes(phi: &S3Obj, rho: &S2Obj, middles: Middles) -> Vec<CoendClass<KElement>> {
    let n = phi.n();
    let objects = |n: usize, m: usize, r: usize| match middles {
        Middles::Skeleton => s3_skeleton(n, m, r),
        Middles::Full => enumerate_s3(n, m, r),
    };
    let mut gens = Vec::new();
    let mut psis = Vec::new();
    let mut xis = Vec::new();
    if phi.r() <= phi.m() + 1 {
        let r_psi = phi.m() + 1 - phi.r();
        psis = objects(n, phi.m(), r_psi);
        if r_psi + n >= phi.m() {
            xis = objects(n, r_psi + n - phi.m(), r_psi);
        }
    }
    for psi in &psis {
        let fs = whiskered_right(phi, psi);
        if fs.is_empty() {
            continue;
        }
        for xi in &xis {
            let hs = s2_hom(&xi.lower(), rho);
            if hs.is_empty() {
                continue;
            }
            for g in whiskered_left(psi, xi) {
                for f in &fs {
                    for h in &hs {
                        gens.push(KElement {
                            phi: phi.clone(),
                            psi: psi.clone(),
                            xi: xi.clone(),
                            f: f.clone(),
                            g: g.clone(),
                            h: h.clone(),
                        });
                    }
                }
            }
        }
    }
    let mut isos: HashMap<S3Obj, Vec<S3Mor>> = HashMap::new();
    for t in psis.iter().chain(&xis) {
        let targets: Vec<S3Obj> = match middles {
            Middles::Skeleton => vec![t.clone()],
            Middles::Full => psis.iter().chain(&xis).filter(|u| (u.m(), u.r()) == (t.m(), t.r())).cloned().collect(),
        };
        isos.insert(t.clone(), targets.iter().flat_map(|u| s3_hom(t, u)).collect());
    }
    coend_quotient(gens, |x| {
        let mut out: Vec<KElement> = isos[&x.psi].iter().map(|u| x.act_psi(u)).collect();
        out.extend(isos[&x.xi].iter().map(|v| x.act_xi(v)));
        out
    })
}

/// Outer maps that preserve the order inside each fibre of the lower map.
fn fibrewise_sorted(lower: &crate::fincard::FinMap, f_n: &Bijection) -> bool {
    (0..lower.dom()).all(|i| {
        (i + 1..lower.dom())
            .filter(|&j| lower.values()[j] == lower.values()[i])
            .all(|j| f_n.values()[i] < f_n.values()[j])
    })
}

fn is_sorted_hat(x: &KElement) -> bool {
    fibrewise_sorted(x.phi.phi1(), &x.f.f_n) && fibrewise_sorted(x.xi.phi1(), &x.h.f_n)
}

/// `f` and `h` both become identities after transporting the middles.
fn is_literal_hat(x: &KElement) -> bool {
    let psi2 = x.f.f_m.as_map().then(x.psi.phi2()).expect("sizes agree");
    let xi2 = x.h.f_m.inverse().as_map().then(x.xi.phi2()).expect("sizes agree");
    psi2.is_monotone() && xi2.is_monotone()
}

fn class_members(rep: &KElement, isos_psi: &[S3Mor], isos_xi: &[S3Mor]) -> Vec<KElement> {
    let mut out = Vec::new();
    for u in isos_psi {
        let y = rep.act_psi(u);
        for v in isos_xi {
            out.push(y.act_xi(v));
        }
    }
    out
}

struct Pdd3Checks {
    euler: LawCheck,
    well_defined: LawCheck,
    injective: LawCheck,
    surjective: LawCheck,
    projection: LawCheck,
    hat: LawCheck,
    dual: LawCheck,
    skeleton: LawCheck,
    literal_misses: Vec<String>,
}

impl Pdd3Checks {
    fn new() -> Self {
        Pdd3Checks {
            euler: LawCheck::new("pdd3.euler"),
            well_defined: LawCheck::new("pdd3.well-defined"),
            injective: LawCheck::new("pdd3.injective"),
            surjective: LawCheck::new("pdd3.surjective"),
            projection: LawCheck::new("pdd3.projection"),
            hat: LawCheck::new("pdd3.hat"),
            dual: LawCheck::new("pdd3.dual"),
            skeleton: LawCheck::new("pdd3.skeleton"),
            literal_misses: Vec::new(),
        }
    }

    fn merge(mut self, o: Pdd3Checks) -> Self {
        self.euler.merge(o.euler);
        self.well_defined.merge(o.well_defined);
        self.injective.merge(o.injective);
        self.surjective.merge(o.surjective);
        self.projection.merge(o.projection);
        self.hat.merge(o.hat);
        self.dual.merge(o.dual);
        self.skeleton.merge(o.skeleton);
        self.literal_misses.extend(o.literal_misses);
        self
    }
}

fn pdd3_cell(phi: &S3Obj, rho: &S2Obj, cross_check: bool) -> Pdd3Checks {
    let mut c = Pdd3Checks::new();
    let cell = format!("φ = {phi}, ρ = {rho}");
    let classes = k_classes(phi, rho, Middles::Skeleton);
    let target: BTreeSet<Matching> = delta1_elements(&phi.collapsed(), rho).into_iter().collect();

    let mut images = BTreeSet::new();
    let mut aut: HashMap<S3Obj, Vec<S3Mor>> = HashMap::new();
    for class in &classes {
        let rep = &class.representative;
        let image = match pdd3_forward(rep) {
            Ok(m) => m,
            Err(e) => {
                c.euler.fail(cell.clone(), e.to_string());
                continue;
            }
        };
        c.euler.pass();
        let auts_psi = aut.entry(rep.psi.clone()).or_insert_with(|| s3_hom(&rep.psi, &rep.psi)).clone();
        let auts_xi = aut.entry(rep.xi.clone()).or_insert_with(|| s3_hom(&rep.xi, &rep.xi)).clone();
        let members = class_members(rep, &auts_psi, &auts_xi);
        let constant = members.iter().all(|y| pdd3_forward(y).as_ref() == Ok(&image));
        c.well_defined.record(constant, || cell.clone(), || format!("class of {rep:?}"));
        c.projection.record(
            image.f_n == rep.projection(),
            || cell.clone(),
            || format!("{} vs {}", image.f_n, rep.projection()),
        );
        c.hat.record(members.iter().any(is_sorted_hat), || cell.clone(), || format!("class of {rep:?}"));
        if !members.iter().any(is_literal_hat) {
            c.literal_misses.push(cell.clone());
        }
        let inverse = Matching::new(rho.clone(), phi.collapsed(), image.f_n.inverse());
        c.dual.record(inverse.is_ok(), || cell.clone(), || format!("{} does not invert", image.f_n));
        let fresh = images.insert(image.clone());
        c.injective.record(fresh, || cell.clone(), || format!("two classes map to {}", image.f_n));
    }
    let missing: Vec<&Matching> = target.difference(&images).collect();
    c.surjective.record(missing.is_empty() && images.is_subset(&target), || cell.clone(), || {
        format!("{} matchings not reached", missing.len())
    });
    if cross_check {
        let full = k_classes(phi, rho, Middles::Full);
        c.skeleton.record(full.len() == classes.len(), || cell.clone(), || {
            format!("{} classes with all middles, {} with skeleton middles", full.len(), classes.len())
        });
    }
    c
}

/// The multiplication cell: classes of `K(φ; ρ)` against
/// `δ₁((n_φ →φ₂φ₁ r_φ); ρ)`, and the inverted composite against
/// `δ₁(ρ; (n_φ →φ₂φ₁ r_φ))`.
pub fn check_pdd3(bound: usize) -> Report {
    let mut cells = Vec::new();
    for n in 0..=bound {
        for m in 0..=bound {
            for r in 0..=bound {
                for phi in enumerate_s3(n, m, r) {
                    for m_rho in 0..=bound + 1 {
                        for rho in enumerate_s2(n, m_rho) {
                            cells.push((phi.clone(), rho));
                        }
                    }
                }
            }
        }
    }
    let c = cells
        .par_iter()
        .map(|(phi, rho)| pdd3_cell(phi, rho, phi.n().max(phi.m()).max(phi.r()) <= 2))
        .reduce(Pdd3Checks::new, Pdd3Checks::merge);
    let mut notes = Vec::new();
    if !c.literal_misses.is_empty() {
        notes.push(format!(
            "{} classes have no member with identity outer maps unless the middle boundary is re-sorted; first at {}",
            c.literal_misses.len(),
            c.literal_misses.iter().min().expect("nonempty")
        ));
    }
    Report::new(
        "pdd3",
        bound,
        0,
        vec![c.euler, c.well_defined, c.injective, c.surjective, c.projection, c.hat, c.dual, c.skeleton],
    )
    .with_notes(notes)
}

/// One of the ten composite paths whose projection to `S𝐈₁` must be a
/// local monomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PdaPath {
    pub tag: &'static str,
    pub layers: Vec<Layer>,
    pub source_levels: usize,
    pub target_levels: usize,
}

impl PdaPath {
    pub fn all() -> Vec<PdaPath> {
        use Layer::{Corep, Delta, Rep};
        use TowerFunctor::{Eta, Forget, SEta};
        let path = |tag, layers, source_levels, target_levels| PdaPath {
            tag,
            layers,
            source_levels,
            target_levels,
        };
        vec![
            path("pda1", vec![Corep(Eta), Rep(Eta)], 1, 1),
            path("pda2", vec![Delta], 2, 2),
            path("pda3", vec![Delta], 2, 2),
            path("pda4", vec![Delta], 2, 2),
            path("pda5", vec![Delta], 2, 2),
            path("pda6", vec![Rep(Forget(1)), Rep(Forget(1)), Delta], 4, 2),
            path("pda7", vec![Delta, Corep(Forget(1)), Corep(Forget(1))], 2, 4),
            path("pda8", vec![Rep(Forget(1)), Delta, Corep(SEta)], 3, 1),
            path("pda9", vec![Rep(SEta), Delta, Corep(Forget(1))], 1, 3),
            path("pda10", vec![Rep(Forget(1)), Delta, Corep(Forget(1))], 3, 3),
        ]
    }

    pub fn by_tag(tag: &str) -> Option<PdaPath> {
        PdaPath::all().into_iter().find(|p| p.tag == tag)
    }

    /// The `δ₁` cell the composite reduces to, or `None` for the unit path.
    fn reduced(&self, a: &Tower, b: &Tower) -> Option<(S2Obj, S2Obj)> {
        let side = |t: &Tower| match t.levels() {
            1 => S2Obj::identity(t.points()),
            _ => t.collapsed(),
        };
        (self.tag != "pda1").then(|| (side(a), side(b)))
    }

    /// The expected projections of the composite at `(a; b)`.
    pub fn expected(&self, a: &Tower, b: &Tower) -> BTreeSet<Bijection> {
        match self.reduced(a, b) {
            None if a.points() == 1 && b.points() == 1 => [Bijection::identity(1)].into(),
            None => BTreeSet::new(),
            Some((x, y)) => delta1_elements(&x, &y).into_iter().map(|m| m.f_n).collect(),
        }
    }
}

/// Two distinct classes of one hom cell with the same projection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalMonoWitness {
    pub path: &'static str,
    pub source: Tower,
    pub target: Tower,
    pub first: ChainElem,
    pub second: ChainElem,
    pub projection: Bijection,
}

/// Checks one hom cell of a path: the projection is injective on classes
/// and its image is the expected one.
pub fn pda_cell(path: &PdaPath, a: &Tower, b: &Tower) -> (Option<LocalMonoWitness>, usize, BTreeSet<Bijection>) {
    let classes = chain_classes(&path.layers, a, b).unwrap_or_default();
    let mut seen: HashMap<Bijection, &ChainElem> = HashMap::new();
    let mut witness = None;
    for c in &classes {
        let p = chain_projection(&c.representative);
        if let Some(first) = seen.get(&p) {
            witness.get_or_insert_with(|| LocalMonoWitness {
                path: path.tag,
                source: a.clone(),
                target: b.clone(),
                first: (*first).clone(),
                second: c.representative.clone(),
                projection: p.clone(),
            });
        } else {
            seen.insert(p, &c.representative);
        }
    }
    let image = seen.into_keys().collect();
    (witness, classes.len(), image)
}

fn all_towers(levels: usize, bound: usize) -> Vec<Tower> {
    let mut sizes = vec![Vec::new()];
    for _ in 0..levels {
        sizes = sizes
            .into_iter()
            .flat_map(|s: Vec<usize>| {
                (0..=bound).map(move |k| {
                    let mut t = s.clone();
                    t.push(k);
                    t
                })
            })
            .collect();
    }
    sizes.iter().flat_map(|s| towers(s)).collect()
}

/// Runs one path over every cell with all level sizes at most `bound`.
pub fn check_pda_path(path: &PdaPath, bound: usize) -> (LawCheck, LawCheck) {
    let sources = all_towers(path.source_levels, bound);
    let targets = all_towers(path.target_levels, bound);
    let mut mono = LawCheck::new(format!("{}.local-mono", path.tag));
    let mut image = LawCheck::new(format!("{}.image", path.tag));
    let results: Vec<_> = sources
        .par_iter()
        .flat_map_iter(|a| {
            targets.iter().map(move |b| {
                let (w, classes, img) = pda_cell(path, a, b);
                (a, b, w, classes, img)
            })
        })
        .collect();
    for (a, b, w, classes, img) in results {
        let cell = || format!("({a}; {b})");
        match w {
            Some(w) => mono.fail(cell(), format!("{:?} and {:?} both project to {}", w.first, w.second, w.projection)),
            None => mono.pass(),
        }
        let want = path.expected(a, b);
        image.record(img == want && classes == want.len(), cell, || {
            format!("{classes} classes with projections {img:?}, expected {want:?}")
        });
    }
    (mono, image)
}

/// All ten paths at the given bound.
pub fn check_pda_local_monos(bound: usize) -> Report {
    let mut checks = Vec::new();
    for path in PdaPath::all() {
        let (mono, image) = check_pda_path(&path, bound);
        checks.push(mono);
        checks.push(image);
    }
    Report::new("pda", bound, 0, checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s2(v: &[usize], m: usize) -> S2Obj {
        S2Obj::from_values(v.to_vec(), m).unwrap()
    }

    fn s3(v1: &[usize], m: usize, v2: &[usize], r: usize) -> S3Obj {
        S3Obj::from_values(v1.to_vec(), m, v2.to_vec(), r).unwrap()
    }

    #[test]
    fn unit_cell_examples() {
        assert_eq!(delta1_elements(&s2(&[1, 1], 1), &S2Obj::identity(2)).len(), 2);
        for n in 0..=3 {
            assert!(delta1_elements(&s2(&[1, 2], 2), &S2Obj::identity(n)).is_empty());
        }
        assert_eq!(delta1_elements(&s2(&[1], 1), &S2Obj::identity(1)).len(), 1);
        assert!(check_pdd2(3).clean);
    }

    #[test]
    fn trivial_multiplication_cell() {
        let phi = s3(&[1], 1, &[1], 1);
        let rho = s2(&[1], 1);
        let classes = k_classes(&phi, &rho, Middles::Skeleton);
        assert_eq!(classes.len(), 1);
        let m = pdd3_forward(&classes[0].representative).unwrap();
        assert!(m.f_n.is_identity());
        assert_eq!(m.phi, phi.collapsed());
    }

    #[test]
    fn forward_rejects_broken_elements() {
        let phi = s3(&[1, 1], 1, &[1], 1);
        let rho = s2(&[1, 2], 2);
        let classes = k_classes(&phi, &rho, Middles::Skeleton);
        assert!(!classes.is_empty());
        let mut x = classes[0].representative.clone();
        x.f.f_m = Bijection::identity(x.f.f_m.size() + 1);
        assert!(matches!(pdd3_forward(&x), Err(CoherenceError::Invalid(_))));
    }

    #[test]
    fn forward_is_invariant_under_moves() {
        let phi = s3(&[1, 1], 1, &[1], 1);
        let rho = s2(&[1, 2], 2);
        for class in k_classes(&phi, &rho, Middles::Skeleton) {
            let x = &class.representative;
            let m = pdd3_forward(x).unwrap();
            assert_eq!(m.f_n, x.projection());
            for u in s3_hom(&x.psi, &x.psi) {
                assert_eq!(pdd3_forward(&x.act_psi(&u)).unwrap(), m);
            }
            for v in s3_hom(&x.xi, &x.xi) {
                assert_eq!(pdd3_forward(&x.act_xi(&v)).unwrap(), m);
            }
        }
    }

    #[test]
    fn unit_path_is_a_point_only_at_one() {
        let path = PdaPath::by_tag("pda1").unwrap();
        for m in 0..=3 {
            for n in 0..=3 {
                let a = Tower::new(vec![m], vec![]).unwrap();
                let b = Tower::new(vec![n], vec![]).unwrap();
                let (w, classes, _) = pda_cell(&path, &a, &b);
                assert!(w.is_none());
                assert_eq!(classes, usize::from(m == 1 && n == 1), "m = {m}, n = {n}");
            }
        }
    }
}
