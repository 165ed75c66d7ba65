//! Finite cardinals, maps between them, spans, and pushouts.
//!
//! A cardinal `n` is the set `{1, …, n}`; maps store their values 1-indexed.
//! A span `n ← k → m` is read as the undirected bipartite multigraph with
//! vertex set `n + m` and one edge per apex element.

use std::fmt;

use thiserror::Error;

pub type Cardinal = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FinError {
    #[error("value {value} at position {position} is outside 1..={cod}")]
    OutOfRange {
        position: usize,
        value: usize,
        cod: Cardinal,
    },
    #[error("map is not a bijection")]
    NotBijective,
    #[error("cannot compose: codomain {left_cod} does not match domain {right_dom}")]
    Mismatch { left_cod: Cardinal, right_dom: Cardinal },
    #[error("span legs have different apex sizes ({0} vs {1})")]
    ApexMismatch(Cardinal, Cardinal),
    #[error("square does not commute at apex element {0}")]
    NotCommuting(usize),
}

/// A function `{1..dom} → {1..cod}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinMap {
    cod: Cardinal,
    values: Vec<usize>,
}

impl FinMap {
    pub fn new(values: Vec<usize>, cod: Cardinal) -> Result<Self, FinError> {
        for (i, &v) in values.iter().enumerate() {
            if v == 0 || v > cod {
                return Err(FinError::OutOfRange {
                    position: i + 1,
                    value: v,
                    cod,
                });
            }
        }
        Ok(FinMap { cod, values })
    }

    /// Builds a map from 0-indexed values; callers guarantee the range.
    pub(crate) fn from_zero_based(values: impl IntoIterator<Item = usize>, cod: Cardinal) -> Self {
        let values: Vec<usize> = values.into_iter().map(|v| v + 1).collect();
        debug_assert!(values.iter().all(|&v| v <= cod));
        FinMap { cod, values }
    }

    pub fn identity(n: Cardinal) -> Self {
        FinMap {
            cod: n,
            values: (1..=n).collect(),
        }
    }

    /// The unique map `n → 1`.
    pub fn terminal(n: Cardinal) -> Self {
        FinMap {
            cod: 1,
            values: vec![1; n],
        }
    }

    pub fn dom(&self) -> Cardinal {
        self.values.len()
    }

    pub fn cod(&self) -> Cardinal {
        self.cod
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Image of the 1-indexed element `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    /// 0-indexed lookup, for internal loops.
    pub(crate) fn at(&self, i: usize) -> usize {
        self.values[i] - 1
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &FinMap) -> Result<FinMap, FinError> {
        if self.cod != other.dom() {
            return Err(FinError::Mismatch {
                left_cod: self.cod,
                right_dom: other.dom(),
            });
        }
        Ok(FinMap {
            cod: other.cod,
            values: self.values.iter().map(|&v| other.apply(v)).collect(),
        })
    }

    pub fn is_monotone(&self) -> bool {
        self.values.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn is_bijective(&self) -> bool {
        if self.dom() != self.cod {
            return false;
        }
        let mut seen = vec![false; self.cod];
        for &v in &self.values {
            if std::mem::replace(&mut seen[v - 1], true) {
                return false;
            }
        }
        true
    }

    /// Sizes of the fibers over `1..=cod`, in order.
    pub fn fiber_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.cod];
        for &v in &self.values {
            sizes[v - 1] += 1;
        }
        sizes
    }

    /// 1-indexed elements of the fiber over `j`, ascending.
    pub fn fiber(&self, j: usize) -> Vec<usize> {
        (1..=self.dom()).filter(|&i| self.apply(i) == j).collect()
    }

    /// Restriction along an ascending list of 1-indexed domain elements,
    /// with the codomain relabeled by `cod_labels` (ascending, 1-indexed).
    fn restrict(&self, dom_elems: &[usize], cod_labels: &[usize]) -> FinMap {
        let values = dom_elems
            .iter()
            .map(|&i| {
                let v = self.apply(i);
                cod_labels.iter().position(|&c| c == v).expect("restriction leaves fiber") + 1
            })
            .collect();
        FinMap {
            cod: cod_labels.len(),
            values,
        }
    }
}

impl fmt::Debug for FinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "{}@{}", vals.join(","), self.cod)
    }
}

/// A bijection `n → n`; the morphisms of `S1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bijection(FinMap);

impl Bijection {
    pub fn new(values: Vec<usize>) -> Result<Self, FinError> {
        let n = values.len();
        let map = FinMap::new(values, n)?;
        if !map.is_bijective() {
            return Err(FinError::NotBijective);
        }
        Ok(Bijection(map))
    }

    pub fn from_map(map: FinMap) -> Result<Self, FinError> {
        if map.is_bijective() {
            Ok(Bijection(map))
        } else {
            Err(FinError::NotBijective)
        }
    }

    pub(crate) fn from_zero_based(values: impl IntoIterator<Item = usize>) -> Self {
        let values: Vec<usize> = values.into_iter().collect();
        let n = values.len();
        let b = Bijection(FinMap::from_zero_based(values, n));
        debug_assert!(b.0.is_bijective());
        b
    }

    pub fn identity(n: Cardinal) -> Self {
        Bijection(FinMap::identity(n))
    }

    pub fn size(&self) -> Cardinal {
        self.0.dom()
    }

    pub fn as_map(&self) -> &FinMap {
        &self.0
    }

    pub fn values(&self) -> &[usize] {
        self.0.values()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0.apply(i)
    }

    pub(crate) fn at(&self, i: usize) -> usize {
        self.0.at(i)
    }

    pub fn is_identity(&self) -> bool {
        self.values().iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Bijection) -> Result<Bijection, FinError> {
        Ok(Bijection(self.0.then(&other.0)?))
    }

    /// `self ∘ other`, panicking on size mismatch; for internal use where
    /// sizes are known to agree.
    pub(crate) fn after(&self, other: &Bijection) -> Bijection {
        other.then(self).expect("bijection sizes agree")
    }

    pub fn inverse(&self) -> Bijection {
        let mut inv = vec![0; self.size()];
        for (i, &v) in self.values().iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Bijection(FinMap {
            cod: self.size(),
            values: inv,
        })
    }

    /// All bijections of `n`, in lexicographic order of value sequences.
    pub fn all(n: Cardinal) -> impl Iterator<Item = Bijection> {
        use itertools::Itertools;
        (0..n)
            .permutations(n)
            .map(Bijection::from_zero_based)
    }
}

impl fmt::Debug for Bijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Bijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.values().iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", vals.join(","))
    }
}

/// Disjoint-set forest with path compression and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Merges the classes of `a` and `b`; returns false if already merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (big, small) = if self.size[ra] >= self.size[rb] { (ra, rb) } else { (rb, ra) };
        self.parent[small] = big;
        self.size[big] += self.size[small];
        true
    }

    /// Class index per element, numbered 0.. in order of least member.
    pub fn labels(&mut self) -> (usize, Vec<usize>) {
        let n = self.len();
        let mut label_of_root = vec![usize::MAX; n];
        let mut labels = Vec::with_capacity(n);
        let mut next = 0;
        for x in 0..n {
            let r = self.find(x);
            if label_of_root[r] == usize::MAX {
                label_of_root[r] = next;
                next += 1;
            }
            labels.push(label_of_root[r]);
        }
        (next, labels)
    }
}

/// A span `n ←θ₁ k →θ₂ m`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Span {
    left: FinMap,
    right: FinMap,
}

impl Span {
    pub fn new(left: FinMap, right: FinMap) -> Result<Self, FinError> {
        if left.dom() != right.dom() {
            return Err(FinError::ApexMismatch(left.dom(), right.dom()));
        }
        Ok(Span { left, right })
    }

    /// Convenience constructor from raw value lists.
    pub fn from_values(
        n: Cardinal,
        left: Vec<usize>,
        m: Cardinal,
        right: Vec<usize>,
    ) -> Result<Self, FinError> {
        Span::new(FinMap::new(left, n)?, FinMap::new(right, m)?)
    }

    pub fn left(&self) -> &FinMap {
        &self.left
    }

    pub fn right(&self) -> &FinMap {
        &self.right
    }

    pub fn apex(&self) -> Cardinal {
        self.left.dom()
    }

    pub fn n(&self) -> Cardinal {
        self.left.cod()
    }

    pub fn m(&self) -> Cardinal {
        self.right.cod()
    }

    fn components(&self) -> UnionFind {
        let n = self.n();
        let mut uf = UnionFind::new(n + self.m());
        for e in 0..self.apex() {
            uf.union(self.left.at(e), n + self.right.at(e));
        }
        uf
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} <- {} -> {}", self.left, self.apex(), self.right)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Pushout {
    pub r: Cardinal,
    pub tau1: FinMap,
    pub tau2: FinMap,
}

/// Pushout of a span in FinCard. Components of the graph `k ⇉ n + m` are
/// numbered in order of their least vertex, `n`-side vertices first.
pub fn pushout(s: &Span) -> Pushout {
    let n = s.n();
    let mut uf = s.components();
    let (r, labels) = uf.labels();
    Pushout {
        r,
        tau1: FinMap::from_zero_based(labels[..n].iter().copied(), r),
        tau2: FinMap::from_zero_based(labels[n..].iter().copied(), r),
    }
}

pub fn is_connected(s: &Span) -> bool {
    pushout(s).r == 1
}

/// Acyclic in the multigraph sense: no cycles and no repeated edges.
pub fn is_acyclic(s: &Span) -> bool {
    s.n() + s.m() == s.apex() + pushout(s).r
}

pub fn is_suitable_span(s: &Span) -> bool {
    s.n() + s.m() == s.apex() + 1 && is_connected(s)
}

/// A commuting square `φ₁ ∘ θ₁ = φ₂ ∘ θ₂` over the span `θ`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CommutingSquare {
    span: Span,
    bottom_left: FinMap,
    bottom_right: FinMap,
}

impl CommutingSquare {
    pub fn new(span: Span, bottom_left: FinMap, bottom_right: FinMap) -> Result<Self, FinError> {
        if bottom_left.dom() != span.n() {
            return Err(FinError::Mismatch {
                left_cod: span.n(),
                right_dom: bottom_left.dom(),
            });
        }
        if bottom_right.dom() != span.m() {
            return Err(FinError::Mismatch {
                left_cod: span.m(),
                right_dom: bottom_right.dom(),
            });
        }
        if bottom_left.cod() != bottom_right.cod() {
            return Err(FinError::Mismatch {
                left_cod: bottom_left.cod(),
                right_dom: bottom_right.cod(),
            });
        }
        for e in 1..=span.apex() {
            if bottom_left.apply(span.left.apply(e)) != bottom_right.apply(span.right.apply(e)) {
                return Err(FinError::NotCommuting(e));
            }
        }
        Ok(CommutingSquare {
            span,
            bottom_left,
            bottom_right,
        })
    }

    pub fn span(&self) -> &Span {
        &self.span
    }

    pub fn r(&self) -> Cardinal {
        self.bottom_left.cod()
    }

    /// True iff the square is a pushout square.
    pub fn is_pushout(&self) -> bool {
        let po = pushout(&self.span);
        if po.r != self.r() {
            return false;
        }
        // The comparison map r_po → r must be a bijection.
        let mut image = vec![0usize; po.r];
        for i in 1..=self.span.n() {
            image[po.tau1.apply(i) - 1] = self.bottom_left.apply(i);
        }
        for j in 1..=self.span.m() {
            image[po.tau2.apply(j) - 1] = self.bottom_right.apply(j);
        }
        image.iter().all(|&v| v > 0) && FinMap::new(image, self.r()).is_ok_and(|m| m.is_bijective())
    }
}

/// The spans obtained by pulling the square back along each `i: 1 → r`.
/// Fiber elements are renumbered in ambient order.
pub fn induced_spans(sq: &CommutingSquare) -> Vec<Span> {
    let s = &sq.span;
    (1..=sq.r())
        .map(|i| {
            let ns = sq.bottom_left.fiber(i);
            let ms = sq.bottom_right.fiber(i);
            let ks: Vec<usize> = (1..=s.apex())
                .filter(|&e| sq.bottom_left.apply(s.left.apply(e)) == i)
                .collect();
            Span {
                left: s.left.restrict(&ks, &ns),
                right: s.right.restrict(&ks, &ms),
            }
        })
        .collect()
}

/// Every span `n ← k → m` with the given sizes, in lexicographic order.
pub fn all_spans(n: Cardinal, k: Cardinal, m: Cardinal) -> Vec<Span> {
    let lefts = all_maps(k, n);
    let rights = all_maps(k, m);
    let mut out = Vec::with_capacity(lefts.len() * rights.len());
    for l in &lefts {
        for r in &rights {
            out.push(Span {
                left: l.clone(),
                right: r.clone(),
            });
        }
    }
    out
}

/// Every map `dom → cod`, in lexicographic order of value sequences.
pub fn all_maps(dom: Cardinal, cod: Cardinal) -> Vec<FinMap> {
    use itertools::Itertools;
    if dom == 0 {
        return vec![FinMap::identity(0).with_cod(cod)];
    }
    (0..dom)
        .map(|_| 0..cod)
        .multi_cartesian_product()
        .map(|vals| FinMap::from_zero_based(vals, cod))
        .collect()
}

impl FinMap {
    fn with_cod(mut self, cod: Cardinal) -> FinMap {
        self.cod = cod;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn span(n: usize, l: &[usize], m: usize, r: &[usize]) -> Span {
        Span::from_values(n, l.to_vec(), m, r.to_vec()).unwrap()
    }

    #[test]
    fn pushout_of_empty_apex_is_disjoint_union() {
        let po = pushout(&span(2, &[], 3, &[]));
        assert_eq!(po.r, 5);
        assert_eq!(po.tau1.values(), &[1, 2]);
        assert_eq!(po.tau2.values(), &[3, 4, 5]);
    }

    #[test]
    fn pushout_examples() {
        assert_eq!(pushout(&span(1, &[1, 1], 2, &[1, 2])).r, 1);
        let po = pushout(&span(2, &[1, 2], 2, &[1, 2]));
        assert_eq!(po.r, 2);
        assert_eq!(po.tau1.values(), &[1, 2]);
        assert_eq!(po.tau2.values(), &[1, 2]);
    }

    #[test]
    fn connectivity_examples() {
        assert!(is_connected(&span(0, &[], 1, &[])));
        assert!(!is_connected(&span(0, &[], 0, &[])));
        assert!(is_connected(&span(1, &[1, 1], 2, &[1, 2])));
    }

    #[test]
    fn acyclicity_examples() {
        assert!(is_acyclic(&span(3, &[], 2, &[])));
        assert!(!is_acyclic(&span(1, &[1, 1], 1, &[1, 1])));
        assert!(is_acyclic(&span(1, &[1, 1], 2, &[1, 2])));
    }

    #[test]
    fn suitable_examples() {
        assert!(is_suitable_span(&span(1, &[1], 1, &[1])));
        assert!(is_suitable_span(&span(1, &[1, 1], 2, &[1, 2])));
        assert!(!is_suitable_span(&span(1, &[1, 1], 1, &[1, 1])));
    }

    #[test]
    fn rejects_bad_maps() {
        assert!(matches!(FinMap::new(vec![0], 1), Err(FinError::OutOfRange { .. })));
        assert!(matches!(FinMap::new(vec![3], 2), Err(FinError::OutOfRange { .. })));
        assert!(matches!(
            Span::from_values(1, vec![1], 1, vec![]),
            Err(FinError::ApexMismatch(1, 0))
        ));
        assert!(Bijection::new(vec![1, 1]).is_err());
    }

    #[test]
    fn induced_spans_of_identity_square_split() {
        let id2 = FinMap::identity(2);
        let sq = CommutingSquare::new(span(2, &[1, 2], 2, &[1, 2]), id2.clone(), id2).unwrap();
        let spans = induced_spans(&sq);
        assert_eq!(spans, vec![span(1, &[1], 1, &[1]); 2]);
        assert!(sq.is_pushout());
    }

    #[test]
    fn induced_span_over_terminal_is_the_span() {
        let s = span(1, &[1, 1], 2, &[1, 2]);
        let sq = CommutingSquare::new(s.clone(), FinMap::terminal(1), FinMap::terminal(2)).unwrap();
        assert_eq!(induced_spans(&sq), vec![s]);
    }

    #[test]
    fn square_must_commute() {
        let s = span(2, &[1, 2], 2, &[1, 2]);
        let err = CommutingSquare::new(s, FinMap::identity(2), FinMap::new(vec![2, 1], 2).unwrap());
        assert_eq!(err.unwrap_err(), FinError::NotCommuting(1));
    }

    #[test]
    fn bijection_inverse_and_enumeration() {
        let b = Bijection::new(vec![3, 1, 2]).unwrap();
        assert!(b.then(&b.inverse()).unwrap().is_identity());
        let all: Vec<_> = Bijection::all(3).collect();
        assert_eq!(all.len(), 6);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(Bijection::all(0).count(), 1);
    }

    #[test]
    fn all_maps_counts() {
        assert_eq!(all_maps(2, 3).len(), 9);
        assert_eq!(all_maps(0, 3).len(), 1);
        assert_eq!(all_maps(2, 0).len(), 0);
    }
}
