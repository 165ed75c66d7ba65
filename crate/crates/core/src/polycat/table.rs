//! Finite, length-bounded presentations of polycategories.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{adjacent_word, composite_type, transposition, Obj, PolyError, Polycategory, PortSide};
use crate::fincard::Bijection;

pub type MapId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("unknown object {0:?}")]
    UnknownObject(Obj),
    #[error("unknown map {0:?}")]
    UnknownMap(String),
    #[error("map {0:?} is listed twice")]
    DuplicateMap(String),
    #[error("hom ({0}) exceeds the bound")]
    OverBound(String),
    #[error("{0}")]
    TypeMismatch(String),
    #[error("{0}")]
    Incomplete(String),
    #[error("{0}")]
    Duplicate(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableFile {
    objects: Vec<Obj>,
    bound: usize,
    homs: Vec<HomEntry>,
    identities: BTreeMap<Obj, String>,
    exchange: Vec<ExchangeEntry>,
    composition: Vec<CompEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HomEntry {
    dom: Vec<Obj>,
    cod: Vec<Obj>,
    maps: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ExchangeEntry {
    map: String,
    side: SideName,
    position: usize,
    result: String,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum SideName {
    Dom,
    Cod,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CompEntry {
    g: String,
    f: String,
    cut: [usize; 2],
    result: String,
}

/// A polycategory truncated at list length `bound`: all maps whose domain
/// and codomain have length at most `bound`, exchanges by adjacent
/// transpositions, and every binary composite that stays within the bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyTable {
    objects: Vec<Obj>,
    bound: usize,
    names: Vec<String>,
    doms: Vec<Vec<Obj>>,
    cods: Vec<Vec<Obj>>,
    identities: BTreeMap<Obj, MapId>,
    exchange: HashMap<(MapId, PortSide, usize), MapId>,
    composition: HashMap<(MapId, MapId, usize, usize), MapId>,
}

impl PolyTable {
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

    pub fn maps(&self) -> impl Iterator<Item = MapId> {
        0..self.names.len()
    }

    pub fn name(&self, id: MapId) -> &str {
        &self.names[id]
    }

    pub fn id(&self, name: &str) -> Option<MapId> {
        self.names.iter().position(|n| n == name)
    }

    /// All maps `Γ → Δ`.
    pub fn hom(&self, dom: &[Obj], cod: &[Obj]) -> Vec<MapId> {
        self.maps().filter(|&m| self.doms[m] == dom && self.cods[m] == cod).collect()
    }

    pub fn composition_entry(&self, g: MapId, f: MapId, cut: (usize, usize)) -> Option<MapId> {
        self.composition.get(&(g, f, cut.0, cut.1)).copied()
    }

    /// Overwrites one composition entry.
    pub fn set_composition(&mut self, g: MapId, f: MapId, cut: (usize, usize), result: MapId) {
        self.composition.insert((g, f, cut.0, cut.1), result);
    }

    /// Overwrites the exchange of `f` by the transposition at `position`.
    pub fn set_exchange(&mut self, f: MapId, side: PortSide, position: usize, result: MapId) {
        self.exchange.insert((f, side, position), result);
    }

    pub fn exchange_entry(&self, f: MapId, side: PortSide, position: usize) -> Option<MapId> {
        self.exchange.get(&(f, side, position)).copied()
    }

    pub fn composition_len(&self) -> usize {
        self.composition.len()
    }

    /// The table with one map in every hom of length at most `bound`.
    pub fn terminal(objects: &[&str], bound: usize) -> Self {
        let objects: Vec<Obj> = objects.iter().map(|s| s.to_string()).collect();
        let lists = lists_up_to(&objects, bound);
        let mut t = PolyTable::empty(objects.clone(), bound);
        let mut index = HashMap::new();
        for d in &lists {
            for c in &lists {
                let id = t.names.len();
                t.names.push(format!("t[{}|{}]", d.join(","), c.join(",")));
                t.doms.push(d.clone());
                t.cods.push(c.clone());
                index.insert((d.clone(), c.clone()), id);
            }
        }
        for x in &objects {
            t.identities.insert(x.clone(), index[&(vec![x.clone()], vec![x.clone()])]);
        }
        for m in 0..t.names.len() {
            for side in [PortSide::Dom, PortSide::Cod] {
                let len = t.side_len(m, side);
                for p in 0..len.saturating_sub(1) {
                    let (mut d, mut c) = (t.doms[m].clone(), t.cods[m].clone());
                    match side {
                        PortSide::Dom => d.swap(p, p + 1),
                        PortSide::Cod => c.swap(p, p + 1),
                    }
                    t.exchange.insert((m, side, p), index[&(d, c)]);
                }
            }
        }
        for g in 0..t.names.len() {
            for f in 0..t.names.len() {
                for i in 0..t.cods[f].len() {
                    for j in 0..t.doms[g].len() {
                        if let Ok((d, c)) = t.cut_type(g, f, (i, j)) {
                            if d.len() <= bound && c.len() <= bound {
                                t.composition.insert((g, f, i, j), index[&(d, c)]);
                            }
                        }
                    }
                }
            }
        }
        t
    }

    /// Closes `seeds` and all identities under composition and exchange,
    /// keeping maps within `bound`. Returns the table and the map behind
    /// each id. Fails when more than `limit` maps appear.
    pub fn truncate<P: Polycategory>(
        p: &P,
        objects: &[Obj],
        seeds: &[P::Map],
        bound: usize,
        limit: usize,
    ) -> Result<(Self, Vec<P::Map>), TableError> {
        let fits = |m: &P::Map| p.dom(m).len() <= bound && p.cod(m).len() <= bound;
        let mut set: BTreeSet<P::Map> = BTreeSet::new();
        for x in objects {
            set.insert(p.identity(x)?);
        }
        set.extend(seeds.iter().filter(|m| fits(m)).cloned());
        loop {
            let current: Vec<P::Map> = set.iter().cloned().collect();
            let mut fresh = Vec::new();
            for f in &current {
                let (d, c) = (p.dom(f).len(), p.cod(f).len());
                for q in 0..d.saturating_sub(1) {
                    fresh.push(p.exchange(f, &transposition(d, q), &Bijection::identity(c))?);
                }
                for q in 0..c.saturating_sub(1) {
                    fresh.push(p.exchange(f, &Bijection::identity(d), &transposition(c, q))?);
                }
                for g in &current {
                    for i in 0..c {
                        for j in 0..p.dom(g).len() {
                            let Ok((rd, rc)) = composite_type(p, g, f, (i, j)) else { continue };
                            if rd.len() <= bound && rc.len() <= bound {
                                fresh.push(p.compose(g, f, (i, j))?);
                            }
                        }
                    }
                }
            }
            let before = set.len();
            set.extend(fresh);
            if set.len() > limit {
                return Err(PolyError::TooLarge(limit).into());
            }
            if set.len() == before {
                break;
            }
        }
        let maps: Vec<P::Map> = set.into_iter().collect();
        let index: HashMap<&P::Map, MapId> = maps.iter().enumerate().map(|(k, m)| (m, k)).collect();
        let mut t = PolyTable::empty(objects.to_vec(), bound);
        for (k, m) in maps.iter().enumerate() {
            t.names.push(format!("m{k}"));
            t.doms.push(p.dom(m));
            t.cods.push(p.cod(m));
        }
        for x in objects {
            let id = index[&p.identity(x)?];
            t.names[id] = format!("id_{x}");
            t.identities.insert(x.clone(), id);
        }
        for (k, f) in maps.iter().enumerate() {
            let (d, c) = (t.doms[k].len(), t.cods[k].len());
            for q in 0..d.saturating_sub(1) {
                let r = p.exchange(f, &transposition(d, q), &Bijection::identity(c))?;
                t.exchange.insert((k, PortSide::Dom, q), index[&r]);
            }
            for q in 0..c.saturating_sub(1) {
                let r = p.exchange(f, &Bijection::identity(d), &transposition(c, q))?;
                t.exchange.insert((k, PortSide::Cod, q), index[&r]);
            }
            for (l, g) in maps.iter().enumerate() {
                for i in 0..c {
                    for j in 0..t.doms[l].len() {
                        let Ok((rd, rc)) = composite_type(p, g, f, (i, j)) else { continue };
                        if rd.len() <= bound && rc.len() <= bound {
                            let r = p.compose(g, f, (i, j))?;
                            t.composition.insert((l, k, i, j), index[&r]);
                        }
                    }
                }
            }
        }
        Ok((t, maps))
    }

    fn empty(objects: Vec<Obj>, bound: usize) -> Self {
        PolyTable {
            objects,
            bound,
            names: Vec::new(),
            doms: Vec::new(),
            cods: Vec::new(),
            identities: BTreeMap::new(),
            exchange: HashMap::new(),
            composition: HashMap::new(),
        }
    }

    fn side_len(&self, m: MapId, side: PortSide) -> usize {
        match side {
            PortSide::Dom => self.doms[m].len(),
            PortSide::Cod => self.cods[m].len(),
        }
    }

    fn cut_type(&self, g: MapId, f: MapId, cut: (usize, usize)) -> Result<(Vec<Obj>, Vec<Obj>), PolyError> {
        composite_type(self, &g, &f, cut)
    }

    pub fn from_json(text: &str) -> Result<Self, TableError> {
        let file: TableFile = serde_json::from_str(text).map_err(|e| TableError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        PolyTable::from_file(file)
    }

    fn from_file(file: TableFile) -> Result<Self, TableError> {
        let mut t = PolyTable::empty(file.objects.clone(), file.bound);
        let known: BTreeSet<&Obj> = file.objects.iter().collect();
        let mut ids: HashMap<String, MapId> = HashMap::new();
        for hom in &file.homs {
            for x in hom.dom.iter().chain(&hom.cod) {
                if !known.contains(x) {
                    return Err(TableError::UnknownObject(x.clone()));
                }
            }
            if hom.dom.len() > file.bound || hom.cod.len() > file.bound {
                return Err(TableError::OverBound(format!("{:?} -> {:?}", hom.dom, hom.cod)));
            }
            for name in &hom.maps {
                if ids.insert(name.clone(), t.names.len()).is_some() {
                    return Err(TableError::DuplicateMap(name.clone()));
                }
                t.names.push(name.clone());
                t.doms.push(hom.dom.clone());
                t.cods.push(hom.cod.clone());
            }
        }
        let lookup = |n: &str| ids.get(n).copied().ok_or_else(|| TableError::UnknownMap(n.to_string()));
        for x in &file.objects {
            let name = file
                .identities
                .get(x)
                .ok_or_else(|| TableError::Incomplete(format!("no identity for {x:?}")))?;
            let id = lookup(name)?;
            if t.doms[id] != [x.clone()] || t.cods[id] != [x.clone()] {
                return Err(TableError::TypeMismatch(format!("identity {name:?} is not in ({x};{x})")));
            }
            t.identities.insert(x.clone(), id);
        }
        if let Some(x) = file.identities.keys().find(|x| !known.contains(x)) {
            return Err(TableError::UnknownObject(x.clone()));
        }
        for e in &file.exchange {
            let (m, r) = (lookup(&e.map)?, lookup(&e.result)?);
            let side = match e.side {
                SideName::Dom => PortSide::Dom,
                SideName::Cod => PortSide::Cod,
            };
            if e.position + 1 >= t.side_len(m, side) {
                return Err(TableError::TypeMismatch(format!("exchange of {:?} at {} is out of range", e.map, e.position)));
            }
            let (mut d, mut c) = (t.doms[m].clone(), t.cods[m].clone());
            match side {
                PortSide::Dom => d.swap(e.position, e.position + 1),
                PortSide::Cod => c.swap(e.position, e.position + 1),
            }
            if t.doms[r] != d || t.cods[r] != c {
                return Err(TableError::TypeMismatch(format!("exchange result {:?} has the wrong type", e.result)));
            }
            if t.exchange.insert((m, side, e.position), r).is_some() {
                return Err(TableError::Duplicate(format!("exchange of {:?} at {} given twice", e.map, e.position)));
            }
        }
        for m in 0..t.names.len() {
            for side in [PortSide::Dom, PortSide::Cod] {
                for p in 0..t.side_len(m, side).saturating_sub(1) {
                    if !t.exchange.contains_key(&(m, side, p)) {
                        return Err(TableError::Incomplete(format!(
                            "no exchange for {:?} at {:?} position {p}",
                            t.names[m], side
                        )));
                    }
                }
            }
        }
        for e in &file.composition {
            let (g, f, r) = (lookup(&e.g)?, lookup(&e.f)?, lookup(&e.result)?);
            let cut = (e.cut[0], e.cut[1]);
            let (d, c) = t.cut_type(g, f, cut).map_err(|err| {
                TableError::TypeMismatch(format!("composition of {:?} after {:?}: {err}", e.g, e.f))
            })?;
            if t.doms[r] != d || t.cods[r] != c {
                return Err(TableError::TypeMismatch(format!("composite {:?} has the wrong type", e.result)));
            }
            if t.composition.insert((g, f, cut.0, cut.1), r).is_some() {
                return Err(TableError::Duplicate(format!("composition of {:?} after {:?} given twice", e.g, e.f)));
            }
        }
        for g in 0..t.names.len() {
            for f in 0..t.names.len() {
                for i in 0..t.cods[f].len() {
                    for j in 0..t.doms[g].len() {
                        let Ok((d, c)) = t.cut_type(g, f, (i, j)) else { continue };
                        if d.len() <= t.bound && c.len() <= t.bound && !t.composition.contains_key(&(g, f, i, j)) {
                            return Err(TableError::Incomplete(format!(
                                "no composite of {:?} after {:?} at ({i},{j})",
                                t.names[g], t.names[f]
                            )));
                        }
                    }
                }
            }
        }
        Ok(t)
    }

    pub fn to_json(&self) -> String {
        let mut homs: BTreeMap<(Vec<Obj>, Vec<Obj>), Vec<String>> = BTreeMap::new();
        for m in self.maps() {
            homs.entry((self.doms[m].clone(), self.cods[m].clone()))
                .or_default()
                .push(self.names[m].clone());
        }
        let mut exchange: Vec<_> = self.exchange.iter().collect();
        exchange.sort();
        let mut composition: Vec<_> = self.composition.iter().collect();
        composition.sort();
        let file = TableFile {
            objects: self.objects.clone(),
            bound: self.bound,
            homs: homs
                .into_iter()
                .map(|((dom, cod), maps)| HomEntry { dom, cod, maps })
                .collect(),
            identities: self
                .identities
                .iter()
                .map(|(x, &id)| (x.clone(), self.names[id].clone()))
                .collect(),
            exchange: exchange
                .into_iter()
                .map(|(&(m, side, position), &r)| ExchangeEntry {
                    map: self.names[m].clone(),
                    side: match side {
                        PortSide::Dom => SideName::Dom,
                        PortSide::Cod => SideName::Cod,
                    },
                    position,
                    result: self.names[r].clone(),
                })
                .collect(),
            composition: composition
                .into_iter()
                .map(|(&(g, f, i, j), &r)| CompEntry {
                    g: self.names[g].clone(),
                    f: self.names[f].clone(),
                    cut: [i, j],
                    result: self.names[r].clone(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("table serializes")
    }
}

fn lists_up_to(objects: &[Obj], bound: usize) -> Vec<Vec<Obj>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..bound {
        let mut next = Vec::new();
        for l in &layer {
            for x in objects {
                let mut l2: Vec<Obj> = l.clone();
                l2.push(x.clone());
                next.push(l2);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

impl Polycategory for PolyTable {
    type Map = MapId;

    fn dom(&self, f: &MapId) -> Vec<Obj> {
        self.doms[*f].clone()
    }

    fn cod(&self, f: &MapId) -> Vec<Obj> {
        self.cods[*f].clone()
    }

    fn identity(&self, x: &Obj) -> Result<MapId, PolyError> {
        self.identities
            .get(x)
            .copied()
            .ok_or_else(|| PolyError::UnknownObject(x.clone()))
    }

    fn compose(&self, g: &MapId, f: &MapId, cut: (usize, usize)) -> Result<MapId, PolyError> {
        let (d, c) = self.cut_type(*g, *f, cut)?;
        if d.len() > self.bound || c.len() > self.bound {
            return Err(PolyError::BoundExceeded(self.bound));
        }
        self.composition_entry(*g, *f, cut).ok_or_else(|| {
            PolyError::MissingEntry(format!("{} after {} at {:?}", self.names[*g], self.names[*f], cut))
        })
    }

    fn exchange(&self, f: &MapId, sigma: &Bijection, tau: &Bijection) -> Result<MapId, PolyError> {
        let (d, c) = (self.doms[*f].len(), self.cods[*f].len());
        if sigma.size() != d {
            return Err(PolyError::PermSize { got: sigma.size(), want: d });
        }
        if tau.size() != c {
            return Err(PolyError::PermSize { got: tau.size(), want: c });
        }
        let mut cur = *f;
        for (side, perm) in [(PortSide::Dom, sigma), (PortSide::Cod, tau)] {
            for p in adjacent_word(perm) {
                cur = self.exchange_entry(cur, side, p).ok_or_else(|| {
                    PolyError::MissingEntry(format!("exchange of {} at {:?} {p}", self.names[cur], side))
                })?;
            }
        }
        Ok(cur)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn terminal_table_shape() {
        let t = PolyTable::terminal(&["*"], 2);
        assert_eq!(t.len(), 9);
        let id = t.identity(&"*".to_string()).unwrap();
        assert_eq!(t.compose(&id, &id, (0, 0)).unwrap(), id);
    }

    #[test]
    fn json_roundtrip() {
        let t = PolyTable::terminal(&["*"], 2);
        let back = PolyTable::from_json(&t.to_json()).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn parse_errors_carry_position() {
        let err = PolyTable::from_json("{\n  \"objects\": [1]\n}").unwrap_err();
        match err {
            TableError::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn missing_entries_rejected() {
        let t = PolyTable::terminal(&["*"], 1);
        let mut file: TableFile = serde_json::from_str(&t.to_json()).unwrap();
        file.composition.pop();
        assert!(matches!(PolyTable::from_file(file.clone()), Err(TableError::Incomplete(_))));
        file.identities.clear();
        assert!(matches!(PolyTable::from_file(file), Err(TableError::Incomplete(_))));
    }

    #[test]
    fn exchange_follows_words() {
        let t = PolyTable::terminal(&["a", "b"], 3);
        let d: Vec<Obj> = vec!["a".into(), "b".into(), "b".into()];
        let m = t.hom(&d, &[])[0];
        let sigma = Bijection::new(vec![3, 1, 2]).unwrap();
        let r = t.exchange(&m, &sigma, &Bijection::identity(0)).unwrap();
        assert_eq!(t.dom(&r), vec!["b", "a", "b"]);
    }
}
