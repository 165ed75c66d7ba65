//! Small polycategories used as fixtures: the terminal one, truncations of
//! free ones, and deliberately broken variants.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::polycat::{FamilyMatching, FreeCat, FreeTerm, Generator, MapId, Pairing, PolyTable, Polycategory, PortSide};

/// Generator `f: a → (b, c)`.
pub fn free_one() -> FreeCat {
    FreeCat::new(vec![Generator::new("f", &["a"], &["b", "c"])], 6)
}

/// Generators `f: a → (x, x)` and `g: x → b`.
pub fn free_two() -> FreeCat {
    FreeCat::new(
        vec![Generator::new("f", &["a"], &["x", "x"]), Generator::new("g", &["x"], &["b"])],
        6,
    )
}

/// The truncation of a free polycategory at list length `bound`.
pub fn free_table(cat: &FreeCat, bound: usize) -> (PolyTable, Vec<FreeTerm>) {
    let seeds: Vec<FreeTerm> = cat
        .generators()
        .iter()
        .map(|g| cat.generator(&g.name).expect("generator exists"))
        .collect();
    PolyTable::truncate(cat, &cat.objects(), &seeds, bound, 10_000).expect("free truncation is finite")
}

/// One composite between non-identity maps whose hom has another element,
/// redirected to that element. Returns the cell that was changed.
pub fn mutate_composition(t: &PolyTable) -> Option<(PolyTable, (MapId, MapId, (usize, usize)))> {
    let ids: Vec<MapId> = t.objects().iter().filter_map(|x| t.identity(x).ok()).collect();
    for g in t.maps() {
        for f in t.maps() {
            if ids.contains(&g) || ids.contains(&f) {
                continue;
            }
            for i in 0..t.cod(&f).len() {
                for j in 0..t.dom(&g).len() {
                    let Some(r) = t.composition_entry(g, f, (i, j)) else { continue };
                    if let Some(&other) = t.hom(&t.dom(&r), &t.cod(&r)).iter().find(|&&m| m != r) {
                        let mut bad = t.clone();
                        bad.set_composition(g, f, (i, j), other);
                        return Some((bad, (g, f, (i, j))));
                    }
                }
            }
        }
    }
    None
}

/// One adjacent-transposition exchange redirected to a different map of
/// the same type.
pub fn mutate_exchange(t: &PolyTable) -> Option<(PolyTable, MapId)> {
    for m in t.maps() {
        for side in [PortSide::Dom, PortSide::Cod] {
            let len = match side {
                PortSide::Dom => t.dom(&m).len(),
                PortSide::Cod => t.cod(&m).len(),
            };
            for p in 0..len.saturating_sub(1) {
                let r = t.exchange_entry(m, side, p).expect("complete table");
                if let Some(&other) = t.hom(&t.dom(&r), &t.cod(&r)).iter().find(|&&x| x != r) {
                    let mut bad = t.clone();
                    bad.set_exchange(m, side, p, other);
                    return Some((bad, m));
                }
            }
        }
    }
    None
}

pub const PRESETS: [&str; 5] = ["terminal", "free1", "free2", "free2-mutated", "free2-mutated-exchange"];

/// Named fixture tables at list-length bound `bound`.
pub fn preset(name: &str, bound: usize) -> Option<PolyTable> {
    match name {
        "terminal" => Some(PolyTable::terminal(&["*"], bound)),
        "free1" => Some(free_table(&free_one(), bound).0),
        "free2" => Some(free_table(&free_two(), bound).0),
        "free2-mutated" => mutate_composition(&free_table(&free_two(), bound).0).map(|(t, _)| t),
        "free2-mutated-exchange" => mutate_exchange(&free_table(&free_two(), bound).0).map(|(t, _)| t),
        _ => None,
    }
}

const OBJECTS: [&str; 3] = ["p", "q", "r"];

/// A random suitable matching between families of fresh generators, at most
/// `max_vertices` of them. With `partial`, some positions stay unpaired.
pub fn random_family<R: Rng>(rng: &mut R, max_vertices: usize, partial: bool) -> (FreeCat, FamilyMatching<FreeTerm>) {
    let total = rng.gen_range(2..=max_vertices.max(2));
    let j = rng.gen_range(1..total);
    let k = total - j;
    // Random spanning tree of the complete bipartite graph on j + k vertices.
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut in_f = vec![false; j];
    let mut in_g = vec![false; k];
    let (a0, b0) = (rng.gen_range(0..j), rng.gen_range(0..k));
    edges.push((a0, b0));
    in_f[a0] = true;
    in_g[b0] = true;
    while in_f.iter().any(|x| !x) || in_g.iter().any(|x| !x) {
        let missing_f: Vec<usize> = (0..j).filter(|&a| !in_f[a]).collect();
        let missing_g: Vec<usize> = (0..k).filter(|&b| !in_g[b]).collect();
        if !missing_f.is_empty() && (missing_g.is_empty() || rng.gen_bool(0.5)) {
            let a = *missing_f.choose(rng).expect("nonempty");
            let choices: Vec<usize> = (0..k).filter(|&b| in_g[b]).collect();
            edges.push((a, *choices.choose(rng).expect("nonempty")));
            in_f[a] = true;
        } else {
            let b = *missing_g.choose(rng).expect("nonempty");
            let choices: Vec<usize> = (0..j).filter(|&a| in_f[a]).collect();
            edges.push((*choices.choose(rng).expect("nonempty"), b));
            in_g[b] = true;
        }
    }
    let objects: Vec<&str> = edges.iter().map(|_| *OBJECTS.choose(rng).expect("nonempty")).collect();
    let extra = |rng: &mut R, on: bool| if on { rng.gen_range(0..=1) } else { 0 };
    let pick = |rng: &mut R| OBJECTS.choose(rng).expect("nonempty").to_string();

    // Output slots of each f: its tree edges plus unpaired extras, shuffled.
    let mut f_outs: Vec<Vec<Option<usize>>> = vec![Vec::new(); j];
    let mut g_ins: Vec<Vec<Option<usize>>> = vec![Vec::new(); k];
    for (e, &(a, b)) in edges.iter().enumerate() {
        f_outs[a].push(Some(e));
        g_ins[b].push(Some(e));
    }
    for slots in f_outs.iter_mut().chain(g_ins.iter_mut()) {
        for _ in 0..extra(rng, partial) {
            slots.push(None);
        }
        slots.shuffle(rng);
    }
    let mut gens = Vec::new();
    for (a, slots) in f_outs.iter().enumerate() {
        let dom: Vec<String> = (0..rng.gen_range(0..=2)).map(|_| pick(rng)).collect();
        let cod = slots
            .iter()
            .map(|s| s.map(|e| objects[e].to_string()).unwrap_or_else(|| pick(rng)))
            .collect();
        gens.push(Generator { name: format!("f{a}"), dom, cod });
    }
    for (b, slots) in g_ins.iter().enumerate() {
        let dom = slots
            .iter()
            .map(|s| s.map(|e| objects[e].to_string()).unwrap_or_else(|| pick(rng)))
            .collect();
        let cod: Vec<String> = (0..rng.gen_range(0..=2)).map(|_| pick(rng)).collect();
        gens.push(Generator { name: format!("g{b}"), dom, cod });
    }
    let cat = FreeCat::new(gens, 16);
    let fs = (0..j).map(|a| cat.generator(&format!("f{a}")).expect("generator exists")).collect();
    let gs = (0..k).map(|b| cat.generator(&format!("g{b}")).expect("generator exists")).collect();
    let mut pairs = Vec::new();
    for (e, &(a, b)) in edges.iter().enumerate() {
        let out = f_outs[a].iter().position(|s| *s == Some(e)).expect("edge has a slot");
        let inp = g_ins[b].iter().position(|s| *s == Some(e)).expect("edge has a slot");
        pairs.push(Pairing { f: a, out, g: b, inp });
    }
    (cat, FamilyMatching::new(fs, gs, pairs))
}
