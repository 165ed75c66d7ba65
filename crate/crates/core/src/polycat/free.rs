//! The free symmetric polycategory on a set of generators. Maps are trees of
//! generator instances, kept in a canonical numbering so equality of terms
//! is structural equality.

use std::collections::HashMap;
use std::fmt;

use super::compose::FamilyMatching;
use super::{is_suitable_matching, permute, PolyError, Polycategory};
use super::Obj;
use crate::fincard::Bijection;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub dom: Vec<Obj>,
    pub cod: Vec<Obj>,
}

impl Generator {
    pub fn new(name: &str, dom: &[&str], cod: &[&str]) -> Self {
        Generator {
            name: name.to_string(),
            dom: dom.iter().map(|s| s.to_string()).collect(),
            cod: cod.iter().map(|s| s.to_string()).collect(),
        }
    }
}

/// `(vertex, position)`.
type Port = (usize, usize);

/// A tree of generator instances. `edges` pair an output port with an input
/// port; `inputs` and `outputs` list the free ports in boundary order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    pub gens: Vec<usize>,
    pub edges: Vec<(Port, Port)>,
    pub inputs: Vec<Port>,
    pub outputs: Vec<Port>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FreeTerm {
    Identity(Obj),
    Graph(Graph),
}

impl FreeTerm {
    pub fn vertex_count(&self) -> usize {
        match self {
            FreeTerm::Identity(_) => 0,
            FreeTerm::Graph(g) => g.gens.len(),
        }
    }
}

impl fmt::Display for FreeTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FreeTerm::Identity(x) => write!(f, "id[{x}]"),
            FreeTerm::Graph(g) => {
                let gens: Vec<String> = g.gens.iter().map(|k| format!("#{k}")).collect();
                let edges: Vec<String> = g
                    .edges
                    .iter()
                    .map(|((a, i), (b, j))| format!("{a}.{i}>{b}.{j}"))
                    .collect();
                let ports = |ps: &[Port]| ps.iter().map(|(v, p)| format!("{v}.{p}")).collect::<Vec<_>>().join(",");
                write!(
                    f,
                    "[{} | {} | in {} | out {}]",
                    gens.join(","),
                    edges.join(","),
                    ports(&g.inputs),
                    ports(&g.outputs)
                )
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct FreeCat {
    generators: Vec<Generator>,
    max_vertices: usize,
}

impl FreeCat {
    pub fn new(generators: Vec<Generator>, max_vertices: usize) -> Self {
        FreeCat {
            generators,
            max_vertices,
        }
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn objects(&self) -> Vec<Obj> {
        let mut objs: Vec<Obj> = self
            .generators
            .iter()
            .flat_map(|g| g.dom.iter().chain(&g.cod).cloned())
            .collect();
        objs.sort();
        objs.dedup();
        objs
    }

    /// The one-vertex term of the named generator.
    pub fn generator(&self, name: &str) -> Option<FreeTerm> {
        let k = self.generators.iter().position(|g| g.name == name)?;
        let g = &self.generators[k];
        Some(FreeTerm::Graph(canonical(
            &self.generators,
            Graph {
                gens: vec![k],
                edges: Vec::new(),
                inputs: (0..g.dom.len()).map(|p| (0, p)).collect(),
                outputs: (0..g.cod.len()).map(|p| (0, p)).collect(),
            },
        )))
    }

    fn in_type(&self, g: &Graph, port: Port) -> Obj {
        self.generators[g.gens[port.0]].dom[port.1].clone()
    }

    fn out_type(&self, g: &Graph, port: Port) -> Obj {
        self.generators[g.gens[port.0]].cod[port.1].clone()
    }

    fn finish(&self, g: Graph) -> Result<FreeTerm, PolyError> {
        if g.gens.len() > self.max_vertices {
            return Err(PolyError::TooLarge(self.max_vertices));
        }
        Ok(FreeTerm::Graph(canonical(&self.generators, g)))
    }
}

impl Polycategory for FreeCat {
    type Map = FreeTerm;

    fn dom(&self, f: &FreeTerm) -> Vec<Obj> {
        match f {
            FreeTerm::Identity(x) => vec![x.clone()],
            FreeTerm::Graph(g) => g.inputs.iter().map(|&p| self.in_type(g, p)).collect(),
        }
    }

    fn cod(&self, f: &FreeTerm) -> Vec<Obj> {
        match f {
            FreeTerm::Identity(x) => vec![x.clone()],
            FreeTerm::Graph(g) => g.outputs.iter().map(|&p| self.out_type(g, p)).collect(),
        }
    }

    fn identity(&self, x: &Obj) -> Result<FreeTerm, PolyError> {
        Ok(FreeTerm::Identity(x.clone()))
    }

    fn compose(&self, g: &FreeTerm, f: &FreeTerm, cut: (usize, usize)) -> Result<FreeTerm, PolyError> {
        super::composite_type(self, g, f, cut)?;
        let (i, j) = cut;
        match (g, f) {
            (_, FreeTerm::Identity(_)) => Ok(g.clone()),
            (FreeTerm::Identity(_), _) => Ok(f.clone()),
            (FreeTerm::Graph(gg), FreeTerm::Graph(fg)) => {
                let off = fg.gens.len();
                let shift = |(v, p): Port| (v + off, p);
                let mut gens = fg.gens.clone();
                gens.extend(&gg.gens);
                let mut edges = fg.edges.clone();
                edges.extend(gg.edges.iter().map(|&(a, b)| (shift(a), shift(b))));
                edges.push((fg.outputs[i], shift(gg.inputs[j])));
                let gin: Vec<Port> = gg.inputs.iter().map(|&p| shift(p)).collect();
                let gout: Vec<Port> = gg.outputs.iter().map(|&p| shift(p)).collect();
                let inputs = super::splice(&gin, j, &fg.inputs);
                let outputs = super::splice(&fg.outputs, i, &gout);
                self.finish(Graph {
                    gens,
                    edges,
                    inputs,
                    outputs,
                })
            }
        }
    }

    fn exchange(&self, f: &FreeTerm, sigma: &Bijection, tau: &Bijection) -> Result<FreeTerm, PolyError> {
        let (d, c) = (self.dom(f).len(), self.cod(f).len());
        if sigma.size() != d {
            return Err(PolyError::PermSize { got: sigma.size(), want: d });
        }
        if tau.size() != c {
            return Err(PolyError::PermSize { got: tau.size(), want: c });
        }
        match f {
            FreeTerm::Identity(_) => Ok(f.clone()),
            FreeTerm::Graph(g) => self.finish(Graph {
                gens: g.gens.clone(),
                edges: g.edges.clone(),
                inputs: permute(&g.inputs, sigma),
                outputs: permute(&g.outputs, tau),
            }),
        }
    }
}

/// Renumbers vertices in depth-first order from the vertex owning the first
/// boundary port, visiting each vertex's inputs before its outputs. Closed
/// terms take the least numbering over all starting vertices.
fn canonical(gens: &[Generator], g: Graph) -> Graph {
    let n = g.gens.len();
    if n == 0 {
        return g;
    }
    let mut up: HashMap<Port, Port> = HashMap::new();
    let mut down: HashMap<Port, Port> = HashMap::new();
    for &(o, i) in &g.edges {
        down.insert(o, i);
        up.insert(i, o);
    }
    let renumber = |root: usize| -> Graph {
        let mut order = vec![usize::MAX; n];
        let mut next = 0;
        let mut stack = vec![root];
        let mut seq = Vec::new();
        // Iterative preorder: push neighbours in reverse so they pop in order.
        while let Some(v) = stack.pop() {
            if order[v] != usize::MAX {
                continue;
            }
            order[v] = next;
            next += 1;
            seq.push(v);
            let spec = &gens[g.gens[v]];
            let mut nbrs = Vec::new();
            for p in 0..spec.dom.len() {
                if let Some(&(w, _)) = up.get(&(v, p)) {
                    nbrs.push(w);
                }
            }
            for p in 0..spec.cod.len() {
                if let Some(&(w, _)) = down.get(&(v, p)) {
                    nbrs.push(w);
                }
            }
            for &w in nbrs.iter().rev() {
                if order[w] == usize::MAX {
                    stack.push(w);
                }
            }
        }
        for v in 0..n {
            if order[v] == usize::MAX {
                order[v] = next;
                next += 1;
                seq.push(v);
            }
        }
        let re = |(v, p): Port| (order[v], p);
        let mut edges: Vec<(Port, Port)> = g.edges.iter().map(|&(a, b)| (re(a), re(b))).collect();
        edges.sort();
        Graph {
            gens: seq.iter().map(|&v| g.gens[v]).collect(),
            edges,
            inputs: g.inputs.iter().map(|&p| re(p)).collect(),
            outputs: g.outputs.iter().map(|&p| re(p)).collect(),
        }
    };
    if let Some(&(root, _)) = g.inputs.first().or(g.outputs.first()) {
        renumber(root)
    } else {
        (0..n).map(renumber).min().expect("nonempty")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum End {
    In(Port),
    Out(Port),
    Wire(usize),
}

/// Builds the polycomposite of a family directly as one tree, without
/// binary composition: all generator instances are laid side by side and
/// every paired position becomes an edge. Identity members become wires.
/// The boundary is ordered as in [`super::polycompose`].
pub fn graft_family(cat: &FreeCat, fm: &FamilyMatching<FreeTerm>) -> Result<FreeTerm, PolyError> {
    if !is_suitable_matching(cat, fm)? {
        return Err(PolyError::Unsuitable);
    }
    let mut gens = Vec::new();
    let mut edges = Vec::new();
    let mut ins: Vec<Vec<End>> = Vec::new();
    let mut outs: Vec<Vec<End>> = Vec::new();
    for (v, m) in fm.fs.iter().chain(&fm.gs).enumerate() {
        match m {
            FreeTerm::Identity(_) => {
                ins.push(vec![End::Wire(v)]);
                outs.push(vec![End::Wire(v)]);
            }
            FreeTerm::Graph(g) => {
                let off = gens.len();
                gens.extend(&g.gens);
                edges.extend(g.edges.iter().map(|&((a, i), (b, j))| ((a + off, i), (b + off, j))));
                ins.push(g.inputs.iter().map(|&(a, i)| End::In((a + off, i))).collect());
                outs.push(g.outputs.iter().map(|&(a, i)| End::Out((a + off, i))).collect());
            }
        }
    }
    if gens.is_empty() {
        return cat.identity(&cat.dom(fm.fs.first().or(fm.gs.first()).expect("nonempty family"))[0]);
    }
    let j = fm.fs.len();
    let total = fm.vertex_count();
    let mut wire_down: Vec<Option<Port>> = vec![None; total];
    let mut wire_up: Vec<Option<Port>> = vec![None; total];
    for q in &fm.pairs {
        match (outs[q.f][q.out], ins[j + q.g][q.inp]) {
            (End::Out(a), End::In(b)) => edges.push((a, b)),
            (End::Wire(w), End::In(b)) => wire_down[w] = Some(b),
            (End::Out(a), End::Wire(w)) => wire_up[w] = Some(a),
            _ => return Err(PolyError::Unsuitable),
        }
    }
    let paired_out: Vec<(usize, usize)> = fm.pairs.iter().map(|q| (q.f, q.out)).collect();
    let paired_in: Vec<(usize, usize)> = fm.pairs.iter().map(|q| (q.g, q.inp)).collect();
    let resolve_in = |e: End| match e {
        End::In(p) => Ok(p),
        End::Wire(w) => wire_down[w].ok_or(PolyError::Unsuitable),
        End::Out(_) => unreachable!(),
    };
    let resolve_out = |e: End| match e {
        End::Out(p) => Ok(p),
        End::Wire(w) => wire_up[w].ok_or(PolyError::Unsuitable),
        End::In(_) => unreachable!(),
    };
    let mut inputs = Vec::new();
    for a in 0..j {
        for &e in &ins[a] {
            inputs.push(resolve_in(e)?);
        }
    }
    for b in 0..fm.gs.len() {
        for (p, &e) in ins[j + b].iter().enumerate() {
            if !paired_in.contains(&(b, p)) {
                inputs.push(resolve_in(e)?);
            }
        }
    }
    let mut outputs = Vec::new();
    for b in 0..fm.gs.len() {
        for &e in &outs[j + b] {
            outputs.push(resolve_out(e)?);
        }
    }
    for a in 0..j {
        for (p, &e) in outs[a].iter().enumerate() {
            if !paired_out.contains(&(a, p)) {
                outputs.push(resolve_out(e)?);
            }
        }
    }
    edges.sort();
    cat.finish(Graph {
        gens,
        edges,
        inputs,
        outputs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycat::transposition;

    fn cat() -> FreeCat {
        FreeCat::new(
            vec![
                Generator::new("f", &["a"], &["x", "y"]),
                Generator::new("g", &["x"], &["b"]),
                Generator::new("h", &["y"], &["c"]),
            ],
            8,
        )
    }

    #[test]
    fn grafting_examples() {
        let c = cat();
        let f = c.generator("f").unwrap();
        let g = c.generator("g").unwrap();
        let h = c.generator("h").unwrap();
        let gf = c.compose(&g, &f, (0, 0)).unwrap();
        assert_eq!(c.dom(&gf), vec!["a"]);
        assert_eq!(c.cod(&gf), vec!["b", "y"]);
        let hgf = c.compose(&h, &gf, (1, 0)).unwrap();
        assert_eq!(c.cod(&hgf), vec!["b", "c"]);
        let hf = c.compose(&h, &f, (1, 0)).unwrap();
        let ghf = c.compose(&g, &hf, (0, 0)).unwrap();
        assert_eq!(hgf, ghf);
    }

    #[test]
    fn identity_is_a_unit() {
        let c = cat();
        let f = c.generator("f").unwrap();
        let idx = c.identity(&"x".to_string()).unwrap();
        assert_eq!(c.compose(&idx, &f, (0, 0)).unwrap(), f);
        let ida = c.identity(&"a".to_string()).unwrap();
        assert_eq!(c.compose(&f, &ida, (0, 0)).unwrap(), f);
    }

    #[test]
    fn exchange_is_free_and_invertible() {
        let c = cat();
        let f = c.generator("f").unwrap();
        let s = transposition(2, 0);
        let id1 = Bijection::identity(1);
        let fs = c.exchange(&f, &id1, &s).unwrap();
        assert_ne!(fs, f);
        assert_eq!(c.cod(&fs), vec!["y", "x"]);
        assert_eq!(c.exchange(&fs, &id1, &s).unwrap(), f);
    }

    #[test]
    fn cut_type_is_checked() {
        let c = cat();
        let f = c.generator("f").unwrap();
        let h = c.generator("h").unwrap();
        assert!(matches!(c.compose(&h, &f, (0, 0)), Err(PolyError::CutMismatch { .. })));
    }

    #[test]
    fn graft_matches_binary() {
        let c = cat();
        let f = c.generator("f").unwrap();
        let g = c.generator("g").unwrap();
        let h = c.generator("h").unwrap();
        let fm = FamilyMatching::new(
            vec![f.clone()],
            vec![g.clone(), h.clone()],
            vec![
                super::super::Pairing { f: 0, out: 0, g: 0, inp: 0 },
                super::super::Pairing { f: 0, out: 1, g: 1, inp: 0 },
            ],
        );
        let grafted = graft_family(&c, &fm).unwrap();
        let hgf = c.compose(&h, &c.compose(&g, &f, (0, 0)).unwrap(), (1, 0)).unwrap();
        assert_eq!(grafted, hgf);
    }
}
