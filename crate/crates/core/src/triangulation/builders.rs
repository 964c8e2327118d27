//! Fixed triangulations and the constructions that realise a prescribed
//! automorphism group.

use std::collections::BTreeMap;

use super::{facet_vertices, orientability, perm_from_vmap, Pairing, Side, Triangulation, TriangulationError};
use crate::graphs::{blow_up, canonical_form, delete_edge, is_asymmetric, AutomorphismMode, LabeledDigraph};
use crate::groups::{cayley_graph, FiniteGroup};
use crate::perm::Perm5;

/// Pairing from 1-based text data: facet `i` of `k` onto facet `j` of `l`,
/// ascending vertices of facet `i` going to `images`.
fn pair(k: usize, i: u8, l: usize, j: u8, images: [u8; 4]) -> Pairing {
    let perm = perm_from_vmap(i - 1, j - 1, images.map(|x| x - 1)).expect("fixed facet map");
    Pairing::new((k, i - 1), (l, j - 1), perm).expect("fixed pairing")
}

/// Two simplices glued by the identity along all five facets.
pub fn double_of_simplex() -> Triangulation {
    let pairings = (0..5u8).map(|f| Pairing::new((0, f), (1, f), Perm5::IDENTITY).unwrap()).collect();
    Triangulation::new(2, pairings).unwrap()
}

/// Two simplices with a single face cycle of length 20 and identity return
/// map; non-orientable.
pub fn one_cusped_triangulation() -> Triangulation {
    let pairings = vec![
        pair(0, 5, 1, 5, [4, 2, 3, 1]),
        pair(0, 4, 1, 4, [3, 5, 2, 1]),
        pair(0, 1, 1, 1, [3, 2, 5, 4]),
        pair(0, 2, 1, 2, [4, 5, 1, 3]),
        pair(0, 3, 1, 3, [5, 4, 2, 1]),
    ];
    Triangulation::new(2, pairings).unwrap()
}

/// A complex with exactly two free facets, `tail` and `head`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wire {
    pub complex: Triangulation,
    pub tail: Side,
    pub head: Side,
}

/// Simplices `A = 0` and `B = 1`. `A` carries two self-pairings (facets 2↔3
/// and 5↔4), `A` and `B` share facet 1 by the identity, and `B` carries the
/// self-pairing 2↔3. The free facets are 4 and 5 of `B`.
///
/// Facets 5↔4 of `A` use `(1234) → (3251)`. Sending `(1234)` to `(2351)`
/// instead would be an even permutation inside a single simplex, hence
/// orientation-preserving, and the complex would not be orientable.
pub fn edge_complex() -> Triangulation {
    let pairings = vec![
        pair(0, 2, 0, 3, [4, 2, 5, 1]),
        pair(0, 5, 0, 4, [3, 2, 5, 1]),
        Pairing::new((0, 0), (1, 0), Perm5::IDENTITY).unwrap(),
        pair(1, 2, 1, 3, [4, 2, 5, 1]),
    ];
    Triangulation::new(2, pairings).unwrap()
}

/// `n` copies of [`edge_complex`], copy `k` occupying simplices `2k, 2k+1`;
/// facet 4 of each `B` is glued to facet 5 of the next `B` by
/// `(1235) → (1234)`. Tail is facet 4 of the last `B`, head facet 5 of the
/// first.
pub fn edge_complex_chain(n: usize) -> Result<Wire, TriangulationError> {
    if n == 0 {
        return Err(TriangulationError::Input("edge complex chain needs n ≥ 1".into()));
    }
    let e = edge_complex();
    let mut pairings = Vec::new();
    for k in 0..n {
        let off = 2 * k;
        pairings.extend(e.pairings().iter().map(|p| Pairing {
            a: (p.a.0 + off, p.a.1),
            b: (p.b.0 + off, p.b.1),
            perm: p.perm,
        }));
        if k + 1 < n {
            pairings.push(pair(off + 1, 4, off + 3, 5, [1, 2, 3, 4]));
        }
    }
    let complex = Triangulation::new(2 * n, pairings)?;
    Ok(Wire { complex, tail: (2 * n - 1, 3), head: (1, 4) })
}

/// One simplex with facets 5 and 1 glued by `(1234) → (5342)`.
pub fn vertex_subcomplex() -> Triangulation {
    Triangulation::new(1, vec![pair(0, 5, 0, 1, [5, 3, 4, 2])]).unwrap()
}

/// Accumulates pairings and simplex signs while a complex is assembled.
struct Draft {
    pairings: Vec<Pairing>,
    signs: Vec<i8>,
}

impl Draft {
    fn new() -> Self {
        Draft { pairings: Vec::new(), signs: Vec::new() }
    }

    fn add_simplices(&mut self, count: usize, sign: i8) -> usize {
        let first = self.signs.len();
        self.signs.extend(std::iter::repeat_n(sign, count));
        first
    }

    /// Copies `t` in with an orientation that makes its own pairings
    /// reversing; returns the id offset.
    fn append(&mut self, t: &Triangulation) -> Result<usize, TriangulationError> {
        let o = orientability(t).map_err(|_| TriangulationError::NotOrientable)?;
        let off = self.signs.len();
        self.signs.extend(o.signs);
        self.pairings.extend(t.pairings().iter().map(|p| Pairing {
            a: (p.a.0 + off, p.a.1),
            b: (p.b.0 + off, p.b.1),
            perm: p.perm,
        }));
        Ok(off)
    }

    /// Glues `host` to `guest` by the order-preserving facet map, swapping
    /// vertices 2 and 3 on the guest side when that map would preserve
    /// orientation. The guest facet label must not be 2 or 3.
    fn glue_reversing(&mut self, host: Side, guest: Side) -> Result<(), TriangulationError> {
        debug_assert!(guest.1 != 1 && guest.1 != 2);
        let perm = perm_from_vmap(host.1, guest.1, facet_vertices(guest.1)).unwrap();
        let flip = self.signs[host.0] * self.signs[guest.0] * perm.sign() == 1;
        let perm = if flip { Perm5::transposition(1, 2).compose(&perm) } else { perm };
        self.pairings.push(Pairing::new(host, guest, perm)?);
        Ok(())
    }

    fn finish(self) -> Result<Triangulation, TriangulationError> {
        Triangulation::new(self.signs.len(), self.pairings)
    }
}

/// The complex modelled on a connected graph in which two vertices have
/// valence 2 and the rest valence 3.
///
/// Each graph vertex gets a [`vertex_subcomplex`] (simplex id = vertex id)
/// and each edge, in ascending `(u, v)` order, an [`edge_complex`] copy.
/// A vertex hands its free facets 2, 3, 4 to its incident edges in edge
/// order; edge `u < v` glues its facet 4 to `u` and facet 5 to `v`, always
/// orientation-reversing. The spare facet 4 of the lower-numbered valence-2
/// vertex is the tail, the other the head.
pub fn graph_complex(gp: &LabeledDigraph) -> Result<Wire, TriangulationError> {
    let n = gp.vertex_count();
    let shape = |msg: &str| TriangulationError::Input(format!("graph complex: {msg}"));
    if !gp.is_undirected() || !gp.is_connected() {
        return Err(shape("graph must be undirected and connected"));
    }
    let mut edges: Vec<(usize, usize)> = gp.undirected_edges().iter().map(|e| (e.src, e.dst)).collect();
    edges.sort_unstable();
    if edges.windows(2).any(|w| w[0] == w[1]) {
        return Err(shape("graph must be simple"));
    }
    let degrees: Vec<usize> = (0..n).map(|v| gp.degree(v)).collect();
    let low: Vec<usize> = (0..n).filter(|&v| degrees[v] == 2).collect();
    if low.len() != 2 || degrees.iter().any(|&d| d != 2 && d != 3) {
        return Err(shape("need exactly two valence-2 vertices, all others valence 3"));
    }

    let mut d = Draft::new();
    let vertex = vertex_subcomplex();
    for _ in 0..n {
        d.append(&vertex)?;
    }
    let mut next_facet = vec![1u8; n];
    let e = edge_complex();
    for &(u, v) in &edges {
        let off = d.append(&e)?;
        let (fu, fv) = (next_facet[u], next_facet[v]);
        next_facet[u] += 1;
        next_facet[v] += 1;
        d.glue_reversing((u, fu), (off + 1, 3))?;
        d.glue_reversing((v, fv), (off + 1, 4))?;
    }
    let complex = d.finish()?;
    Ok(Wire { complex, tail: (low[0], 3), head: (low[1], 3) })
}

/// Glues one wire per directed labelled edge of a 5-valent graph.
///
/// Vertex `v` becomes simplex `v`, whose vertices carry the labels of its
/// five incident edges in ascending order. Edge `u → v` labelled `ℓ` gets a
/// copy of `wires[ℓ]` with its tail glued to the facet of `u` labelled `ℓ`
/// and its head to the facet of `v` labelled `ℓ`.
fn assemble(graph: &LabeledDigraph, wires: &[Wire]) -> Result<Triangulation, TriangulationError> {
    let n = graph.vertex_count();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in graph.edges() {
        incident[e.src].push(e.label);
        incident[e.dst].push(e.label);
    }
    for (v, labels) in incident.iter_mut().enumerate() {
        labels.sort_unstable();
        labels.dedup();
        if labels.len() != 5 {
            return Err(TriangulationError::Input(format!(
                "vertex {} does not have five distinct incident labels",
                graph.vertices()[v]
            )));
        }
    }
    let position = |v: usize, label: usize| incident[v].iter().position(|&l| l == label).unwrap() as u8;
    let mut d = Draft::new();
    d.add_simplices(n, 1);
    for e in graph.edges() {
        let w = &wires[e.label];
        let off = d.append(&w.complex)?;
        d.glue_reversing((e.src, position(e.src, e.label)), (w.tail.0 + off, w.tail.1))?;
        d.glue_reversing((e.dst, position(e.dst, e.label)), (w.head.0 + off, w.head.1))?;
    }
    d.finish()
}

/// Closed orientable triangulation whose automorphism group is `g`.
///
/// The Cayley graph of `g` is blown up into a 5-valent graph with `5m`
/// labels; the edges with the `L`-th label (0-based) are realised by the
/// chain of `L + 1` edge complexes.
pub fn realize_group(g: &FiniteGroup) -> Result<Triangulation, TriangulationError> {
    let m = g.rank();
    let graph = blow_up(&cayley_graph(g), m).map_err(|e| TriangulationError::Input(e.to_string()))?;
    let wires = (1..=5 * m).map(edge_complex_chain).collect::<Result<Vec<_>, _>>()?;
    assemble(&graph, &wires)
}

/// As [`realize_group`], with graph complexes in place of edge complex
/// chains. Needs `5m` pairwise non-isomorphic asymmetric connected cubic
/// graphs on a common vertex count; they are sorted by canonical form and
/// assigned to labels in that order.
pub fn realize_group_with_graphs(
    g: &FiniteGroup,
    graphs: &[LabeledDigraph],
) -> Result<Triangulation, TriangulationError> {
    let m = g.rank();
    if graphs.len() != 5 * m {
        return Err(TriangulationError::Input(format!("need {} graphs, got {}", 5 * m, graphs.len())));
    }
    let size = graphs[0].vertex_count();
    let mut keyed: BTreeMap<Vec<u32>, &LabeledDigraph> = BTreeMap::new();
    for gr in graphs {
        if gr.vertex_count() != size || (0..size).any(|v| gr.degree(v) != 3) || !gr.is_connected() {
            return Err(TriangulationError::Input("graphs must be connected cubic on a common vertex count".into()));
        }
        if !is_asymmetric(gr) {
            return Err(TriangulationError::Input("graphs must be asymmetric".into()));
        }
        if keyed.insert(canonical_form(gr, AutomorphismMode::Unlabelled), gr).is_some() {
            return Err(TriangulationError::Input("graphs must be pairwise non-isomorphic".into()));
        }
    }
    let wires = keyed
        .values()
        .map(|gr| graph_complex(&delete_edge(gr).map_err(|e| TriangulationError::Input(e.to_string()))?))
        .collect::<Result<Vec<_>, _>>()?;
    let graph = blow_up(&cayley_graph(g), m).map_err(|e| TriangulationError::Input(e.to_string()))?;
    assemble(&graph, &wires)
}
