//! Connected cubic graphs up to isomorphism, asymmetry, and edge deletion.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{automorphisms, canonical_form, AutomorphismMode, GraphError, LabeledDigraph};

/// Largest vertex count accepted by [`cubic_graphs`].
pub const MAX_CUBIC_VERTICES: usize = 14;

/// All connected simple cubic graphs on `two_k` vertices, one per
/// isomorphism class, ordered by canonical form.
///
/// Generated level by level by edge insertion: subdivide two edges (or one
/// edge twice) and join the two new vertices. Intermediate levels keep
/// connected cubic pseudographs (loops and parallel edges allowed),
/// deduplicated by canonical form; the last level keeps only simple graphs.
pub fn cubic_graphs(two_k: usize) -> Result<Vec<LabeledDigraph>, GraphError> {
    if two_k < 4 || !two_k.is_multiple_of(2) || two_k > MAX_CUBIC_VERTICES {
        return Err(GraphError::CubicCap { got: two_k, max: MAX_CUBIC_VERTICES });
    }
    // theta and dumbbell
    let mut level: Vec<Pseudo> = vec![vec![(0, 1), (0, 1), (0, 1)], vec![(0, 0), (0, 1), (1, 1)]];
    let mut n = 2;
    while n < two_k {
        let last = n + 2 == two_k;
        let children: Vec<BTreeMap<Vec<u32>, Pseudo>> = level
            .par_iter()
            .map(|edges| {
                let mut out = BTreeMap::new();
                for i in 0..edges.len() {
                    for j in i..edges.len() {
                        let h = insert_edge(n, edges, i, j);
                        if last && !is_simple(&h) {
                            continue;
                        }
                        out.entry(pseudo_key(n + 2, &h)).or_insert(h);
                    }
                }
                out
            })
            .collect();
        let mut next: BTreeMap<Vec<u32>, Pseudo> = BTreeMap::new();
        for map in children {
            for (key, h) in map {
                next.entry(key).or_insert(h);
            }
        }
        level = next.into_values().collect();
        n += 2;
    }
    let mut keyed: Vec<(Vec<u32>, LabeledDigraph)> = level
        .into_iter()
        .map(|edges| {
            let g = LabeledDigraph::from_undirected_edges(two_k, &edges);
            (canonical_form(&g, AutomorphismMode::Unlabelled), g)
        })
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(keyed.into_iter().map(|(_, g)| g).collect())
}

/// Undirected edge list; `(v, v)` is a loop.
type Pseudo = Vec<(usize, usize)>;

fn insert_edge(n: usize, edges: &[(usize, usize)], i: usize, j: usize) -> Pseudo {
    let (x, y) = (n, n + 1);
    let mut out: Pseudo = edges.iter().enumerate().filter(|&(k, _)| k != i && k != j).map(|(_, &e)| e).collect();
    let (a, b) = edges[i];
    if i == j {
        out.extend([(a, x), (x, y), (x, y), (y, b)]);
    } else {
        let (c, d) = edges[j];
        out.extend([(a, x), (x, b), (c, y), (y, d), (x, y)]);
    }
    out
}

fn is_simple(edges: &[(usize, usize)]) -> bool {
    let mut pairs: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    pairs.sort_unstable();
    pairs.dedup();
    pairs.len() == edges.len() && edges.iter().all(|&(u, v)| u != v)
}

/// Canonical key of a pseudograph. A loop at `v` is encoded as a pendant
/// vertex joined to `v` by an edge with a second label.
fn pseudo_key(n: usize, edges: &[(usize, usize)]) -> Vec<u32> {
    let loops = edges.iter().filter(|&&(u, v)| u == v).count();
    let mut g = LabeledDigraph::new_undirected(
        (0..n + loops).map(|v| v.to_string()).collect(),
        vec!["e".into(), "loop".into()],
    );
    let mut pendant = n;
    for &(u, v) in edges {
        if u == v {
            g.add_undirected_edge(u, pendant, 1);
            pendant += 1;
        } else {
            g.add_undirected_edge(u, v, 0);
        }
    }
    canonical_form(&g, AutomorphismMode::PreserveLabels)
}

/// True iff the graph has no non-trivial automorphism, ignoring labels.
pub fn is_asymmetric(g: &LabeledDigraph) -> bool {
    automorphisms(g, AutomorphismMode::Unlabelled).map(|a| a.is_trivial()).unwrap_or(false)
}

/// Removes the lexicographically first edge whose removal keeps the graph
/// connected, leaving two vertices of valence two.
pub fn delete_edge(g: &LabeledDigraph) -> Result<LabeledDigraph, GraphError> {
    if !g.is_undirected() || !g.is_connected() || (0..g.vertex_count()).any(|v| g.degree(v) != 3) {
        return Err(GraphError::Shape("expected a connected cubic graph".into()));
    }
    let mut edges: Vec<(usize, usize)> = g.undirected_edges().iter().map(|e| (e.src, e.dst)).collect();
    edges.sort_unstable();
    for (k, &(u, v)) in edges.iter().enumerate() {
        let rest: Vec<(usize, usize)> = edges.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &e)| e).collect();
        let h = LabeledDigraph::from_undirected_edges(g.vertex_count(), &rest);
        if h.is_connected() {
            debug_assert!(h.degree(u) == 2 && h.degree(v) == 2);
            return Ok(h);
        }
    }
    Err(GraphError::Shape("every edge is a bridge".into()))
}
