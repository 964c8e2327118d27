//! Automorphism search, isomorphism testing and canonical forms for
//! [`LabeledDigraph`].
//!
//! Vertices are first partitioned by colour refinement, seeded with
//! (out-degree, in-degree, outgoing label multiset, incoming label multiset).
//! Isomorphisms are then enumerated by backtracking along a BFS order,
//! drawing candidates from the neighbourhood of an already mapped vertex.

use std::collections::{BTreeMap, HashSet};

use super::{GraphError, LabeledDigraph};

pub const DEFAULT_VERTEX_CAP: usize = 4096;

/// Labels beyond this count make label-permuting search refuse to run.
const MAX_PERMUTED_LABELS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AutomorphismMode {
    PreserveLabels,
    /// Vertex maps together with a bijection of the labels.
    PermuteLabels,
    /// Labels ignored entirely.
    Unlabelled,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GraphAutomorphism {
    pub vertex_map: Vec<usize>,
    /// Identity except in label-permuting mode.
    pub label_map: Vec<usize>,
}

impl GraphAutomorphism {
    pub fn identity(vertices: usize, labels: usize) -> Self {
        GraphAutomorphism { vertex_map: (0..vertices).collect(), label_map: (0..labels).collect() }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &GraphAutomorphism) -> GraphAutomorphism {
        GraphAutomorphism {
            vertex_map: other.vertex_map.iter().map(|&v| self.vertex_map[v]).collect(),
            label_map: other.label_map.iter().map(|&l| self.label_map[l]).collect(),
        }
    }

    pub fn inverse(&self) -> GraphAutomorphism {
        let mut vertex_map = vec![0; self.vertex_map.len()];
        for (v, &w) in self.vertex_map.iter().enumerate() {
            vertex_map[w] = v;
        }
        let mut label_map = vec![0; self.label_map.len()];
        for (l, &m) in self.label_map.iter().enumerate() {
            label_map[m] = l;
        }
        GraphAutomorphism { vertex_map, label_map }
    }

    pub fn is_identity(&self) -> bool {
        self.vertex_map.iter().enumerate().all(|(i, &v)| i == v)
            && self.label_map.iter().enumerate().all(|(i, &l)| i == l)
    }

    /// True if the map sends the edge multiset of `g` onto itself.
    pub fn preserves(&self, g: &LabeledDigraph, mode: AutomorphismMode) -> bool {
        let key = |src: usize, dst: usize, label: usize| match mode {
            AutomorphismMode::Unlabelled => (src, dst, 0),
            _ => (src, dst, label),
        };
        let mut before: Vec<_> = g.edges().iter().map(|e| key(e.src, e.dst, e.label)).collect();
        let mut after: Vec<_> = g
            .edges()
            .iter()
            .map(|e| key(self.vertex_map[e.src], self.vertex_map[e.dst], self.label_map[e.label]))
            .collect();
        before.sort_unstable();
        after.sort_unstable();
        before == after
    }
}

/// A full automorphism group, stored element-wise with the identity first.
#[derive(Debug, Clone)]
pub struct AutomorphismGroup {
    elements: Vec<GraphAutomorphism>,
}

impl AutomorphismGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GraphAutomorphism] {
        &self.elements
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// Greedy generating set: keep each element not already in the subgroup
    /// generated by the previous picks.
    pub fn generators(&self) -> Vec<GraphAutomorphism> {
        let mut gens: Vec<GraphAutomorphism> = Vec::new();
        let mut span: HashSet<GraphAutomorphism> = HashSet::new();
        if let Some(id) = self.elements.first() {
            span.insert(id.clone());
        }
        for g in &self.elements {
            if span.contains(g) {
                continue;
            }
            gens.push(g.clone());
            let mut frontier: Vec<GraphAutomorphism> = span.iter().cloned().collect();
            while let Some(x) = frontier.pop() {
                for s in &gens {
                    let y = x.compose(s);
                    if span.insert(y.clone()) {
                        frontier.push(y);
                    }
                }
            }
        }
        gens
    }

    /// Closed under composition and inverses.
    pub fn is_closed(&self) -> bool {
        let set: HashSet<&GraphAutomorphism> = self.elements.iter().collect();
        self.elements
            .iter()
            .all(|a| set.contains(&a.inverse()) && self.elements.iter().all(|b| set.contains(&a.compose(b))))
    }

    pub fn contains(&self, a: &GraphAutomorphism) -> bool {
        self.elements.contains(a)
    }
}

pub fn automorphisms(g: &LabeledDigraph, mode: AutomorphismMode) -> Result<AutomorphismGroup, GraphError> {
    automorphisms_with_cap(g, mode, DEFAULT_VERTEX_CAP)
}

pub fn automorphisms_with_cap(
    g: &LabeledDigraph,
    mode: AutomorphismMode,
    cap: usize,
) -> Result<AutomorphismGroup, GraphError> {
    if g.vertex_count() > cap {
        return Err(GraphError::TooLarge { vertices: g.vertex_count(), cap });
    }
    let labels = g.labels().len();
    let mut elements = Vec::new();
    match mode {
        AutomorphismMode::PreserveLabels | AutomorphismMode::Unlabelled => {
            let work = if mode == AutomorphismMode::Unlabelled { g.unlabelled() } else { g.clone() };
            let adj = Adjacency::new(&work);
            for vertex_map in isomorphisms(&adj, &adj, usize::MAX) {
                elements.push(GraphAutomorphism { vertex_map, label_map: (0..labels).collect() });
            }
        }
        AutomorphismMode::PermuteLabels => {
            if labels > MAX_PERMUTED_LABELS {
                return Err(GraphError::TooManyLabels(labels));
            }
            let adj = Adjacency::new(g);
            let counts: Vec<usize> = (0..labels).map(|l| g.label_count(l)).collect();
            for label_map in permutations(labels) {
                if (0..labels).any(|l| counts[label_map[l]] != counts[l]) {
                    continue;
                }
                // (u, v, l) must go to (φu, φv, λl): a label-preserving
                // isomorphism onto the graph relabelled by λ⁻¹.
                let mut inv = vec![0; labels];
                for (l, &m) in label_map.iter().enumerate() {
                    inv[m] = l;
                }
                let target = Adjacency::new(&relabel(g, &inv));
                for vertex_map in isomorphisms(&adj, &target, usize::MAX) {
                    elements.push(GraphAutomorphism { vertex_map, label_map: label_map.clone() });
                }
            }
        }
    }
    let id = GraphAutomorphism::identity(g.vertex_count(), labels);
    let pos = elements.iter().position(|a| *a == id).expect("identity is always found");
    elements.swap(0, pos);
    Ok(AutomorphismGroup { elements })
}

/// Decides isomorphism in the given mode.
pub fn is_isomorphic(a: &LabeledDigraph, b: &LabeledDigraph, mode: AutomorphismMode) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    match mode {
        AutomorphismMode::PreserveLabels => !isomorphisms(&Adjacency::new(a), &Adjacency::new(b), 1).is_empty(),
        AutomorphismMode::Unlabelled => {
            !isomorphisms(&Adjacency::new(&a.unlabelled()), &Adjacency::new(&b.unlabelled()), 1).is_empty()
        }
        AutomorphismMode::PermuteLabels => {
            let labels = a.labels().len();
            if labels != b.labels().len() {
                return false;
            }
            let adj = Adjacency::new(a);
            permutations(labels).into_iter().any(|lambda| {
                let target = Adjacency::new(&relabel(b, &lambda));
                !isomorphisms(&adj, &target, 1).is_empty()
            })
        }
    }
}

/// Canonical certificate: two graphs have equal certificates iff they are
/// isomorphic in `mode`.
pub fn canonical_form(g: &LabeledDigraph, mode: AutomorphismMode) -> Vec<u32> {
    match mode {
        AutomorphismMode::PreserveLabels => canonical_preserving(g),
        AutomorphismMode::Unlabelled => canonical_preserving(&g.unlabelled()),
        AutomorphismMode::PermuteLabels => permutations(g.labels().len())
            .into_iter()
            .map(|lambda| canonical_preserving(&relabel(g, &lambda)))
            .min()
            .unwrap_or_default(),
    }
}

fn relabel(g: &LabeledDigraph, map: &[usize]) -> LabeledDigraph {
    let mut out = if g.is_undirected() {
        LabeledDigraph::new_undirected(g.vertices().to_vec(), g.labels().to_vec())
    } else {
        LabeledDigraph::new(g.vertices().to_vec(), g.labels().to_vec())
    };
    for e in g.edges() {
        out.add_edge(e.src, e.dst, map[e.label]);
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    permute_rec(&mut current, 0, &mut out);
    out
}

fn permute_rec(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute_rec(items, k + 1, out);
        items.swap(k, i);
    }
}

/// Sorted adjacency with labels, plus the underlying undirected neighbours.
struct Adjacency {
    n: usize,
    out: Vec<Vec<(u32, u32)>>,
    inn: Vec<Vec<(u32, u32)>>,
    neighbours: Vec<Vec<usize>>,
}

impl Adjacency {
    fn new(g: &LabeledDigraph) -> Self {
        let n = g.vertex_count();
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for e in g.edges() {
            out[e.src].push((e.dst as u32, e.label as u32));
            inn[e.dst].push((e.src as u32, e.label as u32));
        }
        for list in out.iter_mut().chain(inn.iter_mut()) {
            list.sort_unstable();
        }
        Adjacency { n, out, inn, neighbours: g.neighbours() }
    }

    fn initial_invariant(&self, v: usize) -> Vec<u32> {
        let mut key = vec![self.out[v].len() as u32, self.inn[v].len() as u32];
        let mut out_labels: Vec<u32> = self.out[v].iter().map(|&(_, l)| l).collect();
        let mut in_labels: Vec<u32> = self.inn[v].iter().map(|&(_, l)| l).collect();
        out_labels.sort_unstable();
        in_labels.sort_unstable();
        key.extend(out_labels);
        key.push(u32::MAX);
        key.extend(in_labels);
        key
    }

    fn signature(&self, v: usize, colors: &[u32]) -> Vec<u32> {
        let mut outs: Vec<(u32, u32)> = self.out[v].iter().map(|&(w, l)| (colors[w as usize], l)).collect();
        let mut ins: Vec<(u32, u32)> = self.inn[v].iter().map(|&(w, l)| (colors[w as usize], l)).collect();
        outs.sort_unstable();
        ins.sort_unstable();
        let mut sig = Vec::with_capacity(2 + 2 * (outs.len() + ins.len()));
        sig.push(colors[v]);
        for (c, l) in outs {
            sig.extend([c, l]);
        }
        sig.push(u32::MAX);
        for (c, l) in ins {
            sig.extend([c, l]);
        }
        sig
    }
}

/// Joint colour refinement of several graphs. Colours are ranks of
/// signatures, so equal colours across graphs mean equal refined invariants.
fn refine(graphs: &[&Adjacency], mut colors: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    let mut count = distinct(&colors);
    loop {
        let sigs: Vec<Vec<Vec<u32>>> =
            graphs.iter().zip(&colors).map(|(g, c)| (0..g.n).map(|v| g.signature(v, c)).collect()).collect();
        let next = rank(&sigs);
        let next_count = distinct(&next);
        colors = next;
        if next_count == count {
            return colors;
        }
        count = next_count;
    }
}

fn rank<K: Ord + Clone>(keys: &[Vec<K>]) -> Vec<Vec<u32>> {
    let mut table: BTreeMap<K, u32> = BTreeMap::new();
    for k in keys.iter().flatten() {
        table.entry(k.clone()).or_insert(0);
    }
    for (i, v) in table.values_mut().enumerate() {
        *v = i as u32;
    }
    keys.iter().map(|ks| ks.iter().map(|k| table[k]).collect()).collect()
}

fn distinct(colors: &[Vec<u32>]) -> usize {
    colors.iter().flatten().collect::<HashSet<_>>().len()
}

fn initial_colors(graphs: &[&Adjacency]) -> Vec<Vec<u32>> {
    let keys: Vec<Vec<Vec<u32>>> = graphs.iter().map(|g| (0..g.n).map(|v| g.initial_invariant(v)).collect()).collect();
    rank(&keys)
}

/// All label-preserving isomorphisms `a → b`, up to `limit`.
fn isomorphisms(a: &Adjacency, b: &Adjacency, limit: usize) -> Vec<Vec<usize>> {
    if a.n != b.n {
        return Vec::new();
    }
    let colors = refine(&[a, b], initial_colors(&[a, b]));
    let (ca, cb) = (&colors[0], &colors[1]);
    let mut ha = ca.clone();
    let mut hb = cb.clone();
    ha.sort_unstable();
    hb.sort_unstable();
    if ha != hb {
        return Vec::new();
    }

    let class_size = |c: u32| ca.iter().filter(|&&x| x == c).count();
    let mut order = Vec::with_capacity(a.n);
    let mut parent = vec![usize::MAX; a.n];
    let mut placed = vec![false; a.n];
    while order.len() < a.n {
        let root = (0..a.n).filter(|&v| !placed[v]).min_by_key(|&v| (class_size(ca[v]), ca[v], v)).unwrap();
        placed[root] = true;
        let start = order.len();
        order.push(root);
        let mut head = start;
        while head < order.len() {
            let v = order[head];
            head += 1;
            let mut next: Vec<usize> = a.neighbours[v].iter().copied().filter(|&w| !placed[w]).collect();
            next.sort_by_key(|&w| (class_size(ca[w]), ca[w], w));
            for w in next {
                placed[w] = true;
                parent[w] = v;
                order.push(w);
            }
        }
    }

    let mut state = Search {
        a,
        b,
        ca,
        cb,
        order: &order,
        parent: &parent,
        map: vec![usize::MAX; a.n],
        inv: vec![usize::MAX; a.n],
        found: Vec::new(),
        limit,
    };
    state.extend(0);
    state.found
}

struct Search<'s> {
    a: &'s Adjacency,
    b: &'s Adjacency,
    ca: &'s [u32],
    cb: &'s [u32],
    order: &'s [usize],
    parent: &'s [usize],
    map: Vec<usize>,
    inv: Vec<usize>,
    found: Vec<Vec<usize>>,
    limit: usize,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) {
        if self.found.len() >= self.limit {
            return;
        }
        if depth == self.order.len() {
            self.found.push(self.map.clone());
            return;
        }
        let u = self.order[depth];
        let candidates: Vec<usize> = if self.parent[u] != usize::MAX {
            self.b.neighbours[self.map[self.parent[u]]].clone()
        } else {
            (0..self.b.n).collect()
        };
        for x in candidates {
            if self.inv[x] != usize::MAX || self.cb[x] != self.ca[u] || !self.consistent(u, x) {
                continue;
            }
            self.map[u] = x;
            self.inv[x] = u;
            self.extend(depth + 1);
            self.map[u] = usize::MAX;
            self.inv[x] = usize::MAX;
            if self.found.len() >= self.limit {
                return;
            }
        }
    }

    /// Edges between `u` and the mapped set must match those between `x`
    /// and the image set, label for label.
    fn consistent(&self, u: usize, x: usize) -> bool {
        let side = |from: &[(u32, u32)], to: &[(u32, u32)]| {
            let mut lhs: Vec<(usize, u32)> = from
                .iter()
                .filter(|&&(w, _)| self.map[w as usize] != usize::MAX)
                .map(|&(w, l)| (self.map[w as usize], l))
                .collect();
            let mut rhs: Vec<(usize, u32)> = to
                .iter()
                .filter(|&&(w, _)| self.inv[w as usize] != usize::MAX)
                .map(|&(w, l)| (w as usize, l))
                .collect();
            lhs.sort_unstable();
            rhs.sort_unstable();
            lhs == rhs
        };
        side(&self.a.out[u], &self.b.out[x]) && side(&self.a.inn[u], &self.b.inn[x])
    }
}

fn canonical_preserving(g: &LabeledDigraph) -> Vec<u32> {
    let adj = Adjacency::new(g);
    let colors = refine(&[&adj], initial_colors(&[&adj])).pop().unwrap();
    let mut best: Option<Vec<u32>> = None;
    canon_rec(&adj, colors, &mut best);
    let mut cert = vec![g.vertex_count() as u32, g.labels().len() as u32];
    cert.extend(best.unwrap_or_default());
    cert
}

fn canon_rec(adj: &Adjacency, colors: Vec<u32>, best: &mut Option<Vec<u32>>) {
    let n = adj.n;
    let mut sizes: BTreeMap<u32, usize> = BTreeMap::new();
    for &c in &colors {
        *sizes.entry(c).or_default() += 1;
    }
    let target = sizes.iter().filter(|&(_, &s)| s > 1).min_by_key(|&(&c, &s)| (s, c)).map(|(&c, _)| c);
    match target {
        None => {
            let mut edges: Vec<[u32; 3]> = adj
                .out
                .iter()
                .enumerate()
                .flat_map(|(v, list)| list.iter().map(move |&(w, l)| (v, w, l)))
                .map(|(v, w, l)| [colors[v], colors[w as usize], l])
                .collect();
            edges.sort_unstable();
            let cert: Vec<u32> = edges.into_iter().flatten().collect();
            if best.as_ref().is_none_or(|b| cert < *b) {
                *best = Some(cert);
            }
        }
        Some(cell) => {
            for v in (0..n).filter(|&v| colors[v] == cell) {
                let mut c = colors.clone();
                c[v] = n as u32;
                let refined = refine(&[adj], vec![c]).pop().unwrap();
                canon_rec(adj, refined, best);
            }
        }
    }
}
