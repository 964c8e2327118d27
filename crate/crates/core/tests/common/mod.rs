//! Independent oracles shared by the integration tests. Nothing here uses
//! the search or canonical-form code under test.
#![allow(dead_code)]

use std::collections::BTreeSet;

use hypsym::graphs::LabeledDigraph;
use hypsym::perm::Perm5;
use hypsym::triangulation::{facet_vertices, Pairing, TriAutomorphism, Triangulation};
use proptest::prelude::*;

/// All permutations of `0..n` as image vectors.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                rec(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Every automorphism, by trying all simplex bijections and, for each,
/// all vertex relabellings simplex by simplex, checking every pairing
/// whose two ends are already placed.
pub fn brute_force_automorphisms(t: &Triangulation) -> BTreeSet<(Vec<usize>, Vec<[u8; 5]>)> {
    let n = t.simplex_count();
    let all = Perm5::all();
    let mut out = BTreeSet::new();
    for sigma in permutations(n) {
        let mut maps: Vec<Perm5> = Vec::with_capacity(n);
        extend(t, &sigma, &all, &mut maps, &mut out);
    }
    out
}

fn consistent(t: &Triangulation, sigma: &[usize], maps: &[Perm5], k: usize) -> bool {
    let pk = maps[k];
    for f in 0..5u8 {
        let image = t.glue(sigma[k], pk.apply(f));
        match t.glue(k, f) {
            None => {
                if image.is_some() {
                    return false;
                }
            }
            Some(g) => {
                let Some(h) = image else { return false };
                if g.simplex <= k
                    && (h.simplex != sigma[g.simplex] || h.perm.compose(&pk) != maps[g.simplex].compose(&g.perm))
                {
                    return false;
                }
            }
        }
    }
    true
}

fn extend(
    t: &Triangulation,
    sigma: &[usize],
    all: &[Perm5],
    maps: &mut Vec<Perm5>,
    out: &mut BTreeSet<(Vec<usize>, Vec<[u8; 5]>)>,
) {
    let k = maps.len();
    if k == sigma.len() {
        out.insert((sigma.to_vec(), maps.iter().map(Perm5::images).collect()));
        return;
    }
    for &p in all {
        maps.push(p);
        if consistent(t, sigma, maps, k) {
            extend(t, sigma, all, maps, out);
        }
        maps.pop();
    }
}

pub fn as_key(a: &TriAutomorphism) -> (Vec<usize>, Vec<[u8; 5]>) {
    (a.simplex_map.clone(), a.vertex_maps.iter().map(Perm5::images).collect())
}

/// Random triangulation on `1..=max` simplices: sides are shuffled by
/// random keys and paired consecutively; with an odd side count one side
/// stays free. When `open` is set, a further tail of sides stays free.
pub fn arb_triangulation(max: usize) -> impl Strategy<Value = Triangulation> {
    (1..=max, prop::collection::vec(any::<u32>(), 5 * max), prop::collection::vec(0..24usize, 5 * max), 0..3usize)
        .prop_map(|(n, keys, choices, extra_free)| build_random(n, &keys, &choices, extra_free))
}

/// Random closed triangulation on 2 or 4 simplices.
pub fn arb_closed_triangulation() -> impl Strategy<Value = Triangulation> {
    (
        prop_oneof![Just(2usize), Just(4usize)],
        prop::collection::vec(any::<u32>(), 20),
        prop::collection::vec(0..24usize, 10),
    )
        .prop_map(|(n, keys, choices)| build_random(n, &keys, &choices, 0))
}

pub fn build_random(n: usize, keys: &[u32], choices: &[usize], extra_free: usize) -> Triangulation {
    let mut sides: Vec<(u32, usize, u8)> =
        (0..n).flat_map(|k| (0..5u8).map(move |f| (k, f))).map(|(k, f)| (keys[5 * k + f as usize], k, f)).collect();
    sides.sort();
    let pairs = (sides.len() / 2).saturating_sub(extra_free);
    let four = permutations(4);
    let mut pairings = Vec::new();
    for i in 0..pairs {
        let (_, k, f) = sides[2 * i];
        let (_, l, g) = sides[2 * i + 1];
        let from = facet_vertices(f);
        let to = facet_vertices(g);
        let shuffle = &four[choices[i] % 24];
        let mut table = [0u8; 5];
        table[f as usize] = g;
        for s in 0..4 {
            table[from[s] as usize] = to[shuffle[s]];
        }
        pairings.push(Pairing::new((k, f), (l, g), Perm5::new(table).unwrap()).unwrap());
    }
    Triangulation::new(n, pairings).unwrap()
}

/// Simple undirected graph as sorted adjacency lists.
pub type Adj = Vec<Vec<usize>>;

pub fn adjacency(g: &LabeledDigraph) -> Adj {
    let mut adj = vec![Vec::new(); g.vertex_count()];
    for e in g.undirected_edges() {
        adj[e.src].push(e.dst);
        adj[e.dst].push(e.src);
    }
    for l in &mut adj {
        l.sort_unstable();
    }
    adj
}

fn connected(adj: &Adj) -> bool {
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// Sorted per-vertex (triangles, vertices at distance 2) pairs.
fn invariant(adj: &Adj) -> Vec<(usize, usize)> {
    let n = adj.len();
    let mut inv: Vec<(usize, usize)> = (0..n)
        .map(|v| {
            let tri = adj[v]
                .iter()
                .flat_map(|&a| adj[v].iter().map(move |&b| (a, b)))
                .filter(|&(a, b)| a < b && adj[a].contains(&b))
                .count();
            let mut second: BTreeSet<usize> = BTreeSet::new();
            for &a in &adj[v] {
                for &b in &adj[a] {
                    if b != v && !adj[v].contains(&b) {
                        second.insert(b);
                    }
                }
            }
            (tri, second.len())
        })
        .collect();
    inv.sort_unstable();
    inv
}

/// Plain backtracking isomorphism test for simple graphs.
pub fn isomorphic(a: &Adj, b: &Adj) -> bool {
    let n = a.len();
    if n != b.len() {
        return false;
    }
    fn rec(a: &Adj, b: &Adj, map: &mut Vec<Option<usize>>, used: &mut Vec<bool>, v: usize) -> bool {
        if v == a.len() {
            return true;
        }
        for w in 0..b.len() {
            if used[w] || a[v].len() != b[w].len() {
                continue;
            }
            let ok = (0..v).all(|u| {
                let mu = map[u].unwrap();
                a[v].contains(&u) == b[w].contains(&mu)
            });
            if ok {
                map[v] = Some(w);
                used[w] = true;
                if rec(a, b, map, used, v + 1) {
                    return true;
                }
                map[v] = None;
                used[w] = false;
            }
        }
        false
    }
    rec(a, b, &mut vec![None; n], &mut vec![false; n], 0)
}

/// Connected cubic graphs on `n` vertices up to isomorphism, by listing all
/// labelled cubic graphs with `N(0) = {1, 2, 3}` and bucketing.
pub fn cubic_oracle(n: usize) -> Vec<Adj> {
    let mut adj: Adj = vec![Vec::new(); n];
    for w in 1..=3 {
        adj[0].push(w);
        adj[w].push(0);
    }
    let mut classes: Vec<(Vec<(usize, usize)>, Adj)> = Vec::new();
    fill(&mut adj, &mut classes);
    classes.into_iter().map(|(_, a)| a).collect()
}

fn fill(adj: &mut Adj, classes: &mut Vec<(Vec<(usize, usize)>, Adj)>) {
    let n = adj.len();
    let Some(v) = (0..n).find(|&v| adj[v].len() < 3) else {
        let mut sorted = adj.clone();
        for l in &mut sorted {
            l.sort_unstable();
        }
        if connected(&sorted) {
            let inv = invariant(&sorted);
            if !classes.iter().any(|(i, a)| *i == inv && isomorphic(a, &sorted)) {
                classes.push((inv, sorted));
            }
        }
        return;
    };
    let need = 3 - adj[v].len();
    let candidates: Vec<usize> = ((v + 1)..n).filter(|&w| adj[w].len() < 3 && !adj[v].contains(&w)).collect();
    choose(adj, classes, v, &candidates, need, 0);
}

fn choose(
    adj: &mut Adj,
    classes: &mut Vec<(Vec<(usize, usize)>, Adj)>,
    v: usize,
    cands: &[usize],
    need: usize,
    from: usize,
) {
    if need == 0 {
        fill(adj, classes);
        return;
    }
    for i in from..cands.len() {
        let w = cands[i];
        adj[v].push(w);
        adj[w].push(v);
        choose(adj, classes, v, cands, need - 1, i + 1);
        adj[v].pop();
        adj[w].pop();
    }
}

/// All 1-factorizations of `K6`, each as a sorted list of five sorted
/// matchings of sorted edges.
pub fn k6_factorizations() -> Vec<Vec<Vec<(usize, usize)>>> {
    let mut matchings: Vec<Vec<(usize, usize)>> = Vec::new();
    for a in 1..6 {
        let rest: Vec<usize> = (1..6).filter(|&x| x != a).collect();
        // pair up the remaining four vertices
        for b in 1..4 {
            let first = (rest[0], rest[b]);
            let others: Vec<usize> = rest.iter().copied().filter(|&x| x != rest[0] && x != rest[b]).collect();
            let mut m = vec![(0, a), first, (others[0], others[1])];
            m.sort_unstable();
            matchings.push(m);
        }
    }
    assert_eq!(matchings.len(), 15);
    let mut out = Vec::new();
    let idx: Vec<usize> = (0..15).collect();
    fn rec(
        ms: &[Vec<(usize, usize)>],
        idx: &[usize],
        start: usize,
        chosen: &mut Vec<usize>,
        used: &mut BTreeSet<(usize, usize)>,
        out: &mut Vec<Vec<Vec<(usize, usize)>>>,
    ) {
        if chosen.len() == 5 {
            let mut f: Vec<Vec<(usize, usize)>> = chosen.iter().map(|&i| ms[i].clone()).collect();
            f.sort();
            out.push(f);
            return;
        }
        for i in start..idx.len() {
            let m = &ms[idx[i]];
            if m.iter().all(|e| !used.contains(e)) {
                for e in m {
                    used.insert(*e);
                }
                chosen.push(idx[i]);
                rec(ms, idx, i + 1, chosen, used, out);
                chosen.pop();
                for e in m {
                    used.remove(e);
                }
            }
        }
    }
    rec(&matchings, &idx, 0, &mut Vec::new(), &mut BTreeSet::new(), &mut out);
    out
}

pub fn relabel_factorization(f: &[Vec<(usize, usize)>], sigma: &[usize]) -> Vec<Vec<(usize, usize)>> {
    let mut out: Vec<Vec<(usize, usize)>> = f
        .iter()
        .map(|m| {
            let mut m: Vec<(usize, usize)> =
                m.iter().map(|&(u, v)| (sigma[u].min(sigma[v]), sigma[u].max(sigma[v]))).collect();
            m.sort_unstable();
            m
        })
        .collect();
    out.sort();
    out
}

/// Number of (vertex permutation, label permutation) pairs carrying the
/// edge multiset of `g` onto itself; only identity label maps when
/// `permute_labels` is false.
pub fn brute_force_graph_automorphisms(g: &LabeledDigraph, permute_labels: bool) -> usize {
    let mut edges: Vec<(usize, usize, usize)> = g.edges().iter().map(|e| (e.src, e.dst, e.label)).collect();
    edges.sort_unstable();
    let label_perms: Vec<Vec<usize>> =
        if permute_labels { permutations(g.labels().len()) } else { vec![(0..g.labels().len()).collect()] };
    let mut count = 0;
    for sigma in permutations(g.vertex_count()) {
        for lambda in &label_perms {
            let mut image: Vec<(usize, usize, usize)> =
                edges.iter().map(|&(u, v, l)| (sigma[u], sigma[v], lambda[l])).collect();
            image.sort_unstable();
            if image == edges {
                count += 1;
            }
        }
    }
    count
}
