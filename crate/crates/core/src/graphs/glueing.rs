//! The glueing graphs of the building block: the 1-factorized `K6`, the
//! octahedral graph of a boundary component, and the prism graph of a cusp
//! section.

use super::{GraphError, LabeledDigraph};

/// `K6` on vertices `A..F` with its edges split into five perfect matchings
/// labelled `1..5`.
///
/// Uses the standard factorization `GK6`: with `A` as the point at infinity
/// and `B..F` as `Z/5`, matching `i` is `{∞, i}, {i−1, i+1}, {i−2, i+2}`.
pub fn k6_glueing_graph() -> LabeledDigraph {
    let vertices = ["A", "B", "C", "D", "E", "F"].map(String::from).to_vec();
    let labels = (1..=5).map(|i| i.to_string()).collect();
    let mut g = LabeledDigraph::new_undirected(vertices, labels);
    let z5 = |x: i32| 1 + x.rem_euclid(5) as usize;
    for i in 0..5 {
        g.add_undirected_edge(0, z5(i), i as usize);
        g.add_undirected_edge(z5(i - 1), z5(i + 1), i as usize);
        g.add_undirected_edge(z5(i - 2), z5(i + 2), i as usize);
    }
    g
}

/// Glueing graph of the boundary component labelled `label`: the `K6`
/// glueing graph with every edge of that label removed.
pub fn boundary_graph(gamma: &LabeledDigraph, label: &str) -> Result<LabeledDigraph, GraphError> {
    let idx = gamma.label_index(label).ok_or_else(|| GraphError::MissingLabel(label.to_string()))?;
    Ok(gamma.without_label(idx))
}

/// Glueing graph of the cusp Klein bottle: a boundary graph with the three
/// edges of one more label removed.
pub fn klein_graph(gamma_hat: &LabeledDigraph, label: &str) -> Result<LabeledDigraph, GraphError> {
    let idx = gamma_hat.label_index(label).ok_or_else(|| GraphError::MissingLabel(label.to_string()))?;
    Ok(gamma_hat.without_label(idx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{automorphisms, is_isomorphic, AutomorphismMode};

    fn octahedron() -> LabeledDigraph {
        // antipodal pairs (0,1), (2,3), (4,5)
        let mut edges = Vec::new();
        for u in 0..6 {
            for v in (u + 1)..6 {
                if u / 2 != v / 2 {
                    edges.push((u, v));
                }
            }
        }
        LabeledDigraph::from_undirected_edges(6, &edges)
    }

    fn prism() -> LabeledDigraph {
        LabeledDigraph::from_undirected_edges(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        )
    }

    fn assert_perfect_matchings(g: &LabeledDigraph) {
        for l in 0..g.labels().len() {
            let mut hits = vec![0; g.vertex_count()];
            for e in g.undirected_edges().iter().filter(|e| e.label == l) {
                hits[e.src] += 1;
                hits[e.dst] += 1;
            }
            assert!(hits.iter().all(|&h| h == 1), "label {l} is not a perfect matching");
        }
    }

    #[test]
    fn k6_is_a_one_factorization() {
        let g = k6_glueing_graph();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.undirected_edges().len(), 15);
        assert!((0..5).all(|l| g.label_count(l) == 3));
        assert_perfect_matchings(&g);
        let mut pairs: Vec<(usize, usize)> = g.undirected_edges().iter().map(|e| (e.src, e.dst)).collect();
        pairs.sort();
        pairs.dedup();
        assert_eq!(pairs.len(), 15);
    }

    #[test]
    fn boundary_graphs_are_octahedra() {
        let gamma = k6_glueing_graph();
        let first = boundary_graph(&gamma, "1").unwrap();
        for i in 1..=5 {
            let b = boundary_graph(&gamma, &i.to_string()).unwrap();
            assert_eq!(b.undirected_edges().len(), 12);
            assert_eq!(b.labels().len(), 4);
            assert!((0..6).all(|v| b.degree(v) == 4));
            assert_perfect_matchings(&b);
            assert!(is_isomorphic(&b, &octahedron(), AutomorphismMode::Unlabelled));
            assert!(is_isomorphic(&b, &first, AutomorphismMode::PermuteLabels));
        }
        assert_eq!(boundary_graph(&gamma, "7"), Err(GraphError::MissingLabel("7".into())));
    }

    #[test]
    fn klein_graph_is_a_prism() {
        let hat = boundary_graph(&k6_glueing_graph(), "1").unwrap();
        let k = klein_graph(&hat, "2").unwrap();
        assert_eq!(k.undirected_edges().len(), 9);
        assert!((0..6).all(|v| k.degree(v) == 3));
        assert!(is_isomorphic(&k, &prism(), AutomorphismMode::Unlabelled));
        assert!(klein_graph(&hat, "1").is_err());
    }

    #[test]
    fn glueing_graph_groups() {
        let gamma = k6_glueing_graph();
        let hat = boundary_graph(&gamma, "1").unwrap();
        let klein = klein_graph(&hat, "2").unwrap();
        let order = |g: &LabeledDigraph, m| automorphisms(g, m).unwrap().order();
        assert_eq!(order(&gamma, AutomorphismMode::PermuteLabels), 120);
        assert_eq!(order(&gamma, AutomorphismMode::PreserveLabels), 1);
        assert_eq!(order(&hat, AutomorphismMode::PermuteLabels), 24);
        assert_eq!(order(&hat, AutomorphismMode::PreserveLabels), 1);
        assert_eq!(order(&klein, AutomorphismMode::PermuteLabels), 12);
        assert_eq!(order(&klein, AutomorphismMode::PreserveLabels), 2);
    }

    #[test]
    fn preserving_group_is_a_subgroup() {
        let hat = boundary_graph(&k6_glueing_graph(), "3").unwrap();
        let klein = klein_graph(&hat, "5").unwrap();
        let all = automorphisms(&klein, AutomorphismMode::PermuteLabels).unwrap();
        let kept = automorphisms(&klein, AutomorphismMode::PreserveLabels).unwrap();
        assert!(kept.elements().iter().all(|a| all.contains(a)));
        assert!(all.is_closed() && kept.is_closed());
        assert_eq!(all.order() % kept.order(), 0);
    }
}
