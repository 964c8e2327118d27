//! Many pairwise non-isomorphic triangulations with the same automorphism
//! group, one per collection of asymmetric cubic graphs.

use serde::Serialize;
use thiserror::Error;

use crate::cusps::face_cycles;
use crate::graphs::{cubic_graphs, is_asymmetric, GraphError, LabeledDigraph};
use crate::groups::FiniteGroup;
use crate::triangulation::{automorphism_group, isomorphism, realize_group_with_graphs, TriangulationError};
use crate::volumes::manifold_volume;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CensusError {
    #[error("not enough asymmetric graphs at this k: {found} available, {needed} needed")]
    NotEnoughAsymmetric { found: usize, needed: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Triangulation(#[from] TriangulationError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    /// Indices into the asymmetric graphs at this `k`.
    pub graphs: Vec<usize>,
    pub simplices: usize,
    pub cusps: usize,
    pub volume: String,
    pub automorphisms: usize,
    pub group_isomorphic: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub k: usize,
    /// Connected cubic graphs on `2k` vertices.
    pub g: usize,
    /// Asymmetric ones among them.
    pub f: usize,
    /// Graphs needed per triangulation, `5m`.
    pub per_collection: usize,
    /// `C(f, 5m)`.
    pub possible_collections: u128,
    /// `v + e·(8k − 2)` with `v = 2nm`, `e = 5nm`.
    pub expected_simplices: usize,
    pub collections: Vec<Fingerprint>,
    /// Every pair of built triangulations was shown non-isomorphic.
    pub pairwise_distinct: bool,
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// The first `count` collections of `size` indices out of `0..f` in
/// lexicographic order; consecutive collections differ in one graph.
fn collections(f: usize, size: usize, count: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..size).collect();
    while out.len() < count {
        out.push(current.clone());
        // next combination
        let mut i = size;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] < f - size + i {
                current[i] += 1;
                for j in i + 1..size {
                    current[j] = current[j - 1] + 1;
                }
                break;
            }
        }
    }
    out
}

/// Builds `count` triangulations for `group` from asymmetric cubic graphs
/// on `2k` vertices and checks them pairwise for isomorphism.
pub fn run_census(k: usize, group: &FiniteGroup, count: usize) -> Result<CensusReport, CensusError> {
    let all = cubic_graphs(2 * k)?;
    let asymmetric: Vec<LabeledDigraph> = all.iter().filter(|g| is_asymmetric(g)).cloned().collect();
    let (n, m) = (group.order(), group.rank());
    let needed = 5 * m;
    let mut report = CensusReport {
        k,
        g: all.len(),
        f: asymmetric.len(),
        per_collection: needed,
        possible_collections: binomial(asymmetric.len(), needed),
        expected_simplices: 2 * n * m + 5 * n * m * (8 * k - 2),
        collections: Vec::new(),
        pairwise_distinct: true,
    };
    if count == 0 {
        return Ok(report);
    }
    if asymmetric.len() < needed {
        return Err(CensusError::NotEnoughAsymmetric { found: asymmetric.len(), needed });
    }
    let mut built = Vec::new();
    for picked in collections(asymmetric.len(), needed, count) {
        let graphs: Vec<LabeledDigraph> = picked.iter().map(|&i| asymmetric[i].clone()).collect();
        let t = realize_group_with_graphs(group, &graphs)?;
        let auts = automorphism_group(&t)?;
        let group_isomorphic = auts.to_finite_group().map(|a| a.is_isomorphic(group)).unwrap_or(false);
        report.collections.push(Fingerprint {
            graphs: picked,
            simplices: t.simplex_count(),
            cusps: face_cycles(&t).map(|c| c.len()).unwrap_or(0),
            volume: manifold_volume(&t).map(|v| v.to_string()).unwrap_or_default(),
            automorphisms: auts.order(),
            group_isomorphic,
        });
        built.push(t);
    }
    for i in 0..built.len() {
        for j in (i + 1)..built.len() {
            if isomorphism(&built[i], &built[j])?.is_some() {
                report.pairwise_distinct = false;
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 5), 1);
        assert_eq!(binomial(103, 5), 87_541_245);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn collection_order() {
        let c = collections(6, 5, 3);
        assert_eq!(c, vec![vec![0, 1, 2, 3, 4], vec![0, 1, 2, 3, 5], vec![0, 1, 2, 4, 5]]);
        assert_eq!(collections(5, 5, 3).len(), 1);
    }

    #[test]
    fn counts_only_at_small_k() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let r = run_census(4, &z2, 0).unwrap();
        assert_eq!((r.g, r.f), (5, 0));
        assert_eq!(run_census(4, &z2, 1), Err(CensusError::NotEnoughAsymmetric { found: 0, needed: 5 }));
    }
}
