//! Combinatorial automorphisms and isomorphisms of triangulations.
//!
//! A map between triangulations sends each simplex `k` to `σ(k)` through a
//! vertex relabelling `p_k`, and must carry every pairing onto a pairing and
//! free facets onto free facets. On a connected component the image of one
//! simplex and its relabelling determine everything else, so the search
//! branches only on a root per component.

use std::collections::HashMap;

use super::{OrientationAssignment, Triangulation, TriangulationError};
use crate::groups::{FiniteGroup, GroupError};
use crate::perm::Perm5;

pub const DEFAULT_SIMPLEX_CAP: usize = 2048;
const DEFAULT_GROUP_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TriAutomorphism {
    pub simplex_map: Vec<usize>,
    /// `vertex_maps[k]` relabels simplex `k` into simplex `simplex_map[k]`.
    pub vertex_maps: Vec<Perm5>,
}

impl TriAutomorphism {
    pub fn identity(n: usize) -> Self {
        TriAutomorphism { simplex_map: (0..n).collect(), vertex_maps: vec![Perm5::IDENTITY; n] }
    }

    pub fn is_identity(&self) -> bool {
        self.simplex_map.iter().enumerate().all(|(k, &s)| k == s) && self.vertex_maps.iter().all(Perm5::is_identity)
    }

    /// Apply `self`, then `other`.
    pub fn then(&self, other: &TriAutomorphism) -> TriAutomorphism {
        let simplex_map = self.simplex_map.iter().map(|&s| other.simplex_map[s]).collect();
        let vertex_maps = self
            .vertex_maps
            .iter()
            .enumerate()
            .map(|(k, p)| other.vertex_maps[self.simplex_map[k]].compose(p))
            .collect();
        TriAutomorphism { simplex_map, vertex_maps }
    }

    pub fn inverse(&self) -> TriAutomorphism {
        let n = self.simplex_map.len();
        let mut simplex_map = vec![0; n];
        let mut vertex_maps = vec![Perm5::IDENTITY; n];
        for k in 0..n {
            simplex_map[self.simplex_map[k]] = k;
            vertex_maps[self.simplex_map[k]] = self.vertex_maps[k].inverse();
        }
        TriAutomorphism { simplex_map, vertex_maps }
    }

    /// True iff this is an isomorphism from `src` onto `dst`.
    pub fn is_isomorphism(&self, src: &Triangulation, dst: &Triangulation) -> bool {
        let n = src.simplex_count();
        if dst.simplex_count() != n || self.simplex_map.len() != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &s in &self.simplex_map {
            if s >= n || std::mem::replace(&mut hit[s], true) {
                return false;
            }
        }
        (0..n).all(|k| {
            (0..5u8).all(|f| {
                let pk = self.vertex_maps[k];
                let image = dst.glue(self.simplex_map[k], pk.apply(f));
                match (src.glue(k, f), image) {
                    (None, None) => true,
                    (Some(g), Some(h)) => {
                        h.simplex == self.simplex_map[g.simplex]
                            && h.perm.compose(&pk) == self.vertex_maps[g.simplex].compose(&g.perm)
                    }
                    _ => false,
                }
            })
        })
    }
}

/// The automorphisms of one triangulation; element 0 is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriAutomorphismGroup {
    elements: Vec<TriAutomorphism>,
}

impl TriAutomorphismGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[TriAutomorphism] {
        &self.elements
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// Abstract group with product "apply left, then right".
    pub fn to_finite_group(&self) -> Result<FiniteGroup, GroupError> {
        let index: HashMap<&TriAutomorphism, usize> = self.elements.iter().enumerate().map(|(i, a)| (a, i)).collect();
        let table: Option<Vec<Vec<usize>>> = self
            .elements
            .iter()
            .map(|a| self.elements.iter().map(|b| index.get(&a.then(b)).copied()).collect())
            .collect();
        let table = table.ok_or(GroupError::InvalidTable("automorphisms not closed".into()))?;
        let all: Vec<usize> = (1..table.len()).collect();
        let full = FiniteGroup::from_table(&table, &all)?;
        let mut generators = Vec::new();
        let mut span = full.closure(&[]);
        for x in 0..table.len() {
            if !span.contains(&x) {
                generators.push(x);
                span = full.closure(&generators);
            }
        }
        FiniteGroup::from_table(&table, &generators)
    }
}

/// Per-simplex invariant used to prune candidate images.
fn invariants(t: &Triangulation) -> Vec<Vec<u32>> {
    let n = t.simplex_count();
    let base: Vec<(u32, u32)> = (0..n).map(|k| (t.self_pairing_count(k) as u32, t.free_count(k) as u32)).collect();
    (0..n)
        .map(|k| {
            let mut nb: Vec<(u32, u32)> = (0..5u8).filter_map(|f| t.glue(k, f)).map(|g| base[g.simplex]).collect();
            nb.sort_unstable();
            let mut v = vec![base[k].0, base[k].1];
            v.extend(nb.into_iter().flat_map(|(a, b)| [a, b]));
            v
        })
        .collect()
}

struct Search<'a> {
    src: &'a Triangulation,
    dst: &'a Triangulation,
    src_inv: Vec<Vec<u32>>,
    dst_inv: Vec<Vec<u32>>,
    components: Vec<Vec<usize>>,
    sigma: Vec<Option<usize>>,
    maps: Vec<Perm5>,
    used: Vec<bool>,
    limit: usize,
    found: Vec<TriAutomorphism>,
}

impl<'a> Search<'a> {
    fn new(src: &'a Triangulation, dst: &'a Triangulation, limit: usize) -> Self {
        let src_inv = invariants(src);
        let dst_inv = invariants(dst);
        let n = src.simplex_count();
        let mut components = src.components();
        for comp in &mut components {
            // root at the simplex whose invariant is rarest
            let mut counts: HashMap<&Vec<u32>, usize> = HashMap::new();
            for v in &dst_inv {
                *counts.entry(v).or_default() += 1;
            }
            let best =
                comp.iter().copied().min_by_key(|&k| (counts.get(&src_inv[k]).copied().unwrap_or(0), k)).unwrap();
            comp.retain(|&k| k != best);
            comp.insert(0, best);
        }
        Search {
            src,
            dst,
            src_inv,
            dst_inv,
            components,
            sigma: vec![None; n],
            maps: vec![Perm5::IDENTITY; n],
            used: vec![false; dst.simplex_count()],
            limit,
            found: Vec::new(),
        }
    }

    /// Maps the component of `root` given `σ(root) = image` via `p`;
    /// returns the assigned simplices, or `None` after undoing.
    fn propagate(&mut self, root: usize, image: usize, p: Perm5) -> Option<Vec<usize>> {
        let mut assigned = vec![root];
        self.sigma[root] = Some(image);
        self.maps[root] = p;
        self.used[image] = true;
        let mut i = 0;
        let mut ok = true;
        'outer: while i < assigned.len() {
            let k = assigned[i];
            i += 1;
            let sk = self.sigma[k].unwrap();
            let pk = self.maps[k];
            for f in 0..5u8 {
                let image_glue = self.dst.glue(sk, pk.apply(f));
                match (self.src.glue(k, f), image_glue) {
                    (None, None) => {}
                    (Some(g), Some(h)) => {
                        let pl = h.perm.compose(&pk).compose(&g.perm.inverse());
                        match self.sigma[g.simplex] {
                            Some(sl) => {
                                if sl != h.simplex || self.maps[g.simplex] != pl {
                                    ok = false;
                                    break 'outer;
                                }
                            }
                            None => {
                                if self.used[h.simplex] || self.src_inv[g.simplex] != self.dst_inv[h.simplex] {
                                    ok = false;
                                    break 'outer;
                                }
                                self.sigma[g.simplex] = Some(h.simplex);
                                self.maps[g.simplex] = pl;
                                self.used[h.simplex] = true;
                                assigned.push(g.simplex);
                            }
                        }
                    }
                    _ => {
                        ok = false;
                        break 'outer;
                    }
                }
            }
        }
        if ok {
            Some(assigned)
        } else {
            self.undo(&assigned);
            None
        }
    }

    fn undo(&mut self, assigned: &[usize]) {
        for &k in assigned {
            self.used[self.sigma[k].unwrap()] = false;
            self.sigma[k] = None;
        }
    }

    fn run(&mut self, component: usize, perms: &[Perm5]) -> bool {
        if self.found.len() >= self.limit {
            return true;
        }
        if component == self.components.len() {
            self.found.push(TriAutomorphism {
                simplex_map: self.sigma.iter().map(|s| s.unwrap()).collect(),
                vertex_maps: self.maps.clone(),
            });
            return self.found.len() >= self.limit;
        }
        let root = self.components[component][0];
        for image in 0..self.dst.simplex_count() {
            if self.used[image] || self.dst_inv[image] != self.src_inv[root] {
                continue;
            }
            for &p in perms {
                if let Some(assigned) = self.propagate(root, image, p) {
                    let stop = self.run(component + 1, perms);
                    self.undo(&assigned);
                    if stop {
                        return true;
                    }
                }
            }
        }
        false
    }
}

fn quick_reject(a: &Triangulation, b: &Triangulation) -> bool {
    if a.simplex_count() != b.simplex_count() || a.pairings().len() != b.pairings().len() {
        return true;
    }
    let mut x = invariants(a);
    let mut y = invariants(b);
    x.sort();
    y.sort();
    x != y
}

pub fn automorphism_group(t: &Triangulation) -> Result<TriAutomorphismGroup, TriangulationError> {
    automorphism_group_with_cap(t, DEFAULT_SIMPLEX_CAP)
}

/// Full automorphism group; the identity comes first.
pub fn automorphism_group_with_cap(t: &Triangulation, cap: usize) -> Result<TriAutomorphismGroup, TriangulationError> {
    if t.simplex_count() > cap {
        return Err(TriangulationError::TooLarge { simplices: t.simplex_count(), cap });
    }
    let perms = Perm5::all();
    let mut search = Search::new(t, t, DEFAULT_GROUP_CAP + 1);
    search.run(0, &perms);
    if search.found.len() > DEFAULT_GROUP_CAP {
        return Err(TriangulationError::TooManyAutomorphisms(DEFAULT_GROUP_CAP));
    }
    let mut elements = search.found;
    let id = elements.iter().position(TriAutomorphism::is_identity).expect("identity is always found");
    elements.swap(0, id);
    for a in &elements {
        for k in 0..t.simplex_count() {
            debug_assert_eq!(t.self_pairing_count(k), t.self_pairing_count(a.simplex_map[k]));
        }
    }
    Ok(TriAutomorphismGroup { elements })
}

/// Some isomorphism from `a` onto `b`, if one exists.
pub fn isomorphism(a: &Triangulation, b: &Triangulation) -> Result<Option<TriAutomorphism>, TriangulationError> {
    let cap = DEFAULT_SIMPLEX_CAP;
    if a.simplex_count() > cap {
        return Err(TriangulationError::TooLarge { simplices: a.simplex_count(), cap });
    }
    if quick_reject(a, b) {
        return Ok(None);
    }
    let perms = Perm5::all();
    let mut search = Search::new(a, b, 1);
    search.run(0, &perms);
    Ok(search.found.pop())
}

/// Elements that carry the sign assignment to itself: `o(σk)·sgn(p_k) = o(k)`
/// on every simplex.
pub fn orientation_preserving_subgroup(
    t: &Triangulation,
    o: &OrientationAssignment,
    auts: &TriAutomorphismGroup,
) -> Result<TriAutomorphismGroup, TriangulationError> {
    if super::orientability(t).is_err() || o.signs.len() != t.simplex_count() {
        return Err(TriangulationError::NotOrientable);
    }
    let elements = auts
        .elements
        .iter()
        .filter(|a| {
            (0..t.simplex_count()).all(|k| o.signs[a.simplex_map[k]] * a.vertex_maps[k].sign() * o.signs[k] == 1)
        })
        .cloned()
        .collect();
    Ok(TriAutomorphismGroup { elements })
}

/// True iff no non-identity element fixes a simplex or swaps two distinct
/// simplices that share a pairing.
pub fn action_is_free(t: &Triangulation, auts: &TriAutomorphismGroup) -> bool {
    auts.elements.iter().filter(|a| !a.is_identity()).all(|a| {
        let fixes = a.simplex_map.iter().enumerate().any(|(k, &s)| k == s);
        let swaps = t.pairings().iter().any(|p| {
            let (k, l) = (p.a.0, p.b.0);
            k != l && a.simplex_map[k] == l && a.simplex_map[l] == k
        });
        !fixes && !swaps
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangulation::{double_of_simplex, edge_complex, one_cusped_triangulation, orientability};

    #[test]
    fn double_has_the_swap() {
        let t = double_of_simplex();
        let g = automorphism_group(&t).unwrap();
        // S5 acting diagonally, times the swap
        assert_eq!(g.order(), 240);
        assert!(g.elements().iter().any(|a| a.simplex_map == vec![1, 0]));
        assert!(g.elements()[0].is_identity());
        assert!(!action_is_free(&t, &g));
        let o = orientability(&t).unwrap();
        let plus = orientation_preserving_subgroup(&t, &o, &g).unwrap();
        assert_eq!(plus.order(), 120);
    }

    #[test]
    fn elements_are_isomorphisms_and_close() {
        let t = one_cusped_triangulation();
        let g = automorphism_group(&t).unwrap();
        for a in g.elements() {
            assert!(a.is_isomorphism(&t, &t));
            for b in g.elements() {
                assert!(g.elements().contains(&a.then(b)));
            }
            assert!(a.then(&a.inverse()).is_identity());
        }
        assert!(g.to_finite_group().is_ok());
    }

    #[test]
    fn edge_complex_is_rigid_and_not_isomorphic_to_double() {
        let e = edge_complex();
        assert!(automorphism_group(&e).unwrap().is_trivial());
        assert_eq!(isomorphism(&e, &double_of_simplex()).unwrap(), None);
        let iso = isomorphism(&e, &e).unwrap().unwrap();
        assert!(iso.is_identity());
    }

    #[test]
    fn simplex_cap() {
        let t = double_of_simplex();
        assert_eq!(automorphism_group_with_cap(&t, 1), Err(TriangulationError::TooLarge { simplices: 2, cap: 1 }));
    }

    #[test]
    fn trivial_group_acts_freely() {
        let e = edge_complex();
        assert!(action_is_free(&e, &automorphism_group(&e).unwrap()));
    }
}
