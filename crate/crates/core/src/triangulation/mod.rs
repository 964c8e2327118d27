//! Facet-pairing triangulations of 4-simplices.
//!
//! Vertices of every simplex are labelled `0..5` (printed as `1..5`), and
//! facet `i` is the facet opposite vertex `i`. A pairing between facet `i` of
//! simplex `k` and facet `j` of simplex `l` is stored as the full
//! permutation `π` of vertex labels with `π(i) = j`; its restriction to the
//! facet is the simplicial identification.

mod automorphism;
mod builders;

pub use automorphism::{
    action_is_free, automorphism_group, automorphism_group_with_cap, isomorphism, orientation_preserving_subgroup,
    TriAutomorphism, TriAutomorphismGroup, DEFAULT_SIMPLEX_CAP,
};
pub use builders::{
    double_of_simplex, edge_complex, edge_complex_chain, graph_complex, one_cusped_triangulation, realize_group,
    realize_group_with_graphs, vertex_subcomplex, Wire,
};

use std::fmt::Write as _;

use thiserror::Error;

use crate::perm::Perm5;

/// `(simplex id, facet label)`, facet label 0-based.
pub type Side = (usize, u8);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TriangulationError {
    #[error("simplex {0} out of range")]
    SimplexOutOfRange(usize),
    #[error("facet {} of simplex {} is paired twice", .0.1 + 1, .0.0)]
    FacetReused(Side),
    #[error("facet {} of simplex {} cannot be paired with itself", .0.1 + 1, .0.0)]
    SelfGlue(Side),
    #[error("pairing map does not send facet {from} to facet {to}")]
    FacetMismatch { from: u8, to: u8 },
    #[error("triangulation has {0} free facets")]
    NotClosed(usize),
    #[error("triangulation is not orientable")]
    NotOrientable,
    #[error("{simplices} simplices exceeds cap {cap}")]
    TooLarge { simplices: usize, cap: usize },
    #[error("more than {0} automorphisms")]
    TooManyAutomorphisms(usize),
    #[error("bad input: {0}")]
    Input(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A facet identification, stored with `a ≤ b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pairing {
    pub a: Side,
    pub b: Side,
    /// Vertex labels of simplex `a.0` to vertex labels of simplex `b.0`.
    pub perm: Perm5,
}

impl Pairing {
    /// Canonicalises the orientation of the pair; `perm` goes from `x` to `y`.
    pub fn new(x: Side, y: Side, perm: Perm5) -> Result<Self, TriangulationError> {
        if x == y {
            return Err(TriangulationError::SelfGlue(x));
        }
        if x.1 >= 5 || y.1 >= 5 || perm.apply(x.1) != y.1 {
            return Err(TriangulationError::FacetMismatch { from: x.1 + 1, to: y.1 + 1 });
        }
        Ok(if x <= y { Pairing { a: x, b: y, perm } } else { Pairing { a: y, b: x, perm: perm.inverse() } })
    }

    /// Images of the ascending vertices of facet `a`.
    pub fn vmap(&self) -> [u8; 4] {
        let mut out = [0; 4];
        for (slot, v) in facet_vertices(self.a.1).into_iter().enumerate() {
            out[slot] = self.perm.apply(v);
        }
        out
    }

    pub fn is_self_pairing(&self) -> bool {
        self.a.0 == self.b.0
    }
}

/// Ascending vertex labels of facet `f`.
pub fn facet_vertices(f: u8) -> [u8; 4] {
    let mut out = [0; 4];
    let mut k = 0;
    for v in 0..5 {
        if v != f {
            out[k] = v;
            k += 1;
        }
    }
    out
}

/// The other side of a pairing, seen from one facet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Glue {
    pub simplex: usize,
    pub facet: u8,
    /// Labels of this simplex to labels of `simplex`.
    pub perm: Perm5,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation {
    pairings: Vec<Pairing>,
    glue: Vec<[Option<Glue>; 5]>,
}

impl Triangulation {
    /// Validates and sorts the pairings. Every facet may be used at most
    /// once; unused facets are free.
    pub fn new(simplices: usize, pairings: Vec<Pairing>) -> Result<Self, TriangulationError> {
        let mut glue = vec![[None; 5]; simplices];
        for p in &pairings {
            for side in [p.a, p.b] {
                if side.0 >= simplices {
                    return Err(TriangulationError::SimplexOutOfRange(side.0));
                }
                if glue[side.0][side.1 as usize].is_some() {
                    return Err(TriangulationError::FacetReused(side));
                }
            }
            glue[p.a.0][p.a.1 as usize] = Some(Glue { simplex: p.b.0, facet: p.b.1, perm: p.perm });
            glue[p.b.0][p.b.1 as usize] = Some(Glue { simplex: p.a.0, facet: p.a.1, perm: p.perm.inverse() });
        }
        let mut pairings = pairings;
        pairings.sort();
        Ok(Triangulation { pairings, glue })
    }

    pub fn simplex_count(&self) -> usize {
        self.glue.len()
    }

    pub fn pairings(&self) -> &[Pairing] {
        &self.pairings
    }

    pub fn glue(&self, simplex: usize, facet: u8) -> Option<Glue> {
        self.glue[simplex][facet as usize]
    }

    pub fn free_facets(&self) -> Vec<Side> {
        let mut out = Vec::new();
        for (k, row) in self.glue.iter().enumerate() {
            for f in 0..5u8 {
                if row[f as usize].is_none() {
                    out.push((k, f));
                }
            }
        }
        out
    }

    pub fn is_closed(&self) -> bool {
        self.glue.iter().all(|row| row.iter().all(Option::is_some))
    }

    /// Number of pairings joining two facets of the same simplex.
    pub fn self_pairing_count(&self, simplex: usize) -> usize {
        self.glue[simplex].iter().flatten().filter(|g| g.simplex == simplex).count() / 2
    }

    pub fn free_count(&self, simplex: usize) -> usize {
        self.glue[simplex].iter().filter(|g| g.is_none()).count()
    }

    /// Simplices reachable through pairings, one list per component.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.simplex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut i = 0;
            while i < comp.len() {
                let k = comp[i];
                i += 1;
                for g in self.glue[k].iter().flatten() {
                    if !seen[g.simplex] {
                        seen[g.simplex] = true;
                        comp.push(g.simplex);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Disjoint union; simplices of `other` are renumbered after ours.
    pub fn disjoint_union(&self, other: &Triangulation) -> Triangulation {
        let off = self.simplex_count();
        let mut pairings = self.pairings.clone();
        pairings.extend(other.pairings.iter().map(|p| Pairing {
            a: (p.a.0 + off, p.a.1),
            b: (p.b.0 + off, p.b.1),
            perm: p.perm,
        }));
        Triangulation::new(off + other.simplex_count(), pairings).expect("disjoint union of valid triangulations")
    }

    /// Text form:
    ///
    /// ```text
    /// simplices N
    /// k i l j : p q r s
    /// free
    /// k i
    /// ```
    ///
    /// Simplex ids are 0-based, facet and vertex labels 1-based. A pairing
    /// line sends the ascending vertices of facet `i` of simplex `k` to
    /// `p q r s` in simplex `l`. The `free` block appears only when some
    /// facet is unpaired.
    pub fn to_text(&self) -> String {
        let mut out = format!("simplices {}\n", self.simplex_count());
        for p in &self.pairings {
            let v = p.vmap();
            writeln!(
                out,
                "{} {} {} {} : {} {} {} {}",
                p.a.0,
                p.a.1 + 1,
                p.b.0,
                p.b.1 + 1,
                v[0] + 1,
                v[1] + 1,
                v[2] + 1,
                v[3] + 1
            )
            .unwrap();
        }
        let free = self.free_facets();
        if !free.is_empty() {
            out.push_str("free\n");
            for (k, f) in free {
                writeln!(out, "{} {}", k, f + 1).unwrap();
            }
        }
        out
    }

    /// Parses [`to_text`](Self::to_text) output. Blank lines and `#`
    /// comments are ignored; the free block, when present, must list
    /// exactly the unpaired facets.
    pub fn from_text(text: &str) -> Result<Self, TriangulationError> {
        let err = |line: usize, msg: String| TriangulationError::Parse { line, msg };
        let mut simplices: Option<usize> = None;
        let mut pairings = Vec::new();
        let mut free: Option<Vec<Side>> = None;
        let mut used = std::collections::HashSet::new();
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            last_line = line;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let toks: Vec<&str> = content.split_whitespace().collect();
            if simplices.is_none() {
                match toks.as_slice() {
                    ["simplices", n] => {
                        simplices = Some(n.parse().map_err(|_| err(line, format!("bad simplex count {n:?}")))?)
                    }
                    _ => return Err(err(line, "expected 'simplices N'".into())),
                }
                continue;
            }
            let n = simplices.unwrap();
            let simplex = |s: &str| -> Result<usize, TriangulationError> {
                let k: usize = s.parse().map_err(|_| err(line, format!("bad simplex id {s:?}")))?;
                if k >= n {
                    return Err(err(line, format!("simplex {k} out of range")));
                }
                Ok(k)
            };
            let label = |s: &str| -> Result<u8, TriangulationError> {
                match s.parse::<u8>() {
                    Ok(x @ 1..=5) => Ok(x - 1),
                    _ => Err(err(line, format!("bad label {s:?}"))),
                }
            };
            if let Some(list) = free.as_mut() {
                match toks.as_slice() {
                    [k, f] => list.push((simplex(k)?, label(f)?)),
                    _ => return Err(err(line, "expected 'k i' in free block".into())),
                }
                continue;
            }
            match toks.as_slice() {
                ["free"] => free = Some(Vec::new()),
                [k, i, l, j, ":", p, q, r, s] => {
                    let (k, i, l, j) = (simplex(k)?, label(i)?, simplex(l)?, label(j)?);
                    let images = [label(p)?, label(q)?, label(r)?, label(s)?];
                    let perm = perm_from_vmap(i, j, images)
                        .ok_or_else(|| err(line, "vertex map is not a bijection onto the target facet".into()))?;
                    let pairing = Pairing::new((k, i), (l, j), perm).map_err(|e| err(line, e.to_string()))?;
                    for side in [pairing.a, pairing.b] {
                        if !used.insert(side) {
                            return Err(err(line, TriangulationError::FacetReused(side).to_string()));
                        }
                    }
                    pairings.push(pairing);
                }
                _ => return Err(err(line, "expected 'k i l j : p q r s'".into())),
            }
        }
        let n = simplices.ok_or_else(|| err(last_line.max(1), "missing 'simplices N' header".into()))?;
        let t = Triangulation::new(n, pairings).map_err(|e| err(1, e.to_string()))?;
        if let Some(mut listed) = free {
            listed.sort_unstable();
            if listed != t.free_facets() {
                return Err(err(last_line, "free block does not match the unpaired facets".into()));
            }
        }
        Ok(t)
    }
}

/// Full permutation from a facet map given as images of the ascending
/// vertices of facet `i`, landing on facet `j`.
pub fn perm_from_vmap(i: u8, j: u8, images: [u8; 4]) -> Option<Perm5> {
    let from = facet_vertices(i);
    let mut table = [u8::MAX; 5];
    table[i as usize] = j;
    for k in 0..4 {
        if images[k] == j {
            return None;
        }
        table[from[k] as usize] = images[k];
    }
    Perm5::new(table)
}

/// One sign per simplex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientationAssignment {
    pub signs: Vec<i8>,
}

/// Sign of a pairing under an orientation assignment: the sign of the
/// facet map between ascending vertex lists, times the boundary sign
/// `(−1)^label` (1-based label) of each facet, times the simplex signs.
/// `-1` means orientation-reversing.
pub fn pairing_sign(p: &Pairing, o: &OrientationAssignment) -> i8 {
    let target = facet_vertices(p.b.1);
    let vmap = p.vmap();
    // permutation of positions 0..4
    let mut positions = [0usize; 4];
    for (k, image) in vmap.iter().enumerate() {
        positions[k] = target.iter().position(|v| v == image).expect("vmap lands on the target facet");
    }
    let mut inversions = 0;
    for x in 0..4 {
        for y in (x + 1)..4 {
            if positions[x] > positions[y] {
                inversions += 1;
            }
        }
    }
    let vmap_sign: i8 = if inversions % 2 == 0 { 1 } else { -1 };
    let boundary = |f: u8| -> i8 {
        if f.is_multiple_of(2) {
            1
        } else {
            -1
        }
    };
    vmap_sign * o.signs[p.a.0] * boundary(p.a.1) * o.signs[p.b.0] * boundary(p.b.1)
}

/// Pairings along a closed walk that cannot be made orientation-reversing
/// simultaneously.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonOrientableWitness {
    pub cycle: Vec<Pairing>,
}

/// Searches for signs making every pairing orientation-reversing. Free
/// facets impose nothing.
pub fn orientability(t: &Triangulation) -> Result<OrientationAssignment, NonOrientableWitness> {
    let n = t.simplex_count();
    let mut signs = vec![0i8; n];
    let mut parent: Vec<Option<Pairing>> = vec![None; n];
    let find = |k: usize, f: u8| -> Pairing {
        let g = t.glue(k, f).unwrap();
        Pairing::new((k, f), (g.simplex, g.facet), g.perm).unwrap()
    };
    for root in 0..n {
        if signs[root] != 0 {
            continue;
        }
        signs[root] = 1;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(k) = queue.pop_front() {
            for f in 0..5u8 {
                let Some(g) = t.glue(k, f) else { continue };
                let p = find(k, f);
                // need signs[k]·signs[l]·sgn π = −1
                let want = -signs[k] * g.perm.sign();
                if signs[g.simplex] == 0 {
                    signs[g.simplex] = want;
                    parent[g.simplex] = Some(p);
                    queue.push_back(g.simplex);
                } else if signs[g.simplex] != want {
                    let mut cycle = tree_path(&parent, k);
                    let mut other = tree_path(&parent, g.simplex);
                    // drop the shared part near the root
                    while let (Some(x), Some(y)) = (cycle.last(), other.last()) {
                        if x == y {
                            cycle.pop();
                            other.pop();
                        } else {
                            break;
                        }
                    }
                    cycle.push(p);
                    cycle.extend(other.into_iter().rev());
                    return Err(NonOrientableWitness { cycle });
                }
            }
        }
    }
    Ok(OrientationAssignment { signs })
}

fn tree_path(parent: &[Option<Pairing>], mut k: usize) -> Vec<Pairing> {
    let mut out = Vec::new();
    while let Some(p) = parent[k] {
        out.push(p);
        k = if p.a.0 == k { p.b.0 } else { p.a.0 };
    }
    out
}
