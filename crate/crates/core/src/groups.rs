//! Finite groups given by multiplication tables, and their Cayley graphs.
//!
//! Elements are the indices `0..order`, with the identity always at index 0.
//! Products follow the table: `mul(a, b)` is the element `a·b`.

use std::collections::{HashMap, VecDeque};

use serde::Deserialize;
use thiserror::Error;

use crate::graphs::LabeledDigraph;

/// Default cap on the order of a group built by closure.
pub const DEFAULT_ORDER_CAP: usize = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group too large: closure exceeds {cap} elements")]
    TooLarge { cap: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("invalid generators: {0}")]
    InvalidGenerators(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("malformed group file: {0}")]
    Parse(String),
}

/// A finite group with a chosen, ordered generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<u32>,
    generators: Vec<usize>,
}

impl FiniteGroup {
    /// Builds a group from a raw multiplication table.
    ///
    /// The table is validated exhaustively (closure, associativity, identity,
    /// inverses). If the identity is not element 0 the elements are renumbered
    /// so that it is; generator indices are renumbered accordingly.
    pub fn from_table(table: &[Vec<usize>], generators: &[usize]) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::InvalidTable("empty table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::InvalidTable(format!("row {i} has length {}", row.len())));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= n) {
                return Err(GroupError::InvalidTable(format!("entry {x} out of range in row {i}")));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| GroupError::InvalidTable("no identity element".into()))?;

        // swap identity into slot 0
        let relabel = |x: usize| {
            if x == identity {
                0
            } else if x == 0 {
                identity
            } else {
                x
            }
        };
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[relabel(a) * n + relabel(b)] = relabel(table[a][b]) as u32;
            }
        }
        let generators: Vec<usize> = generators
            .iter()
            .map(|&g| {
                if g >= n {
                    Err(GroupError::InvalidGenerators(format!("generator {g} out of range")))
                } else {
                    Ok(relabel(g))
                }
            })
            .collect::<Result<_, _>>()?;
        let group = FiniteGroup { order: n, mul, generators };
        group.validate()?;
        Ok(group)
    }

    /// Closure of a set of permutations under composition.
    ///
    /// Permutations are given in one-line notation on `0..degree`. The product
    /// `a·b` is the permutation "apply `a`, then `b`", so that right
    /// multiplication by a generator extends a word on the right.
    pub fn from_permutations(perms: &[Vec<usize>], cap: usize) -> Result<Self, GroupError> {
        let degree = perms.first().map_or(0, Vec::len);
        for p in perms {
            if p.len() != degree {
                return Err(GroupError::InvalidPermutation("permutations act on point sets of different sizes".into()));
            }
            let mut seen = vec![false; degree];
            for &x in p {
                if x >= degree || seen[x] {
                    return Err(GroupError::InvalidPermutation(format!("{p:?} is not a bijection")));
                }
                seen[x] = true;
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for p in perms {
                let prod: Vec<usize> = elements[i].iter().map(|&x| p[x]).collect();
                if !index.contains_key(&prod) {
                    if elements.len() >= cap {
                        return Err(GroupError::TooLarge { cap });
                    }
                    index.insert(prod.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(prod);
                }
            }
        }
        let n = elements.len();
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let prod: Vec<usize> = elements[a].iter().map(|&x| elements[b][x]).collect();
                mul[a * n + b] = index[&prod] as u32;
            }
        }
        let generators = perms.iter().map(|p| index[p]).collect();
        let group = FiniteGroup { order: n, mul, generators };
        group.validate()?;
        Ok(group)
    }

    /// The cyclic group `Z/n` generated by `1`.
    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        if n < 2 {
            return Err(GroupError::Domain("cyclic group needs n >= 2".into()));
        }
        let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_table(&table, &[1])
    }

    /// Direct product of cyclic groups with the standard basis as generators.
    pub fn abelian(factors: &[usize]) -> Result<Self, GroupError> {
        if factors.is_empty() || factors.iter().any(|&f| f < 2) {
            return Err(GroupError::Domain("factors must be >= 2".into()));
        }
        let n: usize = factors.iter().product();
        let digits = |mut x: usize| {
            factors
                .iter()
                .map(|&f| {
                    let d = x % f;
                    x /= f;
                    d
                })
                .collect::<Vec<_>>()
        };
        let encode = |ds: &[usize]| ds.iter().rev().zip(factors.iter().rev()).fold(0, |acc, (&d, &f)| acc * f + d);
        let table: Vec<Vec<usize>> = (0..n)
            .map(|a| {
                let da = digits(a);
                (0..n)
                    .map(|b| {
                        let db = digits(b);
                        let sum: Vec<usize> = (0..factors.len()).map(|i| (da[i] + db[i]) % factors[i]).collect();
                        encode(&sum)
                    })
                    .collect()
            })
            .collect();
        let mut stride = 1;
        let mut generators = Vec::new();
        for &f in factors {
            generators.push(stride);
            stride *= f;
        }
        Self::from_table(&table, &generators)
    }

    /// The symmetric group `S3` generated by `(1 2)` and `(1 2 3)`.
    pub fn symmetric3() -> Self {
        Self::from_permutations(&[vec![1, 0, 2], vec![1, 2, 0]], DEFAULT_ORDER_CAP).expect("S3 is valid")
    }

    fn validate(&self) -> Result<(), GroupError> {
        let n = self.order;
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(GroupError::InvalidTable("element 0 is not the identity".into()));
            }
            if !(0..n).any(|b| self.mul(a, b) == 0) {
                return Err(GroupError::InvalidTable(format!("element {a} has no inverse")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(GroupError::InvalidTable(format!("associativity fails at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let mut seen = vec![false; n];
        for &g in &self.generators {
            if g == 0 {
                return Err(GroupError::InvalidGenerators("identity is not a valid generator".into()));
            }
            if std::mem::replace(&mut seen[g], true) {
                return Err(GroupError::InvalidGenerators(format!("duplicate generator {g}")));
            }
        }
        if self.closure(&self.generators).len() != n {
            return Err(GroupError::InvalidGenerators("generators do not generate the group".into()));
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order).find(|&b| self.mul(a, b) == 0).expect("validated group")
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Subgroup generated by `gens`, as a sorted element list.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order).filter(|&x| seen[x]).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Searches for an isomorphism `self → other` by backtracking on the
    /// images of the generators of `self`. Returns the element map.
    pub fn isomorphism_to(&self, other: &FiniteGroup) -> Option<Vec<usize>> {
        if self.order != other.order {
            return None;
        }
        let gens = &self.generators;
        let orders: Vec<usize> = gens.iter().map(|&g| self.element_order(g)).collect();
        let candidates: Vec<Vec<usize>> =
            orders.iter().map(|&o| (1..other.order).filter(|&y| other.element_order(y) == o).collect()).collect();
        let mut images = vec![0usize; gens.len()];
        self.iso_search(other, &candidates, &mut images, 0)
    }

    fn iso_search(
        &self,
        other: &FiniteGroup,
        candidates: &[Vec<usize>],
        images: &mut Vec<usize>,
        depth: usize,
    ) -> Option<Vec<usize>> {
        if depth == images.len() {
            return self.extend_homomorphism(other, images);
        }
        for &y in &candidates[depth] {
            if images[..depth].contains(&y) {
                continue;
            }
            images[depth] = y;
            if let Some(map) = self.iso_search(other, candidates, images, depth + 1) {
                return Some(map);
            }
        }
        None
    }

    /// Extends generator images to a map via words, then checks it is a
    /// bijective homomorphism.
    fn extend_homomorphism(&self, other: &FiniteGroup, images: &[usize]) -> Option<Vec<usize>> {
        let n = self.order;
        let mut map = vec![usize::MAX; n];
        map[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (k, &g) in self.generators.iter().enumerate() {
                let y = self.mul(x, g);
                let fy = other.mul(map[x], images[k]);
                if map[y] == usize::MAX {
                    map[y] = fy;
                    queue.push_back(y);
                } else if map[y] != fy {
                    return None;
                }
            }
        }
        let mut hit = vec![false; n];
        for &v in &map {
            if std::mem::replace(&mut hit[v], true) {
                return None;
            }
        }
        for a in 0..n {
            for b in 0..n {
                if map[self.mul(a, b)] != other.mul(map[a], map[b]) {
                    return None;
                }
            }
        }
        Some(map)
    }

    pub fn is_isomorphic(&self, other: &FiniteGroup) -> bool {
        self.isomorphism_to(other).is_some()
    }
}

/// Directed Cayley graph: one edge `g → g·s` labelled `s` for every element
/// `g` and generator `s`. Involutions therefore produce two opposite edges
/// between each pair `{g, g·s}`.
pub fn cayley_graph(group: &FiniteGroup) -> LabeledDigraph {
    let n = group.order();
    let vertices: Vec<String> = (0..n).map(|g| format!("g{g}")).collect();
    let labels: Vec<String> = (1..=group.rank()).map(|i| format!("s{i}")).collect();
    let mut graph = LabeledDigraph::new(vertices, labels);
    for g in 0..n {
        for (i, &s) in group.generators().iter().enumerate() {
            graph.add_edge(g, group.mul(g, s), i);
        }
    }
    graph
}

/// `⌊log₂ n⌋`, the bound on the rank of a group of order `n`.
pub fn frucht_rank_bound(n: usize) -> Result<usize, GroupError> {
    if n == 0 {
        return Err(GroupError::Domain("group order must be positive".into()));
    }
    Ok(n.ilog2() as usize)
}

/// A permutation as it appears in a group file: one-line notation (1-based
/// images) or a cycle-notation string such as `"(1 2 3)(4 5)"`.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum PermSpec {
    OneLine(Vec<usize>),
    Cycles(String),
}

/// JSON group file. Either `{"permutations": [...], "degree": d?}` or
/// `{"table": [[...]], "generators": [...]}` with 0-based element indices.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum GroupFile {
    Permutations {
        permutations: Vec<PermSpec>,
        #[serde(default)]
        degree: Option<usize>,
    },
    Table {
        table: Vec<Vec<usize>>,
        generators: Vec<usize>,
    },
}

impl GroupFile {
    pub fn parse(text: &str) -> Result<Self, GroupError> {
        serde_json::from_str(text).map_err(|e| GroupError::Parse(format!("line {}: {e}", e.line())))
    }

    pub fn into_group(self, cap: usize) -> Result<FiniteGroup, GroupError> {
        match self {
            GroupFile::Table { table, generators } => FiniteGroup::from_table(&table, &generators),
            GroupFile::Permutations { permutations, degree } => {
                let parsed: Vec<Vec<usize>> = permutations.iter().map(parse_perm_spec).collect::<Result<_, _>>()?;
                let natural = parsed.iter().map(Vec::len).max().unwrap_or(0);
                let degree = degree.unwrap_or(natural).max(natural);
                let padded: Vec<Vec<usize>> = parsed
                    .into_iter()
                    .map(|mut p| {
                        p.extend(p.len()..degree);
                        p
                    })
                    .collect();
                FiniteGroup::from_permutations(&padded, cap)
            }
        }
    }
}

/// Parses a permutation into 0-based one-line notation, with length equal
/// to the largest point mentioned.
pub fn parse_perm_spec(spec: &PermSpec) -> Result<Vec<usize>, GroupError> {
    match spec {
        PermSpec::OneLine(images) => {
            if images.contains(&0) {
                return Err(GroupError::InvalidPermutation("one-line images are 1-based".into()));
            }
            Ok(images.iter().map(|&x| x - 1).collect())
        }
        PermSpec::Cycles(text) => parse_cycles(text),
    }
}

fn parse_cycles(text: &str) -> Result<Vec<usize>, GroupError> {
    let bad = |msg: &str| GroupError::InvalidPermutation(format!("{text:?}: {msg}"));
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let inner = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
        let close = inner.find(')').ok_or_else(|| bad("unclosed cycle"))?;
        let cycle = inner[..close]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|_| bad("non-integer point")))
            .collect::<Result<Vec<_>, _>>()?;
        if cycle.contains(&0) {
            return Err(bad("points are 1-based"));
        }
        cycles.push(cycle);
        rest = inner[close + 1..].trim_start();
    }
    let degree = cycles.iter().flatten().copied().max().unwrap_or(0);
    let mut perm: Vec<usize> = (0..degree).collect();
    let mut moved = vec![false; degree];
    for cycle in &cycles {
        for (k, &x) in cycle.iter().enumerate() {
            if std::mem::replace(&mut moved[x - 1], true) {
                return Err(bad("point appears in two cycles"));
            }
            perm[x - 1] = cycle[(k + 1) % cycle.len()] - 1;
        }
    }
    Ok(perm)
}
