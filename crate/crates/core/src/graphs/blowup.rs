//! Blow-up of a Cayley graph into a uniformly 5-valent labelled digraph.
//!
//! Each group element `g` becomes the `2m` vertices `(g, s_i, ±)`. The
//! generator edge `g → g·s_i` becomes `(g, s_i, −) → (g·s_i, s_i, +)`, and
//! each element gadget is a directed `2m`-cycle
//! `(g,s_1,−) → … → (g,s_m,−) → (g,s_1,+) → … → (g,s_m,+) → (g,s_1,−)`
//! whose `k`-th step carries the two parallel labels `a_k` and `b_k`.
//!
//! Label order: `s_1 < … < s_m < a_1 < … < a_2m < b_1 < … < b_2m`.

use super::{GraphError, LabeledDigraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

/// The vertex `(g, s_i, ±)`; `generator` is 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlowUpVertex {
    pub element: usize,
    pub generator: usize,
    pub sign: Sign,
}

impl BlowUpVertex {
    pub fn index(&self, m: usize) -> usize {
        self.element * 2 * m + 2 * self.generator + usize::from(self.sign == Sign::Plus)
    }

    pub fn from_index(index: usize, m: usize) -> Self {
        let element = index / (2 * m);
        let rest = index % (2 * m);
        BlowUpVertex {
            element,
            generator: rest / 2,
            sign: if rest.is_multiple_of(2) { Sign::Minus } else { Sign::Plus },
        }
    }

    pub fn name(&self) -> String {
        let s = if self.sign == Sign::Minus { '-' } else { '+' };
        format!("g{}.s{}.{}", self.element, self.generator + 1, s)
    }
}

/// Blows up a Cayley graph with `m` generator labels (see module docs).
pub fn blow_up(cayley: &LabeledDigraph, m: usize) -> Result<LabeledDigraph, GraphError> {
    if cayley.labels().len() != m || m == 0 {
        return Err(GraphError::GeneratorMismatch { expected: m, found: cayley.labels().len() });
    }
    let n = cayley.vertex_count();
    let vertices: Vec<String> = (0..2 * n * m).map(|i| BlowUpVertex::from_index(i, m).name()).collect();
    let mut labels: Vec<String> = cayley.labels().to_vec();
    labels.extend((1..=2 * m).map(|i| format!("a{i}")));
    labels.extend((1..=2 * m).map(|i| format!("b{i}")));
    let mut g = LabeledDigraph::new(vertices, labels);

    let v = |element, generator, sign| BlowUpVertex { element, generator, sign }.index(m);
    for e in cayley.edges() {
        g.add_edge(v(e.src, e.label, Sign::Minus), v(e.dst, e.label, Sign::Plus), e.label);
    }
    // gadget cycle positions 0..2m: (s_1,−)..(s_m,−),(s_1,+)..(s_m,+)
    let position = |element: usize, k: usize| {
        if k < m {
            v(element, k, Sign::Minus)
        } else {
            v(element, k - m, Sign::Plus)
        }
    };
    for element in 0..n {
        for k in 0..2 * m {
            let src = position(element, k);
            let dst = position(element, (k + 1) % (2 * m));
            g.add_edge(src, dst, m + k);
            g.add_edge(src, dst, 3 * m + k);
        }
    }
    Ok(g)
}

/// Classes of the equivalence generated by "joined by at least two edges".
pub fn related_classes(g: &LabeledDigraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut counts = std::collections::HashMap::new();
    for e in g.edges() {
        *counts.entry((e.src.min(e.dst), e.src.max(e.dst))).or_insert(0usize) += 1;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for (&(u, w), &c) in &counts {
        if c >= 2 {
            let (ru, rw) = (find(&mut parent, u), find(&mut parent, w));
            parent[ru.max(rw)] = ru.min(rw);
        }
    }
    let mut classes: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for x in 0..n {
        let r = find(&mut parent, x);
        classes.entry(r).or_default().push(x);
    }
    classes.into_values().collect()
}
