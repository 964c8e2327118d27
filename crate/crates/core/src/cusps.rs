//! Face cycles, return maps and cusp monodromy.
//!
//! A 2-face of a simplex is named by the two vertices it omits, `{a, b}`,
//! and lies in facets `a` and `b`. Leaving through one of those facets and
//! entering the glued simplex, the face continues in its image and the walk
//! leaves through the image of the other omitted vertex. The closed walks
//! are the face cycles; each one is a cusp.

use std::fmt;

use thiserror::Error;

use crate::perm::Perm5;
use crate::triangulation::Triangulation;
use crate::volumes::ExactVolume;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CuspError {
    #[error("triangulation has {0} free facets")]
    NotClosed(usize),
    #[error("slot is not part of this cycle")]
    NotInCycle,
}

/// A 2-face of a simplex: `(simplex, omitted pair)` with `omitted.0 < omitted.1`.
pub type Slot = (usize, (u8, u8));

/// Permutation of the three vertices of a base triangle, stored as the
/// images of its ascending vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TrianglePerm {
    pub vertices: [u8; 3],
    pub images: [u8; 3],
}

impl TrianglePerm {
    pub fn is_even(&self) -> bool {
        let pos: Vec<usize> = self.images.iter().map(|x| self.vertices.iter().position(|v| v == x).unwrap()).collect();
        let inversions = (0..3).flat_map(|i| (i + 1..3).map(move |j| (i, j))).filter(|&(i, j)| pos[i] > pos[j]).count();
        inversions % 2 == 0
    }

    pub fn is_identity(&self) -> bool {
        self.vertices == self.images
    }
}

/// `(123)→(213)` style, 1-based.
impl fmt::Display for TrianglePerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |xs: [u8; 3]| xs.iter().map(|x| (x + 1).to_string()).collect::<String>();
        write!(f, "({})→({})", s(self.vertices), s(self.images))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceCycle {
    /// Visited faces in walk order, starting at the base slot.
    pub slots: Vec<Slot>,
    /// Facet through which the walk leaves each slot.
    pub exits: Vec<u8>,
    /// Composite of the pairing maps along one full turn.
    pub holonomy: Perm5,
}

impl FaceCycle {
    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn base(&self) -> Slot {
        self.slots[0]
    }
}

fn retained(omitted: (u8, u8)) -> [u8; 3] {
    let mut out = [0; 3];
    let mut k = 0;
    for v in 0..5 {
        if v != omitted.0 && v != omitted.1 {
            out[k] = v;
            k += 1;
        }
    }
    out
}

fn ordered(a: u8, b: u8) -> (u8, u8) {
    (a.min(b), a.max(b))
}

/// Walks from `start` leaving through `exit` until the start state recurs.
fn walk(t: &Triangulation, start: Slot, exit: u8) -> FaceCycle {
    let mut slots = Vec::new();
    let mut exits = Vec::new();
    let mut holonomy = Perm5::IDENTITY;
    let (mut k, mut face, mut out) = (start.0, start.1, exit);
    loop {
        slots.push((k, face));
        exits.push(out);
        let g = t.glue(k, out).expect("closed triangulation");
        let other = if face.0 == out { face.1 } else { face.0 };
        holonomy = g.perm.compose(&holonomy);
        k = g.simplex;
        face = ordered(g.perm.apply(face.0), g.perm.apply(face.1));
        out = g.perm.apply(other);
        if (k, face, out) == (start.0, start.1, exit) {
            break;
        }
        debug_assert!(slots.len() <= 10 * t.simplex_count());
    }
    FaceCycle { slots, exits, holonomy }
}

/// Partition of all 2-faces into cycles. Each cycle starts at its smallest
/// slot and leaves through the smaller omitted vertex.
pub fn face_cycles(t: &Triangulation) -> Result<Vec<FaceCycle>, CuspError> {
    let free = t.free_facets().len();
    if free > 0 {
        return Err(CuspError::NotClosed(free));
    }
    let n = t.simplex_count();
    let index = |(k, (a, b)): Slot| k * 25 + a as usize * 5 + b as usize;
    let mut seen = vec![false; 25 * n];
    let mut cycles = Vec::new();
    for k in 0..n {
        for a in 0..5u8 {
            for b in (a + 1)..5u8 {
                if seen[index((k, (a, b)))] {
                    continue;
                }
                let c = walk(t, (k, (a, b)), a);
                for &s in &c.slots {
                    debug_assert!(!seen[index(s)], "2-face visited twice");
                    seen[index(s)] = true;
                }
                cycles.push(c);
            }
        }
    }
    Ok(cycles)
}

/// Return map of the cycle seen from its base slot.
pub fn return_map(c: &FaceCycle) -> TrianglePerm {
    let vertices = retained(c.base().1);
    TrianglePerm { vertices, images: vertices.map(|v| c.holonomy.apply(v)) }
}

/// Return map seen from another slot of the same cycle; it is conjugate to
/// the one from the base.
pub fn return_map_from(t: &Triangulation, c: &FaceCycle, slot: Slot) -> Result<TrianglePerm, CuspError> {
    let i = c.slots.iter().position(|&s| s == slot).ok_or(CuspError::NotInCycle)?;
    let rotated = walk(t, slot, c.exits[i]);
    Ok(return_map(&rotated))
}

/// Image of the cusp monodromy in `Z/2 × Z/2 = ⟨P⟩ × ⟨τ⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MappingClass {
    Identity,
    P,
    Tau,
    PTau,
}

impl MappingClass {
    pub fn from_exponents(p: u8, tau: u8) -> Self {
        match (p % 2, tau % 2) {
            (0, 0) => MappingClass::Identity,
            (1, 0) => MappingClass::P,
            (0, _) => MappingClass::Tau,
            _ => MappingClass::PTau,
        }
    }
}

impl fmt::Display for MappingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MappingClass::Identity => "id",
            MappingClass::P => "P",
            MappingClass::Tau => "τ",
            MappingClass::PTau => "Pτ",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CuspDescriptor {
    pub length: usize,
    pub return_map: TrianglePerm,
    /// Exponent of `P`: parity of `h` plus parity of the return map.
    pub p_exponent: u8,
    pub mapping_class: MappingClass,
    /// `(3√3/2)·h`.
    pub max_section_volume: ExactVolume,
}

/// `P`-exponent for a cycle of length `h` whose return map has the given
/// parity: 0 for even `h`, 1 for odd, plus 1 for an odd return map.
pub fn p_exponent(h: usize, return_map_even: bool) -> u8 {
    ((h % 2) as u8 + u8::from(!return_map_even)) % 2
}

pub fn monodromy(c: &FaceCycle) -> CuspDescriptor {
    let r = return_map(c);
    let h = c.len();
    let p = p_exponent(h, r.is_even());
    CuspDescriptor {
        length: h,
        return_map: r,
        p_exponent: p,
        mapping_class: MappingClass::from_exponents(p, u8::from(!r.is_even())),
        max_section_volume: ExactVolume::sqrt3(num_rational::Rational64::new(3 * h as i64, 2)),
    }
}

impl fmt::Display for CuspDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tau = if self.return_map.is_identity() { "id".to_string() } else { self.return_map.to_string() };
        write!(
            f,
            "cycle h={} r_c={} monodromy=(P^{}, {}) maxvol={}",
            self.length, self.return_map, self.p_exponent, tau, self.max_section_volume
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangulation::{double_of_simplex, one_cusped_triangulation};

    #[test]
    fn one_cusped_example() {
        let t = one_cusped_triangulation();
        let cycles = face_cycles(&t).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].len(), 20);
        // base face (123) of the first simplex omits 4 and 5
        let r = return_map_from(&t, &cycles[0], (0, (3, 4))).unwrap();
        assert_eq!(r.vertices, [0, 1, 2]);
        assert!(r.is_identity());
        let d = monodromy(&cycles[0]);
        assert_eq!(d.p_exponent, 0);
        assert_eq!(d.mapping_class, MappingClass::Identity);
    }

    #[test]
    fn double_of_simplex_has_ten_short_cycles() {
        let cycles = face_cycles(&double_of_simplex()).unwrap();
        assert_eq!(cycles.len(), 10);
        assert!(cycles.iter().all(|c| c.len() == 2 && return_map(c).is_identity()));
    }

    #[test]
    fn free_facets_are_rejected() {
        let e = crate::triangulation::edge_complex();
        assert_eq!(face_cycles(&e), Err(CuspError::NotClosed(2)));
    }

    #[test]
    fn table_cells() {
        assert_eq!(p_exponent(20, true), 0);
        assert_eq!(p_exponent(1, true), 1);
        assert_eq!(p_exponent(2, false), 1);
        assert_eq!(p_exponent(3, false), 0);
    }

    #[test]
    fn descriptor_line() {
        let cycles = face_cycles(&one_cusped_triangulation()).unwrap();
        let line = monodromy(&cycles[0]).to_string();
        assert!(line.starts_with("cycle h=20 r_c=(345)→(345) monodromy=(P^0, id) maxvol=30·√3"), "{line}");
    }
}
