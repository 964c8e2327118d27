//! Permutations of the five vertex labels of a 4-simplex.
//!
//! Internally labels are `0..5`; text forms use `1..5`.

use std::fmt;

/// A bijection of `{0,1,2,3,4}` stored as its image table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm5([u8; 5]);

impl Perm5 {
    pub const IDENTITY: Perm5 = Perm5([0, 1, 2, 3, 4]);

    /// Builds from a 0-based image table; `None` unless it is a bijection.
    pub fn new(images: [u8; 5]) -> Option<Self> {
        let mut seen = [false; 5];
        for &x in &images {
            if x >= 5 || seen[x as usize] {
                return None;
            }
            seen[x as usize] = true;
        }
        Some(Perm5(images))
    }

    /// Builds from a 1-based one-line table, e.g. `[2,1,3,4,5]`.
    pub fn from_one_based(images: [u8; 5]) -> Option<Self> {
        if images.contains(&0) {
            return None;
        }
        Self::new(images.map(|x| x - 1))
    }

    /// Swaps two 0-based labels.
    pub fn transposition(a: u8, b: u8) -> Self {
        let mut t = Self::IDENTITY.0;
        t.swap(a as usize, b as usize);
        Perm5(t)
    }

    /// The permutation sending `from[k]` to `to[k]`; both must be
    /// arrangements of all five labels.
    pub fn from_pairs(from: [u8; 5], to: [u8; 5]) -> Option<Self> {
        let mut images = [u8::MAX; 5];
        for k in 0..5 {
            if from[k] >= 5 || images[from[k] as usize] != u8::MAX {
                return None;
            }
            images[from[k] as usize] = to[k];
        }
        Self::new(images)
    }

    pub fn apply(&self, x: u8) -> u8 {
        self.0[x as usize]
    }

    pub fn images(&self) -> [u8; 5] {
        self.0
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm5) -> Perm5 {
        Perm5(other.0.map(|x| self.0[x as usize]))
    }

    pub fn inverse(&self) -> Perm5 {
        let mut inv = [0u8; 5];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm5(inv)
    }

    /// `+1` for even, `-1` for odd.
    pub fn sign(&self) -> i8 {
        let mut seen = [false; 5];
        let mut sign = 1;
        for start in 0..5 {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x] as usize;
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    /// All 120 permutations in lexicographic order of image tables.
    pub fn all() -> Vec<Perm5> {
        let mut out = Vec::with_capacity(120);
        let mut current = [0u8; 5];
        fn rec(depth: usize, used: &mut [bool; 5], current: &mut [u8; 5], out: &mut Vec<Perm5>) {
            if depth == 5 {
                out.push(Perm5(*current));
                return;
            }
            for x in 0..5u8 {
                if !used[x as usize] {
                    used[x as usize] = true;
                    current[depth] = x;
                    rec(depth + 1, used, current, out);
                    used[x as usize] = false;
                }
            }
        }
        rec(0, &mut [false; 5], &mut current, &mut out);
        out
    }
}

impl Default for Perm5 {
    fn default() -> Self {
        Self::IDENTITY
    }
}

/// One-line 1-based form, e.g. `[2 1 3 4 5]`.
impl fmt::Display for Perm5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| (x + 1).to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}
