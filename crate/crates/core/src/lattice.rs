//! Exact short-vector certificates for the cusp lattices.
//!
//! Lattice vectors are written in a basis `(v1, v2, v3)` of `R³` with
//! `v1 = (0, √3, 0)` and `v2 = (3, 0, 0)`; the third generator depends on the
//! cusp. All lengths are kept as exact squared rationals through the Gram
//! matrix; floating point is used only for the eigenvalue estimate, and that
//! estimate is certified exactly before use.

use std::fmt;

use nalgebra::Matrix3;
use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("parameter n must be 0, 1 or 2, got {0}")]
    BadParameter(u32),
    #[error("cycle length must be 1 or 2, got {0}")]
    BadLength(u32),
    #[error("matrix is not symmetric positive definite")]
    NotPositiveDefinite,
    #[error("bound must be positive")]
    BadBound,
    #[error("a solution touches the search cube boundary at radius {0}")]
    BoundaryHit(i64),
}

/// Exact rational used for Gram entries and squared lengths.
pub type Rational = Ratio<i128>;
type Q = Rational;

fn q(n: i64, d: i64) -> Q {
    Q::new(n as i128, d as i128)
}

/// Symmetric positive definite 3×3 form with exact entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadForm3 {
    gram: [[Q; 3]; 3],
}

impl QuadForm3 {
    pub fn new(gram: [[Q; 3]; 3]) -> Result<Self, LatticeError> {
        let symmetric = (0..3).all(|i| (0..3).all(|j| gram[i][j] == gram[j][i]));
        let form = QuadForm3 { gram };
        if !symmetric || !form.leading_minors().iter().all(|m| m.is_positive()) {
            return Err(LatticeError::NotPositiveDefinite);
        }
        Ok(form)
    }

    /// Gram matrix of three vectors `(x, y√3, z)` given as `[x, y, z]`.
    pub fn from_generators(gens: [[Q; 3]; 3]) -> Result<Self, LatticeError> {
        let dot = |a: &[Q; 3], b: &[Q; 3]| a[0] * b[0] + Q::from_integer(3) * a[1] * b[1] + a[2] * b[2];
        let mut gram = [[Q::zero(); 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                gram[i][j] = dot(&gens[i], &gens[j]);
            }
        }
        Self::new(gram)
    }

    pub fn gram(&self) -> &[[Q; 3]; 3] {
        &self.gram
    }

    pub fn leading_minors(&self) -> [Q; 3] {
        let g = &self.gram;
        [g[0][0], g[0][0] * g[1][1] - g[0][1] * g[1][0], self.det()]
    }

    pub fn det(&self) -> Q {
        let g = &self.gram;
        g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
            + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0])
    }

    /// `wᵀ G w`.
    pub fn norm(&self, w: [i64; 3]) -> Q {
        let mut s = Q::zero();
        for i in 0..3 {
            for j in 0..3 {
                s += self.gram[i][j] * Q::from_integer((w[i] * w[j]) as i128);
            }
        }
        s
    }

    pub fn inner(&self, a: [i64; 3], b: [i64; 3]) -> Q {
        let mut s = Q::zero();
        for (row, &x) in self.gram.iter().zip(&a) {
            for (&g, &y) in row.iter().zip(&b) {
                s += g * Q::from_integer((x * y) as i128);
            }
        }
        s
    }

    /// Eigenvalues in ascending order (floating point).
    pub fn eigenvalues(&self) -> [f64; 3] {
        let m = Matrix3::from_fn(|i, j| self.gram[i][j].to_f64().unwrap());
        let mut ev: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
        ev.sort_by(|a, b| a.partial_cmp(b).unwrap());
        [ev[0], ev[1], ev[2]]
    }

    /// A rational `λ` with `G − λI` positive definite, just below the
    /// smallest eigenvalue.
    pub fn certified_min_eigenvalue_bound(&self) -> Q {
        let estimate = self.eigenvalues()[0];
        let mut margin = 1e-6;
        loop {
            // small denominator keeps the exact minors in range
            let lo = Q::new(((estimate - margin) * 1e6).floor() as i128, 1_000_000);
            if lo <= Q::zero() {
                return Q::zero();
            }
            let mut shifted = self.gram;
            for (i, row) in shifted.iter_mut().enumerate() {
                row[i] -= lo;
            }
            if QuadForm3::new(shifted).is_ok() {
                return lo;
            }
            margin *= 10.0;
        }
    }
}

/// Gram matrix of `v1 = (0, √3, 0)`, `v2 = (3, 0, 0)`,
/// `v3 = (1/2 + n, √3/2, 1)`.
pub fn q_matrix(n: u32) -> Result<QuadForm3, LatticeError> {
    if n > 2 {
        return Err(LatticeError::BadParameter(n));
    }
    let n = n as i64;
    QuadForm3::new([
        [q(3, 1), q(0, 1), q(3, 2)],
        [q(0, 1), q(9, 1), q(6 * n + 3, 2)],
        [q(3, 2), q(6 * n + 3, 2), q(n * n + n + 2, 1)],
    ])
}

/// `⌊√(bound/λ)⌋ + 1` for a certified lower bound `λ` on the smallest
/// eigenvalue, computed exactly.
pub fn search_radius(form: &QuadForm3, bound: Q) -> i64 {
    let lambda = form.certified_min_eigenvalue_bound();
    if lambda.is_zero() {
        return i64::MAX;
    }
    let mut k = 0i64;
    while Q::from_integer(((k + 1) * (k + 1)) as i128) * lambda <= bound {
        k += 1;
    }
    k + 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeVector {
    pub coords: [i64; 3],
    /// Squared length.
    pub norm: Q,
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.coords[0], self.coords[1], self.coords[2])
    }
}

/// All nonzero `w` with `wᵀGw ≤ bound`, in lexicographic order of
/// coordinates. The closed cube `[−R, R]³` is searched and no solution may
/// lie on its boundary.
pub fn short_vectors(form: &QuadForm3, bound: Q) -> Result<Vec<LatticeVector>, LatticeError> {
    if !bound.is_positive() {
        return Err(LatticeError::BadBound);
    }
    let r = search_radius(form, bound);
    let mut out = Vec::new();
    for a in -r..=r {
        for b in -r..=r {
            for c in -r..=r {
                let w = [a, b, c];
                if w == [0, 0, 0] {
                    continue;
                }
                let norm = form.norm(w);
                if norm <= bound {
                    if w.iter().any(|x| x.abs() == r) {
                        return Err(LatticeError::BoundaryHit(r));
                    }
                    out.push(LatticeVector { coords: w, norm });
                }
            }
        }
    }
    Ok(out)
}

/// Integer square root of a non-negative rational that is a perfect
/// integer square.
fn integer_square(x: Q) -> Option<i128> {
    if x.is_negative() || !x.is_integer() {
        return None;
    }
    let n = x.to_integer();
    let r = (n as f64).sqrt().round() as i128;
    (r - 1..=r + 1).find(|&s| s >= 0 && s * s == n)
}

/// `covolume / l(v)³` is an integer, decided as "`det G / |v|⁶` is a
/// perfect integer square".
pub fn height_is_integral(det: Q, norm: Q) -> bool {
    !norm.is_zero() && integer_square(det / (norm * norm * norm)).is_some()
}

/// Keeps `v` with `|v| ≤ 3` whose height is integral either for `v` itself
/// or for `v/√3`. The height uses the covolume of `form`.
pub fn condition_filter(form: &QuadForm3, vs: &[LatticeVector]) -> Vec<LatticeVector> {
    let det = form.det();
    vs.iter()
        .copied()
        .filter(|v| {
            v.norm <= Q::from_integer(9)
                && (height_is_integral(det, v.norm) || height_is_integral(det, v.norm / Q::from_integer(3)))
        })
        .collect()
}

/// Whether the cusp monodromy is induced by a plane translation: exactly
/// when the return map is even.
pub fn monodromy_is_translation(return_map_even: bool) -> bool {
    return_map_even
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RigidityCase {
    pub h: u32,
    pub return_map_even: bool,
    pub n: u32,
}

impl RigidityCase {
    /// Third generator `[x, y, z]` meaning `(x, y√3, z)`.
    pub fn third_generator(&self) -> Result<[Q; 3], LatticeError> {
        if self.n > 2 {
            return Err(LatticeError::BadParameter(self.n));
        }
        let n = self.n as i64;
        match (self.h, monodromy_is_translation(self.return_map_even)) {
            (1, true) => Ok([q(2 * n + 1, 2), q(1, 2), q(1, 1)]),
            (1, false) | (2, true) => Ok([q(n, 1), q(0, 1), q(2, 1)]),
            (2, false) => Ok([q(n, 1), q(0, 1), q(4, 1)]),
            (h, _) => Err(LatticeError::BadLength(h)),
        }
    }

    pub fn form(&self) -> Result<QuadForm3, LatticeError> {
        let v1 = [q(0, 1), q(1, 1), q(0, 1)];
        let v2 = [q(3, 1), q(0, 1), q(0, 1)];
        QuadForm3::from_generators([v1, v2, self.third_generator()?])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RigidityVerdict {
    pub case: RigidityCase,
    pub radius: i64,
    pub short: Vec<LatticeVector>,
    /// Pairs `(a, b)` with `a ⟂ b`, `|b|² = 3|a|²`, `|b| ≤ 3` and integral
    /// height for `a`, restricted to the smallest `|a|`.
    pub shortest_pairs: Vec<(LatticeVector, LatticeVector)>,
    /// True iff the shortest pairs are exactly `(±v1, ±v2)`.
    pub standard: bool,
    pub note: Option<String>,
}

/// Enumerates the case lattice and decides whether `v1`, `v2` form the
/// shortest pair satisfying orthogonality, the `√3` length ratio and
/// integral height.
pub fn rigidity_case(case: RigidityCase) -> Result<RigidityVerdict, LatticeError> {
    let form = case.form()?;
    let bound = Q::from_integer(9);
    let short = short_vectors(&form, bound)?;
    let det = form.det();
    let mut pairs = Vec::new();
    for a in &short {
        if !height_is_integral(det, a.norm) {
            continue;
        }
        for b in &short {
            if b.norm == a.norm * Q::from_integer(3) && form.inner(a.coords, b.coords).is_zero() {
                pairs.push((*a, *b));
            }
        }
    }
    let min = pairs.iter().map(|(a, _)| a.norm).min();
    let shortest_pairs: Vec<_> = pairs.into_iter().filter(|(a, _)| Some(a.norm) == min).collect();
    let standard_set: Vec<([i64; 3], [i64; 3])> =
        [1, -1].into_iter().flat_map(|s| [1, -1].into_iter().map(move |t| ([s, 0, 0], [0, t, 0]))).collect();
    let mut found: Vec<([i64; 3], [i64; 3])> = shortest_pairs.iter().map(|(a, b)| (a.coords, b.coords)).collect();
    found.sort_unstable();
    let mut expected = standard_set;
    expected.sort_unstable();
    let note = (case.h == 2 && !case.return_map_even).then(|| {
        format!(
            "covolume² = {det}, the value of a height-4 torus; handled like cycle lengths ≥ 3, where v1 and v2 are evidently shortest"
        )
    });
    Ok(RigidityVerdict {
        case,
        radius: search_radius(&form, bound),
        short,
        standard: found == expected,
        shortest_pairs,
        note,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gram_matches_generators() {
        for n in 0..3 {
            let case = RigidityCase { h: 1, return_map_even: true, n };
            assert_eq!(case.form().unwrap(), q_matrix(n).unwrap());
            assert_eq!(q_matrix(n).unwrap().det(), Q::from_integer(27));
        }
        assert_eq!(q_matrix(3), Err(LatticeError::BadParameter(3)));
    }

    #[test]
    fn n0_eigenvalues_and_radius() {
        let f = q_matrix(0).unwrap();
        let ev = f.eigenvalues();
        for (x, y) in ev.iter().zip([0.7345855820807065, 3.942467983256047, 9.32294643466325]) {
            assert!((x - y).abs() < 1e-9);
        }
        let lo = f.certified_min_eigenvalue_bound();
        assert!(lo.to_f64().unwrap() <= ev[0] && lo.to_f64().unwrap() > ev[0] - 1e-5);
        assert_eq!(search_radius(&f, Q::from_integer(9)), 4);
    }

    #[test]
    fn filtered_sets() {
        for n in 0..3 {
            let f = q_matrix(n).unwrap();
            let short = short_vectors(&f, Q::from_integer(9)).unwrap();
            assert!(short.len() >= 4);
            let kept: Vec<[i64; 3]> = condition_filter(&f, &short).iter().map(|v| v.coords).collect();
            assert_eq!(kept, vec![[-1, 0, 0], [0, -1, 0], [0, 1, 0], [1, 0, 0]], "n = {n}");
        }
    }

    #[test]
    fn rejects_indefinite() {
        let z = Q::zero();
        let one = Q::from_integer(1);
        assert!(QuadForm3::new([[one, z, z], [z, -one, z], [z, z, one]]).is_err());
        assert!(short_vectors(&q_matrix(0).unwrap(), Q::zero()).is_err());
    }

    #[test]
    fn all_cases_are_standard() {
        for h in 1..=2 {
            for even in [true, false] {
                for n in 0..3 {
                    let v = rigidity_case(RigidityCase { h, return_map_even: even, n }).unwrap();
                    assert!(v.standard, "h={h} even={even} n={n}: {:?}", v.shortest_pairs);
                    assert_eq!(v.note.is_some(), h == 2 && !even);
                }
            }
        }
        assert!(rigidity_case(RigidityCase { h: 3, return_map_even: true, n: 0 }).is_err());
    }
}
