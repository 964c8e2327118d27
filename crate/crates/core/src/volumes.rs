//! Exact volumes of the block, of the rectified 5-cell and of triangulated
//! manifolds, via the orbifold Euler characteristic.

use std::fmt;
use std::ops::{Add, Mul};

use num_rational::Rational64;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::triangulation::Triangulation;

/// Volume of the regular ideal hyperbolic tetrahedron.
pub const V_TET: f64 = 1.0149416064096536;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VolumeError {
    #[error("stabiliser order must be positive")]
    ZeroOrder,
    #[error("tags differ: {0:?} and {1:?}")]
    TagMismatch(Tag, Tag),
    #[error("triangulation has {0} free facets")]
    NotClosed(usize),
    #[error("group order and rank must be positive")]
    Domain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tag {
    One,
    PiSquared,
    Sqrt3,
}

impl Tag {
    fn value(self) -> f64 {
        match self {
            Tag::One => 1.0,
            Tag::PiSquared => std::f64::consts::PI * std::f64::consts::PI,
            Tag::Sqrt3 => 3f64.sqrt(),
        }
    }
}

/// `coefficient · tag` with a rational coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExactVolume {
    pub coefficient: Rational64,
    pub tag: Tag,
}

impl ExactVolume {
    pub fn new(coefficient: Rational64, tag: Tag) -> Self {
        ExactVolume { coefficient, tag }
    }

    pub fn pi_squared(coefficient: Rational64) -> Self {
        Self::new(coefficient, Tag::PiSquared)
    }

    pub fn sqrt3(coefficient: Rational64) -> Self {
        Self::new(coefficient, Tag::Sqrt3)
    }

    pub fn to_f64(&self) -> f64 {
        self.coefficient.to_f64().unwrap_or(f64::NAN) * self.tag.value()
    }

    pub fn checked_add(&self, other: &ExactVolume) -> Result<ExactVolume, VolumeError> {
        if self.coefficient.is_zero() {
            return Ok(*other);
        }
        if other.coefficient.is_zero() {
            return Ok(*self);
        }
        if self.tag != other.tag {
            return Err(VolumeError::TagMismatch(self.tag, other.tag));
        }
        Ok(ExactVolume::new(self.coefficient + other.coefficient, self.tag))
    }

    /// Exact form followed by a 15-digit decimal.
    pub fn describe(&self) -> String {
        format!("{} ≈ {:.15}", self, self.to_f64())
    }
}

impl Add for ExactVolume {
    type Output = ExactVolume;
    /// Panics on mismatched tags; see [`ExactVolume::checked_add`].
    fn add(self, other: ExactVolume) -> ExactVolume {
        self.checked_add(&other).expect("adding volumes with different tags")
    }
}

impl Mul<Rational64> for ExactVolume {
    type Output = ExactVolume;
    fn mul(self, k: Rational64) -> ExactVolume {
        ExactVolume::new(self.coefficient * k, self.tag)
    }
}

impl Mul<i64> for ExactVolume {
    type Output = ExactVolume;
    fn mul(self, k: i64) -> ExactVolume {
        self * Rational64::from_integer(k)
    }
}

/// `8/3·π²`, `30·√3`, `2/9`.
impl fmt::Display for ExactVolume {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let symbol = match self.tag {
            Tag::One => return write!(f, "{}", self.coefficient),
            Tag::PiSquared => "π²",
            Tag::Sqrt3 => "√3",
        };
        if self.coefficient.is_one() {
            write!(f, "{symbol}")
        } else {
            write!(f, "{}·{symbol}", self.coefficient)
        }
    }
}

/// Stabiliser order of a stratum; infinite strata (ideal vertices) do not
/// contribute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StabilizerOrder {
    Finite(u64),
    Infinite,
}

/// Strata by codimension: entry `d` lists `(count, order)` pairs for
/// codimension `d + 1`. The empty stratum contributes the leading 1.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StratumTable {
    pub by_codimension: Vec<Vec<(u64, StabilizerOrder)>>,
}

impl StratumTable {
    /// The Coxeter polytope of the rectified 5-cell: 10 facets with
    /// stabiliser order 2, 20 + 10 two-faces of orders 4 and 6, 30 edges of
    /// order 12, and 10 ideal vertices.
    pub fn rectified_5cell() -> Self {
        use StabilizerOrder::*;
        StratumTable {
            by_codimension: vec![
                vec![(10, Finite(2))],
                vec![(20, Finite(4)), (10, Finite(6))],
                vec![(30, Finite(12))],
                vec![(10, Infinite)],
            ],
        }
    }
}

/// `1 − Σ count/order (codim 1) + Σ (codim 2) − …`.
pub fn euler_characteristic(s: &StratumTable) -> Result<Rational64, VolumeError> {
    let mut chi = Rational64::one();
    for (d, strata) in s.by_codimension.iter().enumerate() {
        let sign = if d % 2 == 0 { -1 } else { 1 };
        for &(count, order) in strata {
            match order {
                StabilizerOrder::Finite(0) => return Err(VolumeError::ZeroOrder),
                StabilizerOrder::Finite(o) => chi += Rational64::new(sign * count as i64, o as i64),
                StabilizerOrder::Infinite => {}
            }
        }
    }
    Ok(chi)
}

/// Volume of the round 4-sphere, `8π²/3`.
pub fn sphere_volume() -> ExactVolume {
    ExactVolume::pi_squared(Rational64::new(8, 3))
}

/// `Vol S⁴ / 2 · χ`.
pub fn volume_rectified_5cell() -> ExactVolume {
    let chi = euler_characteristic(&StratumTable::rectified_5cell()).expect("fixed table");
    sphere_volume() * Rational64::new(1, 2) * chi
}

/// Six rectified 5-cells.
pub fn block_volume() -> ExactVolume {
    volume_rectified_5cell() * 6
}

pub fn manifold_volume(t: &Triangulation) -> Result<ExactVolume, VolumeError> {
    let free = t.free_facets().len();
    if free > 0 {
        return Err(VolumeError::NotClosed(free));
    }
    Ok(block_volume() * t.simplex_count() as i64)
}

/// Block volume over the boundary volume of the block (30 ideal regular
/// tetrahedra), and `12·v_tet`.
pub fn boundary_ratio_check() -> (f64, f64) {
    (block_volume().to_f64() / (30.0 * V_TET), 12.0 * V_TET)
}

/// Upper bound on the volume produced by the group realisation for a group
/// of order `n` and rank `m`: `2nm` vertex simplices plus `5nm` wires of at
/// most `10m` simplices, times the block volume.
pub fn volume_bound(n: u64, m: u64) -> Result<ExactVolume, VolumeError> {
    if n == 0 || m == 0 {
        return Err(VolumeError::Domain);
    }
    let simplices = 2 * n * m + 5 * n * m * 10 * m;
    Ok(block_volume() * simplices as i64)
}
