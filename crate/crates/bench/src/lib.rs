//! Benchmark fixtures shared by the criterion suites.

use hypsym::groups::FiniteGroup;
use hypsym::Triangulation;

/// Groups used across the benchmarks, smallest first.
pub fn groups() -> Vec<(&'static str, FiniteGroup)> {
    vec![
        ("z2", FiniteGroup::cyclic(2).unwrap()),
        ("z3", FiniteGroup::cyclic(3).unwrap()),
        ("s3", FiniteGroup::symmetric3()),
    ]
}

pub fn realized(g: &FiniteGroup) -> Triangulation {
    hypsym::triangulation::realize_group(g).expect("builder succeeds on the fixture groups")
}
