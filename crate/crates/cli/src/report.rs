use std::fmt::Write as _;

use hypsym::cusps::{face_cycles, monodromy};
use hypsym::triangulation::{action_is_free, automorphism_group, orientability, orientation_preserving_subgroup};
use hypsym::volumes::manifold_volume;
use hypsym::{FiniteGroup, Triangulation};
use serde::Serialize;

use crate::error::CliError;

#[derive(Debug, Serialize)]
pub struct CuspLine {
    pub length: usize,
    pub return_map: String,
    pub p_exponent: u8,
    pub mapping_class: String,
    pub max_section_volume: String,
    pub line: String,
}

#[derive(Debug, Serialize)]
pub struct Analysis {
    pub simplices: usize,
    pub pairings: usize,
    pub free_facets: usize,
    pub orientable: bool,
    pub automorphisms: usize,
    /// Absent when there is no orientation to preserve.
    pub orientation_preserving: Option<usize>,
    pub free_action: bool,
    pub cusps: Vec<CuspLine>,
    pub volume: Option<String>,
    pub volume_approx: Option<f64>,
}

pub fn analyze(t: &Triangulation) -> Result<Analysis, CliError> {
    let auts = automorphism_group(t)?;
    let orientation = orientability(t).ok();
    let orientation_preserving = match &orientation {
        Some(o) => Some(orientation_preserving_subgroup(t, o, &auts)?.order()),
        None => None,
    };
    let cusps = match face_cycles(t) {
        Ok(cycles) => cycles
            .iter()
            .map(|c| {
                let d = monodromy(c);
                CuspLine {
                    length: d.length,
                    return_map: d.return_map.to_string(),
                    p_exponent: d.p_exponent,
                    mapping_class: d.mapping_class.to_string(),
                    max_section_volume: d.max_section_volume.to_string(),
                    line: d.to_string(),
                }
            })
            .collect(),
        Err(_) => Vec::new(),
    };
    let volume = manifold_volume(t).ok();
    Ok(Analysis {
        simplices: t.simplex_count(),
        pairings: t.pairings().len(),
        free_facets: t.free_facets().len(),
        orientable: orientation.is_some(),
        automorphisms: auts.order(),
        orientation_preserving,
        free_action: action_is_free(t, &auts),
        cusps,
        volume: volume.map(|v| v.to_string()),
        volume_approx: volume.map(|v| v.to_f64()),
    })
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl Analysis {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "simplices {}", self.simplices).unwrap();
        writeln!(out, "pairings {}", self.pairings).unwrap();
        if self.free_facets > 0 {
            writeln!(out, "{} free facets (boundary complex)", self.free_facets).unwrap();
        }
        writeln!(out, "orientable {}", yes(self.orientable)).unwrap();
        write!(out, "|Aut T| {}", self.automorphisms).unwrap();
        if let Some(plus) = self.orientation_preserving {
            write!(out, " (orientation-preserving {plus})").unwrap();
        }
        writeln!(out, ", free action {}", yes(self.free_action)).unwrap();
        if self.free_facets == 0 {
            let n = self.cusps.len();
            writeln!(out, "{n} {}", if n == 1 { "cusp" } else { "cusps" }).unwrap();
            for c in &self.cusps {
                writeln!(out, "  {}", c.line).unwrap();
            }
        }
        if let (Some(v), Some(x)) = (&self.volume, self.volume_approx) {
            writeln!(out, "volume {v} ≈ {x:.15}").unwrap();
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct GroupSummary {
    pub order: usize,
    pub rank: usize,
    pub abelian: bool,
    pub generator_orders: Vec<usize>,
    pub rank_bound: usize,
    pub cayley_automorphisms: usize,
}

impl GroupSummary {
    pub fn new(g: &FiniteGroup, cayley_automorphisms: usize) -> Result<Self, CliError> {
        Ok(GroupSummary {
            order: g.order(),
            rank: g.rank(),
            abelian: g.is_abelian(),
            generator_orders: g.generators().iter().map(|&s| g.element_order(s)).collect(),
            rank_bound: hypsym::groups::frucht_rank_bound(g.order())?,
            cayley_automorphisms,
        })
    }

    pub fn to_text(&self) -> String {
        let orders: Vec<String> = self.generator_orders.iter().map(|o| o.to_string()).collect();
        format!(
            "order {}\nrank {} (bound {})\nabelian {}\ngenerator orders {}\nCayley graph automorphisms {}\n",
            self.order,
            self.rank,
            self.rank_bound,
            yes(self.abelian),
            orders.join(" "),
            self.cayley_automorphisms
        )
    }
}

#[derive(Debug, Serialize)]
pub struct BuildReport {
    pub mode: String,
    pub group_order: usize,
    pub group_rank: usize,
    pub automorphisms_match_group: bool,
    pub output: Option<String>,
    pub analysis: Analysis,
}

impl BuildReport {
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "mode {}\ngroup order {}, rank {}\nAut T ≅ G {}\n",
            self.mode,
            self.group_order,
            self.group_rank,
            yes(self.automorphisms_match_group)
        );
        if let Some(path) = &self.output {
            writeln!(out, "wrote {path}").unwrap();
        }
        out.push_str(&self.analysis.to_text());
        out
    }
}
