//! Predicted Harish-Chandra branching graphs for `GU_r(q)`.
//!
//! For an odd `e > 1` and `0 ≤ s < (e − 1)/2`, the series above the
//! cuspidal module labeled by `Δ_s` is modeled by the Uglov component of
//! charge `(s + (1 − e)/2, 0)`. A bipartition vertex `μ̄` stands for the
//! unipotent module labeled by `Φ_s(μ̄)`, a partition of
//! `r = 2(m + n) + ι`, where `2m + ι = s(s+1)/2` and `n` is the rank.

use std::fmt;

use crate::abacus::is_e_core;
use crate::crystal::{Charge, FockContext};
use crate::error::{invalid, Result};
use crate::graph::{generate_component, CrystalGraph, VertexLabel};
use crate::multipartition::Bipartition;
use crate::partition::Partition;
use crate::symbol::phi_t;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SeriesParams {
    s: usize,
    e: usize,
}

impl SeriesParams {
    pub fn new(s: usize, e: usize) -> Result<Self> {
        if e < 2 || e.is_multiple_of(2) {
            return Err(invalid(format!("e must be odd and larger than 1, got {e}")));
        }
        if 2 * s + 1 >= e {
            return Err(invalid(format!("need 0 ≤ s < (e − 1)/2, got s = {s}, e = {e}")));
        }
        Ok(Self { s, e })
    }

    /// Validates an explicitly requested `ι` against `2m + ι = s(s+1)/2`.
    pub fn with_iota(s: usize, e: usize, iota: usize) -> Result<Self> {
        let params = Self::new(s, e)?;
        if iota != params.iota() {
            return Err(invalid(format!(
                "ι = {iota} is incompatible with s = {s}: 2m + ι must equal s(s+1)/2 = {}",
                params.core_size()
            )));
        }
        Ok(params)
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn e(&self) -> usize {
        self.e
    }

    /// `|Δ_s| = s(s+1)/2`.
    pub fn core_size(&self) -> usize {
        self.s * (self.s + 1) / 2
    }

    pub fn m(&self) -> usize {
        self.core_size() / 2
    }

    pub fn iota(&self) -> usize {
        self.core_size() % 2
    }

    pub fn charge(&self) -> Charge {
        charge_from_series(self.s, self.e).expect("validated parameters")
    }

    /// Degree `r` of `GU_r(q)` at crystal rank `n`.
    pub fn group_degree(&self, n: usize) -> usize {
        2 * (self.m() + n) + self.iota()
    }
}

/// `(s + (1 − e)/2, 0)`.
pub fn charge_from_series(s: usize, e: usize) -> Result<Charge> {
    if e < 2 || e.is_multiple_of(2) {
        return Err(invalid(format!("e must be odd and larger than 1, got {e}")));
    }
    Charge::new(vec![s as i64 + (1 - e as i64) / 2, 0])
}

/// Exponents of the type-`B` Hecke parameters `q^a`, `Q = q^b`, and the
/// matching Ariki-Koike parameters `u = q²`, `v₁ = −q^{2s+1}`, `v₂ = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HeckeParameters {
    pub q_exponent: usize,
    pub big_q_exponent: usize,
}

impl HeckeParameters {
    pub fn ariki_koike(&self) -> String {
        format!("u = q^{}, v1 = -q^{}, v2 = 1", self.q_exponent, self.big_q_exponent)
    }
}

impl fmt::Display for HeckeParameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q^{}, Q = q^{}", self.q_exponent, self.big_q_exponent)
    }
}

pub fn hecke_parameters(s: usize) -> HeckeParameters {
    HeckeParameters {
        q_exponent: 2,
        big_q_exponent: 2 * s + 1,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HcVertex {
    pub label: Partition,
    pub bipartition: Bipartition,
    pub crystal_rank: usize,
    pub group_degree: usize,
}

impl VertexLabel for HcVertex {
    fn rank(&self) -> usize {
        self.crystal_rank
    }

    fn canonical(&self) -> String {
        self.bipartition.canonical()
    }

    fn display_text(&self) -> String {
        self.label.display_text()
    }
}

pub fn build_hc_graph(params: &SeriesParams, max_rank: usize) -> Result<CrystalGraph<HcVertex>> {
    debug_assert!(is_e_core(&Partition::staircase(params.s()), params.e()).unwrap_or(false));
    let ctx = FockContext::uglov(params.e(), params.charge())?;
    generate_component(&ctx, max_rank).try_relabel(|m| {
        let bipartition = Bipartition::try_from(m)?;
        let n = m.rank();
        Ok(HcVertex {
            label: phi_t(&bipartition, params.s())?,
            bipartition,
            crystal_rank: n,
            group_degree: params.group_degree(n),
        })
    })
}
