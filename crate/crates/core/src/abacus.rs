//! β-sets, abacus runners, cores and the 2-quotient.
//!
//! A partition with `b` beads has β-numbers `λ_i + b − i` (`i = 1..b`). On
//! an `e`-runner abacus the bead `β` sits on runner `β mod e` at position
//! `β div e`. Sliding every bead as far up as it goes yields the `e`-core;
//! reading each runner as a partition of its own yields the quotient.
//!
//! For `e = 2` the bead count is always taken even. The quotient components
//! are then `λ¹` = runner 1 (odd β) and `λ²` = runner 0 (even β), which is
//! the labeling of the principal-series figures: `(2) ↦ (1, ∅)`,
//! `(1²) ↦ (∅, 1)`, `(4.2) ↦ (2, 1)`.

use crate::error::{invalid, Result};
use crate::multipartition::Bipartition;
use crate::partition::Partition;

/// Strictly decreasing β-numbers of a partition for a fixed bead count.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BetaSet {
    entries: Vec<usize>,
}

impl BetaSet {
    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn bead_count(&self) -> usize {
        self.entries.len()
    }

    pub fn contains(&self, beta: usize) -> bool {
        self.entries.binary_search_by(|x| beta.cmp(x)).is_ok()
    }

    /// Builds a β-set from arbitrary distinct values.
    pub fn from_values(mut values: Vec<usize>) -> Result<Self> {
        values.sort_unstable_by(|a, b| b.cmp(a));
        if values.windows(2).any(|w| w[0] == w[1]) {
            return Err(invalid(format!("repeated β-number in {values:?}")));
        }
        Ok(Self { entries: values })
    }

    /// The partition `λ_i = β_i − (b − i)`.
    pub fn partition(&self) -> Partition {
        let b = self.entries.len();
        let parts = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, &beta)| beta - (b - 1 - i))
            .collect();
        Partition::new(parts).expect("strictly decreasing β-set yields a partition")
    }
}

/// β-set of `p` with `beads` beads.
pub fn beta_set(p: &Partition, beads: usize) -> Result<BetaSet> {
    if beads < p.len() {
        return Err(invalid(format!(
            "{} beads cannot hold the {} parts of {}",
            beads,
            p.len(),
            p.canonical()
        )));
    }
    let entries = (0..beads).map(|i| p.part(i) + (beads - 1 - i)).collect();
    Ok(BetaSet { entries })
}

/// Bead count `≥ len(p)` that is a multiple of `modulus`.
fn bead_count(p: &Partition, modulus: usize) -> usize {
    p.len().div_ceil(modulus).max(1) * modulus
}

/// Splits a β-set onto `e` runners; runner `r` lists the positions of its
/// beads in decreasing order.
fn runners(beta: &BetaSet, e: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); e];
    for &b in beta.entries() {
        out[b % e].push(b / e);
    }
    out
}

fn runner_partition(positions: &[usize]) -> Partition {
    let k = positions.len();
    let parts = positions
        .iter()
        .enumerate()
        .map(|(i, &pos)| pos - (k - 1 - i))
        .collect();
    Partition::new(parts).expect("runner positions are strictly decreasing")
}

/// The `e`-core of `p`.
pub fn core(p: &Partition, e: usize) -> Result<Partition> {
    if e < 2 {
        return Err(invalid(format!("e must be at least 2, got {e}")));
    }
    let beta = beta_set(p, bead_count(p, e))?;
    let slid = runners(&beta, e)
        .iter()
        .enumerate()
        .flat_map(|(r, beads)| (0..beads.len()).map(move |pos| pos * e + r))
        .collect();
    Ok(BetaSet::from_values(slid)?.partition())
}

/// True iff `p` has no rim `e`-hook: on the `e`-abacus no bead can move up.
pub fn is_e_core(p: &Partition, e: usize) -> Result<bool> {
    if e < 2 {
        return Err(invalid(format!("e must be at least 2, got {e}")));
    }
    let beta = beta_set(p, p.len())?;
    Ok(beta.entries().iter().all(|&b| b < e || beta.contains(b - e)))
}

/// The 2-core `Δ_t = (t, t−1, …, 1)` of a partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TriangularCore {
    t: usize,
    partition: Partition,
}

impl TriangularCore {
    pub fn new(t: usize) -> Self {
        Self {
            t,
            partition: Partition::staircase(t),
        }
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn rank(&self) -> usize {
        self.t * (self.t + 1) / 2
    }
}

pub fn two_core(p: &Partition) -> TriangularCore {
    let c = core(p, 2).expect("e = 2 is valid");
    let t = c.len();
    debug_assert_eq!(c, Partition::staircase(t), "2-cores are staircases");
    TriangularCore::new(t)
}

/// The untwisted 2-quotient `(λ¹, λ²)`.
pub fn two_quotient(p: &Partition) -> Bipartition {
    let beta = beta_set(p, bead_count(p, 2)).expect("bead count covers the parts");
    let r = runners(&beta, 2);
    Bipartition::new(runner_partition(&r[1]), runner_partition(&r[0]))
}

/// The 2-quotient, with its components swapped when the 2-core `Δ_t` has
/// odd `t`.
pub fn twisted_two_quotient(p: &Partition) -> Bipartition {
    let q = two_quotient(p);
    if two_core(p).t().is_multiple_of(2) {
        q
    } else {
        Bipartition::new(q.second, q.first)
    }
}
