//! Non-recursive description of the Uglov vertices for charges with
//! `0 ≤ s_1 ≤ … ≤ s_d ≤ e − 1` (FLOTW multipartitions).

use std::collections::BTreeSet;

use crate::crystal::{FockContext, Node};
use crate::error::{invalid, Result};
use crate::multipartition::Multipartition;

/// True iff `m` satisfies
///
/// 1. `λ^c_i ≥ λ^{c+1}_{i + s_{c+1} − s_c}` for `1 ≤ c < d`, and
///    `λ^d_i ≥ λ^1_{i + e + s_1 − s_d}`, for all `i ≥ 1`;
/// 2. for every `k > 0`, the residues of the nodes `(i, k, c)` ending a row
///    of length `k` do not cover all of `Z/eZ`.
///
/// The realization of `ctx` is ignored; the charge must be FLOTW-ordered.
pub fn is_flotw(m: &Multipartition, ctx: &FockContext) -> Result<bool> {
    let s = ctx.charge().values();
    let e = ctx.e() as i64;
    let ordered = s.windows(2).all(|w| w[0] <= w[1]);
    if !ordered || s[0] < 0 || s[s.len() - 1] > e - 1 {
        return Err(invalid(format!(
            "charge {} is not in 0 ≤ s_1 ≤ … ≤ s_d ≤ e − 1 for e = {e}",
            ctx.charge()
        )));
    }
    if m.level() != s.len() {
        return Err(invalid(format!(
            "{} has level {}, charge has level {}",
            m.canonical(),
            m.level(),
            s.len()
        )));
    }
    let d = s.len();
    // row index i is 1-based; shifts are non-negative so rows stay ≥ 1
    let dominates = |upper: usize, lower: usize, shift: i64| {
        let (top, bottom) = (m.component(upper), m.component(lower));
        (1..=top.len().max(bottom.len())).all(|i| {
            let j = i as i64 + shift;
            top.part(i - 1) >= bottom.part(j as usize - 1)
        })
    };
    for c in 1..d {
        if !dominates(c, c + 1, s[c] - s[c - 1]) {
            return Ok(false);
        }
    }
    if !dominates(d, 1, e + s[0] - s[d - 1]) {
        return Ok(false);
    }

    let mut by_length: std::collections::BTreeMap<usize, BTreeSet<usize>> = Default::default();
    for (idx, lambda) in m.components().iter().enumerate() {
        for (row, &k) in lambda.parts().iter().enumerate() {
            let node = Node::new(row + 1, k, idx + 1);
            by_length.entry(k).or_default().insert(ctx.residue(node));
        }
    }
    Ok(by_length.values().all(|res| res.len() < ctx.e()))
}
