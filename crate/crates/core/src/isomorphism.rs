//! The crystal isomorphism from Kleshchev's to Uglov's realization.
//!
//! Both realizations carry the same abstract crystal, so a vertex is
//! determined by any color word reaching it from the empty multipartition.
//! `φ` reads such a word in Kleshchev's realization and replays it in
//! Uglov's.

use std::collections::HashMap;

use crate::crystal::{Charge, FockContext, Realization};
use crate::error::{Error, Result};
use crate::graph::{generate_component, CrystalGraph};
use crate::multipartition::Multipartition;

pub fn crystal_isomorphism_phi(m: &Multipartition, s: &Charge, e: usize) -> Result<Multipartition> {
    let kleshchev = FockContext::new(e, s.clone(), Realization::Kleshchev)?;
    let uglov = kleshchev.with_realization(Realization::Uglov);
    if m.level() != s.level() {
        return Err(Error::NotAVertex(m.canonical()));
    }
    let word = kleshchev
        .path_from_empty(m)
        .ok_or_else(|| Error::NotAVertex(m.canonical()))?;
    uglov.apply_word(&word).ok_or_else(|| {
        Error::ConstructionInconsistency(format!(
            "color word {word:?} of {} vanishes in Uglov's realization",
            m.canonical()
        ))
    })
}

/// `φ` on every vertex of the Kleshchev component up to `max_rank`,
/// computed along the graph instead of one path per vertex.
pub fn phi_table(s: &Charge, e: usize, max_rank: usize) -> Result<HashMap<Multipartition, Multipartition>> {
    let kleshchev = FockContext::new(e, s.clone(), Realization::Kleshchev)?;
    let uglov = kleshchev.with_realization(Realization::Uglov);
    let g: CrystalGraph = generate_component(&kleshchev, max_rank);
    let mut table = HashMap::with_capacity(g.vertices().len());
    table.insert(Multipartition::empty(s.level()), Multipartition::empty(s.level()));
    // edges are sorted by source id, and ids increase with rank
    for (src, dst, color) in g.labeled_edges() {
        if table.contains_key(dst) {
            continue;
        }
        let image = uglov.f_tilde(&table[src], color).ok_or_else(|| {
            Error::ConstructionInconsistency(format!(
                "f̃_{color} vanishes on φ({}) in Uglov's realization",
                src.canonical()
            ))
        })?;
        table.insert(dst.clone(), image);
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        let s: Charge = "-1,0".parse().unwrap();
        assert_eq!(crystal_isomorphism_phi(&mp("1^2|1"), &s, 3).unwrap(), mp("1|2"));
        assert_eq!(crystal_isomorphism_phi(&mp("1|2"), &s, 3).unwrap(), mp("-|3"));
        assert_eq!(crystal_isomorphism_phi(&mp("-|-"), &s, 3).unwrap(), mp("-|-"));
        assert_eq!(crystal_isomorphism_phi(&mp("1|1^2"), &s, 3).unwrap(), mp("1|1^2"));
    }

    #[test]
    fn rejects_non_vertices() {
        let s: Charge = "-1,0".parse().unwrap();
        // wrong level
        let err = crystal_isomorphism_phi(&mp("1|-|-"), &s, 3).unwrap_err();
        assert!(matches!(err, Error::NotAVertex(_)));
        let k = FockContext::kleshchev(3, s.clone()).unwrap();
        let outsider = (1..=4)
            .flat_map(|n| crate::multipartition::multipartitions_of(n, 2))
            .find(|m| !k.contains(m))
            .unwrap();
        assert!(matches!(
            crystal_isomorphism_phi(&outsider, &s, 3),
            Err(Error::NotAVertex(_))
        ));
    }

    #[test]
    fn table_matches_pointwise() {
        let s: Charge = "0,2".parse().unwrap();
        let table = phi_table(&s, 3, 5).unwrap();
        for (k, u) in &table {
            assert_eq!(&crystal_isomorphism_phi(k, &s, 3).unwrap(), u);
        }
    }
}
