//! Regression fixtures: the four small graphs for `e = 3`, charge `(-1,0)`
//! (principal series `s = 0`), up to rank 3.
//!
//! Each graph exists twice: as an uncolored edge list transcribed by hand
//! from the printed figure, and as a JSON document generated by this crate
//! and audited against the transcription.

use std::collections::BTreeSet;

use crate::crystal::{FockContext, Realization};
use crate::error::Result;
use crate::graph::{generate_component, CrystalGraph, VertexLabel};
use crate::hc::{build_hc_graph, HcVertex, SeriesParams};
use crate::io::{GraphDocument, Metadata};
use crate::multipartition::Multipartition;
use crate::partition::Partition;

pub const E: usize = 3;
pub const CHARGE: [i64; 2] = [-1, 0];
pub const MAX_RANK: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Figure {
    PrincipalSeriesPartitions,
    PrincipalSeriesBipartitions,
    UglovCrystal,
    KleshchevCrystal,
}

impl Figure {
    pub const ALL: [Figure; 4] = [
        Figure::PrincipalSeriesPartitions,
        Figure::PrincipalSeriesBipartitions,
        Figure::UglovCrystal,
        Figure::KleshchevCrystal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Figure::PrincipalSeriesPartitions => "principal series, partition labels",
            Figure::PrincipalSeriesBipartitions => "principal series, bipartition labels",
            Figure::UglovCrystal => "Uglov crystal",
            Figure::KleshchevCrystal => "Kleshchev crystal",
        }
    }

    pub fn transcription(self) -> &'static str {
        match self {
            Figure::PrincipalSeriesPartitions => include_str!("../fixtures/principal_series_partitions.txt"),
            Figure::PrincipalSeriesBipartitions => {
                include_str!("../fixtures/principal_series_bipartitions.txt")
            }
            Figure::UglovCrystal => include_str!("../fixtures/uglov_crystal.txt"),
            Figure::KleshchevCrystal => include_str!("../fixtures/kleshchev_crystal.txt"),
        }
    }

    fn partition_labels(self) -> bool {
        self == Figure::PrincipalSeriesPartitions
    }

    /// Uncolored edges of the transcription, as canonical label pairs.
    pub fn transcribed_edges(self) -> Result<BTreeSet<(String, String)>> {
        let canon = |s: &str| -> Result<String> {
            if self.partition_labels() {
                Ok(s.parse::<Partition>()?.canonical())
            } else {
                Ok(s.parse::<Multipartition>()?.canonical())
            }
        };
        let mut out = BTreeSet::new();
        for line in self.transcription().lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (s, t) = line
                .split_once("->")
                .ok_or_else(|| crate::error::parse_error(line, "expected `source -> target`"))?;
            out.insert((canon(s)?, canon(t)?));
        }
        Ok(out)
    }

    /// Uncolored edges computed from scratch.
    pub fn computed_edges(self) -> Result<BTreeSet<(String, String)>> {
        Ok(match self {
            Figure::PrincipalSeriesPartitions => hc_graph()?
                .labeled_edges()
                .map(|(s, t, _)| (s.label.canonical(), t.label.canonical()))
                .collect(),
            Figure::PrincipalSeriesBipartitions => uncolored(&hc_graph()?),
            Figure::UglovCrystal => uncolored(&crystal(Realization::Uglov)),
            Figure::KleshchevCrystal => uncolored(&crystal(Realization::Kleshchev)),
        })
    }
}

fn uncolored<V: VertexLabel>(g: &CrystalGraph<V>) -> BTreeSet<(String, String)> {
    g.labeled_edges()
        .map(|(s, t, _)| (s.canonical(), t.canonical()))
        .collect()
}

pub fn context(realization: Realization) -> FockContext {
    FockContext::new(E, crate::crystal::Charge::new(CHARGE.to_vec()).unwrap(), realization).unwrap()
}

pub fn crystal(realization: Realization) -> CrystalGraph {
    generate_component(&context(realization), MAX_RANK)
}

pub fn series() -> SeriesParams {
    SeriesParams::new(0, E).unwrap()
}

pub fn hc_graph() -> Result<CrystalGraph<HcVertex>> {
    build_hc_graph(&series(), MAX_RANK)
}

/// Committed JSON documents.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Golden {
    Uglov,
    Kleshchev,
    PrincipalSeries,
}

impl Golden {
    pub const ALL: [Golden; 3] = [Golden::Uglov, Golden::Kleshchev, Golden::PrincipalSeries];

    pub fn file_name(self) -> &'static str {
        match self {
            Golden::Uglov => "uglov_crystal.json",
            Golden::Kleshchev => "kleshchev_crystal.json",
            Golden::PrincipalSeries => "principal_series.json",
        }
    }

    pub fn committed(self) -> &'static [u8] {
        match self {
            Golden::Uglov => include_bytes!("../fixtures/uglov_crystal.json"),
            Golden::Kleshchev => include_bytes!("../fixtures/kleshchev_crystal.json"),
            Golden::PrincipalSeries => include_bytes!("../fixtures/principal_series.json"),
        }
    }

    pub fn document(self) -> Result<GraphDocument> {
        Ok(match self {
            Golden::Uglov | Golden::Kleshchev => {
                let r = if self == Golden::Uglov {
                    Realization::Uglov
                } else {
                    Realization::Kleshchev
                };
                GraphDocument::from_crystal(&crystal(r), Metadata::for_context(&context(r), MAX_RANK))
            }
            Golden::PrincipalSeries => GraphDocument::from_hc(&hc_graph()?, Metadata::for_series(&series(), MAX_RANK)),
        })
    }

    pub fn computed(self) -> Result<Vec<u8>> {
        Ok(self.document()?.to_json())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Compares freshly computed graphs with every fixture.
pub fn selftest() -> Vec<Check> {
    let mut checks = Vec::new();
    for fig in Figure::ALL {
        let outcome = fig
            .transcribed_edges()
            .and_then(|want| Ok((want, fig.computed_edges()?)));
        let (passed, detail) = match outcome {
            Ok((want, got)) if want == got => (true, format!("{} edges match", want.len())),
            Ok((want, got)) => (
                false,
                format!(
                    "missing {:?}, unexpected {:?}",
                    want.difference(&got).collect::<Vec<_>>(),
                    got.difference(&want).collect::<Vec<_>>()
                ),
            ),
            Err(e) => (false, e.to_string()),
        };
        checks.push(Check {
            name: format!("figure: {}", fig.name()),
            passed,
            detail,
        });
    }
    for golden in Golden::ALL {
        let (passed, detail) = match golden.computed() {
            Ok(bytes) if bytes == golden.committed() => (true, format!("{} bytes identical", bytes.len())),
            Ok(_) => (false, "bytes differ from the committed document".to_string()),
            Err(e) => (false, e.to_string()),
        };
        checks.push(Check {
            name: format!("golden: {}", golden.file_name()),
            passed,
            detail,
        });
    }
    checks
}
