//! The `fock-crystal/1` JSON graph document.
//!
//! Serialization goes through `serde_json::Value`, whose maps keep their
//! keys sorted, and is pretty-printed with a trailing newline. Equal graphs
//! give equal bytes.

use serde::{Deserialize, Serialize};

use crate::crystal::{Charge, FockContext};
use crate::error::{Error, Result};
use crate::graph::{CrystalGraph, Edge, VertexLabel};
use crate::hc::{HcVertex, SeriesParams};
use crate::multipartition::Multipartition;
use crate::partition::Partition;

pub const SCHEMA: &str = "fock-crystal/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeriesMeta {
    pub s: usize,
    pub e: usize,
    pub m: usize,
    pub iota: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    pub level: usize,
    pub e: usize,
    pub charge: Vec<i64>,
    pub realization: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub series: Option<SeriesMeta>,
    pub max_rank: usize,
    pub tool_version: String,
}

impl Metadata {
    pub fn for_context(ctx: &FockContext, max_rank: usize) -> Self {
        Self {
            level: ctx.level(),
            e: ctx.e(),
            charge: ctx.charge().values().to_vec(),
            realization: ctx.realization().name().to_string(),
            series: None,
            max_rank,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn for_series(params: &SeriesParams, max_rank: usize) -> Self {
        let ctx = FockContext::uglov(params.e(), params.charge()).expect("validated parameters");
        Self {
            series: Some(SeriesMeta {
                s: params.s(),
                e: params.e(),
                m: params.m(),
                iota: params.iota(),
            }),
            ..Self::for_context(&ctx, max_rank)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexRecord {
    pub id: usize,
    /// Canonical multipartition text.
    pub label: String,
    pub rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group_degree: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeRecord {
    pub source: usize,
    pub target: usize,
    pub color: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub schema: String,
    pub metadata: Metadata,
    pub vertices: Vec<VertexRecord>,
    pub edges: Vec<EdgeRecord>,
}

fn edge_records<V: VertexLabel>(g: &CrystalGraph<V>) -> Vec<EdgeRecord> {
    g.edges()
        .iter()
        .map(|e| EdgeRecord {
            source: e.source,
            target: e.target,
            color: e.color,
        })
        .collect()
}

impl GraphDocument {
    pub fn from_crystal(g: &CrystalGraph, metadata: Metadata) -> Self {
        let vertices = g
            .vertices()
            .iter()
            .enumerate()
            .map(|(id, m)| VertexRecord {
                id,
                label: m.canonical(),
                rank: m.rank(),
                partition: None,
                group_degree: None,
            })
            .collect();
        Self {
            schema: SCHEMA.to_string(),
            metadata,
            vertices,
            edges: edge_records(g),
        }
    }

    pub fn from_hc(g: &CrystalGraph<HcVertex>, metadata: Metadata) -> Self {
        let vertices = g
            .vertices()
            .iter()
            .enumerate()
            .map(|(id, v)| VertexRecord {
                id,
                label: v.bipartition.canonical(),
                rank: v.crystal_rank,
                partition: Some(v.label.canonical()),
                group_degree: Some(v.group_degree),
            })
            .collect();
        Self {
            schema: SCHEMA.to_string(),
            metadata,
            vertices,
            edges: edge_records(g),
        }
    }

    pub fn to_json(&self) -> Vec<u8> {
        let value = serde_json::to_value(self).expect("document is plain data");
        let mut out = serde_json::to_vec_pretty(&value).expect("value serializes");
        out.push(b'\n');
        out
    }

    pub fn from_json(bytes: &[u8]) -> Result<Self> {
        let doc: GraphDocument = serde_json::from_slice(bytes).map_err(|e| Error::Document {
            location: format!("line {} column {}", e.line(), e.column()),
            reason: e.to_string(),
        })?;
        doc.validate()?;
        Ok(doc)
    }

    /// Multipartition labels in id order.
    pub fn labels(&self) -> Result<Vec<Multipartition>> {
        self.vertices
            .iter()
            .enumerate()
            .map(|(i, v)| {
                v.label.parse::<Multipartition>().map_err(|e| Error::Document {
                    location: format!("vertices[{i}].label"),
                    reason: e.to_string(),
                })
            })
            .collect()
    }

    pub fn to_graph(&self) -> Result<CrystalGraph> {
        let labels = self.labels()?;
        let edges = self
            .edges
            .iter()
            .map(|e| (labels[e.source].clone(), labels[e.target].clone(), e.color))
            .collect();
        Ok(CrystalGraph::from_parts(labels, edges))
    }

    pub fn charge(&self) -> Result<Charge> {
        Charge::new(self.metadata.charge.clone())
    }

    fn validate(&self) -> Result<()> {
        let fail = |location: String, reason: String| Err(Error::Document { location, reason });
        if self.schema != SCHEMA {
            return fail("schema".into(), format!("expected {SCHEMA:?}, got {:?}", self.schema));
        }
        if self.metadata.charge.len() != self.metadata.level {
            return fail(
                "metadata.charge".into(),
                format!(
                    "length {} differs from level {}",
                    self.metadata.charge.len(),
                    self.metadata.level
                ),
            );
        }
        let labels = self.labels()?;
        let mut previous: Option<(usize, &str)> = None;
        for (i, (v, m)) in self.vertices.iter().zip(&labels).enumerate() {
            let at = |field: &str| format!("vertices[{i}].{field}");
            if v.id != i {
                return fail(at("id"), format!("expected dense id {i}, got {}", v.id));
            }
            if m.level() != self.metadata.level {
                return fail(
                    at("label"),
                    format!("level {} differs from {}", m.level(), self.metadata.level),
                );
            }
            if m.rank() != v.rank {
                return fail(
                    at("rank"),
                    format!("label has rank {}, record says {}", m.rank(), v.rank),
                );
            }
            if m.canonical() != v.label {
                return fail(at("label"), format!("{:?} is not in canonical form", v.label));
            }
            if let Some(p) = &v.partition {
                let parsed: Partition = p.parse().map_err(|e: Error| Error::Document {
                    location: at("partition"),
                    reason: e.to_string(),
                })?;
                if parsed.canonical() != *p {
                    return fail(at("partition"), format!("{p:?} is not in canonical form"));
                }
            }
            let key = (v.rank, v.label.as_str());
            if previous.is_some_and(|prev| prev >= key) {
                return fail(at("label"), "vertices are not sorted by (rank, label)".into());
            }
            previous = Some(key);
        }
        let n = self.vertices.len();
        let mut previous: Option<Edge> = None;
        for (i, e) in self.edges.iter().enumerate() {
            if e.source >= n || e.target >= n {
                return fail(format!("edges[{i}]"), format!("endpoint out of range 0..{n}"));
            }
            if e.color >= self.metadata.e {
                return fail(
                    format!("edges[{i}].color"),
                    format!("color {} ≥ e = {}", e.color, self.metadata.e),
                );
            }
            let edge = Edge {
                source: e.source,
                target: e.target,
                color: e.color,
            };
            if previous.is_some_and(|p| p >= edge) {
                return fail(format!("edges[{i}]"), "edges are not sorted by (source, color)".into());
            }
            previous = Some(edge);
        }
        Ok(())
    }
}
