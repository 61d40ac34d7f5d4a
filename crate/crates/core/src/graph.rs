//! Ranked, colored graphs and the truncated crystal component.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::hash::Hash;

use crate::crystal::FockContext;
use crate::multipartition::Multipartition;

/// What a graph needs to know about its vertex labels.
pub trait VertexLabel: Clone + Eq + Hash {
    fn rank(&self) -> usize;
    /// Text that identifies the vertex; fixes the vertex order.
    fn canonical(&self) -> String;
    fn display_text(&self) -> String {
        self.canonical()
    }
}

impl VertexLabel for Multipartition {
    fn rank(&self) -> usize {
        Multipartition::rank(self)
    }

    fn canonical(&self) -> String {
        Multipartition::canonical(self)
    }

    fn display_text(&self) -> String {
        Multipartition::display_text(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub source: usize,
    pub color: usize,
    pub target: usize,
}

/// Vertices sorted by `(rank, canonical text)`, ids are positions in that
/// order; edges sorted by `(source, color)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrystalGraph<V = Multipartition> {
    vertices: Vec<V>,
    edges: Vec<Edge>,
}

impl<V: VertexLabel> CrystalGraph<V> {
    /// Normalizes vertex ids and edge order. Edges are given as label pairs.
    pub fn from_parts(vertices: Vec<V>, edges: Vec<(V, V, usize)>) -> Self {
        let mut keyed: Vec<(usize, String, V)> = vertices.into_iter().map(|v| (v.rank(), v.canonical(), v)).collect();
        keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        keyed.dedup_by(|a, b| a.1 == b.1);
        let vertices: Vec<V> = keyed.into_iter().map(|(_, _, v)| v).collect();
        let index: HashMap<&V, usize> = vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let mut edges: Vec<Edge> = edges
            .iter()
            .map(|(s, t, color)| Edge {
                source: index[s],
                color: *color,
                target: index[t],
            })
            .collect();
        edges.sort();
        edges.dedup();
        Self { vertices, edges }
    }

    pub fn vertices(&self) -> &[V] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex(&self, id: usize) -> &V {
        &self.vertices[id]
    }

    pub fn id_of(&self, v: &V) -> Option<usize> {
        self.vertices.iter().position(|w| w == v)
    }

    pub fn max_rank(&self) -> usize {
        self.vertices.iter().map(V::rank).max().unwrap_or(0)
    }

    /// Number of vertices of each rank `0..=max_rank`.
    pub fn rank_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.max_rank() + 1];
        for v in &self.vertices {
            counts[v.rank()] += 1;
        }
        counts
    }

    /// `(source label, target label, color)` for every edge.
    pub fn labeled_edges(&self) -> impl Iterator<Item = (&V, &V, usize)> + '_ {
        self.edges
            .iter()
            .map(|e| (&self.vertices[e.source], &self.vertices[e.target], e.color))
    }

    /// Replaces every label, keeping the edges.
    pub fn relabel<W: VertexLabel>(&self, mut f: impl FnMut(&V) -> W) -> CrystalGraph<W> {
        self.try_relabel(|v| Ok::<_, std::convert::Infallible>(f(v)))
            .unwrap_or_else(|never| match never {})
    }

    pub fn try_relabel<W: VertexLabel, E>(
        &self,
        f: impl FnMut(&V) -> std::result::Result<W, E>,
    ) -> std::result::Result<CrystalGraph<W>, E> {
        let vertices: Vec<W> = self.vertices.iter().map(f).collect::<std::result::Result<_, E>>()?;
        let edges = self
            .edges
            .iter()
            .map(|e| (vertices[e.source].clone(), vertices[e.target].clone(), e.color))
            .collect();
        Ok(CrystalGraph::from_parts(vertices, edges))
    }

    /// Children of vertex `id` as `(color, target)`.
    pub fn out_edges(&self, id: usize) -> impl Iterator<Item = &Edge> + '_ {
        self.edges.iter().filter(move |e| e.source == id)
    }

    /// Checks rank grading and the at-most-one-arrow-per-color rule.
    pub fn check_crystal_shape(&self) -> std::result::Result<(), String> {
        let mut out_seen = BTreeSet::new();
        let mut in_seen = BTreeSet::new();
        for e in &self.edges {
            let (s, t) = (&self.vertices[e.source], &self.vertices[e.target]);
            if t.rank() != s.rank() + 1 {
                return Err(format!(
                    "edge {} -> {} does not raise the rank by one",
                    s.canonical(),
                    t.canonical()
                ));
            }
            if !out_seen.insert((e.source, e.color)) {
                return Err(format!("{} has two outgoing {}-arrows", s.canonical(), e.color));
            }
            if !in_seen.insert((e.target, e.color)) {
                return Err(format!("{} has two incoming {}-arrows", t.canonical(), e.color));
            }
        }
        Ok(())
    }
}

/// Closure of the empty multipartition under all `f̃_i`, truncated at
/// `max_rank`.
pub fn generate_component(ctx: &FockContext, max_rank: usize) -> CrystalGraph {
    let mut vertices = vec![Multipartition::empty(ctx.level())];
    let mut edges = Vec::new();
    let mut frontier = vertices.clone();
    for _ in 0..max_rank {
        let mut next = BTreeSet::new();
        for m in &frontier {
            for i in 0..ctx.e() {
                if let Some(child) = ctx.f_tilde(m, i) {
                    edges.push((m.clone(), child.clone(), i));
                    next.insert(child);
                }
            }
        }
        frontier = next.into_iter().collect();
        vertices.extend(frontier.iter().cloned());
    }
    CrystalGraph::from_parts(vertices, edges)
}

/// Symmetric difference of two graphs, compared by canonical labels.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GraphDiff {
    /// Canonical labels present only on the left, keyed by rank.
    pub vertices_only_left: BTreeMap<usize, Vec<String>>,
    pub vertices_only_right: BTreeMap<usize, Vec<String>>,
    /// `(source, target, color)`; colors are `None` when ignored.
    pub edges_only_left: Vec<(String, String, Option<usize>)>,
    pub edges_only_right: Vec<(String, String, Option<usize>)>,
    /// `(rank, left count, right count)` for every rank of either graph.
    pub rank_counts: Vec<(usize, usize, usize)>,
}

impl GraphDiff {
    pub fn is_empty(&self) -> bool {
        self.vertices_only_left.is_empty()
            && self.vertices_only_right.is_empty()
            && self.edges_only_left.is_empty()
            && self.edges_only_right.is_empty()
    }

    fn changed(
        only_vertices: &BTreeMap<usize, Vec<String>>,
        only_edges: &[(String, String, Option<usize>)],
    ) -> BTreeSet<String> {
        only_vertices
            .values()
            .flatten()
            .cloned()
            .chain(only_edges.iter().map(|(_, t, _)| t.clone()))
            .collect()
    }

    /// Left vertices that are missing on the right or whose incoming arrows
    /// differ: the vertices a side-by-side drawing would set in bold.
    pub fn changed_left(&self) -> BTreeSet<String> {
        Self::changed(&self.vertices_only_left, &self.edges_only_left)
    }

    pub fn changed_right(&self) -> BTreeSet<String> {
        Self::changed(&self.vertices_only_right, &self.edges_only_right)
    }
}

pub fn diff_graphs<V: VertexLabel>(left: &CrystalGraph<V>, right: &CrystalGraph<V>, ignore_colors: bool) -> GraphDiff {
    fn vertex_set<V: VertexLabel>(g: &CrystalGraph<V>) -> BTreeSet<(usize, String)> {
        g.vertices().iter().map(|v| (v.rank(), v.canonical())).collect()
    }
    fn edge_set<V: VertexLabel>(g: &CrystalGraph<V>, ignore_colors: bool) -> BTreeSet<(String, String, Option<usize>)> {
        g.labeled_edges()
            .map(|(s, t, c)| (s.canonical(), t.canonical(), (!ignore_colors).then_some(c)))
            .collect()
    }
    fn group(set: BTreeSet<&(usize, String)>) -> BTreeMap<usize, Vec<String>> {
        let mut out: BTreeMap<usize, Vec<String>> = BTreeMap::new();
        for (rank, label) in set {
            out.entry(*rank).or_default().push(label.clone());
        }
        out
    }

    let (lv, rv) = (vertex_set(left), vertex_set(right));
    let (le, re) = (edge_set(left, ignore_colors), edge_set(right, ignore_colors));
    let (lc, rc) = (left.rank_counts(), right.rank_counts());
    let ranks = lc.len().max(rc.len());
    GraphDiff {
        vertices_only_left: group(lv.difference(&rv).collect()),
        vertices_only_right: group(rv.difference(&lv).collect()),
        edges_only_left: le.difference(&re).cloned().collect(),
        edges_only_right: re.difference(&le).cloned().collect(),
        rank_counts: (0..ranks)
            .map(|r| (r, lc.get(r).copied().unwrap_or(0), rc.get(r).copied().unwrap_or(0)))
            .collect(),
    }
}
