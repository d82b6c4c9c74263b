//! Immutable directed property graph in double-index CSR form.
//!
//! Edges are stored sorted by `(src, dst)`; an edge id is the edge's position
//! in that order, so `src[e]`/`dst[e]` give O(1) endpoint access and an edge
//! lookup is a binary search over one out-list. A second index groups edge
//! ids by destination for in-neighbor queries.

use std::cmp::Ordering;
use std::fmt;

use crate::error::GraphError;

pub type VertexId = u32;
pub type EdgeId = u32;

/// Sorted, key-unique set of string attributes attached to a vertex or edge.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct AttributeSet {
    entries: Vec<(String, String)>,
}

impl AttributeSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts or replaces `key`.
    pub fn insert(&mut self, key: impl Into<String>, value: impl Into<String>) {
        let key = key.into();
        let value = value.into();
        match self.entries.binary_search_by(|(k, _)| k.as_str().cmp(&key)) {
            Ok(i) => self.entries[i].1 = value,
            Err(i) => self.entries.insert(i, (key, value)),
        }
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries
            .binary_search_by(|(k, _)| k.as_str().cmp(key))
            .ok()
            .map(|i| self.entries[i].1.as_str())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }

    /// True when every `(key, value)` of `self` is present in `other` with an
    /// equal value. An empty set is a wildcard and matches anything.
    pub fn is_subset_of(&self, other: &AttributeSet) -> bool {
        if self.entries.len() > other.entries.len() {
            return false;
        }
        let mut theirs = other.entries.iter();
        'outer: for (key, value) in &self.entries {
            for (k, v) in theirs.by_ref() {
                match k.cmp(key) {
                    Ordering::Less => continue,
                    Ordering::Equal if v == value => continue 'outer,
                    _ => return false,
                }
            }
            return false;
        }
        true
    }
}

impl<K: Into<String>, V: Into<String>> FromIterator<(K, V)> for AttributeSet {
    fn from_iter<I: IntoIterator<Item = (K, V)>>(iter: I) -> Self {
        let mut set = AttributeSet::new();
        for (k, v) in iter {
            set.insert(k, v);
        }
        set
    }
}

impl fmt::Display for AttributeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    In,
    Out,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Degrees {
    pub indeg: usize,
    pub outdeg: usize,
    pub totaldeg: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyGraph {
    vertex_count: usize,
    /// `out_offsets[v]..out_offsets[v + 1]` is the edge-id range leaving `v`.
    out_offsets: Vec<usize>,
    src: Vec<VertexId>,
    dst: Vec<VertexId>,
    in_offsets: Vec<usize>,
    /// Sources of incoming edges grouped by destination, ascending per group.
    in_src: Vec<VertexId>,
    in_edge: Vec<EdgeId>,
    vertex_attrs: Vec<AttributeSet>,
    edge_attrs: Vec<AttributeSet>,
}

impl PropertyGraph {
    /// Builds a graph from an edge list without attributes.
    pub fn from_edges(
        vertex_count: usize,
        edges: &[(VertexId, VertexId)],
    ) -> Result<Self, GraphError> {
        Self::build(vertex_count, edges.to_vec(), Vec::new(), Vec::new())
    }

    /// Builds a graph. `vertex_attrs` and `edge_attrs` are either empty (no
    /// attributes) or aligned with the vertices / the input edge order.
    pub fn build(
        vertex_count: usize,
        edges: Vec<(VertexId, VertexId)>,
        vertex_attrs: Vec<AttributeSet>,
        edge_attrs: Vec<AttributeSet>,
    ) -> Result<Self, GraphError> {
        if vertex_count > VertexId::MAX as usize {
            return Err(GraphError::TooManyVertices(vertex_count));
        }
        if !vertex_attrs.is_empty() && vertex_attrs.len() != vertex_count {
            return Err(GraphError::AttributeCountMismatch {
                what: "vertex attributes",
                expected: vertex_count,
                got: vertex_attrs.len(),
            });
        }
        if !edge_attrs.is_empty() && edge_attrs.len() != edges.len() {
            return Err(GraphError::AttributeCountMismatch {
                what: "edge attributes",
                expected: edges.len(),
                got: edge_attrs.len(),
            });
        }
        for &(u, v) in &edges {
            for w in [u, v] {
                if w as usize >= vertex_count {
                    return Err(GraphError::EndpointOutOfRange {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
        }

        let mut order: Vec<usize> = (0..edges.len()).collect();
        order.sort_unstable_by_key(|&i| edges[i]);
        for pair in order.windows(2) {
            if edges[pair[0]] == edges[pair[1]] {
                let (u, v) = edges[pair[0]];
                return Err(GraphError::DuplicateEdge(u, v));
            }
        }

        let m = edges.len();
        let mut src = Vec::with_capacity(m);
        let mut dst = Vec::with_capacity(m);
        let mut out_offsets = vec![0usize; vertex_count + 1];
        let mut in_offsets = vec![0usize; vertex_count + 1];
        for &i in &order {
            let (u, v) = edges[i];
            src.push(u);
            dst.push(v);
            out_offsets[u as usize + 1] += 1;
            in_offsets[v as usize + 1] += 1;
        }
        for v in 0..vertex_count {
            out_offsets[v + 1] += out_offsets[v];
            in_offsets[v + 1] += in_offsets[v];
        }

        // Edges are visited in (src, dst) order, so each in-bucket fills with
        // ascending sources.
        let mut cursor = in_offsets.clone();
        let mut in_src = vec![0; m];
        let mut in_edge = vec![0; m];
        for e in 0..m {
            let slot = &mut cursor[dst[e] as usize];
            in_src[*slot] = src[e];
            in_edge[*slot] = e as EdgeId;
            *slot += 1;
        }

        let edge_attrs = if edge_attrs.is_empty() {
            vec![AttributeSet::default(); m]
        } else {
            let mut edge_attrs: Vec<Option<AttributeSet>> =
                edge_attrs.into_iter().map(Some).collect();
            order
                .iter()
                .map(|&i| edge_attrs[i].take().unwrap_or_default())
                .collect()
        };
        let vertex_attrs = if vertex_attrs.is_empty() {
            vec![AttributeSet::default(); vertex_count]
        } else {
            vertex_attrs
        };

        Ok(Self {
            vertex_count,
            out_offsets,
            src,
            dst,
            in_offsets,
            in_src,
            in_edge,
            vertex_attrs,
            edge_attrs,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.src.len()
    }

    pub fn src(&self, e: EdgeId) -> VertexId {
        self.src[e as usize]
    }

    pub fn dst(&self, e: EdgeId) -> VertexId {
        self.dst[e as usize]
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        (self.src[e as usize], self.dst[e as usize])
    }

    /// Edges in id order as `(src, dst)` pairs.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = (VertexId, VertexId)> + '_ {
        self.src.iter().copied().zip(self.dst.iter().copied())
    }

    /// Id of edge `(u, v)`, found by binary search in `u`'s sorted out-list.
    pub fn edge_id(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        let start = self.out_offsets[u as usize];
        let end = self.out_offsets[u as usize + 1];
        self.dst[start..end]
            .binary_search(&v)
            .ok()
            .map(|i| (start + i) as EdgeId)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn out_neighbors(&self, v: VertexId) -> &[VertexId] {
        let v = v as usize;
        &self.dst[self.out_offsets[v]..self.out_offsets[v + 1]]
    }

    pub fn in_neighbors(&self, v: VertexId) -> &[VertexId] {
        let v = v as usize;
        &self.in_src[self.in_offsets[v]..self.in_offsets[v + 1]]
    }

    /// Ids of the edges entering `v`, ordered by source.
    pub fn in_edges(&self, v: VertexId) -> &[EdgeId] {
        let v = v as usize;
        &self.in_edge[self.in_offsets[v]..self.in_offsets[v + 1]]
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        let v = v as usize;
        self.out_offsets[v + 1] - self.out_offsets[v]
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        let v = v as usize;
        self.in_offsets[v + 1] - self.in_offsets[v]
    }

    /// A self-loop counts once as an in-edge and once as an out-edge.
    pub fn degrees(&self, v: VertexId) -> Degrees {
        let indeg = self.in_degree(v);
        let outdeg = self.out_degree(v);
        Degrees {
            indeg,
            outdeg,
            totaldeg: indeg + outdeg,
        }
    }

    /// Sorted, duplicate-free neighbor set.
    pub fn neighbors(&self, v: VertexId, direction: Direction) -> Vec<VertexId> {
        match direction {
            Direction::Out => self.out_neighbors(v).to_vec(),
            Direction::In => self.in_neighbors(v).to_vec(),
            Direction::Both => sorted_union(self.out_neighbors(v), self.in_neighbors(v)),
        }
    }

    pub fn has_self_loop(&self, v: VertexId) -> bool {
        self.has_edge(v, v)
    }

    /// Lowest vertex carrying a self-loop, if any.
    pub fn first_self_loop(&self) -> Option<VertexId> {
        self.edges().find(|(u, v)| u == v).map(|(u, _)| u)
    }

    pub fn vertex_attrs(&self, v: VertexId) -> &AttributeSet {
        &self.vertex_attrs[v as usize]
    }

    pub fn edge_attrs(&self, e: EdgeId) -> &AttributeSet {
        &self.edge_attrs[e as usize]
    }

    pub fn has_attributes(&self) -> bool {
        self.vertex_attrs.iter().any(|a| !a.is_empty())
            || self.edge_attrs.iter().any(|a| !a.is_empty())
    }

    pub(crate) fn all_vertex_attrs(&self) -> &[AttributeSet] {
        &self.vertex_attrs
    }

    pub(crate) fn all_edge_attrs(&self) -> &[AttributeSet] {
        &self.edge_attrs
    }
}

/// Subset-equality of vertex attributes: `pattern_v` matches `target_v` when
/// each of its attributes appears with the same value on `target_v`.
pub fn check_vertex_attrs(
    pattern: &PropertyGraph,
    pattern_v: VertexId,
    target: &PropertyGraph,
    target_v: VertexId,
) -> bool {
    pattern
        .vertex_attrs(pattern_v)
        .is_subset_of(target.vertex_attrs(target_v))
}

/// Same rule as [`check_vertex_attrs`], over edge attributes.
pub fn check_edge_attrs(
    pattern: &PropertyGraph,
    pattern_e: EdgeId,
    target: &PropertyGraph,
    target_e: EdgeId,
) -> bool {
    pattern
        .edge_attrs(pattern_e)
        .is_subset_of(target.edge_attrs(target_e))
}

pub(crate) fn sorted_union(a: &[VertexId], b: &[VertexId]) -> Vec<VertexId> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// `|a ∩ b|` for sorted, duplicate-free slices.
#[cfg(test)]
fn intersection_size(a: &[VertexId], b: &[VertexId]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// Ascending, duplicate-free merge of two sorted slices.
struct Union<'a> {
    a: &'a [VertexId],
    b: &'a [VertexId],
}

impl Iterator for Union<'_> {
    type Item = VertexId;

    fn next(&mut self) -> Option<VertexId> {
        let x = match (self.a.first(), self.b.first()) {
            (Some(&x), Some(&y)) if x < y => x,
            (Some(&x), Some(&y)) if x > y => y,
            (Some(&x), _) => x,
            (None, Some(&y)) => y,
            (None, None) => return None,
        };
        if self.a.first() == Some(&x) {
            self.a = &self.a[1..];
        }
        if self.b.first() == Some(&x) {
            self.b = &self.b[1..];
        }
        Some(x)
    }
}

/// `min(|N(x) ∩ N(y)|, cap)` over undirected neighborhoods, without
/// allocating.
pub(crate) fn common_neighbor_count(g: &PropertyGraph, x: VertexId, y: VertexId, cap: usize) -> usize {
    let mut a = Union {
        a: g.out_neighbors(x),
        b: g.in_neighbors(x),
    }
    .peekable();
    let mut b = Union {
        a: g.out_neighbors(y),
        b: g.in_neighbors(y),
    }
    .peekable();
    let mut n = 0;
    while n < cap {
        let (Some(&i), Some(&j)) = (a.peek(), b.peek()) else {
            break;
        };
        match i.cmp(&j) {
            Ordering::Less => {
                a.next();
            }
            Ordering::Greater => {
                b.next();
            }
            Ordering::Equal => {
                n += 1;
                a.next();
                b.next();
            }
        }
    }
    n
}
