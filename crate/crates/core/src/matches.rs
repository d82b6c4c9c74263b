use std::fmt;
use std::ops::Deref;

use crate::graph::VertexId;

/// A complete mapping `f: V1 -> V2`; `f[p]` is the image of pattern vertex `p`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Embedding(Vec<VertexId>);

impl Embedding {
    pub fn new(mapping: Vec<VertexId>) -> Self {
        Self(mapping)
    }

    pub fn into_inner(self) -> Vec<VertexId> {
        self.0
    }

    /// Re-expresses a mapping over relabeled pattern ids in the original ids,
    /// where `permutation[old] == new`.
    pub fn to_original(&self, permutation: &[VertexId]) -> Embedding {
        Embedding(permutation.iter().map(|&new| self.0[new as usize]).collect())
    }
}

impl Deref for Embedding {
    type Target = [VertexId];

    fn deref(&self) -> &[VertexId] {
        &self.0
    }
}

impl From<Vec<VertexId>> for Embedding {
    fn from(v: Vec<VertexId>) -> Self {
        Self(v)
    }
}

impl fmt::Display for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Canonical result collection: sorted lexicographically, no duplicates.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MatchSet {
    embeddings: Vec<Embedding>,
}

impl MatchSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_unsorted(mut embeddings: Vec<Embedding>) -> Self {
        embeddings.sort_unstable();
        embeddings.dedup();
        Self { embeddings }
    }

    pub fn len(&self) -> usize {
        self.embeddings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.embeddings.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Embedding> {
        self.embeddings.iter()
    }

    pub fn as_slice(&self) -> &[Embedding] {
        &self.embeddings
    }

    pub fn contains(&self, f: &Embedding) -> bool {
        self.embeddings.binary_search(f).is_ok()
    }

    pub fn is_subset_of(&self, other: &MatchSet) -> bool {
        self.embeddings.iter().all(|f| other.contains(f))
    }

    /// Keeps the `k` canonically-first embeddings.
    pub fn truncate(&mut self, k: usize) {
        self.embeddings.truncate(k);
    }

    /// See [`Embedding::to_original`].
    pub fn to_original(&self, permutation: &[VertexId]) -> MatchSet {
        MatchSet::from_unsorted(
            self.embeddings
                .iter()
                .map(|f| f.to_original(permutation))
                .collect(),
        )
    }
}

impl IntoIterator for MatchSet {
    type Item = Embedding;
    type IntoIter = std::vec::IntoIter<Embedding>;

    fn into_iter(self) -> Self::IntoIter {
        self.embeddings.into_iter()
    }
}

impl<'a> IntoIterator for &'a MatchSet {
    type Item = &'a Embedding;
    type IntoIter = std::slice::Iter<'a, Embedding>;

    fn into_iter(self) -> Self::IntoIter {
        self.embeddings.iter()
    }
}

impl FromIterator<Embedding> for MatchSet {
    fn from_iter<I: IntoIterator<Item = Embedding>>(iter: I) -> Self {
        Self::from_unsorted(iter.into_iter().collect())
    }
}
