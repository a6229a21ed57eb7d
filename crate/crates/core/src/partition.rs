use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A partition of `0..n` into nonempty, pairwise disjoint parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<VertexSet>,
}

impl Partition {
    pub fn new(n: usize, parts: Vec<VertexSet>) -> Result<Self> {
        let all = VertexSet::full(n);
        let mut seen = VertexSet::EMPTY;
        for &part in &parts {
            if part.is_empty() {
                return Err(Error::InvalidPartition("empty part".into()));
            }
            if !part.is_subset(all) {
                return Err(Error::InvalidPartition(format!(
                    "part {{{}}} has a vertex outside 1..{n}",
                    part.to_labels()
                )));
            }
            if !part.is_disjoint(seen) {
                return Err(Error::InvalidPartition(format!(
                    "part {{{}}} overlaps an earlier part",
                    part.to_labels()
                )));
            }
            seen = seen | part;
        }
        if seen != all {
            return Err(Error::InvalidPartition(format!(
                "vertices {{{}}} are not covered",
                (all - seen).to_labels()
            )));
        }
        Ok(Partition { parts })
    }

    /// Consecutive blocks `{0..s0}, {s0..s0+s1}, ...`.
    pub fn from_sizes(sizes: &[usize]) -> Result<Self> {
        let mut parts = Vec::with_capacity(sizes.len());
        let mut start = 0;
        for &size in sizes {
            if start + size > 64 {
                return Err(Error::VertexCount(start + size));
            }
            parts.push(VertexSet::from_bits(VertexSet::full(start + size).bits() & !VertexSet::full(start).bits()));
            start += size;
        }
        Partition::new(start, parts)
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `"1,5,6;2,3,4"`.
    pub fn to_labels(&self) -> String {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_labels()).collect();
        parts.join(";")
    }

    /// Parses the `;`-separated form produced by [`Partition::to_labels`].
    pub fn from_labels(n: usize, text: &str) -> Result<Self> {
        let parts = text
            .split(';')
            .map(|chunk| {
                VertexSet::from_labels(chunk)
                    .ok_or_else(|| Error::InvalidPartition(format!("cannot parse part `{}`", chunk.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(n, parts)
    }
}

/// Pairwise disjoint maximal cliques `C_1, ..., C_s` whose union is `V(G)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CliqueCover {
    cliques: Vec<VertexSet>,
}

impl CliqueCover {
    /// Validates that `cliques` is a partition of `V(g)` into maximal cliques of `g`.
    pub fn new(g: &Graph, cliques: Vec<VertexSet>) -> Result<Self> {
        let partition = Partition::new(g.n(), cliques).map_err(|e| match e {
            Error::InvalidPartition(msg) => Error::InvalidCover(msg),
            other => other,
        })?;
        if let Some(bad) = partition.parts().iter().find(|&&c| !g.is_maximal_clique(c)) {
            return Err(Error::InvalidCover(format!("{{{}}} is not a maximal clique", bad.to_labels())));
        }
        Ok(CliqueCover { cliques: partition.parts })
    }

    /// Re-checks the cover against `g` (covers are not bound to a graph).
    pub fn validate(&self, g: &Graph) -> Result<()> {
        CliqueCover::new(g, self.cliques.clone()).map(|_| ())
    }

    pub(crate) fn from_parts_unchecked(cliques: Vec<VertexSet>) -> Self {
        CliqueCover { cliques }
    }

    pub fn cliques(&self) -> &[VertexSet] {
        &self.cliques
    }

    /// Number of parts `s`.
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn to_partition(&self) -> Partition {
        Partition { parts: self.cliques.clone() }
    }

    pub fn to_labels(&self) -> String {
        self.to_partition().to_labels()
    }

    pub fn from_labels(g: &Graph, text: &str) -> Result<Self> {
        let p = Partition::from_labels(g.n(), text).map_err(|e| match e {
            Error::InvalidPartition(msg) => Error::InvalidCover(msg),
            other => other,
        })?;
        CliqueCover::new(g, p.parts)
    }
}
