//! Static graphs and their adjacency-matrix Hamiltonians.
//!
//! Graphs are undirected, unweighted and loop-free in storage; the walk
//! convention that an isolated vertex carries a unit self-loop is applied
//! only when the Hamiltonian is built, so it stays testable in one place.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Undirected graph over vertices `0..vertex_count` with canonically sorted
/// `(min, max)` edge pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::NoVertices);
        }
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= vertex_count {
                return Err(Error::EndpointOutOfRange { vertex: u, vertex_count });
            }
            if v >= vertex_count {
                return Err(Error::EndpointOutOfRange { vertex: v, vertex_count });
            }
            if u == v {
                return Err(Error::SelfLoopEdge(u));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        for w in normalized.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        Ok(Graph { vertex_count, edges: normalized })
    }

    /// Graph with no edges (every vertex isolated).
    pub fn empty(vertex_count: usize) -> Result<Self> {
        Graph::new(vertex_count, &[])
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Same edge set on a larger vertex set; the added vertices are isolated.
    pub fn embedded(&self, vertex_count: usize) -> Result<Self> {
        if vertex_count < self.vertex_count {
            return Err(Error::VertexCountMismatch {
                left: self.vertex_count,
                right: vertex_count,
            });
        }
        Ok(Graph { vertex_count, edges: self.edges.clone() })
    }

    /// Adjacency matrix with the isolated-vertex self-loop convention.
    pub fn hamiltonian(&self) -> HermitianMatrix {
        let n = self.vertex_count;
        let mut data = vec![0.0; n * n];
        for &(u, v) in &self.edges {
            data[u * n + v] = 1.0;
            data[v * n + u] = 1.0;
        }
        for v in 0..n {
            if self.degree(v) == 0 {
                data[v * n + v] = 1.0;
            }
        }
        HermitianMatrix { dim: n, data }
    }

    /// Disjoint union; edges of part `k` are shifted by the cumulative
    /// vertex offset of the parts before it.
    pub fn disjoint_union(parts: &[Graph]) -> Result<Graph> {
        if parts.is_empty() {
            return Err(Error::EmptyUnion);
        }
        let vertex_count = parts.iter().map(|g| g.vertex_count).sum();
        let mut edges = Vec::new();
        let mut offset = 0;
        for g in parts {
            edges.extend(g.edges.iter().map(|&(u, v)| (u + offset, v + offset)));
            offset += g.vertex_count;
        }
        Graph::new(vertex_count, &edges)
    }

    /// Connected components as sorted vertex lists, ascending by minimum.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(u, v) in &self.edges {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru] = rv;
            }
        }
        let mut groups: Vec<Vec<usize>> = vec![Vec::new(); n];
        for v in 0..n {
            let r = find(&mut parent, v);
            groups[r].push(v);
        }
        groups.retain(|g| !g.is_empty());
        groups.sort_by_key(|g| g[0]);
        groups
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&GraphRepr::from(self)).expect("graph serialization")
    }

    pub fn from_json(s: &str) -> std::result::Result<Self, serde_json::Error> {
        let repr: GraphRepr = serde_json::from_str(s)?;
        repr.try_into().map_err(|e: Error| {
            serde::de::Error::custom(format!("invalid graph: {e}"))
        })
    }
}

#[derive(Serialize, Deserialize)]
pub(crate) struct GraphRepr {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl From<&Graph> for GraphRepr {
    fn from(g: &Graph) -> Self {
        GraphRepr { vertices: g.vertex_count, edges: g.edges.clone() }
    }
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;
    fn try_from(r: GraphRepr) -> Result<Graph> {
        Graph::new(r.vertices, &r.edges)
    }
}

/// Real symmetric matrix; the Hamiltonians of this crate are 0/1-valued
/// adjacency matrices (with unit self-loops on isolated vertices).
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl HermitianMatrix {
    pub fn new(dim: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != dim * dim {
            return Err(Error::DimensionMismatch { left: dim * dim, right: data.len() });
        }
        for i in 0..dim {
            for j in (i + 1)..dim {
                if data[i * dim + j] != data[j * dim + i] {
                    return Err(Error::NotNormalized { norm: f64::NAN });
                }
            }
        }
        Ok(HermitianMatrix { dim, data })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn row_sum(&self, i: usize) -> f64 {
        self.data[i * self.dim..(i + 1) * self.dim].iter().sum()
    }

    /// A·B over the real entries.
    pub fn matmul(&self, other: &HermitianMatrix) -> Vec<f64> {
        let n = self.dim;
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        out
    }
}
