//! Undirected simple graphs as dense adjacency structures.

use std::fmt;

use num_bigint::BigInt;

use crate::algebra::IntMatrix;

use super::SpectraError;

/// Simple undirected graph on vertices 0..n−1.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<bool>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![vec![false; n]; n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, SpectraError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), SpectraError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(SpectraError::SelfLoop);
        }
        if self.adj[u][v] {
            return Err(SpectraError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u][v] = true;
        self.adj[v][u] = true;
        Ok(())
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), SpectraError> {
        if v < self.n {
            Ok(())
        } else {
            Err(SpectraError::VertexOutOfRange(v, self.n))
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u][v]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adj[u][v] {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&b| b).count()
    }

    pub fn adjacency_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.n, self.n);
        for u in 0..self.n {
            for v in 0..self.n {
                if self.adj[u][v] {
                    m[(u, v)] = BigInt::from(1);
                }
            }
        }
        m
    }

    pub fn delete_vertices(&self, dropped: &[usize]) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|v| !dropped.contains(v)).collect();
        let mut g = Graph::empty(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate() {
                if i < j && self.adj[u][v] {
                    g.adj[i][j] = true;
                    g.adj[j][i] = true;
                }
            }
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for v in 0..self.n {
                if self.adj[u][v] && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|b| b)
    }

    /// BFS two-coloring.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![-1i8; self.n];
        for start in 0..self.n {
            if color[start] != -1 {
                continue;
            }
            color[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for v in 0..self.n {
                    if !self.adj[u][v] {
                        continue;
                    }
                    if color[v] == -1 {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Deterministic hash of the adjacency structure (FNV-1a over the edge
    /// bits), used to tag emitted point clouds.
    pub fn structure_hash(&self) -> String {
        let mut h: u64 = 0xcbf29ce484222325;
        let mut mix = |byte: u8| {
            h ^= byte as u64;
            h = h.wrapping_mul(0x100000001b3);
        };
        mix(self.n as u8);
        for u in 0..self.n {
            for v in u + 1..self.n {
                mix(u8::from(self.adj[u][v]));
            }
        }
        format!("{:016x}", h)
    }

    // Named constructions used across tests and the corpus.

    pub fn path(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn complete_bipartite(m: usize, n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..m {
            for v in 0..n {
                edges.push((u, m + v));
            }
        }
        Graph::from_edges(m + n, &edges).unwrap()
    }

    pub fn star(leaves: usize) -> Graph {
        Graph::complete_bipartite(1, leaves)
    }

    /// K₄ with the edge {0, 3} removed; vertices 1, 2 have degree 3.
    pub fn k4_minus_edge() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    pub fn petersen() -> Graph {
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5)); // outer cycle
            edges.push((5 + i, 5 + (i + 2) % 5)); // inner pentagram
            edges.push((i, 5 + i)); // spokes
        }
        Graph::from_edges(10, &edges).unwrap()
    }

    /// Circulant graph C_n(S): i ~ i±s for each s in the connection set.
    pub fn circulant(n: usize, jumps: &[usize]) -> Graph {
        let mut g = Graph::empty(n);
        for i in 0..n {
            for &s in jumps {
                let j = (i + s) % n;
                if i != j && !g.adj[i][j] {
                    g.adj[i][j] = true;
                    g.adj[j][i] = true;
                }
            }
        }
        g
    }

    /// Wheel: a hub joined to every vertex of a cycle on n−1 vertices.
    pub fn wheel(n: usize) -> Graph {
        assert!(n >= 4);
        let mut g = Graph::cycle(n - 1);
        g.n += 1;
        for row in g.adj.iter_mut() {
            row.push(false);
        }
        g.adj.push(vec![false; g.n]);
        let hub = g.n - 1;
        for v in 0..hub {
            g.adj[hub][v] = true;
            g.adj[v][hub] = true;
        }
        g
    }

    /// 3-cube.
    pub fn cube() -> Graph {
        let mut edges = Vec::new();
        for u in 0..8u32 {
            for b in 0..3 {
                let v = u ^ (1 << b);
                if u < v {
                    edges.push((u as usize, v as usize));
                }
            }
        }
        Graph::from_edges(8, &edges).unwrap()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
