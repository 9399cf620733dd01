//! Undirected simple graphs on `{0, .., n - 1}` with bit-packed adjacency
//! rows, and the two Erdős–Rényi samplers.

use num_rational::Ratio;

use crate::bitset::{popcount, popcount_and, test_bit, words_for, Ones};
use crate::rng::{RngSeed, SplitMix64};
use crate::{Error, Result, VertexSet};

/// An undirected simple graph. Row `v` of the adjacency matrix is stored as
/// `words` consecutive `u64`s; the matrix is symmetric with a zero diagonal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges()).finish()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph { n, words, adj: vec![0; n * words] }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge_unchecked(u, v);
            }
        }
        g
    }

    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse to a single edge.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.add_edge_unchecked(u, v);
        }
        Ok(g)
    }

    #[inline]
    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        self.adj[u * self.words + v / 64] |= 1 << (v % 64);
        self.adj[v * self.words + u / 64] |= 1 << (u % 64);
    }

    /// Edge-independent `G(n, p)`. Pairs are visited in row-major order
    /// `(0,1), (0,2), .., (n-2,n-1)` and each consumes exactly one draw.
    pub fn sample_gnp(n: usize, p: f64, seed: RngSeed) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidProbability(p));
        }
        let mut rng = SplitMix64::new(seed);
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.bernoulli(p) {
                    g.add_edge_unchecked(u, v);
                }
            }
        }
        Ok(g)
    }

    /// Uniform `G(n, m)`: a Fisher–Yates pass over the row-major pair array,
    /// stopped after `m` swaps, keeps the first `m` pairs. The swaps do not
    /// depend on `m`, so `sample_gnm(n, m - 1, s)` is a subgraph of
    /// `sample_gnm(n, m, s)`.
    pub fn sample_gnm(n: usize, m: u64, seed: RngSeed) -> Result<Self> {
        let max = pair_count(n);
        if m > max {
            return Err(Error::TooManyEdges { m, max });
        }
        let mut pairs: Vec<(u32, u32)> = Vec::with_capacity(max as usize);
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                pairs.push((u, v));
            }
        }
        let mut rng = SplitMix64::new(seed);
        let mut g = Self::empty(n);
        for i in 0..m as usize {
            let j = i + rng.below(max - i as u64) as usize;
            pairs.swap(i, j);
            let (u, v) = pairs[i];
            g.add_edge_unchecked(u as usize, v as usize);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && test_bit(self.row(u), v)
    }

    /// Adjacency row of `v` as raw words.
    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    pub(crate) fn word_count(&self) -> usize {
        self.words
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        Ones::new(self.row(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        popcount(self.row(v))
    }

    /// Number of neighbours of `v` inside `s`.
    pub fn degree_in(&self, v: usize, s: &VertexSet) -> usize {
        popcount_and(self.row(v), s.words())
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            out.extend(self.neighbours(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Maximum degree; 0 for the null graph.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Average degree `2|E(G[S])| / |S|` of the subgraph induced on `s`,
    /// as an exact fraction in lowest terms.
    pub fn avg_degree(&self, s: &VertexSet) -> Result<Ratio<u64>> {
        self.check_set(s)?;
        let size = s.len();
        if size == 0 {
            return Err(Error::EmptyVertexSet);
        }
        let twice_edges: usize = s.iter().map(|v| self.degree_in(v, s)).sum();
        Ok(Ratio::new(twice_edges as u64, size as u64))
    }

    /// The subgraph induced on `s`, vertices relabelled `0..|s|` in
    /// increasing order of their original labels.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Graph {
        let members: Vec<usize> = s.iter().filter(|&v| v < self.n).collect();
        let mut h = Graph::empty(members.len());
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    h.add_edge_unchecked(i, j);
                }
            }
        }
        h
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.iter().find(|&v| v >= self.n) {
            Some(v) => Err(Error::VertexOutOfRange { vertex: v, n: self.n }),
            None => Ok(()),
        }
    }

    /// Same graph with vertex `order[i]` renamed to `i`.
    pub(crate) fn permuted(&self, order: &[usize]) -> Graph {
        let mut position = vec![0; self.n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let mut h = Graph::empty(self.n);
        for (u, v) in self.edges() {
            h.add_edge_unchecked(position[u], position[v]);
        }
        h
    }
}

/// `C(n, 2)`.
pub fn pair_count(n: usize) -> u64 {
    let n = n as u64;
    n * n.saturating_sub(1) / 2
}
