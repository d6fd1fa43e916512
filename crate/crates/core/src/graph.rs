//! Small simple graphs stored as adjacency bit rows.

use std::fmt;

use crate::error::GraphError;

/// Largest vertex count any [`Graph`] may have.
pub const MAXN: usize = 12;

/// A subset of vertex indices, one bit per vertex.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u16);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u16) -> Self {
        VertexSet(bits)
    }

    /// The set `{0, .., n-1}`.
    pub const fn full(n: usize) -> Self {
        if n >= 16 {
            VertexSet(u16::MAX)
        } else {
            VertexSet(((1u32 << n) - 1) as u16)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub const fn bits(self) -> u16 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 16 && self.0 & (1 << v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1 << v))
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct VertexIter(u16);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// An unordered vertex pair, stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Normalizes the pair so that `u() < v()`.
    pub fn new(a: usize, b: usize) -> Result<Self, GraphError> {
        if a == b {
            return Err(GraphError::Loop(a));
        }
        Ok(Edge {
            u: a.min(b),
            v: a.max(b),
        })
    }

    pub fn u(self) -> usize {
        self.u
    }

    pub fn v(self) -> usize {
        self.v
    }

    pub fn endpoints(self) -> VertexSet {
        VertexSet::singleton(self.u).with(self.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// An immutable simple graph on at most [`MAXN`] vertices.
///
/// Row `i` of the adjacency array is the bit set of neighbours of vertex `i`.
/// Rows are symmetric, irreflexive and never carry bits at or above `n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: u8,
    adj: [u16; MAXN],
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAXN {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n: n as u8,
            adj: [0; MAXN],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: a.max(b),
                    n,
                });
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            g.adj[a] |= 1 << b;
            g.adj[b] |= 1 << a;
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbour rows, validating every invariant.
    pub fn from_rows(rows: &[u16]) -> Result<Self, GraphError> {
        let n = rows.len();
        let mut g = Graph::empty(n)?;
        let mask = VertexSet::full(n).bits();
        for (i, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(GraphError::VertexOutOfRange {
                    vertex: 15 - row.leading_zeros() as usize,
                    n,
                });
            }
            if row & (1 << i) != 0 {
                return Err(GraphError::Loop(i));
            }
            g.adj[i] = row;
        }
        for i in 0..n {
            for j in VertexSet(g.adj[i]) {
                if g.adj[j] & (1 << i) == 0 {
                    return Err(GraphError::Asymmetric(i, j));
                }
            }
        }
        Ok(g)
    }

    /// Builds from rows already known to satisfy the invariants.
    pub(crate) fn from_rows_unchecked(n: usize, rows: &[u16]) -> Self {
        debug_assert!(n <= MAXN && rows.len() >= n);
        let mut adj = [0; MAXN];
        adj[..n].copy_from_slice(&rows[..n]);
        Graph { n: n as u8, adj }
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn row(&self, v: usize) -> u16 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u16] {
        &self.adj[..self.n()]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n() && self.adj[a] & (1 << b) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Degrees in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Edges in lexicographic order of `(u, v)`.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n()).flat_map(move |u| {
            VertexSet(self.adj[u] & !((2u32 << u) - 1) as u16)
                .iter()
                .map(move |v| Edge { u, v })
        })
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.rows().contains(&0)
    }

    pub fn neighborhood(&self, v: usize, closed: bool) -> VertexSet {
        let open = VertexSet(self.adj[v]);
        if closed {
            open.with(v)
        } else {
            open
        }
    }

    /// `N(S)`: vertices outside `s` adjacent to some member of `s`.
    pub fn set_neighborhood(&self, s: VertexSet) -> VertexSet {
        s.iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.union(VertexSet(self.adj[v])))
            .difference(s)
    }

    /// `N[S] = N(S) ∪ S`.
    pub fn closed_set_neighborhood(&self, s: VertexSet) -> VertexSet {
        self.set_neighborhood(s).union(s)
    }

    /// True iff `N[u] ⊆ N[v]`.
    pub fn corner_dominated(&self, u: usize, v: usize) -> bool {
        self.neighborhood(u, true)
            .is_subset(self.neighborhood(v, true))
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.bits() == 0)
    }

    /// Number of edges with both ends in `s`.
    pub fn edges_within(&self, s: VertexSet) -> usize {
        s.iter()
            .map(|v| (self.adj[v] & s.bits()).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// The subgraph induced by `s`, vertices renumbered in ascending original order.
    pub fn induced(&self, s: VertexSet) -> Graph {
        let verts: Vec<usize> = s.iter().filter(|&v| v < self.n()).collect();
        let mut rows = [0u16; MAXN];
        for (i, &a) in verts.iter().enumerate() {
            for (j, &b) in verts.iter().enumerate() {
                if self.adj[a] & (1 << b) != 0 {
                    rows[i] |= 1 << j;
                }
            }
        }
        Graph::from_rows_unchecked(verts.len(), &rows)
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n()).bits();
        let mut rows = [0u16; MAXN];
        for (v, row) in rows.iter_mut().enumerate().take(self.n()) {
            *row = !self.adj[v] & full & !(1 << v);
        }
        Graph::from_rows_unchecked(self.n(), &rows)
    }

    /// Relabels vertices: old vertex `i` becomes `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(
            perm.len(),
            self.n(),
            "permutation length must equal vertex count"
        );
        let mut rows = [0u16; MAXN];
        for (i, &pi) in perm.iter().enumerate() {
            for j in VertexSet(self.adj[i]) {
                rows[pi] |= 1 << perm[j];
            }
        }
        Graph::from_rows_unchecked(self.n(), &rows)
    }

    /// Disjoint union, `other` placed after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n() + other.n();
        if n > MAXN {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut rows = [0u16; MAXN];
        rows[..self.n()].copy_from_slice(self.rows());
        for (i, &r) in other.rows().iter().enumerate() {
            rows[self.n() + i] = r << self.n();
        }
        Ok(Graph::from_rows_unchecked(n, &rows))
    }

    /// Appends a vertex adjacent to exactly `nbrs`.
    pub fn add_vertex(&self, nbrs: VertexSet) -> Result<Graph, GraphError> {
        let n = self.n();
        if n + 1 > MAXN {
            return Err(GraphError::TooManyVertices(n + 1));
        }
        if !nbrs.is_subset(self.vertices()) {
            return Err(GraphError::VertexOutOfRange {
                vertex: 15 - nbrs.bits().leading_zeros() as usize,
                n,
            });
        }
        let mut rows = self.adj;
        for v in nbrs {
            rows[v] |= 1 << n;
        }
        rows[n] = nbrs.bits();
        Ok(Graph::from_rows_unchecked(n + 1, &rows))
    }

    /// Contracts edge `e`. See [`ContractionResult`] for the labelling.
    pub fn contract(&self, e: Edge) -> Result<ContractionResult, GraphError> {
        if !self.has_edge(e.u, e.v) {
            return Err(GraphError::NotAnEdge(e.u, e.v));
        }
        let (keep, drop) = (e.u, e.v);
        let n = self.n();
        let mut relabel = [None; MAXN];
        for (x, slot) in relabel.iter_mut().enumerate().take(n) {
            if x != keep && x != drop {
                *slot = Some(if x < drop { x } else { x - 1 });
            }
        }
        let map = |x: usize| {
            if x == keep || x == drop {
                keep
            } else if x < drop {
                x
            } else {
                x - 1
            }
        };
        let mut rows = [0u16; MAXN];
        for a in 0..n {
            for b in VertexSet(self.adj[a]) {
                let (ma, mb) = (map(a), map(b));
                if ma != mb {
                    rows[ma] |= 1 << mb;
                }
            }
        }
        Ok(ContractionResult {
            graph: Graph::from_rows_unchecked(n - 1, &rows),
            merged: keep,
            relabel,
        })
    }

    /// All single-edge contractions, in edge order.
    pub fn contractions(&self) -> impl Iterator<Item = (Edge, Graph)> + '_ {
        self.edges().map(move |e| {
            let c = self.contract(e).expect("edge taken from the graph");
            (e, c.graph)
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

/// The outcome of contracting an edge `uv` with `u < v`.
///
/// The merged vertex takes index `u`; every other vertex `x` keeps its index
/// if `x < v` and moves to `x - 1` otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionResult {
    pub graph: Graph,
    pub merged: usize,
    relabel: [Option<usize>; MAXN],
}

impl ContractionResult {
    /// New index of an old vertex other than the contracted endpoints.
    pub fn relabel(&self, old: usize) -> Option<usize> {
        self.relabel.get(old).copied().flatten()
    }

    /// Image of a vertex set: endpoints go to the merged vertex.
    pub fn map_set(&self, s: VertexSet) -> VertexSet {
        s.iter()
            .map(|x| self.relabel(x).unwrap_or(self.merged))
            .collect()
    }
}
