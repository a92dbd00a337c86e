use crate::error::{Error, Result};

use super::target::TargetGraph;

/// Hard cap on vertex counts: adjacency rows are single 64-bit words.
/// Comfortably above the exhaustive desk scale this crate targets.
pub const MAX_VERTICES: usize = 64;

/// A finite loopless undirected graph on the dense vertex set `0..n`.
///
/// Immutable after construction; all mutating-sounding operations return a
/// new graph. Adjacency is stored one bitset row per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u64>,
}

impl SimpleGraph {
    /// Builds a graph from an edge list. Rejects loops, out-of-range
    /// endpoints, and vertex counts above [`MAX_VERTICES`]; duplicate edges
    /// collapse silently.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Parameter(format!(
                "graph on {n} vertices exceeds the supported maximum of {MAX_VERTICES}"
            )));
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Parameter(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::Parameter(format!(
                    "loop at vertex {u}: loops are only representable in target graphs"
                )));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(SimpleGraph { n, adj })
    }

    pub(crate) fn from_rows(n: usize, adj: Vec<u64>) -> Self {
        debug_assert_eq!(adj.len(), n);
        SimpleGraph { n, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Neighbor bitset of `v`.
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Minimum degree; 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Maximum degree; 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as sorted (u, v) pairs with u < v.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut bits = if u + 1 < 64 {
                self.adj[u] & !((1u64 << (u + 1)) - 1)
            } else {
                0
            };
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                out.push((u, v));
                bits &= bits - 1;
            }
        }
        out
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut bits = self.adj[v];
        while bits != 0 {
            out.push(bits.trailing_zeros() as usize);
            bits &= bits - 1;
        }
        out
    }

    /// The graph with the single edge `(u, v)` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Self {
        let mut adj = self.adj.clone();
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
        SimpleGraph { n: self.n, adj }
    }

    pub fn is_regular(&self, d: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == d)
    }

    /// 2-colorability test by BFS.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = vec![s];
            while let Some(u) = queue.pop() {
                for v in self.neighbors(u) {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push(v);
                    } else if color[v] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// The subgraph induced on `keep` (a bitset over `0..n`), relabelled
    /// densely in increasing vertex order.
    pub fn induced(&self, keep: u64) -> SimpleGraph {
        let verts: Vec<usize> = (0..self.n).filter(|&v| keep >> v & 1 == 1).collect();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let mut adj = vec![0u64; verts.len()];
        for (i, &v) in verts.iter().enumerate() {
            let mut bits = self.adj[v] & keep;
            while bits != 0 {
                let w = bits.trailing_zeros() as usize;
                adj[i] |= 1 << pos[w];
                bits &= bits - 1;
            }
        }
        SimpleGraph {
            n: verts.len(),
            adj,
        }
    }

    /// Relabels by `perm`, where `perm[new] = old`.
    pub fn relabelled(&self, perm: &[usize]) -> SimpleGraph {
        debug_assert_eq!(perm.len(), self.n);
        let mut inv = vec![0usize; self.n];
        for (new, &old) in perm.iter().enumerate() {
            inv[old] = new;
        }
        let mut adj = vec![0u64; self.n];
        for new in 0..self.n {
            let mut bits = self.adj[perm[new]];
            while bits != 0 {
                let w = bits.trailing_zeros() as usize;
                adj[new] |= 1 << inv[w];
                bits &= bits - 1;
            }
        }
        SimpleGraph { n: self.n, adj }
    }

    /// Degree sequence sorted descending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

impl std::fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SimpleGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Complete graph `K_k`.
pub fn complete(k: usize) -> Result<SimpleGraph> {
    if k == 0 {
        return Err(Error::Parameter("complete graph needs n >= 1".into()));
    }
    let mut edges = Vec::new();
    for u in 0..k {
        for v in u + 1..k {
            edges.push((u, v));
        }
    }
    SimpleGraph::new(k, &edges)
}

/// Complete bipartite graph `K_{a,b}`; class one is `0..a`, class two `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<SimpleGraph> {
    if a == 0 || b == 0 {
        return Err(Error::Parameter(
            "complete bipartite graph needs both classes nonempty".into(),
        ));
    }
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    SimpleGraph::new(a + b, &edges)
}

/// Cycle `C_n`, n >= 3, vertices in walk order.
pub fn cycle(n: usize) -> Result<SimpleGraph> {
    if n < 3 {
        return Err(Error::Parameter(format!("cycle needs n >= 3, got {n}")));
    }
    let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|u| (u, u + 1)).collect();
    edges.push((n - 1, 0));
    SimpleGraph::new(n, &edges)
}

/// Path `P_n` on n >= 1 vertices, in walk order.
pub fn path(n: usize) -> Result<SimpleGraph> {
    if n == 0 {
        return Err(Error::Parameter("path needs n >= 1".into()));
    }
    let edges: Vec<(usize, usize)> = (0..n - 1).map(|u| (u, u + 1)).collect();
    SimpleGraph::new(n, &edges)
}

/// Star `K_{1,n-1}` on n >= 2 vertices; the center is vertex 0.
pub fn star(n: usize) -> Result<SimpleGraph> {
    if n < 2 {
        return Err(Error::Parameter(format!("star needs n >= 2, got {n}")));
    }
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (0, v)).collect();
    SimpleGraph::new(n, &edges)
}

/// Disjoint union, relabelling the parts consecutively in order.
pub fn disjoint_union(parts: &[SimpleGraph]) -> Result<SimpleGraph> {
    let n: usize = parts.iter().map(|g| g.n()).sum();
    let mut edges = Vec::new();
    let mut base = 0usize;
    for g in parts {
        for (u, v) in g.edges() {
            edges.push((base + u, base + v));
        }
        base += g.n();
    }
    SimpleGraph::new(n, &edges)
}

/// Which named family [`make_family`] should build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    Complete,
    CompleteBipartite,
    Cycle,
    Path,
    Star,
    LoopedComplete,
    HInd,
    HWr,
    HardCoreK,
}

/// A named-family result: some families are counted graphs, some are targets.
#[derive(Debug, Clone)]
pub enum FamilyGraph {
    Simple(SimpleGraph),
    Target(TargetGraph),
}

/// Uniform entry point over the named families, mainly for the CLI. The
/// dedicated constructors are preferable in library code.
pub fn make_family(kind: FamilyKind, params: &[usize]) -> Result<FamilyGraph> {
    let need = |k: usize| -> Result<()> {
        if params.len() == k {
            Ok(())
        } else {
            Err(Error::Parameter(format!(
                "family {kind:?} takes {k} parameter(s), got {}",
                params.len()
            )))
        }
    };
    match kind {
        FamilyKind::Complete => {
            need(1)?;
            Ok(FamilyGraph::Simple(complete(params[0])?))
        }
        FamilyKind::CompleteBipartite => {
            need(2)?;
            Ok(FamilyGraph::Simple(complete_bipartite(
                params[0], params[1],
            )?))
        }
        FamilyKind::Cycle => {
            need(1)?;
            Ok(FamilyGraph::Simple(cycle(params[0])?))
        }
        FamilyKind::Path => {
            need(1)?;
            Ok(FamilyGraph::Simple(path(params[0])?))
        }
        FamilyKind::Star => {
            need(1)?;
            Ok(FamilyGraph::Simple(star(params[0])?))
        }
        FamilyKind::LoopedComplete => {
            need(1)?;
            Ok(FamilyGraph::Target(super::target::looped_complete(
                params[0],
            )?))
        }
        FamilyKind::HInd => {
            need(0)?;
            Ok(FamilyGraph::Target(super::target::h_ind()))
        }
        FamilyKind::HWr => {
            need(0)?;
            Ok(FamilyGraph::Target(super::target::h_wr()))
        }
        FamilyKind::HardCoreK => {
            need(1)?;
            Ok(FamilyGraph::Target(super::target::hard_core(params[0])?))
        }
    }
}
