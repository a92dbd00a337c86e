//! Edge-min-critical graphs: the criticality test, the path decomposition
//! for minimum degree 2, its inverse construction, exhaustive generators for
//! minimum degree 1 and 2, and the maximum-matching partition.
//!
//! A graph of minimum degree `delta` is edge-min-critical when deleting any
//! single edge drops the minimum degree. For `delta = 2` such graphs are
//! exactly the ones built from disjoint cycles by iteratively attaching
//! paths whose two endpoints land on equal or non-adjacent vertices,
//! followed by simultaneous pendant vertices on distinct non-adjacent pairs;
//! [`decompose_delta2`] recovers such a construction and [`rebuild`] replays
//! one.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{canonical_form, canonical_graph, SimpleGraph};

/// True iff every single-edge deletion drops the minimum degree below
/// `delta`, i.e. every edge has an endpoint of degree exactly `delta`.
/// Requires `min_degree(g) = delta`.
pub fn is_edge_min_critical(g: &SimpleGraph, delta: usize) -> Result<bool> {
    if g.min_degree() != delta {
        return Err(Error::Parameter(format!(
            "criticality test requires min degree {delta}, graph has {}",
            g.min_degree()
        )));
    }
    Ok(g.edges()
        .iter()
        .all(|&(u, v)| g.degree(u) == delta || g.degree(v) == delta))
}

/// A path on `k >= 2` new vertices glued to the existing graph at its two
/// endpoints only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathAddition {
    /// The new vertices in path order.
    pub vertices: Vec<usize>,
    /// Existing vertices receiving the first and last path vertex; equal or
    /// non-adjacent at attachment time.
    pub attach: (usize, usize),
}

/// A single new vertex glued to two distinct non-adjacent existing vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PendantAddition {
    pub vertex: usize,
    pub attach: (usize, usize),
}

/// A construction record for an edge-min-critical graph of minimum degree 2:
/// disjoint base cycles, then ordered path additions, then pendant vertices
/// added all at the same time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EarDecomposition {
    /// Vertex sequences of the base cycles, each of length >= 3.
    pub base_cycles: Vec<Vec<usize>>,
    pub path_additions: Vec<PathAddition>,
    pub pendant_additions: Vec<PendantAddition>,
}

impl EarDecomposition {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "base_cycles": self.base_cycles.iter().map(|c| {
                c.iter().map(|v| v.to_string()).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
            "path_additions": self.path_additions.iter().map(|p| serde_json::json!({
                "vertices": p.vertices.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "attach": [p.attach.0.to_string(), p.attach.1.to_string()],
            })).collect::<Vec<_>>(),
            "pendant_additions": self.pendant_additions.iter().map(|p| serde_json::json!({
                "vertex": p.vertex.to_string(),
                "attach": [p.attach.0.to_string(), p.attach.1.to_string()],
            })).collect::<Vec<_>>(),
        })
    }
}

/// One strippable path: a maximal chain of degree-2 vertices whose outside
/// neighbours (the attachment points) are equal or non-adjacent and whose
/// removal keeps the rest at minimum degree 2.
struct Chain {
    vertices: Vec<usize>,
    attach: (usize, usize),
}

/// Decomposes an edge-min-critical graph of minimum degree 2 into an
/// [`EarDecomposition`]: iteratively strips a path whose endpoints each send
/// exactly one edge to the remainder (attachments equal or non-adjacent,
/// remainder of minimum degree 2) until only disjoint cycles remain.
///
/// Among the candidate paths at each step the one with the
/// lexicographically smallest endpoint pair (then smallest vertex sequence)
/// is stripped, which makes the record deterministic. Finding no strippable
/// path before reaching cycles contradicts the structure theory for this
/// graph class and is reported as an invariant violation.
pub fn decompose_delta2(g: &SimpleGraph) -> Result<EarDecomposition> {
    if g.min_degree() != 2 {
        return Err(Error::Parameter(format!(
            "decomposition requires min degree 2, graph has {}",
            g.min_degree()
        )));
    }
    if !is_edge_min_critical(g, 2)? {
        return Err(Error::Parameter(
            "decomposition requires an edge-min-critical graph".into(),
        ));
    }
    let n = g.n();
    let mut mask: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut stripped_paths: Vec<PathAddition> = Vec::new();
    let mut pendants: Vec<PendantAddition> = Vec::new();

    loop {
        let alive: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let deg = |v: usize| (g.row(v) & mask).count_ones() as usize;
        if let Some(&bad) = alive.iter().find(|&&v| deg(v) < 2) {
            return Err(Error::InvariantViolation(format!(
                "vertex {bad} fell below degree 2 while stripping"
            )));
        }
        if alive.iter().all(|&v| deg(v) == 2) {
            break; // disjoint cycles remain
        }
        let mut candidates = find_chains(g, mask);
        candidates.retain(|c| chain_is_strippable(g, mask, c));
        if candidates.is_empty() {
            return Err(Error::InvariantViolation(
                "no strippable path found before reaching disjoint cycles; \
                 the input cannot be edge-min-critical of minimum degree 2"
                    .into(),
            ));
        }
        candidates.sort_by_key(|c| {
            let (a, b) = c.attach;
            (a.min(b), a.max(b), c.vertices.clone())
        });
        let chain = &candidates[0];
        for &v in &chain.vertices {
            mask &= !(1u64 << v);
        }
        if chain.vertices.len() == 1 {
            let (a, b) = chain.attach;
            pendants.push(PendantAddition {
                vertex: chain.vertices[0],
                attach: (a.min(b), a.max(b)),
            });
        } else {
            stripped_paths.push(PathAddition {
                vertices: chain.vertices.clone(),
                attach: chain.attach,
            });
        }
    }

    // Remaining components are cycles; walk each in vertex order.
    let mut base_cycles = Vec::new();
    let mut seen = 0u64;
    for start in 0..n {
        if mask >> start & 1 == 0 || seen >> start & 1 == 1 {
            continue;
        }
        let mut cycle = vec![start];
        seen |= 1 << start;
        let mut prev = start;
        let mut cur = (g.row(start) & mask).trailing_zeros() as usize;
        while cur != start {
            cycle.push(cur);
            seen |= 1 << cur;
            let next_bits = g.row(cur) & mask & !(1u64 << prev);
            prev = cur;
            cur = next_bits.trailing_zeros() as usize;
        }
        base_cycles.push(cycle);
    }
    if base_cycles.is_empty() {
        return Err(Error::InvariantViolation(
            "stripping consumed every vertex; no base cycles remain".into(),
        ));
    }

    stripped_paths.reverse();
    pendants.reverse();
    Ok(EarDecomposition {
        base_cycles,
        path_additions: stripped_paths,
        pendant_additions: pendants,
    })
}

/// Maximal chains of degree-2 vertices anchored outside at both ends.
/// Cycle components (no anchors) yield no chains.
fn find_chains(g: &SimpleGraph, mask: u64) -> Vec<Chain> {
    let n = g.n();
    let deg = |v: usize| (g.row(v) & mask).count_ones() as usize;
    let mut d_set = 0u64;
    for v in 0..n {
        if mask >> v & 1 == 1 && deg(v) == 2 {
            d_set |= 1 << v;
        }
    }
    let anchors = mask & !d_set;
    let mut chains = Vec::new();
    let mut visited = 0u64;
    for v in 0..n {
        if d_set >> v & 1 == 0 || visited >> v & 1 == 1 {
            continue;
        }
        let anchor_nb = g.row(v) & mask & anchors;
        if anchor_nb == 0 {
            continue; // interior vertex or cycle component
        }
        let first_anchor = anchor_nb.trailing_zeros() as usize;
        let mut vertices = vec![v];
        visited |= 1 << v;
        let mut prev = first_anchor;
        let mut cur = v;
        let last_anchor = loop {
            let next = (g.row(cur) & mask & !(1u64 << prev)).trailing_zeros() as usize;
            if anchors >> next & 1 == 1 {
                break next;
            }
            vertices.push(next);
            visited |= 1 << next;
            prev = cur;
            cur = next;
        };
        let mut attach = (first_anchor, last_anchor);
        if attach.1 < attach.0 {
            vertices.reverse();
            attach = (attach.1, attach.0);
        }
        chains.push(Chain { vertices, attach });
    }
    chains
}

fn chain_is_strippable(g: &SimpleGraph, mask: u64, chain: &Chain) -> bool {
    let (a, b) = chain.attach;
    if a != b && g.has_edge(a, b) {
        return false;
    }
    let mut new_mask = mask;
    for &v in &chain.vertices {
        new_mask &= !(1u64 << v);
    }
    for anchor in [a, b] {
        if (g.row(anchor) & new_mask).count_ones() < 2 {
            return false;
        }
    }
    true
}

/// Replays an [`EarDecomposition`]: lays down the base cycles, applies path
/// additions in order, then attaches all pendant vertices at once. Checks
/// every attachment rule and names the offending addition on failure. The
/// result always has minimum degree 2.
pub fn rebuild(d: &EarDecomposition) -> Result<SimpleGraph> {
    if d.base_cycles.is_empty() {
        return Err(Error::Construction("base cycles must be nonempty".into()));
    }
    let mut ids: Vec<usize> = Vec::new();
    for c in &d.base_cycles {
        if c.len() < 3 {
            return Err(Error::Construction(format!(
                "base cycle {c:?} has fewer than 3 vertices"
            )));
        }
        ids.extend_from_slice(c);
    }
    for p in &d.path_additions {
        if p.vertices.len() < 2 {
            return Err(Error::Construction(format!(
                "path addition {:?} needs at least 2 vertices",
                p.vertices
            )));
        }
        ids.extend_from_slice(&p.vertices);
    }
    for p in &d.pendant_additions {
        ids.push(p.vertex);
    }
    let n = ids.len();
    {
        let mut sorted = ids.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != n || sorted.first() != Some(&0) || sorted.last() != Some(&(n - 1)) {
            return Err(Error::Construction(
                "vertex ids must be disjoint and dense in 0..n".into(),
            ));
        }
    }
    if n > crate::graph::MAX_VERTICES {
        return Err(Error::Construction(format!("{n} vertices exceed the maximum")));
    }

    let mut adj = vec![0u64; n];
    let mut present = 0u64;
    let add_edge = |adj: &mut Vec<u64>, u: usize, v: usize| {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    };
    for c in &d.base_cycles {
        for i in 0..c.len() {
            add_edge(&mut adj, c[i], c[(i + 1) % c.len()]);
        }
        for &v in c {
            present |= 1 << v;
        }
    }
    for p in &d.path_additions {
        let (a, b) = p.attach;
        if present >> a & 1 == 0 || present >> b & 1 == 0 {
            return Err(Error::Construction(format!(
                "path addition {:?} attaches to vertices not yet present",
                p
            )));
        }
        if a != b && adj[a] >> b & 1 == 1 {
            return Err(Error::Construction(format!(
                "path addition {:?} attaches to adjacent vertices {a} and {b}",
                p.vertices
            )));
        }
        for w in p.vertices.windows(2) {
            add_edge(&mut adj, w[0], w[1]);
        }
        add_edge(&mut adj, a, p.vertices[0]);
        add_edge(&mut adj, *p.vertices.last().expect("len >= 2"), b);
        for &v in &p.vertices {
            present |= 1 << v;
        }
    }
    // Pendants go in all at the same time: attachments are validated against
    // the pre-pendant graph and may not touch pendant vertices.
    let pre_pendant = present;
    let pre_adj = adj.clone();
    for p in &d.pendant_additions {
        let (a, b) = p.attach;
        if a == b {
            return Err(Error::Construction(format!(
                "pendant {} needs two distinct attachment vertices",
                p.vertex
            )));
        }
        if pre_pendant >> a & 1 == 0 || pre_pendant >> b & 1 == 0 {
            return Err(Error::Construction(format!(
                "pendant {} attaches outside the pre-pendant graph",
                p.vertex
            )));
        }
        if pre_adj[a] >> b & 1 == 1 {
            return Err(Error::Construction(format!(
                "pendant {} attaches to adjacent vertices {a} and {b}",
                p.vertex
            )));
        }
        add_edge(&mut adj, p.vertex, a);
        add_edge(&mut adj, p.vertex, b);
    }
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| {
            let row = adj[u];
            (u + 1..n).filter_map(move |v| if row >> v & 1 == 1 { Some((u, v)) } else { None })
        })
        .collect();
    let g = SimpleGraph::new(n, &edges)?;
    if g.min_degree() < 2 {
        return Err(Error::Construction(
            "rebuilt graph has a vertex of degree below 2".into(),
        ));
    }
    Ok(g)
}

/// All integer partitions of `n` into parts `>= min_part`, each partition
/// non-increasing, in lexicographically decreasing order.
pub fn partitions_min_part(n: usize, min_part: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max_part: usize, min_part: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        let mut part = max_part.min(n);
        while part >= min_part {
            if n != part && n - part < min_part {
                part -= 1;
                continue;
            }
            cur.push(part);
            rec(n - part, part, min_part, cur, out);
            cur.pop();
            part -= 1;
        }
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    rec(n, n, min_part, &mut cur, &mut out);
    out
}

/// Generates every edge-min-critical graph on `n` vertices with minimum
/// degree `delta in {1, 2}`, pairwise non-isomorphic, canonically labelled,
/// sorted by canonical key.
///
/// For `delta = 1` these are the star forests, one per partition of `n` into
/// parts of size at least 2. For `delta = 2` the cycles-paths-pendants
/// construction is applied exhaustively with canonical dedup after every
/// addition, followed by a criticality filter. Minimum degrees of 3 and
/// above are refused: no structural generator is known for them.
pub fn generate_emc(n: usize, delta: usize) -> Result<Vec<SimpleGraph>> {
    match delta {
        1 => generate_emc_delta1(n),
        2 => generate_emc_delta2(n),
        other => Err(Error::Unsupported(format!(
            "edge-min-critical generation is implemented for minimum degree 1 and 2 only \
             (got {other}); the structure of the class is unknown beyond that"
        ))),
    }
}

fn generate_emc_delta1(n: usize) -> Result<Vec<SimpleGraph>> {
    if n < 2 {
        return Err(Error::Parameter(format!(
            "minimum degree 1 needs n >= 2, got {n}"
        )));
    }
    let mut out = Vec::new();
    for partition in partitions_min_part(n, 2) {
        let mut edges = Vec::new();
        let mut base = 0usize;
        for part in &partition {
            for leaf in 1..*part {
                edges.push((base, base + leaf));
            }
            base += part;
        }
        out.push(canonical_graph(&SimpleGraph::new(n, &edges)?));
    }
    out.sort_by(|a, b| canonical_form(a).cmp(&canonical_form(b)));
    Ok(out)
}

fn generate_emc_delta2(n: usize) -> Result<Vec<SimpleGraph>> {
    if n < 3 {
        return Err(Error::Parameter(format!(
            "minimum degree 2 needs n >= 3, got {n}"
        )));
    }
    // Phase 1: disjoint cycle unions on m <= n vertices.
    let mut levels: Vec<HashMap<crate::graph::CanonicalForm, SimpleGraph>> =
        vec![HashMap::new(); n + 1];
    for m in 3..=n {
        for partition in partitions_min_part(m, 3) {
            let mut edges = Vec::new();
            let mut base = 0usize;
            for part in &partition {
                for i in 0..*part {
                    edges.push((base + i, base + (i + 1) % part));
                }
                base += part;
            }
            let g = SimpleGraph::new(m, &edges)?;
            levels[m].insert(canonical_form(&g), g);
        }
    }
    // Phase 2: iteratively glue paths on k >= 2 fresh vertices, endpoints on
    // equal or non-adjacent existing vertices; dedup per vertex count.
    for used in 3..=n {
        let states: Vec<SimpleGraph> = levels[used].values().cloned().collect();
        for state in states {
            for k in 2..=(n - used) {
                for a in 0..used {
                    for b in a..used {
                        if a != b && state.has_edge(a, b) {
                            continue;
                        }
                        let mut edges = state.edges();
                        edges.push((a, used));
                        for i in 0..k - 1 {
                            edges.push((used + i, used + i + 1));
                        }
                        edges.push((used + k - 1, b));
                        let g = SimpleGraph::new(used + k, &edges)?;
                        levels[used + k].entry(canonical_form(&g)).or_insert(g);
                    }
                }
            }
        }
    }
    // Phase 3: attach the remaining vertices as pendants, all at once, on
    // distinct non-adjacent pre-pendant pairs; then filter for criticality.
    let states: Vec<SimpleGraph> = levels
        .iter()
        .flat_map(|level| level.values().cloned())
        .collect();
    let finals: Vec<Vec<SimpleGraph>> = states
        .par_iter()
        .map(|state| {
            let mut out = Vec::new();
            complete_with_pendants(state, n, &mut out);
            out
        })
        .collect();
    let mut dedup: BTreeMap<Vec<u8>, SimpleGraph> = BTreeMap::new();
    for g in finals.into_iter().flatten() {
        let canon = canonical_graph(&g);
        dedup
            .entry(canonical_form(&canon).bytes().to_vec())
            .or_insert(canon);
    }
    Ok(dedup.into_values().collect())
}

/// Extends `state` to exactly `n` vertices by pendant additions and emits
/// every edge-min-critical completion. Prunes on the criticality obstruction
/// directly: an original edge both of whose endpoints have degree above 2
/// (in the completed graph) can never be repaired by adding more pendants.
fn complete_with_pendants(state: &SimpleGraph, n: usize, out: &mut Vec<SimpleGraph>) {
    let used = state.n();
    let remaining = n - used;
    let old_edges = state.edges();
    let spoiled_initially: Vec<bool> = (0..used).map(|v| state.degree(v) > 2).collect();
    if old_edges
        .iter()
        .any(|&(u, v)| spoiled_initially[u] && spoiled_initially[v])
    {
        return;
    }
    if remaining == 0 {
        if is_edge_min_critical(state, 2).unwrap_or(false) {
            out.push(state.clone());
        }
        return;
    }
    let pool: Vec<(usize, usize)> = (0..used)
        .flat_map(|a| (a + 1..used).map(move |b| (a, b)))
        .filter(|&(a, b)| !state.has_edge(a, b))
        .collect();
    if pool.is_empty() {
        return;
    }
    let mut pendant_counts = vec![0usize; used];
    let mut chosen: Vec<(usize, usize)> = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        state: &SimpleGraph,
        n: usize,
        pool: &[(usize, usize)],
        old_edges: &[(usize, usize)],
        start: usize,
        remaining: usize,
        pendant_counts: &mut Vec<usize>,
        chosen: &mut Vec<(usize, usize)>,
        out: &mut Vec<SimpleGraph>,
    ) {
        if remaining == 0 {
            let used = state.n();
            let mut edges = state.edges();
            for (i, &(a, b)) in chosen.iter().enumerate() {
                edges.push((a, used + i));
                edges.push((b, used + i));
            }
            let g = SimpleGraph::new(n, &edges).expect("valid construction");
            if is_edge_min_critical(&g, 2).unwrap_or(false) {
                out.push(g);
            }
            return;
        }
        for i in start..pool.len() {
            let (a, b) = pool[i];
            pendant_counts[a] += 1;
            pendant_counts[b] += 1;
            let spoiled = |v: usize| state.degree(v) > 2 || pendant_counts[v] > 0;
            let dead = old_edges.iter().any(|&(u, v)| {
                (u == a || u == b || v == a || v == b) && spoiled(u) && spoiled(v)
            });
            if !dead {
                chosen.push((a, b));
                dfs(
                    state,
                    n,
                    pool,
                    old_edges,
                    i,
                    remaining - 1,
                    pendant_counts,
                    chosen,
                    out,
                );
                chosen.pop();
            }
            pendant_counts[a] -= 1;
            pendant_counts[b] -= 1;
        }
    }
    dfs(
        state,
        n,
        &pool,
        &old_edges,
        0,
        remaining,
        &mut pendant_counts,
        &mut chosen,
        out,
    );
}

/// The matching-based partition of a graph's vertex set.
#[derive(Debug, Clone)]
pub struct MatchingPartition {
    /// Edge set of a maximum matching.
    pub matching: Vec<(usize, usize)>,
    /// Unmatched vertices; always an independent set.
    pub unmatched: Vec<usize>,
    /// Per matched edge, the endpoint with the larger degree into the
    /// unmatched set (ties broken toward the smaller vertex id).
    pub major: Vec<usize>,
    /// The other endpoint of each matched edge.
    pub minor: Vec<usize>,
}

/// Computes a maximum matching exactly (memoized search over vertex subsets)
/// and derives the partition, asserting the structural facts that maximality
/// forces: the unmatched set is independent; per matched edge at most one
/// endpoint has two or more unmatched neighbours and then the other has
/// none; and at most `|M|` unmatched vertices see both endpoints of some
/// matched edge. Any failed assertion is an invariant violation.
pub fn matching_partition(g: &SimpleGraph) -> Result<MatchingPartition> {
    let matching = maximum_matching(g);
    let n = g.n();
    let mut matched_mask = 0u64;
    for &(u, v) in &matching {
        matched_mask |= 1 << u | 1 << v;
    }
    let unmatched: Vec<usize> = (0..n).filter(|&v| matched_mask >> v & 1 == 0).collect();
    let i_mask: u64 = unmatched.iter().fold(0, |m, &v| m | 1 << v);

    for &y in &unmatched {
        if g.row(y) & i_mask != 0 {
            return Err(Error::InvariantViolation(
                "unmatched set is not independent; matching cannot be maximum".into(),
            ));
        }
    }
    let deg_i = |v: usize| (g.row(v) & i_mask).count_ones() as usize;
    let mut major = Vec::with_capacity(matching.len());
    let mut minor = Vec::with_capacity(matching.len());
    for &(u, v) in &matching {
        let (du, dv) = (deg_i(u), deg_i(v));
        if (du >= 2 && dv >= 1) || (dv >= 2 && du >= 1) {
            return Err(Error::InvariantViolation(format!(
                "matched edge ({u},{v}) has unmatched-degrees ({du},{dv}); \
                 an augmenting path exists, contradicting maximality"
            )));
        }
        if du > dv || (du == dv && u < v) {
            major.push(u);
            minor.push(v);
        } else {
            major.push(v);
            minor.push(u);
        }
    }
    let both_seeing = unmatched
        .iter()
        .filter(|&&y| {
            matching
                .iter()
                .any(|&(u, v)| g.has_edge(y, u) && g.has_edge(y, v))
        })
        .count();
    if both_seeing > matching.len() {
        return Err(Error::InvariantViolation(format!(
            "{both_seeing} unmatched vertices see both endpoints of a matched edge, \
             more than the matching size {}",
            matching.len()
        )));
    }
    Ok(MatchingPartition {
        matching,
        unmatched,
        major,
        minor,
    })
}

/// Exact maximum matching by memoized search over available-vertex subsets.
/// Exponential in principle, fine at the desk scale this crate targets.
pub fn maximum_matching(g: &SimpleGraph) -> Vec<(usize, usize)> {
    let n = g.n();
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut memo: HashMap<u64, usize> = HashMap::new();

    fn best(g: &SimpleGraph, avail: u64, memo: &mut HashMap<u64, usize>) -> usize {
        if avail == 0 {
            return 0;
        }
        if let Some(&v) = memo.get(&avail) {
            return v;
        }
        let v = avail.trailing_zeros() as usize;
        let without_v = avail & !(1u64 << v);
        let mut result = best(g, without_v, memo);
        let mut nbrs = g.row(v) & avail;
        while nbrs != 0 {
            let w = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            let take = 1 + best(g, without_v & !(1u64 << w), memo);
            result = result.max(take);
        }
        memo.insert(avail, result);
        result
    }

    let mut edges = Vec::new();
    let mut avail = full;
    while avail != 0 {
        let size = best(g, avail, &mut memo);
        if size == 0 {
            break;
        }
        let v = avail.trailing_zeros() as usize;
        let without_v = avail & !(1u64 << v);
        if best(g, without_v, &mut memo) == size {
            avail = without_v;
            continue;
        }
        let mut nbrs = g.row(v) & avail;
        let mut taken = false;
        while nbrs != 0 {
            let w = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            if 1 + best(g, without_v & !(1u64 << w), &mut memo) == size {
                edges.push((v.min(w), v.max(w)));
                avail = without_v & !(1u64 << w);
                taken = true;
                break;
            }
        }
        debug_assert!(taken, "some neighbour must realise the optimum");
    }
    edges
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family, is_isomorphic};

    #[test]
    fn criticality_examples() {
        assert!(is_edge_min_critical(&family::cycle(5).unwrap(), 2).unwrap());
        // K_4 minus one edge: the edge between the two degree-3 vertices survives.
        let k4_minus = family::complete(4).unwrap().without_edge(0, 1);
        assert_eq!(k4_minus.min_degree(), 2);
        assert!(!is_edge_min_critical(&k4_minus, 2).unwrap());
        assert!(is_edge_min_critical(&family::complete_bipartite(2, 3).unwrap(), 2).unwrap());
        assert!(is_edge_min_critical(&family::star(5).unwrap(), 1).unwrap());
        assert!(is_edge_min_critical(&family::cycle(4).unwrap(), 1).is_err());
    }

    fn bowtie() -> SimpleGraph {
        SimpleGraph::new(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap()
    }

    #[test]
    fn decompose_k23() {
        let g = family::complete_bipartite(2, 3).unwrap();
        let d = decompose_delta2(&g).unwrap();
        assert_eq!(d.base_cycles.len(), 1);
        assert_eq!(d.base_cycles[0].len(), 4);
        assert!(d.path_additions.is_empty());
        assert_eq!(d.pendant_additions.len(), 1);
        // The pendant hangs off the two vertices of the size-2 class.
        assert_eq!(d.pendant_additions[0].attach, (0, 1));
        let back = rebuild(&d).unwrap();
        assert!(is_isomorphic(&back, &g));
        assert_eq!(back, g); // ids are preserved, so the rebuild is exact
    }

    #[test]
    fn decompose_bowtie() {
        let g = bowtie();
        let d = decompose_delta2(&g).unwrap();
        assert_eq!(d.base_cycles.len(), 1);
        assert_eq!(d.base_cycles[0].len(), 3);
        assert_eq!(d.path_additions.len(), 1);
        let p = &d.path_additions[0];
        assert_eq!(p.vertices.len(), 2);
        assert_eq!(p.attach.0, p.attach.1); // both ends on the shared vertex
        assert!(d.pendant_additions.is_empty());
        assert!(is_isomorphic(&rebuild(&d).unwrap(), &g));
    }

    #[test]
    fn decompose_pure_cycle() {
        let g = family::cycle(7).unwrap();
        let d = decompose_delta2(&g).unwrap();
        assert_eq!(d.base_cycles.len(), 1);
        assert_eq!(d.base_cycles[0].len(), 7);
        assert!(d.path_additions.is_empty() && d.pendant_additions.is_empty());
    }

    #[test]
    fn rebuild_examples() {
        // C_4 plus a pendant at the two non-adjacent vertices gives K_{2,3}.
        let d = EarDecomposition {
            base_cycles: vec![vec![0, 1, 2, 3]],
            path_additions: vec![],
            pendant_additions: vec![PendantAddition {
                vertex: 4,
                attach: (0, 2),
            }],
        };
        let g = rebuild(&d).unwrap();
        assert!(is_isomorphic(&g, &family::complete_bipartite(2, 3).unwrap()));

        // C_3 plus a 2-path glued twice to one vertex is the bowtie.
        let d = EarDecomposition {
            base_cycles: vec![vec![0, 1, 2]],
            path_additions: vec![PathAddition {
                vertices: vec![3, 4],
                attach: (0, 0),
            }],
            pendant_additions: vec![],
        };
        assert!(is_isomorphic(&rebuild(&d).unwrap(), &bowtie()));

        // A bare cycle rebuilds to itself.
        let d = EarDecomposition {
            base_cycles: vec![vec![0, 1, 2]],
            path_additions: vec![],
            pendant_additions: vec![],
        };
        assert_eq!(rebuild(&d).unwrap(), family::cycle(3).unwrap());
    }

    #[test]
    fn rebuild_rejects_bad_attachments() {
        // Pendant on adjacent vertices.
        let d = EarDecomposition {
            base_cycles: vec![vec![0, 1, 2, 3]],
            path_additions: vec![],
            pendant_additions: vec![PendantAddition {
                vertex: 4,
                attach: (0, 1),
            }],
        };
        assert!(matches!(rebuild(&d), Err(Error::Construction(_))));
        // Path glued to two adjacent vertices.
        let d = EarDecomposition {
            base_cycles: vec![vec![0, 1, 2, 3]],
            path_additions: vec![PathAddition {
                vertices: vec![4, 5],
                attach: (0, 1),
            }],
            pendant_additions: vec![],
        };
        assert!(matches!(rebuild(&d), Err(Error::Construction(_))));
    }

    #[test]
    fn generator_delta1() {
        let graphs = generate_emc(4, 1).unwrap();
        assert_eq!(graphs.len(), 2); // K_{1,3} and 2K_2
        for g in &graphs {
            assert!(is_edge_min_critical(g, 1).unwrap());
        }
        // Partition counts: one star forest per partition into parts >= 2.
        for n in 2..=10 {
            assert_eq!(
                generate_emc(n, 1).unwrap().len(),
                partitions_min_part(n, 2).len()
            );
        }
    }

    #[test]
    fn generator_delta2_small_counts() {
        assert_eq!(generate_emc(3, 2).unwrap().len(), 1);
        assert_eq!(generate_emc(4, 2).unwrap().len(), 1);
        let five = generate_emc(5, 2).unwrap();
        assert_eq!(five.len(), 3);
        let expected = [
            family::cycle(5).unwrap(),
            family::complete_bipartite(2, 3).unwrap(),
            bowtie(),
        ];
        for want in &expected {
            assert!(five.iter().any(|g| is_isomorphic(g, want)));
        }
    }

    #[test]
    fn generator_outputs_are_critical_and_distinct() {
        for n in 3..=8 {
            let graphs = generate_emc(n, 2).unwrap();
            let mut keys = std::collections::HashSet::new();
            for g in &graphs {
                assert!(is_edge_min_critical(g, 2).unwrap());
                assert!(keys.insert(canonical_form(g)));
            }
        }
    }

    #[test]
    fn generator_refuses_delta3() {
        assert!(matches!(generate_emc(7, 3), Err(Error::Unsupported(_))));
    }

    #[test]
    fn roundtrip_generated_graphs() {
        for n in 3..=8 {
            for g in generate_emc(n, 2).unwrap() {
                let d = decompose_delta2(&g).unwrap();
                let back = rebuild(&d).unwrap();
                assert!(is_isomorphic(&back, &g), "roundtrip failed for {g:?}");
            }
        }
    }

    /// Brute-force matching oracle: enumerate all matchings recursively.
    fn brute_max_matching_size(g: &SimpleGraph) -> usize {
        fn rec(edges: &[(usize, usize)], used: u64) -> usize {
            if edges.is_empty() {
                return 0;
            }
            let (u, v) = edges[0];
            let rest = &edges[1..];
            let skip = rec(rest, used);
            if used >> u & 1 == 0 && used >> v & 1 == 0 {
                (1 + rec(rest, used | 1 << u | 1 << v)).max(skip)
            } else {
                skip
            }
        }
        rec(&g.edges(), 0)
    }

    #[test]
    fn matching_examples() {
        let c4 = family::cycle(4).unwrap();
        let m = matching_partition(&c4).unwrap();
        assert_eq!(m.matching.len(), 2);
        assert!(m.unmatched.is_empty());

        let star = family::star(5).unwrap(); // K_{1,4}
        let m = matching_partition(&star).unwrap();
        assert_eq!(m.matching.len(), 1);
        assert_eq!(m.unmatched.len(), 3);
        assert_eq!(m.major, vec![0]); // the center carries all edges into I

        let k23 = family::complete_bipartite(2, 3).unwrap();
        let m = matching_partition(&k23).unwrap();
        assert_eq!(m.matching.len(), 2);
        assert_eq!(m.unmatched.len(), 1);
    }

    #[test]
    fn matching_agrees_with_brute_force() {
        // Includes an odd cycle plus chord structures where greedy
        // augmenting fails without blossoms.
        let graphs = [
            family::cycle(5).unwrap(),
            family::cycle(7).unwrap(),
            family::complete(6).unwrap(),
            family::complete_bipartite(3, 4).unwrap(),
            bowtie(),
            SimpleGraph::new(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])
                .unwrap(),
        ];
        for g in &graphs {
            assert_eq!(maximum_matching(g).len(), brute_max_matching_size(g));
        }
    }
}
