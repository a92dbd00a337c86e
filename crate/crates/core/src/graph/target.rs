//! The colour graph: undirected, loops allowed, optional positive rational
//! vertex weights. Weights are exact rationals throughout so that weighted
//! theorem conditions stay decidable.

use num::traits::{One, Zero};
use num::{BigInt, BigRational};

use crate::error::{Error, Result};
use crate::ExactRational;

/// Maximum number of colours; adjacency rows are single 64-bit words.
pub(crate) const MAX_COLORS: usize = 64;

/// An undirected graph on `0..q` with loops allowed and one positive
/// rational activity per vertex (all 1 by default). Immutable after
/// construction. Every vertex must have at least one neighbour, a loop
/// making a vertex its own neighbour.
#[derive(Clone, PartialEq, Eq)]
pub struct TargetGraph {
    q: usize,
    adj: Vec<u64>,
    weights: Vec<ExactRational>,
}

impl TargetGraph {
    /// Builds a target from neighbour bitsets (bit `v` of `adj[v]` set means
    /// a loop). Validates symmetry, the no-isolated-vertex rule, and size.
    pub fn from_rows(adj: Vec<u64>) -> Result<Self> {
        let q = adj.len();
        if q == 0 {
            return Err(Error::Parameter("target graph needs q >= 1".into()));
        }
        if q > MAX_COLORS {
            return Err(Error::Parameter(format!(
                "target on {q} vertices exceeds the supported maximum of {MAX_COLORS}"
            )));
        }
        for (v, &row) in adj.iter().enumerate() {
            if q < 64 && row >> q != 0 {
                return Err(Error::Parameter(format!(
                    "adjacency row {v} has bits beyond q={q}"
                )));
            }
            if row == 0 {
                return Err(Error::Parameter(format!(
                    "vertex {v} is isolated; targets must have no isolated vertices"
                )));
            }
        }
        for u in 0..q {
            for v in u + 1..q {
                if (adj[u] >> v & 1) != (adj[v] >> u & 1) {
                    return Err(Error::Parameter(format!(
                        "adjacency not symmetric at ({u},{v})"
                    )));
                }
            }
        }
        Ok(TargetGraph {
            q,
            adj,
            weights: vec![ExactRational::one(); q],
        })
    }

    /// Convenience constructor from edge pairs; `(v, v)` denotes a loop.
    pub fn from_edges(q: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if q == 0 || q > MAX_COLORS {
            return Err(Error::Parameter(format!("bad target size {q}")));
        }
        let mut adj = vec![0u64; q];
        for &(u, v) in edges {
            if u >= q || v >= q {
                return Err(Error::Parameter(format!(
                    "edge ({u},{v}) out of range for q={q}"
                )));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Self::from_rows(adj)
    }

    /// Replaces the vertex activities. All must be strictly positive.
    pub fn with_weights(mut self, weights: Vec<ExactRational>) -> Result<Self> {
        if weights.len() != self.q {
            return Err(Error::Parameter(format!(
                "expected {} weights, got {}",
                self.q,
                weights.len()
            )));
        }
        if let Some(i) = weights.iter().position(|w| *w <= ExactRational::zero()) {
            return Err(Error::Parameter(format!(
                "weight of vertex {i} must be positive, got {}",
                weights[i]
            )));
        }
        self.weights = weights;
        Ok(self)
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Neighbour bitset of `v` (bit `v` set iff `v` is looped).
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u < self.q && v < self.q && self.adj[u] >> v & 1 == 1
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.adjacent(v, v)
    }

    pub fn loop_count(&self) -> usize {
        (0..self.q).filter(|&v| self.has_loop(v)).count()
    }

    /// Number of non-loop edges.
    pub fn nonloop_edge_count(&self) -> usize {
        (0..self.q)
            .map(|v| (self.adj[v] & !(1 << v)).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Degree with loops counting once: the number of distinct neighbours,
    /// `v` itself included when looped.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.q).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.q).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Sum of degrees over all vertices (= hom(K_2, H)).
    pub fn degree_sum(&self) -> u64 {
        (0..self.q).map(|v| self.degree(v) as u64).sum()
    }

    pub fn weights(&self) -> &[ExactRational] {
        &self.weights
    }

    pub fn weight(&self, v: usize) -> &ExactRational {
        &self.weights[v]
    }

    pub fn has_unit_weights(&self) -> bool {
        self.weights.iter().all(|w| w.is_one())
    }

    /// Weighted degree: the sum of the activities of the distinct
    /// neighbours, the vertex's own activity included once when looped.
    pub fn weighted_degree(&self, v: usize) -> ExactRational {
        let mut sum = ExactRational::zero();
        let mut bits = self.adj[v];
        while bits != 0 {
            let w = bits.trailing_zeros() as usize;
            sum += self.weights[w].clone();
            bits &= bits - 1;
        }
        sum
    }

    pub fn max_weighted_degree(&self) -> ExactRational {
        (0..self.q)
            .map(|v| self.weighted_degree(v))
            .max()
            .expect("q >= 1")
    }

    /// Connected components (loops irrelevant), sorted by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.q];
        let mut comps = Vec::new();
        for s in 0..self.q {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let mut bits = self.adj[u] & !(1 << u);
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
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

    /// True iff H is a fully looped complete graph (every map is valid).
    pub fn is_fully_looped_complete(&self) -> bool {
        let full = if self.q == 64 {
            u64::MAX
        } else {
            (1u64 << self.q) - 1
        };
        self.adj.iter().all(|&row| row == full)
    }

    /// The disjoint union of two targets, classes relabelled consecutively.
    pub fn disjoint_union(&self, other: &TargetGraph) -> Result<TargetGraph> {
        let q = self.q + other.q;
        if q > MAX_COLORS {
            return Err(Error::Parameter(format!("union has {q} > 64 vertices")));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&row| row << self.q));
        let mut weights = self.weights.clone();
        weights.extend_from_slice(&other.weights);
        TargetGraph::from_rows(adj)?.with_weights(weights)
    }

    /// Isomorphism-invariant key by minimising the (loop, edge) bit matrix
    /// over all relabelings. Factorial in q; intended for the small targets
    /// (q <= 8) this crate enumerates.
    pub fn canonical_key(&self) -> Vec<u64> {
        assert!(self.q <= 8, "canonical_key is brute force; q too large");
        let idx: Vec<usize> = (0..self.q).collect();
        let mut best: Option<Vec<u64>> = None;
        permute(&idx, &mut |perm| {
            let mut inv = vec![0usize; self.q];
            for (new, &old) in perm.iter().enumerate() {
                inv[old] = new;
            }
            let mut rows = vec![0u64; self.q];
            for new in 0..self.q {
                let mut bits = self.adj[perm[new]];
                while bits != 0 {
                    let w = bits.trailing_zeros() as usize;
                    rows[new] |= 1 << inv[w];
                    bits &= bits - 1;
                }
            }
            if best.as_ref().map_or(true, |b| rows < *b) {
                best = Some(rows);
            }
        });
        best.expect("q >= 1")
    }

    /// Compact one-line form: adjacency rows of `0`/`1` joined by `/`.
    pub fn to_inline(&self) -> String {
        (0..self.q)
            .map(|u| {
                (0..self.q)
                    .map(|v| if self.adjacent(u, v) { '1' } else { '0' })
                    .collect::<String>()
            })
            .collect::<Vec<_>>()
            .join("/")
    }

    /// Parses the compact inline form, e.g. `"01/11"`.
    pub fn parse_inline(text: &str) -> Result<Self> {
        let text = text.trim();
        let rows: Vec<&str> = text.split('/').collect();
        let q = rows.len();
        let mut adj = vec![0u64; q];
        let mut offset = 0usize;
        for (u, row) in rows.iter().enumerate() {
            if row.len() != q {
                return Err(Error::Format {
                    msg: format!("row {u} has {} entries, expected {q}", row.len()),
                    offset,
                });
            }
            for (v, ch) in row.bytes().enumerate() {
                match ch {
                    b'1' => adj[u] |= 1 << v,
                    b'0' => {}
                    other => {
                        return Err(Error::Format {
                            msg: format!("unexpected byte '{}' in adjacency row", other as char),
                            offset: offset + v,
                        })
                    }
                }
            }
            offset += row.len() + 1;
        }
        Self::from_rows(adj)
    }

    /// Parses the structured document form: a JSON object with fields `q`
    /// (integer or decimal string), `adj` (list of `q` strings of `0`/`1`),
    /// and optional `weights` (list of `q` strings, `"num"` or `"num/den"`).
    pub fn parse_document(text: &str) -> Result<Self> {
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Format {
            msg: format!("invalid JSON: {e}"),
            offset: e.column(),
        })?;
        let obj = value.as_object().ok_or_else(|| Error::Format {
            msg: "target document must be a JSON object".into(),
            offset: 0,
        })?;
        let q = match obj.get("q") {
            Some(serde_json::Value::Number(n)) => n.as_u64().unwrap_or(0) as usize,
            Some(serde_json::Value::String(s)) => s.parse().unwrap_or(0),
            _ => 0,
        };
        let adj = obj
            .get("adj")
            .and_then(|a| a.as_array())
            .ok_or_else(|| Error::Format {
                msg: "missing adj array".into(),
                offset: 0,
            })?;
        if q == 0 || adj.len() != q {
            return Err(Error::Format {
                msg: format!("q={q} does not match {} adjacency rows", adj.len()),
                offset: 0,
            });
        }
        let rows: Vec<String> = adj
            .iter()
            .map(|r| r.as_str().map(str::to_owned))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::Format {
                msg: "adj rows must be strings of 0/1".into(),
                offset: 0,
            })?;
        let target = Self::parse_inline(&rows.join("/"))?;
        match obj.get("weights") {
            None | Some(serde_json::Value::Null) => Ok(target),
            Some(serde_json::Value::Array(ws)) => {
                let parsed: Result<Vec<ExactRational>> = ws
                    .iter()
                    .map(|w| match w {
                        serde_json::Value::String(s) => parse_rational(s),
                        serde_json::Value::Number(n) => parse_rational(&n.to_string()),
                        _ => Err(Error::Format {
                            msg: "weights must be strings like \"2\" or \"3/2\"".into(),
                            offset: 0,
                        }),
                    })
                    .collect();
                target.with_weights(parsed?)
            }
            _ => Err(Error::Format {
                msg: "weights must be an array".into(),
                offset: 0,
            }),
        }
    }

    /// The structured document form of this target.
    pub fn to_document(&self) -> serde_json::Value {
        let rows: Vec<String> = self.to_inline().split('/').map(str::to_owned).collect();
        let mut doc = serde_json::json!({
            "q": self.q.to_string(),
            "adj": rows,
        });
        if !self.has_unit_weights() {
            doc["weights"] = serde_json::Value::Array(
                self.weights
                    .iter()
                    .map(|w| serde_json::Value::String(format_rational(w)))
                    .collect(),
            );
        }
        doc
    }
}

impl std::fmt::Debug for TargetGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "TargetGraph({})", self.to_inline())?;
        if !self.has_unit_weights() {
            let ws: Vec<String> = self.weights.iter().map(format_rational).collect();
            write!(f, " weights [{}]", ws.join(", "))?;
        }
        Ok(())
    }
}

/// Parses `"num"` or `"num/den"` into an exact rational.
pub fn parse_rational(text: &str) -> Result<ExactRational> {
    let text = text.trim();
    let bad = |msg: String| Error::Format { msg, offset: 0 };
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| bad(format!("bad rational numerator in {text:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| bad(format!("bad rational denominator in {text:?}")))?;
    if den.is_zero() {
        return Err(bad(format!("zero denominator in {text:?}")));
    }
    Ok(BigRational::new(num, den))
}

/// Renders a rational as `"num"` or `"num/den"`.
pub fn format_rational(r: &ExactRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn permute(items: &[usize], f: &mut impl FnMut(&[usize])) {
    let mut items = items.to_vec();
    let n = items.len();
    permute_rec(&mut items, n, f);
}

fn permute_rec(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k <= 1 {
        f(items);
        return;
    }
    for i in 0..k {
        items.swap(i, k - 1);
        permute_rec(items, k - 1, f);
        items.swap(i, k - 1);
    }
}

/// `H_ind`: a single edge with a loop on one endpoint (vertex 1, the spec's
/// `w`). H-colorings correspond to independent sets: vertex 0 marks the set.
pub fn h_ind() -> TargetGraph {
    TargetGraph::from_edges(2, &[(0, 1), (1, 1)]).expect("static")
}

/// `H_WR`: the fully looped path on three vertices (Widom-Rowlinson).
pub fn h_wr() -> TargetGraph {
    TargetGraph::from_edges(3, &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)]).expect("static")
}

/// `H(k)`: the k-state hard-core constraint graph on `{0, ..., k}` with
/// `i ~ j` iff `i + j <= k`.
pub fn hard_core(k: usize) -> Result<TargetGraph> {
    if k == 0 {
        return Err(Error::Parameter("hard-core constraint needs k >= 1".into()));
    }
    let q = k + 1;
    let mut edges = Vec::new();
    for i in 0..q {
        for j in i..q {
            if i + j <= k {
                edges.push((i, j));
            }
        }
    }
    TargetGraph::from_edges(q, &edges)
}

/// `K_q^loop`: the fully looped complete graph; every vertex map is valid.
pub fn looped_complete(q: usize) -> Result<TargetGraph> {
    if q == 0 {
        return Err(Error::Parameter("looped complete graph needs q >= 1".into()));
    }
    let mut edges = Vec::new();
    for i in 0..q {
        for j in i..q {
            edges.push((i, j));
        }
    }
    TargetGraph::from_edges(q, &edges)
}

/// `K_q` without loops: proper q-colorings. Needs q >= 2 to avoid an
/// isolated vertex.
pub fn complete_target(q: usize) -> Result<TargetGraph> {
    if q < 2 {
        return Err(Error::Parameter(
            "loopless complete target needs q >= 2".into(),
        ));
    }
    let mut edges = Vec::new();
    for i in 0..q {
        for j in i + 1..q {
            edges.push((i, j));
        }
    }
    TargetGraph::from_edges(q, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_counts_loops_once() {
        let h = h_ind();
        assert_eq!(h.degree(1), 2); // looped vertex w
        assert_eq!(h.degree(0), 1);
        let wr = h_wr();
        assert_eq!(wr.degree(1), 3); // middle: two path neighbours + own loop
        assert_eq!(wr.degree(0), 2);
        let k2 = complete_target(2).unwrap();
        assert_eq!(k2.degree(0), 1);
    }

    #[test]
    fn degree_sum_counts_loops_once_edges_twice() {
        for h in [h_ind(), h_wr(), hard_core(3).unwrap(), looped_complete(4).unwrap()] {
            assert_eq!(
                h.degree_sum() as usize,
                2 * h.nonloop_edge_count() + h.loop_count()
            );
        }
    }

    #[test]
    fn hard_core_1_is_h_ind_up_to_relabeling() {
        let h1 = hard_core(1).unwrap();
        // vertices {0,1}, loop at 0, edge 0-1
        assert!(h1.has_loop(0));
        assert!(!h1.has_loop(1));
        assert!(h1.adjacent(0, 1));
        assert_eq!(h1.canonical_key(), h_ind().canonical_key());
    }

    #[test]
    fn looped_complete_is_total() {
        let k3 = looped_complete(3).unwrap();
        for u in 0..3 {
            for v in 0..3 {
                assert!(k3.adjacent(u, v));
            }
        }
        assert!(k3.is_fully_looped_complete());
        assert!(!h_wr().is_fully_looped_complete());
    }

    #[test]
    fn weighted_degree_examples() {
        let h = h_ind()
            .with_weights(vec![
                ExactRational::from(BigInt::from(1)),
                ExactRational::from(BigInt::from(2)),
            ])
            .unwrap();
        // d_L(w) over N(w) = {u, w}: 1 + 2
        assert_eq!(h.weighted_degree(1), ExactRational::from(BigInt::from(3)));
        let k2 = complete_target(2)
            .unwrap()
            .with_weights(vec![
                BigRational::new(BigInt::from(3), BigInt::from(2)),
                BigRational::new(BigInt::from(1), BigInt::from(2)),
            ])
            .unwrap();
        assert_eq!(
            k2.weighted_degree(0),
            BigRational::new(BigInt::from(1), BigInt::from(2))
        );
    }

    #[test]
    fn unit_weights_reduce_to_degree() {
        for h in [h_ind(), h_wr(), hard_core(4).unwrap()] {
            for v in 0..h.q() {
                assert_eq!(
                    h.weighted_degree(v),
                    ExactRational::from(BigInt::from(h.degree(v) as u64))
                );
            }
        }
    }

    #[test]
    fn inline_roundtrip_and_errors() {
        let h = TargetGraph::parse_inline("01/11").unwrap();
        assert_eq!(h, h_ind());
        assert_eq!(h.to_inline(), "01/11");
        assert!(TargetGraph::parse_inline("0/1").is_err()); // isolated then bad shape
        assert!(TargetGraph::parse_inline("01/1").is_err());
        assert!(TargetGraph::parse_inline("0a/11").is_err());
        assert!(TargetGraph::parse_inline("00/00").is_err()); // isolated vertices
    }

    #[test]
    fn document_roundtrip_with_weights() {
        let text = r#"{"q": "2", "adj": ["01", "11"], "weights": ["1", "3/2"]}"#;
        let h = TargetGraph::parse_document(text).unwrap();
        assert_eq!(
            *h.weight(1),
            BigRational::new(BigInt::from(3), BigInt::from(2))
        );
        let doc = h.to_document();
        let back = TargetGraph::parse_document(&doc.to_string()).unwrap();
        assert_eq!(h, back);
    }

    #[test]
    fn rejects_isolated_and_nonpositive() {
        assert!(TargetGraph::from_edges(2, &[(0, 0)]).is_err());
        assert!(h_ind()
            .with_weights(vec![ExactRational::zero(), ExactRational::one()])
            .is_err());
    }

    #[test]
    fn disjoint_union_components() {
        let h = h_ind().disjoint_union(&complete_target(2).unwrap()).unwrap();
        assert_eq!(h.q(), 4);
        assert_eq!(h.components(), vec![vec![0, 1], vec![2, 3]]);
        assert!(h.adjacent(2, 3));
        assert!(!h.adjacent(1, 2));
    }
}
