//! Canonical forms for simple graphs by iterated degree refinement plus
//! branch-and-bound over automorphism-reduced labelings.
//!
//! The canonical key of a graph is the lexicographically smallest packed
//! upper-triangle bit string over the labelings visited by an
//! individualization-refinement search. Refinement and target-cell selection
//! depend only on the colour structure, so the visited labeling set (and
//! hence the minimum) is an isomorphism invariant, and automorphisms
//! discovered from equal leaves are used to skip branches known to repeat.
//! Built for the desk scale this crate works at (n <= ~16), not for large or
//! adversarial graphs.

use super::simple::SimpleGraph;

/// Total-order key equal for isomorphic graphs and distinct otherwise.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn bytes(&self) -> &[u8] {
        &self.0
    }
}

impl std::fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CanonicalForm(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

/// Canonical key of `g`.
pub fn canonical_form(g: &SimpleGraph) -> CanonicalForm {
    Searcher::run(g).0
}

/// `g` relabelled into its canonical labeling, so that
/// `write_graph6(&canonical_graph(g))` is a canonical string.
pub fn canonical_graph(g: &SimpleGraph) -> SimpleGraph {
    let (_, perm) = Searcher::run(g);
    g.relabelled(&perm)
}

/// Isomorphism test via cheap invariants then canonical keys.
pub fn is_isomorphic(a: &SimpleGraph, b: &SimpleGraph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    if a.degree_sequence() != b.degree_sequence() {
        return false;
    }
    canonical_form(a) == canonical_form(b)
}

const MAX_STORED_AUTOMORPHISMS: usize = 64;

struct Searcher<'a> {
    g: &'a SimpleGraph,
    n: usize,
    best_key: Option<Vec<u8>>,
    best_perm: Vec<usize>,
    autos: Vec<Vec<usize>>,
}

impl<'a> Searcher<'a> {
    fn run(g: &'a SimpleGraph) -> (CanonicalForm, Vec<usize>) {
        let n = g.n();
        let mut s = Searcher {
            g,
            n,
            best_key: None,
            best_perm: (0..n).collect(),
            autos: Vec::new(),
        };
        let mut colors: Vec<u32> = vec![0; n];
        s.refine(&mut colors);
        let mut fixed = Vec::new();
        s.recurse(&colors, &mut fixed);
        let mut bytes = Vec::with_capacity(2 + n * n / 16 + 1);
        bytes.push((n >> 8) as u8);
        bytes.push((n & 0xff) as u8);
        bytes.extend_from_slice(&s.best_key.unwrap_or_default());
        (CanonicalForm(bytes), s.best_perm)
    }

    /// Equitable refinement: repeatedly re-rank vertices by
    /// (current colour, sorted neighbour colours) until the class count is
    /// stable. Rank order is derived from the signatures alone, so it is
    /// identical across isomorphic graphs.
    fn refine(&self, colors: &mut [u32]) {
        let n = self.n;
        if n == 0 {
            return;
        }
        let mut classes = count_classes(colors);
        loop {
            let mut sigs: Vec<(u32, Vec<u32>, usize)> = (0..n)
                .map(|v| {
                    let mut nb = Vec::new();
                    let mut bits = self.g.row(v);
                    while bits != 0 {
                        nb.push(colors[bits.trailing_zeros() as usize]);
                        bits &= bits - 1;
                    }
                    nb.sort_unstable();
                    (colors[v], nb, v)
                })
                .collect();
            sigs.sort_unstable();
            let mut next = 0u32;
            for i in 0..n {
                if i > 0 && (sigs[i].0, &sigs[i].1) != (sigs[i - 1].0, &sigs[i - 1].1) {
                    next += 1;
                }
                colors[sigs[i].2] = next;
            }
            let new_classes = next as usize + 1;
            if new_classes == classes {
                return;
            }
            classes = new_classes;
        }
    }

    fn recurse(&mut self, colors: &[u32], fixed: &mut Vec<usize>) {
        let n = self.n;
        let mut sizes = vec![0usize; n.max(1)];
        for &c in colors {
            sizes[c as usize] += 1;
        }
        // Target cell: smallest non-singleton class, ties to the smallest
        // colour. All-singleton means we are at a leaf.
        let target = (0..n)
            .filter(|&c| sizes[c] >= 2)
            .min_by_key(|&c| (sizes[c], c));
        let Some(target) = target else {
            self.visit_leaf(colors);
            return;
        };
        let target = target as u32;
        let candidates: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let mut processed: Vec<usize> = Vec::new();
        for &v in &candidates {
            if !processed.is_empty() && self.in_processed_orbit(v, &processed, fixed) {
                continue;
            }
            processed.push(v);
            let mut child: Vec<u32> = colors
                .iter()
                .map(|&c| if c > target { c + 1 } else { c })
                .collect();
            for u in 0..n {
                if colors[u] == target && u != v {
                    child[u] = target + 1;
                }
            }
            self.refine(&mut child);
            fixed.push(v);
            self.recurse(&child, fixed);
            fixed.pop();
        }
    }

    /// True when a discovered automorphism fixing every vertex of `fixed`
    /// pointwise maps `v` into the orbit of an already-processed candidate.
    fn in_processed_orbit(&self, v: usize, processed: &[usize], fixed: &[usize]) -> bool {
        let n = self.n;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for auto in &self.autos {
            if fixed.iter().all(|&f| auto[f] == f) {
                any = true;
                for u in 0..n {
                    let (a, b) = (find(&mut parent, u), find(&mut parent, auto[u]));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        processed.iter().any(|&p| find(&mut parent, p) == rv)
    }

    fn visit_leaf(&mut self, colors: &[u32]) {
        let n = self.n;
        let mut perm: Vec<usize> = (0..n).collect();
        perm.sort_unstable_by_key(|&v| colors[v]);
        let key = self.pack_key(&perm);
        match &self.best_key {
            None => {
                self.best_key = Some(key);
                self.best_perm = perm;
            }
            Some(best) => match key.cmp(best) {
                std::cmp::Ordering::Less => {
                    self.best_key = Some(key);
                    self.best_perm = perm;
                }
                std::cmp::Ordering::Equal => {
                    if self.autos.len() < MAX_STORED_AUTOMORPHISMS {
                        let mut auto = vec![0usize; n];
                        let mut identity = true;
                        for i in 0..n {
                            auto[self.best_perm[i]] = perm[i];
                            identity &= self.best_perm[i] == perm[i];
                        }
                        if !identity {
                            self.autos.push(auto);
                        }
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }

    /// Strictly-upper triangle of the relabelled adjacency, row-major,
    /// packed MSB-first so byte-wise comparison is bit-string comparison.
    fn pack_key(&self, perm: &[usize]) -> Vec<u8> {
        let n = self.n;
        let nbits = n * n.saturating_sub(1) / 2;
        let mut out = vec![0u8; nbits.div_ceil(8)];
        let mut bit = 0usize;
        for i in 0..n {
            for j in i + 1..n {
                if self.g.has_edge(perm[i], perm[j]) {
                    out[bit / 8] |= 1 << (7 - bit % 8);
                }
                bit += 1;
            }
        }
        out
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut seen = std::collections::HashSet::new();
    for &c in colors {
        seen.insert(c);
    }
    seen.len().max(1)
}
