//! Exact homomorphism counting.
//!
//! The engine behind [`hom_brute`] and [`z_weighted`] is one generic
//! backtracking count over a [`CountScalar`]: a homomorphism count is the
//! all-ones instantiation, a weighted partition function the rational one.
//! Closed forms for the named families (star, cycle, pinned path, complete
//! bipartite, complete) are provided separately and are cross-checked against
//! the engine in tests. Every fractional-power comparison used by theorem
//! verdicts goes through [`cmp_root_powers`]; no floating point is involved
//! anywhere in this module.

use std::cmp::Ordering;

use num::traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, TargetGraph};
use crate::scalar::{pow, CountScalar};
use crate::{ExactCount, ExactRational};

/// Default cap on the left class size of the complete-bipartite closed form;
/// the tuple sum ranges over `q^a` vectors.
pub const BIPARTITE_CLOSED_FORM_CAP: usize = 6;

/// Exact number of H-colorings of `g`: maps `V(g) -> V(h)` sending edges to
/// adjacent (possibly equal, if looped) colours. The empty graph counts 1.
pub fn hom_brute(g: &SimpleGraph, h: &TargetGraph) -> ExactCount {
    let ones = vec![ExactCount::one(); h.q()];
    weighted_hom(g, h, &ones)
}

/// Exact weighted partition function: the sum over all H-colorings `f` of
/// `prod_v lambda_{f(v)}`, using the activities stored in `h`. With unit
/// weights this equals [`hom_brute`] as a rational.
pub fn z_weighted(g: &SimpleGraph, h: &TargetGraph) -> ExactRational {
    weighted_hom(g, h, h.weights())
}

/// The generic counting core: one scalar per admissible map, each the
/// product of per-vertex activities, summed exactly.
///
/// Backtracks in a fixed vertex order (descending degree, expanding along
/// edges so each vertex follows a coloured neighbour when possible) and
/// filters candidate colours through the adjacency rows of already-coloured
/// neighbours. A vertex with no later neighbour in the order is never
/// branched on: its admissible-activity sum is multiplied in directly.
pub fn weighted_hom<S: CountScalar>(g: &SimpleGraph, h: &TargetGraph, activity: &[S]) -> S {
    assert_eq!(activity.len(), h.q());
    let n = g.n();
    if n == 0 {
        return S::one();
    }
    let order = counting_order(g);
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // earlier[i]: positions j < i adjacent to order[i]; branch[i]: whether
    // some neighbour of order[i] sits at a later position.
    let mut earlier = vec![Vec::new(); n];
    let mut branch = vec![false; n];
    for (i, &v) in order.iter().enumerate() {
        for w in g.neighbors(v) {
            if pos[w] < i {
                earlier[i].push(pos[w]);
            } else {
                branch[i] = true;
            }
        }
    }
    let full = if h.q() == 64 {
        u64::MAX
    } else {
        (1u64 << h.q()) - 1
    };
    let rows: Vec<u64> = (0..h.q()).map(|v| h.row(v)).collect();
    let mut engine = Engine {
        earlier,
        branch,
        rows,
        activity,
        full,
        colors: vec![0usize; n],
        total: S::zero(),
    };
    engine.dfs(0, S::one());
    engine.total
}

struct Engine<'a, S: CountScalar> {
    earlier: Vec<Vec<usize>>,
    branch: Vec<bool>,
    rows: Vec<u64>,
    activity: &'a [S],
    full: u64,
    colors: Vec<usize>,
    total: S,
}

impl<S: CountScalar> Engine<'_, S> {
    fn dfs(&mut self, i: usize, acc: S) {
        if i == self.colors.len() {
            self.total += acc;
            return;
        }
        let mut allowed = self.full;
        for &j in &self.earlier[i] {
            allowed &= self.rows[self.colors[j]];
        }
        if allowed == 0 {
            return;
        }
        if self.branch[i] {
            let mut bits = allowed;
            while bits != 0 {
                let c = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                self.colors[i] = c;
                let mut next = acc.clone();
                next *= self.activity[c].clone();
                self.dfs(i + 1, next);
            }
        } else {
            let mut factor = S::zero();
            let mut bits = allowed;
            while bits != 0 {
                let c = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                factor += self.activity[c].clone();
            }
            let mut next = acc;
            next *= factor;
            self.dfs(i + 1, next);
        }
    }
}

/// Descending-degree order with connected expansion: each next vertex is
/// adjacent to an already-placed one whenever possible.
fn counting_order(g: &SimpleGraph) -> Vec<usize> {
    let n = g.n();
    let mut placed = 0u64;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut frontier: Vec<usize> = (0..n)
            .filter(|&v| placed >> v & 1 == 0 && g.row(v) & placed != 0)
            .collect();
        if frontier.is_empty() {
            frontier = (0..n).filter(|&v| placed >> v & 1 == 0).collect();
        }
        let v = frontier
            .into_iter()
            .max_by_key(|&v| (g.degree(v), usize::MAX - v))
            .expect("n vertices to place");
        order.push(v);
        placed |= 1 << v;
    }
    order
}

/// Closed form for stars: `hom(K_{1,x-1}, H) = sum_v d(v)^(x-1)`, `x >= 2`.
pub fn hom_star(x: u64, h: &TargetGraph) -> Result<ExactCount> {
    if x < 2 {
        return Err(Error::Parameter(format!("star closed form needs x >= 2, got {x}")));
    }
    let mut total = ExactCount::zero();
    for v in 0..h.q() {
        total += pow(&ExactCount::from(h.degree(v) as u64), x - 1);
    }
    Ok(total)
}

/// Weighted star closed form: `Z(K_{1,x-1}) = sum_v lambda_v d_L(v)^(x-1)`,
/// the star formula with the degree replaced by the weighted degree.
pub fn z_star(x: u64, h: &TargetGraph) -> Result<ExactRational> {
    if x < 2 {
        return Err(Error::Parameter(format!("star closed form needs x >= 2, got {x}")));
    }
    let mut total = ExactRational::zero();
    for v in 0..h.q() {
        let mut term = h.weight(v).clone();
        term *= pow(&h.weighted_degree(v), x - 1);
        total += term;
    }
    Ok(total)
}

/// 0/1 adjacency matrix of `h` over exact integers.
pub fn adjacency_matrix(h: &TargetGraph) -> Vec<Vec<ExactCount>> {
    (0..h.q())
        .map(|u| {
            (0..h.q())
                .map(|v| {
                    if h.adjacent(u, v) {
                        ExactCount::one()
                    } else {
                        ExactCount::zero()
                    }
                })
                .collect()
        })
        .collect()
}

fn mat_mul(a: &[Vec<ExactCount>], b: &[Vec<ExactCount>]) -> Vec<Vec<ExactCount>> {
    let n = a.len();
    let mut out = vec![vec![ExactCount::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

/// `m^e` by repeated squaring; `e = 0` gives the identity.
pub fn mat_pow(m: &[Vec<ExactCount>], mut e: u64) -> Vec<Vec<ExactCount>> {
    let n = m.len();
    let mut result: Vec<Vec<ExactCount>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { ExactCount::one() } else { ExactCount::zero() })
                .collect()
        })
        .collect();
    let mut base = m.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            result = mat_mul(&result, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mat_mul(&base, &base);
        }
    }
    result
}

/// `A^(k-1)`, whose `(u, v)` entry counts H-colorings of the k-vertex path
/// pinned to colour `u` at one end and `v` at the other. `k >= 1`.
pub fn path_power_matrix(k: u64, h: &TargetGraph) -> Result<Vec<Vec<ExactCount>>> {
    if k < 1 {
        return Err(Error::Parameter("path needs k >= 1 vertices".into()));
    }
    Ok(mat_pow(&adjacency_matrix(h), k - 1))
}

/// Closed form for cycles: `hom(C_k, H) = Tr A^k`, `k >= 3`.
pub fn hom_cycle(k: u64, h: &TargetGraph) -> Result<ExactCount> {
    if k < 3 {
        return Err(Error::Parameter(format!("cycle closed form needs k >= 3, got {k}")));
    }
    let m = mat_pow(&adjacency_matrix(h), k);
    let mut trace = ExactCount::zero();
    for (i, row) in m.iter().enumerate() {
        trace += row[i].clone();
    }
    Ok(trace)
}

/// Pinned-path count: H-colorings of the path on `k >= 2` vertices whose
/// first vertex maps to `u` and last to `v`; the `(u, v)` entry of `A^(k-1)`.
pub fn hom_path_pinned(k: u64, h: &TargetGraph, u: usize, v: usize) -> Result<ExactCount> {
    if k < 2 {
        return Err(Error::Parameter(format!("pinned path needs k >= 2, got {k}")));
    }
    if u >= h.q() || v >= h.q() {
        return Err(Error::Parameter(format!(
            "pinned colours ({u},{v}) out of range for q={}",
            h.q()
        )));
    }
    Ok(path_power_matrix(k, h)?[u][v].clone())
}

/// Total path count `hom(P_k, H)`: the sum of all entries of `A^(k-1)`.
pub fn hom_path(k: u64, h: &TargetGraph) -> Result<ExactCount> {
    let m = path_power_matrix(k, h)?;
    let mut total = ExactCount::zero();
    for row in &m {
        for entry in row {
            total += entry.clone();
        }
    }
    Ok(total)
}

/// Closed form for complete bipartite graphs:
/// `hom(K_{a,b}, H) = sum over a-tuples t of |common neighbourhood(t)|^b`.
///
/// The sum ranges over `q^a` ordered tuples, so `a` is capped (default
/// [`BIPARTITE_CLOSED_FORM_CAP`]); above the cap a resource error advises
/// falling back to [`hom_brute`].
pub fn hom_complete_bipartite(a: usize, b: u64, h: &TargetGraph) -> Result<ExactCount> {
    hom_complete_bipartite_capped(a, b, h, BIPARTITE_CLOSED_FORM_CAP)
}

/// [`hom_complete_bipartite`] with an explicit cap on `a`.
pub fn hom_complete_bipartite_capped(
    a: usize,
    b: u64,
    h: &TargetGraph,
    cap: usize,
) -> Result<ExactCount> {
    if a < 1 || b < 1 {
        return Err(Error::Parameter(
            "complete bipartite closed form needs a, b >= 1".into(),
        ));
    }
    if a > cap {
        return Err(Error::Resource(format!(
            "complete-bipartite closed form sums over q^a tuples and a={a} exceeds the cap {cap}; \
             compute hom_brute on the explicit graph instead"
        )));
    }
    let full = if h.q() == 64 {
        u64::MAX
    } else {
        (1u64 << h.q()) - 1
    };
    // DFS over ordered a-tuples, carrying the common neighbourhood.
    fn rec(depth: usize, a: usize, common: u64, h: &TargetGraph, b: u64, total: &mut ExactCount) {
        if depth == a {
            let size = common.count_ones() as u64;
            *total += pow(&ExactCount::from(size), b);
            return;
        }
        for v in 0..h.q() {
            rec(depth + 1, a, common & h.row(v), h, b, total);
        }
    }
    let mut total = ExactCount::zero();
    rec(0, a, full, h, b, &mut total);
    Ok(total)
}

/// `hom(K_k, H)`: ordered k-tuples of pairwise adjacent colours (a colour
/// may repeat only when looped). `k >= 1`. Beyond the clique capacity of the
/// target the count is 0 unless loops allow repeats. Memoised on the
/// admissible-colour set so large `k` against looped targets stays cheap.
pub fn hom_complete(k: usize, h: &TargetGraph) -> Result<ExactCount> {
    if k < 1 {
        return Err(Error::Parameter("complete closed form needs k >= 1".into()));
    }
    let full = if h.q() == 64 {
        u64::MAX
    } else {
        (1u64 << h.q()) - 1
    };
    fn rec(
        remaining: usize,
        allowed: u64,
        h: &TargetGraph,
        memo: &mut std::collections::HashMap<(usize, u64), ExactCount>,
    ) -> ExactCount {
        if remaining == 0 {
            return ExactCount::one();
        }
        if allowed == 0 {
            return ExactCount::zero();
        }
        if let Some(hit) = memo.get(&(remaining, allowed)) {
            return hit.clone();
        }
        let mut total = ExactCount::zero();
        let mut bits = allowed;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            total += rec(remaining - 1, allowed & h.row(v), h, memo);
        }
        memo.insert((remaining, allowed), total.clone());
        total
    }
    let mut memo = std::collections::HashMap::new();
    Ok(rec(k, full, h, &mut memo))
}

/// Exact ordering of `a^(1/p)` vs `b^(1/q)`, decided as `a^q` vs `b^p` in
/// integer arithmetic. Requires `p, q >= 1`.
pub fn cmp_root_powers(a: &ExactCount, p: u64, b: &ExactCount, q: u64) -> Ordering {
    assert!(p >= 1 && q >= 1, "roots must be >= 1");
    pow(a, q).cmp(&pow(b, p))
}

/// Exact ordering of `a^(n/p)` vs the plain value `c`, decided as `a^n` vs
/// `c^p`. Requires `p, n >= 1`.
pub fn cmp_root_power_vs_value(a: &ExactCount, n: u64, p: u64, c: &ExactCount) -> Ordering {
    assert!(p >= 1 && n >= 1, "exponents must be >= 1");
    pow(a, n).cmp(&pow(c, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family, TargetGraph};
    use num::BigInt;

    /// Independent oracle: enumerate all q^n maps and test every edge.
    fn naive_hom(g: &SimpleGraph, h: &TargetGraph) -> ExactCount {
        let n = g.n();
        let q = h.q();
        let edges = g.edges();
        let mut assign = vec![0usize; n];
        let mut count = ExactCount::zero();
        loop {
            if edges.iter().all(|&(u, v)| h.adjacent(assign[u], assign[v])) {
                count += ExactCount::one();
            }
            let mut i = 0;
            loop {
                if i == n {
                    return count;
                }
                assign[i] += 1;
                if assign[i] < q {
                    break;
                }
                assign[i] = 0;
                i += 1;
            }
        }
    }

    /// Independent weighted oracle over all q^n maps.
    fn naive_z(g: &SimpleGraph, h: &TargetGraph) -> ExactRational {
        let n = g.n();
        let q = h.q();
        let edges = g.edges();
        let mut assign = vec![0usize; n];
        let mut total = ExactRational::zero();
        loop {
            if edges.iter().all(|&(u, v)| h.adjacent(assign[u], assign[v])) {
                let mut w = ExactRational::one();
                for &c in &assign {
                    w *= h.weight(c).clone();
                }
                total += w;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return total;
                }
                assign[i] += 1;
                if assign[i] < q {
                    break;
                }
                assign[i] = 0;
                i += 1;
            }
        }
    }

    fn big(v: u64) -> ExactCount {
        ExactCount::from(v)
    }

    #[test]
    fn brute_examples_from_first_principles() {
        let h_ind = family::h_ind();
        let k2 = family::path(2).unwrap();
        assert_eq!(naive_hom(&k2, &h_ind), big(3));
        assert_eq!(hom_brute(&k2, &h_ind), big(3));

        let c4 = family::cycle(4).unwrap();
        let k2t = family::complete_target(2).unwrap();
        assert_eq!(hom_brute(&c4, &k2t), big(2));

        let c3 = family::cycle(3).unwrap();
        let wr = family::h_wr();
        assert_eq!(naive_hom(&c3, &wr), big(15));
        assert_eq!(hom_brute(&c3, &wr), big(15));
    }

    #[test]
    fn fully_looped_counts_all_maps() {
        let k3loop = family::looped_complete(3).unwrap();
        for g in [
            family::cycle(5).unwrap(),
            family::star(4).unwrap(),
            family::complete(4).unwrap(),
        ] {
            assert_eq!(hom_brute(&g, &k3loop), pow(&big(3), g.n() as u64));
        }
    }

    #[test]
    fn empty_graph_counts_one() {
        let g = SimpleGraph::new(0, &[]).unwrap();
        assert_eq!(hom_brute(&g, &family::h_wr()), big(1));
    }

    #[test]
    fn engine_matches_oracle_on_assorted_pairs() {
        let graphs = [
            family::path(5).unwrap(),
            family::cycle(6).unwrap(),
            family::complete_bipartite(2, 3).unwrap(),
            family::complete(4).unwrap(),
            family::disjoint_union(&[family::cycle(3).unwrap(), family::path(3).unwrap()])
                .unwrap(),
        ];
        let targets = [
            family::h_ind(),
            family::h_wr(),
            family::hard_core(2).unwrap(),
            family::complete_target(3).unwrap(),
            family::looped_complete(2).unwrap(),
        ];
        for g in &graphs {
            for h in &targets {
                assert_eq!(hom_brute(g, h), naive_hom(g, h), "g={g:?} h={h:?}");
            }
        }
    }

    #[test]
    fn weighted_k2_into_h_ind() {
        let h = family::h_ind()
            .with_weights(vec![
                ExactRational::from(BigInt::from(1)),
                ExactRational::from(BigInt::from(2)),
            ])
            .unwrap();
        let k2 = family::path(2).unwrap();
        // maps (u,w),(w,u),(w,w) weigh 2,2,4
        assert_eq!(z_weighted(&k2, &h), ExactRational::from(BigInt::from(8)));
        assert_eq!(z_weighted(&k2, &h), naive_z(&k2, &h));
    }

    #[test]
    fn weighted_single_vertex_sums_activities() {
        let h = family::h_wr()
            .with_weights(vec![
                ExactRational::new(BigInt::from(1), BigInt::from(2)),
                ExactRational::from(BigInt::from(2)),
                ExactRational::new(BigInt::from(3), BigInt::from(4)),
            ])
            .unwrap();
        let k1 = family::path(1).unwrap();
        assert_eq!(
            z_weighted(&k1, &h),
            ExactRational::new(BigInt::from(13), BigInt::from(4))
        );
    }

    #[test]
    fn unit_weights_equal_brute() {
        let g = family::cycle(5).unwrap();
        for h in [family::h_ind(), family::hard_core(3).unwrap()] {
            let z = z_weighted(&g, &h);
            assert!(z.is_integer());
            assert_eq!(z.to_integer().to_biguint().unwrap(), hom_brute(&g, &h));
        }
    }

    #[test]
    fn star_closed_form() {
        let h_ind = family::h_ind();
        assert_eq!(hom_star(4, &h_ind).unwrap(), big(9)); // 1 + 2^3
        assert_eq!(hom_star(2, &h_ind).unwrap(), big(3));
        assert_eq!(
            hom_star(4, &h_ind).unwrap(),
            hom_brute(&family::star(4).unwrap(), &h_ind)
        );
        let k3loop = family::looped_complete(3).unwrap();
        for x in 2..7 {
            assert_eq!(hom_star(x, &k3loop).unwrap(), pow(&big(3), x));
        }
        assert!(hom_star(1, &h_ind).is_err());
    }

    #[test]
    fn cycle_closed_form() {
        let h_ind = family::h_ind();
        assert_eq!(hom_cycle(3, &h_ind).unwrap(), big(4));
        assert_eq!(hom_cycle(4, &h_ind).unwrap(), big(7));
        assert!(hom_cycle(2, &h_ind).is_err());
        for k in 3..8 {
            assert_eq!(
                hom_cycle(k, &h_ind).unwrap(),
                hom_brute(&family::cycle(k as usize).unwrap(), &h_ind)
            );
        }
    }

    #[test]
    fn tie_target_from_text() {
        // 8 looped vertices plus 4 disjoint edges: hom(C3) = 8, hom(C4) = 16.
        let mut h = family::looped_complete(1).unwrap();
        for _ in 0..7 {
            h = h.disjoint_union(&family::looped_complete(1).unwrap()).unwrap();
        }
        for _ in 0..4 {
            h = h.disjoint_union(&family::complete_target(2).unwrap()).unwrap();
        }
        assert_eq!(hom_cycle(3, &h).unwrap(), big(8));
        assert_eq!(hom_cycle(4, &h).unwrap(), big(16));
        assert_eq!(
            cmp_root_powers(&big(8), 3, &big(16), 4),
            Ordering::Equal
        );
    }

    #[test]
    fn pinned_path_examples() {
        let h_ind = family::h_ind();
        // (4, H_ind, w, w) with w = looped vertex 1: (A^3)_{11} = 3
        assert_eq!(hom_path_pinned(4, &h_ind, 1, 1).unwrap(), big(3));
        let k2loop = family::looped_complete(2).unwrap();
        for u in 0..2 {
            for v in 0..2 {
                assert_eq!(hom_path_pinned(4, &k2loop, u, v).unwrap(), big(4));
            }
        }
        // k = 2: adjacency indicator
        let wr = family::h_wr();
        for u in 0..3 {
            for v in 0..3 {
                let expect = if wr.adjacent(u, v) { 1 } else { 0 };
                assert_eq!(hom_path_pinned(2, &wr, u, v).unwrap(), big(expect));
            }
        }
        assert!(hom_path_pinned(4, &h_ind, 2, 0).is_err());
    }

    #[test]
    fn pinned_path_matches_pinned_enumeration() {
        // Independent oracle: enumerate maps of the path with ends fixed.
        let targets = [family::h_wr(), family::hard_core(2).unwrap()];
        for h in &targets {
            for k in 2..6u64 {
                let g = family::path(k as usize).unwrap();
                for u in 0..h.q() {
                    for v in 0..h.q() {
                        let mut count = 0u64;
                        let interior = k as usize - 2;
                        let mut assign = vec![0usize; interior];
                        loop {
                            let mut full = vec![u];
                            full.extend_from_slice(&assign);
                            full.push(v);
                            if g.edges().iter().all(|&(a, b)| h.adjacent(full[a], full[b])) {
                                count += 1;
                            }
                            let mut i = 0;
                            loop {
                                if i == interior {
                                    break;
                                }
                                assign[i] += 1;
                                if assign[i] < h.q() {
                                    break;
                                }
                                assign[i] = 0;
                                i += 1;
                            }
                            if i == interior {
                                break;
                            }
                        }
                        assert_eq!(
                            hom_path_pinned(k, h, u, v).unwrap(),
                            big(count),
                            "k={k} u={u} v={v} h={h:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn path_total_matches_brute() {
        let wr = family::h_wr();
        for k in 1..7u64 {
            assert_eq!(
                hom_path(k, &wr).unwrap(),
                hom_brute(&family::path(k as usize).unwrap(), &wr)
            );
        }
    }

    #[test]
    fn complete_bipartite_closed_form() {
        let h_ind = family::h_ind();
        assert_eq!(hom_complete_bipartite(2, 4, &h_ind).unwrap(), big(19));
        assert_eq!(
            hom_complete_bipartite(2, 4, &h_ind).unwrap(),
            hom_brute(&family::complete_bipartite(2, 4).unwrap(), &h_ind)
        );
        // (1, x-1) agrees with the star closed form
        for x in 2..7u64 {
            assert_eq!(
                hom_complete_bipartite(1, x - 1, &h_ind).unwrap(),
                hom_star(x, &h_ind).unwrap()
            );
        }
        let k2 = family::complete_target(2).unwrap();
        assert_eq!(hom_complete_bipartite(2, 2, &k2).unwrap(), big(2));
        assert_eq!(
            hom_complete_bipartite(2, 2, &k2).unwrap(),
            hom_cycle(4, &k2).unwrap()
        );
        assert!(matches!(
            hom_complete_bipartite(7, 1, &h_ind),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn complete_closed_form() {
        let h_ind = family::h_ind();
        assert_eq!(hom_complete(2, &h_ind).unwrap(), big(h_ind.degree_sum()));
        assert_eq!(hom_complete(3, &h_ind).unwrap(), big(4));
        let k3 = family::complete_target(3).unwrap();
        assert_eq!(hom_complete(3, &k3).unwrap(), big(6));
        for k in 1..5 {
            assert_eq!(
                hom_complete(k, &family::h_wr()).unwrap(),
                hom_brute(&family::complete(k).unwrap(), &family::h_wr())
            );
        }
    }

    #[test]
    fn root_power_comparisons() {
        assert_eq!(cmp_root_powers(&big(4), 3, &big(13), 4), Ordering::Less);
        assert_eq!(cmp_root_powers(&big(8), 3, &big(16), 4), Ordering::Equal);
        assert_eq!(cmp_root_powers(&big(9), 2, &big(26), 3), Ordering::Greater);
        assert_eq!(cmp_root_powers(&big(7), 5, &big(7), 5), Ordering::Equal);
        assert_eq!(
            cmp_root_power_vs_value(&big(4), 12, 3, &big(255)),
            Ordering::Greater
        );
        assert_eq!(
            cmp_root_power_vs_value(&big(4), 12, 3, &big(256)),
            Ordering::Equal
        );
    }

    #[test]
    fn multiplicativity_over_disjoint_union() {
        let g1 = family::cycle(4).unwrap();
        let g2 = family::star(3).unwrap();
        let both = family::disjoint_union(&[g1.clone(), g2.clone()]).unwrap();
        for h in [family::h_ind(), family::h_wr()] {
            assert_eq!(hom_brute(&both, &h), hom_brute(&g1, &h) * hom_brute(&g2, &h));
        }
    }

    #[test]
    fn component_additivity_for_connected_g() {
        let g = family::cycle(5).unwrap();
        let h1 = family::h_ind();
        let h2 = family::complete_target(2).unwrap();
        let union = h1.disjoint_union(&h2).unwrap();
        assert_eq!(
            hom_brute(&g, &union),
            hom_brute(&g, &h1) + hom_brute(&g, &h2)
        );
    }
}
