//! Classification of a target graph into the extremal regimes that decide
//! which graph family maximises its colouring counts.
//!
//! Every verdict here is produced by exact integer comparisons and is
//! recorded together with the comparison that produced it. The one exception
//! is [`path_threshold`], which estimates spectral data in floating point;
//! it is labelled approximate everywhere and accompanied by exact spot
//! checks.

use std::cmp::Ordering;

use num::traits::Zero;

use crate::count::{
    adjacency_matrix, cmp_root_powers, hom_cycle, mat_pow, path_power_matrix,
};
use crate::error::{Error, Result};
use crate::graph::TargetGraph;
use crate::scalar::pow;
use crate::ExactCount;

/// Cap on the tuple arity of [`s_delta`]; the scan ranges over `q^delta`
/// tuples.
pub const S_DELTA_CAP: usize = 6;

/// Iteration guard for the star-threshold search. The search provably
/// terminates whenever its precondition holds, so hitting the cap is an
/// internal error, not an input error.
const N0_ITERATION_CAP: u64 = 10_000;

/// One recorded comparison: `lhs op rhs`, with `exact` false only for
/// floating-point estimates.
#[derive(Debug, Clone)]
pub struct ComparisonRecord {
    pub label: String,
    pub lhs: String,
    pub rhs: String,
    pub op: Ordering,
    pub exact: bool,
}

impl ComparisonRecord {
    fn exact(
        label: &str,
        lhs: impl std::fmt::Display,
        rhs: impl std::fmt::Display,
        op: Ordering,
    ) -> Self {
        ComparisonRecord {
            label: label.to_string(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            op,
            exact: true,
        }
    }

    pub fn op_str(&self) -> &'static str {
        match self.op {
            Ordering::Less => "<",
            Ordering::Equal => "=",
            Ordering::Greater => ">",
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "label": self.label,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "op": self.op_str(),
            "exact": self.exact,
        })
    }
}

/// Exact three-way ordering of `sum_v d(v)` against `Delta^2`.
pub fn degree_condition(h: &TargetGraph) -> Ordering {
    let delta = h.max_degree() as u64;
    h.degree_sum().cmp(&(delta * delta))
}

/// Smallest integer `n0 >= 3` at which the normalised star count overtakes
/// the perfect matching: `(sum d)^n0 < (sum d^(n0-1))^2`, decided exactly.
/// Also reports whether the previous step is an exact tie,
/// `(sum d)^(n0-1) = (sum d^(n0-2))^2`.
///
/// Requires `sum d < Delta^2`; otherwise the overtake never happens and the
/// matching-regime bound applies instead.
pub fn compute_n0(h: &TargetGraph) -> Result<(u64, bool)> {
    if degree_condition(h) != Ordering::Less {
        return Err(Error::Regime(
            "star threshold is defined only when the degree sum is below the squared max degree; \
             here the perfect-matching regime applies"
                .into(),
        ));
    }
    let sum_d = ExactCount::from(h.degree_sum());
    let mut x = 3u64;
    loop {
        if x > N0_ITERATION_CAP {
            return Err(Error::Internal(format!(
                "star threshold search exceeded {N0_ITERATION_CAP} iterations"
            )));
        }
        let lhs = pow(&sum_d, x);
        let rhs = pow(&degree_power_sum(h, x - 1), 2);
        if lhs < rhs {
            let boundary = pow(&sum_d, x - 1) == pow(&degree_power_sum(h, x - 2), 2);
            return Ok((x, boundary));
        }
        x += 1;
    }
}

/// `sum_v d(v)^e` over exact integers.
fn degree_power_sum(h: &TargetGraph, e: u64) -> ExactCount {
    let mut total = ExactCount::zero();
    for v in 0..h.q() {
        total += pow(&ExactCount::from(h.degree(v) as u64), e);
    }
    total
}

/// The minimum-degree-2 regime split.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Delta2Regime {
    /// `max{hom(C3)^(1/3), hom(C4)^(1/4)} >= Delta`: cycle unions win;
    /// carries the exact ordering of the two cycle roots.
    Cycles { c3_vs_c4: Ordering },
    /// Both cycle roots are strictly below `Delta`: the bipartite star
    /// `K_{2,n-2}` wins for large n.
    Bipartite,
}

/// Decides the minimum-degree-2 regime by comparing `hom(C3)` with `Delta^3`
/// and `hom(C4)` with `Delta^4` exactly. Exact ties with `Delta` count as
/// the cycles regime.
pub fn regime_delta2(h: &TargetGraph) -> Delta2Regime {
    let delta = ExactCount::from(h.max_degree() as u64);
    let c3 = hom_cycle(3, h).expect("k=3");
    let c4 = hom_cycle(4, h).expect("k=4");
    if c3 < pow(&delta, 3) && c4 < pow(&delta, 4) {
        Delta2Regime::Bipartite
    } else {
        Delta2Regime::Cycles {
            c3_vs_c4: cmp_root_powers(&c3, 3, &c4, 4),
        }
    }
}

/// Counts the ordered `delta`-tuples of colours whose common neighbourhood
/// has the maximum possible size `Delta`; optionally returns the tuples.
/// Never zero: the constant tuple at a max-degree vertex always qualifies.
pub fn s_delta(
    h: &TargetGraph,
    delta: usize,
    enumerate: bool,
) -> Result<(ExactCount, Option<Vec<Vec<usize>>>)> {
    if delta < 1 {
        return Err(Error::Parameter("tuple arity must be >= 1".into()));
    }
    if delta > S_DELTA_CAP {
        return Err(Error::Resource(format!(
            "common-neighbourhood scan ranges over q^delta tuples and delta={delta} \
             exceeds the cap {S_DELTA_CAP}"
        )));
    }
    let cap_degree = h.max_degree() as u32;
    let full = if h.q() == 64 {
        u64::MAX
    } else {
        (1u64 << h.q()) - 1
    };
    let mut count = ExactCount::zero();
    let mut tuples = if enumerate { Some(Vec::new()) } else { None };
    let mut chosen = vec![0usize; delta];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        depth: usize,
        delta: usize,
        common: u64,
        h: &TargetGraph,
        cap_degree: u32,
        chosen: &mut Vec<usize>,
        count: &mut ExactCount,
        tuples: &mut Option<Vec<Vec<usize>>>,
    ) {
        if depth == delta {
            if common.count_ones() == cap_degree {
                *count += ExactCount::from(1u32);
                if let Some(ts) = tuples {
                    ts.push(chosen.clone());
                }
            }
            return;
        }
        for v in 0..h.q() {
            chosen[depth] = v;
            rec(
                depth + 1,
                delta,
                common & h.row(v),
                h,
                cap_degree,
                chosen,
                count,
                tuples,
            );
        }
    }
    rec(
        0,
        delta,
        full,
        h,
        cap_degree,
        &mut chosen,
        &mut count,
        &mut tuples,
    );
    debug_assert!(!count.is_zero(), "constant max-degree tuple always qualifies");
    Ok((count, tuples))
}

/// Structural facts about `h` read off per component or per vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructureFlags {
    /// Some component is the fully looped complete graph on `Delta` vertices.
    pub has_k_delta_loop_component: bool,
    /// Some component is the loopless complete bipartite graph `K_{Delta,Delta}`.
    pub has_k_delta_delta_component: bool,
    /// Some looped vertex is adjacent to every vertex.
    pub looped_dominating_vertex: bool,
    /// Exactly one vertex attains the maximum degree.
    pub unique_max_degree_vertex: bool,
    /// All maximum-degree vertices have identical neighbourhoods.
    pub shared_max_degree_neighborhoods: bool,
}

/// Decides every [`StructureFlags`] field by direct adjacency inspection.
pub fn structure_flags(h: &TargetGraph) -> StructureFlags {
    let q = h.q();
    let delta = h.max_degree();
    let full = if q == 64 { u64::MAX } else { (1u64 << q) - 1 };

    let mut has_loop_clique = false;
    let mut has_bipartite_block = false;
    for comp in h.components() {
        let size = comp.len();
        if size == delta
            && comp.iter().all(|&v| h.has_loop(v))
            && comp.iter().all(|&u| comp.iter().all(|&v| h.adjacent(u, v)))
        {
            has_loop_clique = true;
        }
        if size == 2 * delta
            && comp.iter().all(|&v| !h.has_loop(v) && h.degree(v) == delta)
            && component_is_bipartite(h, &comp)
        {
            has_bipartite_block = true;
        }
    }

    let looped_dominating = (0..q).any(|v| h.has_loop(v) && h.row(v) == full);
    let max_degree_vertices: Vec<usize> = (0..q).filter(|&v| h.degree(v) == delta).collect();
    let unique = max_degree_vertices.len() == 1;
    let shared = max_degree_vertices
        .iter()
        .all(|&v| h.row(v) == h.row(max_degree_vertices[0]));

    StructureFlags {
        has_k_delta_loop_component: has_loop_clique,
        has_k_delta_delta_component: has_bipartite_block,
        looped_dominating_vertex: looped_dominating,
        unique_max_degree_vertex: unique,
        shared_max_degree_neighborhoods: shared,
    }
}

fn component_is_bipartite(h: &TargetGraph, comp: &[usize]) -> bool {
    let mut color = vec![u8::MAX; h.q()];
    let start = comp[0];
    color[start] = 0;
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        let mut bits = h.row(u) & !(1 << u);
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if color[v] == u8::MAX {
                color[v] = 1 - color[u];
                stack.push(v);
            } else if color[v] == color[u] {
                return false;
            }
        }
    }
    true
}

/// Sign sequence of `f(x)` vs `f(x+1)` for `x = 2..=x_max`, where
/// `f(x) = (sum_v d(v)^(x-1))^(1/x)`, each sign decided exactly by comparing
/// `(sum d^(x-1))^(x+1)` with `(sum d^x)^x`.
///
/// The sequence of strict signs may change direction at most once; a second
/// change would contradict the log-convexity this classification relies on
/// and is reported as an invariant violation.
pub fn star_sequence_profile(h: &TargetGraph, x_max: u64) -> Result<Vec<Ordering>> {
    if x_max < 3 {
        return Err(Error::Parameter(format!(
            "profile needs x_max >= 3, got {x_max}"
        )));
    }
    let mut signs = Vec::new();
    for x in 2..=x_max {
        let lhs = pow(&degree_power_sum(h, x - 1), x + 1);
        let rhs = pow(&degree_power_sum(h, x), x);
        signs.push(lhs.cmp(&rhs));
    }
    let strict: Vec<Ordering> = signs
        .iter()
        .copied()
        .filter(|s| *s != Ordering::Equal)
        .collect();
    let changes = strict.windows(2).filter(|w| w[0] != w[1]).count();
    if changes > 1 {
        return Err(Error::InvariantViolation(format!(
            "normalised star counts changed direction {changes} times for target {}",
            h.to_inline()
        )));
    }
    Ok(signs)
}

/// Result of the pinned-4-path bound check.
#[derive(Debug, Clone)]
pub struct P4Bound {
    /// Largest pinned count over all colour pairs: `max_{u,v} (A^3)_{uv}`.
    pub max_pinned: ExactCount,
    /// Whether the maximum is strictly below `Delta^2`.
    pub strict: bool,
}

/// Computes the pinned-4-path maximum and asserts the structural facts tied
/// to it: the maximum never exceeds `Delta^2`, and it is strictly below
/// whenever no component is a fully looped max-degree clique or a complete
/// bipartite max-degree block.
pub fn p4_bound_check(h: &TargetGraph) -> Result<P4Bound> {
    let m = path_power_matrix(4, h)?;
    let max_pinned = m
        .iter()
        .flat_map(|row| row.iter())
        .max()
        .cloned()
        .expect("q >= 1");
    let delta = h.max_degree() as u64;
    let delta_sq = ExactCount::from(delta * delta);
    if max_pinned > delta_sq {
        return Err(Error::InvariantViolation(format!(
            "pinned 4-path count {max_pinned} exceeds Delta^2 = {delta_sq} for target {}",
            h.to_inline()
        )));
    }
    let strict = max_pinned < delta_sq;
    let flags = structure_flags(h);
    if !strict && !flags.has_k_delta_loop_component && !flags.has_k_delta_delta_component {
        return Err(Error::InvariantViolation(format!(
            "pinned 4-path count reaches Delta^2 without a looped clique or complete bipartite \
             block component in target {}",
            h.to_inline()
        )));
    }
    Ok(P4Bound { max_pinned, strict })
}

/// Output of [`path_threshold`]: the certified long-path cutoff, with the
/// floating-point spectral data that produced it and exact spot checks.
#[derive(Debug, Clone)]
pub struct PathThreshold {
    /// Least `l` such that `c * lambda1^k < Delta^(k-4) / q^2` for all
    /// `k >= l`, by the floating-point estimates below.
    pub l_h: u64,
    /// Perron-vector ratio `max_j x_j / min_j x_j` of the component that
    /// determines `l_h`. Approximate.
    pub c: f64,
    /// Largest adjacency eigenvalue of each component, in component order.
    /// Approximate.
    pub lambda1_per_component: Vec<f64>,
    /// For `k = l_h ..= l_h + 4`: whether
    /// `max_entry(A^(k-1)) * q^2 * Delta^4 < Delta^k` holds exactly.
    pub exact_checks: Vec<(u64, bool)>,
}

/// Certifies a cutoff `l_h` beyond which pinned long-path counts fall below
/// `Delta^(k-4) / q^2`, via per-component power iteration for the Perron
/// eigenvalue and eigenvector.
///
/// Only applies in the bipartite regime (both cycle roots strictly below
/// `Delta`); the eigenvalue estimates are floats and flagged approximate,
/// while the emitted spot checks are exact integer comparisons.
pub fn path_threshold(h: &TargetGraph, tolerance: f64) -> Result<PathThreshold> {
    if !(tolerance > 0.0) {
        return Err(Error::Parameter("tolerance must be positive".into()));
    }
    if regime_delta2(h) != Delta2Regime::Bipartite {
        return Err(Error::Regime(
            "long-path threshold requires both cycle roots strictly below the max degree".into(),
        ));
    }
    let q = h.q();
    let delta = h.max_degree() as f64;
    let mut lambda1_per_component = Vec::new();
    let mut l_h = 0u64;
    let mut c_of_max = 0.0f64;
    for comp in h.components() {
        let (lambda1, ratio) = perron_estimate(h, &comp, tolerance)?;
        if lambda1 >= delta - tolerance {
            return Err(Error::Regime(format!(
                "estimated top eigenvalue {lambda1} reaches the max degree {delta} within tolerance"
            )));
        }
        lambda1_per_component.push(lambda1);
        // Least l with c * q^2 * Delta^4 * (lambda1/Delta)^l < 1; the factor
        // shrinks geometrically because lambda1 < Delta.
        let mut value = ratio * (q * q) as f64 * delta.powi(4);
        let shrink = lambda1 / delta;
        let mut l = 0u64;
        while value >= 1.0 {
            value *= shrink;
            l += 1;
            if l > 1_000_000 {
                return Err(Error::Internal(
                    "long-path threshold scan failed to converge".into(),
                ));
            }
        }
        let l = l.max(1);
        if l > l_h {
            l_h = l;
            c_of_max = ratio;
        }
    }
    // Exact companion checks near the cutoff, scaled to integers:
    // max_entry(A^(k-1)) * q^2 * Delta^4 < Delta^k.
    let delta_int = ExactCount::from(h.max_degree() as u64);
    let adj = adjacency_matrix(h);
    let mut exact_checks = Vec::new();
    for k in l_h..l_h + 5 {
        let m = mat_pow(&adj, k - 1);
        let max_entry = m
            .iter()
            .flat_map(|r| r.iter())
            .max()
            .cloned()
            .expect("q >= 1");
        let lhs = max_entry * ExactCount::from((q * q) as u64) * pow(&delta_int, 4);
        let ok = lhs < pow(&delta_int, k);
        exact_checks.push((k, ok));
    }
    Ok(PathThreshold {
        l_h,
        c: c_of_max,
        lambda1_per_component,
        exact_checks,
    })
}

/// Power iteration on `A + I` restricted to a component; returns the top
/// adjacency eigenvalue and the Perron-vector max/min ratio. The identity
/// shift makes the iteration converge on bipartite components too, and
/// convergence is judged on the vector so the ratio is accurate to the
/// tolerance, not just the eigenvalue.
fn perron_estimate(h: &TargetGraph, comp: &[usize], tolerance: f64) -> Result<(f64, f64)> {
    let k = comp.len();
    let mut vec = vec![1.0f64 / (k as f64).sqrt(); k];
    for iteration in 0..200_000 {
        let mut next = vec![0.0f64; k];
        for (i, &u) in comp.iter().enumerate() {
            let mut acc = vec[i];
            for (j, &v) in comp.iter().enumerate() {
                if h.adjacent(u, v) {
                    acc += vec[j];
                }
            }
            next[i] = acc;
        }
        let norm = next.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Err(Error::Internal("power iteration collapsed to zero".into()));
        }
        for x in &mut next {
            *x /= norm;
        }
        let drift = next
            .iter()
            .zip(&vec)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0f64, f64::max);
        let converged = iteration > 2 && drift < tolerance;
        vec = next;
        if converged {
            // Rayleigh quotient of A + I, shifted back.
            let mut rq = 0.0f64;
            for (i, &u) in comp.iter().enumerate() {
                let mut acc = vec[i];
                for (j, &v) in comp.iter().enumerate() {
                    if h.adjacent(u, v) {
                        acc += vec[j];
                    }
                }
                rq += acc * vec[i];
            }
            let lambda = rq - 1.0;
            let maxx = vec.iter().cloned().fold(f64::MIN, f64::max);
            let minx = vec.iter().cloned().fold(f64::MAX, f64::min);
            if minx <= 0.0 {
                return Err(Error::Internal(
                    "Perron vector estimate not strictly positive".into(),
                ));
            }
            return Ok((lambda, maxx / minx));
        }
    }
    Err(Error::Internal("power iteration did not converge".into()))
}

/// Everything classification knows about one target, with the exact
/// comparisons that produced each verdict.
#[derive(Debug, Clone)]
pub struct RegimeReport {
    /// The intended minimum degree of the counted graphs; used for the
    /// tuple count and the informational constant below.
    pub delta: usize,
    pub sum_degrees: u64,
    pub max_degree: u64,
    /// `sum d(v)` vs `Delta^2`.
    pub degree_condition: Ordering,
    /// Star-overtake threshold and its boundary tie; present iff the degree
    /// condition is strict.
    pub n0: Option<(u64, bool)>,
    pub delta2: Delta2Regime,
    /// Number of delta-tuples with a maximum common neighbourhood.
    pub s_delta: ExactCount,
    pub flags: StructureFlags,
    /// Signs of `f(x)` vs `f(x+1)` for `x = 2..=x_max`.
    pub star_profile: Vec<Ordering>,
    pub p4: P4Bound,
    /// Informational only: `delta * log(Delta) / log(Delta^2 / sum d)`;
    /// present iff the degree condition is strict. No verdict depends on it.
    pub c_h: Option<f64>,
    /// Whether a looped dominating vertex, or the strict degree condition
    /// together with a unique max-degree vertex, already forces the
    /// bipartite-star maximiser for every minimum degree.
    pub star_dominant_sufficient: bool,
    /// Long-path cutoff data; present iff the degree-2 regime is bipartite.
    pub path_threshold: Option<PathThreshold>,
    /// Ledger of every comparison behind the verdicts above.
    pub comparisons: Vec<ComparisonRecord>,
}

/// Runs the full classification pipeline on one target.
pub fn classify(h: &TargetGraph, delta: usize, x_max: u64, tolerance: f64) -> Result<RegimeReport> {
    let sum_d = h.degree_sum();
    let max_d = h.max_degree() as u64;
    let mut comparisons = Vec::new();

    let cond = degree_condition(h);
    comparisons.push(ComparisonRecord::exact(
        "degree_sum vs max_degree^2",
        sum_d,
        max_d * max_d,
        cond,
    ));

    let n0 = if cond == Ordering::Less {
        let (n0, boundary) = compute_n0(h)?;
        comparisons.push(ComparisonRecord::exact(
            "star overtake: degree_sum^n0 vs power_sum(n0-1)^2",
            pow(&ExactCount::from(sum_d), n0),
            pow(&degree_power_sum(h, n0 - 1), 2),
            Ordering::Less,
        ));
        Some((n0, boundary))
    } else {
        None
    };

    let c3 = hom_cycle(3, h)?;
    let c4 = hom_cycle(4, h)?;
    let delta_big = ExactCount::from(max_d);
    comparisons.push(ComparisonRecord::exact(
        "hom(C3) vs max_degree^3",
        &c3,
        pow(&delta_big, 3),
        c3.cmp(&pow(&delta_big, 3)),
    ));
    comparisons.push(ComparisonRecord::exact(
        "hom(C4) vs max_degree^4",
        &c4,
        pow(&delta_big, 4),
        c4.cmp(&pow(&delta_big, 4)),
    ));
    let delta2 = regime_delta2(h);
    if let Delta2Regime::Cycles { c3_vs_c4 } = delta2 {
        comparisons.push(ComparisonRecord::exact(
            "hom(C3)^4 vs hom(C4)^3",
            pow(&c3, 4),
            pow(&c4, 3),
            c3_vs_c4,
        ));
    }

    let (s_count, _) = s_delta(h, delta, false)?;
    let flags = structure_flags(h);
    let star_profile = star_sequence_profile(h, x_max)?;
    let p4 = p4_bound_check(h)?;
    comparisons.push(ComparisonRecord::exact(
        "max pinned 4-path vs max_degree^2",
        &p4.max_pinned,
        max_d * max_d,
        p4.max_pinned.cmp(&ExactCount::from(max_d * max_d)),
    ));

    let c_h = if cond == Ordering::Less {
        let ratio = (max_d * max_d) as f64 / sum_d as f64;
        Some(delta as f64 * (max_d as f64).ln() / ratio.ln())
    } else {
        None
    };

    let star_dominant_sufficient = flags.looped_dominating_vertex
        || (cond == Ordering::Less && flags.unique_max_degree_vertex);

    let path_threshold = if delta2 == Delta2Regime::Bipartite {
        let pt = path_threshold(h, tolerance)?;
        comparisons.push(ComparisonRecord {
            label: "top eigenvalue vs max_degree (per component)".into(),
            lhs: format!("{:?}", pt.lambda1_per_component),
            rhs: max_d.to_string(),
            op: Ordering::Less,
            exact: false,
        });
        Some(pt)
    } else {
        None
    };

    Ok(RegimeReport {
        delta,
        sum_degrees: sum_d,
        max_degree: max_d,
        degree_condition: cond,
        n0,
        delta2,
        s_delta: s_count,
        flags,
        star_profile,
        p4,
        c_h,
        star_dominant_sufficient,
        path_threshold,
        comparisons,
    })
}

impl RegimeReport {
    pub fn to_json(&self) -> serde_json::Value {
        let ordering_str = |o: Ordering| match o {
            Ordering::Less => "<",
            Ordering::Equal => "=",
            Ordering::Greater => ">",
        };
        let delta2 = match &self.delta2 {
            Delta2Regime::Cycles { c3_vs_c4 } => serde_json::json!({
                "regime": "cycles",
                "c3_root_vs_c4_root": ordering_str(*c3_vs_c4),
            }),
            Delta2Regime::Bipartite => serde_json::json!({ "regime": "bipartite_star" }),
        };
        serde_json::json!({
            "delta": self.delta.to_string(),
            "degree_sum": self.sum_degrees.to_string(),
            "max_degree": self.max_degree.to_string(),
            "degree_condition": ordering_str(self.degree_condition),
            "n0": self.n0.map(|(n0, boundary)| serde_json::json!({
                "value": n0.to_string(),
                "boundary_equality": boundary,
            })),
            "min_degree_2_regime": delta2,
            "s_delta": self.s_delta.to_string(),
            "structure_flags": {
                "has_max_looped_clique_component": self.flags.has_k_delta_loop_component,
                "has_max_bipartite_block_component": self.flags.has_k_delta_delta_component,
                "looped_dominating_vertex": self.flags.looped_dominating_vertex,
                "unique_max_degree_vertex": self.flags.unique_max_degree_vertex,
                "shared_max_degree_neighborhoods": self.flags.shared_max_degree_neighborhoods,
            },
            "star_profile": self.star_profile.iter().map(|o| ordering_str(*o)).collect::<Vec<_>>(),
            "pinned_p4": {
                "max": self.p4.max_pinned.to_string(),
                "strict_below_max_degree_sq": self.p4.strict,
            },
            "c_h": self.c_h.map(|c| serde_json::json!({
                "value": format!("{c}"),
                "approximate": true,
                "informational": true,
            })),
            "star_dominant_sufficient": self.star_dominant_sufficient,
            "path_threshold": self.path_threshold.as_ref().map(|pt| serde_json::json!({
                "l": pt.l_h.to_string(),
                "c": format!("{}", pt.c),
                "lambda1_per_component": pt.lambda1_per_component.iter()
                    .map(|l| format!("{l}")).collect::<Vec<_>>(),
                "approximate": true,
                "exact_checks": pt.exact_checks.iter().map(|(k, ok)| serde_json::json!({
                    "k": k.to_string(),
                    "holds": ok,
                })).collect::<Vec<_>>(),
            })),
            "comparisons": self.comparisons.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
        })
    }
}
