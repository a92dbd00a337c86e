//! Acceptance suite: one test per criterion, each printing a PASS line.
//!
//! Everything here is decided in exact arithmetic at desk scale: closed
//! forms against the backtracking counter across every small target, the
//! cycle-partition bound with its equality characterisation, the
//! minimum-degree-1 maximiser in every regime, spot maximisers for the
//! minimum-degree-2 families, generator completeness against brute-force
//! filtering, the structural lemma suites, and the weighted identities.
//!
//! Run with `cargo test -p homx-core --test acceptance -- --nocapture` to
//! see the per-criterion lines.

use std::cmp::Ordering;

use rayon::prelude::*;

use homx_core::classify::{
    compute_n0, degree_condition, p4_bound_check, s_delta, star_sequence_profile,
};
use homx_core::count::{
    cmp_root_power_vs_value, cmp_root_powers, hom_brute, hom_complete, hom_complete_bipartite,
    hom_cycle, hom_path, hom_star, z_star, z_weighted,
};
use homx_core::critical::{decompose_delta2, generate_emc, is_edge_min_critical, rebuild};
use homx_core::graph::{canonical_form, family, is_isomorphic, SimpleGraph, TargetGraph};
use homx_core::scalar::pow;
use homx_core::search::{all_graphs_up_to_iso, argmax_hom, verify_2regular, FamilySpec};
use homx_core::{ExactCount, ExactRational};

/// Every target on exactly `q` labelled vertices (all symmetric 0/1
/// matrices with loops allowed), isolated-vertex-free ones only.
fn targets_on(q: usize) -> Vec<TargetGraph> {
    let bits = q * (q + 1) / 2;
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << bits) {
        let mut rows = vec![0u64; q];
        let mut idx = 0;
        for u in 0..q {
            for v in u..q {
                if mask >> idx & 1 == 1 {
                    rows[u] |= 1 << v;
                    rows[v] |= 1 << u;
                }
                idx += 1;
            }
        }
        if let Ok(t) = TargetGraph::from_rows(rows) {
            out.push(t);
        }
    }
    out
}

fn targets_up_to(q_max: usize) -> Vec<TargetGraph> {
    (1..=q_max).flat_map(targets_on).collect()
}

fn big(v: u64) -> ExactCount {
    ExactCount::from(v)
}

fn h_tie() -> TargetGraph {
    let mut h = family::looped_complete(1).unwrap();
    for _ in 0..7 {
        h = h
            .disjoint_union(&family::looped_complete(1).unwrap())
            .unwrap();
    }
    for _ in 0..4 {
        h = h
            .disjoint_union(&family::complete_target(2).unwrap())
            .unwrap();
    }
    h
}

#[test]
fn acceptance_1_paper_constants() {
    // Tie target: 8 looped vertices plus 4 disjoint edges.
    let h = h_tie();
    assert_eq!(hom_cycle(3, &h).unwrap(), big(8));
    assert_eq!(hom_cycle(4, &h).unwrap(), big(16));
    assert_eq!(pow(&big(8), 4), pow(&big(16), 3)); // both 4096
    assert_eq!(cmp_root_powers(&big(8), 3, &big(16), 4), Ordering::Equal);

    // Path on three vertices with a loop on one endpoint.
    let p3_loop = TargetGraph::from_edges(3, &[(0, 0), (0, 1), (1, 2)]).unwrap();
    assert_eq!(p3_loop.degree_sum(), 5);
    assert_eq!(p3_loop.max_degree(), 2);
    println!("acceptance 1 (paper constants): PASS");
}

#[test]
fn acceptance_2_oracle_equivalence() {
    let targets = targets_up_to(4);
    assert_eq!(targets_on(4).len() + targets_on(3).len() + targets_on(2).len() + 1, targets.len());
    assert!(targets_on(4).len() <= 1024);
    let graphs_checked: usize = targets
        .par_iter()
        .map(|h| {
            let mut checked = 0;
            for x in 2..=9u64 {
                assert_eq!(
                    hom_star(x, h).unwrap(),
                    hom_brute(&family::star(x as usize).unwrap(), h),
                    "star x={x} target={}",
                    h.to_inline()
                );
                checked += 1;
            }
            for k in 3..=9u64 {
                assert_eq!(
                    hom_cycle(k, h).unwrap(),
                    hom_brute(&family::cycle(k as usize).unwrap(), h),
                    "cycle k={k} target={}",
                    h.to_inline()
                );
                checked += 1;
            }
            for k in 2..=9u64 {
                // hom_path sums the pinned-path matrix over all colour pairs.
                assert_eq!(
                    hom_path(k, h).unwrap(),
                    hom_brute(&family::path(k as usize).unwrap(), h),
                    "path k={k} target={}",
                    h.to_inline()
                );
                checked += 1;
            }
            for a in 1..=4usize {
                for b in 1..=(9 - a) {
                    assert_eq!(
                        hom_complete_bipartite(a, b as u64, h).unwrap(),
                        hom_brute(&family::complete_bipartite(a, b).unwrap(), h),
                        "cbip a={a} b={b} target={}",
                        h.to_inline()
                    );
                    checked += 1;
                }
            }
            for k in 1..=9usize {
                assert_eq!(
                    hom_complete(k, h).unwrap(),
                    hom_brute(&family::complete(k).unwrap(), h),
                    "complete k={k} target={}",
                    h.to_inline()
                );
                checked += 1;
            }
            checked
        })
        .sum();
    println!(
        "acceptance 2 (oracle equivalence): PASS ({} targets, {} closed-form/brute pairs)",
        targets.len(),
        graphs_checked
    );
}

#[test]
fn acceptance_3_two_regular_bound() {
    let targets = targets_up_to(3);
    targets.par_iter().for_each(|h| {
        for n in 3..=15 {
            // Any bound violation or equality-characterisation mismatch is
            // an invariant-violation error (exit status 3 in the CLI).
            verify_2regular(n, h).unwrap_or_else(|e| {
                panic!("2-regular verdict failed for {} at n={n}: {e}", h.to_inline())
            });
        }
    });
    println!(
        "acceptance 3 (2-regular bound, n <= 15): PASS ({} targets)",
        targets.len()
    );
}

/// The predicted maximiser data for minimum degree 1 at a given n.
struct MinDegreeOnePrediction {
    /// Bound as `base^(n/root)`.
    bound_base: ExactCount,
    bound_root: u64,
    /// Canonical keys of the graphs predicted to attain the bound.
    equality: Vec<homx_core::graph::CanonicalForm>,
}

fn predict_min_degree_one(h: &TargetGraph, n: usize) -> MinDegreeOnePrediction {
    let sum_d = big(h.degree_sum());
    let matching_forest = |n: usize| -> Option<SimpleGraph> {
        if n % 2 == 0 {
            let parts = vec![family::path(2).unwrap(); n / 2];
            Some(family::disjoint_union(&parts).unwrap())
        } else {
            None
        }
    };
    match degree_condition(h) {
        Ordering::Greater | Ordering::Equal => {
            let equality = matching_forest(n)
                .into_iter()
                .map(|g| canonical_form(&g))
                .collect();
            MinDegreeOnePrediction {
                bound_base: sum_d,
                bound_root: 2,
                equality,
            }
        }
        Ordering::Less => {
            let (n0, boundary) = compute_n0(h).unwrap();
            if (n as u64) < n0 {
                let mut equality: Vec<_> = matching_forest(n)
                    .into_iter()
                    .map(|g| canonical_form(&g))
                    .collect();
                if n as u64 == n0 - 1 && boundary && n >= 2 {
                    equality.push(canonical_form(&family::star(n).unwrap()));
                }
                equality.sort();
                equality.dedup();
                MinDegreeOnePrediction {
                    bound_base: sum_d,
                    bound_root: 2,
                    equality,
                }
            } else {
                MinDegreeOnePrediction {
                    bound_base: hom_star(n as u64, h).unwrap(),
                    bound_root: n as u64,
                    equality: vec![canonical_form(&family::star(n).unwrap())],
                }
            }
        }
    }
}

#[test]
fn acceptance_4_min_degree_one_suite() {
    // The pinned threshold and the boundary tie for the independent-set
    // target: overtake at 5, with the exact tie 9 = 9 at n = 4.
    assert_eq!(compute_n0(&family::h_ind()).unwrap(), (5, true));
    let two_k2 = family::disjoint_union(&[family::path(2).unwrap(), family::path(2).unwrap()])
        .unwrap();
    assert_eq!(hom_brute(&two_k2, &family::h_ind()), big(9));
    assert_eq!(hom_brute(&family::star(4).unwrap(), &family::h_ind()), big(9));

    let targets = targets_up_to(3);
    let mut skipped = 0;
    for h in &targets {
        if h.is_fully_looped_complete() {
            skipped += 1; // every graph ties at q^n; excluded by the statement
            continue;
        }
        for n in 2..=10usize {
            let prediction = predict_min_degree_one(h, n);
            let family_members = generate_emc(n, 1).unwrap();
            let mut equality_seen = Vec::new();
            for g in &family_members {
                let value = hom_brute(g, h);
                let cmp = cmp_root_power_vs_value(
                    &prediction.bound_base,
                    n as u64,
                    prediction.bound_root,
                    &value,
                );
                assert_ne!(
                    cmp,
                    Ordering::Less,
                    "bound violated by {g:?} for target {} at n={n}",
                    h.to_inline()
                );
                if cmp == Ordering::Equal {
                    equality_seen.push(canonical_form(g));
                }
            }
            equality_seen.sort();
            assert_eq!(
                equality_seen,
                prediction.equality,
                "equality set mismatch for target {} at n={n}",
                h.to_inline()
            );
        }
        // Full-family verification at sizes where every graph is enumerable:
        // the same bound and the same equality set over all of G(n,1).
        for n in 2..=7usize {
            let prediction = predict_min_degree_one(h, n);
            let all = all_graphs_up_to_iso(n).unwrap();
            let mut equality_seen = Vec::new();
            for g in all.iter().filter(|g| g.min_degree() == 1) {
                let value = hom_brute(g, h);
                let cmp = cmp_root_power_vs_value(
                    &prediction.bound_base,
                    n as u64,
                    prediction.bound_root,
                    &value,
                );
                assert_ne!(
                    cmp,
                    Ordering::Less,
                    "full-family bound violated by {g:?} for target {} at n={n}",
                    h.to_inline()
                );
                if cmp == Ordering::Equal {
                    equality_seen.push(canonical_form(g));
                }
            }
            equality_seen.sort();
            assert_eq!(
                equality_seen,
                prediction.equality,
                "full-family equality mismatch for target {} at n={n}",
                h.to_inline()
            );
        }
    }
    println!(
        "acceptance 4 (min-degree-1 maximisers, n <= 10): PASS ({} targets, {skipped} trivial skipped)",
        targets.len()
    );
}

#[test]
fn acceptance_5_min_degree_two_spot_suite() {
    // Independent sets at n = 8: K_{2,6} wins uniquely with 2^6 + 3 = 67.
    let (max, witnesses) = argmax_hom(&FamilySpec::emc(8, 2), &family::h_ind()).unwrap();
    assert_eq!(max, big(67));
    assert_eq!(witnesses.len(), 1);
    assert!(is_isomorphic(
        &witnesses[0],
        &family::complete_bipartite(2, 6).unwrap()
    ));

    // Proper 3-colourings at n = 12: three 4-cycles win with 18^3 = 5832.
    let (max, witnesses) =
        argmax_hom(&FamilySpec::emc(12, 2), &family::complete_target(3).unwrap()).unwrap();
    assert_eq!(max, big(5832));
    assert_eq!(witnesses.len(), 1);
    let three_c4 = family::disjoint_union(&vec![family::cycle(4).unwrap(); 3]).unwrap();
    assert!(is_isomorphic(&witnesses[0], &three_c4));

    // Two looped vertices at n = 12: counts are 2^components, so four
    // triangles win with 16.
    let two_loops = family::looped_complete(1)
        .unwrap()
        .disjoint_union(&family::looped_complete(1).unwrap())
        .unwrap();
    let (max, witnesses) = argmax_hom(&FamilySpec::emc(12, 2), &two_loops).unwrap();
    assert_eq!(max, big(16));
    assert_eq!(witnesses.len(), 1);
    let four_c3 = family::disjoint_union(&vec![family::cycle(3).unwrap(); 4]).unwrap();
    assert!(is_isomorphic(&witnesses[0], &four_c3));
    println!("acceptance 5 (min-degree-2 spot maximisers): PASS");
}

#[test]
fn acceptance_6_structure_suite() {
    // Generator completeness: the structural construction reproduces the
    // brute-force criticality filter exactly, for every n up to 8.
    let expected_counts = [(3usize, 1usize), (4, 1), (5, 3)];
    for (n, count) in expected_counts {
        assert_eq!(generate_emc(n, 2).unwrap().len(), count);
    }
    for n in 3..=8usize {
        let generated = generate_emc(n, 2).unwrap();
        let mut generated_keys: Vec<_> = generated.iter().map(canonical_form).collect();
        generated_keys.sort();
        let mut filtered_keys: Vec<_> = all_graphs_up_to_iso(n)
            .unwrap()
            .iter()
            .filter(|g| g.min_degree() == 2 && is_edge_min_critical(g, 2).unwrap())
            .map(canonical_form)
            .collect();
        filtered_keys.sort();
        assert_eq!(generated_keys, filtered_keys, "generator incomplete at n={n}");
    }
    // Decompose/rebuild round-trips across the whole class up to 10 vertices.
    let mut roundtrips = 0;
    for n in 3..=10usize {
        for g in generate_emc(n, 2).unwrap() {
            let d = decompose_delta2(&g).unwrap();
            let back = rebuild(&d).unwrap();
            assert!(is_isomorphic(&back, &g), "round-trip failed for {g:?}");
            roundtrips += 1;
        }
    }
    println!("acceptance 6 (structure suite): PASS ({roundtrips} round-trips)");
}

#[test]
fn acceptance_7_lemma_suites() {
    let targets = targets_up_to(4);
    targets.par_iter().for_each(|h| {
        // Normalised star counts change direction at most once; a second
        // change raises an invariant violation inside the profile call.
        star_sequence_profile(h, 10).unwrap_or_else(|e| {
            panic!("star profile failed for {}: {e}", h.to_inline())
        });
        // Pinned 4-path maximum below the squared max degree unless a
        // special component realises it; violations error out inside.
        p4_bound_check(h).unwrap_or_else(|e| {
            panic!("pinned-path bound failed for {}: {e}", h.to_inline())
        });
        // Star lower bound: colouring the small class with a maximum-common-
        // neighbourhood tuple gives hom(K_{d,n-d}) >= s(d,H) * Delta^(n-d).
        let delta_big = big(h.max_degree() as u64);
        for d in 1..=3usize {
            let (s, _) = s_delta(h, d, false).unwrap();
            for n in (d + 1)..=12 {
                let star = hom_complete_bipartite(d, (n - d) as u64, h).unwrap();
                let lower = s.clone() * pow(&delta_big, (n - d) as u64);
                assert!(
                    star >= lower,
                    "star lower bound failed for {} d={d} n={n}: {star} < {lower}",
                    h.to_inline()
                );
            }
        }
    });
    println!(
        "acceptance 7 (profile/pinned-path/star-bound suites): PASS ({} targets)",
        targets.len()
    );
}

#[test]
fn acceptance_8_weighted_suite() {
    use rand::Rng;
    use rand::SeedableRng;
    let targets = targets_up_to(3);
    let probes = [
        family::path(4).unwrap(),
        family::cycle(5).unwrap(),
        family::star(4).unwrap(),
        family::complete_bipartite(2, 3).unwrap(),
    ];
    for h in &targets {
        for g in &probes {
            let z = z_weighted(g, h);
            assert!(z.is_integer());
            assert_eq!(
                z.to_integer().to_biguint().unwrap(),
                hom_brute(g, h),
                "unit-weight mismatch for {}",
                h.to_inline()
            );
        }
    }
    // Weighted star identity with random positive rational activities.
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x48_4f_4d_58);
    let mut identities = 0;
    for h in &targets {
        for _ in 0..3 {
            let weights: Vec<ExactRational> = (0..h.q())
                .map(|_| {
                    let num = rng.gen_range(1..=9i64);
                    let den = rng.gen_range(1..=9i64);
                    ExactRational::new(num.into(), den.into())
                })
                .collect();
            let weighted = h.clone().with_weights(weights).unwrap();
            for x in 2..=6u64 {
                let by_engine = z_weighted(&family::star(x as usize).unwrap(), &weighted);
                let by_formula = z_star(x, &weighted).unwrap();
                assert_eq!(
                    by_engine,
                    by_formula,
                    "weighted star identity failed for {} x={x}",
                    weighted.to_inline()
                );
                identities += 1;
            }
        }
    }
    println!("acceptance 8 (weighted suite): PASS ({identities} star identities)");
}
