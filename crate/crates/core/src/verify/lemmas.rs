//! Edge-addition monotonicity of the distance spectral radius, and the
//! minimizing configuration among `K_s ∨ (K_{n_1} ∪ ... ∪ K_{n_p})`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::report::VerificationReport;
use crate::error::VerifyError;
use crate::graph::{canonical_form, write_graph6, Graph, GraphFamily};
use crate::spectrum::{graph_radius, COMPARISON_MARGIN, DEFAULT_TOL, REFINED_TOL};

/// Required drop of the radius when an edge is added.
pub const MONOTONE_DROP: f64 = 1e-8;

/// Samples a connected, non-complete graph on `3..=max_order` vertices.
pub fn random_connected_noncomplete(rng: &mut ChaCha8Rng, max_order: usize) -> Graph {
    loop {
        let n = rng.gen_range(3..=max_order);
        let p: f64 = rng.gen_range(0.15..0.9);
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        if g.is_connected() && !g.is_complete() {
            return g;
        }
    }
}

/// Adds a uniformly random non-edge to `trials` random connected graphs and
/// requires the radius to fall by more than [`MONOTONE_DROP`] each time.
pub fn verify_lemma_pf(trials: usize, max_order: usize, seed: u64) -> Result<VerificationReport, VerifyError> {
    if trials < 1 || !(3..=crate::graph::MAX_ORDER).contains(&max_order) {
        return Err(VerifyError::InvalidParameters(format!(
            "need trials >= 1 and 3 <= max_order <= {}, got trials={trials}, max_order={max_order}",
            crate::graph::MAX_ORDER
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cases: Vec<(Graph, (usize, usize))> = (0..trials)
        .map(|_| {
            let g = random_connected_noncomplete(&mut rng, max_order);
            let missing: Vec<_> = g.non_edges().collect();
            let e = missing[rng.gen_range(0..missing.len())];
            (g, e)
        })
        .collect();
    let drops: Vec<f64> = cases
        .par_iter()
        .map(|(g, (u, v))| Ok(graph_radius(g, DEFAULT_TOL)? - graph_radius(&g.with_edge(*u, *v), DEFAULT_TOL)?))
        .collect::<Result<_, VerifyError>>()?;
    let mut report = VerificationReport::new("lemma-pf")
        .param("trials", trials)
        .param("max_order", max_order)
        .param("seed", seed)
        .param("min_drop", MONOTONE_DROP)
        .param("tol", DEFAULT_TOL);
    for ((g, (u, v)), drop) in cases.iter().zip(&drops) {
        report.check(
            *drop > MONOTONE_DROP,
            Some(write_graph6(g)),
            || format!("adding edge {u}-{v} lowered the radius by only {drop:e}"),
            Some(drop - MONOTONE_DROP),
        );
    }
    report.graphs_scanned = trials;
    let smallest = drops.iter().copied().fold(f64::INFINITY, f64::min);
    report.notes.push(format!("smallest observed drop {smallest:e}"));
    Ok(report.finish())
}

/// The parts of the minimizing configuration with the same `s`, `p` and
/// total: one clique of order `n − s − p + 1` and `p − 1` single vertices.
pub fn minimizing_parts(parts: &[usize]) -> Vec<usize> {
    let p = parts.len();
    let total: usize = parts.iter().sum();
    let mut out = vec![total + 1 - p];
    out.extend(std::iter::repeat(1).take(p - 1));
    out
}

fn is_minimizing_multiset(parts: &[usize]) -> bool {
    parts.iter().filter(|&&m| m != 1).count() <= 1
}

/// Compares `K_s ∨ (K_{n_1} ∪ ... ∪ K_{n_p})` against the minimizing
/// configuration: equal up to isomorphism when all but one part are single
/// vertices, strictly larger radius otherwise.
pub fn verify_lemma_bh(s: usize, parts: &[usize]) -> Result<VerificationReport, VerifyError> {
    let mut report = VerificationReport::new("lemma-bh")
        .param("s", s)
        .param("parts", parts.to_vec())
        .param("margin", COMPARISON_MARGIN);
    check_configuration(&mut report, s, parts)?;
    report.graphs_scanned = 1;
    Ok(report.finish())
}

fn check_configuration(report: &mut VerificationReport, s: usize, parts: &[usize]) -> Result<(), VerifyError> {
    if s < 1 || parts.len() < 2 || parts.contains(&0) {
        return Err(VerifyError::InvalidParameters(format!(
            "need s >= 1, at least two parts, all parts >= 1; got s={s}, parts={parts:?}"
        )));
    }
    let g = GraphFamily::Configuration { s, parts: parts.to_vec() }.graph()?;
    let best = GraphFamily::Configuration { s, parts: minimizing_parts(parts) }.graph()?;
    let same = canonical_form(&g)? == canonical_form(&best)?;
    let mut diff = graph_radius(&g, DEFAULT_TOL)? - graph_radius(&best, DEFAULT_TOL)?;
    if diff.abs() <= COMPARISON_MARGIN {
        diff = graph_radius(&g, REFINED_TOL)? - graph_radius(&best, REFINED_TOL)?;
    }
    let label = Some(write_graph6(&g));
    if is_minimizing_multiset(parts) {
        report.check(same, label.clone(), || format!("s={s}, parts={parts:?} should be isomorphic to the minimizer"), None);
        report.check(
            diff.abs() <= COMPARISON_MARGIN,
            label,
            || format!("s={s}, parts={parts:?} isomorphic to the minimizer but radii differ"),
            Some(diff),
        );
    } else {
        report.check(!same, label.clone(), || format!("s={s}, parts={parts:?} unexpectedly isomorphic to the minimizer"), None);
        report.check(
            diff > COMPARISON_MARGIN,
            label,
            || format!("s={s}, parts={parts:?} does not exceed the minimizing radius"),
            Some(diff),
        );
    }
    Ok(())
}

/// All compositions (ordered part lists) of `total` into at least two
/// positive parts.
pub fn compositions(total: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            if cur.len() >= 2 {
                out.push(cur.clone());
            }
            return;
        }
        for first in 1..=rest {
            cur.push(first);
            go(rest - first, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, &mut Vec::new(), &mut out);
    out
}

/// [`verify_lemma_bh`] over every `s ≥ 1` and every composition with
/// `s + n_1 + ... + n_p ≤ max_order`, `p ≥ 2`.
pub fn verify_lemma_bh_sweep(max_order: usize) -> Result<VerificationReport, VerifyError> {
    let cases: Vec<(usize, Vec<usize>)> = (1..max_order)
        .flat_map(|s| (2..=max_order - s).flat_map(move |t| compositions(t).into_iter().map(move |c| (s, c))))
        .collect();
    let partial: Vec<VerificationReport> = cases
        .par_iter()
        .map(|(s, parts)| {
            let mut r = VerificationReport::new("case");
            check_configuration(&mut r, *s, parts)?;
            Ok(r)
        })
        .collect::<Result<_, VerifyError>>()?;
    let mut report = VerificationReport::new("lemma-bh-sweep")
        .param("max_order", max_order)
        .param("margin", COMPARISON_MARGIN);
    report.graphs_scanned = cases.len();
    for r in partial {
        report.checks += r.checks;
        report.failures.extend(r.failures);
    }
    Ok(report.finish())
}
