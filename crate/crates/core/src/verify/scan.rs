//! Families interpolating between the extremal graphs and their competitors:
//! radius comparisons plus the intermediate eigenvector quantities.

use serde_json::json;

use super::report::VerificationReport;
use crate::error::VerifyError;
use crate::graph::{canonical_form_with_cap, write_graph6, CanonicalForm, Graph, GraphFamily, VertexSet};
use crate::spectrum::{
    distance_matrix, spectral_radius, QuotientPoly, SpectralResult, COMPARISON_MARGIN, DEFAULT_TOL, REFINED_TOL,
};

/// Allowed spread of the Perron vector inside a part of an equitable
/// partition, and relative tolerance for the closed-form identities.
pub const PART_TOL: f64 = 1e-8;

/// Common Perron value per part and the largest spread inside any part.
pub fn part_values(x: &[f64], parts: &[VertexSet]) -> (Vec<f64>, f64) {
    let mut spread: f64 = 0.0;
    let values = parts
        .iter()
        .map(|p| {
            let (lo, hi) = p
                .iter()
                .map(|v| x[v])
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), y| (lo.min(y), hi.max(y)));
            spread = spread.max(hi - lo);
            p.iter().map(|v| x[v]).sum::<f64>() / p.len() as f64
        })
        .collect();
    (values, spread)
}

fn rel_close(a: f64, b: f64) -> bool {
    (a - b).abs() <= PART_TOL * a.abs().max(b.abs()).max(1.0)
}

/// Canonical form with the cap raised to the order of `g`; the family graphs
/// here refine into a few twin classes, so the search stays shallow.
fn family_form(g: &Graph) -> Result<CanonicalForm, VerifyError> {
    Ok(canonical_form_with_cap(g, g.order())?)
}

fn spectrum(g: &Graph, tol: f64) -> Result<SpectralResult, VerifyError> {
    Ok(spectral_radius(&distance_matrix(g)?, tol)?)
}

/// Radius of `g` compared against `star`, rerun at the refined tolerance
/// when the first estimate is within the comparison margin. Returns
/// `radius(g) − star`.
fn excess(g: &Graph, star_graph: &Graph, radius: f64, star: f64) -> Result<f64, VerifyError> {
    let diff = radius - star;
    if diff.abs() > COMPARISON_MARGIN {
        return Ok(diff);
    }
    Ok(spectrum(g, REFINED_TOL)?.radius - spectrum(star_graph, REFINED_TOL)?.radius)
}

/// `G^(s) = K_s ∨ (K_{2n−2s+2k−1} ∪ (s−2k+1)K_1)` for `2k+1 ≤ s ≤ n+k−1`
/// against `∂* = ∂(G^(2k))`, together with the Perron values `(a, b, c)` of
/// `G^(2k)` on its parts `2k | 2n−2k−1 | 1`.
pub fn scan_s_range_general(n: usize, k: usize) -> Result<VerificationReport, VerifyError> {
    if k < 1 || n < k + 1 {
        return Err(VerifyError::InvalidParameters(format!("need k >= 1 and n >= k+1, got n={n}, k={k}")));
    }
    let mut report = VerificationReport::new("scan-s-general")
        .param("n", n)
        .param("k", k)
        .param("part_tol", PART_TOL)
        .param("margin", COMPARISON_MARGIN);
    let base_family = GraphFamily::GeneralS { n, k, s: 2 * k };
    let base = base_family.graph()?;
    let ext = GraphFamily::ExtremalGeneral { n, k }.graph()?;
    let g6 = Some(write_graph6(&base));
    report.check(base.same_adjacency(&ext), g6.clone(), || "G^(2k) differs from the extremal graph".into(), None);

    let d = distance_matrix(&base)?;
    let sp = spectral_radius(&d, DEFAULT_TOL)?;
    let star = sp.radius;
    let parts = base_family.blocks()?;
    let (vals, spread) = part_values(&sp.perron, &parts);
    report.check(spread <= PART_TOL, g6.clone(), || "Perron vector not constant on the parts".into(), Some(spread));
    let (a, b, c) = (vals[0], vals[1], vals[2]);
    let (nf, kf) = (n as f64, k as f64);

    let c_formula = (1.0 + (2.0 * nf - 2.0 * kf - 2.0) / (star + 2.0)) * b;
    report.check(rel_close(c, c_formula), g6.clone(), || "c-formula mismatch".into(), Some(c - c_formula));
    let rhs = 2.0 * kf * a + 2.0 * (2.0 * nf - 2.0 * kf - 1.0) * b;
    report.check(rel_close(star * c, rhs), g6.clone(), || "eigen-equation at the single vertex fails".into(), Some(star * c - rhs));
    report.check(star > 2.0 * nf - 1.0, g6.clone(), || "∂* does not exceed 2n-1".into(), Some(star - (2.0 * nf - 1.0)));
    let min_row = d.row_sums().into_iter().min().unwrap_or(0);
    report.check(min_row == 2 * n as u64 - 1, g6.clone(), || format!("minimum row sum {min_row}, expected 2n-1"), None);
    report.records.push(json!({
        "s": 2 * k, "radius": star, "a": a, "b": b, "c": c, "c_formula": c_formula, "min_row_sum": min_row,
    }));

    if n == k + 2 {
        let phi = QuotientPoly::Phi.computed(k);
        let phi_s = QuotientPoly::PhiS.computed(k);
        let root = phi.largest_real_root().expect("cubic has a real root");
        report.check(rel_close(root, star), g6.clone(), || "∂* is not the largest root of φ".into(), Some(root - star));
        let val = phi_s.eval(star);
        report.check(val < 0.0, g6.clone(), || "φ_s(∂*) is not negative".into(), Some(val));
        report.records.push(json!({ "phi_s_at_star": val, "phi_largest_root": root }));
    }
    if n == k + 1 {
        report.notes.push("n = k+1: the range 2k+1 <= s <= n+k-1 is empty".into());
    }

    for s in 2 * k + 1..=n + k - 1 {
        let g = GraphFamily::GeneralS { n, k, s }.graph()?;
        let label = Some(write_graph6(&g));
        let ds = distance_matrix(&g)?;
        let radius = spectral_radius(&ds, DEFAULT_TOL)?.radius;
        let ex = excess(&g, &base, radius, star)?;
        report.check(ex > COMPARISON_MARGIN, label.clone(), || format!("∂(G^({s})) does not exceed ∂*"), Some(ex));

        // x^T D_s x − ∂* with x the Perron vector of G^(2k), index-aligned.
        let increment = ds.bilinear(&sp.perron, &sp.perron) - star;
        let sf = s as f64;
        let bracket = (4.0 * nf - 3.0 * sf + 2.0 * kf - 3.0) * b - 2.0 * c;
        let formula = (sf - 2.0 * kf) * b * bracket;
        report.check(
            (increment - formula).abs() <= PART_TOL * star,
            label.clone(),
            || format!("Rayleigh increment for s={s} disagrees with (s-2k)b[(4n-3s+2k-3)b-2c]"),
            Some(increment - formula),
        );
        report.check(
            radius + PART_TOL >= star + increment,
            label.clone(),
            || format!("Rayleigh bound violated for s={s}"),
            Some(radius - star - increment),
        );
        if n >= k + 3 {
            report.check(bracket > 0.0, label, || format!("(4n-3s+2k-3)b - 2c not positive for s={s}"), Some(bracket));
        }
        report.records.push(json!({
            "s": s, "radius": radius, "excess": ex, "rayleigh_increment": increment, "inequality1": bracket,
        }));
    }
    report.graphs_scanned = report.records.len();
    Ok(report.finish())
}

/// Relabeling of `B^(s) = diamond(s, s+k−1, n−s, n−s−k+1)` onto the layout
/// `A1(n−k) | B1(n−1) | A2(k) | B2(1)` of the extremal bipartite graph.
pub fn bipartite_alignment(n: usize, k: usize, s: usize) -> Vec<usize> {
    let mut perm = Vec::with_capacity(2 * n);
    perm.extend(0..s);
    perm.extend((0..s + k - 1).map(|j| n - k + j));
    perm.extend((0..n - s).map(|j| if j < n - k - s { s + j } else { 2 * n - k - 1 + j - (n - k - s) }));
    perm.extend((0..n + 1 - s - k).map(|j| if j < n - s - k { n + s - 1 + j } else { 2 * n - 1 }));
    perm
}

/// `B^(s) = K_{s,s+k−1} ⋄ K_{n−s,n−s−k+1}` for `1 ≤ s ≤ n−k`: the symmetry
/// `B^(s) ≅ B^(n−k+1−s)`, the comparison against `∂* = ∂(B^(1))`, and the
/// lower bound `4(n−s−k)a₁(sb₁−b₂)` from the Perron values of the extremal
/// graph on `A1 | B1 | A2 | B2`.
pub fn scan_s_range_bipartite(n: usize, k: usize) -> Result<VerificationReport, VerifyError> {
    if k < 1 || n < k + 1 {
        return Err(VerifyError::InvalidParameters(format!("need k >= 1 and n >= k+1, got n={n}, k={k}")));
    }
    let mut report = VerificationReport::new("scan-s-bipartite")
        .param("n", n)
        .param("k", k)
        .param("part_tol", PART_TOL)
        .param("margin", COMPARISON_MARGIN);
    let ext_family = GraphFamily::ExtremalBipartite { n, k };
    let ext = ext_family.graph()?;
    let g6 = Some(write_graph6(&ext));
    let b1_graph = GraphFamily::BipartiteS { n, k, s: 1 }.graph()?;
    report.check(
        family_form(&b1_graph)? == family_form(&ext)?,
        g6.clone(),
        || "B^(1) is not isomorphic to the extremal graph".into(),
        None,
    );
    for s in 1..=n - k {
        let g = GraphFamily::BipartiteS { n, k, s }.graph()?;
        let h = GraphFamily::BipartiteS { n, k, s: n - k + 1 - s }.graph()?;
        report.check(
            family_form(&g)? == family_form(&h)?,
            Some(write_graph6(&g)),
            || format!("B^({s}) is not isomorphic to B^({})", n - k + 1 - s),
            None,
        );
    }

    let d = distance_matrix(&ext)?;
    let sp = spectral_radius(&d, DEFAULT_TOL)?;
    let star = sp.radius;
    let (vals, spread) = part_values(&sp.perron, &ext_family.blocks()?);
    report.check(spread <= PART_TOL, g6.clone(), || "Perron vector not constant on the parts".into(), Some(spread));
    let (a1, b1, a2, b2) = (vals[0], vals[1], vals[2], vals[3]);
    let (nf, kf) = (n as f64, k as f64);
    let eq_b1 = (nf - kf) * a1 + kf * a2 + 2.0 * (nf - 2.0) * b1 + 2.0 * b2;
    let eq_b2 = 3.0 * (nf - kf) * a1 + kf * a2 + 2.0 * (nf - 1.0) * b1;
    report.check(rel_close(star * b1, eq_b1), g6.clone(), || "eigen-equation on B1 fails".into(), Some(star * b1 - eq_b1));
    report.check(rel_close(star * b2, eq_b2), g6.clone(), || "eigen-equation on B2 fails".into(), Some(star * b2 - eq_b2));
    let min_row = d.row_sums().into_iter().min().unwrap_or(0);
    report.records.push(json!({
        "s": 1, "radius": star, "a1": a1, "a2": a2, "b1": b1, "b2": b2, "min_row_sum": min_row,
    }));

    if n == k + 3 {
        report.check(min_row == 3 * k as u64 + 7, g6.clone(), || format!("minimum row sum {min_row}, expected 3k+7"), None);
        let bound = 3.0 * kf + 7.0;
        report.check(star > bound, g6.clone(), || "∂* does not exceed 3k+7".into(), Some(star - bound));
        let root = QuotientPoly::Phi1.computed(k).largest_real_root().expect("quartic has a real root");
        report.check(rel_close(root, star), g6.clone(), || "∂* is not the largest root of φ1".into(), Some(root - star));
        let val = QuotientPoly::Phi2.computed(k).eval(star);
        report.check(val < 0.0, g6.clone(), || "φ2(∂*) is not negative".into(), Some(val));
        report.records.push(json!({ "phi2_at_star": val, "phi1_largest_root": root }));
    }

    for s in 2..n - k {
        let g = GraphFamily::BipartiteS { n, k, s }.graph()?;
        let label = Some(write_graph6(&g));
        let aligned = g.relabel(&bipartite_alignment(n, k, s));
        let ds = distance_matrix(&aligned)?;
        let radius = spectral_radius(&ds, DEFAULT_TOL)?.radius;
        let ex = excess(&aligned, &ext, radius, star)?;
        report.check(ex > COMPARISON_MARGIN, label.clone(), || format!("∂(B^({s})) does not exceed ∂*"), Some(ex));

        let increment = ds.bilinear(&sp.perron, &sp.perron) - star;
        let sf = s as f64;
        let formula = 4.0 * (nf - sf - kf) * a1 * (sf * b1 - b2);
        report.check(
            (increment - formula).abs() <= PART_TOL * star,
            label.clone(),
            || format!("Rayleigh increment for s={s} disagrees with 4(n-s-k)a1(s b1 - b2)"),
            Some(increment - formula),
        );
        if s >= 3 {
            report.check(formula > 0.0, label, || format!("lower bound not positive for s={s}"), Some(formula));
        }
        report.records.push(json!({
            "s": s, "radius": radius, "excess": ex, "rayleigh_increment": increment, "bound": formula,
        }));
    }
    report.graphs_scanned = report.records.len();
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn general_examples() {
        for (n, k) in [(5, 1), (6, 2), (3, 1), (4, 2), (2, 1)] {
            let r = scan_s_range_general(n, k).unwrap();
            assert!(r.passed, "{}", r.to_json());
        }
    }

    #[test]
    fn general_counts_s_values() {
        let r = scan_s_range_general(6, 2).unwrap();
        // s = 2k plus s = 5, 6, 7.
        assert_eq!(r.graphs_scanned, 4);
    }

    #[test]
    fn bipartite_examples() {
        for (n, k) in [(5, 1), (6, 2), (4, 1), (3, 1), (2, 1)] {
            let r = scan_s_range_bipartite(n, k).unwrap();
            assert!(r.passed, "{}", r.to_json());
        }
    }

    #[test]
    fn alignment_is_a_permutation_preserving_sides() {
        for (n, k, s) in [(5, 1, 2), (6, 2, 3), (7, 1, 4)] {
            let perm = bipartite_alignment(n, k, s);
            let mut sorted = perm.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, (0..2 * n).collect::<Vec<_>>());
            let g = GraphFamily::BipartiteS { n, k, s }.graph().unwrap().relabel(&perm);
            let ext_left = GraphFamily::ExtremalBipartite { n, k }.graph().unwrap().bipartition().unwrap().left;
            assert_eq!(g.bipartition().unwrap().left, ext_left);
        }
    }

    #[test]
    fn part_values_spread() {
        let x = [1.0, 1.0, 2.0, 2.5];
        let (v, spread) = part_values(&x, &[VertexSet::range(0, 2), VertexSet::range(2, 4)]);
        assert_eq!(v, vec![1.0, 2.25]);
        assert_eq!(spread, 0.5);
    }
}
