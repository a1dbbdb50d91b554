use distext::extend::ExtendabilityVerdict;
use distext::verify::VerificationReport;

/// `x` rounded to `digits` significant digits, trailing zeros dropped but at
/// least one decimal kept: 3 → "3.0", 1+√3 → "2.73205080757".
pub fn fmt_sig(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x:?}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (digits as i32 - 1 - magnitude).max(0) as usize;
    let mut s = format!("{x:.decimals$}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.push('0');
        }
    } else {
        s.push_str(".0");
    }
    s
}

pub fn render_verdict(method: &str, v: &ExtendabilityVerdict) -> String {
    let property = match v.property {
        distext::extend::Property::KExtendable => "k-extendable",
        distext::extend::Property::KFactorCritical => "k-factor-critical",
    };
    let mut s = format!("{method}: {property} (k={}): {}\n", v.k, if v.holds { "yes" } else { "no" });
    if let Some(w) = &v.witness {
        s.push_str(&format!("  witness: {}\n", serde_json::to_string(w).expect("witness serializes")));
    }
    s
}

pub fn render_report(r: &VerificationReport, digits: usize) -> String {
    let mut s = format!("suite: {}\n", r.suite);
    let params: Vec<String> = r.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
    s.push_str(&format!("parameters: {}\n", params.join(" ")));
    s.push_str(&format!("graphs scanned: {}\n", r.graphs_scanned));
    if let Some(x) = r.excluded_no_k_matching {
        s.push_str(&format!("excluded (no k-matching): {x}\n"));
    }
    if let Some(p) = r.pool_size {
        s.push_str(&format!("pool: {p}\n"));
    }
    if let Some(m) = &r.minimizer {
        s.push_str(&format!("minimizer: {} radius {}\n", m.graph6, fmt_sig(m.radius, digits)));
        if let (Some(g6), Some(rad), Some(gap)) = (&m.runner_up_graph6, m.runner_up_radius, m.gap) {
            s.push_str(&format!("runner-up: {g6} radius {} gap {}\n", fmt_sig(rad, digits), fmt_sig(gap, digits)));
        }
    }
    s.push_str(&format!("checks: {}, failures: {}\n", r.checks, r.failures.len()));
    for f in &r.failures {
        let margin = f.margin.map(|m| format!(" (margin {})", fmt_sig(m, digits))).unwrap_or_default();
        let graph = f.graph6.as_deref().map(|g| format!("{g}: ")).unwrap_or_default();
        s.push_str(&format!("  FAIL {graph}{}{margin}\n", f.reason));
    }
    for n in &r.notes {
        s.push_str(&format!("note: {n}\n"));
    }
    s.push_str(&format!("result: {}\n", if r.passed { "PASS" } else { "FAIL" }));
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(fmt_sig(3.0, 12), "3.0");
        assert_eq!(fmt_sig(1.0 + 3f64.sqrt(), 12), "2.73205080757");
        assert_eq!(fmt_sig(12.5, 3), "12.5");
        assert_eq!(fmt_sig(1234.25, 2), "1234.0");
        assert_eq!(fmt_sig(0.019820299741517, 4), "0.01982");
        assert_eq!(fmt_sig(-2.5, 12), "-2.5");
    }
}
