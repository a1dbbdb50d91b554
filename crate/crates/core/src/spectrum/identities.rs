//! Closed-form characteristic polynomials of the quotient matrices that decide
//! the boundary cases `n = k + 2` (general) and `n = k + 3` (bipartite), checked
//! against quotients computed from the actual graphs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{distance_matrix, verify_equitable, IntPoly};
use crate::graph::{join, Graph, GraphFamily, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QuotientPoly {
    /// Cubic of `K_{2k} ∨ (K_3 ∪ K_1)` with parts `2k | 3 | 1`.
    Phi,
    /// Quadratic of `K_{2k+1} ∨ 3K_1` with parts `2k+1 | 3`.
    PhiS,
    /// Quartic of `K_{3,k+2} ⋄ K_{k,1}`.
    Phi1,
    /// Quartic of `K_{2,k+1} ⋄ K_{k+1,2}`.
    Phi2,
}

impl QuotientPoly {
    pub const ALL: [QuotientPoly; 4] = [Self::Phi, Self::PhiS, Self::Phi1, Self::Phi2];

    pub fn name(self) -> &'static str {
        match self {
            Self::Phi => "phi",
            Self::PhiS => "phi_s",
            Self::Phi1 => "phi1",
            Self::Phi2 => "phi2",
        }
    }

    /// The closed form evaluated at `k`.
    pub fn formula(self, k: i128) -> IntPoly {
        match self {
            Self::Phi => IntPoly::from_descending(&[1, -(2 * k + 1), -(4 * k + 14), 4 * k - 12]),
            Self::PhiS => IntPoly::from_descending(&[1, -(2 * k + 4), 2 * k - 3]),
            Self::Phi1 => IntPoly::from_descending(&[
                1,
                -(4 * k + 4),
                3 * k * k - 6 * k - 45,
                12 * k * k + 72 * k - 52,
                -24 * k * k + 64 * k + 28,
            ]),
            Self::Phi2 => IntPoly::from_descending(&[
                1,
                -(4 * k + 4),
                3 * k * k - 6 * k - 53,
                12 * k * k + 88 * k - 68,
                -36 * k * k + 72 * k - 20,
            ]),
        }
    }

    /// The graph whose distance quotient yields this polynomial, with the
    /// partition used.
    pub fn graph(self, k: usize) -> (Graph, Vec<VertexSet>) {
        let family = match self {
            Self::Phi => GraphFamily::ExtremalGeneral { n: k + 2, k },
            Self::PhiS => {
                let g = join(&Graph::complete(2 * k + 1), &Graph::empty(3));
                let parts = vec![VertexSet::range(0, 2 * k + 1), VertexSet::range(2 * k + 1, 2 * k + 4)];
                return (g, parts);
            }
            Self::Phi1 => GraphFamily::ExtremalBipartite { n: k + 3, k },
            Self::Phi2 => GraphFamily::Diamond { a: 2, b: k + 1, c: k + 1, d: 2 },
        };
        let g = family.graph().expect("valid family parameters");
        let parts = family.blocks().expect("valid family parameters");
        (g, parts)
    }

    /// Characteristic polynomial of the quotient computed from the graph.
    pub fn computed(self, k: usize) -> IntPoly {
        let (g, parts) = self.graph(k);
        let d = distance_matrix(&g).expect("family graphs are connected");
        verify_equitable(&d, &parts)
            .expect("family block partition is equitable")
            .charpoly
    }
}

impl fmt::Display for QuotientPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for QuotientPoly {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown polynomial {s:?} (expected phi, phi_s, phi1, phi2)"))
    }
}

/// Outcome of comparing a computed characteristic polynomial with its closed
/// form.
#[derive(Clone, Debug, Serialize)]
pub struct CharpolyCheck {
    pub kind: QuotientPoly,
    pub k: usize,
    pub computed: IntPoly,
    pub expected: IntPoly,
    /// `computed − expected`; zero on a match.
    pub diff: IntPoly,
    pub matches: bool,
}

pub fn check_quotient_charpoly(kind: QuotientPoly, k: usize) -> CharpolyCheck {
    assert!(k >= 1, "k must be positive");
    let computed = kind.computed(k);
    let expected = kind.formula(k as i128);
    let diff = &computed - &expected;
    CharpolyCheck {
        kind,
        k,
        matches: diff.is_zero(),
        computed,
        expected,
        diff,
    }
}

/// `(x + 3) φ_s(x) − φ(x)`, computed from the graph quotients.
pub fn phi_s_difference(k: usize) -> IntPoly {
    let lhs = &IntPoly::linear(3) * &QuotientPoly::PhiS.computed(k);
    &lhs - &QuotientPoly::Phi.computed(k)
}

/// Expected value of [`phi_s_difference`]: `−x + 2k + 3`.
pub fn phi_s_difference_expected(k: usize) -> IntPoly {
    IntPoly::from_descending(&[-1, 2 * k as i128 + 3])
}

/// `φ_2(x) − φ_1(x)`, computed from the graph quotients.
pub fn quartic_difference(k: usize) -> IntPoly {
    &QuotientPoly::Phi2.computed(k) - &QuotientPoly::Phi1.computed(k)
}

/// Expected value of [`quartic_difference`]: `−8x² + (16k − 16)x − 12k² + 8k − 48`.
pub fn quartic_difference_expected(k: usize) -> IntPoly {
    let k = k as i128;
    IntPoly::from_descending(&[-8, 16 * k - 16, -12 * k * k + 8 * k - 48])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_at_k1() {
        let c = check_quotient_charpoly(QuotientPoly::Phi, 1);
        assert!(c.matches, "{c:?}");
        assert_eq!(c.computed, IntPoly::from_descending(&[1, -3, -18, -8]));
    }

    #[test]
    fn phi_s_at_k1() {
        let c = check_quotient_charpoly(QuotientPoly::PhiS, 1);
        assert!(c.matches);
        assert_eq!(c.computed, IntPoly::from_descending(&[1, -6, -1]));
    }

    #[test]
    fn phi2_constant_term_at_k2() {
        let c = check_quotient_charpoly(QuotientPoly::Phi2, 2);
        assert!(c.matches);
        assert_eq!(c.computed.coeff(0), -20);
    }

    #[test]
    fn mismatch_reports_diff() {
        // Compare phi1's graph against phi2's formula to exercise the diff path.
        let computed = QuotientPoly::Phi1.computed(3);
        let diff = &computed - &QuotientPoly::Phi2.formula(3);
        assert_eq!(diff, &IntPoly::new(vec![]) - &quartic_difference_expected(3));
    }

    #[test]
    fn parse_names() {
        for p in QuotientPoly::ALL {
            assert_eq!(p.name().parse::<QuotientPoly>().unwrap(), p);
        }
        assert!("psi".parse::<QuotientPoly>().is_err());
    }
}
