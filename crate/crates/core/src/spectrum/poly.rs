//! Integer polynomials and exact characteristic polynomials of small integer
//! matrices.

use std::fmt;
use std::ops::{Mul, Sub};

use serde::Serialize;

/// Polynomial with integer coefficients, `coeffs[i]` multiplying `x^i`.
/// Trailing zero coefficients are trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct IntPoly {
    coeffs: Vec<i128>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// From coefficients listed highest degree first.
    pub fn from_descending(desc: &[i128]) -> Self {
        IntPoly::new(desc.iter().rev().copied().collect())
    }

    /// `x + c`.
    pub fn linear(c: i128) -> Self {
        IntPoly::new(vec![c, 1])
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> i128 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c as f64)
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| c * i as i128)
                .collect(),
        )
    }

    /// Largest real root, for a monic polynomial whose roots are all real
    /// (e.g. the characteristic polynomial of a matrix similar to a symmetric
    /// one). Newton's method started above every root decreases monotonically
    /// to the largest one.
    pub fn largest_real_root(&self) -> Option<f64> {
        let deg = self.degree()?;
        if deg == 0 {
            return None;
        }
        let lead = self.coeffs[deg] as f64;
        let bound = 1.0
            + self.coeffs[..deg]
                .iter()
                .map(|&c| (c as f64 / lead).abs())
                .fold(0.0, f64::max);
        let d = self.derivative();
        let mut x = bound;
        for _ in 0..500 {
            let fx = self.eval(x);
            let dfx = d.eval(x);
            if fx == 0.0 || dfx == 0.0 {
                break;
            }
            let next = x - fx / dfx;
            if (x - next).abs() <= 1e-15 * x.abs().max(1.0) {
                x = next;
                break;
            }
            x = next;
        }
        Some(x)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.unsigned_abs();
            match (i, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => f.write_str("x")?,
                (1, _) => write!(f, "{a}x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{a}x^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::new(Vec::new());
        }
        let mut out = vec![0i128; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

/// `det(xI − A)` by the Faddeev–LeVerrier recurrence. Every division by `k`
/// is exact for integer matrices, so the computation stays in integers.
pub fn charpoly(a: &[Vec<i64>]) -> IntPoly {
    let n = a.len();
    assert!(a.iter().all(|r| r.len() == n), "matrix must be square");
    let a: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    // coeffs[i] multiplies x^i; the polynomial is monic of degree n.
    let mut coeffs = vec![0i128; n + 1];
    coeffs[n] = 1;
    let mut m = vec![vec![0i128; n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = matmul(&a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += coeffs[n - k + 1];
        }
        m = next;
        let am = matmul(&a, &m);
        let trace: i128 = (0..n).map(|i| am[i][i]).sum();
        debug_assert_eq!(trace % k as i128, 0);
        coeffs[n - k] = -trace / k as i128;
    }
    IntPoly::new(coeffs)
}

fn matmul(a: &[Vec<i128>], b: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let n = a.len();
    let mut out = vec![vec![0i128; n]; n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i][k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_2x2() {
        // [[2,3],[3,4]]: x^2 - 6x - 1
        let p = charpoly(&[vec![2, 3], vec![3, 4]]);
        assert_eq!(p, IntPoly::from_descending(&[1, -6, -1]));
    }

    #[test]
    fn charpoly_matches_cofactor_expansion_3x3() {
        let a = [vec![1, 2, 0], vec![-1, 3, 4], vec![2, 0, 5]];
        // x^3 - tr(A) x^2 + (sum of principal 2x2 minors) x - det(A)
        // minors: (3+2) + (5-0) + (15-0) = 25; det(A) = 15 - 2*(-5-8) = 41
        assert_eq!(charpoly(&a), IntPoly::from_descending(&[1, -9, 25, -41]));
    }

    #[test]
    fn arithmetic_and_display() {
        let p = IntPoly::from_descending(&[1, -6, -1]);
        let q = &IntPoly::linear(3) * &p;
        assert_eq!(q, IntPoly::from_descending(&[1, -3, -19, -3]));
        assert_eq!(format!("{}", &q - &q), "0");
        assert_eq!(format!("{p}"), "x^2 - 6x - 1");
        assert_eq!(p.derivative(), IntPoly::from_descending(&[2, -6]));
    }

    #[test]
    fn largest_root() {
        // (x-1)(x-2)(x+5)
        let p = &(&IntPoly::linear(-1) * &IntPoly::linear(-2)) * &IntPoly::linear(5);
        assert!((p.largest_real_root().unwrap() - 2.0).abs() < 1e-12);
        let q = IntPoly::from_descending(&[1, -6, -1]);
        assert!((q.largest_real_root().unwrap() - (3.0 + 10f64.sqrt())).abs() < 1e-12);
    }
}
