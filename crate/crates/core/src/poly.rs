//! Dense real polynomials in the monomial basis, plus the odd expansion
//! about x = 1/2 used by the symmetric step approximants.
//!
//! Coefficients are stored ascending: `coeffs[k]` multiplies `x^k`. The zero
//! polynomial is the empty coefficient vector, and trailing coefficients that
//! are exactly `0.0` are trimmed on construction (tolerance trimming is the
//! caller's business).

use thiserror::Error;

use crate::util::{two_prod, two_sum};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    /// A root bound needs degree at least 1.
    #[error("polynomial degree too low for a root bound")]
    DegreeTooLow,
}

/// Closed interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        assert!(lo <= hi, "interval endpoints out of order: [{lo}, {hi}]");
        Interval { lo, hi }
    }

    pub fn len(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }
}

/// Dense univariate polynomial over `f64`, monomial basis, ascending degree.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
#[serde(from = "Vec<f64>", into = "Vec<f64>")]
pub struct Poly {
    coeffs: Vec<f64>,
}

impl From<Vec<f64>> for Poly {
    fn from(coeffs: Vec<f64>) -> Self {
        Poly::new(coeffs)
    }
}

impl From<Poly> for Vec<f64> {
    fn from(p: Poly) -> Self {
        p.coeffs
    }
}

impl Poly {
    /// Build from ascending coefficients; trailing exact zeros are trimmed.
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: f64) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial x.
    pub fn identity() -> Self {
        Poly { coeffs: vec![0.0, 1.0] }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> f64 {
        *self.coeffs.last().unwrap_or(&0.0)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for &c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Compensated (error-free transformation) Horner evaluation.
    ///
    /// Roughly doubles the working precision, which matters when the
    /// monomial representation is badly conditioned (large coefficients
    /// cancelling to a small value). Falls back to plain Horner near the
    /// overflow range where the Dekker split is unsafe.
    pub fn eval_acc(&self, x: f64) -> f64 {
        if self.coeffs.is_empty() {
            return 0.0;
        }
        let plain = self.eval(x);
        if !plain.is_finite() || x.abs() > 1e280 {
            return plain;
        }
        let mut s = *self.coeffs.last().unwrap();
        let mut e = 0.0;
        for &c in self.coeffs.iter().rev().skip(1) {
            if s.abs() > 1e280 {
                return plain;
            }
            let (p, pi) = two_prod(s, x);
            let (t, sigma) = two_sum(p, c);
            s = t;
            e = e * x + (pi + sigma);
        }
        s + e
    }

    /// Σ|c_k|·|x|^k — the conditioning magnitude of evaluation at x.
    pub fn abs_mag(&self, x: f64) -> f64 {
        let ax = x.abs();
        let mut mag = 0.0;
        for &c in self.coeffs.iter().rev() {
            mag = mag * ax + c.abs();
        }
        mag
    }

    /// Compensated value together with the resolution limit of this
    /// representation at x.
    ///
    /// The bound covers both the coefficient rounding of the stored
    /// representation (eps per coefficient) and the compensated-Horner
    /// evaluation error; values below it carry no sign information.
    pub fn eval_with_bound(&self, x: f64) -> (f64, f64) {
        let v = self.eval_acc(x);
        let n = self.coeffs.len() as f64;
        let mag = self.abs_mag(x);
        let eps = f64::EPSILON;
        let bound = 2.5 * eps * mag + 4.0 * n * n * eps * eps * mag;
        (v, bound)
    }

    /// Antiderivative with zero constant term.
    pub fn integral(&self) -> Poly {
        if self.coeffs.is_empty() {
            return Poly::zero();
        }
        let mut coeffs = vec![0.0; self.coeffs.len() + 1];
        for (k, &c) in self.coeffs.iter().enumerate() {
            coeffs[k + 1] = c / (k + 1) as f64;
        }
        Poly::new(coeffs)
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| k as f64 * c)
            .collect();
        Poly::new(coeffs)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![0.0; n];
        for (k, c) in coeffs.iter_mut().enumerate() {
            let a = self.coeffs.get(k).copied().unwrap_or(0.0);
            let b = other.coeffs.get(k).copied().unwrap_or(0.0);
            *c = a + b;
        }
        Poly::new(coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(-1.0))
    }

    pub fn scale(&self, c: f64) -> Poly {
        Poly::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::new(coeffs)
    }

    /// Coefficients of `x ↦ p(a·x + b)`, by Horner with a linear argument.
    pub fn compose_affine(&self, a: f64, b: f64) -> Poly {
        let mut result = Poly::zero();
        let arg = Poly::new(vec![b, a]);
        for &c in self.coeffs.iter().rev() {
            result = result.mul(&arg).add(&Poly::constant(c));
        }
        result
    }

    /// Cauchy root bound `B = 1 + max_{k<n} |c_k / c_n|`; every real root
    /// lies in `[-B, B]`.
    pub fn cauchy_bound(&self) -> Result<f64, PolyError> {
        if self.coeffs.len() < 2 {
            return Err(PolyError::DegreeTooLow);
        }
        let lead = self.leading_coeff().abs();
        let m = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .fold(0.0_f64, |m, c| m.max(c.abs() / lead));
        Ok(1.0 + m)
    }

    /// Global maximum of |p| over `i`, found from the endpoints and the
    /// critical points (roots of p' located by root isolation).
    /// Returns `(value, argmax)`.
    pub fn sup_abs_on(&self, i: Interval) -> (f64, f64) {
        let (minv, minat, maxv, maxat) = self.range_on(i);
        if minv.abs() > maxv.abs() {
            (minv.abs(), minat)
        } else {
            (maxv.abs(), maxat)
        }
    }

    /// Signed range of p over `i`: `(min, argmin, max, argmax)`, via
    /// endpoints plus interior critical points.
    pub fn range_on(&self, i: Interval) -> (f64, f64, f64, f64) {
        let mut pts = vec![i.lo, i.hi];
        let d = self.derivative();
        if !d.is_zero() && d.degree().unwrap_or(0) >= 1 {
            pts.extend(crate::roots::roots_in(&d, i, crate::roots::DEFAULT_TOL));
        } else if let Some(0) = d.degree() {
            // Linear p: endpoints suffice.
        }
        let mut minv = f64::INFINITY;
        let mut minat = i.lo;
        let mut maxv = f64::NEG_INFINITY;
        let mut maxat = i.lo;
        for &x in &pts {
            let v = self.eval_acc(x);
            if v < minv {
                minv = v;
                minat = x;
            }
            if v > maxv {
                maxv = v;
                maxat = x;
            }
        }
        (minv, minat, maxv, maxat)
    }
}

/// Odd polynomial expansion about x = 1/2:
/// `p(x) = 1/2 + Σ_k c_{2k+1} (x − 1/2)^{2k+1}` with `odd_coeffs[k] = c_{2k+1}`.
///
/// Every such polynomial satisfies `p(x) + p(1−x) = 1` identically, exactly
/// at the representation level. Evaluation happens directly in centered form;
/// the monomial expansion is only for export and membership checking.
#[derive(Debug, Clone, PartialEq)]
pub struct CenteredOddPoly {
    odd_coeffs: Vec<f64>,
}

impl CenteredOddPoly {
    pub fn new(odd_coeffs: Vec<f64>) -> Self {
        CenteredOddPoly { odd_coeffs }
    }

    pub fn odd_coeffs(&self) -> &[f64] {
        &self.odd_coeffs
    }

    /// Evaluate in centered form (Horner in u², u = x − 1/2).
    pub fn eval(&self, x: f64) -> f64 {
        let u = x - 0.5;
        let u2 = u * u;
        let mut acc = 0.0;
        for &c in self.odd_coeffs.iter().rev() {
            acc = acc * u2 + c;
        }
        0.5 + u * acc
    }

    /// Evaluate the derivative in centered form:
    /// `p'(x) = Σ_k (2k+1) c_{2k+1} u^{2k}`.
    pub fn deriv_eval(&self, x: f64) -> f64 {
        let u = x - 0.5;
        let u2 = u * u;
        let mut acc = 0.0;
        for (k, &c) in self.odd_coeffs.iter().enumerate().rev() {
            acc = acc * u2 + (2 * k + 1) as f64 * c;
        }
        acc
    }

    /// Monomial expansion `1/2 + Σ c_{2k+1} (x − 1/2)^{2k+1}`.
    pub fn to_poly(&self) -> Poly {
        let mut centered = vec![0.0; 2 * self.odd_coeffs.len() + 1];
        centered[0] = 0.5;
        for (k, &c) in self.odd_coeffs.iter().enumerate() {
            centered[2 * k + 1] = c;
        }
        Poly::new(centered).compose_affine(1.0, -0.5)
    }
}

impl From<&CenteredOddPoly> for Poly {
    fn from(s: &CenteredOddPoly) -> Poly {
        s.to_poly()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    #[test]
    fn eval_examples() {
        assert_eq!(Poly::identity().eval(0.7), 0.7);
        // 3x² − 2x³ at −1: 3 + 2 = 5.
        assert_eq!(Poly::new(vec![0.0, 0.0, 3.0, -2.0]).eval(-1.0), 5.0);
        assert_eq!(Poly::zero().eval(42.0), 0.0);
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(Poly::new(vec![0.0, 0.0, 1.0]).derivative().coeffs(), &[0.0, 2.0]);
        assert!(Poly::constant(5.0).derivative().is_zero());
        // d/dx (x³ − 2x⁴ + x⁵) = 3x² − 8x³ + 5x⁴
        let r12 = Poly::new(vec![0.0, 0.0, 0.0, 1.0, -2.0, 1.0]);
        assert_eq!(r12.derivative().coeffs(), &[0.0, 0.0, 3.0, -8.0, 5.0]);
    }

    #[test]
    fn arithmetic_examples() {
        let sum = Poly::new(vec![0.0, 1.0]).add(&Poly::new(vec![1.0, -1.0]));
        assert_eq!(sum.coeffs(), &[1.0]);
        assert!(Poly::new(vec![0.0, 1.0, 2.0]).scale(0.0).is_zero());
        let sq = Poly::identity().mul(&Poly::identity());
        assert_eq!(sq.coeffs(), &[0.0, 0.0, 1.0]);
    }

    #[test]
    fn compose_affine_examples() {
        let sq = Poly::new(vec![0.0, 0.0, 1.0]);
        assert_eq!(sq.compose_affine(1.0, 1.0).coeffs(), &[1.0, 2.0, 1.0]);
        assert_eq!(Poly::identity().compose_affine(-1.0, 1.0).coeffs(), &[1.0, -1.0]);
        // 3(1+u)² − 2(1+u)³ = 1 + 0u + 3u²... expand: 3+6u+3u² − 2−6u−6u²−2u³ = 1 − 3u² − 2u³.
        let p = Poly::new(vec![0.0, 0.0, 3.0, -2.0]);
        assert_eq!(p.compose_affine(1.0, 1.0).coeffs(), &[1.0, 0.0, -3.0, -2.0]);
    }

    #[test]
    fn centered_odd_examples() {
        let s = CenteredOddPoly::new(vec![1.0]);
        assert_eq!(s.to_poly().coeffs(), &[0.0, 1.0]);
        let half = CenteredOddPoly::new(vec![0.0]);
        assert_eq!(half.to_poly().coeffs(), &[0.5]);
        // 1/2 + a(x−1/2) + b(x−1/2)³ must satisfy p(x) + p(1−x) = 1.
        let s = CenteredOddPoly::new(vec![0.7, -2.3]);
        let p = s.to_poly();
        let refl = p.compose_affine(-1.0, 1.0);
        let sum = p.add(&refl);
        assert_eq!(sum.degree(), Some(0));
        assert_close(sum.coeffs()[0], 1.0, 1e-10);
        // Round-trip agreement between centered and expanded evaluation.
        for i in 0..=50 {
            let x = i as f64 / 50.0;
            assert_close(s.eval(x), p.eval(x), 1e-12);
        }
    }

    #[test]
    fn cauchy_bound_examples() {
        assert_eq!(Poly::new(vec![-1.0, 0.0, 1.0]).cauchy_bound().unwrap(), 2.0);
        assert_eq!(Poly::identity().cauchy_bound().unwrap(), 1.0);
        assert_eq!(Poly::new(vec![6.0, -5.0, 1.0]).cauchy_bound().unwrap(), 7.0);
        assert_eq!(Poly::constant(3.0).cauchy_bound(), Err(PolyError::DegreeTooLow));
    }

    #[test]
    fn sup_abs_examples() {
        let hump = Poly::new(vec![0.0, 1.0, -1.0]); // x(1−x)
        let (v, at) = hump.sup_abs_on(Interval::new(0.0, 1.0));
        assert_close(v, 0.25, 1e-12);
        assert_close(at, 0.5, 1e-9);

        let (v, at) = Poly::identity().sup_abs_on(Interval::new(0.0, 1.0));
        assert_eq!((v, at), (1.0, 1.0));

        // x³(1−x)²: closed-form max (1+γ)^{−3}(1+1/γ)^{−2} at (1+γ)^{−1}, γ = 2/3.
        let r12 = Poly::new(vec![0.0, 0.0, 0.0, 1.0, -2.0, 1.0]);
        let (v, at) = r12.sup_abs_on(Interval::new(0.0, 1.0));
        assert_close(v, 108.0 / 3125.0, 1e-12);
        assert_close(at, 0.6, 1e-9);
    }

    #[test]
    fn eval_acc_handles_cancellation() {
        // (x−1)^10 expanded: near x = 1 plain Horner loses most digits; the
        // compensated path keeps the absolute error near eps² · Σ|c_k||x|^k.
        let mut p = Poly::constant(1.0);
        let lin = Poly::new(vec![-1.0, 1.0]);
        for _ in 0..10 {
            p = p.mul(&lin);
        }
        let x = 1.0 + 1e-2;
        let exact = 1e-20;
        let plain = p.eval(x);
        let acc = p.eval_acc(x);
        assert!((acc - exact).abs() < 1e-24, "acc = {acc:e}");
        assert!((acc - exact).abs() < 1e-6 * (plain - exact).abs().max(1e-18));
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        proptest::collection::vec(-1e3_f64..1e3, 0..8).prop_map(Poly::new)
    }

    proptest! {
        #[test]
        fn add_is_pointwise(p in small_poly(), q in small_poly(), x in -2.0_f64..2.0) {
            let lhs = p.add(&q).eval(x);
            let rhs = p.eval(x) + q.eval(x);
            let scale = 1.0 + lhs.abs().max(rhs.abs());
            prop_assert!((lhs - rhs).abs() <= 1e-12 * scale);
        }

        #[test]
        fn product_rule_coefficientwise(p in small_poly(), q in small_poly()) {
            let lhs = p.mul(&q).derivative();
            let rhs = p.derivative().mul(&q).add(&p.mul(&q.derivative()));
            let n = lhs.coeffs().len().max(rhs.coeffs().len());
            for k in 0..n {
                let a = lhs.coeffs().get(k).copied().unwrap_or(0.0);
                let b = rhs.coeffs().get(k).copied().unwrap_or(0.0);
                let scale = 1.0 + a.abs().max(b.abs());
                prop_assert!((a - b).abs() <= 1e-12 * scale);
            }
        }

        #[test]
        fn compose_affine_identity(p in small_poly()) {
            prop_assert_eq!(p.compose_affine(1.0, 0.0), p);
        }

        #[test]
        fn centered_odd_symmetry(cs in proptest::collection::vec(-3.0_f64..3.0, 1..6)) {
            let s = CenteredOddPoly::new(cs);
            let p = s.to_poly();
            let sum = p.add(&p.compose_affine(-1.0, 1.0));
            for (k, &c) in sum.coeffs().iter().enumerate() {
                let want = if k == 0 { 1.0 } else { 0.0 };
                prop_assert!((c - want).abs() <= 1e-10);
            }
        }
    }
}
