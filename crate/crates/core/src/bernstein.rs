//! Bernstein operators: the general approximant B_n f and the step-function
//! specialization B_L Θ with its parity and convergence-rate facts.
//!
//! `bernstein` expands to the monomial basis once. The expansion is exact in
//! structure but its conditioning degrades with n: evaluation noise near
//! x = 1 grows roughly like 4ⁿ·eps, which makes the expanded form unusable
//! beyond n ≈ 45–60. The stable evaluator [`step_value`] works in the
//! Bernstein basis (nonnegative terms on [0, 1/2], reflected by symmetry
//! elsewhere) and stays accurate for any n this crate accepts; rate checks
//! and sweeps go through it.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::membership::{check_family, Family, TargetFunction, DEFAULT_MEMBERSHIP_TOL};
use crate::poly::Poly;
use crate::util::Dd;

/// Hard cap on the Bernstein degree; far above it the monomial expansion is
/// meaningless in f64 anyway.
pub const MAX_DEGREE: usize = 200;

#[derive(Debug, Error, PartialEq)]
pub enum BernsteinError {
    #[error("bernstein approximation needs degree n >= 1")]
    ZeroDegree,
    #[error("step approximant degree must be odd")]
    EvenDegree,
    #[error("degree {0} exceeds the cap {MAX_DEGREE}")]
    DegreeTooLarge(usize),
    #[error("gap width must satisfy 0 < eps < 1/2")]
    InvalidEps,
}

/// The gap domain A_ε = [0, 1/2−ε] ∪ [1/2+ε, 1].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StepDomain {
    eps: f64,
}

impl StepDomain {
    pub fn new(eps: f64) -> Result<Self, BernsteinError> {
        if eps > 0.0 && eps < 0.5 {
            Ok(StepDomain { eps })
        } else {
            Err(BernsteinError::InvalidEps)
        }
    }

    pub fn eps(self) -> f64 {
        self.eps
    }
}

/// Binomial coefficient as f64, by the overflow-free multiplicative
/// recurrence (exact to rounding for n ≤ 200).
pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut c = 1.0_f64;
    for j in 0..k {
        c = c * (n - j) as f64 / (j + 1) as f64;
    }
    c
}

fn ln_binomial(n: usize, k: usize) -> f64 {
    let k = k.min(n - k);
    let mut s = 0.0;
    for j in 0..k {
        s += (((n - j) as f64) / ((j + 1) as f64)).ln();
    }
    s
}

/// Degree-n Bernstein approximant of `f`, expanded to the monomial basis.
pub fn bernstein(f: &TargetFunction, n: usize) -> Result<Poly, BernsteinError> {
    bernstein_fn(|x| f.eval(x), n)
}

/// Same as [`bernstein`] for an arbitrary evaluator.
pub fn bernstein_fn<F: Fn(f64) -> f64>(f: F, n: usize) -> Result<Poly, BernsteinError> {
    if n == 0 {
        return Err(BernsteinError::ZeroDegree);
    }
    if n > MAX_DEGREE {
        return Err(BernsteinError::DegreeTooLarge(n));
    }
    let weights: Vec<f64> = (0..=n).map(|k| f(k as f64 / n as f64)).collect();
    Ok(expand_bernstein(&weights))
}

/// Monomial expansion via the forward-difference identity
/// `B_n f = Σ_j C(n,j) Δʲw₀ xʲ`.
///
/// The difference table runs in double-double arithmetic: for smooth
/// weights the high-order differences cancel to near zero and plain f64
/// subtraction would fill them with noise amplified by C(n,j).
pub(crate) fn expand_bernstein(weights: &[f64]) -> Poly {
    let n = weights.len() - 1;
    let mut table: Vec<Dd> = weights.iter().map(|&w| Dd::from(w)).collect();
    let mut coeffs = vec![0.0; n + 1];
    coeffs[0] = weights[0];
    for j in 1..=n {
        for i in 0..=(n - j) {
            table[i] = table[i + 1].sub(table[i]);
        }
        coeffs[j] = table[0].mul_f64(binomial(n, j)).value();
    }
    Poly::new(coeffs)
}

/// The Bernstein step approximant B_L Θ for odd L, expanded to monomials.
///
/// Θ(k/L) is 0 below the midpoint and 1 above it; odd L never samples the
/// midpoint, so the weights are exactly {0, 1}.
pub fn bernstein_step(l: usize) -> Result<Poly, BernsteinError> {
    if l == 0 {
        return Err(BernsteinError::ZeroDegree);
    }
    if l % 2 == 0 {
        return Err(BernsteinError::EvenDegree);
    }
    if l > MAX_DEGREE {
        return Err(BernsteinError::DegreeTooLarge(l));
    }
    let weights: Vec<f64> = (0..=l).map(|k| if 2 * k > l { 1.0 } else { 0.0 }).collect();
    Ok(expand_bernstein(&weights))
}

/// Numerically stable evaluation of (B_L Θ)(x) for any real x.
///
/// On x ≤ 1/2 the Bernstein-basis sum Σ_{k>L/2} C(L,k) x^k (1−x)^{L−k} is
/// computed from the leading term in log space with term-ratio recurrence
/// (all terms one sign for 0 ≤ x ≤ 1/2, geometrically decaying alternation
/// for x < 0); x > 1/2 reflects through p(x) = 1 − p(1−x).
pub fn step_value(l: usize, x: f64) -> f64 {
    assert!(l % 2 == 1, "step approximant needs odd degree");
    if x > 0.5 {
        return 1.0 - step_value(l, 1.0 - x);
    }
    if x == 0.0 {
        return 0.0;
    }
    let k0 = l / 2 + 1; // (L+1)/2
    // ln |t_{k0}| = ln C(L,k0) + k0 ln|x| + (L−k0) ln|1−x|
    let ln_lead = ln_binomial(l, k0) + (k0 as f64) * x.abs().ln() + ((l - k0) as f64) * (1.0 - x).ln();
    let lead_sign = if x < 0.0 && k0 % 2 == 1 { -1.0 } else { 1.0 };
    // series = 1 + Σ Π ratios, with t_{k+1}/t_k = (L−k)/(k+1) · x/(1−x).
    let q = x / (1.0 - x);
    let mut series = 1.0_f64;
    let mut term = 1.0_f64;
    for k in k0..l {
        term *= ((l - k) as f64) / ((k + 1) as f64) * q;
        series += term;
        if term.abs() < 1e-20 * series.abs() {
            break;
        }
    }
    lead_sign * series.signum() * (ln_lead + series.abs().ln()).exp()
}

/// Membership of B_L Θ in P, via the generic checker on the expansion.
/// Contract: true ⇔ L ≡ 1 (mod 4).
pub fn step_parity_check(l: usize) -> Result<bool, BernsteinError> {
    let p = bernstein_step(l)?;
    Ok(check_family(&p, Family::P, DEFAULT_MEMBERSHIP_TOL).is_member())
}

/// Measured sup error of B_L Θ on A_ε together with the large-deviation
/// bound 2e^{−2Lε²}.
///
/// By monotonicity and symmetry the sup over A_ε is attained at 1/2 − ε,
/// so the measurement is a single stable evaluation.
pub fn step_error(l: usize, dom: StepDomain) -> (f64, f64) {
    assert!(l % 4 == 1, "rate bound needs L ≡ 1 (mod 4)");
    let eps = dom.eps();
    let measured = step_value(l, 0.5 - eps);
    let bound = 2.0 * (-2.0 * l as f64 * eps * eps).exp();
    (measured, bound)
}

/// Function-value form of the step approximant for pipeline-internal use:
/// weights in the Bernstein basis with stable de Casteljau evaluation.
#[derive(Debug, Clone)]
pub struct BernsteinForm {
    weights: Vec<f64>,
}

impl BernsteinForm {
    /// Sample `f` at the n+1 Bernstein knots.
    pub fn sample<F: Fn(f64) -> f64>(f: F, n: usize) -> Self {
        let weights = (0..=n).map(|k| f(k as f64 / n as f64)).collect();
        BernsteinForm { weights }
    }

    pub fn degree(&self) -> usize {
        self.weights.len() - 1
    }

    /// de Casteljau evaluation; stable for x in [0,1].
    pub fn eval(&self, x: f64) -> f64 {
        let mut v = self.weights.clone();
        let n = v.len() - 1;
        for r in 1..=n {
            for i in 0..=(n - r) {
                v[i] = (1.0 - x) * v[i] + x * v[i + 1];
            }
        }
        v[0]
    }

    /// Derivative value: n · de Casteljau over forward differences.
    pub fn deriv_eval(&self, x: f64) -> f64 {
        let n = self.weights.len() - 1;
        if n == 0 {
            return 0.0;
        }
        let mut d: Vec<f64> = self
            .weights
            .windows(2)
            .map(|w| (w[1] - w[0]) * n as f64)
            .collect();
        let m = d.len() - 1;
        for r in 1..=m {
            for i in 0..=(m - r) {
                d[i] = (1.0 - x) * d[i] + x * d[i + 1];
            }
        }
        d[0]
    }

    pub fn to_poly(&self) -> Poly {
        expand_bernstein(&self.weights)
    }
}
