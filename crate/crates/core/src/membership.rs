//! Membership verification for the QSP polynomial families and their
//! continuous-target counterparts.
//!
//! A polynomial belongs to P when it maps [0,1] into [0,1], is ≤ 0 left of
//! the origin, and ≥ 1 right of 1; Q replaces the last clause with ≤ 0 right
//! of 1. The primed variants are the strict open-interval versions. The
//! unbounded clauses are finitized through the Cauchy root bound plus a
//! leading-coefficient sign test: beyond every real root the leading monomial
//! owns the sign.
//!
//! Verdicts are resolved against a per-evaluation numeric noise floor:
//! a violation smaller than what double-precision evaluation of this
//! particular polynomial can resolve counts as zero. The paper treats
//! membership as an exact property; the Member/MemberWithinTol split is this
//! artifact's tolerance semantics.

use serde::{Deserialize, Serialize};

use crate::poly::{Interval, Poly};

/// Default tolerance (in function value) for membership checks.
pub const DEFAULT_MEMBERSHIP_TOL: f64 = 1e-9;

/// The four polynomial families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    P,
    Q,
    #[serde(rename = "Pprime")]
    PPrime,
    #[serde(rename = "Qprime")]
    QPrime,
}

impl Family {
    pub fn is_strict(self) -> bool {
        matches!(self, Family::PPrime | Family::QPrime)
    }

    /// Families whose members exceed 1 right of 1 (P-like) vs dip below 0
    /// (Q-like).
    pub fn is_p_like(self) -> bool {
        matches!(self, Family::P | Family::PPrime)
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::P => "P",
            Family::Q => "Q",
            Family::PPrime => "Pprime",
            Family::QPrime => "Qprime",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "P" | "p" => Ok(Family::P),
            "Q" | "q" => Ok(Family::Q),
            "Pprime" | "pprime" | "P'" => Ok(Family::PPrime),
            "Qprime" | "qprime" | "Q'" => Ok(Family::QPrime),
            other => Err(format!("unknown family: {other}")),
        }
    }
}

/// Continuous-target classes: F1 (endpoints 0,1) and F2 (endpoints 0,0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TargetClass {
    F1,
    F2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Member,
    MemberWithinTol,
    NotMember,
}

/// A point violating a clause, with the offending value.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Witness {
    pub x: f64,
    pub value: f64,
    pub violated_clause: String,
}

/// Minimum slack observed for one clause (negative = violated).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClauseMargin {
    pub clause: String,
    pub slack: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MembershipReport {
    pub schema: String,
    pub family: String,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
    pub margins: Vec<ClauseMargin>,
    /// The finite bound substituted for ±∞ in the unbounded clauses.
    pub checked_bound: f64,
}

impl MembershipReport {
    pub fn is_member(&self) -> bool {
        self.verdict == Verdict::Member
    }
}

/// Outcome of a one-sided region check, before tolerance classification.
struct ClauseOutcome {
    clause: &'static str,
    /// Worst violation in function value (≥ 0; already noise-floored).
    violation: f64,
    /// Raw slack (bound minus extremum, sign included).
    slack: f64,
    witness: Option<(f64, f64)>,
}

fn clamp_report_value(v: f64) -> f64 {
    if v.is_finite() {
        v
    } else {
        1e300_f64.copysign(v)
    }
}

/// sup of p over `i` must be ≤ `bound`. When `strict_inside` is set the
/// clause is the strict `p < bound` away from the interval endpoints listed
/// in `allowed_touch`.
fn check_sup_le(
    p: &Poly,
    i: Interval,
    bound: f64,
    clause: &'static str,
    strict_inside: bool,
    allowed_touch: &[f64],
) -> ClauseOutcome {
    let (_, _, maxv, maxat) = p.range_on(i);
    let (_, noise) = p.eval_with_bound(maxat);
    let floor = noise.max(1e-12 * (1.0 + bound.abs()));
    let raw = maxv - bound;
    let mut violation = if raw > floor { raw } else { 0.0 };
    let mut witness = if violation > 0.0 {
        Some((maxat, maxv))
    } else {
        None
    };
    if strict_inside && violation == 0.0 && raw >= -floor {
        // p touches the bound: a strict clause is violated unless the touch
        // happens at an allowed endpoint.
        let edge = 1e-9 * (1.0 + i.len());
        if !allowed_touch.iter().any(|&t| (maxat - t).abs() <= edge) {
            violation = floor.min(1e-12);
            witness = Some((maxat, maxv));
        }
    }
    ClauseOutcome {
        clause,
        violation,
        slack: -raw,
        witness,
    }
}

fn check_inf_ge(
    p: &Poly,
    i: Interval,
    bound: f64,
    clause: &'static str,
    strict_inside: bool,
    allowed_touch: &[f64],
) -> ClauseOutcome {
    let (minv, minat, _, _) = p.range_on(i);
    let (_, noise) = p.eval_with_bound(minat);
    let floor = noise.max(1e-12 * (1.0 + bound.abs()));
    let raw = bound - minv;
    let mut violation = if raw > floor { raw } else { 0.0 };
    let mut witness = if violation > 0.0 {
        Some((minat, minv))
    } else {
        None
    };
    if strict_inside && violation == 0.0 && raw >= -floor {
        let edge = 1e-9 * (1.0 + i.len());
        if !allowed_touch.iter().any(|&t| (minat - t).abs() <= edge) {
            violation = floor.min(1e-12);
            witness = Some((minat, minv));
        }
    }
    ClauseOutcome {
        clause,
        violation,
        slack: -raw,
        witness,
    }
}

/// Leading-behavior test: the sign of p at −∞ (dir < 0) or +∞ (dir > 0).
fn sign_at_infinity(p: &Poly, dir: f64) -> f64 {
    match p.degree() {
        None => 0.0,
        Some(0) => p.coeffs()[0].signum(),
        Some(d) => {
            let lead = p.leading_coeff().signum();
            if dir > 0.0 || d % 2 == 0 {
                lead
            } else {
                -lead
            }
        }
    }
}

/// True when `p(x) + p(1−x) = 1` holds at the coefficient level, within
/// the resolution the representation supports.
///
/// The reflection amplifies each stored-coefficient rounding by up to
/// C(k, j) ≤ 2^k, so the residual threshold scales with Σ|c_k|·2^k; a
/// polynomial whose asymmetry is below that cannot be told apart from a
/// symmetric one in f64.
pub fn is_half_symmetric(p: &Poly) -> bool {
    if p.is_zero() {
        return false;
    }
    let sum = p.add(&p.compose_affine(-1.0, 1.0));
    let n = p.coeffs().len() as f64;
    let tol = (8.0 * n * f64::EPSILON * p.abs_mag(2.0)).max(1e-13);
    for (k, &c) in sum.coeffs().iter().enumerate() {
        let want = if k == 0 { 1.0 } else { 0.0 };
        if (c - want).abs() > tol {
            return false;
        }
    }
    true
}

/// Verify membership of `p` in `fam` to tolerance `tol` (in function value).
pub fn check_family(p: &Poly, fam: Family, tol: f64) -> MembershipReport {
    assert!(tol > 0.0);
    let strict = fam.is_strict();

    // Finite bound substituted for the unbounded clauses.
    let b_left = p.cauchy_bound().unwrap_or(2.0).max(2.0);
    let shifted = p.sub(&Poly::constant(1.0));
    let b_right = if fam.is_p_like() {
        shifted.cauchy_bound().unwrap_or(2.0).max(2.0)
    } else {
        b_left
    };
    let checked_bound = b_left.max(b_right);

    let mut outcomes: Vec<ClauseOutcome> = Vec::new();

    // The symmetric case p(x) + p(1−x) = 1 lets every clause be checked on
    // the half where the monomial representation is well conditioned; for
    // P-like families the right tail mirrors the left tail exactly.
    let symmetric = fam.is_p_like() && is_half_symmetric(p);

    // Clause (i): p([0,1]) ⊆ [0,1] (open for the primed variants).
    let unit = if symmetric {
        Interval::new(0.0, 0.5)
    } else {
        Interval::new(0.0, 1.0)
    };
    outcomes.push(check_inf_ge(p, unit, 0.0, "(i) lower", strict, &[0.0, 1.0]));
    outcomes.push(check_sup_le(p, unit, 1.0, "(i) upper", strict, &[0.0, 1.0]));
    if symmetric {
        // Range of p on [1/2, 1] is 1 − (range on [0, 1/2]); the same two
        // checks already cover it.
    } else if unit.hi < 1.0 {
        unreachable!();
    }

    // Clause (ii): p ≤ 0 on [−B, 0] plus the tail sign.
    let left = Interval::new(-b_left, 0.0);
    outcomes.push(check_sup_le(p, left, 0.0, "(ii) x<=0", strict, &[0.0]));
    if sign_at_infinity(p, -1.0) > 0.0 {
        outcomes.push(ClauseOutcome {
            clause: "(ii) x<=0 tail",
            violation: f64::INFINITY,
            slack: f64::NEG_INFINITY,
            witness: Some((-2.0 * b_left, clamp_report_value(p.eval(-2.0 * b_left)))),
        });
    }

    // Clause (iii)/(iii'): behavior right of 1.
    if fam.is_p_like() {
        if symmetric {
            // p ≥ 1 on [1, B] ⟺ p ≤ 0 on [1−B, 0]: already covered by the
            // left check when the bounds match; extend the interval if not.
            if b_right > b_left {
                let ext = Interval::new(-b_right, 0.0);
                outcomes.push(check_sup_le(p, ext, 0.0, "(iii) x>=1", strict, &[0.0]));
            } else {
                // Mirror of clause (ii); record the slack it implies.
                let last = &outcomes[outcomes.len() - 2];
                outcomes.push(ClauseOutcome {
                    clause: "(iii) x>=1",
                    violation: last.violation,
                    slack: last.slack,
                    witness: last.witness.map(|(x, v)| (1.0 - x, 1.0 - v)),
                });
            }
        } else {
            let right = Interval::new(1.0, b_right);
            outcomes.push(check_inf_ge(p, right, 1.0, "(iii) x>=1", strict, &[1.0]));
        }
        if sign_at_infinity(p, 1.0) < 0.0 {
            outcomes.push(ClauseOutcome {
                clause: "(iii) x>=1 tail",
                violation: f64::INFINITY,
                slack: f64::NEG_INFINITY,
                witness: Some((2.0 * b_right, clamp_report_value(p.eval(2.0 * b_right)))),
            });
        }
    } else {
        let right = Interval::new(1.0, b_right);
        outcomes.push(check_sup_le(p, right, 0.0, "(iii') x>=1", strict, &[1.0]));
        if sign_at_infinity(p, 1.0) > 0.0 {
            outcomes.push(ClauseOutcome {
                clause: "(iii') x>=1 tail",
                violation: f64::INFINITY,
                slack: f64::NEG_INFINITY,
                witness: Some((2.0 * b_right, clamp_report_value(p.eval(2.0 * b_right)))),
            });
        }
    }

    assemble_report(fam.name(), outcomes, tol, checked_bound)
}

fn assemble_report(
    family: &str,
    outcomes: Vec<ClauseOutcome>,
    tol: f64,
    checked_bound: f64,
) -> MembershipReport {
    let worst = outcomes.iter().fold(0.0_f64, |w, o| w.max(o.violation));
    let verdict = if worst <= 0.0 {
        Verdict::Member
    } else if worst <= tol {
        Verdict::MemberWithinTol
    } else {
        Verdict::NotMember
    };
    let witnesses = if verdict == Verdict::NotMember {
        outcomes
            .iter()
            .filter(|o| o.violation > tol)
            .filter_map(|o| {
                o.witness.map(|(x, value)| Witness {
                    x,
                    value: clamp_report_value(value),
                    violated_clause: o.clause.to_string(),
                })
            })
            .collect()
    } else {
        Vec::new()
    };
    let margins = outcomes
        .iter()
        .map(|o| ClauseMargin {
            clause: o.clause.to_string(),
            slack: clamp_report_value(o.slack),
        })
        .collect();
    MembershipReport {
        schema: "v1".to_string(),
        family: family.to_string(),
        verdict,
        witnesses,
        margins,
        checked_bound,
    }
}

/// Degree-parity cross-check: true iff the parity matches the family (odd
/// for P-like, even for Q-like). Only meaningful after a Member verdict;
/// never a membership criterion by itself.
pub fn parity_consequence(p: &Poly, fam: Family) -> bool {
    match p.degree() {
        None => !fam.is_p_like(),
        Some(d) => {
            if fam.is_p_like() {
                d % 2 == 1
            } else {
                d % 2 == 0
            }
        }
    }
}

/// Built-in continuous targets on [0,1].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Builtin {
    Identity,
    Square,
    /// c·x(1−x)
    ScaledBump(f64),
    /// sin(πx/2)
    HalfSine,
    Zero,
    /// The step Θ (0 below 1/2, 1 above, 1/2 at 1/2), admitted only
    /// restricted to a gap domain A_ε; the payload is ε.
    ThetaStep(f64),
}

/// A continuous target function on [0,1].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum TargetFunction {
    Builtin(Builtin),
    /// Piecewise-linear through strictly increasing knots covering [0,1].
    Table { xs: Vec<f64>, ys: Vec<f64> },
    PolyTarget(Poly),
}

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum TargetError {
    #[error("table must have xs strictly increasing from 0 to 1 with ys in [0,1]")]
    InvalidTable,
}

impl TargetFunction {
    pub fn table(xs: Vec<f64>, ys: Vec<f64>) -> Result<Self, TargetError> {
        if xs.len() != ys.len() || xs.len() < 2 {
            return Err(TargetError::InvalidTable);
        }
        if xs[0] != 0.0 || *xs.last().unwrap() != 1.0 {
            return Err(TargetError::InvalidTable);
        }
        if xs.windows(2).any(|w| w[0] >= w[1]) {
            return Err(TargetError::InvalidTable);
        }
        if ys.iter().any(|&y| !(0.0..=1.0).contains(&y)) {
            return Err(TargetError::InvalidTable);
        }
        Ok(TargetFunction::Table { xs, ys })
    }

    pub fn eval(&self, x: f64) -> f64 {
        match self {
            TargetFunction::Builtin(b) => match *b {
                Builtin::Identity => x,
                Builtin::Square => x * x,
                Builtin::ScaledBump(c) => c * x * (1.0 - x),
                Builtin::HalfSine => (std::f64::consts::FRAC_PI_2 * x).sin(),
                Builtin::Zero => 0.0,
                Builtin::ThetaStep(_) => {
                    if x < 0.5 {
                        0.0
                    } else if x > 0.5 {
                        1.0
                    } else {
                        0.5
                    }
                }
            },
            TargetFunction::Table { xs, ys } => {
                if x <= xs[0] {
                    return ys[0];
                }
                if x >= *xs.last().unwrap() {
                    return *ys.last().unwrap();
                }
                let k = xs.partition_point(|&t| t <= x) - 1;
                let t = (x - xs[k]) / (xs[k + 1] - xs[k]);
                ys[k] + t * (ys[k + 1] - ys[k])
            }
            TargetFunction::PolyTarget(p) => p.eval(x),
        }
    }

    /// True when the target is identically zero (the Q-pipeline special
    /// case).
    pub fn is_identically_zero(&self) -> bool {
        match self {
            TargetFunction::Builtin(Builtin::Zero) => true,
            TargetFunction::PolyTarget(p) => p.is_zero(),
            TargetFunction::Table { ys, .. } => ys.iter().all(|&y| y == 0.0),
            _ => false,
        }
    }
}

/// Verify that `f` lies in the target class: endpoint values plus range in
/// [0,1]. Tables are checked exactly at knots; polynomial targets through
/// root isolation; builtins on a refining grid.
pub fn check_target(f: &TargetFunction, class: TargetClass, tol: f64) -> MembershipReport {
    let mut outcomes: Vec<ClauseOutcome> = Vec::new();
    let name = match class {
        TargetClass::F1 => "F1",
        TargetClass::F2 => "F2",
    };
    let end1 = match class {
        TargetClass::F1 => 1.0,
        TargetClass::F2 => 0.0,
    };

    if let TargetFunction::Builtin(Builtin::ThetaStep(_)) = f {
        // Θ is not continuous on [0,1]; it is only admitted restricted to a
        // gap domain by the step-function paths.
        return assemble_report(
            name,
            vec![ClauseOutcome {
                clause: "continuity",
                violation: 0.5,
                slack: -0.5,
                witness: Some((0.5, 0.5)),
            }],
            tol,
            1.0,
        );
    }

    let v0 = f.eval(0.0);
    outcomes.push(ClauseOutcome {
        clause: "f(0) = 0",
        violation: if v0.abs() > 1e-12 { v0.abs() } else { 0.0 },
        slack: -v0.abs(),
        witness: Some((0.0, v0)),
    });
    let v1 = f.eval(1.0);
    outcomes.push(ClauseOutcome {
        clause: match class {
            TargetClass::F1 => "f(1) = 1",
            TargetClass::F2 => "f(1) = 0",
        },
        violation: if (v1 - end1).abs() > 1e-12 {
            (v1 - end1).abs()
        } else {
            0.0
        },
        slack: -(v1 - end1).abs(),
        witness: Some((1.0, v1)),
    });

    // Range check.
    let (minv, minat, maxv, maxat) = match f {
        TargetFunction::PolyTarget(p) => p.range_on(Interval::new(0.0, 1.0)),
        TargetFunction::Table { xs, ys } => {
            let mut mn = (f64::INFINITY, 0.0);
            let mut mx = (f64::NEG_INFINITY, 0.0);
            for (&x, &y) in xs.iter().zip(ys) {
                if y < mn.0 {
                    mn = (y, x);
                }
                if y > mx.0 {
                    mx = (y, x);
                }
            }
            (mn.0, mn.1, mx.0, mx.1)
        }
        _ => scan_range(f),
    };
    outcomes.push(ClauseOutcome {
        clause: "range lower",
        violation: if -minv > 1e-12 { -minv } else { 0.0 },
        slack: minv,
        witness: Some((minat, minv)),
    });
    outcomes.push(ClauseOutcome {
        clause: "range upper",
        violation: if maxv - 1.0 > 1e-12 { maxv - 1.0 } else { 0.0 },
        slack: 1.0 - maxv,
        witness: Some((maxat, maxv)),
    });

    // Keep witnesses only for actual violations.
    for o in &mut outcomes {
        if o.violation == 0.0 {
            o.witness = None;
        }
    }
    assemble_report(name, outcomes, tol, 1.0)
}

/// Grid scan with one local refinement pass around each extremum.
fn scan_range(f: &TargetFunction) -> (f64, f64, f64, f64) {
    let n = 4096;
    let mut mn = (f64::INFINITY, 0.0);
    let mut mx = (f64::NEG_INFINITY, 0.0);
    for k in 0..=n {
        let x = k as f64 / n as f64;
        let v = f.eval(x);
        if v < mn.0 {
            mn = (v, x);
        }
        if v > mx.0 {
            mx = (v, x);
        }
    }
    let refine = |center: f64, sign: f64| -> (f64, f64) {
        let mut best = (sign * f.eval(center), center);
        let mut width = 1.0 / n as f64;
        let mut c = center;
        for _ in 0..30 {
            for &x in &[c - 0.5 * width, c + 0.5 * width] {
                if (0.0..=1.0).contains(&x) {
                    let v = sign * f.eval(x);
                    if v > best.0 {
                        best = (v, x);
                    }
                }
            }
            c = best.1;
            width *= 0.6;
        }
        (sign * best.0, best.1)
    };
    let (maxv, maxat) = refine(mx.1, 1.0);
    let (minv, minat) = refine(mn.1, -1.0);
    (minv, minat, maxv, maxat)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p_of(coeffs: &[f64]) -> Poly {
        Poly::new(coeffs.to_vec())
    }

    #[test]
    fn identity_in_p() {
        let r = check_family(&Poly::identity(), Family::P, DEFAULT_MEMBERSHIP_TOL);
        assert_eq!(r.verdict, Verdict::Member, "{r:?}");
        assert!(parity_consequence(&Poly::identity(), Family::P));
    }

    #[test]
    fn bump_in_q() {
        let bump = p_of(&[0.0, 1.0, -1.0]);
        let r = check_family(&bump, Family::Q, DEFAULT_MEMBERSHIP_TOL);
        assert_eq!(r.verdict, Verdict::Member, "{r:?}");
        assert!(parity_consequence(&bump, Family::Q));
    }

    #[test]
    fn cubic_step_not_in_p() {
        // 3x² − 2x³ fails clause (ii): value 5 at x = −1.
        let p = p_of(&[0.0, 0.0, 3.0, -2.0]);
        let r = check_family(&p, Family::P, DEFAULT_MEMBERSHIP_TOL);
        assert_eq!(r.verdict, Verdict::NotMember);
        let w = r
            .witnesses
            .iter()
            .find(|w| w.violated_clause.starts_with("(ii)"))
            .expect("clause (ii) witness");
        assert!(w.x < 0.0);
        assert!(w.value > 0.0);
    }

    #[test]
    fn strict_families() {
        // x is in P′ as well: strictly inside (0,1) on the open interval.
        let r = check_family(&Poly::identity(), Family::PPrime, DEFAULT_MEMBERSHIP_TOL);
        assert_eq!(r.verdict, Verdict::Member, "{r:?}");
        // x(1−x)·1.0 touches nothing; in Q′.
        let bump = p_of(&[0.0, 1.0, -1.0]);
        let r = check_family(&bump, Family::QPrime, DEFAULT_MEMBERSHIP_TOL);
        assert_eq!(r.verdict, Verdict::Member, "{r:?}");
        // 4x(1−x) touches 1 at x = 1/2: not strictly below 1, and also not
        // a clean member of Q′ at tolerance 0.
        let full_bump = p_of(&[0.0, 4.0, -4.0]);
        let r = check_family(&full_bump, Family::QPrime, DEFAULT_MEMBERSHIP_TOL);
        assert_ne!(r.verdict, Verdict::Member, "{r:?}");
    }

    #[test]
    fn target_examples() {
        let id = TargetFunction::Builtin(Builtin::Identity);
        assert!(check_target(&id, TargetClass::F1, 1e-9).is_member());
        let zero = TargetFunction::Builtin(Builtin::Zero);
        assert!(check_target(&zero, TargetClass::F2, 1e-9).is_member());
        let sq = TargetFunction::Builtin(Builtin::Square);
        let r = check_target(&sq, TargetClass::F2, 1e-9);
        assert_eq!(r.verdict, Verdict::NotMember);
        assert!(r.witnesses.iter().any(|w| w.x == 1.0));
    }

    #[test]
    fn theta_rejected_as_continuous_target() {
        let th = TargetFunction::Builtin(Builtin::ThetaStep(0.1));
        let r = check_target(&th, TargetClass::F1, 1e-9);
        assert_eq!(r.verdict, Verdict::NotMember);
    }

    #[test]
    fn table_validation() {
        assert!(TargetFunction::table(vec![0.0, 0.5, 1.0], vec![0.0, 0.3, 1.0]).is_ok());
        assert_eq!(
            TargetFunction::table(vec![0.0, 0.5], vec![0.0, 1.5]),
            Err(TargetError::InvalidTable)
        );
        assert_eq!(
            TargetFunction::table(vec![0.1, 1.0], vec![0.0, 1.0]),
            Err(TargetError::InvalidTable)
        );
    }

    #[test]
    fn idempotent_and_parity() {
        let p = Poly::identity();
        let r1 = check_family(&p, Family::P, 1e-9);
        let r2 = check_family(&p.scale(1.0), Family::P, 1e-9);
        assert_eq!(r1.verdict, r2.verdict);
        assert!(parity_consequence(&p, Family::P));
    }
}
