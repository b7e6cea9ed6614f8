//! Real-root isolation on intervals by derivative recursion, and sign
//! analysis built on top of it.
//!
//! The recursion isolates the critical points of `p` (roots of `p'`, found by
//! the same procedure one degree down), which cut the interval into monotone
//! pieces; each piece with a sign change is bisected. Roots of even
//! multiplicity leave no sign change and are instead detected at critical
//! points where |p| dips below a threshold tied to the local scale of `p`.
//! Sturm chains were rejected: in double precision they fall apart well
//! before the degrees this crate works at.

use crate::poly::{Interval, Poly};

/// Default absolute x-accuracy for isolated roots.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Sign pattern of a polynomial over an interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignKind {
    StrictlyPositive,
    StrictlyNegative,
    NonNegative,
    NonPositive,
    Mixed,
}

/// Outcome of [`sign_on`]: the pattern, a violating point when the signs are
/// mixed, and the smallest |p| observed.
#[derive(Debug, Clone, Copy)]
pub struct SignVerdict {
    pub kind: SignKind,
    pub witness: Option<f64>,
    pub margin: f64,
}

/// All real roots of `p` in `i`, sorted, counted without multiplicity,
/// with absolute accuracy `tol`.
pub fn roots_in(p: &Poly, i: Interval, tol: f64) -> Vec<f64> {
    assert!(!p.is_zero(), "roots_in on the zero polynomial");
    assert!(tol > 0.0);
    match p.degree() {
        None | Some(0) => Vec::new(),
        Some(1) => {
            let c = p.coeffs();
            let r = -c[0] / c[1];
            if r >= i.lo - tol && r <= i.hi + tol {
                vec![r.clamp(i.lo, i.hi)]
            } else {
                Vec::new()
            }
        }
        Some(_) => roots_by_recursion(p, i, tol),
    }
}

fn roots_by_recursion(p: &Poly, i: Interval, tol: f64) -> Vec<f64> {
    // Roots live inside the Cauchy bound; clip to keep bisection spans sane.
    let bound = p.cauchy_bound().unwrap_or(1.0) + 1.0;
    let lo = i.lo.max(-bound);
    let hi = i.hi.min(bound);
    if lo > hi {
        return Vec::new();
    }
    let work = Interval::new(lo, hi);

    let crit = roots_in(&p.derivative(), work, tol);
    let mut pts = Vec::with_capacity(crit.len() + 2);
    pts.push(work.lo);
    for &c in &crit {
        if c > *pts.last().unwrap() + tol {
            pts.push(c);
        }
    }
    if work.hi > *pts.last().unwrap() + tol {
        pts.push(work.hi);
    } else if pts.len() == 1 {
        pts.push(work.hi.max(work.lo));
    }

    let vals: Vec<f64> = pts.iter().map(|&x| p.eval_acc(x)).collect();

    // A breakpoint counts as a root when |p| there is below a threshold set
    // by the x-accuracy and the local size of p (neighboring breakpoint
    // values), plus the evaluation noise floor.
    let mut is_root = vec![false; pts.len()];
    for k in 0..pts.len() {
        let mut local = 0.0_f64;
        if k > 0 {
            local = local.max(vals[k - 1].abs());
        }
        if k + 1 < pts.len() {
            local = local.max(vals[k + 1].abs());
        }
        let (_, noise) = p.eval_with_bound(pts[k]);
        let thresh = (tol * (1.0 + local.min(1e12))).max(2.0 * noise);
        is_root[k] = vals[k].abs() <= thresh;
    }

    let mut roots = Vec::new();
    for k in 0..pts.len() {
        if is_root[k] {
            roots.push(pts[k]);
        }
        if k + 1 < pts.len() && !is_root[k] && !is_root[k + 1] {
            let (a, b) = (vals[k], vals[k + 1]);
            if a.signum() != b.signum() {
                roots.push(bisect(p, pts[k], pts[k + 1], a, tol));
            }
        }
    }

    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut out: Vec<f64> = Vec::with_capacity(roots.len());
    for r in roots {
        if r < i.lo - tol || r > i.hi + tol {
            continue;
        }
        let r = r.clamp(i.lo, i.hi);
        match out.last() {
            Some(&last) if r - last <= 2.0 * tol => {}
            _ => out.push(r),
        }
    }
    out
}

/// Bisect a monotone piece with a strict sign change; `fa = p(a)`.
fn bisect(p: &Poly, mut a: f64, mut b: f64, fa: f64, tol: f64) -> f64 {
    let mut sa = fa.signum();
    for _ in 0..200 {
        if b - a <= tol {
            break;
        }
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let fm = p.eval_acc(m);
        if fm == 0.0 {
            return m;
        }
        if fm.signum() == sa {
            a = m;
            sa = fm.signum();
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

/// Decide the sign pattern of `p` on `i`.
///
/// With `strict_interior` set, zeros at the interval endpoints do not
/// disqualify a strict verdict; interior zeros always do.
pub fn sign_on(p: &Poly, i: Interval, strict_interior: bool, tol: f64) -> SignVerdict {
    assert!(tol > 0.0);
    if p.is_zero() {
        return SignVerdict {
            kind: SignKind::NonNegative,
            witness: None,
            margin: 0.0,
        };
    }
    let roots = roots_in(p, i, tol);
    let edge = (10.0 * tol).max(1e-12 * (1.0 + i.len()));
    let interior_roots: Vec<f64> = roots
        .iter()
        .copied()
        .filter(|&r| r - i.lo > edge && i.hi - r > edge)
        .collect();

    // Sample between consecutive roots and at the endpoints.
    let mut cuts = vec![i.lo];
    cuts.extend(roots.iter().copied());
    cuts.push(i.hi);
    cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut samples = Vec::new();
    for w in cuts.windows(2) {
        if w[1] - w[0] > edge {
            samples.push(0.5 * (w[0] + w[1]));
        }
    }
    if roots.iter().all(|&r| (r - i.lo).abs() > edge) {
        samples.push(i.lo);
    }
    if roots.iter().all(|&r| (i.hi - r).abs() > edge) {
        samples.push(i.hi);
    }
    if samples.is_empty() {
        samples.push(0.5 * (i.lo + i.hi));
    }

    // Samples below the evaluation noise bound carry no sign information;
    // they count as (unresolvable) zeros, never as evidence of mixing.
    let vals: Vec<(f64, f64, f64)> = samples
        .iter()
        .map(|&x| {
            let (v, nb) = p.eval_with_bound(x);
            (x, v, nb)
        })
        .collect();
    let margin = vals.iter().fold(f64::INFINITY, |m, &(_, v, _)| m.min(v.abs()));
    let has_pos = vals.iter().any(|&(_, v, nb)| v > nb);
    let has_neg = vals.iter().any(|&(_, v, nb)| v < -nb);
    let has_zeroish = vals.iter().any(|&(_, v, nb)| v.abs() <= nb);

    if has_pos && has_neg {
        // Witness the minority side: the violation of whichever sign
        // dominates in magnitude.
        let (max_at, max_v) = vals
            .iter()
            .fold((i.lo, f64::NEG_INFINITY), |acc, &(x, v, _)| {
                if v > acc.1 {
                    (x, v)
                } else {
                    acc
                }
            });
        let (min_at, min_v) = vals.iter().fold((i.lo, f64::INFINITY), |acc, &(x, v, _)| {
            if v < acc.1 {
                (x, v)
            } else {
                acc
            }
        });
        let witness = if max_v.abs() >= min_v.abs() { min_at } else { max_at };
        return SignVerdict {
            kind: SignKind::Mixed,
            witness: Some(witness),
            margin,
        };
    }

    let positive = has_pos;
    let strict_ok =
        interior_roots.is_empty() && !has_zeroish && (strict_interior || roots.is_empty());
    let kind = match (positive, strict_ok) {
        (true, true) => SignKind::StrictlyPositive,
        (true, false) => SignKind::NonNegative,
        (false, true) => SignKind::StrictlyNegative,
        (false, false) => SignKind::NonPositive,
    };
    let margin = if roots.is_empty() { margin } else { 0.0 };
    SignVerdict {
        kind,
        witness: None,
        margin,
    }
}
