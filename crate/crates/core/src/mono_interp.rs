//! Piecewise-monotone polynomial interpolation and the node-building
//! procedures that feed it.
//!
//! The classical existence results are non-constructive; here the
//! interpolant's derivative is written as q′ = σ·Π(x − x_flip)·h(x)², the
//! product running over the nodes where the data direction flips. The
//! square makes every per-interval sign structural for any h, so the node
//! equations q(x_i) − q(x_{i−1}) = Δy_i become a small quadratic
//! least-squares system in h's Chebyshev coefficients, solved by damped
//! Gauss–Newton with minimum-norm steps from a profile-matched start.
//! True strict monotonicity is then verified by root isolation; on failure
//! the degree escalates up to 4·|S| + 20.

use thiserror::Error;

use crate::linalg::{gauss_legendre, lstsq, Mat};
use crate::membership::Family;
use crate::poly::{Interval, Poly};
use crate::util::Dd;
use crate::roots::{sign_on, SignKind};

#[derive(Debug, Error)]
pub enum InterpError {
    #[error("polynomial is constant on [0,1]; no node set exists")]
    ConstantPolynomial,
    #[error("invalid node set: {0}")]
    InvalidNodes(String),
    #[error("no monotone interpolant found up to the degree cap {cap}")]
    InfeasibleAtMaxDegree { cap: usize },
}

/// Interpolation nodes: strictly increasing in x, consecutive values
/// distinct (gaps below 1e−12 are rejected rather than special-cased).
#[derive(Debug, Clone, PartialEq)]
pub struct NodeSet {
    nodes: Vec<(f64, f64)>,
}

impl NodeSet {
    pub fn new(nodes: Vec<(f64, f64)>) -> Result<Self, InterpError> {
        if nodes.len() < 2 {
            return Err(InterpError::InvalidNodes("need at least 2 nodes".into()));
        }
        for w in nodes.windows(2) {
            if w[1].0 <= w[0].0 {
                return Err(InterpError::InvalidNodes(format!(
                    "x not strictly increasing at {}",
                    w[1].0
                )));
            }
            if (w[1].1 - w[0].1).abs() < 1e-12 {
                return Err(InterpError::InvalidNodes(format!(
                    "consecutive values indistinct near x = {}",
                    w[1].0
                )));
            }
        }
        Ok(NodeSet { nodes })
    }

    pub fn nodes(&self) -> &[(f64, f64)] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// Node set on [0,1] for `p` with spacing below the modulus-of-continuity
/// step δ = (eps/2)/max|p′| (capped at 1/2), values pairwise distinct
/// between neighbors. New points are scanned in [x + δ/2, x + δ), taking
/// the sample with the largest value change.
pub fn build_nodes(p: &Poly, eps: f64) -> Result<NodeSet, InterpError> {
    assert!(eps > 0.0);
    let d = p.derivative();
    if d.is_zero() {
        return Err(InterpError::ConstantPolynomial);
    }
    let (dmax, _) = d.sup_abs_on(Interval::new(0.0, 1.0));
    if dmax < 1e-14 {
        return Err(InterpError::ConstantPolynomial);
    }
    let delta = (eps / 2.0 / dmax).min(0.5);

    let mut nodes: Vec<(f64, f64)> = vec![(0.0, p.eval_acc(0.0))];
    loop {
        let (x_last, y_last) = *nodes.last().unwrap();
        if 1.0 - x_last < delta {
            break;
        }
        let mut best: Option<(f64, f64)> = None;
        for n_scan in [64_usize, 512] {
            for j in 0..n_scan {
                let t = x_last + delta / 2.0 + (j as f64 / n_scan as f64) * (delta / 2.0);
                if t >= 1.0 {
                    break;
                }
                let v = p.eval_acc(t);
                if best.map_or(true, |(_, bv)| (v - y_last).abs() > (bv - y_last).abs()) {
                    best = Some((t, v));
                }
            }
            if best.map_or(false, |(_, v)| (v - y_last).abs() >= 1e-12) {
                break;
            }
        }
        match best {
            Some((t, v)) if (v - y_last).abs() >= 1e-12 => nodes.push((t, v)),
            _ => return Err(InterpError::ConstantPolynomial),
        }
    }
    let y_end = p.eval_acc(1.0);
    while nodes.len() > 1 && (nodes.last().unwrap().1 - y_end).abs() < 1e-12 {
        nodes.pop();
    }
    if nodes.is_empty() || (nodes.len() == 1 && (nodes[0].1 - y_end).abs() < 1e-12) {
        return Err(InterpError::ConstantPolynomial);
    }
    nodes.push((1.0, y_end));
    NodeSet::new(nodes)
}

/// Variation-equalized nodes for an arbitrary evaluator: breakpoints at 0,
/// 1, and the supplied interior critical points make every piece monotone;
/// each piece is then split so that no interval's value variation exceeds
/// `var_target`.
///
/// Any monotone interpolant through these nodes stays inside each
/// interval's value box, so its uniform distance to `f` is at most
/// `var_target` — the modulus argument with far fewer nodes than a
/// worst-case uniform step.
pub fn variation_nodes<F: Fn(f64) -> f64>(
    f: F,
    interior_crit: &[f64],
    var_target: f64,
) -> Result<NodeSet, InterpError> {
    assert!(var_target > 0.0);
    let mut breaks = vec![0.0];
    for &c in interior_crit {
        if c > 1e-9 && c < 1.0 - 1e-9 {
            breaks.push(c);
        }
    }
    breaks.push(1.0);
    breaks.sort_by(|a, b| a.partial_cmp(b).unwrap());
    breaks.dedup_by(|a, b| (*a - *b).abs() < 1e-9);

    // Merge away breakpoints whose value barely moves; the hump they would
    // have separated is below resolution anyway.
    let merge_tol = (1e-3 * var_target).max(1e-10);
    let mut nodes: Vec<(f64, f64)> = vec![(0.0, f(0.0))];
    for (bi, &b) in breaks.iter().enumerate().skip(1) {
        let (a, ya) = *nodes.last().unwrap();
        let yb = f(b);
        if (yb - ya).abs() < merge_tol && bi != breaks.len() - 1 {
            continue;
        }
        if (yb - ya).abs() < 1e-12 {
            // Terminal piece with no variation; drop the previous node
            // instead (it duplicates the endpoint value).
            if nodes.len() > 1 {
                nodes.pop();
            } else {
                return Err(InterpError::ConstantPolynomial);
            }
        }
        let (a, ya) = *nodes.last().unwrap();
        let dy = yb - ya;
        let k = ((dy.abs() / var_target).ceil() as usize).max(1);
        for j in 1..k {
            let level = ya + dy * j as f64 / k as f64;
            let x = invert_monotone(&f, a, b, level);
            nodes.push((x, level));
        }
        nodes.push((b, yb));
    }
    NodeSet::new(nodes)
}

/// Bisection for f(x) = level on [a,b] where f is monotone.
fn invert_monotone<F: Fn(f64) -> f64>(f: &F, mut a: f64, mut b: f64, level: f64) -> f64 {
    let rising = f(b) > f(a);
    for _ in 0..80 {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let v = f(m);
        if (v > level) == rising {
            b = m;
        } else {
            a = m;
        }
    }
    0.5 * (a + b)
}

/// Prepend (−1, −1) and append the family's right guard: (2, 2) for P-like
/// (force q > 1 past 1), (2, −1) for Q-like (force q < 0 past 1).
pub fn guard_extend(s: &NodeSet, fam: Family) -> NodeSet {
    let mut nodes = Vec::with_capacity(s.len() + 2);
    nodes.push((-1.0, -1.0));
    nodes.extend_from_slice(s.nodes());
    nodes.push((2.0, if fam.is_p_like() { 2.0 } else { -1.0 }));
    NodeSet { nodes }
}

/// Verify that `q` interpolates the nodes within `tol` and is strictly
/// monotone in the data's direction on each interval: q′ has the matching
/// sign with no sign change inside (root isolation). Isolated interior
/// zeros of q′ are fine — a polynomial with one-signed derivative and
/// isolated critical points is still a strictly monotone function.
pub fn verify_monotone_interpolant(q: &Poly, s: &NodeSet, tol: f64) -> Result<(), String> {
    let nodes = s.nodes();
    for &(x, y) in nodes {
        let v = q.eval_acc(x);
        if (v - y).abs() > tol {
            return Err(format!("residual {:.3e} at x = {x}", (v - y).abs()));
        }
    }
    let dq = q.derivative();
    for w in nodes.windows(2) {
        let dir = (w[1].1 - w[0].1).signum();
        let verdict = sign_on(&dq, Interval::new(w[0].0, w[1].0), true, 1e-10);
        let ok = match verdict.kind {
            SignKind::StrictlyPositive | SignKind::NonNegative => dir > 0.0,
            SignKind::StrictlyNegative | SignKind::NonPositive => dir < 0.0,
            SignKind::Mixed => false,
        };
        if !ok {
            return Err(format!(
                "derivative changes sign or mismatches direction ({}) on [{}, {}]: {:?}",
                if dir > 0.0 { "rising" } else { "falling" },
                w[0].0,
                w[1].0,
                verdict.kind
            ));
        }
    }
    Ok(())
}

/// Find a polynomial through the nodes, monotone on each interval in the
/// direction of the data, interpolating within `tol` at every node.
pub fn monotone_interpolate(s: &NodeSet, tol: f64) -> Result<Poly, InterpError> {
    let nodes = s.nodes();
    let n_nodes = nodes.len();
    let cap = 4 * n_nodes + 20;

    // Nodes where the data direction flips; q′ must vanish there.
    let dirs: Vec<f64> = nodes.windows(2).map(|w| (w[1].1 - w[0].1).signum()).collect();
    let flips: Vec<f64> = (1..dirs.len())
        .filter(|&i| dirs[i] != dirs[i - 1])
        .map(|i| nodes[i].0)
        .collect();
    // Sign of Π(x − x_flip) left of every flip is (−1)^|flips|.
    let sigma = dirs[0] * if flips.len() % 2 == 0 { 1.0 } else { -1.0 };

    let mut mh = (n_nodes - 2).max(2);
    loop {
        let q_degree = 2 * mh + flips.len() + 1;
        if q_degree > cap {
            return Err(InterpError::InfeasibleAtMaxDegree { cap });
        }
        if let Some(q) = try_width(s, &flips, sigma, mh, tol) {
            return Ok(q);
        }
        mh += (mh / 4).max(1);
    }
}

/// Chebyshev values T_0..T_d at t.
fn cheb_row(t: f64, d: usize) -> Vec<f64> {
    let mut row = Vec::with_capacity(d + 1);
    let (mut t0, mut t1) = (1.0, t);
    row.push(t0);
    if d >= 1 {
        row.push(t1);
    }
    for _ in 2..=d {
        let t2 = 2.0 * t * t1 - t0;
        row.push(t2);
        t0 = t1;
        t1 = t2;
    }
    row
}

/// Σ c_k T_k(a·x + b) expanded to monomial coefficients in x, with the
/// recurrence run in double-double arithmetic (the intermediate 2^k-sized
/// coefficients would otherwise pollute the result).
fn cheb_combo_to_x_poly(c: &[f64], lo: f64, hi: f64) -> Poly {
    let a = 2.0 / (hi - lo);
    let b = -(lo + hi) / (hi - lo);
    let n = c.len();
    let mut acc = vec![Dd::ZERO; n.max(1)];
    let mut prev = vec![Dd::from(1.0)]; // T_0(t(x))
    acc[0] = acc[0].add(prev[0].mul_f64(c[0]));
    if n == 1 {
        return Poly::new(vec![acc[0].value()]);
    }
    let mut cur = vec![Dd::from(b), Dd::from(a)]; // T_1(t(x))
    for (j, &v) in cur.iter().enumerate() {
        acc[j] = acc[j].add(v.mul_f64(c[1]));
    }
    for ck in c.iter().skip(2) {
        // T_{k+1} = 2(ax+b)·T_k − T_{k−1}, coefficientwise.
        let mut next = vec![Dd::ZERO; cur.len() + 1];
        for (j, &v) in cur.iter().enumerate() {
            next[j] = next[j].add(v.mul_f64(2.0 * b));
            next[j + 1] = next[j + 1].add(v.mul_f64(2.0 * a));
        }
        for (j, &v) in prev.iter().enumerate() {
            next[j] = next[j].sub(v);
        }
        for (j, &v) in next.iter().enumerate() {
            acc[j] = acc[j].add(v.mul_f64(*ck));
        }
        prev = cur;
        cur = next;
    }
    Poly::new(acc.into_iter().map(|d| d.value()).collect())
}

/// Attempt with h of Chebyshev degree `mh`.
fn try_width(s: &NodeSet, flips: &[f64], sigma: f64, mh: usize, tol: f64) -> Option<Poly> {
    let nodes = s.nodes();
    let n_int = nodes.len() - 1;
    let lo = nodes[0].0;
    let hi = nodes[n_int].0;
    let to_t = |x: f64| (2.0 * x - lo - hi) / (hi - lo);
    let flip_prod = |x: f64| -> f64 { flips.iter().map(|&f| x - f).product::<f64>() };

    // Quadrature nodes per interval, fixed once: exact for σ·Π·h².
    let gl_order = mh + flips.len() / 2 + 2;
    let (gx, gw) = gauss_legendre(gl_order);
    struct QuadPt {
        interval: usize,
        weight_sig_prod: f64, // w · σ · Π(x)
        basis: Vec<f64>,      // T_k(t(x))
    }
    let mut pts: Vec<QuadPt> = Vec::with_capacity(n_int * gl_order);
    let mut dy = vec![0.0; n_int];
    for (i, w) in nodes.windows(2).enumerate() {
        let (xa, _) = w[0];
        let (xb, _) = w[1];
        dy[i] = w[1].1 - w[0].1;
        let mid = 0.5 * (xa + xb);
        let half = 0.5 * (xb - xa);
        for (&t, &wt) in gx.iter().zip(&gw) {
            let x = mid + half * t;
            pts.push(QuadPt {
                interval: i,
                weight_sig_prod: wt * half * sigma * flip_prod(x),
                basis: cheb_row(to_t(x), mh),
            });
        }
    }

    // Start from the square root of the piecewise target profile
    // g_i = Δy_i / ∫_i σΠ, fitted in the Chebyshev basis.
    let mut int_sig = vec![0.0; n_int];
    for p in &pts {
        int_sig[p.interval] += p.weight_sig_prod;
    }
    let h_target: Vec<f64> = (0..n_int)
        .map(|i| (dy[i] / int_sig[i]).max(1e-12).sqrt())
        .collect();
    let fit_rows: Vec<Vec<f64>> = pts.iter().map(|p| p.basis.clone()).collect();
    let fit_rhs: Vec<f64> = pts.iter().map(|p| h_target[p.interval]).collect();
    let mut eta = lstsq(&Mat::from_rows(fit_rows), &fit_rhs)?;

    // Levenberg–Marquardt on the row-scaled residuals
    // F_i(η) = (Σ_pts w σΠ h² − Δy_i) / s_i.
    let row_scale: Vec<f64> = dy.iter().map(|d| d.abs().max(1e-3)).collect();
    let h_at = |eta: &[f64], basis: &[f64]| -> f64 {
        basis.iter().zip(eta).map(|(&b, &e)| b * e).sum()
    };
    let f_of = |eta: &[f64]| -> Vec<f64> {
        let mut f = dy.iter().map(|&d| -d).collect::<Vec<f64>>();
        for p in &pts {
            let h = h_at(eta, &p.basis);
            f[p.interval] += p.weight_sig_prod * h * h;
        }
        for (i, v) in f.iter_mut().enumerate() {
            *v /= row_scale[i];
        }
        f
    };
    let norm_inf = |v: &[f64]| v.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
    let node_budget = tol / (2.0 * nodes.len() as f64);
    let unscaled_worst = |f: &[f64]| -> f64 {
        f.iter()
            .zip(&row_scale)
            .fold(0.0_f64, |m, (v, s)| m.max(v.abs() * s))
    };
    let target = 0.25 * node_budget / row_scale.iter().fold(0.0_f64, |m, &s| m.max(s));

    let mut f = f_of(&eta);
    let mut mu = 1e-8_f64;
    let dof = mh + 1;
    'outer: for _ in 0..80 {
        if norm_inf(&f) <= target {
            break;
        }
        // J[i][k] = Σ_pts 2 w σΠ h T_k / s_i.
        let mut jm = Mat::zeros(n_int + dof, dof);
        for p in &pts {
            let h = h_at(&eta, &p.basis);
            let c = 2.0 * p.weight_sig_prod * h / row_scale[p.interval];
            for (k, &b) in p.basis.iter().enumerate() {
                *jm.at_mut(p.interval, k) += c * b;
            }
        }
        let mut rhs = vec![0.0; n_int + dof];
        for i in 0..n_int {
            rhs[i] = -f[i];
        }
        // Damped step; raise μ until the step shrinks the residual.
        for _ in 0..12 {
            let sm = mu.sqrt();
            for k in 0..dof {
                *jm.at_mut(n_int + k, k) = sm;
            }
            let Some(delta) = lstsq(&jm, &rhs) else {
                mu *= 10.0;
                continue;
            };
            let trial: Vec<f64> = eta.iter().zip(&delta).map(|(&e, &d)| e + d).collect();
            let tf = f_of(&trial);
            if norm_inf(&tf) < norm_inf(&f) {
                eta = trial;
                f = tf;
                mu = (mu * 0.25).max(1e-14);
                continue 'outer;
            }
            mu *= 10.0;
        }
        break;
    }
    if unscaled_worst(&f) > node_budget {
        return None;
    }

    // Assemble q = y_0 + ∫ σ·Π·h². Multiplying the factors in coefficient
    // space loses the Π·h² cancellation (h is huge where Π is tiny), so q
    // is reconstructed from stable *values*: the integrand is evaluated
    // pointwise and q re-interpolated at Chebyshev points of its own
    // exact degree.
    let h_of = |x: f64| h_at(&eta, &cheb_row(to_t(x), mh));
    let integrand = |x: f64| {
        let h = h_of(x);
        sigma * flip_prod(x) * h * h
    };
    let q_value = |x: f64| -> f64 {
        // y at the last node left of x plus a partial-interval integral.
        let mut i = match nodes.binary_search_by(|&(nx, _)| nx.partial_cmp(&x).unwrap()) {
            Ok(k) => k,
            Err(k) => k.saturating_sub(1),
        };
        i = i.min(nodes.len() - 1);
        let (xa, ya) = nodes[i];
        let mid = 0.5 * (xa + x);
        let half = 0.5 * (x - xa);
        let mut acc = ya;
        for (&t, &wt) in gx.iter().zip(&gw) {
            acc += wt * half * integrand(mid + half * t);
        }
        acc
    };

    let q_degree = 2 * mh + flips.len() + 1;
    let mid = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let mut rows = Vec::with_capacity(q_degree + 1);
    let mut vals = Vec::with_capacity(q_degree + 1);
    for j in 0..=q_degree {
        let t = (j as f64 * std::f64::consts::PI / q_degree as f64).cos();
        rows.push(cheb_row(t, q_degree));
        vals.push(q_value(mid + half * t));
    }
    let mut c = lstsq(&Mat::from_rows(rows), &vals)?;
    // Drop the trailing Chebyshev coefficients that sit at the value-noise
    // level: they change q by less than the node tolerance but their
    // monomial images grow like 5.8^k on a unit span and would swamp the
    // conversion.
    let cmax = c.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    while let Some(&last) = c.last() {
        if c.len() > 1 && last.abs() <= 1e-11 * cmax {
            c.pop();
        } else {
            break;
        }
    }
    let q = cheb_combo_to_x_poly(&c, lo, hi);

    match verify_monotone_interpolant(&q, s, tol) {
        Ok(()) => Some(q),
        Err(e) => {
            if std::env::var_os("QSPPOLY_DEBUG_INTERP").is_some() {
                eprintln!("mh={mh}: verify rejected: {e}");
            }
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_nodes_spacing_and_values() {
        let p = Poly::identity();
        let s = build_nodes(&p, 0.5).unwrap();
        let nodes = s.nodes();
        assert_eq!(nodes[0].0, 0.0);
        assert_eq!(nodes.last().unwrap().0, 1.0);
        for w in nodes.windows(2) {
            let gap = w[1].0 - w[0].0;
            assert!(gap < 0.25 + 1e-12, "gap {gap}");
            assert!((w[1].1 - w[0].1).abs() >= 1e-12);
        }
        // Interior spacing of the scan-placed nodes is at least δ/2.
        for w in nodes[..nodes.len() - 1].windows(2) {
            assert!(w[1].0 - w[0].0 >= 0.125 - 1e-12);
        }
    }

    #[test]
    fn build_nodes_caps_delta() {
        let p = Poly::identity();
        let s = build_nodes(&p, 4.0).unwrap();
        for w in s.nodes().windows(2) {
            assert!(w[1].0 - w[0].0 <= 0.5 + 1e-12);
        }
    }

    #[test]
    fn build_nodes_rejects_constant() {
        let p = Poly::constant(0.3);
        assert!(matches!(
            build_nodes(&p, 0.1),
            Err(InterpError::ConstantPolynomial)
        ));
    }

    #[test]
    fn guard_values_per_family() {
        let s = NodeSet::new(vec![(0.0, 0.0), (1.0, 1.0)]).unwrap();
        let gp = guard_extend(&s, Family::P);
        assert_eq!(gp.nodes().first(), Some(&(-1.0, -1.0)));
        assert_eq!(gp.nodes().last(), Some(&(2.0, 2.0)));
        let s2 = NodeSet::new(vec![(0.0, 0.0), (0.5, 0.3), (1.0, 0.0)]).unwrap();
        let gq = guard_extend(&s2, Family::Q);
        assert_eq!(gq.nodes().first(), Some(&(-1.0, -1.0)));
        assert_eq!(gq.nodes().last(), Some(&(2.0, -1.0)));
    }

    #[test]
    fn interpolates_linear_data() {
        let s = NodeSet::new(vec![(-1.0, -1.0), (0.0, 0.0), (1.0, 1.0), (2.0, 2.0)]).unwrap();
        let q = monotone_interpolate(&s, 1e-8).unwrap();
        for &(x, y) in s.nodes() {
            assert!((q.eval(x) - y).abs() < 1e-8);
        }
        // The minimal-degree solve recovers the line.
        assert!((q.eval(0.5) - 0.5).abs() < 1e-8);

        let s = NodeSet::new(vec![(0.0, 0.0), (1.0, 1.0)]).unwrap();
        let q = monotone_interpolate(&s, 1e-8).unwrap();
        assert!((q.eval(0.3) - 0.3).abs() < 1e-8);
    }

    #[test]
    fn interpolates_with_interior_node() {
        let s = NodeSet::new(vec![
            (-1.0, -1.0),
            (0.0, 0.0),
            (0.5, 0.8),
            (1.0, 1.0),
            (2.0, 2.0),
        ])
        .unwrap();
        let q = monotone_interpolate(&s, 1e-8).unwrap();
        verify_monotone_interpolant(&q, &s, 1e-8).unwrap();
        assert!(q.degree().unwrap() >= 3);
    }

    #[test]
    fn interpolates_nonmonotone_data() {
        // Up-down-up with a Q-style guard.
        let s = NodeSet::new(vec![
            (-1.0, -1.0),
            (0.0, 0.0),
            (0.4, 0.6),
            (0.7, 0.2),
            (1.0, 0.0),
            (2.0, -1.0),
        ])
        .unwrap();
        let q = monotone_interpolate(&s, 1e-8).unwrap();
        verify_monotone_interpolant(&q, &s, 1e-8).unwrap();
    }

    #[test]
    fn variation_nodes_bound_variation() {
        let p = Poly::new(vec![0.0, 1.0, -1.0]).scale(3.6); // 3.6 x(1−x), peak 0.9
        let f = |x: f64| p.eval(x);
        let s = variation_nodes(f, &[0.5], 0.1).unwrap();
        for w in s.nodes().windows(2) {
            assert!((w[1].1 - w[0].1).abs() <= 0.1 + 1e-9);
        }
        assert_eq!(s.nodes()[0], (0.0, 0.0));
        assert_eq!(s.nodes().last().unwrap().0, 1.0);
    }

    #[test]
    fn rejects_indistinct_values() {
        assert!(NodeSet::new(vec![(0.0, 0.5), (1.0, 0.5 + 1e-13)]).is_err());
    }
}
