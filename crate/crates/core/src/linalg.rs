//! Small dense linear algebra: LU with partial pivoting, Householder QR,
//! least squares and least-norm solves.
//!
//! Everything here operates on row-major `Mat` at desk scale (systems of a
//! few dozen unknowns), which is all the solvers in this crate need.

/// Row-major dense matrix.
#[derive(Debug, Clone)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<f64>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut data = Vec::with_capacity(r * c);
        for row in &rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend_from_slice(row);
        }
        Mat { rows: r, cols: c, data }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut f64 {
        &mut self.data[i * self.cols + j]
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.at_mut(j, i) = self.at(i, j);
            }
        }
        t
    }

    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.cols);
        let mut y = vec![0.0; self.rows];
        for i in 0..self.rows {
            let mut s = 0.0;
            for j in 0..self.cols {
                s += self.at(i, j) * x[j];
            }
            y[i] = s;
        }
        y
    }

    /// Infinity norm (max absolute row sum).
    pub fn norm_inf(&self) -> f64 {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j).abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }
}

/// LU factorization with partial pivoting of a square matrix.
pub struct Lu {
    lu: Mat,
    piv: Vec<usize>,
    pub singular: bool,
}

/// Factor `a` (square) with partial pivoting.
pub fn lu_factor(a: &Mat) -> Lu {
    assert_eq!(a.rows, a.cols);
    let n = a.rows;
    let mut lu = a.clone();
    let mut piv: Vec<usize> = (0..n).collect();
    let mut singular = false;
    for k in 0..n {
        let mut p = k;
        let mut pmax = lu.at(k, k).abs();
        for i in k + 1..n {
            let v = lu.at(i, k).abs();
            if v > pmax {
                pmax = v;
                p = i;
            }
        }
        if pmax == 0.0 {
            singular = true;
            continue;
        }
        if p != k {
            for j in 0..n {
                let tmp = lu.at(k, j);
                *lu.at_mut(k, j) = lu.at(p, j);
                *lu.at_mut(p, j) = tmp;
            }
            piv.swap(k, p);
        }
        let pivot = lu.at(k, k);
        for i in k + 1..n {
            let m = lu.at(i, k) / pivot;
            *lu.at_mut(i, k) = m;
            for j in k + 1..n {
                *lu.at_mut(i, j) -= m * lu.at(k, j);
            }
        }
    }
    Lu { lu, piv, singular }
}

impl Lu {
    pub fn solve(&self, b: &[f64]) -> Vec<f64> {
        let n = self.lu.rows;
        assert_eq!(b.len(), n);
        let mut x: Vec<f64> = self.piv.iter().map(|&p| b[p]).collect();
        for i in 1..n {
            let mut s = x[i];
            for j in 0..i {
                s -= self.lu.at(i, j) * x[j];
            }
            x[i] = s;
        }
        for i in (0..n).rev() {
            let mut s = x[i];
            for j in i + 1..n {
                s -= self.lu.at(i, j) * x[j];
            }
            x[i] = s / self.lu.at(i, i);
        }
        x
    }
}

/// Solve `a x = b` with one step of iterative refinement and return
/// `(x, cond_estimate)`.
///
/// The condition estimate is the norm-based heuristic
/// `‖A‖_inf · ‖A⁻¹ e‖_inf / ‖e‖`-style: a few solves against unit and
/// random-ish right-hand sides to estimate `‖A⁻¹‖_inf` from below.
pub fn solve_with_cond(a: &Mat, b: &[f64]) -> Option<(Vec<f64>, f64)> {
    let n = a.rows;
    let lu = lu_factor(a);
    if lu.singular {
        return None;
    }
    let mut x = lu.solve(b);
    // One refinement step.
    let r: Vec<f64> = a
        .matvec(&x)
        .iter()
        .zip(b)
        .map(|(ax, bi)| bi - ax)
        .collect();
    let dx = lu.solve(&r);
    for i in 0..n {
        x[i] += dx[i];
    }
    // Lower bound ‖A⁻¹‖_inf by probing with a few sign vectors.
    let mut inv_norm = 0.0_f64;
    let probes = [1.0_f64, -1.0];
    for (pi, &s0) in probes.iter().enumerate() {
        let e: Vec<f64> = (0..n)
            .map(|i| if (i + pi) % 2 == 0 { s0 } else { -s0 })
            .collect();
        let y = lu.solve(&e);
        let ynorm = y.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        inv_norm = inv_norm.max(ynorm);
    }
    let ones = vec![1.0; n];
    let y = lu.solve(&ones);
    inv_norm = inv_norm.max(y.iter().fold(0.0_f64, |m, v| m.max(v.abs())));
    let cond = a.norm_inf() * inv_norm;
    Some((x, cond))
}

/// Economy Householder QR of an m×n matrix (m ≥ n not required).
///
/// Stores the factor in packed form; exposes the operations the solvers
/// need rather than explicit Q.
pub struct Qr {
    qr: Mat,
    v0s: Vec<f64>,
    beta: Vec<f64>,
    pub rank_tol: f64,
}

pub fn qr_factor(a: &Mat) -> Qr {
    let m = a.rows;
    let n = a.cols;
    let mut qr = a.clone();
    let k = m.min(n);
    let mut beta = vec![0.0; k];
    let mut v0s = vec![0.0; k];
    for j in 0..k {
        // Householder vector for column j, rows j..m.
        let mut norm = 0.0_f64;
        for i in j..m {
            norm = norm.hypot(qr.at(i, j));
        }
        if norm == 0.0 {
            continue;
        }
        let alpha = if qr.at(j, j) >= 0.0 { -norm } else { norm };
        let v0 = qr.at(j, j) - alpha;
        *qr.at_mut(j, j) = alpha;
        v0s[j] = v0;
        // v = [v0, qr[j+1..m, j]]; apply H = I - 2vv'/v'v to trailing columns.
        let mut vtv = v0 * v0;
        for i in j + 1..m {
            vtv += qr.at(i, j) * qr.at(i, j);
        }
        beta[j] = if vtv == 0.0 { 0.0 } else { 2.0 / vtv };
        for c in j + 1..n {
            let mut dot = v0 * qr.at(j, c);
            for i in j + 1..m {
                dot += qr.at(i, j) * qr.at(i, c);
            }
            let t = beta[j] * dot;
            *qr.at_mut(j, c) -= t * v0;
            for i in j + 1..m {
                *qr.at_mut(i, c) -= t * qr.at(i, j);
            }
        }
    }
    let rank_tol = 1e-13 * a.norm_inf().max(1.0);
    Qr { qr, v0s, beta, rank_tol }
}

impl Qr {
    fn v0(&self, j: usize) -> f64 {
        self.v0s[j]
    }

    fn k(&self) -> usize {
        self.beta.len()
    }

    /// Apply Qᵀ to a vector of length m.
    pub fn qt_mul(&self, b: &[f64]) -> Vec<f64> {
        let m = self.qr.rows;
        assert_eq!(b.len(), m);
        let mut y = b.to_vec();
        for j in 0..self.k() {
            if self.beta[j] == 0.0 {
                continue;
            }
            let v0 = self.v0(j);
            let mut dot = v0 * y[j];
            for i in j + 1..m {
                dot += self.qr.at(i, j) * y[i];
            }
            let t = self.beta[j] * dot;
            y[j] -= t * v0;
            for i in j + 1..m {
                y[i] -= t * self.qr.at(i, j);
            }
        }
        y
    }

    /// Apply Q to a vector of length m.
    pub fn q_mul(&self, b: &[f64]) -> Vec<f64> {
        let m = self.qr.rows;
        assert_eq!(b.len(), m);
        let mut y = b.to_vec();
        for j in (0..self.k()).rev() {
            if self.beta[j] == 0.0 {
                continue;
            }
            let v0 = self.v0(j);
            let mut dot = v0 * y[j];
            for i in j + 1..m {
                dot += self.qr.at(i, j) * y[i];
            }
            let t = self.beta[j] * dot;
            y[j] -= t * v0;
            for i in j + 1..m {
                y[i] -= t * self.qr.at(i, j);
            }
        }
        y
    }

    /// Back-substitute R x = y for the leading n×n triangle; returns None if
    /// R has a negligible pivot (rank deficiency).
    pub fn r_solve(&self, y: &[f64]) -> Option<Vec<f64>> {
        let n = self.qr.cols;
        let mut x = vec![0.0; n];
        for i in (0..n).rev() {
            let mut s = y[i];
            for j in i + 1..n {
                s -= self.qr.at(i, j) * x[j];
            }
            let d = self.qr.at(i, i);
            if d.abs() <= self.rank_tol {
                return None;
            }
            x[i] = s / d;
        }
        Some(x)
    }

    /// Solve Rᵀ z = y (forward substitution on the triangle's transpose).
    pub fn rt_solve(&self, y: &[f64]) -> Option<Vec<f64>> {
        let n = self.qr.cols;
        let mut z = vec![0.0; n];
        for i in 0..n {
            let mut s = y[i];
            for j in 0..i {
                s -= self.qr.at(j, i) * z[j];
            }
            let d = self.qr.at(i, i);
            if d.abs() <= self.rank_tol {
                return None;
            }
            z[i] = s / d;
        }
        Some(z)
    }

    /// Diagonal of R (for rank inspection).
    pub fn r_diag(&self) -> Vec<f64> {
        (0..self.qr.cols.min(self.qr.rows))
            .map(|i| self.qr.at(i, i))
            .collect()
    }
}

/// Least-squares solve of an overdetermined system `a x ≈ b` (m ≥ n).
pub fn lstsq(a: &Mat, b: &[f64]) -> Option<Vec<f64>> {
    assert!(a.rows >= a.cols);
    let qr = qr_factor(a);
    let y = qr.qt_mul(b);
    qr.r_solve(&y[..a.cols])
}

/// Minimum-norm solution of an underdetermined consistent system
/// `a x = b` (m ≤ n), via QR of aᵀ: x = Qᵀ' (R⁻ᵀ b).
pub fn least_norm(a: &Mat, b: &[f64]) -> Option<Vec<f64>> {
    assert!(a.rows <= a.cols);
    let at = a.transpose();
    let qr = qr_factor(&at);
    let z = qr.rt_solve(b)?;
    let mut w = vec![0.0; at.rows];
    w[..z.len()].copy_from_slice(&z);
    Some(qr.q_mul(&w))
}

/// Orthonormal basis for the null space of `a` (m ≤ n, full row rank):
/// columns m..n of Q from the QR of aᵀ. Returned as an n×(n−m) matrix.
pub fn null_space(a: &Mat) -> Mat {
    assert!(a.rows <= a.cols);
    let at = a.transpose();
    let qr = qr_factor(&at);
    let n = at.rows;
    let m = a.rows;
    let mut z = Mat::zeros(n, n - m);
    for c in 0..n - m {
        let mut e = vec![0.0; n];
        e[m + c] = 1.0;
        let q = qr.q_mul(&e);
        for i in 0..n {
            *z.at_mut(i, c) = q[i];
        }
    }
    z
}

/// Gauss–Legendre nodes and weights on [−1, 1], by Newton iteration on the
/// Legendre recurrence.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut xs = vec![0.0; n];
    let mut ws = vec![0.0; n];
    for i in 0..(n + 1) / 2 {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        xs[i] = -x;
        ws[i] = w;
        xs[n - 1 - i] = x;
        ws[n - 1 - i] = w;
    }
    (xs, ws)
}

fn legendre(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Non-negative least squares min ‖a·b − r‖₂ s.t. b ≥ 0 (Lawson–Hanson
/// active-set). Returns the solution vector.
pub fn nnls(a: &Mat, r: &[f64]) -> Vec<f64> {
    let m = a.rows;
    let n = a.cols;
    assert_eq!(r.len(), m);
    let mut passive: Vec<bool> = vec![false; n];
    let mut b = vec![0.0; n];

    let residual = |b: &[f64]| -> Vec<f64> {
        let ab = a.matvec(b);
        r.iter().zip(ab).map(|(ri, abi)| ri - abi).collect()
    };
    let grad = |res: &[f64]| -> Vec<f64> {
        let mut w = vec![0.0; n];
        for j in 0..n {
            let mut s = 0.0;
            for i in 0..m {
                s += a.at(i, j) * res[i];
            }
            w[j] = s;
        }
        w
    };
    let scale = a.norm_inf().max(1.0) * r.iter().fold(1.0_f64, |s, v| s.max(v.abs()));
    let tol_w = 1e-12 * scale;

    // Least squares restricted to the passive columns.
    let solve_passive = |passive: &[bool]| -> Option<Vec<f64>> {
        let cols: Vec<usize> = (0..n).filter(|&j| passive[j]).collect();
        if cols.is_empty() {
            return Some(Vec::new());
        }
        let mut sub = Mat::zeros(m, cols.len());
        for i in 0..m {
            for (cj, &j) in cols.iter().enumerate() {
                *sub.at_mut(i, cj) = a.at(i, j);
            }
        }
        let qr = qr_factor(&sub);
        let y = qr.qt_mul(r);
        qr.r_solve(&y[..cols.len()])
    };

    for _ in 0..(3 * n + 20) {
        let res = residual(&b);
        let w = grad(&res);
        let mut best: Option<(usize, f64)> = None;
        for j in 0..n {
            if !passive[j] && w[j] > tol_w {
                if best.map_or(true, |(_, bw)| w[j] > bw) {
                    best = Some((j, w[j]));
                }
            }
        }
        let Some((j_add, _)) = best else { break };
        passive[j_add] = true;

        // Inner loop: keep the passive solution strictly feasible.
        for _ in 0..(3 * n + 20) {
            let Some(z) = solve_passive(&passive) else {
                // Rank-deficient passive set: drop the newest column.
                passive[j_add] = false;
                break;
            };
            let cols: Vec<usize> = (0..n).filter(|&j| passive[j]).collect();
            if z.iter().all(|&v| v > 0.0) {
                for (cj, &j) in cols.iter().enumerate() {
                    b[j] = z[cj];
                }
                break;
            }
            let mut alpha = f64::INFINITY;
            for (cj, &j) in cols.iter().enumerate() {
                if z[cj] <= 0.0 {
                    let d = b[j] - z[cj];
                    if d > 0.0 {
                        alpha = alpha.min(b[j] / d);
                    }
                }
            }
            if !alpha.is_finite() {
                alpha = 0.0;
            }
            for (cj, &j) in cols.iter().enumerate() {
                b[j] += alpha * (z[cj] - b[j]);
                if b[j] <= 1e-14 * scale.max(1.0) {
                    b[j] = 0.0;
                    passive[j] = false;
                }
            }
        }
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_legendre_integrates_polynomials() {
        // Order n integrates degree 2n−1 exactly: ∫_{-1}^{1} x^4 = 2/5.
        let (xs, ws) = gauss_legendre(3);
        let s: f64 = xs.iter().zip(&ws).map(|(&x, &w)| w * x.powi(4)).sum();
        assert!((s - 0.4).abs() < 1e-14);
        let (xs, ws) = gauss_legendre(20);
        let s: f64 = xs
            .iter()
            .zip(&ws)
            .map(|(&x, &w)| w * x.powi(38))
            .sum();
        assert!((s - 2.0 / 39.0).abs() < 1e-13);
    }

    #[test]
    fn nnls_matches_known_solution() {
        // min ‖Ab − r‖ with the unconstrained optimum already nonnegative.
        let a = Mat::from_rows(vec![vec![1.0, 0.0], vec![0.0, 1.0], vec![1.0, 1.0]]);
        let r = vec![1.0, 2.0, 3.0];
        let b = nnls(&a, &r);
        assert!((b[0] - 1.0).abs() < 1e-10 && (b[1] - 2.0).abs() < 1e-10);

        // Unconstrained optimum has a negative coordinate; NNLS clamps it.
        let a = Mat::from_rows(vec![vec![1.0, 1.0], vec![1.0, 1.2]]);
        let r = vec![1.0, 0.0];
        let b = nnls(&a, &r);
        assert!(b.iter().all(|&v| v >= 0.0));
    }

    #[test]
    fn lu_solves_small_system() {
        let a = Mat::from_rows(vec![
            vec![4.0, 2.0, 1.0],
            vec![2.0, 5.0, 3.0],
            vec![1.0, 3.0, 6.0],
        ]);
        let b = vec![7.0, 10.0, 10.0];
        let (x, cond) = solve_with_cond(&a, &b).unwrap();
        let ax = a.matvec(&x);
        for i in 0..3 {
            assert!((ax[i] - b[i]).abs() < 1e-12);
        }
        assert!(cond > 1.0 && cond < 1e3);
    }

    #[test]
    fn lu_reports_singular() {
        let a = Mat::from_rows(vec![vec![1.0, 2.0], vec![2.0, 4.0]]);
        assert!(lu_factor(&a).singular);
    }

    #[test]
    fn qr_least_squares_matches_normal_equations() {
        // Fit y = 1 + 2 t at 4 points.
        let a = Mat::from_rows(vec![
            vec![1.0, 0.0],
            vec![1.0, 1.0],
            vec![1.0, 2.0],
            vec![1.0, 3.0],
        ]);
        let b = vec![1.0, 3.0, 5.0, 7.0];
        let x = lstsq(&a, &b).unwrap();
        assert!((x[0] - 1.0).abs() < 1e-12);
        assert!((x[1] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn least_norm_is_consistent_and_minimal() {
        // x + y = 2 has least-norm solution (1, 1).
        let a = Mat::from_rows(vec![vec![1.0, 1.0]]);
        let x = least_norm(&a, &[2.0]).unwrap();
        assert!((x[0] - 1.0).abs() < 1e-12);
        assert!((x[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn null_space_is_orthogonal_to_rows() {
        let a = Mat::from_rows(vec![vec![1.0, 2.0, 3.0], vec![0.0, 1.0, -1.0]]);
        let z = null_space(&a);
        assert_eq!(z.rows, 3);
        assert_eq!(z.cols, 1);
        let v: Vec<f64> = (0..3).map(|i| z.at(i, 0)).collect();
        let av = a.matvec(&v);
        assert!(av[0].abs() < 1e-12 && av[1].abs() < 1e-12);
        let n: f64 = v.iter().map(|x| x * x).sum();
        assert!((n - 1.0).abs() < 1e-12);
    }
}
