//! Exact Gaussian-moment oracle for polynomial x Gaussian integrands over
//! R^3, plus an independent Gauss-Hermite tensor quadrature that
//! cross-checks it.

use std::collections::BTreeMap;

use crate::geometry::AffineChange;
use crate::linalg::{solve_dense, SymMat3};
use crate::{Error, Result};

/// Exact 1-D moment: integral of x^k e^{-a x^2 / 2} over R.
pub fn gaussian_moment_1d(a: f64, k: u32) -> Result<f64> {
    if !(a > 0.0) {
        return Err(Error::NonPositiveMoment(a));
    }
    if k > 12 {
        return Err(Error::MomentOrderTooLarge(k as usize));
    }
    if k % 2 == 1 {
        return Ok(0.0);
    }
    // (k-1)!! a^{-k/2}, by the recurrence m_k = (k-1)/a * m_{k-2}
    let mut m = (2.0 * std::f64::consts::PI / a).sqrt();
    let mut j = 2;
    while j <= k {
        m *= (j - 1) as f64 / a;
        j += 2;
    }
    Ok(m)
}

/// Real polynomial in three variables, sparse monomial map
/// (i, j, k) -> coefficient of x1^i x2^j x3^k.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Poly3 {
    pub terms: BTreeMap<(u8, u8, u8), f64>,
}

impl Poly3 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: f64) -> Self {
        let mut p = Self::zero();
        p.add_term((0, 0, 0), c);
        p
    }

    /// x_axis as a polynomial (axis in 0..3).
    pub fn var(axis: usize) -> Self {
        let mut e = [0u8; 3];
        e[axis] = 1;
        let mut p = Self::zero();
        p.add_term((e[0], e[1], e[2]), 1.0);
        p
    }

    pub fn add_term(&mut self, key: (u8, u8, u8), c: f64) {
        if c == 0.0 {
            return;
        }
        let v = self.terms.entry(key).or_insert(0.0);
        *v += c;
        if *v == 0.0 {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Poly3) -> Poly3 {
        let mut out = self.clone();
        for (&k, &c) in &other.terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn scale(&self, c: f64) -> Poly3 {
        let mut out = Poly3::zero();
        for (&k, &v) in &self.terms {
            out.add_term(k, v * c);
        }
        out
    }

    pub fn mul(&self, other: &Poly3) -> Poly3 {
        let mut out = Poly3::zero();
        for (&(a1, a2, a3), &ca) in &self.terms {
            for (&(b1, b2, b3), &cb) in &other.terms {
                out.add_term((a1 + b1, a2 + b2, a3 + b3), ca * cb);
            }
        }
        out
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|&(i, j, k)| i as u32 + j as u32 + k as u32)
            .max()
            .unwrap_or(0)
    }

    pub fn eval(&self, x: &[f64; 3]) -> f64 {
        let mut s = 0.0;
        for (&(i, j, k), &c) in &self.terms {
            s += c * x[0].powi(i as i32) * x[1].powi(j as i32) * x[2].powi(k as i32);
        }
        s
    }

    /// Substitute x_i = sum_j m[i][j] y_j; returns the polynomial in y.
    pub fn substitute_linear(&self, m: &[[f64; 3]; 3]) -> Poly3 {
        let lin: Vec<Poly3> = (0..3)
            .map(|i| {
                let mut p = Poly3::zero();
                for j in 0..3 {
                    p.add_term(
                        {
                            let mut e = [0u8; 3];
                            e[j] = 1;
                            (e[0], e[1], e[2])
                        },
                        m[i][j],
                    );
                }
                p
            })
            .collect();
        let mut out = Poly3::zero();
        for (&(e1, e2, e3), &c) in &self.terms {
            let mut t = Poly3::constant(c);
            for (axis, &e) in [e1, e2, e3].iter().enumerate() {
                for _ in 0..e {
                    t = t.mul(&lin[axis]);
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// Drop coefficients below `tol` times the largest magnitude.
    pub fn prune(&self, tol: f64) -> Poly3 {
        let max = self.terms.values().map(|c| c.abs()).fold(0.0, f64::max);
        let mut out = Poly3::zero();
        for (&k, &c) in &self.terms {
            if c.abs() > tol * max {
                out.add_term(k, c);
            }
        }
        out
    }
}

/// Exact integral of P(x) e^{-x^T Q x} over R^3 by orthogonal
/// diagonalization of Q and products of 1-D moments.
pub fn integrate_poly_gaussian_3d(p: &Poly3, q: &SymMat3) -> Result<f64> {
    if p.total_degree() > 6 {
        return Err(Error::MomentOrderTooLarge(p.total_degree() as usize));
    }
    let (vals, vecs) = q.jacobi_eigen();
    for lam in vals {
        if !(lam > 0.0) {
            return Err(Error::NotPositiveDefinite(lam));
        }
    }
    // x = V y turns the exponent into sum_j lambda_j y_j^2
    let rotated = p.substitute_linear(&vecs);
    let mut total = 0.0;
    for (&(e1, e2, e3), &c) in &rotated.terms {
        let mut m = c;
        for (j, &e) in [e1, e2, e3].iter().enumerate() {
            // e^{-lambda y^2} = e^{-(2 lambda) y^2 / 2}
            m *= gaussian_moment_1d(2.0 * vals[j], e as u32)?;
        }
        total += m;
    }
    Ok(total)
}

/// Gauss-Hermite nodes and total weights for the weight e^{-t^2}:
/// integral f(t) dt ~ sum_i wt_i f(t_i) with wt_i = w_i e^{t_i^2},
/// valid for Gaussian-decaying f.
pub fn gauss_hermite(n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    if n == 0 || n > 128 {
        return Err(Error::InvalidConfig(format!("quadrature order {n}")));
    }
    // normalized Hermite recurrence: h_{k+1} = t sqrt(2/(k+1)) h_k
    //                                           - sqrt(k/(k+1)) h_{k-1}
    let eval = |t: f64| -> (f64, f64, f64) {
        // returns (h_n, h_{n-1}, d h_n / dt)
        let mut hkm1 = 0.0;
        let mut hk = std::f64::consts::PI.powf(-0.25);
        for k in 0..n {
            let next = t * (2.0 / (k as f64 + 1.0)).sqrt() * hk
                - (k as f64 / (k as f64 + 1.0)).sqrt() * hkm1;
            hkm1 = hk;
            hk = next;
        }
        let dh = (2.0 * n as f64).sqrt() * hkm1;
        (hk, hkm1, dh)
    };
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // initial guesses marching inward from the largest root
        let mut t = match i {
            0 => ((2 * n + 1) as f64).sqrt() - 1.85575 * ((2 * n + 1) as f64).powf(-1.0 / 6.0),
            1 => nodes[n - 1] - 1.14 * (n as f64).powf(0.426) / nodes[n - 1],
            2 => 1.86 * nodes[n - 2] - 0.86 * nodes[n - 1],
            3 => 1.91 * nodes[n - 3] - 0.91 * nodes[n - 2],
            _ => 2.0 * nodes[n - i] - nodes[n - i + 1],
        };
        for _ in 0..200 {
            let (h, _, dh) = eval(t);
            let dt = h / dh;
            t -= dt;
            if dt.abs() < 1e-15 * (1.0 + t.abs()) {
                break;
            }
        }
        let (_, hm1, _) = eval(t);
        let w = 1.0 / (n as f64 * hm1 * hm1);
        nodes[n - 1 - i] = t;
        nodes[i] = -t;
        weights[n - 1 - i] = w;
        weights[i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    let wt = nodes
        .iter()
        .zip(&weights)
        .map(|(t, w)| w * (t * t).exp())
        .collect();
    Ok((nodes, wt))
}

#[derive(Debug, Clone, Copy)]
pub struct QuadratureResult {
    pub value: f64,
    pub converged: bool,
    /// per-axis order of the last rule evaluated
    pub n_used: usize,
}

fn kahan_sum(values: impl Iterator<Item = f64>) -> f64 {
    let mut s = 0.0;
    let mut c = 0.0;
    for v in values {
        let y = v - c;
        let t = s + y;
        c = (t - s) - y;
        s = t;
    }
    s
}

/// Tensor-product quadrature of f over R^3 through an affine change of
/// variables: integral f(x) d^3x = |det M|^{-1} integral f(x(y)) d^3y,
/// with Gauss-Hermite nodes scaled by gauss_scale c (node y = t / sqrt(c)).
/// Doubles the order from n until the relative change is below 1e-10 or
/// the order reaches 64.
pub fn quadrature_integrate<F>(
    f: &F,
    change: &AffineChange,
    gauss_scale: f64,
    n_start: usize,
) -> Result<QuadratureResult>
where
    F: Fn(&[f64; 3]) -> Result<f64>,
{
    if !(gauss_scale > 0.0) {
        return Err(Error::InvalidConfig("gauss scale must be positive".into()));
    }
    let scale = gauss_scale.sqrt();
    let run = |n: usize| -> Result<f64> {
        let (nodes, wt) = gauss_hermite(n)?;
        let mut terms = Vec::with_capacity(n * n * n);
        for (t1, w1) in nodes.iter().zip(&wt) {
            for (t2, w2) in nodes.iter().zip(&wt) {
                for (t3, w3) in nodes.iter().zip(&wt) {
                    let y = [t1 / scale, t2 / scale, t3 / scale];
                    let x = change.x_from_y(y);
                    terms.push(w1 * w2 * w3 * f(&x)?);
                }
            }
        }
        Ok(kahan_sum(terms.into_iter()) / (scale.powi(3) * change.absdet))
    };
    let mut n = n_start.max(4);
    let mut prev = run(n)?;
    loop {
        let next_n = (n * 2).min(64);
        if next_n == n {
            return Ok(QuadratureResult {
                value: prev,
                converged: false,
                n_used: n,
            });
        }
        let cur = run(next_n)?;
        let denom = prev.abs().max(cur.abs()).max(1e-300);
        if (cur - prev).abs() / denom < 1e-10 || (cur - prev).abs() < 1e-14 {
            return Ok(QuadratureResult {
                value: cur,
                converged: true,
                n_used: next_n,
            });
        }
        prev = cur;
        n = next_n;
    }
}

/// 1-D analogue used by the warm-up claim: integral f(x) dx over R.
pub fn quadrature_integrate_1d<F>(f: &F, gauss_scale: f64, n_start: usize) -> Result<QuadratureResult>
where
    F: Fn(f64) -> Result<f64>,
{
    if !(gauss_scale > 0.0) {
        return Err(Error::InvalidConfig("gauss scale must be positive".into()));
    }
    let scale = gauss_scale.sqrt();
    let run = |n: usize| -> Result<f64> {
        let (nodes, wt) = gauss_hermite(n)?;
        let mut terms = Vec::with_capacity(n);
        for (t, w) in nodes.iter().zip(&wt) {
            terms.push(w * f(t / scale)?);
        }
        Ok(kahan_sum(terms.into_iter()) / scale)
    };
    let mut n = n_start.max(4);
    let mut prev = run(n)?;
    loop {
        let next_n = (n * 2).min(64);
        if next_n == n {
            return Ok(QuadratureResult {
                value: prev,
                converged: false,
                n_used: n,
            });
        }
        let cur = run(next_n)?;
        let denom = prev.abs().max(cur.abs()).max(1e-300);
        if (cur - prev).abs() / denom < 1e-10 || (cur - prev).abs() < 1e-14 {
            return Ok(QuadratureResult {
                value: cur,
                converged: true,
                n_used: next_n,
            });
        }
        prev = cur;
        n = next_n;
    }
}

/// Recover the polynomial factor of a black-box f(x) = P(x) e^{-x^T Q x}
/// by tensor-product interpolation: unweight on a Chebyshev grid in
/// [-half_width, half_width]^3 and solve per-axis Vandermonde systems.
/// Coefficients below 1e-7 of the largest are dropped.
pub fn fit_poly_gaussian<F>(f: &F, q: &SymMat3, degree: usize, half_width: f64) -> Result<Poly3>
where
    F: Fn(&[f64; 3]) -> Result<f64>,
{
    if degree > 6 {
        return Err(Error::MomentOrderTooLarge(degree));
    }
    let m = degree + 1;
    let nodes: Vec<f64> = (0..m)
        .map(|i| {
            half_width
                * (std::f64::consts::PI * (2.0 * i as f64 + 1.0) / (2.0 * m as f64)).cos()
        })
        .collect();
    // values of P on the grid
    let mut vals = vec![0.0; m * m * m];
    for (i, &x1) in nodes.iter().enumerate() {
        for (j, &x2) in nodes.iter().enumerate() {
            for (k, &x3) in nodes.iter().enumerate() {
                let x = [x1, x2, x3];
                let mut quad = 0.0;
                for (r, row) in q.m.iter().enumerate() {
                    for (c, &qrc) in row.iter().enumerate() {
                        quad += x[r] * qrc * x[c];
                    }
                }
                vals[(i * m + j) * m + k] = f(&x)? * quad.exp();
            }
        }
    }
    // Vandermonde in the physical coordinate, solved one axis at a time
    let mut vand = vec![0.0; m * m];
    for (i, &t) in nodes.iter().enumerate() {
        for p in 0..m {
            vand[i * m + p] = t.powi(p as i32);
        }
    }
    let solve_axis = |vals: &mut Vec<f64>, axis: usize| -> Result<()> {
        let idx = |a: usize, b: usize, c: usize| match axis {
            0 => (a * m + b) * m + c,
            1 => (b * m + a) * m + c,
            _ => (b * m + c) * m + a,
        };
        for b in 0..m {
            for c in 0..m {
                let line: Vec<f64> = (0..m).map(|a| vals[idx(a, b, c)]).collect();
                let coef = solve_dense(&vand, &line, m)?;
                for (a, v) in coef.into_iter().enumerate() {
                    vals[idx(a, b, c)] = v;
                }
            }
        }
        Ok(())
    };
    solve_axis(&mut vals, 0)?;
    solve_axis(&mut vals, 1)?;
    solve_axis(&mut vals, 2)?;
    let mut poly = Poly3::zero();
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                poly.add_term((i as u8, j as u8, k as u8), vals[(i * m + j) * m + k]);
            }
        }
    }
    let pruned = poly.prune(1e-7);
    // keep only total degree <= 6 after pruning
    let mut out = Poly3::zero();
    for (&key, &c) in &pruned.terms {
        if (key.0 as u32 + key.1 as u32 + key.2 as u32) <= 6 {
            out.add_term(key, c);
        }
    }
    Ok(out)
}
