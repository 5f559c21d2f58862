//! Small dense linear algebra helpers: complex matrices for the generator
//! algebra (n <= 3), a cyclic Jacobi eigensolver for symmetric 3x3 forms,
//! and a pivoted Gaussian solver for the interpolation systems.

use num_complex::Complex64;

use crate::{Error, Result};

/// Dense complex square matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    pub n: usize,
    pub data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    pub fn from_rows(rows: &[&[Complex64]]) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for r in rows {
            assert_eq!(r.len(), n, "matrix must be square");
            data.extend_from_slice(r);
        }
        Self { n, data }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.n + j] = v;
    }

    pub fn mul(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..n {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.n, other.n);
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        CMatrix { n: self.n, data }
    }

    pub fn scale(&self, c: Complex64) -> CMatrix {
        CMatrix {
            n: self.n,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// [A, B] = AB - BA.
    pub fn commutator(&self, other: &CMatrix) -> CMatrix {
        self.mul(other).add(&other.mul(self).scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> CMatrix {
        let n = self.n;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, self.get(j, i).conj());
            }
        }
        out
    }

    pub fn max_abs_diff(&self, other: &CMatrix) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Symmetric real 3x3 matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymMat3 {
    pub m: [[f64; 3]; 3],
}

impl SymMat3 {
    pub fn new(m: [[f64; 3]; 3]) -> Self {
        Self { m }
    }

    pub fn scale(&self, c: f64) -> Self {
        let mut m = self.m;
        for row in &mut m {
            for v in row.iter_mut() {
                *v *= c;
            }
        }
        Self { m }
    }

    /// Eigendecomposition by cyclic Jacobi rotations; returns (eigenvalues,
    /// eigenvector columns V) with M = V diag(lambda) V^T. Off-diagonal
    /// tolerance 1e-14 relative to the largest entry.
    pub fn jacobi_eigen(&self) -> ([f64; 3], [[f64; 3]; 3]) {
        let mut a = self.m;
        let mut v = [[0.0; 3]; 3];
        for (d, row) in v.iter_mut().enumerate() {
            row[d] = 1.0;
        }
        let scale = self
            .m
            .iter()
            .flatten()
            .map(|x| x.abs())
            .fold(0.0, f64::max)
            .max(1e-300);
        for _ in 0..64 {
            let off = (a[0][1].abs()).max(a[0][2].abs()).max(a[1][2].abs());
            if off <= 1e-14 * scale {
                break;
            }
            for (p, q) in [(0usize, 1usize), (0, 2), (1, 2)] {
                if a[p][q].abs() <= 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let mut b = a;
                for k in 0..3 {
                    b[p][k] = c * a[p][k] - s * a[q][k];
                    b[q][k] = s * a[p][k] + c * a[q][k];
                }
                let mut a2 = b;
                for k in 0..3 {
                    a2[k][p] = c * b[k][p] - s * b[k][q];
                    a2[k][q] = s * b[k][p] + c * b[k][q];
                }
                a = a2;
                for row in &mut v {
                    let vp = c * row[p] - s * row[q];
                    let vq = s * row[p] + c * row[q];
                    row[p] = vp;
                    row[q] = vq;
                }
            }
        }
        ([a[0][0], a[1][1], a[2][2]], v)
    }
}

/// 3x3 determinant.
pub fn det3(m: &[[f64; 3]; 3]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// 3x3 inverse.
pub fn inv3(m: &[[f64; 3]; 3]) -> Result<[[f64; 3]; 3]> {
    let d = det3(m);
    if d.abs() < 1e-300 {
        return Err(Error::SingularMatrix("3x3 inverse".into()));
    }
    let c = |i: usize, j: usize| {
        let r = [(i + 1) % 3, (i + 2) % 3];
        let s = [(j + 1) % 3, (j + 2) % 3];
        m[r[0]][s[0]] * m[r[1]][s[1]] - m[r[0]][s[1]] * m[r[1]][s[0]]
    };
    let mut out = [[0.0; 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            // transpose of the cofactor matrix
            *v = c(j, i) / d;
        }
    }
    Ok(out)
}

/// Solve the dense system A x = b by Gaussian elimination with partial
/// pivoting. A is row-major n x n; b is overwritten-free.
pub fn solve_dense(a: &[f64], b: &[f64], n: usize) -> Result<Vec<f64>> {
    assert_eq!(a.len(), n * n);
    assert_eq!(b.len(), n);
    let mut m = a.to_vec();
    let mut x = b.to_vec();
    for col in 0..n {
        let mut piv = col;
        for r in col + 1..n {
            if m[r * n + col].abs() > m[piv * n + col].abs() {
                piv = r;
            }
        }
        if m[piv * n + col].abs() < 1e-300 {
            return Err(Error::SingularMatrix(format!("dense solve, column {col}")));
        }
        if piv != col {
            for k in 0..n {
                m.swap(col * n + k, piv * n + k);
            }
            x.swap(col, piv);
        }
        let d = m[col * n + col];
        for r in col + 1..n {
            let f = m[r * n + col] / d;
            if f == 0.0 {
                continue;
            }
            for k in col..n {
                m[r * n + k] -= f * m[col * n + k];
            }
            x[r] -= f * x[col];
        }
    }
    for col in (0..n).rev() {
        let mut s = x[col];
        for k in col + 1..n {
            s -= m[col * n + k] * x[k];
        }
        x[col] = s / m[col * n + col];
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn commutator_antisymmetry() {
        let a = CMatrix::from_rows(&[&[c(1.0, 0.0), c(0.0, 2.0)], &[c(0.0, -2.0), c(3.0, 0.0)]]);
        let b = CMatrix::from_rows(&[&[c(0.0, 1.0), c(1.0, 0.0)], &[c(1.0, 0.0), c(0.0, -1.0)]]);
        let ab = a.commutator(&b);
        let ba = b.commutator(&a).scale(c(-1.0, 0.0));
        assert!(ab.max_abs_diff(&ba) < 1e-14);
    }

    #[test]
    fn jacobi_recovers_diagonal() {
        let m = SymMat3::new([[2.0, 0.0, 0.0], [0.0, 5.0, 0.0], [0.0, 0.0, 7.0]]);
        let (vals, _) = m.jacobi_eigen();
        let mut sorted = vals;
        sorted.sort_by(f64::total_cmp);
        assert!((sorted[0] - 2.0).abs() < 1e-13);
        assert!((sorted[1] - 5.0).abs() < 1e-13);
        assert!((sorted[2] - 7.0).abs() < 1e-13);
    }

    #[test]
    fn jacobi_reconstructs_matrix() {
        let m = SymMat3::new([[3.0, -2.0, -0.7], [-2.0, 2.0, 0.0], [-0.7, 0.0, 4.5]]);
        let (vals, v) = m.jacobi_eigen();
        for i in 0..3 {
            for j in 0..3 {
                let mut s = 0.0;
                for (k, lam) in vals.iter().enumerate() {
                    s += v[i][k] * lam * v[j][k];
                }
                assert!(
                    (s - m.m[i][j]).abs() < 1e-12,
                    "entry ({i},{j}): {s} vs {}",
                    m.m[i][j]
                );
            }
        }
    }

    #[test]
    fn inv3_roundtrip() {
        let m = [[2.0, 1.0, 0.0], [0.5, 3.0, -1.0], [0.0, 0.2, 1.5]];
        let inv = inv3(&m).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let mut s = 0.0;
                for (k, row) in inv.iter().enumerate() {
                    s += m[i][k] * row[j];
                }
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((s - expect).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn solve_dense_vandermonde() {
        // interpolate x^2 + 1 at 3 nodes
        let nodes: [f64; 3] = [-1.0, 0.0, 2.0];
        let mut a = vec![0.0; 9];
        let mut b = vec![0.0; 3];
        for (i, t) in nodes.iter().enumerate() {
            for p in 0..3 {
                a[i * 3 + p] = (*t).powi(p as i32);
            }
            b[i] = t * t + 1.0;
        }
        let x = solve_dense(&a, &b, 3).unwrap();
        assert!((x[0] - 1.0).abs() < 1e-13);
        assert!(x[1].abs() < 1e-13);
        assert!((x[2] - 1.0).abs() < 1e-13);
    }

    #[test]
    fn det3_triangular() {
        let m = [[2.0, 5.0, 1.0], [0.0, 3.0, 9.0], [0.0, 0.0, 4.0]];
        assert!((det3(&m) - 24.0).abs() < 1e-12);
    }
}
