//! Metric signatures, index raising/lowering, the complex linear forms r_j,
//! and the affine coordinate changes used by the spatial integrals.
//!
//! Convention: points are stored in the lower-index components x_mu, and all
//! numerical derivatives elsewhere in the crate are taken with respect to
//! these stored coordinates (which makes them upper-index derivatives).

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::linalg::{det3, inv3};
use crate::{Error, Result};

/// Flat diagonal metric: Minkowski (+,-,-,-) or the negative-definite
/// Euclidean variant (-,-,-,-).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Metric {
    Minkowski,
    EuclideanNegative,
}

impl Metric {
    pub fn diag(&self) -> [f64; 4] {
        match self {
            Metric::Minkowski => [1.0, -1.0, -1.0, -1.0],
            Metric::EuclideanNegative => [-1.0, -1.0, -1.0, -1.0],
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Metric::Minkowski => "minkowski",
            Metric::EuclideanNegative => "euclidean-negative",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "minkowski" => Ok(Metric::Minkowski),
            "euclidean-negative" => Ok(Metric::EuclideanNegative),
            other => Err(Error::InvalidConfig(format!("unknown metric '{other}'"))),
        }
    }
}

/// Spacetime point in lower-index coordinates x_mu.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point(pub [f64; 4]);

impl Point {
    pub fn spatial(x1: f64, x2: f64, x3: f64) -> Self {
        Point([0.0, x1, x2, x3])
    }
}

/// Componentwise v'_mu = g_mumu v^mu; its own inverse since g = g^{-1}.
pub fn raise_lower(v: [f64; 4], m: Metric) -> [f64; 4] {
    let g = m.diag();
    core::array::from_fn(|mu| g[mu] * v[mu])
}

pub fn raise_lower_c(v: [Complex64; 4], m: Metric) -> [Complex64; 4] {
    let g = m.diag();
    core::array::from_fn(|mu| g[mu] * v[mu])
}

/// Complex linear forms r_j = sum_mu alpha_mu_j x_mu, stored as columns.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinearFormSet {
    /// columns[j][mu] = alpha_mu_j
    pub columns: Vec<[Complex64; 4]>,
}

impl LinearFormSet {
    pub fn count(&self) -> usize {
        self.columns.len()
    }

    /// Evaluate every form at a point. With `x0_rotation` the time
    /// coordinate enters as i*x_0 instead of x_0.
    pub fn eval(&self, p: &Point, x0_rotation: bool) -> Vec<Complex64> {
        let x0 = if x0_rotation {
            Complex64::new(0.0, p.0[0])
        } else {
            Complex64::new(p.0[0], 0.0)
        };
        self.columns
            .iter()
            .map(|col| {
                col[0] * x0
                    + col[1] * p.0[1]
                    + col[2] * p.0[2]
                    + col[3] * p.0[3]
            })
            .collect()
    }

    /// Real/imaginary split (rho_j, sigma_j) of each form value.
    pub fn eval_split(&self, p: &Point, x0_rotation: bool) -> Vec<(f64, f64)> {
        self.eval(p, x0_rotation)
            .into_iter()
            .map(|r| (r.re, r.im))
            .collect()
    }

    /// Spatial quadratic form Q with sum_j rho_j(0, x)^2 = x^T Q x, built
    /// from the real parts of the spatial rows.
    pub fn spatial_rho_form(&self) -> crate::linalg::SymMat3 {
        let mut m = [[0.0; 3]; 3];
        for col in &self.columns {
            for k in 0..3 {
                for l in 0..3 {
                    m[k][l] += col[k + 1].re * col[l + 1].re;
                }
            }
        }
        crate::linalg::SymMat3::new(m)
    }
}

/// 3x3 determinant of the alpha rows restricted to mu in {0,1,2}; vanishing
/// signals that those rows are linearly dependent (which the orthogonality
/// condition on d forces whenever some d_l is nonzero).
pub fn dependence_determinant(forms: &LinearFormSet) -> Result<Complex64> {
    if forms.count() != 3 {
        return Err(Error::InvalidConfig(format!(
            "dependence determinant needs 3 forms, got {}",
            forms.count()
        )));
    }
    let a = |l: usize, j: usize| forms.columns[j][l];
    let det = a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1))
        - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0))
        + a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
    Ok(det)
}

/// Invertible affine change (x_1,x_2,x_3) -> y = M x on the spatial slice,
/// carrying |det M| for the measure relation d3x = d3y / |det M|.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AffineChange {
    pub m: [[f64; 3]; 3],
    pub inv: [[f64; 3]; 3],
    pub absdet: f64,
}

impl AffineChange {
    pub fn new(m: [[f64; 3]; 3]) -> Result<Self> {
        let d = det3(&m);
        if d.abs() < 1e-12 {
            return Err(Error::SingularMatrix("affine change".into()));
        }
        Ok(Self {
            m,
            inv: inv3(&m)?,
            absdet: d.abs(),
        })
    }

    /// y = M (x_1,x_2,x_3) and the measure factor 1/|det M|.
    pub fn y_transform(&self, p: &Point) -> ([f64; 3], f64) {
        let x = [p.0[1], p.0[2], p.0[3]];
        let y = core::array::from_fn(|i| {
            self.m[i][0] * x[0] + self.m[i][1] * x[1] + self.m[i][2] * x[2]
        });
        (y, 1.0 / self.absdet)
    }

    pub fn x_from_y(&self, y: [f64; 3]) -> [f64; 3] {
        core::array::from_fn(|i| {
            self.inv[i][0] * y[0] + self.inv[i][1] * y[1] + self.inv[i][2] * y[2]
        })
    }

    pub fn identity() -> Self {
        Self::new([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
            .expect("identity is invertible")
    }

    /// Diagonalizing change for the single-preset Gaussian:
    /// y1 = sqrt(3) x1 - (2/sqrt(3)) x2 - (1/sqrt(6)) x3,
    /// y2 = sqrt(2/3) x2 - (1/sqrt(3)) x3, y3 = 2 x3; |det| = 2 sqrt(2).
    pub fn paper_single() -> Self {
        let s3 = 3f64.sqrt();
        Self::new([
            [s3, -2.0 / s3, -1.0 / 6f64.sqrt()],
            [0.0, (2f64 / 3.0).sqrt(), -1.0 / s3],
            [0.0, 0.0, 2.0],
        ])
        .expect("triangular with nonzero diagonal")
    }

    /// Diagonalizing change for the two-term preset, normalized so that
    /// sum_j rho_j1^2 + sum_j rho_j2^2 = y1^2 + y2^2 + y3^2 holds exactly:
    /// y1 = sqrt(6) x1 - (1/sqrt(3)) x3, y2 = 2 x2, y3 = sqrt(26/3) x3.
    pub fn paper_pair() -> Self {
        Self::new([
            [6f64.sqrt(), 0.0, -1.0 / 3f64.sqrt()],
            [0.0, 2.0, 0.0],
            [0.0, 0.0, (26f64 / 3.0).sqrt()],
        ])
        .expect("triangular with nonzero diagonal")
    }

    /// The two-term change exactly as stated in the source construction,
    /// with y3 = sqrt(14/3) x3. Its quadratic-form identity fails by
    /// 4 x3^2 (see claim C9); kept for the audit comparison.
    pub fn paper_pair_stated() -> Self {
        Self::new([
            [6f64.sqrt(), 0.0, -1.0 / 3f64.sqrt()],
            [0.0, 2.0, 0.0],
            [0.0, 0.0, (14f64 / 3.0).sqrt()],
        ])
        .expect("triangular with nonzero diagonal")
    }
}
