//! Finite-difference field calculus: field strength, Euler-Lagrange
//! residuals, Lagrangian and Hamiltonian densities.
//!
//! All derivatives are taken with respect to the stored lower-index
//! coordinates x_mu, which makes them upper-index derivatives; lowering a
//! derivative index multiplies by the metric signature.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::ansatz::{FieldSample, GaugeField};
use crate::geometry::{Metric, Point};
use crate::lie_algebra::{commutator_term, StructureConstants};
use crate::{Error, Result};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Central-difference scheme of order 2 or 4 with a fixed absolute step.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Scheme {
    pub order: usize,
    pub step: f64,
}

impl Default for Scheme {
    fn default() -> Self {
        Self {
            order: 4,
            step: 1e-3,
        }
    }
}

impl Scheme {
    pub fn validate(&self) -> Result<()> {
        if self.order != 2 && self.order != 4 {
            return Err(Error::InvalidConfig(format!(
                "scheme order must be 2 or 4, got {}",
                self.order
            )));
        }
        if !(self.step > 0.0) {
            return Err(Error::InvalidConfig("scheme step must be positive".into()));
        }
        Ok(())
    }

    pub fn with_step(&self, step: f64) -> Self {
        Self {
            order: self.order,
            step,
        }
    }

    /// (offset multiple, weight / h) pairs of the first-derivative stencil.
    fn stencil(&self) -> &'static [(f64, f64)] {
        match self.order {
            2 => &[(-1.0, -0.5), (1.0, 0.5)],
            _ => &[
                (-2.0, 1.0 / 12.0),
                (-1.0, -8.0 / 12.0),
                (1.0, 8.0 / 12.0),
                (2.0, -1.0 / 12.0),
            ],
        }
    }
}

fn shifted(p: &Point, axis: usize, delta: f64) -> Point {
    let mut q = *p;
    q.0[axis] += delta;
    q
}

/// First derivative along one axis of a sample-valued function.
fn d_sample<F>(f: &F, p: &Point, axis: usize, scheme: &Scheme, dim: usize) -> Result<FieldSample>
where
    F: Fn(&Point) -> Result<FieldSample>,
{
    let h = scheme.step;
    let mut out = FieldSample::zeros(dim);
    for &(k, w) in scheme.stencil() {
        let sample = f(&shifted(p, axis, k * h))?;
        for (acc, row) in out.a.iter_mut().zip(&sample.a) {
            for mu in 0..4 {
                acc[mu] += row[mu] * (w / h);
            }
        }
    }
    Ok(out)
}

/// F_mu_nu^a at one point, lower indices, with antisymmetry bookkeeping.
#[derive(Debug, Clone)]
pub struct FieldStrengthSample {
    /// f_lower[a][mu][nu]
    pub f_lower: Vec<[[Complex64; 4]; 4]>,
    pub metric: Metric,
    /// largest raw deviation from antisymmetry before symmetrization
    pub antisym_deviation: f64,
    /// largest magnitude of the g f_abc A A contribution over all (mu, nu)
    pub commutator_norm: f64,
}

impl FieldStrengthSample {
    pub fn f_upper(&self, a: usize, mu: usize, nu: usize) -> Complex64 {
        let g = self.metric.diag();
        g[mu] * g[nu] * self.f_lower[a][mu][nu]
    }

    pub fn max_abs(&self) -> f64 {
        self.f_lower
            .iter()
            .flatten()
            .flatten()
            .map(|v| v.norm())
            .fold(0.0, f64::max)
    }
}

/// Curvature by numerical differentiation:
/// F_mu_nu = D_mu A_nu - D_nu A_mu - g f_abc A_mu^b A_nu^c.
/// For product-structured fields the commutator cancels algebraically and
/// is skipped before differencing, making it exactly zero.
pub fn field_strength<F: GaugeField>(
    field: &F,
    p: &Point,
    f_const: &StructureConstants,
    metric: Metric,
    scheme: &Scheme,
) -> Result<FieldStrengthSample> {
    scheme.validate()?;
    let dim = field.dim();
    let eval = |q: &Point| field.eval(q);
    let d_a: Vec<FieldSample> = (0..4)
        .map(|mu| d_sample(&eval, p, mu, scheme, dim))
        .collect::<Result<_>>()?;
    let mut f_lower = vec![[[c(0.0, 0.0); 4]; 4]; dim];
    for a in 0..dim {
        for mu in 0..4 {
            for nu in 0..4 {
                f_lower[a][mu][nu] = d_a[mu].a[a][nu] - d_a[nu].a[a][mu];
            }
        }
    }
    let mut commutator_norm: f64 = 0.0;
    if !field.is_product_structured() {
        let g = field.coupling();
        let at_p = field.eval(p)?;
        for mu in 0..4 {
            for nu in 0..4 {
                let term = commutator_term(&at_p.a, f_const, mu, nu)?;
                for a in 0..dim {
                    let contrib = g * term.values[a];
                    commutator_norm = commutator_norm.max(contrib.norm());
                    f_lower[a][mu][nu] -= contrib;
                }
            }
        }
    }
    let mut antisym_deviation: f64 = 0.0;
    for row in &mut f_lower {
        for mu in 0..4 {
            antisym_deviation = antisym_deviation.max(row[mu][mu].norm());
            for nu in mu + 1..4 {
                let dev = (row[mu][nu] + row[nu][mu]).norm();
                antisym_deviation = antisym_deviation.max(dev);
                let avg = (row[mu][nu] - row[nu][mu]) * 0.5;
                row[mu][nu] = avg;
                row[nu][mu] = -avg;
            }
            row[mu][mu] = c(0.0, 0.0);
        }
    }
    Ok(FieldStrengthSample {
        f_lower,
        metric,
        antisym_deviation,
        commutator_norm,
    })
}

/// Residuals of the field equations at one point.
#[derive(Debug, Clone)]
pub struct ResidualReport {
    /// full[a][nu] = sum_mu D_mu F_mu_nu - g f_abc A^mu_b F_mu_nu^c
    pub full: Vec<[Complex64; 4]>,
    /// first reduced equation, D_3-paired with F_l3, per a and l in 0..3
    pub reduced_line1: Vec<[Complex64; 3]>,
    /// second reduced equation D_3 D_3 A_k - sum_{l<=2} D_l F_lk
    pub reduced_line2: Vec<[Complex64; 3]>,
    /// third reduced equation -D_3 sum_{l<=2} D_l A_l, per a
    pub reduced_line3: Vec<Complex64>,
    pub commutator_norm: f64,
    /// max |F| at the point, the natural scale for relative residuals
    pub field_scale: f64,
}

impl ResidualReport {
    pub fn max_full(&self) -> f64 {
        self.full
            .iter()
            .flatten()
            .map(|v| v.norm())
            .fold(0.0, f64::max)
    }

    pub fn max_reduced(&self) -> f64 {
        let m1 = self
            .reduced_line1
            .iter()
            .flatten()
            .map(|v| v.norm())
            .fold(0.0, f64::max);
        let m2 = self
            .reduced_line2
            .iter()
            .flatten()
            .map(|v| v.norm())
            .fold(0.0, f64::max);
        let m3 = self
            .reduced_line3
            .iter()
            .map(|v| v.norm())
            .fold(0.0, f64::max);
        m1.max(m2).max(m3)
    }
}

pub fn el_residual<F: GaugeField>(
    field: &F,
    p: &Point,
    f_const: &StructureConstants,
    metric: Metric,
    scheme: &Scheme,
) -> Result<ResidualReport> {
    scheme.validate()?;
    let dim = field.dim();
    let g = metric.diag();
    let fs_at = |q: &Point| field_strength(field, q, f_const, metric, scheme);
    let fs_p = fs_at(p)?;

    // D_mu F as a sample-valued derivative per fixed nu
    let mut d_f: Vec<Vec<[[Complex64; 4]; 4]>> = Vec::with_capacity(4);
    for axis in 0..4 {
        let h = scheme.step;
        let mut acc = vec![[[c(0.0, 0.0); 4]; 4]; dim];
        for &(k, w) in scheme.stencil() {
            let fs = fs_at(&shifted(p, axis, k * h))?;
            for a in 0..dim {
                for mu in 0..4 {
                    for nu in 0..4 {
                        acc[a][mu][nu] += fs.f_lower[a][mu][nu] * (w / h);
                    }
                }
            }
        }
        d_f.push(acc);
    }

    let mut full = vec![[c(0.0, 0.0); 4]; dim];
    for a in 0..dim {
        for nu in 0..4 {
            let mut s = c(0.0, 0.0);
            for mu in 0..4 {
                s += d_f[mu][a][mu][nu];
            }
            full[a][nu] = s;
        }
    }
    let mut commutator_norm = fs_p.commutator_norm;
    if !field.is_product_structured() {
        let coupling = field.coupling();
        let at_p = field.eval(p)?;
        for a in 0..dim {
            for nu in 0..4 {
                let mut s = c(0.0, 0.0);
                for mu in 0..4 {
                    for b in 0..dim {
                        for cc in 0..dim {
                            let fv = f_const.get(a, b, cc);
                            if fv == 0.0 {
                                continue;
                            }
                            // A^mu from stored A_mu via the metric
                            s += fv * (g[mu] * at_p.a[b][mu]) * fs_p.f_lower[cc][mu][nu];
                        }
                    }
                }
                let contrib = coupling * s;
                commutator_norm = commutator_norm.max(contrib.norm());
                full[a][nu] -= contrib;
            }
        }
    }

    let eval = |q: &Point| field.eval(q);
    let d3_a = d_sample(&eval, p, 3, scheme, dim)?;
    let d3_closure = |q: &Point| d_sample(&eval, q, 3, scheme, dim);
    let d3d3_a = d_sample(&d3_closure, p, 3, scheme, dim)?;
    let div_closure = |q: &Point| -> Result<FieldSample> {
        let mut out = FieldSample::zeros(dim);
        for l in 0..3 {
            let dl = d_sample(&eval, q, l, scheme, dim)?;
            for a in 0..dim {
                out.a[a][0] += dl.a[a][l];
            }
        }
        Ok(out)
    };
    let d3_div = d_sample(&div_closure, p, 3, scheme, dim)?;

    let mut reduced_line1 = vec![[c(0.0, 0.0); 3]; dim];
    let mut reduced_line2 = vec![[c(0.0, 0.0); 3]; dim];
    let mut reduced_line3 = vec![c(0.0, 0.0); dim];
    for a in 0..dim {
        for l in 0..3 {
            reduced_line1[a][l] = -d3_a.a[a][l] - fs_p.f_lower[a][l][3];
        }
        for k in 0..3 {
            let mut div_f = c(0.0, 0.0);
            for l in 0..3 {
                div_f += d_f[l][a][l][k];
            }
            reduced_line2[a][k] = d3d3_a.a[a][k] - div_f;
        }
        reduced_line3[a] = -d3_div.a[a][0];
    }

    Ok(ResidualReport {
        full,
        reduced_line1,
        reduced_line2,
        reduced_line3,
        commutator_norm,
        field_scale: fs_p.max_abs(),
    })
}

/// Lagrangian, kinetic, and Hamiltonian densities at one point.
#[derive(Debug, Clone, Copy)]
pub struct DensitySample {
    pub l: Complex64,
    pub kinetic: Complex64,
    pub h: Complex64,
}

/// L = -(1/2) sum_a sum_{nu > mu} g_mumu g_nunu (F_mu_nu^a)^2, the
/// index-pair expansion of -(1/4) F^mu_nu F_mu_nu.
pub fn lagrangian_density(fs: &FieldStrengthSample, metric: Metric) -> Result<Complex64> {
    if fs.metric != metric {
        return Err(Error::MetricMismatch(
            fs.metric.name().into(),
            metric.name().into(),
        ));
    }
    let g = metric.diag();
    let mut l = c(0.0, 0.0);
    for row in &fs.f_lower {
        for mu in 0..4 {
            for nu in mu + 1..4 {
                let f = row[mu][nu];
                l -= 0.5 * g[mu] * g[nu] * f * f;
            }
        }
    }
    Ok(l)
}

/// H = (1/2) sum_{a,mu} F_mu0^a D_0 A^mu_a - L, with A^mu raised through
/// the metric and the time derivative taken numerically.
pub fn hamiltonian_density<F: GaugeField>(
    field: &F,
    p: &Point,
    f_const: &StructureConstants,
    metric: Metric,
    scheme: &Scheme,
) -> Result<DensitySample> {
    let fs = field_strength(field, p, f_const, metric, scheme)?;
    let l = lagrangian_density(&fs, metric)?;
    let eval = |q: &Point| field.eval(q);
    let d0 = d_sample(&eval, p, 0, scheme, field.dim())?;
    let g = metric.diag();
    let mut kinetic = c(0.0, 0.0);
    for (a, row) in fs.f_lower.iter().enumerate() {
        for mu in 0..4 {
            kinetic += 0.5 * row[mu][0] * g[mu] * d0.a[a][mu];
        }
    }
    Ok(DensitySample {
        l,
        kinetic,
        h: kinetic - l,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ansatz::{paper_pair_term2, paper_single, AnsatzSpec, RealPartField, SumAnsatz};
    use crate::lie_algebra::{structure_constants, su_generators};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const E3: f64 = 0.049_787_068_367_863_944; // e^{-3}

    fn su2() -> StructureConstants {
        structure_constants(&su_generators(2).unwrap()).unwrap()
    }

    /// Closed-form curvature of a single product term:
    /// F_mu_nu^a = s_a e^{sum h} sum_j (d_nu alpha_mu_j - d_mu alpha_nu_j) h'(r_j).
    fn closed_form_f(spec: &AnsatzSpec, p: &Point) -> Vec<[[Complex64; 4]; 4]> {
        let env = spec.envelope(p).unwrap();
        let r = spec.forms.eval(p, spec.x0_rotation);
        let mut out = vec![[[Complex64::new(0.0, 0.0); 4]; 4]; spec.dim()];
        for (a, &sa) in spec.s.iter().enumerate() {
            for mu in 0..4 {
                for nu in 0..4 {
                    let mut sum = Complex64::new(0.0, 0.0);
                    for (j, col) in spec.forms.columns.iter().enumerate() {
                        sum += (spec.d[nu] * col[mu] - spec.d[mu] * col[nu])
                            * spec.profile.dh(spec.beta, r[j]);
                    }
                    out[a][mu][nu] = sa * env * sum;
                }
            }
        }
        out
    }

    #[test]
    fn field_strength_reference_value() {
        let spec = paper_single(1.0, vec![1.0, 0.0, 0.0]);
        let fs = field_strength(
            &spec,
            &Point([0.0, 1.0, 0.0, 0.0]),
            &su2(),
            Metric::Minkowski,
            &Scheme::default(),
        )
        .unwrap();
        let expect = Complex64::new(-10.0 * E3, -10.0 * E3);
        assert!(
            (fs.f_lower[0][1][2] - expect).norm() < 1e-9,
            "F_12^1 = {}",
            fs.f_lower[0][1][2]
        );
        assert_eq!(fs.commutator_norm, 0.0);
    }

    #[test]
    fn field_strength_matches_closed_form() {
        let spec = paper_single(0.9, vec![1.0, 0.5, 0.0]);
        let f_const = su2();
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..20 {
            let p = Point(core::array::from_fn(|_| rng.gen_range(-1.5..1.5)));
            let fs = field_strength(&spec, &p, &f_const, Metric::Minkowski, &Scheme::default())
                .unwrap();
            let cf = closed_form_f(&spec, &p);
            for a in 0..2 {
                for mu in 0..4 {
                    for nu in 0..4 {
                        assert!(
                            (fs.f_lower[a][mu][nu] - cf[a][mu][nu]).norm() < 1e-9,
                            "({a},{mu},{nu})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn derivative_convergence_order() {
        let spec = paper_single(1.0, vec![1.0, 0.0, 0.0]);
        let f_const = su2();
        let p = Point([0.2, 0.7, -0.4, 0.3]);
        let cf = closed_form_f(&spec, &p);
        for order in [2usize, 4] {
            let mut errs = Vec::new();
            for h in [1e-2, 5e-3, 2.5e-3] {
                let fs = field_strength(
                    &spec,
                    &p,
                    &f_const,
                    Metric::Minkowski,
                    &Scheme { order, step: h },
                )
                .unwrap();
                let mut err: f64 = 0.0;
                for a in 0..1 {
                    for mu in 0..4 {
                        for nu in 0..4 {
                            err = err.max((fs.f_lower[a][mu][nu] - cf[a][mu][nu]).norm());
                        }
                    }
                }
                errs.push(err);
            }
            for w in errs.windows(2) {
                let slope = (w[0] / w[1]).log2();
                assert!(
                    (slope - order as f64).abs() < 0.3,
                    "order {order}: slope {slope}"
                );
            }
        }
    }

    #[test]
    fn antisymmetry_and_zero_diagonal() {
        let spec = paper_single(1.1, vec![1.0, 2.0, 0.0]);
        let fs = field_strength(
            &spec,
            &Point([0.1, 0.4, -0.9, 0.2]),
            &su2(),
            Metric::Minkowski,
            &Scheme::default(),
        )
        .unwrap();
        assert!(fs.antisym_deviation < 1e-12);
        for row in &fs.f_lower {
            for mu in 0..4 {
                assert_eq!(row[mu][mu], Complex64::new(0.0, 0.0));
                for nu in 0..4 {
                    assert_eq!(row[mu][nu], -row[nu][mu]);
                }
            }
        }
    }

    #[test]
    fn mixed_sum_has_nonzero_commutator() {
        let sum = SumAnsatz::new(vec![
            paper_single(1.0, vec![1.0, 0.0, 0.0]),
            paper_pair_term2(1.0, vec![0.0, 1.0, 0.0]),
        ])
        .unwrap();
        assert!(!sum.is_product_structured());
        let fs = field_strength(
            &sum,
            &Point([0.0, 0.2, 0.1, -0.1]),
            &su2(),
            Metric::Minkowski,
            &Scheme::default(),
        )
        .unwrap();
        assert!(fs.commutator_norm > 1e-3, "norm {}", fs.commutator_norm);
    }

    #[test]
    fn zero_field_residuals_vanish() {
        let spec = paper_single(1.0, vec![0.0, 0.0, 0.0]);
        let rep = el_residual(
            &spec,
            &Point([0.3, -0.2, 0.5, 0.1]),
            &su2(),
            Metric::Minkowski,
            &Scheme::default(),
        )
        .unwrap();
        assert_eq!(rep.max_full(), 0.0);
        assert_eq!(rep.max_reduced(), 0.0);
    }

    #[test]
    fn reduced_lines_one_and_three_vanish() {
        // lines 1 and 3 hold identically for the preset; only the
        // finite-difference floor remains
        let spec = paper_single(1.0, vec![1.0, 0.0, 0.0]);
        let f_const = su2();
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for _ in 0..10 {
            let p = Point(core::array::from_fn(|_| rng.gen_range(-1.5..1.5)));
            let rep =
                el_residual(&spec, &p, &f_const, Metric::Minkowski, &Scheme::default()).unwrap();
            for l in 0..3 {
                assert!(rep.reduced_line1[0][l].norm() < 1e-9);
            }
            assert!(rep.reduced_line3[0].norm() < 1e-8);
        }
    }

    #[test]
    fn reduced_line_two_converges_to_closed_form() {
        // the second reduced equation does not vanish for the preset; the
        // finite differences must converge to the symbolic value
        // 48 (-1 - i) e^{-3} at the reference point
        let spec = paper_single(1.0, vec![1.0, 0.0, 0.0]);
        let f_const = su2();
        let p = Point([0.0, 1.0, 0.0, 0.0]);
        let expect = Complex64::new(-48.0 * E3, -48.0 * E3);
        let scheme = Scheme::default();
        let rep = el_residual(&spec, &p, &f_const, Metric::Minkowski, &scheme).unwrap();
        assert!(
            (rep.reduced_line2[0][1] - expect).norm() < 1e-6,
            "line2 = {}",
            rep.reduced_line2[0][1]
        );
        // relative to the local field scale this is O(1), not a solution
        assert!(rep.reduced_line2[0][1].norm() > rep.field_scale);
    }

    #[test]
    fn reduced_residual_linear_in_shared_direction() {
        let a = paper_single(1.0, vec![1.0, 0.0, 0.0]);
        let b = paper_pair_term2(1.0, vec![2.0, 0.0, 0.0]);
        let sum = SumAnsatz::new(vec![a.clone(), b.clone()]).unwrap();
        let f_const = su2();
        let p = Point([0.1, 0.4, -0.3, 0.6]);
        let scheme = Scheme::default();
        let ra = el_residual(&a, &p, &f_const, Metric::Minkowski, &scheme).unwrap();
        let rb = el_residual(&b, &p, &f_const, Metric::Minkowski, &scheme).unwrap();
        let rs = el_residual(&sum, &p, &f_const, Metric::Minkowski, &scheme).unwrap();
        for k in 0..3 {
            let lin = ra.reduced_line2[0][k] + rb.reduced_line2[0][k];
            // rounding noise scales like ulp / h^2 in the second derivative
            assert!((rs.reduced_line2[0][k] - lin).norm() < 1e-7);
        }
    }

    #[test]
    fn minkowski_real_lagrangian_vanishes_pointwise() {
        let spec = paper_single(1.0, vec![1.0, 0.0, 0.0]);
        let real = RealPartField(&spec);
        let f_const = su2();
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..50 {
            let p = Point::spatial(
                rng.gen_range(-1.5..1.5),
                rng.gen_range(-1.5..1.5),
                rng.gen_range(-1.5..1.5),
            );
            let fs =
                field_strength(&real, &p, &f_const, Metric::Minkowski, &Scheme::default()).unwrap();
            let l = lagrangian_density(&fs, Metric::Minkowski).unwrap();
            let scale = fs.max_abs().powi(2).max(1e-30);
            assert!(l.norm() <= 1e-9 * scale.max(1e-4), "L = {l}, scale {scale}");
            assert!(l.im.abs() < 1e-12, "real field must give real L");
        }
    }

    #[test]
    fn euclidean_real_lagrangian_matches_polynomial() {
        // closed form: L_R = -4 beta^4 (sum_a s_a^2) e^{-2 beta^2 sum rho^2}
        //   (26 x1^2 - 40 x1 x2 - 14 sqrt2 x1 x3 + 16 x2^2 + 4 sqrt2 x2 x3 + 41 x3^2)
        let beta = 0.8;
        let spec = paper_single(beta, vec![1.0, 0.0, 0.0]);
        let real = RealPartField(&spec);
        let f_const = su2();
        let mut rng = ChaCha8Rng::seed_from_u64(24);
        for _ in 0..50 {
            let (x1, x2, x3) = (
                rng.gen_range(-1.5..1.5),
                rng.gen_range(-1.5..1.5),
                rng.gen_range(-1.5..1.5),
            );
            let p = Point::spatial(x1, x2, x3);
            let fs = field_strength(
                &real,
                &p,
                &f_const,
                Metric::EuclideanNegative,
                &Scheme::default(),
            )
            .unwrap();
            let l = lagrangian_density(&fs, Metric::EuclideanNegative).unwrap();
            let rho_sq: f64 = spec
                .forms
                .eval_split(&p, false)
                .iter()
                .map(|(r, _)| r * r)
                .sum();
            let s2 = 2f64.sqrt();
            let poly = 26.0 * x1 * x1 - 40.0 * x1 * x2 - 14.0 * s2 * x1 * x3
                + 16.0 * x2 * x2
                + 4.0 * s2 * x2 * x3
                + 41.0 * x3 * x3;
            let expect = -4.0 * beta.powi(4) * (-2.0 * beta * beta * rho_sq).exp() * poly;
            assert!(
                (l.re - expect).abs() < 1e-8 * (1.0 + expect.abs()),
                "L = {}, expect {expect}",
                l.re
            );
        }
    }

    #[test]
    fn metric_mismatch_rejected() {
        let spec = paper_single(1.0, vec![1.0, 0.0, 0.0]);
        let fs = field_strength(
            &spec,
            &Point([0.0, 1.0, 0.0, 0.0]),
            &su2(),
            Metric::Minkowski,
            &Scheme::default(),
        )
        .unwrap();
        assert!(matches!(
            lagrangian_density(&fs, Metric::EuclideanNegative),
            Err(Error::MetricMismatch(_, _))
        ));
    }

    #[test]
    fn hamiltonian_zero_field() {
        let spec = paper_single(1.0, vec![0.0, 0.0, 0.0]);
        let d = hamiltonian_density(
            &spec,
            &Point([0.0, 0.3, 0.2, -0.5]),
            &su2(),
            Metric::Minkowski,
            &Scheme::default(),
        )
        .unwrap();
        assert_eq!(d.h, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn kinetic_term_vanishes_pointwise_on_slice() {
        // at x_0 = 0 the real-part kinetic term is identically zero for the
        // single preset, in both metrics
        let spec = paper_single(1.0, vec![1.0, 0.0, 0.0]);
        let real = RealPartField(&spec);
        let f_const = su2();
        let mut rng = ChaCha8Rng::seed_from_u64(25);
        for metric in [Metric::Minkowski, Metric::EuclideanNegative] {
            for _ in 0..20 {
                let p = Point::spatial(
                    rng.gen_range(-1.5..1.5),
                    rng.gen_range(-1.5..1.5),
                    rng.gen_range(-1.5..1.5),
                );
                let d = hamiltonian_density(&real, &p, &f_const, metric, &Scheme::default())
                    .unwrap();
                assert!(d.kinetic.norm() < 1e-9, "kinetic = {}", d.kinetic);
                assert!(d.h.im.abs() < 1e-12);
            }
        }
    }

    #[test]
    fn full_residual_reference_value() {
        // frozen from the symbolic derivative of the preset at
        // x = (0,1,0,0): the full divergence term equals
        // (2.3939..., -2.3939...) i in component nu = 0
        let spec = paper_single(1.0, vec![1.0, 0.0, 0.0]);
        let rep = el_residual(
            &spec,
            &Point([0.0, 1.0, 0.0, 0.0]),
            &su2(),
            Metric::Minkowski,
            &Scheme::default(),
        )
        .unwrap();
        let expect = Complex64::new(2.39392460876541, -2.39392460876541);
        assert!(
            (rep.full[0][0] - expect).norm() < 1e-6,
            "full[0] = {}",
            rep.full[0][0]
        );
        assert!(rep.full[0][3].norm() < 1e-8);
    }
}
