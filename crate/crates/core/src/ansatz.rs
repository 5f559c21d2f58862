//! The Gaussian-profile gauge-field families: specification, validation of
//! the parameter conditions, and pointwise evaluation.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::geometry::{LinearFormSet, Point};
use crate::{Error, Result};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Radial profile h(r). Only the Gaussian h(r) = -beta^2 r^2 ships; the
/// enum leaves room for alternatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProfileH {
    Gaussian,
}

impl ProfileH {
    pub fn h(&self, beta: f64, r: Complex64) -> Complex64 {
        match self {
            ProfileH::Gaussian => -beta * beta * r * r,
        }
    }

    pub fn dh(&self, beta: f64, r: Complex64) -> Complex64 {
        match self {
            ProfileH::Gaussian => -2.0 * beta * beta * r,
        }
    }

    pub fn d2h(&self, beta: f64, _r: Complex64) -> Complex64 {
        match self {
            ProfileH::Gaussian => c(-2.0 * beta * beta, 0.0),
        }
    }
}

/// One product-ansatz term A_mu^a = s_a d_mu exp(sum_j h(r_j)).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnsatzSpec {
    /// charge vector s_a, length = adjoint dimension
    pub s: Vec<f64>,
    /// complex direction d_mu = c_mu + i e_mu with d_3 = 0
    pub d: [Complex64; 4],
    pub forms: LinearFormSet,
    pub beta: f64,
    pub coupling: f64,
    pub profile: ProfileH,
    /// evaluate the forms with x_0 replaced by i x_0
    #[serde(default)]
    pub x0_rotation: bool,
}

/// Field values A_mu^a at one point: `a[adjoint][mu]`.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldSample {
    pub a: Vec<[Complex64; 4]>,
}

impl FieldSample {
    pub fn zeros(dim: usize) -> Self {
        Self {
            a: vec![[c(0.0, 0.0); 4]; dim],
        }
    }

    pub fn real_part(&self) -> Vec<[f64; 4]> {
        self.a
            .iter()
            .map(|row| core::array::from_fn(|mu| row[mu].re))
            .collect()
    }
}

/// Residual magnitudes of the parameter conditions. Validation reports,
/// it never rejects.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConditionReport {
    /// |d_3| (gauge condition A_3 = 0)
    pub d3: f64,
    /// |sum_{l<=2} d_l^2| (isotropy of the direction vector)
    pub d_isotropy: f64,
    /// per form j: |sum_{l<=2} d_l alpha_lj|
    pub orthogonality: Vec<f64>,
    /// per form j: |alpha_3j^2 - sum_{l<=2} alpha_lj^2|
    pub column: Vec<f64>,
    /// spread of alpha_1j / alpha_2j across forms (the alternative
    /// constant-ratio branch of the pairing lemma); NaN if some
    /// alpha_2j = 0
    pub ratio_spread: f64,
    /// per unordered pair (j,k): |alpha_3j alpha_3k - sum_{l<=2}
    /// alpha_lj alpha_lk| (the pairing condition the lemma claims follows)
    pub pairing: Vec<f64>,
    pub degenerate: bool,
}

impl ConditionReport {
    /// All conditions required of a valid ansatz at the given tolerance.
    /// The pairing residuals are informational and not part of the gate.
    pub fn el_valid(&self, tol: f64) -> bool {
        self.d3 <= tol
            && self.d_isotropy <= tol
            && self.orthogonality.iter().all(|r| *r <= tol)
            && self.column.iter().all(|r| *r <= tol)
    }

    pub fn max_core_residual(&self) -> f64 {
        let mut m = self.d3.max(self.d_isotropy);
        for r in self.orthogonality.iter().chain(self.column.iter()) {
            m = m.max(*r);
        }
        m
    }
}

impl AnsatzSpec {
    pub fn dim(&self) -> usize {
        self.s.len()
    }

    pub fn validate_conditions(&self) -> ConditionReport {
        let d = &self.d;
        let d3 = d[3].norm();
        let d_isotropy = (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).norm();
        let orthogonality = self
            .forms
            .columns
            .iter()
            .map(|col| (d[0] * col[0] + d[1] * col[1] + d[2] * col[2]).norm())
            .collect();
        let column = self
            .forms
            .columns
            .iter()
            .map(|col| {
                (col[3] * col[3] - (col[0] * col[0] + col[1] * col[1] + col[2] * col[2])).norm()
            })
            .collect();
        let ratios: Vec<Option<Complex64>> = self
            .forms
            .columns
            .iter()
            .map(|col| {
                if col[2].norm() < 1e-300 {
                    None
                } else {
                    Some(col[1] / col[2])
                }
            })
            .collect();
        let ratio_spread = if ratios.iter().any(|r| r.is_none()) {
            f64::NAN
        } else {
            let vals: Vec<Complex64> = ratios.into_iter().flatten().collect();
            let mut spread: f64 = 0.0;
            for w in vals.windows(2) {
                spread = spread.max((w[1] - w[0]).norm());
            }
            spread
        };
        let mut pairing = Vec::new();
        let cols = &self.forms.columns;
        for j in 0..cols.len() {
            for k in j + 1..cols.len() {
                let lhs = cols[j][3] * cols[k][3];
                let rhs =
                    cols[j][0] * cols[k][0] + cols[j][1] * cols[k][1] + cols[j][2] * cols[k][2];
                pairing.push((lhs - rhs).norm());
            }
        }
        ConditionReport {
            d3,
            d_isotropy,
            orthogonality,
            column,
            ratio_spread,
            pairing,
            degenerate: d.iter().all(|v| v.norm() < 1e-300),
        }
    }

    /// Common scalar factor exp(sum_j h(r_j)) at a point.
    pub fn envelope(&self, p: &Point) -> Result<Complex64> {
        let mut expo = c(0.0, 0.0);
        for r in self.forms.eval(p, self.x0_rotation) {
            expo += self.profile.h(self.beta, r);
        }
        if expo.re > 700.0 {
            return Err(Error::Overflow(expo.re));
        }
        Ok(expo.exp())
    }

    pub fn eval_field(&self, p: &Point) -> Result<FieldSample> {
        let env = self.envelope(p)?;
        let base: [Complex64; 4] = core::array::from_fn(|mu| self.d[mu] * env);
        let a = self
            .s
            .iter()
            .map(|&sa| core::array::from_fn(|mu| base[mu] * sa))
            .collect();
        Ok(FieldSample { a })
    }

    pub fn real_part_field(&self, p: &Point) -> Result<Vec<[f64; 4]>> {
        Ok(self.eval_field(p)?.real_part())
    }
}

/// Sum of product-ansatz terms sharing width and coupling.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SumAnsatz {
    pub terms: Vec<AnsatzSpec>,
}

impl SumAnsatz {
    pub fn new(terms: Vec<AnsatzSpec>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InvalidConfig("sum ansatz needs at least one term".into()));
        }
        let beta = terms[0].beta;
        let coupling = terms[0].coupling;
        let dim = terms[0].dim();
        for t in &terms[1..] {
            if t.beta != beta || t.coupling != coupling {
                return Err(Error::MixedSumParameters);
            }
            if t.dim() != dim {
                return Err(Error::InvalidConfig("sum ansatz terms must share dimension".into()));
            }
        }
        Ok(Self { terms })
    }

    pub fn dim(&self) -> usize {
        self.terms[0].dim()
    }

    pub fn eval_field(&self, p: &Point) -> Result<FieldSample> {
        let mut out = FieldSample::zeros(self.dim());
        for t in &self.terms {
            let sample = t.eval_field(p)?;
            for (acc, row) in out.a.iter_mut().zip(sample.a) {
                for mu in 0..4 {
                    acc[mu] += row[mu];
                }
            }
        }
        Ok(out)
    }
}

/// Anything evaluable as a gauge field at a point.
pub trait GaugeField {
    fn dim(&self) -> usize;
    fn coupling(&self) -> f64;
    fn eval(&self, p: &Point) -> Result<FieldSample>;

    /// True when every adjoint row of the field is a multiple of one shared
    /// four-vector, which cancels the commutator term algebraically.
    fn is_product_structured(&self) -> bool {
        false
    }

    /// Real part of the field as a complex-valued sample (imaginary part
    /// zero), so the calculus routines apply unchanged.
    fn eval_real(&self, p: &Point) -> Result<FieldSample> {
        let mut s = self.eval(p)?;
        for row in &mut s.a {
            for v in row.iter_mut() {
                *v = c(v.re, 0.0);
            }
        }
        Ok(s)
    }
}

impl GaugeField for AnsatzSpec {
    fn dim(&self) -> usize {
        self.dim()
    }
    fn coupling(&self) -> f64 {
        self.coupling
    }
    fn eval(&self, p: &Point) -> Result<FieldSample> {
        self.eval_field(p)
    }
    fn is_product_structured(&self) -> bool {
        true
    }
}

impl GaugeField for SumAnsatz {
    fn dim(&self) -> usize {
        self.dim()
    }
    fn coupling(&self) -> f64 {
        self.terms[0].coupling
    }
    fn eval(&self, p: &Point) -> Result<FieldSample> {
        self.eval_field(p)
    }
    fn is_product_structured(&self) -> bool {
        // proportional charge vectors keep the sum a product field
        let s0 = &self.terms[0].s;
        self.terms[1..].iter().all(|t| proportional(s0, &t.s))
    }
}

fn proportional(a: &[f64], b: &[f64]) -> bool {
    // cross-product test: a_i b_j = a_j b_i for all pairs
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if (a[i] * b[j] - a[j] * b[i]).abs() > 1e-14 {
                return false;
            }
        }
    }
    true
}

/// Wrapper evaluating the real part of an underlying field.
pub struct RealPartField<'a, F: GaugeField>(pub &'a F);

impl<F: GaugeField> GaugeField for RealPartField<'_, F> {
    fn dim(&self) -> usize {
        self.0.dim()
    }
    fn coupling(&self) -> f64 {
        self.0.coupling()
    }
    fn eval(&self, p: &Point) -> Result<FieldSample> {
        self.0.eval_real(p)
    }
    fn is_product_structured(&self) -> bool {
        self.0.is_product_structured()
    }
}

/// Single-term preset: the explicit three-form parameter table with
/// d = (sqrt(2)(1-i), 1+i, 1+i, 0).
pub fn paper_single(beta: f64, s: Vec<f64>) -> AnsatzSpec {
    let s2 = 2f64.sqrt();
    AnsatzSpec {
        s,
        d: [c(s2, -s2), c(1.0, 1.0), c(1.0, 1.0), c(0.0, 0.0)],
        forms: LinearFormSet {
            columns: vec![
                [c(0.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0), c(s2, 0.0)],
                [c(0.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0), c(-s2, 0.0)],
                [
                    c(0.0, 1.0 / s2),
                    c(-1.0, 0.0),
                    c(0.0, 0.0),
                    c(1.0 / s2, 0.0),
                ],
            ],
        },
        beta,
        coupling: 1.0,
        profile: ProfileH::Gaussian,
        x0_rotation: false,
    }
}

/// Second term of the two-term preset; differs from the single preset in
/// the sign of the alpha_2j row and of d_2.
pub fn paper_pair_term2(beta: f64, s: Vec<f64>) -> AnsatzSpec {
    let s2 = 2f64.sqrt();
    AnsatzSpec {
        s,
        d: [c(s2, -s2), c(1.0, 1.0), c(-1.0, -1.0), c(0.0, 0.0)],
        forms: LinearFormSet {
            columns: vec![
                [c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(s2, 0.0)],
                [c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(-s2, 0.0)],
                [
                    c(0.0, 1.0 / s2),
                    c(-1.0, 0.0),
                    c(0.0, 0.0),
                    c(1.0 / s2, 0.0),
                ],
            ],
        },
        beta,
        coupling: 1.0,
        profile: ProfileH::Gaussian,
        x0_rotation: false,
    }
}

/// Two-term preset: the single-term table plus its sign-flipped companion.
pub fn paper_pair(beta: f64, s: Vec<f64>) -> SumAnsatz {
    SumAnsatz::new(vec![
        paper_single(beta, s.clone()),
        paper_pair_term2(beta, s),
    ])
    .expect("shared beta and coupling by construction")
}

/// Preset field, single- or two-term.
#[derive(Debug, Clone)]
pub enum PresetField {
    Single(AnsatzSpec),
    Pair(SumAnsatz),
}

impl PresetField {
    pub fn specs(&self) -> Vec<&AnsatzSpec> {
        match self {
            PresetField::Single(s) => vec![s],
            PresetField::Pair(p) => p.terms.iter().collect(),
        }
    }
}

impl GaugeField for PresetField {
    fn dim(&self) -> usize {
        match self {
            PresetField::Single(s) => s.dim(),
            PresetField::Pair(p) => p.dim(),
        }
    }
    fn coupling(&self) -> f64 {
        match self {
            PresetField::Single(s) => s.coupling,
            PresetField::Pair(p) => p.coupling(),
        }
    }
    fn eval(&self, p: &Point) -> Result<FieldSample> {
        match self {
            PresetField::Single(s) => s.eval_field(p),
            PresetField::Pair(pr) => pr.eval_field(p),
        }
    }
    fn is_product_structured(&self) -> bool {
        match self {
            PresetField::Single(_) => true,
            PresetField::Pair(pr) => pr.is_product_structured(),
        }
    }
}

pub fn paper_presets(name: &str, beta: f64, s: Vec<f64>) -> Result<PresetField> {
    match name {
        "paper-single" => Ok(PresetField::Single(paper_single(beta, s))),
        "paper-pair" => Ok(PresetField::Pair(paper_pair(beta, s))),
        other => Err(Error::UnknownPreset(other.to_string())),
    }
}

/// Randomly generated parameter family satisfying the orthogonality and
/// column conditions by construction: alpha_0j, alpha_1j are free,
/// alpha_2j solves the orthogonality condition, alpha_3j is one of the two
/// square roots of the column condition.
pub fn random_admissible<R: rand::Rng>(
    rng: &mut R,
    isotropic_d: bool,
) -> ([Complex64; 4], Vec<[Complex64; 4]>) {
    let cgen = |rng: &mut R| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    let (d0, d1, d2) = loop {
        let d0 = cgen(rng);
        let d1 = cgen(rng);
        let d2 = if isotropic_d {
            // solve d_0^2 + d_1^2 + d_2^2 = 0, either root
            let root = (-(d0 * d0 + d1 * d1)).sqrt();
            if rng.gen_bool(0.5) {
                root
            } else {
                -root
            }
        } else {
            cgen(rng)
        };
        // keep d_2 away from zero so the alpha_2j solve is stable
        if d2.norm() > 0.2 {
            break (d0, d1, d2);
        }
    };
    let d = [d0, d1, d2, c(0.0, 0.0)];
    let columns = (0..3)
        .map(|_| {
            let a0 = cgen(rng);
            let a1 = cgen(rng);
            let a2 = -(d0 * a0 + d1 * a1) / d2;
            let root = (a0 * a0 + a1 * a1 + a2 * a2).sqrt();
            let a3 = if rng.gen_bool(0.5) { root } else { -root };
            [a0, a1, a2, a3]
        })
        .collect();
    (d, columns)
}
