//! Acceptance gate: twelve criteria, one printed PASS/FAIL line each.
//!
//! Every criterion is implemented exactly as specified; three of them
//! (04 residual convergence, 09 cross-term polynomial, 12 pairing-lemma
//! equivalence) fail because the construction they test does not have the
//! claimed property. Those failures are findings, not toolkit bugs; the
//! detail text on each line states what was measured.

use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ym_verify::ansatz::{
    paper_pair, paper_pair_term2, paper_single, random_admissible, AnsatzSpec, ProfileH,
    RealPartField, SumAnsatz,
};
use ym_verify::claims::{run_claim, sweep_beta, ClaimParams, ClaimStatus};
use ym_verify::field_calculus::{el_residual, field_strength, lagrangian_density, Scheme};
use ym_verify::geometry::{AffineChange, LinearFormSet, Metric, Point};
use ym_verify::lie_algebra::{structure_constants, su_generators};
use ym_verify::linalg::{CMatrix, SymMat3};
use ym_verify::quadrature::{integrate_poly_gaussian_3d, quadrature_integrate, Poly3};
use ym_verify::Result;

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: String) -> Result<Outcome> {
    Ok(Outcome { ok: true, detail })
}

fn fail(detail: String) -> Result<Outcome> {
    Ok(Outcome { ok: false, detail })
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// 01: generator invariants, structure-constant antisymmetry, commutator
/// reconstruction, and f_123 = 1 for su(2) and su(3), all at 1e-12.
fn criterion_01() -> Result<Outcome> {
    let mut worst: f64 = 0.0;
    let mut f123_dev: f64 = 0.0;
    for n in [2usize, 3] {
        let g = su_generators(n)?;
        worst = worst.max(g.invariant_deviation());
        let f = structure_constants(&g)?;
        worst = worst.max(f.max_antisymmetry_deviation());
        f123_dev = f123_dev.max((f.get(0, 1, 2) - 1.0).abs());
        for b in 0..g.dim {
            for cc in 0..g.dim {
                let comm = g.matrices[b].commutator(&g.matrices[cc]);
                let mut rhs = CMatrix::zeros(n);
                for a in 0..g.dim {
                    rhs = rhs.add(&g.matrices[a].scale(c(0.0, f.get(a, b, cc))));
                }
                worst = worst.max(comm.max_abs_diff(&rhs));
            }
        }
    }
    let detail = format!("max deviation {worst:.2e}, |f_123 - 1| = {f123_dev:.2e}");
    if worst <= 1e-12 && f123_dev <= 1e-12 {
        pass(detail)
    } else {
        fail(detail)
    }
}

/// 02: the single preset and both pair terms satisfy the parameter
/// conditions at 1e-12, including sum d_l^2 = 0 for the preset d.
fn criterion_02() -> Result<Outcome> {
    let mut worst: f64 = 0.0;
    let single = paper_single(1.0, vec![1.0, 0.0, 0.0]);
    let r2 = 2f64.sqrt();
    let d_expect = [c(r2, -r2), c(1.0, 1.0), c(1.0, 1.0), c(0.0, 0.0)];
    let mut d_dev: f64 = 0.0;
    for (have, want) in single.d.iter().zip(d_expect.iter()) {
        d_dev = d_dev.max((have - want).norm());
    }
    let mut specs = vec![single];
    specs.extend(paper_pair(1.0, vec![1.0, 0.0, 0.0]).terms);
    for spec in &specs {
        let rep = spec.validate_conditions();
        worst = worst.max(rep.max_core_residual());
        if !rep.el_valid(1e-12) {
            return fail(format!(
                "condition residual {:.2e} exceeds 1e-12",
                rep.max_core_residual()
            ));
        }
    }
    let detail =
        format!("3 terms, max condition residual {worst:.2e}, preset d deviation {d_dev:.2e}");
    if d_dev <= 1e-12 {
        pass(detail)
    } else {
        fail(detail)
    }
}

/// 03: the commutator contribution to F is exactly zero (no tolerance)
/// for random product-structured terms, every (mu, nu) pair, su(2) and
/// su(3).
fn criterion_03() -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let scheme = Scheme::default();
    for n in [2usize, 3] {
        let f = structure_constants(&su_generators(n)?)?;
        let dim = f.dim;
        for i in 0..100 {
            let s: Vec<f64> = (0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let isotropic = rng.gen_bool(0.5);
            let (d, columns) = random_admissible(&mut rng, isotropic);
            let spec = AnsatzSpec {
                s,
                d,
                forms: LinearFormSet { columns },
                beta: rng.gen_range(0.5..1.5),
                coupling: rng.gen_range(0.5..2.0),
                profile: ProfileH::Gaussian,
                x0_rotation: false,
            };
            let p = Point([
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
            ]);
            let fs = field_strength(&spec, &p, &f, Metric::Minkowski, &scheme)?;
            if fs.commutator_norm != 0.0 {
                return fail(format!(
                    "su({n}) sample {i}: commutator contribution {:.3e} is not exactly zero",
                    fs.commutator_norm
                ));
            }
        }
    }
    pass("100 su(2) and 100 su(3) samples, commutator contribution exactly 0 in every (mu,nu) entry".into())
}

/// 04: reduced-system residual of the single preset under step halving.
/// The residual must shrink at the scheme order and extrapolate to
/// <= 1e-8 of the local field scale.
fn criterion_04() -> Result<Outcome> {
    let spec = paper_single(1.0, vec![1.0, 0.0, 0.0]);
    let f = structure_constants(&su_generators(2)?)?;
    let steps = [1e-2, 5e-3, 2.5e-3];
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut worst = [0.0f64; 3];
    for _ in 0..100 {
        let p = Point([
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
        ]);
        for (i, &h) in steps.iter().enumerate() {
            let scheme = Scheme { order: 4, step: h };
            let rep = el_residual(&spec, &p, &f, Metric::Minkowski, &scheme)?;
            let rel = rep.max_reduced() / rep.field_scale.max(1e-300);
            worst[i] = worst[i].max(rel);
        }
    }
    let o1 = (worst[0] / worst[1]).log2();
    let o2 = (worst[1] / worst[2]).log2();
    let p4 = 16.0;
    let extrapolated = (p4 * worst[2] - worst[1]) / (p4 - 1.0);
    let detail = format!(
        "relative residual {:.3e} / {:.3e} / {:.3e} at h = 1e-2/5e-3/2.5e-3; observed orders {o1:.2}, {o2:.2} (need 4.0 +- 0.3); extrapolated {extrapolated:.3e} (need <= 1e-8); the second reduced line is O(1) of the field and does not converge",
        worst[0], worst[1], worst[2]
    );
    if (o1 - 4.0).abs() <= 0.3 && (o2 - 4.0).abs() <= 0.3 && extrapolated.abs() <= 1e-8 {
        pass(detail)
    } else {
        fail(detail)
    }
}

/// 05: oracle vs quadrature on 50 random polynomial x Gaussian integrands
/// and on the field-norm integrand, <= 1e-10 relative; the C4 verdict
/// must flag which envelope normalization the stated constant matches.
fn criterion_05() -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let mut m = [[0.0f64; 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = rng.gen_range(1.5..3.5);
        }
        for i in 0..3 {
            for j in i + 1..3 {
                let off = rng.gen_range(-0.4..0.4);
                m[i][j] = off;
                m[j][i] = off;
            }
        }
        let q = SymMat3::new(m);
        let mut poly = Poly3::constant(rng.gen_range(0.5..2.0));
        for _ in 0..6 {
            let key = (
                rng.gen_range(0..=2u8),
                rng.gen_range(0..=2u8),
                rng.gen_range(0..=2u8),
            );
            poly.add_term(key, rng.gen_range(-2.0..2.0));
        }
        let oracle = integrate_poly_gaussian_3d(&poly, &q)?;
        let integrand = |x: &[f64; 3]| -> Result<f64> {
            let mut e = 0.0;
            for i in 0..3 {
                for j in 0..3 {
                    e += x[i] * m[i][j] * x[j];
                }
            }
            Ok(poly.eval(x) * (-e).exp())
        };
        let scale = (m[0][0] + m[1][1] + m[2][2]) / 3.0;
        let quad = quadrature_integrate(&integrand, &AffineChange::identity(), scale, 8)?;
        if !quad.converged {
            return fail("quadrature failed to converge on a random integrand".into());
        }
        worst = worst.max((quad.value - oracle).abs() / oracle.abs().max(1e-12));
    }
    // norm integrand: |Re A|^2 for the single preset at x_0 = 0 integrates
    // to (sum s^2)(sum c^2) pi^{3/2} / (8 b^3)
    let spec = paper_single(1.0, vec![1.0, 0.0, 0.0]);
    let sum_c2: f64 = spec.d.iter().map(|d| d.re * d.re).sum();
    let norm_oracle = sum_c2 * std::f64::consts::PI.powf(1.5) / 8.0;
    let density = |x: &[f64; 3]| -> Result<f64> {
        let sample = spec.real_part_field(&Point::spatial(x[0], x[1], x[2]))?;
        Ok(sample.iter().flatten().map(|a| a * a).sum())
    };
    let norm_quad = quadrature_integrate(&density, &AffineChange::paper_single(), 2.0, 8)?;
    let norm_dev = (norm_quad.value - norm_oracle).abs() / norm_oracle;
    let v4 = run_claim("C4", &ClaimParams::default())?;
    let flagged = v4
        .notes
        .iter()
        .any(|n| n.contains("single-power envelope"));
    let detail = format!(
        "50 integrands, worst deviation {worst:.2e}; norm integrand deviation {norm_dev:.2e}; C4 computed {:.5} vs stated {:.5}, normalization flagged: {flagged}",
        v4.computed_oracle.unwrap_or(f64::NAN),
        v4.paper_stated.unwrap_or(f64::NAN)
    );
    if worst <= 1e-10 && norm_dev <= 1e-10 && flagged && v4.gate_ok {
        pass(detail)
    } else {
        fail(detail)
    }
}

/// 06: the real Minkowski Lagrangian density of the single preset
/// vanishes pointwise at x_0 = 0, bounded by 1e-10 times the analytic
/// prefactor scale.
fn criterion_06() -> Result<Outcome> {
    let spec = paper_single(1.0, vec![1.0, 0.0, 0.0]);
    let real = RealPartField(&spec);
    let f = structure_constants(&su_generators(2)?)?;
    let scheme = Scheme::default();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut worst_ratio: f64 = 0.0;
    for _ in 0..1000 {
        let p = Point::spatial(
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
        );
        let fs = field_strength(&real, &p, &f, Metric::Minkowski, &scheme)?;
        let l = lagrangian_density(&fs, Metric::Minkowski)?.norm();
        let env2 = spec.envelope(&p)?.norm_sqr();
        let rho2: f64 = spec.forms.eval(&p, false).iter().map(|z| z.norm_sqr()).sum();
        let bound = 1e-10 * 4.0 * env2 * rho2.max(1.0);
        worst_ratio = worst_ratio.max(l / bound);
    }
    let detail = format!("1000 points, worst |L_R| / bound = {worst_ratio:.2e}");
    if worst_ratio <= 1.0 {
        pass(detail)
    } else {
        fail(detail)
    }
}

/// 07: Euclidean energy oracle/quadrature agreement and the stated
/// comparison in C6; first-order kinetic integral vanishes in C7.
fn criterion_07() -> Result<Outcome> {
    let params = ClaimParams::default();
    let v6 = run_claim("C6", &params)?;
    let v7 = run_claim("C7", &params)?;
    let internal = v6.rel_dev_internal.unwrap_or(f64::NAN);
    let kinetic = v7.computed_oracle.unwrap_or(f64::NAN).abs();
    let detail = format!(
        "C6 oracle/quadrature deviation {internal:.2e}, computed {:.5} vs stated {:.5}; C7 kinetic integral {kinetic:.2e}",
        v6.computed_oracle.unwrap_or(f64::NAN),
        v6.paper_stated.unwrap_or(f64::NAN)
    );
    let reported = v6.computed_oracle.is_some() && v6.paper_stated.is_some();
    if v6.gate_ok && internal <= 1e-8 && reported && v7.status == ClaimStatus::Confirmed {
        pass(detail)
    } else {
        fail(detail)
    }
}

/// 08: scaling sweeps over beta in {0.5, 1, 2, 4}: norm exponent -3,
/// Euclidean ratio exponent +2, both within 0.01.
fn criterion_08() -> Result<Outcome> {
    let params = ClaimParams::default();
    let betas = [0.5, 1.0, 2.0, 4.0];
    let norm = sweep_beta("norm", &params, &betas)?;
    let ratio = sweep_beta("ratio", &params, &betas)?;
    let detail = format!(
        "norm exponent {:.4} (r^2 = {:.6}), ratio exponent {:.4}",
        norm.fitted_exponent, norm.r_squared, ratio.fitted_exponent
    );
    if (norm.fitted_exponent + 3.0).abs() <= 0.01
        && norm.r_squared >= 0.9999
        && (ratio.fitted_exponent - 2.0).abs() <= 0.01
    {
        pass(detail)
    } else {
        fail(detail)
    }
}

/// 09: the computed two-term Minkowski L_R against the stated polynomial,
/// pointwise at 500 random points; also reports the sign of the
/// integrated energy against the claimed positive constant.
fn criterion_09() -> Result<Outcome> {
    let pair = paper_pair(1.0, vec![1.0, 0.0, 0.0]);
    let real = RealPartField(&pair);
    let f = structure_constants(&su_generators(2)?)?;
    let scheme = Scheme::default();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut worst_stated: f64 = 0.0;
    let mut worst_computed: f64 = 0.0;
    let r2 = 2f64.sqrt();
    for _ in 0..500 {
        let x = [
            rng.gen_range(-1.5..1.5),
            rng.gen_range(-1.5..1.5),
            rng.gen_range(-1.5..1.5),
        ];
        let p = Point::spatial(x[0], x[1], x[2]);
        let fs = field_strength(&real, &p, &f, Metric::Minkowski, &scheme)?;
        let l = lagrangian_density(&fs, Metric::Minkowski)?.re;
        let spair =
            6.0 * x[0] * x[0] - 2.0 * r2 * x[0] * x[2] + 4.0 * x[1] * x[1] + 9.0 * x[2] * x[2];
        let pref = -4.0 * (-spair).exp();
        let cross = 14.0 * r2 * x[0] * x[2] - 26.0 * x[0] * x[0] - 41.0 * x[2] * x[2];
        let val_stated = pref * (cross + 32.0 * x[1] * x[1]);
        let val_computed = pref * (cross + 16.0 * x[1] * x[1]);
        let denom = val_stated
            .abs()
            .max(4.0 * (-spair).exp() * (1.0 + x.iter().map(|v| v * v).sum::<f64>()));
        worst_stated = worst_stated.max((l - val_stated).abs() / denom);
        worst_computed = worst_computed.max((l - val_computed).abs() / denom);
    }
    let v9 = run_claim("C9", &ClaimParams::default())?;
    let energy = v9.computed_oracle.unwrap_or(f64::NAN);
    let detail = format!(
        "500 points: deviation from the stated polynomial {worst_stated:.2e} (need <= 1e-8); the computed density instead matches -26 x1^2 + 16 x2^2 - 41 x3^2 + 14 sqrt2 x1 x3 to {worst_computed:.2e}, a 16 x2^2 gap; integrated energy {energy:.4} vs the claimed positive constant"
    );
    if worst_stated <= 1e-8 {
        pass(detail)
    } else {
        fail(detail)
    }
}

/// 10: with non-proportional charge vectors the commutator survives and
/// the full residual does not converge under step halving.
fn criterion_10() -> Result<Outcome> {
    let v10 = run_claim("C10", &ClaimParams::default())?;
    let max_comm = v10.computed_oracle.unwrap_or(0.0);
    let sum = SumAnsatz::new(vec![
        paper_single(1.0, vec![1.0, 0.0, 0.0]),
        paper_pair_term2(1.0, vec![0.0, 1.0, 0.0]),
    ])?;
    let f = structure_constants(&su_generators(2)?)?;
    let steps = [1e-2, 5e-3, 2.5e-3];
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut worst = [0.0f64; 3];
    for _ in 0..20 {
        let p = Point::spatial(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        );
        for (i, &h) in steps.iter().enumerate() {
            let scheme = Scheme { order: 4, step: h };
            let rep = el_residual(&sum, &p, &f, Metric::Minkowski, &scheme)?;
            worst[i] = worst[i].max(rep.max_full() / rep.field_scale.max(1e-300));
        }
    }
    let reduction = worst[0] / worst[2];
    let detail = format!(
        "max commutator in F {max_comm:.4} (need > 1e-3); relative full residual {:.3e} -> {:.3e} under two halvings (reduction factor {reduction:.2}, a convergent order-4 scheme would give 256)",
        worst[0], worst[2]
    );
    if max_comm > 1e-3 && worst[2] > 1e-3 && reduction < 4.0 {
        pass(detail)
    } else {
        fail(detail)
    }
}

/// 11: 1-D warm-up expectation value, oracle exact, internal agreement
/// at 1e-12, reported against the stated 1/(sqrt2 a).
fn criterion_11() -> Result<Outcome> {
    let v = run_claim("C11", &ClaimParams::default())?;
    let internal = v.rel_dev_internal.unwrap_or(f64::NAN);
    let detail = format!(
        "computed {:.6} vs stated {:.6}, oracle/quadrature deviation {internal:.2e}",
        v.computed_oracle.unwrap_or(f64::NAN),
        v.paper_stated.unwrap_or(f64::NAN)
    );
    if v.gate_ok && internal <= 1e-12 && v.paper_stated.is_some() {
        pass(detail)
    } else {
        fail(detail)
    }
}

/// 12: randomized search over admissible parameters must find no
/// counterexample to the claimed pairing equivalence.
fn criterion_12() -> Result<Outcome> {
    let v = run_claim("C14", &ClaimParams::default())?;
    let count = v.computed_oracle.unwrap_or(f64::NAN);
    let first = v.notes.first().cloned().unwrap_or_default();
    let detail = format!("{count} of 10000 admissible draws are counterexamples (need 0); {first}");
    if v.status == ClaimStatus::Confirmed {
        pass(detail)
    } else {
        fail(detail)
    }
}

#[test]
fn acceptance_gate() {
    let criteria: Vec<(&str, fn() -> Result<Outcome>)> = vec![
        ("01 lie-algebra invariants", criterion_01),
        ("02 parameter conditions", criterion_02),
        ("03 commutator cancellation", criterion_03),
        ("04 residual convergence", criterion_04),
        ("05 oracle/quadrature agreement", criterion_05),
        ("06 null Lagrangian", criterion_06),
        ("07 Euclidean energy", criterion_07),
        ("08 scaling sweeps", criterion_08),
        ("09 cross-term polynomial", criterion_09),
        ("10 non-cancellation", criterion_10),
        ("11 1-d warm-up", criterion_11),
        ("12 pairing equivalence", criterion_12),
    ];
    let mut failures = Vec::new();
    for (name, run) in criteria {
        let start = Instant::now();
        let line = match run() {
            Ok(o) => {
                if !o.ok {
                    failures.push(name);
                }
                format!(
                    "{} {name} [{} ms]: {}",
                    if o.ok { "PASS" } else { "FAIL" },
                    start.elapsed().as_millis(),
                    o.detail
                )
            }
            Err(e) => {
                failures.push(name);
                format!("FAIL {name}: toolkit error: {e}")
            }
        };
        println!("{line}");
    }
    assert!(
        failures.is_empty(),
        "acceptance criteria failed: {failures:?}; the failures above are measured findings about the construction, not gate tolerances that can be relaxed"
    );
}
