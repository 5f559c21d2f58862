//! SU(N) generators, structure constants, and the quadratic commutator term
//! of the field strength.

use num_complex::Complex64;

use crate::linalg::CMatrix;
use crate::{Error, Result};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Basis of the su(n) algebra, normalized so that Tr(t_a t_b) = delta_ab / 2.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    pub n: usize,
    pub dim: usize,
    pub matrices: Vec<CMatrix>,
}

impl GeneratorSet {
    /// Largest deviation from Hermiticity, tracelessness, and trace
    /// orthonormality over the whole set.
    pub fn invariant_deviation(&self) -> f64 {
        let mut dev: f64 = 0.0;
        for t in &self.matrices {
            dev = dev.max(t.max_abs_diff(&t.dagger()));
            dev = dev.max(t.trace().norm());
        }
        for (a, ta) in self.matrices.iter().enumerate() {
            for (b, tb) in self.matrices.iter().enumerate() {
                let tr = ta.mul(tb).trace();
                let expect = if a == b { 0.5 } else { 0.0 };
                dev = dev.max((tr - c(expect, 0.0)).norm());
            }
        }
        dev
    }
}

/// Totally antisymmetric structure constants f_abc with
/// [t_b, t_c] = i f_abc t_a.
#[derive(Debug, Clone)]
pub struct StructureConstants {
    pub dim: usize,
    pub f: Vec<f64>,
}

impl StructureConstants {
    #[inline]
    pub fn get(&self, a: usize, b: usize, c: usize) -> f64 {
        self.f[(a * self.dim + b) * self.dim + c]
    }

    pub fn max_antisymmetry_deviation(&self) -> f64 {
        let mut dev: f64 = 0.0;
        for a in 0..self.dim {
            for b in 0..self.dim {
                for cc in 0..self.dim {
                    let v = self.get(a, b, cc);
                    dev = dev.max((v + self.get(b, a, cc)).abs());
                    dev = dev.max((v + self.get(a, cc, b)).abs());
                }
            }
        }
        dev
    }
}

/// Standard generator basis: halved Pauli matrices for n = 2, halved
/// Gell-Mann matrices for n = 3.
pub fn su_generators(n: usize) -> Result<GeneratorSet> {
    let z = c(0.0, 0.0);
    let matrices: Vec<CMatrix> = match n {
        2 => {
            let pauli = [
                CMatrix::from_rows(&[&[z, c(1.0, 0.0)], &[c(1.0, 0.0), z]]),
                CMatrix::from_rows(&[&[z, c(0.0, -1.0)], &[c(0.0, 1.0), z]]),
                CMatrix::from_rows(&[&[c(1.0, 0.0), z], &[z, c(-1.0, 0.0)]]),
            ];
            pauli.iter().map(|m| m.scale(c(0.5, 0.0))).collect()
        }
        3 => {
            let r3 = 1.0 / 3f64.sqrt();
            let gell_mann = [
                CMatrix::from_rows(&[
                    &[z, c(1.0, 0.0), z],
                    &[c(1.0, 0.0), z, z],
                    &[z, z, z],
                ]),
                CMatrix::from_rows(&[
                    &[z, c(0.0, -1.0), z],
                    &[c(0.0, 1.0), z, z],
                    &[z, z, z],
                ]),
                CMatrix::from_rows(&[
                    &[c(1.0, 0.0), z, z],
                    &[z, c(-1.0, 0.0), z],
                    &[z, z, z],
                ]),
                CMatrix::from_rows(&[
                    &[z, z, c(1.0, 0.0)],
                    &[z, z, z],
                    &[c(1.0, 0.0), z, z],
                ]),
                CMatrix::from_rows(&[
                    &[z, z, c(0.0, -1.0)],
                    &[z, z, z],
                    &[c(0.0, 1.0), z, z],
                ]),
                CMatrix::from_rows(&[
                    &[z, z, z],
                    &[z, z, c(1.0, 0.0)],
                    &[z, c(1.0, 0.0), z],
                ]),
                CMatrix::from_rows(&[
                    &[z, z, z],
                    &[z, z, c(0.0, -1.0)],
                    &[z, c(0.0, 1.0), z],
                ]),
                CMatrix::from_rows(&[
                    &[c(r3, 0.0), z, z],
                    &[z, c(r3, 0.0), z],
                    &[z, z, c(-2.0 * r3, 0.0)],
                ]),
            ];
            gell_mann.iter().map(|m| m.scale(c(0.5, 0.0))).collect()
        }
        other => return Err(Error::UnsupportedRank(other)),
    };
    Ok(GeneratorSet {
        n,
        dim: n * n - 1,
        matrices,
    })
}

/// Extract f_abc = -2i Tr([t_a, t_b] t_c) from an orthonormal generator set.
/// Entries below 1e-12 are clamped to zero so antisymmetry holds exactly.
pub fn structure_constants(g: &GeneratorSet) -> Result<StructureConstants> {
    let dev = g.invariant_deviation();
    if dev > 1e-12 {
        return Err(Error::NonOrthonormal(dev));
    }
    let dim = g.dim;
    let mut f = vec![0.0; dim * dim * dim];
    for a in 0..dim {
        for b in 0..dim {
            let comm = g.matrices[a].commutator(&g.matrices[b]);
            for cc in 0..dim {
                let v = c(0.0, -2.0) * comm.mul(&g.matrices[cc]).trace();
                if v.im.abs() > 1e-12 {
                    return Err(Error::NonOrthonormal(v.im.abs()));
                }
                let re = if v.re.abs() < 1e-12 { 0.0 } else { v.re };
                f[(a * dim + b) * dim + cc] = re;
            }
        }
    }
    Ok(StructureConstants { dim, f })
}

/// Commutator term f_abc A^mu_b A^nu_c for each a, where `samples[b][mu]`
/// holds the complex field values. Computed both as the full double sum and
/// as the paired form sum_{c>b} f_abc (A^mu_b A^nu_c - A^mu_c A^nu_b);
/// `pair_deviation` records their largest disagreement.
#[derive(Debug, Clone)]
pub struct CommutatorTerm {
    pub values: Vec<Complex64>,
    pub pair_deviation: f64,
}

pub fn commutator_term(
    samples: &[[Complex64; 4]],
    f: &StructureConstants,
    mu: usize,
    nu: usize,
) -> Result<CommutatorTerm> {
    if samples.len() != f.dim {
        return Err(Error::IndexOutOfRange(format!(
            "samples cover {} adjoint indices, need {}",
            samples.len(),
            f.dim
        )));
    }
    if mu > 3 || nu > 3 {
        return Err(Error::IndexOutOfRange(format!("spacetime index ({mu},{nu})")));
    }
    let dim = f.dim;
    let mut values = Vec::with_capacity(dim);
    let mut pair_deviation: f64 = 0.0;
    for a in 0..dim {
        let mut full = c(0.0, 0.0);
        for b in 0..dim {
            for cc in 0..dim {
                full += f.get(a, b, cc) * samples[b][mu] * samples[cc][nu];
            }
        }
        let mut paired = c(0.0, 0.0);
        for b in 0..dim {
            for cc in b + 1..dim {
                paired += f.get(a, b, cc)
                    * (samples[b][mu] * samples[cc][nu] - samples[cc][mu] * samples[b][nu]);
            }
        }
        pair_deviation = pair_deviation.max((full - paired).norm());
        values.push(paired);
    }
    Ok(CommutatorTerm {
        values,
        pair_deviation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn su2_t3_is_halved_diagonal() {
        let g = su_generators(2).unwrap();
        let t3 = &g.matrices[2];
        assert!((t3.get(0, 0) - c(0.5, 0.0)).norm() < 1e-15);
        assert!((t3.get(1, 1) - c(-0.5, 0.0)).norm() < 1e-15);
        assert!(t3.get(0, 1).norm() < 1e-15);
    }

    #[test]
    fn generator_invariants_su2_su3() {
        for n in [2, 3] {
            let g = su_generators(n).unwrap();
            assert_eq!(g.dim, n * n - 1);
            assert!(
                g.invariant_deviation() < 1e-12,
                "SU({n}) deviation {}",
                g.invariant_deviation()
            );
        }
    }

    #[test]
    fn unsupported_rank_rejected() {
        assert!(matches!(su_generators(4), Err(Error::UnsupportedRank(4))));
    }

    #[test]
    fn structure_constant_anchors() {
        let f2 = structure_constants(&su_generators(2).unwrap()).unwrap();
        assert!((f2.get(0, 1, 2) - 1.0).abs() < 1e-12, "SU(2) f_123");
        let f3 = structure_constants(&su_generators(3).unwrap()).unwrap();
        assert!((f3.get(0, 1, 2) - 1.0).abs() < 1e-12, "SU(3) f_123");
        assert!((f3.get(0, 3, 6) - 0.5).abs() < 1e-12, "SU(3) f_147");
    }

    #[test]
    fn structure_constant_invariants() {
        for n in [2, 3] {
            let g = su_generators(n).unwrap();
            let f = structure_constants(&g).unwrap();
            assert_eq!(f.max_antisymmetry_deviation(), 0.0);
            for a in 0..g.dim {
                for b in 0..g.dim {
                    assert_eq!(f.get(a, a, b), 0.0);
                }
            }
            // reconstruction [t_b, t_c] = i f_abc t_a
            for b in 0..g.dim {
                for cc in 0..g.dim {
                    let comm = g.matrices[b].commutator(&g.matrices[cc]);
                    let mut recon = CMatrix::zeros(n);
                    for a in 0..g.dim {
                        recon = recon.add(&g.matrices[a].scale(c(0.0, f.get(a, b, cc))));
                    }
                    assert!(comm.max_abs_diff(&recon) < 1e-12);
                }
            }
        }
    }

    #[test]
    fn commutator_term_double_sum_matches_paired() {
        let f = structure_constants(&su_generators(2).unwrap()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let samples: Vec<[Complex64; 4]> = (0..3)
                .map(|_| {
                    let mut row = [c(0.0, 0.0); 4];
                    for v in &mut row {
                        *v = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                    }
                    row
                })
                .collect();
            for mu in 0..4 {
                for nu in 0..4 {
                    let term = commutator_term(&samples, &f, mu, nu).unwrap();
                    assert!(term.pair_deviation < 1e-12);
                }
            }
        }
    }

    #[test]
    fn commutator_term_vanishes_for_product_samples() {
        // A^mu_a = s_a E^mu with a shared four-vector E
        for n in [2usize, 3] {
            let f = structure_constants(&su_generators(n).unwrap()).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
            for _ in 0..25 {
                // dyadic components keep every complex product exact, so the
                // paired form cancels bit for bit
                let dyadic = |rng: &mut ChaCha8Rng| rng.gen_range(-64i32..=64) as f64 / 16.0;
                let e: [Complex64; 4] =
                    core::array::from_fn(|_| c(dyadic(&mut rng), dyadic(&mut rng)));
                let samples: Vec<[Complex64; 4]> = (0..f.dim)
                    .map(|_| {
                        let s = dyadic(&mut rng);
                        core::array::from_fn(|mu| e[mu] * s)
                    })
                    .collect();
                for mu in 0..4 {
                    for nu in 0..4 {
                        let term = commutator_term(&samples, &f, mu, nu).unwrap();
                        for v in term.values {
                            assert_eq!(v, c(0.0, 0.0), "must cancel exactly");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn zero_samples_give_zero() {
        let f = structure_constants(&su_generators(2).unwrap()).unwrap();
        let samples = vec![[c(0.0, 0.0); 4]; 3];
        let term = commutator_term(&samples, &f, 0, 1).unwrap();
        assert!(term.values.iter().all(|v| v.norm() == 0.0));
    }

    #[test]
    fn wrong_sample_count_rejected() {
        let f = structure_constants(&su_generators(2).unwrap()).unwrap();
        let samples = vec![[c(0.0, 0.0); 4]; 2];
        assert!(commutator_term(&samples, &f, 0, 1).is_err());
    }
}
