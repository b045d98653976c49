//! Seeded random operators for the verification suites and tests.
//!
//! Everything takes an explicit `Rng` so callers stay reproducible; nothing
//! here touches a global source of randomness.

use num_complex::Complex64;
use rand::Rng;

use crate::linalg::{vec_inner, vec_norm, CMatrix};
use crate::quantum::{DensityOperator, Povm, PureState};

/// Standard complex Gaussian entry.
fn gaussian(rng: &mut impl Rng) -> Complex64 {
    // Box-Muller; two uniforms per component.
    let (u1, u2): (f64, f64) = (rng.gen::<f64>().max(1e-300), rng.gen());
    let (u3, u4): (f64, f64) = (rng.gen::<f64>().max(1e-300), rng.gen());
    let re = (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos();
    let im = (-2.0 * u3.ln()).sqrt() * (2.0 * std::f64::consts::PI * u4).cos();
    Complex64::new(re, im)
}

/// Matrix with independent standard complex Gaussian entries.
pub fn random_ginibre(n: usize, rng: &mut impl Rng) -> CMatrix {
    CMatrix::from_fn(n, n, |_, _| gaussian(rng))
}

/// Random Hermitian matrix with unit-scale entries.
pub fn random_hermitian(n: usize, rng: &mut impl Rng) -> CMatrix {
    let g = random_ginibre(n, rng);
    (&g + &g.adjoint()).scaled_re(0.5)
}

/// Random positive semidefinite matrix GG†/n.
pub fn random_psd(n: usize, rng: &mut impl Rng) -> CMatrix {
    let g = random_ginibre(n, rng);
    (&g * &g.adjoint()).scaled_re(1.0 / n as f64).hermitian_part()
}

/// Haar-like random unitary: Gram-Schmidt on a Ginibre matrix.
pub fn random_unitary(n: usize, rng: &mut impl Rng) -> CMatrix {
    loop {
        let g = random_ginibre(n, rng);
        let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(n);
        let mut ok = true;
        for j in 0..n {
            let mut v: Vec<Complex64> = (0..n).map(|i| g.get(i, j)).collect();
            for u in &cols {
                let overlap = vec_inner(u, &v);
                for i in 0..n {
                    v[i] -= overlap * u[i];
                }
            }
            let norm = vec_norm(&v);
            if norm < 1e-8 {
                ok = false;
                break;
            }
            for z in &mut v {
                *z /= norm;
            }
            cols.push(v);
        }
        if ok {
            return CMatrix::from_fn(n, n, |i, j| cols[j][i]);
        }
    }
}

/// Random pure state with Haar-like direction.
pub fn random_pure(n: usize, rng: &mut impl Rng) -> PureState {
    loop {
        let v: Vec<Complex64> = (0..n).map(|_| gaussian(rng)).collect();
        let norm = vec_norm(&v);
        if norm > 1e-8 {
            return PureState::new(v.into_iter().map(|z| z / norm).collect())
                .expect("normalized by construction");
        }
    }
}

/// Random full-rank density operator GG†/tr(GG†).
pub fn random_density(n: usize, rng: &mut impl Rng) -> DensityOperator {
    let g = random_ginibre(n, rng);
    let p = (&g * &g.adjoint()).hermitian_part();
    let tr = p.trace().re;
    DensityOperator::new(p.scaled_re(1.0 / tr)).expect("valid by construction")
}

/// Random probability vector of the given length.
pub fn random_distribution(n: usize, rng: &mut impl Rng) -> Vec<f64> {
    let mut p: Vec<f64> = (0..n).map(|_| rng.gen::<f64>().max(1e-12)).collect();
    let sum: f64 = p.iter().sum();
    for x in &mut p {
        *x /= sum;
    }
    p
}

/// Seeded commuting pair, for callers that hold a seed rather than an Rng.
pub fn seeded_commuting_pair(n: usize, seed: u64) -> (DensityOperator, DensityOperator) {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    random_commuting_pair(n, &mut rng)
}

/// Pair of commuting density operators: random spectra in a shared random
/// eigenbasis.
pub fn random_commuting_pair(n: usize, rng: &mut impl Rng) -> (DensityOperator, DensityOperator) {
    let u = random_unitary(n, rng);
    let make = |spec: Vec<f64>| {
        let d = CMatrix::diag(&spec);
        let m = (&(&u * &d) * &u.adjoint()).hermitian_part();
        DensityOperator::new(m).expect("valid by construction")
    };
    let s0 = random_distribution(n, rng);
    let s1 = random_distribution(n, rng);
    (make(s0), make(s1))
}

/// Random POVM with `k` outcomes: Gram normalization of random PSD parts.
pub fn random_povm(dim: usize, k: usize, rng: &mut impl Rng) -> Povm {
    assert!(k >= 1);
    let parts: Vec<CMatrix> = (0..k).map(|_| random_psd(dim, rng)).collect();
    let mut total = CMatrix::zeros(dim, dim);
    for p in &parts {
        total = &total + p;
    }
    let eig = crate::linalg::herm_eig(&total).expect("sum of PSD parts is Hermitian");
    let inv_sqrt = eig.apply_fn(|x| if x > 1e-12 { 1.0 / x.sqrt() } else { 0.0 });
    let elements: Vec<CMatrix> = parts
        .iter()
        .map(|p| (&(&inv_sqrt * p) * &inv_sqrt).hermitian_part())
        .collect();
    Povm::new(elements).expect("normalized by construction")
}
