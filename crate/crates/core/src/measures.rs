//! Distinguishability measures for a pair of states, classical and quantum.
//!
//! The classical measures act on the outcome distributions of a fixed
//! measurement; the quantum ones are their optima over all measurements.
//! Logarithms are base 2 throughout, so information is in bits.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{herm_eig, matrix_function, psd_sqrt, CMatrix};
use crate::quantum::{povm_probabilities, DensityOperator, Povm};

/// Below this minimum eigenvalue a state counts as singular for the
/// overlap-optimal measurement construction.
pub const INVERTIBILITY_TOL: f64 = 1e-8;

/// Prior probabilities for the two hypotheses.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PriorPair {
    pi0: f64,
    pi1: f64,
}

impl PriorPair {
    pub fn new(pi0: f64, pi1: f64) -> Result<Self> {
        if pi0 < 0.0 || pi1 < 0.0 || (pi0 + pi1 - 1.0).abs() > 1e-12 {
            return Err(Error::BadPriors(pi0, pi1));
        }
        Ok(Self { pi0, pi1 })
    }

    pub fn equal() -> Self {
        Self { pi0: 0.5, pi1: 0.5 }
    }

    pub fn pi0(&self) -> f64 {
        self.pi0
    }

    pub fn pi1(&self) -> f64 {
        self.pi1
    }
}

/// Minimum-error discrimination result: the optimal error probability, the
/// operator Γ̂ = π₁ρ̂₁ − π₀ρ̂₀ that determines it, and the projective
/// measurement achieving it.
///
/// `optimal_povm` has two outcomes: element 0 is "guess state 0" (the
/// negative eigenspace of Γ̂), element 1 is "guess state 1" (the rest).
/// Eigenvectors with |eigenvalue| below 1e-12 go to the guess-1 projector;
/// the tie-break is arbitrary and does not affect the error value.
#[derive(Debug, Clone)]
pub struct HelstromResult {
    pub error_probability: f64,
    pub gamma: CMatrix,
    pub optimal_povm: Povm,
}

fn check_distribution(p: &[f64]) -> Result<()> {
    let mut sum = 0.0;
    for &x in p {
        if x < -1e-10 {
            return Err(Error::BadDistribution(format!("negative entry {x}")));
        }
        sum += x;
    }
    if (sum - 1.0).abs() > 1e-10 {
        return Err(Error::BadDistribution(format!("entries sum to {sum}")));
    }
    Ok(())
}

fn check_pair(p0: &[f64], p1: &[f64]) -> Result<()> {
    if p0.len() != p1.len() {
        return Err(Error::DimensionMismatch(format!(
            "distribution lengths {} and {} differ",
            p0.len(),
            p1.len()
        )));
    }
    check_distribution(p0)?;
    check_distribution(p1)
}

/// Statistical overlap B(p₀, p₁) = Σᵦ √(p₀(b) p₁(b)).
pub fn overlap_classical(p0: &[f64], p1: &[f64]) -> Result<f64> {
    check_pair(p0, p1)?;
    Ok(p0
        .iter()
        .zip(p1)
        .map(|(&a, &b)| (a.max(0.0) * b.max(0.0)).sqrt())
        .sum())
}

fn entropy_bits(p: &[f64]) -> f64 {
    -p.iter()
        .filter(|&&x| x > 0.0)
        .map(|&x| x * x.log2())
        .sum::<f64>()
}

/// Shannon mutual information I = H(p̄) − π₀H(p₀) − π₁H(p₁), in bits.
pub fn mutual_information(priors: &PriorPair, p0: &[f64], p1: &[f64]) -> Result<f64> {
    check_pair(p0, p1)?;
    let mix: Vec<f64> = p0
        .iter()
        .zip(p1)
        .map(|(&a, &b)| priors.pi0 * a + priors.pi1 * b)
        .collect();
    let info = entropy_bits(&mix) - priors.pi0 * entropy_bits(p0) - priors.pi1 * entropy_bits(p1);
    Ok(info.max(0.0))
}

/// Expected guessing error Σᵦ min(π₀p₀(b), π₁p₁(b)).
pub fn error_prob_classical(priors: &PriorPair, p0: &[f64], p1: &[f64]) -> Result<f64> {
    check_pair(p0, p1)?;
    Ok(p0
        .iter()
        .zip(p1)
        .map(|(&a, &b)| (priors.pi0 * a).min(priors.pi1 * b))
        .sum())
}

/// Bayes posterior (p(0|b), p(1|b)) for outcome `b`.
pub fn posterior(priors: &PriorPair, p0: &[f64], p1: &[f64], b: usize) -> Result<(f64, f64)> {
    check_pair(p0, p1)?;
    if b >= p0.len() {
        return Err(Error::InvalidInput(format!(
            "outcome index {b} out of range for {} outcomes",
            p0.len()
        )));
    }
    let w0 = priors.pi0 * p0[b];
    let w1 = priors.pi1 * p1[b];
    let total = w0 + w1;
    if total <= 0.0 {
        return Err(Error::ImpossibleOutcome);
    }
    Ok((w0 / total, w1 / total))
}

/// Kolmogorov variational distance K = ½ Σᵦ |π₁p₁(b) − π₀p₀(b)|.
///
/// Satisfies `error_prob_classical = ½ − K` identically.
pub fn kolmogorov_distance(priors: &PriorPair, p0: &[f64], p1: &[f64]) -> Result<f64> {
    check_pair(p0, p1)?;
    Ok(0.5
        * p0.iter()
            .zip(p1)
            .map(|(&a, &b)| (priors.pi1 * b - priors.pi0 * a).abs())
            .sum::<f64>())
}

/// Minimal statistical overlap over all measurements:
/// B(ρ̂₀, ρ̂₁) = tr √(ρ̂₁^½ ρ̂₀ ρ̂₁^½). The fidelity is its square.
///
/// When either state is pure the expression collapses to
/// B = √⟨ψ|ρ̂|ψ⟩, which avoids the √ε noise the general spectral route
/// picks up from zero eigenvalues.
pub fn min_overlap(rho0: &DensityOperator, rho1: &DensityOperator) -> Result<f64> {
    if rho0.dim() != rho1.dim() {
        return Err(Error::DimensionMismatch(format!(
            "state dims {} and {} differ",
            rho0.dim(),
            rho1.dim()
        )));
    }
    for (pure, other) in [(rho1, rho0), (rho0, rho1)] {
        if (pure.purity() - 1.0).abs() < 1e-12 {
            let eig = herm_eig(pure.matrix())?;
            let psi = eig.vector(eig.values.len() - 1);
            let f = crate::linalg::vec_inner(&psi, &other.matrix().apply(&psi)).re;
            return Ok(f.clamp(0.0, 1.0 + 1e-9).sqrt());
        }
    }
    let root1 = psd_sqrt(rho1.matrix())?;
    let inner = (&(&root1 * rho0.matrix()) * &root1).hermitian_part();
    let b: f64 = herm_eig(&inner)?
        .values
        .iter()
        .map(|&x| x.max(0.0).sqrt())
        .sum();
    Ok(b.min(1.0 + 1e-9))
}

/// Uhlmann fidelity F = B².
pub fn fidelity(rho0: &DensityOperator, rho1: &DensityOperator) -> Result<f64> {
    let b = min_overlap(rho0, rho1)?;
    Ok((b * b).min(1.0))
}

/// Minimum-error ("Helstrom") discrimination of two states:
/// Pₑ = ½ − ½ tr|π₁ρ̂₁ − π₀ρ̂₀|, achieved by projectors onto the sign
/// eigenspaces of Γ̂.
pub fn helstrom(
    priors: &PriorPair,
    rho0: &DensityOperator,
    rho1: &DensityOperator,
) -> Result<HelstromResult> {
    if rho0.dim() != rho1.dim() {
        return Err(Error::DimensionMismatch(format!(
            "state dims {} and {} differ",
            rho0.dim(),
            rho1.dim()
        )));
    }
    let gamma = (&rho1.matrix().scaled_re(priors.pi1) - &rho0.matrix().scaled_re(priors.pi0))
        .hermitian_part();
    let eig = herm_eig(&gamma)?;
    let tn: f64 = eig.values.iter().map(|x| x.abs()).sum();
    let error_probability = (0.5 - 0.5 * tn).clamp(0.0, 0.5 + 1e-12);

    let n = gamma.rows();
    let mut guess0 = CMatrix::zeros(n, n);
    let mut guess1 = CMatrix::zeros(n, n);
    for (k, &lambda) in eig.values.iter().enumerate() {
        let v = eig.vector(k);
        let proj = CMatrix::outer(&v, &v);
        if lambda < -1e-12 {
            guess0 = &guess0 + &proj;
        } else {
            guess1 = &guess1 + &proj;
        }
    }
    let optimal_povm = Povm::new(vec![guess0.hermitian_part(), guess1.hermitian_part()])?;
    Ok(HelstromResult {
        error_probability,
        gamma,
        optimal_povm,
    })
}

/// Von Neumann entropy S(ρ̂) = −tr(ρ̂ log₂ ρ̂) in bits.
pub fn von_neumann_entropy(rho: &DensityOperator) -> f64 {
    let eig = herm_eig(rho.matrix()).expect("density operators are Hermitian");
    let s: f64 = -eig
        .values
        .iter()
        .filter(|&&x| x > 1e-15)
        .map(|&x| x * x.log2())
        .sum::<f64>();
    s.max(0.0)
}

/// Holevo bound S(ρ̄) − π₀S(ρ̂₀) − π₁S(ρ̂₁) on the accessible information,
/// in bits. Achieved if and only if the states commute.
pub fn holevo_bound(
    priors: &PriorPair,
    rho0: &DensityOperator,
    rho1: &DensityOperator,
) -> Result<f64> {
    let mix = DensityOperator::mix(priors.pi0, rho0, priors.pi1, rho1)?;
    let bound = von_neumann_entropy(&mix)
        - priors.pi0 * von_neumann_entropy(rho0)
        - priors.pi1 * von_neumann_entropy(rho1);
    Ok(bound.max(0.0))
}

/// The Hermitian operator ρ̂₁^(−½) √(ρ̂₁^½ ρ̂₀ ρ̂₁^½) ρ̂₁^(−½) whose eigenbasis
/// measurement minimizes the statistical overlap. Both states must be
/// invertible; the construction is undefined otherwise.
pub fn overlap_optimal_measurement(
    rho0: &DensityOperator,
    rho1: &DensityOperator,
) -> Result<CMatrix> {
    if rho0.dim() != rho1.dim() {
        return Err(Error::DimensionMismatch(format!(
            "state dims {} and {} differ",
            rho0.dim(),
            rho1.dim()
        )));
    }
    for rho in [rho0, rho1] {
        let min = herm_eig(rho.matrix())?.values[0];
        if min <= INVERTIBILITY_TOL {
            return Err(Error::SingularState(min));
        }
    }
    let root1 = psd_sqrt(rho1.matrix())?;
    let inv_root1 = matrix_function(rho1.matrix(), |x| 1.0 / x.max(1e-300).sqrt())?;
    let inner = psd_sqrt(&(&(&root1 * rho0.matrix()) * &root1).hermitian_part())?;
    Ok((&(&inv_root1 * &inner) * &inv_root1).hermitian_part())
}

/// Outcome distributions of one POVM on both states.
pub fn measurement_pair(
    povm: &Povm,
    rho0: &DensityOperator,
    rho1: &DensityOperator,
) -> Result<(Vec<f64>, Vec<f64>)> {
    Ok((povm_probabilities(rho0, povm)?, povm_probabilities(rho1, povm)?))
}

/// Best guessing error over a family of projective qubit measurements whose
/// axes sweep the Bloch sphere on a `n_polar × n_azimuthal` grid. A brute
/// force counterpart to [`helstrom`] for 2-dimensional states.
pub fn qubit_projective_brute_force(
    priors: &PriorPair,
    rho0: &DensityOperator,
    rho1: &DensityOperator,
    n_polar: usize,
    n_azimuthal: usize,
) -> Result<f64> {
    if rho0.dim() != 2 || rho1.dim() != 2 {
        return Err(Error::DimensionMismatch(
            "brute force search is implemented for qubits".into(),
        ));
    }
    let mut best = f64::INFINITY;
    for i in 0..n_polar {
        // Half-open polar range: the t = π/2 axis duplicates t = 0 outcomes.
        let t = 0.5 * std::f64::consts::PI * i as f64 / n_polar as f64;
        for j in 0..n_azimuthal {
            let phase = 2.0 * std::f64::consts::PI * j as f64 / n_azimuthal as f64;
            let v = [
                Complex64::new(t.cos(), 0.0),
                Complex64::from_polar(t.sin(), phase),
            ];
            let proj = CMatrix::outer(&v, &v);
            let comp = &CMatrix::identity(2) - &proj;
            let povm = Povm::new(vec![proj, comp])?;
            let (p0, p1) = measurement_pair(&povm, rho0, rho1)?;
            best = best.min(error_prob_classical(priors, &p0, &p1)?);
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::PureState;
    use crate::sampling;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const H2_09: f64 = 0.468_995_593_589_281_2; // binary entropy of 0.9

    fn zero_plus_pair() -> (DensityOperator, DensityOperator) {
        let zero = PureState::basis(2, 0).projector();
        let plus = PureState::real_qubit(std::f64::consts::FRAC_PI_4).projector();
        (zero, plus)
    }

    #[test]
    fn overlap_classical_examples() {
        let p = vec![0.25, 0.75];
        assert!((overlap_classical(&p, &p).unwrap() - 1.0).abs() < 1e-12);
        assert!(overlap_classical(&[1.0, 0.0], &[0.0, 1.0]).unwrap().abs() < 1e-12);
        let b = overlap_classical(&[1.0, 0.0], &[0.5, 0.5]).unwrap();
        assert!((b - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
        assert!(overlap_classical(&[1.0], &[0.5, 0.5]).is_err());
    }

    #[test]
    fn mutual_information_examples() {
        let eq = PriorPair::equal();
        let p = vec![0.3, 0.7];
        assert!(mutual_information(&eq, &p, &p).unwrap().abs() < 1e-12);
        let one = mutual_information(&eq, &[1.0, 0.0], &[0.0, 1.0]).unwrap();
        assert!((one - 1.0).abs() < 1e-12);
        let skew = mutual_information(&eq, &[0.9, 0.1], &[0.1, 0.9]).unwrap();
        assert!((skew - (1.0 - H2_09)).abs() < 1e-12);
    }

    #[test]
    fn error_prob_examples() {
        let eq = PriorPair::equal();
        let p = vec![0.5, 0.5];
        assert!((error_prob_classical(&eq, &p, &p).unwrap() - 0.5).abs() < 1e-12);
        assert!(error_prob_classical(&eq, &[1.0, 0.0], &[0.0, 1.0]).unwrap() < 1e-12);
        let e = error_prob_classical(&eq, &[0.9, 0.1], &[0.1, 0.9]).unwrap();
        assert!((e - 0.1).abs() < 1e-12);
    }

    #[test]
    fn posterior_examples() {
        let eq = PriorPair::equal();
        let (q0, q1) = posterior(&eq, &[0.4, 0.6], &[0.4, 0.6], 0).unwrap();
        assert!((q0 - 0.5).abs() < 1e-12 && (q1 - 0.5).abs() < 1e-12);

        let (q0, q1) = posterior(&eq, &[1.0, 0.0], &[0.0, 1.0], 0).unwrap();
        assert!((q0 - 1.0).abs() < 1e-12 && q1.abs() < 1e-12);

        let skew = PriorPair::new(0.75, 0.25).unwrap();
        let (q0, q1) = posterior(&skew, &[0.2, 0.8], &[0.6, 0.4], 0).unwrap();
        assert!((q0 - 0.5).abs() < 1e-12 && (q1 - 0.5).abs() < 1e-12);

        assert!(matches!(
            posterior(&eq, &[0.0, 1.0], &[0.0, 1.0], 0),
            Err(Error::ImpossibleOutcome)
        ));
    }

    #[test]
    fn kolmogorov_examples() {
        let eq = PriorPair::equal();
        let p = vec![0.5, 0.5];
        assert!(kolmogorov_distance(&eq, &p, &p).unwrap().abs() < 1e-12);
        let k = kolmogorov_distance(&eq, &[1.0, 0.0], &[0.0, 1.0]).unwrap();
        assert!((k - 0.5).abs() < 1e-12);
        let k = kolmogorov_distance(&eq, &[0.9, 0.1], &[0.1, 0.9]).unwrap();
        assert!((k - 0.4).abs() < 1e-12);
    }

    #[test]
    fn error_plus_kolmogorov_is_half() {
        let eq = PriorPair::equal();
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..50 {
            let p0 = sampling::random_distribution(4, &mut rng);
            let p1 = sampling::random_distribution(4, &mut rng);
            let e = error_prob_classical(&eq, &p0, &p1).unwrap();
            let k = kolmogorov_distance(&eq, &p0, &p1).unwrap();
            assert!((e + k - 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn min_overlap_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        let rho = sampling::random_density(3, &mut rng);
        assert!((min_overlap(&rho, &rho).unwrap() - 1.0).abs() < 1e-9);

        let zero = PureState::basis(2, 0).projector();
        let one = PureState::basis(2, 1).projector();
        assert!(min_overlap(&zero, &one).unwrap().abs() < 1e-9);

        let (z, p) = zero_plus_pair();
        let b = min_overlap(&z, &p).unwrap();
        assert!((b - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-9);
        assert!((fidelity(&z, &p).unwrap() - 0.5).abs() < 1e-9);
    }

    #[test]
    fn min_overlap_is_symmetric() {
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        for _ in 0..20 {
            let a = sampling::random_density(3, &mut rng);
            let b = sampling::random_density(3, &mut rng);
            let d = (min_overlap(&a, &b).unwrap() - min_overlap(&b, &a).unwrap()).abs();
            assert!(d < 1e-9);
        }
    }

    #[test]
    fn helstrom_examples() {
        let eq = PriorPair::equal();
        let mut rng = ChaCha8Rng::seed_from_u64(34);
        let rho = sampling::random_density(2, &mut rng);
        let same = helstrom(&eq, &rho, &rho).unwrap();
        assert!((same.error_probability - 0.5).abs() < 1e-12);

        let zero = PureState::basis(2, 0).projector();
        let one = PureState::basis(2, 1).projector();
        assert!(helstrom(&eq, &zero, &one).unwrap().error_probability < 1e-12);

        let (z, p) = zero_plus_pair();
        let res = helstrom(&eq, &z, &p).unwrap();
        let expect = 0.5 - std::f64::consts::SQRT_2 / 4.0;
        assert!((res.error_probability - expect).abs() < 1e-12);
    }

    #[test]
    fn helstrom_povm_achieves_the_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(35);
        for _ in 0..20 {
            let rho0 = sampling::random_density(3, &mut rng);
            let rho1 = sampling::random_density(3, &mut rng);
            let priors = PriorPair::new(0.3, 0.7).unwrap();
            let res = helstrom(&priors, &rho0, &rho1).unwrap();
            let (p0, p1) = measurement_pair(&res.optimal_povm, &rho0, &rho1).unwrap();
            let achieved = error_prob_classical(&priors, &p0, &p1).unwrap();
            assert!((achieved - res.error_probability).abs() < 1e-10);
        }
    }

    #[test]
    fn helstrom_beats_brute_force() {
        let eq = PriorPair::equal();
        let mut rng = ChaCha8Rng::seed_from_u64(36);
        for _ in 0..5 {
            let rho0 = sampling::random_density(2, &mut rng);
            let rho1 = sampling::random_density(2, &mut rng);
            let opt = helstrom(&eq, &rho0, &rho1).unwrap().error_probability;
            let brute = qubit_projective_brute_force(&eq, &rho0, &rho1, 36, 20).unwrap();
            assert!(brute >= opt - 1e-6);
        }
    }

    #[test]
    fn entropy_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        let pure = sampling::random_pure(3, &mut rng).projector();
        assert!(von_neumann_entropy(&pure).abs() < 1e-9);
        assert!((von_neumann_entropy(&DensityOperator::maximally_mixed(2)) - 1.0).abs() < 1e-12);
        let rho = DensityOperator::new(CMatrix::diag(&[0.9, 0.1])).unwrap();
        assert!((von_neumann_entropy(&rho) - H2_09).abs() < 1e-12);
    }

    #[test]
    fn holevo_examples() {
        let eq = PriorPair::equal();
        let mut rng = ChaCha8Rng::seed_from_u64(38);
        let rho = sampling::random_density(2, &mut rng);
        assert!(holevo_bound(&eq, &rho, &rho).unwrap().abs() < 1e-10);

        let zero = PureState::basis(2, 0).projector();
        let one = PureState::basis(2, 1).projector();
        assert!((holevo_bound(&eq, &zero, &one).unwrap() - 1.0).abs() < 1e-10);

        // Commuting case: the bound equals the mutual information of the
        // common-eigenbasis measurement.
        let a = DensityOperator::new(CMatrix::diag(&[0.9, 0.1])).unwrap();
        let b = DensityOperator::new(CMatrix::diag(&[0.1, 0.9])).unwrap();
        let bound = holevo_bound(&eq, &a, &b).unwrap();
        assert!((bound - (1.0 - H2_09)).abs() < 1e-10);
        let basis = Povm::projective(&CMatrix::identity(2)).unwrap();
        let (p0, p1) = measurement_pair(&basis, &a, &b).unwrap();
        let info = mutual_information(&eq, &p0, &p1).unwrap();
        assert!((bound - info).abs() < 1e-10);
    }

    #[test]
    fn overlap_measurement_identity_for_equal_states() {
        let mut rng = ChaCha8Rng::seed_from_u64(39);
        let rho = sampling::random_density(3, &mut rng);
        let m = overlap_optimal_measurement(&rho, &rho).unwrap();
        assert!(m.max_abs_diff(&CMatrix::identity(3)) < 1e-8);
    }

    #[test]
    fn overlap_measurement_diagonal_for_commuting_states() {
        let a = DensityOperator::new(CMatrix::diag(&[0.9, 0.1])).unwrap();
        let b = DensityOperator::new(CMatrix::diag(&[0.2, 0.8])).unwrap();
        let m = overlap_optimal_measurement(&a, &b).unwrap();
        assert!(m.get(0, 1).norm() < 1e-10 && m.get(1, 0).norm() < 1e-10);
    }

    #[test]
    fn overlap_measurement_achieves_min_overlap() {
        let mut rng = ChaCha8Rng::seed_from_u64(40);
        for _ in 0..10 {
            let rho0 = sampling::random_density(2, &mut rng);
            let rho1 = sampling::random_density(2, &mut rng);
            let m = overlap_optimal_measurement(&rho0, &rho1).unwrap();
            let basis = herm_eig(&m).unwrap().vectors;
            let povm = Povm::projective(&basis).unwrap();
            let (p0, p1) = measurement_pair(&povm, &rho0, &rho1).unwrap();
            let achieved = overlap_classical(&p0, &p1).unwrap();
            let optimal = min_overlap(&rho0, &rho1).unwrap();
            assert!((achieved - optimal).abs() < 1e-8);

            // Grid search over projective measurements never does better.
            let mut best = f64::INFINITY;
            for i in 0..60 {
                let t = 0.5 * std::f64::consts::PI * i as f64 / 60.0;
                for j in 0..30 {
                    let phase = 2.0 * std::f64::consts::PI * j as f64 / 30.0;
                    let v = [
                        Complex64::new(t.cos(), 0.0),
                        Complex64::from_polar(t.sin(), phase),
                    ];
                    let proj = CMatrix::outer(&v, &v);
                    let comp = &CMatrix::identity(2) - &proj;
                    let grid_povm = Povm::new(vec![proj, comp]).unwrap();
                    let (q0, q1) = measurement_pair(&grid_povm, &rho0, &rho1).unwrap();
                    best = best.min(overlap_classical(&q0, &q1).unwrap());
                }
            }
            assert!(best >= optimal - 1e-6);
        }
    }

    #[test]
    fn overlap_measurement_rejects_singular_states() {
        let pure = PureState::basis(2, 0).projector();
        let mixed = DensityOperator::maximally_mixed(2);
        assert!(matches!(
            overlap_optimal_measurement(&pure, &mixed),
            Err(Error::SingularState(_))
        ));
    }

    #[test]
    fn data_processing_inequalities() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let eq = PriorPair::equal();
        for _ in 0..30 {
            let rho0 = sampling::random_density(3, &mut rng);
            let rho1 = sampling::random_density(3, &mut rng);
            let povm = sampling::random_povm(3, 4, &mut rng);
            let (p0, p1) = measurement_pair(&povm, &rho0, &rho1).unwrap();

            let b_cl = overlap_classical(&p0, &p1).unwrap();
            assert!(b_cl >= min_overlap(&rho0, &rho1).unwrap() - 1e-9);

            let e_cl = error_prob_classical(&eq, &p0, &p1).unwrap();
            assert!(e_cl >= helstrom(&eq, &rho0, &rho1).unwrap().error_probability - 1e-9);

            let info = mutual_information(&eq, &p0, &p1).unwrap();
            assert!(info <= holevo_bound(&eq, &rho0, &rho1).unwrap() + 1e-9);
        }
    }
}
