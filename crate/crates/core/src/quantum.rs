//! Quantum states, measurements, and channels.
//!
//! Validation is eager: the constructors reject anything that violates the
//! defining invariants instead of normalizing silently. The one sanctioned
//! repair is clamping density-operator eigenvalues in `[-1e-10, 0)` to zero,
//! which absorbs eigensolver noise without hiding genuine violations.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{
    herm_eig, partial_trace, tensor_product, vec_norm, CMatrix, Subsystem, HERMITICITY_TOL,
    PSD_TOL,
};

/// Unit-trace tolerance for density operators and derived checks.
pub const TRACE_TOL: f64 = 1e-10;

/// Probe eigenvalues at or below this weight are dropped when building Kraus
/// operators; they would only contribute spurious near-zero operators.
pub const PROBE_WEIGHT_CUTOFF: f64 = 1e-12;

/// Measurement probabilities in `[-1e-12, 0)` are clamped to zero.
pub const PROBABILITY_FLOOR: f64 = -1e-12;

/// Hermitian, positive semidefinite, unit-trace operator.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityOperator {
    matrix: CMatrix,
}

impl DensityOperator {
    /// Validate and wrap a matrix as a quantum state.
    pub fn new(matrix: CMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "density operator must be square, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        let herm = matrix.hermiticity_error();
        if herm > HERMITICITY_TOL {
            return Err(Error::NotHermitian(herm));
        }
        let trace_dev = (matrix.trace().re - 1.0).abs().max(matrix.trace().im.abs());
        if trace_dev > TRACE_TOL {
            return Err(Error::NotUnitTrace(trace_dev));
        }
        let eig = herm_eig(&matrix)?;
        let min = eig.values[0];
        if min < -PSD_TOL {
            return Err(Error::NotPsd(min));
        }
        if min < 0.0 {
            // Sanctioned repair: clamp roundoff negatives, rescale the trace.
            let clamped = eig.apply_fn(|x| x.max(0.0));
            let tr = clamped.trace().re;
            return Ok(Self {
                matrix: clamped.scaled_re(1.0 / tr),
            });
        }
        Ok(Self { matrix })
    }

    pub fn from_pure(psi: &PureState) -> Self {
        Self {
            matrix: CMatrix::outer(psi.amplitudes(), psi.amplitudes()),
        }
    }

    /// Maximally mixed state I/d.
    pub fn maximally_mixed(dim: usize) -> Self {
        Self {
            matrix: CMatrix::identity(dim).scaled_re(1.0 / dim as f64),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> CMatrix {
        self.matrix
    }

    /// tr(ρ²).
    pub fn purity(&self) -> f64 {
        (&self.matrix * &self.matrix).trace().re
    }

    /// Convex combination of two states of equal dimension.
    pub fn mix(w0: f64, rho0: &Self, w1: f64, rho1: &Self) -> Result<Self> {
        if rho0.dim() != rho1.dim() {
            return Err(Error::DimensionMismatch(format!(
                "cannot mix states of dims {} and {}",
                rho0.dim(),
                rho1.dim()
            )));
        }
        Self::new(&rho0.matrix.scaled_re(w0) + &rho1.matrix.scaled_re(w1))
    }
}

/// Normalized state vector.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amplitudes: Vec<Complex64>,
}

impl PureState {
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        let dev = (vec_norm(&amplitudes) - 1.0).abs();
        if dev > 1e-12 {
            return Err(Error::NotNormalized(dev));
        }
        Ok(Self { amplitudes })
    }

    /// Computational basis state |k⟩.
    pub fn basis(dim: usize, k: usize) -> Self {
        assert!(k < dim);
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
        amplitudes[k] = Complex64::new(1.0, 0.0);
        Self { amplitudes }
    }

    /// Real qubit state cos t |0⟩ + sin t |1⟩.
    pub fn real_qubit(t: f64) -> Self {
        Self {
            amplitudes: vec![Complex64::new(t.cos(), 0.0), Complex64::new(t.sin(), 0.0)],
        }
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn projector(&self) -> DensityOperator {
        DensityOperator::from_pure(self)
    }

    /// |self⟩ ⊗ |other⟩ with the A-major index convention.
    pub fn tensor(&self, other: &PureState) -> PureState {
        let mut amplitudes = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.amplitudes {
            for b in &other.amplitudes {
                amplitudes.push(a * b);
            }
        }
        PureState { amplitudes }
    }
}

/// Positive operator-valued measure: PSD elements summing to identity.
#[derive(Debug, Clone)]
pub struct Povm {
    elements: Vec<CMatrix>,
}

impl Povm {
    pub fn new(elements: Vec<CMatrix>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::InvalidInput("POVM needs at least one element".into()));
        }
        let dim = elements[0].rows();
        let mut sum = CMatrix::zeros(dim, dim);
        for e in &elements {
            if !e.is_square() || e.rows() != dim {
                return Err(Error::DimensionMismatch(
                    "POVM elements must share one square dimension".into(),
                ));
            }
            let herm = e.hermiticity_error();
            if herm > HERMITICITY_TOL {
                return Err(Error::NotHermitian(herm));
            }
            let min = herm_eig(e)?.values[0];
            if min < -PSD_TOL {
                return Err(Error::NotPsd(min));
            }
            sum = &sum + e;
        }
        let dev = sum.max_abs_diff(&CMatrix::identity(dim));
        if dev > TRACE_TOL {
            return Err(Error::IncompletePovm(dev));
        }
        Ok(Self { elements })
    }

    /// Projective measurement onto the columns of a unitary.
    pub fn projective(basis: &CMatrix) -> Result<Self> {
        let dev = basis.unitarity_error();
        if dev > TRACE_TOL {
            return Err(Error::NotUnitary(dev));
        }
        let n = basis.rows();
        let elements = (0..n)
            .map(|k| {
                let col: Vec<Complex64> = (0..n).map(|i| basis.get(i, k)).collect();
                CMatrix::outer(&col, &col)
            })
            .collect();
        Self::new(elements)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.elements[0].rows()
    }

    pub fn elements(&self) -> &[CMatrix] {
        &self.elements
    }
}

/// Nonselective operation in Kraus form: ρ ↦ Σ AℓρAℓ† with Σ Aℓ†Aℓ = I.
#[derive(Debug, Clone)]
pub struct KrausChannel {
    operators: Vec<CMatrix>,
}

impl KrausChannel {
    pub fn new(operators: Vec<CMatrix>) -> Result<Self> {
        if operators.is_empty() {
            return Err(Error::InvalidInput("channel needs at least one Kraus operator".into()));
        }
        let (rows, cols) = (operators[0].rows(), operators[0].cols());
        let mut sum = CMatrix::zeros(cols, cols);
        for a in &operators {
            if a.rows() != rows || a.cols() != cols {
                return Err(Error::DimensionMismatch(
                    "Kraus operators must share one shape".into(),
                ));
            }
            sum = &sum + &(&a.adjoint() * a);
        }
        let dev = sum.max_abs_diff(&CMatrix::identity(cols));
        if dev > TRACE_TOL {
            return Err(Error::BrokenChannel(dev));
        }
        Ok(Self { operators })
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            operators: vec![CMatrix::identity(dim)],
        }
    }

    pub fn operators(&self) -> &[CMatrix] {
        &self.operators
    }

    pub fn dim_in(&self) -> usize {
        self.operators[0].cols()
    }

    pub fn dim_out(&self) -> usize {
        self.operators[0].rows()
    }
}

/// Apply a channel: Σ AℓρAℓ†. The output is validated; a violation there
/// means the channel itself was broken.
pub fn apply_channel(ch: &KrausChannel, rho: &DensityOperator) -> Result<DensityOperator> {
    if ch.dim_in() != rho.dim() {
        return Err(Error::DimensionMismatch(format!(
            "channel input dim {} does not match state dim {}",
            ch.dim_in(),
            rho.dim()
        )));
    }
    let mut out = CMatrix::zeros(ch.dim_out(), ch.dim_out());
    for a in ch.operators() {
        out = &out + &(&(a * rho.matrix()) * &a.adjoint());
    }
    DensityOperator::new(out.hermitian_part())
}

/// Reduced channel on A induced by a joint unitary and a probe state:
/// Kraus operators √σⱼ ⟨Eᵢ|U|Eⱼ⟩ over the probe eigenbasis, with zero-weight
/// probe eigenvectors dropped.
pub fn channel_from_unitary(u: &CMatrix, probe: &DensityOperator) -> Result<KrausChannel> {
    let dim_e = probe.dim();
    if !u.is_square() || u.rows() % dim_e != 0 {
        return Err(Error::DimensionMismatch(format!(
            "unitary dim {} is not a multiple of probe dim {}",
            u.rows(),
            dim_e
        )));
    }
    let dev = u.unitarity_error();
    if dev > TRACE_TOL {
        return Err(Error::NotUnitary(dev));
    }
    let dim_a = u.rows() / dim_e;
    let eig = herm_eig(probe.matrix())?;

    let mut operators = Vec::new();
    for j in 0..dim_e {
        let sigma = eig.values[j];
        if sigma <= PROBE_WEIGHT_CUTOFF {
            continue;
        }
        let w = sigma.sqrt();
        let ej = eig.vector(j);
        for i in 0..dim_e {
            let ei = eig.vector(i);
            // ⟨Eᵢ|U|Eⱼ⟩ acts on A: contract the probe indices on both sides.
            let block = CMatrix::from_fn(dim_a, dim_a, |a, a2| {
                let mut acc = Complex64::new(0.0, 0.0);
                for e in 0..dim_e {
                    for e2 in 0..dim_e {
                        acc += ei[e].conj() * u.get(a * dim_e + e, a2 * dim_e + e2) * ej[e2];
                    }
                }
                acc * w
            });
            // Identically-zero blocks (e.g. unreachable probe outputs under
            // the identity interaction) contribute nothing; keep them out.
            if block.max_abs() > 1e-13 {
                operators.push(block);
            }
        }
    }
    KrausChannel::new(operators)
}

/// Outcome probabilities p(b) = tr(ρ Êᵦ), clamped at the probability floor.
pub fn povm_probabilities(rho: &DensityOperator, povm: &Povm) -> Result<Vec<f64>> {
    if rho.dim() != povm.dim() {
        return Err(Error::DimensionMismatch(format!(
            "state dim {} does not match POVM dim {}",
            rho.dim(),
            povm.dim()
        )));
    }
    Ok(povm
        .elements()
        .iter()
        .map(|e| {
            let p = (rho.matrix() * e).trace().re;
            debug_assert!(p > PROBABILITY_FLOOR - 1e-9, "probability {p} far below floor");
            p.max(0.0)
        })
        .collect())
}

/// POVM realized by an explicit ancilla model:
/// Êᵦ = tr_C((I_E ⊗ σ_c) V̂† (I_E ⊗ Π̂ᵦ) V̂).
///
/// `v` is a unitary on E⊗C, `ancilla` the ancilla's initial state, and
/// `projectors` an orthogonal, complete set on the ancilla space.
pub fn povm_from_ancilla_model(
    v: &CMatrix,
    ancilla: &DensityOperator,
    projectors: &[CMatrix],
) -> Result<Povm> {
    let dim_c = ancilla.dim();
    if !v.is_square() || v.rows() % dim_c != 0 {
        return Err(Error::DimensionMismatch(format!(
            "interaction dim {} is not a multiple of ancilla dim {}",
            v.rows(),
            dim_c
        )));
    }
    let dim_e = v.rows() / dim_c;
    let dev = v.unitarity_error();
    if dev > TRACE_TOL {
        return Err(Error::NotUnitary(dev));
    }

    // Orthogonality and completeness of the ancilla projectors.
    let mut sum = CMatrix::zeros(dim_c, dim_c);
    let mut worst = 0.0f64;
    for (a, pa) in projectors.iter().enumerate() {
        if !pa.is_square() || pa.rows() != dim_c {
            return Err(Error::DimensionMismatch(
                "projectors must be square on the ancilla space".into(),
            ));
        }
        for (b, pb) in projectors.iter().enumerate() {
            let prod = pa * pb;
            let expect = if a == b { pa.clone() } else { CMatrix::zeros(dim_c, dim_c) };
            worst = worst.max(prod.max_abs_diff(&expect));
        }
        sum = &sum + pa;
    }
    worst = worst.max(sum.max_abs_diff(&CMatrix::identity(dim_c)));
    if worst > TRACE_TOL {
        return Err(Error::BadProjectors(worst));
    }

    let ie = CMatrix::identity(dim_e);
    let weighted = tensor_product(&ie, ancilla.matrix());
    let vdag = v.adjoint();
    let elements: Result<Vec<CMatrix>> = projectors
        .iter()
        .map(|pi| {
            let inner = &(&vdag * &tensor_product(&ie, pi)) * v;
            let m = &weighted * &inner;
            Ok(partial_trace(&m, dim_e, dim_c, Subsystem::A)?.hermitian_part())
        })
        .collect();
    Povm::new(elements?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn swap_gate() -> CMatrix {
        let mut m = CMatrix::zeros(4, 4);
        m.set(0, 0, c(1.0, 0.0));
        m.set(1, 2, c(1.0, 0.0));
        m.set(2, 1, c(1.0, 0.0));
        m.set(3, 3, c(1.0, 0.0));
        m
    }

    fn plus_state() -> PureState {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        PureState::new(vec![c(s, 0.0), c(s, 0.0)]).unwrap()
    }

    #[test]
    fn density_operator_validation() {
        assert!(DensityOperator::new(CMatrix::diag(&[0.3, 0.7])).is_ok());
        assert!(matches!(
            DensityOperator::new(CMatrix::diag(&[0.5, 0.6])),
            Err(Error::NotUnitTrace(_))
        ));
        assert!(matches!(
            DensityOperator::new(CMatrix::diag(&[1.5, -0.5])),
            Err(Error::NotPsd(_))
        ));
        let m = CMatrix::new(2, 2, vec![c(0.5, 0.0), c(0.1, 0.0), c(0.3, 0.0), c(0.5, 0.0)]);
        assert!(matches!(DensityOperator::new(m), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn density_operator_clamps_roundoff_negatives() {
        let m = CMatrix::diag(&[1.0 + 5e-11, -5e-11]);
        let rho = DensityOperator::new(m).unwrap();
        let eig = herm_eig(rho.matrix()).unwrap();
        assert!(eig.values[0] >= 0.0);
        assert!((rho.matrix().trace().re - 1.0).abs() < 1e-14);
    }

    #[test]
    fn pure_state_validation() {
        assert!(PureState::new(vec![c(1.0, 0.0), c(0.0, 0.0)]).is_ok());
        assert!(matches!(
            PureState::new(vec![c(1.0, 0.0), c(0.5, 0.0)]),
            Err(Error::NotNormalized(_))
        ));
    }

    #[test]
    fn povm_validation() {
        let half = CMatrix::identity(2).scaled_re(0.5);
        assert!(Povm::new(vec![half.clone(), half.clone()]).is_ok());
        assert!(matches!(
            Povm::new(vec![half.clone(), half.scaled_re(0.5)]),
            Err(Error::IncompletePovm(_))
        ));
        let neg = CMatrix::diag(&[1.5, -0.5]);
        let comp = &CMatrix::identity(2) - &neg;
        assert!(matches!(Povm::new(vec![neg, comp]), Err(Error::NotPsd(_))));
    }

    #[test]
    fn channel_validation() {
        assert!(KrausChannel::new(vec![CMatrix::identity(2)]).is_ok());
        assert!(matches!(
            KrausChannel::new(vec![CMatrix::identity(2).scaled_re(0.9)]),
            Err(Error::BrokenChannel(_))
        ));
    }

    #[test]
    fn identity_channel_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let rho = sampling::random_density(3, &mut rng);
        let out = apply_channel(&KrausChannel::identity(3), &rho).unwrap();
        assert!(out.matrix().max_abs_diff(rho.matrix()) < 1e-14);
    }

    #[test]
    fn dephasing_kills_coherence() {
        let ch = KrausChannel::new(vec![CMatrix::diag(&[1.0, 0.0]), CMatrix::diag(&[0.0, 1.0])])
            .unwrap();
        let out = apply_channel(&ch, &plus_state().projector()).unwrap();
        assert!(out.matrix().max_abs_diff(&CMatrix::identity(2).scaled_re(0.5)) < 1e-14);
    }

    #[test]
    fn channel_output_has_unit_trace() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for _ in 0..10 {
            let u = sampling::random_unitary(6, &mut rng);
            let probe = sampling::random_density(3, &mut rng);
            let ch = channel_from_unitary(&u, &probe).unwrap();
            let rho = sampling::random_density(2, &mut rng);
            let out = apply_channel(&ch, &rho).unwrap();
            assert!((out.matrix().trace().re - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn channel_from_identity_unitary_is_a_single_identity() {
        let probe = PureState::basis(2, 0).projector();
        let ch = channel_from_unitary(&CMatrix::identity(4), &probe).unwrap();
        assert_eq!(ch.operators().len(), 1);
        assert!(ch.operators()[0].max_abs_diff(&CMatrix::identity(2)) < 1e-14);
    }

    #[test]
    fn swap_channel_prepares_probe_state() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let probe = PureState::basis(2, 0).projector();
        let ch = channel_from_unitary(&swap_gate(), &probe).unwrap();
        for _ in 0..5 {
            let rho = sampling::random_density(2, &mut rng);
            let out = apply_channel(&ch, &rho).unwrap();
            assert!(out.matrix().max_abs_diff(probe.matrix()) < 1e-12);
        }
    }

    #[test]
    fn kraus_matches_joint_evolution() {
        let mut rng = ChaCha8Rng::seed_from_u64(24);
        for _ in 0..10 {
            let u = sampling::random_unitary(6, &mut rng);
            let probe = sampling::random_density(3, &mut rng);
            let rho = sampling::random_density(2, &mut rng);

            let ch = channel_from_unitary(&u, &probe).unwrap();
            let via_kraus = apply_channel(&ch, &rho).unwrap();

            let joint = tensor_product(rho.matrix(), probe.matrix());
            let evolved = &(&u * &joint) * &u.adjoint();
            let direct = partial_trace(&evolved, 2, 3, Subsystem::A).unwrap();
            assert!(via_kraus.matrix().max_abs_diff(&direct) < 1e-10);
        }
    }

    #[test]
    fn probabilities_examples() {
        let rho = DensityOperator::new(CMatrix::diag(&[0.3, 0.7])).unwrap();
        let basis = Povm::projective(&CMatrix::identity(2)).unwrap();
        let p = povm_probabilities(&rho, &basis).unwrap();
        assert!((p[0] - 0.3).abs() < 1e-14 && (p[1] - 0.7).abs() < 1e-14);

        let half = CMatrix::identity(2).scaled_re(0.5);
        let trivial = Povm::new(vec![half.clone(), half]).unwrap();
        let q = povm_probabilities(&rho, &trivial).unwrap();
        assert!((q[0] - 0.5).abs() < 1e-14 && (q[1] - 0.5).abs() < 1e-14);

        let p_plus = povm_probabilities(&plus_state().projector(), &basis).unwrap();
        assert!((p_plus[0] - 0.5).abs() < 1e-14 && (p_plus[1] - 0.5).abs() < 1e-14);
    }

    #[test]
    fn probabilities_form_distribution() {
        let mut rng = ChaCha8Rng::seed_from_u64(25);
        for _ in 0..10 {
            let rho = sampling::random_density(3, &mut rng);
            let povm = sampling::random_povm(3, 4, &mut rng);
            let p = povm_probabilities(&rho, &povm).unwrap();
            assert!(p.iter().all(|&x| x >= 0.0));
            assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn ancilla_model_trivial_interaction() {
        let mut rng = ChaCha8Rng::seed_from_u64(26);
        let sigma = sampling::random_density(2, &mut rng);
        let projectors = vec![CMatrix::diag(&[1.0, 0.0]), CMatrix::diag(&[0.0, 1.0])];
        let povm = povm_from_ancilla_model(&CMatrix::identity(4), &sigma, &projectors).unwrap();
        for (b, e) in povm.elements().iter().enumerate() {
            let weight = (sigma.matrix() * &projectors[b]).trace().re;
            assert!(e.max_abs_diff(&CMatrix::identity(2).scaled_re(weight)) < 1e-12);
        }
    }

    #[test]
    fn ancilla_model_swap_routes_probe() {
        let mut rng = ChaCha8Rng::seed_from_u64(27);
        let sigma = sampling::random_density(2, &mut rng);
        let projectors = vec![CMatrix::diag(&[1.0, 0.0]), CMatrix::diag(&[0.0, 1.0])];
        let povm = povm_from_ancilla_model(&swap_gate(), &sigma, &projectors).unwrap();
        for (b, e) in povm.elements().iter().enumerate() {
            assert!(e.max_abs_diff(&projectors[b]) < 1e-12);
        }
    }

    #[test]
    fn ancilla_model_matches_explicit_computation() {
        let mut rng = ChaCha8Rng::seed_from_u64(28);
        let v = sampling::random_unitary(6, &mut rng);
        let sigma = sampling::random_density(3, &mut rng);
        let basis = sampling::random_unitary(3, &mut rng);
        let projectors: Vec<CMatrix> = (0..3)
            .map(|k| {
                let col: Vec<Complex64> = (0..3).map(|i| basis.get(i, k)).collect();
                CMatrix::outer(&col, &col)
            })
            .collect();
        let povm = povm_from_ancilla_model(&v, &sigma, &projectors).unwrap();

        let rho_e = sampling::random_density(2, &mut rng);
        let p = povm_probabilities(&rho_e, &povm).unwrap();

        let joint = tensor_product(rho_e.matrix(), sigma.matrix());
        let evolved = &(&v * &joint) * &v.adjoint();
        for (b, pi) in projectors.iter().enumerate() {
            let direct = (&evolved * &tensor_product(&CMatrix::identity(2), pi)).trace().re;
            assert!((p[b] - direct).abs() < 1e-10);
        }
    }

    #[test]
    fn ancilla_model_rejects_bad_projectors() {
        let sigma = DensityOperator::maximally_mixed(2);
        let bad = vec![CMatrix::diag(&[1.0, 0.0]), CMatrix::diag(&[0.0, 0.5])];
        assert!(matches!(
            povm_from_ancilla_model(&CMatrix::identity(4), &sigma, &bad),
            Err(Error::BadProjectors(_))
        ));
    }

    #[test]
    fn unitary_channel_preserves_purity() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..10 {
            let u = sampling::random_unitary(3, &mut rng);
            let rho = sampling::random_density(3, &mut rng);
            let ch = KrausChannel::new(vec![u]).unwrap();
            let out = apply_channel(&ch, &rho).unwrap();
            assert!((out.purity() - rho.purity()).abs() < 1e-10);
        }
    }
}
