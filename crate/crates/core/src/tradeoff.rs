//! The closed-form error-versus-disturbance tradeoff for two equally likely
//! nonorthogonal pure qubit states.
//!
//! The input family is |0⟩ = cos α|a₀⟩ + sin α|a₁⟩ and
//! |1⟩ = sin α|a₀⟩ + cos α|a₁⟩, whose distinction is captured by the single
//! overlap S = ⟨0|1⟩ = sin 2α. The probe interaction reduces, after all
//! symmetry and phase arguments, to a three-parameter family (λ, θ, φ) of
//! real unitaries on a qubit⊗qutrit space, described by four real probe
//! vectors |R₀₀⟩, |R₀₁⟩, |R₁₀⟩, |R₁₁⟩.
//!
//! Two routes to every quantity coexist here: the direct outer-product
//! construction from the probe vectors, and the printed closed-form matrix
//! elements. The direct construction is authoritative; the closed forms are
//! cross-checked against it (see [`crate::verify`]) and any disagreement
//! beyond 1e-10 is a failure.

use std::f64::consts::FRAC_PI_4;

use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::quantum::{DensityOperator, PureState};

/// A pair of real pure qubit states with overlap S = sin 2α.
#[derive(Debug, Clone)]
pub struct PurePair {
    alpha: f64,
    state0: PureState,
    state1: PureState,
    s_overlap: f64,
}

impl PurePair {
    /// Build the pair for a given α (radians). α ∈ (0, π/4) gives a
    /// nondegenerate pair; the endpoints are orthogonal (α = 0) and
    /// identical (α = π/4) states.
    pub fn new(alpha: f64) -> Self {
        Self {
            alpha,
            state0: PureState::real_qubit(alpha),
            state1: PureState::real_qubit(std::f64::consts::FRAC_PI_2 - alpha),
            s_overlap: (2.0 * alpha).sin(),
        }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn state0(&self) -> &PureState {
        &self.state0
    }

    pub fn state1(&self) -> &PureState {
        &self.state1
    }

    /// S = ⟨0|1⟩ = sin 2α.
    pub fn s_overlap(&self) -> f64 {
        self.s_overlap
    }

    /// Amplitudes (c_s0, c_s1) of state `s` in the |a₀⟩, |a₁⟩ basis.
    pub fn coefficients(&self, s: usize) -> (f64, f64) {
        let (ca, sa) = (self.alpha.cos(), self.alpha.sin());
        match s {
            0 => (ca, sa),
            _ => (sa, ca),
        }
    }

    /// Projector onto state `s` as a density operator.
    pub fn density(&self, s: usize) -> DensityOperator {
        match s {
            0 => self.state0.projector(),
            _ => self.state1.projector(),
        }
    }

    fn require_nondegenerate(&self) -> Result<()> {
        let gamma = self.gamma();
        if gamma <= 1e-12 {
            return Err(Error::DegeneratePair(format!(
                "overlap S = {} admits no tradeoff curve (states orthogonal or identical)",
                self.s_overlap
            )));
        }
        Ok(())
    }

    /// γ = S² − S⁴ = ¼ sin² 4α.
    pub fn gamma(&self) -> f64 {
        let s2 = self.s_overlap * self.s_overlap;
        s2 - s2 * s2
    }
}

/// Probe-interaction parameters (λ, θ, φ), all in radians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbeParams {
    pub lambda: f64,
    pub theta: f64,
    pub phi: f64,
}

impl ProbeParams {
    pub fn new(lambda: f64, theta: f64, phi: f64) -> Self {
        Self { lambda, theta, phi }
    }

    /// The five real unitary components (X₁..X₅). They satisfy
    /// X₁²+X₂²+X₃²+X₄²+X₅² = 1 and X₁X₅ + X₂X₄ = 0 identically.
    pub fn xs(&self) -> [f64; 5] {
        let (cl, sl) = (self.lambda.cos(), self.lambda.sin());
        let (ct, st) = (self.theta.cos(), self.theta.sin());
        let (cp, sp) = (self.phi.cos(), self.phi.sin());
        [cl * ct * cp, cl * ct * sp, sl, cl * st * cp, -cl * st * sp]
    }
}

/// The four probe vectors |R₀₀⟩, |R₀₁⟩, |R₁₀⟩, |R₁₁⟩ in the real
/// three-dimensional probe space, indexed `[m*2 + n]`.
pub fn probe_vectors(p: &ProbeParams) -> [[f64; 3]; 4] {
    let [x1, x2, x3, x4, x5] = p.xs();
    [
        [x1, x2, x3], // R00
        [x4, x5, 0.0], // R01
        [x5, x4, 0.0], // R10
        [x2, x1, x3], // R11
    ]
}

/// Eve's post-interaction state ρ̂ᴱₛ = Σₙ |Rₙˢ⟩⟨Rₙˢ| with
/// |Rₙˢ⟩ = Σₘ cₛₘ|Rₘₙ⟩, built directly from the probe vectors.
pub fn eve_state_direct(pair: &PurePair, p: &ProbeParams, s: usize) -> DensityOperator {
    let r = probe_vectors(p);
    let (c0, c1) = pair.coefficients(s);
    let mut m = [[0.0f64; 3]; 3];
    for n in 0..2 {
        let v = [
            c0 * r[n][0] + c1 * r[2 + n][0],
            c0 * r[n][1] + c1 * r[2 + n][1],
            c0 * r[n][2] + c1 * r[2 + n][2],
        ];
        for i in 0..3 {
            for j in 0..3 {
                m[i][j] += v[i] * v[j];
            }
        }
    }
    let flat: Vec<f64> = m.iter().flatten().copied().collect();
    DensityOperator::new(CMatrix::from_real(3, 3, &flat))
        .expect("probe unitarity makes this a valid state")
}

/// Alice's post-interaction state ρ̂ᴬₛ = Σᵦ |Q_βˢ⟩⟨Q_βˢ|, built directly from
/// the probe vectors.
pub fn alice_state_direct(pair: &PurePair, p: &ProbeParams, s: usize) -> DensityOperator {
    let r = probe_vectors(p);
    let (c0, c1) = pair.coefficients(s);
    let mut m = [[0.0f64; 2]; 2];
    for beta in 0..3 {
        // Q_β[n] = Σₘ cₛₘ R_{mn}[β]; the m index selects rows 0/1 vs 2/3.
        let q = [
            c0 * r[0][beta] + c1 * r[2][beta],
            c0 * r[1][beta] + c1 * r[3][beta],
        ];
        for i in 0..2 {
            for j in 0..2 {
                m[i][j] += q[i] * q[j];
            }
        }
    }
    let flat: Vec<f64> = m.iter().flatten().copied().collect();
    DensityOperator::new(CMatrix::from_real(2, 2, &flat))
        .expect("probe unitarity makes this a valid state")
}

/// Eve's state from the printed closed-form matrix elements. Cross-check
/// only; [`eve_state_direct`] is authoritative.
pub fn eve_state_closed(pair: &PurePair, p: &ProbeParams, s: usize) -> DensityOperator {
    // For s = 1 every cos α and sin α are interchanged.
    let alpha = match s {
        0 => pair.alpha(),
        _ => std::f64::consts::FRAC_PI_2 - pair.alpha(),
    };
    let (ca, sa) = (alpha.cos(), alpha.sin());
    let c2a = (2.0 * alpha).cos();
    let (cl, s2l) = (p.lambda.cos(), (2.0 * p.lambda).sin());
    let sl = p.lambda.sin();
    let (ct, st) = (p.theta.cos(), p.theta.sin());
    let (cp, sp) = (p.phi.cos(), p.phi.sin());
    let c2p = (2.0 * p.phi).cos();

    let xx = 0.5 * cl * cl * (1.0 + c2a * c2p);
    let xy = 0.25
        * cl
        * cl
        * ((ca - sa).powi(2) * (2.0 * (p.phi - p.theta)).sin()
            + (ca + sa).powi(2) * (2.0 * (p.phi + p.theta)).sin());
    let xz = 0.5 * s2l * (sa * sa * sp * ct + ca * ca * cp * ct + ca * sa * (cp - sp) * st);
    let yy = 0.5 * cl * cl * (1.0 - c2a * c2p);
    let yz = 0.5 * s2l * (ca * ca * sp * ct + sa * sa * cp * ct + ca * sa * (cp - sp) * st);
    let zz = sl * sl;

    let flat = [xx, xy, xz, xy, yy, yz, xz, yz, zz];
    DensityOperator::new(CMatrix::from_real(3, 3, &flat)).expect("closed form is a valid state")
}

/// Alice's state from the printed closed-form matrix elements. Cross-check
/// only; [`alice_state_direct`] is authoritative.
pub fn alice_state_closed(pair: &PurePair, p: &ProbeParams, s: usize) -> DensityOperator {
    let alpha = match s {
        0 => pair.alpha(),
        _ => std::f64::consts::FRAC_PI_2 - pair.alpha(),
    };
    let (ca, sa) = (alpha.cos(), alpha.sin());
    let (cl, sl) = (p.lambda.cos(), p.lambda.sin());
    let (ct, st) = (p.theta.cos(), p.theta.sin());
    let (c2t, s2t) = ((2.0 * p.theta).cos(), (2.0 * p.theta).sin());
    let (c2p, s2p) = ((2.0 * p.phi).cos(), (2.0 * p.phi).sin());

    let e00 = ca * ca * (cl * cl * ct * ct + sl * sl) + sa * sa * cl * cl * st * st;
    let e01 = ca * sa * (sl * sl + cl * cl * s2p * c2t) + 0.5 * cl * cl * c2p * s2t;
    let e11 = sa * sa * (cl * cl * ct * ct + sl * sl) + ca * ca * cl * cl * st * st;

    let flat = [e00, e01, e01, e11];
    DensityOperator::new(CMatrix::from_real(2, 2, &flat)).expect("closed form is a valid state")
}

/// G(Û) = cos⁴λ cos²2φ + ½ sin²2λ (1 − sin 2φ) cos²θ, the information term
/// under the square root in the closed-form error probability.
pub fn info_g(p: &ProbeParams) -> f64 {
    let cl = p.lambda.cos();
    let s2l = (2.0 * p.lambda).sin();
    let c2p = (2.0 * p.phi).cos();
    let s2p = (2.0 * p.phi).sin();
    let ct = p.theta.cos();
    cl.powi(4) * c2p * c2p + 0.5 * s2l * s2l * (1.0 - s2p) * ct * ct
}

/// Closed-form optimal error probability Pₑ(Û) = ½ − ½ cos 2α √G(Û) for
/// discriminating Eve's two probe states at equal priors.
pub fn pe_closed(pair: &PurePair, p: &ProbeParams) -> f64 {
    0.5 - 0.5 * (2.0 * pair.alpha()).cos() * info_g(p).max(0.0).sqrt()
}

/// Closed-form disturbance
/// D(Û) = cos²λ (sin²θ − ½S cos 2φ sin 2θ + ½S²(1 − sin 2φ) cos 2θ).
pub fn disturbance_closed(pair: &PurePair, p: &ProbeParams) -> f64 {
    let s = pair.s_overlap();
    let cl = p.lambda.cos();
    let st = p.theta.sin();
    let (c2t, s2t) = ((2.0 * p.theta).cos(), (2.0 * p.theta).sin());
    let (c2p, s2p) = ((2.0 * p.phi).cos(), (2.0 * p.phi).sin());
    cl * cl * (st * st - 0.5 * s * c2p * s2t + 0.5 * s * s * (1.0 - s2p) * c2t)
}

/// The θ that minimizes D at fixed φ on the two-state-probe slice (λ = 0):
/// tan 2θ = S cos 2φ / (1 − S²(1 − sin 2φ)).
///
/// Computed via atan2, which selects the minimizing root directly; for the
/// parameter ranges the curve uses (φ ∈ [0, π/4]) it lies in (−π/4, π/4].
/// A vanishing denominator degenerates to the θ = π/4 limit.
pub fn optimal_theta(phi: f64, s_overlap: f64) -> f64 {
    let s2 = s_overlap * s_overlap;
    let num = s_overlap * (2.0 * phi).cos();
    let den = 1.0 - s2 * (1.0 - (2.0 * phi).sin());
    0.5 * num.atan2(den)
}

/// Minimal disturbance at fixed φ on the λ = 0 slice:
/// D_min = ½ − ½ √(S² cos²2φ + (1 − S²(1 − sin 2φ))²).
pub fn d_min(phi: f64, s_overlap: f64) -> f64 {
    let s2 = s_overlap * s_overlap;
    let a = 1.0 - s2 * (1.0 - (2.0 * phi).sin());
    let b = s_overlap * (2.0 * phi).cos();
    0.5 - 0.5 * (a * a + b * b).sqrt()
}

/// d₀ = ½ − ½ √(1 − S² + S⁴): the smallest disturbance compatible with
/// maximal information gain.
pub fn d_zero(s_overlap: f64) -> f64 {
    let s2 = s_overlap * s_overlap;
    0.5 - 0.5 * (1.0 - s2 + s2 * s2).max(0.0).sqrt()
}

/// The inverted constraint G_opt(d) = 2√q − q with
/// q = d(1−d)/(d₀(1−d₀)); defined for d ∈ [0, d₀] and nondegenerate pairs.
pub fn g_opt(d: f64, s_overlap: f64) -> Result<f64> {
    let s2 = s_overlap * s_overlap;
    let gamma = s2 - s2 * s2;
    if gamma <= 1e-12 {
        return Err(Error::DegeneratePair(format!(
            "overlap S = {s_overlap} is degenerate (orthogonal or identical states)"
        )));
    }
    let d0 = d_zero(s_overlap);
    if !((-1e-12)..=(d0 + 1e-12)).contains(&d) {
        return Err(Error::InvalidInput(format!(
            "disturbance {d} outside the admissible range [0, {d0}]"
        )));
    }
    let d = d.clamp(0.0, d0);
    let q = d * (1.0 - d) / (d0 * (1.0 - d0));
    Ok((2.0 * q.sqrt() - q).clamp(0.0, 1.0))
}

/// The curve itself: Pₑ_opt(d) = ½ − ½ cos 2α √G_opt(d).
pub fn pe_opt(d: f64, pair: &PurePair) -> Result<f64> {
    pair.require_nondegenerate()?;
    let g = g_opt(d, pair.s_overlap())?;
    Ok(0.5 - 0.5 * (2.0 * pair.alpha()).cos() * g.sqrt())
}

/// Where a curve point came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Analytic,
    Numeric,
}

/// One sampled point of the tradeoff curve.
#[derive(Debug, Clone, Copy)]
pub struct CurvePoint {
    pub d: f64,
    pub pe: f64,
    pub provenance: Provenance,
}

/// Sampled tradeoff curve {(d, Pₑ_opt(d)) | 0 ≤ d ≤ d₀}.
#[derive(Debug, Clone)]
pub struct TradeoffCurve {
    pub alpha: f64,
    pub d_zero: f64,
    pub points: Vec<CurvePoint>,
}

/// Sample the analytic curve on a uniform grid of `n_points ≥ 2` over
/// [0, d₀]. Degenerate pairs (S ∈ {0, 1}) are rejected.
pub fn analytic_curve(pair: &PurePair, n_points: usize) -> Result<TradeoffCurve> {
    if n_points < 2 {
        return Err(Error::InvalidInput(format!(
            "curve needs at least 2 points, got {n_points}"
        )));
    }
    pair.require_nondegenerate()?;
    let d0 = d_zero(pair.s_overlap());
    let points = (0..n_points)
        .map(|i| {
            let d = d0 * i as f64 / (n_points - 1) as f64;
            Ok(CurvePoint {
                d,
                pe: pe_opt(d, pair)?,
                provenance: Provenance::Analytic,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TradeoffCurve {
        alpha: pair.alpha(),
        d_zero: d0,
        points,
    })
}

/// α = π/8: the S = √½ reference pair used by most fixed examples.
pub fn reference_pair() -> PurePair {
    PurePair::new(FRAC_PI_4 / 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eavesdrop::disturbance_avg_fidelity;
    use crate::measures::{helstrom, PriorPair};

    const D0_REF: f64 = 0.066_987_298_107_780_7; // d₀ at α = π/8
    const PE_D0_REF: f64 = 0.146_446_609_406_726_2; // ½ − √2/4
    const PE_HALF_D0_REF: f64 = 0.160_621_054_393_97; // Pₑ_opt(d₀/2) at α = π/8
    const G_HALF_D0_REF: f64 = 0.921_424_549_765_285; // G_opt(d₀/2) at α = π/8
    const THETA_OPT_REF: f64 = 0.477_658_309_062_254_65; // ½ atan √2

    fn grid() -> Vec<f64> {
        (0..8).map(|i| -1.5 + i as f64 * 0.43).collect()
    }

    #[test]
    fn pure_pair_overlap() {
        for alpha in [0.1, std::f64::consts::FRAC_PI_8, 0.6] {
            let pair = PurePair::new(alpha);
            let ip = crate::linalg::vec_inner(
                pair.state0().amplitudes(),
                pair.state1().amplitudes(),
            );
            assert!((ip.re - (2.0 * alpha).sin()).abs() < 1e-12);
            assert!(ip.im.abs() < 1e-15);
            assert!((pair.s_overlap() - (2.0 * alpha).sin()).abs() < 1e-15);
        }
    }

    #[test]
    fn probe_unitarity_identities() {
        for &l in &grid() {
            for &t in &grid() {
                for &f in &grid() {
                    let [x1, x2, x3, x4, x5] = ProbeParams::new(l, t, f).xs();
                    let norm = x1 * x1 + x2 * x2 + x3 * x3 + x4 * x4 + x5 * x5;
                    assert!((norm - 1.0).abs() < 1e-12);
                    assert!((x1 * x5 + x2 * x4).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn probe_vectors_special_cases() {
        let v = probe_vectors(&ProbeParams::new(std::f64::consts::FRAC_PI_2, 0.3, 0.7));
        assert!(v[0][0].abs() < 1e-15 && v[0][1].abs() < 1e-15 && (v[0][2] - 1.0).abs() < 1e-15);
        assert!(v[3][0].abs() < 1e-15 && v[3][1].abs() < 1e-15 && (v[3][2] - 1.0).abs() < 1e-15);
        assert!(v[1].iter().all(|x| x.abs() < 1e-15));
        assert!(v[2].iter().all(|x| x.abs() < 1e-15));

        let v = probe_vectors(&ProbeParams::new(0.0, 0.0, 0.0));
        assert_eq!(v[0], [1.0, 0.0, 0.0]);
        assert_eq!(v[3], [0.0, 1.0, 0.0]);
        assert!(v[1].iter().chain(v[2].iter()).all(|x| x.abs() < 1e-15));
    }

    #[test]
    fn probe_vector_norms_sum_to_one() {
        for &l in &grid() {
            for &t in &grid() {
                for &f in &grid() {
                    let v = probe_vectors(&ProbeParams::new(l, t, f));
                    let total: f64 = v[0].iter().map(|x| x * x).sum::<f64>()
                        + v[1].iter().map(|x| x * x).sum::<f64>();
                    assert!((total - 1.0).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn probe_inner_products_symmetric_under_relabeling() {
        let dot = |a: &[f64; 3], b: &[f64; 3]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
        for &l in &grid() {
            let p = ProbeParams::new(l, 0.35, -0.8);
            let v = probe_vectors(&p);
            // Interchange 0↔1 on both indices: R00↔R11, R01↔R10.
            assert!((dot(&v[0], &v[0]) - dot(&v[3], &v[3])).abs() < 1e-12);
            assert!((dot(&v[1], &v[1]) - dot(&v[2], &v[2])).abs() < 1e-12);
            assert!((dot(&v[0], &v[1]) - dot(&v[3], &v[2])).abs() < 1e-12);
            assert!((dot(&v[0], &v[2]) - dot(&v[3], &v[1])).abs() < 1e-12);
        }
    }

    #[test]
    fn eve_state_collapses_when_probe_decouples_fully() {
        let pair = reference_pair();
        let p = ProbeParams::new(std::f64::consts::FRAC_PI_2, 0.4, 1.1);
        for s in 0..2 {
            let rho = eve_state_direct(&pair, &p, s);
            let ez = CMatrix::diag(&[0.0, 0.0, 1.0]);
            assert!(rho.matrix().max_abs_diff(&ez) < 1e-12);
        }
    }

    #[test]
    fn closed_forms_match_direct_construction() {
        for alpha in [0.2, std::f64::consts::FRAC_PI_8, 0.7] {
            let pair = PurePair::new(alpha);
            for &l in &grid() {
                for &t in &grid() {
                    for &f in &grid() {
                        let p = ProbeParams::new(l, t, f);
                        for s in 0..2 {
                            let de = eve_state_direct(&pair, &p, s);
                            let ce = eve_state_closed(&pair, &p, s);
                            assert!(de.matrix().max_abs_diff(ce.matrix()) < 1e-10);
                            let da = alice_state_direct(&pair, &p, s);
                            let ca = alice_state_closed(&pair, &p, s);
                            assert!(da.matrix().max_abs_diff(ca.matrix()) < 1e-10);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn eve_states_swap_under_relabeling() {
        // The s = 1 state must equal the s = 0 state with cos α ↔ sin α,
        // i.e. α ↦ π/2 − α in the state construction.
        let pair = PurePair::new(0.31);
        let p = ProbeParams::new(0.25, -0.6, 1.3);
        let e1 = eve_state_direct(&pair, &p, 1);
        let mirrored = PurePair::new(std::f64::consts::FRAC_PI_2 - 0.31);
        let e0m = eve_state_direct(&mirrored, &p, 0);
        assert!(e1.matrix().max_abs_diff(e0m.matrix()) < 1e-12);
    }

    #[test]
    fn alice_state_special_cases() {
        let pair = reference_pair();
        // cos λ = 0: the probe decouples and Alice keeps her state.
        let p = ProbeParams::new(std::f64::consts::FRAC_PI_2, 0.9, -0.4);
        for s in 0..2 {
            let out = alice_state_direct(&pair, &p, s);
            assert!(out.matrix().max_abs_diff(pair.density(s).matrix()) < 1e-12);
        }
        // λ = 0, θ = 0: (ρᴬ₀)₀₀ = cos²α.
        let p = ProbeParams::new(0.0, 0.0, 0.55);
        let out = alice_state_direct(&pair, &p, 0);
        assert!((out.matrix().get(0, 0).re - pair.alpha().cos().powi(2)).abs() < 1e-12);
    }

    #[test]
    fn pe_closed_examples() {
        let pair = reference_pair();
        let p = ProbeParams::new(std::f64::consts::FRAC_PI_2, 0.3, 0.9);
        assert!((pe_closed(&pair, &p) - 0.5).abs() < 1e-12);

        let p = ProbeParams::new(0.0, 0.7, 0.0);
        assert!((pe_closed(&pair, &p) - PE_D0_REF).abs() < 1e-12);

        let identical = PurePair::new(FRAC_PI_4);
        for &l in &grid() {
            let p = ProbeParams::new(l, 0.2, -0.4);
            assert!((pe_closed(&identical, &p) - 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn pe_closed_matches_helstrom_of_direct_states() {
        let eq = PriorPair::equal();
        for alpha in [0.25, std::f64::consts::FRAC_PI_8] {
            let pair = PurePair::new(alpha);
            for &l in &grid() {
                for &t in &grid() {
                    let p = ProbeParams::new(l, t, 0.37);
                    let e0 = eve_state_direct(&pair, &p, 0);
                    let e1 = eve_state_direct(&pair, &p, 1);
                    let h = helstrom(&eq, &e0, &e1).unwrap().error_probability;
                    assert!((h - pe_closed(&pair, &p)).abs() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn disturbance_closed_examples() {
        let pair = reference_pair();
        let p = ProbeParams::new(std::f64::consts::FRAC_PI_2, 0.4, 0.8);
        assert!(disturbance_closed(&pair, &p).abs() < 1e-12);

        let p = ProbeParams::new(0.3, 0.0, FRAC_PI_4);
        assert!(disturbance_closed(&pair, &p).abs() < 1e-12);

        let theta = optimal_theta(0.0, pair.s_overlap());
        let p = ProbeParams::new(0.0, theta, 0.0);
        assert!((disturbance_closed(&pair, &p) - D0_REF).abs() < 1e-12);
    }

    #[test]
    fn disturbance_closed_matches_direct_states() {
        for alpha in [0.25, std::f64::consts::FRAC_PI_8] {
            let pair = PurePair::new(alpha);
            let rho0 = pair.density(0);
            let rho1 = pair.density(1);
            for &l in &grid() {
                for &t in &grid() {
                    let p = ProbeParams::new(l, t, -0.9);
                    let a0 = alice_state_direct(&pair, &p, 0);
                    let a1 = alice_state_direct(&pair, &p, 1);
                    let d = disturbance_avg_fidelity(&rho0, &rho1, &a0, &a1).unwrap();
                    assert!((d - disturbance_closed(&pair, &p)).abs() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn optimal_theta_examples() {
        assert!(optimal_theta(FRAC_PI_4, 0.7).abs() < 1e-12);
        assert!(optimal_theta(0.3, 0.0).abs() < 1e-12);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((optimal_theta(0.0, s) - THETA_OPT_REF).abs() < 1e-12);
        // Vanishing denominator (identical states, φ = 0) degenerates to the
        // θ = π/4 limit.
        assert!((optimal_theta(0.0, 1.0) - FRAC_PI_4).abs() < 1e-12);
    }

    #[test]
    fn optimal_theta_minimizes_disturbance() {
        let pair = reference_pair();
        let s = pair.s_overlap();
        for &phi in &[0.0, 0.2, 0.5, FRAC_PI_4] {
            let theta_star = optimal_theta(phi, s);
            let d_star = disturbance_closed(&pair, &ProbeParams::new(0.0, theta_star, phi));
            assert!((d_star - d_min(phi, s)).abs() < 1e-10);
            for k in 0..200 {
                let theta = -std::f64::consts::FRAC_PI_2
                    + std::f64::consts::PI * k as f64 / 199.0;
                let d = disturbance_closed(&pair, &ProbeParams::new(0.0, theta, phi));
                assert!(d >= d_star - 1e-12);
            }
        }
    }

    #[test]
    fn d_min_examples() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!(d_min(FRAC_PI_4, s).abs() < 1e-12);
        assert!(d_min(0.37, 0.0).abs() < 1e-12);
        assert!((d_min(0.0, s) - D0_REF).abs() < 1e-12);
    }

    #[test]
    fn d_zero_examples() {
        assert!(d_zero(0.0).abs() < 1e-15);
        assert!(d_zero(1.0).abs() < 1e-12);
        assert!((d_zero(std::f64::consts::FRAC_1_SQRT_2) - D0_REF).abs() < 1e-15);
    }

    #[test]
    fn g_opt_examples() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let d0 = d_zero(s);
        assert!(g_opt(0.0, s).unwrap().abs() < 1e-15);
        assert!((g_opt(d0, s).unwrap() - 1.0).abs() < 1e-12);
        assert!((g_opt(d0 / 2.0, s).unwrap() - G_HALF_D0_REF).abs() < 1e-12);
        assert!(g_opt(d0 * 1.5, s).is_err());
        assert!(g_opt(0.01, 0.0).is_err());
        assert!(g_opt(0.0, 1.0).is_err());
    }

    #[test]
    fn g_opt_inverts_d_min() {
        // Composing d_min with the inversion recovers G = cos²2φ, fixing the
        // sign choice in the quadratic inversion.
        let s = std::f64::consts::FRAC_1_SQRT_2;
        for k in 0..50 {
            let phi = FRAC_PI_4 * k as f64 / 49.0;
            let g = g_opt(d_min(phi, s), s).unwrap();
            assert!((g - (2.0 * phi).cos().powi(2)).abs() < 1e-10);
        }
    }

    #[test]
    fn pe_opt_examples() {
        let pair = reference_pair();
        let d0 = d_zero(pair.s_overlap());
        assert!((pe_opt(0.0, &pair).unwrap() - 0.5).abs() < 1e-15);
        assert!((pe_opt(d0, &pair).unwrap() - PE_D0_REF).abs() < 1e-12);
        assert!((pe_opt(d0 / 2.0, &pair).unwrap() - PE_HALF_D0_REF).abs() < 1e-12);

        // The endpoint equals the unconstrained Helstrom error of the pair.
        let eq = PriorPair::equal();
        let h = helstrom(&eq, &pair.density(0), &pair.density(1)).unwrap();
        assert!((pe_opt(d0, &pair).unwrap() - h.error_probability).abs() < 1e-12);
    }

    #[test]
    fn analytic_curve_shape() {
        let pair = reference_pair();
        let curve = analytic_curve(&pair, 101).unwrap();
        assert_eq!(curve.points.len(), 101);
        assert!((curve.points[0].d).abs() < 1e-15);
        assert!((curve.points[0].pe - 0.5).abs() < 1e-15);
        assert!((curve.points[100].d - curve.d_zero).abs() < 1e-15);
        assert!((curve.points[100].pe - PE_D0_REF).abs() < 1e-12);
        for w in curve.points.windows(2) {
            assert!(w[1].pe <= w[0].pe + 1e-9);
        }
        // Pointwise agreement with direct evaluation.
        for pt in &curve.points {
            assert!((pt.pe - pe_opt(pt.d, &pair).unwrap()).abs() < 1e-15);
            assert_eq!(pt.provenance, Provenance::Analytic);
        }

        let two = analytic_curve(&pair, 2).unwrap();
        assert_eq!(two.points.len(), 2);
        assert!((two.points[1].d - curve.d_zero).abs() < 1e-15);
    }

    #[test]
    fn analytic_curve_rejects_degenerate_pairs() {
        assert!(matches!(
            analytic_curve(&PurePair::new(0.0), 10),
            Err(Error::DegeneratePair(_))
        ));
        assert!(matches!(
            analytic_curve(&PurePair::new(FRAC_PI_4), 10),
            Err(Error::DegeneratePair(_))
        ));
        assert!(matches!(
            analytic_curve(&reference_pair(), 1),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn no_information_without_disturbance_on_grid() {
        for alpha in [0.15, std::f64::consts::FRAC_PI_8, 0.6] {
            let pair = PurePair::new(alpha);
            for &l in &grid() {
                for &t in &grid() {
                    for &f in &grid() {
                        let p = ProbeParams::new(l, t, f);
                        if disturbance_closed(&pair, &p) < 1e-9 {
                            assert!(pe_closed(&pair, &p) > 0.5 - 1e-6);
                        }
                    }
                }
            }
        }
    }
}
