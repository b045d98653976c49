//! The eavesdropping model: a probe interacts unitarily with the system,
//! then each party reads off what the interaction did.
//!
//! Four disturbance measures quantify the damage to the two candidate
//! preparations: one minus the average input/output fidelity, the best
//! probability that the sender detects tampering, and the entanglement
//! fidelity with its associated (more stringent) disturbance.

use crate::error::{Error, Result};
use crate::linalg::{partial_trace, tensor_product, trace_norm, Subsystem};
use crate::measures::fidelity;
use crate::quantum::{channel_from_unitary, DensityOperator, KrausChannel};

/// Everything produced by one run of the probe interaction.
///
/// For each preparation `s`, the joint post-interaction state on A⊗E and its
/// two marginals; plus the reduced A→A channel in Kraus form, so that both
/// the joint-evolution and the Kraus route are exercised on every call.
#[derive(Debug, Clone)]
pub struct InteractionOutcome {
    pub joint: [DensityOperator; 2],
    pub alice: [DensityOperator; 2],
    pub eve: [DensityOperator; 2],
    pub channel: KrausChannel,
}

/// Evolve both candidate preparations through Û(ρ̂ₛ ⊗ σ̂)Û†.
pub fn run_interaction(
    rho0: &DensityOperator,
    rho1: &DensityOperator,
    probe: &DensityOperator,
    u: &crate::linalg::CMatrix,
) -> Result<InteractionOutcome> {
    if rho0.dim() != rho1.dim() {
        return Err(Error::DimensionMismatch(format!(
            "input dims {} and {} differ",
            rho0.dim(),
            rho1.dim()
        )));
    }
    let dim_a = rho0.dim();
    let dim_e = probe.dim();
    if !u.is_square() || u.rows() != dim_a * dim_e {
        return Err(Error::DimensionMismatch(format!(
            "unitary dim {} does not match {}x{} joint space",
            u.rows(),
            dim_a,
            dim_e
        )));
    }
    let channel = channel_from_unitary(u, probe)?; // also validates unitarity

    let mut joint = Vec::with_capacity(2);
    let mut alice = Vec::with_capacity(2);
    let mut eve = Vec::with_capacity(2);
    for rho in [rho0, rho1] {
        let evolved =
            (&(u * &tensor_product(rho.matrix(), probe.matrix())) * &u.adjoint()).hermitian_part();
        alice.push(DensityOperator::new(
            partial_trace(&evolved, dim_a, dim_e, Subsystem::A)?.hermitian_part(),
        )?);
        eve.push(DensityOperator::new(
            partial_trace(&evolved, dim_a, dim_e, Subsystem::E)?.hermitian_part(),
        )?);
        joint.push(DensityOperator::new(evolved)?);
    }
    let into_pair = |mut v: Vec<DensityOperator>| {
        let b = v.pop().expect("two elements");
        let a = v.pop().expect("two elements");
        [a, b]
    };
    Ok(InteractionOutcome {
        joint: into_pair(joint),
        alice: into_pair(alice),
        eve: into_pair(eve),
        channel,
    })
}

fn check_dims(pairs: &[(&DensityOperator, &DensityOperator)]) -> Result<()> {
    for (a, b) in pairs {
        if a.dim() != b.dim() {
            return Err(Error::DimensionMismatch(format!(
                "state dims {} and {} differ",
                a.dim(),
                b.dim()
            )));
        }
    }
    Ok(())
}

/// D = 1 − ½F(ρ̂₀, ρ̂₀ᴬ) − ½F(ρ̂₁, ρ̂₁ᴬ): one minus the average fidelity
/// between inputs and outputs. Vanishes iff both states pass unchanged;
/// reaches one iff both outputs are orthogonal to their inputs.
pub fn disturbance_avg_fidelity(
    rho0: &DensityOperator,
    rho1: &DensityOperator,
    alice0: &DensityOperator,
    alice1: &DensityOperator,
) -> Result<f64> {
    check_dims(&[(rho0, alice0), (rho1, alice1), (rho0, rho1)])?;
    let d = 1.0 - 0.5 * fidelity(rho0, alice0)? - 0.5 * fidelity(rho1, alice1)?;
    Ok(d.clamp(0.0, 1.0))
}

/// D_G = ½ + ⅛ tr|ρ̂₀ − ρ̂₀ᴬ| + ⅛ tr|ρ̂₁ − ρ̂₁ᴬ|: the sender's best average
/// probability of catching an eavesdropper who is active half the time.
/// Chance level ½ means no disturbance; 1 means certain detection.
pub fn disturbance_guessing(
    rho0: &DensityOperator,
    rho1: &DensityOperator,
    alice0: &DensityOperator,
    alice1: &DensityOperator,
) -> Result<f64> {
    check_dims(&[(rho0, alice0), (rho1, alice1), (rho0, rho1)])?;
    let t0 = trace_norm(&(rho0.matrix() - alice0.matrix()))?;
    let t1 = trace_norm(&(rho1.matrix() - alice1.matrix()))?;
    Ok((0.5 + t0 / 8.0 + t1 / 8.0).clamp(0.5, 1.0))
}

/// Entanglement fidelity Fₛ = Σℓ |tr(ρ̂ₛ Âℓ)|²: how well the channel
/// preserves the state together with anything it was entangled with.
/// Independent of the purification, and never above F(ρ̂ₛ, ρ̂ₛᴬ).
pub fn entanglement_fidelity(rho: &DensityOperator, ch: &KrausChannel) -> Result<f64> {
    if ch.dim_in() != rho.dim() || ch.dim_out() != rho.dim() {
        return Err(Error::DimensionMismatch(format!(
            "channel {}x{} does not act on state dim {}",
            ch.dim_out(),
            ch.dim_in(),
            rho.dim()
        )));
    }
    let f: f64 = ch
        .operators()
        .iter()
        .map(|a| (rho.matrix() * a).trace().norm_sqr())
        .sum();
    Ok(f.clamp(0.0, 1.0))
}

/// D_S = 1 − ½F₀ − ½F₁: the entanglement-fidelity disturbance, at least as
/// large as the average-fidelity disturbance of the same channel.
pub fn disturbance_entanglement(
    rho0: &DensityOperator,
    rho1: &DensityOperator,
    ch: &KrausChannel,
) -> Result<f64> {
    check_dims(&[(rho0, rho1)])?;
    let f0 = entanglement_fidelity(rho0, ch)?;
    let f1 = entanglement_fidelity(rho1, ch)?;
    Ok((1.0 - 0.5 * f0 - 0.5 * f1).clamp(0.0, 1.0))
}

/// Entanglement fidelity computed the long way round, through an explicit
/// purification |ψ⟩ = Σᵢ √λᵢ |i⟩|i⟩ (optionally rotated on the reference
/// side by `reference_rotation`): ⟨ψ|(ℰ⊗I)(|ψ⟩⟨ψ|)|ψ⟩.
///
/// Used to check operationally that Fₛ does not depend on the purification.
pub fn entanglement_fidelity_purified(
    rho: &DensityOperator,
    ch: &KrausChannel,
    reference_rotation: Option<&crate::linalg::CMatrix>,
) -> Result<f64> {
    if ch.dim_in() != rho.dim() || ch.dim_out() != rho.dim() {
        return Err(Error::DimensionMismatch(format!(
            "channel {}x{} does not act on state dim {}",
            ch.dim_out(),
            ch.dim_in(),
            rho.dim()
        )));
    }
    let n = rho.dim();
    let eig = crate::linalg::herm_eig(rho.matrix())?;
    // Spectral purification amplitudes ψ[(i, j)] = √λⱼ Vᵢⱼ Wᵢ'ⱼ-style:
    // |ψ⟩ = Σⱼ √λⱼ |vⱼ⟩ ⊗ W|j⟩ with W an optional unitary on the reference.
    let mut psi = vec![num_complex::Complex64::new(0.0, 0.0); n * n];
    for j in 0..n {
        let w = eig.values[j].max(0.0).sqrt();
        if w == 0.0 {
            continue;
        }
        for i in 0..n {
            let vij = eig.vectors.get(i, j);
            match reference_rotation {
                Some(rot) => {
                    for k in 0..n {
                        psi[i * n + k] += vij * rot.get(k, j) * w;
                    }
                }
                None => psi[i * n + j] += vij * w,
            }
        }
    }
    let proj = crate::linalg::CMatrix::outer(&psi, &psi);
    let identity = crate::linalg::CMatrix::identity(n);
    let mut out = crate::linalg::CMatrix::zeros(n * n, n * n);
    for a in ch.operators() {
        let lifted = tensor_product(a, &identity);
        out = &out + &(&(&lifted * &proj) * &lifted.adjoint());
    }
    // Fidelity against a pure state reduces to the expectation value.
    let f = crate::linalg::vec_inner(&psi, &out.apply(&psi)).re;
    Ok(f.clamp(0.0, 1.0))
}
