//! Independent numerical verification of the tradeoff curve.
//!
//! The constrained problem "minimize Eve's error probability at fixed
//! disturbance" is attacked with a quadratic penalty and multi-start
//! Nelder–Mead, once over the (λ, θ, φ) probe family and once over general
//! isometries into a probe of dimension 2–4. Nothing here is seeded with
//! knowledge of the analytic solution; agreement between the two routes is
//! the point of the module.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{vec_inner, vec_norm, CMatrix};
use crate::measures::{helstrom, PriorPair};
use crate::simplex::{lds_point, scale_to_box, seed_shift, NelderMead};
use crate::tradeoff::{disturbance_closed, info_g, pe_closed, ProbeParams, PurePair};
use num_complex::Complex64;

/// Knobs for the multi-start penalized searches.
///
/// The penalty weight escalates tenfold per stage over three stages; within
/// each stage the simplex is restarted once from its own best point at a
/// smaller scale to polish.
#[derive(Debug, Clone, Copy)]
pub struct OptimizerConfig {
    pub restarts: usize,
    pub max_iterations: usize,
    pub simplex_tolerance: f64,
    pub penalty_weight: f64,
    pub constraint_tolerance: f64,
    pub seed: u64,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        Self {
            restarts: 32,
            max_iterations: 4000,
            simplex_tolerance: 1e-12,
            penalty_weight: 1e3,
            constraint_tolerance: 1e-6,
            seed: 0,
        }
    }
}

impl OptimizerConfig {
    pub fn validate(&self) -> Result<()> {
        if self.restarts < 1 {
            return Err(Error::InvalidInput("restarts must be at least 1".into()));
        }
        if self.simplex_tolerance <= 0.0
            || self.constraint_tolerance <= 0.0
            || self.penalty_weight <= 0.0
        {
            return Err(Error::InvalidInput("tolerances and weights must be positive".into()));
        }
        Ok(())
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_restarts(mut self, restarts: usize) -> Self {
        self.restarts = restarts;
        self
    }
}

/// One solved point of the constrained problem.
#[derive(Debug, Clone)]
pub struct NumericCurvePoint {
    pub d_target: f64,
    pub d_achieved: f64,
    pub pe: f64,
    pub params: Vec<f64>,
    pub converged: bool,
}

/// Outcome of one restart, before merging.
#[derive(Debug, Clone)]
struct Candidate {
    x: Vec<f64>,
    objective: f64,
    constraint: f64,
}

/// Penalized multi-start minimization of `objective` subject to
/// `constraint = target`. Deterministic given the seed: restarts start from
/// a seeded low-discrepancy sequence and the merge picks the smallest
/// objective among constraint-satisfying candidates, breaking ties
/// lexicographically on the parameters. Nothing here is seeded with the
/// analytic solution; the searches stay independent of the curve they check.
fn constrained_multistart(
    objective: &(impl Fn(&[f64]) -> f64 + Sync),
    constraint: &(impl Fn(&[f64]) -> f64 + Sync),
    target: f64,
    lo: &[f64],
    hi: &[f64],
    cfg: &OptimizerConfig,
    stream: u64,
) -> Candidate {
    let dim = lo.len();
    let shift = seed_shift(cfg.seed, stream, dim);
    let scale0 = lo
        .iter()
        .zip(hi)
        .map(|(a, b)| (b - a).abs())
        .fold(0.0, f64::max)
        * 0.25;

    let starts: Vec<Vec<f64>> = (0..cfg.restarts)
        .map(|i| scale_to_box(&lds_point(i, &shift), lo, hi))
        .collect();

    let nm = NelderMead::new(cfg.max_iterations, cfg.simplex_tolerance);
    let mut results: Vec<Candidate> = starts
        .par_iter()
        .map(|start| {
            let mut x = start.clone();
            for stage in 0..3 {
                let weight = cfg.penalty_weight * 10f64.powi(stage);
                let penalized = |p: &[f64]| {
                    let c = constraint(p) - target;
                    objective(p) + weight * c * c
                };
                let step = scale0 * 0.4f64.powi(stage);
                let first = nm.minimize(penalized, &x, step);
                // Re-polish from the stage's own best at a reduced scale.
                let second = nm.minimize(penalized, &first.x, step * 0.1);
                x = if second.f < first.f { second.x } else { first.x };
            }
            Candidate {
                objective: objective(&x),
                constraint: constraint(&x),
                x,
            }
        })
        .collect();

    // Rank candidates; anything within a loose window of the constraint is
    // comparable by objective, since the search stages end at one common
    // penalty weight and therefore one common constraint offset. Ties break
    // lexicographically on the parameters to keep the merge deterministic.
    let lex = |a: &[f64], b: &[f64]| -> std::cmp::Ordering {
        for (p, q) in a.iter().zip(b) {
            match p.total_cmp(q) {
                std::cmp::Ordering::Equal => continue,
                other => return other,
            }
        }
        std::cmp::Ordering::Equal
    };
    let compare = |a: &Candidate, b: &Candidate, tol: f64| -> std::cmp::Ordering {
        let va = (a.constraint - target).abs();
        let vb = (b.constraint - target).abs();
        match (va <= tol, vb <= tol) {
            (true, false) => std::cmp::Ordering::Less,
            (false, true) => std::cmp::Ordering::Greater,
            (false, false) => va.total_cmp(&vb).then_with(|| lex(&a.x, &b.x)),
            (true, true) => a
                .objective
                .total_cmp(&b.objective)
                .then_with(|| lex(&a.x, &b.x)),
        }
    };
    results.sort_by(|a, b| compare(a, b, 1e-3));

    // The search stages leave a constraint offset of order
    // multiplier / (2 · final weight). Drive it out of the leading
    // candidates by continuing the tenfold escalation from their own points.
    // The range is wide because the multiplier diverges at the d = 0 curve
    // endpoint: feasibility there must reach floating-point zero before the
    // reported objective is honest.
    let polished: Vec<Candidate> = results
        .iter()
        .take(3)
        .map(|cand| {
            let mut x = cand.x.clone();
            let mut residual = (cand.constraint - target).abs();
            let mut weight = cfg.penalty_weight * 1e3;
            while weight <= cfg.penalty_weight * 1e23 && residual > 1e-14 {
                let penalized = |p: &[f64]| {
                    let c = constraint(p) - target;
                    objective(p) + weight * c * c
                };
                let step = (residual * 10.0).clamp(1e-8, 1e-2 * scale0.max(1.0));
                let refined = nm.minimize(penalized, &x, step);
                let new_residual = (constraint(&refined.x) - target).abs();
                if new_residual < residual {
                    x = refined.x;
                    residual = new_residual;
                }
                weight *= 10.0;
            }
            Candidate {
                objective: objective(&x),
                constraint: constraint(&x),
                x,
            }
        })
        .collect();

    let mut best = polished[0].clone();
    for c in &polished[1..] {
        if compare(c, &best, cfg.constraint_tolerance) == std::cmp::Ordering::Less {
            best = c.clone();
        }
    }
    best
}

/// Minimize the closed-form error probability over the (λ, θ, φ) probe
/// family at each fixed disturbance in `d_grid`. Non-convergence is reported
/// per point via the `converged` flag, never dropped.
pub fn numeric_curve_family(
    pair: &PurePair,
    d_grid: &[f64],
    cfg: &OptimizerConfig,
) -> Result<Vec<NumericCurvePoint>> {
    cfg.validate()?;
    let d0 = crate::tradeoff::d_zero(pair.s_overlap());
    for &d in d_grid {
        if !((0.0 - 1e-12)..=(d0 + 1e-12)).contains(&d) {
            return Err(Error::InvalidInput(format!(
                "target disturbance {d} outside [0, {d0}]"
            )));
        }
    }
    let lo = [-std::f64::consts::FRAC_PI_2, -std::f64::consts::FRAC_PI_2, -std::f64::consts::PI];
    let hi = [std::f64::consts::FRAC_PI_2, std::f64::consts::FRAC_PI_2, std::f64::consts::PI];

    let objective = |x: &[f64]| pe_closed(pair, &ProbeParams::new(x[0], x[1], x[2]));
    let constraint = |x: &[f64]| disturbance_closed(pair, &ProbeParams::new(x[0], x[1], x[2]));

    Ok(d_grid
        .iter()
        .enumerate()
        .map(|(i, &d)| {
            let best =
                constrained_multistart(&objective, &constraint, d, &lo, &hi, cfg, i as u64);
            NumericCurvePoint {
                d_target: d,
                d_achieved: best.constraint,
                pe: best.objective,
                converged: (best.constraint - d).abs() <= cfg.constraint_tolerance,
                params: best.x,
            }
        })
        .collect())
}

/// Decode `8 * probe_dim` reals into two orthonormal columns of a
/// 2·probe_dim-dimensional isometry (Gram–Schmidt). Returns `None` when the
/// raw vectors are too degenerate to orthonormalize.
pub fn isometry_columns(params: &[f64], probe_dim: usize) -> Option<[Vec<Complex64>; 2]> {
    let joint = 2 * probe_dim;
    assert_eq!(params.len(), 4 * joint, "need 4·probe_dim reals per column");
    let column = |offset: usize| -> Vec<Complex64> {
        (0..joint)
            .map(|k| Complex64::new(params[offset + 2 * k], params[offset + 2 * k + 1]))
            .collect()
    };
    let mut u0 = column(0);
    let n0 = vec_norm(&u0);
    if n0 < 1e-9 {
        return None;
    }
    for z in &mut u0 {
        *z /= n0;
    }
    let mut u1 = column(2 * joint);
    let overlap = vec_inner(&u0, &u1);
    for (z, w) in u1.iter_mut().zip(&u0) {
        *z -= overlap * w;
    }
    let n1 = vec_norm(&u1);
    if n1 < 1e-9 {
        return None;
    }
    for z in &mut u1 {
        *z /= n1;
    }
    Some([u0, u1])
}

/// Error probability and disturbance of the general-isometry interaction
/// described by `params`, or `None` on a degenerate parameterization.
///
/// The isometry sends |a_m⟩|ψ⟩ to column m; Eve's states are the probe
/// marginals (error via the Helstrom bound at equal priors), the disturbance
/// is one minus the average input/output fidelity on Alice's side, which for
/// pure inputs reduces to expectation values.
pub fn general_interaction_eval(
    pair: &PurePair,
    probe_dim: usize,
    params: &[f64],
) -> Option<(f64, f64)> {
    let [u0, u1] = isometry_columns(params, probe_dim)?;
    let eq = PriorPair::equal();

    let mut eve = Vec::with_capacity(2);
    let mut alice = Vec::with_capacity(2);
    for s in 0..2 {
        let (c0, c1) = pair.coefficients(s);
        let psi: Vec<Complex64> = u0
            .iter()
            .zip(&u1)
            .map(|(a, b)| a * c0 + b * c1)
            .collect();
        // Probe marginal: ρᴱ[e][e'] = Σₐ ψ[a·p+e] ψ̄[a·p+e'].
        let rho_e = CMatrix::from_fn(probe_dim, probe_dim, |e, e2| {
            (0..2)
                .map(|a| psi[a * probe_dim + e] * psi[a * probe_dim + e2].conj())
                .sum()
        });
        // System marginal: ρᴬ[a][a'] = Σₑ ψ[a·p+e] ψ̄[a'·p+e].
        let rho_a = CMatrix::from_fn(2, 2, |a, a2| {
            (0..probe_dim)
                .map(|e| psi[a * probe_dim + e] * psi[a2 * probe_dim + e].conj())
                .sum()
        });
        eve.push(crate::quantum::DensityOperator::new(rho_e.hermitian_part()).ok()?);
        alice.push(rho_a);
    }

    let pe = helstrom(&eq, &eve[0], &eve[1]).ok()?.error_probability;
    let mut fid_sum = 0.0;
    for s in 0..2 {
        let amps = match s {
            0 => pair.state0().amplitudes(),
            _ => pair.state1().amplitudes(),
        };
        fid_sum += vec_inner(amps, &alice[s].apply(amps)).re;
    }
    let d = (1.0 - 0.5 * fid_sum).clamp(0.0, 1.0);
    Some((pe, d))
}

/// The same constrained problem as [`numeric_curve_family`], but over
/// arbitrary isometries into a probe of the given dimension (2–4). The
/// family is a strict subset of this search space, so the analytic curve
/// should never be beaten beyond numerical tolerance.
pub fn numeric_curve_general(
    pair: &PurePair,
    probe_dim: usize,
    d_grid: &[f64],
    cfg: &OptimizerConfig,
) -> Result<Vec<NumericCurvePoint>> {
    cfg.validate()?;
    if !(2..=4).contains(&probe_dim) {
        return Err(Error::InvalidInput(format!(
            "probe dimension {probe_dim} outside the supported range 2..=4"
        )));
    }
    let d0 = crate::tradeoff::d_zero(pair.s_overlap());
    for &d in d_grid {
        if !((0.0 - 1e-12)..=(d0 + 1e-12)).contains(&d) {
            return Err(Error::InvalidInput(format!(
                "target disturbance {d} outside [0, {d0}]"
            )));
        }
    }
    let dim = 8 * probe_dim;
    let lo = vec![-1.0; dim];
    let hi = vec![1.0; dim];

    // Degenerate parameterizations get a large finite objective so the
    // simplex backs away from them smoothly.
    let objective = move |x: &[f64]| match general_interaction_eval(pair, probe_dim, x) {
        Some((pe, _)) => pe,
        None => 10.0,
    };
    let constraint = move |x: &[f64]| match general_interaction_eval(pair, probe_dim, x) {
        Some((_, d)) => d,
        None => 10.0,
    };

    Ok(d_grid
        .iter()
        .enumerate()
        .map(|(i, &d)| {
            let best = constrained_multistart(
                &objective,
                &constraint,
                d,
                &lo,
                &hi,
                cfg,
                1000 + i as u64,
            );
            NumericCurvePoint {
                d_target: d,
                d_achieved: best.constraint,
                pe: best.objective,
                converged: (best.constraint - d).abs() <= cfg.constraint_tolerance,
                params: best.x,
            }
        })
        .collect())
}

/// Does any searched point undercut the analytic curve by more than `tol`?
///
/// The analytic curve should be a lower envelope of everything the searches
/// find; a `true` here means either a numerical artifact or a genuine
/// counterexample, and deserves attention either way.
pub fn beats_analytic_curve(points: &[NumericCurvePoint], pair: &PurePair, tol: f64) -> bool {
    let d0 = crate::tradeoff::d_zero(pair.s_overlap());
    points.iter().any(|pt| {
        match crate::tradeoff::pe_opt(pt.d_achieved.clamp(0.0, d0), pair) {
            Ok(reference) => pt.pe < reference - tol,
            Err(_) => false,
        }
    })
}

/// Residuals of the two stationarity conditions for the constrained
/// variation, r₁ = D_λG_φ − D_φG_λ and r₂ = D_θG_φ − D_φG_θ, with partials
/// taken by central finite differences (step 1e-5) on the closed forms.
pub fn stationarity_residuals(pair: &PurePair, p: &ProbeParams) -> (f64, f64) {
    const H: f64 = 1e-5;
    let d_of = |l: f64, t: f64, f: f64| disturbance_closed(pair, &ProbeParams::new(l, t, f));
    let g_of = |l: f64, t: f64, f: f64| info_g(&ProbeParams::new(l, t, f));

    let d_l = (d_of(p.lambda + H, p.theta, p.phi) - d_of(p.lambda - H, p.theta, p.phi)) / (2.0 * H);
    let d_t = (d_of(p.lambda, p.theta + H, p.phi) - d_of(p.lambda, p.theta - H, p.phi)) / (2.0 * H);
    let d_f = (d_of(p.lambda, p.theta, p.phi + H) - d_of(p.lambda, p.theta, p.phi - H)) / (2.0 * H);
    let g_l = (g_of(p.lambda + H, p.theta, p.phi) - g_of(p.lambda - H, p.theta, p.phi)) / (2.0 * H);
    let g_t = (g_of(p.lambda, p.theta + H, p.phi) - g_of(p.lambda, p.theta - H, p.phi)) / (2.0 * H);
    let g_f = (g_of(p.lambda, p.theta, p.phi + H) - g_of(p.lambda, p.theta, p.phi - H)) / (2.0 * H);

    (d_l * g_f - d_f * g_l, d_t * g_f - d_f * g_t)
}

/// Scalar tradeoff bound ℬ = min over the probe family of a combining
/// figure of merit applied to (Pₑ, D). The combiner must be bounded below
/// on [0, ½] × [0, 1].
pub fn scalar_bound(
    pair: &PurePair,
    combiner: impl Fn(f64, f64) -> f64 + Sync,
    cfg: &OptimizerConfig,
) -> Result<f64> {
    cfg.validate()?;
    let lo = [-std::f64::consts::FRAC_PI_2, -std::f64::consts::FRAC_PI_2, -std::f64::consts::PI];
    let hi = [std::f64::consts::FRAC_PI_2, std::f64::consts::FRAC_PI_2, std::f64::consts::PI];
    let objective = |x: &[f64]| {
        let p = ProbeParams::new(x[0], x[1], x[2]);
        combiner(pe_closed(pair, &p), disturbance_closed(pair, &p))
    };
    // No constraint: reuse the penalized driver with a constant constraint.
    let constraint = |_: &[f64]| 0.0;
    let best = constrained_multistart(&objective, &constraint, 0.0, &lo, &hi, cfg, 9000);
    Ok(best.objective)
}
