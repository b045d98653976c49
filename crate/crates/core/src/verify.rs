//! Runtime invariant suites.
//!
//! Each module's invariants are packaged as named checks that report the
//! worst observed residual against a fixed bound, so a regression anywhere
//! in the numerical stack is caught by `qtradeoff verify` without rebuilding
//! the test suite. All randomness is derived from the caller's seed.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::broadcast::{
    block_counterexample, broadcast_commuting, clone_check, noncommuting_test_pair,
    search_broadcaster, BlockStatePair,
};
use crate::eavesdrop::{
    disturbance_avg_fidelity, disturbance_entanglement, disturbance_guessing,
    entanglement_fidelity, entanglement_fidelity_purified, run_interaction,
};
use crate::error::{Error, Result};
use crate::linalg::{herm_eig, op_abs, partial_trace, psd_sqrt, tensor_product, CMatrix, Subsystem};
use crate::measures::{
    error_prob_classical, helstrom, holevo_bound, measurement_pair, min_overlap,
    mutual_information, overlap_classical, overlap_optimal_measurement,
    qubit_projective_brute_force, kolmogorov_distance, PriorPair,
};
use crate::optimize::{numeric_curve_family, stationarity_residuals, OptimizerConfig};
use crate::quantum::{apply_channel, channel_from_unitary, povm_probabilities, KrausChannel, Povm};
use crate::sampling;
use crate::tradeoff::{
    alice_state_closed, alice_state_direct, d_zero, disturbance_closed, eve_state_closed,
    eve_state_direct, pe_closed, pe_opt, ProbeParams, PurePair,
};

/// One named invariant check: passes when `worst <= tolerance`.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub tolerance: f64,
    pub worst: f64,
    pub passed: bool,
}

fn check(name: &str, tolerance: f64, worst: f64) -> CheckResult {
    CheckResult {
        name: name.to_string(),
        tolerance,
        worst,
        passed: worst <= tolerance,
    }
}

/// All checks of one suite.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// The suites `run_suite` understands, besides `all`.
pub const SUITES: [&str; 7] = [
    "linalg",
    "quantum",
    "measures",
    "eavesdrop",
    "tradeoff",
    "optimize",
    "broadcast",
];

/// Run one module's invariant suite with the given seed.
pub fn run_suite(name: &str, seed: u64) -> Result<SuiteReport> {
    let checks = match name {
        "linalg" => linalg_checks(seed),
        "quantum" => quantum_checks(seed),
        "measures" => measures_checks(seed),
        "eavesdrop" => eavesdrop_checks(seed),
        "tradeoff" => tradeoff_checks(),
        "optimize" => optimize_checks(seed),
        "broadcast" => broadcast_checks(seed),
        other => {
            return Err(Error::InvalidInput(format!(
                "unknown suite '{other}'; expected one of {SUITES:?} or 'all'"
            )))
        }
    };
    Ok(SuiteReport {
        suite: name.to_string(),
        seed,
        checks,
    })
}

/// Run one suite, or every suite for `all`.
pub fn run_suites(name: &str, seed: u64) -> Result<Vec<SuiteReport>> {
    if name == "all" {
        SUITES.iter().map(|s| run_suite(s, seed)).collect()
    } else {
        Ok(vec![run_suite(name, seed)?])
    }
}

fn rng_for(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

// ---------------------------------------------------------------------------
// linalg
// ---------------------------------------------------------------------------

fn linalg_checks(seed: u64) -> Vec<CheckResult> {
    use rand::Rng;
    let mut rng = rng_for(seed, 1);
    let mut worst_recon = 0.0f64;
    let mut worst_ortho = 0.0f64;
    let mut worst_trace = 0.0f64;
    for _ in 0..30 {
        let n = rng.gen_range(2..=8);
        let m = sampling::random_hermitian(n, &mut rng);
        let eig = herm_eig(&m).expect("random Hermitian");
        worst_recon = worst_recon.max(eig.reconstruct().max_abs_diff(&m));
        let gram = &eig.vectors.adjoint() * &eig.vectors;
        worst_ortho = worst_ortho.max(gram.max_abs_diff(&CMatrix::identity(n)));
        let tn: f64 = eig.values.iter().map(|x| x.abs()).sum();
        worst_trace = worst_trace.max(m.trace().re.abs() - tn);
    }

    let mut worst_pt = 0.0f64;
    for _ in 0..20 {
        let a = sampling::random_hermitian(3, &mut rng);
        let b = sampling::random_hermitian(2, &mut rng);
        let joint = tensor_product(&a, &b);
        let reduced = partial_trace(&joint, 3, 2, Subsystem::A).expect("dims agree");
        let expect = a.scaled(b.trace());
        worst_pt = worst_pt.max(reduced.max_abs_diff(&expect));
    }

    let mut worst_conj = 0.0f64;
    for _ in 0..10 {
        let u = sampling::random_unitary(3, &mut rng);
        let p = sampling::random_psd(3, &mut rng);
        let lhs = psd_sqrt(&(&(&u * &p) * &u.adjoint()).hermitian_part()).expect("psd");
        let rhs = &(&u * &psd_sqrt(&p).expect("psd")) * &u.adjoint();
        worst_conj = worst_conj.max(lhs.max_abs_diff(&rhs));
        let h = sampling::random_hermitian(3, &mut rng);
        let labs = op_abs(&(&(&u * &h) * &u.adjoint()).hermitian_part()).expect("hermitian");
        let rabs = &(&u * &op_abs(&h).expect("hermitian")) * &u.adjoint();
        worst_conj = worst_conj.max(labs.max_abs_diff(&rabs));
    }

    vec![
        check("linalg/eig-reconstruction", 1e-10, worst_recon),
        check("linalg/eig-orthonormality", 1e-10, worst_ortho),
        check("linalg/trace-norm-dominates-trace", 1e-12, worst_trace),
        check("linalg/partial-trace-of-product", 1e-12, worst_pt),
        check("linalg/spectral-fn-unitary-conjugation", 1e-9, worst_conj),
    ]
}

// ---------------------------------------------------------------------------
// quantum
// ---------------------------------------------------------------------------

fn quantum_checks(seed: u64) -> Vec<CheckResult> {
    let mut rng = rng_for(seed, 2);

    let mut worst_kraus = 0.0f64;
    for _ in 0..50 {
        let u = sampling::random_unitary(6, &mut rng);
        let probe = sampling::random_density(3, &mut rng);
        let rho = sampling::random_density(2, &mut rng);
        let ch = channel_from_unitary(&u, &probe).expect("valid unitary");
        let via_kraus = apply_channel(&ch, &rho).expect("valid channel");
        let joint = tensor_product(rho.matrix(), probe.matrix());
        let evolved = &(&u * &joint) * &u.adjoint();
        let direct = partial_trace(&evolved, 2, 3, Subsystem::A).expect("dims agree");
        worst_kraus = worst_kraus.max(via_kraus.matrix().max_abs_diff(&direct));
    }

    let mut worst_prob = 0.0f64;
    for _ in 0..30 {
        let rho = sampling::random_density(3, &mut rng);
        let povm = sampling::random_povm(3, 5, &mut rng);
        let p = povm_probabilities(&rho, &povm).expect("dims agree");
        worst_prob = worst_prob.max((p.iter().sum::<f64>() - 1.0).abs());
        worst_prob = worst_prob.max(-p.iter().fold(f64::INFINITY, |a, &b| a.min(b)).min(0.0));
    }

    let mut worst_purity = 0.0f64;
    for _ in 0..30 {
        let u = sampling::random_unitary(3, &mut rng);
        let rho = sampling::random_density(3, &mut rng);
        let ch = KrausChannel::new(vec![u]).expect("unitary channel");
        let out = apply_channel(&ch, &rho).expect("valid channel");
        worst_purity = worst_purity.max((out.purity() - rho.purity()).abs());
    }

    vec![
        check("quantum/kraus-vs-joint-evolution", 1e-10, worst_kraus),
        check("quantum/povm-probabilities-normalized", 1e-10, worst_prob),
        check("quantum/unitary-channel-preserves-purity", 1e-10, worst_purity),
    ]
}

// ---------------------------------------------------------------------------
// measures
// ---------------------------------------------------------------------------

fn measures_checks(seed: u64) -> Vec<CheckResult> {
    let mut rng = rng_for(seed, 3);
    let eq = PriorPair::equal();

    let mut worst_overlap = f64::NEG_INFINITY;
    let mut worst_error = f64::NEG_INFINITY;
    let mut worst_info = f64::NEG_INFINITY;
    for _ in 0..100 {
        let rho0 = sampling::random_density(3, &mut rng);
        let rho1 = sampling::random_density(3, &mut rng);
        let povm = sampling::random_povm(3, 4, &mut rng);
        let (p0, p1) = measurement_pair(&povm, &rho0, &rho1).expect("dims agree");
        let b_cl = overlap_classical(&p0, &p1).expect("distributions");
        worst_overlap = worst_overlap.max(min_overlap(&rho0, &rho1).expect("dims") - b_cl);
        let e_cl = error_prob_classical(&eq, &p0, &p1).expect("distributions");
        let h = helstrom(&eq, &rho0, &rho1).expect("dims").error_probability;
        worst_error = worst_error.max(h - e_cl);
        let info = mutual_information(&eq, &p0, &p1).expect("distributions");
        worst_info = worst_info.max(info - holevo_bound(&eq, &rho0, &rho1).expect("dims"));
    }

    let mut worst_sym = 0.0f64;
    for _ in 0..30 {
        let a = sampling::random_density(3, &mut rng);
        let b = sampling::random_density(3, &mut rng);
        worst_sym = worst_sym
            .max((min_overlap(&a, &b).expect("dims") - min_overlap(&b, &a).expect("dims")).abs());
    }

    let mut worst_half = 0.0f64;
    for _ in 0..50 {
        let p0 = sampling::random_distribution(5, &mut rng);
        let p1 = sampling::random_distribution(5, &mut rng);
        let e = error_prob_classical(&eq, &p0, &p1).expect("distributions");
        let k = kolmogorov_distance(&eq, &p0, &p1).expect("distributions");
        worst_half = worst_half.max((e + k - 0.5).abs());
    }

    // Brute force over 720 Bloch-angle projective measurements never beats
    // the closed form by more than the bound.
    let mut worst_brute = f64::NEG_INFINITY;
    for _ in 0..10 {
        let rho0 = sampling::random_density(2, &mut rng);
        let rho1 = sampling::random_density(2, &mut rng);
        let opt = helstrom(&eq, &rho0, &rho1).expect("dims").error_probability;
        let brute = qubit_projective_brute_force(&eq, &rho0, &rho1, 36, 20).expect("qubits");
        worst_brute = worst_brute.max(opt - brute);
    }

    let mut worst_overlap_meas = 0.0f64;
    let mut tried = 0;
    while tried < 20 {
        let rho0 = sampling::random_density(2, &mut rng);
        let rho1 = sampling::random_density(2, &mut rng);
        let m = match overlap_optimal_measurement(&rho0, &rho1) {
            Ok(m) => m,
            Err(_) => continue, // nearly singular draw; try another
        };
        tried += 1;
        let basis = herm_eig(&m).expect("Hermitian").vectors;
        let povm = Povm::projective(&basis).expect("unitary basis");
        let (p0, p1) = measurement_pair(&povm, &rho0, &rho1).expect("dims agree");
        let achieved = overlap_classical(&p0, &p1).expect("distributions");
        worst_overlap_meas =
            worst_overlap_meas.max((achieved - min_overlap(&rho0, &rho1).expect("dims")).abs());
    }

    // Commuting pairs measured in the common eigenbasis achieve the Holevo
    // bound exactly.
    let mut worst_holevo_eq = 0.0f64;
    for _ in 0..20 {
        let (rho0, rho1) = sampling::random_commuting_pair(3, &mut rng);
        let mix = (&rho0.matrix().scaled_re(1.0) + &rho1.matrix().scaled_re(0.618)).hermitian_part();
        let basis = herm_eig(&mix).expect("Hermitian").vectors;
        let povm = Povm::projective(&basis).expect("unitary basis");
        let (p0, p1) = measurement_pair(&povm, &rho0, &rho1).expect("dims agree");
        let info = mutual_information(&eq, &p0, &p1).expect("distributions");
        let bound = holevo_bound(&eq, &rho0, &rho1).expect("dims");
        worst_holevo_eq = worst_holevo_eq.max((info - bound).abs());
    }

    vec![
        check("measures/overlap-data-processing", 1e-9, worst_overlap),
        check("measures/error-data-processing", 1e-9, worst_error),
        check("measures/information-data-processing", 1e-9, worst_info),
        check("measures/min-overlap-symmetry", 1e-9, worst_sym),
        check("measures/error-plus-kolmogorov-is-half", 1e-12, worst_half),
        check("measures/helstrom-vs-brute-force", 1e-6, worst_brute),
        check("measures/overlap-measurement-achieves-min", 1e-8, worst_overlap_meas),
        check("measures/holevo-equality-for-commuting", 1e-9, worst_holevo_eq),
    ]
}

// ---------------------------------------------------------------------------
// eavesdrop
// ---------------------------------------------------------------------------

fn eavesdrop_checks(seed: u64) -> Vec<CheckResult> {
    let mut rng = rng_for(seed, 4);

    let mut worst_identity = 0.0f64;
    for _ in 0..10 {
        let rho0 = sampling::random_density(2, &mut rng);
        let rho1 = sampling::random_density(2, &mut rng);
        let probe = sampling::random_density(2, &mut rng);
        let out = run_interaction(&rho0, &rho1, &probe, &CMatrix::identity(4))
            .expect("identity is unitary");
        let d = disturbance_avg_fidelity(&rho0, &rho1, &out.alice[0], &out.alice[1])
            .expect("dims agree");
        let dg = disturbance_guessing(&rho0, &rho1, &out.alice[0], &out.alice[1])
            .expect("dims agree");
        let ds = disturbance_entanglement(&rho0, &rho1, &out.channel).expect("dims agree");
        let f0 = entanglement_fidelity(&rho0, &out.channel).expect("dims agree");
        worst_identity = worst_identity
            .max(d)
            .max(dg - 0.5)
            .max(ds)
            .max(1.0 - f0);
    }

    let mut worst_purif = 0.0f64;
    for _ in 0..10 {
        let rho = sampling::random_density(3, &mut rng);
        let u = sampling::random_unitary(6, &mut rng);
        let probe = sampling::random_density(2, &mut rng);
        let ch = channel_from_unitary(&u, &probe).expect("valid unitary");
        let fs = entanglement_fidelity(&rho, &ch).expect("dims agree");
        let f1 = entanglement_fidelity_purified(&rho, &ch, None).expect("dims agree");
        let rot = sampling::random_unitary(3, &mut rng);
        let f2 = entanglement_fidelity_purified(&rho, &ch, Some(&rot)).expect("dims agree");
        worst_purif = worst_purif.max((fs - f1).abs()).max((fs - f2).abs());
    }

    let mut worst_hierarchy = f64::NEG_INFINITY;
    for _ in 0..100 {
        let rho = sampling::random_density(2, &mut rng);
        let u = sampling::random_unitary(4, &mut rng);
        let probe = sampling::random_density(2, &mut rng);
        let ch = channel_from_unitary(&u, &probe).expect("valid unitary");
        let fs = entanglement_fidelity(&rho, &ch).expect("dims agree");
        let out = apply_channel(&ch, &rho).expect("valid channel");
        let f = crate::measures::fidelity(&rho, &out).expect("dims agree");
        worst_hierarchy = worst_hierarchy.max(fs - f);
    }

    vec![
        check("eavesdrop/identity-interaction-no-disturbance", 1e-10, worst_identity),
        check("eavesdrop/entanglement-fidelity-purification-independent", 1e-9, worst_purif),
        check("eavesdrop/entanglement-fidelity-below-fidelity", 1e-10, worst_hierarchy),
    ]
}

// ---------------------------------------------------------------------------
// tradeoff
// ---------------------------------------------------------------------------

/// The 10×10×10 probe grid crossed with 5 values of α used by the
/// closed-form equivalence checks (5000 points).
fn tradeoff_grid() -> (Vec<ProbeParams>, Vec<f64>) {
    let axis = |n: usize, lo: f64, hi: f64| -> Vec<f64> {
        (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
    };
    // The λ axis hits ±π/2 exactly so the zero-disturbance slice is present
    // and the no-information-without-disturbance check is not vacuous.
    let lambdas = axis(10, -std::f64::consts::FRAC_PI_2, std::f64::consts::FRAC_PI_2);
    let thetas = axis(10, -1.5, 1.4);
    let phis = axis(10, -3.0, 3.1);
    let mut params = Vec::with_capacity(1000);
    for &l in &lambdas {
        for &t in &thetas {
            for &f in &phis {
                params.push(ProbeParams::new(l, t, f));
            }
        }
    }
    let alphas = vec![0.08, 0.2, std::f64::consts::FRAC_PI_8, 0.55, 0.72];
    (params, alphas)
}

/// Worst |closed − direct| residuals over the full grid, parameterized by
/// the closed forms so that a deliberately corrupted formula is caught
/// (exercised by the fault-injection test).
pub fn closed_vs_direct_residuals(
    pe_fn: &dyn Fn(&PurePair, &ProbeParams) -> f64,
    disturbance_fn: &dyn Fn(&PurePair, &ProbeParams) -> f64,
) -> (f64, f64) {
    let (params, alphas) = tradeoff_grid();
    let eq = PriorPair::equal();
    let mut worst_pe = 0.0f64;
    let mut worst_d = 0.0f64;
    for &alpha in &alphas {
        let pair = PurePair::new(alpha);
        let rho0 = pair.density(0);
        let rho1 = pair.density(1);
        for p in &params {
            let e0 = eve_state_direct(&pair, p, 0);
            let e1 = eve_state_direct(&pair, p, 1);
            let h = helstrom(&eq, &e0, &e1).expect("3-dim states").error_probability;
            worst_pe = worst_pe.max((h - pe_fn(&pair, p)).abs());

            let a0 = alice_state_direct(&pair, p, 0);
            let a1 = alice_state_direct(&pair, p, 1);
            let d = disturbance_avg_fidelity(&rho0, &rho1, &a0, &a1).expect("qubits");
            worst_d = worst_d.max((d - disturbance_fn(&pair, p)).abs());
        }
    }
    (worst_pe, worst_d)
}

fn tradeoff_checks() -> Vec<CheckResult> {
    let (worst_pe, worst_d) = closed_vs_direct_residuals(&pe_closed, &disturbance_closed);

    let (params, alphas) = tradeoff_grid();
    let mut worst_elements = 0.0f64;
    let mut worst_noinfo = f64::NEG_INFINITY;
    let mut worst_unitarity = 0.0f64;
    for &alpha in &alphas {
        let pair = PurePair::new(alpha);
        let interior = alpha > 0.05 && alpha < std::f64::consts::FRAC_PI_4 - 0.05;
        for p in &params {
            for s in 0..2 {
                worst_elements = worst_elements.max(
                    eve_state_direct(&pair, p, s)
                        .matrix()
                        .max_abs_diff(eve_state_closed(&pair, p, s).matrix()),
                );
                worst_elements = worst_elements.max(
                    alice_state_direct(&pair, p, s)
                        .matrix()
                        .max_abs_diff(alice_state_closed(&pair, p, s).matrix()),
                );
            }
            if interior && disturbance_closed(&pair, p) < 1e-9 {
                worst_noinfo = worst_noinfo.max(0.5 - pe_closed(&pair, p));
            }
            let [x1, x2, x3, x4, x5] = p.xs();
            worst_unitarity = worst_unitarity
                .max((x1 * x1 + x2 * x2 + x3 * x3 + x4 * x4 + x5 * x5 - 1.0).abs())
                .max((x1 * x5 + x2 * x4).abs());
        }
    }

    vec![
        check("tradeoff/closed-vs-direct-error-probability", 1e-9, worst_pe),
        check("tradeoff/closed-vs-direct-disturbance", 1e-9, worst_d),
        check("tradeoff/closed-form-matrix-elements", 1e-10, worst_elements),
        check("tradeoff/no-information-without-disturbance", 1e-6, worst_noinfo),
        check("tradeoff/probe-unitarity-identities", 1e-12, worst_unitarity),
    ]
}

// ---------------------------------------------------------------------------
// optimize
// ---------------------------------------------------------------------------

fn optimize_checks(seed: u64) -> Vec<CheckResult> {
    let pair = crate::tradeoff::reference_pair();
    let d0 = d_zero(pair.s_overlap());
    let cfg = OptimizerConfig::default().with_seed(seed);
    let grid = [0.35 * d0, 0.8 * d0];

    let run1 = numeric_curve_family(&pair, &grid, &cfg).expect("valid grid");
    let run2 = numeric_curve_family(&pair, &grid, &cfg).expect("valid grid");
    let mut worst_repro = 0.0f64;
    for (a, b) in run1.iter().zip(&run2) {
        if a.pe.to_bits() != b.pe.to_bits()
            || a.d_achieved.to_bits() != b.d_achieved.to_bits()
            || a.params != b.params
        {
            worst_repro = 1.0;
        }
    }

    let mut worst_envelope = f64::NEG_INFINITY;
    let mut worst_self = 0.0f64;
    for pt in &run1 {
        let reference = pe_opt(pt.d_achieved.clamp(0.0, d0), &pair).expect("in range");
        worst_envelope = worst_envelope.max(reference - pt.pe);
        let p = ProbeParams::new(pt.params[0], pt.params[1], pt.params[2]);
        worst_self = worst_self.max((disturbance_closed(&pair, &p) - pt.d_achieved).abs());
    }

    // Stationarity at the special parameter slices.
    let mut worst_stationary = 0.0f64;
    let angles: Vec<f64> = (0..7).map(|i| -1.4 + i as f64 * 0.45).collect();
    for &t in &angles {
        for &f in &angles {
            let (r1, _) = stationarity_residuals(&pair, &ProbeParams::new(0.0, t, f));
            worst_stationary = worst_stationary.max(r1.abs());
            let p = ProbeParams::new(std::f64::consts::FRAC_PI_2, t, f);
            let (r1c, r2c) = stationarity_residuals(&pair, &p);
            worst_stationary = worst_stationary.max(r1c.abs()).max(r2c.abs());
        }
    }

    vec![
        check("optimize/bit-reproducible-under-fixed-seed", 0.5, worst_repro),
        check("optimize/family-never-below-analytic-curve", 1e-3, worst_envelope),
        check("optimize/self-consistent-achieved-disturbance", 1e-9, worst_self),
        check("optimize/stationarity-at-special-slices", 1e-5, worst_stationary),
    ]
}

// ---------------------------------------------------------------------------
// broadcast
// ---------------------------------------------------------------------------

fn broadcast_checks(seed: u64) -> Vec<CheckResult> {
    let mut rng = rng_for(seed, 5);

    let mut worst_commuting = 0.0f64;
    for _ in 0..20 {
        let (a, b) = sampling::random_commuting_pair(2, &mut rng);
        let attempt = broadcast_commuting(&a, &b).expect("commuting pair");
        for &e in &attempt.marginal_errors {
            worst_commuting = worst_commuting.max(e);
        }
    }

    let cfg = OptimizerConfig::default().with_seed(seed).with_restarts(64);
    let (rho0, rho1) = noncommuting_test_pair();
    let attempt = search_broadcaster(&rho0, &rho1, 4, &cfg).expect("valid search");
    let broadcast_score = attempt.score;

    let clone_cfg = OptimizerConfig::default().with_seed(seed).with_restarts(32);
    let zero = crate::quantum::PureState::basis(2, 0).projector();
    let plus = crate::quantum::PureState::real_qubit(std::f64::consts::FRAC_PI_4).projector();
    let clone_score = clone_check(&zero, &plus, &clone_cfg).expect("valid search");

    let blocks = BlockStatePair::default_example();
    let counter = block_counterexample(&blocks, &PriorPair::equal()).expect("valid example");

    vec![
        check("broadcast/commuting-marginal-errors", 1e-9, worst_commuting),
        // Evidence-level bounds, not proofs: the searches must never reach
        // a score this close to a perfect broadcast/clone.
        check("broadcast/no-broadcast-score-bound", 1.0 - 1e-3, broadcast_score),
        check("broadcast/no-clone-score-bound", 1.0 - 1e-3, clone_score),
        check("broadcast/block-zero-disturbance", 1e-12, counter.disturbance),
        check(
            "broadcast/block-information-value",
            1e-9,
            (counter.info_bits - 0.531_004_406_410_718_9).abs(),
        ),
    ]
}
