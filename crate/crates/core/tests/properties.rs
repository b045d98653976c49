//! Property tests for the crate's standing invariants.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qtradeoff::eavesdrop::disturbance_avg_fidelity;
use qtradeoff::linalg::{
    herm_eig, op_abs, partial_trace, psd_sqrt, tensor_product, trace_norm, CMatrix, Subsystem,
};
use qtradeoff::measures::{
    error_prob_classical, helstrom, holevo_bound, kolmogorov_distance, measurement_pair,
    min_overlap, mutual_information, overlap_classical, PriorPair,
};
use qtradeoff::quantum::{apply_channel, channel_from_unitary};
use qtradeoff::sampling;
use qtradeoff::tradeoff::{
    alice_state_direct, d_zero, disturbance_closed, eve_state_direct, g_opt, pe_closed, pe_opt,
    ProbeParams, PurePair,
};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn eig_reconstructs_and_is_orthonormal(seed in any::<u64>(), n in 2usize..7) {
        let m = sampling::random_hermitian(n, &mut rng(seed));
        let eig = herm_eig(&m).unwrap();
        prop_assert!(eig.reconstruct().max_abs_diff(&m) < 1e-10);
        let gram = &eig.vectors.adjoint() * &eig.vectors;
        prop_assert!(gram.max_abs_diff(&CMatrix::identity(n)) < 1e-10);
        prop_assert!(trace_norm(&m).unwrap() + 1e-12 >= m.trace().re.abs());
    }

    #[test]
    fn partial_trace_inverts_tensor_product(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = sampling::random_hermitian(3, &mut r);
        let b = sampling::random_hermitian(2, &mut r);
        let joint = tensor_product(&a, &b);
        let back = partial_trace(&joint, 3, 2, Subsystem::A).unwrap();
        prop_assert!(back.max_abs_diff(&a.scaled(b.trace())) < 1e-12);
    }

    #[test]
    fn spectral_functions_respect_unitary_conjugation(seed in any::<u64>()) {
        let mut r = rng(seed);
        let u = sampling::random_unitary(3, &mut r);
        let p = sampling::random_psd(3, &mut r);
        let conj = (&(&u * &p) * &u.adjoint()).hermitian_part();
        let lhs = psd_sqrt(&conj).unwrap();
        let rhs = &(&u * &psd_sqrt(&p).unwrap()) * &u.adjoint();
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-9);

        let h = sampling::random_hermitian(3, &mut r);
        let hconj = (&(&u * &h) * &u.adjoint()).hermitian_part();
        let labs = op_abs(&hconj).unwrap();
        let rabs = &(&u * &op_abs(&h).unwrap()) * &u.adjoint();
        prop_assert!(labs.max_abs_diff(&rabs) < 1e-9);
    }

    #[test]
    fn kraus_channel_reproduces_joint_evolution(seed in any::<u64>()) {
        let mut r = rng(seed);
        let u = sampling::random_unitary(6, &mut r);
        let probe = sampling::random_density(3, &mut r);
        let rho = sampling::random_density(2, &mut r);
        let ch = channel_from_unitary(&u, &probe).unwrap();
        let via_kraus = apply_channel(&ch, &rho).unwrap();
        let joint = tensor_product(rho.matrix(), probe.matrix());
        let direct = partial_trace(&(&(&u * &joint) * &u.adjoint()), 2, 3, Subsystem::A).unwrap();
        prop_assert!(via_kraus.matrix().max_abs_diff(&direct) < 1e-10);
    }

    #[test]
    fn quantum_optima_dominate_measured_statistics(seed in any::<u64>()) {
        let mut r = rng(seed);
        let eq = PriorPair::equal();
        let rho0 = sampling::random_density(3, &mut r);
        let rho1 = sampling::random_density(3, &mut r);
        let povm = sampling::random_povm(3, 4, &mut r);
        let (p0, p1) = measurement_pair(&povm, &rho0, &rho1).unwrap();

        prop_assert!(overlap_classical(&p0, &p1).unwrap() >= min_overlap(&rho0, &rho1).unwrap() - 1e-9);
        prop_assert!(
            error_prob_classical(&eq, &p0, &p1).unwrap()
                >= helstrom(&eq, &rho0, &rho1).unwrap().error_probability - 1e-9
        );
        prop_assert!(
            mutual_information(&eq, &p0, &p1).unwrap() <= holevo_bound(&eq, &rho0, &rho1).unwrap() + 1e-9
        );
    }

    #[test]
    fn error_and_kolmogorov_partition_one_half(seed in any::<u64>(), n in 2usize..6) {
        let mut r = rng(seed);
        let eq = PriorPair::equal();
        let p0 = sampling::random_distribution(n, &mut r);
        let p1 = sampling::random_distribution(n, &mut r);
        let e = error_prob_classical(&eq, &p0, &p1).unwrap();
        let k = kolmogorov_distance(&eq, &p0, &p1).unwrap();
        prop_assert!((e + k - 0.5).abs() < 1e-12);
    }

    #[test]
    fn probe_unitarity_identities_hold_everywhere(
        lambda in -7.0f64..7.0,
        theta in -7.0f64..7.0,
        phi in -7.0f64..7.0,
    ) {
        let [x1, x2, x3, x4, x5] = ProbeParams::new(lambda, theta, phi).xs();
        prop_assert!((x1 * x1 + x2 * x2 + x3 * x3 + x4 * x4 + x5 * x5 - 1.0).abs() < 1e-12);
        prop_assert!((x1 * x5 + x2 * x4).abs() < 1e-12);
    }

    #[test]
    fn closed_forms_track_direct_construction(
        alpha in 0.01f64..0.77,
        lambda in -3.2f64..3.2,
        theta in -3.2f64..3.2,
        phi in -3.2f64..3.2,
    ) {
        let pair = PurePair::new(alpha);
        let p = ProbeParams::new(lambda, theta, phi);
        let eq = PriorPair::equal();

        let e0 = eve_state_direct(&pair, &p, 0);
        let e1 = eve_state_direct(&pair, &p, 1);
        let h = helstrom(&eq, &e0, &e1).unwrap().error_probability;
        prop_assert!((h - pe_closed(&pair, &p)).abs() < 1e-9);

        let a0 = alice_state_direct(&pair, &p, 0);
        let a1 = alice_state_direct(&pair, &p, 1);
        let d = disturbance_avg_fidelity(&pair.density(0), &pair.density(1), &a0, &a1).unwrap();
        prop_assert!((d - disturbance_closed(&pair, &p)).abs() < 1e-9);
    }

    #[test]
    fn curve_is_monotone_and_bounded(
        alpha in 0.05f64..0.73,
        t0 in 0.0f64..1.0,
        t1 in 0.0f64..1.0,
    ) {
        let pair = PurePair::new(alpha);
        let d0 = d_zero(pair.s_overlap());
        let (lo, hi) = if t0 <= t1 { (t0, t1) } else { (t1, t0) };
        let pe_lo = pe_opt(lo * d0, &pair).unwrap();
        let pe_hi = pe_opt(hi * d0, &pair).unwrap();
        // Nonincreasing in d, capped by the guessing limit, floored by the
        // unconstrained Helstrom error.
        prop_assert!(pe_hi <= pe_lo + 1e-12);
        prop_assert!(pe_lo <= 0.5 + 1e-12);
        let floor = pe_opt(d0, &pair).unwrap();
        prop_assert!(pe_hi + 1e-12 >= floor);
        // g stays inside [0, 1] across the whole admissible range.
        let g = g_opt(hi * d0, pair.s_overlap()).unwrap();
        prop_assert!((-1e-12..=1.0 + 1e-12).contains(&g));
    }
}
