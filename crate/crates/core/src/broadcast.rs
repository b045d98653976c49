//! Broadcasting two mixed states onto two systems at once.
//!
//! Commuting pairs broadcast exactly through a classically correlated state
//! in their common eigenbasis. For noncommuting pairs no channel can do the
//! job; this module gathers desk-scale numerical evidence for that by
//! searching over Stinespring-parameterized channels, and reproduces the
//! block-diagonal example in which information is gained with strictly zero
//! disturbance even though the states cannot be broadcast.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{
    herm_eig, partial_trace, psd_sqrt, tensor_product, trace_norm, vec_inner, vec_norm, CMatrix,
    Subsystem,
};
use crate::measures::{mutual_information, PriorPair};
use crate::optimize::OptimizerConfig;
use crate::quantum::{DensityOperator, PureState};
use crate::simplex::{lds_point, scale_to_box, seed_shift, NelderMead};

/// One attempted broadcast: the joint output per preparation, the four
/// marginal trace distances (tr_E and tr_A against ρ̂ₛ for each s), and the
/// score 1 − max(marginal_errors).
#[derive(Debug, Clone)]
pub struct BroadcastAttempt {
    pub joint: [DensityOperator; 2],
    pub marginal_errors: [f64; 4],
    pub score: f64,
}

fn attempt_from_joints(
    rho0: &DensityOperator,
    rho1: &DensityOperator,
    joints: [DensityOperator; 2],
) -> Result<BroadcastAttempt> {
    let dim = rho0.dim();
    let mut errors = [0.0f64; 4];
    for (s, rho) in [(0, rho0), (1, rho1)] {
        let keep_a = partial_trace(joints[s].matrix(), dim, dim, Subsystem::A)?;
        let keep_e = partial_trace(joints[s].matrix(), dim, dim, Subsystem::E)?;
        errors[2 * s] = 0.5 * trace_norm(&(&keep_a - rho.matrix()).hermitian_part())?;
        errors[2 * s + 1] = 0.5 * trace_norm(&(&keep_e - rho.matrix()).hermitian_part())?;
    }
    let worst = errors.iter().fold(0.0f64, |a, &b| a.max(b));
    Ok(BroadcastAttempt {
        joint: joints,
        marginal_errors: errors,
        score: 1.0 - worst,
    })
}

/// Deterministic "generic" mixing weights for the simultaneous
/// diagonalization; tried in order until both states come out diagonal.
const XI_CANDIDATES: [f64; 6] = [
    0.618_033_988_749_894_9,
    0.414_213_562_373_095_1,
    0.732_050_807_568_877_3,
    0.302_775_637_731_994_6,
    0.561_552_812_808_830_3,
    0.192_582_403_567_252_3,
];

/// Exact broadcast of a commuting pair via the correlated state
/// R̂ₛ = Σᵦ pₛ(b) |b⟩|b⟩⟨b|⟨b| in the simultaneous eigenbasis.
///
/// Noncommuting inputs are rejected. The eigenbasis comes from
/// diagonalizing ρ̂₀ + ξρ̂₁ for a generic ξ, verified to diagonalize both.
pub fn broadcast_commuting(
    rho0: &DensityOperator,
    rho1: &DensityOperator,
) -> Result<BroadcastAttempt> {
    if rho0.dim() != rho1.dim() {
        return Err(Error::DimensionMismatch(format!(
            "state dims {} and {} differ",
            rho0.dim(),
            rho1.dim()
        )));
    }
    let comm = &(rho0.matrix() * rho1.matrix()) - &(rho1.matrix() * rho0.matrix());
    let comm_norm = comm.max_abs();
    if comm_norm >= 1e-10 {
        return Err(Error::NonCommuting(comm_norm));
    }

    let dim = rho0.dim();
    let mut basis = None;
    for &xi in &XI_CANDIDATES {
        let mix = (&rho0.matrix().scaled_re(1.0) + &rho1.matrix().scaled_re(xi)).hermitian_part();
        let eig = herm_eig(&mix)?;
        let v = eig.vectors;
        let diag_err = |rho: &DensityOperator| -> f64 {
            let t = &(&v.adjoint() * rho.matrix()) * &v;
            let mut worst = 0.0f64;
            for i in 0..dim {
                for j in 0..dim {
                    if i != j {
                        worst = worst.max(t.get(i, j).norm());
                    }
                }
            }
            worst
        };
        if diag_err(rho0).max(diag_err(rho1)) < 1e-9 {
            basis = Some(v);
            break;
        }
    }
    let basis = basis.ok_or_else(|| {
        Error::InvalidInput("no generic mixing weight diagonalized both states".into())
    })?;

    let mut joints = Vec::with_capacity(2);
    for rho in [rho0, rho1] {
        let mut joint = CMatrix::zeros(dim * dim, dim * dim);
        for b in 0..dim {
            let col: Vec<Complex64> = (0..dim).map(|i| basis.get(i, b)).collect();
            let p = vec_inner(&col, &rho.matrix().apply(&col)).re.max(0.0);
            if p == 0.0 {
                continue;
            }
            let mut bb = Vec::with_capacity(dim * dim);
            for &a in &col {
                for &e in &col {
                    bb.push(a * e);
                }
            }
            joint = &joint + &CMatrix::outer(&bb, &bb).scaled_re(p);
        }
        joints.push(DensityOperator::new(joint.hermitian_part())?);
    }
    let j1 = joints.pop().expect("two joints");
    let j0 = joints.pop().expect("two joints");
    attempt_from_joints(rho0, rho1, [j0, j1])
}

// ---------------------------------------------------------------------------
// Stinespring-parameterized channel search
// ---------------------------------------------------------------------------

/// Decode `2 * dim_in * (dim_in * env)` reals into the `dim_in` orthonormal
/// columns of an isometry V: C^dim_in → C^(dim_in · env).
fn decode_isometry(params: &[f64], dim_in: usize, env: usize) -> Option<Vec<Vec<Complex64>>> {
    let rows = dim_in * env;
    assert_eq!(params.len(), 2 * rows * dim_in);
    let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(dim_in);
    for c in 0..dim_in {
        let off = 2 * rows * c;
        let mut v: Vec<Complex64> = (0..rows)
            .map(|k| Complex64::new(params[off + 2 * k], params[off + 2 * k + 1]))
            .collect();
        for u in &cols {
            let overlap = vec_inner(u, &v);
            for (z, w) in v.iter_mut().zip(u) {
                *z -= overlap * w;
            }
        }
        let norm = vec_norm(&v);
        if norm < 1e-9 {
            return None;
        }
        for z in &mut v {
            *z /= norm;
        }
        cols.push(v);
    }
    Some(cols)
}

/// Encode isometry columns back into the parameter layout of
/// [`decode_isometry`]. Orthonormal columns round-trip exactly.
fn encode_isometry(cols: &[Vec<Complex64>]) -> Vec<f64> {
    let mut params = Vec::with_capacity(2 * cols.len() * cols[0].len());
    for col in cols {
        for z in col {
            params.push(z.re);
            params.push(z.im);
        }
    }
    params
}

/// ℰ(X) = tr_env(V X V†) for an isometry given by its columns.
fn stinespring_apply(cols: &[Vec<Complex64>], x: &CMatrix, env: usize) -> CMatrix {
    let dim_in = cols.len();
    let dim_out = dim_in; // output space matches the input space
    let rows = dim_in * env;
    // W = V·X, shape rows × dim_in.
    let mut w = vec![Complex64::new(0.0, 0.0); rows * dim_in];
    for (k, col) in cols.iter().enumerate() {
        for y in 0..dim_in {
            let xky = x.get(k, y);
            if xky.norm_sqr() == 0.0 {
                continue;
            }
            for r in 0..rows {
                w[r * dim_in + y] += col[r] * xky;
            }
        }
    }
    // R[o][o'] = Σ_e Σ_y W[(o·env+e), y] · conj(V[(o'·env+e), y]).
    CMatrix::from_fn(dim_out, dim_out, |o, o2| {
        let mut acc = Complex64::new(0.0, 0.0);
        for e in 0..env {
            let r = o * env + e;
            let r2 = o2 * env + e;
            for (y, col) in cols.iter().enumerate() {
                acc += w[r * dim_in + y] * col[r2].conj();
            }
        }
        acc
    })
}

/// Uhlmann fidelity of a raw Hermitian unit-trace matrix against a fixed
/// target whose PSD square root is precomputed.
fn fidelity_against(sqrt_target: &CMatrix, state: &CMatrix) -> f64 {
    let inner = (&(sqrt_target * state) * sqrt_target).hermitian_part();
    match herm_eig(&inner) {
        Ok(eig) => {
            let b: f64 = eig.values.iter().map(|&x| x.max(0.0).sqrt()).sum();
            (b * b).min(1.0)
        }
        Err(_) => 0.0,
    }
}

/// Maximize `score` over isometry parameters by multi-start Nelder–Mead.
/// Deterministic for a fixed seed; `extra_starts` lets callers seed the
/// search with explicitly constructed channels.
fn multistart_max(
    score: &(impl Fn(&[f64]) -> f64 + Sync),
    dim: usize,
    extra_starts: &[Vec<f64>],
    cfg: &OptimizerConfig,
    stream: u64,
) -> (Vec<f64>, f64) {
    let lo = vec![-1.0; dim];
    let hi = vec![1.0; dim];
    let shift = seed_shift(cfg.seed, stream, dim);
    let starts: Vec<Vec<f64>> = extra_starts
        .iter()
        .cloned()
        .chain((0..cfg.restarts).map(|i| scale_to_box(&lds_point(i, &shift), &lo, &hi)))
        .collect();

    let nm = NelderMead::new(cfg.max_iterations, cfg.simplex_tolerance);
    let neg = |x: &[f64]| -score(x);
    let results: Vec<(Vec<f64>, f64)> = starts
        .par_iter()
        .map(|start| {
            let first = nm.minimize(neg, start, 0.3);
            let second = nm.minimize(neg, &first.x, 0.03);
            if second.f < first.f {
                (second.x, -second.f)
            } else {
                (first.x, -first.f)
            }
        })
        .collect();

    let lex = |a: &[f64], b: &[f64]| -> std::cmp::Ordering {
        for (p, q) in a.iter().zip(b) {
            match p.total_cmp(q) {
                std::cmp::Ordering::Equal => continue,
                other => return other,
            }
        }
        std::cmp::Ordering::Equal
    };
    let mut best = results[0].clone();
    for cand in &results[1..] {
        let better = match cand.1.total_cmp(&best.1) {
            std::cmp::Ordering::Greater => true,
            std::cmp::Ordering::Equal => lex(&cand.0, &best.0) == std::cmp::Ordering::Less,
            std::cmp::Ordering::Less => false,
        };
        if better {
            best = cand.clone();
        }
    }
    best
}

/// Canonical measure-and-copy channel in the given orthonormal basis:
/// measure A, prepare the outcome state on E, record everything in the
/// environment. Needs env ≥ dim².
fn measure_copy_start(basis: &CMatrix, env: usize) -> Option<Vec<f64>> {
    let n = basis.rows();
    if env < n * n {
        return None;
    }
    let rows = n * n * env;
    let mut cols = Vec::with_capacity(n * n);
    for a in 0..n {
        for e in 0..n {
            // Input basis state |a⟩|e⟩ maps to Σᵦ v̄ᵦ[a] |vᵦ⟩|vᵦ⟩ ⊗ |χ_{b,e}⟩.
            let mut col = vec![Complex64::new(0.0, 0.0); rows];
            for b in 0..n {
                let vb: Vec<Complex64> = (0..n).map(|i| basis.get(i, b)).collect();
                let amp = vb[a].conj();
                let chi = b * n + e;
                for i in 0..n {
                    for j in 0..n {
                        col[(i * n + j) * env + chi] += amp * vb[i] * vb[j];
                    }
                }
            }
            cols.push(col);
        }
    }
    Some(encode_isometry(&cols))
}

/// Canonical constant-preparation channel: every input goes to the fixed
/// pure joint state, with the input index copied into the environment.
/// Needs env ≥ dim².
fn const_prep_start(target: &[Complex64], env: usize) -> Option<Vec<f64>> {
    let joint = target.len();
    if env < joint {
        return None;
    }
    let rows = joint * env;
    let cols: Vec<Vec<Complex64>> = (0..joint)
        .map(|x| {
            let mut col = vec![Complex64::new(0.0, 0.0); rows];
            for (o, &t) in target.iter().enumerate() {
                col[o * env + x] = t;
            }
            col
        })
        .collect();
    Some(encode_isometry(&cols))
}

/// The generic bases used to seed channel searches.
fn canonical_bases(rho0: &DensityOperator, rho1: &DensityOperator) -> Vec<CMatrix> {
    let mut bases = Vec::new();
    let mix = (&rho0.matrix().scaled_re(1.0) + &rho1.matrix().scaled_re(XI_CANDIDATES[0]))
        .hermitian_part();
    if let Ok(eig) = herm_eig(&mix) {
        bases.push(eig.vectors);
    }
    let gamma = (rho1.matrix() - rho0.matrix()).hermitian_part();
    if let Ok(eig) = herm_eig(&gamma) {
        bases.push(eig.vectors);
    }
    bases
}

/// Designated noncommuting invertible qubit pair for the no-broadcast and
/// no-clone evidence runs: ρ̂ₛ = ½|ψₛ⟩⟨ψₛ| + I/4 with |ψ₀⟩ = |0⟩, |ψ₁⟩ = |+⟩.
pub fn noncommuting_test_pair() -> (DensityOperator, DensityOperator) {
    let quarter = CMatrix::identity(2).scaled_re(0.25);
    let zero = PureState::basis(2, 0).projector();
    let plus = PureState::real_qubit(std::f64::consts::FRAC_PI_4).projector();
    let rho0 = DensityOperator::new((&zero.matrix().scaled_re(0.5) + &quarter).hermitian_part())
        .expect("valid by construction");
    let rho1 = DensityOperator::new((&plus.matrix().scaled_re(0.5) + &quarter).hermitian_part())
        .expect("valid by construction");
    (rho0, rho1)
}

/// Best cloning score max min_s F(ℰ(ρ̂ₛ ⊗ Σ̂), ρ̂ₛ ⊗ ρ̂ₛ) found over channels
/// on A⊗E, Stinespring-parameterized with environment dimension dim².
///
/// The restarts include explicitly constructed measure-and-reprepare and
/// constant-preparation channels, so exactly clonable pairs (identical or
/// orthogonal states) score 1 up to roundoff; for nonorthogonal pairs the
/// returned score is numerical evidence, not a proof, of the no-cloning
/// bound.
pub fn clone_check(
    rho0: &DensityOperator,
    rho1: &DensityOperator,
    cfg: &OptimizerConfig,
) -> Result<f64> {
    cfg.validate()?;
    if rho0.dim() != rho1.dim() {
        return Err(Error::DimensionMismatch(format!(
            "state dims {} and {} differ",
            rho0.dim(),
            rho1.dim()
        )));
    }
    let n = rho0.dim();
    let joint = n * n;
    let env = joint;
    let sigma = PureState::basis(n, 0).projector();
    let inputs = [
        tensor_product(rho0.matrix(), sigma.matrix()),
        tensor_product(rho1.matrix(), sigma.matrix()),
    ];
    let sqrt_targets = [
        psd_sqrt(&tensor_product(rho0.matrix(), rho0.matrix()))?,
        psd_sqrt(&tensor_product(rho1.matrix(), rho1.matrix()))?,
    ];

    let score = move |params: &[f64]| -> f64 {
        match decode_isometry(params, joint, env) {
            Some(cols) => {
                let mut worst = f64::INFINITY;
                for s in 0..2 {
                    let out = stinespring_apply(&cols, &inputs[s], env).hermitian_part();
                    worst = worst.min(fidelity_against(&sqrt_targets[s], &out));
                }
                worst
            }
            None => -1.0,
        }
    };

    let mut starts = Vec::new();
    for basis in canonical_bases(rho0, rho1) {
        if let Some(p) = measure_copy_start(&basis, env) {
            starts.push(p);
        }
    }
    for rho in [rho0, rho1] {
        let eig = herm_eig(rho.matrix())?;
        let top = eig.vector(eig.values.len() - 1);
        let mut target = Vec::with_capacity(joint);
        for &a in &top {
            for &b in &top {
                target.push(a * b);
            }
        }
        if let Some(p) = const_prep_start(&target, env) {
            starts.push(p);
        }
    }

    let dim = 2 * joint * env * joint;
    let (_, best) = multistart_max(&score, dim, &starts, cfg, 31);
    Ok(best)
}

/// Search for a broadcasting channel on A⊗E with the given environment
/// dimension, maximizing the broadcast score. For commuting inputs the
/// seeded measure-and-copy construction already scores 1; for noncommuting
/// inputs the best score found is the no-broadcasting evidence.
pub fn search_broadcaster(
    rho0: &DensityOperator,
    rho1: &DensityOperator,
    env_dim: usize,
    cfg: &OptimizerConfig,
) -> Result<BroadcastAttempt> {
    cfg.validate()?;
    if rho0.dim() != rho1.dim() {
        return Err(Error::DimensionMismatch(format!(
            "state dims {} and {} differ",
            rho0.dim(),
            rho1.dim()
        )));
    }
    if env_dim < 1 {
        return Err(Error::InvalidInput("environment dimension must be at least 1".into()));
    }
    let n = rho0.dim();
    let joint = n * n;
    let sigma = PureState::basis(n, 0).projector();
    let inputs = [
        tensor_product(rho0.matrix(), sigma.matrix()),
        tensor_product(rho1.matrix(), sigma.matrix()),
    ];
    let targets = [rho0.matrix().clone(), rho1.matrix().clone()];

    let score_inputs = inputs.clone();
    let score = move |params: &[f64]| -> f64 {
        match decode_isometry(params, joint, env_dim) {
            Some(cols) => {
                let mut worst = 0.0f64;
                for s in 0..2 {
                    let out = stinespring_apply(&cols, &score_inputs[s], env_dim).hermitian_part();
                    for keep in [Subsystem::A, Subsystem::E] {
                        let marginal = match partial_trace(&out, n, n, keep) {
                            Ok(m) => m,
                            Err(_) => return -1.0,
                        };
                        let diff = (&marginal - &targets[s]).hermitian_part();
                        match trace_norm(&diff) {
                            Ok(t) => worst = worst.max(0.5 * t),
                            Err(_) => return -1.0,
                        }
                    }
                }
                1.0 - worst
            }
            None => -1.0,
        }
    };

    let mut starts = Vec::new();
    for basis in canonical_bases(rho0, rho1) {
        if let Some(p) = measure_copy_start(&basis, env_dim) {
            starts.push(p);
        }
    }

    let dim = 2 * joint * env_dim * joint;
    let (best_params, _) = multistart_max(&score, dim, &starts, cfg, 47);

    let cols = decode_isometry(&best_params, joint, env_dim)
        .ok_or_else(|| Error::InvalidInput("search returned a degenerate channel".into()))?;
    let joints = [
        DensityOperator::new(stinespring_apply(&cols, &inputs[0], env_dim).hermitian_part())?,
        DensityOperator::new(stinespring_apply(&cols, &inputs[1], env_dim).hermitian_part())?,
    ];
    attempt_from_joints(rho0, rho1, joints)
}

// ---------------------------------------------------------------------------
// Block-diagonal counterexample
// ---------------------------------------------------------------------------

/// Two states that are block diagonal in a common basis with identical block
/// structure: per-block weights and per-block normalized states.
#[derive(Debug, Clone)]
pub struct BlockStatePair {
    pub block_dims: Vec<usize>,
    pub weights0: Vec<f64>,
    pub weights1: Vec<f64>,
    pub block_states0: Vec<DensityOperator>,
    pub block_states1: Vec<DensityOperator>,
}

impl BlockStatePair {
    pub fn new(
        block_dims: Vec<usize>,
        weights0: Vec<f64>,
        weights1: Vec<f64>,
        block_states0: Vec<DensityOperator>,
        block_states1: Vec<DensityOperator>,
    ) -> Result<Self> {
        let k = block_dims.len();
        if weights0.len() != k
            || weights1.len() != k
            || block_states0.len() != k
            || block_states1.len() != k
        {
            return Err(Error::DimensionMismatch(
                "weights and block states must match the block count".into(),
            ));
        }
        for w in [&weights0, &weights1] {
            if w.iter().any(|&x| x < 0.0) || (w.iter().sum::<f64>() - 1.0).abs() > 1e-12 {
                return Err(Error::BadDistribution(
                    "block weights must form a probability distribution".into(),
                ));
            }
        }
        for b in 0..k {
            if block_states0[b].dim() != block_dims[b] || block_states1[b].dim() != block_dims[b] {
                return Err(Error::DimensionMismatch(format!(
                    "block {b} states do not match its dimension {}",
                    block_dims[b]
                )));
            }
        }
        Ok(Self {
            block_dims,
            weights0,
            weights1,
            block_states0,
            block_states1,
        })
    }

    /// Two 2×2 blocks holding pure projectors 45° apart, with weights
    /// (0.9, 0.1) against (0.1, 0.9).
    pub fn default_example() -> Self {
        let p0 = PureState::real_qubit(0.0).projector();
        let p1 = PureState::real_qubit(std::f64::consts::FRAC_PI_4).projector();
        Self::new(
            vec![2, 2],
            vec![0.9, 0.1],
            vec![0.1, 0.9],
            vec![p0.clone(), p0],
            vec![p1.clone(), p1],
        )
        .expect("the shipped example is valid")
    }

    pub fn total_dim(&self) -> usize {
        self.block_dims.iter().sum()
    }

    /// Assemble the full block-diagonal state for preparation `s`.
    pub fn assemble(&self, s: usize) -> DensityOperator {
        let total = self.total_dim();
        let mut m = CMatrix::zeros(total, total);
        let mut offset = 0;
        for (b, &dim) in self.block_dims.iter().enumerate() {
            let (w, state) = match s {
                0 => (self.weights0[b], &self.block_states0[b]),
                _ => (self.weights1[b], &self.block_states1[b]),
            };
            for i in 0..dim {
                for j in 0..dim {
                    m.set(offset + i, offset + j, state.matrix().get(i, j) * w);
                }
            }
            offset += dim;
        }
        DensityOperator::new(m).expect("blocks are states and weights a distribution")
    }

    /// The projectors onto each block.
    pub fn projectors(&self) -> Vec<CMatrix> {
        let total = self.total_dim();
        let mut out = Vec::with_capacity(self.block_dims.len());
        let mut offset = 0;
        for &dim in &self.block_dims {
            let mut p = CMatrix::zeros(total, total);
            for i in 0..dim {
                p.set(offset + i, offset + i, Complex64::new(1.0, 0.0));
            }
            out.push(p);
            offset += dim;
        }
        out
    }
}

/// The outcome of measuring block projectors on the assembled states.
#[derive(Debug, Clone)]
pub struct BlockCounterexample {
    /// Mutual information of the block-outcome distributions, in bits.
    pub info_bits: f64,
    /// ½ Σₛ tr|ρ̂ₛ − Σᵦ Π̂ᵦρ̂ₛΠ̂ᵦ|; exactly zero for block-diagonal states.
    pub disturbance: f64,
    /// Largest element of [ρ̂₀, ρ̂₁] for the assembled states.
    pub commutator_norm: f64,
    /// True when the weights differ and some block pair noncommutes, i.e.
    /// the example genuinely shows information gain without disturbance for
    /// a non-broadcastable pair. Equal weights yield info 0 and are flagged
    /// as a non-example.
    pub genuine: bool,
}

/// Measure the block projectors on both assembled states: information comes
/// from the differing block weights, while the block-dephasing channel fixes
/// block-diagonal states exactly, so the disturbance vanishes.
pub fn block_counterexample(
    blocks: &BlockStatePair,
    priors: &PriorPair,
) -> Result<BlockCounterexample> {
    let rho = [blocks.assemble(0), blocks.assemble(1)];
    let projectors = blocks.projectors();

    let p0: Vec<f64> = projectors
        .iter()
        .map(|p| (rho[0].matrix() * p).trace().re.max(0.0))
        .collect();
    let p1: Vec<f64> = projectors
        .iter()
        .map(|p| (rho[1].matrix() * p).trace().re.max(0.0))
        .collect();
    let info_bits = mutual_information(priors, &p0, &p1)?;

    let mut disturbance = 0.0;
    for state in &rho {
        let mut dephased = CMatrix::zeros(state.dim(), state.dim());
        for p in &projectors {
            dephased = &dephased + &(&(p * state.matrix()) * p);
        }
        disturbance += 0.5 * trace_norm(&(state.matrix() - &dephased).hermitian_part())?;
    }

    let comm = &(rho[0].matrix() * rho[1].matrix()) - &(rho[1].matrix() * rho[0].matrix());
    let commutator_norm = comm.max_abs();

    let weights_differ = blocks
        .weights0
        .iter()
        .zip(&blocks.weights1)
        .any(|(a, b)| (a - b).abs() > 1e-12);
    let some_block_noncommutes = blocks
        .block_states0
        .iter()
        .zip(&blocks.block_states1)
        .any(|(a, b)| {
            let c = &(a.matrix() * b.matrix()) - &(b.matrix() * a.matrix());
            c.max_abs() > 1e-12
        });

    Ok(BlockCounterexample {
        info_bits,
        disturbance,
        commutator_norm,
        genuine: weights_differ && some_block_noncommutes,
    })
}
