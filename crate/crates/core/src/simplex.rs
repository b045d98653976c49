//! Derivative-free local search: a standard Nelder–Mead simplex plus the
//! deterministic multi-start machinery used by the optimizer modules.
//!
//! Restart points come from a Kronecker low-discrepancy sequence whose phase
//! is derived from the caller's seed, so a fixed seed reproduces every
//! search bit for bit regardless of how restarts are scheduled.

/// Result of one local minimization.
#[derive(Debug, Clone)]
pub struct SimplexResult {
    pub x: Vec<f64>,
    pub f: f64,
    pub iterations: usize,
    pub converged: bool,
}

/// Nelder–Mead with the conventional reflection/expansion/contraction/shrink
/// coefficients (1, 2, ½, ½).
#[derive(Debug, Clone, Copy)]
pub struct NelderMead {
    pub max_iterations: usize,
    pub f_tolerance: f64,
    pub x_tolerance: f64,
}

impl NelderMead {
    pub fn new(max_iterations: usize, tolerance: f64) -> Self {
        Self {
            max_iterations,
            f_tolerance: tolerance,
            x_tolerance: tolerance.sqrt().max(1e-10),
        }
    }

    /// Minimize `f` starting from `x0` with an orthogonal initial simplex of
    /// the given step size.
    pub fn minimize(&self, f: impl Fn(&[f64]) -> f64, x0: &[f64], step: f64) -> SimplexResult {
        let dim = x0.len();
        assert!(dim >= 1, "need at least one parameter");
        let mut points: Vec<Vec<f64>> = Vec::with_capacity(dim + 1);
        points.push(x0.to_vec());
        for i in 0..dim {
            let mut p = x0.to_vec();
            p[i] += step;
            points.push(p);
        }
        let mut values: Vec<f64> = points.iter().map(|p| f(p)).collect();

        let mut iterations = 0;
        let mut converged = false;
        while iterations < self.max_iterations {
            iterations += 1;

            // Sort the simplex: best first, worst last.
            let mut order: Vec<usize> = (0..points.len()).collect();
            order.sort_by(|&i, &j| values[i].total_cmp(&values[j]));
            points = order.iter().map(|&i| points[i].clone()).collect();
            values = order.iter().map(|&i| values[i]).collect();

            let spread = values[dim] - values[0];
            let diameter = points[1..]
                .iter()
                .map(|p| {
                    p.iter()
                        .zip(&points[0])
                        .map(|(a, b)| (a - b).abs())
                        .fold(0.0, f64::max)
                })
                .fold(0.0, f64::max);
            if spread.abs() <= self.f_tolerance && diameter <= self.x_tolerance {
                converged = true;
                break;
            }

            let centroid: Vec<f64> = (0..dim)
                .map(|k| points[..dim].iter().map(|p| p[k]).sum::<f64>() / dim as f64)
                .collect();
            let worst = points[dim].clone();
            let mix = |a: f64| -> Vec<f64> {
                (0..dim)
                    .map(|k| centroid[k] + a * (centroid[k] - worst[k]))
                    .collect()
            };

            let reflected = mix(1.0);
            let f_reflected = f(&reflected);
            if f_reflected < values[0] {
                let expanded = mix(2.0);
                let f_expanded = f(&expanded);
                if f_expanded < f_reflected {
                    points[dim] = expanded;
                    values[dim] = f_expanded;
                } else {
                    points[dim] = reflected;
                    values[dim] = f_reflected;
                }
            } else if f_reflected < values[dim - 1] {
                points[dim] = reflected;
                values[dim] = f_reflected;
            } else {
                let contracted = if f_reflected < values[dim] { mix(0.5) } else { mix(-0.5) };
                let f_contracted = f(&contracted);
                if f_contracted < values[dim].min(f_reflected) {
                    points[dim] = contracted;
                    values[dim] = f_contracted;
                } else {
                    // Shrink toward the best point.
                    for i in 1..=dim {
                        for k in 0..dim {
                            points[i][k] = points[0][k] + 0.5 * (points[i][k] - points[0][k]);
                        }
                        values[i] = f(&points[i]);
                    }
                }
            }
        }

        let mut best = 0;
        for i in 1..values.len() {
            if values[i] < values[best] {
                best = i;
            }
        }
        SimplexResult {
            x: points[best].clone(),
            f: values[best],
            iterations,
            converged,
        }
    }
}

/// SplitMix64 step, used to derive deterministic per-seed phases.
fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Per-dimension phase shift in [0,1)^dim derived from a seed and stream id.
pub fn seed_shift(seed: u64, stream: u64, dim: usize) -> Vec<f64> {
    let mut state = seed ^ stream.wrapping_mul(0xA076_1D64_78BD_642F);
    (0..dim)
        .map(|_| (splitmix64(&mut state) >> 11) as f64 / (1u64 << 53) as f64)
        .collect()
}

const LDS_PRIMES: [u64; 32] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
    97, 101, 103, 107, 109, 113, 127, 131,
];

/// Point `index` of a Kronecker sequence (fractional multiples of √prime)
/// with the given phase shift, in [0,1)^dim.
pub fn lds_point(index: usize, shift: &[f64]) -> Vec<f64> {
    shift
        .iter()
        .enumerate()
        .map(|(k, &s)| {
            let alpha = (LDS_PRIMES[k % LDS_PRIMES.len()] as f64).sqrt().fract();
            (s + alpha * (index as f64 + 1.0)).fract()
        })
        .collect()
}

/// Map a unit-cube point into a box.
pub fn scale_to_box(unit: &[f64], lo: &[f64], hi: &[f64]) -> Vec<f64> {
    unit.iter()
        .enumerate()
        .map(|(k, &u)| lo[k] + u * (hi[k] - lo[k]))
        .collect()
}
