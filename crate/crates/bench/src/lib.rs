//! Shared input generators for the benchmark targets.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qtradeoff::sampling;
use qtradeoff::{CMatrix, DensityOperator};

pub fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0xBE7C)
}

pub fn hermitian(n: usize) -> CMatrix {
    sampling::random_hermitian(n, &mut rng())
}

pub fn density_pair(n: usize) -> (DensityOperator, DensityOperator) {
    let mut rng = rng();
    (
        sampling::random_density(n, &mut rng),
        sampling::random_density(n, &mut rng),
    )
}

pub fn joint_unitary(dim_a: usize, dim_e: usize) -> CMatrix {
    sampling::random_unitary(dim_a * dim_e, &mut rng())
}
