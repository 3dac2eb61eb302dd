use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::component::ComponentId;
use super::fmap::ComponentParams;

/// `r(2m+n−r) + a(n−m)`.
pub fn dimension(c: &ComponentId) -> usize {
    let (m, n, r, a) = (c.m as i64, c.n as i64, c.r as i64, c.a as i64);
    let d = r * (2 * m + n - r) + a * (n - m);
    usize::try_from(d).expect("dimension of a valid component is nonnegative")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    pub dimension: usize,
    pub max_rank: usize,
    pub verified: bool,
}

/// Exact Jacobian ranks of `f_a` at `trials` seeded random rational points.
pub fn dimension_report(c: &ComponentId, trials: usize, seed: u64) -> DimensionReport {
    let dim = dimension(c);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut max_rank = 0;
    for _ in 0..trials {
        let rank = ComponentParams::random_rationals(c, &mut rng).jacobian().rank();
        assert!(rank <= dim, "Jacobian rank {rank} exceeds the component dimension {dim} for {c:?}");
        max_rank = max_rank.max(rank);
        if max_rank == dim {
            break;
        }
    }
    DimensionReport { dimension: dim, max_rank, verified: max_rank == dim }
}

pub fn verify_dimension(c: &ComponentId, trials: usize, seed: u64) -> bool {
    dimension_report(c, trials, seed).verified
}
