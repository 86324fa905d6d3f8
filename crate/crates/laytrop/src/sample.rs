//! Deterministic seeded samplers shared by the sampling-based checks.
//!
//! Values are uniform integers in [-10, 10] unless a caller narrows the
//! range; layers are uniform in a small band above a floor. Fixed seeds
//! make every verdict reproducible.

use crate::matrix::TropMatrix;
use crate::rat::Rat;
use crate::scalar::LayeredScalar;
use crate::semiring::{SortLayer, SortSemiring};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const VALUE_LO: i64 = -10;
pub const VALUE_HI: i64 = 10;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent stream for trial `i` of a seeded run.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(trial.wrapping_add(1));
    r
}

/// How layers are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LayerMode {
    /// Unit layer only.
    Tangible,
    /// Unit layer or a small ghost layer.
    Mixed,
    /// Every layer at least the given floor (finite descriptors).
    AtLeast(u64),
}

pub fn sample_value<R: Rng>(r: &mut R, lo: i64, hi: i64) -> Rat {
    Rat::int(r.gen_range(lo..=hi))
}

pub fn sample_layer<R: Rng>(desc: &SortSemiring, r: &mut R, mode: LayerMode) -> SortLayer {
    match mode {
        LayerMode::Tangible => desc.unit_layer(),
        LayerMode::Mixed => match desc {
            SortSemiring::Trivial => SortLayer::Fin(1),
            SortSemiring::TwoLayer => {
                if r.gen_bool(0.5) {
                    SortLayer::Fin(1)
                } else {
                    SortLayer::Inf
                }
            }
            SortSemiring::Naturals => SortLayer::Fin(r.gen_range(1..=4)),
            SortSemiring::Truncated(q) => SortLayer::Fin(r.gen_range(1..=(*q).min(4))),
            SortSemiring::Doubled(inner) => {
                // avoid the all-zero pair
                loop {
                    let a = sample_component(inner, r);
                    let b = sample_component(inner, r);
                    let cand = SortLayer::pair(a, b);
                    if desc.valid_layer(&cand, false) {
                        return cand;
                    }
                }
            }
        },
        LayerMode::AtLeast(floor) => match desc {
            SortSemiring::Trivial => SortLayer::Fin(1),
            SortSemiring::TwoLayer => {
                if floor > 1 {
                    SortLayer::Inf
                } else if r.gen_bool(0.5) {
                    SortLayer::Fin(1)
                } else {
                    SortLayer::Inf
                }
            }
            SortSemiring::Naturals => SortLayer::Fin(r.gen_range(floor..=floor + 3)),
            SortSemiring::Truncated(q) => {
                SortLayer::Fin(r.gen_range(floor.min(*q)..=*q))
            }
            SortSemiring::Doubled(_) => sample_layer(desc, r, LayerMode::Mixed),
        },
    }
}

fn sample_component<R: Rng>(inner: &SortSemiring, r: &mut R) -> SortLayer {
    match inner {
        SortSemiring::Trivial => SortLayer::Fin(r.gen_range(0..=1)),
        SortSemiring::TwoLayer => match r.gen_range(0..3) {
            0 => SortLayer::Fin(0),
            1 => SortLayer::Fin(1),
            _ => SortLayer::Inf,
        },
        SortSemiring::Naturals => SortLayer::Fin(r.gen_range(0..=3)),
        SortSemiring::Truncated(q) => SortLayer::Fin(r.gen_range(0..=(*q).min(3))),
        SortSemiring::Doubled(i2) => {
            SortLayer::pair(sample_component(i2, r), sample_component(i2, r))
        }
    }
}

pub fn sample_scalar<R: Rng>(
    desc: &SortSemiring,
    r: &mut R,
    mode: LayerMode,
    lo: i64,
    hi: i64,
) -> LayeredScalar {
    LayeredScalar::El {
        layer: sample_layer(desc, r, mode),
        value: sample_value(r, lo, hi),
    }
}

/// Dense square matrix with every entry sampled (no zero entries).
pub fn sample_matrix<R: Rng>(
    desc: &SortSemiring,
    r: &mut R,
    n: usize,
    mode: LayerMode,
    lo: i64,
    hi: i64,
) -> TropMatrix {
    let data: Vec<LayeredScalar> = (0..n * n)
        .map(|_| sample_scalar(desc, r, mode, lo, hi))
        .collect();
    TropMatrix::from_data(desc.clone(), n, n, data).expect("sampled shape is consistent")
}

pub fn sample_vector<R: Rng>(
    desc: &SortSemiring,
    r: &mut R,
    dim: usize,
    mode: LayerMode,
    lo: i64,
    hi: i64,
) -> Vec<LayeredScalar> {
    (0..dim).map(|_| sample_scalar(desc, r, mode, lo, hi)).collect()
}
