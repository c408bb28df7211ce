#![allow(dead_code)]

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twoatom::BlockState;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn phase<R: Rng>(rng: &mut R) -> Complex64 {
    Complex64::from_polar(1.0, rng.gen_range(0.0..std::f64::consts::TAU))
}

/// Random valid block state: random populations, each coherence a random
/// fraction of its positivity bound.
pub fn block_state<R: Rng>(rng: &mut R) -> BlockState {
    let mut w: [f64; 4] = std::array::from_fn(|_| -rng.gen_range(f64::MIN_POSITIVE..1.0).ln());
    let total: f64 = w.iter().sum();
    w.iter_mut().for_each(|x| *x /= total);
    let [r11, r22, r33, r44] = w;
    let r12 = phase(rng) * rng.gen_range(0.0..=1.0) * (r11 * r22).sqrt();
    let r34 = phase(rng) * rng.gen_range(0.0..=1.0) * (r33 * r44).sqrt();
    BlockState::new(r11, r22, r33, r44, r12, r34).expect("generated state is valid")
}

/// Random pure state supported on one of the two blocks.
pub fn pure_block_state<R: Rng>(rng: &mut R) -> BlockState {
    let theta = rng.gen_range(0.0..std::f64::consts::FRAC_PI_2);
    let (a, b) = (theta.cos(), theta.sin());
    let coh = phase(rng) * a * b;
    if rng.gen_bool(0.5) {
        BlockState {
            r12: coh,
            ..BlockState::diagonal(a * a, b * b, 0.0, 0.0)
        }
    } else {
        BlockState {
            r34: coh,
            ..BlockState::diagonal(0.0, 0.0, a * a, b * b)
        }
    }
}
