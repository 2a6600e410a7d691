//! Shared generators for the integration suites: seeded RNG and random
//! dominant integral weights per family.
//!
//! Each test binary compiles its own copy, so not every helper is used
//! everywhere.
#![allow(dead_code)]

use hwmod_core::algebra::Algebra;
use hwmod_core::rat::{rat, ratio, Rat};
use hwmod_core::weights::Weight;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random algebra of the given family with total rank at most `max_n`.
pub fn random_algebra(rng: &mut ChaCha8Rng, family: &str, max_n: usize) -> Algebra {
    match family {
        "sp" => Algebra::sp(rng.gen_range(1..=max_n)).unwrap(),
        "su" => {
            let n = rng.gen_range(2..=max_n);
            let p = rng.gen_range(1..n);
            Algebra::su(p, n - p).unwrap()
        }
        "so*" => Algebra::so_star(rng.gen_range(2..=max_n)).unwrap(),
        _ => unreachable!(),
    }
}

/// A random dominant integral weight with coordinates in `[lo, hi]`:
/// mostly integer or half-integer, with an occasional denser rational
/// offset so the strict regions between half-integer thresholds get
/// exercised too. For `su` each block draws its own offset, since only
/// in-block differences must be integral.
pub fn random_dominant_weight(
    rng: &mut ChaCha8Rng,
    algebra: Algebra,
    lo: i64,
    hi: i64,
) -> Weight {
    let n = algebra.rank();
    let p = algebra.first_block();
    let mut coords: Vec<Rat> = Vec::with_capacity(n);
    for len in [p, n - p] {
        if len == 0 {
            continue;
        }
        let offset = match rng.gen_range(0..10) {
            0..=3 => rat(0),
            4..=7 => ratio(1, 2),
            8 => ratio(1, 4),
            _ => ratio(1, 3),
        };
        let mut vals: Vec<i64> = (0..len).map(|_| rng.gen_range(lo..=hi)).collect();
        vals.sort_unstable_by(|a, b| b.cmp(a));
        coords.extend(vals.into_iter().map(|v| rat(v) + &offset));
    }
    let w = Weight::new(algebra, coords).unwrap();
    assert!(w.is_k_dominant_integral());
    w
}

/// Weakly decreasing random tail values in `[lo, hi]`.
pub fn random_desc(rng: &mut ChaCha8Rng, len: usize, lo: i64, hi: i64) -> Vec<i64> {
    let mut vals: Vec<i64> = (0..len).map(|_| rng.gen_range(lo..=hi)).collect();
    vals.sort_unstable_by(|a, b| b.cmp(a));
    vals
}
