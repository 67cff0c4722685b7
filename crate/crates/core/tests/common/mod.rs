//! Seeded random families shared by the integration tests.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sadk::closed_forms::gluing_data;
use sadk::lattice::LatticeVector;
use sadk::semigroup::{build_family, SemigroupFamily};

pub const MAX_MU: u64 = 4;

pub const SEED: u64 = 0x5adc_0ffe_e000_0001;

fn vector(rng: &mut ChaCha8Rng, max: i64) -> LatticeVector {
    LatticeVector::from_pair(rng.gen_range(0..=max), rng.gen_range(0..=max))
}

/// `count` distinct valid base families with coordinates of `a` and `d`
/// in `0..=5`.
pub fn random_families(k: u32, count: usize, seed: u64) -> Vec<SemigroupFamily> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ u64::from(k));
    let mut out: Vec<SemigroupFamily> = Vec::new();
    while out.len() < count {
        let (a, d) = (vector(&mut rng, 5), vector(&mut rng, 5));
        if let Ok(f) = build_family(a, d, k, None) {
            if !out.contains(&f) {
                out.push(f);
            }
        }
    }
    out
}

/// `count` distinct extended families over random base families whose
/// extension element gives a gluing along `μb`, with `μ <= MAX_MU` so
/// brute-force enumeration stays cheap.
pub fn random_extended_families(k: u32, count: usize, seed: u64) -> Vec<SemigroupFamily> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (u64::from(k) << 32));
    let mut out: Vec<SemigroupFamily> = Vec::new();
    while out.len() < count {
        let (a, d) = (vector(&mut rng, 5), vector(&mut rng, 5));
        let b = vector(&mut rng, 10);
        let Ok(f) = build_family(a, d, k, Some(b)) else { continue };
        if f.extension().is_some_and(|e| e.mu > MAX_MU) {
            continue;
        }
        if gluing_data(&f).is_ok_and(|g| g.is_gluing) && !out.contains(&f) {
            out.push(f);
        }
    }
    out
}
