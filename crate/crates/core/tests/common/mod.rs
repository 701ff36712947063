#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rootsub::factor::{Chart, ZetaCoords};
use rootsub::matrep::Realization;
use rootsub::weyl::{self, Word};
use rootsub::{Family, RootSystem, Scalar};

pub fn realization(family: Family, rank: usize) -> Realization {
    Realization::new(&RootSystem::new(family, rank).unwrap()).unwrap()
}

pub fn chart(family: Family, rank: usize, word: &str) -> Chart {
    Chart::longest(&realization(family, rank), &word.parse().unwrap()).unwrap()
}

/// Small Gaussian rational, mostly real.
pub fn scalar(rng: &mut ChaCha8Rng) -> Scalar {
    let re = (rng.gen_range(-6..7), rng.gen_range(1..4));
    if rng.gen_bool(0.25) {
        Scalar::gaussian(re, (rng.gen_range(-3..4), rng.gen_range(1..3)))
    } else {
        Scalar::from_ratio(re.0, re.1)
    }
}

pub fn real_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    Scalar::from_ratio(rng.gen_range(-6..7), rng.gen_range(1..4))
}

/// Random torus element of the realization.
pub fn torus(real: &Realization, rng: &mut ChaCha8Rng) -> Vec<Scalar> {
    let vals: Vec<Scalar> = (0..real.root_system().dim())
        .map(|_| loop {
            let s = scalar(rng);
            if !s.is_zero() {
                break s;
            }
        })
        .collect();
    real.torus_from_lambdas(&vals).unwrap()
}

/// Random coordinates with every `1 + ζ⁻ζ⁺` nonzero.
pub fn regular_zeta(chart: &Chart, rng: &mut ChaCha8Rng) -> ZetaCoords<Scalar> {
    loop {
        let n = chart.len();
        let z = ZetaCoords::new(
            (0..n).map(|_| scalar(rng)).collect(),
            (0..n).map(|_| scalar(rng)).collect(),
            torus(chart.realization(), rng),
        )
        .unwrap();
        if (0..n).all(|j| !z.factor(j).is_zero()) {
            return z;
        }
    }
}

/// The configurations of the round-trip suite with the canonical word and five random words each.
pub fn configurations(rng: &mut ChaCha8Rng) -> Vec<Chart> {
    let mut out = Vec::new();
    let families = [
        (Family::A, 1),
        (Family::A, 2),
        (Family::A, 3),
        (Family::A, 4),
        (Family::B, 1),
        (Family::B, 2),
        (Family::C, 1),
        (Family::C, 2),
        (Family::D, 3),
    ];
    for (f, r) in families {
        let real = realization(f, r);
        let rs = real.root_system().clone();
        let mut words: Vec<Word> = vec![weyl::canonical_word(f, r).unwrap()];
        words.extend((0..5).map(|_| weyl::random_reduced_word(&rs, rng)));
        for w in words {
            out.push(Chart::longest(&real, &w).unwrap());
        }
    }
    out
}
