//! Seeded workloads shared by the benchmarks.

use homsuper::random::{self, GenConfig};
use homsuper::{int, Chart, Degree, GradedSkewForm, Parity, SuperForm, SuperFunction, VectorField};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A chart with three even and three odd coordinates of mixed weights.
pub fn chart() -> Chart {
    Chart::from_spec(&[
        ("x", Parity::Even, 1),
        ("y", Parity::Even, -1),
        ("z", Parity::Even, 2),
        ("xi", Parity::Odd, 1),
        ("eta", Parity::Odd, -2),
        ("zeta", Parity::Odd, 3),
    ])
    .unwrap()
}

pub fn config() -> GenConfig {
    GenConfig {
        max_degree: 3,
        max_terms: 4,
        ..GenConfig::default()
    }
}

pub fn functions(seed: u64, n: usize) -> Vec<SuperFunction> {
    let mut r = rng(seed);
    let c = chart();
    (0..n).map(|_| random::function(&mut r, &c, &config())).collect()
}

pub fn fields(seed: u64, n: usize) -> Vec<VectorField> {
    let mut r = rng(seed);
    let c = chart();
    (0..n).map(|_| random::field(&mut r, &c, &config()).0).collect()
}

pub fn forms(seed: u64, n: usize, rank: usize) -> Vec<SuperForm> {
    let mut r = rng(seed);
    let c = chart();
    (0..n).map(|_| random::form(&mut r, &c, rank, &config()).0).collect()
}

/// Nonzero exact homogeneous forms `d beta` of the given weight and rank.
pub fn exact_forms(seed: u64, n: usize, weight: i64, rank: usize) -> Vec<SuperForm> {
    let mut r = rng(seed);
    let c = chart();
    let mut out = Vec::with_capacity(n);
    let mut parity = 0;
    while out.len() < n {
        let deg = Degree::new(Parity::from_bit(parity % 2), int(weight));
        parity += 1;
        let w = random::form_of(&mut r, &c, rank - 1, &deg, &config()).d();
        if !w.is_zero() {
            out.push(w);
        }
    }
    out
}

pub fn skew_forms(seed: u64, n: usize) -> Vec<GradedSkewForm> {
    let mut r = rng(seed);
    (0..n).map(|_| random::skew_form(&mut r, 8)).collect()
}
