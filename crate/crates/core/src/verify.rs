//! Cross-checks strata against the Buchberger oracle on sampled points.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Exponent, Point, Rational};
use crate::enumeration::enumerate_with_counts;
use crate::error::Result;
use crate::hilbert::{chart_counts, HilbertPolynomial};
use crate::notation::VariableNames;
use crate::oracle::{initial_ideal, IdealPresentation};
use crate::orders::{MonomialOrder, WeightVector};
use crate::stratum::{analyze, StratumAnalysis};

/// Numerator in `[-9, 9]`, denominator in `[1, 9]`.
pub fn small_rational(rng: &mut impl Rng) -> Rational {
    let num: i64 = rng.gen_range(-9..=9);
    let den: i64 = rng.gen_range(1..=9);
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// A random point on an affine-cell stratum, built from the elimination's
/// parametrization. `None` for singular strata.
pub fn sample_cell_point(analysis: &StratumAnalysis, rng: &mut impl Rng) -> Option<Point> {
    if !analysis.is_cell() {
        return None;
    }
    let free: Point = analysis.elimination.free.iter().map(|v| (*v, small_rational(rng))).collect();
    Some(analysis.elimination.complete(&free).expect("all free variables assigned"))
}

/// Whether every defining equation vanishes at `point`.
pub fn on_stratum(analysis: &StratumAnalysis, point: &Point) -> Result<bool> {
    for eq in &analysis.presentation.equations {
        if !num_traits::Zero::is_zero(&eq.evaluate(|v| point.get(&v).cloned())?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Initial ideal (minimal generators up to `cap`) of the specialized family.
pub fn oracle_initial_ideal(analysis: &StratumAnalysis, point: &Point, cap: u32) -> Result<BTreeSet<Exponent>> {
    let generators = analysis.family.specialize(point)?;
    let ideal = IdealPresentation { generators, order: analysis.family.order().clone() };
    initial_ideal(&ideal, cap)
}

#[derive(Clone, Debug, Serialize)]
pub struct StratumCheck {
    pub key: String,
    pub samples: usize,
    pub on_stratum: usize,
    pub agreed: usize,
}

impl StratumCheck {
    pub fn passed(&self) -> bool {
        self.on_stratum == self.samples && self.agreed == self.samples
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    #[serde(rename = "P")]
    pub p: String,
    pub n: usize,
    pub order: String,
    pub seed: u64,
    pub degree_cap: u32,
    pub checked: Vec<StratumCheck>,
    pub skipped_singular: usize,
    pub all_agree: bool,
}

/// Samples `samples` points on every affine-cell stratum and checks that the
/// oracle's initial ideal is exactly the stratum's monomial ideal. Each ideal
/// draws from its own stream of a ChaCha generator seeded by `seed`.
pub fn verify_strata(
    p: &HilbertPolynomial,
    n: usize,
    order: &MonomialOrder,
    names: &VariableNames,
    seed: u64,
    samples: usize,
) -> Result<VerifyReport> {
    let counts = chart_counts(p, n)?;
    let omega = WeightVector::realize(order, n, counts.r)?;
    let cap = counts.r + 3;
    let ideals = enumerate_with_counts(&counts);
    let results: Vec<Result<Option<StratumCheck>>> = ideals
        .par_iter()
        .enumerate()
        .map(|(index, cs)| {
            let analysis = analyze(cs, order, &omega);
            if !analysis.is_cell() {
                return Ok(None);
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(index as u64);
            let expected: BTreeSet<Exponent> = cs.corners().iter().cloned().collect();
            let mut check = StratumCheck { key: cs.key(order, names).to_string(), samples, on_stratum: 0, agreed: 0 };
            for _ in 0..samples {
                let point = sample_cell_point(&analysis, &mut rng).expect("cell strata are parametrized");
                if on_stratum(&analysis, &point)? {
                    check.on_stratum += 1;
                }
                if oracle_initial_ideal(&analysis, &point, cap)? == expected {
                    check.agreed += 1;
                }
            }
            Ok(Some(check))
        })
        .collect();
    let mut checked = Vec::new();
    let mut skipped = 0;
    for r in results {
        match r? {
            Some(c) => checked.push(c),
            None => skipped += 1,
        }
    }
    checked.sort_by(|a, b| a.key.cmp(&b.key));
    let all_agree = checked.iter().all(StratumCheck::passed);
    Ok(VerifyReport {
        p: p.to_string(),
        n,
        order: order.name(),
        seed,
        degree_cap: cap,
        checked,
        skipped_singular: skipped,
        all_agree,
    })
}
