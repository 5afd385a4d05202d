//! The torus action contracts every stratum onto its monomial ideal.

use num_traits::{Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use hilb_strata::algebra::Rational;
use hilb_strata::enumeration::enumerate_m;
use hilb_strata::hilbert::HilbertPolynomial;
use hilb_strata::orders::{MonomialOrder, WeightVector};
use hilb_strata::stratum::{analyze, torus_act};
use hilb_strata::verify::{on_stratum, sample_cell_point};

fn main() -> hilb_strata::Result<()> {
    let p = HilbertPolynomial::parse("2t+1")?;
    let order = MonomialOrder::degrevlex(4);
    let omega = WeightVector::realize(&order, 3, p.gotzmann())?;
    let ideals = enumerate_m(&p, 3)?;
    let a = ideals
        .iter()
        .map(|cs| analyze(cs, &order, &omega))
        .max_by_key(|a| a.family.variables().len())
        .expect("nonempty");

    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut point = sample_cell_point(&a, &mut rng).expect("2t+1 strata are cells");
    let half = Rational::new(1.into(), 2.into());
    for step in 0..=8 {
        let largest = point.values().map(Signed::abs).max().unwrap_or_else(Rational::zero);
        println!("step {step}: on stratum {}, max |a| = {largest}", on_stratum(&a, &point)?);
        point = torus_act(&point, &half, a.family.weights())?;
    }
    Ok(())
}
