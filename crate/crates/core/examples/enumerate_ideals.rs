//! Lists the saturated-in-degree-r monomial ideals with a given Hilbert polynomial.
//!
//! ```text
//! cargo run --example enumerate_ideals -- "2t+1" 3
//! ```

use hilb_strata::enumeration::enumerate_m;
use hilb_strata::hilbert::{chart_counts, HilbertPolynomial};
use hilb_strata::notation::VariableNames;
use hilb_strata::orders::MonomialOrder;

fn main() -> hilb_strata::Result<()> {
    let mut args = std::env::args().skip(1);
    let p = HilbertPolynomial::parse(&args.next().unwrap_or_else(|| "t+1".into()))?;
    let n: usize = args.next().map_or(3, |s| s.parse().expect("n must be a number"));

    let counts = chart_counts(&p, n)?;
    println!(
        "P = {p}, n = {n}: r = {}, {} corners, {} monomials in degree r+1, {} standard monomials",
        counts.r, counts.corners_target, counts.expansion_target, counts.delta_r_size
    );
    let names = VariableNames::default_for(n);
    let order = MonomialOrder::degrevlex(n + 1);
    let ideals = enumerate_m(&p, n)?;
    for cs in &ideals {
        println!("  <{}>", cs.key(&order, &names));
    }
    println!("{} ideals", ideals.len());
    Ok(())
}
