//! Samples rational points on every affine-cell stratum and checks the
//! initial ideal with the Buchberger oracle.
//!
//! ```text
//! cargo run --release --example verify_oracle -- "2t+2" 3 7
//! ```

use hilb_strata::hilbert::HilbertPolynomial;
use hilb_strata::notation::VariableNames;
use hilb_strata::orders::MonomialOrder;
use hilb_strata::verify::verify_strata;

fn main() -> hilb_strata::Result<()> {
    let mut args = std::env::args().skip(1);
    let p = HilbertPolynomial::parse(&args.next().unwrap_or_else(|| "2t+1".into()))?;
    let n: usize = args.next().map_or(3, |s| s.parse().expect("n must be a number"));
    let seed: u64 = args.next().map_or(0, |s| s.parse().expect("seed must be a number"));
    let rep = verify_strata(&p, n, &MonomialOrder::degrevlex(n + 1), &VariableNames::default_for(n), seed, 3)?;
    for c in rep.checked.iter().filter(|c| !c.passed()) {
        println!("mismatch at <{}>: {}/{}", c.key, c.agreed, c.samples);
    }
    println!(
        "{} smooth strata, {} singular skipped, cap {}, all agree: {}",
        rep.checked.len(),
        rep.skipped_singular,
        rep.degree_cap,
        rep.all_agree
    );
    Ok(())
}
