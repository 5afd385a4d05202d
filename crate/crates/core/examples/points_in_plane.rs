//! Cell counts for Hilbert schemes of d points in the projective plane.

use hilb_strata::hilbert::HilbertPolynomial;
use hilb_strata::notation::VariableNames;
use hilb_strata::orders::MonomialOrder;
use hilb_strata::report::decompose;

fn main() -> hilb_strata::Result<()> {
    let max_d: u32 = std::env::args().nth(1).map_or(5, |s| s.parse().expect("d must be a number"));
    let names = VariableNames::default_for(2);
    let order = MonomialOrder::degrevlex(3);
    for d in 1..=max_d {
        let rep = decompose(&HilbertPolynomial::parse(&d.to_string())?, 2, &order, &names)?;
        println!("d={d}: {:?}  ({} ideals, {} singular)", rep.trimmed_betti(), rep.rows.len(), rep.singular.len());
    }
    Ok(())
}
