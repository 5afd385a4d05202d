//! The 2t+2 example in P^3 under both orders: cell counts and the monomial
//! ideals at which the Hilbert scheme is singular.

use std::collections::BTreeSet;

use hilb_strata::hilbert::HilbertPolynomial;
use hilb_strata::notation::VariableNames;
use hilb_strata::orders::{MonomialOrder, OrderKind};
use hilb_strata::report::decompose;

fn main() -> hilb_strata::Result<()> {
    let p = HilbertPolynomial::parse("2t+2")?;
    let names = VariableNames::default_for(3);
    let mut union = BTreeSet::new();
    for kind in [OrderKind::Degrevlex, OrderKind::Lex] {
        let rep = decompose(&p, 3, &MonomialOrder::standard(kind, 4), &names)?;
        println!("{kind}: {} ideals, cells {:?}, {} singular", rep.rows.len(), rep.trimmed_betti(), rep.singular.len());
        for row in rep.rows.iter().filter(|r| r.is_singular()) {
            println!("  <{}>  tangent dim {}", row.key, row.tangent_dim);
            union.insert(row.corners.corners().to_vec());
        }
    }
    println!("{} singular monomial points across both orders", union.len());
    Ok(())
}
