//! Homology ranks of the Hilbert scheme of plane conics in P^3 (P = 2t+1).

use hilb_strata::hilbert::HilbertPolynomial;
use hilb_strata::notation::VariableNames;
use hilb_strata::orders::MonomialOrder;
use hilb_strata::report::decompose;

fn main() -> hilb_strata::Result<()> {
    let rep = decompose(&HilbertPolynomial::parse("2t+1")?, 3, &MonomialOrder::lex(4), &VariableNames::default_for(3))?;
    println!("cells by dimension: {:?}", rep.trimmed_betti());
    for (m, rank) in rep.homology()?.ranks.iter().enumerate() {
        println!("H_{m:<2} = Z^{rank}");
    }
    Ok(())
}
