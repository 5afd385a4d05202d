//! The capped Buchberger oracle on the twisted cubic.

use hilb_strata::algebra::{Exponent, Rational, XPolynomial};
use hilb_strata::notation::VariableNames;
use hilb_strata::oracle::{buchberger, is_reduced, leading_exponents, IdealPresentation};
use hilb_strata::orders::MonomialOrder;

fn binomial(a: [u32; 4], b: [u32; 4]) -> XPolynomial {
    XPolynomial::from_terms(
        4,
        [
            (Exponent::from(a), Rational::from_integer(1.into())),
            (Exponent::from(b), Rational::from_integer((-1).into())),
        ],
    )
}

fn main() -> hilb_strata::Result<()> {
    let names = VariableNames::default_for(3);
    // xz - y^2, xw - yz, yw - z^2
    let generators = vec![
        binomial([1, 0, 1, 0], [0, 2, 0, 0]),
        binomial([1, 0, 0, 1], [0, 1, 1, 0]),
        binomial([0, 1, 0, 1], [0, 0, 2, 0]),
    ];
    for order in [MonomialOrder::degrevlex(4), MonomialOrder::lex(4)] {
        let ideal = IdealPresentation { generators: generators.clone(), order: order.clone() };
        let gb = buchberger(&ideal, 5)?;
        let leads: Vec<String> = leading_exponents(&gb, &order).iter().map(|e| names.render(e)).collect();
        println!(
            "{}: {} basis elements, reduced = {}, initial ideal <{}>",
            order.name(),
            gb.basis.len(),
            is_reduced(&gb, &order),
            leads.join(", ")
        );
    }
    Ok(())
}
