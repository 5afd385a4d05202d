//! Coordinates, defining equations, and the verdict for a single stratum.
//!
//! With no arguments this shows the first singular ideal of the 2t+2 example.
//!
//! ```text
//! cargo run --example stratum_equations -- "2t+1" 3 "x^2, xy, xz, xw, y^2"
//! ```

use hilb_strata::enumeration::CornerSet;
use hilb_strata::hilbert::{chart_counts, HilbertPolynomial};
use hilb_strata::notation::{parse_monomial_ideal, VariableNames};
use hilb_strata::orders::{MonomialOrder, WeightVector};
use hilb_strata::stratum::analyze;

fn main() -> hilb_strata::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (p, n, ideal) = match args.as_slice() {
        [p, n, ideal] => (p.clone(), n.parse().expect("n must be a number"), ideal.clone()),
        _ => ("2t+2".into(), 3, "w^3, zw^2, yw^2, yzw, y^2w, y^2z, y^3, xw^2, xyw, xyz, xy^2, x^2y".into()),
    };
    let p = HilbertPolynomial::parse(&p)?;
    let counts = chart_counts(&p, n)?;
    let names = VariableNames::default_for(n);
    let cs = CornerSet::new(n, counts.r, parse_monomial_ideal(&ideal, n, &names)?)?;
    cs.validate(&counts)?;

    let order = MonomialOrder::degrevlex(n + 1);
    let omega = WeightVector::realize(&order, n, counts.r)?;
    let a = analyze(&cs, &order, &omega);

    println!("marked family over {} coordinates:", a.family.variables().len());
    print!("{}", a.family);
    for (i, (v, w)) in a.family.variables().iter().zip(a.family.weights()).enumerate() {
        println!("  T{i} = {}  weight {w}", v.label(&names));
    }
    println!("{} equations:", a.presentation.equations.len());
    for eq in &a.presentation.equations {
        println!("  {eq}");
    }
    println!(
        "after elimination: {} free, residual {:?}",
        a.elimination.free.len(),
        a.elimination.residual.iter().map(ToString::to_string).collect::<Vec<_>>()
    );
    println!("{:?}", a.classification.verdict);
    Ok(())
}
