//! Gotzmann numbers and Macaulay decompositions.
//!
//! ```text
//! cargo run --example gotzmann -- "3t+1"
//! ```

use hilb_strata::hilbert::HilbertPolynomial;

fn main() -> hilb_strata::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if args.is_empty() {
        ["1", "4", "t+1", "2t+1", "2t+2", "3t", "3t+1", "t^2+2t+1"].map(String::from).to_vec()
    } else {
        args
    };
    for text in &inputs {
        match HilbertPolynomial::parse(text) {
            Ok(p) => println!("{:<14} r = {:<2} a = {:?}", p.to_string(), p.gotzmann(), p.macaulay()),
            Err(e) => println!("{text:<14} {e}"),
        }
    }
    Ok(())
}
