//! Integer weight vectors realizing lex and degrevlex on degrees r and r+1.

use hilb_strata::orders::{MonomialOrder, OrderKind, WeightVector};

fn main() -> hilb_strata::Result<()> {
    for n in 1..=4 {
        for r in [1, 3, 5] {
            for kind in [OrderKind::Lex, OrderKind::Degrevlex] {
                let order = MonomialOrder::standard(kind, n + 1);
                let omega = WeightVector::realize(&order, n, r)?;
                println!("n={n} r={r} {:<10} {:?}", kind.to_string(), omega.as_slice());
            }
        }
    }
    Ok(())
}
