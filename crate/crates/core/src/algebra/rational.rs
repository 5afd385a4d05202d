use num_bigint::BigInt;
use num_rational::BigRational;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
pub type Rational = BigRational;

/// Parses `a` or `a/b` with integer `a`, `b`; `b` must be nonzero.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().ok()?;
            let den: BigInt = den.trim().parse().ok()?;
            if den == BigInt::from(0) {
                return None;
            }
            Some(Rational::new(num, den))
        }
        None => text.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_reduces() {
        let q = parse_rational("4/-6").unwrap();
        assert_eq!(q.numer(), &BigInt::from(-2));
        assert_eq!(q.denom(), &BigInt::from(3));
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("x").is_none());
    }

    proptest! {
        #[test]
        fn addition_clears_denominators(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
            let lhs = (Rational::new(a.into(), b.into()) + Rational::new(c.into(), d.into()))
                * Rational::from_integer(BigInt::from(b) * BigInt::from(d));
            prop_assert!(lhs.is_integer());
            prop_assert_eq!(lhs.to_integer(), BigInt::from(a * d + c * b));
        }

        #[test]
        fn always_lowest_terms(a in -1000i64..1000, b in 1i64..1000) {
            let q = Rational::new(a.into(), (-b).into());
            prop_assert!(q.denom() > &BigInt::from(0));
            prop_assert_eq!(num_integer::Integer::gcd(q.numer(), q.denom()) == BigInt::from(1) || a == 0, true);
        }
    }
}
