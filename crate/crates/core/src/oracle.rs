//! A small degree-capped homogeneous Buchberger engine over the rationals.
//!
//! It shares nothing with the stratum code beyond the polynomial types and is
//! used to check strata: a point on the stratum of `J` must specialize to an
//! ideal whose initial ideal is `J`.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::algebra::{Exponent, Rational, XPolynomial};
use crate::error::{Error, Result};
use crate::orders::MonomialOrder;

/// Generators together with the order used to pick leading terms. Degrees
/// are compared first, then the slice order.
#[derive(Clone, Debug)]
pub struct IdealPresentation {
    pub generators: Vec<XPolynomial>,
    pub order: MonomialOrder,
}

/// Terms sorted descending under the graded order; leading coefficient 1.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Poly(Vec<(Exponent, Rational)>);

impl Poly {
    fn from_x(p: &XPolynomial, order: &MonomialOrder) -> Poly {
        let mut terms: Vec<(Exponent, Rational)> = p.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp_graded(&b.0, &a.0));
        Poly(terms).monic()
    }

    fn to_x(&self, nvars: usize) -> XPolynomial {
        XPolynomial::from_terms(nvars, self.0.iter().cloned())
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn lead(&self) -> &Exponent {
        &self.0[0].0
    }

    fn monic(mut self) -> Poly {
        if let Some((_, c)) = self.0.first() {
            if !c.is_one() {
                let inv = c.recip();
                for (_, a) in &mut self.0 {
                    *a *= &inv;
                }
            }
        }
        self
    }

    /// `self - c * x^shift * other`, keeping terms sorted.
    fn sub_scaled(&self, other: &Poly, shift: &Exponent, c: &Rational, order: &MonomialOrder) -> Poly {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let mut rhs = other.0.iter().map(|(e, a)| (e.add(shift), a * c)).peekable();
        let mut lhs = self.0.iter().cloned().peekable();
        loop {
            match (lhs.peek(), rhs.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(lhs.next().unwrap()),
                (None, Some(_)) => {
                    let (e, a) = rhs.next().unwrap();
                    out.push((e, -a));
                }
                (Some((e1, _)), Some((e2, _))) => match order.cmp_graded(e1, e2) {
                    Ordering::Greater => out.push(lhs.next().unwrap()),
                    Ordering::Less => {
                        let (e, a) = rhs.next().unwrap();
                        out.push((e, -a));
                    }
                    Ordering::Equal => {
                        let (e, a) = lhs.next().unwrap();
                        let (_, b) = rhs.next().unwrap();
                        let s = a - b;
                        if !s.is_zero() {
                            out.push((e, s));
                        }
                    }
                },
            }
        }
        Poly(out)
    }
}

/// Full reduction (leading and tail terms) of `p` by `basis`.
fn reduce(p: &Poly, basis: &[Poly], order: &MonomialOrder) -> Poly {
    let mut rest = p.clone();
    let mut done: Vec<(Exponent, Rational)> = Vec::new();
    'outer: while let Some((e, c)) = rest.0.first().cloned() {
        for g in basis {
            if let Some(shift) = e.checked_sub(g.lead()) {
                rest = rest.sub_scaled(g, &shift, &c, order);
                continue 'outer;
            }
        }
        done.push((e, c));
        rest.0.remove(0);
    }
    Poly(done)
}

fn s_polynomial(f: &Poly, g: &Poly, order: &MonomialOrder) -> Poly {
    let lcm = f.lead().lcm(g.lead());
    let sf = lcm.checked_sub(f.lead()).unwrap();
    let sg = lcm.checked_sub(g.lead()).unwrap();
    let zero = Poly(Vec::new());
    let a = zero.sub_scaled(f, &sf, &-Rational::one(), order);
    a.sub_scaled(g, &sg, &Rational::one(), order)
}

/// A reduced Groebner basis up to a degree cap.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub basis: Vec<XPolynomial>,
    pub degree_cap: u32,
    /// Some S-pair had an lcm above the cap and was not processed.
    pub truncated: bool,
}

pub fn buchberger(ideal: &IdealPresentation, degree_cap: u32) -> Result<GroebnerBasis> {
    let order = &ideal.order;
    let nvars = order.nvars();
    let mut max_deg = 0;
    for g in &ideal.generators {
        if g.is_zero() {
            continue;
        }
        if g.nvars() != nvars {
            return Err(Error::LengthMismatch { expected: nvars, got: g.nvars() });
        }
        max_deg = max_deg.max(g.homogeneous_degree().ok_or(Error::NonHomogeneous)?);
    }
    if degree_cap < max_deg {
        return Err(Error::DegreeCapTooSmall { cap: degree_cap, degree: max_deg });
    }

    let mut basis: Vec<Poly> = Vec::new();
    let mut pairs: Vec<(u32, usize, usize)> = Vec::new();
    let mut truncated = false;
    let mut inputs: Vec<Poly> =
        ideal.generators.iter().filter(|g| !g.is_zero()).map(|g| Poly::from_x(g, order)).collect();
    inputs.sort_by(|a, b| order.cmp_graded(a.lead(), b.lead()));

    let add = |p: Poly, basis: &mut Vec<Poly>, pairs: &mut Vec<(u32, usize, usize)>, truncated: &mut bool| {
        let k = basis.len();
        for (i, b) in basis.iter().enumerate() {
            let lcm = b.lead().lcm(p.lead());
            let d = lcm.degree();
            if d > degree_cap {
                *truncated = true;
                continue;
            }
            // coprime leading monomials: the S-polynomial reduces to zero
            if lcm.degree() == b.lead().degree() + p.lead().degree() {
                continue;
            }
            pairs.push((d, i, k));
        }
        basis.push(p);
    };

    for p in inputs {
        let r = reduce(&p, &basis, order).monic();
        if !r.is_zero() {
            add(r, &mut basis, &mut pairs, &mut truncated);
        }
    }
    // normal strategy: smallest lcm degree first
    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (da, ia, ja) = pairs[a];
                let (db, ib, jb) = pairs[b];
                da.cmp(&db).then_with(|| {
                    let la = basis[ia].lead().lcm(basis[ja].lead());
                    let lb = basis[ib].lead().lcm(basis[jb].lead());
                    order.cmp_graded(&la, &lb)
                })
            })
            .unwrap();
        let (_, i, j) = pairs.swap_remove(best);
        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = reduce(&s, &basis, order).monic();
        if !r.is_zero() {
            add(r, &mut basis, &mut pairs, &mut truncated);
        }
    }

    let reduced = interreduce(basis, order);
    Ok(GroebnerBasis { basis: reduced.iter().map(|p| p.to_x(nvars)).collect(), degree_cap, truncated })
}

fn interreduce(basis: Vec<Poly>, order: &MonomialOrder) -> Vec<Poly> {
    let mut minimal: Vec<Poly> = Vec::new();
    for (i, p) in basis.iter().enumerate() {
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(j, q)| j != i && q.lead().divides(p.lead()) && (q.lead() != p.lead() || j < i));
        if !redundant {
            minimal.push(p.clone());
        }
    }
    let mut out: Vec<Poly> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Poly> =
                minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, q)| q.clone()).collect();
            let p = &minimal[i];
            let head = Poly(vec![p.0[0].clone()]);
            let tail = reduce(&Poly(p.0[1..].to_vec()), &others, order);
            let mut terms = head.0;
            terms.extend(tail.0);
            Poly(terms)
        })
        .collect();
    out.sort_by(|a, b| order.cmp_graded(a.lead(), b.lead()));
    out
}

/// Minimal generators of the initial ideal up to the cap.
pub fn initial_ideal(ideal: &IdealPresentation, degree_cap: u32) -> Result<BTreeSet<Exponent>> {
    let gb = buchberger(ideal, degree_cap)?;
    Ok(leading_exponents(&gb, &ideal.order))
}

pub fn leading_exponents(gb: &GroebnerBasis, order: &MonomialOrder) -> BTreeSet<Exponent> {
    gb.basis.iter().map(|p| p.terms().map(|(e, _)| e).max_by(|a, b| order.cmp_graded(a, b)).unwrap().clone()).collect()
}

/// Every S-polynomial with lcm degree within the cap reduces to zero.
pub fn satisfies_buchberger_criterion(gb: &GroebnerBasis, order: &MonomialOrder) -> bool {
    let polys: Vec<Poly> = gb.basis.iter().map(|p| Poly::from_x(p, order)).collect();
    for i in 0..polys.len() {
        for j in i + 1..polys.len() {
            if polys[i].lead().lcm(polys[j].lead()).degree() > gb.degree_cap {
                continue;
            }
            if !reduce(&s_polynomial(&polys[i], &polys[j], order), &polys, order).is_zero() {
                return false;
            }
        }
    }
    true
}

/// No non-leading monomial of any element is divisible by another element's
/// leading monomial, and all leading coefficients are 1.
pub fn is_reduced(gb: &GroebnerBasis, order: &MonomialOrder) -> bool {
    let polys: Vec<Poly> = gb.basis.iter().map(|p| Poly::from_x(p, order)).collect();
    for (i, p) in polys.iter().enumerate() {
        if !gb.basis[i].coeff(p.lead()).is_one() {
            return false;
        }
        for (k, (e, _)) in p.0.iter().enumerate() {
            for (j, other) in polys.iter().enumerate() {
                if (i, k) != (j, 0) && other.lead().divides(e) {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    fn poly(terms: &[(&[u32], i64)]) -> XPolynomial {
        let nvars = terms[0].0.len();
        XPolynomial::from_terms(nvars, terms.iter().map(|(e, c)| (Exponent::new(e.to_vec()), q(*c))))
    }

    #[test]
    fn principal_ideal() {
        let ideal =
            IdealPresentation { generators: vec![poly(&[(&[1, 1], 1), (&[0, 2], -1)])], order: MonomialOrder::lex(2) };
        let gb = buchberger(&ideal, 4).unwrap();
        assert_eq!(gb.basis, ideal.generators);
        assert!(satisfies_buchberger_criterion(&gb, &ideal.order));
    }

    #[test]
    fn monomial_input_is_its_own_basis() {
        let gens = vec![poly(&[(&[2, 0], 1)]), poly(&[(&[1, 1], 1)])];
        let ideal = IdealPresentation { generators: gens, order: MonomialOrder::lex(2) };
        let gb = buchberger(&ideal, 4).unwrap();
        let lead = leading_exponents(&gb, &ideal.order);
        assert_eq!(lead, BTreeSet::from([Exponent::from([2, 0]), Exponent::from([1, 1])]));
        assert_eq!(gb.basis.len(), 2);
        assert!(is_reduced(&gb, &ideal.order));
    }

    #[test]
    fn initial_ideal_of_binomial() {
        let ideal =
            IdealPresentation { generators: vec![poly(&[(&[1, 1], 1), (&[0, 2], -3)])], order: MonomialOrder::lex(2) };
        assert_eq!(initial_ideal(&ideal, 4).unwrap(), BTreeSet::from([Exponent::from([1, 1])]));
    }

    #[test]
    fn twisted_cubic() {
        // <xz - y^2, xw - yz, yw - z^2> under degrevlex is already a Groebner basis
        let gens = vec![
            poly(&[(&[1, 0, 1, 0], 1), (&[0, 2, 0, 0], -1)]),
            poly(&[(&[1, 0, 0, 1], 1), (&[0, 1, 1, 0], -1)]),
            poly(&[(&[0, 1, 0, 1], 1), (&[0, 0, 2, 0], -1)]),
        ];
        let drl = IdealPresentation { generators: gens.clone(), order: MonomialOrder::degrevlex(4) };
        let gb = buchberger(&drl, 5).unwrap();
        assert_eq!(
            leading_exponents(&gb, &drl.order),
            BTreeSet::from([Exponent::from([0, 2, 0, 0]), Exponent::from([0, 1, 1, 0]), Exponent::from([0, 0, 2, 0])])
        );
        assert!(satisfies_buchberger_criterion(&gb, &drl.order));
        assert!(is_reduced(&gb, &drl.order));

        let lex = IdealPresentation { generators: gens, order: MonomialOrder::lex(4) };
        let gb = buchberger(&lex, 5).unwrap();
        assert!(satisfies_buchberger_criterion(&gb, &lex.order));
        assert!(is_reduced(&gb, &lex.order));
        assert_eq!(
            leading_exponents(&gb, &lex.order),
            BTreeSet::from([Exponent::from([1, 0, 1, 0]), Exponent::from([1, 0, 0, 1]), Exponent::from([0, 1, 0, 1])])
        );
    }

    #[test]
    fn errors() {
        let inhom =
            IdealPresentation { generators: vec![poly(&[(&[1, 1], 1), (&[0, 1], 1)])], order: MonomialOrder::lex(2) };
        assert_eq!(buchberger(&inhom, 4).unwrap_err(), Error::NonHomogeneous);
        let ideal = IdealPresentation { generators: vec![poly(&[(&[3, 0], 1)])], order: MonomialOrder::lex(2) };
        assert!(matches!(buchberger(&ideal, 2), Err(Error::DegreeCapTooSmall { .. })));
    }
}
