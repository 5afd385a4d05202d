use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use smallvec::SmallVec;

use super::Rational;
use crate::error::{Error, Result};

/// Index of a stratum coordinate `T_{alpha,beta}` in its family's variable table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarId(pub u32);

impl VarId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A monomial in the T-variables: `(variable, exponent)` pairs sorted by
/// variable, exponents positive. The empty monomial is `1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct TMonomial(SmallVec<[(VarId, u32); 4]>);

impl TMonomial {
    pub fn one() -> Self {
        TMonomial(SmallVec::new())
    }

    pub fn var(v: VarId) -> Self {
        let mut s = SmallVec::new();
        s.push((v, 1));
        TMonomial(s)
    }

    pub fn factors(&self) -> &[(VarId, u32)] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent_of(&self, v: VarId) -> u32 {
        self.0.binary_search_by_key(&v, |(w, _)| *w).map(|i| self.0[i].1).unwrap_or(0)
    }

    /// The monomial with `v` removed, and the removed exponent.
    pub fn split_off(&self, v: VarId) -> (TMonomial, u32) {
        match self.0.binary_search_by_key(&v, |(w, _)| *w) {
            Ok(i) => {
                let mut rest = self.0.clone();
                let (_, e) = rest.remove(i);
                (TMonomial(rest), e)
            }
            Err(_) => (self.clone(), 0),
        }
    }

    pub fn mul(&self, other: &TMonomial) -> TMonomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        TMonomial(out)
    }

    pub fn mul_var(&self, v: VarId) -> TMonomial {
        let mut out = self.0.clone();
        match out.binary_search_by_key(&v, |(w, _)| *w) {
            Ok(i) => out[i].1 += 1,
            Err(i) => out.insert(i, (v, 1)),
        }
        TMonomial(out)
    }

    fn weighted_degree(&self, weights: &[u64]) -> Result<u64> {
        self.0.iter().try_fold(0u64, |acc, (v, e)| {
            weights.get(v.index()).map(|w| acc + w * u64::from(*e)).ok_or(Error::MissingWeight(v.index()))
        })
    }
}

/// Outcome of a weighted-degree query.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    /// The zero polynomial, homogeneous of every degree.
    Zero,
    Degree(u64),
    Inhomogeneous,
}

/// Polynomial in the stratum coordinates with exact rational coefficients.
///
/// Terms are kept in a sorted map keyed by [`TMonomial`], so equal
/// polynomials have identical representations and iteration is deterministic.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TPolynomial {
    terms: BTreeMap<TMonomial, Rational>,
}

impl TPolynomial {
    pub fn zero() -> Self {
        TPolynomial { terms: BTreeMap::new() }
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(TMonomial::one(), c);
        p
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn var(v: VarId) -> Self {
        let mut p = Self::zero();
        p.add_term(TMonomial::var(v), Rational::one());
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (TMonomial, Rational)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &TMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&TMonomial::one())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(TMonomial::total_degree).max()
    }

    pub fn contains_var(&self, v: VarId) -> bool {
        self.terms.keys().any(|m| m.exponent_of(v) > 0)
    }

    /// Variables occurring in some term, ascending.
    pub fn variables(&self) -> Vec<VarId> {
        let mut vs: Vec<VarId> = self.terms.keys().flat_map(|m| m.0.iter().map(|(v, _)| *v)).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn add_term(&mut self, m: TMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * m * other`.
    pub fn add_scaled(&mut self, other: &TPolynomial, m: &TMonomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (m2, c2) in &other.terms {
            self.add_term(m.mul(m2), c * c2);
        }
    }

    pub fn add_assign(&mut self, other: &TPolynomial) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &Rational) -> TPolynomial {
        if c.is_zero() {
            return TPolynomial::zero();
        }
        TPolynomial { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> TPolynomial {
        let mut acc = TPolynomial::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Replaces every occurrence of `v` by `g`.
    pub fn substitute(&self, v: VarId, g: &TPolynomial) -> TPolynomial {
        if !self.contains_var(v) {
            return self.clone();
        }
        let mut powers: Vec<TPolynomial> = vec![TPolynomial::one()];
        let mut out = TPolynomial::zero();
        for (m, c) in &self.terms {
            let (rest, k) = m.split_off(v);
            if k == 0 {
                out.add_term(rest, c.clone());
                continue;
            }
            while powers.len() <= k as usize {
                let next = &powers[powers.len() - 1] * g;
                powers.push(next);
            }
            out.add_scaled(&powers[k as usize], &rest, c);
        }
        out
    }

    /// Coefficients of the total-degree-1 terms.
    pub fn linear_part(&self) -> BTreeMap<VarId, Rational> {
        self.terms.iter().filter(|(m, _)| m.total_degree() == 1).map(|(m, c)| (m.0[0].0, c.clone())).collect()
    }

    pub fn weighted_degree(&self, weights: &[u64]) -> Result<Homogeneity> {
        let mut degree = None;
        let mut homogeneous = true;
        for m in self.terms.keys() {
            let d = m.weighted_degree(weights)?;
            match degree {
                None => degree = Some(d),
                Some(d0) if d0 != d => homogeneous = false,
                _ => {}
            }
        }
        Ok(match degree {
            None => Homogeneity::Zero,
            Some(_) if !homogeneous => Homogeneity::Inhomogeneous,
            Some(d) => Homogeneity::Degree(d),
        })
    }

    /// Evaluates at a point given as a lookup from variable to value.
    pub fn evaluate(&self, value: impl Fn(VarId) -> Option<Rational>) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.factors() {
                let x = value(*v).ok_or(Error::MissingAssignment(v.index()))?;
                t *= num_traits::pow(x, *e as usize);
            }
            total += t;
        }
        Ok(total)
    }
}

impl Add for &TPolynomial {
    type Output = TPolynomial;
    fn add(self, rhs: &TPolynomial) -> TPolynomial {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl Sub for &TPolynomial {
    type Output = TPolynomial;
    fn sub(self, rhs: &TPolynomial) -> TPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &TPolynomial {
    type Output = TPolynomial;
    fn neg(self) -> TPolynomial {
        TPolynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

impl Mul for &TPolynomial {
    type Output = TPolynomial;
    fn mul(self, rhs: &TPolynomial) -> TPolynomial {
        let mut out = TPolynomial::zero();
        let (small, large) = if self.len() <= rhs.len() { (self, rhs) } else { (rhs, self) };
        for (m, c) in &small.terms {
            out.add_scaled(large, m, c);
        }
        out
    }
}

impl fmt::Display for TPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c < &Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = abs.is_one();
            if !unit || m.0.is_empty() {
                write!(f, "{abs}")?;
            }
            for (j, (v, e)) in m.0.iter().enumerate() {
                if j > 0 || !unit {
                    write!(f, "*")?;
                }
                write!(f, "T{}", v.0)?;
                if *e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Values of variables, keyed by [`VarId`].
pub type Point = HashMap<VarId, Rational>;

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    const V: VarId = VarId(0);
    const W: VarId = VarId(1);

    fn tv(v: VarId) -> TPolynomial {
        TPolynomial::var(v)
    }

    /// Independent expand-and-collect: evaluates both sides on a grid.
    fn agree_on_grid(a: &TPolynomial, b: &TPolynomial) -> bool {
        (-3..=3).all(|x| {
            (-3..=3).all(|y| {
                let at = |v: VarId| Some(if v == V { q(x) } else { q(y) });
                a.evaluate(at).unwrap() == b.evaluate(at).unwrap()
            })
        })
    }

    #[test]
    fn substitute_examples() {
        assert!(tv(V).substitute(V, &TPolynomial::zero()).is_zero());

        let f = &tv(V).pow(2) + &tv(V);
        assert_eq!(f.substitute(V, &tv(V)), f);

        // 2vw - 3 with v := w + 1 gives 2w^2 + 2w - 3
        let f = &(&tv(V) * &tv(W)).scale(&q(2)) - &TPolynomial::constant(q(3));
        let g = &tv(W) + &TPolynomial::one();
        let got = f.substitute(V, &g);
        let expected = &(&tv(W).pow(2).scale(&q(2)) + &tv(W).scale(&q(2))) - &TPolynomial::constant(q(3));
        assert_eq!(got, expected);
        assert!(agree_on_grid(&got, &expected));
        assert!(!got.contains_var(V));
    }

    #[test]
    fn linear_part_examples() {
        assert!(TPolynomial::zero().linear_part().is_empty());
        let f = &tv(V).scale(&q(3)) + &(&tv(V) * &tv(W));
        assert_eq!(f.linear_part(), BTreeMap::from([(V, q(3))]));
        let f = &(&tv(V) - &tv(W)) + &tv(W).pow(2).scale(&q(5));
        assert_eq!(f.linear_part(), BTreeMap::from([(V, q(1)), (W, q(-1))]));
    }

    #[test]
    fn weighted_degree_examples() {
        let w = [2, 3];
        assert_eq!(TPolynomial::zero().weighted_degree(&w).unwrap(), Homogeneity::Zero);
        assert_eq!((&tv(V) * &tv(W)).weighted_degree(&w).unwrap(), Homogeneity::Degree(5));
        assert_eq!((&tv(V) + &tv(W)).weighted_degree(&w).unwrap(), Homogeneity::Inhomogeneous);
        assert_eq!(tv(VarId(7)).weighted_degree(&w), Err(Error::MissingWeight(7)));
    }

    fn arb_tpoly() -> impl Strategy<Value = TPolynomial> {
        prop::collection::vec((0u32..3, 0u32..3, 0u32..3, -4i64..4), 0..6).prop_map(|terms| {
            TPolynomial::from_terms(terms.into_iter().map(|(a, b, c, k)| {
                let mut m = TMonomial::one();
                for (v, e) in [(0, a), (1, b), (2, c)] {
                    for _ in 0..e {
                        m = m.mul_var(VarId(v));
                    }
                }
                (m, q(k))
            }))
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(f in arb_tpoly(), g in arb_tpoly(), h in arb_tpoly()) {
            prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            prop_assert!((&f - &f).is_zero());
        }

        #[test]
        fn substitution_eliminates(f in arb_tpoly(), g in arb_tpoly()) {
            let g = g.substitute(VarId(1), &TPolynomial::zero());
            let s = f.substitute(VarId(1), &g);
            prop_assert!(!s.contains_var(VarId(1)));
            prop_assert!(s.terms().all(|(_, c)| !c.is_zero()));
            // agrees with evaluation-then-substitution
            let at = |x: i64, y: i64| move |v: VarId| Some(match v.0 { 0 => q(x), 2 => q(y), _ => unreachable!() });
            for (x, y) in [(1, 2), (-2, 3), (0, -1)] {
                let gy = g.evaluate(at(x, y)).unwrap();
                let direct = f.evaluate(|v: VarId| Some(match v.0 { 0 => q(x), 1 => gy.clone(), _ => q(y) })).unwrap();
                prop_assert_eq!(s.evaluate(at(x, y)).unwrap(), direct);
            }
        }
    }
}
