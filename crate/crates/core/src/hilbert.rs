//! Hilbert polynomials, their Macaulay (Gotzmann) decomposition, and the
//! dimension counts of the degree-`r` and degree-`r+1` ideal slices.

use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::algebra::Rational;
use crate::error::{Error, Result};

/// Univariate polynomial in `t`, coefficients indexed by degree, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly(Vec<Rational>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn zero() -> Self {
        UniPoly(Vec::new())
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.0.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, t: i64) -> Rational {
        let t = Rational::from_integer(BigInt::from(t));
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * &t + c)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let len = self.0.len().max(other.0.len());
        let get = |p: &UniPoly, i: usize| p.0.get(i).cloned().unwrap_or_else(Rational::zero);
        UniPoly::new((0..len).map(|i| get(self, i) - get(other, i)).collect())
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let len = self.0.len().max(other.0.len());
        let get = |p: &UniPoly, i: usize| p.0.get(i).cloned().unwrap_or_else(Rational::zero);
        UniPoly::new((0..len).map(|i| get(self, i) + get(other, i)).collect())
    }

    fn mul_linear(&self, shift: &Rational) -> UniPoly {
        // (t + shift) * self
        let mut out = vec![Rational::zero(); self.0.len() + 1];
        for (i, c) in self.0.iter().enumerate() {
            out[i + 1] += c;
            out[i] += c * shift;
        }
        UniPoly::new(out)
    }

    /// `binom(t + shift, a) = (t+shift)(t+shift-1)...(t+shift-a+1) / a!`.
    pub fn binomial(shift: i64, a: u32) -> UniPoly {
        let mut p = UniPoly::new(vec![Rational::one()]);
        let mut fact = BigInt::one();
        for j in 0..a {
            p = p.mul_linear(&Rational::from_integer(BigInt::from(shift - i64::from(j))));
            fact *= BigInt::from(j + 1);
        }
        let inv = Rational::new(BigInt::one(), fact);
        UniPoly::new(p.0.into_iter().map(|c| c * &inv).collect())
    }

    /// Sign of `self` for all sufficiently large `t`.
    pub fn eventual_sign(&self) -> std::cmp::Ordering {
        match self.0.last() {
            None => std::cmp::Ordering::Equal,
            Some(c) if c.is_positive() => std::cmp::Ordering::Greater,
            Some(_) => std::cmp::Ordering::Less,
        }
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if c.is_negative() { "-" } else { "+" })?;
            }
            first = false;
            if i == 0 || !abs.is_one() {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An admissible Hilbert polynomial with its Macaulay data.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HilbertPolynomial {
    poly: UniPoly,
    macaulay: Vec<u32>,
}

impl HilbertPolynomial {
    /// Parses and decomposes in one step.
    pub fn parse(text: &str) -> Result<Self> {
        Self::from_poly(parse_hilbert_polynomial(text)?)
    }

    pub fn from_poly(poly: UniPoly) -> Result<Self> {
        let macaulay = macaulay_decomposition(&poly)?;
        Ok(HilbertPolynomial { poly, macaulay })
    }

    pub fn poly(&self) -> &UniPoly {
        &self.poly
    }

    /// `a_1 >= a_2 >= ... >= a_r >= 0`.
    pub fn macaulay(&self) -> &[u32] {
        &self.macaulay
    }

    /// The Gotzmann number `r`.
    pub fn gotzmann(&self) -> u32 {
        self.macaulay.len() as u32
    }

    /// `P(s)` as an integer (admissible polynomials are integer-valued).
    pub fn value(&self, s: i64) -> BigInt {
        let v = self.poly.eval(s);
        debug_assert!(v.is_integer());
        v.to_integer()
    }
}

impl fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// Parses an integer-coefficient polynomial in `t`, e.g. `2t+2`, `2*t + 2`,
/// `t^2 - 1`, `5`.
pub fn parse_hilbert_polynomial(text: &str) -> Result<UniPoly> {
    let chars: Vec<char> = text.chars().collect();
    let mut pos = 0;
    let mut coeffs: Vec<Rational> = Vec::new();
    let syntax = |position: usize, message: &str| Error::Syntax { position, message: message.to_string() };
    let skip_ws = |pos: &mut usize| {
        while *pos < chars.len() && chars[*pos].is_whitespace() {
            *pos += 1;
        }
    };
    let mut terms = 0;
    loop {
        skip_ws(&mut pos);
        if pos >= chars.len() {
            break;
        }
        let mut sign = BigInt::one();
        if chars[pos] == '+' || chars[pos] == '-' {
            if chars[pos] == '-' {
                sign = -sign;
            }
            pos += 1;
            skip_ws(&mut pos);
        } else if terms > 0 {
            return Err(syntax(pos, "expected `+` or `-`"));
        }
        let start = pos;
        while pos < chars.len() && (chars[pos].is_ascii_digit() || chars[pos] == '.' || chars[pos] == '/') {
            pos += 1;
        }
        let digits: String = chars[start..pos].iter().collect();
        let coeff = if digits.is_empty() {
            None
        } else {
            if digits.contains('.') || digits.contains('/') {
                return Err(Error::NonIntegerCoefficient(digits));
            }
            Some(digits.parse::<BigInt>().map_err(|_| syntax(start, "bad integer"))?)
        };
        skip_ws(&mut pos);
        let mut degree = 0usize;
        let has_star = pos < chars.len() && chars[pos] == '*';
        if has_star {
            if coeff.is_none() {
                return Err(syntax(pos, "`*` without a coefficient"));
            }
            pos += 1;
            skip_ws(&mut pos);
        }
        if pos < chars.len() && chars[pos] == 't' {
            pos += 1;
            degree = 1;
            skip_ws(&mut pos);
            if pos < chars.len() && chars[pos] == '^' {
                pos += 1;
                skip_ws(&mut pos);
                let s = pos;
                while pos < chars.len() && chars[pos].is_ascii_digit() {
                    pos += 1;
                }
                if s == pos {
                    return Err(syntax(s, "expected exponent after `^`"));
                }
                let e: String = chars[s..pos].iter().collect();
                degree = e.parse().map_err(|_| syntax(s, "exponent too large"))?;
            }
        } else if has_star {
            return Err(syntax(pos, "expected `t` after `*`"));
        } else if coeff.is_none() {
            return Err(syntax(pos, "expected a coefficient or `t`"));
        }
        let c = coeff.unwrap_or_else(BigInt::one) * sign;
        if coeffs.len() <= degree {
            coeffs.resize(degree + 1, Rational::zero());
        }
        coeffs[degree] += Rational::from_integer(c);
        terms += 1;
    }
    if terms == 0 {
        return Err(syntax(0, "empty polynomial"));
    }
    Ok(UniPoly::new(coeffs))
}

/// Greedy Macaulay decomposition `P(t) = sum_i binom(t + a_i - i + 1, a_i)`.
pub fn macaulay_decomposition(p: &UniPoly) -> Result<Vec<u32>> {
    if p.is_zero() {
        return Err(Error::NotAdmissible("the zero polynomial".into()));
    }
    if p.eventual_sign() != std::cmp::Ordering::Greater {
        return Err(Error::NotAdmissible(format!("{p} is eventually negative")));
    }
    let mut rest = p.clone();
    let mut seq: Vec<u32> = Vec::new();
    while !rest.is_zero() {
        let i = seq.len() as i64 + 1;
        let deg = rest.degree().unwrap_or(0) as u32;
        let bound = seq.last().copied().unwrap_or(deg).min(deg);
        // largest feasible a_i; any a_i below deg(rest) could never remove the
        // leading term, since all later a_j are bounded by a_i
        let a = (0..=bound).rev().find(|&a| {
            rest.sub(&UniPoly::binomial(i64::from(a) - i + 1, a)).eventual_sign() != std::cmp::Ordering::Less
        });
        match a {
            Some(a) if a == deg => {
                rest = rest.sub(&UniPoly::binomial(i64::from(a) - i + 1, a));
                seq.push(a);
            }
            _ => {
                return Err(Error::NotAdmissible(format!("{p}: greedy step {i} fails on remainder {rest}")));
            }
        }
    }
    let check = seq
        .iter()
        .enumerate()
        .fold(UniPoly::zero(), |acc, (k, &a)| acc.add(&UniPoly::binomial(i64::from(a) - k as i64, a)));
    assert_eq!(&check, p, "Macaulay identity failed");
    Ok(seq)
}

/// Dimensions of the degree-`r` and degree-`r+1` slices of an ideal in
/// `M_{P,n}` and of their complements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChartCounts {
    pub n: usize,
    pub r: u32,
    pub corners_target: usize,
    pub expansion_target: usize,
    pub delta_r_size: usize,
    pub delta_r1_size: usize,
}

pub fn chart_counts(p: &HilbertPolynomial, n: usize) -> Result<ChartCounts> {
    if n == 0 {
        return Err(Error::InadmissibleInAmbient { n, reason: "ambient dimension must be at least 1".into() });
    }
    let r = p.gotzmann();
    let slice = |d: u32| BigInt::from(binomial(n as u64 + u64::from(d), u64::from(d)));
    let pr = p.value(i64::from(r));
    let pr1 = p.value(i64::from(r) + 1);
    let corners = slice(r) - &pr;
    let expansion = slice(r + 1) - &pr1;
    let to_count = |x: &BigInt, what: &str| {
        if x.is_negative() {
            return Err(Error::InadmissibleInAmbient { n, reason: format!("{what} = {x} is negative") });
        }
        x.to_usize().ok_or_else(|| Error::InadmissibleInAmbient { n, reason: format!("{what} = {x} is too large") })
    };
    Ok(ChartCounts {
        n,
        r,
        corners_target: to_count(&corners, "corner count")?,
        expansion_target: to_count(&expansion, "degree r+1 ideal dimension")?,
        delta_r_size: to_count(&pr, "P(r)")?,
        delta_r1_size: to_count(&pr1, "P(r+1)")?,
    })
}
