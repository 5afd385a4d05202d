//! Monomial orders on fixed-degree slices and weight vectors realizing them.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::Exponent;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Lex,
    Degrevlex,
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderKind::Lex => "lex",
            OrderKind::Degrevlex => "degrevlex",
        })
    }
}

impl FromStr for OrderKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "lex" => Ok(OrderKind::Lex),
            "degrevlex" | "grevlex" | "rvlex" | "revlex" => Ok(OrderKind::Degrevlex),
            other => Err(Error::UnsupportedOrder(other.to_string())),
        }
    }
}

/// A monomial order with a variable precedence.
///
/// `precedence[k]` is the index of the `k`-th most significant variable, so the
/// default `[0, 1, ..., n]` means `x_0 > x_1 > ... > x_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    precedence: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, precedence: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; precedence.len()];
        for &i in &precedence {
            if i >= seen.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPrecedence(format!("{precedence:?} is not a permutation")));
            }
        }
        Ok(MonomialOrder { kind, precedence })
    }

    /// `x_0 > x_1 > ... > x_n`.
    pub fn standard(kind: OrderKind, nvars: usize) -> Self {
        MonomialOrder { kind, precedence: (0..nvars).collect() }
    }

    pub fn lex(nvars: usize) -> Self {
        Self::standard(OrderKind::Lex, nvars)
    }

    pub fn degrevlex(nvars: usize) -> Self {
        Self::standard(OrderKind::Degrevlex, nvars)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn precedence(&self) -> &[usize] {
        &self.precedence
    }

    pub fn nvars(&self) -> usize {
        self.precedence.len()
    }

    /// Compares two exponents of the same degree.
    pub fn compare(&self, a: &Exponent, b: &Exponent) -> Result<Ordering> {
        if a.len() != self.nvars() || b.len() != self.nvars() {
            return Err(Error::LengthMismatch { expected: self.nvars(), got: a.len().max(b.len()) });
        }
        let (da, db) = (a.degree(), b.degree());
        if da != db {
            return Err(Error::DegreeMismatch { left: da, right: db });
        }
        Ok(self.cmp_same_degree(a, b))
    }

    /// Unchecked comparison; callers guarantee equal degree and length.
    pub fn cmp_same_degree(&self, a: &Exponent, b: &Exponent) -> Ordering {
        let (a, b) = (a.entries(), b.entries());
        match self.kind {
            OrderKind::Lex => {
                for &i in &self.precedence {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderKind::Degrevlex => {
                for &i in self.precedence.iter().rev() {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }

    /// Degree first, then the slice order. Used by the Groebner oracle.
    pub fn cmp_graded(&self, a: &Exponent, b: &Exponent) -> Ordering {
        a.degree().cmp(&b.degree()).then_with(|| self.cmp_same_degree(a, b))
    }

    /// The degree-`d` slice sorted ascending under this order.
    pub fn sorted_slice(&self, d: u32) -> Vec<Exponent> {
        let mut slice = Exponent::all_of_degree(self.nvars(), d);
        slice.sort_by(|a, b| self.cmp_same_degree(a, b));
        slice
    }

    pub fn name(&self) -> String {
        let default = self.precedence.iter().enumerate().all(|(k, &i)| k == i);
        if default {
            self.kind.to_string()
        } else {
            let prec: Vec<String> = self.precedence.iter().map(|i| format!("x{i}")).collect();
            format!("{}[{}]", self.kind, prec.join(">"))
        }
    }
}

/// Strictly positive integer weights `omega` such that `omega . a > omega . b`
/// whenever `a > b` in the order, for equal degrees `r` and `r + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct WeightVector(Vec<u64>);

const MAX_ESCALATIONS: u32 = 16;

impl WeightVector {
    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn weigh(&self, e: &Exponent) -> u64 {
        e.dot(&self.0)
    }

    /// Builds a weight vector for `order` on the degree-`r` and degree-`r+1`
    /// slices of `k[x_0..x_n]`, verified exhaustively.
    pub fn realize(order: &MonomialOrder, n: usize, r: u32) -> Result<WeightVector> {
        if order.nvars() != n + 1 || r == 0 {
            return Err(Error::WeightVerification { order: order.name(), n, r });
        }
        for candidate in Self::candidates(order, r).take(MAX_ESCALATIONS as usize + 1) {
            if Self::compatible(order, &candidate, r) {
                return Ok(candidate);
            }
        }
        Err(Error::WeightVerification { order: order.name(), n, r })
    }

    /// Wraps a given vector after checking it against both slices.
    pub fn checked(order: &MonomialOrder, omega: Vec<u64>, r: u32) -> Result<WeightVector> {
        let w = WeightVector(omega);
        if w.0.len() == order.nvars() && w.0.iter().all(|&x| x > 0) && Self::compatible(order, &w, r) {
            Ok(w)
        } else {
            Err(Error::WeightVerification { order: order.name(), n: order.nvars().saturating_sub(1), r })
        }
    }

    /// Seeds: lex uses powers of `r + 2`; degrevlex first tries the linear
    /// weights `n + 1 - k` and then the complement of reversed lex powers.
    /// Each retry doubles the base.
    fn candidates(order: &MonomialOrder, r: u32) -> impl Iterator<Item = WeightVector> + '_ {
        let n = order.nvars() - 1;
        let base0 = u64::from(r) + 2;
        let by_rank = move |f: &dyn Fn(usize) -> u64| {
            let mut w = vec![0; n + 1];
            for (k, &i) in order.precedence().iter().enumerate() {
                w[i] = f(k);
            }
            WeightVector(w)
        };
        let linear = match order.kind() {
            OrderKind::Degrevlex => Some(by_rank(&|k| (n + 1 - k) as u64)),
            OrderKind::Lex => None,
        };
        let powers = (0..=MAX_ESCALATIONS).map(move |step| {
            let base = base0 << step;
            match order.kind() {
                OrderKind::Lex => by_rank(&|k| base.pow((n - k) as u32)),
                OrderKind::Degrevlex => by_rank(&|k| base.pow(n as u32) + 1 - base.pow(k as u32)),
            }
        });
        linear.into_iter().chain(powers)
    }

    fn compatible(order: &MonomialOrder, w: &WeightVector, r: u32) -> bool {
        [r, r + 1].into_iter().all(|d| {
            let slice = order.sorted_slice(d);
            slice.windows(2).all(|pair| w.weigh(&pair[0]) < w.weigh(&pair[1]))
        })
    }
}
