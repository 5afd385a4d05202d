//! Defining equations of a stratum from the degree-`r+1` reduction of the
//! marked family.
//!
//! For every `m` in `J_{r+1}` one product `x_i g_a` with `m = x_i x^a` is
//! fixed (smallest `i`), and these products are reduced against each other in
//! ascending order so that each becomes `m - sum_d c_{m,d} x^d` with `d` in
//! `Delta_{r+1}`. Every other product `x_j g_a'` landing on the same `m` is
//! then reduced to a combination of `Delta_{r+1}`, and its coefficients are
//! the equations: they vanish exactly when the ideal generated in degree `r`
//! has the expected dimension in degree `r+1`.

use std::collections::{HashMap, HashSet};

use num_traits::{One, Zero};

use super::MarkedFamily;
use crate::algebra::{Exponent, Homogeneity, Rational, TMonomial, TPolynomial, VarId};

/// Which reduction produced an equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquationSource {
    /// The degree-`r+1` monomial `x_j x^corner`.
    pub marked: Exponent,
    pub multiplier: usize,
    pub corner: Exponent,
    /// The standard monomial whose coefficient this is.
    pub delta: Exponent,
}

#[derive(Clone, Debug)]
pub struct StratumPresentation {
    pub num_variables: usize,
    pub equations: Vec<TPolynomial>,
    pub sources: Vec<EquationSource>,
    pub weights: Vec<u64>,
}

impl StratumPresentation {
    pub fn variables(&self) -> impl Iterator<Item = VarId> {
        (0..self.num_variables as u32).map(VarId)
    }
}

/// Normal forms of `J_{r+1}` and `Delta_{r+1}` monomials as dense vectors
/// over `Delta_{r+1}`.
struct Reducer<'a> {
    delta_index: HashMap<&'a Exponent, usize>,
    ideal_index: HashMap<&'a Exponent, usize>,
    /// `normal[k][d]` = coefficient of `delta[d]` in the tail of the k-th
    /// ideal monomial, i.e. `x^m = sum_d normal[k][d] x^delta[d]` modulo the
    /// reduced products.
    normal: Vec<Option<Vec<TPolynomial>>>,
    delta_len: usize,
}

impl Reducer<'_> {
    /// Adds `T_v * NF(mu)` into `acc`.
    fn accumulate(&self, acc: &mut [TPolynomial], mu: &Exponent, v: VarId, below: Option<usize>) {
        let tv = TMonomial::var(v);
        if let Some(&d) = self.delta_index.get(mu) {
            acc[d].add_term(tv, Rational::one());
            return;
        }
        let k = self.ideal_index[mu];
        if let Some(limit) = below {
            assert!(k < limit, "reduction must only use strictly smaller monomials");
        }
        let nf = self.normal[k].as_ref().expect("normal forms are built in ascending order");
        for (slot, c) in acc.iter_mut().zip(nf) {
            if !c.is_zero() {
                slot.add_scaled(c, &tv, &Rational::one());
            }
        }
    }
}

pub fn stratum_equations(fam: &MarkedFamily) -> StratumPresentation {
    let cs = fam.corner_set();
    let order = fam.order();
    let n = cs.n();
    let r = cs.r();

    let mut ideal: Vec<Exponent> = cs.expansion().into_iter().collect();
    ideal.sort_by(|a, b| order.cmp_same_degree(a, b));
    let ideal_set: HashSet<&Exponent> = ideal.iter().collect();
    let delta: Vec<Exponent> = order.sorted_slice(r + 1).into_iter().rev().filter(|e| !ideal_set.contains(e)).collect();

    let mut reducer = Reducer {
        delta_index: delta.iter().enumerate().map(|(i, e)| (e, i)).collect(),
        ideal_index: ideal.iter().enumerate().map(|(i, e)| (e, i)).collect(),
        normal: vec![None; ideal.len()],
        delta_len: delta.len(),
    };

    // canonical products, ascending
    let mut canonical = Vec::with_capacity(ideal.len());
    for (k, m) in ideal.iter().enumerate() {
        let (i, alpha) = (0..=n)
            .find_map(|i| m.sub_var(i).filter(|a| cs.contains(a)).map(|a| (i, a)))
            .expect("every monomial of J_{r+1} is a multiple of a corner");
        let g = fam.generator(&alpha).expect("one generator per corner");
        let mut tail = vec![TPolynomial::zero(); reducer.delta_len];
        for (beta, v) in &g.tail {
            reducer.accumulate(&mut tail, &beta.add_var(i), *v, Some(k));
        }
        reducer.normal[k] = Some(tail);
        canonical.push(i);
    }

    let mut equations = Vec::new();
    let mut sources = Vec::new();
    let mut seen: HashSet<TPolynomial> = HashSet::new();
    for (k, m) in ideal.iter().enumerate() {
        for j in 0..=n {
            if j == canonical[k] {
                continue;
            }
            let Some(alpha) = m.sub_var(j).filter(|a| cs.contains(a)) else { continue };
            let g = fam.generator(&alpha).expect("one generator per corner");
            let mut other = vec![TPolynomial::zero(); reducer.delta_len];
            for (beta, v) in &g.tail {
                reducer.accumulate(&mut other, &beta.add_var(j), *v, None);
            }
            let own = reducer.normal[k].as_ref().unwrap();
            for (d, (c, s)) in own.iter().zip(&other).enumerate() {
                let eq = c - s;
                if eq.is_zero() {
                    continue;
                }
                let expected = fam.omega().weigh(m) - fam.omega().weigh(&delta[d]);
                match eq.weighted_degree(fam.weights()) {
                    Ok(Homogeneity::Degree(w)) if w == expected => {}
                    other => panic!(
                        "equation for ({m:?}, {:?}) has weighted degree {other:?}, expected {expected}",
                        delta[d]
                    ),
                }
                assert!(eq.constant_term().is_zero(), "stratum equation with a constant term");
                let key = monic(&eq);
                if seen.insert(key) {
                    equations.push(eq);
                    sources.push(EquationSource {
                        marked: m.clone(),
                        multiplier: j,
                        corner: alpha.clone(),
                        delta: delta[d].clone(),
                    });
                }
            }
        }
    }
    StratumPresentation { num_variables: fam.variables().len(), equations, sources, weights: fam.weights().to_vec() }
}

/// Scaled so the first stored coefficient is 1; used to drop scalar duplicates.
fn monic(p: &TPolynomial) -> TPolynomial {
    match p.terms().next() {
        Some((_, c)) => p.scale(&c.recip()),
        None => p.clone(),
    }
}
