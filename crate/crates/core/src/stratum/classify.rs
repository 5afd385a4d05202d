use std::collections::{BTreeSet, HashSet};

use num_traits::Zero;
use serde::Serialize;

use super::StratumPresentation;
use crate::algebra::{Point, Rational, TPolynomial, VarId};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// The stratum is an affine space of this dimension.
    AffineCell(usize),
    /// The stratum is singular at the monomial point; carries the tangent dimension.
    SingularAtOrigin(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumClassification {
    pub verdict: Verdict,
    pub tangent_dim: usize,
    pub residual_equation_count: usize,
}

/// Result of eliminating every variable that appears linearly in some
/// equation.
#[derive(Clone, Debug)]
pub struct Elimination {
    /// `(T, expression)` in elimination order; each expression only involves
    /// variables that are free or eliminated later.
    pub substitutions: Vec<(VarId, TPolynomial)>,
    /// Variables never eliminated, ascending.
    pub free: Vec<VarId>,
    /// Nonzero equations left over, none with a linear term.
    pub residual: Vec<TPolynomial>,
}

/// Repeatedly solves an equation `c T + (rest) = 0` for a variable `T`
/// occurring in a linear term. Equations are homogeneous for positive
/// weights, so the other terms of such an equation have the same weight as
/// `T` and are products of strictly lighter variables: `T` occurs only once,
/// and after substitution it never comes back.
pub fn eliminate(pres: &StratumPresentation) -> Elimination {
    let mut equations: Vec<TPolynomial> = pres.equations.iter().filter(|e| !e.is_zero()).cloned().collect();
    let mut eliminated: HashSet<VarId> = HashSet::new();
    let mut substitutions = Vec::new();

    loop {
        let pick = equations
            .iter()
            .enumerate()
            .filter_map(|(i, eq)| {
                let lin = eq.linear_part();
                // lightest variable first keeps the substituted expressions short
                lin.into_iter().min_by_key(|(v, _)| (pres.weights[v.index()], *v)).map(|(v, c)| (eq.len(), i, v, c))
            })
            .min_by_key(|(len, i, v, _)| (*len, *i, *v));
        let Some((_, idx, var, coeff)) = pick else { break };

        let eq = equations.swap_remove(idx);
        let mut rest = eq.clone();
        rest.add_term(crate::algebra::TMonomial::var(var), -coeff.clone());
        assert!(!rest.contains_var(var), "T{} occurs non-linearly in an equation it is solved from", var.0);
        let expr = rest.scale(&(-coeff.recip()));

        let mut seen = HashSet::new();
        equations = equations
            .into_iter()
            .map(|e| e.substitute(var, &expr))
            .filter(|e| !e.is_zero())
            .filter(|e| seen.insert(e.clone()))
            .collect();
        debug_assert!(equations.iter().all(|e| !e.contains_var(var)));
        eliminated.insert(var);
        substitutions.push((var, expr));
    }
    for eq in &equations {
        for v in eq.variables() {
            assert!(!eliminated.contains(&v), "eliminated variable T{} reappeared", v.0);
        }
    }
    let free = pres.variables().filter(|v| !eliminated.contains(v)).collect();
    Elimination { substitutions, free, residual: equations }
}

impl Elimination {
    /// A nonzero residual equation is homogeneous with zero linear part, so
    /// it lies in the square of the maximal ideal at the origin. The local
    /// ring at the origin then has dimension at most `free - 1` (a nonzero
    /// element of a regular local ring drops the dimension) while the tangent
    /// space still has dimension `free`; hence the stratum is singular there.
    pub fn classification(&self, pres: &StratumPresentation) -> StratumClassification {
        let tangent = self.free.len();
        assert_eq!(tangent, tangent_dimension(pres), "elimination disagrees with the Jacobian rank");
        let verdict =
            if self.residual.is_empty() { Verdict::AffineCell(tangent) } else { Verdict::SingularAtOrigin(tangent) };
        StratumClassification { verdict, tangent_dim: tangent, residual_equation_count: self.residual.len() }
    }

    /// Completes values of the free variables to a point of the stratum.
    /// Only meaningful when the residual is empty.
    pub fn complete(&self, free_values: &Point) -> Result<Point> {
        let mut point: Point = free_values.clone();
        for v in &self.free {
            if !point.contains_key(v) {
                return Err(Error::MissingAssignment(v.index()));
            }
        }
        for (v, expr) in self.substitutions.iter().rev() {
            let value = expr.evaluate(|w| point.get(&w).cloned())?;
            point.insert(*v, value);
        }
        Ok(point)
    }

    pub fn residual_variables(&self) -> BTreeSet<VarId> {
        self.residual.iter().flat_map(|e| e.variables()).collect()
    }
}

pub fn classify(pres: &StratumPresentation) -> StratumClassification {
    eliminate(pres).classification(pres)
}

/// Variables minus the rank of the linear parts of the equations.
pub fn tangent_dimension(pres: &StratumPresentation) -> usize {
    let rows: Vec<Vec<Rational>> = pres
        .equations
        .iter()
        .map(|eq| {
            let mut row = vec![Rational::zero(); pres.num_variables];
            for (v, c) in eq.linear_part() {
                row[v.index()] = c;
            }
            row
        })
        .filter(|row| row.iter().any(|c| !c.is_zero()))
        .collect();
    pres.num_variables - rank(rows)
}

/// Rank over the rationals by Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].recip();
        let pivot_row: Vec<Rational> = rows[rank].iter().map(|x| x * &inv).collect();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x -= &factor * p;
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}
