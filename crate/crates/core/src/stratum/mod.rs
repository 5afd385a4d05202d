//! Groebner strata of the ideals in `M_{P,n}`.
//!
//! Each stratum is presented as a closed subscheme of the affine space with
//! coordinates `T_{a,b}` (`a` a corner, `b` a standard monomial of degree `r`
//! smaller than `a`). The coordinates carry the positive grading
//! `deg T_{a,b} = w.a - w.b` from a weight vector `w` realizing the order.

mod classify;
mod equations;

use std::fmt;

use num_traits::Zero;

pub use classify::{classify, eliminate, rank, tangent_dimension, Elimination, StratumClassification, Verdict};
pub use equations::{stratum_equations, EquationSource, StratumPresentation};

use crate::algebra::{Exponent, Point, Rational, VarId, XPolynomial};
use crate::enumeration::CornerSet;
use crate::error::{Error, Result};
use crate::notation::VariableNames;
use crate::orders::{MonomialOrder, WeightVector};

/// The coordinate `T_{corner, tail}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TVariable {
    pub corner: Exponent,
    pub tail: Exponent,
}

impl TVariable {
    pub fn label(&self, names: &VariableNames) -> String {
        format!("T[{},{}]", names.render(&self.corner), names.render(&self.tail))
    }
}

/// `g_a = x^a - sum_b T_{a,b} x^b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedGenerator {
    pub marker: Exponent,
    pub tail: Vec<(Exponent, VarId)>,
}

/// The generic reduced basis over the stratum coordinates.
#[derive(Clone, Debug)]
pub struct MarkedFamily {
    corner_set: CornerSet,
    order: MonomialOrder,
    omega: WeightVector,
    variables: Vec<TVariable>,
    weights: Vec<u64>,
    generators: Vec<MarkedGenerator>,
}

impl MarkedFamily {
    pub fn corner_set(&self) -> &CornerSet {
        &self.corner_set
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn omega(&self) -> &WeightVector {
        &self.omega
    }

    pub fn variables(&self) -> &[TVariable] {
        &self.variables
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn generators(&self) -> &[MarkedGenerator] {
        &self.generators
    }

    pub fn generator(&self, corner: &Exponent) -> Option<&MarkedGenerator> {
        self.generators.iter().find(|g| &g.marker == corner)
    }

    pub fn variable(&self, v: VarId) -> &TVariable {
        &self.variables[v.index()]
    }

    pub fn find_variable(&self, corner: &Exponent, tail: &Exponent) -> Option<VarId> {
        self.variables.iter().position(|t| &t.corner == corner && &t.tail == tail).map(|i| VarId(i as u32))
    }

    /// The generators with the coordinates specialized to `point`.
    pub fn specialize(&self, point: &Point) -> Result<Vec<XPolynomial>> {
        let nvars = self.corner_set.n() + 1;
        self.generators
            .iter()
            .map(|g| {
                let mut p = XPolynomial::monomial(g.marker.clone());
                for (beta, v) in &g.tail {
                    let a = point.get(v).ok_or(Error::MissingAssignment(v.index()))?;
                    p.add_term(beta.clone(), -a.clone());
                }
                debug_assert_eq!(p.nvars(), nvars);
                Ok(p)
            })
            .collect()
    }

    /// The all-zero point, i.e. the monomial ideal itself.
    pub fn origin(&self) -> Point {
        (0..self.variables.len()).map(|i| (VarId(i as u32), Rational::zero())).collect()
    }
}

impl fmt::Display for MarkedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = VariableNames::default_for(self.corner_set.n());
        for g in &self.generators {
            write!(f, "{}", names.render(&g.marker))?;
            for (beta, v) in &g.tail {
                write!(f, " - T{}*{}", v.0, names.render(beta))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Builds the marked family of `corners`: one generator per corner `a`, with
/// a coordinate for each `b` in `Delta_r` with `b < a`.
pub fn build_family(corners: &CornerSet, order: &MonomialOrder, omega: &WeightVector) -> MarkedFamily {
    let mut sorted_corners = corners.corners().to_vec();
    sorted_corners.sort_by(|a, b| order.cmp_same_degree(b, a));
    let mut delta = corners.delta_r().to_vec();
    delta.sort_by(|a, b| order.cmp_same_degree(b, a));

    let mut variables = Vec::new();
    let mut weights = Vec::new();
    let mut generators = Vec::with_capacity(sorted_corners.len());
    for alpha in sorted_corners {
        let mut tail = Vec::new();
        for beta in &delta {
            if order.cmp_same_degree(&alpha, beta) != std::cmp::Ordering::Greater {
                continue;
            }
            let (wa, wb) = (omega.weigh(&alpha), omega.weigh(beta));
            assert!(wa > wb, "weight vector does not realize the order on {alpha:?} > {beta:?}");
            let v = VarId(variables.len() as u32);
            variables.push(TVariable { corner: alpha.clone(), tail: beta.clone() });
            weights.push(wa - wb);
            tail.push((beta.clone(), v));
        }
        generators.push(MarkedGenerator { marker: alpha, tail });
    }
    MarkedFamily {
        corner_set: corners.clone(),
        order: order.clone(),
        omega: omega.clone(),
        variables,
        weights,
        generators,
    }
}

/// The torus action on coordinates: `a_{a,b} -> t^{deg T_{a,b}} a_{a,b}`.
pub fn torus_act(point: &Point, t: &Rational, weights: &[u64]) -> Result<Point> {
    if t.is_zero() {
        return Err(Error::ZeroTorusParameter);
    }
    point
        .iter()
        .map(|(v, a)| {
            let w = *weights.get(v.index()).ok_or(Error::MissingWeight(v.index()))?;
            let scale = num_traits::pow(t.clone(), w as usize);
            Ok((*v, a * scale))
        })
        .collect()
}

/// The whole per-ideal pipeline.
pub fn analyze(corners: &CornerSet, order: &MonomialOrder, omega: &WeightVector) -> StratumAnalysis {
    let family = build_family(corners, order, omega);
    let presentation = stratum_equations(&family);
    let elimination = eliminate(&presentation);
    let classification = elimination.classification(&presentation);
    StratumAnalysis { family, presentation, elimination, classification }
}

pub struct StratumAnalysis {
    pub family: MarkedFamily,
    pub presentation: StratumPresentation,
    pub elimination: Elimination,
    pub classification: StratumClassification,
}

impl StratumAnalysis {
    pub fn is_cell(&self) -> bool {
        matches!(self.classification.verdict, Verdict::AffineCell(_))
    }
}
