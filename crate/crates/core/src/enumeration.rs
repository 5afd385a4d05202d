//! Enumeration of `M_{P,n}`: monomial ideals generated in the Gotzmann degree
//! `r` whose degree-`r` and degree-`r+1` slices have the dimensions forced by
//! `P`.
//!
//! An ideal in `M_{P,n}` is generated by its degree-`r` part, so it is fixed
//! by a subset `C` of degree-`r` monomials; `C` is then exactly its set of
//! minimal generators (equal-degree monomials never divide one another). The
//! membership test needs only `|C|` and the size of the degree-`r+1`
//! expansion `{a + e_i}`. Searching subsets of the degree-`r` slice is
//! therefore both complete and sound, and the monomial order plays no role.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::algebra::Exponent;
use crate::error::Result;
use crate::hilbert::{chart_counts, ChartCounts, HilbertPolynomial};
use crate::notation::VariableNames;
use crate::orders::MonomialOrder;

/// A monomial ideal in `M_{P,n}` given by its degree-`r` corners, together
/// with the complementary standard monomials `Delta_r`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CornerSet {
    n: usize,
    r: u32,
    corners: Vec<Exponent>,
    delta_r: Vec<Exponent>,
}

impl CornerSet {
    /// Builds a corner set from degree-`r` generators. No admissibility
    /// check; see [`CornerSet::validate`].
    pub fn new(n: usize, r: u32, corners: impl IntoIterator<Item = Exponent>) -> Result<Self> {
        let corners: BTreeSet<Exponent> = corners.into_iter().collect();
        for c in &corners {
            if c.len() != n + 1 {
                return Err(crate::Error::LengthMismatch { expected: n + 1, got: c.len() });
            }
            if c.degree() != r {
                return Err(crate::Error::InvalidIdeal(format!(
                    "generator {c:?} has degree {} but the Gotzmann number is {r}",
                    c.degree()
                )));
            }
        }
        let delta_r = Exponent::all_of_degree(n + 1, r).into_iter().filter(|e| !corners.contains(e)).collect();
        let mut corners: Vec<Exponent> = corners.into_iter().collect();
        corners.reverse();
        Ok(CornerSet { n, r, corners, delta_r })
    }

    /// Checks the corner-count and expansion-count conditions.
    pub fn validate(&self, counts: &ChartCounts) -> Result<()> {
        let exp = expansion(&self.corners, self.n).len();
        if self.corners.len() != counts.corners_target || exp != counts.expansion_target {
            return Err(crate::Error::InvalidIdeal(format!(
                "{} corners with {} degree-{} multiples; expected {} and {}",
                self.corners.len(),
                exp,
                self.r + 1,
                counts.corners_target,
                counts.expansion_target
            )));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// Minimal generators, descending in the entry-wise lexicographic order.
    pub fn corners(&self) -> &[Exponent] {
        &self.corners
    }

    pub fn delta_r(&self) -> &[Exponent] {
        &self.delta_r
    }

    pub fn contains(&self, e: &Exponent) -> bool {
        self.corners.binary_search_by(|c| e.cmp(c)).is_ok()
    }

    /// `J_{r+1}` as a set.
    pub fn expansion(&self) -> BTreeSet<Exponent> {
        expansion(&self.corners, self.n)
    }

    pub fn key(&self, order: &MonomialOrder, names: &VariableNames) -> MonomialIdealKey {
        MonomialIdealKey::new(self, order, names)
    }

    /// Generators sorted ascending under `order`, as printed in reports.
    pub fn sorted_generators(&self, order: &MonomialOrder) -> Vec<Exponent> {
        let mut gens = self.corners.clone();
        gens.sort_by(|a, b| order.cmp_same_degree(a, b));
        gens
    }
}

impl fmt::Debug for CornerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CornerSet{:?}", self.corners)
    }
}

/// Canonical printed form of an ideal: generators ascending under the active
/// order, rendered with the variable names and joined by `", "`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialIdealKey(String);

impl MonomialIdealKey {
    pub fn new(corners: &CornerSet, order: &MonomialOrder, names: &VariableNames) -> Self {
        let gens: Vec<String> = corners.sorted_generators(order).iter().map(|e| names.render(e)).collect();
        MonomialIdealKey(gens.join(", "))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for MonomialIdealKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// `{a + e_i : a in corners, 0 <= i <= n}`.
pub fn expansion<'a>(corners: impl IntoIterator<Item = &'a Exponent>, n: usize) -> BTreeSet<Exponent> {
    corners.into_iter().flat_map(|a| (0..=n).map(move |i| a.add_var(i))).collect()
}

/// All of `M_{P,n}`, each ideal once, sorted by corner list.
pub fn enumerate_m(p: &HilbertPolynomial, n: usize) -> Result<Vec<CornerSet>> {
    let counts = chart_counts(p, n)?;
    Ok(enumerate_with_counts(&counts))
}

pub fn enumerate_with_counts(counts: &ChartCounts) -> Vec<CornerSet> {
    let (n, r) = (counts.n, counts.r);
    let slice = Exponent::all_of_degree(n + 1, r);
    let upper = Exponent::all_of_degree(n + 1, r + 1);
    let upper_index: HashMap<&Exponent, usize> = upper.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let shadows: Vec<FixedBitSet> = slice
        .iter()
        .map(|a| {
            let mut bits = FixedBitSet::with_capacity(upper.len());
            for i in 0..=n {
                bits.insert(upper_index[&a.add_var(i)]);
            }
            bits
        })
        .collect();

    let search =
        Search { shadows: &shadows, corners_target: counts.corners_target, expansion_target: counts.expansion_target };
    let mut found: Vec<Vec<usize>> = if counts.corners_target == 0 {
        if counts.expansion_target == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        }
    } else {
        (0..slice.len())
            .into_par_iter()
            .flat_map_iter(|first| {
                let mut out = Vec::new();
                let mut chosen = vec![first];
                search.descend(first + 1, &mut chosen, shadows[first].clone(), &mut out);
                out
            })
            .collect()
    };
    found.sort();

    let mut ideals: Vec<CornerSet> = found
        .into_iter()
        .map(|idx| {
            CornerSet::new(n, r, idx.into_iter().map(|i| slice[i].clone())).expect("slice monomials have degree r")
        })
        .collect();
    ideals.sort_by(|a, b| a.corners.cmp(&b.corners));
    ideals
}

struct Search<'a> {
    shadows: &'a [FixedBitSet],
    corners_target: usize,
    expansion_target: usize,
}

impl Search<'_> {
    /// Depth-first over increasing slice indices. The expansion only grows as
    /// corners are added, so any partial choice already exceeding the target
    /// is dead.
    fn descend(&self, next: usize, chosen: &mut Vec<usize>, covered: FixedBitSet, out: &mut Vec<Vec<usize>>) {
        let size = covered.count_ones(..);
        if size > self.expansion_target {
            return;
        }
        if chosen.len() == self.corners_target {
            if size == self.expansion_target {
                out.push(chosen.clone());
            }
            return;
        }
        let needed = self.corners_target - chosen.len();
        for i in next..self.shadows.len() {
            if self.shadows.len() - i < needed {
                break;
            }
            let mut grown = covered.clone();
            grown.union_with(&self.shadows[i]);
            chosen.push(i);
            self.descend(i + 1, chosen, grown, out);
            chosen.pop();
        }
    }
}
