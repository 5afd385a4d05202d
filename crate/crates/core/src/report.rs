//! Aggregation of per-ideal verdicts into Betti tables, homology ranks,
//! singular-point lists, and a suggested cell ordering.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::enumeration::{enumerate_with_counts, CornerSet, MonomialIdealKey};
use crate::error::{Error, Result};
use crate::hilbert::{chart_counts, HilbertPolynomial};
use crate::notation::VariableNames;
use crate::orders::{MonomialOrder, WeightVector};
use crate::stratum::{analyze, Verdict};

#[derive(Clone, Debug)]
pub struct IdealRow {
    pub key: MonomialIdealKey,
    pub corners: CornerSet,
    pub generators: Vec<String>,
    pub num_variables: usize,
    pub num_equations: usize,
    pub tangent_dim: usize,
    pub verdict: Verdict,
}

impl IdealRow {
    pub fn cell_dim(&self) -> Option<usize> {
        match self.verdict {
            Verdict::AffineCell(m) => Some(m),
            Verdict::SingularAtOrigin(_) => None,
        }
    }

    pub fn is_singular(&self) -> bool {
        matches!(self.verdict, Verdict::SingularAtOrigin(_))
    }
}

#[derive(Clone, Debug)]
pub struct DecompositionReport {
    pub p: HilbertPolynomial,
    pub n: usize,
    pub order: MonomialOrder,
    pub omega: WeightVector,
    pub names: VariableNames,
    /// Sorted by key.
    pub rows: Vec<IdealRow>,
    /// `betti[m]` = number of strata that are affine cells of dimension `m`,
    /// for `m` up to the largest tangent dimension.
    pub betti: Vec<usize>,
    pub singular: Vec<MonomialIdealKey>,
    pub all_smooth: bool,
}

/// Runs the full pipeline over `M_{P,n}`. Per-ideal work runs on the current
/// rayon pool; the result does not depend on the schedule.
pub fn decompose(
    p: &HilbertPolynomial,
    n: usize,
    order: &MonomialOrder,
    names: &VariableNames,
) -> Result<DecompositionReport> {
    let counts = chart_counts(p, n)?;
    if order.nvars() != n + 1 {
        return Err(Error::LengthMismatch { expected: n + 1, got: order.nvars() });
    }
    let omega = WeightVector::realize(order, n, counts.r)?;
    let ideals = enumerate_with_counts(&counts);
    let mut rows: Vec<IdealRow> = ideals
        .par_iter()
        .map(|cs| {
            let a = analyze(cs, order, &omega);
            IdealRow {
                key: cs.key(order, names),
                generators: cs.sorted_generators(order).iter().map(|e| names.render(e)).collect(),
                corners: cs.clone(),
                num_variables: a.presentation.num_variables,
                num_equations: a.presentation.equations.len(),
                tangent_dim: a.classification.tangent_dim,
                verdict: a.classification.verdict,
            }
        })
        .collect();
    rows.sort_by(|a, b| a.key.cmp(&b.key));
    Ok(assemble(p.clone(), n, order.clone(), omega, names.clone(), rows))
}

pub fn assemble(
    p: HilbertPolynomial,
    n: usize,
    order: MonomialOrder,
    omega: WeightVector,
    names: VariableNames,
    rows: Vec<IdealRow>,
) -> DecompositionReport {
    let max_tangent = rows.iter().map(|r| r.tangent_dim).max().unwrap_or(0);
    let mut betti = vec![0; max_tangent + 1];
    let mut singular = Vec::new();
    for row in &rows {
        match row.verdict {
            Verdict::AffineCell(m) => betti[m] += 1,
            Verdict::SingularAtOrigin(_) => singular.push(row.key.clone()),
        }
    }
    if rows.is_empty() {
        betti.clear();
    }
    singular.sort();
    let all_smooth = singular.is_empty();
    DecompositionReport { p, n, order, omega, names, rows, betti, singular, all_smooth }
}

/// Ranks of `H_m` for `m = 0 ..= 2 * (largest cell dimension)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyTable {
    pub ranks: Vec<usize>,
}

impl DecompositionReport {
    pub fn betti_table(&self) -> &[usize] {
        &self.betti
    }

    pub fn singular_loci(&self) -> &[MonomialIdealKey] {
        &self.singular
    }

    /// Betti table with trailing zeros removed.
    pub fn trimmed_betti(&self) -> Vec<usize> {
        let mut b = self.betti.clone();
        while b.last() == Some(&0) {
            b.pop();
        }
        b
    }

    /// Requires every stratum to be an affine cell.
    pub fn homology(&self) -> Result<HomologyTable> {
        if !self.all_smooth {
            return Err(Error::SingularStrataPresent(self.singular.len()));
        }
        let betti = self.trimmed_betti();
        let top = betti.len().saturating_sub(1);
        let mut ranks = vec![0; 2 * top + 1];
        for (m, b) in betti.iter().enumerate() {
            ranks[2 * m] = *b;
        }
        Ok(HomologyTable { ranks })
    }

    /// Ideals by ascending `sum_{a in C} w.a`, ties by key. A heuristic
    /// ordering only; no closure relations are checked.
    pub fn cell_order(&self) -> Vec<MonomialIdealKey> {
        let mut keyed: Vec<(u64, &MonomialIdealKey)> =
            self.rows.iter().map(|r| (r.corners.corners().iter().map(|a| self.omega.weigh(a)).sum(), &r.key)).collect();
        keyed.sort();
        keyed.into_iter().map(|(_, k)| k.clone()).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let ideals: Vec<JsonIdeal> = self
            .rows
            .iter()
            .map(|r| JsonIdeal {
                key: r.key.to_string(),
                generators: r.generators.clone(),
                tangent_dim: r.tangent_dim,
                verdict: if r.is_singular() { "singular" } else { "cell" },
                cell_dim: r.cell_dim(),
            })
            .collect();
        serde_json::to_value(JsonReport {
            p: self.p.to_string(),
            n: self.n,
            order: self.order.name(),
            omega: self.omega.as_slice().to_vec(),
            ideals,
            betti: self.betti.clone(),
            singular: self.singular.iter().map(ToString::to_string).collect(),
        })
        .expect("report serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["key", "tangent_dim", "verdict", "cell_dim"]).unwrap();
        for r in &self.rows {
            w.write_record([
                r.key.to_string(),
                r.tangent_dim.to_string(),
                if r.is_singular() { "singular" } else { "cell" }.to_string(),
                r.cell_dim().map(|d| d.to_string()).unwrap_or_default(),
            ])
            .unwrap();
        }
        String::from_utf8(w.into_inner().unwrap()).unwrap()
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "Hilbert polynomial P = {} in P^{}", self.p, self.n).unwrap();
        writeln!(s, "Gotzmann number r = {}, Macaulay data {:?}", self.p.gotzmann(), self.p.macaulay()).unwrap();
        writeln!(s, "order {}, weights {:?}", self.order.name(), self.omega.as_slice()).unwrap();
        writeln!(s, "#M = {}", self.rows.len()).unwrap();
        writeln!(s).unwrap();
        for r in &self.rows {
            let verdict = match r.verdict {
                Verdict::AffineCell(m) => format!("cell A^{m}"),
                Verdict::SingularAtOrigin(p) => format!("singular (tangent dim {p})"),
            };
            writeln!(s, "<{}>  {}", r.key, verdict).unwrap();
        }
        writeln!(s).unwrap();
        let cols: Vec<String> = (0..self.betti.len()).map(|m| format!("{m:>4}")).collect();
        writeln!(s, "m     {}", cols.join("")).unwrap();
        let vals: Vec<String> = self.betti.iter().map(|b| format!("{b:>4}")).collect();
        writeln!(s, "cells {}", vals.join("")).unwrap();
        writeln!(s, "{} affine cells, {} singular strata", self.rows.len() - self.singular.len(), self.singular.len())
            .unwrap();
        if !self.singular.is_empty() {
            writeln!(s, "singular at:").unwrap();
            for k in &self.singular {
                writeln!(s, "  <{k}>").unwrap();
            }
        }
        if let Ok(h) = self.homology() {
            let ranks: Vec<String> = h.ranks.iter().enumerate().map(|(m, r)| format!("H_{m}={r}")).collect();
            writeln!(s, "homology: {}", ranks.join(" ")).unwrap();
        }
        s
    }
}

#[derive(Serialize)]
struct JsonIdeal {
    key: String,
    generators: Vec<String>,
    tangent_dim: usize,
    verdict: &'static str,
    cell_dim: Option<usize>,
}

#[derive(Serialize)]
struct JsonReport {
    #[serde(rename = "P")]
    p: String,
    n: usize,
    order: String,
    omega: Vec<u64>,
    ideals: Vec<JsonIdeal>,
    betti: Vec<usize>,
    singular: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orders::OrderKind;

    fn run(p: &str, n: usize, kind: OrderKind) -> DecompositionReport {
        let order = MonomialOrder::standard(kind, n + 1);
        decompose(&HilbertPolynomial::parse(p).unwrap(), n, &order, &VariableNames::default_for(n)).unwrap()
    }

    #[test]
    fn two_points_on_a_line() {
        let rep = run("2", 1, OrderKind::Lex);
        assert_eq!(rep.betti, vec![1, 1, 1]);
        assert!(rep.singular.is_empty());
        assert_eq!(rep.homology().unwrap().ranks, vec![1, 0, 1, 0, 1]);
    }

    #[test]
    fn cell_order_by_weight() {
        let order = MonomialOrder::lex(2);
        let hp = HilbertPolynomial::parse("2").unwrap();
        let names = VariableNames::default_for(1);
        let mut rep = decompose(&hp, 1, &order, &names).unwrap();
        rep.omega = WeightVector::checked(&order, vec![3, 1], 2).unwrap();
        let keys: Vec<String> = rep.cell_order().iter().map(ToString::to_string).collect();
        assert_eq!(keys, vec!["y^2", "xy", "x^2"]);
    }

    #[test]
    fn single_ideal() {
        let rep = run("1", 1, OrderKind::Degrevlex);
        assert_eq!(rep.rows.len(), 2);
        let rep = run("1", 2, OrderKind::Degrevlex);
        assert_eq!(rep.betti, vec![1, 1, 1]);
        let order = rep.cell_order();
        assert_eq!(order.len(), rep.rows.len());
    }

    #[test]
    fn points_in_the_plane() {
        let rep = run("3", 2, OrderKind::Degrevlex);
        assert_eq!(rep.betti, vec![1, 2, 5, 6, 5, 2, 1]);
        assert_eq!(rep.homology().unwrap().ranks.len(), 13);
    }

    #[test]
    fn csv_and_json_shapes() {
        let rep = run("t+1", 3, OrderKind::Lex);
        let csv = rep.to_csv();
        assert!(csv.starts_with("key,tangent_dim,verdict,cell_dim\n"));
        assert_eq!(csv.lines().count(), 7);
        let json = rep.to_json();
        let obj = json.as_object().unwrap();
        let keys: Vec<&str> = obj.keys().map(String::as_str).collect();
        for k in ["P", "n", "order", "omega", "ideals", "betti", "singular"] {
            assert!(keys.contains(&k), "{k}");
        }
        let ideal = json["ideals"][0].as_object().unwrap();
        for k in ["key", "generators", "tangent_dim", "verdict", "cell_dim"] {
            assert!(ideal.contains_key(k), "{k}");
        }
        assert_eq!(json["P"], "t+1");
        assert_eq!(json["betti"], serde_json::json!([1, 1, 2, 1, 1]));
    }
}
