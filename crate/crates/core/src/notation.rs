//! Variable names, monomial rendering, and the generator-list parser used to
//! read ideals such as `w^3, zw^2, yw^2` verbatim.

use std::collections::BTreeSet;

use crate::algebra::Exponent;
use crate::error::{Error, Result};

/// Names of `x_0..x_n` for printing and parsing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VariableNames(Vec<String>);

impl VariableNames {
    /// `x,y` for `n = 1`, `x,y,z` for `n = 2`, `x,y,z,w` for `n = 3`, and
    /// `x_0..x_n` otherwise.
    pub fn default_for(n: usize) -> Self {
        let names: Vec<&str> = match n {
            1 => vec!["x", "y"],
            2 => vec!["x", "y", "z"],
            3 => vec!["x", "y", "z", "w"],
            _ => return VariableNames((0..=n).map(|i| format!("x_{i}")).collect()),
        };
        VariableNames(names.into_iter().map(String::from).collect())
    }

    pub fn new(names: Vec<String>) -> Result<Self> {
        let unique: BTreeSet<&String> = names.iter().collect();
        if names.is_empty() || unique.len() != names.len() || names.iter().any(|s| !valid_name(s)) {
            return Err(Error::InvalidIdeal(format!("bad variable names {names:?}")));
        }
        Ok(VariableNames(names))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    /// Index of a variable given by name or as `x<i>` / `x_<i>`.
    pub fn lookup(&self, token: &str) -> Option<usize> {
        if let Some(i) = self.0.iter().position(|s| s == token) {
            return Some(i);
        }
        let digits = token.strip_prefix("x_").or_else(|| token.strip_prefix('x'))?;
        let i: usize = digits.parse().ok()?;
        (i < self.0.len()).then_some(i)
    }

    fn compact(&self) -> bool {
        self.0.iter().all(|s| s.chars().count() == 1)
    }

    /// Renders a monomial in compact form (`x^2y`) when all
    /// names are single letters, otherwise with explicit `*`.
    pub fn render(&self, e: &Exponent) -> String {
        let sep = if self.compact() { "" } else { "*" };
        let parts: Vec<String> = e
            .entries()
            .iter()
            .enumerate()
            .filter(|(_, a)| **a > 0)
            .map(|(i, &a)| if a == 1 { self.0[i].clone() } else { format!("{}^{a}", self.0[i]) })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(sep)
        }
    }

    /// Parses a single monomial such as `x^2y`, `x*y`, `x_0^2*x_3`, or `1`.
    pub fn parse_monomial(&self, text: &str) -> Result<Exponent> {
        let text = text.trim();
        let mut exps = vec![0u32; self.0.len()];
        if text == "1" {
            return Ok(Exponent::new(exps));
        }
        let chars: Vec<char> = text.chars().collect();
        let mut pos = 0;
        let mut any = false;
        while pos < chars.len() {
            let c = chars[pos];
            if c.is_whitespace() || (c == '*' && any) {
                pos += 1;
                continue;
            }
            let rest: String = chars[pos..].iter().collect();
            // longest matching name or `x<i>` / `x_<i>` alias
            let named = self
                .0
                .iter()
                .enumerate()
                .filter(|(_, name)| rest.starts_with(name.as_str()))
                .map(|(i, name)| (i, name.chars().count()));
            let alias = alias_token(&rest).and_then(|tok| self.lookup(&tok).map(|i| (i, tok.chars().count())));
            let (idx, len) = named.chain(alias).max_by_key(|(_, l)| *l).ok_or_else(|| {
                let token: String = chars[pos..].iter().take_while(|ch| ch.is_alphanumeric() || **ch == '_').collect();
                Error::UnknownVariable(if token.is_empty() { c.to_string() } else { token })
            })?;
            pos += len;
            let mut power = 1u32;
            if pos < chars.len() && chars[pos] == '^' {
                pos += 1;
                let start = pos;
                while pos < chars.len() && chars[pos].is_ascii_digit() {
                    pos += 1;
                }
                let digits: String = chars[start..pos].iter().collect();
                power = digits.parse().map_err(|_| Error::MalformedPower(text.to_string()))?;
            }
            exps[idx] += power;
            any = true;
        }
        if !any {
            return Err(Error::InvalidIdeal(format!("empty monomial in `{text}`")));
        }
        Ok(Exponent::new(exps))
    }

    /// Parses a comma-separated generator list, optionally wrapped in `<...>`
    /// or `⟨...⟩`. Duplicates are rejected.
    pub fn parse_monomial_ideal(&self, text: &str) -> Result<BTreeSet<Exponent>> {
        let body = text.trim().trim_start_matches(['<', '⟨', '(']).trim_end_matches(['>', '⟩', ')']);
        let mut out = BTreeSet::new();
        for piece in body.split(',') {
            let e = self.parse_monomial(piece)?;
            if !out.insert(e) {
                return Err(Error::DuplicateGenerator(piece.trim().to_string()));
            }
        }
        Ok(out)
    }
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_alphabetic()) && chars.all(|c| c.is_alphanumeric() || c == '_')
}

fn alias_token(rest: &str) -> Option<String> {
    let digits_from = if rest.starts_with("x_") {
        2
    } else if rest.starts_with('x') {
        1
    } else {
        return None;
    };
    let digits: String = rest[digits_from..].chars().take_while(char::is_ascii_digit).collect();
    (!digits.is_empty()).then(|| format!("{}{digits}", &rest[..digits_from]))
}

/// Parses `text` as a generator list in `n + 1` variables with the given names.
pub fn parse_monomial_ideal(text: &str, n: usize, names: &VariableNames) -> Result<BTreeSet<Exponent>> {
    if names.len() != n + 1 {
        return Err(Error::LengthMismatch { expected: n + 1, got: names.len() });
    }
    names.parse_monomial_ideal(text)
}
