//! Sparse polynomials in one variable `u` with positive integer exponents and
//! coefficients, as produced by summing `u^{cycle length}` over colorings.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<u32, u64>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("cannot parse polynomial {text:?}: {reason}")]
pub struct ParsePolynomialError {
    pub text: String,
    pub reason: String,
}

impl Polynomial {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, merging
    /// repeated exponents and dropping zero coefficients.
    pub fn from_terms<I: IntoIterator<Item = (u32, u64)>>(terms: I) -> Self {
        let mut p = Self::new();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exponent: u32, coefficient: u64) {
        if coefficient == 0 {
            return;
        }
        *self.terms.entry(exponent).or_insert(0) += coefficient;
    }

    pub fn coefficient(&self, exponent: u32) -> u64 {
        self.terms.get(&exponent).copied().unwrap_or(0)
    }

    /// `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, u64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Value at `u = 1`, the sum of coefficients.
    pub fn at_one(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn eval(&self, u: i64) -> i128 {
        self.terms
            .iter()
            .map(|(&e, &c)| c as i128 * (u as i128).pow(e))
            .sum()
    }
}

impl Polynomial {
    /// Terms in ascending exponent order joined by `+` with no spaces, the
    /// layout used by the value tables: `4u+9u^3`.
    pub fn to_ascending_compact(&self) -> String {
        self.render(self.terms().collect(), "+")
    }

    /// Descending order without spaces: `12u^2+4u`.
    pub fn to_descending_compact(&self) -> String {
        self.render(self.terms().rev().collect(), "+")
    }

    fn render(&self, terms: Vec<(u32, u64)>, sep: &str) -> String {
        if terms.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = terms
            .into_iter()
            .map(|(e, c)| match (c, e) {
                (_, 0) => format!("{c}"),
                (1, 1) => "u".to_string(),
                (1, _) => format!("u^{e}"),
                (_, 1) => format!("{c}u"),
                _ => format!("{c}u^{e}"),
            })
            .collect();
        parts.join(sep)
    }
}

/// Descending exponent order, `" + "` between terms, coefficient 1 and
/// exponent 1 omitted: `8u^2 + u`. The zero polynomial prints as `0`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(self.terms().rev().collect(), " + "))
    }
}

/// Accepts terms in any order with optional whitespace, e.g. `4u+9u^3`,
/// `12u^6 + 15u^3 + 8u^2 + u`, `u^{2}`. A bare integer is a constant term.
impl FromStr for Polynomial {
    type Err = ParsePolynomialError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let fail = |reason: &str| ParsePolynomialError {
            text: s.to_string(),
            reason: reason.to_string(),
        };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(fail("empty input"));
        }
        if compact == "0" {
            return Ok(Polynomial::new());
        }
        let mut p = Polynomial::new();
        for term in compact.split('+') {
            if term.is_empty() {
                return Err(fail("empty term"));
            }
            let (coef, rest) = match term.find('u') {
                Some(i) => (&term[..i], Some(&term[i + 1..])),
                None => (term, None),
            };
            let coefficient = if coef.is_empty() {
                1
            } else {
                coef.parse::<u64>()
                    .map_err(|_| fail(&format!("bad coefficient in {term:?}")))?
            };
            let exponent = match rest {
                None => 0,
                Some("") => 1,
                Some(r) => {
                    let r = r
                        .strip_prefix('^')
                        .ok_or_else(|| fail(&format!("expected '^' in {term:?}")))?;
                    let r = r
                        .strip_prefix('{')
                        .and_then(|r| r.strip_suffix('}'))
                        .unwrap_or(r);
                    r.parse::<u32>()
                        .map_err(|_| fail(&format!("bad exponent in {term:?}")))?
                }
            };
            p.add_term(exponent, coefficient);
        }
        Ok(p)
    }
}
