//! Signed Gauss codes for classical and virtual diagrams.
//!
//! Each non-comment line is one component, read in its direction of travel,
//! as a sequence of tokens `O<k><s>` (pass over crossing `k`), `U<k><s>`
//! (pass under crossing `k`) and `V<k>` (pass through virtual crossing `k`),
//! where `s` is the crossing sign `+` or `-`. Tokens may be separated by
//! whitespace or written contiguously (`O1-O2-U1-U2-`).
//!
//! Arcs break only at `U` tokens. Virtual crossings are bookkeeping only.

use std::collections::BTreeMap;

use super::{Crossing, Diagram, DiagramError, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Pass {
    Over,
    Under,
    Virtual,
}

#[derive(Debug)]
struct Token {
    pass: Pass,
    label: String,
    sign: Option<Sign>,
    line: usize,
}

#[derive(Default)]
struct Visits {
    over: Vec<(usize, Option<Sign>)>,
    /// (arc ending here, arc starting here, sign, line)
    under: Vec<(usize, usize, Option<Sign>, usize)>,
    first_seen: usize,
}

pub fn parse_signed_gauss(text: &str) -> Result<Diagram, DiagramError> {
    let mut components: Vec<Vec<Token>> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        components.push(tokenize(i + 1, content)?);
    }
    if components.is_empty() {
        return Err(DiagramError::parse(1, "empty Gauss code"));
    }

    let mut arc_count = 0usize;
    let mut classical: BTreeMap<String, Visits> = BTreeMap::new();
    let mut virtuals: BTreeMap<String, usize> = BTreeMap::new();
    let mut order = 0usize;

    for tokens in &components {
        let unders = tokens.iter().filter(|t| t.pass == Pass::Under).count();
        let base = arc_count;
        let arcs_here = unders.max(1);
        arc_count += arcs_here;
        // Before the first U the strand is still on the component's last arc.
        let mut current = base + arcs_here - 1;
        let mut next_arc = base;
        for t in tokens {
            match t.pass {
                Pass::Virtual => *virtuals.entry(t.label.clone()).or_insert(0) += 1,
                Pass::Over => {
                    let v = classical.entry(t.label.clone()).or_insert_with(|| {
                        order += 1;
                        Visits {
                            first_seen: order,
                            ..Default::default()
                        }
                    });
                    v.over.push((current, t.sign));
                }
                Pass::Under => {
                    let v = classical.entry(t.label.clone()).or_insert_with(|| {
                        order += 1;
                        Visits {
                            first_seen: order,
                            ..Default::default()
                        }
                    });
                    v.under.push((current, next_arc, t.sign, t.line));
                    current = next_arc;
                    next_arc += 1;
                }
            }
        }
    }

    for (label, count) in &virtuals {
        if *count != 2 {
            return Err(DiagramError::UnbalancedCrossing {
                label: label.clone(),
                detail: format!("virtual crossing visited {count} times"),
            });
        }
    }

    let mut entries: Vec<(String, Visits)> = classical.into_iter().collect();
    entries.sort_by_key(|(_, v)| v.first_seen);
    let mut crossings = Vec::with_capacity(entries.len());
    for (label, v) in &entries {
        if v.over.len() != 1 || v.under.len() != 1 {
            return Err(DiagramError::UnbalancedCrossing {
                label: label.clone(),
                detail: format!(
                    "{} over and {} under visits, expected one of each",
                    v.over.len(),
                    v.under.len()
                ),
            });
        }
        let (over, sign) = v.over[0];
        let (under_in, under_out, under_sign, line) = v.under[0];
        if sign != under_sign {
            return Err(DiagramError::parse(
                line,
                format!("crossing {label} has conflicting signs"),
            ));
        }
        let sign = sign.expect("tokenizer requires signs on classical crossings");
        crossings.push(Crossing {
            sign,
            over,
            under_in,
            under_out,
        });
    }
    Diagram::new(arc_count, crossings, virtuals.len())
}

fn tokenize(line: usize, content: &str) -> Result<Vec<Token>, DiagramError> {
    let mut tokens = Vec::new();
    let mut chars = content.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() || c == ',' {
            chars.next();
            continue;
        }
        let pass = match c.to_ascii_uppercase() {
            'O' => Pass::Over,
            'U' => Pass::Under,
            'V' => Pass::Virtual,
            _ => {
                return Err(DiagramError::parse(
                    line,
                    format!("unexpected character {c:?}; expected O, U or V"),
                ))
            }
        };
        chars.next();
        let mut label = String::new();
        while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
            label.push(d);
            chars.next();
        }
        if label.is_empty() {
            return Err(DiagramError::parse(line, "crossing token without a label"));
        }
        let sign = match chars.peek() {
            Some('+') => {
                chars.next();
                Some(Sign::Positive)
            }
            Some('-') => {
                chars.next();
                Some(Sign::Negative)
            }
            _ => None,
        };
        if pass == Pass::Virtual && sign.is_some() {
            return Err(DiagramError::parse(line, "virtual crossings carry no sign"));
        }
        if pass != Pass::Virtual && sign.is_none() {
            return Err(DiagramError::parse(
                line,
                format!("crossing {label} needs a sign (+ or -)"),
            ));
        }
        tokens.push(Token {
            pass,
            label,
            sign,
            line,
        });
    }
    Ok(tokens)
}
