//! Oriented link diagrams as arcs joined at signed crossings.
//!
//! An arc runs from one under-crossing to the next; at each classical crossing
//! the under-strand leaves arc `under_in` and continues as arc `under_out`
//! beneath arc `over`. The coloring relation is
//! `under_out = under_in ▷ over` at a positive crossing and
//! `under_out = under_in ▷⁻¹ over` at a negative one. Virtual crossings carry
//! no arc data and impose nothing.
//!
//! Arcs are 0-indexed in memory and 1-indexed in every text format.

mod corpus;
mod gauss;
mod native;
mod pd;

use std::fmt;

use thiserror::Error;

pub use corpus::{corpus_names, corpus_pd, load_corpus, table_links};
pub use gauss::parse_signed_gauss;
pub use native::parse_crossing_list;
pub use pd::parse_pd;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn from_int(v: i32) -> Option<Sign> {
        match v {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }

    pub fn as_int(self) -> i32 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+1",
            Sign::Negative => "-1",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub sign: Sign,
    pub over: usize,
    pub under_in: usize,
    pub under_out: usize,
}

/// Which operation a crossing relation uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    /// `▷`, positive crossings.
    Act,
    /// `▷⁻¹`, negative crossings.
    InverseAct,
}

/// `lhs = base op actor`, one per classical crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Relation {
    pub lhs: usize,
    pub base: usize,
    pub actor: usize,
    pub op: Op,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("arc {arc}: {reason}", arc = .arc + 1)]
    ArcConsistency { arc: usize, reason: String },
    #[error("crossing {crossing}: cannot determine the over-strand direction", crossing = .crossing + 1)]
    OrientationAmbiguous { crossing: usize },
    #[error("crossing label {label:?} must appear exactly twice ({detail})")]
    UnbalancedCrossing { label: String, detail: String },
    #[error("no bundled diagram named {0:?}")]
    UnknownName(String),
}

impl DiagramError {
    fn parse(line: usize, message: impl Into<String>) -> Self {
        DiagramError::Parse {
            line,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    name: Option<String>,
    arc_count: usize,
    crossings: Vec<Crossing>,
    components: Vec<Vec<usize>>,
    virtual_crossings: usize,
}

impl Diagram {
    /// Validates arc bookkeeping and derives the components.
    ///
    /// Every arc must either end exactly once (as some crossing's `under_in`)
    /// and begin exactly once (as some `under_out`), or never do either; the
    /// latter arcs are whole components with no under-crossings.
    pub fn new(
        arc_count: usize,
        crossings: Vec<Crossing>,
        virtual_crossings: usize,
    ) -> Result<Self, DiagramError> {
        if arc_count == 0 {
            return Err(DiagramError::ArcConsistency {
                arc: 0,
                reason: "a diagram needs at least one arc".into(),
            });
        }
        let mut ends = vec![0usize; arc_count];
        let mut begins = vec![0usize; arc_count];
        let mut next = vec![usize::MAX; arc_count];
        for c in &crossings {
            for arc in [c.over, c.under_in, c.under_out] {
                if arc >= arc_count {
                    return Err(DiagramError::ArcConsistency {
                        arc,
                        reason: format!("out of range for a diagram with {arc_count} arcs"),
                    });
                }
            }
            ends[c.under_in] += 1;
            begins[c.under_out] += 1;
            next[c.under_in] = c.under_out;
        }
        for arc in 0..arc_count {
            let ok = (ends[arc] == 1 && begins[arc] == 1) || (ends[arc] == 0 && begins[arc] == 0);
            if !ok {
                return Err(DiagramError::ArcConsistency {
                    arc,
                    reason: format!(
                        "ends at {} under-crossings and begins at {}; expected one of each",
                        ends[arc], begins[arc]
                    ),
                });
            }
        }
        let mut seen = vec![false; arc_count];
        let mut components = Vec::new();
        for start in 0..arc_count {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut arc = start;
            loop {
                seen[arc] = true;
                cycle.push(arc);
                arc = next[arc];
                if arc == usize::MAX || arc == start {
                    break;
                }
            }
            components.push(cycle);
        }
        Ok(Diagram {
            name: None,
            arc_count,
            crossings,
            components,
            virtual_crossings,
        })
    }

    /// A crossing-free diagram with one arc per component.
    pub fn unlink(components: usize) -> Self {
        Diagram::new(components, Vec::new(), 0).expect("arcs without crossings are valid")
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    /// Arc cycles in travel order, each starting at its smallest arc, ordered
    /// by that arc.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn virtual_crossing_count(&self) -> usize {
        self.virtual_crossings
    }

    pub fn crossing_relations(&self) -> Vec<Relation> {
        self.crossings
            .iter()
            .map(|c| Relation {
                lhs: c.under_out,
                base: c.under_in,
                actor: c.over,
                op: match c.sign {
                    Sign::Positive => Op::Act,
                    Sign::Negative => Op::InverseAct,
                },
            })
            .collect()
    }

    /// The same link with every component's orientation reversed on the
    /// given component indices (into [`Diagram::components`]).
    pub fn reverse_components(&self, which: &[usize]) -> Diagram {
        let mut reversed = vec![false; self.arc_count];
        for &k in which {
            for &arc in &self.components[k] {
                reversed[arc] = true;
            }
        }
        let crossings = self
            .crossings
            .iter()
            .map(|c| {
                let mut c = *c;
                if reversed[c.under_in] {
                    std::mem::swap(&mut c.under_in, &mut c.under_out);
                    c.sign = c.sign.flip();
                }
                if reversed[c.over] {
                    c.sign = c.sign.flip();
                }
                c
            })
            .collect();
        let mut d = Diagram::new(self.arc_count, crossings, self.virtual_crossings)
            .expect("reversal preserves arc bookkeeping");
        d.name = self.name.clone();
        d
    }

    /// Serializes to the native crossing-list format.
    pub fn to_native(&self) -> String {
        native::serialize(self)
    }
}
