//! Quandle colorings of a diagram and the action of quandle elements on them.
//!
//! A coloring assigns an element to every arc so that each crossing relation
//! `under_out = under_in ▷± over` holds; the colorings of a diagram represent
//! the homset from its fundamental quandle to the coloring quandle.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::diagram::{Diagram, Op, Relation};
use crate::quandle::Quandle;

/// Default cap on the number of colorings kept in memory.
pub const DEFAULT_CAP: usize = 1_000_000;

/// Maximum number of candidate assignments the brute-force oracle will try.
pub const ORACLE_LIMIT: u128 = 100_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomsetError {
    #[error("homset has more than {0} colorings")]
    CapExceeded(usize),
    #[error("brute force would try {candidates} assignments, more than {limit}")]
    OracleTooLarge { candidates: u128, limit: u128 },
}

/// Arc colors, position `i` is the color of arc `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring(pub Vec<usize>);

impl Coloring {
    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn is_monochromatic(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    pub fn satisfies(&self, relations: &[Relation], q: &Quandle) -> bool {
        relations.iter().all(|r| {
            let v = &self.0;
            v[r.lhs] == apply(q, r.op, v[r.base], v[r.actor])
        })
    }
}

/// Comma-separated 1-indexed labels.
impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        Ok(())
    }
}

#[inline]
fn apply(q: &Quandle, op: Op, a: usize, b: usize) -> usize {
    match op {
        Op::Act => q.op(a, b),
        Op::InverseAct => q.inv_op(a, b),
    }
}

/// All colorings of a diagram by a quandle, in lexicographic order.
#[derive(Debug, Clone)]
pub struct Homset<'a> {
    diagram: &'a Diagram,
    quandle: &'a Quandle,
    colorings: Vec<Coloring>,
    index: HashMap<Coloring, usize>,
}

impl<'a> Homset<'a> {
    fn from_colorings(
        diagram: &'a Diagram,
        quandle: &'a Quandle,
        mut colorings: Vec<Coloring>,
    ) -> Self {
        colorings.sort_unstable();
        colorings.dedup();
        let index = colorings
            .iter()
            .enumerate()
            .map(|(i, c)| (c.clone(), i))
            .collect();
        Homset {
            diagram,
            quandle,
            colorings,
            index,
        }
    }

    pub fn diagram(&self) -> &'a Diagram {
        self.diagram
    }

    pub fn quandle(&self) -> &'a Quandle {
        self.quandle
    }

    pub fn len(&self) -> usize {
        self.colorings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colorings.is_empty()
    }

    pub fn colorings(&self) -> &[Coloring] {
        &self.colorings
    }

    pub fn get(&self, i: usize) -> &Coloring {
        &self.colorings[i]
    }

    pub fn index_of(&self, c: &Coloring) -> Option<usize> {
        self.index.get(c).copied()
    }

    /// Index of `x · colorings[i]`.
    pub fn act_index(&self, x: usize, i: usize) -> usize {
        let image = act(self.quandle, x, &self.colorings[i]);
        self.index_of(&image)
            .expect("the action of a quandle element maps colorings to colorings")
    }

    /// The permutation of homset indices induced by acting with `x`.
    pub fn action_permutation(&self, x: usize) -> Vec<usize> {
        (0..self.len()).map(|i| self.act_index(x, i)).collect()
    }

    /// Index of the image of `colorings[i]` under an arbitrary map of the
    /// quandle, or `None` when the image is not a coloring.
    pub fn map_index(&self, f: &[usize], i: usize) -> Option<usize> {
        let image = Coloring(self.colorings[i].0.iter().map(|&v| f[v]).collect());
        self.index_of(&image)
    }

    /// One line per coloring, comma-separated 1-indexed labels.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.colorings {
            out.push_str(&c.to_string());
            out.push('\n');
        }
        out
    }
}

/// Enumerates every coloring by backtracking with propagation.
///
/// Arcs are branched on in a fixed order chosen so that most remaining arcs
/// are forced: once `under_in` and `over` of a crossing are colored the
/// `under_out` color follows, and once `under_out` and `over` are colored the
/// `under_in` color follows through `▷⁻¹`.
pub fn enumerate_colorings<'a>(
    d: &'a Diagram,
    q: &'a Quandle,
    cap: Option<usize>,
) -> Result<Homset<'a>, HomsetError> {
    let cap = cap.unwrap_or(DEFAULT_CAP);
    let relations = d.crossing_relations();
    let mut search = Search::new(d.arc_count(), &relations, q, cap);
    search.run(0)?;
    let found = std::mem::take(&mut search.found);
    Ok(Homset::from_colorings(d, q, found))
}

/// Exhaustive oracle: walks every assignment of colors to arcs in index
/// order and filters by the relations. A relation is checked as soon as all
/// of its arcs are colored, so failing prefixes are cut without inference.
pub fn brute_force_colorings<'a>(
    d: &'a Diagram,
    q: &'a Quandle,
) -> Result<Homset<'a>, HomsetError> {
    let n = q.order();
    let arcs = d.arc_count();
    let candidates = (n as u128).checked_pow(arcs as u32).unwrap_or(u128::MAX);
    if candidates > ORACLE_LIMIT {
        return Err(HomsetError::OracleTooLarge {
            candidates,
            limit: ORACLE_LIMIT,
        });
    }
    let relations = d.crossing_relations();
    let mut due: Vec<Vec<Relation>> = vec![Vec::new(); arcs];
    for r in &relations {
        due[r.lhs.max(r.base).max(r.actor)].push(*r);
    }
    let mut values = vec![0usize; arcs];
    let mut found = Vec::new();
    fn walk(
        depth: usize,
        values: &mut [usize],
        due: &[Vec<Relation>],
        q: &Quandle,
        found: &mut Vec<Coloring>,
    ) {
        if depth == values.len() {
            found.push(Coloring(values.to_vec()));
            return;
        }
        for color in 0..q.order() {
            values[depth] = color;
            if due[depth]
                .iter()
                .all(|r| values[r.lhs] == apply(q, r.op, values[r.base], values[r.actor]))
            {
                walk(depth + 1, values, due, q, found);
            }
        }
    }
    walk(0, &mut values, &due, q, &mut found);
    Ok(Homset::from_colorings(d, q, found))
}

pub fn counting_invariant(
    d: &Diagram,
    q: &Quandle,
    cap: Option<usize>,
) -> Result<usize, HomsetError> {
    enumerate_colorings(d, q, cap).map(|h| h.len())
}

/// `x · c`: every arc color `y` becomes `y ▷ x`.
pub fn act(q: &Quandle, x: usize, c: &Coloring) -> Coloring {
    Coloring(c.0.iter().map(|&y| q.op(y, x)).collect())
}

/// Smallest `k > 0` with `x ·ᵏ c = c`.
pub fn loop_length(q: &Quandle, x: usize, c: &Coloring) -> usize {
    let mut current = act(q, x, c);
    let mut k = 1;
    while &current != c {
        current = act(q, x, &current);
        k += 1;
    }
    k
}

const UNSET: usize = usize::MAX;

struct Search<'r> {
    q: &'r Quandle,
    relations: &'r [Relation],
    touching: Vec<Vec<usize>>,
    order: Vec<usize>,
    values: Vec<usize>,
    trail: Vec<usize>,
    found: Vec<Coloring>,
    cap: usize,
}

impl<'r> Search<'r> {
    fn new(arcs: usize, relations: &'r [Relation], q: &'r Quandle, cap: usize) -> Self {
        let mut touching = vec![Vec::new(); arcs];
        for (k, r) in relations.iter().enumerate() {
            for arc in [r.lhs, r.base, r.actor] {
                if !touching[arc].contains(&k) {
                    touching[arc].push(k);
                }
            }
        }
        let order = branch_order(arcs, relations, &touching);
        Search {
            q,
            relations,
            touching,
            order,
            values: vec![UNSET; arcs],
            trail: Vec::new(),
            found: Vec::new(),
            cap,
        }
    }

    fn run(&mut self, mut pos: usize) -> Result<(), HomsetError> {
        while pos < self.order.len() && self.values[self.order[pos]] != UNSET {
            pos += 1;
        }
        if pos == self.order.len() {
            if self.found.len() == self.cap {
                return Err(HomsetError::CapExceeded(self.cap));
            }
            self.found.push(Coloring(self.values.clone()));
            return Ok(());
        }
        let arc = self.order[pos];
        for color in 0..self.q.order() {
            let mark = self.trail.len();
            if self.assign(arc, color) {
                self.run(pos + 1)?;
            }
            for &a in &self.trail[mark..] {
                self.values[a] = UNSET;
            }
            self.trail.truncate(mark);
        }
        Ok(())
    }

    /// Assigns `arc` and propagates forced colors; false on a conflict.
    fn assign(&mut self, arc: usize, color: usize) -> bool {
        self.values[arc] = color;
        self.trail.push(arc);
        let mut head = self.trail.len() - 1;
        while head < self.trail.len() {
            let a = self.trail[head];
            head += 1;
            for &k in &self.touching[a] {
                let r = self.relations[k];
                let (lhs, base, actor) = (
                    self.values[r.lhs],
                    self.values[r.base],
                    self.values[r.actor],
                );
                if actor == UNSET {
                    continue;
                }
                if base != UNSET {
                    let v = apply(self.q, r.op, base, actor);
                    if lhs == UNSET {
                        self.values[r.lhs] = v;
                        self.trail.push(r.lhs);
                    } else if lhs != v {
                        return false;
                    }
                } else if lhs != UNSET {
                    let inverse = match r.op {
                        Op::Act => Op::InverseAct,
                        Op::InverseAct => Op::Act,
                    };
                    self.values[r.base] = apply(self.q, inverse, lhs, actor);
                    self.trail.push(r.base);
                }
            }
        }
        true
    }
}

/// Greedy static order of branching arcs: after simulating propagation,
/// pick the unknown arc that would unlock the most relations, breaking ties
/// by index. Arcs forced by earlier choices are left out.
fn branch_order(arcs: usize, relations: &[Relation], touching: &[Vec<usize>]) -> Vec<usize> {
    let mut known = vec![false; arcs];
    let mut order = Vec::new();
    let close = |known: &mut Vec<bool>| loop {
        let mut changed = false;
        for r in relations {
            if known[r.actor] {
                if known[r.base] && !known[r.lhs] {
                    known[r.lhs] = true;
                    changed = true;
                } else if known[r.lhs] && !known[r.base] {
                    known[r.base] = true;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    };
    while let Some(next) = (0..arcs).filter(|&a| !known[a]).max_by_key(|&a| {
        let unlocked = touching[a]
            .iter()
            .filter(|&&k| {
                let r = relations[k];
                [r.lhs, r.base, r.actor].iter().any(|&b| b != a && known[b])
            })
            .count();
        (unlocked, touching[a].len(), std::cmp::Reverse(a))
    }) {
        known[next] = true;
        order.push(next);
        close(&mut known);
    }
    order
}
