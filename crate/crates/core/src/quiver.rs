//! Action quivers, full coloring quivers and action polynomials.
//!
//! Vertices are homset indices. In an action quiver each acting element `x`
//! contributes one edge `v → x·v` per vertex, so the `x`-labeled edges form a
//! disjoint union of cycles and are summarized by the action polynomial
//! `Σ_v u^{l(v, x)}`, where `l(v, x)` is the length of the cycle through `v`.

use std::fmt::Write as _;

use thiserror::Error;

use crate::homset::{loop_length, Homset};
use crate::perm;
use crate::polynomial::Polynomial;
use crate::quandle::Quandle;

/// Largest quandle order accepted by [`enumerate_endomorphisms`] by default.
pub const DEFAULT_ENDO_LIMIT: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuiverError {
    #[error("element {} is not an edge label of this quiver", .0 + 1)]
    LabelNotPresent(usize),
    #[error("coefficient {coefficient} of u^{exponent} is not a multiple of {exponent}")]
    MalformedPolynomial { exponent: u32, coefficient: u64 },
    #[error("quandle of order {n} exceeds the endomorphism search limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error(
        "map {index} is not an endomorphism: f({a} ▷ {b}) ≠ f({a}) ▷ f({b})",
        index = .index + 1, a = .a + 1, b = .b + 1
    )]
    NotEndomorphism { index: usize, a: usize, b: usize },
    #[error("map {} does not send the quandle into itself", .0 + 1)]
    NotAMap(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub label: usize,
}

#[derive(Debug, Clone)]
pub struct ActionQuiver<'h> {
    homset: &'h Homset<'h>,
    labels: Vec<usize>,
    edges: Vec<Edge>,
}

/// Builds the action quiver for the given acting elements (all of the
/// quandle when `labels` is `None`). Labels are deduplicated and sorted.
pub fn action_quiver<'h>(h: &'h Homset<'h>, labels: Option<&[usize]>) -> ActionQuiver<'h> {
    let mut labels: Vec<usize> = match labels {
        Some(l) => l.to_vec(),
        None => (0..h.quandle().order()).collect(),
    };
    labels.sort_unstable();
    labels.dedup();
    let mut edges = Vec::with_capacity(h.len() * labels.len());
    for from in 0..h.len() {
        for &x in &labels {
            edges.push(Edge {
                from,
                to: h.act_index(x, from),
                label: x,
            });
        }
    }
    ActionQuiver {
        homset: h,
        labels,
        edges,
    }
}

impl<'h> ActionQuiver<'h> {
    pub fn homset(&self) -> &'h Homset<'h> {
        self.homset
    }

    pub fn vertex_count(&self) -> usize {
        self.homset.len()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// The permutation of vertices given by the `x`-labeled edges.
    pub fn permutation(&self, x: usize) -> Result<Vec<usize>, QuiverError> {
        if !self.labels.contains(&x) {
            return Err(QuiverError::LabelNotPresent(x));
        }
        let mut perm = vec![0; self.vertex_count()];
        for e in self.edges.iter().filter(|e| e.label == x) {
            perm[e.from] = e.to;
        }
        Ok(perm)
    }

    /// Sorted cycle lengths of the `x`-labeled subquiver.
    pub fn cycle_structure(&self, x: usize) -> Result<Vec<usize>, QuiverError> {
        Ok(perm::cycle_type(&self.permutation(x)?))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionPolynomial {
    pub element: usize,
    pub poly: Polynomial,
}

/// The action polynomial of `x`, from the cycle decomposition of its action
/// on the homset.
pub fn action_polynomial(h: &Homset<'_>, x: usize) -> ActionPolynomial {
    let mut poly = Polynomial::new();
    for cycle in perm::cycles(&h.action_permutation(x)) {
        poly.add_term(cycle.len() as u32, cycle.len() as u64);
    }
    ActionPolynomial { element: x, poly }
}

/// The same polynomial summed vertex by vertex from loop lengths.
pub fn action_polynomial_by_loops(h: &Homset<'_>, x: usize) -> Polynomial {
    let mut poly = Polynomial::new();
    for c in h.colorings() {
        poly.add_term(loop_length(h.quandle(), x, c) as u32, 1);
    }
    poly
}

/// One polynomial per quandle element, indexed by element.
pub fn polynomial_for_all_elements(h: &Homset<'_>) -> Vec<ActionPolynomial> {
    (0..h.quandle().order())
        .map(|x| action_polynomial(h, x))
        .collect()
}

/// An abstract disjoint union of directed cycles, described by its sorted
/// cycle lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleGraph {
    lengths: Vec<usize>,
}

impl CycleGraph {
    pub fn cycle_lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn vertex_count(&self) -> usize {
        self.lengths.iter().sum()
    }

    /// Edges `(from, to)` of the union, cycles laid out consecutively.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.vertex_count());
        let mut base = 0;
        for &len in &self.lengths {
            for i in 0..len {
                out.push((base + i, base + (i + 1) % len));
            }
            base += len;
        }
        out
    }

    /// Isomorphism with the `x`-labeled subquiver. Both graphs are disjoint
    /// unions of cycles, so equal cycle-length multisets decide it.
    pub fn is_isomorphic_to(&self, aq: &ActionQuiver<'_>, x: usize) -> Result<bool, QuiverError> {
        Ok(aq.cycle_structure(x)? == self.lengths)
    }
}

/// The cycle union an action polynomial describes: `c_j / j` cycles of
/// length `j` for each term `c_j u^j`.
pub fn reconstruct_from_polynomial(p: &Polynomial) -> Result<CycleGraph, QuiverError> {
    let mut lengths = Vec::new();
    for (exponent, coefficient) in p.terms() {
        if exponent == 0 || coefficient % exponent as u64 != 0 {
            return Err(QuiverError::MalformedPolynomial {
                exponent,
                coefficient,
            });
        }
        let count = coefficient / exponent as u64;
        lengths.extend(std::iter::repeat_n(exponent as usize, count as usize));
    }
    Ok(CycleGraph { lengths })
}

pub fn is_endomorphism(q: &Quandle, f: &[usize]) -> bool {
    let n = q.order();
    f.len() == n
        && f.iter().all(|&v| v < n)
        && (0..n).all(|a| (0..n).all(|b| f[q.op(a, b)] == q.op(f[a], f[b])))
}

/// All maps `f` with `f(a ▷ b) = f(a) ▷ f(b)`, in lexicographic order.
///
/// Branches on the smallest unassigned element; each assignment is closed
/// under `f(a ▷ b) = f(a) ▷ f(b)` and `f(a ▷⁻¹ b) = f(a) ▷⁻¹ f(b)` for all
/// assigned pairs, so only generators of the image are ever branched on.
pub fn enumerate_endomorphisms(
    q: &Quandle,
    limit: Option<usize>,
) -> Result<Vec<Vec<usize>>, QuiverError> {
    let limit = limit.unwrap_or(DEFAULT_ENDO_LIMIT);
    let n = q.order();
    if n > limit {
        return Err(QuiverError::TooLarge { n, limit });
    }
    let mut search = EndoSearch {
        q,
        f: vec![UNSET; n],
        trail: Vec::new(),
        found: Vec::new(),
    };
    search.run();
    let mut found = search.found;
    found.sort_unstable();
    Ok(found)
}

const UNSET: usize = usize::MAX;

struct EndoSearch<'q> {
    q: &'q Quandle,
    f: Vec<usize>,
    trail: Vec<usize>,
    found: Vec<Vec<usize>>,
}

impl EndoSearch<'_> {
    fn run(&mut self) {
        let Some(a) = self.f.iter().position(|&v| v == UNSET) else {
            self.found.push(self.f.clone());
            return;
        };
        for image in 0..self.q.order() {
            let mark = self.trail.len();
            if self.assign(a, image) {
                self.run();
            }
            for &e in &self.trail[mark..] {
                self.f[e] = UNSET;
            }
            self.trail.truncate(mark);
        }
    }

    fn set(&mut self, a: usize, v: usize) -> bool {
        if self.f[a] == UNSET {
            self.f[a] = v;
            self.trail.push(a);
            true
        } else {
            self.f[a] == v
        }
    }

    fn assign(&mut self, a: usize, image: usize) -> bool {
        let q = self.q;
        let mut head = self.trail.len();
        if !self.set(a, image) {
            return false;
        }
        while head < self.trail.len() {
            let a = self.trail[head];
            head += 1;
            for b in 0..q.order() {
                if self.f[b] == UNSET {
                    continue;
                }
                let (fa, fb) = (self.f[a], self.f[b]);
                let ok = self.set(q.op(a, b), q.op(fa, fb))
                    && self.set(q.op(b, a), q.op(fb, fa))
                    && self.set(q.inv_op(a, b), q.inv_op(fa, fb))
                    && self.set(q.inv_op(b, a), q.inv_op(fb, fa));
                if !ok {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct FullEdge {
    pub from: usize,
    pub to: usize,
    /// Index into [`FullQuiver::endomorphisms`].
    pub endo: usize,
}

#[derive(Debug, Clone)]
pub struct FullQuiver<'h> {
    homset: &'h Homset<'h>,
    endos: Vec<Vec<usize>>,
    edges: Vec<FullEdge>,
}

/// The quandle coloring quiver: an edge `v → f∘v` for every vertex and every
/// given endomorphism `f`.
pub fn full_coloring_quiver<'h>(
    h: &'h Homset<'h>,
    endos: Vec<Vec<usize>>,
) -> Result<FullQuiver<'h>, QuiverError> {
    let q = h.quandle();
    let n = q.order();
    for (index, f) in endos.iter().enumerate() {
        if f.len() != n || f.iter().any(|&v| v >= n) {
            return Err(QuiverError::NotAMap(index));
        }
        for a in 0..n {
            for b in 0..n {
                if f[q.op(a, b)] != q.op(f[a], f[b]) {
                    return Err(QuiverError::NotEndomorphism { index, a, b });
                }
            }
        }
    }
    let mut edges = Vec::with_capacity(h.len() * endos.len());
    for from in 0..h.len() {
        for (endo, f) in endos.iter().enumerate() {
            let to = h
                .map_index(f, from)
                .expect("endomorphisms map colorings to colorings");
            edges.push(FullEdge { from, to, endo });
        }
    }
    Ok(FullQuiver {
        homset: h,
        endos,
        edges,
    })
}

impl<'h> FullQuiver<'h> {
    pub fn homset(&self) -> &'h Homset<'h> {
        self.homset
    }

    pub fn vertex_count(&self) -> usize {
        self.homset.len()
    }

    pub fn endomorphisms(&self) -> &[Vec<usize>] {
        &self.endos
    }

    pub fn edges(&self) -> &[FullEdge] {
        &self.edges
    }
}

/// Graphviz export. Nodes are homset indices labeled with their colorings,
/// edge labels are 1-indexed elements (or `f<k>` for endomorphisms).
pub trait ToDot {
    fn to_dot(&self) -> String;
}

fn dot_nodes(out: &mut String, h: &Homset<'_>) {
    for (i, c) in h.colorings().iter().enumerate() {
        let _ = writeln!(out, "  {i} [label=\"{c}\"];");
    }
}

impl ToDot for ActionQuiver<'_> {
    fn to_dot(&self) -> String {
        let mut out = String::from("digraph action_quiver {\n");
        dot_nodes(&mut out, self.homset);
        for e in &self.edges {
            let _ = writeln!(out, "  {} -> {} [label=\"{}\"];", e.from, e.to, e.label + 1);
        }
        out.push_str("}\n");
        out
    }
}

impl ToDot for FullQuiver<'_> {
    fn to_dot(&self) -> String {
        let mut out = String::from("digraph coloring_quiver {\n");
        dot_nodes(&mut out, self.homset);
        for e in &self.edges {
            let _ = writeln!(out, "  {} -> {} [label=\"f{}\"];", e.from, e.to, e.endo + 1);
        }
        out.push_str("}\n");
        out
    }
}

impl ToDot for CycleGraph {
    fn to_dot(&self) -> String {
        let mut out = String::from("digraph cycles {\n");
        for v in 0..self.vertex_count() {
            let _ = writeln!(out, "  {v};");
        }
        for (a, b) in self.edges() {
            let _ = writeln!(out, "  {a} -> {b};");
        }
        out.push_str("}\n");
        out
    }
}
