//! Planar diagram (PD) import.
//!
//! Each `X[a,b,c,d]` lists the four edge labels counterclockwise starting at
//! the incoming under-edge `a`; the under-strand leaves along `c`, and `b`,
//! `d` are the over-strand edges. Edge labels run consecutively along each
//! oriented component, wrapping from the component's largest label to its
//! smallest.
//!
//! The over-strand runs `b → d` when `d` is the successor of `b`, otherwise
//! `d → b`. On components with two edges both readings are consistent with
//! the labels; there the direction is taken from where the component's edges
//! start at its under-crossings. A crossing is positive exactly when the
//! over-strand runs `d → b`.

use std::collections::BTreeMap;

use super::{Crossing, Diagram, DiagramError, Sign};

pub fn parse_pd(text: &str) -> Result<Diagram, DiagramError> {
    let tuples = tokenize(text)?;
    if tuples.is_empty() {
        return Err(DiagramError::parse(1, "no X[a,b,c,d] crossings found"));
    }

    // Each edge label must occur at exactly two crossing slots.
    let mut uses: BTreeMap<usize, usize> = BTreeMap::new();
    for t in &tuples {
        for &e in t {
            *uses.entry(e).or_insert(0) += 1;
        }
    }
    if let Some((&e, &k)) = uses.iter().find(|(_, &k)| k != 2) {
        return Err(DiagramError::parse(
            1,
            format!("edge {e} appears {k} times; every edge must appear exactly twice"),
        ));
    }
    let labels: Vec<usize> = uses.keys().copied().collect();
    let slot: BTreeMap<usize, usize> = labels.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let m = labels.len();

    // Components: edges joined by passing straight through a crossing.
    let mut strands = UnionFind::new(m);
    for t in &tuples {
        strands.union(slot[&t[0]], slot[&t[2]]);
        strands.union(slot[&t[1]], slot[&t[3]]);
    }
    let mut comp_edges: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &e in &labels {
        comp_edges
            .entry(strands.find(slot[&e]))
            .or_default()
            .push(e);
    }
    let mut successor: BTreeMap<usize, usize> = BTreeMap::new();
    let mut components: Vec<Vec<usize>> = comp_edges.into_values().collect();
    components.sort();
    for edges in &components {
        let (lo, hi) = (edges[0], edges[edges.len() - 1]);
        if hi - lo + 1 != edges.len() {
            return Err(DiagramError::parse(
                1,
                format!("edge labels {lo}..{hi} of a component are not consecutive"),
            ));
        }
        for &e in edges {
            successor.insert(e, if e == hi { lo } else { e + 1 });
        }
    }

    // Crossing at which each edge starts. Under-strands and unambiguous over
    // strands fix it directly; two-edge components are resolved afterwards.
    let mut start_at: BTreeMap<usize, usize> = BTreeMap::new();
    let mut over_out: Vec<Option<usize>> = vec![None; tuples.len()];
    for (k, &[a, b, c, d]) in tuples.iter().enumerate() {
        if successor[&a] != c {
            return Err(DiagramError::OrientationAmbiguous { crossing: k });
        }
        start_at.insert(c, k);
        let forward = successor[&b] == d;
        let backward = successor[&d] == b;
        match (forward, backward) {
            (true, false) => over_out[k] = Some(d),
            (false, true) => over_out[k] = Some(b),
            (false, false) => return Err(DiagramError::OrientationAmbiguous { crossing: k }),
            (true, true) => {}
        }
        if let Some(e) = over_out[k] {
            start_at.insert(e, k);
        }
    }
    // An edge starts at exactly one slot, so if one over-edge is already known
    // to start somewhere the strand must leave along the other.
    loop {
        let mut progress = false;
        for (k, &[_, b, _, d]) in tuples.iter().enumerate() {
            if over_out[k].is_some() {
                continue;
            }
            let out = match (start_at.contains_key(&b), start_at.contains_key(&d)) {
                (true, false) => d,
                (false, true) => b,
                _ => continue,
            };
            over_out[k] = Some(out);
            start_at.insert(out, k);
            progress = true;
        }
        if !progress {
            break;
        }
    }
    if let Some(k) = over_out.iter().position(Option::is_none) {
        return Err(DiagramError::OrientationAmbiguous { crossing: k });
    }

    // Arcs: edges glued through over-crossings, numbered along components
    // starting at the smallest edge that leaves an under-crossing.
    let mut arcs = UnionFind::new(m);
    for t in &tuples {
        arcs.union(slot[&t[1]], slot[&t[3]]);
    }
    let under_out: std::collections::BTreeSet<usize> = tuples.iter().map(|t| t[2]).collect();
    let mut arc_id: BTreeMap<usize, usize> = BTreeMap::new();
    for edges in &components {
        let begin = edges
            .iter()
            .position(|e| under_out.contains(e))
            .unwrap_or(0);
        for &e in edges[begin..].iter().chain(&edges[..begin]) {
            let root = arcs.find(slot[&e]);
            let next = arc_id.len();
            arc_id.entry(root).or_insert(next);
        }
    }
    let arc_of = |e: usize, arcs: &mut UnionFind| arc_id[&arcs.find(slot[&e])];

    let mut crossings = Vec::with_capacity(tuples.len());
    for (k, &[a, b, c, _]) in tuples.iter().enumerate() {
        let sign = if over_out[k] == Some(b) {
            Sign::Positive
        } else {
            Sign::Negative
        };
        crossings.push(Crossing {
            sign,
            over: arc_of(b, &mut arcs),
            under_in: arc_of(a, &mut arcs),
            under_out: arc_of(c, &mut arcs),
        });
    }
    Diagram::new(arc_id.len(), crossings, 0).map_err(|e| match e {
        DiagramError::ArcConsistency { reason, .. } => {
            DiagramError::parse(1, format!("inconsistent PD code: {reason}"))
        }
        other => other,
    })
}

fn tokenize(text: &str) -> Result<Vec<[usize; 4]>, DiagramError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut rest = raw.split('#').next().unwrap_or("").trim();
        if let Some(inner) = rest.strip_prefix("PD[") {
            rest = inner.strip_suffix(']').unwrap_or(inner);
        }
        let mut chars = rest;
        loop {
            chars = chars.trim_start_matches(|c: char| c.is_whitespace() || c == ',');
            if chars.is_empty() {
                break;
            }
            let body = chars.strip_prefix("X[").ok_or_else(|| {
                DiagramError::parse(line, format!("expected X[...], found {chars:?}"))
            })?;
            let close = body
                .find(']')
                .ok_or_else(|| DiagramError::parse(line, "unterminated X["))?;
            let nums: Vec<usize> = body[..close]
                .split(',')
                .map(|s| {
                    s.trim().parse::<usize>().map_err(|_| {
                        DiagramError::parse(line, format!("{:?} is not an edge label", s.trim()))
                    })
                })
                .collect::<Result<_, _>>()?;
            let tuple: [usize; 4] = nums
                .try_into()
                .map_err(|_| DiagramError::parse(line, "X[...] needs exactly four labels"))?;
            out.push(tuple);
            chars = &body[close + 1..];
        }
    }
    Ok(out)
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
