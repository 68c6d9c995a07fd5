//! The native crossing-list format.
//!
//! ```text
//! # comment
//! name 3_1
//! arcs 3
//! +1 2 1 3        # sign over under_in under_out
//! +1 3 2 1
//! +1 1 3 2
//! component 1 3 2
//! virtual 0
//! ```
//!
//! `component` lines are optional; when present they must agree (up to
//! rotation and order) with the arc cycles implied by the crossings.

use super::{Crossing, Diagram, DiagramError, Sign};

pub fn parse_crossing_list(text: &str) -> Result<Diagram, DiagramError> {
    let mut name = None;
    let mut arc_count: Option<(usize, usize)> = None;
    let mut virtual_count = 0usize;
    let mut raw_crossings: Vec<(usize, [i64; 4])> = Vec::new();
    let mut declared_components: Vec<(usize, Vec<usize>)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut words = content.split_whitespace();
        let head = words.next().expect("non-empty line has a word");
        match head {
            "name" => {
                let rest: Vec<&str> = words.collect();
                if rest.is_empty() {
                    return Err(DiagramError::parse(line, "name needs a value"));
                }
                name = Some(rest.join(" "));
            }
            "arcs" => {
                if arc_count.is_some() {
                    return Err(DiagramError::parse(line, "duplicate arcs line"));
                }
                let n = single_count(line, words.collect())?;
                arc_count = Some((line, n));
            }
            "virtual" => virtual_count = single_count(line, words.collect())?,
            "component" => {
                let arcs = words
                    .map(|w| parse_arc(line, w))
                    .collect::<Result<Vec<_>, _>>()?;
                if arcs.is_empty() {
                    return Err(DiagramError::parse(line, "component lists no arcs"));
                }
                declared_components.push((line, arcs));
            }
            _ => {
                let fields: Vec<&str> = content.split_whitespace().collect();
                if fields.len() != 4 {
                    return Err(DiagramError::parse(
                        line,
                        format!(
                            "expected `<sign> <over> <under_in> <under_out>`, found {content:?}"
                        ),
                    ));
                }
                let mut vals = [0i64; 4];
                for (slot, f) in vals.iter_mut().zip(&fields) {
                    *slot = f.parse().map_err(|_| {
                        DiagramError::parse(line, format!("{f:?} is not an integer"))
                    })?;
                }
                raw_crossings.push((line, vals));
            }
        }
    }

    let (_, arc_count) =
        arc_count.ok_or_else(|| DiagramError::parse(1, "missing `arcs N` line"))?;
    let mut crossings = Vec::with_capacity(raw_crossings.len());
    for (line, [s, over, under_in, under_out]) in raw_crossings {
        let sign = Sign::from_int(s as i32)
            .filter(|_| s.abs() == 1)
            .ok_or_else(|| {
                DiagramError::parse(line, format!("sign must be +1 or -1, found {s}"))
            })?;
        let arc = |v: i64| -> Result<usize, DiagramError> {
            if v < 1 || v as usize > arc_count {
                Err(DiagramError::parse(
                    line,
                    format!("arc {v} is outside 1..={arc_count}"),
                ))
            } else {
                Ok(v as usize - 1)
            }
        };
        crossings.push(Crossing {
            sign,
            over: arc(over)?,
            under_in: arc(under_in)?,
            under_out: arc(under_out)?,
        });
    }
    let mut diagram = Diagram::new(arc_count, crossings, virtual_count)?;
    if !declared_components.is_empty() {
        check_components(&diagram, &declared_components)?;
    }
    diagram.name = name;
    Ok(diagram)
}

fn single_count(line: usize, words: Vec<&str>) -> Result<usize, DiagramError> {
    match words.as_slice() {
        [w] => w
            .parse()
            .map_err(|_| DiagramError::parse(line, format!("{w:?} is not a count"))),
        _ => Err(DiagramError::parse(line, "expected a single count")),
    }
}

fn parse_arc(line: usize, word: &str) -> Result<usize, DiagramError> {
    match word.parse::<usize>() {
        Ok(v) if v >= 1 => Ok(v - 1),
        _ => Err(DiagramError::parse(
            line,
            format!("{word:?} is not an arc index"),
        )),
    }
}

fn canonical_cycle(cycle: &[usize]) -> Vec<usize> {
    let start = cycle
        .iter()
        .enumerate()
        .min_by_key(|&(_, a)| a)
        .map(|(i, _)| i)
        .unwrap_or(0);
    cycle[start..]
        .iter()
        .chain(&cycle[..start])
        .copied()
        .collect()
}

fn check_components(
    diagram: &Diagram,
    declared: &[(usize, Vec<usize>)],
) -> Result<(), DiagramError> {
    let mut given: Vec<Vec<usize>> = Vec::new();
    for (line, arcs) in declared {
        if let Some(&bad) = arcs.iter().find(|&&a| a >= diagram.arc_count) {
            return Err(DiagramError::parse(
                *line,
                format!("arc {} is outside 1..={}", bad + 1, diagram.arc_count),
            ));
        }
        given.push(canonical_cycle(arcs));
    }
    given.sort();
    let mut derived: Vec<Vec<usize>> = diagram.components.clone();
    derived.sort();
    if given != derived {
        let arc = given
            .iter()
            .flatten()
            .chain(derived.iter().flatten())
            .copied()
            .find(|a| {
                let g = given.iter().find(|c| c.contains(a));
                let d = derived.iter().find(|c| c.contains(a));
                g != d
            })
            .unwrap_or(0);
        return Err(DiagramError::ArcConsistency {
            arc,
            reason: "component lines disagree with the cycles implied by the crossings".into(),
        });
    }
    Ok(())
}

pub(super) fn serialize(d: &Diagram) -> String {
    let mut out = String::new();
    if let Some(name) = &d.name {
        out.push_str(&format!("name {name}\n"));
    }
    out.push_str(&format!("arcs {}\n", d.arc_count));
    if d.virtual_crossings > 0 {
        out.push_str(&format!("virtual {}\n", d.virtual_crossings));
    }
    for c in &d.crossings {
        out.push_str(&format!(
            "{} {} {} {}\n",
            c.sign,
            c.over + 1,
            c.under_in + 1,
            c.under_out + 1
        ));
    }
    for comp in &d.components {
        let arcs: Vec<String> = comp.iter().map(|a| (a + 1).to_string()).collect();
        out.push_str(&format!("component {}\n", arcs.join(" ")));
    }
    out
}
