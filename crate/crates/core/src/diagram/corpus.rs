//! Bundled diagrams: the prime links through seven crossings, a few small
//! knots, and alternative diagrams of some of them obtained by Reidemeister
//! moves. Native files are regenerated by `tools/gen_corpus.py`.

use super::{parse_crossing_list, Diagram, DiagramError};

struct Entry {
    name: &'static str,
    native: &'static str,
    pd: Option<&'static str>,
}

macro_rules! entry {
    ($name:literal, $pd:expr) => {
        Entry {
            name: $name,
            native: include_str!(concat!("../../corpus/links/", $name, ".txt")),
            pd: $pd,
        }
    };
}

const UNKNOT: &str = "name 0_1\narcs 1\n";

static CORPUS: &[Entry] = &[
    Entry {
        name: "0_1",
        native: UNKNOT,
        pd: None,
    },
    entry!("3_1", Some(include_str!("../../corpus/pd/3_1.pd"))),
    entry!("4_1", Some(include_str!("../../corpus/pd/4_1.pd"))),
    entry!("5_1", Some(include_str!("../../corpus/pd/5_1.pd"))),
    entry!("5_2", Some(include_str!("../../corpus/pd/5_2.pd"))),
    entry!("L2a1", Some(include_str!("../../corpus/pd/L2a1.pd"))),
    entry!("L4a1", Some(include_str!("../../corpus/pd/L4a1.pd"))),
    entry!("L5a1", Some(include_str!("../../corpus/pd/L5a1.pd"))),
    entry!("L6a1", Some(include_str!("../../corpus/pd/L6a1.pd"))),
    entry!("L6a2", Some(include_str!("../../corpus/pd/L6a2.pd"))),
    entry!("L6a3", Some(include_str!("../../corpus/pd/L6a3.pd"))),
    entry!("L6a4", Some(include_str!("../../corpus/pd/L6a4.pd"))),
    entry!("L6a5", Some(include_str!("../../corpus/pd/L6a5.pd"))),
    entry!("L6n1", Some(include_str!("../../corpus/pd/L6n1.pd"))),
    entry!("L7a1", Some(include_str!("../../corpus/pd/L7a1.pd"))),
    entry!("L7a2", Some(include_str!("../../corpus/pd/L7a2.pd"))),
    entry!("L7a3", Some(include_str!("../../corpus/pd/L7a3.pd"))),
    entry!("L7a4", Some(include_str!("../../corpus/pd/L7a4.pd"))),
    entry!("L7a5", Some(include_str!("../../corpus/pd/L7a5.pd"))),
    entry!("L7a6", Some(include_str!("../../corpus/pd/L7a6.pd"))),
    entry!("L7a7", Some(include_str!("../../corpus/pd/L7a7.pd"))),
    entry!("L7n1", Some(include_str!("../../corpus/pd/L7n1.pd"))),
    entry!("L7n2", Some(include_str!("../../corpus/pd/L7n2.pd"))),
    entry!("L4a1{1}", None),
    entry!("3_1.r1", Some(include_str!("../../corpus/pd/3_1.r1.pd"))),
    entry!("3_1.r2", Some(include_str!("../../corpus/pd/3_1.r2.pd"))),
    entry!("3_1.mix", Some(include_str!("../../corpus/pd/3_1.mix.pd"))),
    entry!("4_1.mix", Some(include_str!("../../corpus/pd/4_1.mix.pd"))),
    entry!("L2a1.r2", Some(include_str!("../../corpus/pd/L2a1.r2.pd"))),
    entry!(
        "L2a1.mix",
        Some(include_str!("../../corpus/pd/L2a1.mix.pd"))
    ),
    entry!(
        "L4a1.mix",
        Some(include_str!("../../corpus/pd/L4a1.mix.pd"))
    ),
    entry!(
        "L6a4.mix",
        Some(include_str!("../../corpus/pd/L6a4.mix.pd"))
    ),
    entry!(
        "L7n1.mix",
        Some(include_str!("../../corpus/pd/L7n1.mix.pd"))
    ),
];

/// Prime links in table order, as used by the action polynomial tables.
static TABLE_LINKS: &[&str] = &[
    "L2a1", "L4a1", "L5a1", "L6a1", "L6a2", "L6a3", "L6a4", "L6a5", "L6n1", "L7a1", "L7a2", "L7a3",
    "L7a4", "L7a5", "L7a6", "L7a7", "L7n1", "L7n2",
];

pub fn corpus_names() -> impl Iterator<Item = &'static str> {
    CORPUS.iter().map(|e| e.name)
}

pub fn table_links() -> &'static [&'static str] {
    TABLE_LINKS
}

pub fn load_corpus(name: &str) -> Result<Diagram, DiagramError> {
    let entry = CORPUS
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| DiagramError::UnknownName(name.to_string()))?;
    parse_crossing_list(entry.native)
}

/// The PD code a corpus diagram was generated from, if it has one.
pub fn corpus_pd(name: &str) -> Option<&'static str> {
    CORPUS.iter().find(|e| e.name == name).and_then(|e| e.pd)
}
