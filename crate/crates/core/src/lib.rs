//! Quandle coloring homsets, action quivers and action polynomials of
//! classical and virtual link diagrams.

pub mod diagram;
pub mod error;
pub mod homset;
pub mod perm;
pub mod polynomial;
pub mod quandle;
pub mod quiver;
pub mod tables;

pub use diagram::{
    load_corpus, parse_crossing_list, parse_pd, parse_signed_gauss, Crossing, Diagram,
    DiagramError, Op, Relation, Sign,
};
pub use error::{Error, ErrorKind};
pub use homset::{
    act, brute_force_colorings, counting_invariant, enumerate_colorings, loop_length, Coloring,
    Homset, HomsetError,
};
pub use polynomial::{ParsePolynomialError, Polynomial};
pub use quandle::{InnerMap, Quandle, QuandleError, Violation};
pub use quiver::{
    action_polynomial, action_polynomial_by_loops, action_quiver, enumerate_endomorphisms,
    full_coloring_quiver, polynomial_for_all_elements, reconstruct_from_polynomial,
    ActionPolynomial, ActionQuiver, CycleGraph, FullQuiver, QuiverError, ToDot,
};
pub use tables::{reproduce_tables, CellStatus, Report};
