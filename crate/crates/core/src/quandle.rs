//! Finite quandles given by operation tables.
//!
//! Elements are the indices `0..n`. Row `a`, column `b` of the table holds
//! `a ▷ b`; the inverse operation `▷⁻¹` is always derived from the columns.
//! Text files and user-facing output use 1-indexed labels.

use std::fmt;

use num_integer::Integer;
use thiserror::Error;

use crate::perm;

/// The quandle axiom that a table failed, with the first witness found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `a ▷ a != a`.
    Idempotence { element: usize },
    /// Column `column` is not a permutation: rows `first` and `second` both
    /// map to the same value.
    RightInvertibility {
        column: usize,
        first: usize,
        second: usize,
    },
    /// `(a ▷ b) ▷ c != (a ▷ c) ▷ (b ▷ c)`.
    SelfDistributivity { a: usize, b: usize, c: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::Idempotence { element } => {
                write!(f, "idempotence fails: {0} ▷ {0} != {0}", element + 1)
            }
            Violation::RightInvertibility {
                column,
                first,
                second,
            } => write!(
                f,
                "right-invertibility fails: column {} sends rows {} and {} to the same element",
                column + 1,
                first + 1,
                second + 1
            ),
            Violation::SelfDistributivity { a, b, c } => write!(
                f,
                "self-distributivity fails at ({}, {}, {})",
                a + 1,
                b + 1,
                c + 1
            ),
        }
    }
}

/// Ways a group multiplication table can fail to define a group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupViolation {
    NoIdentity,
    NoInverse { element: usize },
    NotAssociative { a: usize, b: usize, c: usize },
}

impl fmt::Display for GroupViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupViolation::NoIdentity => write!(f, "no identity element"),
            GroupViolation::NoInverse { element } => {
                write!(f, "element {} has no inverse", element + 1)
            }
            GroupViolation::NotAssociative { a, b, c } => write!(
                f,
                "associativity fails at ({}, {}, {})",
                a + 1,
                b + 1,
                c + 1
            ),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuandleError {
    #[error("operation table is empty")]
    Empty,
    #[error("operation table is not square: row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("entry {value} at ({row}, {col}) is outside 1..={n}", row = .row + 1, col = .col + 1, value = .value + 1)]
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
        n: usize,
    },
    #[error("not a quandle: {0}")]
    AxiomViolation(Violation),
    #[error("t = {t} is not a unit modulo {n}")]
    NonUnitParameter { n: usize, t: i64 },
    #[error("not a group: {0}")]
    NotAGroup(GroupViolation),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A validated finite quandle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quandle {
    n: usize,
    table: Vec<usize>,
    inv_table: Vec<usize>,
    labels: Option<Vec<String>>,
}

/// The permutation `a ↦ a ▷ x` of a quandle, together with its order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InnerMap {
    pub element: usize,
    pub perm: Vec<usize>,
    pub order: u64,
}

impl InnerMap {
    pub fn is_identity(&self) -> bool {
        self.order == 1
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        perm::cycles(&self.perm)
    }
}

impl Quandle {
    /// Validates an operation table (0-indexed rows) and derives `▷⁻¹`.
    ///
    /// All three axioms are checked exhaustively; the first failing axiom is
    /// reported with a witness, checking idempotence, then right-invertibility,
    /// then self-distributivity.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self, QuandleError> {
        let n = rows.len();
        let table = flatten(rows)?;
        if let Some(a) = (0..n).find(|&a| table[a * n + a] != a) {
            return Err(QuandleError::AxiomViolation(Violation::Idempotence {
                element: a,
            }));
        }
        let mut inv_table = vec![0; n * n];
        for b in 0..n {
            let mut preimage = vec![usize::MAX; n];
            for a in 0..n {
                let v = table[a * n + b];
                if preimage[v] != usize::MAX {
                    return Err(QuandleError::AxiomViolation(
                        Violation::RightInvertibility {
                            column: b,
                            first: preimage[v],
                            second: a,
                        },
                    ));
                }
                preimage[v] = a;
                inv_table[v * n + b] = a;
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a * n + b];
                for c in 0..n {
                    let lhs = table[ab * n + c];
                    let rhs = table[table[a * n + c] * n + table[b * n + c]];
                    if lhs != rhs {
                        return Err(QuandleError::AxiomViolation(
                            Violation::SelfDistributivity { a, b, c },
                        ));
                    }
                }
            }
        }
        Ok(Quandle {
            n,
            table,
            inv_table,
            labels: None,
        })
    }

    /// `x ▷ y = x`.
    ///
    /// # Panics
    /// If `n == 0`.
    pub fn trivial(n: usize) -> Self {
        assert!(n > 0, "a quandle needs at least one element");
        let rows: Vec<Vec<usize>> = (0..n).map(|a| vec![a; n]).collect();
        Self::from_table(&rows).expect("trivial table satisfies the axioms")
    }

    /// `x ▷ y = 2y - x (mod n)`, labelled by the residues `0..n`.
    ///
    /// # Panics
    /// If `n == 0`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n > 0, "a quandle needs at least one element");
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| (2 * b + n - a) % n).collect())
            .collect();
        Self::from_table(&rows)
            .expect("dihedral table satisfies the axioms")
            .with_labels(residue_labels(n))
    }

    /// `x ▷ y = t·x + (1 - t)·y (mod n)`; `t` must be a unit mod `n`.
    pub fn alexander(n: usize, t: i64) -> Result<Self, QuandleError> {
        if n == 0 {
            return Err(QuandleError::Empty);
        }
        let modulus = n as i64;
        let t_mod = t.rem_euclid(modulus);
        if t_mod.gcd(&modulus) != 1 {
            return Err(QuandleError::NonUnitParameter { n, t });
        }
        let s_mod = (1 - t).rem_euclid(modulus);
        let rows: Vec<Vec<usize>> = (0..modulus)
            .map(|a| {
                (0..modulus)
                    .map(|b| ((t_mod * a + s_mod * b) % modulus) as usize)
                    .collect()
            })
            .collect();
        Ok(Self::from_table(&rows)?.with_labels(residue_labels(n)))
    }

    /// Conjugation quandle `a ▷ b = b⁻¹ a b` of a group given by its
    /// multiplication table (row `g`, column `h` holds `g·h`).
    pub fn conjugation(group: &[Vec<usize>]) -> Result<Self, QuandleError> {
        let n = group.len();
        let mul = flatten(group)?;
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| mul[e * n + g] == g && mul[g * n + e] == g))
            .ok_or(QuandleError::NotAGroup(GroupViolation::NoIdentity))?;
        let mut inverse = vec![0; n];
        for (g, slot) in inverse.iter_mut().enumerate() {
            *slot = (0..n)
                .find(|&h| mul[g * n + h] == identity && mul[h * n + g] == identity)
                .ok_or(QuandleError::NotAGroup(GroupViolation::NoInverse {
                    element: g,
                }))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a * n + b] * n + c] != mul[a * n + mul[b * n + c]] {
                        return Err(QuandleError::NotAGroup(GroupViolation::NotAssociative {
                            a,
                            b,
                            c,
                        }));
                    }
                }
            }
        }
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| mul[mul[inverse[b] * n + a] * n + b])
                    .collect()
            })
            .collect();
        Self::from_table(&rows)
    }

    /// Parses the plain-text table format: the order `n` on the first line,
    /// then `n` rows of `n` whitespace-separated 1-indexed entries. Lines
    /// starting with `#` and blank lines are ignored.
    pub fn parse(text: &str) -> Result<Self, QuandleError> {
        Self::from_table(&parse_table_text(text)?)
    }

    /// Parses a group multiplication table in the same file format and
    /// builds its conjugation quandle.
    pub fn parse_conjugation(text: &str) -> Result<Self, QuandleError> {
        Self::conjugation(&parse_table_text(text)?)
    }

    /// Serializes to the plain-text table format.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for a in 0..self.n {
            let row: Vec<String> = (0..self.n)
                .map(|b| (self.op(a, b) + 1).to_string())
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    /// Number of elements.
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    #[inline]
    pub fn inv_op(&self, a: usize, b: usize) -> usize {
        self.inv_table[a * self.n + b]
    }

    /// The table as 0-indexed rows.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    /// Column `x` of the table, i.e. the map `a ↦ a ▷ x`.
    pub fn column(&self, x: usize) -> Vec<usize> {
        (0..self.n).map(|a| self.op(a, x)).collect()
    }

    /// Display name of an element: its custom label if one was attached,
    /// otherwise the 1-indexed position.
    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(labels) => labels[a].clone(),
            None => (a + 1).to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn inner_map(&self, x: usize) -> InnerMap {
        assert!(x < self.n, "element {x} out of range");
        let perm = self.column(x);
        let order = perm::order(&perm);
        InnerMap {
            element: x,
            perm,
            order,
        }
    }

    /// True iff `z ▷ x == z ▷ y` for every `z`.
    pub fn action_equivalent(&self, x: usize, y: usize) -> bool {
        (0..self.n).all(|z| self.op(z, x) == self.op(z, y))
    }

    /// Elements grouped by identical columns, each class sorted, classes in
    /// order of their first element.
    pub fn action_classes(&self) -> Vec<Vec<usize>> {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for x in 0..self.n {
            match classes
                .iter_mut()
                .find(|class| self.action_equivalent(class[0], x))
            {
                Some(class) => class.push(x),
                None => classes.push(vec![x]),
            }
        }
        classes
    }
}

fn residue_labels(n: usize) -> Vec<String> {
    (0..n).map(|a| a.to_string()).collect()
}

fn flatten(rows: &[Vec<usize>]) -> Result<Vec<usize>, QuandleError> {
    let n = rows.len();
    if n == 0 {
        return Err(QuandleError::Empty);
    }
    let mut table = Vec::with_capacity(n * n);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(QuandleError::NotSquare {
                row: r + 1,
                len: row.len(),
                n,
            });
        }
        for (c, &value) in row.iter().enumerate() {
            if value >= n {
                return Err(QuandleError::OutOfRange {
                    row: r,
                    col: c,
                    value,
                    n,
                });
            }
            table.push(value);
        }
    }
    Ok(table)
}

fn parse_table_text(text: &str) -> Result<Vec<Vec<usize>>, QuandleError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (first, header) = lines.next().ok_or(QuandleError::Parse {
        line: 1,
        message: "missing element count".into(),
    })?;
    let n: usize = header.parse().map_err(|_| QuandleError::Parse {
        line: first,
        message: format!("expected element count, found {header:?}"),
    })?;
    if n == 0 {
        return Err(QuandleError::Empty);
    }
    let mut rows = Vec::with_capacity(n);
    for (line, content) in lines {
        if rows.len() == n {
            return Err(QuandleError::Parse {
                line,
                message: format!("unexpected extra row after {n} rows"),
            });
        }
        let row = content
            .split_whitespace()
            .map(|tok| match tok.parse::<usize>() {
                Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
                _ => Err(QuandleError::Parse {
                    line,
                    message: format!("entry {tok:?} is not in 1..={n}"),
                }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != n {
            return Err(QuandleError::Parse {
                line,
                message: format!("expected {n} entries, found {}", row.len()),
            });
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(QuandleError::Parse {
            line: text.lines().count().max(1),
            message: format!("expected {n} rows, found {}", rows.len()),
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s3() -> Vec<Vec<usize>> {
        // S3 as permutations of {0,1,2} in lexicographic order, composition
        // (g·h)(i) = h(g(i)).
        let elems: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let idx = |p: [usize; 3]| elems.iter().position(|&e| e == p).unwrap();
        elems
            .iter()
            .map(|g| {
                elems
                    .iter()
                    .map(|h| idx([h[g[0]], h[g[1]], h[g[2]]]))
                    .collect()
            })
            .collect()
    }

    fn cyclic(n: usize) -> Vec<Vec<usize>> {
        (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect()
    }

    #[test]
    fn dihedral_three_matches_published_table() {
        let d3 = Quandle::dihedral(3);
        assert_eq!(d3.rows(), vec![vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]]);
        assert!(Quandle::from_table(&[vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]]).is_ok());
        assert_eq!(d3.label(0), "0");
    }

    #[test]
    fn small_and_degenerate_tables() {
        assert_eq!(Quandle::from_table(&[vec![0]]).unwrap().order(), 1);
        assert_eq!(Quandle::dihedral(1).rows(), vec![vec![0]]);
        assert_eq!(Quandle::trivial(1).rows(), vec![vec![0]]);
        assert_eq!(Quandle::trivial(2).rows(), vec![vec![0, 0], vec![1, 1]]);
        assert_eq!(Quandle::from_table(&[]), Err(QuandleError::Empty));
        assert!(Quandle::dihedral(4).order() == 4);
    }

    #[test]
    fn right_invertibility_witness() {
        let err = Quandle::from_table(&[vec![0, 0], vec![0, 1]]).unwrap_err();
        assert_eq!(
            err,
            QuandleError::AxiomViolation(Violation::RightInvertibility {
                column: 0,
                first: 0,
                second: 1
            })
        );
    }

    #[test]
    fn idempotence_and_distributivity_witnesses() {
        let err = Quandle::from_table(&[vec![1, 0], vec![0, 1]]).unwrap_err();
        assert_eq!(
            err,
            QuandleError::AxiomViolation(Violation::Idempotence { element: 0 })
        );
        // Columns 1 and 2 swap pairs of elements while column 3 is the
        // identity, so 1 ▷ 2 = 3 cannot act as the conjugate of column 1.
        let rows = vec![vec![0, 2, 0], vec![2, 1, 1], vec![1, 0, 2]];
        match Quandle::from_table(&rows).unwrap_err() {
            QuandleError::AxiomViolation(Violation::SelfDistributivity { .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn out_of_range_entry() {
        assert!(matches!(
            Quandle::from_table(&[vec![0, 2], vec![1, 1]]),
            Err(QuandleError::OutOfRange { .. })
        ));
        assert!(matches!(
            Quandle::from_table(&[vec![0, 1], vec![1]]),
            Err(QuandleError::NotSquare { .. })
        ));
    }

    #[test]
    fn alexander_family() {
        assert_eq!(
            Quandle::alexander(3, 2).unwrap().rows(),
            Quandle::dihedral(3).rows()
        );
        assert!(Quandle::alexander(5, 2).is_ok());
        assert_eq!(
            Quandle::alexander(4, 2),
            Err(QuandleError::NonUnitParameter { n: 4, t: 2 })
        );
        assert!(Quandle::alexander(7, -3).is_ok());
    }

    #[test]
    fn alexander_minus_one_is_dihedral() {
        for n in 1..=12 {
            assert_eq!(
                Quandle::alexander(n, n as i64 - 1).unwrap().rows(),
                Quandle::dihedral(n).rows(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn conjugation_quandles() {
        for n in 1..=6 {
            assert_eq!(
                Quandle::conjugation(&cyclic(n)).unwrap().rows(),
                Quandle::trivial(n).rows()
            );
        }
        assert_eq!(
            Quandle::conjugation(&cyclic(2)).unwrap().rows(),
            vec![vec![0, 0], vec![1, 1]]
        );
        let q = Quandle::conjugation(&s3()).unwrap();
        assert_eq!(q.order(), 6);
        // Transpositions act as involutions, 3-cycles with order 3; the
        // identity is central.
        assert!(q.inner_map(0).is_identity());
        assert_eq!(q.inner_map(1).order, 2);
        assert_eq!(q.inner_map(5).order, 2);
        assert_eq!(q.inner_map(3).order, 3);
    }

    #[test]
    fn conjugation_rejects_non_groups() {
        let no_identity = vec![vec![0, 0], vec![0, 0]];
        assert_eq!(
            Quandle::conjugation(&no_identity),
            Err(QuandleError::NotAGroup(GroupViolation::NoIdentity))
        );
        // Identity 0, but 1·1 = 1 leaves 1 without an inverse.
        let no_inverse = vec![vec![0, 1], vec![1, 1]];
        assert_eq!(
            Quandle::conjugation(&no_inverse),
            Err(QuandleError::NotAGroup(GroupViolation::NoInverse {
                element: 1
            }))
        );
        // A Latin square with identity 0 that is not associative.
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            Quandle::conjugation(&loop5),
            Err(QuandleError::NotAGroup(
                GroupViolation::NotAssociative { .. }
            ))
        ));
    }

    #[test]
    fn inner_maps() {
        let d3 = Quandle::dihedral(3);
        let m = d3.inner_map(0);
        assert_eq!(m.perm, vec![0, 2, 1]);
        assert_eq!(m.cycles(), vec![vec![0], vec![1, 2]]);
        assert_eq!(m.order, 2);
        let t3 = Quandle::trivial(3);
        for x in 0..3 {
            assert!(t3.inner_map(x).is_identity());
        }
        // Reflection a ↦ -a on Z5 has order 2.
        assert_eq!(Quandle::dihedral(5).inner_map(0).order, 2);
    }

    #[test]
    fn action_equivalence() {
        let q5 = Quandle::parse(include_str!("../corpus/quandles/five_element.txt")).unwrap();
        assert!(q5.action_equivalent(0, 2));
        assert!(q5.action_equivalent(1, 3));
        assert!(q5.action_equivalent(1, 4));
        assert!(!q5.action_equivalent(0, 1));
        assert_eq!(q5.action_classes(), vec![vec![0, 2], vec![1, 3, 4]]);
        let d3 = Quandle::dihedral(3);
        assert!(!d3.action_equivalent(0, 1));
        assert!(d3.action_equivalent(2, 2));
    }

    #[test]
    fn text_format() {
        let text = "# dihedral 3\n3\n1 3 2\n3 2 1\n\n2 1 3\n";
        let q = Quandle::parse(text).unwrap();
        assert_eq!(q.rows(), Quandle::dihedral(3).rows());
        assert_eq!(Quandle::parse(&q.to_text()).unwrap(), q);
        assert!(matches!(
            Quandle::parse("2\n1 2\n"),
            Err(QuandleError::Parse { .. })
        ));
        assert!(matches!(
            Quandle::parse("2\n1 3\n2 2\n"),
            Err(QuandleError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Quandle::parse("x\n"),
            Err(QuandleError::Parse { line: 1, .. })
        ));
    }

    fn axioms_hold(rows: &[Vec<usize>]) -> bool {
        let n = rows.len();
        let idem = (0..n).all(|a| rows[a][a] == a);
        let inv = (0..n).all(|b| {
            let mut col: Vec<usize> = (0..n).map(|a| rows[a][b]).collect();
            col.sort_unstable();
            col.dedup();
            col.len() == n
        });
        let dist = (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| rows[rows[a][b]][c] == rows[rows[a][c]][rows[b][c]]))
        });
        idem && inv && dist
    }

    proptest! {
        #[test]
        fn validation_agrees_with_triple_loop(rows in (1usize..=4).prop_flat_map(|n| {
            prop::collection::vec(prop::collection::vec(0..n, n), n)
        })) {
            prop_assert_eq!(Quandle::from_table(&rows).is_ok(), axioms_hold(&rows));
        }

        #[test]
        fn derived_inverse_round_trips(n in 1usize..=9, t in -20i64..20) {
            if let Ok(q) = Quandle::alexander(n, t) {
                for a in 0..n {
                    for b in 0..n {
                        prop_assert_eq!(q.inv_op(q.op(a, b), b), a);
                        prop_assert_eq!(q.op(q.inv_op(a, b), b), a);
                    }
                }
            }
        }

        #[test]
        fn inner_maps_are_automorphisms(n in 1usize..=10, x in 0usize..10) {
            let q = Quandle::dihedral(n);
            let x = x % n;
            let m = q.inner_map(x);
            prop_assert_eq!(m.perm[x], x);
            prop_assert!(crate::perm::is_permutation(&m.perm));
            for a in 0..n {
                for b in 0..n {
                    prop_assert_eq!(m.perm[q.op(a, b)], q.op(m.perm[a], m.perm[b]));
                }
            }
            for y in 0..n {
                if q.action_equivalent(x, y) {
                    prop_assert_eq!(&q.inner_map(y).perm, &m.perm);
                }
            }
        }
    }
}
