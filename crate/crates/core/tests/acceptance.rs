//! Acceptance suite: one check per criterion, each printing a PASS/FAIL line.
//! Run with `cargo test -p quandle-quiver --test acceptance -- --nocapture`
//! to see the lines.

use std::collections::BTreeMap;

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use quandle_quiver::diagram::{corpus_names, corpus_pd, table_links};
use quandle_quiver::quiver::{action_polynomial_by_loops, ActionPolynomial};
use quandle_quiver::tables::{bundled_quandle, reproduce_tables, CellStatus, Report};
use quandle_quiver::{
    action_polynomial, action_quiver, brute_force_colorings, enumerate_colorings, load_corpus,
    parse_pd, parse_signed_gauss, polynomial_for_all_elements, reconstruct_from_polynomial,
    Diagram, Polynomial, Quandle,
};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn corpus() -> Vec<Diagram> {
    corpus_names().map(|n| load_corpus(n).unwrap()).collect()
}

fn name(d: &Diagram) -> &str {
    d.name().unwrap_or("?")
}

fn cyclic(n: usize) -> Vec<Vec<usize>> {
    (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect()
}

fn symmetric3() -> Vec<Vec<usize>> {
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

/// Quandles of order at most 6 used for structural checks.
fn small_quandles() -> Vec<(String, Quandle)> {
    let mut out: Vec<(String, Quandle)> = Vec::new();
    for n in 1..=6 {
        out.push((format!("dihedral:{n}"), Quandle::dihedral(n)));
    }
    for n in 1..=3 {
        out.push((format!("trivial:{n}"), Quandle::trivial(n)));
    }
    for (n, t) in [(5, 2), (5, 3), (4, 3)] {
        out.push((
            format!("alexander:{n}:{t}"),
            Quandle::alexander(n, t).unwrap(),
        ));
    }
    out.push((
        "conj:S3".into(),
        Quandle::conjugation(&symmetric3()).unwrap(),
    ));
    for name in ["four_element", "five_element", "six_element"] {
        out.push((name.into(), bundled_quandle(name).unwrap()));
    }
    out
}

fn c1_trefoil() -> Outcome {
    let q = Quandle::dihedral(3);
    let sources = [
        load_corpus("3_1").unwrap(),
        parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]").unwrap(),
        parse_signed_gauss("O1+ U2+ O3+ U1+ O2+ U3+").unwrap(),
    ];
    for d in &sources {
        let h = enumerate_colorings(d, &q, None).map_err(|e| e.to_string())?;
        check(h.len() == 9, || format!("homset has {} elements", h.len()))?;
        let p = action_polynomial(&h, 0).poly.to_string();
        check(p == "8u^2 + u", || format!("polynomial is {p}"))?;
    }
    Ok("|Hom| = 9, Φ = 8u^2 + u (native, PD and Gauss inputs)".into())
}

fn blocking_cells(report: &Report, table: &str, expected: usize) -> Result<(), String> {
    let cells: Vec<_> = report.table(table).collect();
    check(cells.len() == expected, || {
        format!("{} cells, expected {expected}", cells.len())
    })?;
    Ok(())
}

fn c2_five_element(report: &Report) -> Outcome {
    blocking_cells(report, "five-element", 36)?;
    let links: Vec<&str> = report.table("five-element").map(|c| c.link).collect();
    let expected: Vec<&str> = table_links().iter().flat_map(|l| [*l, *l]).collect();
    check(links == expected, || {
        "rows differ from the 18-link table".into()
    })?;
    for c in report.table("five-element") {
        check(c.status == CellStatus::Match, || {
            format!("{} x={}: {:?}", c.link, c.element + 1, c.status)
        })?;
        check(c.rendered.as_deref() == Some(c.printed), || {
            format!(
                "{} x={}: {:?} vs {}",
                c.link,
                c.element + 1,
                c.rendered,
                c.printed
            )
        })?;
    }
    // Spot values recomputed by the loop-length route, compared to printed text.
    let q = bundled_quandle("five_element").unwrap();
    for (link, x, printed) in [
        ("L2a1", 0, "4u+9u^3"),
        ("L2a1", 1, "9u+4u^2"),
        ("L6a4", 0, "8u+117u^3"),
        ("L6a4", 1, "27u+98u^2"),
    ] {
        let d = load_corpus(link).unwrap();
        let h = enumerate_colorings(&d, &q, None).unwrap();
        let p = action_polynomial_by_loops(&h, x);
        check(p.to_ascending_compact() == printed, || {
            format!("{link} x={}: {}", x + 1, p.to_ascending_compact())
        })?;
    }
    Ok("36/36 cells byte-identical to the printed strings".into())
}

fn c3_four_element(report: &Report) -> Outcome {
    blocking_cells(report, "four-element", 12)?;
    let mut flagged = Vec::new();
    for c in report.table("four-element") {
        check(c.counting == Some(16), || {
            format!("{}: counting invariant {:?}", c.link, c.counting)
        })?;
        match &c.status {
            CellStatus::Match => {}
            CellStatus::MatchFlaggedTypo { printed } => {
                check(printed == "12^2u+4u", || {
                    format!("{}: flagged {printed}", c.link)
                })?;
                check(c.rendered.as_deref() == Some("12u^2+4u"), || {
                    format!("{}: {:?}", c.link, c.rendered)
                })?;
                flagged.push(c.link);
            }
            other => return Err(format!("{}: {other:?}", c.link)),
        }
    }
    check(flagged == ["L7a4", "L7n1"], || {
        format!("flagged rows {flagged:?}")
    })?;
    Ok("12/12 rows match, L7a4 and L7n1 flagged against \"12^2u+4u\", all counts 16".into())
}

fn c4_six_element(report: &Report) -> Outcome {
    let cells: Vec<_> = report.table("six-element").collect();
    check(cells.len() == 4, || format!("{} cells", cells.len()))?;
    let mut notes = Vec::new();
    for c in &cells {
        match (&c.computed, c.counting, c.diagram) {
            (Some(p), Some(n), Some(d)) => {
                check(p.at_one() == n as u64, || format!("{}: Φ(1) ≠ {n}", c.link))?;
                check(p.terms().all(|(j, cj)| cj % j as u64 == 0), || {
                    format!("{}: divisibility fails for {p}", c.link)
                })?;
                let verdict = if c.status.is_match() {
                    "matches"
                } else {
                    "differs"
                };
                notes.push(format!("{} as {} {}", c.link, d, verdict));
            }
            _ => notes.push(format!("{} unresolved", c.link)),
        }
    }
    Ok(format!(
        "non-blocking; invariants hold; {}",
        notes.join(", ")
    ))
}

fn c5_trivial_actions() -> Outcome {
    let links = corpus();
    let mut checked = 0;
    for n in 1..=5 {
        let q = Quandle::trivial(n);
        for d in &links {
            let h = enumerate_colorings(d, &q, None).map_err(|e| e.to_string())?;
            let expected_count = n.pow(d.components().len() as u32);
            check(h.len() == expected_count, || {
                format!("{} trivial:{n}: {} colorings", name(d), h.len())
            })?;
            for p in polynomial_for_all_elements(&h) {
                check(
                    p.poly == Polynomial::from_terms([(1, h.len() as u64)]),
                    || format!("{} trivial:{n} x={}: {}", name(d), p.element + 1, p.poly),
                )?;
                checked += 1;
            }
        }
    }
    let mut identity_columns = 0;
    for (qname, q) in small_quandles() {
        let trivial_elements: Vec<usize> = (0..q.order())
            .filter(|&x| q.inner_map(x).is_identity())
            .collect();
        if trivial_elements.is_empty() {
            continue;
        }
        for d in &links {
            let h = enumerate_colorings(d, &q, None).map_err(|e| e.to_string())?;
            for &x in &trivial_elements {
                let p = action_polynomial(&h, x).poly;
                check(p == Polynomial::from_terms([(1, h.len() as u64)]), || {
                    format!("{} {qname} x={}: {p}", name(d), x + 1)
                })?;
                identity_columns += 1;
            }
        }
    }
    check(identity_columns > 0, || {
        "no identity columns exercised".into()
    })?;
    Ok(format!(
        "{checked} trivial-quandle polynomials equal |Hom|·u; {identity_columns} identity-column cases equal |Hom|·u"
    ))
}

fn c6_action_classes() -> Outcome {
    let q = bundled_quandle("five_element").unwrap();
    check(
        q.action_classes() == vec![vec![0, 2], vec![1, 3, 4]],
        || format!("action classes {:?}", q.action_classes()),
    )?;
    for link in table_links() {
        let d = load_corpus(link).unwrap();
        let h = enumerate_colorings(&d, &q, None).unwrap();
        let p: Vec<ActionPolynomial> = polynomial_for_all_elements(&h);
        check(p[0].poly == p[2].poly, || format!("{link}: Φ1 ≠ Φ3"))?;
        check(p[1].poly == p[3].poly && p[1].poly == p[4].poly, || {
            format!("{link}: Φ2, Φ4, Φ5 differ")
        })?;
    }
    Ok("Φ1 = Φ3 and Φ2 = Φ4 = Φ5 on all 18 links".into())
}

fn c7_oracle() -> Outcome {
    let quandles = [
        Quandle::trivial(2),
        Quandle::trivial(3),
        Quandle::dihedral(3),
        Quandle::dihedral(4),
        bundled_quandle("four_element").unwrap(),
    ];
    let links = corpus();
    let mut pairs = 0;
    for d in &links {
        for q in &quandles {
            let fast = enumerate_colorings(d, q, None).map_err(|e| e.to_string())?;
            let slow = brute_force_colorings(d, q).map_err(|e| e.to_string())?;
            check(fast.colorings() == slow.colorings(), || {
                format!("{} with a quandle of order {}", name(d), q.order())
            })?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} (diagram, quandle) pairs identical"))
}

fn c8_invariance() -> Outcome {
    let families: &[(&str, &[&str])] = &[
        ("3_1", &["3_1.r1", "3_1.r2", "3_1.mix"]),
        ("4_1", &["4_1.mix"]),
        ("L2a1", &["L2a1.r2", "L2a1.mix"]),
        ("L4a1", &["L4a1.mix"]),
        ("L6a4", &["L6a4.mix"]),
        ("L7n1", &["L7n1.mix"]),
    ];
    let quandles = small_quandles();
    let mut pairs = 0;
    for (base, variants) in families {
        let d0 = load_corpus(base).unwrap();
        for v in *variants {
            let d1 = load_corpus(v).unwrap();
            check(d0 != d1, || format!("{v} is not a different diagram"))?;
            for (qname, q) in &quandles {
                let h0 = enumerate_colorings(&d0, q, None).map_err(|e| e.to_string())?;
                let h1 = enumerate_colorings(&d1, q, None).map_err(|e| e.to_string())?;
                check(h0.len() == h1.len(), || {
                    format!("{base} vs {v} ({qname}): {} vs {}", h0.len(), h1.len())
                })?;
                let p0 = polynomial_for_all_elements(&h0);
                let p1 = polynomial_for_all_elements(&h1);
                check(p0 == p1, || {
                    format!("{base} vs {v} ({qname}): polynomials differ")
                })?;
            }
            pairs += 1;
        }
        // The PD the native file came from gives the same invariants too.
        if let Some(pd) = corpus_pd(base) {
            let dp = parse_pd(pd).map_err(|e| e.to_string())?;
            for (qname, q) in &quandles {
                let a = polynomial_for_all_elements(&enumerate_colorings(&d0, q, None).unwrap());
                let b = polynomial_for_all_elements(&enumerate_colorings(&dp, q, None).unwrap());
                check(a == b, || format!("{base} PD import ({qname}) differs"))?;
            }
        }
    }
    check(pairs >= 3, || format!("only {pairs} pairs"))?;
    Ok(format!(
        "{pairs} diagram pairs agree on counts and all polynomials over {} quandles",
        quandles.len()
    ))
}

fn c9_structure() -> Outcome {
    let links = corpus();
    let mut polys = 0;
    for (qname, q) in small_quandles() {
        let orders: Vec<u64> = (0..q.order()).map(|x| q.inner_map(x).order).collect();
        for d in &links {
            let h = enumerate_colorings(d, &q, None).map_err(|e| e.to_string())?;
            let aq = action_quiver(&h, None);
            for (x, &order) in orders.iter().enumerate() {
                let ctx = || format!("{} {qname} x={}", name(d), x + 1);
                let p = action_polynomial(&h, x).poly;
                check(p.at_one() == h.len() as u64, || {
                    format!("{}: Φ(1) ≠ |Hom|", ctx())
                })?;
                check(p == action_polynomial_by_loops(&h, x), || {
                    format!("{}: cycle and loop routes differ", ctx())
                })?;
                for (j, cj) in p.terms() {
                    check(cj % j as u64 == 0, || format!("{}: {cj}u^{j}", ctx()))?;
                    check(order.is_multiple_of(j as u64), || {
                        format!("{}: exponent {j} does not divide {order}", ctx())
                    })?;
                }
                let g = reconstruct_from_polynomial(&p).map_err(|e| format!("{}: {e}", ctx()))?;
                let cycles = aq.cycle_structure(x).map_err(|e| e.to_string())?;
                check(g.cycle_lengths() == cycles.as_slice(), || {
                    format!("{}: reconstructed cycles differ", ctx())
                })?;
                polys += 1;
            }
        }
    }
    Ok(format!("{polys} polynomials satisfy all four properties"))
}

fn triple_loop_is_quandle(t: &[Vec<usize>]) -> bool {
    let n = t.len();
    if t.iter().enumerate().any(|(a, row)| row[a] != a) {
        return false;
    }
    for b in 0..n {
        let mut seen = vec![false; n];
        for row in t {
            if seen[row[b]] {
                return false;
            }
            seen[row[b]] = true;
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if t[t[a][b]][c] != t[t[a][c]][t[b][c]] {
                    return false;
                }
            }
        }
    }
    true
}

fn arb_table() -> impl Strategy<Value = Vec<Vec<usize>>> {
    // Half raw random tables, half tables built from permuted columns with
    // a forced diagonal, which hit the accepting side far more often.
    (1usize..=4).prop_flat_map(|n| {
        let raw = prop::collection::vec(prop::collection::vec(0..n, n), n).boxed();
        let structured = prop::collection::vec(Just((0..n).collect::<Vec<_>>()).prop_shuffle(), n)
            .prop_map(move |cols| {
                let mut t = vec![vec![0; n]; n];
                for (b, col) in cols.iter().enumerate() {
                    for a in 0..n {
                        t[a][b] = col[a];
                    }
                }
                for (a, row) in t.iter_mut().enumerate() {
                    row[a] = a;
                }
                t
            })
            .boxed();
        prop_oneof![raw, structured]
    })
}

fn c10_axioms() -> Outcome {
    let mut runner = TestRunner::new(Config {
        cases: 2000,
        failure_persistence: None,
        ..Config::default()
    });
    let accepted = std::cell::Cell::new(0usize);
    runner
        .run(&arb_table(), |t| {
            let ours = Quandle::from_table(&t).is_ok();
            prop_assert_eq!(ours, triple_loop_is_quandle(&t), "table {:?}", t);
            if ours {
                accepted.set(accepted.get() + 1);
            }
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    check(accepted.get() > 0, || {
        "no random table was a quandle".into()
    })?;

    let mut constructors = TestRunner::new(Config {
        cases: 300,
        failure_persistence: None,
        ..Config::default()
    });
    constructors
        .run(&(1usize..=24, -30i64..30, 1usize..=8), |(n, t, m)| {
            prop_assert!(triple_loop_is_quandle(&Quandle::dihedral(n).rows()));
            match Quandle::alexander(n, t) {
                Ok(q) => prop_assert!(triple_loop_is_quandle(&q.rows())),
                Err(_) => prop_assert!(num_integer::gcd(t.rem_euclid(n as i64) as usize, n) != 1),
            }
            let z = Quandle::conjugation(&cyclic(m)).unwrap();
            prop_assert!(triple_loop_is_quandle(&z.rows()));
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    let s3 = Quandle::conjugation(&symmetric3()).map_err(|e| e.to_string())?;
    check(triple_loop_is_quandle(&s3.rows()), || {
        "S3 conjugation".into()
    })?;
    Ok(format!(
        "2000 random tables agree with the triple-loop oracle ({} quandles); constructors validate",
        accepted.get()
    ))
}

#[test]
fn acceptance() {
    let report = reproduce_tables();
    let criteria: Vec<Criterion> = vec![
        ("trefoil value", Box::new(c1_trefoil)),
        ("five-element table", Box::new(|| c2_five_element(&report))),
        ("four-element table", Box::new(|| c3_four_element(&report))),
        ("six-element rows", Box::new(|| c4_six_element(&report))),
        ("trivial actions", Box::new(c5_trivial_actions)),
        ("action-class equality", Box::new(c6_action_classes)),
        ("oracle equivalence", Box::new(c7_oracle)),
        ("diagram invariance", Box::new(c8_invariance)),
        ("structural properties", Box::new(c9_structure)),
        ("axiom validation", Box::new(c10_axioms)),
    ];
    let mut results = BTreeMap::new();
    for (i, (label, f)) in criteria.iter().enumerate() {
        let outcome = f();
        match &outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {label}: {detail}", i + 1),
            Err(why) => println!("criterion {:>2} FAIL  {label}: {why}", i + 1),
        }
        results.insert(i + 1, outcome.is_ok());
    }
    let failed: Vec<usize> = results
        .iter()
        .filter(|(_, ok)| !**ok)
        .map(|(i, _)| *i)
        .collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
