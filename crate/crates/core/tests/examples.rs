mod common;

use std::path::PathBuf;

use common::load_fixture;
use frobcell::analysis::{analyze, render_text, Analysis, AnalysisOptions};
use frobcell::cellular::{search_poset, verify_cell_datum};
use frobcell::fixtures::{fixture, provenance, FIXTURE_NAMES};
use frobcell::frobenius::{dual_bases, NakayamaOrder};
use frobcell::report::Status;
use frobcell::spec_file::{dump, to_json_pretty, AnySpec, LoadOptions};
use frobcell::Field;

fn run(name: &str, params: &[(&str, &str)], field: Option<Field>) -> Analysis {
    analyze(
        &load_fixture(name, params, field),
        &AnalysisOptions::default(),
    )
    .unwrap()
}

fn grids(tables: &[frobcell::analysis::CellTable]) -> Vec<(String, Vec<Vec<String>>)> {
    tables
        .iter()
        .map(|t| (t.cell.clone(), t.grid.clone()))
        .collect()
}

fn g(rows: &[&[&str]]) -> Vec<Vec<String>> {
    rows.iter()
        .map(|r| r.iter().map(|s| s.to_string()).collect())
        .collect()
}

#[test]
fn nakayama_order_depends_on_lambda() {
    let order = |lambda: &str, field: Option<Field>| {
        let l = load_fixture("local-e43", &[("lambda", lambda)], field);
        dual_bases(&l.algebra, l.trace.as_ref().unwrap())
            .unwrap()
            .nakayama_order(24)
    };
    assert_eq!(order("-1", None), NakayamaOrder::Finite(2));
    assert_eq!(order("2", None), NakayamaOrder::ExceedsBound(24));
    // 2 has multiplicative order 4 mod 5
    assert_eq!(order("2", Some(Field::Prime(5))), NakayamaOrder::Finite(4));
}

#[test]
fn quiver_e42_dual_tables() {
    let a = run("quiver-e42", &[], None);
    let c = a.cellular.as_ref().unwrap();
    assert_eq!(
        grids(&c.right_dual_tables),
        vec![
            ("3".into(), g(&[&["e2"]])),
            (
                "2".into(),
                g(&[
                    &["a1b3", "b3", "e3"],
                    &["a1", "e0", "a2"],
                    &["e1", "b2", "a2b2"]
                ])
            ),
            ("1".into(), g(&[&["a3b1", "b1"], &["a3", "b1a1"]])),
        ]
    );
    assert_eq!(
        grids(&c.left_dual_tables),
        vec![
            ("3".into(), g(&[&["e2"]])),
            (
                "2".into(),
                g(&[
                    &["a3b1", "b1", "e1"],
                    &["a3", "e0", "a2"],
                    &["e3", "b2", "a2b2"]
                ])
            ),
            ("1".into(), g(&[&["a1b3", "b3"], &["a1", "b1a1"]])),
        ]
    );
    assert!(!a.frobenius.as_ref().unwrap().symmetric);
    assert_eq!(a.frobenius.as_ref().unwrap().nakayama_order, "2");
}

#[test]
fn quiver_e42_has_no_cellular_order() {
    let l = load_fixture("quiver-e42", &[], None);
    let cd = l.cells.as_ref().unwrap();
    assert!(verify_cell_datum(&l.algebra, cd).is_err());
    assert!(search_poset(&l.algebra, cd, cd.order()).is_none());
    let a = analyze(
        &l,
        &AnalysisOptions {
            search_poset: true,
            ..Default::default()
        },
    )
    .unwrap();
    let datum = a.checks.iter().find(|c| c.id == "cell-datum").unwrap();
    assert_eq!(datum.status, Status::Fail);
    assert!(a
        .checks
        .iter()
        .any(|c| c.id == "lemma-3.9" && c.status == Status::Skipped));
}

#[test]
fn quiver_e42_spaces() {
    let a = run("quiver-e42", &[], None);
    let c = a.cellular.as_ref().unwrap();
    let rel = |q: &str| {
        c.comparisons
            .iter()
            .find(|x| x.question.starts_with(q))
            .unwrap_or_else(|| panic!("{q}"))
            .relation
            .clone()
    };
    assert_eq!(rel("H_α(A) ⊆ L_α(A)"), "incomparable");
    assert_eq!(rel("L_α(A) ⊆ Z_α(A)"), "proper subspace");
    let e: Vec<_> = c.e_lambda.iter().map(|(_, x)| x.as_str()).collect();
    assert_eq!(e, ["a2b2", "a1b3 + a3b1 + b1a1", "a3b1 + b1a1"]);
}

#[test]
fn local_e43_passes_everything() {
    for (params, field) in [
        (vec![], None),
        (vec![("lambda", "-1")], None),
        (vec![("lambda", "4")], Some(Field::Prime(7))),
    ] {
        let a = run("local-e43", &params, field);
        for c in &a.checks {
            assert_eq!(c.status, Status::Pass, "{}: {:?}", c.id, c.violations);
        }
    }
}

#[test]
fn nakayama_nesbitt_u_ne_v_breaks_the_involution() {
    let l = load_fixture("nakayama-nesbitt", &[], None);
    let v = verify_cell_datum(&l.algebra, l.cells.as_ref().unwrap()).unwrap_err();
    assert!(
        v.iter()
            .any(|x| x.to_string().contains("i(C2·C3) != i(C3)·i(C2)")),
        "{v:?}"
    );
}

#[test]
fn dump_and_reload_give_identical_analysis() {
    for name in FIXTURE_NAMES {
        let l = load_fixture(name, &[], None);
        let text = to_json_pretty(&dump(&l));
        let back = AnySpec::from_json(&text)
            .unwrap()
            .load(&LoadOptions::default())
            .unwrap();
        let opts = AnalysisOptions::default();
        assert_eq!(
            render_text(&analyze(&l, &opts).unwrap()),
            render_text(&analyze(&back, &opts).unwrap()),
            "{name}"
        );
        assert_eq!(to_json_pretty(&dump(&back)), text, "{name}");
    }
}

#[test]
fn transposed_grid_reports_the_anti_automorphism() {
    // with a and b swapped the transpose exchanges a, c and b, d, which is
    // not an anti-automorphism: it sends c·b = λ·bc to d·a = bc
    let l = load_fixture("local-e43", &[], None);
    let mut spec = dump(&l);
    let part = spec
        .cells
        .as_mut()
        .unwrap()
        .parts
        .iter_mut()
        .find(|p| p.label == "2")
        .unwrap();
    part.grid = vec![vec!["b".into(), "a".into()], vec!["c".into(), "d".into()]];
    let l = spec.load(&LoadOptions::default()).unwrap();
    let v = verify_cell_datum(&l.algebra, l.cells.as_ref().unwrap()).unwrap_err();
    assert!(
        v.iter().any(|x| x.to_string().starts_with("(C2) i(c·b)")),
        "{v:?}"
    );
}

/// The files under `fixtures/` are what `frobcell fixture` writes; this
/// catches drift between them and the built-in definitions.
#[test]
fn committed_fixtures_match_builtins() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    for name in FIXTURE_NAMES {
        let spec = fixture(name).unwrap();
        let l = spec.load(&LoadOptions::default()).unwrap();
        let json = std::fs::read_to_string(dir.join(format!("{name}.json"))).unwrap();
        assert_eq!(json, to_json_pretty(&dump(&l)), "{name}.json");
        let prov = std::fs::read_to_string(dir.join(format!("{name}.provenance.txt"))).unwrap();
        assert_eq!(prov, provenance(name, &spec, &l), "{name}.provenance.txt");
    }
}

/// Read right to left, relations such as `a1b2` (`a1: e1 -> e0`,
/// `b2: e0 -> e2`) are not paths at all.
#[test]
fn quiver_e42_composition_is_left_to_right() {
    let Some(AnySpec::Quiver(mut q)) = fixture("quiver-e42") else {
        unreachable!()
    };
    q.composition = Some("right-to-left".into());
    let err = AnySpec::Quiver(q)
        .load(&LoadOptions::default())
        .unwrap_err();
    assert!(err.to_string().contains("not composable"), "{err}");
}
