mod common;

use frobcell::analysis::{analyze, AnalysisOptions};
use frobcell::cellular::{cellularity_of_duals, dual_cell_tables};
use frobcell::frobenius::dual_bases;
use frobcell::linalg::solve_linear;
use frobcell::report::Status;
use frobcell::{Field, Matrix, Scalar, Subspace};
use proptest::prelude::*;

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::Rational),
        Just(Field::Prime(2)),
        Just(Field::Prime(7)),
        Just(Field::Prime(1_000_000_007)),
    ]
}

fn scalar(f: Field) -> impl Strategy<Value = Scalar> {
    (-40i64..40, 1i64..9).prop_map(move |(n, d)| {
        f.from_i64(n)
            .checked_div(&f.from_i64(d))
            .unwrap_or_else(|_| f.from_i64(n))
    })
}

fn matrix(f: Field, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(scalar(f), rows * cols)
        .prop_map(move |v| Matrix::from_rows(f, cols, v.chunks(cols).map(|c| c.to_vec()).collect()))
}

fn field_and_matrix() -> impl Strategy<Value = (Field, Matrix)> {
    (field(), 1usize..6, 1usize..6).prop_flat_map(|(f, r, c)| (Just(f), matrix(f, r, c)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms((f, xs) in field().prop_flat_map(|f| (Just(f), proptest::collection::vec(scalar(f), 3)))) {
        let (a, b, c) = (&xs[0], &xs[1], &xs[2]);
        prop_assert_eq!(&(a + b) + c, a + &(b + c));
        prop_assert_eq!(&(a * b) * c, a * &(b * c));
        prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!(a - a, f.zero());
        if !a.is_zero() {
            prop_assert!((a * &a.inv().unwrap()).is_one());
        } else {
            prop_assert!(a.inv().is_err());
        }
    }

    #[test]
    fn scalar_display_parses_back((f, x) in field().prop_flat_map(|f| (Just(f), scalar(f)))) {
        prop_assert_eq!(f.parse(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn rref_is_canonical((_f, m) in field_and_matrix()) {
        let (r, pivots) = m.rref();
        let (r2, pivots2) = r.rref();
        prop_assert_eq!(&r, &r2);
        prop_assert_eq!(&pivots, &pivots2);
        prop_assert_eq!(m.rank(), m.transpose().rank());
        let ns = m.nullspace();
        prop_assert_eq!(ns.dim() + m.rank(), m.cols());
        for v in ns.basis() {
            prop_assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn solve_inverts((_f, a, b) in (field(), 1usize..5).prop_flat_map(|(f, n)| (Just(f), matrix(f, n, n), matrix(f, n, 2)))) {
        match solve_linear(&a, &b) {
            Ok(x) => prop_assert_eq!(a.mul(&x), b),
            Err(_) => prop_assert!(a.rank() < a.rows()),
        }
        if a.rank() == a.rows() {
            prop_assert!(a.mul(&a.inverse().unwrap()).is_identity());
        }
    }

    #[test]
    fn subspace_dimension_formula((f, m1, m2) in field().prop_flat_map(|f| (Just(f), matrix(f, 3, 5), matrix(f, 3, 5)))) {
        let s = Subspace::span(f, 5, &m1.row_vectors());
        let t = Subspace::span(f, 5, &m2.row_vectors());
        let sum = s.sum(&t);
        let cap = s.intersection(&t);
        prop_assert_eq!(sum.dim() + cap.dim(), s.dim() + t.dim());
        prop_assert!(cap.is_subspace_of(&s) && cap.is_subspace_of(&t));
        prop_assert!(s.is_subspace_of(&sum) && t.is_subspace_of(&sum));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn random_algebras_are_associative_frobenius_and_cellular(seed in 1000u64..100_000) {
        let s = common::sample(seed);
        let alg = &s.loaded.algebra;
        prop_assert!(alg.verify().is_empty(), "{}", s.name);
        let dd = dual_bases(alg, s.loaded.trace.as_ref().unwrap()).unwrap();
        prop_assert!(dd.nakayama.is_automorphism(alg));
        let a = analyze(&s.loaded, &AnalysisOptions::default()).unwrap();
        for c in &a.checks {
            prop_assert_eq!(c.status, Status::Pass, "{}: {} {:?}", s.name, c.id, c.violations);
        }
    }

    #[test]
    fn cellular_duals_force_symmetry(seed in 1000u64..100_000) {
        let s = common::sample(seed);
        let alg = &s.loaded.algebra;
        let cd = s.loaded.cells.as_ref().unwrap();
        let tau = s.loaded.trace.as_ref().unwrap();
        let dd = dual_bases(alg, tau).unwrap();
        let duals = dual_cell_tables(alg, cd, &dd).unwrap();
        let dc = cellularity_of_duals(alg, cd, &dd, tau, &duals);
        if dc.p_d || dc.p_big_d {
            prop_assert!(dd.gram == dd.gram.transpose(), "{}", s.name);
        }
    }
}

/// A symmetric trace on a cellular algebra with `τ∘i = τ`: the duals are then
/// `i`-symmetric and cellular for the opposite order.
#[test]
fn symmetric_invariant_trace_gives_cellular_duals() {
    let l = common::load_fixture("matrix-2x2", &[], None);
    let (alg, cd, tau) = (
        &l.algebra,
        l.cells.as_ref().unwrap(),
        l.trace.as_ref().unwrap(),
    );
    let dd = dual_bases(alg, tau).unwrap();
    let duals = dual_cell_tables(alg, cd, &dd).unwrap();
    let dc = cellularity_of_duals(alg, cd, &dd, tau, &duals);
    assert!(dc.p_d && dc.p_big_d && dc.p_tau && dc.p_sym);
    assert_eq!(dc.d_cellular_opposite, Some(true));
    assert_eq!(dc.big_d_cellular_opposite, Some(true));
}
