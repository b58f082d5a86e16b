//! Independent reference computations, written without the library's
//! algebra machinery.

use num_rational::BigRational;
use num_traits::{One, Zero};

use frobcell::{Algebra, Element, Field, Scalar};

type Q = BigRational;
type M4 = [[Q; 4]; 4];

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

fn zero4() -> M4 {
    std::array::from_fn(|_| std::array::from_fn(|_| Q::zero()))
}

fn unit(i: usize, j: usize, c: &Q) -> M4 {
    let mut m = zero4();
    m[i][j] = c.clone();
    m
}

fn add(a: &M4, b: &M4) -> M4 {
    std::array::from_fn(|i| std::array::from_fn(|j| &a[i][j] + &b[i][j]))
}

fn mul(a: &M4, b: &M4) -> M4 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| (0..4).fold(Q::zero(), |acc, k| acc + &a[i][k] * &b[k][j]))
    })
}

/// `E14`, `E13 + u E24`, `E12 + v E34`, `E` as explicit 4×4 matrices.
pub fn nakayama_nesbitt_matrices(u: i64, v: i64) -> [M4; 4] {
    let one = Q::one();
    let id = (0..4).fold(zero4(), |m, i| add(&m, &unit(i, i, &one)));
    [
        unit(0, 3, &one),
        add(&unit(0, 2, &one), &unit(1, 3, &q(u))),
        add(&unit(0, 1, &one), &unit(2, 3, &q(v))),
        id,
    ]
}

/// Coordinates of `m` in the four matrices, read from the first row and
/// confirmed by reconstruction.
fn coordinates(basis: &[M4; 4], m: &M4) -> Option<[Q; 4]> {
    let c = [
        m[0][3].clone(),
        m[0][2].clone(),
        m[0][1].clone(),
        m[0][0].clone(),
    ];
    let rebuilt = (0..4).fold(zero4(), |acc, k| {
        let scaled: M4 = std::array::from_fn(|i| std::array::from_fn(|j| &basis[k][i][j] * &c[k]));
        add(&acc, &scaled)
    });
    (rebuilt == *m).then_some(c)
}

/// Basis pairs on which the algebra's product disagrees with matrix
/// multiplication. The algebra must be over the rationals with basis order
/// `C1..C4`.
pub fn nakayama_nesbitt_mismatches(alg: &Algebra, u: i64, v: i64) -> Vec<(usize, usize)> {
    let b = nakayama_nesbitt_matrices(u, v);
    let mut bad = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            let got = alg.mul(&alg.basis_element(i), &alg.basis_element(j));
            let want = coordinates(&b, &mul(&b[i], &b[j])).expect("products stay in the span");
            let got_q: Vec<Q> = got
                .coords()
                .iter()
                .map(|s| s.as_rational().unwrap().clone())
                .collect();
            if got_q != want {
                bad.push((i, j));
            }
        }
    }
    bad
}

/// The 36 products of the local 6-dimensional algebra, hand-entered over
/// labels `1, a, b, c, d, bc`: `bc = bc`, `cb = λ bc`, `ad = da = bc`, all
/// other products of generators and anything times `bc` vanish.
pub fn local_product(f: Field, lambda: &Scalar, x: &str, y: &str) -> Vec<(&'static str, Scalar)> {
    const LABELS: [&str; 6] = ["1", "a", "b", "c", "d", "bc"];
    let lab = |s: &str| *LABELS.iter().find(|l| **l == s).unwrap();
    match (x, y) {
        ("1", y) => vec![(lab(y), f.one())],
        (x, "1") => vec![(lab(x), f.one())],
        ("b", "c") | ("a", "d") | ("d", "a") => vec![("bc", f.one())],
        ("c", "b") => vec![("bc", lambda.clone())],
        _ => vec![],
    }
}

pub fn element(alg: &Algebra, terms: &[(&str, Scalar)]) -> Element {
    let f = alg.field();
    let mut e = alg.zero();
    for (l, c) in terms {
        let k = alg
            .index_of(l)
            .unwrap_or_else(|| panic!("no basis label {l}"));
        e.add_scaled(c, &Element::basis(f, alg.dim(), k));
    }
    e
}

/// Label pairs where the presentation-built table differs from
/// [`local_product`].
pub fn local_mismatches(alg: &Algebra, lambda: &Scalar) -> Vec<(String, String)> {
    let f = alg.field();
    let mut bad = Vec::new();
    for x in ["1", "a", "b", "c", "d", "bc"] {
        for y in ["1", "a", "b", "c", "d", "bc"] {
            let want = element(alg, &local_product(f, lambda, x, y));
            let got = alg.mul(
                &element(alg, &[(x, f.one())]),
                &element(alg, &[(y, f.one())]),
            );
            if got != want {
                bad.push((x.to_string(), y.to_string()));
            }
        }
    }
    bad
}

/// Gram matrix of `τ(bc) = 1` computed from [`local_product`], in the
/// given label order.
pub fn local_gram(f: Field, lambda: &Scalar, labels: &[String]) -> Vec<Vec<Scalar>> {
    labels
        .iter()
        .map(|x| {
            labels
                .iter()
                .map(|y| {
                    local_product(f, lambda, x, y)
                        .into_iter()
                        .find(|(l, _)| *l == "bc")
                        .map(|(_, c)| c)
                        .unwrap_or_else(|| f.zero())
                })
                .collect()
        })
        .collect()
}
