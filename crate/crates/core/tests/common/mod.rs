//! Random cellular Frobenius algebras for the property suites.
//!
//! Building blocks with known cell data (matrix algebras, truncated
//! polynomial rings, the built-in cellular fixtures) are combined by direct
//! sums and tensor products, then moved to a new cellular basis by an
//! `i`-compatible unitriangular change plus scaling. Each sample gets a
//! random nondegenerate trace form.
#![allow(dead_code)]

pub mod oracles;

use frobcell::algebra::TableEntry;
use frobcell::cellular::{verify_cell_datum, Cell, CellDatum, Poset};
use frobcell::fixtures::fixture;
use frobcell::frobenius::{dual_bases, TraceForm};
use frobcell::scalar::Bindings;
use frobcell::spec_file::{LoadOptions, Loaded};
use frobcell::{Algebra, Field, LinearMap, Matrix, Scalar};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SAMPLES: usize = 120;

#[derive(Clone)]
pub struct CellAlg {
    pub alg: Algebra,
    pub cd: CellDatum,
}

pub struct Sample {
    pub name: String,
    pub loaded: Loaded,
}

pub fn load_fixture(name: &str, params: &[(&str, &str)], field: Option<Field>) -> Loaded {
    let opts = LoadOptions {
        field,
        params: params
            .iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect(),
        max_degree: None,
    };
    fixture(name).unwrap().load(&opts).unwrap()
}

fn from_loaded(l: Loaded) -> CellAlg {
    CellAlg {
        alg: l.algebra,
        cd: l.cells.unwrap(),
    }
}

pub fn matrix_algebra(f: Field, n: usize) -> CellAlg {
    let idx = |i: usize, j: usize| i * n + j;
    let labels = (0..n * n)
        .map(|k| format!("E{}{}", k / n + 1, k % n + 1))
        .collect();
    let mut entries: Vec<TableEntry> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                entries.push((idx(i, j), idx(j, l), vec![(idx(i, l), f.one())]));
            }
        }
    }
    let mut unit = vec![f.zero(); n * n];
    for i in 0..n {
        unit[idx(i, i)] = f.one();
    }
    let alg = Algebra::new(f, labels, entries, unit).unwrap();
    let cell = Cell {
        label: format!("M{n}"),
        m: (1..=n).map(|s| s.to_string()).collect(),
        grid: (0..n)
            .map(|s| (0..n).map(|t| idx(s, t)).collect())
            .collect(),
    };
    let i = CellDatum::grid_transpose(f, n * n, std::slice::from_ref(&cell));
    let cd = CellDatum::new(
        n * n,
        vec![cell],
        Poset::antichain(vec![format!("M{n}")]),
        i,
    )
    .unwrap();
    CellAlg { alg, cd }
}

/// `K[x]/(x^m)` with cells `{x^k}` ordered `x^{m-1} < … < 1`.
pub fn truncated_poly(f: Field, m: usize) -> CellAlg {
    let labels: Vec<String> = (0..m)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x{k}"),
        })
        .collect();
    let mut entries: Vec<TableEntry> = Vec::new();
    for a in 0..m {
        for b in 0..m {
            if a + b < m {
                entries.push((a, b, vec![(a + b, f.one())]));
            }
        }
    }
    let mut unit = vec![f.zero(); m];
    unit[0] = f.one();
    let alg = Algebra::new(f, labels.clone(), entries, unit).unwrap();
    let cells: Vec<Cell> = (0..m)
        .map(|k| Cell {
            label: labels[k].clone(),
            m: vec!["*".into()],
            grid: vec![vec![k]],
        })
        .collect();
    let pairs: Vec<(usize, usize)> = (1..m).map(|k| (k, k - 1)).collect();
    let order = Poset::from_relations(labels, &pairs).unwrap();
    let i = CellDatum::grid_transpose(f, m, &cells);
    let cd = CellDatum::new(m, cells, order, i).unwrap();
    CellAlg { alg, cd }
}

fn embed(m: &Matrix, offset: usize, into: &mut Matrix) {
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            into.set(r + offset, c + offset, m.get(r, c).clone());
        }
    }
}

fn poset_pairs(p: &Poset, offset: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..p.len() {
        for b in 0..p.len() {
            if p.lt(a, b) {
                out.push((a + offset, b + offset));
            }
        }
    }
    out
}

pub fn direct_sum(x: &CellAlg, y: &CellAlg) -> CellAlg {
    let f = x.alg.field();
    let (n, m) = (x.alg.dim(), y.alg.dim());
    let mut labels: Vec<String> = x.alg.labels().iter().map(|l| format!("{l}⊕")).collect();
    labels.extend(y.alg.labels().iter().map(|l| format!("⊕{l}")));
    let mut entries: Vec<TableEntry> = Vec::new();
    for (i, j, t) in x.alg.entries() {
        entries.push((i, j, t.to_vec()));
    }
    for (i, j, t) in y.alg.entries() {
        entries.push((
            i + n,
            j + n,
            t.iter().map(|(k, c)| (k + n, c.clone())).collect(),
        ));
    }
    let mut unit = x.alg.unit().coords().to_vec();
    unit.extend(y.alg.unit().coords().iter().cloned());
    let alg = Algebra::new(f, labels, entries, unit).unwrap();

    let mut cells: Vec<Cell> =
        x.cd.cells()
            .iter()
            .map(|c| Cell {
                label: format!("{}⊕", c.label),
                ..c.clone()
            })
            .collect();
    cells.extend(y.cd.cells().iter().map(|c| {
        Cell {
            label: format!("⊕{}", c.label),
            m: c.m.clone(),
            grid: c
                .grid
                .iter()
                .map(|r| r.iter().map(|k| k + n).collect())
                .collect(),
        }
    }));
    let mut pairs = poset_pairs(x.cd.order(), 0);
    pairs.extend(poset_pairs(y.cd.order(), x.cd.num_cells()));
    let order =
        Poset::from_relations(cells.iter().map(|c| c.label.clone()).collect(), &pairs).unwrap();
    let mut im = Matrix::zeros(f, n + m, n + m);
    embed(x.cd.involution().matrix(), 0, &mut im);
    embed(y.cd.involution().matrix(), n, &mut im);
    let cd = CellDatum::new(n + m, cells, order, LinearMap::from_matrix(im)).unwrap();
    CellAlg { alg, cd }
}

pub fn tensor(x: &CellAlg, y: &CellAlg) -> CellAlg {
    let f = x.alg.field();
    let (n, m) = (x.alg.dim(), y.alg.dim());
    let idx = |a: usize, b: usize| a * m + b;
    let mut labels = Vec::new();
    for a in x.alg.labels() {
        for b in y.alg.labels() {
            labels.push(format!("{a}⊗{b}"));
        }
    }
    let mut entries: Vec<TableEntry> = Vec::new();
    for (i, j, s) in x.alg.entries() {
        for (k, l, t) in y.alg.entries() {
            let mut terms = Vec::new();
            for (p, c) in s {
                for (q, d) in t {
                    terms.push((idx(*p, *q), c * d));
                }
            }
            entries.push((idx(i, k), idx(j, l), terms));
        }
    }
    let mut unit = vec![f.zero(); n * m];
    for (a, c) in x.alg.unit().coords().iter().enumerate() {
        for (b, d) in y.alg.unit().coords().iter().enumerate() {
            unit[idx(a, b)] = c * d;
        }
    }
    let alg = Algebra::new(f, labels, entries, unit).unwrap();

    let nc = y.cd.num_cells();
    let mut cells = Vec::new();
    for cx in x.cd.cells() {
        for cy in y.cd.cells() {
            let (p, q) = (cx.size(), cy.size());
            let mut ms = Vec::new();
            for s in &cx.m {
                for t in &cy.m {
                    ms.push(format!("{s}{t}"));
                }
            }
            let grid = (0..p * q)
                .map(|r| {
                    (0..p * q)
                        .map(|c| idx(cx.grid[r / q][c / q], cy.grid[r % q][c % q]))
                        .collect()
                })
                .collect();
            cells.push(Cell {
                label: format!("{}⊗{}", cx.label, cy.label),
                m: ms,
                grid,
            });
        }
    }
    let (px, py) = (x.cd.order(), y.cd.order());
    let mut pairs = Vec::new();
    for a in 0..cells.len() {
        for b in 0..cells.len() {
            let (a1, a2, b1, b2) = (a / nc, a % nc, b / nc, b % nc);
            if a != b && px.le(a1, b1) && py.le(a2, b2) {
                pairs.push((a, b));
            }
        }
    }
    let order =
        Poset::from_relations(cells.iter().map(|c| c.label.clone()).collect(), &pairs).unwrap();
    let (ix, iy) = (x.cd.involution().matrix(), y.cd.involution().matrix());
    let mut im = Matrix::zeros(f, n * m, n * m);
    for r1 in 0..n {
        for c1 in 0..n {
            if ix.get(r1, c1).is_zero() {
                continue;
            }
            for r2 in 0..m {
                for c2 in 0..m {
                    im.set(idx(r1, r2), idx(c1, c2), ix.get(r1, c1) * iy.get(r2, c2));
                }
            }
        }
    }
    let cd = CellDatum::new(n * m, cells, order, LinearMap::from_matrix(im)).unwrap();
    CellAlg { alg, cd }
}

pub fn small_scalar(f: Field, rng: &mut ChaCha8Rng, nonzero: bool) -> Scalar {
    loop {
        let v = f.from_i64(rng.gen_range(-3..=3));
        if !(nonzero && v.is_zero()) {
            return v;
        }
    }
}

/// New cellular basis `c_S c_T (C_{S,T} + y_{S,T})` with `y` in lower cells
/// and `y_{T,S} = i(y_{S,T})`.
pub fn perturb(x: &CellAlg, rng: &mut ChaCha8Rng) -> CellAlg {
    let f = x.alg.field();
    let n = x.alg.dim();
    let cd = &x.cd;
    let i = cd.involution();
    let mut cols: Vec<Vec<Scalar>> = vec![Vec::new(); n];
    for (ci, cell) in cd.cells().iter().enumerate() {
        let lower: Vec<usize> = (0..n)
            .filter(|&k| cd.order().lt(cd.position(k).cell, ci))
            .collect();
        let scale: Vec<Scalar> = (0..cell.size())
            .map(|_| small_scalar(f, rng, true))
            .collect();
        for s in 0..cell.size() {
            for t in s..cell.size() {
                let mut y = x.alg.zero();
                for &k in &lower {
                    if rng.gen_bool(0.4) {
                        y.add_scaled(&small_scalar(f, rng, false), &x.alg.basis_element(k));
                    }
                }
                let iy = i.apply(&y);
                let c = &scale[s] * &scale[t];
                let (ks, kt) = (cd.index(ci, s, t), cd.index(ci, t, s));
                let mut v = x.alg.basis_element(ks).add(&y);
                if s == t {
                    v = v.add(&iy);
                }
                cols[ks] = v.scale(&c).into_coords();
                if s != t {
                    cols[kt] = x.alg.basis_element(kt).add(&iy).scale(&c).into_coords();
                }
            }
        }
    }
    let p = Matrix::from_columns(f, n, &cols);
    let labels = (0..n).map(|k| format!("{}'", x.alg.label(k))).collect();
    let alg = x.alg.change_basis(&p, labels).unwrap();
    let inv = i.in_basis(&p).unwrap();
    CellAlg {
        alg,
        cd: cd.with_involution(inv),
    }
}

pub fn random_trace(alg: &Algebra, rng: &mut ChaCha8Rng) -> TraceForm {
    loop {
        let t = TraceForm::new(
            (0..alg.dim())
                .map(|_| small_scalar(alg.field(), rng, false))
                .collect(),
        );
        if dual_bases(alg, &t).is_ok() {
            return t;
        }
    }
}

fn base(f: Field, rng: &mut ChaCha8Rng) -> (String, CellAlg) {
    let lam = loop {
        let v = small_scalar(f, rng, true);
        if !v.is_one() {
            break v;
        }
    };
    match rng.gen_range(0..6) {
        0 => {
            let n = rng.gen_range(1..=3);
            (format!("M{n}"), matrix_algebra(f, n))
        }
        1 => {
            let m = rng.gen_range(2..=4);
            (format!("K[x]/x^{m}"), truncated_poly(f, m))
        }
        2 => (
            format!("local({lam})"),
            from_loaded(load_fixture(
                "local-e43",
                &[("lambda", &lam.to_string())],
                Some(f),
            )),
        ),
        3 => {
            let u = small_scalar(f, rng, true).to_string();
            (
                format!("nn({u},{u})"),
                from_loaded(load_fixture(
                    "nakayama-nesbitt",
                    &[("u", &u), ("v", &u)],
                    Some(f),
                )),
            )
        }
        4 => (
            "C2".into(),
            from_loaded(load_fixture("group-c2", &[], Some(f))),
        ),
        _ => ("M2".into(), matrix_algebra(f, 2)),
    }
}

/// One random cellular Frobenius algebra with a verified cell datum.
pub fn sample(seed: u64) -> Sample {
    let fields = [
        Field::Rational,
        Field::Rational,
        Field::Prime(5),
        Field::Prime(7),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f = *fields.choose(&mut rng).unwrap();
    let (mut name, mut ca) = base(f, &mut rng);
    match rng.gen_range(0..4) {
        0 => {
            let (n2, b) = base(f, &mut rng);
            if ca.alg.dim() + b.alg.dim() <= 16 {
                ca = direct_sum(&ca, &b);
                name = format!("{name} ⊕ {n2}");
            }
        }
        1 => {
            let (n2, b) = base(f, &mut rng);
            if ca.alg.dim() * b.alg.dim() <= 16 {
                ca = tensor(&ca, &b);
                name = format!("{name} ⊗ {n2}");
            }
        }
        _ => {}
    }
    if rng.gen_bool(0.7) {
        ca = perturb(&ca, &mut rng);
        name.push_str(" (rebased)");
    }
    if let Err(v) = verify_cell_datum(&ca.alg, &ca.cd) {
        panic!(
            "generator produced an invalid datum for {name} (seed {seed}): {}",
            v[0]
        );
    }
    let trace = random_trace(&ca.alg, &mut rng);
    Sample {
        name: format!("#{seed} {name} over {f}"),
        loaded: Loaded {
            bindings: Bindings::new(f),
            constraints: Default::default(),
            trace: Some(trace),
            cells: Some(ca.cd),
            algebra: ca.alg,
        },
    }
}

/// Deterministic list of samples for seeds `1..=count`.
pub fn samples(count: usize) -> Vec<Sample> {
    (1..=count as u64).map(sample).collect()
}
