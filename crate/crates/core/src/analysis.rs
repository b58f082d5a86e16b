//! The full analysis pipeline behind `report` and `verify`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{Algebra, Element};
use crate::cellular::{
    alpha_commutes_with_involution, cellularity_of_duals, dual_cell_tables, e_lambda,
    e_prime_diagonal, e_prime_lambda, forced_order, l_alpha, l_alpha_prime, l_alpha_prime_diagonal,
    lambda_zero, search_poset, verify_cell_datum, verify_lemma_3_2, verify_lemma_3_9,
    verify_prop_3_11, z_lambda_ideals, CellDatum, CellDuals, CellStructureConstants,
};
use crate::centers::{center_report, verify_section2_lemmas, CenterReport};
use crate::frobenius::{dual_bases, verify_lemma_2_3, DualData, FrobeniusError, TraceForm};
use crate::linalg::{Matrix, Subspace};
use crate::report::{Check, Status};
use crate::spec_file::Loaded;

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error("the input declares no trace form")]
    NoTrace,
    #[error(transparent)]
    Frobenius(#[from] FrobeniusError),
}

#[derive(Debug, Clone)]
pub struct AnalysisOptions {
    /// Replace the given order by the least order that the products force.
    pub search_poset: bool,
    /// Largest `m` tried when probing `α^m = id`.
    pub nakayama_bound: u32,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            search_poset: false,
            nakayama_bound: 24,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Space {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Comparison {
    pub question: String,
    pub left: String,
    pub left_dim: usize,
    pub right: String,
    pub right_dim: usize,
    /// One of `equal`, `proper subspace`, `proper superspace`, `incomparable`.
    pub relation: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct FrobeniusSection {
    pub gram: Vec<Vec<String>>,
    pub gram_rank: usize,
    pub symmetric: bool,
    /// `(a_i, d_i)`
    pub right_duals: Vec<(String, String)>,
    /// `(a_i, D_i)`
    pub left_duals: Vec<(String, String)>,
    /// Columns are images of basis elements.
    pub nakayama: Vec<Vec<String>>,
    pub nakayama_right_dual_basis: Vec<Vec<String>>,
    pub nakayama_order: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CellTable {
    pub cell: String,
    pub m: Vec<String>,
    pub grid: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CellularSection {
    pub order: String,
    /// `given`, `search`, or `given (search failed)`.
    pub order_source: String,
    pub cellular: bool,
    pub lambda_zero: Option<Vec<String>>,
    pub cells: Vec<CellTable>,
    /// Right dual of the entry at each grid position.
    pub right_dual_tables: Vec<CellTable>,
    /// Left dual of the entry at each grid position.
    pub left_dual_tables: Vec<CellTable>,
    /// Matrix of `α` in the right dual basis listed in cell-reading order.
    pub nakayama_cell_right_dual_basis: Vec<Vec<String>>,
    pub e_lambda: Vec<(String, String)>,
    pub e_prime_lambda: Vec<(String, String)>,
    pub e_prime_diagonal: Vec<(String, String)>,
    pub spaces: Vec<Space>,
    pub comparisons: Vec<Comparison>,
    pub dual_symmetry: BTreeMap<String, bool>,
    pub iota_alpha_commute: bool,
    pub alpha_basis_cellular: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Analysis {
    pub field: String,
    pub params: BTreeMap<String, String>,
    pub dim: usize,
    pub basis: Vec<String>,
    pub frobenius: Option<FrobeniusSection>,
    pub spaces: Vec<Space>,
    pub open_questions: Vec<Comparison>,
    pub cellular: Option<CellularSection>,
    pub checks: Vec<Check>,
}

impl Analysis {
    pub fn selected<'a>(&'a self, selector: &'a str) -> impl Iterator<Item = &'a Check> + 'a {
        self.checks.iter().filter(move |c| c.selected_by(selector))
    }
}

fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(|s| s.to_string()).collect())
        .collect()
}

fn space(alg: &Algebra, name: &str, s: &Subspace) -> Space {
    Space {
        name: name.into(),
        dim: s.dim(),
        basis: alg.format_subspace(s),
    }
}

fn compare(question: &str, left: (&str, &Subspace), right: (&str, &Subspace)) -> Comparison {
    let (a, b) = (left.1, right.1);
    let relation = match (a.is_subspace_of(b), b.is_subspace_of(a)) {
        (true, true) => "equal",
        (true, false) => "proper subspace",
        (false, true) => "proper superspace",
        (false, false) => "incomparable",
    };
    Comparison {
        question: question.into(),
        left: left.0.into(),
        left_dim: a.dim(),
        right: right.0.into(),
        right_dim: b.dim(),
        relation: relation.into(),
    }
}

/// `τ(a_i a_j) = τ(α(a_j) a_i)` for all basis pairs.
fn nakayama_identity(alg: &Algebra, tau: &TraceForm, dd: &DualData) -> Vec<String> {
    let n = alg.dim();
    let mut out = Vec::new();
    for i in 0..n {
        let ai = alg.basis_element(i);
        for j in 0..n {
            let aj = alg.basis_element(j);
            let lhs = tau.eval(&alg.mul(&ai, &aj));
            let rhs = tau.eval(&alg.mul(&dd.nakayama.apply(&aj), &ai));
            if lhs != rhs {
                out.push(format!(
                    "τ({}·{}) = {lhs} but τ(α({})·{}) = {rhs}",
                    alg.label(i),
                    alg.label(j),
                    alg.label(j),
                    alg.label(i)
                ));
            }
        }
    }
    out
}

pub fn analyze(loaded: &Loaded, opts: &AnalysisOptions) -> Result<Analysis, AnalysisError> {
    let alg = &loaded.algebra;
    let mut out = Analysis {
        field: alg.field().to_string(),
        params: loaded
            .bindings
            .bindings()
            .into_iter()
            .map(|b| (b.name, b.value.to_string()))
            .collect(),
        dim: alg.dim(),
        basis: alg.labels().to_vec(),
        frobenius: None,
        spaces: Vec::new(),
        open_questions: Vec::new(),
        cellular: None,
        checks: Vec::new(),
    };
    let axioms: Vec<String> = alg.verify().iter().map(|v| v.to_string()).collect();
    let associative = axioms.is_empty();
    out.checks.push(Check::from_violations(
        "algebra",
        "algebra-axioms",
        "associativity and unit laws on all basis triples",
        axioms,
    ));
    if !associative {
        return Ok(out);
    }
    let tau = loaded.trace.as_ref().ok_or(AnalysisError::NoTrace)?;
    let dd = dual_bases(alg, tau)?;

    let symmetric = dd.is_symmetric();
    out.frobenius = Some(FrobeniusSection {
        gram: matrix_strings(&dd.gram),
        gram_rank: dd.gram.rank(),
        symmetric,
        right_duals: (0..alg.dim())
            .map(|j| {
                (
                    alg.label(j).to_string(),
                    alg.format_element(&dd.right_dual(j)),
                )
            })
            .collect(),
        left_duals: (0..alg.dim())
            .map(|j| {
                (
                    alg.label(j).to_string(),
                    alg.format_element(&dd.left_dual(j)),
                )
            })
            .collect(),
        nakayama: matrix_strings(dd.nakayama.matrix()),
        nakayama_right_dual_basis: matrix_strings(&dd.nakayama_in_right_dual_basis()),
        nakayama_order: dd.nakayama_order(opts.nakayama_bound).to_string(),
    });

    out.checks.push(Check::from_violations(
        "section2",
        "lemma-2.2",
        "τ(a b) = τ(α(b) a) for all basis pairs",
        nakayama_identity(alg, tau, &dd),
    ));
    out.checks.push(Check::from_violations(
        "section2",
        "lemma-2.3",
        "a_i d_j = Σ_k r_kij d_k and D_i a_j = Σ_k r_jki D_k",
        verify_lemma_2_3(alg, &dd),
    ));
    let rep = center_report(alg, &dd);
    out.checks.extend(verify_section2_lemmas(alg, &dd, &rep));
    let h = &rep.higman;
    out.spaces = vec![
        space(alg, "Z(A)", &rep.center),
        space(alg, "Z_α(A)", &rep.twisted_alpha),
        space(alg, "Z_{α⁻¹}(A)", &rep.twisted_alpha_inv),
        space(alg, "H(A)", &h.higman),
        space(alg, "H_α(A)", &h.higman_alpha),
        space(alg, "H_{α⁻¹}(A)", &h.higman_alpha_inv),
    ];
    out.open_questions.push(compare(
        "when does H_α(A) = Z_α(A)?",
        ("H_α(A)", &h.higman_alpha),
        ("Z_α(A)", &rep.twisted_alpha),
    ));

    if let Some(cd) = &loaded.cells {
        let section = cellular_section(alg, cd, tau, &dd, &rep, opts, &mut out);
        out.cellular = Some(section);
    }
    Ok(out)
}

const S3: &str = "section3";

fn skipped(id: &str, description: &str) -> Check {
    Check::skipped(S3, id, description, "requires a valid cell datum")
}

fn cellular_section(
    alg: &Algebra,
    given: &CellDatum,
    tau: &TraceForm,
    dd: &DualData,
    rep: &CenterReport,
    opts: &AnalysisOptions,
    out: &mut Analysis,
) -> CellularSection {
    let direct = verify_cell_datum(alg, given);
    let (cd, csc, source, violations): (
        CellDatum,
        Option<CellStructureConstants>,
        &str,
        Vec<String>,
    ) = match direct {
        Ok(csc) if !opts.search_poset => (given.clone(), Some(csc), "given", vec![]),
        direct => {
            if opts.search_poset {
                match search_poset(alg, given, given.order()) {
                    Some((order, csc)) => (given.with_order(order), Some(csc), "search", vec![]),
                    None => {
                        let mut v: Vec<String> = direct
                            .err()
                            .unwrap_or_default()
                            .iter()
                            .map(|x| x.to_string())
                            .collect();
                        let forced = match forced_order(alg, given, given.order()) {
                            Ok(o) => format!("the least forced order {} fails", o.describe()),
                            Err(e) => format!("the forced relations are inconsistent: {e}"),
                        };
                        v.insert(
                            0,
                            format!(
                                "no order extending the given one satisfies the axioms; {forced}"
                            ),
                        );
                        (given.clone(), None, "given (search failed)", v)
                    }
                }
            } else {
                let v = direct.unwrap_err().iter().map(|x| x.to_string()).collect();
                (given.clone(), None, "given", v)
            }
        }
    };
    let cellular = csc.is_some();
    out.checks.push(
        Check::from_violations(
            S3,
            "cell-datum",
            "cell datum axioms C1, C2, C3, C3'",
            violations,
        )
        .with_note(format!("order ({source}): {}", cd.order().describe())),
    );

    let n = alg.dim();
    let labels = alg.labels();
    let duals: CellDuals = match dual_cell_tables(alg, &cd, dd) {
        Ok(d) => {
            out.checks.push(Check::from_violations(
                S3,
                "duals",
                "τ(D_{U,V} C_{S,T}) and τ(C_{S,T} d_{U,V}) are δ-conditions; d and D share product constants",
                vec![],
            ));
            d
        }
        Err(v) => {
            // cannot happen for a nondegenerate form; keep reporting what we can
            out.checks.push(Check::from_violations(
                S3,
                "duals",
                "dual basis δ-conditions",
                v,
            ));
            dual_cell_tables_unchecked(alg, &cd, dd)
        }
    };

    let table = |f: &dyn Fn(usize) -> String| -> Vec<CellTable> {
        cd.cells()
            .iter()
            .enumerate()
            .map(|(ci, c)| CellTable {
                cell: c.label.clone(),
                m: c.m.clone(),
                grid: (0..c.size())
                    .map(|s| (0..c.size()).map(|t| f(cd.index(ci, s, t))).collect())
                    .collect(),
            })
            .collect()
    };
    let cells = table(&|k| labels[k].clone());
    let right_dual_tables = table(&|k| alg.format_element(&dd.right_dual(k)));
    let left_dual_tables = table(&|k| alg.format_element(&dd.left_dual(k)));

    let reading: Vec<usize> = cd
        .cells()
        .iter()
        .flat_map(|c| c.grid.iter().flatten().copied())
        .collect();
    let cols: Vec<_> = reading
        .iter()
        .map(|&k| dd.right_dual(k).into_coords())
        .collect();
    let p = Matrix::from_columns(alg.field(), n, &cols);
    let alpha_cells = dd.nakayama.in_basis(&p).expect("right duals form a basis");

    let per_cell = |f: &dyn Fn(usize) -> Element| -> Vec<(String, String)> {
        (0..cd.num_cells())
            .map(|ci| (cd.cell(ci).label.clone(), alg.format_element(&f(ci))))
            .collect()
    };
    let e_l = per_cell(&|ci| e_lambda(alg, &cd, &duals, ci, 0));
    let e_p = per_cell(&|ci| e_prime_lambda(alg, &cd, &duals, ci, 0));
    let e_d = per_cell(&|ci| e_prime_diagonal(alg, &cd, &duals, ci));

    let la = l_alpha(alg, &cd, &duals);
    let lp = l_alpha_prime(alg, &cd, &duals);
    let lpd = l_alpha_prime_diagonal(alg, &cd, &duals);
    let zl = z_lambda_ideals(alg, &cd, &duals, rep);
    let z_big_lambda = zl
        .iter()
        .fold(Subspace::zero(alg.field(), n), |acc, z| acc.sum(&z.space));
    let h = &rep.higman;
    let mut spaces = vec![
        space(alg, "L_α(A)", &la),
        space(alg, "L_α(A)' (T first)", &lp),
        space(alg, "L_α(A)' (diagonal)", &lpd),
    ];
    for z in &zl {
        spaces.push(space(
            alg,
            &format!("Z_λ(A), λ = {}", cd.cell(z.cell).label),
            &z.space,
        ));
    }
    spaces.push(space(alg, "Z_Λ(A) = Σ_λ Z_λ(A)", &z_big_lambda));
    let comparisons = vec![
        compare(
            "H_α(A) ⊆ L_α(A)?",
            ("H_α(A)", &h.higman_alpha),
            ("L_α(A)", &la),
        ),
        compare(
            "L_α(A) ⊆ Z_α(A)?",
            ("L_α(A)", &la),
            ("Z_α(A)", &rep.twisted_alpha),
        ),
        compare(
            "L_α(A)' versus L_α(A)",
            ("L_α(A)' (T first)", &lp),
            ("L_α(A)", &la),
        ),
        compare(
            "L_α(A)' versus L_α(A)",
            ("L_α(A)' (diagonal)", &lpd),
            ("L_α(A)", &la),
        ),
    ];
    out.open_questions.push(compare(
        "how are Z_Λ(A) and H(A) related?",
        ("Z_Λ(A)", &z_big_lambda),
        ("H(A)", &h.higman),
    ));

    let dc = cellularity_of_duals(alg, &cd, dd, tau, &duals);
    let (commute, alpha_cellular) = alpha_commutes_with_involution(alg, &cd, dd);
    let mut dual_symmetry = BTreeMap::new();
    dual_symmetry.insert("i(d_{S,T}) = d_{T,S}".to_string(), dc.p_d);
    dual_symmetry.insert("i(D_{S,T}) = D_{T,S}".to_string(), dc.p_big_d);
    dual_symmetry.insert("τ∘i = τ".to_string(), dc.p_tau);
    dual_symmetry.insert("symmetric".to_string(), dc.p_sym);
    if let Some(b) = dc.d_cellular_opposite {
        dual_symmetry.insert("d cellular for the opposite order".to_string(), b);
    }
    if let Some(b) = dc.big_d_cellular_opposite {
        dual_symmetry.insert("D cellular for the opposite order".to_string(), b);
    }

    let mut lambda0 = None;
    match &csc {
        Some(csc) => {
            let l0 = lambda_zero(csc);
            out.checks.push(Check::from_violations(
                S3,
                "lemma-3.2",
                "the twelve dual-basis product identities",
                verify_lemma_3_2(alg, &cd, dd, csc, &duals),
            ));
            out.checks.push(Check::from_violations(
                S3,
                "lemma-3.4",
                "given one of: i-symmetric duals, symmetry, τ∘i = τ, the other two are equivalent",
                dc.equivalence_violations.clone(),
            ));
            out.checks.push(Check::from_violations(
                S3,
                "lemma-3.6",
                "i(D_{S,T}) = D_{T,S} for all S,T implies τ∘i = τ",
                dc.tau_violations.clone(),
            ));
            out.checks.push(Check::from_violations(
                S3,
                "thm-3.7",
                "a cellular dual basis forces symmetry and is cellular for the opposite order",
                dc.symmetry_violations.clone(),
            ));
            out.checks.push(Check::from_violations(
                S3,
                "lemma-3.9",
                "e_λ independent of T; H_α ⊆ L_α ⊆ Z_α; dim L_α ≥ |Λ₀|",
                verify_lemma_3_9(alg, &cd, dd, &duals, rep, &l0),
            ));
            out.checks.push(Check::from_violations(
                S3,
                "prop-3.11",
                "Z_λ(A) are ideals of Z(A) with Z_λ Z_μ = 0 for λ ≠ μ",
                verify_prop_3_11(alg, &cd, &duals, rep, &zl),
            ));
            out.checks.push(Check::from_violations(
                S3,
                "iota-alpha",
                "{α(C_{S,T})} is cellular for the same order and i iff iα = αi",
                if commute == alpha_cellular {
                    vec![]
                } else {
                    vec![format!(
                        "iα = αi is {commute} but the α-image basis cellular is {alpha_cellular}"
                    )]
                },
            ));
            lambda0 = Some(l0.iter().map(|&c| cd.cell(c).label.clone()).collect());
        }
        None => {
            for (id, desc) in [
                ("lemma-3.2", "the twelve dual-basis product identities"),
                ("lemma-3.4", "dual-basis symmetry equivalences"),
                ("lemma-3.6", "i-symmetric left duals imply τ∘i = τ"),
                ("thm-3.7", "a cellular dual basis forces symmetry"),
                ("lemma-3.9", "H_α ⊆ L_α ⊆ Z_α and dim L_α ≥ |Λ₀|"),
                ("prop-3.11", "the central ideals Z_λ(A)"),
                ("iota-alpha", "{α(C_{S,T})} cellular iff iα = αi"),
            ] {
                out.checks.push(skipped(id, desc));
            }
        }
    }

    CellularSection {
        order: cd.order().describe(),
        order_source: source.into(),
        cellular,
        lambda_zero: lambda0,
        cells,
        right_dual_tables,
        left_dual_tables,
        nakayama_cell_right_dual_basis: matrix_strings(alpha_cells.matrix()),
        e_lambda: e_l,
        e_prime_lambda: e_p,
        e_prime_diagonal: e_d,
        spaces,
        comparisons,
        dual_symmetry,
        iota_alpha_commute: commute,
        alpha_basis_cellular: alpha_cellular,
    }
}

fn dual_cell_tables_unchecked(alg: &Algebra, cd: &CellDatum, dd: &DualData) -> CellDuals {
    let n = alg.dim();
    CellDuals {
        d: (0..n)
            .map(|k| dd.right_dual(cd.transpose_index(k)))
            .collect(),
        big_d: (0..n)
            .map(|k| dd.left_dual(cd.transpose_index(k)))
            .collect(),
        rr: Vec::new(),
    }
}

fn write_matrix(s: &mut String, m: &[Vec<String>]) {
    let width = m
        .iter()
        .flatten()
        .map(|x| x.chars().count())
        .max()
        .unwrap_or(1);
    for row in m {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
        let _ = writeln!(s, "    [ {} ]", cells.join("  "));
    }
}

fn write_spaces(s: &mut String, spaces: &[Space]) {
    for sp in spaces {
        let _ = writeln!(s, "  {} : dim {}", sp.name, sp.dim);
        for b in &sp.basis {
            let _ = writeln!(s, "      {b}");
        }
    }
}

fn write_comparisons(s: &mut String, cs: &[Comparison]) {
    for c in cs {
        let rel = match c.relation.as_str() {
            "equal" => "=",
            "proper subspace" => "⊊",
            "proper superspace" => "⊋",
            _ => "incomparable with",
        };
        let _ = writeln!(
            s,
            "  {}\n      {} (dim {}) {rel} {} (dim {})",
            c.question, c.left, c.left_dim, c.right, c.right_dim
        );
    }
}

fn write_tables(s: &mut String, title: &str, tables: &[CellTable]) {
    let _ = writeln!(s, "  {title}");
    for t in tables {
        let _ = writeln!(s, "    cell {} (M = {}):", t.cell, t.m.join(", "));
        for row in &t.grid {
            let _ = writeln!(s, "      {}", row.join(" | "));
        }
    }
}

/// Human-readable rendering; deterministic for identical input.
pub fn render_text(a: &Analysis) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "== algebra ==");
    let _ = writeln!(s, "  field: {}", a.field);
    for (k, v) in &a.params {
        let _ = writeln!(s, "  parameter {k} = {v}");
    }
    let _ = writeln!(s, "  dimension: {}", a.dim);
    let _ = writeln!(s, "  basis: {}", a.basis.join(", "));

    if let Some(f) = &a.frobenius {
        let _ = writeln!(s, "\n== frobenius ==");
        let _ = writeln!(s, "  Gram matrix (rank {}):", f.gram_rank);
        write_matrix(&mut s, &f.gram);
        let _ = writeln!(s, "  symmetric: {}", f.symmetric);
        let _ = writeln!(s, "  right duals d_i:");
        for (a, d) in &f.right_duals {
            let _ = writeln!(s, "    {a} -> {d}");
        }
        let _ = writeln!(s, "  left duals D_i:");
        for (a, d) in &f.left_duals {
            let _ = writeln!(s, "    {a} -> {d}");
        }
        let _ = writeln!(
            s,
            "  Nakayama automorphism α (columns are images of the basis):"
        );
        write_matrix(&mut s, &f.nakayama);
        let _ = writeln!(s, "  α in the right dual basis:");
        write_matrix(&mut s, &f.nakayama_right_dual_basis);
        let _ = writeln!(s, "  order of α: {}", f.nakayama_order);
    }

    if !a.spaces.is_empty() {
        let _ = writeln!(s, "\n== centers ==");
        write_spaces(&mut s, &a.spaces);
    }

    if let Some(c) = &a.cellular {
        let _ = writeln!(s, "\n== cellular ==");
        let _ = writeln!(s, "  order ({}): {}", c.order_source, c.order);
        let _ = writeln!(s, "  cellular: {}", c.cellular);
        if let Some(l0) = &c.lambda_zero {
            let _ = writeln!(s, "  Λ₀ = {{{}}}", l0.join(", "));
        }
        write_tables(&mut s, "cells:", &c.cells);
        write_tables(&mut s, "right dual of each entry:", &c.right_dual_tables);
        write_tables(&mut s, "left dual of each entry:", &c.left_dual_tables);
        let _ = writeln!(s, "  α in the right dual basis, cell reading order:");
        write_matrix(&mut s, &c.nakayama_cell_right_dual_basis);
        for (title, rows) in [
            ("e_λ", &c.e_lambda),
            ("e'_λ (T first)", &c.e_prime_lambda),
            ("e'_λ (diagonal)", &c.e_prime_diagonal),
        ] {
            let _ = writeln!(s, "  {title}:");
            for (l, e) in rows {
                let _ = writeln!(s, "    {l}: {e}");
            }
        }
        write_spaces(&mut s, &c.spaces);
        write_comparisons(&mut s, &c.comparisons);
        for (k, v) in &c.dual_symmetry {
            let _ = writeln!(s, "  {k}: {v}");
        }
        let _ = writeln!(s, "  iα = αi: {}", c.iota_alpha_commute);
        let _ = writeln!(s, "  α-image basis cellular: {}", c.alpha_basis_cellular);
    }

    if !a.open_questions.is_empty() {
        let _ = writeln!(s, "\n== open questions (reported, not decided) ==");
        write_comparisons(&mut s, &a.open_questions);
    }

    let _ = writeln!(s, "\n== checks ==");
    for c in &a.checks {
        render_check(&mut s, c);
    }
    s
}

pub fn render_check(s: &mut String, c: &Check) {
    let tag = match c.status {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Skipped => "SKIP",
    };
    let _ = writeln!(s, "  [{tag}] {} ({}): {}", c.id, c.suite, c.description);
    if let Some(n) = &c.note {
        let _ = writeln!(s, "         note: {n}");
    }
    for v in &c.violations {
        let _ = writeln!(s, "         - {v}");
    }
}
