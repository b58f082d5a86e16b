use super::{CellDatum, CellDuals};
use crate::algebra::{Algebra, Element};
use crate::centers::{is_ideal_of_center, CenterReport};
use crate::frobenius::DualData;
use crate::linalg::Subspace;

/// `e_λ = Σ_S C_{S,T} d_{T,S}` for the given `T`.
pub fn e_lambda(
    alg: &Algebra,
    cd: &CellDatum,
    duals: &CellDuals,
    cell: usize,
    t: usize,
) -> Element {
    let m = cd.cell(cell).size();
    let mut acc = alg.zero();
    for s in 0..m {
        let c = alg.basis_element(cd.index(cell, s, t));
        acc = acc.add(&alg.mul(&c, &duals.d[cd.index(cell, t, s)]));
    }
    acc
}

/// `Σ_S D_{T,S} C_{S,T}` for the given `T`.
pub fn e_prime_lambda(
    alg: &Algebra,
    cd: &CellDatum,
    duals: &CellDuals,
    cell: usize,
    t: usize,
) -> Element {
    let m = cd.cell(cell).size();
    let mut acc = alg.zero();
    for s in 0..m {
        let c = alg.basis_element(cd.index(cell, s, t));
        acc = acc.add(&alg.mul(&duals.big_d[cd.index(cell, t, s)], &c));
    }
    acc
}

/// `Σ_S D_{S,S} C_{S,S}`.
pub fn e_prime_diagonal(alg: &Algebra, cd: &CellDatum, duals: &CellDuals, cell: usize) -> Element {
    let m = cd.cell(cell).size();
    let mut acc = alg.zero();
    for s in 0..m {
        let k = cd.index(cell, s, s);
        acc = acc.add(&alg.mul(&duals.big_d[k], &alg.basis_element(k)));
    }
    acc
}

fn span_over_cells(alg: &Algebra, cd: &CellDatum, f: impl Fn(usize) -> Element) -> Subspace {
    let vs: Vec<_> = (0..cd.num_cells()).map(|c| f(c).into_coords()).collect();
    Subspace::span(alg.field(), alg.dim(), &vs)
}

/// `span{e_λ}` with the first element of each `M(λ)` as `T`.
pub fn l_alpha(alg: &Algebra, cd: &CellDatum, duals: &CellDuals) -> Subspace {
    span_over_cells(alg, cd, |c| e_lambda(alg, cd, duals, c, 0))
}

/// `span{Σ_S D_{T,S} C_{S,T}}` with `T` the first element of `M(λ)`.
pub fn l_alpha_prime(alg: &Algebra, cd: &CellDatum, duals: &CellDuals) -> Subspace {
    span_over_cells(alg, cd, |c| e_prime_lambda(alg, cd, duals, c, 0))
}

/// `span{Σ_S D_{S,S} C_{S,S}}`.
pub fn l_alpha_prime_diagonal(alg: &Algebra, cd: &CellDatum, duals: &CellDuals) -> Subspace {
    span_over_cells(alg, cd, |c| e_prime_diagonal(alg, cd, duals, c))
}

/// Checks that `e_λ` does not depend on `T`, that
/// `H_α(A) ⊆ L_α(A) ⊆ Z_α(A)` (the second inclusion also by direct
/// multiplication), and that `dim L_α(A) ≥ |Λ₀|`.
pub fn verify_lemma_3_9(
    alg: &Algebra,
    cd: &CellDatum,
    dd: &DualData,
    duals: &CellDuals,
    centers: &CenterReport,
    lambda0: &[usize],
) -> Vec<String> {
    let mut out = Vec::new();
    let n = alg.dim();
    for (ci, cell) in cd.cells().iter().enumerate() {
        let e0 = e_lambda(alg, cd, duals, ci, 0);
        for t in 1..cell.size() {
            if e_lambda(alg, cd, duals, ci, t) != e0 {
                out.push(format!(
                    "e_λ for cell {} differs between T={} and T={}",
                    cell.label, cell.m[0], cell.m[t]
                ));
            }
        }
        for j in 0..n {
            let aj = alg.basis_element(j);
            if alg.mul(&e0, &aj) != alg.mul(&dd.nakayama.apply(&aj), &e0) {
                out.push(format!(
                    "e_λ for cell {} fails e·{} = α({})·e",
                    cell.label,
                    alg.label(j),
                    alg.label(j)
                ));
            }
        }
    }
    let l = l_alpha(alg, cd, duals);
    if !centers.higman.higman_alpha.is_subspace_of(&l) {
        out.push("H_α(A) ⊄ L_α(A)".into());
    }
    if !l.is_subspace_of(&centers.twisted_alpha) {
        out.push("L_α(A) ⊄ Z_α(A)".into());
    }
    if l.dim() < lambda0.len() {
        out.push(format!(
            "dim L_α(A) = {} < |Λ₀| = {}",
            l.dim(),
            lambda0.len()
        ));
    }
    out
}

/// `Z_λ(A)` for one cell, spanned over a basis of `Z_{α⁻¹}(A)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZLambda {
    pub cell: usize,
    pub space: Subspace,
}

pub fn z_lambda_ideals(
    alg: &Algebra,
    cd: &CellDatum,
    duals: &CellDuals,
    centers: &CenterReport,
) -> Vec<ZLambda> {
    (0..cd.num_cells())
        .map(|ci| {
            let vs: Vec<_> = centers
                .twisted_alpha_inv
                .basis()
                .iter()
                .map(|x| {
                    z_lambda_generator(alg, cd, duals, ci, &Element::from_coords(x.clone()))
                        .into_coords()
                })
                .collect();
            ZLambda {
                cell: ci,
                space: Subspace::span(alg.field(), alg.dim(), &vs),
            }
        })
        .collect()
}

/// `Σ_S C_{S,T} x D_{T,S}` with `T` first.
fn z_lambda_generator(
    alg: &Algebra,
    cd: &CellDatum,
    duals: &CellDuals,
    cell: usize,
    x: &Element,
) -> Element {
    let m = cd.cell(cell).size();
    let mut acc = alg.zero();
    for s in 0..m {
        let c = alg.basis_element(cd.index(cell, s, 0));
        let cx = alg.mul(&c, x);
        acc = acc.add(&alg.mul(&cx, &duals.big_d[cd.index(cell, 0, s)]));
    }
    acc
}

/// The central ideals `Z_λ(A)`: generator identity `Σ_S C_{S,T} x D_{T,S} = e_λ x`,
/// containment in and ideal property over `Z(A)`, and `Z_λ Z_μ = 0` for `λ ≠ μ`.
pub fn verify_prop_3_11(
    alg: &Algebra,
    cd: &CellDatum,
    duals: &CellDuals,
    centers: &CenterReport,
    zl: &[ZLambda],
) -> Vec<String> {
    let mut out = Vec::new();
    for (ci, cell) in cd.cells().iter().enumerate() {
        let e = e_lambda(alg, cd, duals, ci, 0);
        for x in centers.twisted_alpha_inv.basis() {
            let x = Element::from_coords(x.clone());
            if z_lambda_generator(alg, cd, duals, ci, &x) != alg.mul(&e, &x) {
                out.push(format!(
                    "cell {}: Σ C x D != e_λ x for x = {}",
                    cell.label,
                    alg.format_element(&x)
                ));
            }
        }
    }
    for z in zl {
        let label = &cd.cell(z.cell).label;
        if !z.space.is_subspace_of(&centers.center) {
            out.push(format!("Z_λ for cell {label} ⊄ Z(A)"));
        } else if !is_ideal_of_center(alg, &z.space, &centers.center) {
            out.push(format!("Z_λ for cell {label} is not an ideal of Z(A)"));
        }
    }
    for a in zl {
        for b in zl {
            if a.cell != b.cell && alg.product_span(&a.space, &b.space).dim() != 0 {
                out.push(format!(
                    "Z_λ Z_μ != 0 for cells {} and {}",
                    cd.cell(a.cell).label,
                    cd.cell(b.cell).label
                ));
            }
        }
    }
    out
}
