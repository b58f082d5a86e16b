use super::{verify_cell_datum, CellDatum, CellDuals, Poset};
use crate::algebra::{Algebra, Element};
use crate::frobenius::{DualData, TraceForm};
use crate::linalg::Matrix;

/// Which dual-basis symmetries hold, and whether the implications between
/// them were confirmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualCellularity {
    /// `i(d_{S,T}) = d_{T,S}` for all cells and indices.
    pub p_d: bool,
    /// `i(D_{S,T}) = D_{T,S}`.
    pub p_big_d: bool,
    /// `τ ∘ i = τ`.
    pub p_tau: bool,
    /// the form is symmetric.
    pub p_sym: bool,
    /// Cellularity of `d` under the opposite order, checked when `p_d`.
    pub d_cellular_opposite: Option<bool>,
    /// Cellularity of `D` under the opposite order, checked when `p_big_d`.
    pub big_d_cellular_opposite: Option<bool>,
    /// Given any one of (i-symmetric duals, symmetric, `τ∘i = τ`), the other two are equivalent.
    pub equivalence_violations: Vec<String>,
    /// `i`-symmetric left duals force `τ∘i = τ`.
    pub tau_violations: Vec<String>,
    /// `i`-symmetric duals force symmetry and are cellular for the opposite order.
    pub symmetry_violations: Vec<String>,
}

/// Re-expresses the algebra in the basis `vectors` (cell positions kept)
/// and checks the cellular axioms there.
fn transported_is_cellular(
    alg: &Algebra,
    cd: &CellDatum,
    vectors: &[Element],
    order: Poset,
    prefix: &str,
) -> bool {
    let n = alg.dim();
    let cols: Vec<_> = vectors.iter().map(|v| v.coords().to_vec()).collect();
    let p = Matrix::from_columns(alg.field(), n, &cols);
    let labels = (0..n).map(|k| cd.pos_label(prefix, k)).collect();
    let Ok(b) = alg.change_basis(&p, labels) else {
        return false;
    };
    let Ok(i_b) = cd.involution().in_basis(&p) else {
        return false;
    };
    let cd_b = cd.with_order(order).with_involution(i_b);
    verify_cell_datum(&b, &cd_b).is_ok()
}

pub fn cellularity_of_duals(
    alg: &Algebra,
    cd: &CellDatum,
    dd: &DualData,
    tau: &TraceForm,
    duals: &CellDuals,
) -> DualCellularity {
    let n = alg.dim();
    let i = cd.involution();
    let p_d = (0..n).all(|k| i.apply(&duals.d[k]) == duals.d[cd.transpose_index(k)]);
    let p_big_d = (0..n).all(|k| i.apply(&duals.big_d[k]) == duals.big_d[cd.transpose_index(k)]);
    let p_tau = (0..n).all(|k| tau.eval(&i.image_of_basis(k)) == tau.values()[k]);
    let p_sym = dd.is_symmetric();

    let mut v = Vec::new();
    if p_d && !p_sym {
        v.push("right dual basis is i-symmetric but the algebra is not symmetric".into());
    }
    if p_big_d && !p_sym {
        v.push("left dual basis is i-symmetric but the algebra is not symmetric".into());
    }
    let mut tau_violations = Vec::new();
    if p_big_d && !p_tau {
        tau_violations.push("left dual basis is i-symmetric but τ∘i != τ".into());
    }
    let mut eq = Vec::new();
    let h1 = p_d && p_big_d;
    if h1 && p_sym != p_tau {
        eq.push("with both dual bases i-symmetric, symmetry and τ∘i = τ disagree".into());
    }
    if p_sym && h1 != p_tau {
        eq.push("for a symmetric algebra, i-symmetric duals and τ∘i = τ disagree".into());
    }
    if p_tau && h1 != p_sym {
        eq.push("with τ∘i = τ, i-symmetric duals and symmetry disagree".into());
    }

    let opposite = cd.order().opposite();
    let d_cellular_opposite =
        p_d.then(|| transported_is_cellular(alg, cd, &duals.d, opposite.clone(), "d"));
    let big_d_cellular_opposite =
        p_big_d.then(|| transported_is_cellular(alg, cd, &duals.big_d, opposite.clone(), "D"));
    if d_cellular_opposite == Some(false) {
        v.push("right dual basis is i-symmetric but not cellular for the opposite order".into());
    }
    if big_d_cellular_opposite == Some(false) {
        v.push("left dual basis is i-symmetric but not cellular for the opposite order".into());
    }

    DualCellularity {
        p_d,
        p_big_d,
        p_tau,
        p_sym,
        d_cellular_opposite,
        big_d_cellular_opposite,
        equivalence_violations: eq,
        tau_violations,
        symmetry_violations: v,
    }
}

/// Returns `(iα = αi, {α(C_{S,T})} is cellular for the same order and i)`.
pub fn alpha_commutes_with_involution(
    alg: &Algebra,
    cd: &CellDatum,
    dd: &DualData,
) -> (bool, bool) {
    let i = cd.involution();
    let a = &dd.nakayama;
    let commute = i.compose(a) == a.compose(i);
    let images: Vec<Element> = (0..alg.dim()).map(|k| a.image_of_basis(k)).collect();
    let cellular = transported_is_cellular(alg, cd, &images, cd.order().clone(), "αC");
    (commute, cellular)
}
