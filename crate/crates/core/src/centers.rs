//! Centers, Nakayama twisted centers and Higman-type subspaces.

use thiserror::Error;

use crate::algebra::{Algebra, Element, LinearMap};
use crate::frobenius::DualData;
use crate::linalg::{Matrix, Subspace};
use crate::report::{Check, Violations};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CentersError {
    #[error("twisting map is not an algebra automorphism")]
    NotAutomorphism,
}

/// `{x : x a_j = a_j x for all j}`.
pub fn center(alg: &Algebra) -> Subspace {
    twisted_center_unchecked(alg, &LinearMap::identity(alg.field(), alg.dim()))
}

/// `{x : x a_j = φ(a_j) x for all j}`; `φ` must be an automorphism.
pub fn twisted_center(alg: &Algebra, phi: &LinearMap) -> Result<Subspace, CentersError> {
    if !phi.is_automorphism(alg) {
        return Err(CentersError::NotAutomorphism);
    }
    Ok(twisted_center_unchecked(alg, phi))
}

fn twisted_center_unchecked(alg: &Algebra, phi: &LinearMap) -> Subspace {
    let n = alg.dim();
    let f = alg.field();
    let basis: Vec<Element> = (0..n).map(|k| alg.basis_element(k)).collect();
    let mut stacked = Matrix::zeros(f, n * n, n);
    for j in 0..n {
        let pj = phi.image_of_basis(j);
        for (k, ak) in basis.iter().enumerate() {
            // column k of x ↦ x a_j − φ(a_j) x
            let v = alg.mul(ak, &basis[j]).sub(&alg.mul(&pj, ak));
            for (l, c) in v.coords().iter().enumerate() {
                stacked.set(j * n + l, k, c.clone());
            }
        }
    }
    let z = stacked.nullspace();
    for x in z.basis() {
        let x = Element::from_coords(x.clone());
        for j in 0..n {
            let lhs = alg.mul(&x, &basis[j]);
            let rhs = alg.mul(&phi.image_of_basis(j), &x);
            assert_eq!(lhs, rhs, "twisted center basis vector fails membership");
        }
    }
    z
}

/// `S ⊆ Z(A)` and `z s ∈ S` for spanning `z` of `Z(A)`, `s` of `S`.
pub fn is_ideal_of_center(alg: &Algebra, s: &Subspace, z: &Subspace) -> bool {
    s.is_subspace_of(z) && alg.product_span(z, s).is_subspace_of(s)
}

/// The Higman subspace and its two twisted analogues.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HigmanFamily {
    /// `{Σ d_i a a_i}`
    pub higman: Subspace,
    /// `{Σ a_i a d_i}`
    pub higman_alpha: Subspace,
    /// `{Σ d_i a α(a_i)}`
    pub higman_alpha_inv: Subspace,
    /// `{Σ a_i a D_i}`; should equal `higman`.
    pub higman_via_left_duals: Subspace,
    /// `{Σ D_i a a_i}`; should equal `higman_alpha`.
    pub higman_alpha_via_left_duals: Subspace,
}

/// Span over basis `a` of `Σ_i left(i) · a · right(i)`.
fn sandwich_span(alg: &Algebra, left: &[Element], right: &[Element]) -> Subspace {
    let n = alg.dim();
    let mut images = Vec::with_capacity(n);
    for k in 0..n {
        let a = alg.basis_element(k);
        let mut acc = alg.zero();
        for (l, r) in left.iter().zip(right) {
            let la = alg.mul(l, &a);
            acc = acc.add(&alg.mul(&la, r));
        }
        images.push(acc.into_coords());
    }
    Subspace::span(alg.field(), n, &images)
}

fn basis_elements(alg: &Algebra) -> Vec<Element> {
    (0..alg.dim()).map(|k| alg.basis_element(k)).collect()
}

fn right_duals(dd: &DualData) -> Vec<Element> {
    (0..dd.dim()).map(|k| dd.right_dual(k)).collect()
}

fn left_duals(dd: &DualData) -> Vec<Element> {
    (0..dd.dim()).map(|k| dd.left_dual(k)).collect()
}

pub fn higman_family(alg: &Algebra, dd: &DualData) -> HigmanFamily {
    let a = basis_elements(alg);
    let d = right_duals(dd);
    let big_d = left_duals(dd);
    let alpha_a: Vec<Element> = a.iter().map(|x| dd.nakayama.apply(x)).collect();
    HigmanFamily {
        higman: sandwich_span(alg, &d, &a),
        higman_alpha: sandwich_span(alg, &a, &d),
        higman_alpha_inv: sandwich_span(alg, &d, &alpha_a),
        higman_via_left_duals: sandwich_span(alg, &a, &big_d),
        higman_alpha_via_left_duals: sandwich_span(alg, &big_d, &a),
    }
}

/// `{Σ d_i a α^m(a_i)}` together with violations of
/// `X α^m(b) = b X` for generators `X` and basis `b`.
pub fn twisted_higman_power(alg: &Algebra, dd: &DualData, m: u32) -> (Subspace, Vec<String>) {
    let a = basis_elements(alg);
    let d = right_duals(dd);
    let am = dd.nakayama.power(m as i64).expect("α is invertible");
    let am_a: Vec<Element> = a.iter().map(|x| am.apply(x)).collect();
    let mut images = Vec::new();
    let mut bad = Vec::new();
    for (k, ak) in a.iter().enumerate() {
        let mut x = alg.zero();
        for (di, ai) in d.iter().zip(&am_a) {
            x = x.add(&alg.mul(&alg.mul(di, ak), ai));
        }
        for (j, bj) in a.iter().enumerate() {
            if alg.mul(&x, &am_a[j]) != alg.mul(bj, &x) {
                bad.push(format!(
                    "m={m}: generator from {} fails commutation with {}",
                    alg.label(k),
                    alg.label(j)
                ));
            }
        }
        images.push(x.into_coords());
    }
    (Subspace::span(alg.field(), alg.dim(), &images), bad)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterReport {
    pub center: Subspace,
    /// `Z_α(A)`
    pub twisted_alpha: Subspace,
    /// `Z_{α⁻¹}(A)`
    pub twisted_alpha_inv: Subspace,
    pub higman: HigmanFamily,
}

pub fn center_report(alg: &Algebra, dd: &DualData) -> CenterReport {
    let alpha = &dd.nakayama;
    let alpha_inv = dd.alpha_inverse();
    CenterReport {
        center: center(alg),
        twisted_alpha: twisted_center_unchecked(alg, alpha),
        twisted_alpha_inv: twisted_center_unchecked(alg, &alpha_inv),
        higman: higman_family(alg, dd),
    }
}

const SUITE: &str = "section2";

fn elements(s: &Subspace) -> Vec<Element> {
    s.basis()
        .iter()
        .map(|v| Element::from_coords(v.clone()))
        .collect()
}

/// Ideal-theoretic identities relating centers, twisted centers and the
/// Higman family.
pub fn verify_section2_lemmas(alg: &Algebra, dd: &DualData, rep: &CenterReport) -> Vec<Check> {
    let alpha = &dd.nakayama;
    let z = &rep.center;
    let za = &rep.twisted_alpha;
    let zai = &rep.twisted_alpha_inv;
    let h = &rep.higman;
    let mut checks = Vec::new();

    let mut v = Violations::new();
    v.require(h.higman == h.higman_via_left_duals, || {
        "span{Σ d_i a a_i} != span{Σ a_i a D_i}".into()
    });
    v.require(h.higman_alpha == h.higman_alpha_via_left_duals, || {
        "span{Σ a_i a d_i} != span{Σ D_i a a_i}".into()
    });
    v.require(is_ideal_of_center(alg, &h.higman, z), || {
        "H(A) is not an ideal of Z(A)".into()
    });
    checks.push(Check::from_violations(
        SUITE,
        "higman",
        "H(A) and H_α(A) do not depend on which dual basis is used; H(A) is an ideal of Z(A)",
        v.into_vec(),
    ));

    let mut v = Violations::new();
    for x in elements(za) {
        v.require(za.contains(alpha.apply(&x).coords()), || {
            format!("α({}) ∉ Z_α(A)", alg.format_element(&x))
        });
    }
    let zae = elements(za);
    for x in &zae {
        for y in &zae {
            let xy = alg.mul(x, y);
            v.require(alpha.apply(&xy) == xy, || {
                format!(
                    "α(xy) != xy for x = {}, y = {}",
                    alg.format_element(x),
                    alg.format_element(y)
                )
            });
        }
    }
    for (name, s) in [
        ("Z_{α⁻¹}(A)·Z_α(A)", alg.product_span(zai, za)),
        ("Z_α(A)·Z_{α⁻¹}(A)", alg.product_span(za, zai)),
    ] {
        v.require(is_ideal_of_center(alg, &s, z), || {
            format!("{name} is not an ideal of Z(A)")
        });
    }
    checks.push(Check::from_violations(
        SUITE,
        "lemma-2.5",
        "α preserves Z_α(A); α(xy) = xy on Z_α(A); Z_{α⁻¹}Z_α and Z_αZ_{α⁻¹} are ideals of Z(A)",
        v.into_vec(),
    ));

    checks.push(Check::from_violations(
        SUITE,
        "lemma-2.6",
        "H_α(A) ⊆ Z_α(A)",
        if h.higman_alpha.is_subspace_of(za) {
            vec![]
        } else {
            vec!["H_α(A) ⊄ Z_α(A)".into()]
        },
    ));
    checks.push(Check::from_violations(
        SUITE,
        "lemma-2.7",
        "H_{α⁻¹}(A) ⊆ Z_{α⁻¹}(A)",
        if h.higman_alpha_inv.is_subspace_of(zai) {
            vec![]
        } else {
            vec!["H_{α⁻¹}(A) ⊄ Z_{α⁻¹}(A)".into()]
        },
    ));

    let mut v = Violations::new();
    for (name, s) in [
        ("H_{α⁻¹}·Z_α", alg.product_span(&h.higman_alpha_inv, za)),
        ("Z_α·H_{α⁻¹}", alg.product_span(za, &h.higman_alpha_inv)),
        ("H_α·Z_{α⁻¹}", alg.product_span(&h.higman_alpha, zai)),
        ("Z_{α⁻¹}·H_α", alg.product_span(zai, &h.higman_alpha)),
    ] {
        v.require(is_ideal_of_center(alg, &s, z), || {
            format!("{name} is not an ideal of Z(A)")
        });
        v.require(s.is_subspace_of(&h.higman), || format!("{name} ⊄ H(A)"));
    }
    checks.push(Check::from_violations(
        SUITE,
        "lemma-2.8",
        "the four products of Higman-type and twisted centers are ideals of Z(A) inside H(A)",
        v.into_vec(),
    ));

    let mut v = Violations::new();
    for m in 0..=3 {
        let (s, bad) = twisted_higman_power(alg, dd, m);
        v.extend(bad);
        if m == 0 {
            v.require(s == h.higman, || "m = 0 does not give H(A)".into());
        }
        if m == 1 {
            v.require(s == h.higman_alpha_inv, || {
                "m = 1 does not give H_{α⁻¹}(A)".into()
            });
        }
    }
    checks.push(Check::from_violations(
        SUITE,
        "alpha-power",
        "Σ d_i a α^m(a_i) twists by α^m (m = 0..3)",
        v.into_vec(),
    ));

    if dd.is_symmetric() {
        let mut v = Violations::new();
        v.require(za == z, || "Z_α(A) != Z(A)".into());
        v.require(h.higman_alpha == h.higman, || "H_α(A) != H(A)".into());
        checks.push(Check::from_violations(
            SUITE,
            "symmetric",
            "symmetric form: twisted objects coincide with untwisted ones",
            v.into_vec(),
        ));
    }
    checks
}
