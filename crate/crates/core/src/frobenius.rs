//! Trace forms, dual bases and the Nakayama automorphism.
//!
//! Conventions: `G_ij = τ(a_i a_j)`. The right dual basis `d` satisfies
//! `τ(a_i d_j) = δ_ij`, so `d_j` is column `j` of `G⁻¹`; the left dual basis
//! `D` satisfies `τ(D_j a_i) = δ_ij`, so `D_j` is row `j` of `G⁻¹`. The
//! Nakayama automorphism sends `d_i` to `D_i`; in the original basis its
//! matrix is `(G⁻¹)ᵀ G`, and it satisfies `τ(xy) = τ(α(y) x)`.

use thiserror::Error;

use crate::algebra::{Algebra, Element, LinearMap};
use crate::linalg::{LinearError, Matrix};
use crate::scalar::{Field, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FrobeniusError {
    #[error(
        "trace form is degenerate: Gram matrix has rank {rank} < {dim}; kernel witness {witness}"
    )]
    NotFrobenius {
        rank: usize,
        dim: usize,
        witness: String,
    },
    #[error("trace vector has length {found}, expected {expected}")]
    Length { expected: usize, found: usize },
    #[error("dual basis identity failed: {0}")]
    Identity(String),
    #[error(
        "Nakayama map is not an algebra automorphism at ({0}, {1}); is the algebra associative?"
    )]
    NotAutomorphism(String, String),
}

/// A linear functional `τ`, given by its values on the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceForm {
    values: Vec<Scalar>,
}

impl TraceForm {
    pub fn new(values: Vec<Scalar>) -> Self {
        TraceForm { values }
    }

    /// The coordinate functional "coefficient of `a_i`".
    pub fn coordinate(field: Field, dim: usize, i: usize) -> Self {
        TraceForm {
            values: Element::basis(field, dim, i).into_coords(),
        }
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn eval(&self, x: &Element) -> Scalar {
        let mut acc = match self.values.first() {
            Some(v) => v.field().zero(),
            None => return x.coords()[0].field().zero(),
        };
        for (t, c) in self.values.iter().zip(x.coords()) {
            if !t.is_zero() && !c.is_zero() {
                acc += &(t * c);
            }
        }
        acc
    }
}

pub fn gram(alg: &Algebra, tau: &TraceForm) -> Matrix {
    let n = alg.dim();
    let f = alg.field();
    let mut g = Matrix::zeros(f, n, n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = f.zero();
            for (k, r) in alg.product_of_basis(i, j) {
                acc += &(r * &tau.values[*k]);
            }
            g.set(i, j, acc);
        }
    }
    g
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualData {
    pub gram: Matrix,
    pub right_duals: Matrix,
    pub left_duals: Matrix,
    pub nakayama: LinearMap,
}

pub fn dual_bases(alg: &Algebra, tau: &TraceForm) -> Result<DualData, FrobeniusError> {
    let n = alg.dim();
    let f = alg.field();
    if tau.values.len() != n {
        return Err(FrobeniusError::Length {
            expected: n,
            found: tau.values.len(),
        });
    }
    let g = gram(alg, tau);
    let right = match crate::linalg::solve_linear(&g, &Matrix::identity(f, n)) {
        Ok(x) => x,
        Err(LinearError::Singular { rank, .. }) => {
            let ns = g.nullspace();
            let w = Element::from_coords(ns.basis()[0].clone());
            return Err(FrobeniusError::NotFrobenius {
                rank,
                dim: n,
                witness: alg.format_element(&w),
            });
        }
        Err(e) => return Err(FrobeniusError::Identity(e.to_string())),
    };
    // Y G = I  <=>  Gᵀ Yᵀ = I
    let left = crate::linalg::solve_linear(&g.transpose(), &Matrix::identity(f, n))
        .map_err(|e| FrobeniusError::Identity(e.to_string()))?
        .transpose();

    // α maps column d_i of `right` to column D_i of leftᵀ: α = leftᵀ · right⁻¹ = leftᵀ · G
    let alpha = LinearMap::from_matrix(left.transpose().mul(&g));
    let dd = DualData {
        gram: g,
        right_duals: right,
        left_duals: left,
        nakayama: alpha,
    };
    dd.check_delta(alg, tau)?;
    dd.check_nakayama_identity()?;
    if let Some(&(i, j)) = dd.nakayama.multiplicativity_defects(alg).first() {
        return Err(FrobeniusError::NotAutomorphism(
            alg.label(i).to_string(),
            alg.label(j).to_string(),
        ));
    }
    if dd.nakayama.apply(&alg.unit()) != alg.unit() {
        return Err(FrobeniusError::Identity("α(1) != 1".into()));
    }
    Ok(dd)
}

impl DualData {
    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn field(&self) -> Field {
        self.gram.field()
    }

    /// `d_j`.
    pub fn right_dual(&self, j: usize) -> Element {
        Element::from_coords(self.right_duals.column(j))
    }

    /// `D_j`.
    pub fn left_dual(&self, j: usize) -> Element {
        Element::from_coords(self.left_duals.row(j).to_vec())
    }

    /// `τ(x y)` through the Gram matrix.
    pub fn pairing(&self, x: &Element, y: &Element) -> Scalar {
        let gy = self.gram.mul_vec(y.coords());
        let mut acc = self.field().zero();
        for (a, b) in x.coords().iter().zip(&gy) {
            if !a.is_zero() && !b.is_zero() {
                acc += &(a * b);
            }
        }
        acc
    }

    /// Coefficients of `z` in the right dual basis: the `d_j` coefficient is `τ(a_j z)`.
    pub fn right_dual_coords(&self, z: &Element) -> Vec<Scalar> {
        self.gram.mul_vec(z.coords())
    }

    /// Coefficients of `z` in the left dual basis: the `D_j` coefficient is `τ(z a_j)`.
    pub fn left_dual_coords(&self, z: &Element) -> Vec<Scalar> {
        self.gram.vec_mul(z.coords())
    }

    fn check_delta(&self, alg: &Algebra, tau: &TraceForm) -> Result<(), FrobeniusError> {
        let n = self.dim();
        for i in 0..n {
            let ai = alg.basis_element(i);
            for j in 0..n {
                let want = if i == j {
                    self.field().one()
                } else {
                    self.field().zero()
                };
                let r = tau.eval(&alg.mul(&ai, &self.right_dual(j)));
                if r != want {
                    return Err(FrobeniusError::Identity(format!(
                        "τ({} d_{}) = {r}",
                        alg.label(i),
                        alg.label(j)
                    )));
                }
                let l = tau.eval(&alg.mul(&self.left_dual(j), &ai));
                if l != want {
                    return Err(FrobeniusError::Identity(format!(
                        "τ(D_{} {}) = {l}",
                        alg.label(j),
                        alg.label(i)
                    )));
                }
            }
        }
        for i in 0..n {
            if self.nakayama.apply(&self.right_dual(i)) != self.left_dual(i) {
                return Err(FrobeniusError::Identity(format!("α(d_{i}) != D_{i}")));
            }
        }
        Ok(())
    }

    /// `τ(a_i a_j) = τ(α(a_j) a_i)` on all basis pairs.
    fn check_nakayama_identity(&self) -> Result<(), FrobeniusError> {
        let n = self.dim();
        // τ(α(a_j) a_i) = Σ_k α_kj G_ki = (αᵀ G)_ji
        let rhs = self.nakayama.matrix().transpose().mul(&self.gram);
        for i in 0..n {
            for j in 0..n {
                if self.gram.get(i, j) != rhs.get(j, i) {
                    return Err(FrobeniusError::Identity(format!(
                        "τ(a_{i} a_{j}) != τ(α(a_{j}) a_{i})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// True iff the form is symmetric. Panics if this disagrees with `α = id`.
    pub fn is_symmetric(&self) -> bool {
        let sym = self.gram == self.gram.transpose();
        assert_eq!(
            sym,
            self.nakayama.is_identity(),
            "symmetry of the form must coincide with α = id"
        );
        sym
    }

    /// Smallest `m ≤ max_m` with `α^m = id`.
    pub fn nakayama_order(&self, max_m: u32) -> NakayamaOrder {
        let mut p = self.nakayama.clone();
        for m in 1..=max_m {
            if p.is_identity() {
                return NakayamaOrder::Finite(m);
            }
            p = p.compose(&self.nakayama);
        }
        NakayamaOrder::ExceedsBound(max_m)
    }

    /// Matrix of `α` with respect to the right dual basis.
    pub fn nakayama_in_right_dual_basis(&self) -> Matrix {
        self.nakayama
            .in_basis(&self.right_duals)
            .expect("right duals form a basis")
            .matrix()
            .clone()
    }

    pub fn alpha_inverse(&self) -> LinearMap {
        self.nakayama.invert().expect("α is invertible")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NakayamaOrder {
    Finite(u32),
    ExceedsBound(u32),
}

impl std::fmt::Display for NakayamaOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NakayamaOrder::Finite(m) => write!(f, "{m}"),
            NakayamaOrder::ExceedsBound(m) => write!(f, "exceeds {m}"),
        }
    }
}

/// Checks `a_i d_j = Σ_k r_kij d_k` and `D_i a_j = Σ_k r_jki D_k` for all
/// basis pairs; returns one message per failing pair.
pub fn verify_lemma_2_3(alg: &Algebra, dd: &DualData) -> Vec<String> {
    let n = alg.dim();
    let f = alg.field();
    let d: Vec<Element> = (0..n).map(|j| dd.right_dual(j)).collect();
    let big_d: Vec<Element> = (0..n).map(|j| dd.left_dual(j)).collect();
    let mut out = Vec::new();
    for i in 0..n {
        let ai = alg.basis_element(i);
        for j in 0..n {
            let aj = alg.basis_element(j);
            let lhs = alg.mul(&ai, &d[j]);
            let mut rhs = Element::zero(f, n);
            for (k, dk) in d.iter().enumerate() {
                rhs.add_scaled(&alg.structure_constant(k, i, j), dk);
            }
            if lhs != rhs {
                out.push(format!(
                    "{} · d[{}] != Σ_k r(k,{},{}) d[k]",
                    alg.label(i),
                    alg.label(j),
                    alg.label(i),
                    alg.label(j)
                ));
            }
            let lhs = alg.mul(&big_d[i], &aj);
            let mut rhs = Element::zero(f, n);
            for (k, dk) in big_d.iter().enumerate() {
                rhs.add_scaled(&alg.structure_constant(j, k, i), dk);
            }
            if lhs != rhs {
                out.push(format!(
                    "D[{}] · {} != Σ_k r({},k,{}) D[k]",
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

#[cfg(test)]
mod tests {
    use super::*;

    fn group_c2() -> (Algebra, TraceForm) {
        let f = Field::Rational;
        let alg = Algebra::new(
            f,
            vec!["1".into(), "g".into()],
            vec![
                (0, 0, vec![(0, f.one())]),
                (0, 1, vec![(1, f.one())]),
                (1, 0, vec![(1, f.one())]),
                (1, 1, vec![(0, f.one())]),
            ],
            vec![f.one(), f.zero()],
        )
        .unwrap();
        (alg, TraceForm::coordinate(f, 2, 0))
    }

    #[test]
    fn group_algebra_is_symmetric() {
        let (alg, tau) = group_c2();
        let dd = dual_bases(&alg, &tau).unwrap();
        assert!(dd.is_symmetric());
        assert_eq!(dd.right_duals, dd.left_duals.transpose());
        assert!(dd.nakayama.is_identity());
        assert_eq!(dd.nakayama_order(5), NakayamaOrder::Finite(1));
        assert!(verify_lemma_2_3(&alg, &dd).is_empty());
    }

    #[test]
    fn degenerate_trace() {
        let (alg, _) = group_c2();
        let f = alg.field();
        // τ(1) = τ(g) = 1 kills 1 - g
        let tau = TraceForm::new(vec![f.one(), f.one()]);
        match dual_bases(&alg, &tau) {
            Err(FrobeniusError::NotFrobenius { rank, dim, witness }) => {
                assert_eq!((rank, dim), (1, 2));
                assert_eq!(witness, "1 - g");
            }
            other => panic!("unexpected {other:?}"),
        }
        let zero = TraceForm::new(vec![f.zero(), f.zero()]);
        assert!(gram(&alg, &zero).is_zero());
    }

    #[test]
    fn corrupted_duals_are_reported() {
        let (alg, tau) = group_c2();
        let mut dd = dual_bases(&alg, &tau).unwrap();
        let f = alg.field();
        dd.right_duals.set(0, 0, f.from_i64(2));
        assert!(!verify_lemma_2_3(&alg, &dd).is_empty());
    }
}
