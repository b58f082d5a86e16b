use super::{Algebra, Element};
use crate::linalg::{LinearError, Matrix};
use crate::scalar::Field;

/// Linear endomorphism of `K^n`; column `j` of the matrix is the image of
/// the `j`-th basis vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn identity(field: Field, n: usize) -> Self {
        LinearMap {
            matrix: Matrix::identity(field, n),
        }
    }

    pub fn from_matrix(matrix: Matrix) -> Self {
        assert!(matrix.is_square(), "linear map must be square");
        LinearMap { matrix }
    }

    pub fn from_images(field: Field, images: &[Element]) -> Self {
        let n = images.len();
        let cols: Vec<_> = images.iter().map(|e| e.coords().to_vec()).collect();
        LinearMap {
            matrix: Matrix::from_columns(field, n, &cols),
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, x: &Element) -> Element {
        Element::from_coords(self.matrix.mul_vec(x.coords()))
    }

    pub fn image_of_basis(&self, j: usize) -> Element {
        Element::from_coords(self.matrix.column(j))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        LinearMap {
            matrix: self.matrix.mul(&other.matrix),
        }
    }

    pub fn invert(&self) -> Result<LinearMap, LinearError> {
        Ok(LinearMap {
            matrix: self.matrix.inverse()?,
        })
    }

    pub fn power(&self, m: i64) -> Result<LinearMap, LinearError> {
        let base = if m < 0 { self.invert()? } else { self.clone() };
        let mut acc = LinearMap::identity(self.matrix.field(), self.dim());
        let mut b = base;
        let mut e = m.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&b);
            }
            b = b.compose(&b);
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    pub fn is_bijective(&self) -> bool {
        self.matrix.rank() == self.dim()
    }

    /// Basis pairs `(i, j)` with `f(a_i a_j) != f(a_i) f(a_j)`.
    pub fn multiplicativity_defects(&self, alg: &Algebra) -> Vec<(usize, usize)> {
        self.defects(alg, false)
    }

    /// Basis pairs `(i, j)` with `f(a_i a_j) != f(a_j) f(a_i)`.
    pub fn anti_multiplicativity_defects(&self, alg: &Algebra) -> Vec<(usize, usize)> {
        self.defects(alg, true)
    }

    fn defects(&self, alg: &Algebra, anti: bool) -> Vec<(usize, usize)> {
        let n = alg.dim();
        let images: Vec<Element> = (0..n).map(|j| self.image_of_basis(j)).collect();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let prod = Element::from_sparse(alg.field(), n, alg.product_of_basis(i, j));
                let lhs = self.apply(&prod);
                let rhs = if anti {
                    alg.mul(&images[j], &images[i])
                } else {
                    alg.mul(&images[i], &images[j])
                };
                if lhs != rhs {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn is_automorphism(&self, alg: &Algebra) -> bool {
        self.is_bijective() && self.multiplicativity_defects(alg).is_empty()
    }

    pub fn is_anti_automorphism(&self, alg: &Algebra) -> bool {
        self.is_bijective() && self.anti_multiplicativity_defects(alg).is_empty()
    }

    /// The same map written in another basis: `P⁻¹ M P`, where the columns
    /// of `p` are the new basis vectors.
    pub fn in_basis(&self, p: &Matrix) -> Result<LinearMap, LinearError> {
        Ok(LinearMap {
            matrix: p.inverse()?.mul(&self.matrix).mul(p),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    #[test]
    fn powers_and_inverse() {
        let f = Field::Rational;
        let m = Matrix::from_rows(
            f,
            2,
            vec![vec![f.from_i64(2), f.zero()], vec![f.zero(), f.one()]],
        );
        let a = LinearMap::from_matrix(m);
        let p = a.power(-2).unwrap();
        assert_eq!(p.matrix().get(0, 0), &f.parse("1/4").unwrap());
        assert!(a
            .power(3)
            .unwrap()
            .compose(&a.power(-3).unwrap())
            .is_identity());
        assert!(a.power(0).unwrap().is_identity());
        let _: &Scalar = p.matrix().get(1, 1);
    }
}
