use super::Matrix;
use crate::scalar::{Field, Scalar};

/// A subspace of `K^n`, stored as the nonzero rows of a reduced row echelon
/// form. The representation is canonical, so `==` is subspace equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        let id = Matrix::identity(field, ambient);
        Subspace::span(field, ambient, &id.row_vectors())
    }

    pub fn span(field: Field, ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        if vectors.is_empty() {
            return Subspace::zero(field, ambient);
        }
        let m = Matrix::from_rows(field, ambient, vectors.to_vec());
        let (r, pivots) = m.rref();
        let rows = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            field,
            ambient,
            rows,
            pivots,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Canonical (RREF) basis.
    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    /// Residue of `v` after eliminating the pivot coordinates.
    fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut x = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = x[p].clone();
            if c.is_zero() {
                continue;
            }
            for (xi, ri) in x.iter_mut().zip(row) {
                if !ri.is_zero() {
                    *xi -= &(&c * ri);
                }
            }
        }
        x
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(
            v.len(),
            self.ambient,
            "vector length differs from ambient dimension"
        );
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vs = self.rows.clone();
        vs.extend(other.rows.iter().cloned());
        Subspace::span(self.field, self.ambient, &vs)
    }

    /// `{y : <x, y> = 0 for all x in self}` under the standard pairing.
    pub fn annihilator(&self) -> Subspace {
        if self.rows.is_empty() {
            return Subspace::full(self.field, self.ambient);
        }
        Matrix::from_rows(self.field, self.ambient, self.rows.clone()).nullspace()
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        self.annihilator().sum(&other.annihilator()).annihilator()
    }
}
