//! Finite-dimensional associative unital algebras given by structure constants.

mod element;
mod linear_map;

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::linalg::{LinearError, Matrix, Subspace};
use crate::scalar::{Field, Scalar};

pub use element::Element;
pub use linear_map::LinearMap;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("algebra must have positive dimension")]
    Empty,
    #[error("duplicate basis label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown basis label {0:?}")]
    UnknownLabel(String),
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("value {value} belongs to {found}, expected {expected}")]
    FieldMismatch {
        value: String,
        expected: Field,
        found: Field,
    },
    #[error("unit vector has length {found}, expected {expected}")]
    UnitLength { expected: usize, found: usize },
    #[error("new basis is not a basis: {0}")]
    BasisChange(#[from] LinearError),
}

/// `a_i a_j = sum_k r_ijk a_k`, stored sparsely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    field: Field,
    labels: Vec<String>,
    label_index: HashMap<String, usize>,
    table: Vec<Vec<(usize, Scalar)>>,
    unit: Vec<Scalar>,
}

/// A structure-constant entry `(i, j, [(k, r_ijk)])`.
pub type TableEntry = (usize, usize, Vec<(usize, Scalar)>);

impl Algebra {
    /// Builds an algebra from structure constants. Missing products are zero,
    /// repeated `k` entries are summed. Associativity and the unit law are not
    /// checked here; see [`Algebra::verify`].
    pub fn new(
        field: Field,
        labels: Vec<String>,
        entries: impl IntoIterator<Item = TableEntry>,
        unit: Vec<Scalar>,
    ) -> Result<Self, AlgebraError> {
        let n = labels.len();
        if n == 0 {
            return Err(AlgebraError::Empty);
        }
        let mut label_index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if label_index.insert(l.clone(), i).is_some() {
                return Err(AlgebraError::DuplicateLabel(l.clone()));
            }
        }
        if unit.len() != n {
            return Err(AlgebraError::UnitLength {
                expected: n,
                found: unit.len(),
            });
        }
        for u in &unit {
            check_field(field, u)?;
        }
        let mut table: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n * n];
        for (i, j, terms) in entries {
            for idx in [i, j] {
                if idx >= n {
                    return Err(AlgebraError::IndexOutOfRange { index: idx, dim: n });
                }
            }
            let mut acc = vec![field.zero(); n];
            for (k, r) in table[i * n + j].drain(..) {
                acc[k] = r;
            }
            for (k, r) in terms {
                if k >= n {
                    return Err(AlgebraError::IndexOutOfRange { index: k, dim: n });
                }
                check_field(field, &r)?;
                acc[k] += &r;
            }
            table[i * n + j] = sparse(&acc);
        }
        Ok(Algebra {
            field,
            labels,
            label_index,
            table,
            unit,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.label_index.get(label).copied()
    }

    pub fn unit(&self) -> Element {
        Element::from_coords(self.unit.clone())
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.field, self.dim())
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::basis(self.field, self.dim(), i)
    }

    /// Sparse product `a_i a_j`.
    pub fn product_of_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim() + j]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.product_of_basis(i, j)
            .iter()
            .find(|(kk, _)| *kk == k)
            .map(|(_, r)| r.clone())
            .unwrap_or_else(|| self.field.zero())
    }

    /// Non-zero structure-constant entries in `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &[(usize, Scalar)])> {
        let n = self.dim();
        self.table
            .iter()
            .enumerate()
            .filter(|(_, t)| !t.is_empty())
            .map(move |(ij, t)| (ij / n, ij % n, t.as_slice()))
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        let n = self.dim();
        assert_eq!(x.dim(), n, "left factor has wrong dimension");
        assert_eq!(y.dim(), n, "right factor has wrong dimension");
        let mut out = vec![self.field.zero(); n];
        for (i, xi) in x.coords().iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coords().iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (k, r) in &self.table[i * n + j] {
                    out[k.to_owned()] += &(&c * r);
                }
            }
        }
        Element::from_coords(out)
    }

    /// Product of several elements, left to right.
    pub fn mul_all(&self, factors: &[&Element]) -> Element {
        let mut acc = self.unit();
        for f in factors {
            acc = self.mul(&acc, f);
        }
        acc
    }

    /// Matrix of `y -> x y` (columns are images of basis vectors).
    pub fn left_mul_matrix(&self, x: &Element) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim())
            .map(|j| self.mul(x, &self.basis_element(j)).into_coords())
            .collect();
        Matrix::from_columns(self.field, self.dim(), &cols)
    }

    /// Matrix of `y -> y x`.
    pub fn right_mul_matrix(&self, x: &Element) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim())
            .map(|j| self.mul(&self.basis_element(j), x).into_coords())
            .collect();
        Matrix::from_columns(self.field, self.dim(), &cols)
    }

    /// Checks associativity on all basis triples and the unit law.
    pub fn verify(&self) -> Vec<AxiomViolation> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let ij = Element::from_sparse(self.field, n, self.product_of_basis(i, j));
                for k in 0..n {
                    let jk = Element::from_sparse(self.field, n, self.product_of_basis(j, k));
                    let lhs = self.mul(&ij, &self.basis_element(k));
                    let rhs = self.mul(&self.basis_element(i), &jk);
                    if lhs != rhs {
                        let diff = lhs.sub(&rhs);
                        let l = diff
                            .coords()
                            .iter()
                            .position(|c| !c.is_zero())
                            .expect("nonzero difference");
                        out.push(AxiomViolation::Associativity {
                            i: self.labels[i].clone(),
                            j: self.labels[j].clone(),
                            k: self.labels[k].clone(),
                            l: self.labels[l].clone(),
                            lhs: lhs.coords()[l].to_string(),
                            rhs: rhs.coords()[l].to_string(),
                        });
                    }
                }
            }
        }
        let unit = self.unit();
        for j in 0..n {
            let b = self.basis_element(j);
            if self.mul(&unit, &b) != b {
                out.push(AxiomViolation::LeftUnit(self.labels[j].clone()));
            }
            if self.mul(&b, &unit) != b {
                out.push(AxiomViolation::RightUnit(self.labels[j].clone()));
            }
        }
        out
    }

    /// The same algebra in the basis whose `j`-th vector is column `j` of
    /// `new_basis` (coordinates in the current basis).
    pub fn change_basis(
        &self,
        new_basis: &Matrix,
        labels: Vec<String>,
    ) -> Result<Algebra, AlgebraError> {
        let n = self.dim();
        let inv = new_basis.inverse()?;
        let vecs: Vec<Element> = (0..n)
            .map(|j| Element::from_coords(new_basis.column(j)))
            .collect();
        let mut entries = Vec::new();
        for (p, bp) in vecs.iter().enumerate() {
            for (q, bq) in vecs.iter().enumerate() {
                let prod = inv.mul_vec(self.mul(bp, bq).coords());
                let terms = sparse(&prod);
                if !terms.is_empty() {
                    entries.push((p, q, terms));
                }
            }
        }
        let unit = inv.mul_vec(&self.unit);
        Algebra::new(self.field, labels, entries, unit)
    }

    /// `span{x y : x in s, y in t}`.
    pub fn product_span(&self, s: &Subspace, t: &Subspace) -> Subspace {
        let n = self.dim();
        let mut vs = Vec::new();
        for x in s.basis() {
            let xe = Element::from_coords(x.clone());
            for y in t.basis() {
                vs.push(
                    self.mul(&xe, &Element::from_coords(y.clone()))
                        .into_coords(),
                );
            }
        }
        Subspace::span(self.field, n, &vs)
    }

    /// Human-readable linear combination of basis labels.
    pub fn format_element(&self, x: &Element) -> String {
        format_combination(x.coords(), |i| self.labels[i].as_str())
    }

    pub fn format_subspace(&self, s: &Subspace) -> Vec<String> {
        s.basis()
            .iter()
            .map(|v| format_combination(v, |i| self.labels[i].as_str()))
            .collect()
    }
}

fn check_field(field: Field, s: &Scalar) -> Result<(), AlgebraError> {
    if s.field() != field {
        return Err(AlgebraError::FieldMismatch {
            value: s.to_string(),
            expected: field,
            found: s.field(),
        });
    }
    Ok(())
}

pub(crate) fn sparse(v: &[Scalar]) -> Vec<(usize, Scalar)> {
    v.iter()
        .enumerate()
        .filter(|(_, s)| !s.is_zero())
        .map(|(i, s)| (i, s.clone()))
        .collect()
}

/// Formats `sum c_i name(i)`, e.g. `2 a - 1/3 b`.
pub fn format_combination<'a>(coords: &[Scalar], name: impl Fn(usize) -> &'a str) -> String {
    let mut out = String::new();
    for (i, c) in coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = if neg { -c } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&mag.to_string());
            out.push('·');
        }
        out.push_str(name(i));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    /// `(a_i a_j) a_k` and `a_i (a_j a_k)` differ in the coefficient of `a_l`.
    Associativity {
        i: String,
        j: String,
        k: String,
        l: String,
        lhs: String,
        rhs: String,
    },
    LeftUnit(String),
    RightUnit(String),
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::Associativity { i, j, k, l, lhs, rhs } => write!(
                f,
                "associativity fails at ({i}·{j})·{k} vs {i}·({j}·{k}): coefficient of {l} is {lhs} vs {rhs}"
            ),
            AxiomViolation::LeftUnit(j) => write!(f, "1·{j} != {j}"),
            AxiomViolation::RightUnit(j) => write!(f, "{j}·1 != {j}"),
        }
    }
}
