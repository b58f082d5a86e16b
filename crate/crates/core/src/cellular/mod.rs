//! Cell data, the cellular axioms, and identities for dual bases of
//! Frobenius cellular algebras.

mod axioms;
mod duality;
mod duals;
mod ideals;
mod poset;

use thiserror::Error;

use crate::algebra::{Element, LinearMap};
use crate::scalar::Field;

pub use axioms::{
    forced_order, lambda_zero, search_poset, verify_cell_datum, Axiom, CellStructureConstants,
    CellViolation,
};
pub use duality::{alpha_commutes_with_involution, cellularity_of_duals, DualCellularity};
pub use duals::{dual_cell_tables, verify_lemma_3_2, CellDuals};
pub use ideals::{
    e_lambda, e_prime_diagonal, e_prime_lambda, l_alpha, l_alpha_prime, l_alpha_prime_diagonal,
    verify_lemma_3_9, verify_prop_3_11, z_lambda_ideals, ZLambda,
};
pub use poset::{Poset, PosetError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CellDatumError {
    #[error("cell {cell}: grid must be {m}x{m}")]
    GridShape { cell: String, m: usize },
    #[error("basis element {0} is used by more than one grid position")]
    Duplicate(usize),
    #[error("basis element {0} does not appear in any cell")]
    Missing(usize),
    #[error("basis index {index} out of range for dimension {dim}")]
    OutOfRange { index: usize, dim: usize },
    #[error("poset has {found} elements but there are {expected} cells")]
    PosetSize { expected: usize, found: usize },
    #[error("involution has dimension {found}, expected {expected}")]
    InvolutionSize { expected: usize, found: usize },
}

/// One cell `λ`: its index set `M(λ)` and the grid `C_{S,T}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub label: String,
    pub m: Vec<String>,
    /// `grid[s][t]` is the basis index of `C_{S,T}`.
    pub grid: Vec<Vec<usize>>,
}

impl Cell {
    pub fn size(&self) -> usize {
        self.m.len()
    }
}

/// Position of a basis element in the cell structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CellPos {
    pub cell: usize,
    pub s: usize,
    pub t: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellDatum {
    cells: Vec<Cell>,
    order: Poset,
    involution: LinearMap,
    positions: Vec<CellPos>,
}

impl CellDatum {
    /// Checks that the grids index every basis element exactly once. The
    /// cellular axioms themselves are checked by [`verify_cell_datum`].
    pub fn new(
        dim: usize,
        cells: Vec<Cell>,
        order: Poset,
        involution: LinearMap,
    ) -> Result<Self, CellDatumError> {
        if order.len() != cells.len() {
            return Err(CellDatumError::PosetSize {
                expected: cells.len(),
                found: order.len(),
            });
        }
        if involution.dim() != dim {
            return Err(CellDatumError::InvolutionSize {
                expected: dim,
                found: involution.dim(),
            });
        }
        let mut positions: Vec<Option<CellPos>> = vec![None; dim];
        for (ci, c) in cells.iter().enumerate() {
            let m = c.size();
            if c.grid.len() != m || c.grid.iter().any(|r| r.len() != m) {
                return Err(CellDatumError::GridShape {
                    cell: c.label.clone(),
                    m,
                });
            }
            for (s, row) in c.grid.iter().enumerate() {
                for (t, &k) in row.iter().enumerate() {
                    if k >= dim {
                        return Err(CellDatumError::OutOfRange { index: k, dim });
                    }
                    if positions[k].is_some() {
                        return Err(CellDatumError::Duplicate(k));
                    }
                    positions[k] = Some(CellPos { cell: ci, s, t });
                }
            }
        }
        let positions = positions
            .into_iter()
            .enumerate()
            .map(|(k, p)| p.ok_or(CellDatumError::Missing(k)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CellDatum {
            cells,
            order,
            involution,
            positions,
        })
    }

    /// The involution `C_{S,T} ↦ C_{T,S}` determined by the grids.
    pub fn grid_transpose(field: Field, dim: usize, cells: &[Cell]) -> LinearMap {
        let mut images = vec![Element::zero(field, dim); dim];
        for c in cells {
            for (s, row) in c.grid.iter().enumerate() {
                for (t, &k) in row.iter().enumerate() {
                    if let Some(&j) = c.grid.get(t).and_then(|r| r.get(s)) {
                        if k < dim && j < dim {
                            images[k] = Element::basis(field, dim, j);
                        }
                    }
                }
            }
        }
        LinearMap::from_images(field, &images)
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell(&self, c: usize) -> &Cell {
        &self.cells[c]
    }

    pub fn num_cells(&self) -> usize {
        self.cells.len()
    }

    pub fn order(&self) -> &Poset {
        &self.order
    }

    pub fn involution(&self) -> &LinearMap {
        &self.involution
    }

    pub fn dim(&self) -> usize {
        self.positions.len()
    }

    /// Basis index of `C_{S,T}^λ`.
    pub fn index(&self, cell: usize, s: usize, t: usize) -> usize {
        self.cells[cell].grid[s][t]
    }

    pub fn position(&self, k: usize) -> CellPos {
        self.positions[k]
    }

    /// Index of `C_{T,S}` for `k` the index of `C_{S,T}`.
    pub fn transpose_index(&self, k: usize) -> usize {
        let p = self.positions[k];
        self.index(p.cell, p.t, p.s)
    }

    pub fn with_order(&self, order: Poset) -> CellDatum {
        assert_eq!(order.len(), self.cells.len());
        CellDatum {
            order,
            ..self.clone()
        }
    }

    pub fn with_involution(&self, involution: LinearMap) -> CellDatum {
        assert_eq!(involution.dim(), self.dim());
        CellDatum {
            involution,
            ..self.clone()
        }
    }

    /// `λ`-superscripted name such as `C[2;1,3]`.
    pub fn pos_label(&self, prefix: &str, k: usize) -> String {
        let p = self.positions[k];
        let c = &self.cells[p.cell];
        format!("{prefix}[{};{},{}]", c.label, c.m[p.s], c.m[p.t])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_by_two() -> Vec<Cell> {
        vec![Cell {
            label: "1".into(),
            m: vec!["1".into(), "2".into()],
            grid: vec![vec![0, 1], vec![2, 3]],
        }]
    }

    #[test]
    fn grid_transpose_swaps_off_diagonal() {
        let f = Field::Rational;
        let i = CellDatum::grid_transpose(f, 4, &two_by_two());
        assert_eq!(i.image_of_basis(1), Element::basis(f, 4, 2));
        assert_eq!(i.image_of_basis(0), Element::basis(f, 4, 0));
        let cd = CellDatum::new(4, two_by_two(), Poset::antichain(vec!["1".into()]), i).unwrap();
        assert_eq!(cd.transpose_index(1), 2);
        assert_eq!(cd.pos_label("C", 2), "C[1;2,1]");
    }

    #[test]
    fn duplicate_grid_entry_rejected() {
        let f = Field::Rational;
        let mut cells = two_by_two();
        cells[0].grid[1][1] = 0;
        let i = LinearMap::identity(f, 4);
        let err = CellDatum::new(4, cells, Poset::antichain(vec!["1".into()]), i);
        assert_eq!(err, Err(CellDatumError::Duplicate(0)));
    }
}
