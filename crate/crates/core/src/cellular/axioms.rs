use std::fmt;

use super::{CellDatum, Poset, PosetError};
use crate::algebra::{Algebra, Element};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    C1,
    C2,
    C3,
    C3Prime,
    /// `span{C^μ : μ ≤ λ}` is a two-sided ideal.
    Chain,
    /// `Φ(T,U)` does not depend on `S` and `V`.
    Phi,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::C1 => "C1",
            Axiom::C2 => "C2",
            Axiom::C3 => "C3",
            Axiom::C3Prime => "C3'",
            Axiom::Chain => "chain",
            Axiom::Phi => "Phi",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellViolation {
    pub axiom: Axiom,
    pub message: String,
}

impl fmt::Display for CellViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) {}", self.axiom, self.message)
    }
}

/// Constants extracted from a valid cell datum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellStructureConstants {
    /// `r[k][λ]` has entry `(S', S)` equal to `r_{a_k}(S', S)`.
    pub r: Vec<Vec<Matrix>>,
    /// `phi[λ]` has entry `(T, U)` equal to `Φ(T, U)`.
    pub phi: Vec<Matrix>,
}

impl CellStructureConstants {
    /// `r_x` on cell `λ`, by linearity in `x`.
    pub fn r_of(&self, x: &Element, cell: usize) -> Matrix {
        let m0 = &self.r[0][cell];
        let f = m0.field();
        let mut out = Matrix::zeros(f, m0.rows(), m0.cols());
        for (k, c) in x.coords().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let rk = &self.r[k][cell];
            for i in 0..rk.rows() {
                for j in 0..rk.cols() {
                    let v = rk.get(i, j);
                    if !v.is_zero() {
                        let cur = out.get(i, j) + &(c * v);
                        out.set(i, j, cur);
                    }
                }
            }
        }
        out
    }
}

struct Checker<'a> {
    alg: &'a Algebra,
    cd: &'a CellDatum,
    out: Vec<CellViolation>,
}

impl Checker<'_> {
    fn push(&mut self, axiom: Axiom, message: String) {
        self.out.push(CellViolation { axiom, message });
    }

    fn c(&self, k: usize) -> String {
        self.cd.pos_label("C", k)
    }

    fn label(&self, k: usize) -> &str {
        self.alg.label(k)
    }

    fn c1(&mut self) {
        let total: usize = self.cd.cells().iter().map(|c| c.size() * c.size()).sum();
        if total != self.alg.dim() {
            self.push(
                Axiom::C1,
                format!("Σ|M(λ)|² = {total} but dim A = {}", self.alg.dim()),
            );
        }
    }

    fn c2(&mut self) {
        let i = self.cd.involution();
        let n = self.alg.dim();
        if !i.compose(i).is_identity() {
            self.push(Axiom::C2, "i² != id".into());
        }
        for (p, q) in i.anti_multiplicativity_defects(self.alg) {
            self.push(
                Axiom::C2,
                format!(
                    "i({}·{}) != i({})·i({})",
                    self.label(p),
                    self.label(q),
                    self.label(q),
                    self.label(p)
                ),
            );
        }
        for k in 0..n {
            let want = Element::basis(self.alg.field(), n, self.cd.transpose_index(k));
            if i.image_of_basis(k) != want {
                let got = self.alg.format_element(&i.image_of_basis(k));
                self.push(
                    Axiom::C2,
                    format!(
                        "i({}) = {got}, expected {} = {}",
                        self.c(k),
                        self.c(self.cd.transpose_index(k)),
                        self.label(self.cd.transpose_index(k))
                    ),
                );
            }
        }
    }

    /// Same-cell part of `x` as `(S', T', coeff)` and the cells touched
    /// outside `λ`.
    fn split(&self, x: &Element, cell: usize) -> (Vec<(usize, usize, Scalar)>, Vec<usize>) {
        let mut same = Vec::new();
        let mut other = Vec::new();
        for (m, c) in x.coords().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = self.cd.position(m);
            if p.cell == cell {
                same.push((p.s, p.t, c.clone()));
            } else if !other.contains(&p.cell) {
                other.push(p.cell);
            }
        }
        (same, other)
    }

    fn c3(&mut self) -> Vec<Vec<Matrix>> {
        let n = self.alg.dim();
        let f = self.alg.field();
        let order = self.cd.order().clone();
        let mut r_all = Vec::with_capacity(n);
        for k in 0..n {
            let a = self.alg.basis_element(k);
            let mut per_cell = Vec::with_capacity(self.cd.num_cells());
            for (ci, cell) in self.cd.cells().iter().enumerate() {
                let m = cell.size();
                let mut r0 = Matrix::zeros(f, m, m);
                for t in 0..m {
                    let mut rt = Matrix::zeros(f, m, m);
                    for s in 0..m {
                        let idx = self.cd.index(ci, s, t);
                        let prod = self.alg.mul(&a, &self.alg.basis_element(idx));
                        let (same, other) = self.split(&prod, ci);
                        for (s2, t2, c) in same {
                            if t2 != t {
                                self.push(
                                    Axiom::C3,
                                    format!(
                                        "{}·{} has coefficient {c} on {}; column index changed",
                                        self.label(k),
                                        self.c(idx),
                                        self.c(self.cd.index(ci, s2, t2))
                                    ),
                                );
                            } else {
                                rt.set(s2, s, c);
                            }
                        }
                        for mu in other {
                            if !order.lt(mu, ci) {
                                self.push(
                                    Axiom::C3,
                                    format!(
                                        "{}·{} has a component in cell {}, which is not below {}",
                                        self.label(k),
                                        self.c(idx),
                                        self.cd.cell(mu).label,
                                        cell.label
                                    ),
                                );
                            }
                        }
                    }
                    if t == 0 {
                        r0 = rt;
                    } else if rt != r0 {
                        for s2 in 0..m {
                            for s in 0..m {
                                if rt.get(s2, s) != r0.get(s2, s) {
                                    self.push(
                                        Axiom::C3,
                                        format!(
                                            "r_{}({},{}) depends on T: {} for T={}, {} for T={}",
                                            self.label(k),
                                            cell.m[s2],
                                            cell.m[s],
                                            r0.get(s2, s),
                                            cell.m[0],
                                            rt.get(s2, s),
                                            cell.m[t]
                                        ),
                                    );
                                }
                            }
                        }
                    }
                }
                per_cell.push(r0);
            }
            r_all.push(per_cell);
        }
        r_all
    }

    fn c3_prime(&mut self, r: &[Vec<Matrix>]) {
        let n = self.alg.dim();
        let order = self.cd.order().clone();
        for k in 0..n {
            let ia = self.cd.involution().image_of_basis(k);
            for (ci, cell) in self.cd.cells().iter().enumerate() {
                let m = cell.size();
                for t in 0..m {
                    for s in 0..m {
                        // C_{T,S} i(a) ≡ Σ_{S'} r_a(S',S) C_{T,S'}
                        let idx = self.cd.index(ci, t, s);
                        let prod = self.alg.mul(&self.alg.basis_element(idx), &ia);
                        let (same, other) = self.split(&prod, ci);
                        let mut got = vec![self.alg.field().zero(); m];
                        for (t2, s2, c) in same {
                            if t2 != t {
                                self.push(
                                    Axiom::C3Prime,
                                    format!(
                                        "{}·i({}) has a component on {}; row index changed",
                                        self.c(idx),
                                        self.label(k),
                                        self.c(self.cd.index(ci, t2, s2))
                                    ),
                                );
                            } else {
                                got[s2] = c;
                            }
                        }
                        for (s2, g) in got.iter().enumerate() {
                            if g != r[k][ci].get(s2, s) {
                                self.push(
                                    Axiom::C3Prime,
                                    format!(
                                        "{}·i({}) has coefficient {g} on {}, expected r = {}",
                                        self.c(idx),
                                        self.label(k),
                                        self.c(self.cd.index(ci, t, s2)),
                                        r[k][ci].get(s2, s)
                                    ),
                                );
                            }
                        }
                        for mu in other {
                            if !order.lt(mu, ci) {
                                self.push(
                                    Axiom::C3Prime,
                                    format!(
                                        "{}·i({}) has a component in cell {}, which is not below {}",
                                        self.c(idx),
                                        self.label(k),
                                        self.cd.cell(mu).label,
                                        cell.label
                                    ),
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    fn chain(&mut self) {
        let n = self.alg.dim();
        let order = self.cd.order().clone();
        for k in 0..n {
            let a = self.alg.basis_element(k);
            for idx in 0..n {
                let lam = self.cd.position(idx).cell;
                let c = self.alg.basis_element(idx);
                for (side, prod) in [
                    ("left", self.alg.mul(&a, &c)),
                    ("right", self.alg.mul(&c, &a)),
                ] {
                    for (m, v) in prod.coords().iter().enumerate() {
                        let mu = self.cd.position(m).cell;
                        if !v.is_zero() && !order.le(mu, lam) {
                            self.push(
                                Axiom::Chain,
                                format!(
                                    "{side} product of {} with {} leaves the ideal below cell {} (hits {})",
                                    self.c(idx),
                                    self.label(k),
                                    self.cd.cell(lam).label,
                                    self.c(m)
                                ),
                            );
                        }
                    }
                }
            }
        }
    }

    fn phi(&mut self) -> Vec<Matrix> {
        let f = self.alg.field();
        let mut out = Vec::new();
        for (ci, cell) in self.cd.cells().iter().enumerate() {
            let m = cell.size();
            let mut phi = Matrix::zeros(f, m, m);
            for t in 0..m {
                for u in 0..m {
                    let mut first: Option<Scalar> = None;
                    for s in 0..m {
                        for v in 0..m {
                            let p = self.alg.mul(
                                &self.alg.basis_element(self.cd.index(ci, s, t)),
                                &self.alg.basis_element(self.cd.index(ci, u, v)),
                            );
                            let c = p.coeff(self.cd.index(ci, s, v)).clone();
                            match &first {
                                None => first = Some(c),
                                Some(c0) if *c0 != c => self.push(
                                    Axiom::Phi,
                                    format!(
                                        "cell {}: Φ({},{}) is {c0} for S=V={} but {c} for S={}, V={}",
                                        cell.label, cell.m[t], cell.m[u], cell.m[0], cell.m[s], cell.m[v]
                                    ),
                                ),
                                _ => {}
                            }
                        }
                    }
                    phi.set(t, u, first.expect("non-empty cell"));
                }
            }
            out.push(phi);
        }
        out
    }
}

/// Checks C1, C2, C3 (with the literal "independent of T" quantifier), C3′,
/// the ideal chain and the well-definedness of Φ.
pub fn verify_cell_datum(
    alg: &Algebra,
    cd: &CellDatum,
) -> Result<CellStructureConstants, Vec<CellViolation>> {
    assert_eq!(
        alg.dim(),
        cd.dim(),
        "cell datum dimension differs from algebra"
    );
    let mut ch = Checker {
        alg,
        cd,
        out: Vec::new(),
    };
    ch.c1();
    ch.c2();
    let r = ch.c3();
    ch.c3_prime(&r);
    ch.chain();
    let phi = ch.phi();
    if ch.out.is_empty() {
        Ok(CellStructureConstants { r, phi })
    } else {
        Err(ch.out)
    }
}

/// `{λ : Φ^λ != 0}`.
pub fn lambda_zero(csc: &CellStructureConstants) -> Vec<usize> {
    csc.phi
        .iter()
        .enumerate()
        .filter(|(_, p)| !p.is_zero())
        .map(|(i, _)| i)
        .collect()
}

/// The least order extending `hint` in which every product involving `C^λ`
/// with a component in cell `μ ≠ λ` has `μ < λ`. Errors on a cycle.
pub fn forced_order(alg: &Algebra, cd: &CellDatum, hint: &Poset) -> Result<Poset, PosetError> {
    let n = alg.dim();
    let mut forced = Vec::new();
    for k in 0..n {
        let a = alg.basis_element(k);
        for idx in 0..n {
            let lam = cd.position(idx).cell;
            let c = alg.basis_element(idx);
            for prod in [alg.mul(&a, &c), alg.mul(&c, &a)] {
                for (m, v) in prod.coords().iter().enumerate() {
                    let mu = cd.position(m).cell;
                    if !v.is_zero() && mu != lam && !forced.contains(&(mu, lam)) {
                        forced.push((mu, lam));
                    }
                }
            }
        }
    }
    hint.extended(&forced)
}

/// Finds an order extending `hint` under which the datum is cellular.
///
/// Only the "lands below λ" parts of the axioms depend on the order, so the
/// least candidate is [`forced_order`]. If that order fails, every linear
/// extension of `hint` fails as well.
pub fn search_poset(
    alg: &Algebra,
    cd: &CellDatum,
    hint: &Poset,
) -> Option<(Poset, CellStructureConstants)> {
    let order = forced_order(alg, cd, hint).ok()?;
    let cd2 = cd.with_order(order.clone());
    verify_cell_datum(alg, &cd2).ok().map(|c| (order, c))
}
