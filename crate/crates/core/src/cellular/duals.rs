use super::{CellDatum, CellStructureConstants};
use crate::algebra::{Algebra, Element};
use crate::frobenius::DualData;
use crate::scalar::Scalar;

/// Dual bases reindexed by cell labels.
///
/// `d[k]` is `d_{S,T}^λ` and `big_d[k]` is `D_{S,T}^λ` where `k` is the basis
/// index of `C_{S,T}^λ`. With `τ(C_{S,T} d_{U,V}) = δ_{SV} δ_{TU}` (same cell),
/// `d_{S,T}` is the plain right dual of `C_{T,S}`; likewise for `D`.
#[derive(Debug, Clone)]
pub struct CellDuals {
    pub d: Vec<Element>,
    pub big_d: Vec<Element>,
    /// `D_p D_q = Σ_r rr[p][q][r] D_r`.
    pub rr: Vec<Vec<Vec<Scalar>>>,
}

impl CellDuals {
    /// Coordinates of `z` in the cell-indexed `D` basis.
    pub fn d_upper_coords(&self, cd: &CellDatum, dd: &DualData, z: &Element) -> Vec<Scalar> {
        let raw = dd.left_dual_coords(z);
        (0..cd.dim())
            .map(|r| raw[cd.transpose_index(r)].clone())
            .collect()
    }

    /// Coordinates of `z` in the cell-indexed `d` basis.
    pub fn d_lower_coords(&self, cd: &CellDatum, dd: &DualData, z: &Element) -> Vec<Scalar> {
        let raw = dd.right_dual_coords(z);
        (0..cd.dim())
            .map(|r| raw[cd.transpose_index(r)].clone())
            .collect()
    }
}

/// Reindexes the dual bases and checks both δ-conditions and the shared
/// product constants of `d` and `D`. Errors list the failures.
pub fn dual_cell_tables(
    alg: &Algebra,
    cd: &CellDatum,
    dd: &DualData,
) -> Result<CellDuals, Vec<String>> {
    let n = alg.dim();
    let f = alg.field();
    let d: Vec<Element> = (0..n)
        .map(|k| dd.right_dual(cd.transpose_index(k)))
        .collect();
    let big_d: Vec<Element> = (0..n)
        .map(|k| dd.left_dual(cd.transpose_index(k)))
        .collect();
    let mut bad = Vec::new();
    for p in 0..n {
        for q in 0..n {
            let cq = alg.basis_element(q);
            // τ(D_p C_q) = 1 iff q is the transpose of p
            let want = if q == cd.transpose_index(p) {
                f.one()
            } else {
                f.zero()
            };
            if dd.pairing(&big_d[p], &cq) != want {
                bad.push(format!(
                    "τ({}·{}) != {want}",
                    cd.pos_label("D", p),
                    cd.pos_label("C", q)
                ));
            }
            if dd.pairing(&cq, &d[p]) != want {
                bad.push(format!(
                    "τ({}·{}) != {want}",
                    cd.pos_label("C", q),
                    cd.pos_label("d", p)
                ));
            }
        }
    }
    let mut duals = CellDuals {
        d,
        big_d,
        rr: Vec::new(),
    };
    let mut rr = vec![Vec::with_capacity(n); n];
    for p in 0..n {
        for q in 0..n {
            let prod = alg.mul(&duals.big_d[p], &duals.big_d[q]);
            let coords = duals.d_upper_coords(cd, dd, &prod);
            // the same constants govern d_p d_q
            let mut expect = Element::zero(f, n);
            for (r, c) in coords.iter().enumerate() {
                expect.add_scaled(c, &duals.d[r]);
            }
            if alg.mul(&duals.d[p], &duals.d[q]) != expect {
                bad.push(format!(
                    "{}·{} is not governed by the constants of {}·{}",
                    cd.pos_label("d", p),
                    cd.pos_label("d", q),
                    cd.pos_label("D", p),
                    cd.pos_label("D", q)
                ));
            }
            rr[p].push(coords);
        }
    }
    duals.rr = rr;
    if bad.is_empty() {
        Ok(duals)
    } else {
        Err(bad)
    }
}

/// All twelve dual-basis identities for a valid cell datum. Messages are
/// prefixed with the item number, e.g. `(4)`.
pub fn verify_lemma_3_2(
    alg: &Algebra,
    cd: &CellDatum,
    dd: &DualData,
    csc: &CellStructureConstants,
    duals: &CellDuals,
) -> Vec<String> {
    let n = alg.dim();
    let f = alg.field();
    let order = cd.order();
    let tr = |k: usize| cd.transpose_index(k);
    let pos = |k: usize| cd.position(k);
    let c = |k: usize| alg.basis_element(k);
    let mut out = Vec::new();

    // right factor -> [(left factor i, coeff)] for each target k: rinv[j][k] = [(i, r_ijk)]
    let mut by_target: Vec<Vec<Vec<(usize, Scalar)>>> = vec![vec![Vec::new(); n]; n];
    for (i, j, terms) in alg.entries() {
        for (k, r) in terms {
            by_target[j][*k].push((i, r.clone()));
        }
    }
    // left factor -> target -> [(right factor j, coeff)]
    let mut by_left: Vec<Vec<Vec<(usize, Scalar)>>> = vec![vec![Vec::new(); n]; n];
    for (i, j, terms) in alg.entries() {
        for (k, r) in terms {
            by_left[i][*k].push((j, r.clone()));
        }
    }

    let dc: Vec<Vec<Element>> = (0..n)
        .map(|p| (0..n).map(|q| alg.mul(&duals.big_d[p], &c(q))).collect())
        .collect();
    let cdl: Vec<Vec<Element>> = (0..n)
        .map(|q| (0..n).map(|p| alg.mul(&c(q), &duals.d[p])).collect())
        .collect();

    for p in 0..n {
        for q in 0..n {
            // (1) D_p C_q = Σ_r r_{q, tr(r), tr(p)} D_r
            let mut e1 = Element::zero(f, n);
            for (j, coef) in &by_left[q][tr(p)] {
                e1.add_scaled(coef, &duals.big_d[tr(*j)]);
            }
            if dc[p][q] != e1 {
                out.push(format!(
                    "(1) {}·{}",
                    cd.pos_label("D", p),
                    cd.pos_label("C", q)
                ));
            }
            // (2) D_p C_q = Σ_r R_{tr(r), p, tr(q)} C_r
            let mut e2 = Element::zero(f, n);
            for r in 0..n {
                e2.add_scaled(&duals.rr[tr(r)][p][tr(q)], &c(r));
            }
            if dc[p][q] != e2 {
                out.push(format!(
                    "(2) {}·{}",
                    cd.pos_label("D", p),
                    cd.pos_label("C", q)
                ));
            }
            // (7) C_q d_p = Σ_r r_{tr(r), q, tr(p)} d_r
            let mut e7 = Element::zero(f, n);
            for (i, coef) in &by_target[q][tr(p)] {
                e7.add_scaled(coef, &duals.d[tr(*i)]);
            }
            if cdl[q][p] != e7 {
                out.push(format!(
                    "(7) {}·{}",
                    cd.pos_label("C", q),
                    cd.pos_label("d", p)
                ));
            }
            // (8) C_q d_p = Σ_r R_{p, tr(r), tr(q)} C_r
            let mut e8 = Element::zero(f, n);
            for r in 0..n {
                e8.add_scaled(&duals.rr[p][tr(r)][tr(q)], &c(r));
            }
            if cdl[q][p] != e8 {
                out.push(format!(
                    "(8) {}·{}",
                    cd.pos_label("C", q),
                    cd.pos_label("d", p)
                ));
            }

            let (pp, pq) = (pos(p), pos(q));
            // (4) D_{P,Q} C_{S,T} = 0 if Q != S;  (10) C_{S,T} d_{P,Q} = 0 if T != P
            if pp.cell == pq.cell {
                if pp.t != pq.s && !dc[p][q].is_zero() {
                    out.push(format!(
                        "(4) {}·{} != 0",
                        cd.pos_label("D", p),
                        cd.pos_label("C", q)
                    ));
                }
                if pq.t != pp.s && !cdl[q][p].is_zero() {
                    out.push(format!(
                        "(10) {}·{} != 0",
                        cd.pos_label("C", q),
                        cd.pos_label("d", p)
                    ));
                }
            }
            // (5), (11): vanish unless μ ≤ λ
            if !order.le(pp.cell, pq.cell) {
                if !dc[p][q].is_zero() {
                    out.push(format!(
                        "(5) {}·{} != 0",
                        cd.pos_label("D", p),
                        cd.pos_label("C", q)
                    ));
                }
                if !cdl[q][p].is_zero() {
                    out.push(format!(
                        "(11) {}·{} != 0",
                        cd.pos_label("C", q),
                        cd.pos_label("d", p)
                    ));
                }
            }
        }
    }

    // (6) D_{T,S} C_{S,Q} independent of S;  (12) C_{S,T} d_{T,P} independent of T
    for (ci, cell) in cd.cells().iter().enumerate() {
        let m = cell.size();
        for t in 0..m {
            for q in 0..m {
                let base = &dc[cd.index(ci, t, 0)][cd.index(ci, 0, q)];
                for s in 1..m {
                    if &dc[cd.index(ci, t, s)][cd.index(ci, s, q)] != base {
                        out.push(format!(
                            "(6) cell {}: D[{},{}]C[{},{}] != D[{},{}]C[{},{}]",
                            cell.label,
                            cell.m[t],
                            cell.m[s],
                            cell.m[s],
                            cell.m[q],
                            cell.m[t],
                            cell.m[0],
                            cell.m[0],
                            cell.m[q]
                        ));
                    }
                }
                let base = &cdl[cd.index(ci, t, 0)][cd.index(ci, 0, q)];
                for s in 1..m {
                    if &cdl[cd.index(ci, t, s)][cd.index(ci, s, q)] != base {
                        out.push(format!(
                            "(12) cell {}: C[{},{}]d[{},{}] != C[{},{}]d[{},{}]",
                            cell.label,
                            cell.m[t],
                            cell.m[s],
                            cell.m[s],
                            cell.m[q],
                            cell.m[t],
                            cell.m[0],
                            cell.m[0],
                            cell.m[q]
                        ));
                    }
                }
            }
        }
    }

    // (3) a D_{U,V} ≡ Σ_{U'} r_{i(α⁻¹(a))}(U,U') D_{U',V}  mod A_D(>μ)
    // (9) d_{U,V} a ≡ Σ_{V'} r_{α(a)}(V,V') d_{U,V'}      mod A_d(>μ)
    let alpha_inv = dd.alpha_inverse();
    for k in 0..n {
        let a = c(k);
        let x3 = cd.involution().apply(&alpha_inv.apply(&a));
        let x9 = dd.nakayama.apply(&a);
        for (mu, cell) in cd.cells().iter().enumerate() {
            let r3 = csc.r_of(&x3, mu);
            let r9 = csc.r_of(&x9, mu);
            let m = cell.size();
            for u in 0..m {
                for v in 0..m {
                    let p = cd.index(mu, u, v);
                    let mut diff3 = alg.mul(&a, &duals.big_d[p]);
                    let mut diff9 = alg.mul(&duals.d[p], &a);
                    for w in 0..m {
                        diff3.add_scaled(&-r3.get(u, w), &duals.big_d[cd.index(mu, w, v)]);
                        diff9.add_scaled(&-r9.get(v, w), &duals.d[cd.index(mu, u, w)]);
                    }
                    let co3 = duals.d_upper_coords(cd, dd, &diff3);
                    let co9 = duals.d_lower_coords(cd, dd, &diff9);
                    for r in 0..n {
                        let eps = pos(r).cell;
                        if order.lt(mu, eps) {
                            continue;
                        }
                        if !co3[r].is_zero() {
                            out.push(format!(
                                "(3) {}·{} has coefficient {} on {}",
                                alg.label(k),
                                cd.pos_label("D", p),
                                co3[r],
                                cd.pos_label("D", r)
                            ));
                        }
                        if !co9[r].is_zero() {
                            out.push(format!(
                                "(9) {}·{} has coefficient {} on {}",
                                cd.pos_label("d", p),
                                alg.label(k),
                                co9[r],
                                cd.pos_label("d", r)
                            ));
                        }
                    }
                }
            }
        }
    }
    out
}
