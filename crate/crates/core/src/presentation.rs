//! Path algebras of finite quivers modulo homogeneous admissible relations.
//!
//! The quotient is computed degree by degree. At each degree the candidate
//! monomials are `n·b` with `n` a normal word one degree lower and `b` an
//! arrow; the ideal slice in that degree is spanned by the normal forms of
//! `b·(c - NF(c))` for non-normal candidates `c` one degree lower, together
//! with the relations of that degree. Leading words are the largest in
//! degree-then-lexicographic order (lexicographic by arrow declaration
//! index), so normal words are the smallest surviving ones. The process
//! stops at the first degree with no normal words.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError, TableEntry};
use crate::linalg::Matrix;
use crate::scalar::{Field, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("unknown vertex or arrow {0:?}")]
    UnknownName(String),
    #[error("duplicate vertex or arrow name {0:?}")]
    DuplicateName(String),
    #[error("relation {relation} has an empty path")]
    EmptyPath { relation: usize },
    #[error("relation {relation}: path {path} is not composable")]
    NotComposable { relation: usize, path: String },
    #[error("relation {relation}: paths do not share endpoints")]
    NotParallel { relation: usize },
    #[error("relation {relation} is not homogeneous in path length")]
    Inhomogeneous { relation: usize },
    #[error("relation {relation}: coefficient is over {found}, expected {expected}")]
    FieldMismatch {
        relation: usize,
        expected: Field,
        found: Field,
    },
    #[error("paths of length {bound} do not all vanish; surviving: {}", surviving.join(", "))]
    NotNilpotentAtBound {
        bound: usize,
        surviving: Vec<String>,
    },
    #[error("relations kill every vertex; the quotient is zero")]
    Inconsistent,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Order in which a written path is read.
///
/// With `LeftToRight`, `ab` means "first `a`, then `b`", so the target of `a`
/// must be the source of `b`. With `RightToLeft`, `ab` means "first `b`".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Composition {
    #[default]
    LeftToRight,
    RightToLeft,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A vertex idempotent or a non-empty word in the arrows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Path {
    Vertex(usize),
    Arrows(Vec<usize>),
}

impl Path {
    pub fn degree(&self) -> usize {
        match self {
            Path::Vertex(_) => 0,
            Path::Arrows(w) => w.len(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Path, Scalar)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverPresentation {
    pub field: Field,
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
    pub max_degree: usize,
    pub composition: Composition,
}

/// Algebra produced from a presentation, with the normal word behind each
/// basis element.
#[derive(Debug, Clone)]
pub struct BuiltAlgebra {
    pub algebra: Algebra,
    pub paths: Vec<Path>,
}

pub const DEFAULT_MAX_DEGREE: usize = 8;

impl QuiverPresentation {
    pub fn new(field: Field, vertices: Vec<String>, arrows: Vec<Arrow>) -> Self {
        QuiverPresentation {
            field,
            vertices,
            arrows,
            relations: Vec::new(),
            max_degree: DEFAULT_MAX_DEGREE,
            composition: Composition::LeftToRight,
        }
    }

    /// Resolves a written path. A single vertex name gives the idempotent;
    /// otherwise every name must be an arrow.
    pub fn parse_path<S: AsRef<str>>(&self, names: &[S]) -> Result<Path, PresentationError> {
        if let [single] = names {
            if let Some(v) = self.vertices.iter().position(|x| x == single.as_ref()) {
                return Ok(Path::Vertex(v));
            }
        }
        let mut w = Vec::with_capacity(names.len());
        for n in names {
            let n = n.as_ref();
            let a = self
                .arrows
                .iter()
                .position(|x| x.name == n)
                .ok_or_else(|| PresentationError::UnknownName(n.to_string()))?;
            w.push(a);
        }
        Ok(Path::Arrows(w))
    }

    pub fn path_label(&self, p: &Path) -> String {
        self.path_label_with(p, "")
    }

    fn path_label_with(&self, p: &Path, sep: &str) -> String {
        match p {
            Path::Vertex(v) => self.vertices[*v].clone(),
            Path::Arrows(w) => w
                .iter()
                .map(|&a| self.arrows[a].name.as_str())
                .collect::<Vec<_>>()
                .join(sep),
        }
    }

    fn arrow_left(&self, a: usize) -> usize {
        match self.composition {
            Composition::LeftToRight => self.arrows[a].source,
            Composition::RightToLeft => self.arrows[a].target,
        }
    }

    fn arrow_right(&self, a: usize) -> usize {
        match self.composition {
            Composition::LeftToRight => self.arrows[a].target,
            Composition::RightToLeft => self.arrows[a].source,
        }
    }

    /// Left and right endpoints of a composable path.
    fn ends(&self, p: &Path) -> Option<(usize, usize)> {
        match p {
            Path::Vertex(v) => Some((*v, *v)),
            Path::Arrows(w) => {
                let first = *w.first()?;
                for pair in w.windows(2) {
                    if self.arrow_right(pair[0]) != self.arrow_left(pair[1]) {
                        return None;
                    }
                }
                Some((self.arrow_left(first), self.arrow_right(*w.last()?)))
            }
        }
    }

    /// Product of composable paths, or `None` if the endpoints do not meet.
    fn concat(&self, p: &Path, q: &Path) -> Option<Path> {
        let (_, pr) = self.ends(p)?;
        let (ql, _) = self.ends(q)?;
        if pr != ql {
            return None;
        }
        Some(match (p, q) {
            (Path::Vertex(_), _) => q.clone(),
            (_, Path::Vertex(_)) => p.clone(),
            (Path::Arrows(a), Path::Arrows(b)) => {
                let mut w = a.clone();
                w.extend_from_slice(b);
                Path::Arrows(w)
            }
        })
    }

    fn validate(&self) -> Result<(), PresentationError> {
        let mut seen = std::collections::HashSet::new();
        for name in self
            .vertices
            .iter()
            .chain(self.arrows.iter().map(|a| &a.name))
        {
            if !seen.insert(name.as_str()) {
                return Err(PresentationError::DuplicateName(name.clone()));
            }
        }
        for a in &self.arrows {
            for v in [a.source, a.target] {
                if v >= self.vertices.len() {
                    return Err(PresentationError::UnknownName(format!("vertex #{v}")));
                }
            }
        }
        for (ri, rel) in self.relations.iter().enumerate() {
            let mut degree = None;
            let mut ends = None;
            for (p, c) in &rel.terms {
                if c.field() != self.field {
                    return Err(PresentationError::FieldMismatch {
                        relation: ri,
                        expected: self.field,
                        found: c.field(),
                    });
                }
                if let Path::Arrows(w) = p {
                    if w.is_empty() {
                        return Err(PresentationError::EmptyPath { relation: ri });
                    }
                }
                let e = self
                    .ends(p)
                    .ok_or_else(|| PresentationError::NotComposable {
                        relation: ri,
                        path: self.path_label_with(p, "·"),
                    })?;
                if *ends.get_or_insert(e) != e {
                    return Err(PresentationError::NotParallel { relation: ri });
                }
                if *degree.get_or_insert(p.degree()) != p.degree() {
                    return Err(PresentationError::Inhomogeneous { relation: ri });
                }
            }
        }
        Ok(())
    }

    pub fn build(&self) -> Result<BuiltAlgebra, PresentationError> {
        self.validate()?;
        let mut b = Builder {
            p: self,
            slices: Vec::new(),
            memo: HashMap::new(),
        };
        b.run()?;
        b.into_algebra()
    }
}

type Sparse = Vec<(usize, Scalar)>;

struct Slice {
    candidates: Vec<Path>,
    cand_index: HashMap<Path, usize>,
    /// Candidate indices of the normal words, ascending.
    normals: Vec<usize>,
    /// Normal form of each candidate, over `normals` positions.
    nf: Vec<Sparse>,
}

struct Builder<'a> {
    p: &'a QuiverPresentation,
    slices: Vec<Slice>,
    memo: HashMap<Path, Sparse>,
}

impl Builder<'_> {
    fn field(&self) -> Field {
        self.p.field
    }

    /// Expresses a composable path of degree `k` over the candidates of
    /// degree `k` (slices below `k` must be final).
    fn to_candidates(&mut self, path: &Path, cands: &HashMap<Path, usize>) -> Sparse {
        match path {
            Path::Vertex(_) => vec![(cands[path], self.field().one())],
            Path::Arrows(w) => {
                let last = *w.last().expect("non-empty word");
                let prefix = if w.len() == 1 {
                    Path::Vertex(self.p.arrow_left(last))
                } else {
                    Path::Arrows(w[..w.len() - 1].to_vec())
                };
                let pre = self.nf(&prefix);
                let k = prefix.degree();
                let mut acc: HashMap<usize, Scalar> = HashMap::new();
                for (ni, c) in pre {
                    let n = &self.slices[k].candidates[self.slices[k].normals[ni]];
                    if let Some(q) = self.p.concat(n, &Path::Arrows(vec![last])) {
                        let ci = cands[&q];
                        let e = acc.entry(ci).or_insert_with(|| self.p.field.zero());
                        *e += &c;
                    }
                }
                let mut out: Sparse = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                out.sort_by_key(|(i, _)| *i);
                out
            }
        }
    }

    /// Normal form over the normal words of the path's degree; zero beyond
    /// the computed slices.
    fn nf(&mut self, path: &Path) -> Sparse {
        let k = path.degree();
        if k >= self.slices.len() {
            return Vec::new();
        }
        if let Some(v) = self.memo.get(path) {
            return v.clone();
        }
        let cands = self.slices[k].cand_index.clone();
        let over_cands = self.to_candidates(path, &cands);
        let mut acc: HashMap<usize, Scalar> = HashMap::new();
        for (ci, c) in over_cands {
            for (ni, d) in &self.slices[k].nf[ci] {
                let e = acc.entry(*ni).or_insert_with(|| self.p.field.zero());
                *e += &(&c * d);
            }
        }
        let mut out: Sparse = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        out.sort_by_key(|(i, _)| *i);
        self.memo.insert(path.clone(), out.clone());
        out
    }

    fn finish_slice(&mut self, candidates: Vec<Path>, generators: Vec<Vec<Scalar>>) {
        let m = candidates.len();
        let f = self.field();
        // reversed columns: larger words come first and become pivots
        let rows: Vec<Vec<Scalar>> = generators
            .into_iter()
            .map(|g| (0..m).map(|j| g[m - 1 - j].clone()).collect())
            .collect();
        let (r, pivots) = if rows.is_empty() {
            (Matrix::zeros(f, 0, m), Vec::new())
        } else {
            Matrix::from_rows(f, m, rows).rref()
        };
        let pivot_cands: Vec<usize> = pivots.iter().map(|&c| m - 1 - c).collect();
        let mut is_pivot = vec![false; m];
        for &c in &pivot_cands {
            is_pivot[c] = true;
        }
        let normals: Vec<usize> = (0..m).filter(|&c| !is_pivot[c]).collect();
        let normal_pos: HashMap<usize, usize> =
            normals.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut nf: Vec<Sparse> = vec![Vec::new(); m];
        for (&c, &ni) in &normal_pos {
            nf[c] = vec![(ni, f.one())];
        }
        for (row, &c) in pivot_cands.iter().enumerate() {
            let mut s: Sparse = Vec::new();
            for &n in &normals {
                let v = r.get(row, m - 1 - n);
                if !v.is_zero() {
                    s.push((normal_pos[&n], -v));
                }
            }
            s.sort_by_key(|(i, _)| *i);
            nf[c] = s;
        }
        let cand_index = candidates
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        self.slices.push(Slice {
            candidates,
            cand_index,
            normals,
            nf,
        });
    }

    fn relation_rows(
        &mut self,
        degree: usize,
        cands: &HashMap<Path, usize>,
        m: usize,
    ) -> Vec<Vec<Scalar>> {
        let f = self.field();
        let rels: Vec<Relation> = self
            .p
            .relations
            .iter()
            .filter(|r| r.terms.first().is_some_and(|(p, _)| p.degree() == degree))
            .cloned()
            .collect();
        let mut rows = Vec::new();
        for rel in rels {
            let mut row = vec![f.zero(); m];
            for (path, c) in &rel.terms {
                for (ci, d) in self.to_candidates(path, cands) {
                    row[ci] += &(c * &d);
                }
            }
            rows.push(row);
        }
        rows
    }

    fn run(&mut self) -> Result<(), PresentationError> {
        let f = self.field();
        let nv = self.p.vertices.len();
        let c0: Vec<Path> = (0..nv).map(Path::Vertex).collect();
        let idx0: HashMap<Path, usize> = c0
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let rows = self.relation_rows(0, &idx0, nv);
        self.finish_slice(c0, rows);
        if self.slices[0].normals.is_empty() {
            return Err(PresentationError::Inconsistent);
        }
        for k in 1..=self.p.max_degree {
            let prev = &self.slices[k - 1];
            let prev_normals: Vec<Path> = prev
                .normals
                .iter()
                .map(|&c| prev.candidates[c].clone())
                .collect();
            let mut cands = Vec::new();
            for n in &prev_normals {
                for a in 0..self.p.arrows.len() {
                    if let Some(q) = self.p.concat(n, &Path::Arrows(vec![a])) {
                        cands.push(q);
                    }
                }
            }
            cands.sort();
            cands.dedup();
            let m = cands.len();
            let idx: HashMap<Path, usize> = cands
                .iter()
                .cloned()
                .enumerate()
                .map(|(i, p)| (p, i))
                .collect();

            let mut rows = Vec::new();
            // arrows times the degree-(k-1) ideal slice
            let prev = &self.slices[k - 1];
            let mut ideal_prev: Vec<Vec<(Path, Scalar)>> = Vec::new();
            for (ci, cand) in prev.candidates.iter().enumerate() {
                if prev.normals.binary_search(&ci).is_ok() {
                    continue;
                }
                let mut v = vec![(cand.clone(), f.one())];
                for (ni, c) in &prev.nf[ci] {
                    v.push((prev.candidates[prev.normals[*ni]].clone(), -c));
                }
                ideal_prev.push(v);
            }
            for gen in &ideal_prev {
                for a in 0..self.p.arrows.len() {
                    let mut row = vec![f.zero(); m];
                    let mut any = false;
                    for (x, c) in gen {
                        if let Some(q) = self.p.concat(&Path::Arrows(vec![a]), x) {
                            for (ci, d) in self.to_candidates(&q, &idx) {
                                row[ci] += &(c * &d);
                                any = true;
                            }
                        }
                    }
                    if any && row.iter().any(|s| !s.is_zero()) {
                        rows.push(row);
                    }
                }
            }
            rows.extend(self.relation_rows(k, &idx, m));
            self.finish_slice(cands, rows);
            if self.slices[k].normals.is_empty() {
                return Ok(());
            }
        }
        let last = self.slices.last().expect("at least one slice");
        let surviving = last
            .normals
            .iter()
            .map(|&c| self.p.path_label(&last.candidates[c]))
            .collect();
        Err(PresentationError::NotNilpotentAtBound {
            bound: self.p.max_degree,
            surviving,
        })
    }

    fn into_algebra(mut self) -> Result<BuiltAlgebra, PresentationError> {
        let f = self.field();
        let mut basis: Vec<Path> = Vec::new();
        let mut offset = Vec::new();
        for s in &self.slices {
            offset.push(basis.len());
            basis.extend(s.normals.iter().map(|&c| s.candidates[c].clone()));
        }
        let mut labels: Vec<String> = basis.iter().map(|p| self.p.path_label(p)).collect();
        let mut uniq = labels.clone();
        uniq.sort();
        uniq.dedup();
        if uniq.len() != labels.len() {
            labels = basis
                .iter()
                .map(|p| self.p.path_label_with(p, "·"))
                .collect();
        }
        let mut entries: Vec<TableEntry> = Vec::new();
        for (i, p) in basis.iter().enumerate() {
            for (j, q) in basis.iter().enumerate() {
                let Some(pq) = self.p.concat(p, q) else {
                    continue;
                };
                let d = pq.degree();
                let nf = self.nf(&pq);
                if nf.is_empty() {
                    continue;
                }
                let terms = nf.into_iter().map(|(ni, c)| (offset[d] + ni, c)).collect();
                entries.push((i, j, terms));
            }
        }
        let mut unit = vec![f.zero(); basis.len()];
        for (i, p) in basis.iter().enumerate() {
            if matches!(p, Path::Vertex(_)) {
                unit[i] = f.one();
            }
        }
        let algebra = Algebra::new(f, labels, entries, unit)?;
        Ok(BuiltAlgebra {
            algebra,
            paths: basis,
        })
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Composition::LeftToRight => "left-to-right",
            Composition::RightToLeft => "right-to-left",
        })
    }
}
