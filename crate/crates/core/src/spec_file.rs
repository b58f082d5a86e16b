//! JSON formats for algebras (structure constants) and quiver presentations.
//!
//! Coefficients are strings (`"1"`, `"-1/2"`, `"lambda"`, `"-lambda"`,
//! `"lambda^-1"`); plain JSON integers are accepted too. Dumps always use
//! canonical scalar strings with parameters substituted.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize};
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError, Element, LinearMap, TableEntry};
use crate::cellular::{Cell, CellDatum, CellDatumError, Poset, PosetError};
use crate::frobenius::TraceForm;
use crate::linalg::Matrix;
use crate::presentation::{
    Arrow, Composition, Path, PresentationError, QuiverPresentation, Relation, DEFAULT_MAX_DEGREE,
};
use crate::scalar::{Bindings, Field, Scalar, ScalarError};

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed spec: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Cells(#[from] CellDatumError),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error("unknown basis label {label:?} in {context}")]
    UnknownLabel { context: String, label: String },
    #[error("`dim` is {declared} but {found} basis labels are listed")]
    Dim { declared: usize, found: usize },
    #[error("parameter override {0:?} does not name a declared parameter")]
    UnknownOverride(String),
    #[error("invalid involution: {0}")]
    Involution(String),
    #[error("invalid composition {0:?} (expected left-to-right or right-to-left)")]
    Composition(String),
}

/// A coefficient as written in a spec file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Coeff(pub String);

impl<'de> Deserialize<'de> for Coeff {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        Ok(match Raw::deserialize(d)? {
            Raw::Int(i) => Coeff(i.to_string()),
            Raw::Text(s) => Coeff(s),
        })
    }
}

impl From<&Scalar> for Coeff {
    fn from(s: &Scalar) -> Self {
        Coeff(s.to_string())
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetSpec {
    pub elements: Vec<String>,
    /// `[lower, upper]` pairs; the order is their transitive closure.
    #[serde(default)]
    pub covers: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartSpec {
    pub label: String,
    pub m: Vec<String>,
    pub grid: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum InvolutionSpec {
    /// `"grid_transpose"`
    Named(String),
    /// `matrix[r][c]` is the coefficient of basis `r` in the image of basis `c`.
    Matrix { matrix: Vec<Vec<Coeff>> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CellSpec {
    pub poset: PosetSpec,
    pub parts: Vec<PartSpec>,
    pub involution: InvolutionSpec,
}

pub type TableRow = (String, String, Vec<(String, Coeff)>);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub field: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, Coeff>,
    /// Parameter name to forbidden values.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub constraints: BTreeMap<String, Vec<Coeff>>,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: BTreeMap<String, Coeff>,
    pub table: Vec<TableRow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<BTreeMap<String, Coeff>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cells: Option<CellSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowSpec {
    pub name: String,
    pub src: String,
    pub dst: String,
}

/// One relation: a list of `[path, coefficient]` terms, where a path is a
/// list of arrow names or a single vertex name.
pub type RelationSpec = Vec<(Vec<String>, Coeff)>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverSpec {
    pub field: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, Coeff>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub constraints: BTreeMap<String, Vec<Coeff>>,
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowSpec>,
    #[serde(default)]
    pub relations: Vec<RelationSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub composition: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<BTreeMap<String, Coeff>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cells: Option<CellSpec>,
}

/// Overrides applied while loading.
#[derive(Debug, Clone, Default)]
pub struct LoadOptions {
    pub field: Option<Field>,
    pub params: Vec<(String, String)>,
    pub max_degree: Option<usize>,
}

/// A loaded algebra with its optional trace and cell datum.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub algebra: Algebra,
    pub trace: Option<TraceForm>,
    pub cells: Option<CellDatum>,
    pub bindings: Bindings,
    pub constraints: BTreeMap<String, Vec<Scalar>>,
}

/// Either kind of spec file, distinguished by the presence of `arrows`.
#[derive(Debug, Clone)]
pub enum AnySpec {
    Algebra(AlgebraSpec),
    Quiver(QuiverSpec),
}

impl AnySpec {
    pub fn from_json(text: &str) -> Result<AnySpec, SpecError> {
        let v: serde_json::Value = serde_json::from_str(text)?;
        if v.get("arrows").is_some() {
            Ok(AnySpec::Quiver(serde_json::from_value(v)?))
        } else {
            Ok(AnySpec::Algebra(serde_json::from_value(v)?))
        }
    }

    pub fn read(path: &std::path::Path) -> Result<AnySpec, SpecError> {
        let text = std::fs::read_to_string(path).map_err(|source| SpecError::Io {
            path: path.display().to_string(),
            source,
        })?;
        AnySpec::from_json(&text)
    }

    pub fn load(&self, opts: &LoadOptions) -> Result<Loaded, SpecError> {
        match self {
            AnySpec::Algebra(a) => a.load(opts),
            AnySpec::Quiver(q) => q.load(opts),
        }
    }
}

fn bind_params(
    field_text: &str,
    params: &BTreeMap<String, Coeff>,
    constraints: &BTreeMap<String, Vec<Coeff>>,
    opts: &LoadOptions,
) -> Result<(Bindings, BTreeMap<String, Vec<Scalar>>), SpecError> {
    let field = match opts.field {
        Some(f) => f,
        None => field_text.parse()?,
    };
    for (name, _) in &opts.params {
        if !params.contains_key(name) {
            return Err(SpecError::UnknownOverride(name.clone()));
        }
    }
    let mut b = Bindings::new(field);
    let mut cons = BTreeMap::new();
    for (name, default) in params {
        let text = opts
            .params
            .iter()
            .rev()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v.as_str())
            .unwrap_or(&default.0);
        let value = field.parse(text)?;
        let forbidden = constraints
            .get(name)
            .map(|fs| {
                fs.iter()
                    .map(|c| field.parse(&c.0))
                    .collect::<Result<Vec<_>, _>>()
            })
            .transpose()?
            .unwrap_or_default();
        b.bind(name, value, &forbidden)?;
        cons.insert(name.clone(), forbidden);
    }
    Ok((b, cons))
}

fn lookup(
    alg_labels: &BTreeMap<&str, usize>,
    label: &str,
    context: &str,
) -> Result<usize, SpecError> {
    alg_labels
        .get(label)
        .copied()
        .ok_or_else(|| SpecError::UnknownLabel {
            context: context.into(),
            label: label.into(),
        })
}

fn label_map(labels: &[String]) -> BTreeMap<&str, usize> {
    labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i))
        .collect()
}

fn vector_from_map(
    labels: &[String],
    map: &BTreeMap<String, Coeff>,
    b: &Bindings,
    context: &str,
) -> Result<Vec<Scalar>, SpecError> {
    let idx = label_map(labels);
    let mut v = vec![b.field().zero(); labels.len()];
    for (l, c) in map {
        let i = lookup(&idx, l, context)?;
        v[i] = b.parse(&c.0)?;
    }
    Ok(v)
}

fn load_trace_and_cells(
    alg: &Algebra,
    trace: &Option<BTreeMap<String, Coeff>>,
    cells: &Option<CellSpec>,
    b: &Bindings,
) -> Result<(Option<TraceForm>, Option<CellDatum>), SpecError> {
    let tau = trace
        .as_ref()
        .map(|t| vector_from_map(alg.labels(), t, b, "trace").map(TraceForm::new))
        .transpose()?;
    let cd = cells.as_ref().map(|c| load_cells(alg, c, b)).transpose()?;
    Ok((tau, cd))
}

fn load_cells(alg: &Algebra, spec: &CellSpec, b: &Bindings) -> Result<CellDatum, SpecError> {
    let n = alg.dim();
    let idx = label_map(alg.labels());
    let order = Poset::from_named_relations(spec.poset.elements.clone(), &spec.poset.covers)?;
    let mut cells = Vec::new();
    for el in &spec.poset.elements {
        let part = spec
            .parts
            .iter()
            .find(|p| &p.label == el)
            .ok_or_else(|| PosetError::Unknown(el.clone()))?;
        let grid = part
            .grid
            .iter()
            .map(|row| {
                row.iter()
                    .map(|l| lookup(&idx, l, &format!("cell {}", part.label)))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        cells.push(Cell {
            label: part.label.clone(),
            m: part.m.clone(),
            grid,
        });
    }
    if spec.parts.len() != cells.len() {
        let extra = spec
            .parts
            .iter()
            .find(|p| !spec.poset.elements.contains(&p.label))
            .map(|p| p.label.clone())
            .unwrap_or_default();
        return Err(PosetError::Unknown(extra).into());
    }
    let involution = match &spec.involution {
        InvolutionSpec::Named(s) if s == "grid_transpose" => {
            for c in &cells {
                if c.grid.len() != c.m.len() || c.grid.iter().any(|r| r.len() != c.m.len()) {
                    return Err(CellDatumError::GridShape {
                        cell: c.label.clone(),
                        m: c.m.len(),
                    }
                    .into());
                }
            }
            CellDatum::grid_transpose(alg.field(), n, &cells)
        }
        InvolutionSpec::Named(s) => {
            return Err(SpecError::Involution(format!("unknown name {s:?}")))
        }
        InvolutionSpec::Matrix { matrix } => {
            if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
                return Err(SpecError::Involution(format!("matrix must be {n}x{n}")));
            }
            let rows = matrix
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|c| b.parse(&c.0))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            LinearMap::from_matrix(Matrix::from_rows(alg.field(), n, rows))
        }
    };
    Ok(CellDatum::new(n, cells, order, involution)?)
}

impl AlgebraSpec {
    pub fn load(&self, opts: &LoadOptions) -> Result<Loaded, SpecError> {
        let (b, constraints) = bind_params(&self.field, &self.params, &self.constraints, opts)?;
        if self.dim != self.basis.len() {
            return Err(SpecError::Dim {
                declared: self.dim,
                found: self.basis.len(),
            });
        }
        let idx = label_map(&self.basis);
        let mut entries: Vec<TableEntry> = Vec::new();
        for (l, r, terms) in &self.table {
            let i = lookup(&idx, l, "table")?;
            let j = lookup(&idx, r, "table")?;
            let mut ts = Vec::new();
            for (k, c) in terms {
                ts.push((lookup(&idx, k, "table")?, b.parse(&c.0)?));
            }
            entries.push((i, j, ts));
        }
        let unit = vector_from_map(&self.basis, &self.unit, &b, "unit")?;
        let algebra = Algebra::new(b.field(), self.basis.clone(), entries, unit)?;
        let (trace, cells) = load_trace_and_cells(&algebra, &self.trace, &self.cells, &b)?;
        Ok(Loaded {
            algebra,
            trace,
            cells,
            bindings: b,
            constraints,
        })
    }
}

impl QuiverSpec {
    pub fn presentation(
        &self,
        b: &Bindings,
        opts: &LoadOptions,
    ) -> Result<QuiverPresentation, SpecError> {
        let vidx = |name: &str| {
            self.vertices
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| PresentationError::UnknownName(name.to_string()))
        };
        let arrows = self
            .arrows
            .iter()
            .map(|a| {
                Ok(Arrow {
                    name: a.name.clone(),
                    source: vidx(&a.src)?,
                    target: vidx(&a.dst)?,
                })
            })
            .collect::<Result<Vec<_>, PresentationError>>()?;
        let mut p = QuiverPresentation::new(b.field(), self.vertices.clone(), arrows);
        p.max_degree = opts
            .max_degree
            .or(self.max_degree)
            .unwrap_or(DEFAULT_MAX_DEGREE);
        p.composition = match self.composition.as_deref() {
            None | Some("left-to-right") => Composition::LeftToRight,
            Some("right-to-left") => Composition::RightToLeft,
            Some(other) => return Err(SpecError::Composition(other.into())),
        };
        for rel in &self.relations {
            let mut terms: Vec<(Path, Scalar)> = Vec::new();
            for (path, c) in rel {
                terms.push((p.parse_path(path)?, b.parse(&c.0)?));
            }
            p.relations.push(Relation { terms });
        }
        Ok(p)
    }

    pub fn load(&self, opts: &LoadOptions) -> Result<Loaded, SpecError> {
        let (b, constraints) = bind_params(&self.field, &self.params, &self.constraints, opts)?;
        let p = self.presentation(&b, opts)?;
        let built = p.build()?;
        let (trace, cells) = load_trace_and_cells(&built.algebra, &self.trace, &self.cells, &b)?;
        Ok(Loaded {
            algebra: built.algebra,
            trace,
            cells,
            bindings: b,
            constraints,
        })
    }
}

/// Materializes a loaded algebra as a structure-constant spec.
pub fn dump(loaded: &Loaded) -> AlgebraSpec {
    let alg = &loaded.algebra;
    let labels = alg.labels();
    let f = alg.field();
    let map_of = |v: &[Scalar]| -> BTreeMap<String, Coeff> {
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (labels[i].clone(), Coeff::from(c)))
            .collect()
    };
    let table = alg
        .entries()
        .map(|(i, j, terms)| {
            (
                labels[i].clone(),
                labels[j].clone(),
                terms
                    .iter()
                    .map(|(k, c)| (labels[*k].clone(), Coeff::from(c)))
                    .collect(),
            )
        })
        .collect();
    let params = loaded
        .bindings
        .bindings()
        .into_iter()
        .map(|pb| (pb.name, Coeff::from(&pb.value)))
        .collect();
    let constraints = loaded
        .constraints
        .iter()
        .filter(|(_, v)| !v.is_empty())
        .map(|(k, v)| (k.clone(), v.iter().map(Coeff::from).collect()))
        .collect();
    let cells = loaded.cells.as_ref().map(|cd| {
        let grid_t = CellDatum::grid_transpose(f, alg.dim(), cd.cells());
        let involution = if &grid_t == cd.involution() {
            InvolutionSpec::Named("grid_transpose".into())
        } else {
            let m = cd.involution().matrix();
            InvolutionSpec::Matrix {
                matrix: (0..m.rows())
                    .map(|r| m.row(r).iter().map(Coeff::from).collect())
                    .collect(),
            }
        };
        let order = cd.order();
        CellSpec {
            poset: PosetSpec {
                elements: order.labels().to_vec(),
                covers: order
                    .covers()
                    .into_iter()
                    .map(|(a, b)| (order.labels()[a].clone(), order.labels()[b].clone()))
                    .collect(),
            },
            parts: cd
                .cells()
                .iter()
                .map(|c| PartSpec {
                    label: c.label.clone(),
                    m: c.m.clone(),
                    grid: c
                        .grid
                        .iter()
                        .map(|r| r.iter().map(|&k| labels[k].clone()).collect())
                        .collect(),
                })
                .collect(),
            involution,
        }
    });
    AlgebraSpec {
        field: f.to_string(),
        params,
        constraints,
        dim: alg.dim(),
        basis: labels.to_vec(),
        unit: map_of(alg.unit().coords()),
        table,
        trace: loaded.trace.as_ref().map(|t| map_of(t.values())),
        cells,
    }
}

pub fn to_json_pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("spec types serialize");
    s.push('\n');
    s
}

/// Element given as a label → coefficient map.
pub fn element_from_map(
    alg: &Algebra,
    map: &BTreeMap<String, Coeff>,
    b: &Bindings,
) -> Result<Element, SpecError> {
    Ok(Element::from_coords(vector_from_map(
        alg.labels(),
        map,
        b,
        "element",
    )?))
}
