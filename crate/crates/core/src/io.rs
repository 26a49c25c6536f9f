//! JSON systems and MatrixMarket matrices.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::elim::ElimMatrix;
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::linalg::ExactMatrix;
use crate::mpoly::{GradedStructure, MultiDegree, MultiPoly, PolySystem};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    /// One exponent list per block.
    pub exps: Vec<Vec<u32>>,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub degree: Vec<i64>,
    pub terms: Vec<TermJson>,
}

impl PolyJson {
    pub fn from_poly<S: Field>(p: &MultiPoly<S>, degree: &MultiDegree) -> Self {
        let layout = p.layout();
        PolyJson {
            degree: degree.0.clone(),
            terms: p.sorted_terms().into_iter().map(|(e, c)| TermJson { exps: layout.split(e), coeff: c.to_string() }).collect(),
        }
    }

    pub fn to_string_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

/// `{"dims": [...], "field": "Q" | "Fp:<p>", "polys": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemJson {
    pub dims: Vec<usize>,
    pub field: String,
    pub polys: Vec<PolyJson>,
}

impl SystemJson {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("system JSON: {e}")))
    }

    pub fn field_spec(&self) -> Result<FieldSpec> {
        Ok(self.field.parse()?)
    }

    pub fn to_string_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// `n + 1` polynomials give a square-plus-one structure, fewer give an
    /// underdetermined one.
    pub fn structure(&self) -> Result<GradedStructure> {
        let degrees: Vec<MultiDegree> = self.polys.iter().map(|p| MultiDegree(p.degree.clone())).collect();
        let n: usize = self.dims.iter().sum();
        if degrees.len() == n + 1 {
            GradedStructure::new(&self.dims, degrees)
        } else {
            GradedStructure::underdetermined(&self.dims, degrees)
        }
    }

    /// Builds the system over `S`, which must match the declared field.
    pub fn to_system<S: Field>(&self) -> Result<PolySystem<S>> {
        let spec = self.field_spec()?;
        if spec != S::spec() {
            return Err(Error::Field(crate::field::FieldError::WrongField { expected: S::spec(), found: spec }));
        }
        let structure = self.structure()?;
        let layout = structure.layout().clone();
        let mut polys = Vec::with_capacity(self.polys.len());
        for p in &self.polys {
            let mut terms = Vec::with_capacity(p.terms.len());
            for t in &p.terms {
                terms.push((layout.join(&t.exps)?, S::parse(&t.coeff)?));
            }
            polys.push(MultiPoly::from_terms(&layout, terms));
        }
        PolySystem::new(structure, polys)
    }

    pub fn from_system<S: Field>(f: &PolySystem<S>) -> Self {
        let layout = f.layout();
        SystemJson {
            dims: layout.dims().to_vec(),
            field: S::spec().to_string(),
            polys: f
                .polys()
                .iter()
                .zip(f.structure().degrees())
                .map(|(p, d)| PolyJson::from_poly(p, d))
                .collect(),
        }
    }
}

fn matrix_market<'a, S: Field>(rows: usize, cols: usize, entries: impl Iterator<Item = (usize, usize, &'a S)> + Clone) -> String {
    let integral = entries.clone().all(|(_, _, x)| !x.to_string().contains('/'));
    let kind = if integral { "integer" } else { "rational" };
    let nnz = entries.clone().count();
    let mut out = String::new();
    writeln!(out, "%%MatrixMarket matrix coordinate {kind} general").unwrap();
    writeln!(out, "% field: {}", S::spec()).unwrap();
    writeln!(out, "{rows} {cols} {nnz}").unwrap();
    for (i, j, x) in entries {
        writeln!(out, "{} {} {x}", i + 1, j + 1).unwrap();
    }
    out
}

pub fn write_matrix_market<S: Field>(m: &ElimMatrix<S>) -> String {
    let mut t: Vec<(usize, usize, &S)> = m.triplets().collect();
    t.sort_by_key(|&(i, j, _)| (j, i));
    matrix_market::<S>(m.nrows(), m.ncols(), t.into_iter())
}

pub fn write_dense_matrix_market<S: Field>(m: &ExactMatrix<S>) -> String {
    let entries: Vec<(usize, usize, &S)> =
        (0..m.cols()).flat_map(|j| (0..m.rows()).map(move |i| (i, j))).map(|(i, j)| (i, j, m.get(i, j))).filter(|(_, _, x)| !x.is_zero()).collect();
    matrix_market::<S>(m.rows(), m.cols(), entries.into_iter())
}

/// JSON form of an elimination matrix with its row and column labels.
pub fn write_matrix_json<S: Field>(m: &ElimMatrix<S>) -> String {
    let mut entries: Vec<(usize, usize, String)> = m.triplets().map(|(i, j, x)| (i, j, x.to_string())).collect();
    entries.sort_by_key(|&(i, j, _)| (j, i));
    let value = serde_json::json!({
        "field": S::spec().to_string(),
        "nu": m.nu().0,
        "rows": m.nrows(),
        "cols": m.ncols(),
        "sylvester_cols": m.shape().sylvester_cols,
        "row_monomials": m.row_basis().monomials(),
        "columns": m.column_tags().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "entries": entries,
    });
    serde_json::to_string_pretty(&value).expect("plain data serializes")
}

/// Reads a coordinate MatrixMarket file. Entries are parsed into `S`;
/// a `% field:` comment, when present, must name `S`.
pub fn read_matrix_market<S: Field>(text: &str) -> Result<ExactMatrix<S>> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| Error::Parse("empty MatrixMarket input".into()))?;
    if !header.starts_with("%%MatrixMarket matrix coordinate") {
        return Err(Error::Parse(format!("unsupported MatrixMarket header {header:?}")));
    }
    let mut size = None;
    let mut m = None;
    let mut seen = 0;
    for line in lines {
        let line = line.trim();
        if let Some(rest) = line.strip_prefix('%') {
            if let Some(spec) = rest.trim().strip_prefix("field:") {
                let spec: FieldSpec = spec.trim().parse()?;
                if spec != S::spec() {
                    return Err(Error::Field(crate::field::FieldError::WrongField { expected: S::spec(), found: spec }));
                }
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        let bad = || Error::Parse(format!("bad MatrixMarket line {line:?}"));
        match size {
            None => {
                if parts.len() != 3 {
                    return Err(bad());
                }
                let r: usize = parts[0].parse().map_err(|_| bad())?;
                let c: usize = parts[1].parse().map_err(|_| bad())?;
                let nnz: usize = parts[2].parse().map_err(|_| bad())?;
                size = Some((r, c, nnz));
                m = Some(ExactMatrix::zeros(r, c));
            }
            Some((r, c, _)) => {
                if parts.len() != 3 {
                    return Err(bad());
                }
                let i: usize = parts[0].parse().map_err(|_| bad())?;
                let j: usize = parts[1].parse().map_err(|_| bad())?;
                if i == 0 || j == 0 || i > r || j > c {
                    return Err(bad());
                }
                m.as_mut().unwrap().set(i - 1, j - 1, S::parse(parts[2])?);
                seen += 1;
            }
        }
    }
    let (_, _, nnz) = size.ok_or_else(|| Error::Parse("missing MatrixMarket size line".into()))?;
    if seen != nnz {
        return Err(Error::Parse(format!("expected {nnz} entries, found {seen}")));
    }
    Ok(m.unwrap())
}
