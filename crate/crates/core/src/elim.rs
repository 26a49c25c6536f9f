//! Macaulay-type matrices `M_nu` and hybrid matrices `H_nu`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::forms::{sylvester_form, SylvesterIndex};
use crate::linalg::{check_size, Echelon, ExactMatrix};
use crate::mpoly::{basis_size, monomial_basis, Exponent, GradedStructure, MonomialBasis, MultiDegree, MultiPoly, PolySystem};
use crate::regions::{require_hybrid, NuKind, Regions};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColumnTag {
    /// The column of `multiplier * f_poly`.
    Koszul { poly: usize, multiplier: Exponent },
    Sylvester(SylvesterIndex),
}

impl fmt::Display for ColumnTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColumnTag::Koszul { poly, multiplier } => {
                let m: Vec<String> = multiplier.iter().map(ToString::to_string).collect();
                write!(f, "f{poly}*x^[{}]", m.join(","))
            }
            ColumnTag::Sylvester(idx) => write!(f, "Sylv[{idx}]"),
        }
    }
}

/// Dimensions of an elimination matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shape {
    pub rows: usize,
    pub koszul_cols: usize,
    pub sylvester_cols: usize,
}

impl Shape {
    pub fn cols(&self) -> usize {
        self.koszul_cols + self.sylvester_cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols()
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} ({} Koszul + {} Sylvester columns)", self.rows, self.cols(), self.koszul_cols, self.sylvester_cols)
    }
}

/// An elimination matrix with its row and column labels. Columns are stored
/// sparsely; [`ElimMatrix::to_dense`] materializes an [`ExactMatrix`].
#[derive(Debug, Clone)]
pub struct ElimMatrix<S> {
    nu: MultiDegree,
    rows: MonomialBasis,
    tags: Vec<ColumnTag>,
    columns: Vec<Vec<(usize, S)>>,
}

impl<S: Field> ElimMatrix<S> {
    pub fn nu(&self) -> &MultiDegree {
        &self.nu
    }

    pub fn row_basis(&self) -> &MonomialBasis {
        &self.rows
    }

    pub fn column_tags(&self) -> &[ColumnTag] {
        &self.tags
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    pub fn shape(&self) -> Shape {
        let sylvester_cols = self.tags.iter().filter(|t| matches!(t, ColumnTag::Sylvester(_))).count();
        Shape { rows: self.nrows(), koszul_cols: self.ncols() - sylvester_cols, sylvester_cols }
    }

    pub fn sparse_column(&self, j: usize) -> &[(usize, S)] {
        &self.columns[j]
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        let mut v = vec![S::zero(); self.nrows()];
        for (i, x) in &self.columns[j] {
            v[*i] = x.clone();
        }
        v
    }

    /// Nonzero entries as `(row, column, value)`, column by column.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &S)> {
        self.columns.iter().enumerate().flat_map(|(j, c)| c.iter().map(move |(i, x)| (*i, j, x)))
    }

    pub fn to_dense(&self) -> Result<ExactMatrix<S>> {
        check_size(self.nrows(), self.ncols())?;
        let mut m = ExactMatrix::zeros(self.nrows(), self.ncols());
        for (i, j, x) in self.triplets() {
            m.set(i, j, x.clone());
        }
        Ok(m)
    }

    /// Only the Koszul (Macaulay) columns.
    pub fn macaulay_block(&self) -> ElimMatrix<S> {
        let keep: Vec<usize> = (0..self.ncols()).filter(|&j| matches!(self.tags[j], ColumnTag::Koszul { .. })).collect();
        ElimMatrix {
            nu: self.nu.clone(),
            rows: self.rows.clone(),
            tags: keep.iter().map(|&j| self.tags[j].clone()).collect(),
            columns: keep.iter().map(|&j| self.columns[j].clone()).collect(),
        }
    }

    pub fn rank(&self) -> Result<usize> {
        self.to_dense()?.rank()
    }

    /// `rows - rank`.
    pub fn corank(&self) -> Result<usize> {
        Ok(self.nrows() - self.rank()?)
    }

    pub fn det(&self) -> Result<S> {
        self.to_dense()?.det()
    }

    /// An echelon basis of the column space, for repeated membership tests.
    pub fn column_space(&self) -> Result<Echelon<S>> {
        check_size(self.nrows(), self.ncols())?;
        let mut e = Echelon::new(self.nrows());
        for j in 0..self.ncols() {
            if e.is_full() {
                break;
            }
            e.insert(self.column(j));
        }
        Ok(e)
    }

    /// Coefficient vector of `p` in the row basis.
    pub fn coefficients(&self, p: &MultiPoly<S>) -> Result<Vec<S>> {
        p.coefficients_in(&self.rows)
    }

    /// Whether `p` lies in the span of the columns (for `M_nu`, whether
    /// `p` is in the ideal at degree `nu`).
    pub fn contains_poly(&self, p: &MultiPoly<S>) -> Result<bool> {
        let v = self.coefficients(p)?;
        self.to_dense()?.in_column_space(&v)
    }
}

fn sparse_column<S: Field>(p: &MultiPoly<S>, multiplier: &[u32], rows: &MonomialBasis) -> Vec<(usize, S)> {
    let mut col: Vec<(usize, S)> = p
        .terms()
        .map(|(e, c)| {
            let target: Exponent = e.iter().zip(multiplier).map(|(a, b)| a + b).collect();
            (rows.position(&target).expect("product lies in the row basis"), c.clone())
        })
        .collect();
    col.sort_by_key(|(i, _)| *i);
    col
}

/// `M_nu`: one column per polynomial `f_i` and monomial of degree
/// `nu - d_i`, grouped by polynomial.
pub fn macaulay_matrix<S: Field>(f: &PolySystem<S>, nu: &MultiDegree) -> Result<ElimMatrix<S>> {
    let layout = f.layout();
    if nu.len() != layout.r() {
        return Err(Error::DimensionMismatch(format!("nu = {nu} has {} entries, expected {}", nu.len(), layout.r())));
    }
    if !nu.is_nonneg() {
        return Err(Error::NegativeDegree(nu.clone()));
    }
    let rows = MonomialBasis::new(layout, nu);
    let mut tags = Vec::new();
    let mut columns = Vec::new();
    for (i, (p, d)) in f.polys().iter().zip(f.structure().degrees()).enumerate() {
        for m in monomial_basis(layout, &(nu - d)) {
            columns.push(sparse_column(p, &m, &rows));
            tags.push(ColumnTag::Koszul { poly: i, multiplier: m });
        }
    }
    Ok(ElimMatrix { nu: nu.clone(), rows, tags, columns })
}

/// `H_nu`: the Macaulay block followed by one column per Sylvester form of
/// degree `nu`, in monomial order of the indices.
pub fn hybrid_matrix<S: Field>(f: &PolySystem<S>, nu: &MultiDegree) -> Result<ElimMatrix<S>> {
    let s = f.structure();
    if !s.is_square_plus_one() {
        return Err(Error::InvalidStructure(format!("hybrid matrices need n + 1 = {} polynomials", s.n() + 1)));
    }
    let mu = require_hybrid(s, nu)?;
    let mut m = macaulay_matrix(f, nu)?;
    for idx in SylvesterIndex::all_with_norms(f.layout(), &mu) {
        let form = sylvester_form(f, &idx)?;
        let col = form.coefficients_in(&m.rows)?;
        m.columns.push(col.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect());
        m.tags.push(ColumnTag::Sylvester(idx));
    }
    Ok(m)
}

/// `H_nu` when `nu` is hybrid-admissible, `M_nu` otherwise.
pub fn elimination_matrix<S: Field>(f: &PolySystem<S>, nu: &MultiDegree) -> Result<ElimMatrix<S>> {
    if f.structure().is_square_plus_one() && Regions::new(f.structure()).hybrid_witness(nu).is_ok() {
        hybrid_matrix(f, nu)
    } else {
        macaulay_matrix(f, nu)
    }
}

/// Dimensions from binomial counts alone. Sylvester columns are counted when
/// `nu` is hybrid-admissible.
pub fn shape_only(s: &GradedStructure, nu: &MultiDegree) -> Shape {
    let layout = s.layout();
    let rows = basis_size(layout, nu);
    let koszul_cols = s.degrees().iter().map(|d| basis_size(layout, &(nu - d))).sum();
    let sylvester_cols = match Regions::new(s).classify(nu).kind {
        NuKind::Hybrid { mu } if s.is_square_plus_one() => basis_size(layout, &mu),
        _ => 0,
    };
    Shape { rows, koszul_cols, sylvester_cols }
}

/// Corank of [`elimination_matrix`] at `nu`.
pub fn corank<S: Field>(f: &PolySystem<S>, nu: &MultiDegree) -> Result<usize> {
    elimination_matrix(f, nu)?.corank()
}

/// The number of roots read off the corank at `nu` (by default the corner
/// of the drop-of-rank region), after checking that the corank at
/// `nu + (1, ..., 1)` agrees.
pub fn count_roots<S: Field>(f: &PolySystem<S>, nu: Option<&MultiDegree>) -> Result<usize> {
    let regions = Regions::new(f.structure());
    let nu = nu.cloned().unwrap_or_else(|| regions.drop_of_rank_corner());
    let next = &nu + &MultiDegree::splat(nu.len(), 1);
    let a = corank(f, &nu)?;
    let b = corank(f, &next)?;
    if a != b {
        return Err(Error::NotZeroDimensional { nu, corank: a, next_nu: next, next_corank: b });
    }
    Ok(a)
}

/// The three polynomials of bidegree `(m, n)` on P^1 x P^1.
pub fn dixon_structure(m: i64, n: i64) -> GradedStructure {
    GradedStructure::uniform(&[1, 1], &[m, n], 3).expect("valid bidegree")
}

/// One member of the Dixon family of elimination matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DixonDegree {
    pub nu: MultiDegree,
    pub hybrid: bool,
    pub order: usize,
    pub sylvester_cols: usize,
}

/// The square matrices of the Dixon setting: the two Macaulay matrices of
/// order `6mn`, the hybrid matrix of order `4mn`, and the intermediate
/// hybrid matrices between them.
pub fn dixon_family(m: i64, n: i64) -> Vec<DixonDegree> {
    let (mu, nu) = (m as usize, n as usize);
    let mut out = vec![
        DixonDegree { nu: MultiDegree(vec![2 * m - 1, 3 * n - 1]), hybrid: false, order: 6 * mu * nu, sylvester_cols: 0 },
        DixonDegree { nu: MultiDegree(vec![3 * m - 1, 2 * n - 1]), hybrid: false, order: 6 * mu * nu, sylvester_cols: 0 },
        DixonDegree { nu: MultiDegree(vec![2 * m - 1, 2 * n - 1]), hybrid: true, order: 4 * mu * nu, sylvester_cols: mu * nu },
    ];
    for i in 1..m {
        let iu = i as usize;
        out.push(DixonDegree {
            nu: MultiDegree(vec![2 * m - 1 + i, 2 * n - 1]),
            hybrid: true,
            order: 4 * mu * nu + 2 * iu * nu,
            sylvester_cols: (mu - iu) * nu,
        });
    }
    for j in 1..n {
        let ju = j as usize;
        out.push(DixonDegree {
            nu: MultiDegree(vec![2 * m - 1, 2 * n - 1 + j]),
            hybrid: true,
            order: 4 * mu * nu + 2 * ju * mu,
            sylvester_cols: mu * (nu - ju),
        });
    }
    out
}
