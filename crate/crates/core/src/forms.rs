//! Nested decompositions, twisted Jacobians, derivative Jacobians and
//! multigraded Sylvester forms.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::mpoly::{monomial_basis, BlockLayout, Exponent, GradedStructure, MultiDegree, MultiPoly, PolySystem};

/// One multi-index `alpha_j` per block, `alpha_j` having `n_j + 1` entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SylvesterIndex {
    alphas: Vec<Vec<u32>>,
}

impl SylvesterIndex {
    pub fn zero(layout: &BlockLayout) -> Self {
        SylvesterIndex { alphas: layout.dims().iter().map(|&n| vec![0; n + 1]).collect() }
    }

    pub fn new(layout: &BlockLayout, alphas: Vec<Vec<u32>>) -> Result<Self> {
        layout.join(&alphas)?;
        Ok(SylvesterIndex { alphas })
    }

    /// Reads the index as an exponent vector (one entry per variable).
    pub fn from_exponent(layout: &BlockLayout, exp: &[u32]) -> Self {
        SylvesterIndex { alphas: layout.split(exp) }
    }

    /// Parses `"1,0;0,0"`: blocks separated by `;`.
    pub fn parse(layout: &BlockLayout, s: &str) -> Result<Self> {
        let alphas = s
            .split(';')
            .map(|b| {
                b.trim()
                    .trim_start_matches('(')
                    .trim_end_matches(')')
                    .split(',')
                    .map(|x| x.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad Sylvester index {s:?}"))))
                    .collect::<Result<Vec<u32>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(layout, alphas)
    }

    pub fn alphas(&self) -> &[Vec<u32>] {
        &self.alphas
    }

    pub fn as_exponent(&self) -> Exponent {
        self.alphas.concat()
    }

    /// `(|alpha_1|, ..., |alpha_r|)`.
    pub fn norms(&self) -> MultiDegree {
        MultiDegree(self.alphas.iter().map(|a| a.iter().map(|&x| i64::from(x)).sum()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.alphas.iter().flatten().all(|&x| x == 0)
    }

    /// Requires `|alpha_j| < min_i d_{i,j}` for every block.
    pub fn check_admissible(&self, s: &GradedStructure) -> Result<()> {
        if self.alphas.len() != s.r() || self.alphas.iter().zip(s.dims()).any(|(a, &n)| a.len() != n + 1) {
            return Err(Error::DimensionMismatch(format!("index {self} does not match dims {:?}", s.dims())));
        }
        let min = s.min_degrees();
        for (j, norm) in self.norms().0.iter().enumerate() {
            if *norm >= min[j] {
                return Err(Error::InadmissibleIndex { block: j + 1, norm: *norm as u32, min_degree: min[j] });
            }
        }
        Ok(())
    }

    /// All indices with the given block norms, in monomial order.
    pub fn all_with_norms(layout: &BlockLayout, norms: &MultiDegree) -> Vec<SylvesterIndex> {
        monomial_basis(layout, norms).iter().map(|e| Self::from_exponent(layout, e)).collect()
    }
}

impl fmt::Display for SylvesterIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> =
            self.alphas.iter().map(|a| a.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")).collect();
        write!(f, "{}", blocks.join(";"))
    }
}

/// The exponents `v_l = n_{l+1} + ... + n_r` for `l = 1..r-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistFactors {
    pub v: Vec<u32>,
}

impl TwistFactors {
    pub fn new(layout: &BlockLayout) -> Self {
        let dims = layout.dims();
        TwistFactors { v: (0..dims.len() - 1).map(|l| dims[l + 1..].iter().sum::<usize>() as u32).collect() }
    }

    /// `prod_{l<r} x_{l,n_l}^{(alpha^{(l)}_{n_l} + 1) v_l}`.
    pub fn monomial(&self, layout: &BlockLayout, idx: &SylvesterIndex) -> Exponent {
        let mut e = vec![0; layout.num_vars()];
        for (l, &v) in self.v.iter().enumerate() {
            let n = layout.dims()[l];
            e[layout.var_index(l, n)] = (idx.alphas[l][n] + 1) * v;
        }
        e
    }
}

/// Column positions `(block, bucket)`: buckets `0..n_l` for every block but
/// the last, and `0..=n_r` for the last.
pub fn column_layout(layout: &BlockLayout) -> Vec<(usize, usize)> {
    let r = layout.r();
    let mut cols = Vec::with_capacity(layout.n() + 1);
    for (l, &n) in layout.dims().iter().enumerate() {
        let count = if l + 1 == r { n + 1 } else { n };
        cols.extend((0..count).map(|j| (l, j)));
    }
    cols
}

/// `F_i = sum_c factor_c * entries[i][c]` for the nested decomposition of
/// each polynomial.
#[derive(Debug, Clone)]
pub struct DecompositionTable<S> {
    layout: Arc<BlockLayout>,
    index: SylvesterIndex,
    columns: Vec<(usize, usize)>,
    entries: Vec<Vec<MultiPoly<S>>>,
}

impl<S: Field> DecompositionTable<S> {
    pub fn index(&self) -> &SylvesterIndex {
        &self.index
    }

    pub fn columns(&self) -> &[(usize, usize)] {
        &self.columns
    }

    pub fn entries(&self) -> &[Vec<MultiPoly<S>>] {
        &self.entries
    }

    pub fn entry(&self, poly: usize, column: usize) -> &MultiPoly<S> {
        &self.entries[poly][column]
    }

    /// The monomial multiplying column `c` in the nested sum.
    pub fn column_factor(&self, c: usize) -> Exponent {
        let (l, j) = self.columns[c];
        let mut e = vec![0; self.layout.num_vars()];
        for k in 0..l {
            let n = self.layout.dims()[k];
            e[self.layout.var_index(k, n)] = self.index.alphas[k][n] + 1;
        }
        e[self.layout.var_index(l, j)] = self.index.alphas[l][j] + 1;
        e
    }

    /// Evaluates the nested sum for polynomial `i`.
    pub fn reconstruct(&self, i: usize) -> MultiPoly<S> {
        let mut acc = MultiPoly::zero(&self.layout);
        for c in 0..self.columns.len() {
            acc = &acc + &self.entries[i][c].mul_monomial(&self.column_factor(c));
        }
        acc
    }
}

/// Finds the bucket of one monomial by smallest-index routing and returns
/// the column together with the quotient exponent.
fn route(layout: &BlockLayout, cols: &[(usize, usize)], idx: &SylvesterIndex, exp: &[u32]) -> Option<(usize, Exponent)> {
    let mut q = exp.to_vec();
    let r = layout.r();
    for l in 0..r {
        let n = layout.dims()[l];
        let upper = if l + 1 == r { n } else { n - 1 };
        for j in 0..=upper {
            let v = layout.var_index(l, j);
            let need = idx.alphas[l][j] + 1;
            if q[v] >= need {
                q[v] -= need;
                let c = cols.iter().position(|&p| p == (l, j)).expect("bucket in layout");
                return Some((c, q));
            }
        }
        if l + 1 == r {
            return None;
        }
        let v = layout.var_index(l, n);
        let need = idx.alphas[l][n] + 1;
        if q[v] < need {
            return None;
        }
        q[v] -= need;
    }
    None
}

/// The canonical nested decomposition of every polynomial for `idx`.
pub fn canonical_decompose<S: Field>(f: &PolySystem<S>, idx: &SylvesterIndex) -> Result<DecompositionTable<S>> {
    idx.check_admissible(f.structure())?;
    let layout = f.layout().clone();
    let columns = column_layout(&layout);
    let mut entries = Vec::with_capacity(f.polys().len());
    for p in f.polys() {
        let mut buckets: Vec<Vec<(Exponent, S)>> = vec![Vec::new(); columns.len()];
        for (e, c) in p.terms() {
            let (col, q) = route(&layout, &columns, idx, e).expect("admissible index routes every monomial");
            buckets[col].push((q, c.clone()));
        }
        entries.push(buckets.into_iter().map(|t| MultiPoly::from_terms(&layout, t)).collect());
    }
    Ok(DecompositionTable { layout, index: idx.clone(), columns, entries })
}

/// Determinant of a square matrix of polynomials by Laplace expansion along
/// rows, memoizing minors by their column set.
pub fn poly_determinant<S: Field>(layout: &Arc<BlockLayout>, m: &[Vec<MultiPoly<S>>]) -> MultiPoly<S> {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "determinant of a non-square polynomial matrix");
    assert!(n < 32, "polynomial determinant too large");
    if n == 0 {
        return MultiPoly::constant(layout, S::one());
    }
    let mut memo: HashMap<u32, MultiPoly<S>> = HashMap::new();
    minor(layout, m, (1u32 << n) - 1, &mut memo)
}

fn minor<S: Field>(layout: &Arc<BlockLayout>, m: &[Vec<MultiPoly<S>>], cols: u32, memo: &mut HashMap<u32, MultiPoly<S>>) -> MultiPoly<S> {
    if cols == 0 {
        return MultiPoly::constant(layout, S::one());
    }
    if let Some(p) = memo.get(&cols) {
        return p.clone();
    }
    let row = m.len() - cols.count_ones() as usize;
    let mut acc = MultiPoly::zero(layout);
    let mut position = 0;
    for c in 0..m.len() {
        if cols >> c & 1 == 0 {
            continue;
        }
        let entry = &m[row][c];
        if !entry.is_zero() {
            let sub = minor(layout, m, cols & !(1 << c), memo);
            if !sub.is_zero() {
                let term = entry * &sub;
                acc = if position % 2 == 0 { &acc + &term } else { &acc - &term };
            }
        }
        position += 1;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// `Sylv_idx`: the twist monomial times the determinant of the
/// decomposition table.
pub fn sylvester_form<S: Field>(f: &PolySystem<S>, idx: &SylvesterIndex) -> Result<MultiPoly<S>> {
    let table = canonical_decompose(f, idx)?;
    let det = poly_determinant(f.layout(), table.entries());
    let twist = TwistFactors::new(f.layout()).monomial(f.layout(), idx);
    Ok(det.mul_monomial(&twist))
}

/// The twisted Jacobian `Lambda_0`, the Sylvester form of the zero index.
pub fn twisted_jacobian<S: Field>(f: &PolySystem<S>) -> MultiPoly<S> {
    sylvester_form(f, &SylvesterIndex::zero(f.layout())).expect("the zero index is always admissible")
}

/// The determinant `D` of the zero-index decomposition, without the twist.
pub fn twisted_jacobian_core<S: Field>(f: &PolySystem<S>) -> MultiPoly<S> {
    let table = canonical_decompose(f, &SylvesterIndex::zero(f.layout())).expect("the zero index is always admissible");
    poly_determinant(f.layout(), table.entries())
}

/// The derivative Jacobian: the twist monomial times the determinant whose
/// column `(l, j)` holds `d/dx_{1,n_1} ... d/dx_{l-1,n_{l-1}} d/dx_{l,j} F_i`.
/// Only defined over Q.
pub fn jacobian_determinant<S: Field>(f: &PolySystem<S>) -> Result<MultiPoly<S>> {
    if S::spec() != FieldSpec::Rationals {
        return Err(Error::UnsupportedField { required: "Q", found: S::spec() });
    }
    let layout = f.layout();
    let columns = column_layout(layout);
    let m: Vec<Vec<MultiPoly<S>>> = f
        .polys()
        .iter()
        .map(|p| {
            columns
                .iter()
                .map(|&(l, j)| {
                    let mut q = p.clone();
                    for k in 0..l {
                        q = q.derivative(k, layout.dims()[k]);
                    }
                    q.derivative(l, j)
                })
                .collect()
        })
        .collect();
    let twist = TwistFactors::new(layout).monomial(layout, &SylvesterIndex::zero(layout));
    Ok(poly_determinant(layout, &m).mul_monomial(&twist))
}

/// A reordering of blocks and of the variables inside each block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableOrder {
    /// `blocks[b]` is the original block placed at position `b`.
    pub blocks: Vec<usize>,
    /// `within[b][k]` is the original variable of block `b` placed at
    /// position `k` inside that block.
    pub within: Vec<Vec<usize>>,
}

fn is_permutation(p: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    p.len() == n && p.iter().all(|&i| i < n && !std::mem::replace(&mut seen[i], true))
}

impl VariableOrder {
    pub fn identity(layout: &BlockLayout) -> Self {
        VariableOrder { blocks: (0..layout.r()).collect(), within: layout.dims().iter().map(|&n| (0..=n).collect()).collect() }
    }

    pub fn validate(&self, layout: &BlockLayout) -> Result<()> {
        let ok = is_permutation(&self.blocks, layout.r())
            && self.within.len() == layout.r()
            && self.within.iter().zip(layout.dims()).all(|(w, &n)| is_permutation(w, n + 1));
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidStructure("invalid variable permutation".into()))
        }
    }
}

/// The twisted Jacobian computed after reordering variables and
/// polynomials, mapped back to the original variables. `polys[i]` is the
/// original polynomial placed at position `i`.
pub fn order_variant_jacobian<S: Field>(f: &PolySystem<S>, order: &VariableOrder, polys: &[usize]) -> Result<MultiPoly<S>> {
    let layout = f.layout();
    order.validate(layout)?;
    if !is_permutation(polys, f.polys().len()) {
        return Err(Error::InvalidStructure("invalid polynomial permutation".into()));
    }
    let dims: Vec<usize> = order.blocks.iter().map(|&b| layout.dims()[b]).collect();
    let new_layout = BlockLayout::new(&dims)?;
    let mut to_new = vec![0; layout.num_vars()];
    for (nb, &ob) in order.blocks.iter().enumerate() {
        for (nk, &ok) in order.within[ob].iter().enumerate() {
            to_new[layout.var_index(ob, ok)] = new_layout.var_index(nb, nk);
        }
    }
    let mut to_old = vec![0; layout.num_vars()];
    for (o, &n) in to_new.iter().enumerate() {
        to_old[n] = o;
    }
    let degrees: Vec<MultiDegree> = polys
        .iter()
        .map(|&i| MultiDegree(order.blocks.iter().map(|&b| f.structure().degrees()[i][b]).collect()))
        .collect();
    let structure = GradedStructure::new(&dims, degrees)?;
    let new_polys = polys.iter().map(|&i| f.polys()[i].relabel(structure.layout(), &to_new)).collect();
    let g = PolySystem::new(structure, new_polys)?;
    Ok(twisted_jacobian(&g).relabel(layout, &to_old))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational, DEFAULT_PRIME};
    use crate::mpoly::random_system;
    use crate::regions::critical_degree;
    use proptest::prelude::*;

    type F = Fp<DEFAULT_PRIME>;

    fn md(v: &[i64]) -> MultiDegree {
        MultiDegree(v.to_vec())
    }

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    #[test]
    fn univariate_quadratic_buckets() {
        let s = GradedStructure::new(&[1], vec![md(&[2]), md(&[2])]).unwrap();
        let l = s.layout().clone();
        let (a, b, c) = (q(2), q(3), q(5));
        let f0 = MultiPoly::from_terms(&l, vec![(vec![2, 0], a.clone()), (vec![1, 1], b.clone()), (vec![0, 2], c.clone())]);
        let f1 = MultiPoly::from_terms(&l, vec![(vec![0, 2], q(1))]);
        let f = PolySystem::new(s, vec![f0, f1]).unwrap();
        let t = canonical_decompose(&f, &SylvesterIndex::zero(&l)).unwrap();
        let bucket0 = MultiPoly::from_terms(&l, vec![(vec![1, 0], a), (vec![0, 1], b)]);
        let bucket1 = MultiPoly::from_terms(&l, vec![(vec![0, 1], c)]);
        assert_eq!(t.entry(0, 0), &bucket0);
        assert_eq!(t.entry(0, 1), &bucket1);
    }

    #[test]
    fn shifted_index_routes_high_powers_to_bucket_zero() {
        let s = GradedStructure::new(&[1], vec![md(&[3]), md(&[3])]).unwrap();
        let f = random_system::<F>(&s, 5);
        let idx = SylvesterIndex::new(s.layout(), vec![vec![1, 0]]).unwrap();
        let t = canonical_decompose(&f, &idx).unwrap();
        for (e, coeff) in f.polys()[0].terms() {
            let expected_col = if e[0] >= 2 { 0 } else { 1 };
            let mut quotient = e.clone();
            quotient[expected_col] -= if expected_col == 0 { 2 } else { 1 };
            assert_eq!(&t.entry(0, expected_col).coeff(&quotient), coeff);
        }
    }

    #[test]
    fn inadmissible_index_names_the_block() {
        let s = GradedStructure::uniform(&[1, 1], &[2, 2], 3).unwrap();
        let f = random_system::<F>(&s, 1);
        let idx = SylvesterIndex::parse(s.layout(), "0,0;1,1").unwrap();
        assert_eq!(sylvester_form(&f, &idx), Err(Error::InadmissibleIndex { block: 2, norm: 2, min_degree: 2 }));
    }

    #[test]
    fn index_parsing_round_trips() {
        let l = BlockLayout::new(&[2, 1]).unwrap();
        let idx = SylvesterIndex::parse(&l, "1,0,0;0,1").unwrap();
        assert_eq!(idx.to_string(), "1,0,0;0,1");
        assert_eq!(idx.norms(), md(&[1, 1]));
        assert!(SylvesterIndex::parse(&l, "1,0;0,1").is_err());
        assert_eq!(SylvesterIndex::all_with_norms(&l, &md(&[1, 0])).len(), 3);
    }

    #[test]
    fn twist_factors() {
        let l = BlockLayout::new(&[2, 3, 1]).unwrap();
        assert_eq!(TwistFactors::new(&l).v, vec![4, 1]);
        let l = BlockLayout::new(&[2]).unwrap();
        assert!(TwistFactors::new(&l).v.is_empty());
    }

    #[test]
    fn sylvester_form_degree() {
        let s = GradedStructure::uniform(&[1, 1], &[2, 2], 3).unwrap();
        let f = random_system::<F>(&s, 3);
        let idx = SylvesterIndex::parse(s.layout(), "1,0;0,0").unwrap();
        let form = sylvester_form(&f, &idx).unwrap();
        assert_eq!(form.multidegree(), Some(md(&[3, 4])));
    }

    #[test]
    fn twisted_jacobian_core_degree_on_p2xp2() {
        let s = GradedStructure::uniform(&[2, 2], &[3, 3], 5).unwrap();
        let f = random_system::<F>(&s, 9);
        let d = twisted_jacobian_core(&f);
        assert_eq!(d.multidegree(), Some(md(&[10, 12])));
    }

    #[test]
    fn linear_forms_on_a_line() {
        // r = 1, n = 1, degrees (1, 1): the Jacobian is the 2x2 coefficient determinant
        let s = GradedStructure::new(&[1], vec![md(&[1]), md(&[1])]).unwrap();
        let l = s.layout().clone();
        let f0 = MultiPoly::from_terms(&l, vec![(vec![1, 0], q(2)), (vec![0, 1], q(3))]);
        let f1 = MultiPoly::from_terms(&l, vec![(vec![1, 0], q(5)), (vec![0, 1], q(7))]);
        let f = PolySystem::new(s, vec![f0, f1]).unwrap();
        assert_eq!(twisted_jacobian(&f), MultiPoly::constant(&l, q(2 * 7 - 3 * 5)));
        assert_eq!(jacobian_determinant(&f).unwrap(), MultiPoly::constant(&l, q(-1)));
    }

    #[test]
    fn derivative_jacobian_requires_rationals() {
        let s = GradedStructure::uniform(&[1, 1], &[1, 1], 3).unwrap();
        let f = random_system::<F>(&s, 1);
        assert!(matches!(jacobian_determinant(&f), Err(Error::UnsupportedField { .. })));
        let g = random_system::<Rational>(&s, 1);
        assert_eq!(jacobian_determinant(&g).unwrap().multidegree(), Some(critical_degree(&s)));
    }

    #[test]
    fn identity_order_reproduces_twisted_jacobian() {
        let s = GradedStructure::uniform(&[1, 2], &[1, 2], 4).unwrap();
        let f = random_system::<F>(&s, 2);
        let id = VariableOrder::identity(s.layout());
        assert_eq!(order_variant_jacobian(&f, &id, &[0, 1, 2, 3]).unwrap(), twisted_jacobian(&f));
        let bad = VariableOrder { blocks: vec![0, 0], within: id.within.clone() };
        assert!(order_variant_jacobian(&f, &bad, &[0, 1, 2, 3]).is_err());
        assert!(order_variant_jacobian(&f, &id, &[0, 1, 1, 3]).is_err());
    }

    #[test]
    fn swapping_polynomials_negates_the_determinant() {
        let s = GradedStructure::uniform(&[1, 1], &[2, 1], 3).unwrap();
        let f = random_system::<F>(&s, 8);
        let id = VariableOrder::identity(s.layout());
        let swapped = order_variant_jacobian(&f, &id, &[1, 0, 2]).unwrap();
        assert_eq!(swapped, -&twisted_jacobian(&f));
    }

    #[test]
    fn determinant_of_scalar_matrix() {
        let l = Arc::new(BlockLayout::new(&[1]).unwrap());
        let c = |v: i64| MultiPoly::constant(&l, q(v));
        let m = vec![vec![c(2), c(0), c(1)], vec![c(1), c(3), c(0)], vec![c(0), c(1), c(4)]];
        // 2*(12 - 0) - 0 + 1*(1 - 0) = 25
        assert_eq!(poly_determinant(&l, &m), c(25));
    }

    fn structure_and_index() -> impl Strategy<Value = (GradedStructure, Vec<u32>, u64)> {
        let dims = proptest::collection::vec(1usize..=2, 1..=2);
        dims.prop_flat_map(|dims| {
            let r = dims.len();
            let n: usize = dims.iter().sum();
            let nvars = n + r;
            (
                Just(dims),
                proptest::collection::vec(proptest::collection::vec(1i64..=3, r), n + 1),
                proptest::collection::vec(0u32..3, nvars),
                any::<u64>(),
            )
        })
        .prop_filter_map("admissible index", |(dims, degs, raw, seed)| {
            let s = GradedStructure::new(&dims, degs.into_iter().map(MultiDegree).collect()).ok()?;
            let min = s.min_degrees();
            let mut alpha = raw;
            // shrink each block until its norm fits under the minimum degree
            for j in 0..s.r() {
                let range = s.layout().block_vars(j);
                while alpha[range.clone()].iter().sum::<u32>() as i64 >= min[j] {
                    let k = range.clone().find(|&k| alpha[k] > 0)?;
                    alpha[k] -= 1;
                }
            }
            Some((s, alpha, seed))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn reconstruction_identity((s, alpha, seed) in structure_and_index()) {
            let f = random_system::<F>(&s, seed);
            let idx = SylvesterIndex::from_exponent(s.layout(), &alpha);
            let t = canonical_decompose(&f, &idx).unwrap();
            for i in 0..f.polys().len() {
                prop_assert_eq!(&t.reconstruct(i), &f.polys()[i]);
            }
        }

        #[test]
        fn sylvester_degree_law((s, alpha, seed) in structure_and_index()) {
            let f = random_system::<F>(&s, seed);
            let idx = SylvesterIndex::from_exponent(s.layout(), &alpha);
            let form = sylvester_form(&f, &idx).unwrap();
            let expected = &critical_degree(&s) - &idx.norms();
            prop_assert!(form.is_homogeneous_of(&expected));
            prop_assert!(!form.is_zero());
        }

        #[test]
        fn multilinear_in_each_polynomial((s, alpha, seed) in structure_and_index(), k in 0usize..8, c in 2u64..1000) {
            let f = random_system::<F>(&s, seed);
            let k = k % f.polys().len();
            let idx = SylvesterIndex::from_exponent(s.layout(), &alpha);
            let mut polys = f.polys().to_vec();
            polys[k] = polys[k].scale(&F::new(c));
            let g = PolySystem::new(s.clone(), polys).unwrap();
            prop_assert_eq!(sylvester_form(&g, &idx).unwrap(), sylvester_form(&f, &idx).unwrap().scale(&F::new(c)));
        }
    }
}
