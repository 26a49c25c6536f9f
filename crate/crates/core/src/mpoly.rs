//! Sparse multihomogeneous polynomials in `r` blocks of variables.
//!
//! Block `j` (0-based here, printed 1-based) holds the variables
//! `x{j+1}_0 .. x{j+1}_{n_j}`. Exponent vectors are stored densely, one entry
//! per variable, blocks concatenated in order.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Range, Sub};
use std::str::FromStr;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;

pub type Exponent = Vec<u32>;

/// The shape of the variable set: block sizes `n_j + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockLayout {
    dims: Vec<usize>,
    offsets: Vec<usize>,
}

impl BlockLayout {
    pub fn new(dims: &[usize]) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::InvalidStructure("at least one projective factor is required".into()));
        }
        if let Some(j) = dims.iter().position(|&n| n == 0) {
            return Err(Error::InvalidStructure(format!("factor {} has dimension 0", j + 1)));
        }
        let mut offsets = Vec::with_capacity(dims.len() + 1);
        let mut acc = 0;
        for &n in dims {
            offsets.push(acc);
            acc += n + 1;
        }
        offsets.push(acc);
        Ok(BlockLayout { dims: dims.to_vec(), offsets })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Number of projective factors `r`.
    pub fn r(&self) -> usize {
        self.dims.len()
    }

    /// Total dimension `n = n_1 + ... + n_r`.
    pub fn n(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn num_vars(&self) -> usize {
        self.offsets[self.dims.len()]
    }

    pub fn block_vars(&self, block: usize) -> Range<usize> {
        self.offsets[block]..self.offsets[block + 1]
    }

    pub fn var_index(&self, block: usize, k: usize) -> usize {
        assert!(k <= self.dims[block], "variable x{}_{k} out of range", block + 1);
        self.offsets[block] + k
    }

    pub fn var_name(&self, var: usize) -> String {
        let block = (0..self.r()).find(|&b| self.block_vars(b).contains(&var)).expect("variable in range");
        format!("x{}_{}", block + 1, var - self.offsets[block])
    }

    pub fn block_degrees(&self, exp: &[u32]) -> Vec<u32> {
        (0..self.r()).map(|b| exp[self.block_vars(b)].iter().sum()).collect()
    }

    pub fn multidegree_of(&self, exp: &[u32]) -> MultiDegree {
        MultiDegree(self.block_degrees(exp).into_iter().map(i64::from).collect())
    }

    /// Flattens one exponent list per block.
    pub fn join(&self, blocks: &[Vec<u32>]) -> Result<Exponent> {
        if blocks.len() != self.r() || blocks.iter().zip(&self.dims).any(|(b, &n)| b.len() != n + 1) {
            return Err(Error::DimensionMismatch(format!("exponent blocks do not match dims {:?}", self.dims)));
        }
        Ok(blocks.concat())
    }

    pub fn split(&self, exp: &[u32]) -> Vec<Vec<u32>> {
        (0..self.r()).map(|b| exp[self.block_vars(b)].to_vec()).collect()
    }
}

/// A vector of `r` integers, used both for degrees and for points of the
/// degree lattice `Z^r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiDegree(pub Vec<i64>);

impl MultiDegree {
    pub fn new(v: Vec<i64>) -> Self {
        MultiDegree(v)
    }

    pub fn zeros(r: usize) -> Self {
        MultiDegree(vec![0; r])
    }

    pub fn splat(r: usize, v: i64) -> Self {
        MultiDegree(vec![v; r])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &MultiDegree) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    /// All points `p` with `lo <= p <= hi` componentwise, last coordinate
    /// fastest.
    pub fn window(lo: &MultiDegree, hi: &MultiDegree) -> Vec<MultiDegree> {
        let mut out = vec![Vec::new()];
        for (&a, &b) in lo.0.iter().zip(&hi.0) {
            out = out.into_iter().flat_map(|p| (a..=b).map(move |x| [p.clone(), vec![x]].concat())).collect();
        }
        out.into_iter().map(MultiDegree).collect()
    }
}

impl Index<usize> for MultiDegree {
    type Output = i64;

    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Add for &MultiDegree {
    type Output = MultiDegree;

    fn add(self, rhs: &MultiDegree) -> MultiDegree {
        assert_eq!(self.len(), rhs.len(), "multidegree length mismatch");
        MultiDegree(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &MultiDegree {
    type Output = MultiDegree;

    fn sub(self, rhs: &MultiDegree) -> MultiDegree {
        assert_eq!(self.len(), rhs.len(), "multidegree length mismatch");
        MultiDegree(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Add for MultiDegree {
    type Output = MultiDegree;

    fn add(self, rhs: MultiDegree) -> MultiDegree {
        &self + &rhs
    }
}

impl Sub for MultiDegree {
    type Output = MultiDegree;

    fn sub(self, rhs: MultiDegree) -> MultiDegree {
        &self - &rhs
    }
}

impl Neg for &MultiDegree {
    type Output = MultiDegree;

    fn neg(self) -> MultiDegree {
        MultiDegree(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for MultiDegree {
    type Err = Error;

    /// Accepts `"1,2"` or `"(1,2)"`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        t.split(',')
            .map(|x| x.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad multidegree {s:?}"))))
            .collect::<Result<Vec<_>>>()
            .map(MultiDegree)
    }
}

/// Graded reverse lexicographic comparison of two exponent slices of the
/// same length.
fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

/// The monomial order: grevlex within each block, blocks compared in order.
pub fn cmp_monomials(layout: &BlockLayout, a: &[u32], b: &[u32]) -> Ordering {
    for block in 0..layout.r() {
        let range = layout.block_vars(block);
        let o = grevlex(&a[range.clone()], &b[range]);
        if o != Ordering::Equal {
            return o;
        }
    }
    Ordering::Equal
}

fn compositions(vars: usize, degree: u32) -> Vec<Vec<u32>> {
    if vars == 1 {
        return vec![vec![degree]];
    }
    let mut out = Vec::new();
    for first in (0..=degree).rev() {
        for mut rest in compositions(vars - 1, degree - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Monomials of one block of `vars` variables and degree `degree`, in
/// descending grevlex order.
pub fn block_monomials(vars: usize, degree: u32) -> Vec<Vec<u32>> {
    let mut c = compositions(vars, degree);
    c.sort_by(|a, b| grevlex(b, a));
    c
}

/// All monomials of multidegree `nu`, in descending monomial order (block 1
/// varies slowest). Empty if any component of `nu` is negative.
pub fn monomial_basis(layout: &BlockLayout, nu: &MultiDegree) -> Vec<Exponent> {
    assert_eq!(nu.len(), layout.r(), "multidegree length mismatch");
    if !nu.is_nonneg() {
        return Vec::new();
    }
    let mut out: Vec<Exponent> = vec![Vec::with_capacity(layout.num_vars())];
    for (block, &n) in layout.dims().iter().enumerate() {
        let local = block_monomials(n + 1, nu[block] as u32);
        out = out
            .into_iter()
            .flat_map(|prefix| {
                local.iter().map(move |m| {
                    let mut e = prefix.clone();
                    e.extend_from_slice(m);
                    e
                })
            })
            .collect();
    }
    out
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `prod_j C(nu_j + n_j, n_j)`, zero when `nu` has a negative component.
pub fn basis_size(layout: &BlockLayout, nu: &MultiDegree) -> usize {
    if !nu.is_nonneg() {
        return 0;
    }
    layout.dims().iter().zip(&nu.0).map(|(&n, &d)| binomial(d as u64 + n as u64, n as u64) as usize).product()
}

/// A monomial basis together with a lookup from exponent to position.
#[derive(Debug, Clone)]
pub struct MonomialBasis {
    nu: MultiDegree,
    monomials: Vec<Exponent>,
    index: HashMap<Exponent, usize>,
}

impl MonomialBasis {
    pub fn new(layout: &BlockLayout, nu: &MultiDegree) -> Self {
        let monomials = monomial_basis(layout, nu);
        let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        MonomialBasis { nu: nu.clone(), monomials, index }
    }

    pub fn nu(&self) -> &MultiDegree {
        &self.nu
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Exponent] {
        &self.monomials
    }

    pub fn position(&self, exp: &[u32]) -> Option<usize> {
        self.index.get(exp).copied()
    }
}

/// The multiprojective setting: factor dimensions and the multidegrees of
/// the polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedStructure {
    layout: Arc<BlockLayout>,
    degrees: Vec<MultiDegree>,
}

impl GradedStructure {
    /// The square-plus-one setting: exactly `n + 1` polynomials.
    pub fn new(dims: &[usize], degrees: Vec<MultiDegree>) -> Result<Self> {
        let s = Self::build(dims, degrees)?;
        let n = s.layout.n();
        if s.degrees.len() != n + 1 {
            return Err(Error::InvalidStructure(format!("expected {} polynomials, got {}", n + 1, s.degrees.len())));
        }
        Ok(s)
    }

    /// Between 1 and `n` polynomials.
    pub fn underdetermined(dims: &[usize], degrees: Vec<MultiDegree>) -> Result<Self> {
        let s = Self::build(dims, degrees)?;
        let n = s.layout.n();
        if s.degrees.is_empty() || s.degrees.len() > n {
            return Err(Error::InvalidStructure(format!("expected 1..={n} polynomials, got {}", s.degrees.len())));
        }
        Ok(s)
    }

    fn build(dims: &[usize], degrees: Vec<MultiDegree>) -> Result<Self> {
        let layout = Arc::new(BlockLayout::new(dims)?);
        for (i, d) in degrees.iter().enumerate() {
            if d.len() != layout.r() {
                return Err(Error::InvalidStructure(format!("degree {d} of polynomial {i} has {} entries, expected {}", d.len(), layout.r())));
            }
            if d.0.iter().any(|&x| x < 1) {
                return Err(Error::InvalidStructure(format!("degree {d} of polynomial {i} has an entry below 1")));
            }
        }
        Ok(GradedStructure { layout, degrees })
    }

    /// `count` polynomials of the same multidegree.
    pub fn uniform(dims: &[usize], degree: &[i64], count: usize) -> Result<Self> {
        let degrees = vec![MultiDegree(degree.to_vec()); count];
        let n: usize = dims.iter().sum();
        if count == n + 1 {
            Self::new(dims, degrees)
        } else {
            Self::underdetermined(dims, degrees)
        }
    }

    pub fn layout(&self) -> &Arc<BlockLayout> {
        &self.layout
    }

    pub fn dims(&self) -> &[usize] {
        self.layout.dims()
    }

    pub fn r(&self) -> usize {
        self.layout.r()
    }

    pub fn n(&self) -> usize {
        self.layout.n()
    }

    pub fn degrees(&self) -> &[MultiDegree] {
        &self.degrees
    }

    pub fn num_polys(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_square_plus_one(&self) -> bool {
        self.degrees.len() == self.n() + 1
    }

    /// `(min_i d_{i,1}, ..., min_i d_{i,r})`.
    pub fn min_degrees(&self) -> MultiDegree {
        MultiDegree((0..self.r()).map(|j| self.degrees.iter().map(|d| d[j]).min().unwrap_or(0)).collect())
    }

    /// The structure with polynomial `i` removed.
    pub fn without(&self, i: usize) -> Result<Self> {
        let mut degrees = self.degrees.clone();
        degrees.remove(i);
        Self::underdetermined(self.dims(), degrees)
    }
}

/// Sparse polynomial: exponent vector to nonzero coefficient.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly<S> {
    layout: Arc<BlockLayout>,
    terms: BTreeMap<Exponent, S>,
}

fn same_layout(a: &Arc<BlockLayout>, b: &Arc<BlockLayout>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl<S: Field> MultiPoly<S> {
    pub fn zero(layout: &Arc<BlockLayout>) -> Self {
        MultiPoly { layout: layout.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(layout: &Arc<BlockLayout>, c: S) -> Self {
        Self::monomial(layout, vec![0; layout.num_vars()], c)
    }

    pub fn monomial(layout: &Arc<BlockLayout>, exp: Exponent, c: S) -> Self {
        assert_eq!(exp.len(), layout.num_vars(), "exponent length mismatch");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        MultiPoly { layout: layout.clone(), terms }
    }

    /// The variable `x{block+1}_k`.
    pub fn var(layout: &Arc<BlockLayout>, block: usize, k: usize) -> Self {
        let mut e = vec![0; layout.num_vars()];
        e[layout.var_index(block, k)] = 1;
        Self::monomial(layout, e, S::one())
    }

    /// Sums repeated exponents and drops zeros.
    pub fn from_terms(layout: &Arc<BlockLayout>, terms: impl IntoIterator<Item = (Exponent, S)>) -> Self {
        let mut p = Self::zero(layout);
        for (e, c) in terms {
            assert_eq!(e.len(), layout.num_vars(), "exponent length mismatch");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Exponent, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn layout(&self) -> &Arc<BlockLayout> {
        &self.layout
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &S)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &[u32]) -> S {
        self.terms.get(exp).cloned().unwrap_or_else(S::zero)
    }

    /// The common multidegree of all terms, or `None` for the zero
    /// polynomial and for non-multihomogeneous polynomials.
    pub fn multidegree(&self) -> Option<MultiDegree> {
        let mut it = self.terms.keys().map(|e| self.layout.multidegree_of(e));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Whether every term has multidegree `d` (true for zero).
    pub fn is_homogeneous_of(&self, d: &MultiDegree) -> bool {
        self.terms.keys().all(|e| &self.layout.multidegree_of(e) == d)
    }

    fn check_layout(&self, other: &Self) -> Result<()> {
        if same_layout(&self.layout, &other.layout) {
            Ok(())
        } else {
            Err(Error::StructureMismatch(format!("dims {:?} vs {:?}", self.layout.dims(), other.layout.dims())))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_layout(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_layout(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_layout(other)?;
        let mut out = Self::zero(&self.layout);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.clone() * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(&self.layout);
        }
        MultiPoly { layout: self.layout.clone(), terms: self.terms.iter().map(|(e, x)| (e.clone(), x.clone() * c)).collect() }
    }

    pub fn mul_monomial(&self, exp: &[u32]) -> Self {
        assert_eq!(exp.len(), self.layout.num_vars(), "exponent length mismatch");
        MultiPoly {
            layout: self.layout.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.iter().zip(exp).map(|(a, b)| a + b).collect(), x.clone())).collect(),
        }
    }

    /// `d/dx{block+1}_k`.
    pub fn derivative(&self, block: usize, k: usize) -> Self {
        let v = self.layout.var_index(block, k);
        let mut out = Self::zero(&self.layout);
        for (e, c) in &self.terms {
            if e[v] == 0 {
                continue;
            }
            let mut d = e.clone();
            d[v] -= 1;
            out.add_term(d, c.clone() * S::from_u64(e[v] as u64));
        }
        out
    }

    /// Evaluates at a point given as one coordinate per variable.
    pub fn eval(&self, point: &[S]) -> S {
        assert_eq!(point.len(), self.layout.num_vars(), "point length mismatch");
        let mut acc = S::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    /// Coefficients in the given monomial basis; fails if a term falls
    /// outside it.
    pub fn coefficients_in(&self, basis: &MonomialBasis) -> Result<Vec<S>> {
        let mut v = vec![S::zero(); basis.len()];
        for (e, c) in &self.terms {
            let i = basis
                .position(e)
                .ok_or_else(|| Error::DimensionMismatch(format!("term of degree {} outside basis of degree {}", self.layout.multidegree_of(e), basis.nu())))?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    pub fn from_coefficients(layout: &Arc<BlockLayout>, basis: &MonomialBasis, v: &[S]) -> Self {
        Self::from_terms(layout, basis.monomials().iter().cloned().zip(v.iter().cloned()))
    }

    /// Renames variables: the variable at flat index `v` moves to
    /// `map[v]` in `target`.
    pub fn relabel(&self, target: &Arc<BlockLayout>, map: &[usize]) -> Self {
        assert_eq!(map.len(), self.layout.num_vars(), "variable map length mismatch");
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut f = vec![0; target.num_vars()];
            for (v, &k) in e.iter().enumerate() {
                f[map[v]] = k;
            }
            out.add_term(f, c.clone());
        }
        out
    }

    /// Terms in descending monomial order.
    pub fn sorted_terms(&self) -> Vec<(&Exponent, &S)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| cmp_monomials(&self.layout, b.0, a.0));
        t
    }
}

impl<S: Field> fmt::Display for MultiPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let cs = c.to_string();
            let (negative, mag) = match cs.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, cs),
            };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| if k == 1 { self.layout.var_name(v) } else { format!("{}^{k}", self.layout.var_name(v)) })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<S: fmt::Debug> fmt::Debug for MultiPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<S: Field> Add for &MultiPoly<S> {
    type Output = MultiPoly<S>;

    fn add(self, rhs: &MultiPoly<S>) -> MultiPoly<S> {
        self.checked_add(rhs).expect("layout mismatch in polynomial addition")
    }
}

impl<S: Field> Sub for &MultiPoly<S> {
    type Output = MultiPoly<S>;

    fn sub(self, rhs: &MultiPoly<S>) -> MultiPoly<S> {
        self.checked_sub(rhs).expect("layout mismatch in polynomial subtraction")
    }
}

impl<S: Field> Mul for &MultiPoly<S> {
    type Output = MultiPoly<S>;

    fn mul(self, rhs: &MultiPoly<S>) -> MultiPoly<S> {
        self.checked_mul(rhs).expect("layout mismatch in polynomial multiplication")
    }
}

impl<S: Field> Neg for &MultiPoly<S> {
    type Output = MultiPoly<S>;

    fn neg(self) -> MultiPoly<S> {
        self.scale(&-S::one())
    }
}

/// `n + 1` (or fewer, for underdetermined structures) polynomials conforming
/// to a [`GradedStructure`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySystem<S> {
    structure: GradedStructure,
    polys: Vec<MultiPoly<S>>,
}

impl<S: Field> PolySystem<S> {
    pub fn new(structure: GradedStructure, polys: Vec<MultiPoly<S>>) -> Result<Self> {
        if polys.len() != structure.num_polys() {
            return Err(Error::InvalidStructure(format!("{} polynomials for {} degrees", polys.len(), structure.num_polys())));
        }
        for (i, (p, d)) in polys.iter().zip(structure.degrees()).enumerate() {
            if !same_layout(p.layout(), structure.layout()) {
                return Err(Error::StructureMismatch(format!("polynomial {i} uses dims {:?}", p.layout().dims())));
            }
            if !p.is_homogeneous_of(d) {
                return Err(Error::DegreeMismatch { index: i, expected: d.clone() });
            }
        }
        Ok(PolySystem { structure, polys })
    }

    pub fn structure(&self) -> &GradedStructure {
        &self.structure
    }

    pub fn layout(&self) -> &Arc<BlockLayout> {
        self.structure.layout()
    }

    pub fn polys(&self) -> &[MultiPoly<S>] {
        &self.polys
    }

    /// The system with polynomial `i` removed.
    pub fn without(&self, i: usize) -> Result<Self> {
        let structure = self.structure.without(i)?;
        let mut polys = self.polys.clone();
        polys.remove(i);
        Ok(PolySystem { structure, polys })
    }
}

/// A system whose coefficients are independent samples from
/// [`Field::sample_nonzero`], one per monomial, in basis order.
pub fn random_system<S: Field>(structure: &GradedStructure, seed: u64) -> PolySystem<S> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let layout = structure.layout();
    let polys = structure
        .degrees()
        .iter()
        .map(|d| MultiPoly::from_terms(layout, monomial_basis(layout, d).into_iter().map(|m| (m, S::sample_nonzero(&mut rng)))))
        .collect();
    PolySystem::new(structure.clone(), polys).expect("sampled polynomials conform by construction")
}
