//! Brute-force verification by linear algebra: graded components of the
//! saturation, Hilbert functions, systems through prescribed points, and the
//! comparison of syzygies with Koszul syzygies.
//!
//! A polynomial `p` of degree `mu` is declared saturated when
//! `sigma^N * p` lies in the ideal at degree `mu + N*(1,...,1)`, with
//! `sigma = x_{1,0} x_{2,0} ... x_{r,0}`. For generic and zero-dimensional
//! systems one monomial suffices. For other specializations the criterion
//! can overshoot the true saturation, so equalities are only asserted on
//! generic or zero-dimensional instances.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::elim::macaulay_matrix;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{check_size, Echelon, ExactMatrix};
use crate::mpoly::{monomial_basis, GradedStructure, MonomialBasis, MultiDegree, MultiPoly, PolySystem};
use crate::regions::critical_degree;

/// Which product of one variable per block plays the role of `sigma`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Multiplier {
    /// `x_{1,0} ... x_{r,0}`.
    First,
    /// `x_{1,n_1} ... x_{r,n_r}`.
    Last,
}

/// A basis of `I^sat` at degree `mu`, as coefficient vectors in the
/// monomial basis of degree `mu`.
#[derive(Debug, Clone)]
pub struct SaturationComponent<S> {
    pub mu: MultiDegree,
    pub basis: Vec<Vec<S>>,
    pub exponent_used: u32,
}

impl<S: Field> SaturationComponent<S> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Equal dimension and mutual containment.
    pub fn same_subspace(&self, other: &SaturationComponent<S>) -> bool {
        same_span(&self.basis, &other.basis)
    }
}

fn span<S: Field>(dim: usize, vectors: &[Vec<S>]) -> Echelon<S> {
    let mut e = Echelon::new(dim);
    for v in vectors {
        e.insert(v.clone());
    }
    e
}

/// Whether two lists of vectors span the same subspace.
pub fn same_span<S: Field>(a: &[Vec<S>], b: &[Vec<S>]) -> bool {
    let dim = a.first().or(b.first()).map_or(0, Vec::len);
    let ea = span(dim, a);
    let eb = span(dim, b);
    ea.rank() == eb.rank() && a.iter().all(|v| eb.contains(v)) && b.iter().all(|v| ea.contains(v))
}

/// `1 + max_j delta_j`, the default saturation exponent.
pub fn default_exponent(s: &GradedStructure) -> u32 {
    let d = critical_degree(s);
    1 + d.0.iter().copied().max().unwrap_or(0).max(0) as u32
}

/// `{p in R_mu : sigma^N p in I}` with `sigma = x_{1,0} ... x_{r,0}`.
pub fn saturation_component<S: Field>(f: &PolySystem<S>, mu: &MultiDegree, n: u32) -> Result<SaturationComponent<S>> {
    saturation_with(f, mu, n, Multiplier::First)
}

/// As [`saturation_component`] with a chosen multiplier.
pub fn saturation_with<S: Field>(f: &PolySystem<S>, mu: &MultiDegree, n: u32, which: Multiplier) -> Result<SaturationComponent<S>> {
    assert!(n >= 1, "saturation exponent must be positive");
    if !mu.is_nonneg() {
        return Err(Error::NegativeDegree(mu.clone()));
    }
    let layout = f.layout();
    let source = monomial_basis(layout, mu);
    let target_degree = mu + &MultiDegree::splat(layout.r(), i64::from(n));
    let m = macaulay_matrix(f, &target_degree)?;
    check_size(m.nrows(), m.ncols())?;
    let rows = m.row_basis();
    let mut ideal = Echelon::new(rows.len());
    for j in 0..m.ncols() {
        if ideal.is_full() {
            break;
        }
        ideal.insert(m.column(j));
    }
    if ideal.is_full() {
        let basis = (0..source.len())
            .map(|k| {
                let mut v = vec![S::zero(); source.len()];
                v[k] = S::one();
                v
            })
            .collect();
        return Ok(SaturationComponent { mu: mu.clone(), basis, exponent_used: n });
    }
    let mut shift = vec![0u32; layout.num_vars()];
    for b in 0..layout.r() {
        let k = match which {
            Multiplier::First => 0,
            Multiplier::Last => layout.dims()[b],
        };
        shift[layout.var_index(b, k)] = n;
    }
    // Residues of sigma^N * m modulo the ideal, restricted to non-pivot rows,
    // one column per source monomial; the kernel is the saturation.
    let free_rows: Vec<usize> = (0..rows.len()).filter(|&i| !ideal.is_pivot(i)).collect();
    let mut residues = ExactMatrix::zeros(free_rows.len(), source.len());
    for (k, mono) in source.iter().enumerate() {
        let target: Vec<u32> = mono.iter().zip(&shift).map(|(a, b)| a + b).collect();
        let mut v = vec![S::zero(); rows.len()];
        v[rows.position(&target).expect("shifted monomial in basis")] = S::one();
        ideal.reduce(&mut v);
        for (i, &row) in free_rows.iter().enumerate() {
            residues.set(i, k, v[row].clone());
        }
    }
    Ok(SaturationComponent { mu: mu.clone(), basis: residues.kernel_basis()?, exponent_used: n })
}

/// Saturation at the first exponent `N >= start` where `N` and `N + 1`
/// give the same subspace. Doubles `N` after each disagreement.
pub fn stable_saturation<S: Field>(f: &PolySystem<S>, mu: &MultiDegree, start: Option<u32>) -> Result<SaturationComponent<S>> {
    let mut n = start.unwrap_or_else(|| default_exponent(f.structure())).max(1);
    for _ in 0..6 {
        let a = saturation_component(f, mu, n)?;
        let b = saturation_component(f, mu, n + 1)?;
        if a.same_subspace(&b) {
            return Ok(a);
        }
        n *= 2;
    }
    Err(Error::Unstable { mu: mu.clone(), exponent: n })
}

/// Whether the multiplier `x_{1,n_1} ... x_{r,n_r}` gives the same
/// component as the default one at exponent `n`.
pub fn spot_check<S: Field>(f: &PolySystem<S>, mu: &MultiDegree, n: u32) -> Result<bool> {
    let a = saturation_with(f, mu, n, Multiplier::First)?;
    let b = saturation_with(f, mu, n, Multiplier::Last)?;
    Ok(a.same_subspace(&b))
}

/// `dim I_mu`, the rank of `M_mu`.
pub fn ideal_dim<S: Field>(f: &PolySystem<S>, mu: &MultiDegree) -> Result<usize> {
    if !mu.is_nonneg() {
        return Ok(0);
    }
    macaulay_matrix(f, mu)?.rank()
}

/// A basis of `I_mu` in the monomial basis of degree `mu`.
pub fn ideal_component<S: Field>(f: &PolySystem<S>, mu: &MultiDegree) -> Result<Vec<Vec<S>>> {
    let m = macaulay_matrix(f, mu)?;
    check_size(m.nrows(), m.ncols())?;
    let mut e = Echelon::new(m.nrows());
    let mut basis = Vec::new();
    for j in 0..m.ncols() {
        let c = m.column(j);
        if e.insert(c.clone()) {
            basis.push(c);
        }
    }
    Ok(basis)
}

/// `dim (I^sat / I)_mu`, using the stable saturation.
pub fn quotient_dim<S: Field>(f: &PolySystem<S>, mu: &MultiDegree) -> Result<usize> {
    let sat = stable_saturation(f, mu, None)?;
    Ok(sat.dim() - ideal_dim(f, mu)?)
}

/// Both Hilbert functions at one degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HilbertValues {
    /// `dim R_mu - dim I_mu`.
    pub ideal: usize,
    /// `dim R_mu - dim I^sat_mu`.
    pub saturated: usize,
}

pub fn hilbert_function<S: Field>(f: &PolySystem<S>, mu: &MultiDegree) -> Result<HilbertValues> {
    let total = MonomialBasis::new(f.layout(), mu).len();
    let ideal = ideal_dim(f, mu)?;
    let sat = stable_saturation(f, mu, None)?.dim();
    Ok(HilbertValues { ideal: total - ideal, saturated: total - sat })
}

/// A point of the product of projective spaces: one coordinate tuple per
/// factor.
pub type Point<S> = Vec<Vec<S>>;

/// Random points with all coordinates nonzero.
pub fn random_points<S: Field>(s: &GradedStructure, count: usize, seed: u64) -> Vec<Point<S>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| s.dims().iter().map(|&n| (0..=n).map(|_| S::sample_nonzero(&mut rng)).collect()).collect()).collect()
}

fn flatten_point<S: Field>(s: &GradedStructure, p: &Point<S>) -> Result<Vec<S>> {
    if p.len() != s.r() || p.iter().zip(s.dims()).any(|(c, &n)| c.len() != n + 1) {
        return Err(Error::DimensionMismatch(format!("point does not match dims {:?}", s.dims())));
    }
    if let Some(j) = p.iter().position(|c| c.iter().all(num_traits::Zero::is_zero)) {
        return Err(Error::InvalidStructure(format!("point has all-zero coordinates in factor {}", j + 1)));
    }
    Ok(p.concat())
}

/// Each `f_i` is a random element of the space of forms of degree `d_i`
/// vanishing at every point.
pub fn system_through_points<S: Field>(s: &GradedStructure, points: &[Point<S>], seed: u64) -> Result<PolySystem<S>> {
    let flat = points.iter().map(|p| flatten_point(s, p)).collect::<Result<Vec<_>>>()?;
    let layout = s.layout();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut polys = Vec::with_capacity(s.num_polys());
    for d in s.degrees() {
        let basis = MonomialBasis::new(layout, d);
        let monos: Vec<MultiPoly<S>> = basis.monomials().iter().map(|m| MultiPoly::monomial(layout, m.clone(), S::one())).collect();
        let conditions: Vec<Vec<S>> = flat.iter().map(|p| monos.iter().map(|m| m.eval(p)).collect()).collect();
        let kernel = if conditions.is_empty() {
            (0..basis.len())
                .map(|k| {
                    let mut v = vec![S::zero(); basis.len()];
                    v[k] = S::one();
                    v
                })
                .collect()
        } else {
            ExactMatrix::from_rows(conditions)?.kernel_basis()?
        };
        if kernel.is_empty() {
            return Err(Error::NoVanishingForm(d.clone()));
        }
        let mut coeffs = vec![S::zero(); basis.len()];
        for v in &kernel {
            let c = S::sample_nonzero(&mut rng);
            for (a, x) in coeffs.iter_mut().zip(v) {
                *a += c.clone() * x;
            }
        }
        polys.push(MultiPoly::from_coefficients(layout, &basis, &coeffs));
    }
    PolySystem::new(s.clone(), polys)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KoszulReport {
    /// Dimension of the kernel of `(G_i) -> sum G_i f_i` at degree `mu`.
    pub kernel_dim: usize,
    /// Dimension of the span of the Koszul syzygies at degree `mu`.
    pub koszul_dim: usize,
    /// Every Koszul syzygy lies in the kernel.
    pub contained: bool,
}

impl KoszulReport {
    pub fn equal(&self) -> bool {
        self.contained && self.kernel_dim == self.koszul_dim
    }
}

/// The Koszul syzygies `m (f_j e_i - f_i e_j)` of degree `mu`, as vectors in
/// the column coordinates of `M_mu`.
pub fn koszul_syzygies<S: Field>(f: &PolySystem<S>, mu: &MultiDegree) -> Vec<Vec<S>> {
    let layout = f.layout();
    let degrees = f.structure().degrees();
    let sources: Vec<MonomialBasis> = degrees.iter().map(|d| MonomialBasis::new(layout, &(mu - d))).collect();
    let mut offsets = vec![0];
    for b in &sources {
        offsets.push(offsets.last().unwrap() + b.len());
    }
    let total = *offsets.last().unwrap();
    let mut out = Vec::new();
    for i in 0..degrees.len() {
        for j in i + 1..degrees.len() {
            let rest = &(mu - &degrees[i]) - &degrees[j];
            for m in monomial_basis(layout, &rest) {
                let mut v = vec![S::zero(); total];
                for (e, c) in f.polys()[j].mul_monomial(&m).terms() {
                    v[offsets[i] + sources[i].position(e).expect("degree mu - d_i")] += c.clone();
                }
                for (e, c) in f.polys()[i].mul_monomial(&m).terms() {
                    v[offsets[j] + sources[j].position(e).expect("degree mu - d_j")] -= c.clone();
                }
                out.push(v);
            }
        }
    }
    out
}

pub fn koszul_compare<S: Field>(f: &PolySystem<S>, mu: &MultiDegree) -> Result<KoszulReport> {
    let m = macaulay_matrix(f, mu)?.to_dense()?;
    let kernel = m.kernel_basis()?;
    let koszul = koszul_syzygies(f, mu);
    let koszul_dim = span(m.cols(), &koszul).rank();
    let mut contained = true;
    for v in &koszul {
        if !m.mul_vec(v)?.iter().all(num_traits::Zero::is_zero) {
            contained = false;
        }
    }
    let kernel_span = span(m.cols(), &kernel);
    contained &= koszul.iter().all(|v| kernel_span.contains(v));
    Ok(KoszulReport { kernel_dim: kernel.len(), koszul_dim, contained })
}
