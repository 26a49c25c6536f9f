//! Degree regions in `Z^r`: the critical degree, the cohomology supports
//! `Q_alpha`, and the regions `Gamma_0`, `Gamma_1`, `Gamma_2`.

use std::fmt;

use crate::error::Error;
use crate::mpoly::{GradedStructure, MultiDegree};

/// `base + (s_1 N, ..., s_r N)` with every `s_j` in `{+1, -1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedOrthant {
    base: MultiDegree,
    signs: Vec<i8>,
}

impl SignedOrthant {
    pub fn new(base: MultiDegree, signs: Vec<i8>) -> Self {
        assert_eq!(base.len(), signs.len(), "orthant base and signs differ in length");
        assert!(signs.iter().all(|&s| s == 1 || s == -1), "orthant signs must be +1 or -1");
        SignedOrthant { base, signs }
    }

    pub fn base(&self) -> &MultiDegree {
        &self.base
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn contains(&self, mu: &MultiDegree) -> bool {
        self.signs.iter().zip(&self.base.0).zip(&mu.0).all(|((&s, &b), &m)| i64::from(s) * (m - b) >= 0)
    }

    pub fn translate(&self, d: &MultiDegree) -> Self {
        SignedOrthant { base: &self.base + d, signs: self.signs.clone() }
    }

    /// Whether `other` is a subset of `self`.
    pub fn contains_orthant(&self, other: &SignedOrthant) -> bool {
        self.signs == other.signs && self.contains(&other.base)
    }
}

impl fmt::Display for SignedOrthant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let signs: Vec<&str> = self.signs.iter().map(|&s| if s > 0 { "N" } else { "-N" }).collect();
        write!(f, "{}+({})", self.base, signs.join(","))
    }
}

/// A finite union of signed orthants.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DegreeRegion {
    orthants: Vec<SignedOrthant>,
}

impl DegreeRegion {
    pub fn empty() -> Self {
        DegreeRegion::default()
    }

    /// Builds the union, dropping duplicate and absorbed orthants.
    pub fn from_orthants(orthants: impl IntoIterator<Item = SignedOrthant>) -> Self {
        let mut kept: Vec<SignedOrthant> = Vec::new();
        for o in orthants {
            if kept.iter().any(|k| k.contains_orthant(&o)) {
                continue;
            }
            kept.retain(|k| !o.contains_orthant(k));
            kept.push(o);
        }
        kept.sort_by(|a, b| (&a.signs, &a.base).cmp(&(&b.signs, &b.base)).reverse());
        DegreeRegion { orthants: kept }
    }

    pub fn orthants(&self) -> &[SignedOrthant] {
        &self.orthants
    }

    pub fn is_empty(&self) -> bool {
        self.orthants.is_empty()
    }

    pub fn contains(&self, mu: &MultiDegree) -> bool {
        self.orthants.iter().any(|o| o.contains(mu))
    }

    pub fn union(&self, other: &DegreeRegion) -> DegreeRegion {
        DegreeRegion::from_orthants(self.orthants.iter().chain(&other.orthants).cloned())
    }
}

impl fmt::Display for DegreeRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orthants.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.orthants.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" ∪ "))
    }
}

/// `delta_j = sum_i d_{i,j} - (n_j + 1)`.
pub fn critical_degree(s: &GradedStructure) -> MultiDegree {
    MultiDegree(
        s.dims()
            .iter()
            .enumerate()
            .map(|(j, &n)| s.degrees().iter().map(|d| d[j]).sum::<i64>() - (n as i64 + 1))
            .collect(),
    )
}

/// The support `Q_alpha` for a set of 0-based block indices; empty for the
/// empty set.
pub fn q_alpha(s: &GradedStructure, alpha: &[usize]) -> DegreeRegion {
    assert!(alpha.iter().all(|&j| j < s.r()), "block index out of range");
    if alpha.is_empty() {
        return DegreeRegion::empty();
    }
    DegreeRegion::from_orthants([orthant_for_mask(s, alpha.iter().fold(0u32, |m, &j| m | 1 << j))])
}

fn orthant_for_mask(s: &GradedStructure, mask: u32) -> SignedOrthant {
    let (base, signs) = s
        .dims()
        .iter()
        .enumerate()
        .map(|(j, &n)| if mask >> j & 1 == 1 { (-(n as i64) - 1, -1) } else { (0, 1) })
        .unzip();
    SignedOrthant::new(MultiDegree(base), signs)
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// The orthants of `Gamma_i` before absorption: one translate of `Q_alpha`
/// per nonempty proper block subset `alpha` and per set `lambda` of
/// `n(alpha) + i` polynomials.
pub fn gamma_terms(s: &GradedStructure, i: usize) -> Vec<SignedOrthant> {
    let r = s.r();
    let mut out = Vec::new();
    for mask in 1u32..(1 << r) - 1 {
        let n_alpha: usize = (0..r).filter(|&j| mask >> j & 1 == 1).map(|j| s.dims()[j]).sum();
        let q = orthant_for_mask(s, mask);
        for lambda in subsets_of_size(s.num_polys(), n_alpha + i) {
            let shift = lambda.iter().fold(MultiDegree::zeros(r), |acc, &l| &acc + &s.degrees()[l]);
            out.push(q.translate(&shift));
        }
    }
    out
}

pub fn gamma(s: &GradedStructure, i: usize) -> DegreeRegion {
    DegreeRegion::from_orthants(gamma_terms(s, i))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NuKind {
    /// `nu` lies outside `(delta - N^r) ∪ Gamma_0 ∪ Gamma_1`.
    Macaulay,
    /// `nu = delta - mu` with `0 <= mu_j < min_i d_{i,j}`.
    Hybrid { mu: MultiDegree },
    Inadmissible,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Admissibility {
    pub kind: NuKind,
    /// `nu` lies in `delta - (min d - 1) + N^r`.
    pub drop_of_rank: bool,
}

/// The regions of one structure, computed once for repeated queries.
#[derive(Debug, Clone)]
pub struct Regions {
    delta: MultiDegree,
    min_degrees: MultiDegree,
    gammas: [DegreeRegion; 3],
}

impl Regions {
    pub fn new(s: &GradedStructure) -> Self {
        Regions { delta: critical_degree(s), min_degrees: s.min_degrees(), gammas: [gamma(s, 0), gamma(s, 1), gamma(s, 2)] }
    }

    pub fn delta(&self) -> &MultiDegree {
        &self.delta
    }

    pub fn gamma(&self, i: usize) -> &DegreeRegion {
        &self.gammas[i]
    }

    pub fn in_gamma01(&self, mu: &MultiDegree) -> bool {
        self.gammas[0].contains(mu) || self.gammas[1].contains(mu)
    }

    /// `delta - (min d - 1)`, the corner of the drop-of-rank region.
    pub fn drop_of_rank_corner(&self) -> MultiDegree {
        MultiDegree(self.delta.0.iter().zip(&self.min_degrees.0).map(|(d, m)| d - (m - 1)).collect())
    }

    /// The `mu` witness when `nu` is hybrid-admissible, otherwise a
    /// description of the violated condition.
    pub fn hybrid_witness(&self, nu: &MultiDegree) -> Result<MultiDegree, String> {
        if nu.len() != self.delta.len() {
            return Err(format!("expected {} components", self.delta.len()));
        }
        if let Some(j) = nu.0.iter().position(|&x| x < 0) {
            return Err(format!("component {} is negative", j + 1));
        }
        let mu = &self.delta - nu;
        for j in 0..mu.len() {
            if mu[j] < 0 {
                return Err(format!("nu_{} = {} exceeds delta_{} = {}", j + 1, nu[j], j + 1, self.delta[j]));
            }
            if mu[j] >= self.min_degrees[j] {
                return Err(format!(
                    "delta_{} - nu_{} = {} is not below min_i d_{{i,{}}} = {}",
                    j + 1,
                    j + 1,
                    mu[j],
                    j + 1,
                    self.min_degrees[j]
                ));
            }
        }
        Ok(mu)
    }

    pub fn is_macaulay_admissible(&self, nu: &MultiDegree) -> bool {
        nu.is_nonneg() && !nu.le(&self.delta) && !self.in_gamma01(nu)
    }

    pub fn classify(&self, nu: &MultiDegree) -> Admissibility {
        let kind = if let Ok(mu) = self.hybrid_witness(nu) {
            NuKind::Hybrid { mu }
        } else if self.is_macaulay_admissible(nu) {
            NuKind::Macaulay
        } else {
            NuKind::Inadmissible
        };
        let drop_of_rank = self.drop_of_rank_corner().le(nu);
        Admissibility { kind, drop_of_rank }
    }
}

pub fn admissible_nu(s: &GradedStructure, nu: &MultiDegree) -> Admissibility {
    Regions::new(s).classify(nu)
}

/// Fails with [`Error::NotHybridAdmissible`] unless `nu` is hybrid-admissible.
pub fn require_hybrid(s: &GradedStructure, nu: &MultiDegree) -> crate::error::Result<MultiDegree> {
    Regions::new(s).hybrid_witness(nu).map_err(|reason| Error::NotHybridAdmissible { nu: nu.clone(), reason })
}
