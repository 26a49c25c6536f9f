//! Checks of the structural properties on concrete instances, each
//! producing a printable report.

use std::fmt;

use crate::elim::{corank, hybrid_matrix, macaulay_matrix};
use crate::error::Result;
use crate::field::{Field, Rational};
use crate::forms::{jacobian_determinant, sylvester_form, twisted_jacobian, SylvesterIndex};
use crate::linalg::Echelon;
use crate::mpoly::{GradedStructure, MultiDegree, PolySystem};
use crate::oracle::{koszul_compare, quotient_dim, random_points, stable_saturation, system_through_points};
use crate::regions::{NuKind, Regions};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub property: &'static str,
    pub passed: bool,
    pub lines: Vec<String>,
}

impl Report {
    fn new(property: &'static str) -> Self {
        Report { property, passed: true, lines: Vec::new() }
    }

    fn check(&mut self, ok: bool, line: String) {
        self.passed &= ok;
        self.lines.push(format!("{} {line}", if ok { "ok  " } else { "FAIL" }));
    }

    fn note(&mut self, line: String) {
        self.lines.push(format!("    {line}"));
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            writeln!(f, "{l}")?;
        }
        write!(f, "{}: {}", self.property, if self.passed { "PASS" } else { "FAIL" })
    }
}

/// Every admissible Sylvester index, grouped by block norms.
pub fn admissible_indices(s: &GradedStructure) -> Vec<Vec<SylvesterIndex>> {
    let min = s.min_degrees();
    let hi = MultiDegree(min.0.iter().map(|m| m - 1).collect());
    MultiDegree::window(&MultiDegree::zeros(s.r()), &hi)
        .into_iter()
        .map(|norms| SylvesterIndex::all_with_norms(s.layout(), &norms))
        .collect()
}

/// For every `mu` in `[0, delta]` outside `Gamma_0 ∪ Gamma_1`:
/// `dim (I^sat/I)_mu = dim (R/I)_{delta - mu}`.
pub fn duality<S: Field>(f: &PolySystem<S>) -> Result<Report> {
    let mut report = Report::new("duality");
    let regions = Regions::new(f.structure());
    let delta = regions.delta().clone();
    for mu in MultiDegree::window(&MultiDegree::zeros(delta.len()), &delta) {
        if regions.in_gamma01(&mu) {
            report.note(format!("mu={mu} skipped (in Gamma_0 ∪ Gamma_1)"));
            continue;
        }
        let lhs = quotient_dim(f, &mu)?;
        let dual = &delta - &mu;
        let m = macaulay_matrix(f, &dual)?;
        let rhs = m.nrows() - m.rank()?;
        report.check(lhs == rhs, format!("mu={mu}: dim(I^sat/I)_mu = {lhs}, dim(R/I)_{dual} = {rhs}"));
    }
    Ok(report)
}

/// For admissible indices with equal block norms: `x^beta Sylv_alpha` lies in
/// `I_delta` when `alpha != beta`, and `x^alpha Sylv_alpha - Sylv_0` does.
pub fn multiplication<S: Field>(f: &PolySystem<S>) -> Result<Report> {
    let mut report = Report::new("multiplication");
    let s = f.structure();
    let delta = Regions::new(s).delta().clone();
    let m = macaulay_matrix(f, &delta)?;
    let ideal = m.column_space()?;
    let zero_form = twisted_jacobian(f);
    for group in admissible_indices(s) {
        let forms = group.iter().map(|idx| sylvester_form(f, idx)).collect::<Result<Vec<_>>>()?;
        for (alpha, form) in group.iter().zip(&forms) {
            for beta in &group {
                let shifted = form.mul_monomial(&beta.as_exponent());
                let (poly, label) = if alpha == beta {
                    (&shifted - &zero_form, format!("x^[{alpha}] Sylv[{alpha}] - Sylv[0]"))
                } else {
                    (shifted, format!("x^[{beta}] Sylv[{alpha}]"))
                };
                let inside = ideal.contains(&m.coefficients(&poly)?);
                report.check(inside, format!("{label} in I_delta"));
            }
        }
    }
    Ok(report)
}

/// At every hybrid-admissible `nu`: the Sylvester columns raise the rank by
/// their number, the oracle finds that many dimensions in `(I^sat/I)_nu`,
/// and the forms lie in the saturation.
pub fn basis<S: Field>(f: &PolySystem<S>) -> Result<Report> {
    let mut report = Report::new("basis");
    let s = f.structure();
    let regions = Regions::new(s);
    let delta = regions.delta().clone();
    let lo = regions.drop_of_rank_corner();
    for nu in MultiDegree::window(&lo, &delta) {
        let NuKind::Hybrid { .. } = regions.classify(&nu).kind else {
            continue;
        };
        let h = hybrid_matrix(f, &nu)?;
        let shape = h.shape();
        let macaulay_rank = h.macaulay_block().rank()?;
        let hybrid_rank = h.rank()?;
        report.check(
            hybrid_rank == macaulay_rank + shape.sylvester_cols,
            format!("nu={nu}: rank H = {hybrid_rank}, rank M = {macaulay_rank}, Sylvester columns = {}", shape.sylvester_cols),
        );
        let sat = stable_saturation(f, &nu, None)?;
        let quotient = sat.dim() - macaulay_rank;
        report.check(quotient == shape.sylvester_cols, format!("nu={nu}: oracle dim(I^sat/I)_nu = {quotient}"));
        let mut sat_span = Echelon::new(h.nrows());
        for v in &sat.basis {
            sat_span.insert(v.clone());
        }
        let inside = (shape.koszul_cols..h.ncols()).all(|j| sat_span.contains(&h.column(j)));
        report.check(inside, format!("nu={nu}: Sylvester columns lie in I^sat_nu"));
    }
    Ok(report)
}

/// At every `mu <= hi` outside `Gamma_2`, the syzygies of degree `mu` are
/// spanned by Koszul syzygies. Degrees inside `Gamma_2` are reported only.
pub fn koszul<S: Field>(f: &PolySystem<S>, hi: &MultiDegree) -> Result<Report> {
    let mut report = Report::new("koszul");
    let regions = Regions::new(f.structure());
    for mu in MultiDegree::window(&MultiDegree::zeros(hi.len()), hi) {
        let r = koszul_compare(f, &mu)?;
        let line = format!("mu={mu}: kernel {} Koszul {} contained {}", r.kernel_dim, r.koszul_dim, r.contained);
        if regions.gamma(2).contains(&mu) {
            report.note(format!("{line} (in Gamma_2, not asserted)"));
        } else {
            report.check(r.equal(), line);
        }
    }
    Ok(report)
}

/// The unit `c` with `J = c Lambda_0` modulo `I_delta`, if one exists.
pub fn jacobian_constant(f: &PolySystem<Rational>) -> Result<Option<Rational>> {
    let delta = Regions::new(f.structure()).delta().clone();
    let m = macaulay_matrix(f, &delta)?;
    let ideal = m.column_space()?;
    let mut j = m.coefficients(&jacobian_determinant(f)?)?;
    let mut l = m.coefficients(&twisted_jacobian(f))?;
    ideal.reduce(&mut j);
    ideal.reduce(&mut l);
    let Some(k) = l.iter().position(|x| !num_traits::Zero::is_zero(x)) else {
        return Ok(None);
    };
    let c = j[k].checked_div(&l[k])?;
    let consistent = j.iter().zip(&l).all(|(a, b)| *a == c.clone() * b);
    Ok(consistent.then_some(c))
}

/// `J - (prod d_{i,j}) Lambda_0` lies in `I_delta` (over Q).
pub fn jacobian(f: &PolySystem<Rational>) -> Result<Report> {
    let mut report = Report::new("jacobian");
    let s = f.structure();
    let product: i64 = s.degrees().iter().flat_map(|d| d.0.iter()).product();
    let delta = Regions::new(s).delta().clone();
    let m = macaulay_matrix(f, &delta)?;
    let diff = &jacobian_determinant(f)? - &twisted_jacobian(f).scale(&Rational::from_i64(product));
    report.check(m.contains_poly(&diff)?, format!("J - {product} Lambda_0 in I_delta"));
    match jacobian_constant(f)? {
        Some(c) => report.note(format!("J = {c} Lambda_0 modulo I_delta")),
        None => report.note("J is not a multiple of Lambda_0 modulo I_delta".into()),
    }
    Ok(report)
}

/// Degrees used for drop-of-rank checks: the corner of the region, the
/// corner plus `(1,...,1)`, and the corner plus each unit vector.
pub fn drop_of_rank_degrees(s: &GradedStructure) -> Vec<MultiDegree> {
    let corner = Regions::new(s).drop_of_rank_corner();
    let r = corner.len();
    let mut out = vec![corner.clone(), &corner + &MultiDegree::splat(r, 1)];
    for j in 0..r {
        let mut e = MultiDegree::zeros(r);
        e.0[j] = 1;
        out.push(&corner + &e);
    }
    out
}

/// A system through `kappa` random points has corank `kappa` at every
/// degree of [`drop_of_rank_degrees`].
pub fn droprank<S: Field>(s: &GradedStructure, kappa: usize, seed: u64) -> Result<Report> {
    let mut report = Report::new("droprank");
    let points = random_points::<S>(s, kappa, seed);
    let f = system_through_points(s, &points, seed.wrapping_add(1))?;
    for nu in drop_of_rank_degrees(s) {
        let c = corank(&f, &nu)?;
        report.check(c == kappa, format!("nu={nu}: corank {c}, expected {kappa}"));
    }
    Ok(report)
}
