//! Acceptance suite. Prints one line per criterion and exits nonzero if any
//! criterion fails or exceeds its time budget.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use multielim::elim::{corank, dixon_structure, ElimMatrix};
use multielim::field::Field;
use multielim::mpoly::{BlockLayout, MultiPoly};
use multielim::oracle::{ideal_dim, quotient_dim, random_points, same_span, stable_saturation, system_through_points};
use multielim::regions::Regions;
use multielim::verify::{self, drop_of_rank_degrees};
use multielim::{
    elimination_matrix, hybrid_matrix, macaulay_matrix, random_system, shape_only, GradedStructure, MultiDegree, PolySystem, Result, F31, F31B, Q,
};
use num_traits::Zero;

type Outcome = Result<(bool, String)>;

fn md(v: &[i64]) -> MultiDegree {
    MultiDegree(v.to_vec())
}

fn square(m: &ElimMatrix<F31>, order: usize, syl: usize) -> bool {
    let s = m.shape();
    s.rows == order && s.cols() == order && s.sylvester_cols == syl
}

/// Every square matrix of the Dixon family for bidegree `(m, n)` with its
/// expected order and number of Sylvester columns.
fn dixon_cases(m: i64, n: i64) -> Vec<(MultiDegree, bool, usize, usize)> {
    let mn = (m * n) as usize;
    let mut out = vec![
        (md(&[2 * m - 1, 3 * n - 1]), false, 6 * mn, 0),
        (md(&[3 * m - 1, 2 * n - 1]), false, 6 * mn, 0),
        (md(&[2 * m - 1, 2 * n - 1]), true, 4 * mn, mn),
    ];
    for i in 1..m {
        out.push((md(&[2 * m - 1 + i, 2 * n - 1]), true, (4 * m * n + 2 * i * n) as usize, ((m - i) * n) as usize));
    }
    out
}

/// A labelled matrix with its expected order and Sylvester column count.
type DixonCase = (String, ElimMatrix<F31>, usize, usize);

fn dixon_matrices(seed: u64) -> Result<Vec<DixonCase>> {
    let mut out = Vec::new();
    for (m, n) in [(1, 1), (2, 1), (2, 2)] {
        let f = random_system::<F31>(&dixon_structure(m, n), seed + (10 * m + n) as u64);
        for (nu, hybrid, order, syl) in dixon_cases(m, n) {
            let mat = if hybrid { hybrid_matrix(&f, &nu)? } else { macaulay_matrix(&f, &nu)? };
            out.push((format!("(m,n)=({m},{n}) nu={nu}"), mat, order, syl));
        }
    }
    Ok(out)
}

fn c1_dixon_sizes() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for (label, mat, order, syl) in dixon_matrices(1)? {
        count += 1;
        if !square(&mat, order, syl) {
            bad.push(format!("{label}: {:?}", mat.shape()));
        }
    }
    Ok((bad.is_empty(), if bad.is_empty() { format!("{count} matrices") } else { bad.join("; ") }))
}

fn c2_dixon_nonvanishing() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for (label, mat, _, _) in dixon_matrices(1)? {
        count += 1;
        if mat.nrows() > 24 || mat.det()?.is_zero() {
            bad.push(label);
        }
    }
    Ok((bad.is_empty(), if bad.is_empty() { format!("{count} nonzero determinants") } else { bad.join("; ") }))
}

fn c3_p2p2_shapes() -> Outcome {
    let s = GradedStructure::uniform(&[2, 2], &[3, 3], 5)?;
    let a = shape_only(&s, &md(&[12, 12]));
    let b = shape_only(&s, &md(&[10, 10]));
    let ok = (a.rows, a.koszul_cols, a.sylvester_cols) == (8281, 15125, 1)
        && a.cols() == 15126
        && (b.rows, b.koszul_cols, b.sylvester_cols) == (4356, 6480, 36)
        && b.cols() == 6516;
    Ok((ok, format!("{}x{} and {}x{}", a.cols(), a.rows, b.cols(), b.rows)))
}

fn structures_2_2() -> Result<Vec<GradedStructure>> {
    Ok(vec![GradedStructure::uniform(&[1, 1], &[2, 2], 3)?, GradedStructure::uniform(&[2, 1], &[2, 2], 4)?])
}

fn c4_multiplication() -> Outcome {
    let mut summary = Vec::new();
    let mut ok = true;
    for s in structures_2_2()? {
        let f = random_system::<F31>(&s, 7);
        let r = verify::multiplication(&f)?;
        ok &= r.passed;
        summary.push(format!("dims {:?}: {} identities", s.dims(), r.lines.len()));
    }
    Ok((ok, summary.join(", ")))
}

fn c5_basis() -> Outcome {
    let mut summary = Vec::new();
    let mut ok = true;
    for s in structures_2_2()? {
        let f = random_system::<F31>(&s, 11);
        let r = verify::basis(&f)?;
        ok &= r.passed;
        summary.push(format!("dims {:?}: {} checks", s.dims(), r.lines.len()));
        if !r.passed {
            summary.push(r.to_string());
        }
    }
    Ok((ok, summary.join(", ")))
}

fn c6_duality() -> Outcome {
    let s = GradedStructure::uniform(&[1, 1], &[2, 2], 3)?;
    let f = random_system::<F31>(&s, 5);
    let regions = Regions::new(&s);
    let delta = regions.delta().clone();
    let mut checked = 0;
    let mut bad = Vec::new();
    for mu in MultiDegree::window(&MultiDegree::zeros(2), &delta) {
        if regions.in_gamma01(&mu) {
            continue;
        }
        checked += 1;
        let lhs = quotient_dim(&f, &mu)?;
        let dual = &delta - &mu;
        let m = macaulay_matrix(&f, &dual)?;
        let rhs = m.nrows() - m.rank()?;
        if lhs != rhs {
            bad.push(format!("mu={mu}: {lhs} vs {rhs}"));
        }
    }
    Ok((bad.is_empty() && checked > 0, format!("{checked} degrees {}", bad.join("; "))))
}

fn c7_jacobian() -> Outcome {
    let mut ok = true;
    let mut summary = Vec::new();
    for d in [[1, 1], [2, 1]] {
        let s = GradedStructure::uniform(&[1, 1], &d, 3)?;
        let f = random_system::<Q>(&s, 3);
        let r = verify::jacobian(&f)?;
        ok &= r.passed;
        summary.push(format!("3x{:?}: {}", d, if r.passed { "member" } else { "not a member" }));
    }
    Ok((ok, summary.join(", ")))
}

fn coranks<S: Field>(s: &GradedStructure, kappa: usize, seed: u64) -> Result<Vec<usize>> {
    let points = random_points::<S>(s, kappa, seed);
    let f = system_through_points(s, &points, seed + 1)?;
    drop_of_rank_degrees(s).iter().map(|nu| corank(&f, nu)).collect()
}

fn c8_drop_of_rank() -> Outcome {
    let cases = [
        (GradedStructure::uniform(&[1, 1], &[1, 1], 3)?, vec![0, 1, 2]),
        (GradedStructure::uniform(&[1, 1], &[2, 1], 3)?, vec![0, 1, 2, 3]),
        (GradedStructure::uniform(&[1, 1, 1], &[1, 1, 1], 4)?, vec![0, 1]),
    ];
    let mut ok = true;
    let mut runs = 0;
    let mut bad = Vec::new();
    for (s, kappas) in &cases {
        if drop_of_rank_degrees(s).len() < 3 {
            ok = false;
        }
        for &kappa in kappas {
            let a = coranks::<F31>(s, kappa, 100 + kappa as u64)?;
            let b = coranks::<F31B>(s, kappa, 200 + kappa as u64)?;
            runs += 1;
            if a != b || a.iter().any(|&c| c != kappa) {
                ok = false;
                bad.push(format!("degrees {:?} kappa {kappa}: {a:?} / {b:?}", s.degrees()[0].0));
            }
        }
    }
    Ok((ok, format!("{runs} systems {}", bad.join("; "))))
}

fn c9_koszul() -> Outcome {
    let s = GradedStructure::uniform(&[1, 1], &[1, 1], 3)?;
    let f = random_system::<F31>(&s, 9);
    let r = verify::koszul(&f, &md(&[4, 4]))?;
    let at_22 = r.lines.iter().any(|l| l.starts_with("ok") && l.contains("mu=(2,2)"));
    Ok((r.passed && at_22, format!("{} degrees", r.lines.len())))
}

fn univariate(layout: &Arc<BlockLayout>, degree: i64, seed: u64) -> MultiPoly<Q> {
    if degree == 0 {
        return MultiPoly::constant(layout, Q::from_i64(1));
    }
    let s = GradedStructure::uniform(&[1], &[degree], 2).expect("valid degree");
    let f = random_system::<Q>(&s, seed);
    f.polys()[0].relabel(layout, &[0, 1])
}

fn c10_univariate() -> Outcome {
    let layout = Arc::new(BlockLayout::new(&[1])?);
    let mut bad = Vec::new();
    let mut checked = 0;
    for (d0, d1) in [(3i64, 3i64), (4, 3), (5, 4)] {
        for g in 0..=2i64 {
            let seed = (100 * d0 + 10 * d1 + g) as u64;
            let common = univariate(&layout, g, seed);
            let f0 = common.checked_mul(&univariate(&layout, d0 - g, seed + 1))?;
            let f1 = common.checked_mul(&univariate(&layout, d1 - g, seed + 2))?;
            let s = GradedStructure::new(&[1], vec![md(&[d0]), md(&[d1])])?;
            let f = PolySystem::new(s.clone(), vec![f0, f1])?;
            let delta = Regions::new(&s).delta().0[0];
            let m = macaulay_matrix(&f, &md(&[delta + 1]))?.corank()?;
            checked += 1;
            if m != g as usize {
                bad.push(format!("({d0},{d1}) g={g}: M corank {m}"));
            }
            for nu in (delta - d0.min(d1) + 1)..=delta {
                let h = elimination_matrix(&f, &md(&[nu]))?;
                let c = h.corank()?;
                checked += 1;
                if h.shape().sylvester_cols == 0 || c != g as usize {
                    bad.push(format!("({d0},{d1}) g={g} nu={nu}: H corank {c}"));
                }
            }
        }
    }
    Ok((bad.is_empty(), format!("{checked} matrices {}", bad.join("; "))))
}

fn c11_elimination_ideal() -> Outcome {
    let s = GradedStructure::uniform(&[1, 1], &[2, 2], 3)?;
    let f = random_system::<F31>(&s, 13).without(2)?;
    let regions = Regions::new(f.structure());
    let mut checked = 0;
    let mut bad = Vec::new();
    for mu in MultiDegree::window(&MultiDegree::zeros(2), &md(&[6, 6])) {
        if regions.gamma(1).contains(&mu) {
            continue;
        }
        checked += 1;
        let sat = stable_saturation(&f, &mu, None)?;
        let ideal = multielim::oracle::ideal_component(&f, &mu)?;
        if sat.dim() != ideal_dim(&f, &mu)? || !same_span(&sat.basis, &ideal) {
            bad.push(format!("mu={mu}"));
        }
    }
    Ok((bad.is_empty() && checked > 0, format!("{checked} degrees {}", bad.join("; "))))
}

type Criterion = (u32, &'static str, Duration, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        (1, "Dixon sizes", Duration::from_secs(1), c1_dixon_sizes),
        (2, "Dixon nonvanishing", Duration::from_secs(1), c2_dixon_nonvanishing),
        (3, "P2xP2 shapes", Duration::from_millis(100), c3_p2p2_shapes),
        (4, "multiplication identities", Duration::from_secs(30), c4_multiplication),
        (5, "Sylvester basis", Duration::from_secs(60), c5_basis),
        (6, "duality dimensions", Duration::from_secs(60), c6_duality),
        (7, "Jacobian proportionality", Duration::from_secs(10), c7_jacobian),
        (8, "drop-of-rank corank", Duration::from_secs(120), c8_drop_of_rank),
        (9, "Koszul syzygies", Duration::from_secs(30), c9_koszul),
        (10, "univariate gcd regression", Duration::from_secs(5), c10_univariate),
        (11, "elimination ideal triviality", Duration::from_secs(30), c11_elimination_ideal),
    ];
    let mut failures = 0;
    for (id, name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok((ok, detail)) => (ok && elapsed < budget, detail),
            Err(e) => (false, format!("error: {e}")),
        };
        if !ok {
            failures += 1;
        }
        println!(
            "[{}] {id:>2} {name}: {} ({:.3}s, budget {:.1}s)",
            if ok { "PASS" } else { "FAIL" },
            detail.trim_end(),
            elapsed.as_secs_f64(),
            budget.as_secs_f64()
        );
    }
    if failures == 0 {
        println!("acceptance: all 11 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failures} criteria failed");
        ExitCode::FAILURE
    }
}
