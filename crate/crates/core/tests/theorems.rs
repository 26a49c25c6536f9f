//! Structural identities checked against the brute-force oracle on small
//! generic instances, plus negative controls.

use multielim::elim::{corank, dixon_family, dixon_structure};
use multielim::forms::{order_variant_jacobian, VariableOrder};
use multielim::oracle::{hilbert_function, random_points, spot_check, stable_saturation, system_through_points};
use multielim::regions::{NuKind, Regions};
use multielim::verify::{self, admissible_indices, jacobian_constant};
use multielim::{
    hybrid_matrix, macaulay_matrix, random_system, shape_only, sylvester_form, twisted_jacobian, Field, GradedStructure, MultiDegree, F31, F31B, Q,
};
use num_traits::Zero;
use proptest::prelude::*;

fn md(v: &[i64]) -> MultiDegree {
    MultiDegree(v.to_vec())
}

/// `d_1^(n+1) * prod_{l>=2} d_l^(n_l + ... + n_r + 1)` for per-block uniform
/// degrees: the constant relating the derivative Jacobian to `Lambda_0`
/// modulo `I_delta` under the smallest-index decomposition.
fn jacobian_factor(dims: &[usize], d: &[i64]) -> i64 {
    let n: usize = dims.iter().sum();
    let mut c = d[0].pow(n as u32 + 1);
    for l in 1..dims.len() {
        let tail: usize = dims[l..].iter().sum();
        c *= d[l].pow(tail as u32 + 1);
    }
    c
}

#[test]
fn jacobian_constants_follow_block_formula() {
    let cases: &[(&[usize], &[i64], i64)] = &[
        (&[1, 1], &[1, 1], 1),
        (&[1, 1], &[2, 1], 8),
        (&[1, 1], &[1, 2], 4),
        (&[1, 1], &[2, 2], 32),
        (&[1, 1], &[3, 1], 27),
        (&[1, 1], &[1, 3], 9),
        (&[2, 1], &[1, 2], 4),
        (&[1, 2], &[1, 2], 8),
    ];
    for &(dims, d, expected) in cases {
        assert_eq!(jacobian_factor(dims, d), expected);
        let n: usize = dims.iter().sum();
        let s = GradedStructure::uniform(dims, d, n + 1).unwrap();
        let f = random_system::<Q>(&s, 3);
        assert_eq!(jacobian_constant(&f).unwrap(), Some(Q::from_i64(expected)), "dims {dims:?} degree {d:?}");
    }
}

#[test]
fn jacobian_product_formula_holds_when_later_blocks_are_linear() {
    for d in [[1, 1], [2, 1], [3, 1]] {
        let s = GradedStructure::uniform(&[1, 1], &d, 3).unwrap();
        let f = random_system::<Q>(&s, 11);
        assert!(verify::jacobian(&f).unwrap().passed, "{d:?}");
    }
    let s = GradedStructure::uniform(&[1, 1], &[1, 2], 3).unwrap();
    let f = random_system::<Q>(&s, 11);
    assert!(!verify::jacobian(&f).unwrap().passed);
}

#[test]
fn twisted_jacobian_generates_top_quotient() {
    for d in [[1, 1], [2, 2], [2, 1]] {
        let s = GradedStructure::uniform(&[1, 1], &d, 3).unwrap();
        let f = random_system::<F31>(&s, 5);
        let delta = Regions::new(&s).delta().clone();
        let lambda = twisted_jacobian(&f);
        let m = macaulay_matrix(&f, &delta).unwrap();
        assert!(!m.contains_poly(&lambda).unwrap());
        let sat = stable_saturation(&f, &delta, None).unwrap();
        assert_eq!(sat.dim(), m.rank().unwrap() + 1);
        let basis = m.row_basis();
        let v = lambda.coefficients_in(basis).unwrap();
        let mut span = multielim::linalg::Echelon::new(basis.len());
        for b in &sat.basis {
            span.insert(b.clone());
        }
        assert!(span.contains(&v));
    }
}

#[test]
fn order_variants_agree_up_to_unit() {
    let s = GradedStructure::uniform(&[1, 1], &[1, 1], 3).unwrap();
    let f = random_system::<Q>(&s, 2);
    let delta = Regions::new(&s).delta().clone();
    let m = macaulay_matrix(&f, &delta).unwrap();
    let ideal = m.column_space().unwrap();
    let mut base = m.coefficients(&twisted_jacobian(&f)).unwrap();
    ideal.reduce(&mut base);
    let order = VariableOrder { blocks: vec![1, 0], within: vec![vec![1, 0], vec![0, 1]] };
    for polys in [[0, 1, 2], [2, 0, 1], [1, 0, 2]] {
        let mut v = m.coefficients(&order_variant_jacobian(&f, &order, &polys).unwrap()).unwrap();
        ideal.reduce(&mut v);
        let k = base.iter().position(|x| !x.is_zero()).unwrap();
        assert!(!v[k].is_zero());
        let c = v[k].clone() / base[k].clone();
        assert!(v.iter().zip(&base).all(|(a, b)| *a == c.clone() * b));
    }
}

#[test]
fn multiplication_controls_fail() {
    // x^alpha Sylv_alpha alone is not in I_delta: the identity needs Sylv_0.
    let s = GradedStructure::uniform(&[1, 1], &[2, 2], 3).unwrap();
    let f = random_system::<F31>(&s, 7);
    let delta = Regions::new(&s).delta().clone();
    let m = macaulay_matrix(&f, &delta).unwrap();
    for group in admissible_indices(&s) {
        for alpha in group {
            let shifted = sylvester_form(&f, &alpha).unwrap().mul_monomial(&alpha.as_exponent());
            assert!(!m.contains_poly(&shifted).unwrap(), "{alpha}");
        }
    }
}

#[test]
fn sylvester_forms_are_inertia_forms() {
    let s = GradedStructure::uniform(&[2, 1], &[2, 2], 4).unwrap();
    let f = random_system::<F31>(&s, 4);
    let delta = Regions::new(&s).delta().clone();
    for group in admissible_indices(&s) {
        let nu = &delta - &group[0].norms();
        let sat = stable_saturation(&f, &nu, None).unwrap();
        let h = hybrid_matrix(&f, &nu).unwrap();
        let mut span = multielim::linalg::Echelon::new(h.nrows());
        for b in &sat.basis {
            span.insert(b.clone());
        }
        for idx in &group {
            let v = sylvester_form(&f, idx).unwrap().coefficients_in(h.row_basis()).unwrap();
            assert!(span.contains(&v), "{idx}");
        }
    }
}

#[test]
fn basis_theorem_over_second_prime() {
    let s = GradedStructure::uniform(&[1, 1], &[2, 3], 3).unwrap();
    assert!(verify::basis(&random_system::<F31B>(&s, 8)).unwrap().passed);
    assert!(verify::duality(&random_system::<F31B>(&s, 8)).unwrap().passed);
}

#[test]
fn basis_theorem_fails_with_common_root() {
    let s = GradedStructure::uniform(&[1, 1], &[2, 2], 3).unwrap();
    let points = random_points::<F31>(&s, 1, 5);
    let f = system_through_points(&s, &points, 6).unwrap();
    assert!(!verify::basis(&f).unwrap().passed);
}

#[test]
fn saturation_multiplier_does_not_matter() {
    let s = GradedStructure::uniform(&[1, 1], &[2, 2], 3).unwrap();
    let f = random_system::<F31>(&s, 1);
    for mu in [md(&[2, 2]), md(&[3, 2]), md(&[1, 3])] {
        assert!(spot_check(&f, &mu, 4).unwrap(), "{mu}");
    }
}

#[test]
fn hilbert_functions_count_planted_roots() {
    let s = GradedStructure::uniform(&[1, 1], &[2, 1], 3).unwrap();
    for kappa in 0..=3 {
        let f = system_through_points(&s, &random_points::<F31>(&s, kappa, 40 + kappa as u64), 1).unwrap();
        for nu in verify::drop_of_rank_degrees(&s) {
            let hf = hilbert_function(&f, &nu).unwrap();
            assert_eq!(hf.saturated, kappa, "kappa {kappa} nu {nu}");
            assert_eq!(corank(&f, &nu).unwrap(), kappa);
            // At hybrid degrees the Macaulay block alone may miss inertia forms.
            if shape_only(&s, &nu).sylvester_cols == 0 {
                assert_eq!(hf.ideal, kappa);
            } else {
                assert!(hf.ideal >= kappa);
            }
        }
    }
}

#[test]
fn dixon_coranks_agree_across_primes() {
    for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        let s = dixon_structure(m, n);
        let a = random_system::<F31>(&s, 9);
        let b = random_system::<F31B>(&s, 9);
        for member in dixon_family(m, n) {
            let ca = if member.hybrid { hybrid_matrix(&a, &member.nu).unwrap().corank().unwrap() } else { corank(&a, &member.nu).unwrap() };
            let cb = if member.hybrid { hybrid_matrix(&b, &member.nu).unwrap().corank().unwrap() } else { corank(&b, &member.nu).unwrap() };
            assert_eq!((ca, cb), (0, 0), "(m,n)=({m},{n}) nu={}", member.nu);
        }
    }
}

fn small_structures() -> impl Strategy<Value = GradedStructure> {
    prop_oneof![Just(vec![1usize, 1]), Just(vec![2, 1]), Just(vec![1]), Just(vec![1, 1, 1])].prop_flat_map(|dims| {
        let r = dims.len();
        let n: usize = dims.iter().sum();
        proptest::collection::vec(proptest::collection::vec(1i64..=2, r), n + 1)
            .prop_map(move |ds| GradedStructure::new(&dims, ds.into_iter().map(MultiDegree).collect()).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hybrid_matrices_exist_exactly_at_hybrid_degrees(s in small_structures(), seed in 0u64..1000, shift in 0i64..3) {
        let regions = Regions::new(&s);
        let f = random_system::<F31>(&s, seed);
        let lo = &regions.drop_of_rank_corner() - &MultiDegree::splat(s.r(), 1);
        let hi = regions.delta() + &MultiDegree::splat(s.r(), shift);
        for nu in MultiDegree::window(&lo, &hi) {
            let built = hybrid_matrix(&f, &nu);
            let hybrid = matches!(regions.classify(&nu).kind, NuKind::Hybrid { .. });
            prop_assert_eq!(built.is_ok(), hybrid);
            if let Ok(h) = built {
                prop_assert_eq!(h.shape(), shape_only(&s, &nu));
            }
        }
    }

    #[test]
    fn generic_systems_have_full_rank_hybrid_matrices(s in small_structures(), seed in 0u64..1000) {
        let regions = Regions::new(&s);
        let f = random_system::<F31>(&s, seed);
        let nu = regions.delta().clone();
        let h = hybrid_matrix(&f, &nu).unwrap();
        prop_assert_eq!(h.corank().unwrap(), 0);
    }

    #[test]
    fn coranks_agree_between_fields(seed in 0u64..1000, kappa in 0usize..=2) {
        let s = GradedStructure::uniform(&[1, 1], &[1, 1], 3).unwrap();
        let fa = system_through_points(&s, &random_points::<F31>(&s, kappa, seed), seed).unwrap();
        let fb = system_through_points(&s, &random_points::<F31B>(&s, kappa, seed), seed).unwrap();
        for nu in verify::drop_of_rank_degrees(&s) {
            prop_assert_eq!(corank(&fa, &nu).unwrap(), corank(&fb, &nu).unwrap());
        }
    }
}

#[test]
fn field_trait_is_usable_generically() {
    fn det_of_identity<S: Field>() -> S {
        multielim::ExactMatrix::<S>::identity(3).det().unwrap()
    }
    assert_eq!(det_of_identity::<Q>(), Q::from_i64(1));
    assert_eq!(det_of_identity::<F31>(), F31::from_i64(1));
}
