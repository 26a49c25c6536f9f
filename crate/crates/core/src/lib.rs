//! Multigraded elimination matrices for systems of multihomogeneous
//! polynomials over products of projective spaces.
//!
//! Everything is exact. The core is generic over the scalar [`Field`];
//! the concrete aliases below cover the fields used in practice.

pub mod elim;
pub mod error;
pub mod field;
pub mod forms;
pub mod io;
pub mod linalg;
pub mod mpoly;
pub mod oracle;
pub mod regions;
pub mod verify;

pub use elim::{count_roots, elimination_matrix, hybrid_matrix, macaulay_matrix, shape_only, ElimMatrix, Shape};
pub use error::{Error, Result};
pub use field::{Field, FieldElement, FieldSpec, Fp, Rational, DEFAULT_PRIME};
pub use forms::{jacobian_determinant, sylvester_form, twisted_jacobian, SylvesterIndex};
pub use linalg::ExactMatrix;
pub use mpoly::{monomial_basis, random_system, GradedStructure, MultiDegree, MultiPoly, PolySystem};
pub use regions::{admissible_nu, critical_degree, gamma, q_alpha, DegreeRegion, SignedOrthant};

/// The rationals.
pub type Q = Rational;
/// `Z/(2^31 - 1)`, the default verification field.
pub type F31 = Fp<DEFAULT_PRIME>;
/// `Z/2147483629`, the largest prime below `2^31 - 1`; used for cross-checks.
pub type F31B = Fp<2_147_483_629>;

pub type QPoly = MultiPoly<Q>;
pub type F31Poly = MultiPoly<F31>;
pub type QSystem = PolySystem<Q>;
pub type F31System = PolySystem<F31>;
pub type QMatrix = ExactMatrix<Q>;
pub type F31Matrix = ExactMatrix<F31>;

/// Primes available to runtime field selection (`Fp:<p>`).
pub const SUPPORTED_PRIMES: &[u64] = &[2_147_483_647, 2_147_483_629, 1_000_000_007, 998_244_353, 65_521, 32_003, 101];

/// Runs `$body` with the type alias `$S` bound to the field described by
/// `$spec`. Evaluates to `Err(Error::UnsupportedField)` for primes outside
/// [`SUPPORTED_PRIMES`].
#[macro_export]
macro_rules! with_field {
    ($spec:expr, $S:ident => $body:expr) => {{
        match $spec {
            $crate::FieldSpec::Rationals => {
                type $S = $crate::Q;
                Ok($body)
            }
            $crate::FieldSpec::Prime(2_147_483_647) => {
                type $S = $crate::Fp<2_147_483_647>;
                Ok($body)
            }
            $crate::FieldSpec::Prime(2_147_483_629) => {
                type $S = $crate::Fp<2_147_483_629>;
                Ok($body)
            }
            $crate::FieldSpec::Prime(1_000_000_007) => {
                type $S = $crate::Fp<1_000_000_007>;
                Ok($body)
            }
            $crate::FieldSpec::Prime(998_244_353) => {
                type $S = $crate::Fp<998_244_353>;
                Ok($body)
            }
            $crate::FieldSpec::Prime(65_521) => {
                type $S = $crate::Fp<65_521>;
                Ok($body)
            }
            $crate::FieldSpec::Prime(32_003) => {
                type $S = $crate::Fp<32_003>;
                Ok($body)
            }
            $crate::FieldSpec::Prime(101) => {
                type $S = $crate::Fp<101>;
                Ok($body)
            }
            other => Err($crate::Error::UnsupportedField { required: "a supported prime (see SUPPORTED_PRIMES) or Q", found: other }),
        }
    }};
}
