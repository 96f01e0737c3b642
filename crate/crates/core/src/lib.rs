//! Exact symbolic kernel for homogeneity supermanifolds.
//!
//! Superfunctions are Grassmann polynomials in the odd coordinates of a
//! [`Chart`] with rational-function coefficients in the even ones; every
//! coordinate carries a parity and a rational weight, and the diagonal
//! weight vector field `sum w_a x^a d/dx^a` defines homogeneity.

pub mod chart;
pub mod error;
pub mod field;
pub mod form;
pub mod homogeneity;
pub mod lifts;
pub mod linalg;
pub mod poincare;
pub mod poly;
pub mod random;
pub mod rational;
pub mod scalar;
pub mod superfunction;
pub mod supermatrix;
pub mod symplectic;
pub mod syntax;

pub use chart::{weight_monoid, Chart, Coordinate, Degree, Parity};
pub use error::{Error, Result};
pub use poly::{Monomial, Poly};
pub use rational::EvenRational;
pub use scalar::{format_scalar, frac, int, parse_scalar, Scalar};
pub use superfunction::{OddMonomial, SuperFunction};
pub use field::VectorField;
pub use form::{form_weight, DiffMonomial, SuperForm};
pub use homogeneity::{
    check_weight_field_identity, field_weight, power, pushforward, second_weight_of, weight_of, CoordinateMap,
    WeightAnswer,
};
pub use lifts::{
    cotangent_lift, distribution_is_homogeneous, tangent_lift, tensor_weight, verify_witnesses, DistVerdict, LiftKind,
    LiftedChart, Tensor,
};
pub use linalg::Matrix;
pub use poincare::{elimination_primitive, homogeneous_antiderivative, poincare_primitive, Branch, Primitive};
pub use symplectic::{
    canonical_symplectic, darboux_model, darboux_verify, musical, normal_form, rank_at_body_points,
    skew_form_at_base, CanonicalForms, DarbouxBasis, DarbouxReport, GradedSkewForm, GradedVectorSpace,
    RankReport,
};
pub use supermatrix::{
    berezinian, block_inverse, degree_check, matmul, supergroup_axiom_suite, MatrixGroup, SuiteReport,
    SuperMatrix,
};
pub use syntax::{
    parse_chart, parse_expression, parse_expression_with_warnings, parse_field, parse_form, parse_function, Expr,
    Parsed,
};
