//! Exact certified bounds on the range of a derivative from finite Hausdorff
//! moments.
//!
//! Given the first n+1 moments α_k = ∫₀¹ x^k f(x) dx of an unknown
//! continuously differentiable f on [0, 1], every mean value of f′ against a
//! nonnegative Bernstein weight is a value of f′. This crate computes those
//! functionals exactly in rational arithmetic, assembles the certified
//! interval [A_n, B_n] they span, constructs the extremal spline witnesses
//! that show the bounds are (near-)sharp, and solves the cube-constrained
//! extremal problem for the widest possible certificate.
//!
//! All computation is exact: the scalar type is an arbitrary-precision
//! rational, linear systems are solved by fraction-free elimination, and
//! every equality in the identity web is checked as an identity, not up to a
//! tolerance.

pub mod bernstein;
pub mod certificate;
pub mod error;
pub mod extremal;
pub mod linalg;
pub mod moments;
pub mod polynomial;
mod roots;
pub mod spline;

pub mod rational;

pub use bernstein::{
    bernstein_poly, beta_norm, connection_check, convexity_project, d_diag_via_deltas,
    d_linear_form, d_table, d_value, monomial_identity_check, second_derivative_values,
    FunctionalTable, SecondDerivativeTable,
};
pub use certificate::{
    certificate, classify_n2, classify_n3, nesting_check, problem2_bounds_n2,
    strictness_annotation, CaseClassification, CaseId, CertStatus, RangeCertificate,
    SharpnessStatus,
};
pub use error::{Error, Result};
pub use extremal::{alternating_conjecture_check, maximize_spread, AlternatingCheck, ExtremalResult};
pub use linalg::{determinant_exact, hilbert_matrix, LinearSystem};
pub use moments::{
    moments_of_polynomial, parse_moments, serialize_moments, DeltaSequence, LinearConsistency,
    MomentVector,
};
pub use polynomial::{poly_moment_integral, Polynomial};
pub use rational::Rational;
pub use spline::{
    build_left_quadratic, build_n3, build_symmetric, c1_check, closed_form_c_n2,
    closed_form_c_symmetric, closed_form_peak_n2, convergence_study, derivative_range,
    geometric_t_sequence, hilbert_interpolant, interpolant_derivative_range, reflect_spline,
    sample, spline_moment, ConvergenceStudy, PiecewisePolynomial, QuadraticCoeffs, RangeEnclosure,
    SampleRow, SplineFamily, ThreePieceCoeffs, WitnessReport,
};
