//! Numerical engine for lattice sums over the tree of nonnegative
//! unimodular matrices (the Stern-Brocot tree). Each node contributes a
//! support-function difference gamma(u) + gamma(w) - gamma(u + w) for a
//! convex-curve support gamma; power sums of these terms converge to
//! curve-specific constants, which this crate evaluates with certified or
//! estimated truncation tails.
//!
//! Modules:
//! - [`lattice`]: the tree of 2x2 determinant-one matrices, enumeration,
//!   and locating the node owning a primitive vector.
//! - [`support`]: the built-in curve catalog with closed-form supports,
//!   plus sampled curves from CSV/JSON point lists.
//! - [`series`]: the summation engine (power sums, the cycloid's arctan
//!   form, mixed two-curve sums, certified subtree bounds).
//! - [`geomoracle`]: independent geometric evaluations (tangent lines,
//!   curvilinear region areas, mixed volumes) used to cross-check the
//!   engine and to certify tails.
//! - [`tornheim`]: the coprime double series sum 1/(b d (b+d))^s by direct
//!   and zeta-accelerated routes, and coprime-pair enumeration from the
//!   tree.
//! - [`contfrac`]: continued-fraction expansions and the weighted
//!   convergent series reaching alpha + 1 and alpha.
//! - [`quad`], [`accum`], [`error`]: adaptive quadrature, compensated
//!   accumulation, and the shared error type.

pub mod accum;
pub mod contfrac;
pub mod error;
pub mod geomoracle;
pub mod lattice;
pub mod quad;
pub mod series;
pub mod support;
pub mod tornheim;

pub use accum::{AccumulationMode, Accumulator};
pub use contfrac::{
    expand, series_abs, series_sq, working_digits, AlphaSpec, CFExpansion, NamedAlpha,
};
pub use error::{Error, Result};
pub use geomoracle::{
    mixed_volume_oracle, region_area, region_area_with, region_between, tangent, tangent_lengths,
    triangle_area, TangentLine,
};
pub use lattice::{
    children, enumerate, gcd, locate, mediant, root, PrimitiveVector, TraversalOrder, TreeIter,
    UnimodularPair,
};
pub use quad::{integrate, QuadratureSpec};
pub use series::{
    mixed_sum, subtree_tail_bound, sum_cycloid_arctan, sum_power, sum_power_stream,
    sum_power_with, term, ExecPlan, SeriesResult, SumControls, TailKind,
};
pub use tornheim::{
    coprime_pairs_via_tree, tornheim_coprime, zeta, CoprimePairs, TornheimMode, TornheimQuery,
};
pub use support::{
    gamma_astroid, gamma_circle, gamma_cycloid, gamma_hyperbola, gamma_parabola, gamma_sampled,
    gamma_tractrix, Convexity, Curve, SampledCurve, TermSign,
};
