//! Structures around 321-avoiding permutations: pattern containment, the
//! skeleton/marked-path word language, exact truncated power series for the
//! class and its structural subsets, the fractal closure class built by
//! inflation, and brute-force oracles for cross-validation.
//!
//! All counting is exact (arbitrary-precision rationals); all public types
//! are immutable after construction and safe to share across threads.

// index loops over cell grids and coefficient tables stay as written
#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod fractal;
pub mod oracle;
pub mod perm;
pub mod series;
pub mod skeleton;

pub use error::Error;
pub use fractal::{basis_search, is_dn_member, is_f321_member, BasisOptions, BasisReport, FractalClass, Membership};
pub use perm::{
    classify, contains_pattern, decompose, inflate, left_to_right_maxima, one_point_deletions,
    Classification, Decomposition, DecompositionKind, Permutation,
};
pub use series::bivariate::BivariateSeries;
pub use series::build::{
    build_bivariate, build_univariate, narayana, schroder_check, solve_wreath_fixed_point,
    SeriesKind, DEFAULT_ORDER,
};
pub use series::equation::AlgebraicEquation;
pub use series::equations;
pub use series::growth::{discriminant_w, growth_constant, GrowthResult};
pub use series::poly::Poly;
pub use series::TruncatedSeries;
pub use skeleton::{
    enumerate_words, skeleton_decode, skeleton_encode, skeleton_of, word_recognize,
    word_recognize_str, Letter, Skeleton, SkeletonWord,
};

/// Exact rational scalar used by all counting series.
pub type Q = num::BigRational;
/// Arbitrary-precision integer.
pub type Z = num::BigInt;

/// Univariate truncated power series over exact rationals.
pub type QSeries = TruncatedSeries<Q>;
/// Bivariate truncated power series over exact rationals.
pub type QBivariate = BivariateSeries<Q>;
/// Dense univariate polynomial over exact rationals.
pub type QPoly = Poly<Q>;
/// Algebraic equation with exact rational polynomial coefficients.
pub type QEquation = AlgebraicEquation<Q>;

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn q_int(v: i64) -> Q {
    Q::from_integer(Z::from(v))
}
