//! Exact arithmetic: rationals, dense polynomials and the combinatorial
//! numbers used by the Ehrhart formulas.

pub mod combinat;
pub mod poly;
pub mod rational;

pub use combinat::{
    binomial, factorial, harmonic, harmonic2, stirling1_column, stirling1_unsigned,
};
pub use poly::{binom_poly, interpolate, interpolate_naturals, poly_shift, InterpolationError, Polynomial};
pub use rational::{format_fraction, int, is_nonnegative_integer, parse_fraction, rat, FractionParseError, Rational};
