//! Exact arithmetic over the rational function field in `(a,b,c,z,q)`.

mod binomial;
mod error;
mod gcd;
mod latex;
mod monomial;
mod parse;
mod poly;
mod ratfunc;
mod rational;

pub use binomial::{binomial_pair_factor, binomial_pair_factor_bruteforce, BinomialPair};
pub use error::AlgError;
pub use gcd::{poly_gcd, poly_gcd_many, poly_lcm};
pub use latex::{poly_latex, rf_latex};
pub use monomial::{Monomial, Var};
pub use parse::{parse_poly, parse_rf};
pub use poly::LaurentPoly;
pub use ratfunc::{divides_at_qpower, rf_normalize, RationalFunc};
pub use rational::Rational;

pub(crate) use ratfunc::identity_images;
