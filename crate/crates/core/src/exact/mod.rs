//! Exact arithmetic kernel: rationals, cyclotomic numbers, multivariate
//! Laurent polynomials and rational functions, and exact linear algebra.

pub mod cyclotomic;
pub mod laurent;
pub mod matrix;
pub mod ratfunc;
pub mod rational;
pub mod snf;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, Cyclotomic};
pub use laurent::{var_name, var_z, LaurentPoly, Mono, Var, VAR_Q, VAR_T, VAR_V};
pub use matrix::{Field, Matrix, NonSquare};
pub use ratfunc::{RatFunc, ZeroInput};
pub use rational::{as_i64, is_integer, mod1, parse_rat, rat, rat_int, rat_string, Rat};
pub use snf::{smith_normal_form, SmithNormalForm};
