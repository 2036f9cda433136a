//! Exact arithmetic: rationals, cyclotomic numbers, polynomials, and the
//! special polynomials attached to reflection groups.

pub mod cyclotomic;
pub mod parse;
pub mod poly;
pub mod rat;
pub mod special;
pub mod upoly;

pub use cyclotomic::CycNum;
pub use parse::{parse_cyc, parse_poly, parse_poly_n};
pub use poly::{Monomial, Poly};
pub use rat::Rat;
pub use special::{delta_n, f_alpha, specht, specht_power, vandermonde};
pub use upoly::UPoly;
