//! Exact arithmetic: rationals, residues, integer polynomials, cyclotomic
//! fields, and Chebyshev-type polynomials.

pub mod chebyshev;
pub mod cyclotomic;
pub mod number;
pub mod poly;
pub mod rational;
pub mod residue;

pub use chebyshev::{chebyshev_sequence, chebyshev_t};
pub use cyclotomic::{
    cyclotomic_poly, galois_orbit_fixes, generated_subfield_degree, CyclotomicElement,
    CyclotomicField, RootSum,
};
pub use number::{euler_phi, is_prime};
pub use poly::IntPolynomial;
pub use rational::Rational;
pub use residue::Residue;
