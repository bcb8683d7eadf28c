//! Exact-arithmetic toolkit for endomorphisms of projective space over Q.
//!
//! Everything is computed symbolically: sparse rational polynomials, Groebner
//! bases, resultants, and from those the critical locus, branch locus, fiber
//! divisors, post-critical orbits and PCF type detection for self-maps of
//! `P^n`, plus the constructions used to produce minimally branched and
//! non-postcritically-finite families.

pub mod constructions;
pub mod dynamics;
pub mod error;
pub mod ideal;
pub mod jsonio;
pub mod limits;
pub mod pcf;
pub mod poly;

pub use error::{Error, Result};
pub use poly::{Monomial, MonomialOrder, Poly, Scalar};
