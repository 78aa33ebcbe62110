//! Galois LCD codes over finite fields.
//!
//! The crate builds linear and constacyclic codes over GF(p^e), decides
//! whether they meet their Galois duals trivially, and computes exact
//! parameters for desk-scale lengths.
//!
//! * [`field`]: GF(p^e) arithmetic, Frobenius powers, embeddings and roots of unity.
//! * [`poly`]: univariate polynomials, reciprocals and the factorization of `x^n - lambda`.
//! * [`cosets`]: q-cyclotomic cosets on `1 + rZ_rn` and defining-set arithmetic.
//! * [`linear`]: generator-matrix codes, Galois duals, the determinant LCD test
//!   and exact minimum distance.
//! * [`constacyclic`]: constacyclic codes from defining sets, duals, LCD
//!   classification and the Hermitian LCD MDS family.
//! * [`reproduce`]: registry of worked examples recomputed end to end.

pub mod arith;
pub mod constacyclic;
pub mod cosets;
pub mod error;
pub mod field;
pub mod linear;
pub mod poly;
pub mod reproduce;

pub use error::{Error, Result};
pub use constacyclic::{classify_all_lcd, hermitian_mds_family, Catalog, ConstacyclicCode, DistanceMode};
pub use cosets::{CosetContext, DefiningSet};
pub use field::{Element, Embedding, Field, FieldSpec, GaloisParam};
pub use linear::{CodeParams, Distance, LinearCode, Matrix};
pub use poly::{Poly, Splitting};
