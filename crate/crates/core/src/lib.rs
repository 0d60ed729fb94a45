//! Exact-arithmetic verification of a complementary Vandermonde subset-sum
//! identity and of the Hopf structure on the finite dual of the infinite
//! dihedral group algebra.
//!
//! All computation is exact (big integers, big rationals, Laurent
//! polynomials); there are no floating-point paths. The crate splits into:
//!
//! - [`exact`]: the arithmetic kernel (rationals, Laurent polynomials,
//!   exact determinants and ranks);
//! - [`vandermonde`]: subset enumeration and both sides of the identity;
//! - [`tableaux`]: shapes, triangular arrays, semistandard Young tableaux,
//!   and the dual Robinson-Schensted-Knuth correspondence;
//! - [`hopfdual`]: the infinite dihedral group algebra, its dual
//!   functionals, and machine checks of the Hopf axioms, relations, and the
//!   evaluation-model isomorphism.

pub mod exact;
pub mod hopfdual;
pub mod tableaux;
pub mod vandermonde;

pub use exact::{BigRat, LaurentPoly};
