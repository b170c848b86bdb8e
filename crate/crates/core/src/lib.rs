//! Genus-2 hyperelliptic curves `y^2 = f(x)` with real multiplication by
//! `Z[(√5 − 1)/2]`: Brumer's family, Cartier–Manin supersingularity tests,
//! a Frobenius cycle-type sieve for `A_5` sextics, quadratic-order
//! arithmetic, and the `F_2`/`F_4` representation theory of
//! `PSL_2(F_5)` acting on the 2-torsion.

pub mod brumer;
pub mod cartier;
pub mod error;
pub mod ffield;
pub mod galois;
pub mod harness;
pub mod perm;
pub mod quadorder;
pub mod repmod;

pub use error::{Error, Result};
