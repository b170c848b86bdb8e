//! Exact arithmetic in prime fields, small extension fields, and univariate
//! polynomial rings stacked on top of them.
//!
//! Rings are *context objects*: a [`PrimeField`] knows its modulus, a
//! [`PolyRing`] knows its base ring and variable name, and elements are
//! plain data (`u64`, `Vec<u64>`, [`Poly`]). Every operation goes through the
//! context, so the same generic code runs over `F_p`, `F_{p^k}`, `F_p[T]`,
//! `F_{p^k}[T]`, `Z` and `Q`.

mod expr;
mod ext;
mod factor;
mod poly;
mod prime;
mod rational;

use std::fmt::Debug;
use std::hash::Hash;

pub use expr::{parse_expr, FromMPoly, MPoly, Monomial, VAR_S, VAR_T, VAR_X};
pub use ext::ExtField;
pub use factor::{
    distinct_degree_factorization, distinct_degree_pattern, equal_degree_split, factor_squarefree,
    is_irreducible, is_squarefree,
};
pub use poly::{discriminant, resultant, Poly, PolyRing};
pub use prime::{is_prime_u64, PrimeField};
pub use rational::{IntegerRing, RationalField};

/// A commutative ring with identity, given as a context object.
pub trait Ring: Clone + Debug + Send + Sync {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// 0 for `Z` and `Q`, otherwise the prime characteristic.
    fn characteristic(&self) -> u64;

    /// Human-readable form, as used in the fixture tables
    /// (`3T + 1`, `s + 2`, `-5/2`).
    fn render(&self, a: &Self::Elem) -> String;

    /// True when `render(a)` can be juxtaposed with a monomial without
    /// parentheses (`2T` yes, `T + 1` no).
    fn is_atomic(&self, _a: &Self::Elem) -> bool {
        true
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
}

/// A finite field with an explicit enumeration of its elements.
pub trait FiniteField: Field {
    fn order(&self) -> u64;

    /// Bijection `0..order()` onto the field.
    fn element(&self, index: u64) -> Self::Elem;

    fn random_element<G: rand::Rng + ?Sized>(&self, rng: &mut G) -> Self::Elem {
        self.element(rng.gen_range(0..self.order()))
    }
}

/// Rings of odd prime characteristic p carrying the p-power Frobenius.
pub trait CharP: Ring {
    /// `a ↦ a^p`. On `F_p[T]` this is `u(T) ↦ u(T^p)`; on `F_q[T]` the
    /// coefficients pass through the Frobenius of `F_q` as well.
    fn frobenius(&self, a: &Self::Elem) -> Self::Elem;
}

/// Integral domains with exact division, enough for fraction-free
/// (Bareiss) elimination.
pub trait ExactDivision: Ring {
    /// `Some(q)` with `q * b == a`, or `None` if `b` does not divide `a`.
    fn div_exact(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;
}
