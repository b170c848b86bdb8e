//! Real quadratic fields `Q(√d)` and their orders `Z[cη]`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffield::is_prime_u64;

pub fn is_squarefree_int(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= n {
        if n.is_multiple_of(k * k) {
            return false;
        }
        k += 1;
    }
    true
}

/// The order of conductor `c` in the ring of integers of `Q(√d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadraticOrderDescriptor {
    d: u64,
    c: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Mod2TensorClass {
    FieldF4,
    SplitF2xF2,
    NonReduced,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SplittingType {
    Split,
    Inert,
    Ramified,
}

impl QuadraticOrderDescriptor {
    pub fn new(d: u64, c: u64) -> Result<Self> {
        if d < 2 || !is_squarefree_int(d) {
            return Err(Error::Unsupported(format!("d = {d} is not a square-free integer >= 2")));
        }
        if c == 0 {
            return Err(Error::Unsupported("conductor must be positive".into()));
        }
        Ok(Self { d, c })
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn c(&self) -> u64 {
        self.c
    }

    /// Coefficients `[g0, g1]` of the monic minimal polynomial
    /// `g(X) = X^2 + g1 X + g0` of the generator `cη`.
    pub fn min_poly(&self) -> [i128; 2] {
        let (d, c) = (self.d as i128, self.c as i128);
        if d % 4 == 1 {
            [-c * c * (d - 1) / 4, c]
        } else {
            [-c * c * d, 0]
        }
    }
}

pub fn order_discriminant(o: &QuadraticOrderDescriptor) -> u64 {
    let c2 = o.c * o.c;
    if o.d % 4 == 1 {
        c2 * o.d
    } else {
        c2 * 4 * o.d
    }
}

/// Structure of `O ⊗ F_2 = F_2[X]/(g)`, read off from `g mod 2`.
pub fn mod2_tensor_class(o: &QuadraticOrderDescriptor) -> Mod2TensorClass {
    let [g0, g1] = o.min_poly();
    let (g0, g1) = (g0.rem_euclid(2), g1.rem_euclid(2));
    let roots = (0..2).filter(|x| (x * x + g1 * x + g0) % 2 == 0).count();
    match roots {
        0 => Mod2TensorClass::FieldF4,
        // a single root in F_2 of a quadratic is a double root
        1 => Mod2TensorClass::NonReduced,
        _ => Mod2TensorClass::SplitF2xF2,
    }
}

/// Legendre symbol via Euler's criterion.
pub fn legendre(a: i64, p: u64) -> i8 {
    let f = crate::ffield::PrimeField::new(p).expect("odd prime");
    use crate::ffield::Ring;
    f.quadratic_character(f.from_i64(a))
}

pub fn splitting_type(p: u64, d: u64) -> Result<SplittingType> {
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 {
        return if d % 8 == 5 {
            Ok(SplittingType::Inert)
        } else {
            Err(Error::Unsupported(format!("behaviour of 2 in Q(√{d}) with d ≢ 5 mod 8")))
        };
    }
    Ok(match legendre(d as i64, p) {
        0 => SplittingType::Ramified,
        1 => SplittingType::Split,
        _ => SplittingType::Inert,
    })
}

/// Checks `FieldF4 ⟺ disc ≡ 5 mod 8` (and `⟺ d ≡ 5 mod 8, c odd`) on every
/// square-free `2 <= d <= d_max` and `1 <= c <= c_max`. Returns the
/// offending `(d, c)` pairs and the number of pairs checked.
pub fn sweep_mod8_criterion(d_max: u64, c_max: u64) -> (Vec<(u64, u64)>, usize) {
    let mut bad = Vec::new();
    let mut n = 0;
    for d in 2..=d_max {
        if !is_squarefree_int(d) {
            continue;
        }
        for c in 1..=c_max {
            let o = QuadraticOrderDescriptor::new(d, c).unwrap();
            let f4 = mod2_tensor_class(&o) == Mod2TensorClass::FieldF4;
            let by_disc = order_discriminant(&o) % 8 == 5;
            let by_dc = d % 8 == 5 && c % 2 == 1;
            if f4 != by_disc || f4 != by_dc {
                bad.push((d, c));
            }
            n += 1;
        }
    }
    (bad, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn o(d: u64, c: u64) -> QuadraticOrderDescriptor {
        QuadraticOrderDescriptor::new(d, c).unwrap()
    }

    #[test]
    fn discriminants() {
        assert_eq!(order_discriminant(&o(5, 1)), 5);
        assert_eq!(order_discriminant(&o(5, 2)), 20);
        assert_eq!(order_discriminant(&o(2, 1)), 8);
        assert!(QuadraticOrderDescriptor::new(12, 1).is_err());
        assert!(QuadraticOrderDescriptor::new(1, 1).is_err());
    }

    #[test]
    fn tensor_classes() {
        assert_eq!(mod2_tensor_class(&o(5, 1)), Mod2TensorClass::FieldF4);
        assert_ne!(mod2_tensor_class(&o(5, 2)), Mod2TensorClass::FieldF4);
        assert_eq!(o(13, 1).min_poly(), [-3, 1]);
        assert_eq!(mod2_tensor_class(&o(13, 1)), Mod2TensorClass::FieldF4);
        // d ≡ 1 mod 8: X^2 + X - 4 ≡ X(X + 1)
        assert_eq!(mod2_tensor_class(&o(17, 1)), Mod2TensorClass::SplitF2xF2);
        assert_eq!(mod2_tensor_class(&o(3, 1)), Mod2TensorClass::NonReduced);
    }

    #[test]
    fn legendre_values() {
        assert_eq!(legendre(5, 5), 0);
        assert_eq!(legendre(5, 11), 1);
        assert_eq!(legendre(5, 7), -1);
        assert_eq!(legendre(-1, 3), -1);
    }

    #[test]
    fn splitting() {
        assert_eq!(splitting_type(5, 5).unwrap(), SplittingType::Ramified);
        assert_eq!(splitting_type(3, 5).unwrap(), SplittingType::Inert);
        assert_eq!(splitting_type(7, 5).unwrap(), SplittingType::Inert);
        assert_eq!(splitting_type(11, 5).unwrap(), SplittingType::Split);
        assert_eq!(splitting_type(2, 5).unwrap(), SplittingType::Inert);
        assert!(matches!(splitting_type(2, 3), Err(Error::Unsupported(_))));
        assert!(matches!(splitting_type(9, 5), Err(Error::NotPrime(9))));
    }

    #[test]
    fn splitting_matches_square_count() {
        for d in [2u64, 3, 5, 13, 21] {
            for p in (3..200).filter(|&p| is_prime_u64(p)) {
                let squares = (1..p).filter(|x| (x * x) % p == d % p).count();
                let expected = if d % p == 0 {
                    SplittingType::Ramified
                } else if squares > 0 {
                    SplittingType::Split
                } else {
                    SplittingType::Inert
                };
                assert_eq!(splitting_type(p, d).unwrap(), expected, "p={p} d={d}");
            }
        }
    }

    #[test]
    fn full_sweep() {
        let (bad, n) = sweep_mod8_criterion(200, 20);
        assert!(bad.is_empty(), "{bad:?}");
        assert!(n > 2000);
    }

    proptest! {
        #[test]
        fn legendre_is_multiplicative(a in -1000i64..1000, b in -1000i64..1000, pi in 0usize..6) {
            let p = [3u64, 5, 7, 11, 101, 1009][pi];
            prop_assert_eq!(legendre(a * b, p), legendre(a, p) * legendre(b, p));
        }
    }
}
