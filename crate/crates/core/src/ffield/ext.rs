use super::{factor, CharP, ExactDivision, Field, FiniteField, PolyRing, PrimeField, Ring};
use crate::error::{Error, Result};

/// `F_{p^k} = F_p[s] / (m(s))` for a monic irreducible `m` of degree `k`.
///
/// Elements are coefficient vectors of length exactly `k` (low-to-high in
/// the generator `s`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtField {
    base: PrimeField,
    modulus: Vec<u64>,
}

impl ExtField {
    /// The extension cut out by the first monic irreducible of degree `k`
    /// in index order (constant term varies fastest). For `p = 3, k = 2`
    /// this is `s^2 + 1`, so `s` is a square root of −1.
    pub fn new(p: u64, k: usize) -> Result<Self> {
        let base = PrimeField::new(p)?;
        if k == 0 {
            return Err(Error::Unsupported("extension degree 0".into()));
        }
        if k == 1 {
            return Ok(Self { base, modulus: vec![0, 1] });
        }
        let ring = PolyRing::new(base, "s");
        let count = p.checked_pow(k as u32).expect("p^k fits in u64");
        for idx in 0..count {
            let mut coeffs = digits(idx, p, k);
            coeffs.push(1);
            let m = ring.from_coeffs(coeffs.clone());
            if factor::is_irreducible(&ring, &m) {
                return Ok(Self { base, modulus: coeffs });
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    /// Use an explicit monic modulus (low-to-high), checked for irreducibility.
    pub fn with_modulus(base: PrimeField, modulus: Vec<u64>) -> Result<Self> {
        let ring = PolyRing::new(base, "s");
        let m = ring.from_coeffs(modulus.clone());
        if !ring.is_monic(&m) || m.degree().unwrap_or(0) == 0 {
            return Err(Error::Unsupported("modulus must be monic of positive degree".into()));
        }
        if !factor::is_irreducible(&ring, &m) {
            return Err(Error::NotIrreducible { p: base.p() });
        }
        Ok(Self { base, modulus: m.into_coeffs() })
    }

    pub fn base(&self) -> &PrimeField {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Embed a prime-field element.
    pub fn embed(&self, a: u64) -> Vec<u64> {
        let mut v = vec![0; self.degree()];
        v[0] = a % self.base.p();
        v
    }

    /// The class of `s`.
    pub fn generator(&self) -> Vec<u64> {
        let k = self.degree();
        if k == 1 {
            // s ≡ −m_0
            return vec![self.base.neg(&self.modulus[0])];
        }
        let mut v = vec![0; k];
        v[1] = 1;
        v
    }

    /// Reduce an arbitrary polynomial in `s` into the field.
    pub fn from_poly(&self, coeffs: &[u64]) -> Vec<u64> {
        let k = self.degree();
        let b = &self.base;
        let mut r: Vec<u64> = coeffs.iter().map(|c| c % b.p()).collect();
        for i in (k..r.len()).rev() {
            let c = r[i];
            if c == 0 {
                continue;
            }
            for j in 0..k {
                r[i - k + j] = b.sub(&r[i - k + j], &b.mul(&c, &self.modulus[j]));
            }
            r[i] = 0;
        }
        r.resize(k, 0);
        r
    }

    /// The prime-field value when `a` lies in `F_p`.
    pub fn as_prime(&self, a: &[u64]) -> Option<u64> {
        a[1..].iter().all(|&c| c == 0).then_some(a[0])
    }
}

fn digits(mut idx: u64, p: u64, k: usize) -> Vec<u64> {
    let mut v = Vec::with_capacity(k);
    for _ in 0..k {
        v.push(idx % p);
        idx /= p;
    }
    v
}

impl Ring for ExtField {
    type Elem = Vec<u64>;

    fn zero(&self) -> Vec<u64> {
        vec![0; self.degree()]
    }
    fn one(&self) -> Vec<u64> {
        self.embed(1)
    }
    fn from_i64(&self, n: i64) -> Vec<u64> {
        self.embed(self.base.from_i64(n))
    }
    fn add(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| self.base.add(x, y)).collect()
    }
    fn sub(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| self.base.sub(x, y)).collect()
    }
    fn neg(&self, a: &Vec<u64>) -> Vec<u64> {
        a.iter().map(|x| self.base.neg(x)).collect()
    }
    fn mul(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let k = self.degree();
        if k == 1 {
            return vec![self.base.mul(&a[0], &b[0])];
        }
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                prod[i + j] = self.base.add(&prod[i + j], &self.base.mul(x, y));
            }
        }
        self.from_poly(&prod)
    }
    fn is_zero(&self, a: &Vec<u64>) -> bool {
        a.iter().all(|&c| c == 0)
    }
    fn characteristic(&self) -> u64 {
        self.base.p()
    }
    fn render(&self, a: &Vec<u64>) -> String {
        let ring = PolyRing::new(self.base, "s");
        ring.render(&ring.from_coeffs(a.clone()))
    }
    fn is_atomic(&self, a: &Vec<u64>) -> bool {
        a.iter().filter(|&&c| c != 0).count() <= 1
    }
}

impl Field for ExtField {
    fn inv(&self, a: &Vec<u64>) -> Option<Vec<u64>> {
        if self.is_zero(a) {
            return None;
        }
        Some(self.pow(a, self.order() - 2))
    }
}

impl FiniteField for ExtField {
    fn order(&self) -> u64 {
        self.base.p().pow(self.degree() as u32)
    }
    fn element(&self, index: u64) -> Vec<u64> {
        digits(index, self.base.p(), self.degree())
    }
}

impl CharP for ExtField {
    fn frobenius(&self, a: &Vec<u64>) -> Vec<u64> {
        self.pow(a, self.base.p())
    }
}

impl ExactDivision for ExtField {
    fn div_exact(&self, a: &Vec<u64>, b: &Vec<u64>) -> Option<Vec<u64>> {
        self.div(a, b)
    }
}

#[cfg(test)]
/// Polynomial over `F_p` viewed inside `F_{p^k}`.
pub(crate) fn lift_poly(
    from: &PolyRing<PrimeField>,
    f: &super::Poly<u64>,
    to: &PolyRing<ExtField>,
) -> super::Poly<Vec<u64>> {
    from.map_into(f, to, |c| to.base().embed(*c))
}
