use num_bigint::BigUint;

use super::{CharP, ExactDivision, Field, Ring};

/// Dense univariate polynomial, coefficients low-to-high.
///
/// The coefficient vector never ends in a zero; the zero polynomial has an
/// empty vector and degree `None` (standing in for −∞).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E> Poly<E> {
    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&E> {
        self.coeffs.last()
    }
}

/// `R[var]` for a coefficient ring `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing<R> {
    base: R,
    var: String,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(base: R, var: impl Into<String>) -> Self {
        Self { base, var: var.into() }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn from_coeffs(&self, mut coeffs: Vec<R::Elem>) -> Poly<R::Elem> {
        while coeffs.last().is_some_and(|c| self.base.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(&self, c: R::Elem) -> Poly<R::Elem> {
        self.from_coeffs(vec![c])
    }

    /// `c · var^e`
    pub fn monomial(&self, c: R::Elem, e: usize) -> Poly<R::Elem> {
        if self.base.is_zero(&c) {
            return Poly { coeffs: Vec::new() };
        }
        let mut coeffs = vec![self.base.zero(); e + 1];
        coeffs[e] = c;
        Poly { coeffs }
    }

    pub fn gen(&self) -> Poly<R::Elem> {
        self.monomial(self.base.one(), 1)
    }

    /// Coefficient of `var^i`, zero past the degree.
    pub fn coeff(&self, f: &Poly<R::Elem>, i: usize) -> R::Elem {
        f.coeffs.get(i).cloned().unwrap_or_else(|| self.base.zero())
    }

    pub fn scale(&self, f: &Poly<R::Elem>, c: &R::Elem) -> Poly<R::Elem> {
        self.from_coeffs(f.coeffs.iter().map(|a| self.base.mul(a, c)).collect())
    }

    pub fn eval(&self, f: &Poly<R::Elem>, x: &R::Elem) -> R::Elem {
        f.coeffs
            .iter()
            .rev()
            .fold(self.base.zero(), |acc, c| self.base.add(&self.base.mul(&acc, x), c))
    }

    pub fn derivative(&self, f: &Poly<R::Elem>) -> Poly<R::Elem> {
        let coeffs = f
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| self.base.mul(&self.base.from_i64(i as i64), c))
            .collect();
        self.from_coeffs(coeffs)
    }

    /// Apply `map` to every coefficient, landing in `target`.
    pub fn map_into<S: Ring>(
        &self,
        f: &Poly<R::Elem>,
        target: &PolyRing<S>,
        map: impl Fn(&R::Elem) -> S::Elem,
    ) -> Poly<S::Elem> {
        target.from_coeffs(f.coeffs.iter().map(map).collect())
    }

    pub fn is_monic(&self, f: &Poly<R::Elem>) -> bool {
        f.leading().is_some_and(|c| self.base.is_one(c))
    }
}

impl<R: Field> PolyRing<R> {
    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(
        &self,
        f: &Poly<R::Elem>,
        g: &Poly<R::Elem>,
    ) -> (Poly<R::Elem>, Poly<R::Elem>) {
        let dg = g.degree().expect("division by the zero polynomial");
        let lc_inv = self.base.inv(g.leading().unwrap()).unwrap();
        let mut rem = f.coeffs.clone();
        if rem.len() <= dg {
            return (Poly { coeffs: Vec::new() }, f.clone());
        }
        let mut quot = vec![self.base.zero(); rem.len() - dg];
        for i in (0..quot.len()).rev() {
            let c = self.base.mul(&rem[i + dg], &lc_inv);
            if self.base.is_zero(&c) {
                continue;
            }
            for (j, gj) in g.coeffs.iter().enumerate() {
                rem[i + j] = self.base.sub(&rem[i + j], &self.base.mul(&c, gj));
            }
            quot[i] = c;
        }
        rem.truncate(dg);
        (self.from_coeffs(quot), self.from_coeffs(rem))
    }

    pub fn rem(&self, f: &Poly<R::Elem>, g: &Poly<R::Elem>) -> Poly<R::Elem> {
        self.div_rem(f, g).1
    }

    pub fn monic(&self, f: &Poly<R::Elem>) -> Poly<R::Elem> {
        match f.leading() {
            None => f.clone(),
            Some(lc) => self.scale(f, &self.base.inv(lc).unwrap()),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, f: &Poly<R::Elem>, g: &Poly<R::Elem>) -> Poly<R::Elem> {
        let (mut a, mut b) = (f.clone(), g.clone());
        while !b.is_zero() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    pub fn mul_mod(
        &self,
        a: &Poly<R::Elem>,
        b: &Poly<R::Elem>,
        m: &Poly<R::Elem>,
    ) -> Poly<R::Elem> {
        self.rem(&self.mul(a, b), m)
    }

    pub fn pow_mod(&self, a: &Poly<R::Elem>, mut e: u64, m: &Poly<R::Elem>) -> Poly<R::Elem> {
        let mut base = self.rem(a, m);
        let mut acc = self.rem(&self.one(), m);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_mod(&acc, &base, m);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul_mod(&base, &base, m);
            }
        }
        acc
    }

    pub fn pow_mod_big(
        &self,
        a: &Poly<R::Elem>,
        e: &BigUint,
        m: &Poly<R::Elem>,
    ) -> Poly<R::Elem> {
        let base = self.rem(a, m);
        let mut acc = self.rem(&self.one(), m);
        for i in (0..e.bits()).rev() {
            acc = self.mul_mod(&acc, &acc, m);
            if e.bit(i) {
                acc = self.mul_mod(&acc, &base, m);
            }
        }
        acc
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = Poly<R::Elem>;

    fn zero(&self) -> Self::Elem {
        Poly { coeffs: Vec::new() }
    }
    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.constant(self.base.from_i64(n))
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let (long, short) = if a.coeffs.len() >= b.coeffs.len() { (a, b) } else { (b, a) };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = self.base.add(c, s);
        }
        self.from_coeffs(coeffs)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let n = a.coeffs.len().max(b.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (a.coeffs.get(i), b.coeffs.get(i)) {
                (Some(x), Some(y)) => self.base.sub(x, y),
                (Some(x), None) => x.clone(),
                (None, Some(y)) => self.base.neg(y),
                (None, None) => unreachable!(),
            })
            .collect();
        self.from_coeffs(coeffs)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        Poly { coeffs: a.coeffs.iter().map(|c| self.base.neg(c)).collect() }
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let mut coeffs = vec![self.base.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                coeffs[i + j] = self.base.add(&coeffs[i + j], &self.base.mul(x, y));
            }
        }
        self.from_coeffs(coeffs)
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }
    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }

    fn render(&self, f: &Self::Elem) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (e, c) in f.coeffs.iter().enumerate().rev() {
            if self.base.is_zero(c) {
                continue;
            }
            let mono = match e {
                0 => String::new(),
                1 => self.var.clone(),
                _ => format!("{}^{}", self.var, e),
            };
            let body = if e == 0 {
                self.base.render(c)
            } else if self.base.is_one(c) {
                mono
            } else if self.base.characteristic() == 0 && self.base.is_one(&self.base.neg(c)) {
                format!("-{mono}")
            } else if self.base.is_atomic(c) {
                format!("{}{}", self.base.render(c), mono)
            } else {
                format!("({}){}", self.base.render(c), mono)
            };
            if out.is_empty() {
                out = body;
            } else if let Some(rest) = body.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&body);
            }
        }
        out
    }

    fn is_atomic(&self, f: &Self::Elem) -> bool {
        let mut terms = f.coeffs.iter().enumerate().filter(|(_, c)| !self.base.is_zero(c));
        match (terms.next(), terms.next()) {
            (None, _) => true,
            (Some((_, c)), None) => self.base.is_atomic(c),
            _ => false,
        }
    }
}

impl<R: CharP> CharP for PolyRing<R> {
    fn frobenius(&self, u: &Self::Elem) -> Self::Elem {
        let p = self.base.characteristic() as usize;
        if u.is_zero() {
            return self.zero();
        }
        let mut coeffs = vec![self.base.zero(); (u.coeffs.len() - 1) * p + 1];
        for (i, c) in u.coeffs.iter().enumerate() {
            coeffs[i * p] = self.base.frobenius(c);
        }
        self.from_coeffs(coeffs)
    }
}

impl<R: Field> ExactDivision for PolyRing<R> {
    fn div_exact(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        if b.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(a, b);
        r.is_zero().then_some(q)
    }
}

/// Determinant by fraction-free Gaussian elimination.
fn bareiss_det<R: ExactDivision>(ring: &R, mut m: Vec<Vec<R::Elem>>) -> R::Elem {
    let n = m.len();
    if n == 0 {
        return ring.one();
    }
    let mut negate = false;
    let mut prev = ring.one();
    for k in 0..n - 1 {
        let Some(piv) = (k..n).find(|&i| !ring.is_zero(&m[i][k])) else {
            return ring.zero();
        };
        if piv != k {
            m.swap(piv, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = ring.sub(&ring.mul(&m[i][j], &m[k][k]), &ring.mul(&m[i][k], &m[k][j]));
                m[i][j] = ring.div_exact(&num, &prev).expect("Bareiss step divides exactly");
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        ring.neg(&det)
    } else {
        det
    }
}

/// Resultant of `f` and `g` taken with formal degrees `df` ≥ deg f and
/// `dg` ≥ deg g (Sylvester determinant).
pub fn resultant<R: ExactDivision>(
    ring: &PolyRing<R>,
    f: &Poly<R::Elem>,
    g: &Poly<R::Elem>,
    df: usize,
    dg: usize,
) -> R::Elem {
    let base = ring.base();
    let n = df + dg;
    if n == 0 {
        return base.one();
    }
    let mut rows = Vec::with_capacity(n);
    for i in 0..dg {
        let mut row = vec![base.zero(); n];
        for j in 0..=df {
            row[i + j] = ring.coeff(f, df - j);
        }
        rows.push(row);
    }
    for i in 0..df {
        let mut row = vec![base.zero(); n];
        for j in 0..=dg {
            row[i + j] = ring.coeff(g, dg - j);
        }
        rows.push(row);
    }
    bareiss_det(base, rows)
}

/// `disc(f) = (−1)^{n(n−1)/2} · Res(f, f′) / lc(f)`, with `f′` taken at
/// formal degree `n − 1`. The zero and constant polynomials have
/// discriminant 1 by convention.
pub fn discriminant<R: ExactDivision>(ring: &PolyRing<R>, f: &Poly<R::Elem>) -> R::Elem {
    let base = ring.base();
    let Some(n) = f.degree() else {
        return base.one();
    };
    if n == 0 {
        return base.one();
    }
    let df = ring.derivative(f);
    let res = resultant(ring, f, &df, n, n - 1);
    let q = base
        .div_exact(&res, f.leading().unwrap())
        .expect("leading coefficient divides Res(f, f')");
    if (n * (n - 1) / 2) % 2 == 1 {
        base.neg(&q)
    } else {
        q
    }
}
