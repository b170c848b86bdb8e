//! Monic sextics `y^2 = f(x)`, Brumer's family
//!
//! ```text
//! f = x^6 + 2C x^5 + (2 + 2C + C^2 − 4BD) x^4 + (2 + 4B + 2C + 2C^2 − 4D − 8BD) x^3
//!     + (5 + 12B + 4C + C^2 − 4BD) x^2 + (6 + 12B + 2C) x + (4B + 1)
//! ```
//!
//! and its reductions modulo odd primes, plus the two-parameter family over
//! `F_9(T)` cut out by the characteristic-3 supersingularity relations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ffield::{
    discriminant, ExactDivision, ExtField, FromMPoly, Poly, PolyRing, PrimeField, RationalField,
    Ring,
};

/// A monic sextic over the coefficient ring `R`, with its separability
/// witness.
#[derive(Clone, Debug)]
pub struct SexticCurve<R: Ring> {
    ring: PolyRing<R>,
    f: Poly<R::Elem>,
    disc: R::Elem,
}

impl<R: ExactDivision> SexticCurve<R> {
    /// Refuses a non-monic or non-sextic `f`; refuses a vanishing
    /// discriminant unless `allow_singular` is set.
    pub fn new(base: R, f: Poly<R::Elem>, allow_singular: bool) -> Result<Self> {
        let ring = PolyRing::new(base, "x");
        if f.degree() != Some(6) || !ring.is_monic(&f) {
            return Err(Error::NotMonicSextic(f.degree()));
        }
        let disc = discriminant(&ring, &f);
        if ring.base().is_zero(&disc) && !allow_singular {
            return Err(Error::NonSeparable);
        }
        Ok(Self { ring, f, disc })
    }

    /// From `[a0, ..., a5]`; the leading 1 is implicit.
    pub fn from_coeffs(base: R, a: Vec<R::Elem>, allow_singular: bool) -> Result<Self> {
        if a.len() != 6 {
            return Err(Error::NotMonicSextic(Some(a.len())));
        }
        let mut c = a;
        c.push(base.one());
        let ring = PolyRing::new(base, "x");
        let f = ring.from_coeffs(c);
        Self::new(ring.base().clone(), f, allow_singular)
    }
}

impl<R: Ring> SexticCurve<R> {
    pub fn base(&self) -> &R {
        self.ring.base()
    }

    pub fn ring(&self) -> &PolyRing<R> {
        &self.ring
    }

    pub fn poly(&self) -> &Poly<R::Elem> {
        &self.f
    }

    /// Coefficient `a_i` of `x^i`.
    pub fn a(&self, i: usize) -> R::Elem {
        self.ring.coeff(&self.f, i)
    }

    pub fn discriminant(&self) -> &R::Elem {
        &self.disc
    }

    pub fn is_separable(&self) -> bool {
        !self.ring.base().is_zero(&self.disc)
    }

    pub fn render(&self) -> String {
        self.ring.render(&self.f)
    }
}

/// `(b, c, d)` in the chosen coefficient ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrumerParams<E> {
    pub b: E,
    pub c: E,
    pub d: E,
}

/// `[a0, ..., a5]` of `f_{B,C,D}` over any commutative ring.
pub fn brumer_coefficients<R: Ring>(r: &R, p: &BrumerParams<R::Elem>) -> Vec<R::Elem> {
    let (b, c, d) = (&p.b, &p.c, &p.d);
    let k = |n: i64| r.from_i64(n);
    let lin = |terms: &[(i64, &R::Elem)]| {
        terms.iter().fold(r.zero(), |acc, (n, e)| r.add(&acc, &r.mul(&k(*n), e)))
    };
    let c2 = r.mul(c, c);
    let bd = r.mul(b, d);
    let one = r.one();
    vec![
        lin(&[(4, b), (1, &one)]),
        lin(&[(6, &one), (12, b), (2, c)]),
        lin(&[(5, &one), (12, b), (4, c), (1, &c2), (-4, &bd)]),
        lin(&[(2, &one), (4, b), (2, c), (2, &c2), (-4, d), (-8, &bd)]),
        lin(&[(2, &one), (2, c), (1, &c2), (-4, &bd)]),
        lin(&[(2, c)]),
    ]
}

pub fn brumer_polynomial<R: ExactDivision>(
    base: R,
    params: &BrumerParams<R::Elem>,
    allow_singular: bool,
) -> Result<SexticCurve<R>> {
    let a = brumer_coefficients(&base, params);
    SexticCurve::from_coeffs(base, a, allow_singular)
}

/// Coefficient rings over `Q` with a reduction map to characteristic `p`.
pub trait ReduceModP: Ring {
    type Target: ExactDivision;

    fn reduced_ring(&self, p: u64) -> Result<Self::Target>;
    fn reduce(&self, target: &Self::Target, a: &Self::Elem) -> Result<<Self::Target as Ring>::Elem>;
}

impl ReduceModP for RationalField {
    type Target = PrimeField;

    fn reduced_ring(&self, p: u64) -> Result<PrimeField> {
        PrimeField::new(p)
    }
    fn reduce(&self, target: &PrimeField, a: &BigRational) -> Result<u64> {
        target.from_rational(a)
    }
}

impl ReduceModP for PolyRing<RationalField> {
    type Target = PolyRing<PrimeField>;

    fn reduced_ring(&self, p: u64) -> Result<PolyRing<PrimeField>> {
        Ok(PolyRing::new(PrimeField::new(p)?, self.var()))
    }
    fn reduce(&self, target: &PolyRing<PrimeField>, a: &Poly<BigRational>) -> Result<Poly<u64>> {
        let coeffs = a
            .coeffs()
            .iter()
            .map(|c| target.base().from_rational(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(target.from_coeffs(coeffs))
    }
}

/// Coefficient-wise reduction, rechecking monicity and separability.
pub fn reduce_mod_p<R: ReduceModP>(
    curve: &SexticCurve<R>,
    p: u64,
    allow_singular: bool,
) -> Result<SexticCurve<R::Target>> {
    let target = curve.base().reduced_ring(p)?;
    let a = (0..6)
        .map(|i| curve.base().reduce(&target, &curve.a(i)))
        .collect::<Result<Vec<_>>>()?;
    SexticCurve::from_coeffs(target, a, allow_singular)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Char3IdentityReport {
    pub a1: String,
    pub a2: String,
    pub a4: String,
    pub a5: String,
    /// `a1^4 + a2^4`, which must vanish for a supersingular reduction.
    pub residual: String,
    pub residual_is_zero: bool,
}

/// Checks `a1 = a5` and `a4 = a2 − a1` on a reduced Brumer curve in
/// characteristic 3.
pub fn brumer_char3_identities<R: Ring>(curve: &SexticCurve<R>) -> Result<Char3IdentityReport> {
    let r = curve.base();
    if r.characteristic() != 3 {
        return Err(Error::WrongCharacteristic { expected: 3, actual: r.characteristic() });
    }
    let (a1, a2, a4, a5) = (curve.a(1), curve.a(2), curve.a(4), curve.a(5));
    if a1 != a5 {
        return Err(Error::IdentityViolation(format!(
            "a1 = {} but a5 = {}",
            r.render(&a1),
            r.render(&a5)
        )));
    }
    if a4 != r.sub(&a2, &a1) {
        return Err(Error::IdentityViolation(format!(
            "a4 = {} but a2 - a1 = {}",
            r.render(&a4),
            r.render(&r.sub(&a2, &a1))
        )));
    }
    let residual = r.add(&r.pow(&a1, 4), &r.pow(&a2, 4));
    Ok(Char3IdentityReport {
        a1: r.render(&a1),
        a2: r.render(&a2),
        a4: r.render(&a4),
        a5: r.render(&a5),
        residual_is_zero: r.is_zero(&residual),
        residual: r.render(&residual),
    })
}

/// True when `ε^4 + 1 = 0` and `ε^3 + ε − 1 = 0`.
pub fn is_valid_epsilon<R: Ring>(r: &R, eps: &R::Elem) -> bool {
    let e4 = r.add(&r.pow(eps, 4), &r.one());
    let e3 = r.sub(&r.add(&r.pow(eps, 3), eps), &r.one());
    r.is_zero(&e4) && r.is_zero(&e3)
}

/// The `F_9(T)` family
/// `x^6 − Cx^5 + (1−ε)Cx^4 + (1+εC+B−D)x^3 − εCx^2 − Cx + (B+1)`
/// with `BD = C^2 + (ε+1)C − 1`. `D` must be a polynomial, so `B` has to
/// divide `C^2 + (ε+1)C − 1` in `F_9[T]`.
pub fn brumer_f9_family(
    ring: &PolyRing<ExtField>,
    c: &Poly<Vec<u64>>,
    b: &Poly<Vec<u64>>,
    eps: &Vec<u64>,
    allow_singular: bool,
) -> Result<SexticCurve<PolyRing<ExtField>>> {
    let fq = ring.base();
    if fq.characteristic() != 3 || !is_valid_epsilon(fq, eps) {
        return Err(Error::BadEpsilon);
    }
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let e = ring.constant(eps.clone());
    let one = ring.one();
    let bd = ring.sub(
        &ring.add(&ring.mul(c, c), &ring.mul(&ring.add(&e, &one), c)),
        &one,
    );
    let d = ring.div_exact(&bd, b).ok_or_else(|| {
        Error::InexactDivision(format!("B = {} into BD = {}", ring.render(b), ring.render(&bd)))
    })?;
    let ec = ring.mul(&e, c);
    let a = vec![
        ring.add(b, &one),
        ring.neg(c),
        ring.neg(&ec),
        ring.sub(&ring.add(&ring.add(&one, &ec), b), &d),
        ring.mul(&ring.sub(&one, &e), c),
        ring.neg(c),
    ];
    let curve = SexticCurve::from_coeffs(ring.clone(), a, allow_singular)?;
    if curve.is_separable() {
        let v = crate::cartier::char3_criterion(&curve)?;
        if v != crate::cartier::Verdict::Supersingular {
            return Err(Error::IdentityViolation(
                "F_9 family member fails the characteristic-3 relations".into(),
            ));
        }
    }
    Ok(curve)
}

/// JSON encoding of ring elements: scalars as strings, polynomial
/// coefficients as arrays of scalar strings (low-to-high).
pub trait CoeffJson: Ring {
    fn to_json(&self, a: &Self::Elem) -> Value;
    fn from_json(&self, v: &Value) -> Result<Self::Elem>;
}

fn json_str(v: &Value) -> Result<&str> {
    v.as_str()
        .ok_or_else(|| Error::Parse(format!("expected a coefficient string, got {v}")))
}

fn scalar_from_json<R: FromMPoly>(r: &R, v: &Value) -> Result<R::Elem> {
    match v {
        Value::Number(n) => r.parse(&n.to_string()),
        _ => r.parse(json_str(v)?),
    }
}

impl CoeffJson for RationalField {
    fn to_json(&self, a: &BigRational) -> Value {
        json!(a.to_string())
    }
    fn from_json(&self, v: &Value) -> Result<BigRational> {
        scalar_from_json(self, v)
    }
}

impl CoeffJson for PrimeField {
    fn to_json(&self, a: &u64) -> Value {
        json!(a.to_string())
    }
    fn from_json(&self, v: &Value) -> Result<u64> {
        scalar_from_json(self, v)
    }
}

impl CoeffJson for ExtField {
    fn to_json(&self, a: &Vec<u64>) -> Value {
        json!(self.render(a))
    }
    fn from_json(&self, v: &Value) -> Result<Vec<u64>> {
        scalar_from_json(self, v)
    }
}

impl<R: CoeffJson + FromMPoly> CoeffJson for PolyRing<R> {
    fn to_json(&self, a: &Poly<R::Elem>) -> Value {
        Value::Array(a.coeffs().iter().map(|c| self.base().to_json(c)).collect())
    }
    fn from_json(&self, v: &Value) -> Result<Poly<R::Elem>> {
        match v {
            Value::Array(items) => {
                let coeffs =
                    items.iter().map(|c| self.base().from_json(c)).collect::<Result<Vec<_>>>()?;
                Ok(self.from_coeffs(coeffs))
            }
            _ => scalar_from_json(self, v),
        }
    }
}

/// A sextic over any of the supported coefficient domains.
#[derive(Clone, Debug)]
pub enum AnyCurve {
    Q(SexticCurve<RationalField>),
    QT(SexticCurve<PolyRing<RationalField>>),
    Fp(SexticCurve<PrimeField>),
    FpT(SexticCurve<PolyRing<PrimeField>>),
    Fq(SexticCurve<ExtField>),
    FqT(SexticCurve<PolyRing<ExtField>>),
}

macro_rules! each_curve {
    ($self:expr, $c:ident => $body:expr) => {
        match $self {
            AnyCurve::Q($c) => $body,
            AnyCurve::QT($c) => $body,
            AnyCurve::Fp($c) => $body,
            AnyCurve::FpT($c) => $body,
            AnyCurve::Fq($c) => $body,
            AnyCurve::FqT($c) => $body,
        }
    };
}

fn ext_field(p: u64, k: usize, modulus: Option<Vec<u64>>) -> Result<ExtField> {
    match modulus {
        Some(m) => ExtField::with_modulus(PrimeField::new(p)?, m),
        None => ExtField::new(p, k),
    }
}

fn curve_from_mpoly<R: FromMPoly + ExactDivision>(
    base: R,
    e: &crate::ffield::MPoly,
    allow_singular: bool,
) -> Result<SexticCurve<R>> {
    let ring = PolyRing::new(base, "x");
    let f = ring.from_mpoly(e)?;
    SexticCurve::new(ring.base().clone(), f, allow_singular)
}

fn curve_from_json<R: CoeffJson + ExactDivision>(
    base: R,
    coeffs: &[Value],
    allow_singular: bool,
) -> Result<SexticCurve<R>> {
    let c = coeffs.iter().map(|v| base.from_json(v)).collect::<Result<Vec<_>>>()?;
    let ring = PolyRing::new(base, "x");
    let f = ring.from_coeffs(c);
    SexticCurve::new(ring.base().clone(), f, allow_singular)
}

/// Multiply `x` by `λ` so that `λ^6 f(x/λ)` has integer coefficients.
/// Returns the cleared curve and `λ`.
pub fn clear_denominators(
    curve: &SexticCurve<RationalField>,
) -> Result<(SexticCurve<RationalField>, BigInt)> {
    let lambda = (0..6).fold(BigInt::one(), |acc, i| acc.lcm(curve.a(i).denom()));
    let mut pw = BigRational::one();
    let mut a = vec![BigRational::zero(); 6];
    let lq = BigRational::from_integer(lambda.clone());
    for i in (0..6).rev() {
        pw = &pw * &lq;
        a[i] = curve.a(i) * &pw;
    }
    debug_assert!(a.iter().all(|c| c.is_integer()));
    Ok((SexticCurve::from_coeffs(RationalField, a, !curve.is_separable())?, lambda))
}

impl AnyCurve {
    /// Parse `f` written in `x` (and possibly `T`, `s`) over `Q` (p = 0),
    /// `F_p` or `F_{p^k}` (k > 1); the presence of `T` selects the
    /// polynomial-coefficient domain.
    pub fn parse_inline(expr: &str, p: u64, k: usize, allow_singular: bool) -> Result<Self> {
        use crate::ffield::{parse_expr, VAR_S, VAR_T};
        let e = parse_expr(expr)?;
        let has_t = e.uses(VAR_T);
        if e.uses(VAR_S) && k <= 1 {
            return Err(Error::Parse("s only makes sense over F_{p^k} with k > 1".into()));
        }
        Ok(match (p, k > 1, has_t) {
            (0, _, false) => AnyCurve::Q(curve_from_mpoly(RationalField, &e, allow_singular)?),
            (0, _, true) => {
                AnyCurve::QT(curve_from_mpoly(PolyRing::new(RationalField, "T"), &e, allow_singular)?)
            }
            (p, false, false) => AnyCurve::Fp(curve_from_mpoly(PrimeField::new(p)?, &e, allow_singular)?),
            (p, false, true) => AnyCurve::FpT(curve_from_mpoly(
                PolyRing::new(PrimeField::new(p)?, "T"),
                &e,
                allow_singular,
            )?),
            (p, true, false) => AnyCurve::Fq(curve_from_mpoly(ExtField::new(p, k)?, &e, allow_singular)?),
            (p, true, true) => AnyCurve::FqT(curve_from_mpoly(
                PolyRing::new(ExtField::new(p, k)?, "T"),
                &e,
                allow_singular,
            )?),
        })
    }

    /// Accepts either the object produced by [`AnyCurve::to_json`] or a bare
    /// string handled by [`AnyCurve::parse_inline`] with the given `p`, `k`.
    pub fn from_json(v: &Value, p: u64, k: usize, allow_singular: bool) -> Result<Self> {
        if let Some(s) = v.as_str() {
            return Self::parse_inline(s, p, k, allow_singular);
        }
        let obj = v.as_object().ok_or_else(|| Error::Parse("curve must be an object or string".into()))?;
        let domain = obj.get("domain").and_then(Value::as_str).unwrap_or("");
        let p = obj.get("p").and_then(Value::as_u64).unwrap_or(p);
        let k = obj.get("k").and_then(Value::as_u64).map(|k| k as usize).unwrap_or(k);
        let modulus: Option<Vec<u64>> = match obj.get("modulus") {
            Some(m) => Some(serde_json::from_value(m.clone())?),
            None => None,
        };
        let empty = Vec::new();
        let coeffs = match obj.get("coeffs") {
            Some(Value::Array(a)) => a,
            Some(Value::String(s)) => return Self::parse_inline(s, p, k, allow_singular),
            _ => &empty,
        };
        Ok(match domain {
            "Q" => AnyCurve::Q(curve_from_json(RationalField, coeffs, allow_singular)?),
            "Q(T)" => AnyCurve::QT(curve_from_json(PolyRing::new(RationalField, "T"), coeffs, allow_singular)?),
            "F_p" => AnyCurve::Fp(curve_from_json(PrimeField::new(p)?, coeffs, allow_singular)?),
            "F_p(T)" => AnyCurve::FpT(curve_from_json(PolyRing::new(PrimeField::new(p)?, "T"), coeffs, allow_singular)?),
            "F_q" => AnyCurve::Fq(curve_from_json(ext_field(p, k, modulus)?, coeffs, allow_singular)?),
            "F_q(T)" => AnyCurve::FqT(curve_from_json(
                PolyRing::new(ext_field(p, k, modulus)?, "T"),
                coeffs,
                allow_singular,
            )?),
            other => return Err(Error::Parse(format!("unknown domain {other:?}"))),
        })
    }

    pub fn domain(&self) -> &'static str {
        match self {
            AnyCurve::Q(_) => "Q",
            AnyCurve::QT(_) => "Q(T)",
            AnyCurve::Fp(_) => "F_p",
            AnyCurve::FpT(_) => "F_p(T)",
            AnyCurve::Fq(_) => "F_q",
            AnyCurve::FqT(_) => "F_q(T)",
        }
    }

    pub fn characteristic(&self) -> u64 {
        each_curve!(self, c => c.base().characteristic())
    }

    pub fn render(&self) -> String {
        each_curve!(self, c => c.render())
    }

    pub fn is_separable(&self) -> bool {
        each_curve!(self, c => c.is_separable())
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "domain": self.domain(),
            "p": self.characteristic(),
            "poly": self.render(),
            "separable": self.is_separable(),
        });
        let coeffs = each_curve!(self, c => Value::Array(
            c.poly().coeffs().iter().map(|a| c.base().to_json(a)).collect()
        ));
        v["coeffs"] = coeffs;
        match self {
            AnyCurve::Fq(c) => {
                v["k"] = json!(c.base().degree());
                v["modulus"] = json!(c.base().modulus());
            }
            AnyCurve::FqT(c) => {
                v["k"] = json!(c.base().base().degree());
                v["modulus"] = json!(c.base().base().modulus());
            }
            _ => {}
        }
        v
    }

    /// Reduce a curve over `Q` or `Q(T)` modulo `p`.
    pub fn reduce_mod_p(&self, p: u64, allow_singular: bool) -> Result<AnyCurve> {
        match self {
            AnyCurve::Q(c) => Ok(AnyCurve::Fp(reduce_mod_p(c, p, allow_singular)?)),
            AnyCurve::QT(c) => Ok(AnyCurve::FpT(reduce_mod_p(c, p, allow_singular)?)),
            _ => Err(Error::Unsupported(format!("reduction from {}", self.domain()))),
        }
    }
}

/// Build `f_{B,C,D}` from parameter expressions over `Q` (p = 0) or `F_p`;
/// any `T` in the parameters moves to the polynomial-coefficient domain.
pub fn brumer_from_exprs(b: &str, c: &str, d: &str, p: u64, allow_singular: bool) -> Result<AnyCurve> {
    use crate::ffield::{parse_expr, VAR_T};
    let es = [parse_expr(b)?, parse_expr(c)?, parse_expr(d)?];
    let has_t = es.iter().any(|e| e.uses(VAR_T));
    fn build<R: FromMPoly + ExactDivision>(
        base: R,
        es: &[crate::ffield::MPoly; 3],
        allow_singular: bool,
    ) -> Result<SexticCurve<R>> {
        let params = BrumerParams {
            b: base.from_mpoly(&es[0])?,
            c: base.from_mpoly(&es[1])?,
            d: base.from_mpoly(&es[2])?,
        };
        brumer_polynomial(base, &params, allow_singular)
    }
    Ok(match (p, has_t) {
        (0, false) => AnyCurve::Q(build(RationalField, &es, allow_singular)?),
        (0, true) => AnyCurve::QT(build(PolyRing::new(RationalField, "T"), &es, allow_singular)?),
        (p, false) => AnyCurve::Fp(build(PrimeField::new(p)?, &es, allow_singular)?),
        (p, true) => AnyCurve::FpT(build(PolyRing::new(PrimeField::new(p)?, "T"), &es, allow_singular)?),
    })
}

/// Integer coefficients `[a0..a6]` of a curve over `Q` whose coefficients
/// are integral.
pub fn integer_coefficients(curve: &SexticCurve<RationalField>) -> Option<Vec<BigInt>> {
    (0..=6)
        .map(|i| {
            let a = curve.a(i);
            a.is_integer().then(|| a.to_integer())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::FiniteField;
    use proptest::prelude::*;

    fn q_curve(b: i64, c: i64, d: i64) -> SexticCurve<RationalField> {
        let r = RationalField;
        brumer_polynomial(r, &BrumerParams { b: r.from_i64(b), c: r.from_i64(c), d: r.from_i64(d) }, false)
            .unwrap()
    }

    #[test]
    fn table_one_rows() {
        assert_eq!(q_curve(0, 0, 0).render(), "x^6 + 2x^4 + 2x^3 + 5x^2 + 6x + 1");
        assert_eq!(q_curve(0, 1, 2).render(), "x^6 + 2x^5 + 5x^4 - 2x^3 + 10x^2 + 8x + 1");
    }

    #[test]
    fn generic_t_member() {
        let c = brumer_from_exprs("0", "1", "T", 0, false).unwrap();
        assert_eq!(c.domain(), "Q(T)");
        assert_eq!(c.render(), "x^6 + 2x^5 + 5x^4 + (-4T + 6)x^3 + 10x^2 + 8x + 1");
    }

    #[test]
    fn reductions() {
        let c = brumer_from_exprs("0", "1", "T", 0, false).unwrap();
        assert_eq!(c.reduce_mod_p(3, false).unwrap().render(), "x^6 + 2x^5 + 2x^4 + 2Tx^3 + x^2 + 2x + 1");
        let c = brumer_from_exprs("0", "1", "2", 0, false).unwrap();
        assert_eq!(c.reduce_mod_p(3, false).unwrap().render(), "x^6 + 2x^5 + 2x^4 + x^3 + x^2 + 2x + 1");
        let c = brumer_from_exprs("0", "0", "T+3", 0, false).unwrap();
        assert_eq!(c.reduce_mod_p(5, false).unwrap().render(), "x^6 + 2x^4 + Tx^3 + x + 1");
    }

    #[test]
    fn bad_reduction() {
        let c = brumer_from_exprs("1/3", "0", "0", 0, true).unwrap();
        assert!(matches!(c.reduce_mod_p(3, true), Err(Error::BadReduction { p: 3, .. })));
    }

    #[test]
    fn non_separable_needs_flag() {
        let f3 = PrimeField::new(3).unwrap();
        let a = vec![1, 0, 0, 1, 0, 0];
        assert!(matches!(SexticCurve::from_coeffs(f3, a.clone(), false), Err(Error::NonSeparable)));
        let c = SexticCurve::from_coeffs(f3, a, true).unwrap();
        assert!(!c.is_separable());
        assert!(matches!(
            SexticCurve::from_coeffs(f3, vec![1, 0, 0], false),
            Err(Error::NotMonicSextic(_))
        ));
    }

    #[test]
    fn char3_identities_on_table_rows() {
        for (b, c, d) in [("0", "1", "T"), ("1", "1", "2T+1"), ("T", "0", "2")] {
            let AnyCurve::FpT(red) = brumer_from_exprs(b, c, d, 0, true).unwrap().reduce_mod_p(3, true).unwrap()
            else {
                unreachable!()
            };
            brumer_char3_identities(&red).unwrap();
        }
        let AnyCurve::FpT(red) = brumer_from_exprs("0", "1", "T", 0, false).unwrap().reduce_mod_p(3, false).unwrap()
        else {
            unreachable!()
        };
        let rep = brumer_char3_identities(&red).unwrap();
        assert_eq!((rep.a1.as_str(), rep.a5.as_str(), rep.a4.as_str()), ("2", "2", "2"));
    }

    #[test]
    fn epsilon_checks() {
        let f9 = ExtField::new(3, 2).unwrap();
        let s = f9.generator();
        let m1 = f9.from_i64(-1);
        assert!(is_valid_epsilon(&f9, &f9.add(&m1, &s)));
        assert!(is_valid_epsilon(&f9, &f9.sub(&m1, &s)));
        assert!(!is_valid_epsilon(&f9, &f9.one()));
        let ring = PolyRing::new(f9.clone(), "T");
        let one = ring.one();
        assert!(matches!(
            brumer_f9_family(&ring, &one, &one, &f9.one(), true),
            Err(Error::BadEpsilon)
        ));
        assert!(matches!(
            brumer_f9_family(&ring, &one, &ring.zero(), &f9.add(&m1, &s), true),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn f9_family_members_are_supersingular() {
        let f9 = ExtField::new(3, 2).unwrap();
        let ring = PolyRing::new(f9.clone(), "T");
        let eps = f9.add(&f9.from_i64(-1), &f9.generator());
        let one = ring.one();
        let c = brumer_f9_family(&ring, &one, &one, &eps, true).unwrap();
        assert_eq!(c.poly().degree(), Some(6));
        // with C = T and B = 1 the division is trivial
        let t = ring.gen();
        let c = brumer_f9_family(&ring, &t, &one, &eps, false).unwrap();
        assert!(c.is_separable());
        // B = T does not divide T^2 + (ε+1)T − 1
        assert!(matches!(
            brumer_f9_family(&ring, &t, &t, &eps, true),
            Err(Error::InexactDivision(_))
        ));
    }

    #[test]
    fn json_round_trip() {
        for c in [
            brumer_from_exprs("0", "1", "2", 0, false).unwrap(),
            brumer_from_exprs("0", "1", "T", 0, false).unwrap(),
            brumer_from_exprs("0", "1", "T", 5, false).unwrap(),
            AnyCurve::parse_inline("x^6 + s x + T", 3, 2, false).unwrap(),
        ] {
            let v = c.to_json();
            let back = AnyCurve::from_json(&v, 0, 1, false).unwrap();
            assert_eq!(back.render(), c.render());
            assert_eq!(back.domain(), c.domain());
        }
    }

    #[test]
    fn denominators_clear_to_integers() {
        let AnyCurve::Q(c) = AnyCurve::parse_inline("x^6 + x/2 + 1/3", 0, 1, false).unwrap() else {
            unreachable!()
        };
        let (cleared, lambda) = clear_denominators(&c).unwrap();
        assert_eq!(lambda, BigInt::from(6));
        assert!(integer_coefficients(&cleared).is_some());
        assert_eq!(cleared.render(), "x^6 + 3888x + 15552");
    }

    proptest! {
        #[test]
        fn random_params_give_monic_sextics(b in 0u64..11, c in 0u64..11, d in 0u64..11, pi in 0usize..3) {
            let p = [5u64, 7, 11][pi];
            let f = PrimeField::new(p).unwrap();
            let params = BrumerParams { b: b % p, c: c % p, d: d % p };
            let curve = brumer_polynomial(f, &params, true).unwrap();
            prop_assert_eq!(curve.poly().degree(), Some(6));
            prop_assert!(curve.ring().is_monic(curve.poly()));
        }

        #[test]
        fn char3_a1_equals_a5(seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let f3 = PrimeField::new(3).unwrap();
            let r = PolyRing::new(f3, "T");
            let mut rand_poly = || r.from_coeffs((0..3).map(|_| f3.element(rng.gen_range(0..3))).collect());
            let params = BrumerParams { b: rand_poly(), c: rand_poly(), d: rand_poly() };
            let curve = brumer_polynomial(r, &params, true).unwrap();
            prop_assert!(brumer_char3_identities(&curve).is_ok());
        }
    }
}
