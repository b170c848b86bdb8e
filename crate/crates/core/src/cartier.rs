//! Supersingularity of `y^2 = f(x)` in odd characteristic `p`.
//!
//! With `h = f^{(p−1)/2} = Σ c_i x^i` and
//! `M = [[c_{p−1}, c_{p−2}], [c_{2p−1}, c_{2p−2}]]`, the jacobian is
//! supersingular iff `M · M^{(p)} = 0`, where `M^{(p)}` applies Frobenius
//! entrywise. The stored `M` is not rooted: taking `p`-th roots of its
//! entries changes neither the product's vanishing nor the verdict.

use serde::{Deserialize, Serialize};

use crate::brumer::{AnyCurve, SexticCurve};
use crate::error::{Error, Result};
use crate::ffield::{CharP, ExtField, FiniteField, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Supersingular,
    NotSupersingular,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CaseTag {
    Case1,
    Case2,
    #[serde(rename = "NotSS")]
    NotSs,
}

impl CaseTag {
    pub fn verdict(self) -> Verdict {
        match self {
            CaseTag::NotSs => Verdict::NotSupersingular,
            _ => Verdict::Supersingular,
        }
    }
}

/// `[[a, b], [c, d]]`.
pub type Mat2<E> = [[E; 2]; 2];

#[derive(Clone, Debug)]
pub struct CartierManin<E> {
    pub p: u64,
    /// `c_{p−1}, c_{p−2}, c_{2p−1}, c_{2p−2}`.
    pub coeffs: [E; 4],
    pub m: Mat2<E>,
    pub m_frob: Mat2<E>,
    pub product: Mat2<E>,
    pub verdict: Verdict,
    pub case_tag: CaseTag,
}

/// Serializable form, every entry rendered as text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartierManinReport {
    pub p: u64,
    pub c_p_minus_1: String,
    pub c_p_minus_2: String,
    pub c_2p_minus_1: String,
    pub c_2p_minus_2: String,
    pub m: Mat2<String>,
    pub m_frob: Mat2<String>,
    pub product: Mat2<String>,
    pub verdict: Verdict,
    pub case_tag: CaseTag,
    pub note: String,
}

fn check_char<R: Ring>(r: &R, p: u64) -> Result<()> {
    if r.characteristic() != p {
        return Err(Error::WrongCharacteristic { expected: p, actual: r.characteristic() });
    }
    if p.is_multiple_of(2) {
        return Err(Error::EvenCharacteristic);
    }
    Ok(())
}

/// The four coefficients `c_{p−1}, c_{p−2}, c_{2p−1}, c_{2p−2}` of
/// `f^{(p−1)/2}`.
pub fn hasse_witt_coefficients<R: Ring>(curve: &SexticCurve<R>, p: u64) -> [R::Elem; 4] {
    let ring = curve.ring();
    let h = ring.pow(curve.poly(), (p - 1) / 2);
    let p = p as usize;
    [ring.coeff(&h, p - 1), ring.coeff(&h, p - 2), ring.coeff(&h, 2 * p - 1), ring.coeff(&h, 2 * p - 2)]
}

fn mat_mul<R: Ring>(r: &R, a: &Mat2<R::Elem>, b: &Mat2<R::Elem>) -> Mat2<R::Elem> {
    let e = |i: usize, j: usize| r.add(&r.mul(&a[i][0], &b[0][j]), &r.mul(&a[i][1], &b[1][j]));
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// Direct test `M · M^{(p)} = 0`.
pub fn product_verdict<R: CharP>(r: &R, coeffs: &[R::Elem; 4]) -> (Mat2<R::Elem>, Mat2<R::Elem>, Mat2<R::Elem>, Verdict) {
    let [c1, c2, c3, c4] = coeffs.clone();
    let m = [[c1, c2], [c3, c4]];
    let mf = [
        [r.frobenius(&m[0][0]), r.frobenius(&m[0][1])],
        [r.frobenius(&m[1][0]), r.frobenius(&m[1][1])],
    ];
    let prod = mat_mul(r, &m, &mf);
    let zero = prod.iter().flatten().all(|e| r.is_zero(e));
    let v = if zero { Verdict::Supersingular } else { Verdict::NotSupersingular };
    (m, mf, prod, v)
}

/// Closed-form two-case test in division-free form, valid over an
/// integral domain of characteristic `p`:
///
/// * Case 1: `c_{p−1} = c_{2p−1} = c_{2p−2} = 0`;
/// * Case 2: `c_{2p−1} ≠ 0`, `c_{p−2} c_{2p−1}^p = −c_{p−1}^{p+1}` and
///   `c_{2p−2} c_{2p−1}^{p−1} = −c_{p−1}^p`.
pub fn closed_form_case<R: CharP>(r: &R, coeffs: &[R::Elem; 4]) -> CaseTag {
    let [a, b, c, d] = coeffs;
    if r.is_zero(a) && r.is_zero(c) && r.is_zero(d) {
        return CaseTag::Case1;
    }
    if r.is_zero(c) {
        return CaseTag::NotSs;
    }
    // x^p = frobenius(x) and x^{p−1} · x = x^p keep exponents out of it
    let ap = r.frobenius(a);
    let cp = r.frobenius(c);
    let rel1 = r.add(&r.mul(b, &cp), &r.mul(&ap, a));
    // d c^{p−1} = −a^p  ⟺  d c^p = −a^p c  (c ≠ 0)
    let rel2 = r.add(&r.mul(d, &cp), &r.mul(&ap, c));
    if r.is_zero(&rel1) && r.is_zero(&rel2) {
        CaseTag::Case2
    } else {
        CaseTag::NotSs
    }
}

pub fn cartier_manin<R: CharP>(curve: &SexticCurve<R>, p: u64) -> Result<CartierManin<R::Elem>> {
    let r = curve.base();
    check_char(r, p)?;
    if !curve.is_separable() {
        return Err(Error::NonSeparable);
    }
    let coeffs = hasse_witt_coefficients(curve, p);
    let (m, m_frob, product, verdict) = product_verdict(r, &coeffs);
    let case_tag = closed_form_case(r, &coeffs);
    if case_tag.verdict() != verdict {
        return Err(Error::IdentityViolation(format!(
            "closed-form case {case_tag:?} disagrees with M M^(p) verdict {verdict:?} on {}",
            curve.render()
        )));
    }
    Ok(CartierManin { p, coeffs, m, m_frob, product, verdict, case_tag })
}

fn render_mat<R: Ring>(r: &R, m: &Mat2<R::Elem>) -> Mat2<String> {
    [[r.render(&m[0][0]), r.render(&m[0][1])], [r.render(&m[1][0]), r.render(&m[1][1])]]
}

impl<E> CartierManin<E> {
    pub fn report<R: Ring<Elem = E>>(&self, r: &R) -> CartierManinReport {
        CartierManinReport {
            p: self.p,
            c_p_minus_1: r.render(&self.coeffs[0]),
            c_p_minus_2: r.render(&self.coeffs[1]),
            c_2p_minus_1: r.render(&self.coeffs[2]),
            c_2p_minus_2: r.render(&self.coeffs[3]),
            m: render_mat(r, &self.m),
            m_frob: render_mat(r, &self.m_frob),
            product: render_mat(r, &self.product),
            verdict: self.verdict,
            case_tag: self.case_tag,
            note: "M holds the coefficients of f^((p-1)/2) without p-th root extraction".into(),
        }
    }
}

/// Classify a curve of any positive-characteristic domain.
pub fn classify(curve: &AnyCurve, p: u64) -> Result<CartierManinReport> {
    match curve {
        AnyCurve::Q(_) | AnyCurve::QT(_) => {
            Err(Error::WrongCharacteristic { expected: p, actual: 0 })
        }
        AnyCurve::Fp(c) => Ok(cartier_manin(c, p)?.report(c.base())),
        AnyCurve::FpT(c) => Ok(cartier_manin(c, p)?.report(c.base())),
        AnyCurve::Fq(c) => Ok(cartier_manin(c, p)?.report(c.base())),
        AnyCurve::FqT(c) => Ok(cartier_manin(c, p)?.report(c.base())),
    }
}

/// Characteristic 3: `h = f`, and the criterion reads off `a1, a2, a4, a5`
/// directly.
pub fn char3_criterion<R: CharP>(curve: &SexticCurve<R>) -> Result<Verdict> {
    let r = curve.base();
    check_char(r, 3)?;
    if !curve.is_separable() {
        return Err(Error::NonSeparable);
    }
    let (a1, a2, a4, a5) = (curve.a(1), curve.a(2), curve.a(4), curve.a(5));
    if r.is_zero(&a2) && r.is_zero(&a4) && r.is_zero(&a5) {
        return Ok(Verdict::Supersingular);
    }
    if r.is_zero(&a5) {
        return Ok(Verdict::NotSupersingular);
    }
    // a1 a5^3 = −a2^4 and a4 a5^2 = −a2^3
    let rel1 = r.add(&r.mul(&a1, &r.pow(&a5, 3)), &r.pow(&a2, 4));
    let rel2 = r.add(&r.mul(&a4, &r.pow(&a5, 2)), &r.pow(&a2, 3));
    Ok(if r.is_zero(&rel1) && r.is_zero(&rel2) {
        Verdict::Supersingular
    } else {
        Verdict::NotSupersingular
    })
}

/// Every `ε ∈ F_q` with `ε^4 + 1 = 0` and `ε^3 + ε − 1 = 0`, by exhaustion.
/// `q` must be one of 3, 9, 27, 81.
pub fn char3_brumer_obstruction(q: u64) -> Result<(ExtField, Vec<Vec<u64>>)> {
    let k = match q {
        3 => 1,
        9 => 2,
        27 => 3,
        81 => 4,
        _ => return Err(Error::Unsupported(format!("q = {q}; expected 3, 9, 27 or 81"))),
    };
    let f = ExtField::new(3, k)?;
    let sols = (0..f.order())
        .map(|i| f.element(i))
        .filter(|e| crate::brumer::is_valid_epsilon(&f, e))
        .collect();
    Ok((f, sols))
}

/// Verdict for any curve in positive characteristic.
pub fn verdict_of(curve: &AnyCurve) -> Result<Verdict> {
    let p = curve.characteristic();
    match curve {
        AnyCurve::Q(_) | AnyCurve::QT(_) => Err(Error::WrongCharacteristic { expected: p, actual: 0 }),
        AnyCurve::Fp(c) => Ok(cartier_manin(c, p)?.verdict),
        AnyCurve::FpT(c) => Ok(cartier_manin(c, p)?.verdict),
        AnyCurve::Fq(c) => Ok(cartier_manin(c, p)?.verdict),
        AnyCurve::FqT(c) => Ok(cartier_manin(c, p)?.verdict),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::{PolyRing, PrimeField};

    fn fp_curve(p: u64, a: &[i64]) -> SexticCurve<PrimeField> {
        let f = PrimeField::new(p).unwrap();
        SexticCurve::from_coeffs(f, a.iter().map(|&c| f.from_i64(c)).collect(), false).unwrap()
    }

    #[test]
    fn x6_plus_x_plus_1() {
        let c = fp_curve(3, &[1, 1, 0, 0, 0, 0]);
        let cm = cartier_manin(&c, 3).unwrap();
        assert_eq!(cm.coeffs, [0, 1, 0, 0]);
        assert_eq!(cm.m, [[0, 1], [0, 0]]);
        assert_eq!(cm.verdict, Verdict::Supersingular);
        assert_eq!(cm.case_tag, CaseTag::Case1);
    }

    #[test]
    fn f012_mod_3() {
        let c = fp_curve(3, &[1, 2, 1, 1, 2, 2]);
        let cm = cartier_manin(&c, 3).unwrap();
        assert_eq!(cm.m, [[1, 2], [2, 2]]);
        assert_eq!(cm.product, [[2, 0], [0, 2]]);
        assert_eq!(cm.verdict, Verdict::NotSupersingular);
        assert_eq!(char3_criterion(&c).unwrap(), Verdict::NotSupersingular);
    }

    #[test]
    fn table4_row() {
        let any = AnyCurve::parse_inline("x^6 + 2x^5 + (T + 1)x^3 + 3x + 1", 5, 1, false).unwrap();
        let rep = classify(&any, 5).unwrap();
        assert_eq!(rep.verdict, Verdict::Supersingular);
        assert_eq!(verdict_of(&any).unwrap(), Verdict::Supersingular);
    }

    #[test]
    fn errors() {
        let any = AnyCurve::parse_inline("x^6 + x + 1", 0, 1, false).unwrap();
        assert!(matches!(classify(&any, 3), Err(Error::WrongCharacteristic { .. })));
        let c = fp_curve(5, &[1, 1, 0, 0, 0, 0]);
        assert!(matches!(cartier_manin(&c, 3), Err(Error::WrongCharacteristic { expected: 3, actual: 5 })));
        let f3 = PrimeField::new(3).unwrap();
        let sing = SexticCurve::from_coeffs(f3, vec![1, 0, 0, 1, 0, 0], true).unwrap();
        assert!(matches!(char3_criterion(&sing), Err(Error::NonSeparable)));
        assert!(matches!(cartier_manin(&sing, 3), Err(Error::NonSeparable)));
    }

    #[test]
    fn char3_family_a3_a1_free() {
        for a1 in 1..3 {
            for a3 in 0..3 {
                for a0 in 0..3 {
                    let f3 = PrimeField::new(3).unwrap();
                    if let Ok(c) = SexticCurve::from_coeffs(f3, vec![a0, a1, 0, a3, 0, 0], false) {
                        assert_eq!(char3_criterion(&c).unwrap(), Verdict::Supersingular);
                    }
                }
            }
        }
    }

    #[test]
    fn obstruction_sets() {
        let (_, s3) = char3_brumer_obstruction(3).unwrap();
        assert!(s3.is_empty());
        let (f9, s9) = char3_brumer_obstruction(9).unwrap();
        let s = f9.generator();
        let m1 = f9.from_i64(-1);
        let mut expected = vec![f9.add(&m1, &s), f9.sub(&m1, &s)];
        expected.sort();
        let mut got = s9.clone();
        got.sort();
        assert_eq!(got, expected);
        assert!(char3_brumer_obstruction(27).unwrap().1.is_empty());
        assert!(char3_brumer_obstruction(25).is_err());
    }

    #[test]
    fn frobenius_is_multiplicative_on_fpt() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for p in [3u64, 5, 7] {
            let r = PolyRing::new(PrimeField::new(p).unwrap(), "T");
            for _ in 0..50 {
                let u = r.from_coeffs((0..4).map(|_| rng.gen_range(0..p)).collect());
                let v = r.from_coeffs((0..4).map(|_| rng.gen_range(0..p)).collect());
                assert_eq!(r.frobenius(&r.mul(&u, &v)), r.mul(&r.frobenius(&u), &r.frobenius(&v)));
            }
        }
    }
}
