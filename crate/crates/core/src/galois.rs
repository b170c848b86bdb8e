//! A Frobenius cycle-type sieve for sextics whose Galois group should be
//! `A_5 ≅ PSL_2(F_5)` in its degree-6 action.
//!
//! Soundness is one-sided. A degree pattern outside the cycle types of
//! `A_5`, or a non-square discriminant, rules `A_5` out. Seeing every
//! nontrivial `A_5` type and nothing else is only evidence; under
//! equidistribution the chance that the group is really `A_6` is at most
//! `(230/360)^N` after `N` samples, because 130 of the 360 elements of
//! `A_6` have a type that `A_5` lacks.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigInt;
use num_traits::Signed;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::brumer::{clear_denominators, integer_coefficients, AnyCurve, SexticCurve};
use crate::error::{Error, Result};
use crate::ffield::{
    discriminant, distinct_degree_pattern, is_prime_u64, is_squarefree, CharP, ExtField,
    FiniteField, IntegerRing, Poly, PolyRing, PrimeField, RationalField, Ring,
};
use crate::perm::{alternating_group, build_psl25, closure, cycle_type, pattern_name, PermGroup};

pub const DEFAULT_SEED: u64 = 0x5EED;

/// Cycle types realised by a permutation group, with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleTypeSet {
    pub counts: BTreeMap<Vec<usize>, usize>,
}

impl CycleTypeSet {
    pub fn of_group(g: &PermGroup) -> Self {
        Self { counts: g.cycle_type_census() }
    }

    pub fn contains(&self, pattern: &[usize]) -> bool {
        self.counts.contains_key(pattern)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }
}

/// The `A_5` types, and the `A_6` types outside them, both obtained by
/// enumeration.
pub fn a5_and_complement() -> (CycleTypeSet, CycleTypeSet) {
    let a5 = CycleTypeSet::of_group(&build_psl25());
    let mut rest = BTreeMap::new();
    for g in alternating_group() {
        let t = cycle_type(&g);
        if !a5.contains(&t) {
            *rest.entry(t).or_insert(0) += 1;
        }
    }
    (a5, CycleTypeSet { counts: rest })
}

/// Orders of `⟨G, h⟩` for every `h ∈ A_6`, with `G` the `PSL_2(F_5)`
/// image, and the orders of all two-generated subgroups of `G`.
pub fn overgroup_and_subgroup_orders() -> (BTreeSet<usize>, BTreeSet<usize>) {
    let g = build_psl25();
    let mut over = BTreeSet::new();
    for h in alternating_group() {
        let mut gens = g.generators().to_vec();
        gens.push(h);
        over.insert(closure(&gens).len());
    }
    let mut sub = BTreeSet::new();
    let mut seen: HashSet<Vec<[u8; 6]>> = HashSet::new();
    for a in g.elements() {
        for b in g.elements() {
            let s = closure(&[*a, *b]);
            if seen.insert(s.clone()) {
                sub.insert(s.len());
            }
        }
    }
    (over, sub)
}

/// `(230/360)^N`.
pub fn residual_bound(n: usize) -> f64 {
    (230.0f64 / 360.0).powi(n as i32)
}

/// No proper factor of degree `k` over the global field is compatible with
/// every observed pattern, since a factor of degree `k` forces `k` to be a
/// sub-sum of each local pattern.
pub fn patterns_force_irreducible<'a>(patterns: impl IntoIterator<Item = &'a Vec<usize>>) -> bool {
    let mut possible: BTreeSet<usize> = (1..6).collect();
    for pat in patterns {
        let mut sums = BTreeSet::from([0usize]);
        for &d in pat {
            let next: Vec<usize> = sums.iter().map(|s| s + d).collect();
            sums.extend(next);
        }
        possible.retain(|k| sums.contains(k));
        if possible.is_empty() {
            return true;
        }
    }
    possible.is_empty()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertVerdict {
    CertifiedA5,
    RejectedA5,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GaloisCertificate {
    pub verdict: CertVerdict,
    /// Always true: the certificate assumes equidistribution of Frobenius.
    pub heuristic: bool,
    pub domain: String,
    pub samples: usize,
    /// First sample showing each pattern.
    pub witnesses: BTreeMap<String, String>,
    pub pattern_counts: BTreeMap<String, usize>,
    pub irreducible: bool,
    pub disc_square: bool,
    /// Upper bound on the chance that an `A_6` group evaded detection.
    pub residual: f64,
    pub reason: String,
}

impl GaloisCertificate {
    pub fn is_certified(&self) -> bool {
        self.verdict == CertVerdict::CertifiedA5
    }
}

/// Applies the certificate rules to a list of `(label, pattern)` samples.
fn decide(domain: &str, samples: &[(String, Vec<usize>)], disc_square: bool) -> GaloisCertificate {
    let (a5, _) = a5_and_complement();
    let mut witnesses = BTreeMap::new();
    let mut pattern_counts = BTreeMap::new();
    let mut forbidden = None;
    for (label, pat) in samples {
        let name = pattern_name(pat);
        *pattern_counts.entry(name.clone()).or_insert(0) += 1;
        witnesses.entry(name.clone()).or_insert_with(|| label.clone());
        if forbidden.is_none() && !a5.contains(pat) {
            forbidden = Some((name, label.clone()));
        }
    }
    let irreducible = patterns_force_irreducible(samples.iter().map(|(_, p)| p));
    let needed = ["2^2 1^2", "3^2", "5 1"];
    let all_seen = needed.iter().all(|n| witnesses.contains_key(*n));
    let (verdict, reason) = if let Some((name, label)) = forbidden {
        (CertVerdict::RejectedA5, format!("pattern {name} at {label} is not an A5 cycle type"))
    } else if !disc_square {
        (CertVerdict::RejectedA5, "discriminant is not a square".to_string())
    } else if !irreducible {
        (CertVerdict::Inconclusive, "irreducibility not established by the observed patterns".into())
    } else if !all_seen {
        let missing: Vec<&str> = needed.iter().copied().filter(|n| !witnesses.contains_key(*n)).collect();
        (CertVerdict::Inconclusive, format!("patterns not yet witnessed: {}", missing.join(", ")))
    } else {
        (CertVerdict::CertifiedA5, "heuristic: all A5 types seen, none outside A5".to_string())
    };
    GaloisCertificate {
        verdict,
        heuristic: true,
        domain: domain.to_string(),
        samples: samples.len(),
        witnesses,
        pattern_counts,
        irreducible,
        disc_square,
        residual: residual_bound(samples.len()),
        reason,
    }
}

pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// Integer discriminant of a monic integral sextic `[a0..a6]`.
pub fn integer_discriminant(coeffs: &[BigInt]) -> BigInt {
    let ring = PolyRing::new(IntegerRing, "x");
    discriminant(&ring, &ring.from_coeffs(coeffs.to_vec()))
}

/// Sieve over primes `p ≥ 101` not dividing `disc(f)`.
pub fn certify_a5_over_q(curve: &SexticCurve<RationalField>, n_primes: usize) -> Result<GaloisCertificate> {
    let (cleared, _) = clear_denominators(curve)?;
    let coeffs = integer_coefficients(&cleared).expect("cleared curve is integral");
    let disc = integer_discriminant(&coeffs);
    if disc == BigInt::from(0) {
        return Err(Error::NonSeparable);
    }
    let disc_square = is_perfect_square(&disc);
    let mut samples = Vec::with_capacity(n_primes);
    let mut p = 101u64;
    while samples.len() < n_primes {
        if is_prime_u64(p) && (&disc % p) != BigInt::from(0) {
            let f = PrimeField::new(p)?;
            let ring = PolyRing::new(f, "x");
            let fp = ring.from_coeffs(coeffs.iter().map(|c| f.from_bigint(c)).collect());
            samples.push((format!("p={p}"), distinct_degree_pattern(&ring, &fp)?));
        }
        p += 2;
    }
    Ok(decide("Q", &samples, disc_square))
}

/// Square root of a monic polynomial over a field of odd characteristic,
/// if it has one.
fn monic_sqrt<F: crate::ffield::Field>(ring: &PolyRing<F>, g: &Poly<F::Elem>) -> Option<Poly<F::Elem>> {
    let n = g.degree()?;
    if n % 2 == 1 {
        return None;
    }
    let m = n / 2;
    let b = ring.base();
    let two_inv = b.inv(&b.from_i64(2))?;
    let mut h = vec![b.zero(); m + 1];
    h[m] = b.one();
    for k in 1..=m {
        // coefficient of x^{n−k} in h^2 is 2 h_{m−k} + Σ_{i=1}^{k−1} h_{m−i} h_{m−k+i}
        let mut s = b.zero();
        for i in 1..k {
            s = b.add(&s, &b.mul(&h[m - i], &h[m - k + i]));
        }
        h[m - k] = b.mul(&b.sub(&ring.coeff(g, n - k), &s), &two_inv);
    }
    let h = ring.from_coeffs(h);
    (ring.mul(&h, &h) == *g).then_some(h)
}

/// `u ∈ F_p[T]` is a square: square leading coefficient and a square
/// monic part.
pub fn is_square_fpt(ring: &PolyRing<PrimeField>, u: &Poly<u64>) -> bool {
    let Some(lc) = u.leading() else { return true };
    if ring.base().quadratic_character(*lc) != 1 {
        return false;
    }
    monic_sqrt(ring, &ring.monic(u)).is_some()
}

/// One representative `t` per closed point of degree exactly `k`.
fn places_of_degree(f: &ExtField, max_count: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<u64>> {
    let k = f.degree();
    let orbit_min = |t: &Vec<u64>| -> Option<Vec<u64>> {
        let mut orbit = vec![t.clone()];
        let mut x = f.frobenius(t);
        while x != *t {
            orbit.push(x.clone());
            x = f.frobenius(&x);
        }
        (orbit.len() == k).then(|| orbit.into_iter().min().unwrap())
    };
    const ENUMERATE_LIMIT: u64 = 20_000;
    let mut out = Vec::new();
    if f.order() <= ENUMERATE_LIMIT {
        for i in 0..f.order() {
            let t = f.element(i);
            if orbit_min(&t).as_ref() == Some(&t) {
                out.push(t);
            }
        }
    } else {
        let mut seen = HashSet::new();
        let mut tries = 0;
        while out.len() < max_count && tries < max_count.saturating_mul(50) {
            tries += 1;
            let t = f.random_element(rng);
            if let Some(rep) = orbit_min(&t) {
                if seen.insert(rep.clone()) {
                    out.push(rep);
                }
            }
        }
    }
    out
}

/// Specialization sieve over `F_p(T)`: the Frobenius at a place of degree
/// `k` is read off from `f_t` over `F_{p^k}`. Conjugate values of `t`
/// define the same place and are sampled once.
pub fn certify_a5_over_fpt(
    curve: &SexticCurve<PolyRing<PrimeField>>,
    n_specializations: usize,
    max_ext_degree: usize,
    seed: u64,
) -> Result<GaloisCertificate> {
    let (samples, disc_square) = fpt_samples(curve, n_specializations, max_ext_degree, seed)?;
    if samples.len() < n_specializations {
        return Err(Error::ExhaustedSpecializations { found: samples.len(), requested: n_specializations });
    }
    Ok(decide("F_p(T)", &samples, disc_square))
}

type Sample = (String, Vec<usize>);

/// Up to `n_specializations` good places with their factorization
/// patterns, and whether the discriminant is a square.
fn fpt_samples(
    curve: &SexticCurve<PolyRing<PrimeField>>,
    n_specializations: usize,
    max_ext_degree: usize,
    seed: u64,
) -> Result<(Vec<Sample>, bool)> {
    if !curve.is_separable() {
        return Err(Error::NonSeparable);
    }
    let tring = curve.base();
    let p = tring.base().p();
    let disc_square = is_square_fpt(tring, curve.discriminant());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples = Vec::new();
    'outer: for k in 1..=max_ext_degree.min(4) {
        let fq = ExtField::new(p, k)?;
        let xring = PolyRing::new(fq.clone(), "x");
        let ctx = PolyRing::new(fq.clone(), "T");
        let lifted: Vec<Poly<Vec<u64>>> = (0..=6)
            .map(|i| tring.map_into(&curve.a(i), &ctx, |c| fq.embed(*c)))
            .collect();
        for t in places_of_degree(&fq, n_specializations - samples.len(), &mut rng) {
            let ft = xring.from_coeffs(lifted.iter().map(|a| ctx.eval(a, &t)).collect());
            if !is_squarefree(&xring, &ft) {
                continue;
            }
            let pat = distinct_degree_pattern(&xring, &ft)?;
            samples.push((format!("t={} (deg {k})", fq.render(&t)), pat));
            if samples.len() == n_specializations {
                break 'outer;
            }
        }
    }
    Ok((samples, disc_square))
}

/// Number of good places of degree `≤ max_ext_degree` for `curve`.
pub fn good_places(curve: &SexticCurve<PolyRing<PrimeField>>, max_ext_degree: usize) -> Result<usize> {
    Ok(fpt_samples(curve, usize::MAX, max_ext_degree, DEFAULT_SEED)?.0.len())
}

/// Dispatch on the curve's domain. `n` is the requested sample count; over
/// `F_p(T)` it is capped at the number of good places of degree at most 4
/// when `cap_to_available` is set.
pub fn certify(curve: &AnyCurve, n: usize, seed: u64, cap_to_available: bool) -> Result<GaloisCertificate> {
    match curve {
        AnyCurve::Q(c) => certify_a5_over_q(c, n),
        AnyCurve::FpT(c) if cap_to_available => {
            let (samples, disc_square) = fpt_samples(c, n, 4, seed)?;
            if samples.is_empty() {
                return Err(Error::ExhaustedSpecializations { found: 0, requested: n });
            }
            Ok(decide("F_p(T)", &samples, disc_square))
        }
        AnyCurve::FpT(c) => certify_a5_over_fpt(c, n, 4, seed),
        other => Err(Error::Unsupported(format!("Galois sieve over {}", other.domain()))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brumer::brumer_from_exprs;

    #[test]
    fn cycle_type_sets() {
        let (a5, rest) = a5_and_complement();
        assert_eq!(a5.total(), 60);
        assert_eq!(a5.counts.len(), 4);
        assert_eq!(rest.counts, BTreeMap::from([(vec![3, 1, 1, 1], 40), (vec![4, 2], 90)]));
    }

    #[test]
    fn overgroups_and_subgroups() {
        let (over, sub) = overgroup_and_subgroup_orders();
        assert_eq!(over, BTreeSet::from([60, 360]));
        assert!(sub.iter().all(|&o| o % 30 != 0 || o == 60));
        assert!(sub.contains(&60));
    }

    #[test]
    fn lattice() {
        assert!(patterns_force_irreducible(&[vec![6]]));
        assert!(patterns_force_irreducible(&[vec![5, 1], vec![3, 3]]));
        assert!(!patterns_force_irreducible(&[vec![5, 1], vec![2, 2, 1, 1]]));
        assert!(!patterns_force_irreducible(&[vec![4, 2], vec![2, 2, 2]]));
    }

    #[test]
    fn residual_decreases() {
        assert!(residual_bound(201) < residual_bound(200));
        assert!(residual_bound(200) < 1e-38);
    }

    #[test]
    fn monic_square_roots() {
        let r = PolyRing::new(PrimeField::new(7).unwrap(), "T");
        let h = r.from_coeffs(vec![3, 1, 5, 1]);
        let g = r.mul(&h, &h);
        assert_eq!(monic_sqrt(&r, &g), Some(h.clone()));
        assert!(monic_sqrt(&r, &r.add(&g, &r.one())).is_none());
        assert!(is_square_fpt(&r, &r.scale(&g, &4)));
        assert!(!is_square_fpt(&r, &r.scale(&g, &3)));
    }

    #[test]
    fn f012_is_a5() {
        let AnyCurve::Q(c) = brumer_from_exprs("0", "1", "2", 0, false).unwrap() else { unreachable!() };
        let cert = certify_a5_over_q(&c, 200).unwrap();
        assert_eq!(cert.verdict, CertVerdict::CertifiedA5, "{cert:?}");
        assert!(cert.residual < 1e-38);
    }

    #[test]
    fn generic_sextic_rejected() {
        let AnyCurve::Q(c) = AnyCurve::parse_inline("x^6 + x + 1", 0, 1, false).unwrap() else { unreachable!() };
        let cert = certify_a5_over_q(&c, 50).unwrap();
        assert_eq!(cert.verdict, CertVerdict::RejectedA5);
    }

    #[test]
    fn reducible_rejected() {
        let AnyCurve::Q(c) = AnyCurve::parse_inline("(x^2+1)(x^4+1)", 0, 1, false).unwrap() else { unreachable!() };
        let cert = certify_a5_over_q(&c, 50).unwrap();
        assert_eq!(cert.verdict, CertVerdict::RejectedA5);
        assert!(!cert.irreducible);
    }

    #[test]
    fn table2_row_over_f3t() {
        let AnyCurve::FpT(c) = brumer_from_exprs("0", "1", "T", 3, false).unwrap() else { unreachable!() };
        let n = good_places(&c, 4).unwrap();
        let cert = certify_a5_over_fpt(&c, n, 4, DEFAULT_SEED).unwrap();
        assert_eq!(cert.verdict, CertVerdict::CertifiedA5, "{cert:?}");
        assert!(matches!(
            certify_a5_over_fpt(&c, n + 1, 4, DEFAULT_SEED),
            Err(Error::ExhaustedSpecializations { .. })
        ));
    }

    #[test]
    fn x6_plus_t_rejected() {
        let AnyCurve::FpT(c) = AnyCurve::parse_inline("x^6 + T", 5, 1, false).unwrap() else { unreachable!() };
        let cert = certify_a5_over_fpt(&c, 60, 4, DEFAULT_SEED).unwrap();
        assert_eq!(cert.verdict, CertVerdict::RejectedA5);
    }
}
