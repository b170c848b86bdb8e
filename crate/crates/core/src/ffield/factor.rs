//! Squarefree testing, distinct-degree and equal-degree factorization over
//! finite fields of odd characteristic.

use num_bigint::BigUint;
use rand::Rng;

use super::{FiniteField, Poly, PolyRing, Ring};
use crate::error::{Error, Result};

pub fn is_squarefree<F: FiniteField>(ring: &PolyRing<F>, f: &Poly<F::Elem>) -> bool {
    if f.is_zero() {
        return false;
    }
    let g = ring.gcd(f, &ring.derivative(f));
    g.degree() == Some(0)
}

/// Pairs `(d, g_d)` where `g_d` is the product of all monic irreducible
/// factors of degree `d` of the squarefree polynomial `f`.
pub fn distinct_degree_factorization<F: FiniteField>(
    ring: &PolyRing<F>,
    f: &Poly<F::Elem>,
) -> Vec<(usize, Poly<F::Elem>)> {
    let q = ring.base().order();
    let x = ring.gen();
    let mut rest = ring.monic(f);
    let mut xq = x.clone();
    let mut out = Vec::new();
    let mut d = 0;
    while let Some(n) = rest.degree() {
        if n == 0 {
            break;
        }
        d += 1;
        if 2 * d > n {
            out.push((n, rest.clone()));
            break;
        }
        xq = ring.pow_mod(&xq, q, &rest);
        let g = ring.gcd(&ring.sub(&xq, &x), &rest);
        if g.degree().unwrap_or(0) > 0 {
            rest = ring.div_rem(&rest, &g).0;
            xq = ring.rem(&xq, &rest);
            out.push((d, g));
        }
    }
    out
}

/// Multiset of irreducible-factor degrees of a squarefree `f`, sorted
/// descending. This is the cycle type of Frobenius on the roots.
pub fn distinct_degree_pattern<F: FiniteField>(
    ring: &PolyRing<F>,
    f: &Poly<F::Elem>,
) -> Result<Vec<usize>> {
    if !is_squarefree(ring, f) {
        return Err(Error::NotSquarefree);
    }
    let mut degrees = Vec::new();
    for (d, g) in distinct_degree_factorization(ring, f) {
        let count = g.degree().unwrap() / d;
        degrees.extend(std::iter::repeat_n(d, count));
    }
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    Ok(degrees)
}

pub fn is_irreducible<F: FiniteField>(ring: &PolyRing<F>, f: &Poly<F::Elem>) -> bool {
    match f.degree() {
        None | Some(0) => false,
        Some(n) => distinct_degree_pattern(ring, f).is_ok_and(|pat| pat == [n]),
    }
}

/// Cantor–Zassenhaus split of a monic `g` whose irreducible factors all
/// have degree `d`. Odd characteristic only.
pub fn equal_degree_split<F: FiniteField, G: Rng + ?Sized>(
    ring: &PolyRing<F>,
    g: &Poly<F::Elem>,
    d: usize,
    rng: &mut G,
) -> Vec<Poly<F::Elem>> {
    let n = g.degree().unwrap_or(0);
    if n <= d {
        return vec![ring.monic(g)];
    }
    let q = BigUint::from(ring.base().order());
    let exp = (q.pow(d as u32) - 1u32) >> 1;
    let one = ring.one();
    loop {
        let a = ring.from_coeffs((0..n).map(|_| ring.base().random_element(rng)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = ring.sub(&ring.pow_mod_big(&a, &exp, g), &one);
        let h = ring.gcd(&b, g);
        let dh = h.degree().unwrap_or(0);
        if dh > 0 && dh < n {
            let other = ring.div_rem(g, &h).0;
            let mut out = equal_degree_split(ring, &h, d, rng);
            out.extend(equal_degree_split(ring, &other, d, rng));
            return out;
        }
    }
}

/// Full factorization of a squarefree polynomial into monic irreducibles.
pub fn factor_squarefree<F: FiniteField, G: Rng + ?Sized>(
    ring: &PolyRing<F>,
    f: &Poly<F::Elem>,
    rng: &mut G,
) -> Result<Vec<Poly<F::Elem>>> {
    if !is_squarefree(ring, f) {
        return Err(Error::NotSquarefree);
    }
    let mut out = Vec::new();
    for (d, g) in distinct_degree_factorization(ring, f) {
        out.extend(equal_degree_split(ring, &g, d, rng));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::{ExtField, PrimeField};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ring(p: u64) -> PolyRing<PrimeField> {
        PolyRing::new(PrimeField::new(p).unwrap(), "x")
    }

    fn poly(r: &PolyRing<PrimeField>, c: &[i64]) -> Poly<u64> {
        r.from_coeffs(c.iter().map(|&v| r.base().from_i64(v)).collect())
    }

    #[test]
    fn x2_plus_1() {
        let r3 = ring(3);
        assert_eq!(distinct_degree_pattern(&r3, &poly(&r3, &[1, 0, 1])).unwrap(), vec![2]);
        let r5 = ring(5);
        assert_eq!(distinct_degree_pattern(&r5, &poly(&r5, &[1, 0, 1])).unwrap(), vec![1, 1]);
    }

    #[test]
    fn not_squarefree_is_an_error() {
        let r = ring(7);
        let f = r.mul(&poly(&r, &[1, 1]), &poly(&r, &[1, 1]));
        assert!(matches!(distinct_degree_pattern(&r, &f), Err(Error::NotSquarefree)));
    }

    /// Brute-force oracle: count roots of `f` in `F_{p^k}` for each `k`
    /// and recover the degree multiset by Möbius-style peeling.
    fn pattern_by_root_counts(p: u64, f: &Poly<u64>) -> Vec<usize> {
        let n = f.degree().unwrap();
        let base = ring(p);
        let mut counts = vec![0usize; n + 1];
        for k in 1..=n.min(4) {
            let ext = ExtField::new(p, k).unwrap();
            let er = PolyRing::new(ext.clone(), "x");
            let g = crate::ffield::ext::lift_poly(&base, f, &er);
            counts[k] = (0..ext.order())
                .filter(|&i| er.base().is_zero(&er.eval(&g, &ext.element(i))))
                .count();
        }
        // number of irreducible factors of degree d: roots in F_{p^d} not in smaller subfields
        let mut found = vec![0usize; n + 1];
        for d in 1..=n.min(4) {
            let mut new_roots = counts[d];
            for e in 1..d {
                if d % e == 0 {
                    new_roots -= found[e] * e;
                }
            }
            found[d] = new_roots / d;
        }
        let mut degs = Vec::new();
        for d in 1..=n.min(4) {
            degs.extend(std::iter::repeat_n(d, found[d]));
        }
        let rest = n - degs.iter().sum::<usize>();
        if rest > 0 {
            degs.push(rest); // one factor of degree 5 or 6 at most for n = 6
        }
        degs.sort_unstable_by(|a, b| b.cmp(a));
        degs
    }

    #[test]
    fn pattern_matches_root_count_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for p in [3u64, 5, 7] {
            let r = ring(p);
            let mut checked = 0;
            while checked < 40 {
                let mut c: Vec<u64> = (0..6).map(|_| rng.gen_range(0..p)).collect();
                c.push(1);
                let f = r.from_coeffs(c);
                let Ok(pat) = distinct_degree_pattern(&r, &f) else { continue };
                // a 6-point degree set with leftover 5 or 6 is unambiguous only
                // when at most one factor exceeds degree 4
                assert_eq!(pat, pattern_by_root_counts(p, &f), "p={p} f={}", r.render(&f));
                checked += 1;
            }
        }
    }

    #[test]
    fn cantor_zassenhaus_over_extension() {
        let f9 = ExtField::new(3, 2).unwrap();
        let r = PolyRing::new(f9.clone(), "x");
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        // x^8 - 1 splits completely over F_9
        let mut c = vec![f9.from_i64(-1)];
        c.extend(std::iter::repeat_n(f9.zero(), 7));
        c.push(f9.one());
        let f = r.from_coeffs(c);
        let factors = factor_squarefree(&r, &f, &mut rng).unwrap();
        assert_eq!(factors.len(), 8);
        assert!(factors.iter().all(|g| g.degree() == Some(1)));
    }

    proptest! {
        #[test]
        fn factors_multiply_back_and_degrees_sum(
            coeffs in prop::collection::vec(0u64..11, 6),
            seed in any::<u64>(),
        ) {
            let r = ring(11);
            let mut c = coeffs;
            c.push(1);
            let f = r.from_coeffs(c);
            prop_assume!(is_squarefree(&r, &f));
            let pat = distinct_degree_pattern(&r, &f).unwrap();
            prop_assert_eq!(pat.iter().sum::<usize>(), 6);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let factors = factor_squarefree(&r, &f, &mut rng).unwrap();
            let prod = factors.iter().fold(r.one(), |acc, g| r.mul(&acc, g));
            prop_assert_eq!(prod, f);
            let mut degs: Vec<usize> = factors.iter().map(|g| g.degree().unwrap()).collect();
            degs.sort_unstable_by(|a, b| b.cmp(a));
            prop_assert_eq!(degs, pat);
            prop_assert!(factors.iter().all(|g| is_irreducible(&r, g)));
        }
    }
}
