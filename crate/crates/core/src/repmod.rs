//! The heart `Q_B = (F^B)^0 / F·1_B` of the permutation module of
//! `PSL_2(F_5)` on `B = P^1(F_5)` over `F = F_2` and `F_4`, its commutant,
//! simplicity, and the `G`-stable subalgebras of `End_{F_2}(Q_B)`.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
pub use crate::perm::{build_psl25, cycle_type, pattern_name, Perm, PermGroup};

/// `F_2` or `F_4 = F_2[ω]/(ω^2 + ω + 1)`, elements encoded as `a + bω`
/// in bits `b a`. Addition is XOR in both.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Gf {
    F2,
    F4,
}

pub const OMEGA: u8 = 2;

impl Gf {
    pub fn order(self) -> u8 {
        match self {
            Gf::F2 => 2,
            Gf::F4 => 4,
        }
    }

    pub fn mul(a: u8, b: u8) -> u8 {
        let (a0, a1, b0, b1) = (a & 1, a >> 1, b & 1, b >> 1);
        // (a0 + a1ω)(b0 + b1ω) with ω^2 = ω + 1
        let c0 = (a0 & b0) ^ (a1 & b1);
        let c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
        c0 | (c1 << 1)
    }

    pub fn inv(a: u8) -> Option<u8> {
        (1..4).find(|&b| Gf::mul(a, b) == 1).filter(|_| a != 0)
    }
}

/// Dense square matrix over `F_2` or `F_4`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat {
    n: usize,
    e: Vec<u8>,
}

impl Mat {
    pub fn zero(n: usize) -> Self {
        Self { n, e: vec![0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.e[i * n + i] = 1;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.e[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        self.e[r * self.n + c] = v;
    }

    pub fn entries(&self) -> &[u8] {
        &self.e
    }

    pub fn from_entries(n: usize, e: Vec<u8>) -> Self {
        assert_eq!(e.len(), n * n);
        Self { n, e }
    }

    pub fn add(&self, o: &Mat) -> Mat {
        Mat { n: self.n, e: self.e.iter().zip(&o.e).map(|(a, b)| a ^ b).collect() }
    }

    pub fn scale(&self, c: u8) -> Mat {
        Mat { n: self.n, e: self.e.iter().map(|&a| Gf::mul(a, c)).collect() }
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        let n = self.n;
        let mut out = Mat::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out.e[i * n + j] ^= Gf::mul(a, o.get(k, j));
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[u8]) -> Vec<u8> {
        (0..self.n)
            .map(|i| (0..self.n).fold(0, |acc, j| acc ^ Gf::mul(self.get(i, j), v[j])))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(|&x| x == 0)
    }

    pub fn inverse(&self) -> Option<Mat> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = Mat::identity(n);
        for col in 0..n {
            let piv = (col..n).find(|&r| a.get(r, col) != 0)?;
            for c in 0..n {
                a.e.swap(piv * n + c, col * n + c);
                inv.e.swap(piv * n + c, col * n + c);
            }
            let s = Gf::inv(a.get(col, col)).unwrap();
            for c in 0..n {
                a.e[col * n + c] = Gf::mul(a.e[col * n + c], s);
                inv.e[col * n + c] = Gf::mul(inv.e[col * n + c], s);
            }
            for r in 0..n {
                let f = a.get(r, col);
                if r != col && f != 0 {
                    for c in 0..n {
                        a.e[r * n + c] ^= Gf::mul(f, a.e[col * n + c]);
                        inv.e[r * n + c] ^= Gf::mul(f, inv.e[col * n + c]);
                    }
                }
            }
        }
        Some(inv)
    }
}

/// Row-reduced basis of a subspace of `field^len`.
#[derive(Clone, Debug, Default)]
struct Span {
    rows: Vec<Vec<u8>>,
    pivots: Vec<usize>,
}

impl Span {
    /// Reduce `v` against the basis; returns the remainder.
    fn reduce(&self, v: &[u8]) -> Vec<u8> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let f = v[p];
            if f != 0 {
                for (x, y) in v.iter_mut().zip(row) {
                    *x ^= Gf::mul(f, *y);
                }
            }
        }
        v
    }

    /// Adds `v` if independent; returns whether it was.
    fn insert(&mut self, v: &[u8]) -> bool {
        let r = self.reduce(v);
        let Some(p) = r.iter().position(|&x| x != 0) else { return false };
        let s = Gf::inv(r[p]).unwrap();
        let r: Vec<u8> = r.iter().map(|&x| Gf::mul(x, s)).collect();
        for row in self.rows.iter_mut() {
            let f = row[p];
            if f != 0 {
                for (x, y) in row.iter_mut().zip(&r) {
                    *x ^= Gf::mul(f, *y);
                }
            }
        }
        self.rows.push(r);
        self.pivots.push(p);
        true
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// Null space of the `rows × cols` system `a · x = 0`.
fn null_space(a: &[Vec<u8>], cols: usize) -> Vec<Vec<u8>> {
    let mut span = Span::default();
    for row in a {
        span.insert(row);
    }
    let pivots: BTreeSet<usize> = span.pivots.iter().copied().collect();
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut x = vec![0u8; cols];
        x[free] = 1;
        for (row, &p) in span.rows.iter().zip(&span.pivots) {
            // row is reduced: x_p = −row[free] = row[free] in char 2
            x[p] = row[free];
        }
        out.push(x);
    }
    out
}

/// `F[G]`-module given by generator matrices.
#[derive(Clone, Debug)]
pub struct HeartModule {
    pub field: Gf,
    pub generators: Vec<Mat>,
}

/// Coordinates of a sum-zero vector on `B` in the basis
/// `δ_0 + δ_j` (`j = 1..4`) of the quotient by constants.
fn heart_coords(v: &[u8; 6]) -> [u8; 4] {
    [v[1] ^ v[5], v[2] ^ v[5], v[3] ^ v[5], v[4] ^ v[5]]
}

pub fn perm_matrix_on_heart(s: &Perm) -> Mat {
    let mut m = Mat::zero(4);
    for j in 0..4 {
        let mut v = [0u8; 6];
        v[s[0] as usize] ^= 1;
        v[s[j + 1] as usize] ^= 1;
        let c = heart_coords(&v);
        for (i, &x) in c.iter().enumerate() {
            m.set(i, j, x);
        }
    }
    m
}

/// The heart of the 6-point permutation module, over `F_2` or its scalar
/// extension to `F_4`.
pub fn heart(group: &PermGroup, field: Gf) -> HeartModule {
    HeartModule { field, generators: group.generators().iter().map(perm_matrix_on_heart).collect() }
}

impl HeartModule {
    pub fn dim(&self) -> usize {
        self.generators[0].dim()
    }

    pub fn vectors(&self) -> Vec<Vec<u8>> {
        let q = self.field.order() as usize;
        let n = self.dim();
        (0..q.pow(n as u32))
            .map(|mut i| {
                (0..n)
                    .map(|_| {
                        let d = (i % q) as u8;
                        i /= q;
                        d
                    })
                    .collect()
            })
            .collect()
    }

    /// Basis of `End_G(V)` over the base field, from `X A = A X`.
    pub fn commutant(&self) -> Vec<Mat> {
        commutant_of(self.dim(), &self.generators)
    }

    /// The submodule spanned by the orbit of `v`.
    pub fn spin(&self, v: &[u8]) -> usize {
        let mut span = Span::default();
        let mut queue = vec![v.to_vec()];
        span.insert(v);
        while let Some(w) = queue.pop() {
            for g in &self.generators {
                let gw = g.apply(&w);
                if span.insert(&gw) {
                    queue.push(gw);
                }
            }
        }
        span.dim()
    }

    /// `Ok(())` when simple, otherwise a vector spanning a proper submodule.
    pub fn is_simple(&self) -> std::result::Result<(), Vec<u8>> {
        for v in self.vectors() {
            if v.iter().all(|&x| x == 0) {
                continue;
            }
            if self.spin(&v) < self.dim() {
                return Err(v);
            }
        }
        Ok(())
    }
}

fn commutant_of(n: usize, gens: &[Mat]) -> Vec<Mat> {
    let mut rows = Vec::new();
    for a in gens {
        // (X A − A X)_{ij} = Σ_k X_{ik} A_{kj} − A_{ik} X_{kj}
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![0u8; n * n];
                for k in 0..n {
                    row[i * n + k] ^= a.get(k, j);
                    row[k * n + j] ^= a.get(i, k);
                }
                rows.push(row);
            }
        }
    }
    null_space(&rows, n * n).into_iter().map(|e| Mat::from_entries(n, e)).collect()
}

/// All elements of the `field`-span of `basis`.
fn span_elements(basis: &[Mat], field: Gf) -> Vec<Mat> {
    let n = basis[0].dim();
    let q = field.order() as usize;
    let mut out = Vec::new();
    for mut i in 0..q.pow(basis.len() as u32) {
        let mut m = Mat::zero(n);
        for b in basis {
            m = m.add(&b.scale((i % q) as u8));
            i /= q;
        }
        out.push(m);
    }
    out
}

/// An `ω` in a 2-dimensional `F_2`-algebra with `ω^2 = ω + 1`.
pub fn find_omega(basis: &[Mat]) -> Option<Mat> {
    let id = Mat::identity(basis[0].dim());
    span_elements(basis, Gf::F2).into_iter().find(|w| w.mul(w) == w.add(&id))
}

/// A nontrivial idempotent of the algebra spanned by `basis`.
pub fn find_split_idempotent(basis: &[Mat], field: Gf) -> Option<Mat> {
    let n = basis[0].dim();
    let id = Mat::identity(n);
    span_elements(basis, field)
        .into_iter()
        .find(|e| !e.is_zero() && *e != id && e.mul(e) == *e)
}

// ---- F_2 census over 4×4 matrices, bit-packed ----

/// 4×4 matrix over `F_2`, entry `(r, c)` at bit `4r + c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitMat4(pub u16);

impl BitMat4 {
    pub const IDENTITY: BitMat4 = BitMat4(0b1000_0100_0010_0001);

    pub fn from_mat(m: &Mat) -> Self {
        let mut b = 0u16;
        for r in 0..4 {
            for c in 0..4 {
                if m.get(r, c) & 1 == 1 {
                    b |= 1 << (4 * r + c);
                }
            }
        }
        BitMat4(b)
    }

    fn row(self, r: usize) -> u16 {
        (self.0 >> (4 * r)) & 0xF
    }

    pub fn mul(self, o: BitMat4) -> BitMat4 {
        let mut out = 0u16;
        for r in 0..4 {
            let row = self.row(r);
            let mut acc = 0u16;
            for k in 0..4 {
                if row >> k & 1 == 1 {
                    acc ^= o.row(k);
                }
            }
            out |= acc << (4 * r);
        }
        BitMat4(out)
    }
}

/// XOR basis of a subspace of `F_2^16`, kept fully reduced so the basis
/// is canonical.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace16 {
    basis: Vec<u16>,
}

impl Subspace16 {
    fn reduce(&self, mut v: u16) -> u16 {
        for &b in &self.basis {
            let top = 15 - b.leading_zeros();
            if v >> top & 1 == 1 {
                v ^= b;
            }
        }
        v
    }

    pub fn insert(&mut self, v: u16) -> bool {
        let r = self.reduce(v);
        if r == 0 {
            return false;
        }
        let top = 15 - r.leading_zeros();
        for b in self.basis.iter_mut() {
            if *b >> top & 1 == 1 {
                *b ^= r;
            }
        }
        self.basis.push(r);
        self.basis.sort_unstable_by(|a, b| b.cmp(a));
        true
    }

    pub fn contains(&self, v: u16) -> bool {
        self.reduce(v) == 0
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[u16] {
        &self.basis
    }
}

/// Unital subalgebra generated by `gens`: span saturation under products.
pub fn algebra_closure(gens: impl IntoIterator<Item = BitMat4>) -> Subspace16 {
    let mut s = Subspace16::default();
    s.insert(BitMat4::IDENTITY.0);
    for g in gens {
        s.insert(g.0);
    }
    loop {
        let basis = s.basis.clone();
        let before = s.dim();
        for &a in &basis {
            for &b in &basis {
                s.insert(BitMat4(a).mul(BitMat4(b)).0);
            }
        }
        if s.dim() == before {
            return s;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SubalgebraClass {
    ScalarsF2,
    FieldF4,
    MatTwoOverF4,
    FullMatFour,
}

impl SubalgebraClass {
    pub fn dim(self) -> usize {
        match self {
            SubalgebraClass::ScalarsF2 => 1,
            SubalgebraClass::FieldF4 => 2,
            SubalgebraClass::MatTwoOverF4 => 8,
            SubalgebraClass::FullMatFour => 16,
        }
    }
}

/// The four reference algebras inside `Mat_4(F_2)`, built from the heart.
#[derive(Clone, Debug)]
pub struct ReferenceAlgebras {
    pub omega: BitMat4,
    pub scalars: Subspace16,
    pub commutant: Subspace16,
    pub centralizer_of_omega: Subspace16,
    pub full: Subspace16,
}

impl ReferenceAlgebras {
    pub fn new(m: &HeartModule) -> Result<Self> {
        let comm = m.commutant();
        let omega = find_omega(&comm).ok_or(Error::UnexpectedAlgebra(comm.len()))?;
        let omega = BitMat4::from_mat(&omega);
        let scalars = algebra_closure([]);
        let commutant = algebra_closure(comm.iter().map(BitMat4::from_mat));
        let mut centralizer_of_omega = Subspace16::default();
        let mut full = Subspace16::default();
        for u in 0..=u16::MAX {
            let b = BitMat4(u);
            if b.mul(omega) == omega.mul(b) {
                centralizer_of_omega.insert(u);
            }
            full.insert(u);
        }
        Ok(Self { omega, scalars, commutant, centralizer_of_omega, full })
    }

    pub fn classify(&self, a: &Subspace16) -> Result<SubalgebraClass> {
        let class = if *a == self.scalars {
            SubalgebraClass::ScalarsF2
        } else if *a == self.commutant {
            SubalgebraClass::FieldF4
        } else if *a == self.centralizer_of_omega {
            SubalgebraClass::MatTwoOverF4
        } else if *a == self.full {
            SubalgebraClass::FullMatFour
        } else {
            return Err(Error::UnexpectedAlgebra(a.dim()));
        };
        Ok(class)
    }

    /// `ω` lies in the algebra and commutes with all of it.
    pub fn center_contains_omega(&self, a: &Subspace16) -> bool {
        a.contains(self.omega.0)
            && a.basis().iter().all(|&b| BitMat4(b).mul(self.omega) == self.omega.mul(BitMat4(b)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    /// Generators `u ∈ Mat_4(F_2)` by class of the algebra generated by the
    /// `G`-conjugates of `u`.
    pub by_class: BTreeMap<SubalgebraClass, usize>,
    pub join_pairs_checked: usize,
    pub join_classes: BTreeSet<SubalgebraClass>,
    /// Classes whose center contains `ω`.
    pub with_omega_central: BTreeSet<SubalgebraClass>,
    pub note: String,
}

/// All 65536 singly-generated `G`-stable algebras, then joins of every
/// pair of distinct algebras found and of `random_pairs` random generator
/// pairs.
pub fn classify_g_stable_algebras(m: &HeartModule, random_pairs: usize, seed: u64) -> Result<Census> {
    let refs = ReferenceAlgebras::new(m)?;
    let group = build_psl25();
    let conj: Vec<(BitMat4, BitMat4)> = group
        .elements()
        .iter()
        .map(|g| {
            let gm = perm_matrix_on_heart(g);
            let gi = gm.inverse().expect("invertible");
            (BitMat4::from_mat(&gm), BitMat4::from_mat(&gi))
        })
        .collect();
    let orbit = |us: &[BitMat4]| -> Vec<BitMat4> {
        us.iter().flat_map(|&u| conj.iter().map(move |&(g, gi)| g.mul(u).mul(gi))).collect()
    };
    let mut by_class = BTreeMap::new();
    let mut found: BTreeMap<Subspace16, SubalgebraClass> = BTreeMap::new();
    for u in 0..=u16::MAX {
        let alg = algebra_closure(orbit(&[BitMat4(u)]));
        let class = refs.classify(&alg)?;
        *by_class.entry(class).or_insert(0) += 1;
        found.entry(alg).or_insert(class);
    }
    let algs: Vec<&Subspace16> = found.keys().collect();
    let mut join_classes = BTreeSet::new();
    let mut checked = 0;
    for (i, a) in algs.iter().enumerate() {
        for b in &algs[i + 1..] {
            let gens = a.basis().iter().chain(b.basis()).map(|&x| BitMat4(x));
            join_classes.insert(refs.classify(&algebra_closure(gens))?);
            checked += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..random_pairs {
        let (u, v) = (BitMat4(rng.gen()), BitMat4(rng.gen()));
        join_classes.insert(refs.classify(&algebra_closure(orbit(&[u, v])))?);
        checked += 1;
    }
    let with_omega_central = found
        .iter()
        .filter(|(alg, _)| refs.center_contains_omega(alg))
        .map(|(_, c)| *c)
        .collect();
    Ok(Census {
        by_class,
        join_pairs_checked: checked,
        join_classes,
        with_omega_central,
        note: "exhaustive over singly generated G-stable algebras; joins only for pairs of found \
               algebras and sampled generator pairs, the full subalgebra lattice is not enumerated"
            .into(),
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RepReport {
    pub group_order: usize,
    pub simple_group: bool,
    pub doubly_transitive: bool,
    pub faithful: bool,
    pub cycle_types: BTreeMap<String, usize>,
    pub heart_dim: usize,
    pub heart_size_f2: usize,
    pub point_set_model_matches: bool,
    pub simple_over_f2: bool,
    pub commutant_dim_f2: usize,
    pub omega_squared_is_omega_plus_one: bool,
    pub simple_over_f4: bool,
    pub f4_submodule_witness: Option<Vec<u8>>,
    pub commutant_dim_f4: usize,
    pub commutant_f4_splits: bool,
    pub absolutely_simple: bool,
    pub census: Census,
    pub passed: bool,
}

/// Even subsets of `B` modulo complement, against the 16 heart vectors.
fn point_set_model_matches() -> bool {
    let mut classes = BTreeSet::new();
    for mask in 0u8..64 {
        if mask.count_ones() % 2 == 1 {
            continue;
        }
        let v: [u8; 6] = std::array::from_fn(|i| mask >> i & 1);
        classes.insert(heart_coords(&v));
    }
    classes.len() == 16
}

/// Runs every check on the `F_2` and `F_4` hearts.
pub fn verify(random_pairs: usize, seed: u64) -> Result<RepReport> {
    let g = build_psl25();
    let m2 = heart(&g, Gf::F2);
    let m4 = heart(&g, Gf::F4);
    let mats: BTreeSet<Mat> = g.elements().iter().map(perm_matrix_on_heart).collect();
    let faithful = mats.len() == g.order();
    let comm2 = m2.commutant();
    let omega = find_omega(&comm2);
    let comm4 = m4.commutant();
    let simple4 = m4.is_simple();
    // F_4-structure on Q_B from ω: the module over G together with ω
    let mut with_omega = m2.clone();
    if let Some(w) = &omega {
        with_omega.generators.push(w.clone());
    }
    let absolutely_simple = omega.is_some()
        && with_omega.is_simple().is_ok()
        && with_omega.commutant().len() == 2;
    let census = classify_g_stable_algebras(&m2, random_pairs, seed)?;
    let cycle_types =
        g.cycle_type_census().into_iter().map(|(k, v)| (pattern_name(&k), v)).collect();
    let mut r = RepReport {
        group_order: g.order(),
        simple_group: g.is_simple_nonabelian(),
        doubly_transitive: g.pair_orbit_count() == 1,
        faithful,
        cycle_types,
        heart_dim: m2.dim(),
        heart_size_f2: m2.vectors().len(),
        point_set_model_matches: point_set_model_matches(),
        simple_over_f2: m2.is_simple().is_ok(),
        commutant_dim_f2: comm2.len(),
        omega_squared_is_omega_plus_one: omega.is_some(),
        simple_over_f4: simple4.is_ok(),
        f4_submodule_witness: simple4.err(),
        commutant_dim_f4: comm4.len(),
        commutant_f4_splits: find_split_idempotent(&comm4, Gf::F4).is_some(),
        absolutely_simple,
        census,
        passed: false,
    };
    let all_four: BTreeSet<SubalgebraClass> = [
        SubalgebraClass::ScalarsF2,
        SubalgebraClass::FieldF4,
        SubalgebraClass::MatTwoOverF4,
        SubalgebraClass::FullMatFour,
    ]
    .into();
    let realised: BTreeSet<SubalgebraClass> = r.census.by_class.keys().copied().collect();
    r.passed = r.group_order == 60
        && r.simple_group
        && r.doubly_transitive
        && r.faithful
        && r.heart_dim == 4
        && r.heart_size_f2 == 16
        && r.point_set_model_matches
        && r.simple_over_f2
        && r.commutant_dim_f2 == 2
        && r.omega_squared_is_omega_plus_one
        && !r.simple_over_f4
        && r.commutant_dim_f4 == 2
        && r.commutant_f4_splits
        && r.absolutely_simple
        && realised == all_four
        && r.census.join_classes.is_subset(&all_four)
        && r.census.with_omega_central
            == [SubalgebraClass::FieldF4, SubalgebraClass::MatTwoOverF4].into();
    Ok(r)
}
