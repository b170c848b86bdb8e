//! Permutations of the six points of `P^1(F_5)` and the groups they generate.
//!
//! Point `0` is `∞`; points `1..=5` are `0, 1, 2, 3, 4`.

use std::collections::{BTreeMap, HashSet, VecDeque};

pub type Perm = [u8; 6];

pub const IDENTITY: Perm = [0, 1, 2, 3, 4, 5];

/// `(a ∘ b)(i) = a(b(i))`.
pub fn compose(a: &Perm, b: &Perm) -> Perm {
    let mut out = [0; 6];
    for i in 0..6 {
        out[i] = a[b[i] as usize];
    }
    out
}

pub fn inverse(a: &Perm) -> Perm {
    let mut out = [0; 6];
    for i in 0..6 {
        out[a[i] as usize] = i as u8;
    }
    out
}

/// Cycle lengths, sorted descending, fixed points included.
pub fn cycle_type(a: &Perm) -> Vec<usize> {
    let mut seen = [false; 6];
    let mut out = Vec::new();
    for start in 0..6 {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = a[i] as usize;
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable_by(|x, y| y.cmp(x));
    out
}

pub fn is_even(a: &Perm) -> bool {
    cycle_type(a).iter().filter(|&&l| l % 2 == 0).count() % 2 == 0
}

/// `"5 1"`, `"2^2 1^2"`, `"1^6"`.
pub fn pattern_name(pattern: &[usize]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < pattern.len() {
        let mut j = i;
        while j < pattern.len() && pattern[j] == pattern[i] {
            j += 1;
        }
        let n = j - i;
        parts.push(if n == 1 { pattern[i].to_string() } else { format!("{}^{}", pattern[i], n) });
        i = j;
    }
    parts.join(" ")
}

/// Closure of `gens` under composition.
pub fn closure(gens: &[Perm]) -> Vec<Perm> {
    let mut seen: HashSet<Perm> = HashSet::from([IDENTITY]);
    let mut queue = VecDeque::from([IDENTITY]);
    let mut out = vec![IDENTITY];
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = compose(s, &g);
            if seen.insert(h) {
                out.push(h);
                queue.push_back(h);
            }
        }
    }
    out.sort_unstable();
    out
}

fn all_perms() -> Vec<Perm> {
    fn rec(prefix: &mut Vec<u8>, used: &mut [bool; 6], out: &mut Vec<Perm>) {
        if prefix.len() == 6 {
            out.push(prefix.as_slice().try_into().unwrap());
            return;
        }
        for v in 0..6u8 {
            if !used[v as usize] {
                used[v as usize] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v as usize] = false;
            }
        }
    }
    let mut out = Vec::with_capacity(720);
    rec(&mut Vec::new(), &mut [false; 6], &mut out);
    out
}

pub fn alternating_group() -> Vec<Perm> {
    all_perms().into_iter().filter(is_even).collect()
}

/// `z ↦ z + 1` on `P^1(F_5)`.
pub fn translation() -> Perm {
    [0, 2, 3, 4, 5, 1]
}

/// `z ↦ −1/z` on `P^1(F_5)`.
pub fn inversion() -> Perm {
    let mut out = [0u8; 6];
    out[0] = 1;
    out[1] = 0;
    for z in 1..5u64 {
        let inv = (1..5).find(|w| (z * w) % 5 == 1).unwrap();
        out[z as usize + 1] = ((5 - inv) % 5) as u8 + 1;
    }
    out
}

/// A finite permutation group on the six points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    generators: Vec<Perm>,
    elements: Vec<Perm>,
}

impl PermGroup {
    pub fn generated_by(generators: Vec<Perm>) -> Self {
        let elements = closure(&generators);
        Self { generators, elements }
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    /// Number of elements of each cycle type.
    pub fn cycle_type_census(&self) -> BTreeMap<Vec<usize>, usize> {
        let mut out = BTreeMap::new();
        for g in &self.elements {
            *out.entry(cycle_type(g)).or_insert(0) += 1;
        }
        out
    }

    pub fn is_closed(&self) -> bool {
        self.elements
            .iter()
            .all(|a| self.elements.iter().all(|b| self.contains(&compose(a, b))))
    }

    /// Orbits on ordered pairs of distinct points.
    pub fn pair_orbit_count(&self) -> usize {
        let mut seen = HashSet::new();
        let mut orbits = 0;
        for i in 0..6u8 {
            for j in 0..6u8 {
                if i == j || seen.contains(&(i, j)) {
                    continue;
                }
                orbits += 1;
                for g in &self.elements {
                    seen.insert((g[i as usize], g[j as usize]));
                }
            }
        }
        orbits
    }

    pub fn is_transitive(&self) -> bool {
        let orbit: HashSet<u8> = self.elements.iter().map(|g| g[0]).collect();
        orbit.len() == 6
    }

    /// Normal closure of a single element.
    pub fn normal_closure(&self, g: &Perm) -> Vec<Perm> {
        let conj: Vec<Perm> =
            self.elements.iter().map(|h| compose(&compose(h, g), &inverse(h))).collect();
        closure(&conj)
    }

    /// Simple and non-abelian: every non-identity element has normal
    /// closure equal to the whole group (any nontrivial normal subgroup
    /// contains such a closure).
    pub fn is_simple_nonabelian(&self) -> bool {
        let abelian = self
            .elements
            .iter()
            .all(|a| self.elements.iter().all(|b| compose(a, b) == compose(b, a)));
        !abelian
            && self
                .elements
                .iter()
                .filter(|g| **g != IDENTITY)
                .all(|g| self.normal_closure(g).len() == self.order())
    }
}

/// `PSL_2(F_5)` acting on `P^1(F_5)`.
pub fn build_psl25() -> PermGroup {
    PermGroup::generated_by(vec![translation(), inversion()])
}
