//! Table fixtures, table reproduction, the parameter scanner and the
//! end-to-end consistency pipeline.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::brumer::{brumer_f9_family, brumer_from_exprs, integer_coefficients, AnyCurve};
use crate::cartier::{char3_brumer_obstruction, char3_criterion, classify, CartierManinReport, Verdict};
use crate::error::{Error, Result};
use crate::ffield::{distinct_degree_pattern, is_squarefree, FiniteField, Poly, PolyRing, PrimeField, Ring};
use crate::galois::{a5_and_complement, certify, integer_discriminant, is_perfect_square, CertVerdict, GaloisCertificate, DEFAULT_SEED};
use crate::perm::pattern_name;
use crate::quadorder::{splitting_type, SplittingType};

pub const FIXTURES_CSV: &str = include_str!("../fixtures/tables.csv");

/// Sample count for Galois certificates in table reproduction.
pub const TABLE_SAMPLES: usize = 200;
/// Largest residual accepted for a Table 1 certificate.
pub const TABLE1_RESIDUAL: f64 = 1e-20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureRow {
    pub table_id: u8,
    pub b: String,
    pub c: String,
    pub d: String,
    /// 0 for Table 1 (over `Q`).
    pub p: u64,
    pub expected_poly: String,
    /// `Supersingular` or `NotSupersingular`; empty for Table 1.
    pub expected_class: String,
    /// Splitting-field discriminant, Table 1 only.
    pub disc: String,
}

pub fn parse_fixtures(csv_text: &str) -> Result<Vec<FixtureRow>> {
    let mut rdr = csv::Reader::from_reader(csv_text.as_bytes());
    let rows = rdr.deserialize().collect::<std::result::Result<Vec<FixtureRow>, _>>()?;
    Ok(rows)
}

pub fn load_fixtures() -> Result<Vec<FixtureRow>> {
    parse_fixtures(FIXTURES_CSV)
}

pub fn load_fixtures_from(path: &Path) -> Result<Vec<FixtureRow>> {
    parse_fixtures(&std::fs::read_to_string(path)?)
}

fn parse_verdict(s: &str) -> Option<Verdict> {
    match s {
        "Supersingular" => Some(Verdict::Supersingular),
        "NotSupersingular" => Some(Verdict::NotSupersingular),
        _ => None,
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CertificateSummary {
    pub verdict: CertVerdict,
    pub samples: usize,
    pub residual: f64,
    pub reason: String,
}

impl From<&GaloisCertificate> for CertificateSummary {
    fn from(c: &GaloisCertificate) -> Self {
        Self { verdict: c.verdict, samples: c.samples, residual: c.residual, reason: c.reason.clone() }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RowReport {
    pub table: u8,
    pub row: usize,
    pub b: String,
    pub c: String,
    pub d: String,
    pub p: u64,
    pub poly: String,
    pub expected_poly: String,
    pub poly_match: bool,
    pub expected_class: Option<Verdict>,
    pub class: Option<Verdict>,
    pub class_match: bool,
    /// Table 1: `disc(f)` is a nonzero square in `Z`.
    pub disc_square: Option<bool>,
    pub certificate: Option<CertificateSummary>,
    pub certificate_ok: bool,
    pub passed: bool,
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GcdReport {
    pub values: usize,
    pub pairs_checked: usize,
    /// `(i, j, gcd)` for every off-diagonal pair with `gcd > 1`.
    pub non_coprime: Vec<(usize, usize, String)>,
    pub self_pairs_not_coprime: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableReport {
    pub table: u8,
    pub rows: Vec<RowReport>,
    pub gcd: Option<GcdReport>,
    pub passed: bool,
    pub note: Option<String>,
}

#[derive(Clone, Copy, Debug)]
pub struct TableOptions {
    pub samples: usize,
    pub seed: u64,
    pub certify: bool,
}

impl Default for TableOptions {
    fn default() -> Self {
        Self { samples: TABLE_SAMPLES, seed: DEFAULT_SEED, certify: true }
    }
}

fn check_row(idx: usize, row: &FixtureRow, opts: &TableOptions) -> RowReport {
    let mut rep = RowReport {
        table: row.table_id,
        row: idx,
        b: row.b.clone(),
        c: row.c.clone(),
        d: row.d.clone(),
        p: row.p,
        poly: String::new(),
        expected_poly: row.expected_poly.clone(),
        poly_match: false,
        expected_class: parse_verdict(&row.expected_class),
        class: None,
        class_match: row.p == 0,
        disc_square: None,
        certificate: None,
        certificate_ok: !opts.certify,
        passed: false,
        error: None,
    };
    if let Err(e) = fill_row(row, opts, &mut rep) {
        rep.error = Some(e.to_string());
    }
    rep.passed = rep.error.is_none()
        && rep.poly_match
        && rep.class_match
        && rep.disc_square != Some(false)
        && rep.certificate_ok;
    rep
}

fn fill_row(row: &FixtureRow, opts: &TableOptions, rep: &mut RowReport) -> Result<()> {
    let over_q = brumer_from_exprs(&row.b, &row.c, &row.d, 0, true)?;
    let curve = if row.p == 0 { over_q } else { over_q.reduce_mod_p(row.p, true)? };
    rep.poly = curve.render();
    let expected = AnyCurve::parse_inline(&row.expected_poly, row.p, 1, true)?;
    rep.poly_match = expected.render() == rep.poly;
    if !curve.is_separable() {
        return Err(Error::NonSeparable);
    }
    if row.p == 0 {
        let AnyCurve::Q(c) = &curve else {
            return Err(Error::Unsupported("Table 1 rows must have constant parameters".into()));
        };
        let coeffs = integer_coefficients(c).ok_or_else(|| Error::Unsupported("non-integral row".into()))?;
        let disc = integer_discriminant(&coeffs);
        rep.disc_square = Some(disc != BigInt::from(0) && is_perfect_square(&disc));
    } else {
        let class = classify(&curve, row.p)?.verdict;
        rep.class = Some(class);
        rep.class_match = rep.expected_class == Some(class);
    }
    if opts.certify {
        let cert = certify(&curve, opts.samples, opts.seed, row.p != 0)?;
        rep.certificate_ok = cert.is_certified() && (row.p != 0 || cert.residual < TABLE1_RESIDUAL);
        rep.certificate = Some(CertificateSummary::from(&cert));
    }
    Ok(())
}

/// Pairwise gcds of a list of integers.
pub fn nonisogeny_gcd_check(values: &[BigInt]) -> GcdReport {
    let mut non_coprime = Vec::new();
    let mut pairs = 0;
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            pairs += 1;
            let g = values[i].gcd(&values[j]);
            if !g.is_one() {
                non_coprime.push((i, j, g.to_string()));
            }
        }
    }
    GcdReport {
        values: values.len(),
        pairs_checked: pairs,
        non_coprime,
        self_pairs_not_coprime: values.iter().all(|x| !x.gcd(x).is_one() || x.is_one()),
    }
}

pub fn reproduce_rows(rows: &[FixtureRow], table: u8, opts: &TableOptions) -> Result<TableReport> {
    let selected: Vec<(usize, &FixtureRow)> =
        rows.iter().filter(|r| r.table_id == table).enumerate().collect();
    if selected.is_empty() {
        return Err(Error::FixtureMismatch { table, detail: "no rows for this table".into() });
    }
    let reports: Vec<RowReport> =
        selected.par_iter().map(|(i, r)| check_row(*i, r, opts)).collect();
    let gcd = if table == 1 {
        let values = selected
            .iter()
            .map(|(_, r)| {
                r.disc.parse::<BigInt>().map_err(|e| Error::FixtureMismatch {
                    table,
                    detail: format!("bad discriminant {:?}: {e}", r.disc),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Some(nonisogeny_gcd_check(&values))
    } else {
        None
    };
    let passed = reports.iter().all(|r| r.passed)
        && gcd.as_ref().is_none_or(|g| g.non_coprime.is_empty() && g.self_pairs_not_coprime);
    let note = (table == 2).then(|| {
        "hypotheses and non-supersingularity are checked; the endomorphism ring itself is not \
         recomputed"
            .to_string()
    });
    Ok(TableReport { table, rows: reports, gcd, passed, note })
}

pub fn reproduce_table(table: u8, opts: &TableOptions) -> Result<TableReport> {
    reproduce_rows(&load_fixtures()?, table, opts)
}

/// First failing row of a report as an error.
pub fn first_mismatch(rep: &TableReport) -> Result<()> {
    if let Some(r) = rep.rows.iter().find(|r| !r.passed) {
        return Err(Error::FixtureMismatch {
            table: rep.table,
            detail: format!(
                "row {} (b,c,d) = ({}, {}, {}): got {:?}, expected {:?}, class {:?} vs {:?}, cert {:?}, error {:?}",
                r.row, r.b, r.c, r.d, r.poly, r.expected_poly, r.class, r.expected_class,
                r.certificate.as_ref().map(|c| c.verdict), r.error
            ),
        });
    }
    if let Some(g) = &rep.gcd {
        if let Some((i, j, v)) = g.non_coprime.first() {
            return Err(Error::FixtureMismatch {
                table: rep.table,
                detail: format!("discriminants {i} and {j} share the factor {v}"),
            });
        }
    }
    Ok(())
}

// ---- scanning ----

/// Parameter values for `b`, `c`, `d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GridSpec {
    /// All constants of `F_p`.
    Constant,
    /// All `αT + β` with `α, β ∈ F_p`.
    Linear,
    /// All polynomials in `T` of degree at most `n` over `F_p`.
    Degree(usize),
}

impl std::str::FromStr for GridSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "const" | "constant" => Ok(GridSpec::Constant),
            "linear" => Ok(GridSpec::Linear),
            _ => s
                .strip_prefix("deg")
                .and_then(|n| n.trim_start_matches(':').parse().ok())
                .map(GridSpec::Degree)
                .ok_or_else(|| Error::Parse(format!("unknown grid {s:?}; use const, linear or deg:N"))),
        }
    }
}

impl GridSpec {
    fn t_degree(&self) -> usize {
        match self {
            GridSpec::Constant => 0,
            GridSpec::Linear => 1,
            GridSpec::Degree(n) => *n,
        }
    }

    /// Values in lexicographic order of their coefficient vectors
    /// (leading coefficient first).
    pub fn values(&self, p: u64) -> Vec<String> {
        let f = PrimeField::new(p).expect("odd prime");
        let ring = PolyRing::new(f, "T");
        let n = self.t_degree() + 1;
        let count = p.pow(n as u32);
        (0..count)
            .map(|mut i| {
                let mut c = vec![0u64; n];
                for k in (0..n).rev() {
                    c[k] = f.element(i % p);
                    i /= p;
                }
                c.reverse();
                ring.render(&ring.from_coeffs(c))
            })
            .collect()
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScanJob {
    pub p: u64,
    pub grid: GridSpec,
    pub require_separable: bool,
    pub require_a5_certificate: bool,
    pub classify_supersingular: bool,
    /// Keep only supersingular curves in the output.
    pub only_supersingular: bool,
    /// Random subset of the grid of this size, drawn with `seed`.
    pub sample: Option<usize>,
    pub samples_per_certificate: usize,
    pub seed: u64,
}

impl ScanJob {
    pub fn new(p: u64, grid: GridSpec) -> Self {
        Self {
            p,
            grid,
            require_separable: true,
            require_a5_certificate: false,
            classify_supersingular: true,
            only_supersingular: false,
            sample: None,
            samples_per_certificate: TABLE_SAMPLES,
            seed: DEFAULT_SEED,
        }
    }

    /// Positions in the `m^3` grid: all of them, or the seeded subsample,
    /// in increasing order.
    fn indices(&self, m: usize) -> Vec<usize> {
        let total = m * m * m;
        match self.sample {
            Some(n) if n < total => {
                let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
                let mut chosen = rand::seq::index::sample(&mut rng, total, n).into_vec();
                chosen.sort_unstable();
                chosen
            }
            _ => (0..total).collect(),
        }
    }

    /// Grid triples in lexicographic order, or the seeded subsample of
    /// them, still in lexicographic order.
    pub fn triples(&self) -> Vec<[String; 3]> {
        let vals = self.grid.values(self.p);
        self.indices(vals.len()).into_iter().map(|i| triple_at(&vals, i)).collect()
    }
}

fn triple_at(vals: &[String], i: usize) -> [String; 3] {
    let m = vals.len();
    [vals[i / (m * m)].clone(), vals[(i / m) % m].clone(), vals[i % m].clone()]
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScanHit {
    pub b: String,
    pub c: String,
    pub d: String,
    pub poly: String,
    pub separable: bool,
    pub cartier: Option<CartierManinReport>,
    pub verdict: Option<Verdict>,
    pub certificate: Option<CertificateSummary>,
    pub splitting: Option<SplittingType>,
    pub red_flag: bool,
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScanSummary {
    pub p: u64,
    pub grid: GridSpec,
    pub triples: usize,
    pub separable: usize,
    pub supersingular: usize,
    pub supersingular_certified: usize,
    pub certified: usize,
    pub red_flags: usize,
    pub errors: usize,
    pub emitted: usize,
}

/// The hit and whether it passes the output filters.
fn scan_one(job: &ScanJob, t: &[String; 3], split: Option<SplittingType>) -> (ScanHit, bool) {
    let mut hit = ScanHit {
        b: t[0].clone(),
        c: t[1].clone(),
        d: t[2].clone(),
        poly: String::new(),
        separable: false,
        cartier: None,
        verdict: None,
        certificate: None,
        splitting: split,
        red_flag: false,
        error: None,
    };
    let curve = match brumer_from_exprs(&t[0], &t[1], &t[2], job.p, true) {
        Ok(c) => c,
        Err(e) => {
            hit.error = Some(e.to_string());
            return (hit, true);
        }
    };
    hit.poly = curve.render();
    hit.separable = curve.is_separable();
    if !hit.separable {
        let keep = !job.require_separable && !job.only_supersingular && !job.require_a5_certificate;
        return (hit, keep);
    }
    if job.classify_supersingular || job.only_supersingular {
        match classify(&curve, job.p) {
            Ok(r) => {
                hit.verdict = Some(r.verdict);
                hit.cartier = Some(r);
            }
            Err(e) => hit.error = Some(e.to_string()),
        }
    }
    let ss = hit.verdict == Some(Verdict::Supersingular);
    // certificates are needed for the filter and for the red-flag check on
    // supersingular curves; constant curves have cyclic Galois group
    let has_t = matches!(curve, AnyCurve::FpT(_));
    if has_t && (job.require_a5_certificate || ss) {
        match certify(&curve, job.samples_per_certificate, job.seed, true) {
            Ok(c) => hit.certificate = Some(CertificateSummary::from(&c)),
            Err(e) => hit.error = Some(e.to_string()),
        }
    }
    let certified = hit.certificate.as_ref().is_some_and(|c| c.verdict == CertVerdict::CertifiedA5);
    hit.red_flag = ss && certified && split == Some(SplittingType::Split);
    let keep = (!job.only_supersingular || ss) && (!job.require_a5_certificate || certified);
    (hit, keep)
}

/// Runs the scan, returning hits in grid order and a summary.
pub fn scan(job: &ScanJob) -> Result<(Vec<ScanHit>, ScanSummary)> {
    PrimeField::new(job.p)?;
    let split = splitting_type(job.p, 5).ok();
    let vals = job.grid.values(job.p);
    let idx = job.indices(vals.len());
    let mut summary = ScanSummary {
        p: job.p,
        grid: job.grid.clone(),
        triples: idx.len(),
        separable: 0,
        supersingular: 0,
        supersingular_certified: 0,
        certified: 0,
        red_flags: 0,
        errors: 0,
        emitted: 0,
    };
    let mut hits = Vec::new();
    // chunked so that only emitted hits are kept in memory
    for chunk in idx.chunks(4096) {
        let part: Vec<(ScanHit, bool)> = chunk
            .par_iter()
            .map(|&i| scan_one(job, &triple_at(&vals, i), split))
            .collect();
        for (h, keep) in part {
            let cert = h.certificate.as_ref().is_some_and(|c| c.verdict == CertVerdict::CertifiedA5);
            let ss = h.verdict == Some(Verdict::Supersingular);
            summary.separable += h.separable as usize;
            summary.supersingular += ss as usize;
            summary.supersingular_certified += (ss && cert) as usize;
            summary.certified += cert as usize;
            summary.red_flags += h.red_flag as usize;
            summary.errors += h.error.is_some() as usize;
            if keep {
                hits.push(h);
            }
        }
    }
    summary.emitted = hits.len();
    Ok((hits, summary))
}

// ---- consistency pipeline ----

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PipelineReport {
    pub curve: String,
    pub domain: String,
    pub p: u64,
    pub d: u64,
    pub separable: bool,
    pub certificate: Option<CertificateSummary>,
    pub verdict: Option<Verdict>,
    pub splitting: Option<SplittingType>,
    /// `i` (not supersingular), `ii` (supersingular, p does not split) or
    /// `char0`.
    pub outcome: String,
    pub consistent: bool,
    pub red_flag: bool,
    pub notes: Vec<String>,
}

pub fn mainthm_pipeline(curve: &AnyCurve, d: u64, seed: u64) -> Result<PipelineReport> {
    let p = curve.characteristic();
    let mut rep = PipelineReport {
        curve: curve.render(),
        domain: curve.domain().to_string(),
        p,
        d,
        separable: curve.is_separable(),
        certificate: None,
        verdict: None,
        splitting: None,
        outcome: String::new(),
        consistent: true,
        red_flag: false,
        notes: Vec::new(),
    };
    if !rep.separable {
        rep.consistent = false;
        rep.notes.push("curve is not separable".into());
        return Ok(rep);
    }
    match certify(curve, TABLE_SAMPLES, seed, true) {
        Ok(c) => rep.certificate = Some(CertificateSummary::from(&c)),
        Err(e) => rep.notes.push(format!("no Galois certificate: {e}")),
    }
    let certified = rep.certificate.as_ref().is_some_and(|c| c.verdict == CertVerdict::CertifiedA5);
    if !certified {
        rep.notes.push("A5 not certified; the supersingular/split exclusion does not apply".into());
    }
    if p == 0 {
        rep.outcome = "char0".into();
        return Ok(rep);
    }
    let verdict = classify(curve, p)?.verdict;
    rep.verdict = Some(verdict);
    rep.splitting = Some(splitting_type(p, d)?);
    match verdict {
        Verdict::NotSupersingular => rep.outcome = "i".into(),
        Verdict::Supersingular => {
            rep.outcome = "ii".into();
            if rep.splitting == Some(SplittingType::Split) {
                if certified {
                    rep.red_flag = true;
                    rep.consistent = false;
                    rep.notes.push(format!("supersingular with {p} split in Q(sqrt {d})"));
                } else {
                    rep.notes.push("supersingular and split, but A5 is not certified".into());
                }
            }
        }
    }
    Ok(rep)
}

// ---- search over F_9(T) ----

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct F9Hit {
    pub eps: String,
    pub c: String,
    pub b: String,
    pub poly: String,
    pub verdict: Verdict,
    /// Factorization patterns of `f_t` at the nine points `t ∈ F_9`.
    pub patterns: BTreeMap<String, usize>,
    /// Some pattern at those points lies outside `A5`.
    pub outside_a5: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct F9SearchReport {
    pub candidates: usize,
    pub inexact: usize,
    pub singular: usize,
    pub constant: usize,
    pub hits: Vec<F9Hit>,
    pub note: String,
}

/// Runs the `F_9(T)` family over every `C` of `T`-degree at most `c_deg`
/// and every nonzero `B` of degree at most `b_deg`, for both valid `ε`.
/// Non-constant separable members are reported with their patterns at
/// the rational points; no Galois certificate is attempted over `F_9(T)`.
pub fn f9_search(c_deg: usize, b_deg: usize) -> Result<F9SearchReport> {
    let (f9, epsilons) = char3_brumer_obstruction(9)?;
    let ring = PolyRing::new(f9.clone(), "T");
    let xring = PolyRing::new(f9.clone(), "x");
    let polys = |deg: usize| -> Vec<Poly<Vec<u64>>> {
        let n = 9u64.pow(deg as u32 + 1);
        (0..n)
            .map(|mut i| {
                let mut c = Vec::with_capacity(deg + 1);
                for _ in 0..=deg {
                    c.push(f9.element(i % 9));
                    i /= 9;
                }
                ring.from_coeffs(c)
            })
            .collect()
    };
    let (a5, _) = a5_and_complement();
    let mut rep = F9SearchReport {
        candidates: 0,
        inexact: 0,
        singular: 0,
        constant: 0,
        hits: Vec::new(),
        note: "all separable members are supersingular by construction; Galois groups over F_9(T) \
               are not certified, only patterns at the nine rational points are listed"
            .into(),
    };
    let bs: Vec<_> = polys(b_deg).into_iter().filter(|b| !b.is_zero()).collect();
    for eps in &epsilons {
        for c in polys(c_deg) {
            for b in &bs {
                rep.candidates += 1;
                let curve = match brumer_f9_family(&ring, &c, b, eps, true) {
                    Ok(curve) => curve,
                    Err(Error::InexactDivision(_)) => {
                        rep.inexact += 1;
                        continue;
                    }
                    Err(e) => return Err(e),
                };
                if !curve.is_separable() {
                    rep.singular += 1;
                    continue;
                }
                if (0..=6).all(|i| curve.a(i).degree().is_none_or(|d| d == 0)) {
                    rep.constant += 1;
                    continue;
                }
                let verdict = char3_criterion(&curve)?;
                let mut patterns = BTreeMap::new();
                let mut outside = false;
                for i in 0..9 {
                    let t = f9.element(i);
                    let ft = xring.from_coeffs((0..=6).map(|k| ring.eval(&curve.a(k), &t)).collect());
                    if !is_squarefree(&xring, &ft) {
                        continue;
                    }
                    let pat = distinct_degree_pattern(&xring, &ft)?;
                    outside |= !a5.contains(&pat);
                    *patterns.entry(pattern_name(&pat)).or_insert(0) += 1;
                }
                rep.hits.push(F9Hit {
                    eps: f9.render(eps),
                    c: ring.render(&c),
                    b: ring.render(b),
                    poly: curve.render(),
                    verdict,
                    patterns,
                    outside_a5: outside,
                });
            }
        }
    }
    Ok(rep)
}

/// Distinct polynomials among the fixture rows of `table`, as rendered
/// strings.
pub fn fixture_polys(rows: &[FixtureRow], table: u8) -> Result<BTreeSet<String>> {
    rows.iter()
        .filter(|r| r.table_id == table)
        .map(|r| Ok(AnyCurve::parse_inline(&r.expected_poly, r.p, 1, true)?.render()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_counts() {
        let rows = load_fixtures().unwrap();
        let count = |t| rows.iter().filter(|r| r.table_id == t).count();
        assert!(count(1) >= 80);
        assert_eq!([count(2), count(3), count(4), count(5), count(6)], [10, 22, 24, 12, 8]);
    }

    #[test]
    fn gcd_examples() {
        let a = BigInt::from(1061u64 * 1061);
        let b = BigInt::from(2293u64 * 2293);
        let r = nonisogeny_gcd_check(&[a.clone(), b]);
        assert!(r.non_coprime.is_empty());
        let r = nonisogeny_gcd_check(&[a.clone(), a]);
        assert_eq!(r.non_coprime.len(), 1);
    }

    #[test]
    fn grid_values() {
        assert_eq!(GridSpec::Constant.values(3), vec!["0", "1", "2"]);
        let lin = GridSpec::Linear.values(3);
        assert_eq!(lin.len(), 9);
        assert_eq!(lin[4], "T + 1");
        assert_eq!("deg:2".parse::<GridSpec>().unwrap(), GridSpec::Degree(2));
        assert!("quadratic".parse::<GridSpec>().is_err());
    }

    #[test]
    fn scan_is_deterministic() {
        let mut job = ScanJob::new(5, GridSpec::Linear);
        job.sample = Some(40);
        let (a, sa) = scan(&job).unwrap();
        let (b, _) = scan(&job).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
        assert_eq!(sa.triples, 40);
    }

    #[test]
    fn f9_constant_b() {
        let r = f9_search(1, 0).unwrap();
        assert_eq!(r.candidates, 2 * 81 * 8);
        assert!(r.hits.iter().all(|h| h.verdict == Verdict::Supersingular));
        assert!(!r.hits.is_empty());
    }

    #[test]
    fn pipeline_examples() {
        let c = AnyCurve::parse_inline("x^6 + 2x^5 + (T + 1)x^3 + 3x + 1", 5, 1, false).unwrap();
        let r = mainthm_pipeline(&c, 5, DEFAULT_SEED).unwrap();
        assert_eq!(r.outcome, "ii");
        assert_eq!(r.splitting, Some(SplittingType::Ramified));
        assert!(r.consistent && !r.red_flag);
        let c = brumer_from_exprs("0", "1", "T", 3, false).unwrap();
        let r = mainthm_pipeline(&c, 5, DEFAULT_SEED).unwrap();
        assert_eq!(r.outcome, "i");
        assert_eq!(r.splitting, Some(SplittingType::Inert));
    }
}
