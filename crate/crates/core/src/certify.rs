//! Monogenicity certificates for `T^4 - 6T^2 - alpha T - 3`, the Galois
//! and unit checks for that family, and surveys of related families.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::arith::{self, int_to_json, Budget, Factorization};
use crate::elliptic::tate_curve;
use crate::error::{Error, Result};
use crate::newton::{dedekind_p_maximal, index_report, IndexReport};
use crate::poly::resultant::{discriminant, resultant};
use crate::poly::{count_real_roots, rational_roots};
use crate::reduction::{reduction_table_within, KodairaType};
use crate::valuation::{singular_t, SingularCase};
use crate::{Int, PolyInt};

pub const CERTIFICATE_VERSION: u32 = 1;

fn z(n: i64) -> Int {
    BigInt::from(n)
}

/// `T^4 - 6T^2 - alpha T - 3`.
pub fn fueter_cubic_poly(alpha: &Int) -> PolyInt {
    PolyInt::new(vec![z(-3), -alpha.clone(), z(-6), z(0), z(1)])
}

/// `-27 (alpha - 8)^2 (alpha + 8)^2`.
pub fn predicted_disc(alpha: &Int) -> Int {
    let m = alpha - z(8);
    let p = alpha + z(8);
    z(-27) * &m * &m * &p * &p
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Monogenic,
    NotCertified,
    HypothesisFailed,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Monogenic => "monogenic",
            Verdict::NotCertified => "not_certified",
            Verdict::HypothesisFailed => "hypothesis_failed",
        })
    }
}

/// Data for one repeated factor `phi` at a prime.
#[derive(Debug, Clone, PartialEq)]
pub struct FactorEvidence {
    pub lift: PolyInt,
    pub exponent: u32,
    /// `v_p` of the constant term of the `phi`-development.
    pub a0_val: Option<u32>,
    pub polygon: Value,
    pub ind_phi: u64,
    pub regular: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PrimeEvidence {
    pub p: Int,
    pub factors: Vec<FactorEvidence>,
    pub ind_p: u64,
    pub exact: bool,
    pub dedekind: bool,
}

impl PrimeEvidence {
    fn from_report(report: &IndexReport, dedekind: bool) -> Self {
        let factors = report
            .per_phi
            .iter()
            .map(|r| FactorEvidence {
                lift: r.phi.clone(),
                exponent: r.exponent,
                a0_val: r.development.terms.first().and_then(|a| a.min_valuation(&report.p)),
                polygon: r.polygon.to_json(r.phi.degree().unwrap_or(0)),
                ind_phi: r.ind_phi,
                regular: r.regular,
            })
            .collect();
        PrimeEvidence {
            p: report.p.clone(),
            factors,
            ind_p: report.ind_p_lower_bound,
            exact: report.exact,
            dedekind,
        }
    }

    /// Dedekind's criterion and the polygon index agree.
    pub fn dedekind_agrees(&self) -> bool {
        !self.exact || self.dedekind == (self.ind_p == 0)
    }

    pub fn to_json(&self) -> Value {
        let first = self.factors.first();
        let more: Vec<Value> = self.factors.iter().skip(1).map(factor_json).collect();
        json!({
            "p": int_to_json(&self.p),
            "lift": first.map(|f| f.lift.to_string()),
            "a0_val": first.and_then(|f| f.a0_val),
            "polygon": first.map(|f| f.polygon.clone()),
            "ind_p": self.ind_p,
            "exact": self.exact,
            "dedekind": self.dedekind,
            "more_factors": more,
        })
    }
}

fn factor_json(f: &FactorEvidence) -> Value {
    json!({
        "lift": f.lift.to_string(),
        "exponent": f.exponent,
        "a0_val": f.a0_val,
        "polygon": f.polygon,
    })
}

/// Kodaira types of the curve with `beta = 1`, recorded alongside the
/// arithmetic evidence.
#[derive(Debug, Clone, PartialEq)]
pub struct Corroboration {
    pub types: Vec<(Int, KodairaType)>,
    /// Every type is `I_1` or `I*_1`.
    pub consistent: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MonogenicityCertificate {
    pub alpha: Int,
    pub method: &'static str,
    pub hypothesis_ok: bool,
    pub poly_disc: Int,
    /// Known when the index is determined at every prime.
    pub field_disc: Option<Int>,
    pub prime_evidence: Vec<PrimeEvidence>,
    pub verdict: Verdict,
    pub reason: Option<String>,
    pub trust: Vec<String>,
    pub corroboration: Option<Corroboration>,
}

impl MonogenicityCertificate {
    fn failed(alpha: &Int, method: &'static str, verdict: Verdict, reason: String) -> Self {
        MonogenicityCertificate {
            alpha: alpha.clone(),
            method,
            hypothesis_ok: verdict != Verdict::HypothesisFailed,
            poly_disc: predicted_disc(alpha),
            field_disc: None,
            prime_evidence: Vec::new(),
            verdict,
            reason: Some(reason),
            trust: Vec::new(),
            corroboration: None,
        }
    }

    pub fn to_json(&self) -> Value {
        let corroboration = self.corroboration.as_ref().map(|c| {
            json!({
                "types": c.types.iter().map(|(p, k)| json!({"p": int_to_json(p), "kodaira": k.to_string()})).collect::<Vec<_>>(),
                "consistent": c.consistent,
            })
        });
        json!({
            "version": CERTIFICATE_VERSION,
            "alpha": int_to_json(&self.alpha),
            "method": self.method,
            "hypothesis_ok": self.hypothesis_ok,
            "verdict": self.verdict.to_string(),
            "reason": self.reason,
            "poly_disc": self.poly_disc.to_string(),
            "field_disc": self.field_disc.as_ref().map(|d| d.to_string()),
            "primes": self.prime_evidence.iter().map(PrimeEvidence::to_json).collect::<Vec<_>>(),
            "trust": self.trust,
            "corroboration": corroboration,
        })
    }
}

fn trust_notes(f: &Factorization) -> Vec<String> {
    f.probable
        .iter()
        .map(|q| format!("{q} is a strong probable prime, not proven prime"))
        .collect()
}

fn divisors_signed(n: &Int) -> Result<Vec<Int>> {
    let pos = arith::divisors(&n.abs())?;
    Ok(pos.iter().flat_map(|d| [d.clone(), -d.clone()]).collect())
}

/// Integer `a` with `a^2 - s a + q = 0`, if any.
fn integer_quadratic_roots(s: &Int, q: &Int) -> Vec<Int> {
    let d = s * s - z(4) * q;
    if d.is_negative() {
        return Vec::new();
    }
    let r = d.sqrt();
    if &r * &r != d {
        return Vec::new();
    }
    [s + &r, s - &r]
        .into_iter()
        .filter(|x| x.is_even())
        .map(|x| x / z(2))
        .collect()
}

/// Irreducibility over `Q` of a monic integer quartic: no rational root
/// and no splitting into two monic integer quadratics.
pub fn quartic_is_irreducible(f: &PolyInt) -> Result<bool> {
    if f.degree() != Some(4) || !f.is_monic() {
        return Err(Error::InvalidInput("expected a monic quartic".into()));
    }
    if f.coeff(0).is_zero() || !rational_roots(f)?.is_empty() {
        return Ok(false);
    }
    let (a0, a1, a2, a3) = (f.coeff(0), f.coeff(1), f.coeff(2), f.coeff(3));
    // (T^2 + aT + b)(T^2 + cT + d)
    for b in divisors_signed(&a0)? {
        let d = &a0 / &b;
        let candidates = if b != d {
            let num = &a1 - &b * &a3;
            let den = &d - &b;
            if !(&num % &den).is_zero() {
                continue;
            }
            vec![num / den]
        } else {
            if a1 != &b * &a3 {
                continue;
            }
            integer_quadratic_roots(&a3, &(&a2 - &b - &d))
        };
        for a in candidates {
            let c = &a3 - &a;
            if &a * &c + &b + &d == a2 && &a * &d + &b * &c == a1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn squarefree_nonzero(x: &Int, budget: &Budget) -> Result<(bool, Factorization)> {
    let f = arith::factor_within(x, budget)?;
    Ok((f.is_squarefree(), f))
}

/// The lift the case analysis prescribes at `p`, if `p` is visited.
fn guided_lift(alpha: &Int, p: &Int) -> Result<PolyInt> {
    let t_minus = |r: Int| PolyInt::new(vec![-r, z(1)]);
    if p == &z(2) {
        return Ok(t_minus(z(1)));
    }
    if p == &z(3) {
        return Ok(t_minus(match alpha.mod_floor(&z(3)).to_string().as_str() {
            "0" => z(0),
            "1" => z(4),
            _ => z(-4),
        }));
    }
    let curve = tate_curve(alpha, &z(1))?;
    let case = SingularCase::detect(alpha, &z(1), p)?;
    Ok(t_minus(singular_t(&curve, &case)))
}

fn evidence_at(phi: &PolyInt, p: &Int, lifts: Option<&[PolyInt]>) -> Result<PrimeEvidence> {
    let report = index_report(phi, p, lifts)?;
    let dedekind = dedekind_p_maximal(phi, p)?;
    Ok(PrimeEvidence::from_report(&report, dedekind))
}

fn corroborate(alpha: &Int, budget: &Budget) -> Result<Corroboration> {
    let table = reduction_table_within(alpha, &z(1), budget)?;
    let types: Vec<(Int, KodairaType)> = table.into_iter().map(|d| (d.p, d.kodaira)).collect();
    let consistent = types
        .iter()
        .all(|(_, k)| matches!(k, KodairaType::I(1) | KodairaType::IStar(1)));
    Ok(Corroboration { types, consistent })
}

fn verdict_from(rows: &[PrimeEvidence]) -> (Verdict, Option<String>) {
    if let Some(r) = rows.iter().find(|r| !r.exact) {
        return (
            Verdict::NotCertified,
            Some(format!("index at {} not determined by first-order polygons", r.p)),
        );
    }
    if let Some(r) = rows.iter().find(|r| r.ind_p > 0) {
        return (
            Verdict::NotCertified,
            Some(format!("{} divides the index of Z[theta]", r.p)),
        );
    }
    if let Some(r) = rows.iter().find(|r| !r.dedekind_agrees()) {
        return (
            Verdict::NotCertified,
            Some(format!("Dedekind's criterion disagrees at {}", r.p)),
        );
    }
    (Verdict::Monogenic, None)
}

fn index_product(rows: &[PrimeEvidence]) -> Option<Int> {
    let mut acc = Int::one();
    for r in rows {
        if !r.exact {
            return None;
        }
        acc *= num_traits::pow(r.p.clone(), r.ind_p as usize);
    }
    Some(acc)
}

pub fn certify(alpha: &Int) -> MonogenicityCertificate {
    certify_within(alpha, &Budget::unlimited())
}

/// Certificate following the curve-guided case analysis: `p = 2` for even
/// `alpha`, `p = 3`, and each `p >= 5` dividing `(alpha - 8)(alpha + 8)`.
pub fn certify_within(alpha: &Int, budget: &Budget) -> MonogenicityCertificate {
    const METHOD: &str = "curve-guided";
    let fail = |v, r: String| MonogenicityCertificate::failed(alpha, METHOD, v, r);
    let (minus, plus) = (alpha - z(8), alpha + z(8));
    if minus.is_zero() || plus.is_zero() {
        return fail(Verdict::HypothesisFailed, "alpha = +-8 gives a singular curve".into());
    }
    let mut trust = Vec::new();
    let mut primes = Vec::new();
    for x in [&minus, &plus] {
        match squarefree_nonzero(x, budget) {
            Ok((true, f)) => {
                trust.extend(trust_notes(&f));
                primes.extend(f.primes().filter(|p| *p > &z(3)).cloned());
            }
            Ok((false, _)) => return fail(Verdict::HypothesisFailed, format!("{x} is not squarefree")),
            Err(e) => return fail(Verdict::NotCertified, e.to_string()),
        }
    }
    let phi = fueter_cubic_poly(alpha);
    match quartic_is_irreducible(&phi) {
        Ok(true) => {}
        Ok(false) => {
            return fail(
                Verdict::HypothesisFailed,
                "T^4 - 6T^2 - alpha T - 3 is reducible".into(),
            )
        }
        Err(e) => return fail(Verdict::NotCertified, e.to_string()),
    }
    let mut visit = Vec::new();
    if alpha.is_even() {
        visit.push(z(2));
    }
    visit.push(z(3));
    primes.sort();
    primes.dedup();
    visit.extend(primes);

    let mut rows = Vec::new();
    for p in &visit {
        let row = guided_lift(alpha, p).and_then(|l| evidence_at(&phi, p, Some(&[l])));
        match row {
            Ok(r) => rows.push(r),
            Err(e) => return fail(Verdict::NotCertified, format!("at {p}: {e}")),
        }
    }
    let (verdict, reason) = verdict_from(&rows);
    let field_disc = (verdict == Verdict::Monogenic).then(|| predicted_disc(alpha));
    trust.sort();
    trust.dedup();
    MonogenicityCertificate {
        alpha: alpha.clone(),
        method: METHOD,
        hypothesis_ok: true,
        poly_disc: predicted_disc(alpha),
        field_disc,
        prime_evidence: rows,
        verdict,
        reason,
        trust,
        corroboration: corroborate(alpha, budget).ok(),
    }
}

/// Outcome of [`certify_polynomial`].
#[derive(Debug, Clone, PartialEq)]
pub struct PolynomialVerdict {
    pub verdict: Verdict,
    pub reason: Option<String>,
    pub rows: Vec<PrimeEvidence>,
    pub field_disc: Option<Int>,
    pub trust: Vec<String>,
}

/// Runs the index computation on an arbitrary monic irreducible quartic at
/// every prime dividing its discriminant, with default lifts.
pub fn certify_polynomial(phi: &PolyInt, budget: &Budget) -> Result<PolynomialVerdict> {
    if !quartic_is_irreducible(phi)? {
        return Ok(PolynomialVerdict {
            verdict: Verdict::HypothesisFailed,
            reason: Some("polynomial is reducible".into()),
            rows: Vec::new(),
            field_disc: None,
            trust: Vec::new(),
        });
    }
    let disc = discriminant(phi)?;
    let f = arith::factor_within(&disc, budget)?;
    let mut rows = Vec::new();
    for p in f.primes() {
        budget.check()?;
        rows.push(evidence_at(phi, p, None)?);
    }
    let (verdict, reason) = verdict_from(&rows);
    let field_disc = index_product(&rows).map(|i| &disc / (&i * &i));
    Ok(PolynomialVerdict {
        verdict,
        reason,
        rows,
        field_disc,
        trust: trust_notes(&f),
    })
}

pub fn certify_generic(alpha: &Int) -> MonogenicityCertificate {
    certify_generic_within(alpha, &Budget::unlimited())
}

/// Certificate from the polygons at every prime dividing the discriminant,
/// without the curve-guided lifts.
pub fn certify_generic_within(alpha: &Int, budget: &Budget) -> MonogenicityCertificate {
    const METHOD: &str = "generic";
    if (alpha - z(8)).is_zero() || (alpha + z(8)).is_zero() {
        return MonogenicityCertificate::failed(
            alpha,
            METHOD,
            Verdict::HypothesisFailed,
            "polynomial is not squarefree".into(),
        );
    }
    match certify_polynomial(&fueter_cubic_poly(alpha), budget) {
        Ok(PolynomialVerdict {
            verdict,
            reason,
            rows,
            field_disc,
            trust,
        }) => MonogenicityCertificate {
            alpha: alpha.clone(),
            method: METHOD,
            hypothesis_ok: verdict != Verdict::HypothesisFailed,
            poly_disc: predicted_disc(alpha),
            field_disc,
            prime_evidence: rows,
            verdict,
            reason,
            trust,
            corroboration: None,
        },
        Err(e) => MonogenicityCertificate::failed(alpha, METHOD, Verdict::NotCertified, e.to_string()),
    }
}

/// Two certificates contradict when one proves a power basis and the other
/// proves a nontrivial index.
pub fn contradictory(a: &MonogenicityCertificate, b: &MonogenicityCertificate) -> bool {
    let proves_index = |c: &MonogenicityCertificate| c.prime_evidence.iter().any(|r| r.exact && r.ind_p > 0);
    (a.verdict == Verdict::Monogenic && proves_index(b)) || (b.verdict == Verdict::Monogenic && proves_index(a))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GaloisGroup {
    S4,
    A4,
    /// Dihedral of order 8 or cyclic of order 4.
    D4OrC4,
    V4,
}

impl fmt::Display for GaloisGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GaloisGroup::S4 => "S4",
            GaloisGroup::A4 => "A4",
            GaloisGroup::D4OrC4 => "D4/C4",
            GaloisGroup::V4 => "V4",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GaloisSignature {
    pub group: GaloisGroup,
    pub real_roots: usize,
}

/// Resolvent cubic `y^3 + 6y^2 + 12y + 72 - alpha^2 = (y + 2)^3 + 64 - alpha^2`.
pub fn resolvent_cubic(alpha: &Int) -> PolyInt {
    PolyInt::new(vec![z(72) - alpha * alpha, z(12), z(6), z(1)])
}

pub fn galois_signature(alpha: &Int) -> Result<GaloisSignature> {
    let f = fueter_cubic_poly(alpha);
    if !quartic_is_irreducible(&f)? {
        return Err(Error::Reducible);
    }
    let roots = rational_roots(&resolvent_cubic(alpha))?.len();
    let disc = discriminant(&f)?;
    let square = !disc.is_negative() && {
        let r = disc.sqrt();
        &r * &r == disc
    };
    let group = match (roots, square) {
        (0, false) => GaloisGroup::S4,
        (0, true) => GaloisGroup::A4,
        (1, _) => GaloisGroup::D4OrC4,
        _ => GaloisGroup::V4,
    };
    let real_roots = count_real_roots(&f.to_rat())?;
    Ok(GaloisSignature { group, real_roots })
}

/// Norm of `1 + (alpha/3) theta + 2 theta^2`.
pub fn unit_norm_check(alpha: &Int) -> Result<Int> {
    if !(alpha % z(3)).is_zero() {
        return Err(Error::InvalidInput(format!("3 does not divide {alpha}")));
    }
    let f = fueter_cubic_poly(alpha);
    if !quartic_is_irreducible(&f)? {
        return Err(Error::Reducible);
    }
    let u = PolyInt::new(vec![z(1), alpha / z(3), z(2)]);
    resultant(&f, &u)
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ScanConfig {
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
    /// Per-alpha factorization budget in milliseconds.
    pub budget_ms: Option<u64>,
}

/// Certificates for `lo..=hi`, ordered by `alpha`.
pub fn scan(lo: i64, hi: i64, config: ScanConfig) -> Vec<MonogenicityCertificate> {
    let run = || -> Vec<MonogenicityCertificate> {
        (lo..=hi)
            .into_par_iter()
            .map(|a| {
                let budget = config.budget_ms.map_or_else(Budget::unlimited, Budget::from_millis);
                certify_within(&z(a), &budget)
            })
            .collect()
    };
    match config.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("thread pool")
            .install(run),
        None => run(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    A,
    B,
    C,
}

impl Family {
    pub fn polynomial(self, s: &Int, t: &Int) -> PolyInt {
        match self {
            Family::A => PolyInt::new(vec![z(-3) * s * s, -t.clone(), z(-6) * s, z(0), z(1)]),
            Family::B => PolyInt::new(vec![t.clone(), -(z(4) * t + z(3) * s * s), z(-3) * s, z(-1), z(1)]),
            Family::C => PolyInt::new(vec![t.clone(), -(z(2) * t + z(6) * s * s), z(-6) * s, z(-2), z(1)]),
        }
    }

    /// The factor that appears squared in the discriminant.
    pub fn squared_factor(self, s: &Int, t: &Int) -> Int {
        let s2 = s * s;
        let s3 = &s2 * s;
        let s4 = &s2 * &s2;
        match self {
            Family::A => t * t - z(64) * &s3,
            Family::B => z(16) * t * t + (z(24) * &s2 + z(12) * s + z(1)) * t + (z(9) * &s4 + &s3),
            Family::C => t * t + (z(6) * &s2 + z(6) * s + z(1)) * t + (z(9) * &s4 + z(2) * &s3),
        }
    }

    pub fn predicted_disc(self, s: &Int, t: &Int) -> Int {
        let q = self.squared_factor(s, t);
        let k = match self {
            Family::A | Family::B => z(-27),
            Family::C => z(-16 * 27),
        };
        k * &q * &q
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            _ => Err(Error::InvalidInput(format!("unknown family {s}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FamilyEntry {
    pub family: Family,
    pub s: Int,
    pub t: Int,
    pub polynomial: PolyInt,
    pub predicted_disc: Int,
    pub disc_matches: bool,
    pub verdict: Option<Verdict>,
}

impl FamilyEntry {
    pub fn to_json(&self) -> Value {
        json!({
            "family": format!("{:?}", self.family),
            "s": int_to_json(&self.s),
            "t": int_to_json(&self.t),
            "polynomial": self.polynomial.to_string(),
            "predicted_disc": self.predicted_disc.to_string(),
            "disc_matches": self.disc_matches,
            "verdict": self.verdict.map(|v| v.to_string()),
        })
    }
}

/// Checks the tabulated discriminant on a grid and runs the polygon
/// certifier when the squared factor is squarefree.
pub fn survey_family(family: Family, s_range: (i64, i64), t_range: (i64, i64)) -> Vec<FamilyEntry> {
    let grid: Vec<(i64, i64)> = (s_range.0..=s_range.1)
        .flat_map(|s| (t_range.0..=t_range.1).map(move |t| (s, t)))
        .collect();
    grid.into_par_iter()
        .map(|(s, t)| {
            let (s, t) = (z(s), z(t));
            let polynomial = family.polynomial(&s, &t);
            let predicted = family.predicted_disc(&s, &t);
            let disc_matches = discriminant(&polynomial).map(|d| d == predicted).unwrap_or(false);
            let q = family.squared_factor(&s, &t);
            let verdict = if q.is_zero() || !arith::is_squarefree(&q).unwrap_or(false) {
                None
            } else {
                certify_polynomial(&polynomial, &Budget::unlimited())
                    .ok()
                    .map(|r| r.verdict)
            };
            FamilyEntry {
                family,
                s,
                t,
                polynomial,
                predicted_disc: predicted,
                disc_matches,
                verdict,
            }
        })
        .collect()
}
