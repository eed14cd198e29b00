//! Closed-form reduction data for `y^2 + a xy + b a^2 y = x^3 + b a x^2`,
//! `a = alpha + 8 beta`, at each prime dividing the discriminant.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::arith::{self, Budget};
use crate::error::{Error, Result};
use crate::Int;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KodairaType {
    I(u32),
    IStar(u32),
    III,
    IIIStar,
    Good,
}

impl KodairaType {
    /// Number of geometric components of the special fibre.
    pub fn components(&self) -> u32 {
        match *self {
            KodairaType::I(n) => n.max(1),
            KodairaType::IStar(n) => n + 5,
            KodairaType::III => 2,
            KodairaType::IIIStar => 8,
            KodairaType::Good => 1,
        }
    }
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaType::I(n) => write!(f, "I_{n}"),
            KodairaType::IStar(n) => write!(f, "I*_{n}"),
            KodairaType::III => write!(f, "III"),
            KodairaType::IIIStar => write!(f, "III*"),
            KodairaType::Good => write!(f, "good"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionData {
    pub p: Int,
    pub kodaira: KodairaType,
    /// Conductor exponent, when the classifying clause states it.
    pub f: Option<u32>,
    /// Components of the special fibre over `F_p`, when stated.
    pub c: Option<u32>,
    pub case_tag: &'static str,
    /// The model is minimal after `(x, y) = (p^(2w) x', p^(3w) y')`.
    pub minimal_shift_w: u32,
    /// `v_p` of the minimal discriminant, where the clause determines it.
    pub min_disc_valuation: Option<u32>,
}

impl ReductionData {
    /// `v_p(Delta_min) = f + m - 1`; `None` when a term is unknown.
    pub fn ogg_consistent(&self) -> Option<bool> {
        let (f, v) = (self.f?, self.min_disc_valuation?);
        Some(v == f + self.kodaira.components() - 1)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "p": arith::int_to_json(&self.p),
            "kodaira": self.kodaira.to_string(),
            "f": self.f,
            "c": self.c,
            "case": self.case_tag,
        })
    }
}

fn check_coprime(alpha: &Int, beta: &Int) -> Result<()> {
    let eight_beta = BigInt::from(8) * beta;
    if alpha == &eight_beta || alpha == &-eight_beta {
        Err(Error::SingularCurve)
    } else if alpha.gcd(beta).is_one() {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!(
            "alpha = {alpha} and beta = {beta} must be coprime"
        )))
    }
}

fn val(x: &Int, p: &Int) -> u32 {
    if x.is_zero() {
        0
    } else {
        arith::vp(x, p).expect("nonzero")
    }
}

fn divides(p: &Int, x: &Int) -> bool {
    x.is_zero() || x.mod_floor(p).is_zero()
}

/// Case `p | beta`, shared by odd `p` and `p = 2`.
fn beta_case(p: &Int, beta: &Int) -> ReductionData {
    let v = val(beta, p);
    ReductionData {
        p: p.clone(),
        kodaira: KodairaType::I(4 * v),
        f: Some(1),
        c: Some(4 * v),
        case_tag: "tate-1",
        minimal_shift_w: 0,
        min_disc_valuation: Some(4 * v),
    }
}

/// Reduction at an odd prime dividing `beta (alpha - 8 beta)(alpha + 8 beta)`.
pub fn classify_odd(alpha: &Int, beta: &Int, p: &Int) -> Result<ReductionData> {
    check_coprime(alpha, beta)?;
    if p.is_even() || !arith::is_prime(p) {
        return Err(if p == &BigInt::from(2) {
            Error::InvalidInput("use classify_two at p = 2".into())
        } else {
            Error::NotPrime(p.clone())
        });
    }
    let eight = BigInt::from(8);
    let minus = alpha - &eight * beta;
    let plus = alpha + &eight * beta;
    let hits = [divides(p, beta), divides(p, &minus), divides(p, &plus)];
    match hits.iter().filter(|&&h| h).count() {
        0 => return Err(Error::GoodReduction(p.clone())),
        1 => {}
        _ => unreachable!("for coprime alpha, beta and odd p at most one factor of the discriminant vanishes"),
    }
    if hits[0] {
        return Ok(beta_case(p, beta));
    }
    if hits[1] {
        let v = val(&minus, p);
        let one_mod_four = p.mod_floor(&BigInt::from(4)).is_one();
        let c = if one_mod_four {
            v
        } else if v % 2 == 1 {
            1
        } else {
            2
        };
        return Ok(ReductionData {
            p: p.clone(),
            kodaira: KodairaType::I(v),
            f: Some(1),
            c: Some(c),
            case_tag: if one_mod_four { "tate-2a" } else { "tate-2b" },
            minimal_shift_w: 0,
            min_disc_valuation: Some(v),
        });
    }
    let v = val(&plus, p);
    let w = v / 2;
    // after the shift, v_p(Delta') = 7 v - 12 w
    let min_disc = 7 * v - 12 * w;
    debug_assert_eq!(min_disc, v + 6 * (v % 2));
    if v % 2 == 1 {
        Ok(ReductionData {
            p: p.clone(),
            kodaira: KodairaType::IStar(v),
            f: Some(2),
            c: Some(4),
            case_tag: "tate-3a",
            minimal_shift_w: w,
            min_disc_valuation: Some(min_disc),
        })
    } else {
        let unit = beta * &plus / num_traits::pow(p.clone(), 2 * w as usize);
        let c = if arith::legendre(&unit, p) == 1 { v } else { 2 };
        Ok(ReductionData {
            p: p.clone(),
            kodaira: KodairaType::I(v),
            f: Some(1),
            c: Some(c),
            case_tag: "tate-3b",
            minimal_shift_w: w,
            min_disc_valuation: Some(min_disc),
        })
    }
}

/// Reduction at 2. For odd `beta` the clauses branch on `v = v_2(a)`; the
/// parity test uses `(beta a + 2^w a - 2^(2w)) / 2^(2w+1)` with `w = v/2`,
/// which is the integral form of `(beta a + 4a - 16)/32` for every even `v`.
pub fn classify_two(alpha: &Int, beta: &Int) -> Result<ReductionData> {
    check_coprime(alpha, beta)?;
    let two = BigInt::from(2);
    if beta.is_even() {
        return Ok(beta_case(&two, beta));
    }
    if alpha.is_odd() {
        return Err(Error::GoodReduction(two));
    }
    let a = alpha + BigInt::from(8) * beta;
    let v = val(&a, &two);
    let w = v / 2;
    let data = |kodaira, case_tag, minimal_shift_w| ReductionData {
        p: two.clone(),
        kodaira,
        f: None,
        c: None,
        case_tag,
        minimal_shift_w,
        min_disc_valuation: None,
    };
    if v == 1 {
        return Ok(ReductionData {
            f: Some(3),
            c: Some(4),
            min_disc_valuation: Some(8),
            ..data(KodairaType::IStar(1), "tate2-1", 0)
        });
    }
    if v == 2 {
        return Ok(data(KodairaType::III, "tate2-2", w));
    }
    if v % 2 == 1 {
        return Ok(data(KodairaType::IStar(v), "tate2-3", w));
    }
    let pw = BigInt::one() << w;
    let q = (beta * &a + &pw * &a - &pw * &pw) / (BigInt::one() << (2 * w + 1));
    let q_odd = q.is_odd();
    if v == 4 {
        if q_odd {
            return Ok(data(KodairaType::IStar(0), "tate2-4", w));
        }
        // the subprocedure runs until v_2(alpha - 8 beta) is exhausted
        let m = val(&(alpha - BigInt::from(8) * beta), &two) - 4;
        let tag = if m == 2 { "tate2-5a" } else { "tate2-5b" };
        return Ok(data(KodairaType::IStar(m), tag, w));
    }
    if q_odd {
        return Ok(data(KodairaType::IStar(v - 4), "tate2-6a", w));
    }
    Ok(match v {
        6 => data(KodairaType::IIIStar, "tate2-6bi", w),
        8 => data(KodairaType::Good, "tate2-6bii", w + 1),
        _ => data(KodairaType::I(v - 8), "tate2-6biii", w + 1),
    })
}

/// `beta^4 (alpha - 8 beta)(alpha + 8 beta)^7`
pub fn discriminant(alpha: &Int, beta: &Int) -> Int {
    let eight = BigInt::from(8);
    num_traits::pow(beta.clone(), 4) * (alpha - &eight * beta) * num_traits::pow(alpha + &eight * beta, 7)
}

/// One entry per prime of bad reduction, ascending. A prime where the
/// model becomes good after a change of coordinates is left out.
pub fn reduction_table(alpha: &Int, beta: &Int) -> Result<Vec<ReductionData>> {
    reduction_table_within(alpha, beta, &Budget::unlimited())
}

pub fn reduction_table_within(alpha: &Int, beta: &Int, budget: &Budget) -> Result<Vec<ReductionData>> {
    check_coprime(alpha, beta)?;
    let eight = BigInt::from(8);
    let parts = [beta.clone(), alpha - &eight * beta, alpha + &eight * beta];
    if parts.iter().any(|x| x.is_zero()) {
        return Err(Error::SingularCurve);
    }
    // factor the three factors separately instead of their product
    let mut primes: Vec<Int> = Vec::new();
    for x in &parts {
        let fact = arith::factor_within(&x.abs(), budget)?;
        primes.extend(fact.primes().cloned());
    }
    primes.sort();
    primes.dedup();
    let mut out = Vec::new();
    for p in primes {
        let d = if p == BigInt::from(2) {
            classify_two(alpha, beta)?
        } else {
            classify_odd(alpha, beta, &p)?
        };
        if d.kodaira != KodairaType::Good {
            out.push(d);
        }
    }
    Ok(out)
}

/// Largest exponent in `I_n` or `I*_n` entries, for display.
pub fn max_index(table: &[ReductionData]) -> u32 {
    table
        .iter()
        .map(|d| match d.kodaira {
            KodairaType::I(n) | KodairaType::IStar(n) => n,
            _ => 0,
        })
        .max()
        .unwrap_or(0)
}
