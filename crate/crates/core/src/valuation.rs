//! Valuations of odd division polynomials at the singular point of the
//! reduction, together with exact-evaluation oracles.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith;
use crate::elliptic::TateNormalCurve;
use crate::error::{Error, Result};
use crate::{Int, Rat};

/// Which factor of the discriminant an odd prime divides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseTag {
    /// `p | alpha - 8 beta`, split multiplicative.
    Minus,
    /// `p | alpha + 8 beta`.
    Plus,
    /// `p | beta`.
    Beta,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularCase {
    pub tag: CaseTag,
    pub p: Int,
    pub v: u32,
}

impl SingularCase {
    /// Locates the odd prime `p` among the factors of the discriminant.
    pub fn detect(alpha: &Int, beta: &Int, p: &Int) -> Result<Self> {
        if !arith::is_prime(p) || p.is_even() {
            return Err(Error::InvalidInput(format!("{p} is not an odd prime")));
        }
        if !alpha.gcd(beta).is_one() {
            return Err(Error::InvalidInput(format!(
                "alpha = {alpha} and beta = {beta} must be coprime"
            )));
        }
        let eight_beta = BigInt::from(8) * beta;
        let candidates = [
            (CaseTag::Minus, alpha - &eight_beta),
            (CaseTag::Plus, alpha + &eight_beta),
            (CaseTag::Beta, beta.clone()),
        ];
        if candidates.iter().any(|(_, x)| x.is_zero()) {
            return Err(Error::SingularCurve);
        }
        let mut hits = candidates.iter().filter(|(_, x)| (x % p).is_zero());
        let (tag, x) = hits.next().ok_or_else(|| Error::GoodReduction(p.clone()))?;
        debug_assert!(hits.next().is_none(), "cases are exclusive for coprime inputs");
        Ok(SingularCase {
            tag: *tag,
            p: p.clone(),
            v: arith::vp(x, p)?,
        })
    }
}

fn hat(x: &Int, ell: &Int) -> Int {
    x.mod_floor(&ell.abs())
}

/// `R_n(a, ell)`, with hats denoting least non-negative residues mod `ell`.
pub fn r_seq(n: u32, a: &Int, ell: &Int) -> Int {
    assert!(!ell.is_zero(), "ell must be nonzero");
    let n = BigInt::from(n);
    let ah = hat(a, ell);
    let nah = hat(&(&n * a), ell);
    let two_ell = BigInt::from(2) * ell;
    (&n * &n * &ah * (ell - &ah)).div_floor(&two_ell) - (&nah * (ell - &nah)).div_floor(&two_ell)
}

fn check_odd(n: u32) -> Result<()> {
    if n.is_multiple_of(2) || n == 0 {
        Err(Error::EvenIndex)
    } else {
        Ok(())
    }
}

/// Predicted `v_p(Psi_n)` at the singular point.
pub fn predicted_valuation(case: &SingularCase, n: u32) -> Result<u32> {
    check_odd(n)?;
    let k = (n * n - 1) / 8;
    Ok(case.v
        * match case.tag {
            CaseTag::Minus => k,
            CaseTag::Beta => 3 * k,
            CaseTag::Plus => 5 * k,
        })
}

/// Predicted `v_p(F_n)` at the matching `T`.
pub fn predicted_fueter_valuation(case: &SingularCase, n: u32) -> Result<i64> {
    check_odd(n)?;
    let k = i64::from(case.v) * i64::from((n * n - 1) / 8);
    Ok(match case.tag {
        CaseTag::Beta => -k,
        CaseTag::Minus | CaseTag::Plus => k,
    })
}

/// Abscissa of the singular point: `-2^5 beta^2` or `0`.
pub fn singular_x(curve: &TateNormalCurve, case: &SingularCase) -> Int {
    match case.tag {
        CaseTag::Minus => BigInt::from(-32) * &curve.beta * &curve.beta,
        CaseTag::Plus | CaseTag::Beta => BigInt::zero(),
    }
}

/// Exact rational `T` matching [`singular_x`].
pub fn singular_t_exact(curve: &TateNormalCurve, case: &SingularCase) -> Result<Rat> {
    curve.x_to_t(&Rat::from_integer(singular_x(curve, case)))
}

/// Residue of the repeated root of `F_n` mod `p`.
pub fn singular_t(curve: &TateNormalCurve, case: &SingularCase) -> Int {
    match case.tag {
        CaseTag::Plus | CaseTag::Beta => BigInt::from(1),
        CaseTag::Minus => {
            let ab = &curve.a * &curve.beta;
            let den = singular_x(curve, case) + &ab;
            let inv = arith::mod_inverse(&den, &case.p).expect("x + a beta is a unit when p | alpha - 8 beta");
            (ab * inv).mod_floor(&case.p)
        }
    }
}

/// `v_p(Psi_n(x_0))` by exact evaluation; errors on a zero value.
pub fn observed_psi_valuation(curve: &TateNormalCurve, case: &SingularCase, n: u32) -> Result<u32> {
    check_odd(n)?;
    let x = Rat::from_integer(singular_x(curve, case));
    let value = curve.psi_engine().get(n).poly.eval(&x);
    debug_assert!(value.is_integer());
    arith::vp(value.numer(), &case.p)
}

/// `v_p(F_n(T_0))` by exact rational evaluation.
pub fn observed_fueter_valuation(curve: &TateNormalCurve, case: &SingularCase, n: u32) -> Result<i64> {
    check_odd(n)?;
    let t = singular_t_exact(curve, case)?;
    arith::vp_rat(&curve.fueter_engine().get(n).poly.eval(&t), &case.p)
}
