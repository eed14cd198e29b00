//! Weierstrass and Fueter models of the Tate normal form
//! `y^2 + a xy + b a^2 y = x^3 + b a x^2` with `a = alpha + 8 beta`, their
//! division polynomials, x-doubling and closed-form discriminants.

mod divpoly;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Field, Poly};
use crate::{Int, Rat};

pub use divpoly::{DivisionPoly, DivisionPolynomials, Model, DEFAULT_MEMO_CAP};

/// A long Weierstrass model over a field, with its standard invariants.
#[derive(Clone, Debug, PartialEq)]
pub struct Weierstrass<T: Field> {
    pub a1: T,
    pub a2: T,
    pub a3: T,
    pub a4: T,
    pub a6: T,
    pub b2: T,
    pub b4: T,
    pub b6: T,
    pub b8: T,
    pub delta: T,
    pub j: T,
}

impl<T: Field> Weierstrass<T> {
    pub fn new(a1: T, a2: T, a3: T, a4: T, a6: T) -> Result<Self> {
        let t = |k: i64| -> T {
            let mut acc = T::zero();
            for _ in 0..k.abs() {
                acc = acc + T::one();
            }
            if k < 0 {
                -acc
            } else {
                acc
            }
        };
        let b2 = a1.clone() * a1.clone() + t(4) * a2.clone();
        let b4 = t(2) * a4.clone() + a1.clone() * a3.clone();
        let b6 = a3.clone() * a3.clone() + t(4) * a6.clone();
        let b8 = a1.clone() * a1.clone() * a6.clone() + t(4) * a2.clone() * a6.clone()
            - a1.clone() * a3.clone() * a4.clone()
            + a2.clone() * a3.clone() * a3.clone()
            - a4.clone() * a4.clone();
        let delta = -b2.clone() * b2.clone() * b8.clone()
            - t(8) * b4.clone() * b4.clone() * b4.clone()
            - t(27) * b6.clone() * b6.clone()
            + t(9) * b2.clone() * b4.clone() * b6.clone();
        if delta.is_zero() {
            return Err(Error::SingularCurve);
        }
        let c4 = b2.clone() * b2.clone() - t(24) * b4.clone();
        let j = c4.clone() * c4.clone() * c4 / delta.clone();
        Ok(Weierstrass {
            a1,
            a2,
            a3,
            a4,
            a6,
            b2,
            b4,
            b6,
            b8,
            delta,
            j,
        })
    }

    /// `4x^3 + b2 x^2 + 2 b4 x + b6`, the square of the second division
    /// polynomial expressed in `x`.
    pub fn two_torsion_poly(&self) -> Poly<T> {
        Poly::new(vec![
            self.b6.clone(),
            self.b4.clone() + self.b4.clone(),
            self.b2.clone(),
            T::one() + T::one() + T::one() + T::one(),
        ])
    }

    /// x-coordinate of `[2]P` from `x(P)`.
    pub fn double_x(&self, x: &T) -> Result<T> {
        let den = self.two_torsion_poly().eval(x);
        if den.is_zero() {
            return Err(Error::TwoTorsion);
        }
        let x2 = x.clone() * x.clone();
        let two = T::one() + T::one();
        let num = x2.clone() * x2.clone() - self.b4.clone() * x2 - two * self.b6.clone() * x.clone() - self.b8.clone();
        Ok(num / den)
    }

    /// Division polynomial engine for this model.
    pub fn division_polynomials(&self) -> DivisionPolynomials<T> {
        DivisionPolynomials::weierstrass(self)
    }
}

/// The Tate normal form with coprime integer parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct TateNormalCurve {
    pub alpha: Int,
    pub beta: Int,
    /// `alpha + 8 beta`
    pub a: Int,
    pub curve: Weierstrass<Rat>,
}

fn rat(x: &Int) -> Rat {
    BigRational::from_integer(x.clone())
}

/// Build the Tate normal form for coprime `(alpha, beta)`.
pub fn tate_curve(alpha: &Int, beta: &Int) -> Result<TateNormalCurve> {
    if !alpha.gcd(beta).is_one() {
        return Err(Error::InvalidInput(format!(
            "alpha = {alpha} and beta = {beta} must be coprime"
        )));
    }
    let a = alpha + BigInt::from(8) * beta;
    let a1 = rat(&a);
    let a2 = rat(&(beta * &a));
    let a3 = rat(&(beta * &a * &a));
    let curve = Weierstrass::new(a1, a2, a3, Rat::zero(), Rat::zero())?;
    Ok(TateNormalCurve {
        alpha: alpha.clone(),
        beta: beta.clone(),
        a,
        curve,
    })
}

impl TateNormalCurve {
    pub fn alpha_minus(&self) -> Int {
        &self.alpha - BigInt::from(8) * &self.beta
    }

    /// `beta^4 (alpha - 8 beta) (alpha + 8 beta)^7`
    pub fn closed_form_delta(&self) -> Int {
        num_traits::pow(self.beta.clone(), 4) * self.alpha_minus() * num_traits::pow(self.a.clone(), 7)
    }

    /// `(alpha^2 - 48 beta^2)^3 / (beta^4 (alpha - 8 beta)(alpha + 8 beta))`
    pub fn closed_form_j(&self) -> Rat {
        let num = num_traits::pow(
            &self.alpha * &self.alpha - BigInt::from(48) * &self.beta * &self.beta,
            3,
        );
        let den = num_traits::pow(self.beta.clone(), 4) * self.alpha_minus() * &self.a;
        BigRational::new(num, den)
    }

    fn a_beta(&self) -> Rat {
        rat(&(&self.a * &self.beta))
    }

    /// `x = a beta / T - a beta`
    pub fn t_to_x(&self, t: &Rat) -> Result<Rat> {
        if t.is_zero() {
            return Err(Error::Pole);
        }
        let ab = self.a_beta();
        Ok(ab.clone() / t - ab)
    }

    /// `T = a beta / (x + a beta)`
    pub fn x_to_t(&self, x: &Rat) -> Result<Rat> {
        let ab = self.a_beta();
        let den = x + &ab;
        if den.is_zero() {
            return Err(Error::Pole);
        }
        Ok(ab / den)
    }

    pub fn fueter(&self) -> FueterCurve {
        FueterCurve {
            alpha: self.alpha.clone(),
            beta: self.beta.clone(),
            c: BigRational::new(self.alpha.clone(), self.beta.clone()),
        }
    }

    /// Division polynomial engine in the Weierstrass coordinate `x`.
    pub fn psi_engine(&self) -> DivisionPolynomials<Rat> {
        self.curve.division_polynomials()
    }

    /// Fueter polynomial engine in the coordinate `T`.
    pub fn fueter_engine(&self) -> DivisionPolynomials<Rat> {
        DivisionPolynomials::fueter(&self.fueter().c)
    }

    /// Evaluate both sides of
    /// `Psi_n(x(T)) = (-1)^((n-1)/2) (a beta / T)^((n^2-1)/2) F_n(T)`
    /// exactly and report whether they agree.
    pub fn psi_fueter_identity_check(&self, n: u32, t: &Rat) -> Result<bool> {
        if n.is_multiple_of(2) {
            return Err(Error::EvenIndex);
        }
        let x = self.t_to_x(t)?;
        let lhs = self.psi_engine().get(n).poly.eval(&x);
        let d = (n * n - 1) / 2;
        let scale = num_traits::pow(self.a_beta() / t, d as usize);
        let mut rhs = scale * self.fueter_engine().get(n).poly.eval(t);
        if (n - 1) / 2 % 2 == 1 {
            rhs = -rhs;
        }
        Ok(lhs == rhs)
    }

    /// `Psi_n` for odd `n` rebuilt from `F_n` by the change of variables:
    /// `Psi_n(x) = (-1)^((n-1)/2) sum_k g_k (a beta)^k (x + a beta)^(d-k)`
    /// where `F_n = sum_k g_k T^k` has degree `d`.
    pub fn psi_via_fueter(&self, n: u32) -> Result<Poly<Rat>> {
        if n.is_multiple_of(2) {
            return Err(Error::EvenIndex);
        }
        let f = self.fueter_engine().get(n).poly;
        let d = f.degree().unwrap_or(0);
        let ab = self.a_beta();
        let shift = Poly::new(vec![ab.clone(), Rat::one()]);
        let mut acc = Poly::zero();
        for (k, g) in f.coeffs().iter().enumerate() {
            let term = shift.pow((d - k) as u32).scale(&(g * num_traits::pow(ab.clone(), k)));
            acc = &acc + &term;
        }
        Ok(if (n - 1) / 2 % 2 == 1 { -acc } else { acc })
    }
}

/// `T_1^2 = T (4T^2 + (alpha/beta) T + 4)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FueterCurve {
    pub alpha: Int,
    pub beta: Int,
    /// `alpha / beta`
    pub c: Rat,
}

impl FueterCurve {
    /// `4T^2 + (alpha/beta) T + 4`, the square of `F_2`.
    pub fn f2_squared(&self) -> Poly<Rat> {
        divpoly::fueter_relation(&self.c)
    }
}

fn signed_pow(base: &Rat, e: i64) -> Rat {
    if e >= 0 {
        num_traits::pow(base.clone(), e as usize)
    } else {
        num_traits::pow(base.recip(), (-e) as usize)
    }
}

/// Closed-form discriminant of `Psi_n` in terms of the curve discriminant.
/// For even `n` the value equals `n^3 Disc(Psi_n / Psi_2)`, taking the
/// discriminant of the constant `Psi_2 / Psi_2` to be 1.
pub fn verdure_disc(n: u32, delta: &Rat) -> Rat {
    let n_ = n as i64;
    let nr = rat(&BigInt::from(n));
    if n % 2 == 1 {
        let v = signed_pow(&nr, (n_ * n_ - 3) / 2) * signed_pow(delta, (n_.pow(4) - 4 * n_ * n_ + 3) / 24);
        if (n_ - 1) / 2 % 2 == 1 {
            -v
        } else {
            v
        }
    } else {
        let v = rat(&BigInt::from(16))
            * signed_pow(&nr, (n_ * n_ - 6) / 2)
            * signed_pow(delta, (n_.pow(4) - 10 * n_ * n_ + 24) / 24);
        if (n_ - 2) / 2 % 2 == 1 {
            -v
        } else {
            v
        }
    }
}

/// Closed-form discriminant of the odd Fueter polynomial `F_n`.
pub fn fueter_disc(n: u32, alpha: &Int, beta: &Int) -> Result<Rat> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenIndex);
    }
    let n_ = n as i64;
    let eight = BigInt::from(8);
    let base = BigRational::new((alpha - &eight * beta) * (alpha + &eight * beta), beta * beta);
    let v =
        signed_pow(&rat(&BigInt::from(n)), (n_ * n_ - 3) / 2) * signed_pow(&base, (n_.pow(4) - 4 * n_ * n_ + 3) / 24);
    Ok(if (n_ - 1) / 2 % 2 == 1 { -v } else { v })
}

#[cfg(test)]
mod tests;
