//! Dense univariate polynomials.
//!
//! [`Poly<T>`] is generic over any scalar implementing the `num-traits`
//! ring interface; the crate root exposes the concrete integer and rational
//! instances. Arithmetic over `F_p` lives in [`modp`] because its elements
//! carry the modulus.

mod develop;
pub mod factor;
pub mod modp;
pub mod residue;
pub mod resultant;
mod roots;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, One, Zero};

use crate::error::{Error, Result};

pub use develop::{phi_development, Development};
pub use resultant::{discriminant, resultant};
pub use roots::{count_real_roots, rational_roots, sturm_sequence};

/// Coefficient ring for [`Poly`]. Division is only ever used where the
/// quotient is exact (or the scalar is a field).
pub trait Scalar: Num + Clone + fmt::Debug + Neg<Output = Self> + Send + Sync {}

impl<T> Scalar for T where T: Num + Clone + fmt::Debug + Neg<Output = T> + Send + Sync {}

/// Scalars whose nonzero elements are invertible.
pub trait Field: Scalar + fmt::Display {}

impl Field for BigRational {}
impl Field for Ratio<i64> {}
impl Field for f32 {}
impl Field for f64 {}

/// Coefficients in ascending degree; trailing zeros are always trimmed so
/// the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// The indeterminate.
    pub fn x() -> Self {
        Poly::monomial(T::one(), 1)
    }

    pub fn monomial(c: T, k: usize) -> Self {
        let mut v = vec![T::zero(); k + 1];
        v[k] = c;
        Poly::new(v)
    }

    /// `x - r`
    pub fn linear_root(r: T) -> Self {
        Poly::new(vec![-r, T::one()])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len().saturating_sub(1));
        let mut k = T::zero();
        for c in self.coeffs.iter() {
            if !k.is_zero() {
                out.push(c.clone() * k.clone());
            }
            k = k + T::one();
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self(g(x))`
    pub fn compose(&self, g: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * g) + &Poly::constant(c.clone()))
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![T::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Division by a monic polynomial; valid over any ring.
    pub fn divrem_monic(&self, g: &Self) -> Result<(Self, Self)> {
        match g.leading() {
            None => Err(Error::DivisionByZero),
            Some(l) if !l.is_one() => Err(Error::NotMonic),
            Some(_) => Ok(self.divrem_by(g, |c| c.clone())),
        }
    }

    /// Long division where `quot_coeff(c)` returns `c / lc(g)`.
    fn divrem_by(&self, g: &Self, quot_coeff: impl Fn(&T) -> T) -> (Self, Self) {
        let dg = g.coeffs.len() - 1;
        if self.coeffs.len() <= dg {
            return (Poly::zero(), self.clone());
        }
        let mut r = self.coeffs.clone();
        let mut q = vec![T::zero(); r.len() - dg];
        for i in (0..q.len()).rev() {
            let c = quot_coeff(&r[i + dg]);
            if c.is_zero() {
                continue;
            }
            for (j, gj) in g.coeffs.iter().enumerate() {
                r[i + j] = r[i + j].clone() - c.clone() * gj.clone();
            }
            q[i] = c;
        }
        r.truncate(dg);
        (Poly::new(q), Poly::new(r))
    }

    /// Pseudo-remainder `lc(g)^(deg f - deg g + 1) f mod g`.
    pub fn pseudo_rem(&self, g: &Self) -> Result<Self> {
        let dg = g.degree().ok_or(Error::DivisionByZero)?;
        let lc = g.leading().cloned().unwrap();
        let Some(df) = self.degree() else {
            return Ok(Poly::zero());
        };
        if df < dg {
            return Ok(self.clone());
        }
        let mut r = self.clone();
        let mut steps = df - dg + 1;
        while let Some(dr) = r.degree() {
            if dr < dg {
                break;
            }
            let lr = r.leading().cloned().unwrap();
            r = &r.scale(&lc) - &g.scale(&lr).shift(dr - dg);
            steps -= 1;
        }
        for _ in 0..steps {
            r = r.scale(&lc);
        }
        Ok(r)
    }

    /// Divide every coefficient by `c` (exact for integral domains when
    /// the quotient exists).
    pub fn div_scalar(&self, c: &T) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.clone() / c.clone()).collect())
    }
}

impl<T: Field> Poly<T> {
    pub fn divrem(&self, g: &Self) -> Result<(Self, Self)> {
        let lc = g.leading().ok_or(Error::DivisionByZero)?.clone();
        Ok(self.divrem_by(g, |c| c.clone() / lc.clone()))
    }

    pub fn rem(&self, g: &Self) -> Result<Self> {
        Ok(self.divrem(g)?.1)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => {
                let l = l.clone();
                self.map(|c| c.clone() / l.clone())
            }
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, g: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), g.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == Some(0)
    }
}

impl<'a, T: Scalar> Add<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &'a Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a, T: Scalar> Sub<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &'a Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a, T: Scalar> Mul<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &'a Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr<Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl<T: Scalar> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

/// Comma-separated ascending coefficients, `0` for the zero polynomial.
impl<T: Scalar + fmt::Display> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl<T: Scalar + fmt::Display> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{self}]")
    }
}

impl<T: Scalar + FromStr> FromStr for Poly<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::InvalidInput("empty coefficient list".into()));
        }
        let coeffs = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<T>()
                    .map_err(|_| Error::InvalidInput(format!("bad coefficient `{}`", t.trim())))
            })
            .collect::<Result<Vec<T>>>()?;
        Ok(Poly::new(coeffs))
    }
}

impl Poly<BigInt> {
    /// Minimum p-adic valuation over the coefficients; `None` for zero.
    pub fn min_valuation(&self, p: &BigInt) -> Option<u32> {
        self.coeffs
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| crate::arith::vp(c, p).expect("nonzero"))
            .min()
    }

    pub fn to_rat(&self) -> Poly<BigRational> {
        self.map(|c| BigRational::from_integer(c.clone()))
    }
}

impl Poly<BigRational> {
    /// The same polynomial over Z when every coefficient is integral.
    pub fn to_int(&self) -> Option<Poly<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(Poly::new)
    }

    /// Primitive integer polynomial with the same roots.
    pub fn clear_denominators(&self) -> Poly<BigInt> {
        use num_integer::Integer;
        let l = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = self.map(|c| (c * BigRational::from_integer(l.clone())).to_integer());
        let g = ints.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if g.is_zero() {
            ints
        } else {
            ints.div_scalar(&g)
        }
    }
}
