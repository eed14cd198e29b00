//! Polynomials over the prime field `F_p`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::Poly;
use crate::arith::mod_inverse;

/// Coefficients reduced into `[0, p)`, ascending, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModPoly {
    p: BigInt,
    c: Vec<BigInt>,
}

impl ModPoly {
    pub fn new(p: &BigInt, coeffs: Vec<BigInt>) -> Self {
        let c = coeffs.into_iter().map(|x| x.mod_floor(p)).collect();
        Self::from_reduced(p.clone(), c)
    }

    fn from_reduced(p: BigInt, mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        ModPoly { p, c }
    }

    pub fn from_poly(f: &Poly<BigInt>, p: &BigInt) -> Self {
        ModPoly::new(p, f.coeffs().to_vec())
    }

    pub fn zero(p: &BigInt) -> Self {
        ModPoly {
            p: p.clone(),
            c: Vec::new(),
        }
    }

    pub fn one(p: &BigInt) -> Self {
        ModPoly::constant(p, BigInt::one())
    }

    pub fn constant(p: &BigInt, v: BigInt) -> Self {
        ModPoly::new(p, vec![v])
    }

    pub fn x(p: &BigInt) -> Self {
        ModPoly::new(p, vec![BigInt::zero(), BigInt::one()])
    }

    pub fn modulus(&self) -> &BigInt {
        &self.p
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.c.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.c.last()
    }

    /// Least non-negative integer lift.
    pub fn lift(&self) -> Poly<BigInt> {
        Poly::new(self.c.clone())
    }

    /// Lift with coefficients in `(-p/2, p/2]`.
    pub fn lift_symmetric(&self) -> Poly<BigInt> {
        let half = &self.p >> 1;
        Poly::new(
            self.c
                .iter()
                .map(|x| if x > &half { x - &self.p } else { x.clone() })
                .collect(),
        )
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let c = (0..n)
            .map(|i| {
                let s = self.coeff(i) + o.coeff(i);
                if s >= self.p {
                    s - &self.p
                } else {
                    s
                }
            })
            .collect();
        Self::from_reduced(self.p.clone(), c)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let c = (0..n)
            .map(|i| (self.coeff(i) - o.coeff(i)).mod_floor(&self.p))
            .collect();
        Self::from_reduced(self.p.clone(), c)
    }

    pub fn neg(&self) -> Self {
        ModPoly::zero(&self.p).sub(self)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return ModPoly::zero(&self.p);
        }
        let mut out = vec![BigInt::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ModPoly::new(&self.p, out)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        ModPoly::new(&self.p, self.c.iter().map(|a| a * k).collect())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.c
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(&self.p))
    }

    pub fn derivative(&self) -> Self {
        let c = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, a)| a * BigInt::from(i))
            .collect();
        ModPoly::new(&self.p, c)
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn divrem(&self, g: &Self) -> (Self, Self) {
        let dg = g.degree().expect("division by the zero polynomial");
        if self.c.len() <= dg {
            return (ModPoly::zero(&self.p), self.clone());
        }
        let inv = mod_inverse(g.leading().unwrap(), &self.p).expect("p prime");
        let mut r = self.c.clone();
        let mut q = vec![BigInt::zero(); r.len() - dg];
        for i in (0..q.len()).rev() {
            let c = (&r[i + dg] * &inv).mod_floor(&self.p);
            if c.is_zero() {
                continue;
            }
            for (j, gj) in g.c.iter().enumerate() {
                r[i + j] = (&r[i + j] - &c * gj).mod_floor(&self.p);
            }
            q[i] = c;
        }
        r.truncate(dg);
        (
            Self::from_reduced(self.p.clone(), q),
            Self::from_reduced(self.p.clone(), r),
        )
    }

    pub fn rem(&self, g: &Self) -> Self {
        self.divrem(g).1
    }

    /// Exact quotient (debug-asserts a zero remainder).
    pub fn div_exact(&self, g: &Self) -> Self {
        let (q, r) = self.divrem(g);
        debug_assert!(r.is_zero(), "inexact division");
        q
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let inv = mod_inverse(l, &self.p).expect("p prime");
                self.scale(&inv)
            }
        }
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|l| l.is_one())
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `g = s*self + t*o` monic.
    pub fn ext_gcd(&self, o: &Self) -> (Self, Self, Self) {
        let p = &self.p;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (ModPoly::one(p), ModPoly::zero(p));
        let (mut t0, mut t1) = (ModPoly::zero(p), ModPoly::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading() {
            None => (r0, s0, t0),
            Some(l) => {
                let inv = mod_inverse(l, p).expect("p prime");
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    pub fn mul_mod(&self, o: &Self, m: &Self) -> Self {
        self.mul(o).rem(m)
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, e: &BigInt, m: &Self) -> Self {
        let mut acc = ModPoly::one(&self.p).rem(m);
        let base = self.rem(m);
        let bits = e.bits();
        for i in (0..bits).rev() {
            acc = acc.mul_mod(&acc, m);
            if e.bit(i) {
                acc = acc.mul_mod(&base, m);
            }
        }
        acc
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = ModPoly::one(&self.p);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Ordering by degree, then lexicographically on ascending coefficients.
    pub fn canonical_cmp(&self, o: &Self) -> Ordering {
        self.c.len().cmp(&o.c.len()).then_with(|| self.c.cmp(&o.c))
    }
}

impl fmt::Display for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.c.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModPoly[{self}] mod {}", self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(p: i64, v: &[i64]) -> ModPoly {
        ModPoly::new(&BigInt::from(p), v.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(mp(5, &[-1, 0, 1]).gcd(&mp(5, &[-1, 1])), mp(5, &[-1, 1]));
        assert_eq!(mp(3, &[0, 0, 0, 1]).gcd(&mp(3, &[0, 0, 1])), mp(3, &[0, 0, 1]));
        let f = mp(7, &[1, 2, 0, 1]);
        assert!(f.gcd(&f.derivative()).is_one());
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = mp(11, &[3, 1, 4, 1, 5]);
        let b = mp(11, &[9, 2, 6]);
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }

    #[test]
    fn pow_mod_matches_repeated_multiplication() {
        let m = mp(5, &[2, 0, 1, 1]);
        let x = mp(5, &[0, 1]);
        let mut acc = mp(5, &[1]);
        for _ in 0..37 {
            acc = acc.mul_mod(&x, &m);
        }
        assert_eq!(x.pow_mod(&BigInt::from(37), &m), acc);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn divrem_reconstructs_mod_p(
                p in prop::sample::select(vec![2i64, 3, 5, 7, 13, 101]),
                f in prop::collection::vec(-200i64..200, 0..9),
                g in prop::collection::vec(-200i64..200, 1..5),
            ) {
                let (f, g) = (mp(p, &f), mp(p, &g));
                prop_assume!(!g.is_zero());
                let (q, r) = f.divrem(&g);
                prop_assert_eq!(q.mul(&g).add(&r), f);
                prop_assert!(r.degree().is_none_or(|d| d < g.degree().unwrap()));
            }
        }
    }
}
