//! The finite field `F_p[x]/(phi)` and polynomials over it.

use std::fmt;

use num_bigint::BigInt;

use super::modp::ModPoly;

/// `F_p[x]/(modulus)` for a monic irreducible `modulus`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ResidueField {
    modulus: ModPoly,
}

/// An element of a [`ResidueField`], stored as its reduced representative.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ResidueFieldElem {
    pub value: ModPoly,
}

impl ResidueField {
    pub fn new(modulus: ModPoly) -> Self {
        assert!(modulus.is_monic(), "residue field modulus must be monic");
        ResidueField { modulus }
    }

    pub fn modulus(&self) -> &ModPoly {
        &self.modulus
    }

    pub fn p(&self) -> &BigInt {
        self.modulus.modulus()
    }

    pub fn reduce(&self, f: &ModPoly) -> ResidueFieldElem {
        ResidueFieldElem {
            value: f.rem(&self.modulus),
        }
    }

    pub fn zero(&self) -> ResidueFieldElem {
        ResidueFieldElem {
            value: ModPoly::zero(self.p()),
        }
    }

    pub fn one(&self) -> ResidueFieldElem {
        self.reduce(&ModPoly::one(self.p()))
    }

    pub fn add(&self, a: &ResidueFieldElem, b: &ResidueFieldElem) -> ResidueFieldElem {
        ResidueFieldElem {
            value: a.value.add(&b.value),
        }
    }

    pub fn sub(&self, a: &ResidueFieldElem, b: &ResidueFieldElem) -> ResidueFieldElem {
        ResidueFieldElem {
            value: a.value.sub(&b.value),
        }
    }

    pub fn mul(&self, a: &ResidueFieldElem, b: &ResidueFieldElem) -> ResidueFieldElem {
        self.reduce(&a.value.mul(&b.value))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &ResidueFieldElem) -> Option<ResidueFieldElem> {
        if a.value.is_zero() {
            return None;
        }
        let (g, s, _) = a.value.ext_gcd(&self.modulus);
        debug_assert!(g.is_one(), "modulus is irreducible");
        Some(self.reduce(&s))
    }

    fn scale_int(&self, a: &ResidueFieldElem, k: usize) -> ResidueFieldElem {
        ResidueFieldElem {
            value: a.value.scale(&BigInt::from(k)),
        }
    }

    fn trim(&self, mut f: Vec<ResidueFieldElem>) -> Vec<ResidueFieldElem> {
        while f.last().is_some_and(|c| c.is_zero()) {
            f.pop();
        }
        f
    }

    /// Remainder of `f` by nonzero `g` in `K[y]`, coefficients ascending.
    pub fn poly_rem(&self, f: &[ResidueFieldElem], g: &[ResidueFieldElem]) -> Vec<ResidueFieldElem> {
        let g = self.trim(g.to_vec());
        let dg = g.len() - 1;
        let inv = self.inv(g.last().unwrap()).expect("nonzero leading coefficient");
        let mut r = self.trim(f.to_vec());
        while r.len() > dg {
            let shift = r.len() - 1 - dg;
            let c = self.mul(r.last().unwrap(), &inv);
            for (j, gj) in g.iter().enumerate() {
                r[shift + j] = self.sub(&r[shift + j], &self.mul(&c, gj));
            }
            r = self.trim(r);
        }
        r
    }

    /// Degree of the monic gcd in `K[y]`.
    pub fn poly_gcd_degree(&self, f: &[ResidueFieldElem], g: &[ResidueFieldElem]) -> Option<usize> {
        let (mut a, mut b) = (self.trim(f.to_vec()), self.trim(g.to_vec()));
        while !b.is_empty() {
            let r = self.poly_rem(&a, &b);
            a = b;
            b = r;
        }
        a.len().checked_sub(1)
    }

    pub fn poly_derivative(&self, f: &[ResidueFieldElem]) -> Vec<ResidueFieldElem> {
        self.trim(
            f.iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| self.scale_int(c, i))
                .collect(),
        )
    }

    /// No repeated roots in an algebraic closure: `gcd(f, f') = 1`.
    pub fn is_separable(&self, f: &[ResidueFieldElem]) -> bool {
        let f = self.trim(f.to_vec());
        if f.is_empty() {
            return false;
        }
        self.poly_gcd_degree(&f, &self.poly_derivative(&f)) == Some(0)
    }
}

impl ResidueFieldElem {
    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
}

impl fmt::Display for ResidueFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Debug for ResidueFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.value)
    }
}
