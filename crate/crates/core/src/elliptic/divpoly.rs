use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Mutex;

use crate::poly::{Field, Poly};

use super::Weierstrass;

/// Indices up to this bound are kept in the per-engine cache.
pub const DEFAULT_MEMO_CAP: u32 = 25;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Model {
    /// `Psi_n` in `x`; the even factor is `Psi_2 = 2y + a1 x + a3`.
    Weierstrass,
    /// `F_n` in `T`; the even factor is `F_2 = T_1 / T`.
    Fueter,
}

/// `Psi_n` (or `F_n`) written as `poly` times the second division
/// polynomial when `has_even_factor` is set. Only `poly` lives in the
/// polynomial ring of the model.
#[derive(Clone, Debug, PartialEq)]
pub struct DivisionPoly<T: Field> {
    pub n: u32,
    pub model: Model,
    pub has_even_factor: bool,
    pub poly: Poly<T>,
}

/// Memoized division polynomials of one model. The square of the even
/// factor is a polynomial (`rel`) and is substituted wherever two even
/// factors meet.
pub struct DivisionPolynomials<T: Field> {
    model: Model,
    /// reduced parts of index 3 and 4
    base: [Poly<T>; 2],
    rel: Poly<T>,
    cap: u32,
    memo: Mutex<BTreeMap<u32, Poly<T>>>,
}

impl<T: Field> Clone for DivisionPolynomials<T> {
    fn clone(&self) -> Self {
        DivisionPolynomials {
            model: self.model,
            base: self.base.clone(),
            rel: self.rel.clone(),
            cap: self.cap,
            memo: Mutex::new(self.memo.lock().unwrap().clone()),
        }
    }
}

fn k<T: Field>(n: i64) -> T {
    let mut acc = T::zero();
    for _ in 0..n.abs() {
        acc = acc + T::one();
    }
    if n < 0 {
        -acc
    } else {
        acc
    }
}

/// `4T^2 + c T + 4`
pub fn fueter_relation<T: Field>(c: &T) -> Poly<T> {
    Poly::new(vec![k(4), c.clone(), k(4)])
}

/// One step of the doubling recurrence on the reduced parts, where `b2` is
/// the square of the relation and `idx(j)` yields the reduced part of index
/// `j`. Works for polynomials and for values alike.
fn step<R>(model: Model, n: u32, b2: &R, idx: &mut dyn FnMut(u32) -> R) -> R
where
    R: Clone + Add<Output = R> + Sub<Output = R> + Mul<Output = R> + Neg<Output = R>,
{
    let m = n / 2;
    let cube = |r: R| r.clone() * r.clone() * r;
    let sq = |r: R| r.clone() * r;
    if n % 2 == 1 {
        let (pm2, pm, pm1, pp1) = (idx(m + 2), idx(m), idx(m - 1), idx(m + 1));
        let left = pm2 * cube(pm);
        let right = pm1 * cube(pp1);
        let v = if m.is_multiple_of(2) {
            b2.clone() * left - right
        } else {
            left - b2.clone() * right
        };
        match model {
            Model::Fueter if m.is_multiple_of(2) => -v,
            _ => v,
        }
    } else {
        let (pm, pm2, pmm1, pmm2, pm1) = (idx(m), idx(m + 2), idx(m - 1), idx(m - 2), idx(m + 1));
        let v = pm * (pm2 * sq(pmm1) - pmm2 * sq(pm1));
        match model {
            Model::Fueter if m % 2 == 1 => -v,
            _ => v,
        }
    }
}

impl<T: Field> DivisionPolynomials<T> {
    pub fn weierstrass(e: &Weierstrass<T>) -> Self {
        let (b2, b4, b6, b8) = (e.b2.clone(), e.b4.clone(), e.b6.clone(), e.b8.clone());
        let p3 = Poly::new(vec![
            b8.clone(),
            k::<T>(3) * b6.clone(),
            k::<T>(3) * b4.clone(),
            b2.clone(),
            k(3),
        ]);
        let p4 = Poly::new(vec![
            b4.clone() * b8.clone() - b6.clone() * b6.clone(),
            b2.clone() * b8.clone() - b4.clone() * b6.clone(),
            k::<T>(10) * b8,
            k::<T>(10) * b6,
            k::<T>(5) * b4,
            b2,
            k(2),
        ]);
        Self::from_parts(Model::Weierstrass, p3, p4, e.two_torsion_poly())
    }

    /// Fueter polynomials for `T_1^2 = T(4T^2 + cT + 4)`.
    pub fn fueter(c: &T) -> Self {
        let g3 = Poly::new(vec![k(-3), -c.clone(), k(-6), T::zero(), T::one()]);
        let g4 = Poly::new(vec![k(-2), -c.clone(), k(-10), T::zero(), k(10), c.clone(), k(2)]);
        Self::from_parts(Model::Fueter, g3, g4, fueter_relation(c))
    }

    fn from_parts(model: Model, p3: Poly<T>, p4: Poly<T>, rel: Poly<T>) -> Self {
        DivisionPolynomials {
            model,
            base: [p3, p4],
            rel,
            cap: DEFAULT_MEMO_CAP,
            memo: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn with_memo_cap(mut self, cap: u32) -> Self {
        self.cap = cap;
        self
    }

    pub fn model(&self) -> Model {
        self.model
    }

    /// Square of the even factor as a polynomial in the model variable.
    pub fn relation(&self) -> &Poly<T> {
        &self.rel
    }

    /// Reduced part of index `n`; index 0 is the zero polynomial.
    fn reduced(&self, n: u32) -> Poly<T> {
        if n <= 4 {
            return self.fill(n, &Poly::zero(), &mut HashMap::new());
        }
        let b2 = &self.rel * &self.rel;
        self.fill(n, &b2, &mut HashMap::new())
    }

    fn fill(&self, n: u32, b2: &Poly<T>, scratch: &mut HashMap<u32, Poly<T>>) -> Poly<T> {
        if n <= 4 {
            return match n {
                0 => Poly::zero(),
                1 | 2 => Poly::one(),
                _ => self.base[n as usize - 3].clone(),
            };
        }
        if let Some(p) = self.memo.lock().unwrap().get(&n) {
            return p.clone();
        }
        if let Some(p) = scratch.get(&n) {
            return p.clone();
        }
        let v = step(self.model, n, b2, &mut |j| self.fill(j, b2, scratch));
        if n <= self.cap {
            self.memo.lock().unwrap().insert(n, v.clone());
        } else {
            scratch.insert(n, v.clone());
        }
        v
    }

    /// The `n`-th division polynomial, `n >= 1`.
    pub fn get(&self, n: u32) -> DivisionPoly<T> {
        assert!(n >= 1, "division polynomials are indexed from 1");
        DivisionPoly {
            n,
            model: self.model,
            has_even_factor: n.is_multiple_of(2),
            poly: self.reduced(n),
        }
    }

    /// Reduced part of index `n` evaluated at `x`, by running the recurrence
    /// on values instead of polynomials.
    pub fn eval_reduced(&self, n: u32, x: &T) -> T {
        let r = self.rel.eval(x);
        let b2 = r.clone() * r;
        let mut cache: HashMap<u32, T> = HashMap::new();
        fn go<T: Field>(me: &DivisionPolynomials<T>, n: u32, base: &[T], b2: &T, cache: &mut HashMap<u32, T>) -> T {
            if n <= 4 {
                return base[n as usize].clone();
            }
            if let Some(v) = cache.get(&n) {
                return v.clone();
            }
            let v = step(me.model, n, b2, &mut |j| go(me, j, base, b2, cache));
            cache.insert(n, v.clone());
            v
        }
        let base = [
            T::zero(),
            T::one(),
            T::one(),
            self.base[0].eval(x),
            self.base[1].eval(x),
        ];
        go(self, n, &base, &b2, &mut cache)
    }
}
