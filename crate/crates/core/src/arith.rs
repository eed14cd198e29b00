//! Big-integer utilities: p-adic valuations, factorization with primality
//! certification, squarefree tests and quadratic residue symbols.

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Below this bound the fixed Miller-Rabin bases are a proof of primality.
pub const DETERMINISTIC_BOUND: u64 = 341_550_071_728_321;

const TRIAL_LIMIT: u32 = 1_000_000;
const MR_BASES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Largest `k` with `p^k | x`.
pub fn vp(x: &BigInt, p: &BigInt) -> Result<u32> {
    if x.is_zero() {
        return Err(Error::InfiniteValuation);
    }
    if p <= &BigInt::one() {
        return Err(Error::NotPrime(p.clone()));
    }
    let mut k = 0;
    let mut x = x.clone();
    loop {
        let (q, r) = x.div_rem(p);
        if !r.is_zero() {
            return Ok(k);
        }
        x = q;
        k += 1;
    }
}

/// Valuation of a nonzero rational, `vp(num) - vp(den)`.
pub fn vp_rat(x: &BigRational, p: &BigInt) -> Result<i64> {
    if x.is_zero() {
        return Err(Error::InfiniteValuation);
    }
    Ok(vp(x.numer(), p)? as i64 - vp(x.denom(), p)? as i64)
}

/// How much a reported prime factor can be trusted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Primality {
    Composite,
    /// Proven: below [`DETERMINISTIC_BOUND`] or found by trial division.
    Prime,
    /// Passed every strong probable-prime base but is too large for the
    /// fixed bases to constitute a proof.
    ProbablePrime,
}

pub fn primality(n: &BigInt) -> Primality {
    if n < &BigInt::from(2) {
        return Primality::Composite;
    }
    if let Some(small) = n.to_u64() {
        if small < 4 {
            return Primality::Prime;
        }
    }
    for &b in &MR_BASES {
        let b = BigInt::from(b);
        if &b == n {
            return Primality::Prime;
        }
        if n.is_multiple_of(&b) {
            return Primality::Composite;
        }
    }
    let one = BigInt::one();
    let n_minus = n - &one;
    let s = n_minus.trailing_zeros().unwrap_or(0);
    let d = &n_minus >> s;
    'bases: for &b in &MR_BASES {
        let mut x = BigInt::from(b).modpow(&d, n);
        if x == one || x == n_minus {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus {
                continue 'bases;
            }
        }
        return Primality::Composite;
    }
    if n < &BigInt::from(DETERMINISTIC_BOUND) {
        Primality::Prime
    } else {
        Primality::ProbablePrime
    }
}

pub fn is_prime(n: &BigInt) -> bool {
    primality(n) != Primality::Composite
}

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_LIMIT as usize;
        let mut composite = vec![false; n + 1];
        let mut out = Vec::new();
        for i in 2..=n {
            if !composite[i] {
                out.push(i as u32);
                let mut j = i * i;
                while j <= n {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        out
    })
}

/// Optional wall-clock limit for factorization work.
#[derive(Debug, Clone, Copy, Default)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { deadline: None }
    }

    pub fn from_millis(ms: u64) -> Self {
        Budget {
            deadline: Some(Instant::now() + Duration::from_millis(ms)),
        }
    }

    pub fn check(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() > d => Err(Error::BudgetExceeded),
            _ => Ok(()),
        }
    }
}

/// Complete factorization `sign * prod p^e` of a nonzero integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub sign: i8,
    /// Strictly increasing primes with positive exponents.
    pub factors: Vec<(BigInt, u32)>,
    /// Factors that are only strong probable primes.
    pub probable: Vec<BigInt>,
}

impl Factorization {
    pub fn product(&self) -> BigInt {
        let mut acc = BigInt::from(self.sign);
        for (p, e) in &self.factors {
            acc *= num_traits::pow(p.clone(), *e as usize);
        }
        acc
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigInt> {
        self.factors.iter().map(|(p, _)| p)
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, e)| *e == 1)
    }

    pub fn is_certified(&self) -> bool {
        self.probable.is_empty()
    }
}

pub fn factor(x: &BigInt) -> Result<Factorization> {
    factor_within(x, &Budget::unlimited())
}

/// Factor a nonzero integer: trial division to 10^6, then Pollard-Brent
/// rho splitting of the cofactor, certifying every prime found.
pub fn factor_within(x: &BigInt, budget: &Budget) -> Result<Factorization> {
    if x.is_zero() {
        return Err(Error::InvalidInput("cannot factor 0".into()));
    }
    let sign = if x.is_negative() { -1 } else { 1 };
    let mut n = x.abs();
    let mut found: Vec<BigInt> = Vec::new();

    for &p in small_primes() {
        if let Some(small) = n.to_u64() {
            let p = p as u64;
            if p * p > small {
                break;
            }
            if small % p != 0 {
                continue;
            }
        }
        let pb = BigInt::from(p);
        if &pb * &pb > n {
            break;
        }
        loop {
            let (q, r) = n.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            found.push(pb.clone());
            n = q;
        }
    }

    let mut probable = Vec::new();
    let mut stack = Vec::new();
    if n > BigInt::one() {
        stack.push(n);
    }
    while let Some(m) = stack.pop() {
        budget.check()?;
        let lim = BigInt::from(TRIAL_LIMIT);
        if m <= (&lim * &lim) {
            // every prime factor below 10^6 was stripped, so m is prime
            found.push(m);
            continue;
        }
        match primality(&m) {
            Primality::Prime => found.push(m),
            Primality::ProbablePrime => {
                probable.push(m.clone());
                found.push(m);
            }
            Primality::Composite => {
                let r = m.sqrt();
                if &r * &r == m {
                    stack.push(r.clone());
                    stack.push(r);
                    continue;
                }
                let d = brent_rho(&m, budget)?;
                stack.push(&m / &d);
                stack.push(d);
            }
        }
    }

    found.sort();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    for p in found {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    probable.sort();
    probable.dedup();
    Ok(Factorization {
        sign,
        factors,
        probable,
    })
}

fn brent_rho(n: &BigInt, budget: &Budget) -> Result<BigInt> {
    let one = BigInt::one();
    let mut c = BigInt::one();
    loop {
        let f = |v: &BigInt| (v * v + &c) % n;
        let mut y = BigInt::from(2);
        let mut r: u64 = 1;
        let mut q = BigInt::one();
        let mut g = BigInt::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        let m: u64 = 128;
        while g == one {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g == one {
                budget.check()?;
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = f(&y);
                    q = (q * (&x - &y).abs()) % n;
                }
                g = q.gcd(n);
                k += m;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = f(&ys);
                g = (&x - &ys).abs().gcd(n);
                if g > one {
                    break;
                }
            }
        }
        if &g != n {
            return Ok(g);
        }
        c += 1;
    }
}

/// True iff no prime square divides `x`.
pub fn is_squarefree(x: &BigInt) -> Result<bool> {
    Ok(factor(x)?.is_squarefree())
}

pub fn is_squarefree_within(x: &BigInt, budget: &Budget) -> Result<bool> {
    Ok(factor_within(x, budget)?.is_squarefree())
}

/// Legendre symbol `(a/p)` for an odd prime `p`, computed as a Jacobi symbol.
pub fn legendre(a: &BigInt, p: &BigInt) -> i8 {
    let mut a = a.mod_floor(p);
    let mut n = p.clone();
    let mut result = 1i8;
    let three = BigInt::from(3);
    let five = BigInt::from(5);
    let eight = BigInt::from(8);
    let four = BigInt::from(4);
    while !a.is_zero() {
        while a.is_even() {
            a >>= 1;
            let r = n.mod_floor(&eight);
            if r == three || r == five {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a.mod_floor(&four) == three && n.mod_floor(&four) == three {
            result = -result;
        }
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        result
    } else {
        0
    }
}

/// Positive divisors of a nonzero integer, ascending.
pub fn divisors(x: &BigInt) -> Result<Vec<BigInt>> {
    let fac = factor(x)?;
    let mut out = vec![BigInt::one()];
    for (p, e) in &fac.factors {
        let mut next = Vec::with_capacity(out.len() * (*e as usize + 1));
        for d in &out {
            let mut pk = d.clone();
            next.push(pk.clone());
            for _ in 0..*e {
                pk *= p;
                next.push(pk.clone());
            }
        }
        out = next;
    }
    out.sort();
    Ok(out)
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// Reduce a rational modulo `p`; `None` when `p` divides the denominator.
pub fn rat_mod(x: &BigRational, p: &BigInt) -> Option<BigInt> {
    let inv = mod_inverse(x.denom(), p)?;
    Some((x.numer() * inv).mod_floor(p))
}

/// JSON number when the value fits in `i64`, decimal string otherwise.
pub fn int_to_json(x: &BigInt) -> serde_json::Value {
    match x.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(x.to_string()),
    }
}
