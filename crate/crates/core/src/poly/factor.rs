//! Factorization over `F_p`: squarefree decomposition, distinct-degree
//! splitting and Cantor-Zassenhaus equal-degree splitting with a fixed seed.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::modp::ModPoly;

const SEED: u64 = 0x006d_6f6e_6f64_6976;

/// Monic irreducible factors with multiplicities, sorted by degree and then
/// by coefficients. The unit in front of `f` is dropped.
pub fn factor_mod_p(f: &ModPoly) -> Vec<(ModPoly, u32)> {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut out: Vec<(ModPoly, u32)> = Vec::new();
    for (g, e) in squarefree_decomposition(&f.monic()) {
        for (h, d) in distinct_degree(&g) {
            for irr in equal_degree(&h, d, &mut rng) {
                out.push((irr, e));
            }
        }
    }
    out.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    // identical factors can only come from separate squarefree layers
    let mut merged: Vec<(ModPoly, u32)> = Vec::new();
    for (g, e) in out {
        match merged.last_mut() {
            Some((h, k)) if *h == g => *k += e,
            _ => merged.push((g, e)),
        }
    }
    merged
}

/// `f = prod g_i^i` with each `g_i` squarefree and pairwise coprime.
pub fn squarefree_decomposition(f: &ModPoly) -> Vec<(ModPoly, u32)> {
    let p = f.modulus().clone();
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let mut c = f.gcd(&f.derivative());
    let mut w = f.div_exact(&c);
    let mut i = 1u32;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.div_exact(&y);
        if fac.degree().unwrap_or(0) > 0 {
            out.push((fac, i));
        }
        w = y;
        c = c.div_exact(&w);
        i += 1;
    }
    if !c.is_one() {
        // c is a p-th power; p <= deg c so p fits in usize here
        let pu = p.to_usize().expect("p bounded by degree");
        let root_coeffs: Vec<BigInt> = c.coeffs().iter().step_by(pu).cloned().collect();
        let root = ModPoly::new(&p, root_coeffs);
        for (g, e) in squarefree_decomposition(&root) {
            out.push((g, e * pu as u32));
        }
    }
    out
}

/// Split a squarefree monic `f` into products of irreducibles of equal
/// degree `d`.
pub fn distinct_degree(f: &ModPoly) -> Vec<(ModPoly, usize)> {
    let p = f.modulus().clone();
    let x = ModPoly::x(&p);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = x.rem(&rest);
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = h.pow_mod(&p, &rest);
        let g = h.sub(&x).gcd(&rest);
        if !g.is_one() {
            rest = rest.div_exact(&g);
            h = h.rem(&rest);
            out.push((g, d));
        }
        d += 1;
    }
    if rest.degree().unwrap_or(0) > 0 {
        let dr = rest.degree().unwrap();
        out.push((rest, dr));
    }
    out
}

fn random_poly(p: &BigInt, deg_bound: usize, rng: &mut ChaCha8Rng) -> ModPoly {
    let words = (p.bits() / 64 + 2) as usize;
    let coeffs = (0..deg_bound)
        .map(|_| {
            let mut v = BigInt::zero();
            for _ in 0..words {
                v = (v << 64) + BigInt::from(rng.next_u64());
            }
            v
        })
        .collect();
    ModPoly::new(p, coeffs)
}

/// Cantor-Zassenhaus splitting of a product of distinct degree-`d`
/// irreducibles.
pub fn equal_degree(f: &ModPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<ModPoly> {
    let n = f.degree().unwrap_or(0);
    if n == 0 {
        return Vec::new();
    }
    if n == d {
        return vec![f.monic()];
    }
    let p = f.modulus().clone();
    let two = BigInt::from(2);
    loop {
        let a = random_poly(&p, n, rng);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let g = a.gcd(f);
        let split = if !g.is_one() {
            g
        } else if p == two {
            // trace map a + a^2 + ... + a^(2^(d-1))
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul_mod(&t, f);
                acc = acc.add(&t);
            }
            acc.gcd(f)
        } else {
            let e = (num_traits::pow(p.clone(), d) - BigInt::one()) / &two;
            a.pow_mod(&e, f).sub(&ModPoly::one(&p)).gcd(f)
        };
        let ds = split.degree().unwrap_or(0);
        if ds > 0 && ds < n {
            let other = f.div_exact(&split);
            let mut out = equal_degree(&split, d, rng);
            out.extend(equal_degree(&other, d, rng));
            return out;
        }
    }
}

/// Rabin's test: `f` divides `x^(p^n) - x` and shares no factor with
/// `x^(p^(n/q)) - x` for each prime `q | n`.
pub fn is_irreducible(f: &ModPoly) -> bool {
    let Some(n) = f.degree() else { return false };
    if n == 0 {
        return false;
    }
    let p = f.modulus().clone();
    let f = f.monic();
    let x = ModPoly::x(&p);
    let frob = |k: usize| {
        let mut h = x.rem(&f);
        for _ in 0..k {
            h = h.pow_mod(&p, &f);
        }
        h
    };
    let prime_divisors = (2..=n).filter(|q| n % q == 0 && (2..*q).all(|r| q % r != 0));
    for q in prime_divisors {
        if !frob(n / q).sub(&x).gcd(&f).is_one() {
            return false;
        }
    }
    frob(n).sub(&x).rem(&f).is_zero()
}
