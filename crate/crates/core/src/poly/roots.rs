use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Field, Poly};
use crate::arith;
use crate::error::{Error, Result};

/// `f, f', -rem(f, f'), ...` down to a constant.
pub fn sturm_sequence<T: Field>(f: &Poly<T>) -> Vec<Poly<T>> {
    let mut seq = vec![f.clone()];
    let mut next = f.derivative();
    while !next.is_zero() {
        let r = seq.last().unwrap().rem(&next).expect("nonzero");
        seq.push(next);
        next = -r;
    }
    seq
}

fn sign_changes<T: Field + Signed>(signs: impl Iterator<Item = T>) -> usize {
    let mut last: Option<bool> = None;
    let mut count = 0;
    for s in signs.filter(|s| !s.is_zero()) {
        let pos = s.is_positive();
        if last.is_some_and(|l| l != pos) {
            count += 1;
        }
        last = Some(pos);
    }
    count
}

/// Distinct real roots of a squarefree polynomial, from the sign changes of
/// its Sturm sequence at minus and plus infinity.
pub fn count_real_roots<T: Field + Signed + PartialOrd>(f: &Poly<T>) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if !f.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let seq = sturm_sequence(f);
    let at_pos_inf = seq.iter().map(|p| p.leading().unwrap().clone());
    let at_neg_inf = seq.iter().map(|p| {
        let l = p.leading().unwrap().clone();
        if p.degree().unwrap() % 2 == 1 {
            -l
        } else {
            l
        }
    });
    Ok(sign_changes(at_neg_inf) - sign_changes(at_pos_inf))
}

/// All rational roots (without multiplicity), ascending, by testing every
/// `±d/e` with `d | a_0` and `e | lc`.
pub fn rational_roots(f: &Poly<BigInt>) -> Result<Vec<BigRational>> {
    if f.is_zero() {
        return Ok(Vec::new());
    }
    let mut roots = Vec::new();
    let shift = f.coeffs().iter().take_while(|c| c.is_zero()).count();
    if shift > 0 {
        roots.push(BigRational::zero());
    }
    let g = Poly::new(f.coeffs()[shift..].to_vec());
    if g.degree().unwrap_or(0) > 0 {
        let num_divs = arith::divisors(&g.coeff(0))?;
        let den_divs = arith::divisors(g.leading().unwrap())?;
        let n = g.degree().unwrap();
        for d in &num_divs {
            for e in &den_divs {
                if !d.gcd(e).is_one() {
                    continue;
                }
                for cand in [d.clone(), -d.clone()] {
                    // e^n g(cand/e), evaluated in integers
                    let mut acc = BigInt::zero();
                    let mut dpow = BigInt::from(1);
                    let mut epow = num_traits::pow(e.clone(), n);
                    for (i, c) in g.coeffs().iter().enumerate() {
                        acc += c * &dpow * &epow;
                        if i < n {
                            dpow *= &cand;
                            epow /= e;
                        }
                    }
                    if acc.is_zero() {
                        roots.push(BigRational::new(cand, e.clone()));
                    }
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}
