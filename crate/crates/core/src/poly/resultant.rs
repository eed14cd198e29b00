use super::{Poly, Scalar};
use crate::error::{Error, Result};

fn pow<T: Scalar>(x: &T, k: usize) -> T {
    num_traits::pow(x.clone(), k)
}

/// Resultant by the subresultant pseudo-remainder sequence. Every division
/// performed is exact in the coefficient domain, so this is correct over Z
/// as well as over fields.
pub fn resultant<T: Scalar>(f: &Poly<T>, g: &Poly<T>) -> Result<T> {
    let (Some(mut da), Some(mut db)) = (f.degree(), g.degree()) else {
        return Err(Error::DivisionByZero);
    };
    let (mut a, mut b) = (f.clone(), g.clone());
    let mut negate = false;
    if da < db {
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut da, &mut db);
        negate ^= da % 2 == 1 && db % 2 == 1;
    }
    if db == 0 {
        let r = pow(b.leading().unwrap(), da);
        return Ok(if negate { -r } else { r });
    }
    let mut g_ = T::one();
    let mut h = T::one();
    loop {
        let delta = da - db;
        negate ^= da % 2 == 1 && db % 2 == 1;
        let r = a.pseudo_rem(&b)?;
        a = b;
        da = db;
        if r.is_zero() {
            return Ok(T::zero());
        }
        b = r.div_scalar(&(g_.clone() * pow(&h, delta)));
        db = b.degree().unwrap();
        g_ = a.leading().unwrap().clone();
        h = match delta {
            0 => h,
            1 => g_.clone(),
            d => pow(&g_, d) / pow(&h, d - 1),
        };
        if db == 0 {
            let lb = b.leading().unwrap();
            let r = pow(lb, da) / pow(&h, da - 1);
            return Ok(if negate { -r } else { r });
        }
    }
}

/// `(-1)^(d(d-1)/2) Res(f, f') / lc(f)`.
pub fn discriminant<T: Scalar>(f: &Poly<T>) -> Result<T> {
    let d = match f.degree() {
        None => return Err(Error::DivisionByZero),
        Some(0) => return Err(Error::Constant),
        Some(d) => d,
    };
    if d == 1 {
        return Ok(T::one());
    }
    let r = resultant(f, &f.derivative())? / f.leading().unwrap().clone();
    Ok(if (d * (d - 1) / 2) % 2 == 1 { -r } else { r })
}
