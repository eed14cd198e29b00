use super::{Poly, Scalar};
use crate::error::{Error, Result};

/// The base-`phi` expansion `sum a_j phi^j` with `deg a_j < deg phi`.
#[derive(Clone, PartialEq, Eq)]
pub struct Development<T> {
    pub phi: Poly<T>,
    pub terms: Vec<Poly<T>>,
}

impl<T: Scalar + std::fmt::Display> std::fmt::Debug for Development<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Development")
            .field("phi", &self.phi)
            .field("terms", &self.terms)
            .finish()
    }
}

impl<T: Scalar> Development<T> {
    pub fn reconstruct(&self) -> Poly<T> {
        self.terms
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, a| &(&acc * &self.phi) + a)
    }

    /// `a_j`, or zero past the end.
    pub fn term(&self, j: usize) -> Poly<T> {
        self.terms.get(j).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Repeated division of `big_phi` by the monic `phi`.
pub fn phi_development<T: Scalar>(big_phi: &Poly<T>, phi: &Poly<T>) -> Result<Development<T>> {
    if !big_phi.is_monic() || !phi.is_monic() {
        return Err(Error::NotMonic);
    }
    if phi.degree() == Some(0) {
        return Err(Error::InvalidInput("phi must have degree at least 1".into()));
    }
    let mut terms = Vec::new();
    let mut q = big_phi.clone();
    while !q.is_zero() {
        let (next, r) = q.divrem_monic(phi)?;
        terms.push(r);
        q = next;
    }
    Ok(Development {
        phi: phi.clone(),
        terms,
    })
}
