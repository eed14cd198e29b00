//! First-order Newton polygons with respect to a lift `phi` of an
//! irreducible factor mod `p`, residual polynomials, the index bound and a
//! Dedekind criterion oracle.

use std::fmt::Write as _;

use num_integer::Integer;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::arith;
use crate::error::{Error, Result};
use crate::poly::factor::factor_mod_p;
use crate::poly::modp::ModPoly;
use crate::poly::residue::{ResidueField, ResidueFieldElem};
use crate::poly::{phi_development, Poly};
use crate::{Int, PhiDevelopment, PolyInt};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PolygonSide {
    pub x0: u32,
    pub y0: u32,
    pub x1: u32,
    pub y1: u32,
    pub degree: u32,
}

impl PolygonSide {
    fn new(x0: u32, y0: u32, x1: u32, y1: u32) -> Self {
        let degree = (x1 - x0).gcd(&(y0 - y1));
        PolygonSide { x0, y0, x1, y1, degree }
    }

    /// `(h, e)` with slope `-h/e` in lowest terms.
    pub fn slope_parts(&self) -> (u32, u32) {
        ((self.y0 - self.y1) / self.degree, (self.x1 - self.x0) / self.degree)
    }

    pub fn slope_string(&self) -> String {
        let (h, e) = self.slope_parts();
        format!("-{h}/{e}")
    }

    /// Floor of the side's height at abscissa `x` (assumed inside the side).
    fn floor_at(&self, x: u32) -> u32 {
        let dx = (self.x1 - self.x0) as u64;
        let drop = (self.y0 - self.y1) as u64 * (x - self.x0) as u64;
        // y0 - drop/dx, floored
        ((self.y0 as u64 * dx - drop) / dx) as u32
    }
}

/// Points `(j, v_p(a_j))` (`None` for `a_j = 0`) and the negative-slope part
/// of their lower convex hull.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    pub points: Vec<(u32, Option<u32>)>,
    pub sides: Vec<PolygonSide>,
}

impl NewtonPolygon {
    /// Lower hull of the finite points, keeping only sides of negative slope.
    pub fn from_points(points: Vec<(u32, Option<u32>)>) -> Self {
        let finite: Vec<(i64, i64)> = points
            .iter()
            .filter_map(|&(j, v)| v.map(|v| (j as i64, v as i64)))
            .collect();
        let mut hull: Vec<(i64, i64)> = Vec::new();
        for &c in &finite {
            while hull.len() >= 2 {
                let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
                let cross = (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0);
                if cross <= 0 {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push(c);
        }
        let sides = hull
            .windows(2)
            .take_while(|w| w[1].1 < w[0].1)
            .map(|w| PolygonSide::new(w[0].0 as u32, w[0].1 as u32, w[1].0 as u32, w[1].1 as u32))
            .collect();
        NewtonPolygon { points, sides }
    }

    /// `deg_phi` times the number of lattice points with `x >= 1`, `y >= 1`
    /// on or under the polygon.
    pub fn ind_phi(&self, deg_phi: usize) -> u64 {
        let mut count = 0u64;
        for s in &self.sides {
            for x in s.x0.max(1)..s.x1 {
                count += s.floor_at(x) as u64;
            }
        }
        // the right end of the last side lies at height y1 >= 0; include it
        if let Some(last) = self.sides.last() {
            if last.x1 >= 1 {
                count += last.y1 as u64;
            }
        }
        deg_phi as u64 * count
    }

    /// Length of the negative-slope part.
    pub fn length(&self) -> u32 {
        match (self.sides.first(), self.sides.last()) {
            (Some(a), Some(b)) => b.x1 - a.x0,
            _ => 0,
        }
    }

    pub fn to_json(&self, deg_phi: usize) -> Value {
        json!({
            "points": self.points.iter().map(|&(j, v)| json!([j, v])).collect::<Vec<_>>(),
            "sides": self.sides.iter().map(|s| json!({
                "x0": s.x0, "y0": s.y0, "x1": s.x1, "y1": s.y1,
                "slope": s.slope_string(), "degree": s.degree,
            })).collect::<Vec<_>>(),
            "ind_phi": self.ind_phi(deg_phi),
        })
    }

    /// Character plot: `o` for hull vertices, `*` for other points, `.`
    /// for lattice points counted by the index.
    pub fn render_ascii(&self) -> String {
        let max_x = self.points.iter().map(|p| p.0).max().unwrap_or(0);
        let max_y = self.points.iter().filter_map(|p| p.1).max().unwrap_or(0);
        let vertex = |x: u32, y: u32| {
            self.sides
                .iter()
                .any(|s| (s.x0, s.y0) == (x, y) || (s.x1, s.y1) == (x, y))
        };
        let under = |x: u32, y: u32| {
            y >= 1 && x >= 1 && self.sides.iter().any(|s| s.x0 <= x && x <= s.x1 && y <= s.floor_at(x))
        };
        let mut out = String::new();
        for y in (0..=max_y).rev() {
            let _ = write!(out, "{y:>3} |");
            for x in 0..=max_x {
                let c = if vertex(x, y) {
                    'o'
                } else if self.points.iter().any(|&(j, v)| j == x && v == Some(y)) {
                    '*'
                } else if under(x, y) {
                    '.'
                } else {
                    ' '
                };
                out.push(' ');
                out.push(c);
            }
            out.push('\n');
        }
        let _ = write!(out, "    +");
        for _ in 0..=max_x {
            out.push_str("--");
        }
        out.push('\n');
        let _ = write!(out, "     ");
        for x in 0..=max_x {
            let _ = write!(out, "{:>2}", x % 10);
        }
        out.push('\n');
        out
    }
}

/// The polygon of a development. `a_0 = 0` means `phi` divides `Phi`.
pub fn build_polygon(dev: &PhiDevelopment, p: &Int) -> Result<NewtonPolygon> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p.clone()));
    }
    if dev.term(0).is_zero() {
        return Err(Error::ExactRoot);
    }
    let points = dev
        .terms
        .iter()
        .enumerate()
        .map(|(j, a)| (j as u32, a.min_valuation(p)))
        .collect();
    Ok(NewtonPolygon::from_points(points))
}

pub fn ind_phi(polygon: &NewtonPolygon, deg_phi: usize) -> u64 {
    polygon.ind_phi(deg_phi)
}

#[derive(Clone, Debug)]
pub struct ResidualPolynomial {
    pub side: PolygonSide,
    pub field: ResidueField,
    pub coefficients: Vec<ResidueFieldElem>,
}

impl ResidualPolynomial {
    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn is_separable(&self) -> bool {
        self.field.is_separable(&self.coefficients)
    }
}

/// `R_S(y) = sum_i res(x0 + i e) y^i`, where `res(j)` reduces
/// `a_j / p^(v_p(a_j))` into `F_p[x]/(phi)` for points on the side.
pub fn residual_polynomial(dev: &PhiDevelopment, p: &Int, side: &PolygonSide) -> Result<ResidualPolynomial> {
    let field = ResidueField::new(ModPoly::from_poly(&dev.phi, p));
    let (h, e) = side.slope_parts();
    let mut coefficients = Vec::with_capacity(side.degree as usize + 1);
    for i in 0..=side.degree {
        let j = (side.x0 + i * e) as usize;
        let height = side.y0 - i * h;
        let a = dev.term(j);
        let c = match a.min_valuation(p) {
            Some(v) if v == height => {
                let scale = num_traits::pow(p.clone(), v as usize);
                let unit = a.map(|c| c / &scale);
                field.reduce(&ModPoly::from_poly(&unit, p))
            }
            _ => field.zero(),
        };
        coefficients.push(c);
    }
    Ok(ResidualPolynomial {
        side: *side,
        field,
        coefficients,
    })
}

#[derive(Clone, Debug)]
pub struct PhiReport {
    pub phi: PolyInt,
    /// Exponent of `phi mod p` in `Phi mod p`.
    pub exponent: u32,
    pub development: PhiDevelopment,
    pub polygon: NewtonPolygon,
    pub residuals: Vec<ResidualPolynomial>,
    pub ind_phi: u64,
    pub regular: bool,
}

#[derive(Clone, Debug)]
pub struct IndexReport {
    pub p: Int,
    pub per_phi: Vec<PhiReport>,
    pub ind_p_lower_bound: u64,
    pub exact: bool,
}

impl IndexReport {
    /// `Some(ind_p)` when the bound is known to be an equality.
    pub fn index(&self) -> Option<u64> {
        self.exact.then_some(self.ind_p_lower_bound)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "p": arith::int_to_json(&self.p),
            "per_phi": self.per_phi.iter().map(|r| json!({
                "phi": r.phi.to_string(),
                "exponent": r.exponent,
                "development": r.development.terms.iter().map(|a| a.to_string()).collect::<Vec<_>>(),
                "polygon": r.polygon.to_json(r.phi.degree().unwrap_or(0)),
                "ind_phi": r.ind_phi,
                "regular": r.regular,
            })).collect::<Vec<_>>(),
            "ind_p_lower_bound": self.ind_p_lower_bound,
            "exact": self.exact,
        })
    }
}

fn phi_report(big_phi: &PolyInt, phi: PolyInt, exponent: u32, p: &Int) -> Result<PhiReport> {
    let development = phi_development(big_phi, &phi)?;
    let polygon = build_polygon(&development, p)?;
    let residuals = polygon
        .sides
        .iter()
        .map(|s| residual_polynomial(&development, p, s))
        .collect::<Result<Vec<_>>>()?;
    let regular = residuals.iter().all(|r| r.is_separable());
    let ind_phi = polygon.ind_phi(phi.degree().unwrap_or(0));
    Ok(PhiReport {
        phi,
        exponent,
        development,
        polygon,
        residuals,
        ind_phi,
        regular,
    })
}

/// The index bound from the first-order polygons of the repeated factors
/// of `Phi mod p`. Supplied lifts replace the default lifts of the factors
/// they reduce to; a lift matching no factor is rejected.
pub fn index_report(big_phi: &PolyInt, p: &Int, lifts: Option<&[PolyInt]>) -> Result<IndexReport> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p.clone()));
    }
    if !big_phi.is_monic() {
        return Err(Error::NotMonic);
    }
    if big_phi.degree().unwrap_or(0) == 0 {
        return Err(Error::Constant);
    }
    if !big_phi.to_rat().is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let factors = factor_mod_p(&ModPoly::from_poly(big_phi, p));
    let lifts = lifts.unwrap_or(&[]);
    for l in lifts {
        let reduced = ModPoly::from_poly(l, p);
        if !l.is_monic() || !factors.iter().any(|(g, _)| *g == reduced) {
            return Err(Error::BadLift {
                lift: l.to_string(),
                p: p.clone(),
            });
        }
    }
    let mut per_phi = Vec::new();
    for (g, e) in factors.iter().filter(|(_, e)| *e >= 2) {
        let supplied = lifts.iter().find(|l| ModPoly::from_poly(l, p) == *g);
        let report = match supplied {
            Some(l) => phi_report(big_phi, l.clone(), *e, p)?,
            None => {
                // a lift dividing Phi over Z is replaced by phi + k p; only
                // finitely many of these can divide Phi
                let mut phi = g.lift();
                loop {
                    match phi_report(big_phi, phi.clone(), *e, p) {
                        Err(Error::ExactRoot) => phi = &phi + &Poly::constant(p.clone()),
                        r => break r?,
                    }
                }
            }
        };
        per_phi.push(report);
    }
    let ind_p_lower_bound = per_phi.iter().map(|r| r.ind_phi).sum();
    let exact = per_phi.iter().all(|r| r.regular);
    Ok(IndexReport {
        p: p.clone(),
        per_phi,
        ind_p_lower_bound,
        exact,
    })
}

/// Dedekind's criterion: with `Phi = prod g_i^(e_i) mod p`, `g = prod g_i`,
/// `h` a lift of `Phi / g` and `F = (g h - Phi) / p`, the order `Z[theta]`
/// is `p`-maximal iff `gcd(F, g, h) = 1` mod `p`.
pub fn dedekind_p_maximal(big_phi: &PolyInt, p: &Int) -> Result<bool> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p.clone()));
    }
    if !big_phi.is_monic() {
        return Err(Error::NotMonic);
    }
    let reduced = ModPoly::from_poly(big_phi, p);
    let factors = factor_mod_p(&reduced);
    let g_bar = factors.iter().fold(ModPoly::one(p), |acc, (g, _)| acc.mul(g));
    let h_bar = reduced.div_exact(&g_bar);
    let (g, h) = (g_bar.lift(), h_bar.lift());
    let diff = &(&g * &h) - big_phi;
    let f = diff.map(|c| {
        let (q, r) = c.div_rem(p);
        debug_assert!(r.is_zero());
        q
    });
    let f_bar = ModPoly::from_poly(&f, p);
    let common = f_bar.gcd(&g_bar).gcd(&h_bar);
    Ok(common.degree() == Some(0))
}

/// `Phi mod p` factors with exponents, using least non-negative lifts.
pub fn default_lifts(big_phi: &PolyInt, p: &Int) -> Vec<(PolyInt, u32)> {
    factor_mod_p(&ModPoly::from_poly(big_phi, p))
        .into_iter()
        .map(|(g, e)| (g.lift(), e))
        .collect()
}

#[cfg(test)]
mod tests;
