//! The `r`-Lambert curve `x^r = y e^{-ry}` and the genus-zero free energies
//! `F₀,₁`, `F₀,₂` in the global coordinate `z`, where `x = z e^{-z^r}` and
//! `y = z^r`.
//!
//! Everything is an exact identity of truncated series, so a check either
//! holds coefficient by coefficient or names the first coefficient where it
//! fails.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;
use thiserror::Error;

use crate::exactmath::{int, rat, Exponent, Rational, SeriesError, TruncatedSeries, Vars};
use crate::hurwitz::HurwitzTable;

/// Largest total degree accepted by [`verify_f02`].
pub const F02_MAX_ORDER: u32 = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MirrorError {
    #[error("truncation {got} out of range: {what}")]
    Order { got: u32, what: &'static str },
    #[error("r must be positive")]
    ZeroR,
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("y(x) from the recursion and from inversion differ at x^{degree}: {ecf} vs {lagrange}")]
    MethodMismatch {
        degree: u32,
        ecf: Rational,
        lagrange: Rational,
    },
}

/// First coefficient where two sides of an identity disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub exponent: Exponent,
    pub lhs: Rational,
    pub rhs: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub mismatch: Option<Mismatch>,
}

impl Check {
    fn compare(name: &str, lhs: &TruncatedSeries, rhs: &TruncatedSeries) -> Self {
        Check {
            name: name.into(),
            mismatch: lhs.first_difference(rhs).map(|(exponent, lhs, rhs)| Mismatch { exponent, lhs, rhs }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub identity: &'static str,
    pub r: u32,
    pub order: u32,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.mismatch.is_none())
    }

    pub fn first_mismatch(&self) -> Option<(&str, &Mismatch)> {
        self.checks.iter().find_map(|c| c.mismatch.as_ref().map(|m| (c.name.as_str(), m)))
    }
}

/// `x(z) = z e^{-z^r}` up to degree `order`.
pub fn x_of_z(r: u32, order: u32) -> Result<TruncatedSeries, MirrorError> {
    if r == 0 {
        return Err(MirrorError::ZeroR);
    }
    let z = TruncatedSeries::x(order);
    let e = TruncatedSeries::monomial(Vars::One, [r, 0], int(-1), order).exp()?;
    Ok(z.mul(&e)?)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectralCurve {
    pub r: u32,
    pub order: u32,
    pub x_of_z: TruncatedSeries,
    pub y_of_x: TruncatedSeries,
}

impl SpectralCurve {
    /// `y e^{-ry} - x^r`, which vanishes on the curve.
    pub fn lambert_residual(&self) -> Result<TruncatedSeries, MirrorError> {
        let y = &self.y_of_x;
        let e = y.scale(&int(-(self.r as i64))).exp()?;
        let xr = TruncatedSeries::monomial(Vars::One, [self.r, 0], int(1), self.order);
        Ok(y.mul(&e)?.sub(&xr)?)
    }
}

/// `y(x) = Σ_d 𝓗ʳ₀,₁(d) xᵈ`, taken from the recursion and checked against
/// Lagrange inversion of `w = y e^{-ry}` in `w = x^r`.
pub fn spectral_y(r: u32, order: u32) -> Result<SpectralCurve, MirrorError> {
    if r == 0 {
        return Err(MirrorError::ZeroR);
    }
    if order < r {
        return Err(MirrorError::Order { got: order, what: "spectral curve needs N >= r" });
    }
    let mut table = HurwitzTable::new(r);
    let by_ecf = TruncatedSeries::from_terms(Vars::One, order, (1..=order).map(|d| ([d, 0], table.get(0, &[d]))));

    let k = order / r;
    let f = TruncatedSeries::monomial(Vars::One, [1, 0], int(r.into()), k).exp()?;
    let in_w = TruncatedSeries::lagrange_invert(&f, k)?.substitute_power(r)?;
    // support sits on multiples of r, so nothing is lost between r·k and N
    let by_lagrange = TruncatedSeries::from_terms(Vars::One, order, in_w.terms().map(|(e, c)| (*e, c.clone())));

    if let Some((e, ecf, lagrange)) = by_ecf.first_difference(&by_lagrange) {
        return Err(MirrorError::MethodMismatch { degree: e[0], ecf, lagrange });
    }
    Ok(SpectralCurve {
        r,
        order,
        x_of_z: x_of_z(r, order)?,
        y_of_x: by_ecf,
    })
}

/// `F₀,₁(x) = Σ_d 𝓗ʳ₀,₁(d)/d · xᵈ`.
pub fn f01(r: u32, order: u32) -> TruncatedSeries {
    let mut table = HurwitzTable::new(r);
    TruncatedSeries::from_terms(
        Vars::One,
        order,
        (1..=order).map(|d| ([d, 0], table.get(0, &[d]) / int(d.into()))),
    )
}

/// `F₀,₂(x₁, x₂) = Σ 𝓗ʳ₀,₂(μ₁, μ₂)/(μ₁μ₂) · x₁^μ₁ x₂^μ₂` to total degree `order`.
pub fn f02(r: u32, order: u32) -> TruncatedSeries {
    let mut table = HurwitzTable::new(r);
    let mut terms = Vec::new();
    for m1 in 1..order {
        for m2 in 1..=order - m1 {
            let c = table.get(0, &[m1, m2]);
            if !c.is_zero() {
                terms.push(([m1, m2], c / int((m1 * m2).into())));
            }
        }
    }
    TruncatedSeries::from_terms(Vars::Two, order, terms)
}

/// Checks `x dF₀,₁/dx = y` and `F₀,₁(x(z)) = z^r/r - z^{2r}/2` up to degree
/// `order`; every coefficient above `2r` must cancel.
pub fn verify_f01(r: u32, order: u32) -> Result<Report, MirrorError> {
    if r == 0 {
        return Err(MirrorError::ZeroR);
    }
    if order < 2 * r {
        return Err(MirrorError::Order { got: order, what: "F01 check needs N >= 2r" });
    }
    let curve = spectral_y(r, order)?;
    let f = f01(r, order);
    let composed = f.compose(&curve.x_of_z)?;
    let closed = TruncatedSeries::from_terms(Vars::One, order, [([r, 0], rat(1, r.into())), ([2 * r, 0], rat(-1, 2))]);
    Ok(Report {
        identity: "F01",
        r,
        order,
        checks: alloc::vec![
            Check::compare("x d/dx F01 = y", &f.euler(), &curve.y_of_x),
            Check::compare("F01(x(z)) closed form", &composed, &closed),
        ],
    })
}

/// Substitutes `xᵢ = x(zᵢ)` into a bivariate series in `x₁, x₂`.
fn in_z(f: &TruncatedSeries, x: &TruncatedSeries, order: u32) -> Result<TruncatedSeries, MirrorError> {
    let mut powers = alloc::vec![TruncatedSeries::one(Vars::One, order)];
    for k in 1..=order as usize {
        let next = powers[k - 1].mul(x)?;
        powers.push(next);
    }
    let mut acc = TruncatedSeries::zero(Vars::Two, order);
    for (e, c) in f.terms() {
        let t = TruncatedSeries::tensor(&powers[e[0] as usize], &powers[e[1] as usize], order)?;
        acc = acc.add(&t.scale(c))?;
    }
    Ok(acc)
}

/// Checks `F₀,₂(x(z₁), x(z₂)) = log((z₁-z₂)/(x₁-x₂)) - (z₁^r + z₂^r)`, its
/// Euler-operator form `(1/r)(z₁∂₁ + z₂∂₂)F₀,₂ = (x₁z₁^r - x₂z₂^r)/(x₁-x₂) - (z₁^r + z₂^r)`,
/// symmetry, and `F₀,₂(x, 0) = 0`, to total degree `order`.
pub fn verify_f02(r: u32, order: u32) -> Result<Report, MirrorError> {
    if r == 0 {
        return Err(MirrorError::ZeroR);
    }
    if order == 0 || order > F02_MAX_ORDER {
        return Err(MirrorError::Order { got: order, what: "F02 check needs 1 <= N <= 16" });
    }
    let x = x_of_z(r, order + 1)?;
    let lhs = in_z(&f02(r, order), &x.truncate(order), order)?;

    let zr = TruncatedSeries::monomial(Vars::Two, [r, 0], int(1), order)
        .add(&TruncatedSeries::monomial(Vars::Two, [0, r], int(1), order))?;
    let dd_x = TruncatedSeries::divided_difference(&x, order)?;
    let shifted = dd_x.sub(&TruncatedSeries::one(Vars::Two, order))?;
    let rhs = shifted.log1p()?.neg().sub(&zr)?;

    let xz = x.mul(&TruncatedSeries::monomial(Vars::One, [r, 0], int(1), order + 1))?;
    let dd_xz = TruncatedSeries::divided_difference(&xz, order)?;
    let pde_rhs = dd_xz.mul(&dd_x.reciprocal()?)?.sub(&zr)?;
    let pde_lhs = lhs.euler().scale(&rat(1, r.into()));

    let boundary = TruncatedSeries::from_terms(
        Vars::Two,
        order,
        rhs.terms().filter(|(e, _)| e[0] == 0 || e[1] == 0).map(|(e, c)| (*e, c.clone())),
    );
    Ok(Report {
        identity: "F02",
        r,
        order,
        checks: alloc::vec![
            Check::compare("F02(x(z1),x(z2)) closed form", &lhs, &rhs),
            Check::compare("Euler operator form", &pde_lhs, &pde_rhs),
            Check::compare("symmetry", &lhs, &lhs.swap_vars()),
            Check::compare("F02 vanishes on the axes", &boundary, &TruncatedSeries::zero(Vars::Two, order)),
        ],
    })
}

/// Human-readable one-line summary of a report.
pub fn summary(report: &Report) -> String {
    match report.first_mismatch() {
        None => format!("{} r={} N={}: pass", report.identity, report.r, report.order),
        Some((name, m)) => format!(
            "{} r={} N={}: FAIL {} at {:?}: {} vs {}",
            report.identity, report.r, report.order, name, m.exponent, m.lhs, m.rhs
        ),
    }
}

#[cfg(test)]
mod tests;
