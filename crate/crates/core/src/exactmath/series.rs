use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use thiserror::Error;

use super::rational::{int, Rational};

/// Number of variables of a series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vars {
    One,
    Two,
}

impl Vars {
    pub fn count(self) -> usize {
        match self {
            Vars::One => 1,
            Vars::Two => 2,
        }
    }
}

/// Exponent of a monomial. Univariate series keep the second slot at zero.
pub type Exponent = [u32; 2];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("variable count mismatch: {0:?} vs {1:?}")]
    VarsMismatch(Vars, Vars),
    #[error("operation requires a univariate series")]
    NotUnivariate,
    #[error("series must have zero constant term")]
    NonzeroConstant,
    #[error("series must have nonzero constant term")]
    ZeroConstant,
    #[error("truncation degree {got} too low, need at least {needed}")]
    TruncationTooLow { needed: u32, got: u32 },
    #[error("lagrange inversion routes disagree at degree {degree}")]
    InversionMismatch { degree: u32 },
}

/// A formal power series in one or two variables, known up to (total) degree `order`.
///
/// Coefficients are stored sparsely; an absent exponent is a zero coefficient.
/// Equality compares coefficients up to the smaller of the two truncations.
#[derive(Clone, Debug)]
pub struct TruncatedSeries {
    vars: Vars,
    order: u32,
    coeffs: BTreeMap<Exponent, Rational>,
}

fn total(e: Exponent) -> u32 {
    e[0] + e[1]
}

impl TruncatedSeries {
    pub fn zero(vars: Vars, order: u32) -> Self {
        TruncatedSeries {
            vars,
            order,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Vars, c: Rational, order: u32) -> Self {
        Self::monomial(vars, [0, 0], c, order)
    }

    pub fn one(vars: Vars, order: u32) -> Self {
        Self::constant(vars, Rational::one(), order)
    }

    /// `c · z^e`, dropped if beyond the truncation.
    pub fn monomial(vars: Vars, e: Exponent, c: Rational, order: u32) -> Self {
        let mut s = Self::zero(vars, order);
        s.set(e, c);
        s
    }

    /// The univariate coordinate `x`.
    pub fn x(order: u32) -> Self {
        Self::monomial(Vars::One, [1, 0], Rational::one(), order)
    }

    /// Coordinate `z1` (`which == 0`) or `z2` (`which == 1`) of a bivariate series.
    pub fn z(which: usize, order: u32) -> Self {
        let mut e = [0, 0];
        e[which] = 1;
        Self::monomial(Vars::Two, e, Rational::one(), order)
    }

    /// Univariate series from a dense coefficient list `c_0, c_1, ...`.
    pub fn from_dense(coeffs: &[Rational], order: u32) -> Self {
        let mut s = Self::zero(Vars::One, order);
        for (k, c) in coeffs.iter().enumerate() {
            s.set([k as u32, 0], c.clone());
        }
        s
    }

    pub fn from_terms<I>(vars: Vars, order: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, Rational)>,
    {
        let mut s = Self::zero(vars, order);
        for (e, c) in terms {
            let cur = s.coeff(e);
            s.set(e, cur + c);
        }
        s
    }

    fn set(&mut self, e: Exponent, c: Rational) {
        debug_assert!(self.vars == Vars::Two || e[1] == 0);
        if total(e) > self.order {
            return;
        }
        if c.is_zero() {
            self.coeffs.remove(&e);
        } else {
            self.coeffs.insert(e, c);
        }
    }

    pub fn vars(&self) -> Vars {
        self.vars
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeff(&self, e: Exponent) -> Rational {
        self.coeffs.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of `x^k` of a univariate series.
    pub fn at(&self, k: u32) -> Rational {
        self.coeff([k, 0])
    }

    /// Nonzero terms in exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff([0, 0])
    }

    pub fn truncate(&self, order: u32) -> Self {
        let order = order.min(self.order);
        TruncatedSeries {
            vars: self.vars,
            order,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(e, _)| total(**e) <= order)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    fn same_vars(&self, other: &Self) -> Result<(), SeriesError> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(SeriesError::VarsMismatch(self.vars, other.vars))
        }
    }

    fn require_univariate(&self) -> Result<(), SeriesError> {
        match self.vars {
            Vars::One => Ok(()),
            Vars::Two => Err(SeriesError::NotUnivariate),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.same_vars(other)?;
        let mut out = self.truncate(other.order);
        for (e, c) in &other.coeffs {
            if total(*e) <= out.order {
                let cur = out.coeff(*e);
                out.set(*e, cur + c);
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.vars, self.order);
        if c.is_zero() {
            return out;
        }
        for (e, v) in &self.coeffs {
            out.coeffs.insert(*e, v * c);
        }
        out
    }

    /// Cauchy product truncated at the smaller truncation.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.same_vars(other)?;
        let order = self.order.min(other.order);
        let mut acc: BTreeMap<Exponent, Rational> = BTreeMap::new();
        for (ea, ca) in &self.coeffs {
            if total(*ea) > order {
                continue;
            }
            for (eb, cb) in &other.coeffs {
                let e = [ea[0] + eb[0], ea[1] + eb[1]];
                if total(e) > order {
                    continue;
                }
                *acc.entry(e).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(TruncatedSeries {
            vars: self.vars,
            order,
            coeffs: acc,
        })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.vars, self.order);
        for _ in 0..k {
            acc = acc.mul(self).expect("same vars");
        }
        acc
    }

    /// `f ∘ g` for univariate `f` and `g` with zero constant term.
    ///
    /// The result is known up to `min(f.order, g.order)`, since every term
    /// of `g^k` has degree at least `k`.
    pub fn compose(&self, g: &Self) -> Result<Self, SeriesError> {
        self.require_univariate()?;
        if !g.constant_term().is_zero() {
            return Err(SeriesError::NonzeroConstant);
        }
        let order = self.order.min(g.order);
        let g = g.truncate(order);
        let top = self.coeffs.keys().map(|e| e[0]).max().unwrap_or(0).min(order);
        let mut acc = Self::constant(g.vars, self.at(top), order);
        for k in (0..top).rev() {
            acc = acc.mul(&g)?;
            let c = acc.constant_term() + self.at(k);
            acc.set([0, 0], c);
        }
        Ok(acc)
    }

    /// `log(1 + f)` for `f` with zero constant term.
    pub fn log1p(&self) -> Result<Self, SeriesError> {
        if !self.constant_term().is_zero() {
            return Err(SeriesError::NonzeroConstant);
        }
        let mercator = Self::from_terms(
            Vars::One,
            self.order,
            (1..=self.order).map(|k| {
                let sign = if k % 2 == 1 { 1 } else { -1 };
                ([k, 0], Rational::new(sign.into(), k.into()))
            }),
        );
        mercator.compose(self)
    }

    /// `exp(f)` for `f` with zero constant term.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.constant_term().is_zero() {
            return Err(SeriesError::NonzeroConstant);
        }
        let mut term = Rational::one();
        let mut coeffs = Vec::with_capacity(self.order as usize + 1);
        for k in 0..=self.order {
            if k > 0 {
                term /= int(k as i64);
            }
            coeffs.push(term.clone());
        }
        Self::from_dense(&coeffs, self.order).compose(self)
    }

    /// `1 / f` for `f` with nonzero constant term.
    pub fn reciprocal(&self) -> Result<Self, SeriesError> {
        let c = self.constant_term();
        if c.is_zero() {
            return Err(SeriesError::ZeroConstant);
        }
        let inv = c.recip();
        // 1/f = inv · 1/(1 + h) with h = f·inv - 1
        let mut h = self.scale(&inv);
        h.set([0, 0], Rational::zero());
        let geometric = Self::from_terms(
            Vars::One,
            self.order,
            (0..=self.order).map(|k| ([k, 0], int(if k % 2 == 0 { 1 } else { -1 }))),
        );
        Ok(geometric.compose(&h)?.scale(&inv))
    }

    /// `d/dx` of a univariate series; the truncation drops by one.
    pub fn derivative(&self) -> Result<Self, SeriesError> {
        self.require_univariate()?;
        let order = self.order.saturating_sub(1);
        Ok(Self::from_terms(
            Vars::One,
            order,
            self.coeffs
                .iter()
                .filter(|(e, _)| e[0] > 0)
                .map(|(e, c)| ([e[0] - 1, 0], c * int(e[0] as i64))),
        ))
    }

    /// Euler operator `Σ z_i ∂/∂z_i`: scales each coefficient by its total degree.
    pub fn euler(&self) -> Self {
        TruncatedSeries {
            vars: self.vars,
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(e, _)| total(**e) > 0)
                .map(|(e, c)| (*e, c * int(total(*e) as i64)))
                .collect(),
        }
    }

    /// `f(x^r)` for univariate `f`; truncation becomes `r · order`.
    pub fn substitute_power(&self, r: u32) -> Result<Self, SeriesError> {
        self.require_univariate()?;
        Ok(TruncatedSeries {
            vars: Vars::One,
            order: self.order * r,
            coeffs: self.coeffs.iter().map(|(e, c)| ([e[0] * r, 0], c.clone())).collect(),
        })
    }

    /// Embed a univariate series as a function of `z1` (`which == 0`) or `z2`.
    pub fn lift(&self, which: usize) -> Result<Self, SeriesError> {
        self.require_univariate()?;
        Ok(TruncatedSeries {
            vars: Vars::Two,
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| {
                    let mut f = [0, 0];
                    f[which] = e[0];
                    (f, c.clone())
                })
                .collect(),
        })
    }

    /// `a(z1) · b(z2)` truncated at total degree `order`.
    pub fn tensor(a: &Self, b: &Self, order: u32) -> Result<Self, SeriesError> {
        a.require_univariate()?;
        b.require_univariate()?;
        let order = order.min(a.order).min(b.order);
        let mut out = Self::zero(Vars::Two, order);
        for (ea, ca) in &a.coeffs {
            for (eb, cb) in &b.coeffs {
                if ea[0] + eb[0] <= order {
                    out.coeffs.insert([ea[0], eb[0]], ca * cb);
                }
            }
        }
        Ok(out)
    }

    /// Exchange `z1` and `z2`.
    pub fn swap_vars(&self) -> Self {
        TruncatedSeries {
            vars: self.vars,
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| match self.vars {
                    Vars::One => (*e, c.clone()),
                    Vars::Two => ([e[1], e[0]], c.clone()),
                })
                .collect(),
        }
    }

    /// First exponent (in exponent order) where the two series differ up to the
    /// smaller truncation, with both coefficients.
    pub fn first_difference(&self, other: &Self) -> Option<(Exponent, Rational, Rational)> {
        let order = self.order.min(other.order);
        let mut keys: Vec<Exponent> = self
            .coeffs
            .keys()
            .chain(other.coeffs.keys())
            .copied()
            .filter(|e| total(*e) <= order)
            .collect();
        keys.sort_by_key(|e| (total(*e), *e));
        keys.dedup();
        keys.into_iter().find_map(|e| {
            let (a, b) = (self.coeff(e), other.coeff(e));
            (a != b).then_some((e, a, b))
        })
    }

    /// Solve `x = y / f(y)` for `y(x)` up to degree `n`.
    ///
    /// Computed by the inversion formula `[x^k] y = [y^{k-1}] f^k / k` and
    /// independently by iterating `y ← x · f(y)`; the two must agree.
    pub fn lagrange_invert(f: &Self, n: u32) -> Result<Self, SeriesError> {
        f.require_univariate()?;
        if f.constant_term().is_zero() {
            return Err(SeriesError::ZeroConstant);
        }
        if f.order < n {
            return Err(SeriesError::TruncationTooLow {
                needed: n,
                got: f.order,
            });
        }
        let f = f.truncate(n);

        let mut by_formula = Self::zero(Vars::One, n);
        let mut power = Self::one(Vars::One, n);
        for k in 1..=n {
            power = power.mul(&f)?;
            by_formula.set([k, 0], power.at(k - 1) / int(k as i64));
        }

        let x = Self::x(n);
        let mut iterate = Self::zero(Vars::One, n);
        for _ in 0..n {
            iterate = x.mul(&f.compose(&iterate)?)?;
        }

        if let Some((e, _, _)) = by_formula.first_difference(&iterate) {
            return Err(SeriesError::InversionMismatch { degree: e[0] });
        }
        Ok(by_formula)
    }

    /// `(f(z1) - f(z2)) / (z1 - z2)` as a bivariate series of total degree `n`.
    pub fn divided_difference(f: &Self, n: u32) -> Result<Self, SeriesError> {
        f.require_univariate()?;
        if f.order < n + 1 {
            return Err(SeriesError::TruncationTooLow {
                needed: n + 1,
                got: f.order,
            });
        }
        let mut out = Self::zero(Vars::Two, n);
        for (e, c) in &f.coeffs {
            let k = e[0];
            if k == 0 || k > n + 1 {
                continue;
            }
            for a in 0..k {
                let m = [a, k - 1 - a];
                let cur = out.coeff(m);
                out.set(m, cur + c);
            }
        }
        Ok(out)
    }
}

impl PartialEq for TruncatedSeries {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.first_difference(other).is_none()
    }
}
