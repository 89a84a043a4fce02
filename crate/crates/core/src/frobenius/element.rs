use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{FrobeniusAlgebra, FrobeniusError};
use crate::exactmath::linalg::Matrix;
use crate::exactmath::Rational;

fn same(a: &Arc<FrobeniusAlgebra>, b: &Arc<FrobeniusAlgebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// An element of a Frobenius algebra by its basis coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    algebra: Arc<FrobeniusAlgebra>,
    coords: Vec<Rational>,
}

impl AlgebraElement {
    pub(crate) fn new(algebra: Arc<FrobeniusAlgebra>, coords: Vec<Rational>) -> Self {
        debug_assert_eq!(coords.len(), algebra.dim());
        AlgebraElement { algebra, coords }
    }

    pub fn algebra(&self) -> &Arc<FrobeniusAlgebra> {
        &self.algebra
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    fn check(&self, other: &Self) -> Result<(), FrobeniusError> {
        if same(&self.algebra, &other.algebra) {
            Ok(())
        } else {
            Err(FrobeniusError::AlgebraMismatch)
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, FrobeniusError> {
        self.check(other)?;
        Ok(Self::new(
            self.algebra.clone(),
            self.algebra.mul_coords(&self.coords, &other.coords),
        ))
    }

    pub fn add(&self, other: &Self) -> Result<Self, FrobeniusError> {
        self.check(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Ok(Self::new(self.algebra.clone(), coords))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, FrobeniusError> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.algebra.clone(), self.coords.iter().map(|a| a * c).collect())
    }

    /// `v^k`, with `v^0 = 𝟏`.
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = self.algebra.unit();
        for _ in 0..k {
            acc = acc.mul(self).expect("same algebra");
        }
        acc
    }

    pub fn counit(&self) -> Rational {
        self.algebra.counit_of(&self.coords)
    }

    /// `η(u, v) = ε(uv)`.
    pub fn pairing(&self, other: &Self) -> Result<Rational, FrobeniusError> {
        Ok(self.mul(other)?.counit())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

/// An element `Σ t_ab e_a ⊗ e_b` of `A ⊗ A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    algebra: Arc<FrobeniusAlgebra>,
    coords: Matrix,
}

impl TensorElement {
    pub(crate) fn new(algebra: Arc<FrobeniusAlgebra>, coords: Matrix) -> Self {
        TensorElement { algebra, coords }
    }

    /// `u ⊗ v`.
    pub fn pure(u: &AlgebraElement, v: &AlgebraElement) -> Result<Self, FrobeniusError> {
        u.check(v)?;
        let coords = u
            .coords
            .iter()
            .map(|a| v.coords.iter().map(|b| a * b).collect())
            .collect();
        Ok(Self::new(u.algebra.clone(), coords))
    }

    pub fn coords(&self) -> &Matrix {
        &self.coords
    }

    pub fn entry(&self, a: usize, b: usize) -> &Rational {
        &self.coords[a][b]
    }

    /// `m(t)`.
    pub fn multiply_out(&self) -> AlgebraElement {
        let d = self.algebra.dim();
        let mut acc = vec![Rational::zero(); d];
        for a in 0..d {
            for b in 0..d {
                let t = &self.coords[a][b];
                if t.is_zero() {
                    continue;
                }
                for (k, c) in self.algebra.structure_constants()[a][b].iter().enumerate() {
                    acc[k] += t * c;
                }
            }
        }
        AlgebraElement::new(self.algebra.clone(), acc)
    }

    /// `(id ⊗ m)(t ⊗ v)`.
    pub fn mul_right(&self, v: &AlgebraElement) -> Result<Self, FrobeniusError> {
        if !same(&self.algebra, &v.algebra) {
            return Err(FrobeniusError::AlgebraMismatch);
        }
        let d = self.algebra.dim();
        let mut out = vec![vec![Rational::zero(); d]; d];
        for b in 0..d {
            let ebv = self.algebra.mul_coords(self.algebra.basis(b).coords(), v.coords());
            for a in 0..d {
                let t = &self.coords[a][b];
                if t.is_zero() {
                    continue;
                }
                for (k, c) in ebv.iter().enumerate() {
                    out[a][k] += t * c;
                }
            }
        }
        Ok(Self::new(self.algebra.clone(), out))
    }

    /// `(λ(v) ⊗ id)(t)` where `λ(v) = η(v, ·)`.
    pub fn contract_left(&self, v: &AlgebraElement) -> Result<AlgebraElement, FrobeniusError> {
        if !same(&self.algebra, &v.algebra) {
            return Err(FrobeniusError::AlgebraMismatch);
        }
        let d = self.algebra.dim();
        let mut out = vec![Rational::zero(); d];
        for a in 0..d {
            let lam = v.pairing(&self.algebra.basis(a))?;
            if lam.is_zero() {
                continue;
            }
            for b in 0..d {
                out[b] += &lam * &self.coords[a][b];
            }
        }
        Ok(AlgebraElement::new(self.algebra.clone(), out))
    }
}
