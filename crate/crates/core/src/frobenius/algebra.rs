use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::element::{AlgebraElement, TensorElement};
use super::FrobeniusError;
use crate::exactmath::linalg::{inverse, solve, Matrix, Solution};
use crate::exactmath::{int, Rational};

/// A commutative Frobenius algebra given by structure constants and a counit.
///
/// `mult[i][j][k]` is the coefficient of `e_k` in `e_i e_j`. The unit, the
/// pairing `η_ij = ε(e_i e_j)`, its inverse and the Euler element are derived
/// once at construction.
#[derive(Debug, PartialEq, Eq)]
pub struct FrobeniusAlgebra {
    dim: usize,
    mult: Vec<Vec<Vec<Rational>>>,
    counit: Vec<Rational>,
    unit: Vec<Rational>,
    eta: Matrix,
    eta_inv: Matrix,
    euler: Vec<Rational>,
}

impl FrobeniusAlgebra {
    pub fn from_structure_constants(
        dim: usize,
        mult: Vec<Vec<Vec<Rational>>>,
        counit: Vec<Rational>,
    ) -> Result<Arc<Self>, FrobeniusError> {
        if dim == 0
            || counit.len() != dim
            || mult.len() != dim
            || mult.iter().any(|m| m.len() != dim || m.iter().any(|c| c.len() != dim))
        {
            return Err(FrobeniusError::Shape);
        }
        for i in 0..dim {
            for j in 0..i {
                if mult[i][j] != mult[j][i] {
                    return Err(FrobeniusError::NotCommutative { i, j });
                }
            }
        }
        let prod = |x: &[Rational], y: &[Rational]| raw_mul(&mult, x, y);
        for i in 0..dim {
            for j in 0..dim {
                let eij = &mult[i][j];
                for k in 0..dim {
                    let left = prod(eij, &basis(dim, k));
                    let right = prod(&basis(dim, i), &mult[j][k]);
                    if left != right {
                        return Err(FrobeniusError::NotAssociative { i, j, k });
                    }
                }
            }
        }

        // Σ_a u_a c[a][i][k] = δ_ik
        let mut rows = Vec::with_capacity(dim * dim);
        let mut rhs = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for k in 0..dim {
                rows.push((0..dim).map(|a| mult[a][i][k].clone()).collect::<Vec<_>>());
                rhs.push(if i == k { Rational::one() } else { Rational::zero() });
            }
        }
        let unit = match solve(&rows, &rhs) {
            Solution::Unique(u) => u,
            Solution::Inconsistent => return Err(FrobeniusError::NoUnit),
            Solution::Underdetermined => return Err(FrobeniusError::UnitNotUnique),
        };

        let eps = |x: &[Rational]| dot(&counit, x);
        let eta: Matrix = (0..dim)
            .map(|i| (0..dim).map(|j| eps(&mult[i][j])).collect())
            .collect();
        let eta_inv = inverse(&eta).ok_or(FrobeniusError::SingularPairing)?;

        let mut euler = vec![Rational::zero(); dim];
        for a in 0..dim {
            for b in 0..dim {
                if eta_inv[a][b].is_zero() {
                    continue;
                }
                for k in 0..dim {
                    euler[k] += &eta_inv[a][b] * &mult[a][b][k];
                }
            }
        }

        let algebra = Arc::new(FrobeniusAlgebra {
            dim,
            mult,
            counit,
            unit,
            eta,
            eta_inv,
            euler,
        });
        if algebra.comultiply(&algebra.unit()).multiply_out().coords() != algebra.euler.as_slice() {
            return Err(FrobeniusError::EulerMismatch);
        }
        Ok(algebra)
    }

    /// The one-dimensional algebra `K` with `ε(1) = 1`.
    pub fn trivial() -> Arc<Self> {
        Self::from_structure_constants(1, vec![vec![vec![int(1)]]], vec![int(1)])
            .expect("valid")
    }

    /// `K[x]/(x²)` in the basis `{1, x}` with `ε(a + bx) = b`.
    pub fn dual_numbers() -> Arc<Self> {
        let (z, o) = (int(0), int(1));
        let mult = vec![
            vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]],
            vec![vec![z.clone(), o.clone()], vec![z.clone(), z.clone()]],
        ];
        Self::from_structure_constants(2, mult, vec![z, o]).expect("valid")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn structure_constants(&self) -> &[Vec<Vec<Rational>>] {
        &self.mult
    }

    pub fn counit_coords(&self) -> &[Rational] {
        &self.counit
    }

    /// `η_ij = ε(e_i e_j)`.
    pub fn eta(&self) -> &Matrix {
        &self.eta
    }

    /// `η^ij`, the inverse of the pairing matrix.
    pub fn eta_inv(&self) -> &Matrix {
        &self.eta_inv
    }

    pub(crate) fn mul_coords(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        raw_mul(&self.mult, x, y)
    }

    pub(crate) fn counit_of(&self, x: &[Rational]) -> Rational {
        dot(&self.counit, x)
    }

    pub fn element(self: &Arc<Self>, coords: Vec<Rational>) -> Result<AlgebraElement, FrobeniusError> {
        if coords.len() != self.dim {
            return Err(FrobeniusError::Shape);
        }
        Ok(AlgebraElement::new(self.clone(), coords))
    }

    pub fn basis(self: &Arc<Self>, i: usize) -> AlgebraElement {
        AlgebraElement::new(self.clone(), basis(self.dim, i))
    }

    pub fn zero(self: &Arc<Self>) -> AlgebraElement {
        AlgebraElement::new(self.clone(), vec![Rational::zero(); self.dim])
    }

    pub fn unit(self: &Arc<Self>) -> AlgebraElement {
        AlgebraElement::new(self.clone(), self.unit.clone())
    }

    /// `𝐞 = Σ η^{ab} e_a e_b`.
    pub fn euler_element(self: &Arc<Self>) -> AlgebraElement {
        AlgebraElement::new(self.clone(), self.euler.clone())
    }

    /// `δ(v) = Σ η(v, e_i e_j) η^{ia} η^{jb} e_a ⊗ e_b`.
    pub fn comultiply(self: &Arc<Self>, v: &AlgebraElement) -> TensorElement {
        let d = self.dim;
        let w: Matrix = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| self.counit_of(&self.mul_coords(v.coords(), &self.mult[i][j])))
                    .collect()
            })
            .collect();
        let mut out = vec![vec![Rational::zero(); d]; d];
        for i in 0..d {
            for j in 0..d {
                if w[i][j].is_zero() {
                    continue;
                }
                for a in 0..d {
                    if self.eta_inv[i][a].is_zero() {
                        continue;
                    }
                    let t = &w[i][j] * &self.eta_inv[i][a];
                    for b in 0..d {
                        out[a][b] += &t * &self.eta_inv[j][b];
                    }
                }
            }
        }
        TensorElement::new(self.clone(), out)
    }

    /// `Ω_{g,n}(v_1, …, v_n) = ε(v_1 ⋯ v_n 𝐞^g)`. With no slots this is `Z(Σ_g)`.
    pub fn omega_closed(self: &Arc<Self>, g: u32, vs: &[AlgebraElement]) -> Result<Rational, FrobeniusError> {
        let mut acc = self.euler_element().pow(g);
        for v in vs {
            acc = acc.mul(v)?;
        }
        Ok(acc.counit())
    }

    /// `Z(Σ_g) = ε(𝐞^g)`.
    pub fn z_invariant(self: &Arc<Self>, g: u32) -> Rational {
        self.euler_element().pow(g).counit()
    }
}

fn basis(dim: usize, i: usize) -> Vec<Rational> {
    (0..dim)
        .map(|k| if k == i { Rational::one() } else { Rational::zero() })
        .collect()
}

fn dot(x: &[Rational], y: &[Rational]) -> Rational {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

fn raw_mul(mult: &[Vec<Vec<Rational>>], x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let d = x.len();
    let mut out = vec![Rational::zero(); d];
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let t = xi * yj;
            for (k, c) in mult[i][j].iter().enumerate() {
                if !c.is_zero() {
                    out[k] += &t * c;
                }
            }
        }
    }
    out
}
