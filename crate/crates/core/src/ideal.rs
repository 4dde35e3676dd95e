//! Ideals and validated variety presentations.

use crate::error::Error;
use crate::field::Field;
use crate::groebner::{groebner, EngineLimits, GroebnerBasis};
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;

/// A finitely generated ideal: a nonempty generator list in a fixed ring.
/// The zero ideal is presented by a single zero polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct Ideal<F: Field> {
    nvars: usize,
    gens: Vec<Polynomial<F>>,
}

impl<F: Field> Ideal<F> {
    pub fn new(nvars: usize, gens: Vec<Polynomial<F>>) -> Self {
        assert!(!gens.is_empty(), "present the zero ideal by a zero polynomial");
        assert!(
            gens.iter().all(|g| g.nvars() == nvars),
            "generators live in one ring"
        );
        Ideal { nvars, gens }
    }

    pub fn zero(nvars: usize) -> Self {
        Ideal {
            nvars,
            gens: vec![Polynomial::zero(nvars)],
        }
    }

    pub fn unit(f: &F, nvars: usize) -> Self {
        Ideal {
            nvars,
            gens: vec![Polynomial::one(f, nvars)],
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    /// Nonzero generators only; empty for the zero ideal.
    pub fn nonzero_gens(&self) -> impl Iterator<Item = &Polynomial<F>> {
        self.gens.iter().filter(|g| !g.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.iter().all(|g| g.is_zero())
    }

    /// Same generators with `k` fresh variables prepended.
    pub fn pad_left(&self, k: usize) -> Self {
        Ideal {
            nvars: self.nvars + k,
            gens: self.gens.iter().map(|g| g.pad_left(k)).collect(),
        }
    }

    /// Same generators with `k` fresh variables appended.
    pub fn pad_right(&self, k: usize) -> Self {
        Ideal {
            nvars: self.nvars + k,
            gens: self.gens.iter().map(|g| g.pad_right(k)).collect(),
        }
    }

    /// Concatenate generator lists.
    pub fn join(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal {
            nvars: self.nvars,
            gens,
        }
    }
}

/// A validated presentation of a pure-dimensional affine variety: the
/// generators, the declared dimension, and the reduced grevlex basis that
/// witnessed the validation.
#[derive(Clone, Debug)]
pub struct VarietySpec<F: Field> {
    ideal: Ideal<F>,
    dim: usize,
    basis: GroebnerBasis<F>,
}

impl<F: Field> VarietySpec<F> {
    /// Checks that the ideal is proper and that the computed dimension
    /// matches the declared one; both failures are hard errors.
    pub fn new(
        f: &F,
        ideal: Ideal<F>,
        declared_dim: usize,
        limits: &EngineLimits,
    ) -> Result<Self, Error> {
        let basis = groebner(f, &ideal, MonomialOrder::GrevLex, limits)?;
        if basis.is_unit() {
            return Err(Error::EmptyVariety);
        }
        let computed = basis.dimension();
        if computed != declared_dim as i64 {
            return Err(Error::DimensionMismatch {
                declared: declared_dim as i64,
                computed,
            });
        }
        Ok(VarietySpec {
            ideal,
            dim: declared_dim,
            basis,
        })
    }

    pub fn nvars(&self) -> usize {
        self.ideal.nvars()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn codim(&self) -> usize {
        self.nvars() - self.dim
    }

    pub fn ideal(&self) -> &Ideal<F> {
        &self.ideal
    }

    /// The reduced grevlex basis computed at validation time.
    pub fn basis(&self) -> &GroebnerBasis<F> {
        &self.basis
    }
}
