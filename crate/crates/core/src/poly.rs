//! Multivariate polynomials in canonical form.
//!
//! Terms are kept sorted strictly descending under grevlex with no zero
//! coefficients, so structural equality is mathematical equality and
//! printing is deterministic. Operations that need a different term order
//! (the basis engine) re-sort working copies internally; the canonical form
//! here never changes.

use rand::Rng;

use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};

#[derive(Clone, Debug)]
pub struct Polynomial<F: Field> {
    nvars: usize,
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.terms == other.terms
    }
}

impl<F: Field> Polynomial<F> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(f: &F, c: F::Elem, nvars: usize) -> Self {
        if f.is_zero(&c) {
            return Self::zero(nvars);
        }
        Polynomial {
            nvars,
            terms: vec![(Monomial::one(nvars), c)],
        }
    }

    pub fn one(f: &F, nvars: usize) -> Self {
        Self::constant(f, f.one(), nvars)
    }

    pub fn variable(f: &F, nvars: usize, i: usize) -> Self {
        Polynomial {
            nvars,
            terms: vec![(Monomial::var(nvars, i), f.one())],
        }
    }

    /// Build from arbitrary (monomial, coefficient) pairs; sorts, merges
    /// duplicates, and drops zeros.
    pub fn from_terms(f: &F, nvars: usize, pairs: Vec<(Monomial, F::Elem)>) -> Self {
        Polynomial {
            nvars,
            terms: normalize(f, pairs),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constants only; the zero polynomial is not a unit.
    pub fn is_unit_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Leading term under `order`; the canonical storage order makes the
    /// grevlex case free.
    pub fn leading(&self, order: MonomialOrder) -> Option<(&Monomial, &F::Elem)> {
        match order {
            MonomialOrder::GrevLex => self.terms.first().map(|(m, c)| (m, c)),
            _ => self
                .terms
                .iter()
                .max_by(|a, b| order.cmp(&a.0, &b.0))
                .map(|(m, c)| (m, c)),
        }
    }

    pub fn coefficient_of(&self, mono: &Monomial) -> Option<&F::Elem> {
        self.terms
            .iter()
            .find(|(m, _)| m == mono)
            .map(|(_, c)| c)
    }

    pub fn neg(&self, f: &F) -> Self {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), f.neg(c)))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self, f: &F) -> Self {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match MonomialOrder::GrevLex.cmp(ma, mb) {
                std::cmp::Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((mb.clone(), cb.clone()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let s = f.add(ca, cb);
                    if !f.is_zero(&s) {
                        out.push((ma.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(other.terms[j..].iter().cloned());
        Polynomial {
            nvars: self.nvars,
            terms: out,
        }
    }

    pub fn sub(&self, other: &Self, f: &F) -> Self {
        self.add(&other.neg(f), f)
    }

    pub fn scale(&self, c: &F::Elem, f: &F) -> Self {
        if f.is_zero(c) {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), f.mul(a, c)))
                .collect(),
        }
    }

    /// Multiply by a single term. Multiplying by a fixed monomial preserves
    /// the descending sort, so no re-normalization is needed.
    pub fn mul_term(&self, mono: &Monomial, c: &F::Elem, f: &F) -> Self {
        if f.is_zero(c) {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.mul(mono), f.mul(a, c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self, f: &F) -> Self {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut acc = Polynomial::zero(self.nvars);
        for (m, c) in &other.terms {
            acc = acc.add(&self.mul_term(m, c, f), f);
        }
        acc
    }

    pub fn pow(&self, mut e: u32, f: &F) -> Self {
        let mut base = self.clone();
        let mut acc = Polynomial::one(f, self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, f);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, f);
            }
        }
        acc
    }

    pub fn make_monic(&self, order: MonomialOrder, f: &F) -> Self {
        match self.leading(order) {
            None => self.clone(),
            Some((_, lc)) => {
                if f.is_one(lc) {
                    self.clone()
                } else {
                    let inv = f.inv(lc).expect("leading coefficient is nonzero");
                    self.scale(&inv, f)
                }
            }
        }
    }

    pub fn derivative(&self, var: usize, f: &F) -> Self {
        let mut pairs = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exp(var);
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[var] = e - 1;
            let factor = f.from_i64(e as i64);
            let coef = f.mul(c, &factor);
            pairs.push((Monomial::from_exps(exps), coef));
        }
        Polynomial::from_terms(f, self.nvars, pairs)
    }

    /// Evaluate at `images`, one polynomial per variable of `self`, all
    /// living in a ring with `target_nvars` variables.
    pub fn substitute(&self, images: &[Polynomial<F>], target_nvars: usize, f: &F) -> Self {
        assert_eq!(images.len(), self.nvars);
        debug_assert!(images.iter().all(|p| p.nvars == target_nvars));
        // cache powers of each image up to the largest exponent used
        let mut powers: Vec<Vec<Polynomial<F>>> = images
            .iter()
            .map(|p| vec![Polynomial::one(f, target_nvars), p.clone()])
            .collect();
        let mut acc = Polynomial::zero(target_nvars);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(f, c.clone(), target_nvars);
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap().mul(&images[i], f);
                    cache.push(next);
                }
                term = term.mul(&cache[e as usize], f);
            }
            acc = acc.add(&term, f);
        }
        acc
    }

    /// Reinterpret in a ring with `k` extra variables prepended; existing
    /// variables shift up by `k`. Term order is unaffected.
    pub fn pad_left(&self, k: usize) -> Self {
        Polynomial {
            nvars: self.nvars + k,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut exps = vec![0u32; k];
                    exps.extend_from_slice(m.exps());
                    (Monomial::from_exps(exps), c.clone())
                })
                .collect(),
        }
    }

    /// Reinterpret in a ring with `k` extra variables appended after the
    /// existing ones. Term order is unaffected.
    pub fn pad_right(&self, k: usize) -> Self {
        Polynomial {
            nvars: self.nvars + k,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut exps = m.exps().to_vec();
                    exps.extend(std::iter::repeat(0u32).take(k));
                    (Monomial::from_exps(exps), c.clone())
                })
                .collect(),
        }
    }

    /// Inverse of [`pad_left`]: drop the first `k` variables, which must not
    /// occur in any term.
    pub fn drop_left(&self, k: usize) -> Self {
        Polynomial {
            nvars: self.nvars - k,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    debug_assert!(m.free_of_leading(k));
                    (Monomial::from_exps(m.exps()[k..].to_vec()), c.clone())
                })
                .collect(),
        }
    }

    /// For polynomials of degree at most one: per-variable coefficients and
    /// the constant term. `None` if any term has degree two or more.
    pub fn as_affine_form(&self, f: &F) -> Option<(Vec<F::Elem>, F::Elem)> {
        let mut coeffs = vec![f.zero(); self.nvars];
        let mut constant = f.zero();
        for (m, c) in &self.terms {
            match m.degree() {
                0 => constant = c.clone(),
                1 => {
                    let i = m.exps().iter().position(|&e| e == 1).unwrap();
                    coeffs[i] = c.clone();
                }
                _ => return None,
            }
        }
        Some((coeffs, constant))
    }
}

fn normalize<F: Field>(f: &F, mut pairs: Vec<(Monomial, F::Elem)>) -> Vec<(Monomial, F::Elem)> {
    pairs.sort_unstable_by(|a, b| MonomialOrder::GrevLex.cmp(&b.0, &a.0));
    let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(pairs.len());
    for (m, c) in pairs {
        match out.last_mut() {
            Some((lm, lc)) if *lm == m => *lc = f.add(lc, &c),
            _ => out.push((m, c)),
        }
        if let Some((_, lc)) = out.last() {
            if f.is_zero(lc) {
                out.pop();
            }
        }
    }
    out
}

/// A linear form from explicit data; mostly for tests and fixtures.
pub fn linear_form<F: Field>(f: &F, coeffs: &[F::Elem], constant: F::Elem) -> Polynomial<F> {
    let n = coeffs.len();
    let mut pairs: Vec<(Monomial, F::Elem)> = coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| (Monomial::var(n, i), c.clone()))
        .collect();
    pairs.push((Monomial::one(n), constant));
    Polynomial::from_terms(f, n, pairs)
}

/// Draw a linear form with every coefficient sampled from the field and a
/// guaranteed-nonzero linear part. `affine` adds a constant term.
pub fn random_linear_form<F: Field, R: Rng + ?Sized>(
    f: &F,
    nvars: usize,
    affine: bool,
    rng: &mut R,
) -> Polynomial<F> {
    assert!(nvars > 0, "a linear form needs at least one variable");
    loop {
        let coeffs: Vec<F::Elem> = (0..nvars).map(|_| f.sample(rng)).collect();
        if coeffs.iter().all(|c| f.is_zero(c)) {
            continue;
        }
        let constant = if affine { f.sample(rng) } else { f.zero() };
        return linear_form(f, &coeffs, constant);
    }
}

/// Draw a polynomial with up to `max_terms` monomials of total degree at
/// most `max_degree`. Terms can merge or vanish during normalization, so
/// the result may be shorter than requested, or zero.
pub fn random_polynomial<F: Field, R: Rng + ?Sized>(
    f: &F,
    nvars: usize,
    max_degree: u32,
    max_terms: usize,
    rng: &mut R,
) -> Polynomial<F> {
    assert!(max_terms > 0);
    let nterms = rng.random_range(1..=max_terms);
    let mut pairs = Vec::with_capacity(nterms);
    for _ in 0..nterms {
        let mut exps = vec![0u32; nvars];
        if nvars > 0 {
            for _ in 0..rng.random_range(0..=max_degree) {
                exps[rng.random_range(0..nvars)] += 1;
            }
        }
        pairs.push((Monomial::from_exps(exps), f.sample(rng)));
    }
    Polynomial::from_terms(f, nvars, pairs)
}
