//! Variable elimination and the ideal operations built on it:
//! intersection and saturation.

use crate::error::Error;
use crate::field::Field;
use crate::groebner::{groebner, EngineLimits};
use crate::ideal::Ideal;
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;

/// Generators of the subring ideal obtained by discarding the first `k`
/// variables: a basis under a block order whose head is exactly those
/// variables, restricted to the elements that avoid them. The result keeps
/// the ambient variable count.
pub fn eliminate<F: Field>(
    f: &F,
    ideal: &Ideal<F>,
    k: usize,
    limits: &EngineLimits,
) -> Result<Ideal<F>, Error> {
    assert!(k <= ideal.nvars());
    let basis = groebner(f, ideal, MonomialOrder::Block { head: k }, limits)?;
    let kept: Vec<Polynomial<F>> = basis
        .elements()
        .iter()
        .filter(|p| p.terms().iter().all(|(m, _)| m.free_of_leading(k)))
        .cloned()
        .collect();
    if kept.is_empty() {
        return Ok(Ideal::zero(ideal.nvars()));
    }
    Ok(Ideal::new(ideal.nvars(), kept))
}

/// Intersection of two ideals via the standard one-variable trick:
/// interpolate between the ideals with a fresh scalar and eliminate it.
pub fn intersect<F: Field>(
    f: &F,
    a: &Ideal<F>,
    b: &Ideal<F>,
    limits: &EngineLimits,
) -> Result<Ideal<F>, Error> {
    assert_eq!(a.nvars(), b.nvars());
    let n = a.nvars();
    let t = Polynomial::variable(f, n + 1, 0);
    let one_minus_t = Polynomial::one(f, n + 1).sub(&t, f);
    let mut gens = Vec::new();
    for g in a.nonzero_gens() {
        gens.push(g.pad_left(1).mul(&t, f));
    }
    for g in b.nonzero_gens() {
        gens.push(g.pad_left(1).mul(&one_minus_t, f));
    }
    if gens.is_empty() {
        // one side is the zero ideal; the intersection is zero
        return Ok(Ideal::zero(n));
    }
    let extended = Ideal::new(n + 1, gens);
    let eliminated = eliminate(f, &extended, 1, limits)?;
    Ok(drop_first_var(&eliminated))
}

/// Stable quotient of `i` by every power of `j`: the part of the zero set
/// of `i` that survives after discarding the locus of `j`, as an ideal.
///
/// Computed per generator by adjoining an inverse (`t*g - 1`) and
/// eliminating `t`, then intersecting the per-generator results.
pub fn saturate<F: Field>(
    f: &F,
    i: &Ideal<F>,
    j: &Ideal<F>,
    limits: &EngineLimits,
) -> Result<Ideal<F>, Error> {
    assert_eq!(i.nvars(), j.nvars());
    let mut parts: Vec<Ideal<F>> = Vec::new();
    for g in j.nonzero_gens() {
        parts.push(saturate_by_poly(f, i, g, limits)?);
    }
    // saturating by the zero ideal discards everything
    let Some(mut acc) = parts.pop() else {
        return Ok(Ideal::unit(f, i.nvars()));
    };
    for p in parts {
        acc = intersect(f, &acc, &p, limits)?;
    }
    Ok(acc)
}

/// Saturation by a single polynomial.
pub fn saturate_by_poly<F: Field>(
    f: &F,
    i: &Ideal<F>,
    g: &Polynomial<F>,
    limits: &EngineLimits,
) -> Result<Ideal<F>, Error> {
    assert!(!g.is_zero());
    let n = i.nvars();
    let t = Polynomial::variable(f, n + 1, 0);
    let inverse_witness = t.mul(&g.pad_left(1), f).sub(&Polynomial::one(f, n + 1), f);
    let mut gens: Vec<Polynomial<F>> = i.gens().iter().map(|p| p.pad_left(1)).collect();
    gens.push(inverse_witness);
    let extended = Ideal::new(n + 1, gens);
    let eliminated = eliminate(f, &extended, 1, limits)?;
    Ok(drop_first_var(&eliminated))
}

fn drop_first_var<F: Field>(ideal: &Ideal<F>) -> Ideal<F> {
    Ideal::new(
        ideal.nvars() - 1,
        ideal.gens().iter().map(|g| g.drop_left(1)).collect(),
    )
}
