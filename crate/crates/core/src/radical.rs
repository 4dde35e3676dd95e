//! Reducedness certification for zero-dimensional schemes.
//!
//! A random linear form `u` is adjoined through a fresh variable `s` and
//! the generators are eliminated down to a single univariate relation: the
//! minimal polynomial of `u` on the scheme. When its degree reaches the
//! full quotient dimension the scheme is isomorphic to the univariate
//! quotient, so reducedness is exactly squarefreeness of that polynomial.
//! A degree shortfall means `u` failed to separate the points (or the
//! scheme has a fat point no single coordinate can see); such trials are
//! retried with a fresh draw and reported as indeterminate — never as a
//! negative answer — when the budget runs out.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::certificate::derive_seed;
use crate::elimination::eliminate;
use crate::error::Error;
use crate::field::Field;
use crate::groebner::{EngineLimits, GroebnerBasis};
use crate::ideal::Ideal;
use crate::poly::{random_linear_form, Polynomial};

/// Minimal polynomial of the linear form `u` on the zero-dimensional
/// scheme cut out by `ideal`, as dense ascending coefficients, monic.
pub fn minimal_polynomial<F: Field>(
    f: &F,
    ideal: &Ideal<F>,
    u: &Polynomial<F>,
    limits: &EngineLimits,
) -> Result<Vec<F::Elem>, Error> {
    let n = ideal.nvars();
    assert_eq!(u.nvars(), n);
    // ring (x_1 .. x_n, s) with s last; eliminate the x block
    let s = Polynomial::variable(f, n + 1, n);
    let relation = s.sub(&u.pad_right(1), f);
    let extended = ideal.pad_right(1).join(&Ideal::new(n + 1, vec![relation]));
    let eliminated = eliminate(f, &extended, n, limits)?;

    let mut acc: Option<Vec<F::Elem>> = None;
    for g in eliminated.nonzero_gens() {
        let mut coeffs = vec![f.zero(); g.total_degree().unwrap() as usize + 1];
        for (m, c) in g.terms() {
            coeffs[m.exp(n) as usize] = c.clone();
        }
        acc = Some(match acc {
            None => coeffs,
            Some(prev) => uni_gcd(f, prev, coeffs),
        });
    }
    let Some(m) = acc else {
        return Err(Error::InvalidInput(
            "no univariate relation: the scheme is not zero-dimensional".to_string(),
        ));
    };
    Ok(uni_monic(f, m))
}

/// Whether the zero-dimensional ideal behind `basis` is radical. `Ok`
/// answers are decisive both ways; separation failure surfaces as
/// [`Error::RadicalityIndeterminate`].
pub fn is_radical_zero_dim<F: Field>(
    f: &F,
    basis: &GroebnerBasis<F>,
    seed: u64,
    trials: usize,
    limits: &EngineLimits,
) -> Result<bool, Error> {
    let deg = basis.degree_zero_dim()?;
    if deg == 1 {
        // the quotient is the ground field
        return Ok(true);
    }
    let n = basis.nvars();
    let ideal = basis.to_ideal();
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, trial as u64));
        let u = random_linear_form(f, n, false, &mut rng);
        let m = minimal_polynomial(f, &ideal, &u, limits)?;
        if (m.len() - 1) as u64 == deg {
            // the form generates the whole quotient: decisive either way
            return Ok(uni_is_squarefree(f, &m));
        }
        // u failed to separate; try a fresh one
    }
    Err(Error::RadicalityIndeterminate { trials })
}

// ---- dense univariate helpers (ascending coefficients) ----

fn uni_trim<F: Field>(f: &F, mut v: Vec<F::Elem>) -> Vec<F::Elem> {
    while v.last().is_some_and(|c| f.is_zero(c)) {
        v.pop();
    }
    v
}

fn uni_monic<F: Field>(f: &F, v: Vec<F::Elem>) -> Vec<F::Elem> {
    let v = uni_trim(f, v);
    match v.last() {
        None => v,
        Some(lc) => {
            let inv = f.inv(lc).expect("trimmed leading coefficient");
            v.iter().map(|c| f.mul(c, &inv)).collect()
        }
    }
}

fn uni_derivative<F: Field>(f: &F, v: &[F::Elem]) -> Vec<F::Elem> {
    let mut out = Vec::with_capacity(v.len().saturating_sub(1));
    for (i, c) in v.iter().enumerate().skip(1) {
        out.push(f.mul(c, &f.from_i64(i as i64)));
    }
    uni_trim(f, out)
}

/// Remainder of `a` modulo `b`; `b` nonzero.
fn uni_rem<F: Field>(f: &F, mut a: Vec<F::Elem>, b: &[F::Elem]) -> Vec<F::Elem> {
    let db = b.len() - 1;
    let lb_inv = f.inv(&b[db]).expect("nonzero divisor");
    while a.len() > db {
        let da = a.len() - 1;
        let q = f.mul(&a[da], &lb_inv);
        for i in 0..=db {
            let t = f.mul(&q, &b[i]);
            a[da - db + i] = f.sub(&a[da - db + i], &t);
        }
        a = uni_trim(f, a);
        if a.is_empty() {
            break;
        }
    }
    a
}

fn uni_gcd<F: Field>(f: &F, a: Vec<F::Elem>, b: Vec<F::Elem>) -> Vec<F::Elem> {
    let mut a = uni_trim(f, a);
    let mut b = uni_trim(f, b);
    while !b.is_empty() {
        let r = uni_rem(f, a, &b);
        a = b;
        b = r;
    }
    uni_monic(f, a)
}

/// Squarefree test. A vanishing derivative in positive characteristic
/// means the polynomial is a p-th power, hence not squarefree.
fn uni_is_squarefree<F: Field>(f: &F, m: &[F::Elem]) -> bool {
    let d = uni_derivative(f, m);
    if d.is_empty() {
        return m.len() <= 1;
    }
    uni_gcd(f, m.to_vec(), d).len() == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;
    use crate::groebner::groebner;
    use crate::monomial::MonomialOrder;
    use crate::parse::parse_polynomial;

    fn fp() -> Fp {
        Fp::default_prime()
    }

    fn basis_of(f: &Fp, vars: &[&str], gens: &[&str]) -> GroebnerBasis<Fp> {
        let polys = gens
            .iter()
            .map(|g| parse_polynomial(f, g, vars).unwrap())
            .collect();
        groebner(
            f,
            &Ideal::new(vars.len(), polys),
            MonomialOrder::GrevLex,
            &EngineLimits::default(),
        )
        .unwrap()
    }

    fn radical(f: &Fp, vars: &[&str], gens: &[&str]) -> Result<bool, Error> {
        is_radical_zero_dim(f, &basis_of(f, vars, gens), 0, 8, &EngineLimits::default())
    }

    #[test]
    fn a_reduced_point_is_radical() {
        let f = fp();
        assert_eq!(radical(&f, &["x", "y"], &["x - 1", "y - 2"]).unwrap(), true);
    }

    #[test]
    fn a_double_point_is_not() {
        let f = fp();
        assert_eq!(radical(&f, &["x", "y"], &["x^2", "y"]).unwrap(), false);
    }

    #[test]
    fn two_simple_points_are_radical() {
        let f = fp();
        assert_eq!(radical(&f, &["x", "y"], &["x^2 - 1", "y"]).unwrap(), true);
        assert_eq!(
            radical(&f, &["x", "y"], &["x^2 - 1", "y^2 - 1"]).unwrap(),
            true
        );
    }

    #[test]
    fn fat_point_with_two_directions_is_indeterminate() {
        // k[x,y]/((x-1)^2, (y-3)^2) is local with a two-dimensional tangent
        // space: no single linear form generates it, so the method must
        // refuse rather than answer
        let f = fp();
        let err = radical(&f, &["x", "y"], &["(x-1)^2", "(y-3)^2"]).unwrap_err();
        assert!(matches!(err, Error::RadicalityIndeterminate { .. }));
    }

    #[test]
    fn minimal_polynomial_of_a_quadratic_point_pair() {
        let f = fp();
        let vars = ["x", "y"];
        let gens = vec![
            parse_polynomial(&f, "x^2 - 2", &vars).unwrap(),
            parse_polynomial(&f, "y", &vars).unwrap(),
        ];
        let ideal = Ideal::new(2, gens);
        // u = x has minimal polynomial s^2 - 2
        let u = Polynomial::variable(&f, 2, 0);
        let m = minimal_polynomial(&f, &ideal, &u, &EngineLimits::default()).unwrap();
        assert_eq!(m, vec![f.from_i64(-2), 0, 1]);
    }

    #[test]
    fn squarefree_helper_agrees_with_construction() {
        let f = fp();
        // (s-1)(s-2) squarefree, (s-1)^2 not
        let sf = vec![f.from_i64(2), f.from_i64(-3), f.from_i64(1)];
        let sq = vec![f.from_i64(1), f.from_i64(-2), f.from_i64(1)];
        assert!(uni_is_squarefree(&f, &sf));
        assert!(!uni_is_squarefree(&f, &sq));
    }
}
