//! The basis engine: completion of a generating set into a reduced basis,
//! plus the combinatorial queries the rest of the pipeline asks of one.
//!
//! Completion is the classical pair-and-reduce procedure. Pairs are
//! selected by lowest sugar degree (the degree the S-polynomial would have
//! if the inputs were homogeneous), discarded early by the coprimality
//! criterion and at selection time by the lcm-chain criterion. Work is
//! bounded by explicit pair and reduction-step budgets; exceeding one is a
//! reported error, never a silent truncation.
//!
//! Emitted bases are fully reduced: leading coefficients one, no monomial
//! of any element divisible by the leading monomial of another, elements
//! sorted by leading monomial. A reduced basis is canonical for the
//! (ideal, order) pair, which the cross-checking layers rely on.

use std::collections::HashSet;

use crate::error::Error;
use crate::field::Field;
use crate::ideal::Ideal;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;

/// Hard ceilings for one completion run.
#[derive(Clone, Copy, Debug)]
pub struct EngineLimits {
    /// Most S-pairs examined in one run.
    pub max_pairs: usize,
    /// Most single reduction steps (one leading-term cancellation each)
    /// in one run.
    pub max_reduction_steps: u64,
}

impl Default for EngineLimits {
    fn default() -> Self {
        EngineLimits {
            max_pairs: 100_000,
            max_reduction_steps: 5_000_000,
        }
    }
}

struct Budget {
    steps_left: u64,
}

impl Budget {
    fn unbounded() -> Self {
        Budget {
            steps_left: u64::MAX,
        }
    }

    fn step(&mut self) -> Result<(), Error> {
        if self.steps_left == 0 {
            return Err(Error::ResourceLimit {
                phase: "reduction",
                detail: "reduction step budget exhausted".to_string(),
            });
        }
        self.steps_left -= 1;
        Ok(())
    }
}

/// Working form: terms sorted strictly descending under the engine order.
type Work<F> = Vec<(Monomial, <F as Field>::Elem)>;

fn work_from<F: Field>(p: &Polynomial<F>, order: MonomialOrder) -> Work<F> {
    let mut terms = p.terms().to_vec();
    terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
    terms
}

fn work_to_poly<F: Field>(f: &F, nvars: usize, w: Work<F>) -> Polynomial<F> {
    Polynomial::from_terms(f, nvars, w)
}

/// a - b, both sorted descending; result sorted descending.
fn work_sub<F: Field>(f: &F, order: MonomialOrder, a: &Work<F>, b: &Work<F>) -> Work<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match order.cmp(&a[i].0, &b[j].0) {
            std::cmp::Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push((b[j].0.clone(), f.neg(&b[j].1)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = f.sub(&a[i].1, &b[j].1);
                if !f.is_zero(&c) {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|(m, c)| (m.clone(), f.neg(c))));
    out
}

fn work_mul_term<F: Field>(f: &F, w: &Work<F>, mono: &Monomial, coef: &F::Elem) -> Work<F> {
    w.iter()
        .map(|(m, c)| (m.mul(mono), f.mul(c, coef)))
        .collect()
}

/// One basis element during completion: monic, sorted descending.
struct Elt<F: Field> {
    terms: Work<F>,
    lm: Monomial,
    sugar: u64,
}

fn make_elt<F: Field>(f: &F, mut terms: Work<F>, sugar: u64) -> Elt<F> {
    debug_assert!(!terms.is_empty());
    let lc = terms[0].1.clone();
    if !f.is_one(&lc) {
        let inv = f.inv(&lc).expect("leading coefficient nonzero");
        for (_, c) in terms.iter_mut() {
            *c = f.mul(c, &inv);
        }
    }
    let lm = terms[0].0.clone();
    Elt { terms, lm, sugar }
}

/// Full normal form of `work` against `elts` (minus `skip`): the result
/// contains no monomial divisible by any reductor's leading monomial.
fn reduce_full<F: Field>(
    f: &F,
    order: MonomialOrder,
    mut work: Work<F>,
    elts: &[Elt<F>],
    skip: Option<usize>,
    budget: &mut Budget,
) -> Result<Work<F>, Error> {
    let mut out: Work<F> = Vec::new();
    'outer: while let Some((m, c)) = work.first().cloned() {
        for (k, g) in elts.iter().enumerate() {
            if Some(k) == skip {
                continue;
            }
            if g.lm.divides(&m) {
                budget.step()?;
                let q = m.div(&g.lm).unwrap();
                let scaled = work_mul_term(f, &g.terms, &q, &c);
                work = work_sub(f, order, &work, &scaled);
                continue 'outer;
            }
        }
        out.push((m, c));
        work.remove(0);
    }
    Ok(out)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u64,
}

fn pair_of<F: Field>(a: &Elt<F>, b: &Elt<F>, i: usize, j: usize) -> Pair {
    let lcm = a.lm.lcm(&b.lm);
    let sa = a.sugar + lcm.div(&a.lm).unwrap().degree();
    let sb = b.sugar + lcm.div(&b.lm).unwrap().degree();
    Pair {
        i,
        j,
        lcm,
        sugar: sa.max(sb),
    }
}

/// The S-polynomial of two monic elements.
fn spoly<F: Field>(f: &F, order: MonomialOrder, a: &Elt<F>, b: &Elt<F>) -> Work<F> {
    let lcm = a.lm.lcm(&b.lm);
    let ua = lcm.div(&a.lm).unwrap();
    let ub = lcm.div(&b.lm).unwrap();
    let one = f.one();
    let left = work_mul_term(f, &a.terms, &ua, &one);
    let right = work_mul_term(f, &b.terms, &ub, &one);
    work_sub(f, order, &left, &right)
}

fn key(i: usize, j: usize) -> (usize, usize) {
    (i.min(j), i.max(j))
}

/// Complete `ideal`'s generators into the reduced basis under `order`.
pub fn groebner<F: Field>(
    f: &F,
    ideal: &Ideal<F>,
    order: MonomialOrder,
    limits: &EngineLimits,
) -> Result<GroebnerBasis<F>, Error> {
    let nvars = ideal.nvars();
    let mut budget = Budget {
        steps_left: limits.max_reduction_steps,
    };

    let mut elts: Vec<Elt<F>> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut done: HashSet<(usize, usize)> = HashSet::new();

    let add_element = |elts: &mut Vec<Elt<F>>,
                           pairs: &mut Vec<Pair>,
                           done: &mut HashSet<(usize, usize)>,
                           elt: Elt<F>| {
        let t = elts.len();
        for i in 0..t {
            if elts[i].lm.coprime(&elt.lm) {
                // coprimality criterion: this S-polynomial reduces to zero
                done.insert(key(i, t));
            } else {
                pairs.push(pair_of(&elts[i], &elt, i, t));
            }
        }
        elts.push(elt);
    };

    for g in ideal.gens() {
        if g.is_zero() {
            continue;
        }
        let w = work_from(g, order);
        let sugar = g.total_degree().unwrap_or(0);
        add_element(&mut elts, &mut pairs, &mut done, make_elt(f, w, sugar));
    }

    let mut processed = 0usize;
    while !pairs.is_empty() {
        processed += 1;
        if processed > limits.max_pairs {
            return Err(Error::ResourceLimit {
                phase: "completion",
                detail: format!("pair budget of {} exhausted", limits.max_pairs),
            });
        }
        // lowest sugar first, ties by lcm then by age
        let mut best = 0;
        for k in 1..pairs.len() {
            let (a, b) = (&pairs[k], &pairs[best]);
            let ord = a
                .sugar
                .cmp(&b.sugar)
                .then_with(|| order.cmp(&a.lcm, &b.lcm))
                .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)));
            if ord == std::cmp::Ordering::Less {
                best = k;
            }
        }
        let pair = pairs.swap_remove(best);
        done.insert(key(pair.i, pair.j));

        // lcm-chain criterion: a third element inside the lcm whose two
        // companion pairs are already treated makes this pair redundant
        let chain = (0..elts.len()).any(|k| {
            k != pair.i
                && k != pair.j
                && elts[k].lm.divides(&pair.lcm)
                && done.contains(&key(pair.i, k))
                && done.contains(&key(pair.j, k))
        });
        if chain {
            continue;
        }

        let s = spoly(f, order, &elts[pair.i], &elts[pair.j]);
        let reduced = reduce_full(f, order, s, &elts, None, &mut budget)?;
        if reduced.is_empty() {
            continue;
        }
        let sugar = pair.sugar;
        add_element(
            &mut elts,
            &mut pairs,
            &mut done,
            make_elt(f, reduced, sugar),
        );
    }

    // minimalize: keep only elements whose leading monomial no other kept
    // element divides; scanning by ascending leading monomial makes one
    // pass enough
    let mut idx: Vec<usize> = (0..elts.len()).collect();
    idx.sort_by(|&a, &b| {
        order
            .cmp(&elts[a].lm, &elts[b].lm)
            .then(a.cmp(&b))
    });
    let mut kept: Vec<Elt<F>> = Vec::new();
    for &i in &idx {
        if kept.iter().any(|g| g.lm.divides(&elts[i].lm)) {
            continue;
        }
        kept.push(Elt {
            terms: elts[i].terms.clone(),
            lm: elts[i].lm.clone(),
            sugar: elts[i].sugar,
        });
    }

    // tail-reduce each element against the rest; leading monomials are
    // mutually irreducible so they survive unchanged
    for i in 0..kept.len() {
        let work = kept[i].terms.clone();
        let reduced = reduce_full(f, order, work, &kept, Some(i), &mut Budget::unbounded())?;
        debug_assert_eq!(reduced.first().map(|t| &t.0), Some(&kept[i].lm));
        kept[i].terms = reduced;
    }

    let lms: Vec<Monomial> = kept.iter().map(|g| g.lm.clone()).collect();
    let elements: Vec<Polynomial<F>> = kept
        .into_iter()
        .map(|g| work_to_poly(f, nvars, g.terms))
        .collect();

    Ok(GroebnerBasis {
        order,
        nvars,
        elements,
        lms,
    })
}

/// A reduced basis: monic, auto-reduced, sorted by leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    order: MonomialOrder,
    nvars: usize,
    elements: Vec<Polynomial<F>>,
    lms: Vec<Monomial>,
}

impl<F: Field> PartialEq for GroebnerBasis<F> {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.nvars == other.nvars && self.elements == other.elements
    }
}

impl<F: Field> GroebnerBasis<F> {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn elements(&self) -> &[Polynomial<F>] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.lms
    }

    /// True exactly when the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.lms.iter().any(|m| m.is_one())
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elements.is_empty()
    }

    /// Generators as an [`Ideal`], for feeding back into constructions.
    pub fn to_ideal(&self) -> Ideal<F> {
        if self.elements.is_empty() {
            Ideal::zero(self.nvars)
        } else {
            Ideal::new(self.nvars, self.elements.clone())
        }
    }

    /// Full normal form: the unique representative of `p` modulo the ideal
    /// supported on standard monomials.
    pub fn normal_form(&self, p: &Polynomial<F>, f: &F) -> Polynomial<F> {
        let elts: Vec<Elt<F>> = self
            .elements
            .iter()
            .map(|g| {
                let w = work_from(g, self.order);
                let lm = w[0].0.clone();
                Elt {
                    terms: w,
                    lm,
                    sugar: 0,
                }
            })
            .collect();
        let work = work_from(p, self.order);
        let reduced = reduce_full(f, self.order, work, &elts, None, &mut Budget::unbounded())
            .expect("unbounded budget");
        work_to_poly(f, self.nvars, reduced)
    }

    pub fn contains(&self, p: &Polynomial<F>, f: &F) -> bool {
        self.normal_form(p, f).is_zero()
    }

    /// Two reduced bases under the same order present the same ideal
    /// exactly when they are identical.
    pub fn equal_ideal(&self, other: &Self) -> bool {
        assert_eq!(self.order, other.order, "compare bases under one order");
        self == other
    }

    /// Krull dimension of the quotient by the combinatorial rule on leading
    /// monomials: the largest variable subset that no leading monomial's
    /// support fits inside. The whole ring gives -1, the zero ideal gives
    /// the variable count.
    pub fn dimension(&self) -> i64 {
        if self.is_unit() {
            return -1;
        }
        let n = self.nvars;
        assert!(n <= 24, "dimension search is for desk-scale variable counts");
        let masks: Vec<u64> = self
            .lms
            .iter()
            .map(|m| {
                let mut mask = 0u64;
                for (i, &e) in m.exps().iter().enumerate() {
                    if e > 0 {
                        mask |= 1 << i;
                    }
                }
                mask
            })
            .collect();
        let mut best = 0u32;
        for s in 0..(1u64 << n) {
            if s.count_ones() <= best {
                continue;
            }
            if masks.iter().all(|m| m & !s != 0) {
                best = s.count_ones();
            }
        }
        best as i64
    }

    /// Count standard monomials of a zero-dimensional ideal: the dimension
    /// of the quotient vector space.
    pub fn degree_zero_dim(&self) -> Result<u64, Error> {
        let dim = self.dimension();
        if dim != 0 {
            return Err(Error::InvalidInput(format!(
                "point counting needs a zero-dimensional ideal, got dimension {dim}"
            )));
        }
        let mut seen: HashSet<Monomial> = HashSet::new();
        let mut queue = vec![Monomial::one(self.nvars)];
        seen.insert(queue[0].clone());
        let mut count = 0u64;
        while let Some(m) = queue.pop() {
            count += 1;
            for i in 0..self.nvars {
                let next = m.mul(&Monomial::var(self.nvars, i));
                if seen.contains(&next) {
                    continue;
                }
                if self.lms.iter().any(|lm| lm.divides(&next)) {
                    continue;
                }
                seen.insert(next.clone());
                queue.push(next);
            }
        }
        Ok(count)
    }

    /// Total degree of the ideal read off the leading-monomial staircase:
    /// the numerator of the quotient's degree series, with the trivial pole
    /// factors cancelled, evaluated at one. Independent of any slicing.
    pub fn degree_total(&self) -> Result<u64, Error> {
        let dim = self.dimension();
        if dim < 0 {
            return Err(Error::InvalidInput(
                "the unit ideal has no degree".to_string(),
            ));
        }
        let k = hilbert_numerator(&self.lms);
        let cancel = self.nvars as i64 - dim;
        let mut q = k;
        for _ in 0..cancel {
            q = divide_by_one_minus_t(&q)?;
        }
        let val: i128 = q.iter().sum();
        if val <= 0 {
            return Err(Error::InvalidInput(format!(
                "degree series evaluated to {val}; the ideal is not equidimensional of the \
                 computed dimension"
            )));
        }
        Ok(val as u64)
    }

    /// Exhaustively re-check the defining property plus reducedness; for
    /// tests and certification.
    pub fn verify(&self, f: &F) -> Result<bool, Error> {
        // monic and auto-reduced
        for (i, g) in self.elements.iter().enumerate() {
            let Some((_, lc)) = g.leading(self.order) else {
                return Ok(false);
            };
            if !f.is_one(lc) {
                return Ok(false);
            }
            for (m, _) in g.terms() {
                for (j, lm) in self.lms.iter().enumerate() {
                    if i != j && lm.divides(m) {
                        return Ok(false);
                    }
                }
                if self.lms[i].divides(m) && *m != self.lms[i] {
                    return Ok(false);
                }
            }
        }
        // every S-polynomial reduces to zero
        for i in 0..self.elements.len() {
            for j in (i + 1)..self.elements.len() {
                let a = work_from(&self.elements[i], self.order);
                let b = work_from(&self.elements[j], self.order);
                let ea = make_elt(f, a, 0);
                let eb = make_elt(f, b, 0);
                let s = spoly(f, self.order, &ea, &eb);
                let nf = self.normal_form(&work_to_poly(f, self.nvars, s), f);
                if !nf.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Numerator of the degree series of the quotient by a monomial ideal,
/// over the common denominator `(1-t)^nvars`; computed by the standard
/// pivot recursion.
fn hilbert_numerator(lms: &[Monomial]) -> Vec<i128> {
    let gens = minimalize(lms.to_vec());
    numerator_rec(gens)
}

fn numerator_rec(mut gens: Vec<Monomial>) -> Vec<i128> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|m| m.is_one()) {
        return vec![0];
    }
    let pivot = gens.pop().unwrap();
    if gens.is_empty() {
        // single generator: numerator is 1 - t^deg
        let d = pivot.degree() as usize;
        let mut out = vec![0i128; d + 1];
        out[0] = 1;
        out[d] -= 1;
        return out;
    }
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|m| {
            let exps = m
                .exps()
                .iter()
                .zip(pivot.exps())
                .map(|(a, b)| a.saturating_sub(*b))
                .collect();
            Monomial::from_exps(exps)
        })
        .collect();
    let a = numerator_rec(gens.clone());
    let b = numerator_rec(minimalize(colon));
    // a - t^deg(pivot) * b
    let shift = pivot.degree() as usize;
    let mut out = vec![0i128; a.len().max(b.len() + shift)];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i + shift] -= c;
    }
    out
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Exact division by (1 - t); errors if it does not divide.
fn divide_by_one_minus_t(k: &[i128]) -> Result<Vec<i128>, Error> {
    // k = q - t*q  =>  q_i = k_i + q_{i-1}
    let mut q = vec![0i128; k.len().saturating_sub(1).max(1)];
    let mut carry = 0i128;
    for i in 0..k.len() {
        carry += k[i];
        if i + 1 < k.len() {
            if i < q.len() {
                q[i] = carry;
            }
        } else if carry != 0 {
            return Err(Error::InvalidInput(
                "degree series has a lower-order pole than expected".to_string(),
            ));
        }
    }
    while q.len() > 1 && *q.last().unwrap() == 0 {
        q.pop();
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;
    use crate::parse::parse_polynomial;

    fn fp() -> Fp {
        Fp::default_prime()
    }

    fn ideal_of(f: &Fp, vars: &[&str], gens: &[&str]) -> Ideal<Fp> {
        let polys = gens
            .iter()
            .map(|g| parse_polynomial(f, g, vars).unwrap())
            .collect();
        Ideal::new(vars.len(), polys)
    }

    fn gb(f: &Fp, vars: &[&str], gens: &[&str], order: MonomialOrder) -> GroebnerBasis<Fp> {
        groebner(f, &ideal_of(f, vars, gens), order, &EngineLimits::default()).unwrap()
    }

    #[test]
    fn single_generator_is_its_own_basis() {
        let f = fp();
        let b = gb(&f, &["x", "y"], &["x"], MonomialOrder::GrevLex);
        assert_eq!(b.elements().len(), 1);
        assert_eq!(
            b.elements()[0],
            parse_polynomial(&f, "x", &["x", "y"]).unwrap()
        );
        assert!(b.verify(&f).unwrap());
    }

    #[test]
    fn crossing_lines_split_into_coordinates() {
        // (x+y, x-y) has reduced basis {y, x} away from characteristic 2
        let f = fp();
        let b = gb(&f, &["x", "y"], &["x+y", "x-y"], MonomialOrder::GrevLex);
        let lms: Vec<_> = b.leading_monomials().to_vec();
        assert_eq!(lms.len(), 2);
        assert!(lms.contains(&Monomial::var(2, 0)));
        assert!(lms.contains(&Monomial::var(2, 1)));
        assert!(b.verify(&f).unwrap());
    }

    #[test]
    fn space_curve_eliminates_cleanly_under_lex() {
        // vars ordered z > y > x so lex prefers eliminating z, then y
        let f = fp();
        let vars = ["z", "y", "x"];
        let b = gb(&f, &vars, &["y - x^2", "z - x^3"], MonomialOrder::Lex);
        assert_eq!(b.elements().len(), 2);
        let expect_a = parse_polynomial(&f, "y - x^2", &vars).unwrap();
        let expect_b = parse_polynomial(&f, "z - x^3", &vars).unwrap();
        for g in b.elements() {
            assert!(*g == expect_a || *g == expect_b, "unexpected element {g:?}");
        }
        assert!(b.verify(&f).unwrap());
        // x stays free: the curve has dimension one
        assert_eq!(b.dimension(), 1);
    }

    #[test]
    fn normal_form_is_a_canonical_representative() {
        let f = fp();
        let vars = ["x", "y"];
        let b = gb(&f, &vars, &["y - x^2"], MonomialOrder::GrevLex);
        // y^2 reduces to x^4 modulo (y - x^2)... under grevlex leading
        // monomial of y - x^2 is x^2, so x^4 reduces to y^2 instead
        let p = parse_polynomial(&f, "x^4", &vars).unwrap();
        let nf = b.normal_form(&p, &f);
        assert_eq!(nf, parse_polynomial(&f, "y^2", &vars).unwrap());
        // membership: (y - x^2) * (y + x^2) is in the ideal
        let q = parse_polynomial(&f, "y^2 - x^4", &vars).unwrap();
        assert!(b.contains(&q, &f));
        assert!(!b.contains(&parse_polynomial(&f, "y", &vars).unwrap(), &f));
    }

    #[test]
    fn unit_ideal_collapses_to_one() {
        let f = fp();
        let b = gb(&f, &["x", "y"], &["x", "x + 1"], MonomialOrder::GrevLex);
        assert!(b.is_unit());
        assert_eq!(b.elements().len(), 1);
        assert!(b.elements()[0].is_unit_constant());
        assert_eq!(b.dimension(), -1);
    }

    #[test]
    fn dimension_of_standard_examples() {
        let f = fp();
        let vars = ["x", "y", "z"];
        // zero ideal: the whole space
        let zero = groebner(
            &f,
            &Ideal::zero(3),
            MonomialOrder::GrevLex,
            &EngineLimits::default(),
        )
        .unwrap();
        assert_eq!(zero.dimension(), 3);
        // one hypersurface: dimension two
        assert_eq!(gb(&f, &vars, &["x^2+y^2-z^2"], MonomialOrder::GrevLex).dimension(), 2);
        // two coordinates: a line
        assert_eq!(gb(&f, &vars, &["x", "y"], MonomialOrder::GrevLex).dimension(), 1);
        // a point in the plane
        assert_eq!(gb(&f, &["x", "y"], &["x", "y"], MonomialOrder::GrevLex).dimension(), 0);
    }

    #[test]
    fn quotient_dimension_counts_points_with_multiplicity() {
        let f = fp();
        let vars = ["x", "y"];
        // four points
        let b = gb(&f, &vars, &["x^2 - 1", "y^2 - 1"], MonomialOrder::GrevLex);
        assert_eq!(b.degree_zero_dim().unwrap(), 4);
        // a point with a tangent direction: multiplicity two
        let b2 = gb(&f, &vars, &["x^2", "y"], MonomialOrder::GrevLex);
        assert_eq!(b2.degree_zero_dim().unwrap(), 2);
        // positive dimension is rejected
        assert!(gb(&f, &vars, &["y - x^2"], MonomialOrder::GrevLex)
            .degree_zero_dim()
            .is_err());
    }

    #[test]
    fn staircase_degree_matches_classical_values() {
        let f = fp();
        // plane curve of degree three
        assert_eq!(
            gb(&f, &["x", "y"], &["y^2 - x^3"], MonomialOrder::GrevLex)
                .degree_total()
                .unwrap(),
            3
        );
        // a conic
        assert_eq!(
            gb(&f, &["x", "y"], &["x^2 + y^2 - 1"], MonomialOrder::GrevLex)
                .degree_total()
                .unwrap(),
            2
        );
        // two crossing lines
        assert_eq!(
            gb(&f, &["x", "y"], &["x*y"], MonomialOrder::GrevLex)
                .degree_total()
                .unwrap(),
            2
        );
        // a linear subspace
        assert_eq!(
            gb(&f, &["x", "y", "z"], &["z"], MonomialOrder::GrevLex)
                .degree_total()
                .unwrap(),
            1
        );
        // zero-dimensional: agrees with the quotient dimension
        assert_eq!(
            gb(&f, &["x", "y"], &["x^2 - 1", "y^2 - 1"], MonomialOrder::GrevLex)
                .degree_total()
                .unwrap(),
            4
        );
        // the whole space has degree one
        let zero = groebner(
            &f,
            &Ideal::zero(2),
            MonomialOrder::GrevLex,
            &EngineLimits::default(),
        )
        .unwrap();
        assert_eq!(zero.degree_total().unwrap(), 1);
    }

    #[test]
    fn pair_budget_errors_are_reported() {
        let f = fp();
        let tight = EngineLimits {
            max_pairs: 1,
            max_reduction_steps: 10,
        };
        // cyclic-ish system that needs real work
        let ideal = ideal_of(
            &f,
            &["x", "y", "z"],
            &["x + y + z", "x*y + y*z + z*x", "x*y*z - 1"],
        );
        let err = groebner(&f, &ideal, MonomialOrder::GrevLex, &tight).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit { .. }));
    }

    #[test]
    fn reduced_basis_is_canonical_across_generator_presentations() {
        let f = fp();
        let vars = ["x", "y"];
        let a = gb(&f, &vars, &["y - x^2", "x*y - x^3"], MonomialOrder::GrevLex);
        let b = gb(&f, &vars, &["y - x^2"], MonomialOrder::GrevLex);
        assert!(a.equal_ideal(&b));
    }
}
