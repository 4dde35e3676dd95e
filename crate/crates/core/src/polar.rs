//! Critical schemes of linear forms on the smooth locus, and certified
//! counts of their points.
//!
//! For a variety of codimension `c` presented by generators `g_1..g_r`,
//! the critical scheme of a linear form `l` is cut out by the generators
//! together with the `(c+1) x (c+1)` minors of the Jacobian of the
//! generators augmented with the gradient of `l`, with everything
//! supported on the singular locus removed by saturation. For a generic
//! `l` this scheme is a finite set of reduced points on the smooth locus,
//! and its cardinality is the first polar invariant; genericity is
//! certified a posteriori by checking dimension zero and reducedness, and
//! failed draws are retried with fresh randomness.

use itertools::Itertools;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::certificate::{derive_seed, LevelRecord, TrialOutcome, TrialRecord, STAGE_RADICAL};
use crate::elimination::saturate;
use crate::error::Error;
use crate::field::Field;
use crate::groebner::{groebner, EngineLimits, GroebnerBasis};
use crate::ideal::{Ideal, VarietySpec};
use crate::monomial::MonomialOrder;
use crate::poly::{random_linear_form, Polynomial};
use crate::radical::is_radical_zero_dim;

/// Cap on the number of nonzero generators a presentation may carry.
/// Minor expansion enumerates row and column subsets, so the cost grows
/// binomially with the generator count; beyond this the presentation
/// should be trimmed first.
pub const MAX_GENERATORS: usize = 6;

/// A critical scheme, before any genericity judgement: the saturated
/// ideal, the form that produced it, and its basis.
#[derive(Clone, Debug)]
pub struct CriticalScheme<F: Field> {
    pub ideal: Ideal<F>,
    pub linear_form: Polynomial<F>,
    pub basis: GroebnerBasis<F>,
}

/// A certified critical-point count together with its trial audit.
#[derive(Clone, Debug)]
pub struct MorseCount {
    pub count: u64,
    pub record: LevelRecord,
}

/// Ideal of the singular locus: the presentation plus the `c x c` minors
/// of its Jacobian, where `c` is the codimension. Codimension zero means
/// the whole affine space, which is smooth everywhere.
pub fn singular_locus_ideal<F: Field>(f: &F, spec: &VarietySpec<F>) -> Result<Ideal<F>, Error> {
    let n = spec.nvars();
    let c = spec.codim();
    if c == 0 {
        return Ok(Ideal::unit(f, n));
    }
    let gens: Vec<&Polynomial<F>> = spec.ideal().nonzero_gens().collect();
    if gens.len() > MAX_GENERATORS {
        return Err(Error::TooManyGenerators {
            got: gens.len(),
            max: MAX_GENERATORS,
        });
    }
    let jac = jacobian(f, &gens, n);
    let mut out: Vec<Polynomial<F>> = gens.iter().map(|g| (*g).clone()).collect();
    out.extend(minors(f, &jac, c));
    Ok(Ideal::new(n, out))
}

/// Critical scheme of `l` on the smooth locus: rank-drop minors of the
/// augmented Jacobian, saturated by the singular locus.
pub fn critical_ideal<F: Field>(
    f: &F,
    spec: &VarietySpec<F>,
    l: &Polynomial<F>,
    limits: &EngineLimits,
) -> Result<CriticalScheme<F>, Error> {
    let n = spec.nvars();
    let c = spec.codim();
    assert!(
        spec.dim() >= 1,
        "critical schemes need positive dimension to mean anything"
    );
    assert_eq!(l.nvars(), n);
    let gens: Vec<&Polynomial<F>> = spec.ideal().nonzero_gens().collect();
    if gens.len() > MAX_GENERATORS {
        return Err(Error::TooManyGenerators {
            got: gens.len(),
            max: MAX_GENERATORS,
        });
    }
    let mut rows = jacobian(f, &gens, n);
    rows.push((0..n).map(|v| l.derivative(v, f)).collect());
    let mut raw_gens: Vec<Polynomial<F>> = gens.iter().map(|g| (*g).clone()).collect();
    raw_gens.extend(minors(f, &rows, c + 1));
    let raw = Ideal::new(n, raw_gens);
    let sing = singular_locus_ideal(f, spec)?;
    let cleaned = saturate(f, &raw, &sing, limits)?;
    let basis = groebner(f, &cleaned, MonomialOrder::GrevLex, limits)?;
    Ok(CriticalScheme {
        ideal: cleaned,
        linear_form: l.clone(),
        basis,
    })
}

/// Number of critical points of a generic affine form on the smooth
/// locus. Draws forms until one produces a zero-dimensional reduced
/// critical scheme (certifying genericity), records every trial, and
/// gives up with [`Error::GenericityExhausted`] once the budget is spent.
pub fn morse_count<F: Field>(
    f: &F,
    spec: &VarietySpec<F>,
    seed: u64,
    trials: usize,
    limits: &EngineLimits,
) -> Result<MorseCount, Error> {
    let mut record = LevelRecord::new("critical-points");
    for t in 0..trials {
        let trial_seed = derive_seed(seed, t as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
        let l = random_linear_form(f, spec.nvars(), true, &mut rng);
        let scheme = critical_ideal(f, spec, &l, limits)?;
        if scheme.basis.is_unit() {
            // an empty critical scheme is a legitimate generic count of zero
            record.trials.push(TrialRecord {
                seed: trial_seed,
                outcome: TrialOutcome::AcceptedEmpty,
            });
            record.count = Some(0);
            return Ok(MorseCount { count: 0, record });
        }
        let dim = scheme.basis.dimension();
        if dim != 0 {
            record.trials.push(TrialRecord {
                seed: trial_seed,
                outcome: TrialOutcome::WrongDimension { got: dim },
            });
            continue;
        }
        match is_radical_zero_dim(
            f,
            &scheme.basis,
            derive_seed(trial_seed, STAGE_RADICAL),
            trials,
            limits,
        ) {
            Ok(true) => {
                let count = scheme.basis.degree_zero_dim()?;
                record.trials.push(TrialRecord {
                    seed: trial_seed,
                    outcome: TrialOutcome::Accepted,
                });
                record.count = Some(count);
                return Ok(MorseCount { count, record });
            }
            Ok(false) => record.trials.push(TrialRecord {
                seed: trial_seed,
                outcome: TrialOutcome::NotReduced,
            }),
            Err(Error::RadicalityIndeterminate { .. }) => record.trials.push(TrialRecord {
                seed: trial_seed,
                outcome: TrialOutcome::Indeterminate,
            }),
            Err(e) => return Err(e),
        }
    }
    Err(Error::GenericityExhausted {
        phase: "critical-point count",
        trials,
    })
}

fn jacobian<F: Field>(f: &F, gens: &[&Polynomial<F>], n: usize) -> Vec<Vec<Polynomial<F>>> {
    gens.iter()
        .map(|g| (0..n).map(|v| g.derivative(v, f)).collect())
        .collect()
}

/// All `k x k` minors of a polynomial matrix, with identically zero
/// minors dropped.
fn minors<F: Field>(f: &F, rows: &[Vec<Polynomial<F>>], k: usize) -> Vec<Polynomial<F>> {
    let r = rows.len();
    let ncols = rows.first().map_or(0, |row| row.len());
    debug_assert!(k >= 1 && k <= r && k <= ncols, "minor size out of range");
    let mut out = Vec::new();
    for rsel in (0..r).combinations(k) {
        for csel in (0..ncols).combinations(k) {
            let sub: Vec<Vec<Polynomial<F>>> = rsel
                .iter()
                .map(|&i| csel.iter().map(|&j| rows[i][j].clone()).collect())
                .collect();
            let det = determinant(f, &sub);
            if !det.is_zero() {
                out.push(det);
            }
        }
    }
    out
}

/// Laplace expansion along the first row; fine for the tiny matrices
/// minor enumeration produces.
fn determinant<F: Field>(f: &F, m: &[Vec<Polynomial<F>>]) -> Polynomial<F> {
    if m.len() == 1 {
        return m[0][0].clone();
    }
    let mut acc = Polynomial::zero(m[0][0].nvars());
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let sub: Vec<Vec<Polynomial<F>>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let cofactor = entry.mul(&determinant(f, &sub), f);
        acc = if j % 2 == 0 {
            acc.add(&cofactor, f)
        } else {
            acc.sub(&cofactor, f)
        };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;
    use crate::parse::parse_polynomial;

    fn fp() -> Fp {
        Fp::default_prime()
    }

    fn spec(f: &Fp, vars: &[&str], gens: &[&str], dim: usize) -> VarietySpec<Fp> {
        let polys = gens
            .iter()
            .map(|g| parse_polynomial(f, g, vars).unwrap())
            .collect();
        VarietySpec::new(f, Ideal::new(vars.len(), polys), dim, &EngineLimits::default()).unwrap()
    }

    fn count(f: &Fp, vars: &[&str], gens: &[&str], dim: usize) -> u64 {
        morse_count(
            f,
            &spec(f, vars, gens, dim),
            0,
            8,
            &EngineLimits::default(),
        )
        .unwrap()
        .count
    }

    #[test]
    fn determinant_of_a_numeric_matrix() {
        let f = fp();
        let c = |v: i64| Polynomial::constant(&f, f.from_i64(v), 1);
        // det [[1,2],[3,4]] = -2
        let m = vec![vec![c(1), c(2)], vec![c(3), c(4)]];
        assert_eq!(determinant(&f, &m), c(-2));
        // det [[1,2,3],[4,5,6],[7,8,10]] = -3
        let m3 = vec![
            vec![c(1), c(2), c(3)],
            vec![c(4), c(5), c(6)],
            vec![c(7), c(8), c(10)],
        ];
        assert_eq!(determinant(&f, &m3), c(-3));
    }

    #[test]
    fn singular_locus_of_a_cuspidal_curve_is_the_origin() {
        let f = fp();
        let s = spec(&f, &["x", "y"], &["y^2 - x^3"], 1);
        let sing = singular_locus_ideal(&f, &s).unwrap();
        let basis = groebner(&f, &sing, MonomialOrder::GrevLex, &EngineLimits::default()).unwrap();
        assert_eq!(basis.dimension(), 0);
        // the locus is the one point, carried with scheme multiplicity 2:
        // the ideal collapses to (x^2, y)
        assert_eq!(basis.degree_zero_dim().unwrap(), 2);
        let x2 = parse_polynomial(&f, "x^2", &["x", "y"]).unwrap();
        let y = parse_polynomial(&f, "y", &["x", "y"]).unwrap();
        assert!(basis.contains(&x2, &f));
        assert!(basis.contains(&y, &f));
    }

    #[test]
    fn singular_locus_of_a_cone_is_the_vertex() {
        let f = fp();
        let s = spec(&f, &["x", "y", "z"], &["x^2 + y^2 - z^2"], 2);
        let sing = singular_locus_ideal(&f, &s).unwrap();
        let basis = groebner(&f, &sing, MonomialOrder::GrevLex, &EngineLimits::default()).unwrap();
        assert_eq!(basis.dimension(), 0);
    }

    #[test]
    fn full_ambient_space_is_smooth() {
        let f = fp();
        let s = spec(&f, &["x", "y"], &["0"], 2);
        let sing = singular_locus_ideal(&f, &s).unwrap();
        assert!(sing.gens().iter().any(|g| g.is_unit_constant()));
    }

    #[test]
    fn critical_count_of_a_parabola_is_one() {
        let f = fp();
        assert_eq!(count(&f, &["x", "y"], &["y - x^2"], 1), 1);
    }

    #[test]
    fn critical_count_of_a_circle_is_two() {
        let f = fp();
        assert_eq!(count(&f, &["x", "y"], &["x^2 + y^2 - 1"], 1), 2);
    }

    #[test]
    fn critical_count_of_a_cusp_is_one() {
        // the singular point contributes nothing once saturated away
        let f = fp();
        assert_eq!(count(&f, &["x", "y"], &["y^2 - x^3"], 1), 1);
    }

    #[test]
    fn critical_count_of_two_crossing_lines_is_zero() {
        // each branch is a line, and linear forms have no critical points
        // on a line
        let f = fp();
        assert_eq!(count(&f, &["x", "y"], &["x*y"], 1), 0);
    }

    #[test]
    fn critical_count_of_a_plane_is_zero() {
        let f = fp();
        assert_eq!(count(&f, &["x", "y", "z"], &["z"], 2), 0);
    }

    #[test]
    fn critical_count_of_a_quadric_cone_is_zero() {
        let f = fp();
        assert_eq!(count(&f, &["x", "y", "z"], &["x^2 + y^2 - z^2"], 2), 0);
    }

    #[test]
    fn oversized_presentations_are_rejected() {
        let f = fp();
        let vars = ["x", "y", "z"];
        let gens: Vec<String> = (0..7).map(|k| format!("x^2 - {k}*z")).collect();
        let refs: Vec<&str> = gens.iter().map(|s| s.as_str()).collect();
        let polys = refs
            .iter()
            .map(|g| parse_polynomial(&f, g, &vars).unwrap())
            .collect();
        let s = VarietySpec::new(
            &f,
            Ideal::new(3, polys),
            1,
            &EngineLimits::default(),
        )
        .unwrap();
        let err = singular_locus_ideal(&f, &s).unwrap_err();
        assert!(matches!(err, Error::TooManyGenerators { got: 7, max: 6 }));
    }
}
