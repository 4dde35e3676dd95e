//! The global polar profile and the Euler obstruction it determines.
//!
//! The profile of a `d`-dimensional variety is the vector of critical
//! counts of generic forms on successive generic hyperplane slices — the
//! entry at slicing depth `k` counts critical points on the `k`-fold
//! slice — closed off by the degree, obtained by slicing down to
//! dimension zero and counting certified-reduced points. The degree is
//! independently recomputed from the leading-term staircase of the
//! presentation and the two values must agree exactly; a mismatch is a
//! hard engine error, never retried. The Euler obstruction is the
//! alternating sum of the profile.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::certificate::{
    derive_seed, stage_seed, GenericityCertificate, LevelRecord, TrialOutcome, TrialRecord,
    STAGE_DEGREE, STAGE_MORSE, STAGE_RADICAL, STAGE_RECURSION, STAGE_SLICE,
};
use crate::elimination::saturate;
use crate::error::Error;
use crate::field::Field;
use crate::groebner::{groebner, EngineLimits};
use crate::ideal::{Ideal, VarietySpec};
use crate::monomial::MonomialOrder;
use crate::polar::{morse_count, singular_locus_ideal};
use crate::poly::{linear_form, random_linear_form, Polynomial};
use crate::radical::is_radical_zero_dim;

/// The profile vector: `alphas[k]` is the critical count after `k`
/// hyperplane slices, and the final entry is the degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolarProfile {
    pub alphas: Vec<u64>,
    pub dim: usize,
}

/// Euler obstruction together with the profile it came from and the full
/// randomness audit.
#[derive(Clone, Debug)]
pub struct EulerResult {
    pub eu: i64,
    pub profile: PolarProfile,
    pub certificate: GenericityCertificate,
}

/// Outcome of the one-step slicing consistency check: the obstruction of
/// the variety must equal that of a generic hyperplane slice, corrected
/// by the signed critical count.
#[derive(Clone, Debug, Serialize)]
pub struct RecursionVerdict {
    pub holds: bool,
    pub eu: i64,
    pub eu_slice: i64,
    pub alpha1: u64,
    pub lhs: i64,
    pub rhs: i64,
}

/// A certified degree computation with its audit trail.
#[derive(Clone, Debug)]
pub struct DegreeCount {
    pub degree: u64,
    pub records: Vec<LevelRecord>,
}

/// Replace the pivot variable of an affine hyperplane `h = 0` by the
/// expression it solves to, producing substitution images into a ring
/// with one variable fewer. The pivot is the last variable with a
/// nonzero coefficient.
fn hyperplane_images<F: Field>(f: &F, h: &Polynomial<F>) -> (usize, Vec<Polynomial<F>>) {
    let n = h.nvars();
    let (coeffs, constant) = h
        .as_affine_form(f)
        .expect("hyperplanes are affine by construction");
    let pivot = (0..n)
        .rev()
        .find(|&i| !f.is_zero(&coeffs[i]))
        .expect("a hyperplane has a nonzero linear coefficient");
    let neg_inv = f.neg(&f.inv(&coeffs[pivot]).expect("nonzero pivot coefficient"));
    let m = n - 1;
    let mut expr_coeffs = vec![f.zero(); m];
    for (i, c) in coeffs.iter().enumerate() {
        if i == pivot {
            continue;
        }
        let target = if i < pivot { i } else { i - 1 };
        expr_coeffs[target] = f.mul(c, &neg_inv);
    }
    let expr = linear_form(f, &expr_coeffs, f.mul(&constant, &neg_inv));
    let images = (0..n)
        .map(|i| {
            if i == pivot {
                expr.clone()
            } else if i < pivot {
                Polynomial::variable(f, m, i)
            } else {
                Polynomial::variable(f, m, i - 1)
            }
        })
        .collect();
    (pivot, images)
}

fn substitute_ideal<F: Field>(
    f: &F,
    ideal: &Ideal<F>,
    images: &[Polynomial<F>],
    m: usize,
) -> Ideal<F> {
    Ideal::new(
        m,
        ideal
            .gens()
            .iter()
            .map(|g| g.substitute(images, m, f))
            .collect(),
    )
}

/// Intersect with one generic affine hyperplane, eliminating a variable.
/// A draw is accepted when the result is again a variety of dimension
/// exactly one less; degenerate draws are recorded and retried.
pub fn slice<F: Field>(
    f: &F,
    spec: &VarietySpec<F>,
    seed: u64,
    trials: usize,
    limits: &EngineLimits,
) -> Result<(VarietySpec<F>, LevelRecord), Error> {
    let (sliced, _, record) = slice_with_carry(f, spec, &[], seed, trials, limits)?;
    Ok((sliced, record))
}

/// Like [`slice`], but also pushes side ideals through the same
/// substitution so they keep describing the same loci on the slice.
pub fn slice_with_carry<F: Field>(
    f: &F,
    spec: &VarietySpec<F>,
    carry: &[Ideal<F>],
    seed: u64,
    trials: usize,
    limits: &EngineLimits,
) -> Result<(VarietySpec<F>, Vec<Ideal<F>>, LevelRecord), Error> {
    assert!(spec.dim() >= 1, "cannot slice a zero-dimensional variety");
    let n = spec.nvars();
    let mut record = LevelRecord::new("hyperplane-slice");
    for t in 0..trials {
        let trial_seed = derive_seed(seed, t as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
        let h = random_linear_form(f, n, true, &mut rng);
        let (_pivot, images) = hyperplane_images(f, &h);
        let sliced = substitute_ideal(f, spec.ideal(), &images, n - 1);
        match VarietySpec::new(f, sliced, spec.dim() - 1, limits) {
            Ok(next) => {
                let carried = carry
                    .iter()
                    .map(|ide| substitute_ideal(f, ide, &images, n - 1))
                    .collect();
                record.trials.push(TrialRecord {
                    seed: trial_seed,
                    outcome: TrialOutcome::Accepted,
                });
                return Ok((next, carried, record));
            }
            Err(Error::EmptyVariety) => record.trials.push(TrialRecord {
                seed: trial_seed,
                outcome: TrialOutcome::SliceEmpty,
            }),
            Err(Error::DimensionMismatch { computed, .. }) => record.trials.push(TrialRecord {
                seed: trial_seed,
                outcome: TrialOutcome::NoDimensionDrop { got: computed },
            }),
            Err(e) => return Err(e),
        }
    }
    Err(Error::GenericityExhausted {
        phase: "hyperplane slice",
        trials,
    })
}

/// Degree as the number of points cut out by a full flag of generic
/// hyperplanes, certified reduced, with contributions on the (sliced)
/// singular locus saturated away. Cross-checked against the staircase
/// degree of the presentation itself; disagreement is a hard error.
pub fn degree_by_slicing<F: Field>(
    f: &F,
    spec: &VarietySpec<F>,
    seed: u64,
    trials: usize,
    limits: &EngineLimits,
) -> Result<DegreeCount, Error> {
    let d = spec.dim();
    let sing = singular_locus_ideal(f, spec)?;
    let mut records: Vec<LevelRecord> = Vec::new();
    let mut count_record = LevelRecord::new("point-count").at_level(d);
    for attempt in 0..trials {
        let attempt_seed = derive_seed(seed, attempt as u64);
        let mut cur = spec.clone();
        let mut carried = vec![sing.clone()];
        for level in 0..d {
            let (next, c, rec) = slice_with_carry(
                f,
                &cur,
                &carried,
                derive_seed(attempt_seed, level as u64),
                trials,
                limits,
            )?;
            records.push(rec.at_level(level));
            cur = next;
            carried = c;
        }
        let cleaned = saturate(f, cur.ideal(), &carried[0], limits)?;
        let basis = groebner(f, &cleaned, MonomialOrder::GrevLex, limits)?;
        if basis.is_unit() {
            count_record.trials.push(TrialRecord {
                seed: attempt_seed,
                outcome: TrialOutcome::SliceEmpty,
            });
            continue;
        }
        let dim = basis.dimension();
        if dim != 0 {
            count_record.trials.push(TrialRecord {
                seed: attempt_seed,
                outcome: TrialOutcome::WrongDimension { got: dim },
            });
            continue;
        }
        match is_radical_zero_dim(
            f,
            &basis,
            derive_seed(attempt_seed, STAGE_RADICAL),
            trials,
            limits,
        ) {
            Ok(true) => {
                let degree = basis.degree_zero_dim()?;
                count_record.trials.push(TrialRecord {
                    seed: attempt_seed,
                    outcome: TrialOutcome::Accepted,
                });
                count_record.count = Some(degree);
                records.push(count_record);
                let leading = spec.basis().degree_total()?;
                if degree != leading {
                    return Err(Error::DegreeMismatch {
                        sliced: degree,
                        leading,
                    });
                }
                return Ok(DegreeCount { degree, records });
            }
            Ok(false) => count_record.trials.push(TrialRecord {
                seed: attempt_seed,
                outcome: TrialOutcome::NotReduced,
            }),
            Err(Error::RadicalityIndeterminate { .. }) => count_record.trials.push(TrialRecord {
                seed: attempt_seed,
                outcome: TrialOutcome::Indeterminate,
            }),
            Err(e) => return Err(e),
        }
    }
    Err(Error::GenericityExhausted {
        phase: "degree count",
        trials,
    })
}

/// The full profile: critical counts at every slicing depth, then the
/// degree, with every random draw recorded in a replayable certificate.
pub fn polar_profile<F: Field>(
    f: &F,
    spec: &VarietySpec<F>,
    master_seed: u64,
    trials: usize,
    limits: &EngineLimits,
) -> Result<(PolarProfile, GenericityCertificate), Error> {
    let d = spec.dim();
    let mut certificate = GenericityCertificate::new(f.describe(), master_seed, trials);
    let mut alphas = Vec::with_capacity(d + 1);
    let mut cur = spec.clone();
    for level in 0..d {
        let mc = morse_count(
            f,
            &cur,
            stage_seed(master_seed, STAGE_MORSE, level as u64),
            trials,
            limits,
        )?;
        alphas.push(mc.count);
        certificate.push(mc.record.at_level(level));
        if level + 1 < d {
            let (next, rec) = slice(
                f,
                &cur,
                stage_seed(master_seed, STAGE_SLICE, level as u64),
                trials,
                limits,
            )?;
            certificate.push(rec.at_level(level));
            cur = next;
        }
    }
    let dc = degree_by_slicing(
        f,
        spec,
        stage_seed(master_seed, STAGE_DEGREE, 0),
        trials,
        limits,
    )?;
    for rec in dc.records {
        certificate.push(rec);
    }
    alphas.push(dc.degree);
    Ok((PolarProfile { alphas, dim: d }, certificate))
}

/// Alternating sum of the profile, signed so the degree enters
/// positively.
fn alternating_sum(alphas: &[u64], d: usize) -> i64 {
    alphas
        .iter()
        .enumerate()
        .map(|(k, &a)| {
            let sign = if (d - k) % 2 == 0 { 1 } else { -1 };
            sign * a as i64
        })
        .sum()
}

/// The global Euler obstruction: alternating sum of the polar profile.
pub fn global_euler_obstruction<F: Field>(
    f: &F,
    spec: &VarietySpec<F>,
    master_seed: u64,
    trials: usize,
    limits: &EngineLimits,
) -> Result<EulerResult, Error> {
    let (profile, certificate) = polar_profile(f, spec, master_seed, trials, limits)?;
    let eu = alternating_sum(&profile.alphas, profile.dim);
    Ok(EulerResult {
        eu,
        profile,
        certificate,
    })
}

/// Consistency check relating the obstruction of the variety to that of
/// one generic hyperplane slice: the two sides are computed with
/// independent randomness and must agree.
pub fn recursion_check<F: Field>(
    f: &F,
    spec: &VarietySpec<F>,
    master_seed: u64,
    trials: usize,
    limits: &EngineLimits,
) -> Result<RecursionVerdict, Error> {
    let d = spec.dim();
    assert!(d >= 1, "the slicing identity needs positive dimension");
    let full = global_euler_obstruction(
        f,
        spec,
        stage_seed(master_seed, STAGE_RECURSION, 0),
        trials,
        limits,
    )?;
    let (sliced, _) = slice(
        f,
        spec,
        stage_seed(master_seed, STAGE_RECURSION, 1),
        trials,
        limits,
    )?;
    let part = global_euler_obstruction(
        f,
        &sliced,
        stage_seed(master_seed, STAGE_RECURSION, 2),
        trials,
        limits,
    )?;
    let alpha1 = morse_count(
        f,
        spec,
        stage_seed(master_seed, STAGE_RECURSION, 3),
        trials,
        limits,
    )?
    .count;
    let sign = if d % 2 == 0 { 1 } else { -1 };
    let lhs = full.eu;
    let rhs = part.eu + sign * alpha1 as i64;
    Ok(RecursionVerdict {
        holds: lhs == rhs,
        eu: full.eu,
        eu_slice: part.eu,
        alpha1,
        lhs,
        rhs,
    })
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

    fn run(f: &Fp, vars: &[&str], gens: &[&str], dim: usize) -> EulerResult {
        global_euler_obstruction(f, &spec(f, vars, gens, dim), 0, 8, &EngineLimits::default())
            .unwrap()
    }

    #[test]
    fn hyperplane_substitution_eliminates_the_pivot() {
        let f = fp();
        // h = x + 2y - 3 solves to y = (3 - x)/2; substituting into x*y
        // gives x*(3-x)/2
        let h = parse_polynomial(&f, "x + 2*y - 3", &["x", "y"]).unwrap();
        let (pivot, images) = hyperplane_images(&f, &h);
        assert_eq!(pivot, 1);
        let g = parse_polynomial(&f, "x*y", &["x", "y"]).unwrap();
        let expected = parse_polynomial(&f, "3/2*x - 1/2*x^2", &["x"]).unwrap();
        assert_eq!(g.substitute(&images, 1, &f), expected);
    }

    #[test]
    fn slicing_a_circle_gives_two_points() {
        let f = fp();
        let s = spec(&f, &["x", "y"], &["x^2 + y^2 - 1"], 1);
        let (sliced, record) = slice(&f, &s, 0, 8, &EngineLimits::default()).unwrap();
        assert_eq!(sliced.dim(), 0);
        assert_eq!(sliced.nvars(), 1);
        assert!(record.accepted_seed().is_some());
        assert_eq!(sliced.basis().degree_zero_dim().unwrap(), 2);
    }

    #[test]
    fn degree_of_a_cuspidal_cubic_is_three() {
        let f = fp();
        let s = spec(&f, &["x", "y"], &["y^2 - x^3"], 1);
        let dc = degree_by_slicing(&f, &s, 0, 8, &EngineLimits::default()).unwrap();
        assert_eq!(dc.degree, 3);
    }

    #[test]
    fn degree_of_a_point_needs_no_slicing() {
        let f = fp();
        let s = spec(&f, &["x", "y"], &["x - 5", "y + 1"], 0);
        let dc = degree_by_slicing(&f, &s, 0, 8, &EngineLimits::default()).unwrap();
        assert_eq!(dc.degree, 1);
    }

    #[test]
    fn profile_of_a_parabola() {
        let f = fp();
        let r = run(&f, &["x", "y"], &["y - x^2"], 1);
        assert_eq!(r.profile.alphas, vec![1, 2]);
        assert_eq!(r.eu, 1);
    }

    #[test]
    fn profile_of_a_circle() {
        let f = fp();
        let r = run(&f, &["x", "y"], &["x^2 + y^2 - 1"], 1);
        assert_eq!(r.profile.alphas, vec![2, 2]);
        assert_eq!(r.eu, 0);
    }

    #[test]
    fn profile_of_a_cuspidal_cubic() {
        let f = fp();
        let r = run(&f, &["x", "y"], &["y^2 - x^3"], 1);
        assert_eq!(r.profile.alphas, vec![1, 3]);
        assert_eq!(r.eu, 2);
    }

    #[test]
    fn profile_of_two_crossing_lines() {
        let f = fp();
        let r = run(&f, &["x", "y"], &["x*y"], 1);
        assert_eq!(r.profile.alphas, vec![0, 2]);
        assert_eq!(r.eu, 2);
    }

    #[test]
    fn profile_of_a_plane_in_three_space() {
        let f = fp();
        let r = run(&f, &["x", "y", "z"], &["z"], 2);
        assert_eq!(r.profile.alphas, vec![0, 0, 1]);
        assert_eq!(r.eu, 1);
    }

    #[test]
    fn profile_of_a_quadric_cone() {
        let f = fp();
        let r = run(&f, &["x", "y", "z"], &["x^2 + y^2 - z^2"], 2);
        assert_eq!(r.profile.alphas, vec![0, 2, 2]);
        assert_eq!(r.eu, 0);
    }

    #[test]
    fn certificate_covers_every_stage() {
        let f = fp();
        let r = run(&f, &["x", "y", "z"], &["x^2 + y^2 - z^2"], 2);
        // two critical-point stages, one inter-slice, two degree slices,
        // one point count
        assert!(r.certificate.levels.len() >= 5);
        assert!(r.certificate.total_trials() >= r.certificate.levels.len());
        assert_eq!(r.certificate.master_seed, 0);
    }

    #[test]
    fn recursion_identity_holds_on_singular_curves() {
        let f = fp();
        for (gens, dim) in [(vec!["y^2 - x^3"], 1), (vec!["x*y"], 1)] {
            let s = spec(&f, &["x", "y"], &gens, dim);
            let v = recursion_check(&f, &s, 7, 8, &EngineLimits::default()).unwrap();
            assert!(v.holds, "identity failed: {v:?}");
        }
    }

    #[test]
    fn recursion_identity_holds_on_the_cone() {
        let f = fp();
        let s = spec(&f, &["x", "y", "z"], &["x^2 + y^2 - z^2"], 2);
        let v = recursion_check(&f, &s, 11, 8, &EngineLimits::default()).unwrap();
        assert!(v.holds, "identity failed: {v:?}");
    }
}
