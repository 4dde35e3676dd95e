//! Shared fixtures for the benchmark targets: small, fixed systems with
//! known behavior, so timings track engine changes rather than input
//! drift.

use euob_core::{parse_polynomial, EngineLimits, Field, Fp, Ideal, Polynomial, VarietySpec};

pub fn parse_system<F: Field>(f: &F, vars: &[&str], gens: &[&str]) -> Ideal<F> {
    let gens: Vec<Polynomial<F>> = gens
        .iter()
        .map(|g| parse_polynomial(f, g, vars).expect("fixture parses"))
        .collect();
    Ideal::new(vars.len(), gens)
}

/// A dense zero-dimensional system in three variables; the classic
/// small completion workload.
pub fn katsura3(f: &Fp) -> Ideal<Fp> {
    parse_system(
        f,
        &["x", "y", "z"],
        &[
            "x + 2*y + 2*z - 1",
            "x^2 + 2*y^2 + 2*z^2 - x",
            "2*x*y + 2*y*z - y",
        ],
    )
}

/// The cuspidal cubic, dimension one in the plane.
pub fn cusp(f: &Fp, limits: &EngineLimits) -> VarietySpec<Fp> {
    VarietySpec::new(f, parse_system(f, &["x", "y"], &["y^2 - x^3"]), 1, limits)
        .expect("fixture is consistent")
}

/// The quadric cone, dimension two in three-space, with a singular
/// vertex the pipeline has to saturate away.
pub fn quadric_cone(f: &Fp, limits: &EngineLimits) -> VarietySpec<Fp> {
    VarietySpec::new(
        f,
        parse_system(f, &["x", "y", "z"], &["x^2 + y^2 - z^2"]),
        2,
        limits,
    )
    .expect("fixture is consistent")
}
