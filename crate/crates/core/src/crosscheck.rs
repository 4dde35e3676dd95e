//! Independent consistency checks against user-supplied stratification
//! data.
//!
//! When the input carries a Whitney-style stratification — topological
//! Euler characteristics of the strata, their local obstruction values,
//! and the characteristics of their generic hyperplane sections — the
//! engine's output can be audited two ways: the global obstruction must
//! equal the characteristic-weighted sum of local values, and it must
//! satisfy a one-slice identity tying it to the first critical count.
//! The same weighted sum, read backwards, pins down a single unknown
//! local value from the computed global one.

use serde::Serialize;

use crate::error::Error;

/// One stratum: its Euler characteristic, its local obstruction value
/// (if known), the characteristic of its generic hyperplane section (if
/// known), and whether it is the dense stratum.
#[derive(Clone, Debug)]
pub struct StratumData {
    pub name: String,
    pub chi: i64,
    pub local_eu: Option<i64>,
    pub chi_slice: Option<i64>,
    pub top: bool,
}

/// A full stratification table.
#[derive(Clone, Debug, Default)]
pub struct StrataTable {
    pub strata: Vec<StratumData>,
}

/// Verdict of the one-slice identity: the global obstruction must equal
/// the slice-weighted sum of local values plus the signed critical count.
#[derive(Clone, Debug, Serialize)]
pub struct SliceIdentity {
    pub holds: bool,
    pub lhs: i64,
    pub rhs: i64,
    pub weighted_slice_sum: i64,
    pub sign_term: i64,
}

impl StrataTable {
    pub fn new(strata: Vec<StratumData>) -> Self {
        StrataTable { strata }
    }

    /// Structural sanity: exactly one dense stratum, and its local value
    /// — the obstruction at a smooth point — must be 1 when stated.
    pub fn validate(&self) -> Result<(), Error> {
        let tops: Vec<&StratumData> = self.strata.iter().filter(|s| s.top).collect();
        if tops.len() != 1 {
            return Err(Error::IncompleteStrata(format!(
                "expected exactly one dense stratum, found {}",
                tops.len()
            )));
        }
        if let Some(eu) = tops[0].local_eu {
            if eu != 1 {
                return Err(Error::IncompleteStrata(format!(
                    "dense stratum `{}` must carry local value 1, got {eu}",
                    tops[0].name
                )));
            }
        }
        Ok(())
    }

    /// Strata whose local value is not stated.
    pub fn unknowns(&self) -> Vec<&StratumData> {
        self.strata.iter().filter(|s| s.local_eu.is_none()).collect()
    }
}

/// Characteristic-weighted sum of local obstruction values — an
/// independent evaluation of the global obstruction.
pub fn weighted_eu(table: &StrataTable) -> Result<i64, Error> {
    table.validate()?;
    let mut sum = 0i64;
    for s in &table.strata {
        let Some(eu) = s.local_eu else {
            return Err(Error::IncompleteStrata(format!(
                "stratum `{}` has no local value",
                s.name
            )));
        };
        sum += s.chi * eu;
    }
    Ok(sum)
}

/// One-slice identity: with `alpha1` the critical count of a generic
/// form and `d` the dimension, the global obstruction equals the sum of
/// local values weighted by hyperplane-section characteristics, plus
/// `(-1)^d * alpha1`.
pub fn slice_identity_check(
    table: &StrataTable,
    d: usize,
    alpha1: u64,
    eu: i64,
) -> Result<SliceIdentity, Error> {
    assert!(d >= 1, "the slice identity needs positive dimension");
    table.validate()?;
    let mut weighted = 0i64;
    for s in &table.strata {
        let Some(local) = s.local_eu else {
            return Err(Error::IncompleteStrata(format!(
                "stratum `{}` has no local value",
                s.name
            )));
        };
        let Some(chi_slice) = s.chi_slice else {
            return Err(Error::IncompleteStrata(format!(
                "stratum `{}` has no hyperplane-section characteristic",
                s.name
            )));
        };
        weighted += chi_slice * local;
    }
    let sign = if d % 2 == 0 { 1 } else { -1 };
    let sign_term = sign * alpha1 as i64;
    let rhs = weighted + sign_term;
    Ok(SliceIdentity {
        holds: eu == rhs,
        lhs: eu,
        rhs,
        weighted_slice_sum: weighted,
        sign_term,
    })
}

/// Solve the weighted sum for the one stratum whose local value is
/// missing, given the computed global obstruction.
pub fn solve_unknown_local_eu(table: &StrataTable, eu: i64) -> Result<i64, Error> {
    table.validate()?;
    let unknowns = table.unknowns();
    if unknowns.len() != 1 {
        return Err(Error::IncompleteStrata(format!(
            "need exactly one stratum with an unknown local value, found {}",
            unknowns.len()
        )));
    }
    let unknown = unknowns[0];
    if unknown.chi == 0 {
        return Err(Error::InvalidInput(format!(
            "stratum `{}` has Euler characteristic 0, so its local value \
             does not influence the weighted sum",
            unknown.name
        )));
    }
    let known: i64 = table
        .strata
        .iter()
        .filter_map(|s| s.local_eu.map(|e| s.chi * e))
        .sum();
    let residue = eu - known;
    if residue % unknown.chi != 0 {
        return Err(Error::NonIntegralSolution(format!(
            "residue {residue} is not divisible by characteristic {} of \
             stratum `{}`",
            unknown.chi, unknown.name
        )));
    }
    Ok(residue / unknown.chi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn stratum(name: &str, chi: i64, eu: Option<i64>, chi_slice: Option<i64>, top: bool) -> StratumData {
        StratumData {
            name: name.to_string(),
            chi,
            local_eu: eu,
            chi_slice,
            top,
        }
    }

    fn cusp_table() -> StrataTable {
        StrataTable::new(vec![
            stratum("smooth-part", 0, Some(1), Some(3), true),
            stratum("origin", 1, Some(2), Some(0), false),
        ])
    }

    #[test]
    fn weighted_sum_on_a_cuspidal_curve() {
        assert_eq!(weighted_eu(&cusp_table()).unwrap(), 2);
    }

    #[test]
    fn slice_identity_on_a_cuspidal_curve() {
        // alpha1 = 1, d = 1: rhs = (3*1 + 0*2) - 1 = 2
        let v = slice_identity_check(&cusp_table(), 1, 1, 2).unwrap();
        assert!(v.holds);
        assert_eq!(v.weighted_slice_sum, 3);
        assert_eq!(v.sign_term, -1);
    }

    #[test]
    fn slice_identity_flags_disagreement() {
        let v = slice_identity_check(&cusp_table(), 1, 1, 5).unwrap();
        assert!(!v.holds);
        assert_eq!(v.lhs, 5);
        assert_eq!(v.rhs, 2);
    }

    #[test]
    fn solving_recovers_a_hidden_local_value() {
        let table = StrataTable::new(vec![
            stratum("smooth-part", 0, Some(1), Some(3), true),
            stratum("origin", 1, None, Some(0), false),
        ]);
        assert_eq!(solve_unknown_local_eu(&table, 2).unwrap(), 2);
    }

    #[test]
    fn single_stratum_weighted_sum_is_its_characteristic() {
        // a smooth variety: the weighted sum degenerates to chi * 1
        let table = StrataTable::new(vec![stratum("all", 7, Some(1), None, true)]);
        assert_eq!(weighted_eu(&table).unwrap(), 7);
    }

    #[test]
    fn solving_a_smooth_table_recovers_one() {
        let table = StrataTable::new(vec![stratum("all", 5, None, None, true)]);
        assert_eq!(solve_unknown_local_eu(&table, 5).unwrap(), 1);
    }

    #[test]
    fn solving_rejects_non_integral_answers() {
        let table = StrataTable::new(vec![
            stratum("smooth-part", 0, Some(1), None, true),
            stratum("curve", 2, None, None, false),
        ]);
        let err = solve_unknown_local_eu(&table, 3).unwrap_err();
        assert!(matches!(err, Error::NonIntegralSolution(_)));
    }

    #[test]
    fn solving_rejects_weightless_strata() {
        let table = StrataTable::new(vec![
            stratum("smooth-part", 0, Some(1), None, true),
            stratum("curve", 0, None, None, false),
        ]);
        assert!(solve_unknown_local_eu(&table, 3).is_err());
    }

    #[test]
    fn tables_need_exactly_one_dense_stratum() {
        let table = StrataTable::new(vec![
            stratum("a", 0, Some(1), None, true),
            stratum("b", 1, Some(1), None, true),
        ]);
        assert!(table.validate().is_err());
        let empty = StrataTable::new(vec![stratum("a", 0, Some(1), None, false)]);
        assert!(empty.validate().is_err());
    }

    #[test]
    fn dense_stratum_must_be_smooth_normalized() {
        let table = StrataTable::new(vec![stratum("a", 1, Some(3), None, true)]);
        assert!(table.validate().is_err());
    }

    #[test]
    fn missing_values_are_reported_not_guessed() {
        let table = StrataTable::new(vec![
            stratum("smooth-part", 0, Some(1), None, true),
            stratum("origin", 1, None, None, false),
        ]);
        assert!(matches!(
            weighted_eu(&table).unwrap_err(),
            Error::IncompleteStrata(_)
        ));
        let table2 = StrataTable::new(vec![stratum("smooth-part", 0, Some(1), None, true)]);
        assert!(matches!(
            slice_identity_check(&table2, 1, 0, 0).unwrap_err(),
            Error::IncompleteStrata(_)
        ));
    }
}
