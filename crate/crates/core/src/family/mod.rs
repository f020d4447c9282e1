//! The twenty-parameter family of invariant brackets, the orthogonality
//! condition between disjoint brackets, and the six-parameter family that
//! satisfies both it and the Jacobi identity.

pub mod reference;
pub mod tables;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::liealg::{default_basis, BracketSpec, LieAlgebra};
use crate::norden::{ComplexStructure, Metric, NordenStructure};
use crate::poly::{Poly, Scalar, Vars};

pub const DIM: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Twenty parameters `l1..l20`.
    Table1,
    /// Six parameters `l1..l6`.
    Table2,
}

impl Family {
    pub fn param_count(self) -> usize {
        match self {
            Family::Table1 => 20,
            Family::Table2 => 6,
        }
    }

    pub fn param_names(self) -> Vec<String> {
        (1..=self.param_count()).map(|i| format!("l{i}")).collect()
    }

    fn mismatch(self, found: String) -> Error {
        Error::WrongParameterSet {
            expected: format!("l1..l{}", self.param_count()),
            found,
        }
    }

    fn cells(self) -> &'static [(usize, usize, usize, &'static str)] {
        match self {
            Family::Table1 => tables::TABLE1,
            Family::Table2 => tables::TABLE2,
        }
    }
}

/// Parameter values for one family, all polynomials over a shared `Vars`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    family: Family,
    vars: Vars,
    values: Vec<Poly>,
}

impl FamilyParams {
    /// `l_i` kept as the indeterminate `l_i`.
    pub fn symbolic(family: Family) -> Self {
        let vars = Vars::new(family.param_names());
        let values = (0..vars.len()).map(|i| Poly::var(&vars, i)).collect();
        FamilyParams { family, vars, values }
    }

    pub fn numeric(family: Family, values: &[Scalar]) -> Result<Self> {
        if values.len() != family.param_count() {
            return Err(family.mismatch(format!("{} values", values.len())));
        }
        let vars = Vars::empty();
        let values = values.iter().map(|v| Poly::constant(&vars, v.clone())).collect();
        Ok(FamilyParams { family, vars, values })
    }

    /// Requires exactly the names `l1..lN` of `family`.
    pub fn from_map(family: Family, vars: &Vars, mut map: BTreeMap<String, Poly>) -> Result<Self> {
        let mut values = Vec::with_capacity(family.param_count());
        for name in family.param_names() {
            let v = map.remove(&name).ok_or_else(|| Error::MissingParameter(name.clone()))?;
            values.push(Poly::zero(vars).checked_add(&v)?);
        }
        if let Some(extra) = map.into_keys().next() {
            return Err(Error::UnknownParameter(extra));
        }
        Ok(FamilyParams {
            family,
            vars: vars.clone(),
            values,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn values(&self) -> &[Poly] {
        &self.values
    }

    fn expect(&self, family: Family) -> Result<()> {
        if self.family == family {
            Ok(())
        } else {
            Err(family.mismatch(format!("l1..l{}", self.values.len())))
        }
    }
}

/// Twenty-parameter values that specialise the first table to the second:
/// `l7..l10 = 0`, `l(10+i) = -l_i` for `i = 1..6`, `l17..l20 = 0`.
pub fn table2_as_table1(p: &FamilyParams) -> Result<FamilyParams> {
    p.expect(Family::Table2)?;
    let zero = Poly::zero(&p.vars);
    let mut values = p.values.clone();
    values.extend(std::iter::repeat_n(zero.clone(), 4));
    values.extend(p.values.iter().map(|v| -v));
    values.extend(std::iter::repeat_n(zero, 4));
    Ok(FamilyParams {
        family: Family::Table1,
        vars: p.vars.clone(),
        values,
    })
}

fn cell_value(p: &FamilyParams, entry: &str) -> Poly {
    let (negative, name) = match entry.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, entry),
    };
    let index: usize = name[1..].parse().expect("table entry is l<n>");
    let v = p.values[index - 1].clone();
    if negative {
        -v
    } else {
        v
    }
}

fn build(p: &FamilyParams, family: Family) -> Result<LieAlgebra> {
    p.expect(family)?;
    let mut rows: BTreeMap<(usize, usize), Vec<Poly>> = BTreeMap::new();
    for &(i, j, k, entry) in family.cells() {
        let row = rows
            .entry((i - 1, j - 1))
            .or_insert_with(|| vec![Poly::zero(&p.vars); DIM]);
        row[k - 1] = cell_value(p, entry);
    }
    let brackets: Vec<BracketSpec> = rows.into_iter().map(|((i, j), v)| (i, j, v)).collect();
    LieAlgebra::from_brackets(&p.vars, default_basis(DIM), &brackets)
}

pub fn table1_algebra(p: &FamilyParams) -> Result<LieAlgebra> {
    build(p, Family::Table1)
}

pub fn table2_algebra(p: &FamilyParams) -> Result<LieAlgebra> {
    build(p, Family::Table2)
}

/// `diag(1, 1, 1, -1, -1, -1)`.
pub fn family_metric(vars: &Vars) -> Metric {
    Metric::split_diagonal(vars, DIM).expect("split diagonal metric is invertible")
}

/// `J X_i = X_{i+3}`, `J X_{i+3} = -X_i`.
pub fn family_complex_structure(vars: &Vars) -> ComplexStructure {
    ComplexStructure::standard(vars, DIM).expect("even dimension")
}

fn with_standard_pair(alg: LieAlgebra) -> Result<NordenStructure> {
    let vars = alg.vars().clone();
    NordenStructure::new(alg, family_metric(&vars), family_complex_structure(&vars))
}

/// The six-parameter algebra with the diagonal Norden metric and standard `J`.
pub fn family_structure(p: &FamilyParams) -> Result<NordenStructure> {
    with_standard_pair(table2_algebra(p)?)
}

/// The twenty-parameter algebra with the same metric and `J`.
pub fn table1_structure(p: &FamilyParams) -> Result<NordenStructure> {
    with_standard_pair(table1_algebra(p)?)
}

/// `g([X_a, X_b], [X_c, X_d])` for each 4-subset `a < b < c < d` and each of
/// its three splittings into two pairs; 45 entries in dimension six.
pub fn usl_defect(alg: &LieAlgebra, g: &Metric) -> Vec<([usize; 4], Poly)> {
    let d = alg.dim();
    let mut out = Vec::new();
    for a in 0..d {
        for b in a + 1..d {
            for c in b + 1..d {
                for e in c + 1..d {
                    for [p, q, r, s] in [[a, b, c, e], [a, c, b, e], [a, e, b, c]] {
                        let v = g.inner(&alg.bracket_basis(p, q), &alg.bracket_basis(r, s));
                        out.push(([p, q, r, s], v));
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, parse_poly};

    fn row(alg: &LieAlgebra, i: usize, j: usize) -> Vec<String> {
        alg.bracket_basis(i - 1, j - 1)
            .coords()
            .iter()
            .map(|p| p.to_string())
            .collect()
    }

    #[test]
    fn cell_counts() {
        assert_eq!(tables::TABLE1.len(), 60);
        assert_eq!(tables::TABLE2.len(), 36);
        for family in [Family::Table1, Family::Table2] {
            let pairs: std::collections::BTreeSet<_> = family
                .cells()
                .iter()
                .map(|&(i, j, _, _)| (i.min(j), i.max(j)))
                .collect();
            assert_eq!(pairs.len(), 15);
        }
    }

    #[test]
    fn sample_rows() {
        let t1 = table1_algebra(&FamilyParams::symbolic(Family::Table1)).unwrap();
        assert_eq!(row(&t1, 2, 3), ["l10", "0", "0", "l7", "l1", "l2"]);
        let t2 = table2_algebra(&FamilyParams::symbolic(Family::Table2)).unwrap();
        assert_eq!(row(&t2, 1, 4), ["0", "l5", "-l4", "0", "l2", "-l1"]);
        assert_eq!(row(&t2, 3, 6), ["l3", "-l2", "0", "l6", "-l5", "0"]);
        assert_eq!(row(&t2, 1, 3), ["0", "0", "0", "-l4", "0", "-l3"]);
    }

    #[test]
    fn zero_parameters_are_abelian() {
        let p = FamilyParams::numeric(Family::Table2, &vec![int(0); 6]).unwrap();
        let alg = table2_algebra(&p).unwrap();
        assert_eq!(alg, LieAlgebra::abelian(p.vars(), 6));
    }

    #[test]
    fn parameter_set_checked() {
        let p6 = FamilyParams::symbolic(Family::Table2);
        assert!(matches!(table1_algebra(&p6), Err(Error::WrongParameterSet { .. })));
        assert!(matches!(
            FamilyParams::numeric(Family::Table2, &vec![int(1); 5]),
            Err(Error::WrongParameterSet { .. })
        ));
        let vars = Vars::numbered("l", 6);
        let mut map: BTreeMap<String, Poly> = (1..=6).map(|i| (format!("l{i}"), Poly::var(&vars, i - 1))).collect();
        assert!(FamilyParams::from_map(Family::Table2, &vars, map.clone()).is_ok());
        map.insert("l7".into(), Poly::zero(&vars));
        assert_eq!(
            FamilyParams::from_map(Family::Table2, &vars, map.clone()),
            Err(Error::UnknownParameter("l7".into()))
        );
        map.remove("l7");
        map.remove("l3");
        assert_eq!(
            FamilyParams::from_map(Family::Table2, &vars, map),
            Err(Error::MissingParameter("l3".into()))
        );
    }

    #[test]
    fn specialisation_reproduces_second_table() {
        let p = FamilyParams::symbolic(Family::Table2);
        let t2 = table2_algebra(&p).unwrap();
        let t1 = table1_algebra(&table2_as_table1(&p).unwrap()).unwrap();
        assert_eq!(t1, t2);
    }

    #[test]
    fn usl_has_45_entries() {
        let p = FamilyParams::symbolic(Family::Table2);
        let alg = table2_algebra(&p).unwrap();
        let u = usl_defect(&alg, &family_metric(p.vars()));
        assert_eq!(u.len(), 45);
        assert!(u.iter().all(|(_, v)| v.is_zero()));
    }

    #[test]
    fn reference_strings_parse() {
        let vars = Vars::numbered("l", 6);
        for (_, e) in reference::CURVATURE
            .iter()
            .chain(reference::RICCI)
            .chain(reference::SECTIONAL)
        {
            parse_poly(e, &vars).unwrap();
        }
        assert_eq!(reference::CURVATURE.len(), 75);
        assert_eq!(reference::RICCI.len(), 21);
        assert_eq!(reference::SECTIONAL.len(), 15);
        assert_eq!(reference::F_IDENTITIES.len(), 120);
        assert_eq!(reference::NIJENHUIS.len(), 12);
    }
}
