//! Exact linear algebra and root-of-unity arithmetic behind the
//! nonexistence results for the Petersen and Pappus families.

mod blocks;
mod cyclotomic;
mod matrix;
mod witness;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

pub use blocks::{circulant, Block, CirculantSpec, Eigenvalue};
pub use cyclotomic::{
    conjugate_pair_solutions, cyclotomic, divisors, has_vanishing_proper_subsum, is_zero_rootsum,
    pappus_root_sum, pappus_solutions_ordered, petersen_root_sum, petersen_solutions_ordered,
    root_order, search_vanishing_sums_pappus, search_vanishing_sums_petersen, RootSumPoly,
    PAPPUS_ROOT_ORDER, PETERSEN_ROOT_ORDER,
};
pub use matrix::IntMatrix;
pub use witness::{residue_count_witness, FamilyLayout, ResidueWitness};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CirculantError {
    #[error("matrix rows have different lengths")]
    Ragged,
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("bad circulant spec: {0}")]
    BadSpec(String),
    #[error("graph does not match the stated family layout")]
    LayoutUnknown,
    #[error("coloring has {found} labels, graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
}

/// Solves `mat * x = rhs * (1, ..., 1)` exactly.
pub fn solve_all_ones(mat: &IntMatrix, rhs: &BigRational) -> Result<Vec<BigRational>, CirculantError> {
    mat.solve(&vec![rhs.clone(); mat.rows()])
}

/// Exponents `[e1, e2]` (mod 30) of the solutions `{1, e^(2 pi i/3)}`,
/// canonicalized like [`search_vanishing_sums_petersen`].
pub const PETERSEN_EXPECTED_SOLUTIONS: [[u32; 2]; 1] = [[0, 10]];

/// Exponent sets `{105, 70, 35}`, `{70, 0, 70}`, `{35, 0, 105}` (mod 210),
/// canonicalized like [`search_vanishing_sums_pappus`].
pub const PAPPUS_EXPECTED_SOLUTIONS: [[u32; 3]; 3] = [[0, 35, 105], [0, 70, 70], [70, 105, 35]];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CirculantFamily {
    Petersen,
    Pappus,
}

impl CirculantFamily {
    /// Default ring length for a modulus `n`: `3n` for Petersen,
    /// `lcm(6, n)` for Pappus.
    pub fn default_m(self, n: usize) -> usize {
        match self {
            CirculantFamily::Petersen => 3 * n,
            CirculantFamily::Pappus => num_integer::lcm(6, n),
        }
    }
}

/// Outcome of the vanishing-sum search, compared with the expected set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub root_order: usize,
    pub solutions: Vec<Vec<u32>>,
    pub expected: Vec<Vec<u32>>,
    /// Found but not expected.
    pub extras: Vec<Vec<u32>>,
    /// Expected but not found.
    pub missing: Vec<Vec<u32>>,
    pub matches_expected: bool,
}

pub fn search_report(family: CirculantFamily) -> SearchReport {
    let (root_order, solutions, expected): (usize, Vec<Vec<u32>>, Vec<Vec<u32>>) = match family {
        CirculantFamily::Petersen => (
            PETERSEN_ROOT_ORDER,
            search_vanishing_sums_petersen().iter().map(|s| s.to_vec()).collect(),
            PETERSEN_EXPECTED_SOLUTIONS.iter().map(|s| s.to_vec()).collect(),
        ),
        CirculantFamily::Pappus => (
            PAPPUS_ROOT_ORDER,
            search_vanishing_sums_pappus().iter().map(|s| s.to_vec()).collect(),
            PAPPUS_EXPECTED_SOLUTIONS.iter().map(|s| s.to_vec()).collect(),
        ),
    };
    let extras: Vec<Vec<u32>> = solutions.iter().filter(|s| !expected.contains(s)).cloned().collect();
    let missing: Vec<Vec<u32>> = expected.iter().filter(|s| !solutions.contains(s)).cloned().collect();
    SearchReport {
        root_order,
        matches_expected: extras.is_empty() && missing.is_empty(),
        solutions,
        expected,
        extras,
        missing,
    }
}

/// Determinant and constant-solution check for the family's block matrix
/// (`M` for Petersen, `L` for Pappus).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearReport {
    pub family: CirculantFamily,
    pub n: usize,
    pub j: usize,
    pub m: usize,
    pub dimension: usize,
    pub determinant: String,
    pub nonsingular: bool,
    /// `m / n`, the right-hand side of the count system.
    pub rhs: String,
    /// `m / (3n)`.
    pub expected_entry: String,
    pub solution: Option<Vec<String>>,
    pub solution_is_expected_constant: bool,
}

impl LinearReport {
    pub fn passed(&self) -> bool {
        self.nonsingular && self.solution_is_expected_constant
    }
}

pub fn linear_report(family: CirculantFamily, spec: &CirculantSpec) -> Result<LinearReport, CirculantError> {
    let m = spec.m().ok_or_else(|| CirculantError::BadSpec("m is required".into()))?;
    let mat = match family {
        CirculantFamily::Petersen => spec.matrix_m(),
        CirculantFamily::Pappus => spec.matrix_l()?,
    };
    let det = mat.determinant()?;
    let n = spec.n();
    let rhs = BigRational::new(BigInt::from(m), BigInt::from(n));
    let expected = BigRational::new(BigInt::from(m), BigInt::from(3 * n));
    let solution = if det.is_zero() {
        None
    } else {
        Some(solve_all_ones(&mat, &rhs)?)
    };
    Ok(LinearReport {
        family,
        n,
        j: spec.j(),
        m,
        dimension: mat.rows(),
        determinant: det.to_string(),
        nonsingular: !det.is_zero(),
        rhs: rhs.to_string(),
        expected_entry: expected.to_string(),
        solution_is_expected_constant: solution
            .as_ref()
            .is_some_and(|x| x.iter().all(|v| *v == expected)),
        solution: solution.map(|x| x.iter().map(ToString::to_string).collect()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn petersen_lemma_at_n3() {
        let s = CirculantSpec::new(3, 3, Some(9)).unwrap();
        let mat = s.matrix_m();
        assert!(!mat.determinant().unwrap().is_zero());
        let x = solve_all_ones(&mat, &rat(3, 1)).unwrap();
        assert_eq!(x, vec![rat(1, 1); 6]);
    }

    #[test]
    fn pappus_lemma_at_n3() {
        let s = CirculantSpec::new(3, 3, Some(18)).unwrap();
        let mat = s.matrix_l().unwrap();
        assert!(!mat.determinant().unwrap().is_zero());
        let x = solve_all_ones(&mat, &rat(6, 1)).unwrap();
        assert_eq!(x, vec![rat(2, 1); 9]);
    }

    #[test]
    fn singular_input() {
        let s = IntMatrix::from_rows(vec![vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(solve_all_ones(&s, &rat(1, 1)), Err(CirculantError::Singular));
    }

    #[test]
    fn reports() {
        let s = CirculantSpec::new(9, 3, Some(27)).unwrap();
        let r = linear_report(CirculantFamily::Petersen, &s).unwrap();
        assert!(r.passed());
        assert_eq!(r.dimension, 18);
        assert_eq!(r.expected_entry, "1");
        let s = CirculantSpec::new(9, 6, Some(18)).unwrap();
        let r = linear_report(CirculantFamily::Pappus, &s).unwrap();
        assert!(r.passed());
        assert_eq!(r.expected_entry, "2/3");
        assert!(linear_report(CirculantFamily::Petersen, &CirculantSpec::new(9, 3, None).unwrap()).is_err());
    }

    #[test]
    fn default_m() {
        assert_eq!(CirculantFamily::Petersen.default_m(9), 27);
        assert_eq!(CirculantFamily::Pappus.default_m(9), 18);
        assert_eq!(CirculantFamily::Pappus.default_m(3), 6);
    }
}
