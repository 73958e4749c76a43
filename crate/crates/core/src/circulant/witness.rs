use serde::{Deserialize, Serialize};

use super::{CirculantError, CirculantSpec};
use crate::balance::Coloring;
use crate::families::{gen_pappus, gen_petersen, PappusParams, PetersenParams};
use crate::graph::Graph;
use crate::Z3;

/// The generator a graph came from, which fixes its vertex layout.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyLayout {
    Petersen(PetersenParams),
    Pappus(PappusParams),
}

impl FamilyLayout {
    fn graph(&self) -> Graph {
        match *self {
            FamilyLayout::Petersen(p) => gen_petersen(p),
            FamilyLayout::Pappus(p) => gen_pappus(p),
        }
    }

    fn m(&self) -> usize {
        match self {
            FamilyLayout::Petersen(p) => p.m(),
            FamilyLayout::Pappus(p) => p.m(),
        }
    }

    fn j(&self) -> usize {
        match self {
            FamilyLayout::Petersen(p) => p.j(),
            FamilyLayout::Pappus(p) => p.j(),
        }
    }
}

/// Counts of one color per residue class of ring indices mod `n`.
///
/// `x[r]` counts the outer-ring vertices `v_i` with `i = r mod n` colored
/// `alpha0`; `y` does the same for the `u` ring and `z` for the `w` ring
/// (Pappus only). In a 3-balanced cubic coloring every vertex sees `alpha0`
/// exactly once, which gives `M (x, y) = (m/n) 1` and `L (x, y, z) = (m/n) 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidueWitness {
    pub n: usize,
    pub alpha0: Z3,
    pub x: Vec<i64>,
    pub y: Vec<i64>,
    pub z: Option<Vec<i64>>,
    /// `m / n`.
    pub rhs: i64,
    /// The block matrix applied to the stacked counts.
    pub lhs: Vec<i64>,
    pub holds: bool,
}

pub fn residue_count_witness(
    g: &Graph,
    layout: FamilyLayout,
    c: &Coloring,
    n: usize,
    alpha0: Z3,
) -> Result<ResidueWitness, CirculantError> {
    if *g != layout.graph() {
        return Err(CirculantError::LayoutUnknown);
    }
    if c.len() != g.n() {
        return Err(CirculantError::LengthMismatch {
            expected: g.n(),
            found: c.len(),
        });
    }
    let m = layout.m();
    if !m.is_multiple_of(n) {
        return Err(CirculantError::BadSpec(format!("n = {n} does not divide m = {m}")));
    }
    let spec = CirculantSpec::new(n, layout.j(), Some(m))?;
    let mat = match layout {
        FamilyLayout::Petersen(_) => spec.matrix_m(),
        FamilyLayout::Pappus(p) => {
            if !p.is_cubic() {
                return Err(CirculantError::BadSpec("the count system needs k = m/2".into()));
            }
            spec.matrix_l()?
        }
    };
    let rings = g.n() / m;
    let counts: Vec<Vec<i64>> = (0..rings)
        .map(|ring| {
            let mut v = vec![0; n];
            for i in 0..m {
                if c[ring * m + i] == alpha0 {
                    v[i % n] += 1;
                }
            }
            v
        })
        .collect();
    let stacked: Vec<i64> = counts.concat();
    let lhs: Vec<i64> = mat
        .to_i64_rows()
        .expect("0/1/2 entries")
        .iter()
        .map(|row| row.iter().zip(&stacked).map(|(a, b)| a * b).sum())
        .collect();
    let rhs = (m / n) as i64;
    let holds = lhs.iter().all(|&v| v == rhs);
    let mut it = counts.into_iter();
    Ok(ResidueWitness {
        n,
        alpha0,
        x: it.next().expect("outer ring"),
        y: it.next().expect("second ring"),
        z: it.next(),
        rhs,
        lhs,
        holds,
    })
}
