use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::{CirculantError, IntMatrix};

/// Circulant blocks for residue classes mod `n`: `A` has first-row offsets
/// `+-1`, `B` has `+-j`, and `C` (needs an even `m`) has `-m/2`, all taken
/// mod `n`. Coinciding offsets add, so `n = 3, j = 3` gives `B = 2I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CirculantSpec {
    n: usize,
    j: usize,
    m: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Block {
    A,
    B,
    C,
}

impl CirculantSpec {
    pub fn new(n: usize, j: usize, m: Option<usize>) -> Result<Self, CirculantError> {
        if n < 3 {
            return Err(CirculantError::BadSpec(format!("modulus n = {n} must be at least 3")));
        }
        if j == 0 {
            return Err(CirculantError::BadSpec("j must be positive".into()));
        }
        if let Some(m) = m {
            if m == 0 {
                return Err(CirculantError::BadSpec("m must be positive".into()));
            }
        }
        Ok(CirculantSpec { n, j, m })
    }

    /// `n = 3^a` with `a >= 1`.
    pub fn power_of_three(a: u32, j: usize, m: Option<usize>) -> Result<Self, CirculantError> {
        if a == 0 {
            return Err(CirculantError::BadSpec("a must be at least 1".into()));
        }
        Self::new(3usize.pow(a), j, m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn m(&self) -> Option<usize> {
        self.m
    }

    pub fn is_power_of_three(&self) -> bool {
        let mut n = self.n;
        while n.is_multiple_of(3) {
            n /= 3;
        }
        n == 1
    }

    /// First-row offsets of a block, reduced mod `n`.
    pub fn offsets(&self, block: Block) -> Result<Vec<usize>, CirculantError> {
        let n = self.n as i64;
        let raw: Vec<i64> = match block {
            Block::A => vec![1, -1],
            Block::B => vec![self.j as i64, -(self.j as i64)],
            Block::C => {
                let m = self.m_even()?;
                vec![-((m / 2) as i64)]
            }
        };
        Ok(raw.into_iter().map(|o| o.rem_euclid(n) as usize).collect())
    }

    fn m_even(&self) -> Result<usize, CirculantError> {
        match self.m {
            Some(m) if m % 2 == 0 => Ok(m),
            Some(m) => Err(CirculantError::BadSpec(format!("C needs an even m, got {m}"))),
            None => Err(CirculantError::BadSpec("C needs m".into())),
        }
    }

    pub fn block(&self, block: Block) -> Result<IntMatrix, CirculantError> {
        Ok(circulant(self.n, &self.offsets(block)?))
    }

    /// `M = [[A, I], [I, B]]`.
    pub fn matrix_m(&self) -> IntMatrix {
        let (a, b) = (self.block(Block::A).expect("A"), self.block(Block::B).expect("B"));
        let i = IntMatrix::identity(self.n);
        IntMatrix::from_blocks(self.n, &[vec![Some(&a), Some(&i)], vec![Some(&i), Some(&b)]])
    }

    /// `L = [[A, I, 0], [I, 0, B], [0, B, C]]`.
    pub fn matrix_l(&self) -> Result<IntMatrix, CirculantError> {
        let c = self.block(Block::C)?;
        let (a, b) = (self.block(Block::A)?, self.block(Block::B)?);
        let i = IntMatrix::identity(self.n);
        Ok(IntMatrix::from_blocks(
            self.n,
            &[
                vec![Some(&a), Some(&i), None],
                vec![Some(&i), None, Some(&b)],
                vec![None, Some(&b), Some(&c)],
            ],
        ))
    }

    /// Eigenvalue of a block on `v_k = (1, w^k, w^2k, ...)`, `w = e^(2 pi i/n)`:
    /// the sum of `w^(o k)` over the block's offsets `o`.
    pub fn eigenvalue(&self, block: Block, k: usize) -> Result<Eigenvalue, CirculantError> {
        let exponents = self
            .offsets(block)?
            .into_iter()
            .map(|o| (o * k) % self.n)
            .collect();
        Ok(Eigenvalue { n: self.n, exponents })
    }
}

/// The `n x n` circulant whose first row has a 1 at each offset (repeats
/// add); row `r` is the first row shifted right by `r`.
pub fn circulant(n: usize, offsets: &[usize]) -> IntMatrix {
    let mut m = IntMatrix::zeros(n, n);
    for r in 0..n {
        for &o in offsets {
            m[(r, (r + o) % n)] += 1;
        }
    }
    m
}

/// `sum_e w^e` over a multiset of exponents mod `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Eigenvalue {
    pub n: usize,
    pub exponents: Vec<usize>,
}

impl Eigenvalue {
    pub fn value(&self) -> (f64, f64) {
        self.exponents.iter().fold((0.0, 0.0), |(re, im), &e| {
            let t = std::f64::consts::TAU * e as f64 / self.n as f64;
            (re + t.cos(), im + t.sin())
        })
    }

    /// `max_r |(B v_k)_r - lambda (v_k)_r|` for the matrix `b`.
    pub fn residual(&self, b: &IntMatrix, k: usize) -> f64 {
        let n = self.n;
        let v: Vec<(f64, f64)> = (0..n)
            .map(|r| {
                let t = std::f64::consts::TAU * ((r * k) % n) as f64 / n as f64;
                (t.cos(), t.sin())
            })
            .collect();
        let (lr, li) = self.value();
        (0..n)
            .map(|r| {
                let (mut sr, mut si) = (0.0, 0.0);
                for (c, &(vr, vi)) in v.iter().enumerate() {
                    let x = b[(r, c)].to_f64().expect("small entries");
                    sr += x * vr;
                    si += x * vi;
                }
                let (vr, vi) = v[r];
                let (er, ei) = (sr - (lr * vr - li * vi), si - (lr * vi + li * vr));
                er.hypot(ei)
            })
            .fold(0.0, f64::max)
    }
}
