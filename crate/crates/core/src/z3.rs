use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// An element of the integers mod 3.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct Z3(u8);

impl Z3 {
    pub const ZERO: Z3 = Z3(0);
    pub const ONE: Z3 = Z3(1);
    pub const TWO: Z3 = Z3(2);
    pub const ALL: [Z3; 3] = [Z3(0), Z3(1), Z3(2)];

    pub const fn new(v: u8) -> Z3 {
        Z3(v % 3)
    }

    /// Reduces any integer into `Z3`, negative values included.
    pub fn from_i64(v: i64) -> Z3 {
        Z3(v.rem_euclid(3) as u8)
    }

    pub const fn value(self) -> u8 {
        self.0
    }

    pub const fn index(self) -> usize {
        self.0 as usize
    }
}

impl TryFrom<u8> for Z3 {
    type Error = String;

    fn try_from(v: u8) -> Result<Self, Self::Error> {
        if v < 3 {
            Ok(Z3(v))
        } else {
            Err(format!("color {v} is not in {{0,1,2}}"))
        }
    }
}

impl From<Z3> for u8 {
    fn from(z: Z3) -> u8 {
        z.0
    }
}

impl Add for Z3 {
    type Output = Z3;
    fn add(self, rhs: Z3) -> Z3 {
        Z3((self.0 + rhs.0) % 3)
    }
}

impl AddAssign for Z3 {
    fn add_assign(&mut self, rhs: Z3) {
        *self = *self + rhs;
    }
}

impl Sub for Z3 {
    type Output = Z3;
    fn sub(self, rhs: Z3) -> Z3 {
        Z3((self.0 + 3 - rhs.0) % 3)
    }
}

impl Neg for Z3 {
    type Output = Z3;
    fn neg(self) -> Z3 {
        Z3((3 - self.0) % 3)
    }
}

impl Mul for Z3 {
    type Output = Z3;
    fn mul(self, rhs: Z3) -> Z3 {
        Z3((self.0 * rhs.0) % 3)
    }
}

impl fmt::Debug for Z3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Z3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
