use std::fmt;
use std::str::FromStr;

use whitehead::Family;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Field {
    R,
    C,
    H,
    K,
}

impl Field {
    /// Real dimension.
    pub fn d(self) -> u32 {
        match self {
            Field::R => 1,
            Field::C => 2,
            Field::H => 4,
            Field::K => 8,
        }
    }

    /// Dimension of the sphere covering FP^n: d(n+1) − 1.
    pub fn sphere_dim(self, n: u32) -> u32 {
        self.d() * (n + 1) - 1
    }

    pub fn family(self) -> Option<Family> {
        match self {
            Field::R => Some(Family::R),
            Field::C => Some(Family::C),
            Field::H => Some(Family::H),
            Field::K => None,
        }
    }

    /// K only exists as the plane.
    pub fn admits(self, n: u32) -> bool {
        n >= 1 && (self != Field::K || n == 2)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Field::R => "R",
            Field::C => "C",
            Field::H => "H",
            Field::K => "K",
        })
    }
}

impl FromStr for Field {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "R" => Ok(Field::R),
            "C" => Ok(Field::C),
            "H" => Ok(Field::H),
            "K" | "O" => Ok(Field::K),
            _ => Err(format!("unknown field {:?} (expected R, C, H or K)", s)),
        }
    }
}
