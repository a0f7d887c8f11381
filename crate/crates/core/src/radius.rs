use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// A path-length bound: a natural number or unbounded.
///
/// `Finite` sorts before `Infinite`, so comparisons treat ∞ as the maximum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Radius {
    Finite(usize),
    Infinite,
}

impl Radius {
    pub const INF: Radius = Radius::Infinite;

    /// Whether a path of `len` edges is allowed.
    pub fn admits(self, len: usize) -> bool {
        match self {
            Radius::Finite(r) => len <= r,
            Radius::Infinite => true,
        }
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Radius::Finite(r) => Some(r),
            Radius::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Radius::Infinite)
    }

    pub fn scale(self, factor: usize) -> Radius {
        match self {
            Radius::Finite(r) => Radius::Finite(r.saturating_mul(factor)),
            Radius::Infinite => Radius::Infinite,
        }
    }

    pub fn plus(self, extra: usize) -> Radius {
        match self {
            Radius::Finite(r) => Radius::Finite(r.saturating_add(extra)),
            Radius::Infinite => Radius::Infinite,
        }
    }

    /// `2r - 1` for `r >= 1`, with `∞` fixed.
    pub fn double_minus_one(self) -> Radius {
        match self {
            Radius::Finite(r) => Radius::Finite((2 * r).saturating_sub(1)),
            Radius::Infinite => Radius::Infinite,
        }
    }

    /// `r - 1`, saturating at zero.
    pub fn pred(self) -> Radius {
        match self {
            Radius::Finite(r) => Radius::Finite(r.saturating_sub(1)),
            Radius::Infinite => Radius::Infinite,
        }
    }
}

impl From<usize> for Radius {
    fn from(r: usize) -> Self {
        Radius::Finite(r)
    }
}

impl fmt::Display for Radius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Radius::Finite(r) => write!(f, "{r}"),
            Radius::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Radius {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(Radius::Infinite),
            other => other
                .parse::<usize>()
                .map(Radius::Finite)
                .map_err(|_| Error::parse("radius", format!("expected a natural number or \"inf\", got {other:?}"))),
        }
    }
}

impl Serialize for Radius {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Radius::Finite(r) => serializer.serialize_u64(*r as u64),
            Radius::Infinite => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Radius {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Str(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Num(r) => Ok(Radius::Finite(r as usize)),
            Raw::Str(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinity_is_maximal() {
        assert!(Radius::Finite(usize::MAX) < Radius::Infinite);
        assert!(Radius::Finite(2) < Radius::Finite(3));
    }

    #[test]
    fn parse_and_json() {
        assert_eq!("inf".parse::<Radius>().unwrap(), Radius::Infinite);
        assert_eq!("4".parse::<Radius>().unwrap(), Radius::Finite(4));
        assert!("-1".parse::<Radius>().is_err());
        assert_eq!(serde_json::to_string(&Radius::Infinite).unwrap(), "\"inf\"");
        let r: Radius = serde_json::from_str("3").unwrap();
        assert_eq!(r, Radius::Finite(3));
    }

    #[test]
    fn arithmetic() {
        assert_eq!(Radius::Finite(2).double_minus_one(), Radius::Finite(3));
        assert_eq!(Radius::Finite(1).double_minus_one(), Radius::Finite(1));
        assert_eq!(Radius::Infinite.scale(3), Radius::Infinite);
        assert_eq!(Radius::Finite(1).scale(3).plus(1), Radius::Finite(4));
    }
}
