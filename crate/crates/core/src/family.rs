//! Forbidden families and their textual syntax
//! (`clique:R`, `matching:S`, `starforest:CxL`, comma separated).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pattern {
    /// `K_r`.
    Clique(usize),
    /// `count` vertex-disjoint copies of the star `S_l` (a centre plus `l` leaves).
    StarForest { count: usize, l: usize },
    /// `M_s`.
    Matching(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("empty forbidden family")]
    Empty,
    #[error("unknown pattern `{0}` (expected clique:R, matching:S or starforest:CxL)")]
    UnknownPattern(String),
    #[error("bad number in `{0}`")]
    BadNumber(String),
    #[error("clique size must be at least 2, got {0}")]
    CliqueTooSmall(usize),
    #[error("matching size must be at least 1")]
    EmptyMatching,
    #[error("star forest needs count >= 1 and l >= 1, got {count}x{l}")]
    DegenerateStarForest { count: usize, l: usize },
}

impl Pattern {
    fn validate(self) -> Result<Self, FamilyError> {
        match self {
            Pattern::Clique(r) if r < 2 => Err(FamilyError::CliqueTooSmall(r)),
            Pattern::Matching(0) => Err(FamilyError::EmptyMatching),
            Pattern::StarForest { count, l } if count == 0 || l == 0 => {
                Err(FamilyError::DegenerateStarForest { count, l })
            }
            p => Ok(p),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Clique(r) => write!(f, "clique:{r}"),
            Pattern::Matching(s) => write!(f, "matching:{s}"),
            Pattern::StarForest { count, l } => write!(f, "starforest:{count}x{l}"),
        }
    }
}

impl FromStr for Pattern {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| FamilyError::BadNumber(s.to_string()));
        let (kind, arg) = s
            .split_once(':')
            .ok_or_else(|| FamilyError::UnknownPattern(s.to_string()))?;
        let p = match kind.trim().to_ascii_lowercase().as_str() {
            "clique" => Pattern::Clique(num(arg)?),
            "matching" => Pattern::Matching(num(arg)?),
            "starforest" => {
                let (c, l) = arg
                    .split_once(['x', 'X'])
                    .ok_or_else(|| FamilyError::BadNumber(s.to_string()))?;
                Pattern::StarForest {
                    count: num(c)?,
                    l: num(l)?,
                }
            }
            _ => return Err(FamilyError::UnknownPattern(s.to_string())),
        };
        p.validate()
    }
}

/// A non-empty set of forbidden patterns, kept sorted and deduplicated so
/// its textual form doubles as a canonical key.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ForbiddenFamily {
    patterns: Vec<Pattern>,
}

impl ForbiddenFamily {
    pub fn new(patterns: impl IntoIterator<Item = Pattern>) -> Result<Self, FamilyError> {
        let mut patterns = patterns
            .into_iter()
            .map(Pattern::validate)
            .collect::<Result<Vec<_>, _>>()?;
        if patterns.is_empty() {
            return Err(FamilyError::Empty);
        }
        patterns.sort();
        patterns.dedup();
        Ok(ForbiddenFamily { patterns })
    }

    /// `{K_{k+1}, (s+1)S_l}`.
    pub fn clique_star_forest(k: usize, s: usize, l: usize) -> Result<Self, FamilyError> {
        Self::new([
            Pattern::Clique(k + 1),
            Pattern::StarForest { count: s + 1, l },
        ])
    }

    /// `{K_{k+1}, M_{s+1}}`.
    pub fn clique_matching(k: usize, s: usize) -> Result<Self, FamilyError> {
        Self::new([Pattern::Clique(k + 1), Pattern::Matching(s + 1)])
    }

    /// `{S_{l+1}}`, i.e. maximum degree at most `l`.
    pub fn star(l_plus_one: usize) -> Result<Self, FamilyError> {
        Self::new([Pattern::StarForest {
            count: 1,
            l: l_plus_one,
        }])
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.patterns
    }
}

impl fmt::Display for ForbiddenFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.patterns.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for ForbiddenFamily {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let patterns = s
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(str::parse)
            .collect::<Result<Vec<Pattern>, _>>()?;
        ForbiddenFamily::new(patterns)
    }
}

impl Serialize for ForbiddenFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ForbiddenFamily {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_canonicalise() {
        let f: ForbiddenFamily = "starforest:3x2, clique:4,clique:4".parse().unwrap();
        assert_eq!(f.to_string(), "clique:4,starforest:3x2");
        assert_eq!(f, ForbiddenFamily::clique_star_forest(3, 2, 2).unwrap());
    }

    #[test]
    fn rejects_bad_specs() {
        assert_eq!("".parse::<ForbiddenFamily>(), Err(FamilyError::Empty));
        assert_eq!("clique:1".parse::<ForbiddenFamily>(), Err(FamilyError::CliqueTooSmall(1)));
        assert_eq!("matching:0".parse::<ForbiddenFamily>(), Err(FamilyError::EmptyMatching));
        assert!(matches!("path:3".parse::<ForbiddenFamily>(), Err(FamilyError::UnknownPattern(_))));
        assert!(matches!("starforest:3".parse::<ForbiddenFamily>(), Err(FamilyError::BadNumber(_))));
        assert_eq!(
            "starforest:0x2".parse::<ForbiddenFamily>(),
            Err(FamilyError::DegenerateStarForest { count: 0, l: 2 })
        );
    }

    #[test]
    fn serde_uses_text_form() {
        let f = ForbiddenFamily::clique_matching(2, 1).unwrap();
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, r#""clique:3,matching:2""#);
        assert_eq!(serde_json::from_str::<ForbiddenFamily>(&json).unwrap(), f);
    }
}
