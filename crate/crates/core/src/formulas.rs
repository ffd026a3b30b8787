//! Closed-form Turán numbers with explicit validity status.
//!
//! Evaluators never refuse parameters below a theorem's threshold: they
//! return the raw arithmetic tagged [`Validity::OutOfRange`].

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Validity {
    /// Parameters satisfy the stated hypothesis.
    Proven,
    /// The result is claimed only for "n large enough" with no explicit bound.
    Heuristic,
    /// The stated hypothesis fails; the value is the raw formula.
    OutOfRange,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormulaId {
    TuranEdges,
    ExStar,
    ExCliqueMatching,
    ExMain,
    ExK3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaResult {
    pub value: u64,
    pub validity: Validity,
    pub source: FormulaId,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("Turán graph needs at least one part")]
    NoParts,
    #[error("{name} requires {requirement}")]
    Range {
        name: &'static str,
        requirement: &'static str,
    },
}

fn range(name: &'static str, requirement: &'static str) -> FormulaError {
    FormulaError::Range { name, requirement }
}

fn choose2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

/// e(T_k(n)) for the balanced k-partition.
pub fn turan_edges(n: u64, k: u64) -> Result<u64, FormulaError> {
    if k == 0 {
        return if n == 0 { Ok(0) } else { Err(FormulaError::NoParts) };
    }
    let (q, r) = (n / k, n % k);
    Ok(choose2(n) - r * choose2(q + 1) - (k - r) * choose2(q))
}

/// ex(n, S_{l+1}) = ⌊ln/2⌋, proven for n ≥ l² + 2.
pub fn ex_star(n: u64, l: u64) -> FormulaResult {
    FormulaResult {
        value: l * n / 2,
        validity: if n >= l * l + 2 {
            Validity::Proven
        } else {
            Validity::OutOfRange
        },
        source: FormulaId::ExStar,
    }
}

/// ex(n, {K_{k+1}, M_{s+1}}) = max{e(T_k(2s+1)), e(T_{k-1}(s)) + s(n-s)}, proven for n ≥ 2s+1.
pub fn ex_clique_matching(n: u64, k: u64, s: u64) -> Result<FormulaResult, FormulaError> {
    if k < 2 {
        return Err(range("ex_clique_matching", "k >= 2"));
    }
    let dense = turan_edges(2 * s + 1, k)?;
    let joined = turan_edges(s, k - 1)? + s * n.saturating_sub(s);
    Ok(FormulaResult {
        value: dense.max(joined),
        validity: if n >= 2 * s + 1 {
            Validity::Proven
        } else {
            Validity::OutOfRange
        },
        source: FormulaId::ExCliqueMatching,
    })
}

/// Threshold n ≥ ks² + (s+1)(l+1)² for the k ≥ 3 theorem.
pub fn main_threshold(k: u64, s: u64, l: u64) -> u64 {
    k * s * s + (s + 1) * (l + 1) * (l + 1)
}

/// ex(n, {K_{k+1}, (s+1)S_l}) = e(T_{k-2}(s)) + s(n-s) + ⌊(l-1)(n-s)/2⌋ for k ≥ 3, l ≥ 2.
pub fn ex_main(n: u64, k: u64, s: u64, l: u64) -> Result<FormulaResult, FormulaError> {
    if k < 3 {
        return Err(range("ex_main", "k >= 3"));
    }
    if l < 2 {
        return Err(range("ex_main", "l >= 2"));
    }
    if n < s {
        return Err(range("ex_main", "n >= s"));
    }
    let m = n - s;
    Ok(FormulaResult {
        value: turan_edges(s, k - 2)? + s * m + (l - 1) * m / 2,
        validity: if n >= main_threshold(k, s, l) {
            Validity::Proven
        } else {
            Validity::OutOfRange
        },
        source: FormulaId::ExMain,
    })
}

/// Closed forms (e(G₁(s)), e(G₂(s))) of the two k = 2 extremal families.
pub fn extremal_family_edges(n: u64, s: u64, l: u64) -> Result<(u64, u64), FormulaError> {
    if l < 1 {
        return Err(range("extremal_family_edges", "l >= 1"));
    }
    if n < s {
        return Err(range("extremal_family_edges", "n >= s"));
    }
    let m = n - s;
    let (hi, lo) = (s.div_ceil(2), s / 2);
    let core = hi * lo + s * (m / 2);
    let g1 = core + (l - 1) * m / 2;
    let g2 = hi * lo + (l - 1) * (m / 2) + lo * (m / 2) + hi * m.div_ceil(2);
    Ok((g1, g2))
}

/// Exploratory bound n ≥ 4(s+l)² + s used only to flag report rows for the
/// k = 2 case; it is not a proven threshold.
pub fn k3_exploratory_bound(s: u64, l: u64) -> u64 {
    4 * (s + l) * (s + l) + s
}

/// ex(n, {K_3, (s+1)S_l}) from the three k = 2 cases.
pub fn ex_k3(n: u64, s: u64, l: u64) -> Result<FormulaResult, FormulaError> {
    if l < 1 {
        return Err(range("ex_k3", "l >= 1"));
    }
    if n < s {
        return Err(range("ex_k3", "n >= s"));
    }
    let m = n - s;
    let value = if l < s + 1 {
        s * m
    } else {
        let hi = s.div_ceil(2);
        let lo = s / 2;
        let first = hi * lo + s * (m / 2) + (l - 1) * m / 2;
        if m % 2 == 0 {
            first
        } else {
            let second = hi * lo + s * (m / 2) + (l - 1) * (m / 2) + hi;
            first.max(second)
        }
    };
    let validity = if s == 0 {
        let d = l - 1;
        if n >= d * d + 2 {
            Validity::Proven
        } else {
            Validity::OutOfRange
        }
    } else {
        Validity::Heuristic
    };
    Ok(FormulaResult {
        value,
        validity,
        source: FormulaId::ExK3,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn turan_edge_examples() {
        assert_eq!(turan_edges(5, 1), Ok(0));
        assert_eq!(turan_edges(5, 5), Ok(10));
        // Parts 3,2,2: 21 - (3 + 1 + 1).
        assert_eq!(turan_edges(7, 3), Ok(16));
        assert_eq!(turan_edges(3, 0), Err(FormulaError::NoParts));
    }

    #[test]
    fn star_examples() {
        assert_eq!(ex_star(6, 2).value, 6);
        assert_eq!(ex_star(6, 2).validity, Validity::Proven);
        assert_eq!(ex_star(17, 0).value, 0);
        assert_eq!(ex_star(9, 2).value, 9);
        assert_eq!(ex_star(5, 2).validity, Validity::OutOfRange);
    }

    #[test]
    fn clique_matching_examples() {
        let r = ex_clique_matching(5, 2, 1).unwrap();
        assert_eq!((r.value, r.validity), (4, Validity::Proven));
        assert_eq!(ex_clique_matching(12, 4, 0).unwrap().value, 0);
        // max{e(T_3(5)) = 8, 1 + 10}
        assert_eq!(ex_clique_matching(7, 3, 2).unwrap().value, 11);
        assert_eq!(ex_clique_matching(4, 2, 2).unwrap().validity, Validity::OutOfRange);
        assert!(ex_clique_matching(7, 1, 2).is_err());
    }

    #[test]
    fn main_examples() {
        let r = ex_main(30, 3, 1, 2).unwrap();
        assert_eq!((r.value, r.validity), (43, Validity::Proven));
        for l in 2..6 {
            assert_eq!(ex_main(23, 3, 0, l).unwrap().value, (l - 1) * 23 / 2);
        }
        let r = ex_main(20, 3, 1, 2).unwrap();
        assert_eq!((r.value, r.validity), (28, Validity::OutOfRange));
        assert!(ex_main(20, 2, 1, 2).is_err());
        assert!(ex_main(20, 3, 1, 1).is_err());
    }

    #[test]
    fn k3_examples() {
        let r = ex_k3(20, 3, 2).unwrap();
        assert_eq!((r.value, r.validity), (51, Validity::Heuristic));
        assert_eq!(ex_k3(10, 2, 3).unwrap().value, 17);
        assert_eq!(ex_k3(12, 3, 4).unwrap().value, 28);
        assert_eq!(ex_k3(11, 0, 3).unwrap().validity, Validity::Proven);
        assert_eq!(ex_k3(5, 0, 3).unwrap().validity, Validity::OutOfRange);
    }

    #[test]
    fn family_edge_examples() {
        assert_eq!(extremal_family_edges(10, 2, 3), Ok((17, 17)));
        assert_eq!(extremal_family_edges(12, 3, 4), Ok((27, 28)));
        assert_eq!(extremal_family_edges(11, 2, 3), Ok((18, 18)));
        // s = 0: ⌊(l-1)n/2⌋ against (l-1)⌊n/2⌋.
        assert_eq!(extremal_family_edges(9, 0, 4), Ok((13, 12)));
        assert_eq!(extremal_family_edges(8, 0, 4), Ok((12, 12)));
    }

    #[test]
    fn json_shape() {
        let json = serde_json::to_string(&ex_star(6, 2)).unwrap();
        assert_eq!(json, r#"{"value":6,"validity":"Proven","source":"ex-star"}"#);
    }
}
