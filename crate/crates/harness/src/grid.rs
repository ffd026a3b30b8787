//! Grid overrides and the `1,3-5` parameter-list syntax.

/// Per-suite overrides; `None` keeps the suite default.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GridOverrides {
    pub n: Option<Vec<usize>>,
    pub k: Option<Vec<usize>>,
    pub s: Option<Vec<usize>>,
    pub l: Option<Vec<usize>>,
    /// Largest n at which suites that only report the oracle still run it.
    pub oracle_max_n: Option<usize>,
}

/// Parses a comma list of values and inclusive ranges, e.g. `2`, `1,4`, `3-9`,
/// `1-3,7`. The result is sorted and deduplicated.
pub fn parse_param_list(text: &str) -> Result<Vec<usize>, String> {
    let mut out = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        let num = |s: &str| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| format!("`{s}` is not a non-negative integer"))
        };
        match part.split_once('-') {
            Some((a, b)) => {
                let (a, b) = (num(a)?, num(b)?);
                if a > b {
                    return Err(format!("empty range `{part}`"));
                }
                out.extend(a..=b);
            }
            None => out.push(num(part)?),
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lists_and_ranges() {
        assert_eq!(parse_param_list("4"), Ok(vec![4]));
        assert_eq!(parse_param_list("3-6"), Ok(vec![3, 4, 5, 6]));
        assert_eq!(parse_param_list("7, 1-2,2"), Ok(vec![1, 2, 7]));
        assert!(parse_param_list("5-3").is_err());
        assert!(parse_param_list("x").is_err());
        assert!(parse_param_list("").is_err());
        assert!(parse_param_list("-1").is_err());
    }
}
