//! Frame conditions of the common elementary modal logics.

use super::horn::{HornClause, HornFormula};

/// `w R x1, ..., x_{k-1} R x_k, w R y1, ..., y_{l-1} R y_l -> x_k R y_l`,
/// where `x_0` and `y_0` are `w`.
pub fn phi_k_l(k: usize, l: usize) -> HornClause {
    let chain = |prefix: &str, len: usize| -> Vec<(String, String)> {
        let name = |i: usize| if i == 0 { "w".to_string() } else { format!("{prefix}{i}") };
        (1..=len).map(|i| (name(i - 1), name(i))).collect()
    };
    let mut preq = chain("x", k);
    preq.extend(chain("y", l));
    let end = |prefix: &str, len: usize| if len == 0 { "w".to_string() } else { format!("{prefix}{len}") };
    HornClause::new(&preq, Some((end("x", k), end("y", l))))
}

pub fn reflexivity() -> HornClause {
    HornClause::new::<&str>(&[], Some(("x", "x")))
}

pub fn symmetry() -> HornClause {
    HornClause::new(&[("x", "y")], Some(("y", "x")))
}

pub fn transitivity() -> HornClause {
    HornClause::new(&[("x", "y"), ("y", "z")], Some(("x", "z")))
}

pub fn euclidean() -> HornClause {
    HornClause::new(&[("w", "x"), ("w", "y")], Some(("x", "y")))
}

/// Named logics: K, T, B, K4, S4, TB, S5, K4B, K5 (Euclidean).
pub fn logic(name: &str) -> Option<HornFormula> {
    let clauses = match name.to_ascii_uppercase().as_str() {
        "K" => vec![],
        "T" => vec![reflexivity()],
        "B" => vec![symmetry()],
        "K4" => vec![transitivity()],
        "S4" => vec![reflexivity(), transitivity()],
        "TB" => vec![reflexivity(), symmetry()],
        "S5" => vec![reflexivity(), symmetry(), transitivity()],
        "K4B" => vec![symmetry(), transitivity()],
        "K5" => vec![euclidean()],
        _ => return None,
    };
    Some(HornFormula::new(clauses))
}

pub const NAMES: &[&str] = &["K", "T", "B", "K4", "S4", "TB", "S5", "K4B", "K5"];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::parse_horn;

    #[test]
    fn phi_family_special_cases() {
        assert_eq!(phi_k_l(0, 0).to_string(), "-> w R w");
        assert_eq!(phi_k_l(1, 0).to_string(), "w R x1 -> x1 R w");
        assert_eq!(phi_k_l(0, 2).to_string(), "w R y1, y1 R y2 -> w R y2");
        assert_eq!(phi_k_l(1, 1).to_string(), "w R x1, w R y1 -> x1 R y1");
        assert_eq!(phi_k_l(2, 0).to_string(), "w R x1, x1 R x2 -> x2 R w");
    }

    #[test]
    fn named_logics_parse_back() {
        for name in NAMES {
            let f = logic(name).unwrap();
            assert_eq!(parse_horn(&f.to_string()).unwrap(), f);
        }
        assert!(logic("nope").is_none());
    }
}
