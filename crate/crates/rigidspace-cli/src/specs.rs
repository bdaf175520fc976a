//! Spec-string parsing and file formats for the CLI surface.

use std::path::Path;

use rigidspace_core::perm::{closure_signed, enumerate_signed, standard_generators};
use rigidspace_core::{GeneratorKind, IntervalPartition, RealMatrix};

/// A finite group the `enumerate` subcommand can list.
///
/// * `P:n` - the full signed permutation group
/// * `P+:n` - the unit-determinant subgroup
/// * `P-:n` - the even-negatives subgroup
/// * `Ppm:2+1` - the group generated by the blockwise standard generators
/// * `Q8` - the quaternion unit group as exact 2x2 matrices
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Full(usize),
    Plus(usize),
    Minus(usize),
    Blockwise(IntervalPartition),
    Quat,
}

impl std::str::FromStr for GroupSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("Q8") {
            return Ok(GroupSpec::Quat);
        }
        let (head, tail) = s
            .split_once(':')
            .ok_or_else(|| format!("bad group spec '{s}': expected 'kind:arg' or 'Q8'"))?;
        let parse_n = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("bad degree '{t}' in group spec"))
        };
        match head.trim() {
            "P" => Ok(GroupSpec::Full(parse_n(tail)?)),
            "P+" => Ok(GroupSpec::Plus(parse_n(tail)?)),
            "P-" => Ok(GroupSpec::Minus(parse_n(tail)?)),
            "Ppm" => {
                let part: IntervalPartition =
                    tail.parse().map_err(|e| format!("bad partition in group spec: {e}"))?;
                Ok(GroupSpec::Blockwise(part))
            }
            other => Err(format!("unknown group kind '{other}'")),
        }
    }
}

/// List the group's elements in canonical (sorted) order.
pub fn enumerate_group(spec: &GroupSpec) -> Result<Vec<String>, String> {
    let err = |e: rigidspace_core::Error| e.to_string();
    match spec {
        GroupSpec::Full(n) => {
            let mut v = enumerate_signed(*n).map_err(err)?;
            v.sort();
            Ok(v.iter().map(|p| p.to_string()).collect())
        }
        GroupSpec::Plus(n) => {
            let mut v: Vec<_> = enumerate_signed(*n)
                .map_err(err)?
                .into_iter()
                .filter(|p| p.det() == 1)
                .collect();
            v.sort();
            Ok(v.iter().map(|p| p.to_string()).collect())
        }
        GroupSpec::Minus(n) => {
            let mut v: Vec<_> = enumerate_signed(*n)
                .map_err(err)?
                .into_iter()
                .filter(|p| p.negative_parity() == 1)
                .collect();
            v.sort();
            Ok(v.iter().map(|p| p.to_string()).collect())
        }
        GroupSpec::Blockwise(part) => {
            let n = part.n();
            let gens =
                standard_generators(&GeneratorKind::Composite(part.clone()), n).map_err(err)?;
            let cap = (1usize << n) * (1..=n).product::<usize>() + 1;
            let closure = closure_signed(n, &gens, cap).map_err(err)?;
            Ok(closure.elements().iter().map(|p| p.to_string()).collect())
        }
        GroupSpec::Quat => {
            let closure = rigidspace_core::quat_group_closure().map_err(err)?;
            Ok(closure.elements().iter().map(|g| g.to_string()).collect())
        }
    }
}

/// Read a square matrix from a JSON file holding an array of row arrays.
pub fn read_matrix(path: &Path) -> Result<RealMatrix, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let rows: Vec<Vec<f64>> = serde_json::from_str(&text)
        .map_err(|e| format!("{} is not a JSON array of row arrays: {e}", path.display()))?;
    let n = rows.len();
    if n == 0 {
        return Err(format!("{} holds an empty matrix", path.display()));
    }
    let mut flat = Vec::with_capacity(n * n);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(format!(
                "{}: row {} has {} entries, expected {n}",
                path.display(),
                i,
                row.len()
            ));
        }
        flat.extend_from_slice(row);
    }
    RealMatrix::new(n, flat).map_err(|e| format!("{}: {e}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_specs_parse() {
        assert_eq!("P:3".parse::<GroupSpec>().unwrap(), GroupSpec::Full(3));
        assert_eq!("P+:2".parse::<GroupSpec>().unwrap(), GroupSpec::Plus(2));
        assert_eq!(" p-:4 ".parse::<GroupSpec>().ok(), None);
        assert_eq!("P-:4".parse::<GroupSpec>().unwrap(), GroupSpec::Minus(4));
        assert_eq!("q8".parse::<GroupSpec>().unwrap(), GroupSpec::Quat);
        let blockwise = "Ppm:2+1".parse::<GroupSpec>().unwrap();
        assert_eq!(
            blockwise,
            GroupSpec::Blockwise(IntervalPartition::new(vec![2, 1]).unwrap())
        );
    }

    #[test]
    fn bad_group_specs_explain_themselves() {
        for (spec, needle) in [
            ("Z:9", "unknown group kind"),
            ("P:x", "bad degree"),
            ("P4", "expected 'kind:arg'"),
            ("Ppm:2+", "bad partition"),
        ] {
            let err = spec.parse::<GroupSpec>().unwrap_err();
            assert!(err.contains(needle), "{spec}: {err}");
        }
    }

    #[test]
    fn enumerate_orders_are_pinned() {
        for (spec, order) in [("P:2", 8usize), ("P+:3", 24), ("P-:2", 4), ("Q8", 8)] {
            let parsed: GroupSpec = spec.parse().unwrap();
            assert_eq!(enumerate_group(&parsed).unwrap().len(), order, "{spec}");
        }
    }
}
