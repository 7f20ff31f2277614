use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groups::FiniteGroup;

/// Which concrete group a handle computes in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Integers,
    /// ℤ², an abelian control that is not cyclic.
    IntegersSquared,
    /// Free group of the given finite rank, or of countable rank for `None`.
    Free { rank: Option<u32> },
    FinSym,
    AffineDyadic,
    HeisInt,
    HeisDyadic,
    /// Finitely supported functions `ω → H` for the tabled group `H`.
    ReducedPower { name: String, table: Arc<FiniteGroup> },
}

impl GroupSpec {
    /// The registered specs, in listing order.
    pub fn registered() -> Vec<GroupSpec> {
        [
            "int",
            "int2",
            "free:2",
            "free:w",
            "finsym",
            "affine-dyadic",
            "heis:int",
            "heis:dyadic",
            "redpow:s3",
        ]
        .iter()
        .map(|s| s.parse().expect("registered spec"))
        .collect()
    }

    pub fn describe(&self) -> String {
        match self {
            GroupSpec::Integers => "additive integers".into(),
            GroupSpec::IntegersSquared => "additive integer pairs".into(),
            GroupSpec::Free { rank: Some(r) } => format!("free group of rank {r}"),
            GroupSpec::Free { rank: None } => "free group of countable rank".into(),
            GroupSpec::FinSym => "finitely supported permutations of ω".into(),
            GroupSpec::AffineDyadic => "affine maps t -> 2^k t + r over dyadic rationals".into(),
            GroupSpec::HeisInt => "Heisenberg group over the integers".into(),
            GroupSpec::HeisDyadic => "Heisenberg group over the dyadic rationals".into(),
            GroupSpec::ReducedPower { table, .. } => {
                format!("reduced power of a group of order {} over ω", table.order())
            }
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Integers => f.write_str("int"),
            GroupSpec::IntegersSquared => f.write_str("int2"),
            GroupSpec::Free { rank: Some(r) } => write!(f, "free:{r}"),
            GroupSpec::Free { rank: None } => f.write_str("free:w"),
            GroupSpec::FinSym => f.write_str("finsym"),
            GroupSpec::AffineDyadic => f.write_str("affine-dyadic"),
            GroupSpec::HeisInt => f.write_str("heis:int"),
            GroupSpec::HeisDyadic => f.write_str("heis:dyadic"),
            GroupSpec::ReducedPower { name, .. } => write!(f, "redpow:{name}"),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// Accepts the registered names, `free:<n>` for `n ≥ 2`, and
    /// `redpow:file:<path>` for a JSON group table.
    fn from_str(s: &str) -> Result<Self> {
        let spec = match s {
            "int" => GroupSpec::Integers,
            "int2" => GroupSpec::IntegersSquared,
            "free:w" => GroupSpec::Free { rank: None },
            "finsym" => GroupSpec::FinSym,
            "affine-dyadic" => GroupSpec::AffineDyadic,
            "heis:int" => GroupSpec::HeisInt,
            "heis:dyadic" => GroupSpec::HeisDyadic,
            "redpow:s3" => GroupSpec::ReducedPower {
                name: "s3".into(),
                table: Arc::new(FiniteGroup::s3()),
            },
            _ => {
                if let Some(rank) = s.strip_prefix("free:") {
                    match rank.parse::<u32>() {
                        Ok(r) if r >= 2 && !rank.starts_with('0') => GroupSpec::Free { rank: Some(r) },
                        _ => return Err(Error::Usage(format!("free group rank must be an integer ≥ 2 or 'w', got {rank:?}"))),
                    }
                } else if let Some(path) = s.strip_prefix("redpow:file:") {
                    let text = std::fs::read_to_string(path)?;
                    GroupSpec::ReducedPower {
                        name: format!("file:{path}"),
                        table: Arc::new(FiniteGroup::from_json(&text)?),
                    }
                } else {
                    return Err(Error::Usage(format!("unknown group spec {s:?}")));
                }
            }
        };
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for spec in GroupSpec::registered() {
            let again: GroupSpec = spec.to_string().parse().unwrap();
            assert_eq!(again, spec);
        }
        assert_eq!("free:5".parse::<GroupSpec>().unwrap(), GroupSpec::Free { rank: Some(5) });
    }

    #[test]
    fn unknown_specs_are_usage_errors() {
        for s in ["", "free:1", "free:02", "heis:rat", "redpow:a5", "redpow:file:/nonexistent/h.json"] {
            assert!(s.parse::<GroupSpec>().is_err(), "{s}");
        }
        assert!(matches!("zz".parse::<GroupSpec>(), Err(Error::Usage(_))));
    }
}
