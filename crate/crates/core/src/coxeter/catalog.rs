use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupName {
    S333,
    S334,
    S343,
    S335,
    Hemisphere(u32),
    Custom,
}

impl GroupName {
    /// Dash-separated Schläfli form used on the command line.
    pub fn cli_name(&self) -> String {
        match self {
            GroupName::S333 => "3-3-3".into(),
            GroupName::S334 => "3-3-4".into(),
            GroupName::S343 => "3-4-3".into(),
            GroupName::S335 => "3-3-5".into(),
            GroupName::Hemisphere(d) => format!("hemisphere-{d}"),
            GroupName::Custom => "custom".into(),
        }
    }

    /// Compact label in the `{3^25}` style.
    pub fn label(&self) -> String {
        match self {
            GroupName::S333 => "{3^3}".into(),
            GroupName::S334 => "{3^24}".into(),
            GroupName::S343 => "{343}".into(),
            GroupName::S335 => "{3^25}".into(),
            GroupName::Hemisphere(d) => format!("hemisphere({d})"),
            GroupName::Custom => "custom".into(),
        }
    }

    pub fn is_polytope(&self) -> bool {
        matches!(self, GroupName::S333 | GroupName::S334 | GroupName::S343 | GroupName::S335)
    }

    pub fn polytopes() -> [GroupName; 4] {
        [GroupName::S333, GroupName::S334, GroupName::S343, GroupName::S335]
    }
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

impl FromStr for GroupName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('{').trim_end_matches('}').replace([',', ' '], "-");
        Ok(match t.as_str() {
            "3-3-3" | "333" | "3^3" => GroupName::S333,
            "3-3-4" | "334" | "3^24" => GroupName::S334,
            "3-4-3" | "343" => GroupName::S343,
            "3-3-5" | "335" | "3^25" => GroupName::S335,
            other => {
                let d = other
                    .strip_prefix("hemisphere")
                    .map(|r| r.trim_start_matches(['-', '(']).trim_end_matches(')'))
                    .and_then(|r| r.parse::<u32>().ok());
                match d {
                    Some(d) if d >= 1 => GroupName::Hemisphere(d),
                    _ => return Err(Error::UnknownGroup(s.to_string())),
                }
            }
        })
    }
}

/// Degree data of a reflection group acting on S^d.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDescriptor {
    pub name: GroupName,
    pub rank: u32,
    pub full_degrees: Vec<u32>,
    pub reduced_degrees: Vec<u32>,
    pub exponents: Vec<u32>,
    pub order: u64,
}

impl GroupDescriptor {
    /// Sphere dimension d.
    pub fn d(&self) -> u32 {
        self.rank - 1
    }

    /// Σ m_i over the reduced degrees.
    pub fn d0(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn rotation_order(&self) -> u64 {
        self.order / 2
    }

    pub fn label(&self) -> String {
        match self.name {
            GroupName::Custom => format!("custom{:?}", self.reduced_degrees),
            _ => self.name.label(),
        }
    }

    /// Group from reduced degrees, with the extra degree 2 appended.
    pub fn custom(reduced: &[u32]) -> Result<Self> {
        if reduced.is_empty() || reduced.contains(&0) {
            return Err(Error::UnknownGroup(format!("custom{reduced:?}")));
        }
        Self::build(GroupName::Custom, reduced.to_vec())
    }

    pub fn hemisphere(d: u32) -> Result<Self> {
        if d == 0 {
            return Err(Error::UnknownGroup("hemisphere(0)".into()));
        }
        Self::build(GroupName::Hemisphere(d), vec![1; d as usize])
    }

    fn build(name: GroupName, reduced: Vec<u32>) -> Result<Self> {
        let mut full = reduced.clone();
        full.push(2);
        full.sort_unstable();
        let order = full
            .iter()
            .try_fold(1u64, |acc, &x| acc.checked_mul(x as u64))
            .ok_or_else(|| Error::DomainError("group order overflows".into()))?;
        Ok(GroupDescriptor {
            name,
            rank: reduced.len() as u32 + 1,
            exponents: reduced.iter().map(|d| d - 1).collect(),
            full_degrees: full,
            reduced_degrees: reduced,
            order,
        })
    }
}

pub fn catalog_lookup(name: &GroupName) -> Result<GroupDescriptor> {
    let reduced = match name {
        GroupName::S333 => vec![3, 4, 5],
        GroupName::S334 => vec![4, 6, 8],
        GroupName::S343 => vec![6, 8, 12],
        GroupName::S335 => vec![12, 20, 30],
        GroupName::Hemisphere(d) => return GroupDescriptor::hemisphere(*d),
        GroupName::Custom => return Err(Error::UnknownGroup("custom needs explicit degrees".into())),
    };
    GroupDescriptor::build(name.clone(), reduced)
}

pub fn lookup_str(name: &str) -> Result<GroupDescriptor> {
    catalog_lookup(&name.parse()?)
}
