use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::element::Element;
use super::handle::Group;
use super::subset::FiniteSubset;
use crate::error::{Error, Result};
use crate::groups::fc;

type Membership = dyn Fn(&Element) -> bool + Send + Sync;

/// A decidable, possibly infinite subset of a group.
#[derive(Clone)]
pub struct SetOracle {
    description: String,
    membership: Arc<Membership>,
}

impl SetOracle {
    pub fn new(description: impl Into<String>, membership: impl Fn(&Element) -> bool + Send + Sync + 'static) -> Self {
        Self {
            description: description.into(),
            membership: Arc::new(membership),
        }
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn contains(&self, g: &Element) -> bool {
        (self.membership)(g)
    }

    /// The members of `level`.
    pub fn truncation(&self, level: &FiniteSubset) -> FiniteSubset {
        level.iter().filter(|g| self.contains(g)).cloned().collect()
    }
}

impl fmt::Debug for SetOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SetOracle").field("description", &self.description).finish()
    }
}

/// A serializable description of a [`SetOracle`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SetSpec {
    /// The elements with finite conjugacy class.
    Fc,
    /// `{e}`.
    Identity,
    /// Even integers; only meaningful in the integers.
    Even,
    Whole,
    /// A finite set given by element encodings.
    Explicit { elements: Vec<String> },
}

impl SetSpec {
    /// `fc`, `identity`, `even`, `whole`, or `file:<path>` naming a JSON
    /// array of element encodings.
    pub fn parse_cli(s: &str) -> Result<Self> {
        Ok(match s {
            "fc" => SetSpec::Fc,
            "identity" => SetSpec::Identity,
            "even" => SetSpec::Even,
            "whole" => SetSpec::Whole,
            _ => match s.strip_prefix("file:") {
                Some(path) => {
                    let text = std::fs::read_to_string(path)?;
                    let elements: Vec<String> = serde_json::from_str(&text)?;
                    SetSpec::Explicit { elements }
                }
                None => return Err(Error::Usage(format!("unknown set {s:?}; expected fc, identity, even, whole or file:<path>"))),
            },
        })
    }

    pub fn oracle(&self, group: &Arc<Group>) -> Result<SetOracle> {
        Ok(match self {
            SetSpec::Fc => fc::fc_oracle(group),
            SetSpec::Identity => {
                let e = group.identity();
                SetOracle::new("identity", move |g| *g == e)
            }
            SetSpec::Even => {
                if group.id() != "int" {
                    return Err(Error::Usage("the even set is defined for int only".into()));
                }
                SetOracle::new("even", |g| g.as_int().is_some_and(|n| !n.is_odd()))
            }
            SetSpec::Whole => SetOracle::new("whole", |_| true),
            SetSpec::Explicit { elements } => {
                let set: FiniteSubset = elements.iter().map(|s| group.parse(s)).collect::<Result<_>>()?;
                SetOracle::new(format!("explicit({})", set.len()), move |g| set.contains(g))
            }
        })
    }
}
