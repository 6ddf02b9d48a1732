//! JSON description of a coupled system.
//!
//! ```json
//! {
//!   "order": 2,
//!   "matrices": [[["1", "0"], ["1", "1"]], [["1", "0"], ["1", "1"]]],
//!   "initialA": ["1", "1"],
//!   "initialB": ["0", "1"]
//! }
//! ```
//!
//! Scalars are strings in the `p/q+r/si` grammar of [`Scalar`]; plain JSON
//! integers are accepted on input. An optional `coefficients` list states a
//! claimed decoupled recurrence, which `verify` checks against the
//! generated sequences.

use serde::{Deserialize, Serialize};

use crate::algebra::{Mat2, Scalar};
use crate::decouple::{CoefficientVector, CoupledSystem};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarText {
    Text(String),
    Int(i64),
}

impl ScalarText {
    pub fn parse(&self) -> Result<Scalar> {
        match self {
            ScalarText::Text(s) => s.parse(),
            ScalarText::Int(n) => Ok(Scalar::from_int(*n)),
        }
    }
}

impl From<&Scalar> for ScalarText {
    fn from(s: &Scalar) -> Self {
        ScalarText::Text(s.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemDocument {
    pub order: usize,
    pub matrices: Vec<[[ScalarText; 2]; 2]>,
    #[serde(rename = "initialA")]
    pub initial_a: Vec<ScalarText>,
    #[serde(rename = "initialB")]
    pub initial_b: Vec<ScalarText>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<Vec<ScalarText>>,
}

/// A parsed document: the system plus any claimed coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedDocument {
    pub system: CoupledSystem,
    pub claimed: Option<CoefficientVector>,
}

fn parse_all(items: &[ScalarText]) -> Result<Vec<Scalar>> {
    items.iter().map(ScalarText::parse).collect()
}

impl SystemDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn from_system(sys: &CoupledSystem) -> Self {
        let text = |v: &[Scalar]| v.iter().map(ScalarText::from).collect();
        SystemDocument {
            order: sys.order(),
            matrices: sys
                .matrices()
                .iter()
                .map(|m| m.rows().clone().map(|r| r.map(|x| ScalarText::from(&x))))
                .collect(),
            initial_a: text(sys.init_a()),
            initial_b: text(sys.init_b()),
            coefficients: None,
        }
    }

    pub fn parse(&self) -> Result<ParsedDocument> {
        if self.order == 0 {
            return Err(Error::EmptyOrder);
        }
        let check = |what: &str, len: usize| {
            if len == self.order {
                Ok(())
            } else {
                Err(Error::Document(format!(
                    "order is {} but {what} has {len} entries",
                    self.order
                )))
            }
        };
        check("matrices", self.matrices.len())?;
        check("initialA", self.initial_a.len())?;
        check("initialB", self.initial_b.len())?;

        let matrices = self
            .matrices
            .iter()
            .map(|m| {
                let [[p, q], [r, s]] = m;
                Ok(Mat2::new([
                    [p.parse()?, q.parse()?],
                    [r.parse()?, s.parse()?],
                ]))
            })
            .collect::<Result<Vec<_>>>()?;
        let system = CoupledSystem::new(
            matrices,
            parse_all(&self.initial_a)?,
            parse_all(&self.initial_b)?,
        )?;

        let claimed = match &self.coefficients {
            None => None,
            Some(c) => {
                let c = parse_all(c)?;
                if c.len() != 2 * self.order {
                    return Err(Error::Document(format!(
                        "coefficients must have {} entries, got {}",
                        2 * self.order,
                        c.len()
                    )));
                }
                Some(CoefficientVector::new(c))
            }
        };
        Ok(ParsedDocument { system, claimed })
    }

    /// The same document with every scalar in canonical text form.
    pub fn canonical(&self) -> Result<Self> {
        let parsed = self.parse()?;
        let mut doc = SystemDocument::from_system(&parsed.system);
        doc.coefficients = parsed
            .claimed
            .map(|c| c.coeffs().iter().map(ScalarText::from).collect());
        Ok(doc)
    }
}
