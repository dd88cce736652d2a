//! The JSON input format for colored braids:
//! `{"strands": K, "word": [i1, i2, ...], "colors": [[3,1], ...]}`
//! with positive `i` the positive crossing between strands `i` and `i+1`
//! and one weakly decreasing partition per strand.

use serde::{Deserialize, Serialize};

use crate::invariant::ColoredBraid;
use crate::perm::Partition;
use crate::{Error, Result};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BraidSpec {
    pub strands: usize,
    pub word: Vec<i32>,
    #[serde(default)]
    pub colors: Vec<Vec<usize>>,
}

impl BraidSpec {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("braid spec: {e}")))
    }

    /// Validate into a `ColoredBraid`. Missing colors default to the
    /// fundamental color `[1]` on every strand.
    pub fn to_braid(&self) -> Result<ColoredBraid> {
        let colors: Vec<Partition> = if self.colors.is_empty() {
            vec![Partition::new(vec![1])?; self.strands]
        } else {
            self.colors
                .iter()
                .map(|rows| Partition::new(rows.clone()))
                .collect::<Result<_>>()?
        };
        ColoredBraid::new(self.strands, self.word.clone(), colors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_validate() {
        let spec = BraidSpec::from_json(
            r#"{"strands": 2, "word": [1, 1, 1], "colors": [[1], [1]]}"#,
        )
        .unwrap();
        let braid = spec.to_braid().unwrap();
        assert_eq!(braid.strands(), 2);
        assert_eq!(braid.word(), &[1, 1, 1]);
    }

    #[test]
    fn default_colors_are_fundamental() {
        let spec = BraidSpec::from_json(r#"{"strands": 3, "word": [1, -2]}"#).unwrap();
        let braid = spec.to_braid().unwrap();
        assert!(braid.colors().iter().all(|c| c.rows() == [1]));
    }

    #[test]
    fn errors_name_the_problem() {
        assert!(matches!(
            BraidSpec::from_json(r#"{"word": []}"#),
            Err(Error::Parse(msg)) if msg.contains("strands")
        ));
        let bad = BraidSpec::from_json(
            r#"{"strands": 2, "word": [1], "colors": [[1], [2]]}"#,
        )
        .unwrap();
        assert!(matches!(bad.to_braid(), Err(Error::InvalidColoring(_))));
        let bad = BraidSpec::from_json(
            r#"{"strands": 2, "word": [5], "colors": [[1], [1]]}"#,
        )
        .unwrap();
        assert!(bad.to_braid().is_err());
    }
}
