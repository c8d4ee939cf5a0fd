//! Full character tables of small symmetric groups.

use std::collections::BTreeMap;

use blockwitness_core::character::mn_value;
use blockwitness_core::{CycleType, Error, Partition};
use serde::{Deserialize, Serialize};

/// Rows and columns both in lexicographically decreasing order; the value of
/// `χ^λ` on class `ρ` is `values[λ][ρ]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTable {
    pub n: usize,
    pub classes: Vec<String>,
    pub characters: BTreeMap<String, Vec<i64>>,
}

pub fn character_table(n: usize) -> Result<CharacterTable, Error> {
    let classes: Vec<Partition> = Partition::all(n).collect();
    let mut characters = BTreeMap::new();
    for lambda in Partition::all(n) {
        let row = classes
            .iter()
            .map(|rho| {
                let v = mn_value(&lambda, &CycleType::new(rho.clone()))?;
                Ok(i64::try_from(v).expect("small character values fit in i64"))
            })
            .collect::<Result<Vec<i64>, Error>>()?;
        characters.insert(lambda.to_string(), row);
    }
    Ok(CharacterTable { n, classes: classes.iter().map(ToString::to_string).collect(), characters })
}

impl CharacterTable {
    pub fn text(&self) -> String {
        let width = self.classes.iter().map(String::len).chain(self.characters.keys().map(String::len)).max().unwrap_or(1);
        let mut out = format!("{:width$}", "");
        for class in &self.classes {
            out.push_str(&format!(" {class:>width$}"));
        }
        out.push('\n');
        for lambda in &self.classes {
            out.push_str(&format!("{lambda:width$}"));
            for v in &self.characters[lambda] {
                out.push_str(&format!(" {v:>width$}"));
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3() {
        let t = character_table(3).unwrap();
        assert_eq!(t.classes, vec!["(3)", "(2,1)", "(1,1,1)"]);
        assert_eq!(t.characters["(3)"], vec![1, 1, 1]);
        assert_eq!(t.characters["(2,1)"], vec![-1, 0, 2]);
        assert_eq!(t.characters["(1,1,1)"], vec![1, -1, 1]);
    }
}
