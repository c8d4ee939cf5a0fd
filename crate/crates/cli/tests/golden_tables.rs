use std::fs;
use std::path::PathBuf;

use blockwitness::tables::{character_table, CharacterTable};
use serde::Deserialize;

#[derive(Deserialize)]
struct Fixture {
    version: String,
    tables: Vec<CharacterTable>,
}

fn fixture() -> Fixture {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/character_tables.json");
    serde_json::from_str(&fs::read_to_string(path).expect("fixture readable")).expect("fixture parses")
}

#[test]
fn tables_match_fixture() {
    let golden = fixture();
    assert_eq!(golden.version, "v1");
    assert_eq!(golden.tables.len(), 7);
    for table in &golden.tables {
        assert_eq!(&character_table(table.n).unwrap(), table, "n={}", table.n);
    }
}

#[test]
fn fixture_columns_are_orthogonal() {
    // second orthogonality: Σ_λ χ^λ(ρ)χ^λ(σ) = δ_{ρσ}·|C(ρ)|, here only ρ = σ = 1^n
    for table in fixture().tables {
        let last = table.classes.len() - 1;
        let sum: i64 = table.characters.values().map(|row| row[last] * row[last]).sum();
        let order: i64 = (1..=table.n as i64).product();
        assert_eq!(sum, order, "n={}", table.n);
    }
}
