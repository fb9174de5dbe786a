//! Character-table data model, JSON parser, validation, and the bundled
//! tables for the Mathieu group M12 (ordinary plus 2-, 3-, 5-, 11-modular).

use std::collections::{BTreeMap, BTreeSet};

use num::{BigInt, Signed};
use serde::Deserialize;

use crate::arith::{self, Cyclotomic};

#[derive(Debug, Clone, thiserror::Error)]
pub enum TableError {
    #[error("invalid table document: {0}")]
    Schema(String),
    #[error("table {table}: {message}")]
    Invariant { table: String, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub name: String,
    pub element_order: u64,
    pub centralizer_order: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    pub name: String,
    /// One value per class, in class order.
    pub values: Vec<Cyclotomic>,
}

impl Character {
    pub fn degree(&self) -> u64 {
        // validated at parse time to be a positive integer
        let r = self.values[0].as_rational().unwrap();
        u64::try_from(r.to_integer()).unwrap()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    pub group_name: String,
    pub group_order: u64,
    pub exponent: u64,
    /// 0 for the ordinary table, p for a p-Brauer table.
    pub characteristic: u64,
    pub classes: Vec<ConjugacyClass>,
    /// prime -> per-class index of the class of q-th powers (0-based).
    pub power_maps: BTreeMap<u64, Vec<usize>>,
    pub characters: Vec<Character>,
}

#[derive(Deserialize)]
struct RawClass {
    name: String,
    element_order: u64,
    centralizer_order: u64,
}

#[derive(Deserialize)]
struct RawCharacter {
    name: String,
    values: Vec<String>,
}

#[derive(Deserialize)]
struct RawTable {
    group: String,
    order: u64,
    exponent: u64,
    characteristic: u64,
    classes: Vec<RawClass>,
    power_maps: BTreeMap<String, Vec<usize>>,
    characters: Vec<RawCharacter>,
}

/// Parse and fully validate a JSON character-table document.
pub fn parse_table(document: &str) -> Result<CharacterTable, TableError> {
    let raw: RawTable =
        serde_json::from_str(document).map_err(|e| TableError::Schema(e.to_string()))?;
    let table_name = format!(
        "{} (characteristic {})",
        raw.group, raw.characteristic
    );
    let inv = |message: String| TableError::Invariant {
        table: table_name.clone(),
        message,
    };

    let classes: Vec<ConjugacyClass> = raw
        .classes
        .iter()
        .map(|c| ConjugacyClass {
            name: c.name.clone(),
            element_order: c.element_order,
            centralizer_order: c.centralizer_order,
        })
        .collect();
    if classes.is_empty() {
        return Err(inv("no classes".into()));
    }
    if classes[0].element_order != 1 {
        return Err(inv("first class must be the identity class".into()));
    }
    for c in &classes {
        if c.element_order == 0 || !raw.order.is_multiple_of(c.element_order) {
            return Err(inv(format!(
                "class {}: element order {} does not divide group order",
                c.name, c.element_order
            )));
        }
        if c.centralizer_order == 0 || !raw.order.is_multiple_of(c.centralizer_order) {
            return Err(inv(format!(
                "class {}: centralizer order {} does not divide group order",
                c.name, c.centralizer_order
            )));
        }
    }
    if classes.iter().filter(|c| c.element_order == 1).count() != 1 {
        return Err(inv("exactly one identity class required".into()));
    }
    {
        let names: BTreeSet<&str> = classes.iter().map(|c| c.name.as_str()).collect();
        if names.len() != classes.len() {
            return Err(inv("duplicate class names".into()));
        }
    }
    if raw.characteristic != 0 {
        let p = raw.characteristic;
        if !is_prime(p) {
            return Err(inv(format!("characteristic {} is not prime", p)));
        }
        for c in &classes {
            if c.element_order % p == 0 {
                return Err(inv(format!(
                    "class {}: p-singular class in a {}-Brauer table",
                    c.name, p
                )));
            }
        }
    }

    let mut power_maps = BTreeMap::new();
    for (key, map) in &raw.power_maps {
        let q: u64 = key
            .parse()
            .map_err(|_| inv(format!("power map key '{}' is not a prime", key)))?;
        if !is_prime(q) {
            return Err(inv(format!("power map key {} is not prime", q)));
        }
        if map.len() != classes.len() {
            return Err(inv(format!("power map for {} has wrong length", q)));
        }
        for (i, &j) in map.iter().enumerate() {
            if j >= classes.len() {
                return Err(inv(format!("power map for {} has index out of range", q)));
            }
            let n = classes[i].element_order;
            let expect = n / arith::nt::gcd(n, q);
            if classes[j].element_order != expect {
                return Err(inv(format!(
                    "power map for {}: image of class {} has order {}, expected {}",
                    q, classes[i].name, classes[j].element_order, expect
                )));
            }
        }
        power_maps.insert(q, map.clone());
    }
    for (q, _) in arith::nt::factorize(raw.exponent) {
        if !power_maps.contains_key(&q) {
            return Err(inv(format!("missing power map for prime {}", q)));
        }
    }

    let mut characters = Vec::new();
    for ch in &raw.characters {
        if ch.values.len() != classes.len() {
            return Err(inv(format!(
                "character {}: {} values for {} classes",
                ch.name,
                ch.values.len(),
                classes.len()
            )));
        }
        let mut values = Vec::new();
        for (i, s) in ch.values.iter().enumerate() {
            let v = arith::parse(s).map_err(|e| {
                inv(format!(
                    "character {}, class {}: {}",
                    ch.name, classes[i].name, e
                ))
            })?;
            if v.conductor() != 1 && !classes[i].element_order.is_multiple_of(v.conductor()) {
                return Err(inv(format!(
                    "character {}, class {}: conductor {} does not divide element order {}",
                    ch.name,
                    classes[i].name,
                    v.conductor(),
                    classes[i].element_order
                )));
            }
            values.push(v);
        }
        let deg_ok = values[0]
            .as_rational()
            .map(|r| r.is_integer() && r.numer().is_positive())
            .unwrap_or(false);
        if !deg_ok {
            return Err(inv(format!(
                "character {}: degree must be a positive integer",
                ch.name
            )));
        }
        characters.push(Character {
            name: ch.name.clone(),
            values,
        });
    }
    {
        let names: BTreeSet<&str> = characters.iter().map(|c| c.name.as_str()).collect();
        if names.len() != characters.len() {
            return Err(inv("duplicate character names".into()));
        }
    }

    if raw.characteristic == 0 {
        let sum: BigInt = characters
            .iter()
            .map(|c| BigInt::from(c.degree()) * BigInt::from(c.degree()))
            .sum();
        if sum != BigInt::from(raw.order) {
            return Err(inv(format!(
                "degree squares sum to {}, group order is {}",
                sum, raw.order
            )));
        }
    }

    Ok(CharacterTable {
        group_name: raw.group,
        group_order: raw.order,
        exponent: raw.exponent,
        characteristic: raw.characteristic,
        classes,
        power_maps,
        characters,
    })
}

fn is_prime(n: u64) -> bool {
    n > 1 && arith::nt::factorize(n) == vec![(n, n)]
}

impl CharacterTable {
    pub fn class_index(&self, name: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.name == name)
    }

    pub fn character(&self, name: &str) -> Option<&Character> {
        self.characters.iter().find(|c| c.name == name)
    }
}

/// Non-identity classes whose element order divides k, in table order.
pub fn classes_dividing(t: &CharacterTable, k: u64) -> Vec<&ConjugacyClass> {
    t.classes
        .iter()
        .filter(|c| c.element_order > 1 && k.is_multiple_of(c.element_order))
        .collect()
}

/// The ordinary table plus every p-Brauer table with p coprime to k.
pub fn usable_tables(all: &[CharacterTable], k: u64) -> Vec<&CharacterTable> {
    all.iter()
        .filter(|t| t.characteristic == 0 || arith::nt::gcd(t.characteristic, k) == 1)
        .collect()
}

/// The bundled M12 tables: ordinary first, then Brauer tables by ascending
/// characteristic. Panics only if the bundled data itself is corrupt.
pub fn bundled_m12() -> Vec<CharacterTable> {
    [
        include_str!("../data/m12.json"),
        include_str!("../data/m12_mod2.json"),
        include_str!("../data/m12_mod3.json"),
        include_str!("../data/m12_mod5.json"),
        include_str!("../data/m12_mod11.json"),
    ]
    .iter()
    .map(|doc| parse_table(doc).expect("bundled table must validate"))
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_tables_validate() {
        let all = bundled_m12();
        assert_eq!(all.len(), 5);
        let ord = &all[0];
        assert_eq!(ord.characteristic, 0);
        assert_eq!(ord.group_order, 95040);
        assert_eq!(ord.exponent, 1320);
        assert_eq!(ord.classes.len(), 15);
        assert_eq!(ord.characters.len(), 15);
    }

    #[test]
    fn mod3_excludes_singular_classes() {
        let all = bundled_m12();
        let b3 = all.iter().find(|t| t.characteristic == 3).unwrap();
        let names: Vec<&str> = b3.classes.iter().map(|c| c.name.as_str()).collect();
        for bad in ["3a", "3b", "6a", "6b"] {
            assert!(!names.contains(&bad));
        }
        assert_eq!(b3.classes.len(), 11);
    }

    #[test]
    fn classes_dividing_examples() {
        let all = bundled_m12();
        let names = |k| -> Vec<String> {
            classes_dividing(&all[0], k)
                .iter()
                .map(|c| c.name.clone())
                .collect()
        };
        assert_eq!(names(10), ["2a", "2b", "5a", "10a"]);
        assert_eq!(names(2), ["2a", "2b"]);
        assert!(names(7).is_empty());
    }

    #[test]
    fn usable_tables_examples() {
        let all = bundled_m12();
        let chars = |k| -> Vec<u64> {
            usable_tables(&all, k).iter().map(|t| t.characteristic).collect()
        };
        assert_eq!(chars(2), [0, 3, 5, 11]);
        assert_eq!(chars(10), [0, 3, 11]);
        assert_eq!(chars(55), [0, 2, 3]);
    }

    #[test]
    fn rejects_bad_degree() {
        let doc = r#"{
            "group": "T", "order": 2, "exponent": 2, "characteristic": 0,
            "classes": [
                {"name": "1a", "element_order": 1, "centralizer_order": 2},
                {"name": "2a", "element_order": 2, "centralizer_order": 2}
            ],
            "power_maps": {"2": [0, 0]},
            "characters": [
                {"name": "X1", "values": ["1", "1"]},
                {"name": "X2", "values": ["0", "-1"]}
            ]
        }"#;
        let err = parse_table(doc).unwrap_err();
        assert!(err.to_string().contains("X2"));
    }

    #[test]
    fn rejects_wrong_value_count() {
        let doc = r#"{
            "group": "T", "order": 2, "exponent": 2, "characteristic": 0,
            "classes": [
                {"name": "1a", "element_order": 1, "centralizer_order": 2},
                {"name": "2a", "element_order": 2, "centralizer_order": 2}
            ],
            "power_maps": {"2": [0, 0]},
            "characters": [
                {"name": "X1", "values": ["1"]},
                {"name": "X2", "values": ["1", "-1"]}
            ]
        }"#;
        assert!(parse_table(doc).is_err());
    }

    #[test]
    fn rejects_missing_power_map() {
        let doc = r#"{
            "group": "T", "order": 2, "exponent": 2, "characteristic": 0,
            "classes": [
                {"name": "1a", "element_order": 1, "centralizer_order": 2},
                {"name": "2a", "element_order": 2, "centralizer_order": 2}
            ],
            "power_maps": {},
            "characters": [
                {"name": "X1", "values": ["1", "1"]},
                {"name": "X2", "values": ["1", "-1"]}
            ]
        }"#;
        assert!(parse_table(doc).is_err());
    }
}
