//! Builds the HeLP constraint system for a hypothesized unit order k: the
//! partial-augmentation sum constraint and one scaled mu_l constraint per
//! (character, l) pair,
//!
//! ```text
//! mu_l(u, chi, p) = (1/k) sum_{d|k} Tr_{Q(zeta_{k/d})/Q}( chi(u^d) * zeta_{k/d}^{-l} )
//! ```
//!
//! which must be a non-negative integer for every torsion unit u of order k.
//! Constraints are stored pre-scaled by k (integer coefficients) together
//! with the congruence `scaled = 0 (mod k)`, keeping the solver in integers.

use std::collections::BTreeMap;

use num::Zero;

use crate::arith::{rat, Cyclotomic, Rational};
use crate::solver::IntegerLinearSystem;
use crate::tables::{classes_dividing, Character, CharacterTable};

#[derive(Debug, Clone, thiserror::Error)]
pub enum HelpError {
    #[error("class {class} not present in table {table}")]
    ClassAbsent { class: String, table: String },
    #[error("missing profile entry for u^{power} (order {order})")]
    MissingProfileEntry { power: u64, order: u64 },
    #[error("table of characteristic {p} cannot be used for order {k} (p divides k)")]
    BadCharacteristic { p: u64, k: u64 },
}

/// Partial augmentations nu_C of one unit order, over exactly the allowed
/// classes; entries sum to 1 and the identity class never appears.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct AugmentationTuple {
    pub order: u64,
    pub entries: BTreeMap<String, i64>,
}

impl AugmentationTuple {
    pub fn new(order: u64, entries: impl IntoIterator<Item = (&'static str, i64)>) -> Self {
        AugmentationTuple {
            order,
            entries: entries
                .into_iter()
                .map(|(n, v)| (n.to_string(), v))
                .collect(),
        }
    }

    /// Number of nonzero partial augmentations.
    pub fn support(&self) -> usize {
        self.entries.values().filter(|v| **v != 0).count()
    }
}

/// An exact rational-affine form over class-name unknowns.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LinearForm {
    pub constant: Rational,
    pub coefficients: BTreeMap<String, Rational>,
}

impl LinearForm {
    pub fn evaluate(&self, t: &AugmentationTuple) -> Rational {
        let mut acc = self.constant.clone();
        for (name, c) in &self.coefficients {
            if let Some(v) = t.entries.get(name) {
                acc += c * rat(*v);
            }
        }
        acc
    }
}

/// One scaled HeLP constraint: `scaled_form >= 0` and
/// `scaled_form = 0 (mod modulus)`, where scaled_form = k * mu_l.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuConstraint {
    pub character_name: String,
    pub characteristic: u64,
    pub index_l: u64,
    pub scaled_form: LinearForm,
    pub modulus: u64,
}

/// chi(u) = sum_C nu_C chi(C) for a tuple of partial augmentations.
pub fn chi_of_tuple(
    table: &CharacterTable,
    character: &Character,
    t: &AugmentationTuple,
) -> Result<Cyclotomic, HelpError> {
    let mut acc = Cyclotomic::zero();
    for (name, v) in &t.entries {
        let idx = table
            .class_index(name)
            .ok_or_else(|| HelpError::ClassAbsent {
                class: name.clone(),
                table: format!("{} (characteristic {})", table.group_name, table.characteristic),
            })?;
        acc = acc.add(&character.values[idx].scale(&rat(*v)));
    }
    Ok(acc)
}

/// The scaled mu_l constraint for one character at order k.
///
/// `powers` supplies, keyed by the order m of u^d, an admitted tuple for each
/// proper divisor power: for every d | k with 1 < d < k there must be an
/// entry at m = k/d. The d = 1 term contributes the unknown coefficients
/// (coefficient of nu_C is Tr_{Q(zeta_k)/Q}(chi(C) zeta_k^{-l})) and the
/// d = k term contributes chi(1).
pub fn mu_form(
    table: &CharacterTable,
    character: &Character,
    k: u64,
    l: u64,
    powers: &BTreeMap<u64, AugmentationTuple>,
) -> Result<MuConstraint, HelpError> {
    if table.characteristic != 0 && k.is_multiple_of(table.characteristic) {
        return Err(HelpError::BadCharacteristic {
            p: table.characteristic,
            k,
        });
    }
    let mut constant = Rational::zero();
    let mut coefficients = BTreeMap::new();

    // d = 1: unknown coefficients over the allowed classes
    for class in classes_dividing(table, k) {
        let idx = table.class_index(&class.name).unwrap();
        let coeff = character.values[idx].trace_in_times_root(k, -(l as i64));
        if !coeff.is_zero() {
            coefficients.insert(class.name.clone(), coeff);
        }
    }

    // 1 < d < k: fixed values from the admitted power tuples
    for d in crate::arith::nt::divisors(k) {
        if d == 1 || d == k {
            continue;
        }
        let m = k / d;
        let tuple = powers
            .get(&m)
            .filter(|t| t.order == m)
            .ok_or(HelpError::MissingProfileEntry { power: d, order: m })?;
        let chi_ud = chi_of_tuple(table, character, tuple)?;
        constant += chi_ud.trace_in_times_root(m, -(l as i64));
    }

    // d = k: chi(u^k) = chi(1)
    constant += rat(character.degree() as i64);

    let form = LinearForm {
        constant,
        coefficients,
    };
    debug_assert!(
        form.constant.is_integer() && form.coefficients.values().all(|c| c.is_integer()),
        "scaled mu form must have integer entries"
    );
    Ok(MuConstraint {
        character_name: character.name.clone(),
        characteristic: table.characteristic,
        index_l: l,
        scaled_form: form,
        modulus: k,
    })
}

/// Optional restriction mirroring the paper's hand-picked subsets.
#[derive(Debug, Clone, Default)]
pub struct CharacterSelection {
    /// Keep only characters with these names (across all tables).
    pub names: Option<Vec<String>>,
    /// Keep only tables with these characteristics (0 = ordinary).
    pub characteristics: Option<Vec<u64>>,
}

impl CharacterSelection {
    pub fn all() -> Self {
        Self::default()
    }

    fn keeps_table(&self, t: &CharacterTable) -> bool {
        self.characteristics
            .as_ref()
            .map(|cs| cs.contains(&t.characteristic))
            .unwrap_or(true)
    }

    fn keeps_character(&self, c: &Character) -> bool {
        self.names
            .as_ref()
            .map(|ns| ns.contains(&c.name))
            .unwrap_or(true)
    }
}

/// The full constraint system for order k: variables are the allowed classes
/// of the ordinary table; constraints are the sum constraint plus mu_l for
/// every selected character of every usable table and every l in [0, k),
/// with duplicate scaled forms removed.
///
/// `tables` must already be filtered to the usable set for k (see
/// [`crate::tables::usable_tables`]); the ordinary table must be present.
pub fn build_system(
    tables: &[&CharacterTable],
    k: u64,
    powers: &BTreeMap<u64, AugmentationTuple>,
    selection: &CharacterSelection,
) -> Result<(Vec<MuConstraint>, IntegerLinearSystem), HelpError> {
    let ordinary = tables
        .iter()
        .find(|t| t.characteristic == 0)
        .expect("ordinary table required");
    let variables: Vec<String> = classes_dividing(ordinary, k)
        .iter()
        .map(|c| c.name.clone())
        .collect();

    let mut constraints: Vec<MuConstraint> = Vec::new();
    for table in tables {
        if !selection.keeps_table(table) {
            continue;
        }
        for character in &table.characters {
            if !selection.keeps_character(character) {
                continue;
            }
            for l in 0..k {
                let c = mu_form(table, character, k, l, powers)?;
                if !constraints
                    .iter()
                    .any(|e| e.scaled_form == c.scaled_form && e.modulus == c.modulus)
                {
                    constraints.push(c);
                }
            }
        }
    }

    let system = compile_system(&variables, &constraints, k);
    Ok((constraints, system))
}

/// Lower the named constraints onto the ordered variable list as integer
/// vectors, adding the sum constraint `sum nu_C = 1`.
pub fn compile_system(
    variables: &[String],
    constraints: &[MuConstraint],
    k: u64,
) -> IntegerLinearSystem {
    let to_int = |r: &Rational| -> i64 {
        assert!(r.is_integer(), "non-integer entry in scaled form");
        i64::try_from(r.to_integer()).expect("coefficient overflow")
    };
    let mut system = IntegerLinearSystem::new(variables.to_vec());
    // sum nu_C = 1, i.e. sum nu_C - 1 = 0
    system.add_equality(vec![1; variables.len()], -1);
    for c in constraints {
        let coeffs: Vec<i64> = variables
            .iter()
            .map(|v| c.scaled_form.coefficients.get(v).map(&to_int).unwrap_or(0))
            .collect();
        let constant = to_int(&c.scaled_form.constant);
        system.add_inequality(coeffs.clone(), constant);
        system.add_congruence(coeffs, constant, k);
    }
    system
}
