//! Print the scaled HeLP constraint forms k * mu_l(u, chi, p) for a chosen
//! unit order, the way they appear in the literature: an integer-affine form
//! in the unknown partial augmentations that must be non-negative and
//! divisible by k.
//!
//! Usage: cargo run --example mu_forms

use std::collections::BTreeMap;

use helpring::help::{mu_form, AugmentationTuple, MuConstraint};
use helpring::tables::bundled_m12;

fn render(c: &MuConstraint) -> String {
    let mut terms = String::new();
    for (name, r) in &c.scaled_form.coefficients {
        let v = i64::try_from(r.to_integer()).unwrap();
        if v == 0 {
            continue;
        }
        let sign = match (v < 0, terms.is_empty()) {
            (true, true) => "-",
            (true, false) => " - ",
            (false, true) => "",
            (false, false) => " + ",
        };
        let mag = v.abs();
        if mag == 1 {
            terms.push_str(&format!("{sign}nu_{name}"));
        } else {
            terms.push_str(&format!("{sign}{mag}*nu_{name}"));
        }
    }
    let k = i64::try_from(c.scaled_form.constant.to_integer()).unwrap();
    if k != 0 || terms.is_empty() {
        let sign = match (k < 0, terms.is_empty()) {
            (true, true) => "-",
            (true, false) => " - ",
            (false, true) => "",
            (false, false) => " + ",
        };
        terms.push_str(&format!("{sign}{}", k.abs()));
    }
    let p = if c.characteristic == 0 {
        "*".to_string()
    } else {
        c.characteristic.to_string()
    };
    format!(
        "{}*mu_{}(u, {}, {}) = {}   (>= 0 and == 0 mod {})",
        c.modulus, c.index_l, c.character_name, p, terms, c.modulus
    )
}

fn main() {
    let all = bundled_m12();
    let ordinary = &all[0];
    let mod3 = all.iter().find(|t| t.characteristic == 3).unwrap();

    println!("order 2 (no proper powers):");
    let empty = BTreeMap::new();
    for l in 0..2 {
        let chi2 = ordinary.character("chi_2").unwrap();
        println!("  {}", render(&mu_form(ordinary, chi2, 2, l, &empty).unwrap()));
    }
    for l in 0..2 {
        let chi2 = mod3.character("chi_2").unwrap();
        println!("  {}", render(&mu_form(mod3, chi2, 2, l, &empty).unwrap()));
    }

    println!("\norder 11:");
    for l in [1, 2] {
        let chi4 = ordinary.character("chi_4").unwrap();
        println!("  {}", render(&mu_form(ordinary, chi4, 11, l, &empty).unwrap()));
    }

    // composite orders need an assumed tuple for every proper power of u;
    // this is the case u^5 ~ 2a, u^2 ~ 5a of order 10
    println!("\norder 10, assuming u^5 ~ 2a and u^2 ~ 5a:");
    let mut powers = BTreeMap::new();
    powers.insert(2, AugmentationTuple::new(2, [("2a", 1)]));
    powers.insert(5, AugmentationTuple::new(5, [("5a", 1)]));
    for chi in ["chi_2", "chi_4", "chi_7"] {
        for l in [0, 5] {
            let c = ordinary.character(chi).unwrap();
            println!("  {}", render(&mu_form(ordinary, c, 10, l, &powers).unwrap()));
        }
    }
}
