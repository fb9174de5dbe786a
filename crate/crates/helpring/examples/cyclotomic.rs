//! Tour of the exact cyclotomic arithmetic: parsing GAP-style `E(n)^k`
//! expressions, ring operations over the Zumbroich basis, Galois conjugates,
//! and traces down to the rationals.
//!
//! Usage: cargo run --example cyclotomic

use helpring::arith::{self, rat, Cyclotomic};
use helpring::arith::cyclotomic::zumbroich_basis;

fn show(label: &str, x: &Cyclotomic) {
    println!("{label} = {}  (conductor {})", arith::print(x), x.conductor());
}

fn main() {
    // sqrt(2) = E(8) - E(8)^3, represented exactly
    let sqrt2 = arith::parse("E(8)-E(8)^3").unwrap();
    show("sqrt2", &sqrt2);
    show("sqrt2^2", &sqrt2.mul(&sqrt2));

    // the golden ratio lives in Q(zeta_5)
    let phi = arith::parse("-E(5)^2-E(5)^3").unwrap();
    show("phi", &phi);
    show("phi^2 - phi - 1", &phi.mul(&phi).sub(&phi).sub(&Cyclotomic::from_integer(1)));

    // arithmetic mixes conductors; results land in the smallest field
    let z3 = Cyclotomic::root_of_unity(3, 1);
    let z4 = Cyclotomic::root_of_unity(4, 1);
    show("zeta_3 * zeta_4", &z3.mul(&z4));
    show("zeta_3 + zeta_3^2", &z3.add(&z3.mul(&z3)));

    // Galois conjugates of a character-value-like element of Q(zeta_11)
    let x = arith::parse("E(11)+E(11)^3+E(11)^4+E(11)^5+E(11)^9").unwrap();
    show("x", &x);
    for j in [2u64, 3] {
        show(&format!("sigma_{j}(x)"), &x.galois(j).unwrap());
    }
    println!("Tr(x) over Q(zeta_11) = {}", x.trace_in(11));
    println!("Tr(x * zeta_11^-1)   = {}", x.trace_in_times_root(11, -1));

    // scaling keeps everything rational-exact
    let half = sqrt2.scale(&(rat(1) / rat(2)));
    show("sqrt2 / 2", &half);
    show("(sqrt2/2)^2", &half.mul(&half));

    // the Zumbroich basis indexes the canonical representation
    println!("\nZumbroich basis exponents for Q(zeta_12): {:?}", zumbroich_basis(12));
    println!("Zumbroich basis exponents for Q(zeta_8):  {:?}", zumbroich_basis(8));
}
