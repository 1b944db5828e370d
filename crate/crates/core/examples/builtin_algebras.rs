//! The named algebras, their A'' subalgebras and ∧/∨ reducts.

use implicator_lab::algebra::{builtin, BUILTIN_NAMES};

fn main() {
    for name in BUILTIN_NAMES {
        let a = builtin(name).unwrap();
        println!("== {name} (valid: {})", a.is_valid());
        print!("{}", a.render_table());
        let pi = a.prime_image();
        println!("A'' = {:?}", pi.elements);
        print!("{}", a.mj_reduct().render());
        println!();
    }
    let fig1 = builtin("fig1").unwrap();
    println!("fig1 evaluated at (2,2): {}", fig1.imp(2, 2));
}
