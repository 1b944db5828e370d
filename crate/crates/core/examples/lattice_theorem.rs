//! The four lattice conditions on every small model.

use implicator_lab::enumerator::{models_up_to, EnumOptions};
use implicator_lab::lab::lattice_equivalence_check;
use implicator_lab::registry::Registry;

fn main() {
    let reg = Registry::standard();
    let models = models_up_to(3, &EnumOptions::default()).unwrap().models;
    println!("lattice absorb (x→y)→x DM   table");
    for m in &models {
        let r = lattice_equivalence_check(m, &reg).unwrap();
        let b = |v: bool| if v { "yes" } else { "no" };
        println!(
            "{:<7} {:<6} {:<7} {:<4} {:?}{}",
            b(r.is_lattice),
            b(r.absorption),
            b(r.dm_identity),
            b(r.dm_member),
            m.rows(),
            if r.consistent() {
                ""
            } else {
                "  <- inconsistent"
            }
        );
    }
}
