//! Models of C ∩ I10 are join-semilattices with 0 under →.

use implicator_lab::checker::membership;
use implicator_lab::enumerator::{models_up_to, EnumOptions};
use implicator_lab::lab::semilattice_check;
use implicator_lab::registry::Registry;

fn main() {
    let reg = Registry::standard();
    let sl = reg.get_variety("SL").unwrap();
    let models = models_up_to(3, &EnumOptions::default()).unwrap().models;
    for m in models.iter().filter(|m| membership(m, &sl).unwrap().member) {
        let r = semilattice_check(m);
        println!(
            "{:?}: {}",
            m.rows(),
            if r.passed() {
                "semilattice with 0"
            } else {
                "NOT a semilattice"
            }
        );
    }
}
