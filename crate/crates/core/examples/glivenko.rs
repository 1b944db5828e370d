//! A'' is a subalgebra satisfying x'' ≈ x, and the three transfer
//! biconditionals, on every small model.

use implicator_lab::enumerator::{models_up_to, EnumOptions};
use implicator_lab::lab::glivenko_check;
use implicator_lab::registry::Registry;

fn main() {
    let reg = Registry::standard();
    let models = models_up_to(3, &EnumOptions::default()).unwrap().models;
    let mut ok = 0;
    for m in &models {
        let r = glivenko_check(m, &reg).unwrap();
        if r.passed() {
            ok += 1;
        } else {
            println!("FAILED on {:?}: {r:?}", m.rows());
        }
        println!(
            "{:?} -> A'' = {:?}  DM {:?} KL {:?} BA {:?}",
            m.rows(),
            r.subalgebra.unwrap_or_default(),
            r.dm,
            r.kl,
            r.ba
        );
    }
    println!("{ok}/{} models pass", models.len());
}
