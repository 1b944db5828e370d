//! Every registered claim suite against all models of size ≤ 3.

use implicator_lab::checker::check_suite;
use implicator_lab::enumerator::{models_up_to, EnumOptions};
use implicator_lab::registry::Registry;

fn main() {
    let reg = Registry::standard();
    let models = models_up_to(3, &EnumOptions::default()).unwrap().models;
    for name in reg.suite_names() {
        let rep = check_suite(&models, reg.get_suite(&name).unwrap(), &reg).unwrap();
        let applicable: usize = rep.claims.iter().map(|c| c.applicable).sum();
        println!(
            "{name:<16} {:>2} claims  {:>3} non-vacuous checks  {}",
            rep.claims.len(),
            applicable,
            if rep.passed() {
                "ok".to_string()
            } else {
                format!("{} violations", rep.violations.len())
            }
        );
    }
}
