//! Replays the shipped appendix derivations, then shows that a corrupted
//! step is caught.
//!
//!     cargo run --example replay_derivation -- derivations/l2_7_item14.drv

use std::path::PathBuf;

use implicator_lab::derivation::{check_derivation, inject_fault, parse_derivation, Mode};
use implicator_lab::enumerator::{models_up_to, EnumOptions};
use implicator_lab::registry::Registry;

fn main() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("derivations");
    let files: Vec<PathBuf> = match std::env::args().nth(1) {
        Some(f) => vec![f.into()],
        None => {
            let mut v: Vec<_> = std::fs::read_dir(&dir)
                .unwrap()
                .map(|e| e.unwrap().path())
                .collect();
            v.sort();
            v
        }
    };
    let reg = Registry::standard();
    let models = models_up_to(3, &EnumOptions::default()).unwrap().models;
    for f in files {
        let d = parse_derivation(&std::fs::read_to_string(&f).unwrap(), &reg).unwrap();
        let rep = check_derivation(&d, &models, Mode::Both, &reg).unwrap();
        print!("{}", rep.render_text());
        let broken = inject_fault(&d, d.steps.len() / 2);
        let rep = check_derivation(&broken, &models, Mode::Semantic, &reg).unwrap();
        println!(
            "with step {} corrupted: first bad step {:?}\n",
            d.steps.len() / 2 + 1,
            rep.first_bad
        );
    }
}
