//! Satisfaction of identities, with the lexicographically first witness.

use implicator_lab::algebra::builtin;
use implicator_lab::checker::{satisfies, Sat};
use implicator_lab::term::parse_identity;

fn main() {
    let cases = [
        ("fig1", "x -> y ≈ y' -> x'"),
        ("two_s", "x -> y ≈ y -> x"),
        ("fig3", "x /\\ y ≈ y /\\ x"),
        ("two_b", "(x -> y) -> z ≈ x -> (y -> z)"),
        ("kleene3", "(x -> y) -> y ≈ (y -> x) -> x"),
    ];
    for (name, text) in cases {
        let a = builtin(name).unwrap();
        let id = parse_identity(text).unwrap();
        match satisfies(&a, &id).unwrap() {
            Sat::Holds => println!("{name:<8} ⊨ {text}"),
            Sat::Fails(w) => println!("{name:<8} fails {text} at {w}"),
        }
    }
}
