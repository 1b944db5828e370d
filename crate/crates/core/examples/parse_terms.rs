//! Parsing, printing and substitution of terms and identities.

use std::collections::BTreeMap;

use implicator_lab::term::{parse, parse_identity, parse_term, parse_term_sugared, Parsed, Term};

fn main() {
    let axiom = parse_identity("(x -> y) -> z ≈ ((z' -> x) -> (y -> z)')'").unwrap();
    println!("axiom (I):      {axiom}");
    println!("without sugar:  {}", axiom.print(false));
    println!("variables:      {:?}", axiom.vars());

    let meet = parse_term_sugared("x /\\ y").unwrap();
    println!("\n{meet} expands to {}", meet.expand().print(false));
    let join = parse_term("x \\/ y").unwrap();
    println!("x \\/ y folds back to {}", join);

    // an instance of (I)
    let binding: BTreeMap<String, Term> = [
        ("y".to_string(), parse_term("0'").unwrap()),
        ("z".to_string(), parse_term("y").unwrap()),
    ]
    .into();
    println!(
        "\n(I) with y := 0', z := y:\n  {}",
        axiom.substitute(&binding)
    );

    for bad in ["x -> y -> z", "(x -> y", "x # y"] {
        match parse(bad) {
            Err(e) => println!("`{bad}`: {e}"),
            Ok(Parsed::Term(t)) => println!("`{bad}` parsed as {t}"),
            Ok(Parsed::Identity(i)) => println!("`{bad}` parsed as {i}"),
        }
    }
}
