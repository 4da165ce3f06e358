//! Put an extension on trial: enumerate every homomorphism into a small
//! additive target and confirm each factors through the embedding by
//! exactly one closure-compatible map, matching the closed-form lift.
//!
//! The checker treats the extension as untrusted data, so it also
//! catches hand-corrupted ones.

use speclat::constructions::{collapsed_diamond, dense_chain, diamond, two_chain};
use speclat::{build_extension, check_universal_property, ExtensionResult, UniversalFailure};

const BUDGET: u64 = 10_000_000;

fn main() {
    let pairs = [
        ("2-chain vs itself", two_chain(), two_chain()),
        ("2-chain vs dense chain", two_chain(), dense_chain()),
        ("collapsed diamond vs dense chain", collapsed_diamond(), dense_chain()),
        ("diamond vs diamond", diamond(), diamond()),
    ];
    for (name, s, t) in pairs {
        let ext = build_extension(&s).unwrap();
        let t = t.to_closure_semilattice().unwrap();
        let check = check_universal_property(&ext, &t, BUDGET).unwrap();
        println!(
            "{name}: {} ({} homomorphisms, {} closure-compatible)",
            if check.passed() { "pass" } else { "fail" },
            check.hom_count,
            check.k_hom_count
        );
        assert!(check.passed());
    }

    // Swap the embedding of a genuine extension and watch the property
    // break: some homomorphism no longer factors at all.
    let good = build_extension(&two_chain()).unwrap();
    let bad = ExtensionResult::from_parts(
        good.source().clone(),
        good.tilde().clone(),
        vec![2, 0],
        good.class_table().to_vec(),
        good.representatives().to_vec(),
        good.adjoined_zero(),
    )
    .unwrap();
    let t = dense_chain().to_closure_semilattice().unwrap();
    let check = check_universal_property(&bad, &t, BUDGET).unwrap();
    assert!(!check.passed());
    match check.failure.unwrap() {
        UniversalFailure::NoFactorization { eta } => {
            println!("corrupted embedding: {eta:?} does not factor");
        }
        other => println!("corrupted embedding: {other:?}"),
    }
}
