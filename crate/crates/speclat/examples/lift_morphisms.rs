//! Lift maps through an extension.
//!
//! Any homomorphism from the source into an additive closure semilattice
//! factors through the embedding by exactly one closure-compatible map,
//! given in closed form by `[a, b] -> η(a) v K(η(b))`. Plain
//! homomorphisms can factor in several ways; closure compatibility is
//! what makes the factorization unique.

use speclat::constructions::{dense_chain, truncated_nat, two_chain};
use speclat::{build_extension, lift_functorial, lift_homomorphism, Morphism};

fn main() {
    // Send the truncated chain into the dense chain 0 < 1 < 2 with
    // K(1) = 2: zero to zero, everything else to 1.
    let s = truncated_nat(3);
    let ext = build_extension(&s).unwrap();
    let t = dense_chain().to_closure_semilattice().unwrap();
    let eta = Morphism::new(s.clone(), dense_chain(), vec![0, 1, 1, 1]).unwrap();
    let lifted = lift_homomorphism(&ext, &t, &eta).unwrap();
    println!("eta    = {:?}", eta.map());
    println!("lifted = {:?}  (the point at infinity lands on K(1) = 2)", lifted.map());
    assert!(lifted.is_k_homomorphism().unwrap());

    // A rival factorization sends infinity to 1 instead. It is still a
    // homomorphism and still factors eta, but it ignores closures.
    let rival = Morphism::new(ext.tilde_spec().clone(), dense_chain(), vec![0, 1, 1, 1, 1]).unwrap();
    assert!(rival.is_homomorphism());
    assert!(!rival.is_k_homomorphism().unwrap());
    for a in 0..s.len() {
        assert_eq!(rival.apply(ext.upsilon()[a]), eta.apply(a));
    }
    println!("rival  = {:?}  (factors eta too, but is not closure-compatible)", rival.map());

    // Maps between structures lift to maps between their extensions, and
    // the square with the two embeddings commutes.
    let a = two_chain();
    let b = truncated_nat(3);
    let a_ext = build_extension(&a).unwrap();
    let b_ext = build_extension(&b).unwrap();
    let psi = Morphism::new(a.clone(), b.clone(), vec![0, 1]).unwrap();
    let psi_ext = lift_functorial(&psi, &a_ext, &b_ext).unwrap();
    println!("functorial lift of {:?} is {:?}", psi.map(), psi_ext.map());
    for x in 0..a.len() {
        assert_eq!(
            psi_ext.apply(a_ext.upsilon()[x]),
            b_ext.upsilon()[psi.apply(x)]
        );
    }
    println!("square commutes: lift \u{2218} embed = embed \u{2218} psi");
}
