//! Build the universal extension: a smallest closure semilattice the
//! structure embeds into, with one class per pair `(a, b)` read as
//! "a joined with the closure of b".
//!
//! The truncated chain 0 < 1 < 2 < 3, where every nonzero element
//! specializes into every other, has no closures of its own; extending
//! it adds exactly one new element, a shared point at infinity.

use speclat::build_extension;
use speclat::constructions::{strip_zero, truncated_nat};

fn main() {
    let s = truncated_nat(3);
    let ext = build_extension(&s).unwrap();
    println!("{} elements extend to {} classes", s.len(), ext.class_count());
    for (i, &(a, b)) in ext.representatives().iter().enumerate() {
        println!("  class {i} = [{a}, {b}]");
    }
    println!("embedding: {:?}", ext.upsilon());
    println!("closures:  {:?}", ext.tilde().closure_table());

    // every nonzero element closes to the same new class
    let infinity = ext.class_of(0, 1);
    for a in 1..s.len() {
        assert_eq!(ext.tilde().closure(ext.upsilon()[a]), infinity);
    }
    assert!(!ext.upsilon().contains(&infinity));
    println!("class {infinity} is the point at infinity, outside the image");

    // The embedding preserves and reflects everything except closures:
    // those may genuinely move, which is the reason the extension exists.
    let up = ext.upsilon_morphism();
    assert!(up.is_embedding());
    assert!(!up.is_k_homomorphism().unwrap());

    // A structure without zero is extended through a temporary zero that
    // is dropped afterward. Stripping the bottom off the truncated chain
    // 0 < 1 < 2 leaves two mutually specializing elements and no zero.
    let bare = strip_zero(&truncated_nat(2)).unwrap();
    assert_eq!(bare.zero(), None);
    let ext = build_extension(&bare).unwrap();
    println!(
        "zeroless chain: {} classes, zero adjoined = {}",
        ext.class_count(),
        ext.adjoined_zero()
    );
    assert!(ext.tilde().zero().is_none());
}
