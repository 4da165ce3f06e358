//! Quotients by compatible partitions, and products.
//!
//! A partition yields a quotient structure when it is a join congruence
//! and interpolates the relation: whenever a ⊑ b and b is identified
//! with b1 ⊑ c, some member of a's block must specialize into some
//! member of c's block. Both conditions are checked with witnesses.

use speclat::constructions::{diamond, from_closure_space, product, quotient, two_chain};
use speclat::Error;

fn main() {
    // Collapse everything above the bottom of the diamond.
    let d = diamond();
    let (q, proj) = quotient(&d, &[vec![0], vec![1, 2, 3]]).unwrap();
    println!("diamond / [bottom | rest] has {} elements", q.len());
    println!("projection: {:?}", proj.map());
    assert_eq!(q, two_chain());
    assert!(proj.is_homomorphism());
    assert!(proj.preserves_zero());

    // Identifying the two atoms is not a join congruence: 1 v 1 = 1
    // stays inside the merged block while 1 v 2 = 3 escapes to the top.
    // The witness names the offending quadruple.
    let bad = [vec![0], vec![1, 2], vec![3]];
    match quotient(&d, &bad) {
        Err(Error::NotCongruence { a, a1, b, b1 }) => {
            println!("rejected: joins of {a}~{a1} with {b}~{b1} fall in different blocks");
        }
        other => panic!("expected a congruence failure, got {other:?}"),
    }

    // A join congruence can still fail interpolation. Take the closure
    // space on points {0, 1} whose closed sets are {1} and {0, 1}, and
    // identify those two closed sets (subsets are numbered by bitmask).
    // Then {0} ⊑ {0,1} ~ {1} ⊑ {} because K({}) = {1}, yet {0} does not
    // specialize into {}, and no other block members help.
    let s = from_closure_space(2, &[0b10, 0b11]).unwrap();
    let merged = [vec![0], vec![1], vec![2, 3]];
    match quotient(&s, &merged) {
        Err(Error::NoInterpolant { a, b, b1, c }) => {
            println!("rejected: {a} \u{2291} {b} ~ {b1} \u{2291} {c} has no interpolant");
            assert_eq!((a, b, b1, c), (1, 3, 2, 0));
        }
        other => panic!("expected an interpolation failure, got {other:?}"),
    }

    // Products are componentwise; the diamond is the square of the
    // 2-chain.
    let p = product(&two_chain(), &two_chain());
    println!("2-chain x 2-chain has {} elements", p.len());
    assert_eq!(p, diamond());
}
