//! Concrete sources of specialization semilattices: closure spaces and
//! quotients of powersets by an ideal.
//!
//! In a closure space the carrier is the powerset, join is union, and
//! x ⊑ y means x lies inside the closure of y. In the ideal quotient,
//! x ⊑ y means x is covered by y up to a negligible set.

use speclat::constructions::{from_closure_space, mod_ideal, non_additive_space};
use speclat::Error;

fn main() {
    // Two points, closed sets {1} and {0,1}; subsets numbered by bitmask.
    let s = from_closure_space(2, &[0b10, 0b11]).unwrap();
    println!("closure space on 2 points: {} subsets", s.len());
    for x in 0..s.len() {
        println!("  K({x:02b}) = {:02b}", s.closure_of(x).unwrap());
    }
    // The empty set's closure is {1}, so no zero can be designated.
    assert_eq!(s.zero(), None);

    // Closed families must contain intersections of their members.
    match from_closure_space(2, &[0b01, 0b10, 0b11]) {
        Err(Error::NotIntersectionClosed { x, y }) => {
            println!("rejected family: {x:02b} \u{2229} {y:02b} is not closed");
        }
        other => panic!("expected an intersection failure, got {other:?}"),
    }

    // A closure space whose closure operator is not additive: closing
    // {0} v {1} jumps to the full set while the pointwise closures stay
    // put. Everything here is still a valid specialization semilattice.
    let nas = non_additive_space();
    assert!(nas.validate().is_pass());
    assert!(!nas.is_additive().unwrap());
    println!("the 3-point witness space validates but is not additive");

    // Powerset of 3 points modulo the ideal of subsets of {0}: sets
    // differing by the point 0 become interchangeable in ⊑.
    let m = mod_ideal(3, &[0b000, 0b001]).unwrap();
    println!("powerset mod ideal: {} elements", m.len());
    // {0} is negligible: it specializes into the empty set and back
    assert!(m.sq(0b001, 0b000) && m.sq(0b000, 0b001));
    // {1} is not
    assert!(!m.sq(0b010, 0b000));
    // zero is only designated when the ideal is trivial
    assert_eq!(m.zero(), None);
    assert_eq!(mod_ideal(3, &[0b000]).unwrap().zero(), Some(0));

    // An ideal must be downward closed.
    match mod_ideal(2, &[0b00, 0b11]) {
        Err(Error::NotAnIdeal(msg)) => println!("rejected ideal: {msg}"),
        other => panic!("expected an ideal failure, got {other:?}"),
    }
}
