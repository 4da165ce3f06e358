//! Principal structures carry the same information as closure
//! semilattices: the closure of `a` is the largest element below-or-equal
//! to everything that specializes into `a`, and the relation can be
//! recovered from it by `a ⊑ b  iff  a <= Kb`.

use speclat::constructions::{dense_chain, named_structure};
use speclat::semilattice::SpecSemilattice;

fn main() {
    let s = dense_chain();
    for a in 0..s.len() {
        println!("K({a}) = {:?}", s.closure_of(a));
    }

    // Round trip: structure -> closure semilattice -> structure.
    let c = s.to_closure_semilattice().unwrap();
    println!("closure table: {:?}", c.closure_table());
    println!("additive: {}", c.is_additive());
    let back = SpecSemilattice::from_closure_semilattice(&c).unwrap();
    assert_eq!(back, s);
    println!("round trip: exact");

    // The correspondence, checked on every pair of a larger fixture.
    let s = named_structure("collapsed-diamond").unwrap();
    let c = s.to_closure_semilattice().unwrap();
    for a in 0..s.len() {
        for b in 0..s.len() {
            assert_eq!(s.sq(a, b), s.le(a, c.closure(b)));
        }
    }
    println!("a \u{2291} b  iff  a <= Kb: holds on all pairs");

    // Closures also commute with joins one level down: closing `a v b`
    // is the same as closing `a v Kb`.
    for a in 0..s.len() {
        for b in 0..s.len() {
            assert_eq!(
                s.closure_of(s.join(a, b)),
                s.closure_of(s.join(a, c.closure(b)))
            );
        }
    }
    println!("K(a v b) = K(a v Kb): holds on all pairs");
}
