//! Validate structures against the axioms and read violation reports.
//!
//! A specialization semilattice is a join semilattice with a relation ⊑
//! that contains the order, is transitive, respects joins on the left,
//! and (when a zero is designated) pins the zero down from above.

use speclat::constructions::{diamond, truncated_nat};
use speclat::semilattice::SpecSemilattice;

fn main() {
    let good = truncated_nat(3);
    let report = good.validate();
    println!("truncated chain: pass = {}", report.is_pass());

    // Break transitivity on a 3-chain: declare 2 ⊑ 0 while 2 ⊑ 1 ⊑ 0
    // fails. Loading raw parts skips validation so the report can show
    // what is wrong.
    let join = vec![vec![0, 1, 2], vec![1, 1, 2], vec![2, 2, 2]];
    let mut sq = vec![
        vec![true, true, true],
        vec![false, true, true],
        vec![false, false, true],
    ];
    sq[2][0] = true;
    let broken = SpecSemilattice::from_raw_parts(join, sq, None).unwrap();
    let report = broken.validate();
    println!("tampered chain: pass = {}", report.is_pass());
    for v in report.violations() {
        println!("  {} at {:?}", v.axiom, v.witness);
        // every reported witness can be replayed against the structure
        assert!(broken.replay(v));
    }

    // The derived law: componentwise joins stay within the relation.
    // It follows from the axioms, so a valid structure never trips it.
    let report = diamond().check_s7();
    println!("diamond join-compatibility scan: pass = {}", report.is_pass());
}
