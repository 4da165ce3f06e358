//! Law-level property tests over seeded random structures.
//!
//! The generator pulls back a union-closed family of subsets through a
//! random map, so every sample should satisfy the axioms; the properties
//! here exercise the library's invariants against that moving corpus
//! rather than hand-picked fixtures.

use proptest::prelude::*;

use speclat::constructions::{adjoin_zero, product, quotient, random_structure, strip_zero};
use speclat::extension::sim_related;
use speclat::semilattice::SpecSemilattice;
use speclat::{
    build_extension, enumerate_homomorphisms, lift_homomorphism, EnumOptions, Morphism,
};

/// The pair identification with both witnesses quantified together.
fn paired_sim(s: &SpecSemilattice, (a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    if !s.sq(b, d) || !s.sq(d, b) {
        return false;
    }
    let n = s.len();
    (0..n).any(|a1| {
        (0..n).any(|c1| {
            s.sq(a1, b) && s.sq(c1, d) && s.le(c, s.join(a, a1)) && s.le(a, s.join(c, c1))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_structures_satisfy_the_axioms(seed in any::<u64>(), cap in 1usize..=8) {
        let s = random_structure(seed, cap).unwrap();
        prop_assert!(s.validate().is_pass());
        prop_assert!(s.check_s7().is_pass());
        prop_assert!(s.is_principal());
    }

    #[test]
    fn closures_mirror_the_relation(seed in any::<u64>(), cap in 1usize..=8) {
        let s = random_structure(seed, cap).unwrap();
        let c = s.to_closure_semilattice().unwrap();
        for a in 0..s.len() {
            for b in 0..s.len() {
                prop_assert_eq!(s.sq(a, b), s.le(a, c.closure(b)));
                prop_assert_eq!(
                    s.closure_of(s.join(a, b)),
                    s.closure_of(s.join(a, c.closure(b)))
                );
            }
        }
        prop_assert_eq!(SpecSemilattice::from_closure_semilattice(&c).unwrap(), s);
    }

    #[test]
    fn witness_scans_agree_with_the_paired_form(seed in any::<u64>(), cap in 1usize..=6) {
        let s = random_structure(seed, cap).unwrap();
        let n = s.len();
        for p in 0..n * n {
            for q in 0..n * n {
                let (pp, qq) = ((p / n, p % n), (q / n, q % n));
                prop_assert_eq!(sim_related(&s, pp, qq), paired_sim(&s, pp, qq));
            }
        }
    }

    #[test]
    fn extensions_embed_and_close_additively(seed in any::<u64>(), cap in 1usize..=6) {
        let s = random_structure(seed, cap).unwrap();
        let ext = build_extension(&s).unwrap();
        prop_assert!(ext.upsilon_morphism().is_embedding());
        prop_assert!(ext.tilde().is_additive());
        prop_assert!(ext.class_count() <= s.len() * s.len());
        // the class of (a, b) is upsilon(a) joined with the closure of
        // upsilon(b), computed inside the extension
        for a in 0..s.len() {
            for b in 0..s.len() {
                let expected = ext
                    .tilde()
                    .join(ext.upsilon()[a], ext.tilde().closure(ext.upsilon()[b]));
                prop_assert_eq!(ext.class_of(a, b), expected);
            }
        }
    }

    #[test]
    fn every_homomorphism_into_the_dense_chain_lifts(seed in any::<u64>(), cap in 1usize..=6) {
        let s = random_structure(seed, cap).unwrap();
        let ext = build_extension(&s).unwrap();
        let t = speclat::constructions::dense_chain();
        let tc = t.to_closure_semilattice().unwrap();
        let opts = EnumOptions { zero_preserving: true, budget: 10_000_000 };
        for eta in enumerate_homomorphisms(&s, &t, opts).unwrap() {
            // the lift itself asserts closure compatibility and the
            // factorization; reaching Ok is the property
            let lifted = lift_homomorphism(&ext, &tc, &eta).unwrap();
            prop_assert!(lifted.is_k_homomorphism().unwrap());
        }
    }

    #[test]
    fn zero_surgery_round_trips(seed in any::<u64>(), cap in 1usize..=8) {
        let s = random_structure(seed, cap).unwrap();
        prop_assert_eq!(strip_zero(&adjoin_zero(&s)).unwrap(), s);
    }

    #[test]
    fn identity_partitions_quotient_to_the_same_structure(seed in any::<u64>(), cap in 1usize..=8) {
        let s = random_structure(seed, cap).unwrap();
        let blocks: Vec<Vec<usize>> = (0..s.len()).map(|x| vec![x]).collect();
        let (q, proj) = quotient(&s, &blocks).unwrap();
        prop_assert_eq!(&q, &s);
        let identity = Morphism::identity(&s);
        prop_assert_eq!(proj.map(), identity.map());
    }

    #[test]
    fn products_validate_and_project(seed_a in any::<u64>(), seed_b in any::<u64>()) {
        let a = random_structure(seed_a, 4).unwrap();
        let b = random_structure(seed_b, 4).unwrap();
        let p = product(&a, &b);
        prop_assert!(p.validate().is_pass());
        prop_assert_eq!(p.len(), a.len() * b.len());
        // the first projection is a homomorphism
        let proj: Vec<usize> = (0..p.len()).map(|x| x / b.len()).collect();
        let proj = Morphism::new(p.clone(), a.clone(), proj).unwrap();
        prop_assert!(proj.is_homomorphism());
    }
}
