//! The canonical closure extension of a specialization semilattice.
//!
//! Pairs `(a, b)` over the carrier, read "a joined with the closure of b",
//! are identified by the relation
//!
//! ```text
//! (a, b) ~ (c, d)  iff  b ⊑ d, d ⊑ b, and there are a1 ⊑ b and c1 ⊑ d
//!                       with c <= a v a1 and a <= c v c1
//! ```
//!
//! which is an equivalence compatible with componentwise join. The classes
//! form an additive closure semilattice `S~` with `K[a, b] = [a, a v b]`,
//! and `υ(a) = [a, 0]` embeds the original structure. `S~` is universal:
//! every homomorphism `η` from `S` into a principal additive target factors
//! through `υ` by a unique closure-compatible homomorphism, computed here
//! as `η~([a, b]) = η(a) v K(η(b))`.
//!
//! Zeros follow the usual convention for pointed structures: when the
//! source designates a zero, targets must designate one too and maps must
//! carry zero to zero. A structure without a zero is extended by adjoining
//! a fresh one, extending, and discarding the fresh zero's class (always
//! the last class); in that case representatives may mention the temporary
//! zero as index `n`, and lifting is unconstrained by zeros.
//!
//! Everything the construction promises (the relation is an equivalence
//! outright, join and closure are class-invariant, `υ` embeds, closures of
//! classes are genuine maxima, the result is additive) is asserted during
//! the build rather than trusted.

use crate::constructions::adjoin_zero;
use crate::error::Error;
use crate::morphisms::{
    enumerate_homomorphisms, enumerate_k_homomorphisms, k_hom_map, EnumOptions, Morphism,
};
use crate::semilattice::{ClosureSemilattice, SpecSemilattice};
use crate::union_find::UnionFind;

/// Default cap on the carrier size of the structure being extended; the
/// construction works on all pairs, so cost grows with the fourth power of
/// the carrier and the class count can reach `n^2`.
pub const DEFAULT_SIZE_LIMIT: usize = 12;

/// The pair identification underlying the extension. Decides whether
/// `(a, b)` and `(c, d)` denote the same extended element.
///
/// The two witness conditions constrain `a1` and `c1` independently, so
/// they are searched in two separate linear scans.
///
/// Panics if a pair component is out of range.
pub fn sim_related(s: &SpecSemilattice, (a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    if !s.sq(b, d) || !s.sq(d, b) {
        return false;
    }
    let n = s.len();
    (0..n).any(|a1| s.sq(a1, b) && s.le(c, s.join(a, a1)))
        && (0..n).any(|c1| s.sq(c1, d) && s.le(a, s.join(c, c1)))
}

/// The universal extension of a structure: the closure semilattice of pair
/// classes, the embedding, and the bookkeeping tying classes back to pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionResult {
    source: SpecSemilattice,
    tilde: ClosureSemilattice,
    tilde_spec: SpecSemilattice,
    upsilon: Vec<usize>,
    class_of: Vec<Vec<usize>>,
    representatives: Vec<(usize, usize)>,
    adjoined_zero: bool,
}

impl ExtensionResult {
    /// The structure that was extended.
    pub fn source(&self) -> &SpecSemilattice {
        &self.source
    }

    /// The extension as a closure semilattice.
    pub fn tilde(&self) -> &ClosureSemilattice {
        &self.tilde
    }

    /// The extension as a specialization semilattice (`x ⊑ y` iff
    /// `x <= Ky`).
    pub fn tilde_spec(&self) -> &SpecSemilattice {
        &self.tilde_spec
    }

    /// The embedding as a map: element `a` goes to the class of `(a, 0)`.
    pub fn upsilon(&self) -> &[usize] {
        &self.upsilon
    }

    /// The embedding as a [`Morphism`] into [`Self::tilde_spec`].
    pub fn upsilon_morphism(&self) -> Morphism {
        Morphism::new(
            self.source.clone(),
            self.tilde_spec.clone(),
            self.upsilon.clone(),
        )
        .expect("upsilon is in range")
    }

    /// The class of the pair `(a, b)` over the original carrier.
    pub fn class_of(&self, a: usize, b: usize) -> usize {
        self.class_of[a][b]
    }

    /// The full pair-to-class table over the original carrier.
    pub fn class_table(&self) -> &[Vec<usize>] {
        &self.class_of
    }

    /// Number of classes, i.e. the carrier size of the extension.
    pub fn class_count(&self) -> usize {
        self.tilde.len()
    }

    /// The lexicographically least member pair of each class, in class
    /// order. When a zero was adjoined these may mention it as index `n`.
    pub fn representatives(&self) -> &[(usize, usize)] {
        &self.representatives
    }

    /// Whether a fresh zero was adjoined because the source had none.
    pub fn adjoined_zero(&self) -> bool {
        self.adjoined_zero
    }

    /// Reassembles an extension from stored parts, checking shapes and
    /// ranges but trusting nothing semantically; feed the result to
    /// [`check_universal_property`] to find out whether it deserved the
    /// trust.
    pub fn from_parts(
        source: SpecSemilattice,
        tilde: ClosureSemilattice,
        upsilon: Vec<usize>,
        class_of: Vec<Vec<usize>>,
        representatives: Vec<(usize, usize)>,
        adjoined_zero: bool,
    ) -> Result<Self, Error> {
        let n = source.len();
        let m = tilde.len();
        if upsilon.len() != n || upsilon.iter().any(|&c| c >= m) {
            return Err(Error::Malformed(
                "upsilon must assign every source element a class".into(),
            ));
        }
        if class_of.len() != n
            || class_of
                .iter()
                .any(|row| row.len() != n || row.iter().any(|&c| c >= m))
        {
            return Err(Error::Malformed(
                "the class table must cover all source pairs".into(),
            ));
        }
        let bound = n + usize::from(adjoined_zero);
        if representatives.len() != m
            || representatives.iter().any(|&(a, b)| a >= bound || b >= bound)
        {
            return Err(Error::Malformed(
                "there must be one in-range representative pair per class".into(),
            ));
        }
        let tilde_spec = SpecSemilattice::from_closure_semilattice(&tilde)?;
        Ok(ExtensionResult {
            source,
            tilde,
            tilde_spec,
            upsilon,
            class_of,
            representatives,
            adjoined_zero,
        })
    }
}

/// Builds the universal extension with the default size cap.
pub fn build_extension(s: &SpecSemilattice) -> Result<ExtensionResult, Error> {
    build_extension_with_limit(s, DEFAULT_SIZE_LIMIT)
}

/// Builds the universal extension of `s`, refusing carriers larger than
/// `limit` and inputs that fail validation.
pub fn build_extension_with_limit(
    s: &SpecSemilattice,
    limit: usize,
) -> Result<ExtensionResult, Error> {
    if s.len() > limit {
        return Err(Error::SizeLimit {
            size: s.len(),
            limit,
        });
    }
    let report = s.validate();
    if !report.is_pass() {
        return Err(Error::Invalid(report));
    }
    let (work, adjoined) = match s.zero() {
        Some(_) => (s.clone(), false),
        None => (adjoin_zero(s), true),
    };
    let n = s.len();
    let nw = work.len();
    let z = work.zero().expect("the working structure has a zero");
    let np = nw * nw;
    let pair = |p: usize| (p / nw, p % nw);
    let idx = |a: usize, b: usize| a * nw + b;

    let rel: Vec<Vec<bool>> = (0..np)
        .map(|p| (0..np).map(|q| sim_related(&work, pair(p), pair(q))).collect())
        .collect();
    // The relation must come out an equivalence on its own; it is never
    // repaired by closing transitively.
    for p in 0..np {
        assert!(rel[p][p], "pair relation must be reflexive");
        for q in 0..np {
            assert_eq!(rel[p][q], rel[q][p], "pair relation must be symmetric");
        }
    }
    for p in 0..np {
        for q in 0..np {
            if !rel[p][q] {
                continue;
            }
            for r in 0..np {
                if rel[q][r] {
                    assert!(rel[p][r], "pair relation must be transitive outright");
                }
            }
        }
    }

    let mut uf = UnionFind::new(np);
    for p in 0..np {
        for q in p + 1..np {
            if rel[p][q] {
                uf.union(p, q);
            }
        }
    }
    // Classes are numbered by their least pair in lexicographic order.
    let mut root_id = vec![usize::MAX; np];
    let mut reps: Vec<(usize, usize)> = Vec::new();
    let mut pair_class = vec![usize::MAX; np];
    for p in 0..np {
        let root = uf.find(p);
        if root_id[root] == usize::MAX {
            root_id[root] = reps.len();
            reps.push(pair(p));
        }
        pair_class[p] = root_id[root];
    }
    let m_full = reps.len();

    let join_t: Vec<Vec<usize>> = (0..m_full)
        .map(|i| {
            let (a, b) = reps[i];
            (0..m_full)
                .map(|j| {
                    let (c, d) = reps[j];
                    pair_class[idx(work.join(a, c), work.join(b, d))]
                })
                .collect()
        })
        .collect();
    let k_t: Vec<usize> = (0..m_full)
        .map(|i| {
            let (a, b) = reps[i];
            pair_class[idx(a, work.join(a, b))]
        })
        .collect();
    // Join and closure must not depend on the chosen representatives.
    for p in 0..np {
        let (a, b) = pair(p);
        assert_eq!(
            k_t[pair_class[p]],
            pair_class[idx(a, work.join(a, b))],
            "closure must be class-invariant"
        );
        for q in 0..np {
            let (c, d) = pair(q);
            assert_eq!(
                join_t[pair_class[p]][pair_class[q]],
                pair_class[idx(work.join(a, c), work.join(b, d))],
                "join must be class-invariant"
            );
        }
    }
    // Every class is its representative's image under a v K(b), taken in
    // the extension itself.
    let ups_work: Vec<usize> = (0..nw).map(|a| pair_class[idx(a, z)]).collect();
    for (i, &(a, b)) in reps.iter().enumerate() {
        assert_eq!(
            join_t[ups_work[a]][k_t[ups_work[b]]],
            i,
            "class must equal upsilon(a) v K(upsilon(b))"
        );
    }

    let zero_t = pair_class[idx(z, z)];
    let (tilde, reps) = if adjoined {
        // The fresh zero's class is the singleton {(n, n)}, whose pair is
        // lexicographically greatest, so it got the last class index;
        // dropping it leaves every other index intact.
        assert_eq!(zero_t, m_full - 1, "the fresh zero's class sorts last");
        let mut join_t = join_t;
        let mut k_t = k_t;
        join_t.truncate(m_full - 1);
        for row in join_t.iter_mut() {
            row.truncate(m_full - 1);
        }
        k_t.truncate(m_full - 1);
        let mut reps = reps;
        reps.truncate(m_full - 1);
        (ClosureSemilattice::new(join_t, k_t, None)?, reps)
    } else {
        (ClosureSemilattice::new(join_t, k_t, Some(zero_t))?, reps)
    };
    assert!(tilde.is_additive(), "the extension must be additive");

    let tilde_spec = SpecSemilattice::from_closure_semilattice(&tilde)?;
    let upsilon: Vec<usize> = (0..n).map(|a| pair_class[idx(a, z)]).collect();
    let class_of: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| pair_class[idx(a, b)]).collect())
        .collect();

    // upsilon must be an embedding that reflects the relation exactly and
    // carries the zero (when present) onto the extension's zero.
    for a in 0..n {
        for b in 0..n {
            assert_eq!(
                tilde.join(upsilon[a], upsilon[b]),
                upsilon[s.join(a, b)],
                "upsilon must preserve joins"
            );
            assert_eq!(
                tilde_spec.sq(upsilon[a], upsilon[b]),
                s.sq(a, b),
                "upsilon must preserve and reflect the relation"
            );
            assert!(a == b || upsilon[a] != upsilon[b], "upsilon must be injective");
        }
    }
    if let Some(z0) = s.zero() {
        assert_eq!(tilde.zero(), Some(upsilon[z0]), "upsilon must carry the zero");
    }
    // Each class's closure is the genuine <=-maximum of what sits below it.
    for x in 0..tilde.len() {
        assert_eq!(
            tilde_spec.closure_of(x),
            Some(tilde.closure(x)),
            "class closures must be maxima"
        );
    }

    Ok(ExtensionResult {
        source: s.clone(),
        tilde,
        tilde_spec,
        upsilon,
        class_of,
        representatives: reps,
        adjoined_zero: adjoined,
    })
}

/// Checks the additivity of `t` and hands back its closure table.
fn additive_closures(t: &ClosureSemilattice) -> Result<&[usize], Error> {
    let k = t.closure_table();
    for a in 0..t.len() {
        for b in 0..t.len() {
            if k[t.join(a, b)] != t.join(k[a], k[b]) {
                return Err(Error::NotAdditive { a, b });
            }
        }
    }
    Ok(k)
}

/// The lift formula evaluated on representatives, with no cross-checks;
/// shared by the asserting public lift and the untrusting universal
/// property checker.
fn lift_map(ext: &ExtensionResult, t: &ClosureSemilattice, eta: &[usize]) -> Vec<usize> {
    let n = ext.source().len();
    let kt = t.closure_table();
    ext.representatives()
        .iter()
        .map(|&(a, b)| {
            if ext.adjoined_zero() && b == n {
                // [a, 0] with the adjoined zero contributes no closure part
                eta[a]
            } else {
                t.join(eta[a], kt[eta[b]])
            }
        })
        .collect()
}

/// Lifts a homomorphism `η` from the extended structure into an additive
/// closure semilattice `t` through the extension: the unique
/// closure-compatible `η~` with `η~ ∘ υ = η`, via
/// `η~([a, b]) = η(a) v K(η(b))`.
///
/// `η` must target the specialization structure derived from `t`. When the
/// extended structure designates a zero, `t` must designate one too and
/// `η` must carry zero to zero; a zero-less source imposes no zero
/// discipline on either side.
pub fn lift_homomorphism(
    ext: &ExtensionResult,
    t: &ClosureSemilattice,
    eta: &Morphism,
) -> Result<Morphism, Error> {
    if eta.source() != ext.source() {
        return Err(Error::Mismatch(
            "the map's source is not the extended structure".into(),
        ));
    }
    let t_spec = SpecSemilattice::from_closure_semilattice(t)?;
    if *eta.target() != t_spec {
        return Err(Error::Mismatch(
            "the map's target is not the specialization structure of the closure semilattice"
                .into(),
        ));
    }
    let kt = additive_closures(t)?;
    let s = ext.source();
    let map = eta.map();
    if let Some(z0) = s.zero() {
        let zt = t.zero().ok_or(Error::NoZero)?;
        if map[z0] != zt {
            return Err(Error::NotZeroPreserving);
        }
    }
    for a in 0..s.len() {
        for b in 0..s.len() {
            if map[s.join(a, b)] != t_spec.join(map[a], map[b])
                || (s.sq(a, b) && !t_spec.sq(map[a], map[b]))
            {
                return Err(Error::NotHomomorphism { a, b });
            }
        }
    }

    let lifted = lift_map(ext, t, map);
    let ks = ext.tilde().closure_table();
    assert!(
        k_hom_map(ext.tilde_spec(), &t_spec, ks, kt, &lifted),
        "the lift must be a closure-compatible homomorphism"
    );
    for a in 0..s.len() {
        assert_eq!(
            lifted[ext.upsilon()[a]],
            map[a],
            "the lift must factor the original map through upsilon"
        );
    }
    Morphism::new(ext.tilde_spec().clone(), t_spec, lifted)
}

/// Lifts a zero-preserving homomorphism `ψ` between structures with zero
/// to a closure-compatible homomorphism between their extensions, by
/// lifting `υ_target ∘ ψ`. The resulting square commutes:
/// `ψ~ ∘ υ_source = υ_target ∘ ψ`.
pub fn lift_functorial(
    psi: &Morphism,
    source_ext: &ExtensionResult,
    target_ext: &ExtensionResult,
) -> Result<Morphism, Error> {
    if psi.source() != source_ext.source() || psi.target() != target_ext.source() {
        return Err(Error::Mismatch(
            "the map must run between the two extended structures".into(),
        ));
    }
    if psi.source().zero().is_none() || psi.target().zero().is_none() {
        return Err(Error::NoZero);
    }
    if !psi.preserves_zero() {
        return Err(Error::NotZeroPreserving);
    }
    let into_target_ext: Vec<usize> = psi
        .map()
        .iter()
        .map(|&a| target_ext.upsilon()[a])
        .collect();
    let eta = Morphism::new(
        source_ext.source().clone(),
        target_ext.tilde_spec().clone(),
        into_target_ext,
    )?;
    let lifted = lift_homomorphism(source_ext, target_ext.tilde(), &eta)?;
    for a in 0..psi.source().len() {
        assert_eq!(
            lifted.apply(source_ext.upsilon()[a]),
            target_ext.upsilon()[psi.apply(a)],
            "the functorial square must commute"
        );
    }
    Ok(lifted)
}

/// Why a universal property check failed. Each variant carries the
/// counterexample map from the source into the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UniversalFailure {
    /// This homomorphism does not factor through upsilon at all.
    NoFactorization { eta: Vec<usize> },
    /// This homomorphism factors in more than one way.
    MultipleFactorizations { eta: Vec<usize>, count: usize },
    /// The closed-form lift differs from the unique factorization found by
    /// enumeration.
    LiftMismatch {
        eta: Vec<usize>,
        enumerated: Vec<usize>,
        lifted: Vec<usize>,
    },
}

/// Outcome of an exhaustive universal property check against one target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalCheck {
    /// Homomorphisms from the source into the target (zero-preserving ones
    /// when the source designates a zero).
    pub hom_count: usize,
    /// Closure-compatible homomorphisms from the extension into the target
    /// (same zero discipline).
    pub k_hom_count: usize,
    /// The first failure in enumeration order, if any.
    pub failure: Option<UniversalFailure>,
}

impl UniversalCheck {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Exhaustively verifies the universal property of an extension against an
/// additive closure semilattice: every homomorphism from the source must
/// factor through upsilon by exactly one closure-compatible homomorphism,
/// and that factorization must agree with the closed-form lift.
///
/// The extension is treated as untrusted data; a corrupted one surfaces as
/// a [`UniversalFailure`], not as a panic. `budget` caps each enumeration.
pub fn check_universal_property(
    ext: &ExtensionResult,
    t: &ClosureSemilattice,
    budget: u64,
) -> Result<UniversalCheck, Error> {
    let t_spec = SpecSemilattice::from_closure_semilattice(t)?;
    additive_closures(t)?;
    let zero_preserving = match ext.source().zero() {
        Some(_) => {
            if t.zero().is_none() {
                return Err(Error::NoZero);
            }
            true
        }
        None => false,
    };
    let opts = EnumOptions {
        zero_preserving,
        budget,
    };
    let homs = enumerate_homomorphisms(ext.source(), &t_spec, opts)?;
    let k_homs = enumerate_k_homomorphisms(ext.tilde_spec(), &t_spec, opts)?;
    let n = ext.source().len();
    let mut failure = None;
    'etas: for eta in &homs {
        let factoring: Vec<&Morphism> = k_homs
            .iter()
            .filter(|g| (0..n).all(|a| g.apply(ext.upsilon()[a]) == eta.apply(a)))
            .collect();
        match factoring.as_slice() {
            [] => {
                failure = Some(UniversalFailure::NoFactorization {
                    eta: eta.map().to_vec(),
                });
                break 'etas;
            }
            [unique] => {
                let lifted = lift_map(ext, t, eta.map());
                if lifted != unique.map() {
                    failure = Some(UniversalFailure::LiftMismatch {
                        eta: eta.map().to_vec(),
                        enumerated: unique.map().to_vec(),
                        lifted,
                    });
                    break 'etas;
                }
            }
            many => {
                failure = Some(UniversalFailure::MultipleFactorizations {
                    eta: eta.map().to_vec(),
                    count: many.len(),
                });
                break 'etas;
            }
        }
    }
    if failure.is_none() {
        // factorization pairs the two sets off exactly
        assert_eq!(
            homs.len(),
            k_homs.len(),
            "unique factorization must pair homomorphisms with closure-compatible ones"
        );
    }
    Ok(UniversalCheck {
        hom_count: homs.len(),
        k_hom_count: k_homs.len(),
        failure,
    })
}
