//! Maps between specialization semilattices and their classification:
//! plain join homomorphisms that preserve `⊑`, embeddings that also reflect
//! it, and closure-compatible homomorphisms (K-homomorphisms).
//!
//! [`Morphism`] owns copies of its endpoint structures so a map can be
//! inspected, composed, and serialized without tracking contexts on the
//! side. Enumeration walks all `|T|^|S|` candidate arrays in lexicographic
//! order and filters, guarded by an explicit candidate budget; results are
//! exhaustive or an error, never silently truncated.

use crate::error::Error;
use crate::semilattice::SpecSemilattice;

/// A total map between the carriers of two specialization semilattices.
/// No law is imposed at construction; use the predicates to classify it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    source: SpecSemilattice,
    target: SpecSemilattice,
    map: Vec<usize>,
}

impl Morphism {
    /// Wraps a map after checking totality and range.
    pub fn new(
        source: SpecSemilattice,
        target: SpecSemilattice,
        map: Vec<usize>,
    ) -> Result<Self, Error> {
        if map.len() != source.len() {
            return Err(Error::Malformed(format!(
                "map has {} entries for a source of size {}",
                map.len(),
                source.len()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&v| v >= target.len()) {
            return Err(Error::Malformed(format!(
                "map value {bad} is out of range for a target of size {}",
                target.len()
            )));
        }
        Ok(Morphism { source, target, map })
    }

    /// The identity map on `s`.
    pub fn identity(s: &SpecSemilattice) -> Self {
        Morphism {
            source: s.clone(),
            target: s.clone(),
            map: (0..s.len()).collect(),
        }
    }

    pub fn source(&self) -> &SpecSemilattice {
        &self.source
    }

    pub fn target(&self) -> &SpecSemilattice {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    /// `then ∘ self`, defined when the middle structures agree exactly.
    pub fn compose(&self, then: &Morphism) -> Result<Morphism, Error> {
        if self.target != then.source {
            return Err(Error::Mismatch(
                "composition requires the first target to equal the second source".into(),
            ));
        }
        let map = self.map.iter().map(|&a| then.map[a]).collect();
        Morphism::new(self.source.clone(), then.target.clone(), map)
    }

    /// Preserves joins and `⊑`.
    pub fn is_homomorphism(&self) -> bool {
        hom_map(&self.source, &self.target, &self.map)
    }

    /// Both structures designate a zero and the map sends one to the other.
    pub fn preserves_zero(&self) -> bool {
        match (self.source.zero(), self.target.zero()) {
            (Some(zs), Some(zt)) => self.map[zs] == zt,
            _ => false,
        }
    }

    /// An injective homomorphism that also reflects `⊑`: related images
    /// come only from related elements.
    pub fn is_embedding(&self) -> bool {
        if !self.is_homomorphism() {
            return false;
        }
        let n = self.source.len();
        for a in 0..n {
            for b in 0..n {
                if a != b && self.map[a] == self.map[b] {
                    return false;
                }
                if self.target.sq(self.map[a], self.map[b]) && !self.source.sq(a, b) {
                    return false;
                }
            }
        }
        true
    }

    /// Preserves joins and commutes with closures. Errs if either structure
    /// has an element without a closure.
    pub fn is_k_homomorphism(&self) -> Result<bool, Error> {
        let ks = closures_of(&self.source)?;
        let kt = closures_of(&self.target)?;
        Ok(k_hom_map(&self.source, &self.target, &ks, &kt, &self.map))
    }
}

pub(crate) fn closures_of(s: &SpecSemilattice) -> Result<Vec<usize>, Error> {
    (0..s.len())
        .map(|a| s.closure_of(a).ok_or(Error::NotPrincipal { element: a }))
        .collect()
}

/// Join- and `⊑`-preservation, checked directly.
pub(crate) fn hom_map(s: &SpecSemilattice, t: &SpecSemilattice, map: &[usize]) -> bool {
    let n = s.len();
    for a in 0..n {
        for b in 0..n {
            if map[s.join(a, b)] != t.join(map[a], map[b]) {
                return false;
            }
            if s.sq(a, b) && !t.sq(map[a], map[b]) {
                return false;
            }
        }
    }
    true
}

/// Join- and closure-preservation. On valid structures commuting with K
/// already forces `⊑`-preservation, and that implication is asserted here
/// as a cross-check rather than trusted.
pub(crate) fn k_hom_map(
    s: &SpecSemilattice,
    t: &SpecSemilattice,
    ks: &[usize],
    kt: &[usize],
    map: &[usize],
) -> bool {
    let n = s.len();
    for a in 0..n {
        for b in 0..n {
            if map[s.join(a, b)] != t.join(map[a], map[b]) {
                return false;
            }
        }
    }
    for a in 0..n {
        if map[ks[a]] != kt[map[a]] {
            return false;
        }
    }
    for a in 0..n {
        for b in 0..n {
            if s.sq(a, b) {
                // a ⊑ b gives a <= Kb, so f(a) <= f(Kb) = K f(b), so f(a) ⊑ f(b)
                assert!(
                    t.sq(map[a], map[b]),
                    "closure-compatible join map failed to preserve the relation at ({a}, {b})"
                );
            }
        }
    }
    true
}

/// Options for the enumeration routines.
#[derive(Clone, Copy, Debug)]
pub struct EnumOptions {
    /// Keep only maps sending zero to zero (empty result when either side
    /// has no designated zero).
    pub zero_preserving: bool,
    /// Upper bound on the number of candidate maps `|T|^|S|`.
    pub budget: u64,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            zero_preserving: false,
            budget: 10_000_000,
        }
    }
}

fn candidate_count(n: usize, m: usize) -> Option<u128> {
    if n == 0 {
        return Some(1);
    }
    u32::try_from(n)
        .ok()
        .and_then(|exp| (m as u128).checked_pow(exp))
}

fn enumerate_matching(
    s: &SpecSemilattice,
    t: &SpecSemilattice,
    opts: EnumOptions,
    keep: impl Fn(&[usize]) -> bool,
) -> Result<Vec<Morphism>, Error> {
    let n = s.len();
    let m = t.len();
    let required = candidate_count(n, m).unwrap_or(u128::MAX);
    if required > opts.budget as u128 {
        return Err(Error::Budget {
            required,
            budget: opts.budget,
        });
    }
    let zeros = match (opts.zero_preserving, s.zero(), t.zero()) {
        (false, _, _) => None,
        (true, Some(zs), Some(zt)) => Some((zs, zt)),
        (true, _, _) => return Ok(Vec::new()),
    };
    if n > 0 && m == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut map = vec![0usize; n];
    loop {
        let zero_ok = zeros.map_or(true, |(zs, zt)| map[zs] == zt);
        if zero_ok && keep(&map) {
            out.push(Morphism::new(s.clone(), t.clone(), map.clone()).expect("in range"));
        }
        // odometer with the last position fastest: lexicographic order
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            map[i] += 1;
            if map[i] < m {
                break;
            }
            map[i] = 0;
        }
    }
}

/// All homomorphisms from `s` to `t`, in lexicographic order of their map
/// arrays. Errs with the required candidate count when it exceeds the
/// budget.
pub fn enumerate_homomorphisms(
    s: &SpecSemilattice,
    t: &SpecSemilattice,
    opts: EnumOptions,
) -> Result<Vec<Morphism>, Error> {
    enumerate_matching(s, t, opts, |map| hom_map(s, t, map))
}

/// All K-homomorphisms from `s` to `t`, in lexicographic order. Both
/// structures must be principal so that closures exist everywhere.
pub fn enumerate_k_homomorphisms(
    s: &SpecSemilattice,
    t: &SpecSemilattice,
    opts: EnumOptions,
) -> Result<Vec<Morphism>, Error> {
    let ks = closures_of(s)?;
    let kt = closures_of(t)?;
    enumerate_matching(s, t, opts, |map| k_hom_map(s, t, &ks, &kt, map))
}
