//! Ways of producing specialization semilattices: closure spaces, images of
//! semilattice maps, difference ideals, quotients, products, zero adjunction,
//! a few small named structures, and a seeded random generator.
//!
//! Subsets of a finite ground set are encoded as bitmask integers, and when a
//! powerset is the carrier the element index equals the bitmask value.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::morphisms::Morphism;
use crate::semilattice::SpecSemilattice;

/// Largest ground set accepted by the powerset-backed builders (carrier 2^g).
pub const GROUND_LIMIT: usize = 6;

/// Largest carrier [`random_structure`] will produce.
pub const RANDOM_SIZE_LIMIT: usize = 12;

fn check_ground(ground_size: usize, masks: &[u32]) -> Result<u32, Error> {
    if ground_size > GROUND_LIMIT {
        return Err(Error::Malformed(format!(
            "ground set of size {ground_size} exceeds the limit {GROUND_LIMIT}"
        )));
    }
    let full: u32 = (1u32 << ground_size) - 1;
    for &m in masks {
        if m > full {
            return Err(Error::Malformed(format!(
                "subset mask {m:#b} is out of range for a ground set of size {ground_size}"
            )));
        }
    }
    Ok(full)
}

/// Views a plain join semilattice as a specialization semilattice with
/// `⊑` equal to the induced order.
pub fn order_structure(
    join: Vec<Vec<usize>>,
    zero: Option<usize>,
) -> Result<SpecSemilattice, Error> {
    let n = join.len();
    let sq = (0..n)
        .map(|a| (0..n).map(|b| join[a][b] == b).collect())
        .collect();
    SpecSemilattice::new(join, sq, zero)
}

/// The powerset of a ground set under union, with `x ⊑ y` iff `x ⊆ Ky`,
/// where `Ky` is the smallest member of `closed` containing `y`.
///
/// `closed` must contain the ground set and be closed under pairwise
/// intersection. The empty set is the designated zero exactly when it is
/// closed; otherwise `K∅ != ∅` puts a nonempty set below `∅` and no zero
/// can lawfully be designated.
pub fn from_closure_space(ground_size: usize, closed: &[u32]) -> Result<SpecSemilattice, Error> {
    let full = check_ground(ground_size, closed)?;
    if !closed.contains(&full) {
        return Err(Error::MissingGroundSet);
    }
    for &x in closed {
        for &y in closed {
            if !closed.contains(&(x & y)) {
                return Err(Error::NotIntersectionClosed { x, y });
            }
        }
    }
    let n = 1usize << ground_size;
    let k: Vec<u32> = (0..n)
        .map(|x| {
            closed
                .iter()
                .copied()
                .filter(|&c| c & (x as u32) == x as u32)
                .fold(full, |acc, c| acc & c)
        })
        .collect();
    let join = (0..n)
        .map(|x| (0..n).map(|y| x | y).collect())
        .collect();
    let sq = (0..n)
        .map(|x| (0..n).map(|y| (x as u32) & k[y] == x as u32).collect())
        .collect();
    let zero = if k[0] == 0 { Some(0) } else { None };
    SpecSemilattice::new(join, sq, zero)
}

/// Pulls a specialization relation back along a join homomorphism:
/// `a ⊑ b` iff `phi(a) <= phi(b)` in `t`.
///
/// The result designates a zero only when `s_join` has a neutral element `z`
/// and `phi` identifies nothing else with it (otherwise `phi(x) = phi(z)`
/// would put `x` below `z`).
pub fn from_semilattice_hom(
    s_join: Vec<Vec<usize>>,
    t: &SpecSemilattice,
    phi: &[usize],
) -> Result<SpecSemilattice, Error> {
    let n = s_join.len();
    for (i, row) in s_join.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Malformed(format!(
                "join row {i} has length {} in a structure of size {n}",
                row.len()
            )));
        }
        for &v in row {
            if v >= n {
                return Err(Error::Malformed(format!(
                    "join entry {v} is out of range for size {n}"
                )));
            }
        }
    }
    if phi.len() != n {
        return Err(Error::Malformed(format!(
            "map has {} entries for a structure of size {n}",
            phi.len()
        )));
    }
    if let Some(&bad) = phi.iter().find(|&&v| v >= t.len()) {
        return Err(Error::Malformed(format!(
            "map value {bad} is out of range for a target of size {}",
            t.len()
        )));
    }
    for a in 0..n {
        for b in 0..n {
            if phi[s_join[a][b]] != t.join(phi[a], phi[b]) {
                return Err(Error::NotHomomorphism { a, b });
            }
        }
    }
    let sq: Vec<Vec<bool>> = (0..n)
        .map(|a| (0..n).map(|b| t.le(phi[a], phi[b])).collect())
        .collect();
    let neutral = (0..n).find(|&z| (0..n).all(|x| s_join[z][x] == x));
    let zero = neutral.filter(|&z| (0..n).all(|x| phi[x] != phi[z] || x == z));
    SpecSemilattice::new(s_join, sq, zero)
}

/// The powerset of a ground set under union, with `x ⊑ y` iff the
/// difference `x \ y` lies in `ideal`.
///
/// `ideal` must contain the empty set, be downward closed, and be closed
/// under union. The empty set is the designated zero exactly when the ideal
/// is trivial.
pub fn mod_ideal(ground_size: usize, ideal: &[u32]) -> Result<SpecSemilattice, Error> {
    check_ground(ground_size, ideal)?;
    let members: std::collections::BTreeSet<u32> = ideal.iter().copied().collect();
    if !members.contains(&0) {
        return Err(Error::NotAnIdeal("the empty set is missing".into()));
    }
    for &m in &members {
        // enumerate proper submasks of m
        let mut sub = (m.wrapping_sub(1)) & m;
        while sub != 0 {
            if !members.contains(&sub) {
                return Err(Error::NotAnIdeal(format!(
                    "subset {sub:#b} of member {m:#b} is missing"
                )));
            }
            sub = (sub.wrapping_sub(1)) & m;
        }
    }
    for &x in &members {
        for &y in &members {
            if !members.contains(&(x | y)) {
                return Err(Error::NotAnIdeal(format!(
                    "not closed under union: {x:#b} and {y:#b}"
                )));
            }
        }
    }
    let n = 1usize << ground_size;
    let join = (0..n)
        .map(|x| (0..n).map(|y| x | y).collect())
        .collect();
    let sq = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| members.contains(&((x & !y) as u32 & ((n - 1) as u32))))
                .collect()
        })
        .collect();
    let zero = if members.len() == 1 { Some(0) } else { None };
    SpecSemilattice::new(join, sq, zero)
}

/// Adds a fresh zero below everything, at the last index `n`.
///
/// Panics if the input does not validate.
pub fn adjoin_zero(s: &SpecSemilattice) -> SpecSemilattice {
    let n = s.len();
    let mut join: Vec<Vec<usize>> = s.join_table().to_vec();
    for (x, row) in join.iter_mut().enumerate() {
        row.push(x);
    }
    join.push((0..n).chain([n]).collect());
    let mut sq: Vec<Vec<bool>> = s.sq_table().to_vec();
    for row in sq.iter_mut() {
        row.push(false);
    }
    sq.push(vec![true; n + 1]);
    SpecSemilattice::new(join, sq, Some(n)).expect("adjoining a fresh zero preserves the laws")
}

/// Removes the designated zero. The remaining structure designates a zero
/// again exactly when it has a neutral element below which nothing sits;
/// in particular, adjoining a zero to an input with a designated zero (or
/// with no lawful candidate for one) and stripping it restores the input.
pub fn strip_zero(s: &SpecSemilattice) -> Result<SpecSemilattice, Error> {
    let z = s.zero().ok_or(Error::NoZero)?;
    let n = s.len();
    if n == 1 {
        return SpecSemilattice::new(vec![], vec![], None);
    }
    let keep: Vec<usize> = (0..n).filter(|&x| x != z).collect();
    let renum = |x: usize| if x > z { x - 1 } else { x };
    let join: Vec<Vec<usize>> = keep
        .iter()
        .map(|&a| keep.iter().map(|&b| renum(s.join(a, b))).collect())
        .collect();
    let sq: Vec<Vec<bool>> = keep
        .iter()
        .map(|&a| keep.iter().map(|&b| s.sq(a, b)).collect())
        .collect();
    let m = n - 1;
    let neutral = (0..m).find(|&c| (0..m).all(|x| join[c][x] == x));
    let zero = neutral.filter(|&c| (0..m).all(|x| !sq[x][c] || x == c));
    SpecSemilattice::new(join, sq, zero)
}

/// Quotients `s` by a partition, checking the two preconditions that make
/// the quotient a specialization semilattice:
///
/// 1. the partition is a join congruence, and
/// 2. whenever `a ⊑ b ~ b1 ⊑ c` there are `a1 ~ a` and `c1 ~ c` with
///    `a1 ⊑ c1` (so the quotient relation `[a] ⊑ [b]` iff some members
///    are related is transitive).
///
/// Returns the quotient together with the projection map. The zero class is
/// designated as the quotient's zero only when nothing else sits below it.
pub fn quotient(
    s: &SpecSemilattice,
    blocks: &[Vec<usize>],
) -> Result<(SpecSemilattice, Morphism), Error> {
    let n = s.len();
    let mut cls = vec![usize::MAX; n];
    let mut sorted: Vec<Vec<usize>> = blocks.to_vec();
    for b in sorted.iter_mut() {
        b.sort_unstable();
        if b.is_empty() {
            return Err(Error::Malformed("empty partition block".into()));
        }
    }
    sorted.sort_by_key(|b| b[0]);
    for (i, block) in sorted.iter().enumerate() {
        for &x in block {
            if x >= n {
                return Err(Error::Malformed(format!(
                    "partition element {x} is out of range for size {n}"
                )));
            }
            if cls[x] != usize::MAX {
                return Err(Error::Malformed(format!(
                    "element {x} appears in two partition blocks"
                )));
            }
            cls[x] = i;
        }
    }
    if cls.iter().any(|&c| c == usize::MAX) {
        return Err(Error::Malformed("partition does not cover the carrier".into()));
    }
    let m = sorted.len();

    for a in 0..n {
        for a1 in 0..n {
            if cls[a] != cls[a1] {
                continue;
            }
            for b in 0..n {
                for b1 in 0..n {
                    if cls[b] == cls[b1] && cls[s.join(a, b)] != cls[s.join(a1, b1)] {
                        return Err(Error::NotCongruence { a, a1, b, b1 });
                    }
                }
            }
        }
    }

    // [x] ⊑ [y] iff some members are related; computed first because it is
    // also the interpolant table for precondition (2).
    let mut sq_q = vec![vec![false; m]; m];
    for a in 0..n {
        for b in 0..n {
            if s.sq(a, b) {
                sq_q[cls[a]][cls[b]] = true;
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if !s.sq(a, b) {
                continue;
            }
            for b1 in 0..n {
                if cls[b1] != cls[b] {
                    continue;
                }
                for c in 0..n {
                    if s.sq(b1, c) && !sq_q[cls[a]][cls[c]] {
                        return Err(Error::NoInterpolant { a, b, b1, c });
                    }
                }
            }
        }
    }

    let join_q: Vec<Vec<usize>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| cls[s.join(sorted[i][0], sorted[j][0])])
                .collect()
        })
        .collect();
    let zero_q = s
        .zero()
        .map(|z| cls[z])
        .filter(|&zc| (0..m).all(|i| !sq_q[i][zc] || i == zc));
    let q = SpecSemilattice::new(join_q, sq_q, zero_q)?;
    let projection = Morphism::new(s.clone(), q.clone(), cls)?;
    Ok((q, projection))
}

/// The product structure on pairs, with componentwise join and `⊑`.
/// Pair `(a, b)` sits at index `a * t.len() + b`.
///
/// Panics if the inputs do not validate.
pub fn product(s: &SpecSemilattice, t: &SpecSemilattice) -> SpecSemilattice {
    let (ns, nt) = (s.len(), t.len());
    let idx = |a: usize, b: usize| a * nt + b;
    let n = ns * nt;
    let mut join = vec![vec![0usize; n]; n];
    let mut sq = vec![vec![false; n]; n];
    for a in 0..ns {
        for b in 0..nt {
            for c in 0..ns {
                for d in 0..nt {
                    join[idx(a, b)][idx(c, d)] = idx(s.join(a, c), t.join(b, d));
                    sq[idx(a, b)][idx(c, d)] = s.sq(a, c) && t.sq(b, d);
                }
            }
        }
    }
    let zero = match (s.zero(), t.zero()) {
        (Some(x), Some(y)) => Some(idx(x, y)),
        _ => None,
    };
    SpecSemilattice::new(join, sq, zero).expect("product of valid structures is valid")
}

/// The one-element structure.
pub fn singleton() -> SpecSemilattice {
    order_structure(vec![vec![0]], Some(0)).unwrap()
}

/// The chain `0 < 1` with `⊑` the order.
pub fn two_chain() -> SpecSemilattice {
    order_structure(vec![vec![0, 1], vec![1, 1]], Some(0)).unwrap()
}

/// The diamond `0 < x, y < top` (indices 0,1,2,3) with `⊑` the order.
pub fn diamond() -> SpecSemilattice {
    order_structure(
        vec![
            vec![0, 1, 2, 3],
            vec![1, 1, 3, 3],
            vec![2, 3, 2, 3],
            vec![3, 3, 3, 3],
        ],
        Some(0),
    )
    .unwrap()
}

/// `{0..k}` with max as join and `a ⊑ b` iff `a = 0` or `b > 0`.
/// Every nonzero element closes to the top.
pub fn truncated_nat(k: usize) -> SpecSemilattice {
    let n = k + 1;
    let join = (0..n).map(|a| (0..n).map(|b| a.max(b)).collect()).collect();
    let sq = (0..n)
        .map(|a| (0..n).map(|b| a == 0 || b > 0).collect())
        .collect();
    SpecSemilattice::new(join, sq, Some(0)).expect("the truncated chain satisfies the laws")
}

/// The chain `0 < 1 < 2` with the one extra relation `2 ⊑ 1`, so closures
/// are `K = [0, 2, 2]`: the middle element is dense in the top.
pub fn dense_chain() -> SpecSemilattice {
    let join = vec![vec![0, 1, 2], vec![1, 1, 2], vec![2, 2, 2]];
    let sq = vec![
        vec![true, true, true],
        vec![false, true, true],
        vec![false, true, true],
    ];
    SpecSemilattice::new(join, sq, Some(0)).expect("the dense chain satisfies the laws")
}

/// The diamond with `⊑` pulled back along the collapse onto the 2-chain
/// (`0 -> 0`, everything else `-> 1`), which makes the three nonzero
/// elements specialize into one another.
pub fn collapsed_diamond() -> SpecSemilattice {
    let two = two_chain();
    from_semilattice_hom(diamond().join_table().to_vec(), &two, &[0, 1, 1, 1])
        .expect("the collapse map is a join homomorphism")
}

/// The closure space on three points whose proper closed sets are exactly
/// the singletons. It is principal but not additive: two distinct
/// singletons close to themselves while their union closes to everything.
pub fn non_additive_space() -> SpecSemilattice {
    from_closure_space(3, &[0b000, 0b001, 0b010, 0b100, 0b111])
        .expect("the singleton family is intersection-closed")
}

/// Resolves a structure by string id, for use from the command line:
/// `singleton`, `chain2`, `diamond`, `collapsed-diamond`, `dense-chain`,
/// `nonadditive`, or `n<k>` for the truncated chain `{0..k}`.
pub fn named_structure(id: &str) -> Result<SpecSemilattice, Error> {
    match id {
        "singleton" => Ok(singleton()),
        "chain2" => Ok(two_chain()),
        "diamond" => Ok(diamond()),
        "collapsed-diamond" => Ok(collapsed_diamond()),
        "dense-chain" => Ok(dense_chain()),
        "nonadditive" => Ok(non_additive_space()),
        _ => {
            if let Some(num) = id.strip_prefix('n') {
                if let Ok(k) = num.parse::<usize>() {
                    if (1..RANDOM_SIZE_LIMIT).contains(&k) {
                        return Ok(truncated_nat(k));
                    }
                    return Err(Error::Malformed(format!(
                        "truncated chain size must be in 1..{RANDOM_SIZE_LIMIT}, got {k}"
                    )));
                }
            }
            Err(Error::Malformed(format!("unknown structure id {id:?}")))
        }
    }
}

/// A deterministic random structure with `1 ..= max_size` elements.
///
/// Draws a union-closed subfamily of the 4-point powerset containing the
/// empty set, then pulls `⊑` back along the join map
/// `x -> (x ∩ mask, x nonempty)` for a random `mask`. The structure is
/// valid by construction (and checked anyway), and the nonempty flag keeps
/// the empty set a lawful zero, always at index 0.
pub fn random_structure(seed: u64, max_size: usize) -> Result<SpecSemilattice, Error> {
    if max_size == 0 || max_size > RANDOM_SIZE_LIMIT {
        return Err(Error::Malformed(format!(
            "max_size must be in 1..={RANDOM_SIZE_LIMIT}, got {max_size}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let target = rng.gen_range(1..=max_size);

    let close_with = |family: &[u16], x: u16| -> Vec<u16> {
        let mut out: std::collections::BTreeSet<u16> = family.iter().copied().collect();
        out.insert(x);
        for &f in family {
            out.insert(x | f);
        }
        out.into_iter().collect()
    };
    let mut family: Vec<u16> = vec![0];
    let mut attempts = 0;
    while family.len() < target && attempts < 64 {
        let x = rng.gen_range(1..16u16);
        let widened = close_with(&family, x);
        if widened.len() <= target {
            family = widened;
        }
        attempts += 1;
    }
    if family.len() < target {
        // Deterministic top-up. Taken in descending popcount order each
        // candidate closes by adding exactly itself, so the target is hit.
        let mut fill: Vec<u16> = (1..16).collect();
        fill.sort_by_key(|m| (std::cmp::Reverse(m.count_ones()), *m));
        for x in fill {
            if family.len() == target {
                break;
            }
            if family.binary_search(&x).is_ok() {
                continue;
            }
            let widened = close_with(&family, x);
            if widened.len() <= target {
                family = widened;
            }
        }
    }
    debug_assert_eq!(family.len(), target);

    let mask: u16 = rng.gen_range(0..16);
    let n = family.len();
    let index_of = |m: u16| family.binary_search(&m).expect("family is union-closed");
    let join = (0..n)
        .map(|i| (0..n).map(|j| index_of(family[i] | family[j])).collect())
        .collect();
    let sq = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let (a, b) = (family[i] & mask, family[j] & mask);
                    a & b == a && (family[i] == 0 || family[j] != 0)
                })
                .collect()
        })
        .collect();
    SpecSemilattice::new(join, sq, Some(0))
}
