//! Finite specialization semilattices and closure semilattices.
//!
//! A specialization semilattice is a finite join semilattice `(S, v)` carrying
//! an extra binary relation `sq` (written `a ⊑ b`) that is coarser than the
//! order `a <= b` induced by the join:
//!
//! * (S1) `a <= b` implies `a ⊑ b`
//! * (S2) `⊑` is transitive
//! * (S3) `a ⊑ b` and `a1 ⊑ b` imply `a v a1 ⊑ b`
//! * (S4) `a ⊑ a`
//!
//! A structure may designate a join-neutral element `0`, in which case
//! (S0) `a ⊑ 0` implies `a = 0`.
//!
//! A closure semilattice is a join semilattice with a unary operation `K`
//! that is extensive (`a <= Ka`), idempotent, and isotone in the sense
//! `Ka v Kb <= K(a v b)`. When every element `a` has a closure
//! `Ka = max { b : b ⊑ a }`, the two presentations determine each other:
//! `a ⊑ b` iff `a <= Kb`.
//!
//! Carriers are index sets `0..n`; the join table is the source of truth and
//! `<=` is always derived from it. Checked constructors reject anything that
//! fails the laws; `from_raw_parts` skips the law check (but never the shape
//! check) so that validator failures can be exercised.

use serde::{Serialize, Serializer};

use crate::error::Error;

/// The laws checked by the validators, named individually so that a
/// violation can report exactly what failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    JoinIdempotent,
    JoinCommutative,
    JoinAssociative,
    ZeroNeutral,
    S0,
    S1,
    S2,
    S3,
    S4,
    S7,
    KExtensive,
    KIdempotent,
    KIsotone,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::JoinIdempotent => "join-idempotent",
            Axiom::JoinCommutative => "join-commutative",
            Axiom::JoinAssociative => "join-associative",
            Axiom::ZeroNeutral => "zero-neutral",
            Axiom::S0 => "S0",
            Axiom::S1 => "S1",
            Axiom::S2 => "S2",
            Axiom::S3 => "S3",
            Axiom::S4 => "S4",
            Axiom::S7 => "S7",
            Axiom::KExtensive => "K-extensive",
            Axiom::KIdempotent => "K-idempotent",
            Axiom::KIsotone => "K-isotone",
        }
    }
}

impl Serialize for Axiom {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// One failed law together with the lexicographically least witness tuple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.witness.iter().map(|x| x.to_string()).collect();
        write!(f, "{} witness ({})", self.axiom, parts.join(","))
    }
}

/// Outcome of a validation pass: the empty violation list means pass.
///
/// Each failed law contributes exactly one entry, carrying the first witness
/// in lexicographic scan order, so reports are deterministic and replayable.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ValidationReport {
    violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_pass(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn violation_for(&self, axiom: Axiom) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }

    fn record(&mut self, axiom: Axiom, witness: Vec<usize>) {
        self.violations.push(Violation { axiom, witness });
    }
}

impl std::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_pass() {
            return f.write_str("pass");
        }
        let parts: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        write!(f, "fail: {}", parts.join("; "))
    }
}

impl Serialize for ValidationReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("ValidationReport", 2)?;
        st.serialize_field("status", if self.is_pass() { "pass" } else { "fail" })?;
        st.serialize_field("violations", &self.violations)?;
        st.end()
    }
}

fn check_table_shape(
    join: &[Vec<usize>],
    n: usize,
    what: &str,
) -> Result<(), Error> {
    for (i, row) in join.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Malformed(format!(
                "{what} row {i} has length {} in a structure of size {n}",
                row.len()
            )));
        }
        for (j, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(Error::Malformed(format!(
                    "{what}[{i}][{j}] = {v} is out of range for size {n}"
                )));
            }
        }
    }
    Ok(())
}

/// A finite specialization semilattice over the carrier `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecSemilattice {
    n: usize,
    join: Vec<Vec<usize>>,
    sq: Vec<Vec<bool>>,
    zero: Option<usize>,
}

impl SpecSemilattice {
    /// Builds a structure and rejects it unless every law holds.
    pub fn new(
        join: Vec<Vec<usize>>,
        sq: Vec<Vec<bool>>,
        zero: Option<usize>,
    ) -> Result<Self, Error> {
        let s = Self::from_raw_parts(join, sq, zero)?;
        let report = s.validate();
        if report.is_pass() {
            Ok(s)
        } else {
            Err(Error::Invalid(report))
        }
    }

    /// Builds a structure after shape checks only, skipping the law check.
    ///
    /// This exists so that the validator's failure paths can be tested;
    /// everything else in the crate assumes structures that validate.
    pub fn from_raw_parts(
        join: Vec<Vec<usize>>,
        sq: Vec<Vec<bool>>,
        zero: Option<usize>,
    ) -> Result<Self, Error> {
        let n = join.len();
        check_table_shape(&join, n, "join")?;
        if sq.len() != n {
            return Err(Error::Malformed(format!(
                "sq table has {} rows in a structure of size {n}",
                sq.len()
            )));
        }
        for (i, row) in sq.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Malformed(format!(
                    "sq row {i} has length {} in a structure of size {n}",
                    row.len()
                )));
            }
        }
        if let Some(z) = zero {
            if z >= n {
                return Err(Error::Malformed(format!(
                    "zero index {z} is out of range for size {n}"
                )));
            }
        }
        Ok(SpecSemilattice { n, join, sq, zero })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// The designated join-neutral element, if one was declared.
    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    /// `a <= b` in the order induced by the join.
    pub fn le(&self, a: usize, b: usize) -> bool {
        self.join[a][b] == b
    }

    /// `a ⊑ b`.
    pub fn sq(&self, a: usize, b: usize) -> bool {
        self.sq[a][b]
    }

    pub fn join_table(&self) -> &[Vec<usize>] {
        &self.join
    }

    pub fn sq_table(&self) -> &[Vec<bool>] {
        &self.sq
    }

    /// The induced order as a full table: `result[a][b]` iff `a v b = b`.
    pub fn induced_order(&self) -> Vec<Vec<bool>> {
        (0..self.n)
            .map(|a| (0..self.n).map(|b| self.le(a, b)).collect())
            .collect()
    }

    /// Checks every law. Join laws are checked first because the order
    /// used by (S1) only means anything once the join is a semilattice.
    pub fn validate(&self) -> ValidationReport {
        let n = self.n;
        let mut report = ValidationReport::default();

        'idem: for a in 0..n {
            if self.join[a][a] != a {
                report.record(Axiom::JoinIdempotent, vec![a]);
                break 'idem;
            }
        }
        'comm: for a in 0..n {
            for b in 0..n {
                if self.join[a][b] != self.join[b][a] {
                    report.record(Axiom::JoinCommutative, vec![a, b]);
                    break 'comm;
                }
            }
        }
        'assoc: for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.join[self.join[a][b]][c] != self.join[a][self.join[b][c]] {
                        report.record(Axiom::JoinAssociative, vec![a, b, c]);
                        break 'assoc;
                    }
                }
            }
        }
        if let Some(z) = self.zero {
            for a in 0..n {
                if self.join[z][a] != a {
                    report.record(Axiom::ZeroNeutral, vec![a]);
                    break;
                }
            }
            for a in 0..n {
                if self.sq[a][z] && a != z {
                    report.record(Axiom::S0, vec![a]);
                    break;
                }
            }
        }
        'ns1: for a in 0..n {
            for b in 0..n {
                if self.le(a, b) && !self.sq[a][b] {
                    report.record(Axiom::S1, vec![a, b]);
                    break 'ns1;
                }
            }
        }
        'ns2: for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.sq[a][b] && self.sq[b][c] && !self.sq[a][c] {
                        report.record(Axiom::S2, vec![a, b, c]);
                        break 'ns2;
                    }
                }
            }
        }
        'ns3: for a in 0..n {
            for a1 in 0..n {
                for b in 0..n {
                    if self.sq[a][b] && self.sq[a1][b] && !self.sq[self.join[a][a1]][b] {
                        report.record(Axiom::S3, vec![a, a1, b]);
                        break 'ns3;
                    }
                }
            }
        }
        for a in 0..n {
            if !self.sq[a][a] {
                report.record(Axiom::S4, vec![a]);
                break;
            }
        }
        report
    }

    /// Checks the derived law: `a ⊑ b` and `a1 ⊑ b1` imply `a v a1 ⊑ b v b1`.
    ///
    /// This follows from (S1)-(S3), so on a structure that validates the
    /// report always passes; it exists so the derivation stays regression
    /// tested instead of assumed.
    pub fn check_s7(&self) -> ValidationReport {
        let n = self.n;
        let mut report = ValidationReport::default();
        'scan: for a in 0..n {
            for a1 in 0..n {
                for b in 0..n {
                    for b1 in 0..n {
                        if self.sq[a][b]
                            && self.sq[a1][b1]
                            && !self.sq[self.join[a][a1]][self.join[b][b1]]
                        {
                            report.record(Axiom::S7, vec![a, a1, b, b1]);
                            break 'scan;
                        }
                    }
                }
            }
        }
        report
    }

    /// The closure of `a`: the `<=`-maximum of `{ b : b ⊑ a }`, when that
    /// maximum exists (on a finite structure that validates it always does).
    ///
    /// The join `m` of all of `{ b : b ⊑ a }` dominates every member, so the
    /// maximum exists iff `m` itself lies in the set, i.e. `m ⊑ a`.
    ///
    /// Panics if `a` is out of range.
    pub fn closure_of(&self, a: usize) -> Option<usize> {
        assert!(a < self.n, "element {a} out of range for size {}", self.n);
        let mut m: Option<usize> = None;
        for b in 0..self.n {
            if self.sq[b][a] {
                m = Some(match m {
                    None => b,
                    Some(x) => self.join[x][b],
                });
            }
        }
        let m = m?;
        if self.sq[m][a] {
            Some(m)
        } else {
            None
        }
    }

    /// True iff every element has a closure.
    pub fn is_principal(&self) -> bool {
        (0..self.n).all(|a| self.closure_of(a).is_some())
    }

    fn closures(&self) -> Result<Vec<usize>, Error> {
        (0..self.n)
            .map(|a| self.closure_of(a).ok_or(Error::NotPrincipal { element: a }))
            .collect()
    }

    /// True iff `K(a v b) = Ka v Kb` everywhere. Errors when some element
    /// has no closure, which on checked structures cannot happen.
    pub fn is_additive(&self) -> Result<bool, Error> {
        let k = self.closures()?;
        for a in 0..self.n {
            for b in 0..self.n {
                if k[self.join[a][b]] != self.join[k[a]][k[b]] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Reads off the closure semilattice `(S, v, K)` of a principal structure.
    pub fn to_closure_semilattice(&self) -> Result<ClosureSemilattice, Error> {
        let k = self.closures()?;
        ClosureSemilattice::new(self.join.clone(), k, self.zero)
    }

    /// Rebuilds the specialization structure of a closure semilattice:
    /// `a ⊑ b` iff `a <= Kb`. Inverse to [`Self::to_closure_semilattice`].
    ///
    /// When `c` designates a zero whose closure is not itself, the induced
    /// relation breaks (S0) and this returns the validation failure.
    pub fn from_closure_semilattice(c: &ClosureSemilattice) -> Result<SpecSemilattice, Error> {
        let n = c.len();
        let sq = (0..n)
            .map(|a| (0..n).map(|b| c.le(a, c.closure(b))).collect())
            .collect();
        SpecSemilattice::new(c.join_table().to_vec(), sq, c.zero())
    }

    /// Re-evaluates a reported violation against this structure; true means
    /// the witness still exhibits the failure.
    pub fn replay(&self, v: &Violation) -> bool {
        let w = &v.witness;
        let jn = |a: usize, b: usize| self.join[a][b];
        match v.axiom {
            Axiom::JoinIdempotent => w.len() == 1 && jn(w[0], w[0]) != w[0],
            Axiom::JoinCommutative => w.len() == 2 && jn(w[0], w[1]) != jn(w[1], w[0]),
            Axiom::JoinAssociative => {
                w.len() == 3 && jn(jn(w[0], w[1]), w[2]) != jn(w[0], jn(w[1], w[2]))
            }
            Axiom::ZeroNeutral => match self.zero {
                Some(z) => w.len() == 1 && jn(z, w[0]) != w[0],
                None => false,
            },
            Axiom::S0 => match self.zero {
                Some(z) => w.len() == 1 && self.sq[w[0]][z] && w[0] != z,
                None => false,
            },
            Axiom::S1 => w.len() == 2 && self.le(w[0], w[1]) && !self.sq[w[0]][w[1]],
            Axiom::S2 => {
                w.len() == 3 && self.sq[w[0]][w[1]] && self.sq[w[1]][w[2]] && !self.sq[w[0]][w[2]]
            }
            Axiom::S3 => {
                w.len() == 3
                    && self.sq[w[0]][w[2]]
                    && self.sq[w[1]][w[2]]
                    && !self.sq[jn(w[0], w[1])][w[2]]
            }
            Axiom::S4 => w.len() == 1 && !self.sq[w[0]][w[0]],
            Axiom::S7 => {
                w.len() == 4
                    && self.sq[w[0]][w[2]]
                    && self.sq[w[1]][w[3]]
                    && !self.sq[jn(w[0], w[1])][jn(w[2], w[3])]
            }
            Axiom::KExtensive | Axiom::KIdempotent | Axiom::KIsotone => false,
        }
    }
}

/// A finite closure semilattice over the carrier `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureSemilattice {
    n: usize,
    join: Vec<Vec<usize>>,
    k: Vec<usize>,
    zero: Option<usize>,
}

impl ClosureSemilattice {
    pub fn new(join: Vec<Vec<usize>>, k: Vec<usize>, zero: Option<usize>) -> Result<Self, Error> {
        let c = Self::from_raw_parts(join, k, zero)?;
        let report = c.validate();
        if report.is_pass() {
            Ok(c)
        } else {
            Err(Error::Invalid(report))
        }
    }

    /// Shape checks only; see [`SpecSemilattice::from_raw_parts`].
    pub fn from_raw_parts(
        join: Vec<Vec<usize>>,
        k: Vec<usize>,
        zero: Option<usize>,
    ) -> Result<Self, Error> {
        let n = join.len();
        check_table_shape(&join, n, "join")?;
        if k.len() != n {
            return Err(Error::Malformed(format!(
                "K has {} entries in a structure of size {n}",
                k.len()
            )));
        }
        for (i, &v) in k.iter().enumerate() {
            if v >= n {
                return Err(Error::Malformed(format!(
                    "K[{i}] = {v} is out of range for size {n}"
                )));
            }
        }
        if let Some(z) = zero {
            if z >= n {
                return Err(Error::Malformed(format!(
                    "zero index {z} is out of range for size {n}"
                )));
            }
        }
        Ok(ClosureSemilattice { n, join, k, zero })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.join[a][b] == b
    }

    pub fn closure(&self, a: usize) -> usize {
        self.k[a]
    }

    pub fn join_table(&self) -> &[Vec<usize>] {
        &self.join
    }

    pub fn closure_table(&self) -> &[usize] {
        &self.k
    }

    /// Join laws plus: `K` extensive, idempotent, and isotone in the form
    /// `Ka v Kb <= K(a v b)`.
    pub fn validate(&self) -> ValidationReport {
        let n = self.n;
        let mut report = ValidationReport::default();
        'idem: for a in 0..n {
            if self.join[a][a] != a {
                report.record(Axiom::JoinIdempotent, vec![a]);
                break 'idem;
            }
        }
        'comm: for a in 0..n {
            for b in 0..n {
                if self.join[a][b] != self.join[b][a] {
                    report.record(Axiom::JoinCommutative, vec![a, b]);
                    break 'comm;
                }
            }
        }
        'assoc: for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.join[self.join[a][b]][c] != self.join[a][self.join[b][c]] {
                        report.record(Axiom::JoinAssociative, vec![a, b, c]);
                        break 'assoc;
                    }
                }
            }
        }
        if let Some(z) = self.zero {
            for a in 0..n {
                if self.join[z][a] != a {
                    report.record(Axiom::ZeroNeutral, vec![a]);
                    break;
                }
            }
        }
        for a in 0..n {
            if !self.le(a, self.k[a]) {
                report.record(Axiom::KExtensive, vec![a]);
                break;
            }
        }
        for a in 0..n {
            if self.k[self.k[a]] != self.k[a] {
                report.record(Axiom::KIdempotent, vec![a]);
                break;
            }
        }
        'iso: for a in 0..n {
            for b in 0..n {
                if !self.le(self.join[self.k[a]][self.k[b]], self.k[self.join[a][b]]) {
                    report.record(Axiom::KIsotone, vec![a, b]);
                    break 'iso;
                }
            }
        }
        report
    }

    /// True iff `K(a v b) = Ka v Kb` everywhere.
    pub fn is_additive(&self) -> bool {
        for a in 0..self.n {
            for b in 0..self.n {
                if self.k[self.join[a][b]] != self.join[self.k[a]][self.k[b]] {
                    return false;
                }
            }
        }
        true
    }

    /// True iff a zero is designated and `K0 = 0`.
    pub fn zero_is_closed(&self) -> bool {
        match self.zero {
            Some(z) => self.k[z] == z,
            None => false,
        }
    }

    pub fn replay(&self, v: &Violation) -> bool {
        let w = &v.witness;
        let jn = |a: usize, b: usize| self.join[a][b];
        match v.axiom {
            Axiom::JoinIdempotent => w.len() == 1 && jn(w[0], w[0]) != w[0],
            Axiom::JoinCommutative => w.len() == 2 && jn(w[0], w[1]) != jn(w[1], w[0]),
            Axiom::JoinAssociative => {
                w.len() == 3 && jn(jn(w[0], w[1]), w[2]) != jn(w[0], jn(w[1], w[2]))
            }
            Axiom::ZeroNeutral => match self.zero {
                Some(z) => w.len() == 1 && jn(z, w[0]) != w[0],
                None => false,
            },
            Axiom::KExtensive => w.len() == 1 && !self.le(w[0], self.k[w[0]]),
            Axiom::KIdempotent => w.len() == 1 && self.k[self.k[w[0]]] != self.k[w[0]],
            Axiom::KIsotone => {
                w.len() == 2 && !self.le(jn(self.k[w[0]], self.k[w[1]]), self.k[jn(w[0], w[1])])
            }
            _ => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn two_chain() -> SpecSemilattice {
        SpecSemilattice::new(
            vec![vec![0, 1], vec![1, 1]],
            vec![vec![true, true], vec![false, true]],
            Some(0),
        )
        .unwrap()
    }

    // 3-chain {0,1,2} with the extra relation 2 ⊑ 1, so K = [0,2,2].
    fn dense_chain() -> SpecSemilattice {
        let join = vec![vec![0, 1, 2], vec![1, 1, 2], vec![2, 2, 2]];
        let sq = vec![
            vec![true, true, true],
            vec![false, true, true],
            vec![false, true, true],
        ];
        SpecSemilattice::new(join, sq, Some(0)).unwrap()
    }

    // {0..k} with max; a ⊑ b iff a = 0 or b > 0.
    fn truncated_nat(k: usize) -> SpecSemilattice {
        let n = k + 1;
        let join = (0..n).map(|a| (0..n).map(|b| a.max(b)).collect()).collect();
        let sq = (0..n)
            .map(|a| (0..n).map(|b| a == 0 || b > 0).collect())
            .collect();
        SpecSemilattice::new(join, sq, Some(0)).unwrap()
    }

    #[test]
    fn two_chain_validates() {
        assert!(two_chain().validate().is_pass());
    }

    #[test]
    fn added_squeeze_below_zero_fails_s0_with_witness_1() {
        let mut sq = two_chain().sq_table().to_vec();
        sq[1][0] = true;
        let s =
            SpecSemilattice::from_raw_parts(two_chain().join_table().to_vec(), sq, Some(0))
                .unwrap();
        let report = s.validate();
        assert!(!report.is_pass());
        assert_eq!(report.violations().len(), 1);
        let v = report.violation_for(Axiom::S0).unwrap();
        assert_eq!(v.witness, vec![1]);
        assert!(s.replay(v));
        assert!(!two_chain().replay(v));
    }

    #[test]
    fn deleting_an_entry_surfaces_s3() {
        // Start from the diamond collapsed onto a 2-chain (formally: sq via
        // the map [0,1,1,1]), then delete top ⊑ y. The scan reports S3 with
        // the least witness, and S2 breaks as a side effect of the surgery.
        let join = vec![
            vec![0, 1, 2, 3],
            vec![1, 1, 3, 3],
            vec![2, 3, 2, 3],
            vec![3, 3, 3, 3],
        ];
        let phi = [0usize, 1, 1, 1];
        let mut sq: Vec<Vec<bool>> = (0..4)
            .map(|a| (0..4).map(|b| phi[a] <= phi[b]).collect())
            .collect();
        assert!(SpecSemilattice::new(join.clone(), sq.clone(), Some(0)).is_ok());
        sq[3][2] = false;
        let s = SpecSemilattice::from_raw_parts(join, sq, Some(0)).unwrap();
        let report = s.validate();
        let v = report.violation_for(Axiom::S3).unwrap();
        assert_eq!(v.witness, vec![1, 2, 2]);
        assert!(s.replay(v));
        assert!(report.violation_for(Axiom::S2).is_some());
    }

    #[test]
    fn ragged_tables_are_rejected_before_validation() {
        let err = SpecSemilattice::from_raw_parts(
            vec![vec![0, 1], vec![1]],
            vec![vec![true, true], vec![false, true]],
            None,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Malformed(_)));

        let err = SpecSemilattice::from_raw_parts(
            vec![vec![0, 9], vec![9, 1]],
            vec![vec![true, true], vec![false, true]],
            None,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Malformed(_)));
    }

    #[test]
    fn induced_order_of_the_chain_is_the_chain_order() {
        let s = dense_chain();
        let le = s.induced_order();
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(le[a][b], a <= b);
            }
        }
    }

    #[test]
    fn closures_of_named_structures() {
        assert_eq!(two_chain().closure_of(1), Some(1));
        let t = dense_chain();
        assert_eq!(t.closure_of(0), Some(0));
        assert_eq!(t.closure_of(1), Some(2));
        assert_eq!(t.closure_of(2), Some(2));
        let n3 = truncated_nat(3);
        assert_eq!(n3.closure_of(2), Some(3));
        assert_eq!(
            (0..4).map(|a| n3.closure_of(a).unwrap()).collect::<Vec<_>>(),
            vec![0, 3, 3, 3]
        );
    }

    #[test]
    fn finite_valid_structures_are_principal() {
        for s in [two_chain(), dense_chain(), truncated_nat(4)] {
            assert!(s.is_principal());
        }
    }

    #[test]
    fn truncated_nat_is_additive() {
        assert!(truncated_nat(3).is_additive().unwrap());
    }

    #[test]
    fn closure_correspondence_round_trips() {
        for s in [two_chain(), dense_chain(), truncated_nat(3)] {
            let c = s.to_closure_semilattice().unwrap();
            let back = SpecSemilattice::from_closure_semilattice(&c).unwrap();
            assert_eq!(back, s);
            let again = back.to_closure_semilattice().unwrap();
            assert_eq!(again, c);
        }
    }

    #[test]
    fn from_closure_adds_exactly_the_squeezes_of_k() {
        let c = ClosureSemilattice::new(
            vec![vec![0, 1, 2], vec![1, 1, 2], vec![2, 2, 2]],
            vec![0, 2, 2],
            Some(0),
        )
        .unwrap();
        let s = SpecSemilattice::from_closure_semilattice(&c).unwrap();
        assert_eq!(s, dense_chain());
        assert!(s.sq(2, 1));
        assert!(!s.sq(1, 0));
    }

    #[test]
    fn from_closure_with_unclosed_zero_fails_s0() {
        // K0 = 1 puts 1 below zero in the induced relation.
        let c = ClosureSemilattice::new(
            vec![vec![0, 1], vec![1, 1]],
            vec![1, 1],
            Some(0),
        )
        .unwrap();
        assert!(!c.zero_is_closed());
        let err = SpecSemilattice::from_closure_semilattice(&c).unwrap_err();
        match err {
            Error::Invalid(report) => {
                assert!(report.violation_for(Axiom::S0).is_some());
            }
            other => panic!("expected a validation failure, got {other}"),
        }
    }

    #[test]
    fn closure_validator_catches_broken_k() {
        // Not extensive at 1.
        let c = ClosureSemilattice::from_raw_parts(
            vec![vec![0, 1], vec![1, 1]],
            vec![0, 0],
            Some(0),
        )
        .unwrap();
        let report = c.validate();
        let v = report.violation_for(Axiom::KExtensive).unwrap();
        assert_eq!(v.witness, vec![1]);
        assert!(c.replay(v));

        // Extensive and isotone but not idempotent: needs a non-chain join.
        //   0 < 1,2 < 3 (diamond), K = [1,3,2,3]: K(K0)=K1=3 != 1.
        let join = vec![
            vec![0, 1, 2, 3],
            vec![1, 1, 3, 3],
            vec![2, 3, 2, 3],
            vec![3, 3, 3, 3],
        ];
        let c = ClosureSemilattice::from_raw_parts(join, vec![1, 3, 2, 3], Some(0)).unwrap();
        let report = c.validate();
        let v = report.violation_for(Axiom::KIdempotent).unwrap();
        assert_eq!(v.witness, vec![0]);
        assert!(c.replay(v));
    }

    #[test]
    fn s7_follows_on_valid_structures() {
        for s in [two_chain(), dense_chain(), truncated_nat(4)] {
            assert!(s.check_s7().is_pass());
        }
    }

    #[test]
    fn s7_scan_reports_quadruple_witnesses() {
        // Two incomparable atoms with a ⊑ relation that ignores the join.
        let join = vec![
            vec![0, 1, 2, 3],
            vec![1, 1, 3, 3],
            vec![2, 3, 2, 3],
            vec![3, 3, 3, 3],
        ];
        let mut sq: Vec<Vec<bool>> = (0..4)
            .map(|a| (0..4).map(|b| join[a][b] == b).collect())
            .collect();
        sq[1][2] = true; // 1 ⊑ 2, deliberately not propagated to joins
        let s = SpecSemilattice::from_raw_parts(join, sq, Some(0)).unwrap();
        let report = s.check_s7();
        assert!(!report.is_pass());
        // 1 ⊑ 2 and 2 ⊑ 2, yet 1 v 2 = top does not specialize to 2
        let v = report.violation_for(Axiom::S7).unwrap();
        assert!(s.replay(v));
        assert_eq!(v.witness, vec![1, 2, 2, 2]);
    }

    #[test]
    fn validation_report_serializes_with_status() {
        let report = two_chain().validate();
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["status"], "pass");
        assert!(json["violations"].as_array().unwrap().is_empty());
    }
}
