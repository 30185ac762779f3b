//! Partitions, cells, k-cores and k-quotients.
//!
//! A partition is a weakly decreasing sequence of positive integers. Young
//! diagrams are indexed by cells (row, col), both 1-based, with row 1 the
//! longest row; the content of a cell is diag = col - row. "Above" a cell
//! (r, c) means (r + 1, c), the cell holding the strictly larger entry in a
//! semistandard filling.
//!
//! The k-core / k-quotient decomposition is computed on an abacus with k
//! runners. A partition with at most t parts is encoded by the beta-set
//! {lambda_i + t - i : 1 <= i <= t}; removing a k-ribbon is moving one bead
//! down by k. We always choose t divisible by k, which fixes the component
//! order of the quotient: runner 0 first.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A cell of a Young diagram. Rows and columns are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        assert!(row >= 1 && col >= 1, "cells are 1-based");
        Cell { row, col }
    }

    /// Content of the cell: col - row.
    pub fn diag(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

/// An integer partition: weakly decreasing positive parts.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, checking that parts are positive and weakly
    /// decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Parse("partition parts must be positive".into()));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::Parse(format!(
                "partition parts must be weakly decreasing, got {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts the given parts and drops zeros. Used to fold compositions
    /// (e.g. tableau weights) into partitions.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    /// Rectangle with `count` parts equal to `size`.
    pub fn rectangle(size: usize, count: usize) -> Self {
        if size == 0 {
            return Self::empty();
        }
        Partition { parts: vec![size; count] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts l(lambda).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Weight |lambda|.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The i-th part, 1-based; 0 beyond the length.
    pub fn part(&self, i: usize) -> usize {
        assert!(i >= 1, "parts are 1-based");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let mut parts = Vec::new();
        let mut col = 1;
        loop {
            let n = self.parts.iter().take_while(|&&p| p >= col).count();
            if n == 0 {
                break;
            }
            parts.push(n);
            col += 1;
        }
        Partition { parts }
    }

    /// Multiplies every part by k.
    pub fn scale(&self, k: usize) -> Partition {
        assert!(k >= 1);
        Partition { parts: self.parts.iter().map(|&p| p * k).collect() }
    }

    /// Componentwise containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        (1..=other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// Cells of the Young diagram, row by row.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.weight());
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 1..=len {
                out.push(Cell::new(r + 1, c));
            }
        }
        out
    }

    /// Beta-set with t beads: {lambda_i + t - i, i = 1..t}, descending.
    fn beta_set(&self, t: usize) -> Vec<usize> {
        assert!(t >= self.len());
        (1..=t).map(|i| self.part(i) + t - i).collect()
    }

    fn from_beta(mut beta: Vec<usize>) -> Partition {
        beta.sort_unstable_by(|a, b| b.cmp(a));
        let t = beta.len();
        let mut parts: Vec<usize> = beta
            .iter()
            .enumerate()
            .map(|(idx, &b)| b - (t - idx - 1))
            .collect();
        parts.retain(|&p| p > 0);
        Partition { parts }
    }

    /// Smallest multiple of k that accommodates all parts.
    fn bead_count(&self, k: usize) -> usize {
        let t = self.len().max(1);
        k * t.div_ceil(k)
    }

    /// The k-core: what remains after removing k-ribbons as long as possible.
    pub fn k_core(&self, k: usize) -> Partition {
        assert!(k >= 1);
        if self.is_empty() {
            return Partition::empty();
        }
        let t = self.bead_count(k);
        let mut counts = vec![0usize; k];
        for b in self.beta_set(t) {
            counts[b % k] += 1;
        }
        let mut beta = Vec::with_capacity(t);
        for (r, &m) in counts.iter().enumerate() {
            for j in 0..m {
                beta.push(r + k * j);
            }
        }
        Partition::from_beta(beta)
    }

    /// Content offsets of the k-quotient components: a ribbon created on
    /// runner r covers contents {k*c + shift_r - k + 1, ..., k*c + shift_r},
    /// where c is the content of the corresponding quotient cell and
    /// shift_r = r + k*m_r - t with m_r the number of beads on runner r.
    /// Invariant under ribbon moves, so computable from the shape or from
    /// its core; all shifts equal (0, 1, ..., k-1) exactly when the k-core
    /// is empty.
    pub fn k_shifts(&self, k: usize) -> Vec<i64> {
        assert!(k >= 1);
        if self.is_empty() {
            return (0..k as i64).collect();
        }
        let t = self.bead_count(k);
        let mut counts = vec![0i64; k];
        for b in self.beta_set(t) {
            counts[b % k] += 1;
        }
        counts
            .iter()
            .enumerate()
            .map(|(r, &m)| r as i64 + (k as i64) * m - t as i64)
            .collect()
    }

    /// The k-quotient, ordered runner 0 first. With t divisible by k this
    /// ordering sends the partition l*lambda (l = l(lambda)) to the tuple of
    /// single rows ((lambda_l), ..., (lambda_1)).
    pub fn k_quotient(&self, k: usize) -> PartitionTuple {
        assert!(k >= 1);
        if self.is_empty() {
            return PartitionTuple::new(vec![Partition::empty(); k]);
        }
        let t = self.bead_count(k);
        let mut runners: Vec<Vec<usize>> = vec![Vec::new(); k];
        for b in self.beta_set(t) {
            runners[b % k].push((b - (b % k)) / k);
        }
        let entries = runners
            .into_iter()
            .map(|positions| Partition::from_beta(positions))
            .collect();
        PartitionTuple::new(entries)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "[]");
        }
        write!(f, "[{}]", self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Parses the textual literal "8,7,6,5,1"; the empty string is the empty
    /// partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad part {tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// An ordered tuple of partitions (quotients, tuple-tableau shapes,
/// configuration chains).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PartitionTuple {
    entries: Vec<Partition>,
}

impl PartitionTuple {
    pub fn new(entries: Vec<Partition>) -> Self {
        assert!(!entries.is_empty(), "partition tuples have at least one entry");
        PartitionTuple { entries }
    }

    pub fn entries(&self) -> &[Partition] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn weight(&self) -> usize {
        self.entries.iter().map(|p| p.weight()).sum()
    }
}

impl fmt::Debug for PartitionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.entries.iter().map(|p| format!("{p:?}")).collect::<Vec<_>>().join(", ")
        )
    }
}

/// Rebuilds a partition from its k-core and k-quotient. Inverse of the
/// core/quotient decomposition; rejects a core that is not actually a k-core.
pub fn from_core_quotient(core: &Partition, quotient: &PartitionTuple, k: usize) -> Result<Partition> {
    assert!(k >= 1);
    if quotient.len() != k {
        return Err(Error::ShapeMismatch(format!(
            "quotient has {} components, expected {k}",
            quotient.len()
        )));
    }
    if &core.k_core(k) != core {
        return Err(Error::NotACore(core.clone(), k));
    }
    let mut t = core.bead_count(k);
    loop {
        let mut counts = vec![0usize; k];
        for b in core.beta_set(t) {
            counts[b % k] += 1;
        }
        if counts
            .iter()
            .zip(quotient.entries())
            .all(|(&m, q)| m >= q.len())
        {
            let mut beta = Vec::with_capacity(t);
            for (r, (&m, q)) in counts.iter().zip(quotient.entries()).enumerate() {
                for j in 1..=m {
                    // position of the j-th bead (1-based from the top) on runner r
                    let pos = q.part(j) + m - j;
                    beta.push(r + k * pos);
                }
            }
            return Ok(Partition::from_beta(beta));
        }
        t += k;
    }
}

/// All partitions of n, largest-first lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: current.clone() });
            return;
        }
        for next in (1..=remaining.min(max)).rev() {
            current.push(next);
            rec(remaining - next, next, current, out);
            current.pop();
        }
    }
    rec(n, n.max(1), &mut current, &mut out);
    out
}

/// All partitions contained in `bound` with the given weight.
pub fn partitions_in(bound: &Partition, weight: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(
        bound: &Partition,
        row: usize,
        remaining: usize,
        max: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition { parts: current.clone() });
            return;
        }
        if row > bound.len() {
            return;
        }
        let cap = max.min(bound.part(row)).min(remaining);
        for next in (1..=cap).rev() {
            current.push(next);
            rec(bound, row + 1, remaining - next, next, current, out);
            current.pop();
        }
    }
    rec(bound, 1, weight, usize::MAX, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[3, 2, 2]).conjugate(), p(&[3, 3, 1]));
        assert_eq!(p(&[1, 1, 1]).conjugate(), p(&[3]));
    }

    #[test]
    fn core_examples() {
        assert_eq!(p(&[6, 6, 6]).k_core(3), Partition::empty());
        assert_eq!(p(&[8, 7, 6, 5, 1]).k_core(3), Partition::empty());
        assert_eq!(p(&[5, 4, 1]).k_core(1), Partition::empty());
        // (3,1) admits no 3-ribbon removal
        assert_eq!(p(&[3, 1]).k_core(3), p(&[3, 1]));
    }

    #[test]
    fn quotient_examples() {
        let q = p(&[6, 6, 6]).k_quotient(3);
        assert_eq!(q.entries(), &[p(&[2]), p(&[2]), p(&[2])]);
        let q = p(&[8, 7, 6, 5, 1]).k_quotient(3);
        assert_eq!(q.entries(), &[p(&[2]), p(&[3, 2]), p(&[2])]);
        let lam = p(&[4, 2, 1]);
        let q = lam.k_quotient(1);
        assert_eq!(q.entries(), &[lam.clone()]);
    }

    #[test]
    fn from_core_quotient_examples() {
        let q = PartitionTuple::new(vec![p(&[2]), p(&[2]), p(&[2])]);
        assert_eq!(from_core_quotient(&Partition::empty(), &q, 3).unwrap(), p(&[6, 6, 6]));
        let q = PartitionTuple::new(vec![p(&[2]), p(&[3, 2]), p(&[2])]);
        assert_eq!(
            from_core_quotient(&Partition::empty(), &q, 3).unwrap(),
            p(&[8, 7, 6, 5, 1])
        );
        let q = PartitionTuple::new(vec![Partition::empty(); 4]);
        assert_eq!(from_core_quotient(&Partition::empty(), &q, 4).unwrap(), Partition::empty());
        // rejecting a non-core
        let q = PartitionTuple::new(vec![Partition::empty(); 2]);
        assert!(matches!(
            from_core_quotient(&p(&[2, 2]), &q, 2),
            Err(Error::NotACore(_, 2))
        ));
    }

    #[test]
    fn scale_examples() {
        assert_eq!(p(&[2, 2, 2]).scale(3), p(&[6, 6, 6]));
        assert_eq!(p(&[2, 1, 1]).scale(3), p(&[6, 3, 3]));
        assert_eq!(Partition::empty().scale(5), Partition::empty());
    }

    #[test]
    fn round_trip_core_quotient() {
        for n in 0..=12 {
            for lam in partitions_of(n) {
                for k in 1..=4 {
                    let core = lam.k_core(k);
                    let quot = lam.k_quotient(k);
                    let back = from_core_quotient(&core, &quot, k).unwrap();
                    assert_eq!(back, lam, "roundtrip failed for {lam:?} k={k}");
                    assert_eq!(
                        lam.weight(),
                        core.weight() + k * quot.weight(),
                        "weight bookkeeping failed for {lam:?} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn scaled_partition_has_empty_core_and_row_quotient() {
        for n in 0..=8 {
            for lam in partitions_of(n) {
                if lam.is_empty() {
                    continue;
                }
                let l = lam.len();
                let scaled = lam.scale(l);
                assert_eq!(scaled.k_core(l), Partition::empty());
                let quot = scaled.k_quotient(l);
                let expected: Vec<Partition> = (0..l)
                    .map(|i| Partition::new(vec![lam.part(l - i)]).unwrap())
                    .collect();
                assert_eq!(quot.entries(), &expected[..], "for {lam:?}");
            }
        }
    }

    #[test]
    fn parse_and_display() {
        let lam: Partition = "8,7,6,5,1".parse().unwrap();
        assert_eq!(lam, p(&[8, 7, 6, 5, 1]));
        assert_eq!(lam.to_string(), "[8,7,6,5,1]");
        let empty: Partition = "".parse().unwrap();
        assert!(empty.is_empty());
        assert!("3,5".parse::<Partition>().is_err());
        assert!("3,0".parse::<Partition>().is_err());
    }

    #[test]
    fn partitions_in_bound() {
        let bound = p(&[2, 2]);
        let got = partitions_in(&bound, 2);
        assert_eq!(got, vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(partitions_in(&bound, 4), vec![p(&[2, 2])]);
    }
}
