//! Tuples of semistandard Young tableaux and the inversion statistic.
//!
//! A component tableau is stored row by row, row 1 (the longest) first;
//! entries weakly increase along rows and strictly increase up columns, i.e.
//! from row r to row r+1. Cells carry coordinates (pos, row, col) and content
//! diag = col - row.
//!
//! A couple (s, t) of cells is an inversion when
//!   1. diag(s) = diag(t) and pos(s) < pos(t), or
//!      diag(s) = diag(t) - 1 and pos(s) > pos(t);
//!   2. row(s) <= row(t);
//!   3. T(t) < T(s) < T(t^up), where t^up is the cell atop t (label infinity
//!      when absent).
//!
//! Diagonal vectors record, per content value, the multiset of labels on that
//! diagonal; tuples sharing all of them form a diagonal class.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Partition, PartitionTuple};
use crate::qpoly::IntPolynomial;

/// A single semistandard Young tableau, rows stored longest-first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Ssyt {
    rows: Vec<Vec<usize>>,
}

impl Ssyt {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = Ssyt { rows };
        t.validate()?;
        Ok(t)
    }

    pub fn empty() -> Self {
        Ssyt { rows: vec![] }
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::ShapeMismatch(msg));
        for w in self.rows.windows(2) {
            if w[0].len() < w[1].len() {
                return bad(format!("row lengths must weakly decrease, got {:?}", self.shape()));
            }
        }
        for row in &self.rows {
            if row.iter().any(|&x| x == 0) {
                return bad("labels are positive".into());
            }
            if !row.windows(2).all(|w| w[0] <= w[1]) {
                return bad(format!("rows must weakly increase: {row:?}"));
            }
        }
        for r in 1..self.rows.len() {
            for c in 0..self.rows[r].len() {
                if self.rows[r][c] <= self.rows[r - 1][c] {
                    return bad(format!(
                        "columns must strictly increase from row {} to row {}",
                        r,
                        r + 1
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::from_unsorted(self.rows.iter().map(|r| r.len()).collect())
    }

    /// Label at (row, col), 1-based; None outside the shape.
    pub fn label(&self, row: usize, col: usize) -> Option<usize> {
        self.rows.get(row - 1)?.get(col - 1).copied()
    }
}

impl fmt::Debug for Ssyt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

/// A tuple of semistandard Young tableaux.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TupleTableau {
    components: Vec<Ssyt>,
}

/// One cell of a tuple, with every coordinate the inversion statistic needs.
#[derive(Clone, Copy, Debug)]
pub struct TupleCell {
    pub pos: usize,
    pub row: usize,
    pub col: usize,
    pub diag: i64,
    pub label: usize,
    /// Label of the cell directly above, i.e. (row + 1, col); None when that
    /// cell is outside the shape (treated as infinity).
    pub above: Option<usize>,
}

impl TupleTableau {
    pub fn new(components: Vec<Ssyt>) -> Result<Self> {
        for c in &components {
            c.validate()?;
        }
        Ok(TupleTableau { components })
    }

    pub fn components(&self) -> &[Ssyt] {
        &self.components
    }

    pub fn shape(&self) -> PartitionTuple {
        PartitionTuple::new(self.components.iter().map(|c| c.shape()).collect())
    }

    /// Weight composition: entry i counts the label i+1 across all components.
    pub fn weight(&self) -> Vec<usize> {
        let mut max = 0;
        for c in &self.components {
            for row in c.rows() {
                for &x in row {
                    max = max.max(x);
                }
            }
        }
        let mut weight = vec![0; max];
        for c in &self.components {
            for row in c.rows() {
                for &x in row {
                    weight[x - 1] += 1;
                }
            }
        }
        weight
    }

    pub fn cells(&self) -> Vec<TupleCell> {
        let mut out = Vec::new();
        for (i, comp) in self.components.iter().enumerate() {
            for (r, row) in comp.rows().iter().enumerate() {
                for (c, &label) in row.iter().enumerate() {
                    out.push(TupleCell {
                        pos: i + 1,
                        row: r + 1,
                        col: c + 1,
                        diag: (c + 1) as i64 - (r + 1) as i64,
                        label,
                        above: comp.label(r + 2, c + 1),
                    });
                }
            }
        }
        out
    }

    /// True when every component is a single row and the row lengths weakly
    /// increase along the tuple.
    pub fn is_increasing_rows(&self) -> bool {
        let mut last = 0;
        for c in &self.components {
            if c.rows().len() > 1 {
                return false;
            }
            let len = c.rows().first().map_or(0, |r| r.len());
            if len < last {
                return false;
            }
            last = len;
        }
        true
    }
}

impl fmt::Debug for TupleTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.components)
    }
}

/// Number of inversion couples of the tuple, with the default component
/// offsets (0, 1, ..., k-1). This is the literal statistic: condition 1 with
/// these offsets says exactly "same content with pos(s) < pos(t), or content
/// of s one less with pos(s) > pos(t)".
pub fn inversions(tuple: &TupleTableau) -> usize {
    let shifts: Vec<i64> = (0..tuple.components().len() as i64).collect();
    inversions_with_shifts(tuple, &shifts)
}

/// Inversions with explicit per-component content offsets: writing
/// d(s) = k * diag(s) + shift(pos(s)), the couple (s, t) is an inversion when
/// 0 < d(t) - d(s) < k, row(s) <= row(t), and T(t) < T(s) < T(t^up).
///
/// The offsets matter for tuples arising as quotients of shapes with a
/// nonempty k-core (see `Partition::k_shifts`); for empty cores they reduce
/// to (0, ..., k-1) and the literal statistic.
pub fn inversions_with_shifts(tuple: &TupleTableau, shifts: &[i64]) -> usize {
    let k = tuple.components().len() as i64;
    assert_eq!(shifts.len() as i64, k, "one offset per component");
    let cells = tuple.cells();
    let scaled: Vec<i64> = cells.iter().map(|c| k * c.diag + shifts[c.pos - 1]).collect();
    let mut count = 0;
    for (s, &ds) in cells.iter().zip(&scaled) {
        for (t, &dt) in cells.iter().zip(&scaled) {
            if !(0 < dt - ds && dt - ds < k) || s.row > t.row {
                continue;
            }
            if t.label < s.label && t.above.map_or(true, |up| s.label < up) {
                count += 1;
            }
        }
    }
    count
}

/// Enumerates all tuples of the given shapes and weight, by distributing the
/// labels 1, 2, ... as horizontal strips across the components.
pub fn enumerate_tuples(shapes: &[Partition], weight: &[usize]) -> Result<Vec<TupleTableau>> {
    let total: usize = shapes.iter().map(|s| s.weight()).sum();
    let need: usize = weight.iter().sum();
    if total != need {
        return Err(Error::WeightMismatch { expected: total, got: need });
    }
    let mut out = Vec::new();
    let state: Vec<Partition> = vec![Partition::empty(); shapes.len()];
    let mut fillings: Vec<Vec<Vec<usize>>> = shapes
        .iter()
        .map(|s| s.parts().iter().map(|&len| vec![0usize; len]).collect())
        .collect();
    distribute(shapes, weight, 0, &state, &mut fillings, &mut out);
    Ok(out)
}

fn distribute(
    shapes: &[Partition],
    weight: &[usize],
    label_idx: usize,
    state: &[Partition],
    fillings: &mut Vec<Vec<Vec<usize>>>,
    out: &mut Vec<TupleTableau>,
) {
    if label_idx == weight.len() {
        if state.iter().zip(shapes).all(|(s, target)| s == target) {
            let components = fillings
                .iter()
                .map(|rows| Ssyt { rows: rows.clone() })
                .collect();
            out.push(TupleTableau { components });
        }
        return;
    }
    let label = label_idx + 1;
    let count = weight[label_idx];
    // split `count` cells among the components, adding a horizontal strip in each
    fn split(
        shapes: &[Partition],
        weight: &[usize],
        label_idx: usize,
        comp: usize,
        remaining: usize,
        state: &mut Vec<Partition>,
        fillings: &mut Vec<Vec<Vec<usize>>>,
        out: &mut Vec<TupleTableau>,
    ) {
        if comp == shapes.len() {
            if remaining == 0 {
                let snapshot = state.clone();
                distribute(shapes, weight, label_idx + 1, &snapshot, fillings, out);
            }
            return;
        }
        let current = state[comp].clone();
        for take in 0..=remaining {
            for next in horizontal_strip_extensions(&current, &shapes[comp], take) {
                // write the new cells
                let label = label_idx + 1;
                for r in 1..=next.len() {
                    for c in current.part(r) + 1..=next.part(r) {
                        fillings[comp][r - 1][c - 1] = label;
                    }
                }
                state[comp] = next.clone();
                split(shapes, weight, label_idx, comp + 1, remaining - take, state, fillings, out);
                for r in 1..=next.len() {
                    for c in current.part(r) + 1..=next.part(r) {
                        fillings[comp][r - 1][c - 1] = 0;
                    }
                }
                state[comp] = current.clone();
            }
        }
    }
    let mut state = state.to_vec();
    let _ = label;
    split(shapes, weight, label_idx, 0, count, &mut state, fillings, out);
}

/// All partitions `next` with current ⊆ next ⊆ bound, |next/current| = take,
/// and next/current a horizontal strip (at most one new cell per column).
pub fn horizontal_strip_extensions(
    current: &Partition,
    bound: &Partition,
    take: usize,
) -> Vec<Partition> {
    let mut out = Vec::new();
    let rows = bound.len();
    let mut parts: Vec<usize> = (1..=rows).map(|r| current.part(r)).collect();
    fn rec(
        row: usize,
        rows: usize,
        remaining: usize,
        current: &Partition,
        bound: &Partition,
        parts: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if row > rows {
            if remaining == 0 {
                out.push(Partition::from_unsorted(parts.clone()));
            }
            return;
        }
        // horizontal strip: next.part(row) <= current.part(row - 1)
        let low = current.part(row);
        let mut high = bound.part(row).min(low + remaining);
        if row > 1 {
            high = high.min(current.part(row - 1));
            high = high.min(parts[row - 2]); // stay weakly decreasing
        }
        for v in low..=high {
            parts[row - 1] = v;
            rec(row + 1, rows, remaining - (v - low), current, bound, parts, out);
        }
        parts[row - 1] = current.part(row);
    }
    rec(1, rows, take, current, bound, &mut parts, &mut out);
    out
}

/// Generating polynomial of the inversion statistic over all tuples of the
/// given shapes and weight.
pub fn inversion_polynomial(shapes: &[Partition], weight: &[usize]) -> Result<IntPolynomial> {
    let tuples = enumerate_tuples(shapes, weight)?;
    let mut poly = IntPolynomial::zero();
    for t in &tuples {
        poly.add_term(&num_bigint::BigInt::from(1), inversions(t));
    }
    Ok(poly)
}

/// The per-diagonal label multisets of a tuple, keyed by content value.
/// Multisets are kept sorted, so the vector is canonical and comparable.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct DiagonalVector {
    diagonals: BTreeMap<i64, Vec<usize>>,
}

impl DiagonalVector {
    /// Builds a diagonal vector from explicit label multisets on diagonals
    /// 0, 1, 2, ... (the single-row situation).
    pub fn from_row_diagonals(diagonals: Vec<Vec<usize>>) -> Self {
        let map = diagonals
            .into_iter()
            .enumerate()
            .filter(|(_, labels)| !labels.is_empty())
            .map(|(i, mut labels)| {
                labels.sort_unstable();
                (i as i64, labels)
            })
            .collect();
        DiagonalVector { diagonals: map }
    }

    pub fn diagonals(&self) -> &BTreeMap<i64, Vec<usize>> {
        &self.diagonals
    }

    /// Labels on diagonal d (sorted), empty when the diagonal is unused.
    pub fn labels_at(&self, d: i64) -> &[usize] {
        self.diagonals.get(&d).map_or(&[], |v| v.as_slice())
    }

    /// Total number of cells across all diagonals.
    pub fn size(&self) -> usize {
        self.diagonals.values().map(|v| v.len()).sum()
    }

    /// The weight partition: multiplicities of each label, sorted.
    pub fn weight(&self) -> Vec<usize> {
        let max = self.diagonals.values().flatten().copied().max().unwrap_or(0);
        let mut weight = vec![0usize; max];
        for labels in self.diagonals.values() {
            for &l in labels {
                weight[l - 1] += 1;
            }
        }
        weight
    }
}

/// The diagonal vector of a tuple.
pub fn diagonal_vector(tuple: &TupleTableau) -> DiagonalVector {
    let mut map: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for cell in tuple.cells() {
        map.entry(cell.diag).or_default().push(cell.label);
    }
    for labels in map.values_mut() {
        labels.sort_unstable();
    }
    DiagonalVector { diagonals: map }
}

/// Diagonal vector with per-component content offsets: cells are grouped by
/// floor((k * diag + shift) / k). With the default offsets (0, ..., k-1) this
/// is the plain diagonal vector; for quotient tuples of shapes with a
/// nonempty k-core the offsets realign the components (see
/// `Partition::k_shifts`).
pub fn diagonal_vector_with_shifts(tuple: &TupleTableau, shifts: &[i64]) -> DiagonalVector {
    let k = tuple.components().len() as i64;
    assert_eq!(shifts.len() as i64, k, "one offset per component");
    let mut map: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for cell in tuple.cells() {
        let block = (k * cell.diag + shifts[cell.pos - 1]).div_euclid(k);
        map.entry(block).or_default().push(cell.label);
    }
    for labels in map.values_mut() {
        labels.sort_unstable();
    }
    DiagonalVector { diagonals: map }
}

/// A diagonal class: all tuples of fixed shape and weight sharing a diagonal
/// vector.
#[derive(Clone, Debug)]
pub struct DiagonalClass {
    pub vector: DiagonalVector,
    pub members: Vec<TupleTableau>,
}

impl DiagonalClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Partitions the tuple enumeration into diagonal classes.
pub fn diagonal_classes(shapes: &[Partition], weight: &[usize]) -> Result<Vec<DiagonalClass>> {
    let tuples = enumerate_tuples(shapes, weight)?;
    let mut map: BTreeMap<DiagonalVector, Vec<TupleTableau>> = BTreeMap::new();
    for t in tuples {
        map.entry(diagonal_vector(&t)).or_default().push(t);
    }
    Ok(map
        .into_iter()
        .map(|(vector, members)| DiagonalClass { vector, members })
        .collect())
}

/// The inversion polynomial restricted to one diagonal class.
pub fn restricted_inversion_polynomial(class: &DiagonalClass) -> IntPolynomial {
    let mut poly = IntPolynomial::zero();
    for t in &class.members {
        poly.add_term(&num_bigint::BigInt::from(1), inversions(t));
    }
    poly
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn row(labels: &[usize]) -> Ssyt {
        Ssyt::new(vec![labels.to_vec()]).unwrap()
    }

    fn tuple_of_rows(rows: &[&[usize]]) -> TupleTableau {
        TupleTableau::new(rows.iter().map(|r| row(r)).collect()).unwrap()
    }

    /// Independent oracle: every filling of the shapes, filtered by the
    /// semistandard conditions and the weight.
    fn brute_force_tuples(shapes: &[Partition], weight: &[usize]) -> Vec<TupleTableau> {
        let nlabels = weight.len();
        let mut cells = Vec::new();
        for (i, s) in shapes.iter().enumerate() {
            for c in s.cells() {
                cells.push((i, c.row, c.col));
            }
        }
        let mut out = Vec::new();
        let mut labels = vec![1usize; cells.len()];
        'outer: loop {
            // build and validate
            let mut rows: Vec<Vec<Vec<usize>>> = shapes
                .iter()
                .map(|s| s.parts().iter().map(|&len| vec![0; len]).collect())
                .collect();
            for (idx, &(i, r, c)) in cells.iter().enumerate() {
                rows[i][r - 1][c - 1] = labels[idx];
            }
            let mut weight_got = vec![0usize; nlabels];
            for &l in &labels {
                weight_got[l - 1] += 1;
            }
            if weight_got == weight {
                let comps: Result<Vec<Ssyt>> =
                    rows.into_iter().map(Ssyt::new).collect();
                if let Ok(comps) = comps {
                    out.push(TupleTableau { components: comps });
                }
            }
            // next assignment
            for i in 0..labels.len() {
                if labels[i] < nlabels {
                    labels[i] += 1;
                    continue 'outer;
                }
                labels[i] = 1;
            }
            break;
        }
        out.sort();
        out
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let cases: Vec<(Vec<Partition>, Vec<usize>)> = vec![
            (vec![p(&[1]), p(&[1])], vec![1, 1]),
            (vec![p(&[2]), p(&[2])], vec![2, 2]),
            (vec![p(&[2]), p(&[2])], vec![1, 1, 1, 1]),
            (vec![p(&[2, 1])], vec![1, 1, 1]),
            (vec![p(&[2, 2]), p(&[1])], vec![2, 2, 1]),
            (vec![p(&[3, 1]), p(&[1, 1])], vec![2, 2, 1, 1]),
        ];
        for (shapes, weight) in cases {
            let mut got = enumerate_tuples(&shapes, &weight).unwrap();
            got.sort();
            let want = brute_force_tuples(&shapes, &weight);
            assert_eq!(got, want, "shapes {shapes:?} weight {weight:?}");
        }
    }

    #[test]
    fn single_row_tuple_counts() {
        // one tuple when a single row carries a single label
        let got = enumerate_tuples(&[p(&[4])], &[4]).unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(inversions(&got[0]), 0);
        // ((1),(1)) with weight (1,1): two tuples, inversions 0 and 1
        let got = enumerate_tuples(&[p(&[1]), p(&[1])], &[1, 1]).unwrap();
        assert_eq!(got.len(), 2);
        let poly = inversion_polynomial(&[p(&[1]), p(&[1])], &[1, 1]).unwrap();
        assert_eq!(poly, IntPolynomial::from_i64_coeffs(&[1, 1]));
    }

    #[test]
    fn inversion_polynomial_small_goldens() {
        // hand-checked values for the pair of rows ((2),(2))
        let shapes = vec![p(&[2]), p(&[2])];
        let cases: Vec<(Vec<usize>, Vec<i64>)> = vec![
            (vec![4], vec![1]),
            (vec![3, 1], vec![1, 1]),
            (vec![2, 2], vec![1, 1, 1]),
            (vec![2, 1, 1], vec![1, 2, 1]),
            (vec![1, 1, 1, 1], vec![1, 3, 2]),
        ];
        for (weight, coeffs) in cases {
            let poly = inversion_polynomial(&shapes, &weight).unwrap();
            assert_eq!(poly, IntPolynomial::from_i64_coeffs(&coeffs), "weight {weight:?}");
        }
        // hand-checked values for the pair of columns ((1,1),(1,1))
        let shapes = vec![p(&[1, 1]), p(&[1, 1])];
        let cases: Vec<(Vec<usize>, Vec<i64>)> = vec![
            (vec![2, 2], vec![1]),
            (vec![2, 1, 1], vec![1, 1]),
            (vec![1, 1, 1, 1], vec![2, 3, 1]),
        ];
        for (weight, coeffs) in cases {
            let poly = inversion_polynomial(&shapes, &weight).unwrap();
            assert_eq!(poly, IntPolynomial::from_i64_coeffs(&coeffs), "weight {weight:?}");
        }
    }

    #[test]
    fn diagonal_vector_example() {
        let t = tuple_of_rows(&[&[1, 4], &[1, 2], &[1, 2, 3, 3]]);
        let d = diagonal_vector(&t);
        assert_eq!(d.labels_at(0), &[1, 1, 1]);
        assert_eq!(d.labels_at(1), &[2, 2, 4]);
        assert_eq!(d.labels_at(2), &[3]);
        assert_eq!(d.labels_at(3), &[3]);
        // trivial single tuple
        let t = tuple_of_rows(&[&[1, 1, 1]]);
        let d = diagonal_vector(&t);
        assert_eq!(d.diagonals().len(), 3);
        assert!(d.diagonals().values().all(|v| v == &[1]));
        // swapping equal-diagonal cells across components preserves the vector
        let t2 = tuple_of_rows(&[&[1, 2], &[1, 4], &[1, 2, 3, 3]]);
        assert_eq!(diagonal_vector(&t2), d_of(&[&[1, 4], &[1, 2], &[1, 2, 3, 3]]));
    }

    fn d_of(rows: &[&[usize]]) -> DiagonalVector {
        diagonal_vector(&tuple_of_rows(rows))
    }

    #[test]
    fn twelve_element_class() {
        // the 12-element diagonal class of Tab_{((2),(2),(4)), (3,2,2,1)}
        let shapes = vec![p(&[2]), p(&[2]), p(&[4])];
        let weight = vec![3, 2, 2, 1];
        let classes = diagonal_classes(&shapes, &weight).unwrap();
        let twelve: Vec<_> = classes.iter().filter(|c| c.len() == 12).collect();
        assert_eq!(twelve.len(), 1);
        let class = twelve[0];
        assert_eq!(
            class.vector,
            DiagonalVector::from_row_diagonals(vec![
                vec![1, 1, 2],
                vec![1, 2, 3],
                vec![3],
                vec![4]
            ])
        );
        let poly = restricted_inversion_polynomial(class);
        assert_eq!(poly, IntPolynomial::from_i64_coeffs(&[0, 1, 3, 4, 3, 1]));
        // q(q+1)^2(q^2+q+1), so the lowest exponent is 1
        let min_inv = class.members.iter().map(inversions).min().unwrap();
        assert_eq!(min_inv, 1);
        // the displayed tuple's own class has two members and polynomial q+q^2
        let shown = tuple_of_rows(&[&[1, 4], &[1, 2], &[1, 2, 3, 3]]);
        let own = classes
            .iter()
            .find(|c| c.vector == diagonal_vector(&shown))
            .unwrap();
        assert_eq!(own.len(), 2);
        assert_eq!(
            restricted_inversion_polynomial(own),
            IntPolynomial::from_i64_coeffs(&[0, 1, 1])
        );
        // classes partition the enumeration
        let total: usize = classes.iter().map(|c| c.len()).sum();
        assert_eq!(total, enumerate_tuples(&shapes, &weight).unwrap().len());
        let mut sum = IntPolynomial::zero();
        for c in &classes {
            sum += &restricted_inversion_polynomial(c);
        }
        assert_eq!(sum, inversion_polynomial(&shapes, &weight).unwrap());
    }

    #[test]
    fn singleton_classes_iff_divisible() {
        // k = 3 copies of (2): weight divisible by 3 gives a unique singleton
        let shapes = vec![p(&[2]); 3];
        let classes = diagonal_classes(&shapes, &[3, 3]).unwrap();
        let singletons: Vec<_> = classes.iter().filter(|c| c.len() == 1).collect();
        assert_eq!(singletons.len(), 1);
        assert_eq!(inversions(&singletons[0].members[0]), 0);
        assert_eq!(
            restricted_inversion_polynomial(singletons[0]),
            IntPolynomial::one()
        );
        // weight with a part not divisible by 3: no singleton classes
        for weight in [vec![4, 2], vec![2, 2, 2], vec![5, 1]] {
            let classes = diagonal_classes(&shapes, &weight).unwrap();
            assert!(
                classes.iter().all(|c| c.len() >= 2),
                "weight {weight:?} should have no singleton class"
            );
        }
    }

    #[test]
    fn root_of_unity_vanishing_on_classes() {
        let k = 3;
        let shapes = vec![p(&[2]); k];
        for weight in crate::partition::partitions_of(2 * k) {
            let classes = diagonal_classes(&shapes, weight.parts()).unwrap();
            for class in &classes {
                if class.len() >= 2 {
                    let poly = restricted_inversion_polynomial(class);
                    let v = qpoly::eval_at_primitive_root(&poly, k);
                    assert!(v.is_zero(), "weight {weight:?} class {:?}", class.vector);
                }
            }
        }
    }

    #[test]
    fn weight_mismatch_is_an_error() {
        assert!(matches!(
            enumerate_tuples(&[p(&[2])], &[1]),
            Err(Error::WeightMismatch { .. })
        ));
    }
}
