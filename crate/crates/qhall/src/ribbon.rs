//! k-ribbon tableaux: enumeration, spin and cospin, and the Stanton-White
//! correspondence with tuples of semistandard Young tableaux.
//!
//! A k-ribbon is a connected skew set of k cells without a 2x2 block; its
//! cells carry consecutive contents. The head is the end of smallest content
//! and the tail the end of largest content. A k-ribbon tableau of shape
//! lambda and weight mu is a labelled tiling of lambda / core_k(lambda) such
//! that
//!   1. the head of a ribbon labelled i is not right-adjacent to a ribbon
//!      labelled j > i;
//!   2. the tail of a ribbon labelled i is not directly above a ribbon
//!      labelled j >= i (above meaning the (row - 1, col) neighbour of the
//!      tail, rows counted from the longest row).
//!
//! Equivalently, the cells labelled at most j always form a partition and
//! each label adds a horizontal ribbon strip: a skew shape with a (unique)
//! tiling in which no ribbon's tail sits on top of the strip itself.
//! Enumeration runs over these chains; the rules above are re-checked by an
//! independent validator in the tests.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{from_core_quotient, Cell, Partition, PartitionTuple};
use crate::qpoly::IntPolynomial;
use crate::tuples::{Ssyt, TupleTableau};

/// A labelled k-ribbon; cells are kept sorted by increasing content.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Ribbon {
    pub label: usize,
    cells: Vec<Cell>,
}

impl Ribbon {
    pub fn new(label: usize, mut cells: Vec<Cell>) -> Self {
        cells.sort_by_key(|c| c.diag());
        Ribbon { label, cells }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// Northwest end: the cell of smallest content.
    pub fn head(&self) -> Cell {
        self.cells[0]
    }

    /// Southeast end: the cell of largest content.
    pub fn tail(&self) -> Cell {
        *self.cells.last().unwrap()
    }

    /// Number of rows the ribbon meets.
    pub fn height(&self) -> usize {
        self.head().row - self.tail().row + 1
    }

    /// Twice the spin: h(R) - 1.
    pub fn twice_spin(&self) -> usize {
        self.height() - 1
    }
}

/// Spin stored doubled, so half-integral values stay exact.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct SpinValue {
    twice: usize,
}

impl SpinValue {
    pub fn from_twice(twice: usize) -> Self {
        SpinValue { twice }
    }

    pub fn twice(&self) -> usize {
        self.twice
    }
}

impl fmt::Display for SpinValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// A k-ribbon tableau: a labelled ribbon tiling of shape / core.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct RibbonTableau {
    #[serde(rename = "shape")]
    outer: Partition,
    k: usize,
    #[serde(skip)]
    core: Partition,
    ribbons: Vec<Ribbon>,
}

impl RibbonTableau {
    /// Assembles and validates a tableau from its parts.
    pub fn from_parts(outer: Partition, k: usize, ribbons: Vec<Ribbon>) -> Result<Self> {
        let mut t = RibbonTableau { core: outer.k_core(k), outer, k, ribbons };
        t.canonicalize();
        t.validate()?;
        Ok(t)
    }

    fn canonicalize(&mut self) {
        self.ribbons.sort_by_key(|r| (r.label, r.head().diag(), r.head().row));
    }

    /// Restores the derived core after deserialization and validates.
    pub fn rehydrate(mut self) -> Result<Self> {
        self.core = self.outer.k_core(self.k);
        self.canonicalize();
        self.validate()?;
        Ok(self)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn core(&self) -> &Partition {
        &self.core
    }

    pub fn ribbons(&self) -> &[Ribbon] {
        &self.ribbons
    }

    /// Weight composition: entry i counts ribbons labelled i+1.
    pub fn weight(&self) -> Vec<usize> {
        let max = self.ribbons.iter().map(|r| r.label).max().unwrap_or(0);
        let mut weight = vec![0usize; max];
        for r in &self.ribbons {
            weight[r.label - 1] += 1;
        }
        weight
    }

    pub fn twice_spin(&self) -> usize {
        self.ribbons.iter().map(|r| r.twice_spin()).sum()
    }

    /// The chain of partitions core = nu_0 <= nu_1 <= ... whose j-th step is
    /// the cells labelled j.
    pub fn chain(&self) -> Vec<Partition> {
        let m = self.weight().len();
        let mut cells: BTreeSet<Cell> = self.core.cells().into_iter().collect();
        let mut out = vec![self.core.clone()];
        for j in 1..=m {
            for r in self.ribbons.iter().filter(|r| r.label == j) {
                cells.extend(r.cells().iter().copied());
            }
            out.push(partition_from_cells(&cells).expect("tableau chain is a partition"));
        }
        out
    }

    /// Independent re-validation: exact disjoint tiling of outer/core, every
    /// ribbon connected with consecutive contents and 2x2-free, and the two
    /// head/tail adjacency rules.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::ShapeMismatch(msg));
        let mut covered: BTreeMap<Cell, usize> = BTreeMap::new();
        for r in &self.ribbons {
            if r.label == 0 {
                return fail("ribbon labels are positive".into());
            }
            if r.cells.len() != self.k {
                return fail(format!("ribbon has {} cells, expected {}", r.cells.len(), self.k));
            }
            for w in r.cells.windows(2) {
                let ok_step = (w[1].row == w[0].row && w[1].col == w[0].col + 1)
                    || (w[1].row + 1 == w[0].row && w[1].col == w[0].col);
                if !ok_step {
                    return fail(format!("ribbon cells not a connected strip: {:?}", r.cells));
                }
            }
            for c in &r.cells {
                let square = [
                    Cell::new(c.row, c.col),
                    Cell::new(c.row, c.col + 1),
                    Cell::new(c.row + 1, c.col),
                    Cell::new(c.row + 1, c.col + 1),
                ];
                if square.iter().all(|x| r.cells.contains(x)) {
                    return fail(format!("ribbon contains a 2x2 block: {:?}", r.cells));
                }
            }
            for c in &r.cells {
                if covered.insert(*c, r.label).is_some() {
                    return fail(format!("overlapping ribbons at {c:?}"));
                }
            }
        }
        let skew: BTreeSet<Cell> = skew_cells(&self.outer, &self.core);
        let covered_cells: BTreeSet<Cell> = covered.keys().copied().collect();
        if covered_cells != skew {
            return fail("ribbons do not tile shape/core exactly".into());
        }
        for r in &self.ribbons {
            let head = r.head();
            if head.col >= 2 {
                if let Some(&j) = covered.get(&Cell::new(head.row, head.col - 1)) {
                    if j > r.label {
                        return fail(format!(
                            "head of a ribbon labelled {} right of label {}",
                            r.label, j
                        ));
                    }
                }
            }
            let tail = r.tail();
            if tail.row >= 2 {
                if let Some(&j) = covered.get(&Cell::new(tail.row - 1, tail.col)) {
                    if j >= r.label {
                        return fail(format!(
                            "tail of a ribbon labelled {} on top of label {}",
                            r.label, j
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Spin of a tableau: half the sum of (height - 1) over its ribbons.
pub fn spin(t: &RibbonTableau) -> SpinValue {
    SpinValue::from_twice(t.twice_spin())
}

/// Cospin of a tableau: the maximal spin of its (shape, weight) class minus
/// its own spin. Enumerates the class, so prefer the `*_class` helpers when
/// processing many tableaux of one class.
pub fn cospin(t: &RibbonTableau) -> Result<usize> {
    let class = enumerate_ribbon_tableaux(&t.outer, &t.weight(), t.k)?;
    let max = max_twice_spin(&class).ok_or(Error::EmptyClass)?;
    Ok(cospin_from_max(t, max))
}

/// Maximal doubled spin over a class; None when the class is empty.
pub fn max_twice_spin(class: &[RibbonTableau]) -> Option<usize> {
    class.iter().map(|t| t.twice_spin()).max()
}

/// Cospin given the class maximum. The difference of doubled spins is always
/// even.
pub fn cospin_from_max(t: &RibbonTableau, max_twice: usize) -> usize {
    let diff = max_twice - t.twice_spin();
    assert!(diff % 2 == 0, "spin parity must be constant on a class");
    diff / 2
}

/// Enumerates all k-ribbon tableaux of the given shape and weight.
pub fn enumerate_ribbon_tableaux(
    outer: &Partition,
    weight: &[usize],
    k: usize,
) -> Result<Vec<RibbonTableau>> {
    assert!(k >= 1);
    let core = outer.k_core(k);
    let needed = outer.weight() - core.weight();
    let total: usize = weight.iter().sum();
    if k * total != needed {
        return Err(Error::WeightMismatch { expected: needed, got: k * total });
    }
    let mut out = Vec::new();
    let mut strip_cache: HashMap<(Partition, usize), Vec<(Partition, Vec<Vec<Cell>>)>> =
        HashMap::new();
    let mut acc: Vec<Ribbon> = Vec::new();
    search(&core, outer, weight, 0, k, &mut acc, &mut strip_cache, &mut out);
    Ok(out)
}

fn search(
    current: &Partition,
    outer: &Partition,
    weight: &[usize],
    label_idx: usize,
    k: usize,
    acc: &mut Vec<Ribbon>,
    strip_cache: &mut HashMap<(Partition, usize), Vec<(Partition, Vec<Vec<Cell>>)>>,
    out: &mut Vec<RibbonTableau>,
) {
    if label_idx == weight.len() {
        if current == outer {
            let mut t = RibbonTableau {
                outer: outer.clone(),
                k,
                core: acc_core(current, acc, outer, k),
                ribbons: acc.clone(),
            };
            t.canonicalize();
            out.push(t);
        }
        return;
    }
    let count = weight[label_idx];
    let key = (current.clone(), count);
    if !strip_cache.contains_key(&key) {
        let mut options = Vec::new();
        for next in partitions_between(current, outer, k * count) {
            let theta = skew_cells(&next, current);
            if let Some(tiling) = strip_tiling(&theta, k) {
                options.push((next, tiling));
            }
        }
        strip_cache.insert(key.clone(), options);
    }
    let options = strip_cache[&key].clone();
    for (next, tiling) in options {
        let start = acc.len();
        for cells in &tiling {
            acc.push(Ribbon::new(label_idx + 1, cells.clone()));
        }
        search(&next, outer, weight, label_idx + 1, k, acc, strip_cache, out);
        acc.truncate(start);
    }
}

fn acc_core(_current: &Partition, _acc: &[Ribbon], outer: &Partition, k: usize) -> Partition {
    outer.k_core(k)
}

/// Cells of kappa / nu.
pub fn skew_cells(kappa: &Partition, nu: &Partition) -> BTreeSet<Cell> {
    let mut out = BTreeSet::new();
    for r in 1..=kappa.len() {
        for c in nu.part(r) + 1..=kappa.part(r) {
            out.insert(Cell::new(r, c));
        }
    }
    out
}

/// Rebuilds a partition from a set of cells; None if the set is not a Young
/// diagram.
pub fn partition_from_cells(cells: &BTreeSet<Cell>) -> Option<Partition> {
    let rows = cells.iter().map(|c| c.row).max().unwrap_or(0);
    let mut parts = Vec::with_capacity(rows);
    for r in 1..=rows {
        let len = cells.iter().filter(|c| c.row == r).count();
        for c in 1..=len {
            if !cells.contains(&Cell::new(r, c)) {
                return None;
            }
        }
        parts.push(len);
    }
    if cells.len() != parts.iter().sum::<usize>() {
        return None;
    }
    Partition::new(parts.into_iter().filter(|&p| p > 0).collect()).ok().filter(|p| {
        // rows must be contiguous from row 1
        p.len() == rows
    })
}

/// Partitions nu <= kappa <= bound with |kappa| = |nu| + add.
fn partitions_between(lower: &Partition, upper: &Partition, add: usize) -> Vec<Partition> {
    let rows = upper.len();
    let mut parts: Vec<usize> = (1..=rows).map(|r| lower.part(r)).collect();
    let mut out = Vec::new();
    fn rec(
        row: usize,
        rows: usize,
        remaining: usize,
        lower: &Partition,
        upper: &Partition,
        parts: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if row > rows {
            if remaining == 0 {
                out.push(Partition::from_unsorted(parts.clone()));
            }
            return;
        }
        let low = lower.part(row);
        let mut high = upper.part(row).min(low + remaining);
        if row > 1 {
            high = high.min(parts[row - 2]);
        }
        for v in low..=high {
            parts[row - 1] = v;
            rec(row + 1, rows, remaining - (v - low), lower, upper, parts, out);
        }
        parts[row - 1] = lower.part(row);
    }
    if add == 0 {
        return vec![lower.clone()];
    }
    rec(1, rows, add, lower, upper, &mut parts, &mut out);
    out
}

/// Tiles a skew cell set into k-ribbons such that no ribbon's tail has the
/// (row - 1, col) neighbour inside the set; this is the unique same-label
/// tiling of a horizontal ribbon strip. Returns the first tiling found.
pub fn strip_tiling(theta: &BTreeSet<Cell>, k: usize) -> Option<Vec<Vec<Cell>>> {
    let mut tilings = tile(theta, k, true);
    tilings.pop()
}

/// All tilings into k-ribbons; with `strip_rule` set, only those where every
/// tail's (row - 1, col) neighbour avoids the whole set. Used by tests to
/// check uniqueness of strip tilings and as a brute-force tiling oracle.
pub fn tile(theta: &BTreeSet<Cell>, k: usize, strip_rule: bool) -> Vec<Vec<Vec<Cell>>> {
    let mut out = Vec::new();
    if theta.len() % k != 0 {
        return out;
    }
    let mut remaining = theta.clone();
    let mut acc = Vec::new();
    peel(&mut remaining, theta, k, strip_rule, &mut acc, &mut out);
    out
}

fn peel(
    remaining: &mut BTreeSet<Cell>,
    full: &BTreeSet<Cell>,
    k: usize,
    strip_rule: bool,
    acc: &mut Vec<Vec<Cell>>,
    out: &mut Vec<Vec<Vec<Cell>>>,
) {
    if remaining.is_empty() {
        out.push(acc.clone());
        return;
    }
    // Any cell of maximal content is the tail of its ribbon in every tiling.
    let tail = *remaining.iter().max_by_key(|c| (c.diag(), c.row)).unwrap();
    if strip_rule && tail.row >= 2 && full.contains(&Cell::new(tail.row - 1, tail.col)) {
        return;
    }
    let mut path = vec![tail];
    extend_path(&mut path, remaining, full, k, strip_rule, acc, out);
}

fn extend_path(
    path: &mut Vec<Cell>,
    remaining: &mut BTreeSet<Cell>,
    full: &BTreeSet<Cell>,
    k: usize,
    strip_rule: bool,
    acc: &mut Vec<Vec<Cell>>,
    out: &mut Vec<Vec<Vec<Cell>>>,
) {
    if path.len() == k {
        let ribbon: Vec<Cell> = path.iter().rev().copied().collect();
        for c in &ribbon {
            remaining.remove(c);
        }
        acc.push(ribbon.clone());
        peel(remaining, full, k, strip_rule, acc, out);
        acc.pop();
        for c in &ribbon {
            remaining.insert(*c);
        }
        return;
    }
    let last = *path.last().unwrap();
    // predecessors along the ribbon: content decreases by one
    let mut candidates = Vec::new();
    if last.col >= 2 {
        candidates.push(Cell::new(last.row, last.col - 1));
    }
    candidates.push(Cell::new(last.row + 1, last.col));
    for c in candidates {
        if remaining.contains(&c) && !path.contains(&c) {
            path.push(c);
            extend_path(path, remaining, full, k, strip_rule, acc, out);
            path.pop();
        }
    }
}

/// Generating polynomial of cospin over all k-ribbon tableaux of the given
/// shape and weight; the zero polynomial when the class is empty.
pub fn cospin_polynomial(outer: &Partition, weight: &[usize], k: usize) -> Result<IntPolynomial> {
    let class = enumerate_ribbon_tableaux(outer, weight, k)?;
    Ok(cospin_polynomial_of_class(&class))
}

/// Cospin polynomial of an explicit class (max taken over the given set).
pub fn cospin_polynomial_of_class(class: &[RibbonTableau]) -> IntPolynomial {
    let Some(max) = max_twice_spin(class) else {
        return IntPolynomial::zero();
    };
    let mut poly = IntPolynomial::zero();
    for t in class {
        poly.add_term(&BigInt::from(1), cospin_from_max(t, max));
    }
    poly
}

/// The Stanton-White correspondence: a k-ribbon tableau of shape lambda maps
/// to a k-tuple of semistandard tableaux of shape the k-quotient of lambda,
/// with the same weight.
pub fn stanton_white(t: &RibbonTableau) -> TupleTableau {
    let k = t.k;
    let chain = t.chain();
    let quotients: Vec<Vec<Partition>> =
        chain.iter().map(|nu| nu.k_quotient(k).entries().to_vec()).collect();
    let final_q = quotients.last().unwrap();
    let mut rows: Vec<Vec<Vec<usize>>> = final_q
        .iter()
        .map(|p| p.parts().iter().map(|&len| vec![0usize; len]).collect())
        .collect();
    for j in 1..quotients.len() {
        for comp in 0..k {
            let prev = &quotients[j - 1][comp];
            let cur = &quotients[j][comp];
            for r in 1..=cur.len() {
                for c in prev.part(r) + 1..=cur.part(r) {
                    rows[comp][r - 1][c - 1] = j;
                }
            }
        }
    }
    let components: Vec<Ssyt> = rows
        .into_iter()
        .map(|r| Ssyt::new(r).expect("quotient chain yields semistandard components"))
        .collect();
    TupleTableau::new(components).unwrap()
}

/// Inverse correspondence: rebuilds the ribbon tableau from a tuple, the
/// k-core and k. Fails when the tuple is not the quotient image of any
/// tableau over that core.
pub fn stanton_white_inverse(
    tuple: &TupleTableau,
    core: &Partition,
    k: usize,
) -> Result<RibbonTableau> {
    if tuple.components().len() != k {
        return Err(Error::ShapeMismatch(format!(
            "tuple has {} components, expected {k}",
            tuple.components().len()
        )));
    }
    let weight = tuple.weight();
    let mut prev = from_core_quotient(
        core,
        &PartitionTuple::new(vec![Partition::empty(); k]),
        k,
    )?;
    let mut ribbons = Vec::new();
    for j in 1..=weight.len() {
        let truncated: Vec<Partition> = tuple
            .components()
            .iter()
            .map(|c| {
                Partition::from_unsorted(
                    c.rows()
                        .iter()
                        .map(|row| row.iter().take_while(|&&x| x <= j).count())
                        .collect(),
                )
            })
            .collect();
        let nu = from_core_quotient(core, &PartitionTuple::new(truncated), k)?;
        let theta = skew_cells(&nu, &prev);
        let tiling = strip_tiling(&theta, k).ok_or_else(|| {
            Error::ShapeMismatch(format!("label {j} does not add a horizontal ribbon strip"))
        })?;
        for cells in tiling {
            ribbons.push(Ribbon::new(j, cells));
        }
        prev = nu;
    }
    RibbonTableau::from_parts(prev, k, ribbons)
}
