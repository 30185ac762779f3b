//! Ribbon rigged configurations and their bijection with tuples of rows.
//!
//! A (lambda, mu)-configuration is a chain of partitions
//! nu_1 <= nu_2 <= ... <= nu_p = conjugate(mu), p = l(lambda), with
//! |nu_a| = lambda_1 + ... + lambda_a. Writing nu_i^a for the i-th part,
//!
//!   p_i^(a) = nu_i^(a+1) - nu_i^(a)     (vacancy number)
//!   m_i^(a) = nu_i^(a)  - nu_(i+1)^(a)  (columns of height exactly i)
//!
//! a rigging attaches to each row i of each nu_a (a < p) a partition inside
//! the m_i^(a) x p_i^(a) box; the cocharge of a rigged configuration is
//! alpha(nu) + total rigging weight, with
//! alpha(nu) = sum nu_(i+1)^a * (nu_i^(a+1) - nu_i^(a)). Summing q^cocharge
//! over a fixed shape gives q^alpha * prod of q-binomials [m+p; m, p]; summed
//! over all shapes this is the fermionic polynomial.
//!
//! `theta` sends a tuple of weakly increasing single rows to a rigged
//! configuration with cocharge equal to the tuple's inversion count. The
//! shape of the image can be read off the diagonal vector alone: put the
//! label counts per diagonal in a matrix, accumulate each row left to right,
//! and read the columns.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{partitions_in, Partition};
use crate::qpoly::{q_binomial, IntPolynomial};
use crate::tuples::{diagonal_vector, DiagonalVector, TupleTableau};

/// A configuration: the chain of shapes together with its (lambda, mu)
/// context.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Configuration {
    /// Chain nu_1, ..., nu_p.
    shapes: Vec<Partition>,
    /// Partial-weight source: |nu_a| = lambda_1 + ... + lambda_a.
    lambda: Partition,
    /// The chain ends at conjugate(mu).
    mu: Partition,
}

impl Configuration {
    pub fn new(shapes: Vec<Partition>, lambda: Partition, mu: Partition) -> Result<Self> {
        let c = Configuration { shapes, lambda, mu };
        c.validate()?;
        Ok(c)
    }

    fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::ShapeMismatch(msg));
        let p = self.lambda.len();
        if self.shapes.len() != p {
            return fail(format!(
                "chain has {} shapes, expected l(lambda) = {p}",
                self.shapes.len()
            ));
        }
        if p == 0 {
            return Ok(());
        }
        if self.shapes[p - 1] != self.mu.conjugate() {
            return fail("chain must end at the conjugate of mu".into());
        }
        // the partial-weight condition constrains levels 1..p-1 only; the
        // last shape is pinned by conjugate(mu)
        let mut partial = 0;
        for (a, nu) in self.shapes.iter().enumerate() {
            partial += self.lambda.part(a + 1);
            if a + 1 < p && nu.weight() != partial {
                return fail(format!("|nu_{}| = {}, expected {partial}", a + 1, nu.weight()));
            }
            if a + 1 < p && !self.shapes[a + 1].contains(nu) {
                return fail(format!("nu_{} not contained in nu_{}", a + 1, a + 2));
            }
        }
        Ok(())
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    /// Number of chain levels p.
    pub fn levels(&self) -> usize {
        self.shapes.len()
    }

    /// Largest row index the vacancy formulas range over.
    pub fn row_range(&self) -> usize {
        self.mu.part(1).max(self.shapes.iter().map(|s| s.len()).max().unwrap_or(0))
    }

    /// Vacancy number p_i^(a); a, i are 1-based, a < p.
    pub fn vacancy(&self, a: usize, i: usize) -> i64 {
        assert!((1..self.levels()).contains(&a));
        self.shapes[a].part(i) as i64 - self.shapes[a - 1].part(i) as i64
    }

    /// Multiplicity m_i^(a): columns of nu_a of height exactly i.
    pub fn multiplicity(&self, a: usize, i: usize) -> i64 {
        assert!((1..=self.levels()).contains(&a));
        self.shapes[a - 1].part(i) as i64 - self.shapes[a - 1].part(i + 1) as i64
    }

    /// All vacancy numbers, level by level.
    pub fn vacancy_data(&self) -> Vec<Vec<i64>> {
        (1..self.levels())
            .map(|a| (1..=self.row_range()).map(|i| self.vacancy(a, i)).collect())
            .collect()
    }

    /// alpha(nu) = sum over a < p, i of nu_(i+1)^a (nu_i^(a+1) - nu_i^(a)).
    pub fn alpha(&self) -> usize {
        let mut total = 0i64;
        for a in 1..self.levels() {
            for i in 1..=self.row_range() {
                total += self.shapes[a - 1].part(i + 1) as i64 * self.vacancy(a, i);
            }
        }
        usize::try_from(total).expect("alpha is non-negative on valid configurations")
    }

    /// q^alpha times the product of the q-binomials [m+p; m, p] over all rows
    /// and levels: the cocharge generating polynomial of the rigging fiber.
    pub fn fermionic_restricted(&self) -> IntPolynomial {
        let mut poly = IntPolynomial::monomial(1, self.alpha());
        for a in 1..self.levels() {
            for i in 1..=self.row_range() {
                let m = self.multiplicity(a, i);
                let p = self.vacancy(a, i);
                assert!(m >= 0 && p >= 0, "invalid configuration");
                poly = &poly * &q_binomial(m as usize, p as usize);
            }
        }
        poly
    }
}

/// All (lambda, mu)-configurations.
pub fn enumerate_configurations(lambda: &Partition, mu: &Partition) -> Vec<Configuration> {
    let p = lambda.len();
    if p == 0 {
        return if mu.is_empty() {
            vec![Configuration { shapes: vec![], lambda: lambda.clone(), mu: mu.clone() }]
        } else {
            vec![]
        };
    }
    let top = mu.conjugate();
    // build the chain downward from nu_p
    let mut chains = vec![vec![top.clone()]];
    for a in (1..p).rev() {
        let partial: usize = (1..=a).map(|i| lambda.part(i)).sum();
        let mut next = Vec::new();
        for chain in chains {
            let bound = chain.last().unwrap();
            for nu in partitions_in(bound, partial) {
                let mut c = chain.clone();
                c.push(nu);
                next.push(c);
            }
        }
        chains = next;
    }
    chains
        .into_iter()
        .map(|mut chain| {
            chain.reverse();
            Configuration { shapes: chain, lambda: lambda.clone(), mu: mu.clone() }
        })
        .collect()
}

/// A rigged configuration: a configuration plus, for every level a < p and
/// row i, a partition inside the m_i^(a) x p_i^(a) box. Riggings are kept as
/// partitions, which identifies fillings differing by reordering within a
/// column-height group.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct RiggedConfiguration {
    config: Configuration,
    /// riggings[a-1][i-1] is the partition attached to row i of nu_a.
    riggings: Vec<Vec<Partition>>,
}

impl RiggedConfiguration {
    pub fn new(config: Configuration, mut riggings: Vec<Vec<Partition>>) -> Result<Self> {
        let rows = config.row_range();
        for level in &mut riggings {
            level.resize(rows, Partition::empty());
        }
        let rc = RiggedConfiguration { config, riggings };
        rc.validate()?;
        Ok(rc)
    }

    fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::ShapeMismatch(msg));
        let p = self.config.levels();
        if self.riggings.len() != p.saturating_sub(1) {
            return fail(format!("expected {} rigging levels", p.saturating_sub(1)));
        }
        for a in 1..p {
            for i in 1..=self.config.row_range() {
                let j = self.riggings[a - 1]
                    .get(i - 1)
                    .cloned()
                    .unwrap_or_else(Partition::empty);
                let m = self.config.multiplicity(a, i);
                let pv = self.config.vacancy(a, i);
                if j.len() as i64 > m || j.part(1) as i64 > pv {
                    return fail(format!(
                        "rigging {j:?} does not fit the {m}x{pv} box at level {a}, row {i}"
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn config(&self) -> &Configuration {
        &self.config
    }

    pub fn riggings(&self) -> &[Vec<Partition>] {
        &self.riggings
    }

    /// cocharge = alpha(shape) + total rigging weight.
    pub fn cocharge(&self) -> usize {
        let riggings: usize = self
            .riggings
            .iter()
            .flat_map(|level| level.iter().map(|j| j.weight()))
            .sum();
        self.config.alpha() + riggings
    }

    /// Text rendering: one diagram per level, quantum numbers in the top cell
    /// of each column, vacancy numbers on the row frontier.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let p = self.config.levels();
        for (a, nu) in self.config.shapes().iter().enumerate() {
            out.push_str(&format!("nu_{}: {}\n", a + 1, nu));
            for i in (1..=nu.len()).rev() {
                let width = nu.part(i);
                let taller = nu.part(i + 1);
                let mut line = String::from("  ");
                let numbers: Vec<usize> = if a + 1 < p {
                    let j = self.riggings[a]
                        .get(i - 1)
                        .cloned()
                        .unwrap_or_else(Partition::empty);
                    let m = self.config.multiplicity(a + 1, i).max(0) as usize;
                    let mut ns: Vec<usize> = (1..=m).map(|t| j.part(t)).collect();
                    ns.reverse();
                    ns
                } else {
                    vec![]
                };
                let mut col_top = 0;
                for c in 1..=width {
                    if c <= taller {
                        line.push_str(". ");
                    } else if a + 1 < p {
                        let n = numbers.get(col_top).copied().unwrap_or(0);
                        line.push_str(&format!("{n} "));
                        col_top += 1;
                    } else {
                        line.push_str(". ");
                    }
                }
                if a + 1 < p {
                    line.push_str(&format!("| {}", self.config.vacancy(a + 1, i)));
                }
                out.push_str(line.trim_end());
                out.push('\n');
            }
        }
        out
    }
}

impl fmt::Display for RiggedConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// All riggings over a configuration shape.
pub fn enumerate_riggings(config: &Configuration) -> Vec<RiggedConfiguration> {
    let p = config.levels();
    let rows = config.row_range();
    let mut slots: Vec<(usize, usize, Vec<Partition>)> = Vec::new();
    for a in 1..p {
        for i in 1..=rows {
            let m = config.multiplicity(a, i).max(0) as usize;
            let pv = config.vacancy(a, i).max(0) as usize;
            slots.push((a, i, partitions_in_box(m, pv)));
        }
    }
    fn rec(
        slots: &[(usize, usize, Vec<Partition>)],
        idx: usize,
        config: &Configuration,
        current: &mut Vec<Vec<Partition>>,
        out: &mut Vec<RiggedConfiguration>,
    ) {
        if idx == slots.len() {
            out.push(RiggedConfiguration { config: config.clone(), riggings: current.clone() });
            return;
        }
        let (a, i, ref choices) = slots[idx];
        for choice in choices {
            current[a - 1][i - 1] = choice.clone();
            rec(slots, idx + 1, config, current, out);
        }
        current[a - 1][i - 1] = Partition::empty();
    }
    let mut out = Vec::new();
    let mut current: Vec<Vec<Partition>> =
        vec![vec![Partition::empty(); rows]; p.saturating_sub(1)];
    rec(&slots, 0, config, &mut current, &mut out);
    out
}

/// Partitions with at most `width` parts, each at most `height`.
fn partitions_in_box(width: usize, height: usize) -> Vec<Partition> {
    let mut out = vec![Partition::empty()];
    for total in 1..=width * height {
        out.extend(partitions_in(&Partition::rectangle(height, width), total));
    }
    out
}

/// The fermionic polynomial: sum over all (lambda, mu)-configurations of the
/// restricted form q^alpha prod [m+p; m, p].
pub fn fermionic_polynomial(lambda: &Partition, mu: &Partition) -> IntPolynomial {
    let mut out = IntPolynomial::zero();
    for config in enumerate_configurations(lambda, mu) {
        out += &config.fermionic_restricted();
    }
    out
}

/// Cocharge generating polynomial of all rigged configurations, by direct
/// enumeration; equals `fermionic_polynomial` and serves as its cross-check.
pub fn cocharge_polynomial(lambda: &Partition, mu: &Partition) -> IntPolynomial {
    let mut out = IntPolynomial::zero();
    for config in enumerate_configurations(lambda, mu) {
        for rc in enumerate_riggings(&config) {
            out.add_term(&BigInt::from(1), rc.cocharge());
        }
    }
    out
}

/// The matrix of label counts per diagonal: entry (i, j) counts cells
/// labelled j on diagonal i - 1.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DiagonalMatrix {
    rows: Vec<Vec<usize>>,
}

impl DiagonalMatrix {
    pub fn new(rows: Vec<Vec<usize>>) -> Self {
        DiagonalMatrix { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Row-wise prefix sums: entry (i, j) becomes the number of cells on
    /// diagonal i - 1 with label at most j.
    pub fn accumulated(&self) -> DiagonalMatrix {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc = 0;
                row.iter()
                    .map(|&v| {
                        acc += v;
                        acc
                    })
                    .collect()
            })
            .collect();
        DiagonalMatrix { rows }
    }

    pub fn column(&self, j: usize) -> Vec<usize> {
        self.rows.iter().map(|row| row.get(j - 1).copied().unwrap_or(0)).collect()
    }
}

/// Builds the diagonal matrix of a tuple of weakly increasing single rows.
pub fn diagonal_matrix(tuple: &TupleTableau) -> Result<DiagonalMatrix> {
    if !tuple.is_increasing_rows() {
        return Err(Error::NonRowTuple);
    }
    let weight = tuple.weight();
    Ok(matrix_from_diagonal(&diagonal_vector(tuple), weight.len()))
}

fn matrix_from_diagonal(d: &DiagonalVector, labels: usize) -> DiagonalMatrix {
    let max_diag = d.diagonals().keys().next_back().copied().unwrap_or(-1);
    let mut rows = vec![vec![0usize; labels]; (max_diag + 1).max(0) as usize];
    for (&diag, cell_labels) in d.diagonals() {
        for &l in cell_labels {
            rows[diag as usize][l - 1] += 1;
        }
    }
    DiagonalMatrix { rows }
}

/// Reads the configuration shape of the image of a diagonal class straight
/// from the diagonal vector: column j of the accumulated matrix, sorted and
/// trimmed, is the j-th shape.
pub fn shape_from_diagonal(d: &DiagonalVector) -> Result<Configuration> {
    let weight = d.weight();
    let mu = partition_weight(&weight)?;
    let acc = matrix_from_diagonal(d, weight.len()).accumulated();
    let shapes: Vec<Partition> =
        (1..=weight.len()).map(|j| Partition::from_unsorted(acc.column(j))).collect();
    // the component sizes are recoverable as the conjugate of the final
    // shape (the diagonal sizes)
    let delta = shapes.last().map(|s| s.conjugate()).unwrap_or_else(Partition::empty);
    Configuration::new(shapes, mu, delta)
}

fn partition_weight(weight: &[usize]) -> Result<Partition> {
    if weight.iter().any(|&w| w == 0) || !weight.windows(2).all(|w| w[0] >= w[1]) {
        return Err(Error::NonPartitionWeight);
    }
    Partition::new(weight.to_vec())
}

/// The statistic-preserving bijection from tuples of weakly increasing single
/// rows to rigged configurations: the cocharge of the image equals the
/// inversion count of the tuple.
///
/// Components are processed last to first, cells left to right. A cell
/// labelled b adds a box in its row j to every level b..p; each new box on a
/// rigged level receives the current vacancy number of its row, and every
/// level that grew loses one singular quantum number in row j - 1. At the end
/// all quantum numbers are complemented against the final vacancy numbers.
pub fn theta(tuple: &TupleTableau) -> Result<RiggedConfiguration> {
    if !tuple.is_increasing_rows() {
        return Err(Error::NonRowTuple);
    }
    let weight = tuple.weight();
    let mu = partition_weight(&weight)?;
    let p = mu.len();
    let k = tuple.components().len();

    let mut shapes: Vec<Vec<usize>> = vec![vec![]; p];
    let mut numbers: Vec<Vec<Vec<i64>>> = vec![vec![]; p.saturating_sub(1)];

    let part = |shapes: &Vec<Vec<usize>>, a: usize, i: usize| -> i64 {
        shapes[a - 1].get(i - 1).copied().unwrap_or(0) as i64
    };

    for comp in (0..k).rev() {
        let row = tuple.components()[comp].rows().first().cloned().unwrap_or_default();
        for (j0, &label) in row.iter().enumerate() {
            let j = j0 + 1;
            // cascade a box through levels label..p at row j
            for shape in shapes.iter_mut().take(p).skip(label - 1) {
                if shape.len() < j {
                    shape.resize(j, 0);
                }
                shape[j - 1] += 1;
            }
            // new boxes on rigged levels take the current vacancy of row j
            for a in label..p {
                let vac = part(&shapes, a + 1, j) - part(&shapes, a, j);
                let level = &mut numbers[a - 1];
                if level.len() < j {
                    level.resize(j, vec![]);
                }
                level[j - 1].push(vac);
            }
            // each grown level loses one singular number in row j - 1
            if j >= 2 {
                for a in label..p {
                    let vac = part(&shapes, a + 1, j - 1) - part(&shapes, a, j - 1);
                    let row_numbers = &mut numbers[a - 1][j - 2];
                    let idx = row_numbers
                        .iter()
                        .position(|&n| n == vac)
                        .expect("a singular quantum number must exist");
                    row_numbers.swap_remove(idx);
                }
            }
        }
    }

    let shape_parts: Vec<Partition> =
        shapes.iter().map(|parts| Partition::from_unsorted(parts.clone())).collect();
    let delta = Partition::from_unsorted(
        tuple.components().iter().map(|c| c.shape().weight()).collect(),
    );
    let config = Configuration::new(shape_parts, mu, delta)?;
    let mut riggings: Vec<Vec<Partition>> = Vec::new();
    for a in 1..p {
        let mut level_riggings = Vec::new();
        for i in 1..=config.row_range() {
            let vac = config.vacancy(a, i);
            let row_numbers = numbers[a - 1].get(i - 1).cloned().unwrap_or_default();
            let complemented: Vec<usize> = row_numbers
                .iter()
                .map(|&n| {
                    let v = vac - n;
                    assert!(v >= 0, "quantum number exceeds its vacancy");
                    v as usize
                })
                .collect();
            level_riggings.push(Partition::from_unsorted(complemented));
        }
        riggings.push(level_riggings);
    }
    RiggedConfiguration::new(config, riggings)
}

/// Checks that the image of a diagonal class under `theta` is exactly the
/// rigging fiber over the shape read from the diagonal vector, and that the
/// restricted inversion polynomial equals the restricted fermionic form.
pub fn fiber_check(shapes: &[Partition], weight: &[usize], d: &DiagonalVector) -> Result<bool> {
    let classes = crate::tuples::diagonal_classes(shapes, weight)?;
    let Some(class) = classes.iter().find(|c| &c.vector == d) else {
        return Ok(false);
    };
    let config = shape_from_diagonal(d)?;
    let mut image: Vec<RiggedConfiguration> =
        class.members.iter().map(theta).collect::<Result<_>>()?;
    image.sort();
    image.dedup();
    if image.len() != class.members.len() {
        return Ok(false);
    }
    let mut fiber = enumerate_riggings(&config);
    fiber.sort();
    if image != fiber {
        return Ok(false);
    }
    let inv_poly = crate::tuples::restricted_inversion_polynomial(class);
    Ok(inv_poly == config.fermionic_restricted())
}

/// For weight mu = (k s_1, ..., k s_p) on k copies of a single row of length
/// n = s_1 + ... + s_p, the unique singleton diagonal class maps to the chain
/// of rectangles (k^(s_1 + ... + s_i)). Returns true when the image of the
/// singleton tuple matches.
pub fn rectangular_shape_check(n: usize, k: usize, s: &[usize]) -> Result<bool> {
    if s.iter().sum::<usize>() != n {
        return Err(Error::WeightMismatch { expected: n, got: s.iter().sum() });
    }
    let mut row = Vec::with_capacity(n);
    for (label0, &count) in s.iter().enumerate() {
        for _ in 0..count {
            row.push(label0 + 1);
        }
    }
    let component = crate::tuples::Ssyt::new(vec![row])?;
    let tuple = TupleTableau::new(vec![component; k])?;
    let rc = theta(&tuple)?;
    if rc.cocharge() != 0 {
        return Ok(false);
    }
    let mut partial = 0;
    for (i, &si) in s.iter().enumerate() {
        partial += si;
        if rc.config().shapes()[i] != Partition::rectangle(k, partial) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;
    use crate::tuples::{enumerate_tuples, inversion_polynomial, inversions, Ssyt};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn config(shapes: &[&[usize]], lambda: &[usize], mu: &[usize]) -> Configuration {
        Configuration::new(shapes.iter().map(|s| p(s)).collect(), p(lambda), p(mu)).unwrap()
    }

    #[test]
    fn configuration_membership_example() {
        let configs = enumerate_configurations(&p(&[3, 1, 1, 1]), &p(&[3, 2, 2]));
        let target = config(
            &[&[2, 1], &[3, 1], &[3, 2], &[3, 3, 1]],
            &[3, 1, 1, 1],
            &[3, 2, 2],
        );
        assert!(configs.contains(&target));
        // single-level chain
        let configs = enumerate_configurations(&p(&[4]), &p(&[4]));
        assert_eq!(configs.len(), 1);
        assert_eq!(configs[0].shapes(), &[p(&[1, 1, 1, 1])]);
        // tiny exhaustive case: nu_1 <= (2) with |nu_1| = 1
        let configs = enumerate_configurations(&p(&[1, 1]), &p(&[1, 1]));
        assert_eq!(configs.len(), 1);
        assert_eq!(configs[0].shapes(), &[p(&[1]), p(&[2])]);
    }

    #[test]
    fn vacancy_example() {
        let c = config(
            &[&[2, 1], &[3, 1], &[3, 2], &[3, 3, 1]],
            &[3, 1, 1, 1],
            &[3, 2, 2],
        );
        assert_eq!(c.vacancy(1, 1), 1);
        assert_eq!(c.vacancy(1, 2), 0);
        assert_eq!(c.alpha(), 1);
        // constant chain segments have zero vacancy everywhere
        let c = config(&[&[2], &[2, 2]], &[2, 2], &[2, 2]);
        assert_eq!(c.vacancy(1, 1), 0);
        // vacancies of enumerated configurations are always >= 0
        for lambda in partitions_of(6) {
            for mu in partitions_of(6) {
                for c in enumerate_configurations(&lambda, &mu) {
                    for a in 1..c.levels() {
                        for i in 1..=c.row_range() {
                            assert!(c.vacancy(a, i) >= 0);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn alpha_trivial_cases() {
        let c = config(&[&[1, 1, 1]], &[3], &[3]);
        assert_eq!(c.alpha(), 0);
    }

    #[test]
    fn rigging_enumeration_counts() {
        // all-zero vacancies: exactly one (empty) rigging
        let c = config(&[&[2], &[2, 2]], &[2, 2], &[2, 2]);
        let riggings = enumerate_riggings(&c);
        assert_eq!(riggings.len(), 1);
        assert_eq!(riggings[0].cocharge(), c.alpha());
        // |fiber| equals the restricted fermionic polynomial at q = 1, and
        // the cocharge distribution matches it coefficient by coefficient
        for lambda in partitions_of(6) {
            for mu in partitions_of(6) {
                for c in enumerate_configurations(&lambda, &mu) {
                    let fiber = enumerate_riggings(&c);
                    let poly = c.fermionic_restricted();
                    assert_eq!(BigInt::from(fiber.len()), poly.eval_one(), "size for {c:?}");
                    let mut by_cc = IntPolynomial::zero();
                    for rc in &fiber {
                        by_cc.add_term(&BigInt::from(1), rc.cocharge());
                    }
                    assert_eq!(by_cc, poly, "distribution for {c:?}");
                }
            }
        }
    }

    #[test]
    fn displayed_rigged_configuration() {
        let c = config(
            &[&[2, 1], &[3, 1], &[3, 2], &[3, 3, 1]],
            &[3, 1, 1, 1],
            &[3, 2, 2],
        );
        let riggings = vec![
            vec![p(&[1]), Partition::empty()],
            vec![Partition::empty(), p(&[1])],
            vec![Partition::empty(), p(&[1])],
        ];
        let rc = RiggedConfiguration::new(c.clone(), riggings).unwrap();
        assert_eq!(rc.cocharge(), 4);
        let fiber = enumerate_riggings(&c);
        assert!(fiber.contains(&rc));
        // a rigging exceeding the box is rejected
        let too_big = vec![
            vec![p(&[2]), Partition::empty()],
            vec![Partition::empty(), Partition::empty()],
            vec![Partition::empty(), Partition::empty()],
        ];
        assert!(RiggedConfiguration::new(c, too_big).is_err());
    }

    #[test]
    fn fermionic_small_values() {
        // hand-computed: two configurations contribute 1+q+q^2 and q^2
        let poly = fermionic_polynomial(&p(&[2, 2]), &p(&[2, 1, 1]));
        assert_eq!(poly, IntPolynomial::from_i64_coeffs(&[1, 1, 2]));
        // restricted polynomial of the 12-element fiber
        let c = config(
            &[&[2, 1], &[3, 2], &[3, 3, 1], &[3, 3, 1, 1]],
            &[3, 2, 2, 1],
            &[4, 2, 2],
        );
        assert_eq!(
            c.fermionic_restricted(),
            IntPolynomial::from_i64_coeffs(&[0, 1, 3, 4, 3, 1])
        );
        // a point fiber
        let c = config(&[&[3], &[3, 3]], &[3, 3], &[2, 2, 2]);
        assert_eq!(c.fermionic_restricted(), IntPolynomial::one());
    }

    #[test]
    fn fermionic_matches_inversion_polynomials() {
        let shapes = vec![p(&[2]), p(&[2]), p(&[4])];
        let delta = p(&[4, 2, 2]);
        for mu in partitions_of(8) {
            let inv = inversion_polynomial(&shapes, mu.parts()).unwrap();
            let fer = fermionic_polynomial(&mu, &delta);
            assert_eq!(inv, fer, "mu = {mu:?}");
        }
    }

    #[test]
    fn theta_on_the_displayed_tuple() {
        let tuple = TupleTableau::new(vec![
            Ssyt::new(vec![vec![1, 4]]).unwrap(),
            Ssyt::new(vec![vec![1, 2]]).unwrap(),
            Ssyt::new(vec![vec![1, 2, 3, 3]]).unwrap(),
        ])
        .unwrap();
        let rc = theta(&tuple).unwrap();
        assert_eq!(
            rc.config().shapes(),
            &[p(&[3]), p(&[3, 2]), p(&[3, 2, 1, 1]), p(&[3, 3, 1, 1])]
        );
        assert_eq!(rc.cocharge(), 2);
        assert_eq!(rc.cocharge(), inversions(&tuple));
    }

    #[test]
    fn theta_trivial_tuple() {
        let tuple = TupleTableau::new(vec![Ssyt::new(vec![vec![1, 1, 1]]).unwrap()]).unwrap();
        let rc = theta(&tuple).unwrap();
        assert_eq!(rc.cocharge(), 0);
    }

    #[test]
    fn theta_rejects_multirow_tuples() {
        let tuple =
            TupleTableau::new(vec![Ssyt::new(vec![vec![1, 1], vec![2]]).unwrap()]).unwrap();
        assert!(matches!(theta(&tuple), Err(Error::NonRowTuple)));
    }

    #[test]
    fn theta_statistic_and_bijectivity() {
        // over all increasing single-row shapes of total size <= 6 and all
        // partition weights: cc = Inv, theta is injective, and the image is
        // the full set of rigged configurations over (mu, delta)
        for total in 1..=6 {
            for sizes in partitions_of(total) {
                let mut shape_sizes = sizes.parts().to_vec();
                shape_sizes.reverse(); // increasing
                let shapes: Vec<Partition> = shape_sizes.iter().map(|&s| p(&[s])).collect();
                for mu in partitions_of(total) {
                    let tuples = enumerate_tuples(&shapes, mu.parts()).unwrap();
                    let mut images = Vec::new();
                    for t in &tuples {
                        let rc = theta(t).unwrap();
                        assert_eq!(rc.cocharge(), inversions(t), "cc = Inv for {t:?}");
                        images.push(rc);
                    }
                    images.sort();
                    images.dedup();
                    assert_eq!(images.len(), tuples.len(), "theta injective");
                    let delta = Partition::from_unsorted(shape_sizes.clone());
                    let mut all: Vec<RiggedConfiguration> = Vec::new();
                    for c in enumerate_configurations(&mu, &delta) {
                        all.extend(enumerate_riggings(&c));
                    }
                    all.sort();
                    assert_eq!(images, all, "image is the whole configuration set");
                }
            }
        }
    }

    #[test]
    fn accumulate_matrix_example() {
        let tuple = TupleTableau::new(vec![
            Ssyt::new(vec![vec![1, 4]]).unwrap(),
            Ssyt::new(vec![vec![1, 2]]).unwrap(),
            Ssyt::new(vec![vec![1, 2, 3, 3]]).unwrap(),
        ])
        .unwrap();
        let m = diagonal_matrix(&tuple).unwrap();
        assert_eq!(
            m.rows(),
            &[
                vec![3, 0, 0, 0],
                vec![0, 2, 0, 1],
                vec![0, 0, 1, 0],
                vec![0, 0, 1, 0]
            ]
        );
        let acc = m.accumulated();
        assert_eq!(
            acc.rows(),
            &[
                vec![3, 3, 3, 3],
                vec![0, 2, 2, 3],
                vec![0, 0, 1, 1],
                vec![0, 0, 1, 1]
            ]
        );
        // zero matrix accumulates to itself
        let zero = DiagonalMatrix::new(vec![vec![0; 3]; 2]);
        assert_eq!(zero.accumulated(), zero);
        // the shape read off the columns matches theta
        let rc = theta(&tuple).unwrap();
        let read = shape_from_diagonal(&diagonal_vector(&tuple)).unwrap();
        assert_eq!(read.shapes(), rc.config().shapes());
    }

    #[test]
    fn fiber_check_on_the_twelve_class() {
        let shapes = vec![p(&[2]), p(&[2]), p(&[4])];
        let weight = vec![3, 2, 2, 1];
        let d = DiagonalVector::from_row_diagonals(vec![
            vec![1, 1, 2],
            vec![1, 2, 3],
            vec![3],
            vec![4],
        ]);
        assert!(fiber_check(&shapes, &weight, &d).unwrap());
        let config = shape_from_diagonal(&d).unwrap();
        assert_eq!(
            config.fermionic_restricted(),
            IntPolynomial::from_i64_coeffs(&[0, 1, 3, 4, 3, 1])
        );
        // every diagonal vector of the instance passes
        for class in crate::tuples::diagonal_classes(&shapes, &weight).unwrap() {
            assert!(fiber_check(&shapes, &weight, &class.vector).unwrap());
        }
    }

    #[test]
    fn rectangular_shapes() {
        assert!(rectangular_shape_check(2, 3, &[1, 1]).unwrap());
        assert!(rectangular_shape_check(3, 2, &[2, 1]).unwrap());
        assert!(rectangular_shape_check(2, 2, &[2]).unwrap());
        assert!(rectangular_shape_check(4, 2, &[2, 2]).unwrap());
    }

    #[test]
    fn cocharge_polynomial_matches_formula() {
        for n in 1..=6 {
            for lambda in partitions_of(n) {
                for mu in partitions_of(n) {
                    assert_eq!(
                        cocharge_polynomial(&lambda, &mu),
                        fermionic_polynomial(&lambda, &mu),
                        "lambda {lambda:?} mu {mu:?}"
                    );
                }
            }
        }
    }
}
