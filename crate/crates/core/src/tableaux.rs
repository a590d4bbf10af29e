//! Young tableaux: SYT enumeration, standardization, reading words, ballot
//! checks, and Kostka numbers via Gelfand-Tsetlin lattice-point counting.
//!
//! Kostka numbers have two fully independent routes here: [`kostka`] counts
//! integer points of the GT polytope by a pruned depth-first search over
//! interlacing rows, while [`count_ssyt_brute`] fills cells one by one. The
//! test suites hold them equal.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::partition::{Composition, Partition};

/// A skew shape `outer/inner` with `inner` contained in `outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, Error> {
        if !outer.contains(&inner) {
            return Err(Error::InnerNotContained);
        }
        Ok(SkewShape { outer, inner })
    }

    /// Straight shape `lambda/[]`.
    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Number of cells `|outer| - |inner|`.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Number of rows of the outer shape.
    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Cells of row `i` span absolute columns `inner_i..outer_i` (0-indexed).
    pub fn row_span(&self, i: usize) -> (usize, usize) {
        (self.inner.part(i), self.outer.part(i))
    }
}

impl std::fmt::Display for SkewShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

/// A filling of a skew shape: `rows[i]` holds the entries of row `i` for
/// columns `inner_i..outer_i`, left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Self {
        debug_assert_eq!(rows.len(), shape.rows());
        debug_assert!((0..rows.len()).all(|i| {
            let (a, b) = shape.row_span(i);
            rows[i].len() == b - a
        }));
        Tableau { shape, rows }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry at (row `i`, absolute column `j`), if that cell exists.
    pub fn entry(&self, i: usize, j: usize) -> Option<usize> {
        if i >= self.rows.len() {
            return None;
        }
        let (a, b) = self.shape.row_span(i);
        if j >= a && j < b {
            Some(self.rows[i][j - a])
        } else {
            None
        }
    }

    /// Weight (type): `weight[v-1]` = number of entries equal to `v`.
    pub fn weight(&self) -> Composition {
        let max = self
            .rows
            .iter()
            .flat_map(|r| r.iter())
            .copied()
            .max()
            .unwrap_or(0);
        let mut counts = vec![0usize; max];
        for row in &self.rows {
            for &v in row {
                counts[v - 1] += 1;
            }
        }
        Composition(counts)
    }

    /// Rows weakly increase, columns strictly increase.
    pub fn is_semistandard(&self) -> bool {
        for (i, row) in self.rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            let (a, b) = self.shape.row_span(i);
            for j in a..b {
                if let Some(below) = self.entry(i + 1, j) {
                    if below <= self.rows[i][j - a] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Entries read right-to-left within each row, rows top-to-bottom.
    pub fn reading_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.shape.size());
        for row in &self.rows {
            word.extend(row.iter().rev());
        }
        word
    }
}

/// True iff every prefix has at least as many `i` as `i+1`, for every `i`
/// (lattice permutation / ballot sequence).
pub fn is_ballot(word: &[usize]) -> bool {
    let max = word.iter().copied().max().unwrap_or(0);
    let mut counts = vec![0usize; max + 1];
    for &v in word {
        counts[v] += 1;
        if v > 1 && counts[v] > counts[v - 1] {
            return false;
        }
    }
    true
}

/// Calls `f` for every standard Young tableau of the shape, generated by
/// recursive removal of corner cells (entry `n` sits at a removable corner).
pub fn for_each_syt<F: FnMut(&Tableau)>(shape: &SkewShape, mut f: F) {
    let rows = shape.rows();
    let mut cur: Vec<usize> = shape.outer().parts().to_vec();
    let mut grid: Vec<Vec<usize>> = (0..rows)
        .map(|i| {
            let (a, b) = shape.row_span(i);
            vec![0usize; b - a]
        })
        .collect();
    let n = shape.size();
    fill_corners(shape, &mut cur, &mut grid, n, &mut f);
}

fn fill_corners<F: FnMut(&Tableau)>(
    shape: &SkewShape,
    cur: &mut Vec<usize>,
    grid: &mut Vec<Vec<usize>>,
    value: usize,
    f: &mut F,
) {
    if value == 0 {
        f(&Tableau::new(shape.clone(), grid.clone()));
        return;
    }
    for i in 0..cur.len() {
        let removable =
            cur[i] > shape.inner().part(i) && (i + 1 == cur.len() || cur[i + 1] < cur[i]);
        if removable {
            let col = cur[i] - 1;
            let off = col - shape.inner().part(i);
            grid[i][off] = value;
            cur[i] -= 1;
            fill_corners(shape, cur, grid, value - 1, f);
            cur[i] += 1;
            grid[i][off] = 0;
        }
    }
}

/// All SYTs of the shape; the count equals `f^{lambda/mu}`.
pub fn enumerate_syt(shape: &SkewShape) -> Vec<Tableau> {
    let mut out = Vec::new();
    for_each_syt(shape, |t| out.push(t.clone()));
    out
}

/// Standardization inverse: succeeds iff for every block `i` the entries
/// `mu_1+..+mu_i+1 ..= mu_1+..+mu_{i+1}` appear left to right in strictly
/// increasing columns; then the block entries collapse to the value `i+1`
/// and the result is an SSYT of type `mu`.
pub fn standardize_to_type(t: &Tableau, mu: &Partition) -> Option<Tableau> {
    let n = t.shape().size();
    assert_eq!(
        n,
        mu.size(),
        "standardization target must match tableau size"
    );
    // Position (row, absolute column) of each value 1..=n.
    let mut pos = vec![(0usize, 0usize); n + 1];
    for (i, row) in t.rows().iter().enumerate() {
        let (a, _) = t.shape().row_span(i);
        for (off, &v) in row.iter().enumerate() {
            pos[v] = (i, a + off);
        }
    }
    let mut rows = t.rows().to_vec();
    let mut start = 1usize;
    for (block, &width) in mu.parts().iter().enumerate() {
        for v in start..start + width {
            if v + 1 < start + width && pos[v].1 >= pos[v + 1].1 {
                return None;
            }
            let (i, j) = pos[v];
            let off = j - t.shape().row_span(i).0;
            rows[i][off] = block + 1;
        }
        start += width;
    }
    let result = Tableau::new(t.shape().clone(), rows);
    debug_assert!(result.is_semistandard());
    Some(result)
}

/// Calls `f` for every SSYT of the shape with entries in `1..=max_value`,
/// built cell by cell in row-major order. Brute force; this is the oracle
/// side of every Kostka cross-check.
pub fn for_each_ssyt<F: FnMut(&Tableau)>(shape: &SkewShape, max_value: usize, mut f: F) {
    let rows = shape.rows();
    let mut grid: Vec<Vec<usize>> = (0..rows)
        .map(|i| {
            let (a, b) = shape.row_span(i);
            vec![0usize; b - a]
        })
        .collect();
    fill_ssyt_cell(shape, &mut grid, 0, 0, max_value, &mut f);
}

fn fill_ssyt_cell<F: FnMut(&Tableau)>(
    shape: &SkewShape,
    grid: &mut Vec<Vec<usize>>,
    row: usize,
    off: usize,
    max_value: usize,
    f: &mut F,
) {
    if row == shape.rows() {
        f(&Tableau::new(shape.clone(), grid.clone()));
        return;
    }
    let (a, b) = shape.row_span(row);
    if off == b - a {
        fill_ssyt_cell(shape, grid, row + 1, 0, max_value, f);
        return;
    }
    let col = a + off;
    let mut lo = 1usize;
    if off > 0 {
        lo = lo.max(grid[row][off - 1]); // weak row increase
    }
    if row > 0 {
        let (pa, pb) = shape.row_span(row - 1);
        if col >= pa && col < pb {
            lo = lo.max(grid[row - 1][col - pa] + 1); // strict column increase
        }
    }
    for v in lo..=max_value {
        grid[row][off] = v;
        fill_ssyt_cell(shape, grid, row, off + 1, max_value, f);
    }
    grid[row][off] = 0;
}

/// Brute-force SSYT count of the given type (weight); zeros in `weight` are
/// allowed and simply forbid that value.
pub fn count_ssyt_brute(shape: &SkewShape, weight: &[usize]) -> BigUint {
    if shape.size() != weight.iter().sum::<usize>() {
        return BigUint::zero();
    }
    let mut count = BigUint::zero();
    for_each_ssyt(shape, weight.len(), |t| {
        let w = t.weight();
        let mut padded = w.parts().to_vec();
        padded.resize(weight.len(), 0);
        if padded == weight {
            count += BigUint::one();
        }
    });
    count
}

/// The Gelfand-Tsetlin constraint system for `K_{lambda/mu, nu}`: a chain of
/// `ell(nu)+1` interlacing rows from `mu` up to `lambda` where step `i` adds
/// a horizontal strip of size `nu_i`.
#[derive(Clone, Debug)]
pub struct GTSpec {
    outer: Partition,
    inner: Partition,
    weight: Vec<usize>,
}

impl GTSpec {
    pub fn new(shape: &SkewShape, weight: &Composition) -> Self {
        GTSpec {
            outer: shape.outer().clone(),
            inner: shape.inner().clone(),
            weight: weight.parts().to_vec(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn weight(&self) -> &[usize] {
        &self.weight
    }
}

/// Exact lattice-point count of the GT polytope by depth-first assignment of
/// rows bottom-up, pruning with the interlacing window and row-sum residuals.
pub fn count_gt_points(spec: &GTSpec) -> BigUint {
    let lambda = &spec.outer;
    let mu = &spec.inner;
    if !lambda.contains(mu) {
        return BigUint::zero();
    }
    let total: usize = spec.weight.iter().sum();
    if total != lambda.size() - mu.size() {
        return BigUint::zero();
    }
    let width = lambda.len().max(1);
    // Each positive strip can extend the length by at most one row.
    let positive = spec.weight.iter().filter(|&&w| w > 0).count();
    if lambda.len() > mu.len() + positive {
        return BigUint::zero();
    }

    let lam: Vec<usize> = (0..width).map(|j| lambda.part(j)).collect();
    let start: Vec<usize> = (0..width).map(|j| mu.part(j)).collect();
    // strips_after[s] = number of positive strips at steps >= s
    let steps = spec.weight.len();
    let mut strips_after = vec![0usize; steps + 1];
    for s in (0..steps).rev() {
        strips_after[s] = strips_after[s + 1] + usize::from(spec.weight[s] > 0);
    }
    // Reachability: with t positive strips left, the value at column j must
    // already be >= lambda_{j+t}.
    let t0 = strips_after[0];
    if (0..width).any(|j| {
        let need = if j + t0 < width { lam[j + t0] } else { 0 };
        start[j] < need
    }) {
        return BigUint::zero();
    }

    let mut count = BigUint::zero();
    let mut row = start;
    gt_step(&lam, &mut row, &spec.weight, 0, &strips_after, &mut count);
    count
}

fn gt_step(
    lam: &[usize],
    row: &mut Vec<usize>,
    weight: &[usize],
    step: usize,
    strips_after: &[usize],
    count: &mut BigUint,
) {
    if step == weight.len() {
        // The reachability bound with zero strips left pins row == lambda.
        debug_assert_eq!(row.as_slice(), lam);
        *count += BigUint::one();
        return;
    }
    let width = lam.len();
    let t = strips_after[step + 1];
    // Window for the next row y: interlacing x_j <= y_j <= min(x_{j-1}, lam_j)
    // plus reachability y_j >= lam_{j+t}, with sum(y) = sum(x) + weight[step].
    let mut lo = vec![0usize; width];
    let mut hi = vec![0usize; width];
    for j in 0..width {
        let reach = if j + t < width { lam[j + t] } else { 0 };
        lo[j] = row[j].max(reach);
        hi[j] = lam[j].min(if j == 0 { usize::MAX } else { row[j - 1] });
        if lo[j] > hi[j] {
            return;
        }
    }
    let mut lo_suffix = vec![0usize; width + 1];
    let mut hi_suffix = vec![0usize; width + 1];
    for j in (0..width).rev() {
        lo_suffix[j] = lo_suffix[j + 1] + lo[j];
        hi_suffix[j] = hi_suffix[j + 1] + hi[j];
    }
    let target: usize = row.iter().sum::<usize>() + weight[step];
    let mut next = vec![0usize; width];
    gt_fill(&lo, &hi, &lo_suffix, &hi_suffix, &mut next, 0, target, &mut |y| {
        let mut owned = y.to_vec();
        std::mem::swap(row, &mut owned);
        gt_step(lam, row, weight, step + 1, strips_after, count);
        std::mem::swap(row, &mut owned);
    });
}

#[allow(clippy::too_many_arguments)]
fn gt_fill(
    lo: &[usize],
    hi: &[usize],
    lo_suffix: &[usize],
    hi_suffix: &[usize],
    next: &mut Vec<usize>,
    j: usize,
    remaining: usize,
    emit: &mut dyn FnMut(&[usize]),
) {
    if j == lo.len() {
        if remaining == 0 {
            emit(next);
        }
        return;
    }
    let floor = lo[j].max(remaining.saturating_sub(hi_suffix[j + 1]));
    let ceil = hi[j].min(remaining.saturating_sub(lo_suffix[j + 1]));
    if floor > ceil {
        return;
    }
    for v in floor..=ceil {
        next[j] = v;
        gt_fill(lo, hi, lo_suffix, hi_suffix, next, j + 1, remaining - v, emit);
    }
}

/// Kostka number `K_{lambda/mu, nu}` for a weak composition `nu`, as the
/// exact number of integer points of the GT polytope.
pub fn kostka(shape: &SkewShape, weight: &Composition) -> BigUint {
    count_gt_points(&GTSpec::new(shape, weight))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{parse_partition, partitions_of};

    fn p(text: &str) -> Partition {
        parse_partition(text).unwrap()
    }

    fn shape(outer: &str, inner: &str) -> SkewShape {
        SkewShape::new(p(outer), p(inner)).unwrap()
    }

    #[test]
    fn syt_counts_match_hook_length_dimension() {
        for n in 0..=9 {
            for lam in partitions_of(n) {
                let count = enumerate_syt(&SkewShape::straight(lam.clone())).len();
                assert_eq!(BigUint::from(count), lam.dimension(), "{lam:?}");
            }
        }
    }

    #[test]
    fn syt_examples() {
        assert_eq!(enumerate_syt(&shape("2,1", "")).len(), 2);
        assert_eq!(enumerate_syt(&shape("6", "")).len(), 1);
        assert_eq!(enumerate_syt(&shape("2,2", "1")).len(), 2);
        assert_eq!(enumerate_syt(&shape("", "")).len(), 1);
    }

    #[test]
    fn syt_entries_are_standard() {
        let tableaux = enumerate_syt(&shape("3,2,1", "1"));
        assert!(!tableaux.is_empty());
        for t in tableaux {
            assert!(t.is_semistandard());
            let mut seen: Vec<usize> = t.rows().iter().flatten().copied().collect();
            seen.sort_unstable();
            assert_eq!(seen, (1..=5).collect::<Vec<_>>());
        }
    }

    #[test]
    fn skew_syt_counts_match_brute_force() {
        for outer_n in 2..=7 {
            for outer in partitions_of(outer_n) {
                for inner_n in 0..outer_n {
                    for inner in partitions_of(inner_n) {
                        if !outer.contains(&inner) {
                            continue;
                        }
                        let sk = SkewShape::new(outer.clone(), inner.clone()).unwrap();
                        let n = sk.size();
                        let fast = enumerate_syt(&sk).len();
                        let slow = count_ssyt_brute(&sk, &vec![1; n]);
                        assert_eq!(BigUint::from(fast), slow, "{sk}");
                    }
                }
            }
        }
    }

    #[test]
    fn standardization_example() {
        // shape (4,3,2), type (3,3,3)
        let t = Tableau::new(
            shape("4,3,2", ""),
            vec![vec![1, 2, 3, 6], vec![4, 5, 9], vec![7, 8]],
        );
        let s = standardize_to_type(&t, &p("3,3,3")).unwrap();
        assert_eq!(s.rows(), &[vec![1, 1, 1, 2], vec![2, 2, 3], vec![3, 3]]);

        let t2 = Tableau::new(
            shape("4,3,2", ""),
            vec![vec![1, 2, 3, 4], vec![5, 6, 7], vec![8, 9]],
        );
        assert!(standardize_to_type(&t2, &p("3,3,3")).is_none());
    }

    #[test]
    fn standardization_with_unit_type_is_identity() {
        for t in enumerate_syt(&shape("3,2", "1")) {
            let s = standardize_to_type(&t, &p("1,1,1,1")).unwrap();
            assert_eq!(s.rows(), t.rows());
        }
    }

    #[test]
    fn standardization_counts_ssyt() {
        // enumerate_syt + standardize equals brute-force SSYT count for
        // partition weights
        for n in 1..=6 {
            for lam in partitions_of(n) {
                let st = SkewShape::straight(lam.clone());
                let syts = enumerate_syt(&st);
                for mu in partitions_of(n) {
                    let via_std = syts
                        .iter()
                        .filter(|t| standardize_to_type(t, &mu).is_some())
                        .count();
                    let brute = count_ssyt_brute(&st, mu.parts());
                    assert_eq!(BigUint::from(via_std), brute, "{lam:?} {mu:?}");
                }
            }
        }
    }

    #[test]
    fn reading_word_examples() {
        // LR tableau of shape (5,4,3)/(2,1), type (4,3,2)
        let t = Tableau::new(
            shape("5,4,3", "2,1"),
            vec![vec![1, 1, 1], vec![2, 2, 2], vec![1, 3, 3]],
        );
        assert_eq!(t.reading_word(), vec![1, 1, 1, 2, 2, 2, 3, 3, 1]);
        assert!(is_ballot(&t.reading_word()));

        let row = Tableau::new(shape("3", ""), vec![vec![1, 1, 2]]);
        assert_eq!(row.reading_word(), vec![2, 1, 1]);

        let empty = Tableau::new(shape("", ""), vec![]);
        assert!(empty.reading_word().is_empty());
    }

    #[test]
    fn ballot_examples() {
        assert!(is_ballot(&[1, 1, 1, 2, 2, 2, 3, 3, 1]));
        assert!(!is_ballot(&[2, 1]));
        assert!(is_ballot(&[]));
        assert!(is_ballot(&[1, 2, 1, 2]));
        assert!(!is_ballot(&[1, 2, 2]));
    }

    #[test]
    fn gt_trivial_cases() {
        // lambda = mu, empty weight: one point (the constant chain)
        let s = shape("3,1", "3,1");
        assert_eq!(kostka(&s, &Composition(vec![])), BigUint::one());
        // K_{lambda,lambda} = 1
        for n in 1..=7 {
            for lam in partitions_of(n) {
                let st = SkewShape::straight(lam.clone());
                let w = Composition(lam.parts().to_vec());
                assert_eq!(kostka(&st, &w), BigUint::one(), "{lam:?}");
            }
        }
        // size mismatch
        assert_eq!(
            kostka(&shape("3,1", ""), &Composition(vec![1, 1])),
            BigUint::zero()
        );
    }

    #[test]
    fn gt_small_examples() {
        assert_eq!(
            kostka(&shape("2,1", ""), &Composition(vec![1, 1, 1])),
            BigUint::from(2u32)
        );
        // K_{(2,2),(1,1,1,1)} = f^{(2,2)} = 2
        assert_eq!(
            kostka(&shape("2,2", ""), &Composition(vec![1, 1, 1, 1])),
            BigUint::from(2u32)
        );
    }

    #[test]
    fn kostka_displayed_shape_fixture() {
        // value fixed once by brute-force SSYT enumeration
        let st = shape("5,4,2", "");
        let w = Composition(vec![2, 3, 1, 3, 2]);
        assert_eq!(kostka(&st, &w), BigUint::from(21u32));
        assert_eq!(count_ssyt_brute(&st, w.parts()), BigUint::from(21u32));
    }

    #[test]
    fn kostka_unit_weight_is_dimension() {
        for n in 0..=10 {
            for lam in partitions_of(n) {
                let st = SkewShape::straight(lam.clone());
                let w = Composition(vec![1; n]);
                assert_eq!(kostka(&st, &w), lam.dimension(), "{lam:?}");
            }
        }
    }

    #[test]
    fn kostka_matches_brute_force_on_straight_shapes() {
        for n in 1..=6 {
            for lam in partitions_of(n) {
                let st = SkewShape::straight(lam.clone());
                for parts in 1..=4usize {
                    for w in crate::partition::compositions_of(n, parts, false) {
                        let fast = kostka(&st, &w);
                        let slow = count_ssyt_brute(&st, w.parts());
                        assert_eq!(fast, slow, "{lam:?} {w:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn kostka_matches_brute_force_on_skew_shapes() {
        for outer_n in 2..=6 {
            for outer in partitions_of(outer_n) {
                for inner_n in 1..outer_n {
                    for inner in partitions_of(inner_n) {
                        if !outer.contains(&inner) {
                            continue;
                        }
                        let sk = SkewShape::new(outer.clone(), inner.clone()).unwrap();
                        let size = sk.size();
                        for parts in 1..=3usize {
                            for w in crate::partition::compositions_of(size, parts, false) {
                                assert_eq!(
                                    kostka(&sk, &w),
                                    count_ssyt_brute(&sk, w.parts()),
                                    "{sk} {w:?}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn kostka_symmetric_under_weight_permutation() {
        for n in 1..=7 {
            for lam in partitions_of(n) {
                let st = SkewShape::straight(lam.clone());
                for w in partitions_of(n) {
                    if w.len() > 4 {
                        continue;
                    }
                    let base = kostka(&st, &Composition(w.parts().to_vec()));
                    let mut perm = w.parts().to_vec();
                    perm.reverse();
                    assert_eq!(base, kostka(&st, &Composition(perm)), "{lam:?} {w:?}");
                    if w.len() >= 2 {
                        let mut swapped = w.parts().to_vec();
                        swapped.swap(0, w.len() - 1);
                        assert_eq!(base, kostka(&st, &Composition(swapped)), "{lam:?}");
                    }
                }
            }
        }
    }
}
