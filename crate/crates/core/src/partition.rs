//! Integer partitions and their basic statistics.
//!
//! A [`Partition`] is stored canonically: weakly decreasing positive parts,
//! no trailing zeros, and the empty partition is the unique partition of 0.
//! All dimension and counting arithmetic is exact over [`BigUint`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::ParseError;

/// A partition `lambda = (lambda_1 >= lambda_2 >= ... >= 1)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts; trailing zeros are
    /// stripped. Panics on an invalid sequence (programmer error; user input
    /// goes through [`parse_partition`]).
    pub fn new(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0),
            "invalid partition parts {parts:?}"
        );
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of (nonzero) parts, `ell(lambda)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|lambda|`, the number being partitioned.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `lambda_{i+1}` with zero padding beyond the length (0-indexed).
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// First part, or 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.part(0)
    }

    /// Conjugate partition: `lambda'_j = #{i : lambda_i >= j}`.
    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        let mut parts = Vec::with_capacity(cols);
        for j in 1..=cols {
            parts.push(self.parts.iter().take_while(|&&p| p >= j).count());
        }
        Partition { parts }
    }

    /// True when `other` fits inside `self` row by row.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len()
            && other
                .parts
                .iter()
                .zip(&self.parts)
                .all(|(&o, &s)| o <= s)
    }

    /// `aft(lambda) = |lambda| - max(lambda_1, ell(lambda))`.
    pub fn aft(&self) -> usize {
        self.size() - self.first().max(self.len())
    }

    /// Durfee square size: `max{i : lambda_i >= i}`.
    pub fn durfee(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i)
            .count()
    }

    /// Frobenius coordinates `(a_1,..,a_d | b_1,..,b_d)` with
    /// `a_i = lambda_i - i` and `b_i = lambda'_i - i`.
    pub fn frobenius(&self) -> FrobeniusCoords {
        let conj = self.conjugate();
        let d = self.durfee();
        let arms = (0..d).map(|i| self.parts[i] - (i + 1)).collect();
        let legs = (0..d).map(|i| conj.parts[i] - (i + 1)).collect();
        FrobeniusCoords { arms, legs }
    }

    /// Hook lengths `h_(i,j) = lambda_i - i + lambda'_j - j + 1` per box.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &row)| {
                (0..row)
                    .map(|j| (row - (j + 1)) + (conj.parts[j] - (i + 1)) + 1)
                    .collect()
            })
            .collect()
    }

    /// Number of standard Young tableaux `f^lambda` by the hook-length
    /// formula `n! / prod h_u`. The division is exact; a debug assertion
    /// checks the zero remainder.
    pub fn dimension(&self) -> BigUint {
        let n = self.size();
        let numerator = factorial(n);
        let mut denominator = BigUint::one();
        for row in self.hook_lengths() {
            for h in row {
                denominator *= BigUint::from(h);
            }
        }
        debug_assert!((&numerator % &denominator).is_zero());
        numerator / denominator
    }

    /// Partition obtained by removing `boxes[i]` boxes from row `i`;
    /// `None` when the result is not a partition.
    pub fn remove_rowwise(&self, boxes: &[usize]) -> Option<Partition> {
        let mut parts = self.parts.clone();
        for (i, &b) in boxes.iter().enumerate() {
            if b > parts[i] {
                return None;
            }
            parts[i] -= b;
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0) {
            Some(Partition { parts })
        } else {
            None
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "[]");
        }
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_partition(s)
    }
}

/// Dominance order: true when `a` dominates `b` (`a >= b` in all prefix
/// sums). Only meaningful for partitions of equal size.
pub fn dominates(a: &Partition, b: &Partition) -> bool {
    let mut sa = 0usize;
    let mut sb = 0usize;
    for i in 0..a.len().max(b.len()) {
        sa += a.part(i);
        sb += b.part(i);
        if sa < sb {
            return false;
        }
    }
    true
}

/// Frobenius coordinates of a partition: strictly decreasing arm and leg
/// lengths of the diagonal boxes, with `sum(a_i + b_i + 1) = |lambda|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusCoords {
    pub arms: Vec<usize>,
    pub legs: Vec<usize>,
}

impl FrobeniusCoords {
    /// Durfee size `d(lambda)`.
    pub fn durfee(&self) -> usize {
        self.arms.len()
    }
}

/// A weak composition: finite sequence of nonnegative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Composition(pub Vec<usize>);

impl Composition {
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All parts >= 1.
    pub fn is_strong(&self) -> bool {
        self.0.iter().all(|&p| p > 0)
    }

    /// Sorts the parts decreasingly and drops zeros.
    pub fn sorted(&self) -> Partition {
        let mut parts: Vec<usize> = self.0.iter().copied().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "[]");
        }
        let strs: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

/// Parses a comma/space-separated list of positive integers, optionally
/// bracketed. Trailing zeros are canonicalized away; `[]`, `0` and the empty
/// string denote the empty partition.
pub fn parse_partition(text: &str) -> Result<Partition, ParseError> {
    let parts = parse_uint_list(text)?;
    // Strip trailing zeros, then reject zeros embedded mid-sequence.
    let mut parts = parts;
    while parts.last() == Some(&0) {
        parts.pop();
    }
    if parts.contains(&0) {
        return Err(ParseError::NonPositivePart);
    }
    if !parts.windows(2).all(|w| w[0] >= w[1]) {
        return Err(ParseError::NotDecreasing);
    }
    Ok(Partition { parts })
}

/// Parses a weak composition: like [`parse_partition`] but any order and
/// zeros are kept.
pub fn parse_composition(text: &str) -> Result<Composition, ParseError> {
    Ok(Composition(parse_uint_list(text)?))
}

fn parse_uint_list(text: &str) -> Result<Vec<usize>, ParseError> {
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .unwrap_or(trimmed);
    let mut parts = Vec::new();
    for token in inner.split(|c: char| c == ',' || c.is_whitespace()) {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        let value: usize = token
            .parse()
            .map_err(|_| ParseError::InvalidToken(token.to_string()))?;
        parts.push(value);
    }
    Ok(parts)
}

/// Optional constraints for [`partitions_of_constrained`].
#[derive(Clone, Copy, Debug, Default)]
pub struct PartitionConstraints {
    pub max_part: Option<usize>,
    pub max_length: Option<usize>,
}

/// Iterates over all partitions of `n` in reverse-lexicographic order
/// (largest first part first).
pub fn partitions_of(n: usize) -> Partitions {
    partitions_of_constrained(n, PartitionConstraints::default())
}

/// Like [`partitions_of`] with upper bounds on the part size and the number
/// of parts.
pub fn partitions_of_constrained(n: usize, constraints: PartitionConstraints) -> Partitions {
    let max_part = constraints.max_part.unwrap_or(n).min(n);
    let max_length = constraints.max_length.unwrap_or(n).min(n);
    Partitions {
        n,
        max_part,
        max_length,
        stack: Vec::new(),
        current: Vec::new(),
        started: false,
        done: false,
    }
}

/// Iterator state for partition generation: a depth-first descent where each
/// level picks the next part from large to small.
pub struct Partitions {
    n: usize,
    max_part: usize,
    max_length: usize,
    // stack[i] = (remaining sum before level i, part chosen at level i)
    stack: Vec<(usize, usize)>,
    current: Vec<usize>,
    started: bool,
    done: bool,
}

impl Partitions {
    /// Largest feasible part at a level: bounded by the previous part, the
    /// remaining sum, and completability within the remaining length budget.
    fn descend(&mut self, mut remaining: usize, mut cap: usize) -> bool {
        loop {
            if remaining == 0 {
                return true;
            }
            let depth = self.current.len();
            if depth >= self.max_length {
                return false;
            }
            let slots_left = self.max_length - depth;
            // part p needs remaining - p <= p * (slots_left - 1)
            let p = cap.min(remaining);
            if p < remaining.div_ceil(slots_left) {
                return false;
            }
            self.stack.push((remaining, p));
            self.current.push(p);
            remaining -= p;
            cap = p;
        }
    }

    /// Backtracks to the deepest level whose part can still be decremented,
    /// then descends again. Returns false when exhausted.
    fn advance(&mut self) -> bool {
        loop {
            let Some((remaining, p)) = self.stack.pop() else {
                return false;
            };
            self.current.pop();
            let slots_left = self.max_length - self.current.len();
            let min_p = remaining.div_ceil(slots_left);
            if p > min_p {
                let np = p - 1;
                self.stack.push((remaining, np));
                self.current.push(np);
                if self.descend(remaining - np, np) {
                    return true;
                }
                // could not complete below np: retry from np
                continue;
            }
        }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let ok = if !self.started {
            self.started = true;
            if self.n == 0 {
                self.done = true;
                return Some(Partition::empty());
            }
            self.descend(self.n, self.max_part)
        } else {
            self.advance()
        };
        if !ok {
            self.done = true;
            return None;
        }
        Some(Partition {
            parts: self.current.clone(),
        })
    }
}

/// Iterates over length-`r` compositions of `n`; all parts >= 1 when
/// `strong`. The order is lexicographic in the parts vector.
pub fn compositions_of(n: usize, r: usize, strong: bool) -> Compositions {
    assert!(r >= 1, "compositions need at least one slot");
    Compositions {
        n,
        r,
        min_part: usize::from(strong),
        current: Vec::new(),
        started: false,
        done: false,
    }
}

pub struct Compositions {
    n: usize,
    r: usize,
    min_part: usize,
    current: Vec<usize>,
    started: bool,
    done: bool,
}

impl Compositions {
    fn fill_min(&mut self, mut remaining: usize) -> bool {
        // Complete the current prefix with the lexicographically smallest tail.
        while self.current.len() < self.r {
            let slots_after = self.r - self.current.len() - 1;
            let p = if slots_after == 0 {
                remaining
            } else {
                self.min_part
            };
            if p < self.min_part || p > remaining || remaining - p < slots_after * self.min_part {
                return false;
            }
            self.current.push(p);
            remaining -= p;
        }
        remaining == 0
    }
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if !self.fill_min(self.n) {
                self.done = true;
                return None;
            }
            return Some(Composition(self.current.clone()));
        }
        // Increment the rightmost non-final slot that still has headroom.
        loop {
            if self.current.len() <= 1 {
                self.done = true;
                return None;
            }
            let last = self.current.pop().unwrap();
            if last > self.min_part {
                let i = self.current.len() - 1;
                self.current[i] += 1;
                let used: usize = self.current.iter().sum();
                if self.fill_min(self.n - used) {
                    return Some(Composition(self.current.clone()));
                }
                // fill_min cannot fail here: we freed at least one unit
                unreachable!("composition refill failed");
            }
        }
    }
}

/// `p(n)` via the Euler pentagonal-number recurrence, exact.
pub fn partition_count(n: usize) -> BigUint {
    let mut table: Vec<BigUint> = Vec::with_capacity(n + 1);
    table.push(BigUint::one());
    for i in 1..=n {
        let mut acc = num_bigint::BigInt::zero();
        let mut k: i64 = 1;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > i {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += sign * num_bigint::BigInt::from(table[i - g1].clone());
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= i {
                acc += sign * num_bigint::BigInt::from(table[i - g2].clone());
            }
            k += 1;
        }
        let (sign, mag) = acc.into_parts();
        assert!(sign != num_bigint::Sign::Minus, "p({i}) went negative");
        table.push(mag);
    }
    table.pop().unwrap()
}

/// Exact `n!`.
pub fn factorial(n: usize) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=n {
        acc *= BigUint::from(i);
    }
    acc
}

/// Exact binomial coefficient; 0 when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn parse_basic() {
        assert_eq!(parse_partition("5,4,2").unwrap(), p(&[5, 4, 2]));
        assert_eq!(parse_partition("[3,3]").unwrap(), p(&[3, 3]));
        assert_eq!(parse_partition("").unwrap(), Partition::empty());
        assert_eq!(parse_partition("[]").unwrap(), Partition::empty());
        assert_eq!(parse_partition("0").unwrap(), Partition::empty());
        assert_eq!(parse_partition("3 2 1").unwrap(), p(&[3, 2, 1]));
        assert_eq!(parse_partition("2,4"), Err(ParseError::NotDecreasing));
        assert_eq!(parse_partition("3,0,1"), Err(ParseError::NonPositivePart));
        assert!(matches!(
            parse_partition("3,x"),
            Err(ParseError::InvalidToken(_))
        ));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[5, 4, 2]).conjugate(), p(&[3, 3, 2, 2, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[6]).conjugate(), p(&[1, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn conjugate_is_involution() {
        for n in 0..=12 {
            for lam in partitions_of(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
    }

    #[test]
    fn frobenius_examples() {
        let fc = p(&[3, 2]).frobenius();
        assert_eq!(fc.arms, vec![2, 0]);
        assert_eq!(fc.legs, vec![1, 0]);
        let fc = p(&[1]).frobenius();
        assert_eq!(fc.arms, vec![0]);
        assert_eq!(fc.legs, vec![0]);
        let fc = Partition::empty().frobenius();
        assert!(fc.arms.is_empty() && fc.legs.is_empty());
    }

    #[test]
    fn frobenius_sizes_add_up() {
        for n in 0..=14 {
            for lam in partitions_of(n) {
                let fc = lam.frobenius();
                let total: usize = fc
                    .arms
                    .iter()
                    .zip(&fc.legs)
                    .map(|(&a, &b)| a + b + 1)
                    .sum();
                assert_eq!(total, n);
                assert!(fc.arms.windows(2).all(|w| w[0] > w[1]));
                assert!(fc.legs.windows(2).all(|w| w[0] > w[1]));
            }
        }
    }

    #[test]
    fn aft_examples() {
        assert_eq!(p(&[6, 2]).aft(), 2);
        assert_eq!(p(&[1, 1, 1, 1]).aft(), 0);
        assert_eq!(p(&[3, 2, 1]).aft(), 3);
        assert_eq!(Partition::empty().aft(), 0);
    }

    #[test]
    fn durfee_examples() {
        assert_eq!(p(&[3, 2, 1]).durfee(), 2);
        assert_eq!(p(&[7]).durfee(), 1);
        assert_eq!(Partition::empty().durfee(), 0);
        assert_eq!(p(&[4, 4, 4, 4]).durfee(), 4);
    }

    #[test]
    fn hook_length_examples() {
        assert_eq!(p(&[2, 1]).hook_lengths(), vec![vec![3, 1], vec![1]]);
        assert_eq!(p(&[1]).hook_lengths(), vec![vec![1]]);
        assert_eq!(p(&[2, 2]).hook_lengths(), vec![vec![3, 2], vec![2, 1]]);
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(p(&[7]).dimension(), BigUint::from(1u32));
        assert_eq!(p(&[3, 3]).dimension(), BigUint::from(5u32));
        // hooks (1+a, 1^b) have dimension binom(a+b, b)
        for a in 0..=6usize {
            for b in 0..=6usize {
                let mut parts = vec![1 + a];
                parts.extend(std::iter::repeat_n(1, b));
                assert_eq!(Partition::new(parts).dimension(), binomial(a + b, b));
            }
        }
    }

    #[test]
    fn dimension_conjugation_invariant() {
        for n in 0..=14 {
            for lam in partitions_of(n) {
                assert_eq!(lam.dimension(), lam.conjugate().dimension());
            }
        }
    }

    #[test]
    fn partitions_of_examples() {
        assert_eq!(partitions_of(5).count(), 7);
        let of_zero: Vec<_> = partitions_of(0).collect();
        assert_eq!(of_zero, vec![Partition::empty()]);
        let constrained: Vec<_> = partitions_of_constrained(
            4,
            PartitionConstraints {
                max_part: None,
                max_length: Some(2),
            },
        )
        .collect();
        assert_eq!(constrained, vec![p(&[4]), p(&[3, 1]), p(&[2, 2])]);
    }

    #[test]
    fn partitions_reverse_lex_order_and_validity() {
        for n in 0..=12 {
            let all: Vec<_> = partitions_of(n).collect();
            for w in all.windows(2) {
                assert!(w[0] > w[1], "{:?} !> {:?}", w[0], w[1]);
            }
            for lam in &all {
                assert_eq!(lam.size(), n);
            }
            let mut dedup = all.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), all.len());
        }
    }

    #[test]
    fn partition_counts_match_pentagonal_recurrence() {
        // Exhaustive generation up to 50, spot check at 60. The recurrence
        // itself extends far beyond what generation can enumerate.
        for n in 0..=50 {
            let generated = partitions_of(n).count();
            assert_eq!(BigUint::from(generated), partition_count(n), "n={n}");
        }
        assert_eq!(partitions_of(60).count(), 966_467);
        assert_eq!(partition_count(60), BigUint::from(966_467u32));
    }

    #[test]
    fn partition_count_vs_asymptotic_sanity() {
        // Hardy-Ramanujan: p(n) ~ exp(pi sqrt(2n/3)) / (4 n sqrt(3)); the
        // asymptotic is a sanity band, not an exact check.
        let n = 200usize;
        let p200: f64 = partition_count(n).to_string().parse().unwrap();
        let hr = (std::f64::consts::PI * (2.0 * n as f64 / 3.0).sqrt()).exp()
            / (4.0 * n as f64 * 3.0f64.sqrt());
        let ratio = p200 / hr;
        assert!(ratio > 0.5 && ratio < 2.0, "ratio {ratio}");
    }

    #[test]
    fn constrained_generation_matches_filter() {
        for n in 0..=10 {
            for max_part in 1..=n.max(1) {
                for max_length in 1..=n.max(1) {
                    let fast: Vec<_> = partitions_of_constrained(
                        n,
                        PartitionConstraints {
                            max_part: Some(max_part),
                            max_length: Some(max_length),
                        },
                    )
                    .collect();
                    let slow: Vec<_> = partitions_of(n)
                        .filter(|lam| lam.first() <= max_part && lam.len() <= max_length)
                        .collect();
                    assert_eq!(fast, slow, "n={n} mp={max_part} ml={max_length}");
                }
            }
        }
    }

    #[test]
    fn compositions_examples() {
        let strong: Vec<_> = compositions_of(3, 2, true).collect();
        assert_eq!(
            strong,
            vec![Composition(vec![1, 2]), Composition(vec![2, 1])]
        );
        let weak: Vec<_> = compositions_of(2, 2, false).collect();
        assert_eq!(
            weak,
            vec![
                Composition(vec![0, 2]),
                Composition(vec![1, 1]),
                Composition(vec![2, 0])
            ]
        );
        let zero: Vec<_> = compositions_of(0, 1, false).collect();
        assert_eq!(zero, vec![Composition(vec![0])]);
        assert_eq!(compositions_of(1, 3, true).count(), 0);
    }

    #[test]
    fn composition_counts() {
        for n in 0..=9 {
            for r in 1..=5 {
                let strong = compositions_of(n, r, true).count();
                let weak = compositions_of(n, r, false).count();
                let expect_strong = if n >= r {
                    binomial(n - 1, r - 1)
                } else {
                    BigUint::zero()
                };
                assert_eq!(BigUint::from(strong), expect_strong, "strong n={n} r={r}");
                assert_eq!(BigUint::from(weak), binomial(n + r - 1, r - 1), "weak");
            }
        }
    }

    #[test]
    fn sum_of_squared_dimensions_is_factorial() {
        for n in 0..=14 {
            let mut acc = BigUint::zero();
            for lam in partitions_of(n) {
                let d = lam.dimension();
                acc += &d * &d;
            }
            assert_eq!(acc, factorial(n), "n={n}");
        }
    }

    #[test]
    fn dominance_basics() {
        assert!(dominates(&p(&[4]), &p(&[2, 2])));
        assert!(dominates(&p(&[2, 2]), &p(&[2, 1, 1])));
        assert!(!dominates(&p(&[2, 2]), &p(&[3, 1])));
        assert!(dominates(&p(&[3, 1]), &p(&[3, 1])));
    }
}
