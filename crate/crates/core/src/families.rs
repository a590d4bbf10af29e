//! Named query families for the scaling benchmark harness. Each family maps
//! a size `n` to one deterministic query so timing sweeps are reproducible.

use crate::kronecker::KronQuery;
use crate::partition::Partition;
use crate::plethysm::PlethQuery;

/// A balanced (Plancherel-like) partition of `n`: the largest staircase
/// that fits, with the remainder spread one box per row from the top.
pub fn balanced_partition(n: usize) -> Partition {
    if n == 0 {
        return Partition::empty();
    }
    let mut r = 1usize;
    while (r + 1) * (r + 2) / 2 <= n {
        r += 1;
    }
    let mut parts: Vec<usize> = (1..=r).rev().collect();
    let mut rest = n - r * (r + 1) / 2;
    // spread the remainder, keeping the sequence strictly staircase-ish
    let mut i = 0usize;
    while rest > 0 {
        parts[i % r] += 1;
        rest -= 1;
        i += 1;
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts)
}

/// Kronecker family with `aft(nu) = 2`: `lambda = mu` balanced,
/// `nu = (n-2, 1, 1)`. Defined for `n >= 5` (below that the column of nu
/// outgrows its first row and the aft drops).
pub fn kron_aft2_query(n: usize) -> Option<KronQuery> {
    if n < 5 {
        return None;
    }
    let balanced = balanced_partition(n);
    let nu = Partition::new(vec![n - 2, 1, 1]);
    Some(KronQuery::new(balanced.clone(), balanced, nu))
}

/// Plethysm family with `aft(lambda) = 1`: `lambda = (n-1, 1)`, `m = 2`,
/// `d = n/2`. Defined for even `n >= 10` (so the reduced path applies).
pub fn pleth_aft1_query(n: usize) -> Option<PlethQuery> {
    if n < 10 || !n.is_multiple_of(2) {
        return None;
    }
    Some(PlethQuery::new(
        Partition::new(vec![n - 1, 1]),
        n / 2,
        2,
    ))
}

/// LR family with three-row skew: `lambda = (3s, 2s, s)`,
/// `mu = nu = (2s, s)` for `n = 6s`.
pub fn lr_poly_query(n: usize) -> Option<(Partition, Partition, Partition)> {
    if n == 0 || !n.is_multiple_of(6) {
        return None;
    }
    let s = n / 6;
    Some((
        Partition::new(vec![3 * s, 2 * s, s]),
        Partition::new(vec![2 * s, s]),
        Partition::new(vec![2 * s, s]),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn balanced_partitions_are_balanced() {
        for n in 1..=80 {
            let lam = balanced_partition(n);
            assert_eq!(lam.size(), n);
            // aft grows with n: not a near-row shape
            if n >= 12 {
                assert!(lam.aft() > n / 4, "{n}: {lam:?}");
            }
            // roughly square
            assert!(lam.first() * lam.first() <= 4 * n + 4);
        }
    }

    #[test]
    fn family_queries_are_well_formed() {
        for n in [5usize, 10, 20, 33] {
            let q = kron_aft2_query(n).unwrap();
            assert_eq!(q.nu.aft(), 2);
            assert_eq!(q.lambda.size(), n);
        }
        assert!(kron_aft2_query(4).is_none());

        let q = pleth_aft1_query(12).unwrap();
        assert_eq!(q.lambda.aft(), 1);
        assert_eq!(q.d * q.m, 12);
        assert!(pleth_aft1_query(11).is_none());

        let (l, m, v) = lr_poly_query(12).unwrap();
        assert_eq!(l.size(), m.size() + v.size());
        assert!(lr_poly_query(10).is_none());
    }

    #[test]
    fn lr_family_is_positive() {
        for s in 1..=4usize {
            let (l, m, v) = lr_poly_query(6 * s).unwrap();
            assert!(!crate::lr::lr_via_polytope(&l, &m, &v).is_zero(), "s={s}");
        }
    }
}
