//! Exhaustive oracle-equivalence and invariant sweeps. These are the same
//! checks the acceptance suite runs; the CLI surfaces them as `selftest`.
//!
//! Every sweep returns the number of instances checked and the failing
//! instances (empty on success); generation order is smallest-first, so the
//! first failure is a minimal counterexample.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rayon::prelude::*;

use crate::growth::{check_aft_bounds, check_lr_ratio_bound, check_regev_bound};
use crate::kronecker::{kronecker_character, kronecker_jt, KronQuery};
use crate::lr::{lr_small_skew, lr_via_polytope, lr_via_tableaux};
use crate::partition::{
    binomial, compositions_of, factorial, partitions_of, Composition, Partition,
};
use crate::plethysm::{plethysm_hh, plethysm_hh_reduced, PlethQuery};
use crate::symfunc::{gen_s, multiply, plethysm_hd_hm, schur_expand};
use crate::tableaux::{count_ssyt_brute, kostka, SkewShape};

#[derive(Clone, Debug)]
pub struct SweepReport {
    pub name: &'static str,
    pub checked: u64,
    pub failures: Vec<String>,
}

impl SweepReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn from_results(name: &'static str, results: Vec<Option<String>>) -> Self {
        let checked = results.len() as u64;
        let mut failures: Vec<String> = results.into_iter().flatten().collect();
        failures.sort();
        failures.truncate(16);
        SweepReport {
            name,
            checked,
            failures,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

/// Kronecker oracle equivalence: `kronecker_jt == kronecker_character`,
/// exhaustively for `n` in `2..=exhaustive_max_n` and for all triples with
/// `aft(nu) <= cap` at the listed `(n, cap)` pairs. `sample` optionally
/// subsamples the restricted set (seeded) for quick runs.
pub fn sweep_kron_oracle_equiv(
    exhaustive_max_n: usize,
    restricted: &[(usize, usize)],
    sample: Option<(usize, u64)>,
) -> SweepReport {
    let mut queries: Vec<KronQuery> = Vec::new();
    for n in 2..=exhaustive_max_n {
        for lam in partitions_of(n) {
            for mu in partitions_of(n) {
                for nu in partitions_of(n) {
                    queries.push(KronQuery::new(lam.clone(), mu.clone(), nu.clone()));
                }
            }
        }
    }
    let mut restricted_queries: Vec<KronQuery> = Vec::new();
    for &(n, cap) in restricted {
        for nu in partitions_of(n) {
            if nu.aft() > cap {
                continue;
            }
            for lam in partitions_of(n) {
                for mu in partitions_of(n) {
                    restricted_queries.push(KronQuery::new(lam.clone(), mu.clone(), nu.clone()));
                }
            }
        }
    }
    if let Some((cap, seed)) = sample {
        if restricted_queries.len() > cap {
            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            restricted_queries.shuffle(&mut rng);
            restricted_queries.truncate(cap);
        }
    }
    queries.extend(restricted_queries);

    let results: Vec<Option<String>> = queries
        .par_iter()
        .map(|q| {
            let jt = kronecker_jt(q).expect("sizes match");
            let ch = kronecker_character(q).expect("sizes match");
            (jt != ch).then(|| format!("jt={jt} char={ch} at {q:?}"))
        })
        .collect();
    SweepReport::from_results("kronecker jt vs character", results)
}

/// LR three-way agreement plus the product-expansion oracle for all
/// `|mu| + |nu| <= max_total`; the small-skew route joins when
/// `|nu| <= small_skew_max`.
pub fn sweep_lr_agreement(max_total: usize, small_skew_max: usize) -> SweepReport {
    let mut pairs: Vec<(Partition, Partition)> = Vec::new();
    for total in 2..=max_total {
        for m in 1..total {
            for mu in partitions_of(m) {
                for nu in partitions_of(total - m) {
                    pairs.push((mu.clone(), nu.clone()));
                }
            }
        }
    }
    let results: Vec<Option<String>> = pairs
        .par_iter()
        .map(|(mu, nu)| {
            let total = mu.size() + nu.size();
            let prod = multiply(&gen_s(mu, total), &gen_s(nu, total)).expect("same vars");
            let expansion = schur_expand(&prod);
            for lam in partitions_of(total) {
                let expect = expansion
                    .get(&lam)
                    .cloned()
                    .unwrap_or_default()
                    .to_biguint()
                    .expect("LR coefficients are nonnegative");
                let tab = lr_via_tableaux(&lam, mu, nu);
                let poly = lr_via_polytope(&lam, mu, nu);
                if tab != expect || poly != expect {
                    return Some(format!(
                        "lr mismatch at lambda={lam:?} mu={mu:?} nu={nu:?}: \
                         tableaux={tab} polytope={poly} oracle={expect}"
                    ));
                }
                if nu.size() <= small_skew_max {
                    let small = lr_small_skew(&lam, mu, nu);
                    if small != expect {
                        return Some(format!(
                            "small-skew mismatch at lambda={lam:?} mu={mu:?} nu={nu:?}: \
                             {small} vs {expect}"
                        ));
                    }
                }
            }
            None
        })
        .collect();
    SweepReport::from_results("LR three-way + oracle", results)
}

/// Kostka GT count vs brute-force SSYT enumeration for all skew shapes with
/// `|lambda| <= max_outer` and all weak compositions of the skew size (up to
/// `size` parts; extra zero parts change nothing), plus the unit-weight
/// column `K_{lambda,(1^n)} = f^lambda` for `n <= dim_max_n`.
pub fn sweep_kostka(max_outer: usize, dim_max_n: usize) -> SweepReport {
    let mut shapes: Vec<SkewShape> = Vec::new();
    for n in 1..=max_outer {
        for lam in partitions_of(n) {
            for m in 0..=n {
                for mu in partitions_of(m) {
                    if lam.contains(&mu) && m < n {
                        shapes.push(SkewShape::new(lam.clone(), mu.clone()).unwrap());
                    }
                }
            }
        }
    }
    let mut results: Vec<Option<String>> = shapes
        .par_iter()
        .map(|shape| {
            let size = shape.size();
            for parts in 1..=size {
                for w in compositions_of(size, parts, false) {
                    let fast = kostka(shape, &w);
                    let slow = count_ssyt_brute(shape, w.parts());
                    if fast != slow {
                        return Some(format!(
                            "kostka mismatch at {shape} weight {w}: gt={fast} brute={slow}"
                        ));
                    }
                }
            }
            None
        })
        .collect();
    for n in 0..=dim_max_n {
        for lam in partitions_of(n) {
            let st = SkewShape::straight(lam.clone());
            let k = kostka(&st, &Composition(vec![1; n]));
            results.push(
                (k != lam.dimension())
                    .then(|| format!("K(lambda,1^n) != f^lambda at {lam:?}: {k}")),
            );
        }
    }
    SweepReport::from_results("Kostka GT vs brute force", results)
}

/// Plethysm: general evaluator vs the symmetric-function oracle for all
/// `lambda |- dm <= dm_max` with `ell(lambda) <= max_len`, the reduced
/// evaluator on its overlap region (`dm <= overlap_dm_max`, `aft <= 1`,
/// `d > 4`), and the principal-specialization sum rule for `k <= 4`.
pub fn sweep_plethysm(dm_max: usize, max_len: usize, overlap_dm_max: usize) -> SweepReport {
    let mut dm_pairs: Vec<(usize, usize)> = Vec::new();
    for d in 2..=dm_max / 2 {
        for m in 2..=dm_max / d {
            dm_pairs.push((d, m));
        }
    }
    let mut results: Vec<Option<String>> = dm_pairs
        .par_iter()
        .map(|&(d, m)| {
            let k = max_len.min(d * m);
            let table = match plethysm_hd_hm(d, m, k) {
                Ok(t) => t,
                Err(e) => return Some(format!("oracle failed at d={d} m={m}: {e}")),
            };
            for lam in partitions_of(d * m) {
                if lam.len() > k {
                    continue;
                }
                let expect = table
                    .get(&lam)
                    .cloned()
                    .unwrap_or_default()
                    .to_biguint()
                    .expect("plethysm coefficients are nonnegative");
                let got = plethysm_hh(&PlethQuery::new(lam.clone(), d, m)).expect("sizes");
                if got != expect {
                    return Some(format!(
                        "plethysm mismatch at lambda={lam:?} d={d} m={m}: {got} vs {expect}"
                    ));
                }
            }
            // principal specialization: sum_lambda a * s_lambda(1^k) equals
            // binom(binom(m+k-1, m) + d - 1, d)
            if k <= 4 {
                let mut acc = BigUint::zero();
                for lam in partitions_of(d * m) {
                    if lam.len() > k {
                        continue;
                    }
                    let a = plethysm_hh(&PlethQuery::new(lam.clone(), d, m)).expect("sizes");
                    if a.is_zero() {
                        continue;
                    }
                    acc += a * schur_principal_specialization(&lam, k);
                }
                let inner: usize = binomial(m + k - 1, m).try_into().unwrap();
                let expect = binomial(inner + d - 1, d);
                if acc != expect {
                    return Some(format!(
                        "principal specialization sum rule fails at d={d} m={m} k={k}: \
                         {acc} vs {expect}"
                    ));
                }
            }
            None
        })
        .collect();

    // reduced path on the overlap region
    let mut overlap: Vec<PlethQuery> = Vec::new();
    for d in 5..=overlap_dm_max {
        for m in 1..=overlap_dm_max / d {
            let n = d * m;
            overlap.push(PlethQuery::new(Partition::new(vec![n]), d, m));
            if n >= 2 {
                overlap.push(PlethQuery::new(Partition::new(vec![n - 1, 1]), d, m));
            }
        }
    }
    let overlap_results: Vec<Option<String>> = overlap
        .par_iter()
        .map(|q| {
            let general = plethysm_hh(q).expect("sizes");
            let reduced = plethysm_hh_reduced(q).expect("preconditions");
            (general != reduced).then(|| {
                format!(
                    "reduced mismatch at {:?} d={} m={}: general={general} reduced={reduced}",
                    q.lambda, q.d, q.m
                )
            })
        })
        .collect();
    results.extend(overlap_results);
    SweepReport::from_results("plethysm vs oracle + reduced overlap", results)
}

/// `s_lambda(1,..,1)` with `k` ones: SSYT count with entries up to `k`.
fn schur_principal_specialization(lambda: &Partition, k: usize) -> BigUint {
    let mut count = BigUint::zero();
    crate::tableaux::for_each_ssyt(&SkewShape::straight(lambda.clone()), k, |_| {
        count += BigUint::one();
    });
    count
}

/// The identity suite: squared dimensions, the weighted LR identity, the
/// conjugation invariance of dimensions, and the S3 plus double-transpose
/// invariance of Kronecker coefficients.
pub fn sweep_identities(
    sq_max_n: usize,
    lr_weighted_max_n: usize,
    conj_max_n: usize,
    kron_sym_max_n: usize,
) -> SweepReport {
    let mut results: Vec<Option<String>> = Vec::new();
    for n in 0..=sq_max_n {
        let mut acc = BigUint::zero();
        for lam in partitions_of(n) {
            let d = lam.dimension();
            acc += &d * &d;
        }
        results.push((acc != factorial(n)).then(|| format!("sum f^2 != n! at n={n}")));
    }
    for n in 0..=conj_max_n {
        for lam in partitions_of(n) {
            results.push(
                (lam.dimension() != lam.conjugate().dimension())
                    .then(|| format!("f^lambda != f^lambda' at {lam:?}")),
            );
        }
    }
    // sum_lambda c^lambda_{mu nu} f^lambda = binom(n, m) f^mu f^nu
    let mut pairs: Vec<(Partition, Partition)> = Vec::new();
    for n in 2..=lr_weighted_max_n {
        for m in 1..n {
            for mu in partitions_of(m) {
                for nu in partitions_of(n - m) {
                    pairs.push((mu.clone(), nu.clone()));
                }
            }
        }
    }
    let weighted: Vec<Option<String>> = pairs
        .par_iter()
        .map(|(mu, nu)| {
            let n = mu.size() + nu.size();
            let mut acc = BigUint::zero();
            for lam in partitions_of(n) {
                let c = lr_via_tableaux(&lam, mu, nu);
                if !c.is_zero() {
                    acc += c * lam.dimension();
                }
            }
            let expect = binomial(n, mu.size()) * mu.dimension() * nu.dimension();
            (acc != expect)
                .then(|| format!("weighted LR identity fails at mu={mu:?} nu={nu:?}"))
        })
        .collect();
    results.extend(weighted);

    let mut triples: Vec<KronQuery> = Vec::new();
    for n in 1..=kron_sym_max_n {
        for lam in partitions_of(n) {
            for mu in partitions_of(n) {
                for nu in partitions_of(n) {
                    triples.push(KronQuery::new(lam.clone(), mu.clone(), nu.clone()));
                }
            }
        }
    }
    let sym: Vec<Option<String>> = triples
        .par_iter()
        .map(|q| {
            let base = kronecker_character(q).expect("sizes");
            let reorders = [
                KronQuery::new(q.mu.clone(), q.nu.clone(), q.lambda.clone()),
                KronQuery::new(q.nu.clone(), q.lambda.clone(), q.mu.clone()),
                KronQuery::new(q.lambda.clone(), q.nu.clone(), q.mu.clone()),
                KronQuery::new(q.nu.clone(), q.mu.clone(), q.lambda.clone()),
                KronQuery::new(q.mu.clone(), q.lambda.clone(), q.nu.clone()),
            ];
            for r in &reorders {
                if kronecker_character(r).expect("sizes") != base {
                    return Some(format!("S3 symmetry fails at {q:?}"));
                }
            }
            let transposed = [
                KronQuery::new(q.lambda.clone(), q.mu.conjugate(), q.nu.conjugate()),
                KronQuery::new(q.lambda.conjugate(), q.mu.clone(), q.nu.conjugate()),
                KronQuery::new(q.lambda.conjugate(), q.mu.conjugate(), q.nu.clone()),
            ];
            for r in &transposed {
                if kronecker_character(r).expect("sizes") != base {
                    return Some(format!("double-transpose invariance fails at {q:?}"));
                }
            }
            None
        })
        .collect();
    results.extend(sym);
    SweepReport::from_results("identity suite", results)
}

/// Proven-bound verification: the aft bounds, the Regev bound, and the LR
/// dimension-ratio bound on positive triples.
pub fn sweep_bounds(
    aft_max_n: usize,
    aft_cap: usize,
    regev_max_n: usize,
    lr_ratio_max_n: usize,
) -> SweepReport {
    let ns: Vec<usize> = (1..=aft_max_n).collect();
    let mut results: Vec<Option<String>> = ns
        .par_iter()
        .map(|&n| {
            for lam in partitions_of(n) {
                if lam.aft() > aft_cap {
                    continue;
                }
                let (lo, hi) = check_aft_bounds(&lam);
                if !lo || !hi {
                    return Some(format!("aft bound fails at {lam:?} (lo={lo}, hi={hi})"));
                }
            }
            None
        })
        .collect();
    for n in 0..=regev_max_n {
        for lam in partitions_of(n) {
            results
                .push((!check_regev_bound(&lam)).then(|| format!("Regev bound fails at {lam:?}")));
        }
    }
    let mut triples: Vec<(Partition, Partition, Partition)> = Vec::new();
    for n in 2..=lr_ratio_max_n {
        for m in 1..n {
            for mu in partitions_of(m) {
                for nu in partitions_of(n - m) {
                    for lam in partitions_of(n) {
                        triples.push((lam.clone(), mu.clone(), nu.clone()));
                    }
                }
            }
        }
    }
    let ratio: Vec<Option<String>> = triples
        .par_iter()
        .map(|(lam, mu, nu)| {
            (!check_lr_ratio_bound(lam, mu, nu).expect("sizes"))
                .then(|| format!("LR ratio bound fails at {lam:?} {mu:?} {nu:?}"))
        })
        .collect();
    results.extend(ratio);
    SweepReport::from_results("proven bounds", results)
}

/// Character table integrity: column orthogonality and the unit column
/// equaling hook-length dimensions for `1 <= n <= max_n`.
pub fn sweep_character_tables(max_n: usize) -> SweepReport {
    let ns: Vec<usize> = (1..=max_n).collect();
    let results: Vec<Option<String>> = ns
        .par_iter()
        .map(|&n| {
            let table = crate::kronecker::character_table(n).expect("desk scale");
            if let Err(e) = table.verify_orthogonality() {
                return Some(format!("n={n}: {e}"));
            }
            let unit = Partition::new(vec![1; n]);
            for lam in table.partitions() {
                if *table.chi(lam, &unit) != num_bigint::BigInt::from(lam.dimension()) {
                    return Some(format!("unit column mismatch at {lam:?}"));
                }
            }
            None
        })
        .collect();
    SweepReport::from_results("character table integrity", results)
}

/// Runs every sweep at the given level. `Full` pins the acceptance bounds;
/// `Quick` drops the n-bounds by about two and subsamples the heaviest
/// Kronecker set with the seed.
pub fn run_level(level: Level, seed: u64) -> Vec<SweepReport> {
    match level {
        Level::Full => vec![
            sweep_kron_oracle_equiv(6, &[(7, 3), (8, 3), (9, 3)], None),
            sweep_lr_agreement(8, 6),
            sweep_kostka(7, 10),
            sweep_plethysm(12, 6, 16),
            sweep_identities(25, 8, 20, 6),
            sweep_bounds(40, 6, 20, 8),
            sweep_character_tables(12),
        ],
        Level::Quick => vec![
            sweep_kron_oracle_equiv(4, &[(5, 3), (6, 3), (7, 3)], Some((2000, seed))),
            sweep_lr_agreement(6, 4),
            sweep_kostka(5, 8),
            sweep_plethysm(10, 5, 12),
            sweep_identities(23, 6, 18, 4),
            sweep_bounds(30, 6, 18, 6),
            sweep_character_tables(10),
        ],
    }
}
