//! Plethysm coefficients `a^lambda_{d,m}` of `h_d[h_m]` via signed
//! lattice-point counts.
//!
//! Writing `h_m(x_1..x_k)` as the sum of its monomials ordered
//! lexicographically, `h_d[h_m]` groups into chains of distinct exponent
//! blocks `b^1 <lex .. <lex b^r` weighted by strong compositions
//! `c_1+..+c_r = d`. Extracting the alternant coefficient at
//! `lambda + delta(k)` gives
//!
//! `a^lambda_{d,m} = sum_{sigma in S_k} sgn(sigma) sum_{r,c,jbar}
//!     |Q(jbar, c, lambda + delta(k) - sigma(delta(k)))|`
//!
//! where `Q` fixes the strict-increase position between consecutive blocks.
//! [`count_q_points`] counts one such polytope literally; the evaluators
//! aggregate the `(r, c, jbar)` shells into a single depth-first chain
//! search with residual pruning, which enumerates exactly the same set.
//!
//! When `aft(lambda) = K` is small and `d > 4K^3`, all but the
//! lexicographically largest block `(m,0,..,0)` are pinned near the top of
//! the chain; folding that block into the target yields the reduced
//! evaluator [`plethysm_hh_reduced`] with `K+1` variables, chain length at
//! most `4K^3` and coefficients bounded by `2K`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partition::{Composition, Partition};
use crate::perm::bounded_permutations;

/// A plethysm query for `a^lambda_{d,m}`; requires `d * m = |lambda|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlethQuery {
    pub lambda: Partition,
    pub d: usize,
    pub m: usize,
}

impl PlethQuery {
    pub fn new(lambda: Partition, d: usize, m: usize) -> Self {
        PlethQuery { lambda, d, m }
    }

    fn check(&self) -> Result<()> {
        if self.d == 0 || self.m == 0 || self.d * self.m != self.lambda.size() {
            return Err(Error::SizeMismatch(format!(
                "need d*m = |lambda|, got {}*{} vs {}",
                self.d,
                self.m,
                self.lambda.size()
            )));
        }
        Ok(())
    }
}

/// `delta(k) = (k-1, k-2, .., 1, 0)`.
pub fn staircase(k: usize) -> Composition {
    assert!(k >= 1);
    Composition((0..k).map(|i| k - 1 - i).collect())
}

/// One block-chain polytope: `r = coeffs.len()` blocks, each a weak
/// composition of `block_sum` in `num_vars` parts with first coordinate at
/// most `first_coord_cap`; consecutive blocks agree strictly below
/// `jbar[i]`, increase strictly at `jbar[i]` (0-indexed position), and the
/// weighted sum of the blocks must hit `target` exactly.
#[derive(Clone, Debug)]
pub struct QSpec {
    pub num_vars: usize,
    pub block_sum: usize,
    pub coeffs: Vec<usize>,
    pub jbar: Vec<usize>,
    pub target: Vec<i64>,
    pub first_coord_cap: usize,
}

/// Exact point count of one `QSpec` by depth-first block assignment with
/// residual-target pruning: after blocks `1..s`, each remaining coordinate
/// must satisfy `0 <= target_l - sum c_i b^i_l <= (sum of later c_i) * m`.
pub fn count_q_points(spec: &QSpec) -> BigUint {
    let k = spec.num_vars;
    assert_eq!(spec.jbar.len() + 1, spec.coeffs.len().max(1), "jbar/coeffs shape");
    if spec.target.iter().any(|&t| t < 0) {
        return BigUint::zero();
    }
    let mut residual: Vec<usize> = spec.target.iter().map(|&t| t as usize).collect();
    residual.resize(k, 0);
    let total: usize = residual.iter().sum();
    let weight: usize = spec.coeffs.iter().sum::<usize>() * spec.block_sum;
    if total != weight {
        return BigUint::zero();
    }
    if spec.coeffs.is_empty() {
        return BigUint::one();
    }
    let mut count = BigUint::zero();
    let mut prev: Vec<usize> = Vec::new();
    q_blocks(spec, 0, &mut residual, &mut prev, &mut count);
    count
}

fn q_blocks(
    spec: &QSpec,
    s: usize,
    residual: &mut Vec<usize>,
    prev: &mut Vec<usize>,
    count: &mut BigUint,
) {
    let k = spec.num_vars;
    let r = spec.coeffs.len();
    if s == r {
        if residual.iter().all(|&x| x == 0) {
            *count += BigUint::one();
        }
        return;
    }
    let c = spec.coeffs[s];
    let later: usize = spec.coeffs[s + 1..].iter().sum();
    let strict_at = if s == 0 { None } else { Some(spec.jbar[s - 1]) };
    let prev_snapshot = prev.clone();
    let res_snapshot = residual.clone();
    for_each_block(
        k,
        spec.block_sum,
        spec.first_coord_cap,
        c,
        later * spec.block_sum,
        &res_snapshot,
        if s == 0 { None } else { Some(&prev_snapshot) },
        strict_at,
        &mut |block| {
            for l in 0..k {
                residual[l] -= c * block[l];
            }
            let saved = std::mem::replace(prev, block.to_vec());
            q_blocks(spec, s + 1, residual, prev, count);
            *prev = saved;
            for l in 0..k {
                residual[l] += c * block[l];
            }
        },
    );
}

/// Enumerates one block: a weak composition of `m` in `k` parts within the
/// residual window, optionally prefix-equal to `prev` below `strict_at` and
/// strictly larger there.
#[allow(clippy::too_many_arguments)]
fn for_each_block(
    k: usize,
    m: usize,
    first_cap: usize,
    c: usize,
    later_capacity: usize,
    residual: &[usize],
    prev: Option<&[usize]>,
    strict_at: Option<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    // per-coordinate windows
    let mut lo = vec![0usize; k];
    let mut hi = vec![0usize; k];
    for l in 0..k {
        // c*b_l <= residual_l and residual_l - c*b_l <= later_capacity
        hi[l] = (residual[l] / c).min(m);
        if l == 0 {
            hi[l] = hi[l].min(first_cap);
        }
        lo[l] = residual[l].saturating_sub(later_capacity).div_ceil(c);
        if lo[l] > hi[l] {
            return;
        }
    }
    let mut block = vec![0usize; k];
    let mut start = 0usize;
    let mut remaining = m;
    if let (Some(prev), Some(j)) = (prev, strict_at) {
        // prefix copy below j, strict increase at j, free beyond
        for (l, slot) in block.iter_mut().enumerate().take(j) {
            let v = prev[l];
            if v < lo[l] || v > hi[l] || v > remaining {
                return;
            }
            *slot = v;
            remaining -= v;
        }
        lo[j] = lo[j].max(prev[j] + 1);
        if lo[j] > hi[j] {
            return;
        }
        start = j;
    }
    block_tail(&mut block, start, remaining, &lo, &hi, f);
}

/// Fills coordinates `at..` with `remaining` to distribute within the
/// per-coordinate windows, pruning by suffix capacity.
fn block_tail(
    block: &mut Vec<usize>,
    at: usize,
    remaining: usize,
    lo: &[usize],
    hi: &[usize],
    f: &mut impl FnMut(&[usize]),
) {
    let k = lo.len();
    if at == k {
        if remaining == 0 {
            f(block);
        }
        return;
    }
    let min_tail: usize = lo[at + 1..].iter().sum();
    let max_tail: usize = hi[at + 1..].iter().sum();
    let floor = lo[at].max(remaining.saturating_sub(max_tail));
    let ceil = hi[at].min(remaining.saturating_sub(min_tail));
    if floor > ceil {
        return;
    }
    for v in floor..=ceil {
        block[at] = v;
        block_tail(block, at + 1, remaining - v, lo, hi, f);
        block[at] = 0;
    }
}

// ---------------------------------------------------------------------------
// Aggregated chain search
// ---------------------------------------------------------------------------

/// Counts all weighted chains `(c_1, b^1) .. (c_r, b^r)` with
/// `b^1 <lex .. <lex b^r`, `sum c_i = budget`, `1 <= c_i <= part_cap`,
/// `r <= max_blocks`, every block a weak composition of `m` with first
/// coordinate at most `block_cap`, and `sum c_i b^i = target`. This equals
/// the sum of [`count_q_points`] over all `(r, c, jbar)` shells.
struct ChainCtx {
    k: usize,
    m: usize,
    part_cap: usize,
    max_blocks: usize,
    block_cap: usize,
}

fn count_chains(ctx: &ChainCtx, target: &[usize], budget: usize) -> BigUint {
    let mut residual = target.to_vec();
    let total: usize = residual.iter().sum();
    if total != budget * ctx.m {
        return BigUint::zero();
    }
    let mut count = BigUint::zero();
    let mut prev: Vec<usize> = Vec::new();
    chain_step(ctx, &mut residual, budget, 0, &mut prev, &mut count);
    count
}

fn chain_step(
    ctx: &ChainCtx,
    residual: &mut Vec<usize>,
    budget: usize,
    blocks_used: usize,
    prev: &mut Vec<usize>,
    count: &mut BigUint,
) {
    if budget == 0 {
        if residual.iter().all(|&x| x == 0) {
            *count += BigUint::one();
        }
        return;
    }
    if blocks_used == ctx.max_blocks {
        return;
    }
    let prev_snapshot = prev.clone();
    let res_snapshot = residual.clone();
    for c in 1..=ctx.part_cap.min(budget) {
        let later = (budget - c) * ctx.m;
        if blocks_used == 0 {
            for_each_block(
                ctx.k,
                ctx.m,
                ctx.block_cap,
                c,
                later,
                &res_snapshot,
                None,
                None,
                &mut |block| {
                    descend_chain(ctx, residual, budget, blocks_used, prev, count, c, block);
                },
            );
        } else {
            // lex-greater than prev: branch on the strict position
            for j in 0..ctx.k {
                for_each_block(
                    ctx.k,
                    ctx.m,
                    ctx.block_cap,
                    c,
                    later,
                    &res_snapshot,
                    Some(&prev_snapshot),
                    Some(j),
                    &mut |block| {
                        descend_chain(ctx, residual, budget, blocks_used, prev, count, c, block);
                    },
                );
            }
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn descend_chain(
    ctx: &ChainCtx,
    residual: &mut Vec<usize>,
    budget: usize,
    blocks_used: usize,
    prev: &mut Vec<usize>,
    count: &mut BigUint,
    c: usize,
    block: &[usize],
) {
    for l in 0..ctx.k {
        if c * block[l] > residual[l] {
            return;
        }
    }
    for l in 0..ctx.k {
        residual[l] -= c * block[l];
    }
    let saved = std::mem::replace(prev, block.to_vec());
    chain_step(ctx, residual, budget - c, blocks_used + 1, prev, count);
    *prev = saved;
    for l in 0..ctx.k {
        residual[l] += c * block[l];
    }
}

// ---------------------------------------------------------------------------
// Evaluators
// ---------------------------------------------------------------------------

/// `a^lambda_{d,m}` by the full signed sum over `S_{ell(lambda)}` and all
/// block chains; intended for small `d * ell(lambda)`.
pub fn plethysm_hh(q: &PlethQuery) -> Result<BigUint> {
    q.check()?;
    let k = q.lambda.len();
    if k > 9 {
        return Err(Error::Infeasible(format!(
            "general plethysm path sums over S_{k}; use the reduced path or the oracle"
        )));
    }
    let ctx = ChainCtx {
        k,
        m: q.m,
        part_cap: q.d,
        max_blocks: q.d,
        block_cap: q.m,
    };
    // sigma(l) >= l - lambda_l keeps the target nonnegative
    let floors: Vec<usize> = (0..k)
        .map(|l| l.saturating_sub(q.lambda.part(l)))
        .collect();
    let sigmas = bounded_permutations(&floors);
    let total: BigInt = sigmas
        .par_iter()
        .map(|(sigma, sign)| {
            let mut target = Vec::with_capacity(k);
            for (l, &s) in sigma.iter().enumerate() {
                target.push(q.lambda.part(l) + s - l);
            }
            BigInt::from(*sign) * BigInt::from(count_chains(&ctx, &target, q.d))
        })
        .sum();
    assert!(
        !total.is_negative(),
        "signed plethysm sum went negative for {q:?}"
    );
    Ok(total.to_biguint().unwrap())
}

/// The reduced evaluator for `aft(lambda) = K`, `lambda_1 >= ell(lambda)`
/// and `d > 4K^3`: the largest block is pinned to `(m,0,..,0)` and folded
/// into the target, leaving chains of at most `4K^3` blocks with
/// coefficients in `[1, 2K]` over `K+1` variables.
pub fn plethysm_hh_reduced(q: &PlethQuery) -> Result<BigUint> {
    q.check()?;
    let lambda = &q.lambda;
    if lambda.first() < lambda.len() {
        return Err(Error::PreconditionViolated(
            "reduced path needs lambda_1 >= ell(lambda); transpose handling is the caller's job"
                .into(),
        ));
    }
    let aft = lambda.aft();
    if q.d <= 4 * aft * aft * aft {
        return Err(Error::PreconditionViolated(format!(
            "reduced path needs d > 4*aft^3 = {}, got d = {}",
            4 * aft * aft * aft,
            q.d
        )));
    }
    let k = aft + 1;
    debug_assert!(lambda.len() <= k);
    let ctx = ChainCtx {
        k,
        m: q.m,
        part_cap: 2 * aft,
        max_blocks: 4 * aft * aft * aft,
        block_cap: q.m - 1,
    };
    let max_free_budget = (ctx.part_cap * ctx.max_blocks).min(q.d.saturating_sub(1));
    let floors: Vec<usize> = (0..k)
        .map(|l| l.saturating_sub(lambda.part(l)))
        .collect();
    let sigmas = bounded_permutations(&floors);

    let mut total = BigInt::zero();
    // chain budget = d - c_r; the pinned block contributes c_r * m to the
    // first coordinate only. hat_lambda_1 may go a little negative and the
    // staircase offset can still lift the target back to feasibility, so
    // only the target itself is pruned.
    for free_budget in 0..=max_free_budget {
        let pinned = q.d - free_budget;
        let hat_first = lambda.first() as i64 - (pinned * q.m) as i64;
        for (sigma, sign) in &sigmas {
            let mut target = Vec::with_capacity(k);
            let mut feasible = true;
            for (l, &s) in sigma.iter().enumerate() {
                let base = if l == 0 {
                    hat_first
                } else {
                    lambda.part(l) as i64
                };
                // target_l = hat_lambda_l + sigma(l) - l
                let t = base + s as i64 - l as i64;
                if t < 0 {
                    feasible = false;
                    break;
                }
                target.push(t as usize);
            }
            if !feasible {
                continue;
            }
            let chains = count_chains(&ctx, &target, free_budget);
            total += BigInt::from(*sign) * BigInt::from(chains);
        }
    }
    assert!(
        !total.is_negative(),
        "signed reduced plethysm sum went negative for {q:?}"
    );
    Ok(total.to_biguint().unwrap())
}

// ---------------------------------------------------------------------------
// Dispatcher
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlethPath {
    General,
    Reduced,
    Oracle,
}

impl PlethPath {
    pub fn as_str(&self) -> &'static str {
        match self {
            PlethPath::General => "general",
            PlethPath::Reduced => "reduced",
            PlethPath::Oracle => "oracle",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlethStrategy {
    Auto,
    General,
    Reduced,
    Oracle,
}

#[derive(Clone, Debug)]
pub struct PlethConfig {
    /// The general path runs when `d * ell(lambda)` stays within this.
    pub general_budget: usize,
    /// The reduced path runs when `aft(lambda)` stays within this.
    pub reduced_aft_max: usize,
}

impl Default for PlethConfig {
    fn default() -> Self {
        PlethConfig {
            general_budget: 24,
            reduced_aft_max: 3,
        }
    }
}

/// Coefficient of `s_lambda` in the oracle expansion of `h_d[h_m]`.
pub fn plethysm_oracle(q: &PlethQuery) -> Result<BigUint> {
    q.check()?;
    let k = q.lambda.len().max(1);
    let monomials = crate::partition::binomial(q.m + k - 1, k - 1);
    let n_mon: usize = monomials
        .try_into()
        .map_err(|_| Error::Infeasible("oracle inner expansion too large".into()))?;
    if n_mon > 3000 {
        return Err(Error::Infeasible(format!(
            "oracle inner expansion has {n_mon} monomials"
        )));
    }
    let outer_terms = crate::partition::binomial(n_mon + q.d - 1, q.d);
    if outer_terms > BigUint::from(3_000_000u64) {
        return Err(Error::Infeasible(format!(
            "oracle outer expansion has {outer_terms} terms"
        )));
    }
    let table = crate::symfunc::plethysm_hd_hm(q.d, q.m, k)?;
    let coeff = table.get(&q.lambda).cloned().unwrap_or_default();
    assert!(!coeff.is_negative(), "oracle plethysm coefficient negative");
    Ok(coeff.to_biguint().unwrap())
}

/// Routes a query: the reduced path whenever its preconditions hold with a
/// small aft (it is strictly cheaper there), else the general path within
/// budget, else the pinned-block reduction for single-row shapes, else the
/// symmetric-function oracle as a desk-scale fallback.
pub fn plethysm_dispatch(q: &PlethQuery) -> Result<(BigUint, PlethPath)> {
    plethysm_dispatch_with(q, &PlethConfig::default())
}

pub fn plethysm_dispatch_with(
    q: &PlethQuery,
    config: &PlethConfig,
) -> Result<(BigUint, PlethPath)> {
    q.check()?;
    let lambda = &q.lambda;
    let aft = lambda.aft();
    let ell = lambda.len();
    let reduced_ok =
        lambda.first() >= ell && aft <= config.reduced_aft_max && q.d > 4 * aft * aft * aft;
    if aft >= 1 && reduced_ok {
        return Ok((plethysm_hh_reduced(q)?, PlethPath::Reduced));
    }
    if q.d * ell <= config.general_budget && ell <= 9 {
        return Ok((plethysm_hh(q)?, PlethPath::General));
    }
    if reduced_ok {
        // aft = 0 with a huge d: the reduced evaluator degenerates to the
        // single pinned block
        return Ok((plethysm_hh_reduced(q)?, PlethPath::Reduced));
    }
    match plethysm_oracle(q) {
        Ok(v) => Ok((v, PlethPath::Oracle)),
        Err(Error::Infeasible(msg)) => Err(Error::Infeasible(format!(
            "no plethysm path fits the configured budgets ({msg})"
        ))),
        Err(e) => Err(e),
    }
}

/// Forces one path (the CLI surface for `--path`).
pub fn plethysm_with_strategy(
    q: &PlethQuery,
    strategy: PlethStrategy,
    config: &PlethConfig,
) -> Result<(BigUint, PlethPath)> {
    match strategy {
        PlethStrategy::Auto => plethysm_dispatch_with(q, config),
        PlethStrategy::General => Ok((plethysm_hh(q)?, PlethPath::General)),
        PlethStrategy::Reduced => Ok((plethysm_hh_reduced(q)?, PlethPath::Reduced)),
        PlethStrategy::Oracle => Ok((plethysm_oracle(q)?, PlethPath::Oracle)),
    }
}
