//! Kronecker coefficients `g(lambda, mu, nu)`.
//!
//! Two routes: [`kronecker_character`] evaluates the classical character sum
//! `g = sum_alpha chi^lambda chi^mu chi^nu / z_alpha` from a Murnaghan-
//! Nakayama character table, and [`kronecker_jt`] evaluates the signed
//! Jacobi-Trudi expansion
//!
//! `g(lambda,mu,nu) = sum_{sigma in S_l} sgn(sigma)
//!     sum_{alpha^i |- nu_i + sigma(i) - i}
//!     c^lambda_{alpha^1..alpha^l} c^mu_{alpha^1..alpha^l}`
//!
//! which is polynomial-time when `nu` is a wide partition (small
//! `n - nu_1`). The [`kronecker`] dispatcher exploits the full S3 symmetry
//! and the double-transpose identity `g(lambda,mu,nu) = g(lambda,mu',nu')`
//! to move the smallest-aft partition into the last slot before choosing a
//! route.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::lr::{multi_lr_cached, MultiLrCache};
use crate::partition::{compositions_of, factorial, partitions_of, Partition};

/// A Kronecker query: three partitions of the same size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KronQuery {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
}

impl KronQuery {
    pub fn new(lambda: Partition, mu: Partition, nu: Partition) -> Self {
        KronQuery { lambda, mu, nu }
    }

    fn check_sizes(&self) -> Result<usize> {
        let n = self.lambda.size();
        if self.mu.size() != n || self.nu.size() != n {
            return Err(Error::SizeMismatch(format!(
                "|lambda|={}, |mu|={}, |nu|={}",
                n,
                self.mu.size(),
                self.nu.size()
            )));
        }
        Ok(n)
    }
}

// ---------------------------------------------------------------------------
// Character table
// ---------------------------------------------------------------------------

/// Exact character table of `S_n`: rows indexed by partitions (irreducibles),
/// columns by cycle types, entries `chi^lambda(alpha)`, with centralizer
/// orders `z_alpha` and class sizes `n!/z_alpha`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    n: usize,
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    chi: Vec<Vec<BigInt>>,
    z: Vec<BigUint>,
    class_size: Vec<BigUint>,
}

impl CharacterTable {
    /// Computes the table by the Murnaghan-Nakayama border-strip recursion
    /// on the abacus (beta-set) encoding.
    pub fn compute(n: usize) -> Self {
        let parts: Vec<Partition> = partitions_of(n).collect();
        let index: HashMap<Partition, usize> = parts
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let nfact = factorial(n);
        let mut z = Vec::with_capacity(parts.len());
        let mut class_size = Vec::with_capacity(parts.len());
        for alpha in &parts {
            let za = centralizer_order(alpha);
            debug_assert!((&nfact % &za).is_zero());
            class_size.push(&nfact / &za);
            z.push(za);
        }
        let mut chi = vec![vec![BigInt::zero(); parts.len()]; parts.len()];
        for (c, alpha) in parts.iter().enumerate() {
            let mut memo: HashMap<(Partition, usize), BigInt> = HashMap::new();
            for (r, lambda) in parts.iter().enumerate() {
                chi[r][c] = mn_value(lambda, alpha.parts(), 0, &mut memo);
            }
        }
        let table = CharacterTable {
            n,
            parts,
            index,
            chi,
            z,
            class_size,
        };
        // The identity column must reproduce the hook-length dimensions.
        if n >= 1 {
            let id = table.index[&Partition::new(vec![1; n])];
            for (r, lambda) in table.parts.iter().enumerate() {
                assert_eq!(
                    table.chi[r][id],
                    BigInt::from(lambda.dimension()),
                    "identity column mismatch at {lambda:?}"
                );
            }
        }
        table
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Partitions of `n` in the table's row/column order.
    pub fn partitions(&self) -> &[Partition] {
        &self.parts
    }

    pub fn chi(&self, lambda: &Partition, alpha: &Partition) -> &BigInt {
        &self.chi[self.index[lambda]][self.index[alpha]]
    }

    pub fn chi_by_index(&self, row: usize, col: usize) -> &BigInt {
        &self.chi[row][col]
    }

    pub fn centralizer(&self, alpha: &Partition) -> &BigUint {
        &self.z[self.index[alpha]]
    }

    pub fn class_size_by_index(&self, col: usize) -> &BigUint {
        &self.class_size[col]
    }

    /// Column orthogonality: `sum_lambda chi(alpha) chi(beta) = z_alpha [alpha=beta]`.
    pub fn verify_orthogonality(&self) -> std::result::Result<(), String> {
        let p = self.parts.len();
        for a in 0..p {
            for b in a..p {
                let mut acc = BigInt::zero();
                for r in 0..p {
                    acc += &self.chi[r][a] * &self.chi[r][b];
                }
                let expect = if a == b {
                    BigInt::from(self.z[a].clone())
                } else {
                    BigInt::zero()
                };
                if acc != expect {
                    return Err(format!(
                        "orthogonality fails at columns {:?}, {:?}: {} != {}",
                        self.parts[a], self.parts[b], acc, expect
                    ));
                }
            }
        }
        Ok(())
    }

    /// Canonical text encoding with a trailing SHA-256 line.
    pub fn encode_text(&self) -> String {
        let mut body = String::new();
        body.push_str(&format!(
            "multcoef-chartab v1\nn {}\nparts {}\n",
            self.n,
            self.parts.len()
        ));
        for p in &self.parts {
            body.push_str(&format!("P {p}\n"));
        }
        for z in &self.z {
            body.push_str(&format!("Z {z}\n"));
        }
        for row in &self.chi {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            body.push_str(&format!("X {}\n", cells.join(" ")));
        }
        let digest = Sha256::digest(body.as_bytes());
        let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
        format!("{body}SHA256 {hex}\n")
    }

    /// Strict decode; `None` on any structural or checksum mismatch.
    pub fn decode_text(text: &str) -> Option<CharacterTable> {
        let (body, tail) = text.rsplit_once("SHA256 ")?;
        let digest = Sha256::digest(body.as_bytes());
        let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
        if tail.trim() != hex {
            return None;
        }
        let mut lines = body.lines();
        if lines.next()? != "multcoef-chartab v1" {
            return None;
        }
        let n: usize = lines.next()?.strip_prefix("n ")?.parse().ok()?;
        let count: usize = lines.next()?.strip_prefix("parts ")?.parse().ok()?;
        let mut parts = Vec::with_capacity(count);
        for _ in 0..count {
            let text = lines.next()?.strip_prefix("P ")?;
            let p = crate::partition::parse_partition(text).ok()?;
            if p.size() != n {
                return None;
            }
            parts.push(p);
        }
        let mut z = Vec::with_capacity(count);
        for _ in 0..count {
            z.push(lines.next()?.strip_prefix("Z ")?.parse::<BigUint>().ok()?);
        }
        let mut chi = Vec::with_capacity(count);
        for _ in 0..count {
            let row: Option<Vec<BigInt>> = lines
                .next()?
                .strip_prefix("X ")?
                .split(' ')
                .map(|c| c.parse::<BigInt>().ok())
                .collect();
            let row = row?;
            if row.len() != count {
                return None;
            }
            chi.push(row);
        }
        if lines.next().is_some() {
            return None;
        }
        let nfact = factorial(n);
        let mut class_size = Vec::with_capacity(count);
        for za in &z {
            if za.is_zero() || !(&nfact % za).is_zero() {
                return None;
            }
            class_size.push(&nfact / za);
        }
        let index = parts
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        Some(CharacterTable {
            n,
            parts,
            index,
            chi,
            z,
            class_size,
        })
    }
}

/// `z_alpha = prod_i i^{m_i} m_i!` over the multiplicities of `alpha`.
fn centralizer_order(alpha: &Partition) -> BigUint {
    let mut z = BigUint::one();
    let mut run_value = 0usize;
    let mut run_len = 0usize;
    for &part in alpha.parts().iter().chain(std::iter::once(&0)) {
        if part == run_value {
            run_len += 1;
        } else {
            if run_value > 0 {
                for _ in 0..run_len {
                    z *= BigUint::from(run_value);
                }
                z *= factorial(run_len);
            }
            run_value = part;
            run_len = 1;
        }
    }
    z
}

/// Murnaghan-Nakayama: `chi^lambda(alpha)` recursing on `alpha[depth..]`,
/// removing border strips of size `alpha[depth]` via the beta-set encoding.
fn mn_value(
    lambda: &Partition,
    alpha: &[usize],
    depth: usize,
    memo: &mut HashMap<(Partition, usize), BigInt>,
) -> BigInt {
    if depth == alpha.len() {
        debug_assert!(lambda.is_empty());
        return BigInt::one();
    }
    let key = (lambda.clone(), depth);
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let t = alpha[depth];
    let rows = lambda.len();
    let beta: Vec<usize> = (0..rows)
        .map(|i| lambda.part(i) + (rows - 1 - i))
        .collect();
    let mut total = BigInt::zero();
    for i in 0..rows {
        if beta[i] < t {
            continue;
        }
        let target = beta[i] - t;
        if beta.contains(&target) {
            continue;
        }
        // height = beads strictly between target and beta[i]
        let height = beta
            .iter()
            .filter(|&&b| b > target && b < beta[i])
            .count();
        let mut nb = beta.clone();
        nb[i] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = nb
            .iter()
            .enumerate()
            .map(|(j, &b)| b - (rows - 1 - j))
            .collect();
        let rest = Partition::new(parts);
        let sub = mn_value(&rest, alpha, depth + 1, memo);
        if height % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    memo.insert(key, total.clone());
    total
}

// ---------------------------------------------------------------------------
// Table cache (in-memory single-flight + optional disk persistence)
// ---------------------------------------------------------------------------

/// Caches character tables per `n`. Construction for a given `n` runs once
/// per process (the map lock is held while computing); an optional disk
/// directory persists tables across runs, one checksummed file per `n`.
pub struct CharTableCache {
    dir: Option<PathBuf>,
    mem: Mutex<HashMap<usize, Arc<CharacterTable>>>,
}

impl CharTableCache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        CharTableCache {
            dir,
            mem: Mutex::new(HashMap::new()),
        }
    }

    pub fn in_memory() -> Self {
        Self::new(None)
    }

    fn file_path(dir: &Path, n: usize) -> PathBuf {
        dir.join(format!("chartab-v1-n{n}.txt"))
    }

    pub fn get(&self, n: usize) -> Arc<CharacterTable> {
        let mut map = self.mem.lock().expect("character cache poisoned");
        if let Some(hit) = map.get(&n) {
            return hit.clone();
        }
        let mut loaded: Option<CharacterTable> = None;
        if let Some(dir) = &self.dir {
            if let Ok(text) = std::fs::read_to_string(Self::file_path(dir, n)) {
                // corruption -> recompute, never trust
                loaded = CharacterTable::decode_text(&text).filter(|t| t.n == n);
            }
        }
        let table = Arc::new(loaded.unwrap_or_else(|| {
            let computed = CharacterTable::compute(n);
            if let Some(dir) = &self.dir {
                let _ = std::fs::create_dir_all(dir);
                let tmp = dir.join(format!(".chartab-n{n}.tmp"));
                if std::fs::write(&tmp, computed.encode_text()).is_ok() {
                    let _ = std::fs::rename(&tmp, Self::file_path(dir, n));
                }
            }
            computed
        }));
        map.insert(n, table.clone());
        table
    }
}

fn default_cache() -> &'static CharTableCache {
    static CACHE: OnceLock<CharTableCache> = OnceLock::new();
    CACHE.get_or_init(CharTableCache::in_memory)
}

/// Desk-scale ceiling for building a full character table.
pub const CHAR_TABLE_MAX_N: usize = 20;

/// Character table for `n` from the process-wide in-memory cache.
pub fn character_table(n: usize) -> Result<Arc<CharacterTable>> {
    if n > CHAR_TABLE_MAX_N {
        return Err(Error::Infeasible(format!(
            "character table for n={n} exceeds the desk-scale bound {CHAR_TABLE_MAX_N}"
        )));
    }
    Ok(default_cache().get(n))
}

// ---------------------------------------------------------------------------
// Kronecker via characters
// ---------------------------------------------------------------------------

/// `g(lambda,mu,nu) = (1/n!) sum_alpha |C_alpha| chi^lambda chi^mu chi^nu`.
/// The rational sum must clear denominators exactly; integrality and
/// nonnegativity are always asserted.
pub fn kronecker_character(q: &KronQuery) -> Result<BigUint> {
    kronecker_character_with(default_cache(), q)
}

pub fn kronecker_character_with(cache: &CharTableCache, q: &KronQuery) -> Result<BigUint> {
    let n = q.check_sizes()?;
    if n == 0 {
        return Ok(BigUint::one());
    }
    if n > CHAR_TABLE_MAX_N {
        return Err(Error::Infeasible(format!(
            "character route needs a table for n={n} > {CHAR_TABLE_MAX_N}"
        )));
    }
    let table = cache.get(n);
    let rl = table.index[&q.lambda];
    let rm = table.index[&q.mu];
    let rn = table.index[&q.nu];
    let mut acc = BigInt::zero();
    for c in 0..table.parts.len() {
        let prod = &table.chi[rl][c] * &table.chi[rm][c] * &table.chi[rn][c];
        acc += prod * BigInt::from(table.class_size[c].clone());
    }
    let nfact = BigInt::from(factorial(n));
    let (quot, rem) = num_integer_div_rem(&acc, &nfact);
    assert!(rem.is_zero(), "character sum not divisible by n! for {q:?}");
    assert!(!quot.is_negative(), "negative Kronecker coefficient for {q:?}");
    Ok(quot.to_biguint().unwrap())
}

fn num_integer_div_rem(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    (a / b, a % b)
}

// ---------------------------------------------------------------------------
// Kronecker via Jacobi-Trudi and multi-LR
// ---------------------------------------------------------------------------

use crate::perm::bounded_permutations;

/// Candidates for the heavy first factor: partitions of `t1` contained in
/// `lambda` and `mu`. When few boxes are removed the candidates are built by
/// choosing rows of `lambda` and subtracting a strong composition; when the
/// removal budget exceeds `t1` it is cheaper to generate partitions of `t1`
/// directly and filter by containment. Both enumerations produce exactly the
/// same set, each candidate once.
fn alpha1_candidates(lambda: &Partition, mu: &Partition, t1: usize) -> Vec<Partition> {
    let n = lambda.size();
    if t1 > n {
        return Vec::new();
    }
    let budget = n - t1;
    if budget == 0 {
        return if lambda == mu {
            vec![lambda.clone()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    if budget <= t1 {
        let rows = lambda.len();
        let mut chosen: Vec<usize> = Vec::new();
        // r rows, strong composition of the budget over them
        for r in 1..=budget.min(rows) {
            row_subsets(rows, r, 0, &mut chosen, &mut |subset| {
                for comp in compositions_of(budget, r, true) {
                    let mut boxes = vec![0usize; rows];
                    for (slot, &row) in subset.iter().enumerate() {
                        boxes[row] = comp.parts()[slot];
                    }
                    if let Some(candidate) = lambda.remove_rowwise(&boxes) {
                        if mu.contains(&candidate) {
                            out.push(candidate);
                        }
                    }
                }
            });
        }
    } else {
        for candidate in crate::partition::partitions_of_constrained(
            t1,
            crate::partition::PartitionConstraints {
                max_part: Some(lambda.first().min(mu.first())),
                max_length: Some(lambda.len().min(mu.len()).max(1)),
            },
        ) {
            if lambda.contains(&candidate) && mu.contains(&candidate) {
                out.push(candidate);
            }
        }
    }
    out
}

fn row_subsets(
    rows: usize,
    want: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if chosen.len() == want {
        f(chosen);
        return;
    }
    let still_need = want - chosen.len();
    for row in from..rows {
        if rows - row < still_need {
            break;
        }
        chosen.push(row);
        row_subsets(rows, want, row + 1, chosen, f);
        chosen.pop();
    }
}

/// The Jacobi-Trudi route, exact for any `nu` but intended for small
/// `n - nu_1`: cost is driven by `S_{ell(nu)}` and the removal budget.
pub fn kronecker_jt(q: &KronQuery) -> Result<BigUint> {
    let n = q.check_sizes()?;
    if n == 0 {
        return Ok(BigUint::one());
    }
    let nu = &q.nu;
    let ell = nu.len();
    if ell > 10 {
        return Err(Error::Infeasible(format!(
            "Jacobi-Trudi route over S_{ell} permutations; transpose nu or use the character route"
        )));
    }
    // sigma[i] >= i - nu_i keeps every target nonnegative
    let floors: Vec<usize> = (0..ell).map(|i| i.saturating_sub(nu.part(i))).collect();
    let sigmas = bounded_permutations(&floors);
    let cache = MultiLrCache::new();

    let total: BigInt = sigmas
        .par_iter()
        .map(|(sigma, sign)| {
            let term = jt_sigma_term(&q.lambda, &q.mu, nu, sigma, &cache);
            BigInt::from(*sign) * BigInt::from(term)
        })
        .sum();
    assert!(
        total.sign() != Sign::Minus,
        "signed Jacobi-Trudi sum went negative for {q:?}"
    );
    Ok(total.to_biguint().unwrap())
}

fn jt_sigma_term(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    sigma: &[usize],
    cache: &MultiLrCache,
) -> BigUint {
    let ell = sigma.len();
    let mut targets = Vec::with_capacity(ell);
    for (i, &s) in sigma.iter().enumerate() {
        // floors guarantee nonnegativity
        targets.push(nu.part(i) + s - i);
    }
    let t1 = targets[0];
    let alpha1s = alpha1_candidates(lambda, mu, t1);
    if alpha1s.is_empty() {
        return BigUint::zero();
    }
    let rest_lists: Vec<Vec<Partition>> = targets[1..]
        .iter()
        .filter(|&&t| t > 0)
        .map(|&t| partitions_of(t).collect())
        .collect();

    let mut acc = BigUint::zero();
    let mut factors: Vec<Partition> = Vec::with_capacity(ell);
    let mut tuple: Vec<Partition> = Vec::new();
    for alpha1 in &alpha1s {
        tuple_product(&rest_lists, 0, &mut tuple, &mut |rest| {
            factors.clear();
            factors.push(alpha1.clone());
            factors.extend_from_slice(rest);
            let fa = multi_lr_cached(cache, lambda, &factors);
            if fa.is_zero() {
                return;
            }
            let fb = multi_lr_cached(cache, mu, &factors);
            acc += fa * fb;
        });
    }
    acc
}

fn tuple_product(
    lists: &[Vec<Partition>],
    i: usize,
    tuple: &mut Vec<Partition>,
    f: &mut impl FnMut(&[Partition]),
) {
    if i == lists.len() {
        f(tuple);
        return;
    }
    for item in &lists[i] {
        tuple.push(item.clone());
        tuple_product(lists, i + 1, tuple, f);
        tuple.pop();
    }
}

// ---------------------------------------------------------------------------
// Dispatcher
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KronStrategy {
    Auto,
    Jt,
    Character,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KronPath {
    JacobiTrudi,
    Character,
}

impl KronPath {
    pub fn as_str(&self) -> &'static str {
        match self {
            KronPath::JacobiTrudi => "jacobi-trudi",
            KronPath::Character => "character",
        }
    }
}

#[derive(Clone, Debug)]
pub struct KronConfig {
    /// Largest aft for which the Jacobi-Trudi route is attempted.
    pub aft_threshold: usize,
    /// Largest `n` for which the character table is built.
    pub char_max_n: usize,
}

impl Default for KronConfig {
    fn default() -> Self {
        KronConfig {
            aft_threshold: 6,
            char_max_n: 18,
        }
    }
}

#[derive(Clone, Debug)]
pub struct KronOutcome {
    pub value: BigUint,
    pub path: KronPath,
    /// The relabeled/transposed triple the chosen route actually ran on.
    pub ran_on: KronQuery,
}

/// S3-relabels and double-transposes the query so the smallest-aft partition
/// sits last with its first part at least its length, then routes: the
/// Jacobi-Trudi path when that aft is within threshold, the character table
/// otherwise.
pub fn kronecker(q: &KronQuery, strategy: KronStrategy) -> Result<BigUint> {
    kronecker_full(q, strategy, &KronConfig::default(), default_cache()).map(|o| o.value)
}

pub fn kronecker_full(
    q: &KronQuery,
    strategy: KronStrategy,
    config: &KronConfig,
    cache: &CharTableCache,
) -> Result<KronOutcome> {
    let n = q.check_sizes()?;
    match strategy {
        KronStrategy::Jt => {
            let value = kronecker_jt(q)?;
            return Ok(KronOutcome {
                value,
                path: KronPath::JacobiTrudi,
                ran_on: q.clone(),
            });
        }
        KronStrategy::Character => {
            let value = kronecker_character_with(cache, q)?;
            return Ok(KronOutcome {
                value,
                path: KronPath::Character,
                ran_on: q.clone(),
            });
        }
        KronStrategy::Auto => {}
    }

    let slots = [&q.lambda, &q.mu, &q.nu];
    let afts: Vec<usize> = slots.iter().map(|p| p.aft()).collect();
    let best = (0..3).min_by_key(|&i| afts[i]).unwrap();
    // aft is conjugation-invariant, so transposition matters only for
    // making nu_1 >= ell(nu) (the route's cost driver is n - nu_1).
    let (a, mut b, mut v) = match best {
        0 => (q.mu.clone(), q.nu.clone(), q.lambda.clone()),
        1 => (q.lambda.clone(), q.nu.clone(), q.mu.clone()),
        _ => (q.lambda.clone(), q.mu.clone(), q.nu.clone()),
    };
    if v.first() < v.len() {
        v = v.conjugate();
        b = b.conjugate();
    }
    if afts[best] <= config.aft_threshold {
        let ran_on = KronQuery::new(a, b, v);
        let value = kronecker_jt(&ran_on)?;
        Ok(KronOutcome {
            value,
            path: KronPath::JacobiTrudi,
            ran_on,
        })
    } else if n <= config.char_max_n {
        let value = kronecker_character_with(cache, q)?;
        Ok(KronOutcome {
            value,
            path: KronPath::Character,
            ran_on: q.clone(),
        })
    } else {
        Err(Error::Infeasible(format!(
            "n={n} exceeds the character bound {} and the smallest aft {} exceeds the \
             Jacobi-Trudi threshold {}",
            config.char_max_n, afts[best], config.aft_threshold
        )))
    }
}
