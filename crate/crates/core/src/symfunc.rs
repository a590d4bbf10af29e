//! Exact symmetric polynomials in `k` variables, stored by their
//! monomial-symmetric coefficients. Exponential-time but exact; this is the
//! ground-truth oracle that every fast algorithm in the crate is checked
//! against.
//!
//! The canonical representation is a map `partition -> coefficient`
//! representing `sum coeff(mu) * m_mu(x_1..x_k)`. Schur expansion works by
//! dominance-order elimination: the Kostka matrix is unitriangular with
//! respect to dominance, so repeatedly stripping the maximal remaining key
//! terminates.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::{partition_count, Partition};
use crate::tableaux::{for_each_ssyt, SkewShape};

/// A symmetric polynomial in `k` variables over the monomial-symmetric basis.
/// Keys have at most `k` parts; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    k: usize,
    coeffs: BTreeMap<Partition, BigInt>,
}

impl SymPoly {
    pub fn zero(k: usize) -> Self {
        SymPoly {
            k,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(k: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(Partition::empty(), BigInt::one());
        SymPoly { k, coeffs }
    }

    pub fn vars(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, key: &Partition) -> BigInt {
        self.coeffs.get(key).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, BigInt> {
        &self.coeffs
    }

    pub fn insert(&mut self, key: Partition, value: BigInt) {
        debug_assert!(key.len() <= self.k);
        if value.is_zero() {
            self.coeffs.remove(&key);
        } else {
            self.coeffs.insert(key, value);
        }
    }

    pub fn add_assign_term(&mut self, key: &Partition, value: &BigInt) {
        if value.is_zero() || key.len() > self.k {
            return;
        }
        let entry = self.coeffs.entry(key.clone()).or_insert_with(BigInt::zero);
        *entry += value;
        if entry.is_zero() {
            self.coeffs.remove(key);
        }
    }

    pub fn add_assign(&mut self, other: &SymPoly) {
        assert_eq!(self.k, other.k);
        for (key, value) in &other.coeffs {
            self.add_assign_term(key, value);
        }
    }

    pub fn sub_assign_scaled(&mut self, other: &SymPoly, scale: &BigInt) {
        assert_eq!(self.k, other.k);
        for (key, value) in &other.coeffs {
            let scaled = -(value * scale);
            self.add_assign_term(key, &scaled);
        }
    }
}

/// Complete homogeneous `h_r` in `k` variables: `sum_{mu |- r, ell <= k} m_mu`.
pub fn gen_h(r: usize, k: usize) -> SymPoly {
    let mut out = SymPoly::zero(k);
    for mu in crate::partition::partitions_of_constrained(
        r,
        crate::partition::PartitionConstraints {
            max_part: None,
            max_length: Some(k),
        },
    ) {
        out.insert(mu, BigInt::one());
    }
    out
}

/// Elementary `e_r` in `k` variables: `m_(1^r)`, zero when `r > k`.
pub fn gen_e(r: usize, k: usize) -> SymPoly {
    if r == 0 {
        return SymPoly::one(k);
    }
    let mut out = SymPoly::zero(k);
    if r <= k {
        out.insert(Partition::new(vec![1; r]), BigInt::one());
    }
    out
}

/// Power sum `p_r` in `k` variables: `m_(r)`.
pub fn gen_p(r: usize, k: usize) -> SymPoly {
    if r == 0 {
        return SymPoly::one(k);
    }
    let mut out = SymPoly::zero(k);
    out.insert(Partition::new(vec![r]), BigInt::one());
    out
}

/// Schur polynomial `s_lambda(x_1..x_k)` by SSYT weight enumeration; zero
/// when `ell(lambda) > k`.
pub fn gen_s(lambda: &Partition, k: usize) -> SymPoly {
    let mut out = SymPoly::zero(k);
    if lambda.len() > k {
        return out;
    }
    let shape = SkewShape::straight(lambda.clone());
    // The coefficient of m_mu is the number of SSYTs whose weight vector is
    // exactly mu, so only canonical (weakly decreasing) weights count.
    for_each_ssyt(&shape, k, |t| {
        let w = t.weight();
        if w.parts().windows(2).all(|v| v[0] >= v[1]) {
            out.add_assign_term(&Partition::new(w.parts().to_vec()), &BigInt::one());
        }
    });
    out
}

/// Schur polynomial via the Jacobi-Trudi determinant
/// `det[h_{lambda_i - i + j}]`; the independent cross-check for [`gen_s`].
pub fn gen_s_jacobi_trudi(lambda: &Partition, k: usize) -> SymPoly {
    if lambda.len() > k {
        return SymPoly::zero(k);
    }
    let ell = lambda.len();
    if ell == 0 {
        return SymPoly::one(k);
    }
    let mut out = SymPoly::zero(k);
    let mut perm: Vec<usize> = (0..ell).collect();
    permute(&mut perm, 0, &mut |sigma, sign| {
        let mut term = SymPoly::one(k);
        for (i, &j) in sigma.iter().enumerate() {
            // h index lambda_i - i + j, all 0-indexed here
            let idx = lambda.part(i) as i64 + j as i64 - i as i64;
            if idx < 0 {
                return;
            }
            term = multiply(&term, &gen_h(idx as usize, k)).expect("same k");
            if term.is_zero() {
                return;
            }
        }
        let signed = BigInt::from(sign);
        for (key, value) in term.coeffs {
            out.add_assign_term(&key, &(value * &signed));
        }
    });
    out
}

fn permute(perm: &mut Vec<usize>, at: usize, f: &mut impl FnMut(&[usize], i32)) {
    if at == perm.len() {
        let sign = permutation_sign(perm);
        f(perm, sign);
        return;
    }
    for i in at..perm.len() {
        perm.swap(at, i);
        permute(perm, at + 1, f);
        perm.swap(at, i);
    }
}

pub(crate) fn permutation_sign(perm: &[usize]) -> i32 {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// All distinct permutations of `mu` padded with zeros to `k` slots.
fn orbit_vectors(mu: &Partition, k: usize) -> Vec<Vec<usize>> {
    let mut vec = mu.parts().to_vec();
    vec.resize(k, 0);
    vec.sort_unstable();
    let mut out = Vec::new();
    loop {
        out.push(vec.clone());
        if !next_permutation(&mut vec) {
            break;
        }
    }
    out
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn monomials(f: &SymPoly) -> Vec<(Vec<usize>, BigInt)> {
    let mut out = Vec::new();
    for (key, value) in &f.coeffs {
        for v in orbit_vectors(key, f.k) {
            out.push((v, value.clone()));
        }
    }
    out
}

/// Exact product. Both factors are expanded into explicit monomial orbits;
/// the symmetric result is collected by reading coefficients at the sorted
/// representative of each orbit only.
pub fn multiply(f: &SymPoly, g: &SymPoly) -> Result<SymPoly> {
    if f.k != g.k {
        return Err(Error::VariableCountMismatch(format!(
            "{} vs {} variables",
            f.k, g.k
        )));
    }
    let k = f.k;
    let fm = monomials(f);
    let gm = monomials(g);
    let mut out = SymPoly::zero(k);
    let mut sum = vec![0usize; k];
    for (u, cu) in &fm {
        for (v, cv) in &gm {
            let mut sorted = true;
            for i in 0..k {
                sum[i] = u[i] + v[i];
                if i > 0 && sum[i] > sum[i - 1] {
                    sorted = false;
                    break;
                }
            }
            if !sorted {
                continue;
            }
            let key = Partition::new(sum.clone());
            out.add_assign_term(&key, &(cu * cv));
        }
    }
    Ok(out)
}

/// Expands `f` in the Schur basis by iterated dominance elimination.
/// Coefficients may be negative for general symmetric `f`.
pub fn schur_expand(f: &SymPoly) -> BTreeMap<Partition, BigInt> {
    let mut rest = f.clone();
    let mut out = BTreeMap::new();
    // Termination guard: every round zeroes one maximal key and only
    // introduces strictly dominated keys, so the rounds are bounded by the
    // number of partitions of the degrees present.
    let mut budget: usize = 16;
    let mut seen_sizes = std::collections::HashSet::new();
    for key in rest.coeffs.keys() {
        if seen_sizes.insert(key.size()) {
            let p: usize = partition_count(key.size())
                .try_into()
                .unwrap_or(usize::MAX / 4);
            budget = budget.saturating_add(2 * p);
        }
    }
    while let Some((key, value)) = rest.coeffs.iter().next_back() {
        assert!(budget > 0, "schur expansion failed to terminate");
        budget -= 1;
        // The lexicographically greatest key is dominance-maximal, so its
        // monomial coefficient equals its Schur coefficient.
        let key = key.clone();
        let value = value.clone();
        let s = gen_s(&key, rest.k);
        rest.sub_assign_scaled(&s, &value);
        out.insert(key, value);
    }
    out
}

/// Sparse orbit enumeration: assigns the parts of `mu` to distinct slots in
/// `0..slots`, calling `f` with `(slot, part)` pairs. Equal parts are grouped
/// so each distinct assignment is produced exactly once.
fn for_each_sparse_assignment(mu: &Partition, slots: usize, f: &mut impl FnMut(&[(usize, usize)])) {
    let mut groups: Vec<(usize, usize)> = Vec::new();
    for &part in mu.parts() {
        match groups.last_mut() {
            Some((v, m)) if *v == part => *m += 1,
            _ => groups.push((part, 1)),
        }
    }
    if mu.len() > slots {
        return;
    }
    let mut used = vec![false; slots];
    let mut assignment: Vec<(usize, usize)> = Vec::with_capacity(mu.len());
    assign_group(&groups, 0, slots, &mut used, &mut assignment, f);
}

fn assign_group(
    groups: &[(usize, usize)],
    g: usize,
    slots: usize,
    used: &mut Vec<bool>,
    assignment: &mut Vec<(usize, usize)>,
    f: &mut impl FnMut(&[(usize, usize)]),
) {
    if g == groups.len() {
        f(assignment);
        return;
    }
    let (value, mult) = groups[g];
    choose_slots(CS {
        slots,
        from: 0,
        left: mult,
        value,
        groups,
        g,
    }, used, assignment, f);
}

struct CS<'a> {
    slots: usize,
    from: usize,
    left: usize,
    value: usize,
    groups: &'a [(usize, usize)],
    g: usize,
}

fn choose_slots(
    cs: CS<'_>,
    used: &mut Vec<bool>,
    assignment: &mut Vec<(usize, usize)>,
    f: &mut impl FnMut(&[(usize, usize)]),
) {
    if cs.left == 0 {
        assign_group(cs.groups, cs.g + 1, cs.slots, used, assignment, f);
        return;
    }
    if cs.slots - cs.from < cs.left {
        return;
    }
    for slot in cs.from..cs.slots {
        if used[slot] {
            continue;
        }
        used[slot] = true;
        assignment.push((slot, cs.value));
        choose_slots(
            CS {
                from: slot + 1,
                left: cs.left - 1,
                ..cs
            },
            used,
            assignment,
            f,
        );
        assignment.pop();
        used[slot] = false;
    }
}

/// Plethysm substitution `f[g]`: lists the monomials of `g` (with
/// multiplicity) as exponent vectors `alpha^1..alpha^N` and evaluates `f` at
/// the substituted monomial variables. Requires `f` to live in at least `N`
/// variables and `g` to have nonnegative coefficients.
pub fn plethysm_substitute(f: &SymPoly, g: &SymPoly) -> Result<SymPoly> {
    let k = g.k;
    let mut alphas: Vec<Vec<usize>> = Vec::new();
    for (key, value) in &g.coeffs {
        if value.is_negative() {
            return Err(Error::NegativeCoefficient(format!(
                "coefficient of m_{key} is {value}"
            )));
        }
        let copies: usize = value
            .to_biguint()
            .unwrap()
            .try_into()
            .map_err(|_| Error::Infeasible("plethysm inner coefficient too large".into()))?;
        for v in orbit_vectors(key, k) {
            for _ in 0..copies {
                alphas.push(v.clone());
            }
        }
    }
    let n_monomials = alphas.len();
    if f.k < n_monomials {
        return Err(Error::VariableCountMismatch(format!(
            "outer factor has {} variables but the inner function expands to {} monomials",
            f.k, n_monomials
        )));
    }
    let mut out = SymPoly::zero(k);
    for (key, coeff) in &f.coeffs {
        for_each_sparse_assignment(key, n_monomials, &mut |assignment| {
            let mut exps = vec![0usize; k];
            for &(slot, e) in assignment {
                for (i, exp) in exps.iter_mut().enumerate() {
                    *exp += e * alphas[slot][i];
                }
            }
            // collect at sorted representatives only
            if exps.windows(2).all(|w| w[0] >= w[1]) {
                out.add_assign_term(&Partition::new(exps), coeff);
            }
        });
    }
    Ok(out)
}

/// Schur expansion of `h_d[h_m]` in `k` variables. Regenerates the outer
/// `h_d` in as many variables as `h_m` has monomials, per the substitution
/// contract.
pub fn plethysm_hd_hm(d: usize, m: usize, k: usize) -> Result<BTreeMap<Partition, BigInt>> {
    let inner = gen_h(m, k);
    let n_monomials: usize = inner
        .coeffs()
        .keys()
        .map(|key| orbit_vectors(key, k).len())
        .sum();
    let outer = gen_h(d, n_monomials);
    let composed = plethysm_substitute(&outer, &inner)?;
    Ok(schur_expand(&composed))
}

/// Kronecker coefficient oracle via the substitution
/// `s_lambda(x_i y_j) = sum g(lambda,mu,nu) s_mu(x) s_nu(y)`: enumerates
/// SSYTs of `lambda` over the product alphabet, collects the bivariate
/// monomial coefficients at canonical representatives, then extracts Schur
/// coefficients in both alphabets by iterated dominance elimination.
pub fn kron_oracle(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigUint> {
    let n = lambda.size();
    if mu.size() != n || nu.size() != n {
        return Err(Error::SizeMismatch(format!(
            "|lambda|={}, |mu|={}, |nu|={}",
            n,
            mu.size(),
            nu.size()
        )));
    }
    if n == 0 {
        return Ok(BigUint::one());
    }
    let kx = mu.len();
    let ky = nu.len();
    if lambda.len() > kx * ky {
        return Ok(BigUint::zero());
    }
    if n > 8 || kx * ky > 36 {
        return Err(Error::Infeasible(format!(
            "kron oracle budget exceeded: n={n}, {kx}x{ky} product alphabet"
        )));
    }

    // Bivariate coefficients at canonical monomials x^rho y^tau.
    let mut table: BTreeMap<(Partition, Partition), BigInt> = BTreeMap::new();
    let shape = SkewShape::straight(lambda.clone());
    // letter l (1-indexed) corresponds to x_{(l-1)/ky} y_{(l-1)%ky}
    for_each_ssyt(&shape, kx * ky, |t| {
        let mut xdeg = vec![0usize; kx];
        let mut ydeg = vec![0usize; ky];
        for row in t.rows() {
            for &l in row {
                xdeg[(l - 1) / ky] += 1;
                ydeg[(l - 1) % ky] += 1;
            }
        }
        if xdeg.windows(2).all(|w| w[0] >= w[1]) && ydeg.windows(2).all(|w| w[0] >= w[1]) {
            let key = (Partition::new(xdeg), Partition::new(ydeg));
            *table.entry(key).or_insert_with(BigInt::zero) += 1;
        }
    });
    table.retain(|_, v| !v.is_zero());

    // Iterated dominance elimination in the two alphabets. The pairwise
    // lexicographically greatest key is maximal in the product dominance
    // order, so its coefficient is an exact Kronecker coefficient.
    let mut kostka_x: BTreeMap<Partition, SymPoly> = BTreeMap::new();
    let mut kostka_y: BTreeMap<Partition, SymPoly> = BTreeMap::new();
    let mut result = BigUint::zero();
    while let Some(((a, b), g)) = table.iter().next_back().map(|(k, v)| (k.clone(), v.clone())) {
        assert!(
            !g.is_negative(),
            "negative Kronecker multiplicity for ({a}, {b})"
        );
        if &a == mu && &b == nu {
            result = g.to_biguint().unwrap();
            break;
        }
        let sx = kostka_x
            .entry(a.clone())
            .or_insert_with(|| gen_s(&a, kx))
            .clone();
        let sy = kostka_y
            .entry(b.clone())
            .or_insert_with(|| gen_s(&b, ky))
            .clone();
        for (rho, k1) in sx.coeffs() {
            for (tau, k2) in sy.coeffs() {
                let key = (rho.clone(), tau.clone());
                let entry = table.entry(key.clone()).or_insert_with(BigInt::zero);
                *entry -= &g * k1 * k2;
                if entry.is_zero() {
                    table.remove(&key);
                }
            }
        }
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{parse_partition, partitions_of};

    fn p(text: &str) -> Partition {
        parse_partition(text).unwrap()
    }

    fn int(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn generators_small() {
        assert_eq!(gen_h(0, 3), SymPoly::one(3));
        let h2 = gen_h(2, 2);
        assert_eq!(h2.coeff(&p("2")), int(1));
        assert_eq!(h2.coeff(&p("1,1")), int(1));
        assert_eq!(h2.coeffs().len(), 2);

        assert!(gen_e(3, 2).is_zero());
        assert_eq!(gen_e(2, 3).coeff(&p("1,1")), int(1));
        assert_eq!(gen_p(2, 2).coeff(&p("2")), int(1));
        assert_eq!(gen_p(0, 2), SymPoly::one(2));
    }

    #[test]
    fn schur_via_ssyt_small() {
        assert_eq!(gen_s(&p("1"), 3).coeff(&p("1")), int(1));
        // in two variables the (1,1,1) key disappears
        let s21 = gen_s(&p("2,1"), 2);
        assert_eq!(s21.coeff(&p("2,1")), int(1));
        assert_eq!(s21.coeffs().len(), 1);
        let s21_k3 = gen_s(&p("2,1"), 3);
        assert_eq!(s21_k3.coeff(&p("2,1")), int(1));
        assert_eq!(s21_k3.coeff(&p("1,1,1")), int(2));
    }

    #[test]
    fn schur_matches_jacobi_trudi() {
        for n in 0..=8 {
            for lam in partitions_of(n) {
                for k in 1..=5usize {
                    if lam.len() > k {
                        continue;
                    }
                    assert_eq!(
                        gen_s(&lam, k),
                        gen_s_jacobi_trudi(&lam, k),
                        "{lam:?} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn schur_coefficients_are_kostka_numbers() {
        for n in 0..=7 {
            for lam in partitions_of(n) {
                let k = n.max(1);
                let s = gen_s(&lam, k);
                let st = SkewShape::straight(lam.clone());
                for mu in partitions_of(n) {
                    let expected = crate::tableaux::kostka(
                        &st,
                        &crate::partition::Composition(mu.parts().to_vec()),
                    );
                    assert_eq!(
                        s.coeff(&mu),
                        BigInt::from(expected),
                        "K coefficient {lam:?} {mu:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn multiply_basics() {
        let one = SymPoly::one(2);
        let s1 = gen_s(&p("1"), 2);
        assert_eq!(multiply(&s1, &one).unwrap(), s1);
        // s1 * s1 = s2 + s11 (Pieri at n = 2)
        let sq = multiply(&s1, &s1).unwrap();
        let mut expect = gen_s(&p("2"), 2);
        expect.add_assign(&gen_s(&p("1,1"), 2));
        assert_eq!(sq, expect);
        // commutativity spot check
        let a = gen_s(&p("2,1"), 3);
        let b = gen_h(2, 3);
        assert_eq!(multiply(&a, &b).unwrap(), multiply(&b, &a).unwrap());
        assert!(multiply(&gen_h(1, 2), &gen_h(1, 3)).is_err());
    }

    #[test]
    fn schur_expand_round_trip() {
        for n in 0..=8 {
            for lam in partitions_of(n) {
                for k in lam.len().max(1)..=5 {
                    if lam.len() > k {
                        continue;
                    }
                    let expanded = schur_expand(&gen_s(&lam, k));
                    assert_eq!(expanded.len(), 1, "{lam:?}");
                    assert_eq!(expanded.get(&lam), Some(&int(1)));
                }
            }
        }
    }

    #[test]
    fn schur_expand_examples() {
        // h_m = s_(m)
        for m in 1..=6 {
            let ex = schur_expand(&gen_h(m, 3));
            assert_eq!(ex.len(), 1);
            assert_eq!(ex.get(&Partition::new(vec![m])), Some(&int(1)));
        }
        // p_2 = s_2 - s_11
        let ex = schur_expand(&gen_p(2, 2));
        assert_eq!(ex.get(&p("2")), Some(&int(1)));
        assert_eq!(ex.get(&p("1,1")), Some(&int(-1)));
        assert_eq!(ex.len(), 2);
    }

    #[test]
    fn plethysm_h2_h2() {
        let table = plethysm_hd_hm(2, 2, 2).unwrap();
        assert_eq!(table.get(&p("4")), Some(&int(1)));
        assert_eq!(table.get(&p("2,2")), Some(&int(1)));
        assert_eq!(table.len(), 2);
        // with more variables the (3,1) coefficient is still absent
        let table3 = plethysm_hd_hm(2, 2, 3).unwrap();
        assert_eq!(table3.get(&p("3,1")), None);
        assert_eq!(table3.get(&p("2,2")), Some(&int(1)));
    }

    #[test]
    fn plethysm_identity_monomial() {
        // f[g] with g a single monomial x_1 is f itself
        let mut g = SymPoly::zero(1);
        g.insert(p("1"), int(1));
        let f = gen_h(3, 1);
        let sub = plethysm_substitute(&f, &g).unwrap();
        assert_eq!(sub, gen_h(3, 1));
    }

    #[test]
    fn plethysm_rejects_negative_inner() {
        let mut g = SymPoly::zero(2);
        g.insert(p("1"), int(-1));
        let f = gen_h(1, 4);
        assert!(matches!(
            plethysm_substitute(&f, &g),
            Err(Error::NegativeCoefficient(_))
        ));
    }

    #[test]
    fn kron_oracle_small_values() {
        let one = BigUint::one();
        let zero = BigUint::zero();
        assert_eq!(kron_oracle(&p("2"), &p("2"), &p("2")).unwrap(), one);
        assert_eq!(kron_oracle(&p("1,1"), &p("2"), &p("2")).unwrap(), zero);
        assert_eq!(kron_oracle(&p("1,1"), &p("1,1"), &p("2")).unwrap(), one);
        assert_eq!(kron_oracle(&p("1,1"), &p("1,1"), &p("1,1")).unwrap(), zero);
        assert_eq!(kron_oracle(&p("2,1"), &p("2,1"), &p("2,1")).unwrap(), one);
    }

    #[test]
    fn lr_identity_from_products() {
        // s_mu s_nu expands with the classical n=2 Pieri shape
        let prod = multiply(&gen_s(&p("1"), 2), &gen_s(&p("1"), 2)).unwrap();
        let ex = schur_expand(&prod);
        assert_eq!(ex.get(&p("2")), Some(&int(1)));
        assert_eq!(ex.get(&p("1,1")), Some(&int(1)));
    }

    #[test]
    fn power_sums_expand_to_character_columns() {
        // p_alpha = sum_lambda chi^lambda(alpha) s_lambda: the Schur
        // expansion of power-sum products must reproduce the
        // Murnaghan-Nakayama table column by column
        for n in 1..=6usize {
            let table = crate::kronecker::character_table(n).unwrap();
            for alpha in partitions_of(n) {
                let mut p_alpha = SymPoly::one(n);
                for &part in alpha.parts() {
                    p_alpha = multiply(&p_alpha, &gen_p(part, n)).unwrap();
                }
                let expansion = schur_expand(&p_alpha);
                for lam in partitions_of(n) {
                    let coeff = expansion.get(&lam).cloned().unwrap_or_default();
                    assert_eq!(&coeff, table.chi(&lam, &alpha), "{lam:?} at {alpha:?}");
                }
            }
        }
    }
}
