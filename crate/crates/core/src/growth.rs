//! Dimension-growth classification and the finitely checkable bounds.
//!
//! The growth of `f^lambda` splits into three regimes by the aft and the
//! Durfee square: polynomial (`aft(lambda) = k` fixed, `f <= n^k/sqrt(k!)`),
//! exponential (`d(lambda)` bounded, `f <= (2d)^n`), and superexponential
//! (`d(lambda) ~ c sqrt(n)`). Every comparison here is exact big-integer or
//! big-rational arithmetic; each checker verifies a proven inequality, so a
//! `false` return is a defect, not data.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lr::lr_via_tableaux;
use crate::partition::{binomial, factorial, Partition};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GrowthClass {
    /// `f^lambda <= n^k / sqrt(k!)` with `k = aft(lambda)` small.
    PolynomialWitness { k: usize },
    /// Durfee square below the superexponential threshold but aft large:
    /// `f^lambda <= (2d)^n`.
    ExponentialBand { durfee: usize },
    /// `d(lambda) >= c sqrt(n)`: growth of order `exp(Theta(n log n))`.
    SuperexponentialBand { durfee: usize },
}

impl GrowthClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            GrowthClass::PolynomialWitness { .. } => "polynomial",
            GrowthClass::ExponentialBand { .. } => "exponential",
            GrowthClass::SuperexponentialBand { .. } => "superexponential",
        }
    }
}

#[derive(Clone, Debug)]
pub struct GrowthConfig {
    /// aft cutoff below which the polynomial witness is reported.
    pub poly_aft_cutoff: usize,
    /// Durfee threshold `d >= (num/den) sqrt(n)` for the superexponential
    /// band, compared exactly as `(den*d)^2 >= num^2 * n`.
    pub durfee_sqrt_num: usize,
    pub durfee_sqrt_den: usize,
}

impl Default for GrowthConfig {
    fn default() -> Self {
        GrowthConfig {
            poly_aft_cutoff: 8,
            durfee_sqrt_num: 1,
            durfee_sqrt_den: 2,
        }
    }
}

/// A classification with its witnesses and the verified bound checks.
#[derive(Clone, Debug)]
pub struct GrowthReport {
    pub partition: Partition,
    pub n: usize,
    pub aft: usize,
    pub durfee: usize,
    pub dimension: BigUint,
    pub class: GrowthClass,
    pub bounds_checked: Vec<(&'static str, bool)>,
}

/// Classifies the dimension growth of `f^lambda` with explicit witnesses.
pub fn classify_growth(lambda: &Partition) -> GrowthReport {
    classify_growth_with(lambda, &GrowthConfig::default())
}

pub fn classify_growth_with(lambda: &Partition, config: &GrowthConfig) -> GrowthReport {
    let n = lambda.size();
    let aft = lambda.aft();
    let durfee = lambda.durfee();
    let dimension = lambda.dimension();
    let class = if aft <= config.poly_aft_cutoff {
        GrowthClass::PolynomialWitness { k: aft }
    } else {
        let lhs = config.durfee_sqrt_den * durfee;
        if lhs * lhs >= config.durfee_sqrt_num * config.durfee_sqrt_num * n {
            GrowthClass::SuperexponentialBand { durfee }
        } else {
            GrowthClass::ExponentialBand { durfee }
        }
    };
    let (lower_ok, upper_ok) = check_aft_bounds(lambda);
    let bounds_checked = vec![
        ("aft_lower_binomial", lower_ok),
        ("aft_upper_poly", upper_ok),
        ("regev_durfee", check_regev_bound(lambda)),
    ];
    GrowthReport {
        partition: lambda.clone(),
        n,
        aft,
        durfee,
        dimension,
        class,
        bounds_checked,
    }
}

/// Checks `binom(n-k, k) <= f^lambda` and `f^lambda <= n^k / sqrt(k!)` with
/// `k = aft(lambda)`; the irrational right side is compared exactly as
/// `f^2 * k! <= n^(2k)`.
pub fn check_aft_bounds(lambda: &Partition) -> (bool, bool) {
    let n = lambda.size();
    let k = lambda.aft();
    let f = lambda.dimension();
    let lower_ok = binomial(n.saturating_sub(k), k) <= f;
    let upper_ok = &f * &f * factorial(k) <= pow_big(n, 2 * k);
    (lower_ok, upper_ok)
}

/// Checks `f^lambda <= (2 d(lambda))^n` exactly.
pub fn check_regev_bound(lambda: &Partition) -> bool {
    let n = lambda.size();
    let d = lambda.durfee();
    lambda.dimension() <= pow_big(2 * d, n)
}

fn pow_big(base: usize, exp: usize) -> BigUint {
    if exp == 0 {
        return BigUint::one();
    }
    BigUint::from(base).pow(exp as u32)
}

/// Diagnostic ratio for Kronecker triples: sorts so the largest dimension is
/// the denominator and returns `f_second * f_third / f_max` exactly, plus
/// whether the ratio lies in `[1, n^k]` for the probe exponent `k`.
pub struct DimRatio {
    pub ratio: BigRational,
    pub within_band: bool,
}

pub fn dim_ratio_kron(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    band_exponent: usize,
) -> Result<DimRatio> {
    let n = lambda.size();
    if mu.size() != n || nu.size() != n {
        return Err(Error::SizeMismatch(format!(
            "|lambda|={}, |mu|={}, |nu|={}",
            n,
            mu.size(),
            nu.size()
        )));
    }
    let mut dims = [lambda.dimension(), mu.dimension(), nu.dimension()];
    dims.sort();
    let [small, mid, big]: [BigUint; 3] = dims;
    let ratio = BigRational::new(BigInt::from(small * mid), BigInt::from(big));
    let within_band = ratio >= BigRational::one()
        && ratio <= BigRational::from(BigInt::from(pow_big(n, band_exponent)));
    Ok(DimRatio { ratio, within_band })
}

/// For positive LR triples, verifies `f^lambda / (f^mu f^nu) <= binom(n, m)`
/// exactly; zero-LR triples are vacuously true.
pub fn check_lr_ratio_bound(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<bool> {
    let n = lambda.size();
    let m = mu.size();
    if n != m + nu.size() {
        return Err(Error::SizeMismatch(format!(
            "|lambda|={} but |mu|+|nu|={}",
            n,
            m + nu.size()
        )));
    }
    if lr_via_tableaux(lambda, mu, nu).is_zero() {
        return Ok(true);
    }
    Ok(lambda.dimension() <= binomial(n, m) * mu.dimension() * nu.dimension())
}
