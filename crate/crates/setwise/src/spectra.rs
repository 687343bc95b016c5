//! Eigenvalues of weighted unions of conjugacy classes in the class scheme
//! of Sym(n), plus the ratio and clique-coclique bounds.
//!
//! A [`Weighting`] assigns an exact rational row-sum contribution ω_i to each
//! selected class C_i (the per-element weight is ω_i / |C_i| and is never
//! stored). For every partition λ ⊢ n the weighted adjacency matrix acts on
//! the λ-isotypic component as the scalar
//!
//! ξ_λ = Σ_i ω_i · χ^λ(C_i) / χ^λ(id),
//!
//! so the full spectrum is read off from character values. Everything here
//! is exact rational arithmetic; interval claims such as "ξ ∈ [-1, d]" are
//! decided by exact comparison, never by tolerance.

use std::fmt;

use num::bigint::BigInt;
use num::{BigRational, BigUint, One, Signed, Zero};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::characters::{character_magnitude_bound, class_size, mn_character, CycleType};
use crate::par::{map_collect, Parallelism};
use crate::partitions::{hook_degree, partitions_of, Partition};
use crate::rational::{big_to_ratio, binomial, format_rational};
use crate::{Error, Result};

/// Which pipeline produced a weighting: the odd-n case, the even-n case, or
/// a hand-rolled (custom) class selection.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ParityCase {
    Odd,
    Even,
    Custom,
}

impl fmt::Display for ParityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParityCase::Odd => write!(f, "odd"),
            ParityCase::Even => write!(f, "even"),
            ParityCase::Custom => write!(f, "custom"),
        }
    }
}

/// Spectrum evaluation regime: `Exact` evaluates every partition of n,
/// `Hybrid` evaluates partitions of small degree exactly and certifies a
/// uniform bound for the rest.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Hybrid,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Exact => write!(f, "exact"),
            Mode::Hybrid => write!(f, "hybrid"),
        }
    }
}

/// The two free parameters (t, s) that the weight formulas are affine in.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightParams {
    pub t: BigRational,
    pub s: BigRational,
}

/// A weighted union of conjugacy classes of Sym(n): classes C_i with exact
/// rational row-sum contributions ω_i.
///
/// Invariants enforced on construction: classes are pairwise distinct, all
/// partition the same n as the weighting, one ω per class, and whenever the
/// case is not [`ParityCase::Custom`] every class is a 3-derangement class
/// and n has the announced parity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Weighting {
    n: u32,
    classes: Vec<CycleType>,
    omegas: Vec<BigRational>,
    params: Option<WeightParams>,
    parity: ParityCase,
}

impl Weighting {
    /// Builds a weighting, validating the invariants above.
    pub fn new(
        n: u32,
        classes: Vec<CycleType>,
        omegas: Vec<BigRational>,
        params: Option<WeightParams>,
        parity: ParityCase,
    ) -> Result<Self> {
        if classes.len() != omegas.len() {
            return Err(Error::invalid(format!(
                "{} classes but {} weights",
                classes.len(),
                omegas.len()
            )));
        }
        for (i, c) in classes.iter().enumerate() {
            if c.n() != n {
                return Err(Error::invalid(format!(
                    "class {c} lives in Sym({}) rather than Sym({n})",
                    c.n()
                )));
            }
            if classes[..i].contains(c) {
                return Err(Error::invalid(format!("duplicate class {c}")));
            }
        }
        match parity {
            ParityCase::Odd | ParityCase::Even => {
                let wanted = if parity == ParityCase::Odd { 1 } else { 0 };
                if n % 2 != wanted {
                    return Err(Error::invalid(format!(
                        "{parity}-case weighting requires {parity} n, got {n}"
                    )));
                }
                for c in &classes {
                    if !crate::certify::is_t_derangement_type(c, 3)? {
                        return Err(Error::invalid(format!("{c} is not a 3-derangement class")));
                    }
                }
            }
            ParityCase::Custom => {}
        }
        Ok(Weighting {
            n,
            classes,
            omegas,
            params,
            parity,
        })
    }

    /// A weighting with no parity-case bookkeeping and no (t, s) parameters.
    pub fn custom(n: u32, classes: Vec<CycleType>, omegas: Vec<BigRational>) -> Result<Self> {
        Weighting::new(n, classes, omegas, None, ParityCase::Custom)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn classes(&self) -> &[CycleType] {
        &self.classes
    }

    pub fn omegas(&self) -> &[BigRational] {
        &self.omegas
    }

    pub fn params(&self) -> Option<&WeightParams> {
        self.params.as_ref()
    }

    pub fn parity(&self) -> ParityCase {
        self.parity
    }

    /// Σ_i ω_i, which is ξ_{[n]}: the constant row sum of the weighted
    /// matrix.
    pub fn row_sum(&self) -> BigRational {
        self.omegas.iter().sum()
    }
}

/// One line of a spectrum report: a partition, its Specht-module degree,
/// and the exact eigenvalue on its isotypic component.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpectrumRow {
    pub partition: Partition,
    pub degree: BigUint,
    pub eigenvalue: BigRational,
}

/// What hybrid mode certified about the partitions it did not list: every
/// λ with degree ≥ `threshold` has |ξ_λ| ≤ `tail_bound` < 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HybridSummary {
    pub threshold: BigUint,
    pub tail_bound: BigRational,
    /// How many partitions of n were covered by the bound instead of being
    /// evaluated exactly.
    pub bounded: u64,
}

/// The exact spectrum of a weighted class union, with extremal values and
/// their attainers.
///
/// In exact mode `rows` lists every λ ⊢ n once, in the canonical
/// (lexicographically decreasing) partition order. In hybrid mode `rows`
/// lists exactly the λ of degree below the threshold and `hybrid` records
/// the certified bound covering the rest; min/max and attainers then refer
/// to the listed rows, which is conclusive whenever min ≤ -1 and max ≥ 1
/// since the tail lies strictly inside (-1, 1).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpectrumReport {
    pub weighting: Weighting,
    pub rows: Vec<SpectrumRow>,
    pub min_value: BigRational,
    pub max_value: BigRational,
    pub min_attainers: Vec<Partition>,
    pub max_attainers: Vec<Partition>,
    pub mode: Mode,
    pub hybrid: Option<HybridSummary>,
}

impl SpectrumReport {
    pub fn n(&self) -> u32 {
        self.weighting.n()
    }
}

/// ξ_λ = Σ_i ω_i · χ^λ(C_i) / χ^λ(id), the eigenvalue of the weighted class
/// union on the λ-isotypic component, as an exact rational.
///
/// # Errors
///
/// λ must partition w.n.
pub fn weighted_eigenvalue(lambda: &Partition, w: &Weighting) -> Result<BigRational> {
    if lambda.n() != w.n() {
        return Err(Error::invalid(format!(
            "{lambda} partitions {} but the weighting lives in Sym({})",
            lambda.n(),
            w.n()
        )));
    }
    let degree = big_to_ratio(hook_degree(lambda));
    let mut acc = BigRational::zero();
    for (omega, class) in w.omegas().iter().zip(w.classes()) {
        let chi = mn_character(lambda, class)?;
        acc += omega * BigRational::from(chi);
    }
    Ok(acc / degree)
}

/// The eigenvalue of the unweighted union of the given classes (every
/// per-element weight 1, so ω_i = |C_i|): (1/deg λ) Σ_{g ∈ C} χ^λ(g).
///
/// # Errors
///
/// Classes must be distinct and partition the same n as λ.
pub fn normal_cayley_eigenvalue(lambda: &Partition, classes: &[CycleType]) -> Result<BigRational> {
    let omegas = classes
        .iter()
        .map(|c| big_to_ratio(class_size(c)))
        .collect();
    let w = Weighting::custom(lambda.n(), classes.to_vec(), omegas)?;
    weighted_eigenvalue(lambda, &w)
}

/// The weighted ratio bound: a d-regular weighted adjacency matrix with
/// least eigenvalue τ < 0 bounds cocliques by |V| · (1 - d/τ)^{-1},
/// returned as the exact rational |V|·τ / (τ - d).
///
/// # Errors
///
/// Requires τ < 0 ≤ d; outside that range the bound is inapplicable.
pub fn ratio_bound(
    num_vertices: &BigUint,
    row_sum: &BigRational,
    min_eig: &BigRational,
) -> Result<BigRational> {
    if !min_eig.is_negative() {
        return Err(Error::invalid(format!(
            "ratio bound needs a negative least eigenvalue, got {}",
            format_rational(min_eig)
        )));
    }
    if row_sum.is_negative() {
        return Err(Error::invalid(format!(
            "ratio bound needs a non-negative row sum, got {}",
            format_rational(row_sum)
        )));
    }
    let v = big_to_ratio(num_vertices.clone());
    Ok(v * min_eig / (min_eig - row_sum))
}

/// The clique-coclique bound for vertex-transitive graphs:
/// α(X) ≤ |V(X)| / ω(X), as an exact rational.
///
/// # Errors
///
/// The witnessed clique must be nonempty.
pub fn clique_coclique_bound(num_vertices: &BigUint, clique_size: u64) -> Result<BigRational> {
    if clique_size == 0 {
        return Err(Error::invalid(
            "clique-coclique bound needs a clique of size at least 1",
        ));
    }
    Ok(big_to_ratio(num_vertices.clone()) / BigRational::from(BigInt::from(clique_size)))
}

/// The default hybrid threshold for a parity case: 5·C(n,3) in the odd
/// case, 3·C(n,3) in the even case. Custom weightings must supply their
/// own threshold.
pub fn default_threshold(n: u32, parity: ParityCase) -> Result<BigUint> {
    let base = binomial(n, 3);
    match parity {
        ParityCase::Odd => Ok(BigUint::from(5u32) * base),
        ParityCase::Even => Ok(BigUint::from(3u32) * base),
        ParityCase::Custom => Err(Error::invalid(
            "custom weightings have no default degree threshold; pass one explicitly",
        )),
    }
}

/// B = Σ_i |ω_i| · bound_i / threshold where bound_i is the uniform
/// character-magnitude bound of class C_i. Whenever B < 1, every λ with
/// degree ≥ threshold has |ξ_λ| ≤ B < 1.
///
/// # Errors
///
/// Every class must satisfy the magnitude-bound precondition (leading part
/// n - a with 3a+1 ≤ n); the error names the offending class.
pub(crate) fn magnitude_tail_bound(w: &Weighting, threshold: &BigUint) -> Result<BigRational> {
    if threshold.is_zero() {
        return Err(Error::invalid("degree threshold must be positive"));
    }
    let mut acc = BigRational::zero();
    for (omega, class) in w.omegas().iter().zip(w.classes()) {
        let bound = character_magnitude_bound(class)?;
        acc += omega.abs() * big_to_ratio(bound);
    }
    Ok(acc / big_to_ratio(threshold.clone()))
}

/// Computes the spectrum of a weighted class union.
///
/// Exact mode evaluates ξ_λ for every λ ⊢ n. Hybrid mode evaluates exactly
/// the λ with degree below `threshold` (defaulting per parity case, see
/// [`default_threshold`]) and certifies |ξ_λ| < 1 for all remaining λ via
/// the magnitude tail bound; the report's `hybrid` field records that
/// certificate.
///
/// The identity class is rejected outright: it contributes a constant shift
/// rather than a graph, and it is never a 3-derangement class.
///
/// # Errors
///
/// - identity class present, or empty class list → invalid argument;
/// - hybrid mode with a class violating the magnitude-bound precondition →
///   precondition error naming the class;
/// - hybrid tail bound B ≥ 1 → certification failure (fall back to exact).
pub fn full_spectrum(
    w: &Weighting,
    mode: Mode,
    threshold: Option<&BigUint>,
) -> Result<SpectrumReport> {
    full_spectrum_with(w, mode, threshold, Parallelism::auto())
}

/// [`full_spectrum`] with an explicit parallelism strategy; the report is
/// identical (and deterministically ordered) under either strategy.
pub fn full_spectrum_with(
    w: &Weighting,
    mode: Mode,
    threshold: Option<&BigUint>,
    strategy: Parallelism,
) -> Result<SpectrumReport> {
    if w.classes().is_empty() {
        return Err(Error::invalid("a spectrum needs at least one class"));
    }
    if let Some(c) = w.classes().iter().find(|c| c.is_identity()) {
        return Err(Error::invalid(format!(
            "{c} is the identity class, which fixes every 3-set and is not a 3-derangement class"
        )));
    }

    let all = partitions_of(w.n())?;
    let (evaluate, hybrid) = match mode {
        Mode::Exact => (all, None),
        Mode::Hybrid => {
            let threshold = match threshold {
                Some(t) => t.clone(),
                None => default_threshold(w.n(), w.parity())?,
            };
            let tail_bound = magnitude_tail_bound(w, &threshold)?;
            if tail_bound >= BigRational::one() {
                return Err(Error::certification(format!(
                    "hybrid tail bound {} is not below 1; use exact mode",
                    format_rational(&tail_bound)
                )));
            }
            let total = all.len();
            let small: Vec<Partition> = all
                .into_iter()
                .filter(|lam| hook_degree(lam) < threshold)
                .collect();
            let bounded = (total - small.len()) as u64;
            (
                small,
                Some(HybridSummary {
                    threshold,
                    tail_bound,
                    bounded,
                }),
            )
        }
    };

    let rows: Vec<SpectrumRow> = map_collect(&evaluate, strategy, |lam| SpectrumRow {
        partition: lam.clone(),
        degree: hook_degree(lam),
        eigenvalue: weighted_eigenvalue(lam, w).expect("partition of w.n by construction"),
    });
    if rows.is_empty() {
        return Err(Error::invalid(
            "hybrid threshold excludes every partition; nothing to report",
        ));
    }

    let min_value = rows.iter().map(|r| &r.eigenvalue).min().unwrap().clone();
    let max_value = rows.iter().map(|r| &r.eigenvalue).max().unwrap().clone();
    let min_attainers = rows
        .iter()
        .filter(|r| r.eigenvalue == min_value)
        .map(|r| r.partition.clone())
        .collect();
    let max_attainers = rows
        .iter()
        .filter(|r| r.eigenvalue == max_value)
        .map(|r| r.partition.clone())
        .collect();

    Ok(SpectrumReport {
        weighting: w.clone(),
        rows,
        min_value,
        max_value,
        min_attainers,
        max_attainers,
        mode,
        hybrid,
    })
}

impl Serialize for SpectrumRow {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(3))?;
        map.serialize_entry("partition", &self.partition)?;
        map.serialize_entry("degree", &self.degree.to_string())?;
        map.serialize_entry("eigenvalue", &format_rational(&self.eigenvalue))?;
        map.end()
    }
}

impl Serialize for SpectrumReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        map.serialize_entry("n", &self.n())?;
        map.serialize_entry("case", &self.weighting.parity())?;
        match self.weighting.params() {
            Some(p) => {
                let mut params = std::collections::BTreeMap::new();
                params.insert("s", format_rational(&p.s));
                params.insert("t", format_rational(&p.t));
                map.serialize_entry("params", &params)?;
            }
            None => map.serialize_entry("params", &Option::<()>::None)?,
        }
        map.serialize_entry("classes", self.weighting.classes())?;
        let omegas: Vec<String> = self
            .weighting
            .omegas()
            .iter()
            .map(format_rational)
            .collect();
        map.serialize_entry("omegas", &omegas)?;
        map.serialize_entry("rows", &self.rows)?;
        map.serialize_entry("min", &format_rational(&self.min_value))?;
        map.serialize_entry("max", &format_rational(&self.max_value))?;
        map.serialize_entry("minAttainers", &self.min_attainers)?;
        map.serialize_entry("maxAttainers", &self.max_attainers)?;
        map.serialize_entry("mode", &self.mode)?;
        if let Some(h) = &self.hybrid {
            let mut extra = std::collections::BTreeMap::new();
            extra.insert("threshold", h.threshold.to_string());
            extra.insert("tailBound", format_rational(&h.tail_bound));
            extra.insert("bounded", h.bounded.to_string());
            map.serialize_entry("hybrid", &extra)?;
        }
        map.end()
    }
}
