//! Independent brute-force cross-checks at small n: explicit symmetric
//! groups and dense Cayley matrices, character-table orthogonality, the
//! canonical coclique, and exact maximum-coclique search.
//!
//! Nothing in this module feeds the certificate pipeline; it exists to
//! validate the character and spectrum machinery against computations that
//! share no code with it. The dense spectrum check offers two regimes: a
//! floating-point eigensolve matched within 1e-9, and a fully exact route
//! that proves the integer matrix is annihilated by its predicted
//! eigenvalues and has the predicted moments (which pins the multiset, the
//! moment map on fixed distinct nodes being a nonsingular Vandermonde
//! system).

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use nalgebra::DMatrix;
use num::bigint::BigInt;
use num::{BigRational, Integer, One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::certify::is_t_derangement_type;
use crate::characters::{class_size, mn_character, CycleType};
use crate::par::{map_collect, Parallelism};
use crate::partitions::{hook_degree, partitions_of};
use crate::rational::factorial;
use crate::spectra::{weighted_eigenvalue, Weighting};
use crate::{Error, Result};

/// Largest n for which [`PermGroupTable`] will materialize all of Sym(n).
pub const TABLE_CAP: u32 = 8;
/// Largest n for the floating-point dense spectrum check (720 x 720).
pub const FLOAT_SPECTRUM_CAP: u32 = 6;
/// Largest n for the exact dense spectrum check (120 x 120 integer matrix
/// products).
pub const EXACT_SPECTRUM_CAP: u32 = 5;
/// Default cap for exact maximum-coclique search.
pub const DEFAULT_MIS_CAP: u32 = 5;
/// Hard ceiling for the coclique search; n = 6 is a stretch that may take
/// very long and is never enabled implicitly.
pub const MIS_HARD_CAP: u32 = 6;
/// Largest n for which the canonical coclique is materialized.
pub const COCLIQUE_CAP: u32 = 10;
/// Pairwise independence of the canonical coclique is verified up to here.
const INDEPENDENCE_CHECK_CAP: u32 = 8;

/// How the dense Cayley spectrum is matched against predictions.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OracleMode {
    /// f64 eigensolve, matched within 1e-9.
    Float,
    /// Integer annihilator-polynomial and moment verification; no floats.
    Exact,
}

impl fmt::Display for OracleMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleMode::Float => write!(f, "float"),
            OracleMode::Exact => write!(f, "exact"),
        }
    }
}

fn inverse(p: &[u8]) -> Vec<u8> {
    let mut inv = vec![0u8; p.len()];
    for (a, &b) in p.iter().enumerate() {
        inv[b as usize] = a as u8;
    }
    inv
}

/// p ∘ q⁻¹ in one-line notation: the permutation sending a to p[q⁻¹(a)].
fn compose_inv(p: &[u8], q: &[u8]) -> Vec<u8> {
    let qinv = inverse(q);
    qinv.iter().map(|&a| p[a as usize]).collect()
}

fn cycle_type_of(p: &[u8]) -> CycleType {
    let mut seen = vec![false; p.len()];
    let mut parts = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0u32;
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            j = p[j] as usize;
            len += 1;
        }
        parts.push(len);
    }
    CycleType::new(parts).expect("cycle lengths are positive")
}

/// All of Sym(n) in one-line notation (0-based), with each element's
/// conjugacy class resolved. The element order is lexicographic and the
/// class list is the canonical partition order, so the table is
/// deterministic.
pub struct PermGroupTable {
    n: u32,
    elements: Vec<Vec<u8>>,
    classes: Vec<CycleType>,
    class_index: Vec<usize>,
}

impl PermGroupTable {
    /// Materializes Sym(n).
    ///
    /// # Errors
    ///
    /// Refuses n = 0 and n > [`TABLE_CAP`] (the table is n! elements).
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 || n > TABLE_CAP {
            return Err(Error::invalid(format!(
                "group table supports 1 <= n <= {TABLE_CAP}, got {n}"
            )));
        }
        let elements: Vec<Vec<u8>> = (0u8..n as u8).permutations(n as usize).collect();
        let classes: Vec<CycleType> = partitions_of(n)?
            .into_iter()
            .map(|p| CycleType::new(p.parts().to_vec()).expect("valid"))
            .collect();
        let position: BTreeMap<&CycleType, usize> =
            classes.iter().enumerate().map(|(i, c)| (c, i)).collect();
        let class_index = elements
            .iter()
            .map(|p| position[&cycle_type_of(p)])
            .collect();
        Ok(PermGroupTable {
            n,
            elements,
            classes,
            class_index,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn elements(&self) -> &[Vec<u8>] {
        &self.elements
    }

    pub fn classes(&self) -> &[CycleType] {
        &self.classes
    }

    /// The conjugacy class of the element at `index`.
    pub fn class_of(&self, index: usize) -> &CycleType {
        &self.classes[self.class_index[index]]
    }
}

/// Builds the n! x n! weighted Cayley matrix of `w` (entry at (u, v) is the
/// per-element weight ω_i/|C_i| of the class of uv⁻¹) and verifies that its
/// eigenvalue multiset equals the character-predicted multiset
/// {ξ_λ with multiplicity deg(λ)²}. Returns the verified multiset in
/// ascending order.
///
/// # Errors
///
/// - n beyond the mode's cap ([`FLOAT_SPECTRUM_CAP`] / [`EXACT_SPECTRUM_CAP`])
///   → refused;
/// - float mode with predicted eigenvalues closer than the matching
///   tolerance allows → refused (use exact mode);
/// - dense spectrum disagreeing with the prediction → certification failure
///   (this would mean a defect in the character machinery).
pub fn brute_cayley_spectrum(w: &Weighting, mode: OracleMode) -> Result<Vec<(BigRational, u64)>> {
    let n = w.n();
    let cap = match mode {
        OracleMode::Float => FLOAT_SPECTRUM_CAP,
        OracleMode::Exact => EXACT_SPECTRUM_CAP,
    };
    if n == 0 || n > cap {
        return Err(Error::invalid(format!(
            "dense {mode} spectrum supports 1 <= n <= {cap}, got {n}"
        )));
    }

    let mut predicted: BTreeMap<BigRational, u64> = BTreeMap::new();
    for lam in partitions_of(n)? {
        let xi = weighted_eigenvalue(&lam, w)?;
        let degree = u64::try_from(hook_degree(&lam)).expect("small degree");
        *predicted.entry(xi).or_insert(0) += degree * degree;
    }

    let table = PermGroupTable::new(n)?;
    let mut weight_of: BTreeMap<CycleType, BigRational> = BTreeMap::new();
    for (omega, class) in w.omegas().iter().zip(w.classes()) {
        let size = BigRational::from(BigInt::from(class_size(class)));
        weight_of.insert(class.clone(), omega / size);
    }
    let entry = |u: usize, v: usize| -> Option<&BigRational> {
        weight_of.get(&cycle_type_of(&compose_inv(
            &table.elements[u],
            &table.elements[v],
        )))
    };

    match mode {
        OracleMode::Float => verify_float(&table, entry, &predicted)?,
        OracleMode::Exact => verify_exact(&table, entry, &predicted)?,
    }
    Ok(predicted.into_iter().collect())
}

fn verify_float<'a, F>(
    table: &PermGroupTable,
    entry: F,
    predicted: &BTreeMap<BigRational, u64>,
) -> Result<()>
where
    F: Fn(usize, usize) -> Option<&'a BigRational>,
{
    const TOLERANCE: f64 = 1e-9;
    let targets: Vec<f64> = predicted
        .keys()
        .map(|xi| {
            xi.to_f64()
                .ok_or_else(|| Error::Internal("eigenvalue out of f64 range".into()))
        })
        .collect::<Result<_>>()?;
    for pair in targets.windows(2) {
        if (pair[1] - pair[0]).abs() <= 2.0 * TOLERANCE {
            return Err(Error::invalid(
                "predicted eigenvalues too close to separate in float mode; use exact mode",
            ));
        }
    }
    let size = table.elements().len();
    let matrix = DMatrix::from_fn(size, size, |i, j| {
        entry(i, j).and_then(|x| x.to_f64()).unwrap_or(0.0)
    });
    let eigenvalues = matrix.symmetric_eigen().eigenvalues;
    for (target, (xi, mult)) in targets.iter().zip(predicted) {
        let count = eigenvalues
            .iter()
            .filter(|e| (**e - target).abs() < TOLERANCE)
            .count() as u64;
        if count != *mult {
            return Err(Error::certification(format!(
                "dense spectrum carries eigenvalue {xi} with multiplicity {count}, predicted {mult}"
            )));
        }
    }
    Ok(())
}

fn verify_exact<'a, F>(
    table: &PermGroupTable,
    entry: F,
    predicted: &BTreeMap<BigRational, u64>,
) -> Result<()>
where
    F: Fn(usize, usize) -> Option<&'a BigRational>,
{
    let size = table.elements().len();
    // Scale the rational weights to integers: the scaled matrix has integer
    // eigenvalues exactly L times the predicted ones.
    let mut scale = BigInt::one();
    for i in 0..size {
        if let Some(x) = entry(0, i) {
            scale = scale.lcm(x.denom());
        }
    }
    let scaled_entry = |u: usize, v: usize| -> BigInt {
        match entry(u, v) {
            Some(x) => (x * BigRational::from(scale.clone())).to_integer(),
            None => BigInt::zero(),
        }
    };
    let matrix: Vec<BigInt> = (0..size * size)
        .map(|k| scaled_entry(k / size, k % size))
        .collect();
    let eigenvalues: Vec<BigInt> = predicted
        .keys()
        .map(|xi| {
            let scaled = xi * BigRational::from(scale.clone());
            if !scaled.is_integer() {
                return Err(Error::Internal(format!(
                    "scaled eigenvalue {scaled} is not an integer"
                )));
            }
            Ok(scaled.to_integer())
        })
        .collect::<Result<_>>()?;

    let mat_mul = |a: &[BigInt], b: &[BigInt]| -> Vec<BigInt> {
        let mut c = vec![BigInt::zero(); size * size];
        for i in 0..size {
            for k in 0..size {
                let aik = &a[i * size + k];
                if aik.is_zero() {
                    continue;
                }
                for j in 0..size {
                    let term = aik * &b[k * size + j];
                    c[i * size + j] += term;
                }
            }
        }
        c
    };
    let shifted = |xi: &BigInt| -> Vec<BigInt> {
        let mut m = matrix.clone();
        for i in 0..size {
            m[i * size + i] -= xi;
        }
        m
    };

    // Annihilator: ∏ (M - ξI) = 0 proves the spectrum is contained in the
    // predicted support.
    let mut product: Option<Vec<BigInt>> = None;
    for xi in &eigenvalues {
        let term = shifted(xi);
        product = Some(match product {
            None => term,
            Some(acc) => mat_mul(&acc, &term),
        });
    }
    if let Some(p) = product {
        if let Some(bad) = p.iter().position(|e| !e.is_zero()) {
            return Err(Error::certification(format!(
                "annihilator product has nonzero entry at position {bad}; dense spectrum \
                 leaves the predicted support"
            )));
        }
    }

    // Moments: tr(M^k) = Σ mult·ξ^k for k = 0..m-1 pins each multiplicity
    // (Vandermonde in the distinct ξ).
    let mut power: Vec<BigInt> = (0..size * size)
        .map(|k| {
            if k / size == k % size {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
        .collect();
    for k in 0..predicted.len() {
        let trace: BigInt = (0..size).map(|i| power[i * size + i].clone()).sum();
        let expected: BigInt = eigenvalues
            .iter()
            .zip(predicted.values())
            .map(|(xi, mult)| xi.pow(k as u32) * BigInt::from(*mult))
            .sum();
        if trace != expected {
            return Err(Error::certification(format!(
                "trace of the {k}-th matrix power is {trace}, predicted {expected}"
            )));
        }
        if k + 1 < predicted.len() {
            power = mat_mul(&power, &matrix);
        }
    }
    Ok(())
}

/// Computes the full character table of Sym(n) and checks the first and
/// second orthogonality relations exactly. Returns true iff every identity
/// holds.
///
/// # Errors
///
/// Refuses n = 0 and n > 9 (table size p(n)²·n evaluations).
pub fn orthogonality_check(n: u32) -> Result<bool> {
    if n == 0 || n > 9 {
        return Err(Error::invalid(format!(
            "orthogonality check supports 1 <= n <= 9, got {n}"
        )));
    }
    let shapes = partitions_of(n)?;
    let classes: Vec<CycleType> = shapes
        .iter()
        .map(|p| CycleType::new(p.parts().to_vec()).expect("valid"))
        .collect();
    let table: Vec<Vec<BigInt>> = map_collect(&shapes, Parallelism::auto(), |lam| {
        classes
            .iter()
            .map(|rho| mn_character(lam, rho).expect("matching n"))
            .collect()
    });
    Ok(table_is_orthogonal(&table, &classes, n))
}

/// The raw orthogonality verdict on an explicit table; split out so tests
/// can corrupt an entry and watch the check fail.
fn table_is_orthogonal(table: &[Vec<BigInt>], classes: &[CycleType], n: u32) -> bool {
    let group_order = BigInt::from(factorial(n));
    let sizes: Vec<BigInt> = classes
        .iter()
        .map(|c| BigInt::from(class_size(c)))
        .collect();
    // First relation: Σ_ρ |C_ρ| χ^λ(ρ) χ^μ(ρ) = n! [λ = μ].
    for (i, row_i) in table.iter().enumerate() {
        for (j, row_j) in table.iter().enumerate() {
            let sum: BigInt = (0..classes.len())
                .map(|k| &sizes[k] * &row_i[k] * &row_j[k])
                .sum();
            let expected = if i == j {
                group_order.clone()
            } else {
                BigInt::zero()
            };
            if sum != expected {
                return false;
            }
        }
    }
    // Second relation: Σ_λ χ^λ(ρ) χ^λ(π) = [ρ = π] · n!/|C_ρ|.
    for p in 0..classes.len() {
        for q in 0..classes.len() {
            let sum: BigInt = table.iter().map(|row| &row[p] * &row[q]).sum();
            let expected = if p == q {
                &group_order / &sizes[p]
            } else {
                BigInt::zero()
            };
            if sum != expected {
                return false;
            }
        }
    }
    true
}

/// The setwise stabilizer of {1,2,3} in Sym(n) (0-based: of {0,1,2}), the
/// canonical coclique of Γ_{n,3} with exactly 6(n-3)! elements. For
/// n ≤ 8 the pairwise non-adjacency is verified element by element before
/// returning.
///
/// # Errors
///
/// Requires 4 ≤ n ≤ [`COCLIQUE_CAP`].
pub fn canonical_coclique(n: u32) -> Result<Vec<Vec<u8>>> {
    if !(4..=COCLIQUE_CAP).contains(&n) {
        return Err(Error::invalid(format!(
            "canonical coclique supports 4 <= n <= {COCLIQUE_CAP}, got {n}"
        )));
    }
    let heads: Vec<Vec<u8>> = (0u8..3).permutations(3).collect();
    let tails: Vec<Vec<u8>> = (3..n as u8).permutations(n as usize - 3).collect();
    let mut out = Vec::with_capacity(heads.len() * tails.len());
    for head in &heads {
        for tail in &tails {
            let mut p = head.clone();
            p.extend_from_slice(tail);
            out.push(p);
        }
    }
    if n <= INDEPENDENCE_CHECK_CAP {
        for (i, p) in out.iter().enumerate() {
            for q in &out[i + 1..] {
                let quotient = cycle_type_of(&compose_inv(p, q));
                if is_t_derangement_type(&quotient, 3)? {
                    return Err(Error::Internal(format!(
                        "canonical coclique contains an adjacent pair with quotient {quotient}"
                    )));
                }
            }
        }
    }
    Ok(out)
}

/// Fixed-size bit set over machine words; just enough for the coclique
/// branch and bound.
#[derive(Clone, PartialEq, Eq)]
struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn empty(bits: usize) -> Self {
        BitSet {
            words: vec![0; bits.div_ceil(64)],
        }
    }

    fn full(bits: usize) -> Self {
        let mut set = BitSet {
            words: vec![u64::MAX; bits.div_ceil(64)],
        };
        let extra = set.words.len() * 64 - bits;
        if extra > 0 {
            *set.words.last_mut().expect("nonempty") >>= extra;
        }
        set
    }

    fn insert(&mut self, bit: usize) {
        self.words[bit / 64] |= 1 << (bit % 64);
    }

    fn remove(&mut self, bit: usize) {
        self.words[bit / 64] &= !(1 << (bit % 64));
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn first_set(&self) -> Option<usize> {
        self.words
            .iter()
            .position(|&w| w != 0)
            .map(|i| i * 64 + self.words[i].trailing_zeros() as usize)
    }

    fn intersect_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    fn subtract(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }
}

/// Exact maximum-coclique (independent set) size of Γ_{n,3} by
/// branch-and-bound with a greedy clique-cover upper bound.
///
/// # Errors
///
/// Refuses n above `cap` (and caps at [`MIS_HARD_CAP`] unconditionally):
/// beyond that the graph is out of desk scale and the spectral certificates
/// are the intended tool.
pub fn brute_max_coclique(n: u32, cap: u32) -> Result<u64> {
    let cap = cap.min(MIS_HARD_CAP);
    if n < 3 {
        return Err(Error::invalid(format!(
            "the 3-set derangement graph needs n >= 3, got {n}"
        )));
    }
    if n > cap {
        return Err(Error::invalid(format!(
            "exact coclique search is capped at n = {cap}; use the spectral certificates for larger n"
        )));
    }
    let elements: Vec<Vec<u8>> = (0u8..n as u8).permutations(n as usize).collect();
    let size = elements.len();
    let mut adjacency = vec![BitSet::empty(size); size];
    for i in 0..size {
        for j in i + 1..size {
            let quotient = cycle_type_of(&compose_inv(&elements[i], &elements[j]));
            if is_t_derangement_type(&quotient, 3)? {
                adjacency[i].insert(j);
                adjacency[j].insert(i);
            }
        }
    }

    fn clique_cover_bound(avail: &BitSet, adjacency: &[BitSet]) -> u64 {
        let mut remaining = avail.clone();
        let mut cliques = 0;
        while let Some(v) = remaining.first_set() {
            let mut candidates = remaining.clone();
            candidates.intersect_with(&adjacency[v]);
            remaining.remove(v);
            while let Some(u) = candidates.first_set() {
                remaining.remove(u);
                candidates.intersect_with(&adjacency[u]);
                candidates.remove(u);
            }
            cliques += 1;
        }
        cliques
    }

    fn branch(avail: BitSet, chosen: u64, best: &mut u64, adjacency: &[BitSet]) {
        if chosen > *best {
            *best = chosen;
        }
        if avail.is_empty() {
            return;
        }
        if chosen + clique_cover_bound(&avail, adjacency) <= *best {
            return;
        }
        let v = avail.first_set().expect("nonempty");
        let mut include = avail.clone();
        include.subtract(&adjacency[v]);
        include.remove(v);
        branch(include, chosen + 1, best, adjacency);
        let mut exclude = avail;
        exclude.remove(v);
        branch(exclude, chosen, best, adjacency);
    }

    let mut best = 0;
    branch(BitSet::full(size), 0, &mut best, &adjacency);
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{big_to_ratio, int_ratio};
    use num::BigUint;

    fn cycles(parts: &[u32]) -> CycleType {
        CycleType::new(parts.to_vec()).unwrap()
    }

    fn unit_element_weighting(n: u32, classes: &[&[u32]]) -> Weighting {
        // Per-element weight 1 on each class: ω_i = |C_i|.
        let classes: Vec<CycleType> = classes.iter().map(|c| cycles(c)).collect();
        let omegas = classes
            .iter()
            .map(|c| big_to_ratio(class_size(c)))
            .collect();
        Weighting::custom(n, classes, omegas).unwrap()
    }

    #[test]
    fn table_matches_class_sizes() {
        for n in [4u32, 5] {
            let table = PermGroupTable::new(n).unwrap();
            assert_eq!(
                table.elements().len(),
                usize::try_from(factorial(n)).unwrap()
            );
            for class in table.classes() {
                let count = (0..table.elements().len())
                    .filter(|&i| table.class_of(i) == class)
                    .count();
                assert_eq!(BigUint::from(count), class_size(class), "{class}");
            }
        }
        assert!(PermGroupTable::new(0).is_err());
        assert!(PermGroupTable::new(9).is_err());
    }

    #[test]
    fn s3_dense_spectrum_exact() {
        let w = unit_element_weighting(3, &[&[3]]);
        let spectrum = brute_cayley_spectrum(&w, OracleMode::Exact).unwrap();
        assert_eq!(spectrum, vec![(int_ratio(-1), 4), (int_ratio(2), 2)]);
    }

    #[test]
    fn s4_dense_spectrum_exact() {
        let w = unit_element_weighting(4, &[&[4], &[2, 2]]);
        let spectrum = brute_cayley_spectrum(&w, OracleMode::Exact).unwrap();
        let total: u64 = spectrum.iter().map(|(_, m)| m).sum();
        assert_eq!(total, 24);
        // Row sum 9 on the trivial module, and the graph is 9-regular.
        assert!(spectrum.contains(&(int_ratio(9), 1)));
    }

    #[test]
    fn s5_dense_spectrum_float() {
        let w = unit_element_weighting(5, &[&[5], &[4, 1]]);
        let spectrum = brute_cayley_spectrum(&w, OracleMode::Float).unwrap();
        let total: u64 = spectrum.iter().map(|(_, m)| m).sum();
        assert_eq!(total, 120);
        assert!(spectrum.contains(&(int_ratio(54), 1)));
        assert!(brute_cayley_spectrum(&w, OracleMode::Exact).is_ok());
    }

    #[test]
    fn zero_weighting_spectrum() {
        let w = Weighting::custom(3, vec![cycles(&[3])], vec![int_ratio(0)]).unwrap();
        let spectrum = brute_cayley_spectrum(&w, OracleMode::Exact).unwrap();
        assert_eq!(spectrum, vec![(int_ratio(0), 6)]);
    }

    #[test]
    fn spectrum_caps() {
        let w = unit_element_weighting(7, &[&[7]]);
        assert!(brute_cayley_spectrum(&w, OracleMode::Float).is_err());
        let w = unit_element_weighting(6, &[&[6]]);
        assert!(brute_cayley_spectrum(&w, OracleMode::Exact).is_err());
    }

    #[test]
    fn orthogonality_holds_small() {
        for n in 1..=7u32 {
            assert!(orthogonality_check(n).unwrap(), "n={n}");
        }
        assert!(orthogonality_check(10).is_err());
    }

    #[test]
    fn corrupted_table_fails_orthogonality() {
        let n = 5u32;
        let shapes = partitions_of(n).unwrap();
        let classes: Vec<CycleType> = shapes
            .iter()
            .map(|p| CycleType::new(p.parts().to_vec()).unwrap())
            .collect();
        let mut table: Vec<Vec<BigInt>> = shapes
            .iter()
            .map(|lam| {
                classes
                    .iter()
                    .map(|rho| mn_character(lam, rho).unwrap())
                    .collect()
            })
            .collect();
        assert!(table_is_orthogonal(&table, &classes, n));
        table[2][3] += BigInt::one();
        assert!(!table_is_orthogonal(&table, &classes, n));
    }

    #[test]
    fn canonical_coclique_sizes() {
        for (n, expected) in [(4u32, 6usize), (5, 12), (6, 36), (7, 144), (8, 720)] {
            let coclique = canonical_coclique(n).unwrap();
            assert_eq!(coclique.len(), expected);
            // Every member stabilizes {0,1,2} setwise.
            for p in &coclique {
                let mut head: Vec<u8> = p[..3].to_vec();
                head.sort_unstable();
                assert_eq!(head, vec![0, 1, 2]);
            }
        }
        assert!(canonical_coclique(3).is_err());
        assert!(canonical_coclique(11).is_err());
    }

    #[test]
    fn brute_coclique_matches_the_bound() {
        assert_eq!(brute_max_coclique(4, DEFAULT_MIS_CAP).unwrap(), 6);
        assert_eq!(brute_max_coclique(5, DEFAULT_MIS_CAP).unwrap(), 12);
        // n = 3: the graph is empty (every permutation fixes {1,2,3}), so
        // the whole group is a coclique.
        assert_eq!(brute_max_coclique(3, DEFAULT_MIS_CAP).unwrap(), 6);
        assert!(brute_max_coclique(6, DEFAULT_MIS_CAP).is_err());
        assert!(brute_max_coclique(7, 7).is_err());
    }
}
