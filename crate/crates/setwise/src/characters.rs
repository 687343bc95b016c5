//! Exact symmetric-group character values via the Murnaghan–Nakayama rule,
//! conjugacy-class sizes, and degree-threshold classification of
//! irreducibles.
//!
//! All arithmetic is arbitrary-precision integer; nothing here touches
//! floating point. Character evaluation is a pure function and each top-level
//! call memoizes its own recursion, so concurrent evaluation across
//! partitions needs no shared state.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::{BigUint, One, Zero};
use serde::{Deserialize, Serialize};

use crate::par::{map_collect, Parallelism};
use crate::partitions::{
    hook_degree, parse_parts, partitions_of, remove_rim_hook, rim_hooks, Partition,
};
use crate::rational::factorial;
use crate::{Error, Result};

/// A conjugacy class of Sym(n), identified by its cycle type. Stored in
/// canonical (weakly decreasing) order; two classes are equal iff their
/// canonical forms are.
///
/// Serializes as a JSON array of cycle lengths, e.g. `[25,1,1]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<u32>", try_from = "Vec<u32>")]
pub struct CycleType {
    parts: Vec<u32>,
    n: u32,
}

impl CycleType {
    /// Build a class from cycle lengths in any order; they are sorted into
    /// canonical form. Lengths must be positive.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::invalid("cycle lengths must be positive"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let n = parts.iter().sum();
        Ok(CycleType { parts, n })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// The one-cycles-only identity class of Sym(n).
    pub fn identity(n: u32) -> Self {
        CycleType {
            parts: vec![1; n as usize],
            n,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl From<CycleType> for Vec<u32> {
    fn from(c: CycleType) -> Vec<u32> {
        c.parts
    }
}

impl TryFrom<Vec<u32>> for CycleType {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        CycleType::new(parts)
    }
}

/// Parses `"(25,1,1)"`, `"25,1^2"`, or bracketed forms; order is
/// canonicalized.
impl FromStr for CycleType {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        CycleType::new(parse_parts(text)?)
    }
}

/// Character values of symmetric groups are plain (arbitrary-precision)
/// integers.
pub type CharacterValue = BigInt;

/// χ^λ_ρ by the Murnaghan–Nakayama rule:
///
/// χ^λ_ρ = Σ over rim hooks ζ of λ with length ρ₁ of (-1)^{leg(ζ)} χ^{λ∖ζ}_{ρ∖ρ₁},
///
/// with χ^∅_∅ = 1. The class parts are consumed in canonical (descending)
/// order; the value does not depend on the order, which
/// [`mn_character_composition`] exposes for property testing.
///
/// # Errors
///
/// λ and ρ must partition the same n.
pub fn mn_character(lambda: &Partition, rho: &CycleType) -> Result<CharacterValue> {
    if lambda.n() != rho.n() {
        return Err(Error::invalid(format!(
            "size mismatch: {lambda} partitions {} but {rho} partitions {}",
            lambda.n(),
            rho.n()
        )));
    }
    let mut memo = HashMap::new();
    Ok(mn_rec(lambda, rho.parts(), 0, &mut memo))
}

/// χ^λ evaluated on an arbitrary composition (any ordering of cycle
/// lengths). Class functions are constant on conjugacy classes, so this
/// agrees with [`mn_character`] on the sorted form; exposed so the
/// order-independence can be asserted directly.
pub fn mn_character_composition(lambda: &Partition, parts: &[u32]) -> Result<CharacterValue> {
    if parts.contains(&0) {
        return Err(Error::invalid("cycle lengths must be positive"));
    }
    let total: u32 = parts.iter().sum();
    if lambda.n() != total {
        return Err(Error::invalid(format!(
            "size mismatch: {lambda} partitions {} but the composition sums to {total}",
            lambda.n()
        )));
    }
    let mut memo = HashMap::new();
    Ok(mn_rec(lambda, parts, 0, &mut memo))
}

/// Recursive core, memoized on (remaining shape, position in the class
/// parts). One memo per top-level call keeps evaluation pure and lock-free.
fn mn_rec(
    lambda: &Partition,
    parts: &[u32],
    k: usize,
    memo: &mut HashMap<(Partition, usize), BigInt>,
) -> BigInt {
    if k == parts.len() {
        debug_assert!(lambda.is_empty());
        return BigInt::one();
    }
    if let Some(hit) = memo.get(&(lambda.clone(), k)) {
        return hit.clone();
    }
    let mut total = BigInt::zero();
    for hook in rim_hooks(lambda, parts[k]) {
        let rest = remove_rim_hook(lambda, &hook)
            .expect("rim_hooks returns hooks valid for its input shape");
        let term = mn_rec(&rest, parts, k + 1, memo);
        if hook.leg_length() % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    memo.insert((lambda.clone(), k), total.clone());
    total
}

/// |C_ρ|: the size of the conjugacy class, n! over the centralizer order
/// ∏ lengths · ∏ multiplicity!.
pub fn class_size(rho: &CycleType) -> BigUint {
    let mut centralizer = BigUint::one();
    let parts = rho.parts();
    let mut i = 0;
    while i < parts.len() {
        let mut j = i + 1;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        for r in 1..=(j - i) as u32 {
            centralizer *= BigUint::from(r);
        }
        for _ in i..j {
            centralizer *= BigUint::from(parts[i]);
        }
        i = j;
    }
    factorial(rho.n()) / centralizer
}

/// All λ ⊢ n with Specht-module dimension strictly below `bound`, found by
/// exhaustive enumeration over every partition of n, in lexicographically
/// decreasing order.
pub fn small_degree_irreducibles(n: u32, bound: &BigUint) -> Result<Vec<Partition>> {
    let all = partitions_of(n)?;
    let flags = map_collect(&all, Parallelism::auto(), |lam| &hook_degree(lam) < bound);
    Ok(all
        .into_iter()
        .zip(flags)
        .filter_map(|(lam, keep)| keep.then_some(lam))
        .collect())
}

/// The irreducible constituents of the permutation character of Sym(n)
/// acting on 3-subsets: `[n], [n-1,1], [n-2,2], [n-3,3]`.
///
/// # Errors
///
/// Needs n ≥ 6 so the four shapes are distinct partitions.
pub fn permutation_character_constituents_3(n: u32) -> Result<Vec<Partition>> {
    if n < 6 {
        return Err(Error::invalid(
            "constituents of the 3-subset action need n >= 6",
        ));
    }
    Ok(vec![
        Partition::new(vec![n]).expect("valid"),
        Partition::new(vec![n - 1, 1]).expect("valid"),
        Partition::new(vec![n - 2, 2]).expect("valid"),
        Partition::new(vec![n - 3, 3]).expect("valid"),
    ])
}

/// A uniform bound on |χ^λ(ρ)| over every λ ⊢ n, for a class ρ = (n-a, tail)
/// whose leading cycle is long enough that 3a+1 ≤ n.
///
/// Under that hypothesis each λ admits at most one rim hook of length n-a,
/// so |χ^λ(ρ)| ≤ max over μ ⊢ a of |χ^μ(tail)|, computed here exactly.
///
/// # Errors
///
/// 3a+1 > n: uniqueness of the long hook is not guaranteed and the bound
/// would be unsound.
pub fn character_magnitude_bound(rho: &CycleType) -> Result<BigUint> {
    let n = rho.n();
    let leading = rho.parts().first().copied().unwrap_or(0);
    let a = n - leading;
    if 3 * a + 1 > n {
        return Err(Error::Precondition(format!(
            "magnitude bound for {rho} needs 3a+1 <= n with a = n - leading = {a}"
        )));
    }
    if a == 0 {
        return Ok(BigUint::one());
    }
    let tail = CycleType::new(rho.parts()[1..].to_vec()).expect("valid tail");
    debug_assert_eq!(tail.n(), a);
    let mut best = BigUint::zero();
    for mu in partitions_of(a)? {
        let value = mn_character(&mu, &tail)?.magnitude().clone();
        if value > best {
            best = value;
        }
    }
    Ok(best)
}

/// The sign of the class as a permutation: (-1)^{n - #cycles}.
pub fn class_sign(rho: &CycleType) -> i8 {
    if (rho.n() as usize - rho.parts().len()).is_multiple_of(2) {
        1
    } else {
        -1
    }
}
