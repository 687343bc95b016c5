//! Integer partitions and Young-diagram combinatorics: enumeration,
//! hook-length degrees, rim hooks, and branching-rule neighbors.
//!
//! Everything here is a pure function of immutable values, so the module is
//! safe for unrestricted concurrent use. Partitions are kept in canonical
//! form (weakly decreasing positive parts) and compare lexicographically;
//! enumeration and all list-returning operations use lexicographically
//! decreasing order so that reports are deterministic and diffable.

use std::fmt;
use std::str::FromStr;

use num::BigUint;
use serde::{Deserialize, Serialize};

use crate::rational::factorial;
use crate::{Error, Result};

/// A partition of n: weakly decreasing positive parts, doubling as the Young
/// diagram with `parts[i]` cells in row i+1.
///
/// Serializes as a plain JSON array of parts, e.g. `[4,2,1]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<u32>", try_from = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
    n: u32,
}

impl Partition {
    /// Build a partition from weakly decreasing positive parts.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::invalid("partition parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid(format!(
                "partition parts must be weakly decreasing, got {parts:?}"
            )));
        }
        let n = parts.iter().sum();
        Ok(Partition { parts, n })
    }

    /// The empty partition of 0, the Murnaghan–Nakayama base case.
    pub fn empty() -> Self {
        Partition {
            parts: Vec::new(),
            n: 0,
        }
    }

    /// The single-row partition `[n]`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![n], n }
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The number being partitioned (cached sum of parts).
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row length in 1-based coordinates; 0 past the last row.
    fn row_len(&self, row: usize) -> u32 {
        if row >= 1 && row <= self.parts.len() {
            self.parts[row - 1]
        } else {
            0
        }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// Parse comma-separated parts with optional `[...]` or `(...)` wrapping and
/// `base^count` exponent shorthand, e.g. `"[25,2]"`, `"22,1^5"`, `"2^3,1"`.
/// Parts must already be weakly decreasing.
impl FromStr for Partition {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        Partition::new(parse_parts(text)?)
    }
}

pub(crate) fn parse_parts(text: &str) -> Result<Vec<u32>> {
    let mut inner = text.trim();
    for (open, close) in [("[", "]"), ("(", ")")] {
        if inner.starts_with(open) {
            inner = inner
                .strip_prefix(open)
                .and_then(|s| s.strip_suffix(close))
                .ok_or_else(|| Error::Parse(format!("unbalanced brackets in {text:?}")))?
                .trim();
        }
    }
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    let mut parts = Vec::new();
    for item in inner.split(',') {
        let item = item.trim();
        let (base_text, count_text) = match item.split_once('^') {
            Some((b, c)) => (b.trim(), c.trim()),
            None => (item, "1"),
        };
        let base: u32 = base_text
            .parse()
            .map_err(|_| Error::Parse(format!("bad part {item:?} in {text:?}")))?;
        let count: u32 = count_text
            .parse()
            .map_err(|_| Error::Parse(format!("bad exponent {item:?} in {text:?}")))?;
        if count == 0 {
            return Err(Error::Parse(format!("zero exponent in {text:?}")));
        }
        parts.extend(std::iter::repeat_n(base, count as usize));
    }
    Ok(parts)
}

/// A cell of a Young diagram in 1-based (row, col) coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

/// A rim hook (border strip): a contiguous path of cells walkable with only
/// upward and rightward steps, ordered from the lowest-leftmost cell to the
/// highest-rightmost one.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RimHook {
    cells: Vec<Cell>,
    leg_length: usize,
}

impl RimHook {
    /// Validate the path shape: each step must go right `(r, c) -> (r, c+1)`
    /// or up `(r, c) -> (r-1, c)`.
    pub fn new(cells: Vec<Cell>) -> Result<Self> {
        if cells.is_empty() {
            return Err(Error::invalid("a rim hook has at least one cell"));
        }
        if cells.iter().any(|c| c.row == 0 || c.col == 0) {
            return Err(Error::invalid("cells use 1-based coordinates"));
        }
        for pair in cells.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            let right = b.row == a.row && b.col == a.col + 1;
            let up = b.col == a.col && a.row == b.row + 1;
            if !right && !up {
                return Err(Error::invalid(format!(
                    "cells do not form an up/right path at {a:?} -> {b:?}"
                )));
            }
        }
        let leg_length = cells[0].row - cells[cells.len() - 1].row;
        Ok(RimHook { cells, leg_length })
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// Number of cells in the strip.
    pub fn length(&self) -> usize {
        self.cells.len()
    }

    /// Rows spanned minus one; the sign of a Murnaghan–Nakayama term is
    /// `(-1)^leg_length`.
    pub fn leg_length(&self) -> usize {
        self.leg_length
    }
}

/// All partitions of n in lexicographically decreasing order, `[n]` first
/// and `[1^n]` last. The length equals the partition function p(n).
///
/// # Errors
///
/// `n == 0` is rejected; use [`Partition::empty`] for the empty partition.
pub fn partitions_of(n: u32) -> Result<Vec<Partition>> {
    if n == 0 {
        return Err(Error::invalid("partitions_of requires n >= 1"));
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fn rec(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            let parts = prefix.clone();
            let n = parts.iter().sum();
            out.push(Partition { parts, n });
            return;
        }
        let mut part = remaining.min(max_part);
        while part >= 1 {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
            part -= 1;
        }
    }
    rec(n, n, &mut prefix, &mut out);
    Ok(out)
}

/// Transpose the Young diagram: column lengths become parts.
pub fn conjugate(lambda: &Partition) -> Partition {
    if lambda.is_empty() {
        return Partition::empty();
    }
    let first = lambda.parts[0] as usize;
    let mut cols = vec![0u32; first];
    for &p in &lambda.parts {
        for c in cols.iter_mut().take(p as usize) {
            *c += 1;
        }
    }
    Partition {
        parts: cols,
        n: lambda.n,
    }
}

/// The dimension of the λ-Specht module via the hook length formula:
/// n! divided by the product of all hook lengths.
pub fn hook_degree(lambda: &Partition) -> BigUint {
    let conj = conjugate(lambda);
    let mut product = BigUint::from(1u32);
    for (i, &p) in lambda.parts.iter().enumerate() {
        for j in 0..p as usize {
            let arm = p as u64 - 1 - j as u64;
            let leg = u64::from(conj.parts[j]) - 1 - i as u64;
            product *= BigUint::from(arm + leg + 1);
        }
    }
    factorial(lambda.n) / product
}

/// Beta-numbers of λ: `β_i = λ_i + (k-1-i)`, a strictly decreasing sequence
/// encoding the diagram. Rim-hook removal is subtraction on one beta-number.
fn beta_numbers(lambda: &Partition) -> Vec<u64> {
    let k = lambda.parts.len() as u64;
    lambda
        .parts
        .iter()
        .enumerate()
        .map(|(i, &p)| u64::from(p) + (k - 1 - i as u64))
        .collect()
}

fn from_beta_numbers(mut beta: Vec<u64>, total: u32) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let k = beta.len() as u64;
    let parts: Vec<u32> = beta
        .iter()
        .enumerate()
        .map(|(i, &b)| (b - (k - 1 - i as u64)) as u32)
        .filter(|&p| p > 0)
        .collect();
    Partition { parts, n: total }
}

/// The cells of the skew diagram λ/μ, walked from the lowest-leftmost cell
/// upward and rightward. Valid only when the skew shape is a border strip,
/// which rim-hook removal guarantees.
fn skew_cells(lambda: &Partition, mu: &Partition) -> Vec<Cell> {
    let mut cells = Vec::new();
    for row in (1..=lambda.parts.len()).rev() {
        let hi = lambda.row_len(row);
        let lo = mu.row_len(row);
        for col in (lo + 1)..=hi {
            cells.push(Cell {
                row,
                col: col as usize,
            });
        }
    }
    cells
}

/// Every rim hook of λ with exactly `len` cells whose removal leaves a valid
/// partition, ordered by starting (lowest-leftmost) cell. Empty when none
/// exists, including for `len == 0` or `len > n`.
pub fn rim_hooks(lambda: &Partition, len: u32) -> Vec<RimHook> {
    if len == 0 || len > lambda.n {
        return Vec::new();
    }
    let beta = beta_numbers(lambda);
    let len64 = u64::from(len);
    let mut hooks = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < len64 || beta.contains(&(b - len64)) {
            continue;
        }
        let mut new_beta = beta.clone();
        new_beta[i] = b - len64;
        let mu = from_beta_numbers(new_beta, lambda.n - len);
        let cells = skew_cells(lambda, &mu);
        debug_assert_eq!(cells.len(), len as usize);
        hooks.push(RimHook::new(cells).expect("beta-number removal yields a border strip"));
    }
    hooks.sort_by_key(|h| h.cells[0]);
    hooks
}

/// Remove a rim hook from λ, returning the partition on `n - length` cells.
///
/// The hook is validated against λ: its cells must lie in λ, occupy a suffix
/// of each touched row, and leave weakly decreasing rows behind.
pub fn remove_rim_hook(lambda: &Partition, zeta: &RimHook) -> Result<Partition> {
    let mut parts = lambda.parts.clone();
    // Cells are grouped by row as contiguous runs; the path ordering walks
    // rows bottom to top, so one pass per run suffices.
    let mut idx = 0;
    while idx < zeta.cells.len() {
        let row = zeta.cells[idx].row;
        let mut end = idx;
        while end + 1 < zeta.cells.len() && zeta.cells[end + 1].row == row {
            end += 1;
        }
        let first_col = zeta.cells[idx].col as u32;
        let last_col = zeta.cells[end].col as u32;
        if row > parts.len() || last_col != lambda.parts[row - 1] {
            return Err(Error::invalid(format!(
                "{zeta:?} is not a rim hook of {lambda}: row {row} does not end at the rim"
            )));
        }
        parts[row - 1] = first_col - 1;
        idx = end + 1;
    }
    let parts: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::invalid(format!(
            "{zeta:?} is not a rim hook of {lambda}: removal leaves non-partition rows"
        )));
    }
    let result = Partition {
        n: parts.iter().sum(),
        parts,
    };
    if result.n + zeta.length() as u32 != lambda.n {
        return Err(Error::invalid(format!(
            "{zeta:?} is not a rim hook of {lambda}: cells outside the diagram"
        )));
    }
    Ok(result)
}

/// Which way a branching step goes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BranchDirection {
    /// Partitions of n+1 obtained by adding one corner cell.
    Add,
    /// Partitions of n-1 obtained by deleting one corner cell.
    Remove,
}

/// Branching-rule neighbors of λ: the constituents of induction (`Add`) or
/// restriction (`Remove`) of the λ-Specht module, in lexicographically
/// decreasing order.
///
/// # Errors
///
/// `Remove` on the empty partition.
pub fn branching_neighbors(
    lambda: &Partition,
    direction: BranchDirection,
) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    match direction {
        BranchDirection::Add => {
            for i in 0..=lambda.parts.len() {
                let grows_row = if i < lambda.parts.len() {
                    i == 0 || lambda.parts[i - 1] > lambda.parts[i]
                } else {
                    true
                };
                if grows_row {
                    let mut parts = lambda.parts.clone();
                    if i < parts.len() {
                        parts[i] += 1;
                    } else {
                        parts.push(1);
                    }
                    out.push(Partition {
                        parts,
                        n: lambda.n + 1,
                    });
                }
            }
        }
        BranchDirection::Remove => {
            if lambda.is_empty() {
                return Err(Error::invalid(
                    "cannot remove a cell from the empty partition",
                ));
            }
            for i in 0..lambda.parts.len() {
                let shrinks_row =
                    i + 1 == lambda.parts.len() || lambda.parts[i] > lambda.parts[i + 1];
                if shrinks_row {
                    let mut parts = lambda.parts.clone();
                    parts[i] -= 1;
                    let parts: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
                    out.push(Partition {
                        parts,
                        n: lambda.n - 1,
                    });
                }
            }
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Euler's pentagonal number recurrence, as an independent counting
    /// oracle for the enumerator.
    fn partition_count(n: usize) -> BigUint {
        let mut table = vec![BigUint::from(0u32); n + 1];
        table[0] = BigUint::from(1u32);
        for i in 1..=n {
            let mut acc = num::BigInt::from(0);
            let mut k: i64 = 1;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > i {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                acc += sign * num::BigInt::from(table[i - g1].clone());
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= i {
                    acc += sign * num::BigInt::from(table[i - g2].clone());
                }
                k += 1;
            }
            table[i] = acc.to_biguint().unwrap();
        }
        table[n].clone()
    }

    #[test]
    fn enumeration_matches_counting_oracle() {
        assert_eq!(partitions_of(1).unwrap(), vec![part(&[1])]);
        let four = partitions_of(4).unwrap();
        assert_eq!(
            four,
            vec![
                part(&[4]),
                part(&[3, 1]),
                part(&[2, 2]),
                part(&[2, 1, 1]),
                part(&[1, 1, 1, 1]),
            ]
        );
        for n in 1..=28u32 {
            let listed = partitions_of(n).unwrap();
            assert_eq!(
                BigUint::from(listed.len()),
                partition_count(n as usize),
                "p({n})"
            );
            assert!(listed.windows(2).all(|w| w[0] > w[1]), "order at n={n}");
        }
        assert_eq!(partitions_of(25).unwrap().len(), 1958);
        assert!(partitions_of(0).is_err());
    }

    #[test]
    fn constructor_rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(part(&[3, 1]).n(), 4);
        assert_eq!(Partition::empty().n(), 0);
    }

    #[test]
    fn parses_bracketed_lists_and_exponents() {
        assert_eq!("[25,2]".parse::<Partition>().unwrap(), part(&[25, 2]));
        assert_eq!(
            "22,1^5".parse::<Partition>().unwrap(),
            part(&[22, 1, 1, 1, 1, 1])
        );
        assert_eq!("(2^3,1)".parse::<Partition>().unwrap(), part(&[2, 2, 2, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("[1,3]".parse::<Partition>().is_err());
        assert!("[a]".parse::<Partition>().is_err());
        assert!("[2^0]".parse::<Partition>().is_err());
        assert_eq!(part(&[25, 2]).to_string(), "[25,2]");
    }

    #[test]
    fn serializes_as_integer_array() {
        let p = part(&[4, 2, 1]);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[4,2,1]");
        let back: Partition = serde_json::from_str("[4,2,1]").unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<Partition>("[1,4]").is_err());
    }

    #[test]
    fn conjugate_examples_and_involution() {
        assert_eq!(conjugate(&part(&[5])), part(&[1, 1, 1, 1, 1]));
        assert_eq!(conjugate(&part(&[2, 2])), part(&[2, 2]));
        assert_eq!(conjugate(&part(&[3, 1])), part(&[2, 1, 1]));
        for n in 1..=10 {
            for lam in partitions_of(n).unwrap() {
                assert_eq!(conjugate(&conjugate(&lam)), lam);
            }
        }
    }

    #[test]
    fn hook_degrees() {
        assert_eq!(hook_degree(&part(&[7])), BigUint::from(1u32));
        assert_eq!(hook_degree(&part(&[4, 1])), BigUint::from(4u32));
        assert_eq!(hook_degree(&part(&[4, 2])), BigUint::from(9u32));
        assert_eq!(hook_degree(&Partition::empty()), BigUint::from(1u32));
        // Degrees are conjugation-invariant and their squares sum to n!.
        for n in 1..=12u32 {
            let mut total = BigUint::from(0u32);
            for lam in partitions_of(n).unwrap() {
                let d = hook_degree(&lam);
                assert_eq!(d, hook_degree(&conjugate(&lam)), "conj at {lam}");
                total += &d * &d;
            }
            assert_eq!(total, factorial(n), "sum of squares at n={n}");
        }
    }

    #[test]
    fn rim_hook_enumeration() {
        let full = rim_hooks(&part(&[6]), 6);
        assert_eq!(full.len(), 1);
        assert_eq!(full[0].leg_length(), 0);
        assert_eq!(full[0].length(), 6);

        let hooks = rim_hooks(&part(&[2, 2]), 3);
        assert_eq!(hooks.len(), 1);
        assert_eq!(hooks[0].leg_length(), 1);
        assert_eq!(
            hooks[0].cells(),
            &[
                Cell { row: 2, col: 1 },
                Cell { row: 2, col: 2 },
                Cell { row: 1, col: 2 }
            ]
        );

        // The 2-strip of [3,2] in row 1 would leave [1,2]; only the row-2
        // strip is valid.
        let hooks = rim_hooks(&part(&[3, 2]), 2);
        assert_eq!(hooks.len(), 1);
        assert_eq!(
            remove_rim_hook(&part(&[3, 2]), &hooks[0]).unwrap(),
            part(&[3])
        );

        assert!(rim_hooks(&part(&[2, 2]), 4).is_empty());
        assert!(rim_hooks(&part(&[2, 2]), 0).is_empty());
    }

    #[test]
    fn rim_hook_removal_roundtrip() {
        for n in 1..=9u32 {
            for lam in partitions_of(n).unwrap() {
                for len in 1..=n {
                    for hook in rim_hooks(&lam, len) {
                        let rest = remove_rim_hook(&lam, &hook).unwrap();
                        assert_eq!(rest.n(), n - len);
                        // Cells walk up/right from the lowest-leftmost cell.
                        assert_eq!(hook.length(), len as usize);
                    }
                }
            }
        }
        // A hook of one shape is rejected against another.
        let hook = rim_hooks(&part(&[2, 2]), 3).pop().unwrap();
        assert!(remove_rim_hook(&part(&[3, 1]), &hook).is_err());
        assert_eq!(remove_rim_hook(&part(&[2, 2]), &hook).unwrap(), part(&[1]));
    }

    #[test]
    fn rim_hook_uniqueness_for_long_strips() {
        // For 3a+1 <= n, a partition of n has at most one rim hook of
        // length n-a; exhaustive for n <= 18 here, n <= 25 in the slower
        // acceptance suite.
        for n in 1..=18u32 {
            for lam in partitions_of(n).unwrap() {
                let mut a = 0;
                while 3 * a < n {
                    assert!(
                        rim_hooks(&lam, n - a).len() <= 1,
                        "multiple (n-a)-hooks for {lam}, a={a}"
                    );
                    a += 1;
                }
            }
        }
    }

    #[test]
    fn interior_rim_hooks_are_short() {
        // When λ of n has a removable strip of length n-a, every rim hook
        // touching neither row 1 nor column 1 has at most a cells.
        for n in 1..=14u32 {
            for lam in partitions_of(n).unwrap() {
                for a in 0..n {
                    if rim_hooks(&lam, n - a).is_empty() {
                        continue;
                    }
                    for len in 1..=n {
                        for hook in rim_hooks(&lam, len) {
                            let interior = hook.cells().iter().all(|c| c.row > 1 && c.col > 1);
                            if interior {
                                assert!(
                                    hook.length() as u32 <= a,
                                    "long interior hook in {lam}: len {len}, a={a}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn branching_examples() {
        assert_eq!(
            branching_neighbors(&part(&[6]), BranchDirection::Add).unwrap(),
            vec![part(&[7]), part(&[6, 1])]
        );
        assert_eq!(
            branching_neighbors(&part(&[5, 1]), BranchDirection::Add).unwrap(),
            vec![part(&[6, 1]), part(&[5, 2]), part(&[5, 1, 1])]
        );
        assert_eq!(
            branching_neighbors(&part(&[3, 3]), BranchDirection::Remove).unwrap(),
            vec![part(&[3, 2])]
        );
        assert_eq!(
            branching_neighbors(&part(&[1]), BranchDirection::Remove).unwrap(),
            vec![Partition::empty()]
        );
        assert!(branching_neighbors(&Partition::empty(), BranchDirection::Remove).is_err());
    }

    #[test]
    fn branching_is_adjoint() {
        for n in 1..=9u32 {
            for lam in partitions_of(n).unwrap() {
                for mu in branching_neighbors(&lam, BranchDirection::Add).unwrap() {
                    assert!(branching_neighbors(&mu, BranchDirection::Remove)
                        .unwrap()
                        .contains(&lam));
                }
                for mu in branching_neighbors(&lam, BranchDirection::Remove).unwrap() {
                    assert!(branching_neighbors(&mu, BranchDirection::Add)
                        .unwrap()
                        .contains(&lam));
                }
            }
        }
    }
}
