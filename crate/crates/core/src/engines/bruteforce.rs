use num_bigint::BigInt;

use super::EngineError;
use crate::poly::DensePolynomial;
use crate::tree::RootedTree;

pub const BRUTE_FORCE_MAX_VERTICES: usize = 30;

/// Vertices below this bit index are enumerated in Gray-code order.
const LOW_BITS: usize = 20;

/// Counts independent sets by size over all 2^n vertex subsets.
///
/// Subsets are split into a high part (vertices `LOW_BITS..n`) and a low part.
/// For each high part the 2^LOW_BITS low parts are walked in Gray-code order
/// while the number of edges inside the low part is maintained incrementally.
/// A high part that already spans an edge makes every extension dependent,
/// so that block contributes nothing and is passed over.
pub fn indpoly_bruteforce(tree: &RootedTree) -> Result<DensePolynomial, EngineError> {
    let n = tree.len();
    if n > BRUTE_FORCE_MAX_VERTICES {
        return Err(EngineError::TooLarge {
            n,
            max: BRUTE_FORCE_MAX_VERTICES,
        });
    }
    let mut nbr = vec![0u64; n];
    for (p, c) in tree.edges() {
        nbr[p] |= 1 << c;
        nbr[c] |= 1 << p;
    }
    let low = n.min(LOW_BITS);
    let low_mask = (1u64 << low) - 1;
    let low_nbr: Vec<u64> = nbr[..low].iter().map(|m| m & low_mask).collect();

    let mut counts = vec![0u64; n + 1];
    for h in 0..(1u64 << (n - low)) {
        let high_set = h << low;
        let members = || (low..n).filter(move |&v| high_set >> v & 1 == 1);
        if members().any(|v| nbr[v] & high_set != 0) {
            continue;
        }
        let forbidden = members().fold(0, |acc, v| acc | nbr[v]) & low_mask;
        let base = high_set.count_ones() as usize;
        for (size, c) in gray_walk(&low_nbr, forbidden, low).into_iter().enumerate() {
            if c > 0 {
                counts[base + size] += c;
            }
        }
    }
    Ok(DensePolynomial::new(counts.into_iter().map(BigInt::from).collect()))
}

/// Independent subsets of the low vertices avoiding `forbidden`, by size.
fn gray_walk(nbr: &[u64], forbidden: u64, bits: usize) -> Vec<u64> {
    let mut counts = vec![0u64; bits + 1];
    counts[0] = 1;
    let mut set = 0u64;
    let mut conflicts = 0u32;
    for i in 1u64..(1 << bits) {
        let b = i.trailing_zeros() as usize;
        let bit = 1u64 << b;
        set ^= bit;
        let touching = (nbr[b] & set).count_ones();
        if set & bit != 0 {
            conflicts += touching;
        } else {
            conflicts -= touching;
        }
        if conflicts == 0 && set & forbidden == 0 {
            counts[set.count_ones() as usize] += 1;
        }
    }
    counts
}
