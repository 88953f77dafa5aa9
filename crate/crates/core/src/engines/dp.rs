use crate::poly::DensePolynomial;
use crate::tree::RootedTree;

/// Per-vertex split of the subtree polynomial: `exclude[v]` counts
/// independent sets of the subtree at `v` that avoid `v`, `include[v]` those
/// that contain it.
#[derive(Debug, Clone)]
pub struct SubtreeTable {
    pub exclude: Vec<DensePolynomial>,
    pub include: Vec<DensePolynomial>,
}

impl SubtreeTable {
    /// Independence polynomial of the subtree rooted at `v`.
    pub fn subtree(&self, v: usize) -> DensePolynomial {
        self.exclude[v].add(&self.include[v])
    }
}

/// One bottom-up pass. Children have larger indices than their parents, so
/// walking indices downwards finishes every subtree before its parent uses it.
pub fn subtree_table(tree: &RootedTree) -> SubtreeTable {
    let n = tree.len();
    let mut exclude = vec![DensePolynomial::one(); n];
    let mut include = vec![DensePolynomial::x(); n];
    for v in (1..n).rev() {
        let p = tree.parent(v).expect("non-root vertex");
        let whole = exclude[v].add(&include[v]);
        exclude[p] = exclude[p].mul(&whole);
        include[p] = include[p].mul(&exclude[v]);
    }
    SubtreeTable { exclude, include }
}

pub fn indpoly_dp(tree: &RootedTree) -> DensePolynomial {
    subtree_table(tree).subtree(0)
}

/// Size of a maximum independent set, by the integer version of the same DP.
pub fn independence_number(tree: &RootedTree) -> usize {
    let n = tree.len();
    let mut without = vec![0usize; n];
    let mut with = vec![1usize; n];
    for v in (1..n).rev() {
        let p = tree.parent(v).expect("non-root vertex");
        without[p] += without[v].max(with[v]);
        with[p] += without[v];
    }
    without[0].max(with[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{path, star2, tree_tg};

    #[test]
    fn small_paths() {
        assert_eq!(indpoly_dp(&path(1).unwrap()), DensePolynomial::from_i64s(&[1, 1]));
        assert_eq!(indpoly_dp(&path(2).unwrap()), DensePolynomial::from_i64s(&[1, 2]));
        assert_eq!(indpoly_dp(&path(4).unwrap()), DensePolynomial::from_i64s(&[1, 4, 3]));
    }

    #[test]
    fn leaf_entries() {
        let table = subtree_table(&star2(2));
        for leaf in [2, 4] {
            assert_eq!(table.exclude[leaf], DensePolynomial::one());
            assert_eq!(table.include[leaf], DensePolynomial::x());
        }
    }

    #[test]
    fn constant_and_linear_terms() {
        let tree = tree_tg(2, 3);
        let poly = indpoly_dp(&tree);
        assert_eq!(poly.coeff(0), 1.into());
        assert_eq!(poly.coeff(1), tree.len().into());
        assert_eq!(poly.degree(), Some(independence_number(&tree)));
    }
}
