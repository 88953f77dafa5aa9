use std::collections::HashMap;

use crate::canon;
use crate::poly::DensePolynomial;
use crate::tree::RootedTree;

/// I(G) = I(G - v) + x I(G - N[v]), with I of a forest taken as the product
/// over its components. The pivot `v` is the neighbour of the lowest-numbered
/// leaf. Component results are memoized by their canonical tree code.
pub fn indpoly_recursive(tree: &RootedTree) -> DensePolynomial {
    let mut memo = HashMap::new();
    solve(&tree.adjacency(), &mut memo)
}

type Memo = HashMap<String, DensePolynomial>;

fn solve(adj: &[Vec<usize>], memo: &mut Memo) -> DensePolynomial {
    match adj.len() {
        0 => return DensePolynomial::one(),
        1 => return DensePolynomial::linear(1, 1),
        _ => {}
    }
    let key = canon::unrooted_code(adj);
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }

    let leaf = (0..adj.len())
        .find(|&v| adj[v].len() == 1)
        .expect("a tree with two or more vertices has a leaf");
    let pivot = adj[leaf][0];

    let mut removed = vec![false; adj.len()];
    removed[pivot] = true;
    let without_pivot = forest_product(adj, &removed, memo);
    for &w in &adj[pivot] {
        removed[w] = true;
    }
    let without_closed_nbhd = forest_product(adj, &removed, memo);

    let result = without_pivot.add(&without_closed_nbhd.shift(1));
    memo.insert(key, result.clone());
    result
}

/// Product of I over the components left after deleting `removed`.
fn forest_product(adj: &[Vec<usize>], removed: &[bool], memo: &mut Memo) -> DensePolynomial {
    components(adj, removed)
        .iter()
        .fold(DensePolynomial::one(), |acc, comp| acc.mul(&solve(comp, memo)))
}

/// Connected components of the surviving vertices, each relabelled `0..k`.
fn components(adj: &[Vec<usize>], removed: &[bool]) -> Vec<Vec<Vec<usize>>> {
    let n = adj.len();
    let mut local = vec![usize::MAX; n];
    let mut out = Vec::new();
    for start in 0..n {
        if removed[start] || local[start] != usize::MAX {
            continue;
        }
        let mut members = vec![start];
        local[start] = 0;
        let mut head = 0;
        while head < members.len() {
            let v = members[head];
            head += 1;
            for &w in &adj[v] {
                if !removed[w] && local[w] == usize::MAX {
                    local[w] = members.len();
                    members.push(w);
                }
            }
        }
        let comp = members
            .iter()
            .map(|&v| {
                adj[v]
                    .iter()
                    .filter(|&&w| !removed[w])
                    .map(|&w| local[w])
                    .collect()
            })
            .collect();
        out.push(comp);
    }
    out
}
