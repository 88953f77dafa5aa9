#![allow(dead_code)]

use indpoly::tree::{path, star2, tree_t, tree_tg, RootedTree};
use rand::rngs::StdRng;
use rand::Rng;

/// Uniform random parent for each vertex: parent[i] drawn from 0..i.
pub fn random_tree(rng: &mut StdRng, n: usize) -> RootedTree {
    let parents: Vec<usize> = (1..n).map(|i| rng.gen_range(0..i)).collect();
    RootedTree::from_parents(&parents).unwrap()
}

/// Same unrooted tree, re-rooted at a random vertex and renumbered in BFS
/// order with shuffled neighbour lists.
pub fn relabel(rng: &mut StdRng, tree: &RootedTree) -> RootedTree {
    use rand::seq::SliceRandom;
    let mut adj = tree.adjacency();
    for list in &mut adj {
        list.shuffle(rng);
    }
    let root = rng.gen_range(0..tree.len());
    let mut new_id = vec![usize::MAX; tree.len()];
    let mut order = vec![root];
    new_id[root] = 0;
    let mut parents = Vec::new();
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &w in &adj[v] {
            if new_id[w] == usize::MAX {
                new_id[w] = order.len();
                order.push(w);
                parents.push(new_id[v]);
            }
        }
    }
    RootedTree::from_parents(&parents).unwrap()
}

/// Every family member with at most `max_n` vertices (t capped at 14 so the
/// single-vertex T_{0,t} is not repeated forever).
pub fn family_members(max_n: usize) -> Vec<(String, RootedTree)> {
    let mut out = Vec::new();
    for m in 1..=max_n {
        out.push((format!("P,{m}"), path(m).unwrap()));
    }
    for t in 0..=14 {
        if 2 * t < max_n {
            out.push((format!("S2,{t}"), star2(t)));
        }
    }
    for t in 0..=14 {
        for m in 0..=max_n {
            if m * (1 + 2 * t) < max_n {
                out.push((format!("T,{m},{t}"), tree_t(m, t)));
            }
        }
    }
    for t in 0..=14 {
        for m in 1..=max_n {
            if 2 + m * (4 + 6 * t) <= max_n {
                out.push((format!("TG,{m},{t}"), tree_tg(m, t)));
            }
        }
    }
    out
}

/// Binomial coefficient by Pascal's rule.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![1u64; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row[k]
}
