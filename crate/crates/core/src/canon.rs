//! AHU-style canonical codes for trees given as adjacency lists.
//!
//! A rooted code is `(` + sorted child codes + `)`. The unrooted code roots
//! the tree at its centre (or the smaller code of its two centres), so two
//! trees get the same code iff they are isomorphic.

/// Canonical code of the tree rooted at `root`. `adj` must describe a tree.
pub fn rooted_code(adj: &[Vec<usize>], root: usize) -> String {
    let n = adj.len();
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    parent[root] = root;
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &w in &adj[v] {
            if parent[w] == usize::MAX {
                parent[w] = v;
                order.push(w);
            }
        }
    }

    let mut child_codes: Vec<Vec<String>> = vec![Vec::new(); n];
    let mut code = vec![String::new(); n];
    for &v in order.iter().rev() {
        let mut kids = std::mem::take(&mut child_codes[v]);
        kids.sort_unstable();
        let mut s = String::with_capacity(2 + kids.iter().map(String::len).sum::<usize>());
        s.push('(');
        for k in &kids {
            s.push_str(k);
        }
        s.push(')');
        if v == root {
            code[v] = s;
        } else {
            child_codes[parent[v]].push(s);
        }
    }
    std::mem::take(&mut code[root])
}

/// One or two centres of a tree, found by repeatedly stripping leaves.
pub fn centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

pub fn unrooted_code(adj: &[Vec<usize>]) -> String {
    centers(adj)
        .into_iter()
        .map(|c| rooted_code(adj, c))
        .min()
        .unwrap_or_default()
}
