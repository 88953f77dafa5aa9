//! Rooted trees stored as parent arrays in topological order.
//!
//! Vertex 0 is the root and every other vertex `i` has a parent with a
//! smaller index. That single invariant gives acyclicity and connectedness
//! for free, so a `RootedTree` can never describe anything but a tree.
//!
//! Text form, one tree per line: `<n>:_,<p_1>,...,<p_{n-1}>`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::canon;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("a tree needs at least one vertex")]
    Empty,
    #[error("vertex {child} has parent {parent}, but parents must precede their children")]
    ParentOrder { child: usize, parent: usize },
    #[error("path graph P_m needs m >= 1")]
    EmptyPath,
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

fn parse_err(position: usize, message: impl Into<String>) -> TreeError {
    TreeError::Parse {
        position,
        message: message.into(),
    }
}

/// An immutable rooted tree. `parent[0]` is unused (the root marker).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootedTree {
    parent: Vec<usize>,
}

impl RootedTree {
    /// Builds a tree from the parents of vertices `1..n`; `parents[i - 1]`
    /// is the parent of vertex `i`.
    pub fn from_parents(parents: &[usize]) -> Result<Self, TreeError> {
        let mut parent = Vec::with_capacity(parents.len() + 1);
        parent.push(0);
        for (i, &p) in parents.iter().enumerate() {
            let child = i + 1;
            if p >= child {
                return Err(TreeError::ParentOrder { child, parent: p });
            }
            parent.push(p);
        }
        Ok(RootedTree { parent })
    }

    pub fn single_vertex() -> Self {
        RootedTree { parent: vec![0] }
    }

    /// Number of vertices (always at least one).
    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn edge_count(&self) -> usize {
        self.len() - 1
    }

    /// Parent of `v`, or `None` for the root.
    pub fn parent(&self, v: usize) -> Option<usize> {
        (v != 0).then(|| self.parent[v])
    }

    /// Parents of vertices `1..n`, in order.
    pub fn parents(&self) -> &[usize] {
        &self.parent[1..]
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.len()).map(move |v| (self.parent[v], v))
    }

    pub fn children(&self) -> Vec<Vec<usize>> {
        let mut children = vec![Vec::new(); self.len()];
        for (p, c) in self.edges() {
            children[p].push(c);
        }
        children
    }

    /// Undirected adjacency lists.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.len()];
        for (p, c) in self.edges() {
            adj[p].push(c);
            adj[c].push(p);
        }
        adj
    }

    pub fn degree(&self, v: usize) -> usize {
        let up = usize::from(v != 0);
        up + self.parent[1..].iter().filter(|&&p| p == v).count()
    }

    /// Full scan of the topological-order invariant.
    pub fn check_invariants(&self) -> bool {
        !self.parent.is_empty() && (1..self.len()).all(|i| self.parent[i] < i)
    }

    /// Canonical code of the underlying unrooted tree; equal for isomorphic trees.
    pub fn canonical_code(&self) -> String {
        canon::unrooted_code(&self.adjacency())
    }

    /// Hangs each subtree under a fresh root, in order. The result keeps
    /// preorder numbering when the inputs are in preorder.
    pub fn join<'a, I>(subtrees: I) -> Self
    where
        I: IntoIterator<Item = &'a RootedTree>,
    {
        let mut parent = vec![0];
        for sub in subtrees {
            let offset = parent.len();
            parent.push(0);
            parent.extend(sub.parents().iter().map(|&p| p + offset));
        }
        let tree = RootedTree { parent };
        debug_assert!(tree.check_invariants());
        tree
    }

    pub fn serialize(&self) -> String {
        self.to_string()
    }

    pub fn parse(text: &str) -> Result<Self, TreeError> {
        let colon = text
            .find(':')
            .ok_or_else(|| parse_err(0, "missing ':' after vertex count"))?;
        let count_text = &text[..colon];
        let n: usize = parse_decimal(count_text, 0)?;
        if n == 0 {
            return Err(TreeError::Empty);
        }
        let body = &text[colon + 1..];
        let mut offset = colon + 1;
        let mut parents = Vec::with_capacity(n - 1);
        for (i, field) in body.split(',').enumerate() {
            if i == 0 {
                if field != "_" {
                    return Err(parse_err(offset, "root entry must be '_'"));
                }
            } else {
                if i >= n {
                    return Err(parse_err(offset, format!("more than {n} entries")));
                }
                let p = parse_decimal(field, offset)?;
                if p >= i {
                    return Err(parse_err(
                        offset,
                        format!("parent {p} of vertex {i} must be smaller than {i}"),
                    ));
                }
                parents.push(p);
            }
            offset += field.len() + 1;
        }
        if parents.len() + 1 != n {
            return Err(parse_err(
                text.len(),
                format!("expected {n} entries, found {}", parents.len() + 1),
            ));
        }
        RootedTree::from_parents(&parents)
    }
}

fn parse_decimal(field: &str, position: usize) -> Result<usize, TreeError> {
    if field.is_empty() || !field.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_err(
            position,
            format!("expected a decimal integer, found {field:?}"),
        ));
    }
    field
        .parse()
        .map_err(|_| parse_err(position, format!("integer {field:?} out of range")))
}

impl fmt::Display for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:_", self.len())?;
        for p in self.parents() {
            write!(f, ",{p}")?;
        }
        Ok(())
    }
}

impl FromStr for RootedTree {
    type Err = TreeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RootedTree::parse(s)
    }
}

/// The path P_m, rooted at one end.
pub fn path(m: usize) -> Result<RootedTree, TreeError> {
    if m == 0 {
        return Err(TreeError::EmptyPath);
    }
    let parents: Vec<usize> = (0..m - 1).collect();
    RootedTree::from_parents(&parents)
}

/// S_{2,t}: a root carrying `t` pendant two-vertex paths.
pub fn star2(t: usize) -> RootedTree {
    let p2 = RootedTree { parent: vec![0, 0] };
    RootedTree::join(std::iter::repeat_n(&p2, t))
}

/// T_{m,t}: a root with `m` children, each the centre of an S_{2,t}.
pub fn tree_t(m: usize, t: usize) -> RootedTree {
    let branch = star2(t);
    RootedTree::join(std::iter::repeat_n(&branch, m))
}

/// TG_{m,t}: root v_0 with one pendant leaf followed by `m` copies of T_{3,t}.
pub fn tree_tg(m: usize, t: usize) -> RootedTree {
    let leaf = RootedTree::single_vertex();
    let branch = tree_t(3, t);
    RootedTree::join(std::iter::once(&leaf).chain(std::iter::repeat_n(&branch, m)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_shapes() {
        assert_eq!(path(1).unwrap().len(), 1);
        assert_eq!(path(1).unwrap().edge_count(), 0);
        assert_eq!(path(2).unwrap().edge_count(), 1);
        assert_eq!(path(4).unwrap().parents(), &[0, 1, 2]);
        assert_eq!(path(0), Err(TreeError::EmptyPath));
    }

    #[test]
    fn star2_shapes() {
        assert_eq!(star2(0), RootedTree::single_vertex());
        let p3 = star2(1);
        assert_eq!(p3.len(), 3);
        assert_eq!(p3.canonical_code(), path(3).unwrap().canonical_code());
        let s5 = star2(5);
        assert_eq!(s5.len(), 11);
        let adj = s5.adjacency();
        assert_eq!(adj[0].len(), 5);
        assert_eq!(s5.degree(0), 5);
    }

    #[test]
    fn tree_t_shapes() {
        assert_eq!(tree_t(0, 7), RootedTree::single_vertex());
        assert_eq!(tree_t(3, 5).len(), 34);
        assert_eq!(tree_t(1, 0), path(2).unwrap());
    }

    #[test]
    fn tree_tg_shapes() {
        assert_eq!(tree_tg(2, 5).len(), 70);
        assert_eq!(tree_tg(5, 6).len(), 202);
        let small = tree_tg(1, 0);
        assert_eq!(small.len(), 6);
        // v_0 - leaf, v_0 - v, v - three leaves
        assert_eq!(small.parents(), &[0, 0, 2, 2, 2]);
        for (m, t) in [(1, 0), (2, 5), (4, 3)] {
            assert_eq!(tree_tg(m, t).degree(0), m + 1);
        }
    }

    #[test]
    fn text_format() {
        let star = RootedTree::parse("3:_,0,0").unwrap();
        assert_eq!(star.children()[0], vec![1, 2]);
        assert_eq!(path(3).unwrap().serialize(), "3:_,0,1");
        assert_eq!(RootedTree::parse("1:_").unwrap(), RootedTree::single_vertex());
    }

    #[test]
    fn parse_errors_carry_positions() {
        assert!(matches!(
            RootedTree::parse("2:_,5"),
            Err(TreeError::Parse { position: 4, .. })
        ));
        assert!(matches!(
            RootedTree::parse("3:_,0, 1"),
            Err(TreeError::Parse { position: 6, .. })
        ));
        assert!(matches!(
            RootedTree::parse("3:0,0,1"),
            Err(TreeError::Parse { position: 2, .. })
        ));
        assert!(matches!(RootedTree::parse("3:_,0"), Err(TreeError::Parse { .. })));
        assert!(matches!(RootedTree::parse("2:_,0,0"), Err(TreeError::Parse { .. })));
        assert!(matches!(RootedTree::parse("x:_"), Err(TreeError::Parse { position: 0, .. })));
        assert_eq!(RootedTree::parse("0:_"), Err(TreeError::Empty));
        assert!(RootedTree::parse("3_,0,0").is_err());
    }

    #[test]
    fn from_parents_rejects_forward_edges() {
        assert_eq!(
            RootedTree::from_parents(&[0, 2]),
            Err(TreeError::ParentOrder { child: 2, parent: 2 })
        );
    }
}
