//! Suffix tree built from the suffix array and LCP array, annotated with the
//! fields the q-gram bound needs: string depth, first occurrence, a branching
//! flag and suffix links.
//!
//! A sentinel smaller than every byte terminates the text internally, so the
//! tree has exactly one leaf per suffix (plus the sentinel leaf). Sentinel
//! edges are excluded from the branching flag: `branching(v)` says whether
//! the label of `v`, or some extension of it occurring in the text, can be
//! followed by two distinct letters. End-of-text occurrences are instead
//! visible through `first_occurrence`, which is what the factor tests that
//! consume these annotations expect.

use super::suffix_array_with_sentinel;
use crate::{Error, Result};

const NONE: u32 = u32::MAX;

struct Node {
    parent: u32,
    /// Logical text position where the incoming edge label starts; the label
    /// runs for `depth` minus the parent depth symbols.
    edge_start: u32,
    /// String depth; for leaves this counts the sentinel.
    depth: u32,
    /// Smallest suffix index in the subtree, i.e. the leftmost occurrence
    /// start of the node label.
    first_occ: u32,
    suffix_link: u32,
    /// Suffix index for leaves, NONE for internal nodes.
    suffix: u32,
    branching: bool,
    /// (first edge symbol, child id), ascending by symbol; symbol 0 is the
    /// sentinel, byte `b` maps to `b + 1`.
    children: Vec<(u32, u32)>,
}

/// Position of a factor in the tree: the enclosing edge and the offset along
/// it. `node` is the edge destination, which is the factor's node itself when
/// `explicit` holds and otherwise the explicit node just below it (the node
/// whose annotations stand in for the implicit position).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NodeLocator {
    pub parent: usize,
    pub first_symbol: u8,
    pub offset: usize,
    pub node: usize,
    pub explicit: bool,
}

pub struct AnnotatedSuffixTree {
    bytes: Vec<u8>,
    nodes: Vec<Node>,
    /// Leaf id per suffix index `0..=n` (index `n` is the sentinel leaf).
    leaf_of: Vec<u32>,
}

impl AnnotatedSuffixTree {
    pub fn build(text: &[u8]) -> Result<AnnotatedSuffixTree> {
        if text.is_empty() {
            return Err(Error::EmptySequence);
        }
        let n = text.len();
        let mapped: Vec<u32> = text.iter().map(|&b| b as u32 + 1).collect();
        let sa = suffix_array_with_sentinel(&mapped, 257);
        let lcp = sentinel_lcp(&mapped, &sa);

        let mut tree = AnnotatedSuffixTree {
            bytes: text.to_vec(),
            nodes: Vec::with_capacity(2 * n + 2),
            leaf_of: vec![NONE; n + 2],
        };
        tree.nodes.push(Node {
            parent: 0,
            edge_start: 0,
            depth: 0,
            first_occ: NONE,
            suffix_link: 0,
            suffix: NONE,
            branching: false,
            children: Vec::new(),
        });
        tree.construct(&sa, &lcp);
        tree.annotate();
        tree.link_suffixes(&sa);
        Ok(tree)
    }

    /// Stack insertion over the suffix array: each new suffix walks up the
    /// rightmost path, splitting an edge when it diverges inside one.
    fn construct(&mut self, sa: &[u32], lcp: &[u32]) {
        let total = sa.len(); // n + 1 logical symbols including the sentinel
        let mut stack: Vec<u32> = vec![0];
        let first = self.add_leaf(0, sa[0]);
        stack.push(first);
        for r in 1..total {
            let split_depth = lcp[r];
            let mut last_popped = NONE;
            while self.nodes[*stack.last().unwrap() as usize].depth > split_depth {
                last_popped = stack.pop().unwrap();
            }
            let top = *stack.last().unwrap();
            let attach_to = if self.nodes[top as usize].depth == split_depth {
                top
            } else {
                // Diverged inside the edge leading to `last_popped`: insert an
                // internal node at `split_depth`.
                let child = last_popped;
                debug_assert!(child != NONE);
                let top_depth = self.nodes[top as usize].depth;
                let child_start = self.nodes[child as usize].edge_start;
                let mid = self.nodes.len() as u32;
                self.nodes.push(Node {
                    parent: top,
                    edge_start: child_start,
                    depth: split_depth,
                    first_occ: NONE,
                    suffix_link: NONE,
                    suffix: NONE,
                    branching: false,
                    children: Vec::new(),
                });
                let new_child_start = child_start + (split_depth - top_depth);
                self.nodes[child as usize].edge_start = new_child_start;
                self.nodes[child as usize].parent = mid;
                let continuation = self.symbol_at(new_child_start as usize);
                self.nodes[mid as usize].children.push((continuation, child));
                let slot = self.nodes[top as usize]
                    .children
                    .last_mut()
                    .expect("split target is the most recent child");
                debug_assert_eq!(slot.1, child);
                slot.1 = mid;
                stack.push(mid);
                mid
            };
            let leaf = self.add_leaf(attach_to, sa[r]);
            stack.push(leaf);
        }
    }

    fn add_leaf(&mut self, parent: u32, suffix: u32) -> u32 {
        let total = self.bytes.len() as u32 + 1;
        let parent_depth = self.nodes[parent as usize].depth;
        let edge_start = suffix + parent_depth;
        let id = self.nodes.len() as u32;
        let sym = self.symbol_at(edge_start as usize);
        self.nodes.push(Node {
            parent,
            edge_start,
            depth: total - suffix,
            first_occ: suffix,
            suffix_link: NONE,
            suffix,
            branching: false,
            children: Vec::new(),
        });
        self.nodes[parent as usize].children.push((sym, id));
        self.leaf_of[suffix as usize] = id;
        id
    }

    /// Bottom-up aggregation of `first_occ` and `branching`. Children always
    /// lie strictly deeper than their parents, so a depth-descending sweep
    /// visits every child before its parent.
    fn annotate(&mut self) {
        for node in &mut self.nodes {
            if node.suffix == NONE {
                node.first_occ = NONE;
                let letters = node.children.iter().filter(|(s, _)| *s != 0).count();
                node.branching = letters >= 2;
            }
        }
        let mut order: Vec<u32> = (1..self.nodes.len() as u32).collect();
        order.sort_by(|&a, &b| self.nodes[b as usize].depth.cmp(&self.nodes[a as usize].depth));
        for &v in &order {
            let (occ, br) = {
                let node = &self.nodes[v as usize];
                (node.first_occ, node.branching)
            };
            let parent = self.nodes[v as usize].parent as usize;
            let p = &mut self.nodes[parent];
            p.first_occ = p.first_occ.min(occ);
            p.branching |= br;
        }
    }

    /// Suffix links. Leaves chain to the next suffix's leaf. For an internal
    /// node the target label is its own label minus the head letter, found by
    /// walking down from the suffix link of the parent; the walk skips whole
    /// edges, and its total cost telescopes along tree paths.
    fn link_suffixes(&mut self, sa: &[u32]) {
        let n = self.bytes.len();
        for &p in sa {
            let leaf = self.leaf_of[p as usize];
            self.nodes[leaf as usize].suffix_link = if (p as usize) < n {
                self.leaf_of[p as usize + 1]
            } else {
                0
            };
        }
        let mut order: Vec<u32> = (1..self.nodes.len() as u32)
            .filter(|&v| self.nodes[v as usize].suffix == NONE)
            .collect();
        order.sort_by_key(|&v| self.nodes[v as usize].depth);
        for &v in &order {
            let target_depth = self.nodes[v as usize].depth - 1;
            let start = self.nodes[v as usize].first_occ + 1;
            let parent = self.nodes[v as usize].parent;
            let mut u = self.nodes[parent as usize].suffix_link;
            debug_assert!(u != NONE);
            while self.nodes[u as usize].depth < target_depth {
                let sym = self.symbol_at((start + self.nodes[u as usize].depth) as usize);
                u = self
                    .child(u as usize, sym)
                    .expect("suffix link target path exists") as u32;
            }
            debug_assert_eq!(self.nodes[u as usize].depth, target_depth);
            self.nodes[v as usize].suffix_link = u;
        }
    }

    /// Logical symbol at position `k`: bytes shift up by one, position `n`
    /// is the sentinel 0.
    fn symbol_at(&self, k: usize) -> u32 {
        if k == self.bytes.len() {
            0
        } else {
            self.bytes[k] as u32 + 1
        }
    }

    fn child(&self, v: usize, sym: u32) -> Option<usize> {
        let children = &self.nodes[v].children;
        children
            .binary_search_by_key(&sym, |&(s, _)| s)
            .ok()
            .map(|i| children[i].1 as usize)
    }

    /// Locates the factor `x[i..=j]` (always present by construction).
    pub fn locate_factor(&self, i: usize, j: usize) -> Result<NodeLocator> {
        let n = self.bytes.len();
        if i > j || j >= n {
            return Err(Error::IntervalOutOfRange {
                start: i,
                end: j,
                len: n,
            });
        }
        let target = (j - i + 1) as u32;
        let mut u = 0usize;
        loop {
            let d = self.nodes[u].depth;
            let sym = self.symbol_at(i + d as usize);
            let v = self
                .child(u, sym)
                .expect("factors of the text are always locatable");
            let vd = self.nodes[v].depth;
            if vd < target {
                u = v;
                continue;
            }
            return Ok(NodeLocator {
                parent: u,
                first_symbol: self.bytes[i + d as usize],
                offset: (target - d) as usize,
                node: v,
                explicit: vd == target,
            });
        }
    }

    pub fn root(&self) -> usize {
        0
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn leaf_count(&self) -> usize {
        self.bytes.len() + 1
    }

    pub fn text_len(&self) -> usize {
        self.bytes.len()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.nodes[v].suffix != NONE
    }

    /// Suffix index for leaves.
    pub fn suffix_index(&self, v: usize) -> Option<usize> {
        let s = self.nodes[v].suffix;
        (s != NONE).then_some(s as usize)
    }

    pub fn parent(&self, v: usize) -> usize {
        self.nodes[v].parent as usize
    }

    /// String depth; leaf depths count the terminating sentinel.
    pub fn depth(&self, v: usize) -> usize {
        self.nodes[v].depth as usize
    }

    /// Leftmost occurrence start of the node label in the text.
    pub fn first_occurrence(&self, v: usize) -> usize {
        self.nodes[v].first_occ as usize
    }

    /// Whether the node label, or some extension of it occurring in the
    /// text, has at least two distinct following letters.
    pub fn branching(&self, v: usize) -> bool {
        self.nodes[v].branching
    }

    pub fn suffix_link(&self, v: usize) -> usize {
        self.nodes[v].suffix_link as usize
    }

    /// Children as (edge letter, child id); `None` marks the sentinel edge.
    pub fn children(&self, v: usize) -> impl Iterator<Item = (Option<u8>, usize)> + '_ {
        self.nodes[v].children.iter().map(|&(s, c)| {
            let letter = if s == 0 { None } else { Some((s - 1) as u8) };
            (letter, c as usize)
        })
    }

    /// The node label with the sentinel stripped.
    pub fn label(&self, v: usize) -> &[u8] {
        let start = self.nodes[v].first_occ as usize;
        let len = (self.nodes[v].depth as usize).min(self.bytes.len() - start);
        &self.bytes[start..start + len]
    }

    pub fn leaf_for_suffix(&self, i: usize) -> usize {
        self.leaf_of[i] as usize
    }
}

/// Kasai's algorithm over the sentinel-terminated logical text.
fn sentinel_lcp(mapped: &[u32], sa: &[u32]) -> Vec<u32> {
    let total = mapped.len() + 1;
    let at = |k: usize| if k == mapped.len() { 0 } else { mapped[k] };
    let mut isa = vec![0u32; total];
    for (r, &p) in sa.iter().enumerate() {
        isa[p as usize] = r as u32;
    }
    let mut lcp = vec![0u32; total];
    let mut k = 0usize;
    for i in 0..total {
        let r = isa[i] as usize;
        if r == 0 {
            k = 0;
            continue;
        }
        let j = sa[r - 1] as usize;
        while i + k < total && j + k < total && at(i + k) == at(j + k) && at(i + k) != 0 {
            k += 1;
        }
        lcp[r] = k as u32;
        k = k.saturating_sub(1);
    }
    lcp
}
