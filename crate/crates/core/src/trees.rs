//! Edge-rooted bicolored plane trees for noncrossing partitions, the split
//! into pairs of even trees for ONC, and even trees versus ternary trees.
//!
//! Child order: a vertex reached through edge `e` lists its children by going
//! counterclockwise from `e`, so that its clockwise rotation is
//! `[parent, c_k, ..., c_1]`. The root of a bicolored tree is the white end of
//! the marked edge and lists the marked edge's black end first.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::noncrossing::{is_noncrossing, onc_membership};
use crate::perm::Permutation;
use crate::poly::binomial;
use num_bigint::BigUint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Color {
    White,
    Black,
}

impl Color {
    fn other(self) -> Color {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
        }
    }
}

/// A plane tree as a rotation system: for every vertex the clockwise list of
/// its neighbours. The marked edge is stored as `(white, black)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BicoloredPlaneTree {
    colors: Vec<Color>,
    rotation: Vec<Vec<usize>>,
    marked: (usize, usize),
}

/// Nested form of a bicolored tree, as serialized to JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BicoloredNode {
    pub color: Color,
    pub children: Vec<BicoloredNode>,
}

impl BicoloredPlaneTree {
    pub fn new(colors: Vec<Color>, rotation: Vec<Vec<usize>>, marked: (usize, usize)) -> Result<Self> {
        let t = BicoloredPlaneTree { colors, rotation, marked };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let v = self.colors.len();
        if self.rotation.len() != v {
            return Err(Error::MalformedTree("rotation list count differs from vertex count".into()));
        }
        let mut edges = 0usize;
        for (a, nbrs) in self.rotation.iter().enumerate() {
            let mut sorted = nbrs.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::MalformedTree(format!("vertex {a} lists a neighbour twice")));
            }
            for &b in nbrs {
                if b >= v || b == a {
                    return Err(Error::MalformedTree(format!("bad neighbour {b} of {a}")));
                }
                if !self.rotation[b].contains(&a) {
                    return Err(Error::MalformedTree(format!("edge {a}-{b} is one-sided")));
                }
                if self.colors[a] == self.colors[b] {
                    return Err(Error::MalformedTree(format!("edge {a}-{b} joins equal colours")));
                }
            }
            edges += nbrs.len();
        }
        edges /= 2;
        if v == 0 || edges + 1 != v {
            return Err(Error::MalformedTree(format!("{v} vertices and {edges} edges")));
        }
        let (w, b) = self.marked;
        if w >= v || b >= v || self.colors[w] != Color::White || !self.rotation[w].contains(&b) {
            return Err(Error::MalformedTree("marked edge is not a white-black edge".into()));
        }
        // connected, hence a tree
        let mut seen = vec![false; v];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(a) = stack.pop() {
            for &b in &self.rotation[a] {
                if !seen[b] {
                    seen[b] = true;
                    count += 1;
                    stack.push(b);
                }
            }
        }
        if count != v {
            return Err(Error::MalformedTree("graph is disconnected".into()));
        }
        Ok(())
    }

    pub fn edge_count(&self) -> usize {
        self.colors.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    /// Clockwise neighbours of `v`.
    pub fn rotation_of(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn marked_edge(&self) -> (usize, usize) {
        self.marked
    }

    /// Sorted (descending) degrees of the vertices of one colour.
    pub fn degrees(&self, color: Color) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.colors.len())
            .filter(|&v| self.colors[v] == color)
            .map(|v| self.rotation[v].len())
            .collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    fn next_clockwise(&self, at: usize, from: usize) -> usize {
        let r = &self.rotation[at];
        let i = r.iter().position(|&u| u == from).expect("neighbour");
        r[(i + 1) % r.len()]
    }

    /// Labels of the edges from the boundary walk, keyed by `(white, black)`.
    pub fn edge_labels(&self) -> Vec<((usize, usize), usize)> {
        let n = self.edge_count();
        let mut labels = Vec::with_capacity(n);
        let (mut from, mut to) = self.marked;
        for _ in 0..2 * n {
            if self.colors[from] == Color::White {
                labels.push(((from, to), labels.len() + 1));
            }
            let next = self.next_clockwise(to, from);
            from = to;
            to = next;
        }
        labels
    }

    /// Children of `v` when reached from `parent`.
    fn children_from(&self, v: usize, parent: usize) -> Vec<usize> {
        let r = &self.rotation[v];
        let d = r.len();
        let s = r.iter().position(|&u| u == parent).expect("neighbour");
        (1..d).map(|t| r[(s + d - t) % d]).collect()
    }

    fn nested_from(&self, v: usize, parent: usize) -> BicoloredNode {
        BicoloredNode {
            color: self.colors[v],
            children: self.children_from(v, parent).into_iter().map(|c| self.nested_from(c, v)).collect(),
        }
    }

    /// Nested form from the white end of the marked edge.
    pub fn to_nested(&self) -> BicoloredNode {
        let (w, b) = self.marked;
        let mut children = vec![self.nested_from(b, w)];
        children.extend(self.children_from(w, b).into_iter().map(|c| self.nested_from(c, w)));
        BicoloredNode { color: Color::White, children }
    }

    pub fn from_nested(root: &BicoloredNode) -> Result<Self> {
        if root.color != Color::White || root.children.is_empty() {
            return Err(Error::MalformedTree("root must be white with the marked edge first".into()));
        }
        let mut colors = vec![Color::White];
        let mut rotation = vec![Vec::new()];
        let kids: Vec<usize> = root
            .children
            .iter()
            .map(|c| add_nested(c, 0, &mut colors, &mut rotation))
            .collect::<Result<_>>()?;
        let mut r = vec![kids[0]];
        r.extend(kids[1..].iter().rev());
        rotation[0] = r;
        BicoloredPlaneTree::new(colors, rotation, (0, kids[0]))
    }

    /// Vertices renumbered in preorder of the nested form.
    pub fn canonical(&self) -> Self {
        Self::from_nested(&self.to_nested()).expect("valid tree")
    }

    /// Nested parentheses with `w`/`b` colour tags, e.g. `w(b()b(w()))`.
    pub fn to_parens(&self) -> String {
        fn go(n: &BicoloredNode, out: &mut String) {
            out.push(if n.color == Color::White { 'w' } else { 'b' });
            out.push('(');
            for c in &n.children {
                go(c, out);
            }
            out.push(')');
        }
        let mut s = String::new();
        go(&self.to_nested(), &mut s);
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_nested()).expect("serializable")
    }

    /// DOT drawing with edge labels from the boundary walk; the marked edge is bold.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph phi {\n  node [shape=circle, label=\"\", width=0.25];\n");
        for (v, c) in self.colors.iter().enumerate() {
            let fill = if *c == Color::White { "white" } else { "black" };
            s.push_str(&format!("  v{v} [style=filled, fillcolor={fill}];\n"));
        }
        for ((w, b), label) in self.edge_labels() {
            let style = if (w, b) == self.marked { ", penwidth=3" } else { "" };
            s.push_str(&format!("  v{w} -- v{b} [label=\"{label}\"{style}];\n"));
        }
        s.push_str("}\n");
        s
    }
}

fn add_nested(
    node: &BicoloredNode,
    parent: usize,
    colors: &mut Vec<Color>,
    rotation: &mut Vec<Vec<usize>>,
) -> Result<usize> {
    if node.color == colors[parent] {
        return Err(Error::MalformedTree("adjacent vertices share a colour".into()));
    }
    let id = colors.len();
    colors.push(node.color);
    rotation.push(Vec::new());
    let kids: Vec<usize> =
        node.children.iter().map(|c| add_nested(c, id, colors, rotation)).collect::<Result<_>>()?;
    let mut r = vec![parent];
    r.extend(kids.iter().rev());
    rotation[id] = r;
    Ok(id)
}

/// White vertices are the cycles of `x`, black vertices the cycles of
/// `x^{-1} (1 2 ... N)`; each vertex carries its cycle's labels clockwise.
pub fn phi(x: &Permutation) -> Result<BicoloredPlaneTree> {
    if !is_noncrossing(x) {
        return Err(Error::NotNoncrossing(x.to_string()));
    }
    let n = x.degree();
    let y = &x.inverse() * &Permutation::long_cycle(n);
    let white = x.all_cycles();
    let black = y.all_cycles();
    let nw = white.len();
    let mut white_of = vec![0usize; n + 1];
    let mut black_of = vec![0usize; n + 1];
    for (i, c) in white.iter().enumerate() {
        for &a in c {
            white_of[a] = i;
        }
    }
    for (i, c) in black.iter().enumerate() {
        for &a in c {
            black_of[a] = nw + i;
        }
    }
    let mut colors = vec![Color::White; nw];
    colors.extend(std::iter::repeat_n(Color::Black, black.len()));
    let mut rotation: Vec<Vec<usize>> = white.iter().map(|c| c.iter().map(|&a| black_of[a]).collect()).collect();
    rotation.extend(black.iter().map(|c| c.iter().map(|&a| white_of[a]).collect::<Vec<_>>()));
    let t = BicoloredPlaneTree::new(colors, rotation, (white_of[1], black_of[1]))?;
    Ok(t.canonical())
}

/// Recovers the permutation from the product of the white vertices' label cycles.
pub fn phi_inverse(tree: &BicoloredPlaneTree) -> Result<Permutation> {
    tree.validate()?;
    let n = tree.edge_count();
    let labels = tree.edge_labels();
    let mut label_of = std::collections::HashMap::new();
    for &((w, b), l) in &labels {
        if label_of.insert((w, b), l).is_some() {
            return Err(Error::MalformedTree("edge labelled twice".into()));
        }
    }
    if label_of.len() != n {
        return Err(Error::MalformedTree("boundary walk missed an edge".into()));
    }
    let mut cycles = Vec::new();
    for v in 0..tree.vertex_count() {
        if tree.colors[v] == Color::White {
            cycles.push(tree.rotation[v].iter().map(|&b| label_of[&(v, b)]).collect::<Vec<_>>());
        }
    }
    Permutation::from_cycles(n, &cycles)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Flavor {
    Even,
    Ternary,
}

/// A plane rooted tree; children are listed left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PlaneNode {
    pub children: Vec<PlaneNode>,
}

impl PlaneNode {
    pub fn leaf() -> Self {
        PlaneNode { children: Vec::new() }
    }

    pub fn node(children: Vec<PlaneNode>) -> Self {
        PlaneNode { children }
    }

    pub fn edge_count(&self) -> usize {
        self.children.iter().map(|c| 1 + c.edge_count()).sum()
    }

    pub fn internal_count(&self) -> usize {
        if self.children.is_empty() {
            0
        } else {
            1 + self.children.iter().map(PlaneNode::internal_count).sum::<usize>()
        }
    }

    pub fn has_flavor(&self, flavor: Flavor) -> bool {
        let ok = match flavor {
            Flavor::Even => self.children.len().is_multiple_of(2),
            Flavor::Ternary => self.children.is_empty() || self.children.len() == 3,
        };
        ok && self.children.iter().all(|c| c.has_flavor(flavor))
    }

    /// Nested parentheses, e.g. `(()())`.
    pub fn to_parens(&self) -> String {
        let mut s = String::from("(");
        for c in &self.children {
            s.push_str(&c.to_parens());
        }
        s.push(')');
        s
    }

    pub fn from_parens(text: &str) -> Result<Self> {
        let bytes: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let (node, used) = parse_node(&bytes, 0)?;
        if used != bytes.len() {
            return Err(Error::MalformedTree(format!("trailing input in {text:?}")));
        }
        Ok(node)
    }
}

fn parse_node(s: &[char], at: usize) -> Result<(PlaneNode, usize)> {
    if s.get(at) != Some(&'(') {
        return Err(Error::MalformedTree("expected '('".into()));
    }
    let mut i = at + 1;
    let mut children = Vec::new();
    loop {
        match s.get(i) {
            Some(')') => return Ok((PlaneNode { children }, i + 1)),
            Some('(') => {
                let (c, next) = parse_node(s, i)?;
                children.push(c);
                i = next;
            }
            _ => return Err(Error::MalformedTree("unbalanced parentheses".into())),
        }
    }
}

/// The rooted tree hanging below `v` as seen from `parent`, colours dropped.
fn plane_from(tree: &BicoloredPlaneTree, v: usize, parent: usize) -> PlaneNode {
    PlaneNode::node(tree.children_from(v, parent).into_iter().map(|c| plane_from(tree, c, v)).collect())
}

fn attach(node: &PlaneNode, parent: usize, color: Color, colors: &mut Vec<Color>, rotation: &mut Vec<Vec<usize>>) -> usize {
    let id = colors.len();
    colors.push(color);
    rotation.push(Vec::new());
    let kids: Vec<usize> =
        node.children.iter().map(|c| attach(c, id, color.other(), colors, rotation)).collect();
    let mut r = vec![parent];
    r.extend(kids.iter().rev());
    rotation[id] = r;
    id
}

/// Deletes the marked edge of `phi(x)` for `x` in ONC of odd degree; returns
/// the (white-side, black-side) even trees.
pub fn onc_tree_pair(x: &Permutation) -> Result<(PlaneNode, PlaneNode)> {
    if x.degree().is_multiple_of(2) || !onc_membership(x).is_member() {
        return Err(Error::NotOnc(x.to_string()));
    }
    let t = phi(x)?;
    let (w, b) = t.marked;
    let pair = (plane_from(&t, w, b), plane_from(&t, b, w));
    debug_assert!(pair.0.has_flavor(Flavor::Even) && pair.1.has_flavor(Flavor::Even));
    Ok(pair)
}

pub fn onc_tree_pair_inverse(white: &PlaneNode, black: &PlaneNode) -> Result<Permutation> {
    if !white.has_flavor(Flavor::Even) || !black.has_flavor(Flavor::Even) {
        return Err(Error::WrongFlavor("components must be even trees".into()));
    }
    let mut colors = vec![Color::White, Color::Black];
    let mut rotation = vec![Vec::new(), Vec::new()];
    let wk: Vec<usize> =
        white.children.iter().map(|c| attach(c, 0, Color::Black, &mut colors, &mut rotation)).collect();
    let bk: Vec<usize> =
        black.children.iter().map(|c| attach(c, 1, Color::White, &mut colors, &mut rotation)).collect();
    rotation[0] = std::iter::once(1).chain(wk.into_iter().rev()).collect();
    rotation[1] = std::iter::once(0).chain(bk.into_iter().rev()).collect();
    phi_inverse(&BicoloredPlaneTree::new(colors, rotation, (0, 1))?)
}

/// For `x` in ONC of even degree: `phi(x)` rooted at its unique black vertex
/// of even degree, the cycle of `x^{-1} (1 ... N)` through `N`. That vertex is
/// adjacent to the white end of the marked edge, which is listed first.
pub fn onc_even_tree(x: &Permutation) -> Result<PlaneNode> {
    if x.degree() % 2 == 1 || !onc_membership(x).is_member() {
        return Err(Error::NotOnc(x.to_string()));
    }
    let t = phi(x)?;
    let u = t.marked.0;
    let root = (0..t.vertex_count())
        .find(|&v| t.colors[v] == Color::Black && t.degree(v) % 2 == 0)
        .ok_or_else(|| Error::NotOnc(x.to_string()))?;
    debug_assert!(t.rotation[root].contains(&u));
    let mut children = vec![plane_from(&t, u, root)];
    children.extend(t.children_from(root, u).into_iter().map(|c| plane_from(&t, c, root)));
    Ok(PlaneNode::node(children))
}

pub fn onc_even_tree_inverse(tree: &PlaneNode) -> Result<Permutation> {
    if !tree.has_flavor(Flavor::Even) || tree.children.is_empty() {
        return Err(Error::WrongFlavor("need a nonempty even tree".into()));
    }
    let mut colors = vec![Color::Black];
    let mut rotation = vec![Vec::new()];
    let kids: Vec<usize> =
        tree.children.iter().map(|c| attach(c, 0, Color::White, &mut colors, &mut rotation)).collect();
    let mut r = vec![kids[0]];
    r.extend(kids[1..].iter().rev());
    rotation[0] = r;
    let u = kids[0];
    let partial = BicoloredPlaneTree { colors, rotation, marked: (u, 0) };
    let b = partial.next_clockwise(u, 0);
    let BicoloredPlaneTree { colors, rotation, .. } = partial;
    phi_inverse(&BicoloredPlaneTree::new(colors, rotation, (u, b))?)
}

/// Children `c_1, c_2, rest...` become the ternary node
/// `(enc c_1, enc c_2, enc(node with rest))`; a childless node becomes a leaf.
pub fn even_ternary(t: &PlaneNode) -> Result<PlaneNode> {
    if !t.has_flavor(Flavor::Even) {
        return Err(Error::WrongFlavor(t.to_parens()));
    }
    Ok(encode(&t.children))
}

fn encode(children: &[PlaneNode]) -> PlaneNode {
    match children {
        [] => PlaneNode::leaf(),
        [a, b, rest @ ..] => PlaneNode::node(vec![encode(&a.children), encode(&b.children), encode(rest)]),
        [_] => unreachable!("even child count"),
    }
}

pub fn ternary_even(t: &PlaneNode) -> Result<PlaneNode> {
    if !t.has_flavor(Flavor::Ternary) {
        return Err(Error::WrongFlavor(t.to_parens()));
    }
    Ok(decode(t))
}

fn decode(t: &PlaneNode) -> PlaneNode {
    match t.children.as_slice() {
        [] => PlaneNode::leaf(),
        [a, b, rest] => {
            let mut children = vec![decode(a), decode(b)];
            children.extend(decode(rest).children);
            PlaneNode::node(children)
        }
        _ => unreachable!("ternary arity"),
    }
}

/// Even trees with `edges` edges: `1/(2m+1) C(3m, m)` for `edges = 2m`, zero for odd.
pub fn count_even_trees(edges: usize) -> BigUint {
    if edges % 2 == 1 {
        return BigUint::default();
    }
    let m = (edges / 2) as u64;
    binomial(3 * m, m) / (2 * m + 1)
}

/// Every even tree with the given number of edges.
pub fn enumerate_even_trees(edges: usize) -> Vec<PlaneNode> {
    forests(edges, &|k| k % 2 == 0)
        .into_iter()
        .filter(|f| f.len() % 2 == 0)
        .map(PlaneNode::node)
        .collect()
}

/// Every ternary tree with the given number of internal nodes.
pub fn enumerate_ternary_trees(internal: usize) -> Vec<PlaneNode> {
    if internal == 0 {
        return vec![PlaneNode::leaf()];
    }
    let mut out = Vec::new();
    for i in 0..internal {
        for j in 0..internal - i {
            let k = internal - 1 - i - j;
            for a in enumerate_ternary_trees(i) {
                for b in enumerate_ternary_trees(j) {
                    for c in enumerate_ternary_trees(k) {
                        out.push(PlaneNode::node(vec![a.clone(), b.clone(), c]));
                    }
                }
            }
        }
    }
    out
}

// sequences of subtrees (each with its connecting edge) using `edges` edges in
// total, each subtree respecting the child-count predicate at every node
fn forests(edges: usize, ok: &dyn Fn(usize) -> bool) -> Vec<Vec<PlaneNode>> {
    if edges == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=edges {
        let heads: Vec<PlaneNode> = forests(first - 1, ok)
            .into_iter()
            .filter(|f| ok(f.len()))
            .map(PlaneNode::node)
            .collect();
        for tail in forests(edges - first, ok) {
            for h in &heads {
                let mut f = vec![h.clone()];
                f.extend(tail.iter().cloned());
                out.push(f);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::noncrossing::enumerate_nc;
    use crate::prefix::kreweras;
    use proptest::prelude::*;

    fn example() -> Permutation {
        Permutation::parse("(1 14 15)(3 4 7)(8 9 10 11 12)", 17).unwrap()
    }

    #[test]
    fn single_edge_and_star() {
        let t = phi(&Permutation::identity(1)).unwrap();
        assert_eq!(t.edge_count(), 1);
        assert_eq!(phi_inverse(&t).unwrap(), Permutation::identity(1));
        let c = Permutation::long_cycle(6);
        let star = phi(&c).unwrap();
        assert_eq!(star.degrees(Color::White), vec![6]);
        assert_eq!(star.degrees(Color::Black), vec![1; 6]);
        assert_eq!(phi_inverse(&star).unwrap(), c);
    }

    #[test]
    fn example_tree_degrees_and_round_trip() {
        let x = example();
        let t = phi(&x).unwrap();
        let w = t.degrees(Color::White);
        let b = t.degrees(Color::Black);
        assert_eq!(&w[..3], &[5, 3, 3]);
        assert!(w[3..].iter().all(|&d| d == 1));
        assert_eq!(&b[..3], &[5, 3, 3]);
        assert!(b[3..].iter().all(|&d| d == 1));
        assert_eq!(phi_inverse(&t).unwrap(), x);
    }

    #[test]
    fn example_pair_of_even_trees() {
        let (w, b) = onc_tree_pair(&example()).unwrap();
        let leaf = PlaneNode::leaf;
        let two = || PlaneNode::node(vec![leaf(), leaf()]);
        assert_eq!(w, PlaneNode::node(vec![two(), leaf()]));
        assert_eq!(
            b,
            PlaneNode::node(vec![
                leaf(),
                PlaneNode::node(vec![leaf(), leaf(), leaf(), leaf()]),
                PlaneNode::node(vec![two(), leaf()]),
                leaf(),
            ])
        );
        assert_eq!(onc_tree_pair_inverse(&w, &b).unwrap(), example());
    }

    #[test]
    fn identity_of_degree_one_gives_empty_pair() {
        let (w, b) = onc_tree_pair(&Permutation::identity(1)).unwrap();
        assert_eq!((w, b), (PlaneNode::leaf(), PlaneNode::leaf()));
    }

    #[test]
    fn phi_round_trip_nc7_and_degree_dictionary() {
        let c = Permutation::long_cycle(7);
        for x in enumerate_nc(7, false) {
            let t = phi(&x).unwrap();
            assert_eq!(phi_inverse(&t).unwrap(), x);
            let mut white: Vec<usize> = x.all_cycles().iter().map(Vec::len).collect();
            white.sort_unstable_by(|a, b| b.cmp(a));
            let mut black: Vec<usize> = kreweras(&c, &x).unwrap().all_cycles().iter().map(Vec::len).collect();
            black.sort_unstable_by(|a, b| b.cmp(a));
            assert_eq!(t.degrees(Color::White), white);
            assert_eq!(t.degrees(Color::Black), black);
        }
    }

    #[test]
    fn onc7_pairs_are_distinct() {
        let onc = crate::noncrossing::enumerate_onc(7).unwrap();
        let mut pairs: Vec<_> = onc.iter().map(|x| onc_tree_pair(x).unwrap()).collect();
        assert!(pairs.iter().all(|(w, b)| w.edge_count() + b.edge_count() == 6));
        for (x, (w, b)) in onc.iter().zip(&pairs) {
            assert_eq!(&onc_tree_pair_inverse(w, b).unwrap(), x);
        }
        pairs.sort();
        pairs.dedup();
        assert_eq!(pairs.len(), 30);
    }

    #[test]
    fn even_degree_onc_trees() {
        for n in [2usize, 4, 6] {
            let onc = crate::noncrossing::enumerate_onc(n).unwrap();
            let mut trees: Vec<PlaneNode> = onc.iter().map(|x| onc_even_tree(x).unwrap()).collect();
            for (x, t) in onc.iter().zip(&trees) {
                assert_eq!(t.edge_count(), n);
                assert_eq!(&onc_even_tree_inverse(t).unwrap(), x);
            }
            trees.sort();
            trees.dedup();
            assert_eq!(trees.len() as u64, count_even_trees(n).try_into().unwrap_or(0u64));
        }
    }

    #[test]
    fn even_ternary_bijection() {
        assert_eq!(even_ternary(&PlaneNode::leaf()).unwrap(), PlaneNode::leaf());
        assert_eq!(count_even_trees(4), BigUint::from(3u32));
        for m in 0..=5 {
            let evens = enumerate_even_trees(2 * m);
            assert_eq!(BigUint::from(evens.len()), count_even_trees(2 * m));
            let mut images: Vec<PlaneNode> = evens.iter().map(|t| even_ternary(t).unwrap()).collect();
            for (t, img) in evens.iter().zip(&images) {
                assert_eq!(img.internal_count(), m);
                assert_eq!(&ternary_even(img).unwrap(), t);
            }
            images.sort();
            let mut all = enumerate_ternary_trees(m);
            all.sort();
            assert_eq!(images, all);
        }
        assert!(even_ternary(&PlaneNode::node(vec![PlaneNode::leaf()])).is_err());
    }

    #[test]
    fn parens_and_json() {
        let t = PlaneNode::from_parens("(()(()()))").unwrap();
        assert_eq!(t.to_parens(), "(()(()()))");
        assert!(PlaneNode::from_parens("(()").is_err());
        let tree = phi(&Permutation::parse("(1 2)", 2).unwrap()).unwrap();
        assert_eq!(tree.to_parens(), "w(b()b())");
        assert!(tree.to_json().contains("\"White\""));
        assert!(tree.to_dot().contains("penwidth"));
    }

    #[test]
    fn malformed_trees_are_rejected() {
        let bad = BicoloredPlaneTree::new(vec![Color::White, Color::White], vec![vec![1], vec![0]], (0, 1));
        assert!(matches!(bad, Err(Error::MalformedTree(_))));
        assert!(matches!(phi(&Permutation::parse("(1 3)(2 4)", 4).unwrap()), Err(Error::NotNoncrossing(_))));
    }

    proptest! {
        #[test]
        fn phi_round_trip_random_nc9(idx in 0usize..4862) {
            thread_local!(static NC9: Vec<Permutation> = enumerate_nc(9, false));
            let x = NC9.with(|v| v[idx].clone());
            prop_assert_eq!(phi_inverse(&phi(&x).unwrap()).unwrap(), x);
        }
    }
}
