//! Planarity of small undirected graphs.
//!
//! The fast path splits the graph into biconnected blocks and runs the
//! Demoucron–Malgrange–Pertuiset path-addition test on each block. A second,
//! exponential test based on Wagner's minor characterization is kept for
//! cross-checking on small inputs.

use std::collections::{BTreeSet, HashSet};

/// A simple undirected graph on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    pub fn new(n: usize) -> Graph {
        Graph {
            adj: vec![BTreeSet::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Adds `{u, v}`; loops and repeated edges are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, ns) in self.adj.iter().enumerate() {
            out.extend(ns.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    /// Edge sets of the biconnected components (bridges form their own
    /// single-edge blocks).
    fn blocks(&self) -> Vec<Vec<(usize, usize)>> {
        let n = self.vertex_count();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut time = 0;
        let mut stack: Vec<(usize, usize)> = Vec::new();
        let mut blocks = Vec::new();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            // Iterative DFS: (vertex, parent, neighbor list, next index).
            let mut frames: Vec<(usize, usize, Vec<usize>, usize)> = vec![(
                root,
                usize::MAX,
                self.adj[root].iter().copied().collect(),
                0,
            )];
            while let Some(frame) = frames.last_mut() {
                let (u, parent) = (frame.0, frame.1);
                if frame.3 < frame.2.len() {
                    let v = frame.2[frame.3];
                    frame.3 += 1;
                    if disc[v] == usize::MAX {
                        stack.push((u, v));
                        disc[v] = time;
                        low[v] = time;
                        time += 1;
                        frames.push((v, u, self.adj[v].iter().copied().collect(), 0));
                    } else if v != parent && disc[v] < disc[u] {
                        stack.push((u, v));
                        low[u] = low[u].min(disc[v]);
                    }
                } else {
                    frames.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[u]);
                        if low[u] >= disc[parent] {
                            let mut block = Vec::new();
                            while let Some(e) = stack.pop() {
                                block.push(e);
                                if e == (parent, u) {
                                    break;
                                }
                            }
                            blocks.push(block);
                        }
                    }
                }
            }
        }
        blocks
    }
}

/// Planarity by path addition on each biconnected block.
pub fn is_planar(g: &Graph) -> bool {
    let n = g.vertex_count();
    let m = g.edge_count();
    if n <= 4 || m < 9 {
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }
    g.blocks().iter().all(|block| block_is_planar(block))
}

fn block_is_planar(block: &[(usize, usize)]) -> bool {
    if block.len() < 9 {
        return true;
    }
    let mut vertices: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
    vertices.sort_unstable();
    vertices.dedup();
    let local = |x: usize| vertices.binary_search(&x).expect("block vertex");
    let edges: Vec<(usize, usize)> = block.iter().map(|&(u, v)| (local(u), local(v))).collect();
    let g = Graph::from_edges(vertices.len(), &edges);
    if g.edge_count() > 3 * g.vertex_count() - 6 {
        return false;
    }
    PathAddition::new(&g).run()
}

/// State of the Demoucron–Malgrange–Pertuiset embedding of a 2-connected
/// graph. Faces of a 2-connected plane graph are simple cycles, stored as
/// vertex sequences.
struct PathAddition<'a> {
    g: &'a Graph,
    placed_vertex: Vec<bool>,
    placed_edge: HashSet<(usize, usize)>,
    faces: Vec<Vec<usize>>,
}

struct Fragment {
    attachments: Vec<usize>,
    /// Interior vertices; empty for a single chord edge.
    interior: Vec<usize>,
    chord: Option<(usize, usize)>,
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

impl<'a> PathAddition<'a> {
    fn new(g: &'a Graph) -> Self {
        PathAddition {
            g,
            placed_vertex: vec![false; g.vertex_count()],
            placed_edge: HashSet::new(),
            faces: Vec::new(),
        }
    }

    fn run(mut self) -> bool {
        let cycle = self.find_cycle();
        for i in 0..cycle.len() {
            self.placed_vertex[cycle[i]] = true;
            self.placed_edge
                .insert(key(cycle[i], cycle[(i + 1) % cycle.len()]));
        }
        self.faces = vec![cycle.clone(), cycle];
        let total = self.g.edge_count();
        while self.placed_edge.len() < total {
            let fragments = self.fragments();
            let mut choice: Option<(usize, usize)> = None;
            for (fi, frag) in fragments.iter().enumerate() {
                let admissible: Vec<usize> = (0..self.faces.len())
                    .filter(|&f| frag.attachments.iter().all(|a| self.faces[f].contains(a)))
                    .collect();
                match admissible.len() {
                    0 => return false,
                    1 => {
                        choice = Some((fi, admissible[0]));
                        break;
                    }
                    _ => {
                        if choice.is_none() {
                            choice = Some((fi, admissible[0]));
                        }
                    }
                }
            }
            let (fi, face) = choice.expect("unplaced edges leave at least one fragment");
            let path = self.fragment_path(&fragments[fi]);
            self.embed_path(face, &path);
        }
        true
    }

    fn find_cycle(&self) -> Vec<usize> {
        let n = self.g.vertex_count();
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![usize::MAX; n];
        let mut stack = vec![0usize];
        depth[0] = 0;
        while let Some(u) = stack.pop() {
            for &v in &self.g.adj[u] {
                if depth[v] == usize::MAX {
                    depth[v] = depth[u] + 1;
                    parent[v] = u;
                    stack.push(v);
                } else if v != parent[u] && parent[v] != u {
                    // Non-tree edge: walk both ends up to their common
                    // ancestor in the search tree.
                    let (mut a, mut b) = (u, v);
                    let mut left = vec![a];
                    let mut right = vec![b];
                    while a != b {
                        if depth[a] >= depth[b] {
                            a = parent[a];
                            left.push(a);
                        } else {
                            b = parent[b];
                            right.push(b);
                        }
                    }
                    right.pop();
                    right.reverse();
                    left.extend(right);
                    // u .. lca .. v, closed by the edge {v, u}.
                    return left;
                }
            }
        }
        unreachable!("2-connected graphs contain a cycle")
    }

    fn fragments(&self) -> Vec<Fragment> {
        let n = self.g.vertex_count();
        let mut out = Vec::new();
        for (u, v) in self.g.edges() {
            if self.placed_vertex[u] && self.placed_vertex[v] && !self.placed_edge.contains(&(u, v))
            {
                out.push(Fragment {
                    attachments: vec![u, v],
                    interior: Vec::new(),
                    chord: Some((u, v)),
                });
            }
        }
        let mut seen = vec![false; n];
        for start in 0..n {
            if self.placed_vertex[start] || seen[start] {
                continue;
            }
            let mut interior = Vec::new();
            let mut attachments = BTreeSet::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(u) = stack.pop() {
                interior.push(u);
                for &v in &self.g.adj[u] {
                    if self.placed_vertex[v] {
                        attachments.insert(v);
                    } else if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            interior.sort_unstable();
            out.push(Fragment {
                attachments: attachments.into_iter().collect(),
                interior,
                chord: None,
            });
        }
        out
    }

    /// A path through the fragment joining two distinct attachment vertices.
    fn fragment_path(&self, frag: &Fragment) -> Vec<usize> {
        if let Some((u, v)) = frag.chord {
            return vec![u, v];
        }
        let start = frag.attachments[0];
        let n = self.g.vertex_count();
        let mut prev = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        for &x in &self.g.adj[start] {
            if frag.interior.binary_search(&x).is_ok() && prev[x] == usize::MAX {
                prev[x] = start;
                queue.push_back(x);
            }
        }
        while let Some(u) = queue.pop_front() {
            for &v in &self.g.adj[u] {
                if v == start || prev[v] != usize::MAX {
                    continue;
                }
                if self.placed_vertex[v] {
                    let mut path = vec![v, u];
                    let mut cur = u;
                    while prev[cur] != start {
                        cur = prev[cur];
                        path.push(cur);
                    }
                    path.push(start);
                    path.reverse();
                    return path;
                }
                prev[v] = u;
                queue.push_back(v);
            }
        }
        unreachable!("fragments of a 2-connected graph have two attachments")
    }

    fn embed_path(&mut self, face: usize, path: &[usize]) {
        let f = self.faces.swap_remove(face);
        let (first, last) = (path[0], path[path.len() - 1]);
        let i = f
            .iter()
            .position(|&x| x == first)
            .expect("attachment on face");
        let j = f
            .iter()
            .position(|&x| x == last)
            .expect("attachment on face");
        let len = f.len();
        let walk = |from: usize, to: usize| -> Vec<usize> {
            let mut out = vec![f[from]];
            let mut k = from;
            while k != to {
                k = (k + 1) % len;
                out.push(f[k]);
            }
            out
        };
        let inner = &path[1..path.len() - 1];
        let mut one = walk(i, j);
        one.extend(inner.iter().rev());
        let mut two = walk(j, i);
        two.extend(inner.iter());
        self.faces.push(one);
        self.faces.push(two);
        for &x in inner {
            self.placed_vertex[x] = true;
        }
        for w in path.windows(2) {
            self.placed_edge.insert(key(w[0], w[1]));
        }
    }
}

/// Planarity by exhaustive search for a `K5` or `K3,3` minor.
///
/// Exponential; intended for cross-checking the fast test on graphs with
/// about a dozen vertices.
pub fn is_planar_by_minors(g: &Graph) -> bool {
    let mut seen = HashSet::new();
    !has_kuratowski_minor(reduce(g.edges()), &mut seen)
}

type EdgeSet = BTreeSet<(usize, usize)>;

/// Repeatedly drops vertices of degree at most one and suppresses degree-two
/// vertices; both preserve planarity in each direction. Vertices are then
/// renumbered densely in order.
fn reduce(edges: impl IntoIterator<Item = (usize, usize)>) -> EdgeSet {
    let mut set: EdgeSet = edges
        .into_iter()
        .filter(|(u, v)| u != v)
        .map(|(u, v)| key(u, v))
        .collect();
    loop {
        let mut degree: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for &(u, v) in &set {
            degree.entry(u).or_default().push(v);
            degree.entry(v).or_default().push(u);
        }
        let mut changed = false;
        for (&x, ns) in &degree {
            if ns.len() <= 1 {
                for &y in ns {
                    set.remove(&key(x, y));
                }
                changed = true;
                break;
            }
            if ns.len() == 2 {
                set.remove(&key(x, ns[0]));
                set.remove(&key(x, ns[1]));
                set.insert(key(ns[0], ns[1]));
                changed = true;
                break;
            }
        }
        if !changed {
            break;
        }
    }
    let mut vertices: Vec<usize> = set.iter().flat_map(|&(u, v)| [u, v]).collect();
    vertices.sort_unstable();
    vertices.dedup();
    let idx = |x: usize| vertices.binary_search(&x).expect("vertex present");
    set.iter().map(|&(u, v)| (idx(u), idx(v))).collect()
}

fn has_kuratowski_minor(edges: EdgeSet, seen: &mut HashSet<EdgeSet>) -> bool {
    let m = edges.len();
    if m < 9 {
        return false;
    }
    let n = edges.iter().map(|&(_, v)| v + 1).max().unwrap_or(0);
    if m > 3 * n - 6 {
        return true;
    }
    if is_k5(n, &edges) || is_k33(n, &edges) {
        return true;
    }
    if !seen.insert(edges.clone()) {
        return false;
    }
    for &(u, v) in &edges {
        let mut deleted = edges.clone();
        deleted.remove(&(u, v));
        if has_kuratowski_minor(reduce(deleted), seen) {
            return true;
        }
        let contracted = edges
            .iter()
            .filter(|&&e| e != (u, v))
            .map(|&(a, b)| {
                let a = if a == v { u } else { a };
                let b = if b == v { u } else { b };
                (a, b)
            })
            .filter(|(a, b)| a != b)
            .map(|(a, b)| key(a, b));
        if has_kuratowski_minor(reduce(contracted), seen) {
            return true;
        }
    }
    false
}

fn is_k5(n: usize, edges: &EdgeSet) -> bool {
    n == 5 && edges.len() == 10
}

fn is_k33(n: usize, edges: &EdgeSet) -> bool {
    if n != 6 || edges.len() != 9 {
        return false;
    }
    let mut side = [usize::MAX; 6];
    side[0] = 0;
    for _ in 0..6 {
        for &(u, v) in edges {
            if side[u] != usize::MAX && side[v] == usize::MAX {
                side[v] = 1 - side[u];
            } else if side[v] != usize::MAX && side[u] == usize::MAX {
                side[u] = 1 - side[v];
            }
        }
    }
    let degrees_ok = (0..6).all(|x| edges.iter().filter(|&&(u, v)| u == x || v == x).count() == 3);
    degrees_ok
        && side.iter().all(|&s| s != usize::MAX)
        && edges.iter().all(|&(u, v)| side[u] != side[v])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(n, &edges)
    }

    fn k33() -> Graph {
        let edges: Vec<_> = (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect();
        Graph::from_edges(6, &edges)
    }

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges)
    }

    fn cube_with_diagonal() -> Graph {
        let mut edges: Vec<(usize, usize)> = (0..8usize)
            .flat_map(|x| {
                (0..3)
                    .filter(move |b| x >> b & 1 == 0)
                    .map(move |b| (x, x | 1 << b))
            })
            .collect();
        edges.push((0, 7));
        Graph::from_edges(8, &edges)
    }

    fn grid(w: usize, h: usize) -> Graph {
        let mut edges = Vec::new();
        for y in 0..h {
            for x in 0..w {
                let v = y * w + x;
                if x + 1 < w {
                    edges.push((v, v + 1));
                }
                if y + 1 < h {
                    edges.push((v, v + w));
                }
            }
        }
        Graph::from_edges(w * h, &edges)
    }

    #[test]
    fn classic_graphs() {
        let cases: Vec<(Graph, bool)> = vec![
            (complete(4), true),
            (complete(5), false),
            (k33(), false),
            (petersen(), false),
            (cube_with_diagonal(), false),
            (grid(4, 3), true),
            (Graph::new(0), true),
        ];
        for (g, planar) in cases {
            assert_eq!(is_planar(&g), planar, "{g:?}");
            assert_eq!(is_planar_by_minors(&g), planar, "{g:?}");
        }
    }

    #[test]
    fn k5_minus_edge_is_planar() {
        let mut edges = complete(5).edges();
        edges.retain(|&e| e != (0, 1));
        let g = Graph::from_edges(5, &edges);
        assert!(is_planar(&g));
        assert!(is_planar_by_minors(&g));
    }

    #[test]
    fn subdivided_k33_with_pendant_blocks() {
        // K3,3 with one edge subdivided, glued at a cut vertex to a triangle.
        let mut edges: Vec<_> = (0..3)
            .flat_map(|u| (3..6).map(move |v| (u, v)))
            .filter(|&e| e != (0, 3))
            .collect();
        edges.extend([(0, 6), (6, 3), (1, 7), (7, 8), (8, 1)]);
        let g = Graph::from_edges(9, &edges);
        assert!(!is_planar(&g));
        assert!(!is_planar_by_minors(&g));
    }

    #[test]
    fn blocks_of_two_triangles() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]);
        assert_eq!(g.blocks().len(), 2);
    }
}
