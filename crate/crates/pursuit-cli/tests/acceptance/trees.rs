//! Exhaustive enumeration of free trees on a fixed vertex count.
//!
//! Rooted shapes come from the canonical level-sequence successor walk
//! (start at the path, repeatedly flatten the rightmost deep branch);
//! free trees are the rooted shapes deduplicated by a canonical encoding
//! rooted at the centroid.

use std::collections::HashSet;

/// All free trees on `n` vertices, each as an edge list over `0..n`.
pub fn free_trees(n: usize) -> Vec<Vec<(u32, u32)>> {
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![Vec::new()];
    }
    let mut seen = HashSet::new();
    let mut trees = Vec::new();
    let mut levels: Vec<usize> = (1..=n).collect();
    loop {
        let edges = edges_from_levels(&levels);
        if seen.insert(canonical_code(n, &edges)) {
            trees.push(edges);
        }
        if !advance(&mut levels) {
            break;
        }
    }
    trees
}

/// Rebuild the edge list of a level sequence: each vertex hangs off the
/// nearest earlier vertex one level up.
fn edges_from_levels(levels: &[usize]) -> Vec<(u32, u32)> {
    let mut edges = Vec::with_capacity(levels.len() - 1);
    for i in 1..levels.len() {
        let parent = (0..i)
            .rev()
            .find(|&j| levels[j] + 1 == levels[i])
            .expect("level sequence is canonical");
        edges.push((parent as u32, i as u32));
    }
    edges
}

/// Step to the lexicographically next canonical rooted level sequence;
/// false once the star (every level 2) has been emitted.
fn advance(levels: &mut [usize]) -> bool {
    let Some(p) = (0..levels.len()).rev().find(|&i| levels[i] > 2) else {
        return false;
    };
    let q = (0..p)
        .rev()
        .find(|&i| levels[i] + 1 == levels[p])
        .expect("the root sits above every vertex");
    for i in p..levels.len() {
        levels[i] = levels[i - (p - q)];
    }
    true
}

fn adjacency(n: usize, edges: &[(u32, u32)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u as usize].push(v as usize);
        adj[v as usize].push(u as usize);
    }
    adj
}

/// The one or two vertices minimizing the largest component left by their
/// removal.
fn centroids(n: usize, adj: &[Vec<usize>]) -> Vec<usize> {
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut visited = vec![false; n];
    let mut stack = vec![0];
    visited[0] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in &adj[v] {
            if !visited[w] {
                visited[w] = true;
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    let mut size = vec![1usize; n];
    for &v in order.iter().rev() {
        if parent[v] != usize::MAX {
            size[parent[v]] += size[v];
        }
    }
    let mut best = n;
    let mut out = Vec::new();
    for v in 0..n {
        let mut worst = n - size[v];
        for &w in &adj[v] {
            if parent[w] == v {
                worst = worst.max(size[w]);
            }
        }
        match worst.cmp(&best) {
            std::cmp::Ordering::Less => {
                best = worst;
                out = vec![v];
            }
            std::cmp::Ordering::Equal => out.push(v),
            std::cmp::Ordering::Greater => {}
        }
    }
    out
}

fn encode(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut parts: Vec<String> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| encode(adj, w, v))
        .collect();
    parts.sort();
    format!("({})", parts.concat())
}

/// Shape-invariant encoding: the smallest centroid-rooted subtree string.
fn canonical_code(n: usize, edges: &[(u32, u32)]) -> String {
    let adj = adjacency(n, edges);
    centroids(n, &adj)
        .into_iter()
        .map(|c| encode(&adj, c, usize::MAX))
        .min()
        .expect("a tree has a centroid")
}
