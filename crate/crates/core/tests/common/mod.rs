//! Brute-force reference implementations shared by the integration tests.
#![allow(dead_code)]

use apexforest::graph::Graph;

/// Adjacency matrix built from the edge list only.
pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut m = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        m[u][v] = true;
        m[v][u] = true;
    }
    m
}

fn connected_subset(adj: &[Vec<bool>], set: &[usize]) -> bool {
    if set.is_empty() {
        return false;
    }
    let mut seen = vec![set[0]];
    let mut i = 0;
    while i < seen.len() {
        let u = seen[i];
        for &w in set {
            if adj[u][w] && !seen.contains(&w) {
                seen.push(w);
            }
        }
        i += 1;
    }
    seen.len() == set.len()
}

/// Tries every map from host vertices to pattern vertices or "unused".
pub fn minor_by_all_maps(host: &Graph, pattern: &Graph) -> bool {
    let (n, k) = (host.vertex_count(), pattern.vertex_count());
    if k == 0 {
        return true;
    }
    if k > n {
        return false;
    }
    let adj = matrix(host);
    let pedges: Vec<(usize, usize)> = pattern.edges().collect();
    let base = k + 1;
    let total = base.pow(n as u32);
    let mut f = vec![0usize; n];
    'maps: for code in 0..total {
        let mut c = code;
        for x in f.iter_mut() {
            *x = c % base;
            c /= base;
        }
        let mut sets: Vec<Vec<usize>> = vec![Vec::new(); k];
        for (v, &a) in f.iter().enumerate() {
            if a < k {
                sets[a].push(v);
            }
        }
        for s in &sets {
            if !connected_subset(&adj, s) {
                continue 'maps;
            }
        }
        for &(a, b) in &pedges {
            let touch = sets[a].iter().any(|&x| sets[b].iter().any(|&y| adj[x][y]));
            if !touch {
                continue 'maps;
            }
        }
        return true;
    }
    false
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

/// Isomorphism by trying every bijection.
pub fn isomorphic_by_permutations(g: &Graph, h: &Graph) -> bool {
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return false;
    }
    let (a, b) = (matrix(g), matrix(h));
    permutations(n)
        .iter()
        .any(|p| (0..n).all(|u| (0..n).all(|v| a[u][v] == b[p[u]][p[v]])))
}

/// Hamiltonian cycle by trying every vertex order starting at 0.
pub fn is_hamiltonian(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n < 3 {
        return false;
    }
    let a = matrix(g);
    permutations(n - 1).iter().any(|p| {
        let order: Vec<usize> = std::iter::once(0).chain(p.iter().map(|&x| x + 1)).collect();
        (0..n).all(|i| a[order[i]][order[(i + 1) % n]])
    })
}

/// Components counted from the edge list with union-find.
pub fn component_count(n: usize, edges: &[(usize, usize)], removed: &[bool]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for &(u, v) in edges {
        if !removed[u] && !removed[v] {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            parent[a] = b;
        }
    }
    (0..n)
        .filter(|&v| !removed[v] && find(&mut parent, v) == v)
        .count()
}

/// Smallest vertex set whose removal leaves at least two components; `n - 1`
/// if none exists.
pub fn connectivity_by_subsets(g: &Graph) -> usize {
    let n = g.vertex_count();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let none = vec![false; n];
    if n == 0 || component_count(n, &edges, &none) != 1 {
        return 0;
    }
    let mut best = n - 1;
    for mask in 0u32..1 << n {
        let k = mask.count_ones() as usize;
        if k >= best {
            continue;
        }
        let removed: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
        if component_count(n, &edges, &removed) >= 2 {
            best = k;
        }
    }
    best
}

/// Component-wise edge count check, written from scratch.
pub fn is_pseudoforest_by_components(g: &Graph) -> bool {
    let n = g.vertex_count();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut comp = vec![usize::MAX; n];
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        comp[s] = s;
        while let Some(u) = stack.pop() {
            for &(a, b) in &edges {
                let w = if a == u {
                    b
                } else if b == u {
                    a
                } else {
                    continue;
                };
                if comp[w] == usize::MAX {
                    comp[w] = s;
                    stack.push(w);
                }
            }
        }
    }
    (0..n).all(|c| {
        let verts = comp.iter().filter(|&&x| x == c).count();
        let es = edges.iter().filter(|&&(a, _)| comp[a] == c).count();
        es <= verts
    })
}
