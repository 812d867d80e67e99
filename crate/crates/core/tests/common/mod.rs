//! Brute-force oracles, deliberately naive.
#![allow(dead_code)]

/// Boolean adjacency matrix.
pub type Matrix = Vec<Vec<bool>>;

pub fn simple_matrix(n: usize, edges: &[(usize, usize)]) -> Matrix {
    let mut m = vec![vec![false; n]; n];
    for &(u, v) in edges {
        m[u][v] = true;
        m[v][u] = true;
    }
    m
}

pub fn arc_matrix(n: usize, arcs: &[(usize, usize)]) -> Matrix {
    let mut m = vec![vec![false; n]; n];
    for &(u, v) in arcs {
        m[u][v] = true;
    }
    m
}

/// Reflexive transitive closure (Warshall).
pub fn closure(m: &Matrix) -> Matrix {
    let n = m.len();
    let mut c = m.clone();
    for (v, row) in c.iter_mut().enumerate() {
        row[v] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if c[i][k] && c[k][j] {
                    c[i][j] = true;
                }
            }
        }
    }
    c
}

pub fn all_reach(m: &Matrix) -> bool {
    closure(m).iter().all(|row| row.iter().all(|&x| x))
}

pub fn components(m: &Matrix) -> usize {
    let c = closure(m);
    (0..m.len()).filter(|&v| (0..v).all(|u| !c[u][v])).count()
}

pub fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

pub fn ham_cycle(m: &Matrix) -> bool {
    let n = m.len();
    if n < 3 {
        return false;
    }
    let rest: Vec<usize> = (1..n).collect();
    permutations(&rest).iter().any(|p| {
        let mut tour = vec![0];
        tour.extend(p);
        (0..n).all(|i| m[tour[i]][tour[(i + 1) % n]])
    })
}

pub fn ham_path(m: &Matrix) -> bool {
    let all: Vec<usize> = (0..m.len()).collect();
    permutations(&all)
        .iter()
        .any(|p| p.windows(2).all(|w| m[w[0]][w[1]]))
}

fn delete_vertex(m: &Matrix, v: usize) -> Matrix {
    m.iter()
        .enumerate()
        .filter(|&(i, _)| i != v)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|&(j, _)| j != v)
                .map(|(_, &x)| x)
                .collect()
        })
        .collect()
}

/// Connected, and connected after deleting any single vertex (for n >= 3).
pub fn no_cutvertex(m: &Matrix) -> bool {
    let n = m.len();
    components(m) == 1 && (n <= 2 || (0..n).all(|v| components(&delete_vertex(m, v)) == 1))
}

pub fn two_edge_connected(m: &Matrix) -> bool {
    let n = m.len();
    if components(m) != 1 {
        return false;
    }
    for u in 0..n {
        for v in u + 1..n {
            if m[u][v] {
                let mut d = m.clone();
                d[u][v] = false;
                d[v][u] = false;
                if components(&d) != 1 {
                    return false;
                }
            }
        }
    }
    true
}
