//! Canonical labelling of small graphs by individualization and refinement.
//!
//! The search tree is label-invariant, so the largest adjacency code over
//! its leaves is a complete isomorphism invariant. No automorphism pruning
//! is done; highly symmetric graphs cost up to `n!` leaves, which is fine
//! at the sizes the enumerator works with.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest graph accepted: the upper triangle must fit in 128 bits and
/// neighbor counts in a nibble.
pub const MAX_CANON_VERTICES: usize = 16;

/// Upper-triangle adjacency bits of the canonical relabelling, in graph6 order.
pub fn canonical_code(g: &Graph) -> Result<u128> {
    let n = g.n();
    if n > MAX_CANON_VERTICES {
        return Err(Error::TooLarge(format!(
            "canonical form limited to {MAX_CANON_VERTICES} vertices"
        )));
    }
    let mut best = None;
    let cells = vec![(0..n).collect::<Vec<_>>()];
    search(g, cells, &mut best);
    Ok(best.expect("at least one leaf"))
}

/// The canonical representative of the isomorphism class of `g`.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let code = canonical_code(g)?;
    Ok(graph_from_code(g.n(), code))
}

pub fn graph_from_code(n: usize, code: u128) -> Graph {
    let pairs = n * (n.saturating_sub(1)) / 2;
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (pairs - 1 - idx) & 1 == 1 {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Graph::from_edge_list(n, edges).expect("code describes a simple graph")
}

fn code_of(g: &Graph, order: &[usize]) -> u128 {
    let n = order.len();
    let mut code = 0u128;
    for j in 1..n {
        let vj = order[j];
        let row = g.neighbors(vj);
        for &vi in &order[..j] {
            code = code << 1 | (row >> vi & 1) as u128;
        }
    }
    code
}

/// Splits cells by neighbor counts into every cell until stable.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    loop {
        let masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(g.n());
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(u64, usize)> = cell
                .iter()
                .map(|&v| {
                    let row = g.neighbors(v);
                    let key = masks
                        .iter()
                        .fold(0u64, |k, &m| k << 4 | (row & m).count_ones() as u64);
                    (key, v)
                })
                .collect();
            keyed.sort_unstable();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        let stable = next.len() == cells.len();
        *cells = next;
        if stable {
            return;
        }
    }
}

fn search(g: &Graph, mut cells: Vec<Vec<usize>>, best: &mut Option<u128>) {
    refine(g, &mut cells);
    let target = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i);
    let Some(i) = target else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = code_of(g, &order);
        if best.is_none_or(|b| code > b) {
            *best = Some(code);
        }
        return;
    };
    for &v in &cells[i] {
        let mut child = Vec::with_capacity(cells.len() + 1);
        child.extend_from_slice(&cells[..i]);
        child.push(vec![v]);
        child.push(cells[i].iter().copied().filter(|&u| u != v).collect());
        child.extend_from_slice(&cells[i + 1..]);
        search(g, child, best);
    }
}

/// Whether `g` and `h` are isomorphic.
pub fn isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    Ok(canonical_code(g)? == canonical_code(h)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn invariant_under_relabelling() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..=9);
            let p = rng.gen_range(0.1..0.9);
            let edges: Vec<_> = (0..n)
                .flat_map(|j| (0..j).map(move |i| (i, j)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            let g = Graph::from_edge_list(n, edges).unwrap();
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let h = g.permuted(&perm);
            assert_eq!(canonical_code(&g).unwrap(), canonical_code(&h).unwrap());
            let c = canonical_form(&g).unwrap();
            assert_eq!(c.edge_count(), g.edge_count());
            assert_eq!(canonical_form(&c).unwrap(), c);
        }
    }

    #[test]
    fn distinguishes_classes() {
        let p4 = Graph::path(4).unwrap();
        let s4 = Graph::star(4).unwrap();
        assert!(!isomorphic(&p4, &s4).unwrap());
        // two 3-regular graphs on 6 vertices: prism vs K_{3,3}
        let prism = Graph::from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap();
        let k33 = Graph::from_edge_list(6, (0..3).flat_map(|i| (3..6).map(move |j| (i, j)))).unwrap();
        assert!(!isomorphic(&prism, &k33).unwrap());
        assert_eq!(canonical_code(&Graph::complete(5).unwrap()).unwrap(), (1 << 10) - 1);
    }

    #[test]
    fn code_roundtrip() {
        let g = Graph::path(5).unwrap();
        let code = canonical_code(&g).unwrap();
        let h = graph_from_code(5, code);
        assert!(isomorphic(&g, &h).unwrap());
    }
}
