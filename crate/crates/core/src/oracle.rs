//! Naive subset scanner used to cross-check the mask engine.
//!
//! Walks every k-subset of the active vertices in lexicographic order and
//! tests all of its pairs against a dense color table. Shares nothing with
//! [`crate::clique`] beyond reading edge colors.

use crate::clique::Clique;
use crate::coloring::{Color, Coloring, Vertex};
use crate::error::{Error, Result};

struct ColorTable {
    n: usize,
    cells: Vec<Option<Color>>,
}

impl ColorTable {
    fn new(c: &Coloring) -> Self {
        let n = c.order();
        let mut cells = vec![None; n * n];
        for a in 0..n {
            for b in 0..n {
                cells[a * n + b] = c.color(a, b);
            }
        }
        ColorTable { n, cells }
    }

    fn get(&self, a: Vertex, b: Vertex) -> Option<Color> {
        self.cells[a * self.n + b]
    }
}

/// Calls `visit` with every k-subset of `pool` (as indices into `pool`'s values).
fn for_each_subset(pool: &[Vertex], k: usize, mut visit: impl FnMut(&[Vertex])) {
    let m = pool.len();
    if k > m {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let mut chosen: Vec<Vertex> = idx.iter().map(|&i| pool[i]).collect();
    loop {
        visit(&chosen);
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + m - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
        for j in i..k {
            chosen[j] = pool[idx[j]];
        }
    }
}

fn scan(c: &Coloring, color: Color, k: usize, mut hit: impl FnMut(&[Vertex])) -> Result<()> {
    let pool: Vec<Vertex> = (0..c.order()).filter(|&v| c.is_active(v)).collect();
    if k < 2 || k > pool.len() {
        return Err(Error::CliqueSizeOutOfRange { k, active: pool.len() });
    }
    let table = ColorTable::new(c);
    for_each_subset(&pool, k, |subset| {
        let mono = (0..k).all(|i| (i + 1..k).all(|j| table.get(subset[i], subset[j]) == Some(color)));
        if mono {
            hit(subset);
        }
    });
    Ok(())
}

pub fn naive_count(c: &Coloring, color: Color, k: usize) -> Result<u64> {
    let mut count = 0u64;
    scan(c, color, k, |_| count += 1)?;
    Ok(count)
}

pub fn naive_enumerate(c: &Coloring, color: Color, k: usize) -> Result<Vec<Clique>> {
    let mut out = Vec::new();
    scan(c, color, k, |subset| out.push(Clique { vertices: subset.to_vec(), color }))?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_are_binomial_and_lexicographic() {
        let pool = [2, 5, 7, 9, 11, 13];
        let mut seen = Vec::new();
        for_each_subset(&pool, 3, |s| seen.push(s.to_vec()));
        assert_eq!(seen.len(), 20);
        assert!(seen.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(seen[0], vec![2, 5, 7]);
        assert_eq!(seen[19], vec![9, 11, 13]);

        let mut count = 0;
        for_each_subset(&pool, 6, |_| count += 1);
        assert_eq!(count, 1);
        for_each_subset(&pool, 7, |_| count += 1);
        assert_eq!(count, 1);
    }
}
