//! Flat tables of all simplices (degenerate included) up to a dimension, with
//! face and degeneracy operators precomputed as index lookups.

use std::collections::HashMap;

use super::{degenerate, FiniteSimplicialSet, SimplexRef, SimplicialMap};

#[derive(Debug, Clone)]
pub(crate) struct SimplexTable {
    pub levels: Vec<Vec<SimplexRef>>,
    pub index: HashMap<SimplexRef, u32>,
    /// `faces[d][t][i]`: index of `d_i` of simplex `t` in `levels[d - 1]`.
    pub faces: Vec<Vec<Vec<u32>>>,
    /// `degen[d][t][j]`: index of `s_j` of simplex `t` in `levels[d + 1]` (for `d < top`).
    pub degen: Vec<Vec<Vec<u32>>>,
    /// `by_face0[d][f]`: simplices of dimension `d` whose 0-th face is `f`.
    pub by_face0: Vec<Vec<Vec<u32>>>,
}

impl SimplexTable {
    pub fn new(s: &FiniteSimplicialSet, top: usize) -> Self {
        let levels: Vec<Vec<SimplexRef>> = (0..=top).map(|d| s.enumerate_simplices(d)).collect();
        let mut index = HashMap::new();
        for level in &levels {
            for (t, r) in level.iter().enumerate() {
                index.insert(r.clone(), t as u32);
            }
        }
        let mut faces = vec![Vec::new()];
        let mut by_face0 = vec![Vec::new()];
        for d in 1..=top {
            let fs: Vec<Vec<u32>> = levels[d].iter().map(|r| (0..=d).map(|i| index[&s.face(r, i)]).collect()).collect();
            let mut b0 = vec![Vec::new(); levels[d - 1].len()];
            for (t, f) in fs.iter().enumerate() {
                b0[f[0] as usize].push(t as u32);
            }
            faces.push(fs);
            by_face0.push(b0);
        }
        let degen = (0..top).map(|d| levels[d].iter().map(|r| (0..=d).map(|j| index[&degenerate(r, j)]).collect()).collect()).collect();
        Self { levels, index, faces, degen, by_face0 }
    }

    pub fn top(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn lookup(&self, r: &SimplexRef) -> u32 {
        self.index[r]
    }

    /// Applies `s_w` (normal-form word, outermost first) to entry `t` of dimension `d`.
    pub fn apply_word(&self, d: usize, t: u32, word: &[usize]) -> u32 {
        let mut cur = t;
        let mut dim = d;
        for &j in word.iter().rev() {
            cur = self.degen[dim][cur as usize][j];
            dim += 1;
        }
        cur
    }

    /// Table of a map `f: X -> Y`, as `image[d][t]` = index in `y`'s level `d`.
    pub fn map_table(&self, f: &SimplicialMap, y: &SimplexTable) -> Vec<Vec<u32>> {
        self.levels.iter().map(|level| level.iter().map(|r| y.lookup(&f.apply(r))).collect()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::simplex;

    #[test]
    fn table_consistent_with_operators() {
        let s = simplex(2);
        let t = SimplexTable::new(&s, 3);
        for d in 1..=3 {
            for (idx, r) in t.levels[d].iter().enumerate() {
                for i in 0..=d {
                    assert_eq!(t.levels[d - 1][t.faces[d][idx][i] as usize], s.face(r, i));
                }
            }
        }
        assert_eq!(t.levels[1].len(), 3 + 3);
    }
}
