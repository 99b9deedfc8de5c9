//! Integer homology of finite simplicial sets from normalized chains, Smith
//! normal form with unimodular witnesses, and a homological check that a map
//! could be a weak equivalence.
//!
//! The certificate compares path components and integer homology through the
//! algebraic mapping cone. Passing it is necessary for a weak equivalence, not
//! sufficient: homotopy groups above π₀ are not examined.

use std::fmt;

use crate::error::{Error, Result};
use crate::simplicial::{FiniteSimplicialSet, SimplexId, SimplicialMap};

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Self { rows: rows.len(), cols, data: rows.concat() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(<[i64]>::to_vec).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = a.checked_mul(other.get(k, j)).and_then(|p| p.checked_add(out.get(i, j))).ok_or(Error::Overflow)?;
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    /// row[dst] += q * row[src]
    fn add_row(&mut self, dst: usize, src: usize, q: i64) -> Result<()> {
        for c in 0..self.cols {
            let v = q.checked_mul(self.get(src, c)).and_then(|p| p.checked_add(self.get(dst, c))).ok_or(Error::Overflow)?;
            self.set(dst, c, v);
        }
        Ok(())
    }

    /// col[dst] += q * col[src]
    fn add_col(&mut self, dst: usize, src: usize, q: i64) -> Result<()> {
        for r in 0..self.rows {
            let v = q.checked_mul(self.get(r, src)).and_then(|p| p.checked_add(self.get(r, dst))).ok_or(Error::Overflow)?;
            self.set(r, dst, v);
        }
        Ok(())
    }

    fn negate_row(&mut self, r: usize) -> Result<()> {
        for c in 0..self.cols {
            let v = self.get(r, c).checked_neg().ok_or(Error::Overflow)?;
            self.set(r, c, v);
        }
        Ok(())
    }
}

/// `u · m · v = diagonal` with `u`, `v` unimodular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: Matrix,
    pub u: Matrix,
    pub v: Matrix,
    /// Nonzero diagonal entries, positive, each dividing the next.
    pub factors: Vec<i64>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }
}

pub fn smith_normal_form(m: &Matrix) -> Result<SmithForm> {
    let mut d = m.clone();
    let mut u = Matrix::identity(m.rows);
    let mut v = Matrix::identity(m.cols);
    let mut t = 0;
    while t < d.rows.min(d.cols) {
        // Smallest nonzero entry of the remaining block as pivot.
        let mut best: Option<(usize, usize)> = None;
        for r in t..d.rows {
            for c in t..d.cols {
                let x = d.get(r, c);
                if x != 0 && best.map_or(true, |(br, bc)| x.unsigned_abs() < d.get(br, bc).unsigned_abs()) {
                    best = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = best else { break };
        d.swap_rows(t, pr);
        u.swap_rows(t, pr);
        d.swap_cols(t, pc);
        v.swap_cols(t, pc);

        let mut clean = true;
        for r in t + 1..d.rows {
            let q = d.get(r, t) / d.get(t, t);
            if q != 0 {
                d.add_row(r, t, -q)?;
                u.add_row(r, t, -q)?;
            }
            clean &= d.get(r, t) == 0;
        }
        for c in t + 1..d.cols {
            let q = d.get(t, c) / d.get(t, t);
            if q != 0 {
                d.add_col(c, t, -q)?;
                v.add_col(c, t, -q)?;
            }
            clean &= d.get(t, c) == 0;
        }
        if !clean {
            // A remainder is now smaller than the pivot; pick again.
            continue;
        }
        let p = d.get(t, t);
        let offender = (t + 1..d.rows).find(|&r| (t + 1..d.cols).any(|c| d.get(r, c) % p != 0));
        if let Some(r) = offender {
            d.add_row(t, r, 1)?;
            u.add_row(t, r, 1)?;
            continue;
        }
        if p < 0 {
            d.negate_row(t)?;
            u.negate_row(t)?;
        }
        t += 1;
    }
    let factors = (0..d.rows.min(d.cols)).map(|i| d.get(i, i)).take_while(|&x| x != 0).collect();
    Ok(SmithForm { diagonal: d, u, v, factors })
}

/// Normalized chains: degenerate faces contribute zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplex {
    /// Rank of the chain group in each dimension.
    pub ranks: Vec<usize>,
    /// `boundaries[d]`: `C_d -> C_{d-1}` as a `ranks[d-1] × ranks[d]` matrix; entry 0 is `0 × ranks[0]`.
    pub boundaries: Vec<Matrix>,
}

impl ChainComplex {
    pub fn rank(&self, d: usize) -> usize {
        self.ranks.get(d).copied().unwrap_or(0)
    }

    /// `∂_d`, empty-shaped outside the stored range.
    pub fn boundary(&self, d: usize) -> Matrix {
        match self.boundaries.get(d) {
            Some(m) => m.clone(),
            None => Matrix::zeros(self.rank(d.wrapping_sub(1)), self.rank(d)),
        }
    }

    /// Checks `∂_{d-1} ∘ ∂_d = 0` everywhere.
    pub fn is_complex(&self) -> Result<bool> {
        for d in 2..self.boundaries.len() {
            if !self.boundaries[d - 1].mul(&self.boundaries[d])?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn homology(&self, d: usize) -> Result<HomologyGroup> {
        let out = smith_normal_form(&self.boundary(d))?;
        let inc = smith_normal_form(&self.boundary(d + 1))?;
        let betti = self.rank(d) - out.rank() - inc.rank();
        let torsion = inc.factors.iter().copied().filter(|&x| x > 1).collect();
        Ok(HomologyGroup { betti, torsion })
    }
}

pub fn chain_complex(s: &FiniteSimplicialSet) -> ChainComplex {
    let ranks: Vec<usize> = s.levels().iter().map(Vec::len).collect();
    let mut boundaries = vec![Matrix::zeros(0, ranks.first().copied().unwrap_or(0))];
    for d in 1..ranks.len() {
        let mut m = Matrix::zeros(ranks[d - 1], ranks[d]);
        for c in 0..ranks[d] {
            for (i, f) in s.simplex(SimplexId::new(d, c)).faces.iter().enumerate() {
                if !f.is_degenerate() {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    m.set(f.base.index, c, m.get(f.base.index, c) + sign);
                }
            }
        }
        boundaries.push(m);
    }
    ChainComplex { ranks, boundaries }
}

/// `Z^betti ⊕ Z/t₁ ⊕ ...`
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HomologyGroup {
    pub betti: usize,
    pub torsion: Vec<i64>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

pub fn homology(s: &FiniteSimplicialSet, d: usize) -> Result<HomologyGroup> {
    chain_complex(s).homology(d)
}

/// Path components, as a component label per vertex.
pub fn components(s: &FiniteSimplicialSet) -> Vec<usize> {
    let n = s.count(0);
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    for e in 0..s.count(1) {
        let faces = &s.simplex(SimplexId::new(1, e)).faces;
        let (a, b) = (find(&mut parent, faces[0].base.index), find(&mut parent, faces[1].base.index));
        parent[a.max(b)] = a.min(b);
    }
    let roots: Vec<usize> = (0..n).map(|v| find(&mut parent, v)).collect();
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    roots
        .iter()
        .map(|&r| {
            if label[r] == usize::MAX {
                label[r] = next;
                next += 1;
            }
            label[r]
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailLevel {
    Pi0,
    /// Lowest degree in which the mapping cone has nonzero homology.
    H(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certificate {
    Pass,
    Fail(FailLevel),
}

impl Certificate {
    pub fn passed(self) -> bool {
        self == Certificate::Pass
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::Pass => write!(f, "we-cert: pass"),
            Certificate::Fail(FailLevel::Pi0) => write!(f, "we-cert: fail level=pi0"),
            Certificate::Fail(FailLevel::H(d)) => write!(f, "we-cert: fail level=H{d}"),
        }
    }
}

/// Chain map `C_d(X) -> C_d(Y)`: a simplex goes to its image, or to zero if that is degenerate.
fn chain_map(f: &SimplicialMap, d: usize) -> Matrix {
    let rx = f.source().count(d);
    let ry = f.target().count(d);
    let mut m = Matrix::zeros(ry, rx);
    for c in 0..rx {
        let img = f.image(SimplexId::new(d, c));
        if !img.is_degenerate() {
            m.set(img.base.index, c, 1);
        }
    }
    m
}

/// Differential of the mapping cone, `Cone_n = X_{n-1} ⊕ Y_n`,
/// `d(x, y) = (-∂x, f(x) + ∂y)`.
fn cone_differential(f: &SimplicialMap, cx: &ChainComplex, cy: &ChainComplex, n: usize) -> Matrix {
    let (xs, ys) = (cx.rank(n.wrapping_sub(1)), cy.rank(n));
    let (xt, yt) = if n == 0 { (0, 0) } else { (cx.rank(n.wrapping_sub(2)), cy.rank(n - 1)) };
    let mut m = Matrix::zeros(xt + yt, xs + ys);
    if n == 0 {
        return m;
    }
    if n >= 2 {
        let bx = cx.boundary(n - 1);
        for r in 0..xt {
            for c in 0..xs {
                m.set(r, c, -bx.get(r, c));
            }
        }
    }
    let fm = chain_map(f, n - 1);
    for r in 0..yt {
        for c in 0..xs {
            m.set(xt + r, c, fm.get(r, c));
        }
    }
    let by = cy.boundary(n);
    for r in 0..yt {
        for c in 0..ys {
            m.set(xt + r, xs + c, by.get(r, c));
        }
    }
    m
}

/// Homology of the mapping cone of `f` in degree `n`.
pub fn cone_homology(f: &SimplicialMap, n: usize) -> Result<HomologyGroup> {
    let cx = chain_complex(f.source());
    let cy = chain_complex(f.target());
    cone_homology_with(f, &cx, &cy, n)
}

fn cone_homology_with(f: &SimplicialMap, cx: &ChainComplex, cy: &ChainComplex, n: usize) -> Result<HomologyGroup> {
    let out = smith_normal_form(&cone_differential(f, cx, cy, n))?;
    let inc = smith_normal_form(&cone_differential(f, cx, cy, n + 1))?;
    let rank = cx.rank(n.wrapping_sub(1)) + cy.rank(n);
    Ok(HomologyGroup { betti: rank - out.rank() - inc.rank(), torsion: inc.factors.iter().copied().filter(|&x| x > 1).collect() })
}

/// Necessary condition for `f` to be a weak equivalence: a bijection on path
/// components and isomorphisms on `H_d` for `d ≤ maxdim` (the mapping cone is
/// acyclic through degree `maxdim + 1`).
pub fn weak_equivalence_certificate(f: &SimplicialMap, maxdim: usize) -> Result<Certificate> {
    let (cx, cy) = (components(f.source()), components(f.target()));
    let nx = cx.iter().max().map_or(0, |m| m + 1);
    let ny = cy.iter().max().map_or(0, |m| m + 1);
    let mut sent = vec![usize::MAX; nx];
    let mut hit = vec![false; ny];
    for (v, &c) in cx.iter().enumerate() {
        sent[c] = cy[f.image(SimplexId::new(0, v)).base.index];
    }
    let mut injective = true;
    for &t in &sent {
        injective &= !hit[t];
        hit[t] = true;
    }
    if !injective || hit.iter().any(|h| !h) {
        return Ok(Certificate::Fail(FailLevel::Pi0));
    }
    let chx = chain_complex(f.source());
    let chy = chain_complex(f.target());
    for n in 1..=maxdim + 1 {
        if !cone_homology_with(f, &chx, &chy, n)?.is_zero() {
            return Ok(Certificate::Fail(FailLevel::H(n)));
        }
    }
    Ok(Certificate::Pass)
}
