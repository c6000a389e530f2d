use std::collections::HashMap;

use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::exactla::{binomial, LinearMap, Matrix};

use super::{leibniz_homology, ChainComplex, HomologyConfig, HomologyResult};

/// Strictly increasing index tuples of length `k` from `0..n`, in
/// lexicographic order; this is the basis of `Λ^k`.
pub fn exterior_basis(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::with_capacity(binomial(n, k));
    rec(n, k, 0, &mut Vec::new(), &mut out);
    out
}

fn index_map(basis: &[Vec<usize>]) -> HashMap<&[usize], usize> {
    basis
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_slice(), i))
        .collect()
}

/// Sign of the permutation sorting `t`, or `None` when `t` repeats an index.
fn sort_sign(t: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut v = t.to_vec();
    let mut odd = false;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some((v, odd))
    }
}

/// `d(x_1∧…∧x_k) = Σ_{i<j} (-1)^{i+j} [x_i,x_j]∧x_1∧…x̂_i…x̂_j…∧x_k`,
/// with `d_1 = 0` into the ground field.
pub fn ce_boundary(g: &LeibnizAlgebra, k: usize) -> LinearMap {
    assert!(k >= 1, "the boundary starts in degree 1");
    let field = g.field();
    let n = g.dim();
    let dom = exterior_basis(n, k);
    if k == 1 {
        return LinearMap::zero(field, n, 1);
    }
    let cod = exterior_basis(n, k - 1);
    let idx = index_map(&cod);
    let mut m = Matrix::zeros(field, cod.len(), dom.len());
    for (col, s) in dom.iter().enumerate() {
        for a in 0..k {
            for b in (a + 1)..k {
                let rest: Vec<usize> = (0..k).filter(|&p| p != a && p != b).map(|p| s[p]).collect();
                let outer_odd = (a + b) % 2 == 1;
                for (l, c) in g.basis_bracket(s[a], s[b]).iter().enumerate() {
                    if c.is_zero() || rest.contains(&l) {
                        continue;
                    }
                    let pos = rest.iter().filter(|&&r| r < l).count();
                    let mut t = rest.clone();
                    t.insert(pos, l);
                    let row = idx[t.as_slice()];
                    let neg = outer_odd ^ (pos % 2 == 1);
                    let term = if neg { -c } else { c.clone() };
                    let v = m.get(row, col) + &term;
                    m.set(row, col, v);
                }
            }
        }
    }
    LinearMap::new(m)
}

/// `H_n(g)` from the exterior-power complex of a Lie algebra.
pub fn chevalley_eilenberg_homology(
    g: &LeibnizAlgebra,
    n: usize,
    cfg: &HomologyConfig,
) -> Result<HomologyResult> {
    if !g.is_lie() {
        return Err(Error::NotLie);
    }
    cfg.admit(n, Some(binomial(g.dim(), n + 1)))?;
    let dims = (0..=n + 1).map(|k| binomial(g.dim(), k)).collect();
    let ds = (1..=n + 1).map(|k| ce_boundary(g, k)).collect();
    ChainComplex::new(g.field(), dims, ds)?.homology(n)
}

/// `x_1⊗…⊗x_k ↦ x_1∧…∧x_k`.
pub fn alternation_map(g: &LeibnizAlgebra, k: usize) -> LinearMap {
    let field = g.field();
    let n = g.dim();
    let cod = exterior_basis(n, k);
    let idx = index_map(&cod);
    let dom = n.pow(k as u32);
    let mut m = Matrix::zeros(field, cod.len(), dom);
    for col in 0..dom {
        let mut t = vec![0; k];
        let mut c = col;
        for slot in t.iter_mut().rev() {
            *slot = c % n;
            c /= n;
        }
        if let Some((sorted, odd)) = sort_sign(&t) {
            let v = if odd { -field.one() } else { field.one() };
            m.set(idx[sorted.as_slice()], col, v);
        }
    }
    LinearMap::new(m)
}

/// `t_g: HL_2(g) -> H_2(g)`.
#[derive(Clone, Debug)]
pub struct Comparison {
    pub hl2: HomologyResult,
    pub h2: HomologyResult,
    pub map: LinearMap,
}

impl Comparison {
    pub fn is_surjective(&self) -> bool {
        self.map.is_surjective()
    }
}

/// The map induced on homology by the chain-level projection `⊗² -> Λ²`.
/// The projection anticommutes with the two boundaries in every degree,
/// so it preserves cycles and boundaries; the induced-map check confirms it.
pub fn comparison_t(g: &LeibnizAlgebra, cfg: &HomologyConfig) -> Result<Comparison> {
    if !g.is_lie() {
        return Err(Error::NotLie);
    }
    let hl2 = leibniz_homology(g, 2, cfg)?;
    let h2 = chevalley_eilenberg_homology(g, 2, cfg)?;
    let p = alternation_map(g, 2);
    let map = hl2.space.induced(&p, &h2.space)?;
    Ok(Comparison { hl2, h2, map })
}
