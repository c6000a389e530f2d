use crate::algebra::{AlgebraMorphism, LeibnizAlgebra};
use crate::error::{Error, Result};
use crate::exactla::{
    image, induced_map, kron, quotient, FieldSpec, LinearMap, Matrix, QuotientSpace, Scalar,
    Subquotient, Subspace, Vector,
};

use super::{checked_pow, ChainComplex, HomologyConfig, HomologyResult};

fn digits(mut k: usize, d: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for slot in out.iter_mut().rev() {
        *slot = k % d;
        k /= d;
    }
    out
}

fn index_of(t: impl IntoIterator<Item = usize>, d: usize) -> usize {
    t.into_iter().fold(0, |acc, i| acc * d + i)
}

/// `d_n: g^{⊗n} -> g^{⊗(n-1)}`,
/// `d(x_1⊗…⊗x_n) = Σ_{i<j} (-1)^j x_1⊗…⊗[x_i,x_j]⊗…⊗x̂_j⊗…⊗x_n`,
/// with `d_1 = 0` into the ground field.
pub fn loday_boundary(g: &LeibnizAlgebra, n: usize) -> LinearMap {
    assert!(n >= 1, "the Loday boundary starts in degree 1");
    let field = g.field();
    let d = g.dim();
    let dom = d.pow(n as u32);
    if n == 1 {
        return LinearMap::zero(field, dom, 1);
    }
    let cod = d.pow(n as u32 - 1);
    let mut m = Matrix::zeros(field, cod, dom);
    let one = field.one();
    for col in 0..dom {
        let t = digits(col, d, n);
        for i in 0..n {
            for j in (i + 1)..n {
                // 1-based position of x_j is j + 1
                let sign = if (j + 1) % 2 == 0 { one.clone() } else { -&one };
                for (l, c) in g.basis_bracket(t[i], t[j]).iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let row = index_of(
                        (0..n)
                            .filter(|&p| p != j)
                            .map(|p| if p == i { l } else { t[p] }),
                        d,
                    );
                    let v = m.get(row, col) + &(&sign * c);
                    m.set(row, col, v);
                }
            }
        }
    }
    LinearMap::new(m)
}

fn loday_complex(g: &LeibnizAlgebra, top: usize) -> Result<ChainComplex> {
    let dims = (0..=top).map(|k| g.dim().pow(k as u32)).collect();
    let ds = (1..=top).map(|k| loday_boundary(g, k)).collect();
    ChainComplex::new(g.field(), dims, ds)
}

/// `HL_n(g) = ker d_n / im d_{n+1}`, with `HL_0 = K`.
pub fn leibniz_homology(
    g: &LeibnizAlgebra,
    n: usize,
    cfg: &HomologyConfig,
) -> Result<HomologyResult> {
    cfg.admit(n, checked_pow(g.dim(), n + 1))?;
    loday_complex(g, n + 1)?.homology(n)
}

/// `HL_0, ..., HL_top` from one complex.
pub fn leibniz_homology_upto(
    g: &LeibnizAlgebra,
    top: usize,
    cfg: &HomologyConfig,
) -> Result<Vec<HomologyResult>> {
    cfg.admit(top, checked_pow(g.dim(), top + 1))?;
    let cx = loday_complex(g, top + 1)?;
    (0..=top).map(|k| cx.homology(k)).collect()
}

/// `f^{⊗n}` on lexicographic tensor bases.
pub fn tensor_power_map(f: &LinearMap, n: usize) -> LinearMap {
    let mut m = Matrix::identity(f.field(), 1);
    for _ in 0..n {
        m = m.kron(f.matrix());
    }
    LinearMap::new(m)
}

/// The map `HL_n(dom) -> HL_n(cod)` induced by `f^{⊗n}` on cycles.
pub fn induced_homology_map(
    f: &AlgebraMorphism,
    source: &HomologyResult,
    target: &HomologyResult,
) -> Result<LinearMap> {
    if source.degree != target.degree {
        return Err(Error::Input("homology degrees differ".into()));
    }
    let fn_ = tensor_power_map(f.map(), source.degree);
    Ok(source.space.induced(&fn_, &target.space)?)
}

/// `g•g = g⊗g / im d_3` with `d': g•g -> g`, `x•y ↦ [x,y]`.
#[derive(Clone, Debug)]
pub struct BulletSquare {
    pub quotient: QuotientSpace,
    pub d_prime: LinearMap,
    field: FieldSpec,
}

impl BulletSquare {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    /// `[x•y, x'•y'] = [x,y]•[x',y']`
    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let a = self.d_prime.apply(u);
        let b = self.d_prime.apply(v);
        self.quotient.project(&kron(&a, &b))
    }

    /// `HL_2(g) = ker d'` as a subspace of `g•g` coordinates.
    pub fn hl2(&self) -> Subspace {
        crate::exactla::kernel(&self.d_prime)
    }

    /// `HL_2` as a subquotient of `g⊗g`.
    pub fn hl2_subquotient(&self) -> Subquotient {
        let ambient = self.quotient.ambient_dim();
        let hl2 = self.hl2();
        let lifted = hl2.basis().iter().map(|v| self.quotient.lift(v));
        let cycles = Subspace::span(self.field, ambient, lifted).sum(self.quotient.relations());
        Subquotient::new(cycles, self.quotient.relations().clone()).expect("boundaries are cycles")
    }
}

pub fn bullet_square(g: &LeibnizAlgebra) -> Result<BulletSquare> {
    let field = g.field();
    let n = g.dim();
    let boundaries = image(&loday_boundary(g, 3));
    let q = quotient(n * n, boundaries)?;
    let d_prime = induced_map(&loday_boundary(g, 2), &q, &QuotientSpace::whole(field, n))?;
    Ok(BulletSquare {
        quotient: q,
        d_prime,
        field,
    })
}
