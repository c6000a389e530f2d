use crate::algebra::{inclusion_crossed_module, CrossedModule, Ideal, LeibnizAlgebra};
use crate::error::{Error, Result};
use crate::exactla::{
    induced_map, kernel, kron, quotient, FieldSpec, LinearMap, Matrix, QuotientSpace, Scalar,
    SpanBuilder, Subspace, Vector,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductKind {
    Tensor,
    Exterior,
}

/// `m ⋆ n` or `m ∧ n` for crossed modules `η: m -> g`, `μ: n -> g`.
///
/// The ambient space is `(m ⊗ n) ⊕ (n ⊗ m)`: symbol `m_i * n_j` sits at
/// `i * dn + j` and `n_j * m_i` at `dm * dn + j * dm + i`.
#[derive(Clone, Debug)]
pub struct NonAbelianProduct {
    pub kind: ProductKind,
    pub cm_m: CrossedModule,
    pub cm_n: CrossedModule,
    /// Defining relations of the tensor product.
    pub tensor_relations: Subspace,
    /// `m □ n` in the ambient (exterior kind only).
    pub square: Option<Subspace>,
    pub quotient: QuotientSpace,
    pub tau_m: LinearMap,
    pub tau_n: LinearMap,
    /// `π: m ⋆ n -> m ∧ n` on quotient coordinates (exterior kind only).
    pub pi: Option<LinearMap>,
    labels: Vec<String>,
    tau_m_ambient: LinearMap,
    tau_n_ambient: LinearMap,
}

/// Basis-level action tables of `m` and `n` on each other, induced through
/// `η` and `μ`.
struct MutualActions {
    /// `m_i ^ n_j`
    m_right: Vec<Vec<Vector>>,
    /// `^{n_j} m_i`, indexed `[j][i]`
    m_left: Vec<Vec<Vector>>,
    /// `^{m_i} n_j`
    n_left: Vec<Vec<Vector>>,
    /// `n_j ^ m_i`, indexed `[j][i]`
    n_right: Vec<Vec<Vector>>,
}

impl MutualActions {
    fn new(cm: &CrossedModule, cn: &CrossedModule) -> Self {
        let (m, n) = (cm.source(), cn.source());
        let eta = |i: usize| cm.eta().apply(&m.unit(i));
        let mu = |j: usize| cn.eta().apply(&n.unit(j));
        let m_right = (0..m.dim())
            .map(|i| {
                (0..n.dim())
                    .map(|j| cm.act_right(&m.unit(i), &mu(j)))
                    .collect()
            })
            .collect();
        let m_left = (0..n.dim())
            .map(|j| {
                (0..m.dim())
                    .map(|i| cm.act_left(&mu(j), &m.unit(i)))
                    .collect()
            })
            .collect();
        let n_left = (0..m.dim())
            .map(|i| {
                (0..n.dim())
                    .map(|j| cn.act_left(&eta(i), &n.unit(j)))
                    .collect()
            })
            .collect();
        let n_right = (0..n.dim())
            .map(|j| {
                (0..m.dim())
                    .map(|i| cn.act_right(&n.unit(j), &eta(i)))
                    .collect()
            })
            .collect();
        MutualActions {
            m_right,
            m_left,
            n_left,
            n_right,
        }
    }
}

struct Symbols {
    field: FieldSpec,
    dm: usize,
    dn: usize,
}

impl Symbols {
    fn ambient(&self) -> usize {
        2 * self.dm * self.dn
    }

    /// `m * n` for vectors `m`, `n`.
    fn mn(&self, m: &[Scalar], n: &[Scalar]) -> Vector {
        let mut v = kron(m, n);
        v.resize(self.ambient(), self.field.zero());
        v
    }

    /// `n * m` for vectors `n`, `m`.
    fn nm(&self, n: &[Scalar], m: &[Scalar]) -> Vector {
        let mut v = vec![self.field.zero(); self.dm * self.dn];
        v.extend(kron(n, m));
        v
    }
}

fn combine(terms: &[(i64, Vector)], field: FieldSpec, len: usize) -> Vector {
    let mut out = vec![field.zero(); len];
    for (k, v) in terms {
        crate::exactla::axpy(&mut out, &field.from_i64(*k), v);
    }
    out
}

fn check_pair(cm: &CrossedModule, cn: &CrossedModule) -> Result<()> {
    if cm.base() != cn.base() {
        return Err(Error::BaseMismatch);
    }
    Ok(())
}

fn symbol_labels(m: &LeibnizAlgebra, n: &LeibnizAlgebra) -> Vec<String> {
    let clash = n.labels().iter().any(|l| m.labels().contains(l));
    let nl: Vec<String> = n
        .labels()
        .iter()
        .map(|l| if clash { format!("{l}'") } else { l.clone() })
        .collect();
    let mut out = Vec::with_capacity(2 * m.dim() * n.dim());
    for a in m.labels() {
        for b in &nl {
            out.push(format!("{a}*{b}"));
        }
    }
    for b in &nl {
        for a in m.labels() {
            out.push(format!("{b}*{a}"));
        }
    }
    out
}

/// Linear relations of `m ⋆ n`: all basis instances of the three-term,
/// two-term and four-term compatibility families. Bilinearity is built into the ambient.
fn tensor_relations(cm: &CrossedModule, cn: &CrossedModule, acts: &MutualActions) -> Subspace {
    let (m, n) = (cm.source(), cn.source());
    let (dm, dn) = (m.dim(), n.dim());
    let field = m.field();
    let s = Symbols { field, dm, dn };
    let len = s.ambient();
    let mut span = SpanBuilder::new(field, len);
    let em = |i: usize| m.unit(i);
    let en = |j: usize| n.unit(j);
    let push = |terms: &[(i64, Vector)], span: &mut SpanBuilder| {
        span.push(combine(terms, field, len));
    };
    // m*[n,n'] - m^n*n' + m^{n'}*n
    for i in 0..dm {
        for j in 0..dn {
            for k in 0..dn {
                push(
                    &[
                        (1, s.mn(&em(i), n.basis_bracket(j, k))),
                        (-1, s.mn(&acts.m_right[i][j], &en(k))),
                        (1, s.mn(&acts.m_right[i][k], &en(j))),
                    ],
                    &mut span,
                );
                // [n,n']*m - ^n m*n' + n*m^{n'}  (n = n_j, n' = n_k, m = m_i)
                push(
                    &[
                        (1, s.nm(n.basis_bracket(j, k), &em(i))),
                        (-1, s.mn(&acts.m_left[j][i], &en(k))),
                        (1, s.nm(&en(j), &acts.m_right[i][k])),
                    ],
                    &mut span,
                );
                // n*^{n'}m + n*m^{n'}  (n = n_j, n' = n_k, m = m_i)
                push(
                    &[
                        (1, s.nm(&en(j), &acts.m_left[k][i])),
                        (1, s.nm(&en(j), &acts.m_right[i][k])),
                    ],
                    &mut span,
                );
            }
        }
    }
    for j in 0..dn {
        for i in 0..dm {
            for k in 0..dm {
                // n*[m,m'] - n^m*m' + n^{m'}*m
                push(
                    &[
                        (1, s.nm(&en(j), m.basis_bracket(i, k))),
                        (-1, s.nm(&acts.n_right[j][i], &em(k))),
                        (1, s.nm(&acts.n_right[j][k], &em(i))),
                    ],
                    &mut span,
                );
                // [m,m']*n - ^m n*m' + m*n^{m'}
                push(
                    &[
                        (1, s.mn(m.basis_bracket(i, k), &en(j))),
                        (-1, s.nm(&acts.n_left[i][j], &em(k))),
                        (1, s.mn(&em(i), &acts.n_right[j][k])),
                    ],
                    &mut span,
                );
                // m*^{m'}n + m*n^{m'}  (m = m_i, m' = m_k, n = n_j)
                push(
                    &[
                        (1, s.mn(&em(i), &acts.n_left[k][j])),
                        (1, s.mn(&em(i), &acts.n_right[j][k])),
                    ],
                    &mut span,
                );
            }
        }
    }
    // compatibility relations: outer terms equal
    for i in 0..dm {
        for j in 0..dn {
            for k in 0..dm {
                for l in 0..dn {
                    // m^n * ^{m'}n' = ^m n * m'^{n'}
                    push(
                        &[
                            (1, s.mn(&acts.m_right[i][j], &acts.n_left[k][l])),
                            (-1, s.nm(&acts.n_left[i][j], &acts.m_right[k][l])),
                        ],
                        &mut span,
                    );
                    // ^n m * n'^{m'} = n^m * ^{n'}m'   (n*m with n = n_j, m = m_i)
                    push(
                        &[
                            (1, s.mn(&acts.m_left[j][i], &acts.n_right[l][k])),
                            (-1, s.nm(&acts.n_right[j][i], &acts.m_left[l][k])),
                        ],
                        &mut span,
                    );
                    // m^n * n'^{m'} = ^m n * ^{n'}m'
                    push(
                        &[
                            (1, s.mn(&acts.m_right[i][j], &acts.n_right[l][k])),
                            (-1, s.nm(&acts.n_left[i][j], &acts.m_left[l][k])),
                        ],
                        &mut span,
                    );
                    // ^n m * ^{m'}n' = n^m * m'^{n'}
                    push(
                        &[
                            (1, s.mn(&acts.m_left[j][i], &acts.n_left[k][l])),
                            (-1, s.nm(&acts.n_right[j][i], &acts.m_right[k][l])),
                        ],
                        &mut span,
                    );
                }
            }
        }
    }
    span.finish()
}

fn tau_ambient(
    cm: &CrossedModule,
    cn: &CrossedModule,
    acts: &MutualActions,
) -> (LinearMap, LinearMap) {
    let (dm, dn) = (cm.source().dim(), cn.source().dim());
    let field = cm.base().field();
    let mut tm_cols = Vec::with_capacity(2 * dm * dn);
    let mut tn_cols = Vec::with_capacity(2 * dm * dn);
    for i in 0..dm {
        for j in 0..dn {
            tm_cols.push(acts.m_right[i][j].clone());
            tn_cols.push(acts.n_left[i][j].clone());
        }
    }
    for j in 0..dn {
        for i in 0..dm {
            tm_cols.push(acts.m_left[j][i].clone());
            tn_cols.push(acts.n_right[j][i].clone());
        }
    }
    (
        LinearMap::new(Matrix::from_columns(field, dm, tm_cols)),
        LinearMap::new(Matrix::from_columns(field, dn, tn_cols)),
    )
}

impl NonAbelianProduct {
    pub fn field(&self) -> FieldSpec {
        self.cm_m.base().field()
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.quotient.ambient_dim()
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.cm_m.source().dim(), self.cm_n.source().dim())
    }

    pub fn symbol_labels(&self) -> &[String] {
        &self.labels
    }

    /// Ambient vector of `m * n`.
    pub fn symbol_mn(&self, m: &[Scalar], n: &[Scalar]) -> Vector {
        let (dm, dn) = self.dims();
        Symbols {
            field: self.field(),
            dm,
            dn,
        }
        .mn(m, n)
    }

    /// Ambient vector of `n * m`.
    pub fn symbol_nm(&self, n: &[Scalar], m: &[Scalar]) -> Vector {
        let (dm, dn) = self.dims();
        Symbols {
            field: self.field(),
            dm,
            dn,
        }
        .nm(n, m)
    }

    pub fn class_of(&self, ambient: &[Scalar]) -> Vector {
        self.quotient.project(ambient)
    }

    /// All defining relations of this quotient (`R`, plus `□` for exterior).
    pub fn relations(&self) -> &Subspace {
        self.quotient.relations()
    }

    /// `τ_m` and `τ_n` on the ambient.
    pub fn tau_ambient(&self) -> (&LinearMap, &LinearMap) {
        (&self.tau_m_ambient, &self.tau_n_ambient)
    }

    /// `[X, Y] = τ_m(X) * τ_n(Y)` on ambient vectors; this is the middle
    /// term of each of the four-term compatibility relations.
    pub fn bracket_ambient(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.symbol_mn(&self.tau_m_ambient.apply(x), &self.tau_n_ambient.apply(y))
    }

    /// The bracket on quotient coordinates.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let b = self.bracket_ambient(&self.quotient.lift(x), &self.quotient.lift(y));
        self.quotient.project(&b)
    }

    /// The product as a Leibniz algebra on its quotient coordinates. The
    /// constructor re-checks the Leibniz identity.
    pub fn as_algebra(&self) -> Result<LeibnizAlgebra> {
        let d = self.dim();
        let f = self.field();
        let units: Vec<Vector> = (0..d)
            .map(|i| crate::exactla::unit_vector(f, d, i))
            .collect();
        let mut table = Vec::with_capacity(d * d);
        for a in &units {
            for b in &units {
                table.push(self.bracket(a, b));
            }
        }
        let labels = self
            .quotient
            .free_columns()
            .iter()
            .map(|&c| self.labels[c].clone())
            .collect();
        LeibnizAlgebra::new(f, labels, table)
    }

    /// `θ = η ∘ τ_m` into the base algebra (`= μ ∘ τ_n`, checked at
    /// construction).
    pub fn theta(&self) -> LinearMap {
        self.cm_m.eta().map().compose(&self.tau_m)
    }

    fn check_tau_morphisms(&self) -> Result<()> {
        let d = self.dim();
        let f = self.field();
        let (m, n) = (self.cm_m.source(), self.cm_n.source());
        for i in 0..d {
            let x = crate::exactla::unit_vector(f, d, i);
            for j in 0..d {
                let y = crate::exactla::unit_vector(f, d, j);
                let xy = self.bracket(&x, &y);
                let ok_m = self.tau_m.apply(&xy)
                    == m.bracket(&self.tau_m.apply(&x), &self.tau_m.apply(&y));
                let ok_n = self.tau_n.apply(&xy)
                    == n.bracket(&self.tau_n.apply(&x), &self.tau_n.apply(&y));
                if !ok_m || !ok_n {
                    return Err(Error::WellDefinedness(
                        "τ maps do not preserve the bracket".into(),
                    ));
                }
            }
        }
        Ok(())
    }
}

/// The non-abelian tensor product `m ⋆ n`.
pub fn tensor_product(cm: &CrossedModule, cn: &CrossedModule) -> Result<NonAbelianProduct> {
    check_pair(cm, cn)?;
    let acts = MutualActions::new(cm, cn);
    let relations = tensor_relations(cm, cn, &acts);
    let (tm, tn) = tau_ambient(cm, cn, &acts);
    let theta_m = cm.eta().map().compose(&tm);
    let theta_n = cn.eta().map().compose(&tn);
    if theta_m != theta_n {
        return Err(Error::WellDefinedness("η ∘ τ_m != μ ∘ τ_n".into()));
    }
    let len = relations.ambient_dim();
    let q = quotient(len, relations.clone())?;
    let field = cm.base().field();
    let wd = |e: crate::exactla::LinalgError| {
        Error::WellDefinedness(format!("τ does not descend to the tensor product: {e}"))
    };
    let tau_m =
        induced_map(&tm, &q, &QuotientSpace::whole(field, cm.source().dim())).map_err(wd)?;
    let tau_n =
        induced_map(&tn, &q, &QuotientSpace::whole(field, cn.source().dim())).map_err(wd)?;
    let product = NonAbelianProduct {
        kind: ProductKind::Tensor,
        cm_m: cm.clone(),
        cm_n: cn.clone(),
        tensor_relations: relations,
        square: None,
        quotient: q,
        tau_m,
        tau_n,
        pi: None,
        labels: symbol_labels(cm.source(), cn.source()),
        tau_m_ambient: tm,
        tau_n_ambient: tn,
    };
    product.check_tau_morphisms()?;
    Ok(product)
}

/// Pullback basis pairs `(m_a, n_a)` with `η(m_a) = μ(n_a)`.
fn pullback_pairs(cm: &CrossedModule, cn: &CrossedModule) -> Vec<(Vector, Vector)> {
    let dm = cm.source().dim();
    let field = cm.base().field();
    let diff = cm
        .eta()
        .map()
        .matrix()
        .hstack(&cn.eta().map().matrix().scaled(&-field.one()));
    kernel(&LinearMap::new(diff))
        .basis()
        .iter()
        .map(|v| (v[..dm].to_vec(), v[dm..].to_vec()))
        .collect()
}

/// `m □ n`: span of `m * n' - n * m'` over pullback basis pairs.
/// Fails unless the span is central in `m ⋆ n`.
pub fn square_subspace(t: &NonAbelianProduct) -> Result<Subspace> {
    if t.kind != ProductKind::Tensor {
        return Err(Error::Input("□ is defined inside a tensor product".into()));
    }
    let pairs = pullback_pairs(&t.cm_m, &t.cm_n);
    let mut gens = Vec::with_capacity(pairs.len() * pairs.len());
    for (m, n) in &pairs {
        for (m2, n2) in &pairs {
            gens.push(crate::exactla::sub(
                &t.symbol_mn(m, n2),
                &t.symbol_nm(n, m2),
            ));
        }
    }
    let square = Subspace::span(t.field(), t.ambient_dim(), gens);
    let r = t.relations();
    let len = t.ambient_dim();
    for s in square.basis() {
        for e in 0..len {
            let e = crate::exactla::unit_vector(t.field(), len, e);
            if !r.contains(&t.bracket_ambient(s, &e)) || !r.contains(&t.bracket_ambient(&e, s)) {
                return Err(Error::WellDefinedness("□ is not central".into()));
            }
        }
    }
    Ok(square)
}

/// `m ∧ n = (m ⋆ n) / (m □ n)` with `π`.
pub fn exterior_product(cm: &CrossedModule, cn: &CrossedModule) -> Result<NonAbelianProduct> {
    let t = tensor_product(cm, cn)?;
    exterior_of(&t)
}

/// The exterior product over an already computed tensor product.
pub fn exterior_of(t: &NonAbelianProduct) -> Result<NonAbelianProduct> {
    let square = square_subspace(t)?;
    let relations = t.relations().sum(&square);
    let q = quotient(t.ambient_dim(), relations)?;
    let field = t.field();
    let id = LinearMap::identity(field, t.ambient_dim());
    let pi = induced_map(&id, &t.quotient, &q)?;
    let (dm, dn) = t.dims();
    let wd = |e: crate::exactla::LinalgError| {
        Error::WellDefinedness(format!("τ does not descend to the exterior product: {e}"))
    };
    let tau_m = induced_map(&t.tau_m_ambient, &q, &QuotientSpace::whole(field, dm)).map_err(wd)?;
    let tau_n = induced_map(&t.tau_n_ambient, &q, &QuotientSpace::whole(field, dn)).map_err(wd)?;
    let ext = NonAbelianProduct {
        kind: ProductKind::Exterior,
        cm_m: t.cm_m.clone(),
        cm_n: t.cm_n.clone(),
        tensor_relations: t.tensor_relations.clone(),
        square: Some(square),
        quotient: q,
        tau_m,
        tau_n,
        pi: Some(pi),
        labels: t.labels.clone(),
        tau_m_ambient: t.tau_m_ambient.clone(),
        tau_n_ambient: t.tau_n_ambient.clone(),
    };
    // θ must descend to the exterior product
    let theta_ambient = t.cm_m.eta().map().compose(&t.tau_m_ambient);
    induced_map(
        &theta_ambient,
        &ext.quotient,
        &QuotientSpace::whole(field, t.cm_m.base().dim()),
    )
    .map_err(|e| Error::WellDefinedness(format!("θ does not descend: {e}")))?;
    Ok(ext)
}

/// Product of two ideals of `g`, each as an inclusion crossed module.
pub fn ideal_product(
    g: &LeibnizAlgebra,
    a: &Ideal,
    b: &Ideal,
    kind: ProductKind,
) -> Result<NonAbelianProduct> {
    let cm = inclusion_crossed_module(g, a)?;
    let cn = inclusion_crossed_module(g, b)?;
    match kind {
        ProductKind::Tensor => tensor_product(&cm, &cn),
        ProductKind::Exterior => exterior_product(&cm, &cn),
    }
}

/// `g ⋆ g` or `g ∧ g` for the identity crossed module.
pub fn square_product(g: &LeibnizAlgebra, kind: ProductKind) -> Result<NonAbelianProduct> {
    let id = CrossedModule::identity(g);
    match kind {
        ProductKind::Tensor => tensor_product(&id, &id),
        ProductKind::Exterior => exterior_product(&id, &id),
    }
}

/// `θ_{a,b}: a ∧ b -> g`, `a ∧ b ↦ [a, b]`, `b ∧ a ↦ [b, a]`, valued in
/// `g` coordinates (the image lies in `a ∩ b`).
pub fn theta(product: &NonAbelianProduct) -> Result<LinearMap> {
    let field = product.field();
    let amb = product.cm_m.eta().map().compose(&product.tau_m_ambient);
    Ok(induced_map(
        &amb,
        &product.quotient,
        &QuotientSpace::whole(field, product.cm_m.base().dim()),
    )?)
}

/// The map `src -> dst` induced by linear maps `f_m: m -> m'` and
/// `f_n: n -> n'` on symbols, `m*n ↦ f_m(m)*f_n(n)` and
/// `n*m ↦ f_n(n)*f_m(m)`. Descent to the quotients is checked.
pub fn product_map(
    src: &NonAbelianProduct,
    dst: &NonAbelianProduct,
    f_m: &LinearMap,
    f_n: &LinearMap,
) -> Result<LinearMap> {
    let a = f_m.matrix().kron(f_n.matrix());
    let b = f_n.matrix().kron(f_m.matrix());
    let amb = LinearMap::new(a.direct_sum(&b));
    Ok(induced_map(&amb, &src.quotient, &dst.quotient)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::examples;
    use crate::exactla::FieldSpec;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn tensor_square_of_abelian() {
        for n in 1..=3 {
            let g = LeibnizAlgebra::abelian(q(), n);
            let t = square_product(&g, ProductKind::Tensor).unwrap();
            assert_eq!(t.dim(), 2 * n * n);
            assert!(t.as_algebra().unwrap().is_abelian());
            let e = exterior_of(&t).unwrap();
            assert_eq!(e.dim(), n * n);
        }
    }

    #[test]
    fn tensor_square_of_sl2() {
        let g = examples::sl2(q());
        let t = square_product(&g, ProductKind::Tensor).unwrap();
        assert_eq!(t.dim(), 3);
        let sq = square_subspace(&t).unwrap();
        assert!(t.relations().contains_subspace(&sq));
        let e = exterior_of(&t).unwrap();
        assert_eq!(e.dim(), 3);
        assert!(e.pi.as_ref().unwrap().is_bijective());
        assert!(theta(&e).unwrap().is_bijective());
    }

    #[test]
    fn square_of_zero_source_is_zero() {
        let h3 = examples::heisenberg(q());
        let z = inclusion_crossed_module(&h3, &Ideal::zero(&h3)).unwrap();
        let id = CrossedModule::identity(&h3);
        let t = tensor_product(&z, &id).unwrap();
        assert_eq!(t.ambient_dim(), 0);
        assert!(square_subspace(&t).unwrap().is_zero());
    }

    #[test]
    fn theta_examples() {
        let a = LeibnizAlgebra::abelian(q(), 2);
        let e = square_product(&a, ProductKind::Exterior).unwrap();
        assert!(theta(&e).unwrap().is_zero());
        let h3 = examples::heisenberg(q());
        let e =
            ideal_product(&h3, &h3.center(), &Ideal::whole(&h3), ProductKind::Exterior).unwrap();
        assert!(theta(&e).unwrap().is_zero());
    }

    #[test]
    fn base_mismatch() {
        let a = CrossedModule::identity(&LeibnizAlgebra::abelian(q(), 1));
        let b = CrossedModule::identity(&LeibnizAlgebra::abelian(q(), 2));
        assert!(matches!(tensor_product(&a, &b), Err(Error::BaseMismatch)));
    }

    #[test]
    fn products_are_leibniz() {
        for g in [
            examples::cyclic2(q()),
            examples::solvable2(q()),
            examples::heisenberg(q()),
        ] {
            let t = square_product(&g, ProductKind::Tensor).unwrap();
            t.as_algebra().unwrap();
            exterior_of(&t).unwrap().as_algebra().unwrap();
        }
    }
}
