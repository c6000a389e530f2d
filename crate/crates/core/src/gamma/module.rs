use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exactla::{
    axpy, quotient, unit_vector, zero_vector, FieldSpec, LinearMap, Matrix, QuotientSpace, Scalar,
    SpanBuilder, Subspace, Vector,
};

/// Scalars used for the `k` in relation instances.
fn relation_scalars(field: FieldSpec) -> Vec<Scalar> {
    let mut ks = field.sample_scalars(7);
    if field == FieldSpec::Rationals {
        ks.push(field.from_i64(2).inv().expect("2 is invertible"));
    }
    ks
}

/// `Γ(K^n)` presented by symbols `γ(v)` for `v` in a finite family of
/// vectors, modulo every relation instance whose arguments stay inside the
/// family.
///
/// The family is `0`, `e_i`, `e_i + e_j`, `e_i + e_j + e_k` and, outside
/// characteristic 2, `2e_i` and `2e_i + e_j`.
#[derive(Clone, Debug)]
pub struct GammaModule {
    field: FieldSpec,
    n: usize,
    symbols: Vec<Vector>,
    index: HashMap<Vector, usize>,
    pub quotient: QuotientSpace,
    /// `γ(e_i)` then `γ(e_i + e_j) - γ(e_i) - γ(e_j)` for `i < j`, as
    /// quotient coordinates.
    witness: Vec<Vector>,
}

impl GammaModule {
    pub fn new(field: FieldSpec, n: usize) -> Self {
        let e = |i: usize| unit_vector(field, n, i);
        let two = field.from_i64(2);
        let mut symbols: Vec<Vector> = Vec::new();
        let mut index = HashMap::new();
        let mut add_symbol = |v: Vector| {
            if !index.contains_key(&v) {
                index.insert(v.clone(), symbols.len());
                symbols.push(v);
            }
        };
        add_symbol(zero_vector(field, n));
        for i in 0..n {
            add_symbol(e(i));
        }
        for i in 0..n {
            for j in (i + 1)..n {
                add_symbol(crate::exactla::add(&e(i), &e(j)));
                for k in (j + 1)..n {
                    add_symbol(crate::exactla::add(
                        &crate::exactla::add(&e(i), &e(j)),
                        &e(k),
                    ));
                }
            }
        }
        if field.characteristic() != 2 {
            for i in 0..n {
                let twice = crate::exactla::scale(&two, &e(i));
                add_symbol(twice.clone());
                for j in (0..n).filter(|&j| j != i) {
                    add_symbol(crate::exactla::add(&twice, &e(j)));
                }
            }
        }
        let len = symbols.len();
        let sym = |v: &Vector| index.get(v).copied();
        let mut rel = SpanBuilder::new(field, len);
        let ks = relation_scalars(field);

        // γ(ka) = k²γ(a)
        for a in &symbols {
            for k in &ks {
                if let (Some(ia), Some(ika)) = (sym(a), sym(&crate::exactla::scale(k, a))) {
                    let mut r = zero_vector(field, len);
                    r[ika] = &r[ika] + &field.one();
                    r[ia] = &r[ia] - &(k * k);
                    rel.push(r);
                }
            }
        }
        let small: Vec<Vector> = std::iter::once(zero_vector(field, n))
            .chain((0..n).map(e))
            .collect();
        let sum = |xs: &[&Vector]| -> Vector {
            let mut out = zero_vector(field, n);
            for x in xs {
                axpy(&mut out, &field.one(), x);
            }
            out
        };
        // γ(a+b+c) + γ(a) + γ(b) + γ(c) = γ(a+b) + γ(a+c) + γ(b+c)
        for a in &small {
            for b in &small {
                for c in &small {
                    let terms = [
                        (1, sum(&[a, b, c])),
                        (1, a.clone()),
                        (1, b.clone()),
                        (1, c.clone()),
                        (-1, sum(&[a, b])),
                        (-1, sum(&[a, c])),
                        (-1, sum(&[b, c])),
                    ];
                    if let Some(r) = instance(
                        field,
                        len,
                        &sym,
                        &terms.map(|(c, v)| (field.from_i64(c), v)),
                    ) {
                        rel.push(r);
                    }
                }
            }
        }
        // γ(ka+b) + kγ(a) + kγ(b) = kγ(a+b) + γ(ka) + γ(b)
        for a in &small {
            for b in &small {
                for k in &ks {
                    let ka = crate::exactla::scale(k, a);
                    let terms = [
                        (field.one(), sum(&[&ka, b])),
                        (k.clone(), a.clone()),
                        (k.clone(), b.clone()),
                        (-k, sum(&[a, b])),
                        (-field.one(), ka.clone()),
                        (-field.one(), b.clone()),
                    ];
                    if let Some(r) = instance(field, len, &sym, &terms) {
                        rel.push(r);
                    }
                }
            }
        }
        let quotient = quotient(len, rel.finish()).expect("relations live in the symbol space");

        let proj = |v: &Vector| quotient.project(&unit_vector(field, len, index[v]));
        let mut witness = Vec::new();
        for i in 0..n {
            witness.push(proj(&e(i)));
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let s = proj(&crate::exactla::add(&e(i), &e(j)));
                witness.push(crate::exactla::sub(
                    &crate::exactla::sub(&s, &proj(&e(i))),
                    &proj(&e(j)),
                ));
            }
        }
        GammaModule {
            field,
            n,
            symbols,
            index,
            quotient,
            witness,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Dimension of the argument space `A`.
    pub fn source_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn symbols(&self) -> &[Vector] {
        &self.symbols
    }

    pub fn relations(&self) -> &Subspace {
        self.quotient.relations()
    }

    /// Quotient coordinates of `γ(v)` for `v` in the symbol family.
    pub fn symbol(&self, v: &[Scalar]) -> Option<Vector> {
        let i = *self.index.get(v)?;
        Some(
            self.quotient
                .project(&unit_vector(self.field, self.symbols.len(), i)),
        )
    }

    pub fn witness(&self) -> &[Vector] {
        &self.witness
    }

    /// The witness family spans and is independent.
    pub fn witness_is_basis(&self) -> bool {
        self.witness.len() == self.dim()
            && Subspace::span(self.field, self.dim(), self.witness.iter().cloned()).dim()
                == self.dim()
    }

    /// `γ(a) = Σ a_i² γ(e_i) + Σ_{i<j} a_i a_j (γ(e_i+e_j) - γ(e_i) - γ(e_j))`.
    pub fn gamma_of(&self, a: &[Scalar]) -> Vector {
        assert_eq!(a.len(), self.n);
        let mut out = zero_vector(self.field, self.dim());
        let mut w = self.witness.iter();
        for (ai, wi) in a.iter().zip(w.by_ref().take(self.n)) {
            if !ai.is_zero() {
                axpy(&mut out, &(ai * ai), wi);
            }
        }
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                let wij = w.next().expect("witness covers all pairs");
                let c = &a[i] * &a[j];
                if !c.is_zero() {
                    axpy(&mut out, &c, wij);
                }
            }
        }
        out
    }

    /// The linear map on `Γ` determined by values on symbols, provided the
    /// values satisfy every relation.
    pub fn descend(
        &self,
        codomain_dim: usize,
        value: impl Fn(&Vector) -> Vector,
    ) -> Result<LinearMap> {
        let cols: Vec<Vector> = self.symbols.iter().map(value).collect();
        let amb = LinearMap::new(Matrix::from_columns(self.field, codomain_dim, cols));
        for r in self.relations().basis() {
            if !crate::exactla::is_zero_vector(&amb.apply(r)) {
                return Err(Error::WellDefinedness(
                    "values on γ-symbols violate a defining relation".into(),
                ));
            }
        }
        Ok(LinearMap::new(amb.matrix().mul(self.quotient.section())))
    }
}

fn instance(
    field: FieldSpec,
    len: usize,
    sym: &impl Fn(&Vector) -> Option<usize>,
    terms: &[(Scalar, Vector)],
) -> Option<Vector> {
    let mut r = zero_vector(field, len);
    for (c, v) in terms {
        let i = sym(v)?;
        r[i] = &r[i] + c;
    }
    Some(r)
}

/// `Γ(f): Γ(A) -> Γ(B)`, `γ(a) ↦ γ(f a)`.
pub fn gamma_on_map(f: &LinearMap, src: &GammaModule, dst: &GammaModule) -> Result<LinearMap> {
    if f.domain_dim() != src.source_dim() || f.codomain_dim() != dst.source_dim() {
        return Err(Error::DimensionMismatch {
            expected: src.source_dim(),
            found: f.domain_dim(),
        });
    }
    src.descend(dst.dim(), |v| dst.gamma_of(&f.apply(v)))
}

/// `Λ²(K^n)` as `K^n ⊗ K^n` modulo `e_i⊗e_i` and `e_i⊗e_j + e_j⊗e_i`.
pub fn exterior_square_space(field: FieldSpec, n: usize) -> QuotientSpace {
    let e = |i: usize| unit_vector(field, n, i);
    let mut gens = Vec::new();
    for i in 0..n {
        gens.push(crate::exactla::kron(&e(i), &e(i)));
        for j in (i + 1)..n {
            gens.push(crate::exactla::add(
                &crate::exactla::kron(&e(i), &e(j)),
                &crate::exactla::kron(&e(j), &e(i)),
            ));
        }
    }
    quotient(n * n, Subspace::span(field, n * n, gens)).expect("square relations")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_dimensions() {
        for field in [
            FieldSpec::Rationals,
            FieldSpec::Prime(2),
            FieldSpec::Prime(3),
        ] {
            for n in 0..=4 {
                let g = GammaModule::new(field, n);
                assert_eq!(g.dim(), n * (n + 1) / 2, "n = {n} over {field}");
                assert!(g.witness_is_basis());
            }
        }
    }

    #[test]
    fn gamma_of_matches_symbols() {
        for field in [
            FieldSpec::Rationals,
            FieldSpec::Prime(2),
            FieldSpec::Prime(5),
        ] {
            let g = GammaModule::new(field, 3);
            for v in g.symbols() {
                assert_eq!(g.symbol(v).unwrap(), g.gamma_of(v), "{v:?}");
            }
        }
    }

    #[test]
    fn gamma_on_maps() {
        let q = FieldSpec::Rationals;
        let g2 = GammaModule::new(q, 2);
        let id = LinearMap::identity(q, 2);
        assert_eq!(
            gamma_on_map(&id, &g2, &g2).unwrap(),
            LinearMap::identity(q, 3)
        );
        let zero = LinearMap::zero(q, 2, 2);
        assert!(gamma_on_map(&zero, &g2, &g2).unwrap().is_zero());
        let g1 = GammaModule::new(q, 1);
        let p = LinearMap::new(Matrix::from_i64(q, &[&[1, 0]]));
        let m = gamma_on_map(&p, &g2, &g1).unwrap();
        // on the witness basis: γ(e1) ↦ γ(e1), γ(e2) ↦ 0, cross term ↦ 0
        let w = g2.witness();
        assert_eq!(m.apply(&w[0]), g1.gamma_of(&[q.one()]));
        assert!(crate::exactla::is_zero_vector(&m.apply(&w[1])));
        assert!(crate::exactla::is_zero_vector(&m.apply(&w[2])));
        let zero_space = GammaModule::new(q, 0);
        assert_eq!(zero_space.dim(), 0);
    }

    #[test]
    fn lambda_two() {
        assert_eq!(exterior_square_space(FieldSpec::Prime(2), 3).dim(), 3);
        assert_eq!(exterior_square_space(FieldSpec::Rationals, 4).dim(), 6);
    }
}
