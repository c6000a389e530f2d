use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::exactla::{
    add, induced_map, kron, quotient, sub, unit_vector, LinearMap, Matrix, QuotientSpace, Scalar,
    SpanBuilder, Subspace, Vector,
};

use super::{NonAbelianProduct, ProductKind};

/// The non-abelian tensor or exterior square of a Lie algebra, as a
/// quotient of `g ⊗ g`, with the commutator map `λ: x ⊗ y ↦ [x, y]`.
#[derive(Clone, Debug)]
pub struct LieSquare {
    pub kind: ProductKind,
    pub quotient: QuotientSpace,
    pub commutator: LinearMap,
    labels: Vec<String>,
}

impl LieSquare {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    /// `[x⊗y, x'⊗y'] = [x,y] ⊗ [x',y']`
    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let a = self.commutator.apply(u);
        let b = self.commutator.apply(v);
        self.quotient.project(&kron(&a, &b))
    }

    pub fn as_algebra(&self) -> Result<LeibnizAlgebra> {
        let d = self.dim();
        let f = self.quotient.field();
        let mut table = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                table.push(self.bracket(&unit_vector(f, d, i), &unit_vector(f, d, j)));
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
}

fn lie_relations(g: &LeibnizAlgebra) -> SpanBuilder {
    let n = g.dim();
    let field = g.field();
    let e = |i: usize| g.unit(i);
    let mut span = SpanBuilder::new(field, n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                // [x,x']⊗y - x⊗[x',y] + x'⊗[x,y]
                let r = add(
                    &sub(
                        &kron(g.basis_bracket(i, j), &e(k)),
                        &kron(&e(i), g.basis_bracket(j, k)),
                    ),
                    &kron(&e(j), g.basis_bracket(i, k)),
                );
                span.push(r);
                // x⊗[y,y'] - [x,y]⊗y' + [x,y']⊗y
                let r = add(
                    &sub(
                        &kron(&e(i), g.basis_bracket(j, k)),
                        &kron(g.basis_bracket(i, j), &e(k)),
                    ),
                    &kron(g.basis_bracket(i, k), &e(j)),
                );
                span.push(r);
            }
        }
    }
    span
}

fn build(g: &LeibnizAlgebra, kind: ProductKind, relations: Subspace) -> Result<LieSquare> {
    let n = g.dim();
    let field = g.field();
    let q = quotient(n * n, relations)?;
    let commutator = induced_map(&g.bracket_map(), &q, &QuotientSpace::whole(field, n))
        .map_err(|e| Error::WellDefinedness(format!("commutator does not descend: {e}")))?;
    let mut labels = Vec::with_capacity(n * n);
    for a in g.labels() {
        for b in g.labels() {
            labels.push(format!("{a}⊗{b}"));
        }
    }
    Ok(LieSquare {
        kind,
        quotient: q,
        commutator,
        labels,
    })
}

/// `g ⋆_Lie g`
pub fn lie_tensor_square(g: &LeibnizAlgebra) -> Result<LieSquare> {
    if !g.is_lie() {
        return Err(Error::NotLie);
    }
    build(g, ProductKind::Tensor, lie_relations(g).finish())
}

/// `g ∧_Lie g`: the tensor square modulo `x ⊗ x`.
pub fn lie_exterior_square(g: &LeibnizAlgebra) -> Result<LieSquare> {
    if !g.is_lie() {
        return Err(Error::NotLie);
    }
    let n = g.dim();
    let mut span = lie_relations(g);
    for i in 0..n {
        span.push(kron(&g.unit(i), &g.unit(i)));
        for j in (i + 1)..n {
            span.push(add(
                &kron(&g.unit(i), &g.unit(j)),
                &kron(&g.unit(j), &g.unit(i)),
            ));
        }
    }
    build(g, ProductKind::Exterior, span.finish())
}

/// The three natural epimorphisms from the Leibniz squares to the Lie squares.
#[derive(Clone, Debug)]
pub struct LieComparisonMaps {
    /// `g ∧ g -> g ⋆_Lie g`
    pub exterior_to_lie_tensor: LinearMap,
    /// `g ∧ g -> g ∧_Lie g`
    pub exterior_to_lie_exterior: LinearMap,
    /// `g ⋆ g -> g ⋆_Lie g`
    pub tensor_to_lie_tensor: LinearMap,
}

/// Symbol maps `i_1(x) * i_2(y) ↦ x⊗y`, `i_2(y) * i_1(x) ↦ y⊗x`; both blocks
/// of the Leibniz ambient map identically onto `g ⊗ g`.
pub fn leibniz_to_lie_square_maps(
    tensor: &NonAbelianProduct,
    exterior: &NonAbelianProduct,
    lie_tensor: &LieSquare,
    lie_exterior: &LieSquare,
) -> Result<LieComparisonMaps> {
    let n2 = lie_tensor.quotient.ambient_dim();
    if tensor.ambient_dim() != 2 * n2 || exterior.ambient_dim() != 2 * n2 {
        return Err(Error::DimensionMismatch {
            expected: 2 * n2,
            found: tensor.ambient_dim(),
        });
    }
    let field = lie_tensor.quotient.field();
    let id = Matrix::identity(field, n2);
    let amb = LinearMap::new(id.hstack(&id));
    let wd = |e: crate::exactla::LinalgError| {
        Error::WellDefinedness(format!("symbol map does not descend: {e}"))
    };
    Ok(LieComparisonMaps {
        exterior_to_lie_tensor: induced_map(&amb, &exterior.quotient, &lie_tensor.quotient)
            .map_err(wd)?,
        exterior_to_lie_exterior: induced_map(&amb, &exterior.quotient, &lie_exterior.quotient)
            .map_err(wd)?,
        tensor_to_lie_tensor: induced_map(&amb, &tensor.quotient, &lie_tensor.quotient)
            .map_err(wd)?,
    })
}
