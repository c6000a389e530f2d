//! Subspaces in canonical form, quotient spaces with explicit projection and
//! section, subquotients, and linear maps between coordinate spaces.

use super::matrix::{is_zero_vector, rref_rows, unit_vector, zero_vector, Matrix, Vector};
use super::scalar::{FieldSpec, Scalar};
use super::LinalgError;

/// A subspace of `K^n` stored by the reduced row-echelon form of a basis.
/// Two subspaces are equal iff their bases are equal entry by entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: FieldSpec,
    ambient_dim: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span<I>(field: FieldSpec, ambient_dim: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vector>,
    {
        let mut b = SpanBuilder::new(field, ambient_dim);
        for v in vectors {
            b.push(v);
            if b.is_full() {
                break;
            }
        }
        b.finish()
    }

    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            field,
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            field,
            ambient_dim,
            basis: (0..ambient_dim)
                .map(|i| unit_vector(field, ambient_dim, i))
                .collect(),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Row space of a matrix.
    pub fn row_space(m: &Matrix) -> Self {
        Subspace::span(m.field(), m.cols(), m.row_vectors())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient_dim
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors as the rows of a matrix.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(self.field, self.ambient_dim, self.basis.clone())
    }

    /// Inclusion map `K^dim -> K^ambient` sending coordinate `i` to basis vector `i`.
    pub fn inclusion(&self) -> LinearMap {
        LinearMap::new(Matrix::from_columns(
            self.field,
            self.ambient_dim,
            self.basis.clone(),
        ))
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is not in
    /// the subspace. Reads the pivot entries and verifies the remainder.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        assert_eq!(v.len(), self.ambient_dim, "ambient dimension mismatch");
        let coords: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        for (c, b) in coords.iter().zip(&self.basis) {
            super::matrix::axpy(&mut rest, &-c, b);
        }
        is_zero_vector(&rest).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Reduces `v` modulo the subspace: the result vanishes on every pivot column.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut rest = v.to_vec();
        for (p, b) in self.pivots.iter().zip(&self.basis) {
            let c = rest[*p].clone();
            super::matrix::axpy(&mut rest, &-&c, b);
        }
        rest
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        Subspace::span(
            self.field,
            self.ambient_dim,
            self.basis.iter().chain(other.basis.iter()).cloned(),
        )
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        // (a, b) with a·U + b·W = 0 gives a·U in U ∩ W.
        let stacked: Vec<Vector> = self
            .basis
            .iter()
            .chain(other.basis.iter())
            .cloned()
            .collect();
        let m = Matrix::from_columns(self.field, self.ambient_dim, stacked);
        let k = kernel(&LinearMap::new(m));
        let d = self.dim();
        Subspace::span(
            self.field,
            self.ambient_dim,
            k.basis().iter().map(|c| {
                let mut v = zero_vector(self.field, self.ambient_dim);
                for (a, u) in c[..d].iter().zip(&self.basis) {
                    super::matrix::axpy(&mut v, a, u);
                }
                v
            }),
        )
    }

    /// Image of the subspace under a map.
    pub fn map(&self, f: &LinearMap) -> Subspace {
        assert_eq!(f.domain_dim(), self.ambient_dim);
        Subspace::span(
            self.field,
            f.codomain_dim(),
            self.basis.iter().map(|v| f.apply(v)),
        )
    }
}

/// Incremental span computation that keeps the basis reduced.
pub struct SpanBuilder {
    field: FieldSpec,
    ambient_dim: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl SpanBuilder {
    pub fn new(field: FieldSpec, ambient_dim: usize) -> Self {
        SpanBuilder {
            field,
            ambient_dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient_dim
    }

    /// Adds a vector; returns true if it enlarged the span.
    pub fn push(&mut self, mut v: Vector) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "ambient dimension mismatch");
        for (p, r) in self.pivots.iter().zip(&self.rows) {
            let c = v[*p].clone();
            if !c.is_zero() {
                super::matrix::axpy(&mut v, &-&c, r);
            }
        }
        let Some(lead) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[lead].inv().unwrap();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for r in self.rows.iter_mut() {
            let c = r[lead].clone();
            if !c.is_zero() {
                super::matrix::axpy(r, &-&c, &v);
            }
        }
        let at = self.pivots.partition_point(|&p| p < lead);
        self.pivots.insert(at, lead);
        self.rows.insert(at, v);
        true
    }

    pub fn finish(self) -> Subspace {
        Subspace {
            field: self.field,
            ambient_dim: self.ambient_dim,
            basis: self.rows,
            pivots: self.pivots,
        }
    }
}

/// `K^n / R` with coordinates indexed by the non-pivot columns of `R`'s
/// canonical basis, in increasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSpace {
    relations: Subspace,
    free_columns: Vec<usize>,
    projection: Matrix,
    section: Matrix,
}

impl QuotientSpace {
    pub fn new(ambient_dim: usize, relations: Subspace) -> Result<Self, LinalgError> {
        if relations.ambient_dim() != ambient_dim {
            return Err(LinalgError::DimensionMismatch {
                expected: ambient_dim,
                found: relations.ambient_dim(),
            });
        }
        let field = relations.field();
        let mut is_pivot = vec![false; ambient_dim];
        for &p in relations.pivots() {
            is_pivot[p] = true;
        }
        let free_columns: Vec<usize> = (0..ambient_dim).filter(|&c| !is_pivot[c]).collect();
        let q = free_columns.len();
        let mut projection = Matrix::zeros(field, q, ambient_dim);
        let mut section = Matrix::zeros(field, ambient_dim, q);
        for (k, &c) in free_columns.iter().enumerate() {
            projection.set(k, c, field.one());
            section.set(c, k, field.one());
        }
        // e_p ≡ e_p - row = -(row restricted to the free columns)
        for (row, &p) in relations.basis().iter().zip(relations.pivots()) {
            for (k, &c) in free_columns.iter().enumerate() {
                if !row[c].is_zero() {
                    projection.set(k, p, -&row[c]);
                }
            }
        }
        Ok(QuotientSpace {
            relations,
            free_columns,
            projection,
            section,
        })
    }

    /// The quotient of `K^n` by zero.
    pub fn whole(field: FieldSpec, n: usize) -> Self {
        QuotientSpace::new(n, Subspace::zero(field, n)).unwrap()
    }

    pub fn field(&self) -> FieldSpec {
        self.relations.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.relations.ambient_dim()
    }

    pub fn dim(&self) -> usize {
        self.free_columns.len()
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    pub fn free_columns(&self) -> &[usize] {
        &self.free_columns
    }

    /// Ambient → quotient coordinates.
    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    /// Quotient coordinates → ambient representatives.
    pub fn section(&self) -> &Matrix {
        &self.section
    }

    pub fn projection_map(&self) -> LinearMap {
        LinearMap::new(self.projection.clone())
    }

    pub fn section_map(&self) -> LinearMap {
        LinearMap::new(self.section.clone())
    }

    pub fn project(&self, v: &[Scalar]) -> Vector {
        self.projection.apply(v)
    }

    pub fn lift(&self, q: &[Scalar]) -> Vector {
        self.section.apply(q)
    }
}

/// `Z / B` for subspaces `B ⊆ Z ⊆ K^n`. Coordinates are quotient coordinates
/// of `Z`'s canonical coordinates modulo `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subquotient {
    sub: Subspace,
    boundaries: Subspace,
    quotient: QuotientSpace,
}

impl Subquotient {
    pub fn new(sub: Subspace, boundaries: Subspace) -> Result<Self, LinalgError> {
        if sub.ambient_dim() != boundaries.ambient_dim() {
            return Err(LinalgError::DimensionMismatch {
                expected: sub.ambient_dim(),
                found: boundaries.ambient_dim(),
            });
        }
        let mut coords = Vec::with_capacity(boundaries.dim());
        for b in boundaries.basis() {
            coords.push(sub.coordinates(b).ok_or(LinalgError::NotContained)?);
        }
        let rel = Subspace::span(sub.field(), sub.dim(), coords);
        let quotient = QuotientSpace::new(sub.dim(), rel)?;
        Ok(Subquotient {
            sub,
            boundaries,
            quotient,
        })
    }

    /// A subspace viewed as a space in its own right.
    pub fn of_subspace(sub: Subspace) -> Self {
        let zero = Subspace::zero(sub.field(), sub.ambient_dim());
        Subquotient::new(sub, zero).unwrap()
    }

    /// `K^n / R` as a subquotient.
    pub fn of_quotient(ambient_dim: usize, relations: Subspace) -> Result<Self, LinalgError> {
        let full = Subspace::full(relations.field(), ambient_dim);
        Subquotient::new(full, relations)
    }

    pub fn field(&self) -> FieldSpec {
        self.sub.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.sub.ambient_dim()
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn sub(&self) -> &Subspace {
        &self.sub
    }

    pub fn boundaries(&self) -> &Subspace {
        &self.boundaries
    }

    pub fn quotient(&self) -> &QuotientSpace {
        &self.quotient
    }

    /// Ambient representative of coordinate vector `q`.
    pub fn representative(&self, q: &[Scalar]) -> Vector {
        let zc = self.quotient.lift(q);
        let mut v = zero_vector(self.field(), self.ambient_dim());
        for (c, b) in zc.iter().zip(self.sub.basis()) {
            super::matrix::axpy(&mut v, c, b);
        }
        v
    }

    /// Ambient representatives of the coordinate basis.
    pub fn representatives(&self) -> Vec<Vector> {
        let f = self.field();
        (0..self.dim())
            .map(|k| self.representative(&unit_vector(f, self.dim(), k)))
            .collect()
    }

    /// Class of an ambient vector, or `None` if it does not lie in `Z`.
    pub fn class_of(&self, v: &[Scalar]) -> Option<Vector> {
        self.sub.coordinates(v).map(|c| self.quotient.project(&c))
    }

    /// The map `self -> target` induced by an ambient map `f`. Requires
    /// `f(Z) ⊆ Z'` and `f(B) ⊆ B'`.
    pub fn induced(&self, f: &LinearMap, target: &Subquotient) -> Result<LinearMap, LinalgError> {
        if f.domain_dim() != self.ambient_dim() || f.codomain_dim() != target.ambient_dim() {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient_dim(),
                found: f.domain_dim(),
            });
        }
        for b in self.boundaries.basis() {
            if !target.boundaries.contains(&f.apply(b)) {
                return Err(LinalgError::NotWellDefined(
                    "relations are not mapped into target relations".into(),
                ));
            }
        }
        let mut cols = Vec::with_capacity(self.dim());
        for r in self.representatives() {
            let img = f.apply(&r);
            let c = target.class_of(&img).ok_or_else(|| {
                LinalgError::NotWellDefined("image leaves the target subspace".into())
            })?;
            cols.push(c);
        }
        Ok(LinearMap::new(Matrix::from_columns(
            self.field(),
            target.dim(),
            cols,
        )))
    }
}

/// A linear map between coordinate spaces, stored as a `codomain x domain`
/// matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Self {
        LinearMap { matrix }
    }

    pub fn zero(field: FieldSpec, domain: usize, codomain: usize) -> Self {
        LinearMap::new(Matrix::zeros(field, codomain, domain))
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        LinearMap::new(Matrix::identity(field, n))
    }

    pub fn field(&self) -> FieldSpec {
        self.matrix.field()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn domain_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn codomain_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        self.matrix.apply(v)
    }

    /// `self ∘ first`
    pub fn compose(&self, first: &LinearMap) -> LinearMap {
        LinearMap::new(self.matrix.mul(&first.matrix))
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn rank(&self) -> usize {
        image(self).dim()
    }

    pub fn is_injective(&self) -> bool {
        kernel(self).is_zero()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.codomain_dim()
    }

    pub fn is_bijective(&self) -> bool {
        self.domain_dim() == self.codomain_dim() && self.is_injective()
    }

    /// Solves `self(x) = b`, setting every free variable to `free_value`.
    /// Different `free_value`s give different preimages whenever the kernel
    /// is nonzero.
    pub fn preimage(&self, b: &[Scalar], free_value: &Scalar) -> Option<Vector> {
        let field = self.field();
        let n = self.domain_dim();
        let aug = self.matrix.hstack(&Matrix::from_columns(
            field,
            self.codomain_dim(),
            vec![b.to_vec()],
        ));
        let (rows, pivots) = rref_rows(n + 1, aug.row_vectors());
        if pivots.last() == Some(&n) {
            return None;
        }
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut x = zero_vector(field, n);
        for c in 0..n {
            if !is_pivot[c] {
                x[c] = free_value.clone();
            }
        }
        for (row, &p) in rows.iter().zip(&pivots) {
            let mut v = row[n].clone();
            for c in 0..n {
                if !is_pivot[c] && !row[c].is_zero() {
                    v = &v - &(&row[c] * &x[c]);
                }
            }
            x[p] = v;
        }
        Some(x)
    }

    /// Restriction to `dom` (in its canonical coordinates) with values read in
    /// the canonical coordinates of `cod`.
    pub fn restrict(&self, dom: &Subspace, cod: &Subspace) -> Result<LinearMap, LinalgError> {
        let mut cols = Vec::with_capacity(dom.dim());
        for v in dom.basis() {
            cols.push(
                cod.coordinates(&self.apply(v))
                    .ok_or(LinalgError::NotContained)?,
            );
        }
        Ok(LinearMap::new(Matrix::from_columns(
            self.field(),
            cod.dim(),
            cols,
        )))
    }

    /// Two-sided inverse of a bijective map.
    pub fn inverse(&self) -> Option<LinearMap> {
        if !self.is_bijective() {
            return None;
        }
        let n = self.domain_dim();
        let f = self.field();
        let zero = f.zero();
        let cols: Option<Vec<Vector>> = (0..n)
            .map(|i| self.preimage(&unit_vector(f, n, i), &zero))
            .collect();
        Some(LinearMap::new(Matrix::from_columns(f, n, cols?)))
    }
}

/// `{v : f(v) = 0}`
pub fn kernel(f: &LinearMap) -> Subspace {
    let field = f.field();
    let n = f.domain_dim();
    let (rows, pivots) = rref_rows(n, f.matrix().row_vectors());
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let basis = (0..n).filter(|&c| !is_pivot[c]).map(|free| {
        let mut v = unit_vector(field, n, free);
        for (row, &p) in rows.iter().zip(&pivots) {
            v[p] = -&row[free];
        }
        v
    });
    Subspace::span(field, n, basis)
}

/// Column span of `f`.
pub fn image(f: &LinearMap) -> Subspace {
    Subspace::span(f.field(), f.codomain_dim(), f.matrix().columns())
}

/// `K^n / relations`
pub fn quotient(ambient_dim: usize, relations: Subspace) -> Result<QuotientSpace, LinalgError> {
    QuotientSpace::new(ambient_dim, relations)
}

/// The map `dom -> cod` induced by an ambient map `f` on quotient spaces.
/// Fails with `NotWellDefined` unless `f(dom.relations) ⊆ cod.relations`.
pub fn induced_map(
    f: &LinearMap,
    dom: &QuotientSpace,
    cod: &QuotientSpace,
) -> Result<LinearMap, LinalgError> {
    if f.domain_dim() != dom.ambient_dim() {
        return Err(LinalgError::DimensionMismatch {
            expected: dom.ambient_dim(),
            found: f.domain_dim(),
        });
    }
    if f.codomain_dim() != cod.ambient_dim() {
        return Err(LinalgError::DimensionMismatch {
            expected: cod.ambient_dim(),
            found: f.codomain_dim(),
        });
    }
    for r in dom.relations().basis() {
        if !cod.relations().contains(&f.apply(r)) {
            return Err(LinalgError::NotWellDefined(
                "a relation is not mapped into the target relations".into(),
            ));
        }
    }
    Ok(LinearMap::new(
        cod.projection().mul(f.matrix()).mul(dom.section()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&k| q().from_i64(k)).collect()
    }

    #[test]
    fn kernel_examples() {
        let k = kernel(&LinearMap::new(Matrix::from_i64(q(), &[&[1, 0]])));
        assert_eq!(k, Subspace::span(q(), 2, vec![v(&[0, 1])]));
        let k = kernel(&LinearMap::zero(q(), 3, 1));
        assert!(k.is_full());
        let k = kernel(&LinearMap::new(Matrix::from_i64(q(), &[&[1, 2], &[2, 4]])));
        // span{(-2, 1)} in canonical form
        assert_eq!(k, Subspace::span(q(), 2, vec![v(&[-2, 1])]));
        assert_eq!(k.basis()[0], vec![q().one(), q().parse("-1/2").unwrap()]);
    }

    #[test]
    fn image_examples() {
        assert!(image(&LinearMap::identity(q(), 2)).is_full());
        assert!(image(&LinearMap::zero(q(), 2, 2)).is_zero());
        let im = image(&LinearMap::new(Matrix::from_i64(q(), &[&[1], &[2]])));
        assert_eq!(im, Subspace::span(q(), 2, vec![v(&[1, 2])]));
    }

    #[test]
    fn quotient_examples() {
        let qs = quotient(2, Subspace::span(q(), 2, vec![v(&[1, 1])])).unwrap();
        assert_eq!(qs.dim(), 1);
        let qs = quotient(3, Subspace::zero(q(), 3)).unwrap();
        assert_eq!(qs.projection(), &Matrix::identity(q(), 3));
        let f2 = FieldSpec::Prime(2);
        let rel = Subspace::span(
            f2,
            4,
            vec![
                vec![f2.one(), f2.one(), f2.zero(), f2.zero()],
                vec![f2.zero(), f2.zero(), f2.one(), f2.zero()],
            ],
        );
        assert_eq!(quotient(4, rel).unwrap().dim(), 2);
        assert!(quotient(3, Subspace::zero(q(), 2)).is_err());
    }

    #[test]
    fn induced_map_examples() {
        let rel = Subspace::span(q(), 2, vec![v(&[1, 1])]);
        let qs = quotient(2, rel).unwrap();
        let id = induced_map(&LinearMap::identity(q(), 2), &qs, &qs).unwrap();
        assert_eq!(id, LinearMap::identity(q(), 1));
        // The quotient coordinate is x - y, which the swap negates.
        let swap = LinearMap::new(Matrix::from_i64(q(), &[&[0, 1], &[1, 0]]));
        let neg = LinearMap::new(Matrix::from_i64(q(), &[&[-1]]));
        assert_eq!(induced_map(&swap, &qs, &qs).unwrap(), neg);
        // Modulo span{(1, -1)} the coordinate is x + y and the swap fixes it.
        let anti = quotient(2, Subspace::span(q(), 2, vec![v(&[1, -1])])).unwrap();
        assert_eq!(
            induced_map(&swap, &anti, &anti).unwrap(),
            LinearMap::identity(q(), 1)
        );

        let dom = QuotientSpace::whole(q(), 2);
        let cod = quotient(2, Subspace::span(q(), 2, vec![v(&[0, 1])])).unwrap();
        let p = LinearMap::new(Matrix::from_i64(q(), &[&[1, 0], &[0, 0]]));
        let m = induced_map(&p, &dom, &cod).unwrap();
        assert_eq!(m.matrix(), &Matrix::from_i64(q(), &[&[1, 0]]));

        // x -> (x, 0) does not respect span{(0,1)} -> 0
        let bad = induced_map(&LinearMap::identity(q(), 2), &cod, &dom);
        assert!(matches!(bad, Err(LinalgError::NotWellDefined(_))));
    }

    #[test]
    fn intersection_and_sum() {
        let a = Subspace::span(q(), 3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::span(q(), 3, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert_eq!(
            a.intersection(&b),
            Subspace::span(q(), 3, vec![v(&[0, 1, 0])])
        );
        assert!(a.sum(&b).is_full());
    }

    #[test]
    fn preimage_with_two_fillings() {
        let f = LinearMap::new(Matrix::from_i64(q(), &[&[1, 1, 0]]));
        let b = v(&[3]);
        let x0 = f.preimage(&b, &q().zero()).unwrap();
        let x1 = f.preimage(&b, &q().one()).unwrap();
        assert_ne!(x0, x1);
        assert_eq!(f.apply(&x0), b);
        assert_eq!(f.apply(&x1), b);
        let g = LinearMap::new(Matrix::from_i64(q(), &[&[0, 0]]));
        assert!(g.preimage(&v(&[1]), &q().zero()).is_none());
    }

    #[test]
    fn subquotient_classes() {
        // Z = span{e0, e1}, B = span{e0 + e1} in Q^3
        let z = Subspace::span(q(), 3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::span(q(), 3, vec![v(&[1, 1, 0])]);
        let sq = Subquotient::new(z, b).unwrap();
        assert_eq!(sq.dim(), 1);
        assert!(sq.class_of(&v(&[0, 0, 1])).is_none());
        assert_eq!(sq.class_of(&v(&[1, 1, 0])).unwrap(), v(&[0]));
        let r = sq.representatives();
        assert_eq!(sq.class_of(&r[0]).unwrap(), v(&[1]));
    }
}
