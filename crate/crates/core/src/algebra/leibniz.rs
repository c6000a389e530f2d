use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::{
    axpy, is_zero_vector, kernel, quotient, unit_vector, zero_vector, FieldSpec, LinearMap, Matrix,
    QuotientSpace, Scalar, Subspace, Vector,
};

/// A basis triple where `[x,[y,z]] = [[x,y],z] - [[x,z],y]` fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeibnizReport {
    pub violations: Vec<Violation>,
}

impl LeibnizReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for LeibnizReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "no violations");
        }
        write!(f, "{} violating triple(s)", self.violations.len())?;
        for v in self.violations.iter().take(4) {
            write!(
                f,
                "; ({},{},{}): lhs [{}] rhs [{}]",
                v.i + 1,
                v.j + 1,
                v.k + 1,
                v.lhs.join(" "),
                v.rhs.join(" ")
            )?;
        }
        Ok(())
    }
}

fn bracket_in(n: usize, table: &[Vector], field: FieldSpec, x: &[Scalar], y: &[Scalar]) -> Vector {
    let mut out = zero_vector(field, n);
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            axpy(&mut out, &(xi * yj), &table[i * n + j]);
        }
    }
    out
}

/// Checks the Leibniz identity on every basis triple of a structure table
/// (`table[i * n + j] = [e_i, e_j]`).
pub fn validate_leibniz(field: FieldSpec, n: usize, table: &[Vector]) -> LeibnizReport {
    assert_eq!(table.len(), n * n, "structure table must be n x n");
    let mut report = LeibnizReport::default();
    let e = |i: usize| unit_vector(field, n, i);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = bracket_in(n, table, field, &e(i), &table[j * n + k]);
                let a = bracket_in(n, table, field, &table[i * n + j], &e(k));
                let b = bracket_in(n, table, field, &table[i * n + k], &e(j));
                let rhs: Vector = a.iter().zip(&b).map(|(x, y)| x - y).collect();
                if lhs != rhs {
                    report.violations.push(Violation {
                        i,
                        j,
                        k,
                        lhs: lhs.iter().map(|s| s.to_string()).collect(),
                        rhs: rhs.iter().map(|s| s.to_string()).collect(),
                    });
                }
            }
        }
    }
    report
}

/// `(i, j, [(k, c)])` meaning `[e_i, e_j] = Σ c e_k`.
pub type SparseBracket = (usize, usize, Vec<(usize, Scalar)>);

type IntCoeffs<'a> = &'a [(usize, i64)];

/// A finite-dimensional (right) Leibniz algebra given by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizAlgebra {
    field: FieldSpec,
    labels: Vec<String>,
    table: Vec<Vector>,
}

impl LeibnizAlgebra {
    /// Builds an algebra from `table[i * n + j] = [e_i, e_j]`, rejecting
    /// tables that fail the Leibniz identity.
    pub fn new(field: FieldSpec, labels: Vec<String>, table: Vec<Vector>) -> Result<Self> {
        let n = labels.len();
        if table.len() != n * n || table.iter().any(|v| v.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: table.len(),
            });
        }
        if table.iter().flatten().any(|s| s.field() != field) {
            return Err(Error::FieldMismatch);
        }
        let report = validate_leibniz(field, n, &table);
        if !report.is_valid() {
            return Err(Error::NotLeibniz(report));
        }
        Ok(LeibnizAlgebra {
            field,
            labels,
            table,
        })
    }

    /// Builds from sparse zero-based entries `(i, j, [(k, c)])` meaning
    /// `[e_i, e_j] = Σ c e_k`.
    pub fn from_entries(
        field: FieldSpec,
        labels: Vec<String>,
        entries: &[SparseBracket],
    ) -> Result<Self> {
        let n = labels.len();
        let mut table = vec![zero_vector(field, n); n * n];
        for (i, j, coeffs) in entries {
            if *i >= n || *j >= n {
                return Err(Error::Input(format!(
                    "bracket index out of range: ({i}, {j})"
                )));
            }
            for (k, c) in coeffs {
                if *k >= n {
                    return Err(Error::Input(format!("coefficient index {k} out of range")));
                }
                let slot = &mut table[i * n + j][*k];
                *slot = &*slot + c;
            }
        }
        LeibnizAlgebra::new(field, labels, table)
    }

    /// Integer structure constants, zero-based.
    pub fn from_int_entries(
        field: FieldSpec,
        labels: &[&str],
        entries: &[(usize, usize, IntCoeffs<'_>)],
    ) -> Result<Self> {
        let e: Vec<_> = entries
            .iter()
            .map(|(i, j, cs)| {
                (
                    *i,
                    *j,
                    cs.iter().map(|(k, c)| (*k, field.from_i64(*c))).collect(),
                )
            })
            .collect();
        LeibnizAlgebra::from_entries(field, labels.iter().map(|s| s.to_string()).collect(), &e)
    }

    pub fn abelian(field: FieldSpec, n: usize) -> Self {
        let labels = (1..=n).map(|i| format!("e{i}")).collect();
        LeibnizAlgebra {
            field,
            labels,
            table: vec![zero_vector(field, n); n * n],
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[Vector] {
        &self.table
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim());
        self.labels = labels;
        self
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Scalar] {
        &self.table[i * self.dim() + j]
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        bracket_in(self.dim(), &self.table, self.field, x, y)
    }

    pub fn unit(&self, i: usize) -> Vector {
        unit_vector(self.field, self.dim(), i)
    }

    pub fn zero_vector(&self) -> Vector {
        zero_vector(self.field, self.dim())
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|v| is_zero_vector(v))
    }

    /// `[x,x] = 0` for every `x`, i.e. `[e_i,e_i] = 0` and `[e_i,e_j] = -[e_j,e_i]`.
    pub fn is_lie(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            is_zero_vector(self.basis_bracket(i, i))
                && (0..i).all(|j| {
                    self.basis_bracket(i, j)
                        .iter()
                        .zip(self.basis_bracket(j, i))
                        .all(|(a, b)| (a + b).is_zero())
                })
        })
    }

    pub fn is_perfect(&self) -> bool {
        self.commutator_space().is_full()
    }

    /// Matrix of `y ↦ [x, y]`.
    pub fn left_multiplication(&self, x: &[Scalar]) -> Matrix {
        let cols = (0..self.dim())
            .map(|j| self.bracket(x, &self.unit(j)))
            .collect();
        Matrix::from_columns(self.field, self.dim(), cols)
    }

    /// Matrix of `y ↦ [y, x]`.
    pub fn right_multiplication(&self, x: &[Scalar]) -> Matrix {
        let cols = (0..self.dim())
            .map(|j| self.bracket(&self.unit(j), x))
            .collect();
        Matrix::from_columns(self.field, self.dim(), cols)
    }

    /// Matrix of the bracket `g ⊗ g -> g` (lexicographic tensor basis).
    pub fn bracket_map(&self) -> LinearMap {
        LinearMap::new(Matrix::from_columns(
            self.field,
            self.dim(),
            self.table.clone(),
        ))
    }

    pub fn commutator_space(&self) -> Subspace {
        Subspace::span(self.field, self.dim(), self.table.iter().cloned())
    }

    /// `[g, g]`, spanned by all brackets.
    pub fn commutator_ideal(&self) -> Ideal {
        Ideal::new(self, self.commutator_space()).expect("the commutator is an ideal")
    }

    /// `{c : [x, c] = 0 = [c, x] for all x}`
    pub fn center(&self) -> Ideal {
        let n = self.dim();
        let mut rows = Vec::with_capacity(2 * n * n);
        for x in 0..n {
            let l = self.left_multiplication(&self.unit(x));
            let r = self.right_multiplication(&self.unit(x));
            rows.extend(l.row_vectors());
            rows.extend(r.row_vectors());
        }
        let m = LinearMap::new(Matrix::from_rows(self.field, n, rows));
        Ideal::new(self, kernel(&m)).expect("the center is an ideal")
    }

    /// Least ideal containing `seed`.
    pub fn ideal_closure(&self, seed: &Subspace) -> Ideal {
        let n = self.dim();
        let mut current = seed.clone();
        loop {
            let mut gens: Vec<Vector> = current.basis().to_vec();
            for a in current.basis() {
                for x in 0..n {
                    gens.push(self.bracket(a, &self.unit(x)));
                    gens.push(self.bracket(&self.unit(x), a));
                }
            }
            let next = Subspace::span(self.field, n, gens);
            if next.dim() == current.dim() {
                return Ideal::new(self, next).expect("closure is an ideal");
            }
            current = next;
        }
    }

    /// Quotient algebra `g/a` and the projection morphism.
    pub fn quotient_algebra(&self, ideal: &Ideal) -> Result<(LeibnizAlgebra, AlgebraMorphism)> {
        let q = quotient(self.dim(), ideal.space().clone())?;
        let m = q.dim();
        let mut table = Vec::with_capacity(m * m);
        for i in 0..m {
            let li = q.lift(&unit_vector(self.field, m, i));
            for j in 0..m {
                let lj = q.lift(&unit_vector(self.field, m, j));
                table.push(q.project(&self.bracket(&li, &lj)));
            }
        }
        let labels = q
            .free_columns()
            .iter()
            .map(|&c| self.labels[c].clone())
            .collect();
        let quotient_alg = LeibnizAlgebra::new(self.field, labels, table)?;
        let proj = AlgebraMorphism::new(self, &quotient_alg, q.projection_map())?;
        Ok((quotient_alg, proj))
    }

    /// Quotient structure on `K^n / R` for an ideal given as a quotient space.
    pub fn quotient_space(&self, ideal: &Ideal) -> QuotientSpace {
        quotient(self.dim(), ideal.space().clone()).expect("ideal lives in the algebra")
    }

    /// `g / [g, g]`
    pub fn abelianization(&self) -> (LeibnizAlgebra, AlgebraMorphism) {
        self.quotient_algebra(&self.commutator_ideal())
            .expect("abelianization is well defined")
    }

    /// Quotient by the ideal generated by all squares `[x, x]`. The squares
    /// span `{[e_i,e_i]} ∪ {[e_i,e_j] + [e_j,e_i]}` in every characteristic.
    pub fn liezation(&self) -> (LeibnizAlgebra, AlgebraMorphism) {
        let n = self.dim();
        let mut seed = Vec::new();
        for i in 0..n {
            seed.push(self.basis_bracket(i, i).to_vec());
            for j in (i + 1)..n {
                seed.push(crate::exactla::add(
                    self.basis_bracket(i, j),
                    self.basis_bracket(j, i),
                ));
            }
        }
        let seed = Subspace::span(self.field, n, seed);
        let ideal = self.ideal_closure(&seed);
        self.quotient_algebra(&ideal)
            .expect("liezation is well defined")
    }

    pub fn direct_sum(&self, other: &LeibnizAlgebra) -> Result<LeibnizAlgebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let (n, m) = (self.dim(), other.dim());
        let d = n + m;
        let mut table = vec![zero_vector(self.field, d); d * d];
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.basis_bracket(i, j).iter().enumerate() {
                    table[i * d + j][k] = c.clone();
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                for (k, c) in other.basis_bracket(i, j).iter().enumerate() {
                    table[(n + i) * d + (n + j)][n + k] = c.clone();
                }
            }
        }
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().map(|l| {
            if self.labels.contains(l) {
                format!("{l}'")
            } else {
                l.clone()
            }
        }));
        LeibnizAlgebra::new(self.field, labels, table)
    }

    /// The same algebra with basis reordered: new basis vector `i` is old
    /// basis vector `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> LeibnizAlgebra {
        let n = self.dim();
        assert_eq!(perm.len(), n);
        let mut inv = vec![0; n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let mut table = vec![zero_vector(self.field, n); n * n];
        for i in 0..n {
            for j in 0..n {
                let old = self.basis_bracket(perm[i], perm[j]);
                for (k, c) in old.iter().enumerate() {
                    table[i * n + j][inv[k]] = c.clone();
                }
            }
        }
        let labels = perm.iter().map(|&p| self.labels[p].clone()).collect();
        LeibnizAlgebra::new(self.field, labels, table).expect("relabeling preserves the identity")
    }

    /// Subalgebra spanned by `space`, in its canonical coordinates, with the
    /// inclusion map.
    pub fn subalgebra(&self, space: &Subspace) -> Result<(LeibnizAlgebra, LinearMap)> {
        let d = space.dim();
        let mut table = Vec::with_capacity(d * d);
        for a in space.basis() {
            for b in space.basis() {
                let c = space
                    .coordinates(&self.bracket(a, b))
                    .ok_or(Error::NotASubalgebra)?;
                table.push(c);
            }
        }
        let labels = space
            .pivots()
            .iter()
            .map(|&p| self.labels[p].clone())
            .collect();
        Ok((
            LeibnizAlgebra::new(self.field, labels, table)?,
            space.inclusion(),
        ))
    }

    /// Brackets as a map `g ⊗ g -> g` restricted to two subspaces.
    pub fn describe_vector(&self, v: &[Scalar]) -> String {
        describe(v, &self.labels)
    }
}

/// Human-readable linear combination over labels.
pub fn describe(v: &[Scalar], labels: &[String]) -> String {
    let mut parts = Vec::new();
    for (c, l) in v.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        if c.is_one() {
            parts.push(l.clone());
        } else {
            parts.push(format!("{c}·{l}"));
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// A bracket-preserving linear map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMorphism {
    map: LinearMap,
    domain_dim: usize,
    codomain_dim: usize,
}

impl AlgebraMorphism {
    pub fn new(domain: &LeibnizAlgebra, codomain: &LeibnizAlgebra, map: LinearMap) -> Result<Self> {
        if map.domain_dim() != domain.dim() || map.codomain_dim() != codomain.dim() {
            return Err(Error::DimensionMismatch {
                expected: domain.dim(),
                found: map.domain_dim(),
            });
        }
        for i in 0..domain.dim() {
            let fi = map.apply(&domain.unit(i));
            for j in 0..domain.dim() {
                let fj = map.apply(&domain.unit(j));
                let lhs = map.apply(domain.basis_bracket(i, j));
                if lhs != codomain.bracket(&fi, &fj) {
                    return Err(Error::NotAMorphism(format!(
                        "f([{}, {}]) != [f({}), f({})]",
                        domain.labels()[i],
                        domain.labels()[j],
                        domain.labels()[i],
                        domain.labels()[j]
                    )));
                }
            }
        }
        Ok(AlgebraMorphism {
            map,
            domain_dim: domain.dim(),
            codomain_dim: codomain.dim(),
        })
    }

    pub fn identity(g: &LeibnizAlgebra) -> Self {
        AlgebraMorphism {
            map: LinearMap::identity(g.field(), g.dim()),
            domain_dim: g.dim(),
            codomain_dim: g.dim(),
        }
    }

    pub fn map(&self) -> &LinearMap {
        &self.map
    }

    pub fn domain_dim(&self) -> usize {
        self.domain_dim
    }

    pub fn codomain_dim(&self) -> usize {
        self.codomain_dim
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        self.map.apply(v)
    }

    /// `self ∘ first`
    pub fn compose(&self, first: &AlgebraMorphism) -> AlgebraMorphism {
        assert_eq!(first.codomain_dim, self.domain_dim);
        AlgebraMorphism {
            map: self.map.compose(&first.map),
            domain_dim: first.domain_dim,
            codomain_dim: self.codomain_dim,
        }
    }
}

/// A verified two-sided ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    parent: LeibnizAlgebra,
    space: Subspace,
}

impl Ideal {
    /// Verifies `[a, x], [x, a] ∈ space` on basis instances. Never closes
    /// the subspace silently; see [`LeibnizAlgebra::ideal_closure`].
    pub fn new(parent: &LeibnizAlgebra, space: Subspace) -> Result<Self> {
        if space.ambient_dim() != parent.dim() {
            return Err(Error::DimensionMismatch {
                expected: parent.dim(),
                found: space.ambient_dim(),
            });
        }
        for a in space.basis() {
            for x in 0..parent.dim() {
                let e = parent.unit(x);
                if !space.contains(&parent.bracket(a, &e)) {
                    return Err(Error::NotAnIdeal(format!(
                        "[{}, {}] leaves the subspace",
                        parent.describe_vector(a),
                        parent.labels()[x]
                    )));
                }
                if !space.contains(&parent.bracket(&e, a)) {
                    return Err(Error::NotAnIdeal(format!(
                        "[{}, {}] leaves the subspace",
                        parent.labels()[x],
                        parent.describe_vector(a)
                    )));
                }
            }
        }
        Ok(Ideal {
            parent: parent.clone(),
            space,
        })
    }

    pub fn zero(parent: &LeibnizAlgebra) -> Self {
        Ideal {
            parent: parent.clone(),
            space: Subspace::zero(parent.field(), parent.dim()),
        }
    }

    pub fn whole(parent: &LeibnizAlgebra) -> Self {
        Ideal {
            parent: parent.clone(),
            space: Subspace::full(parent.field(), parent.dim()),
        }
    }

    pub fn parent(&self) -> &LeibnizAlgebra {
        &self.parent
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// The ideal as an algebra in its canonical coordinates, with the inclusion.
    pub fn as_algebra(&self) -> (LeibnizAlgebra, LinearMap) {
        self.parent
            .subalgebra(&self.space)
            .expect("an ideal is a subalgebra")
    }

    /// `[a, b]` for ideals: span of `[a_i, b_j]` and `[b_j, a_i]`.
    pub fn bracket_with(&self, other: &Ideal) -> Subspace {
        let g = &self.parent;
        let mut gens = Vec::new();
        for a in self.space.basis() {
            for b in other.space.basis() {
                gens.push(g.bracket(a, b));
                gens.push(g.bracket(b, a));
            }
        }
        Subspace::span(g.field(), g.dim(), gens)
    }

    pub fn intersection(&self, other: &Ideal) -> Ideal {
        Ideal {
            parent: self.parent.clone(),
            space: self.space.intersection(&other.space),
        }
    }

    /// `[a, x] = [x, a] = 0` for all `a` in the ideal and `x` in the parent.
    pub fn is_central(&self) -> bool {
        self.parent.center().space().contains_subspace(&self.space)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::examples;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn validate_examples() {
        assert!(validate_leibniz(q(), 2, &vec![zero_vector(q(), 2); 4]).is_valid());
        assert!(examples::cyclic2(q()).dim() == 2);
        let bad = LeibnizAlgebra::from_int_entries(q(), &["e1"], &[(0, 0, &[(0, 1)])]);
        match bad {
            Err(Error::NotLeibniz(r)) => {
                assert_eq!(r.violations.len(), 1);
                let v = &r.violations[0];
                assert_eq!((v.i, v.j, v.k), (0, 0, 0));
                assert_eq!(v.lhs, vec!["1"]);
                assert_eq!(v.rhs, vec!["0"]);
            }
            other => panic!("expected violation, got {other:?}"),
        }
    }

    #[test]
    fn commutator_examples() {
        assert!(LeibnizAlgebra::abelian(q(), 3)
            .commutator_ideal()
            .space()
            .is_zero());
        let c = examples::cyclic2(q()).commutator_ideal();
        assert_eq!(c.space().basis(), &[vec![q().zero(), q().one()]]);
        assert!(examples::sl2(q()).commutator_ideal().space().is_full());
    }

    #[test]
    fn center_examples() {
        assert!(LeibnizAlgebra::abelian(q(), 3).center().space().is_full());
        let c = examples::cyclic2(q()).center();
        assert_eq!(c.space().basis(), &[vec![q().zero(), q().one()]]);
        assert!(examples::sl2(q()).center().space().is_zero());
    }

    #[test]
    fn abelianization_examples() {
        let (ab, _) = LeibnizAlgebra::abelian(q(), 2).abelianization();
        assert_eq!(ab.dim(), 2);
        let (ab, _) = examples::cyclic2(q()).abelianization();
        assert_eq!(ab.dim(), 1);
        assert!(ab.is_abelian());
        let (ab, _) = examples::sl2(q()).abelianization();
        assert_eq!(ab.dim(), 0);
    }

    #[test]
    fn liezation_examples() {
        let sl2 = examples::sl2(q());
        let (lie, p) = sl2.liezation();
        assert_eq!(lie, sl2);
        assert_eq!(p.map(), &LinearMap::identity(q(), 3));
        let (lie, _) = examples::cyclic2(q()).liezation();
        assert_eq!(lie.dim(), 1);
        assert!(lie.is_abelian() && lie.is_lie());
        let (lie, _) = LeibnizAlgebra::abelian(q(), 2).liezation();
        assert_eq!(lie.dim(), 2);
    }

    #[test]
    fn liezation_over_f2_uses_polarized_squares() {
        // [e1,e2] = e3 = [e2,e1] over F2 is antisymmetric but not alternating
        // only if some [x,x] != 0; here [e1+e2, e1+e2] = 2 e3 = 0, so it is Lie.
        let f2 = FieldSpec::Prime(2);
        let g = LeibnizAlgebra::from_int_entries(
            f2,
            &["a", "b", "c"],
            &[(0, 1, &[(2, 1)]), (1, 0, &[(2, 1)])],
        )
        .unwrap();
        assert!(g.is_lie());
        assert_eq!(g.liezation().0.dim(), 3);
        // the cyclic algebra over F2 still loses its square
        assert_eq!(examples::cyclic2(f2).liezation().0.dim(), 1);
    }

    #[test]
    fn lie_and_perfect_flags() {
        let sl2 = examples::sl2(q());
        assert!(sl2.is_lie() && sl2.is_perfect());
        let c = examples::cyclic2(q());
        assert!(!c.is_lie() && !c.is_perfect());
        let a = LeibnizAlgebra::abelian(q(), 1);
        assert!(a.is_lie() && !a.is_perfect());
    }

    #[test]
    fn quotient_examples() {
        let h3 = examples::heisenberg(q());
        let (g0, _) = h3.quotient_algebra(&Ideal::zero(&h3)).unwrap();
        assert_eq!(g0, h3);
        let (gg, _) = h3.quotient_algebra(&Ideal::whole(&h3)).unwrap();
        assert_eq!(gg.dim(), 0);
        let (h, p) = h3.quotient_algebra(&h3.center()).unwrap();
        assert_eq!(h.dim(), 2);
        assert!(h.is_abelian());
        assert_eq!(p.domain_dim(), 3);
    }

    #[test]
    fn quotient_by_commutator_is_abelianization() {
        for g in [
            examples::cyclic2(q()),
            examples::heisenberg(q()),
            examples::solvable2(q()),
        ] {
            let (a, _) = g.abelianization();
            let (b, _) = g.quotient_algebra(&g.commutator_ideal()).unwrap();
            assert_eq!(a, b);
            assert!(a.is_abelian());
        }
    }

    #[test]
    fn closure_examples() {
        let h3 = examples::heisenberg(q());
        let c = h3.center();
        assert_eq!(h3.ideal_closure(c.space()).space(), c.space());
        let sl2 = examples::sl2(q());
        let e = Subspace::span(q(), 3, vec![sl2.unit(1)]);
        assert!(sl2.ideal_closure(&e).space().is_full());
        assert!(sl2.ideal_closure(&Subspace::zero(q(), 3)).space().is_zero());
    }

    #[test]
    fn ideals_are_verified_not_closed() {
        let sl2 = examples::sl2(q());
        let e = Subspace::span(q(), 3, vec![sl2.unit(1)]);
        assert!(matches!(Ideal::new(&sl2, e), Err(Error::NotAnIdeal(_))));
    }

    #[test]
    fn direct_sum_examples() {
        let k = LeibnizAlgebra::abelian(q(), 1);
        let s = k.direct_sum(&k).unwrap();
        assert_eq!(s.dim(), 2);
        assert!(s.is_abelian());
        let h3 = examples::heisenberg(q());
        let z = LeibnizAlgebra::abelian(q(), 0);
        assert_eq!(h3.direct_sum(&z).unwrap().table(), h3.table());
    }

    #[test]
    fn morphism_check() {
        let h3 = examples::heisenberg(q());
        assert!(AlgebraMorphism::new(&h3, &h3, LinearMap::identity(q(), 3)).is_ok());
        // swapping x and y negates [x,y] = z, so z must map to -z
        let bad = Matrix::from_i64(q(), &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        assert!(AlgebraMorphism::new(&h3, &h3, LinearMap::new(bad)).is_err());
        let good = Matrix::from_i64(q(), &[&[0, 1, 0], &[1, 0, 0], &[0, 0, -1]]);
        assert!(AlgebraMorphism::new(&h3, &h3, LinearMap::new(good)).is_ok());
    }

    #[test]
    fn permutation_preserves_invariants() {
        let g = examples::solvable2(q());
        let p = g.permuted(&[1, 0]);
        assert_eq!(p.commutator_space().dim(), g.commutator_space().dim());
        assert_eq!(p.center().dim(), g.center().dim());
        assert_eq!(p.permuted(&[1, 0]), g);
    }
}
