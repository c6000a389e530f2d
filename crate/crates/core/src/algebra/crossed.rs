use crate::error::{Error, Result};
use crate::exactla::{axpy, kernel, sub, zero_vector, LinearMap, Matrix, Scalar, Subspace, Vector};

use super::{AlgebraMorphism, Ideal, LeibnizAlgebra};

/// A Leibniz action of `actor` on `actee`, stored as bilinear tables:
/// `left[x * n + a] = ^x a` and `right[a * d + x] = a^x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Action {
    actor: LeibnizAlgebra,
    actee: LeibnizAlgebra,
    left: Vec<Vector>,
    right: Vec<Vector>,
}

impl Action {
    pub fn new(
        actor: &LeibnizAlgebra,
        actee: &LeibnizAlgebra,
        left: Vec<Vector>,
        right: Vec<Vector>,
    ) -> Result<Self> {
        let (d, n) = (actor.dim(), actee.dim());
        if left.len() != d * n || right.len() != d * n {
            return Err(Error::DimensionMismatch {
                expected: d * n,
                found: left.len().min(right.len()),
            });
        }
        if left.iter().chain(&right).any(|v| v.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: left
                    .iter()
                    .chain(&right)
                    .find(|v| v.len() != n)
                    .map_or(0, Vec::len),
            });
        }
        let action = Action {
            actor: actor.clone(),
            actee: actee.clone(),
            left,
            right,
        };
        action.check_axioms()?;
        Ok(action)
    }

    /// The action of `g` on itself by the bracket.
    pub fn adjoint(g: &LeibnizAlgebra) -> Self {
        let n = g.dim();
        let mut left = Vec::with_capacity(n * n);
        let mut right = Vec::with_capacity(n * n);
        for x in 0..n {
            for a in 0..n {
                left.push(g.basis_bracket(x, a).to_vec());
            }
        }
        for a in 0..n {
            for x in 0..n {
                right.push(g.basis_bracket(a, x).to_vec());
            }
        }
        Action {
            actor: g.clone(),
            actee: g.clone(),
            left,
            right,
        }
    }

    pub fn actor(&self) -> &LeibnizAlgebra {
        &self.actor
    }

    pub fn actee(&self) -> &LeibnizAlgebra {
        &self.actee
    }

    /// `^x a`
    pub fn left(&self, x: &[Scalar], a: &[Scalar]) -> Vector {
        let n = self.actee.dim();
        let mut out = zero_vector(self.actee.field(), n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, aj) in a.iter().enumerate() {
                if !aj.is_zero() {
                    axpy(&mut out, &(xi * aj), &self.left[i * n + j]);
                }
            }
        }
        out
    }

    /// `a^x`
    pub fn right(&self, a: &[Scalar], x: &[Scalar]) -> Vector {
        let (d, n) = (self.actor.dim(), self.actee.dim());
        let mut out = zero_vector(self.actee.field(), n);
        for (j, aj) in a.iter().enumerate() {
            if aj.is_zero() {
                continue;
            }
            for (i, xi) in x.iter().enumerate() {
                if !xi.is_zero() {
                    axpy(&mut out, &(aj * xi), &self.right[j * d + i]);
                }
            }
        }
        out
    }

    fn check_axioms(&self) -> Result<()> {
        let (m, n) = (&self.actor, &self.actee);
        let fail = |name: &str, i: usize, j: usize, k: usize| {
            Err(Error::ActionAxiom(format!(
                "{name} fails on basis instance ({}, {}, {})",
                i + 1,
                j + 1,
                k + 1
            )))
        };
        for i in 0..m.dim() {
            let x = m.unit(i);
            for j in 0..m.dim() {
                let y = m.unit(j);
                let xy = m.bracket(&x, &y);
                for k in 0..n.dim() {
                    let a = n.unit(k);
                    // ^[x,y]a = ^x(^y a) + (^x a)^y
                    let lhs = self.left(&xy, &a);
                    let rhs = crate::exactla::add(
                        &self.left(&x, &self.left(&y, &a)),
                        &self.right(&self.left(&x, &a), &y),
                    );
                    if lhs != rhs {
                        return fail("^[m,m']n = ^m(^m'n) + (^mn)^m'", i, j, k);
                    }
                    // a^[x,y] = (a^x)^y - (a^y)^x
                    let lhs = self.right(&a, &xy);
                    let rhs = sub(
                        &self.right(&self.right(&a, &x), &y),
                        &self.right(&self.right(&a, &y), &x),
                    );
                    if lhs != rhs {
                        return fail("n^[m,m'] = (n^m)^m' - (n^m')^m", i, j, k);
                    }
                    // ^x(^y a) = -^x(a^y)
                    let lhs = self.left(&x, &self.left(&y, &a));
                    let rhs = self.left(&x, &self.right(&a, &y));
                    if !crate::exactla::is_zero_vector(&crate::exactla::add(&lhs, &rhs)) {
                        return fail("^m(^m'n) = -^m(n^m')", i, j, k);
                    }
                }
            }
        }
        for i in 0..m.dim() {
            let x = m.unit(i);
            for j in 0..n.dim() {
                let a = n.unit(j);
                for k in 0..n.dim() {
                    let b = n.unit(k);
                    // ^x[a,b] = [^x a, b] - [^x b, a]
                    let lhs = self.left(&x, &n.bracket(&a, &b));
                    let rhs = sub(
                        &n.bracket(&self.left(&x, &a), &b),
                        &n.bracket(&self.left(&x, &b), &a),
                    );
                    if lhs != rhs {
                        return fail("^m[n,n'] = [^mn,n'] - [^mn',n]", i, j, k);
                    }
                    // [a,b]^x = [a^x, b] + [a, b^x]
                    let lhs = self.right(&n.bracket(&a, &b), &x);
                    let rhs = crate::exactla::add(
                        &n.bracket(&self.right(&a, &x), &b),
                        &n.bracket(&a, &self.right(&b, &x)),
                    );
                    if lhs != rhs {
                        return fail("[n,n']^m = [n^m,n'] + [n,n'^m]", i, j, k);
                    }
                    // [a, ^x b] = -[a, b^x]
                    let s = crate::exactla::add(
                        &n.bracket(&a, &self.left(&x, &b)),
                        &n.bracket(&a, &self.right(&b, &x)),
                    );
                    if !crate::exactla::is_zero_vector(&s) {
                        return fail("[n,^mn'] = -[n,n'^m]", i, j, k);
                    }
                }
            }
        }
        Ok(())
    }
}

/// A Leibniz crossed module `η: m -> g` with an action of `g` on `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedModule {
    source: LeibnizAlgebra,
    base: LeibnizAlgebra,
    eta: AlgebraMorphism,
    action: Action,
}

impl CrossedModule {
    pub fn new(
        source: &LeibnizAlgebra,
        base: &LeibnizAlgebra,
        eta: AlgebraMorphism,
        action: Action,
    ) -> Result<Self> {
        if source.field() != base.field() {
            return Err(Error::FieldMismatch);
        }
        if action.actor() != base || action.actee() != source {
            return Err(Error::CrossedModuleAxiom(
                "action must be of the base algebra on the source".into(),
            ));
        }
        let cm = CrossedModule {
            source: source.clone(),
            base: base.clone(),
            eta,
            action,
        };
        cm.check_axioms()?;
        Ok(cm)
    }

    /// `1_g: g -> g` with the adjoint action.
    pub fn identity(g: &LeibnizAlgebra) -> Self {
        CrossedModule {
            source: g.clone(),
            base: g.clone(),
            eta: AlgebraMorphism::identity(g),
            action: Action::adjoint(g),
        }
    }

    fn check_axioms(&self) -> Result<()> {
        let (m, g) = (&self.source, &self.base);
        for i in 0..g.dim() {
            let x = g.unit(i);
            for j in 0..m.dim() {
                let a = m.unit(j);
                let ea = self.eta.apply(&a);
                if self.eta.apply(&self.action.left(&x, &a)) != g.bracket(&x, &ea) {
                    return Err(Error::CrossedModuleAxiom(format!(
                        "eta(^x m) != [x, eta(m)] at ({}, {})",
                        g.labels()[i],
                        m.labels()[j]
                    )));
                }
                if self.eta.apply(&self.action.right(&a, &x)) != g.bracket(&ea, &x) {
                    return Err(Error::CrossedModuleAxiom(format!(
                        "eta(m^x) != [eta(m), x] at ({}, {})",
                        m.labels()[j],
                        g.labels()[i]
                    )));
                }
            }
        }
        for i in 0..m.dim() {
            let a = m.unit(i);
            for j in 0..m.dim() {
                let b = m.unit(j);
                let ab = m.bracket(&a, &b);
                if self.action.left(&self.eta.apply(&a), &b) != ab {
                    return Err(Error::CrossedModuleAxiom(format!(
                        "^eta(m1) m2 != [m1, m2] at ({}, {})",
                        m.labels()[i],
                        m.labels()[j]
                    )));
                }
                if self.action.right(&a, &self.eta.apply(&b)) != ab {
                    return Err(Error::CrossedModuleAxiom(format!(
                        "m1^eta(m2) != [m1, m2] at ({}, {})",
                        m.labels()[i],
                        m.labels()[j]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &LeibnizAlgebra {
        &self.source
    }

    pub fn base(&self) -> &LeibnizAlgebra {
        &self.base
    }

    pub fn eta(&self) -> &AlgebraMorphism {
        &self.eta
    }

    pub fn action(&self) -> &Action {
        &self.action
    }

    /// `^x m` for `x` in the base.
    pub fn act_left(&self, x: &[Scalar], m: &[Scalar]) -> Vector {
        self.action.left(x, m)
    }

    /// `m^x` for `x` in the base.
    pub fn act_right(&self, m: &[Scalar], x: &[Scalar]) -> Vector {
        self.action.right(m, x)
    }
}

/// `i: a -> g` for an ideal, acted on by the bracket. The source is the
/// ideal in the canonical coordinates of its subspace.
pub fn inclusion_crossed_module(g: &LeibnizAlgebra, ideal: &Ideal) -> Result<CrossedModule> {
    if ideal.parent() != g {
        return Err(Error::BaseMismatch);
    }
    let (a, incl) = ideal.as_algebra();
    let space = ideal.space();
    let coords = |v: Vector| {
        space
            .coordinates(&v)
            .expect("ideal is closed under the action")
    };
    let (n, d) = (a.dim(), g.dim());
    let mut left = Vec::with_capacity(n * d);
    let mut right = Vec::with_capacity(n * d);
    for x in 0..d {
        for b in space.basis() {
            left.push(coords(g.bracket(&g.unit(x), b)));
        }
    }
    for b in space.basis() {
        for x in 0..d {
            right.push(coords(g.bracket(b, &g.unit(x))));
        }
    }
    let eta = AlgebraMorphism::new(&a, g, incl)?;
    let action = Action::new(g, &a, left, right)?;
    CrossedModule::new(&a, g, eta, action)
}

/// The pullback `m ×_g n = {(m, n) : η(m) = μ(n)}` as a subalgebra of `m ⊕ n`.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub algebra: LeibnizAlgebra,
    /// Subspace of `m ⊕ n` whose basis gives the algebra's basis.
    pub space: Subspace,
    pub proj_m: LinearMap,
    pub proj_n: LinearMap,
}

pub fn pullback(cm: &CrossedModule, cn: &CrossedModule) -> Result<Pullback> {
    if cm.base() != cn.base() {
        return Err(Error::BaseMismatch);
    }
    let (dm, dn) = (cm.source().dim(), cn.source().dim());
    let field = cm.base().field();
    let diff = cm
        .eta()
        .map()
        .matrix()
        .hstack(&cn.eta().map().matrix().scaled(&-field.one()));
    let space = kernel(&LinearMap::new(diff));
    let sum = cm.source().direct_sum(cn.source())?;
    let (algebra, _) = sum.subalgebra(&space)?;
    let split = |range: std::ops::Range<usize>, rows: usize| {
        let cols = space
            .basis()
            .iter()
            .map(|v| v[range.clone()].to_vec())
            .collect();
        LinearMap::new(Matrix::from_columns(field, rows, cols))
    };
    Ok(Pullback {
        proj_m: split(0..dm, dm),
        proj_n: split(dm..dm + dn, dn),
        algebra,
        space,
    })
}

/// An extension `0 -> a -> g -> h -> 0`, optionally split by `σ: h -> g`.
#[derive(Clone, Debug)]
pub struct Extension {
    pub total: LeibnizAlgebra,
    pub ideal: Ideal,
    pub quotient: LeibnizAlgebra,
    pub projection: AlgebraMorphism,
    pub splitting: Option<AlgebraMorphism>,
}

impl Extension {
    pub fn from_ideal(g: &LeibnizAlgebra, ideal: Ideal) -> Result<Self> {
        if ideal.parent() != g {
            return Err(Error::BaseMismatch);
        }
        let (quotient, projection) = g.quotient_algebra(&ideal)?;
        Ok(Extension {
            total: g.clone(),
            ideal,
            quotient,
            projection,
            splitting: None,
        })
    }

    /// Records `σ`, checking that it is a morphism with `p ∘ σ = 1`.
    pub fn with_splitting(mut self, sigma: LinearMap) -> Result<Self> {
        let s = AlgebraMorphism::new(&self.quotient, &self.total, sigma)?;
        let id = LinearMap::identity(self.total.field(), self.quotient.dim());
        if self.projection.map().compose(s.map()) != id {
            return Err(Error::BadExtension(
                "projection ∘ σ is not the identity".into(),
            ));
        }
        self.splitting = Some(s);
        Ok(self)
    }

    pub fn is_central(&self) -> bool {
        self.ideal.is_central()
    }
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
    fn identity_and_inclusion_modules() {
        let h3 = examples::heisenberg(q());
        let id = CrossedModule::identity(&h3);
        assert!(id.check_axioms().is_ok());
        let whole = inclusion_crossed_module(&h3, &Ideal::whole(&h3)).unwrap();
        assert_eq!(whole.source(), &h3);
        let zero = inclusion_crossed_module(&h3, &Ideal::zero(&h3)).unwrap();
        assert_eq!(zero.source().dim(), 0);
        let center = inclusion_crossed_module(&h3, &h3.center()).unwrap();
        assert_eq!(center.source().dim(), 1);
        for g in [
            examples::cyclic2(q()),
            examples::solvable2(q()),
            examples::sl2(q()),
        ] {
            assert!(CrossedModule::identity(&g).check_axioms().is_ok());
            assert!(
                Action::new(&g, &g, Action::adjoint(&g).left, Action::adjoint(&g).right).is_ok()
            );
        }
    }

    #[test]
    fn bad_action_is_rejected() {
        // scalar multiplication by 1 on the left is not a Leibniz action of K on K
        // with the abelian bracket unless the right action cancels it
        let k = LeibnizAlgebra::abelian(q(), 1);
        let one = vec![vec![q().one()]];
        let zero = vec![vec![q().zero()]];
        let r = Action::new(&k, &k, one.clone(), zero);
        // ^x(^y a) = a but -^x(a^y) = 0
        assert!(matches!(r, Err(Error::ActionAxiom(_))));
        assert!(Action::new(&k, &k, one.clone(), vec![vec![-q().one()]]).is_ok());
    }

    #[test]
    fn zero_eta_on_nonabelian_fails_peiffer() {
        let c = examples::cyclic2(q());
        let eta = AlgebraMorphism::new(&c, &c, LinearMap::zero(q(), 2, 2)).unwrap();
        let r = CrossedModule::new(&c, &c, eta, Action::adjoint(&c));
        assert!(matches!(r, Err(Error::CrossedModuleAxiom(_))));
    }

    #[test]
    fn pullback_examples() {
        let h3 = examples::heisenberg(q());
        let id = CrossedModule::identity(&h3);
        let p = pullback(&id, &id).unwrap();
        assert_eq!(p.algebra.dim(), 3);
        assert_eq!(p.proj_m, p.proj_n);

        let k = LeibnizAlgebra::abelian(q(), 1);
        let zero_base = LeibnizAlgebra::abelian(q(), 0);
        let eta = AlgebraMorphism::new(&k, &zero_base, LinearMap::zero(q(), 1, 0)).unwrap();
        let action = Action::new(&zero_base, &k, vec![], vec![]).unwrap();
        let cm = CrossedModule::new(&k, &zero_base, eta, action).unwrap();
        let p = pullback(&cm, &cm).unwrap();
        assert_eq!(p.algebra.dim(), 2);

        let a = inclusion_crossed_module(&h3, &h3.center()).unwrap();
        let b = inclusion_crossed_module(&h3, &h3.commutator_ideal()).unwrap();
        let p = pullback(&a, &b).unwrap();
        assert_eq!(p.algebra.dim(), 1);
        let whole = inclusion_crossed_module(&h3, &Ideal::whole(&h3)).unwrap();
        assert_eq!(pullback(&a, &whole).unwrap().algebra.dim(), 1);
    }

    #[test]
    fn extensions() {
        let h3 = examples::heisenberg(q());
        let ext = Extension::from_ideal(&h3, h3.center()).unwrap();
        assert_eq!(ext.quotient.dim(), 2);
        assert!(ext.is_central());
        assert!(ext
            .clone()
            .with_splitting(LinearMap::new(Matrix::from_i64(
                q(),
                &[&[1, 0], &[0, 1], &[0, 0]]
            )))
            .is_err());

        let k = LeibnizAlgebra::abelian(q(), 2);
        let a = Ideal::new(&k, Subspace::span(q(), 2, vec![k.unit(0)])).unwrap();
        let ext = Extension::from_ideal(&k, a).unwrap();
        let sigma = LinearMap::new(Matrix::from_i64(q(), &[&[0], &[1]]));
        assert!(ext.with_splitting(sigma).unwrap().splitting.is_some());
    }
}
