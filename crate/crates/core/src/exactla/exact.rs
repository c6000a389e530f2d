//! Exactness checks and the snake-lemma connecting homomorphism.

use super::matrix::{Matrix, Vector};
use super::scalar::Scalar;
use super::space::{image, kernel, quotient, LinearMap, QuotientSpace, Subspace};
use super::LinalgError;
use crate::report::{NodeReport, SequenceReport};

/// Checks `V0 -f0-> V1 -f1-> ... -> Vk` for exactness at every interior node.
/// Image and kernel are compared as subspaces.
pub fn check_exact(name: &str, maps: &[LinearMap]) -> Result<SequenceReport, LinalgError> {
    let labels: Vec<String> = (1..maps.len()).map(|i| format!("V{i}")).collect();
    check_exact_labeled(name, maps, &labels)
}

/// As [`check_exact`] with one label per interior node.
pub fn check_exact_labeled(
    name: &str,
    maps: &[LinearMap],
    labels: &[String],
) -> Result<SequenceReport, LinalgError> {
    assert_eq!(
        labels.len() + 1,
        maps.len().max(1),
        "one label per interior node"
    );
    for (i, w) in maps.windows(2).enumerate() {
        if w[0].codomain_dim() != w[1].domain_dim() {
            return Err(LinalgError::NotComposable { position: i });
        }
    }
    let mut report = SequenceReport::new(name);
    for (i, w) in maps.windows(2).enumerate() {
        let im = image(&w[0]);
        let ker = kernel(&w[1]);
        report.node(NodeReport {
            label: labels[i].clone(),
            dim: w[1].domain_dim(),
            image_in: im.dim(),
            kernel_out: ker.dim(),
            exact: im == ker,
        });
        report.condition(
            format!("{} composite is zero", labels[i]),
            w[1].compose(&w[0]).is_zero(),
        );
    }
    Ok(report)
}

/// A commutative ladder
///
/// ```text
///   A  --f-->  B  --g-->  C  -> 0
///   |alpha     |beta      |gamma
///   v          v          v
///   0 -> A' --f'--> B' --g'--> C'
/// ```
#[derive(Clone, Debug)]
pub struct Ladder {
    pub top_left: LinearMap,
    pub top_right: LinearMap,
    pub bottom_left: LinearMap,
    pub bottom_right: LinearMap,
    pub alpha: LinearMap,
    pub beta: LinearMap,
    pub gamma: LinearMap,
}

/// `∂: ker γ -> coker α`, with `ker γ` in its canonical coordinates.
#[derive(Clone, Debug)]
pub struct Connecting {
    pub kernel_gamma: Subspace,
    pub cokernel_alpha: QuotientSpace,
    pub map: LinearMap,
}

impl Ladder {
    fn validate(&self) -> Result<(), LinalgError> {
        let shapes_ok = self.top_left.codomain_dim() == self.top_right.domain_dim()
            && self.bottom_left.codomain_dim() == self.bottom_right.domain_dim()
            && self.alpha.domain_dim() == self.top_left.domain_dim()
            && self.alpha.codomain_dim() == self.bottom_left.domain_dim()
            && self.beta.domain_dim() == self.top_left.codomain_dim()
            && self.beta.codomain_dim() == self.bottom_left.codomain_dim()
            && self.gamma.domain_dim() == self.top_right.codomain_dim()
            && self.gamma.codomain_dim() == self.bottom_right.codomain_dim();
        if !shapes_ok {
            return Err(LinalgError::NotComposable { position: 0 });
        }
        if self.beta.compose(&self.top_left) != self.bottom_left.compose(&self.alpha) {
            return Err(LinalgError::NonCommutingSquare("left"));
        }
        if self.gamma.compose(&self.top_right) != self.bottom_right.compose(&self.beta) {
            return Err(LinalgError::NonCommutingSquare("right"));
        }
        if !self.top_right.is_surjective() {
            return Err(LinalgError::ExactnessPrereqFailed(
                "top row right map is not surjective",
            ));
        }
        if image(&self.top_left) != kernel(&self.top_right) {
            return Err(LinalgError::ExactnessPrereqFailed(
                "top row is not exact at the middle",
            ));
        }
        if !self.bottom_left.is_injective() {
            return Err(LinalgError::ExactnessPrereqFailed(
                "bottom row left map is not injective",
            ));
        }
        if image(&self.bottom_left) != kernel(&self.bottom_right) {
            return Err(LinalgError::ExactnessPrereqFailed(
                "bottom row is not exact at the middle",
            ));
        }
        Ok(())
    }

    fn connect_with(
        &self,
        z: &[Scalar],
        free: &Scalar,
        coker: &QuotientSpace,
    ) -> Result<Vector, LinalgError> {
        let zero = self.top_right.field().zero();
        let y = self
            .top_right
            .preimage(z, free)
            .ok_or(LinalgError::ExactnessPrereqFailed(
                "no preimage in the top row",
            ))?;
        let b = self.beta.apply(&y);
        let a = self
            .bottom_left
            .preimage(&b, &zero)
            .ok_or(LinalgError::ExactnessPrereqFailed(
                "lift leaves the bottom-left image",
            ))?;
        Ok(coker.project(&a))
    }
}

/// Computes the connecting map of the snake lemma. The result is computed
/// twice with different preimage choices and the two must agree.
pub fn snake_connecting(ladder: &Ladder) -> Result<Connecting, LinalgError> {
    ladder.validate()?;
    let field = ladder.gamma.field();
    let kernel_gamma = kernel(&ladder.gamma);
    let cokernel_alpha = quotient(ladder.alpha.codomain_dim(), image(&ladder.alpha))?;
    let mut cols = Vec::with_capacity(kernel_gamma.dim());
    for z in kernel_gamma.basis() {
        let first = ladder.connect_with(z, &field.zero(), &cokernel_alpha)?;
        let second = ladder.connect_with(z, &field.one(), &cokernel_alpha)?;
        if first != second {
            return Err(LinalgError::NotWellDefined(
                "connecting map depends on the choice of preimage".into(),
            ));
        }
        cols.push(first);
    }
    let map = LinearMap::new(Matrix::from_columns(field, cokernel_alpha.dim(), cols));
    Ok(Connecting {
        kernel_gamma,
        cokernel_alpha,
        map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::FieldSpec;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn m(rows: &[&[i64]]) -> LinearMap {
        LinearMap::new(Matrix::from_i64(q(), rows))
    }

    #[test]
    fn short_exact_identity() {
        let maps = [
            LinearMap::zero(q(), 0, 1),
            LinearMap::identity(q(), 1),
            LinearMap::zero(q(), 1, 0),
        ];
        let r = check_exact("id", &maps).unwrap();
        assert!(r.verdict);
        assert_eq!(r.nodes.len(), 2);
    }

    #[test]
    fn zero_maps_are_not_exact() {
        let maps = [LinearMap::zero(q(), 1, 1), LinearMap::zero(q(), 1, 1)];
        let r = check_exact("zero", &maps).unwrap();
        assert!(!r.verdict);
        assert_eq!(r.nodes[0].kernel_out, 1);
        assert_eq!(r.nodes[0].image_in, 0);
    }

    #[test]
    fn composability_is_checked() {
        let maps = [LinearMap::zero(q(), 1, 2), LinearMap::zero(q(), 1, 1)];
        assert!(matches!(
            check_exact("bad", &maps),
            Err(LinalgError::NotComposable { position: 0 })
        ));
    }

    fn split_row() -> (LinearMap, LinearMap) {
        (m(&[&[1], &[0]]), m(&[&[0, 1]]))
    }

    #[test]
    fn snake_with_zero_verticals() {
        let (f, g) = split_row();
        let ladder = Ladder {
            top_left: f.clone(),
            top_right: g.clone(),
            bottom_left: f,
            bottom_right: g,
            alpha: LinearMap::zero(q(), 1, 1),
            beta: LinearMap::zero(q(), 2, 2),
            gamma: LinearMap::zero(q(), 1, 1),
        };
        let c = snake_connecting(&ladder).unwrap();
        assert!(c.map.is_zero());
        assert_eq!(c.kernel_gamma.dim(), 1);
    }

    #[test]
    fn snake_with_identity_verticals() {
        let (f, g) = split_row();
        let ladder = Ladder {
            top_left: f.clone(),
            top_right: g.clone(),
            bottom_left: f,
            bottom_right: g,
            alpha: LinearMap::identity(q(), 1),
            beta: LinearMap::identity(q(), 2),
            gamma: LinearMap::identity(q(), 1),
        };
        let c = snake_connecting(&ladder).unwrap();
        assert_eq!(c.kernel_gamma.dim(), 0);
        assert_eq!(c.map.domain_dim(), 0);
    }

    #[test]
    fn snake_nontrivial_connecting() {
        // top: K -> K^2 -> K (inclusion, projection); bottom identical;
        // beta sends e1 to e0, so the cokernel of alpha = 0 receives ...
        // alpha = 0, gamma = 0, beta = [[0,1],[0,0]] commutes: beta f = 0 = f alpha,
        // g beta = 0 = gamma g. ∂(1) = class of e0 in coker 0 = K, so ∂ = 1.
        let (f, g) = split_row();
        let ladder = Ladder {
            top_left: f.clone(),
            top_right: g.clone(),
            bottom_left: f,
            bottom_right: g,
            alpha: LinearMap::zero(q(), 1, 1),
            beta: m(&[&[0, 1], &[0, 0]]),
            gamma: LinearMap::zero(q(), 1, 1),
        };
        let c = snake_connecting(&ladder).unwrap();
        assert_eq!(c.map, LinearMap::identity(q(), 1));
    }

    #[test]
    fn snake_rejects_non_commuting() {
        let (f, g) = split_row();
        let ladder = Ladder {
            top_left: f.clone(),
            top_right: g.clone(),
            bottom_left: f,
            bottom_right: g,
            alpha: LinearMap::zero(q(), 1, 1),
            beta: LinearMap::identity(q(), 2),
            gamma: LinearMap::zero(q(), 1, 1),
        };
        assert!(matches!(
            snake_connecting(&ladder),
            Err(LinalgError::NonCommutingSquare(_))
        ));
    }
}
