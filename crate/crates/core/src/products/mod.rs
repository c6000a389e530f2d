//! Non-abelian tensor and exterior products of crossed modules, `θ`, `δ`,
//! and the Lie tensor and exterior squares.

mod lie;
mod tensor;

pub use lie::{
    leibniz_to_lie_square_maps, lie_exterior_square, lie_tensor_square, LieComparisonMaps,
    LieSquare,
};
pub use tensor::{
    exterior_of, exterior_product, ideal_product, product_map, square_product, square_subspace,
    tensor_product, theta, NonAbelianProduct, ProductKind,
};

use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::exactla::{induced_map, LinearMap, Matrix};
use crate::homology::{bullet_square, BulletSquare};

/// `δ: g•g -> g∧g`, `x•y ↦ x∧y`.
#[derive(Clone, Debug)]
pub struct Delta {
    pub bullet: BulletSquare,
    pub exterior: NonAbelianProduct,
    pub map: LinearMap,
}

impl Delta {
    pub fn is_bijective(&self) -> bool {
        self.map.is_bijective()
    }
}

/// Builds `δ` and checks that it descends from `g ⊗ g`. Bijectivity is
/// reported through [`Delta::is_bijective`].
pub fn delta_map(g: &LeibnizAlgebra) -> Result<Delta> {
    let bullet = bullet_square(g)?;
    let exterior = square_product(g, ProductKind::Exterior)?;
    let n2 = g.dim() * g.dim();
    let field = g.field();
    let embed = Matrix::identity(field, n2).vstack(&Matrix::zeros(field, n2, n2));
    let map = induced_map(&LinearMap::new(embed), &bullet.quotient, &exterior.quotient)
        .map_err(|e| Error::WellDefinedness(format!("δ does not descend: {e}")))?;
    Ok(Delta {
        bullet,
        exterior,
        map,
    })
}

/// `δ`, failing unless it is an isomorphism.
pub fn delta_iso(g: &LeibnizAlgebra) -> Result<Delta> {
    let d = delta_map(g)?;
    if !d.is_bijective() {
        return Err(Error::WellDefinedness(format!(
            "δ is not bijective: dim g•g = {}, dim g∧g = {}, rank {}",
            d.bullet.dim(),
            d.exterior.dim(),
            d.map.rank()
        )));
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::examples;
    use crate::exactla::FieldSpec;

    #[test]
    fn delta_is_iso_on_small_algebras() {
        let q = FieldSpec::Rationals;
        for g in [
            LeibnizAlgebra::abelian(q, 1),
            LeibnizAlgebra::abelian(q, 2),
            examples::cyclic2(q),
            examples::solvable2(q),
            examples::heisenberg(q),
            examples::sl2(q),
        ] {
            let d = delta_iso(&g).unwrap();
            // θ ∘ δ = d'
            let th = theta(&d.exterior).unwrap();
            assert_eq!(th.compose(&d.map), d.bullet.d_prime);
        }
    }
}
