use crate::algebra::{Extension, Ideal};
use crate::error::Result;
use crate::exactla::{LinearMap, Matrix};

/// `[n-1, ..., 1, 0]`
pub fn reversal(n: usize) -> Vec<usize> {
    (0..n).rev().collect()
}

/// The same extension after reordering the basis of the total algebra; new
/// basis vector `i` is old basis vector `perm[i]`. A recorded splitting is
/// transported to the recomputed quotient.
pub fn permute_extension(ext: &Extension, perm: &[usize]) -> Result<Extension> {
    let g = &ext.total;
    let field = g.field();
    let n = g.dim();
    let g2 = g.permuted(perm);
    // old coordinates -> new coordinates
    let mut to_new = Matrix::zeros(field, n, n);
    for (i, &p) in perm.iter().enumerate() {
        to_new.set(i, p, field.one());
    }
    let to_new = LinearMap::new(to_new);
    let space = ext.ideal.space().map(&to_new);
    let ideal = Ideal::new(&g2, space)?;
    let out = Extension::from_ideal(&g2, ideal)?;
    match &ext.splitting {
        None => Ok(out),
        Some(sigma) => {
            // h' -> g' -> g -> h
            let to_old = to_new.inverse().expect("permutations are invertible");
            let lift = LinearMap::new(Matrix::from_columns(
                field,
                n,
                (0..out.quotient.dim())
                    .map(|i| {
                        let e = crate::exactla::unit_vector(field, out.quotient.dim(), i);
                        out.projection
                            .map()
                            .preimage(&e, &field.zero())
                            .expect("projections are onto")
                    })
                    .collect(),
            ));
            let h_new_to_old = ext.projection.map().compose(&to_old).compose(&lift);
            let sigma2 = to_new.compose(sigma.map()).compose(&h_new_to_old);
            out.with_splitting(sigma2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{examples, LeibnizAlgebra};
    use crate::exactla::{unit_vector, FieldSpec, Subspace};

    #[test]
    fn permuted_split_extension() {
        let q = FieldSpec::Rationals;
        let k = LeibnizAlgebra::abelian(q, 1);
        let g = examples::heisenberg(q).direct_sum(&k).unwrap();
        let a = Ideal::new(
            &g,
            Subspace::span(q, 4, (0..3).map(|i| unit_vector(q, 4, i))),
        )
        .unwrap();
        let ext = Extension::from_ideal(&g, a)
            .unwrap()
            .with_splitting(LinearMap::new(Matrix::from_i64(
                q,
                &[&[0], &[0], &[0], &[1]],
            )))
            .unwrap();
        let p = permute_extension(&ext, &reversal(4)).unwrap();
        assert_eq!(p.ideal.dim(), 3);
        assert!(p.splitting.is_some());
    }
}
