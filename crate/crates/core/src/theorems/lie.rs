use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::exactla::{
    check_exact_labeled, induced_map, kernel, LinearMap, Matrix, Subquotient, Subspace,
};
use crate::gamma::GammaModule;
use crate::homology::{
    chevalley_eilenberg_homology, comparison_t, exterior_basis, leibniz_homology, Comparison,
    HomologyConfig,
};
use crate::products::{
    exterior_of, leibniz_to_lie_square_maps, lie_exterior_square, lie_tensor_square, product_map,
    square_product, LieComparisonMaps, LieSquare, ProductKind,
};
use crate::report::SequenceReport;

use super::second::SquareSide;

/// `t_g` computed on chains and on `θ`-kernels, with the identifications
/// `HL2 ≅ ker θ` and `H2 ≅ ker(g∧_Lie g -> g)` that relate them.
#[derive(Clone, Debug)]
pub struct TwoWayT {
    pub chain: Comparison,
    pub side: SquareSide,
    pub lie_tensor: LieSquare,
    pub lie_exterior: LieSquare,
    pub maps: LieComparisonMaps,
    /// `ker(g∧_Lie g -> g)` in `g∧_Lie g` coordinates.
    pub ker_lie: Subspace,
    /// `HL2 -> ker θ`
    pub iso_hl2: LinearMap,
    /// `H2 -> ker(g∧_Lie g -> g)`
    pub iso_h2: LinearMap,
    /// `ker θ -> ker(g∧_Lie g -> g)`
    pub t_theta: LinearMap,
}

pub fn t_two_ways(g: &LeibnizAlgebra, cfg: &HomologyConfig) -> Result<TwoWayT> {
    let chain = comparison_t(g, cfg)?;
    let side = SquareSide::new(g)?;
    let field = g.field();
    let n = g.dim();
    let lt = lie_tensor_square(g)?;
    let le = lie_exterior_square(g)?;
    let tensor = square_product(g, ProductKind::Tensor)?;
    let exterior = exterior_of(&tensor)?;
    let maps = leibniz_to_lie_square_maps(&tensor, &exterior, &lt, &le)?;
    let ker_lie = kernel(&le.commutator);

    // g⊗g -> g•g -> g∧g
    let to_wedge = side
        .delta
        .map
        .compose(&side.delta.bullet.quotient.projection_map());
    let iso_hl2 = chain
        .hl2
        .space
        .induced(&to_wedge, &Subquotient::of_subspace(side.ker_theta.clone()))?;

    // Λ²g -> g∧_Lie g, x∧y ↦ x⊗y
    let pairs = exterior_basis(n, 2);
    let cols = pairs
        .iter()
        .map(|p| {
            le.quotient
                .project(&crate::exactla::kron(&g.unit(p[0]), &g.unit(p[1])))
        })
        .collect();
    let from_lambda = LinearMap::new(Matrix::from_columns(field, le.dim(), cols));
    let iso_h2 = chain
        .h2
        .space
        .induced(&from_lambda, &Subquotient::of_subspace(ker_lie.clone()))?;

    let t_theta = maps
        .exterior_to_lie_exterior
        .restrict(&side.ker_theta, &ker_lie)
        .map_err(|_| Error::WellDefinedness("g∧g -> g∧_Lie g leaves the θ-kernels".into()))?;
    Ok(TwoWayT {
        chain,
        side,
        lie_tensor: lt,
        lie_exterior: le,
        maps,
        ker_lie,
        iso_hl2,
        iso_h2,
        t_theta,
    })
}

impl TwoWayT {
    /// `iso_h2 ∘ t_chain = t_θ ∘ iso_hl2`
    pub fn agree(&self) -> bool {
        self.iso_h2.compose(&self.chain.map) == self.t_theta.compose(&self.iso_hl2)
    }
}

/// `t_g` is onto, both constructions agree, and
/// `V = ker(g∧g -> g∧_Lie g)` lies in `ker t_g` and maps onto
/// `ker(g⋆_Lie g -> g∧_Lie g)`, which has the dimension of `Γ(g^ab)`.
pub fn lie_comparison_check(g: &LeibnizAlgebra, cfg: &HomologyConfig) -> Result<SequenceReport> {
    if !g.is_lie() {
        return Err(Error::NotLie);
    }
    let t = t_two_ways(g, cfg)?;
    let field = g.field();
    let mut r = SequenceReport::new("lie-comparison");
    r.iso("HL2 -> ker θ", t.iso_hl2.is_bijective());
    r.iso("H2 -> ker(g∧_Lie g -> g)", t.iso_h2.is_bijective());
    r.condition("t surjective", t.chain.is_surjective());
    r.condition("chain-level and θ-kernel t agree", t.agree());

    let v = kernel(&t.maps.exterior_to_lie_exterior);
    r.condition("V ⊆ ker θ", t.side.ker_theta.contains_subspace(&v));
    // V in HL2 coordinates, then through the chain-level t
    let v_in_hl2 = match (
        t.iso_hl2.inverse(),
        v.basis()
            .iter()
            .map(|x| t.side.ker_theta.coordinates(x))
            .collect::<Option<Vec<_>>>(),
    ) {
        (Some(inv), Some(coords)) => Some(coords.iter().map(|c| inv.apply(c)).collect::<Vec<_>>()),
        _ => None,
    };
    let in_ker_t = v_in_hl2.as_ref().is_some_and(|vs| {
        vs.iter()
            .all(|x| crate::exactla::is_zero_vector(&t.chain.map.apply(x)))
    });
    r.condition("V ⊆ ker t", in_ker_t);

    let lt_to_le = induced_map(
        &LinearMap::identity(field, g.dim() * g.dim()),
        &t.lie_tensor.quotient,
        &t.lie_exterior.quotient,
    )?;
    let w = kernel(&lt_to_le);
    let epi = t.maps.exterior_to_lie_tensor.restrict(&v, &w);
    r.condition("V -> ker(g⋆_Lie g -> g∧_Lie g) defined", epi.is_ok());
    r.condition(
        "V -> ker(g⋆_Lie g -> g∧_Lie g) onto",
        epi.as_ref().is_ok_and(|m| m.is_surjective()),
    );
    let (gab, _) = g.abelianization();
    let gamma = GammaModule::new(field, gab.dim());
    r.condition(
        "dim ker(g⋆_Lie g -> g∧_Lie g) = dim Γ(g^ab)",
        w.dim() == gamma.dim(),
    );
    let ker_t = kernel(&t.chain.map).dim();
    r.condition("dim ker t ≥ dim Γ(g^ab)", ker_t >= gamma.dim());
    r.dim("HL2", t.chain.hl2.dim())
        .dim("H2", t.chain.h2.dim())
        .dim("ker t", ker_t)
        .dim("V", v.dim())
        .dim("Γ(g^ab)", gamma.dim());
    Ok(r)
}

/// For perfect Lie `g`: `0 -> HL2(g⋆_Lie g) -> HL2(g) -> H2(g) -> 0`, with
/// `HL2(g⋆_Lie g)` as `ker θ` of its own exterior square, mapped by the
/// commutator `g⋆_Lie g -> g`.
pub fn perfect_lie_sequence(g: &LeibnizAlgebra, cfg: &HomologyConfig) -> Result<SequenceReport> {
    if !g.is_lie() {
        return Err(Error::NotLie);
    }
    if !g.is_perfect() {
        return Err(Error::NotPerfect);
    }
    let field = g.field();
    let t = t_two_ways(g, cfg)?;
    let lt = &t.lie_tensor;
    let l = lt.as_algebra()?;
    let l_side = SquareSide::new(&l)?;
    let c = &lt.commutator;
    let cc = product_map(l_side.exterior(), t.side.exterior(), c, c)?;
    let f1 = cc
        .restrict(&l_side.ker_theta, &t.side.ker_theta)
        .map_err(|_| Error::WellDefinedness("c∧c leaves ker θ".into()))?;
    let maps = [
        LinearMap::zero(field, 0, f1.domain_dim()),
        f1,
        t.t_theta.clone(),
        LinearMap::zero(field, t.t_theta.codomain_dim(), 0),
    ];
    let mut r = check_exact_labeled(
        "perfect-lie",
        &maps,
        &["HL2(g⋆_Lie g)".into(), "HL2(g)".into(), "H2(g)".into()],
    )?;
    let hl2_l = leibniz_homology(&l, 2, cfg)?;
    let h2 = chevalley_eilenberg_homology(g, 2, cfg)?;
    r.condition(
        "HL2(g⋆_Lie g) matches the Loday complex",
        hl2_l.dim() == l_side.ker_theta.dim(),
    );
    r.condition(
        "H2(g) matches the Chevalley–Eilenberg complex",
        h2.dim() == t.ker_lie.dim(),
    );
    r.condition("chain-level and θ-kernel t agree", t.agree());
    r.dim("g⋆_Lie g", l.dim())
        .dim("HL2(g⋆_Lie g)", hl2_l.dim())
        .dim("HL2(g)", t.chain.hl2.dim())
        .dim("H2(g)", h2.dim());
    Ok(r)
}
