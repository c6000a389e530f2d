//! Small named algebras used throughout the tests and the built-in catalog.

use super::LeibnizAlgebra;
use crate::exactla::FieldSpec;

/// `[e1, e1] = e2`
pub fn cyclic2(field: FieldSpec) -> LeibnizAlgebra {
    LeibnizAlgebra::from_int_entries(field, &["e1", "e2"], &[(0, 0, &[(1, 1)])])
        .expect("cyclic algebra is Leibniz")
}

/// `[e1, e1] = e2`, `[e2, e1] = e2`
pub fn solvable2(field: FieldSpec) -> LeibnizAlgebra {
    LeibnizAlgebra::from_int_entries(
        field,
        &["e1", "e2"],
        &[(0, 0, &[(1, 1)]), (1, 0, &[(1, 1)])],
    )
    .expect("solvable algebra is Leibniz")
}

/// Heisenberg algebra `[x, y] = z = -[y, x]`.
pub fn heisenberg(field: FieldSpec) -> LeibnizAlgebra {
    LeibnizAlgebra::from_int_entries(
        field,
        &["x", "y", "z"],
        &[(0, 1, &[(2, 1)]), (1, 0, &[(2, -1)])],
    )
    .expect("h3 is Lie")
}

/// `sl2` in the basis `h, e, f`.
pub fn sl2(field: FieldSpec) -> LeibnizAlgebra {
    LeibnizAlgebra::from_int_entries(
        field,
        &["h", "e", "f"],
        &[
            (0, 1, &[(1, 2)]),
            (1, 0, &[(1, -2)]),
            (0, 2, &[(2, -2)]),
            (2, 0, &[(2, 2)]),
            (1, 2, &[(0, 1)]),
            (2, 1, &[(0, -1)]),
        ],
    )
    .expect("sl2 is Lie")
}

pub fn sl2_sum(field: FieldSpec) -> LeibnizAlgebra {
    let s = sl2(field);
    s.direct_sum(&s)
        .expect("same field")
        .with_labels(["h", "e", "f", "h'", "e'", "f'"].map(String::from).to_vec())
}
