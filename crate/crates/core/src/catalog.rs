//! Built-in algebra catalog.
//!
//! Small named algebras used throughout the tests and the verification
//! suite. Every entry is validated at construction; the documented facts
//! below are the expected behavior the suite reproduces.

use thiserror::Error;

use crate::algebra::LieAlgebra;
use crate::field::{Field, FieldSpec, Rationals};
use crate::subspace::Subspace;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown catalog name {0:?}")]
    UnknownName(String),
    #[error("catalog entry {name:?} needs {needs}, got {got}")]
    FieldMismatch {
        name: String,
        needs: &'static str,
        got: FieldSpec,
    },
}

/// Entry names accepted by [`build`].
pub const NAMES: &[&str] = &[
    "abelian1",
    "abelian2",
    "abelian3",
    "abelian4",
    "heisenberg3",
    "affine2",
    "nilp4",
    "sl2",
    "so3q",
    "ex31",
    "ex41",
    "affine2_sl2",
];

/// One-line description per entry, for listings.
pub fn describe(name: &str) -> Option<&'static str> {
    Some(match name {
        "abelian1" | "abelian2" | "abelian3" | "abelian4" => {
            "abelian algebra (all brackets zero); any field"
        }
        "heisenberg3" => "[x,y] = z; nilpotent, center <z>; any field",
        "affine2" => "[x,y] = y; solvable, not nilpotent; any field",
        "nilp4" => "[a,b] = c, [b,c] = d; nilpotent of class 3; any field",
        "sl2" => "[h,e] = 2e, [h,f] = -2f, [e,f] = h; simple; characteristic != 2",
        "so3q" => "cyclic [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2; non-split simple; Q only",
        "ex31" => "so3q (+) so3q; semisimple with ideals {0, S, S', L}; Q only",
        "ex41" => "Qa (+) so3q with a central; radical Qa, not supersolvable; Q only",
        "affine2_sl2" => "affine2 (+) sl2; radical is the affine2 component; characteristic != 2",
        _ => return None,
    })
}

/// Abelian algebra of the given dimension; every subspace is an ideal.
pub fn abelian<F: Field>(field: F, n: usize) -> LieAlgebra<F> {
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    LieAlgebra::new(field, n, names, Vec::new()).expect("empty table is always valid")
}

fn require_char_not_2<F: Field>(name: &str, field: &F) -> Result<(), CatalogError> {
    if field.spec().characteristic() == 2 {
        return Err(CatalogError::FieldMismatch {
            name: name.to_string(),
            needs: "characteristic != 2",
            got: field.spec(),
        });
    }
    Ok(())
}

fn require_rationals<F: Field>(name: &str, field: &F) -> Result<(), CatalogError> {
    if field.spec() != FieldSpec::Rationals {
        return Err(CatalogError::FieldMismatch {
            name: name.to_string(),
            needs: "the rationals",
            got: field.spec(),
        });
    }
    Ok(())
}

/// Build a catalog entry over the given field.
///
/// The `so3q` table uses the all-positive cyclic constants, whose Killing
/// form is -2 times the identity (definite), so the algebra is non-split
/// over Q. Note the variant with `[e2,e3] = -e1` instead is split: there
/// `ad(e3)` fixes `e1 + e2`, giving a rational eigenline inside the
/// 2-dimensional subalgebra `<e3, e1 + e2>`, and the algebra is isomorphic
/// to sl2.
pub fn build<F: Field>(name: &str, field: F) -> Result<LieAlgebra<F>, CatalogError> {
    let l = match name {
        "abelian1" => abelian(field, 1),
        "abelian2" => abelian(field, 2),
        "abelian3" => abelian(field, 3),
        "abelian4" => abelian(field, 4),
        "heisenberg3" => {
            LieAlgebra::from_i64_table(field, &["x", "y", "z"], &[(0, 1, &[(2, 1)])])
                .expect("fixed table is valid")
        }
        "affine2" => LieAlgebra::from_i64_table(field, &["x", "y"], &[(0, 1, &[(1, 1)])])
            .expect("fixed table is valid"),
        "nilp4" => LieAlgebra::from_i64_table(
            field,
            &["a", "b", "c", "d"],
            &[(0, 1, &[(2, 1)]), (1, 2, &[(3, 1)])],
        )
        .expect("fixed table is valid"),
        "sl2" => {
            require_char_not_2(name, &field)?;
            LieAlgebra::from_i64_table(
                field,
                &["h", "e", "f"],
                &[(0, 1, &[(1, 2)]), (0, 2, &[(2, -2)]), (1, 2, &[(0, 1)])],
            )
            .expect("fixed table is valid")
        }
        "so3q" => {
            require_rationals(name, &field)?;
            LieAlgebra::from_i64_table(
                field,
                &["e1", "e2", "e3"],
                &[(0, 1, &[(2, 1)]), (1, 2, &[(0, 1)]), (0, 2, &[(1, -1)])],
            )
            .expect("fixed table is valid")
        }
        "ex31" => {
            require_rationals(name, &field)?;
            LieAlgebra::from_i64_table(
                field,
                &["e1", "e2", "e3", "f1", "f2", "f3"],
                &[
                    (0, 1, &[(2, 1)]),
                    (1, 2, &[(0, 1)]),
                    (0, 2, &[(1, -1)]),
                    (3, 4, &[(5, 1)]),
                    (4, 5, &[(3, 1)]),
                    (3, 5, &[(4, -1)]),
                ],
            )
            .expect("fixed table is valid")
        }
        "ex41" => {
            require_rationals(name, &field)?;
            LieAlgebra::from_i64_table(
                field,
                &["a", "e1", "e2", "e3"],
                &[(1, 2, &[(3, 1)]), (2, 3, &[(1, 1)]), (1, 3, &[(2, -1)])],
            )
            .expect("fixed table is valid")
        }
        "affine2_sl2" => {
            require_char_not_2(name, &field)?;
            let aff = build("affine2", field.clone())?;
            let sl2 = build("sl2", field)?;
            aff.direct_sum(&sl2).expect("same field")
        }
        other => return Err(CatalogError::UnknownName(other.to_string())),
    };
    Ok(l)
}

/// The diagonal subalgebra `{(s, s)}` of `ex31`, spanned by
/// `e_i + f_i`.
pub fn ex31_diagonal() -> Subspace<Rationals> {
    let q = Rationals;
    let rows: Vec<Vec<_>> = (0..3)
        .map(|i| {
            let mut v = vec![q.from_i64(0); 6];
            v[i] = q.from_i64(1);
            v[i + 3] = q.from_i64(1);
            v
        })
        .collect();
    Subspace::from_rows(&q, 6, &rows).expect("rows match ambient")
}
