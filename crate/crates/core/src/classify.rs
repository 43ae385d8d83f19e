//! Supersolvability and homomorph classes.

use crate::algebra::LieAlgebra;
use crate::field::Field;
use crate::lattice::GroundField;
use crate::TriBool;

/// Supersolvability: a chain of ideals of L with one-dimensional factors.
///
/// The decision recurses greedily: find any one-dimensional ideal, quotient
/// by it, repeat. Greed is complete because quotients of supersolvable
/// algebras are supersolvable, so one chain exists iff every choice of
/// bottom line extends to one. Over finite fields the line search is an
/// enumeration; over the rationals it is the rational-eigenline search.
/// `Unknown` only ever reflects an infeasible line enumeration.
pub fn is_supersolvable<F: GroundField>(l: &LieAlgebra<F>) -> TriBool {
    if l.dim() == 0 {
        return TriBool::Yes;
    }
    match F::one_dim_ideal(l) {
        Err(_) => TriBool::Unknown,
        Ok(None) => TriBool::No,
        Ok(Some(line)) => {
            let q = l.quotient(&line).expect("a line ideal is an ideal");
            is_supersolvable(&q.quotient)
        }
    }
}

/// A class of Lie algebras closed under epimorphic images (and, for the
/// provided instances, under ideals). Membership is a pure predicate.
#[derive(Clone, Copy)]
pub struct HomomorphClass<F: Field> {
    pub name: &'static str,
    predicate: fn(&LieAlgebra<F>) -> bool,
}

impl<F: Field> HomomorphClass<F> {
    pub fn contains(&self, l: &LieAlgebra<F>) -> bool {
        (self.predicate)(l)
    }

    pub fn abelian() -> Self {
        HomomorphClass {
            name: "abelian",
            predicate: |l| l.classify_basic().abelian,
        }
    }

    pub fn nilpotent() -> Self {
        HomomorphClass {
            name: "nilpotent",
            predicate: |l| l.classify_basic().nilpotent,
        }
    }

    pub fn solvable() -> Self {
        HomomorphClass {
            name: "solvable",
            predicate: |l| l.classify_basic().solvable,
        }
    }

    pub fn trivial() -> Self {
        HomomorphClass {
            name: "trivial",
            predicate: |l| l.dim() == 0,
        }
    }
}

impl<F: Field> std::fmt::Debug for HomomorphClass<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "HomomorphClass({})", self.name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::field::{PrimeField, Rationals};

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn supersolvable_examples() {
        // nilp4 over GF(3): the chain <d> < <c,d> < <b,c,d> < L exists
        let nil = catalog::build("nilp4", gf(3)).unwrap();
        assert_eq!(is_supersolvable(&nil), TriBool::Yes);
        // sl2 over GF(5) is simple: no 1-dim ideal at the first step
        let sl2 = catalog::build("sl2", gf(5)).unwrap();
        assert_eq!(is_supersolvable(&sl2), TriBool::No);
        // ex41 over Q: the only line ideal is Fa, and L/Fa is simple
        let ex41 = catalog::build("ex41", Rationals).unwrap();
        assert_eq!(is_supersolvable(&ex41), TriBool::No);
        // abelian algebras are trivially supersolvable
        assert_eq!(is_supersolvable(&catalog::abelian(gf(2), 4)), TriBool::Yes);
        // supersolvable implies solvable
        let aff = catalog::build("affine2", Rationals).unwrap();
        assert_eq!(is_supersolvable(&aff), TriBool::Yes);
        assert!(aff.classify_basic().solvable);
    }

    #[test]
    fn homomorph_class_membership() {
        let h = catalog::build("heisenberg3", gf(2)).unwrap();
        assert!(HomomorphClass::nilpotent().contains(&h));
        assert!(!HomomorphClass::abelian().contains(&h));
        assert!(HomomorphClass::solvable().contains(&h));
        assert!(!HomomorphClass::trivial().contains(&h));
    }
}
